//! Writes the log-magnitude rendering of an encrypted image as a PNG.
//!
//! ```text
//! cargo run --release --example render -- [image] [out.png]
//! ```

use defc::{codec, encrypt_image, render_cipher, SecretKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/clock.png").into());
    let out = args.next().unwrap_or_else(|| "cipher-render.png".into());
    let key: SecretKey = "1589853085422475".parse()?;

    let cipher = encrypt_image(&codec::read_image(&path)?, &key, 1)?;
    codec::write_image(&render_cipher(&cipher), &out)?;
    println!("wrote {out}");
    Ok(())
}
