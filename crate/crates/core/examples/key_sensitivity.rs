//! Encrypts an image under a key and two one-bit variants of it, then
//! reports how the rendered ciphers correlate.
//!
//! ```text
//! cargo run --release --example key_sensitivity -- [image] [hex-key]
//! ```

use defc::analysis::{key_sensitivity_suite, WrongKeyOutcome};
use defc::{codec, SecretKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/camera.png").into());
    let key: SecretKey = args
        .next()
        .as_deref()
        .unwrap_or("1589853085422475")
        .parse()?;

    let img = codec::read_image(&path)?;
    let report = key_sensitivity_suite(&img, &key, 1)?;
    println!("image        {path}");
    println!("key / msb    {:+.4}", report.a_b);
    println!("msb / lsb    {:+.4}", report.b_c);
    println!("lsb / key    {:+.4}", report.c_a);
    match report.wrong_key {
        WrongKeyOutcome::IntegrityFailure(msg) => println!("wrong key    rejected ({msg})"),
        WrongKeyOutcome::Decrypted { correlation } => {
            println!("wrong key    decrypted, r = {correlation:+.4} against the plaintext")
        }
    }
    Ok(())
}
