//! Adjacent-pixel correlation of an image and of its rendered cipher.
//!
//! ```text
//! cargo run --release --example correlation -- [image] [seed]
//! ```

use defc::analysis::{correlation_report, Direction, DEFAULT_SAMPLES};
use defc::{codec, encrypt_image, render_cipher, SecretKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/camera.png").into());
    let seed: u64 = args.next().as_deref().unwrap_or("0").parse()?;
    let key: SecretKey = "1589853085422475".parse()?;

    let img = codec::read_image(&path)?;
    let render = render_cipher(&encrypt_image(&img, &key, 1)?);
    println!("{:<12}{:>10}{:>10}", "direction", "plain", "cipher");
    for ch in 0..img.channel_count() {
        let plain = correlation_report(img.channel(ch), DEFAULT_SAMPLES, seed)?;
        let cipher = correlation_report(render.channel(ch), DEFAULT_SAMPLES, seed)?;
        for d in Direction::ALL {
            println!(
                "{:<12}{:>10.4}{:>10.4}",
                d.name(),
                plain.get(d),
                cipher.get(d)
            );
        }
    }
    Ok(())
}
