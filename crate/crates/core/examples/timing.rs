//! Median encrypt and decrypt times for square crops of growing size.
//!
//! ```text
//! cargo run --release --example timing
//! ```

use defc::analysis::timing_report;
use defc::{codec, PlainImage, SecretKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let key: SecretKey = "1589853085422475".parse()?;
    let full = codec::read_image(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/data/camera.png"
    ))?;
    let src = full.channel(0);
    for size in [64, 128, 256, 512] {
        let px: Vec<u8> = (0..size * size)
            .map(|i| src.get(i / size, i % size) as u8)
            .collect();
        let img = PlainImage::from_gray(size, size, &px)?;
        let t = timing_report(&img, &key, 1)?;
        println!(
            "{size:>4}x{size:<4} encrypt {:>8.4} s  decrypt {:>8.4} s",
            t.encrypt_seconds, t.decrypt_seconds
        );
    }
    Ok(())
}
