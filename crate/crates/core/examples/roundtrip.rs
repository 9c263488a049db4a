//! Encrypts an image to a cipher container, reads it back and decrypts it.
//!
//! ```text
//! cargo run --release --example roundtrip -- [image] [hex-key]
//! ```

use defc::{codec, decrypt_image, encrypt_image, SecretKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/astronaut.png").into());
    let key: SecretKey = args
        .next()
        .as_deref()
        .unwrap_or("1589853085422475")
        .parse()?;

    let img = codec::read_image(&path)?;
    let cipher = encrypt_image(&img, &key, 1)?;

    let dir = std::env::temp_dir();
    let file = dir.join(format!("defc-roundtrip-{}.defc", std::process::id()));
    codec::write_cipher(&cipher, &file)?;
    let size = std::fs::metadata(&file)?.len();
    let restored = decrypt_image(&codec::read_cipher(&file)?, &key, 1)?;
    std::fs::remove_file(&file)?;

    println!(
        "{}x{}x{} image, {size}-byte cipher, lossless: {}",
        img.width(),
        img.height(),
        img.channel_count(),
        restored == img
    );
    match decrypt_image(&cipher, &key.flip_bit(0), 1) {
        Err(e) => println!("one-bit-off key: {e}"),
        Ok(_) => println!("one-bit-off key: produced an image"),
    }
    Ok(())
}
