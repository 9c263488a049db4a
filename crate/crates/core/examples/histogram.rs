//! Compares the gray-level histogram of an image with that of its rendered
//! cipher and prints the chi-square statistic.
//!
//! ```text
//! cargo run --release --example histogram -- [image]
//! ```

use defc::analysis::{chi_square, chi_square_critical, histogram};
use defc::{codec, encrypt_image, render_cipher, SecretKey};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/moon.png").into());
    let key: SecretKey = "1589853085422475".parse()?;
    let img = codec::read_image(&path)?;
    let render = render_cipher(&encrypt_image(&img, &key, 1)?);

    let plain = histogram(img.channel(0))?;
    let cipher = histogram(render.channel(0))?;
    let busiest =
        |h: &defc::analysis::Histogram| (0..256).max_by_key(|&i| h.bins()[i]).unwrap_or(0);
    println!("plain  peak at level {}", busiest(&plain));
    println!("cipher peak at level {}", busiest(&cipher));
    println!(
        "chi-square {:.1} (0.999 critical value for 255 d.o.f. is {:.2})",
        chi_square(&plain, &cipher),
        chi_square_critical(0.999, 255)
    );
    Ok(())
}
