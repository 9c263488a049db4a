//! Statistical security analysis: histograms, adjacent-pixel correlation,
//! inter-image correlation for key sensitivity, and timing.
//!
//! Statistics on ciphers are computed over their 8-bit renderings
//! ([`render_cipher`]).

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use crate::error::{Error, Result};
use crate::key::SecretKey;
use crate::pipeline::{decrypt_image, encrypt_image, render_cipher, PlainImage};
use crate::transform::PixelMatrix;

/// Number of adjacent pairs sampled per direction by default.
pub const DEFAULT_SAMPLES: usize = 2000;

/// Per-level pixel counts of one 8-bit channel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    bins: [u64; 256],
}

impl Histogram {
    pub fn bins(&self) -> &[u64; 256] {
        &self.bins
    }

    pub fn total(&self) -> u64 {
        self.bins.iter().sum()
    }

    /// The 256 counts, comma separated.
    pub fn to_csv(&self) -> String {
        self.bins
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    }
}

pub fn histogram(img: &PixelMatrix) -> Result<Histogram> {
    let mut bins = [0u64; 256];
    for &v in img.as_slice() {
        if !(0.0..=255.0).contains(&v) || v.fract() != 0.0 {
            return Err(Error::PixelRange(v));
        }
        bins[v as usize] += 1;
    }
    Ok(Histogram { bins })
}

/// Two-sample chi-square statistic, `Σ (a_i - b_i)^2 / (a_i + b_i)` over
/// the levels where either histogram is nonzero.
pub fn chi_square(a: &Histogram, b: &Histogram) -> f64 {
    a.bins
        .iter()
        .zip(b.bins.iter())
        .filter(|(&x, &y)| x + y > 0)
        .map(|(&x, &y)| {
            let d = x as f64 - y as f64;
            d * d / (x + y) as f64
        })
        .sum()
}

/// Quantile `p` of the chi-square distribution with `df` degrees of freedom.
pub fn chi_square_critical(p: f64, df: u32) -> f64 {
    ChiSquared::new(f64::from(df))
        .expect("positive degrees of freedom")
        .inverse_cdf(p)
}

/// Pearson correlation with 1/N moments:
/// `cov(x, y) / (sqrt(D(x)) sqrt(D(y)))`.
pub fn correlation_coefficient(x: &[f64], y: &[f64]) -> Result<f64> {
    if x.len() != y.len() {
        return Err(Error::InvalidArgument(format!(
            "sequences differ in length ({} vs {})",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 2 {
        return Err(Error::InvalidArgument(
            "correlation needs at least two pairs".into(),
        ));
    }
    let n = x.len() as f64;
    let ex = x.iter().sum::<f64>() / n;
    let ey = y.iter().sum::<f64>() / n;
    let (mut dx, mut dy, mut cov) = (0.0, 0.0, 0.0);
    for (&a, &b) in x.iter().zip(y) {
        let (da, db) = (a - ex, b - ey);
        dx += da * da;
        dy += db * db;
        cov += da * db;
    }
    dx /= n;
    dy /= n;
    cov /= n;
    if dx == 0.0 || dy == 0.0 {
        return Err(Error::UndefinedCorrelation);
    }
    Ok((cov / (dx.sqrt() * dy.sqrt())).clamp(-1.0, 1.0))
}

/// Which neighbor a sampled pixel is paired with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// The pixel to the right.
    Horizontal,
    /// The pixel below.
    Vertical,
    /// The pixel below and to the right.
    Diagonal,
}

impl Direction {
    pub const ALL: [Direction; 3] = [
        Direction::Horizontal,
        Direction::Vertical,
        Direction::Diagonal,
    ];

    /// `(row, col)` offset of the neighbor.
    pub fn offset(self) -> (usize, usize) {
        match self {
            Direction::Horizontal => (0, 1),
            Direction::Vertical => (1, 0),
            Direction::Diagonal => (1, 1),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Horizontal => "horizontal",
            Direction::Vertical => "vertical",
            Direction::Diagonal => "diagonal",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Correlation of `samples` randomly chosen pixels (uniform, with
/// replacement, seeded) with their neighbor in `direction`.
pub fn adjacent_pixel_correlation(
    img: &PixelMatrix,
    direction: Direction,
    samples: usize,
    seed: u64,
) -> Result<f64> {
    let (dr, dc) = direction.offset();
    let (rows, cols) = img.dims();
    if rows <= dr || cols <= dc {
        return Err(Error::InvalidDimension(format!(
            "{rows}x{cols} image has no {direction} neighbors"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut xs = Vec::with_capacity(samples);
    let mut ys = Vec::with_capacity(samples);
    for _ in 0..samples {
        let r = rng.random_range(0..rows - dr);
        let c = rng.random_range(0..cols - dc);
        xs.push(img.get(r, c));
        ys.push(img.get(r + dr, c + dc));
    }
    correlation_coefficient(&xs, &ys)
}

/// Adjacent-pixel correlation in all three directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CorrelationReport {
    pub horizontal: f64,
    pub vertical: f64,
    pub diagonal: f64,
    pub sample_count: usize,
    pub rng_seed: u64,
}

impl CorrelationReport {
    pub fn get(&self, direction: Direction) -> f64 {
        match direction {
            Direction::Horizontal => self.horizontal,
            Direction::Vertical => self.vertical,
            Direction::Diagonal => self.diagonal,
        }
    }
}

pub fn correlation_report(
    img: &PixelMatrix,
    samples: usize,
    seed: u64,
) -> Result<CorrelationReport> {
    Ok(CorrelationReport {
        horizontal: adjacent_pixel_correlation(img, Direction::Horizontal, samples, seed)?,
        vertical: adjacent_pixel_correlation(img, Direction::Vertical, samples, seed)?,
        diagonal: adjacent_pixel_correlation(img, Direction::Diagonal, samples, seed)?,
        sample_count: samples,
        rng_seed: seed,
    })
}

/// Correlation over every pair of corresponding pixels.
pub fn inter_image_correlation(a: &PixelMatrix, b: &PixelMatrix) -> Result<f64> {
    if a.dims() != b.dims() {
        return Err(Error::DimensionMismatch {
            expected: a.dims(),
            found: b.dims(),
        });
    }
    correlation_coefficient(a.as_slice(), b.as_slice())
}

/// [`inter_image_correlation`] over all channels of two images.
pub fn image_correlation(a: &PlainImage, b: &PlainImage) -> Result<f64> {
    if (a.width(), a.height(), a.channel_count()) != (b.width(), b.height(), b.channel_count()) {
        return Err(Error::DimensionMismatch {
            expected: (a.height(), a.width() * a.channel_count()),
            found: (b.height(), b.width() * b.channel_count()),
        });
    }
    let flat = |img: &PlainImage| -> Vec<f64> {
        img.channels()
            .iter()
            .flat_map(|c| c.as_slice().iter().copied())
            .collect()
    };
    correlation_coefficient(&flat(a), &flat(b))
}

/// What happened when decrypting with a key one bit away from the right one.
#[derive(Debug, Clone, PartialEq)]
pub enum WrongKeyOutcome {
    /// Decryption refused the result.
    IntegrityFailure(String),
    /// Decryption produced an image; `correlation` is against the plaintext.
    Decrypted { correlation: f64 },
}

/// Pairwise correlations of the renders of ciphers `A` (key), `B` (most
/// significant bit flipped) and `C` (least significant bit flipped), along
/// with the result of decrypting `A` under the `C` key.
#[derive(Debug, Clone, PartialEq)]
pub struct KeySensitivityReport {
    pub a_b: f64,
    pub b_c: f64,
    pub c_a: f64,
    pub wrong_key: WrongKeyOutcome,
}

impl KeySensitivityReport {
    pub fn max_abs_pairwise(&self) -> f64 {
        self.a_b.abs().max(self.b_c.abs()).max(self.c_a.abs())
    }
}

pub fn key_sensitivity_suite(
    img: &PlainImage,
    key: &SecretKey,
    repeat_factor: u32,
) -> Result<KeySensitivityReport> {
    let key_b = key.flip_bit(SecretKey::BITS - 1);
    let key_c = key.flip_bit(0);
    let cipher_a = encrypt_image(img, key, repeat_factor)?;
    let render_a = render_cipher(&cipher_a);
    let render_b = render_cipher(&encrypt_image(img, &key_b, repeat_factor)?);
    let render_c = render_cipher(&encrypt_image(img, &key_c, repeat_factor)?);

    let wrong_key = match decrypt_image(&cipher_a, &key_c, repeat_factor) {
        Ok(plain) => WrongKeyOutcome::Decrypted {
            correlation: image_correlation(&plain, img).unwrap_or(0.0),
        },
        Err(Error::Integrity(msg)) => WrongKeyOutcome::IntegrityFailure(msg),
        Err(e) => return Err(e),
    };

    Ok(KeySensitivityReport {
        a_b: image_correlation(&render_a, &render_b)?,
        b_c: image_correlation(&render_b, &render_c)?,
        c_a: image_correlation(&render_c, &render_a)?,
        wrong_key,
    })
}

/// Median wall-clock seconds over several runs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimingReport {
    pub encrypt_seconds: f64,
    pub decrypt_seconds: f64,
    pub runs: usize,
}

const TIMING_RUNS: usize = 5;

fn median(mut v: Vec<f64>) -> f64 {
    v.sort_by(f64::total_cmp);
    v[v.len() / 2]
}

pub fn timing_report(
    img: &PlainImage,
    key: &SecretKey,
    repeat_factor: u32,
) -> Result<TimingReport> {
    let mut enc = Vec::with_capacity(TIMING_RUNS);
    let mut dec = Vec::with_capacity(TIMING_RUNS);
    for _ in 0..TIMING_RUNS {
        let t = Instant::now();
        let c = encrypt_image(img, key, repeat_factor)?;
        enc.push(t.elapsed().as_secs_f64());

        let t = Instant::now();
        let plain = decrypt_image(&c, key, repeat_factor)?;
        dec.push(t.elapsed().as_secs_f64());
        debug_assert_eq!(&plain, img);
    }
    Ok(TimingReport {
        encrypt_seconds: median(enc),
        decrypt_seconds: median(dec),
        runs: TIMING_RUNS,
    })
}
