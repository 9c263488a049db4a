//! End-to-end encryption and decryption.
//!
//! Encryption runs keyed DFT → crossover pass → mutation pass. Decryption
//! rebuilds the same schedules from the key and runs mutation → crossover →
//! keyed inverse DFT, then checks that what comes back is a real, integral
//! image before rounding it.

use std::thread;

use crate::de_ops::{
    apply_crossover_pass, apply_mutation_pass, CrossoverSchedule, MutationSchedule,
};
use crate::error::{Error, Result};
use crate::key::SecretKey;
use crate::lfsr::{IndexStream, StreamLabel};
use crate::transform::{keyed_dft_2d, keyed_idft_2d, KeyScalar, PixelMatrix, SpectralMatrix};

/// Largest imaginary residue tolerated after the inverse transform.
pub const MAX_IMAG_RESIDUE: f64 = 1e-3;
/// Largest distance from the nearest integer tolerated after the inverse
/// transform.
pub const MAX_ROUNDING_DEVIATION: f64 = 0.5;
/// Current cipher container version.
pub const FORMAT_VERSION: u8 = 1;

/// An 8-bit image as one matrix per channel (gray, or R, G, B).
#[derive(Debug, Clone, PartialEq)]
pub struct PlainImage {
    width: usize,
    height: usize,
    channels: Vec<PixelMatrix>,
}

impl PlainImage {
    /// Builds an image from channel matrices. There must be 1 or 3 of them,
    /// all `height x width`, holding integers in `[0, 255]`.
    pub fn new(width: usize, height: usize, channels: Vec<PixelMatrix>) -> Result<Self> {
        check_channel_count(channels.len())?;
        if width == 0 || height == 0 {
            return Err(Error::InvalidDimension(format!(
                "image must be at least 1x1, got {width}x{height}"
            )));
        }
        for c in &channels {
            if c.dims() != (height, width) {
                return Err(Error::DimensionMismatch {
                    expected: (height, width),
                    found: c.dims(),
                });
            }
            c.to_u8()?;
        }
        Ok(PlainImage {
            width,
            height,
            channels,
        })
    }

    pub fn from_gray(width: usize, height: usize, pixels: &[u8]) -> Result<Self> {
        Self::from_interleaved(width, height, 1, pixels)
    }

    pub fn from_rgb(width: usize, height: usize, pixels: &[u8]) -> Result<Self> {
        Self::from_interleaved(width, height, 3, pixels)
    }

    /// Builds an image from interleaved samples (`channels` per pixel).
    pub fn from_interleaved(
        width: usize,
        height: usize,
        channels: usize,
        samples: &[u8],
    ) -> Result<Self> {
        check_channel_count(channels)?;
        if width == 0 || height == 0 {
            return Err(Error::InvalidDimension(format!(
                "image must be at least 1x1, got {width}x{height}"
            )));
        }
        if samples.len() != width * height * channels {
            return Err(Error::InvalidDimension(format!(
                "{} samples do not fill a {width}x{height}x{channels} image",
                samples.len()
            )));
        }
        let planes = (0..channels)
            .map(|c| {
                let plane: Vec<u8> = samples.iter().skip(c).step_by(channels).copied().collect();
                PixelMatrix::from_u8(height, width, &plane)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PlainImage {
            width,
            height,
            channels: planes,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channel_count(&self) -> usize {
        self.channels.len()
    }

    pub fn channels(&self) -> &[PixelMatrix] {
        &self.channels
    }

    pub fn channel(&self, index: usize) -> &PixelMatrix {
        &self.channels[index]
    }

    /// Samples interleaved per pixel.
    pub fn to_interleaved(&self) -> Vec<u8> {
        let n = self.width * self.height;
        let planes: Vec<Vec<u8>> = self
            .channels
            .iter()
            .map(|c| c.to_u8().expect("channel values validated on construction"))
            .collect();
        let mut out = Vec::with_capacity(n * planes.len());
        for i in 0..n {
            for p in &planes {
                out.push(p[i]);
            }
        }
        out
    }
}

fn check_channel_count(n: usize) -> Result<()> {
    if n != 1 && n != 3 {
        return Err(Error::Unsupported(format!(
            "{n} channels (expected 1 or 3)"
        )));
    }
    Ok(())
}

/// The authoritative ciphertext: one complex spectrum per channel.
#[derive(Debug, Clone, PartialEq)]
pub struct CipherImage {
    width: usize,
    height: usize,
    repeat_factor: u32,
    spectra: Vec<SpectralMatrix>,
}

impl CipherImage {
    pub fn new(
        width: usize,
        height: usize,
        repeat_factor: u32,
        spectra: Vec<SpectralMatrix>,
    ) -> Result<Self> {
        check_channel_count(spectra.len())?;
        if repeat_factor == 0 {
            return Err(Error::InvalidArgument(
                "repeat factor must be at least 1".into(),
            ));
        }
        for s in &spectra {
            if s.dims() != (height, width) {
                return Err(Error::DimensionMismatch {
                    expected: (height, width),
                    found: s.dims(),
                });
            }
        }
        Ok(CipherImage {
            width,
            height,
            repeat_factor,
            spectra,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn channel_count(&self) -> usize {
        self.spectra.len()
    }

    /// Repeat factor the cipher was produced with, as recorded in its header.
    pub fn repeat_factor(&self) -> u32 {
        self.repeat_factor
    }

    pub fn format_version(&self) -> u8 {
        FORMAT_VERSION
    }

    pub fn spectra(&self) -> &[SpectralMatrix] {
        &self.spectra
    }

    pub fn into_spectra(self) -> Vec<SpectralMatrix> {
        self.spectra
    }
}

/// Both schedules for one channel, built from freshly derived streams.
fn schedules(
    rows: usize,
    cols: usize,
    key: &SecretKey,
    repeat_factor: u32,
) -> Result<(CrossoverSchedule, MutationSchedule)> {
    let mut cross_rows = IndexStream::derive(key, StreamLabel::CrossoverRow);
    let crossover = CrossoverSchedule::build(rows, cols, key, &mut cross_rows)?;
    let mut mut_rows = IndexStream::derive(key, StreamLabel::MutationRow);
    let mut mut_cols = IndexStream::derive(key, StreamLabel::MutationCol);
    let mutation =
        MutationSchedule::build(rows, cols, key, &mut mut_rows, &mut mut_cols, repeat_factor)?;
    Ok((crossover, mutation))
}

pub fn encrypt_channel(
    img: &PixelMatrix,
    key: &SecretKey,
    repeat_factor: u32,
) -> Result<SpectralMatrix> {
    let k = KeyScalar::from_key(key);
    let (rows, cols) = img.dims();
    let (crossover, mutation) = schedules(rows, cols, key, repeat_factor)?;
    let mut spec = keyed_dft_2d(img, k)?;
    apply_crossover_pass(&mut spec, &crossover)?;
    apply_mutation_pass(&mut spec, &mutation, k)?;
    Ok(spec)
}

pub fn decrypt_channel(
    spec: &SpectralMatrix,
    key: &SecretKey,
    repeat_factor: u32,
) -> Result<PixelMatrix> {
    let k = KeyScalar::from_key(key);
    let (rows, cols) = spec.dims();
    let (crossover, mutation) = schedules(rows, cols, key, repeat_factor)?;
    let mut spec = spec.clone();
    apply_mutation_pass(&mut spec, &mutation, k)?;
    apply_crossover_pass(&mut spec, &crossover)?;
    restore_pixels(&keyed_idft_2d(&spec, k)?)
}

/// Checks an inverse-transformed channel and rounds it to pixels.
pub(crate) fn restore_pixels(spatial: &SpectralMatrix) -> Result<PixelMatrix> {
    let imag = spatial.max_imag_abs();
    if imag.is_nan() || imag >= MAX_IMAG_RESIDUE {
        return Err(Error::Integrity(format!(
            "imaginary residue {imag:.3e} exceeds {MAX_IMAG_RESIDUE:e}"
        )));
    }
    let mut pixels = Vec::with_capacity(spatial.as_slice().len());
    for c in spatial.as_slice() {
        let rounded = c.re.round();
        let deviation = (c.re - rounded).abs();
        if deviation.is_nan() || deviation >= MAX_ROUNDING_DEVIATION {
            return Err(Error::Integrity(format!(
                "value {} is {deviation:.3} from the nearest integer",
                c.re
            )));
        }
        // `+ 0.0` folds -0.0 into 0.0
        pixels.push(rounded.clamp(0.0, 255.0) + 0.0);
    }
    PixelMatrix::new(spatial.rows(), spatial.cols(), pixels)
}

/// Runs `f` on every item, one scoped thread per item when there is more
/// than one.
fn per_channel<T, U, F>(items: &[T], f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync,
{
    if items.len() == 1 {
        return items.iter().map(&f).collect();
    }
    thread::scope(|s| {
        let handles: Vec<_> = items.iter().map(|item| s.spawn(|| f(item))).collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("channel worker panicked"))
            .collect()
    })
}

/// Encrypts each channel independently under the same key.
pub fn encrypt_image(img: &PlainImage, key: &SecretKey, repeat_factor: u32) -> Result<CipherImage> {
    let spectra = per_channel(img.channels(), |c| encrypt_channel(c, key, repeat_factor))?;
    CipherImage::new(img.width(), img.height(), repeat_factor, spectra)
}

/// Decrypts every channel; any channel failing its integrity check fails
/// the whole image.
pub fn decrypt_image(c: &CipherImage, key: &SecretKey, repeat_factor: u32) -> Result<PlainImage> {
    let channels = per_channel(c.spectra(), |s| decrypt_channel(s, key, repeat_factor))?;
    PlainImage::new(c.width(), c.height(), channels)
}

/// Log-magnitude rendering of one spectrum, min-max scaled to `[0, 255]`.
/// A spectrum of constant magnitude renders as all zeros.
pub fn render_spectrum(spec: &SpectralMatrix) -> PixelMatrix {
    let logs: Vec<f64> = spec.as_slice().iter().map(|c| c.norm().ln_1p()).collect();
    let min = logs.iter().copied().fold(f64::INFINITY, f64::min);
    let max = logs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let range = max - min;
    let pixels = if range > 0.0 {
        logs.iter()
            .map(|&l| (255.0 * (l - min) / range).round())
            .collect()
    } else {
        vec![0.0; logs.len()]
    };
    PixelMatrix::new(spec.rows(), spec.cols(), pixels).expect("rendered values are finite")
}

/// Viewable 8-bit rendering of a cipher, one channel per spectrum.
pub fn render_cipher(c: &CipherImage) -> PlainImage {
    let channels = c.spectra().iter().map(render_spectrum).collect();
    PlainImage::new(c.width(), c.height(), channels).expect("render matches cipher shape")
}
