//! The binary cipher container.
//!
//! ```text
//! offset size field
//!      0    4 magic "DEFC"
//!      4    1 version (1)
//!      5    4 height, u32 LE
//!      9    4 width, u32 LE
//!     13    1 channels (1 or 3)
//!     14    4 repeat factor, u32 LE
//!     18    . payload: channels x height x width complex values, row-major,
//!             each as f64 LE real then f64 LE imaginary
//! ```

use rustfft::num_complex::Complex64;

use crate::error::{Error, Result};
use crate::pipeline::{CipherImage, FORMAT_VERSION};
use crate::transform::SpectralMatrix;

pub const MAGIC: [u8; 4] = *b"DEFC";
pub const HEADER_LEN: usize = 18;
/// Bytes per complex value.
pub const VALUE_LEN: usize = 16;

/// Total container size for a given shape.
pub fn container_len(channels: usize, height: usize, width: usize) -> usize {
    HEADER_LEN + channels * height * width * VALUE_LEN
}

pub fn encode(c: &CipherImage) -> Result<Vec<u8>> {
    let height = u32::try_from(c.height())
        .map_err(|_| Error::Format("height does not fit in u32".into()))?;
    let width =
        u32::try_from(c.width()).map_err(|_| Error::Format("width does not fit in u32".into()))?;
    let mut out = Vec::with_capacity(container_len(c.channel_count(), c.height(), c.width()));
    out.extend_from_slice(&MAGIC);
    out.push(c.format_version());
    out.extend_from_slice(&height.to_le_bytes());
    out.extend_from_slice(&width.to_le_bytes());
    out.push(c.channel_count() as u8);
    out.extend_from_slice(&c.repeat_factor().to_le_bytes());
    for spec in c.spectra() {
        for v in spec.as_slice() {
            out.extend_from_slice(&v.re.to_le_bytes());
            out.extend_from_slice(&v.im.to_le_bytes());
        }
    }
    Ok(out)
}

fn u32_at(bytes: &[u8], at: usize) -> u32 {
    u32::from_le_bytes(bytes[at..at + 4].try_into().expect("4-byte slice"))
}

fn f64_at(bytes: &[u8], at: usize) -> f64 {
    f64::from_le_bytes(bytes[at..at + 8].try_into().expect("8-byte slice"))
}

pub fn decode(bytes: &[u8]) -> Result<CipherImage> {
    if bytes.len() < HEADER_LEN {
        return Err(Error::Format(format!(
            "cipher file too short for header ({} bytes)",
            bytes.len()
        )));
    }
    if bytes[..4] != MAGIC {
        return Err(Error::Format("bad magic, not a cipher container".into()));
    }
    let version = bytes[4];
    if version != FORMAT_VERSION {
        return Err(Error::Format(format!(
            "unsupported container version {version} (expected {FORMAT_VERSION})"
        )));
    }
    let height = u32_at(bytes, 5) as usize;
    let width = u32_at(bytes, 9) as usize;
    let channels = bytes[13] as usize;
    let repeat_factor = u32_at(bytes, 14);
    if height == 0 || width == 0 {
        return Err(Error::Format(format!("invalid size {width}x{height}")));
    }
    if channels != 1 && channels != 3 {
        return Err(Error::Format(format!("invalid channel count {channels}")));
    }
    if repeat_factor == 0 {
        return Err(Error::Format("repeat factor must be at least 1".into()));
    }
    let expected = channels
        .checked_mul(height)
        .and_then(|n| n.checked_mul(width))
        .and_then(|n| n.checked_mul(VALUE_LEN))
        .and_then(|n| n.checked_add(HEADER_LEN))
        .ok_or_else(|| Error::Format("container dimensions overflow".into()))?;
    if bytes.len() != expected {
        return Err(Error::Format(format!(
            "payload length mismatch: file has {} bytes, header implies {expected}",
            bytes.len()
        )));
    }

    let plane = height * width;
    let mut spectra = Vec::with_capacity(channels);
    for ch in 0..channels {
        let base = HEADER_LEN + ch * plane * VALUE_LEN;
        let data = (0..plane)
            .map(|i| {
                let at = base + i * VALUE_LEN;
                Complex64::new(f64_at(bytes, at), f64_at(bytes, at + 8))
            })
            .collect();
        spectra.push(
            SpectralMatrix::new(height, width, data).map_err(|e| match e {
                Error::NonFinite { row, col } => Error::Format(format!(
                    "non-finite value in channel {ch} at ({row}, {col})"
                )),
                other => other,
            })?,
        );
    }
    CipherImage::new(width, height, repeat_factor, spectra)
}
