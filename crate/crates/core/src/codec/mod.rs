//! Image files (PGM, PNG) and the cipher container.
//!
//! Writers go through a temporary file in the destination directory and a
//! rename, so a failed write never leaves a partial file behind.

pub mod container;
pub mod pgm;
pub mod png;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::error::{Error, Result};
use crate::pipeline::{CipherImage, PlainImage};

pub use container::{container_len, HEADER_LEN, MAGIC};

const PNG_SIGNATURE: [u8; 8] = [0x89, b'P', b'N', b'G', 0x0D, 0x0A, 0x1A, 0x0A];

/// Image file formats the codec can write.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ImageFormat {
    Pgm,
    Png,
}

impl ImageFormat {
    /// Picks a format from the file extension.
    pub fn from_path(path: &Path) -> Result<Self> {
        let ext = path
            .extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase);
        match ext.as_deref() {
            Some("pgm") => Ok(ImageFormat::Pgm),
            Some("png") => Ok(ImageFormat::Png),
            _ => Err(Error::Unsupported(format!(
                "cannot infer image format from {}",
                path.display()
            ))),
        }
    }
}

/// Decodes PGM (P5) or PNG bytes, detected by signature.
pub fn decode_image(bytes: &[u8]) -> Result<PlainImage> {
    if bytes.starts_with(&PNG_SIGNATURE) {
        png::decode(bytes)
    } else if bytes.starts_with(b"P5") {
        pgm::decode(bytes)
    } else {
        Err(Error::Unsupported("not a PNG or binary PGM file".into()))
    }
}

pub fn encode_image(img: &PlainImage, format: ImageFormat) -> Result<Vec<u8>> {
    match format {
        ImageFormat::Pgm => pgm::encode(img),
        ImageFormat::Png => png::encode(img),
    }
}

pub fn read_image(path: impl AsRef<Path>) -> Result<PlainImage> {
    decode_image(&fs::read(path)?)
}

/// Writes PGM or PNG according to the extension of `path`.
pub fn write_image(img: &PlainImage, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let bytes = encode_image(img, ImageFormat::from_path(path)?)?;
    write_atomic(path, &bytes)
}

pub fn read_cipher(path: impl AsRef<Path>) -> Result<CipherImage> {
    container::decode(&fs::read(path)?)
}

pub fn write_cipher(c: &CipherImage, path: impl AsRef<Path>) -> Result<()> {
    write_atomic(path.as_ref(), &container::encode(c)?)
}

fn temp_path(path: &Path) -> PathBuf {
    let name = path
        .file_name()
        .map(|n| n.to_string_lossy().into_owned())
        .unwrap_or_default();
    path.with_file_name(format!(".{name}.{}.tmp", std::process::id()))
}

/// Writes `bytes` to `path` via a temporary sibling file and a rename.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let tmp = temp_path(path);
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(bytes)?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result.map_err(Error::from)
}
