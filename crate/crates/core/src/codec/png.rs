//! 8-bit grayscale and RGB PNG through the `png` crate.

use std::io::Cursor;

use png::{BitDepth, ColorType, Transformations};

use crate::error::{Error, Result};
use crate::pipeline::PlainImage;

fn format_err(e: png::DecodingError) -> Error {
    match e {
        png::DecodingError::IoError(io) => Error::Format(format!("PNG read failed: {io}")),
        other => Error::Format(format!("PNG decode failed: {other}")),
    }
}

pub fn decode(bytes: &[u8]) -> Result<PlainImage> {
    let mut decoder = png::Decoder::new(Cursor::new(bytes));
    decoder.set_transformations(Transformations::IDENTITY);
    let mut reader = decoder.read_info().map_err(format_err)?;
    let (color, depth) = reader.output_color_type();
    let channels = match (color, depth) {
        (ColorType::Grayscale, BitDepth::Eight) => 1,
        (ColorType::Rgb, BitDepth::Eight) => 3,
        (c, d) => {
            return Err(Error::Unsupported(format!(
                "PNG {c:?} at {d:?} bits (need 8-bit gray or RGB)"
            )))
        }
    };
    let size = reader
        .output_buffer_size()
        .ok_or_else(|| Error::Format("PNG too large".into()))?;
    let mut buf = vec![0u8; size];
    let info = reader.next_frame(&mut buf).map_err(format_err)?;
    let (width, height) = (info.width as usize, info.height as usize);
    let row = width * channels;
    // rows are tightly packed for 8-bit samples, but trim to be safe
    let mut samples = Vec::with_capacity(row * height);
    for line in buf.chunks(info.line_size).take(height) {
        samples.extend_from_slice(&line[..row]);
    }
    PlainImage::from_interleaved(width, height, channels, &samples)
}

pub fn encode(img: &PlainImage) -> Result<Vec<u8>> {
    let mut out = Vec::new();
    {
        let mut encoder = png::Encoder::new(&mut out, img.width() as u32, img.height() as u32);
        encoder.set_color(if img.channel_count() == 1 {
            ColorType::Grayscale
        } else {
            ColorType::Rgb
        });
        encoder.set_depth(BitDepth::Eight);
        let mut writer = encoder
            .write_header()
            .map_err(|e| Error::Format(format!("PNG encode failed: {e}")))?;
        writer
            .write_image_data(&img.to_interleaved())
            .map_err(|e| Error::Format(format!("PNG encode failed: {e}")))?;
    }
    Ok(out)
}
