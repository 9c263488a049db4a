//! Binary PGM (P5), 8-bit only.

use crate::error::{Error, Result};
use crate::pipeline::PlainImage;

struct Header {
    width: usize,
    height: usize,
    maxval: usize,
    data_offset: usize,
}

fn parse_header(bytes: &[u8]) -> Result<Header> {
    if bytes.len() < 2 || &bytes[..2] != b"P5" {
        return Err(Error::Format("not a binary PGM (missing P5 magic)".into()));
    }
    let mut pos = 2;
    let mut fields = [0usize; 3];
    for field in &mut fields {
        // whitespace and comments before every field
        loop {
            match bytes.get(pos) {
                Some(b) if b.is_ascii_whitespace() => pos += 1,
                Some(b'#') => {
                    while bytes.get(pos).is_some_and(|&b| b != b'\n') {
                        pos += 1;
                    }
                }
                Some(_) => break,
                None => return Err(Error::Format("truncated PGM header".into())),
            }
        }
        let start = pos;
        while bytes.get(pos).is_some_and(u8::is_ascii_digit) {
            pos += 1;
        }
        if start == pos {
            return Err(Error::Format("malformed PGM header".into()));
        }
        let text = std::str::from_utf8(&bytes[start..pos]).expect("ascii digits");
        *field = text
            .parse()
            .map_err(|_| Error::Format(format!("PGM header value {text} too large")))?;
    }
    // exactly one whitespace byte separates the header from the raster
    match bytes.get(pos) {
        Some(b) if b.is_ascii_whitespace() => pos += 1,
        _ => return Err(Error::Format("malformed PGM header".into())),
    }
    let [width, height, maxval] = fields;
    Ok(Header {
        width,
        height,
        maxval,
        data_offset: pos,
    })
}

pub fn decode(bytes: &[u8]) -> Result<PlainImage> {
    let h = parse_header(bytes)?;
    if h.maxval == 0 {
        return Err(Error::Format("PGM maxval must be positive".into()));
    }
    if h.maxval > 255 {
        return Err(Error::Unsupported(format!(
            "16-bit PGM (maxval {}) not supported",
            h.maxval
        )));
    }
    if h.width == 0 || h.height == 0 {
        return Err(Error::Format("PGM has zero size".into()));
    }
    let n = h
        .width
        .checked_mul(h.height)
        .ok_or_else(|| Error::Format("PGM dimensions overflow".into()))?;
    let raster = &bytes[h.data_offset..];
    if raster.len() < n {
        return Err(Error::Format(format!(
            "truncated PGM raster: {} of {n} bytes",
            raster.len()
        )));
    }
    PlainImage::from_gray(h.width, h.height, &raster[..n])
}

pub fn encode(img: &PlainImage) -> Result<Vec<u8>> {
    if img.channel_count() != 1 {
        return Err(Error::Unsupported(format!(
            "PGM is grayscale, image has {} channels",
            img.channel_count()
        )));
    }
    let mut out = format!("P5\n{} {}\n255\n", img.width(), img.height()).into_bytes();
    out.extend(img.to_interleaved());
    Ok(out)
}
