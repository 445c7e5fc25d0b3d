//! Binary PGM (P5, maxval 255) reading and writing, plus PNG input.

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::image::GrayImage;

pub fn encode(image: &GrayImage) -> Vec<u8> {
    let mut out = format!("P5\n{} {}\n255\n", image.width(), image.height()).into_bytes();
    out.extend_from_slice(image.pixels());
    out
}

/// Decodes a P5 image with `maxval <= 255`. `#` comments are allowed in the
/// header.
pub fn decode(data: &[u8]) -> std::result::Result<GrayImage, String> {
    let mut header = HeaderReader { data, pos: 0 };
    if !data.starts_with(b"P5") {
        return Err("not a binary PGM (missing P5 magic)".into());
    }
    header.pos = 2;
    let width = header.number("width")?;
    let height = header.number("height")?;
    let maxval = header.number("maxval")?;
    if maxval == 0 || maxval > 255 {
        return Err(format!("unsupported maxval {maxval}, expected 1..=255"));
    }
    // exactly one whitespace byte separates the header from the raster
    match data.get(header.pos) {
        Some(b) if b.is_ascii_whitespace() => header.pos += 1,
        _ => return Err("missing whitespace after maxval".into()),
    }
    let raster = &data[header.pos..];
    let expected = width
        .checked_mul(height)
        .ok_or_else(|| "image dimensions overflow".to_string())?;
    if raster.len() < expected {
        return Err(format!(
            "truncated raster: expected {expected} bytes, found {}",
            raster.len()
        ));
    }
    let pixels = raster[..expected].to_vec();
    if let Some(&v) = pixels.iter().find(|&&v| usize::from(v) > maxval) {
        return Err(format!("pixel value {v} exceeds maxval {maxval}"));
    }
    GrayImage::new(width, height, pixels).map_err(|e| e.to_string())
}

struct HeaderReader<'a> {
    data: &'a [u8],
    pos: usize,
}

impl HeaderReader<'_> {
    fn skip_space_and_comments(&mut self) {
        while let Some(&b) = self.data.get(self.pos) {
            if b.is_ascii_whitespace() {
                self.pos += 1;
            } else if b == b'#' {
                while let Some(&c) = self.data.get(self.pos) {
                    self.pos += 1;
                    if c == b'\n' || c == b'\r' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn number(&mut self, field: &str) -> std::result::Result<usize, String> {
        self.skip_space_and_comments();
        let start = self.pos;
        while self.data.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.data[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| format!("malformed header: bad {field}"))
    }
}

pub fn write(path: impl AsRef<Path>, image: &GrayImage) -> Result<()> {
    let path = path.as_ref();
    let mut file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    file.write_all(&encode(image))
        .map_err(|e| Error::io(path, e))
}

pub fn read(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let data = fs::read(path).map_err(|e| Error::io(path, e))?;
    decode(&data).map_err(|reason| Error::format(path, reason))
}

/// Loads a P5 PGM or an 8-bit grayscale PNG.
pub fn load(path: impl AsRef<Path>) -> Result<GrayImage> {
    let path = path.as_ref();
    let data = fs::read(path).map_err(|e| Error::io(path, e))?;
    if data.starts_with(b"P5") {
        return decode(&data).map_err(|reason| Error::format(path, reason));
    }
    let decoded = image::load_from_memory(&data).map_err(|e| Error::format(path, e.to_string()))?;
    match decoded {
        image::DynamicImage::ImageLuma8(buf) => {
            let (w, h) = buf.dimensions();
            GrayImage::new(w as usize, h as usize, buf.into_raw())
        }
        other => Err(Error::format(
            path,
            format!("not an 8-bit grayscale image ({:?})", other.color()),
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn encode_layout() {
        let img = GrayImage::new(2, 1, vec![7, 255]).unwrap();
        assert_eq!(encode(&img), b"P5\n2 1\n255\n\x07\xff");
    }

    #[test]
    fn decode_with_comments() {
        let data = b"P5\n# made by hand\n2 # width done\n2\n255\n\x00\x01\x0a\x0b";
        let img = decode(data).unwrap();
        assert_eq!(img.pixels(), &[0, 1, 10, 11]);
    }

    #[test]
    fn raster_may_start_with_whitespace_byte() {
        let img = decode(b"P5 1 2 255\n\n\x20").unwrap();
        assert_eq!(img.pixels(), b"\n ");
    }

    #[test]
    fn decode_errors() {
        assert!(decode(b"P2\n1 1\n255\n0").is_err());
        assert!(decode(b"P5\n2 2\n255\n\x00")
            .unwrap_err()
            .contains("truncated"));
        assert!(decode(b"P5\n1 1\n65535\n\x00\x00").is_err());
        assert!(decode(b"P5\n1 1\n15\n\x20")
            .unwrap_err()
            .contains("exceeds"));
        assert!(decode(b"P5\n0 1\n255\n").is_err());
    }
}
