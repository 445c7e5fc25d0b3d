//! Bit-plane slicing and the XOR embed/extract primitive.
//!
//! Plane 0 is the least significant bit. Embedding writes
//! `bit1(cover) ^ payload_bit` into bit 0 and leaves bits 1..=7 untouched, so
//! a stego pixel never differs from its cover by more than one intensity
//! level, and extraction (`bit0 ^ bit1`) needs nothing but the stego.

use crate::error::{Error, Result};
use crate::image::{check_dimensions, GrayImage};

pub const PLANE_COUNT: usize = 8;

/// A binary `m x n` matrix, row-major, every value 0 or 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitPlane {
    width: usize,
    height: usize,
    bits: Vec<u8>,
}

impl BitPlane {
    pub fn new(width: usize, height: usize, bits: Vec<u8>) -> Result<Self> {
        if width == 0 || height == 0 || width.checked_mul(height) != Some(bits.len()) {
            return Err(Error::InvalidDimensions {
                width,
                height,
                len: bits.len(),
            });
        }
        if let Some(pos) = bits.iter().position(|&b| b > 1) {
            return Err(Error::Format {
                path: "<bit plane>".into(),
                reason: format!("non-binary value {} at index {pos}", bits[pos]),
            });
        }
        Ok(Self {
            width,
            height,
            bits,
        })
    }

    pub fn zeros(width: usize, height: usize) -> Self {
        Self::filled(width, height, false)
    }

    pub fn filled(width: usize, height: usize, bit: bool) -> Self {
        assert!(width > 0 && height > 0, "plane dimensions must be non-zero");
        Self {
            width,
            height,
            bits: vec![u8::from(bit); width * height],
        }
    }

    /// Bit `index` of every pixel.
    pub fn of_image(image: &GrayImage, index: usize) -> Self {
        assert!(index < PLANE_COUNT, "plane index {index} out of range");
        Self {
            width: image.width(),
            height: image.height(),
            bits: image.pixels().iter().map(|&v| (v >> index) & 1).collect(),
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.width, self.height)
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn get(&self, x: usize, y: usize) -> u8 {
        self.bits[y * self.width + x]
    }

    pub fn flip(&mut self, x: usize, y: usize) {
        self.bits[y * self.width + x] ^= 1;
    }

    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|&&b| b == 1).count()
    }

    /// The plane as an image with intensities 0 and 1.
    pub fn to_gray(&self) -> GrayImage {
        GrayImage::new(self.width, self.height, self.bits.clone()).expect("plane dimensions")
    }

    /// Reads a `{0, 1}` image back as a plane.
    pub fn from_gray(image: &GrayImage) -> Result<Self> {
        Self::new(image.width(), image.height(), image.pixels().to_vec())
    }
}

impl std::fmt::Debug for BitPlane {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BitPlane({}x{}", self.width, self.height)?;
        if self.bits.len() <= 64 {
            write!(f, ", {:?}", self.bits)?;
        }
        write!(f, ")")
    }
}

/// Splits an 8-bit matrix into its planes, least significant first.
pub fn split_planes(image: &GrayImage) -> [BitPlane; PLANE_COUNT] {
    std::array::from_fn(|j| BitPlane::of_image(image, j))
}

/// Reassembles eight planes (least significant first) into an 8-bit matrix.
pub fn join_planes(planes: &[BitPlane]) -> Result<GrayImage> {
    if planes.len() != PLANE_COUNT {
        return Err(Error::Arity {
            what: "bit planes",
            expected: PLANE_COUNT,
            found: planes.len(),
        });
    }
    let dims = planes[0].dimensions();
    for (j, plane) in planes.iter().enumerate().skip(1) {
        check_dimensions(dims, plane.dimensions(), format!("bit plane {j}"))?;
    }
    let mut pixels = vec![0u8; dims.0 * dims.1];
    for (j, plane) in planes.iter().enumerate() {
        for (px, &bit) in pixels.iter_mut().zip(&plane.bits) {
            *px |= bit << j;
        }
    }
    GrayImage::new(dims.0, dims.1, pixels)
}

/// Hides one plane in a cover: `bit0 := bit1 ^ plane_bit`.
pub fn embed_plane(cover: &GrayImage, plane: &BitPlane) -> Result<GrayImage> {
    check_dimensions(cover.dimensions(), plane.dimensions(), "bit plane")?;
    let pixels = cover
        .pixels()
        .iter()
        .zip(&plane.bits)
        .map(|(&c, &bit)| (c & 0xFE) | (((c >> 1) & 1) ^ bit))
        .collect();
    GrayImage::new(cover.width(), cover.height(), pixels)
}

/// Reads a hidden plane back: `bit0 ^ bit1` of every stego pixel.
///
/// Applied to an image that was never embedded into, this still returns a
/// plane (the XOR of the cover's two low planes), which is why recovery
/// relies on the manifest to identify real stegos.
pub fn extract_plane(stego: &GrayImage) -> BitPlane {
    BitPlane {
        width: stego.width(),
        height: stego.height(),
        bits: stego.pixels().iter().map(|&s| (s ^ (s >> 1)) & 1).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn px(v: u8) -> GrayImage {
        GrayImage::filled(1, 1, v)
    }

    #[test]
    fn split_constants() {
        for plane in split_planes(&GrayImage::filled(3, 2, 255)) {
            assert_eq!(plane.count_ones(), 6);
        }
        for plane in split_planes(&GrayImage::filled(3, 2, 0)) {
            assert_eq!(plane.count_ones(), 0);
        }
    }

    #[test]
    fn split_single_pixel() {
        let bits: Vec<u8> = split_planes(&px(0b1011_0101))
            .iter()
            .map(|p| p.bits()[0])
            .collect();
        assert_eq!(bits, vec![1, 0, 1, 0, 1, 1, 0, 1]);
    }

    #[test]
    fn join_examples() {
        let zeros = vec![BitPlane::zeros(2, 2); 8];
        assert_eq!(join_planes(&zeros).unwrap(), GrayImage::filled(2, 2, 0));

        let mut top = zeros.clone();
        top[7] = BitPlane::filled(2, 2, true);
        assert_eq!(join_planes(&top).unwrap(), GrayImage::filled(2, 2, 128));

        let planes = split_planes(&px(0b0110_0110));
        assert_eq!(join_planes(&planes).unwrap().pixels(), &[102]);
    }

    #[test]
    fn join_rejects_bad_input() {
        let seven = vec![BitPlane::zeros(2, 2); 7];
        assert!(matches!(
            join_planes(&seven),
            Err(Error::Arity { found: 7, .. })
        ));
        let mut mixed = vec![BitPlane::zeros(2, 2); 8];
        mixed[3] = BitPlane::zeros(2, 3);
        assert!(matches!(
            join_planes(&mixed),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn embed_examples() {
        let one = BitPlane::filled(1, 1, true);
        assert_eq!(embed_plane(&px(2), &one).unwrap().pixels(), &[2]);
        assert_eq!(embed_plane(&px(1), &one).unwrap().pixels(), &[1]);
    }

    #[test]
    fn embed_zero_plane_copies_second_lsb() {
        let cover = GrayImage::from_fn(16, 16, |x, y| (x * 16 + y) as u8);
        let stego = embed_plane(&cover, &BitPlane::zeros(16, 16)).unwrap();
        assert_eq!(BitPlane::of_image(&stego, 0), BitPlane::of_image(&cover, 1));
    }

    #[test]
    fn embed_dimension_mismatch() {
        assert!(embed_plane(&GrayImage::filled(2, 2, 0), &BitPlane::zeros(2, 1)).is_err());
    }

    #[test]
    fn extract_examples() {
        assert_eq!(extract_plane(&px(0b11)).bits(), &[0]);
        let cover = GrayImage::from_fn(8, 8, |x, y| (x * 29 + y * 3) as u8);
        let expected: Vec<u8> = cover
            .pixels()
            .iter()
            .map(|&c| (c & 1) ^ ((c >> 1) & 1))
            .collect();
        assert_eq!(extract_plane(&cover).bits(), expected.as_slice());
    }

    #[test]
    fn plane_rejects_non_binary() {
        assert!(BitPlane::new(2, 1, vec![0, 2]).is_err());
    }
}
