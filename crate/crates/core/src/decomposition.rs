//! Payload decomposition into DSF, error and sign matrices, and the inverse.
//!
//! Every pixel `g` is replaced by the number of times its grayscale occurs
//! in the payload (`f`). Frequencies are grouped into half-open bands
//! `[k·μ, (k+1)·μ)` of width `μ = 2^η`; band `k` divides by `level = k + 1`,
//! so the down-scaled frequency `d = ⌊f / level⌋` always fits in `[0, μ)`.
//! The error matrix stores `|g - d|` and the sign matrix records `g < d`,
//! which makes `g = d ± e` exactly recoverable.

use crate::bitplane::BitPlane;
use crate::counters::OpCounters;
use crate::error::{Error, Result};
use crate::image::{check_dimensions, GrayImage};

/// Down-scaling granularity: `η ∈ 1..=8`, `μ = 2^η`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct MappingParams {
    eta: u32,
}

impl MappingParams {
    pub const MIN_ETA: u32 = 1;
    pub const MAX_ETA: u32 = 8;

    pub fn new(eta: u32) -> Result<Self> {
        if (Self::MIN_ETA..=Self::MAX_ETA).contains(&eta) {
            Ok(Self { eta })
        } else {
            Err(Error::InvalidEta(eta))
        }
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    pub fn mu(&self) -> u32 {
        1 << self.eta
    }

    /// All eight valid parameter sets, `η = 1` first.
    pub fn all() -> impl Iterator<Item = MappingParams> {
        (Self::MIN_ETA..=Self::MAX_ETA).map(|eta| MappingParams { eta })
    }
}

impl Default for MappingParams {
    /// `η = 8`, `μ = 256`.
    fn default() -> Self {
        Self { eta: 8 }
    }
}

/// The frequency band containing one frequency value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BandParams {
    pub k: u64,
    pub lb: u64,
    pub ub: u64,
    pub level: u64,
}

impl BandParams {
    pub fn contains(&self, f: u64) -> bool {
        self.lb <= f && f < self.ub
    }
}

/// Returns the band `[lb, ub)` holding `f`. A frequency equal to a multiple
/// of `μ` opens a new band.
pub fn band_for(f: u64, params: MappingParams) -> Result<BandParams> {
    if f == 0 {
        return Err(Error::FrequencyOutOfDomain(f));
    }
    Ok(band_unchecked(f, u64::from(params.mu())))
}

fn band_unchecked(f: u64, mu: u64) -> BandParams {
    let k = f / mu;
    let lb = k * mu;
    BandParams {
        k,
        lb,
        ub: lb + mu,
        level: k + 1,
    }
}

/// The down-scaled frequency `⌊f / level⌋` of a single frequency value.
pub fn dsf_value(f: u64, params: MappingParams) -> Result<u8> {
    let band = band_for(f, params)?;
    Ok(quotient(f, band.level))
}

fn quotient(f: u64, level: u64) -> u8 {
    let d = f / level;
    debug_assert!(d < 256, "DSF value {d} does not fit 8 bits");
    d as u8
}

/// Per-cell occurrence counts of each cell's grayscale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrequencyMatrix {
    width: usize,
    height: usize,
    values: Vec<u64>,
}

impl FrequencyMatrix {
    /// Wraps raw frequencies; every value must be at least 1.
    pub fn new(width: usize, height: usize, values: Vec<u64>) -> Result<Self> {
        if width == 0 || height == 0 || width.checked_mul(height) != Some(values.len()) {
            return Err(Error::InvalidDimensions {
                width,
                height,
                len: values.len(),
            });
        }
        if let Some(&bad) = values.iter().find(|&&f| f == 0) {
            return Err(Error::FrequencyOutOfDomain(bad));
        }
        Ok(Self {
            width,
            height,
            values,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }
}

macro_rules! image_newtype {
    ($(#[$meta:meta])* $name:ident) => {
        $(#[$meta])*
        #[derive(Debug, Clone, PartialEq, Eq)]
        pub struct $name(GrayImage);

        impl $name {
            pub fn from_image(image: GrayImage) -> Self {
                Self(image)
            }

            pub fn as_image(&self) -> &GrayImage {
                &self.0
            }

            pub fn into_image(self) -> GrayImage {
                self.0
            }

            pub fn values(&self) -> &[u8] {
                self.0.pixels()
            }

            pub fn dimensions(&self) -> (usize, usize) {
                self.0.dimensions()
            }
        }

        impl AsRef<GrayImage> for $name {
            fn as_ref(&self) -> &GrayImage {
                &self.0
            }
        }
    };
}

image_newtype!(
    /// Down-scaled frequencies, each in `[0, μ)`.
    DsfMatrix
);
image_newtype!(
    /// Error magnitudes `|g - d|`.
    ErrorMatrix
);

/// `0` where `g >= d`, `1` where `g < d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignMatrix(BitPlane);

impl SignMatrix {
    pub fn from_plane(plane: BitPlane) -> Self {
        Self(plane)
    }

    pub fn as_plane(&self) -> &BitPlane {
        &self.0
    }

    pub fn into_plane(self) -> BitPlane {
        self.0
    }

    pub fn values(&self) -> &[u8] {
        self.0.bits()
    }

    pub fn dimensions(&self) -> (usize, usize) {
        self.0.dimensions()
    }

    /// The sign bits as raw `{0, 1}` intensities.
    pub fn to_gray(&self) -> GrayImage {
        self.0.to_gray()
    }
}

/// The three shared matrices of one payload.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionSet {
    dsf: DsfMatrix,
    error: ErrorMatrix,
    sign: SignMatrix,
    params: MappingParams,
}

impl DecompositionSet {
    pub fn new(
        dsf: DsfMatrix,
        error: ErrorMatrix,
        sign: SignMatrix,
        params: MappingParams,
    ) -> Result<Self> {
        check_dimensions(dsf.dimensions(), error.dimensions(), "error matrix")?;
        check_dimensions(dsf.dimensions(), sign.dimensions(), "sign matrix")?;
        Ok(Self {
            dsf,
            error,
            sign,
            params,
        })
    }

    pub fn dsf(&self) -> &DsfMatrix {
        &self.dsf
    }

    pub fn error(&self) -> &ErrorMatrix {
        &self.error
    }

    pub fn sign(&self) -> &SignMatrix {
        &self.sign
    }

    pub fn params(&self) -> MappingParams {
        self.params
    }

    pub fn dimensions(&self) -> (usize, usize) {
        self.dsf.dimensions()
    }

    pub fn into_parts(self) -> (DsfMatrix, ErrorMatrix, SignMatrix, MappingParams) {
        (self.dsf, self.error, self.sign, self.params)
    }
}

pub(crate) fn grayscale_counts(pixels: &[u8]) -> [u64; 256] {
    let mut counts = [0u64; 256];
    for &g in pixels {
        counts[g as usize] += 1;
    }
    counts
}

pub fn count_frequencies(payload: &GrayImage) -> FrequencyMatrix {
    let counts = grayscale_counts(payload.pixels());
    FrequencyMatrix {
        width: payload.width(),
        height: payload.height(),
        values: payload
            .pixels()
            .iter()
            .map(|&g| counts[g as usize])
            .collect(),
    }
}

pub fn downscale(freq: &FrequencyMatrix, params: MappingParams) -> DsfMatrix {
    let mu = u64::from(params.mu());
    let values = freq
        .values
        .iter()
        .map(|&f| quotient(f, band_unchecked(f, mu).level))
        .collect();
    let image = GrayImage::new(freq.width, freq.height, values)
        .expect("frequency matrix dimensions are valid");
    DsfMatrix(image)
}

pub fn error_and_sign(payload: &GrayImage, dsf: &DsfMatrix) -> Result<(ErrorMatrix, SignMatrix)> {
    payload.ensure_same_size(dsf.as_image(), "DSF matrix")?;
    let (width, height) = payload.dimensions();
    let mut errors = Vec::with_capacity(payload.len());
    let mut signs = Vec::with_capacity(payload.len());
    for (&g, &d) in payload.pixels().iter().zip(dsf.values()) {
        errors.push(g.abs_diff(d));
        signs.push(u8::from(g < d));
    }
    Ok((
        ErrorMatrix(GrayImage::new(width, height, errors)?),
        SignMatrix(BitPlane::new(width, height, signs)?),
    ))
}

/// Decomposes a payload. Equivalent to [`count_frequencies`], then
/// [`downscale`], then [`error_and_sign`].
pub fn decompose(payload: &GrayImage, params: MappingParams) -> DecompositionSet {
    decompose_counted(payload, params, &mut OpCounters::new())
}

/// [`decompose`] with operation tallies added to `ops`.
///
/// One histogram pass; one quotient per distinct grayscale; then a single
/// substitution pass that emits DSF, error and sign values together.
pub fn decompose_counted(
    payload: &GrayImage,
    params: MappingParams,
    ops: &mut OpCounters,
) -> DecompositionSet {
    let pixels = payload.pixels();
    let n = pixels.len() as u64;
    let counts = grayscale_counts(pixels);
    ops.comparisons += n;

    let mu = u64::from(params.mu());
    let mut dsf_of = [0u8; 256];
    for (gray, &f) in counts.iter().enumerate() {
        if f > 0 {
            let d = quotient(f, band_unchecked(f, mu).level);
            ops.division_steps += u64::from(d) + 1;
            dsf_of[gray] = d;
        }
    }

    let mut dsf = Vec::with_capacity(pixels.len());
    let mut errors = Vec::with_capacity(pixels.len());
    let mut signs = Vec::with_capacity(pixels.len());
    for &g in pixels {
        let d = dsf_of[g as usize];
        dsf.push(d);
        errors.push(g.abs_diff(d));
        signs.push(u8::from(g < d));
    }
    // substitution lookups, sign tests, error subtractions
    ops.comparisons += 2 * n;
    ops.subtractions += n;

    let (width, height) = payload.dimensions();
    let image = |values| GrayImage::new(width, height, values).expect("payload dimensions");
    DecompositionSet {
        dsf: DsfMatrix(image(dsf)),
        error: ErrorMatrix(image(errors)),
        sign: SignMatrix(BitPlane::new(width, height, signs).expect("payload dimensions")),
        params,
    }
}

/// Recomputes the payload as `d + e` where the sign bit is 0 and `d - e`
/// where it is 1.
pub fn reconstruct(set: &DecompositionSet) -> Result<GrayImage> {
    reconstruct_counted(set, &mut OpCounters::new())
}

pub fn reconstruct_counted(set: &DecompositionSet, ops: &mut OpCounters) -> Result<GrayImage> {
    let (width, height) = set.dimensions();
    let mut out = Vec::with_capacity(width * height);
    let cells = set
        .dsf
        .values()
        .iter()
        .zip(set.error.values())
        .zip(set.sign.values());
    for (idx, ((&d, &e), &s)) in cells.enumerate() {
        let value = if s == 0 {
            i32::from(d) + i32::from(e)
        } else {
            i32::from(d) - i32::from(e)
        };
        let pixel = u8::try_from(value).map_err(|_| Error::Corruption {
            row: idx / width,
            col: idx % width,
            value,
        })?;
        out.push(pixel);
    }
    let n = out.len() as u64;
    ops.comparisons += n;
    ops.subtractions += n;
    GrayImage::new(width, height, out)
}
