//! Secret sharing for 8-bit grayscale images.
//!
//! A payload is split into three matrices of its own size:
//!
//! - the **DSF matrix**, each pixel's grayscale frequency scaled down into
//!   `[0, μ)` by a banded divisor,
//! - the **error matrix**, `|g - d|` per cell,
//! - the **sign matrix**, `1` where `g < d` and `0` otherwise.
//!
//! The eight bit planes of the DSF and error matrices plus the single sign
//! plane are embedded one per cover image (17 covers) by XOR-ing each plane
//! with the cover's second least significant plane and writing the result
//! into the least significant plane. Recovery only needs the 17 stego images
//! and a [`CarrierManifest`] naming which stego carries which plane.
//!
//! ```
//! use dsf_share::{pipeline, GrayImage, MappingParams, CARRIER_COUNT};
//!
//! let payload = GrayImage::from_fn(8, 8, |x, y| (x * 31 + y * 7) as u8);
//! let covers: Vec<_> = (0..CARRIER_COUNT)
//!     .map(|i| GrayImage::from_fn(8, 8, |x, y| (x * y + i * 13) as u8))
//!     .collect();
//! let (stegos, manifest) = pipeline::share(&payload, &covers, MappingParams::default()).unwrap();
//! assert_eq!(pipeline::recover(&stegos, &manifest).unwrap(), payload);
//! ```

pub mod bench;
pub mod bitplane;
pub mod cli;
pub mod counters;
pub mod decomposition;
mod error;
pub mod image;
pub mod manifest;
pub mod metrics;
pub mod pgm;
pub mod pipeline;

pub use crate::bitplane::BitPlane;
pub use crate::counters::OpCounters;
pub use crate::decomposition::{
    BandParams, DecompositionSet, DsfMatrix, ErrorMatrix, FrequencyMatrix, MappingParams,
    SignMatrix,
};
pub use crate::error::{Error, Result};
pub use crate::image::GrayImage;
pub use crate::metrics::MetricReport;
pub use crate::pipeline::{CarrierManifest, CarrierRole, MatrixKind, CARRIER_COUNT};
