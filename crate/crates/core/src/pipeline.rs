//! End-to-end sharing across 17 cover images and recovery from the stegos.
//!
//! Canonical carrier order: covers 0..=7 take DSF planes 0..=7, covers
//! 8..=15 take error planes 0..=7 and cover 16 takes the sign plane.

use std::collections::HashSet;
use std::fmt;

use rayon::prelude::*;

use crate::bitplane::{embed_plane, extract_plane, join_planes, split_planes, BitPlane};
use crate::decomposition::{
    decompose, reconstruct, DecompositionSet, DsfMatrix, ErrorMatrix, MappingParams, SignMatrix,
};
use crate::error::{Error, Result};
use crate::image::{check_dimensions, GrayImage};

pub const CARRIER_COUNT: usize = 17;
pub const MANIFEST_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Dsf,
    Error,
    Sign,
}

impl MatrixKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            MatrixKind::Dsf => "DSF",
            MatrixKind::Error => "ERROR",
            MatrixKind::Sign => "SIGN",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "DSF" => Ok(MatrixKind::Dsf),
            "ERROR" => Ok(MatrixKind::Error),
            "SIGN" => Ok(MatrixKind::Sign),
            other => Err(Error::Manifest(format!("unknown role {other:?}"))),
        }
    }
}

/// Which plane of which matrix a carrier holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CarrierRole {
    kind: MatrixKind,
    plane: u8,
}

impl CarrierRole {
    pub fn new(kind: MatrixKind, plane: u8) -> Result<Self> {
        let valid = match kind {
            MatrixKind::Dsf | MatrixKind::Error => plane < 8,
            MatrixKind::Sign => plane == 0,
        };
        if valid {
            Ok(Self { kind, plane })
        } else {
            Err(Error::Manifest(format!("invalid plane {plane} for {kind}")))
        }
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn plane(&self) -> u8 {
        self.plane
    }

    /// All 17 roles in canonical carrier order.
    pub fn canonical() -> [CarrierRole; CARRIER_COUNT] {
        std::array::from_fn(|i| match i {
            0..=7 => CarrierRole {
                kind: MatrixKind::Dsf,
                plane: i as u8,
            },
            8..=15 => CarrierRole {
                kind: MatrixKind::Error,
                plane: (i - 8) as u8,
            },
            _ => CarrierRole {
                kind: MatrixKind::Sign,
                plane: 0,
            },
        })
    }
}

impl fmt::Display for CarrierRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.kind, self.plane)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ManifestEntry {
    pub role: CarrierRole,
    pub stego: String,
}

/// The recovery recipe: payload size, `η`, and which stego carries which
/// plane. `entries[i]` describes `stegos[i]` passed to [`recover`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CarrierManifest {
    pub format_version: u32,
    pub payload_width: usize,
    pub payload_height: usize,
    pub eta: u32,
    pub entries: Vec<ManifestEntry>,
}

impl CarrierManifest {
    /// Canonical manifest naming stegos `stego_00.pgm` .. `stego_16.pgm`.
    pub fn canonical(width: usize, height: usize, params: MappingParams) -> Self {
        Self {
            format_version: MANIFEST_VERSION,
            payload_width: width,
            payload_height: height,
            eta: params.eta(),
            entries: CarrierRole::canonical()
                .into_iter()
                .enumerate()
                .map(|(i, role)| ManifestEntry {
                    role,
                    stego: format!("stego_{i:02}.pgm"),
                })
                .collect(),
        }
    }

    pub fn dimensions(&self) -> (usize, usize) {
        (self.payload_width, self.payload_height)
    }

    /// Checks that there are exactly 17 entries covering each role once.
    pub fn validate(&self) -> Result<()> {
        if self.format_version != MANIFEST_VERSION {
            return Err(Error::Manifest(format!(
                "unsupported version {}",
                self.format_version
            )));
        }
        if self.payload_width == 0 || self.payload_height == 0 {
            return Err(Error::Manifest(
                "payload dimensions must be non-zero".into(),
            ));
        }
        MappingParams::new(self.eta)?;
        if self.entries.len() != CARRIER_COUNT {
            return Err(Error::Manifest(format!(
                "expected {CARRIER_COUNT} entries, found {}",
                self.entries.len()
            )));
        }
        let mut seen = HashSet::new();
        for entry in &self.entries {
            CarrierRole::new(entry.role.kind, entry.role.plane)?;
            if !seen.insert(entry.role) {
                return Err(Error::Manifest(format!("duplicate role {}", entry.role)));
            }
        }
        Ok(())
    }
}

/// Decomposes the payload and embeds each of its 17 planes into the matching
/// cover in canonical order.
pub fn share(
    payload: &GrayImage,
    covers: &[GrayImage],
    params: MappingParams,
) -> Result<(Vec<GrayImage>, CarrierManifest)> {
    if covers.len() != CARRIER_COUNT {
        return Err(Error::Arity {
            what: "cover images",
            expected: CARRIER_COUNT,
            found: covers.len(),
        });
    }
    for (i, cover) in covers.iter().enumerate() {
        payload.ensure_same_size(cover, format!("cover {i}"))?;
    }
    warn_on_duplicate_covers(covers);

    let set = decompose(payload, params);
    let dsf_planes = split_planes(set.dsf().as_image());
    let err_planes = split_planes(set.error().as_image());
    let sign_plane = set.sign().as_plane();
    let plane_for = |role: &CarrierRole| -> &BitPlane {
        match role.kind {
            MatrixKind::Dsf => &dsf_planes[role.plane as usize],
            MatrixKind::Error => &err_planes[role.plane as usize],
            MatrixKind::Sign => sign_plane,
        }
    };

    let roles = CarrierRole::canonical();
    let stegos = covers
        .par_iter()
        .zip(roles.par_iter())
        .map(|(cover, role)| embed_plane(cover, plane_for(role)))
        .collect::<Result<Vec<_>>>()?;
    let manifest = CarrierManifest::canonical(payload.width(), payload.height(), params);
    Ok((stegos, manifest))
}

fn warn_on_duplicate_covers(covers: &[GrayImage]) {
    let mut seen = HashSet::new();
    for (i, cover) in covers.iter().enumerate() {
        if !seen.insert(cover) {
            log::warn!("cover {i} duplicates an earlier cover; reusing covers weakens concealment");
        }
    }
}

/// Extracts all 17 planes and reconstructs the payload. Needs neither the
/// covers nor `η`.
pub fn recover(stegos: &[GrayImage], manifest: &CarrierManifest) -> Result<GrayImage> {
    let set = extract_decomposition(stegos, manifest)?;
    reconstruct(&set)
}

/// Extracts the DSF, error and sign matrices from the stegos.
pub fn extract_decomposition(
    stegos: &[GrayImage],
    manifest: &CarrierManifest,
) -> Result<DecompositionSet> {
    manifest.validate()?;
    if stegos.len() != manifest.entries.len() {
        return Err(Error::Arity {
            what: "stego images",
            expected: manifest.entries.len(),
            found: stegos.len(),
        });
    }
    for (stego, entry) in stegos.iter().zip(&manifest.entries) {
        check_dimensions(
            manifest.dimensions(),
            stego.dimensions(),
            format!("stego {}", entry.stego),
        )?;
    }

    let planes: Vec<BitPlane> = stegos.par_iter().map(extract_plane).collect();
    let (width, height) = manifest.dimensions();
    let mut dsf = vec![BitPlane::zeros(width, height); 8];
    let mut err = vec![BitPlane::zeros(width, height); 8];
    let mut sign = BitPlane::zeros(width, height);
    for (plane, entry) in planes.into_iter().zip(&manifest.entries) {
        match entry.role.kind {
            MatrixKind::Dsf => dsf[entry.role.plane as usize] = plane,
            MatrixKind::Error => err[entry.role.plane as usize] = plane,
            MatrixKind::Sign => sign = plane,
        }
    }
    DecompositionSet::new(
        DsfMatrix::from_image(join_planes(&dsf)?),
        ErrorMatrix::from_image(join_planes(&err)?),
        SignMatrix::from_plane(sign),
        MappingParams::new(manifest.eta)?,
    )
}

/// The decomposition of a payload, for inspecting the shared matrices.
pub fn decompose_for_inspection(payload: &GrayImage, params: MappingParams) -> DecompositionSet {
    decompose(payload, params)
}
