#![allow(dead_code)]

use dsf_share::{GrayImage, CARRIER_COUNT};
use rand::Rng;

pub fn random_image(width: usize, height: usize, rng: &mut impl Rng) -> GrayImage {
    GrayImage::from_fn(width, height, |_, _| rng.random())
}

/// An image drawing only from a small palette, so frequencies are large.
pub fn palette_image(width: usize, height: usize, colors: u8, rng: &mut impl Rng) -> GrayImage {
    let palette: Vec<u8> = (0..colors).map(|_| rng.random()).collect();
    GrayImage::from_fn(width, height, |_, _| {
        palette[rng.random_range(0..palette.len())]
    })
}

pub fn random_covers(width: usize, height: usize, rng: &mut impl Rng) -> Vec<GrayImage> {
    (0..CARRIER_COUNT)
        .map(|_| random_image(width, height, rng))
        .collect()
}

/// Occurrence count of each cell's grayscale, by rescanning the whole
/// image for every cell.
pub fn brute_force_frequencies(image: &GrayImage) -> Vec<u64> {
    let px = image.pixels();
    px.iter()
        .map(|&g| px.iter().filter(|&&other| other == g).count() as u64)
        .collect()
}

/// Band index found by walking k = 0, 1, 2, ... until lb <= f < ub.
pub fn iterative_band(f: u64, mu: u64) -> (u64, u64, u64, u64) {
    let mut k = 0;
    loop {
        let ub = mu + k * mu;
        let lb = ub - mu;
        if lb <= f && f < ub {
            return (k, lb, ub, k + 1);
        }
        k += 1;
    }
}

/// DSF by repeated subtraction instead of integer division.
pub fn dsf_by_subtraction(f: u64, mu: u64) -> u64 {
    let (_, _, _, level) = iterative_band(f, mu);
    let mut rest = f;
    let mut q = 0;
    while rest >= level {
        rest -= level;
        q += 1;
    }
    q
}
