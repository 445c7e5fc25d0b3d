//! Distortion and sensitivity measures between a payload and a matrix.
//!
//! All arithmetic is done in `f64` after widening from `u8`.

use crate::decomposition::grayscale_counts;
use crate::error::Result;
use crate::image::GrayImage;

pub const DEFAULT_I_MAX: f64 = 255.0;

/// Correlations with `|r|` below this are considered a weak linear
/// relationship.
pub const WEAK_CORRELATION_LIMIT: f64 = 0.7;

pub fn mse(a: &GrayImage, b: &GrayImage) -> Result<f64> {
    a.ensure_same_size(b, "metric operand")?;
    let sum: f64 = a
        .pixels()
        .iter()
        .zip(b.pixels())
        .map(|(&x, &y)| {
            let diff = f64::from(x) - f64::from(y);
            diff * diff
        })
        .sum();
    Ok(sum / a.len() as f64)
}

/// `10·log10(i_max² / mse)`; `f64::INFINITY` when the MSE is zero.
pub fn psnr_from_mse(mse: f64, i_max: f64) -> f64 {
    if mse == 0.0 {
        f64::INFINITY
    } else {
        10.0 * (i_max * i_max / mse).log10()
    }
}

pub fn psnr(a: &GrayImage, b: &GrayImage, i_max: f64) -> Result<f64> {
    Ok(psnr_from_mse(mse(a, b)?, i_max))
}

pub fn histogram(image: &GrayImage) -> [u64; 256] {
    grayscale_counts(image.pixels())
}

/// Pearson correlation over all cells, or `None` when either input has
/// zero variance.
pub fn correlation(payload: &GrayImage, mat: &GrayImage) -> Result<Option<f64>> {
    payload.ensure_same_size(mat, "metric operand")?;
    let n = payload.len() as f64;
    let mean = |img: &GrayImage| img.pixels().iter().map(|&v| f64::from(v)).sum::<f64>() / n;
    let (mean_a, mean_b) = (mean(payload), mean(mat));

    let (mut cov, mut var_a, mut var_b) = (0.0, 0.0, 0.0);
    for (&x, &y) in payload.pixels().iter().zip(mat.pixels()) {
        let da = f64::from(x) - mean_a;
        let db = f64::from(y) - mean_b;
        cov += da * db;
        var_a += da * da;
        var_b += db * db;
    }
    if var_a == 0.0 || var_b == 0.0 {
        return Ok(None);
    }
    Ok(Some((cov / (var_a * var_b).sqrt()).clamp(-1.0, 1.0)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearStrength {
    Weak,
    Strong,
}

pub fn classify(r: f64) -> LinearStrength {
    if r.abs() < WEAK_CORRELATION_LIMIT {
        LinearStrength::Weak
    } else {
        LinearStrength::Strong
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MetricReport {
    pub mse: f64,
    pub psnr_db: f64,
    pub correlation: Option<f64>,
}

impl MetricReport {
    pub fn compute(a: &GrayImage, b: &GrayImage) -> Result<Self> {
        let mse = mse(a, b)?;
        Ok(Self {
            mse,
            psnr_db: psnr_from_mse(mse, DEFAULT_I_MAX),
            correlation: correlation(a, b)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn img(w: usize, h: usize, v: &[u8]) -> GrayImage {
        GrayImage::new(w, h, v.to_vec()).unwrap()
    }

    #[test]
    fn mse_examples() {
        let a = img(2, 2, &[0, 0, 0, 0]);
        assert_eq!(mse(&a, &a).unwrap(), 0.0);
        assert_eq!(mse(&img(1, 1, &[255]), &img(1, 1, &[0])).unwrap(), 65025.0);
        assert_eq!(mse(&a, &img(2, 2, &[3, 4, 0, 0])).unwrap(), 6.25);
    }

    #[test]
    fn mse_dimension_mismatch() {
        assert!(mse(&img(2, 1, &[0, 0]), &img(1, 2, &[0, 0])).is_err());
    }

    #[test]
    fn psnr_examples() {
        assert_eq!(psnr_from_mse(65025.0, 255.0), 0.0);
        assert!((psnr_from_mse(65.025, 255.0) - 30.0).abs() < 1e-9);
        let a = img(1, 1, &[9]);
        assert_eq!(psnr(&a, &a, DEFAULT_I_MAX).unwrap(), f64::INFINITY);
    }

    #[test]
    fn histogram_constant() {
        let h = histogram(&GrayImage::filled(4, 4, 128));
        assert_eq!(h[128], 16);
        assert_eq!(h.iter().sum::<u64>(), 16);
    }

    #[test]
    fn correlation_examples() {
        let p = GrayImage::from_fn(4, 4, |x, y| (x * 40 + y * 9) as u8);
        assert!((correlation(&p, &p).unwrap().unwrap() - 1.0).abs() < 1e-12);
        let inv = GrayImage::new(4, 4, p.pixels().iter().map(|&v| 255 - v).collect()).unwrap();
        assert!((correlation(&p, &inv).unwrap().unwrap() + 1.0).abs() < 1e-12);
        assert_eq!(correlation(&p, &GrayImage::filled(4, 4, 3)).unwrap(), None);
    }

    #[test]
    fn classifier() {
        assert_eq!(classify(-0.6150), LinearStrength::Weak);
        assert_eq!(classify(0.1175), LinearStrength::Weak);
        assert_eq!(classify(0.7), LinearStrength::Strong);
    }

    #[test]
    fn report_identical() {
        let p = GrayImage::from_fn(3, 3, |x, y| (x + 3 * y) as u8);
        let r = MetricReport::compute(&p, &p).unwrap();
        assert_eq!(r.mse, 0.0);
        assert!(r.psnr_db.is_infinite());
        assert!((r.correlation.unwrap() - 1.0).abs() < 1e-12);
    }
}
