// PSNR and correlation between a payload and each of its shared matrices.
//
//     cargo run --example distortion_metrics [PAYLOAD.pgm|png]

use dsf_share::metrics::{classify, correlation, histogram, mse, psnr_from_mse, DEFAULT_I_MAX};
use dsf_share::pipeline::decompose_for_inspection;
use dsf_share::{pgm, GrayImage, MappingParams};

fn smooth_payload() -> GrayImage {
    // low-contrast gradient with mild texture, like aerial imagery
    GrayImage::from_fn(128, 128, |x, y| {
        let base = 60.0 + 0.4 * x as f64 + 0.3 * y as f64;
        let texture = 8.0 * ((x as f64 / 5.0).sin() * (y as f64 / 7.0).cos());
        (base + texture).round().clamp(0.0, 255.0) as u8
    })
}

pub fn report(payload: &GrayImage) -> Result<(), Box<dyn std::error::Error>> {
    let set = decompose_for_inspection(payload, MappingParams::default());
    let sign = set.sign().to_gray();
    let matrices = [
        ("error", set.error().as_image()),
        ("dsf", set.dsf().as_image()),
        ("sign", &sign),
    ];
    println!(
        "{:<6} {:>12} {:>10} {:>9}  strength",
        "matrix", "mse", "psnr_db", "r"
    );
    for (name, mat) in matrices {
        let m = mse(payload, mat)?;
        let p = psnr_from_mse(m, DEFAULT_I_MAX);
        match correlation(payload, mat)? {
            Some(r) => println!("{name:<6} {m:>12.3} {p:>10.4} {r:>9.4}  {:?}", classify(r)),
            None => println!("{name:<6} {m:>12.3} {p:>10.4} {:>9}  -", "undefined"),
        }
    }
    let distinct = |img: &GrayImage| histogram(img).iter().filter(|&&c| c > 0).count();
    println!(
        "distinct grayscales: payload {}, dsf {}, error {}",
        distinct(payload),
        distinct(set.dsf().as_image()),
        distinct(set.error().as_image())
    );
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    report(&smooth_payload())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args_os().nth(1) {
        Some(path) => report(&pgm::load(path)?),
        None => run_example(),
    }
}
