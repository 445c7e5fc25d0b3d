// Share a payload across 17 covers, write the stegos and manifest, then
// recover the payload from the files alone.
//
//     cargo run --example share_and_recover [OUT_DIR]

use std::path::PathBuf;

use dsf_share::pipeline::{recover, share};
use dsf_share::{manifest, pgm, GrayImage, MappingParams, CARRIER_COUNT};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn run_in(dir: &std::path::Path) -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(2012);
    let payload = GrayImage::from_fn(48, 32, |x, y| (96 + (x as i32 - y as i32) * 2) as u8);
    let covers: Vec<GrayImage> = (0..CARRIER_COUNT)
        .map(|_| GrayImage::from_fn(48, 32, |_, _| rng.random()))
        .collect();

    let (stegos, carriers) = share(&payload, &covers, MappingParams::default())?;
    std::fs::create_dir_all(dir)?;
    for (stego, entry) in stegos.iter().zip(&carriers.entries) {
        pgm::write(dir.join(&entry.stego), stego)?;
    }
    let manifest_path = dir.join("manifest.txt");
    manifest::write(&manifest_path, &carriers)?;
    println!(
        "wrote {} stegos and {}",
        stegos.len(),
        manifest_path.display()
    );

    let loaded = manifest::read(&manifest_path)?;
    let stegos = manifest::load_stegos(&manifest_path, &loaded)?;
    let recovered = recover(&stegos, &loaded)?;
    assert_eq!(recovered, payload);
    println!(
        "recovered {}x{} payload bit-exact",
        recovered.width(),
        recovered.height()
    );
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let tmp = std::env::temp_dir().join(format!("dsf-share-example-{}", std::process::id()));
    run_in(&tmp)?;
    std::fs::remove_dir_all(&tmp)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    match std::env::args_os().nth(1) {
        Some(dir) => run_in(&PathBuf::from(dir)),
        None => run_example(),
    }
}
