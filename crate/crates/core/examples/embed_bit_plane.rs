// Hide a single bit plane in one cover image and read it back.
//
//     cargo run --example embed_bit_plane

use dsf_share::bitplane::{embed_plane, extract_plane, split_planes};
use dsf_share::{BitPlane, GrayImage};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let cover = GrayImage::from_fn(8, 8, |x, y| (x * 32 + y * 4) as u8);
    let secret = GrayImage::from_fn(8, 8, |x, y| ((x ^ y) * 37) as u8);
    let plane = &split_planes(&secret)[0];

    let stego = embed_plane(&cover, plane)?;
    let changed = cover
        .pixels()
        .iter()
        .zip(stego.pixels())
        .filter(|(c, s)| c != s)
        .count();
    println!("embedded 64 bits, {changed} pixels changed by exactly one level");

    // bits 1..=7 are untouched, so plane 1 of the stego still equals the cover's
    assert_eq!(BitPlane::of_image(&stego, 1), BitPlane::of_image(&cover, 1));
    assert_eq!(&extract_plane(&stego), plane);
    println!("extracted plane matches ({} ones)", plane.count_ones());

    // reading a cover that never carried anything still yields a plane
    let garbage = extract_plane(&cover);
    println!(
        "plane read from the bare cover has {} ones",
        garbage.count_ones()
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
