// Decompose a small payload and show the band arithmetic behind each DSF
// value, then rebuild the payload from the three matrices.
//
//     cargo run --example decompose_payload

use dsf_share::decomposition::{band_for, count_frequencies, decompose, reconstruct};
use dsf_share::{GrayImage, MappingParams};

fn print_matrix(name: &str, width: usize, values: &[impl std::fmt::Display]) {
    println!("{name}:");
    for row in values.chunks(width) {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>4}")).collect();
        println!("  {}", cells.join(""));
    }
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    #[rustfmt::skip]
    let payload = GrayImage::new(4, 4, vec![
        4, 4, 4, 9,
        9, 6, 6, 6,
        6, 6, 6, 2,
        2, 2, 2, 2,
    ])?;
    let params = MappingParams::new(1)?;

    let freq = count_frequencies(&payload);
    print_matrix("payload", 4, payload.pixels());
    print_matrix("frequency", 4, freq.values());

    println!("eta={} mu={}", params.eta(), params.mu());
    println!("  f    k   lb   ub  level  dsf");
    let mut fs: Vec<u64> = freq.values().to_vec();
    fs.sort_unstable();
    fs.dedup();
    for f in fs {
        let b = band_for(f, params)?;
        println!(
            "{f:>3}  {:>3}  {:>3}  {:>3}  {:>5}  {:>3}",
            b.k,
            b.lb,
            b.ub,
            b.level,
            f / b.level
        );
    }

    let set = decompose(&payload, params);
    print_matrix("dsf", 4, set.dsf().values());
    print_matrix("error", 4, set.error().values());
    print_matrix("sign", 4, set.sign().values());

    let rebuilt = reconstruct(&set)?;
    assert_eq!(rebuilt, payload);
    println!("reconstruction is exact");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
