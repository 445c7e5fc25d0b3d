// Operation counts and wall-clock times for decomposition and
// reconstruction as the payload side doubles.
//
//     cargo run --release --example complexity_bench

use dsf_share::{bench, MappingParams};

pub fn run_sizes(sizes: &[usize], trials: usize) -> Result<(), Box<dyn std::error::Error>> {
    let params = MappingParams::default();
    let rows = bench::run(sizes, trials, params, 1)?;
    println!(
        "{:>6} {:>12} {:>12} {:>12} {:>10} {:>10}",
        "N", "ops", "bound", "recover_ops", "dec_ms", "rec_ms"
    );
    for row in &rows {
        println!(
            "{:>6} {:>12} {:>12} {:>12} {:>10.3} {:>10.3}",
            row.side,
            row.decompose_ops.total(),
            row.decompose_bound,
            row.reconstruct_ops.total(),
            row.decompose_mean.as_secs_f64() * 1e3,
            row.reconstruct_mean.as_secs_f64() * 1e3,
        );
    }
    for (w, ratio) in rows.windows(2).zip(bench::growth_ratios(&rows)) {
        println!("{} -> {}: x{ratio:.3}", w[0].side, w[1].side);
    }
    Ok(())
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    run_sizes(&[16, 32, 64, 128], 2)
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_sizes(&[20, 30, 40, 50, 250, 512], 5)
}
