macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(decompose_payload, "decompose_payload.rs");
example!(embed_bit_plane, "embed_bit_plane.rs");
example!(share_and_recover, "share_and_recover.rs");
example!(distortion_metrics, "distortion_metrics.rs");
example!(complexity_bench, "complexity_bench.rs");

#[test]
fn decompose_payload_runs() {
    decompose_payload::run_example().expect("decompose_payload example");
}

#[test]
fn embed_bit_plane_runs() {
    embed_bit_plane::run_example().expect("embed_bit_plane example");
}

#[test]
fn share_and_recover_runs() {
    let tmp = tempfile::tempdir().unwrap();
    share_and_recover::run_in(tmp.path()).expect("share_and_recover example");
}

#[test]
fn distortion_metrics_runs() {
    distortion_metrics::run_example().expect("distortion_metrics example");
}

#[test]
fn complexity_bench_runs() {
    complexity_bench::run_example().expect("complexity_bench example");
}
