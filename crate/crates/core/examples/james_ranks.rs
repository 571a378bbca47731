//! Rank report for the James-conjecture criterion at (n, r) with the trace
//! form whose Schur elements are all 1.
//!
//! Usage: `cargo run --release --example james_ranks -- [n] [r] [e] [primes, comma separated]`

use klschur::celltrace::WedderburnData;
use klschur::james::{james_report, JamesConfig};
use klschur::qschur::QSchurAlgebra;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let num = |i: usize, default: u64| args.get(i).map_or(default, |s| s.parse().expect("integer argument"));
    let (n, r, e) = (num(0, 2) as usize, num(1, 2) as usize, num(2, 2));
    let primes: Vec<u64> = args
        .get(3)
        .map_or("5,13", |s| s.as_str())
        .split(',')
        .map(|p| p.parse().expect("prime"))
        .collect();

    let s = QSchurAlgebra::new(n, r).expect("structure constants lie in A");
    let w = WedderburnData::with_schur_elements(&s, None).expect("Wedderburn data");
    let cfg = JamesConfig {
        e,
        primes,
        v_image: None,
        allow_small_ell: false,
        both_roots: true,
    };
    let report = james_report(&w, &cfg).expect("rank report");
    println!("{}", serde_json::to_string_pretty(&report).expect("serializable"));
    println!("internal invariants hold: {}", report.invariants_hold());
}
