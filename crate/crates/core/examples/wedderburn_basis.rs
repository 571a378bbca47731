//! Builds the Wedderburn basis of K S_q(n, r) for the trace form with all
//! Schur elements 1, checks it, and compares it with a rescaled form.
//!
//! Usage: `cargo run --release --example wedderburn_basis -- [n] [r]`

use std::time::Instant;

use klschur::arith::RationalFunction;
use klschur::celltrace::{compare_forms, verify_properties, WedderburnData};
use klschur::qschur::QSchurAlgebra;

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(2);
    let r = args.next().unwrap_or(2);
    let s = QSchurAlgebra::new(n, r).expect("structure constants lie in A");

    let start = Instant::now();
    let w = WedderburnData::with_schur_elements(&s, None).expect("Wedderburn data");
    println!("built in {:.1?}", start.elapsed());
    for (k, class) in w.classes().iter().enumerate() {
        println!("class {k}: dimension {}, left cells {:?}", class.dim, class.left_cells);
    }
    for (d, c) in w.schur_elements() {
        println!("c_d for d = {}: {c}", s.name(d));
    }

    let start = Instant::now();
    let report = verify_properties(&w);
    for c in &report.checks {
        println!("{:<36} {:?} ({} cases)", c.property, c.status, c.checked);
    }
    println!("suite finished in {:.1?}", start.elapsed());

    let schur: Vec<RationalFunction> = (0..w.classes().len())
        .map(|k| match k {
            0 => RationalFunction::from_int(2),
            1 => RationalFunction::parse("(v)/(1)").unwrap(),
            _ => RationalFunction::from_int(k as i64 + 1),
        })
        .collect();
    let scaled = WedderburnData::with_schur_elements(&s, Some(schur)).expect("rescaled data");
    for c in compare_forms(&w, &scaled).checks {
        println!("{:<36} {:?} ({} cases)", c.property, c.status, c.checked);
    }
}
