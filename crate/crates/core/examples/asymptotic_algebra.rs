//! The asymptotic algebra J(n, r) and the homomorphism Phi: checks the
//! homomorphism property and that Phi sends the Wedderburn basis to the
//! t-basis for two different trace forms.
//!
//! Usage: `cargo run --release --example asymptotic_algebra -- [n] [r]`

use std::time::Instant;

use klschur::arith::RationalFunction;
use klschur::asymptotic::{verify_form_independence, verify_preimages, verify_properties, AsymptoticAlgebra};
use klschur::celltrace::WedderburnData;
use klschur::qschur::QSchurAlgebra;

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(2);
    let r = args.next().unwrap_or(2);
    let s = QSchurAlgebra::new(n, r).expect("structure constants lie in A");
    let start = Instant::now();
    let j = AsymptoticAlgebra::new(&s).expect("J has the expected identity");
    println!("J({n},{r}) built in {:.1?}; det Phi = {}", start.elapsed(), j.phi_determinant().expect("block diagonal"));

    let unit = WedderburnData::with_schur_elements(&s, None).expect("Wedderburn data");
    let classes = unit.classes().len();
    let scaled_schur = (0..classes)
        .map(|k| if k == 0 { RationalFunction::from_int(2) } else { RationalFunction::parse("(v)/(1)").unwrap() })
        .collect();
    let scaled = WedderburnData::with_schur_elements(&s, Some(scaled_schur)).expect("Wedderburn data");

    let start = Instant::now();
    let mut report = verify_properties(&j);
    report.extend(verify_preimages(&j, &unit));
    report.extend(verify_preimages(&j, &scaled));
    report.push(verify_form_independence(&j, &unit, &scaled));
    for c in &report.checks {
        println!("{:<36} {:?} ({} cases)", c.property, c.status, c.checked);
    }
    println!("verified in {:.1?}", start.elapsed());
}
