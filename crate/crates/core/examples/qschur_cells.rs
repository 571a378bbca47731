//! Builds S_q(n, r), prints its cells and runs the Q-suite.
//!
//! Usage: `cargo run --release --example qschur_cells -- [n] [r]`

use std::time::Instant;

use klschur::qschur::{verify_properties, CellModule, QSchurAlgebra};

fn main() {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().expect("integer argument"));
    let n = args.next().unwrap_or(2);
    let r = args.next().unwrap_or(2);

    let start = Instant::now();
    let s = QSchurAlgebra::new(n, r).expect("structure constants lie in A");
    println!("S_q({n},{r}): {} basis elements, built in {:.1?}", s.dim(), start.elapsed());

    for (k, cell) in s.left_cells().iter().enumerate() {
        let d = s.distinguished_of_cell(cell[0]).map(|d| s.name(d)).unwrap_or_default();
        let module = CellModule::of_left_cell(&s, k);
        println!(
            "left cell {k}: size {}, a = {}, distinguished {d}, character on 1 = {}",
            cell.len(),
            s.a_idx(cell[0]),
            s.identity_indices().iter().map(|&e| module.character(e)).fold(
                klschur::arith::IntLaurent::zero(),
                |acc, x| &acc + &x
            ),
        );
    }
    println!("two-sided cells: {}", s.cells().two_sided.classes().len());

    let start = Instant::now();
    let report = verify_properties(&s);
    for c in &report.checks {
        println!("{:<34} {:?} ({} cases)", c.property, c.status, c.checked);
    }
    println!("suite finished in {:.1?}", start.elapsed());
}
