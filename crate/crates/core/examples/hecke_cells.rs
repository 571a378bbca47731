//! Kazhdan-Lusztig data of S_r: polynomials, cells, a-function and the
//! P1-P15 check.
//!
//! Run with `cargo run --example hecke_cells -- 4 4`; the second argument
//! is the largest rank for which the two-variable identity P15 is checked.

use std::time::Instant;

use klschur::hecke::{verify_properties, HeckeAlgebra, PropertyOptions};

fn main() {
    let r: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let start = Instant::now();
    let h = HeckeAlgebra::new(r);
    println!("S_{r}: {} elements, tables built in {:?}", h.order(), start.elapsed());

    let w0 = h.group().element(h.group().longest()).clone();
    let e = h.group().element(0).clone();
    println!("p(e, w0) = {}", h.kl_polynomial(&e, &w0));
    println!("a(w0) = {}, delta(w0) = {}", h.a_function(&w0), h.delta(&w0));

    println!("left cells:");
    for cell in h.left_cells() {
        let names: Vec<String> = cell.iter().map(|w| w.to_string()).collect();
        println!("  a = {}: {}", h.a_function(&cell[0]), names.join(" "));
    }
    let ds: Vec<String> = h.distinguished_involutions().iter().map(|d| d.to_string()).collect();
    println!("distinguished involutions: {}", ds.join(" "));

    let start = Instant::now();
    let bivariate_max_rank = std::env::args().nth(2).and_then(|s| s.parse().ok()).unwrap_or(3);
    let report = verify_properties(&h, PropertyOptions { bivariate_max_rank });
    for c in &report.checks {
        println!("  {:<32} {:?} ({} cases)", c.property, c.status, c.checked);
    }
    println!("verified in {:?}", start.elapsed());
}
