//! Exhaustive checks of the Kazhdan-Lusztig properties P1-P15 (there is no
//! P12) and of the basic invariants of the tables they rest on.

use std::collections::BTreeMap;

use serde_json::json;

use super::HeckeAlgebra;
use crate::arith::{BivariatePoly, IntLaurent};
use crate::report::{PropertyCheck, SuiteReport};
use crate::weyl::bruhat_leq;

#[derive(Clone, Copy, Debug)]
pub struct PropertyOptions {
    /// P15 is checked only when `r` is at most this bound.
    pub bivariate_max_rank: usize,
}

impl Default for PropertyOptions {
    fn default() -> Self {
        Self {
            bivariate_max_rank: 4,
        }
    }
}

pub fn verify_properties(h: &HeckeAlgebra, opts: PropertyOptions) -> SuiteReport {
    let g = h.group();
    let n = g.order();
    let name = |i: usize| g.element(i).to_string();
    let inv = |i: usize| g.inverse(i);
    let a = |i: usize| h.a_idx(i);
    let cells = h.cells();
    let dset = h.distinguished_idx();
    let mut rep = SuiteReport::new("hecke");

    rep.push(PropertyCheck::scan("kl-normalization", n * n, |k| {
        let (y, w) = (k / n, k % n);
        let p = h.kl_idx(y, w);
        let ok = if y == w {
            p.is_one()
        } else if p.is_zero() {
            true
        } else {
            p.max_exp().unwrap() < 0 && bruhat_leq(g.element(y), g.element(w))
        };
        (!ok).then(|| json!({"y": name(y), "w": name(w), "p": p.to_string()}))
    }));
    rep.push(PropertyCheck::scan("kl-positivity", n * n, |k| {
        let (y, w) = (k / n, k % n);
        let p = h.kl_idx(y, w);
        let negative = p.terms().any(|(_, c)| c < 0);
        negative.then(|| json!({"y": name(y), "w": name(w), "p": p.to_string()}))
    }));
    rep.push(PropertyCheck::scan("bar-invariance", n, |w| {
        let c = h.c_dense(w);
        (h.bar_t(&c) != c).then(|| json!({"w": name(w)}))
    }));
    rep.push(PropertyCheck::scan("g-inverse-symmetry", n * n * n, |k| {
        let (x, y, z) = (k / (n * n), k / n % n, k % n);
        (h.g_idx(x, y, z) != h.g_idx(inv(y), inv(x), inv(z)))
            .then(|| json!({"x": name(x), "y": name(y), "z": name(z)}))
    }));

    rep.push(PropertyCheck::scan("P1", n, |z| {
        (a(z) > h.delta_idx(z)).then(|| json!({"z": name(z), "a": a(z), "delta": h.delta_idx(z)}))
    }));
    rep.push(PropertyCheck::scan("P2", n * n, |k| {
        let (x, y) = (k / n, k % n);
        dset.iter()
            .find(|&&d| h.gamma_idx(x, y, d) != 0 && x != inv(y))
            .map(|&d| json!({"x": name(x), "y": name(y), "d": name(d)}))
    }));
    rep.push(PropertyCheck::scan("P3", n, |y| {
        let hits: Vec<usize> = dset
            .iter()
            .copied()
            .filter(|&d| h.gamma_idx(inv(y), y, d) != 0)
            .collect();
        (hits.len() != 1).then(|| json!({"y": name(y), "d": hits.iter().map(|&d| name(d)).collect::<Vec<_>>()}))
    }));
    rep.push(PropertyCheck::scan("P4", n * n, |k| {
        let (x, y) = (k / n, k % n);
        (cells.two_sided.leq(x, y) && a(x) < a(y)).then(|| json!({"x": name(x), "y": name(y)}))
    }));
    rep.push(PropertyCheck::scan("P5", n * dset.len(), |k| {
        let (y, d) = (k / dset.len(), dset[k % dset.len()]);
        let c = h.gamma_idx(inv(y), y, d);
        (c != 0 && c.abs() != 1).then(|| json!({"y": name(y), "d": name(d), "gamma": c}))
    }));
    rep.push(PropertyCheck::scan("P6", dset.len(), |k| {
        let d = dset[k];
        (inv(d) != d).then(|| json!({"d": name(d)}))
    }));
    rep.push(PropertyCheck::scan("P7", n * n * n, |k| {
        let (x, y, z) = (k / (n * n), k / n % n, k % n);
        let c = h.gamma_idx(x, y, z);
        (c != h.gamma_idx(y, z, x) || c != h.gamma_idx(z, x, y))
            .then(|| json!({"x": name(x), "y": name(y), "z": name(z)}))
    }));
    rep.push(PropertyCheck::scan("P8", n * n * n, |k| {
        let (x, y, z) = (k / (n * n), k / n % n, k % n);
        let l = &cells.left;
        let ok = h.gamma_idx(x, y, z) == 0
            || (l.equivalent(x, inv(y)) && l.equivalent(y, inv(z)) && l.equivalent(z, inv(x)));
        (!ok).then(|| json!({"x": name(x), "y": name(y), "z": name(z)}))
    }));
    for (label, pre) in [
        ("P9", &cells.left),
        ("P10", &cells.right),
        ("P11", &cells.two_sided),
    ] {
        rep.push(PropertyCheck::scan(label, n * n, |k| {
            let (x, y) = (k / n, k % n);
            (pre.leq(x, y) && a(x) == a(y) && !pre.equivalent(x, y))
                .then(|| json!({"x": name(x), "y": name(y)}))
        }));
    }
    let left_cells = cells.left.classes();
    rep.push(PropertyCheck::scan("P13", left_cells.len(), |k| {
        let cell = &left_cells[k];
        let ds: Vec<usize> = cell.iter().copied().filter(|&x| h.is_distinguished(x)).collect();
        if ds.len() != 1 {
            return Some(json!({"cell": cell.iter().map(|&x| name(x)).collect::<Vec<_>>(), "distinguished": ds.len()}));
        }
        let d = ds[0];
        cell.iter()
            .find(|&&y| h.gamma_idx(inv(y), y, d) == 0)
            .map(|&y| json!({"y": name(y), "d": name(d)}))
    }));
    rep.push(PropertyCheck::scan("P14", n, |x| {
        (!cells.two_sided.equivalent(x, inv(x))).then(|| json!({"x": name(x)}))
    }));
    if h.rank() <= opts.bivariate_max_rank {
        rep.push(check_p15(h));
    }

    rep.push(PropertyCheck::scan("a-constant-on-two-sided-cells", n * n, |k| {
        let (x, y) = (k / n, k % n);
        (cells.two_sided.equivalent(x, y) && a(x) != a(y)).then(|| json!({"x": name(x), "y": name(y)}))
    }));
    rep.push(PropertyCheck::scan("left-cells-refine-two-sided", n * n, |k| {
        let (x, y) = (k / n, k % n);
        (cells.left.equivalent(x, y) && !cells.two_sided.equivalent(x, y))
            .then(|| json!({"x": name(x), "y": name(y)}))
    }));
    rep.push(PropertyCheck::scan("left-right-intersection", n * n, |k| {
        let (x, y) = (k / n, k % n);
        (x != y && cells.left.equivalent(x, y) && cells.right.equivalent(x, y))
            .then(|| json!({"x": name(x), "y": name(y)}))
    }));
    rep.push(PropertyCheck::from_witness(
        "distinguished-count",
        1,
        (dset.len() != left_cells.len())
            .then(|| json!({"distinguished": dset.len(), "leftCells": left_cells.len()})),
    ));
    rep
}

/// P15 for `a(w) = a(y)`:
/// `sum_{y'} g'_{w,x',y'} g_{x,y',y} = sum_{y'} g_{x,w,y'} g'_{y',x',y}`,
/// compared as polynomials in two independent variables.
fn check_p15(h: &HeckeAlgebra) -> PropertyCheck {
    let n = h.order();
    let g = h.group();
    PropertyCheck::scan("P15", n * n * n, |k| {
        let (x, w, xp) = (k / (n * n), k / n % n, k % n);
        let side = |pairs: &mut dyn Iterator<Item = (usize, &IntLaurent, &IntLaurent)>| {
            let mut acc: BTreeMap<usize, BivariatePoly> = BTreeMap::new();
            for (y, in_v, in_v_prime) in pairs {
                if h.a_idx(y) == h.a_idx(w) {
                    acc.entry(y).or_default().add_outer_int(in_v, in_v_prime);
                }
            }
            acc.retain(|_, p| !p.is_zero());
            acc
        };
        let lhs = side(&mut h.product(w, xp).iter().flat_map(|(yp, gp)| {
            h.product(x, *yp).iter().map(move |(y, gv)| (*y, gv, gp))
        }));
        let rhs = side(&mut h.product(x, w).iter().flat_map(|(yp, gv)| {
            h.product(*yp, xp).iter().map(move |(y, gp)| (*y, gv, gp))
        }));
        (lhs != rhs).then(|| {
            json!({"x": g.element(x).to_string(), "w": g.element(w).to_string(),
                   "xPrime": g.element(xp).to_string()})
        })
    })
}
