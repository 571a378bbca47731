//! Exhaustive checks of Q1-Q15 (there is no Q12), the cell properties behind
//! them, and the algebra axioms of the structure constants.

use std::collections::BTreeMap;

use serde_json::json;

use super::cellmod::{int_mat_mul, CellModule};
use super::QSchurAlgebra;
use crate::arith::{BivariatePoly, IntLaurent};
use crate::hecke::SparseCoords;
use crate::linalg::Matrix;
use crate::report::{PropertyCheck, SuiteReport};

pub fn verify_properties(s: &QSchurAlgebra) -> SuiteReport {
    let m = s.dim();
    let name = |a: usize| s.name(a);
    let tr = |a: usize| s.transpose_idx(a);
    let a_of = |a: usize| s.a_idx(a);
    let h = s.hecke();
    let cells = s.cells();
    let dset = s.distinguished_idx();
    let mut rep = SuiteReport::new("qschur");

    rep.push(PropertyCheck::scan("identity-neutrality", m, |a| {
        let one = s.identity();
        let x = s.theta(a);
        (s.multiply(&one, &x) != x || s.multiply(&x, &one) != x).then(|| json!({"a": name(a)}))
    }));
    rep.push(check_associativity(s));
    rep.push(PropertyCheck::scan("transpose-symmetry", m * m * m, |k| {
        let (a, b, c) = (k / (m * m), k / m % m, k % m);
        (s.f_idx(a, b, c) != s.f_idx(tr(b), tr(a), tr(c)))
            .then(|| json!({"a": name(a), "b": name(b), "c": name(c)}))
    }));
    rep.push(PropertyCheck::scan("a-transpose-invariance", m, |a| {
        (a_of(a) != a_of(tr(a))).then(|| json!({"a": name(a)}))
    }));

    rep.push(PropertyCheck::scan("Q1", m, |a| {
        let d = h.delta_idx(s.sigma_idx(a));
        (a_of(a) > d).then(|| json!({"a": name(a), "aValue": a_of(a), "delta": d}))
    }));
    rep.push(PropertyCheck::scan("Q2", m * m, |k| {
        let (a, b) = (k / m, k % m);
        dset.iter()
            .find(|&&d| s.gamma_idx(a, b, d) != 0 && b != tr(a))
            .map(|&d| json!({"a": name(a), "b": name(b), "d": name(d)}))
    }));
    rep.push(PropertyCheck::scan("Q3", m, |a| {
        let hits: Vec<usize> = dset
            .iter()
            .copied()
            .filter(|&d| s.gamma_idx(tr(a), a, d) != 0)
            .collect();
        (hits.len() != 1).then(|| json!({"a": name(a), "d": hits.iter().map(|&d| name(d)).collect::<Vec<_>>()}))
    }));
    rep.push(PropertyCheck::scan("Q4", m * m, |k| {
        let (a, b) = (k / m, k % m);
        (cells.two_sided.leq(a, b) && a_of(a) < a_of(b)).then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(PropertyCheck::scan("Q5", m * dset.len().max(1), |k| {
        let (a, d) = (k / dset.len(), dset[k % dset.len()]);
        let c = s.gamma_idx(tr(a), a, d);
        (c != 0 && c != 1).then(|| json!({"a": name(a), "d": name(d), "gamma": c}))
    }));
    rep.push(PropertyCheck::scan("Q6", dset.len(), |k| {
        let d = dset[k];
        (tr(d) != d).then(|| json!({"d": name(d)}))
    }));
    rep.push(PropertyCheck::scan("Q7", m * m * m, |k| {
        let (a, b, c) = (k / (m * m), k / m % m, k % m);
        let g = s.gamma_idx(a, b, c);
        (g != s.gamma_idx(b, c, a) || g != s.gamma_idx(c, a, b))
            .then(|| json!({"a": name(a), "b": name(b), "c": name(c)}))
    }));
    rep.push(PropertyCheck::scan("Q8", m * m * m, |k| {
        let (a, b, c) = (k / (m * m), k / m % m, k % m);
        let l = &cells.left;
        let ok = s.gamma_idx(a, b, c) == 0
            || (l.equivalent(a, tr(b)) && l.equivalent(b, tr(c)) && l.equivalent(c, tr(a)));
        (!ok).then(|| json!({"a": name(a), "b": name(b), "c": name(c)}))
    }));
    for (label, pre) in [
        ("Q9", &cells.left),
        ("Q10", &cells.right),
        ("Q11", &cells.two_sided),
    ] {
        rep.push(PropertyCheck::scan(label, m * m, |k| {
            let (a, b) = (k / m, k % m);
            (pre.leq(a, b) && a_of(a) == a_of(b) && !pre.equivalent(a, b))
                .then(|| json!({"a": name(a), "b": name(b)}))
        }));
    }
    let left_cells = cells.left.classes();
    rep.push(PropertyCheck::scan("Q13", left_cells.len(), |k| {
        let cell = &left_cells[k];
        let ds: Vec<usize> = cell.iter().copied().filter(|&x| s.is_distinguished(x)).collect();
        if ds.len() != 1 {
            return Some(json!({"cell": cell.iter().map(|&x| name(x)).collect::<Vec<_>>(), "distinguished": ds.len()}));
        }
        let d = ds[0];
        cell.iter()
            .find(|&&a| s.gamma_idx(tr(a), a, d) == 0)
            .map(|&a| json!({"a": name(a), "d": name(d)}))
    }));
    rep.push(PropertyCheck::scan("Q14", m, |a| {
        (!cells.two_sided.equivalent(a, tr(a))).then(|| json!({"a": name(a)}))
    }));
    rep.push(check_q15(s));

    rep.push(PropertyCheck::scan("left-right-intersection", m * m, |k| {
        let (a, b) = (k / m, k % m);
        (a != b && cells.left.equivalent(a, b) && cells.right.equivalent(a, b))
            .then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(PropertyCheck::scan("sigma-monotone", m * m, |k| {
        let (a, b) = (k / m, k % m);
        let (x, y) = (s.sigma_idx(a), s.sigma_idx(b));
        let hc = h.cells();
        let bad = (cells.left.leq(a, b) && !hc.left.leq(x, y))
            || (cells.right.leq(a, b) && !hc.right.leq(x, y))
            || (cells.two_sided.leq(a, b) && !hc.two_sided.leq(x, y));
        bad.then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(PropertyCheck::scan("cell-shape-constancy", m * m, |k| {
        let (a, b) = (k / m, k % m);
        let bad = (cells.left.leq(a, b) && s.co_idx(a) != s.co_idx(b))
            || (cells.right.leq(a, b) && s.ro_idx(a) != s.ro_idx(b));
        bad.then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(check_maximal_rep_closure(s));
    rep.push(PropertyCheck::scan("right-preorder-characterization", m * m, |k| {
        let (a, b) = (k / m, k % m);
        let direct = (0..m).any(|c| s.f_is_nonzero(b, c, a));
        let via_transpose = (0..m).any(|c| s.f_is_nonzero(c, tr(b), tr(a)));
        (direct != via_transpose).then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(PropertyCheck::from_witness(
        "distinguished-cell-sizes",
        dset.len() as u64,
        {
            let total: usize = dset
                .iter()
                .map(|&d| cells.left.classes()[cells.left.class_of(d)].len())
                .sum();
            (total != m).then(|| json!({"sum": total, "dim": m}))
        },
    ));
    rep.push(PropertyCheck::from_witness("two-sided-cell-count", 1, {
        let (got, want) = (cells.two_sided.classes().len(), s.partition_count());
        (got != want).then(|| json!({"twoSidedCells": got, "partitions": want}))
    }));
    rep.push(check_cell_modules(s));
    rep
}

fn add_scaled(acc: &mut BTreeMap<usize, IntLaurent>, coeff: &IntLaurent, v: &SparseCoords) {
    for (c, f) in v {
        let e = acc.entry(*c).or_default();
        *e += &(coeff * f);
    }
}

fn check_associativity(s: &QSchurAlgebra) -> PropertyCheck {
    let m = s.dim();
    PropertyCheck::scan("associativity", m * m * m, |k| {
        let (a, b, c) = (k / (m * m), k / m % m, k % m);
        if s.co_idx(a) != s.ro_idx(b) || s.co_idx(b) != s.ro_idx(c) {
            return None;
        }
        let mut left = BTreeMap::new();
        for (x, f) in s.product(a, b) {
            add_scaled(&mut left, f, s.product(*x, c));
        }
        let mut right = BTreeMap::new();
        for (y, f) in s.product(b, c) {
            add_scaled(&mut right, f, s.product(a, *y));
        }
        left.retain(|_, v| !v.is_zero());
        right.retain(|_, v| !v.is_zero());
        (left != right).then(|| json!({"a": s.name(a), "b": s.name(b), "c": s.name(c)}))
    })
}

/// Q15 for `a(c) = a(b)`:
/// `sum_{b'} f'_{c,a',b'} f_{a,b',b} = sum_{b'} f_{a,c,b'} f'_{b',a',b}`.
fn check_q15(s: &QSchurAlgebra) -> PropertyCheck {
    let m = s.dim();
    PropertyCheck::scan("Q15", m * m * m, |k| {
        let (a, c, ap) = (k / (m * m), k / m % m, k % m);
        let side = |pairs: &mut dyn Iterator<Item = (usize, &IntLaurent, &IntLaurent)>| {
            let mut acc: BTreeMap<usize, BivariatePoly> = BTreeMap::new();
            for (b, in_v, in_v_prime) in pairs {
                if s.a_idx(b) == s.a_idx(c) {
                    acc.entry(b).or_default().add_outer_int(in_v, in_v_prime);
                }
            }
            acc.retain(|_, p| !p.is_zero());
            acc
        };
        let lhs = side(&mut s.product(c, ap).iter().flat_map(|(bp, fp)| {
            s.product(a, *bp).iter().map(move |(b, fv)| (*b, fv, fp))
        }));
        let rhs = side(&mut s.product(a, c).iter().flat_map(|(bp, fv)| {
            s.product(*bp, ap).iter().map(move |(b, fp)| (*b, fv, fp))
        }));
        (lhs != rhs).then(|| json!({"a": s.name(a), "c": s.name(c), "aPrime": s.name(ap)}))
    })
}

/// For `x, y` longest in their `W_lambda`-`W_mu` and `W_mu`-`W_nu` double
/// cosets, every `z` with `g_{x,y,z} != 0` is longest in its
/// `W_lambda`-`W_nu` double coset.
fn check_maximal_rep_closure(s: &QSchurAlgebra) -> PropertyCheck {
    let nc = s.compositions().len();
    let h = s.hecke();
    let maximal = |l: usize, r: usize| -> Vec<usize> {
        s.block(l, r).iter().map(|&a| s.sigma_idx(a)).collect()
    };
    PropertyCheck::scan("maximal-rep-closure", nc * nc * nc, |k| {
        let (l, mu, nu) = (k / (nc * nc), k / nc % nc, k % nc);
        let target = maximal(l, nu);
        for x in maximal(l, mu) {
            for y in maximal(mu, nu) {
                if let Some((z, _)) = h.product(x, y).iter().find(|(z, _)| !target.contains(z)) {
                    return Some(json!({
                        "x": h.group().element(x).to_string(),
                        "y": h.group().element(y).to_string(),
                        "z": h.group().element(*z).to_string(),
                        "lambda": s.compositions()[l].to_string(),
                        "mu": s.compositions()[mu].to_string(),
                        "nu": s.compositions()[nu].to_string(),
                    }));
                }
            }
        }
        None
    })
}

/// `action(b) action(b') = sum_c f_{b,b',c} action(c)` on every left cell
/// module, plus `chi(1) = |Gamma|`.
fn check_cell_modules(s: &QSchurAlgebra) -> PropertyCheck {
    let m = s.dim();
    let cells = s.left_cells();
    let mut checked = 0u64;
    for k in 0..cells.len() {
        let module = CellModule::of_left_cell(s, k);
        let dim = module.dim();
        let actions: Vec<Matrix<IntLaurent>> = (0..m).map(|b| module.action(b)).collect();
        let mut one = IntLaurent::zero();
        for e in s.identity_indices() {
            one += &module.character(e);
        }
        checked += 1;
        if one != IntLaurent::monomial(dim as i64, 0) {
            return PropertyCheck::from_witness(
                "cell-module-functoriality",
                checked,
                Some(json!({"cell": k, "chiOne": one.to_string()})),
            );
        }
        let found = PropertyCheck::scan("cell-module-functoriality", m * m, |p| {
            let (b, bp) = (p / m, p % m);
            if s.co_idx(b) != s.ro_idx(bp) {
                return None;
            }
            let lhs = int_mat_mul(&actions[b], &actions[bp]);
            let mut rhs = Matrix::filled(dim, dim, IntLaurent::zero());
            for (c, f) in s.product(b, bp) {
                for i in 0..dim {
                    for j in 0..dim {
                        let add = rhs.get(i, j) + &(f * actions[*c].get(i, j));
                        rhs.set(i, j, add);
                    }
                }
            }
            (lhs != rhs).then(|| json!({"cell": k, "b": s.name(b), "bPrime": s.name(bp)}))
        });
        checked += found.checked;
        if !found.passed() {
            return PropertyCheck { checked, ..found };
        }
    }
    PropertyCheck::from_witness("cell-module-functoriality", checked, None)
}
