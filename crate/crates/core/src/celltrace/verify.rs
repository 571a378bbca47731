//! Exhaustive checks of the trace-form constructions: duality, matrix
//! units, idempotents, the Wedderburn product law, and `M` and `D`.

use rayon::prelude::*;
use serde_json::json;

use super::WedderburnData;
use crate::arith::RationalFunction;
use crate::qschur::QSchurElement;
use crate::report::{PropertyCheck, SuiteReport};

fn delta(i: usize, j: usize) -> RationalFunction {
    if i == j {
        RationalFunction::one()
    } else {
        RationalFunction::zero()
    }
}

fn rf(x: &RationalFunction) -> String {
    x.to_string()
}

pub fn verify_properties(w: &WedderburnData) -> SuiteReport {
    let s = w.algebra();
    let m = s.dim();
    let name = |a: usize| s.name(a);
    let tau = |x: &QSchurElement| w.form().tau(x);
    let theta = |a: usize| s.theta(a);
    let mul = |x: &QSchurElement, y: &QSchurElement| s.multiply(x, y);
    let mut rep = SuiteReport::new("celltrace");

    // theta_b theta_c^dual and theta_b^dual theta_c, indexed by b * m + c.
    let theta_dual: Vec<QSchurElement> = (0..m * m)
        .into_par_iter()
        .map(|k| mul(&theta(k / m), w.dual(k % m)))
        .collect();
    let dual_theta: Vec<QSchurElement> = (0..m * m)
        .into_par_iter()
        .map(|k| mul(w.dual(k / m), &theta(k % m)))
        .collect();

    rep.push(PropertyCheck::from_witness("dim-squares-sum", 1, {
        let total: usize = w.classes().iter().map(|c| c.dim * c.dim).sum();
        (total != m).then(|| json!({"sum": total, "dim": m}))
    }));
    rep.push(PropertyCheck::from_witness("class-dim-equals-cell-count", w.classes().len() as u64, {
        w.classes()
            .iter()
            .position(|c| c.dim != c.left_cells.len())
            .map(|k| json!({"class": k}))
    }));
    rep.push(PropertyCheck::scan("tau-symmetry", m * m, |k| {
        let (a, b) = (k / m, k % m);
        (w.gram().get(a, b) != w.gram().get(b, a)).then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(PropertyCheck::scan("dual-pairing", m * m, |k| {
        let (a, b) = (k / m, k % m);
        let left = tau(&theta_dual[a * m + b]);
        let right = tau(&dual_theta[b * m + a]);
        (left != delta(a, b) || right != delta(a, b))
            .then(|| json!({"a": name(a), "b": name(b), "tau": rf(&left), "tauSwapped": rf(&right)}))
    }));
    rep.push(PropertyCheck::scan("dual-gram-inverse", m * m, |k| {
        let (a, b) = (k / m, k % m);
        let t = tau(&mul(w.dual(a), w.dual(b)));
        (&t != w.gram_inv().get(a, b)).then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(PropertyCheck::scan("expansion-formula", m + 3, |k| {
        let x = if k < m { theta(k) } else { sample_element(m, k - m) };
        let mut back = QSchurElement::zero(m);
        for a in 0..m {
            let c = tau(&mul(&x, w.dual(a)));
            if !c.is_zero() {
                back.coords[a] = c;
            }
        }
        (back != x).then(|| json!({"sample": k}))
    }));
    rep.push(PropertyCheck::scan("f-via-trace", m * m * m, |k| {
        let (a, b, c) = (k / (m * m), k / m % m, k % m);
        let y = &theta_dual[b * m + c];
        let mut t = RationalFunction::zero();
        for (x, yx) in y.support() {
            let p = w.gram().get(a, x);
            if !p.is_zero() {
                t = &t + &(yx * p);
            }
        }
        let f = RationalFunction::from_laurent(s.f_idx(a, b, c).to_laurent());
        (t != f).then(|| json!({"a": name(a), "b": name(b), "c": name(c)}))
    }));
    rep.push(PropertyCheck::scan("preorders-via-duals", m * m, |k| {
        let (a, b) = (k / m, k % m);
        let left = !theta_dual[b * m + a].is_zero();
        let right = !dual_theta[a * m + b].is_zero();
        (left != s.cells().left.leq(a, b) || right != s.cells().right.leq(a, b))
            .then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(PropertyCheck::scan("dual-module-integrality", m * m * m, |k| {
        let (a, b, c) = (k / (m * m), k / m % m, k % m);
        let y = &dual_theta[b * m + c];
        let mut t = RationalFunction::zero();
        for (x, yx) in y.support() {
            let p = w.gram().get(a, x);
            if !p.is_zero() {
                t = &t + &(yx * p);
            }
        }
        (!t.is_in_a()).then(|| json!({"a": name(a), "b": name(b), "c": name(c), "tau": rf(&t)}))
    }));

    let cells = s.left_cells();
    rep.push(PropertyCheck::scan("matrix-units", cells.len(), |k| {
        let cell = &cells[k];
        let units: Vec<Vec<QSchurElement>> = cell
            .iter()
            .map(|&a| cell.iter().map(|&b| w.matrix_unit(a, b)).collect())
            .collect();
        let g = cell.len();
        for i in 0..g {
            for j in 0..g {
                for i2 in 0..g {
                    for j2 in 0..g {
                        let prod = mul(&units[i][j], &units[i2][j2]);
                        let want = if j == i2 { units[i][j2].clone() } else { QSchurElement::zero(m) };
                        if prod != want {
                            return Some(json!({"cell": k, "a": name(cell[i]), "b": name(cell[j]),
                                               "aPrime": name(cell[i2]), "bPrime": name(cell[j2])}));
                        }
                    }
                }
            }
        }
        None
    }));
    let idempotents: Vec<QSchurElement> = (0..cells.len()).map(|k| w.central_idempotent(k)).collect();
    rep.push(PropertyCheck::scan("central-idempotents", cells.len(), |k| {
        let e = &idempotents[k];
        if mul(e, e) != *e {
            return Some(json!({"cell": k, "failure": "not idempotent"}));
        }
        if let Some(b) = (0..m).find(|&b| mul(e, &theta(b)) != mul(&theta(b), e)) {
            return Some(json!({"cell": k, "failure": "not central", "b": name(b)}));
        }
        let cell = &cells[k];
        for &a in cell {
            let ea = mul(e, &theta(a));
            for &b in cell {
                if tau(&mul(w.dual(b), &ea)) != delta(a, b) {
                    return Some(json!({"cell": k, "failure": "not identity on cell module", "a": name(a), "b": name(b)}));
                }
            }
        }
        let class = w.class_of(cell[0]);
        let first = w.classes()[class].left_cells[0];
        (idempotents[first] != *e).then(|| json!({"cell": k, "failure": "differs within its class"}))
    }));
    rep.push(PropertyCheck::from_witness("central-idempotents-sum", 1, {
        let mut total = QSchurElement::zero(m);
        for class in w.classes() {
            total = total.add(&idempotents[class.left_cells[0]]);
        }
        (total != s.identity()).then(|| json!({"failure": "sum is not the identity"}))
    }));

    let basis = w.basis();
    rep.push(PropertyCheck::scan("wedderburn-product-law", m * m, |k| {
        let (c, c2) = (k / m, k % m);
        let (d, d2) = (w.distinguished_for(c), w.distinguished_for(c2));
        let prod = mul(&basis[c], &basis[c2]);
        let want = if w.class_of(d) != w.class_of(d2) || !s.cells().right.equivalent(d, c2) {
            QSchurElement::zero(m)
        } else {
            let hits: Vec<usize> = (0..m)
                .filter(|&x| s.cells().left.equivalent(x, d2) && s.cells().right.equivalent(x, c))
                .collect();
            if hits.len() != 1 {
                return Some(json!({"c": name(c), "cPrime": name(c2), "failure": "no unique c''"}));
            }
            basis[hits[0]].clone()
        };
        (prod != want).then(|| json!({"c": name(c), "cPrime": name(c2)}))
    }));
    rep.push(PropertyCheck::scan("wedderburn-dual-pairing", m * m, |k| {
        let (c, c2) = (k / m, k % m);
        let d2 = w.distinguished_for(c2);
        let t = tau(&mul(&basis[c], &theta_dual[c2 * m + d2]));
        (t != delta(c2, s.transpose_idx(c))).then(|| json!({"c": name(c), "cPrime": name(c2), "tau": rf(&t)}))
    }));
    let dset = s.distinguished_idx();
    rep.push(PropertyCheck::scan("idempotent-decomposition", dset.len() * dset.len(), |k| {
        let (d, d2) = (dset[k / dset.len()], dset[k % dset.len()]);
        let prod = mul(&basis[d], &basis[d2]);
        let want = if d == d2 { basis[d].clone() } else { QSchurElement::zero(m) };
        (prod != want).then(|| json!({"d": name(d), "dPrime": name(d2)}))
    }));
    rep.push(PropertyCheck::from_witness("idempotents-sum-to-identity", 1, {
        let mut total = QSchurElement::zero(m);
        for &d in dset {
            total = total.add(&basis[d]);
        }
        (total != s.identity()).then(|| json!({"failure": "sum is not the identity"}))
    }));
    rep.push(PropertyCheck::scan("equal-cell-module-products", m * cells.len(), |k| {
        let (c, g) = (k / cells.len(), k % cells.len());
        let d = w.distinguished_for(c);
        let gamma = &cells[g];
        if w.class_of(gamma[0]) != w.class_of(d) {
            return None;
        }
        let pick = |x: usize| -> Vec<usize> {
            gamma.iter().copied().filter(|&y| s.cells().right.equivalent(y, x)).collect()
        };
        let (a, b) = (pick(c), pick(d));
        if a.len() != 1 || b.len() != 1 {
            return Some(json!({"c": name(c), "cell": g, "failure": "no unique pair"}));
        }
        (theta_dual[a[0] * m + b[0]] != theta_dual[c * m + d])
            .then(|| json!({"c": name(c), "d": name(d), "a": name(a[0]), "b": name(b[0])}))
    }));
    rep.push(PropertyCheck::scan("left-cell-submodules", m * m, |k| {
        let (h, c) = (k / m, k % m);
        let d = w.distinguished_for(c);
        let lhs = mul(&theta(h), &theta_dual[c * m + d]);
        let mut rhs = QSchurElement::zero(m);
        for (c2, f) in s.product(h, c) {
            if s.cells().left.equivalent(*c2, d) {
                let coeff = RationalFunction::from_laurent(f.to_laurent());
                rhs = rhs.add(&theta_dual[c2 * m + d].scale(&coeff));
            }
        }
        (lhs != rhs).then(|| json!({"h": name(h), "c": name(c), "d": name(d)}))
    }));
    rep.push(PropertyCheck::scan("transpose-class-coincidence", m, |c| {
        (w.class_of(c) != w.class_of(s.transpose_idx(c))).then(|| json!({"c": name(c)}))
    }));

    let mm = w.change_of_basis();
    rep.push(PropertyCheck::scan("change-of-basis-integrality", m * m, |k| {
        let (a, c) = (k / m, k % m);
        (!mm.get(a, c).is_in_a()).then(|| json!({"a": name(a), "c": name(c), "m": rf(mm.get(a, c))}))
    }));
    rep.push(PropertyCheck::scan("change-of-basis-formula", m * m, |k| {
        let (a, c) = (k / m, k % m);
        let ct = s.transpose_idx(c);
        let f = RationalFunction::from_laurent(s.f_idx(a, ct, w.distinguished_for(ct)).to_laurent());
        (mm.get(a, c) != &f).then(|| json!({"a": name(a), "c": name(c)}))
    }));
    let dm = w.monomial_d();
    rep.push(PropertyCheck::scan("monomial-schur-entries", m * m, |k| {
        let (c, c2) = (k / m, k % m);
        let want = if c2 == s.transpose_idx(c) {
            w.schur_element(w.distinguished_for(c)).clone()
        } else {
            RationalFunction::zero()
        };
        (dm.get(c, c2) != &want).then(|| json!({"c": name(c), "cPrime": name(c2), "entry": rf(dm.get(c, c2))}))
    }));
    if w.form().all_schur_elements_one() {
        rep.push(PropertyCheck::scan("self-dual-lattice", m * m, |k| {
            let x = dm.get(k / m, k % m);
            (!x.is_zero() && !x.is_one()).then(|| json!({"row": name(k / m), "col": name(k % m)}))
        }));
    }
    rep
}

/// Deterministic dense elements with rational-function coefficients.
fn sample_element(m: usize, seed: usize) -> QSchurElement {
    let coords = (0..m)
        .map(|a| {
            let k = (a * 7 + seed * 3) % 5;
            let text = match k {
                0 => "(0)/(1)".to_string(),
                1 => format!("({} + v)/(1)", a + seed + 1),
                2 => "(1)/(v + v^-1)".to_string(),
                3 => format!("(v^{})/(1 - v^2)", seed + 1),
                _ => format!("(-{})/(v^2 + 1 + v^-2)", a + 1),
            };
            RationalFunction::parse(&text).expect("well-formed sample")
        })
        .collect();
    QSchurElement { coords }
}

/// Compares data built from two trace forms on the same algebra: the
/// Wedderburn basis and `M` are independent of the form, and `D` carries
/// exactly the respective Schur elements.
pub fn compare_forms(w1: &WedderburnData, w2: &WedderburnData) -> SuiteReport {
    let s = w1.algebra();
    let m = s.dim();
    let mut rep = SuiteReport::new("celltrace-rescaling");
    rep.push(PropertyCheck::scan("wedderburn-basis-form-independence", m, |c| {
        (w1.basis_element(c) != w2.basis_element(c)).then(|| json!({"c": s.name(c)}))
    }));
    rep.push(PropertyCheck::scan("change-of-basis-form-independence", m * m, |k| {
        let (a, c) = (k / m, k % m);
        (w1.change_of_basis().get(a, c) != w2.change_of_basis().get(a, c))
            .then(|| json!({"a": s.name(a), "c": s.name(c)}))
    }));
    rep.push(PropertyCheck::scan("schur-rescaling", m * m, |k| {
        let (c, c2) = (k / m, k % m);
        let (x1, x2) = (w1.monomial_d().get(c, c2), w2.monomial_d().get(c, c2));
        if x1.is_zero() != x2.is_zero() {
            return Some(json!({"c": s.name(c), "cPrime": s.name(c2), "failure": "support changed"}));
        }
        if x1.is_zero() {
            return None;
        }
        let class = w1.class_of(c);
        let ratio = (x2 / x1).expect("nonzero");
        let want = (&w2.form().schur_by_class()[class] / &w1.form().schur_by_class()[class]).expect("nonzero");
        (ratio != want).then(|| json!({"c": s.name(c), "cPrime": s.name(c2), "failure": "wrong scale"}))
    }));
    rep
}
