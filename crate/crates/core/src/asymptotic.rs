//! The asymptotic algebra J(n, r) with `t_a t_b = sum_c gamma_{a,b,c^t} t_c`
//! and the homomorphism `Phi : S_q(n, r) -> J(n, r)_A`,
//! `Phi(theta_a) = sum_{d in D(n,r), d ~L b} f_{a,d,b} t_b`.

use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::arith::{IntLaurent, RationalFunction};
use crate::celltrace::WedderburnData;
use crate::linalg::{determinant, Matrix};
use crate::qschur::{QSchurAlgebra, QSchurElement};
use crate::report::{PropertyCheck, SuiteReport};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum AsymptoticError {
    #[error("sum of t_d over D(n,r) is not a two-sided identity (fails at {0})")]
    IdentityCheckFailed(String),
}

/// An element of `J(n, r)_K` in t-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymptoticElement {
    pub coords: Vec<RationalFunction>,
}

impl AsymptoticElement {
    pub fn zero(dim: usize) -> Self {
        Self {
            coords: vec![RationalFunction::zero(); dim],
        }
    }

    pub fn basis(dim: usize, a: usize) -> Self {
        let mut x = Self::zero(dim);
        x.coords[a] = RationalFunction::one();
        x
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &RationalFunction)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    /// True when every coefficient lies in A.
    pub fn is_in_a(&self) -> bool {
        self.coords.iter().all(|c| c.is_in_a())
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coords
            .iter()
            .all(|c| c.as_laurent().is_some_and(|p| p.is_zero() || (p.min_exp() == Some(0) && p.max_exp() == Some(0) && c.is_in_a())))
    }
}

#[derive(Clone, Debug)]
pub struct AsymptoticAlgebra<'a> {
    algebra: &'a QSchurAlgebra,
    /// `products[a][b]`: sparse `(c, gamma_{a,b,c^t})`.
    products: Vec<Vec<Vec<(usize, i64)>>>,
    /// Rows t-basis, columns theta-basis.
    phi: Matrix<IntLaurent>,
}

impl<'a> AsymptoticAlgebra<'a> {
    pub fn new(algebra: &'a QSchurAlgebra) -> Result<Self, AsymptoticError> {
        let m = algebra.dim();
        let products: Vec<Vec<Vec<(usize, i64)>>> = (0..m)
            .into_par_iter()
            .map(|a| {
                (0..m)
                    .map(|b| {
                        (0..m)
                            .filter_map(|c| {
                                let g = algebra.gamma_idx(a, b, algebra.transpose_idx(c));
                                (g != 0).then_some((c, g))
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let phi = Matrix::from_fn(m, m, |b, a| {
            let mut t = IntLaurent::zero();
            for &d in algebra.distinguished_idx() {
                if algebra.cells().left.equivalent(d, b) {
                    t += &algebra.f_idx(a, d, b);
                }
            }
            t
        });
        let alg = Self {
            algebra,
            products,
            phi,
        };
        let one = alg.identity();
        for a in 0..m {
            let t = AsymptoticElement::basis(m, a);
            if alg.multiply(&one, &t) != t || alg.multiply(&t, &one) != t {
                return Err(AsymptoticError::IdentityCheckFailed(algebra.name(a)));
            }
        }
        Ok(alg)
    }

    pub fn algebra(&self) -> &'a QSchurAlgebra {
        self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// `t_a t_b` as sparse integer coordinates.
    pub fn product(&self, a: usize, b: usize) -> &[(usize, i64)] {
        &self.products[a][b]
    }

    pub fn multiply(&self, x: &AsymptoticElement, y: &AsymptoticElement) -> AsymptoticElement {
        let mut out = AsymptoticElement::zero(self.dim());
        let ys: Vec<(usize, &RationalFunction)> = y.support().collect();
        for (a, ca) in x.support() {
            for &(b, cb) in &ys {
                let prod = &self.products[a][b];
                if prod.is_empty() {
                    continue;
                }
                let cab = ca * cb;
                for &(c, g) in prod {
                    out.coords[c] = &out.coords[c] + &(&cab * &RationalFunction::from_int(g));
                }
            }
        }
        out
    }

    /// `sum_{d in D(n,r)} t_d`.
    pub fn identity(&self) -> AsymptoticElement {
        let mut x = AsymptoticElement::zero(self.dim());
        for &d in self.algebra.distinguished_idx() {
            x.coords[d] = RationalFunction::one();
        }
        x
    }

    /// The matrix of Phi: entry `(b, a)` is the `t_b`-coefficient of `Phi(theta_a)`.
    pub fn phi_matrix(&self) -> &Matrix<IntLaurent> {
        &self.phi
    }

    pub fn phi(&self, x: &QSchurElement) -> AsymptoticElement {
        let m = self.dim();
        let mut out = AsymptoticElement::zero(m);
        for (a, c) in x.support() {
            for b in 0..m {
                let p = self.phi.get(b, a);
                if !p.is_zero() {
                    out.coords[b] = &out.coords[b] + &(c * &RationalFunction::from_laurent(p.to_laurent()));
                }
            }
        }
        out
    }

    /// `Phi(theta_a)` from the sum over `d in D(n,r)_{co(a)}` with `a(d) = a(b)`.
    pub fn phi_theta_by_a_values(&self, a: usize) -> AsymptoticElement {
        let s = self.algebra;
        let m = self.dim();
        let mut out = AsymptoticElement::zero(m);
        for b in 0..m {
            let mut t = IntLaurent::zero();
            for &d in s.distinguished_idx() {
                if s.ro_idx(d) == s.co_idx(a) && s.a_idx(d) == s.a_idx(b) {
                    t += &s.f_idx(a, d, b);
                }
            }
            out.coords[b] = RationalFunction::from_laurent(t.to_laurent());
        }
        out
    }

    /// `det Phi`, as the product of the determinants of its diagonal blocks
    /// `(ro, co) = (lambda, mu)`; `None` if Phi mixes blocks.
    pub fn phi_determinant(&self) -> Option<RationalFunction> {
        let s = self.algebra;
        let m = self.dim();
        for b in 0..m {
            for a in 0..m {
                let same = s.ro_idx(a) == s.ro_idx(b) && s.co_idx(a) == s.co_idx(b);
                if !same && !self.phi.get(b, a).is_zero() {
                    return None;
                }
            }
        }
        let nc = s.compositions().len();
        let mut det = RationalFunction::one();
        for l in 0..nc {
            for mu in 0..nc {
                let block = s.block(l, mu);
                if block.is_empty() {
                    continue;
                }
                let sub = self.phi.select(block, block).map(|p| RationalFunction::from_laurent(p.to_laurent()));
                det = &det * &determinant(&sub).expect("square block");
            }
        }
        Some(det)
    }
}

pub fn verify_properties(j: &AsymptoticAlgebra) -> SuiteReport {
    let s = j.algebra();
    let m = j.dim();
    let name = |a: usize| s.name(a);
    let t = |a: usize| AsymptoticElement::basis(m, a);
    let mut rep = SuiteReport::new("asymptotic");

    rep.push(PropertyCheck::scan("j-associativity", m * m * m, |k| {
        let (a, b, c) = (k / (m * m), k / m % m, k % m);
        let mut left = std::collections::BTreeMap::new();
        for &(x, g) in j.product(a, b) {
            for &(y, h) in j.product(x, c) {
                *left.entry(y).or_insert(0i64) += g * h;
            }
        }
        let mut right = std::collections::BTreeMap::new();
        for &(x, g) in j.product(b, c) {
            for &(y, h) in j.product(a, x) {
                *right.entry(y).or_insert(0i64) += g * h;
            }
        }
        left.retain(|_, v| *v != 0);
        right.retain(|_, v| *v != 0);
        (left != right).then(|| json!({"a": name(a), "b": name(b), "c": name(c)}))
    }));
    rep.push(PropertyCheck::scan("j-identity", m, |a| {
        let one = j.identity();
        (j.multiply(&one, &t(a)) != t(a) || j.multiply(&t(a), &one) != t(a)).then(|| json!({"a": name(a)}))
    }));
    rep.push(PropertyCheck::scan("j-products-are-basis-or-zero", m * m, |k| {
        let (a, b) = (k / m, k % m);
        let p = j.product(a, b);
        (p.len() > 1 || p.iter().any(|&(_, g)| g != 1)).then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(PropertyCheck::scan("phi-integrality", m, |a| {
        (!j.phi(&s.theta(a)).is_in_a()).then(|| json!({"a": name(a)}))
    }));
    rep.push(PropertyCheck::from_witness("phi-unital", 1, {
        (j.phi(&s.identity()) != j.identity()).then(|| json!({"failure": "Phi(1) is not the identity of J"}))
    }));
    rep.push(PropertyCheck::scan("phi-homomorphism", m * m, |k| {
        let (a, b) = (k / m, k % m);
        let lhs = j.phi(&s.multiply(&s.theta(a), &s.theta(b)));
        let rhs = j.multiply(&j.phi(&s.theta(a)), &j.phi(&s.theta(b)));
        (lhs != rhs).then(|| json!({"a": name(a), "b": name(b)}))
    }));
    rep.push(PropertyCheck::scan("phi-two-formulas", m, |a| {
        (j.phi(&s.theta(a)) != j.phi_theta_by_a_values(a)).then(|| json!({"a": name(a)}))
    }));
    rep.push(PropertyCheck::from_witness("phi-determinant-nonzero", 1, {
        match j.phi_determinant() {
            None => Some(json!({"failure": "Phi is not block diagonal by shape"})),
            Some(d) if d.is_zero() => Some(json!({"failure": "det Phi = 0"})),
            Some(_) => None,
        }
    }));
    rep
}

/// `Phi(B_c) = t_c` for every Wedderburn basis element, the structure
/// constants of B equal those of J, and `Phi(theta_a) = sum_c m_{a,c} t_c`.
pub fn verify_preimages(j: &AsymptoticAlgebra, w: &WedderburnData) -> SuiteReport {
    let s = j.algebra();
    let m = j.dim();
    let name = |a: usize| s.name(a);
    let mut rep = SuiteReport::new("asymptotic-preimages");
    rep.push(PropertyCheck::scan("phi-preimages", m, |c| {
        (j.phi(w.basis_element(c)) != AsymptoticElement::basis(m, c)).then(|| json!({"c": name(c)}))
    }));
    rep.push(PropertyCheck::scan("wedderburn-matches-j", m * m, |k| {
        let (c, c2) = (k / m, k % m);
        let prod = s.multiply(w.basis_element(c), w.basis_element(c2));
        let mut want = QSchurElement::zero(m);
        for &(x, g) in j.product(c, c2) {
            want = want.add(&w.basis_element(x).scale(&RationalFunction::from_int(g)));
        }
        (prod != want).then(|| json!({"c": name(c), "cPrime": name(c2)}))
    }));
    rep.push(PropertyCheck::scan("diagram-commutes", m, |a| {
        let mut via_b = AsymptoticElement::zero(m);
        for c in 0..m {
            via_b.coords[c] = w.change_of_basis().get(a, c).clone();
        }
        (j.phi(&s.theta(a)) != via_b).then(|| json!({"a": name(a)}))
    }));
    rep
}

/// The t-images of the Wedderburn bases of two trace forms coincide.
pub fn verify_form_independence(j: &AsymptoticAlgebra, w1: &WedderburnData, w2: &WedderburnData) -> PropertyCheck {
    let m = j.dim();
    PropertyCheck::scan("phi-preimages-form-independence", m, |c| {
        (j.phi(w1.basis_element(c)) != j.phi(w2.basis_element(c))).then(|| json!({"c": j.algebra().name(c)}))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_terms() {
        for (n, r, terms) in [(1, 1, 1), (2, 2, 4), (2, 3, 6)] {
            let s = QSchurAlgebra::new(n, r).unwrap();
            let j = AsymptoticAlgebra::new(&s).unwrap();
            assert_eq!(j.identity().support().count(), terms);
        }
    }

    #[test]
    fn distinguished_idempotents() {
        let s = QSchurAlgebra::new(2, 2).unwrap();
        let j = AsymptoticAlgebra::new(&s).unwrap();
        for &d in s.distinguished_idx() {
            assert_eq!(j.product(d, d), &[(d, 1)]);
        }
    }

    #[test]
    fn phi_determinant_nonzero() {
        let s = QSchurAlgebra::new(2, 2).unwrap();
        let j = AsymptoticAlgebra::new(&s).unwrap();
        assert!(!j.phi_determinant().unwrap().is_zero());
    }
}
