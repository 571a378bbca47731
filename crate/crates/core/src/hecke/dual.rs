//! The basis dual to the C-basis under `tau_H(T_w) = delta_{w,e}`.
//!
//! Indexing follows the T-basis, whose dual partner of `T_y` is `T_{y^-1}`:
//! `D_w` is the element with `tau_H(C_x D_w) = delta_{x, w^-1}`.

use serde_json::json;

use super::{HeckeAlgebra, HeckeBasis, HeckeElement};
use crate::arith::RationalFunction;
use crate::linalg::{inverse, LinalgError, Matrix};
use crate::report::{PropertyCheck, SuiteReport};
use crate::weyl::Permutation;

#[derive(Clone, Debug)]
pub struct StandardDual {
    gram: Matrix<RationalFunction>,
    gram_inv: Matrix<RationalFunction>,
}

impl StandardDual {
    /// Inverts the Gram matrix `(tau_H(C_x C_y))`.
    pub fn new(h: &HeckeAlgebra) -> Result<Self, LinalgError> {
        let n = h.order();
        let tau_c: Vec<_> = (0..n).map(|z| h.kl_idx(0, z)).collect();
        let gram = Matrix::from_fn(n, n, |x, y| {
            let mut acc = crate::arith::IntLaurent::zero();
            for (z, g) in h.product(x, y) {
                acc += &(g * &tau_c[*z]);
            }
            RationalFunction::from_laurent(acc.to_laurent())
        });
        let gram_inv = inverse(&gram)?;
        Ok(Self { gram, gram_inv })
    }

    pub fn gram(&self) -> &Matrix<RationalFunction> {
        &self.gram
    }

    /// `D_w` in C-coordinates.
    pub fn dual_idx(&self, h: &HeckeAlgebra, w: usize) -> HeckeElement {
        let partner = h.group().inverse(w);
        HeckeElement {
            basis: HeckeBasis::C,
            coords: self.gram_inv.row(partner).to_vec(),
        }
    }

    pub fn standard_dual_basis(&self, h: &HeckeAlgebra, w: &Permutation) -> HeckeElement {
        self.dual_idx(h, h.group().index_of(w))
    }

    /// `C_x D_{y^-1}` in C-coordinates.
    pub fn cell_product(&self, h: &HeckeAlgebra, x: usize, y: usize) -> HeckeElement {
        let mut cx = HeckeElement::zero(HeckeBasis::C, h.order());
        cx.coords[x] = RationalFunction::one();
        h.multiply(&cx, &self.dual_idx(h, h.group().inverse(y)))
    }

    /// Duality on all pairs, and: whenever `x ~L y`, `z ~L w`, `x ~R z` and
    /// `y ~R w`, the products `C_x D_{y^-1}` and `C_z D_{w^-1}` coincide, and so
    /// do `g_{u,x,y}` and `g_{u,z,w}` for every `u`.
    pub fn verify(&self, h: &HeckeAlgebra) -> SuiteReport {
        let n = h.order();
        let g = h.group();
        let name = |i: usize| g.element(i).to_string();
        let mut rep = SuiteReport::new("hecke-dual");
        rep.push(PropertyCheck::scan("dual-pairing", n * n, |k| {
            let (x, w) = (k / n, k % n);
            let mut cx = HeckeElement::zero(HeckeBasis::C, n);
            cx.coords[x] = RationalFunction::one();
            let t = h.trace(&h.multiply(&cx, &self.dual_idx(h, w)));
            let expect = if x == g.inverse(w) {
                RationalFunction::one()
            } else {
                RationalFunction::zero()
            };
            (t != expect).then(|| json!({"x": name(x), "w": name(w), "tau": t.to_string()}))
        }));

        let cells = h.cells();
        let mut quads = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if !cells.left.equivalent(x, y) {
                    continue;
                }
                for z in 0..n {
                    if !cells.right.equivalent(x, z) {
                        continue;
                    }
                    for w in 0..n {
                        if cells.left.equivalent(z, w) && cells.right.equivalent(y, w) {
                            quads.push((x, y, z, w));
                        }
                    }
                }
            }
        }
        let products: Vec<Vec<Option<HeckeElement>>> = {
            let mut table = vec![vec![None; n]; n];
            for &(x, y, z, w) in &quads {
                for (p, q) in [(x, y), (z, w)] {
                    if table[p][q].is_none() {
                        table[p][q] = Some(self.cell_product(h, p, q));
                    }
                }
            }
            table
        };
        rep.push(PropertyCheck::scan("cell-product-equality", quads.len(), |k| {
            let (x, y, z, w) = quads[k];
            let same_elements = products[x][y] == products[z][w];
            let same_constants = (0..n).all(|u| h.g_idx(u, x, y) == h.g_idx(u, z, w));
            (!(same_elements && same_constants))
                .then(|| json!({"x": name(x), "y": name(y), "z": name(z), "w": name(w)}))
        }));
        rep
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_dual_by_hand() {
        // Gram = [[1, v^-1], [v^-1, 1 + v^-2]], determinant 1.
        let h = HeckeAlgebra::new(2);
        let d = StandardDual::new(&h).unwrap();
        let e = Permutation::identity(2);
        let s = Permutation::from_word(2, &[1]).unwrap();
        let de = d.standard_dual_basis(&h, &e);
        let rf = |s: &str| RationalFunction::parse(s).unwrap();
        assert_eq!(de.coords, vec![rf("(1 + v^-2)/(1)"), rf("(-v^-1)/(1)")]);
        let ds = d.standard_dual_basis(&h, &s);
        assert_eq!(ds.coords, vec![rf("(-v^-1)/(1)"), RationalFunction::one()]);
    }

    #[test]
    fn s3_valid_instance() {
        let h = HeckeAlgebra::new(3);
        let d = StandardDual::new(&h).unwrap();
        let g = h.group();
        let p = |w: &[usize]| g.index_of(&Permutation::from_word(3, w).unwrap());
        // x = y = s1, z = w = s1s2: C_{s1} D_{s1} = C_{s1s2} D_{s2s1}.
        let lhs = d.cell_product(&h, p(&[1]), p(&[1]));
        let rhs = d.cell_product(&h, p(&[1, 2]), p(&[1, 2]));
        assert_eq!(lhs, rhs);
        assert!(d.verify(&h).all_pass());
    }
}
