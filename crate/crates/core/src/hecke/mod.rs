//! The Iwahori-Hecke algebra of S_r over Z[v, v^-1].
//!
//! Normalization: `(T_s - v)(T_s + v^-1) = 0`, `C_w = sum_{y <= w} p_{y,w} T_y`
//! with `p_{w,w} = 1` and `p_{y,w} in v^-1 Z[v^-1]` for `y < w`.
//! Every table is computed once in [`HeckeAlgebra::new`]; afterwards the
//! object is read-only.

mod dual;
mod verify;

pub use dual::StandardDual;
pub use verify::{verify_properties, PropertyOptions};

use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{IntLaurent, LaurentPoly, RationalFunction};
use crate::preorder::Preorder;
use crate::weyl::{Permutation, SymmetricGroup};

/// A vector of T-basis (or C-basis) coordinates indexed by group element.
pub type Coords = Vec<IntLaurent>;

/// Sparse coordinates, sorted by group index.
pub type SparseCoords = Vec<(usize, IntLaurent)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum HeckeBasis {
    T,
    C,
}

/// An element of `K tensor H` in one of the two standard bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    pub basis: HeckeBasis,
    pub coords: Vec<RationalFunction>,
}

impl HeckeElement {
    pub fn zero(basis: HeckeBasis, order: usize) -> Self {
        Self {
            basis,
            coords: vec![RationalFunction::zero(); order],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True when every coordinate lies in A.
    pub fn is_in_a(&self) -> bool {
        self.coords.iter().all(|c| c.is_in_a())
    }
}

/// Left, right and two-sided cell preorders of W, on group indices.
#[derive(Clone, Debug)]
pub struct CellData {
    pub left: Preorder,
    pub right: Preorder,
    pub two_sided: Preorder,
}

#[derive(Clone, Debug)]
pub struct HeckeAlgebra {
    group: SymmetricGroup,
    /// `kl[w]` lists `(y, p_{y,w})` for all `y <= w`.
    kl: Vec<SparseCoords>,
    /// `products[x][y]` is `C_x C_y` in the C-basis.
    products: Vec<Vec<SparseCoords>>,
    a: Vec<i32>,
    delta: Vec<i32>,
    /// `gamma[(x * n + y) * n + z]`.
    gamma: Vec<i64>,
    distinguished: Vec<usize>,
    cells: CellData,
}

fn v_minus_v_inv() -> IntLaurent {
    IntLaurent::from_terms(&[(-1, -1), (1, 1)])
}

fn lookup(sparse: &SparseCoords, i: usize) -> Option<&IntLaurent> {
    sparse
        .binary_search_by_key(&i, |(j, _)| *j)
        .ok()
        .map(|k| &sparse[k].1)
}

fn to_sparse(dense: Coords) -> SparseCoords {
    dense
        .into_iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .collect()
}

impl HeckeAlgebra {
    pub fn new(r: usize) -> Self {
        let group = SymmetricGroup::new(r.max(1));
        let kl = compute_kl(&group);
        let products = compute_products(&group, &kl);
        let n = group.order();

        let mut a = vec![0i32; n];
        for row in &products {
            for prod in row {
                for (z, g) in prod {
                    a[*z] = a[*z].max(g.max_exp().unwrap());
                }
            }
        }
        let delta: Vec<i32> = (0..n)
            .map(|z| -lookup(&kl[z], 0).unwrap().max_exp().unwrap())
            .collect();

        let mut gamma = vec![0i64; n * n * n];
        for x in 0..n {
            for y in 0..n {
                for (z_inv, g) in &products[x][y] {
                    let z = group.inverse(*z_inv);
                    gamma[(x * n + y) * n + z] = g.coeff(a[*z_inv]);
                }
            }
        }
        let distinguished = (0..n).filter(|&d| a[d] == delta[d]).collect();

        let gens: Vec<usize> = group.generators().map(|s| group.simple(s)).collect();
        let mut left_pairs = Vec::new();
        let mut right_pairs = Vec::new();
        for w in 0..n {
            for &s in &gens {
                left_pairs.extend(products[s][w].iter().map(|(y, _)| (*y, w)));
                right_pairs.extend(products[w][s].iter().map(|(y, _)| (*y, w)));
            }
        }
        let left = Preorder::from_relation(n, left_pairs);
        let right = Preorder::from_relation(n, right_pairs);
        let two_sided = left.join(&right);

        Self {
            group,
            kl,
            products,
            a,
            delta,
            gamma,
            distinguished,
            cells: CellData {
                left,
                right,
                two_sided,
            },
        }
    }

    pub fn group(&self) -> &SymmetricGroup {
        &self.group
    }

    pub fn rank(&self) -> usize {
        self.group.rank()
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    fn idx(&self, w: &Permutation) -> usize {
        self.group.index_of(w)
    }

    // ---- index-based queries -------------------------------------------

    /// `p_{y,w}` (zero unless `y <= w`).
    pub fn kl_idx(&self, y: usize, w: usize) -> IntLaurent {
        lookup(&self.kl[w], y).cloned().unwrap_or_default()
    }

    /// `C_w` in T-coordinates, sparse.
    pub fn c_in_t(&self, w: usize) -> &SparseCoords {
        &self.kl[w]
    }

    /// `C_x C_y` in C-coordinates, sparse.
    pub fn product(&self, x: usize, y: usize) -> &SparseCoords {
        &self.products[x][y]
    }

    pub fn g_idx(&self, x: usize, y: usize, z: usize) -> IntLaurent {
        lookup(&self.products[x][y], z).cloned().unwrap_or_default()
    }

    pub fn g_is_nonzero(&self, x: usize, y: usize, z: usize) -> bool {
        lookup(&self.products[x][y], z).is_some()
    }

    pub fn a_idx(&self, z: usize) -> i32 {
        self.a[z]
    }

    pub fn delta_idx(&self, z: usize) -> i32 {
        self.delta[z]
    }

    /// `gamma_{x,y,z}`: coefficient of `v^{a(z^-1)}` in `g_{x,y,z^-1}`.
    pub fn gamma_idx(&self, x: usize, y: usize, z: usize) -> i64 {
        let n = self.order();
        self.gamma[(x * n + y) * n + z]
    }

    pub fn distinguished_idx(&self) -> &[usize] {
        &self.distinguished
    }

    pub fn is_distinguished(&self, d: usize) -> bool {
        self.distinguished.binary_search(&d).is_ok()
    }

    pub fn cells(&self) -> &CellData {
        &self.cells
    }

    // ---- permutation-based queries --------------------------------------

    pub fn kl_polynomial(&self, y: &Permutation, w: &Permutation) -> LaurentPoly {
        self.kl_idx(self.idx(y), self.idx(w)).to_laurent()
    }

    pub fn mu(&self, y: &Permutation, w: &Permutation) -> i64 {
        self.kl_idx(self.idx(y), self.idx(w)).coeff(-1)
    }

    pub fn g_constant(&self, x: &Permutation, y: &Permutation, z: &Permutation) -> LaurentPoly {
        self.g_idx(self.idx(x), self.idx(y), self.idx(z)).to_laurent()
    }

    pub fn a_function(&self, z: &Permutation) -> i32 {
        self.a[self.idx(z)]
    }

    pub fn delta(&self, z: &Permutation) -> i32 {
        self.delta[self.idx(z)]
    }

    pub fn gamma(&self, x: &Permutation, y: &Permutation, z: &Permutation) -> i64 {
        self.gamma_idx(self.idx(x), self.idx(y), self.idx(z))
    }

    pub fn distinguished_involutions(&self) -> Vec<Permutation> {
        self.distinguished
            .iter()
            .map(|&d| self.group.element(d).clone())
            .collect()
    }

    fn cells_as_perms(&self, p: &Preorder) -> Vec<Vec<Permutation>> {
        p.classes()
            .iter()
            .map(|c| c.iter().map(|&i| self.group.element(i).clone()).collect())
            .collect()
    }

    pub fn left_cells(&self) -> Vec<Vec<Permutation>> {
        self.cells_as_perms(&self.cells.left)
    }

    pub fn right_cells(&self) -> Vec<Vec<Permutation>> {
        self.cells_as_perms(&self.cells.right)
    }

    pub fn two_sided_cells(&self) -> Vec<Vec<Permutation>> {
        self.cells_as_perms(&self.cells.two_sided)
    }

    // ---- T-basis arithmetic ---------------------------------------------

    /// `h * T_s` for `h` in T-coordinates.
    pub fn t_times_simple(&self, h: &[IntLaurent], s: usize) -> Coords {
        t_times_simple(&self.group, h, s)
    }

    /// `T_s * h` for `h` in T-coordinates.
    pub fn simple_times_t(&self, s: usize, h: &[IntLaurent]) -> Coords {
        let g = &self.group;
        let mut out = vec![IntLaurent::zero(); g.order()];
        let q = v_minus_v_inv();
        for (w, c) in h.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sw = g.simple_times(s, w);
            out[sw] += c;
            if g.length(sw) < g.length(w) {
                out[w] += &(&q * c);
            }
        }
        out
    }

    /// The bar involution on T-coordinates.
    pub fn bar_t(&self, h: &[IntLaurent]) -> Coords {
        let n = self.order();
        let mut out = vec![IntLaurent::zero(); n];
        for (w, c) in h.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let image = self.bar_of_t(w);
            let cb = c.bar();
            for (y, r) in image.iter().enumerate() {
                if !r.is_zero() {
                    out[y] += &(&cb * r);
                }
            }
        }
        out
    }

    /// `bar(T_w) = T_{w^-1}^-1` in T-coordinates.
    pub fn bar_of_t(&self, w: usize) -> Coords {
        let n = self.order();
        let mut h = vec![IntLaurent::zero(); n];
        h[0] = IntLaurent::one();
        let q = v_minus_v_inv();
        for s in self.group.element(w).reduced_word() {
            let hs = self.t_times_simple(&h, s);
            h = hs
                .iter()
                .zip(&h)
                .map(|(a, b)| a - &(&q * b))
                .collect();
        }
        h
    }

    /// Dense T-coordinates of `C_w`.
    pub fn c_dense(&self, w: usize) -> Coords {
        let mut out = vec![IntLaurent::zero(); self.order()];
        for (y, p) in &self.kl[w] {
            out[*y] = p.clone();
        }
        out
    }

    /// Rewrites T-coordinates in the C-basis (triangular back-substitution).
    pub fn t_to_c(&self, h: &[IntLaurent]) -> Coords {
        t_to_c(&self.kl, h)
    }

    // ---- elements over K --------------------------------------------------

    pub fn c_element(&self, w: &Permutation) -> HeckeElement {
        let mut e = HeckeElement::zero(HeckeBasis::C, self.order());
        e.coords[self.idx(w)] = RationalFunction::one();
        e
    }

    pub fn t_element(&self, w: &Permutation) -> HeckeElement {
        let mut e = HeckeElement::zero(HeckeBasis::T, self.order());
        e.coords[self.idx(w)] = RationalFunction::one();
        e
    }

    pub fn to_t_basis(&self, h: &HeckeElement) -> HeckeElement {
        if h.basis == HeckeBasis::T {
            return h.clone();
        }
        let mut out = HeckeElement::zero(HeckeBasis::T, self.order());
        for (w, c) in h.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (y, p) in &self.kl[w] {
                let term = c * &RationalFunction::from_laurent(p.to_laurent());
                out.coords[*y] = &out.coords[*y] + &term;
            }
        }
        out
    }

    pub fn to_c_basis(&self, h: &HeckeElement) -> HeckeElement {
        if h.basis == HeckeBasis::C {
            return h.clone();
        }
        let mut rem = h.coords.clone();
        let mut out = HeckeElement::zero(HeckeBasis::C, self.order());
        for w in (0..self.order()).rev() {
            if rem[w].is_zero() {
                continue;
            }
            let c = rem[w].clone();
            for (y, p) in &self.kl[w] {
                let term = &c * &RationalFunction::from_laurent(p.to_laurent());
                rem[*y] = &rem[*y] - &term;
            }
            out.coords[w] = c;
        }
        out
    }

    /// Product in the C-basis, through the cached structure constants.
    pub fn multiply(&self, x: &HeckeElement, y: &HeckeElement) -> HeckeElement {
        let xc = self.to_c_basis(x);
        let yc = self.to_c_basis(y);
        let mut out = HeckeElement::zero(HeckeBasis::C, self.order());
        for (i, a) in xc.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in yc.coords.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (z, g) in &self.products[i][j] {
                    let term = &ab * &RationalFunction::from_laurent(g.to_laurent());
                    out.coords[*z] = &out.coords[*z] + &term;
                }
            }
        }
        out
    }

    /// `tau_H(h)`: the coefficient of `T_e`.
    pub fn trace(&self, h: &HeckeElement) -> RationalFunction {
        self.to_t_basis(h).coords[0].clone()
    }
}

fn t_times_simple(g: &SymmetricGroup, h: &[IntLaurent], s: usize) -> Coords {
    let mut out = vec![IntLaurent::zero(); g.order()];
    let q = v_minus_v_inv();
    for (w, c) in h.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let ws = g.times_simple(w, s);
        out[ws] += c;
        if g.length(ws) < g.length(w) {
            out[w] += &(&q * c);
        }
    }
    out
}

fn t_to_c(kl: &[SparseCoords], h: &[IntLaurent]) -> Coords {
    let mut rem = h.to_vec();
    let mut out = vec![IntLaurent::zero(); h.len()];
    for w in (0..h.len()).rev() {
        if rem[w].is_zero() {
            continue;
        }
        let c = std::mem::take(&mut rem[w]);
        for (y, p) in &kl[w] {
            if *y != w {
                rem[*y] -= &(&c * p);
            }
        }
        out[w] = c;
    }
    out
}

/// KL polynomials by the recursion `C_s C_{sw} = C_w + sum mu(z, sw) C_z`
/// over `z < sw` with `sz < z`.
fn compute_kl(g: &SymmetricGroup) -> Vec<SparseCoords> {
    let n = g.order();
    let mut kl: Vec<SparseCoords> = Vec::with_capacity(n);
    kl.push(vec![(0, IntLaurent::one())]);
    let v_inv = IntLaurent::monomial(1, -1);
    let q = v_minus_v_inv();
    for w in 1..n {
        let s = (1..g.rank())
            .find(|&s| g.length(g.simple_times(s, w)) < g.length(w))
            .unwrap();
        let w1 = g.simple_times(s, w);
        let mut h = vec![IntLaurent::zero(); n];
        for (y, p) in &kl[w1] {
            // (T_s + v^-1) p T_y
            let sy = g.simple_times(s, *y);
            h[sy] += p;
            if g.length(sy) < g.length(*y) {
                h[*y] += &(&q * p);
            }
            h[*y] += &(&v_inv * p);
        }
        for (z, p_z) in kl[w1].iter() {
            if *z == w1 {
                continue;
            }
            let mu = p_z.coeff(-1);
            if mu == 0 || g.length(g.simple_times(s, *z)) > g.length(*z) {
                continue;
            }
            for (y, p) in &kl[*z] {
                h[*y] -= &p.scale(mu);
            }
        }
        kl.push(to_sparse(h));
    }
    kl
}

fn compute_products(g: &SymmetricGroup, kl: &[SparseCoords]) -> Vec<Vec<SparseCoords>> {
    let n = g.order();
    (0..n)
        .into_par_iter()
        .map(|x| {
            // right_t[z] = C_x T_z, built along increasing length.
            let mut right_t: Vec<Coords> = Vec::with_capacity(n);
            let mut cx = vec![IntLaurent::zero(); n];
            for (y, p) in &kl[x] {
                cx[*y] = p.clone();
            }
            right_t.push(cx);
            for z in 1..n {
                let s = (1..g.rank())
                    .find(|&s| g.length(g.times_simple(z, s)) < g.length(z))
                    .unwrap();
                let prev = &right_t[g.times_simple(z, s)];
                let next = t_times_simple(g, prev, s);
                right_t.push(next);
            }
            (0..n)
                .map(|y| {
                    let mut h = vec![IntLaurent::zero(); n];
                    for (z, p) in &kl[y] {
                        for (w, c) in right_t[*z].iter().enumerate() {
                            if !c.is_zero() {
                                h[w] += &(p * c);
                            }
                        }
                    }
                    to_sparse(t_to_c(kl, &h))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Permutation;

    fn w(word: &[usize]) -> Permutation {
        Permutation::from_word(3, word).unwrap()
    }

    #[test]
    fn kl_examples() {
        let h = HeckeAlgebra::new(3);
        assert!(h.kl_polynomial(&w(&[1]), &w(&[1])).is_one());
        assert_eq!(h.kl_polynomial(&w(&[]), &w(&[1])), LaurentPoly::v_pow(-1));
        assert_eq!(h.kl_polynomial(&w(&[]), &w(&[1, 2, 1])), LaurentPoly::v_pow(-3));
        assert!(h.kl_polynomial(&w(&[1]), &w(&[2])).is_zero());
    }

    #[test]
    fn structure_constant_examples() {
        let h = HeckeAlgebra::new(3);
        assert!(h.g_constant(&w(&[1]), &w(&[2, 1]), &w(&[1, 2, 1])).is_one());
        assert_eq!(
            h.g_constant(&w(&[1]), &w(&[1]), &w(&[1])),
            LaurentPoly::parse("v^-1 + v").unwrap()
        );
        assert!(h.g_constant(&w(&[1]), &w(&[2]), &w(&[1, 2])).is_one());
    }

    #[test]
    fn a_delta_gamma() {
        let h = HeckeAlgebra::new(3);
        assert_eq!(h.a_function(&w(&[])), 0);
        assert_eq!(h.a_function(&w(&[1])), 1);
        assert_eq!(h.a_function(&w(&[1, 2, 1])), 3);
        assert_eq!(h.delta(&w(&[1, 2, 1])), 3);
        assert_eq!(h.gamma(&w(&[]), &w(&[]), &w(&[])), 1);
        assert_eq!(h.gamma(&w(&[1]), &w(&[1]), &w(&[1])), 1);
        for z in h.group().elements() {
            assert_eq!(h.gamma(&w(&[1]), &w(&[2]), z), 0);
        }
        assert_eq!(
            h.distinguished_involutions(),
            vec![w(&[]), w(&[2]), w(&[1]), w(&[1, 2, 1])]
        );
    }

    #[test]
    fn s3_cells() {
        let h = HeckeAlgebra::new(3);
        let left = h.left_cells();
        assert_eq!(left.len(), 4);
        assert!(left.contains(&vec![w(&[1]), w(&[2, 1])]));
        assert!(left.contains(&vec![w(&[2]), w(&[1, 2])]));
        assert!(h.right_cells().contains(&vec![w(&[1]), w(&[1, 2])]));
        assert_eq!(h.two_sided_cells().len(), 3);
    }
}
