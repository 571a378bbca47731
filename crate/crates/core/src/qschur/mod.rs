//! The generic q-Schur algebra S_q(n, r), realized on the index set M(n, r)
//! by its canonical-basis structure constants
//! `f_{a,b,c} = g_{sigma(a),sigma(b),sigma(c)} / h_{co(a)}`.

mod cellmod;
mod verify;

pub use cellmod::CellModule;
pub use verify::verify_properties;

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::arith::{ArithError, IntLaurent, LaurentPoly, RationalFunction};
use crate::hecke::{CellData, HeckeAlgebra, SparseCoords};
use crate::preorder::Preorder;
use crate::weyl::{double_coset_reps, young_subgroup, Composition, Permutation, WeylError};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum QSchurError {
    #[error(transparent)]
    Weyl(#[from] WeylError),
    #[error("structure constant f({a}, {b}, {c}) is not in A: {source}")]
    NotIntegral {
        a: String,
        b: String,
        c: String,
        source: ArithError,
    },
    #[error("sum of (lambda, e, lambda) is not a two-sided identity (fails at {0})")]
    IdentityCheckFailed(String),
    #[error("unknown index {0}")]
    UnknownIndex(String),
}

/// A triple `(lambda, w, mu)` with `w` the shortest element of its
/// `W_lambda`-`W_mu` double coset.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct MnrIndex {
    pub lambda: Composition,
    pub w: Permutation,
    pub mu: Composition,
}

impl MnrIndex {
    pub fn ro(&self) -> &Composition {
        &self.lambda
    }

    pub fn co(&self) -> &Composition {
        &self.mu
    }

    pub fn transpose(&self) -> MnrIndex {
        MnrIndex {
            lambda: self.mu.clone(),
            w: self.w.inverse(),
            mu: self.lambda.clone(),
        }
    }

    /// Parses `(2,1,0):s2:(2,1,0)` or `(2,1,0),s2,(2,1,0)`.
    pub fn parse(s: &str) -> Option<MnrIndex> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        let s = s.replace(' ', "");
        let open = s.find(')')?;
        let close = s.rfind('(')?;
        let lam: Vec<usize> = s[..open].split(',').map(|t| t.parse().ok()).collect::<Option<_>>()?;
        let mu: Vec<usize> = s[close + 1..].split(',').map(|t| t.parse().ok()).collect::<Option<_>>()?;
        let middle = s[open + 1..close].trim_matches(|c| c == ',' || c == ':');
        let r = lam.iter().sum();
        let w = crate::weyl::parse_word(r, middle).ok()?;
        Some(MnrIndex {
            lambda: Composition::new(lam, r).ok()?,
            w,
            mu: Composition::new(mu, r).ok()?,
        })
    }
}

impl fmt::Display for MnrIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.lambda, self.w, self.mu)
    }
}

impl Serialize for MnrIndex {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `h_mu = sum_{w in W_mu} v^{2 l(w) - l(w_mu)}`, `w_mu` longest in `W_mu`.
pub fn h_poincare(mu: &Composition) -> LaurentPoly {
    h_poincare_int(mu).to_laurent()
}

fn h_poincare_int(mu: &Composition) -> IntLaurent {
    let y = young_subgroup(mu);
    let top = y.longest.length() as i32;
    let mut h = IntLaurent::zero();
    for w in &y.elements {
        h += &IntLaurent::monomial(1, 2 * w.length() as i32 - top);
    }
    h
}

/// An element of `K S_q(n, r)` in theta-coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSchurElement {
    pub coords: Vec<RationalFunction>,
}

impl QSchurElement {
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

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// True when the element lies in the A-form `S_q(n, r)`.
    pub fn is_in_a(&self) -> bool {
        self.coords.iter().all(|c| c.is_in_a())
    }

    pub fn support(&self) -> impl Iterator<Item = (usize, &RationalFunction)> {
        self.coords.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn add(&self, o: &Self) -> Self {
        Self {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self {
            coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        Self {
            coords: self
                .coords
                .iter()
                .map(|x| if x.is_zero() { x.clone() } else { x * c })
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct QSchurAlgebra {
    n: usize,
    r: usize,
    hecke: Arc<HeckeAlgebra>,
    compositions: Vec<Composition>,
    indices: Vec<MnrIndex>,
    lookup: HashMap<MnrIndex, usize>,
    sigma: Vec<usize>,
    transpose: Vec<usize>,
    ro: Vec<usize>,
    co: Vec<usize>,
    /// Indices with `(ro, co) = (lambda, mu)`, keyed by composition indices.
    blocks: HashMap<(usize, usize), Vec<usize>>,
    /// `products[a][b]` is `theta_a theta_b`, sparse.
    products: Vec<Vec<SparseCoords>>,
    a_values: Vec<i32>,
    distinguished: Vec<usize>,
    cells: CellData,
}

impl QSchurAlgebra {
    pub fn new(n: usize, r: usize) -> Result<Self, QSchurError> {
        Self::with_hecke(n, r, Arc::new(HeckeAlgebra::new(r)))
    }

    pub fn with_hecke(n: usize, r: usize, hecke: Arc<HeckeAlgebra>) -> Result<Self, QSchurError> {
        assert_eq!(hecke.rank(), r.max(1));
        let compositions = Composition::all(n, r);
        let mut indices = Vec::new();
        let mut sigma = Vec::new();
        let mut ro = Vec::new();
        let mut co = Vec::new();
        let mut blocks: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let group = hecke.group();
        for (li, lam) in compositions.iter().enumerate() {
            for (mi, mu) in compositions.iter().enumerate() {
                for rep in double_coset_reps(lam, mu)? {
                    blocks.entry((li, mi)).or_default().push(indices.len());
                    sigma.push(group.index_of(&rep.w_max));
                    ro.push(li);
                    co.push(mi);
                    indices.push(MnrIndex {
                        lambda: lam.clone(),
                        w: rep.w_min,
                        mu: mu.clone(),
                    });
                }
            }
        }
        let lookup: HashMap<MnrIndex, usize> =
            indices.iter().cloned().enumerate().map(|(i, x)| (x, i)).collect();
        let transpose = indices.iter().map(|x| lookup[&x.transpose()]).collect();
        let h_polys: Vec<IntLaurent> = compositions.iter().map(h_poincare_int).collect();

        let dim = indices.len();
        let mut products = vec![vec![Vec::new(); dim]; dim];
        for a in 0..dim {
            for b in 0..dim {
                if co[a] != ro[b] {
                    continue;
                }
                let mut prod = Vec::new();
                for &c in &blocks[&(ro[a], co[b])] {
                    let g = hecke.g_idx(sigma[a], sigma[b], sigma[c]);
                    if g.is_zero() {
                        continue;
                    }
                    let f = g.exact_divide(&h_polys[co[a]]).map_err(|e| QSchurError::NotIntegral {
                        a: indices[a].to_string(),
                        b: indices[b].to_string(),
                        c: indices[c].to_string(),
                        source: e,
                    })?;
                    prod.push((c, f));
                }
                prod.sort_by_key(|(c, _)| *c);
                products[a][b] = prod;
            }
        }

        let a_values: Vec<i32> = sigma.iter().map(|&s| hecke.a_idx(s)).collect();
        let distinguished = (0..dim)
            .filter(|&d| ro[d] == co[d] && hecke.is_distinguished(sigma[d]))
            .collect();

        let mut left_pairs = Vec::new();
        for c in 0..dim {
            for b in 0..dim {
                left_pairs.extend(products[c][b].iter().map(|(a, _)| (*a, b)));
            }
        }
        let transpose_vec: &Vec<usize> = &transpose;
        let right_pairs: Vec<(usize, usize)> = left_pairs
            .iter()
            .map(|&(a, b)| (transpose_vec[a], transpose_vec[b]))
            .collect();
        let left = Preorder::from_relation(dim, left_pairs);
        let right = Preorder::from_relation(dim, right_pairs);
        let two_sided = left.join(&right);

        let alg = Self {
            n,
            r,
            hecke,
            compositions,
            indices,
            lookup,
            sigma,
            transpose,
            ro,
            co,
            blocks,
            products,
            a_values,
            distinguished,
            cells: CellData {
                left,
                right,
                two_sided,
            },
        };
        alg.check_identity()?;
        Ok(alg)
    }

    fn check_identity(&self) -> Result<(), QSchurError> {
        let ones = self.identity_indices();
        for a in 0..self.dim() {
            let left: Vec<_> = ones.iter().flat_map(|&e| self.products[e][a].iter()).collect();
            let right: Vec<_> = ones.iter().flat_map(|&e| self.products[a][e].iter()).collect();
            let unit = |v: &Vec<&(usize, IntLaurent)>| v.len() == 1 && v[0].0 == a && v[0].1.is_one();
            if !unit(&left) || !unit(&right) {
                return Err(QSchurError::IdentityCheckFailed(self.indices[a].to_string()));
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn dim(&self) -> usize {
        self.indices.len()
    }

    pub fn hecke(&self) -> &HeckeAlgebra {
        &self.hecke
    }

    pub fn compositions(&self) -> &[Composition] {
        &self.compositions
    }

    pub fn indices(&self) -> &[MnrIndex] {
        &self.indices
    }

    pub fn index(&self, a: usize) -> &MnrIndex {
        &self.indices[a]
    }

    pub fn position(&self, a: &MnrIndex) -> Option<usize> {
        self.lookup.get(a).copied()
    }

    pub fn name(&self, a: usize) -> String {
        self.indices[a].to_string()
    }

    /// Group index of `sigma(a)`, the longest element of the double coset.
    pub fn sigma_idx(&self, a: usize) -> usize {
        self.sigma[a]
    }

    pub fn sigma(&self, a: &MnrIndex) -> Permutation {
        let i = self.lookup[a];
        self.hecke.group().element(self.sigma[i]).clone()
    }

    pub fn transpose_idx(&self, a: usize) -> usize {
        self.transpose[a]
    }

    /// Composition index of `ro(a)`.
    pub fn ro_idx(&self, a: usize) -> usize {
        self.ro[a]
    }

    pub fn co_idx(&self, a: usize) -> usize {
        self.co[a]
    }

    /// Indices with the given row and column composition indices.
    pub fn block(&self, lambda: usize, mu: usize) -> &[usize] {
        self.blocks.get(&(lambda, mu)).map(|v| v.as_slice()).unwrap_or(&[])
    }

    /// Positions of `(lambda, e, lambda)`, whose sum is the identity.
    pub fn identity_indices(&self) -> Vec<usize> {
        (0..self.compositions.len())
            .map(|l| self.blocks[&(l, l)][0])
            .collect()
    }

    pub fn product(&self, a: usize, b: usize) -> &SparseCoords {
        &self.products[a][b]
    }

    pub fn f_idx(&self, a: usize, b: usize, c: usize) -> IntLaurent {
        let p = &self.products[a][b];
        p.binary_search_by_key(&c, |(x, _)| *x)
            .map(|k| p[k].1.clone())
            .unwrap_or_default()
    }

    pub fn f_is_nonzero(&self, a: usize, b: usize, c: usize) -> bool {
        self.products[a][b].binary_search_by_key(&c, |(x, _)| *x).is_ok()
    }

    pub fn f_constant(&self, a: &MnrIndex, b: &MnrIndex, c: &MnrIndex) -> Result<LaurentPoly, QSchurError> {
        let pos = |x: &MnrIndex| self.position(x).ok_or_else(|| QSchurError::UnknownIndex(x.to_string()));
        Ok(self.f_idx(pos(a)?, pos(b)?, pos(c)?).to_laurent())
    }

    pub fn a_idx(&self, a: usize) -> i32 {
        self.a_values[a]
    }

    pub fn a_function(&self, a: &MnrIndex) -> i32 {
        self.a_values[self.lookup[a]]
    }

    pub fn distinguished_idx(&self) -> &[usize] {
        &self.distinguished
    }

    pub fn is_distinguished(&self, d: usize) -> bool {
        self.distinguished.binary_search(&d).is_ok()
    }

    pub fn distinguished_set(&self) -> Vec<MnrIndex> {
        self.distinguished.iter().map(|&d| self.indices[d].clone()).collect()
    }

    /// `gamma_{a,b,c}`: nonzero only if `f_{a,b,c^t} != 0`, and then the
    /// Hecke constant `gamma_{sigma(a), sigma(b), sigma(c)}`.
    pub fn gamma_idx(&self, a: usize, b: usize, c: usize) -> i64 {
        if !self.f_is_nonzero(a, b, self.transpose[c]) {
            return 0;
        }
        self.hecke.gamma_idx(self.sigma[a], self.sigma[b], self.sigma[c])
    }

    pub fn q_gamma(&self, a: &MnrIndex, b: &MnrIndex, c: &MnrIndex) -> i64 {
        self.gamma_idx(self.lookup[a], self.lookup[b], self.lookup[c])
    }

    pub fn cells(&self) -> &CellData {
        &self.cells
    }

    /// Left cells as index lists, ordered by smallest member.
    pub fn left_cells(&self) -> &[Vec<usize>] {
        self.cells.left.classes()
    }

    /// The distinguished element of the left cell containing `a`.
    pub fn distinguished_of_cell(&self, a: usize) -> Option<usize> {
        self.distinguished
            .iter()
            .copied()
            .find(|&d| self.cells.left.equivalent(a, d))
    }

    pub fn identity(&self) -> QSchurElement {
        let mut x = QSchurElement::zero(self.dim());
        for e in self.identity_indices() {
            x.coords[e] = RationalFunction::one();
        }
        x
    }

    pub fn theta(&self, a: usize) -> QSchurElement {
        QSchurElement::basis(self.dim(), a)
    }

    pub fn multiply(&self, x: &QSchurElement, y: &QSchurElement) -> QSchurElement {
        let mut out = QSchurElement::zero(self.dim());
        let ys: Vec<(usize, &RationalFunction)> = y.support().collect();
        for (a, ca) in x.support() {
            for &(b, cb) in &ys {
                if self.co[a] != self.ro[b] {
                    continue;
                }
                let cab = ca * cb;
                for (c, f) in &self.products[a][b] {
                    let term = &cab * &RationalFunction::from_laurent(f.to_laurent());
                    out.coords[*c] = &out.coords[*c] + &term;
                }
            }
        }
        out
    }

    /// Number of partitions of `r` with at most `n` parts.
    pub fn partition_count(&self) -> usize {
        fn count(r: usize, parts: usize, max: usize) -> usize {
            if r == 0 {
                return 1;
            }
            if parts == 0 {
                return 0;
            }
            (1..=max.min(r)).map(|p| count(r - p, parts - 1, p)).sum()
        }
        count(self.r, self.n, self.r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comp(p: &[usize]) -> Composition {
        Composition::new(p.to_vec(), p.iter().sum()).unwrap()
    }

    fn idx(l: &[usize], w: &[usize], m: &[usize]) -> MnrIndex {
        let r = l.iter().sum();
        MnrIndex {
            lambda: comp(l),
            w: Permutation::from_word(r, w).unwrap(),
            mu: comp(m),
        }
    }

    #[test]
    fn h_examples() {
        assert!(h_poincare(&comp(&[1, 1, 1])).is_one());
        let two = LaurentPoly::parse("v^-1 + v").unwrap();
        assert_eq!(h_poincare(&comp(&[2, 1, 0])), two);
        assert_eq!(h_poincare(&comp(&[2, 0])), two);
    }

    #[test]
    fn index_counts() {
        for (n, r, expect) in [(1, 1, 1), (2, 2, 10), (2, 3, 20), (3, 2, 45)] {
            assert_eq!(QSchurAlgebra::new(n, r).unwrap().dim(), expect);
        }
    }

    #[test]
    fn worked_example() {
        let s = QSchurAlgebra::new(3, 3).unwrap();
        let lam = [2, 1, 0];
        let mu = [1, 1, 1];
        let a = idx(&lam, &[], &mu);
        let b = idx(&mu, &[2], &lam);
        let c = idx(&lam, &[2], &lam);
        let a2 = idx(&mu, &[1], &mu);
        assert_eq!(s.sigma(&a), Permutation::from_word(3, &[1]).unwrap());
        assert_eq!(s.sigma(&b), Permutation::from_word(3, &[2, 1]).unwrap());
        assert_eq!(s.sigma(&c), Permutation::from_word(3, &[1, 2, 1]).unwrap());
        assert!(s.f_constant(&a, &b, &c).unwrap().is_one());
        assert!(s.f_constant(&a2, &b, &c).unwrap().is_zero());
    }

    #[test]
    fn identity_sizes() {
        assert_eq!(QSchurAlgebra::new(1, 1).unwrap().identity_indices().len(), 1);
        assert_eq!(QSchurAlgebra::new(2, 2).unwrap().identity_indices().len(), 3);
        assert_eq!(QSchurAlgebra::new(2, 3).unwrap().identity_indices().len(), 4);
    }

    #[test]
    fn cells_2_2() {
        let s = QSchurAlgebra::new(2, 2).unwrap();
        let mut sizes: Vec<usize> = s.left_cells().iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 3, 3, 3]);
        assert_eq!(s.cells().two_sided.classes().len(), 2);
        assert_eq!(s.distinguished_idx().len(), 4);
        assert_eq!(s.partition_count(), 2);
    }

    #[test]
    fn index_parsing() {
        let a = idx(&[2, 1, 0], &[2], &[2, 1, 0]);
        assert_eq!(a.to_string(), "((2,1,0),s2,(2,1,0))");
        assert_eq!(MnrIndex::parse(&a.to_string()), Some(a.clone()));
        assert_eq!(MnrIndex::parse("(2,1,0):s2:(2,1,0)"), Some(a));
        assert_eq!(
            MnrIndex::parse("((1,1),e,(1,1))"),
            Some(idx(&[1, 1], &[], &[1, 1]))
        );
    }
}
