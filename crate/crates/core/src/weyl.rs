//! The symmetric group S_r as a Coxeter group: length, Bruhat order, Young
//! subgroups and double cosets.
//!
//! Conventions: a permutation is stored in one-line notation
//! `[w(1), ..., w(r)]`, and the product `x * y` is composition of functions,
//! `(x * y)(k) = x(y(k))`. Consequently `w * s_i` swaps the entries in
//! positions `i, i+1`, and `s_i * w` swaps the values `i, i+1`. A word
//! `s_{i1} s_{i2} ... s_{ik}` denotes the product in that order.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum WeylError {
    #[error("{0:?} is not a permutation of 1..r")]
    NotAPermutation(Vec<u8>),
    #[error("generator s_{index} does not exist in S_{rank}")]
    BadGenerator { index: usize, rank: usize },
    #[error("composition {parts:?} does not sum to {rank}")]
    BadComposition { parts: Vec<usize>, rank: usize },
    #[error("length extreme of a double coset is not unique for {lambda:?}, {mu:?}")]
    NonUniqueExtremum { lambda: Vec<usize>, mu: Vec<usize> },
}

/// A permutation of `{1, ..., r}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation {
    images: Vec<u8>,
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = WeylError;
    fn try_from(images: Vec<u8>) -> Result<Self, WeylError> {
        Permutation::from_images(images)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Vec<u8> {
        p.images
    }
}

impl Permutation {
    pub fn from_images(images: Vec<u8>) -> Result<Self, WeylError> {
        let r = images.len();
        let mut seen = vec![false; r + 1];
        for &x in &images {
            let x = x as usize;
            if x == 0 || x > r || seen[x] {
                return Err(WeylError::NotAPermutation(images));
            }
            seen[x] = true;
        }
        Ok(Self { images })
    }

    pub fn identity(r: usize) -> Self {
        Self {
            images: (1..=r as u8).collect(),
        }
    }

    /// The simple transposition `s_i = (i, i+1)`, `1 <= i < r`.
    pub fn simple(r: usize, i: usize) -> Result<Self, WeylError> {
        if i == 0 || i >= r {
            return Err(WeylError::BadGenerator { index: i, rank: r });
        }
        let mut p = Self::identity(r);
        p.images.swap(i - 1, i);
        Ok(p)
    }

    /// The product `s_{word[0]} * s_{word[1]} * ...`.
    pub fn from_word(r: usize, word: &[usize]) -> Result<Self, WeylError> {
        let mut p = Self::identity(r);
        for &i in word {
            if i == 0 || i >= r {
                return Err(WeylError::BadGenerator { index: i, rank: r });
            }
            p.images.swap(i - 1, i);
        }
        Ok(p)
    }

    pub fn rank(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    /// `w(k)` for `1 <= k <= r`.
    pub fn apply(&self, k: usize) -> usize {
        self.images[k - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i + 1)
    }

    /// `self * other`, i.e. apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        Self {
            images: other.images.iter().map(|&k| self.images[k as usize - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.rank()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x as usize - 1] = i as u8 + 1;
        }
        Self { images }
    }

    /// Coxeter length, the number of inversions.
    pub fn length(&self) -> usize {
        let n = self.images.len();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.images[i] > self.images[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Is `l(w s_i) < l(w)`?
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// Is `l(s_i w) < l(w)`?
    pub fn has_left_descent(&self, i: usize) -> bool {
        let inv = self.inverse();
        inv.has_right_descent(i)
    }

    pub fn times_simple(&self, i: usize) -> Self {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    pub fn simple_times(&self, i: usize) -> Self {
        let a = i as u8;
        Self {
            images: self
                .images
                .iter()
                .map(|&x| if x == a { a + 1 } else if x == a + 1 { a } else { x })
                .collect(),
        }
    }

    /// A reduced word, found greedily by stripping the smallest right descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (1..w.rank()).find(|&i| w.has_right_descent(i)) {
            word.push(i);
            w = w.times_simple(i);
        }
        word.reverse();
        word
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }
}

impl fmt::Display for Permutation {
    /// Renders the reduced word, e.g. `s1s2s1`, or `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.reduced_word();
        if w.is_empty() {
            return write!(f, "e");
        }
        for i in w {
            write!(f, "s{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}{:?}", self.images)
    }
}

/// Parses `e`, `s1s2s1`, `1 2 1` or `1,2,1` into a permutation of degree `r`.
pub fn parse_word(r: usize, s: &str) -> Result<Permutation, WeylError> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Permutation::identity(r));
    }
    let word: Vec<usize> = s
        .split(|c: char| c == 's' || c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().unwrap_or(0))
        .collect();
    Permutation::from_word(r, &word)
}

/// Bruhat order by the lifting property: pick `s` with `ws < w`; then
/// `y <= w` iff `ys <= ws` (when `ys < y`) or `y <= ws` (otherwise).
/// Unwinding this recursion is exactly the subword criterion on the reduced
/// word produced by [`Permutation::reduced_word`].
pub fn bruhat_leq(y: &Permutation, w: &Permutation) -> bool {
    assert_eq!(y.rank(), w.rank());
    let ly = y.length();
    let lw = w.length();
    if ly > lw {
        return false;
    }
    if lw == 0 {
        return ly == 0;
    }
    let i = (1..w.rank()).find(|&i| w.has_right_descent(i)).unwrap();
    let ws = w.times_simple(i);
    if y.has_right_descent(i) {
        bruhat_leq(&y.times_simple(i), &ws)
    } else {
        bruhat_leq(y, &ws)
    }
}

/// A composition of `r` with exactly `n` (possibly zero) parts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>, r: usize) -> Result<Self, WeylError> {
        if parts.iter().sum::<usize>() != r {
            return Err(WeylError::BadComposition { parts, rank: r });
        }
        Ok(Self { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn rank(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `Lambda(n, r)` in lexicographically decreasing order.
    pub fn all(n: usize, r: usize) -> Vec<Self> {
        fn rec(n: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if n == 1 {
                cur.push(left);
                out.push(Composition { parts: cur.clone() });
                cur.pop();
                return;
            }
            for first in (0..=left).rev() {
                cur.push(first);
                rec(n - 1, left - first, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, r, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Simple reflections `s_i` lying in the Young subgroup.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut start = 1;
        for &p in &self.parts {
            for i in start..start + p.saturating_sub(1) {
                gens.push(i);
            }
            start += p;
        }
        gens
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug)]
pub struct YoungSubgroup {
    pub elements: Vec<Permutation>,
    pub longest: Permutation,
    pub generators: Vec<usize>,
}

/// The Young subgroup `W_lambda`, i.e. the permutations preserving the
/// blocks `{1..l1}, {l1+1..l1+l2}, ...`.
pub fn young_subgroup(lambda: &Composition) -> YoungSubgroup {
    let r = lambda.rank();
    let generators = lambda.generators();
    let mut elements = BTreeSet::new();
    elements.insert(Permutation::identity(r));
    let mut frontier = vec![Permutation::identity(r)];
    while let Some(w) = frontier.pop() {
        for &i in &generators {
            let x = w.times_simple(i);
            if elements.insert(x.clone()) {
                frontier.push(x);
            }
        }
    }
    let elements: Vec<Permutation> = elements.into_iter().collect();
    let longest = elements.iter().max_by_key(|w| w.length()).unwrap().clone();
    YoungSubgroup {
        elements,
        longest,
        generators,
    }
}

/// A double coset `W_lambda w W_mu` with its two distinguished
/// representatives.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCosetRep {
    pub lambda: Composition,
    pub mu: Composition,
    pub w_min: Permutation,
    pub w_max: Permutation,
    pub size: usize,
}

/// All `W_lambda`-`W_mu` double cosets, ordered by `(l(w_min), w_min)`.
pub fn double_coset_reps(
    lambda: &Composition,
    mu: &Composition,
) -> Result<Vec<DoubleCosetRep>, WeylError> {
    let r = lambda.rank();
    let left = young_subgroup(lambda);
    let right = young_subgroup(mu);
    let mut assigned: BTreeSet<Permutation> = BTreeSet::new();
    let mut reps = Vec::new();
    for w in all_permutations(r) {
        if assigned.contains(&w) {
            continue;
        }
        let mut coset = BTreeSet::new();
        for x in &left.elements {
            let xw = x.compose(&w);
            for y in &right.elements {
                coset.insert(xw.compose(y));
            }
        }
        let err = || WeylError::NonUniqueExtremum {
            lambda: lambda.parts().to_vec(),
            mu: mu.parts().to_vec(),
        };
        let min_len = coset.iter().map(|p| p.length()).min().unwrap();
        let max_len = coset.iter().map(|p| p.length()).max().unwrap();
        let mins: Vec<_> = coset.iter().filter(|p| p.length() == min_len).collect();
        let maxs: Vec<_> = coset.iter().filter(|p| p.length() == max_len).collect();
        if mins.len() != 1 || maxs.len() != 1 {
            return Err(err());
        }
        reps.push(DoubleCosetRep {
            lambda: lambda.clone(),
            mu: mu.clone(),
            w_min: mins[0].clone(),
            w_max: maxs[0].clone(),
            size: coset.len(),
        });
        assigned.extend(coset);
    }
    reps.sort_by(|a, b| {
        (a.w_min.length(), &a.w_min).cmp(&(b.w_min.length(), &b.w_min))
    });
    Ok(reps)
}

/// Every permutation of degree `r`, ordered by `(length, one-line)`.
pub fn all_permutations(r: usize) -> Vec<Permutation> {
    fn heap(k: usize, a: &mut Vec<u8>, out: &mut Vec<Permutation>) {
        if k <= 1 {
            out.push(Permutation { images: a.clone() });
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            if k % 2 == 0 {
                a.swap(i, k - 1);
            } else {
                a.swap(0, k - 1);
            }
        }
    }
    let mut out = Vec::new();
    let mut a: Vec<u8> = (1..=r as u8).collect();
    heap(r, &mut a, &mut out);
    out.sort_by(|x, y| (x.length(), x).cmp(&(y.length(), y)));
    out
}

/// S_r with every element numbered by its position in
/// [`all_permutations`], plus multiplication tables by simple reflections.
#[derive(Clone, Debug)]
pub struct SymmetricGroup {
    r: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    lengths: Vec<usize>,
    inverse: Vec<usize>,
    /// `right[w][i-1]` is the index of `w * s_i`.
    right: Vec<Vec<usize>>,
    /// `left[w][i-1]` is the index of `s_i * w`.
    left: Vec<Vec<usize>>,
}

impl SymmetricGroup {
    pub fn new(r: usize) -> Self {
        let elements = all_permutations(r);
        let index: HashMap<Permutation, usize> =
            elements.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let lengths = elements.iter().map(|p| p.length()).collect();
        let inverse = elements.iter().map(|p| index[&p.inverse()]).collect();
        let right = elements
            .iter()
            .map(|p| (1..r).map(|i| index[&p.times_simple(i)]).collect())
            .collect();
        let left = elements
            .iter()
            .map(|p| (1..r).map(|i| index[&p.simple_times(i)]).collect())
            .collect();
        Self {
            r,
            elements,
            index,
            lengths,
            inverse,
            right,
            left,
        }
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> usize {
        self.index[p]
    }

    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.inverse[i]
    }

    pub fn times_simple(&self, w: usize, s: usize) -> usize {
        self.right[w][s - 1]
    }

    pub fn simple_times(&self, s: usize, w: usize) -> usize {
        self.left[w][s - 1]
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn longest(&self) -> usize {
        self.elements.len() - 1
    }

    /// Index of the simple reflection `s_i`.
    pub fn simple(&self, i: usize) -> usize {
        self.right[0][i - 1]
    }

    pub fn generators(&self) -> impl Iterator<Item = usize> {
        1..self.r
    }

    pub fn multiply(&self, x: usize, y: usize) -> usize {
        self.index[&self.elements[x].compose(&self.elements[y])]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(r: usize, word: &[usize]) -> Permutation {
        Permutation::from_word(r, word).unwrap()
    }

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec(), parts.iter().sum()).unwrap()
    }

    /// Tableau criterion for the Bruhat order of S_r, independent of the
    /// lifting recursion.
    fn bruhat_tableau(y: &Permutation, w: &Permutation) -> bool {
        let r = y.rank();
        (1..=r).all(|k| {
            let mut a: Vec<u8> = y.images()[..k].to_vec();
            let mut b: Vec<u8> = w.images()[..k].to_vec();
            a.sort_unstable();
            b.sort_unstable();
            a.iter().zip(&b).all(|(x, z)| x <= z)
        })
    }

    #[test]
    fn length_examples() {
        assert_eq!(Permutation::identity(3).length(), 0);
        assert_eq!(w(3, &[1, 2, 1]).length(), 3);
        assert_eq!(w(3, &[1, 2]).length(), 2);
        assert_eq!(w(3, &[1, 2, 1]), w(3, &[2, 1, 2]));
    }

    #[test]
    fn composition_convention_is_locked() {
        // s1 * s2 applies s2 first: 1->1->2, 2->3->3, 3->2->1.
        assert_eq!(w(3, &[1, 2]).images(), &[2, 3, 1]);
        assert_eq!(w(3, &[1]).compose(&w(3, &[2])), w(3, &[1, 2]));
        assert_eq!(w(3, &[1, 2]).to_string(), "s1s2");
        assert_eq!(w(3, &[2, 1]).to_string(), "s2s1");
    }

    #[test]
    fn bruhat_examples() {
        let e = Permutation::identity(3);
        for p in all_permutations(3) {
            assert!(bruhat_leq(&e, &p));
        }
        assert!(!bruhat_leq(&w(3, &[1]), &w(3, &[2])));
        assert!(bruhat_leq(&w(3, &[1]), &w(3, &[1, 2, 1])));
    }

    #[test]
    fn bruhat_matches_tableau_criterion() {
        for r in 1..=4 {
            let all = all_permutations(r);
            for y in &all {
                for x in &all {
                    assert_eq!(bruhat_leq(y, x), bruhat_tableau(y, x), "{y:?} {x:?}");
                }
            }
        }
    }

    #[test]
    fn reduced_words_are_reduced() {
        for p in all_permutations(4) {
            let word = p.reduced_word();
            assert_eq!(word.len(), p.length());
            assert_eq!(Permutation::from_word(4, &word).unwrap(), p);
        }
    }

    #[test]
    fn young_subgroup_examples() {
        let triv = young_subgroup(&comp(&[1, 1, 1]));
        assert_eq!(triv.elements.len(), 1);
        assert!(triv.longest.is_identity());
        let y = young_subgroup(&comp(&[2, 1, 0]));
        assert_eq!(y.elements, vec![Permutation::identity(3), w(3, &[1])]);
        assert_eq!(y.longest, w(3, &[1]));
        let full = young_subgroup(&comp(&[3, 0, 0]));
        assert_eq!(full.elements.len(), 6);
        assert_eq!(full.longest, w(3, &[1, 2, 1]));
        assert_eq!(young_subgroup(&comp(&[2, 2])).elements.len(), 4);
    }

    #[test]
    fn compositions_in_decreasing_lex_order() {
        let all = Composition::all(2, 2);
        let parts: Vec<_> = all.iter().map(|c| c.parts().to_vec()).collect();
        assert_eq!(parts, vec![vec![2, 0], vec![1, 1], vec![0, 2]]);
        assert_eq!(Composition::all(3, 3).len(), 10);
    }

    fn max_set(l: &[usize], m: &[usize]) -> BTreeSet<Permutation> {
        double_coset_reps(&comp(l), &comp(m))
            .unwrap()
            .into_iter()
            .map(|d| d.w_max)
            .collect()
    }

    #[test]
    fn worked_example_maximal_representatives() {
        let lam = [2, 1, 0];
        let mu = [1, 1, 1];
        let expect = |ws: &[&[usize]]| ws.iter().map(|x| w(3, x)).collect::<BTreeSet<_>>();
        assert_eq!(max_set(&lam, &mu), expect(&[&[1], &[1, 2], &[1, 2, 1]]));
        assert_eq!(max_set(&mu, &lam), expect(&[&[1], &[2, 1], &[1, 2, 1]]));
        assert_eq!(max_set(&lam, &lam), expect(&[&[1], &[1, 2, 1]]));
        let full = double_coset_reps(&comp(&[3, 0, 0]), &comp(&[3, 0, 0])).unwrap();
        assert_eq!(full.len(), 1);
        assert!(full[0].w_min.is_identity());
        assert_eq!(full[0].w_max, w(3, &[1, 2, 1]));
    }

    #[test]
    fn double_cosets_partition_the_group() {
        for n in 1..=3 {
            for r in 1..=4 {
                let comps = Composition::all(n, r);
                for l in &comps {
                    for m in &comps {
                        let reps = double_coset_reps(l, m).unwrap();
                        let total: usize = reps.iter().map(|d| d.size).sum();
                        assert_eq!(total, (1..=r).product::<usize>());
                        let back = double_coset_reps(m, l).unwrap();
                        for d in &reps {
                            // l_{lambda,mu}(w)^-1 = l_{mu,lambda}(w^-1)
                            let inv = d.w_min.inverse();
                            let t = back.iter().find(|b| b.w_min == inv).unwrap();
                            assert_eq!(t.w_max, d.w_max.inverse());
                            for s in l.generators() {
                                assert!(d.w_max.has_left_descent(s));
                                assert!(!d.w_min.has_left_descent(s));
                            }
                            for s in m.generators() {
                                assert!(d.w_max.has_right_descent(s));
                                assert!(!d.w_min.has_right_descent(s));
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn group_tables() {
        let g = SymmetricGroup::new(4);
        assert_eq!(g.order(), 24);
        assert_eq!(g.length(g.longest()), 6);
        for x in 0..g.order() {
            assert_eq!(g.multiply(x, g.inverse(x)), g.identity());
            for s in g.generators() {
                let xs = g.times_simple(x, s);
                assert_eq!(g.element(xs), &g.element(x).times_simple(s));
                assert_eq!(g.multiply(x, g.simple(s)), xs);
                assert_eq!(g.multiply(g.simple(s), x), g.simple_times(s, x));
            }
        }
    }

    #[test]
    fn json_forms() {
        let p = w(3, &[1, 2]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[2,3,1]");
        assert!(serde_json::from_str::<Permutation>("[1,1,2]").is_err());
        assert_eq!(serde_json::to_string(&comp(&[2, 1, 0])).unwrap(), "[2,1,0]");
        assert_eq!(parse_word(3, "s1s2").unwrap(), p);
        assert_eq!(parse_word(3, "e").unwrap(), Permutation::identity(3));
    }
}
