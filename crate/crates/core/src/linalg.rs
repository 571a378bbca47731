//! Exact dense linear algebra: rank over exact fields, and inverses and
//! determinants over K = Q(v) by fraction-free elimination.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::arith::unipoly::UniPoly;
use crate::arith::{CyclotomicNumber, LaurentPoly, PrimeFieldElement, RationalFunction};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LinalgError {
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({0}x{1})")]
    NotSquare(usize, usize),
}

/// Row-major dense matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> Matrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        Self {
            rows,
            cols,
            data: vec![value; rows * cols],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<U: Clone>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn try_map<U: Clone, E>(&self, f: impl FnMut(&T) -> Result<U, E>) -> Result<Matrix<U>, E> {
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect::<Result<_, _>>()?,
        })
    }

    /// Rows and columns reordered: entry `(i, j)` of the result is entry
    /// `(rows[i], cols[j])` of `self`.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }
}

/// The operations needed by elimination. Elements carry their own context
/// (modulus, cyclotomic field), hence the `_like` constructors.
pub trait FieldElement: Clone + PartialEq {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elt(&self) -> bool;
    fn add_elt(&self, other: &Self) -> Self;
    fn sub_elt(&self, other: &Self) -> Self;
    fn mul_elt(&self, other: &Self) -> Self;
    /// Multiplicative inverse of a nonzero element.
    fn inv_elt(&self) -> Self;
}

impl FieldElement for PrimeFieldElement {
    fn zero_like(&self) -> Self {
        PrimeFieldElement::zero_like(self)
    }
    fn one_like(&self) -> Self {
        PrimeFieldElement::one_like(self)
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn add_elt(&self, o: &Self) -> Self {
        *self + *o
    }
    fn sub_elt(&self, o: &Self) -> Self {
        *self - *o
    }
    fn mul_elt(&self, o: &Self) -> Self {
        *self * *o
    }
    fn inv_elt(&self) -> Self {
        self.inv().expect("nonzero pivot")
    }
}

impl FieldElement for CyclotomicNumber {
    fn zero_like(&self) -> Self {
        CyclotomicNumber::zero_like(self)
    }
    fn one_like(&self) -> Self {
        CyclotomicNumber::one_like(self)
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn add_elt(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elt(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elt(&self, o: &Self) -> Self {
        self * o
    }
    fn inv_elt(&self) -> Self {
        self.inv().expect("nonzero pivot")
    }
}

impl FieldElement for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::zero()
    }
    fn one_like(&self) -> Self {
        RationalFunction::one()
    }
    fn is_zero_elt(&self) -> bool {
        self.is_zero()
    }
    fn add_elt(&self, o: &Self) -> Self {
        self + o
    }
    fn sub_elt(&self, o: &Self) -> Self {
        self - o
    }
    fn mul_elt(&self, o: &Self) -> Self {
        self * o
    }
    fn inv_elt(&self) -> Self {
        self.inv().expect("nonzero pivot")
    }
}

/// Which nonzero entry of a column becomes the pivot.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PivotStrategy {
    /// Topmost candidate row, columns left to right.
    FirstRow,
    /// Bottommost candidate row, columns right to left.
    LastRowReversed,
}

/// Rank by Gaussian elimination over an exact field.
pub fn rank<F: FieldElement>(m: &Matrix<F>, strategy: PivotStrategy) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let mut a: Vec<Vec<F>> = (0..m.rows).map(|i| m.row(i).to_vec()).collect();
    let cols: Vec<usize> = match strategy {
        PivotStrategy::FirstRow => (0..m.cols).collect(),
        PivotStrategy::LastRowReversed => (0..m.cols).rev().collect(),
    };
    let mut live: Vec<usize> = (0..m.rows).collect();
    let mut rank = 0;
    for &c in &cols {
        let candidates = live.iter().enumerate().filter(|(_, &i)| !a[i][c].is_zero_elt());
        let chosen = match strategy {
            PivotStrategy::FirstRow => candidates.map(|(k, _)| k).next(),
            PivotStrategy::LastRowReversed => candidates.map(|(k, _)| k).last(),
        };
        let Some(k) = chosen else { continue };
        let p = live.remove(k);
        rank += 1;
        let inv = a[p][c].inv_elt();
        let pivot_row = a[p].clone();
        for &i in &live {
            if a[i][c].is_zero_elt() {
                continue;
            }
            let factor = a[i][c].mul_elt(&inv);
            for j in 0..m.cols {
                if !pivot_row[j].is_zero_elt() {
                    a[i][j] = a[i][j].sub_elt(&factor.mul_elt(&pivot_row[j]));
                }
            }
        }
        if live.is_empty() {
            break;
        }
    }
    rank
}

pub fn mat_mul<F: FieldElement>(x: &Matrix<F>, y: &Matrix<F>, zero: &F) -> Matrix<F> {
    assert_eq!(x.cols, y.rows);
    Matrix::from_fn(x.rows, y.cols, |i, j| {
        let mut acc = zero.clone();
        for k in 0..x.cols {
            let a = x.get(i, k);
            let b = y.get(k, j);
            if !a.is_zero_elt() && !b.is_zero_elt() {
                acc = acc.add_elt(&a.mul_elt(b));
            }
        }
        acc
    })
}

/// Connected components of the bipartite row/column support graph.
/// Each block is `(rows, cols)`, both sorted.
pub fn support_blocks<T: Clone>(m: &Matrix<T>, nonzero: impl Fn(&T) -> bool) -> Vec<(Vec<usize>, Vec<usize>)> {
    let n = m.rows + m.cols;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let next = p[y];
            p[y] = r;
            y = next;
        }
        r
    }
    for i in 0..m.rows {
        for j in 0..m.cols {
            if nonzero(m.get(i, j)) {
                let a = find(&mut parent, i);
                let b = find(&mut parent, m.rows + j);
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut roots: BTreeSet<usize> = BTreeSet::new();
    for x in 0..n {
        roots.insert(find(&mut parent, x));
    }
    roots
        .into_iter()
        .map(|root| {
            let rows = (0..m.rows).filter(|&i| find(&mut parent, i) == root).collect();
            let cols = (0..m.cols)
                .filter(|&j| find(&mut parent, m.rows + j) == root)
                .collect();
            (rows, cols)
        })
        .collect()
}

/// An element of A with no negative powers, as an ordinary polynomial.
fn poly_of(p: &LaurentPoly) -> UniPoly {
    if p.is_zero() {
        return UniPoly::zero();
    }
    let (low, q) = p.to_unipoly();
    debug_assert!(low >= 0);
    let mut coeffs = vec![num_rational::BigRational::from_integer(0.into()); low as usize];
    coeffs.extend(q.coeffs().iter().cloned());
    UniPoly::new(coeffs)
}

fn exact_div(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let (q, r) = a.div_rem(b);
    debug_assert!(r.is_zero(), "fraction-free step left a remainder");
    q
}

/// Scales each row by a unit-free multiplier so that all entries become
/// ordinary polynomials. Returns the polynomial matrix and the multipliers.
fn clear_denominators(m: &Matrix<RationalFunction>) -> (Vec<Vec<UniPoly>>, Vec<RationalFunction>) {
    let mut rows = Vec::with_capacity(m.rows);
    let mut scales = Vec::with_capacity(m.rows);
    for i in 0..m.rows {
        let mut dens: Vec<LaurentPoly> = Vec::new();
        for x in m.row(i) {
            if !x.is_zero() && !dens.contains(x.denom()) {
                dens.push(x.denom().clone());
            }
        }
        let mut common = LaurentPoly::one();
        for d in &dens {
            common = &common * d;
        }
        let scaled: Vec<LaurentPoly> = m
            .row(i)
            .iter()
            .map(|x| {
                (x * &RationalFunction::from_laurent(common.clone()))
                    .as_laurent()
                    .cloned()
                    .expect("common denominator clears the row")
            })
            .collect();
        let low = scaled.iter().filter_map(|p| p.min_exp()).min().unwrap_or(0);
        let row: Vec<UniPoly> = scaled.iter().map(|p| poly_of(&p.shift(-low))).collect();
        rows.push(row);
        scales.push(RationalFunction::from_laurent(common.shift(-low)));
    }
    (rows, scales)
}

/// Fraction-free Gauss-Jordan on `[A | I]`. Returns `(d, R)` with
/// `A^-1 = R / d`.
fn bareiss_inverse(a: Vec<Vec<UniPoly>>) -> Result<(UniPoly, Vec<Vec<UniPoly>>), LinalgError> {
    let n = a.len();
    let mut m: Vec<Vec<UniPoly>> = a
        .into_iter()
        .enumerate()
        .map(|(i, mut row)| {
            row.extend((0..n).map(|j| if i == j { UniPoly::one() } else { UniPoly::zero() }));
            row
        })
        .collect();
    let mut prev = UniPoly::one();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero()).ok_or(LinalgError::Singular)?;
        m.swap(k, p);
        let pivot_row = m[k].clone();
        let pivot = pivot_row[k].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == k {
                continue;
            }
            let factor = row[k].clone();
            for j in 0..2 * n {
                if j == k {
                    continue;
                }
                let t = pivot.mul(&row[j]).sub(&factor.mul(&pivot_row[j]));
                row[j] = exact_div(&t, &prev);
            }
            row[k] = UniPoly::zero();
        }
        prev = pivot;
    }
    let r = m.into_iter().map(|row| row[n..].to_vec()).collect();
    Ok((prev, r))
}

fn uni_to_rf(p: &UniPoly) -> RationalFunction {
    RationalFunction::from_laurent(LaurentPoly::from_terms(
        p.coeffs().iter().enumerate().map(|(i, c)| (i as i32, c.clone())),
    ))
}

fn invert_block(m: &Matrix<RationalFunction>) -> Result<Matrix<RationalFunction>, LinalgError> {
    let n = m.rows;
    let (poly, scales) = clear_denominators(m);
    let (d, r) = bareiss_inverse(poly)?;
    let d = uni_to_rf(&d);
    let mut out = Matrix::filled(n, n, RationalFunction::zero());
    for i in 0..n {
        for j in 0..n {
            if r[i][j].is_zero() {
                continue;
            }
            let num = &uni_to_rf(&r[i][j]) * &scales[j];
            out.set(i, j, (&num / &d).expect("nonzero determinant"));
        }
    }
    Ok(out)
}

/// Inverse over K, eliminating each connected block of the support
/// separately.
pub fn inverse(m: &Matrix<RationalFunction>) -> Result<Matrix<RationalFunction>, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare(m.rows, m.cols));
    }
    let mut out = Matrix::filled(m.rows, m.cols, RationalFunction::zero());
    for (rows, cols) in support_blocks(m, |x| !x.is_zero()) {
        if rows.len() != cols.len() {
            return Err(LinalgError::Singular);
        }
        let inv = invert_block(&m.select(&rows, &cols))?;
        // (A^-1) maps the block's columns back to its rows.
        for (a, &c) in cols.iter().enumerate() {
            for (b, &r) in rows.iter().enumerate() {
                out.set(c, r, inv.get(a, b).clone());
            }
        }
    }
    Ok(out)
}

/// Determinant over K via the same fraction-free elimination.
pub fn determinant(m: &Matrix<RationalFunction>) -> Result<RationalFunction, LinalgError> {
    if m.rows != m.cols {
        return Err(LinalgError::NotSquare(m.rows, m.cols));
    }
    let n = m.rows;
    if n == 0 {
        return Ok(RationalFunction::one());
    }
    let (mut a, scales) = clear_denominators(m);
    let mut prev = UniPoly::one();
    let mut sign = 1i64;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return Ok(RationalFunction::zero());
        };
        if p != k {
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = exact_div(&t, &prev);
            }
            a[i][k] = UniPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let mut det = &uni_to_rf(&prev) * &RationalFunction::from_int(sign);
    for s in &scales {
        det = (&det / s).expect("row multipliers are nonzero");
    }
    Ok(det)
}

pub fn identity_matrix(n: usize) -> Matrix<RationalFunction> {
    Matrix::from_fn(n, n, |i, j| {
        if i == j {
            RationalFunction::one()
        } else {
            RationalFunction::zero()
        }
    })
}

pub fn rf_mul(x: &Matrix<RationalFunction>, y: &Matrix<RationalFunction>) -> Matrix<RationalFunction> {
    mat_mul(x, y, &RationalFunction::zero())
}

/// Counts nonzero entries per row and column; a matrix is monomial when
/// every row and every column has exactly one.
pub fn is_monomial<T: Clone>(m: &Matrix<T>, nonzero: impl Fn(&T) -> bool) -> bool {
    if m.rows != m.cols {
        return false;
    }
    let mut col_count = vec![0usize; m.cols];
    for i in 0..m.rows {
        let mut row_count = 0;
        for j in 0..m.cols {
            if nonzero(m.get(i, j)) {
                row_count += 1;
                col_count[j] += 1;
            }
        }
        if row_count != 1 {
            return false;
        }
    }
    col_count.iter().all(|&c| c == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        RationalFunction::parse(s).unwrap()
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_fn(3, 3, |i, j| match (i, j) {
            (0, 0) => rf("(v)/(1)"),
            (0, 1) => rf("(1)/(1 + v^2)"),
            (1, 0) => rf("(2)/(1)"),
            (1, 1) => rf("(v^-1 + v)/(1)"),
            (2, 2) => rf("(3*v^2)/(1)"),
            _ => RationalFunction::zero(),
        });
        let inv = inverse(&m).unwrap();
        assert_eq!(rf_mul(&m, &inv), identity_matrix(3));
        assert_eq!(rf_mul(&inv, &m), identity_matrix(3));
        let det = determinant(&m).unwrap();
        let expect = &(&(&rf("(v)/(1)") * &rf("(v^-1 + v)/(1)"))
            - &(&rf("(2)/(1)") * &rf("(1)/(1 + v^2)")))
            * &rf("(3*v^2)/(1)");
        assert_eq!(det, expect);
    }

    #[test]
    fn singular_detected() {
        let m = Matrix::from_fn(2, 2, |_, _| rf("(v)/(1)"));
        assert_eq!(inverse(&m), Err(LinalgError::Singular));
        assert!(determinant(&m).unwrap().is_zero());
    }

    #[test]
    fn permuted_blocks() {
        // Anti-diagonal: each block is 1x1 off the diagonal.
        let m = Matrix::from_fn(2, 2, |i, j| {
            if i != j {
                rf("(v)/(1)")
            } else {
                RationalFunction::zero()
            }
        });
        let inv = inverse(&m).unwrap();
        assert_eq!(rf_mul(&m, &inv), identity_matrix(2));
    }

    #[test]
    fn prime_field_rank_both_strategies() {
        let f = |x: i128| PrimeFieldElement::new(5, x).unwrap();
        let m = Matrix::from_fn(3, 3, |i, j| f(((i + 1) * (j + 1)) as i128));
        assert_eq!(rank(&m, PivotStrategy::FirstRow), 1);
        assert_eq!(rank(&m, PivotStrategy::LastRowReversed), 1);
        let id = Matrix::from_fn(10, 10, |i, j| f((i == j) as i128));
        assert_eq!(rank(&id, PivotStrategy::FirstRow), 10);
        assert_eq!(rank(&Matrix::filled(4, 4, f(0)), PivotStrategy::FirstRow), 0);
    }
}
