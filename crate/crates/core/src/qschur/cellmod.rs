//! Left cell modules: for a left cell `Gamma`, `theta_b` acts on the span of
//! `{theta_a : a in Gamma}` modulo lower cells by `theta_a -> sum_c f_{b,a,c} theta_c`.

use crate::arith::IntLaurent;
use crate::linalg::Matrix;

use super::QSchurAlgebra;

#[derive(Clone, Debug)]
pub struct CellModule<'a> {
    algebra: &'a QSchurAlgebra,
    cell: Vec<usize>,
}

impl<'a> CellModule<'a> {
    pub fn new(algebra: &'a QSchurAlgebra, cell: Vec<usize>) -> Self {
        Self { algebra, cell }
    }

    /// The module of the left cell with class number `k`.
    pub fn of_left_cell(algebra: &'a QSchurAlgebra, k: usize) -> Self {
        Self::new(algebra, algebra.left_cells()[k].clone())
    }

    pub fn cell(&self) -> &[usize] {
        &self.cell
    }

    pub fn dim(&self) -> usize {
        self.cell.len()
    }

    /// Matrix of `theta_b`; entry `(c, a)` is `f_{b,a,c}`.
    pub fn action(&self, b: usize) -> Matrix<IntLaurent> {
        Matrix::from_fn(self.dim(), self.dim(), |i, j| {
            self.algebra.f_idx(b, self.cell[j], self.cell[i])
        })
    }

    /// `chi_Gamma(theta_b) = sum_{a in Gamma} f_{b,a,a}`.
    pub fn character(&self, b: usize) -> IntLaurent {
        let mut t = IntLaurent::zero();
        for &a in &self.cell {
            t += &self.algebra.f_idx(b, a, a);
        }
        t
    }

    /// Character values on every basis element.
    pub fn character_vector(&self) -> Vec<IntLaurent> {
        (0..self.algebra.dim()).map(|b| self.character(b)).collect()
    }
}

pub(crate) fn int_mat_mul(x: &Matrix<IntLaurent>, y: &Matrix<IntLaurent>) -> Matrix<IntLaurent> {
    Matrix::from_fn(x.rows(), y.cols(), |i, j| {
        let mut t = IntLaurent::zero();
        for k in 0..x.cols() {
            let a = x.get(i, k);
            if a.is_zero() {
                continue;
            }
            t += &(a * y.get(k, j));
        }
        t
    })
}
