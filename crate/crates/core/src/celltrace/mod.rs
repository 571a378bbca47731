//! Symmetrising trace forms `tau = sum chi / c_chi` on `K S_q(n, r)`, the
//! dual theta-basis, matrix units, and the Wedderburn basis
//! `B_c = c_d^-1 theta_c theta_d^dual` with its change-of-basis matrices.

mod verify;

pub use verify::{compare_forms, verify_properties};

use serde::Serialize;
use thiserror::Error;

use crate::arith::{IntLaurent, RationalFunction};
use crate::linalg::{inverse, is_monomial, LinalgError, Matrix};
use crate::qschur::{CellModule, QSchurAlgebra, QSchurElement};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CellTraceError {
    #[error("isomorphic left cells {0} and {1} lie in different two-sided cells")]
    ClassSplitsTwoSidedCell(usize, usize),
    #[error("{classes} isomorphism classes of cell modules but {partitions} partitions")]
    ClassCountMismatch { classes: usize, partitions: usize },
    #[error("expected {expected} Schur elements, got {got}")]
    SchurCount { expected: usize, got: usize },
    #[error("Schur element of class {0} is zero")]
    ZeroSchurElement(usize),
    #[error("Gram matrix of the trace form is singular")]
    SingularGram,
    #[error("the Wedderburn family is linearly dependent")]
    LinearDependence,
    #[error("change-of-basis entry m({row}, {col}) = {value} is not in A")]
    NonIntegralEntry { row: String, col: String, value: String },
    #[error("D = M^T P^-1 M is not monomial")]
    NotMonomial,
}

/// An isomorphism class of left cell modules, detected by equal characters.
#[derive(Clone, Debug, Serialize)]
pub struct IsoClass {
    /// Positions in `QSchurAlgebra::left_cells()`.
    pub left_cells: Vec<usize>,
    pub dim: usize,
    /// `chi(theta_b)` for every basis index `b`.
    #[serde(skip)]
    pub character: Vec<IntLaurent>,
}

/// Groups left cells by character, ordered by their first left cell.
pub fn iso_classes(s: &QSchurAlgebra) -> Result<Vec<IsoClass>, CellTraceError> {
    let mut classes: Vec<IsoClass> = Vec::new();
    for k in 0..s.left_cells().len() {
        let module = CellModule::of_left_cell(s, k);
        let character = module.character_vector();
        match classes.iter_mut().find(|c| c.character == character) {
            Some(class) => {
                let first = s.left_cells()[class.left_cells[0]][0];
                let here = s.left_cells()[k][0];
                if !s.cells().two_sided.equivalent(first, here) {
                    return Err(CellTraceError::ClassSplitsTwoSidedCell(class.left_cells[0], k));
                }
                class.left_cells.push(k);
            }
            None => classes.push(IsoClass {
                left_cells: vec![k],
                dim: module.dim(),
                character,
            }),
        }
    }
    let partitions = s.partition_count();
    if classes.len() != partitions {
        return Err(CellTraceError::ClassCountMismatch {
            classes: classes.len(),
            partitions,
        });
    }
    Ok(classes)
}

/// `tau = sum_chi chi / c_chi`, one Schur element per isomorphism class.
#[derive(Clone, Debug)]
pub struct TraceForm {
    schur_by_class: Vec<RationalFunction>,
    tau_on_theta: Vec<RationalFunction>,
}

impl TraceForm {
    pub fn new(classes: &[IsoClass], schur_by_class: Vec<RationalFunction>) -> Result<Self, CellTraceError> {
        if schur_by_class.len() != classes.len() {
            return Err(CellTraceError::SchurCount {
                expected: classes.len(),
                got: schur_by_class.len(),
            });
        }
        if let Some(k) = schur_by_class.iter().position(|c| c.is_zero()) {
            return Err(CellTraceError::ZeroSchurElement(k));
        }
        let inverses: Vec<RationalFunction> =
            schur_by_class.iter().map(|c| c.inv().expect("nonzero")).collect();
        let dim = classes.first().map_or(0, |c| c.character.len());
        let tau_on_theta = (0..dim)
            .map(|b| {
                let mut t = RationalFunction::zero();
                for (class, inv) in classes.iter().zip(&inverses) {
                    let chi = &class.character[b];
                    if !chi.is_zero() {
                        t = &t + &(&RationalFunction::from_laurent(chi.to_laurent()) * inv);
                    }
                }
                t
            })
            .collect();
        Ok(Self {
            schur_by_class,
            tau_on_theta,
        })
    }

    /// The sum of the irreducible characters: every `c_chi = 1`.
    pub fn sum_of_characters(classes: &[IsoClass]) -> Self {
        Self::new(classes, vec![RationalFunction::one(); classes.len()]).expect("unit Schur elements")
    }

    pub fn schur_by_class(&self) -> &[RationalFunction] {
        &self.schur_by_class
    }

    pub fn tau_theta(&self, a: usize) -> &RationalFunction {
        &self.tau_on_theta[a]
    }

    pub fn tau(&self, x: &QSchurElement) -> RationalFunction {
        let mut t = RationalFunction::zero();
        for (a, c) in x.support() {
            let ta = &self.tau_on_theta[a];
            if !ta.is_zero() {
                t = &t + &(c * ta);
            }
        }
        t
    }

    pub fn all_schur_elements_one(&self) -> bool {
        self.schur_by_class.iter().all(|c| c.is_one())
    }
}

/// The trace form, its Gram matrix and dual basis, the Wedderburn basis and
/// the matrices `M` and `D = M^T P^-1 M`.
#[derive(Clone, Debug)]
pub struct WedderburnData<'a> {
    algebra: &'a QSchurAlgebra,
    classes: Vec<IsoClass>,
    class_of_cell: Vec<usize>,
    form: TraceForm,
    gram: Matrix<RationalFunction>,
    gram_inv: Matrix<RationalFunction>,
    duals: Vec<QSchurElement>,
    /// `basis[c] = c_d^-1 theta_c theta_d^dual` with `d` distinguished in the left cell of `c`.
    basis: Vec<QSchurElement>,
    m: Matrix<RationalFunction>,
    d: Matrix<RationalFunction>,
}

impl<'a> WedderburnData<'a> {
    pub fn new(algebra: &'a QSchurAlgebra, classes: Vec<IsoClass>, form: TraceForm) -> Result<Self, CellTraceError> {
        let dim = algebra.dim();
        let mut class_of_cell = vec![0; algebra.left_cells().len()];
        for (k, class) in classes.iter().enumerate() {
            for &cell in &class.left_cells {
                class_of_cell[cell] = k;
            }
        }
        let gram = Matrix::from_fn(dim, dim, |a, b| {
            let mut t = RationalFunction::zero();
            for (c, f) in algebra.product(a, b) {
                let tc = form.tau_theta(*c);
                if !tc.is_zero() {
                    t = &t + &(&RationalFunction::from_laurent(f.to_laurent()) * tc);
                }
            }
            t
        });
        let gram_inv = inverse(&gram).map_err(|e| match e {
            LinalgError::Singular | LinalgError::NotSquare(..) => CellTraceError::SingularGram,
        })?;
        let duals: Vec<QSchurElement> = (0..dim)
            .map(|b| QSchurElement {
                coords: gram_inv.row(b).to_vec(),
            })
            .collect();

        let mut data = Self {
            algebra,
            classes,
            class_of_cell,
            form,
            gram,
            gram_inv,
            duals,
            basis: Vec::new(),
            m: Matrix::filled(0, 0, RationalFunction::zero()),
            d: Matrix::filled(0, 0, RationalFunction::zero()),
        };
        data.basis = (0..dim)
            .map(|c| {
                let d = data.distinguished_for(c);
                let inv = data.schur_element(d).inv().expect("nonzero Schur element");
                algebra.multiply(&algebra.theta(c), &data.duals[d]).scale(&inv)
            })
            .collect();
        let coords = Matrix::from_fn(dim, dim, |c, a| data.basis[c].coords[a].clone());
        data.m = inverse(&coords).map_err(|_| CellTraceError::LinearDependence)?;
        for a in 0..dim {
            for c in 0..dim {
                let x = data.m.get(a, c);
                if !x.is_in_a() {
                    return Err(CellTraceError::NonIntegralEntry {
                        row: algebra.name(a),
                        col: algebra.name(c),
                        value: x.to_string(),
                    });
                }
            }
        }
        let mt_pinv = crate::linalg::rf_mul(&data.m.transpose(), &data.gram_inv);
        data.d = crate::linalg::rf_mul(&mt_pinv, &data.m);
        if !is_monomial(&data.d, |x| !x.is_zero()) {
            return Err(CellTraceError::NotMonomial);
        }
        Ok(data)
    }

    /// Builds classes and the form with the given Schur elements (all 1 if `None`).
    pub fn with_schur_elements(
        algebra: &'a QSchurAlgebra,
        schur: Option<Vec<RationalFunction>>,
    ) -> Result<Self, CellTraceError> {
        let classes = iso_classes(algebra)?;
        let form = match schur {
            Some(c) => TraceForm::new(&classes, c)?,
            None => TraceForm::sum_of_characters(&classes),
        };
        Self::new(algebra, classes, form)
    }

    pub fn algebra(&self) -> &'a QSchurAlgebra {
        self.algebra
    }

    pub fn classes(&self) -> &[IsoClass] {
        &self.classes
    }

    pub fn form(&self) -> &TraceForm {
        &self.form
    }

    /// Isomorphism class of the cell module of the left cell containing `a`.
    pub fn class_of(&self, a: usize) -> usize {
        self.class_of_cell[self.algebra.cells().left.class_of(a)]
    }

    pub fn distinguished_for(&self, c: usize) -> usize {
        self.algebra
            .distinguished_of_cell(c)
            .expect("every left cell holds a distinguished element")
    }

    /// `c_d`, the Schur element of the character of the cell module of `d`.
    pub fn schur_element(&self, d: usize) -> &RationalFunction {
        &self.form.schur_by_class[self.class_of(d)]
    }

    pub fn schur_elements(&self) -> Vec<(usize, RationalFunction)> {
        self.algebra
            .distinguished_idx()
            .iter()
            .map(|&d| (d, self.schur_element(d).clone()))
            .collect()
    }

    pub fn gram(&self) -> &Matrix<RationalFunction> {
        &self.gram
    }

    pub fn gram_inv(&self) -> &Matrix<RationalFunction> {
        &self.gram_inv
    }

    /// `theta_b^dual` in theta-coordinates.
    pub fn dual(&self, b: usize) -> &QSchurElement {
        &self.duals[b]
    }

    /// `B_c = c_d^-1 theta_c theta_d^dual`.
    pub fn basis_element(&self, c: usize) -> &QSchurElement {
        &self.basis[c]
    }

    pub fn basis(&self) -> &[QSchurElement] {
        &self.basis
    }

    /// `theta_a = sum_c m(a, c) B_c`.
    pub fn change_of_basis(&self) -> &Matrix<RationalFunction> {
        &self.m
    }

    pub fn monomial_d(&self) -> &Matrix<RationalFunction> {
        &self.d
    }

    /// `c_chi^-1 theta_a theta_b^dual` for `a, b` in one left cell.
    pub fn matrix_unit(&self, a: usize, b: usize) -> QSchurElement {
        let s = self.algebra;
        let inv = self.form.schur_by_class[self.class_of(a)].inv().expect("nonzero");
        s.multiply(&s.theta(a), &self.duals[b]).scale(&inv)
    }

    /// `e_Gamma = c_chi^-1 sum_{a in Gamma} theta_a theta_a^dual` for left cell `k`.
    pub fn central_idempotent(&self, k: usize) -> QSchurElement {
        let s = self.algebra;
        let mut e = QSchurElement::zero(s.dim());
        for &a in &s.left_cells()[k] {
            e = e.add(&self.matrix_unit(a, a));
        }
        e
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classes_2_2() {
        let s = QSchurAlgebra::new(2, 2).unwrap();
        let classes = iso_classes(&s).unwrap();
        let sizes: Vec<usize> = classes.iter().map(|c| c.left_cells.len()).collect();
        assert_eq!(sizes, vec![3, 1]);
        assert!(classes.iter().all(|c| c.dim == c.left_cells.len()));
        let tau = TraceForm::sum_of_characters(&classes);
        assert_eq!(tau.tau(&s.identity()), RationalFunction::from_int(4));
    }

    #[test]
    fn trivial_algebra() {
        let s = QSchurAlgebra::new(1, 1).unwrap();
        let c = RationalFunction::parse("(v)/(1)").unwrap();
        let w = WedderburnData::with_schur_elements(&s, Some(vec![c.clone()])).unwrap();
        assert_eq!(w.dual(0).coords[0], c);
        assert!(w.change_of_basis().get(0, 0).is_one());
        assert_eq!(w.monomial_d().get(0, 0), &c);
    }

    #[test]
    fn permutation_d_with_unit_schur_elements() {
        let s = QSchurAlgebra::new(2, 2).unwrap();
        let w = WedderburnData::with_schur_elements(&s, None).unwrap();
        let d = w.monomial_d();
        for i in 0..s.dim() {
            for j in 0..s.dim() {
                let x = d.get(i, j);
                assert!(x.is_zero() || x.is_one());
            }
        }
    }
}
