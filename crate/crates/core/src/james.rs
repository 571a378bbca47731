//! Specializations `phi_e : A -> Z[zeta_2e]` and `phi_l : A -> F_l`, exact
//! ranks of the specialized change-of-basis matrices, and the rank report
//! behind the James-conjecture criterion.

use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arith::{
    is_prime, specialize_rational_cyclotomic, specialize_rational_prime, ArithError, CyclotomicField,
    CyclotomicNumber, PrimeFieldElement, RationalFunction,
};
use crate::celltrace::WedderburnData;
use crate::linalg::{rank, Matrix, PivotStrategy};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum JamesError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("e must be positive")]
    BadOrder,
    #[error("F_{ell} has no element t with ord(t^2) = {e}")]
    NoSuitableImage { ell: u64, e: u64 },
    #[error("v-image {t} has ord(t^2) = {got:?} in F_{ell}, expected {e}")]
    WrongImageOrder { ell: u64, t: u64, e: u64, got: Option<u64> },
    #[error("l = {ell} <= r = {r}; pass the small-l override to allow it")]
    SmallEll { ell: u64, r: usize },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Where `v` goes.
#[derive(Clone, Debug)]
pub enum Specialization {
    /// `v -> zeta_{2e}` in `Q(zeta_{2e})`.
    Cyclotomic { e: u64, field: Arc<CyclotomicField> },
    /// `v -> t` in `F_l` with `ord(t^2) = e`.
    PrimeField { ell: u64, e: u64, v_image: PrimeFieldElement },
}

pub fn make_cyclotomic_specialization(e: u64) -> Result<Specialization, JamesError> {
    if e == 0 {
        return Err(JamesError::BadOrder);
    }
    Ok(Specialization::Cyclotomic {
        e,
        field: CyclotomicField::new(2 * e as u32),
    })
}

/// With no image given, picks the smallest `t` of order `2e` (so `t` is a
/// root of `Phi_{2e}`), falling back to the smallest `t` with `ord(t^2) = e`.
pub fn make_prime_specialization(ell: u64, e: u64, v_image: Option<u64>) -> Result<Specialization, JamesError> {
    if !is_prime(ell) {
        return Err(JamesError::NotPrime(ell));
    }
    if e == 0 {
        return Err(JamesError::BadOrder);
    }
    let elt = |t: u64| PrimeFieldElement::new(ell, t as i128).expect("prime modulus");
    let square_order = |t: PrimeFieldElement| (t * t).multiplicative_order();
    let v_image = match v_image {
        Some(t) => {
            let x = elt(t);
            let got = square_order(x);
            if got != Some(e) {
                return Err(JamesError::WrongImageOrder { ell, t, e, got });
            }
            x
        }
        None => (1..ell)
            .map(elt)
            .find(|x| x.multiplicative_order() == Some(2 * e))
            .or_else(|| (1..ell).map(elt).find(|&x| square_order(x) == Some(e)))
            .ok_or(JamesError::NoSuitableImage { ell, e })?,
    };
    Ok(Specialization::PrimeField { ell, e, v_image })
}

impl Specialization {
    /// For prime-field kinds: whether `phi_l` factors through `phi_e`, that
    /// is, whether the image of `v` is a root of `Phi_{2e}`.
    pub fn factors_through_cyclotomic(&self) -> bool {
        match self {
            Specialization::PrimeField { e, v_image, .. } => v_image.multiplicative_order() == Some(2 * e),
            Specialization::Cyclotomic { .. } => false,
        }
    }
}

pub fn specialize_prime_matrix(
    m: &Matrix<RationalFunction>,
    v_image: PrimeFieldElement,
) -> Result<Matrix<PrimeFieldElement>, ArithError> {
    m.try_map(|x| specialize_rational_prime(x, v_image))
}

pub fn specialize_cyclotomic_matrix(
    m: &Matrix<RationalFunction>,
    field: &Arc<CyclotomicField>,
) -> Result<Matrix<CyclotomicNumber>, ArithError> {
    m.try_map(|x| specialize_rational_cyclotomic(x, field))
}

/// Rank by both pivoting strategies; they must agree.
fn checked_rank<F: crate::linalg::FieldElement>(m: &Matrix<F>) -> (usize, bool) {
    let a = rank(m, PivotStrategy::FirstRow);
    let b = rank(m, PivotStrategy::LastRowReversed);
    (a, a == b)
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PrimeRank {
    pub ell: u64,
    pub v_image: u64,
    pub outside_hypothesis: bool,
    pub rank_m: Option<usize>,
    pub rank_d: Option<usize>,
    /// Entries of D whose image under `phi_l` is nonzero.
    pub b: Option<usize>,
    pub factorization_applicable: bool,
    pub factorization_holds: Option<bool>,
    pub pivot_strategies_agree: bool,
    pub rank_d_equals_b: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct HypothesisChecks {
    pub schur_elements_in_a: bool,
    pub gram_inverse_in_a: bool,
    /// `a == rank phi_e(M)`.
    pub a_equals_cyclotomic_rank: bool,
    /// Per prime, `b == rank phi_e(M)`.
    pub b_equals_cyclotomic_rank: Vec<bool>,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct InequalityChain {
    /// Per prime: `rank phi_l(D) <= rank phi_l(M) <= rank phi_e(M) <= |M(n,r)|`.
    pub per_prime: Vec<bool>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct RankReport {
    pub n: usize,
    pub r: usize,
    pub e: u64,
    pub tau_config: Vec<String>,
    pub rank_generic: usize,
    pub rank_cyclotomic: Option<usize>,
    /// Entries of D whose image under `phi_e` is nonzero.
    pub a: Option<usize>,
    pub cyclotomic_rank_d: Option<usize>,
    pub per_prime: Vec<PrimeRank>,
    pub hypothesis_checks: HypothesisChecks,
    pub inequality_chain: InequalityChain,
    pub rank_equal_across_primes: bool,
    pub pivot_strategies_agree: bool,
}

impl RankReport {
    /// Internal invariants: the inequality chain, rank of D equal to the
    /// nonvanishing count, pivot independence, and the factorization.
    pub fn invariants_hold(&self) -> bool {
        self.inequality_chain.holds
            && self.pivot_strategies_agree
            && self.per_prime.iter().all(|p| {
                p.error.is_none() && p.rank_d_equals_b != Some(false) && p.factorization_holds != Some(false)
            })
    }
}

#[derive(Clone, Debug)]
pub struct JamesConfig {
    pub e: u64,
    pub primes: Vec<u64>,
    /// Forces the image of `v` for every prime.
    pub v_image: Option<u64>,
    pub allow_small_ell: bool,
    /// Also runs `-t` for each chosen image `t`.
    pub both_roots: bool,
}

pub fn james_report(w: &WedderburnData, cfg: &JamesConfig) -> Result<RankReport, JamesError> {
    let s = w.algebra();
    let size = s.dim();
    let m = w.change_of_basis();
    let d = w.monomial_d();

    let cyc = make_cyclotomic_specialization(cfg.e)?;
    let Specialization::Cyclotomic { field, .. } = &cyc else { unreachable!() };
    let (rank_cyclotomic, cyc_d, a, cyc_agree) = match (
        specialize_cyclotomic_matrix(m, field),
        specialize_cyclotomic_matrix(d, field),
    ) {
        (Ok(cm), Ok(cd)) => {
            let (rm, ok1) = checked_rank(&cm);
            let (rd, ok2) = checked_rank(&cd);
            let nonzero = count_nonzero(&cd, |x| x.is_zero());
            (Some(rm), Some(rd), Some(nonzero), ok1 && ok2)
        }
        _ => (None, None, None, true),
    };

    let mut specs = Vec::new();
    for &ell in &cfg.primes {
        if ell as usize <= s.r() && !cfg.allow_small_ell {
            return Err(JamesError::SmallEll { ell, r: s.r() });
        }
        let spec = make_prime_specialization(ell, cfg.e, cfg.v_image)?;
        let Specialization::PrimeField { v_image, .. } = spec else { unreachable!() };
        specs.push(spec.clone());
        if cfg.both_roots {
            let neg = PrimeFieldElement::new(ell, -(v_image.residue() as i128)).expect("prime");
            specs.push(Specialization::PrimeField { ell, e: cfg.e, v_image: neg });
        }
    }
    let cyclotomic_m = specialize_cyclotomic_matrix(m, field).ok();
    let per_prime: Vec<PrimeRank> = specs
        .par_iter()
        .map(|spec| prime_rank(spec, m, d, cyclotomic_m.as_ref(), s.r()))
        .collect();

    let chain: Vec<bool> = per_prime
        .iter()
        .map(|p| match (p.rank_d, p.rank_m, rank_cyclotomic) {
            (Some(rd), Some(rm), Some(rc)) => rd <= rm && rm <= rc && rc <= size,
            _ => false,
        })
        .collect();
    let ranks: Vec<Option<usize>> = per_prime.iter().map(|p| p.rank_m).collect();
    let rank_equal_across_primes = ranks.windows(2).all(|x| x[0] == x[1]) && ranks.iter().all(|x| x.is_some());
    let pivot_strategies_agree = cyc_agree && per_prime.iter().all(|p| p.pivot_strategies_agree);

    let hypothesis_checks = HypothesisChecks {
        schur_elements_in_a: w.schur_elements().iter().all(|(_, c)| c.is_in_a()),
        gram_inverse_in_a: (0..size).all(|i| (0..size).all(|j| w.gram_inv().get(i, j).is_in_a())),
        a_equals_cyclotomic_rank: a.is_some() && a == rank_cyclotomic,
        b_equals_cyclotomic_rank: per_prime.iter().map(|p| p.b.is_some() && p.b == rank_cyclotomic).collect(),
    };
    Ok(RankReport {
        n: s.n(),
        r: s.r(),
        e: cfg.e,
        tau_config: w.form().schur_by_class().iter().map(|c| c.to_string()).collect(),
        rank_generic: size,
        rank_cyclotomic,
        a,
        cyclotomic_rank_d: cyc_d,
        per_prime,
        hypothesis_checks,
        inequality_chain: InequalityChain {
            holds: chain.iter().all(|&x| x),
            per_prime: chain,
        },
        rank_equal_across_primes,
        pivot_strategies_agree,
    })
}

fn count_nonzero<T: Clone>(m: &Matrix<T>, is_zero: impl Fn(&T) -> bool) -> usize {
    (0..m.rows())
        .map(|i| (0..m.cols()).filter(|&j| !is_zero(m.get(i, j))).count())
        .sum()
}

fn prime_rank(
    spec: &Specialization,
    m: &Matrix<RationalFunction>,
    d: &Matrix<RationalFunction>,
    cyclotomic_m: Option<&Matrix<CyclotomicNumber>>,
    r: usize,
) -> PrimeRank {
    let Specialization::PrimeField { ell, v_image, .. } = *spec else { unreachable!() };
    let mut out = PrimeRank {
        ell,
        v_image: v_image.residue(),
        outside_hypothesis: ell as usize <= r,
        rank_m: None,
        rank_d: None,
        b: None,
        factorization_applicable: spec.factors_through_cyclotomic(),
        factorization_holds: None,
        pivot_strategies_agree: true,
        rank_d_equals_b: None,
        error: None,
    };
    let (pm, pd) = match (specialize_prime_matrix(m, v_image), specialize_prime_matrix(d, v_image)) {
        (Ok(pm), Ok(pd)) => (pm, pd),
        (Err(e), _) | (_, Err(e)) => {
            out.error = Some(e.to_string());
            return out;
        }
    };
    let (rm, ok1) = checked_rank(&pm);
    let (rd, ok2) = checked_rank(&pd);
    let b = count_nonzero(&pd, |x| x.is_zero());
    out.rank_m = Some(rm);
    out.rank_d = Some(rd);
    out.b = Some(b);
    out.rank_d_equals_b = Some(rd == b);
    out.pivot_strategies_agree = ok1 && ok2;
    if out.factorization_applicable {
        if let Some(cm) = cyclotomic_m {
            let holds = (0..pm.rows()).all(|i| {
                (0..pm.cols()).all(|j| cm.get(i, j).reduce_mod_prime(v_image).ok() == Some(*pm.get(i, j)))
            });
            out.factorization_holds = Some(holds);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn image(ell: u64, e: u64) -> Result<u64, JamesError> {
        match make_prime_specialization(ell, e, None)? {
            Specialization::PrimeField { v_image, .. } => Ok(v_image.residue()),
            _ => unreachable!(),
        }
    }

    #[test]
    fn default_images() {
        assert_eq!(image(5, 2), Ok(2));
        assert_eq!(image(13, 2), Ok(5));
        assert_eq!(image(7, 3), Ok(3));
        assert_eq!(image(13, 3), Ok(4));
        assert_eq!(image(7, 7), Err(JamesError::NoSuitableImage { ell: 7, e: 7 }));
        assert!(matches!(image(9, 2), Err(JamesError::NotPrime(9))));
    }

    #[test]
    fn given_images() {
        assert!(make_prime_specialization(5, 2, Some(3)).is_ok());
        assert!(matches!(
            make_prime_specialization(5, 2, Some(4)),
            Err(JamesError::WrongImageOrder { .. })
        ));
    }
}
