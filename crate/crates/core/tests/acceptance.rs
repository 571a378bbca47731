//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! A criterion listed in `KNOWN_FAILURES` is expected to fail; the run exits
//! nonzero if any criterion's outcome differs from its expectation, so a
//! known failure that starts passing must be removed from the list.

use std::time::{Duration, Instant};

use klschur::arith::{LaurentPoly, RationalFunction};
use klschur::asymptotic::{self, AsymptoticAlgebra};
use klschur::celltrace::{self, WedderburnData};
use klschur::hecke::{self, HeckeAlgebra, PropertyOptions, StandardDual};
use klschur::james::{james_report, JamesConfig};
use klschur::qschur::{self, h_poincare, MnrIndex, QSchurAlgebra};
use klschur::report::SuiteReport;
use klschur::weyl::{double_coset_reps, Composition, Permutation};

const LIMIT_WORKED_EXAMPLE: Duration = Duration::from_secs(1);
const LIMIT_HECKE: Duration = Duration::from_secs(60);
const LIMIT_QSCHUR: Duration = Duration::from_secs(120);
const LIMIT_TRACE_FORM: Duration = Duration::from_secs(60);
const LIMIT_ASYMPTOTIC: Duration = Duration::from_secs(120);
const LIMIT_RANKS: Duration = Duration::from_secs(30);
const LIMIT_STRETCH: Duration = Duration::from_secs(30 * 60);

const SMALL_SIZES: [(usize, usize); 4] = [(1, 1), (2, 2), (2, 3), (3, 2)];

/// Criteria expected to fail, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    7,
    "e = 2: with tau the sum of the cell characters, P^-1 has entries outside A, \
     phi_l(D) is not phi_l(M)^T phi_l(P^-1) phi_l(M), and rank phi_l(D) = 10 > rank phi_l(M) = 7",
)];

/// Criteria whose failure does not fail the run.
const NON_GATING: &[u32] = &[9];

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn failures(suites: &[SuiteReport]) -> Vec<String> {
    suites
        .iter()
        .flat_map(|s| s.failures().map(move |c| format!("{}/{}", s.suite, c.property)))
        .collect()
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed())
}

fn idx(lambda: &[usize], word: &[usize], mu: &[usize]) -> MnrIndex {
    let r = lambda.iter().sum();
    MnrIndex {
        lambda: Composition::new(lambda.to_vec(), r).unwrap(),
        w: Permutation::from_word(r, word).unwrap(),
        mu: Composition::new(mu.to_vec(), r).unwrap(),
    }
}

fn worked_example() -> Outcome {
    let (checks, t) = timed(|| {
        let perm = |w: &[usize]| Permutation::from_word(3, w).unwrap();
        let comp = |p: &[usize]| Composition::new(p.to_vec(), 3).unwrap();
        let (lam, mu) = (comp(&[2, 1, 0]), comp(&[1, 1, 1]));
        let maximal = |x: &Composition, y: &Composition| -> Vec<Permutation> {
            double_coset_reps(x, y).unwrap().into_iter().map(|d| d.w_max).collect()
        };
        let s = QSchurAlgebra::new(3, 3).unwrap();
        let h = s.hecke();
        let a = idx(&[2, 1, 0], &[], &[1, 1, 1]);
        let b = idx(&[1, 1, 1], &[2], &[2, 1, 0]);
        let c = idx(&[2, 1, 0], &[2], &[2, 1, 0]);
        let a2 = idx(&[1, 1, 1], &[1], &[1, 1, 1]);
        vec![
            ("D+(lambda,mu)", maximal(&lam, &mu) == vec![perm(&[1]), perm(&[1, 2]), perm(&[1, 2, 1])]),
            ("D+(mu,nu)", maximal(&mu, &lam) == vec![perm(&[1]), perm(&[2, 1]), perm(&[1, 2, 1])]),
            ("D+(lambda,nu)", maximal(&lam, &lam) == vec![perm(&[1]), perm(&[1, 2, 1])]),
            ("g", h.g_constant(&perm(&[1]), &perm(&[2, 1]), &perm(&[1, 2, 1])).is_one()),
            ("h_mu", h_poincare(&mu).is_one()),
            ("f(a,b,c)", s.f_constant(&a, &b, &c).unwrap().is_one()),
            ("f(a',b,c)", s.f_constant(&a2, &b, &c).unwrap().is_zero()),
        ]
    });
    let bad: Vec<&str> = checks.iter().filter(|(_, ok)| !ok).map(|(k, _)| *k).collect();
    outcome(
        bad.is_empty() && t < LIMIT_WORKED_EXAMPLE,
        format!("{} exact values, {:.2?}{}", checks.len(), t, if bad.is_empty() { String::new() } else { format!("; wrong: {bad:?}") }),
    )
}

fn hecke_suite() -> Outcome {
    let (suites, t) = timed(|| {
        let mut out = vec![];
        for r in 2..=4 {
            let h = HeckeAlgebra::new(r);
            let rep = hecke::verify_properties(&h, PropertyOptions { bivariate_max_rank: 4 });
            out.push(rep);
            out.push(StandardDual::new(&h).unwrap().verify(&h));
        }
        out
    });
    let names: Vec<String> = (1..=15).filter(|&k| k != 12).map(|k| format!("P{k}")).collect();
    let present = suites
        .iter()
        .step_by(2)
        .all(|s| names.iter().all(|p| s.get(p).is_some_and(|c| c.checked > 0)));
    let bad = failures(&suites);
    outcome(
        present && bad.is_empty() && t < LIMIT_HECKE,
        format!("P1-P11, P13-P15 at r = 2, 3, 4, {t:.2?}; failures: {bad:?}"),
    )
}

fn qschur_suite(algebras: &[QSchurAlgebra]) -> Outcome {
    let (suites, t) = timed(|| algebras.iter().map(qschur::verify_properties).collect::<Vec<_>>());
    let bad = failures(&suites);
    let checks = suites.iter().map(|s| s.checks.len()).sum::<usize>();
    outcome(bad.is_empty() && t < LIMIT_QSCHUR, format!("{checks} checks over 4 sizes, {t:.2?}; failures: {bad:?}"))
}

fn algebra_sanity(algebras: &[QSchurAlgebra]) -> Outcome {
    let mut bad = vec![];
    let mut triples = 0usize;
    for s in algebras {
        let rep = qschur::verify_properties(s);
        for p in ["associativity", "identity-neutrality"] {
            if !rep.get(p).is_some_and(|c| c.passed()) {
                bad.push(format!("({},{}) {p}", s.n(), s.r()));
            }
        }
        let h = s.hecke();
        let m = s.dim();
        for a in 0..m {
            for b in 0..m {
                for c in 0..m {
                    let f = s.f_idx(a, b, c);
                    if f.is_zero() {
                        continue;
                    }
                    triples += 1;
                    let g = h.g_idx(s.sigma_idx(a), s.sigma_idx(b), s.sigma_idx(c)).to_laurent();
                    let quotient = RationalFunction::new(g, h_poincare(s.index(a).co())).unwrap();
                    if !quotient.is_in_a() || quotient != RationalFunction::from_laurent(f.to_laurent()) {
                        bad.push(format!("({},{}) f{:?} not integral", s.n(), s.r(), (a, b, c)));
                    }
                }
            }
        }
    }
    outcome(bad.is_empty(), format!("associativity, unit, {triples} nonzero constants integral; failures: {bad:?}"))
}

fn trace_form_suite(s22: &QSchurAlgebra) -> Outcome {
    let ((suites, rescaled_ok), t) = timed(|| {
        let w = WedderburnData::with_schur_elements(s22, None).unwrap();
        let v = RationalFunction::from_laurent(LaurentPoly::v());
        let w2 = WedderburnData::with_schur_elements(s22, Some(vec![RationalFunction::from_int(2), v])).unwrap();
        let d = w2.monomial_d();
        let rescaled_ok = (0..s22.dim()).all(|c| {
            let ct = s22.transpose_idx(c);
            (0..s22.dim()).all(|k| {
                let entry = d.get(c, k);
                if k == ct {
                    entry == w2.schur_element(w2.distinguished_for(c))
                } else {
                    entry.is_zero()
                }
            })
        });
        let suites = vec![
            celltrace::verify_properties(&w),
            celltrace::verify_properties(&w2),
            celltrace::compare_forms(&w, &w2),
        ];
        (suites, rescaled_ok)
    });
    let pairs = suites[0].get("dual-pairing").map_or(0, |c| c.checked);
    let bad = failures(&suites);
    outcome(
        bad.is_empty() && rescaled_ok && pairs == 100 && t < LIMIT_TRACE_FORM,
        format!("{pairs} dual pairs, c = 1 and c = (2, v), rescaled D entries {rescaled_ok}, {t:.2?}; failures: {bad:?}"),
    )
}

fn asymptotic_suite(algebras: &[QSchurAlgebra]) -> Outcome {
    let (suites, t) = timed(|| {
        let mut out = vec![];
        for s in algebras.iter().filter(|s| s.r() >= 2) {
            let j = AsymptoticAlgebra::new(s).unwrap();
            let w1 = WedderburnData::with_schur_elements(s, None).unwrap();
            let classes = w1.classes().len();
            let v = RationalFunction::from_laurent(LaurentPoly::v());
            let other: Vec<RationalFunction> =
                (0..classes).map(|k| if k == 0 { RationalFunction::from_int(2) } else { v.clone() }).collect();
            let w2 = WedderburnData::with_schur_elements(s, Some(other)).unwrap();
            let mut first = asymptotic::verify_properties(&j);
            first.push(asymptotic::verify_form_independence(&j, &w1, &w2));
            out.push(first);
            out.push(asymptotic::verify_preimages(&j, &w1));
            out.push(asymptotic::verify_preimages(&j, &w2));
        }
        out
    });
    let bad = failures(&suites);
    outcome(bad.is_empty() && t < LIMIT_ASYMPTOTIC, format!("(2,2), (2,3), (3,2), two trace forms, {t:.2?}; failures: {bad:?}"))
}

fn rank_pipeline(s22: &QSchurAlgebra) -> Outcome {
    let (results, t) = timed(|| {
        let w = WedderburnData::with_schur_elements(s22, None).unwrap();
        [(2u64, vec![5u64, 13]), (3, vec![7, 13])]
            .into_iter()
            .map(|(e, primes)| {
                let cfg = JamesConfig { e, primes, v_image: None, allow_small_ell: false, both_roots: true };
                (e, james_report(&w, &cfg))
            })
            .collect::<Vec<_>>()
    });
    let mut ok = t < LIMIT_RANKS;
    let mut parts = vec![];
    for (e, rep) in results {
        match rep {
            Ok(rep) => {
                let chain = rep.inequality_chain.holds;
                let counts = rep.per_prime.iter().all(|p| p.rank_d_equals_b == Some(true));
                // Every image where the map factors through Z[zeta_2e] passes, and each prime has one.
                let factor = rep.per_prime.iter().all(|p| p.factorization_holds != Some(false))
                    && rep
                        .per_prime
                        .iter()
                        .all(|p| rep.per_prime.iter().any(|q| q.ell == p.ell && q.factorization_holds == Some(true)));
                let ranks: Vec<String> = rep
                    .per_prime
                    .iter()
                    .map(|p| format!("l={} t={}: M {:?} D {:?}", p.ell, p.v_image, p.rank_m, p.rank_d))
                    .collect();
                ok &= chain && counts && factor;
                parts.push(format!(
                    "e={e}: rank phi_e(M) {:?}, {}, chain {chain}, rank D = count {counts}, factorization {factor}, \
                     equal across primes {}",
                    rep.rank_cyclotomic,
                    ranks.join(", "),
                    rep.rank_equal_across_primes
                ));
            }
            Err(err) => {
                ok = false;
                parts.push(format!("e={e}: {err}"));
            }
        }
    }
    outcome(ok, format!("{}; {t:.2?}", parts.join("; ")))
}

fn counting(algebras: &[QSchurAlgebra]) -> Outcome {
    let mut bad = vec![];
    for s in algebras.iter().filter(|s| [(2, 2), (2, 3)].contains(&(s.n(), s.r()))) {
        let two_sided = s.cells().two_sided.classes().len();
        let cells_through_d: usize = s
            .distinguished_idx()
            .iter()
            .map(|&d| s.left_cells().iter().find(|c| c.contains(&d)).map_or(0, |c| c.len()))
            .sum();
        let classes = celltrace::iso_classes(s).unwrap();
        let squares: usize = classes.iter().map(|c| c.dim * c.dim).sum();
        if two_sided != s.partition_count() || cells_through_d != s.dim() || squares != s.dim() {
            bad.push(format!("({},{}): {two_sided} {cells_through_d} {squares}", s.n(), s.r()));
        }
    }
    outcome(bad.is_empty(), format!("(2,2) and (2,3); failures: {bad:?}"))
}

fn stretch() -> Outcome {
    let ((bad, dim), t) = timed(|| {
        let s = QSchurAlgebra::new(3, 3).unwrap();
        let q = qschur::verify_properties(&s);
        let w = WedderburnData::with_schur_elements(&s, None).unwrap();
        let c = celltrace::verify_properties(&w);
        (failures(&[q, c]), s.dim())
    });
    outcome(bad.is_empty() && t < LIMIT_STRETCH, format!("|M(3,3)| = {dim}, q-Schur and trace-form suites, {t:.2?}; failures: {bad:?}"))
}

fn main() {
    let algebras: Vec<QSchurAlgebra> = SMALL_SIZES.iter().map(|&(n, r)| QSchurAlgebra::new(n, r).unwrap()).collect();
    let s22 = &algebras[1];
    let criteria: Vec<(u32, &str, Box<dyn Fn() -> Outcome + '_>)> = vec![
        (1, "worked example at n = r = 3", Box::new(worked_example)),
        (2, "Hecke algebra properties", Box::new(hecke_suite)),
        (3, "q-Schur algebra properties", Box::new(|| qschur_suite(&algebras))),
        (4, "algebra sanity and integrality", Box::new(|| algebra_sanity(&algebras))),
        (5, "trace form, duals and Wedderburn basis at (2,2)", Box::new(|| trace_form_suite(s22))),
        (6, "asymptotic algebra and Phi", Box::new(|| asymptotic_suite(&algebras))),
        (7, "specialized ranks at (2,2)", Box::new(|| rank_pipeline(s22))),
        (8, "counting invariants", Box::new(|| counting(&algebras))),
        (9, "(3,3) suites", Box::new(stretch)),
    ];
    let mut unexpected = vec![];
    for (k, title, run) in criteria {
        let o = run();
        let known = KNOWN_FAILURES.iter().find(|(j, _)| *j == k);
        let note = match (o.passed, known, NON_GATING.contains(&k)) {
            (false, Some((_, why)), _) => format!(" [known failure: {why}]"),
            (_, _, true) => " [non-gating]".to_string(),
            _ => String::new(),
        };
        println!("criterion {k}: {} {title}: {}{note}", if o.passed { "PASS" } else { "FAIL" }, o.detail);
        let expected_pass = known.is_none();
        if o.passed != expected_pass && !(NON_GATING.contains(&k) && !o.passed) {
            unexpected.push(k);
        }
    }
    if !unexpected.is_empty() {
        println!("unexpected outcome for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
