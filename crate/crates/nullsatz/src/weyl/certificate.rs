//! Exact replays of the identities behind the Weyl-algebra counterexample:
//! commutator formulas, the inductive membership chain, and a bounded
//! linear system refuting that `x` lies in the left ideal of `yx`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::field::{ExactMatrix, ExtField, FieldElem};

use super::{weyl_mul, WeylElem};

const AT: &str = "weyl::certificate_check";

/// One verified identity family: its display label and how many instances
/// were checked.
#[derive(Debug, Clone)]
pub struct IdentityOutcome {
    pub label: &'static str,
    pub cases: usize,
}

/// A completed certificate run; reaching this value means every identity
/// held and the bounded membership system was unsolvable.
#[derive(Debug, Clone)]
pub struct CertificateReport {
    pub rmax: u32,
    pub r_samples: usize,
    pub seed: u64,
    pub identities: Vec<IdentityOutcome>,
}

/// Outcome counts of the simplicity smoke test; trials that exhaust the
/// step budget are inconclusive rather than failures.
#[derive(Debug, Clone)]
pub struct SmokeOutcome {
    pub trials: usize,
    pub reached: usize,
    pub inconclusive: usize,
}

fn fail(why: String) -> Error {
    Error::InternalInconsistency { at: AT, why }
}

fn commutator(a: &WeylElem, b: &WeylElem) -> WeylElem {
    weyl_mul(a, b).sub(&weyl_mul(b, a))
}

/// Verify the proof identities of the counterexample as exact statements
/// about normal forms, for all indices up to `rmax_degree` and for
/// `r_samples` seeded random elements, then refute `x ∈ A·(yx)` by solving
/// the coefficient system for `s·(yx) = x` over sections `s` of bidegree at
/// most `(rmax_degree, rmax_degree)` and confirming it has no solution.
///
/// The bound is not a compromise: reordering `s·(yx)` never cancels the
/// top bidegree term of `s`, so a solution of any size would force one of
/// bounded size, and none exists.
pub fn certificate_check(
    rmax_degree: u32,
    r_samples: usize,
    seed: u64,
) -> Result<CertificateReport> {
    let rmax = rmax_degree;
    let x = WeylElem::x();
    let y = WeylElem::y();
    let yx = weyl_mul(&y, &x);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(r_samples);
    while samples.len() < r_samples {
        let r = WeylElem::random(&mut rng, rmax, rmax);
        if !r.is_zero() {
            samples.push(r);
        }
    }
    let mut identities = Vec::new();

    // (i) commuting y past a power of x differentiates it.
    for k in 0..=rmax {
        let xk = WeylElem::monomial(k, 0, BigRational::one());
        let lhs = commutator(&y, &xk);
        let rhs = if k == 0 {
            WeylElem::zero()
        } else {
            WeylElem::monomial(k - 1, 0, BigRational::from_integer(BigInt::from(k)))
        };
        if lhs != rhs {
            return Err(fail(format!(
                "the power commutator failed at k = {k}: got {}, expected {}",
                lhs.render(),
                rhs.render()
            )));
        }
    }
    identities.push(IdentityOutcome {
        label: "commuting y past x^k yields k*x^(k-1)",
        cases: rmax as usize + 1,
    });

    // (ii) the commutator with y differentiates every coefficient.
    for r in &samples {
        let lhs = commutator(&y, r);
        let rhs = r.x_derivative();
        if lhs != rhs {
            return Err(fail(format!(
                "the coefficient derivative failed for r = {}: got {}, expected {}",
                r.render(),
                lhs.render(),
                rhs.render()
            )));
        }
    }
    identities.push(IdentityOutcome {
        label: "y*r - r*y equals the x-derivative of r",
        cases: samples.len(),
    });

    // (iii) the membership chain: multiplying the invariant combination by
    // y and correcting inside the ideal steps the derivative order up.
    let mut chain_cases = 0;
    for r in &samples {
        let mut derivs = vec![r.clone()];
        for _ in 0..=rmax {
            derivs.push(derivs.last().unwrap().x_derivative());
        }
        for n in 0..rmax as usize + 1 {
            let yn = WeylElem::monomial(0, n as u32, BigRational::one());
            let inner = yn.add(&weyl_mul(&derivs[n], &x));
            let rhs = weyl_mul(&y, &inner).sub(&weyl_mul(&derivs[n], &yx));
            let ynext = WeylElem::monomial(0, n as u32 + 1, BigRational::one());
            let lhs = ynext.add(&weyl_mul(&derivs[n + 1], &x));
            if lhs != rhs {
                return Err(fail(format!(
                    "the membership chain failed at n = {n} for r = {}: got {}, expected {}",
                    r.render(),
                    rhs.render(),
                    lhs.render()
                )));
            }
            chain_cases += 1;
        }
    }
    identities.push(IdentityOutcome {
        label: "y^(n+1) + r^(n+1)*x = y*(y^n + r^(n)*x) - r^(n)*(y*x)",
        cases: chain_cases,
    });

    // (iv) scalars fall out of the ideal at every power of y.
    for k in 1..=rmax {
        let yk1 = WeylElem::monomial(0, k - 1, BigRational::one());
        let yk = WeylElem::monomial(0, k, BigRational::one());
        let lhs = yk1.scale(&BigRational::from_integer(BigInt::from(k)));
        let rhs = weyl_mul(&yk1, &yx).sub(&weyl_mul(&x, &yk));
        if lhs != rhs {
            return Err(fail(format!(
                "the scalar extraction failed at k = {k}: got {}, expected {}",
                rhs.render(),
                lhs.render()
            )));
        }
    }
    identities.push(IdentityOutcome {
        label: "k*y^(k-1) = y^(k-1)*(y*x) - x*y^k",
        cases: rmax as usize,
    });

    // (v) the bounded coefficient system s·(yx) = x has no solution.
    refute_membership(rmax, &yx)?;
    identities.push(IdentityOutcome {
        label: "x is not a left multiple of y*x (bounded system unsolvable)",
        cases: ((rmax + 1) * (rmax + 1)) as usize,
    });

    Ok(CertificateReport { rmax, r_samples: samples.len(), seed, identities })
}

fn rat_entry(f: &ExtField, q: &BigRational) -> Result<FieldElem> {
    let to64 = |b: &BigInt| -> Result<i64> {
        i64::try_from(b.clone()).map_err(|_| fail("a system coefficient overflowed".into()))
    };
    f.from_rational(to64(q.numer())?, to64(q.denom())?)
}

/// Set up the linear system matching PBW coefficients of `s·(yx) = x` over
/// unknown sections `s` of bidegree at most `(bound, bound)` and verify it
/// is unsolvable.
fn refute_membership(bound: u32, yx: &WeylElem) -> Result<()> {
    let f = ExtField::rationals();
    let mut columns = Vec::new();
    let mut row_of: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    row_of.insert((1, 0), 0);
    for i in 0..=bound {
        for j in 0..=bound {
            let product = weyl_mul(&WeylElem::monomial(i, j, BigRational::one()), yx);
            for (a, b, _) in product.terms() {
                let next = row_of.len();
                row_of.entry((a, b)).or_insert(next);
            }
            columns.push(product);
        }
    }
    let mut rows = vec![vec![f.zero(); columns.len()]; row_of.len()];
    for (col, product) in columns.iter().enumerate() {
        for (a, b, c) in product.terms() {
            rows[row_of[&(a, b)]][col] = rat_entry(&f, c)?;
        }
    }
    let mut target = vec![f.zero(); row_of.len()];
    target[row_of[&(1, 0)]] = f.one();
    let system = ExactMatrix::from_rows(&f, rows, columns.len())?;
    match system.solve(&f, &target)? {
        None => Ok(()),
        Some(_) => Err(fail(
            "the bounded system for s*(y*x) = x admitted a solution".into(),
        )),
    }
}

/// For seeded random nonzero elements, drive each to a nonzero scalar by
/// iterated commutators with the generators, witnessing that its two-sided
/// ideal contains 1. Trials that do not finish within `budget` commutator
/// steps are counted inconclusive.
pub fn simplicity_smoke(trials: usize, budget: usize, seed: u64) -> SmokeOutcome {
    let x = WeylElem::x();
    let y = WeylElem::y();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut reached = 0;
    let mut inconclusive = 0;
    for _ in 0..trials {
        let mut a = WeylElem::random(&mut rng, 4, 4);
        while a.is_zero() {
            a = WeylElem::random(&mut rng, 4, 4);
        }
        let mut steps = 0;
        let scalar = loop {
            if a.is_zero() {
                break false;
            }
            let (dx, dy) = a.bidegree();
            if dx == 0 && dy == 0 {
                break true;
            }
            if steps == budget {
                break false;
            }
            // Lowering the x-degree first keeps every intermediate inside
            // the two-sided ideal of the starting element.
            a = if dx > 0 { commutator(&y, &a) } else { commutator(&a, &x) };
            steps += 1;
        };
        if scalar {
            reached += 1;
        } else {
            inconclusive += 1;
        }
    }
    SmokeOutcome { trials, reached, inconclusive }
}
