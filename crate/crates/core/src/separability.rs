//! Deciding finite separability of `Z<a | f_1 = ... = f_m = 0>`.
//!
//! The ring is finitely separable exactly when
//!
//! 1. the gcd of all relator coefficients taken together is squarefree, and
//! 2. the monic gcd of the relators over `Q` has integer coefficients.
//!
//! Verdicts carry evidence for both conditions. A positive verdict also
//! carries a monic `phi` with `k * phi` certified in `V`, where `k` is the
//! coefficient gcd; a negative one names the offending prime or the
//! non-integer coefficient of the rational gcd.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::{bezout, gcd_list, squarefree, ArithError, BigRat, SquarefreeWitness};
use crate::ideal::{monic_multiple_search, CanonicalBasis, MonicMultiple, Presentation};
use crate::invariants::{default_degree_bound, extract_monic_relation, minimal_polynomial};
use crate::par::{self, Strategy};
use crate::poly::{gcd_q, IntPoly, RationalGcd};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SeparabilityError {
    #[error("the presentation is not finitely separable")]
    NotSeparable,
    #[error("{0} is not squarefree")]
    NotSquarefree(BigInt),
    #[error("torsion split needs k > 1")]
    UnitInput,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailureReason {
    /// No relators: `a` is transcendental.
    NoRelators,
    /// `p^2` divides every relator coefficient.
    NonSquarefreeGcd(BigInt),
    /// The rational gcd has the non-integer `value` at `x^index`.
    NonIntegerGamma { index: usize, value: BigRat },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparabilityVerdict {
    pub separable: bool,
    /// Gcd of all relator coefficients taken together (0 without relators).
    pub coefficient_gcd: BigInt,
    pub squarefree_witness: Option<SquarefreeWitness>,
    pub rational_gcd: Option<RationalGcd>,
    pub failure_reason: Option<FailureReason>,
    pub positive_witness: Option<MonicMultiple>,
}

impl SeparabilityVerdict {
    pub fn gcd_condition_holds(&self) -> bool {
        self.squarefree_witness
            .as_ref()
            .is_some_and(|w| w.is_squarefree)
    }

    pub fn integrality_condition_holds(&self) -> bool {
        self.rational_gcd
            .as_ref()
            .is_some_and(|g| g.gamma.to_int().is_some())
    }
}

/// Highest-degree coefficient of `gamma` that is not an integer.
fn first_non_integer(g: &RationalGcd) -> Option<(usize, BigRat)> {
    g.gamma
        .coeffs()
        .iter()
        .enumerate()
        .rev()
        .find(|(_, c)| !c.denom().is_one())
        .map(|(i, c)| (i, c.clone()))
}

pub fn decide(p: &Presentation) -> SeparabilityVerdict {
    let basis = p.canonical_basis();
    decide_with_basis(p, &basis)
}

pub fn decide_with_basis(p: &Presentation, basis: &CanonicalBasis) -> SeparabilityVerdict {
    if p.is_empty() {
        return SeparabilityVerdict {
            separable: false,
            coefficient_gcd: BigInt::zero(),
            squarefree_witness: None,
            rational_gcd: None,
            failure_reason: Some(FailureReason::NoRelators),
            positive_witness: None,
        };
    }
    let coefficient_gcd = gcd_list(&p.all_coefficients());
    let witness = squarefree(&coefficient_gcd).expect("nonzero relators have positive content");
    let rational = gcd_q(p.relators()).expect("relators are nonzero");

    let failure_reason = if let Some(prime) = &witness.offending_prime {
        Some(FailureReason::NonSquarefreeGcd(prime.clone()))
    } else {
        first_non_integer(&rational)
            .map(|(index, value)| FailureReason::NonIntegerGamma { index, value })
    };
    let separable = failure_reason.is_none();

    let positive_witness = separable
        .then(|| positive_witness(p, basis, &coefficient_gcd))
        .flatten();
    debug_assert!(!separable || positive_witness.is_some());

    SeparabilityVerdict {
        separable,
        coefficient_gcd,
        squarefree_witness: Some(witness),
        rational_gcd: Some(rational),
        failure_reason,
        positive_witness,
    }
}

/// Smallest-degree monic multiple at `k` within the default bound, falling
/// back to extraction from the combined relator.
fn positive_witness(p: &Presentation, basis: &CanonicalBasis, k: &BigInt) -> Option<MonicMultiple> {
    let degree = minimal_polynomial(basis).and_then(|f| f.degree());
    let bound = default_degree_bound(p, degree);
    if let Some(m) = monic_multiple_search(basis, k, bound).expect("valid bound") {
        return Some(m);
    }
    let (g, _) = p.combined_relator();
    extract_monic_relation(basis, &g).ok()
}

/// Decides a batch of presentations, in parallel when enabled.
pub fn decide_batch(ps: &[Presentation], strategy: Strategy) -> Vec<SeparabilityVerdict> {
    par::map(strategy, ps, decide)
}

/// `k` and the tail coefficients `k_1, ..., k_{n-1}` of
/// `k (a^n + k_1 a^{n-1} + ... + k_{n-1} a) = 0`.
pub fn witness_form(v: &SeparabilityVerdict) -> Result<(BigInt, Vec<BigInt>), SeparabilityError> {
    let w = match (&v.positive_witness, v.separable) {
        (Some(w), true) => w,
        _ => return Err(SeparabilityError::NotSeparable),
    };
    let n = w.phi.degree().expect("monic");
    let tail = (1..n).rev().map(|i| w.phi.coeff(i)).collect();
    Ok((w.k.clone(), tail))
}

/// `k = p_1 ... p_n` with cofactors `k_i = k / p_i` and `sum z_i k_i = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionSplit {
    pub k: BigInt,
    /// `(p_i, k_i)` ascending by prime.
    pub parts: Vec<(BigInt, BigInt)>,
    pub bezout: Vec<BigInt>,
}

impl TorsionSplit {
    pub fn verify(&self) -> bool {
        let primes_distinct = self.parts.windows(2).all(|w| w[0].0 < w[1].0);
        let product: BigInt = self.parts.iter().map(|(p, _)| p.clone()).product();
        let cofactors_ok = self.parts.iter().all(|(p, c)| p * c == self.k);
        let identity: BigInt = self
            .parts
            .iter()
            .zip(&self.bezout)
            .map(|((_, c), z)| c * z)
            .sum();
        primes_distinct && product == self.k && cofactors_ok && identity.is_one()
    }
}

pub fn torsion_split(k: &BigInt) -> Result<TorsionSplit, SeparabilityError> {
    if k <= &BigInt::one() {
        return Err(if k.is_one() {
            SeparabilityError::UnitInput
        } else {
            SeparabilityError::Arith(ArithError::NonPositive(k.clone()))
        });
    }
    let w = squarefree(k)?;
    if !w.is_squarefree {
        return Err(SeparabilityError::NotSquarefree(k.clone()));
    }
    let parts: Vec<(BigInt, BigInt)> = w.primes().map(|p| (p.clone(), k / p)).collect();
    let cofactors: Vec<BigInt> = parts.iter().map(|(_, c)| c.clone()).collect();
    let (g, bezout) = bezout(&cofactors)?;
    debug_assert!(g.is_one());
    Ok(TorsionSplit {
        k: k.clone(),
        parts,
        bezout,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerdictCheckError {
    #[error("positive verdict without a witness")]
    MissingWitness,
    #[error("witness multiplier {0} differs from the coefficient gcd")]
    WrongMultiplier(BigInt),
    #[error("witness multiplier is not squarefree")]
    MultiplierNotSquarefree,
    #[error("witness polynomial is not monic with zero constant term")]
    NotMonic,
    #[error("certificate does not re-multiply to k * phi")]
    BadCertificate,
    #[error("p^2 does not divide every relator coefficient")]
    PrimeDoesNotDivide,
    #[error("rational gcd evidence does not check out")]
    BadGamma,
    #[error("verdict and failure reason disagree")]
    Inconsistent,
}

/// Re-checks a verdict using only integer and polynomial arithmetic: no
/// basis, no factorization.
pub fn verify_verdict(p: &Presentation, v: &SeparabilityVerdict) -> Result<(), VerdictCheckError> {
    let coeffs = p.all_coefficients();
    match (&v.failure_reason, v.separable) {
        (None, true) => {
            let w = v
                .positive_witness
                .as_ref()
                .ok_or(VerdictCheckError::MissingWitness)?;
            if w.k != gcd_list(&coeffs) {
                return Err(VerdictCheckError::WrongMultiplier(w.k.clone()));
            }
            if !squarefree_by_trial(&w.k) {
                return Err(VerdictCheckError::MultiplierNotSquarefree);
            }
            if !w.phi.is_monic() || !w.phi.constant_term_is_zero() {
                return Err(VerdictCheckError::NotMonic);
            }
            if w.certificate.claim != w.phi.scale(&w.k) || !w.certificate.verify(p.relators()) {
                return Err(VerdictCheckError::BadCertificate);
            }
            Ok(())
        }
        (Some(FailureReason::NoRelators), false) if p.is_empty() => Ok(()),
        (Some(FailureReason::NonSquarefreeGcd(prime)), false) => {
            let sq = prime * prime;
            if prime <= &BigInt::one() || !coeffs.iter().all(|c| c.is_multiple_of(&sq)) {
                return Err(VerdictCheckError::PrimeDoesNotDivide);
            }
            Ok(())
        }
        (Some(FailureReason::NonIntegerGamma { index, value }), false) => {
            let g = v.rational_gcd.as_ref().ok_or(VerdictCheckError::BadGamma)?;
            if value.denom().is_one() || &g.gamma.coeff(*index) != value || !g.gamma.is_monic() {
                return Err(VerdictCheckError::BadGamma);
            }
            if !gamma_is_gcd(p.relators(), g) {
                return Err(VerdictCheckError::BadGamma);
            }
            Ok(())
        }
        _ => Err(VerdictCheckError::Inconsistent),
    }
}

/// `gamma` divides every relator and is a Q-combination of them, hence is
/// their gcd.
pub fn gamma_is_gcd(relators: &[IntPoly], g: &RationalGcd) -> bool {
    let divides = relators.iter().all(|f| {
        f.to_rat()
            .div_rem(&g.gamma)
            .map(|(_, r)| r.is_zero())
            .unwrap_or(false)
    });
    let combo = relators
        .iter()
        .zip(&g.bezout)
        .fold(crate::poly::RatPoly::zero(), |acc, (f, b)| {
            &acc + &(b * &f.to_rat())
        });
    divides && g.bezout.len() == relators.len() && combo == g.gamma
}

fn squarefree_by_trial(k: &BigInt) -> bool {
    let mut d = BigInt::from(2);
    while &d * &d <= *k {
        if k.is_multiple_of(&(&d * &d)) {
            return false;
        }
        d += 1;
    }
    k >= &BigInt::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn pres(rs: &[&[i64]]) -> Presentation {
        Presentation::new(rs.iter().map(|r| p(r)).collect()).unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn decide_examples() {
        let pr = pres(&[&[0, -1, 1]]);
        let v = decide(&pr);
        assert!(v.separable);
        assert_eq!(v.coefficient_gcd, big(1));
        assert_eq!(
            v.rational_gcd.as_ref().unwrap().gamma,
            p(&[0, -1, 1]).to_rat()
        );
        assert_eq!(v.positive_witness.as_ref().unwrap().phi, p(&[0, -1, 1]));
        verify_verdict(&pr, &v).unwrap();

        let pr = pres(&[&[0, 4]]);
        let v = decide(&pr);
        assert!(!v.separable);
        assert_eq!(
            v.failure_reason,
            Some(FailureReason::NonSquarefreeGcd(big(2)))
        );
        verify_verdict(&pr, &v).unwrap();

        let pr = pres(&[&[0, 1, 2]]);
        let v = decide(&pr);
        assert_eq!(
            v.failure_reason,
            Some(FailureReason::NonIntegerGamma {
                index: 1,
                value: BigRat::new(big(1), big(2))
            })
        );
        verify_verdict(&pr, &v).unwrap();

        let pr = pres(&[&[0, -1, 0, 1], &[0, -6, 6]]);
        let v = decide(&pr);
        assert!(v.separable);
        assert_eq!(
            v.rational_gcd.as_ref().unwrap().gamma,
            p(&[0, -1, 1]).to_rat()
        );
        verify_verdict(&pr, &v).unwrap();

        let pr = pres(&[&[0, 2, 4], &[0, 0, 1, 2]]);
        let v = decide(&pr);
        assert!(!v.separable);
        assert_eq!(v.coefficient_gcd, big(1));
        assert!(matches!(
            v.failure_reason,
            Some(FailureReason::NonIntegerGamma { .. })
        ));
        verify_verdict(&pr, &v).unwrap();

        let v = decide(&Presentation::free());
        assert_eq!(v.failure_reason, Some(FailureReason::NoRelators));
        verify_verdict(&Presentation::free(), &v).unwrap();
    }

    #[test]
    fn witness_examples() {
        let v = decide(&pres(&[&[0, -1, 1]]));
        assert_eq!(witness_form(&v).unwrap(), (big(1), vec![big(-1)]));

        let v = decide(&pres(&[&[0, 0, 2]]));
        assert_eq!(witness_form(&v).unwrap(), (big(2), vec![big(0)]));

        // V = (x^3 - x)<6, x>; x^3 - x itself is not a member
        let pr = pres(&[&[0, -6, 0, 6], &[0, 0, -1, 0, 1]]);
        let v = decide(&pr);
        assert_eq!(
            v.rational_gcd.as_ref().unwrap().gamma,
            p(&[0, -1, 0, 1]).to_rat()
        );
        assert_eq!(
            v.positive_witness.as_ref().unwrap().phi,
            p(&[0, 0, -1, 0, 1])
        );
        assert_eq!(
            witness_form(&v).unwrap(),
            (big(1), vec![big(0), big(-1), big(0)])
        );

        let v = decide(&pres(&[&[0, 4]]));
        assert_eq!(witness_form(&v), Err(SeparabilityError::NotSeparable));
    }

    #[test]
    fn torsion_split_examples() {
        let s = torsion_split(&big(6)).unwrap();
        assert_eq!(s.parts, vec![(big(2), big(3)), (big(3), big(2))]);
        assert_eq!(s.bezout, vec![big(1), big(-1)]);
        assert!(s.verify());

        let s = torsion_split(&big(2)).unwrap();
        assert_eq!(s.parts, vec![(big(2), big(1))]);
        assert_eq!(s.bezout, vec![big(1)]);

        let s = torsion_split(&big(30)).unwrap();
        assert_eq!(
            s.parts,
            vec![(big(2), big(15)), (big(3), big(10)), (big(5), big(6))]
        );
        assert!(s.verify());

        assert_eq!(
            torsion_split(&big(12)),
            Err(SeparabilityError::NotSquarefree(big(12)))
        );
        assert_eq!(torsion_split(&big(1)), Err(SeparabilityError::UnitInput));
    }

    #[test]
    fn tampered_verdicts_are_rejected() {
        let pr = pres(&[&[0, -1, 1]]);
        let mut v = decide(&pr);
        v.positive_witness.as_mut().unwrap().phi = p(&[0, 0, 1]);
        assert!(verify_verdict(&pr, &v).is_err());

        let pr = pres(&[&[0, 12]]);
        let mut v = decide(&pr);
        v.failure_reason = Some(FailureReason::NonSquarefreeGcd(big(3)));
        assert_eq!(
            verify_verdict(&pr, &v),
            Err(VerdictCheckError::PrimeDoesNotDivide)
        );
    }
}
