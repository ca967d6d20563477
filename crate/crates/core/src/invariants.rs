//! Invariants of the generator `a` of `Z<a>`: algebraic degree, minimal
//! polynomial, integer torsion and torsion exponent, plus extraction of a
//! monic torsion relation `k * phi(a) = 0` from any given relation.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::arith::divisors;
use crate::ideal::{monic_multiple_search, CanonicalBasis, MonicMultiple, Presentation};
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InvariantsError {
    #[error("the presentation has no monic torsion relation")]
    HypothesisUnmet,
    #[error("{0} is not a member of the relator ideal")]
    NotMember(IntPoly),
    #[error("no monic relation with k = {k} up to degree {bound}")]
    ExtractionFailed { k: BigInt, bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct TorsionOptions {
    /// Scan every `k` in `1..=d` instead of only the divisors of `d`.
    pub strict: bool,
    /// Overrides the default degree bound `max(D|a|, 2 * max relator degree)`.
    pub degree_bound: Option<usize>,
}

/// Integer torsion of `a`, relative to a degree bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Torsion {
    Finite {
        tau: BigInt,
        /// A least-degree monic `phi` with `tau * phi` in `V`.
        witness: MonicMultiple,
        bound: usize,
    },
    /// No monic multiple within `bound`; not a proof of anything beyond it.
    Infinite { bound: usize },
}

impl Torsion {
    pub fn tau(&self) -> Option<&BigInt> {
        match self {
            Torsion::Finite { tau, .. } => Some(tau),
            Torsion::Infinite { .. } => None,
        }
    }

    pub fn witness(&self) -> Option<&MonicMultiple> {
        match self {
            Torsion::Finite { witness, .. } => Some(witness),
            Torsion::Infinite { .. } => None,
        }
    }

    pub fn bound(&self) -> usize {
        match self {
            Torsion::Finite { bound, .. } | Torsion::Infinite { bound } => *bound,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingInvariants {
    /// `None` means `a` is transcendental (no nonzero relation).
    pub algebraic_degree: Option<usize>,
    pub minimal_polynomial: Option<IntPoly>,
    /// `d` in `f = d * f*`.
    pub minimal_content: Option<BigInt>,
    /// `f*` in `f = d * f*`.
    pub minimal_primitive: Option<IntPoly>,
    pub torsion: Torsion,
    /// Least degree of a monic `phi` with `k * phi` in `V` for some `k >= 1`.
    pub torsion_exponent: Option<usize>,
}

/// The member of `V` of least degree with least positive leading coefficient.
pub fn minimal_polynomial(basis: &CanonicalBasis) -> Option<IntPoly> {
    basis.elements().first().map(|e| e.poly.clone())
}

pub fn default_degree_bound(p: &Presentation, algebraic_degree: Option<usize>) -> usize {
    algebraic_degree.unwrap_or(0).max(2 * p.max_degree()).max(1)
}

/// Computes every invariant of `a` for the given presentation.
pub fn invariants(p: &Presentation, opts: TorsionOptions) -> RingInvariants {
    let basis = p.canonical_basis();
    invariants_with_basis(p, &basis, opts)
}

pub fn invariants_with_basis(
    p: &Presentation,
    basis: &CanonicalBasis,
    opts: TorsionOptions,
) -> RingInvariants {
    let minimal = minimal_polynomial(basis);
    let algebraic_degree = minimal.as_ref().and_then(IntPoly::degree);
    let split = minimal
        .as_ref()
        .map(|f| f.content_split().expect("minimal polynomial is nonzero"));
    let bound = opts
        .degree_bound
        .unwrap_or_else(|| default_degree_bound(p, algebraic_degree));

    let Some(split) = split else {
        return RingInvariants {
            algebraic_degree: None,
            minimal_polynomial: None,
            minimal_content: None,
            minimal_primitive: None,
            torsion: Torsion::Infinite { bound },
            torsion_exponent: None,
        };
    };

    let candidates: Vec<BigInt> = if opts.strict {
        let d = split
            .content
            .to_u64()
            .expect("strict scan needs a machine-size content");
        (1..=d).map(BigInt::from).collect()
    } else {
        divisors(&split.content).expect("content is positive")
    };

    // tau is the first success; the exponent is the least degree over all k
    let mut torsion = Torsion::Infinite { bound };
    let mut exponent: Option<usize> = None;
    for k in candidates {
        let found = monic_multiple_search(basis, &k, bound).expect("bound and k are valid");
        if let Some(m) = found {
            let deg = m.phi.degree().expect("monic");
            exponent = Some(exponent.map_or(deg, |e| e.min(deg)));
            if matches!(torsion, Torsion::Infinite { .. }) {
                torsion = Torsion::Finite {
                    tau: k,
                    witness: m,
                    bound,
                };
            }
            if exponent == algebraic_degree {
                // nothing can undercut the algebraic degree
                break;
            }
        }
    }

    RingInvariants {
        algebraic_degree,
        minimal_polynomial: minimal,
        minimal_content: Some(split.content),
        minimal_primitive: Some(split.primitive),
        torsion,
        torsion_exponent: exponent,
    }
}

/// From a member `g` of `V`, produces `k = content(g)` and a monic `phi` of
/// degree at most `deg g` with `k * phi` in `V`.
///
/// Requires a monic torsion relation to exist, which happens exactly when the
/// primitive part of the minimal polynomial is monic.
pub fn extract_monic_relation(
    basis: &CanonicalBasis,
    g: &IntPoly,
) -> Result<MonicMultiple, InvariantsError> {
    let Some(deg) = g.degree() else {
        return Err(InvariantsError::NotMember(g.clone()));
    };
    if !basis.contains(g) {
        return Err(InvariantsError::NotMember(g.clone()));
    }
    let hypothesis = minimal_polynomial(basis)
        .and_then(|f| f.content_split().ok())
        .is_some_and(|s| s.primitive.is_monic());
    if !hypothesis {
        return Err(InvariantsError::HypothesisUnmet);
    }
    let k = g.content();
    debug_assert!(k.is_positive());
    monic_multiple_search(basis, &k, deg)
        .expect("g has positive degree")
        .ok_or(InvariantsError::ExtractionFailed { k, bound: deg })
}

/// True when `k` admits some monic `phi` of degree at most `bound`.
pub fn admits_monic_multiple(basis: &CanonicalBasis, k: &BigInt, bound: usize) -> bool {
    k >= &BigInt::one()
        && monic_multiple_search(basis, k, bound)
            .expect("valid arguments")
            .is_some()
}
