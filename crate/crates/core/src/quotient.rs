//! Finite quotients `Z<a> / (V + qK)` and separation search.
//!
//! `K = xZ[x]/V`, so the quotient is `xZ[x]` modulo `W = V + (q x)`. The
//! strong basis of `W` has every ladder value dividing `q`, which lets all
//! arithmetic happen on coefficients mod `q`. The quotient is finite exactly
//! when `W` holds a monic member; elements are then coefficient vectors over
//! the standard monomials `x^d` whose ladder value `c_d` exceeds 1, with the
//! entry at `x^d` in `[0, c_d)`.

use std::collections::HashSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::arith::is_probable_prime;
use crate::ideal::{CanonicalBasis, Presentation};
use crate::par::{self, Strategy};
use crate::poly::{IntPoly, RingContext};

/// Largest modulus accepted; keeps coefficient products inside `u128`.
pub const MAX_MODULUS: u64 = 1 << 32;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuotientError {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(BigInt),
    #[error("modulus {0} exceeds the supported maximum 2^32")]
    ModulusTooLarge(BigInt),
}

/// A quotient element: coefficients mod `q`, indexed by degree, in normal
/// form. Index 0 is always zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(Vec<u64>);

impl Element {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn to_poly(&self) -> IntPoly {
        IntPoly::new(self.0.iter().map(|&c| BigInt::from(c)).collect())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Rung {
    degree: usize,
    lc: u64,
    coeffs: Vec<u64>,
}

/// A finite quotient of `Z<a>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteRing {
    modulus: u64,
    rungs: Vec<Rung>,
    /// Least degree of a monic member of `W`; elements live below it.
    monic_degree: usize,
    /// `(degree, radix)` for every standard monomial, ascending.
    standard: Vec<(usize, u64)>,
}

/// Why a quotient is infinite: `W` has no monic member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InfiniteQuotient {
    pub modulus: u64,
    /// `(degree, leading coefficient)` of each rung of `W`.
    pub ladder: Vec<(usize, BigInt)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Quotient {
    Finite(FiniteRing),
    Infinite(InfiniteQuotient),
}

impl Quotient {
    pub fn finite(self) -> Option<FiniteRing> {
        match self {
            Quotient::Finite(r) => Some(r),
            Quotient::Infinite(_) => None,
        }
    }
}

fn check_modulus(q: &BigInt) -> Result<u64, QuotientError> {
    if q < &BigInt::from(2) {
        return Err(QuotientError::InvalidModulus(q.clone()));
    }
    match q.to_u64() {
        Some(m) if m <= MAX_MODULUS => Ok(m),
        _ => Err(QuotientError::ModulusTooLarge(q.clone())),
    }
}

pub fn build_quotient(p: &Presentation, q: &BigInt) -> Result<Quotient, QuotientError> {
    build_quotient_with_basis(&p.canonical_basis(), q)
}

/// Reduces an already computed basis of `V` modulo `q`.
pub fn build_quotient_with_basis(
    basis: &CanonicalBasis,
    q: &BigInt,
) -> Result<Quotient, QuotientError> {
    let modulus = check_modulus(q)?;
    let mut gens: Vec<IntPoly> = basis.elements().iter().map(|e| e.poly.clone()).collect();
    gens.push(IntPoly::monomial(q.clone(), 1));
    let w = CanonicalBasis::untracked(gens);

    let Some(monic_degree) = w.monic_degree() else {
        return Ok(Quotient::Infinite(InfiniteQuotient {
            modulus,
            ladder: w.ladder(),
        }));
    };
    let rungs: Vec<Rung> = w
        .elements()
        .iter()
        .map(|e| Rung {
            degree: e.degree(),
            lc: e.leading_coeff().to_u64().expect("ladder values divide q"),
            coeffs: e
                .poly
                .coeffs()
                .iter()
                .map(|c| c.mod_floor(q).to_u64().expect("reduced mod q"))
                .collect(),
        })
        .collect();
    let mut ring = FiniteRing {
        modulus,
        rungs,
        monic_degree,
        standard: Vec::new(),
    };
    ring.standard = (1..monic_degree)
        .filter_map(|d| {
            let c = ring.radix(d);
            (c > 1).then_some((d, c))
        })
        .collect();
    Ok(Quotient::Finite(ring))
}

impl FiniteRing {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn monic_degree(&self) -> usize {
        self.monic_degree
    }

    /// `(degree, radix)` of each standard monomial.
    pub fn standard_monomials(&self) -> &[(usize, u64)] {
        &self.standard
    }

    /// Ladder value of `W` at degree `d >= 1`.
    fn radix(&self, d: usize) -> u64 {
        let r = self
            .rungs
            .iter()
            .rev()
            .find(|r| r.degree <= d)
            .expect("q x is in W, so degree 1 has a rung");
        r.lc
    }

    pub fn carrier_size(&self) -> BigInt {
        self.standard
            .iter()
            .map(|&(_, c)| BigInt::from(c))
            .product()
    }

    /// Carrier size when it fits a `usize`.
    pub fn carrier_len(&self) -> Option<usize> {
        self.standard.iter().try_fold(1usize, |acc, &(_, c)| {
            acc.checked_mul(usize::try_from(c).ok()?)
        })
    }

    pub fn zero(&self) -> Element {
        Element(vec![0; self.monic_degree])
    }

    /// Image of `a`.
    pub fn generator(&self) -> Element {
        self.image(&IntPoly::x())
    }

    /// Normal form of a coefficient vector whose entries are already mod `q`.
    fn reduce(&self, mut c: Vec<u64>) -> Element {
        let q = self.modulus as u128;
        for d in (1..c.len()).rev() {
            if c[d] == 0 {
                continue;
            }
            let rung = self
                .rungs
                .iter()
                .rev()
                .find(|r| r.degree <= d)
                .expect("degree 1 has a rung");
            let t = c[d] / rung.lc;
            if t == 0 {
                continue;
            }
            let shift = d - rung.degree;
            for (j, &r) in rung.coeffs.iter().enumerate() {
                let sub = (t as u128 * r as u128) % q;
                c[shift + j] = ((c[shift + j] as u128 + q - sub) % q) as u64;
            }
        }
        c.resize(self.monic_degree, 0);
        c[0] = 0;
        Element(c)
    }

    pub fn image(&self, p: &IntPoly) -> Element {
        let q = BigInt::from(self.modulus);
        let mut c: Vec<u64> = p
            .coeffs()
            .iter()
            .map(|a| a.mod_floor(&q).to_u64().expect("reduced mod q"))
            .collect();
        if c.is_empty() {
            c.push(0);
        }
        c[0] = 0;
        self.reduce(c)
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        let q = self.modulus;
        let c =
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| ((x as u128 + y as u128) % q as u128) as u64)
                .collect();
        self.reduce(c)
    }

    pub fn neg(&self, a: &Element) -> Element {
        let q = self.modulus;
        self.reduce(a.0.iter().map(|&x| (q - x) % q).collect())
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let q = self.modulus as u128;
        let n = self.monic_degree;
        let mut c = vec![0u64; (2 * n).max(1)];
        for (i, &x) in a.0.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.0.iter().enumerate() {
                if y == 0 {
                    continue;
                }
                c[i + j] = ((c[i + j] as u128 + x as u128 * y as u128 % q) % q) as u64;
            }
        }
        self.reduce(c)
    }

    pub fn scale(&self, a: &Element, k: &BigInt) -> Element {
        let q = self.modulus as u128;
        let k = k
            .mod_floor(&BigInt::from(self.modulus))
            .to_u64()
            .expect("reduced") as u128;
        self.reduce(a.0.iter().map(|&x| (x as u128 * k % q) as u64).collect())
    }

    /// Mixed-radix index of an element over the standard monomials.
    pub fn encode(&self, e: &Element) -> usize {
        self.standard
            .iter()
            .rev()
            .fold(0usize, |acc, &(d, c)| acc * c as usize + e.0[d] as usize)
    }

    pub fn decode(&self, mut index: usize) -> Element {
        let mut v = vec![0u64; self.monic_degree];
        for &(d, c) in &self.standard {
            v[d] = (index % c as usize) as u64;
            index /= c as usize;
        }
        Element(v)
    }

    /// Every element, in index order. Only sensible for small carriers.
    pub fn elements(&self) -> Vec<Element> {
        let n = self.carrier_len().expect("carrier fits in memory");
        (0..n).map(|i| self.decode(i)).collect()
    }

    /// `a * x^d` in normal form for every standard monomial `x^d`.
    pub fn multiplication_action(&self) -> Vec<(usize, Element)> {
        self.standard
            .iter()
            .map(|&(d, _)| (d, self.image(&IntPoly::monomial(BigInt::one(), d + 1))))
            .collect()
    }

    /// Structured text dump: modulus, standard monomials and the action of
    /// `a` on them.
    pub fn dump(&self) -> String {
        let mut out = format!("modulus: {}\n", self.modulus);
        out.push_str(&format!("carrier: {}\n", self.carrier_size()));
        let monos: Vec<String> = self
            .standard
            .iter()
            .map(|(d, c)| format!("x^{d} (mod {c})"))
            .collect();
        out.push_str(&format!("standard monomials: [{}]\n", monos.join(", ")));
        out.push_str("multiplication by a:\n");
        for (d, img) in self.multiplication_action() {
            out.push_str(&format!("  a * x^{d} = {img}\n"));
        }
        out
    }

    /// Exhaustive ring-axiom check over the whole carrier.
    pub fn check_axioms(&self, strategy: Strategy) -> Result<(), AxiomViolation> {
        let n = self.carrier_len().ok_or(AxiomViolation::TooLarge)?;
        let elems = self.elements();
        let idx = |e: &Element| self.encode(e);
        let add: Vec<Vec<usize>> = par::map(strategy, &elems, |a| {
            elems.iter().map(|b| idx(&self.add(a, b))).collect()
        });
        let mul: Vec<Vec<usize>> = par::map(strategy, &elems, |a| {
            elems.iter().map(|b| idx(&self.mul(a, b))).collect()
        });
        let zero = idx(&self.zero());
        for (i, e) in elems.iter().enumerate() {
            if self.decode(idx(e)) != *e || idx(e) != i {
                return Err(AxiomViolation::Encoding(i));
            }
            let neg = idx(&self.neg(e));
            if add[i][neg] != zero {
                return Err(AxiomViolation::AdditiveInverse(i));
            }
            if add[i][zero] != i || mul[i][zero] != zero {
                return Err(AxiomViolation::Zero(i));
            }
        }
        let bad = par::find_map_range(strategy, n, |a| {
            for b in 0..n {
                if add[a][b] != add[b][a] {
                    return Some(AxiomViolation::AdditiveCommutativity(a, b));
                }
                if mul[a][b] != mul[b][a] {
                    return Some(AxiomViolation::Commutativity(a, b));
                }
                for c in 0..n {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Some(AxiomViolation::AdditiveAssociativity(a, b, c));
                    }
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Some(AxiomViolation::Associativity(a, b, c));
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return Some(AxiomViolation::LeftDistributivity(a, b, c));
                    }
                    if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]] {
                        return Some(AxiomViolation::RightDistributivity(a, b, c));
                    }
                }
            }
            None
        });
        bad.map_or(Ok(()), Err)
    }
}

impl RingContext for FiniteRing {
    type Elem = Element;

    fn zero(&self) -> Element {
        FiniteRing::zero(self)
    }

    fn add(&self, a: &Element, b: &Element) -> Element {
        FiniteRing::add(self, a, b)
    }

    fn mul(&self, a: &Element, b: &Element) -> Element {
        FiniteRing::mul(self, a, b)
    }

    fn scale(&self, a: &Element, k: &BigInt) -> Element {
        FiniteRing::scale(self, a, k)
    }
}

/// First failing axiom, with carrier indices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AxiomViolation {
    #[error("carrier too large to enumerate")]
    TooLarge,
    #[error("element {0} does not round-trip through its index")]
    Encoding(usize),
    #[error("element {0} has no additive inverse")]
    AdditiveInverse(usize),
    #[error("zero misbehaves at element {0}")]
    Zero(usize),
    #[error("addition not commutative at ({0}, {1})")]
    AdditiveCommutativity(usize, usize),
    #[error("addition not associative at ({0}, {1}, {2})")]
    AdditiveAssociativity(usize, usize, usize),
    #[error("multiplication not commutative at ({0}, {1})")]
    Commutativity(usize, usize),
    #[error("multiplication not associative at ({0}, {1}, {2})")]
    Associativity(usize, usize, usize),
    #[error("left distributivity fails at ({0}, {1}, {2})")]
    LeftDistributivity(usize, usize, usize),
    #[error("right distributivity fails at ({0}, {1}, {2})")]
    RightDistributivity(usize, usize, usize),
}

/// Least subset containing `0` and the generators that is closed under
/// addition, negation and multiplication. Never adjoins a unit.
pub fn subring_closure(ring: &FiniteRing, generators: &[Element]) -> Vec<Element> {
    subring_closure_capped(ring, generators, usize::MAX).expect("uncapped")
}

/// As [`subring_closure`], giving up once the set grows past `cap`.
pub fn subring_closure_capped(
    ring: &FiniteRing,
    generators: &[Element],
    cap: usize,
) -> Option<Vec<Element>> {
    let mut seen: HashSet<Element> = HashSet::new();
    let mut members: Vec<Element> = Vec::new();
    let mut queue: Vec<Element> = Vec::new();
    for g in std::iter::once(ring.zero()).chain(generators.iter().cloned()) {
        if seen.insert(g.clone()) {
            queue.push(g);
        }
    }
    while let Some(u) = queue.pop() {
        members.push(u.clone());
        let mut fresh = vec![ring.neg(&u)];
        for v in &members {
            fresh.push(ring.add(&u, v));
            fresh.push(ring.mul(&u, v));
        }
        for f in fresh {
            if seen.insert(f.clone()) {
                if seen.len() > cap {
                    return None;
                }
                queue.push(f);
            }
        }
    }
    members.sort();
    Some(members)
}

/// Moduli `2..=bound`: primes, then prime powers, then the rest, each
/// ascending.
pub fn modulus_order(bound: u64) -> Vec<u64> {
    let is_prime = |n: u64| is_probable_prime(&BigInt::from(n));
    let is_prime_power = |n: u64| {
        let p = (2..=n).find(|&d| n.is_multiple_of(d)).expect("n >= 2");
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        m == 1
    };
    let all: Vec<u64> = (2..=bound).collect();
    let primes = all.iter().copied().filter(|&n| is_prime(n));
    let powers = all
        .iter()
        .copied()
        .filter(|&n| !is_prime(n) && is_prime_power(n));
    let rest = all.iter().copied().filter(|&n| !is_prime_power(n));
    primes.chain(powers).chain(rest).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SeparationOptions {
    pub modulus_bound: u64,
    /// Quotients with a larger carrier are skipped.
    pub max_carrier: usize,
    pub strategy: Strategy,
}

impl Default for SeparationOptions {
    fn default() -> Self {
        Self {
            modulus_bound: 64,
            max_carrier: 1 << 12,
            strategy: Strategy::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationResult {
    pub found: bool,
    pub quotient: Option<FiniteRing>,
    pub image_of_target: Option<Element>,
    /// Image of the subring in the separating quotient, sorted.
    pub subring_image: Vec<Element>,
    /// The modulus bound, set when the search ran out.
    pub bound_exhausted: Option<BigInt>,
    /// Finite quotients skipped for exceeding the carrier cap.
    pub skipped: Vec<u64>,
}

/// Finite quotients of one presentation for every modulus up to a bound,
/// built once and reused across separation queries.
#[derive(Debug, Clone)]
pub struct Separator {
    quotients: Vec<(u64, Quotient)>,
    options: SeparationOptions,
}

impl Separator {
    pub fn new(p: &Presentation, options: SeparationOptions) -> Self {
        let basis = p.canonical_basis();
        let order = modulus_order(options.modulus_bound);
        let quotients = par::map(options.strategy, &order, |&q| {
            let quo = build_quotient_with_basis(&basis, &BigInt::from(q)).expect("2 <= q <= 2^32");
            (q, quo)
        });
        Self { quotients, options }
    }

    pub fn quotients(&self) -> &[(u64, Quotient)] {
        &self.quotients
    }

    pub fn finite_quotients(&self) -> impl Iterator<Item = &FiniteRing> {
        self.quotients.iter().filter_map(|(_, q)| match q {
            Quotient::Finite(r) => Some(r),
            Quotient::Infinite(_) => None,
        })
    }

    pub fn separate(&self, target: &IntPoly, generators: &[IntPoly]) -> SeparationResult {
        let cap = self.options.max_carrier;
        let skipped: Vec<u64> = self
            .finite_quotients()
            .filter(|r| r.carrier_len().is_none_or(|n| n > cap))
            .map(FiniteRing::modulus)
            .collect();
        let hit = par::find_map_first(self.options.strategy, &self.quotients, |(_, quo)| {
            let Quotient::Finite(ring) = quo else {
                return None;
            };
            if ring.carrier_len().is_none_or(|n| n > cap) {
                return None;
            }
            let t = ring.image(target);
            let gens: Vec<Element> = generators.iter().map(|g| ring.image(g)).collect();
            let closure = subring_closure(ring, &gens);
            closure
                .binary_search(&t)
                .is_err()
                .then(|| (ring.clone(), t, closure))
        });
        match hit {
            Some((ring, t, closure)) => SeparationResult {
                found: true,
                quotient: Some(ring),
                image_of_target: Some(t),
                subring_image: closure,
                bound_exhausted: None,
                skipped,
            },
            None => SeparationResult {
                found: false,
                quotient: None,
                image_of_target: None,
                subring_image: Vec::new(),
                bound_exhausted: Some(BigInt::from(self.options.modulus_bound)),
                skipped,
            },
        }
    }
}

/// Searches the finite quotients with modulus up to `modulus_bound` for one
/// where the image of `target` avoids the image of the subring generated by
/// `generators`.
pub fn separate(
    p: &Presentation,
    target: &IntPoly,
    generators: &[IntPoly],
    options: SeparationOptions,
) -> SeparationResult {
    Separator::new(p, options).separate(target, generators)
}

/// Re-checks a successful separation along a different route: relators must
/// vanish in the quotient, images are recomputed by Horner evaluation at the
/// image of `a`, and the subring is rebuilt as the additive span of all
/// products of generators.
pub fn verify_separation(
    p: &Presentation,
    target: &IntPoly,
    generators: &[IntPoly],
    result: &SeparationResult,
) -> bool {
    let (Some(ring), Some(t)) = (&result.quotient, &result.image_of_target) else {
        return false;
    };
    let a = ring.generator();
    if !p
        .relators()
        .iter()
        .all(|f| f.evaluate_in(ring, &a).is_zero())
    {
        return false;
    }
    if &target.evaluate_in(ring, &a) != t {
        return false;
    }
    let gens: Vec<Element> = generators.iter().map(|g| g.evaluate_in(ring, &a)).collect();
    let span = span_of_products(ring, &gens);
    let reported: HashSet<&Element> = result.subring_image.iter().collect();
    span.len() == reported.len() && span.iter().all(|e| reported.contains(e)) && !span.contains(t)
}

/// Additive subgroup generated by the multiplicative semigroup of `gens`.
pub fn span_of_products(ring: &FiniteRing, gens: &[Element]) -> HashSet<Element> {
    let mut products: HashSet<Element> = gens.iter().cloned().collect();
    let mut frontier: Vec<Element> = products.iter().cloned().collect();
    while let Some(u) = frontier.pop() {
        for g in gens {
            let v = ring.mul(&u, g);
            if products.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    let mut span: HashSet<Element> = HashSet::from([ring.zero()]);
    let mut frontier = vec![ring.zero()];
    while let Some(u) = frontier.pop() {
        for g in &products {
            let v = ring.add(&u, g);
            if span.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    span
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

    fn finite(rs: &[&[i64]], q: i64) -> FiniteRing {
        build_quotient(&pres(rs), &BigInt::from(q))
            .unwrap()
            .finite()
            .unwrap()
    }

    #[test]
    fn quotient_examples() {
        let r = finite(&[&[0, -1, 1]], 2);
        assert_eq!(r.carrier_size(), BigInt::from(2));
        assert_eq!(r.standard_monomials(), &[(1, 2)]);
        let a = r.generator();
        assert_eq!(r.mul(&a, &a), a);
        assert!(!a.is_zero());

        let r = finite(&[&[0, 1, 2]], 2);
        assert_eq!(r.carrier_size(), BigInt::one());

        let q = build_quotient(&Presentation::free(), &BigInt::from(2)).unwrap();
        assert!(matches!(q, Quotient::Infinite(_)));

        // 2a = 0 alone: even moduli leave x F_2[x], which is infinite
        let q = build_quotient(&pres(&[&[0, 2]]), &BigInt::from(4)).unwrap();
        assert!(matches!(q, Quotient::Infinite(_)));
        let r = finite(&[&[0, 2]], 3);
        assert_eq!(r.carrier_size(), BigInt::one());
    }

    #[test]
    fn quotient_errors() {
        let pr = pres(&[&[0, -1, 1]]);
        assert!(matches!(
            build_quotient(&pr, &BigInt::from(1)),
            Err(QuotientError::InvalidModulus(_))
        ));
        assert!(matches!(
            build_quotient(&pr, &(BigInt::from(1u64 << 40))),
            Err(QuotientError::ModulusTooLarge(_))
        ));
    }

    #[test]
    fn mixed_radix_carrier() {
        // {2x^2, x^3} mod 4: radix 4 at x, radix 2 at x^2
        let r = finite(&[&[0, 0, 2], &[0, 0, 0, 1]], 4);
        assert_eq!(r.standard_monomials(), &[(1, 4), (2, 2)]);
        assert_eq!(r.carrier_size(), BigInt::from(8));
        r.check_axioms(Strategy::Sequential).unwrap();
    }

    #[test]
    fn evaluate_examples() {
        let r = finite(&[&[0, -1, 1]], 5);
        let a = r.generator();
        assert!(IntPoly::zero().evaluate_in(&r, &a).is_zero());
        assert!(p(&[0, -1, 1]).evaluate_in(&r, &a).is_zero());
        let r = finite(&[&[0, -1, 1]], 2);
        assert!(p(&[0, 2]).evaluate_in(&r, &r.generator()).is_zero());
    }

    #[test]
    fn closure_examples() {
        let r = finite(&[&[0, -1, 1]], 2);
        assert_eq!(subring_closure(&r, &[r.zero()]), vec![r.zero()]);
        assert_eq!(subring_closure(&r, &[]), vec![r.zero()]);
        let a = r.generator();
        assert_eq!(
            subring_closure(&r, std::slice::from_ref(&a)),
            vec![r.zero(), a]
        );
    }

    #[test]
    fn separate_examples() {
        let pr = pres(&[&[0, -1, 1]]);
        let opts = SeparationOptions {
            modulus_bound: 12,
            ..Default::default()
        };
        let res = separate(&pr, &p(&[0, 3]), &[p(&[0, 2])], opts);
        assert!(res.found);
        assert_eq!(res.quotient.as_ref().unwrap().modulus(), 2);
        assert_eq!(res.subring_image.len(), 1);
        assert!(verify_separation(&pr, &p(&[0, 3]), &[p(&[0, 2])], &res));

        let res = separate(&pr, &p(&[0, 1]), &[p(&[0, 1])], opts);
        assert!(!res.found);
        assert_eq!(res.bound_exhausted, Some(BigInt::from(12)));

        let pr = pres(&[&[0, -6, 6], &[0, -1, 0, 1]]);
        let res = separate(&pr, &p(&[0, 2]), &[p(&[0, 4])], opts);
        assert!(res.found);
        assert!([3, 4].contains(&res.quotient.as_ref().unwrap().modulus()));
        assert!(verify_separation(&pr, &p(&[0, 2]), &[p(&[0, 4])], &res));
    }

    #[test]
    fn modulus_ordering() {
        assert_eq!(modulus_order(12), vec![2, 3, 5, 7, 11, 4, 8, 9, 6, 10, 12]);
    }

    #[test]
    fn dump_lists_action() {
        let r = finite(&[&[0, 0, 2], &[0, 0, 0, 1]], 4);
        let d = r.dump();
        assert!(d.contains("modulus: 4"));
        assert!(
            d.contains("a * x^1 = 2x^2") || d.contains("a * x^1 = x^2"),
            "{d}"
        );
        assert!(d.contains("a * x^2 = 0"));
    }
}
