//! The relator ideal `V = <f_1, ..., f_m>` of `Z[x]`.
//!
//! A univariate ideal over `Z` is described by its leading-coefficient
//! ladder: for every degree `n`, the leading coefficients of the members of
//! degree `n` form an ideal `c_n Z`, and `c_{n+1}` divides `c_n` because
//! multiplying by `x` keeps a member in `V`. The [`CanonicalBasis`] keeps one
//! element for every degree at which the ladder steps down. Reducing each
//! coefficient into `[0, c_n)` from the top degree down then gives a unique
//! normal form.
//!
//! Every basis element carries cofactors in terms of the original relators,
//! so membership answers come with certificates that can be checked by plain
//! polynomial multiplication.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ext_gcd, residue};
use crate::lattice::intersect_with_multiples;
use crate::poly::IntPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IdealError {
    #[error("relator {index} has a nonzero constant term")]
    NonzeroConstantTerm { index: usize },
    #[error("degree bound must be at least 1")]
    InvalidBound,
    #[error("torsion multiplier must be positive, got {0}")]
    InvalidMultiplier(BigInt),
}

/// A validated list of defining relators for `Z<a>`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Presentation {
    relators: Vec<IntPoly>,
}

impl Presentation {
    /// Validates the relators; zero relators are dropped.
    pub fn new(relators: Vec<IntPoly>) -> Result<Self, IdealError> {
        if let Some(index) = relators.iter().position(|f| !f.constant_term_is_zero()) {
            return Err(IdealError::NonzeroConstantTerm { index });
        }
        let relators = relators.into_iter().filter(|f| !f.is_zero()).collect();
        Ok(Self { relators })
    }

    /// The free monogenic ring: no relators.
    pub fn free() -> Self {
        Self::default()
    }

    pub fn relators(&self) -> &[IntPoly] {
        &self.relators
    }

    pub fn is_empty(&self) -> bool {
        self.relators.is_empty()
    }

    pub fn max_degree(&self) -> usize {
        self.relators
            .iter()
            .filter_map(IntPoly::degree)
            .max()
            .unwrap_or(0)
    }

    /// Every coefficient of every relator, in relator order.
    pub fn all_coefficients(&self) -> Vec<BigInt> {
        self.relators
            .iter()
            .flat_map(|f| f.coeffs().iter().cloned())
            .collect()
    }

    /// `f_1 + f_2 x^{n_1} + f_3 x^{n_1 + n_2} + ...`: a single member of `V`
    /// whose coefficients are exactly the relators' coefficients side by side.
    pub fn combined_relator(&self) -> (IntPoly, Vec<IntPoly>) {
        let mut shift = 0usize;
        let mut g = IntPoly::zero();
        let mut cofactors = Vec::with_capacity(self.relators.len());
        for f in &self.relators {
            let mono = IntPoly::monomial(BigInt::one(), shift);
            g = &g + &(f * &mono);
            cofactors.push(mono);
            shift += f.degree().unwrap_or(0);
        }
        (g, cofactors)
    }

    pub fn canonical_basis(&self) -> CanonicalBasis {
        CanonicalBasis::new(self)
    }
}

/// `sum cofactors_i * relators_i = claim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipCertificate {
    pub cofactors: Vec<IntPoly>,
    pub claim: IntPoly,
}

impl MembershipCertificate {
    /// Recomputes the combination with nothing but polynomial arithmetic.
    pub fn verify(&self, relators: &[IntPoly]) -> bool {
        if self.cofactors.len() != relators.len() {
            return false;
        }
        let combo = self
            .cofactors
            .iter()
            .zip(relators)
            .fold(IntPoly::zero(), |acc, (h, f)| &acc + &(h * f));
        combo == self.claim
    }
}

/// A polynomial together with its cofactors over some fixed generator list.
/// An empty cofactor list means tracking is switched off.
#[derive(Debug, Clone)]
pub(crate) struct Tracked {
    pub poly: IntPoly,
    pub cofactors: Vec<IntPoly>,
}

impl Tracked {
    fn generator(poly: IntPoly, index: usize, count: usize) -> Self {
        let mut cofactors = vec![IntPoly::zero(); count];
        if count > 0 {
            cofactors[index] = IntPoly::monomial(BigInt::one(), 0);
        }
        Self { poly, cofactors }
    }

    fn untracked(poly: IntPoly) -> Self {
        Self {
            poly,
            cofactors: Vec::new(),
        }
    }

    /// `a * self + b * x^shift * other`
    fn combine(&self, a: &BigInt, b: &BigInt, shift: usize, other: &Tracked) -> Tracked {
        let term = IntPoly::monomial(b.clone(), shift);
        let lin = |p: &IntPoly, q: &IntPoly| &p.scale(a) + &(q * &term);
        Tracked {
            poly: lin(&self.poly, &other.poly),
            cofactors: self
                .cofactors
                .iter()
                .zip(&other.cofactors)
                .map(|(p, q)| lin(p, q))
                .collect(),
        }
    }

    fn shifted(&self, k: usize) -> Tracked {
        Tracked {
            poly: self.poly.shift(k),
            cofactors: self.cofactors.iter().map(|c| c.shift(k)).collect(),
        }
    }

    fn negate(&mut self) {
        self.poly = -&self.poly;
        for c in &mut self.cofactors {
            *c = -&*c;
        }
    }

    fn degree(&self) -> usize {
        self.poly.degree().expect("tracked members are nonzero")
    }

    fn lc(&self) -> &BigInt {
        self.poly
            .leading_coeff()
            .expect("tracked members are nonzero")
    }
}

/// One rung of the ladder.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub poly: IntPoly,
    /// Cofactors over the presentation's relators (empty when untracked).
    pub cofactors: Vec<IntPoly>,
}

impl BasisElement {
    pub fn degree(&self) -> usize {
        self.poly.degree().expect("basis elements are nonzero")
    }

    pub fn leading_coeff(&self) -> &BigInt {
        self.poly
            .leading_coeff()
            .expect("basis elements are nonzero")
    }
}

/// Reduced strong basis of `V`, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalBasis {
    elements: Vec<BasisElement>,
    relators: Vec<IntPoly>,
    /// `relators_i = sum_j relator_in_basis[i][j] * elements_j`
    relator_in_basis: Vec<Vec<IntPoly>>,
}

/// The result of reducing a polynomial against a [`CanonicalBasis`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub normal_form: IntPoly,
    /// Certifies `input - normal_form` as a member of `V`.
    pub certificate: MembershipCertificate,
}

impl CanonicalBasis {
    pub fn new(p: &Presentation) -> Self {
        let m = p.relators.len();
        let gens = p
            .relators
            .iter()
            .enumerate()
            .map(|(i, f)| Tracked::generator(f.clone(), i, m))
            .collect();
        let elements = complete(gens)
            .into_iter()
            .map(|t| BasisElement {
                poly: t.poly,
                cofactors: t.cofactors,
            })
            .collect();
        let mut basis = Self {
            elements,
            relators: p.relators.clone(),
            relator_in_basis: Vec::new(),
        };
        basis.relator_in_basis = p
            .relators
            .iter()
            .map(|f| {
                let (rem, trace) = basis.reduce_traced(f);
                debug_assert!(rem.is_zero(), "relator {f} does not reduce to zero");
                trace
            })
            .collect();
        debug_assert!(basis.check_ladder());
        basis
    }

    /// Basis of an ideal given by generators without cofactor tracking.
    pub(crate) fn untracked(generators: Vec<IntPoly>) -> Self {
        let elements = complete(generators.into_iter().map(Tracked::untracked).collect())
            .into_iter()
            .map(|t| BasisElement {
                poly: t.poly,
                cofactors: Vec::new(),
            })
            .collect();
        Self {
            elements,
            relators: Vec::new(),
            relator_in_basis: Vec::new(),
        }
    }

    pub fn elements(&self) -> &[BasisElement] {
        &self.elements
    }

    pub fn relators(&self) -> &[IntPoly] {
        &self.relators
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// `(degree, leading coefficient)` for every rung.
    pub fn ladder(&self) -> Vec<(usize, BigInt)> {
        self.elements
            .iter()
            .map(|e| (e.degree(), e.leading_coeff().clone()))
            .collect()
    }

    /// Index of the rung that governs degree `d`: the element of largest
    /// degree not exceeding `d`.
    pub fn reducer_for(&self, d: usize) -> Option<usize> {
        self.elements.iter().rposition(|e| e.degree() <= d)
    }

    /// Generator of the leading-coefficient ideal at degree `d` (`None` when
    /// `V` has no member of degree `d`).
    pub fn ladder_value(&self, d: usize) -> Option<&BigInt> {
        self.reducer_for(d)
            .map(|i| self.elements[i].leading_coeff())
    }

    /// Least degree at which `V` holds a monic member.
    pub fn monic_degree(&self) -> Option<usize> {
        self.elements
            .iter()
            .find(|e| e.leading_coeff().is_one())
            .map(BasisElement::degree)
    }

    pub fn normal_form(&self, g: &IntPoly) -> IntPoly {
        self.reduce_traced(g).0
    }

    /// Normal form together with a certificate over the original relators.
    pub fn reduce(&self, g: &IntPoly) -> Reduction {
        let (normal_form, trace) = self.reduce_traced(g);
        let m = self.relators.len();
        let mut cofactors = vec![IntPoly::zero(); m];
        for (h, e) in trace.iter().zip(&self.elements) {
            if h.is_zero() {
                continue;
            }
            for (acc, c) in cofactors.iter_mut().zip(&e.cofactors) {
                *acc = &*acc + &(h * c);
            }
        }
        let claim = g - &normal_form;
        Reduction {
            normal_form,
            certificate: MembershipCertificate { cofactors, claim },
        }
    }

    pub fn contains(&self, g: &IntPoly) -> bool {
        self.normal_form(g).is_zero()
    }

    /// Member test with a certificate on success.
    pub fn membership(&self, g: &IntPoly) -> Option<MembershipCertificate> {
        let r = self.reduce(g);
        r.normal_form.is_zero().then_some(r.certificate)
    }

    /// Top-down reduction with least nonnegative residues; also returns the
    /// multiplier applied to each basis element.
    fn reduce_traced(&self, g: &IntPoly) -> (IntPoly, Vec<IntPoly>) {
        let mut trace = vec![IntPoly::zero(); self.elements.len()];
        let mut coeffs = g.coeffs().to_vec();
        for d in (0..coeffs.len()).rev() {
            if coeffs[d].is_zero() {
                continue;
            }
            let Some(idx) = self.reducer_for(d) else {
                break;
            };
            let e = &self.elements[idx];
            let lc = e.leading_coeff();
            let q = coeffs[d].div_floor(lc);
            if q.is_zero() {
                continue;
            }
            let shift = d - e.degree();
            for (j, c) in e.poly.coeffs().iter().enumerate() {
                coeffs[shift + j] -= &q * c;
            }
            trace[idx] = &trace[idx] + &IntPoly::monomial(q, shift);
        }
        (IntPoly::new(coeffs), trace)
    }

    /// Checks the structural invariants: strictly ascending degrees, positive
    /// leading coefficients that divide backwards, zero constant terms, and
    /// tails already in normal form.
    pub fn check_ladder(&self) -> bool {
        for (i, e) in self.elements.iter().enumerate() {
            if !e.leading_coeff().is_positive() || !e.poly.constant_term_is_zero() {
                return false;
            }
            if i > 0 {
                let prev = &self.elements[i - 1];
                if prev.degree() >= e.degree()
                    || !prev.leading_coeff().is_multiple_of(e.leading_coeff())
                    || prev.leading_coeff() == e.leading_coeff()
                {
                    return false;
                }
            }
            for d in 0..e.degree() {
                if let Some(c) = self.ladder_value(d) {
                    let t = e.poly.coeff(d);
                    if t.is_negative() || &t >= c {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Verifies the stored cofactors in both directions: every basis element
    /// is a combination of the relators, and every relator is a combination
    /// of the basis elements.
    pub fn verify_certificates(&self) -> bool {
        let forward = self.elements.iter().all(|e| {
            MembershipCertificate {
                cofactors: e.cofactors.clone(),
                claim: e.poly.clone(),
            }
            .verify(&self.relators)
        });
        let basis_polys: Vec<IntPoly> = self.elements.iter().map(|e| e.poly.clone()).collect();
        let backward = self
            .relators
            .iter()
            .zip(&self.relator_in_basis)
            .all(|(f, hs)| {
                MembershipCertificate {
                    cofactors: hs.clone(),
                    claim: f.clone(),
                }
                .verify(&basis_polys)
            });
        forward && backward
    }

    /// Z-basis of the members of degree at most `n`, as coefficient vectors
    /// of length `n + 1`: one vector `x^{d-e} b_e` for every degree `d` that
    /// carries a ladder value.
    pub fn truncated_lattice(&self, n: usize) -> Vec<Vec<BigInt>> {
        (1..=n)
            .filter_map(|d| {
                let e = &self.elements[self.reducer_for(d)?];
                let mut v = vec![BigInt::zero(); n + 1];
                for (j, c) in e.poly.coeffs().iter().enumerate() {
                    v[d - e.degree() + j] = c.clone();
                }
                Some(v)
            })
            .collect()
    }
}

/// Reduces the leading term of `h` against `basis` until it is no longer
/// reducible or `h` vanishes.
fn top_reduce(mut h: Tracked, basis: &BTreeMap<usize, Tracked>) -> Option<Tracked> {
    loop {
        let d = h.poly.degree()?;
        let Some((&e, r)) = basis.range(..=d).next_back() else {
            return Some(h);
        };
        let (q, rem) = h.lc().div_mod_floor(r.lc());
        if q.is_zero() {
            return Some(h);
        }
        h = h.combine(&BigInt::one(), &-q, d - e, r);
        if !rem.is_zero() {
            // the residue stays as the new leading coefficient
            return Some(h);
        }
    }
}

fn full_reduce(h: &Tracked, basis: &BTreeMap<usize, Tracked>) -> Tracked {
    let mut h = h.clone();
    let top = h.poly.degree().unwrap_or(0);
    for d in (1..=top).rev() {
        let c = h.poly.coeff(d);
        if c.is_zero() {
            continue;
        }
        let Some((&e, r)) = basis.range(..=d).next_back() else {
            break;
        };
        let q = c.div_floor(r.lc());
        if !q.is_zero() {
            h = h.combine(&BigInt::one(), &-q, d - e, r);
        }
    }
    h
}

/// Univariate strong-basis completion over `Z`.
///
/// The working basis keeps at most one element per degree. A new element is
/// merged with the rung below it through a gcd combination of leading
/// coefficients (G-polynomial); the matching cancellation (S-polynomial)
/// goes back on the worklist. Rungs above that stop dividing the new leading
/// coefficient are evicted and re-inserted. Once the worklist drains, the
/// S-polynomials of all pairs are checked and the tails are auto-reduced.
fn complete(generators: Vec<Tracked>) -> Vec<Tracked> {
    let mut basis: BTreeMap<usize, Tracked> = BTreeMap::new();
    let mut work: Vec<Tracked> = generators
        .into_iter()
        .filter(|t| !t.poly.is_zero())
        .collect();

    loop {
        while let Some(h) = work.pop() {
            let Some(mut h) = top_reduce(h, &basis) else {
                continue;
            };
            if h.lc().is_negative() {
                h.negate();
            }
            let d = h.degree();
            let below = basis.range(..=d).next_back().map(|(&e, _)| e);
            let new = match below {
                None => h,
                Some(e) => {
                    let r = &basis[&e];
                    let (g, s, t) = ext_gcd(h.lc(), r.lc());
                    let shift = d - e;
                    let gpoly = h.combine(&s, &t, shift, r);
                    let spoly = h.combine(&(r.lc() / &g), &-(h.lc() / &g), shift, r);
                    if !spoly.poly.is_zero() {
                        work.push(spoly);
                    }
                    if e == d {
                        basis.remove(&e);
                    }
                    gpoly
                }
            };
            let c = new.lc().clone();
            let evicted: Vec<usize> = basis
                .range(d + 1..)
                .filter(|(_, t)| !c.is_multiple_of(t.lc()) || t.lc() == &c)
                .map(|(&k, _)| k)
                .collect();
            for k in evicted {
                work.push(basis.remove(&k).expect("key present"));
            }
            basis.insert(d, new);
        }

        // S-polynomials of every pair must reduce to zero
        let elems: Vec<&Tracked> = basis.values().collect();
        for (i, lo) in elems.iter().enumerate() {
            for hi in &elems[i + 1..] {
                let ratio = lo.lc() / hi.lc();
                let s =
                    lo.shifted(hi.degree() - lo.degree())
                        .combine(&BigInt::one(), &-ratio, 0, hi);
                let r = full_reduce(&s, &basis);
                if !r.poly.is_zero() {
                    work.push(r);
                }
            }
        }
        if work.is_empty() {
            break;
        }
    }

    // auto-reduce tails, lowest rung first
    let degrees: Vec<usize> = basis.keys().copied().collect();
    for d in degrees {
        let lower: BTreeMap<usize, Tracked> =
            basis.range(..d).map(|(&k, v)| (k, v.clone())).collect();
        let e = basis.get_mut(&d).expect("key present");
        *e = full_reduce_below(e, &lower, d);
    }
    basis.into_values().collect()
}

/// Reduces every term of degree `< top` of `h`, leaving the leading term.
fn full_reduce_below(h: &Tracked, lower: &BTreeMap<usize, Tracked>, top: usize) -> Tracked {
    let mut h = h.clone();
    for d in (1..top).rev() {
        let c = h.poly.coeff(d);
        if c.is_zero() {
            continue;
        }
        let Some((&e, r)) = lower.range(..=d).next_back() else {
            break;
        };
        let q = c.div_floor(r.lc());
        if !q.is_zero() {
            h = h.combine(&BigInt::one(), &-q, d - e, r);
        }
    }
    h
}

/// A monic `phi` with `k * phi` certified in `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonicMultiple {
    pub k: BigInt,
    pub phi: IntPoly,
    /// Certificate for `k * phi`.
    pub certificate: MembershipCertificate,
}

/// Searches for a monic `phi` (zero constant term, degree at most
/// `degree_bound`) with `k * phi` in `V`, returning one of least degree.
///
/// The members of degree at most `n` form a lattice with a triangular basis
/// read off the ladder. Intersecting it with `k Z^{n+1}` and putting the
/// result in Hermite form answers the question exactly: a suitable `phi` of
/// degree `d` exists iff the pivot at column `d` equals `k`. The reduced row
/// also makes the returned `phi` canonical.
pub fn monic_multiple_search(
    basis: &CanonicalBasis,
    k: &BigInt,
    degree_bound: usize,
) -> Result<Option<MonicMultiple>, IdealError> {
    if degree_bound == 0 {
        return Err(IdealError::InvalidBound);
    }
    if !k.is_positive() {
        return Err(IdealError::InvalidMultiplier(k.clone()));
    }
    let gens = basis.truncated_lattice(degree_bound);
    if gens.is_empty() {
        return Ok(None);
    }
    let hnf = intersect_with_multiples(&gens, k, degree_bound + 1);
    let mut hits: Vec<_> = hnf
        .rows
        .iter()
        .filter(|(col, row)| &row.main[*col] == k)
        .collect();
    hits.sort_by_key(|(col, _)| *col);
    let Some((_, row)) = hits.first() else {
        return Ok(None);
    };
    let v = IntPoly::new(row.main.clone());
    let phi = v.exact_div_scalar(k);
    let certificate = basis.membership(&v).expect("lattice rows are members of V");
    Ok(Some(MonicMultiple {
        k: k.clone(),
        phi,
        certificate,
    }))
}

/// Membership against a presentation, building its basis on the fly.
pub fn membership(g: &IntPoly, p: &Presentation) -> Option<MembershipCertificate> {
    p.canonical_basis().membership(g)
}

/// Least nonnegative residue used by every normal form.
pub fn reduce_coefficient(c: &BigInt, ladder_value: &BigInt) -> BigInt {
    residue(c, ladder_value)
}
