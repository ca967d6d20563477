//! Dense univariate polynomials over Z and Q.
//!
//! Coefficients are stored in ascending degree order and kept trimmed: the
//! last stored coefficient is nonzero, and the zero polynomial is the empty
//! vector. Everything here is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{gcd_list, is_integer, lcm_list, BigRat};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("the zero polynomial has no content split")]
    ZeroPolynomial,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("all input polynomials are zero")]
    AllZero,
}

/// Polynomial with integer coefficients, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn constant_term_is_zero(&self) -> bool {
        self.coeffs.first().is_none_or(Zero::is_zero)
    }

    /// Gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        gcd_list(&self.coeffs)
    }

    pub fn content_split(&self) -> Result<ContentSplit, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        let content = self.content();
        let primitive = self.exact_div_scalar(&content);
        Ok(ContentSplit { content, primitive })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`; `c` must divide each of them.
    pub fn exact_div_scalar(&self, c: &BigInt) -> Self {
        debug_assert!(self.coeffs.iter().all(|a| a.is_multiple_of(c)));
        Self::new(self.coeffs.iter().map(|a| a / c).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    /// Terms of degree `< k`.
    pub fn truncate_below(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().take(k).cloned().collect())
    }

    /// `outer(inner(x))`, by Horner's rule.
    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &IntPoly::new(vec![c.clone()]);
        }
        acc
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(
            self.coeffs
                .iter()
                .map(|c| BigRat::from_integer(c.clone()))
                .collect(),
        )
    }

    /// Evaluates at `point` inside a ring that need not have a unit.
    ///
    /// Only the terms of positive degree are used; the constant term must be
    /// zero for the value to be meaningful in a non-unital ring.
    pub fn evaluate_in<R: RingContext>(&self, ring: &R, point: &R::Elem) -> R::Elem {
        debug_assert!(self.constant_term_is_zero());
        let Some(deg) = self.degree() else {
            return ring.zero();
        };
        if deg == 0 {
            return ring.zero();
        }
        // acc = c_n a; acc = acc*a + c_i a for i = n-1 .. 1
        let mut acc = ring.scale(point, &self.coeffs[deg]);
        for c in self.coeffs[1..deg].iter().rev() {
            acc = ring.add(&ring.mul(&acc, point), &ring.scale(point, c));
        }
        acc
    }
}

/// Minimal ring interface used by [`IntPoly::evaluate_in`].
pub trait RingContext {
    type Elem: Clone;
    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, a: &Self::Elem, k: &BigInt) -> Self::Elem;
}

/// `content * primitive` equals the split polynomial, with `content > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContentSplit {
    pub content: BigInt,
    pub primitive: IntPoly,
}

fn zip_coeffs<T: Clone + Zero>(a: &[T], b: &[T], f: impl Fn(&T, &T) -> T) -> Vec<T> {
    let n = a.len().max(b.len());
    let zero = T::zero();
    (0..n)
        .map(|i| f(a.get(i).unwrap_or(&zero), b.get(i).unwrap_or(&zero)))
        .collect()
}

fn convolve<T: Clone + Zero>(a: &[T], b: &[T]) -> Vec<T>
where
    for<'x> &'x T: Mul<&'x T, Output = T>,
{
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x * y;
        }
    }
    out
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(zip_coeffs(&self.coeffs, &rhs.coeffs, |a, b| a + b))
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(zip_coeffs(&self.coeffs, &rhs.coeffs, |a, b| a - b))
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        IntPoly::new(convolve(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    /// Canonical text form: descending degree, `^` for powers, e.g. `2x^3 - 4x`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match deg {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{mag}")?;
                    }
                    f.write_str("x")?;
                    if deg > 1 {
                        write!(f, "^{deg}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Polynomial with exact rational coefficients, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRat>,
}

impl RatPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn new(mut coeffs: Vec<BigRat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn constant(c: BigRat) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRat] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRat {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(One::is_one)
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Integer view, if every coefficient is an integer.
    pub fn to_int(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| is_integer(c).then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    /// Positive lcm of the coefficient denominators (1 for the zero polynomial).
    pub fn denominator_lcm(&self) -> BigInt {
        lcm_list(self.coeffs.iter().map(|c| c.denom()))
    }

    /// Multiplies by the denominator lcm, yielding an integer polynomial.
    pub fn clear_denominators(&self) -> (BigInt, IntPoly) {
        let l = self.denominator_lcm();
        let lr = BigRat::from_integer(l.clone());
        let p = self
            .scale(&lr)
            .to_int()
            .expect("denominator lcm clears every coefficient");
        (l, p)
    }

    /// Division with remainder over Q.
    pub fn div_rem(&self, den: &RatPoly) -> Result<(RatPoly, RatPoly), PolyError> {
        let (Some(dd), Some(lc)) = (den.degree(), den.leading_coeff()) else {
            return Err(PolyError::DivisionByZero);
        };
        let inv = lc.recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((RatPoly::zero(), RatPoly::zero()));
        };
        if nd < dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut quot = vec![BigRat::zero(); nd - dd + 1];
        for shift in (0..=nd - dd).rev() {
            let c = &rem[shift + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[shift + j] -= &c * d;
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((RatPoly::new(quot), RatPoly::new(rem)))
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(zip_coeffs(&self.coeffs, &rhs.coeffs, |a, b| a + b))
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(zip_coeffs(&self.coeffs, &rhs.coeffs, |a, b| a - b))
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        RatPoly::new(convolve(&self.coeffs, &rhs.coeffs))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let unit = mag.is_one();
            if deg == 0 || !unit {
                if is_integer(&mag) {
                    write!(f, "{mag}")?;
                } else {
                    write!(f, "({mag})")?;
                }
            }
            if deg >= 1 {
                f.write_str("x")?;
            }
            if deg > 1 {
                write!(f, "^{deg}")?;
            }
        }
        Ok(())
    }
}

/// Monic gcd over Q with Bezout cofactors and the cofactor denominator lcm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGcd {
    pub gamma: RatPoly,
    /// One cofactor per input: `sum bezout_i * f_i = gamma`.
    pub bezout: Vec<RatPoly>,
    /// Lcm of every denominator in the cofactors; `l * gamma` is an integer
    /// combination of the inputs.
    pub l: BigInt,
}

impl RationalGcd {
    /// Integer cofactors `l * bezout_i`.
    pub fn integer_cofactors(&self) -> Vec<IntPoly> {
        let lr = BigRat::from_integer(self.l.clone());
        self.bezout
            .iter()
            .map(|b| {
                b.scale(&lr)
                    .to_int()
                    .expect("l clears cofactor denominators")
            })
            .collect()
    }

    /// `l * gamma` as an integer polynomial.
    pub fn scaled_gamma(&self) -> IntPoly {
        self.gamma
            .scale(&BigRat::from_integer(self.l.clone()))
            .to_int()
            .expect("l * gamma is an integer combination of integer polynomials")
    }
}

/// Extended Euclid over Q across a whole list of integer polynomials.
pub fn gcd_q(polys: &[IntPoly]) -> Result<RationalGcd, PolyError> {
    if polys.iter().all(IntPoly::is_zero) {
        return Err(PolyError::AllZero);
    }
    let m = polys.len();
    let unit = |i: usize| {
        let mut v = vec![RatPoly::zero(); m];
        v[i] = RatPoly::constant(BigRat::one());
        v
    };

    let mut acc = RatPoly::zero();
    let mut acc_cof = vec![RatPoly::zero(); m];
    for (i, p) in polys.iter().enumerate() {
        if p.is_zero() {
            continue;
        }
        let (mut a, mut ca) = (acc, acc_cof);
        let (mut b, mut cb) = (p.to_rat(), unit(i));
        while !b.is_zero() {
            let (q, r) = a.div_rem(&b).expect("b is nonzero");
            let cr: Vec<RatPoly> = ca.iter().zip(&cb).map(|(x, y)| x - &(&q * y)).collect();
            a = std::mem::replace(&mut b, r);
            ca = std::mem::replace(&mut cb, cr);
            // keep the running remainder monic to tame coefficient growth
            if let Some(lc) = b.leading_coeff() {
                let inv = lc.recip();
                b = b.scale(&inv);
                cb = cb.iter().map(|c| c.scale(&inv)).collect();
            }
        }
        acc = a;
        acc_cof = ca;
    }

    let inv = acc.leading_coeff().expect("some input is nonzero").recip();
    let gamma = acc.scale(&inv);
    let bezout: Vec<RatPoly> = acc_cof.iter().map(|c| c.scale(&inv)).collect();
    let l = lcm_list(
        bezout
            .iter()
            .flat_map(|b| b.coeffs.iter().map(|c| c.denom())),
    );
    Ok(RationalGcd { gamma, bezout, l })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn q(num_den: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(
            num_den
                .iter()
                .map(|&(n, d)| BigRat::new(n.into(), d.into()))
                .collect(),
        )
    }

    #[test]
    fn arithmetic_examples() {
        // (x^2 - x) + (x - x^2) = 0
        assert!((&p(&[0, -1, 1]) + &p(&[0, 1, -1])).is_zero());
        assert_eq!(&p(&[0, 1]) * &p(&[0, 1]), p(&[0, 0, 1]));
        assert_eq!(p(&[0, 1, 2]).scale(&3.into()), p(&[0, 3, 6]));
        assert_eq!(p(&[0, 0, 0]), IntPoly::zero());
    }

    #[test]
    fn content_split_examples() {
        let s = p(&[0, -12, 0, 6]).content_split().unwrap();
        assert_eq!((s.content, s.primitive), (6.into(), p(&[0, -2, 0, 1])));
        let s = p(&[0, -1, 1]).content_split().unwrap();
        assert_eq!((s.content, s.primitive), (1.into(), p(&[0, -1, 1])));
        let s = p(&[0, -2, 4]).content_split().unwrap();
        assert_eq!((s.content, s.primitive), (2.into(), p(&[0, -1, 2])));
        // sign stays on the primitive part
        let s = p(&[0, 4, -2]).content_split().unwrap();
        assert_eq!((s.content, s.primitive), (2.into(), p(&[0, 2, -1])));
        assert_eq!(
            IntPoly::zero().content_split(),
            Err(PolyError::ZeroPolynomial)
        );
    }

    #[test]
    fn div_rem_examples() {
        let (quo, rem) = p(&[0, 1, 0, 1])
            .to_rat()
            .div_rem(&p(&[0, -1, 1]).to_rat())
            .unwrap();
        assert_eq!(quo, p(&[1, 1]).to_rat());
        assert_eq!(rem, p(&[0, 2]).to_rat());

        let f = p(&[0, 3, -5, 7]).to_rat();
        let (quo, rem) = f.div_rem(&f).unwrap();
        assert_eq!(quo, p(&[1]).to_rat());
        assert!(rem.is_zero());

        let (quo, rem) = p(&[0, 3])
            .to_rat()
            .div_rem(&p(&[0, -1, 1]).to_rat())
            .unwrap();
        assert!(quo.is_zero());
        assert_eq!(rem, p(&[0, 3]).to_rat());

        assert_eq!(f.div_rem(&RatPoly::zero()), Err(PolyError::DivisionByZero));
    }

    #[test]
    fn gcd_q_examples() {
        let g = gcd_q(&[p(&[0, -1, 0, 1]), p(&[0, -6, 6])]).unwrap();
        assert_eq!(g.gamma, p(&[0, -1, 1]).to_rat());

        let g = gcd_q(&[p(&[0, 1, 2])]).unwrap();
        assert_eq!(g.gamma, q(&[(0, 1), (1, 2), (1, 1)]));
        assert_eq!(g.l, 2.into());

        let f = p(&[0, 2, 0, 3]);
        let g = gcd_q(&[f.clone(), IntPoly::zero()]).unwrap();
        assert_eq!(g.gamma, f.to_rat().monic());

        assert_eq!(gcd_q(&[IntPoly::zero()]), Err(PolyError::AllZero));
        assert_eq!(gcd_q(&[]), Err(PolyError::AllZero));
    }

    #[test]
    fn compose_examples() {
        assert_eq!(p(&[0, 0, 1]).compose(&p(&[0, 1])), p(&[0, 0, 1]));
        assert_eq!(p(&[0, -1, 1]).compose(&p(&[0, 0, 1])), p(&[0, 0, -1, 0, 1]));
        let f = p(&[0, 5, -3, 2]);
        assert_eq!(p(&[0, 1]).compose(&f), f);
    }

    #[test]
    fn display_canonical() {
        assert_eq!(p(&[0, -4, 0, 2]).to_string(), "2x^3 - 4x");
        assert_eq!(p(&[0, -1, 1]).to_string(), "x^2 - x");
        assert_eq!(p(&[0, -1]).to_string(), "-x");
        assert_eq!(IntPoly::zero().to_string(), "0");
        assert_eq!(q(&[(0, 1), (1, 2), (1, 1)]).to_string(), "x^2 + (1/2)x");
    }

    struct Ints;
    impl RingContext for Ints {
        type Elem = BigInt;
        fn zero(&self) -> BigInt {
            BigInt::zero()
        }
        fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
            a + b
        }
        fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
            a * b
        }
        fn scale(&self, a: &BigInt, k: &BigInt) -> BigInt {
            a * k
        }
    }

    #[test]
    fn evaluate_in_integers() {
        let f = p(&[0, -4, 0, 2]);
        assert_eq!(f.evaluate_in(&Ints, &3.into()), BigInt::from(42));
        assert_eq!(
            IntPoly::zero().evaluate_in(&Ints, &7.into()),
            BigInt::zero()
        );
        assert_eq!(p(&[0, -1, 1]).evaluate_in(&Ints, &1.into()), BigInt::zero());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn int_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-bound..=bound, 0..=max_deg + 1).prop_map(|c| p(&c))
        }

        fn zc_poly(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
            prop::collection::vec(-bound..=bound, 0..=max_deg).prop_map(|mut c| {
                c.insert(0, 0);
                p(&c)
            })
        }

        proptest! {
            #[test]
            fn gauss_content_multiplicative(a in int_poly(6, 30), b in int_poly(6, 30)) {
                prop_assert_eq!((&a * &b).content(), a.content() * b.content());
            }

            #[test]
            fn content_split_reconstructs(a in int_poly(6, 50)) {
                if let Ok(s) = a.content_split() {
                    prop_assert!(s.content > BigInt::zero());
                    prop_assert!(s.primitive.content().is_one());
                    prop_assert_eq!(s.primitive.scale(&s.content), a);
                }
            }

            #[test]
            fn div_rem_reconstructs(a in int_poly(8, 20), b in int_poly(4, 20)) {
                let (a, b) = (a.to_rat(), b.to_rat());
                if b.is_zero() {
                    return Ok(());
                }
                let (quo, rem) = a.div_rem(&b).unwrap();
                prop_assert_eq!(&(&b * &quo) + &rem, a);
                prop_assert!(rem.is_zero() || rem.degree() < b.degree());
            }

            #[test]
            fn gcd_q_divides_and_bezout(
                common in zc_poly(3, 5),
                a in int_poly(3, 9),
                b in int_poly(3, 9),
                c in int_poly(2, 9),
            ) {
                let inputs = vec![&common * &a, &common * &b, &common * &c];
                let Ok(g) = gcd_q(&inputs) else {
                    prop_assert!(inputs.iter().all(IntPoly::is_zero));
                    return Ok(());
                };
                prop_assert!(g.gamma.is_monic());
                let mut combo = RatPoly::zero();
                for (f, co) in inputs.iter().zip(&g.bezout) {
                    let (_, rem) = f.to_rat().div_rem(&g.gamma).unwrap();
                    prop_assert!(rem.is_zero());
                    combo = &combo + &(co * &f.to_rat());
                }
                prop_assert_eq!(&combo, &g.gamma);
                // the planted common factor divides gamma
                if !common.is_zero() {
                    let (_, rem) = g.gamma.div_rem(&common.to_rat()).unwrap();
                    prop_assert!(rem.is_zero());
                }
                // l * gamma is an integer combination
                let ints = g.integer_cofactors();
                let lhs = inputs.iter().zip(&ints).fold(IntPoly::zero(), |acc, (f, h)| &acc + &(f * h));
                prop_assert_eq!(lhs, g.scaled_gamma());
            }

            #[test]
            fn compose_keeps_monic_zero_constant(a in zc_poly(4, 9), b in zc_poly(4, 9)) {
                let mono = |f: IntPoly| {
                    let d = f.degree().unwrap_or(0).max(1);
                    let mut c = f.truncate_below(d).into_coeffs();
                    c.resize(d + 1, BigInt::zero());
                    c[d] = BigInt::one();
                    c[0] = BigInt::zero();
                    IntPoly::new(c)
                };
                let (a, b) = (mono(a), mono(b));
                let h = a.compose(&b);
                prop_assert!(h.is_monic());
                prop_assert!(h.constant_term_is_zero());
                prop_assert_eq!(h.degree(), Some(a.degree().unwrap() * b.degree().unwrap()));
            }
        }
    }
}
