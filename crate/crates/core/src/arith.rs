//! Integer and rational helpers: list gcds, Bezout cofactors, squarefreeness
//! and a small factorization engine (trial division followed by Pollard rho).
//!
//! Values are `num-bigint` integers and `num-rational` rationals; everything
//! here is a pure function over immutable inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as BigRat;

/// Default bound for the trial-division phase of [`factorize`].
pub const DEFAULT_TRIAL_BOUND: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("all inputs are zero")]
    AllZero,
    #[error("expected a positive integer, got {0}")]
    NonPositive(BigInt),
}

/// Nonnegative gcd of a list; the gcd of an empty list is 0.
pub fn gcd_list(values: &[BigInt]) -> BigInt {
    values.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v))
}

/// Positive lcm of a list of nonzero integers; the lcm of an empty list is 1.
pub fn lcm_list<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values
        .into_iter()
        .filter(|v| !v.is_zero())
        .fold(BigInt::one(), |acc, v| acc.lcm(v))
}

/// Extended Euclid: returns `(g, s, t)` with `s*a + t*b = g` and `g >= 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = old_r.div_floor(&r);
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Gcd of a list together with cofactors `c` such that `sum c_i * v_i = gcd`.
pub fn bezout(values: &[BigInt]) -> Result<(BigInt, Vec<BigInt>), ArithError> {
    if values.iter().all(Zero::is_zero) {
        return Err(ArithError::AllZero);
    }
    let mut g = BigInt::zero();
    let mut cofactors: Vec<BigInt> = Vec::with_capacity(values.len());
    for v in values {
        let (next, s, t) = ext_gcd(&g, v);
        for c in cofactors.iter_mut() {
            *c *= &s;
        }
        cofactors.push(t);
        g = next;
    }
    debug_assert_eq!(
        cofactors
            .iter()
            .zip(values)
            .map(|(c, v)| c * v)
            .sum::<BigInt>(),
        g
    );
    Ok((g, cofactors))
}

/// Outcome of a squarefreeness test, carrying the full factorization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeWitness {
    pub is_squarefree: bool,
    /// Smallest prime whose square divides the input, if any.
    pub offending_prime: Option<BigInt>,
    /// Prime factorization in ascending prime order.
    pub factorization: Vec<(BigInt, u32)>,
}

impl SquarefreeWitness {
    pub fn product(&self) -> BigInt {
        self.factorization
            .iter()
            .map(|(p, e)| num_traits::pow(p.clone(), *e as usize))
            .product()
    }

    pub fn primes(&self) -> impl Iterator<Item = &BigInt> {
        self.factorization.iter().map(|(p, _)| p)
    }
}

pub fn squarefree(n: &BigInt) -> Result<SquarefreeWitness, ArithError> {
    let factorization = factorize(n, DEFAULT_TRIAL_BOUND)?;
    let offending_prime = factorization
        .iter()
        .find(|(_, e)| *e >= 2)
        .map(|(p, _)| p.clone());
    Ok(SquarefreeWitness {
        is_squarefree: offending_prime.is_none(),
        offending_prime,
        factorization,
    })
}

/// Prime factorization of a positive integer, ascending by prime.
pub fn factorize(n: &BigInt, trial_bound: u64) -> Result<Vec<(BigInt, u32)>, ArithError> {
    if !n.is_positive() {
        return Err(ArithError::NonPositive(n.clone()));
    }
    let mut primes = Vec::new();
    let mut rest = n.clone();

    // trial division, on machine words when possible
    if let Some(mut small) = rest.to_u64() {
        let mut d = 2u64;
        while d <= trial_bound && d.saturating_mul(d) <= small {
            while small % d == 0 {
                primes.push(BigInt::from(d));
                small /= d;
            }
            d += if d == 2 { 1 } else { 2 };
        }
        rest = BigInt::from(small);
    } else {
        let mut d = 2u64;
        while d <= trial_bound {
            let bd = BigInt::from(d);
            if &bd * &bd > rest {
                break;
            }
            while (&rest % &bd).is_zero() {
                primes.push(bd.clone());
                rest /= &bd;
            }
            d += if d == 2 { 1 } else { 2 };
        }
    }
    if !rest.is_one() {
        split_composite(rest, &mut primes);
    }

    primes.sort();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    Ok(out)
}

fn split_composite(n: BigInt, primes: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        primes.push(n);
        return;
    }
    let root = n.sqrt();
    if &root * &root == n {
        split_composite(root.clone(), primes);
        split_composite(root, primes);
        return;
    }
    let d = pollard_rho(&n);
    split_composite(&n / &d, primes);
    split_composite(d, primes);
}

/// Finds a nontrivial factor of a composite `n` (Floyd cycle detection).
fn pollard_rho(n: &BigInt) -> BigInt {
    if n.is_even() {
        return BigInt::from(2);
    }
    let one = BigInt::one();
    let mut c = BigInt::one();
    loop {
        let f = |x: &BigInt| (x * x + &c) % n;
        let mut x = BigInt::from(2);
        let mut y = x.clone();
        let mut d = one.clone();
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            d = (&x - &y).abs().gcd(n);
        }
        if &d != n {
            return d;
        }
        c += 1;
    }
}

/// Miller-Rabin with the first twelve prime bases; deterministic below 3.3e24.
pub fn is_probable_prime(n: &BigInt) -> bool {
    const BASES: [u32; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < &BigInt::from(2) {
        return false;
    }
    for b in BASES {
        let b = BigInt::from(b);
        if n == &b {
            return true;
        }
        if (n % &b).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let mut d = n_minus_one.clone();
    let mut s = 0u32;
    while d.is_even() {
        d >>= 1;
        s += 1;
    }
    'witness: for b in BASES {
        let mut x = BigInt::from(b).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// All positive divisors of `n`, ascending.
pub fn divisors(n: &BigInt) -> Result<Vec<BigInt>, ArithError> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factorize(n, DEFAULT_TRIAL_BOUND)? {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut pk = d.clone();
            next.push(pk.clone());
            for _ in 0..e {
                pk *= &p;
                next.push(pk.clone());
            }
        }
        out = next;
    }
    out.sort();
    Ok(out)
}

/// Least nonnegative residue of `a` modulo a positive `m`.
pub(crate) fn residue(a: &BigInt, m: &BigInt) -> BigInt {
    a.mod_floor(m)
}

pub(crate) fn is_integer(r: &BigRat) -> bool {
    r.denom().is_one()
}
