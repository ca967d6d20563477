#![allow(dead_code)]

use monogenic::ideal::Presentation;
use monogenic::poly::IntPoly;
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::Rng;

pub fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64s(c)
}

pub fn pres(rs: &[&[i64]]) -> Presentation {
    Presentation::new(rs.iter().map(|r| p(r)).collect()).unwrap()
}

/// Random polynomial with zero constant term, degree in `1..=max_deg`,
/// coefficients in `[-bound, bound]`; never zero.
pub fn random_poly(rng: &mut StdRng, max_deg: usize, bound: i64) -> IntPoly {
    loop {
        let deg = rng.gen_range(1..=max_deg);
        let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
        c[0] = 0;
        let f = p(&c);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Random polynomial with any constant term, possibly zero.
pub fn random_cofactor(rng: &mut StdRng, max_deg: usize, bound: i64) -> IntPoly {
    let deg = rng.gen_range(0..=max_deg);
    p(&(0..=deg)
        .map(|_| rng.gen_range(-bound..=bound))
        .collect::<Vec<_>>())
}

/// One to three relators. Half the time they share a planted factor
/// `c * h` so that separable presentations and non-squarefree contents
/// show up often.
pub fn random_presentation(rng: &mut StdRng, max_deg: usize, bound: i64) -> Presentation {
    let m = rng.gen_range(1..=3);
    let relators: Vec<IntPoly> = if rng.gen_bool(0.5) {
        (0..m).map(|_| random_poly(rng, max_deg, bound)).collect()
    } else {
        let hd = rng.gen_range(1..=max_deg.min(3));
        let mut h: Vec<i64> = (0..=hd).map(|_| rng.gen_range(-3..=3)).collect();
        h[0] = 0;
        h[hd] = if rng.gen_bool(0.7) {
            1
        } else {
            rng.gen_range(2..=3)
        };
        let h = p(&h);
        let c = BigInt::from(*[1, 1, 2, 3, 4, 6, 9].get(rng.gen_range(0..7)).unwrap());
        (0..m)
            .map(|_| {
                let room = max_deg - hd;
                let r = if room == 0 {
                    p(&[rng.gen_range(1..=3)])
                } else {
                    let mut r = random_cofactor(rng, room, 3);
                    if r.is_zero() {
                        r = p(&[1]);
                    }
                    r
                };
                (&h * &r).scale(&c)
            })
            .filter(|f| !f.is_zero())
            .collect()
    };
    Presentation::new(relators).unwrap()
}
