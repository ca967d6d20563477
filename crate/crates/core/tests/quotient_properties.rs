mod common;

use common::{pres, random_poly, random_presentation};
use monogenic::par::Strategy;
use monogenic::quotient::{
    build_quotient, span_of_products, subring_closure, Element, FiniteRing, Quotient,
    SeparationOptions, Separator,
};
use monogenic::separability::{decide, torsion_split};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn finite_quotients(rng: &mut StdRng, count: usize) -> Vec<FiniteRing> {
    let mut out = Vec::new();
    while out.len() < count {
        let pr = random_presentation(rng, 4, 10);
        let q = BigInt::from(rng.gen_range(2..=24));
        if let Ok(Quotient::Finite(r)) = build_quotient(&pr, &q) {
            if r.carrier_len().is_some_and(|n| n <= 256) {
                out.push(r);
            }
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn closure_routes_agree(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let ring = finite_quotients(&mut rng, 1).pop().unwrap();
        let gens: Vec<Element> = (0..rng.gen_range(0..3)).map(|_| ring.image(&random_poly(&mut rng, 4, 20))).collect();
        let a = subring_closure(&ring, &gens);
        let b = span_of_products(&ring, &gens);
        prop_assert_eq!(a.len(), b.len());
        prop_assert!(a.iter().all(|e| b.contains(e)));
    }

    #[test]
    fn encoding_round_trips(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let ring = finite_quotients(&mut rng, 1).pop().unwrap();
        let n = ring.carrier_len().unwrap();
        for i in 0..n {
            prop_assert_eq!(ring.encode(&ring.decode(i)), i);
        }
    }
}

#[test]
fn axiom_check_strategies_agree() {
    let mut rng = StdRng::seed_from_u64(31);
    for ring in finite_quotients(&mut rng, 20) {
        assert_eq!(ring.check_axioms(Strategy::Sequential), Ok(()));
        assert_eq!(ring.check_axioms(Strategy::Parallel), Ok(()));
    }
}

#[test]
fn carrier_is_product_of_radices() {
    // mod a prime every radix is q or 1, so the size is a power of q
    let r = build_quotient(&pres(&[&[0, 0, 0, 1]]), &BigInt::from(5))
        .unwrap()
        .finite()
        .unwrap();
    assert_eq!(r.carrier_size(), BigInt::from(25));
    let r = build_quotient(&pres(&[&[0, 0, 6], &[0, 0, 0, 1]]), &BigInt::from(4))
        .unwrap()
        .finite()
        .unwrap();
    assert_eq!(r.carrier_size(), BigInt::from(8));
    assert_eq!(r.elements().len(), 8);
}

/// Elements killed by every `k / p_i` vanish: the cofactors are coprime.
#[test]
fn torsion_split_is_coherent_on_quotients() {
    let mut nontrivial = 0;
    for rs in [
        vec![&[0i64, 6][..]],
        vec![&[0, -6, 6][..]],
        vec![&[0, -30, 0, 30][..], &[0, 0, 30][..]],
    ] {
        let pr = pres(&rs);
        let v = decide(&pr);
        let k = v.positive_witness.as_ref().unwrap().k.clone();
        let split = torsion_split(&k).unwrap();
        for q in 2..=36 {
            let Ok(Quotient::Finite(ring)) = build_quotient(&pr, &BigInt::from(q)) else {
                continue;
            };
            if ring.carrier_len() > Some(1) {
                nontrivial += 1;
            }
            for u in ring.elements() {
                if split.parts.iter().all(|(_, c)| ring.scale(&u, c).is_zero()) {
                    assert!(u.is_zero(), "q = {q}: {u}");
                }
                // u = sum z_i k_i u
                let back = split
                    .parts
                    .iter()
                    .zip(&split.bezout)
                    .fold(ring.zero(), |acc, ((_, c), z)| {
                        ring.add(&acc, &ring.scale(&u, &(c * z)))
                    });
                assert_eq!(back, u);
            }
        }
    }
    assert!(nontrivial > 0);
}

#[test]
fn separation_strategies_agree() {
    let pr = pres(&[&[0, -1, 0, 1], &[0, -6, 6]]);
    let mut rng = StdRng::seed_from_u64(41);
    let seq = Separator::new(
        &pr,
        SeparationOptions {
            strategy: Strategy::Sequential,
            ..Default::default()
        },
    );
    let par = Separator::new(&pr, SeparationOptions::default());
    for _ in 0..30 {
        let t = random_poly(&mut rng, 4, 10);
        let g = vec![random_poly(&mut rng, 4, 10)];
        assert_eq!(seq.separate(&t, &g), par.separate(&t, &g));
    }
}

#[test]
fn members_are_never_separated() {
    let pr = pres(&[&[0, 0, 2], &[0, 0, 0, 1]]);
    let sep = Separator::new(
        &pr,
        SeparationOptions {
            modulus_bound: 30,
            ..Default::default()
        },
    );
    let g = common::p(&[0, 2, 1]);
    let t = &(&g * &g) - &g.scale(&BigInt::from(3));
    let res = sep.separate(&t, &[g]);
    assert!(!res.found);
    assert_eq!(res.bound_exhausted, Some(BigInt::from(30)));
}
