mod common;

use common::{p, random_cofactor, random_poly, random_presentation};
use monogenic::ideal::{monic_multiple_search, Presentation};
use monogenic::poly::IntPoly;
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

fn combo(hs: &[IntPoly], fs: &[IntPoly]) -> IntPoly {
    hs.iter()
        .zip(fs)
        .fold(IntPoly::zero(), |acc, (h, f)| &acc + &(h * f))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn normal_form_is_idempotent_and_certified(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let pr = random_presentation(&mut rng, 5, 15);
        let b = pr.canonical_basis();
        let g = random_poly(&mut rng, 8, 40);
        let r = b.reduce(&g);
        prop_assert_eq!(b.normal_form(&r.normal_form), r.normal_form.clone());
        prop_assert_eq!(&r.certificate.claim, &(&g - &r.normal_form));
        prop_assert!(r.certificate.verify(pr.relators()));
    }

    #[test]
    fn normal_form_ignores_added_members(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let pr = random_presentation(&mut rng, 5, 15);
        let b = pr.canonical_basis();
        let g = random_poly(&mut rng, 6, 40);
        let hs: Vec<IntPoly> = pr.relators().iter().map(|_| random_cofactor(&mut rng, 4, 9)).collect();
        let shifted = &g + &combo(&hs, pr.relators());
        prop_assert_eq!(b.normal_form(&shifted), b.normal_form(&g));
    }

    #[test]
    fn basis_depends_only_on_the_ideal(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let pr = random_presentation(&mut rng, 5, 15);
        let b = pr.canonical_basis();
        // reordered relators plus a redundant member give the same basis
        let mut rs: Vec<IntPoly> = pr.relators().iter().rev().cloned().collect();
        let hs: Vec<IntPoly> = pr.relators().iter().map(|_| random_cofactor(&mut rng, 3, 9)).collect();
        let extra = combo(&hs, pr.relators());
        rs.push(extra);
        let other = Presentation::new(rs).unwrap().canonical_basis();
        let polys = |b: &monogenic::ideal::CanonicalBasis| b.elements().iter().map(|e| e.poly.clone()).collect::<Vec<_>>();
        prop_assert_eq!(polys(&b), polys(&other));
    }

    #[test]
    fn ladder_and_certificates_hold(seed in any::<u64>()) {
        let mut rng = StdRng::seed_from_u64(seed);
        let pr = random_presentation(&mut rng, 6, 20);
        let b = pr.canonical_basis();
        prop_assert!(b.check_ladder());
        prop_assert!(b.verify_certificates());
        for f in pr.relators() {
            prop_assert!(b.contains(f));
        }
    }

    #[test]
    fn monic_multiple_is_least_degree(seed in any::<u64>(), k in 1i64..8) {
        let mut rng = StdRng::seed_from_u64(seed);
        let pr = random_presentation(&mut rng, 4, 10);
        let b = pr.canonical_basis();
        let k = BigInt::from(k);
        if let Some(m) = monic_multiple_search(&b, &k, 6).unwrap() {
            prop_assert!(m.phi.is_monic());
            prop_assert!(b.contains(&m.phi.scale(&k)));
            prop_assert!(m.certificate.verify(pr.relators()));
            let d = m.phi.degree().unwrap();
            if d > 1 {
                prop_assert!(monic_multiple_search(&b, &k, d - 1).unwrap().is_none());
            }
        }
    }
}

/// In a principal ideal with a monic generator, membership is divisibility.
#[test]
fn monic_principal_membership_matches_division() {
    let f = p(&[0, 3, -1, 1]);
    let pr = Presentation::new(vec![f.clone()]).unwrap();
    let b = pr.canonical_basis();
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..200 {
        let g = random_poly(&mut rng, 7, 25);
        let (_, rem) = g.to_rat().div_rem(&f.to_rat()).unwrap();
        assert_eq!(b.contains(&g), rem.is_zero(), "{g}");
    }
}
