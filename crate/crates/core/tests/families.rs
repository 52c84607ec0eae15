mod common;

use common::{gcd, Brute};
use frobenius::family::{k2_piecewise, k3_piecewise, FamilyParams};
use frobenius::special::{self, Family3Params, MersenneParams, ThabitParams};
use frobenius::{Error, Int};
use proptest::prelude::*;

fn valid_params() -> impl Strategy<Value = FamilyParams> {
    (2..80i128, 1..20i128, 1usize..8)
        .prop_filter("gcd and hypothesis", |&(a, d, k)| gcd(a, d) == 1 && a + d >= k as Int)
        .prop_map(|(a, d, k)| FamilyParams::new(a, d, k).unwrap())
}

#[test]
fn closed_forms_match_brute_force_on_small_grid() {
    for a in 2..=14i128 {
        for d in 1..=4 {
            for k in 1..=4usize {
                if gcd(a, d) != 1 || a + d < k as Int {
                    continue;
                }
                let p = FamilyParams::new(a, d, k).unwrap();
                let gens = p.generators().unwrap();
                let brute = Brute::for_gens(gens.as_slice());
                assert_eq!(p.frobenius_closed().unwrap(), brute.frobenius(), "{p:?}");
                assert_eq!(p.genus_closed().unwrap(), brute.gaps().len() as Int, "{p:?}");
            }
        }
    }
}

#[test]
fn outside_hypothesis_refuses_but_oracle_answers() {
    // a + d < k: (2, 5, 11, 23, 47, 95) with k = 5.
    let p = FamilyParams::new(2, 1, 5).unwrap();
    assert!(!p.monotone_ok());
    assert!(matches!(p.frobenius_closed(), Err(Error::HypothesisViolated(_))));
    let brute = Brute::for_gens(p.generators().unwrap().as_slice());
    assert_eq!(p.compute_best().unwrap().frobenius, brute.frobenius());
}

#[test]
fn special_families_match_brute_force() {
    for (m, n, d) in [(1, 2, 1), (1, 3, 1), (2, 2, 1), (1, 3, 2), (3, 2, 2)] {
        let p = MersenneParams::new(m, n, d).unwrap();
        let brute = Brute::for_gens(p.family().unwrap().generators().unwrap().as_slice());
        let r = special::mersenne_general(&p).unwrap();
        assert_eq!(r.frobenius, brute.frobenius());
        assert_eq!(r.genus, brute.gaps().len() as Int);
        assert_eq!(r.pseudo_frobenius.unwrap(), brute.pseudo_frobenius());
    }
    for (n, d) in [(1, 1), (2, 1), (2, 3), (3, 1)] {
        let p = ThabitParams::new(n, d).unwrap();
        let brute = Brute::for_gens(p.family().unwrap().generators().unwrap().as_slice());
        let r = special::thabit_general(&p).unwrap().report;
        assert_eq!((r.frobenius, r.genus), (brute.frobenius(), brute.gaps().len() as Int));
        if let Some(pf) = r.pseudo_frobenius {
            assert_eq!(pf, brute.pseudo_frobenius());
        }
    }
    for (m, k, d) in [(1, 3, 1), (2, 3, 1), (1, 4, 3)] {
        let p = Family3Params::new(m, k, d).unwrap();
        let brute = Brute::for_gens(p.family().unwrap().generators().unwrap().as_slice());
        assert_eq!(p.invariants().unwrap(), (brute.frobenius(), brute.gaps().len() as Int));
    }
}

#[test]
fn thabit_n1_and_piecewise_and_master_formula_coincide() {
    let t = special::thabit_classic(1).unwrap().report;
    let master = FamilyParams::new(5, 1, 2).unwrap();
    assert_eq!((t.frobenius, t.genus), (29, 16));
    assert_eq!(k2_piecewise(5, 1).unwrap(), (29, 16));
    assert_eq!((master.frobenius_closed().unwrap(), master.genus_closed().unwrap()), (29, 16));
}

#[test]
fn piecewise_equal_master_formula() {
    for a in 2..=60i128 {
        for d in 1..=6 {
            if gcd(a, d) != 1 {
                continue;
            }
            let p = FamilyParams::new(a, d, 2).unwrap();
            assert_eq!(k2_piecewise(a, d).unwrap(), (p.frobenius_closed().unwrap(), p.genus_closed().unwrap()));
            if a >= 7 {
                let p = FamilyParams::new(a, d, 3).unwrap();
                assert_eq!(k3_piecewise(a, d).unwrap(), (p.frobenius_closed().unwrap(), p.genus_closed().unwrap()));
            }
        }
    }
}

#[test]
fn presentation_counts_of_a_minus_one() {
    // #R(a-1) = a for the Mersenne and Thabit choices of a.
    for n in 2..=6 {
        for m in 1..=3 {
            let a = MersenneParams::new(m, n, 1).unwrap().a().unwrap();
            let rows = frobenius::coins::enumerate_presentations(n as usize, (a - 1) as u64).unwrap();
            assert_eq!(rows.len() as Int, a);
        }
        let a = ThabitParams::new(n, 1).unwrap().a().unwrap();
        let rows = frobenius::coins::enumerate_presentations(n as usize + 1, (a - 1) as u64).unwrap();
        assert_eq!(rows.len() as Int, a);
    }
}

proptest! {
    #[test]
    fn n_dr_nondecreasing_in_m(p in valid_params(), r_seed in 0..10_000i128) {
        let r = r_seed % p.a();
        let mut prev = p.n_dr_m(r, 0).unwrap();
        prop_assert_eq!(p.n_dr(r).unwrap(), prev);
        for m in 1..=5 {
            let next = p.n_dr_m(r, m).unwrap();
            prop_assert!(next >= prev);
            prev = next;
        }
    }

    #[test]
    fn n_dr_is_the_apery_entry(p in valid_params()) {
        let table = p.generators().unwrap().apery().unwrap();
        for r in 0..p.a() {
            let idx = p.apery_residue(r).unwrap() as usize;
            prop_assert_eq!(p.n_dr(r).unwrap(), table.entries()[idx]);
        }
    }

    #[test]
    fn largest_n_dr_at_a_minus_one(p in valid_params()) {
        let top = p.n_dr(p.a() - 1).unwrap();
        for r in 0..p.a() {
            prop_assert!(p.n_dr(r).unwrap() <= top);
        }
    }

    #[test]
    fn generator_count_and_order(a in 2..1000i128, d in 1..100i128, k in 1usize..20) {
        prop_assume!(gcd(a, d) == 1);
        let gens = FamilyParams::new(a, d, k).unwrap().generators().unwrap();
        prop_assert_eq!(gens.len(), k + 1);
        prop_assert!(gens.as_slice().windows(2).all(|w| w[0] < w[1]));
    }
}
