mod common;

use common::{gcd, Brute};
use frobenius::{GeneratorSet, Int};
use proptest::prelude::*;

fn coprime_gens() -> impl Strategy<Value = Vec<Int>> {
    prop::collection::vec(2..60i128, 1..5)
        .prop_filter("coprime", |v| v.iter().fold(0, |acc, &x| gcd(acc, x)) == 1)
}

#[test]
fn frozen_values_agree_with_brute_force() {
    for gens in [&[3, 7][..], &[2, 3], &[5, 11, 23], &[7, 15, 31], &[8, 17, 35, 71]] {
        let brute = Brute::for_gens(gens);
        let table = GeneratorSet::new(gens.iter().copied()).unwrap().apery().unwrap();
        assert_eq!(table.entries(), brute.apery(gens[0]).as_slice());
        assert_eq!(table.frobenius(), brute.frobenius());
        assert_eq!(table.gaps(), brute.gaps());
        assert_eq!(table.pseudo_frobenius(), brute.pseudo_frobenius());
    }
}

#[test]
fn sylvester_small_pairs() {
    for a in 2..40i128 {
        for b in a + 1..60 {
            if gcd(a, b) != 1 {
                continue;
            }
            let r = GeneratorSet::new([a, b]).unwrap().invariants().unwrap();
            assert_eq!(r.frobenius, a * b - a - b);
            assert_eq!(r.genus, (a - 1) * (b - 1) / 2);
            assert_eq!(r.semigroup_type(), Some(1));
        }
    }
}

proptest! {
    #[test]
    fn apery_table_invariants(gens in coprime_gens()) {
        let set = GeneratorSet::new(gens.clone()).unwrap();
        let table = set.apery().unwrap();
        let base = table.base();
        prop_assert_eq!(base, set.least());
        prop_assert_eq!(table.entries().len() as Int, base);
        prop_assert_eq!(table.entries()[0], 0);
        for (r, &n) in table.entries().iter().enumerate() {
            prop_assert_eq!(n % base, r as Int);
            prop_assert!(!table.contains(n - base));
        }
    }

    #[test]
    fn matches_brute_force(gens in coprime_gens()) {
        let set = GeneratorSet::new(gens.clone()).unwrap();
        let table = set.apery().unwrap();
        let brute = Brute::for_gens(set.as_slice());
        let f = table.frobenius();
        for n in -3..=f + set.largest() + 1 {
            prop_assert_eq!(table.contains(n), brute.contains(n), "n = {}", n);
        }
        prop_assert_eq!(f, brute.frobenius());
        let expected = brute.apery(set.least());
        prop_assert_eq!(table.entries(), expected.as_slice());
        let gaps = table.gaps();
        prop_assert_eq!(gaps.len() as Int, table.genus().unwrap());
        prop_assert_eq!(gaps, brute.gaps());
        prop_assert_eq!(table.pseudo_frobenius(), brute.pseudo_frobenius());
    }

    #[test]
    fn frobenius_is_a_gap_followed_by_a_run(gens in coprime_gens()) {
        let set = GeneratorSet::new(gens).unwrap();
        let table = set.apery().unwrap();
        let f = table.frobenius();
        prop_assert!(!table.contains(f));
        for j in 1..=set.largest() {
            prop_assert!(table.contains(f + j));
        }
    }

    #[test]
    fn pseudo_frobenius_definition(gens in coprime_gens()) {
        let set = GeneratorSet::new(gens).unwrap();
        let report = set.invariants().unwrap();
        let table = set.apery().unwrap();
        let pf = report.pseudo_frobenius.clone().unwrap();
        prop_assert_eq!(pf.last().copied(), Some(report.frobenius));
        for &u in &pf {
            prop_assert!(!table.contains(u));
            for &g in set.as_slice() {
                prop_assert!(table.contains(u + g));
            }
        }
    }

    #[test]
    fn maximal_elements_two_routes_agree(gens in coprime_gens(), pick in 0usize..5) {
        let set = GeneratorSet::new(gens).unwrap();
        let least = set.apery().unwrap();
        prop_assert_eq!(least.maximal_elements(), least.maximal_elements_pairwise());
        let base = (1..).filter(|&n| least.contains(n)).nth(pick).unwrap();
        let other = set.apery_set(base).unwrap();
        prop_assert_eq!(other.maximal_elements(), other.maximal_elements_pairwise());
    }

    #[test]
    fn apery_residue_permutation(gens in coprime_gens(), d in 1..50i128) {
        let set = GeneratorSet::new(gens).unwrap();
        let table = set.apery().unwrap();
        let a = table.base();
        prop_assume!(gcd(a, d) == 1);
        let mut permuted: Vec<Int> = (0..a).map(|r| table.entries()[((d * r) % a) as usize]).collect();
        let mut original = table.entries().to_vec();
        permuted.sort_unstable();
        original.sort_unstable();
        prop_assert_eq!(permuted, original);
    }

    #[test]
    fn minimal_generators_idempotent_and_equivalent(gens in coprime_gens()) {
        let set = GeneratorSet::new(gens).unwrap();
        let min = set.minimal().unwrap();
        prop_assert_eq!(min.minimal().unwrap(), min.clone());
        let full = set.apery().unwrap();
        let reduced = min.apery().unwrap();
        for n in 0..=full.frobenius() + set.largest() {
            prop_assert_eq!(full.contains(n), reduced.contains(n));
        }
        // No kept generator is a combination of the others.
        for (i, &g) in min.as_slice().iter().enumerate() {
            let others: Vec<Int> = min.as_slice().iter().enumerate()
                .filter(|&(j, _)| j != i).map(|(_, &x)| x).collect();
            if !others.is_empty() {
                prop_assert!(!Brute::new(&others, g as usize).contains(g));
            }
        }
    }

    #[test]
    fn apery_with_respect_to_any_element(gens in coprime_gens(), pick in 0usize..8) {
        let set = GeneratorSet::new(gens).unwrap();
        let table = set.apery().unwrap();
        let base = (1..).filter(|&n| table.contains(n)).nth(pick).unwrap();
        let other = set.apery_set(base).unwrap();
        prop_assert_eq!(other.frobenius(), table.frobenius());
        prop_assert_eq!(other.genus(), table.genus());
        for &n in other.entries() {
            prop_assert!(table.contains(n));
            prop_assert!(!table.contains(n - base));
        }
    }
}
