//! Independent oracles: subset brute force for lower ideals, binomial counts,
//! direct evaluation of the reverse operator, and randomized invariants.

use proptest::prelude::*;
use rowmotion::bits::Bits;
use rowmotion::dynamics::{orbit_decomposition, orbit_of, DEFAULT_ORBIT_CAP};
use rowmotion::poset::{FinitePoset, IdealSet, KPoset, ProductPoset, DEFAULT_ENUMERATION_CAP};
use rowmotion::rootsys::{RootSystem, SimpleType};

/// All lower ideals by testing every subset against the order relation.
fn brute_force_ideals(p: &FinitePoset) -> Vec<u32> {
    let n = p.len();
    assert!(n <= 20);
    (0u32..1 << n)
        .filter(|&mask| {
            (0..n).all(|y| mask >> y & 1 == 0 || (0..n).all(|x| !p.leq(x, y) || mask >> x & 1 == 1))
        })
        .collect()
}

fn as_mask(i: &IdealSet) -> u32 {
    i.iter().fold(0, |m, x| m | 1 << x)
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, j| acc * (n - j) / (j + 1))
}

#[test]
fn enumeration_agrees_with_subset_brute_force() {
    let mut posets = vec![
        FinitePoset::product(&FinitePoset::chain(2), &FinitePoset::chain(3)),
        FinitePoset::disjoint_union(&FinitePoset::chain(3), &FinitePoset::chain(3)),
        RootSystem::new(SimpleType::parse("B4").unwrap())
            .unwrap()
            .delta_one(),
        RootSystem::new(SimpleType::parse("E6").unwrap())
            .unwrap()
            .delta_one(),
    ];
    for n in 2..=8 {
        posets.push(KPoset::new(n).unwrap().poset().clone());
    }
    for p in posets {
        let mut got: Vec<u32> = p
            .enumerate_lower_ideals(DEFAULT_ENUMERATION_CAP)
            .unwrap()
            .iter()
            .map(as_mask)
            .collect();
        got.sort_unstable();
        assert_eq!(got, brute_force_ideals(&p));
    }
}

#[test]
fn product_of_two_and_three_has_ten_ideals() {
    let p = FinitePoset::product(&FinitePoset::chain(2), &FinitePoset::chain(3));
    assert_eq!(brute_force_ideals(&p).len(), 10);
}

#[test]
fn k_poset_ideal_count_is_2n_plus_2() {
    for n in 2..=9 {
        let k = KPoset::new(n).unwrap();
        assert_eq!(brute_force_ideals(k.poset()).len(), 2 * n + 2, "n = {n}");
    }
}

#[test]
fn grid_ideal_counts_are_binomial() {
    for m in 1..=3 {
        for d in 0..=7 {
            let p = ProductPoset::new(m, FinitePoset::chain(d));
            let count = p
                .poset()
                .count_lower_ideals(DEFAULT_ENUMERATION_CAP)
                .unwrap();
            assert_eq!(count, binomial(m + d, m), "[{m}]x[{d}]");
            if m * d <= 14 {
                assert_eq!(count, brute_force_ideals(p.poset()).len());
            }
        }
    }
}

/// `min(P ∖ I)` evaluated straight from the definition.
fn reverse_by_definition(p: &FinitePoset, ideal: u32) -> u32 {
    let n = p.len();
    let outside: Vec<usize> = (0..n).filter(|&x| ideal >> x & 1 == 0).collect();
    let minimal: Vec<usize> = outside
        .iter()
        .copied()
        .filter(|&x| outside.iter().all(|&y| y == x || !p.leq(y, x)))
        .collect();
    (0..n)
        .filter(|&y| minimal.iter().any(|&a| p.leq(y, a)))
        .fold(0, |m, y| m | 1 << y)
}

#[test]
fn reverse_operator_matches_definition() {
    let posets = [
        FinitePoset::chain(4),
        FinitePoset::product(&FinitePoset::chain(3), &FinitePoset::chain(3)),
        FinitePoset::product(&FinitePoset::chain(2), KPoset::new(3).unwrap().poset()),
        RootSystem::new(SimpleType::parse("F4").unwrap())
            .unwrap()
            .delta_one(),
    ];
    for p in posets {
        for i in p.enumerate_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap() {
            assert_eq!(
                as_mask(&p.reverse_operator(&i)),
                reverse_by_definition(&p, as_mask(&i))
            );
        }
    }
}

#[test]
fn chain_of_length_2n_minus_2_is_one_cycle() {
    for n in 2..=8 {
        let c = FinitePoset::chain(2 * n - 2);
        for i in c.enumerate_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap() {
            assert_eq!(
                orbit_of(&c, &i, DEFAULT_ORBIT_CAP).unwrap().size(),
                2 * n - 1
            );
        }
    }
}

#[test]
fn b4_delta_one_has_three_orbits_of_seven() {
    let p = FinitePoset::product(&FinitePoset::chain(2), &FinitePoset::chain(5));
    let orbits = orbit_decomposition(&p, DEFAULT_ENUMERATION_CAP).unwrap();
    assert_eq!(
        orbits.iter().map(|o| o.size()).collect::<Vec<_>>(),
        vec![7, 7, 7]
    );
    let b4 = RootSystem::new(SimpleType::parse("B4").unwrap())
        .unwrap()
        .delta_one();
    let orbits = orbit_decomposition(&b4, DEFAULT_ENUMERATION_CAP).unwrap();
    assert_eq!(orbits.len(), 3);
}

#[test]
fn f4_coxeter_numbers_from_theta() {
    let f4 = RootSystem::new(SimpleType::parse("F4").unwrap()).unwrap();
    // θ = 2α1 + 3α2 + 4α3 + 2α4; θ^∨ in coroots halves the short coefficients
    assert_eq!(f4.theta().coeffs(), &[2, 3, 4, 2]);
    assert_eq!(f4.theta().height() + 1, 12);
    assert_eq!(1 + 2 + 3 + 2 + 1, f4.dual_coxeter_number());
}

/// Random posets on up to 9 elements. Relations only go from a smaller
/// index to a larger one, so they are acyclic by construction.
fn arb_poset() -> impl Strategy<Value = FinitePoset> {
    (1usize..=9).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..=2 * n).prop_map(move |pairs| {
            let labels = (0..n).map(|i| format!("e{i}")).collect();
            let rel = pairs.into_iter().filter(|(a, b)| a < b).collect::<Vec<_>>();
            FinitePoset::from_relations(labels, rel).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn reverse_operators_are_mutually_inverse(p in arb_poset()) {
        for i in p.enumerate_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap() {
            prop_assert_eq!(p.reverse_operator_prime(&p.reverse_operator(&i)), i.clone());
            prop_assert_eq!(p.reverse_operator(&p.reverse_operator_prime(&i)), i);
        }
    }

    #[test]
    fn antichains_and_ideals_are_in_bijection(p in arb_poset()) {
        let ideals = p.enumerate_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap();
        prop_assert_eq!(ideals.len(), brute_force_ideals(&p).len());
        let mut antichains = std::collections::HashSet::new();
        for i in &ideals {
            let a = p.antichain_of_ideal(i).unwrap();
            prop_assert_eq!(&p.ideal_of_antichain(&a).unwrap(), i);
            antichains.insert(a);
        }
        prop_assert_eq!(antichains.len(), ideals.len());
    }

    #[test]
    fn orbits_partition_the_ideals(p in arb_poset()) {
        let total = p.count_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap();
        let orbits = orbit_decomposition(&p, DEFAULT_ENUMERATION_CAP).unwrap();
        prop_assert_eq!(orbits.iter().map(|o| o.size()).sum::<usize>(), total);
        for w in orbits.windows(2) {
            prop_assert!(w[0].representative() < w[1].representative());
        }
    }

    #[test]
    fn product_profiles_round_trip(p in arb_poset(), m in 1usize..=2) {
        let pp = ProductPoset::new(m, p.clone());
        for i in pp.poset().enumerate_lower_ideals(DEFAULT_ENUMERATION_CAP).unwrap() {
            let rows = pp.profile(&i).unwrap();
            for w in rows.windows(2) {
                prop_assert!(w[1].is_subset(&w[0]));
            }
            prop_assert_eq!(pp.assemble(&rows).unwrap(), i);
        }
    }

    #[test]
    fn relabeled_posets_are_isomorphic(p in arb_poset(), seed in any::<u64>()) {
        // permute element positions and rebuild from the permuted order
        let n = p.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut inv = vec![0; n];
        for (i, &pi) in perm.iter().enumerate() {
            inv[pi] = i;
        }
        let q = FinitePoset::from_leq(
            (0..n).map(|i| format!("q{i}")).collect(),
            |a, b| p.leq(inv[a], inv[b]),
        ).unwrap();
        let map = p.is_isomorphic(&q);
        prop_assert!(map.is_some());
        prop_assert!(p.is_order_isomorphism(&q, &map.unwrap()));
    }

    #[test]
    fn bits_order_is_cardinality_then_membership(
        (a, b) in (0usize..80).prop_flat_map(|n| (
            proptest::collection::vec(any::<bool>(), n),
            proptest::collection::vec(any::<bool>(), n),
        ))
    ) {
        let to_bits = |v: &[bool]| {
            Bits::from_indices(v.len(), v.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i))
        };
        let count = |v: &[bool]| v.iter().filter(|&&b| b).count();
        let (x, y) = (to_bits(&a), to_bits(&b));
        prop_assert_eq!(x.count(), count(&a));
        prop_assert_eq!(x.complement().complement(), x.clone());
        prop_assert_eq!(x.cmp(&y), (count(&a), &a).cmp(&(count(&b), &b)));
    }
}
