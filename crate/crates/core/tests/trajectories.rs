//! Orbit walks on `[2] × [2n-3]` and `[2] × K_{n-1}`, together with the
//! position of the unique ideal of size `h* - 2` in each orbit.

use rowmotion::dynamics::{
    ideal_of_signature, iterate, orbit_decomposition, orbit_of, RankSignature, Slice, SliceFamily,
    DEFAULT_ORBIT_CAP,
};
use rowmotion::poset::{FinitePoset, IdealSet, KPoset, ProductPoset, DEFAULT_ENUMERATION_CAP};
use Slice::{Level as L, Primed, Unprimed};

fn ideal<F: SliceFamily>(pp: &ProductPoset, f: &F, blocks: &[(Slice, usize)]) -> IdealSet {
    ideal_of_signature(pp, f, &RankSignature::new(blocks.iter().copied())).unwrap()
}

/// The orbit through `start` has `period` elements and exactly one ideal of
/// size `target`, namely `expected`.
fn check_orbit(
    pp: &ProductPoset,
    start: &IdealSet,
    period: usize,
    target: usize,
    expected: &IdealSet,
) {
    let orbit = orbit_of(pp.poset(), start, DEFAULT_ORBIT_CAP).unwrap();
    assert_eq!(orbit.size(), period);
    let hits: Vec<&IdealSet> = orbit
        .ideals()
        .iter()
        .filter(|i| i.len() == target)
        .collect();
    assert_eq!(hits, vec![expected]);
}

#[test]
fn b_series_lagrangian_positions() {
    for n in 3..=9 {
        let d = 2 * n - 3;
        let pp = ProductPoset::new(2, FinitePoset::chain(d));
        let c = pp.factor().clone();
        let target = 2 * n - 3;
        check_orbit(
            &pp,
            &ideal(&pp, &c, &[(L(0), 2)]),
            2 * n - 1,
            target,
            &ideal(&pp, &c, &[(L(n - 1), 1), (L(n - 2), 1)]),
        );
        for i in 1..=n - 2 {
            let expected = if i % 2 == 1 {
                ideal(
                    &pp,
                    &c,
                    &[(L(2 * n - 2 - i.div_ceil(2)), 1), (L((i - 1) / 2), 1)],
                )
            } else {
                ideal(&pp, &c, &[(L(n + i / 2 - 1), 1), (L(n - i / 2 - 2), 1)])
            };
            check_orbit(
                &pp,
                &ideal(&pp, &c, &[(L(i), 2)]),
                2 * n - 1,
                target,
                &expected,
            );
        }
        let orbits = orbit_decomposition(pp.poset(), DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(orbits.len(), n - 1);
    }
}

#[test]
fn d_series_type_one_walks() {
    for n in 2..=8 {
        let k = KPoset::new(n).unwrap();
        let pp = ProductPoset::new(2, k.poset().clone());
        let top = 2 * n - 1;
        let x = |from: &[(Slice, usize)], steps: usize, to: &[(Slice, usize)]| {
            assert_eq!(
                iterate(pp.poset(), &ideal(&pp, &k, from), steps),
                ideal(&pp, &k, to),
                "n = {n}, {from:?}"
            );
        };
        for i in 1..n {
            x(&[(L(i), 2)], 1, &[(L(i + 1), 1), (L(0), 1)]);
            x(
                &[(L(i + 1), 1), (L(0), 1)],
                2 * n - i - 2,
                &[(L(top), 1), (L(2 * n - i - 2), 1)],
            );
            x(
                &[(L(top), 1), (L(2 * n - i - 2), 1)],
                1,
                &[(L(2 * n - i - 1), 2)],
            );
            x(&[(L(2 * n - i - 1), 2)], 1, &[(L(2 * n - i), 1), (L(0), 1)]);
            x(
                &[(L(2 * n - i), 1), (L(0), 1)],
                i - 1,
                &[(L(top), 1), (L(i - 1), 1)],
            );
            x(&[(L(top), 1), (L(i - 1), 1)], 1, &[(L(i), 2)]);
            let expected = if i % 2 == 1 {
                ideal(
                    &pp,
                    &k,
                    &[(L(2 * n - i + (i - 1) / 2), 1), (L((i - 1) / 2), 1)],
                )
            } else {
                ideal(&pp, &k, &[(L(n + i / 2), 1), (L(n - i / 2 - 1), 1)])
            };
            check_orbit(
                &pp,
                &ideal(&pp, &k, &[(L(i), 2)]),
                2 * n + 1,
                2 * n,
                &expected,
            );
        }
        // from the empty ideal the walk reaches the full ideal, then wraps
        x(&[(L(0), 2)], 1, &[(L(1), 1), (L(0), 1)]);
        x(
            &[(L(1), 1), (L(0), 1)],
            2 * n - 2,
            &[(L(top), 1), (L(2 * n - 2), 1)],
        );
        x(&[(L(top), 1), (L(2 * n - 2), 1)], 1, &[(L(top), 2)]);
        x(&[(L(top), 2)], 1, &[(L(0), 2)]);
        check_orbit(
            &pp,
            &ideal(&pp, &k, &[(L(0), 2)]),
            2 * n + 1,
            2 * n,
            &ideal(&pp, &k, &[(L(n), 1), (L(n - 1), 1)]),
        );
    }
}

#[test]
fn d_series_has_n_plus_two_orbits_of_equal_size() {
    for n in 2..=8 {
        let k = KPoset::new(n).unwrap();
        let pp = ProductPoset::new(2, k.poset().clone());
        let orbits = orbit_decomposition(pp.poset(), DEFAULT_ENUMERATION_CAP).unwrap();
        assert_eq!(orbits.len(), n + 2);
        assert!(orbits.iter().all(|o| o.size() == 2 * n + 1));
        let starts = [
            ideal(&pp, &k, &[(Unprimed, 2)]),
            ideal(&pp, &k, &[(Primed, 2)]),
        ];
        assert_ne!(
            orbit_of(pp.poset(), &starts[0], DEFAULT_ORBIT_CAP)
                .unwrap()
                .representative(),
            orbit_of(pp.poset(), &starts[1], DEFAULT_ORBIT_CAP)
                .unwrap()
                .representative(),
        );
    }
}
