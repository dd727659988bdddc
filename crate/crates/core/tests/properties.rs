use std::collections::BTreeSet;

use nclattice::geometry::{convex_hull, hulls_disjoint, Predicates};
use nclattice::partition::{all_partitions, enumerate_noncrossing, is_noncrossing};
use nclattice::{Configuration, NcLattice, Point};
use num_rational::BigRational;
use proptest::prelude::*;

fn config_from(coords: &BTreeSet<(i64, i64)>) -> Configuration {
    Configuration::new(coords.iter().map(|&(x, y)| Point::from_ints(x, y)).collect(), None).unwrap()
}

fn configs(max: usize) -> impl Strategy<Value = BTreeSet<(i64, i64)>> {
    prop::collection::btree_set((-4i64..=4, -4i64..=4), 1..=max)
}

fn masks_to_indices(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|i| mask >> i & 1 == 1).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn disjointness_is_symmetric_and_matches_table(coords in configs(7), split in any::<u64>(), keep in any::<u64>()) {
        let config = config_from(&coords);
        let n = config.len();
        let full = (1u64 << n) - 1;
        let a = split & keep & full;
        let b = !split & keep & full;
        prop_assume!(a != 0 && b != 0);
        let ha = convex_hull(&config, &masks_to_indices(a, n)).unwrap();
        let hb = convex_hull(&config, &masks_to_indices(b, n)).unwrap();
        let d = hulls_disjoint(&ha, &hb);
        prop_assert_eq!(d, hulls_disjoint(&hb, &ha));
        prop_assert_eq!(d, Predicates::new(&config).unwrap().blocks_disjoint(a, b));
    }

    #[test]
    fn hull_ignores_point_order(coords in configs(7)) {
        let config = config_from(&coords);
        let idx: Vec<usize> = (0..config.len()).collect();
        let rev: Vec<usize> = idx.iter().rev().copied().collect();
        prop_assert_eq!(convex_hull(&config, &idx).unwrap(), convex_hull(&config, &rev).unwrap());
    }

    // shrinking either block can only keep hulls apart
    #[test]
    fn disjointness_is_monotone(coords in configs(7), split in any::<u64>(), drop in any::<u64>()) {
        let config = config_from(&coords);
        let n = config.len();
        let full = (1u64 << n) - 1;
        let (a, b) = (split & full, !split & full);
        prop_assume!(a != 0 && b != 0);
        let pred = Predicates::new(&config).unwrap();
        let (sa, sb) = (a & !drop | (a & a.wrapping_neg()), b & drop | (b & b.wrapping_neg()));
        if pred.blocks_disjoint(a, b) {
            prop_assert!(pred.blocks_disjoint(sa, sb));
        }
    }

    #[test]
    fn pruned_enumeration_matches_naive_filter(coords in configs(7)) {
        let config = config_from(&coords);
        let pruned = enumerate_noncrossing(&config).unwrap();
        let naive: Vec<_> = all_partitions(config.len())
            .into_iter()
            .filter(|p| is_noncrossing(&config, p).unwrap())
            .collect();
        prop_assert_eq!(pruned, naive);
    }

    #[test]
    fn rigid_motions_preserve_the_lattice(coords in configs(6), dx in -5i64..5, dy in -5i64..5) {
        let config = config_from(&coords);
        let lattice = NcLattice::build(&config, 12).unwrap();
        let ratio = |a: i64, b: i64| BigRational::new(a.into(), b.into());
        let moved = config
            .map_points(|p| {
                // rotation by the angle with cosine 3/5, then a translation
                let x = &p.x * ratio(3, 5) - &p.y * ratio(4, 5) + ratio(dx, 1);
                let y = &p.x * ratio(4, 5) + &p.y * ratio(3, 5) + ratio(dy, 1);
                Point::new(x, y)
            })
            .unwrap();
        let other = NcLattice::build(&moved, 12).unwrap();
        prop_assert_eq!(lattice.elements(), other.elements());
        prop_assert_eq!(lattice.poset().covers(), other.poset().covers());
    }
}
