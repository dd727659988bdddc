use std::collections::BTreeMap;

use nclattice::enumeration::{s_table, u_table, v_table};
use nclattice::poset::{is_self_dual, Poset, DEFAULT_MAX_ISO_ELEMENTS};
use nclattice::scd::{generic_scd, scd_s, scd_u, scd_v, verify_scd, ScdSearch, DEFAULT_MAX_SCD_ELEMENTS};
use nclattice::{standard_config, Family, NcLattice};

fn lattice(family: Family, m: usize, n: usize) -> NcLattice {
    NcLattice::build(&standard_config(family, m, n).unwrap(), 12).unwrap()
}

type Profile = BTreeMap<(usize, usize), usize>;

/// Counts of `(rank, #lower covers)` and, mirrored, `(top − rank, #upper covers)`;
/// these agree for any self-dual graded poset.
fn degree_profiles(p: &Poset) -> (Profile, Profile) {
    let top = p.ranks().iter().copied().max().unwrap();
    let (mut down, mut up) = (BTreeMap::new(), BTreeMap::new());
    for i in 0..p.len() {
        *down.entry((p.rank(i), p.lower_covers(i).len())).or_insert(0) += 1;
        *up.entry((top - p.rank(i), p.upper_covers(i).len())).or_insert(0) += 1;
    }
    (down, up)
}

#[test]
fn non_self_dual_instance_has_asymmetric_cover_profile() {
    let l = lattice(Family::U, 1, 4);
    assert!(is_self_dual(l.poset(), DEFAULT_MAX_ISO_ELEMENTS).unwrap().is_none());
    let (down, up) = degree_profiles(l.poset());
    assert_ne!(down, up);
}

#[test]
fn self_dual_maps_reverse_order() {
    for n in 1..=5 {
        let l = lattice(Family::Polygon, n, 0);
        let f = is_self_dual(l.poset(), DEFAULT_MAX_ISO_ELEMENTS).unwrap().expect("classical lattice is self-dual");
        for a in 0..l.len() {
            for b in 0..l.len() {
                assert_eq!(l.poset().leq(a, b), l.poset().leq(f[b], f[a]));
            }
        }
    }
}

#[test]
fn classical_lattice_decomposes_by_search() {
    let l = lattice(Family::Polygon, 4, 0);
    let ScdSearch::Found(dec) = generic_scd(l.poset(), DEFAULT_MAX_SCD_ELEMENTS).unwrap() else {
        panic!("search exhausted")
    };
    assert_eq!(dec.len(), 6);
    assert!(verify_scd(l.poset(), &dec).unwrap().valid);
}

#[test]
fn family_decompositions_cover_table_sizes() {
    assert_eq!(scd_u(2, 2, 12).unwrap().decomposition.element_count().to_string(), u_table(2, 2).get(2, 2).to_string());
    assert_eq!(scd_v(2, 2, 12).unwrap().decomposition.element_count().to_string(), v_table(2, 2).get(2, 2).to_string());
    assert_eq!(scd_s(1, 2, 12).unwrap().decomposition.element_count().to_string(), s_table(1, 2).get(1, 2).to_string());
}

#[test]
fn larger_decompositions_verify() {
    for (family, m, n) in [(Family::S, 4, 3), (Family::V, 4, 4), (Family::U, 5, 4)] {
        let c = nclattice::scd::scd_family(family, m, n, 12).unwrap();
        assert!(verify_scd(c.lattice.poset(), &c.decomposition).unwrap().valid);
        assert!(c.pieces.iter().all(|p| p.holds()));
    }
}

#[test]
fn rank_vectors_are_palindromic_for_families() {
    for (family, m, n) in [(Family::T, 6, 0), (Family::U, 3, 4), (Family::V, 3, 3), (Family::S, 2, 4)] {
        let v = lattice(family, m, n).rank_vector().unwrap();
        assert!(v.iter().eq(v.iter().rev()), "{family:?}({m},{n}): {v:?}");
    }
}
