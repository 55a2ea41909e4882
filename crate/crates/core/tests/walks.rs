mod common;

use common::{any_small_map, named_maps};
use flagwalk_core::autgroup::{
    automorphism_group, flag_orbits, is_dart_transitive, rotation_subgroup, AutGroup,
};
use flagwalk_core::walks::{enumerate_consistent_orbits, walk_at, FlagWalk, WalkKind, WalkTag};
use flagwalk_core::FlagSystem;
use proptest::prelude::*;

fn kinds(q: usize) -> impl Iterator<Item = WalkKind> {
    (1..q).flat_map(|j| [WalkKind::hole(j), WalkKind::petrie(j)])
}

/// Consistency by brute force: an element of `g` moving every flag of the
/// walk one step on, of order equal to the length.
fn brute_consistent(w: &FlagWalk, g: &AutGroup) -> bool {
    let k = w.len();
    g.elements()
        .iter()
        .any(|h| h.order() == k && (0..k).all(|i| h.apply(w.flags[i]) == w.flags[(i + 1) % k]))
}

fn rows_match_brute_force(m: &FlagSystem, g: &AutGroup) {
    let q = m.face_structure().common_valence().unwrap();
    let r = enumerate_consistent_orbits(m, g).unwrap();
    let orbits = flag_orbits(m, g);
    for f in 0..m.n_flags() {
        for kind in kinds(q) {
            let w = walk_at(m, f, kind).unwrap();
            let listed = r.row(orbits.orbit_of(f), kind).is_some();
            assert_eq!(
                brute_consistent(&w, g),
                listed,
                "{:?} flag {f} {kind}",
                m.name()
            );
        }
    }
}

#[test]
fn enumeration_matches_brute_force() {
    for m in named_maps() {
        let fs = m.face_structure();
        if fs.common_valence().is_none() {
            continue;
        }
        let full = automorphism_group(&m);
        if !is_dart_transitive(&fs, &full) {
            continue;
        }
        rows_match_brute_force(&m, &full);
        if let Ok(rot) = rotation_subgroup(&m, &full) {
            if is_dart_transitive(&fs, &rot) {
                rows_match_brute_force(&m, &rot);
            }
        }
    }
}

#[test]
fn row_count_is_twice_q_minus_one() {
    for m in named_maps() {
        let fs = m.face_structure();
        if fs.common_valence().is_none() {
            continue;
        }
        let g = automorphism_group(&m);
        if let Ok(r) = enumerate_consistent_orbits(&m, &g) {
            assert_eq!(r.rows.len(), r.expected_rows(), "{:?}", m.name());
        }
    }
}

proptest! {
    // A walk through g(f) is the image under g of the walk through f.
    #[test]
    fn automorphisms_carry_walks(m in any_small_map(), f in any::<prop::sample::Index>(), jj in any::<prop::sample::Index>()) {
        let Some(q) = m.face_structure().common_valence() else { return Ok(()); };
        prop_assume!(q >= 2);
        let f = f.index(m.n_flags());
        let j = 1 + jj.index(q - 1);
        let g = automorphism_group(&m);
        for kind in [WalkKind::hole(j), WalkKind::petrie(j)] {
            let w = walk_at(&m, f, kind).unwrap();
            for h in g.elements() {
                let image: Vec<usize> = w.flags.iter().map(|&x| h.apply(x)).collect();
                prop_assert_eq!(walk_at(&m, h.apply(f), kind).unwrap().flags, image);
            }
        }
    }

    // j-holes of M are the j-Petrie paths of its Petrie dual, flag for flag.
    #[test]
    fn petrie_exchanges_holes(m in any_small_map()) {
        let p = m.petrie();
        prop_assume!(p.validate().is_valid());
        let Some(q) = m.face_structure().common_valence() else { return Ok(()); };
        for j in 1..q {
            for f in 0..m.n_flags() {
                prop_assert_eq!(
                    walk_at(&m, f, WalkKind::hole(j)).unwrap().flags,
                    walk_at(&p, f, WalkKind::petrie(j)).unwrap().flags
                );
            }
        }
    }

    // The partner of a j-walk covers the darts of a (q - j)-walk.
    #[test]
    fn partners_pair_up(m in any_small_map()) {
        let fs = m.face_structure();
        let Some(q) = fs.common_valence() else { return Ok(()); };
        for kind in kinds(q) {
            for f in 0..m.n_flags() {
                let w = walk_at(&m, f, kind).unwrap();
                let p = w.partner(&m, q);
                prop_assert_eq!(p.kind.j, q - kind.j);
                let mut a = p.darts(&fs);
                let mut b = walk_at(&m, p.base, p.kind).unwrap().darts(&fs);
                a.sort_unstable();
                b.sort_unstable();
                prop_assert_eq!(a, b);
            }
        }
    }

    // Reversing is an involution and gives a walk of the same kind.
    #[test]
    fn reverse_is_a_walk(m in any_small_map()) {
        let Some(q) = m.face_structure().common_valence() else { return Ok(()); };
        for kind in kinds(q) {
            let w = walk_at(&m, 0, kind).unwrap();
            let r = w.reverse(&m);
            prop_assert_eq!(&r.reverse(&m).flags, &w.flags);
            let again = walk_at(&m, r.base, kind).unwrap();
            prop_assert_eq!(again.flags, r.flags);
        }
    }
}

#[test]
fn reflexible_rows_are_symmetric() {
    let m = flagwalk_core::families::m12_7();
    let g = automorphism_group(&m);
    let r = enumerate_consistent_orbits(&m, &g).unwrap();
    assert!(r.rows.iter().all(|row| row.symmetric && row.dart_symmetric));
    assert_eq!(r.flag_orbits, 1);
}

#[test]
fn half_reflexible_petries_are_chiral() {
    let m = flagwalk_core::families::build_h(12, 3).unwrap().dual();
    let g = automorphism_group(&m);
    let r = enumerate_consistent_orbits(&m, &g).unwrap();
    assert_eq!(r.flag_orbits, 2);
    for row in &r.rows {
        assert_eq!(row.symmetric, row.kind.tag == WalkTag::Hole, "{}", row.kind);
    }
}
