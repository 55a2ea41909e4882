mod common;

use common::{any_small_map, named_maps};
use flagwalk_core::autgroup::{automorphism_group, flag_orbits};
use flagwalk_core::flagmap::are_isomorphic;
use flagwalk_core::FlagSystem;
use proptest::prelude::*;
use std::collections::BTreeSet;

fn perms(m: &FlagSystem) -> BTreeSet<Vec<usize>> {
    automorphism_group(m)
        .elements()
        .iter()
        .map(|g| g.perm().images().to_vec())
        .collect()
}

proptest! {
    #[test]
    fn operators_are_involutions(m in any_small_map()) {
        prop_assert_eq!(m.dual().dual(), m.clone());
        prop_assert_eq!(m.petrie().petrie(), m);
    }

    #[test]
    fn dual_swaps_vertices_and_faces(m in any_small_map()) {
        let a = m.face_structure();
        let b = m.dual().face_structure();
        prop_assert_eq!(a.n_vertices(), b.n_faces());
        prop_assert_eq!(a.n_faces(), b.n_vertices());
        prop_assert_eq!(a.n_edges(), b.n_edges());
        prop_assert_eq!(m.euler_characteristic(), m.dual().euler_characteristic());
        prop_assert_eq!(m.is_orientable(), m.dual().is_orientable());
    }

    #[test]
    fn petrie_keeps_vertices_and_edges(m in any_small_map()) {
        let p = m.petrie();
        let a = m.face_structure();
        let b = p.face_structure();
        prop_assert_eq!(a.vertices.orbits(), b.vertices.orbits());
        prop_assert_eq!(a.edges.orbits(), b.edges.orbits());
    }

    #[test]
    fn automorphisms_act_freely(m in any_small_map()) {
        let g = automorphism_group(&m);
        prop_assert!(g.acts_freely());
        prop_assert!(g.is_closed());
        prop_assert_eq!(m.n_flags() % g.len(), 0);
        prop_assert_eq!(flag_orbits(&m, &g).len() * g.len(), m.n_flags());
    }

    #[test]
    fn operators_keep_the_group(m in any_small_map()) {
        let a = perms(&m);
        prop_assert_eq!(&a, &perms(&m.dual()));
        if m.petrie().validate().is_valid() {
            prop_assert_eq!(&a, &perms(&m.petrie()));
        }
    }

    #[test]
    fn relabelled_maps_are_isomorphic(m in any_small_map(), seed in any::<u64>()) {
        let n = m.n_flags();
        let mut order: Vec<usize> = (0..n).collect();
        // cheap deterministic shuffle
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s ^= s << 13;
            s ^= s >> 7;
            s ^= s << 17;
            order.swap(i, (s % (i as u64 + 1)) as usize);
        }
        let relabel = |p: &flagwalk_core::Permutation| {
            let mut images = vec![0; n];
            for x in 0..n {
                images[order[x]] = order[p.apply(x)];
            }
            flagwalk_core::Permutation::from_images(images).unwrap()
        };
        let r = FlagSystem::new(relabel(m.r(0)), relabel(m.r(1)), relabel(m.r(2))).unwrap();
        prop_assert!(are_isomorphic(&m, &r).is_some());
    }
}

#[test]
fn named_maps_are_valid() {
    for m in named_maps() {
        assert!(m.validate().is_valid(), "{:?}", m.name());
    }
}

#[test]
fn tetrahedron_counts() {
    let m = flagwalk_core::families::tetrahedron();
    let s = m.summary();
    assert_eq!(
        (s.vertices, s.edges, s.faces, s.euler_characteristic),
        (4, 6, 4, 2)
    );
    assert_eq!(automorphism_group(&m).len(), 24);
}
