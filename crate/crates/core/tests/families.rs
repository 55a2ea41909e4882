mod common;

use flagwalk_core::autgroup::{automorphism_group, is_dart_transitive};
use flagwalk_core::families::{all_gluings, build_delta, build_h, build_m, glue, PolygonGluing};
use flagwalk_core::flagmap::are_isomorphic;
use flagwalk_core::FlagSystem;
use proptest::prelude::*;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn family(max_n: usize) -> Vec<FlagSystem> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(build_m(n).ok());
        out.extend(build_delta(n).ok());
        for a in 0..n {
            out.extend(build_h(n, a).ok());
        }
    }
    out
}

proptest! {
    #[test]
    fn h_is_symmetric_in_a((n, a) in (2usize..13).prop_flat_map(|n| (Just(n), 0..n))) {
        if let Ok(m) = build_h(n, a) {
            prop_assert!(are_isomorphic(&m, &build_h(n, n - 1 - a).unwrap()).is_some());
        }
    }

    // Even corners meet at gcd(n, a) vertices, odd corners at gcd(n, a + 1).
    #[test]
    fn h_vertex_colours((n, a) in (2usize..15).prop_flat_map(|n| (Just(n), 0..n))) {
        let Ok(m) = build_h(n, a) else { return Ok(()); };
        let gl = PolygonGluing::h(n, a).unwrap();
        let fs = m.face_structure();
        let colour = |parity: usize| -> std::collections::BTreeSet<usize> {
            (0..2 * n).filter(|c| c % 2 == parity).map(|c| fs.vertex_of(gl.corner_flag(c))).collect()
        };
        let (red, green) = (colour(0), colour(1));
        prop_assert!(red.is_disjoint(&green));
        prop_assert_eq!(red.len(), gcd(n, a));
        prop_assert_eq!(green.len(), gcd(n, a + 1));
        for &v in &red {
            prop_assert_eq!(fs.valence(v), n / gcd(n, a));
        }
    }
}

#[test]
fn h_is_m_when_2a_plus_1_is_n() {
    for a in 1..7 {
        let n = 2 * a + 1;
        assert!(are_isomorphic(&build_h(n, a).unwrap(), &build_m(n).unwrap()).is_some());
    }
}

#[test]
fn delta_dual_is_petrie_of_m_dual() {
    for n in 3..=8 {
        let a = build_delta(n).unwrap().dual();
        let b = build_m(n).unwrap().dual().petrie();
        assert!(are_isomorphic(&a, &b).is_some(), "n = {n}");
    }
}

#[test]
fn m_and_delta_surfaces() {
    for n in 2..=10 {
        let m = build_m(n).unwrap();
        assert!(m.is_orientable());
        assert_eq!(m.face_structure().n_faces(), 1);
        let d = build_delta(n).unwrap();
        assert!(!d.is_orientable());
        assert_eq!(d.euler_characteristic(), 1);
    }
}

// Every dart-transitive one-face map with two or more vertices from a polygon
// of at most ten sides is already one of M_n, delta_n or H(n, a). One-vertex
// maps fall outside: the non-orientable ones of class 2_1 are in no family.
#[test]
fn exhaustive_gluings_lie_in_the_families() {
    let known = family(5);
    let mut found = 0;
    for n in 1..=5 {
        for gl in all_gluings(n) {
            let Ok(m) = glue(&gl) else { continue };
            let fs = m.face_structure();
            if fs.n_vertices() < 2
                || fs.common_valence().is_none()
                || !is_dart_transitive(&fs, &automorphism_group(&m))
            {
                continue;
            }
            found += 1;
            assert!(
                known.iter().any(|k| are_isomorphic(k, &m).is_some()),
                "unknown map from {gl:?}"
            );
        }
    }
    assert!(found > 0);
}
