mod common;

use common::named_maps;
use flagwalk_core::autgroup::{automorphism_group, is_dart_transitive};
use flagwalk_core::cyclets::{
    consistent_cyclets, induced_dart_action, orbit_index, walk_to_cyclet,
};
use flagwalk_core::walks::enumerate_consistent_orbits;

#[test]
fn dart_action_is_a_homomorphism() {
    for m in named_maps().into_iter().take(8) {
        let fs = m.face_structure();
        let g = automorphism_group(&m);
        for a in g.elements() {
            for b in g.elements().iter().step_by(3) {
                assert_eq!(
                    induced_dart_action(&fs, &a.then(b)),
                    induced_dart_action(&fs, a).then(&induced_dart_action(&fs, b))
                );
            }
        }
    }
}

// Every walk row lands in a cyclet orbit, and each cyclet orbit is hit by
// exactly the two rows of a partner pair.
#[test]
fn walk_rows_cover_cyclet_orbits_twice() {
    for m in named_maps() {
        let fs = m.face_structure();
        if fs.common_valence().is_none() || fs.n_vertices() < 2 {
            continue;
        }
        let g = automorphism_group(&m);
        if !is_dart_transitive(&fs, &g) {
            continue;
        }
        let report = consistent_cyclets(&m, &g).unwrap();
        assert_eq!(report.orbits.len(), report.expected(), "{:?}", m.name());
        let rows = enumerate_consistent_orbits(&m, &g).unwrap();
        let mut hits = vec![0; report.orbits.len()];
        for row in &rows.rows {
            let c = walk_to_cyclet(&m, &fs, &row.representative).expect("walks give cyclets");
            let i = orbit_index(&report, &g, &fs, &c).expect("cyclet is consistent");
            hits[i] += 1;
        }
        assert!(hits.iter().all(|&h| h == 2), "{:?}: {hits:?}", m.name());
    }
}
