use flagwalk::fixtures;
use flagwalk::mapfile;
use flagwalk_core::autgroup::{automorphism_group, symmetry_class, SymmetryClass};
use flagwalk_core::walks::{enumerate_consistent_orbits, WalkTag};
use flagwalk_core::Surface;

#[test]
fn embedded_fixtures_match_their_constructors() {
    for name in fixtures::names() {
        let m = fixtures::fixture(name).unwrap();
        assert_eq!(m, fixtures::construct(name).unwrap(), "{name}");
        let text = fixtures::text(name).unwrap();
        assert_eq!(
            mapfile::to_string(&m),
            text,
            "{name} is not in canonical form"
        );
    }
    assert!(matches!(
        fixtures::fixture("nope"),
        Err(fixtures::FixtureError::Unknown(_))
    ));
}

#[test]
fn fixture_files_on_disk_match_the_embedded_copies() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");
    for name in fixtures::names() {
        let disk = std::fs::read_to_string(format!("{dir}/{name}.map")).unwrap();
        assert_eq!(
            fixtures::checksum(&disk),
            fixtures::checksum(fixtures::text(name).unwrap())
        );
    }
}

#[test]
fn dm12_7_is_the_dual() {
    let m = fixtures::fixture("M12_7").unwrap();
    let d = fixtures::fixture("DM12_7").unwrap();
    assert_eq!(d, m.dual());
}

#[test]
fn m12_7_geometry() {
    let m = fixtures::fixture("M12_7").unwrap();
    let s = m.summary();
    assert_eq!((s.vertices, s.edges, s.faces), (4, 12, 2));
    assert_eq!(s.valences, [6]);
    assert_eq!(s.surface, Surface::Orientable { genus: 4 });
    assert_eq!(symmetry_class(&m), SymmetryClass::Reflexible);
}

#[test]
fn cunningham_geometry_and_lines() {
    let m = fixtures::fixture("cunningham").unwrap();
    let s = m.summary();
    assert!(s.orientable);
    assert_eq!((s.vertices, s.edges), (9, 36));
    assert_eq!(s.valences, [8]);
    assert_eq!(symmetry_class(&m), SymmetryClass::Class2_01);

    let fs = m.face_structure();
    let g = automorphism_group(&m);
    let r = enumerate_consistent_orbits(&m, &g).unwrap();
    let line = r.rows.iter().find(|row| row.is_line).unwrap();
    assert_eq!(line.kind.tag, WalkTag::Petrie);
    assert_eq!(line.kind.j, 4);
    // Edge ids 6l..6l+5 are line l.
    let mut lines = std::collections::BTreeSet::new();
    for h in g.elements() {
        let mut es: Vec<usize> = line
            .representative
            .flags
            .iter()
            .map(|&f| fs.edge_of(h.apply(f)))
            .collect();
        es.sort_unstable();
        es.dedup();
        lines.insert(es);
    }
    let want: std::collections::BTreeSet<Vec<usize>> =
        (0..6).map(|l| (6 * l..6 * l + 6).collect()).collect();
    assert_eq!(lines, want);
}
