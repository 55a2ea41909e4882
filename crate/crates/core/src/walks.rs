//! Flag `j`-holes and `j`-Petrie paths, their consistency under a group of
//! automorphisms, and the orbit enumeration of consistent walks.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::autgroup::{
    extend_automorphism, flag_orbits, is_dart_transitive, AutGroup, Automorphism,
};
use crate::flagmap::{FaceStructure, FlagSystem};
use crate::permgroup::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("map is not equivelar (vertex valences differ)")]
    NonEquivelar,
    #[error("j = {j} is outside 1..{q}")]
    JOutOfRange { j: usize, q: usize },
    #[error("flag {0} is out of range")]
    FlagOutOfRange(usize),
    #[error("the group is not dart-transitive")]
    NotDartTransitive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WalkTag {
    Hole,
    Petrie,
}

impl WalkTag {
    pub fn other(self) -> WalkTag {
        match self {
            WalkTag::Hole => WalkTag::Petrie,
            WalkTag::Petrie => WalkTag::Hole,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WalkTag::Hole => "hole",
            WalkTag::Petrie => "petrie",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WalkKind {
    pub tag: WalkTag,
    pub j: usize,
}

impl WalkKind {
    pub fn hole(j: usize) -> Self {
        WalkKind {
            tag: WalkTag::Hole,
            j,
        }
    }

    pub fn petrie(j: usize) -> Self {
        WalkKind {
            tag: WalkTag::Petrie,
            j,
        }
    }
}

impl fmt::Display for WalkKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.j, self.tag.as_str())
    }
}

/// The common valence `q`, or an error when valences differ.
pub fn common_valence(fs: &FaceStructure) -> Result<usize, WalkError> {
    fs.common_valence().ok_or(WalkError::NonEquivelar)
}

fn check_j(q: usize, j: usize) -> Result<(), WalkError> {
    if j == 0 || j >= q {
        Err(WalkError::JOutOfRange { j, q })
    } else {
        Ok(())
    }
}

/// `alpha_j = r0 r1 (r2 r1)^(j-1)`, read left to right.
pub fn hole_permutation(m: &FlagSystem, j: usize) -> Result<Permutation, WalkError> {
    let q = common_valence(&m.face_structure())?;
    check_j(q, j)?;
    let mut word = alloc::vec![0, 1];
    for _ in 1..j {
        word.extend_from_slice(&[2, 1]);
    }
    Ok(m.word(&word))
}

/// `beta_j = r0 (r2 r1)^j`.
pub fn petrie_permutation(m: &FlagSystem, j: usize) -> Result<Permutation, WalkError> {
    let q = common_valence(&m.face_structure())?;
    check_j(q, j)?;
    let mut word = alloc::vec![0];
    for _ in 0..j {
        word.extend_from_slice(&[2, 1]);
    }
    Ok(m.word(&word))
}

pub fn walk_permutation(m: &FlagSystem, kind: WalkKind) -> Result<Permutation, WalkError> {
    match kind.tag {
        WalkTag::Hole => hole_permutation(m, kind.j),
        WalkTag::Petrie => petrie_permutation(m, kind.j),
    }
}

/// One step of the walk generator from `flag`, without building the
/// permutation.
fn step(m: &FlagSystem, kind: WalkKind, flag: usize) -> usize {
    let mut x = m.apply(0, flag);
    let turns = match kind.tag {
        WalkTag::Hole => {
            x = m.apply(1, x);
            kind.j - 1
        }
        WalkTag::Petrie => kind.j,
    };
    for _ in 0..turns {
        x = m.apply(1, m.apply(2, x));
    }
    x
}

/// A closed flag-walk `flags[0] = base`, `flags[i + 1] = flags[i]^gamma`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlagWalk {
    pub base: usize,
    pub kind: WalkKind,
    pub flags: Vec<usize>,
    pub shunt: Option<Automorphism>,
}

impl FlagWalk {
    pub fn len(&self) -> usize {
        self.flags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flags.is_empty()
    }

    pub fn edges(&self, fs: &FaceStructure) -> Vec<usize> {
        self.flags.iter().map(|&f| fs.edge_of(f)).collect()
    }

    pub fn vertices(&self, fs: &FaceStructure) -> Vec<usize> {
        self.flags.iter().map(|&f| fs.vertex_of(f)).collect()
    }

    pub fn darts(&self, fs: &FaceStructure) -> Vec<usize> {
        self.flags.iter().map(|&f| fs.dart_of(f)).collect()
    }

    pub fn edge_set(&self, fs: &FaceStructure) -> BTreeSet<usize> {
        self.flags.iter().map(|&f| fs.edge_of(f)).collect()
    }

    /// `r2` applied to every flag; a `(q - j)`-walk of the same kind.
    pub fn partner(&self, m: &FlagSystem, q: usize) -> FlagWalk {
        let flags: Vec<usize> = self.flags.iter().map(|&f| m.apply(2, f)).collect();
        FlagWalk {
            base: flags[0],
            kind: WalkKind {
                tag: self.kind.tag,
                j: q - self.kind.j,
            },
            flags,
            shunt: None,
        }
    }

    /// `(Phi_{k-1}^0, ..., Phi_0^0)` for holes, `(Phi_{k-1}^{02}, ...)` for
    /// Petrie paths.
    pub fn reverse(&self, m: &FlagSystem) -> FlagWalk {
        let flip = |f: usize| match self.kind.tag {
            WalkTag::Hole => m.apply(0, f),
            WalkTag::Petrie => m.apply(2, m.apply(0, f)),
        };
        let flags: Vec<usize> = self.flags.iter().rev().map(|&f| flip(f)).collect();
        FlagWalk {
            base: flags[0],
            kind: self.kind,
            flags,
            shunt: None,
        }
    }
}

/// The walk of the given kind through `base`; its length is the length of
/// the generator's cycle through `base`.
pub fn walk_at(m: &FlagSystem, base: usize, kind: WalkKind) -> Result<FlagWalk, WalkError> {
    let q = common_valence(&m.face_structure())?;
    walk_at_q(m, q, base, kind)
}

pub(crate) fn walk_at_q(
    m: &FlagSystem,
    q: usize,
    base: usize,
    kind: WalkKind,
) -> Result<FlagWalk, WalkError> {
    check_j(q, kind.j)?;
    if base >= m.n_flags() {
        return Err(WalkError::FlagOutOfRange(base));
    }
    let mut flags = alloc::vec![base];
    let mut x = step(m, kind, base);
    while x != base {
        flags.push(x);
        x = step(m, kind, x);
    }
    Ok(FlagWalk {
        base,
        kind,
        flags,
        shunt: None,
    })
}

/// The shunt of `w` in `g`: the automorphism sending the base flag one step
/// along the walk, if it lies in `g`.
pub fn consistency(m: &FlagSystem, w: &FlagWalk, g: &AutGroup) -> Option<Automorphism> {
    let next = w.flags[1 % w.len()];
    let shunt = extend_automorphism(m, w.base, next)?;
    (g.contains(&shunt) && shunt.order() == w.len()).then_some(shunt)
}

/// Is `flag` in `w` with every rotation of `w` considered?
fn cyclic_contains(w: &FlagWalk, flag: usize) -> bool {
    w.flags.contains(&flag)
}

/// Some element of `g` carries the flag sequence of `w` onto that of its
/// reverse. Automorphisms commute with the generator, so it is enough that
/// the base lands anywhere on the reverse.
pub fn is_symmetric_walk(m: &FlagSystem, w: &FlagWalk, g: &AutGroup) -> bool {
    let rev = w.reverse(m);
    g.elements()
        .iter()
        .any(|h| cyclic_contains(&rev, h.apply(w.base)))
}

/// Weaker test on the induced dart sequence: some element of `g` carries it
/// onto the reversed sequence of reversed darts.
pub fn is_dart_symmetric_walk(
    m: &FlagSystem,
    fs: &FaceStructure,
    w: &FlagWalk,
    g: &AutGroup,
) -> bool {
    let reversed: Vec<usize> = w
        .flags
        .iter()
        .rev()
        .map(|&f| fs.dart_of(m.apply(0, f)))
        .collect();
    g.elements().iter().any(|h| {
        let image: Vec<usize> = w.flags.iter().map(|&f| fs.dart_of(h.apply(f))).collect();
        is_rotation_of(&image, &reversed)
    })
}

pub(crate) fn is_rotation_of(a: &[usize], b: &[usize]) -> bool {
    a.len() == b.len()
        && (a.is_empty()
            || (0..b.len()).any(|s| (0..a.len()).all(|i| a[i] == b[(i + s) % b.len()])))
}

/// `q` even, `j = q/2`, and the hole and Petrie path through the base cover
/// the same edges.
pub fn is_line(m: &FlagSystem, fs: &FaceStructure, w: &FlagWalk) -> bool {
    let Some(q) = fs.common_valence() else {
        return false;
    };
    if q % 2 == 1 || w.kind.j * 2 != q {
        return false;
    }
    let hole = walk_at_q(m, q, w.base, WalkKind::hole(w.kind.j));
    let petrie = walk_at_q(m, q, w.base, WalkKind::petrie(w.kind.j));
    match (hole, petrie) {
        (Ok(h), Ok(p)) => h.edge_set(fs) == p.edge_set(fs),
        _ => false,
    }
}

/// One orbit of consistent walks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkOrbitRow {
    pub flag_orbit: usize,
    pub kind: WalkKind,
    pub length: usize,
    /// Order of the generator over all flags; differs from `length` only
    /// when its cycles have unequal lengths.
    pub gamma_order: usize,
    pub symmetric: bool,
    pub dart_symmetric: bool,
    pub is_line: bool,
    pub representative: FlagWalk,
    /// Number of flag-walks in the orbit, `|G| / length`.
    pub orbit_size: usize,
    /// Number of distinct edge sets among them.
    pub edge_sets: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkOrbitReport {
    pub valence: usize,
    pub group_order: usize,
    pub flag_orbits: usize,
    pub rows: Vec<WalkOrbitRow>,
}

impl WalkOrbitReport {
    /// The count the classification theorem predicts, `2(q - 1)`.
    pub fn expected_rows(&self) -> usize {
        2 * (self.valence - 1)
    }

    pub fn row(&self, flag_orbit: usize, kind: WalkKind) -> Option<&WalkOrbitRow> {
        self.rows
            .iter()
            .find(|r| r.flag_orbit == flag_orbit && r.kind == kind)
    }
}

/// All orbits of `g`-consistent walks, one row per (flag orbit, kind) whose
/// walk through the orbit's least flag is consistent.
pub fn enumerate_consistent_orbits(
    m: &FlagSystem,
    g: &AutGroup,
) -> Result<WalkOrbitReport, WalkError> {
    let fs = m.face_structure();
    let q = common_valence(&fs)?;
    if !is_dart_transitive(&fs, g) {
        return Err(WalkError::NotDartTransitive);
    }
    let orbits = flag_orbits(m, g);
    let mut rows = Vec::new();
    for (orbit_id, orbit) in orbits.orbits().iter().enumerate() {
        let rep = orbit[0];
        for tag in [WalkTag::Hole, WalkTag::Petrie] {
            for j in 1..q {
                let kind = WalkKind { tag, j };
                let mut w = walk_at_q(m, q, rep, kind)?;
                let Some(shunt) = consistency(m, &w, g) else {
                    continue;
                };
                w.shunt = Some(shunt);
                let gamma_order = walk_permutation(m, kind)?.order();
                let edge_set = w.edge_set(&fs);
                let edge_sets: BTreeSet<BTreeSet<usize>> = g
                    .elements()
                    .iter()
                    .map(|h| {
                        w.flags
                            .iter()
                            .map(|&f| fs.edge_of(h.apply(f)))
                            .collect::<BTreeSet<usize>>()
                    })
                    .collect();
                debug_assert!(edge_sets.contains(&edge_set));
                rows.push(WalkOrbitRow {
                    flag_orbit: orbit_id,
                    kind,
                    length: w.len(),
                    gamma_order,
                    symmetric: is_symmetric_walk(m, &w, g),
                    dart_symmetric: is_dart_symmetric_walk(m, &fs, &w, g),
                    is_line: is_line(m, &fs, &w),
                    orbit_size: g.len() / w.len(),
                    edge_sets: edge_sets.len(),
                    representative: w,
                });
            }
        }
    }
    rows.sort_by_key(|r| (r.flag_orbit, r.kind.j, r.kind.tag));
    Ok(WalkOrbitReport {
        valence: q,
        group_order: g.len(),
        flag_orbits: orbits.len(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::automorphism_group;
    use crate::families::{m12_7, tetrahedron};

    #[test]
    fn one_step_words() {
        let m = tetrahedron();
        assert_eq!(hole_permutation(&m, 1).unwrap(), m.word(&[0, 1]));
        assert_eq!(petrie_permutation(&m, 1).unwrap(), m.word(&[0, 2, 1]));
        assert!(matches!(
            hole_permutation(&m, 3),
            Err(WalkError::JOutOfRange { j: 3, q: 3 })
        ));
    }

    #[test]
    fn face_is_one_hole() {
        let m = tetrahedron();
        let fs = m.face_structure();
        let w = walk_at(&m, 0, WalkKind::hole(1)).unwrap();
        assert_eq!(w.len(), 3);
        let face = fs.face_of(0);
        assert!(w.flags.iter().all(|&f| fs.face_of(f) == face));
    }

    #[test]
    fn partner_and_reverse_are_involutions() {
        let m = m12_7();
        for kind in [WalkKind::hole(2), WalkKind::petrie(5)] {
            let w = walk_at(&m, 3, kind).unwrap();
            assert_eq!(w.partner(&m, 6).partner(&m, 6), w);
            assert_eq!(w.reverse(&m).reverse(&m), w);
            assert_eq!(w.partner(&m, 6).kind.j, 6 - kind.j);
        }
    }

    #[test]
    fn identity_group_has_no_consistent_long_walks() {
        let m = tetrahedron();
        let g = automorphism_group(&m);
        let trivial = crate::autgroup::resolve_subgroup(
            &m,
            &g,
            &crate::autgroup::SubgroupSpec::Custom(alloc::vec![Automorphism::identity(
                m.n_flags()
            )]),
        )
        .unwrap();
        let w = walk_at(&m, 0, WalkKind::hole(1)).unwrap();
        assert!(consistency(&m, &w, &g).is_some());
        assert!(consistency(&m, &w, &trivial).is_none());
        assert!(matches!(
            enumerate_consistent_orbits(&m, &trivial),
            Err(WalkError::NotDartTransitive)
        ));
    }

    #[test]
    fn rotation_check() {
        assert!(is_rotation_of(&[1, 2, 3], &[3, 1, 2]));
        assert!(!is_rotation_of(&[1, 2, 3], &[3, 2, 1]));
        assert!(is_rotation_of(&[], &[]));
    }
}
