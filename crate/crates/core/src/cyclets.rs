//! Brute-force enumeration of consistent cyclets on the skeleton, used as an
//! independent check of the walk enumeration.
//!
//! Nothing here calls into [`crate::walks`] apart from the input type of
//! [`walk_to_cyclet`].

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use thiserror::Error;

use crate::autgroup::{extend_automorphism, AutGroup, Automorphism};
use crate::flagmap::{FaceStructure, FlagSystem, Skeleton};
use crate::permgroup::Permutation;
use crate::walks::FlagWalk;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CycletError {
    #[error("the group is not transitive on the darts of the skeleton")]
    NotDartTransitive,
    #[error("the skeleton is not regular")]
    NotRegular,
}

/// A cyclic dart sequence, rotated so the least dart comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DartCyclet {
    pub darts: Vec<usize>,
    pub shunt: Automorphism,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycletOrbit {
    pub representative: DartCyclet,
    pub length: usize,
    /// Number of cyclets in the orbit.
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycletReport {
    pub valence: usize,
    pub orbits: Vec<CycletOrbit>,
}

impl CycletReport {
    /// `q - 1`, the orbit count predicted for a dart-transitive group.
    pub fn expected(&self) -> usize {
        self.valence - 1
    }
}

/// The permutation `g` induces on darts.
pub fn induced_dart_action(fs: &FaceStructure, g: &Automorphism) -> Permutation {
    let images = (0..fs.n_darts())
        .map(|d| fs.dart_of(g.apply(fs.darts.orbit(d)[0])))
        .collect();
    Permutation::from_images(images).expect("automorphisms permute darts")
}

fn sequential(sk: &Skeleton, a: usize, b: usize) -> bool {
    sk.dart(a).terminal == sk.dart(b).initial && sk.dart(a).reverse != b
}

fn canonical(darts: &[usize]) -> Vec<usize> {
    let start = (0..darts.len()).min_by_key(|&i| darts[i]).unwrap_or(0);
    darts[start..]
        .iter()
        .chain(&darts[..start])
        .copied()
        .collect()
}

/// Every cyclet shunted by an element of `g` whose dart order equals the
/// cyclet's length, grouped into `g`-orbits.
pub fn consistent_cyclets(m: &FlagSystem, g: &AutGroup) -> Result<CycletReport, CycletError> {
    let fs = m.face_structure();
    let sk = m.skeleton(&fs);
    let n = sk.len();

    let mut outdeg = BTreeMap::new();
    for d in &sk.darts {
        *outdeg.entry(d.initial).or_insert(0usize) += 1;
    }
    let q = *outdeg.values().next().ok_or(CycletError::NotRegular)?;
    if outdeg.values().any(|&k| k != q) {
        return Err(CycletError::NotRegular);
    }

    let mut actions: Vec<(Permutation, &Automorphism)> = Vec::new();
    let mut seen = BTreeSet::new();
    for a in g.elements() {
        let p = induced_dart_action(&fs, a);
        if seen.insert(p.clone()) {
            actions.push((p, a));
        }
    }

    // dart transitivity of the induced action
    let mut reached = BTreeSet::new();
    reached.insert(0usize);
    for (p, _) in &actions {
        reached.insert(p.apply(0));
    }
    if reached.len() != n {
        return Err(CycletError::NotDartTransitive);
    }

    let mut cyclets: BTreeMap<Vec<usize>, Automorphism> = BTreeMap::new();
    for (p, a) in &actions {
        let order = p.order();
        for start in 0..n {
            let mut darts = alloc::vec![start];
            let mut d = p.apply(start);
            while d != start {
                darts.push(d);
                d = p.apply(d);
            }
            if darts.len() != order {
                continue;
            }
            let closed =
                (0..darts.len()).all(|i| sequential(&sk, darts[i], darts[(i + 1) % darts.len()]));
            if closed {
                cyclets
                    .entry(canonical(&darts))
                    .or_insert_with(|| (*a).clone());
            }
        }
    }

    let mut orbit_of: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut orbits = Vec::new();
    for (darts, shunt) in &cyclets {
        if orbit_of.contains_key(darts) {
            continue;
        }
        let id = orbits.len();
        let mut size = 0;
        for (p, _) in &actions {
            let image: Vec<usize> = darts.iter().map(|&d| p.apply(d)).collect();
            if orbit_of.insert(canonical(&image), id).is_none() {
                size += 1;
            }
        }
        orbits.push(CycletOrbit {
            representative: DartCyclet {
                darts: darts.clone(),
                shunt: shunt.clone(),
            },
            length: darts.len(),
            size,
        });
    }
    Ok(CycletReport { valence: q, orbits })
}

/// The dart sequence of `w` reduced to its primitive period, if consecutive
/// darts are sequential.
pub fn walk_to_cyclet(m: &FlagSystem, fs: &FaceStructure, w: &FlagWalk) -> Option<DartCyclet> {
    let sk = m.skeleton(fs);
    let darts: Vec<usize> = w.flags.iter().map(|&f| fs.dart_of(f)).collect();
    let len = darts.len();
    if !(0..len).all(|i| sequential(&sk, darts[i], darts[(i + 1) % len])) {
        return None;
    }
    let period = (1..=len)
        .find(|&p| len.is_multiple_of(p) && (0..len).all(|i| darts[i] == darts[(i + p) % len]))
        .unwrap_or(len);
    let shunt = match &w.shunt {
        Some(s) => s.clone(),
        None => extend_automorphism(m, w.base, w.flags[1 % len])?,
    };
    Some(DartCyclet {
        darts: canonical(&darts[..period]),
        shunt,
    })
}

/// Index of the orbit in `report` containing `c`.
pub fn orbit_index(
    report: &CycletReport,
    g: &AutGroup,
    fs: &FaceStructure,
    c: &DartCyclet,
) -> Option<usize> {
    let target: BTreeSet<Vec<usize>> = g
        .elements()
        .iter()
        .map(|a| {
            let p = induced_dart_action(fs, a);
            canonical(&c.darts.iter().map(|&d| p.apply(d)).collect::<Vec<_>>())
        })
        .collect();
    report
        .orbits
        .iter()
        .position(|o| target.contains(&o.representative.darts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::autgroup::automorphism_group;
    use crate::families::tetrahedron;

    #[test]
    fn identity_acts_trivially() {
        let m = tetrahedron();
        let fs = m.face_structure();
        let id = Automorphism::identity(m.n_flags());
        assert!(induced_dart_action(&fs, &id).is_identity());
    }

    #[test]
    fn tetrahedron_has_two_orbits() {
        let m = tetrahedron();
        let r = consistent_cyclets(&m, &automorphism_group(&m)).unwrap();
        assert_eq!(r.orbits.len(), 2);
        let mut lengths: Vec<usize> = r.orbits.iter().map(|o| o.length).collect();
        lengths.sort_unstable();
        assert_eq!(lengths, [3, 4]);
    }

    #[test]
    fn canonical_rotation() {
        assert_eq!(canonical(&[5, 2, 7]), [2, 7, 5]);
    }
}
