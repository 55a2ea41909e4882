//! Automorphism groups of maps and their distinguished subgroups.
//!
//! `Aut(M)` acts freely on flags, so an automorphism is pinned down by the
//! image of a single flag. Groups are materialized as element lists indexed
//! by the image of a fixed base flag.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::flagmap::{propagate, FaceStructure, FlagSystem};
use crate::permgroup::{OrbitPartition, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("the rotation subgroup exists only for orientable maps")]
    NonOrientable,
    #[error("faces cannot be 2-coloured with adjacent faces of different colours")]
    NotFaceBipartite,
    #[error("custom element {index} does not commute with the connections")]
    NotAutomorphism { index: usize },
    #[error("custom element list is not closed under composition")]
    NotClosed,
    #[error("custom element list is empty")]
    EmptySubgroup,
}

/// A flag permutation commuting with `r0`, `r1` and `r2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism(Permutation);

impl Automorphism {
    /// Wraps `perm` after checking that it commutes with every connection.
    pub fn new(m: &FlagSystem, perm: Permutation) -> Option<Self> {
        let a = Automorphism(perm);
        a.commutes_with(m).then_some(a)
    }

    pub fn identity(n: usize) -> Self {
        Automorphism(Permutation::identity(n))
    }

    #[inline]
    pub fn apply(&self, flag: usize) -> usize {
        self.0.apply(flag)
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn then(&self, other: &Automorphism) -> Automorphism {
        Automorphism(self.0.then(&other.0))
    }

    pub fn inverse(&self) -> Automorphism {
        Automorphism(self.0.inverse())
    }

    pub fn order(&self) -> usize {
        self.0.order()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn commutes_with(&self, m: &FlagSystem) -> bool {
        self.0.len() == m.n_flags()
            && (0..3).all(|i| {
                (0..m.n_flags()).all(|x| self.apply(m.apply(i, x)) == m.apply(i, self.apply(x)))
            })
    }
}

/// The unique automorphism sending `source` to `target`, if any.
pub fn extend_automorphism(m: &FlagSystem, source: usize, target: usize) -> Option<Automorphism> {
    propagate(m, m, source, target)
        .map(|images| Automorphism(Permutation::from_images(images).expect("bijection")))
}

/// A group of automorphisms, indexed by where each element sends the base flag.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    base_flag: usize,
    elements: Vec<Automorphism>,
    by_image: Vec<Option<usize>>,
}

impl AutGroup {
    fn from_elements(n: usize, base_flag: usize, mut elements: Vec<Automorphism>) -> Self {
        elements.sort_by_key(|g| g.apply(base_flag));
        elements.dedup();
        let mut by_image = vec![None; n];
        for (i, g) in elements.iter().enumerate() {
            by_image[g.apply(base_flag)] = Some(i);
        }
        AutGroup {
            base_flag,
            elements,
            by_image,
        }
    }

    pub fn base_flag(&self) -> usize {
        self.base_flag
    }

    pub fn elements(&self) -> &[Automorphism] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The element sending the base flag to `flag`.
    pub fn element_sending_base_to(&self, flag: usize) -> Option<&Automorphism> {
        self.by_image[flag].map(|i| &self.elements[i])
    }

    /// The element sending `from` to `to`, if the group has one.
    pub fn element_sending(&self, from: usize, to: usize) -> Option<&Automorphism> {
        self.elements.iter().find(|g| g.apply(from) == to)
    }

    pub fn contains(&self, g: &Automorphism) -> bool {
        self.by_image[g.apply(self.base_flag)].is_some_and(|i| &self.elements[i] == g)
    }

    /// Elements whose base image satisfies `keep`.
    fn filtered(&self, keep: impl Fn(usize) -> bool) -> AutGroup {
        let elements = self
            .elements
            .iter()
            .filter(|g| keep(g.apply(self.base_flag)))
            .cloned()
            .collect();
        AutGroup::from_elements(self.by_image.len(), self.base_flag, elements)
    }

    /// True when no non-identity element fixes a flag.
    pub fn acts_freely(&self) -> bool {
        self.elements
            .iter()
            .all(|g| g.is_identity() || g.perm().fixed_points().next().is_none())
    }

    pub fn is_closed(&self) -> bool {
        self.elements
            .iter()
            .all(|g| self.elements.iter().all(|h| self.contains(&g.then(h))))
    }
}

/// `Aut(M)`, from all successful extensions of flag 0.
pub fn automorphism_group(m: &FlagSystem) -> AutGroup {
    let base = 0;
    let elements = (0..m.n_flags())
        .filter_map(|t| extend_automorphism(m, base, t))
        .collect();
    AutGroup::from_elements(m.n_flags(), base, elements)
}

/// Which subgroup of `Aut(M)` to act with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubgroupSpec {
    Full,
    /// `Aut+(M)`, the orientation-preserving elements.
    Rotation,
    /// `Aut#(M)`, the stabilizer of each face colour class.
    FaceBipartite,
    Custom(Vec<Automorphism>),
}

pub fn resolve_subgroup(
    m: &FlagSystem,
    full: &AutGroup,
    spec: &SubgroupSpec,
) -> Result<AutGroup, AutError> {
    match spec {
        SubgroupSpec::Full => Ok(full.clone()),
        SubgroupSpec::Rotation => rotation_subgroup(m, full),
        SubgroupSpec::FaceBipartite => face_bipartite_subgroup(m, full),
        SubgroupSpec::Custom(elements) => {
            if elements.is_empty() {
                return Err(AutError::EmptySubgroup);
            }
            if let Some(index) = elements.iter().position(|g| !g.commutes_with(m)) {
                return Err(AutError::NotAutomorphism { index });
            }
            let group = AutGroup::from_elements(m.n_flags(), full.base_flag, elements.clone());
            if group.is_closed() {
                Ok(group)
            } else {
                Err(AutError::NotClosed)
            }
        }
    }
}

/// Elements sending the base flag to a flag an even connection word away.
pub fn rotation_subgroup(m: &FlagSystem, full: &AutGroup) -> Result<AutGroup, AutError> {
    let color = m.orientation_coloring().ok_or(AutError::NonOrientable)?;
    let base_color = color[full.base_flag];
    Ok(full.filtered(|f| color[f] == base_color))
}

/// Colours faces so that the two faces at each edge side differ; `None` if
/// impossible, including when some face meets itself across an edge.
pub fn face_coloring(m: &FlagSystem, fs: &FaceStructure) -> Option<Vec<u8>> {
    let n_faces = fs.n_faces();
    let mut color = vec![u8::MAX; n_faces];
    color[0] = 0;
    let mut stack = vec![0usize];
    while let Some(face) = stack.pop() {
        for &flag in fs.faces.orbit(face) {
            let other = fs.face_of(m.apply(2, flag));
            if color[other] == u8::MAX {
                color[other] = 1 - color[face];
                stack.push(other);
            } else if color[other] == color[face] {
                return None;
            }
        }
    }
    Some(color)
}

pub fn face_bipartite_subgroup(m: &FlagSystem, full: &AutGroup) -> Result<AutGroup, AutError> {
    let fs = m.face_structure();
    let color = face_coloring(m, &fs).ok_or(AutError::NotFaceBipartite)?;
    let base_color = color[fs.face_of(full.base_flag)];
    Ok(full.filtered(|f| color[fs.face_of(f)] == base_color))
}

pub fn flag_orbits(m: &FlagSystem, g: &AutGroup) -> OrbitPartition {
    OrbitPartition::from_steps(m.n_flags(), g.len(), |x, k| g.elements[k].apply(x))
}

pub fn dart_orbits(fs: &FaceStructure, g: &AutGroup) -> OrbitPartition {
    OrbitPartition::from_steps(fs.n_darts(), g.len(), |d, k| {
        fs.dart_of(g.elements[k].apply(fs.darts.orbit(d)[0]))
    })
}

pub fn is_dart_transitive(fs: &FaceStructure, g: &AutGroup) -> bool {
    dart_orbits(fs, g).len() == 1
}

/// The five dart-transitive classes, or the flag-orbit count otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryClass {
    Reflexible,
    /// Class 2: chiral.
    Chiral2,
    Class2_0,
    /// Half-reflexible.
    Class2_01,
    Class2_1,
    NotDartTransitive(usize),
}

impl SymmetryClass {
    /// The class of the Petrie dual.
    pub fn petrie_swapped(self) -> SymmetryClass {
        match self {
            SymmetryClass::Chiral2 => SymmetryClass::Class2_0,
            SymmetryClass::Class2_0 => SymmetryClass::Chiral2,
            SymmetryClass::Class2_1 => SymmetryClass::Class2_01,
            SymmetryClass::Class2_01 => SymmetryClass::Class2_1,
            other => other,
        }
    }

    pub fn is_dart_transitive(self) -> bool {
        !matches!(self, SymmetryClass::NotDartTransitive(_))
    }

    pub fn tag(self) -> &'static str {
        match self {
            SymmetryClass::Reflexible => "reflexible",
            SymmetryClass::Chiral2 => "2",
            SymmetryClass::Class2_0 => "2_0",
            SymmetryClass::Class2_01 => "2_01",
            SymmetryClass::Class2_1 => "2_1",
            SymmetryClass::NotDartTransitive(_) => "not-dart-transitive",
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymmetryClass::NotDartTransitive(k) => {
                write!(f, "not-dart-transitive ({k} flag orbits)")
            }
            other => f.write_str(other.tag()),
        }
    }
}

/// The class of `m` relative to the group `g`.
pub fn symmetry_class_of(m: &FlagSystem, fs: &FaceStructure, g: &AutGroup) -> SymmetryClass {
    let orbits = flag_orbits(m, g);
    if !is_dart_transitive(fs, g) {
        return SymmetryClass::NotDartTransitive(orbits.len());
    }
    if orbits.len() == 1 {
        return SymmetryClass::Reflexible;
    }
    let base = g.base_flag();
    let same0 = orbits.same_orbit(base, m.apply(0, base));
    let same1 = orbits.same_orbit(base, m.apply(1, base));
    match (same0, same1) {
        (false, false) => SymmetryClass::Chiral2,
        (true, false) => SymmetryClass::Class2_0,
        (false, true) => SymmetryClass::Class2_1,
        (true, true) => SymmetryClass::Class2_01,
    }
}

pub fn symmetry_class(m: &FlagSystem) -> SymmetryClass {
    let fs = m.face_structure();
    symmetry_class_of(m, &fs, &automorphism_group(m))
}
