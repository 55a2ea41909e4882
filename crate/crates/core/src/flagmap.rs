//! Maps as flag systems `(F, r0, r1, r2)`.
//!
//! A [`FlagSystem`] holds three connection involutions on the flags. Vertices,
//! edges and faces are the orbits of `<r1, r2>`, `<r0, r2>` and `<r0, r1>`;
//! darts are the orbits of `<r2>`. Every derived id (vertex, edge, face, dart)
//! is the index of its orbit when orbits are ordered by least flag.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::permgroup::{OrbitPartition, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("flag system violates the map axioms: {0}")]
    Invalid(ValidationReport),
    #[error("edge {edge} is not incident to vertex {vertex}")]
    NotIncident { vertex: usize, edge: usize },
    #[error("{what} {id} out of range")]
    OutOfRange { what: &'static str, id: usize },
}

/// One violated axiom, with a witness flag where one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Empty,
    SizeMismatch {
        connection: u8,
        len: usize,
        expected: usize,
    },
    NotInvolution {
        connection: u8,
        flag: usize,
    },
    FixedPoint {
        connection: u8,
        flag: usize,
    },
    /// `(r0 r2)^2` moves `flag`.
    R0R2NotInvolution {
        flag: usize,
    },
    /// `flag^{r_first} = flag^{r_second}`.
    NotDistinct {
        first: u8,
        second: u8,
        flag: usize,
    },
    /// `flag` is unreachable from flag 0.
    NotTransitive {
        flag: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "no flags"),
            Violation::SizeMismatch {
                connection,
                len,
                expected,
            } => write!(f, "r{connection} has {len} images, expected {expected}"),
            Violation::NotInvolution { connection, flag } => {
                write!(f, "r{connection} is not an involution at flag {flag}")
            }
            Violation::FixedPoint { connection, flag } => {
                write!(f, "r{connection} fixes flag {flag}")
            }
            Violation::R0R2NotInvolution { flag } => {
                write!(f, "(r0 r2)^2 moves flag {flag}")
            }
            Violation::NotDistinct {
                first,
                second,
                flag,
            } => write!(f, "r{first} and r{second} agree on flag {flag}"),
            Violation::NotTransitive { flag } => {
                write!(f, "flag {flag} is not reachable from flag 0")
            }
        }
    }
}

/// All axiom violations of a candidate flag system.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for (i, v) in self.violations.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// A map `(F, r0, r1, r2)` with an optional label.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FlagSystem {
    conn: [Permutation; 3],
    name: Option<String>,
}

impl fmt::Debug for FlagSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagSystem")
            .field("name", &self.name)
            .field("flags", &self.n_flags())
            .field("r0", &self.conn[0])
            .field("r1", &self.conn[1])
            .field("r2", &self.conn[2])
            .finish()
    }
}

impl FlagSystem {
    /// Validates the axioms and returns the map, or the full violation report.
    pub fn new(r0: Permutation, r1: Permutation, r2: Permutation) -> Result<Self, MapError> {
        let m = Self::new_unchecked(r0, r1, r2);
        let report = m.validate();
        if report.is_valid() {
            Ok(m)
        } else {
            Err(MapError::Invalid(report))
        }
    }

    /// Wraps the connections without checking the map axioms. Everything
    /// except [`FlagSystem::validate`] assumes a valid map.
    pub fn new_unchecked(r0: Permutation, r1: Permutation, r2: Permutation) -> Self {
        FlagSystem {
            conn: [r0, r1, r2],
            name: None,
        }
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    #[inline]
    pub fn n_flags(&self) -> usize {
        self.conn[0].len()
    }

    /// The connection `r_i`.
    #[inline]
    pub fn r(&self, i: usize) -> &Permutation {
        &self.conn[i]
    }

    #[inline]
    pub fn apply(&self, i: usize, flag: usize) -> usize {
        self.conn[i].apply(flag)
    }

    /// Image of `flag` under the word `r_{w0} r_{w1} ...`, applied left to right.
    pub fn apply_word(&self, flag: usize, word: &[usize]) -> usize {
        word.iter().fold(flag, |x, &i| self.conn[i].apply(x))
    }

    /// The permutation `r_{w0} r_{w1} ...`.
    pub fn word(&self, word: &[usize]) -> Permutation {
        word.iter()
            .fold(Permutation::identity(self.n_flags()), |p, &i| {
                p.then(&self.conn[i])
            })
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let n = self.n_flags();
        if n == 0 {
            violations.push(Violation::Empty);
        }
        for (i, r) in self.conn.iter().enumerate() {
            if r.len() != n {
                violations.push(Violation::SizeMismatch {
                    connection: i as u8,
                    len: r.len(),
                    expected: n,
                });
            }
        }
        if !violations.is_empty() {
            return ValidationReport { violations };
        }
        for (i, r) in self.conn.iter().enumerate() {
            if let Some(flag) = (0..n).find(|&x| r.apply(r.apply(x)) != x) {
                violations.push(Violation::NotInvolution {
                    connection: i as u8,
                    flag,
                });
            }
            if let Some(flag) = r.fixed_points().next() {
                violations.push(Violation::FixedPoint {
                    connection: i as u8,
                    flag,
                });
            }
        }
        let r0r2 = |x: usize| self.apply(2, self.apply(0, x));
        if let Some(flag) = (0..n).find(|&x| r0r2(r0r2(x)) != x) {
            violations.push(Violation::R0R2NotInvolution { flag });
        }
        for (first, second) in [(0u8, 1u8), (0, 2), (1, 2)] {
            if let Some(flag) =
                (0..n).find(|&x| self.apply(first as usize, x) == self.apply(second as usize, x))
            {
                violations.push(Violation::NotDistinct {
                    first,
                    second,
                    flag,
                });
            }
        }
        let components = self.orbits_of(&[0, 1, 2]);
        if components.len() > 1 {
            violations.push(Violation::NotTransitive {
                flag: components.orbit(1)[0],
            });
        }
        ValidationReport { violations }
    }

    /// Orbits of the subgroup generated by the listed connections.
    pub fn orbits_of(&self, connections: &[usize]) -> OrbitPartition {
        OrbitPartition::from_steps(self.n_flags(), connections.len(), |x, k| {
            self.conn[connections[k]].apply(x)
        })
    }

    pub fn face_structure(&self) -> FaceStructure {
        FaceStructure {
            vertices: self.orbits_of(&[1, 2]),
            edges: self.orbits_of(&[0, 2]),
            faces: self.orbits_of(&[0, 1]),
            darts: self.orbits_of(&[2]),
        }
    }

    pub fn skeleton(&self, fs: &FaceStructure) -> Skeleton {
        let darts = fs
            .darts
            .orbits()
            .iter()
            .map(|flags| {
                let f = flags[0];
                SkeletonDart {
                    initial: fs.vertex_of(f),
                    terminal: fs.vertex_of(self.apply(0, f)),
                    reverse: fs.dart_of(self.apply(0, f)),
                    edge: fs.edge_of(f),
                }
            })
            .collect();
        Skeleton { darts }
    }

    /// A 2-colouring of the flags in which every connection swaps colours, if
    /// one exists (colour of flag 0 is 0).
    pub fn orientation_coloring(&self) -> Option<Vec<u8>> {
        let n = self.n_flags();
        let mut color = vec![u8::MAX; n];
        let mut queue = VecDeque::new();
        color[0] = 0;
        queue.push_back(0);
        while let Some(x) = queue.pop_front() {
            for r in &self.conn {
                let y = r.apply(x);
                if color[y] == u8::MAX {
                    color[y] = 1 - color[x];
                    queue.push_back(y);
                } else if color[y] == color[x] {
                    return None;
                }
            }
        }
        Some(color)
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation_coloring().is_some()
    }

    pub fn euler_characteristic(&self) -> i64 {
        let fs = self.face_structure();
        fs.n_vertices() as i64 - fs.n_edges() as i64 + fs.n_faces() as i64
    }

    pub fn surface(&self) -> Surface {
        let chi = self.euler_characteristic();
        if self.is_orientable() {
            Surface::Orientable {
                genus: ((2 - chi) / 2) as u64,
            }
        } else {
            Surface::NonOrientable {
                crosscaps: (2 - chi) as u64,
            }
        }
    }

    /// Darts at vertex `v` in rotational order, starting from the dart of the
    /// least flag of `v` and stepping by `r1 r2`.
    pub fn rotation_at(&self, fs: &FaceStructure, v: usize) -> Vec<usize> {
        let start = fs.vertices.orbit(v)[0];
        let mut darts = Vec::new();
        let mut f = start;
        loop {
            darts.push(fs.dart_of(f));
            f = self.apply(2, self.apply(1, f));
            if f == start {
                break;
            }
        }
        darts
    }

    /// All `d` in `1..q` for which `e` and `e2` subtend `d` faces at `v`.
    pub fn subtend(
        &self,
        fs: &FaceStructure,
        v: usize,
        e: usize,
        e2: usize,
    ) -> Result<BTreeSet<usize>, MapError> {
        if v >= fs.n_vertices() {
            return Err(MapError::OutOfRange {
                what: "vertex",
                id: v,
            });
        }
        for edge in [e, e2] {
            if edge >= fs.n_edges() {
                return Err(MapError::OutOfRange {
                    what: "edge",
                    id: edge,
                });
            }
            if !fs.edges.orbit(edge).iter().any(|&f| fs.vertex_of(f) == v) {
                return Err(MapError::NotIncident { vertex: v, edge });
            }
        }
        let q = fs.valence(v);
        let mut result = BTreeSet::new();
        for &flag in fs.edges.orbit(e) {
            if fs.vertex_of(flag) != v {
                continue;
            }
            // walk (r1 r2)^d and (r1 r2)^{d-1} r1 together
            let mut f = flag;
            for d in 1..q {
                let half = self.apply(1, f);
                f = self.apply(2, half);
                if fs.edge_of(f) == e2 || fs.edge_of(half) == e2 {
                    result.insert(d);
                }
            }
        }
        Ok(result)
    }

    /// `(F, r2, r1, r0)`.
    pub fn dual(&self) -> FlagSystem {
        FlagSystem {
            conn: [
                self.conn[2].clone(),
                self.conn[1].clone(),
                self.conn[0].clone(),
            ],
            name: toggle_name("D", self.name.as_deref()),
        }
    }

    /// `(F, r0 r2, r1, r2)`.
    pub fn petrie(&self) -> FlagSystem {
        FlagSystem {
            conn: [
                self.conn[0].then(&self.conn[2]),
                self.conn[1].clone(),
                self.conn[2].clone(),
            ],
            name: toggle_name("P", self.name.as_deref()),
        }
    }

    /// Vertex, edge and face counts with valence statistics.
    pub fn summary(&self) -> MapSummary {
        let fs = self.face_structure();
        let valences: BTreeSet<usize> = (0..fs.n_vertices()).map(|v| fs.valence(v)).collect();
        MapSummary {
            flags: self.n_flags(),
            vertices: fs.n_vertices(),
            edges: fs.n_edges(),
            faces: fs.n_faces(),
            euler_characteristic: self.euler_characteristic(),
            orientable: self.is_orientable(),
            surface: self.surface(),
            valences: valences.into_iter().collect(),
        }
    }
}

/// Operator names toggle, so `D(D(m))` carries the name of `m`.
fn toggle_name(op: &str, name: Option<&str>) -> Option<String> {
    let name = name?;
    let inner = name
        .strip_prefix(op)
        .and_then(|s| s.strip_prefix('('))
        .and_then(|s| s.strip_suffix(')'));
    match inner {
        Some(inner) if balanced(inner) => Some(String::from(inner)),
        _ => Some(format!("{op}({name})")),
    }
}

fn balanced(s: &str) -> bool {
    let mut depth = 0i32;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return false;
                }
            }
            _ => {}
        }
    }
    depth == 0
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Surface {
    Orientable { genus: u64 },
    NonOrientable { crosscaps: u64 },
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Surface::Orientable { genus } => write!(f, "orientable, genus {genus}"),
            Surface::NonOrientable { crosscaps } => {
                write!(f, "non-orientable, {crosscaps} crosscaps")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MapSummary {
    pub flags: usize,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub euler_characteristic: i64,
    pub orientable: bool,
    pub surface: Surface,
    /// Distinct vertex valences, ascending.
    pub valences: Vec<usize>,
}

/// Vertices, edges, faces and darts of a map as orbit partitions of its flags.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaceStructure {
    pub vertices: OrbitPartition,
    pub edges: OrbitPartition,
    pub faces: OrbitPartition,
    pub darts: OrbitPartition,
}

impl FaceStructure {
    #[inline]
    pub fn vertex_of(&self, flag: usize) -> usize {
        self.vertices.orbit_of(flag)
    }
    #[inline]
    pub fn edge_of(&self, flag: usize) -> usize {
        self.edges.orbit_of(flag)
    }
    #[inline]
    pub fn face_of(&self, flag: usize) -> usize {
        self.faces.orbit_of(flag)
    }
    #[inline]
    pub fn dart_of(&self, flag: usize) -> usize {
        self.darts.orbit_of(flag)
    }
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }
    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }
    pub fn n_faces(&self) -> usize {
        self.faces.len()
    }
    pub fn n_darts(&self) -> usize {
        self.darts.len()
    }
    /// Number of darts at `v`, i.e. half its flags.
    pub fn valence(&self, v: usize) -> usize {
        self.vertices.orbit(v).len() / 2
    }
    /// The common valence `q`, when all vertices agree.
    pub fn common_valence(&self) -> Option<usize> {
        let q = self.valence(0);
        (1..self.n_vertices())
            .all(|v| self.valence(v) == q)
            .then_some(q)
    }
    /// The two end vertices of edge `e` (equal for a loop), least first.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let mut ends: Vec<usize> = self
            .edges
            .orbit(e)
            .iter()
            .map(|&f| self.vertex_of(f))
            .collect();
        ends.sort_unstable();
        (ends[0], ends[ends.len() - 1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkeletonDart {
    pub initial: usize,
    pub terminal: usize,
    pub reverse: usize,
    pub edge: usize,
}

/// The underlying pseudograph of a map, by darts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub darts: Vec<SkeletonDart>,
}

impl Skeleton {
    pub fn len(&self) -> usize {
        self.darts.len()
    }
    pub fn is_empty(&self) -> bool {
        self.darts.is_empty()
    }
    pub fn dart(&self, d: usize) -> &SkeletonDart {
        &self.darts[d]
    }
}

/// Extends `from -> to` to a map from the flags of `src` to those of `dst`
/// that intertwines the connections. `None` when propagation hits a conflict
/// or the result is not a bijection.
pub(crate) fn propagate(
    src: &FlagSystem,
    dst: &FlagSystem,
    from: usize,
    to: usize,
) -> Option<Vec<usize>> {
    let n = src.n_flags();
    if dst.n_flags() != n {
        return None;
    }
    const UNSET: usize = usize::MAX;
    let mut image = vec![UNSET; n];
    let mut hit = vec![false; n];
    image[from] = to;
    hit[to] = true;
    let mut queue = VecDeque::new();
    queue.push_back(from);
    let mut mapped = 1;
    while let Some(x) = queue.pop_front() {
        for i in 0..3 {
            let y = src.apply(i, x);
            let y_img = dst.apply(i, image[x]);
            if image[y] == UNSET {
                if hit[y_img] {
                    return None;
                }
                image[y] = y_img;
                hit[y_img] = true;
                mapped += 1;
                queue.push_back(y);
            } else if image[y] != y_img {
                return None;
            }
        }
    }
    (mapped == n).then_some(image)
}

/// A flag bijection `phi` from `a` to `b` with `phi(x^{r_i}) = phi(x)^{r_i}`,
/// found by anchoring flag 0 of `a` at each flag of `b` in turn.
pub fn are_isomorphic(a: &FlagSystem, b: &FlagSystem) -> Option<Permutation> {
    if a.n_flags() != b.n_flags() || a.n_flags() == 0 {
        return None;
    }
    (0..b.n_flags())
        .find_map(|t| propagate(a, b, 0, t))
        .map(|images| Permutation::from_images(images).expect("propagation yields a bijection"))
}
