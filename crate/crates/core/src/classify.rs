//! Structural types of the edge set of a consistent walk: cycle, bead,
//! bracelet and twining.
//!
//! The four predicates are direct tests on the edge set and the map; the case
//! analysis of the classification proof is computed separately by [`trace`]
//! so the two can be checked against each other.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::autgroup::AutGroup;
use crate::flagmap::{FaceStructure, FlagSystem};
use crate::walks::{is_line, FlagWalk, WalkKind, WalkTag};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("consistent {kind} at flag {base} on a map with {vertices} vertices has no type (edges {edges:?})")]
    TheoremViolation {
        kind: WalkKind,
        base: usize,
        vertices: usize,
        edges: Vec<usize>,
    },
}

/// Where `Phi_l` lies relative to `Phi = Phi_0`, `l` the number of distinct
/// edges, with connections read in the walk's hole frame (for a Petrie path,
/// `r0` stands for `r0 r2`, since the path is a hole of the Petrie dual).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProofCase {
    /// `Phi_l = Phi`.
    Circuit,
    /// `Phi_l = Phi^{02}`.
    HalfTurn,
    /// `Phi_l = Phi^2`.
    Partner,
    /// `Phi_l = Phi^0`; excluded by the theorem.
    Flip,
    /// None of the four; cannot happen for a hole or Petrie path.
    Other,
}

impl ProofCase {
    pub fn as_str(self) -> &'static str {
        match self {
            ProofCase::Circuit => "circuit",
            ProofCase::HalfTurn => "half-turn",
            ProofCase::Partner => "partner",
            ProofCase::Flip => "flip",
            ProofCase::Other => "other",
        }
    }
}

/// For a circuit returning to a vertex after `k` steps: how `Phi_k` sits
/// relative to `Phi_0` at that vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Return {
    /// `Phi_k = Phi_0 (r1 r2)^d`.
    Rotation { k: usize, d: usize },
    /// `Phi_k = Phi_0 (r1 r2)^(d-1) r1`.
    Reflection { k: usize, d: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeVisitTrace {
    pub kind: WalkKind,
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
    pub distinct_edges: usize,
    pub distinct_vertices: usize,
    pub multiplicity: BTreeMap<usize, usize>,
    pub case: ProofCase,
    /// Set for circuits that revisit a vertex.
    pub circuit_return: Option<Return>,
}

impl EdgeVisitTrace {
    pub fn edge_set(&self) -> BTreeSet<usize> {
        self.multiplicity.keys().copied().collect()
    }

    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.vertices.iter().copied().collect()
    }
}

fn frame_r0(m: &FlagSystem, tag: WalkTag, flag: usize) -> usize {
    match tag {
        WalkTag::Hole => m.apply(0, flag),
        WalkTag::Petrie => m.apply(2, m.apply(0, flag)),
    }
}

pub fn trace(m: &FlagSystem, fs: &FaceStructure, w: &FlagWalk) -> EdgeVisitTrace {
    let edges = w.edges(fs);
    let vertices = w.vertices(fs);
    let mut multiplicity = BTreeMap::new();
    for &e in &edges {
        *multiplicity.entry(e).or_insert(0) += 1;
    }
    let distinct_edges = multiplicity.len();
    let distinct_vertices = vertices.iter().collect::<BTreeSet<_>>().len();

    let phi = w.base;
    let phi_l = w.flags[distinct_edges % w.len()];
    let r0 = frame_r0(m, w.kind.tag, phi);
    let case = if phi_l == phi {
        ProofCase::Circuit
    } else if phi_l == m.apply(2, r0) {
        ProofCase::HalfTurn
    } else if phi_l == m.apply(2, phi) {
        ProofCase::Partner
    } else if phi_l == r0 {
        ProofCase::Flip
    } else {
        ProofCase::Other
    };

    let circuit_return = if case == ProofCase::Circuit {
        (1..w.len())
            .find(|&k| vertices[k] == vertices[0])
            .and_then(|k| return_at(m, fs, phi, w.flags[k], k))
    } else {
        None
    };

    EdgeVisitTrace {
        kind: w.kind,
        edges,
        vertices,
        distinct_edges,
        distinct_vertices,
        multiplicity,
        case,
        circuit_return,
    }
}

fn return_at(
    m: &FlagSystem,
    fs: &FaceStructure,
    from: usize,
    to: usize,
    k: usize,
) -> Option<Return> {
    let q = fs.valence(fs.vertex_of(from));
    let mut f = from;
    for d in 1..=q {
        let half = m.apply(1, f);
        if half == to {
            return Some(Return::Reflection { k, d });
        }
        f = m.apply(2, half);
        if f == to {
            return Some(Return::Rotation { k, d });
        }
    }
    None
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

/// Which sign makes `d' = q - 2j + s d` hold (mod `q`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
    Both,
    Neither,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Cycle,
    Bead {
        d: usize,
        edges: usize,
        parity: Parity,
    },
    Bracelet {
        d: usize,
        beads: usize,
    },
    Twining {
        d: usize,
        d_prime: usize,
        sign: Sign,
    },
}

impl Label {
    fn rank(&self) -> u8 {
        match self {
            Label::Cycle => 0,
            Label::Bead { .. } => 1,
            Label::Bracelet { .. } => 2,
            Label::Twining { .. } => 3,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Label::Cycle => "cycle",
            Label::Bead { .. } => "bead",
            Label::Bracelet { .. } => "bracelet",
            Label::Twining { .. } => "twining",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Cycle => f.write_str("cycle"),
            Label::Bead { d, edges, parity } => {
                let p = match parity {
                    Parity::Odd => "odd",
                    Parity::Even => "even",
                };
                write!(f, "{p} {d}-bead ({edges} edges)")
            }
            Label::Bracelet { d, beads } => write!(f, "bracelet of {beads} {d}-beads"),
            Label::Twining { d, d_prime, .. } => write!(f, "twining (d={d}, d'={d_prime})"),
        }
    }
}

/// The edge set is a cycle: it is connected, every vertex it meets has
/// degree 2 in it, and it has at least two edges.
pub fn is_cycle_edges(fs: &FaceStructure, t: &EdgeVisitTrace) -> bool {
    let edges = t.edge_set();
    if edges.len() < 2 {
        return false;
    }
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &e in &edges {
        let (a, b) = fs.endpoints(e);
        *degree.entry(a).or_insert(0) += 1;
        *degree.entry(b).or_insert(0) += 1;
    }
    degree.values().all(|&d| d == 2) && degree.len() == edges.len() && is_connected(fs, &edges)
}

fn is_connected(fs: &FaceStructure, edges: &BTreeSet<usize>) -> bool {
    let pairs: Vec<(usize, usize)> = edges.iter().map(|&e| fs.endpoints(e)).collect();
    let mut reached = BTreeSet::new();
    reached.insert(pairs[0].0);
    loop {
        let before = reached.len();
        for &(a, b) in &pairs {
            if reached.contains(&a) || reached.contains(&b) {
                reached.insert(a);
                reached.insert(b);
            }
        }
        if reached.len() == before {
            break;
        }
    }
    pairs
        .iter()
        .all(|(a, b)| reached.contains(a) && reached.contains(b))
}

/// Positions of the edges of `set` in the rotation at `v`.
fn positions(m: &FlagSystem, fs: &FaceStructure, v: usize, set: &BTreeSet<usize>) -> Vec<usize> {
    m.rotation_at(fs, v)
        .iter()
        .enumerate()
        .filter(|(_, &dart)| set.contains(&fs.edge_of(fs.darts.orbit(dart)[0])))
        .map(|(i, _)| i)
        .collect()
}

/// The spacing `d` when `pos` is a full coset of `d Z_q`.
fn even_spacing(pos: &[usize], q: usize) -> Option<usize> {
    if pos.len() < 2 || !q.is_multiple_of(pos.len()) {
        return None;
    }
    let d = q / pos.len();
    pos.windows(2).all(|w| w[1] - w[0] == d).then_some(d)
}

/// `d` when `edges` (at least two) join the same two distinct vertices and
/// are evenly spaced by `d` at both.
fn bead_spacing(m: &FlagSystem, fs: &FaceStructure, edges: &BTreeSet<usize>) -> Option<usize> {
    let first = *edges.iter().next()?;
    let (u, v) = fs.endpoints(first);
    if u == v || edges.iter().any(|&e| fs.endpoints(e) != (u, v)) {
        return None;
    }
    let du = even_spacing(&positions(m, fs, u, edges), fs.valence(u))?;
    let dv = even_spacing(&positions(m, fs, v, edges), fs.valence(v))?;
    (du == dv).then_some(du)
}

pub fn is_bead(m: &FlagSystem, fs: &FaceStructure, t: &EdgeVisitTrace) -> Option<(usize, Parity)> {
    let edges = t.edge_set();
    let d = bead_spacing(m, fs, &edges)?;
    let parity = if edges.len() % 2 == 1 {
        Parity::Odd
    } else {
        Parity::Even
    };
    Some((d, parity))
}

/// `(d, k)` when the edge set is a union of `k` `d`-beads whose vertices are
/// those of a cycle.
pub fn is_bracelet(
    m: &FlagSystem,
    fs: &FaceStructure,
    t: &EdgeVisitTrace,
) -> Option<(usize, usize)> {
    let edges = t.edge_set();
    let mut classes: BTreeMap<(usize, usize), BTreeSet<usize>> = BTreeMap::new();
    for &e in &edges {
        classes.entry(fs.endpoints(e)).or_default().insert(e);
    }
    if classes.keys().any(|(a, b)| a == b) {
        return None;
    }
    if classes.len() == 1 {
        let (&(u, _), set) = classes.iter().next()?;
        return two_bead_split(m, fs, u, set).map(|d| (d, 2));
    }
    // the classes must form a cycle through the walk's vertices
    let mut degree: BTreeMap<usize, usize> = BTreeMap::new();
    for &(a, b) in classes.keys() {
        *degree.entry(a).or_insert(0) += 1;
        *degree.entry(b).or_insert(0) += 1;
    }
    if classes.len() < 3 || degree.len() != classes.len() || degree.values().any(|&d| d != 2) {
        return None;
    }
    let representatives: BTreeSet<usize> = classes
        .values()
        .map(|s| *s.iter().next().unwrap())
        .collect();
    if !is_connected(fs, &representatives) {
        return None;
    }
    let mut common = None;
    for set in classes.values() {
        let d = bead_spacing(m, fs, set)?;
        if *common.get_or_insert(d) != d {
            return None;
        }
    }
    common.map(|d| (d, classes.len()))
}

/// Splits parallel edges on `u, v` into two `d`-beads, if possible.
fn two_bead_split(
    m: &FlagSystem,
    fs: &FaceStructure,
    u: usize,
    set: &BTreeSet<usize>,
) -> Option<usize> {
    let q = fs.valence(u);
    if set.len() < 4 || set.len() % 2 == 1 || !(2 * q).is_multiple_of(set.len()) {
        return None;
    }
    let d = 2 * q / set.len();
    let rot = m.rotation_at(fs, u);
    let mut halves: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (i, &dart) in rot.iter().enumerate() {
        let e = fs.edge_of(fs.darts.orbit(dart)[0]);
        if set.contains(&e) {
            halves.entry(i % d).or_default().insert(e);
        }
    }
    if halves.len() != 2 {
        return None;
    }
    halves
        .values()
        .all(|half| bead_spacing(m, fs, half) == Some(d))
        .then_some(d)
}

/// `(d, d', sign)` when the walk is a twining, with `mu` found in `aut`.
pub fn is_twining(
    m: &FlagSystem,
    fs: &FaceStructure,
    t: &EdgeVisitTrace,
    aut: &AutGroup,
) -> Option<(usize, usize, Sign)> {
    let len = t.edges.len();
    if len % 2 == 1 || len < 4 {
        return None;
    }
    let k = len / 2;
    let (e, v) = (&t.edges, &t.vertices);
    if (0..k).any(|i| v[i + k] != v[i] || e[i] == e[i + k])
        || v[..k].iter().collect::<BTreeSet<_>>().len() != k
    {
        return None;
    }
    let mut d_set: Option<BTreeSet<usize>> = None;
    let mut dp_set: Option<BTreeSet<usize>> = None;
    for i in 0..k {
        let next = v[(i + 1) % len];
        if fs.endpoints(e[i]) != fs.endpoints(e[i + k]) {
            return None;
        }
        let here = m.subtend(fs, v[i], e[i], e[i + k]).ok()?;
        let there = m.subtend(fs, next, e[i], e[i + k]).ok()?;
        d_set = Some(match d_set {
            None => here,
            Some(s) => s.intersection(&here).copied().collect(),
        });
        dp_set = Some(match dp_set {
            None => there,
            Some(s) => s.intersection(&there).copied().collect(),
        });
    }
    let (d_set, dp_set) = (d_set?, dp_set?);
    let (&d, &d_prime) = (d_set.iter().next()?, dp_set.iter().next()?);

    let vertex_flags: Vec<usize> = v[..k].iter().map(|&x| fs.vertices.orbit(x)[0]).collect();
    let edge_flags: Vec<(usize, usize)> = (0..k)
        .map(|i| (fs.edges.orbit(e[i])[0], fs.edges.orbit(e[i + k])[0]))
        .collect();
    let mu = aut.elements().iter().any(|g| {
        vertex_flags
            .iter()
            .all(|&f| fs.vertex_of(g.apply(f)) == fs.vertex_of(f))
            && edge_flags.iter().all(|&(a, b)| {
                fs.edge_of(g.apply(a)) == fs.edge_of(b) && fs.edge_of(g.apply(b)) == fs.edge_of(a)
            })
    });
    if !mu {
        return None;
    }

    let q = fs.valence(v[0]) as i64;
    let j = t.kind.j as i64;
    let holds = |s: i64| {
        d_set.iter().any(|&dd| {
            let target = (q - 2 * j + s * dd as i64).rem_euclid(q);
            dp_set.iter().any(|&x| x as i64 % q == target)
        })
    };
    let sign = match (holds(1), holds(-1)) {
        (true, true) => Sign::Both,
        (true, false) => Sign::Plus,
        (false, true) => Sign::Minus,
        (false, false) => Sign::Neither,
    };
    Some((d, d_prime, sign))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSetClassification {
    pub labels: Vec<Label>,
    pub primary: Option<Label>,
    pub is_line: bool,
    pub one_vertex_map: bool,
    pub trace: EdgeVisitTrace,
}

/// Runs all four tests; `aut` supplies the symmetry a twining needs.
pub fn classify(
    m: &FlagSystem,
    fs: &FaceStructure,
    w: &FlagWalk,
    aut: &AutGroup,
) -> Result<EdgeSetClassification, ClassifyError> {
    let t = trace(m, fs, w);
    let mut labels = Vec::new();
    if is_cycle_edges(fs, &t) {
        labels.push(Label::Cycle);
    }
    if let Some((d, parity)) = is_bead(m, fs, &t) {
        labels.push(Label::Bead {
            d,
            edges: t.distinct_edges,
            parity,
        });
    }
    if let Some((d, beads)) = is_bracelet(m, fs, &t) {
        labels.push(Label::Bracelet { d, beads });
    }
    if let Some((d, d_prime, sign)) = is_twining(m, fs, &t, aut) {
        labels.push(Label::Twining { d, d_prime, sign });
    }
    let one_vertex_map = fs.n_vertices() == 1;
    if labels.is_empty() && !one_vertex_map {
        return Err(ClassifyError::TheoremViolation {
            kind: w.kind,
            base: w.base,
            vertices: fs.n_vertices(),
            edges: t.edges,
        });
    }
    let primary = labels.iter().min_by_key(|l| l.rank()).copied();
    Ok(EdgeSetClassification {
        labels,
        primary,
        is_line: is_line(m, fs, w),
        one_vertex_map,
        trace: t,
    })
}
