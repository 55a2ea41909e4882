//! Map constructors: polygon gluings (the one-face families `M_n`, `delta_n`
//! and `H(n, a)`), orientable rotation systems, and the small named maps used
//! as fixtures.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::flagmap::{FlagSystem, MapError};
use crate::permgroup::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("a polygon needs a positive even number of sides, got {0}")]
    BadSideCount(usize),
    #[error("side {0} is paired more than once or not at all")]
    BadPairing(usize),
    #[error("parameter out of range: {0}")]
    BadParameter(&'static str),
    #[error("rotation is not a permutation of the darts")]
    BadRotation,
    #[error(transparent)]
    Map(#[from] MapError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identification {
    /// `f(p, i) <-> f(p', 1 - i)`: the sides are glued head to tail.
    Orientable,
    /// `f(p, i) <-> f(p', i)`.
    NonOrientable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SidePair {
    pub first: usize,
    pub second: usize,
    pub identification: Identification,
}

/// A `2n`-gon with its sides identified in pairs. Side `p` runs from corner
/// `p` to corner `p + 1`; pair `t` becomes edge `t` of the glued map.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolygonGluing {
    n_sides: usize,
    pairs: Vec<SidePair>,
    /// side position -> (pair index, slot 0 or 1)
    slot: Vec<(usize, usize)>,
}

impl PolygonGluing {
    pub fn new(n_sides: usize, pairs: Vec<SidePair>) -> Result<Self, FamilyError> {
        if n_sides == 0 || n_sides % 2 == 1 || pairs.len() * 2 != n_sides {
            return Err(FamilyError::BadSideCount(n_sides));
        }
        let mut slot = vec![(usize::MAX, 0); n_sides];
        for (t, pair) in pairs.iter().enumerate() {
            for (k, pos) in [pair.first, pair.second].into_iter().enumerate() {
                if pos >= n_sides || slot[pos].0 != usize::MAX {
                    return Err(FamilyError::BadPairing(pos.min(n_sides - 1)));
                }
                slot[pos] = (t, k);
            }
        }
        Ok(PolygonGluing {
            n_sides,
            pairs,
            slot,
        })
    }

    /// Each side glued to the opposite one, `p <-> p + n`.
    pub fn opposite(n: usize, identification: Identification) -> Result<Self, FamilyError> {
        let pairs = (0..n)
            .map(|p| SidePair {
                first: p,
                second: p + n,
                identification,
            })
            .collect();
        Self::new(2 * n, pairs)
    }

    /// Sides alternate blue and yellow; blue `x` sits at position `2x`, yellow
    /// `x + a + 1` at `2x + 1`, and blue `x` is glued orientably to yellow `x`.
    pub fn h(n: usize, a: usize) -> Result<Self, FamilyError> {
        if n == 0 || a >= n {
            return Err(FamilyError::BadParameter("H(n, a) needs 0 <= a < n"));
        }
        let sides = 2 * n;
        let pairs = (0..n)
            .map(|x| SidePair {
                first: 2 * x,
                second: (2 * (x + 2 * n - a - 1) + 1) % sides,
                identification: Identification::Orientable,
            })
            .collect();
        Self::new(sides, pairs)
    }

    pub fn n_sides(&self) -> usize {
        self.n_sides
    }

    pub fn pairs(&self) -> &[SidePair] {
        &self.pairs
    }

    /// Flag index of `f(position, i)`; `i = 0` touches corner `position`,
    /// `i = 1` touches corner `position + 1`.
    pub fn flag(&self, position: usize, i: usize) -> usize {
        let (t, k) = self.slot[position % self.n_sides];
        4 * t + 2 * k + i
    }

    /// A flag at corner `c` (between sides `c - 1` and `c`).
    pub fn corner_flag(&self, c: usize) -> usize {
        self.flag(c % self.n_sides, 0)
    }
}

/// Every way to pair the sides of a `2n`-gon, with every choice of
/// identification per pair: `(2n - 1)!! * 2^n` gluings.
pub fn all_gluings(n: usize) -> Vec<PolygonGluing> {
    fn pairings(
        rest: &mut Vec<usize>,
        acc: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        let Some(&a) = rest.first() else {
            out.push(acc.clone());
            return;
        };
        rest.remove(0);
        for i in 0..rest.len() {
            let b = rest.remove(i);
            acc.push((a, b));
            pairings(rest, acc, out);
            acc.pop();
            rest.insert(i, b);
        }
        rest.insert(0, a);
    }

    if n == 0 {
        return Vec::new();
    }
    let mut matchings = Vec::new();
    pairings(&mut (0..2 * n).collect(), &mut Vec::new(), &mut matchings);
    let mut out = Vec::with_capacity(matchings.len() << n);
    for p in &matchings {
        for mask in 0..(1usize << n) {
            let pairs = p
                .iter()
                .enumerate()
                .map(|(t, &(first, second))| SidePair {
                    first,
                    second,
                    identification: if mask >> t & 1 == 1 {
                        Identification::NonOrientable
                    } else {
                        Identification::Orientable
                    },
                })
                .collect();
            out.push(PolygonGluing::new(2 * n, pairs).expect("a perfect matching"));
        }
    }
    out
}

/// The one-face map of a polygon gluing. Fails with the validation report when
/// the gluing breaks the map axioms.
pub fn glue(g: &PolygonGluing) -> Result<FlagSystem, FamilyError> {
    let n_flags = 2 * g.n_sides;
    let mut r0 = vec![0; n_flags];
    let mut r1 = vec![0; n_flags];
    let mut r2 = vec![0; n_flags];
    for p in 0..g.n_sides {
        let next = (p + 1) % g.n_sides;
        r0[g.flag(p, 0)] = g.flag(p, 1);
        r0[g.flag(p, 1)] = g.flag(p, 0);
        r1[g.flag(p, 1)] = g.flag(next, 0);
        r1[g.flag(next, 0)] = g.flag(p, 1);
    }
    for pair in &g.pairs {
        for i in 0..2 {
            let j = match pair.identification {
                Identification::Orientable => 1 - i,
                Identification::NonOrientable => i,
            };
            r2[g.flag(pair.first, i)] = g.flag(pair.second, j);
            r2[g.flag(pair.second, j)] = g.flag(pair.first, i);
        }
    }
    let perm =
        |v: Vec<usize>| Permutation::from_images(v).expect("gluing connections are bijective");
    Ok(FlagSystem::new(perm(r0), perm(r1), perm(r2))?)
}

/// `M_n`: opposite sides of a `2n`-gon glued orientably.
pub fn build_m(n: usize) -> Result<FlagSystem, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParameter("M_n needs n >= 1"));
    }
    Ok(
        glue(&PolygonGluing::opposite(n, Identification::Orientable)?)?
            .with_name(alloc::format!("M_{n}")),
    )
}

/// `delta_n`: opposite sides of a `2n`-gon glued non-orientably.
pub fn build_delta(n: usize) -> Result<FlagSystem, FamilyError> {
    if n == 0 {
        return Err(FamilyError::BadParameter("delta_n needs n >= 1"));
    }
    Ok(
        glue(&PolygonGluing::opposite(n, Identification::NonOrientable)?)?
            .with_name(alloc::format!("delta_{n}")),
    )
}

/// `H(n, a)`; edge `x` is the edge carrying blue side `x`.
pub fn build_h(n: usize, a: usize) -> Result<FlagSystem, FamilyError> {
    Ok(glue(&PolygonGluing::h(n, a)?)?.with_name(alloc::format!("H({n},{a})")))
}

/// An orientable map from a rotation system. Darts `2e` and `2e + 1` are the
/// two ends of edge `e`, and `rotation[d]` is the dart following `d` around
/// its vertex. Flag `2d + s` is side `s` of dart `d`, so edge `e` owns flags
/// `4e..4e + 4` and keeps id `e`.
pub fn from_rotation(rotation: &[usize]) -> Result<FlagSystem, FamilyError> {
    let n_darts = rotation.len();
    if n_darts == 0 || n_darts % 2 == 1 {
        return Err(FamilyError::BadRotation);
    }
    let rot = Permutation::from_images(rotation.to_vec()).map_err(|_| FamilyError::BadRotation)?;
    let n_flags = 2 * n_darts;
    let mut r0 = vec![0; n_flags];
    let mut r1 = vec![0; n_flags];
    let mut r2 = vec![0; n_flags];
    for d in 0..n_darts {
        for s in 0..2 {
            r2[2 * d + s] = 2 * d + 1 - s;
            r0[2 * d + s] = 2 * (d ^ 1) + 1 - s;
        }
        let next = rot.apply(d);
        r1[2 * d + 1] = 2 * next;
        r1[2 * next] = 2 * d + 1;
    }
    let perm =
        |v: Vec<usize>| Permutation::from_images(v).expect("rotation connections are bijective");
    Ok(FlagSystem::new(perm(r0), perm(r1), perm(r2))?)
}

/// Rotation system from per-vertex cyclic lists of darts.
pub fn rotation_from_cycles(
    n_darts: usize,
    cycles: &[Vec<usize>],
) -> Result<Vec<usize>, FamilyError> {
    let mut rotation = vec![usize::MAX; n_darts];
    for cycle in cycles {
        for (i, &d) in cycle.iter().enumerate() {
            if d >= n_darts || rotation[d] != usize::MAX {
                return Err(FamilyError::BadRotation);
            }
            rotation[d] = cycle[(i + 1) % cycle.len()];
        }
    }
    if rotation.contains(&usize::MAX) {
        return Err(FamilyError::BadRotation);
    }
    Ok(rotation)
}

/// One loop on one vertex in the projective plane (4 flags).
pub fn pp_loop() -> FlagSystem {
    let perm = |v: &[usize]| Permutation::from_images(v.to_vec()).expect("literal");
    FlagSystem::new(
        perm(&[1, 0, 3, 2]),
        perm(&[3, 2, 1, 0]),
        perm(&[2, 3, 0, 1]),
    )
    .expect("pp_loop satisfies the axioms")
    .with_name("pp_loop")
}

/// The tetrahedron as a planar embedding of `K4`.
pub fn tetrahedron() -> FlagSystem {
    // edges: 0:{0,1} 1:{0,2} 2:{0,3} 3:{1,2} 4:{1,3} 5:{2,3}; dart 2e at the
    // lower vertex, 2e+1 at the higher one
    let cycles = [vec![0, 2, 4], vec![1, 8, 6], vec![3, 7, 10], vec![5, 11, 9]];
    let rotation = rotation_from_cycles(12, &cycles).expect("literal");
    from_rotation(&rotation)
        .expect("tetrahedron satisfies the axioms")
        .with_name("tetrahedron")
}

/// `M'_{12,7}`: vertices `a, b, c, d` = `0..4`, edge `e` joining `e - 1` and
/// `e` (mod 4), and around vertex `v` the edges `v, v+1, v+8, v+9, v+4, v+5`
/// (mod 12) in rotational order.
pub fn m12_7() -> FlagSystem {
    let cycles: Vec<Vec<usize>> = (0..4)
        .map(|v| {
            [0, 1, 8, 9, 4, 5]
                .iter()
                .map(|&k| {
                    let e = (v + k) % 12;
                    // the end of e at v: head when e = v (mod 4), tail otherwise
                    if e % 4 == v {
                        2 * e + 1
                    } else {
                        2 * e
                    }
                })
                .collect()
        })
        .collect();
    let rotation = rotation_from_cycles(24, &cycles).expect("literal");
    from_rotation(&rotation)
        .expect("M'_{12,7} satisfies the axioms")
        .with_name("M12_7")
}

/// A half-reflexible torus map on `C3 x C3` with doubled edges; vertex
/// `3x + y` is `(x, y)`. Edges are numbered so that `6l..6l + 6` is the
/// `l`-th line, in walk order.
pub fn cunningham() -> FlagSystem {
    const CYCLES: [[usize; 8]; 9] = [
        [0, 6, 12, 18, 11, 5, 23, 17],
        [24, 30, 20, 14, 35, 29, 19, 13],
        [36, 42, 16, 22, 47, 41, 15, 21],
        [8, 2, 48, 54, 7, 1, 59, 53],
        [32, 26, 56, 50, 31, 25, 55, 49],
        [44, 38, 52, 58, 43, 37, 51, 57],
        [4, 10, 60, 66, 3, 9, 71, 65],
        [28, 34, 68, 62, 27, 33, 67, 61],
        [40, 46, 64, 70, 39, 45, 63, 69],
    ];
    let cycles: Vec<Vec<usize>> = CYCLES.iter().map(|c| c.to_vec()).collect();
    let rotation = rotation_from_cycles(72, &cycles).expect("literal");
    from_rotation(&rotation)
        .expect("the map satisfies the axioms")
        .with_name("cunningham")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gluing_count() {
        // (2n - 1)!! * 2^n
        assert_eq!(all_gluings(1).len(), 2);
        assert_eq!(all_gluings(2).len(), 3 * 4);
        assert_eq!(all_gluings(3).len(), 15 * 8);
    }

    #[test]
    fn digon_orientable_is_degenerate() {
        let g = PolygonGluing::opposite(1, Identification::Orientable).unwrap();
        assert!(matches!(
            glue(&g),
            Err(FamilyError::Map(MapError::Invalid(_)))
        ));
        let g = PolygonGluing::opposite(1, Identification::NonOrientable).unwrap();
        let m = glue(&g).unwrap();
        assert_eq!(m.euler_characteristic(), 1);
        assert!(!m.is_orientable());
    }

    #[test]
    fn bad_pairings_rejected() {
        let dup = vec![
            SidePair {
                first: 0,
                second: 1,
                identification: Identification::Orientable,
            },
            SidePair {
                first: 1,
                second: 2,
                identification: Identification::Orientable,
            },
        ];
        assert!(matches!(
            PolygonGluing::new(4, dup),
            Err(FamilyError::BadPairing(1))
        ));
        assert!(matches!(
            PolygonGluing::new(3, vec![]),
            Err(FamilyError::BadSideCount(3))
        ));
        assert!(PolygonGluing::h(4, 4).is_err());
    }

    #[test]
    fn square_gluings_give_torus_and_projective_plane() {
        let torus = build_m(2).unwrap();
        assert!(torus.is_orientable());
        assert_eq!(torus.euler_characteristic(), 0);
        let pp = build_delta(2).unwrap();
        assert!(!pp.is_orientable());
        assert_eq!(pp.euler_characteristic(), 1);
    }

    #[test]
    fn named_maps_have_expected_counts() {
        let t = tetrahedron().summary();
        assert_eq!((t.vertices, t.edges, t.faces), (4, 6, 4));
        let m = m12_7().summary();
        assert_eq!((m.vertices, m.edges, m.faces), (4, 12, 2));
        assert_eq!(m.valences, vec![6]);
    }

    #[test]
    fn rotation_must_be_permutation() {
        assert!(matches!(
            from_rotation(&[0, 0]),
            Err(FamilyError::BadRotation)
        ));
        assert!(matches!(
            rotation_from_cycles(4, &[vec![0, 1]]),
            Err(FamilyError::BadRotation)
        ));
    }
}
