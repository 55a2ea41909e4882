//! Dense permutations of `0..n` and orbit partitions.
//!
//! Composition follows the exponent convention used throughout the crate:
//! `p.then(&q)` applies `p` first and `q` second, so a word like
//! `r0 r1 (r2 r1)^2` is built by chaining `then` from left to right.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("image array is not a bijection on 0..{len}: value {value} at position {position}")]
    NotBijective {
        len: usize,
        position: usize,
        value: usize,
    },
    #[error("domain sizes differ ({left} vs {right})")]
    SizeMismatch { left: usize, right: usize },
    #[error("point {point} outside domain of size {len}")]
    OutOfDomain { point: usize, len: usize },
    #[error("orbit computation needs at least one generator or a non-empty domain")]
    EmptyInput,
    #[error("modulus must be positive")]
    ZeroModulus,
}

/// A bijection on `0..n`, stored as its image array.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Checks bijectivity and wraps the image array.
    pub fn from_images(images: Vec<usize>) -> Result<Self, PermError> {
        let len = images.len();
        let mut seen = vec![false; len];
        for (position, &value) in images.iter().enumerate() {
            if value >= len || seen[value] {
                return Err(PermError::NotBijective {
                    len,
                    position,
                    value,
                });
            }
            seen[value] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation from disjoint cycles; points not mentioned are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..n).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x >= n || y >= n {
                    return Err(PermError::OutOfDomain {
                        point: x.max(y),
                        len: n,
                    });
                }
                images[x] = y;
            }
        }
        Self::from_images(images)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn into_images(self) -> Vec<usize> {
        self.images
    }

    /// `self` first, then `other`. Errors when the domains differ.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.len() != other.len() {
            return Err(PermError::SizeMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.then(other))
    }

    /// `self` first, then `other`. Panics on mismatched domains.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.len(),
            other.len(),
            "composing permutations of different degree"
        );
        Permutation {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y] = x;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, k: usize) -> Permutation {
        let mut result = Permutation::identity(self.len());
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        result
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn fixed_points(&self) -> impl Iterator<Item = usize> + '_ {
        self.images
            .iter()
            .enumerate()
            .filter(|(x, y)| x == *y)
            .map(|(x, _)| x)
    }

    /// The orbit of `x` under `<self>`, in application order starting at `x`.
    pub fn cycle_of(&self, x: usize) -> Vec<usize> {
        let mut cycle = vec![x];
        let mut y = self.images[x];
        while y != x {
            cycle.push(y);
            y = self.images[y];
        }
        cycle
    }

    /// Disjoint cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut cycles = Vec::new();
        for x in 0..self.len() {
            if seen[x] {
                continue;
            }
            let cycle = self.cycle_of(x);
            for &y in &cycle {
                seen[y] = true;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Least `k >= 1` with `self^k = id`: the lcm of the cycle lengths.
    pub fn order(&self) -> usize {
        self.cycles()
            .iter()
            .fold(1, |acc, c| num_integer::lcm(acc, c.len()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let nontrivial: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if nontrivial.is_empty() {
            return write!(f, "()");
        }
        for c in nontrivial {
            write!(f, "(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A partition of `0..n` into orbits, numbered by least member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitPartition {
    orbit_id: Vec<usize>,
    orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// Connected components of the graph with an edge `x -> step(x, k)` for
    /// each `k < n_steps`. Orbits are numbered by least member and listed in
    /// increasing order.
    pub fn from_steps<F>(n: usize, n_steps: usize, step: F) -> Self
    where
        F: Fn(usize, usize) -> usize,
    {
        const UNSEEN: usize = usize::MAX;
        let mut orbit_id = vec![UNSEEN; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..n {
            if orbit_id[start] != UNSEEN {
                continue;
            }
            let id = orbits.len();
            let mut members = vec![start];
            orbit_id[start] = id;
            queue.push_back(start);
            while let Some(x) = queue.pop_front() {
                for k in 0..n_steps {
                    let y = step(x, k);
                    if orbit_id[y] == UNSEEN {
                        orbit_id[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        OrbitPartition { orbit_id, orbits }
    }

    pub fn orbit_of(&self, x: usize) -> usize {
        self.orbit_id[x]
    }

    pub fn orbit_ids(&self) -> &[usize] {
        &self.orbit_id
    }

    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn orbit(&self, id: usize) -> &[usize] {
        &self.orbits[id]
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    pub fn domain_size(&self) -> usize {
        self.orbit_id.len()
    }

    pub fn same_orbit(&self, x: usize, y: usize) -> bool {
        self.orbit_id[x] == self.orbit_id[y]
    }
}

/// Orbits of `<generators>` on `0..n`.
pub fn orbits_under(generators: &[Permutation], n: usize) -> Result<OrbitPartition, PermError> {
    if generators.is_empty() && n == 0 {
        return Err(PermError::EmptyInput);
    }
    if let Some(g) = generators.iter().find(|g| g.len() != n) {
        return Err(PermError::SizeMismatch {
            left: g.len(),
            right: n,
        });
    }
    Ok(OrbitPartition::from_steps(n, generators.len(), |x, k| {
        generators[k].apply(x)
    }))
}

/// `|a|_n`, the additive order of `a` in `Z_n`: `n / gcd(n, a mod n)`.
pub fn order_mod(a: i64, n: u64) -> Result<u64, PermError> {
    if n == 0 {
        return Err(PermError::ZeroModulus);
    }
    let r = a.rem_euclid(n as i64) as u64;
    Ok(n / num_integer::gcd(n, r))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_examples() {
        let q = p(5, &[&[0, 3], &[1, 2, 4]]);
        assert_eq!(Permutation::identity(5).compose(&q).unwrap(), q);
        let t = p(2, &[&[0, 1]]);
        assert!(t.compose(&t).unwrap().is_identity());
        // images of (0 1)(2 3) then (0 2)(1 3): 0->1->3, 1->0->2, 2->3->1, 3->2->0
        let a = p(4, &[&[0, 1], &[2, 3]]);
        let b = p(4, &[&[0, 2], &[1, 3]]);
        assert_eq!(a.compose(&b).unwrap(), p(4, &[&[0, 3], &[1, 2]]));
    }

    #[test]
    fn compose_rejects_size_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, PermError::SizeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn from_images_rejects_repeats() {
        assert!(matches!(
            Permutation::from_images(vec![0, 0, 1]),
            Err(PermError::NotBijective { position: 1, .. })
        ));
        assert!(Permutation::from_images(vec![3, 0, 1]).is_err());
    }

    #[test]
    fn order_examples() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(p(4, &[&[0, 1], &[2, 3]]).order(), 2);
        assert_eq!(p(5, &[&[0, 1, 2], &[3, 4]]).order(), 6);
    }

    #[test]
    fn orbit_examples() {
        let o = orbits_under(&[Permutation::identity(3)], 3).unwrap();
        assert_eq!(o.len(), 3);
        let gens = [p(4, &[&[0, 1], &[2, 3]]), p(4, &[&[0, 2], &[1, 3]])];
        let o = orbits_under(&gens, 4).unwrap();
        assert_eq!(o.orbits(), &[vec![0, 1, 2, 3]]);
        let o = orbits_under(&[p(4, &[&[0, 1]])], 4).unwrap();
        assert_eq!(o.orbits(), &[vec![0, 1], vec![2], vec![3]]);
        assert_eq!(orbits_under(&[], 0), Err(PermError::EmptyInput));
        // no generators on a non-empty domain: all singletons
        assert_eq!(orbits_under(&[], 2).unwrap().len(), 2);
    }

    #[test]
    fn cycle_of_examples() {
        assert_eq!(Permutation::identity(6).cycle_of(5), vec![5]);
        assert_eq!(p(3, &[&[0, 1, 2]]).cycle_of(1), vec![1, 2, 0]);
        assert_eq!(p(6, &[&[0, 3], &[1, 2], &[4, 5]]).cycle_of(4), vec![4, 5]);
    }

    #[test]
    fn order_mod_examples() {
        assert_eq!(order_mod(3, 12), Ok(4));
        assert_eq!(order_mod(0, 7), Ok(1));
        assert_eq!(order_mod(4, 12), Ok(3));
        assert_eq!(order_mod(-4, 12), Ok(3));
        assert_eq!(order_mod(1, 0), Err(PermError::ZeroModulus));
    }

    #[test]
    fn debug_prints_cycles() {
        assert_eq!(
            alloc::format!("{:?}", p(5, &[&[3, 4], &[0, 2]])),
            "(0 2)(3 4)"
        );
        assert_eq!(alloc::format!("{:?}", Permutation::identity(2)), "()");
    }
}
