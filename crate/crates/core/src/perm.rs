//! Permutations of the vertex set `0..n`, with composition, cycle notation,
//! and the usual group operations. These are the witnesses returned by the
//! isomorphism routines and the elements of automorphism groups.

use std::fmt;

use thiserror::Error;

/// A bijection of `0..n`. `map[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    map: Vec<usize>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PermError {
    #[error("image list is not a bijection of 0..{0}")]
    NotABijection(usize),
    #[error("cycle entry {0} is out of range for degree {1}")]
    OutOfRange(usize, usize),
    #[error("label {0} appears in two cycles")]
    RepeatedLabel(usize),
}

impl Permutation {
    /// The identity on `0..n`.
    pub fn identity(n: usize) -> Self {
        Permutation { map: (0..n).collect() }
    }

    /// Builds a permutation from its image list, checking bijectivity.
    pub fn from_images(map: Vec<usize>) -> Result<Self, PermError> {
        let n = map.len();
        let mut seen = vec![false; n];
        for &img in &map {
            if img >= n || seen[img] {
                return Err(PermError::NotABijection(n));
            }
            seen[img] = true;
        }
        Ok(Permutation { map })
    }

    /// Builds a permutation of `0..n` from disjoint cycles; labels absent
    /// from every cycle are fixed.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut map: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                if a >= n {
                    return Err(PermError::OutOfRange(a, n));
                }
                if moved[a] {
                    return Err(PermError::RepeatedLabel(a));
                }
                moved[a] = true;
                map[a] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { map })
    }

    pub fn degree(&self) -> usize {
        self.map.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.map
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().enumerate().all(|(i, &img)| i == img)
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.map.len()];
        for (i, &img) in self.map.iter().enumerate() {
            inv[img] = i;
        }
        Permutation { map: inv }
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "composing permutations of different degree");
        Permutation { map: other.map.iter().map(|&x| self.map[x]).collect() }
    }

    /// Multiplicative order of the permutation.
    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// The nontrivial cycles, each rotated to start at its smallest label,
    /// sorted by that label.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.map.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.map[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.map[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.map[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation, e.g. `(0 1 2)(3 4)`; the identity prints as `()`.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".to_string();
        }
        cycles
            .iter()
            .map(|c| {
                let inner = c.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
                format!("({inner})")
            })
            .collect()
    }

    /// Number of fixed points.
    pub fn fixed_points(&self) -> usize {
        self.map.iter().enumerate().filter(|&(i, &img)| i == img).count()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_basics() {
        let id = Permutation::identity(5);
        assert!(id.is_identity());
        assert_eq!(id.order(), 1);
        assert_eq!(id.cycle_notation(), "()");
        assert_eq!(id.fixed_points(), 5);
    }

    #[test]
    fn from_cycles_and_notation() {
        let p = Permutation::from_cycles(5, &[&[0, 1, 2], &[3, 4]]).unwrap();
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 0);
        assert_eq!(p.apply(4), 3);
        assert_eq!(p.cycle_notation(), "(0 1 2)(3 4)");
        assert_eq!(p.order(), 6);
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let f = Permutation::from_cycles(3, &[&[0, 1]]).unwrap();
        let g = Permutation::from_cycles(3, &[&[1, 2]]).unwrap();
        // (f ∘ g)(1) = f(2) = 2, (f ∘ g)(2) = f(1) = 0.
        let fg = f.compose(&g);
        assert_eq!(fg.apply(1), 2);
        assert_eq!(fg.apply(2), 0);
        assert_eq!(fg.apply(0), 1);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = Permutation::from_cycles(7, &[&[0, 3, 5, 1], &[2, 6]]).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::from_images(vec![0, 0, 1]).is_err());
        assert!(Permutation::from_images(vec![0, 3, 1]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 1], &[1, 2]]).is_err());
        assert!(Permutation::from_cycles(3, &[&[0, 5]]).is_err());
    }
}
