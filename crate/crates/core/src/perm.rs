//! Permutations of `{1, ..., n}`.
//!
//! Composition is written left to right: `a.then(b)` maps `x` to `b(a(x))`.
//! This matches the convention used for braid words, where the product
//! `w1 * w2` performs `w1` first.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = image of point i+1, stored zero-based
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize + 1, "permutation degree too large");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize + 1 {
            return Err(Error::InvalidPermutation {
                reason: format!("degree {n} too large"),
            });
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &im in images {
            if im == 0 || im > n {
                return Err(Error::InvalidPermutation {
                    reason: format!("image {im} out of range 1..={n}"),
                });
            }
            if seen[im - 1] {
                return Err(Error::InvalidPermutation {
                    reason: format!("image {im} repeated"),
                });
            }
            seen[im - 1] = true;
            out.push((im - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    /// The transposition `(a b)` in the symmetric group on `n` points (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || a > n {
            return Err(Error::StrandIndexOutOfRange {
                index: a,
                strands: n,
            });
        }
        if b == 0 || b > n {
            return Err(Error::StrandIndexOutOfRange {
                index: b,
                strands: n,
            });
        }
        if a == b {
            return Err(Error::InvalidPermutation {
                reason: format!("transposition needs distinct points, got ({a} {b})"),
            });
        }
        let mut p = Permutation::identity(n);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point `p`.
    pub fn apply(&self, p: usize) -> usize {
        self.images[p - 1] as usize + 1
    }

    /// `self` followed by `other`: maps `x` to `other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.size(), other.size(), "permutation size mismatch");
        Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &im) in self.images.iter().enumerate() {
            images[im as usize] = i as u8;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &im)| im as usize == i)
    }

    /// 1-based points moved by the permutation.
    pub fn support(&self) -> Vec<usize> {
        self.images
            .iter()
            .enumerate()
            .filter(|(i, &im)| *i != im as usize)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// If the permutation is a transposition, returns the swapped pair `(a, b)`
    /// with `a < b` (1-based).
    pub fn as_transposition(&self) -> Option<(usize, usize)> {
        let support = self.support();
        match support.as_slice() {
            [a, b] if self.apply(*a) == *b && self.apply(*b) == *a => Some((*a, *b)),
            _ => None,
        }
    }

    /// Conjugate: maps `x` to `by(self(by^{-1}(x)))`, i.e. `by^{-1} . self . by`
    /// in `then`-order. Relabels the support through `by`.
    pub fn conjugated(&self, by: &Permutation) -> Permutation {
        by.inverse().then(self).then(by)
    }

    /// Cycle decomposition with 1-based points; fixed points omitted.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.size();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut cur = start;
            while !seen[cur] {
                seen[cur] = true;
                cycle.push(cur + 1);
                cur = self.images[cur] as usize;
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    pub(crate) fn images_zero_based(&self) -> &[u8] {
        &self.images
    }

    /// Swaps the entries at 1-based positions i, i+1 (right multiplication by
    /// the adjacent transposition in `then`-order acts on preimages).
    pub(crate) fn swap_positions(&mut self, i: usize) {
        self.images.swap(i - 1, i);
    }

    /// Swaps the two entries holding the values i, i+1 (1-based).
    pub(crate) fn swap_values(&mut self, i: usize) {
        let a = self.images.iter().position(|&v| v as usize == i - 1).unwrap();
        let b = self.images.iter().position(|&v| v as usize == i).unwrap();
        self.images.swap(a, b);
    }

    /// Swaps the entries at two arbitrary 1-based positions.
    pub(crate) fn swap_entries(&mut self, p: usize, q: usize) {
        self.images.swap(p - 1, q - 1);
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "id");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}
