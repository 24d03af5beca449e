//! Words in a free group of rank `d`, freely reduced on construction.
//!
//! Generators model the geometric loops around the `d` punctures of a disc;
//! a letter `g > 0` is the generator `x_g`, and `g < 0` its inverse.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FreeGroupWord {
    rank: usize,
    letters: Vec<i32>,
}

fn reduce(letters: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut stack: Vec<i32> = Vec::new();
    for g in letters {
        if stack.last() == Some(&-g) {
            stack.pop();
        } else {
            stack.push(g);
        }
    }
    stack
}

impl FreeGroupWord {
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize > rank {
                return Err(Error::LetterOutOfRange {
                    letter: g,
                    strands: rank,
                });
            }
        }
        Ok(FreeGroupWord {
            rank,
            letters: reduce(letters),
        })
    }

    pub fn identity(rank: usize) -> Self {
        FreeGroupWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// The generator `x_i`, `1 <= i <= rank`.
    pub fn generator(rank: usize, i: usize) -> Result<Self> {
        FreeGroupWord::new(rank, vec![i as i32])
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_rank(&self, other: &FreeGroupWord) -> Result<()> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                left: self.rank,
                right: other.rank,
            });
        }
        Ok(())
    }

    pub fn multiply(&self, other: &FreeGroupWord) -> Result<FreeGroupWord> {
        self.check_rank(other)?;
        Ok(FreeGroupWord {
            rank: self.rank,
            letters: reduce(self.letters.iter().chain(other.letters.iter()).copied()),
        })
    }

    pub fn inverse(&self) -> FreeGroupWord {
        FreeGroupWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|&g| -g).collect(),
        }
    }

    /// The ordered product `x_1 x_2 .. x_d` (the boundary loop of the disc).
    pub fn boundary(rank: usize) -> Self {
        FreeGroupWord {
            rank,
            letters: (1..=rank as i32).collect(),
        }
    }
}

impl fmt::Debug for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FreeGroupWord({self})")
    }
}

impl fmt::Display for FreeGroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, &g) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if g > 0 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{}^-1", -g)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_on_construction() {
        let w = FreeGroupWord::new(3, vec![1, 2, -2, -1, 3]).unwrap();
        assert_eq!(w.letters(), &[3]);
    }

    #[test]
    fn multiply_cancels_across_boundary() {
        let a = FreeGroupWord::new(2, vec![1, 2]).unwrap();
        let b = FreeGroupWord::new(2, vec![-2, -1]).unwrap();
        assert!(a.multiply(&b).unwrap().is_identity());
    }

    #[test]
    fn inverse_composes_to_identity() {
        let w = FreeGroupWord::new(3, vec![1, -2, 3, 1]).unwrap();
        assert!(w.multiply(&w.inverse()).unwrap().is_identity());
    }

    #[test]
    fn rank_enforced() {
        assert!(FreeGroupWord::new(2, vec![3]).is_err());
        assert!(FreeGroupWord::new(2, vec![0]).is_err());
    }
}
