//! Words in the Artin generators of the braid group `B_d`.
//!
//! A letter `g > 0` stands for the generator `sigma_g`, and `g < 0` for
//! `sigma_{|g|}^{-1}`. Words multiply by concatenation, left factor first.

use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::TooFewStrands {
                needed: 1,
                got: 0,
            });
        }
        for &g in &letters {
            if g == 0 || g.unsigned_abs() as usize >= strands {
                return Err(Error::LetterOutOfRange {
                    letter: g,
                    strands,
                });
            }
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord::new(strands, Vec::new()).expect("identity braid")
    }

    /// The generator `sigma_i`, `1 <= i <= d-1`.
    pub fn generator(strands: usize, i: usize) -> Result<Self> {
        BraidWord::new(strands, vec![i as i32])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_strands(&self, other: &BraidWord) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Concatenation: `self` first, then `other`.
    pub fn multiply(&self, other: &BraidWord) -> Result<BraidWord> {
        self.check_strands(other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            strands: self.strands,
            letters,
        })
    }

    /// Reversed word with negated letters.
    pub fn inverse(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|&g| -g).collect(),
        }
    }

    /// Cancels adjacent `g, -g` pairs until none remain.
    pub fn free_reduced(&self) -> BraidWord {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &g in &self.letters {
            if stack.last() == Some(&-g) {
                stack.pop();
            } else {
                stack.push(g);
            }
        }
        BraidWord {
            strands: self.strands,
            letters: stack,
        }
    }

    /// `c * self * c^{-1}`.
    pub fn conjugated_by(&self, c: &BraidWord) -> Result<BraidWord> {
        c.multiply(self)?.multiply(&c.inverse())
    }

    pub fn pow(&self, k: i32) -> BraidWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord {
            strands: self.strands,
            letters,
        }
    }

    /// Sum of letter signs; the image under abelianization `B_d -> Z`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&g| g.signum() as i64).sum()
    }

    /// Image under the quotient `B_d -> S_d`, `sigma_i -> (i i+1)`.
    pub fn underlying_permutation(&self) -> Permutation {
        let mut p = Permutation::identity(self.strands);
        for &g in &self.letters {
            // the adjacent transposition acts on positions, applied after p
            p.swap_values(g.unsigned_abs() as usize);
        }
        p
    }

    /// The Garside half twist `Delta = (s1 s2 .. s_{d-1})(s1 .. s_{d-2}) .. (s1)`.
    pub fn delta(strands: usize) -> Result<BraidWord> {
        if strands < 2 {
            return Err(Error::TooFewStrands {
                needed: 2,
                got: strands,
            });
        }
        let mut letters = Vec::with_capacity(strands * (strands - 1) / 2);
        for block in (1..strands).rev() {
            for i in 1..=block {
                letters.push(i as i32);
            }
        }
        BraidWord::new(strands, letters)
    }

    /// A word for `Delta^k`.
    pub fn delta_power(strands: usize, k: i32) -> Result<BraidWord> {
        Ok(BraidWord::delta(strands)?.pow(k))
    }

    /// The band generator `a_{s,t} = (s_{t-1} .. s_{s+1}) s_s (s_{s+1}^{-1} .. s_{t-1}^{-1})`,
    /// a positive half twist exchanging strands `s < t`.
    pub fn band_generator(strands: usize, s: usize, t: usize) -> Result<BraidWord> {
        if s == 0 || s > strands {
            return Err(Error::StrandIndexOutOfRange {
                index: s,
                strands,
            });
        }
        if t <= s || t > strands {
            return Err(Error::StrandIndexOutOfRange {
                index: t,
                strands,
            });
        }
        let mut letters = Vec::new();
        for i in ((s + 1)..t).rev() {
            letters.push(i as i32);
        }
        letters.push(s as i32);
        for i in (s + 1)..t {
            letters.push(-(i as i32));
        }
        BraidWord::new(strands, letters)
    }
}

impl fmt::Debug for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BraidWord(d={}; ", self.strands)?;
        for (i, g) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiply_then_reduce_inverse_pair() {
        let a = BraidWord::new(3, vec![1]).unwrap();
        let b = BraidWord::new(3, vec![-1]).unwrap();
        assert!(a.multiply(&b).unwrap().free_reduced().is_empty());
    }

    #[test]
    fn invert_reverses_and_negates() {
        let w = BraidWord::new(3, vec![1, 2]).unwrap();
        assert_eq!(w.inverse().letters(), &[-2, -1]);
    }

    #[test]
    fn free_reduce_nested() {
        let w = BraidWord::new(3, vec![1, -2, 2, -1]).unwrap();
        assert!(w.free_reduced().is_empty());
    }

    #[test]
    fn strand_mismatch_rejected() {
        let a = BraidWord::new(3, vec![1]).unwrap();
        let b = BraidWord::new(4, vec![1]).unwrap();
        assert!(matches!(
            a.multiply(&b),
            Err(Error::StrandMismatch { .. })
        ));
    }

    #[test]
    fn letter_range_validated() {
        assert!(BraidWord::new(3, vec![3]).is_err());
        assert!(BraidWord::new(3, vec![0]).is_err());
        assert!(BraidWord::new(1, vec![]).is_ok());
        assert!(BraidWord::new(1, vec![1]).is_err());
    }

    #[test]
    fn delta_small_cases() {
        assert_eq!(BraidWord::delta(2).unwrap().letters(), &[1]);
        assert_eq!(BraidWord::delta(3).unwrap().letters(), &[1, 2, 1]);
        assert_eq!(BraidWord::delta_power(2, 2).unwrap().letters(), &[1, 1]);
        assert!(BraidWord::delta(1).is_err());
    }

    #[test]
    fn delta_squared_exponent_sum() {
        for d in 2..=7 {
            let w = BraidWord::delta_power(d, 2).unwrap();
            assert_eq!(w.exponent_sum(), (d * (d - 1)) as i64);
        }
    }

    #[test]
    fn band_generator_adjacent_is_generator() {
        let w = BraidWord::band_generator(3, 1, 2).unwrap();
        assert_eq!(w.letters(), &[1]);
    }

    #[test]
    fn band_generator_word_and_permutation() {
        let w = BraidWord::band_generator(3, 1, 3).unwrap();
        assert_eq!(w.letters(), &[2, 1, -2]);
        assert_eq!(w.underlying_permutation().as_transposition(), Some((1, 3)));
        assert_eq!(w.exponent_sum(), 1);

        let w = BraidWord::band_generator(4, 2, 4).unwrap();
        assert_eq!(w.underlying_permutation().as_transposition(), Some((2, 4)));
    }

    #[test]
    fn permutation_image_examples() {
        let w = BraidWord::new(3, vec![1, 2, 1]).unwrap();
        assert_eq!(w.underlying_permutation().as_transposition(), Some((1, 3)));
        assert!(BraidWord::identity(3).underlying_permutation().is_identity());
        let sq = BraidWord::new(3, vec![1, 1]).unwrap();
        assert!(sq.underlying_permutation().is_identity());
    }

    #[test]
    fn exponent_sum_counts_signs() {
        let w = BraidWord::new(3, vec![2, 1, -2]).unwrap();
        assert_eq!(w.exponent_sum(), 1);
        assert_eq!(BraidWord::identity(4).exponent_sum(), 0);
    }
}
