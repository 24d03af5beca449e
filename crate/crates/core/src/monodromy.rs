//! The Artin action of `B_d` on the free group of rank `d`, monodromy
//! morphisms with values in a symmetric group, and the liftable braid
//! subgroup test.
//!
//! Conventions, fixed once and used everywhere:
//!
//! - `sigma_i` acts on generators by `x_i -> x_i x_{i+1} x_i^{-1}`,
//!   `x_{i+1} -> x_i`, fixing the others;
//! - `(b1 b2)_* = (b1)_* . (b2)_*` as maps, i.e. the automorphism of the
//!   right factor is applied first;
//! - a morphism `theta` is evaluated on `b_*(x_i)` to build `theta . b_*`.
//!
//! Every braid automorphism fixes the boundary word `x_1 x_2 .. x_d`, which
//! is why morphisms whose images multiply to the identity stay closed under
//! the induced action.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::free_group::FreeGroupWord;
use crate::perm::Permutation;

fn apply_generator(i: usize, positive: bool, w: &FreeGroupWord) -> FreeGroupWord {
    let rank = w.rank();
    let mut letters: Vec<i32> = Vec::with_capacity(w.letters().len() * 3);
    let gi = i as i32;
    let gj = (i + 1) as i32;
    for &g in w.letters() {
        let abs = g.abs();
        let (buf, n): ([i32; 3], usize) = if positive {
            if abs == gi {
                // x_i -> x_i x_{i+1} x_i^{-1}
                ([gi, gj, -gi], 3)
            } else if abs == gj {
                ([gi, 0, 0], 1)
            } else {
                ([abs, 0, 0], 1)
            }
        } else if abs == gi {
            ([gj, 0, 0], 1)
        } else if abs == gj {
            // x_{i+1} -> x_{i+1}^{-1} x_i x_{i+1}
            ([-gj, gi, gj], 3)
        } else {
            ([abs, 0, 0], 1)
        };
        let image = &buf[..n];
        if g > 0 {
            letters.extend_from_slice(image);
        } else {
            letters.extend(image.iter().rev().map(|&h| -h));
        }
    }
    FreeGroupWord::new(rank, letters).expect("image letters stay in range")
}

/// The automorphism of the free group induced by a braid, applied to `w`.
pub fn artin_action(b: &BraidWord, w: &FreeGroupWord) -> Result<FreeGroupWord> {
    if b.strands() != w.rank() {
        return Err(Error::RankMismatch {
            left: b.strands(),
            right: w.rank(),
        });
    }
    let mut out = w.clone();
    // (l_1 .. l_m)_* = (l_1)_* . .. . (l_m)_*, so the last letter acts first
    for &g in b.letters().iter().rev() {
        out = apply_generator(g.unsigned_abs() as usize, g > 0, &out);
    }
    Ok(out)
}

/// A symmetric-group valued monodromy morphism: one permutation image in
/// `S_N` per geometric generator `x_1 .. x_d`.
///
/// Validity (transposition images, transitivity, closed-fiber product) is
/// reported by [`MonodromyMorphism::validate`] rather than enforced on
/// construction, so that defective data can be loaded and diagnosed.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonodromyMorphism {
    sheets: usize,
    images: Vec<Permutation>,
}

impl MonodromyMorphism {
    pub fn new(sheets: usize, images: Vec<Permutation>) -> Result<Self> {
        for p in &images {
            if p.size() != sheets {
                return Err(Error::InvalidPermutation {
                    reason: format!("image acts on {} points, expected {sheets}", p.size()),
                });
            }
        }
        Ok(MonodromyMorphism { sheets, images })
    }

    /// Builds images from 1-based transposition pairs.
    pub fn from_transpositions(sheets: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let images = pairs
            .iter()
            .map(|&(a, b)| Permutation::transposition(sheets, a, b))
            .collect::<Result<Vec<_>>>()?;
        MonodromyMorphism::new(sheets, images)
    }

    /// Number of geometric generators (the degree `d` of the branch curve).
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Number of sheets `N` of the covering.
    pub fn sheets(&self) -> usize {
        self.sheets
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    /// Evaluates the morphism on a free-group word.
    pub fn evaluate(&self, w: &FreeGroupWord) -> Result<Permutation> {
        if w.rank() != self.degree() {
            return Err(Error::RankMismatch {
                left: w.rank(),
                right: self.degree(),
            });
        }
        let mut out = Permutation::identity(self.sheets);
        for &g in w.letters() {
            let img = &self.images[g.unsigned_abs() as usize - 1];
            if g > 0 {
                out = out.then(img);
            } else {
                out = out.then(&img.inverse());
            }
        }
        Ok(out)
    }

    fn check_braid(&self, b: &BraidWord) -> Result<()> {
        if b.strands() != self.degree() {
            return Err(Error::DegreeMismatch {
                theta: self.degree(),
                braid: b.strands(),
            });
        }
        Ok(())
    }

    /// The composite `theta . b_*`, i.e. the morphism sending `x_i` to
    /// `theta(b_*(x_i))`.
    ///
    /// Computed by folding the letters of `b` into the image tuple directly:
    /// for `psi = theta . (l_1 .. l_k)_*`, appending a letter `sigma_j`
    /// replaces `(psi(x_j), psi(x_{j+1}))` by
    /// `(psi(x_j) psi(x_{j+1}) psi(x_j)^{-1}, psi(x_j))`, and the inverse
    /// letter acts inversely. No free-group words are materialized, so the
    /// cost is linear in the word length.
    pub fn induced_by(&self, b: &BraidWord) -> Result<MonodromyMorphism> {
        self.check_braid(b)?;
        let mut images = self.images.clone();
        for &g in b.letters() {
            let j = g.unsigned_abs() as usize - 1;
            if g > 0 {
                let conjugated = images[j + 1]
                    .conjugated(&images[j].inverse());
                images[j + 1] = images[j].clone();
                images[j] = conjugated;
            } else {
                let conjugated = images[j].conjugated(&images[j + 1]);
                images[j] = images[j + 1].clone();
                images[j + 1] = conjugated;
            }
        }
        MonodromyMorphism::new(self.sheets, images)
    }

    /// Whether `b` lies in the liftable subgroup: `theta . b_* = theta`
    /// image by image.
    pub fn is_liftable(&self, b: &BraidWord) -> Result<bool> {
        Ok(self.induced_by(b)? == *self)
    }

    /// Equality after an optional simultaneous relabelling of the sheets,
    /// i.e. up to conjugation in `S_N`.
    pub fn equal_up_to_conjugation(&self, other: &MonodromyMorphism) -> bool {
        if self.sheets != other.sheets || self.degree() != other.degree() {
            return false;
        }
        // backtracking over sheet relabellings g with g^{-1} a_i g = b_i
        fn extend(
            a: &[Permutation],
            b: &[Permutation],
            n: usize,
            map: &mut Vec<Option<usize>>,
            used: &mut Vec<bool>,
            point: usize,
        ) -> bool {
            if point > n {
                // verify the completed relabelling
                let images: Vec<usize> = map.iter().map(|m| m.unwrap()).collect();
                let g = Permutation::from_images(&images).unwrap();
                return a
                    .iter()
                    .zip(b.iter())
                    .all(|(ai, bi)| ai.conjugated(&g) == *bi);
            }
            for target in 1..=n {
                if used[target - 1] {
                    continue;
                }
                // cheap consistency filter: relabelling must match images
                let consistent = a.iter().zip(b.iter()).all(|(ai, bi)| {
                    let im_a = ai.apply(point);
                    if let Some(mapped) = map[im_a - 1] {
                        bi.apply(target) == mapped
                    } else {
                        true
                    }
                });
                if !consistent {
                    continue;
                }
                map[point - 1] = Some(target);
                used[target - 1] = true;
                if extend(a, b, n, map, used, point + 1) {
                    return true;
                }
                map[point - 1] = None;
                used[target - 1] = false;
            }
            false
        }
        let n = self.sheets;
        let mut map = vec![None; n];
        let mut used = vec![false; n];
        extend(&self.images, &other.images, n, &mut map, &mut used, 1)
    }

    /// Validation report for the branched-cover conditions.
    pub fn validate(&self) -> MonodromyReport {
        let all_transpositions = self.images.iter().all(|p| p.as_transposition().is_some());
        let transitive = self.is_transitive();
        // a set of transpositions generates the full symmetric group exactly
        // when its graph on the sheets is connected
        let surjective = all_transpositions && transitive && self.sheets >= 2;
        let product = self
            .images
            .iter()
            .fold(Permutation::identity(self.sheets), |acc, p| acc.then(p));
        MonodromyReport {
            all_transpositions,
            transitive,
            surjective,
            product_is_identity: product.is_identity(),
            degree_even: self.degree() % 2 == 0,
        }
    }

    fn is_transitive(&self) -> bool {
        let n = self.sheets;
        if n == 0 {
            return false;
        }
        let mut reached = vec![false; n + 1];
        let mut stack = vec![1usize];
        reached[1] = true;
        while let Some(p) = stack.pop() {
            for img in &self.images {
                for q in [img.apply(p), img.inverse().apply(p)] {
                    if !reached[q] {
                        reached[q] = true;
                        stack.push(q);
                    }
                }
            }
        }
        (1..=n).all(|p| reached[p])
    }
}

impl fmt::Debug for MonodromyMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonodromyMorphism(N={};", self.sheets)?;
        for img in &self.images {
            write!(f, " {img}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonodromyReport {
    pub all_transpositions: bool,
    pub transitive: bool,
    pub surjective: bool,
    pub product_is_identity: bool,
    pub degree_even: bool,
}

impl MonodromyReport {
    pub fn is_valid(&self) -> bool {
        self.all_transpositions
            && self.transitive
            && self.surjective
            && self.product_is_identity
            && self.degree_even
    }
}

/// Genus of the fiber of the associated Lefschetz pencil: a degree-`N`
/// cover of a line, simply branched at the `d` intersection points.
pub fn fiber_genus(d: i64, sheets: i64) -> Result<i64> {
    if d % 2 != 0 {
        return Err(Error::FiberGenusUndefined {
            reason: format!("degree {d} is odd"),
        });
    }
    let g2 = d - 2 * sheets + 2;
    if g2 < 0 {
        return Err(Error::FiberGenusUndefined {
            reason: format!("degree {d} below 2N-2 = {}", 2 * sheets - 2),
        });
    }
    Ok(g2 / 2)
}

/// Whether two transpositions move disjoint pairs of points.
pub fn disjoint_transpositions(t1: &Permutation, t2: &Permutation) -> Result<bool> {
    let (a, b) = t1
        .as_transposition()
        .ok_or_else(|| Error::NotATransposition(t1.to_string()))?;
    let (c, d) = t2
        .as_transposition()
        .ok_or_else(|| Error::NotATransposition(t2.to_string()))?;
    Ok(a != c && a != d && b != c && b != d)
}

/// Images under `theta` of the two geometric generators carried along a
/// conjugating braid: `theta(c_*(x_1))` and `theta(c_*(x_2))`. These are the
/// branch data of the two strands exchanged by the half twist `c s1 c^{-1}`.
pub fn branch_images(
    theta: &MonodromyMorphism,
    c: &BraidWord,
) -> Result<(Permutation, Permutation)> {
    let induced = theta.induced_by(c)?;
    Ok((induced.images()[0].clone(), induced.images()[1].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn braid(d: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(d, letters.to_vec()).unwrap()
    }

    #[test]
    fn generator_action_on_adjacent() {
        let x1 = FreeGroupWord::generator(2, 1).unwrap();
        let moved = artin_action(&braid(2, &[1]), &x1).unwrap();
        assert_eq!(moved.letters(), &[1, 2, -1]);
    }

    #[test]
    fn generator_action_fixes_disjoint() {
        let x3 = FreeGroupWord::generator(4, 3).unwrap();
        let moved = artin_action(&braid(4, &[1]), &x3).unwrap();
        assert_eq!(moved, x3);
    }

    #[test]
    fn inverse_composition_is_identity() {
        let w = FreeGroupWord::new(3, vec![1, -2, 3, 3]).unwrap();
        let moved = artin_action(&braid(3, &[1, -1]), &w).unwrap();
        assert_eq!(moved, w);
        let back = artin_action(
            &braid(3, &[-2]),
            &artin_action(&braid(3, &[2]), &w).unwrap(),
        )
        .unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn boundary_word_is_fixed() {
        for letters in [vec![1], vec![2], vec![-1, 2, 2], vec![1, 2, 1, -2]] {
            let b = braid(3, &letters);
            let boundary = FreeGroupWord::boundary(3);
            assert_eq!(artin_action(&b, &boundary).unwrap(), boundary);
        }
    }

    fn theta_d4_n3() -> MonodromyMorphism {
        MonodromyMorphism::from_transpositions(3, &[(1, 2), (1, 3), (1, 3), (1, 2)]).unwrap()
    }

    #[test]
    fn identity_braid_induces_same_morphism() {
        let theta = theta_d4_n3();
        assert_eq!(theta.induced_by(&BraidWord::identity(4)).unwrap(), theta);
    }

    #[test]
    fn induced_agrees_with_the_free_word_route() {
        let theta = theta_d4_n3();
        for letters in [
            vec![1],
            vec![-3],
            vec![2, 2, -1],
            vec![1, 2, 3, -2, 1],
            vec![-1, -1, 3, 2],
        ] {
            let b = braid(4, &letters);
            let induced = theta.induced_by(&b).unwrap();
            for i in 1..=4 {
                let moved = artin_action(&b, &FreeGroupWord::generator(4, i).unwrap()).unwrap();
                assert_eq!(
                    theta.evaluate(&moved).unwrap(),
                    induced.images()[i - 1],
                    "letters {letters:?}, generator {i}"
                );
            }
        }
    }

    #[test]
    fn two_sheet_morphism_absorbs_everything() {
        let theta = MonodromyMorphism::from_transpositions(2, &[(1, 2), (1, 2)]).unwrap();
        assert_eq!(theta.induced_by(&braid(2, &[1])).unwrap(), theta);
        assert!(theta.is_liftable(&braid(2, &[1, 1, -1, 1])).unwrap());
    }

    #[test]
    fn sigma1_fails_to_lift_for_overlapping_images() {
        let theta = theta_d4_n3();
        assert!(!theta.is_liftable(&braid(4, &[1])).unwrap());
        // sigma_2 sits over two equal transpositions, so it lifts
        assert!(theta.is_liftable(&braid(4, &[2])).unwrap());
        let induced = theta.induced_by(&braid(4, &[1])).unwrap();
        let expected = Permutation::transposition(3, 2, 3).unwrap();
        assert_eq!(induced.images()[0], expected);
    }

    #[test]
    fn validation_flags() {
        let good = MonodromyMorphism::from_transpositions(3, &[(1, 2), (1, 2), (1, 3), (1, 3)])
            .unwrap();
        let report = good.validate();
        assert!(report.is_valid());

        let odd = MonodromyMorphism::from_transpositions(2, &[(1, 2), (1, 2), (1, 2)]).unwrap();
        let report = odd.validate();
        assert!(!report.product_is_identity);
        assert!(!report.degree_even);
        assert!(!report.is_valid());

        let intransitive =
            MonodromyMorphism::from_transpositions(4, &[(1, 2), (1, 2), (3, 4), (3, 4)]).unwrap();
        assert!(!intransitive.validate().transitive);
    }

    #[test]
    fn conjugation_equality_mode() {
        let a = MonodromyMorphism::from_transpositions(3, &[(1, 2), (1, 3), (1, 3), (1, 2)])
            .unwrap();
        let b = MonodromyMorphism::from_transpositions(3, &[(1, 3), (1, 2), (1, 2), (1, 3)])
            .unwrap();
        assert_ne!(a, b);
        assert!(a.equal_up_to_conjugation(&b)); // relabel 2 <-> 3
        let c = MonodromyMorphism::from_transpositions(3, &[(1, 2), (1, 2), (1, 3), (1, 3)])
            .unwrap();
        assert!(!a.equal_up_to_conjugation(&c));
    }

    #[test]
    fn fiber_genus_cases() {
        assert_eq!(fiber_genus(2, 2).unwrap(), 0);
        assert_eq!(fiber_genus(6, 2).unwrap(), 2);
        for n in 2..=6 {
            assert_eq!(fiber_genus(2 * n - 2, n).unwrap(), 0);
        }
        assert!(fiber_genus(5, 2).is_err());
        assert!(fiber_genus(2, 4).is_err());
    }

    #[test]
    fn disjointness_of_transpositions() {
        let t = |a, b| Permutation::transposition(6, a, b).unwrap();
        assert!(disjoint_transpositions(&t(1, 2), &t(3, 4)).unwrap());
        assert!(!disjoint_transpositions(&t(1, 2), &t(2, 3)).unwrap());
        assert!(!disjoint_transpositions(&t(1, 2), &t(1, 2)).unwrap());
        let cycle = Permutation::from_images(&[2, 3, 1, 4, 5, 6]).unwrap();
        assert!(disjoint_transpositions(&cycle, &t(1, 2)).is_err());
    }
}
