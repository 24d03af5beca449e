//! Factorizations of the central element `Delta^{2n}` into powers of half
//! twists, and the moves that preserve the factored product: Hurwitz moves,
//! global and partial conjugation, stabilization by the standard
//! factorization, concatenation (fiber sum), and creation/cancellation of
//! node pairs.
//!
//! A factor is stored in conjugator-exponent form `(c, e)`, denoting the
//! braid `c sigma_1^e c^{-1}`. The exponent classifies the local model:
//! `+1` tangency, `+2` positive node, `-2` negative node, `+3` cusp. The
//! realized braid is what every equality, key and audit is computed from;
//! the stored conjugator word is only a witness.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::garside::{normal_form, words_equal, CanonicalForm};
use crate::monodromy::{branch_images, disjoint_transpositions, MonodromyMorphism};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    Tangency,
    PositiveNode,
    NegativeNode,
    Cusp,
}

impl FactorKind {
    pub fn exponent(self) -> i32 {
        match self {
            FactorKind::Tangency => 1,
            FactorKind::PositiveNode => 2,
            FactorKind::NegativeNode => -2,
            FactorKind::Cusp => 3,
        }
    }

    pub fn from_exponent(e: i32) -> Option<FactorKind> {
        match e {
            1 => Some(FactorKind::Tangency),
            2 => Some(FactorKind::PositiveNode),
            -2 => Some(FactorKind::NegativeNode),
            3 => Some(FactorKind::Cusp),
            _ => None,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Factor {
    conjugator: BraidWord,
    kind: FactorKind,
}

impl Factor {
    pub fn new(conjugator: BraidWord, kind: FactorKind) -> Result<Self> {
        if conjugator.strands() < 2 {
            return Err(Error::TooFewStrands {
                needed: 2,
                got: conjugator.strands(),
            });
        }
        Ok(Factor { conjugator, kind })
    }

    /// A factor realizing a power of the standard generator `sigma_i`.
    pub fn of_generator(strands: usize, i: usize, kind: FactorKind) -> Result<Self> {
        // sigma_i = c_i sigma_1 c_i^{-1} with
        // c_i = (s_{i-1} s_i)(s_{i-2} s_{i-1}) .. (s_1 s_2)
        if i == 0 || i >= strands {
            return Err(Error::StrandIndexOutOfRange {
                index: i,
                strands,
            });
        }
        let mut letters = Vec::new();
        for j in (2..=i).rev() {
            letters.push((j - 1) as i32);
            letters.push(j as i32);
        }
        Factor::new(BraidWord::new(strands, letters)?, kind)
    }

    /// A factor realizing a power of the band half twist `a_{s,t}`.
    pub fn of_band(strands: usize, s: usize, t: usize, kind: FactorKind) -> Result<Self> {
        if s == 0 || t <= s || t > strands {
            return Err(Error::StrandIndexOutOfRange {
                index: t.max(s),
                strands,
            });
        }
        // a_{s,t} = P sigma_s P^{-1} with P = s_{t-1} .. s_{s+1}
        let mut letters: Vec<i32> = ((s + 1)..t).rev().map(|i| i as i32).collect();
        let base = Factor::of_generator(strands, s, kind)?;
        letters.extend_from_slice(base.conjugator.letters());
        Factor::new(BraidWord::new(strands, letters)?, kind)
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn exponent(&self) -> i32 {
        self.kind.exponent()
    }

    /// The braid `c sigma_1^e c^{-1}` as a word.
    pub fn realized(&self) -> BraidWord {
        let d = self.strands();
        let core = BraidWord::generator(d, 1)
            .expect("d >= 2")
            .pow(self.kind.exponent());
        core.conjugated_by(&self.conjugator)
            .expect("same strand count")
            .free_reduced()
    }

    /// Normal form of the realized braid, computed through form arithmetic
    /// so long conjugator words do not blow up intermediate products.
    pub fn realized_form(&self) -> CanonicalForm {
        let d = self.strands();
        let c = normal_form(&self.conjugator);
        let core = normal_form(
            &BraidWord::generator(d, 1)
                .expect("d >= 2")
                .pow(self.kind.exponent()),
        );
        core.conjugated_by(&c).expect("same strand count")
    }

    /// The transposition exchanged by the underlying half twist, identity
    /// for node factors.
    pub fn underlying_permutation(&self) -> Permutation {
        self.realized().underlying_permutation()
    }

    fn conjugated_by_word(&self, left: &BraidWord) -> Result<Factor> {
        let conjugator = compact_conjugator(left.multiply(&self.conjugator)?);
        Factor::new(conjugator, self.kind)
    }
}

impl fmt::Debug for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Factor(e={:+}, c={:?})",
            self.kind.exponent(),
            self.conjugator
        )
    }
}

/// Shortens a conjugator word without changing the braid it represents:
/// free reduction always, and the canonical word when that is shorter.
pub(crate) fn compact_conjugator(word: BraidWord) -> BraidWord {
    let reduced = word.free_reduced();
    if reduced.len() <= 8 {
        return reduced;
    }
    let canonical = normal_form(&reduced).to_word();
    if canonical.len() < reduced.len() {
        canonical
    } else {
        reduced
    }
}

/// Factor counts by kind: tangencies, positive nodes, negative nodes, cusps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Profile {
    pub tangencies: i64,
    pub nodes_pos: i64,
    pub nodes_neg: i64,
    pub cusps: i64,
}

impl Profile {
    pub fn add(&self, other: &Profile) -> Profile {
        Profile {
            tangencies: self.tangencies + other.tangencies,
            nodes_pos: self.nodes_pos + other.nodes_pos,
            nodes_neg: self.nodes_neg + other.nodes_neg,
            cusps: self.cusps + other.cusps,
        }
    }

    /// Total exponent sum contributed by the factors.
    pub fn exponent_total(&self) -> i64 {
        self.tangencies + 2 * self.nodes_pos - 2 * self.nodes_neg + 3 * self.cusps
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "(tau={}, nu+={}, nu-={}, kappa={})",
            self.tangencies, self.nodes_pos, self.nodes_neg, self.cusps
        )
    }
}

/// Which side a Hurwitz move rewrites towards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn opposite(self) -> Direction {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Direction::Left => write!(f, "left"),
            Direction::Right => write!(f, "right"),
        }
    }
}

/// An ordered factorization with declared target `Delta^{2n}` in `B_d`.
///
/// The target equation is checked by [`Factorization::verify_target`], not
/// assumed; defective factorizations can be constructed, audited and
/// repaired.
#[derive(Clone, PartialEq, Eq)]
pub struct Factorization {
    strands: usize,
    half_turns: u32,
    factors: Vec<Factor>,
}

impl Factorization {
    pub fn new(strands: usize, half_turns: u32, factors: Vec<Factor>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands {
                needed: 2,
                got: strands,
            });
        }
        if half_turns == 0 {
            return Err(Error::InvalidHalfTurns);
        }
        for factor in &factors {
            if factor.strands() != strands {
                return Err(Error::StrandMismatch {
                    left: strands,
                    right: factor.strands(),
                });
            }
        }
        Ok(Factorization {
            strands,
            half_turns,
            factors,
        })
    }

    /// The standard factorization of `Delta^2` into `d(d-1)` tangency
    /// factors: the word `(s_1 .. s_{d-1})` repeated `d` times, one letter
    /// per factor.
    pub fn standard(strands: usize) -> Result<Self> {
        let mut factors = Vec::with_capacity(strands * (strands - 1));
        for _ in 0..strands {
            for i in 1..strands {
                factors.push(Factor::of_generator(strands, i, FactorKind::Tangency)?);
            }
        }
        Factorization::new(strands, 1, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn half_turns(&self) -> u32 {
        self.half_turns
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of the realized factor words, left to right.
    pub fn evaluate(&self) -> BraidWord {
        let mut letters = Vec::new();
        for factor in &self.factors {
            letters.extend_from_slice(factor.realized().letters());
        }
        BraidWord::new(self.strands, letters)
            .expect("factors validated")
            .free_reduced()
    }

    /// The declared target `Delta^{2n}`.
    pub fn target(&self) -> BraidWord {
        BraidWord::delta_power(self.strands, 2 * self.half_turns as i32).expect("d >= 2")
    }

    /// Normal forms of the realized factors, in order.
    pub fn realized_forms(&self) -> Vec<CanonicalForm> {
        self.factors.iter().map(Factor::realized_form).collect()
    }

    /// Whether the factored product equals `Delta^{2n}`.
    pub fn verify_target(&self) -> bool {
        let mut product = CanonicalForm::identity(self.strands);
        for factor in &self.factors {
            product = product
                .mul(&factor.realized_form())
                .expect("consistent strand count");
        }
        product == normal_form(&self.target())
    }

    pub fn profile(&self) -> Profile {
        let mut profile = Profile::default();
        for factor in &self.factors {
            match factor.kind() {
                FactorKind::Tangency => profile.tangencies += 1,
                FactorKind::PositiveNode => profile.nodes_pos += 1,
                FactorKind::NegativeNode => profile.nodes_neg += 1,
                FactorKind::Cusp => profile.cusps += 1,
            }
        }
        profile
    }

    /// Abelianized audit: the factor exponents must sum to the exponent sum
    /// of `Delta^{2n}`, which is `n d(d-1)`.
    pub fn exponent_audit(&self) -> bool {
        let d = self.strands as i64;
        self.profile().exponent_total() == self.half_turns as i64 * d * (d - 1)
    }

    fn check_position(&self, position: usize, bound: usize) -> Result<()> {
        if position == 0 || position > bound {
            return Err(Error::PositionOutOfRange { position, bound });
        }
        Ok(())
    }

    /// The elementary move at 1-based position `i < r`.
    ///
    /// `Right` replaces `(a, b)` by `(a b a^{-1}, a)`; `Left` is its inverse,
    /// replacing `(a, b)` by `(b, b^{-1} a b)`. The product and the profile
    /// are unchanged.
    pub fn hurwitz_move(&self, position: usize, direction: Direction) -> Result<Factorization> {
        self.check_position(position, self.len().saturating_sub(1))?;
        let a = &self.factors[position - 1];
        let b = &self.factors[position];
        let (new_a, new_b) = match direction {
            Direction::Right => (b.conjugated_by_word(&a.realized())?, a.clone()),
            Direction::Left => (b.clone(), a.conjugated_by_word(&b.realized().inverse())?),
        };
        let mut factors = self.factors.clone();
        factors[position - 1] = new_a;
        factors[position] = new_b;
        Factorization::new(self.strands, self.half_turns, factors)
    }

    /// Conjugates every factor by `b`; the product `Delta^{2n}` is central,
    /// so the target is preserved.
    pub fn global_conjugate(&self, b: &BraidWord) -> Result<Factorization> {
        if b.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: b.strands(),
            });
        }
        let left = b.inverse();
        let factors = self
            .factors
            .iter()
            .map(|f| f.conjugated_by_word(&left))
            .collect::<Result<Vec<_>>>()?;
        Factorization::new(self.strands, self.half_turns, factors)
    }

    /// Conjugates the consecutive block `p..=q` by `b`, which must commute
    /// with the block product; rejected otherwise.
    pub fn partial_conjugate(
        &self,
        p: usize,
        q: usize,
        b: &BraidWord,
    ) -> Result<Factorization> {
        self.check_position(p, self.len())?;
        self.check_position(q, self.len())?;
        if p > q {
            return Err(Error::PositionOutOfRange {
                position: p,
                bound: q,
            });
        }
        if b.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: b.strands(),
            });
        }
        let mut block = BraidWord::identity(self.strands);
        for factor in &self.factors[p - 1..q] {
            block = block.multiply(&factor.realized())?;
        }
        if !words_equal(&block.multiply(b)?, &b.multiply(&block)?)? {
            return Err(Error::BlockDoesNotCommute);
        }
        let left = b.inverse();
        let mut factors = self.factors.clone();
        for factor in factors[p - 1..q].iter_mut() {
            *factor = factor.conjugated_by_word(&left)?;
        }
        Factorization::new(self.strands, self.half_turns, factors)
    }

    /// Appends `n` copies of the standard factorization, raising the target
    /// to `Delta^{2(n0+n)}`.
    pub fn stabilized(&self, n: u32) -> Result<Factorization> {
        let standard = Factorization::standard(self.strands)?;
        let mut factors = self.factors.clone();
        for _ in 0..n {
            factors.extend(standard.factors.iter().cloned());
        }
        Factorization::new(self.strands, self.half_turns + n, factors)
    }

    /// Fiber sum: factors of `self` followed by factors of `other`. When a
    /// monodromy morphism is supplied, both halves must be liftable for it.
    pub fn concatenate(
        &self,
        other: &Factorization,
        theta: Option<&MonodromyMorphism>,
    ) -> Result<Factorization> {
        if other.strands != self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        if let Some(theta) = theta {
            if !(self.is_liftable(theta)? && other.is_liftable(theta)?) {
                return Err(Error::ThetaIncompatible);
            }
        }
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Factorization::new(self.strands, self.half_turns + other.half_turns, factors)
    }

    /// Inserts a cancelling node pair `(c1, +2), (c2, -2)` at 1-based
    /// position `i`. The two realized factors must be inverse to each other;
    /// when a monodromy morphism is supplied, the images of the two
    /// geometric generators at the crossing must be disjoint transpositions.
    pub fn create_node_pair(
        &self,
        position: usize,
        c1: &BraidWord,
        c2: Option<&BraidWord>,
        theta: Option<&MonodromyMorphism>,
    ) -> Result<Factorization> {
        self.check_position(position, self.len() + 1)?;
        let c2 = c2.unwrap_or(c1);
        let pos = Factor::new(c1.clone(), FactorKind::PositiveNode)?;
        let neg = Factor::new(c2.clone(), FactorKind::NegativeNode)?;
        if pos.strands() != self.strands || neg.strands() != self.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: c1.strands(),
            });
        }
        let product = pos.realized().multiply(&neg.realized())?;
        if !words_equal(&product, &BraidWord::identity(self.strands))? {
            return Err(Error::NodePairNotInverse);
        }
        if let Some(theta) = theta {
            let (first, second) = branch_images(theta, c1)?;
            if !disjoint_transpositions(&first, &second)? {
                return Err(Error::NodeCreationInadmissible {
                    first: first.to_string(),
                    second: second.to_string(),
                });
            }
        }
        let mut factors = self.factors.clone();
        factors.insert(position - 1, neg);
        factors.insert(position - 1, pos);
        Factorization::new(self.strands, self.half_turns, factors)
    }

    /// Removes the node pair at positions `i, i+1`, which must be one
    /// positive and one negative node multiplying to the identity.
    pub fn cancel_node_pair(&self, position: usize) -> Result<Factorization> {
        self.check_position(position, self.len().saturating_sub(1))?;
        let a = &self.factors[position - 1];
        let b = &self.factors[position];
        let kinds = (a.kind(), b.kind());
        let node_pair = matches!(
            kinds,
            (FactorKind::PositiveNode, FactorKind::NegativeNode)
                | (FactorKind::NegativeNode, FactorKind::PositiveNode)
        );
        let cancels = node_pair
            && words_equal(
                &a.realized().multiply(&b.realized())?,
                &BraidWord::identity(self.strands),
            )?;
        if !cancels {
            return Err(Error::NotACancellingPair {
                position,
                next: position + 1,
            });
        }
        let mut factors = self.factors.clone();
        factors.drain(position - 1..=position);
        Factorization::new(self.strands, self.half_turns, factors)
    }

    /// Whether every realized factor lies in the liftable subgroup of the
    /// morphism.
    pub fn is_liftable(&self, theta: &MonodromyMorphism) -> Result<bool> {
        if theta.degree() != self.strands {
            return Err(Error::DegreeMismatch {
                theta: theta.degree(),
                braid: self.strands,
            });
        }
        for factor in &self.factors {
            if !theta.is_liftable(&factor.realized())? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Deterministic key: strand count plus the normal form of every
    /// realized factor. Two factorizations get the same key exactly when
    /// they have the same length and factor-wise equal braids.
    pub fn canonical_key(&self) -> FactorizationKey {
        FactorizationKey::from_forms(self.strands, &self.realized_forms())
    }

    /// Applies `count` pseudo-random Hurwitz moves drawn from a seeded
    /// generator; deterministic for a fixed seed.
    pub fn scramble(&self, count: usize, seed: u64) -> Result<Factorization> {
        if self.len() < 2 {
            return Ok(self.clone());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut current = self.clone();
        for _ in 0..count {
            let position = rng.gen_range(1..self.len());
            let direction = if rng.gen_bool(0.5) {
                Direction::Right
            } else {
                Direction::Left
            };
            current = current.hurwitz_move(position, direction)?;
        }
        Ok(current)
    }

    /// Factor-wise braid equality (same kinds, same realized braids).
    pub fn equal_as_braids(&self, other: &Factorization) -> bool {
        self.strands == other.strands
            && self.half_turns == other.half_turns
            && self.canonical_key() == other.canonical_key()
    }
}

impl fmt::Debug for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Factorization(d={}, n={}, r={})",
            self.strands,
            self.half_turns,
            self.len()
        )
    }
}

/// Opaque deduplication key for factor sequences; the serialized form is
/// stable across runs.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactorizationKey(String);

impl FactorizationKey {
    pub(crate) fn from_forms(strands: usize, forms: &[CanonicalForm]) -> Self {
        FactorizationKey::from_forms_iter(strands, forms.iter())
    }

    pub(crate) fn from_forms_iter<'a>(
        strands: usize,
        forms: impl Iterator<Item = &'a CanonicalForm>,
    ) -> Self {
        let mut s = format!("d{strands}");
        for form in forms {
            s.push('|');
            s.push_str(&form.key_string());
        }
        FactorizationKey(s)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for FactorizationKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Bounded recognizer for raw import: searches conjugators of canonical
/// length at most `bound` writing `w = c sigma_1^e c^{-1}`, with `e`
/// determined by the exponent sum. Returns `None` when the search is
/// exhausted without a witness, which does not certify failure.
pub fn recognize_half_twist_power(w: &BraidWord, bound: usize) -> Option<Factor> {
    let e = i32::try_from(w.exponent_sum()).ok()?;
    let kind = FactorKind::from_exponent(e)?;
    let target = normal_form(w);
    for c in crate::garside::bounded_conjugators(w.strands(), bound) {
        let candidate = Factor::new(c, kind).ok()?;
        if candidate.realized_form() == target {
            return Some(candidate);
        }
    }
    None
}
