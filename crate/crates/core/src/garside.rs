//! Garside left-greedy normal forms in the braid group `B_d`.
//!
//! Every braid has a unique expression `Delta^k s_1 .. s_l` where `k` is
//! maximal (the infimum), each `s_i` is a simple element (a permutation
//! braid) different from the identity and from `Delta`, and each adjacent
//! pair is left-weighted. Simple elements are stored as the permutations
//! they induce: a permutation braid crosses strands `i < j` exactly once
//! when the permutation reverses their order, so the correspondence is a
//! bijection.
//!
//! Two words represent the same braid exactly when their normal forms agree
//! component-wise, which makes [`CanonicalForm`] the equality oracle and the
//! hash key for every structure built on top of it.

use std::fmt;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The permutation of the half twist: `i -> d + 1 - i`.
pub(crate) fn delta_permutation(d: usize) -> Permutation {
    let images: Vec<usize> = (1..=d).map(|i| d + 1 - i).collect();
    Permutation::from_images(&images).expect("delta permutation")
}

/// Conjugation by `Delta` maps simple elements to simple elements; on
/// permutations it is `p -> delta . p . delta`.
fn conjugate_by_delta(p: &Permutation) -> Permutation {
    let delta = delta_permutation(p.size());
    delta.then(p).then(&delta)
}

/// `i` is in the starting set of a simple element iff its permutation has a
/// descent at `i` (the braid can be written `sigma_i * positive`).
fn in_starting_set(p: &Permutation, i: usize) -> bool {
    p.apply(i) > p.apply(i + 1)
}

/// `i` is in the finishing set iff the inverse permutation has a descent at
/// `i` (the braid can be written `positive * sigma_i`).
fn in_finishing_set_inv(p_inv: &Permutation, i: usize) -> bool {
    p_inv.apply(i) > p_inv.apply(i + 1)
}

enum Token {
    DeltaPower(i64),
    Simple(Permutation),
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

impl CanonicalForm {
    pub fn identity(strands: usize) -> Self {
        CanonicalForm {
            strands,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// The infimum `k` in `Delta^k s_1 .. s_l`.
    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    /// Canonical length: the number of simple factors.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    fn from_tokens<I: IntoIterator<Item = Token>>(strands: usize, tokens: I) -> Self {
        let mut delta_power: i64 = 0;
        let mut factors: Vec<Permutation> = Vec::new();
        for token in tokens {
            match token {
                Token::DeltaPower(e) => {
                    if e != 0 {
                        // fs * Delta^e = Delta^e * tau^e(fs)
                        delta_power += e;
                        if e % 2 != 0 {
                            for f in factors.iter_mut() {
                                *f = conjugate_by_delta(f);
                            }
                        }
                    }
                }
                Token::Simple(p) => factors.push(p),
            }
        }
        left_weight(strands, &mut delta_power, &mut factors);
        CanonicalForm {
            strands,
            delta_power,
            factors,
        }
    }

    /// Computes the normal form of a word.
    pub fn of_word(word: &BraidWord) -> Self {
        let d = word.strands();
        let delta = if d >= 2 {
            delta_permutation(d)
        } else {
            Permutation::identity(d)
        };
        let tokens = word.letters().iter().map(|&g| {
            let i = g.unsigned_abs() as usize;
            let t = Permutation::transposition(d, i, i + 1).expect("valid letter");
            if g > 0 {
                vec![Token::Simple(t)]
            } else {
                // sigma_i^{-1} = Delta^{-1} * (Delta sigma_i^{-1}), and the
                // complement Delta sigma_i^{-1} is simple with permutation
                // delta . t_i.
                vec![Token::DeltaPower(-1), Token::Simple(delta.then(&t))]
            }
        });
        CanonicalForm::from_tokens(d, tokens.flatten())
    }

    fn check_strands(&self, other: &CanonicalForm) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// Product of two normal forms, renormalized.
    pub fn mul(&self, other: &CanonicalForm) -> Result<CanonicalForm> {
        self.check_strands(other)?;
        let tokens = std::iter::once(Token::DeltaPower(self.delta_power))
            .chain(self.factors.iter().cloned().map(Token::Simple))
            .chain(std::iter::once(Token::DeltaPower(other.delta_power)))
            .chain(other.factors.iter().cloned().map(Token::Simple));
        Ok(CanonicalForm::from_tokens(self.strands, tokens))
    }

    pub fn inverse(&self) -> CanonicalForm {
        // (Delta^k f_1 .. f_l)^{-1} = f_l^{-1} .. f_1^{-1} Delta^{-k}, and
        // each f^{-1} = Delta^{-1} * simple(delta . f^{-1}).
        let d = self.strands;
        let delta = if d >= 2 {
            delta_permutation(d)
        } else {
            Permutation::identity(d)
        };
        let mut tokens = Vec::with_capacity(2 * self.factors.len() + 1);
        for f in self.factors.iter().rev() {
            tokens.push(Token::DeltaPower(-1));
            tokens.push(Token::Simple(delta.then(&f.inverse())));
        }
        tokens.push(Token::DeltaPower(-self.delta_power));
        CanonicalForm::from_tokens(d, tokens)
    }

    /// `c * self * c^{-1}`.
    pub fn conjugated_by(&self, c: &CanonicalForm) -> Result<CanonicalForm> {
        c.mul(self)?.mul(&c.inverse())
    }

    /// Reconstructs a word: `Delta^k` expanded by definition, then the
    /// smallest-descent word of each simple factor.
    pub fn to_word(&self) -> BraidWord {
        let mut letters: Vec<i32> = Vec::new();
        if self.delta_power != 0 {
            let delta = BraidWord::delta(self.strands).expect("delta for d >= 2");
            letters.extend_from_slice(delta.pow(self.delta_power as i32).letters());
        }
        for f in &self.factors {
            letters.extend(simple_word(f));
        }
        BraidWord::new(self.strands, letters).expect("canonical word")
    }

    /// The positive word of one simple factor, smallest descent first.
    pub fn factor_word(&self, index: usize) -> BraidWord {
        BraidWord::new(self.strands, simple_word(&self.factors[index]))
            .expect("simple word letters in range")
    }

    /// Exponent sum, computable directly from the form.
    pub fn exponent_sum(&self) -> i64 {
        let d = self.strands as i64;
        let mut total = self.delta_power * d * (d - 1) / 2;
        for f in &self.factors {
            total += permutation_length(f) as i64;
        }
        total
    }

    /// A deterministic serialization, stable across runs and platforms.
    pub fn key_string(&self) -> String {
        use fmt::Write;
        let mut s = String::new();
        write!(s, "{}", self.delta_power).unwrap();
        for f in &self.factors {
            s.push(':');
            for (i, v) in f.images_zero_based().iter().enumerate() {
                if i > 0 {
                    s.push('.');
                }
                write!(s, "{v}").unwrap();
            }
        }
        s
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "CanonicalForm(d={}, Delta^{}",
            self.strands, self.delta_power
        )?;
        for p in &self.factors {
            write!(f, " . {p}")?;
        }
        write!(f, ")")
    }
}

/// Number of inversions = length of the permutation braid.
fn permutation_length(p: &Permutation) -> usize {
    let n = p.size();
    let mut count = 0;
    for i in 1..=n {
        for j in (i + 1)..=n {
            if p.apply(i) > p.apply(j) {
                count += 1;
            }
        }
    }
    count
}

/// Positive word of a permutation braid, taking the smallest descent first.
fn simple_word(p: &Permutation) -> Vec<i32> {
    let mut p = p.clone();
    let n = p.size();
    let mut letters = Vec::new();
    'outer: loop {
        for i in 1..n {
            if in_starting_set(&p, i) {
                letters.push(i as i32);
                // strip sigma_i from the left: p = t_i . p
                p.swap_positions(i);
                continue 'outer;
            }
        }
        break;
    }
    debug_assert!(p.is_identity());
    letters
}

/// Makes the pair `(a, b)` left-weighted by transferring generators from the
/// front of `b` to the back of `a` while possible. Returns true if anything
/// moved. The inverse of `a` is maintained incrementally: right-multiplying
/// `a` by `sigma_i` left-multiplies `a^{-1}` by it.
fn left_weight_pair(a: &mut Permutation, b: &mut Permutation) -> bool {
    let d = a.size();
    let mut a_inv = a.inverse();
    let mut changed = false;
    loop {
        let mut moved = false;
        for i in 1..d {
            if in_starting_set(b, i) && !in_finishing_set_inv(&a_inv, i) {
                // a <- a * sigma_i, b <- sigma_i^{-1} * b
                let (p, q) = (a_inv.apply(i), a_inv.apply(i + 1));
                a.swap_entries(p, q);
                a_inv.swap_positions(i);
                b.swap_positions(i);
                changed = true;
                moved = true;
                break;
            }
        }
        if !moved {
            return changed;
        }
    }
}

/// Left-weights a whole sequence of simple factors in place, absorbing
/// identity factors and leading `Delta`s into the infimum.
///
/// Pair fixing is driven by a worklist: rewriting the pair at `i` can only
/// disturb the pairs at `i - 1` and `i + 1`, so those are requeued. During
/// the process identity factors drain to the right and `Delta` factors
/// bubble to the left; both are stripped at the end.
fn left_weight(strands: usize, delta_power: &mut i64, factors: &mut Vec<Permutation>) {
    use std::collections::VecDeque;
    if factors.len() >= 2 {
        let pairs = factors.len() - 1;
        let mut queue: VecDeque<usize> = (0..pairs).collect();
        let mut queued = vec![true; pairs];
        while let Some(i) = queue.pop_front() {
            queued[i] = false;
            let (head, tail) = factors.split_at_mut(i + 1);
            if left_weight_pair(&mut head[i], &mut tail[0]) {
                if i > 0 && !queued[i - 1] {
                    queue.push_back(i - 1);
                    queued[i - 1] = true;
                }
                if i + 1 < pairs && !queued[i + 1] {
                    queue.push_back(i + 1);
                    queued[i + 1] = true;
                }
            }
        }
    }
    factors.retain(|f| !f.is_identity());
    if strands >= 2 {
        let delta = delta_permutation(strands);
        let mut leading = 0;
        while factors.first() == Some(&delta) {
            factors.remove(0);
            leading += 1;
        }
        *delta_power += leading;
        debug_assert!(!factors.contains(&delta), "Delta factor not at the front");
    }
}

/// Computes the left-greedy normal form of a braid word.
pub fn normal_form(word: &BraidWord) -> CanonicalForm {
    CanonicalForm::of_word(word)
}

fn all_permutations(d: usize) -> Vec<Permutation> {
    fn rec(prefix: &mut Vec<usize>, used: &mut Vec<bool>, d: usize, out: &mut Vec<Permutation>) {
        if prefix.len() == d {
            out.push(Permutation::from_images(prefix).unwrap());
            return;
        }
        for v in 1..=d {
            if !used[v - 1] {
                used[v - 1] = true;
                prefix.push(v);
                rec(prefix, used, d, out);
                prefix.pop();
                used[v - 1] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; d], d, &mut out);
    out
}

/// Enumerates conjugator representatives modulo the center: all braids
/// `Delta^e * s_1 .. s_l` with `e` in `{0, 1}`, `l <= max_canonical_length`
/// and each `s_i` a nontrivial simple element distinct from `Delta`.
/// Conjugation by `Delta^2` is trivial, so these cover every conjugation by
/// a braid of canonical length up to the bound. Deduplicated by normal form
/// and returned in a deterministic order as canonical words.
pub fn bounded_conjugators(d: usize, max_canonical_length: usize) -> Vec<BraidWord> {
    if d < 2 {
        return vec![BraidWord::identity(d.max(1))];
    }
    let delta = delta_permutation(d);
    let simples: Vec<Permutation> = all_permutations(d)
        .into_iter()
        .filter(|p| !p.is_identity() && *p != delta)
        .collect();
    let mut seen: std::collections::HashSet<String> = std::collections::HashSet::new();
    let mut out: Vec<(String, BraidWord)> = Vec::new();
    let mut layer: Vec<CanonicalForm> = vec![CanonicalForm::identity(d)];
    for delta_exp in [0i64, 1] {
        let base = CanonicalForm::from_tokens(d, std::iter::once(Token::DeltaPower(delta_exp)));
        let mut push = |form: &CanonicalForm, out: &mut Vec<(String, BraidWord)>| {
            let key = form.key_string();
            if seen.insert(key.clone()) {
                out.push((key, form.to_word()));
            }
        };
        push(&base, &mut out);
        layer.clear();
        layer.push(base);
        for _ in 0..max_canonical_length {
            let mut next = Vec::new();
            for form in &layer {
                for s in &simples {
                    let extended = form
                        .mul(&CanonicalForm::from_tokens(
                            d,
                            std::iter::once(Token::Simple(s.clone())),
                        ))
                        .expect("same strands");
                    let key = extended.key_string();
                    if seen.insert(key.clone()) {
                        out.push((key, extended.to_word()));
                        next.push(extended);
                    }
                }
            }
            layer = next;
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out.into_iter().map(|(_, w)| w).collect()
}

/// Word problem: equal strand counts required, equality decided by normal
/// forms.
pub fn words_equal(w1: &BraidWord, w2: &BraidWord) -> Result<bool> {
    if w1.strands() != w2.strands() {
        return Err(Error::StrandMismatch {
            left: w1.strands(),
            right: w2.strands(),
        });
    }
    Ok(normal_form(w1) == normal_form(w2))
}
