//! Reference oracles for the word problem, independent of the Garside
//! normal-form implementation they are used to check.
//!
//! Shared by several test targets, not all of which use every item.
#![allow(dead_code)]

pub mod oracle {
    use std::collections::{HashSet, VecDeque};

    use braidmono::BraidWord;

    /// All positive words reachable from `word` by the defining relations
    /// only (no inverses introduced). Both relations preserve length, so
    /// the class is finite. Panics if `cap` is exceeded.
    pub fn positive_rewrite_class(word: &[i32], cap: usize) -> HashSet<Vec<i32>> {
        assert!(word.iter().all(|&g| g > 0), "positive words only");
        let mut seen: HashSet<Vec<i32>> = HashSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        seen.insert(word.to_vec());
        queue.push_back(word.to_vec());
        while let Some(current) = queue.pop_front() {
            let push = |next: Vec<i32>, seen: &mut HashSet<Vec<i32>>, queue: &mut VecDeque<Vec<i32>>| {
                if seen.insert(next.clone()) {
                    assert!(seen.len() <= cap, "positive rewrite class exceeded cap {cap}");
                    queue.push_back(next);
                }
            };
            for p in 0..current.len() {
                if p + 1 < current.len() {
                    let (a, b) = (current[p], current[p + 1]);
                    if (a - b).abs() >= 2 {
                        let mut next = current.clone();
                        next.swap(p, p + 1);
                        push(next, &mut seen, &mut queue);
                    }
                }
                if p + 2 < current.len() {
                    let (a, b, c) = (current[p], current[p + 1], current[p + 2]);
                    if a == c && (a - b).abs() == 1 {
                        // aba -> bab for adjacent indices
                        let mut next = current.clone();
                        next[p] = b;
                        next[p + 1] = a;
                        next[p + 2] = b;
                        push(next, &mut seen, &mut queue);
                    }
                }
            }
        }
        seen
    }

    /// Equality of positive words through exhaustive relation rewriting.
    pub fn positive_words_equal(w1: &[i32], w2: &[i32], cap: usize) -> bool {
        if w1.len() != w2.len() {
            return false;
        }
        positive_rewrite_class(w1, cap).contains(w2)
    }

    fn free_reduce(letters: &mut Vec<i32>) {
        let mut stack: Vec<i32> = Vec::with_capacity(letters.len());
        for &g in letters.iter() {
            if stack.last() == Some(&-g) {
                stack.pop();
            } else {
                stack.push(g);
            }
        }
        *letters = stack;
    }

    /// Finds the handle with the leftmost closing letter: a subword
    /// `s_i^e v s_i^{-e}` whose interior only uses indices above `i`.
    fn find_handle(letters: &[i32]) -> Option<(usize, usize)> {
        for q in 0..letters.len() {
            let closer = letters[q];
            let index = closer.unsigned_abs();
            let mut p = q;
            while p > 0 {
                p -= 1;
                let earlier = letters[p];
                let earlier_index = earlier.unsigned_abs();
                if earlier_index < index {
                    break;
                }
                if earlier_index == index {
                    if earlier == -closer {
                        return Some((p, q));
                    }
                    break;
                }
            }
        }
        None
    }

    /// One handle reduction: `s_i^e v s_i^{-e}` becomes `v` with every
    /// letter `s_{i+1}^x` rewritten to `s_{i+1}^{-e} s_i^x s_{i+1}^{e}`;
    /// letters of index `i + 2` and above commute with `s_i` and pass
    /// through unchanged.
    fn reduce_handle(letters: &mut Vec<i32>, p: usize, q: usize) {
        let opener = letters[p];
        let index = opener.abs();
        let sign = opener.signum();
        let mut replacement = Vec::with_capacity(3 * (q - p));
        for &g in &letters[p + 1..q] {
            if g.abs() == index + 1 {
                replacement.push(-sign * (index + 1));
                replacement.push(g.signum() * index);
                replacement.push(sign * (index + 1));
            } else {
                replacement.push(g);
            }
        }
        letters.splice(p..=q, replacement);
    }

    /// Iterated handle reduction. A freely reduced word with no handles has
    /// all occurrences of its lowest generator with one sign, so it is
    /// trivial exactly when empty.
    pub fn handle_reduce(word: &BraidWord) -> BraidWord {
        let mut letters = word.letters().to_vec();
        let mut steps = 0usize;
        loop {
            free_reduce(&mut letters);
            match find_handle(&letters) {
                Some((p, q)) => reduce_handle(&mut letters, p, q),
                None => break,
            }
            steps += 1;
            assert!(steps < 2_000_000, "handle reduction runaway");
        }
        BraidWord::new(word.strands(), letters).expect("reduction preserves letter range")
    }

    pub fn is_trivial(word: &BraidWord) -> bool {
        handle_reduce(word).is_empty()
    }

    /// Word problem oracle: `w1 = w2` iff `w1 w2^{-1}` reduces to nothing.
    pub fn words_equal(w1: &BraidWord, w2: &BraidWord) -> bool {
        assert_eq!(w1.strands(), w2.strands());
        is_trivial(&w1.multiply(&w2.inverse()).expect("same strands"))
    }
}

pub mod gen {
    use braidmono::BraidWord;
    use rand::Rng;

    /// Uniform random word with letters in `+-(1..d)`.
    pub fn random_word<R: Rng>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
        let letters: Vec<i32> = (0..len)
            .map(|_| {
                let i = rng.gen_range(1..strands) as i32;
                if rng.gen_bool(0.5) {
                    i
                } else {
                    -i
                }
            })
            .collect();
        BraidWord::new(strands, letters).expect("letters in range")
    }

    /// A word equal to `word` as a braid, produced by randomly inserting
    /// relation instances and cancelling pairs.
    pub fn equivalent_rewrite<R: Rng>(rng: &mut R, word: &BraidWord) -> BraidWord {
        let strands = word.strands();
        let mut letters = word.letters().to_vec();
        for _ in 0..6 {
            let at = rng.gen_range(0..=letters.len());
            let choice = rng.gen_range(0..3);
            let insert: Vec<i32> = match choice {
                0 => {
                    let i = rng.gen_range(1..strands) as i32;
                    let s = if rng.gen_bool(0.5) { 1 } else { -1 };
                    vec![s * i, -s * i]
                }
                1 if strands >= 3 => {
                    // aba (bab)^{-1} for adjacent generators
                    let i = rng.gen_range(1..strands - 1) as i32;
                    vec![i, i + 1, i, -(i + 1), -i, -(i + 1)]
                }
                _ if strands >= 4 => {
                    // commuting pair and its inverse in swapped order
                    let i = rng.gen_range(1..strands - 2) as i32;
                    let j = rng.gen_range((i + 2)..strands as i32);
                    vec![i, j, -i, -j]
                }
                _ => {
                    let i = rng.gen_range(1..strands) as i32;
                    vec![i, -i]
                }
            };
            letters.splice(at..at, insert);
        }
        BraidWord::new(strands, letters).expect("letters in range")
    }
}
