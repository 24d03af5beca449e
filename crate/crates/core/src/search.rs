//! Orbit enumeration and equivalence search for factorizations under
//! Hurwitz moves, optionally combined with global conjugation by bounded
//! conjugators.
//!
//! The orbit of a factorization is closed breadth-first: every state is
//! expanded through all single moves, position-major with the right move
//! before the left one, and deduplicated by the canonical key of its
//! realized factor sequence. Frontier expansion is the data-parallel inner
//! loop; with the `parallel` feature it runs on a rayon pool. Insertion
//! into the visited set stays sequential and ordered, so parallel and
//! sequential runs produce the same states in the same order.
//!
//! Equivalence of two factorizations is decided by a bidirectional variant
//! of the same closure: one side grows from the first factorization, the
//! other from the second (seeded with every bounded conjugate when global
//! conjugation is allowed), and any meeting key yields a replayable move
//! witness. A `no` answer is only reported when one side exhausted its
//! orbit; with conjugation enabled it is relative to the conjugator bound.

use std::collections::HashMap;
use std::sync::Arc;

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::{FactorKind, Factorization, FactorizationKey};
use crate::garside::{bounded_conjugators, normal_form, CanonicalForm};
use crate::monodromy::MonodromyMorphism;

pub use crate::factorization::Direction;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// One elementary Hurwitz move at a 1-based position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub position: usize,
    pub direction: Direction,
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {}", self.position, self.direction)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Cap on the total number of stored states.
    pub max_states: usize,
    /// Optional prune for orbit enumeration: states containing a factor
    /// whose realized canonical length exceeds this bound are not expanded.
    /// `None` explores the unrestricted orbit.
    pub max_conjugator_length: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_states: 100_000,
            max_conjugator_length: None,
        }
    }
}

impl SearchLimits {
    fn validate(&self) -> Result<()> {
        if self.max_states == 0 {
            return Err(Error::InvalidLimit);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LimitHit {
    MaxStates,
    ConjugatorLength,
}

impl std::fmt::Display for LimitHit {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LimitHit::MaxStates => write!(f, "max-states"),
            LimitHit::ConjugatorLength => write!(f, "max-conjugator-length"),
        }
    }
}

type StateFactors = Vec<(Arc<CanonicalForm>, FactorKind)>;

/// A visited orbit state: realized factor forms plus the move that produced
/// it from its parent.
#[derive(Clone)]
pub struct OrbitState {
    pub factors: StateFactors,
    pub parent: Option<(usize, Move)>,
    root: usize,
}

/// Full breadth-first closure (or the portion reached before a limit).
pub struct OrbitEnumeration {
    strands: usize,
    pub states: Vec<OrbitState>,
    index: HashMap<FactorizationKey, usize>,
    pub exhausted: bool,
    pub limit_hit: Option<LimitHit>,
}

impl OrbitEnumeration {
    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn contains(&self, key: &FactorizationKey) -> bool {
        self.index.contains_key(key)
    }

    pub fn position(&self, key: &FactorizationKey) -> Option<usize> {
        self.index.get(key).copied()
    }

    /// Keys in insertion (breadth-first) order.
    pub fn keys(&self) -> Vec<FactorizationKey> {
        self.states
            .iter()
            .map(|s| state_key(self.strands, &s.factors))
            .collect()
    }

    /// Moves leading from the start state to the given state.
    pub fn path_to(&self, state: usize) -> Vec<Move> {
        path_in(&self.states, state)
    }
}

fn path_in(states: &[OrbitState], mut state: usize) -> Vec<Move> {
    let mut moves = Vec::new();
    while let Some((parent, mv)) = states[state].parent {
        moves.push(mv);
        state = parent;
    }
    moves.reverse();
    moves
}

fn state_key(strands: usize, factors: &StateFactors) -> FactorizationKey {
    FactorizationKey::from_forms_iter(strands, factors.iter().map(|(form, _)| form.as_ref()))
}

fn state_of(f: &Factorization) -> StateFactors {
    f.factors()
        .iter()
        .map(|factor| (Arc::new(factor.realized_form()), factor.kind()))
        .collect()
}

/// All single-move successors, position-major, right move first.
fn state_successors(factors: &StateFactors) -> Vec<(Move, StateFactors)> {
    let r = factors.len();
    let mut out = Vec::with_capacity(2 * r.saturating_sub(1));
    for position in 1..r {
        let (a, b) = (&factors[position - 1], &factors[position]);
        for direction in [Direction::Right, Direction::Left] {
            let (new_a, new_b) = match direction {
                // (a, b) -> (a b a^{-1}, a)
                Direction::Right => (
                    (
                        Arc::new(b.0.conjugated_by(&a.0).expect("same strands")),
                        b.1,
                    ),
                    a.clone(),
                ),
                // (a, b) -> (b, b^{-1} a b)
                Direction::Left => (
                    b.clone(),
                    (
                        Arc::new(a.0.conjugated_by(&b.0.inverse()).expect("same strands")),
                        a.1,
                    ),
                ),
            };
            let mut next = factors.clone();
            next[position - 1] = new_a;
            next[position] = new_b;
            out.push((Move { position, direction }, next));
        }
    }
    out
}

type Expansion = (usize, Move, StateFactors, FactorizationKey);

fn expand_one(
    states: &[OrbitState],
    index: &HashMap<FactorizationKey, usize>,
    strands: usize,
    state_idx: usize,
) -> Vec<Expansion> {
    let mut out = Vec::new();
    for (mv, factors) in state_successors(&states[state_idx].factors) {
        let key = state_key(strands, &factors);
        if !index.contains_key(&key) {
            out.push((state_idx, mv, factors, key));
        }
    }
    out
}

#[cfg(feature = "parallel")]
fn expand_frontier(
    states: &[OrbitState],
    index: &HashMap<FactorizationKey, usize>,
    strands: usize,
    frontier: &[usize],
    parallel: bool,
) -> Vec<Expansion> {
    if parallel {
        let chunks: Vec<Vec<Expansion>> = frontier
            .par_iter()
            .map(|&idx| expand_one(states, index, strands, idx))
            .collect();
        chunks.into_iter().flatten().collect()
    } else {
        frontier
            .iter()
            .flat_map(|&idx| expand_one(states, index, strands, idx))
            .collect()
    }
}

#[cfg(not(feature = "parallel"))]
fn expand_frontier(
    states: &[OrbitState],
    index: &HashMap<FactorizationKey, usize>,
    strands: usize,
    frontier: &[usize],
    _parallel: bool,
) -> Vec<Expansion> {
    frontier
        .iter()
        .flat_map(|&idx| expand_one(states, index, strands, idx))
        .collect()
}

fn factor_length_within(factors: &StateFactors, bound: Option<usize>) -> bool {
    match bound {
        None => true,
        Some(bound) => factors
            .iter()
            .all(|(form, _)| form.canonical_length() <= bound),
    }
}

fn enumerate_orbit_impl(
    f: &Factorization,
    limits: &SearchLimits,
    parallel: bool,
) -> Result<OrbitEnumeration> {
    limits.validate()?;
    let strands = f.strands();
    let root = state_of(f);
    let root_key = state_key(strands, &root);
    let mut out = OrbitEnumeration {
        strands,
        states: vec![OrbitState {
            factors: root,
            parent: None,
            root: 0,
        }],
        index: HashMap::from([(root_key, 0)]),
        exhausted: false,
        limit_hit: None,
    };
    let mut pruned = false;
    let mut frontier = vec![0usize];
    'bfs: while !frontier.is_empty() {
        let expansions = expand_frontier(&out.states, &out.index, strands, &frontier, parallel);
        let mut next = Vec::new();
        for (parent, mv, factors, key) in expansions {
            if out.index.contains_key(&key) {
                continue;
            }
            if !factor_length_within(&factors, limits.max_conjugator_length) {
                pruned = true;
                continue;
            }
            if out.states.len() >= limits.max_states {
                out.limit_hit = Some(LimitHit::MaxStates);
                break 'bfs;
            }
            let idx = out.states.len();
            out.index.insert(key, idx);
            out.states.push(OrbitState {
                factors,
                parent: Some((parent, mv)),
                root: 0,
            });
            next.push(idx);
        }
        frontier = next;
    }
    if out.limit_hit.is_none() && pruned {
        out.limit_hit = Some(LimitHit::ConjugatorLength);
    }
    out.exhausted = out.limit_hit.is_none();
    Ok(out)
}

/// Breadth-first closure of `f` under single Hurwitz moves. Uses the rayon
/// pool when the `parallel` feature is enabled.
pub fn enumerate_orbit(f: &Factorization, limits: &SearchLimits) -> Result<OrbitEnumeration> {
    enumerate_orbit_impl(f, limits, cfg!(feature = "parallel"))
}

/// The same closure forced onto a single thread; state-for-state identical
/// to [`enumerate_orbit`].
pub fn enumerate_orbit_sequential(
    f: &Factorization,
    limits: &SearchLimits,
) -> Result<OrbitEnumeration> {
    enumerate_orbit_impl(f, limits, false)
}

const REPRESENTATIVE_LIMIT: usize = 10;

/// Summary of an orbit enumeration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub visited_count: usize,
    pub frontier_exhausted: bool,
    /// Bounded sample of canonical keys in breadth-first order.
    pub representatives: Vec<String>,
    pub limit_hit: Option<LimitHit>,
}

/// Enumerates the Hurwitz orbit of a verified factorization.
pub fn hurwitz_orbit(f: &Factorization, limits: &SearchLimits) -> Result<OrbitReport> {
    if !f.verify_target() {
        return Err(Error::InvariantPrecondition(
            "orbit enumeration requires the factored product to equal the target",
        ));
    }
    let enumeration = enumerate_orbit(f, limits)?;
    Ok(OrbitReport {
        visited_count: enumeration.len(),
        frontier_exhausted: enumeration.exhausted,
        representatives: enumeration
            .states
            .iter()
            .take(REPRESENTATIVE_LIMIT)
            .map(|s| state_key(enumeration.strands, &s.factors).to_string())
            .collect(),
        limit_hit: enumeration.limit_hit,
    })
}

/// A replayable equivalence certificate: applying `moves` to the first
/// factorization yields, factor by factor, the second factorization
/// conjugated by `conjugator` (identity when absent).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub conjugator: Option<BraidWord>,
    pub moves: Vec<Move>,
}

impl Witness {
    /// Applies the move sequence to `f`.
    pub fn replay(&self, f: &Factorization) -> Result<Factorization> {
        let mut current = f.clone();
        for mv in &self.moves {
            current = current.hurwitz_move(mv.position, mv.direction)?;
        }
        Ok(current)
    }

    /// Re-verifies the certificate against the two factorizations.
    pub fn verify(&self, f1: &Factorization, f2: &Factorization) -> Result<bool> {
        let lhs = self.replay(f1)?;
        let rhs = match &self.conjugator {
            Some(b) => f2.global_conjugate(b)?,
            None => f2.clone(),
        };
        Ok(lhs.equal_as_braids(&rhs))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NoReason {
    ProfileMismatch,
    LiftabilityMismatch,
    /// Some orbit was exhausted without meeting the other side; when global
    /// conjugation was allowed the answer is relative to the recorded bound.
    DisjointOrbits { conjugator_bound: Option<usize> },
}

impl std::fmt::Display for NoReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NoReason::ProfileMismatch => write!(f, "profile"),
            NoReason::LiftabilityMismatch => write!(f, "liftability"),
            NoReason::DisjointOrbits {
                conjugator_bound: None,
            } => write!(f, "orbits-disjoint"),
            NoReason::DisjointOrbits {
                conjugator_bound: Some(bound),
            } => write!(f, "orbits-disjoint up to conjugator length {bound}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Equivalence {
    Yes(Witness),
    No(NoReason),
    Unknown(LimitHit),
}

#[derive(Debug, Clone)]
pub struct EquivOptions {
    pub allow_global_conjugation: bool,
    /// Canonical-length bound for global conjugators; `no` answers under
    /// conjugation are relative to this bound.
    pub conjugator_bound: usize,
    pub restrict_liftable: Option<MonodromyMorphism>,
}

impl Default for EquivOptions {
    fn default() -> Self {
        EquivOptions {
            allow_global_conjugation: false,
            conjugator_bound: 2,
            restrict_liftable: None,
        }
    }
}

/// Greedy descent: repeatedly applies the first move that strictly lowers
/// the total canonical length of the factors. Terminates because the
/// potential is a non-negative integer. Returns the simplified state and
/// the moves that led there.
fn greedy_simplify(mut factors: StateFactors) -> (StateFactors, Vec<Move>) {
    fn total_length(factors: &StateFactors) -> usize {
        factors
            .iter()
            .map(|(form, _)| form.canonical_length() + form.delta_power().unsigned_abs() as usize)
            .sum()
    }
    let mut moves = Vec::new();
    let mut current_length = total_length(&factors);
    loop {
        let mut improved = false;
        for (mv, next) in state_successors(&factors) {
            let length = total_length(&next);
            if length < current_length {
                moves.push(mv);
                factors = next;
                current_length = length;
                improved = true;
                break;
            }
        }
        if !improved {
            return (factors, moves);
        }
    }
}

fn invert_moves(moves: &[Move]) -> Vec<Move> {
    moves
        .iter()
        .rev()
        .map(|mv| Move {
            position: mv.position,
            direction: mv.direction.opposite(),
        })
        .collect()
}

struct Side {
    states: Vec<OrbitState>,
    index: HashMap<FactorizationKey, usize>,
    frontier: Vec<usize>,
}

impl Side {
    fn new() -> Self {
        Side {
            states: Vec::new(),
            index: HashMap::new(),
            frontier: Vec::new(),
        }
    }
}

/// Decides Hurwitz equivalence (optionally up to bounded global
/// conjugation, optionally restricted to a liftable setting) by
/// bidirectional breadth-first search.
pub fn hurwitz_equivalent(
    f1: &Factorization,
    f2: &Factorization,
    options: &EquivOptions,
    limits: &SearchLimits,
) -> Result<Equivalence> {
    limits.validate()?;
    if f1.strands() != f2.strands() {
        return Err(Error::StrandMismatch {
            left: f1.strands(),
            right: f2.strands(),
        });
    }
    if f1.half_turns() != f2.half_turns() {
        return Err(Error::HalfTurnMismatch {
            left: f1.half_turns(),
            right: f2.half_turns(),
        });
    }
    if let Some(theta) = &options.restrict_liftable {
        if f1.is_liftable(theta)? != f2.is_liftable(theta)? {
            return Ok(Equivalence::No(NoReason::LiftabilityMismatch));
        }
    }
    if f1.profile() != f2.profile() {
        return Ok(Equivalence::No(NoReason::ProfileMismatch));
    }

    let strands = f1.strands();
    let conjugator_bound = options
        .allow_global_conjugation
        .then_some(options.conjugator_bound);

    // both roots are first driven downhill; the recorded moves become the
    // prefix and (inverted) suffix of any witness found by the search
    let (s1_state, prefix_moves) = greedy_simplify(state_of(f1));
    let (s2_state, f2_moves) = greedy_simplify(state_of(f2));
    let suffix_moves = invert_moves(&f2_moves);

    // side 2 sources: the simplified f2, then every bounded conjugate of it
    let mut sources: Vec<Option<BraidWord>> = vec![None];
    let mut source_states: Vec<StateFactors> = vec![s2_state.clone()];
    if options.allow_global_conjugation {
        let f2_forms = s2_state;
        for b in bounded_conjugators(strands, options.conjugator_bound) {
            if b.is_empty() {
                continue; // identity already seeded
            }
            if let Some(theta) = &options.restrict_liftable {
                if !theta.is_liftable(&b)? {
                    continue;
                }
            }
            let form = normal_form(&b);
            let inv = form.inverse();
            let conjugated: StateFactors = f2_forms
                .iter()
                .map(|(factor, kind)| {
                    // global conjugation sends rho to b^{-1} rho b
                    (
                        Arc::new(
                            inv.mul(factor)
                                .and_then(|m| m.mul(&form))
                                .expect("same strands"),
                        ),
                        *kind,
                    )
                })
                .collect();
            sources.push(Some(b));
            source_states.push(conjugated);
        }
    }

    let mut side1 = Side::new();
    let mut side2 = Side::new();

    // returns Some(witness) when the inserted state meets the other side
    fn insert(
        side: &mut Side,
        other: &Side,
        strands: usize,
        factors: StateFactors,
        parent: Option<(usize, Move)>,
        root: usize,
    ) -> Option<(usize, usize)> {
        let key = state_key(strands, &factors);
        if side.index.contains_key(&key) {
            return None;
        }
        let idx = side.states.len();
        side.index.insert(key.clone(), idx);
        side.states.push(OrbitState {
            factors,
            parent,
            root,
        });
        side.frontier.push(idx);
        other.index.get(&key).map(|&other_idx| (idx, other_idx))
    }

    let build_witness = |side1: &Side,
                         side2: &Side,
                         sources: &[Option<BraidWord>],
                         idx1: usize,
                         idx2: usize|
     -> Witness {
        let mut moves = prefix_moves.clone();
        moves.extend(path_in(&side1.states, idx1));
        moves.extend(invert_moves(&path_in(&side2.states, idx2)));
        moves.extend(suffix_moves.iter().copied());
        Witness {
            conjugator: sources[side2.states[idx2].root].clone(),
            moves,
        }
    };

    // seed side 1
    insert(&mut side1, &side2, strands, s1_state, None, 0);
    // seed side 2, watching for immediate meetings
    for (root, factors) in source_states.into_iter().enumerate() {
        if let Some((idx2, idx1)) = insert(&mut side2, &side1, strands, factors, None, root) {
            return Ok(Equivalence::Yes(build_witness(
                &side1, &side2, &sources, idx1, idx2,
            )));
        }
        if side1.states.len() + side2.states.len() >= limits.max_states {
            return Ok(Equivalence::Unknown(LimitHit::MaxStates));
        }
    }

    let parallel = cfg!(feature = "parallel");
    loop {
        let total = side1.states.len() + side2.states.len();
        if total >= limits.max_states {
            return Ok(Equivalence::Unknown(LimitHit::MaxStates));
        }
        // an empty frontier means that side's orbit set is complete
        if side1.frontier.is_empty() || side2.frontier.is_empty() {
            return Ok(Equivalence::No(NoReason::DisjointOrbits { conjugator_bound }));
        }
        // expand the smaller side first; ties go to side 1
        let expand_first = side1.states.len() <= side2.states.len();
        let (active, passive) = if expand_first {
            (&mut side1, &mut side2)
        } else {
            (&mut side2, &mut side1)
        };
        let frontier = std::mem::take(&mut active.frontier);
        let expansions =
            expand_frontier(&active.states, &active.index, strands, &frontier, parallel);
        for (parent, mv, factors, _key) in expansions {
            if active.states.len() + passive.states.len() >= limits.max_states {
                return Ok(Equivalence::Unknown(LimitHit::MaxStates));
            }
            let root = active.states[parent].root;
            if let Some((idx_a, idx_b)) =
                insert(active, passive, strands, factors, Some((parent, mv)), root)
            {
                let (idx1, idx2) = if expand_first {
                    (idx_a, idx_b)
                } else {
                    (idx_b, idx_a)
                };
                let (s1, s2): (&Side, &Side) = if expand_first {
                    (active, passive)
                } else {
                    (passive, active)
                };
                return Ok(Equivalence::Yes(build_witness(s1, s2, &sources, idx1, idx2)));
            }
        }
    }
}

/// One step of the stabilization search: both inputs extended by the same
/// number of standard copies, then tested for equivalence.
#[derive(Debug, Clone)]
pub struct StableStep {
    pub extra_copies: u32,
    pub outcome: Equivalence,
}

/// Searches for the least number of stabilizations after which the two
/// factorizations become Hurwitz equivalent, up to `max_extra` copies.
/// Returns the trail of attempts; the search stops at the first `yes`.
pub fn stable_equivalence_search(
    f1: &Factorization,
    f2: &Factorization,
    max_extra: u32,
    options: &EquivOptions,
    limits: &SearchLimits,
) -> Result<Vec<StableStep>> {
    let mut trail = Vec::new();
    for n in 0..=max_extra {
        let outcome = hurwitz_equivalent(&f1.stabilized(n)?, &f2.stabilized(n)?, options, limits)?;
        let stop = matches!(outcome, Equivalence::Yes(_));
        trail.push(StableStep {
            extra_copies: n,
            outcome,
        });
        if stop {
            break;
        }
    }
    Ok(trail)
}
