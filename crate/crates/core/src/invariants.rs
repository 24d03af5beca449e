//! The dictionary between branch-curve data `(d, nu, kappa, N)` and the
//! Chern invariants of the associated branched cover of the plane.
//!
//! For a degree-`d` curve with `nu = nu+ - nu-` nodes (signed), `kappa`
//! cusps, genus `g = (d-1)(d-2)/2 - kappa - nu`, covered with `N` sheets:
//!
//! ```text
//! [w]^2 = N            c1.[w] = 3N - d
//! c1^2 = g - 1 - (9/2) d + 9N
//! c2   = 2g - 2 + 3N - kappa        chi = c2
//! sigma = (c1^2 - 2 c2) / 3
//! ```
//!
//! All arithmetic is exact over the integers; inputs making `c1^2` or
//! `sigma` non-integral (odd degree, cusp count not divisible by 3) are
//! rejected rather than rounded.

use std::fmt;

use crate::error::{Error, Result};
use crate::factorization::Factorization;
use crate::monodromy::{fiber_genus, MonodromyMorphism};

/// Numerical data of a branch curve together with the covering degree.
/// The covering degree is optional: curve-only constructions leave it
/// unset, and the Chern dictionary then refuses to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BranchCurveData {
    pub degree: i64,
    pub nodes_pos: i64,
    pub nodes_neg: i64,
    pub cusps: i64,
    pub cover_degree: Option<i64>,
}

impl BranchCurveData {
    pub fn new(
        degree: i64,
        nodes_pos: i64,
        nodes_neg: i64,
        cusps: i64,
        cover_degree: Option<i64>,
    ) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvariantPrecondition("degree must be at least 1"));
        }
        if nodes_pos < 0 || nodes_neg < 0 || cusps < 0 {
            return Err(Error::InvariantPrecondition(
                "node and cusp counts must be non-negative",
            ));
        }
        if let Some(n) = cover_degree {
            if n < 2 {
                return Err(Error::InvariantPrecondition(
                    "cover degree must be at least 2",
                ));
            }
        }
        Ok(BranchCurveData {
            degree,
            nodes_pos,
            nodes_neg,
            cusps,
            cover_degree,
        })
    }

    /// Signed node count `nu+ - nu-`, the quantity entering every formula.
    pub fn signed_nodes(&self) -> i64 {
        self.nodes_pos - self.nodes_neg
    }

    pub fn genus(&self) -> i64 {
        curve_genus(self.degree, self.cusps, self.signed_nodes())
    }

    /// Number of vertical tangencies `d(d-1) - 2 nu - 3 kappa`.
    pub fn tangencies(&self) -> i64 {
        self.degree * (self.degree - 1) - 2 * self.signed_nodes() - 3 * self.cusps
    }
}

/// `g = (d-1)(d-2)/2 - kappa - nu` with `nu` the signed node count.
pub fn curve_genus(degree: i64, cusps: i64, signed_nodes: i64) -> i64 {
    (degree - 1) * (degree - 2) / 2 - cusps - signed_nodes
}

/// The full set of numerical invariants of the covering 4-manifold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ChernSet {
    pub omega_sq: i64,
    pub c1_omega: i64,
    pub c1_sq: i64,
    pub c2: i64,
    pub euler: i64,
    pub signature: i64,
    pub genus: i64,
    pub tangencies: i64,
    pub fiber_genus: i64,
}

/// Evaluates the dictionary exactly. Fails on a missing cover degree, odd
/// curve degree (non-integral `c1^2`) or cusp count not divisible by 3
/// (non-integral signature).
pub fn chern_invariants(data: &BranchCurveData) -> Result<ChernSet> {
    let n = data.cover_degree.ok_or(Error::MissingCoverDegree)?;
    let d = data.degree;
    let g = data.genus();
    // c1^2 = g - 1 - (9/2) d + 9N, integral only for even d
    let twice_c1_sq = 2 * (g - 1) - 9 * d + 18 * n;
    if twice_c1_sq % 2 != 0 {
        return Err(Error::NonIntegral { quantity: "c1^2" });
    }
    let c1_sq = twice_c1_sq / 2;
    let c2 = 2 * g - 2 + 3 * n - data.cusps;
    let sig3 = c1_sq - 2 * c2;
    if sig3 % 3 != 0 {
        return Err(Error::NonIntegral {
            quantity: "signature",
        });
    }
    Ok(ChernSet {
        omega_sq: n,
        c1_omega: 3 * n - d,
        c1_sq,
        c2,
        euler: c2,
        signature: sig3 / 3,
        genus: g,
        tangencies: data.tangencies(),
        // d is even here, so this is exact; negative when d < 2N - 2
        fiber_genus: (d - 2 * n + 2) / 2,
    })
}

/// Geography flags for branch-curve data. Never fails; the Taubes sign flag
/// is absent when the cover degree is unknown.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeographyReport {
    pub degree_even: bool,
    pub cusps_multiple_of_three: bool,
    /// `kappa <= 5/3 (g-1) + 3/2 d`, compared exactly as `6k <= 10(g-1) + 9d`.
    pub bmy_satisfied: bool,
    /// Sign consistency `c1.[w] <= 0`. Informational: the underlying
    /// vanishing theorem assumes `b2+ >= 2`, which is not computable from
    /// this data.
    pub taubes_sign: Option<bool>,
    pub genus_nonneg: bool,
    pub tangencies_nonneg: bool,
}

impl GeographyReport {
    /// All curve-side checks (the Taubes flag is informational only).
    pub fn all_pass(&self) -> bool {
        self.degree_even
            && self.cusps_multiple_of_three
            && self.bmy_satisfied
            && self.genus_nonneg
            && self.tangencies_nonneg
    }
}

pub fn geography_checks(data: &BranchCurveData) -> GeographyReport {
    let g = data.genus();
    GeographyReport {
        degree_even: data.degree % 2 == 0,
        cusps_multiple_of_three: data.cusps % 3 == 0,
        bmy_satisfied: 6 * data.cusps <= 10 * (g - 1) + 9 * data.degree,
        taubes_sign: data.cover_degree.map(|n| 3 * n - data.degree <= 0),
        genus_nonneg: g >= 0,
        tangencies_nonneg: data.tangencies() >= 0,
    }
}

/// The degree/cusp/node family indexed by `p >= 2`:
/// `d = 9p(p-1)`, `kappa = 27(p-1)(4p-5)`, `nu = 27/2 (p-1)(p-2)(3p^2+3p-8)`,
/// all nodes positive. The cover degree is not part of the data.
pub fn moishezon_family(p: i64) -> Result<BranchCurveData> {
    if p < 2 {
        return Err(Error::FamilyParameterOutOfRange(p));
    }
    let degree = 9 * p * (p - 1);
    let cusps = 27 * (p - 1) * (4 * p - 5);
    let nodes_doubled = 27 * (p - 1) * (p - 2) * (3 * p * p + 3 * p - 8);
    debug_assert_eq!(nodes_doubled % 2, 0);
    BranchCurveData::new(degree, nodes_doubled / 2, 0, cusps, None)
}

/// Independent Euler-characteristic route through the Lefschetz pencil of
/// the cover: `chi = 4 - 4 g_F + tau - N` with `g_F = (d - 2N + 2)/2`.
/// Agrees with `c2 = 2g - 2 + 3N - kappa` identically; evaluating both
/// guards the implementation.
pub fn cross_check_c2(data: &BranchCurveData) -> Result<bool> {
    let n = data.cover_degree.ok_or(Error::MissingCoverDegree)?;
    let g_f = fiber_genus(data.degree, n)?;
    let pencil_route = 4 - 4 * g_f + data.tangencies() - n;
    let dictionary_route = 2 * data.genus() - 2 + 3 * n - data.cusps;
    Ok(pencil_route == dictionary_route)
}

/// Assembles branch-curve data from a verified, liftable factorization and
/// a valid monodromy morphism, then evaluates the dictionary.
pub fn factorization_invariants(
    f: &Factorization,
    theta: &MonodromyMorphism,
) -> Result<(BranchCurveData, ChernSet)> {
    if !f.verify_target() {
        return Err(Error::InvariantPrecondition(
            "factored product does not equal the target",
        ));
    }
    if !theta.validate().is_valid() {
        return Err(Error::InvariantPrecondition(
            "monodromy morphism fails validation",
        ));
    }
    if !f.is_liftable(theta)? {
        return Err(Error::InvariantPrecondition(
            "factorization is not liftable for the morphism",
        ));
    }
    let profile = f.profile();
    let d = f.strands() as i64;
    let data = BranchCurveData::new(
        d,
        profile.nodes_pos,
        profile.nodes_neg,
        profile.cusps,
        Some(theta.sheets() as i64),
    )?;
    let expected_tangencies =
        f.half_turns() as i64 * d * (d - 1) - 2 * data.signed_nodes() - 3 * data.cusps;
    if profile.tangencies != expected_tangencies {
        return Err(Error::InvariantPrecondition(
            "tangency count disagrees with the abelianized audit",
        ));
    }
    let set = chern_invariants(&data)?;
    Ok((data, set))
}

impl fmt::Display for BranchCurveData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "d={} nu+={} nu-={} kappa={}",
            self.degree, self.nodes_pos, self.nodes_neg, self.cusps
        )?;
        if let Some(n) = self.cover_degree {
            write!(f, " N={n}")?;
        }
        Ok(())
    }
}
