//! Linear quotient orderings, the closed-form depth they induce, matroidal
//! exchange checks, and the combinatorial minimum-depth criterion for
//! edge-ideal powers.
//!
//! An ordering u_1..u_s of the minimal generators has linear quotients when
//! every colon ideal (u_1..u_{i-1}) : u_i is generated by variables. With
//! r_i the number of those variables, depth(S/I) = n - max(r_2..r_s) - 1.

use std::time::Instant;

use serde::Serialize;
use thiserror::Error;

use crate::bits::VarSet;
use crate::graph::{Graph, Matching};
use crate::ideal::{minimalize_exp, ExpMonomial, SqfIdeal, SqfMonomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinQuotError {
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("generators are not all of the same degree")]
    MixedDegrees,
    #[error("depth formula needs at least two generators")]
    SingleGenerator,
    #[error("certificate invalid: {0}")]
    InvalidCertificate(String),
    #[error("input does not have the claimed property: {0}")]
    PropertyNotVerified(String),
    #[error("search timed out")]
    Timeout,
    #[error("precondition violated: {0}")]
    Precondition(String),
}

/// A verified linear quotients ordering with its colon counts r_2..r_s.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientOrdering {
    pub ambient: usize,
    /// Indices into the canonical generator list.
    pub ordering: Vec<usize>,
    /// r_i for i = 2..=s; empty for a principal ideal.
    pub colon_counts: Vec<usize>,
}

impl QuotientOrdering {
    /// depth(S/I) = n - max(r_i) - 1. Undefined for a single generator.
    pub fn depth(&self) -> Result<usize, LinQuotError> {
        let max = self
            .colon_counts
            .iter()
            .max()
            .ok_or(LinQuotError::SingleGenerator)?;
        Ok(self.ambient - max - 1)
    }
}

/// Minimal generators of the colon ideal (prefix) : u for squarefree
/// monomials: the minimalized supports `supp(w) - supp(u)`. Every generator
/// is squarefree with support disjoint from u.
pub fn colon_generators(prefix: &[SqfMonomial], u: SqfMonomial) -> Vec<SqfMonomial> {
    let diffs = prefix.iter().map(|w| w.support() - u.support());
    crate::bits::inclusion_minimal(diffs)
        .into_iter()
        .map(SqfMonomial::from_support)
        .collect()
}

/// Colon generators for general monomials, by the same minimalization of
/// `w / gcd(w, u)`.
pub fn colon_generators_exp(prefix: &[ExpMonomial], u: &ExpMonomial) -> Vec<ExpMonomial> {
    minimalize_exp(prefix.iter().map(|w| w.quotient_by_gcd(u)))
}

/// Check that prefix : u is generated by variables. For squarefree inputs
/// this holds exactly when every prefix member w admits another member w'
/// with `supp(w') - supp(u)` a single variable inside `supp(w) - supp(u)`.
fn step_is_linear(prefix: &[VarSet], u: VarSet) -> Option<usize> {
    let mut singles = VarSet::EMPTY;
    for w in prefix {
        let diff = *w - u;
        if diff.len() == 1 {
            singles = singles | diff;
        }
        if diff.is_empty() {
            // w divides u: impossible inside an antichain.
            return None;
        }
    }
    for w in prefix {
        let diff = *w - u;
        if diff.is_disjoint(singles) {
            return None;
        }
    }
    Some(singles.len())
}

/// Replay an ordering and verify linear quotients, returning the colon
/// counts. `None` when some step fails.
pub fn verify_linear_quotients(
    ideal: &SqfIdeal,
    ordering: &[usize],
) -> Option<QuotientOrdering> {
    let gens = ideal.gens();
    if ordering.len() != gens.len() {
        return None;
    }
    let mut seen = vec![false; gens.len()];
    for &i in ordering {
        if i >= gens.len() || seen[i] {
            return None;
        }
        seen[i] = true;
    }
    let supports: Vec<VarSet> = ordering.iter().map(|&i| gens[i].support()).collect();
    let mut colon_counts = Vec::with_capacity(gens.len().saturating_sub(1));
    for i in 1..supports.len() {
        let count = step_is_linear(&supports[..i], supports[i])?;
        colon_counts.push(count);
    }
    Some(QuotientOrdering {
        ambient: ideal.ambient(),
        ordering: ordering.to_vec(),
        colon_counts,
    })
}

/// Generator indices in descending lexicographic order (x1 > x2 > ...), the
/// ordering known to give linear quotients for the top squarefree power of
/// any edge ideal.
pub fn lex_descending_ordering(ideal: &SqfIdeal) -> Vec<usize> {
    let mut indices: Vec<usize> = (0..ideal.num_gens()).collect();
    indices.sort_by(|&a, &b| {
        ideal.gens()[a]
            .support()
            .lex_cmp(ideal.gens()[b].support())
    });
    indices
}

/// Backtracking search for a linear quotients ordering. Candidates are tried
/// in canonical order at every position, so the certificate is
/// deterministic. Worst case is factorial; the deadline aborts long
/// searches.
pub fn find_linear_quotients(
    ideal: &SqfIdeal,
) -> Result<Option<QuotientOrdering>, LinQuotError> {
    find_linear_quotients_within(ideal, None)
}

pub fn find_linear_quotients_within(
    ideal: &SqfIdeal,
    deadline: Option<Instant>,
) -> Result<Option<QuotientOrdering>, LinQuotError> {
    if ideal.is_zero() {
        return Err(LinQuotError::ZeroIdeal);
    }
    let supports: Vec<VarSet> = ideal.gens().iter().map(|g| g.support()).collect();
    let s = supports.len();
    struct Search<'a> {
        supports: &'a [VarSet],
        deadline: Option<Instant>,
        ticks: u32,
    }
    impl Search<'_> {
        fn run(
            &mut self,
            prefix: &mut Vec<usize>,
            prefix_supports: &mut Vec<VarSet>,
            counts: &mut Vec<usize>,
            used: &mut [bool],
        ) -> Result<bool, LinQuotError> {
            if prefix.len() == self.supports.len() {
                return Ok(true);
            }
            self.ticks = self.ticks.wrapping_add(1);
            if self.ticks.is_multiple_of(1024) {
                if let Some(deadline) = self.deadline {
                    if Instant::now() > deadline {
                        return Err(LinQuotError::Timeout);
                    }
                }
            }
            for i in 0..self.supports.len() {
                if used[i] {
                    continue;
                }
                let step = if prefix.is_empty() {
                    Some(0)
                } else {
                    step_is_linear(prefix_supports, self.supports[i])
                };
                if let Some(count) = step {
                    used[i] = true;
                    prefix.push(i);
                    prefix_supports.push(self.supports[i]);
                    if prefix.len() > 1 {
                        counts.push(count);
                    }
                    if self.run(prefix, prefix_supports, counts, used)? {
                        return Ok(true);
                    }
                    if prefix.len() > 1 {
                        counts.pop();
                    }
                    prefix_supports.pop();
                    prefix.pop();
                    used[i] = false;
                }
            }
            Ok(false)
        }
    }
    let mut search = Search { supports: &supports, deadline, ticks: 0 };
    let mut prefix = Vec::with_capacity(s);
    let mut prefix_supports = Vec::with_capacity(s);
    let mut counts = Vec::with_capacity(s.saturating_sub(1));
    let mut used = vec![false; s];
    if search.run(&mut prefix, &mut prefix_supports, &mut counts, &mut used)? {
        Ok(Some(QuotientOrdering {
            ambient: ideal.ambient(),
            ordering: prefix,
            colon_counts: counts,
        }))
    } else {
        Ok(None)
    }
}

/// depth(S/I) from a certificate; delegates single-generator ideals back to
/// the homology engine by failing with `SingleGenerator`.
pub fn depth_from_linear_quotients(cert: &QuotientOrdering) -> Result<usize, LinQuotError> {
    cert.depth()
}

/// Basis exchange check for squarefree ideals generated in one degree:
/// for all generators u, v and x_k | u with x_k not dividing v, some
/// x_l | v with x_l not dividing u has x_l * u / x_k in the ideal.
pub fn is_matroidal(ideal: &SqfIdeal) -> Result<bool, LinQuotError> {
    if ideal.is_zero() {
        return Err(LinQuotError::ZeroIdeal);
    }
    if !ideal.is_single_degree() {
        return Err(LinQuotError::MixedDegrees);
    }
    let supports: Vec<VarSet> = ideal.gens().iter().map(|g| g.support()).collect();
    let member: std::collections::HashSet<VarSet> = supports.iter().copied().collect();
    for &u in &supports {
        for &v in &supports {
            for from in (u - v).iter() {
                let found = (v - u).iter().any(|to| {
                    let swapped = u.without(from).with(to);
                    member.contains(&swapped)
                });
                if !found {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Symmetric exchange check for monomials with exponents, all of one degree.
pub fn is_polymatroidal(gens: &[ExpMonomial]) -> Result<bool, LinQuotError> {
    if gens.is_empty() {
        return Err(LinQuotError::ZeroIdeal);
    }
    let degree = gens[0].degree();
    if gens.iter().any(|g| g.degree() != degree) {
        return Err(LinQuotError::MixedDegrees);
    }
    let member: std::collections::HashSet<&ExpMonomial> = gens.iter().collect();
    let ambient = gens[0].ambient();
    for u in gens {
        for v in gens {
            for from in 1..=ambient {
                if u.exponent(from) <= v.exponent(from) {
                    continue;
                }
                let found = (1..=ambient).any(|to| {
                    u.exponent(to) < v.exponent(to) && member.contains(&u.exchange(from, to))
                });
                if !found {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PreservedProperty {
    LinearQuotients,
    Matroidal,
}

/// Verification that a property of a monomial ideal descends to its
/// squarefree part: both sides are checked and reported.
#[derive(Clone, Debug, Serialize)]
pub struct PreservationReport {
    pub property: PreservedProperty,
    pub input_generators: usize,
    pub squarefree_generators: usize,
    /// Certificate on the input, for the linear quotients property.
    pub input_ordering: Option<Vec<usize>>,
    /// Certificate on the squarefree part.
    pub squarefree_cert: Option<QuotientOrdering>,
}

/// Verify a property on an exponent ideal and again on its squarefree part.
/// Fails with `PropertyNotVerified` when the input side does not hold, so
/// the report always witnesses the descent statement.
pub fn squarefree_part_preserves(
    gens: &[ExpMonomial],
    ambient: usize,
    property: PreservedProperty,
) -> Result<PreservationReport, LinQuotError> {
    if gens.is_empty() {
        return Err(LinQuotError::ZeroIdeal);
    }
    let part = crate::ideal::squarefree_part(gens, ambient)
        .map_err(|e| LinQuotError::Precondition(e.to_string()))?;
    match property {
        PreservedProperty::Matroidal => {
            if !is_polymatroidal(gens)? {
                return Err(LinQuotError::PropertyNotVerified(
                    "input is not polymatroidal".into(),
                ));
            }
            if part.is_zero() {
                return Err(LinQuotError::PropertyNotVerified(
                    "squarefree part is zero".into(),
                ));
            }
            if !is_matroidal(&part)? {
                return Err(LinQuotError::PropertyNotVerified(
                    "squarefree part fails the exchange property".into(),
                ));
            }
            Ok(PreservationReport {
                property,
                input_generators: gens.len(),
                squarefree_generators: part.num_gens(),
                input_ordering: None,
                squarefree_cert: None,
            })
        }
        PreservedProperty::LinearQuotients => {
            let input_ordering = find_linear_quotients_exp(gens).ok_or_else(|| {
                LinQuotError::PropertyNotVerified("input has no linear quotients".into())
            })?;
            if part.is_zero() {
                return Err(LinQuotError::PropertyNotVerified(
                    "squarefree part is zero".into(),
                ));
            }
            let cert = find_linear_quotients(&part)?.ok_or_else(|| {
                LinQuotError::PropertyNotVerified(
                    "squarefree part has no linear quotients".into(),
                )
            })?;
            Ok(PreservationReport {
                property,
                input_generators: gens.len(),
                squarefree_generators: part.num_gens(),
                input_ordering: Some(input_ordering),
                squarefree_cert: Some(cert),
            })
        }
    }
}

/// Linear quotients search over exponent monomials (backtracking, canonical
/// candidate order).
pub fn find_linear_quotients_exp(gens: &[ExpMonomial]) -> Option<Vec<usize>> {
    fn step_linear(prefix: &[&ExpMonomial], u: &ExpMonomial) -> bool {
        let colon = colon_generators_exp(
            &prefix.iter().map(|m| (*m).clone()).collect::<Vec<_>>(),
            u,
        );
        colon.iter().all(|c| c.as_variable().is_some())
    }
    fn rec<'a>(
        gens: &'a [ExpMonomial],
        prefix: &mut Vec<&'a ExpMonomial>,
        order: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        if order.len() == gens.len() {
            return true;
        }
        for i in 0..gens.len() {
            if used[i] {
                continue;
            }
            if prefix.is_empty() || step_linear(prefix, &gens[i]) {
                used[i] = true;
                prefix.push(&gens[i]);
                order.push(i);
                if rec(gens, prefix, order, used) {
                    return true;
                }
                order.pop();
                prefix.pop();
                used[i] = false;
            }
        }
        false
    }
    let mut prefix = Vec::new();
    let mut order = Vec::new();
    let mut used = vec![false; gens.len()];
    rec(gens, &mut prefix, &mut order, &mut used).then_some(order)
}

/// A minimum-depth witness for an edge-ideal power with linear quotients:
/// the position i whose generator support is a dominating k-matching vertex
/// set, with one earlier exchange generator for every outside vertex.
#[derive(Clone, Debug, Serialize)]
pub struct MinDepthWitness {
    /// 1-based position in the certified ordering.
    pub position: usize,
    pub matching: Matching,
    pub exchanges: Vec<ExchangeStep>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExchangeStep {
    pub outside_vertex: usize,
    /// 1-based earlier position whose support fits inside V(M) ∪ {t}.
    pub earlier_position: usize,
    pub matching: Matching,
}

/// Decide whether depth(S/I(G)^[k]) = 2k - 1 from a linear quotients
/// certificate: search for a position i such that every vertex t outside
/// supp(u_i) admits an earlier generator inside supp(u_i) ∪ {t}.
///
/// A single full-support generator (necessarily s = 1, n = 2k) is the
/// degenerate positive case: the formula range is empty but the principal
/// quotient has depth n - 1 = 2k - 1.
pub fn mindepth_criterion(
    graph: &Graph,
    k: usize,
    cert: &QuotientOrdering,
) -> Result<Option<MinDepthWitness>, LinQuotError> {
    let isolated = graph.isolated_vertices();
    if !isolated.is_empty() {
        return Err(LinQuotError::Precondition(format!(
            "graph has isolated vertices {isolated}"
        )));
    }
    let nu = graph.matching_number();
    if k == 0 || k > nu {
        return Err(LinQuotError::Precondition(format!(
            "k={k} out of range 1..={nu}"
        )));
    }
    let power = graph.edge_ideal().squarefree_power(k);
    let replay = verify_linear_quotients(&power, &cert.ordering)
        .ok_or_else(|| LinQuotError::InvalidCertificate("ordering fails to replay".into()))?;
    if replay.colon_counts != cert.colon_counts || replay.ambient != cert.ambient {
        return Err(LinQuotError::InvalidCertificate(
            "colon counts disagree with replay".into(),
        ));
    }
    let gens = power.gens();
    let full = VarSet::full(graph.n());
    let supports: Vec<VarSet> = cert.ordering.iter().map(|&i| gens[i].support()).collect();
    if supports.len() == 1 {
        if supports[0] == full {
            let matching = graph
                .perfect_matching_within(supports[0])
                .expect("generator support carries a k-matching");
            return Ok(Some(MinDepthWitness { position: 1, matching, exchanges: Vec::new() }));
        }
        return Ok(None);
    }
    'candidates: for (pos, &support) in supports.iter().enumerate().skip(1) {
        let outside = full - support;
        let mut exchanges = Vec::with_capacity(outside.len());
        for t in outside.iter() {
            let target = support.with(t);
            let earlier = supports[..pos]
                .iter()
                .position(|&w| w.is_subset(target));
            match earlier {
                Some(j) => {
                    let m_prime = graph
                        .perfect_matching_within(supports[j])
                        .expect("generator support carries a k-matching");
                    exchanges.push(ExchangeStep {
                        outside_vertex: t,
                        earlier_position: j + 1,
                        matching: m_prime,
                    });
                }
                None => continue 'candidates,
            }
        }
        let matching = graph
            .perfect_matching_within(support)
            .expect("generator support carries a k-matching");
        return Ok(Some(MinDepthWitness {
            position: pos + 1,
            matching,
            exchanges,
        }));
    }
    Ok(None)
}
