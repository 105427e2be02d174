//! Normalized depth profiles and corpus scans.
//!
//! The profile of an ideal records, for every k up to the vanishing bound,
//! the minimum generator degree d_k of the k-th squarefree power, its depth,
//! and the normalized value g(k) = depth - (d_k - 1). The scan machinery
//! profiles whole corpora and reports monotonicity violations with
//! replayable input files.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::betti;
use crate::field::FieldSpec;
use crate::graph::Graph;
use crate::homology::{Budget, HomologyError};
use crate::ideal::{IdealError, SqfIdeal};
use crate::linquot;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ProfileError {
    #[error(transparent)]
    Ideal(IdealError),
    #[error(transparent)]
    Homology(HomologyError),
}

/// How depths inside a profile are computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum DepthMethod {
    /// Linear quotients fast path when a certificate is found, homology
    /// otherwise.
    Auto,
    /// Hochster scan only.
    Homology,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RowMethod {
    LinearQuotients,
    Homology,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthProfileRow {
    pub k: usize,
    pub min_degree: usize,
    pub depth: usize,
    /// g(k) = depth - (min_degree - 1).
    pub normalized: usize,
    pub method: RowMethod,
    pub generator_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DepthProfile {
    pub descriptor: String,
    pub ambient: usize,
    pub field: FieldSpec,
    pub nu: usize,
    pub rows: Vec<DepthProfileRow>,
}

impl DepthProfile {
    pub fn normalized_values(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.normalized).collect()
    }

    pub fn depths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.depth).collect()
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ProfileOptions {
    pub method: DepthMethod,
    pub budget: Budget,
    /// Abort the linear-quotients search after this long and fall back to
    /// homology.
    pub lq_deadline: Option<Duration>,
}

impl Default for ProfileOptions {
    fn default() -> Self {
        ProfileOptions {
            method: DepthMethod::Auto,
            budget: Budget::default(),
            lq_deadline: Some(Duration::from_secs(5)),
        }
    }
}

/// Full normalized depth profile of a nonzero ideal.
pub fn profile(
    ideal: &SqfIdeal,
    descriptor: &str,
    field: FieldSpec,
    opts: &ProfileOptions,
) -> Result<DepthProfile, ProfileError> {
    if ideal.is_zero() {
        return Err(ProfileError::Ideal(IdealError::ZeroIdeal));
    }
    opts.budget
        .check_ambient(ideal.ambient())
        .map_err(ProfileError::Homology)?;
    let nu = ideal.nu().map_err(ProfileError::Ideal)?;
    let mut rows = Vec::with_capacity(nu);
    let mut power = ideal.clone();
    for k in 1..=nu {
        if k > 1 {
            power = power
                .squarefree_product(ideal)
                .expect("equal ambients by construction");
        }
        let min_degree = power.min_degree().expect("power is nonzero below nu");
        let (depth, method) = row_depth(&power, field, opts)?;
        rows.push(DepthProfileRow {
            k,
            min_degree,
            depth,
            normalized: depth - (min_degree - 1),
            method,
            generator_count: power.num_gens(),
        });
    }
    Ok(DepthProfile {
        descriptor: descriptor.to_string(),
        ambient: ideal.ambient(),
        field,
        nu,
        rows,
    })
}

fn row_depth(
    power: &SqfIdeal,
    field: FieldSpec,
    opts: &ProfileOptions,
) -> Result<(usize, RowMethod), ProfileError> {
    if matches!(opts.method, DepthMethod::Auto) {
        let deadline = opts.lq_deadline.map(|d| Instant::now() + d);
        if let Ok(Some(cert)) = linquot::find_linear_quotients_within(power, deadline) {
            if let Ok(depth) = cert.depth() {
                return Ok((depth, RowMethod::LinearQuotients));
            }
        }
    }
    let depth = betti::depth(power, field, &opts.budget).map_err(ProfileError::Homology)?;
    Ok((depth, RowMethod::Homology))
}

/// Nonincreasing check for the normalized values g(1) >= g(2) >= ...
pub fn check_nonincreasing(profile: &DepthProfile) -> bool {
    profile
        .rows
        .windows(2)
        .all(|w| w[0].normalized >= w[1].normalized)
}

/// One scan entry: a replayable description plus the ideal itself.
#[derive(Clone, Debug)]
pub struct ScanEntry {
    pub id: String,
    pub ideal: SqfIdeal,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanViolation {
    pub id: String,
    pub normalized: Vec<usize>,
    /// Replayable input in the ideal text format.
    pub replay: String,
}

/// Tail pattern of a profile: g positive on 1..=positive_prefix and zero
/// afterwards (the shapes of interest when hunting prescribed profiles).
#[derive(Clone, Debug, Serialize)]
pub struct TailPattern {
    pub id: String,
    pub positive_prefix: usize,
    pub nu: usize,
    pub normalized: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub instances: usize,
    pub violations: Vec<ScanViolation>,
    pub tail_patterns: Vec<TailPattern>,
    pub errors: Vec<(String, String)>,
    pub elapsed_ms: u128,
}

/// Profile every entry, recording monotonicity violations and tail
/// patterns. Per-instance errors are logged and the scan continues. The
/// report is sorted by instance id regardless of execution order.
pub fn scan(entries: &[ScanEntry], field: FieldSpec, opts: &ProfileOptions) -> ScanReport {
    let start = Instant::now();
    let results: Vec<_> = entries
        .par_iter()
        .map(|entry| {
            let outcome = profile(&entry.ideal, &entry.id, field, opts);
            (entry, outcome)
        })
        .collect();
    let mut violations = Vec::new();
    let mut tail_patterns = Vec::new();
    let mut errors = Vec::new();
    for (entry, outcome) in results {
        match outcome {
            Err(e) => errors.push((entry.id.clone(), e.to_string())),
            Ok(p) => {
                let g = p.normalized_values();
                if !check_nonincreasing(&p) {
                    violations.push(ScanViolation {
                        id: entry.id.clone(),
                        normalized: g.clone(),
                        replay: crate::io::format_ideal(&entry.ideal),
                    });
                }
                // Strictly positive prefix followed by zeros.
                let prefix = g.iter().take_while(|&&v| v > 0).count();
                if prefix >= 1 && g[prefix..].iter().all(|&v| v == 0) {
                    tail_patterns.push(TailPattern {
                        id: entry.id.clone(),
                        positive_prefix: prefix,
                        nu: p.nu,
                        normalized: g,
                    });
                }
            }
        }
    }
    violations.sort_by(|a, b| a.id.cmp(&b.id));
    tail_patterns.sort_by(|a, b| a.id.cmp(&b.id));
    errors.sort();
    ScanReport {
        instances: entries.len(),
        violations,
        tail_patterns,
        errors,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

/// All labeled graphs on exactly n vertices without isolated vertices.
/// With `dedup`, isomorphic duplicates are removed: graphs are bucketed by
/// a cheap invariant signature (degree sequence and per-vertex neighbor
/// degree multisets) and compared exactly inside each bucket, so only true
/// duplicates are dropped.
pub fn graphs_without_isolated(n: usize, dedup: bool) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect();
    let mut graphs = Vec::new();
    let mut buckets: std::collections::HashMap<Vec<Vec<usize>>, Vec<usize>> =
        std::collections::HashMap::new();
    'mask: for mask in 0u64..(1u64 << pairs.len()) {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e)
            .collect();
        let g = Graph::new(n, edges).expect("generated edges are valid");
        if !g.isolated_vertices().is_empty() {
            continue;
        }
        if dedup {
            let sig = signature(&g);
            let bucket = buckets.entry(sig).or_default();
            for &idx in bucket.iter() {
                if isomorphic(&g, &graphs[idx]) {
                    continue 'mask;
                }
            }
            bucket.push(graphs.len());
        }
        graphs.push(g);
    }
    graphs
}

fn signature(g: &Graph) -> Vec<Vec<usize>> {
    let mut sig: Vec<Vec<usize>> = (1..=g.n())
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|w| g.degree(w)).collect();
            nd.sort();
            nd.insert(0, g.degree(v));
            nd
        })
        .collect();
    sig.sort();
    sig
}

/// Exact isomorphism by brute force over vertex permutations; only ever
/// called inside small signature buckets.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    use itertools::Itertools;
    let n = a.n();
    if n != b.n() || a.num_edges() != b.num_edges() {
        return false;
    }
    let a_edges = a.edges();
    (1..=n).permutations(n).any(|perm| {
        a_edges.iter().all(|&(u, v)| b.has_edge(perm[u - 1], perm[v - 1]))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    fn opts() -> ProfileOptions {
        ProfileOptions::default()
    }

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn path_complement_profile() {
        let g = FamilySpec::PathComplement(6).build().unwrap();
        let p = profile(&g.edge_ideal(), "path_complement:6", q(), &opts()).unwrap();
        assert_eq!(p.nu, 3);
        assert_eq!(p.depths(), vec![2, 3, 5]);
        assert_eq!(p.normalized_values(), vec![1, 0, 0]);
        assert!(check_nonincreasing(&p));
    }

    #[test]
    fn homology_only_profile_agrees() {
        let g = FamilySpec::Whiskered(vec![1, 1]).build().unwrap();
        let auto = profile(&g.edge_ideal(), "w11", q(), &opts()).unwrap();
        let hom = profile(
            &g.edge_ideal(),
            "w11",
            q(),
            &ProfileOptions { method: DepthMethod::Homology, ..opts() },
        )
        .unwrap();
        assert_eq!(auto.depths(), hom.depths());
    }

    #[test]
    fn nonincreasing_check() {
        let mk = |g: &[usize]| DepthProfile {
            descriptor: "synthetic".into(),
            ambient: 8,
            field: q(),
            nu: g.len(),
            rows: g
                .iter()
                .enumerate()
                .map(|(i, &v)| DepthProfileRow {
                    k: i + 1,
                    min_degree: 2 * (i + 1),
                    depth: v + 2 * (i + 1) - 1,
                    normalized: v,
                    method: RowMethod::Homology,
                    generator_count: 1,
                })
                .collect(),
        };
        assert!(check_nonincreasing(&mk(&[3, 1, 0, 0])));
        assert!(check_nonincreasing(&mk(&[0, 0])));
        assert!(!check_nonincreasing(&mk(&[0, 1])));
    }

    #[test]
    fn scan_of_empty_corpus() {
        let report = scan(&[], q(), &opts());
        assert_eq!(report.instances, 0);
        assert!(report.violations.is_empty());
    }

    #[test]
    fn scan_records_tail_patterns() {
        let g = FamilySpec::Whiskered(vec![1; 4]).build().unwrap();
        let entries = vec![ScanEntry { id: "whiskered:1,1,1,1".into(), ideal: g.edge_ideal() }];
        let report = scan(&entries, q(), &opts());
        assert!(report.violations.is_empty());
        assert_eq!(report.tail_patterns.len(), 1);
        assert_eq!(report.tail_patterns[0].positive_prefix, 2);
        assert_eq!(report.tail_patterns[0].normalized, vec![3, 1, 0, 0]);
    }

    #[test]
    fn corpus_counts() {
        // Labeled graphs without isolated vertices: 1 on n=2, 4 on n=3.
        assert_eq!(graphs_without_isolated(2, false).len(), 1);
        assert_eq!(graphs_without_isolated(3, false).len(), 4);
        // Up to isomorphism: 2 classes on 3 vertices (path and triangle).
        assert_eq!(graphs_without_isolated(3, true).len(), 2);
        // Inclusion-exclusion on 4 vertices: 64 - 32 + 12 - 4 + 1 = 41
        // labeled graphs without isolated vertices.
        let four = graphs_without_isolated(4, false);
        assert_eq!(four.len(), 41);
        let classes = graphs_without_isolated(4, true);
        assert_eq!(classes.len(), 7);
    }
}
