//! Graded Betti numbers via Hochster's formula, depth, and Alexander
//! duality.
//!
//! For a squarefree ideal I with Stanley–Reisner complex Δ on `{1..=n}`,
//!
//! ```text
//! β_{i,j}(S/I) = Σ_{|W| = j} dim_K H̃_{j-i-1}(Δ_W; K)
//! ```
//!
//! Depth is read off through Auslander–Buchsbaum as `n - projdim(S/I)`. The
//! projective dimension scan walks `j = n, n-1, ...` and, inside each
//! window W, asks for homology dimensions in ascending order, stopping as
//! soon as no lower level can still raise the maximum: minimal generators
//! in degree d force `β_{i,j} = 0` whenever `j < d + i - 1`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::bits::{subsets_of_size, VarSet};
use crate::complex::minimal_transversals;
use crate::field::FieldSpec;
use crate::graph::{Graph, GraphError};
use crate::homology::{Budget, HomologyError, LevelHomology};
use crate::ideal::{SqfIdeal, SqfMonomial};

/// Graded Betti numbers of the quotient S/I: entries for i >= 1 plus the
/// constant β_{0,0} = 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    pub ambient: usize,
    pub field: FieldSpec,
    entries: BTreeMap<(usize, usize), u64>,
}

impl BettiTable {
    pub fn betti(&self, i: usize, j: usize) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Nonzero entries as `(i, j, value)` sorted by (i, j).
    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        self.entries.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    pub fn projdim(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    pub fn depth(&self) -> usize {
        self.ambient - self.projdim()
    }

    /// Castelnuovo–Mumford regularity of the quotient S/I.
    pub fn regularity_quotient(&self) -> usize {
        self.entries
            .keys()
            .map(|&(i, j)| j - i)
            .max()
            .unwrap_or(0)
    }

    /// Regularity of the ideal itself. The resolution of I is that of S/I
    /// shifted one homological step, so reg(I) = reg(S/I) + 1 for I != 0.
    pub fn regularity_ideal(&self) -> usize {
        self.entries
            .iter()
            .filter(|(&(i, _), _)| i >= 1)
            .map(|(&(i, j), _)| j - i + 1)
            .max()
            .unwrap_or(0)
    }
}

/// The full graded Betti table of S/I by Hochster's formula.
pub fn hochster_betti(
    ideal: &SqfIdeal,
    field: FieldSpec,
    budget: &Budget,
) -> Result<BettiTable, HomologyError> {
    let n = ideal.ambient();
    budget.check_ambient(n)?;
    let nonfaces: Vec<VarSet> = ideal.gens().iter().map(|g| g.support()).collect();
    let mut entries: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    entries.insert((0, 0), 1);
    for j in 1..=n {
        let windows = subsets_of_size(n, j);
        let partial: Result<Vec<Vec<(usize, u64)>>, HomologyError> = windows
            .par_iter()
            .map(|&w| {
                let mut lh = LevelHomology::new(&nonfaces, w, j, field, budget)?;
                let mut found = Vec::new();
                for t in -1..=(j as isize - 1) {
                    let h = lh.homology_dim(t);
                    if h > 0 {
                        let i = (j as isize - t - 1) as usize;
                        found.push((i, h));
                    }
                }
                Ok(found)
            })
            .collect();
        for found in partial? {
            for (i, h) in found {
                if i >= 1 {
                    *entries.entry((i, j)).or_insert(0) += h;
                }
            }
        }
    }
    Ok(BettiTable { ambient: n, field, entries })
}

/// A single Betti number β_{i,j}(S/I), summing homology over the size-j
/// windows only.
pub fn hochster_entry(
    ideal: &SqfIdeal,
    i: usize,
    j: usize,
    field: FieldSpec,
    budget: &Budget,
) -> Result<u64, HomologyError> {
    let n = ideal.ambient();
    budget.check_ambient(n)?;
    if j > n {
        return Ok(0);
    }
    if i == 0 || j == 0 {
        return Ok(u64::from(i == 0 && j == 0));
    }
    let t = j as isize - i as isize - 1;
    if t < -1 {
        return Ok(0);
    }
    let nonfaces: Vec<VarSet> = ideal.gens().iter().map(|g| g.support()).collect();
    let windows = subsets_of_size(n, j);
    let partial: Result<Vec<u64>, HomologyError> = windows
        .par_iter()
        .map(|&w| {
            let cap = ((t + 2) as usize).min(j);
            let mut lh = LevelHomology::new(&nonfaces, w, cap, field, budget)?;
            Ok(lh.homology_dim(t))
        })
        .collect();
    Ok(partial?.into_iter().sum())
}

/// Exact depth of S/I over the given field.
///
/// Runs the projective-dimension scan: at window size j the largest
/// achievable homological index is j - d + 1 (d the minimum generator
/// degree), so the scan stops as soon as the best index found dominates
/// every remaining level. Within a window only homology dimensions that
/// could still improve the maximum are evaluated, lowest dimension first.
pub fn depth(
    ideal: &SqfIdeal,
    field: FieldSpec,
    budget: &Budget,
) -> Result<usize, HomologyError> {
    let n = ideal.ambient();
    budget.check_ambient(n)?;
    if ideal.is_zero() {
        return Err(HomologyError::ZeroIdeal);
    }
    let d = ideal.min_degree().expect("nonzero ideal");
    let nonfaces: Vec<VarSet> = ideal.gens().iter().map(|g| g.support()).collect();
    let mut best: usize = 0;
    for j in (1..=n).rev() {
        // Indices reachable at this level are capped at j - d + 1.
        if best >= (j + 1).saturating_sub(d) {
            break;
        }
        let windows = subsets_of_size(n, j);
        // Homology dimension t contributes index i = j - t - 1; indices
        // above best correspond to t < j - 1 - best, and the vanishing
        // bound keeps t >= d - 2.
        let t_lo = d as isize - 2;
        let t_hi = j as isize - 2 - best as isize;
        let level_best = windows
            .par_iter()
            .map(|&w| {
                let cap = ((t_hi + 2) as usize).min(j);
                let mut lh = LevelHomology::new(&nonfaces, w, cap, field, budget)?;
                for t in t_lo..=t_hi {
                    if lh.homology_dim(t) > 0 {
                        return Ok(Some((j as isize - t - 1) as usize));
                    }
                }
                Ok(None)
            })
            .collect::<Result<Vec<Option<usize>>, HomologyError>>()?
            .into_iter()
            .flatten()
            .max();
        if let Some(i) = level_best {
            best = best.max(i);
        }
    }
    Ok(n - best)
}

/// Whether the edge-ideal power I(G)^[k] attains the depth lower bound
/// 2k - 1, decided by the single homology group H̃_{2k-2}(Γ_k(G)).
pub fn top_betti_mindepth(
    graph: &Graph,
    k: usize,
    field: FieldSpec,
    budget: &Budget,
) -> Result<bool, TopBettiError> {
    let isolated = graph.isolated_vertices();
    if !isolated.is_empty() {
        return Err(TopBettiError::Graph(GraphError::IsolatedVertices(isolated)));
    }
    let nu = graph.matching_number();
    if k == 0 || k > nu {
        return Err(TopBettiError::Graph(GraphError::OutOfRange { k, max: nu }));
    }
    budget.check_ambient(graph.n()).map_err(TopBettiError::Homology)?;
    let power = graph.edge_ideal().squarefree_power(k);
    let nonfaces: Vec<VarSet> = power.gens().iter().map(|g| g.support()).collect();
    let w = VarSet::full(graph.n());
    let t = 2 * k as isize - 2;
    let mut lh = LevelHomology::new(&nonfaces, w, 2 * k, field, budget)
        .map_err(TopBettiError::Homology)?;
    Ok(lh.homology_dim(t) > 0)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TopBettiError {
    #[error(transparent)]
    Graph(GraphError),
    #[error(transparent)]
    Homology(HomologyError),
}

/// Alexander dual: the ideal generated by the minimal vertex covers of the
/// generator supports. It is an involution on proper nonzero squarefree
/// ideals.
pub fn alexander_dual(ideal: &SqfIdeal) -> Result<SqfIdeal, HomologyError> {
    if ideal.is_zero() {
        return Err(HomologyError::ZeroIdeal);
    }
    let supports: Vec<VarSet> = ideal.gens().iter().map(|g| g.support()).collect();
    let covers = minimal_transversals(&supports);
    SqfIdeal::minimalize(
        ideal.ambient(),
        covers.into_iter().map(SqfMonomial::from_support),
    )
    .map_err(|_| HomologyError::ZeroIdeal)
}

/// Regularity of the Alexander dual ideal, the projective-dimension
/// certificate of Terai's identity `projdim(S/I) = reg(I^dual)`.
///
/// reg(I^dual) = reg(S/I^dual) + 1, and by Hochster reg(S/I^dual) is the
/// largest t + 1 over all windows W with H̃_t((Δ^dual)_W) nonzero. The scan
/// walks t downward and only ever evaluates one homology dimension per
/// window.
pub fn dual_regularity(
    ideal: &SqfIdeal,
    field: FieldSpec,
    budget: &Budget,
) -> Result<usize, HomologyError> {
    let dual = alexander_dual(ideal)?;
    let n = dual.ambient();
    budget.check_ambient(n)?;
    let nonfaces: Vec<VarSet> = dual.gens().iter().map(|g| g.support()).collect();
    // Largest face size of the dual complex bounds the top dimension.
    let max_face = {
        let mut size = 0usize;
        'outer: for s in (0..=n).rev() {
            for w in subsets_of_size(n, s) {
                if !nonfaces.iter().any(|nf| nf.is_subset(w)) {
                    size = s;
                    break 'outer;
                }
            }
        }
        size
    };
    for t in (-1..=(max_face as isize - 1)).rev() {
        let found = (t.max(0) as usize + 1..=n)
            .flat_map(|j| subsets_of_size(n, j))
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&w| {
                let cap = ((t + 2) as usize).min(w.len());
                let mut lh = LevelHomology::new(&nonfaces, w, cap, field, budget)?;
                Ok(lh.homology_dim(t) > 0)
            })
            .collect::<Result<Vec<bool>, HomologyError>>()?
            .into_iter()
            .any(|b| b);
        if found {
            // reg(S/I^dual) = t + 1; the ideal regularity adds one.
            return Ok((t + 2) as usize);
        }
    }
    // No homology anywhere: S/I^dual has regularity 0.
    Ok(1)
}
