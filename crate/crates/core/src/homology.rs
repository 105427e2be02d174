//! Exact reduced simplicial homology.
//!
//! Dimensions are computed from boundary ranks:
//! `dim H̃_t = f_t - rank ∂_t - rank ∂_{t+1}`, with the augmented boundary
//! `∂_0` sending every vertex to the empty face. The irrelevant complex
//! therefore has `H̃_{-1} = 1` and the void complex has no homology at all.
//!
//! For the Hochster-style computations the faces of an induced subcomplex
//! are enumerated directly from the minimal non-faces, capped at the largest
//! size the caller needs, so that a single homology dimension never pays for
//! the whole complex.

use std::collections::HashMap;

use serde::Serialize;
use thiserror::Error;

use crate::bits::VarSet;
use crate::complex::SimplicialComplex;
use crate::field::FieldSpec;
use crate::linalg::SparseMatrix;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("face budget exceeded: more than {budget} faces")]
    FaceBudgetExceeded { budget: usize },
    #[error("ambient {ambient} exceeds the configured budget {budget}; raise it explicitly to proceed")]
    BudgetExceeded { ambient: usize, budget: usize },
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
}

/// Resource guard for homology-heavy computations.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    /// Largest ambient variable count accepted by the Hochster machinery.
    pub max_ambient: usize,
    /// Largest number of faces a single complex may enumerate.
    pub max_faces: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_ambient: 16, max_faces: 1 << 22 }
    }
}

impl Budget {
    pub fn with_max_ambient(max_ambient: usize) -> Self {
        Budget { max_ambient, ..Budget::default() }
    }

    pub fn check_ambient(&self, ambient: usize) -> Result<(), HomologyError> {
        if ambient > self.max_ambient {
            Err(HomologyError::BudgetExceeded { ambient, budget: self.max_ambient })
        } else {
            Ok(())
        }
    }
}

/// Reduced homology dimensions `H̃_{-1}, H̃_0, ..., H̃_dim`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyVector {
    pub field: FieldSpec,
    dims: Vec<u64>,
}

impl HomologyVector {
    pub fn dim(&self, t: isize) -> u64 {
        if t < -1 {
            return 0;
        }
        self.dims.get((t + 1) as usize).copied().unwrap_or(0)
    }

    /// Dimensions indexed from t = -1 upward.
    pub fn dims(&self) -> &[u64] {
        &self.dims
    }

    pub fn is_trivial(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }
}

/// Reduced homology of a facet-represented complex over the given field.
pub fn reduced_homology(
    cx: &SimplicialComplex,
    field: FieldSpec,
    budget: &Budget,
) -> Result<HomologyVector, HomologyError> {
    let faces = cx.faces_by_size(None);
    let total: usize = faces.iter().map(|f| f.len()).sum();
    if total > budget.max_faces {
        return Err(HomologyError::FaceBudgetExceeded { budget: budget.max_faces });
    }
    Ok(HomologyVector { field, dims: homology_from_faces(&faces, field) })
}

/// All reduced homology dimensions from the faces grouped by size.
pub(crate) fn homology_from_faces(faces: &[Vec<VarSet>], field: FieldSpec) -> Vec<u64> {
    if faces.is_empty() {
        return Vec::new();
    }
    let top = faces.len() - 1; // largest face size
    let mut ranks = vec![0usize; top + 1]; // ranks[s] = rank of ∂ from size s+1 to size s... see below
    // ranks[s] = rank of the boundary map from (s+1)-element faces to
    // s-element faces, i.e. rank ∂_s in homological indexing.
    for s in 0..top {
        ranks[s] = boundary_matrix(&faces[s], &faces[s + 1]).rank(field);
    }
    let mut dims = Vec::with_capacity(top + 1);
    for s in 0..=top {
        let f = faces[s].len() as i64;
        let below = if s == 0 { 0 } else { ranks[s - 1] as i64 };
        let above = if s < top { ranks[s] as i64 } else { 0 };
        let h = f - below - above;
        debug_assert!(h >= 0, "negative homology dimension");
        dims.push(h as u64);
    }
    dims
}

/// Boundary matrix between consecutive face levels: rows are the smaller
/// faces, columns the larger ones, entries the usual alternating signs.
pub(crate) fn boundary_matrix(lower: &[VarSet], upper: &[VarSet]) -> SparseMatrix {
    let index: HashMap<VarSet, u32> = lower
        .iter()
        .enumerate()
        .map(|(i, &f)| (f, i as u32))
        .collect();
    // Rows indexed by lower faces; build transposed (column entries per
    // upper face), then emit rows.
    let mut rows: Vec<Vec<(u32, i64)>> = vec![Vec::new(); lower.len()];
    for (col, &face) in upper.iter().enumerate() {
        let mut sign = 1i64;
        for v in face.iter() {
            let sub = face.without(v);
            let row = index[&sub];
            rows[row as usize].push((col as u32, sign));
            sign = -sign;
        }
    }
    let mut m = SparseMatrix::new(upper.len());
    for row in rows {
        let mut row = row;
        row.sort_by_key(|&(c, _)| c);
        m.push_row(row);
    }
    m
}

/// Face enumeration inside `w` for the complex whose minimal non-faces are
/// given, capped at `max_size`. `result[s]` holds the faces of size s in
/// lexicographic order.
pub(crate) fn faces_within(
    nonfaces: &[VarSet],
    w: VarSet,
    max_size: usize,
    budget: &Budget,
) -> Result<Vec<Vec<VarSet>>, HomologyError> {
    // Only non-faces inside w can ever obstruct.
    let relevant: Vec<VarSet> = nonfaces
        .iter()
        .filter(|nf| nf.is_subset(w))
        .copied()
        .collect();
    if relevant.iter().any(|nf| nf.is_empty()) {
        // The empty set is a non-face: void complex.
        return Ok(Vec::new());
    }
    let verts: Vec<usize> = w.to_vec();
    let mut by_vertex: HashMap<usize, Vec<VarSet>> = HashMap::new();
    for nf in &relevant {
        for v in nf.iter() {
            by_vertex.entry(v).or_default().push(*nf);
        }
    }
    let empty: Vec<VarSet> = Vec::new();
    let mut result: Vec<Vec<VarSet>> = vec![vec![VarSet::EMPTY]];
    let mut count = 1usize;
    let mut stack: Vec<(VarSet, usize)> = vec![(VarSet::EMPTY, 0)];
    while let Some((face, start)) = stack.pop() {
        if face.len() >= max_size {
            continue;
        }
        let mut children = Vec::new();
        for (pos, &v) in verts.iter().enumerate().skip(start) {
            let bigger = face.with(v);
            let blocked = by_vertex
                .get(&v)
                .unwrap_or(&empty)
                .iter()
                .any(|nf| nf.is_subset(bigger));
            if !blocked {
                children.push((bigger, pos + 1));
            }
        }
        count += children.len();
        if count > budget.max_faces {
            return Err(HomologyError::FaceBudgetExceeded { budget: budget.max_faces });
        }
        for &(bigger, _) in &children {
            while result.len() <= bigger.len() {
                result.push(Vec::new());
            }
            result[bigger.len()].push(bigger);
        }
        stack.extend(children.into_iter().rev());
    }
    Ok(result)
}

/// Incremental homology evaluation for one induced subcomplex: dimensions
/// are requested one at a time in ascending order and boundary ranks are
/// shared between neighbours.
pub(crate) struct LevelHomology {
    faces: Vec<Vec<VarSet>>,
    field: FieldSpec,
    ranks: Vec<Option<usize>>,
}

impl LevelHomology {
    /// Prepare the subcomplex of the non-face family inside `w`, with faces
    /// capped at `max_size` (so dimensions up to `max_size - 2` are exact).
    pub fn new(
        nonfaces: &[VarSet],
        w: VarSet,
        max_size: usize,
        field: FieldSpec,
        budget: &Budget,
    ) -> Result<Self, HomologyError> {
        let faces = faces_within(nonfaces, w, max_size, budget)?;
        let levels = faces.len();
        Ok(LevelHomology { faces, field, ranks: vec![None; levels] })
    }

    fn face_count(&self, size: usize) -> usize {
        self.faces.get(size).map_or(0, |f| f.len())
    }

    /// rank of the boundary map from (s+1)-faces to s-faces.
    fn rank(&mut self, s: usize) -> usize {
        if s + 1 >= self.faces.len() || self.faces[s + 1].is_empty() {
            return 0;
        }
        if let Some(r) = self.ranks[s] {
            return r;
        }
        let r = boundary_matrix(&self.faces[s], &self.faces[s + 1]).rank(self.field);
        self.ranks[s] = Some(r);
        r
    }

    /// dim H̃_t of the prepared subcomplex.
    pub fn homology_dim(&mut self, t: isize) -> u64 {
        let s = (t + 1) as usize; // face size for dimension t
        if self.faces.is_empty() {
            return 0;
        }
        let f = self.face_count(s) as i64;
        if f == 0 {
            return 0;
        }
        let below = if s == 0 { 0 } else { self.rank(s - 1) as i64 };
        let above = self.rank(s) as i64;
        let h = f - below - above;
        debug_assert!(h >= 0);
        h as u64
    }
}
