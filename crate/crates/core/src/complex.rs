//! Simplicial complexes given by their facets.
//!
//! Two degenerate complexes are distinguished: the void complex (no faces at
//! all, empty facet list) and the irrelevant complex (single empty facet,
//! whose only face is the empty set). The distinction matters for reduced
//! homology.

use std::fmt;

use serde::Serialize;

use crate::bits::{inclusion_maximal, inclusion_minimal, VarSet};
use crate::ideal::{SqfIdeal, SqfMonomial};

#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct SimplicialComplex {
    ambient: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    /// Complex generated by the given faces; only the inclusion-maximal ones
    /// are kept.
    pub fn from_facets(ambient: usize, faces: impl IntoIterator<Item = VarSet>) -> Self {
        SimplicialComplex {
            ambient,
            facets: inclusion_maximal(faces),
        }
    }

    /// No faces at all.
    pub fn void(ambient: usize) -> Self {
        SimplicialComplex { ambient, facets: Vec::new() }
    }

    /// Only the empty face.
    pub fn irrelevant(ambient: usize) -> Self {
        SimplicialComplex { ambient, facets: vec![VarSet::EMPTY] }
    }

    pub fn full_simplex(ambient: usize) -> Self {
        SimplicialComplex { ambient, facets: vec![VarSet::full(ambient)] }
    }

    /// The complex whose minimal non-faces are the given antichain: faces
    /// are exactly the sets containing none of them. Facets are the
    /// complements of the minimal transversals of the non-face hypergraph.
    pub fn from_minimal_nonfaces(ambient: usize, nonfaces: &[VarSet]) -> Self {
        let facets = minimal_transversals(nonfaces)
            .into_iter()
            .map(|t| t.complement_in(ambient))
            .collect::<Vec<_>>();
        SimplicialComplex::from_facets(ambient, facets)
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    pub fn is_irrelevant(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    /// Vertices lying in some face.
    pub fn vertices(&self) -> VarSet {
        self.facets.iter().fold(VarSet::EMPTY, |acc, f| acc | *f)
    }

    /// Dimension: `None` for the void complex, `Some(-1)` for the
    /// irrelevant complex.
    pub fn dim(&self) -> Option<isize> {
        self.facets
            .iter()
            .map(|f| f.len() as isize - 1)
            .max()
    }

    pub fn is_face(&self, face: VarSet) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn is_facet(&self, face: VarSet) -> bool {
        self.facets.contains(&face)
    }

    /// The induced subcomplex of faces contained in `w`.
    pub fn restrict(&self, w: VarSet) -> SimplicialComplex {
        SimplicialComplex::from_facets(self.ambient, self.facets.iter().map(|f| *f & w))
    }

    /// All faces grouped by cardinality (`result[s]` holds the faces of
    /// size s), optionally capped at `max_size`. Within each size class the
    /// canonical lexicographic order is produced.
    pub fn faces_by_size(&self, max_size: Option<usize>) -> Vec<Vec<VarSet>> {
        if self.is_void() {
            return Vec::new();
        }
        let cap = max_size.unwrap_or(self.ambient);
        let verts: Vec<usize> = self.vertices().to_vec();
        let mut result: Vec<Vec<VarSet>> = vec![vec![VarSet::EMPTY]];
        let mut stack: Vec<(VarSet, usize)> = vec![(VarSet::EMPTY, 0)];
        // Depth-first extension by ascending vertex yields lexicographic
        // order within each size class.
        while let Some((face, start)) = stack.pop() {
            if face.len() >= cap {
                continue;
            }
            let mut children = Vec::new();
            for (pos, &v) in verts.iter().enumerate().skip(start) {
                let bigger = face.with(v);
                if self.is_face(bigger) {
                    children.push((bigger, pos + 1));
                }
            }
            for &(bigger, _) in &children {
                while result.len() <= bigger.len() {
                    result.push(Vec::new());
                }
                result[bigger.len()].push(bigger);
            }
            // Reverse so the lexicographically smallest child is processed
            // first.
            stack.extend(children.into_iter().rev());
        }
        result
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets={:?})", self.ambient, self.facets)
    }
}

/// Stanley–Reisner complex of a squarefree ideal: faces are the subsets of
/// the ambient set containing no generator support.
pub fn stanley_reisner(ideal: &SqfIdeal) -> SimplicialComplex {
    let nonfaces: Vec<VarSet> = ideal.gens().iter().map(|g| g.support()).collect();
    SimplicialComplex::from_minimal_nonfaces(ideal.ambient(), &nonfaces)
}

/// The squarefree ideal whose generators are the facets of the complex;
/// inverse to `facet_complex`. Fails on the void and irrelevant complexes.
pub fn facet_ideal(cx: &SimplicialComplex) -> Result<SqfIdeal, crate::ideal::IdealError> {
    SqfIdeal::minimalize(
        cx.ambient(),
        cx.facets().iter().map(|f| SqfMonomial::from_support(*f)),
    )
}

/// All inclusion-minimal transversals (hitting sets) of the given family of
/// nonempty sets, in canonical order. The empty family has the empty
/// transversal.
pub fn minimal_transversals(sets: &[VarSet]) -> Vec<VarSet> {
    debug_assert!(sets.iter().all(|s| !s.is_empty()));
    let mut out = Vec::new();
    fn redundant(chosen: VarSet, sets: &[VarSet]) -> bool {
        // A chosen vertex with no private set can never regain one.
        'vertex: for v in chosen.iter() {
            for s in sets {
                if s.contains(v) && (*s & chosen) == VarSet::singleton(v) {
                    continue 'vertex;
                }
            }
            return true;
        }
        false
    }
    fn rec(sets: &[VarSet], chosen: VarSet, forbidden: VarSet, out: &mut Vec<VarSet>) {
        match sets.iter().find(|s| s.is_disjoint(chosen)) {
            None => {
                if !redundant(chosen, sets) {
                    out.push(chosen);
                }
            }
            Some(&uncovered) => {
                let mut forbidden = forbidden;
                for v in (uncovered - forbidden).iter() {
                    let next = chosen.with(v);
                    if !redundant(next, sets) {
                        rec(sets, next, forbidden, out);
                    }
                    forbidden.insert(v);
                }
            }
        }
    }
    rec(sets, VarSet::EMPTY, VarSet::EMPTY, &mut out);
    inclusion_minimal(out)
}
