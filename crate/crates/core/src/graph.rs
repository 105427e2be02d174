//! Simple graphs, matchings, edge ideals and the matching complexes Γ_k.

use std::fmt;
use std::ops::ControlFlow;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::bits::VarSet;
use crate::complex::SimplicialComplex;
use crate::ideal::{SqfIdeal, SqfMonomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("bad family specification: {0}")]
    BadSpec(String),
    #[error("vertex count must be between 1 and 64, got {0}")]
    BadVertexCount(usize),
    #[error("invalid edge ({0},{1})")]
    InvalidEdge(usize, usize),
    #[error("k={k} out of range: 1..={max}")]
    OutOfRange { k: usize, max: usize },
    #[error("graph has isolated vertices: {0}")]
    IsolatedVertices(VarSet),
}

/// A finite simple graph on vertex set `{1..=n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VarSet>,
}

/// A set of pairwise disjoint edges, kept in canonical sorted order.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        for e in &mut edges {
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort();
        let m = Matching { edges };
        debug_assert_eq!(m.vertex_set().len(), 2 * m.len(), "edges must be disjoint");
        m
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_set(&self) -> VarSet {
        self.edges
            .iter()
            .fold(VarSet::EMPTY, |acc, &(u, v)| acc.with(u).with(v))
    }
}

impl Graph {
    pub fn new(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        if n == 0 || n > VarSet::MAX_AMBIENT {
            return Err(GraphError::BadVertexCount(n));
        }
        let mut adj = vec![VarSet::EMPTY; n];
        for (u, v) in edges {
            if u == v || u == 0 || v == 0 || u > n || v > n {
                return Err(GraphError::InvalidEdge(u, v));
            }
            adj[u - 1].insert(v);
            adj[v - 1].insert(u);
        }
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u - 1].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VarSet {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        for u in 1..=self.n {
            for v in self.adj[u - 1].iter() {
                if v > u {
                    edges.push((u, v));
                }
            }
        }
        edges
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn isolated_vertices(&self) -> VarSet {
        VarSet::from_indices((1..=self.n).filter(|&v| self.adj[v - 1].is_empty()))
    }

    /// Edge ideal: one degree-2 generator per edge.
    pub fn edge_ideal(&self) -> SqfIdeal {
        SqfIdeal::minimalize(
            self.n,
            self.edges()
                .into_iter()
                .map(|(u, v)| SqfMonomial::from_vars([u, v])),
        )
        .expect("edges are valid degree-2 monomials")
    }

    pub fn complement(&self) -> Graph {
        let adj = (1..=self.n)
            .map(|v| self.adj[v - 1].complement_in(self.n).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected components as vertex sets, sorted by smallest vertex.
    pub fn components(&self) -> Vec<VarSet> {
        let mut seen = VarSet::EMPTY;
        let mut comps = Vec::new();
        for start in 1..=self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VarSet::singleton(start);
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                for w in self.adj[v - 1].iter() {
                    if !comp.contains(w) {
                        comp.insert(w);
                        stack.push(w);
                    }
                }
            }
            seen = seen | comp;
            comps.push(comp);
        }
        comps
    }

    /// Maximum cardinality search ordering followed by the perfect
    /// elimination check; returns the elimination ordering as a witness when
    /// the graph is chordal.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let mut weight = vec![0usize; n + 1];
        let mut visited = VarSet::EMPTY;
        let mut selection = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (1..=n)
                .filter(|&v| !visited.contains(v))
                .max_by_key(|&v| (weight[v], std::cmp::Reverse(v)))
                .unwrap();
            visited.insert(v);
            selection.push(v);
            for w in self.adj[v - 1].iter() {
                if !visited.contains(w) {
                    weight[w] += 1;
                }
            }
        }
        // Elimination order: last selected first.
        let elimination: Vec<usize> = selection.into_iter().rev().collect();
        let mut position = vec![0usize; n + 1];
        for (pos, &v) in elimination.iter().enumerate() {
            position[v] = pos;
        }
        for (pos, &v) in elimination.iter().enumerate() {
            let later = VarSet::from_indices(
                self.adj[v - 1].iter().filter(|&w| position[w] > pos),
            );
            if let Some(u) = later.iter().min_by_key(|&w| position[w]) {
                if !later.without(u).is_subset(self.adj[u - 1]) {
                    return None;
                }
            }
        }
        Some(elimination)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    pub fn is_cochordal(&self) -> bool {
        self.complement().is_chordal()
    }

    /// True when the edge set is exactly all pairs across a bipartition.
    pub fn is_complete_bipartite(&self) -> bool {
        let comps = self.complement().components();
        if comps.len() != 2 {
            return false;
        }
        // Cross pairs are edges by construction; there must be no edge
        // inside either side.
        comps
            .iter()
            .all(|side| self.edges_within(*side).is_empty())
    }

    fn edges_within(&self, w: VarSet) -> Vec<(usize, usize)> {
        self.edges()
            .into_iter()
            .filter(|&(u, v)| w.contains(u) && w.contains(v))
            .collect()
    }

    /// Matching number by branch-and-bound over the sorted edge list.
    pub fn matching_number(&self) -> usize {
        self.matching_number_within(VarSet::full(self.n))
    }

    /// Matching number of the induced subgraph on `w`.
    pub fn matching_number_within(&self, w: VarSet) -> usize {
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| w.contains(u) && w.contains(v))
            .collect();
        let mut best = 0usize;
        fn search(
            edges: &[(usize, usize)],
            start: usize,
            used: VarSet,
            free: usize,
            count: usize,
            best: &mut usize,
        ) {
            if count > *best {
                *best = count;
            }
            if count + (edges.len() - start).min(free / 2) <= *best {
                return;
            }
            for i in start..edges.len() {
                let (u, v) = edges[i];
                if !used.contains(u) && !used.contains(v) {
                    search(edges, i + 1, used.with(u).with(v), free - 2, count + 1, best);
                }
            }
        }
        search(&edges, 0, VarSet::EMPTY, w.len(), 0, &mut best);
        best
    }

    /// Visit every k-matching in canonical order; the callback may stop the
    /// enumeration early.
    pub fn for_each_k_matching<F>(&self, k: usize, mut f: F)
    where
        F: FnMut(&Matching) -> ControlFlow<()>,
    {
        assert!(k >= 1);
        let edges = self.edges();
        let mut current: Vec<(usize, usize)> = Vec::with_capacity(k);
        fn rec<F>(
            edges: &[(usize, usize)],
            start: usize,
            used: VarSet,
            current: &mut Vec<(usize, usize)>,
            k: usize,
            f: &mut F,
        ) -> ControlFlow<()>
        where
            F: FnMut(&Matching) -> ControlFlow<()>,
        {
            if current.len() == k {
                return f(&Matching { edges: current.clone() });
            }
            if edges.len() - start < k - current.len() {
                return ControlFlow::Continue(());
            }
            for i in start..edges.len() {
                let (u, v) = edges[i];
                if !used.contains(u) && !used.contains(v) {
                    current.push((u, v));
                    let flow = rec(edges, i + 1, used.with(u).with(v), current, k, f);
                    current.pop();
                    flow?;
                }
            }
            ControlFlow::Continue(())
        }
        let _ = rec(&edges, 0, VarSet::EMPTY, &mut current, k, &mut f);
    }

    /// All k-matchings in canonical order.
    pub fn k_matchings(&self, k: usize) -> Vec<Matching> {
        let mut out = Vec::new();
        self.for_each_k_matching(k, |m| {
            out.push(m.clone());
            ControlFlow::Continue(())
        });
        out
    }

    /// Extend the given disjoint seed edges to a k-matching, first found in
    /// canonical order.
    pub fn extend_to_k_matching(&self, seed: &[(usize, usize)], k: usize) -> Option<Matching> {
        let used = Matching::new(seed.to_vec()).vertex_set();
        if seed.len() > k {
            return None;
        }
        if seed.len() == k {
            return Some(Matching::new(seed.to_vec()));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| !used.contains(u) && !used.contains(v))
            .collect();
        let need = k - seed.len();
        let mut chosen = Vec::with_capacity(need);
        fn rec(
            edges: &[(usize, usize)],
            start: usize,
            used: VarSet,
            chosen: &mut Vec<(usize, usize)>,
            need: usize,
        ) -> bool {
            if chosen.len() == need {
                return true;
            }
            for i in start..edges.len() {
                let (u, v) = edges[i];
                if !used.contains(u) && !used.contains(v) {
                    chosen.push((u, v));
                    if rec(edges, i + 1, used.with(u).with(v), chosen, need) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        if rec(&edges, 0, used, &mut chosen, need) {
            let mut all = seed.to_vec();
            all.extend(chosen);
            Some(Matching::new(all))
        } else {
            None
        }
    }

    /// A perfect matching of the induced subgraph on `w`, if one exists.
    pub fn perfect_matching_within(&self, w: VarSet) -> Option<Matching> {
        if !w.len().is_multiple_of(2) {
            return None;
        }
        fn rec(g: &Graph, remaining: VarSet, chosen: &mut Vec<(usize, usize)>) -> bool {
            let Some(v) = remaining.min() else {
                return true;
            };
            for u in (g.adj[v - 1] & remaining).iter() {
                chosen.push((v, u));
                if rec(g, remaining.without(v).without(u), chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
        let mut chosen = Vec::with_capacity(w.len() / 2);
        if rec(self, w, &mut chosen) {
            Some(Matching::new(chosen))
        } else {
            None
        }
    }

    pub fn is_dominating(&self, set: VarSet) -> bool {
        let mut covered = set;
        for v in set.iter() {
            covered = covered | self.adj[v - 1];
        }
        VarSet::full(self.n).is_subset(covered)
    }

    /// Some dominating clique on m vertices, first in canonical order.
    pub fn dominating_clique(&self, m: usize) -> Option<VarSet> {
        assert!(m >= 1);
        fn rec(g: &Graph, clique: VarSet, candidates: VarSet, m: usize) -> Option<VarSet> {
            if clique.len() == m {
                return g.is_dominating(clique).then_some(clique);
            }
            for v in candidates.iter() {
                let above = VarSet::from_indices((v + 1..=g.n).filter(|&w| candidates.contains(w)));
                if let Some(found) = rec(g, clique.with(v), above & g.adj[v - 1], m) {
                    return Some(found);
                }
            }
            None
        }
        rec(self, VarSet::EMPTY, VarSet::full(self.n), m)
    }

    /// Some k-matching whose vertex set dominates the graph.
    pub fn dominating_k_matching(&self, k: usize) -> Option<Matching> {
        let mut found = None;
        self.for_each_k_matching(k, |m| {
            if self.is_dominating(m.vertex_set()) {
                found = Some(m.clone());
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found
    }

    /// The complex Γ_k: all vertex sets containing no k-matching's vertex
    /// set. Rejected above the matching number, where it degenerates to the
    /// full simplex.
    pub fn gamma_k(&self, k: usize) -> Result<SimplicialComplex, GraphError> {
        let nu = self.matching_number();
        if k == 0 || k > nu {
            return Err(GraphError::OutOfRange { k, max: nu });
        }
        let mut vertex_sets = std::collections::BTreeSet::new();
        self.for_each_k_matching(k, |m| {
            vertex_sets.insert(m.vertex_set());
            ControlFlow::Continue(())
        });
        let nonfaces: Vec<VarSet> = vertex_sets.into_iter().collect();
        Ok(SimplicialComplex::from_minimal_nonfaces(self.n, &nonfaces))
    }

    /// Face test for Γ_k without building the complex.
    pub fn is_gamma_k_face(&self, k: usize, face: VarSet) -> bool {
        self.matching_number_within(face) < k
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Named graph families with fixed canonical labelings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    /// Complete graph on n vertices.
    Complete(usize),
    /// Complete bipartite graph; sides are `{1..=m}` and `{m+1..=m+n}`.
    CompleteBipartite(usize, usize),
    /// Path 1-2-...-n.
    Path(usize),
    /// Cycle 1-2-...-n-1.
    Cycle(usize),
    /// Complement of the path.
    PathComplement(usize),
    /// Complete graph on `{1..=s}` with `a_i` pendant vertices attached to
    /// vertex i; whiskers are numbered s+1, s+2, ... grouped by clique
    /// vertex in increasing order.
    Whiskered(Vec<usize>),
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph, GraphError> {
        match self {
            FamilySpec::Complete(n) => {
                let mut edges = Vec::new();
                for u in 1..*n {
                    for v in u + 1..=*n {
                        edges.push((u, v));
                    }
                }
                Graph::new(*n, edges)
            }
            FamilySpec::CompleteBipartite(m, n) => {
                if *m == 0 || *n == 0 {
                    return Err(GraphError::BadSpec(
                        "complete_bipartite requires both sides nonempty".into(),
                    ));
                }
                let mut edges = Vec::new();
                for u in 1..=*m {
                    for v in 1..=*n {
                        edges.push((u, m + v));
                    }
                }
                Graph::new(m + n, edges)
            }
            FamilySpec::Path(n) => Graph::new(*n, (1..*n).map(|i| (i, i + 1))),
            FamilySpec::Cycle(n) => {
                if *n < 3 {
                    return Err(GraphError::BadSpec("cycle requires n >= 3".into()));
                }
                let mut edges: Vec<(usize, usize)> = (1..*n).map(|i| (i, i + 1)).collect();
                edges.push((*n, 1));
                Graph::new(*n, edges)
            }
            FamilySpec::PathComplement(n) => {
                Ok(FamilySpec::Path(*n).build()?.complement())
            }
            FamilySpec::Whiskered(whiskers) => {
                let s = whiskers.len();
                if s < 2 {
                    return Err(GraphError::BadSpec(
                        "whiskered requires at least 2 clique vertices".into(),
                    ));
                }
                let n = s + whiskers.iter().sum::<usize>();
                let mut edges = Vec::new();
                for u in 1..s {
                    for v in u + 1..=s {
                        edges.push((u, v));
                    }
                }
                let mut next = s + 1;
                for (i, &count) in whiskers.iter().enumerate() {
                    for _ in 0..count {
                        edges.push((i + 1, next));
                        next += 1;
                    }
                }
                Graph::new(n, edges)
            }
        }
    }
}

impl FromStr for FamilySpec {
    type Err = GraphError;

    /// Shorthand form `name:args`, e.g. `whiskered:1,1,1,1` or `path:6`.
    fn from_str(s: &str) -> Result<Self, GraphError> {
        let (name, args) = s
            .split_once(':')
            .ok_or_else(|| GraphError::BadSpec(format!("missing ':' in `{s}`")))?;
        let nums: Result<Vec<usize>, _> = args
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect();
        let nums = nums.map_err(|_| GraphError::BadSpec(format!("bad arguments in `{s}`")))?;
        let arity = |want: usize| -> Result<(), GraphError> {
            if nums.len() == want {
                Ok(())
            } else {
                Err(GraphError::BadSpec(format!(
                    "`{name}` expects {want} argument(s), got {}",
                    nums.len()
                )))
            }
        };
        match name {
            "complete" => {
                arity(1)?;
                Ok(FamilySpec::Complete(nums[0]))
            }
            "complete_bipartite" => {
                arity(2)?;
                Ok(FamilySpec::CompleteBipartite(nums[0], nums[1]))
            }
            "path" => {
                arity(1)?;
                Ok(FamilySpec::Path(nums[0]))
            }
            "cycle" => {
                arity(1)?;
                Ok(FamilySpec::Cycle(nums[0]))
            }
            "path_complement" => {
                arity(1)?;
                Ok(FamilySpec::PathComplement(nums[0]))
            }
            "whiskered" => {
                if nums.len() < 2 {
                    return Err(GraphError::BadSpec(
                        "whiskered requires at least 2 arguments".into(),
                    ));
                }
                Ok(FamilySpec::Whiskered(nums))
            }
            other => Err(GraphError::BadSpec(format!("unknown family `{other}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().build().unwrap()
    }

    #[test]
    fn edge_ideal_triangle() {
        let k3 = family("complete:3");
        let i = k3.edge_ideal();
        assert_eq!(i.num_gens(), 3);
        assert_eq!(i.ambient(), 3);
    }

    #[test]
    fn edgeless_graph_zero_ideal() {
        let g = Graph::new(3, []).unwrap();
        assert!(g.edge_ideal().is_zero());
        assert_eq!(g.matching_number(), 0);
    }

    #[test]
    fn path4_matchings() {
        let p4 = family("path:4");
        let two = p4.k_matchings(2);
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].edges(), &[(1, 2), (3, 4)]);
        assert_eq!(p4.matching_number(), 2);
        assert!(p4.k_matchings(3).is_empty());
    }

    #[test]
    fn k4_has_three_perfect_matchings() {
        let k4 = family("complete:4");
        assert_eq!(k4.k_matchings(2).len(), 3);
    }

    #[test]
    fn matching_number_equals_nu_of_edge_ideal() {
        for spec in ["complete:5", "path:6", "cycle:5", "complete_bipartite:2,3"] {
            let g = family(spec);
            assert_eq!(g.matching_number(), g.edge_ideal().nu().unwrap(), "{spec}");
        }
    }

    #[test]
    fn whiskered_matching_number_is_clique_size() {
        for s in 2..=4 {
            let g = FamilySpec::Whiskered(vec![1; s]).build().unwrap();
            assert_eq!(g.matching_number(), s);
        }
    }

    #[test]
    fn complement_involution() {
        let g = family("cycle:5");
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn complete_graph_complement_disconnected() {
        let g = family("complete:4");
        let c = g.complement();
        assert_eq!(c.num_edges(), 0);
        assert!(!c.is_connected());
    }

    #[test]
    fn path4_is_self_complementary() {
        let c = family("path_complement:4");
        assert_eq!(c.num_edges(), 3);
        assert!(c.is_connected());
        let mut degrees: Vec<usize> = (1..=4).map(|v| c.degree(v)).collect();
        degrees.sort();
        assert_eq!(degrees, vec![1, 1, 2, 2]);
    }

    #[test]
    fn complete_bipartite_complement_disconnected() {
        let g = family("complete_bipartite:2,3");
        assert!(!g.complement().is_connected());
        assert!(g.is_complete_bipartite());
        assert!(!family("path:4").is_complete_bipartite());
        assert!(family("complete_bipartite:1,1").is_complete_bipartite());
    }

    #[test]
    fn chordality() {
        assert!(!family("cycle:4").is_chordal());
        assert!(!family("cycle:5").is_chordal());
        assert!(family("path:6").is_chordal());
        assert!(family("complete:5").is_chordal());
        // Trees are chordal.
        let star = Graph::new(5, [(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        assert!(star.is_chordal());
    }

    #[test]
    fn whiskered_graphs_are_cochordal() {
        for whiskers in [vec![1, 1], vec![1, 1, 1], vec![2, 2, 2], vec![1, 2, 3]] {
            let g = FamilySpec::Whiskered(whiskers.clone()).build().unwrap();
            assert!(g.is_cochordal(), "whiskered {whiskers:?}");
        }
    }

    #[test]
    fn gamma_1_is_independence_complex() {
        let k3 = family("complete:3");
        let gamma = k3.gamma_k(1).unwrap();
        assert_eq!(
            gamma.facets(),
            &[
                VarSet::singleton(1),
                VarSet::singleton(2),
                VarSet::singleton(3)
            ]
        );
    }

    #[test]
    fn gamma_2_of_path4() {
        let p4 = family("path:4");
        let gamma = p4.gamma_k(2).unwrap();
        let expected: Vec<VarSet> = crate::bits::subsets_of_size(4, 3);
        assert_eq!(gamma.facets(), expected.as_slice());
    }

    #[test]
    fn gamma_k_rejects_out_of_range() {
        let p4 = family("path:4");
        assert!(matches!(
            p4.gamma_k(3),
            Err(GraphError::OutOfRange { k: 3, max: 2 })
        ));
    }

    #[test]
    fn gamma_k_face_predicate_matches_complex() {
        let g = family("cycle:5");
        for k in 1..=g.matching_number() {
            let gamma = g.gamma_k(k).unwrap();
            for bits in 0..(1u64 << 5) {
                let face = VarSet::from_indices((1..=5).filter(|&i| bits & (1 << (i - 1)) != 0));
                assert_eq!(gamma.is_face(face), g.is_gamma_k_face(k, face));
            }
        }
    }

    #[test]
    fn dominating_clique_path4() {
        let p4 = family("path:4");
        assert_eq!(p4.dominating_clique(2), Some(VarSet::from_indices([2, 3])));
    }

    #[test]
    fn dominating_clique_whiskered_with_bare_vertex() {
        // One clique vertex without whiskers, s = 2k-1 for k = 2.
        let g = FamilySpec::Whiskered(vec![0, 1, 1]).build().unwrap();
        assert_eq!(g.dominating_clique(3), Some(VarSet::from_indices([1, 2, 3])));
    }

    #[test]
    fn dominating_matchings_of_single_whiskers() {
        // s = 4: the clique itself is the vertex set of a 2-matching.
        let h4 = FamilySpec::Whiskered(vec![1; 4]).build().unwrap();
        let found = h4.dominating_k_matching(2).unwrap();
        assert_eq!(found.vertex_set(), VarSet::from_indices([1, 2, 3, 4]));
        assert!(h4.dominating_k_matching(3).is_some());
        // s = 5 with k = 2: four matched vertices cannot cover five whiskered
        // clique vertices.
        let h5 = FamilySpec::Whiskered(vec![1; 5]).build().unwrap();
        assert!(h5.dominating_k_matching(2).is_none());
        let k2 = family("complete:2");
        assert_eq!(k2.dominating_k_matching(1).unwrap().edges(), &[(1, 2)]);
    }

    #[test]
    fn whiskered_family_shape() {
        let g = family("whiskered:2,2,2");
        assert_eq!(g.n(), 9);
        assert_eq!(g.num_edges(), 3 + 6);
        assert!(g.has_edge(1, 4) && g.has_edge(1, 5));
        assert!(g.has_edge(2, 6) && g.has_edge(2, 7));
        assert!(g.has_edge(3, 8) && g.has_edge(3, 9));
    }

    #[test]
    fn family_errors() {
        assert!(matches!(
            "whiskered:3".parse::<FamilySpec>(),
            Err(GraphError::BadSpec(_))
        ));
        assert!("cycle:2".parse::<FamilySpec>().unwrap().build().is_err());
        assert!("unknown:1".parse::<FamilySpec>().is_err());
    }

    #[test]
    fn k_matching_vertex_sets_match_power_generators() {
        for spec in ["cycle:5", "path:5", "complete:4", "whiskered:1,1"] {
            let g = family(spec);
            let ideal = g.edge_ideal();
            for k in 1..=g.matching_number() {
                let mut from_matchings: Vec<VarSet> = g
                    .k_matchings(k)
                    .into_iter()
                    .map(|m| m.vertex_set())
                    .collect();
                from_matchings.sort();
                from_matchings.dedup();
                let from_ideal: Vec<VarSet> = ideal
                    .squarefree_power(k)
                    .gens()
                    .iter()
                    .map(|g| g.support())
                    .collect();
                assert_eq!(from_matchings, from_ideal, "{spec} k={k}");
            }
        }
    }
}
