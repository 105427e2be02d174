//! Facet ideals, well-ordered facet covers and the two explicit cover
//! constructions that certify non-vanishing top Betti numbers.
//!
//! A sequence F_1..F_k of facets is a well-ordered facet cover when the set
//! {F_1..F_k} is a minimal facet cover and every other facet H admits some
//! i <= k-1 with F_i contained in H ∪ F_{i+1} ∪ ... ∪ F_k. A cover of
//! cardinality c over all the vertices of the complex certifies
//! β_{c, u}(S/F(Δ)) != 0 with u the full vertex multidegree.

use serde::Serialize;
use thiserror::Error;

use crate::bits::VarSet;
use crate::complex::SimplicialComplex;
use crate::graph::{Graph, Matching};
use crate::ideal::SqfIdeal;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoverError {
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no dominating clique of size {0}")]
    NoDominatingClique(usize),
}

/// An ordered facet sequence in a host complex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FacetCover {
    pub host: SimplicialComplex,
    pub sequence: Vec<VarSet>,
}

/// Verification transcript: for every facet outside the sequence, the
/// 1-based position witnessing the well-ordering containment; plus the Betti
/// certificate the cover induces.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverTranscript {
    pub cardinality: usize,
    pub covered_vertices: VarSet,
    pub checks: Vec<WellOrderCheck>,
    pub betti_index: usize,
    pub betti_multidegree: VarSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WellOrderCheck {
    pub other_facet: VarSet,
    pub witness_position: usize,
}

/// The complex whose facets are the generator supports; its facet ideal is
/// the input again.
pub fn facet_complex(ideal: &SqfIdeal) -> Result<SimplicialComplex, CoverError> {
    if ideal.is_zero() {
        return Err(CoverError::ZeroIdeal);
    }
    Ok(SimplicialComplex::from_facets(
        ideal.ambient(),
        ideal.gens().iter().map(|g| g.support()),
    ))
}

/// Detailed well-ordering verification; `Err` carries the reason.
pub fn well_ordered_transcript(cover: &FacetCover) -> Result<CoverTranscript, String> {
    let host = &cover.host;
    let seq = &cover.sequence;
    if seq.is_empty() {
        return Err("empty sequence".into());
    }
    for f in seq {
        if !host.is_facet(*f) {
            return Err(format!("{f} is not a facet of the host"));
        }
    }
    for (a, f) in seq.iter().enumerate() {
        if seq[a + 1..].contains(f) {
            return Err(format!("facet {f} listed twice"));
        }
    }
    let vertices = host.vertices();
    let union = seq.iter().fold(VarSet::EMPTY, |acc, f| acc | *f);
    if !vertices.is_subset(union) {
        return Err(format!(
            "not a cover: vertices {} uncovered",
            vertices - union
        ));
    }
    // Minimality: removing any one facet must break the cover (removing
    // more only removes further vertices).
    for skip in 0..seq.len() {
        let partial = seq
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .fold(VarSet::EMPTY, |acc, (_, f)| acc | *f);
        if vertices.is_subset(partial) {
            return Err(format!("not minimal: facet {} is redundant", seq[skip]));
        }
    }
    // Well-ordering over the remaining facets.
    let mut suffix_unions = vec![VarSet::EMPTY; seq.len() + 1];
    for i in (0..seq.len()).rev() {
        suffix_unions[i] = suffix_unions[i + 1] | seq[i];
    }
    let mut checks = Vec::new();
    for h in host.facets() {
        if seq.contains(h) {
            continue;
        }
        let witness = (0..seq.len().saturating_sub(1))
            .find(|&i| seq[i].is_subset(*h | suffix_unions[i + 1]));
        match witness {
            Some(i) => checks.push(WellOrderCheck {
                other_facet: *h,
                witness_position: i + 1,
            }),
            None => {
                return Err(format!("well-ordering fails for facet {h}"));
            }
        }
    }
    Ok(CoverTranscript {
        cardinality: seq.len(),
        covered_vertices: vertices,
        checks,
        betti_index: seq.len(),
        betti_multidegree: vertices,
    })
}

pub fn is_well_ordered_cover(cover: &FacetCover) -> bool {
    well_ordered_transcript(cover).is_ok()
}

/// Backtracking search for a well-ordered facet cover of the given
/// cardinality; facets are explored in canonical order, so the first hit is
/// deterministic.
pub fn find_well_ordered_cover(
    host: &SimplicialComplex,
    cardinality: usize,
) -> Option<FacetCover> {
    assert!(cardinality >= 1);
    let facets = host.facets().to_vec();
    let mut chosen: Vec<usize> = Vec::with_capacity(cardinality);

    fn redundant(seq: &[usize], facets: &[VarSet]) -> bool {
        seq.iter().any(|&i| {
            let others = seq
                .iter()
                .filter(|&&j| j != i)
                .fold(VarSet::EMPTY, |acc, &j| acc | facets[j]);
            facets[i].is_subset(others)
        })
    }

    fn rec(
        host: &SimplicialComplex,
        facets: &[VarSet],
        chosen: &mut Vec<usize>,
        cardinality: usize,
    ) -> Option<FacetCover> {
        if chosen.len() == cardinality {
            let cover = FacetCover {
                host: host.clone(),
                sequence: chosen.iter().map(|&i| facets[i]).collect(),
            };
            return is_well_ordered_cover(&cover).then_some(cover);
        }
        for i in 0..facets.len() {
            if chosen.contains(&i) {
                continue;
            }
            chosen.push(i);
            // Prefixes with an already-redundant facet can never become
            // minimal covers.
            if !redundant(chosen, facets) {
                if let Some(found) = rec(host, facets, chosen, cardinality) {
                    return Some(found);
                }
            }
            chosen.pop();
        }
        None
    }
    rec(host, &facets, &mut chosen, cardinality)
}

/// Split data extracted from a disconnected complement: both sides of the
/// split, the (k-1)-matching with an edge inside side one, and the spare
/// vertex on side two.
struct SplitWitness {
    side1: VarSet,
    side2: VarSet,
    matching: Vec<(usize, usize)>,
    inner_edge: (usize, usize),
    spare: usize,
}

/// The explicit well-ordered facet cover of cardinality n - 2k + 1 for the
/// facet complex of I(G)^[k], available whenever the complement of G is
/// disconnected and G is not complete bipartite.
pub fn construct_cover_disconnected(
    graph: &Graph,
    k: usize,
) -> Result<FacetCover, CoverError> {
    let pre = |msg: &str| CoverError::PreconditionViolated(msg.to_string());
    let isolated = graph.isolated_vertices();
    if !isolated.is_empty() {
        return Err(pre("graph has isolated vertices"));
    }
    let nu = graph.matching_number();
    if nu < 2 {
        return Err(pre("matching number below 2"));
    }
    if !(2..=nu).contains(&k) {
        return Err(pre("k out of range 2..=matching number"));
    }
    if graph.complement().is_connected() {
        return Err(pre("complement is connected"));
    }
    if graph.is_complete_bipartite() {
        return Err(pre("graph is complete bipartite"));
    }
    let witness = choose_split_witness(graph, k);
    let n = graph.n();
    let matching_vertices = Matching::new(witness.matching.clone()).vertex_set();
    let base = matching_vertices.with(witness.spare);
    debug_assert_eq!(base.len(), 2 * k - 1);
    let (y, z) = witness.inner_edge;
    // Free vertices: side-one first, then side-two, each ascending.
    let mut free: Vec<usize> = (witness.side1 - base).to_vec();
    free.extend((witness.side2 - base).to_vec());
    debug_assert_eq!(free.len(), n - 2 * k + 1);
    let sequence: Vec<VarSet> = free.iter().map(|&x| base.with(x)).collect();
    if cfg!(debug_assertions) {
        // Every sequence member is a k-matching vertex set.
        for &x in &free {
            let facet = base.with(x);
            let m = if witness.side1.contains(x) {
                let mut edges = witness.matching.clone();
                edges.push((witness.spare, x));
                Matching::new(edges)
            } else {
                let mut edges: Vec<(usize, usize)> = witness
                    .matching
                    .iter()
                    .copied()
                    .filter(|&e| e != witness.inner_edge)
                    .collect();
                edges.push((witness.spare, y));
                edges.push((z, x));
                Matching::new(edges)
            };
            debug_assert_eq!(m.vertex_set(), facet);
            debug_assert!(m.edges().iter().all(|&(a, b)| graph.has_edge(a, b)));
        }
    }
    let host = facet_complex(&graph.edge_ideal().squarefree_power(k))?;
    let cover = FacetCover { host, sequence };
    debug_assert!(is_well_ordered_cover(&cover));
    Ok(cover)
}

/// Case analysis selecting the split, the (k-1)-matching and the spare
/// vertex. The complement component containing vertex 1 seeds side one;
/// sides are swapped when a case fires on the other side. Ties are always
/// broken toward the lowest qualifying vertex or edge.
fn choose_split_witness(graph: &Graph, k: usize) -> SplitWitness {
    let comps = graph.complement().components();
    let side1 = comps[0];
    let side2 = comps[1..].iter().fold(VarSet::EMPTY, |acc, c| acc | *c);

    let edges_within = |side: VarSet| -> Vec<(usize, usize)> {
        graph
            .edges()
            .into_iter()
            .filter(|&(u, v)| side.contains(u) && side.contains(v))
            .collect()
    };

    // Case 1: some k-matching uses an edge lying inside one side.
    for (s1, s2) in [(side1, side2), (side2, side1)] {
        for e in edges_within(s1) {
            if let Some(m) = graph.extend_to_k_matching(&[e], k) {
                let spare = s2.min().expect("split sides are nonempty");
                let mut edges: Vec<(usize, usize)> = m.edges().to_vec();
                if let Some(pos) = edges.iter().position(|&(a, b)| a == spare || b == spare) {
                    // Drop the matching edge through the spare vertex.
                    edges.remove(pos);
                } else {
                    // Drop the canonically last edge other than e.
                    let pos = edges
                        .iter()
                        .rposition(|&f| f != e)
                        .expect("k >= 2 leaves a removable edge");
                    edges.remove(pos);
                }
                return SplitWitness {
                    side1: s1,
                    side2: s2,
                    matching: edges,
                    inner_edge: e,
                    spare,
                };
            }
        }
    }

    // Case 2: every k-matching crosses the split.
    let m = graph
        .extend_to_k_matching(&[], k)
        .expect("matching number is at least k");
    let cross: Vec<(usize, usize)> = m
        .edges()
        .iter()
        .map(|&(u, v)| if side1.contains(u) { (u, v) } else { (v, u) })
        .collect();
    debug_assert!(cross
        .iter()
        .all(|&(a, b)| side1.contains(a) && side2.contains(b)));

    // Case 2.1: an edge of G inside the matched endpoints of one side.
    for (s1, s2, on_side1) in [(side1, side2, true), (side2, side1, false)] {
        let ends = VarSet::from_indices(
            cross.iter().map(|&(a, b)| if on_side1 { a } else { b }),
        );
        let inside = edges_within(s1)
            .into_iter()
            .find(|&(u, v)| ends.contains(u) && ends.contains(v));
        if let Some(e) = inside {
            let hit: Vec<usize> = cross
                .iter()
                .enumerate()
                .filter(|(_, &(a, b))| {
                    let end = if on_side1 { a } else { b };
                    end == e.0 || end == e.1
                })
                .map(|(i, _)| i)
                .collect();
            debug_assert_eq!(hit.len(), 2);
            let last = hit[0].max(hit[1]);
            let spare = {
                let (a, b) = cross[last];
                if on_side1 {
                    b
                } else {
                    a
                }
            };
            let matching: Vec<(usize, usize)> = cross
                .iter()
                .enumerate()
                .filter(|(i, _)| !hit.contains(i))
                .map(|(_, &edge)| edge)
                .chain(std::iter::once(e))
                .collect();
            return SplitWitness {
                side1: s1,
                side2: s2,
                matching,
                inner_edge: e,
                spare,
            };
        }
    }

    // Case 2.2: both endpoint sets are independent; the graph is not
    // complete bipartite, so some side still has an inner edge. With all
    // cross pairs present this case cannot actually arise: an inner edge on
    // a side with more than k vertices always extends to a k-matching
    // (case 1), and a side with exactly k vertices is entirely matched, so
    // its inner edges land in case 2.1. Kept to mirror the full analysis.
    for (s1, s2, on_side1) in [(side1, side2, true), (side2, side1, false)] {
        let Some(f) = edges_within(s1).into_iter().next() else {
            continue;
        };
        // f meets at most one matching edge: one endpoint is unmatched and
        // the matched endpoints of this side form an independent set.
        let mut rest: Vec<usize> = (0..cross.len())
            .filter(|&i| {
                let (a, b) = cross[i];
                a != f.0 && a != f.1 && b != f.0 && b != f.1
            })
            .collect();
        if rest.len() == cross.len() {
            // f is disjoint from the matching: drop the first cross edge.
            rest.remove(0);
        }
        // Drop the canonically last remaining cross edge; its far endpoint
        // is the spare vertex.
        let dropped = rest.pop().expect("k >= 2 leaves an edge to drop");
        let spare = {
            let (a, b) = cross[dropped];
            if on_side1 {
                b
            } else {
                a
            }
        };
        let matching: Vec<(usize, usize)> = rest
            .into_iter()
            .map(|i| cross[i])
            .chain(std::iter::once(f))
            .collect();
        return SplitWitness {
            side1: s1,
            side2: s2,
            matching,
            inner_edge: f,
            spare,
        };
    }
    unreachable!("a non-complete-bipartite graph with all cross pairs present has an inner edge")
}

/// The explicit well-ordered facet cover from a dominating clique on 2k - 1
/// vertices: the clique extended by each outside vertex in turn.
pub fn construct_cover_dominating_clique(
    graph: &Graph,
    k: usize,
) -> Result<FacetCover, CoverError> {
    let pre = |msg: &str| CoverError::PreconditionViolated(msg.to_string());
    let nu = graph.matching_number();
    if !(2..=nu).contains(&k) {
        return Err(pre("k out of range 2..=matching number"));
    }
    let clique = graph
        .dominating_clique(2 * k - 1)
        .ok_or(CoverError::NoDominatingClique(2 * k - 1))?;
    let outside = clique.complement_in(graph.n());
    let sequence: Vec<VarSet> = outside.iter().map(|w| clique.with(w)).collect();
    let host = facet_complex(&graph.edge_ideal().squarefree_power(k))?;
    let cover = FacetCover { host, sequence };
    debug_assert!(is_well_ordered_cover(&cover));
    Ok(cover)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;
    use crate::ideal::SqfMonomial;

    fn vs(indices: &[usize]) -> VarSet {
        VarSet::from_indices(indices.iter().copied())
    }

    fn ideal(ambient: usize, gens: &[&[usize]]) -> SqfIdeal {
        SqfIdeal::minimalize(
            ambient,
            gens.iter().map(|g| SqfMonomial::from_vars(g.iter().copied())),
        )
        .unwrap()
    }

    fn hollow_triangle() -> SimplicialComplex {
        SimplicialComplex::from_facets(3, [vs(&[1, 2]), vs(&[2, 3]), vs(&[1, 3])])
    }

    #[test]
    fn facet_complex_of_path() {
        let i = FamilySpec::Path(4).build().unwrap().edge_ideal();
        let cx = facet_complex(&i).unwrap();
        assert_eq!(cx.facets(), &[vs(&[1, 2]), vs(&[2, 3]), vs(&[3, 4])]);
        assert_eq!(crate::complex::facet_ideal(&cx).unwrap(), i);
        let square = facet_complex(&i.squarefree_power(2)).unwrap();
        assert_eq!(square.facets(), &[vs(&[1, 2, 3, 4])]);
    }

    #[test]
    fn facet_complex_rejects_zero() {
        assert_eq!(
            facet_complex(&SqfIdeal::zero(3).unwrap()).unwrap_err(),
            CoverError::ZeroIdeal
        );
    }

    #[test]
    fn single_facet_cover() {
        let cx = SimplicialComplex::from_facets(4, [vs(&[1, 2, 3, 4])]);
        let cover = FacetCover { host: cx, sequence: vec![vs(&[1, 2, 3, 4])] };
        assert!(is_well_ordered_cover(&cover));
    }

    #[test]
    fn hollow_triangle_two_facet_sequence() {
        let cover = FacetCover {
            host: hollow_triangle(),
            sequence: vec![vs(&[1, 2]), vs(&[2, 3])],
        };
        let transcript = well_ordered_transcript(&cover).unwrap();
        assert_eq!(transcript.cardinality, 2);
        assert_eq!(transcript.checks.len(), 1);
        assert_eq!(transcript.checks[0].other_facet, vs(&[1, 3]));
        assert_eq!(transcript.checks[0].witness_position, 1);
    }

    #[test]
    fn non_covering_sequence_rejected() {
        let cover = FacetCover {
            host: hollow_triangle(),
            sequence: vec![vs(&[1, 2])],
        };
        assert!(!is_well_ordered_cover(&cover));
    }

    #[test]
    fn find_cover_in_single_facet_complex() {
        let cx = SimplicialComplex::from_facets(3, [vs(&[1, 2, 3])]);
        let found = find_well_ordered_cover(&cx, 1).unwrap();
        assert_eq!(found.sequence, vec![vs(&[1, 2, 3])]);
    }

    #[test]
    fn no_cardinality_three_cover_of_hollow_triangle() {
        // Any three facets cover redundantly, so no minimal cover exists.
        assert!(find_well_ordered_cover(&hollow_triangle(), 3).is_none());
    }

    #[test]
    fn hollow_triangle_has_two_facet_cover() {
        let found = find_well_ordered_cover(&hollow_triangle(), 2).unwrap();
        assert!(is_well_ordered_cover(&found));
        assert_eq!(found.sequence, vec![vs(&[1, 2]), vs(&[1, 3])]);
    }

    /// Join of K_2 with (K_1 ∪ K_2): five vertices, disconnected
    /// complement, not complete bipartite.
    fn join_graph() -> Graph {
        Graph::new(
            5,
            [
                (1, 2),
                (4, 5),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn disconnected_construction_on_join() {
        let g = join_graph();
        assert!(!g.complement().is_connected());
        assert!(!g.is_complete_bipartite());
        let cover = construct_cover_disconnected(&g, 2).unwrap();
        assert_eq!(cover.sequence.len(), 5 - 4 + 1);
        assert!(is_well_ordered_cover(&cover));
    }

    #[test]
    fn disconnected_construction_rejects_connected_complement() {
        let p4 = FamilySpec::Path(4).build().unwrap();
        assert!(matches!(
            construct_cover_disconnected(&p4, 2),
            Err(CoverError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn disconnected_construction_rejects_complete_bipartite() {
        let g = FamilySpec::CompleteBipartite(2, 3).build().unwrap();
        assert!(matches!(
            construct_cover_disconnected(&g, 2),
            Err(CoverError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn dominating_clique_construction_on_k5() {
        let k5 = FamilySpec::Complete(5).build().unwrap();
        let cover = construct_cover_dominating_clique(&k5, 2).unwrap();
        assert_eq!(cover.sequence.len(), 2);
        assert!(is_well_ordered_cover(&cover));
    }

    #[test]
    fn dominating_clique_construction_on_whiskered_triangle() {
        // One whisker on the third vertex of a triangle; the triangle
        // dominates.
        let g = FamilySpec::Whiskered(vec![0, 0, 1]).build().unwrap();
        let cover = construct_cover_dominating_clique(&g, 2).unwrap();
        assert_eq!(cover.sequence, vec![vs(&[1, 2, 3, 4])]);
        assert!(is_well_ordered_cover(&cover));
    }

    #[test]
    fn dominating_clique_construction_needs_clique() {
        let c4 = FamilySpec::Cycle(4).build().unwrap();
        assert_eq!(
            construct_cover_dominating_clique(&c4, 2).unwrap_err(),
            CoverError::NoDominatingClique(3)
        );
    }

    #[test]
    fn constructed_cover_certifies_betti_number() {
        use crate::betti::hochster_entry;
        use crate::field::FieldSpec;
        use crate::homology::Budget;
        let g = join_graph();
        let k = 2;
        let cover = construct_cover_disconnected(&g, k).unwrap();
        let power = g.edge_ideal().squarefree_power(k);
        let n = g.n();
        let entry = hochster_entry(
            &power,
            n - 2 * k + 1,
            n,
            FieldSpec::Rationals,
            &Budget::default(),
        )
        .unwrap();
        assert_eq!(cover.sequence.len(), n - 2 * k + 1);
        assert!(entry > 0);
    }

    #[test]
    fn well_ordered_rejects_duplicates_and_foreign_facets() {
        let cover = FacetCover {
            host: hollow_triangle(),
            sequence: vec![vs(&[1, 2]), vs(&[1, 2])],
        };
        assert!(!is_well_ordered_cover(&cover));
        let cover = FacetCover {
            host: hollow_triangle(),
            sequence: vec![vs(&[1, 2, 3])],
        };
        assert!(!is_well_ordered_cover(&cover));
    }

    #[test]
    fn veronese_facet_complex_is_hollow_triangle() {
        let m2 = ideal(3, &[&[1, 2], &[1, 3], &[2, 3]]);
        let cx = facet_complex(&m2).unwrap();
        assert_eq!(cx.facets(), hollow_triangle().facets());
    }
}
