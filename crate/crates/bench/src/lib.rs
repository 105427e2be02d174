//! Shared fixtures for the benchmark targets.

use sqfpow::graph::FamilySpec;
use sqfpow::{Graph, SqfIdeal};

pub fn whiskered(s: usize) -> Graph {
    FamilySpec::Whiskered(vec![1; s])
        .build()
        .expect("valid family")
}

pub fn path_complement(n: usize) -> SqfIdeal {
    FamilySpec::PathComplement(n)
        .build()
        .expect("valid family")
        .edge_ideal()
}
