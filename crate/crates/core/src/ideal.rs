//! Squarefree monomials and squarefree monomial ideals.
//!
//! A squarefree monomial is identified with its support, so an ideal is an
//! antichain of index sets together with the ambient variable count. The
//! antichain invariant (no generator divides another) is enforced by every
//! constructor; it is the unique minimal generating set of the ideal.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::bits::{inclusion_minimal, VarSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IdealError {
    #[error("variable index {index} exceeds ambient {ambient}")]
    AmbientMismatch { index: usize, ambient: usize },
    #[error("ambient sizes differ: {0} vs {1}")]
    AmbientsDiffer(usize, usize),
    #[error("ambient must be between 1 and 64, got {0}")]
    BadAmbient(usize),
    #[error("the unit ideal is not a valid input")]
    UnitIdeal,
    #[error("operation undefined for the zero ideal")]
    ZeroIdeal,
    #[error("monomial is not squarefree: variable {variable} has exponent {exponent}")]
    NotSquarefree { variable: usize, exponent: u32 },
}

/// A squarefree monomial, stored as its support.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct SqfMonomial(VarSet);

impl SqfMonomial {
    pub fn one() -> Self {
        SqfMonomial(VarSet::EMPTY)
    }

    pub fn from_vars<I: IntoIterator<Item = usize>>(vars: I) -> Self {
        SqfMonomial(VarSet::from_indices(vars))
    }

    pub fn from_support(support: VarSet) -> Self {
        SqfMonomial(support)
    }

    pub fn support(self) -> VarSet {
        self.0
    }

    pub fn degree(self) -> usize {
        self.0.len()
    }

    pub fn is_one(self) -> bool {
        self.0.is_empty()
    }

    pub fn divides(self, other: SqfMonomial) -> bool {
        self.0.is_subset(other.0)
    }

    pub fn is_coprime(self, other: SqfMonomial) -> bool {
        self.0.is_disjoint(other.0)
    }

    /// Product of two coprime squarefree monomials; `None` when the product
    /// would not be squarefree.
    pub fn coprime_product(self, other: SqfMonomial) -> Option<SqfMonomial> {
        if self.is_coprime(other) {
            Some(SqfMonomial(self.0 | other.0))
        } else {
            None
        }
    }
}

impl fmt::Display for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        for (pos, i) in self.0.iter().enumerate() {
            if pos > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{i}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SqfMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Degree data of one squarefree power.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub k: usize,
    /// Minimum degree of a minimal generator of the k-th squarefree power.
    pub min_degree: usize,
    pub generator_count: usize,
}

/// A squarefree monomial ideal given by its minimal generators.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct SqfIdeal {
    ambient: usize,
    gens: Vec<SqfMonomial>,
}

impl SqfIdeal {
    /// The zero ideal of `K[x_1..x_ambient]`.
    pub fn zero(ambient: usize) -> Result<Self, IdealError> {
        check_ambient(ambient)?;
        Ok(SqfIdeal { ambient, gens: Vec::new() })
    }

    /// Build an ideal from arbitrary squarefree monomials, keeping exactly
    /// the inclusion-minimal ones. Rejects the unit ideal and out-of-range
    /// variables.
    pub fn minimalize(
        ambient: usize,
        monomials: impl IntoIterator<Item = SqfMonomial>,
    ) -> Result<Self, IdealError> {
        check_ambient(ambient)?;
        let mut supports = Vec::new();
        for m in monomials {
            if m.is_one() {
                return Err(IdealError::UnitIdeal);
            }
            if let Some(max) = m.support().max() {
                if max > ambient {
                    return Err(IdealError::AmbientMismatch { index: max, ambient });
                }
            }
            supports.push(m.support());
        }
        let gens = inclusion_minimal(supports)
            .into_iter()
            .map(SqfMonomial::from_support)
            .collect();
        Ok(SqfIdeal { ambient, gens })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Minimal generators in canonical (degree, lex) order.
    pub fn gens(&self) -> &[SqfMonomial] {
        &self.gens
    }

    pub fn num_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// Union of the generator supports.
    pub fn support(&self) -> VarSet {
        self.gens
            .iter()
            .fold(VarSet::EMPTY, |acc, g| acc | g.support())
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.gens.iter().map(|g| g.degree()).max()
    }

    pub fn is_single_degree(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Ideal membership for a squarefree monomial.
    pub fn contains_monomial(&self, m: SqfMonomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Containment `other ⊆ self`, tested generator-wise.
    pub fn contains_ideal(&self, other: &SqfIdeal) -> bool {
        other.gens.iter().all(|g| self.contains_monomial(*g))
    }

    /// Squarefree product `self * other`: the ideal generated by the
    /// squarefree parts of pairwise products, i.e. by the unions of coprime
    /// generator pairs.
    pub fn squarefree_product(&self, other: &SqfIdeal) -> Result<SqfIdeal, IdealError> {
        if self.ambient != other.ambient {
            return Err(IdealError::AmbientsDiffer(self.ambient, other.ambient));
        }
        let mut products = std::collections::BTreeSet::new();
        for u in &self.gens {
            for v in &other.gens {
                if let Some(p) = u.coprime_product(*v) {
                    products.insert(p);
                }
            }
        }
        SqfIdeal::minimalize(self.ambient, products)
    }

    /// The k-th squarefree power, generated by products of k pairwise
    /// coprime generators. Zero exactly when `k > nu()`.
    pub fn squarefree_power(&self, k: usize) -> SqfIdeal {
        assert!(k >= 1, "squarefree power requires k >= 1");
        let mut power = self.clone();
        for _ in 1..k {
            power = power
                .squarefree_product(self)
                .expect("equal ambients by construction");
            if power.is_zero() {
                break;
            }
        }
        power
    }

    /// Maximum length of a monomial regular sequence in the ideal: the
    /// largest number of pairwise coprime minimal generators, by
    /// branch-and-bound over the generator list.
    pub fn nu(&self) -> Result<usize, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        let supports: Vec<VarSet> = self.gens.iter().map(|g| g.support()).collect();
        let min_degree = self.min_degree().unwrap_or(1).max(1);
        let mut best = 0usize;
        fn search(
            supports: &[VarSet],
            start: usize,
            used: VarSet,
            count: usize,
            ambient: usize,
            min_degree: usize,
            best: &mut usize,
        ) {
            if count > *best {
                *best = count;
            }
            let slots = (ambient - used.len()) / min_degree;
            if count + (supports.len() - start).min(slots) <= *best {
                return;
            }
            for i in start..supports.len() {
                if supports[i].is_disjoint(used) {
                    search(
                        supports,
                        i + 1,
                        used | supports[i],
                        count + 1,
                        ambient,
                        min_degree,
                        best,
                    );
                }
            }
        }
        search(&supports, 0, VarSet::EMPTY, 0, self.ambient, min_degree, &mut best);
        Ok(best)
    }

    /// Minimum generator degree and generator count of the k-th squarefree
    /// power. Fails with `ZeroIdeal` when the power vanishes.
    pub fn degree_stats(&self, k: usize) -> Result<DegreeStats, IdealError> {
        let power = self.squarefree_power(k);
        let min_degree = power.min_degree().ok_or(IdealError::ZeroIdeal)?;
        Ok(DegreeStats { k, min_degree, generator_count: power.num_gens() })
    }

    /// Restrict the ambient ring to the support of the ideal, renumbering
    /// variables in increasing order. Returns the trimmed ideal and the list
    /// of original indices (new index `i+1` was `kept[i]`).
    pub fn trim(&self) -> (SqfIdeal, Vec<usize>) {
        let kept: Vec<usize> = self.support().to_vec();
        if kept.is_empty() {
            return (SqfIdeal { ambient: 1, gens: Vec::new() }, vec![]);
        }
        let mut new_index = vec![0usize; self.ambient + 1];
        for (new, &old) in kept.iter().enumerate() {
            new_index[old] = new + 1;
        }
        let gens = self
            .gens
            .iter()
            .map(|g| SqfMonomial::from_vars(g.support().iter().map(|v| new_index[v])))
            .collect();
        (SqfIdeal { ambient: kept.len(), gens }, kept)
    }
}

impl fmt::Display for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (pos, g) in self.gens.iter().enumerate() {
            if pos > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SqfIdeal(n={}, {})", self.ambient, self)
    }
}

fn check_ambient(ambient: usize) -> Result<(), IdealError> {
    if ambient == 0 || ambient > VarSet::MAX_AMBIENT {
        Err(IdealError::BadAmbient(ambient))
    } else {
        Ok(())
    }
}

/// A monomial with arbitrary nonnegative exponents, used only where ordinary
/// (non-squarefree) products are genuinely needed: squarefree parts of
/// ordinary powers and the polymatroidal exchange check.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ExpMonomial {
    exps: Vec<u32>,
}

impl ExpMonomial {
    pub fn new(exps: Vec<u32>) -> Self {
        ExpMonomial { exps }
    }

    pub fn from_sqf(m: SqfMonomial, ambient: usize) -> Self {
        let mut exps = vec![0u32; ambient];
        for i in m.support().iter() {
            exps[i - 1] = 1;
        }
        ExpMonomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var - 1]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_indices(
            self.exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, _)| i + 1),
        )
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn to_sqf(&self) -> Result<SqfMonomial, IdealError> {
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 1 {
                return Err(IdealError::NotSquarefree { variable: i + 1, exponent: e });
            }
        }
        Ok(SqfMonomial::from_support(self.support()))
    }

    pub fn divides(&self, other: &ExpMonomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &ExpMonomial) -> ExpMonomial {
        ExpMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// `self / gcd(self, other)`, the generator contribution to a colon ideal.
    pub fn quotient_by_gcd(&self, other: &ExpMonomial) -> ExpMonomial {
        ExpMonomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        }
    }

    /// `x_to * (self / x_from)`; requires `x_from` to divide `self`.
    pub fn exchange(&self, from: usize, to: usize) -> ExpMonomial {
        assert!(self.exps[from - 1] > 0);
        let mut exps = self.exps.clone();
        exps[from - 1] -= 1;
        exps[to - 1] += 1;
        ExpMonomial { exps }
    }

    /// `Some(v)` when the monomial is the single variable `x_v`.
    pub fn as_variable(&self) -> Option<usize> {
        if self.degree() != 1 {
            return None;
        }
        self.support().min()
    }
}

impl fmt::Display for ExpMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// Inclusion-minimal monomials under exponentwise divisibility.
pub fn minimalize_exp(monomials: impl IntoIterator<Item = ExpMonomial>) -> Vec<ExpMonomial> {
    let mut list: Vec<ExpMonomial> = monomials.into_iter().collect();
    list.sort();
    list.dedup();
    list.sort_by_key(|m| m.degree());
    let mut result: Vec<ExpMonomial> = Vec::new();
    'outer: for m in list {
        for kept in &result {
            if kept.divides(&m) {
                continue 'outer;
            }
        }
        result.push(m);
    }
    result.sort();
    result
}

/// Minimal generators of the ordinary power `J^k` of the monomial ideal
/// generated by `gens`: all products of k generators with the non-minimal
/// ones discarded.
pub fn ordinary_power(gens: &[ExpMonomial], k: usize) -> Vec<ExpMonomial> {
    assert!(k >= 1);
    let mut products: Vec<ExpMonomial> = gens.to_vec();
    for _ in 1..k {
        let mut next = std::collections::BTreeSet::new();
        for p in &products {
            for g in gens {
                next.insert(p.mul(g));
            }
        }
        products = minimalize_exp(next);
    }
    products
}

/// The squarefree part: the ideal generated by the squarefree monomials of
/// the input, minimalized. For the generators of `J^k` this is `J^[k]` when
/// `J` is squarefree.
pub fn squarefree_part(
    monomials: &[ExpMonomial],
    ambient: usize,
) -> Result<SqfIdeal, IdealError> {
    SqfIdeal::minimalize(
        ambient,
        monomials
            .iter()
            .filter(|m| m.is_squarefree())
            .map(|m| SqfMonomial::from_support(m.support())),
    )
}
