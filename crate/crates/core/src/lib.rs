//! Exact computations with squarefree powers of squarefree monomial ideals.
//!
//! The toolkit computes squarefree powers I^[k], depth and projective
//! dimension through Hochster's formula, normalized depth profiles, linear
//! quotient certificates with the associated closed-form depth, well-ordered
//! facet covers as Betti-number certificates, and Alexander duality as an
//! independent cross-check.

pub mod betti;
pub mod bits;
pub mod complex;
pub mod covers;
pub mod field;
pub mod graph;
pub mod homology;
pub mod ideal;
pub mod io;
pub mod linalg;
pub mod linquot;
pub mod profile;
pub mod verify;

pub use betti::{alexander_dual, depth, dual_regularity, hochster_betti, top_betti_mindepth, BettiTable};
pub use bits::VarSet;
pub use complex::{facet_ideal, stanley_reisner, SimplicialComplex};
pub use covers::{facet_complex, is_well_ordered_cover, FacetCover};
pub use field::FieldSpec;
pub use graph::{FamilySpec, Graph, GraphError, Matching};
pub use homology::{reduced_homology, Budget, HomologyError, HomologyVector};
pub use ideal::{DegreeStats, ExpMonomial, IdealError, SqfIdeal, SqfMonomial};
pub use linquot::{find_linear_quotients, QuotientOrdering};
pub use profile::{profile, DepthProfile, ScanReport};
