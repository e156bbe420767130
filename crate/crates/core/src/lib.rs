//! Exact combinatorics of partial orientations of multigraphs.
//!
//! Tutte polynomials by memoised deletion-contraction, classification of
//! partial orientations (acyclic, strongly connected, minimal under a
//! reference pair), canonical representatives under cut reversals, cycle
//! reversals and edge pivots, brute-force censuses, and the reliability
//! polynomial.
//!
//! ```
//! use partial_orient::{chromatic_count, Multigraph, OrientationClass};
//!
//! let k3 = Multigraph::cycle(3).unwrap();
//! let acyclic = chromatic_count(&k3, OrientationClass::Acyclic, 1, 1).unwrap();
//! assert_eq!(acyclic, 25u32.into());
//! ```

pub mod canon;
pub mod census;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod orientation;
pub mod reductions;
pub mod reliability;
pub mod tutte;

pub use census::{
    brute_count, indegree_census, orbit_scan, verify_identities, CensusReport, IdentityRecord, MoveSet, OrbitScan,
    ENUMERATION_LIMIT,
};
pub use error::{Error, Result};
pub use formulas::{chromatic_count, parse_rational, reliability_exact, OrientationClass};
pub use graph::{EdgeClass, EdgeId, Minor, Multigraph, Vertex};
pub use num_bigint::BigUint;
pub use num_rational::BigRational;
pub use orientation::{
    DirectedCutWitness, DirectedCycleWitness, EdgeState, IndegreeSequence, PartialOrientation, StateSpace,
};
pub use reductions::{
    canonical_rep, canonical_rep_random, decompose_difference, DecomposeMode, MinimalClass, Move, MoveTrace,
    ReferencePair, Witness,
};
pub use reliability::{chromatic_cutmin_probability, mc_cutminimal, mc_subgraph, McConfig, McEstimate};
pub use tutte::{tutte_polynomial, tutte_polynomial_with, TuttePolynomial, TutteOptions};
