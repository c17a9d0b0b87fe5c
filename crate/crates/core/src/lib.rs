//! Proper-divisibility posets and the topology of their order complexes.
//!
//! The crate is organised bottom-up:
//!
//! - [`poset`]: finite posets stored as Hasse diagrams, the builders for
//!   chains, Boolean lattices, `P(a₁,…,aₙ)` and proper-division products, and
//!   the usual structural queries (atoms, intervals, duals, maximal chains,
//!   Möbius numbers, isomorphism).
//! - [`complex`]: order complexes and face statistics.
//! - [`homology`]: exact simplicial homology over ℤ (sparse unimodular
//!   reduction plus a dense arbitrary-precision Smith normal form).
//! - [`shellability`]: recursive atom orderings (search and verification) and
//!   falling chains of `P(a,b)*`.
//! - [`formulas`]: closed-form Betti and Euler-characteristic formulas for
//!   `Δ(P(a,b))`.
//! - [`sweep`]: consistency sweeps tying the formulas to the homology oracle.
//!
//! With the default `parallel` feature the data-parallel loops (relation
//! building, face generation, boundary assembly, sweeps) run on rayon; without
//! it the same code paths run sequentially and produce identical output.

pub mod complex;
pub mod error;
pub mod formulas;
pub mod homology;
pub mod limits;
pub mod multidegree;
mod par;
pub mod poset;
pub mod shellability;
pub mod sweep;

pub use complex::{order_complex, SimplicialComplex};
pub use error::{Error, Result};
pub use homology::{homology, HomologySummary};
pub use limits::Limits;
pub use multidegree::Multidegree;
pub use poset::{Label, Poset};
