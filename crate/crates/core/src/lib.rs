//! Bi-graded Hilbert functions of general fat points on P¹×P¹.
//!
//! The crate has two independent routes to the same number:
//!
//! * [`formulas`] evaluates the closed-form Hilbert function of `s` general
//!   fat points of multiplicity `m` wherever a closed form is known, and
//!   reports everything else as unknown rather than guessing;
//! * [`oracle`] builds the matrix of vanishing conditions at pseudo-random
//!   support over a large prime field and returns its exact rank.
//!
//! [`horace`] carries the residue/trace calculus on plane schemes used to
//! check Castelnuovo's inequality and the specialization constructions for
//! triple points against the oracle.

pub mod combinatorics;
pub mod error;
pub mod formulas;
pub mod horace;
pub mod oracle;
pub mod scheme;

pub use combinatorics::{
    bin, critical_counts, virtual_dim_bi, virtual_dim_plane, BiDegree, HfValue, Source,
    UniformFatPoints,
};
pub use error::{Error, Result};
pub use formulas::{hf_uniform, Evaluation, RegionClass, RegionKind, TheoremTag};
pub use horace::LineConfiguration;
pub use oracle::OracleConfig;
pub use scheme::{PlaneScheme, SliceProfile};
