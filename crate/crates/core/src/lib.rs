//! Generalized arc spaces, jets and auto-arc spaces of affine schemes over
//! fat points, with Grothendieck-ring bookkeeping in the Lefschetz motive.
//!
//! The crate is organized bottom-up:
//!
//! * [`poly`]: exact polynomials over `QQ` and `F_p`;
//! * [`ideal`]: Groebner bases, normal forms, standard monomials, dimension
//!   and equality of ideals up to a renaming of variables;
//! * [`arc`]: fat points, jets, arc spaces and auto-arc spaces;
//! * [`reduction`]: heuristic reduced structure and product decomposition;
//! * [`motive`]: Laurent polynomials in `L`, series, rational functions,
//!   point counting and class interpolation;
//! * [`zeta`]: assembly of the generating series and comparison reports;
//! * [`cli`]: the job runner behind the `autoarc` binary.

pub mod poly;
pub mod ideal;
pub mod arc;
pub mod reduction;
pub mod motive;
pub mod zeta;
pub mod verify;
pub mod cli;
