//! Weighted Ehrhart theory of full-dimensional lattice polytopes, in exact
//! arithmetic.
//!
//! A weight function assigns a Laurent polynomial `f_Q(y)` to every nonempty
//! face `Q` of a lattice polytope `P ⊂ R^n`. The weighted Ehrhart polynomial
//!
//! ```text
//! E_{P,f}(l, y) = sum_Q f_Q(y) (1+y)^{dim Q} |relint(lQ) ∩ Z^n|
//! ```
//!
//! is a polynomial in `l`. This crate computes it, verifies its reciprocity
//! law for arbitrary weights and its purity law for the intersection
//! cohomology weights `f_Q(y) = g~_Q(-y)` built from Stanley's toric
//! `g`-polynomials, and derives `Iχ_y`, the intersection cohomology
//! signature, IH Betti numbers and the toric `h`-polynomial.
//!
//! ```
//! use weighted_ehrhart::{standard_polytope, Ehrhart, PolytopeKind};
//!
//! let pyramid = Ehrhart::new(standard_polytope(PolytopeKind::PyramidOverSquare, 3)?)?;
//! assert_eq!(pyramid.ic_chi()?.to_string(), "1 - 2y + 2y^2 - y^3");
//! assert!(pyramid.check_purity(&pyramid.ic_weights()?, 5)?.passed);
//! # Ok::<(), weighted_ehrhart::Error>(())
//! ```

pub mod cli;
pub mod ehrhart;
pub mod error;
pub mod exact;
pub mod io;
pub mod lattice_count;
pub mod polytope;
pub mod stanley;

pub use ehrhart::{CheckReport, CheckRow, Ehrhart, Identity};
pub use error::{Error, Result};
pub use exact::{interpolate_univariate, LaurentPolyY, Poly, Rational, WeightedEhrhartPoly};
pub use lattice_count::{count_closed, count_relint, CountMode, LatticeCounter};
pub use polytope::{
    face_lattice, facet_description, standard_polytope, Face, FaceId, FaceLattice, HalfSpace, LatticePolytope,
    PolytopeKind,
};
pub use stanley::{
    builtin_weight_function, g_polynomial, g_tilde, ic_weight_function, toric_h, FacePoset, WeightFunction, WeightKind,
};

// The guide's code listings run as doctests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/exact.md")]
    mod exact {}
    #[doc = include_str!("../../../book/src/faces.md")]
    mod faces {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/g_polynomials.md")]
    mod g_polynomials {}
    #[doc = include_str!("../../../book/src/weighted.md")]
    mod weighted {}
    #[doc = include_str!("../../../book/src/invariants.md")]
    mod invariants {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
