//! Combinatorics and commutative algebra of dimer quivers on the torus.
//!
//! A dimer quiver is a quiver embedded in a two-torus so that its faces are
//! bounded by oriented cycles, alternately "plus" and "minus". The quotient of
//! its path algebra by the face relations is studied through a few layers that
//! this crate builds up in order:
//!
//! * [`tiling`] - the quiver itself, structural validation, homology classes;
//! * [`paths`] - path words, the face rewriting system, bounded equivalence,
//!   and the cancellativity search;
//! * [`matchings`] - perfect and simple matchings via exact cover, and the
//!   matching-counting path invariants;
//! * [`monomial`], [`lattice`], [`cone`], [`semigroup`] - exponent-vector
//!   arithmetic, integer lattice ranks, cone face enumeration, and affine
//!   semigroup algebras;
//! * [`contraction`] - contracting a forest of arrows onto a smaller dimer
//!   quiver and transporting paths and relations along the contraction;
//! * [`center`] - cycle algebras, truncated homotopy centers, reduced-center
//!   bounds, noetherianity witnesses, and dimension reports.
//!
//! Everything is deterministic: no hashing, no randomness, no floats. The
//! crate is `no_std` (with `alloc`) so the algorithmic layer stays portable;
//! file formats and the command-line front end live in the companion crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod center;
pub mod cone;
pub mod contraction;
pub mod lattice;
pub mod matchings;
pub mod monomial;
pub mod paths;
pub mod semigroup;
pub mod tiling;
