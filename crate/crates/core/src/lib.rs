//! Factorizations, Betti elements and minimal presentations of finitely
//! generated, cancellative, reduced commutative monoids.
//!
//! The crate works with two kinds of monoids:
//!
//! * [`NumericalSemigroup`]: co-finite submonoids of the nonnegative integers,
//!   held by their minimal generators together with the Apéry set of the
//!   multiplicity (so membership is a table lookup).
//! * [`AffineSemigroup`]: finitely generated submonoids of `N^d`.
//!
//! On top of these it provides factorization enumeration and R-class
//! partitions ([`factorizations`]), Betti elements and minimal presentations
//! ([`presentations`]), integer lattices and gluings ([`lattice`],
//! [`gluing`]), closed forms for a few classical families ([`families`]) and
//! the semigroup tree used to enumerate numerical semigroups by Frobenius
//! number ([`enumeration`]).
//!
//! Everything here is `no_std` (with `alloc`). IO, the command line and
//! threaded enumeration live in the `monoidp` crate.
#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod affine;
pub mod enumeration;
pub mod error;
pub mod factorizations;
pub mod families;
pub mod gluing;
pub mod lattice;
pub mod numerical;
pub mod presentations;

mod arith;
mod dsu;

pub use affine::AffineSemigroup;
pub use error::{Error, Result};
pub use factorizations::{Factorization, FactorizationSet, RClassPartition};
pub use lattice::IntegerLattice;
pub use numerical::{Invariants, NumericalSemigroup};
pub use presentations::{BettiReport, Presentation, PresentationPair, Topology};
