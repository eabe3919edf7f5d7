//! Convexity notions for abelian semigroups, made executable.
//!
//! For a subset A of a commutative semigroup and n >= 1, write nA for
//! the pointwise n-fold sum, [n]A for the n-fold sumset and n^-1 A for
//! the preimage of A under x -> n.x. A is n-convex when
//! n^-1([n]A) <= A, and n-konvex when [n]A <= nA. This crate carries
//! finite Cayley-table carriers and two symbolic integer carriers, the
//! subset algebra of the three operations, decision procedures that
//! settle "for all n" questions exactly via cycle detection, convex
//! hulls for a set of multipliers, the induced singleton-hull partition
//! and quotient, and a Stone-type separation of disjoint sets into
//! complementary convex halves, with verifiable certificates.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bits;
pub mod carrier;
pub mod convexity;
pub mod error;
pub mod hull;
pub mod iterate;
pub mod multiplier;
pub mod sample;
pub mod separation;
pub mod setalg;

pub use carrier::{catalog, CatalogEntry, Elem, Semigroup, Subset};
pub use error::{Error, Result};
pub use multiplier::Multipliers;
