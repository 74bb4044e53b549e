//! Exact-arithmetic toolkit for braid group representations.
//!
//! Everything here is integer arithmetic: permutations, free-group words,
//! integer symplectic matrices, and polynomial quotient rings. There is no
//! floating point anywhere, so every verified identity is exact and every
//! refuted identity is a genuine refutation.
//!
//! The main entry points are:
//!
//! * [`homsearch`] — exhaustive enumeration of homomorphisms `B_n -> Σ_m`
//!   up to conjugacy, with the rigidity checks (transitive ⇒ cyclic or
//!   standard) for small parameters.
//! * [`tss`] — totally symmetric sets in symmetric groups, the labeled
//!   multicurve counting model, and the `2^(k-1)` order bound.
//! * [`symp`] — transvections on `H_1` of a closed surface, the standard
//!   and negative-standard homomorphisms, and the lantern / chain /
//!   generating-set identities at homology level.
//! * [`superelliptic`] — reduced Burau matrices over the cyclotomic
//!   quotient ring, modelling the monodromy of `y^d = (x-x_1)...(x-x_n)`.
//! * [`audit`] — a ledger of integer inequality chains checked over
//!   explicit parameter ranges.

pub mod audit;
pub mod braid;
pub mod cli;
pub mod error;
pub mod homsearch;
pub mod perm;
pub mod superelliptic;
pub mod symp;
pub mod tss;

pub use error::{Error, Result};
