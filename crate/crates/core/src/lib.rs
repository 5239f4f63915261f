//! Exact construction and machine verification of mutually unbiased bases
//! and generalized Bell bases for bipartite multiqudit systems.
//!
//! Everything is computed over exact rings — finite fields GF(p^n) and
//! cyclotomic integers `Z[ω_M]` with tracked √p scale factors — so every
//! algebraic identity (unbiasedness, orthonormality, completeness, projector
//! sums, maximal entanglement) is checked with zero floating-point error.
//!
//! Modules:
//! - [`galois`]: GF(p^n) arithmetic, trace map, additive characters, and
//!   coordinate bases (polynomial, normal, dual, selfdual).
//! - [`cyclotomic`]: the exact scalar ring and scale-tracked linear algebra.
//! - [`pauli`]: generalized Pauli monomials ω^t·Z_μ·X_ν with Weyl-relation
//!   composition and dense realizations.
//! - [`mub`]: the complete set of p^n + 1 mutually unbiased bases via the
//!   finite Fourier transform and rotation operators V_ν.
//! - [`bell`]: generalized Bell bases, symmetry classification, projector-sum
//!   identities and entanglement checks.
//! - [`verify`]: named invariant suites driving all of the above.
//!
//! The crate is `no_std` (with `alloc`); IO, the CLI and file formats live in
//! the companion `mubell-cli` crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod bell;
pub mod cyclotomic;
pub mod galois;
pub mod mub;
pub mod pauli;
pub mod verify;

pub use cyclotomic::{CycInt, ScaledMatrix, ScaledScalar, ScaledVector};
pub use galois::{BasisKind, Field, FieldBasis, FieldElement, FieldError};
