//! The generalized Pauli group over GF(p^n).
//!
//! Elements are kept symbolic as monomials ω^t · Z_μ · X_ν (Z before X), with
//! composition driven by the Weyl relation Z_μ X_ν = χ(μν) X_ν Z_μ. Phases
//! live in the conductor the field's matrix realizations use (4 for p = 2,
//! otherwise p), so qubit products involving ±i stay inside the ring.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{CycInt, ScaledMatrix};
use crate::galois::{BasisKind, Field, FieldBasis, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PauliError {
    /// factor_selfdual requires a monomial with zero phase.
    NonzeroPhase,
    /// The coordinate basis is not selfdual.
    NotSelfdual,
    /// The basis is almost-selfdual: the Z factorization breaks at the
    /// exception index, where tr(θ²) ≠ 1 twists the per-qudit exponent.
    AlmostSelfdualObstruction { exception: usize, diagonal_trace: u32 },
}

impl fmt::Display for PauliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PauliError::NonzeroPhase => write!(f, "monomial carries a nonzero phase"),
            PauliError::NotSelfdual => write!(f, "basis is not selfdual"),
            PauliError::AlmostSelfdualObstruction { exception, diagonal_trace } => write!(
                f,
                "almost-selfdual basis obstructs factorization: tr(θ²) = {} at index {}",
                diagonal_trace, exception
            ),
        }
    }
}

impl core::error::Error for PauliError {}

/// ω_M^{phase} · Z_z · X_x, the normal-ordered form of every group element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PauliMonomial {
    phase: u32,
    z: FieldElement,
    x: FieldElement,
}

impl PauliMonomial {
    pub fn new(field: &Field, phase: u32, z: FieldElement, x: FieldElement) -> Self {
        PauliMonomial { phase: phase % field.conductor(), z, x }
    }

    pub fn identity(field: &Field) -> Self {
        PauliMonomial { phase: 0, z: field.zero(), x: field.zero() }
    }

    /// X_μ: the shift |λ⟩ ↦ |λ+μ⟩.
    pub fn x_op(field: &Field, mu: FieldElement) -> Self {
        PauliMonomial { phase: 0, z: field.zero(), x: mu }
    }

    /// Z_μ: the clock |λ⟩ ↦ χ(λμ)|λ⟩.
    pub fn z_op(field: &Field, mu: FieldElement) -> Self {
        PauliMonomial { phase: 0, z: mu, x: field.zero() }
    }

    /// Λ(μ, ν) = Z_μ X_{νμ}, the class-ν monomial. μ = 0 is admitted (it
    /// gives the identity) because the projector-sum identity sums from it.
    pub fn lambda_class(field: &Field, mu: &FieldElement, nu: &FieldElement) -> Self {
        PauliMonomial { phase: 0, z: mu.clone(), x: field.mul(nu, mu) }
    }

    /// Λ̃(μ) = X_μ.
    pub fn lambda_tilde(field: &Field, mu: &FieldElement) -> Self {
        Self::x_op(field, mu.clone())
    }

    pub fn phase_exponent(&self) -> u32 {
        self.phase
    }

    pub fn z_part(&self) -> &FieldElement {
        &self.z
    }

    pub fn x_part(&self) -> &FieldElement {
        &self.x
    }

    pub fn is_identity(&self) -> bool {
        self.phase == 0 && self.z.is_zero() && self.x.is_zero()
    }

    /// The phase as a ring element ω_M^t.
    pub fn phase_value(&self, field: &Field) -> CycInt {
        CycInt::root_power(field.conductor(), self.phase as i64)
    }

    /// Normal-ordered product. Moving X_{ν_a} past Z_{μ_b} costs χ(−μ_b ν_a).
    pub fn compose(field: &Field, a: &PauliMonomial, b: &PauliMonomial) -> PauliMonomial {
        let m = field.conductor();
        let lift = m / field.characteristic();
        let cross = field.trace(&field.neg(&field.mul(&b.z, &a.x)));
        let phase = (a.phase + b.phase + lift * cross) % m;
        PauliMonomial {
            phase,
            z: field.add(&a.z, &b.z),
            x: field.add(&a.x, &b.x),
        }
    }

    /// Hermitian adjoint, normal-ordered.
    pub fn adjoint(&self, field: &Field) -> PauliMonomial {
        let m = field.conductor();
        let lift = m / field.characteristic();
        let cross = field.trace(&field.neg(&field.mul(&self.z, &self.x)));
        let phase = ((m - self.phase) % m + lift * cross) % m;
        PauliMonomial { phase, z: field.neg(&self.z), x: field.neg(&self.x) }
    }

    /// Exact commutation test: χ(μ_a ν_b) = χ(μ_b ν_a).
    pub fn commutes(field: &Field, a: &PauliMonomial, b: &PauliMonomial) -> bool {
        let lhs = field.mul(&a.z, &b.x);
        let rhs = field.mul(&b.z, &a.x);
        field.trace(&field.sub(&lhs, &rhs)) == 0
    }

    /// Dense d^n × d^n realization in the computational basis (field
    /// enumeration order), scale 0.
    pub fn to_matrix(&self, field: &Field) -> ScaledMatrix {
        let q = field.order();
        let m = field.conductor();
        let lift = (m / field.characteristic()) as i64;
        let mut out = ScaledMatrix::zero(field.characteristic(), m, q, q);
        for (col, lam) in field.elements().iter().enumerate() {
            let shifted = field.add(lam, &self.x);
            let row = field.index_of(&shifted);
            let t = self.phase as i64 + lift * field.trace(&field.mul(&self.z, &shifted)) as i64;
            out.set_entry(row, col, CycInt::root_power(m, t));
        }
        out.finish()
    }

    /// Tr[a·b†], computed symbolically: the product traces to ω^t·d^n when
    /// its Z and X parts cancel, and to zero otherwise.
    pub fn hs_trace_inner(field: &Field, a: &PauliMonomial, b: &PauliMonomial) -> CycInt {
        let prod = Self::compose(field, a, &b.adjoint(field));
        let m = field.conductor();
        if prod.z.is_zero() && prod.x.is_zero() {
            CycInt::root_power(m, prod.phase as i64)
                .mul(&CycInt::integer(m, field.order() as i64))
        } else {
            CycInt::zero(m)
        }
    }

    /// Splits a zero-phase monomial over a selfdual basis into n single-qudit
    /// monomials Z^{m_j} X^{l_j}, with m = expand(μ), l = expand(ν).
    ///
    /// Only genuinely selfdual bases admit the factorization: for an
    /// almost-selfdual basis the Gram exception twists the Z exponent at one
    /// coordinate, and the obstruction is reported instead.
    pub fn factor_selfdual(
        &self,
        field: &Field,
        basis: &FieldBasis,
    ) -> Result<Vec<SingleQuditMonomial>, PauliError> {
        if self.phase != 0 {
            return Err(PauliError::NonzeroPhase);
        }
        match basis.kind() {
            BasisKind::Selfdual => {}
            BasisKind::AlmostSelfdual { exception } => {
                let theta = &basis.elements()[exception - 1];
                let diagonal_trace = field.trace(&field.mul(theta, theta));
                return Err(PauliError::AlmostSelfdualObstruction {
                    exception: *exception,
                    diagonal_trace,
                });
            }
            _ => return Err(PauliError::NotSelfdual),
        }
        let zc = field.expand(&self.z, basis);
        let xc = field.expand(&self.x, basis);
        Ok(zc
            .into_iter()
            .zip(xc)
            .map(|(z_exp, x_exp)| SingleQuditMonomial { z_exp, x_exp })
            .collect())
    }

    /// Canonical text form `w^t Z[...] X[...]`.
    pub fn text(&self) -> String {
        format!("w^{} Z{} X{}", self.phase, self.z, self.x)
    }
}

/// A single-qudit factor Z^{z_exp} X^{x_exp} over the prime subfield.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingleQuditMonomial {
    pub z_exp: u32,
    pub x_exp: u32,
}

impl SingleQuditMonomial {
    /// Dense p × p realization in residue indexing |0⟩, |1⟩, …, |p−1⟩,
    /// matching the coordinate labels of [`coordinate_permutation`].
    pub fn to_matrix(&self, p: u32) -> ScaledMatrix {
        let m = if p == 2 { 4 } else { p };
        let lift = (m / p) as i64;
        let mut out = ScaledMatrix::zero(p, m, p as usize, p as usize);
        for col in 0..p {
            let row = (col + self.x_exp) % p;
            let phase = lift * ((self.z_exp as u64 * row as u64) % p as u64) as i64;
            out.set_entry(row as usize, col as usize, CycInt::root_power(m, phase));
        }
        out.finish()
    }
}

/// Permutation sending the enumeration index of λ to the mixed-radix index
/// of its coordinates in `basis` (first coordinate most significant), i.e.
/// the relabeling |λ⟩ ↦ |ℓ_1 … ℓ_n⟩.
pub fn coordinate_permutation(field: &Field, basis: &FieldBasis) -> Vec<usize> {
    let p = field.characteristic() as usize;
    let n = field.degree();
    field
        .elements()
        .iter()
        .map(|lam| {
            let coords = field.expand(lam, basis);
            let mut idx = 0usize;
            for j in 0..n {
                idx = idx * p + coords[j] as usize;
            }
            idx
        })
        .collect()
}

/// The permutation matrix of [`coordinate_permutation`].
pub fn coordinate_permutation_matrix(field: &Field, basis: &FieldBasis) -> ScaledMatrix {
    let q = field.order();
    let m = field.conductor();
    let perm = coordinate_permutation(field, basis);
    let mut out = ScaledMatrix::zero(field.characteristic(), m, q, q);
    for (src, &dst) in perm.iter().enumerate() {
        out.set_entry(dst, src, CycInt::one(m));
    }
    out.finish()
}
