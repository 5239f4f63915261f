//! The complete set of p^n + 1 mutually unbiased bases.
//!
//! Basis ν is the image of the computational basis under the rotation
//! operator V_ν = F·diag(c_{λν})·F†, and the final basis is the conjugate
//! (Fourier) basis itself. The coefficients c_{λν} solve
//!
//! ```text
//! c_{0ν} = 1,   c_{λ+λ′,ν} · conj(c_{λν}) = c_{λ′ν} · χ(−νλ′λ)
//! ```
//!
//! For odd p the closed form c_{λν} = χ(−2^{-1}λ²ν) is used. For p = 2 the
//! recursion is solved exactly over conductor 4 with a quadratic form on the
//! power-basis coordinates of λ; the single-qubit case lands on the rotation
//! with V Z V† = −i Z X.
//!
//! The same coefficients give the conjugation law
//! V_ν Z_μ V_ν† = c_{μν} · Λ(μ,ν), which ties every basis to its commuting
//! operator class.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::{CycInt, ScaledMatrix, ScaledVector};
use crate::galois::{Field, FieldElement};
use crate::pauli::PauliMonomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MubError {
    /// An exact identity that must hold by construction failed; this always
    /// signals an implementation defect, never bad input.
    CheckFailed(String),
}

impl fmt::Display for MubError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MubError::CheckFailed(msg) => write!(f, "exact check failed: {}", msg),
        }
    }
}

impl core::error::Error for MubError {}

/// Which eigenbasis a table row is.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisLabel {
    /// V_ν-rotated computational basis; ν = 0 is the computational basis.
    Rotated(FieldElement),
    /// The conjugate (Fourier) basis, eigenbasis of the shifts X_μ.
    Fourier,
}

/// The d^n + 1 mutually unbiased bases of one field.
#[derive(Clone, Debug)]
pub struct MubTable {
    labels: Vec<BasisLabel>,
    bases: Vec<Vec<ScaledVector>>,
}

impl MubTable {
    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    pub fn basis(&self, i: usize) -> &[ScaledVector] {
        &self.bases[i]
    }

    pub fn label(&self, i: usize) -> &BasisLabel {
        &self.labels[i]
    }

    pub fn bases(&self) -> &[Vec<ScaledVector>] {
        &self.bases
    }
}

/// The rotation coefficient c_{λν}.
pub fn c_coefficient(field: &Field, lambda: &FieldElement, nu: &FieldElement) -> CycInt {
    let m = field.conductor();
    if field.characteristic() != 2 {
        // χ(−2^{-1} λ² ν)
        let l2nu = field.mul(&field.mul(lambda, lambda), nu);
        let arg = field.neg(&field.scalar_mul(field.inv2(), &l2nu));
        field.character_in(&arg, m)
    } else {
        // (−i)^{f(λ)} with f(λ) = Σ ℓ_j a_j + 2 Σ_{j<k} ℓ_j ℓ_k t_{jk} (mod 4),
        // a_j = tr(ν e_j²), t_{jk} = tr(ν e_j e_k) over the power basis {e_j}
        let n = field.degree();
        let coords = lambda.coeffs();
        let mut powers = Vec::with_capacity(n);
        let mut cur = field.one();
        for _ in 0..n {
            powers.push(cur.clone());
            cur = field.mul(&cur, &field.from_coeffs(&basis_x(field)));
        }
        let mut f_exp: i64 = 0;
        for j in 0..n {
            if coords[j] == 0 {
                continue;
            }
            let aj = field.trace(&field.mul(nu, &field.mul(&powers[j], &powers[j])));
            f_exp += aj as i64;
            for k in j + 1..n {
                if coords[k] == 0 {
                    continue;
                }
                let tjk = field.trace(&field.mul(nu, &field.mul(&powers[j], &powers[k])));
                f_exp += 2 * tjk as i64;
            }
        }
        CycInt::root_power(m, -f_exp)
    }
}

fn basis_x(field: &Field) -> Vec<u32> {
    let n = field.degree();
    let mut c = alloc::vec![0u32; n];
    if n == 1 {
        c[0] = 1;
    } else {
        c[1] = 1;
    }
    c
}

/// The finite Fourier transform F = d^{-n/2} Σ χ(λλ′) |λ⟩⟨λ′|.
pub fn fourier_matrix(field: &Field) -> ScaledMatrix {
    let q = field.order();
    let m = field.conductor();
    let mut entries = Vec::with_capacity(q * q);
    for lam in field.elements() {
        for lam2 in field.elements() {
            entries.push(field.character_in(&field.mul(lam, lam2), m));
        }
    }
    let out = ScaledMatrix::new(field.characteristic(), m, field.degree() as u32, q, q, entries);
    // entries are roots of unity, so the canonical scale stays at n
    debug_assert_eq!(out.scale(), field.degree() as u32);
    out
}

/// The rotation operator V_ν = F · diag(c_{λν}) · F†, unitary and diagonal
/// in the conjugate basis. V_0 is the identity.
pub fn v_operator(field: &Field, nu: &FieldElement) -> ScaledMatrix {
    let q = field.order();
    let m = field.conductor();
    let f = fourier_matrix(field);
    let mut diag = ScaledMatrix::zero(field.characteristic(), m, q, q);
    for (i, lam) in field.elements().iter().enumerate() {
        diag.set_entry(i, i, c_coefficient(field, lam, nu));
    }
    let diag = diag.finish();
    f.mat_mul(&diag).mat_mul(&f.adjoint())
}

/// |ψ_λ^ν⟩ = V_ν|λ⟩, i.e. column λ of the rotation operator.
pub fn mub_state(field: &Field, nu: &FieldElement, lambda: &FieldElement) -> ScaledVector {
    v_operator(field, nu).column(field.index_of(lambda))
}

/// Exact unbiasedness test: both lists are orthonormal and every cross
/// inner product has squared modulus 1/d^n.
pub fn check_unbiased(field: &Field, b1: &[ScaledVector], b2: &[ScaledVector]) -> bool {
    orthonormal(b1) && orthonormal(b2) && cross_unbiased(field, b1, b2)
}

fn orthonormal(basis: &[ScaledVector]) -> bool {
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let z = u.inner(v);
            let ok = if i == j { z.is_one() } else { z.is_zero() };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn cross_unbiased(field: &Field, b1: &[ScaledVector], b2: &[ScaledVector]) -> bool {
    let n = field.degree() as i32;
    for u in b1 {
        for v in b2 {
            if !u.inner(v).abs_squared_is_power(n) {
                return false;
            }
        }
    }
    true
}

/// Builds all d^n + 1 bases. With `verify` set, every same-basis Gram and
/// every cross pair is checked exactly during construction.
pub fn mub_table(field: &Field, verify: bool) -> Result<MubTable, MubError> {
    let q = field.order();
    let mut labels = Vec::with_capacity(q + 1);
    let mut bases = Vec::with_capacity(q + 1);
    for nu in field.elements() {
        let v = v_operator(field, nu);
        let basis: Vec<ScaledVector> = (0..q).map(|j| v.column(j)).collect();
        labels.push(BasisLabel::Rotated(nu.clone()));
        bases.push(basis);
    }
    let f = fourier_matrix(field);
    bases.push((0..q).map(|j| f.column(j)).collect());
    labels.push(BasisLabel::Fourier);

    let table = MubTable { labels, bases };
    if verify {
        let (pairs, ok) = verify_pairwise(field, &table);
        if !ok {
            return Err(MubError::CheckFailed(format!(
                "pairwise unbiasedness defect in {} ({} pairs)",
                field, pairs
            )));
        }
    }
    Ok(table)
}

/// Checks every same-basis Gram and all cross pairs; returns the number of
/// cross pairs examined and whether everything was exact.
pub fn verify_pairwise(field: &Field, table: &MubTable) -> (usize, bool) {
    let mut pairs = 0;
    for basis in table.bases() {
        if !orthonormal(basis) {
            return (pairs, false);
        }
    }
    for i in 0..table.len() {
        for j in i + 1..table.len() {
            pairs += 1;
            if !cross_unbiased(field, table.basis(i), table.basis(j)) {
                return (pairs, false);
            }
        }
    }
    (pairs, true)
}

/// Matrix of inner products ⟨b1_i|b2_j⟩ between two unbiased bases: a
/// generalized Hadamard matrix. Unitarity and the flat-modulus property are
/// asserted exactly.
pub fn gram_hadamard(
    field: &Field,
    b1: &[ScaledVector],
    b2: &[ScaledVector],
) -> Result<ScaledMatrix, MubError> {
    let q = b1.len();
    let scalars: Vec<Vec<crate::cyclotomic::ScaledScalar>> = b1
        .iter()
        .map(|u| b2.iter().map(|v| u.inner(v)).collect())
        .collect();
    let max_scale = scalars.iter().flatten().map(|s| s.scale).max().unwrap_or(0);
    let m = field.conductor();
    let p = field.characteristic() as i64;
    let mut entries = Vec::with_capacity(q * q);
    for row in &scalars {
        for s in row {
            let diff = max_scale - s.scale;
            if diff % 2 != 0 {
                return Err(MubError::CheckFailed(String::from(
                    "inner-product scale parity mismatch",
                )));
            }
            let lift = CycInt::integer(m, p.pow(diff / 2));
            entries.push(s.value.embed(m).mul(&lift));
        }
    }
    let out = ScaledMatrix::new(field.characteristic(), m, max_scale, q, q, entries);
    if !out.is_unitary() {
        return Err(MubError::CheckFailed(String::from("Hadamard gram is not unitary")));
    }
    let n = field.degree() as i32;
    for i in 0..q {
        for j in 0..q {
            let s = crate::cyclotomic::ScaledScalar::new(
                field.characteristic(),
                out.scale(),
                out.entry(i, j).clone(),
            );
            if !s.abs_squared_is_power(n) {
                return Err(MubError::CheckFailed(String::from(
                    "Hadamard gram entry does not have squared modulus 1/d^n",
                )));
            }
        }
    }
    Ok(out)
}

/// Verifies V_ν Z_μ V_ν† = φ·Λ(μ,ν) as exact matrices and returns φ.
///
/// The phase is additionally asserted to equal c_{μν}, which for odd p is
/// the closed form χ(−2^{-1}μ²ν); the single-qubit case gives φ = −i, the
/// rotation anchor V Z V† = −i Z X.
pub fn conjugation_check(
    field: &Field,
    mu: &FieldElement,
    nu: &FieldElement,
) -> Result<CycInt, MubError> {
    let v = v_operator(field, nu);
    let z = PauliMonomial::z_op(field, mu.clone()).to_matrix(field);
    let conj = v.mat_mul(&z).mat_mul(&v.adjoint());
    let lambda = PauliMonomial::lambda_class(field, mu, nu).to_matrix(field);
    let phase = conj.equals_up_to_phase(&lambda).ok_or_else(|| {
        MubError::CheckFailed(format!(
            "V_ν Z_μ V_ν† is not proportional to Λ(μ,ν) at μ={} ν={}",
            mu, nu
        ))
    })?;
    let predicted = c_coefficient(field, mu, nu);
    if phase != predicted {
        return Err(MubError::CheckFailed(format!(
            "conjugation phase {} differs from coefficient prediction {}",
            phase, predicted
        )));
    }
    Ok(phase)
}

/// Verifies the matrix-element identity Λ(μ,ν) = conj(c_{μν}) · V_ν Z_μ V_ν†
/// entrywise, with the phase taken from the coefficient formula rather than
/// searched.
pub fn lambda_matrix_element_check(field: &Field, mu: &FieldElement, nu: &FieldElement) -> bool {
    let v = v_operator(field, nu);
    let z = PauliMonomial::z_op(field, mu.clone()).to_matrix(field);
    let elements = v.mat_mul(&z).mat_mul(&v.adjoint());
    let lambda = PauliMonomial::lambda_class(field, mu, nu).to_matrix(field);
    let predicted = c_coefficient(field, mu, nu).conj();
    lambda == elements.scalar_mul(&predicted)
}
