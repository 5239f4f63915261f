//! Exact arithmetic in rings of cyclotomic integers `Z[ω_M]`, together with
//! scale-tracked vectors and matrices over them.
//!
//! A [`CycInt`] is an integer combination of M-th roots of unity, stored in a
//! canonical form so that ring equality is coefficient equality. Supported
//! conductors are prime M (reduced with 1 + ω + … + ω^{M−1} = 0) and M = 4
//! (reduced with ω² = −1, i.e. Gaussian integers). Conductor-2 values embed
//! into conductor 4 automatically when the two meet in a binary operation.
//!
//! [`ScaledVector`] and [`ScaledMatrix`] attach a base prime p and a scale
//! exponent e to their entries: the complex object they represent is
//! `entries / (√p)^e`. Scales only ever change in steps of two (multiplying
//! or dividing every entry by p), so √p itself never has to live in the ring.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// An element of `Z[ω_M]` in canonical form.
///
/// For prime M the coefficient of ω^{M−1} is always zero after reduction; for
/// M = 4 the coefficients of ω² and ω³ are zero. Two values are equal in the
/// ring iff their canonical coefficient vectors are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CycInt {
    conductor: u32,
    coeffs: Vec<i64>,
}

fn is_prime(m: u32) -> bool {
    if m < 2 {
        return false;
    }
    let mut k = 2u32;
    while k * k <= m {
        if m % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// True if `m` is a supported conductor (prime or 4).
pub fn conductor_supported(m: u32) -> bool {
    m == 4 || is_prime(m)
}

impl CycInt {
    /// Zero in `Z[ω_M]`.
    pub fn zero(conductor: u32) -> Self {
        assert!(conductor_supported(conductor), "unsupported conductor {}", conductor);
        CycInt { conductor, coeffs: vec![0; conductor as usize] }
    }

    /// One in `Z[ω_M]`.
    pub fn one(conductor: u32) -> Self {
        Self::integer(conductor, 1)
    }

    /// The rational integer `v` as an element of `Z[ω_M]`.
    pub fn integer(conductor: u32, v: i64) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = v;
        z
    }

    /// ω_M^{k mod M} in canonical form. `k` may be negative.
    pub fn root_power(conductor: u32, k: i64) -> Self {
        let m = conductor as i64;
        let mut z = Self::zero(conductor);
        let e = k.rem_euclid(m) as usize;
        z.coeffs[e] = 1;
        z.canonicalize();
        z
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Raw canonical coefficients (length M, reduced positions zeroed).
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    fn canonicalize(&mut self) {
        let m = self.conductor as usize;
        if self.conductor == 4 {
            // ω² = −1, ω³ = −ω
            let c2 = self.coeffs[2];
            let c3 = self.coeffs[3];
            self.coeffs[0] -= c2;
            self.coeffs[1] -= c3;
            self.coeffs[2] = 0;
            self.coeffs[3] = 0;
        } else {
            // prime conductor: Σ_k ω^k = 0, subtract the top coefficient
            let top = self.coeffs[m - 1];
            if top != 0 {
                for c in self.coeffs.iter_mut() {
                    *c -= top;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Reports `Some(v)` iff the value is the rational integer `v`.
    pub fn as_integer(&self) -> Option<i64> {
        if self.coeffs[1..].iter().all(|&c| c == 0) {
            Some(self.coeffs[0])
        } else {
            None
        }
    }

    /// Embeds a conductor-2 value (an ordinary integer written as a ± sum of
    /// ω_2 powers) into a larger supported conductor. Identity otherwise.
    pub fn embed(&self, conductor: u32) -> Self {
        if self.conductor == conductor {
            return self.clone();
        }
        assert!(
            self.conductor == 2,
            "cannot embed conductor {} into {}",
            self.conductor,
            conductor
        );
        // canonical conductor-2 values are plain integers
        Self::integer(conductor, self.coeffs[0])
    }

    fn unify(a: &CycInt, b: &CycInt) -> (CycInt, CycInt) {
        if a.conductor == b.conductor {
            (a.clone(), b.clone())
        } else if a.conductor == 2 {
            (a.embed(b.conductor), b.clone())
        } else if b.conductor == 2 {
            (a.clone(), b.embed(a.conductor))
        } else {
            panic!("conductor mismatch: {} vs {}", a.conductor, b.conductor);
        }
    }

    pub fn add(&self, other: &CycInt) -> CycInt {
        let (mut a, b) = Self::unify(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(b.coeffs.iter()) {
            *x += *y;
        }
        a.canonicalize();
        a
    }

    pub fn sub(&self, other: &CycInt) -> CycInt {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycInt {
        let mut z = self.clone();
        for c in z.coeffs.iter_mut() {
            *c = -*c;
        }
        z
    }

    pub fn mul(&self, other: &CycInt) -> CycInt {
        let (a, b) = Self::unify(self, other);
        let m = a.conductor as usize;
        let mut out = CycInt::zero(a.conductor);
        for (i, &ca) in a.coeffs.iter().enumerate() {
            if ca == 0 {
                continue;
            }
            for (j, &cb) in b.coeffs.iter().enumerate() {
                if cb == 0 {
                    continue;
                }
                out.coeffs[(i + j) % m] += ca * cb;
            }
        }
        out.canonicalize();
        out
    }

    /// Complex conjugation, ω^k ↦ ω^{M−k}. A ring automorphism of order two.
    pub fn conj(&self) -> CycInt {
        let m = self.conductor as usize;
        let mut z = CycInt::zero(self.conductor);
        for (k, &c) in self.coeffs.iter().enumerate() {
            z.coeffs[(m - k) % m] += c;
        }
        z.canonicalize();
        z
    }

    /// z · conj(z). For a root of unity this is 1; in general it is the
    /// squared modulus whenever the value is real-integer valued.
    pub fn abs_squared(&self) -> CycInt {
        self.mul(&self.conj())
    }

    /// True if every coefficient is divisible by `p`.
    fn divisible_by(&self, p: i64) -> bool {
        self.coeffs.iter().all(|&c| c % p == 0)
    }

    fn div_exact(&mut self, p: i64) {
        for c in self.coeffs.iter_mut() {
            debug_assert!(*c % p == 0);
            *c /= p;
        }
    }

    /// The 2M unit-modulus elements ±ω^k of `Z[ω_M]`.
    pub fn unit_phases(conductor: u32) -> Vec<CycInt> {
        let mut out = Vec::with_capacity(2 * conductor as usize);
        for k in 0..conductor as i64 {
            let w = CycInt::root_power(conductor, k);
            out.push(w.neg());
            out.push(w);
        }
        out
    }
}

impl fmt::Display for CycInt {
    /// Canonical text form `cyc(M)[c0,c1,...]`, listing only the coefficient
    /// positions that can be nonzero after reduction.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let keep = if self.conductor == 4 { 2 } else { (self.conductor - 1).max(1) as usize };
        write!(f, "cyc({})[", self.conductor)?;
        for (i, c) in self.coeffs.iter().take(keep).enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for CycInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A single complex value `value / (√base)^scale`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledScalar {
    pub base: u32,
    pub scale: u32,
    pub value: CycInt,
}

impl ScaledScalar {
    pub fn new(base: u32, scale: u32, value: CycInt) -> Self {
        let mut s = ScaledScalar { base, scale, value };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.value.is_zero() {
            self.scale = 0;
            return;
        }
        let p = self.base as i64;
        while self.scale >= 2 && self.value.divisible_by(p) {
            self.value.div_exact(p);
            self.scale -= 2;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// True iff the represented value is exactly 1.
    pub fn is_one(&self) -> bool {
        if self.scale % 2 != 0 {
            return false;
        }
        let p = self.base as i64;
        let want = p.pow(self.scale / 2);
        self.value.as_integer() == Some(want)
    }

    /// True iff |value|² is exactly p^{-k} (k may be negative for powers > 1).
    pub fn abs_squared_is_power(&self, k: i32) -> bool {
        let p = self.base as i64;
        let a2 = self.value.abs_squared();
        let need = self.scale as i32 - k;
        match a2.as_integer() {
            Some(v) if need >= 0 => v == p.pow(need as u32),
            Some(v) => v != 0 && p.pow((-need) as u32) * v == 1,
            None => false,
        }
    }
}

/// A column vector of cyclotomic integers with a common scale exponent.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledVector {
    base: u32,
    scale: u32,
    conductor: u32,
    entries: Vec<CycInt>,
}

impl ScaledVector {
    pub fn new(base: u32, conductor: u32, scale: u32, entries: Vec<CycInt>) -> Self {
        let entries = entries.into_iter().map(|e| e.embed(conductor)).collect();
        let mut v = ScaledVector { base, scale, conductor, entries };
        v.canonicalize();
        v
    }

    pub fn zero(base: u32, conductor: u32, dim: usize) -> Self {
        ScaledVector { base, scale: 0, conductor, entries: vec![CycInt::zero(conductor); dim] }
    }

    /// The computational basis vector with 1 at `index`.
    pub fn basis_vector(base: u32, conductor: u32, dim: usize, index: usize) -> Self {
        let mut v = Self::zero(base, conductor, dim);
        v.entries[index] = CycInt::one(conductor);
        v
    }

    fn canonicalize(&mut self) {
        if self.entries.iter().all(|e| e.is_zero()) {
            self.scale = 0;
            return;
        }
        let p = self.base as i64;
        while self.scale >= 2 && self.entries.iter().all(|e| e.divisible_by(p)) {
            for e in self.entries.iter_mut() {
                e.div_exact(p);
            }
            self.scale -= 2;
        }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn entries(&self) -> &[CycInt] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> &CycInt {
        &self.entries[i]
    }

    /// Hermitian inner product ⟨self|other⟩ = Σ conj(self_i)·other_i.
    pub fn inner(&self, other: &ScaledVector) -> ScaledScalar {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        assert_eq!(self.base, other.base, "base mismatch");
        let m = self.conductor.max(other.conductor);
        let mut acc = CycInt::zero(m);
        for (a, b) in self.entries.iter().zip(other.entries.iter()) {
            acc = acc.add(&a.conj().mul(b));
        }
        ScaledScalar::new(self.base, self.scale + other.scale, acc)
    }

    /// Outer product |self⟩⟨other| as a matrix.
    pub fn outer(&self, other: &ScaledVector) -> ScaledMatrix {
        assert_eq!(self.base, other.base, "base mismatch");
        let m = self.conductor.max(other.conductor);
        let rows = self.dim();
        let cols = other.dim();
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(self.entries[i].embed(m).mul(&other.entries[j].conj().embed(m)));
            }
        }
        ScaledMatrix::new(self.base, m, self.scale + other.scale, rows, cols, entries)
    }

    /// Multiplies every entry by a fixed ring element (e.g. a unit phase).
    pub fn scalar_mul(&self, phase: &CycInt) -> ScaledVector {
        let m = self.conductor.max(phase.conductor());
        let entries = self.entries.iter().map(|e| e.embed(m).mul(phase)).collect();
        ScaledVector::new(self.base, m, self.scale, entries)
    }

    /// Reindexes entries: `out[perm[i]] = in[i]`.
    pub fn permute(&self, perm: &[usize]) -> ScaledVector {
        assert_eq!(perm.len(), self.dim());
        let mut entries = vec![CycInt::zero(self.conductor); self.dim()];
        for (i, &target) in perm.iter().enumerate() {
            entries[target] = self.entries[i].clone();
        }
        ScaledVector::new(self.base, self.conductor, self.scale, entries)
    }

    /// Finds a unit phase φ with self = φ·other, if one exists.
    pub fn equals_up_to_phase(&self, other: &ScaledVector) -> Option<CycInt> {
        if self.base != other.base || self.scale != other.scale || self.dim() != other.dim() {
            return None;
        }
        let m = self.conductor.max(other.conductor);
        for phase in CycInt::unit_phases(m) {
            if self.entries.iter().zip(other.entries.iter()).all(|(a, b)| {
                a.embed(m) == b.embed(m).mul(&phase)
            }) {
                return Some(phase);
            }
        }
        None
    }
}

/// A dense matrix of cyclotomic integers with a common scale exponent,
/// stored row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ScaledMatrix {
    base: u32,
    scale: u32,
    conductor: u32,
    rows: usize,
    cols: usize,
    entries: Vec<CycInt>,
}

impl ScaledMatrix {
    pub fn new(
        base: u32,
        conductor: u32,
        scale: u32,
        rows: usize,
        cols: usize,
        entries: Vec<CycInt>,
    ) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        let entries = entries.into_iter().map(|e| e.embed(conductor)).collect();
        let mut m = ScaledMatrix { base, scale, conductor, rows, cols, entries };
        m.canonicalize();
        m
    }

    pub fn zero(base: u32, conductor: u32, rows: usize, cols: usize) -> Self {
        ScaledMatrix {
            base,
            scale: 0,
            conductor,
            rows,
            cols,
            entries: vec![CycInt::zero(conductor); rows * cols],
        }
    }

    pub fn identity(base: u32, conductor: u32, dim: usize) -> Self {
        let mut m = Self::zero(base, conductor, dim, dim);
        for i in 0..dim {
            m.entries[i * dim + i] = CycInt::one(conductor);
        }
        m
    }

    /// The identity divided by p^{scale/2}, e.g. the maximally mixed state.
    pub fn scaled_identity(base: u32, conductor: u32, dim: usize, scale: u32) -> Self {
        let mut m = Self::identity(base, conductor, dim);
        m.scale = scale;
        m.canonicalize();
        m
    }

    fn canonicalize(&mut self) {
        if self.entries.iter().all(|e| e.is_zero()) {
            self.scale = 0;
            return;
        }
        let p = self.base as i64;
        while self.scale >= 2 && self.entries.iter().all(|e| e.divisible_by(p)) {
            for e in self.entries.iter_mut() {
                e.div_exact(p);
            }
            self.scale -= 2;
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn base(&self) -> u32 {
        self.base
    }

    pub fn scale(&self) -> u32 {
        self.scale
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycInt {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[CycInt] {
        &self.entries
    }

    pub fn set_entry(&mut self, i: usize, j: usize, v: CycInt) {
        self.entries[i * self.cols + j] = v.embed(self.conductor);
    }

    /// Re-canonicalizes after in-place entry edits.
    pub fn finish(mut self) -> Self {
        self.canonicalize();
        self
    }

    pub fn mat_mul(&self, other: &ScaledMatrix) -> ScaledMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        assert_eq!(self.base, other.base, "base mismatch");
        let m = self.conductor.max(other.conductor);
        let mut entries = vec![CycInt::zero(m); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                let a = a.embed(m);
                for j in 0..other.cols {
                    let b = other.entry(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    entries[idx] = entries[idx].add(&a.mul(&b.embed(m)));
                }
            }
        }
        ScaledMatrix::new(self.base, m, self.scale + other.scale, self.rows, other.cols, entries)
    }

    /// Conjugate transpose. The scale is unchanged.
    pub fn adjoint(&self) -> ScaledMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).conj());
            }
        }
        ScaledMatrix::new(self.base, self.conductor, self.scale, self.cols, self.rows, entries)
    }

    /// Plain transpose without conjugation.
    pub fn transpose(&self) -> ScaledMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.entry(i, j).clone());
            }
        }
        ScaledMatrix::new(self.base, self.conductor, self.scale, self.cols, self.rows, entries)
    }

    pub fn mat_trace(&self) -> ScaledScalar {
        assert_eq!(self.rows, self.cols, "trace of non-square matrix");
        let mut acc = CycInt::zero(self.conductor);
        for i in 0..self.rows {
            acc = acc.add(self.entry(i, i));
        }
        ScaledScalar::new(self.base, self.scale, acc)
    }

    /// Kronecker product self ⊗ other.
    pub fn tensor(&self, other: &ScaledMatrix) -> ScaledMatrix {
        assert_eq!(self.base, other.base, "base mismatch");
        let m = self.conductor.max(other.conductor);
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut entries = vec![CycInt::zero(m); rows * cols];
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.entry(i1, j1);
                if a.is_zero() {
                    continue;
                }
                let a = a.embed(m);
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.entry(i2, j2);
                        if b.is_zero() {
                            continue;
                        }
                        let r = i1 * other.rows + i2;
                        let c = j1 * other.cols + j2;
                        entries[r * cols + c] = a.mul(&b.embed(m));
                    }
                }
            }
        }
        ScaledMatrix::new(self.base, m, self.scale + other.scale, rows, cols, entries)
    }

    pub fn add(&self, other: &ScaledMatrix) -> ScaledMatrix {
        assert_eq!(self.rows, other.rows);
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.base, other.base, "base mismatch");
        let target = self.scale.max(other.scale);
        let a = self.lift_scale(target);
        let b = other.lift_scale(target);
        let m = a.conductor.max(b.conductor);
        let entries = a
            .entries
            .iter()
            .zip(b.entries.iter())
            .map(|(x, y)| x.embed(m).add(&y.embed(m)))
            .collect();
        ScaledMatrix::new(self.base, m, target, self.rows, self.cols, entries)
    }

    /// Lifts to a larger scale exponent (multiplying entries by p accordingly).
    /// The difference must be even.
    pub fn lift_scale(&self, scale: u32) -> ScaledMatrix {
        assert!(scale >= self.scale && (scale - self.scale) % 2 == 0, "invalid scale lift");
        let p = self.base as i64;
        let factor = p.pow((scale - self.scale) / 2);
        let f = CycInt::integer(self.conductor, factor);
        let entries = self.entries.iter().map(|e| e.mul(&f)).collect();
        ScaledMatrix { base: self.base, scale, conductor: self.conductor, rows: self.rows, cols: self.cols, entries }
    }

    pub fn scalar_mul(&self, phase: &CycInt) -> ScaledMatrix {
        let m = self.conductor.max(phase.conductor());
        let entries = self.entries.iter().map(|e| e.embed(m).mul(phase)).collect();
        ScaledMatrix::new(self.base, m, self.scale, self.rows, self.cols, entries)
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &ScaledVector) -> ScaledVector {
        assert_eq!(self.cols, v.dim(), "dimension mismatch");
        assert_eq!(self.base, v.base(), "base mismatch");
        let m = self.conductor.max(v.conductor());
        let mut entries = vec![CycInt::zero(m); self.rows];
        for i in 0..self.rows {
            let mut acc = CycInt::zero(m);
            for j in 0..self.cols {
                let a = self.entry(i, j);
                if a.is_zero() || v.entry(j).is_zero() {
                    continue;
                }
                acc = acc.add(&a.embed(m).mul(&v.entry(j).embed(m)));
            }
            entries[i] = acc;
        }
        ScaledVector::new(self.base, m, self.scale + v.scale(), entries)
    }

    /// Column `j` as a vector.
    pub fn column(&self, j: usize) -> ScaledVector {
        let entries = (0..self.rows).map(|i| self.entry(i, j).clone()).collect();
        ScaledVector::new(self.base, self.conductor, self.scale, entries)
    }

    /// True iff the represented operator is exactly the identity.
    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        *self == Self::identity(self.base, self.conductor, self.rows)
    }

    /// True iff M·M† is exactly the identity.
    pub fn is_unitary(&self) -> bool {
        self.mat_mul(&self.adjoint()).is_identity()
    }

    /// Finds a unit phase φ with self = φ·other, if one exists.
    pub fn equals_up_to_phase(&self, other: &ScaledMatrix) -> Option<CycInt> {
        if self.base != other.base
            || self.scale != other.scale
            || self.rows != other.rows
            || self.cols != other.cols
        {
            return None;
        }
        let m = self.conductor.max(other.conductor);
        for phase in CycInt::unit_phases(m) {
            if self
                .entries
                .iter()
                .zip(other.entries.iter())
                .all(|(a, b)| a.embed(m) == b.embed(m).mul(&phase))
            {
                return Some(phase);
            }
        }
        None
    }

    /// Partial trace of a (dim_a·dim_b)-dimensional bipartite operator,
    /// laid out A-major. `trace_out_b` keeps subsystem A when true.
    pub fn partial_trace(&self, dim_a: usize, dim_b: usize, trace_out_b: bool) -> ScaledMatrix {
        assert_eq!(self.rows, dim_a * dim_b);
        assert_eq!(self.cols, dim_a * dim_b);
        let keep = if trace_out_b { dim_a } else { dim_b };
        let mut out = Self::zero(self.base, self.conductor, keep, keep);
        out.scale = self.scale;
        for i in 0..keep {
            for j in 0..keep {
                let mut acc = CycInt::zero(self.conductor);
                let summed = if trace_out_b { dim_b } else { dim_a };
                for k in 0..summed {
                    let (r, c) = if trace_out_b {
                        (i * dim_b + k, j * dim_b + k)
                    } else {
                        (k * dim_b + i, k * dim_b + j)
                    };
                    acc = acc.add(self.entry(r, c));
                }
                out.entries[i * keep + j] = acc;
            }
        }
        out.canonicalize();
        out
    }
}

/// Serializes a vector in the canonical per-entry text form.
pub fn vector_text(v: &ScaledVector) -> Vec<String> {
    use alloc::string::ToString;
    v.entries().iter().map(|e| e.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_relation_sums_to_zero() {
        let mut acc = CycInt::zero(3);
        for k in 0..3 {
            acc = acc.add(&CycInt::root_power(3, k));
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn gaussian_norm() {
        let z = CycInt::integer(4, 1).add(&CycInt::root_power(4, 1)); // 1 + i
        let w = z.conj(); // 1 - i
        assert_eq!(z.mul(&w).as_integer(), Some(2));
        assert_eq!(z.abs_squared().as_integer(), Some(2));
    }

    #[test]
    fn conjugate_of_omega() {
        let w = CycInt::root_power(3, 1);
        assert_eq!(w.conj(), CycInt::root_power(3, 2));
    }

    #[test]
    fn root_power_reduction() {
        assert_eq!(CycInt::root_power(2, 1).as_integer(), Some(-1));
        assert_eq!(CycInt::root_power(4, 1), CycInt::root_power(4, 5));
        assert_eq!(CycInt::root_power(3, 5), CycInt::root_power(3, 2));
        assert_eq!(CycInt::root_power(4, 2).as_integer(), Some(-1));
    }

    #[test]
    fn abs_squared_examples() {
        assert_eq!(CycInt::root_power(3, 1).abs_squared().as_integer(), Some(1));
        let z = CycInt::integer(3, 1).add(&CycInt::root_power(3, 1));
        assert_eq!(z.abs_squared().as_integer(), Some(1));
    }

    #[test]
    fn conductor_two_embeds_into_four() {
        let a = CycInt::root_power(2, 1); // -1
        let b = CycInt::root_power(4, 1); // i
        assert_eq!(a.mul(&b), CycInt::root_power(4, 3));
    }

    #[test]
    fn identity_is_multiplicative_unit() {
        let a = ScaledMatrix::new(
            2,
            4,
            1,
            2,
            2,
            vec![
                CycInt::integer(4, 1),
                CycInt::integer(4, 1),
                CycInt::integer(4, 1),
                CycInt::integer(4, -1),
            ],
        );
        let id = ScaledMatrix::identity(2, 4, 2);
        assert_eq!(id.mat_mul(&a), a);
        assert_eq!(a.mat_mul(&id), a);
    }

    #[test]
    fn trace_of_identity() {
        let id = ScaledMatrix::identity(2, 4, 2);
        let t = id.mat_trace();
        assert_eq!(t.scale, 0);
        assert_eq!(t.value.as_integer(), Some(2));
    }

    #[test]
    fn tensor_of_identities() {
        let id2 = ScaledMatrix::identity(2, 4, 2);
        assert_eq!(id2.tensor(&id2), ScaledMatrix::identity(2, 4, 4));
    }

    #[test]
    fn scale_reduction_restores_canonical_form() {
        let raw = ScaledMatrix::new(
            2,
            4,
            2,
            1,
            2,
            vec![CycInt::integer(4, 2), CycInt::integer(4, 2)],
        );
        let canonical =
            ScaledMatrix::new(2, 4, 0, 1, 2, vec![CycInt::integer(4, 1), CycInt::integer(4, 1)]);
        assert_eq!(raw, canonical);
    }

    #[test]
    fn equals_up_to_phase_finds_sign() {
        let phi = ScaledVector::new(
            2,
            4,
            1,
            vec![
                CycInt::integer(4, 1),
                CycInt::integer(4, 0),
                CycInt::integer(4, 0),
                CycInt::integer(4, 1),
            ],
        );
        let neg = phi.scalar_mul(&CycInt::integer(4, -1));
        assert_ne!(phi, neg);
        let phase = phi.equals_up_to_phase(&neg).unwrap();
        assert_eq!(phase.as_integer(), Some(-1));
    }

    #[test]
    fn zero_vector_has_zero_scale() {
        let v = ScaledVector::new(3, 3, 4, vec![CycInt::zero(3); 3]);
        assert_eq!(v.scale(), 0);
    }

    #[test]
    fn identity_differs_from_fourier() {
        let id = ScaledMatrix::identity(2, 4, 2);
        let fourier = ScaledMatrix::new(
            2,
            4,
            1,
            2,
            2,
            vec![
                CycInt::integer(4, 1),
                CycInt::integer(4, 1),
                CycInt::integer(4, 1),
                CycInt::integer(4, -1),
            ],
        );
        assert_ne!(id, fourier);
        assert!(id.equals_up_to_phase(&fourier).is_none());
    }

    #[test]
    fn partial_trace_of_identity() {
        let id = ScaledMatrix::identity(2, 4, 4);
        let t = id.partial_trace(2, 2, true);
        // Tr_B(I_4) = 2·I_2
        let mut expect = ScaledMatrix::identity(2, 4, 2);
        expect = expect.scalar_mul(&CycInt::integer(4, 2));
        assert_eq!(t, expect);
    }
}
