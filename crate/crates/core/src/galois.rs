//! Exact arithmetic in GF(p^n).
//!
//! A [`Field`] owns a canonical monic irreducible modulus, a primitive
//! element, and the enumeration of all p^n elements. Elements are stored as
//! coefficient vectors in the power basis of the modulus root; every other
//! basis (polynomial, normal, dual, selfdual) is a coordinate view.
//!
//! The canonical modulus is the lexicographically smallest monic irreducible
//! polynomial (constant term compared first) whose root generates the
//! multiplicative group. Requiring primitivity pins σ = x, so powers of the
//! modulus root enumerate the nonzero elements.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::cyclotomic::CycInt;

/// Default upper bound on the field order p^n.
pub const DEFAULT_MAX_ORDER: u64 = 4096;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldError {
    /// The characteristic must be a prime number.
    NotPrime(u64),
    /// The extension degree must be at least 1.
    InvalidDegree(usize),
    /// p^n exceeds the supported bound.
    TooLarge { order: u64, max: u64 },
    /// Zero has no multiplicative inverse.
    ZeroInverse,
    /// The provided elements are not linearly independent over Z_p.
    NotABasis,
    /// Elements from different fields were combined.
    FieldMismatch,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{} is not prime", p),
            FieldError::InvalidDegree(n) => write!(f, "invalid extension degree {}", n),
            FieldError::TooLarge { order, max } => {
                write!(f, "field order {} exceeds the supported bound {}", order, max)
            }
            FieldError::ZeroInverse => write!(f, "zero has no multiplicative inverse"),
            FieldError::NotABasis => write!(f, "elements are not linearly independent"),
            FieldError::FieldMismatch => write!(f, "elements belong to different fields"),
        }
    }
}

impl core::error::Error for FieldError {}

/// An element of GF(p^n): n residues mod p, coordinates in the power basis.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement {
    coeffs: Vec<u32>,
}

impl FieldElement {
    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The role a coordinate basis plays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BasisKind {
    Polynomial,
    Normal,
    Dual,
    Selfdual,
    /// Selfdual up to one diagonal Gram entry; `exception` is 1-based.
    AlmostSelfdual { exception: usize },
}

/// An ordered basis of GF(p^n) over Z_p.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldBasis {
    elements: Vec<FieldElement>,
    kind: BasisKind,
}

impl FieldBasis {
    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn kind(&self) -> &BasisKind {
        &self.kind
    }

    pub fn is_selfdual(&self) -> bool {
        matches!(self.kind, BasisKind::Selfdual)
    }
}

/// GF(p^n) with its canonical modulus, primitive element and enumeration.
#[derive(Clone, Debug)]
pub struct Field {
    p: u32,
    n: usize,
    modulus: Vec<u32>,
    /// x^k mod modulus for k = n .. 2n-2, used during reduction.
    reductions: Vec<Vec<u32>>,
    /// Enumeration order: 0, σ^0, σ^1, …, σ^{q-2}.
    elements: Vec<FieldElement>,
    /// Mixed-radix rank of coefficients -> enumeration index.
    rank_to_index: Vec<usize>,
    primitive: FieldElement,
    inv2: u32,
}

fn is_prime_u64(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= m {
        if m % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

// dense polynomial helpers over Z_p, coefficients constant-first

fn poly_trim(v: &mut Vec<u32>) {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
}

fn poly_mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &ca) in a.iter().enumerate() {
        if ca == 0 {
            continue;
        }
        for (j, &cb) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u64 + ca as u64 * cb as u64) % p as u64) as u32;
        }
    }
    out
}

/// Remainder of `a` modulo monic `m`.
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r: Vec<u32> = a.to_vec();
    poly_trim(&mut r);
    let dm = m.len() - 1;
    while r.len() - 1 >= dm && !(r.len() == 1 && r[0] == 0) {
        let lead = *r.last().unwrap();
        if lead != 0 {
            let shift = r.len() - 1 - dm;
            for (j, &mc) in m.iter().enumerate() {
                let sub = (lead as u64 * mc as u64) % p as u64;
                let idx = shift + j;
                r[idx] = ((r[idx] as u64 + p as u64 - sub) % p as u64) as u32;
            }
        }
        r.pop();
        poly_trim(&mut r);
        if r.len() - 1 < dm {
            break;
        }
    }
    r
}

fn poly_is_zero(a: &[u32]) -> bool {
    a.iter().all(|&c| c == 0)
}

/// True if the monic polynomial (constant-first, including leading 1) has no
/// monic divisor of degree 1..=deg/2.
fn poly_irreducible(p: u32, poly: &[u32]) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        // all monic divisor candidates of degree d
        let count = (p as u64).pow(d as u32);
        for k in 0..count {
            let mut div = Vec::with_capacity(d + 1);
            let mut t = k;
            for _ in 0..d {
                div.push((t % p as u64) as u32);
                t /= p as u64;
            }
            div.push(1);
            if poly_is_zero(&poly_rem(p, poly, &div)) {
                return false;
            }
        }
    }
    true
}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut k = 2u64;
    while k * k <= m {
        if m % k == 0 {
            out.push(k);
            while m % k == 0 {
                m /= k;
            }
        }
        k += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

/// The lexicographically smallest monic irreducible polynomial of degree `n`
/// over Z_p whose root generates the multiplicative group (constant term
/// compared first). For n = 1 the degenerate polynomial x is returned.
pub fn find_irreducible(p: u64, n: usize) -> Result<Vec<u32>, FieldError> {
    if !is_prime_u64(p) {
        return Err(FieldError::NotPrime(p));
    }
    if n == 0 {
        return Err(FieldError::InvalidDegree(n));
    }
    let p32 = p as u32;
    if n == 1 {
        return Ok(vec![0, 1]);
    }
    let q = p.pow(n as u32);
    let factors = prime_factors(q - 1);
    let count = p.pow(n as u32);
    for k in 0..count {
        // decode with the constant term as the most significant digit
        let mut coeffs = vec![0u32; n + 1];
        coeffs[n] = 1;
        let mut t = k;
        for i in (0..n).rev() {
            coeffs[i] = (t % p) as u32;
            t /= p;
        }
        if coeffs[0] == 0 {
            continue; // divisible by x
        }
        if !poly_irreducible(p32, &coeffs) {
            continue;
        }
        if root_is_primitive(p32, &coeffs, q, &factors) {
            return Ok(coeffs);
        }
    }
    unreachable!("a primitive polynomial exists for every prime power");
}

/// Order check for the class of x in Z_p[x]/(modulus).
fn root_is_primitive(p: u32, modulus: &[u32], q: u64, factors: &[u64]) -> bool {
    let x = vec![0u32, 1];
    for &r in factors {
        let e = (q - 1) / r;
        let pw = poly_pow_mod(p, &x, e, modulus);
        if pw.len() == 1 && pw[0] == 1 {
            return false;
        }
    }
    true
}

fn poly_pow_mod(p: u32, base: &[u32], mut e: u64, m: &[u32]) -> Vec<u32> {
    let mut result = vec![1u32];
    let mut b = poly_rem(p, base, m);
    while e > 0 {
        if e & 1 == 1 {
            result = poly_rem(p, &poly_mul(p, &result, &b), m);
        }
        b = poly_rem(p, &poly_mul(p, &b, &b), m);
        e >>= 1;
    }
    result
}

impl Field {
    /// Constructs GF(p^n) with the canonical modulus, subject to the default
    /// order bound.
    pub fn new(p: u64, n: usize) -> Result<Field, FieldError> {
        Self::with_max_order(p, n, DEFAULT_MAX_ORDER)
    }

    /// Constructs GF(p^n) with an explicit order bound.
    pub fn with_max_order(p: u64, n: usize, max_order: u64) -> Result<Field, FieldError> {
        if !is_prime_u64(p) {
            return Err(FieldError::NotPrime(p));
        }
        if n == 0 {
            return Err(FieldError::InvalidDegree(n));
        }
        let order = p.checked_pow(n as u32).unwrap_or(u64::MAX);
        if order > max_order {
            return Err(FieldError::TooLarge { order, max: max_order });
        }
        let modulus = find_irreducible(p, n)?;
        let p = p as u32;

        let mut reductions = Vec::new();
        if n >= 2 {
            for k in n..=2 * n - 2 {
                let mut xk = vec![0u32; k + 1];
                xk[k] = 1;
                let mut r = poly_rem(p, &xk, &modulus);
                r.resize(n, 0);
                reductions.push(r);
            }
        }

        let mut field = Field {
            p,
            n,
            modulus,
            reductions,
            elements: Vec::new(),
            rank_to_index: Vec::new(),
            primitive: FieldElement { coeffs: vec![0; n] },
            inv2: if p == 2 { 0 } else { (p + 1) / 2 },
        };

        field.primitive = field.search_primitive();
        field.build_enumeration();
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        (self.p as u64).pow(self.n as u32) as usize
    }

    /// Modulus coefficients, constant term first, including the leading 1.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Cyclotomic conductor used for matrix realizations: 4 for p = 2
    /// (needed for the qubit rotation entries), otherwise p.
    pub fn conductor(&self) -> u32 {
        if self.p == 2 {
            4
        } else {
            self.p
        }
    }

    /// 2^{-1} mod p, i.e. (p+1)/2. Only meaningful for odd p.
    pub fn inv2(&self) -> u32 {
        debug_assert!(self.p != 2);
        self.inv2
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { coeffs: vec![0; self.n] }
    }

    pub fn one(&self) -> FieldElement {
        let mut c = vec![0; self.n];
        c[0] = 1;
        FieldElement { coeffs: c }
    }

    /// The canonical primitive element σ (the class of x for n ≥ 2).
    pub fn primitive(&self) -> FieldElement {
        self.primitive.clone()
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> FieldElement {
        assert_eq!(coeffs.len(), self.n, "coefficient length mismatch");
        FieldElement { coeffs: coeffs.iter().map(|&c| c % self.p).collect() }
    }

    /// Embeds a prime-subfield residue.
    pub fn from_residue(&self, r: u32) -> FieldElement {
        let mut c = vec![0; self.n];
        c[0] = r % self.p;
        FieldElement { coeffs: c }
    }

    fn rank(&self, a: &FieldElement) -> usize {
        let mut r = 0usize;
        for &c in a.coeffs.iter().rev() {
            r = r * self.p as usize + c as usize;
        }
        r
    }

    fn build_enumeration(&mut self) {
        let q = self.order();
        let mut elements = Vec::with_capacity(q);
        elements.push(self.zero());
        let mut cur = self.one();
        for _ in 0..q - 1 {
            elements.push(cur.clone());
            cur = self.mul(&cur, &self.primitive);
        }
        debug_assert_eq!(cur, self.one(), "primitive element order defect");
        let mut rank_to_index = vec![usize::MAX; q];
        for (i, e) in elements.iter().enumerate() {
            rank_to_index[self.rank(e)] = i;
        }
        debug_assert!(rank_to_index.iter().all(|&i| i != usize::MAX));
        self.elements = elements;
        self.rank_to_index = rank_to_index;
    }

    /// All elements in enumeration order: 0, σ^0, σ^1, …
    pub fn elements(&self) -> &[FieldElement] {
        &self.elements
    }

    pub fn element(&self, index: usize) -> &FieldElement {
        &self.elements[index]
    }

    /// Enumeration index of an element.
    pub fn index_of(&self, a: &FieldElement) -> usize {
        self.rank_to_index[self.rank(a)]
    }

    /// σ^k (k ≥ 0).
    pub fn primitive_power(&self, k: u64) -> FieldElement {
        self.pow(&self.primitive, k)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let coeffs = a
            .coeffs
            .iter()
            .zip(b.coeffs.iter())
            .map(|(&x, &y)| (x + y) % self.p)
            .collect();
        FieldElement { coeffs }
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        let coeffs = a.coeffs.iter().map(|&x| (self.p - x) % self.p).collect();
        FieldElement { coeffs }
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        if self.n == 1 {
            let v = (a.coeffs[0] as u64 * b.coeffs[0] as u64) % self.p as u64;
            return FieldElement { coeffs: vec![v as u32] };
        }
        let prod = poly_mul(self.p, &a.coeffs, &b.coeffs);
        let mut out = vec![0u64; self.n];
        for (k, &c) in prod.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if k < self.n {
                out[k] += c as u64;
            } else {
                let red = &self.reductions[k - self.n];
                for (i, &rc) in red.iter().enumerate() {
                    out[i] += c as u64 * rc as u64;
                }
            }
        }
        FieldElement { coeffs: out.iter().map(|&v| (v % self.p as u64) as u32).collect() }
    }

    /// Scalar multiple by a prime-subfield residue.
    pub fn scalar_mul(&self, r: u32, a: &FieldElement) -> FieldElement {
        let coeffs =
            a.coeffs.iter().map(|&x| ((x as u64 * r as u64) % self.p as u64) as u32).collect();
        FieldElement { coeffs }
    }

    pub fn pow(&self, a: &FieldElement, mut e: u64) -> FieldElement {
        let mut result = self.one();
        let mut b = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(&result, &b);
            }
            b = self.mul(&b, &b);
            e >>= 1;
        }
        result
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, FieldError> {
        if a.is_zero() {
            return Err(FieldError::ZeroInverse);
        }
        Ok(self.pow(a, self.order() as u64 - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: &FieldElement) -> u64 {
        assert!(!a.is_zero());
        let mut k = 1u64;
        let mut cur = a.clone();
        while cur != self.one() {
            cur = self.mul(&cur, a);
            k += 1;
        }
        k
    }

    fn search_primitive(&self) -> FieldElement {
        let q = self.order() as u64;
        let factors = prime_factors(q - 1);
        // lexicographic coefficient order, constant term most significant
        let mut best: Option<FieldElement> = None;
        let mut candidates: Vec<FieldElement> = Vec::new();
        let count = q as usize;
        for k in 0..count {
            let mut coeffs = vec![0u32; self.n];
            let mut t = k;
            for i in (0..self.n).rev() {
                coeffs[i] = (t % self.p as usize) as u32;
                t /= self.p as usize;
            }
            candidates.push(FieldElement { coeffs });
        }
        for cand in candidates {
            if cand.is_zero() {
                continue;
            }
            let mut ok = true;
            for &r in &factors {
                if self.pow(&cand, (q - 1) / r) == self.one() {
                    ok = false;
                    break;
                }
            }
            if ok {
                best = Some(cand);
                break;
            }
        }
        best.expect("every finite field has a primitive element")
    }

    /// Deterministic re-derivation of the primitive element (the stored one
    /// is found the same way at construction).
    pub fn find_primitive(&self) -> FieldElement {
        self.search_primitive()
    }

    /// Field trace tr(λ) = λ + λ^p + … + λ^{p^{n-1}}, as a residue mod p.
    pub fn trace(&self, a: &FieldElement) -> u32 {
        let mut acc = a.clone();
        let mut frob = a.clone();
        for _ in 1..self.n {
            frob = self.pow(&frob, self.p as u64);
            acc = self.add(&acc, &frob);
        }
        debug_assert!(acc.coeffs[1..].iter().all(|&c| c == 0), "trace not in prime subfield");
        acc.coeffs[0]
    }

    /// Additive character χ(λ) = ω_p^{tr(λ)} as an exact cyclotomic integer
    /// of conductor p.
    pub fn additive_character(&self, a: &FieldElement) -> CycInt {
        CycInt::root_power(self.p, self.trace(a) as i64)
    }

    /// χ(λ) lifted into the given conductor (tr scaled by M/p, so p = 2
    /// characters land on ±1 inside conductor 4).
    pub fn character_in(&self, a: &FieldElement, conductor: u32) -> CycInt {
        debug_assert!(conductor % self.p == 0);
        let lift = (conductor / self.p) as i64;
        CycInt::root_power(conductor, lift * self.trace(a) as i64)
    }

    /// ω_M^{lift·r} for a residue exponent r mod p in the given conductor.
    pub fn residue_phase(&self, r: i64, conductor: u32) -> CycInt {
        let lift = (conductor / self.p) as i64;
        CycInt::root_power(conductor, lift * r)
    }

    // ---- bases -------------------------------------------------------

    /// Validates and wraps an ordered basis.
    pub fn basis(&self, elements: Vec<FieldElement>, kind: BasisKind) -> Result<FieldBasis, FieldError> {
        if elements.len() != self.n {
            return Err(FieldError::NotABasis);
        }
        if !self.independent(&elements) {
            return Err(FieldError::NotABasis);
        }
        Ok(FieldBasis { elements, kind })
    }

    /// {1, σ, σ², …, σ^{n-1}}.
    pub fn polynomial_basis(&self) -> FieldBasis {
        let mut elements = Vec::with_capacity(self.n);
        let mut cur = self.one();
        for _ in 0..self.n {
            elements.push(cur.clone());
            cur = self.mul(&cur, &self.primitive);
        }
        FieldBasis { elements, kind: BasisKind::Polynomial }
    }

    /// The Frobenius orbit {β, β^p, …} of the lex-smallest β that yields a
    /// basis. For many fields β = σ works; when the orbit of σ is dependent
    /// the search continues deterministically.
    pub fn normal_basis(&self) -> FieldBasis {
        for cand in self.lex_ordered_elements() {
            if cand.is_zero() {
                continue;
            }
            let mut elements = Vec::with_capacity(self.n);
            let mut cur = cand.clone();
            for _ in 0..self.n {
                elements.push(cur.clone());
                cur = self.pow(&cur, self.p as u64);
            }
            if self.independent(&elements) {
                return FieldBasis { elements, kind: BasisKind::Normal };
            }
        }
        unreachable!("every finite field has a normal basis");
    }

    fn lex_ordered_elements(&self) -> Vec<FieldElement> {
        let mut v = self.elements.clone();
        v.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
        v
    }

    fn independent(&self, elements: &[FieldElement]) -> bool {
        if elements.len() != self.n {
            return false;
        }
        let mut mat: Vec<Vec<u32>> = elements.iter().map(|e| e.coeffs.clone()).collect();
        let rank = gauss_rank(self.p, &mut mat);
        rank == self.n
    }

    /// Gram matrix G_ij = tr(θ_i θ_j).
    pub fn gram(&self, basis: &FieldBasis) -> Vec<Vec<u32>> {
        let n = self.n;
        let mut g = vec![vec![0u32; n]; n];
        for i in 0..n {
            for j in 0..n {
                g[i][j] = self.trace(&self.mul(&basis.elements[i], &basis.elements[j]));
            }
        }
        g
    }

    /// The unique dual basis: tr(θ_k θ'_l) = δ_{kl}.
    pub fn dual_basis(&self, basis: &FieldBasis) -> FieldBasis {
        let g = self.gram(basis);
        let ginv = invert_matrix_mod_p(self.p, &g).expect("Gram matrix of a basis is invertible");
        let n = self.n;
        let mut elements = Vec::with_capacity(n);
        for l in 0..n {
            let mut acc = self.zero();
            for k in 0..n {
                acc = self.add(&acc, &self.scalar_mul(ginv[k][l], &basis.elements[k]));
            }
            elements.push(acc);
        }
        FieldBasis { elements, kind: BasisKind::Dual }
    }

    /// Coordinates ℓ_j with λ = Σ ℓ_j θ_j.
    pub fn expand(&self, a: &FieldElement, basis: &FieldBasis) -> Vec<u32> {
        let n = self.n;
        // columns are the power-basis coordinates of the θ_j
        let mut mat = vec![vec![0u32; n]; n];
        for (j, e) in basis.elements.iter().enumerate() {
            for i in 0..n {
                mat[i][j] = e.coeffs[i];
            }
        }
        solve_mod_p(self.p, &mat, &a.coeffs).expect("basis matrix is invertible")
    }

    /// Inverse of [`Field::expand`].
    pub fn compose(&self, coords: &[u32], basis: &FieldBasis) -> FieldElement {
        assert_eq!(coords.len(), self.n);
        let mut acc = self.zero();
        for (l, e) in coords.iter().zip(basis.elements.iter()) {
            acc = self.add(&acc, &self.scalar_mul(*l, e));
        }
        acc
    }

    /// Searches for a selfdual basis (tr(θ_iθ_j) = δ_ij); when none exists,
    /// falls back to an almost-selfdual basis whose single Gram exception
    /// sits at the last index. Candidate tuples are enumerated in ascending
    /// lexicographic order of their element coefficient vectors; the first
    /// hit wins.
    pub fn find_selfdual(&self) -> FieldBasis {
        let ordered = self.lex_ordered_elements();
        let diag_one: Vec<FieldElement> = ordered
            .iter()
            .filter(|e| !e.is_zero() && self.trace(&self.mul(e, e)) == 1)
            .cloned()
            .collect();

        let mut chosen: Vec<FieldElement> = Vec::with_capacity(self.n);
        if self.selfdual_dfs(&diag_one, &mut chosen, self.n) {
            return FieldBasis { elements: chosen, kind: BasisKind::Selfdual };
        }

        // almost-selfdual: first n-1 slots have diagonal trace 1, the last
        // slot carries the exception (nonzero trace != 1)
        let exceptional: Vec<FieldElement> = ordered
            .iter()
            .filter(|e| {
                if e.is_zero() {
                    return false;
                }
                let t = self.trace(&self.mul(e, e));
                t != 0 && t != 1
            })
            .cloned()
            .collect();
        let mut chosen: Vec<FieldElement> = Vec::with_capacity(self.n);
        if self.almost_dfs(&diag_one, &exceptional, &mut chosen) {
            return FieldBasis {
                elements: chosen,
                kind: BasisKind::AlmostSelfdual { exception: self.n },
            };
        }
        unreachable!("an almost-selfdual basis exists for every prime power");
    }

    fn compatible(&self, chosen: &[FieldElement], cand: &FieldElement) -> bool {
        for c in chosen {
            if self.trace(&self.mul(c, cand)) != 0 {
                return false;
            }
        }
        let mut trial: Vec<FieldElement> = chosen.to_vec();
        trial.push(cand.clone());
        let mut mat: Vec<Vec<u32>> = trial.iter().map(|e| e.coeffs.clone()).collect();
        gauss_rank(self.p, &mut mat) == trial.len()
    }

    fn selfdual_dfs(
        &self,
        candidates: &[FieldElement],
        chosen: &mut Vec<FieldElement>,
        want: usize,
    ) -> bool {
        if chosen.len() == want {
            return true;
        }
        for cand in candidates {
            if !self.compatible(chosen, cand) {
                continue;
            }
            chosen.push(cand.clone());
            if self.selfdual_dfs(candidates, chosen, want) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    fn almost_dfs(
        &self,
        diag_one: &[FieldElement],
        exceptional: &[FieldElement],
        chosen: &mut Vec<FieldElement>,
    ) -> bool {
        if chosen.len() == self.n - 1 {
            for cand in exceptional {
                if self.compatible(chosen, cand) {
                    chosen.push(cand.clone());
                    return true;
                }
            }
            return false;
        }
        for cand in diag_one {
            if !self.compatible(chosen, cand) {
                continue;
            }
            chosen.push(cand.clone());
            if self.almost_dfs(diag_one, exceptional, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

impl fmt::Display for Field {
    /// Canonical text form `GF(p^n; modulus=[...]; primitive=[...])`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}; modulus=[", self.p, self.n)?;
        for (i, c) in self.modulus.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", c)?;
        }
        write!(f, "]; primitive={})", self.primitive)
    }
}

// ---- small dense linear algebra mod p -------------------------------

fn gauss_rank(p: u32, rows: &mut [Vec<u32>]) -> usize {
    let nrows = rows.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = rows[0].len();
    let mut rank = 0;
    for col in 0..ncols {
        let pivot = (rank..nrows).find(|&r| rows[r][col] != 0);
        let Some(pivot) = pivot else { continue };
        rows.swap(rank, pivot);
        let inv = mod_inv(p, rows[rank][col]);
        for c in col..ncols {
            rows[rank][c] = ((rows[rank][c] as u64 * inv as u64) % p as u64) as u32;
        }
        for r in 0..nrows {
            if r != rank && rows[r][col] != 0 {
                let f = rows[r][col];
                for c in col..ncols {
                    let sub = (f as u64 * rows[rank][c] as u64) % p as u64;
                    rows[r][c] = ((rows[r][c] as u64 + p as u64 - sub) % p as u64) as u32;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn mod_inv(p: u32, a: u32) -> u32 {
    // Fermat; p prime, a nonzero
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut e = p as u64 - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    result as u32
}

fn invert_matrix_mod_p(p: u32, m: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = m.len();
    let mut aug: Vec<Vec<u32>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| u32::from(i == j)));
            r
        })
        .collect();
    let rank = gauss_rank(p, &mut aug);
    if rank < n {
        return None;
    }
    Some(aug.into_iter().map(|row| row[n..].to_vec()).collect())
}

fn solve_mod_p(p: u32, m: &[Vec<u32>], rhs: &[u32]) -> Option<Vec<u32>> {
    let inv = invert_matrix_mod_p(p, m)?;
    let n = m.len();
    let mut out = vec![0u32; n];
    for i in 0..n {
        let mut acc = 0u64;
        for j in 0..n {
            acc += inv[i][j] as u64 * rhs[j] as u64;
        }
        out[i] = (acc % p as u64) as u32;
    }
    Some(out)
}
