//! Named invariant suites over every module, reported one line per check.
//!
//! Field-level checks (pure GF(p^n) arithmetic) run up to order 81;
//! matrix-level checks (dense cyclotomic linear algebra) run up to order 9.
//! All sampling is driven by a fixed-seed generator so repeated runs are
//! byte-identical.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bell::{self, Census, CensusMode, SymmetryClass};
use crate::cyclotomic::{CycInt, ScaledMatrix};
use crate::galois::{BasisKind, Field};
use crate::mub::{self, c_coefficient};
use crate::pauli::{coordinate_permutation_matrix, PauliMonomial};

/// Largest order for field-level exhaustive checks.
pub const FIELD_LEVEL_MAX_ORDER: u64 = 81;
/// Largest order for matrix-level checks.
pub const MATRIX_LEVEL_MAX_ORDER: u64 = 9;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerifyLevel {
    /// Matrix- and field-level checks on orders up to 9.
    Fast,
    /// Field-level checks up to order 81; matrix-level stays at 9.
    Exhaustive,
}

/// Outcome of one named invariant.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub scope: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn pass(name: &str, scope: &str) -> Self {
        Check { name: String::from(name), scope: String::from(scope), passed: true, detail: String::new() }
    }

    fn fail(name: &str, scope: &str, detail: String) -> Self {
        Check { name: String::from(name), scope: String::from(scope), passed: false, detail }
    }

    fn from_result(name: &str, scope: &str, r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Self::pass(name, scope),
            Err(detail) => Self::fail(name, scope, detail),
        }
    }
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    fn below(&mut self, bound: usize) -> usize {
        (self.next() % bound as u64) as usize
    }
}

/// (p, n) pairs with p^n ≤ bound, ascending in order.
pub fn field_shapes_up_to(bound: u64) -> Vec<(u64, usize)> {
    let mut shapes = Vec::new();
    for p in 2u64..=bound {
        if !primality(p) {
            continue;
        }
        let mut order = p;
        let mut n = 1usize;
        while order <= bound {
            shapes.push((p, n));
            order = match order.checked_mul(p) {
                Some(v) => v,
                None => break,
            };
            n += 1;
        }
    }
    shapes.sort_by_key(|&(p, n)| p.pow(n as u32));
    shapes
}

fn primality(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= m {
        if m % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

// ---- cyclotomic ring checks ------------------------------------------

fn random_cyc(rng: &mut SplitMix64, conductor: u32) -> CycInt {
    let mut z = CycInt::zero(conductor);
    for k in 0..conductor as i64 {
        let c = rng.below(7) as i64 - 3;
        z = z.add(&CycInt::root_power(conductor, k).mul(&CycInt::integer(conductor, c)));
    }
    z
}

/// Ring axioms, conjugation, and phase invariance for one conductor.
pub fn cyclotomic_suite(conductor: u32, samples: usize) -> Vec<Check> {
    let scope = format!("Z[w_{}]", conductor);
    let mut rng = SplitMix64(0x5eed_0000 + conductor as u64);
    let mut checks = Vec::new();

    let mut axioms = Ok(());
    for _ in 0..samples {
        let a = random_cyc(&mut rng, conductor);
        let b = random_cyc(&mut rng, conductor);
        let c = random_cyc(&mut rng, conductor);
        let assoc = a.mul(&b).mul(&c) == a.mul(&b.mul(&c));
        let distrib = a.mul(&b.add(&c)) == a.mul(&b).add(&a.mul(&c));
        let conj_mul = a.mul(&b).conj() == a.conj().mul(&b.conj());
        let conj_invol = a.conj().conj() == a;
        if !(assoc && distrib && conj_mul && conj_invol) {
            axioms = Err(format!("axiom failure on {} {} {}", a, b, c));
            break;
        }
    }
    checks.push(Check::from_result("cyclotomic/ring-axioms", &scope, axioms));

    let mut phase_inv = Ok(());
    'outer: for _ in 0..samples {
        let z = random_cyc(&mut rng, conductor);
        let norm = z.abs_squared();
        for k in 0..conductor as i64 {
            let rotated = z.mul(&CycInt::root_power(conductor, k));
            if rotated.abs_squared() != norm {
                phase_inv = Err(format!("|ω^{}·z|² ≠ |z|² for z = {}", k, z));
                break 'outer;
            }
        }
    }
    checks.push(Check::from_result("cyclotomic/abs-squared-phase-invariant", &scope, phase_inv));

    let mut canonical = Ok(());
    for k in 0..(2 * conductor as i64) {
        let direct = CycInt::root_power(conductor, k);
        let wrapped = CycInt::root_power(conductor, k % conductor as i64);
        if direct != wrapped {
            canonical = Err(format!("exponent wrap failed at {}", k));
            break;
        }
    }
    checks.push(Check::from_result("cyclotomic/canonical-form", &scope, canonical));

    let base = if conductor == 4 { 2 } else { conductor };
    let raw = ScaledMatrix::new(
        base,
        conductor,
        2,
        1,
        1,
        alloc::vec![CycInt::integer(conductor, base as i64)],
    );
    let reduced = ScaledMatrix::identity(base, conductor, 1);
    checks.push(Check::from_result(
        "cyclotomic/scale-reduction",
        &scope,
        if raw == reduced { Ok(()) } else { Err(String::from("p/(√p)² did not reduce to 1")) },
    ));

    checks
}

// ---- field-level checks ----------------------------------------------

pub fn galois_suite(field: &Field) -> Vec<Check> {
    let scope = format!("GF({}^{})", field.characteristic(), field.degree());
    let p = field.characteristic();
    let mut checks = Vec::new();

    let mut additivity = Ok(());
    'add: for a in field.elements() {
        for b in field.elements() {
            if field.trace(&field.add(a, b)) != (field.trace(a) + field.trace(b)) % p {
                additivity = Err(format!("tr not additive at {} {}", a, b));
                break 'add;
            }
        }
    }
    checks.push(Check::from_result("galois/trace-additivity", &scope, additivity));

    let mut product = Ok(());
    'prod: for a in field.elements() {
        for b in field.elements() {
            let lhs = field.additive_character(&field.add(a, b));
            let rhs = field.additive_character(a).mul(&field.additive_character(b));
            if lhs != rhs {
                product = Err(format!("χ not multiplicative over + at {} {}", a, b));
                break 'prod;
            }
        }
    }
    checks.push(Check::from_result("galois/character-product", &scope, product));

    let mut char_sum = Ok(());
    for a in field.elements() {
        let mut acc = CycInt::zero(p);
        for b in field.elements() {
            acc = acc.add(&field.additive_character(&field.mul(a, b)));
        }
        let expect = if a.is_zero() { field.order() as i64 } else { 0 };
        if acc.as_integer() != Some(expect) {
            char_sum = Err(format!("character sum defect at {}", a));
            break;
        }
    }
    checks.push(Check::from_result("galois/character-sum", &scope, char_sum));

    let cyclic = {
        let q = field.order();
        let mut seen = alloc::collections::BTreeSet::new();
        let mut cur = field.one();
        let mut ok = true;
        for _ in 0..q - 1 {
            ok &= seen.insert(cur.clone());
            cur = field.mul(&cur, &field.primitive());
        }
        ok &= cur == field.one();
        if ok {
            Ok(())
        } else {
            Err(String::from("primitive powers do not enumerate the group"))
        }
    };
    checks.push(Check::from_result("galois/multiplicative-cyclicity", &scope, cyclic));

    let mut dual_rel = Ok(());
    for basis in [field.polynomial_basis(), field.normal_basis()] {
        let dual = field.dual_basis(&basis);
        for (k, bk) in basis.elements().iter().enumerate() {
            for (l, dl) in dual.elements().iter().enumerate() {
                if field.trace(&field.mul(bk, dl)) != u32::from(k == l) {
                    dual_rel = Err(format!("dual relation failed at ({}, {})", k, l));
                }
            }
        }
        let back = field.dual_basis(&dual);
        if back.elements() != basis.elements() {
            dual_rel = Err(String::from("dual is not an involution"));
        }
    }
    checks.push(Check::from_result("galois/dual-defining-relation", &scope, dual_rel));

    let selfdual = {
        let b = field.find_selfdual();
        let g = field.gram(&b);
        let n = field.degree();
        let mut ok = true;
        for i in 0..n {
            for j in 0..n {
                let want_one = i == j;
                match b.kind() {
                    BasisKind::Selfdual => ok &= g[i][j] == u32::from(want_one),
                    BasisKind::AlmostSelfdual { exception } => {
                        if i != j {
                            ok &= g[i][j] == 0;
                        } else if i + 1 == *exception {
                            ok &= g[i][j] != 0 && g[i][j] != 1;
                        } else {
                            ok &= g[i][j] == 1;
                        }
                    }
                    _ => ok = false,
                }
            }
        }
        if ok {
            Ok(())
        } else {
            Err(String::from("selfdual search returned a malformed Gram"))
        }
    };
    checks.push(Check::from_result("galois/selfdual-gram", &scope, selfdual));

    let mut roundtrip = Ok(());
    for basis in [field.polynomial_basis(), field.find_selfdual()] {
        for a in field.elements() {
            let coords = field.expand(a, &basis);
            if &field.compose(&coords, &basis) != a {
                roundtrip = Err(format!("expand/compose mismatch at {}", a));
            }
            if basis.is_selfdual() {
                for (j, theta) in basis.elements().iter().enumerate() {
                    if coords[j] != field.trace(&field.mul(a, theta)) {
                        roundtrip = Err(format!("selfdual coordinate formula failed at {}", a));
                    }
                }
            }
        }
    }
    checks.push(Check::from_result("galois/expand-roundtrip", &scope, roundtrip));

    checks
}

// ---- matrix-level checks ----------------------------------------------

pub fn pauli_suite(field: &Field, level: VerifyLevel) -> Vec<Check> {
    let scope = format!("GF({}^{})", field.characteristic(), field.degree());
    let mut checks = Vec::new();
    let q = field.order();

    let mut weyl = Ok(());
    'weyl: for mu in field.elements() {
        for nu in field.elements() {
            let z = PauliMonomial::z_op(field, mu.clone()).to_matrix(field);
            let x = PauliMonomial::x_op(field, nu.clone()).to_matrix(field);
            let chi = field.character_in(&field.mul(mu, nu), field.conductor());
            if z.mat_mul(&x) != x.mat_mul(&z).scalar_mul(&chi) {
                weyl = Err(format!("Weyl relation failed at μ={} ν={}", mu, nu));
                break 'weyl;
            }
        }
    }
    checks.push(Check::from_result("pauli/weyl-relation", &scope, weyl));

    let pairs: Vec<(usize, usize, usize, usize)> = match level {
        VerifyLevel::Exhaustive => {
            let mut v = Vec::new();
            for a in 0..q {
                for b in 0..q {
                    for c in 0..q {
                        for d in 0..q {
                            v.push((a, b, c, d));
                        }
                    }
                }
            }
            v
        }
        VerifyLevel::Fast => {
            let mut rng = SplitMix64(0xc0de + q as u64);
            (0..200).map(|_| (rng.below(q), rng.below(q), rng.below(q), rng.below(q))).collect()
        }
    };
    let mut hom = Ok(());
    for (a, b, c, d) in pairs {
        let m1 = PauliMonomial::new(field, 1, field.element(a).clone(), field.element(b).clone());
        let m2 = PauliMonomial::new(field, 0, field.element(c).clone(), field.element(d).clone());
        let lhs = PauliMonomial::compose(field, &m1, &m2).to_matrix(field);
        let rhs = m1.to_matrix(field).mat_mul(&m2.to_matrix(field));
        if lhs != rhs {
            hom = Err(format!("composition is not a homomorphism at ({},{})·({},{})", a, b, c, d));
            break;
        }
    }
    checks.push(Check::from_result("pauli/compose-homomorphism", &scope, hom));

    let mut orth = Ok(());
    let nonzero: Vec<_> = field.elements().iter().skip(1).cloned().collect();
    'orth: for m1 in &nonzero {
        for n1 in field.elements() {
            for m2 in &nonzero {
                for n2 in field.elements() {
                    let a = PauliMonomial::lambda_class(field, m1, n1);
                    let b = PauliMonomial::lambda_class(field, m2, n2);
                    let t = PauliMonomial::hs_trace_inner(field, &a, &b);
                    let expect = if m1 == m2 && n1 == n2 { q as i64 } else { 0 };
                    if t.as_integer() != Some(expect) {
                        orth = Err(format!("trace orthogonality failed at Λ({},{})", m1, n1));
                        break 'orth;
                    }
                }
            }
        }
    }
    checks.push(Check::from_result("pauli/trace-orthogonality", &scope, orth));

    let classes = {
        let mut ok = true;
        for nu in field.elements() {
            for m1 in &nonzero {
                for m2 in &nonzero {
                    ok &= PauliMonomial::commutes(
                        field,
                        &PauliMonomial::lambda_class(field, m1, nu),
                        &PauliMonomial::lambda_class(field, m2, nu),
                    );
                }
            }
        }
        for m1 in &nonzero {
            for m2 in &nonzero {
                ok &= PauliMonomial::commutes(
                    field,
                    &PauliMonomial::lambda_tilde(field, m1),
                    &PauliMonomial::lambda_tilde(field, m2),
                );
            }
        }
        // maximality: anything outside class ν ∪ {1} fails to commute with
        // some member, so each class is maximal abelian modulo phases
        for nu in field.elements() {
            for z in field.elements() {
                for x in field.elements() {
                    if *x == field.mul(nu, z) {
                        continue; // a member of the class (or the identity)
                    }
                    let candidate = PauliMonomial::new(field, 0, z.clone(), x.clone());
                    let commutes_with_all = nonzero.iter().all(|m| {
                        PauliMonomial::commutes(
                            field,
                            &candidate,
                            &PauliMonomial::lambda_class(field, m, nu),
                        )
                    });
                    ok &= !commutes_with_all;
                }
            }
        }
        // same for the tilde class of shifts
        for z in field.elements() {
            for x in field.elements() {
                if z.is_zero() {
                    continue;
                }
                let candidate = PauliMonomial::new(field, 0, z.clone(), x.clone());
                let commutes_with_all = nonzero.iter().all(|m| {
                    PauliMonomial::commutes(field, &candidate, &PauliMonomial::lambda_tilde(field, m))
                });
                ok &= !commutes_with_all;
            }
        }
        if ok {
            Ok(())
        } else {
            Err(String::from("commuting-class structure defect"))
        }
    };
    checks.push(Check::from_result("pauli/commuting-classes", &scope, classes));

    let factorization = {
        let basis = field.find_selfdual();
        if basis.is_selfdual() {
            let p = field.characteristic();
            let perm = coordinate_permutation_matrix(field, &basis);
            let mut ok = true;
            for mu in field.elements() {
                for nu in field.elements() {
                    let op = PauliMonomial::new(field, 0, mu.clone(), nu.clone());
                    let factors = op.factor_selfdual(field, &basis).expect("selfdual basis");
                    let mut tensor = factors[0].to_matrix(p);
                    for piece in &factors[1..] {
                        tensor = tensor.tensor(&piece.to_matrix(p));
                    }
                    ok &= perm.mat_mul(&op.to_matrix(field)).mat_mul(&perm.adjoint()) == tensor;
                }
            }
            if ok {
                Ok(())
            } else {
                Err(String::from("selfdual tensor factorization mismatch"))
            }
        } else {
            // almost-selfdual: the obstruction must be reported
            let op = PauliMonomial::z_op(field, field.one());
            match op.factor_selfdual(field, &basis) {
                Err(crate::pauli::PauliError::AlmostSelfdualObstruction { .. }) => Ok(()),
                other => Err(format!("expected obstruction report, got {:?}", other)),
            }
        }
    };
    checks.push(Check::from_result("pauli/selfdual-factorization", &scope, factorization));

    checks
}

pub fn mub_suite(field: &Field) -> Vec<Check> {
    let scope = format!("GF({}^{})", field.characteristic(), field.degree());
    let mut checks = Vec::new();
    let q = field.order();

    let f = mub::fourier_matrix(field);
    checks.push(Check::from_result(
        "mub/fourier-unitary",
        &scope,
        if f.is_unitary() { Ok(()) } else { Err(String::from("F F† ≠ I")) },
    ));

    let mut rot = Ok(());
    for nu in field.elements() {
        if !mub::v_operator(field, nu).is_unitary() {
            rot = Err(format!("V_ν not unitary at ν = {}", nu));
            break;
        }
    }
    checks.push(Check::from_result("mub/rotation-unitary", &scope, rot));

    let mut zfx = Ok(());
    for mu in field.elements() {
        let x = PauliMonomial::x_op(field, mu.clone()).to_matrix(field);
        let z = PauliMonomial::z_op(field, mu.clone()).to_matrix(field);
        if f.mat_mul(&x).mat_mul(&f.adjoint()) != z {
            zfx = Err(format!("F X_μ F† ≠ Z_μ at μ = {}", mu));
            break;
        }
    }
    checks.push(Check::from_result("mub/fourier-shift-to-clock", &scope, zfx));

    let mut recursion = Ok(());
    'rec: for nu in field.elements() {
        if c_coefficient(field, &field.zero(), nu) != CycInt::one(field.conductor()) {
            recursion = Err(format!("c_0ν ≠ 1 at ν = {}", nu));
            break;
        }
        for l1 in field.elements() {
            for l2 in field.elements() {
                let lhs = c_coefficient(field, &field.add(l1, l2), nu)
                    .mul(&c_coefficient(field, l1, nu).conj());
                let chi = field.character_in(
                    &field.neg(&field.mul(nu, &field.mul(l2, l1))),
                    field.conductor(),
                );
                let rhs = c_coefficient(field, l2, nu).mul(&chi);
                if lhs != rhs {
                    recursion = Err(format!("coefficient recursion failed at ν = {}", nu));
                    break 'rec;
                }
            }
        }
    }
    checks.push(Check::from_result("mub/coefficient-recursion", &scope, recursion));

    let mut conj = Ok(());
    'conj: for mu in field.elements() {
        for nu in field.elements() {
            if let Err(e) = mub::conjugation_check(field, mu, nu) {
                conj = Err(format!("{}", e));
                break 'conj;
            }
        }
    }
    checks.push(Check::from_result("mub/conjugation-phase", &scope, conj));

    let table = mub::mub_table(field, false).expect("construction is total");
    let (pairs, ok) = mub::verify_pairwise(field, &table);
    checks.push(Check::from_result(
        "mub/pairwise-unbiased",
        &scope,
        if ok && table.len() == q + 1 && pairs == q * (q + 1) / 2 {
            Ok(())
        } else {
            Err(format!("table defect: {} bases, {} pairs, exact = {}", table.len(), pairs, ok))
        },
    ));

    // the Hermitian product of any two of the bases is a generalized
    // Hadamard matrix (unitary with flat squared modulus 1/d^n)
    let mut hadamard = Ok(());
    'had: for i in 0..table.len() {
        for j in i + 1..table.len() {
            if let Err(e) = mub::gram_hadamard(field, table.basis(i), table.basis(j)) {
                hadamard = Err(format!("pair ({}, {}): {}", i, j, e));
                break 'had;
            }
        }
    }
    checks.push(Check::from_result("mub/hadamard-grams", &scope, hadamard));

    let eigen = {
        let mut ok = true;
        for (bi, nu) in field.elements().iter().enumerate() {
            let basis = table.basis(bi);
            for mu in field.elements().iter().skip(1) {
                let op = PauliMonomial::lambda_class(field, mu, nu).to_matrix(field);
                for (li, lam) in field.elements().iter().enumerate() {
                    let eig = c_coefficient(field, mu, nu)
                        .conj()
                        .mul(&field.character_in(&field.mul(lam, mu), field.conductor()));
                    ok &= op.apply(&basis[li]) == basis[li].scalar_mul(&eig);
                }
            }
        }
        let fourier = table.basis(table.len() - 1);
        for mu in field.elements().iter().skip(1) {
            let op = PauliMonomial::lambda_tilde(field, mu).to_matrix(field);
            for (li, lam) in field.elements().iter().enumerate() {
                let eig = field.character_in(&field.neg(&field.mul(lam, mu)), field.conductor());
                ok &= op.apply(&fourier[li]) == fourier[li].scalar_mul(&eig);
            }
        }
        if ok {
            Ok(())
        } else {
            Err(String::from("a basis fails to diagonalize its class"))
        }
    };
    checks.push(Check::from_result("mub/eigenbasis-property", &scope, eigen));

    let mut elements_id = Ok(());
    'els: for mu in field.elements() {
        for nu in field.elements() {
            if !mub::lambda_matrix_element_check(field, mu, nu) {
                elements_id = Err(format!("matrix-element identity failed at μ={} ν={}", mu, nu));
                break 'els;
            }
        }
    }
    checks.push(Check::from_result("mub/matrix-element-identity", &scope, elements_id));

    checks
}

pub fn bell_suite(field: &Field) -> Vec<Check> {
    let scope = format!("GF({}^{})", field.characteristic(), field.degree());
    let mut checks = Vec::new();
    let q = field.order();
    let basis = bell::full_basis(field);

    checks.push(Check::from_result(
        "bell/orthonormality",
        &scope,
        if bell::check_orthonormal(field, &basis) {
            Ok(())
        } else {
            Err(String::from("Gram ≠ identity"))
        },
    ));

    checks.push(Check::from_result(
        "bell/completeness",
        &scope,
        if bell::check_completeness(field, &basis) {
            Ok(())
        } else {
            Err(String::from("projector sum ≠ identity"))
        },
    ));

    checks.push(Check::from_result(
        "bell/tilde-cross-relation",
        &scope,
        if bell::check_tilde_cross(field) {
            Ok(())
        } else {
            Err(String::from("⟨Ψ_{μν}|Ψ̃_{μ′}⟩ ≠ δ_{μ0}δ_{νμ′}"))
        },
    ));

    let mut equivalence = Ok(());
    for state in &basis {
        if let Err(e) = bell::bell_from_lambda(field, &state.label) {
            equivalence = Err(format!("{}", e));
            break;
        }
    }
    checks.push(Check::from_result("bell/construction-equivalence", &scope, equivalence));

    // transpose law Λ(μ,ν)ᵀ = χ(νμ²)·Λ(μ,−ν); at p = 2 this is the
    // symmetric/antisymmetric matrix relation
    let mut transpose = Ok(());
    'tr: for mu in field.elements() {
        for nu in field.elements() {
            let lam = PauliMonomial::lambda_class(field, mu, nu).to_matrix(field);
            let partner = PauliMonomial::lambda_class(field, mu, &field.neg(nu)).to_matrix(field);
            let phase = field.character_in(
                &field.mul(nu, &field.mul(mu, mu)),
                field.conductor(),
            );
            if lam.transpose() != partner.scalar_mul(&phase) {
                transpose = Err(format!("transpose law failed at μ={} ν={}", mu, nu));
                break 'tr;
            }
        }
    }
    checks.push(Check::from_result("bell/lambda-transpose-law", &scope, transpose));

    let mut swap = Ok(());
    for state in &basis {
        match bell::swap_relation(field, &state.label) {
            Ok((partner, _)) => {
                if field.characteristic() == 2 && partner != state.label {
                    swap = Err(format!("p=2 state not a swap eigenvector: {}", state.label.text()));
                    break;
                }
            }
            Err(e) => {
                swap = Err(format!("{}", e));
                break;
            }
        }
    }
    checks.push(Check::from_result("bell/swap-law", &scope, swap));

    let census = bell::symmetry_census(field, CensusMode::Multiqudit).expect("multiqudit census");
    let census_ok = census.symmetric + census.antisymmetric + census.neither == q * q
        && (field.characteristic() != 2 || census.neither == 0);
    let census_expected = match (field.characteristic(), field.degree()) {
        (2, 1) => Some(Census { symmetric: 3, antisymmetric: 1, neither: 0 }),
        (2, 2) => Some(Census { symmetric: 10, antisymmetric: 6, neither: 0 }),
        _ => None,
    };
    let census_match = census_expected.map(|e| e == census).unwrap_or(true);
    checks.push(Check::from_result(
        "bell/symmetry-census",
        &scope,
        if census_ok && census_match {
            Ok(())
        } else {
            Err(format!(
                "census ({}, {}, {}) malformed",
                census.symmetric, census.antisymmetric, census.neither
            ))
        },
    ));

    if q == 4 {
        let sp = bell::symmetry_census(field, CensusMode::SingleParticle).expect("dim 4");
        checks.push(Check::from_result(
            "bell/single-particle-census",
            &scope,
            if sp == (Census { symmetric: 6, antisymmetric: 2, neither: 8 }) {
                Ok(())
            } else {
                Err(format!("({}, {}, {})", sp.symmetric, sp.antisymmetric, sp.neither))
            },
        ));
    }

    let mut projector = Ok(());
    for nu in field.elements() {
        if let Err(e) = bell::projector_sum(field, nu) {
            projector = Err(format!("{}", e));
            break;
        }
    }
    if projector.is_ok() {
        if let Err(e) = bell::projector_sum_tilde(field) {
            projector = Err(format!("{}", e));
        }
    }
    checks.push(Check::from_result("bell/projector-sum-identities", &scope, projector));

    let mut reduced = Ok(());
    'red: for state in &basis {
        for side in [bell::Side::A, bell::Side::B] {
            let rho = bell::reduced_density(field, &state.vector, side);
            if !bell::is_maximally_mixed(field, &rho) {
                reduced = Err(format!("reduced density defect at {}", state.label.text()));
                break 'red;
            }
        }
    }
    checks.push(Check::from_result("bell/reduced-density", &scope, reduced));

    if field.characteristic() == 2 && field.degree() == 2 {
        let sd = field.find_selfdual();
        let mut coords = Ok(());
        'co: for m1 in 0..2u32 {
            for n1 in 0..2u32 {
                for m2 in 0..2u32 {
                    for n2 in 0..2u32 {
                        if let Err(e) = bell::qubit_coordinates(field, &sd, [m1, n1, m2, n2]) {
                            coords = Err(format!("{}", e));
                            break 'co;
                        }
                    }
                }
            }
        }
        if coords.is_ok() {
            for m1 in 0..2u32 {
                for m2 in 0..2u32 {
                    if let Err(e) = bell::qubit_coordinates_tilde(field, &sd, m1, m2) {
                        coords = Err(format!("{}", e));
                    }
                }
            }
        }
        checks.push(Check::from_result("bell/coordinate-formula", &scope, coords));
    }

    // qubit Bell name identification
    if q == 2 {
        let named = {
            let mut ok = true;
            for state in &basis {
                let class = bell::symmetry_class(field, &state.label);
                match state.label.qubit_name(field) {
                    Some("Psi-") => ok &= class == SymmetryClass::Antisymmetric,
                    Some(_) => ok &= class == SymmetryClass::Symmetric,
                    None => ok = false,
                }
            }
            // Ψ̃₀ must be (|00⟩+|11⟩)/√2
            let phi = bell::bell_tilde(field, &field.zero());
            ok &= phi.entry(0).as_integer() == Some(1)
                && phi.entry(3).as_integer() == Some(1)
                && phi.entry(1).is_zero()
                && phi.entry(2).is_zero();
            if ok {
                Ok(())
            } else {
                Err(String::from("qubit Bell naming defect"))
            }
        };
        checks.push(Check::from_result("bell/qubit-identification", &scope, named));
    }

    checks
}

/// Matrix-level suites for one field.
pub fn matrix_level_suite(field: &Field, level: VerifyLevel) -> Vec<Check> {
    let mut checks = Vec::new();
    checks.extend(pauli_suite(field, level));
    checks.extend(mub_suite(field));
    checks.extend(bell_suite(field));
    checks
}

/// The full suite at a level: cyclotomic ring checks, field-level checks up
/// to the level's field bound, matrix-level checks up to order 9.
pub fn run_default(level: VerifyLevel) -> Vec<Check> {
    let mut checks = Vec::new();
    let samples = match level {
        VerifyLevel::Fast => 40,
        VerifyLevel::Exhaustive => 200,
    };
    for conductor in [2u32, 3, 4, 5, 7] {
        checks.extend(cyclotomic_suite(conductor, samples));
    }
    let field_bound = match level {
        VerifyLevel::Fast => MATRIX_LEVEL_MAX_ORDER,
        VerifyLevel::Exhaustive => FIELD_LEVEL_MAX_ORDER,
    };
    for (p, n) in field_shapes_up_to(field_bound) {
        let field = Field::new(p, n).expect("bounded field");
        checks.extend(galois_suite(&field));
        if field.order() as u64 <= MATRIX_LEVEL_MAX_ORDER {
            checks.extend(matrix_level_suite(&field, level));
        }
    }
    checks
}

/// The suite for one explicitly chosen field.
pub fn run_for_field(field: &Field, level: VerifyLevel) -> Vec<Check> {
    let mut checks = Vec::new();
    let samples = match level {
        VerifyLevel::Fast => 40,
        VerifyLevel::Exhaustive => 200,
    };
    checks.extend(cyclotomic_suite(field.conductor(), samples));
    checks.extend(galois_suite(field));
    if field.order() as u64 <= MATRIX_LEVEL_MAX_ORDER {
        checks.extend(matrix_level_suite(field, level));
    }
    checks
}
