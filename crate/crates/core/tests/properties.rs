//! Property-based invariants on randomized inputs.

use proptest::prelude::*;

use mubell_core::bell::{bell_vector, full_labels};
use mubell_core::cyclotomic::{CycInt, ScaledMatrix, ScaledVector};
use mubell_core::galois::Field;
use mubell_core::pauli::PauliMonomial;

const SHAPES: [(u64, usize); 7] = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2)];

fn arb_conductor() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![2u32, 3, 4, 5, 7])
}

fn arb_cyc(conductor: u32) -> impl Strategy<Value = CycInt> {
    prop::collection::vec(-5i64..=5, conductor as usize).prop_map(move |coeffs| {
        let mut z = CycInt::zero(conductor);
        for (k, c) in coeffs.into_iter().enumerate() {
            z = z.add(&CycInt::root_power(conductor, k as i64).mul(&CycInt::integer(conductor, c)));
        }
        z
    })
}

fn arb_cyc_triple() -> impl Strategy<Value = (CycInt, CycInt, CycInt)> {
    arb_conductor().prop_flat_map(|m| (arb_cyc(m), arb_cyc(m), arb_cyc(m)))
}

proptest! {
    #[test]
    fn ring_axioms((a, b, c) in arb_cyc_triple()) {
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
    }

    #[test]
    fn conjugation_is_an_automorphism_of_order_two((a, b, _c) in arb_cyc_triple()) {
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
    }

    #[test]
    fn abs_squared_ignores_phases((a, _b, _c) in arb_cyc_triple()) {
        let norm = a.abs_squared();
        for k in 0..a.conductor() as i64 {
            let rotated = a.mul(&CycInt::root_power(a.conductor(), k));
            prop_assert_eq!(rotated.abs_squared(), norm.clone());
            prop_assert_eq!(rotated.neg().abs_squared(), norm.clone());
        }
    }

    #[test]
    fn scaled_vector_reduction_roundtrip(
        (m, entries, scale) in arb_conductor().prop_flat_map(|m| {
            (Just(m), prop::collection::vec(arb_cyc(m), 1..6), 0u32..4)
        })
    ) {
        let base = if m == 4 { 2 } else { m };
        let v = ScaledVector::new(base, m, scale, entries.clone());
        // multiplying every entry by p and adding 2 to the scale is the
        // same represented object
        let p = CycInt::integer(m, base as i64);
        let lifted: Vec<CycInt> = entries.iter().map(|e| e.mul(&p)).collect();
        let w = ScaledVector::new(base, m, scale + 2, lifted);
        prop_assert_eq!(v, w);
    }

    #[test]
    fn phase_search_finds_planted_phase(
        (m, entries, k, negate) in arb_conductor().prop_flat_map(|m| {
            (Just(m), prop::collection::vec(arb_cyc(m), 1..5), 0i64..4, any::<bool>())
        })
    ) {
        let base = if m == 4 { 2 } else { m };
        let v = ScaledVector::new(base, m, 2, entries);
        prop_assume!(v.entries().iter().any(|e| !e.is_zero()));
        let mut phase = CycInt::root_power(m, k % m as i64);
        if negate {
            phase = phase.neg();
        }
        let w = v.scalar_mul(&phase);
        let found = w.equals_up_to_phase(&v).expect("phase must be found");
        prop_assert_eq!(w, v.scalar_mul(&found));
    }
}

fn arb_shape() -> impl Strategy<Value = (u64, usize)> {
    prop::sample::select(SHAPES.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((shape, ia, ib, ic) in (arb_shape(), 0usize..9, 0usize..9, 0usize..9)) {
        let f = Field::new(shape.0, shape.1).unwrap();
        let q = f.order();
        let a = f.element(ia % q).clone();
        let b = f.element(ib % q).clone();
        let c = f.element(ic % q).clone();
        prop_assert_eq!(f.add(&a, &b), f.add(&b, &a));
        prop_assert_eq!(f.mul(&a, &b), f.mul(&b, &a));
        prop_assert_eq!(f.mul(&a, &f.mul(&b, &c)), f.mul(&f.mul(&a, &b), &c));
        prop_assert_eq!(f.mul(&a, &f.add(&b, &c)), f.add(&f.mul(&a, &b), &f.mul(&a, &c)));
        prop_assert!(f.sub(&a, &a).is_zero());
        if !a.is_zero() {
            let inv = f.inv(&a).unwrap();
            prop_assert_eq!(f.mul(&a, &inv), f.one());
        }
    }

    #[test]
    fn expansion_roundtrips((shape, idx) in (arb_shape(), 0usize..9)) {
        let f = Field::new(shape.0, shape.1).unwrap();
        let a = f.element(idx % f.order()).clone();
        for basis in [f.polynomial_basis(), f.normal_basis(), f.find_selfdual()] {
            let coords = f.expand(&a, &basis);
            prop_assert_eq!(f.compose(&coords, &basis), a.clone());
        }
    }

    #[test]
    fn monomial_matrix_homomorphism(
        (shape, iz1, ix1, iz2, ix2, t) in (arb_shape(), 0usize..9, 0usize..9, 0usize..9, 0usize..9, 0u32..4)
    ) {
        let f = Field::new(shape.0, shape.1).unwrap();
        let q = f.order();
        let a = PauliMonomial::new(&f, t, f.element(iz1 % q).clone(), f.element(ix1 % q).clone());
        let b = PauliMonomial::new(&f, 0, f.element(iz2 % q).clone(), f.element(ix2 % q).clone());
        let lhs = PauliMonomial::compose(&f, &a, &b).to_matrix(&f);
        let rhs = a.to_matrix(&f).mat_mul(&b.to_matrix(&f));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn bell_states_are_unit_vectors((shape, pick) in (arb_shape(), 0usize..81)) {
        let f = Field::new(shape.0, shape.1).unwrap();
        let labels = full_labels(&f);
        let label = &labels[pick % labels.len()];
        let v = bell_vector(&f, label);
        prop_assert!(v.inner(&v).is_one());
    }
}

#[test]
fn identity_tensor_power_is_identity() {
    let id = ScaledMatrix::identity(2, 4, 2);
    let mut acc = id.clone();
    for _ in 0..3 {
        acc = acc.tensor(&id);
    }
    assert!(acc.is_identity());
}
