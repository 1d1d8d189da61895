mod common;

use common::{g, m1};
use leibsuper_core::algebra::{
    char_sequence, check_graded_closure, check_leibniz, jordan_blocks, lower_central_series,
    minimal_generators, nilindex, right_annihilator, right_mult_matrix, right_mult_superalgebra,
    series_dims, subalgebra_generated, symmetrized_in_annihilator, transport, BaseChange,
};
use leibsuper_core::families::{
    build_m1, build_m2, build_null_filiform, build_null_filiform_super, leibniz_from_associative,
    random_associative_pair, small_associative, FamilyParams, FamilyParamsM1, FamilyParamsM2,
};
use leibsuper_core::iso::read_params;
use leibsuper_core::linalg::{zero_vector, Matrix};
use leibsuper_core::random::random_params;
use leibsuper_core::{GaussianRational, SuperAlgebra};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn m1_n3(gamma: i64, beta3: i64, beta: i64) -> SuperAlgebra {
    m1(3, gamma, &[(3, beta3)], beta).build().unwrap()
}

#[test]
fn m1_products() {
    let a = m1_n3(1, 0, 0);
    let e = |i: usize| a.basis_vector(i);
    assert_eq!(a.product(&e(a.x(1)), &e(a.x(1))).unwrap(), e(a.x(2)));
    assert_eq!(a.product(&e(a.y(4)), &e(a.y(4))).unwrap(), e(a.x(3)));
    assert_eq!(
        a.product(&e(a.y(2)), &zero_vector(7)).unwrap(),
        zero_vector(7)
    );
}

#[test]
fn m1_acceptance_critical_instance() {
    let a = m1_n3(1, 2, 5);
    assert!(check_graded_closure(&a).ok);
    assert!(check_leibniz(&a).ok);
    assert!(symmetrized_in_annihilator(&a).ok);
}

#[test]
fn m1_invariants_at_zero() {
    let a = m1_n3(0, 0, 0);
    assert_eq!(
        series_dims(&lower_central_series(&a)),
        vec![7, 5, 4, 3, 2, 1, 0]
    );
    assert_eq!(nilindex(&a), Some(7));
    let ann = right_annihilator(&a);
    assert_eq!(ann.dim(), 5);
    for v in [a.x(2), a.x(3), a.y(2), a.y(3), a.y(4)] {
        assert!(ann.contains(&a.basis_vector(v)));
    }
}

#[test]
fn higher_x_lie_in_the_right_annihilator() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in 2..=6 {
        let p = random_params(&mut rng, leibsuper_core::families::FamilyKind::M1, n, 0.0).unwrap();
        let a = p.build().unwrap();
        let ann = right_annihilator(&a);
        for i in 2..=n {
            assert!(ann.contains(&a.basis_vector(a.x(i))));
        }
    }
}

#[test]
fn generators_and_y1_subalgebra() {
    let a = m1_n3(1, 0, 0);
    let gens = minimal_generators(&a);
    assert_eq!((gens.even, gens.odd), (0, 2));
    assert_eq!(
        gens.representatives,
        vec![a.basis_vector(a.y(1)), a.basis_vector(a.y(4))]
    );
    let s = subalgebra_generated(&a, &[a.basis_vector(a.y(1))]).unwrap();
    assert_eq!(s.dim(), 6);
    for v in [a.x(1), a.x(2), a.x(3), a.y(1), a.y(2), a.y(3)] {
        assert!(s.contains(&a.basis_vector(v)));
    }
    assert!(subalgebra_generated(&a, &[]).unwrap().is_zero());
    let all: Vec<_> = (0..7).map(|i| a.basis_vector(i)).collect();
    assert_eq!(subalgebra_generated(&a, &all).unwrap().dim(), 7);
}

#[test]
fn right_multiplication_by_x1() {
    let a = m1_n3(1, 2, 5);
    let (e, o) = right_mult_matrix(&a, &a.basis_vector(a.x(1))).unwrap();
    assert_eq!(jordan_blocks(&e).unwrap(), vec![3]);
    assert_eq!(jordan_blocks(&o).unwrap(), vec![3, 1]);
    let (e, o) = right_mult_matrix(&a, &a.basis_vector(a.x(3))).unwrap();
    assert!(e.is_zero() && o.is_zero());
    let (e, o) = right_mult_matrix(&a, &zero_vector(7)).unwrap();
    assert!(e.is_zero() && o.is_zero());
    let r = char_sequence(&a, 10, 1).unwrap();
    assert_eq!(r.sequence.to_string(), "(3 | 3,1)");
    assert_eq!(r.even_witness, a.basis_vector(a.x(1)));
    assert_eq!(r.odd_witness, a.basis_vector(a.x(1)));
}

#[test]
fn m2_small() {
    let p = FamilyParamsM2::new(2, [(3, g(2))]).unwrap();
    let a = build_m2(&p).unwrap();
    assert_eq!((a.n(), a.m()), (2, 4));
    assert!(check_leibniz(&a).ok && symmetrized_in_annihilator(&a).ok);
    assert_eq!(
        char_sequence(&a, 10, 2).unwrap().sequence.to_string(),
        "(2 | 3,1)"
    );
    assert_eq!(nilindex(&a), Some(6));
    let z = FamilyParams::zero(leibsuper_core::families::FamilyKind::M2, 2)
        .unwrap()
        .build()
        .unwrap();
    assert!(check_leibniz(&z).ok);
    assert_eq!((z.n(), z.m()), (2, 4));
}

#[test]
fn sign_flip_of_top_odd_vector() {
    let a = m1_n3(1, 2, 0);
    let mut odd = Matrix::identity(4);
    odd[(3, 3)] = -GaussianRational::one();
    let t = BaseChange::new(Matrix::identity(3), odd).unwrap();
    let b = transport(&a, &t).unwrap();
    assert_eq!(
        read_params(leibsuper_core::families::FamilyKind::M1, 3, &b).unwrap(),
        m1(3, 1, &[(3, -2)], 0)
    );
    assert_eq!(transport(&a, &BaseChange::identity(3, 4)).unwrap(), a);
}

#[test]
fn null_filiform_chains() {
    let a = build_null_filiform(3).unwrap();
    assert_eq!(series_dims(&lower_central_series(&a)), vec![3, 2, 1, 0]);
    let g = minimal_generators(&a);
    assert_eq!((g.even, g.odd), (1, 0));
    let (_, rep) = right_mult_superalgebra(&a);
    assert!(rep.ok());
    for (n, m) in [(2, 2), (3, 3), (2, 3), (4, 5)] {
        let b = build_null_filiform_super(n, m).unwrap();
        assert!(
            check_graded_closure(&b).ok && check_leibniz(&b).ok,
            "({n}, {m})"
        );
        assert_eq!(nilindex(&b), Some(n + m + 1), "({n}, {m})");
    }
    assert!(build_null_filiform_super(3, 7).is_err());
}

#[test]
fn m1_operator_algebra() {
    let a = m1_n3(1, 0, 0);
    let (_, rep) = right_mult_superalgebra(&a);
    assert!(rep.ok());
}

#[test]
fn tiny_n_rejected() {
    assert!(FamilyParamsM1::zero(1).is_err());
    assert!(FamilyParamsM2::zero(1).is_err());
    assert!(FamilyParamsM1::new(3, g(1), [(2, g(1))], g(0)).is_err());
}

#[test]
fn associative_constructions() {
    for which in 0..4 {
        let a = small_associative(which);
        let dim = a.dim();
        let mut d = Matrix::zeros(dim, dim);
        for i in 0..dim {
            d[(i, i)] = GaussianRational::one();
        }
        // the identity is a valid D exactly when A is commutative in the graded sense
        if let Ok(l) = leibniz_from_associative(&a, &d) {
            assert!(check_leibniz(&l).ok);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..5 {
        let (a, d) = random_associative_pair(&mut rng);
        assert!(check_leibniz(&leibniz_from_associative(&a, &d).unwrap()).ok);
    }
    let a = small_associative(0);
    let bad = Matrix::zeros(a.dim() + 1, a.dim() + 1);
    assert!(leibniz_from_associative(&a, &bad).is_err());
}

#[test]
fn m1_direct_builder_matches_params() {
    let p = FamilyParamsM1::new(5, g(2), [(4, g(1)), (5, g(-3))], g(7)).unwrap();
    assert_eq!(
        build_m1(&p).unwrap(),
        FamilyParams::from(p).build().unwrap()
    );
}
