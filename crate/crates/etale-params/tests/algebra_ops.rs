//! Arithmetic of étale algebras with involution: the involution itself,
//! norms and traces, characteristic polynomials, and the sign character.

mod common;

use base_field::rat::{rat, rat_int, Rat};
use base_field::symbols;
use base_field::{Place, Sign};
use common::*;
use etale_params::{EtaleAlg, EtaleElem, Factor, SharpElem, SharpField};
use num::{One, Zero};
use rand::Rng;

/// K = ℚ₅(√2) as a one-factor algebra, with its generator √2.
fn q5_sqrt2() -> (EtaleAlg, EtaleElem) {
    let sharp = qp(5);
    let d = sharp.from_i64(2);
    let alg = EtaleAlg::new(Place::Padic(5), vec![Factor::inert(sharp.clone(), d)])
        .expect("2 is a non-square in ℚ₅");
    let sqrt2 = EtaleElem {
        components: vec![(sharp.from_i64(0), sharp.from_i64(1))],
    };
    (alg, sqrt2)
}

#[test]
fn involution_is_an_involutive_algebra_map() {
    let mut r = rng(900);
    for place in [Place::Padic(3), Place::Padic(5), Place::Real] {
        for _ in 0..10 {
            let nf = r.gen_range(1..=3);
            let alg = random_alg(&mut r, place, nf);
            let x = random_elem(&mut r, &alg);
            let y = random_elem(&mut r, &alg);
            let tau_x = alg.tau(&x).unwrap();
            assert_eq!(alg.tau(&tau_x).unwrap(), x);
            assert_eq!(
                alg.tau(&alg.mul(&x, &y).unwrap()).unwrap(),
                alg.mul(&tau_x, &alg.tau(&y).unwrap()).unwrap()
            );
            assert_eq!(
                alg.tau(&alg.add(&x, &y).unwrap()).unwrap(),
                alg.add(&tau_x, &alg.tau(&y).unwrap()).unwrap()
            );
            assert_eq!(alg.tau(&alg.one()).unwrap(), alg.one());
        }
    }
}

#[test]
fn split_norms_take_componentwise_products() {
    let sharp = qp(5);
    let alg = EtaleAlg::new(Place::Padic(5), vec![Factor::split(sharp.clone())]).unwrap();
    let x = EtaleElem {
        components: vec![(sharp.from_i64(3), sharp.from_rat(&rat(7, 2)))],
    };
    let n = alg.norm_to_sharp(&x).unwrap();
    let parts = alg.sharp_parts(&n).expect("norms are fixed");
    assert_eq!(parts, vec![sharp.from_rat(&rat(21, 2))]);
}

#[test]
fn norms_multiply_and_traces_add() {
    let mut r = rng(901);
    for place in [Place::Padic(5), Place::Padic(7), Place::Real] {
        for _ in 0..10 {
            let nf = r.gen_range(1..=3);
            let alg = random_alg(&mut r, place, nf);
            let x = random_elem(&mut r, &alg);
            let y = random_elem(&mut r, &alg);
            assert_eq!(
                alg.norm_to_f(&alg.mul(&x, &y).unwrap()).unwrap(),
                alg.norm_to_f(&x).unwrap() * alg.norm_to_f(&y).unwrap()
            );
            assert_eq!(
                alg.trace_to_f(&alg.add(&x, &y).unwrap()).unwrap(),
                alg.trace_to_f(&x).unwrap() + alg.trace_to_f(&y).unwrap()
            );
            // multiplicativity across the involution
            assert_eq!(
                alg.norm_to_f(&x).unwrap() * alg.norm_to_f(&alg.tau(&x).unwrap()).unwrap(),
                alg.norm_to_f(&alg.norm_to_sharp(&x).unwrap()).unwrap()
            );
        }
    }
}

#[test]
fn scalars_have_dimension_determined_trace_and_norm() {
    let mut r = rng(958);
    let alg = random_alg(&mut r, Place::Padic(5), 2);
    let dim = alg.dim_f();
    let s = rat(7, 3);
    let scalar = alg.from_rat(&s);
    assert_eq!(
        alg.trace_to_f(&scalar).unwrap(),
        s.clone() * rat_int(dim as i64)
    );
    let mut expected_norm = Rat::one();
    for _ in 0..dim {
        expected_norm *= s.clone();
    }
    assert_eq!(alg.norm_to_f(&scalar).unwrap(), expected_norm);
}

#[test]
fn multiplication_matrices_represent_the_product() {
    let mut r = rng(902);
    for place in [Place::Padic(3), Place::Padic(5), Place::Real] {
        for _ in 0..8 {
            let nf = r.gen_range(1..=2);
            let alg = random_alg(&mut r, place, nf);
            let x = random_elem(&mut r, &alg);
            let y = random_elem(&mut r, &alg);
            let mx = alg.mult_matrix(&x).unwrap();
            let my = alg.mult_matrix(&y).unwrap();
            assert_eq!(
                alg.mult_matrix(&alg.mul(&x, &y).unwrap()).unwrap(),
                mx.mul(&my).unwrap()
            );
            assert_eq!(mx.trace().unwrap(), alg.trace_to_f(&x).unwrap());
            assert_eq!(mx.det().unwrap(), alg.norm_to_f(&x).unwrap());
            // the element satisfies its own characteristic polynomial
            let p = alg.char_poly(&x).unwrap();
            assert_eq!(alg.poly_eval(&p, &x).unwrap(), alg.zero());
        }
    }
}

#[test]
fn split_pair_characteristic_polynomial_factors() {
    let sharp = qp(5);
    let alg = EtaleAlg::new(Place::Padic(5), vec![Factor::split(sharp.clone())]).unwrap();
    let a = EtaleElem {
        components: vec![(sharp.from_i64(2), sharp.from_rat(&rat(1, 2)))],
    };
    // (T − 2)(T − 1/2) = T² − 5/2·T + 1
    assert_eq!(
        alg.char_poly(&a).unwrap(),
        vec![Rat::one(), rat(-5, 2), Rat::one()]
    );
}

#[test]
fn characteristic_polynomials_are_monic_of_full_degree() {
    let mut r = rng(903);
    for place in [Place::Padic(5), Place::Real] {
        for _ in 0..6 {
            let nf = r.gen_range(1..=3);
            let alg = random_alg(&mut r, place, nf);
            let x = random_elem(&mut r, &alg);
            let p = alg.char_poly(&x).unwrap();
            assert_eq!(p.len(), alg.dim_f() + 1);
            assert_eq!(p[alg.dim_f()], Rat::one());
        }
    }
}

#[test]
fn derivative_evaluation_on_the_quadratic_field() {
    let (alg, sqrt2) = q5_sqrt2();
    assert_eq!(
        alg.char_poly(&sqrt2).unwrap(),
        vec![rat_int(-2), Rat::zero(), Rat::one()]
    );
    // Ṗ(T) = 2T evaluated at √2 is 2√2
    let expected = alg.scale_rat(&rat_int(2), &sqrt2).unwrap();
    let got = alg.deriv_eval(&sqrt2).unwrap();
    assert_eq!(got, expected);
    assert!(alg.is_invertible(&got).unwrap());
}

#[test]
fn sign_character_is_trivial_on_split_algebras() {
    let mut r = rng(904);
    for place in [Place::Padic(5), Place::Real] {
        for _ in 0..10 {
            let factors: Vec<Factor> = (0..r.gen_range(1..=3))
                .map(|_| match place {
                    Place::Padic(p) => Factor::split(if r.gen_bool(0.5) {
                        qp(p)
                    } else {
                        quad_unram(p)
                    }),
                    Place::Real => Factor::split(if r.gen_bool(0.5) {
                        SharpField::Real
                    } else {
                        SharpField::Complex
                    }),
                })
                .collect();
            let alg = EtaleAlg::new(place, factors).unwrap();
            let t = random_fixed_invertible(&mut r, &alg);
            assert_eq!(alg.sgn_char(&t).unwrap(), Sign::Plus);
        }
    }
}

#[test]
fn sign_character_kills_norms_and_is_multiplicative() {
    let mut r = rng(905);
    for place in [Place::Padic(3), Place::Padic(5), Place::Real] {
        for _ in 0..10 {
            let nf = r.gen_range(1..=3);
            let alg = random_alg(&mut r, place, nf);
            let x = random_invertible_elem(&mut r, &alg);
            assert_eq!(
                alg.sgn_char(&alg.norm_to_sharp(&x).unwrap()).unwrap(),
                Sign::Plus
            );
            let s = random_fixed_invertible(&mut r, &alg);
            let t = random_fixed_invertible(&mut r, &alg);
            assert_eq!(
                alg.sgn_char(&alg.mul(&s, &t).unwrap()).unwrap(),
                alg.sgn_char(&s).unwrap() * alg.sgn_char(&t).unwrap()
            );
        }
    }
}

#[test]
fn sign_character_detects_non_norms() {
    let (alg, _) = q5_sqrt2();
    let five = alg.from_rat(&rat_int(5));
    assert_eq!(alg.sgn_char(&five).unwrap(), Sign::Minus);
    // agreement with the base-field Hilbert symbol (5, 2) at ℚ₅
    assert_eq!(
        symbols::hilbert(&rat_int(5), &rat_int(2), &Place::Padic(5)).unwrap(),
        Sign::Minus
    );
    // a split factor alongside contributes nothing
    let sharp = qp(5);
    let mixed = EtaleAlg::new(
        Place::Padic(5),
        vec![
            Factor::inert(sharp.clone(), sharp.from_i64(2)),
            Factor::split(sharp.clone()),
        ],
    )
    .unwrap();
    let t = mixed
        .embed_sharp(&[sharp.from_i64(5), sharp.from_i64(7)])
        .unwrap();
    assert_eq!(mixed.sgn_char(&t).unwrap(), Sign::Minus);
}

#[test]
fn sign_character_requires_fixed_invertible_input() {
    let (alg, sqrt2) = q5_sqrt2();
    assert!(alg.sgn_char(&sqrt2).is_err(), "√2 is not τ-fixed");
    assert!(alg.sgn_char(&alg.zero()).is_err(), "zero is not invertible");
    let sharp = qp(5);
    let split = EtaleAlg::new(Place::Padic(5), vec![Factor::split(sharp.clone())]).unwrap();
    let unbalanced = EtaleElem {
        components: vec![(sharp.from_i64(1), sharp.from_i64(2))],
    };
    assert!(split.sgn_char(&unbalanced).is_err());
}

#[test]
fn archimedean_factors_follow_real_conventions() {
    // inert factor ℝ(√−1) ≅ ℂ
    let alg = EtaleAlg::new(
        Place::Real,
        vec![Factor::inert(SharpField::Real, SharpElem::Real(-Rat::one()))],
    )
    .unwrap();
    let z = EtaleElem {
        components: vec![(SharpElem::Real(rat_int(3)), SharpElem::Real(rat_int(4)))],
    };
    assert_eq!(alg.norm_to_f(&z).unwrap(), rat_int(25));
    assert_eq!(alg.trace_to_f(&z).unwrap(), rat_int(6));
    let i = EtaleElem {
        components: vec![(SharpElem::Real(Rat::zero()), SharpElem::Real(Rat::one()))],
    };
    assert_eq!(
        alg.char_poly(&i).unwrap(),
        vec![Rat::one(), Rat::zero(), Rat::one()]
    );
    // sign character = sign over ℝ
    assert_eq!(alg.sgn_char(&alg.from_rat(&rat_int(3))).unwrap(), Sign::Plus);
    assert_eq!(alg.sgn_char(&alg.from_rat(&rat_int(-2))).unwrap(), Sign::Minus);

    // split complex factor ℂ × ℂ
    let calg = EtaleAlg::new(Place::Real, vec![Factor::split(SharpField::Complex)]).unwrap();
    let zw = EtaleElem {
        components: vec![(
            SharpElem::Complex(Rat::one(), rat_int(2)),
            SharpElem::Complex(rat_int(3), -Rat::one()),
        )],
    };
    assert_eq!(calg.trace_to_f(&zw).unwrap(), rat_int(8));
    assert_eq!(calg.norm_to_f(&zw).unwrap(), rat_int(50));
    assert_eq!(calg.dim_f(), 4);
}

#[test]
fn inversion_round_trips_and_sharp_embeddings_extract() {
    let mut r = rng(906);
    for place in [Place::Padic(7), Place::Real] {
        for _ in 0..10 {
            let nf = r.gen_range(1..=3);
            let alg = random_alg(&mut r, place, nf);
            let x = random_invertible_elem(&mut r, &alg);
            assert_eq!(alg.mul(&x, &alg.inverse(&x).unwrap()).unwrap(), alg.one());
            let parts: Vec<SharpElem> = alg
                .factors()
                .iter()
                .map(|f| random_sharp(&mut r, &f.sharp))
                .collect();
            let fixed = alg.embed_sharp(&parts).unwrap();
            assert_eq!(alg.sharp_parts(&fixed).unwrap(), parts);
            assert_eq!(alg.tau(&fixed).unwrap(), fixed);
        }
    }
}

#[test]
fn the_empty_algebra_behaves_as_the_zero_ring() {
    let alg = EtaleAlg::new(Place::Padic(5), vec![]).unwrap();
    assert_eq!(alg.dim_f(), 0);
    let e = EtaleElem { components: vec![] };
    assert_eq!(alg.one(), e);
    assert_eq!(alg.zero(), e);
    assert!(alg.is_invertible(&e).unwrap());
    assert_eq!(alg.char_poly(&e).unwrap(), vec![Rat::one()]);
    assert_eq!(alg.trace_to_f(&e).unwrap(), Rat::zero());
    assert_eq!(alg.norm_to_f(&e).unwrap(), Rat::one());
    assert_eq!(alg.sgn_char(&e).unwrap(), Sign::Plus);
    assert_eq!(alg.deriv_eval(&e).unwrap(), e);
}

#[test]
fn quadratic_tower_coefficients_survive_a_field_round_trip() {
    // traces and norms through an unramified quadratic coefficient field
    let sharp = quad_unram(5);
    let SharpField::Padic(ext) = &sharp else {
        unreachable!()
    };
    let theta = SharpElem::Padic(ext.theta());
    // θ² = −3 in this presentation, so tr(θ) = 0 and N(θ) = 3
    assert_eq!(sharp.trace_to_f(&theta).unwrap(), Rat::zero());
    assert_eq!(sharp.norm_to_f(&theta).unwrap(), rat_int(3));
    let d = sharp.from_i64(5);
    assert!(!sharp.is_square(&d).unwrap(), "5 is a uniformizer, not a square");
    let alg = EtaleAlg::new(
        Place::Padic(5),
        vec![Factor::inert(sharp.clone(), d)],
    )
    .unwrap();
    assert_eq!(alg.dim_f(), 4);
    let x = EtaleElem {
        components: vec![(theta.clone(), sharp.from_i64(1))],
    };
    // N(θ + √5) to ℚ₅ is N_{K#/F}(θ² − 5) = N(−3 − 5) = 64
    assert_eq!(alg.norm_to_f(&x).unwrap(), rat_int(64));
    assert_eq!(alg.trace_to_f(&x).unwrap(), Rat::zero());
}
