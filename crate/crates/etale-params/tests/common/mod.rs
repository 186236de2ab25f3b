// Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use base_field::rat::{rat, Rat};
use base_field::{ExtField, Place, Result, Sign};
use etale_params::{
    ClassParam, EtaleAlg, EtaleElem, Factor, Mode, SharpElem, SharpField,
};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// ℚ_p as a coefficient field.
pub fn qp(p: u64) -> SharpField {
    SharpField::Padic(ExtField::qp(p).expect("odd p"))
}

/// The unramified quadratic extension of ℚ_p, presented as ℚ_p(θ) with
/// θ² = −c for a hand-picked c making T² + c irreducible mod p.
pub fn quad_unram(p: u64) -> SharpField {
    let c = match p {
        3 => 1,  // −1 is a non-square mod 3
        5 => 3,  // −3 ≡ 2 is a non-square mod 5
        7 => 4,  // −4 ≡ 3 is a non-square mod 7
        11 => 1, // −1 ≡ 10 is a non-square mod 11
        13 => 2, // −2 ≡ 11 is a non-square mod 13
        _ => panic!("no tabulated inert quadratic for p = {p}"),
    };
    SharpField::Padic(ExtField::unramified(p, vec![c, 0, 1]).expect("irreducible"))
}

/// A small random rational with numerator and denominator in a fixed box.
pub fn random_rat(rng: &mut ChaCha8Rng) -> Rat {
    let n = rng.gen_range(-4i64..=4);
    let d = *[1i64, 1, 1, 2, 3].choose(rng).expect("nonempty");
    rat(n, d)
}

pub fn random_nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let r = random_rat(rng);
        if r != rat(0, 1) {
            return r;
        }
    }
}

/// A random element of the coefficient field with small coordinates.
pub fn random_sharp(rng: &mut ChaCha8Rng, sharp: &SharpField) -> SharpElem {
    match sharp {
        SharpField::Padic(ext) => {
            let flat: Vec<Rat> = (0..ext.degree()).map(|_| random_rat(rng)).collect();
            SharpElem::Padic(ext.from_flat(&flat).expect("sized"))
        }
        SharpField::Real => SharpElem::Real(random_rat(rng)),
        SharpField::Complex => SharpElem::Complex(random_rat(rng), random_rat(rng)),
    }
}

pub fn random_invertible_sharp(rng: &mut ChaCha8Rng, sharp: &SharpField) -> SharpElem {
    loop {
        let x = random_sharp(rng, sharp);
        if !sharp.is_zero(&x).expect("shape") {
            return x;
        }
    }
}

/// A random non-square of the coefficient field, usable as an inert datum.
pub fn random_d(rng: &mut ChaCha8Rng, sharp: &SharpField) -> SharpElem {
    match sharp {
        SharpField::Padic(ext) => {
            let u = SharpElem::Padic(ext.nonsquare_unit());
            let pi = SharpElem::Padic(ext.uniformizer());
            let upi = sharp.mul(&u, &pi).expect("shape");
            let d = [u, pi, upi].choose(rng).expect("nonempty").clone();
            assert!(!sharp.is_square(&d).expect("nonzero"));
            d
        }
        SharpField::Real => SharpElem::Real(rat(-(rng.gen_range(1i64..=3)), 1)),
        SharpField::Complex => panic!("the complex field has no non-squares"),
    }
}

/// A random factor over the given place: split or inert, with a
/// coefficient field of degree 1 or 2.
pub fn random_factor(rng: &mut ChaCha8Rng, place: Place) -> Factor {
    match place {
        Place::Padic(p) => {
            let sharp = if rng.gen_bool(0.3) {
                quad_unram(p)
            } else {
                qp(p)
            };
            if rng.gen_bool(0.5) {
                let d = random_d(rng, &sharp);
                Factor::inert(sharp, d)
            } else {
                Factor::split(sharp)
            }
        }
        Place::Real => {
            if rng.gen_bool(0.4) {
                let d = random_d(rng, &SharpField::Real);
                Factor::inert(SharpField::Real, d)
            } else if rng.gen_bool(0.5) {
                Factor::split(SharpField::Complex)
            } else {
                Factor::split(SharpField::Real)
            }
        }
    }
}

pub fn random_alg(rng: &mut ChaCha8Rng, place: Place, num_factors: usize) -> EtaleAlg {
    let factors = (0..num_factors).map(|_| random_factor(rng, place)).collect();
    EtaleAlg::new(place, factors).expect("valid factors")
}

/// A random element of the algebra with small coordinates.
pub fn random_elem(rng: &mut ChaCha8Rng, alg: &EtaleAlg) -> EtaleElem {
    let components = alg
        .factors()
        .iter()
        .map(|f| (random_sharp(rng, &f.sharp), random_sharp(rng, &f.sharp)))
        .collect();
    EtaleElem { components }
}

pub fn random_invertible_elem(rng: &mut ChaCha8Rng, alg: &EtaleAlg) -> EtaleElem {
    loop {
        let x = random_elem(rng, alg);
        if alg.is_invertible(&x).expect("shape") {
            return x;
        }
    }
}

/// A random τ-fixed invertible element, as an embedded coefficient tuple.
pub fn random_fixed_invertible(rng: &mut ChaCha8Rng, alg: &EtaleAlg) -> EtaleElem {
    let parts: Vec<SharpElem> = alg
        .factors()
        .iter()
        .map(|f| random_invertible_sharp(rng, &f.sharp))
        .collect();
    alg.embed_sharp(&parts).expect("shapes match")
}

/// A random twisting element with τ(c) = ε·c.
pub fn random_c(rng: &mut ChaCha8Rng, alg: &EtaleAlg, epsilon: Sign) -> EtaleElem {
    loop {
        let c = match epsilon {
            Sign::Plus => random_fixed_invertible(rng, alg),
            Sign::Minus => {
                // w − τ(w) is anti-fixed for any w.
                let w = random_elem(rng, alg);
                alg.sub(&w, &alg.tau(&w).expect("shape")).expect("shape")
            }
        };
        if alg.is_invertible(&c).expect("shape") {
            return c;
        }
    }
}

fn try_param(
    epsilon: Sign,
    mode: Mode,
    alg: &EtaleAlg,
    a: EtaleElem,
    c: EtaleElem,
) -> Result<ClassParam> {
    ClassParam::new(epsilon, mode, alg.clone(), a, c)
}

/// A random valid group-mode parameter on the given algebra.
pub fn random_group_param(rng: &mut ChaCha8Rng, alg: &EtaleAlg, epsilon: Sign) -> ClassParam {
    loop {
        // a = w·τ(w)⁻¹ has a·τ(a) = 1 for any invertible w.
        let w = random_invertible_elem(rng, alg);
        let a = alg
            .mul(&w, &alg.inverse(&alg.tau(&w).expect("shape")).expect("invertible"))
            .expect("shape");
        let c = random_c(rng, alg, epsilon);
        if let Ok(p) = try_param(epsilon, Mode::Group, alg, a, c) {
            return p;
        }
    }
}

/// A random valid Lie-mode parameter on the given algebra.
pub fn random_lie_param(rng: &mut ChaCha8Rng, alg: &EtaleAlg, epsilon: Sign) -> ClassParam {
    loop {
        // w − τ(w) is anti-fixed for any w.
        let w = random_elem(rng, alg);
        let a = alg.sub(&w, &alg.tau(&w).expect("shape")).expect("shape");
        let c = random_c(rng, alg, epsilon);
        if let Ok(p) = try_param(epsilon, Mode::Lie, alg, a, c) {
            return p;
        }
    }
}
