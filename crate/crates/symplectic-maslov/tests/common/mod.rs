//! Shared seeded generators for the integration tests: random symplectic
//! group elements (products of standard generators), random lagrangians
//! (transported standard ones), and random Lie algebra elements in block
//! form.
//!
//! Each test binary uses its own subset of these helpers.
#![allow(dead_code)]

use base_field::linalg::{standard_j, Mat};
use base_field::rat::{rat_int, Rat};
use num::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use symplectic_maslov::{Lagrangian, SpElement, SpLieElement, SympSpace};

/// A random invertible n×n matrix with small integer entries.
pub fn random_gl(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    loop {
        let m = Mat::from_fn(n, n, |_, _| rat_int(rng.gen_range(-3..=3)));
        if !m.det().unwrap().is_zero() {
            return m;
        }
    }
}

/// A random symmetric n×n matrix with small integer entries.
pub fn random_symmetric(rng: &mut ChaCha8Rng, n: usize) -> Mat {
    let mut m = Mat::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let v = rat_int(rng.gen_range(-3..=3));
            *m.at_mut(i, j) = v.clone();
            *m.at_mut(j, i) = v;
        }
    }
    m
}

/// [[A, 0], [0, (Aᵀ)⁻¹]] — the Levi generator of Sp(2n).
fn levi_generator(a: &Mat) -> Mat {
    a.block_diag(&a.inverse().unwrap().transpose())
}

/// [[I, B], [0, I]] with B symmetric — the unipotent generator.
fn unipotent_generator(b: &Mat) -> Mat {
    let n = b.rows();
    Mat::from_fn(2 * n, 2 * n, |i, j| {
        if i == j {
            rat_int(1)
        } else if i < n && j >= n {
            b.at(i, j - n).clone()
        } else {
            Rat::zero()
        }
    })
}

/// A random element of Sp(2n), built as a short product of Levi,
/// unipotent, and Weyl (J itself) generators.
pub fn random_sp(rng: &mut ChaCha8Rng, n: usize) -> SpElement {
    let mut m = Mat::identity(2 * n);
    for _ in 0..rng.gen_range(2..=4) {
        let g = match rng.gen_range(0..4) {
            0 => levi_generator(&random_gl(rng, n)),
            1 | 2 => unipotent_generator(&random_symmetric(rng, n)),
            _ => standard_j(n),
        };
        m = m.mul(&g).unwrap();
    }
    SpElement::new(SympSpace::standard(n), m).expect("product of symplectic generators")
}

/// A random element of the Siegel parabolic stabilizing the standard
/// lagrangian: a product of Levi and unipotent generators only.
pub fn random_siegel(rng: &mut ChaCha8Rng, n: usize) -> SpElement {
    let m = levi_generator(&random_gl(rng, n))
        .mul(&unipotent_generator(&random_symmetric(rng, n)))
        .unwrap();
    SpElement::new(SympSpace::standard(n), m).expect("parabolic generators")
}

/// A random lagrangian of the standard 2n-dimensional space.
pub fn random_lagrangian(rng: &mut ChaCha8Rng, n: usize) -> Lagrangian {
    Lagrangian::standard(n)
        .transform(&random_sp(rng, n))
        .unwrap()
}

/// A random element of 𝔰𝔭(2n) with small integer entries, in the block
/// form [[A, B], [C, −Aᵀ]] with B, C symmetric.
pub fn random_sp_lie(rng: &mut ChaCha8Rng, n: usize) -> SpLieElement {
    let a = Mat::from_fn(n, n, |_, _| rat_int(rng.gen_range(-3..=3)));
    let b = random_symmetric(rng, n);
    let c = random_symmetric(rng, n);
    let top = a.hstack(&b).unwrap();
    let bottom = c.hstack(&a.transpose().neg()).unwrap();
    SpLieElement::new(SympSpace::standard(n), top.vstack(&bottom).unwrap())
        .expect("block form lies in the Lie algebra")
}

/// A random invertible element of 𝔰𝔭(2n) with small integer entries.
pub fn random_invertible_sp_lie(rng: &mut ChaCha8Rng, n: usize) -> SpLieElement {
    loop {
        let x = random_sp_lie(rng, n);
        if !x.mat().det().unwrap().is_zero() {
            return x;
        }
    }
}
