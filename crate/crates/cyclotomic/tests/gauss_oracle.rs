//! Gauss sums and the additive character, cross-checked two independent
//! ways:
//!
//! 1. the classical evaluation g_p² = χ(−1)·p and the exact √p construction;
//! 2. a normalized character-sum oracle: summing ψ(a·x²/2) over shrinking
//!    cosets reproduces the rank-one index table exactly — the sum
//!    p^{−m}·Σ_{y mod p^{2m}} e^{2πi{a·y²/p^{2m}}_p} equals 1 for units a
//!    and χ(ū)·ε_p·√p for v(a) = 1, which pins both the index table and
//!    the character normalization to each other.

use base_field::rat::{rat, rat_int, Rat};
use base_field::symbols::weil_index_rank1;
use base_field::{Mu8, Place, Sign};
use cyclotomic::{as_mu8, e_p_frac, gauss_sum, mu8_cyc, psi_value, sqrt_p, sqrt_p_pow, CycNum};
use num::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn chi(u: u64, p: u64) -> Sign {
    let mut t = 1u64;
    for _ in 0..(p - 1) / 2 {
        t = (t * (u % p)) % p;
    }
    if t == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn smallest_nonresidue(p: u64) -> u64 {
    (2..p).find(|&r| chi(r, p) == Sign::Minus).unwrap()
}

#[test]
fn gauss_sum_squares_to_chi_minus_one_times_p() {
    for p in [3u64, 5, 7, 11, 13] {
        let g = gauss_sum(p).unwrap();
        let expect = match chi(p - 1, p) {
            Sign::Plus => rat_int(p as i64),
            Sign::Minus => rat_int(-(p as i64)),
        };
        assert_eq!(g.pow(2).unwrap(), CycNum::from_rat(p, &expect).unwrap());
        // |g_p|² = p always.
        assert_eq!(
            g.abs_square(),
            CycNum::from_rat(p, &rat_int(p as i64)).unwrap()
        );
    }
}

#[test]
fn sqrt_p_is_an_exact_positive_square_root() {
    for p in [3u64, 5, 7, 11, 13] {
        let s = sqrt_p(p).unwrap();
        assert_eq!(
            s.pow(2).unwrap(),
            CycNum::from_rat(1, &rat_int(p as i64)).unwrap()
        );
        // Positivity: √p is fixed by complex conjugation (real), and the
        // chosen root is the one with g_p = ε_p·√p, Gauss's positive root.
        assert_eq!(s.conj(), s);
        // Powers: (√p)^{2k+1} = p^k·√p.
        assert_eq!(
            sqrt_p_pow(p, 5).unwrap(),
            s.mul(&CycNum::from_rat(1, &rat_int((p * p) as i64)).unwrap())
                .unwrap()
        );
        assert_eq!(
            sqrt_p_pow(p, 4).unwrap(),
            CycNum::from_rat(1, &rat_int((p * p) as i64)).unwrap()
        );
    }
}

/// The normalized coset sum p^{−m}·Σ_{y mod p^{2m}} e^{2πi{a·y²/p^{2m}}_p}.
/// Since {a·y²/q}_p = (a·y² mod q)/q, each term is ζ_q^{a·y² mod q}; the
/// whole sum canonicalizes once.
fn coset_sum(a: i64, p: u64, m: u32) -> CycNum {
    let q = p.pow(2 * m);
    let a_mod = a.rem_euclid(q as i64) as u64;
    let s = CycNum::from_terms(
        q,
        (0..q).map(|y| ((a_mod * ((y * y) % q)) % q, Rat::one())),
    )
    .unwrap();
    s.scale(&rat(1, p.pow(m) as i64))
}

#[test]
fn coset_sum_exponents_match_the_character_definition() {
    // At a small level, rebuilding the sum through e_p_frac term by term
    // gives the same value as the direct exponent formula.
    let (p, m) = (3u64, 1u32);
    let q = p.pow(2 * m);
    for a in [1i64, 2, 3, 6, -5] {
        let mut acc = CycNum::zero(1).unwrap();
        for y in 0..q {
            let v = rat(a, 1) * rat((y * y) as i64, 1) / rat(q as i64, 1);
            acc = acc.add(&e_p_frac(&v, p).unwrap()).unwrap();
        }
        assert_eq!(acc.scale(&rat(1, p.pow(m) as i64)), coset_sum(a, p, m));
    }
}

#[test]
fn coset_sums_reproduce_the_rank_one_index_table() {
    for p in [3u64, 5, 7, 11] {
        let place = Place::padic(p).unwrap();
        let r = smallest_nonresidue(p) as i64;
        for m in [1u32, 2] {
            if p == 11 && m == 2 {
                continue; // covered at m = 1; keep the suite quick
            }
            // Units: the normalized sum is exactly 1.
            for a in [1i64, r] {
                let s = coset_sum(a, p, m);
                assert_eq!(
                    s,
                    CycNum::one(1).unwrap(),
                    "unit a = {a}, p = {p}, m = {m}"
                );
                assert_eq!(
                    weil_index_rank1(&rat_int(a), &place).unwrap(),
                    Mu8::ONE
                );
            }
            // Valuation one: the normalized sum is γ(⟨a⟩)·√p exactly.
            for u in [1i64, r] {
                let a = p as i64 * u;
                let s = coset_sum(a, p, m);
                let gamma = weil_index_rank1(&rat_int(a), &place).unwrap();
                let expect = mu8_cyc(gamma, 8 * p)
                    .unwrap()
                    .mul(&sqrt_p(p).unwrap())
                    .unwrap();
                assert_eq!(s, expect, "a = {a}, p = {p}, m = {m}");
            }
        }
    }
}

#[test]
fn additive_character_properties() {
    let mut rng = ChaCha8Rng::seed_from_u64(401);
    for p in [3u64, 5, 7] {
        // ψ is trivial exactly on Z_p (p odd).
        assert_eq!(psi_value(&rat_int(3), p).unwrap(), CycNum::one(1).unwrap());
        assert_eq!(
            psi_value(&rat(1, 11 * 13), p).unwrap(),
            CycNum::one(1).unwrap()
        );
        let at_1_over_p = psi_value(&rat(1, p as i64), p).unwrap();
        assert_eq!(at_1_over_p, CycNum::root_of_unity(p, 2).unwrap());
        assert!(!at_1_over_p.is_zero());
        // Character law ψ(y₁+y₂) = ψ(y₁)ψ(y₂) on seeded rationals with
        // p-power denominators.
        for _ in 0..20 {
            let y1 = rat(
                rng.gen_range(-30i64..=30),
                (p as i64).pow(rng.gen_range(0..=3)),
            );
            let y2 = rat(
                rng.gen_range(-30i64..=30),
                (p as i64).pow(rng.gen_range(0..=3)),
            );
            let lhs = psi_value(&(&y1 + &y2), p).unwrap();
            let rhs = psi_value(&y1, p)
                .unwrap()
                .mul(&psi_value(&y2, p).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
        // e_p_frac ignores the prime-to-p part of the denominator shift:
        // e_p_frac(y + integer) = e_p_frac(y).
        for _ in 0..10 {
            let y = rat(rng.gen_range(-30i64..=30), (p as i64).pow(2));
            let shifted = &y + rat_int(rng.gen_range(-5..=5));
            assert_eq!(
                e_p_frac(&y, p).unwrap(),
                e_p_frac(&shifted, p).unwrap()
            );
        }
    }
}

#[test]
fn mu8_recognition_roundtrip() {
    for k in 0..8i64 {
        let m = Mu8::new(k);
        for level in [8u64, 24, 40] {
            let z = mu8_cyc(m, level).unwrap();
            assert_eq!(as_mu8(&z).unwrap(), Some(m));
        }
    }
    // Non-roots are not recognized.
    let z = CycNum::from_rat(8, &rat(1, 2)).unwrap();
    assert_eq!(as_mu8(&z).unwrap(), None);
    let g = gauss_sum(5).unwrap();
    assert_eq!(as_mu8(&g).unwrap(), None);
    // Mu8 multiplication matches cyclotomic multiplication.
    for a in 0..8i64 {
        for b in 0..8i64 {
            let lhs = mu8_cyc(Mu8::new(a) * Mu8::new(b), 8).unwrap();
            let rhs = mu8_cyc(Mu8::new(a), 8)
                .unwrap()
                .mul(&mu8_cyc(Mu8::new(b), 8).unwrap())
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn conjugating_psi_inverts_it() {
    // ψ(−y) = ψ(y)̄ for y with p-power denominator.
    let mut rng = ChaCha8Rng::seed_from_u64(402);
    for p in [3u64, 5] {
        for _ in 0..15 {
            let y = rat(
                rng.gen_range(-40i64..=40),
                (p as i64).pow(rng.gen_range(1..=3)),
            );
            let psi = psi_value(&y, p).unwrap();
            let psi_neg = psi_value(&-y.clone(), p).unwrap();
            assert_eq!(psi.conj(), psi_neg);
            assert!(psi.abs_square() == CycNum::one(1).unwrap() || y.is_zero());
        }
    }
}
