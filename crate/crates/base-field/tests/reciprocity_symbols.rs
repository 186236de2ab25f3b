//! Global reciprocity for the Hilbert symbol over ℚ: the product of the
//! local symbols over the real place and all odd primes equals the 2-adic
//! symbol, which is re-derived here independently through the classical
//! unit/valuation formula. Their product over every place is therefore +1.

use base_field::rat::{rat, Rat};
use base_field::symbols::hilbert;
use base_field::{Place, Sign};
use num::traits::ToPrimitive;
use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

/// Odd primes dividing the numerator or denominator of any of the values.
fn odd_support(values: &[Rat]) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for a in values {
        for big in [a.numer().clone(), a.denom().clone()] {
            let mut n = big
                .abs()
                .to_u64()
                .expect("test values fit in a machine word");
            while n % 2 == 0 {
                n /= 2;
            }
            let mut d = 3u64;
            while d * d <= n {
                while n % d == 0 {
                    out.insert(d);
                    n /= d;
                }
                d += 2;
            }
            if n > 1 {
                out.insert(n);
            }
        }
    }
    out
}

/// The 2-adic Hilbert symbol, computed independently: write a = 2^α·u,
/// b = 2^β·v with u, v odd; then
///   (a,b)₂ = (−1)^{ε(u)ε(v) + α·ω(v) + β·ω(u)},
/// where ε(u) = (u−1)/2 mod 2 and ω(u) = (u²−1)/8 mod 2.
fn two_adic_symbol(a: &Rat, b: &Rat) -> Sign {
    fn split(x: &Rat) -> (i64, i64) {
        let mut alpha = 0i64;
        let mut num = x.numer().to_i64().unwrap();
        let mut den = x.denom().to_i64().unwrap();
        while num % 2 == 0 {
            num /= 2;
            alpha += 1;
        }
        while den % 2 == 0 {
            den /= 2;
            alpha -= 1;
        }
        // The odd square class of x is represented by num·den.
        (alpha, num * den)
    }
    let eps = |u: i64| (u - 1) / 2 % 2 != 0;
    let omega = |u: i64| (u * u - 1) / 8 % 2 != 0;
    let (alpha, u) = split(a);
    let (beta, v) = split(b);
    let mut minus = eps(u) && eps(v);
    if alpha % 2 != 0 && omega(v) {
        minus = !minus;
    }
    if beta % 2 != 0 && omega(u) {
        minus = !minus;
    }
    if minus {
        Sign::Minus
    } else {
        Sign::Plus
    }
}

/// Product of (a,b)_v over the real place and every odd prime in the
/// support of a and b (the symbol is +1 at all other odd primes).
fn product_away_from_two(a: &Rat, b: &Rat) -> Sign {
    let mut out = hilbert(a, b, &Place::real()).unwrap();
    for p in odd_support(&[a.clone(), b.clone()]) {
        out *= hilbert(a, b, &Place::padic(p).unwrap()).unwrap();
    }
    out
}

#[test]
fn two_adic_formula_is_a_symmetric_bimultiplicative_symbol() {
    let mut rng = ChaCha8Rng::seed_from_u64(701);
    let pick = |rng: &mut ChaCha8Rng| loop {
        let v = rat(rng.gen_range(-30i64..=30), rng.gen_range(1i64..=30));
        if !v.is_zero() {
            break v;
        }
    };
    for _ in 0..60 {
        let a = pick(&mut rng);
        let b = pick(&mut rng);
        let c = pick(&mut rng);
        assert_eq!(two_adic_symbol(&a, &b), two_adic_symbol(&b, &a));
        assert_eq!(
            two_adic_symbol(&(a.clone() * c.clone()), &b),
            two_adic_symbol(&a, &b) * two_adic_symbol(&c, &b)
        );
        assert_eq!(two_adic_symbol(&a, &-a.clone()), Sign::Plus);
        assert_eq!(
            two_adic_symbol(&(a.clone() * c.clone() * c.clone()), &b),
            two_adic_symbol(&a, &b)
        );
    }
    // Known 2-adic values: (−1,−1)₂ = −1, (2,5)₂ = −1, (2,7)₂ = +1.
    let m1 = rat(-1, 1);
    assert_eq!(two_adic_symbol(&m1, &m1), Sign::Minus);
    assert_eq!(two_adic_symbol(&rat(2, 1), &rat(5, 1)), Sign::Minus);
    assert_eq!(two_adic_symbol(&rat(2, 1), &rat(7, 1)), Sign::Plus);
}

#[test]
fn product_formula_on_worked_pairs() {
    // (5, 2): the only odd support prime is 5, where 2 is a non-square
    // unit, so (5,2)_5 = −1; the real symbol is +1; the 2-adic symbol is
    // (−1)^{ω(5)} = −1. Total product: +1.
    let a = rat(5, 1);
    let b = rat(2, 1);
    assert_eq!(
        hilbert(&a, &b, &Place::padic(5).unwrap()).unwrap(),
        Sign::Minus
    );
    assert_eq!(two_adic_symbol(&a, &b), Sign::Minus);
    assert_eq!(product_away_from_two(&a, &b) * two_adic_symbol(&a, &b), Sign::Plus);

    // (−1, −1): real symbol −1, 2-adic symbol −1, no odd support.
    let m1 = rat(-1, 1);
    assert_eq!(product_away_from_two(&m1, &m1), Sign::Minus);
    assert_eq!(
        product_away_from_two(&m1, &m1) * two_adic_symbol(&m1, &m1),
        Sign::Plus
    );
}

#[test]
fn hilbert_product_over_all_places_is_trivial() {
    let mut rng = ChaCha8Rng::seed_from_u64(702);
    for _ in 0..150 {
        let mut pick = || loop {
            let v = rat(rng.gen_range(-30i64..=30), rng.gen_range(1i64..=30));
            if !v.is_zero() {
                break v;
            }
        };
        let a = pick();
        let b = pick();
        assert_eq!(
            product_away_from_two(&a, &b) * two_adic_symbol(&a, &b),
            Sign::Plus,
            "a = {a}, b = {b}"
        );
    }
}

#[test]
fn symbols_at_primes_outside_the_support_are_trivial() {
    let mut rng = ChaCha8Rng::seed_from_u64(703);
    let far = Place::padic(31).unwrap();
    for _ in 0..40 {
        let mut pick = || loop {
            let v = rat(rng.gen_range(-29i64..=29), rng.gen_range(1i64..=29));
            if !v.is_zero() {
                break v;
            }
        };
        let (a, b) = (pick(), pick());
        assert_eq!(hilbert(&a, &b, &far).unwrap(), Sign::Plus);
    }
}
