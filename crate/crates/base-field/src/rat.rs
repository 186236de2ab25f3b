//! Exact rational scalars with p-adic bookkeeping.

use crate::error::{BaseError, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Signed, Zero};
use num_traits::ToPrimitive;

pub type Int = BigInt;
pub type Rat = BigRational;

/// `n` as a big integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

/// `n/d` as a rational. Panics if `d == 0`; intended for literal constants.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

/// Parse `"a"` or `"a/b"` (optional sign, arbitrary precision).
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    let bad = || BaseError::BadRational(s.to_string());
    let mut parts = t.splitn(2, '/');
    let num_str = parts.next().ok_or_else(bad)?.trim();
    let num: Int = num_str.parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rat::from_integer(num)),
        Some(d) => {
            let den: Int = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// Format as `"a"` or `"a/b"` (lowest terms, denominator positive).
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// p-adic valuation of a nonzero integer.
pub fn vp_int(n: &Int, p: u64) -> i64 {
    assert!(!n.is_zero(), "vp_int of zero");
    let pb = Int::from(p);
    let mut m = n.clone();
    let mut v = 0i64;
    loop {
        let (q, r) = m.div_rem(&pb);
        if r.is_zero() {
            m = q;
            v += 1;
        } else {
            return v;
        }
    }
}

/// p-adic valuation of a nonzero rational.
pub fn vp(x: &Rat, p: u64) -> Result<i64> {
    if x.is_zero() {
        return Err(BaseError::ZeroValuation);
    }
    Ok(vp_int(x.numer(), p) - vp_int(x.denom(), p))
}

/// Whether `x` lies in ℤ_(p) (denominator prime to p). Zero counts as integral.
pub fn is_p_integral(x: &Rat, p: u64) -> bool {
    x.is_zero() || vp_int(x.denom(), p) == 0
}

/// Nonnegative representative of an integer mod p.
pub fn mod_p_int(n: &Int, p: u64) -> u64 {
    let r = n.mod_floor(&Int::from(p));
    r.to_u64().expect("mod_floor result fits in u64")
}

/// Modular inverse of `a` mod `p` (p prime, a ≢ 0).
pub fn inv_mod(a: u64, p: u64) -> u64 {
    let a = a % p;
    assert!(a != 0, "inv_mod of zero");
    // Extended Euclid on (a, p).
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r2 = r0 - q * r1;
        let s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    debug_assert_eq!(r0, 1);
    (s0.rem_euclid(p as i128)) as u64
}

/// `x mod p` for a p-integral rational: numer·denom^{-1} in 𝔽_p.
pub fn mod_p(x: &Rat, p: u64) -> Result<u64> {
    if !is_p_integral(x, p) {
        return Err(BaseError::NotIntegral {
            p,
            what: format_rat(x),
        });
    }
    if x.is_zero() {
        return Ok(0);
    }
    let n = mod_p_int(x.numer(), p);
    let d = mod_p_int(x.denom(), p);
    Ok((n as u128 * inv_mod(d, p) as u128 % p as u128) as u64)
}

/// p^k as a rational (k may be negative).
pub fn pow_rat(p: u64, k: i64) -> Rat {
    let pk = Int::from(p).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        Rat::from_integer(pk)
    } else {
        Rat::new(Int::one(), pk)
    }
}

/// Split a nonzero rational as (v, u) with x = p^v·u and u a p-unit.
pub fn unit_part(x: &Rat, p: u64) -> Result<(i64, Rat)> {
    let v = vp(x, p)?;
    Ok((v, x / pow_rat(p, v)))
}

/// Residue in 𝔽_p of the p-unit part of a nonzero rational.
pub fn residue_unit_rat(x: &Rat, p: u64) -> Result<u64> {
    let (_, u) = unit_part(x, p)?;
    mod_p(&u, p)
}

/// Sign of a nonzero rational (+1 / −1) as an i64.
pub fn sign_i64(x: &Rat) -> i64 {
    if x.is_positive() {
        1
    } else {
        -1
    }
}
