//! Special cyclotomic values: quadratic Gauss sums, exact √p, values of the
//! p-adic additive character, and recognition of eighth roots of unity.

use crate::cyc::CycNum;
use crate::error::{CycError, Result};
use base_field::rat::{inv_mod, mod_p_int, vp, Int, Rat};
use base_field::Mu8;
use num::Zero;
use num_integer::Integer;

/// The quadratic Gauss sum g_p = Σ_{t mod p} ζ_p^{t²} (p an odd prime).
/// Its value is √p when p ≡ 1 (mod 4) and i·√p when p ≡ 3 (mod 4).
pub fn gauss_sum(p: u64) -> Result<CycNum> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(CycError::invalid(format!("gauss_sum needs an odd prime, got {p}")));
    }
    CycNum::from_terms(p, (0..p).map(|t| ((t * t) % p, Rat::from_integer(1.into()))))
}

/// ζ_8^k as a cyclotomic number at a level divisible by 8 (the level is
/// raised to lcm(level, 8) as needed).
pub fn mu8_cyc(m: Mu8, level: u64) -> Result<CycNum> {
    let l = num_integer::lcm(level, 8);
    CycNum::root_of_unity(l, m.exponent() as u64 * (l / 8))
}

/// Exact positive √p as a cyclotomic number of level 8p: ε_p^{−1}·g_p with
/// ε_p = 1 for p ≡ 1 (mod 4) and ε_p = i for p ≡ 3 (mod 4).
pub fn sqrt_p(p: u64) -> Result<CycNum> {
    let g = gauss_sum(p)?;
    if p % 4 == 1 {
        g.raise(8 * p)
    } else {
        g.mul(&mu8_cyc(Mu8::I.inv(), 8 * p)?)
    }
}

/// √p raised to a nonnegative power k, at level 8p for odd k and level p
/// (or 1) for even k.
pub fn sqrt_p_pow(p: u64, k: u32) -> Result<CycNum> {
    let whole = Rat::from_integer(Int::from(p).pow(k / 2));
    let base = CycNum::from_rat(1, &whole)?;
    if k.is_multiple_of(2) {
        Ok(base)
    } else {
        sqrt_p(p)?.mul(&base)
    }
}

/// x mod m for a rational with denominator coprime to m (m odd).
fn mod_m_rat(x: &Rat, m: u64) -> Result<u64> {
    let n = mod_p_int(x.numer(), m);
    let d = mod_p_int(x.denom(), m);
    if num_integer::gcd(d, m) != 1 {
        return Err(CycError::invalid(
            "denominator shares a factor with the modulus".to_string(),
        ));
    }
    Ok(((n as u128 * inv_mod(d, m) as u128) % m as u128) as u64)
}

/// e^{2πi·{y}_p}: the p-fractional part {y}_p ∈ [0,1) is the unique
/// rational with p-power denominator such that y − {y}_p is p-integral;
/// the value is the root of unity ζ_{p^m}^a where {y}_p = a/p^m.
pub fn e_p_frac(y: &Rat, p: u64) -> Result<CycNum> {
    if y.is_zero() {
        return CycNum::one(1);
    }
    let v = vp(y, p).map_err(CycError::from)?;
    if v >= 0 {
        return CycNum::one(1);
    }
    let m = (-v) as u32;
    let q = p.checked_pow(m).ok_or_else(|| {
        CycError::invalid(format!("character level p^{m} overflows at p = {p}"))
    })?;
    // y·p^m has p-free denominator; reduce it mod p^m.
    let scaled = y * Rat::from_integer(Int::from(p).pow(m));
    debug_assert!(scaled.denom().mod_floor(&Int::from(p)) != Int::from(0));
    let a = mod_m_rat(&scaled, q)?;
    CycNum::root_of_unity(q, a)
}

/// The fixed additive character of ℚ_p used throughout this workspace:
/// ψ(y) = e^{2πi·{2y}_p}. It is trivial on ℤ_p and nontrivial on p^{−1}ℤ_p.
pub fn psi_value(y: &Rat, p: u64) -> Result<CycNum> {
    e_p_frac(&(y * Rat::from_integer(2.into())), p)
}

/// Recognize a cyclotomic number as an eighth root of unity, if it is one.
pub fn as_mu8(z: &CycNum) -> Result<Option<Mu8>> {
    for k in 0..8i64 {
        let cand = mu8_cyc(Mu8::new(k), z.level())?;
        if *z == cand {
            return Ok(Some(Mu8::new(k)));
        }
    }
    Ok(None)
}
