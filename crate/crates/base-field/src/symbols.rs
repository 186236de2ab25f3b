//! Quadratic symbols of ℚ at one place: valuations, square classes, the
//! Hilbert symbol, and the rank-one Weil index attached to the fixed
//! additive character of the place (see [`crate::place::PsiSpec`]).

use crate::error::{BaseError, Result};
use crate::fq::fp_pow;
use crate::place::Place;
use crate::rat::{residue_unit_rat, vp, Rat};
use crate::sign::{Mu8, Sign};
use num::Zero;

/// Valuation of a nonzero rational at the place: the p-adic valuation at
/// Q_p, and 0 at R (where only the sign matters).
pub fn valuation(a: &Rat, place: &Place) -> Result<i64> {
    if a.is_zero() {
        return Err(BaseError::ZeroValuation);
    }
    match place {
        Place::Real => Ok(0),
        Place::Padic(p) => vp(a, *p),
    }
}

/// Quadratic character of the residue field 𝔽_p on a unit residue.
fn chi_p(u: u64, p: u64) -> Sign {
    let t = fp_pow(u % p, (p - 1) / 2, p);
    if t == 1 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// Whether a nonzero rational is a square in the completion at the place.
pub fn is_square(a: &Rat, place: &Place) -> Result<bool> {
    if a.is_zero() {
        return Err(BaseError::ZeroValuation);
    }
    match place {
        Place::Real => Ok(a > &Rat::zero()),
        Place::Padic(p) => {
            let v = vp(a, *p)?;
            if v.rem_euclid(2) != 0 {
                return Ok(false);
            }
            let u = residue_unit_rat(a, *p)?;
            Ok(chi_p(u, *p) == Sign::Plus)
        }
    }
}

/// Whether two nonzero rationals lie in the same square class of the
/// completion.
pub fn square_class_eq(a: &Rat, b: &Rat, place: &Place) -> Result<bool> {
    is_square(&(a * b), place)
}

/// Hilbert symbol (a, b) at the place, for nonzero rationals.
///
/// At R it is −1 exactly when both arguments are negative. At Q_p (p odd)
/// the tame formula applies: writing a = p^α·u, b = p^β·w with u, w units,
/// (a,b) = χ(−1)^{αβ} · χ(ū)^β · χ(w̄)^α.
pub fn hilbert(a: &Rat, b: &Rat, place: &Place) -> Result<Sign> {
    if a.is_zero() || b.is_zero() {
        return Err(BaseError::ZeroValuation);
    }
    match place {
        Place::Real => {
            if a < &Rat::zero() && b < &Rat::zero() {
                Ok(Sign::Minus)
            } else {
                Ok(Sign::Plus)
            }
        }
        Place::Padic(p) => {
            let alpha = vp(a, *p)?;
            let beta = vp(b, *p)?;
            let ua = residue_unit_rat(a, *p)?;
            let ub = residue_unit_rat(b, *p)?;
            let mut s = chi_p(p - 1, *p).pow(alpha * beta);
            s *= chi_p(ua, *p).pow(beta);
            s *= chi_p(ub, *p).pow(alpha);
            Ok(s)
        }
    }
}

/// Rank-one Weil index γ_ψ(⟨a⟩) ∈ μ₈ for nonzero rational a, with respect
/// to the fixed additive character of the place ([`crate::place::PsiSpec`]):
///
/// at Q_p (p odd):  γ(⟨u⟩) = 1 for a unit u, and
///                  γ(⟨p·u⟩) = χ(ū)·g_p with g_p = 1 if p ≡ 1 (mod 4),
///                  g_p = i if p ≡ 3 (mod 4);
/// at R:            γ(⟨a⟩) = ζ₈^{sign a}.
///
/// Odd/even valuation only matters through parity: γ(⟨ac²⟩) = γ(⟨a⟩).
pub fn weil_index_rank1(a: &Rat, place: &Place) -> Result<Mu8> {
    if a.is_zero() {
        return Err(BaseError::ZeroValuation);
    }
    match place {
        Place::Real => {
            if a > &Rat::zero() {
                Ok(Mu8::new(1))
            } else {
                Ok(Mu8::new(7))
            }
        }
        Place::Padic(p) => {
            let v = vp(a, *p)?;
            if v.rem_euclid(2) == 0 {
                return Ok(Mu8::ONE);
            }
            let u = residue_unit_rat(a, *p)?;
            let g = if p % 4 == 1 { Mu8::ONE } else { Mu8::I };
            Ok(g * chi_p(u, *p))
        }
    }
}

/// γ_ψ(1)·γ_ψ(ab) = γ_ψ(a)·γ_ψ(b)·(a,b) — the defining cocycle relation,
/// exposed for property tests and consistency checks.
pub fn weil_cocycle_check(a: &Rat, b: &Rat, place: &Place) -> Result<bool> {
    let lhs = weil_index_rank1(&Rat::from_integer(1.into()), place)? * weil_index_rank1(&(a * b), place)?;
    let rhs = weil_index_rank1(a, place)? * weil_index_rank1(b, place)? * hilbert(a, b, place)?;
    Ok(lhs == rhs)
}
