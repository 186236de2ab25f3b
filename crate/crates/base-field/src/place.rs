//! Completions of ℚ: the real place and the p-adic places for odd primes p.

use crate::error::{BaseError, Result};
use std::fmt;

/// Trial-division primality test; sufficient for the moduli used here.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// A place of ℚ supported by this workspace: the real place, or ℚ_p for an
/// odd prime p. Residue characteristic 2 is rejected at construction; the
/// dyadic place enters only through complementarity in product formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Real,
    Padic(u64),
}

impl Place {
    /// The p-adic place for an odd prime.
    pub fn padic(p: u64) -> Result<Place> {
        if p == 2 {
            return Err(BaseError::EvenResidue(2));
        }
        if !is_prime_u64(p) {
            return Err(BaseError::NotPrime(p));
        }
        Ok(Place::Padic(p))
    }

    pub fn real() -> Place {
        Place::Real
    }

    pub fn is_real(&self) -> bool {
        matches!(self, Place::Real)
    }

    pub fn is_padic(&self) -> bool {
        matches!(self, Place::Padic(_))
    }

    pub fn prime(&self) -> Option<u64> {
        match self {
            Place::Real => None,
            Place::Padic(p) => Some(*p),
        }
    }

    /// The residue characteristic, erroring at the real place.
    pub fn residue_char(&self) -> Result<u64> {
        self.prime().ok_or(BaseError::RealPlace)
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Real => write!(f, "R"),
            Place::Padic(p) => write!(f, "Q_{p}"),
        }
    }
}

/// The fixed additive character at a place.
///
/// At an odd p-adic place the character has conductor ℤ_p and is normalized so
/// that the half-pairing Gaussians used by the lattice-model character sums
/// have p-fractional exponent ⟨xw|w⟩ (the metaplectic ½ is folded into the
/// character; this is a unit rescaling of the standard conductor-ℤ_p
/// character and keeps the rank-one index table below exact):
///
/// - γ(⟨u⟩) = 1 for a p-unit u;
/// - γ(⟨pu⟩) = χ(ū)·g_p, where χ is the quadratic character of 𝔽_p and
///   g_p = 1 for p ≡ 1 (mod 4), g_p = i for p ≡ 3 (mod 4);
/// - at the real place γ(⟨a⟩) = ζ₈^{sign a}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PsiSpec {
    pub place: Place,
}

impl PsiSpec {
    pub fn at(place: Place) -> PsiSpec {
        PsiSpec { place }
    }
}

impl fmt::Display for PsiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "psi({})", self.place)
    }
}
