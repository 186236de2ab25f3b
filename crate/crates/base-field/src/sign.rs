//! Exact sign (±1) and eighth-root-of-unity groups.

use crate::error::{BaseError, Result};
use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

/// An element of {+1, −1} under multiplication.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(BaseError::invalid(format!("{v} is not ±1"))),
        }
    }

    /// (−1)^k.
    pub fn from_parity(k: i64) -> Sign {
        if k.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// self^k.
    pub fn pow(self, k: i64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::from_parity(k),
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.as_i64())
    }
}

/// An eighth root of unity ζ₈^k, stored as the exponent k mod 8,
/// with ζ₈ = exp(2πi/8).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mu8(u8);

impl Mu8 {
    pub const ONE: Mu8 = Mu8(0);
    /// i = ζ₈².
    pub const I: Mu8 = Mu8(2);
    /// −1 = ζ₈⁴.
    pub const MINUS_ONE: Mu8 = Mu8(4);

    /// ζ₈^k.
    pub fn new(k: i64) -> Mu8 {
        Mu8(k.rem_euclid(8) as u8)
    }

    pub fn exponent(self) -> u8 {
        self.0
    }

    pub fn from_sign(s: Sign) -> Mu8 {
        match s {
            Sign::Plus => Mu8::ONE,
            Sign::Minus => Mu8::MINUS_ONE,
        }
    }

    /// Some(±1) if the value is real, None otherwise.
    pub fn as_sign(self) -> Option<Sign> {
        match self.0 {
            0 => Some(Sign::Plus),
            4 => Some(Sign::Minus),
            _ => None,
        }
    }

    pub fn inv(self) -> Mu8 {
        Mu8::new(-(self.0 as i64))
    }

    pub fn pow(self, k: i64) -> Mu8 {
        Mu8::new(self.0 as i64 * k)
    }

    /// Complex conjugate (same as inverse on roots of unity).
    pub fn conj(self) -> Mu8 {
        self.inv()
    }
}

impl Mul for Mu8 {
    type Output = Mu8;
    // multiplying roots of unity adds their exponents
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Mu8) -> Mu8 {
        Mu8::new(self.0 as i64 + rhs.0 as i64)
    }
}

impl MulAssign for Mu8 {
    fn mul_assign(&mut self, rhs: Mu8) {
        *self = *self * rhs;
    }
}

impl Mul<Sign> for Mu8 {
    type Output = Mu8;
    fn mul(self, rhs: Sign) -> Mu8 {
        self * Mu8::from_sign(rhs)
    }
}

impl fmt::Display for Mu8 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => write!(f, "1"),
            2 => write!(f, "i"),
            4 => write!(f, "-1"),
            6 => write!(f, "-i"),
            k => write!(f, "zeta8^{k}"),
        }
    }
}
