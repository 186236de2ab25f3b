//! Coefficient fields for the factors of an étale algebra with involution.
//!
//! Each factor of such an algebra is either a split double `K# × K#` or a
//! quadratic extension `K#(√d)` of a field `K#`, and this module provides
//! the three kinds of `K#` that occur over a local base field:
//!
//! - finite extensions of ℚ_p for odd p ([`SharpField::Padic`], backed by
//!   exact tower arithmetic);
//! - the real field, with elements stored as exact rationals;
//! - the complex field, with elements stored as exact rational pairs
//!   (re, im) — enough to carry eigenvalue data of archimedean classes.

use base_field::rat::Rat;
use base_field::{BaseError, ExtElem, ExtField, Mat, Place, Result, Sign};
use num::{One, Signed, Zero};

/// A field usable as the fixed field K# of one factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SharpField {
    /// A finite extension of ℚ_p (odd p).
    Padic(ExtField),
    /// The real field ℝ; elements are exact rationals.
    Real,
    /// The complex field ℂ; elements are exact rational pairs (re, im).
    Complex,
}

/// An element of a [`SharpField`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SharpElem {
    Padic(ExtElem),
    Real(Rat),
    Complex(Rat, Rat),
}

impl SharpField {
    /// The place of the base field F under this coefficient field.
    pub fn place(&self) -> Place {
        match self {
            SharpField::Padic(ext) => Place::Padic(ext.p()),
            SharpField::Real | SharpField::Complex => Place::Real,
        }
    }

    /// Degree over the base field F (ℝ for the archimedean kinds).
    pub fn degree(&self) -> usize {
        match self {
            SharpField::Padic(ext) => ext.degree(),
            SharpField::Real => 1,
            SharpField::Complex => 2,
        }
    }

    pub fn zero(&self) -> SharpElem {
        match self {
            SharpField::Padic(ext) => SharpElem::Padic(ext.zero()),
            SharpField::Real => SharpElem::Real(Rat::zero()),
            SharpField::Complex => SharpElem::Complex(Rat::zero(), Rat::zero()),
        }
    }

    pub fn one(&self) -> SharpElem {
        match self {
            SharpField::Padic(ext) => SharpElem::Padic(ext.one()),
            SharpField::Real => SharpElem::Real(Rat::one()),
            SharpField::Complex => SharpElem::Complex(Rat::one(), Rat::zero()),
        }
    }

    pub fn from_rat(&self, c: &Rat) -> SharpElem {
        match self {
            SharpField::Padic(ext) => SharpElem::Padic(ext.from_rat(c)),
            SharpField::Real => SharpElem::Real(c.clone()),
            SharpField::Complex => SharpElem::Complex(c.clone(), Rat::zero()),
        }
    }

    pub fn from_i64(&self, c: i64) -> SharpElem {
        self.from_rat(&Rat::from_integer(c.into()))
    }

    /// Whether `x` structurally belongs to this field.
    pub fn matches(&self, x: &SharpElem) -> bool {
        match (self, x) {
            (SharpField::Padic(ext), SharpElem::Padic(v)) => {
                v.coords.len() == ext.ramification()
                    && v.coords.iter().all(|row| row.len() == ext.residue_degree())
            }
            (SharpField::Real, SharpElem::Real(_)) => true,
            (SharpField::Complex, SharpElem::Complex(_, _)) => true,
            _ => false,
        }
    }

    fn check(&self, x: &SharpElem) -> Result<()> {
        if self.matches(x) {
            Ok(())
        } else {
            Err(BaseError::invalid("element does not belong to this coefficient field"))
        }
    }

    pub fn is_zero(&self, x: &SharpElem) -> Result<bool> {
        self.check(x)?;
        Ok(match x {
            SharpElem::Padic(v) => v.coords.iter().flatten().all(|c| c.is_zero()),
            SharpElem::Real(r) => r.is_zero(),
            SharpElem::Complex(re, im) => re.is_zero() && im.is_zero(),
        })
    }

    pub fn add(&self, x: &SharpElem, y: &SharpElem) -> Result<SharpElem> {
        self.check(x)?;
        self.check(y)?;
        Ok(match (self, x, y) {
            (SharpField::Padic(ext), SharpElem::Padic(a), SharpElem::Padic(b)) => {
                SharpElem::Padic(ext.add(a, b))
            }
            (SharpField::Real, SharpElem::Real(a), SharpElem::Real(b)) => SharpElem::Real(a + b),
            (SharpField::Complex, SharpElem::Complex(ar, ai), SharpElem::Complex(br, bi)) => {
                SharpElem::Complex(ar + br, ai + bi)
            }
            _ => unreachable!("shapes checked"),
        })
    }

    pub fn neg(&self, x: &SharpElem) -> Result<SharpElem> {
        self.check(x)?;
        Ok(match (self, x) {
            (SharpField::Padic(ext), SharpElem::Padic(a)) => SharpElem::Padic(ext.neg(a)),
            (SharpField::Real, SharpElem::Real(a)) => SharpElem::Real(-a),
            (SharpField::Complex, SharpElem::Complex(re, im)) => SharpElem::Complex(-re, -im),
            _ => unreachable!("shapes checked"),
        })
    }

    pub fn sub(&self, x: &SharpElem, y: &SharpElem) -> Result<SharpElem> {
        self.add(x, &self.neg(y)?)
    }

    pub fn mul(&self, x: &SharpElem, y: &SharpElem) -> Result<SharpElem> {
        self.check(x)?;
        self.check(y)?;
        Ok(match (self, x, y) {
            (SharpField::Padic(ext), SharpElem::Padic(a), SharpElem::Padic(b)) => {
                SharpElem::Padic(ext.mul(a, b))
            }
            (SharpField::Real, SharpElem::Real(a), SharpElem::Real(b)) => SharpElem::Real(a * b),
            (SharpField::Complex, SharpElem::Complex(ar, ai), SharpElem::Complex(br, bi)) => {
                SharpElem::Complex(ar * br - ai * bi, ar * bi + ai * br)
            }
            _ => unreachable!("shapes checked"),
        })
    }

    pub fn scale(&self, s: &Rat, x: &SharpElem) -> Result<SharpElem> {
        self.mul(&self.from_rat(s), x)
    }

    pub fn inverse(&self, x: &SharpElem) -> Result<SharpElem> {
        if self.is_zero(x)? {
            return Err(BaseError::invalid("inverse of zero"));
        }
        Ok(match (self, x) {
            (SharpField::Padic(ext), SharpElem::Padic(a)) => SharpElem::Padic(ext.inverse(a)?),
            (SharpField::Real, SharpElem::Real(a)) => SharpElem::Real(Rat::one() / a),
            (SharpField::Complex, SharpElem::Complex(re, im)) => {
                let n = re * re + im * im;
                SharpElem::Complex(re / &n, -im / &n)
            }
            _ => unreachable!("shapes checked"),
        })
    }

    /// Trace of `x` to the base field F, as an exact rational.
    pub fn trace_to_f(&self, x: &SharpElem) -> Result<Rat> {
        self.check(x)?;
        Ok(match (self, x) {
            (SharpField::Padic(ext), SharpElem::Padic(a)) => ext.trace_to_base(a),
            (SharpField::Real, SharpElem::Real(a)) => a.clone(),
            (SharpField::Complex, SharpElem::Complex(re, _)) => re + re,
            _ => unreachable!("shapes checked"),
        })
    }

    /// Norm of `x` to the base field F, as an exact rational.
    pub fn norm_to_f(&self, x: &SharpElem) -> Result<Rat> {
        self.check(x)?;
        Ok(match (self, x) {
            (SharpField::Padic(ext), SharpElem::Padic(a)) => ext.norm_to_base(a),
            (SharpField::Real, SharpElem::Real(a)) => a.clone(),
            (SharpField::Complex, SharpElem::Complex(re, im)) => re * re + im * im,
            _ => unreachable!("shapes checked"),
        })
    }

    /// Multiplication by `x` as a matrix on the F-basis of this field.
    pub fn mult_matrix(&self, x: &SharpElem) -> Result<Mat> {
        self.check(x)?;
        Ok(match (self, x) {
            (SharpField::Padic(ext), SharpElem::Padic(a)) => ext.mult_matrix(a),
            (SharpField::Real, SharpElem::Real(a)) => {
                Mat::from_fn(1, 1, |_, _| a.clone())
            }
            (SharpField::Complex, SharpElem::Complex(re, im)) => Mat::from_fn(2, 2, |i, j| {
                // basis {1, i}: multiplication by re + im·i
                match (i, j) {
                    (0, 0) | (1, 1) => re.clone(),
                    (0, 1) => -im.clone(),
                    _ => im.clone(),
                }
            }),
            _ => unreachable!("shapes checked"),
        })
    }

    /// The F-basis used by [`Self::mult_matrix`], as field elements.
    pub fn basis(&self) -> Vec<SharpElem> {
        match self {
            SharpField::Padic(ext) => {
                let d = ext.degree();
                (0..d)
                    .map(|k| {
                        let mut flat = vec![Rat::zero(); d];
                        flat[k] = Rat::one();
                        SharpElem::Padic(ext.from_flat(&flat).expect("sized"))
                    })
                    .collect()
            }
            SharpField::Real => vec![SharpElem::Real(Rat::one())],
            SharpField::Complex => vec![
                SharpElem::Complex(Rat::one(), Rat::zero()),
                SharpElem::Complex(Rat::zero(), Rat::one()),
            ],
        }
    }

    /// Whether nonzero `x` is a square in this field.
    pub fn is_square(&self, x: &SharpElem) -> Result<bool> {
        if self.is_zero(x)? {
            return Err(BaseError::invalid("square class of zero"));
        }
        Ok(match (self, x) {
            (SharpField::Padic(ext), SharpElem::Padic(a)) => ext.is_square(a)?,
            (SharpField::Real, SharpElem::Real(a)) => a.is_positive(),
            (SharpField::Complex, _) => true,
            _ => unreachable!("shapes checked"),
        })
    }

    /// The quadratic Hilbert symbol (a, b) of this field.
    pub fn hilbert(&self, a: &SharpElem, b: &SharpElem) -> Result<Sign> {
        if self.is_zero(a)? || self.is_zero(b)? {
            return Err(BaseError::invalid("Hilbert symbol of zero"));
        }
        Ok(match (self, a, b) {
            (SharpField::Padic(ext), SharpElem::Padic(x), SharpElem::Padic(y)) => {
                ext.hilbert(x, y)?
            }
            (SharpField::Real, SharpElem::Real(x), SharpElem::Real(y)) => {
                if x.is_negative() && y.is_negative() {
                    Sign::Minus
                } else {
                    Sign::Plus
                }
            }
            (SharpField::Complex, _, _) => Sign::Plus,
            _ => unreachable!("shapes checked"),
        })
    }

    /// An element s with (s, d) = −1, i.e. a non-norm for the quadratic
    /// extension attached to the non-square d.
    pub fn non_norm_for(&self, d: &SharpElem) -> Result<SharpElem> {
        if self.is_square(d)? {
            return Err(BaseError::invalid("non-norm requested for a square"));
        }
        match self {
            SharpField::Padic(ext) => {
                let u = SharpElem::Padic(ext.nonsquare_unit());
                let pi = SharpElem::Padic(ext.uniformizer());
                let upi = self.mul(&u, &pi)?;
                for cand in [u, pi, upi] {
                    if self.hilbert(&cand, d)? == Sign::Minus {
                        return Ok(cand);
                    }
                }
                Err(BaseError::invalid(
                    "no non-norm among the square-class representatives",
                ))
            }
            SharpField::Real => Ok(SharpElem::Real(-Rat::one())),
            SharpField::Complex => Err(BaseError::invalid("the complex field has no non-norms")),
        }
    }
}
