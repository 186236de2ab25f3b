//! Étale algebras with involution over a local base field.
//!
//! An algebra K is an ordered product of factors, each built over a
//! coefficient field K# ([`SharpField`]) in one of two shapes:
//!
//! - **split**: K_i = K# × K#, involution swapping the two coordinates;
//! - **inert**: K_i = K#(√d) for a non-square d, involution √d ↦ −√d.
//!
//! Elements store one coordinate pair per factor — the two split slots,
//! or (x, y) meaning x + y√d.  The fixed subalgebra K# of the involution
//! embeds as the diagonal (split) or the first coordinate (inert).
//!
//! The sign character sgn_{K/K#} on τ-fixed invertible elements is the
//! product over inert factors of the Hilbert symbols (t_i, d_i) of the
//! coefficient fields; split factors contribute +1.

use crate::field::{SharpElem, SharpField};
use base_field::rat::Rat;
use base_field::{BaseError, Mat, Place, Result, Sign};
use num::{One, Zero};

/// The shape of one factor of the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorKind {
    /// K# × K# with the swap involution.
    Split,
    /// K#(√d) for the stored non-square d, with √d ↦ −√d.
    Inert(SharpElem),
}

/// One factor: a coefficient field together with a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub sharp: SharpField,
    pub kind: FactorKind,
}

impl Factor {
    pub fn split(sharp: SharpField) -> Factor {
        Factor {
            sharp,
            kind: FactorKind::Split,
        }
    }

    pub fn inert(sharp: SharpField, d: SharpElem) -> Factor {
        Factor {
            sharp,
            kind: FactorKind::Inert(d),
        }
    }

    /// Dimension of this factor over the base field F.
    pub fn dim_f(&self) -> usize {
        2 * self.sharp.degree()
    }
}

/// An étale algebra with involution over a local base field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaleAlg {
    place: Place,
    factors: Vec<Factor>,
}

/// An element of an [`EtaleAlg`]: one coordinate pair per factor.
///
/// For a split factor the pair is the two components; for an inert factor
/// the pair (x, y) means x + y√d.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EtaleElem {
    pub components: Vec<(SharpElem, SharpElem)>,
}

impl EtaleAlg {
    /// Build an algebra from factors over a common base place.  Each inert
    /// d must be a non-square of its coefficient field (so the complex
    /// field admits no inert factors), and every factor must live over the
    /// given place.
    pub fn new(place: Place, factors: Vec<Factor>) -> Result<EtaleAlg> {
        for f in &factors {
            if f.sharp.place() != place {
                return Err(BaseError::invalid(
                    "factor coefficient field lives over a different place",
                ));
            }
            if let FactorKind::Inert(d) = &f.kind {
                if !f.sharp.matches(d) {
                    return Err(BaseError::invalid("inert datum outside its coefficient field"));
                }
                if f.sharp.is_square(d)? {
                    return Err(BaseError::invalid("inert datum must be a non-square"));
                }
            }
        }
        Ok(EtaleAlg { place, factors })
    }

    pub fn place(&self) -> Place {
        self.place
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn num_factors(&self) -> usize {
        self.factors.len()
    }

    /// Dimension of K over the base field F (always even).
    pub fn dim_f(&self) -> usize {
        self.factors.iter().map(Factor::dim_f).sum()
    }

    /// Indices of the factors that are fields (the inert ones).
    pub fn inert_indices(&self) -> Vec<usize> {
        self.factors
            .iter()
            .enumerate()
            .filter_map(|(i, f)| match f.kind {
                FactorKind::Inert(_) => Some(i),
                FactorKind::Split => None,
            })
            .collect()
    }

    fn check_elem(&self, x: &EtaleElem) -> Result<()> {
        if x.components.len() != self.factors.len() {
            return Err(BaseError::Dim("element has the wrong number of factors".into()));
        }
        for (f, (a, b)) in self.factors.iter().zip(&x.components) {
            if !f.sharp.matches(a) || !f.sharp.matches(b) {
                return Err(BaseError::invalid(
                    "element coordinate outside its coefficient field",
                ));
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> EtaleElem {
        EtaleElem {
            components: self
                .factors
                .iter()
                .map(|f| (f.sharp.zero(), f.sharp.zero()))
                .collect(),
        }
    }

    pub fn one(&self) -> EtaleElem {
        EtaleElem {
            components: self
                .factors
                .iter()
                .map(|f| match f.kind {
                    FactorKind::Split => (f.sharp.one(), f.sharp.one()),
                    FactorKind::Inert(_) => (f.sharp.one(), f.sharp.zero()),
                })
                .collect(),
        }
    }

    /// The scalar r·1 of the algebra.
    pub fn from_rat(&self, r: &Rat) -> EtaleElem {
        EtaleElem {
            components: self
                .factors
                .iter()
                .map(|f| match f.kind {
                    FactorKind::Split => (f.sharp.from_rat(r), f.sharp.from_rat(r)),
                    FactorKind::Inert(_) => (f.sharp.from_rat(r), f.sharp.zero()),
                })
                .collect(),
        }
    }

    /// Embed per-factor coefficient-field values into the fixed subalgebra.
    pub fn embed_sharp(&self, parts: &[SharpElem]) -> Result<EtaleElem> {
        if parts.len() != self.factors.len() {
            return Err(BaseError::Dim("one value per factor required".into()));
        }
        let mut components = Vec::with_capacity(parts.len());
        for (f, s) in self.factors.iter().zip(parts) {
            if !f.sharp.matches(s) {
                return Err(BaseError::invalid("value outside its coefficient field"));
            }
            components.push(match f.kind {
                FactorKind::Split => (s.clone(), s.clone()),
                FactorKind::Inert(_) => (s.clone(), f.sharp.zero()),
            });
        }
        Ok(EtaleElem { components })
    }

    /// Extract the per-factor coefficient-field values of a τ-fixed element.
    pub fn sharp_parts(&self, x: &EtaleElem) -> Result<Vec<SharpElem>> {
        self.check_elem(x)?;
        let mut parts = Vec::with_capacity(self.factors.len());
        for (f, (a, b)) in self.factors.iter().zip(&x.components) {
            match f.kind {
                FactorKind::Split => {
                    if !f.sharp.is_zero(&f.sharp.sub(a, b)?)? {
                        return Err(BaseError::invalid("element is not fixed by the involution"));
                    }
                    parts.push(a.clone());
                }
                FactorKind::Inert(_) => {
                    if !f.sharp.is_zero(b)? {
                        return Err(BaseError::invalid("element is not fixed by the involution"));
                    }
                    parts.push(a.clone());
                }
            }
        }
        Ok(parts)
    }

    pub fn add(&self, x: &EtaleElem, y: &EtaleElem) -> Result<EtaleElem> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        let components = self
            .factors
            .iter()
            .zip(x.components.iter().zip(&y.components))
            .map(|(f, ((xa, xb), (ya, yb)))| {
                Ok((f.sharp.add(xa, ya)?, f.sharp.add(xb, yb)?))
            })
            .collect::<Result<_>>()?;
        Ok(EtaleElem { components })
    }

    pub fn neg(&self, x: &EtaleElem) -> Result<EtaleElem> {
        self.check_elem(x)?;
        let components = self
            .factors
            .iter()
            .zip(&x.components)
            .map(|(f, (a, b))| Ok((f.sharp.neg(a)?, f.sharp.neg(b)?)))
            .collect::<Result<_>>()?;
        Ok(EtaleElem { components })
    }

    pub fn sub(&self, x: &EtaleElem, y: &EtaleElem) -> Result<EtaleElem> {
        self.add(x, &self.neg(y)?)
    }

    pub fn scale_rat(&self, r: &Rat, x: &EtaleElem) -> Result<EtaleElem> {
        self.check_elem(x)?;
        let components = self
            .factors
            .iter()
            .zip(&x.components)
            .map(|(f, (a, b))| Ok((f.sharp.scale(r, a)?, f.sharp.scale(r, b)?)))
            .collect::<Result<_>>()?;
        Ok(EtaleElem { components })
    }

    pub fn mul(&self, x: &EtaleElem, y: &EtaleElem) -> Result<EtaleElem> {
        self.check_elem(x)?;
        self.check_elem(y)?;
        let components = self
            .factors
            .iter()
            .zip(x.components.iter().zip(&y.components))
            .map(|(f, ((xa, xb), (ya, yb)))| {
                let s = &f.sharp;
                match &f.kind {
                    FactorKind::Split => Ok((s.mul(xa, ya)?, s.mul(xb, yb)?)),
                    FactorKind::Inert(d) => {
                        // (x + y√d)(x′ + y′√d) = (xx′ + d·yy′) + (xy′ + yx′)√d
                        let first = s.add(&s.mul(xa, ya)?, &s.mul(d, &s.mul(xb, yb)?)?)?;
                        let second = s.add(&s.mul(xa, yb)?, &s.mul(xb, ya)?)?;
                        Ok((first, second))
                    }
                }
            })
            .collect::<Result<_>>()?;
        Ok(EtaleElem { components })
    }

    /// The involution τ: swap on split factors, √d ↦ −√d on inert ones.
    pub fn tau(&self, x: &EtaleElem) -> Result<EtaleElem> {
        self.check_elem(x)?;
        let components = self
            .factors
            .iter()
            .zip(&x.components)
            .map(|(f, (a, b))| match f.kind {
                FactorKind::Split => Ok((b.clone(), a.clone())),
                FactorKind::Inert(_) => Ok((a.clone(), f.sharp.neg(b)?)),
            })
            .collect::<Result<_>>()?;
        Ok(EtaleElem { components })
    }

    /// Whether the component of `x` at factor `i` is zero.
    pub fn component_is_zero(&self, x: &EtaleElem, i: usize) -> Result<bool> {
        self.check_elem(x)?;
        let f = &self.factors[i];
        let (a, b) = &x.components[i];
        Ok(f.sharp.is_zero(a)? && f.sharp.is_zero(b)?)
    }

    pub fn is_invertible(&self, x: &EtaleElem) -> Result<bool> {
        self.check_elem(x)?;
        for (f, (a, b)) in self.factors.iter().zip(&x.components) {
            let s = &f.sharp;
            match &f.kind {
                FactorKind::Split => {
                    if s.is_zero(a)? || s.is_zero(b)? {
                        return Ok(false);
                    }
                }
                FactorKind::Inert(d) => {
                    // x + y√d is invertible iff its norm x² − d·y² is nonzero.
                    let n = s.sub(&s.mul(a, a)?, &s.mul(d, &s.mul(b, b)?)?)?;
                    if s.is_zero(&n)? {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    pub fn inverse(&self, x: &EtaleElem) -> Result<EtaleElem> {
        self.check_elem(x)?;
        let components = self
            .factors
            .iter()
            .zip(&x.components)
            .map(|(f, (a, b))| {
                let s = &f.sharp;
                match &f.kind {
                    FactorKind::Split => Ok((s.inverse(a)?, s.inverse(b)?)),
                    FactorKind::Inert(d) => {
                        // (x + y√d)⁻¹ = (x − y√d)/(x² − d·y²)
                        let n = s.sub(&s.mul(a, a)?, &s.mul(d, &s.mul(b, b)?)?)?;
                        let ninv = s.inverse(&n)?;
                        Ok((s.mul(a, &ninv)?, s.neg(&s.mul(b, &ninv)?)?))
                    }
                }
            })
            .collect::<Result<_>>()?;
        Ok(EtaleElem { components })
    }

    /// The norm x·τ(x) down to the fixed subalgebra, as a τ-fixed element.
    pub fn norm_to_sharp(&self, x: &EtaleElem) -> Result<EtaleElem> {
        self.mul(x, &self.tau(x)?)
    }

    /// Trace of `x` down to the base field F.
    pub fn trace_to_f(&self, x: &EtaleElem) -> Result<Rat> {
        self.check_elem(x)?;
        let mut t = Rat::zero();
        for (f, (a, b)) in self.factors.iter().zip(&x.components) {
            match f.kind {
                FactorKind::Split => {
                    t += f.sharp.trace_to_f(a)? + f.sharp.trace_to_f(b)?;
                }
                FactorKind::Inert(_) => {
                    // trace of x + y√d over K# is 2x; then down to F.
                    let two_a = f.sharp.add(a, a)?;
                    t += f.sharp.trace_to_f(&two_a)?;
                }
            }
        }
        Ok(t)
    }

    /// Norm of `x` down to the base field F.
    pub fn norm_to_f(&self, x: &EtaleElem) -> Result<Rat> {
        self.check_elem(x)?;
        let mut n = Rat::one();
        for (f, (a, b)) in self.factors.iter().zip(&x.components) {
            let s = &f.sharp;
            match &f.kind {
                FactorKind::Split => {
                    n *= s.norm_to_f(a)? * s.norm_to_f(b)?;
                }
                FactorKind::Inert(d) => {
                    let nk = s.sub(&s.mul(a, a)?, &s.mul(d, &s.mul(b, b)?)?)?;
                    n *= s.norm_to_f(&nk)?;
                }
            }
        }
        Ok(n)
    }

    /// The F-basis underlying [`Self::mult_matrix`]: per factor, the
    /// coefficient-field basis in the first coordinate followed by the
    /// coefficient-field basis in the second coordinate.
    pub fn basis(&self) -> Vec<EtaleElem> {
        let mut out = Vec::with_capacity(self.dim_f());
        for (i, f) in self.factors.iter().enumerate() {
            for slot in 0..2 {
                for e in f.sharp.basis() {
                    let mut z = self.zero();
                    if slot == 0 {
                        z.components[i].0 = e;
                    } else {
                        z.components[i].1 = e;
                    }
                    out.push(z);
                }
            }
        }
        out
    }

    /// Multiplication by `x` as a matrix on [`Self::basis`].
    pub fn mult_matrix(&self, x: &EtaleElem) -> Result<Mat> {
        self.check_elem(x)?;
        let mut m = Mat::zeros(0, 0);
        for (f, (a, b)) in self.factors.iter().zip(&x.components) {
            let s = &f.sharp;
            let block = match &f.kind {
                FactorKind::Split => s.mult_matrix(a)?.block_diag(&s.mult_matrix(b)?),
                FactorKind::Inert(d) => {
                    // On the basis {e_α} ∪ {√d·e_α}:
                    // (x + y√d)·e_α = x·e_α + (y·e_α)√d,
                    // (x + y√d)·√d·e_α = (d·y)·e_α + (x·e_α)√d.
                    let mx = s.mult_matrix(a)?;
                    let my = s.mult_matrix(b)?;
                    let mdy = s.mult_matrix(&s.mul(d, b)?)?;
                    let top = mx.hstack(&mdy)?;
                    let bottom = my.hstack(&mx)?;
                    top.vstack(&bottom)?
                }
            };
            m = m.block_diag(&block);
        }
        Ok(m)
    }

    /// The characteristic polynomial of multiplication by `x` over F,
    /// monic with ascending coefficients.
    pub fn char_poly(&self, x: &EtaleElem) -> Result<Vec<Rat>> {
        self.mult_matrix(x)?.char_poly()
    }

    /// Evaluate a rational polynomial (ascending coefficients) at `x`.
    pub fn poly_eval(&self, coeffs: &[Rat], x: &EtaleElem) -> Result<EtaleElem> {
        self.check_elem(x)?;
        let mut acc = self.zero();
        for c in coeffs.iter().rev() {
            acc = self.add(&self.mul(&acc, x)?, &self.from_rat(c))?;
        }
        Ok(acc)
    }

    /// Ṗ_x(x): the derivative of the characteristic polynomial of `x`,
    /// evaluated at `x`.  Invertible exactly when x generates K over F
    /// with separable spectrum.
    pub fn deriv_eval(&self, x: &EtaleElem) -> Result<EtaleElem> {
        let p = self.char_poly(x)?;
        self.poly_eval(&poly_derivative(&p), x)
    }

    /// The sign character sgn_{K/K#} of a τ-fixed invertible element:
    /// the product over inert factors of the coefficient-field Hilbert
    /// symbols (t_i, d_i); split factors contribute +1.
    pub fn sgn_char(&self, t: &EtaleElem) -> Result<Sign> {
        let parts = self.sharp_parts(t)?;
        let mut s = Sign::Plus;
        for (f, part) in self.factors.iter().zip(&parts) {
            if f.sharp.is_zero(part)? {
                return Err(BaseError::invalid("sign character of a non-invertible element"));
            }
            if let FactorKind::Inert(d) = &f.kind {
                s *= f.sharp.hilbert(part, d)?;
            }
        }
        Ok(s)
    }
}

/// Derivative of a polynomial with ascending rational coefficients.
pub fn poly_derivative(coeffs: &[Rat]) -> Vec<Rat> {
    coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * Rat::from_integer((i as i64).into()))
        .collect()
}
