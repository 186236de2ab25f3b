//! Parameters (K/K#, a, c) of regular semisimple conjugacy classes in
//! classical groups and their Lie algebras.
//!
//! A parameter consists of an étale algebra with involution, an element
//! `a` with τ(a) = a⁻¹ (group mode) or τ(a) = −a (Lie mode), and a unit
//! `c` with τ(c) = ε·c; ε = −1 realizes antisymmetric (symplectic) forms,
//! ε = +1 symmetric (orthogonal) ones.  The realized pairing on K is
//! (x, y) ↦ tr_{K/F}(c·τ(x)·y), preserved by multiplication by `a` in
//! group mode and skewed by it in Lie mode.
//!
//! Within a fixed geometric class (same algebra, same `a`), the rational
//! classes correspond to sign vectors over the inert factors via the sign
//! character of c-ratios; `stable_orbit` enumerates them and `class_exists`
//! tests membership against a reference `c₀`.

use crate::algebra::{EtaleAlg, EtaleElem, FactorKind};
use crate::field::SharpElem;
use base_field::rat::{rat, Rat};
use base_field::{BaseError, Mat, Result, Sign};

/// Group-element parameters (τ(a) = a⁻¹) vs Lie-algebra parameters
/// (τ(a) = −a).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Group,
    Lie,
}

/// The classical group a parameter is referred to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupKind {
    Sp,
    SoOdd,
    SoEven,
    Unitary,
}

/// A regular semisimple class parameter (K/K#, a, c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassParam {
    epsilon: Sign,
    mode: Mode,
    algebra: EtaleAlg,
    a: EtaleElem,
    c: EtaleElem,
}

impl ClassParam {
    /// Validate and build a parameter:
    ///
    /// - c is invertible with τ(c) = ε·c;
    /// - group mode: a·τ(a) = 1 and a ≠ ±1 in every factor;
    /// - Lie mode: τ(a) = −a and a invertible;
    /// - a generates K over F with separable spectrum (Ṗ_a(a) invertible).
    pub fn new(
        epsilon: Sign,
        mode: Mode,
        algebra: EtaleAlg,
        a: EtaleElem,
        c: EtaleElem,
    ) -> Result<ClassParam> {
        if !algebra.is_invertible(&c)? {
            return Err(BaseError::invalid("the twisting element c must be invertible"));
        }
        let tau_c = algebra.tau(&c)?;
        let eps_c = match epsilon {
            Sign::Plus => c.clone(),
            Sign::Minus => algebra.neg(&c)?,
        };
        if tau_c != eps_c {
            return Err(BaseError::invalid("c must satisfy τ(c) = ε·c"));
        }
        match mode {
            Mode::Group => {
                let n = algebra.mul(&a, &algebra.tau(&a)?)?;
                if n != algebra.one() {
                    return Err(BaseError::invalid("group mode requires τ(a) = a⁻¹"));
                }
                let minus_one = algebra.neg(&algebra.one())?;
                for i in 0..algebra.num_factors() {
                    let shifted_down = algebra.sub(&a, &algebra.one())?;
                    let shifted_up = algebra.sub(&a, &minus_one)?;
                    if algebra.component_is_zero(&shifted_down, i)?
                        || algebra.component_is_zero(&shifted_up, i)?
                    {
                        return Err(BaseError::invalid(
                            "group mode requires a ≠ ±1 in every factor",
                        ));
                    }
                }
            }
            Mode::Lie => {
                if algebra.tau(&a)? != algebra.neg(&a)? {
                    return Err(BaseError::invalid("Lie mode requires τ(a) = −a"));
                }
                if !algebra.is_invertible(&a)? {
                    return Err(BaseError::invalid("Lie mode requires a to be invertible"));
                }
            }
        }
        if !algebra.is_invertible(&algebra.deriv_eval(&a)?)? {
            return Err(BaseError::invalid(
                "a must generate the algebra with separable spectrum",
            ));
        }
        Ok(ClassParam {
            epsilon,
            mode,
            algebra,
            a,
            c,
        })
    }

    pub fn epsilon(&self) -> Sign {
        self.epsilon
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn algebra(&self) -> &EtaleAlg {
        &self.algebra
    }

    pub fn a(&self) -> &EtaleElem {
        &self.a
    }

    pub fn c(&self) -> &EtaleElem {
        &self.c
    }

    pub fn dim_f(&self) -> usize {
        self.algebra.dim_f()
    }

    /// The same parameter with a different twisting element.
    pub fn with_c(&self, c: EtaleElem) -> Result<ClassParam> {
        ClassParam::new(
            self.epsilon,
            self.mode,
            self.algebra.clone(),
            self.a.clone(),
            c,
        )
    }

    /// The characteristic polynomial P_a over F.
    pub fn char_poly(&self) -> Result<Vec<Rat>> {
        self.algebra.char_poly(&self.a)
    }

    /// Realize the parameter as matrices over F: the Gram matrix G of the
    /// pairing (x, y) ↦ tr_{K/F}(c·τ(x)·y) on the algebra's F-basis, and
    /// the matrix M of multiplication by a on the same basis.
    ///
    /// G is symmetric for ε = +1 and antisymmetric for ε = −1, and
    /// nondegenerate; group mode gives MᵀGM = G, Lie mode MᵀG + GM = 0.
    pub fn matrix_realization(&self) -> Result<(Mat, Mat)> {
        let alg = &self.algebra;
        let basis = alg.basis();
        let n = basis.len();
        let mut g = Mat::zeros(n, n);
        for (i, bi) in basis.iter().enumerate() {
            let ci = alg.mul(&self.c, &alg.tau(bi)?)?;
            for (j, bj) in basis.iter().enumerate() {
                *g.at_mut(i, j) = alg.trace_to_f(&alg.mul(&ci, bj)?)?;
            }
        }
        let m = alg.mult_matrix(&self.a)?;
        Ok((g, m))
    }

    /// The twisting element in the normalization of Waldspurger's
    /// classification: c_i ↦ c_i·[K_i : F]⁻¹ factor by factor.
    pub fn waldspurger_c(&self) -> Result<EtaleElem> {
        let mut components = Vec::with_capacity(self.algebra.num_factors());
        for (f, (x, y)) in self.algebra.factors().iter().zip(&self.c.components) {
            let scale = rat(1, f.dim_f() as i64);
            components.push((f.sharp.scale(&scale, x)?, f.sharp.scale(&scale, y)?));
        }
        Ok(EtaleElem { components })
    }
}

/// Whether the class with the parameter's algebra and `a` but twisting
/// element `param.c` exists in the group of the given kind whose reference
/// class carries `c0`.  Symplectic groups admit every twist; orthogonal
/// and unitary groups exactly those with sgn_{K/K#}(c₀⁻¹·c) = +1.
pub fn class_exists(kind: GroupKind, param: &ClassParam, c0: &EtaleElem) -> Result<bool> {
    let alg = param.algebra();
    if !alg.is_invertible(c0)? {
        return Err(BaseError::invalid("the reference twist c₀ must be invertible"));
    }
    let tau_c0 = alg.tau(c0)?;
    let eps_c0 = match param.epsilon() {
        Sign::Plus => c0.clone(),
        Sign::Minus => alg.neg(c0)?,
    };
    if tau_c0 != eps_c0 {
        return Err(BaseError::invalid("the reference twist must satisfy τ(c₀) = ε·c₀"));
    }
    match kind {
        GroupKind::Sp => Ok(true),
        GroupKind::SoOdd | GroupKind::SoEven | GroupKind::Unitary => {
            let ratio = alg.mul(&alg.inverse(c0)?, param.c())?;
            Ok(alg.sgn_char(&ratio)? == Sign::Plus)
        }
    }
}

/// One parameter per rational class inside the stable (geometric) class of
/// `param`: twist c by coefficient-field elements realizing each sign
/// vector over the inert factors.  Symplectic groups see all 2^{|I*|}
/// vectors; orthogonal and unitary groups only the even ones.
pub fn stable_orbit(kind: GroupKind, param: &ClassParam) -> Result<Vec<ClassParam>> {
    let alg = param.algebra();
    let inert = alg.inert_indices();
    let k = inert.len();
    let mut out = Vec::new();
    for bits in 0u32..(1 << k) {
        let signs: Vec<Sign> = (0..k)
            .map(|j| {
                if bits & (1 << j) == 0 {
                    Sign::Plus
                } else {
                    Sign::Minus
                }
            })
            .collect();
        let product = signs.iter().fold(Sign::Plus, |acc, s| acc * *s);
        let keep = match kind {
            GroupKind::Sp => true,
            GroupKind::SoOdd | GroupKind::SoEven | GroupKind::Unitary => product == Sign::Plus,
        };
        if !keep {
            continue;
        }
        let mut parts: Vec<SharpElem> =
            alg.factors().iter().map(|f| f.sharp.one()).collect();
        for (j, &i) in inert.iter().enumerate() {
            if signs[j] == Sign::Minus {
                let FactorKind::Inert(d) = &alg.factors()[i].kind else {
                    unreachable!("index lists inert factors");
                };
                parts[i] = alg.factors()[i].sharp.non_norm_for(d)?;
            }
        }
        let twist = alg.embed_sharp(&parts)?;
        out.push(param.with_c(alg.mul(param.c(), &twist)?)?);
    }
    Ok(out)
}

/// The character κ of a sign vector split into two blocks: the product of
/// the second-block signs (the first block is ignored).
pub fn kappa_pair(first: &[Sign], second: &[Sign]) -> Sign {
    let _ = first;
    second.iter().fold(Sign::Plus, |acc, s| acc * *s)
}

/// A matching pair of odd orthogonal parameters, as used by endoscopic
/// transfer: both in group mode with ε = +1, over the same place.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HClassParam {
    prime: ClassParam,
    second: ClassParam,
}

impl HClassParam {
    pub fn new(prime: ClassParam, second: ClassParam) -> Result<HClassParam> {
        for p in [&prime, &second] {
            if p.epsilon() != Sign::Plus {
                return Err(BaseError::invalid(
                    "odd orthogonal parameters require ε = +1",
                ));
            }
            if p.mode() != Mode::Group {
                return Err(BaseError::invalid("odd orthogonal parameters use group mode"));
            }
        }
        if prime.algebra().place() != second.algebra().place() {
            return Err(BaseError::invalid("the two parameters live over different places"));
        }
        Ok(HClassParam { prime, second })
    }

    pub fn prime(&self) -> &ClassParam {
        &self.prime
    }

    pub fn second(&self) -> &ClassParam {
        &self.second
    }

    /// n′: half the F-dimension of the first algebra.
    pub fn n_prime(&self) -> usize {
        self.prime.dim_f() / 2
    }

    /// n″: half the F-dimension of the second algebra.
    pub fn n_second(&self) -> usize {
        self.second.dim_f() / 2
    }
}
