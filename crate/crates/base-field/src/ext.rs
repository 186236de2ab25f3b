//! Finite extensions of ℚ_p presented as a two-stage tower
//!
//!   U = ℚ_p[θ]/(f)   (unramified stage, f monic irreducible over 𝔽_p)
//!   K = U[π]/(E)     (Eisenstein stage, E(π) = π^e + c_{e−1}π^{e−1} + … + c_0)
//!
//! with all element arithmetic carried out in exact rational coordinates on
//! the flat basis { π^i θ^j : 0 ≤ i < e, 0 ≤ j < f }. Because the coefficient
//! field inside the machine is ℚ (dense in ℚ_p) and the structure constants
//! are rational, sums/products/inverses are exact; valuations and residues
//! are exact because the Eisenstein shape makes the minimum
//! v(Σ uᵢπ^i) = min_i (e·v_U(uᵢ) + i) attained at distinct values mod e.

use crate::error::{BaseError, Result};
use crate::fq::{Fq, FqElem};
use crate::linalg::Mat;
use crate::place::is_prime_u64;
use crate::poly;
use crate::rat::{is_p_integral, mod_p, vp, Rat};
use crate::sign::Sign;
use num::{One, Zero};

/// A finite extension K/ℚ_p given by an unramified stage and an Eisenstein
/// stage. The trivial tower (f = T, e = 1 with E = π − p) presents ℚ_p itself.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtField {
    p: u64,
    f_modulus: Vec<u64>,
    /// Eisenstein non-leading coefficients c_0,…,c_{e−1}; each a U-element
    /// as θ-coordinates of length f.
    e_coeffs: Vec<Vec<Rat>>,
    fq: Fq,
    f_lift: Vec<Rat>,
}

/// An element of an [`ExtField`]: coords[i][j] multiplies π^i θ^j.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtElem {
    pub coords: Vec<Vec<Rat>>,
}

fn v_u(u: &[Rat], p: u64) -> Option<i64> {
    u.iter()
        .filter(|c| !c.is_zero())
        .map(|c| vp(c, p).expect("nonzero"))
        .min()
}

impl ExtField {
    pub fn new(p: u64, f_modulus: Vec<u64>, e_coeffs: Vec<Vec<Rat>>) -> Result<ExtField> {
        if p == 2 {
            return Err(BaseError::EvenResidue(2));
        }
        if !is_prime_u64(p) {
            return Err(BaseError::NotPrime(p));
        }
        let fq = Fq::new(p, f_modulus.clone())?;
        let f_modulus = fq.modulus().to_vec();
        let f = fq.degree();
        let e = e_coeffs.len();
        if e == 0 {
            return Err(BaseError::NotEisenstein(
                "ramified stage needs degree ≥ 1".into(),
            ));
        }
        for (i, c) in e_coeffs.iter().enumerate() {
            if c.len() != f {
                return Err(BaseError::Dim(format!(
                    "Eisenstein coefficient {i} has {} coordinates, expected {f}",
                    c.len()
                )));
            }
            match v_u(c, p) {
                None => {
                    if i == 0 {
                        return Err(BaseError::NotEisenstein(
                            "constant coefficient is zero".into(),
                        ));
                    }
                }
                Some(v) => {
                    if v < 1 {
                        return Err(BaseError::NotEisenstein(format!(
                            "coefficient {i} has valuation {v} < 1"
                        )));
                    }
                    if i == 0 && v != 1 {
                        return Err(BaseError::NotEisenstein(format!(
                            "constant coefficient has valuation {v} ≠ 1"
                        )));
                    }
                }
            }
        }
        let f_lift: Vec<Rat> = f_modulus
            .iter()
            .map(|&c| Rat::from_integer(c.into()))
            .collect();
        Ok(ExtField {
            p,
            f_modulus,
            e_coeffs,
            fq,
            f_lift,
        })
    }

    /// ℚ_p as a trivial tower.
    pub fn qp(p: u64) -> Result<ExtField> {
        ExtField::new(p, vec![0, 1], vec![vec![-Rat::from_integer(p.into())]])
    }

    /// The unramified extension of degree deg f with π = p.
    pub fn unramified(p: u64, f_modulus: Vec<u64>) -> Result<ExtField> {
        let f = f_modulus.len().saturating_sub(1).max(1);
        let mut c0 = vec![Rat::zero(); f];
        c0[0] = -Rat::from_integer(p.into());
        ExtField::new(p, f_modulus, vec![c0])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    /// Residue degree f.
    pub fn residue_degree(&self) -> usize {
        self.fq.degree()
    }

    /// Ramification index e.
    pub fn ramification(&self) -> usize {
        self.e_coeffs.len()
    }

    /// Total degree [K : ℚ_p] = e·f.
    pub fn degree(&self) -> usize {
        self.ramification() * self.residue_degree()
    }

    pub fn residue_field(&self) -> &Fq {
        &self.fq
    }

    pub fn f_modulus(&self) -> &[u64] {
        &self.f_modulus
    }

    pub fn e_coeffs(&self) -> &[Vec<Rat>] {
        &self.e_coeffs
    }

    // -- constructors for elements -------------------------------------------

    pub fn zero(&self) -> ExtElem {
        ExtElem {
            coords: vec![vec![Rat::zero(); self.residue_degree()]; self.ramification()],
        }
    }

    pub fn one(&self) -> ExtElem {
        self.from_rat(&Rat::one())
    }

    pub fn from_rat(&self, c: &Rat) -> ExtElem {
        let mut z = self.zero();
        z.coords[0][0] = c.clone();
        z
    }

    pub fn from_i64(&self, c: i64) -> ExtElem {
        self.from_rat(&Rat::from_integer(c.into()))
    }

    /// From flat coordinates (index i·f + j for π^i θ^j); length must be e·f.
    pub fn from_flat(&self, flat: &[Rat]) -> Result<ExtElem> {
        let (e, f) = (self.ramification(), self.residue_degree());
        if flat.len() != e * f {
            return Err(BaseError::Dim(format!(
                "element has {} coordinates, field degree is {}",
                flat.len(),
                e * f
            )));
        }
        Ok(ExtElem {
            coords: (0..e)
                .map(|i| flat[i * f..(i + 1) * f].to_vec())
                .collect(),
        })
    }

    pub fn to_flat(&self, x: &ExtElem) -> Vec<Rat> {
        x.coords.iter().flatten().cloned().collect()
    }

    /// θ as an element (for f = 1 this is the residue-field lift −f₀).
    pub fn theta(&self) -> ExtElem {
        let mut z = self.zero();
        if self.residue_degree() >= 2 {
            z.coords[0][1] = Rat::one();
        } else {
            z.coords[0][0] = -self.f_lift[0].clone();
        }
        z
    }

    /// The uniformizer π (for e = 1, π = −c₀ lives in U).
    pub fn uniformizer(&self) -> ExtElem {
        let mut z = self.zero();
        if self.ramification() >= 2 {
            z.coords[1] = {
                let mut u = vec![Rat::zero(); self.residue_degree()];
                u[0] = Rat::one();
                u
            };
        } else {
            z.coords[0] = self.e_coeffs[0].iter().map(|c| -c.clone()).collect();
        }
        z
    }

    // -- arithmetic -----------------------------------------------------------

    pub fn is_zero(&self, x: &ExtElem) -> bool {
        x.coords.iter().flatten().all(|c| c.is_zero())
    }

    pub fn add(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(u, v)| u.iter().zip(v).map(|(x, y)| x + y).collect())
                .collect(),
        }
    }

    pub fn sub(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        ExtElem {
            coords: a
                .coords
                .iter()
                .zip(&b.coords)
                .map(|(u, v)| u.iter().zip(v).map(|(x, y)| x - y).collect())
                .collect(),
        }
    }

    pub fn neg(&self, a: &ExtElem) -> ExtElem {
        ExtElem {
            coords: a
                .coords
                .iter()
                .map(|u| u.iter().map(|x| -x.clone()).collect())
                .collect(),
        }
    }

    pub fn scale(&self, a: &ExtElem, c: &Rat) -> ExtElem {
        ExtElem {
            coords: a
                .coords
                .iter()
                .map(|u| u.iter().map(|x| x * c).collect())
                .collect(),
        }
    }

    /// Multiply two U-elements (θ-polynomials mod the lifted f).
    fn umul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let prod = poly::mul(a, b);
        let (_, mut rem) = poly::divrem(&prod, &self.f_lift).expect("f is monic");
        rem.resize(self.residue_degree(), Rat::zero());
        rem
    }

    fn uadd_into(acc: &mut [Rat], b: &[Rat]) {
        for (x, y) in acc.iter_mut().zip(b) {
            *x += y;
        }
    }

    pub fn mul(&self, a: &ExtElem, b: &ExtElem) -> ExtElem {
        let (e, f) = (self.ramification(), self.residue_degree());
        // Convolution in π with U-coefficients.
        let mut conv: Vec<Vec<Rat>> = vec![vec![Rat::zero(); f]; 2 * e - 1];
        for (i, u) in a.coords.iter().enumerate() {
            if u.iter().all(|c| c.is_zero()) {
                continue;
            }
            for (j, v) in b.coords.iter().enumerate() {
                if v.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let prod = self.umul(u, v);
                Self::uadd_into(&mut conv[i + j], &prod);
            }
        }
        // Reduce π^k for k ≥ e using π^e = −Σ c_i π^i.
        for k in (e..conv.len()).rev() {
            let u = conv[k].clone();
            if u.iter().all(|c| c.is_zero()) {
                continue;
            }
            conv[k] = vec![Rat::zero(); f];
            for (i, ci) in self.e_coeffs.iter().enumerate() {
                if ci.iter().all(|c| c.is_zero()) {
                    continue;
                }
                let prod = self.umul(&u, ci);
                let neg: Vec<Rat> = prod.into_iter().map(|c| -c).collect();
                Self::uadd_into(&mut conv[k - e + i], &neg);
            }
        }
        conv.truncate(e);
        ExtElem { coords: conv }
    }

    /// Matrix of multiplication by x on the flat basis (columns = images).
    pub fn mult_matrix(&self, x: &ExtElem) -> Mat {
        let (e, f) = (self.ramification(), self.residue_degree());
        let d = e * f;
        let mut cols = Vec::with_capacity(d);
        for i in 0..e {
            for j in 0..f {
                let mut basis = self.zero();
                basis.coords[i][j] = Rat::one();
                let prod = self.mul(x, &basis);
                cols.push(self.to_flat(&prod));
            }
        }
        Mat::from_cols(cols).expect("consistent dims")
    }

    pub fn inverse(&self, x: &ExtElem) -> Result<ExtElem> {
        if self.is_zero(x) {
            return Err(BaseError::NotInvertible);
        }
        let m = self.mult_matrix(x);
        let mut target = vec![Rat::zero(); self.degree()];
        target[0] = Rat::one();
        let sol = m.solve(&target).map_err(|_| BaseError::NotInvertible)?;
        self.from_flat(&sol)
    }

    pub fn pow(&self, x: &ExtElem, k: i64) -> Result<ExtElem> {
        if k < 0 {
            let inv = self.inverse(x)?;
            return self.pow(&inv, -k);
        }
        let mut acc = self.one();
        let mut base = x.clone();
        let mut m = k as u64;
        while m > 0 {
            if m & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            m >>= 1;
        }
        Ok(acc)
    }

    pub fn trace_to_base(&self, x: &ExtElem) -> Rat {
        self.mult_matrix(x).trace().expect("square")
    }

    pub fn norm_to_base(&self, x: &ExtElem) -> Rat {
        self.mult_matrix(x).det().expect("square")
    }

    // -- valuation / residue ---------------------------------------------------

    /// Valuation normalized by v(π) = 1 (so v(p) = e).
    pub fn valuation(&self, x: &ExtElem) -> Result<i64> {
        let e = self.ramification() as i64;
        let mut best: Option<i64> = None;
        for (i, u) in x.coords.iter().enumerate() {
            if let Some(vu) = v_u(u, self.p) {
                let v = e * vu + i as i64;
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
        best.ok_or(BaseError::ZeroValuation)
    }

    pub fn is_integral(&self, x: &ExtElem) -> bool {
        self.is_zero(x) || self.valuation(x).is_ok_and(|v| v >= 0)
    }

    pub fn is_unit(&self, x: &ExtElem) -> bool {
        self.valuation(x) == Ok(0)
    }

    /// Residue in 𝔽_q of an element with v(x) ≥ 0.
    ///
    /// For v(x) ≥ 0 every coordinate of the π⁰-coefficient is p-integral
    /// (e·v_U(u_i) + i ≥ 0 with 0 ≤ i < e forces v_U(u_i) ≥ 0), and the
    /// residue is the reduction of that U-coefficient.
    pub fn residue(&self, x: &ExtElem) -> Result<FqElem> {
        if !self.is_zero(x) && self.valuation(x)? < 0 {
            return Err(BaseError::NotIntegral {
                p: self.p,
                what: "residue of a non-integral element".into(),
            });
        }
        let u0 = &x.coords[0];
        let mut digits = Vec::with_capacity(u0.len());
        for c in u0 {
            if !is_p_integral(c, self.p) {
                return Err(BaseError::NotIntegral {
                    p: self.p,
                    what: "residue coordinate".into(),
                });
            }
            digits.push(mod_p(c, self.p)?);
        }
        self.fq.elem(&digits)
    }

    /// Residue of the unit part x·π^{−v(x)} for nonzero x.
    pub fn residue_unit(&self, x: &ExtElem) -> Result<FqElem> {
        let v = self.valuation(x)?;
        let pi_pow = self.pow(&self.uniformizer(), -v)?;
        let y = self.mul(x, &pi_pow);
        debug_assert_eq!(self.valuation(&y), Ok(0));
        self.residue(&y)
    }

    /// Square test (p odd): even valuation and square residue of the unit part.
    pub fn is_square(&self, x: &ExtElem) -> Result<bool> {
        let v = self.valuation(x)?;
        if v.rem_euclid(2) != 0 {
            return Ok(false);
        }
        self.fq.is_square(&self.residue_unit(x)?)
    }

    /// Square-class equality of two nonzero elements.
    pub fn square_class_eq(&self, a: &ExtElem, b: &ExtElem) -> Result<bool> {
        self.is_square(&self.mul(a, b))
    }

    /// Tame Hilbert symbol (a,b)_K for nonzero a, b (odd residue char):
    /// a = π^α·u, b = π^β·w ⇒ (a,b) = χ((−1)^{αβ}) χ(ū)^β χ(w̄)^α
    /// with χ the quadratic character of 𝔽_q.
    pub fn hilbert(&self, a: &ExtElem, b: &ExtElem) -> Result<Sign> {
        let alpha = self.valuation(a)?;
        let beta = self.valuation(b)?;
        let ra = self.residue_unit(a)?;
        let rb = self.residue_unit(b)?;
        let chi_m1 = self.fq.chi(&self.fq.minus_one())?;
        let mut s = chi_m1.pow(alpha * beta);
        s *= self.fq.chi(&ra)?.pow(beta);
        s *= self.fq.chi(&rb)?.pow(alpha);
        Ok(s)
    }

    /// A unit whose residue is a non-square (canonical small lift).
    pub fn nonsquare_unit(&self) -> ExtElem {
        // Search small θ-polynomials with coefficients in [0, p) for a
        // non-square residue; the multiplicative group is cyclic, so one of
        // θ + k or a small constant works quickly.
        let f = self.residue_degree();
        let fq = &self.fq;
        let mut candidates: Vec<Vec<u64>> = vec![];
        for c in 2..self.p {
            candidates.push(vec![c]);
        }
        if f >= 2 {
            for c in 0..self.p {
                let mut v = vec![c, 1];
                v.resize(f, 0);
                candidates.push(v);
            }
        }
        for cand in candidates {
            let elem = fq.elem(&cand).expect("sized");
            if fq.is_zero(&elem) {
                continue;
            }
            if !fq.is_square(&elem).expect("nonzero") {
                let mut z = self.zero();
                for (j, &c) in cand.iter().enumerate() {
                    if j < z.coords[0].len() {
                        z.coords[0][j] = Rat::from_integer(c.into());
                    }
                }
                return z;
            }
        }
        unreachable!("F_q^× has non-squares for odd q");
    }
}
