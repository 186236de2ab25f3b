//! Monogenic étale algebras A = ℚ[T]/(P) with P monic squarefree, and the
//! trace-form constructions on them: symmetric Gram matrices of
//! x ↦ tr(r·x²), the explicit dual basis of the trace pairing, the two
//! standard trace forms q₁, q₂, and the trace form of a quadratic
//! extension or split double of A.

use crate::qform::QForm;
use base_field::linalg::Mat;
use base_field::poly;
use base_field::rat::Rat;
use base_field::{BaseError, Place, Result};
use num::{One, Zero};

/// ℚ[T]/(P) with P monic and squarefree (an étale ℚ-algebra with chosen
/// generator b = the class of T).
#[derive(Debug, Clone)]
pub struct MonogenicAlgebra {
    /// Monic coefficients of P, low → high, length n+1.
    modulus: Vec<Rat>,
}

impl MonogenicAlgebra {
    pub fn new(modulus: Vec<Rat>) -> Result<MonogenicAlgebra> {
        let m = poly::trim(modulus);
        let n = poly::deg(&m).ok_or_else(|| BaseError::invalid("zero modulus"))?;
        if n == 0 {
            return Err(BaseError::invalid("modulus must have degree ≥ 1"));
        }
        if m[n] != Rat::one() {
            return Err(BaseError::invalid("modulus must be monic"));
        }
        if !poly::is_squarefree(&m) {
            return Err(BaseError::invalid("modulus must be squarefree (étale)"));
        }
        Ok(MonogenicAlgebra { modulus: m })
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Rat] {
        &self.modulus
    }

    /// Reduce a polynomial mod P to length-n coordinates.
    pub fn reduce(&self, a: &[Rat]) -> Vec<Rat> {
        let (_, mut r) = poly::divrem(a, &self.modulus).expect("monic modulus");
        r.resize(self.degree(), Rat::zero());
        r
    }

    pub fn zero(&self) -> Vec<Rat> {
        vec![Rat::zero(); self.degree()]
    }

    pub fn one(&self) -> Vec<Rat> {
        let mut v = self.zero();
        v[0] = Rat::one();
        v
    }

    /// The generator b (class of T).
    pub fn gen(&self) -> Vec<Rat> {
        if self.degree() == 1 {
            // T ≡ −p₀ mod (T + p₀).
            vec![-self.modulus[0].clone()]
        } else {
            let mut v = self.zero();
            v[1] = Rat::one();
            v
        }
    }

    pub fn mul(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        self.reduce(&poly::mul(a, b))
    }

    pub fn add(&self, a: &[Rat], b: &[Rat]) -> Vec<Rat> {
        let mut v = poly::add(a, b);
        v.resize(self.degree(), Rat::zero());
        v
    }

    /// Matrix of multiplication by a on the power basis 1, b, …, b^{n−1}.
    pub fn mult_matrix(&self, a: &[Rat]) -> Mat {
        let n = self.degree();
        let mut cols = Vec::with_capacity(n);
        for i in 0..n {
            let mut basis = self.zero();
            basis[i] = Rat::one();
            cols.push(self.mul(a, &basis));
        }
        Mat::from_cols(cols).expect("consistent dims")
    }

    pub fn trace_of(&self, a: &[Rat]) -> Rat {
        self.mult_matrix(a).trace().expect("square")
    }

    pub fn norm_of(&self, a: &[Rat]) -> Rat {
        self.mult_matrix(a).det().expect("square")
    }

    pub fn inverse(&self, a: &[Rat]) -> Result<Vec<Rat>> {
        let m = self.mult_matrix(a);
        let mut target = self.zero();
        target[0] = Rat::one();
        m.solve(&target).map_err(|_| BaseError::NotInvertible)
    }

    /// Ṗ(b): the derivative of the modulus evaluated at the generator.
    pub fn modulus_derivative_at_gen(&self) -> Vec<Rat> {
        self.reduce(&poly::deriv(&self.modulus))
    }

    /// Gram matrix of the form x ↦ tr(r·x²) on the power basis:
    /// G[i][j] = tr(r·b^{i+j}).
    pub fn trace_gram(&self, r: &[Rat]) -> Mat {
        let n = self.degree();
        // Precompute tr(r·b^k) for k ≤ 2n−2.
        let mut traces = Vec::with_capacity(2 * n - 1);
        let mut pw = self.one();
        for _ in 0..(2 * n - 1) {
            traces.push(self.trace_of(&self.mul(r, &pw)));
            pw = self.mul(&pw, &self.gen());
        }
        Mat::from_fn(n, n, |i, j| traces[i + j].clone())
    }

    /// The explicit dual basis numerators: g_k = Σ_{j=k+1}^{n} h_j·b^{j−k−1}
    /// where P = Σ h_j T^j (h_n = 1). The dual basis of the power basis for
    /// the pairing (x, y) ↦ tr(xy) is { Ṗ(b)^{−1}·g_k }.
    pub fn dual_basis_numerators(&self) -> Vec<Vec<Rat>> {
        let n = self.degree();
        (0..n)
            .map(|k| {
                let mut g = vec![Rat::zero(); n];
                for j in (k + 1)..=n {
                    g[j - k - 1] = self.modulus[j].clone();
                }
                self.reduce(&g)
            })
            .collect()
    }
}

/// q₁ = trace form of Ṗ(b)^{−1} and q₂ = trace form of b^{−1}·Ṗ(b)^{−1},
/// as Gram matrices on the power basis. Requires b invertible (P(0) ≠ 0)
/// for q₂.
pub fn q1_q2_grams(alg: &MonogenicAlgebra) -> Result<(Mat, Mat)> {
    let dp = alg.modulus_derivative_at_gen();
    let dp_inv = alg.inverse(&dp)?;
    let b_inv = alg.inverse(&alg.gen())?;
    let q1 = alg.trace_gram(&dp_inv);
    let q2 = alg.trace_gram(&alg.mul(&b_inv, &dp_inv));
    Ok((q1, q2))
}

/// A quadratic étale extension of the algebra: either the split double
/// A × A, or A[√d] for an invertible d.
#[derive(Debug, Clone)]
pub enum QuadExt {
    Split,
    Root(Vec<Rat>),
}

/// Gram matrix over ℚ of x ↦ tr_{A/ℚ}(r·N_{K/A}(x)) on K, where K is the
/// given quadratic étale extension of A and r ∈ A is invertible:
///   K = A[√d]:  N(u + v√d) = u² − d·v², Gram = tr_gram(r) ⊕ (−tr_gram(r·d));
///   K = A × A:  N(u, v) = u·v, a split hyperbolic pairing.
pub fn trace_form_gram(alg: &MonogenicAlgebra, ext: &QuadExt, r: &[Rat]) -> Result<Mat> {
    alg.inverse(r)?; // r must be invertible
    match ext {
        QuadExt::Root(d) => {
            alg.inverse(d)?;
            let top = alg.trace_gram(r);
            let bottom = alg.trace_gram(&alg.mul(r, d)).neg();
            Ok(top.block_diag(&bottom))
        }
        QuadExt::Split => {
            let n = alg.degree();
            // q(u, v) = tr(r·u·v): Gram = [[0, B/2], [B/2, 0]] with
            // B[i][j] = tr(r·b^{i+j}).
            let b = alg.trace_gram(r);
            let half = b.scale(&(Rat::one() / Rat::from_integer(2.into())));
            let zero = Mat::zeros(n, n);
            let top = zero.hstack(&half)?;
            let bottom = half.hstack(&Mat::zeros(n, n))?;
            top.vstack(&bottom)
        }
    }
}

/// The trace form as a [`QForm`] at a place.
pub fn trace_form(
    alg: &MonogenicAlgebra,
    ext: &QuadExt,
    r: &[Rat],
    place: Place,
) -> Result<QForm> {
    QForm::from_gram(place, trace_form_gram(alg, ext, r)?)
}
