//! The character of the Weil representation on the stabilizer of the
//! standard self-dual lattice, evaluated exactly.
//!
//! Fix an odd prime p, the standard symplectic space W = ℚ^{2n} with
//! ⟨v|w⟩ = vᵀJw, and the self-dual lattice L = ℤ^{2n}. The stabilizer
//! K = Stab_{Sp(W)}(L) is a hyperspecial maximal compact subgroup and the
//! lattice model splits the metaplectic cover over it, so the character
//! Θ_ψ restricts to an honest function on K ∩ {det(x−1) ≠ 0}:
//!
//!   Θ_ψ(x) = Σ ψ(⟨x(w)|w⟩ / 2),
//!
//! the sum running over the finite quotient (x−1)⁻¹L/L. Each term is a
//! p-power root of unity, so the value is an exact cyclotomic number with
//! |det(x−1)|⁻¹ summands.
//!
//! For topologically unipotent x the same value has a closed form,
//! |det(x−1)|^{−1/2}·γ_ψ(q[C_x]), through the Weil index of the Cayley
//! form; the general comparison of Θ at x and −x is the ratio identity
//! verified by [`LatticeModel::theta_ratio_check`].

use crate::error::{Result, WeilError};
use crate::lattice::{quotient_representatives, split_blocks};
use base_field::fq::{fp_poly_is_squarefree, fp_poly_mul};
use base_field::linalg::Mat;
use base_field::rat::{mod_p, rat, vp, Rat};
use base_field::{Place, PsiSpec};
use cyclotomic::{mu8_cyc, psi_value, sqrt_p_pow, CycNum};
use num::Zero;
use quadratic_forms::QForm;
use symplectic_maslov::{cayley, q_of_x, SpElement, SympSpace};

/// The lattice model of the Weil representation attached to the standard
/// self-dual lattice L = ℤ^{2n} ⊂ ℚ_p^{2n} (p odd) and the fixed additive
/// character of conductor ℤ_p.
#[derive(Debug, Clone)]
pub struct LatticeModel {
    p: u64,
    n: usize,
    psi: PsiSpec,
    space: SympSpace,
}

impl LatticeModel {
    pub fn new(p: u64, n: usize) -> Result<LatticeModel> {
        let place = Place::padic(p)?;
        Ok(LatticeModel {
            p,
            n,
            psi: PsiSpec::at(place),
            space: SympSpace::standard(n),
        })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn place(&self) -> Place {
        self.psi.place
    }

    pub fn psi(&self) -> &PsiSpec {
        &self.psi
    }

    /// The ambient standard symplectic space ℚ^{2n}.
    pub fn space(&self) -> &SympSpace {
        &self.space
    }

    fn check_space(&self, x: &SpElement) -> Result<()> {
        if x.space() != &self.space {
            return Err(WeilError::invalid(format!(
                "element lives on a different space than the model's ℚ^{}",
                2 * self.n
            )));
        }
        Ok(())
    }

    /// Whether x stabilizes L: all entries of x and of x⁻¹ are p-integral.
    pub fn in_k(&self, x: &SpElement) -> Result<bool> {
        self.check_space(x)?;
        Ok(x.mat().is_p_integral(self.p) && x.inverse()?.mat().is_p_integral(self.p))
    }

    fn require_in_k(&self, x: &SpElement) -> Result<()> {
        if !self.in_k(x)? {
            return Err(WeilError::invalid(format!(
                "element does not stabilize the standard lattice at p = {}",
                self.p
            )));
        }
        Ok(())
    }

    /// Characteristic polynomial of the reduction x̄ ∈ Sp(2n, 𝔽_p),
    /// low-degree coefficients first.
    fn reduced_char_poly(&self, x: &SpElement) -> Result<Vec<u64>> {
        self.require_in_k(x)?;
        x.mat()
            .char_poly()?
            .iter()
            .map(|c| mod_p(c, self.p).map_err(WeilError::from))
            .collect()
    }

    /// Whether the reduction x̄ ∈ Sp(2n, 𝔽_p) is regular semisimple.
    ///
    /// Eigenvalues of a symplectic matrix pair up as λ, λ⁻¹, and the fixed
    /// points ±1 of that pairing can only occur with even multiplicity; so
    /// the centralizer of x̄ is a maximal torus exactly when the reduced
    /// characteristic polynomial is squarefree. In that case neither +1
    /// nor −1 is an eigenvalue of x̄, hence (x±1)L = L.
    pub fn reduction_regular(&self, x: &SpElement) -> Result<bool> {
        Ok(fp_poly_is_squarefree(
            &self.reduced_char_poly(x)?,
            self.p,
        ))
    }

    /// Whether x is topologically unipotent: the reduction x̄ is unipotent,
    /// i.e. the reduced characteristic polynomial is (T−1)^{2n}.
    pub fn top_unipotent(&self, x: &SpElement) -> Result<bool> {
        let mut target = vec![1u64];
        for _ in 0..2 * self.n {
            target = fp_poly_mul(&target, &[self.p - 1, 1], self.p);
        }
        Ok(self.reduced_char_poly(x)? == target)
    }

    /// v_p(det(x−1)), erroring when 1 is an eigenvalue of x.
    fn det_minus_valuation(&self, x: &SpElement) -> Result<i64> {
        let m = x.mat().sub(&Mat::identity(2 * self.n))?;
        let d = m.det()?;
        if d.is_zero() {
            return Err(WeilError::invalid("1 is an eigenvalue of the element"));
        }
        Ok(vp(&d, self.p)?)
    }

    /// p^v as the summand count, guarded against overflow.
    fn coset_count(&self, v: i64) -> Result<u64> {
        debug_assert!(v >= 0, "p-integral matrices have nonnegative det valuation");
        self.p.checked_pow(v as u32).ok_or_else(|| {
            WeilError::invalid(format!("coset count p^{v} overflows at p = {}", self.p))
        })
    }

    /// The character as the exact finite sum Σ ψ(⟨x(w)|w⟩/2) over the
    /// quotient (x−1)⁻¹L/L, for x ∈ K with det(x−1) ≠ 0.
    pub fn theta_lattice(&self, x: &SpElement) -> Result<ThetaVal> {
        self.require_in_k(x)?;
        let v = self.det_minus_valuation(x)?;
        let m = x.mat().sub(&Mat::identity(2 * self.n))?;
        let mut value = CycNum::zero(1)?;
        for w in quotient_representatives(&m, self.p)? {
            let xw = x.mat().mul_vec(&w)?;
            let exponent = self.space.pairing(&xw, &w)? * rat(1, 2);
            value = value.add(&psi_value(&exponent, self.p)?)?;
        }
        Ok(ThetaVal {
            value,
            det_minus_valuation: v,
            terms: self.coset_count(v)?,
            place: self.place(),
        })
    }

    /// The closed form |det(x−1)|^{−1/2}·γ_ψ(q[C_x]) for topologically
    /// unipotent x ∈ K with det(x−1) ≠ 0, as an exact cyclotomic number
    /// (the half-integer power of p goes through the Gauss-sum
    /// representation of √p).
    pub fn theta_via_cayley(&self, x: &SpElement) -> Result<ThetaVal> {
        if !self.top_unipotent(x)? {
            return Err(WeilError::invalid(
                "the closed form needs a topologically unipotent element",
            ));
        }
        let v = self.det_minus_valuation(x)?;
        let gamma = self.cayley_weil_index(x)?;
        let value = sqrt_p_pow(self.p, v as u32)?.mul(&mu8_cyc(gamma, 1)?)?;
        Ok(ThetaVal {
            value,
            det_minus_valuation: v,
            terms: self.coset_count(v)?,
            place: self.place(),
        })
    }

    /// γ_ψ(q[C_x]) ∈ μ₈ for x without eigenvalue ±1.
    pub fn cayley_weil_index(&self, x: &SpElement) -> Result<base_field::Mu8> {
        self.check_space(x)?;
        let c = cayley(x)?;
        let q: QForm = q_of_x(&c, &self.place())?;
        Ok(q.weil_index(&self.psi)?)
    }

    /// Verifies the ratio identity
    ///
    ///   Θ(x) = γ_ψ(q[C_x]) · |det(x+1)/det(x−1)|^{1/2} · Θ(−x)
    ///
    /// exactly in a common cyclotomic field, for x ∈ K with
    /// det(x²−1) ≠ 0. Both sides are cleared of negative half-powers of p
    /// before comparison.
    pub fn theta_ratio_check(&self, x: &SpElement) -> Result<bool> {
        self.require_in_k(x)?;
        let minus_x = SpElement::new(self.space.clone(), x.mat().neg())?;
        let v_minus = self.det_minus_valuation(x)?;
        let v_plus = self.det_minus_valuation(&minus_x).map_err(|_| {
            WeilError::invalid("−1 is an eigenvalue of the element")
        })?;
        let gamma = self.cayley_weil_index(x)?;
        let lhs = self
            .theta_lattice(x)?
            .value
            .mul(&sqrt_p_pow(self.p, v_plus as u32)?)?;
        let rhs = self
            .theta_lattice(&minus_x)?
            .value
            .mul(&sqrt_p_pow(self.p, v_minus as u32)?)?
            .mul(&mu8_cyc(gamma, 1)?)?;
        Ok(lhs == rhs)
    }

    /// Verifies the product law Θ(x) = Π_k Θ^{[k]}(x_k) for an element
    /// that is block-diagonal along the L-compatible orthogonal splitting
    /// with the given sizes (n = Σ sizes). Also checks that the coset
    /// counts multiply.
    pub fn theta_decompose(&self, x: &SpElement, sizes: &[usize]) -> Result<bool> {
        let whole = self.theta_lattice(x)?;
        let mut product = CycNum::one(1)?;
        let mut valuation_sum = 0;
        for block in split_blocks(x, sizes)? {
            let factor = LatticeModel::new(self.p, block.space().half_dim())?
                .theta_lattice(&block)?;
            product = product.mul(&factor.value)?;
            valuation_sum += factor.det_minus_valuation;
        }
        Ok(whole.value == product && whole.det_minus_valuation == valuation_sum)
    }
}

/// An exact character value together with the data that normalizes it.
#[derive(Debug, Clone)]
pub struct ThetaVal {
    /// The value Θ_ψ(x) as an exact cyclotomic number.
    pub value: CycNum,
    /// v_p(det(x−1)); the value has modulus p^{v/2}.
    pub det_minus_valuation: i64,
    /// Number of summands of the defining sum, p^{v_p(det(x−1))}.
    pub terms: u64,
    /// The place the model lives at.
    pub place: Place,
}
