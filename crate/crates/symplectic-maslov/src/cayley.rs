//! Cayley transforms and the quadratic forms q[X].

use crate::space::{SpElement, SpLieElement};
use base_field::linalg::Mat;
use base_field::rat::rat_int;
use base_field::{BaseError, Place, Result};
use num::Zero;
use quadratic_forms::QForm;

/// The Cayley transform C_x = 2(x−1)(x+1)⁻¹, defined when −1 is not an
/// eigenvalue of x; it lands in the symplectic Lie algebra.
pub fn cayley(x: &SpElement) -> Result<SpLieElement> {
    let id = Mat::identity(x.space().dim());
    let xp1 = x.mat().add(&id)?;
    if xp1.det()?.is_zero() {
        return Err(BaseError::invalid(
            "Cayley transform undefined: −1 is an eigenvalue",
        ));
    }
    let c = x
        .mat()
        .sub(&id)?
        .mul(&xp1.inverse()?)?
        .scale(&rat_int(2));
    SpLieElement::new(x.space().clone(), c)
}

/// The inverse Cayley transform x = (2+X)(2−X)⁻¹, defined when 2 is not
/// an eigenvalue of X; it lands in the symplectic group and satisfies
/// C_x = X exactly, so it parametrizes group elements by Lie algebra
/// elements without any series truncation.
pub fn cayley_inverse(x: &SpLieElement) -> Result<SpElement> {
    let two = Mat::scalar(x.space().dim(), &rat_int(2));
    let denom = two.sub(x.mat())?;
    if denom.det()?.is_zero() {
        return Err(BaseError::invalid(
            "inverse Cayley transform undefined: 2 is an eigenvalue",
        ));
    }
    let g = two.add(x.mat())?.mul(&denom.inverse()?)?;
    SpElement::new(x.space().clone(), g)
}

/// The quadratic form q[X](w₁|w₂) = ⟨Xw₁|w₂⟩ on W, with symmetric Gram
/// matrix XᵀJ; X must be invertible for the form to be nondegenerate.
pub fn q_of_x(x: &SpLieElement, place: &Place) -> Result<QForm> {
    if x.mat().det()?.is_zero() {
        return Err(BaseError::invalid(
            "q[X] needs an invertible Lie algebra element",
        ));
    }
    let gram = x.mat().transpose().mul(x.space().gram())?;
    QForm::from_gram(*place, gram)
}
