//! Maslov indices of tuples of lagrangians.
//!
//! The triple index is realized as a quadratic space following the
//! kernel model: on ker(ℓ₁ ⊕ ℓ₂ ⊕ ℓ₃ → W, (x₁,x₂,x₃) ↦ x₁+x₂+x₃) take
//! the cyclic form q(x₁,x₂,x₃) = ⟨x₁|x₂⟩ + ⟨x₂|x₃⟩ + ⟨x₃|x₁⟩ and split
//! off its radical. Longer tuples are pinned down by their Witt class
//! and dimension only, which is all that downstream constructions
//! consume: the Witt class is assembled from triples through the chain
//! rule
//!
//! > [τ(ℓ₁,…,ℓ_m)] = Σ_{i=2}^{m−1} [τ(ℓ₁,ℓᵢ,ℓᵢ₊₁)],
//!
//! and the dimension comes from the closed formula
//!
//! > dim τ = (m−2)·dim W/2 − Σ_{i∈ℤ/m} dim(ℓᵢ∩ℓᵢ₊₁) + 2·dim ∩ᵢ ℓᵢ.

use crate::space::{Lagrangian, SpElement};
use base_field::linalg::{subspace_intersection, Mat};
use base_field::rat::{rat, Rat};
use base_field::{BaseError, Mu8, Place, PsiSpec, Result};
use num::Zero;
use quadratic_forms::{congruence_diagonal, QForm, WittClass};

/// The Kashiwara form of a lagrangian triple, evaluated at a place: a
/// nondegenerate diagonal form (possibly of rank zero) whose Witt class
/// is the Maslov index τ(ℓ₁,ℓ₂,ℓ₃) and whose rank is dim τ.
pub fn kashiwara_form(
    l1: &Lagrangian,
    l2: &Lagrangian,
    l3: &Lagrangian,
    place: &Place,
) -> Result<QForm> {
    if l1.space() != l2.space() || l2.space() != l3.space() {
        return Err(BaseError::invalid(
            "lagrangians of a triple must share one space",
        ));
    }
    let space = l1.space();
    let bases = [l1.basis(), l2.basis(), l3.basis()];

    // Kernel of the sum map ℓ₁ ⊕ ℓ₂ ⊕ ℓ₃ → W, in block coordinates.
    let stacked = bases[0].hstack(bases[1])?.hstack(bases[2])?;
    let kernel = stacked.kernel();

    // Each kernel vector, converted from block coordinates to the actual
    // triple (x₁, x₂, x₃) of vectors of W.
    let mut triples: Vec<[Vec<Rat>; 3]> = Vec::with_capacity(kernel.len());
    let (c1, c2) = (bases[0].cols(), bases[1].cols());
    for k in &kernel {
        let x1 = bases[0].mul_vec(&k[..c1])?;
        let x2 = bases[1].mul_vec(&k[c1..c1 + c2])?;
        let x3 = bases[2].mul_vec(&k[c1 + c2..])?;
        triples.push([x1, x2, x3]);
    }

    // Polar form of q(x₁,x₂,x₃) = ⟨x₁|x₂⟩ + ⟨x₂|x₃⟩ + ⟨x₃|x₁⟩:
    // b(x, y) = ½ Σ_{i∈ℤ/3} (⟨xᵢ|yᵢ₊₁⟩ + ⟨yᵢ|xᵢ₊₁⟩).
    let t = triples.len();
    let mut gram = Mat::zeros(t, t);
    let half = rat(1, 2);
    for a in 0..t {
        for b in a..t {
            let mut s = Rat::zero();
            for i in 0..3 {
                let j = (i + 1) % 3;
                s += space.pairing(&triples[a][i], &triples[b][j])?;
                s += space.pairing(&triples[b][i], &triples[a][j])?;
            }
            s *= &half;
            *gram.at_mut(a, b) = s.clone();
            *gram.at_mut(b, a) = s;
        }
    }

    let (_radical, entries) = congruence_diagonal(&gram)?;
    QForm::diag(*place, entries)
}

/// A form whose Witt class is [τ(ℓ₁,…,ℓ_m)]: the direct sum of the
/// Kashiwara forms of the chain's triples (ℓ₁,ℓᵢ,ℓᵢ₊₁), i = 2,…,m−1.
/// Its isometry class is not itself τ — only its Witt class and the
/// value of [`maslov_dim`] are meaningful.
pub fn maslov_form(ls: &[Lagrangian], place: &Place) -> Result<QForm> {
    if ls.len() < 3 {
        return Err(BaseError::invalid(
            "a Maslov index needs at least three lagrangians",
        ));
    }
    let mut q = QForm::diag(*place, vec![])?;
    for i in 1..ls.len() - 1 {
        let triple = kashiwara_form(&ls[0], &ls[i], &ls[i + 1], place)?;
        q = q.direct_sum(&triple)?;
    }
    Ok(q)
}

/// The Witt class [τ(ℓ₁,…,ℓ_m)] at a place (m ≥ 3).
pub fn maslov_witt(ls: &[Lagrangian], place: &Place) -> Result<WittClass> {
    maslov_form(ls, place)?.witt_class()
}

/// dim τ(ℓ₁,…,ℓ_m) by the closed formula
/// (m−2)·dim W/2 − Σ_{i∈ℤ/m} dim(ℓᵢ∩ℓᵢ₊₁) + 2·dim ∩ᵢ ℓᵢ (m ≥ 3).
pub fn maslov_dim(ls: &[Lagrangian]) -> Result<usize> {
    let m = ls.len();
    if m < 3 {
        return Err(BaseError::invalid(
            "a Maslov index needs at least three lagrangians",
        ));
    }
    let space = ls[0].space();
    if ls.iter().any(|l| l.space() != space) {
        return Err(BaseError::invalid(
            "lagrangians of a tuple must share one space",
        ));
    }
    let mut dim = ((m - 2) * space.dim() / 2) as i64;
    for i in 0..m {
        dim -= ls[i].intersection_dim(&ls[(i + 1) % m])? as i64;
    }
    let mut common = ls[0].basis().clone();
    for l in &ls[1..] {
        common = subspace_intersection(&common, l.basis())?;
    }
    dim += 2 * common.cols() as i64;
    if dim < 0 {
        return Err(BaseError::invalid("dimension formula yielded a negative value"));
    }
    Ok(dim as usize)
}

/// The metaplectic 2-cocycle value c_{g,g′}(ℓ) = γ_ψ(τ(ℓ, gℓ, gg′ℓ)).
pub fn cocycle_value(
    g: &SpElement,
    g2: &SpElement,
    l: &Lagrangian,
    psi: &PsiSpec,
) -> Result<Mu8> {
    let gl = l.transform(g)?;
    let ggl = l.transform(&g.mul(g2)?)?;
    kashiwara_form(l, &gl, &ggl, &psi.place)?.weil_index(psi)
}
