//! Symplectic spaces, lagrangian subspaces, group and Lie algebra
//! elements, and graphs.
//!
//! A space is presented by its Gram matrix J (antisymmetric,
//! nondegenerate), so that ⟨v|w⟩ = vᵀJw. Keeping J explicit lets the
//! doubled space (W̄ ⊕ W, (−⟨·|·⟩) ⊕ ⟨·|·⟩) and orthogonal direct sums be
//! first-class citizens rather than special cases of a fixed standard
//! form.

use base_field::linalg::{standard_j, subspace_intersection, Mat};
use base_field::rat::Rat;
use base_field::{BaseError, Result};
use num::Zero;

/// A symplectic space (ℚ^{2n}, ⟨·|·⟩) given by an antisymmetric
/// nondegenerate Gram matrix J, with ⟨v|w⟩ = vᵀJw.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SympSpace {
    gram: Mat,
}

impl SympSpace {
    /// The standard 2n-dimensional space with J = [[0, I], [−I, 0]].
    pub fn standard(n: usize) -> SympSpace {
        SympSpace { gram: standard_j(n) }
    }

    /// A space with an arbitrary antisymmetric nondegenerate Gram matrix.
    pub fn new(gram: Mat) -> Result<SympSpace> {
        if !gram.is_square() || !gram.rows().is_multiple_of(2) {
            return Err(BaseError::invalid(
                "symplectic Gram matrix must be square of even size",
            ));
        }
        if !gram.is_antisymmetric() {
            return Err(BaseError::invalid(
                "symplectic Gram matrix must be antisymmetric",
            ));
        }
        if gram.rows() > 0 && gram.det()?.is_zero() {
            return Err(BaseError::invalid(
                "symplectic Gram matrix must be nondegenerate",
            ));
        }
        Ok(SympSpace { gram })
    }

    /// dim W = 2n.
    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    /// n, half the dimension.
    pub fn half_dim(&self) -> usize {
        self.gram.rows() / 2
    }

    pub fn gram(&self) -> &Mat {
        &self.gram
    }

    /// ⟨v|w⟩ = vᵀJw.
    pub fn pairing(&self, v: &[Rat], w: &[Rat]) -> Result<Rat> {
        if v.len() != self.dim() || w.len() != self.dim() {
            return Err(BaseError::Dim("symplectic pairing".into()));
        }
        let jw = self.gram.mul_vec(w)?;
        Ok(v.iter().zip(jw.iter()).map(|(a, b)| a * b).sum())
    }

    /// The doubled space (W̄ ⊕ W, (−⟨·|·⟩) ⊕ ⟨·|·⟩) that receives graphs
    /// of group elements.
    pub fn doubled(&self) -> SympSpace {
        SympSpace {
            gram: self.gram.neg().block_diag(&self.gram),
        }
    }

    /// Orthogonal direct sum W ⊕ W′.
    pub fn direct_sum(&self, other: &SympSpace) -> SympSpace {
        SympSpace {
            gram: self.gram.block_diag(&other.gram),
        }
    }
}

/// A lagrangian subspace: the column span of a 2n×n rational matrix of
/// full rank on which the symplectic form vanishes identically.
#[derive(Debug, Clone)]
pub struct Lagrangian {
    space: SympSpace,
    basis: Mat,
}

impl Lagrangian {
    /// Validates that the columns span an n-dimensional isotropic
    /// subspace: rank n and BᵀJB = 0.
    pub fn new(space: SympSpace, basis: Mat) -> Result<Lagrangian> {
        let n = space.half_dim();
        if basis.rows() != space.dim() || basis.cols() != n {
            return Err(BaseError::invalid("lagrangian basis must be 2n×n"));
        }
        if basis.rank() != n {
            return Err(BaseError::invalid(
                "lagrangian basis must have full column rank",
            ));
        }
        let pair = basis.transpose().mul(space.gram())?.mul(&basis)?;
        if pair != Mat::zeros(n, n) {
            return Err(BaseError::invalid(
                "lagrangian column span must be isotropic",
            ));
        }
        Ok(Lagrangian { space, basis })
    }

    /// The span of the first n standard basis vectors of the standard
    /// 2n-dimensional space.
    pub fn standard(n: usize) -> Lagrangian {
        let id = Mat::identity(2 * n);
        let cols: Vec<Vec<Rat>> = (0..n).map(|j| id.col(j)).collect();
        Lagrangian {
            space: SympSpace::standard(n),
            basis: Mat::from_cols(cols).expect("consistent dims"),
        }
    }

    pub fn space(&self) -> &SympSpace {
        &self.space
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    /// The transported lagrangian gℓ.
    pub fn transform(&self, g: &SpElement) -> Result<Lagrangian> {
        if g.space() != &self.space {
            return Err(BaseError::invalid(
                "group element and lagrangian live in different spaces",
            ));
        }
        Ok(Lagrangian {
            space: self.space.clone(),
            basis: g.mat().mul(&self.basis)?,
        })
    }

    /// Whether the two basis matrices span the same subspace.
    pub fn same_subspace(&self, other: &Lagrangian) -> Result<bool> {
        if self.space != other.space {
            return Err(BaseError::invalid(
                "lagrangians live in different spaces",
            ));
        }
        Ok(self.basis.hstack(&other.basis)?.rank() == self.space.half_dim())
    }

    /// dim(ℓ ∩ ℓ′).
    pub fn intersection_dim(&self, other: &Lagrangian) -> Result<usize> {
        if self.space != other.space {
            return Err(BaseError::invalid(
                "lagrangians live in different spaces",
            ));
        }
        Ok(subspace_intersection(&self.basis, &other.basis)?.cols())
    }

    /// ℓ ⊕ ℓ′ inside the orthogonal direct sum of the two spaces.
    pub fn direct_sum(&self, other: &Lagrangian) -> Lagrangian {
        Lagrangian {
            space: self.space.direct_sum(&other.space),
            basis: self.basis.block_diag(&other.basis),
        }
    }
}

/// An element of Sp(W): a 2n×2n rational matrix with xᵀJx = J.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpElement {
    space: SympSpace,
    mat: Mat,
}

impl SpElement {
    pub fn new(space: SympSpace, mat: Mat) -> Result<SpElement> {
        if mat.rows() != space.dim() || mat.cols() != space.dim() {
            return Err(BaseError::invalid("group element must be 2n×2n"));
        }
        if &mat.transpose().mul(space.gram())?.mul(&mat)? != space.gram() {
            return Err(BaseError::invalid(
                "matrix does not preserve the symplectic form",
            ));
        }
        Ok(SpElement { space, mat })
    }

    pub fn identity(space: SympSpace) -> SpElement {
        let mat = Mat::identity(space.dim());
        SpElement { space, mat }
    }

    /// The central element −1.
    pub fn minus_identity(space: SympSpace) -> SpElement {
        let mat = Mat::identity(space.dim()).neg();
        SpElement { space, mat }
    }

    pub fn space(&self) -> &SympSpace {
        &self.space
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    pub fn mul(&self, other: &SpElement) -> Result<SpElement> {
        if self.space != other.space {
            return Err(BaseError::invalid(
                "group elements live in different spaces",
            ));
        }
        Ok(SpElement {
            space: self.space.clone(),
            mat: self.mat.mul(&other.mat)?,
        })
    }

    pub fn inverse(&self) -> Result<SpElement> {
        Ok(SpElement {
            space: self.space.clone(),
            mat: self.mat.inverse()?,
        })
    }
}

/// An element of 𝔰𝔭(W): a 2n×2n rational matrix X with (JX)ᵀ = JX.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpLieElement {
    space: SympSpace,
    mat: Mat,
}

impl SpLieElement {
    pub fn new(space: SympSpace, mat: Mat) -> Result<SpLieElement> {
        if mat.rows() != space.dim() || mat.cols() != space.dim() {
            return Err(BaseError::invalid("Lie algebra element must be 2n×2n"));
        }
        let jx = space.gram().mul(&mat)?;
        if !jx.is_symmetric() {
            return Err(BaseError::invalid(
                "matrix does not lie in the symplectic Lie algebra",
            ));
        }
        Ok(SpLieElement { space, mat })
    }

    pub fn space(&self) -> &SympSpace {
        &self.space
    }

    pub fn mat(&self) -> &Mat {
        &self.mat
    }

    /// −X.
    pub fn neg(&self) -> SpLieElement {
        SpLieElement {
            space: self.space.clone(),
            mat: self.mat.neg(),
        }
    }

    /// c·X (any rational c).
    pub fn scale(&self, c: &Rat) -> SpLieElement {
        SpLieElement {
            space: self.space.clone(),
            mat: self.mat.scale(c),
        }
    }
}

/// The graph Γ_x = {(w, xw) : w ∈ W} as a lagrangian of the doubled
/// space (W̄ ⊕ W, (−⟨·|·⟩) ⊕ ⟨·|·⟩).
pub fn graph(x: &SpElement) -> Result<Lagrangian> {
    let basis = Mat::identity(x.space().dim()).vstack(x.mat())?;
    Lagrangian::new(x.space().doubled(), basis)
}
