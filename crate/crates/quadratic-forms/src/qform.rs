//! Quadratic forms over one place of ℚ: diagonalization, classification
//! invariants (determinant class, Hasse invariant, signature), the Weil
//! index, and the Witt group.

use crate::diagonal::congruence_diagonal;
use base_field::linalg::Mat;
use base_field::rat::{rat_int, Rat};
use base_field::symbols::{hilbert, is_square, square_class_eq, weil_index_rank1};
use base_field::{BaseError, Mu8, Place, PsiSpec, Result, Sign};
use num::{One, Signed, Zero};

/// A nondegenerate quadratic form at a place, stored either as diagonal
/// coefficients or as a symmetric Gram matrix.
#[derive(Debug, Clone)]
pub struct QForm {
    place: Place,
    repr: QRepr,
}

#[derive(Debug, Clone)]
enum QRepr {
    Diag(Vec<Rat>),
    Gram(Mat),
}

impl QForm {
    /// Diagonal form ⟨a₁,…,a_m⟩; entries must be nonzero.
    pub fn diag(place: Place, entries: Vec<Rat>) -> Result<QForm> {
        if entries.iter().any(|a| a.is_zero()) {
            return Err(BaseError::invalid("diagonal entry is zero"));
        }
        Ok(QForm {
            place,
            repr: QRepr::Diag(entries),
        })
    }

    /// Form with the given symmetric nondegenerate Gram matrix.
    pub fn from_gram(place: Place, gram: Mat) -> Result<QForm> {
        if !gram.is_symmetric() {
            return Err(BaseError::invalid("Gram matrix is not symmetric"));
        }
        if gram.rows() > 0 && gram.det()?.is_zero() {
            return Err(BaseError::invalid("Gram matrix is degenerate"));
        }
        Ok(QForm {
            place,
            repr: QRepr::Gram(gram),
        })
    }

    /// The hyperbolic form m·ℍ = ⟨1,−1,…,1,−1⟩.
    pub fn hyperbolic(place: Place, m: usize) -> QForm {
        let mut entries = Vec::with_capacity(2 * m);
        for _ in 0..m {
            entries.push(Rat::one());
            entries.push(-Rat::one());
        }
        QForm {
            place,
            repr: QRepr::Diag(entries),
        }
    }

    pub fn place(&self) -> &Place {
        &self.place
    }

    pub fn rank(&self) -> usize {
        match &self.repr {
            QRepr::Diag(v) => v.len(),
            QRepr::Gram(g) => g.rows(),
        }
    }

    /// Diagonal coefficients of an isometric diagonal form.
    pub fn entries(&self) -> Result<Vec<Rat>> {
        match &self.repr {
            QRepr::Diag(v) => Ok(v.clone()),
            QRepr::Gram(g) => {
                let (radical, entries) = congruence_diagonal(g)?;
                if radical > 0 {
                    return Err(BaseError::invalid("Gram matrix is degenerate"));
                }
                Ok(entries)
            }
        }
    }

    /// The same form in diagonal representation.
    pub fn diagonalize(&self) -> Result<QForm> {
        Ok(QForm {
            place: self.place,
            repr: QRepr::Diag(self.entries()?),
        })
    }

    /// det q as an explicit rational (well defined up to squares).
    pub fn det(&self) -> Result<Rat> {
        Ok(self
            .entries()?
            .iter()
            .fold(Rat::one(), |acc, a| acc * a))
    }

    /// Hasse invariant s(q) = Π_{i<j} (a_i, a_j) at the form's place.
    pub fn hasse(&self) -> Result<Sign> {
        let entries = self.entries()?;
        let mut s = Sign::Plus;
        for i in 0..entries.len() {
            for j in (i + 1)..entries.len() {
                s *= hilbert(&entries[i], &entries[j], &self.place)?;
            }
        }
        Ok(s)
    }

    /// Signature (positives, negatives) — real place only.
    pub fn signature(&self) -> Result<(usize, usize)> {
        if !self.place.is_real() {
            return Err(BaseError::NotRealPlace);
        }
        let entries = self.entries()?;
        let pos = entries.iter().filter(|a| a.is_positive()).count();
        Ok((pos, entries.len() - pos))
    }

    /// Weil index γ_ψ(q) ∈ μ₈, computed through the closed form
    /// γ_ψ(q) = γ_ψ(1)^{m−1}·γ_ψ(det q)·s(q) on a diagonalization.
    pub fn weil_index(&self, psi: &PsiSpec) -> Result<Mu8> {
        if psi.place != self.place {
            return Err(BaseError::invalid("place of psi differs from the form's"));
        }
        let m = self.rank();
        if m == 0 {
            return Ok(Mu8::ONE);
        }
        let g1 = weil_index_rank1(&Rat::one(), &self.place)?;
        let gdet = weil_index_rank1(&self.det()?, &self.place)?;
        Ok(g1.pow((m as i64) - 1) * gdet * self.hasse()?)
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &QForm) -> Result<QForm> {
        if self.place != other.place {
            return Err(BaseError::invalid("direct sum across different places"));
        }
        let mut entries = self.entries()?;
        entries.extend(other.entries()?);
        Ok(QForm {
            place: self.place,
            repr: QRepr::Diag(entries),
        })
    }

    /// The scaled form t·q (t ≠ 0).
    pub fn scale(&self, t: &Rat) -> Result<QForm> {
        if t.is_zero() {
            return Err(BaseError::invalid("scaling a form by zero"));
        }
        Ok(QForm {
            place: self.place,
            repr: QRepr::Diag(self.entries()?.into_iter().map(|a| a * t).collect()),
        })
    }

    /// −q.
    pub fn neg(&self) -> Result<QForm> {
        self.scale(&-Rat::one())
    }

    /// The Witt class of the form.
    pub fn witt_class(&self) -> Result<WittClass> {
        match &self.place {
            Place::Real => {
                let (pos, neg) = self.signature()?;
                Ok(WittClass::Real {
                    sig: pos as i64 - neg as i64,
                })
            }
            Place::Padic(_) => {
                let entries = self.entries()?;
                let mut rank = entries.len();
                let mut det = entries.iter().fold(Rat::one(), |acc, a| acc * a);
                let mut hasse = self.hasse()?;
                // Split hyperbolic planes until the invariants describe an
                // anisotropic form. For q = ℍ ⊥ q′:
                //   det q′ = −det q,  s(q′) = s(q)·(−1, det q′).
                while rank >= 2 && padic_isotropic(rank, &det, hasse, &self.place)? {
                    rank -= 2;
                    det = -det;
                    hasse *= hilbert(&rat_int(-1), &det, &self.place)?;
                }
                if rank == 0 {
                    det = Rat::one();
                    hasse = Sign::Plus;
                }
                Ok(WittClass::Padic {
                    rank,
                    det: normalize_class(&det, &self.place)?,
                    hasse,
                })
            }
        }
    }
}

/// Isotropy of a p-adic form (p odd) from its invariants alone:
/// rank 1 forms are anisotropic; rank 2 are isotropic iff det ~ −1;
/// rank 3 iff s(q) = (−1, −det); rank 4 anisotropic only for the norm
/// form (det ~ 1, s = −(−1,−1)); rank ≥ 5 always isotropic.
fn padic_isotropic(rank: usize, det: &Rat, hasse: Sign, place: &Place) -> Result<bool> {
    Ok(match rank {
        0 | 1 => false,
        2 => square_class_eq(det, &rat_int(-1), place)?,
        3 => hasse == hilbert(&rat_int(-1), &(-det.clone()), place)?,
        4 => {
            let norm_form = is_square(det, place)?
                && hasse == -hilbert(&rat_int(-1), &rat_int(-1), place)?;
            !norm_form
        }
        _ => true,
    })
}

/// Canonical small representative of a square class at the place:
/// ±1 at ℝ; one of {1, r, p, r·p} at ℚ_p (r = least nonresidue).
pub fn normalize_class(a: &Rat, place: &Place) -> Result<Rat> {
    if a.is_zero() {
        return Err(BaseError::ZeroValuation);
    }
    match place {
        Place::Real => Ok(if a.is_positive() {
            Rat::one()
        } else {
            -Rat::one()
        }),
        Place::Padic(p) => {
            let r = (2..*p)
                .map(rat_int_u)
                .find(|r| !is_square(r, place).unwrap())
                .expect("odd prime has a nonresidue");
            for cand in [
                Rat::one(),
                r.clone(),
                rat_int_u(*p),
                r * rat_int_u(*p),
            ] {
                if square_class_eq(a, &cand, place)? {
                    return Ok(cand);
                }
            }
            unreachable!("the four square classes cover Q_p^× for odd p");
        }
    }
}

fn rat_int_u(n: u64) -> Rat {
    Rat::from_integer(n.into())
}

/// Witt-group element, as anisotropic-kernel invariants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WittClass {
    /// Real place: signature difference n₊ − n₋ of the form.
    Real { sig: i64 },
    /// p-adic place: invariants of the anisotropic kernel.
    Padic { rank: usize, det: Rat, hasse: Sign },
}

impl WittClass {
    pub fn is_zero(&self) -> bool {
        match self {
            WittClass::Real { sig } => *sig == 0,
            WittClass::Padic { rank, .. } => *rank == 0,
        }
    }
}

/// Witt equivalence: equality in the Witt group.
pub fn witt_equal(q1: &QForm, q2: &QForm) -> Result<bool> {
    if q1.place() != q2.place() {
        return Err(BaseError::invalid("Witt comparison across places"));
    }
    Ok(q1.witt_class()? == q2.witt_class()?)
}

/// Isometry: over ℝ equality of signatures; over ℚ_p equality of rank,
/// determinant class, and Hasse invariant (complete invariants).
pub fn isometric(q1: &QForm, q2: &QForm) -> Result<bool> {
    if q1.place() != q2.place() {
        return Err(BaseError::invalid("isometry comparison across places"));
    }
    if q1.rank() != q2.rank() {
        return Ok(false);
    }
    match q1.place() {
        Place::Real => Ok(q1.signature()? == q2.signature()?),
        Place::Padic(_) => Ok(square_class_eq(&q1.det()?, &q2.det()?, q1.place())?
            && q1.hasse()? == q2.hasse()?),
    }
}
