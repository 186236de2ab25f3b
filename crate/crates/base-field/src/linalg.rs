//! Exact dense linear algebra over ℚ: Gaussian elimination, determinants,
//! inverses, kernels, characteristic polynomials, Smith reduction over ℤ_(p),
//! and symplectic (Darboux) bases for unimodular alternating forms.

use crate::error::{BaseError, Result};
use crate::rat::{is_p_integral, rat_int, vp, Rat};
use num::{One, Signed, Zero};

/// A dense rows×cols matrix over ℚ, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Mat> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(BaseError::Dim("ragged row lengths".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    /// Scalar matrix c·I.
    pub fn scalar(n: usize, c: &Rat) -> Mat {
        Mat::from_fn(n, n, |i, j| if i == j { c.clone() } else { Rat::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn col(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(BaseError::Dim("matrix add".into()));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(BaseError::Dim("matrix sub".into()));
        }
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn neg(&self) -> Mat {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.rows {
            return Err(BaseError::Dim(format!(
                "matrix mul {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        *out.at_mut(i, j) += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix–vector product.
    pub fn mul_vec(&self, v: &[Rat]) -> Result<Vec<Rat>> {
        if self.cols != v.len() {
            return Err(BaseError::Dim("matrix-vector mul".into()));
        }
        Ok((0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.at(i, j) * &v[j])
                    .fold(Rat::zero(), |a, b| a + b)
            })
            .collect())
    }

    pub fn trace(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(BaseError::Dim("trace of non-square matrix".into()));
        }
        Ok((0..self.rows)
            .map(|i| self.at(i, i).clone())
            .fold(Rat::zero(), |a, b| a + b))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.at(i, j) == self.at(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (0..=i).all(|j| *self.at(i, j) == -self.at(j, i).clone()))
    }

    /// Horizontal concatenation [self | other].
    pub fn hstack(&self, other: &Mat) -> Result<Mat> {
        if self.rows != other.rows {
            return Err(BaseError::Dim("hstack".into()));
        }
        Ok(Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        }))
    }

    /// Vertical concatenation [self; other].
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        if self.cols != other.cols {
            return Err(BaseError::Dim("vstack".into()));
        }
        Ok(Mat::from_fn(self.rows + other.rows, self.cols, |i, j| {
            if i < self.rows {
                self.at(i, j).clone()
            } else {
                other.at(i - self.rows, j).clone()
            }
        }))
    }

    /// Block diagonal [self ⊕ other].
    pub fn block_diag(&self, other: &Mat) -> Mat {
        Mat::from_fn(
            self.rows + other.rows,
            self.cols + other.cols,
            |i, j| {
                if i < self.rows && j < self.cols {
                    self.at(i, j).clone()
                } else if i >= self.rows && j >= self.cols {
                    other.at(i - self.rows, j - self.cols).clone()
                } else {
                    Rat::zero()
                }
            },
        )
    }

    /// Columns-as-basis from a list of column vectors.
    pub fn from_cols(cols: Vec<Vec<Rat>>) -> Result<Mat> {
        let m = Mat::from_rows(cols)?;
        Ok(m.transpose())
    }

    /// Reduced row-echelon form; returns (rref, pivot column indices).
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = vec![];
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // Find a pivot in column c at or below row r.
            let Some(pr) = (r..m.rows).find(|&i| !m.at(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, pr);
            let inv = Rat::one() / m.at(r, c).clone();
            for j in 0..m.cols {
                *m.at_mut(r, j) *= &inv;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let s = m.at(r, j) * &f;
                        *m.at_mut(i, j) -= s;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data
                .swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space {v : Av = 0}, as column vectors.
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let mut basis = vec![];
        for &fc in &free {
            let mut v = vec![Rat::zero(); self.cols];
            v[fc] = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.at(row, fc).clone();
            }
            basis.push(v);
        }
        basis
    }

    pub fn det(&self) -> Result<Rat> {
        if !self.is_square() {
            return Err(BaseError::Dim("det of non-square matrix".into()));
        }
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let Some(pr) = (c..n).find(|&i| !m.at(i, c).is_zero()) else {
                return Ok(Rat::zero());
            };
            if pr != c {
                m.swap_rows(c, pr);
                det = -det;
            }
            let pivot = m.at(c, c).clone();
            det *= &pivot;
            let inv = Rat::one() / pivot;
            for i in (c + 1)..n {
                if m.at(i, c).is_zero() {
                    continue;
                }
                let f = m.at(i, c) * &inv;
                for j in c..n {
                    let s = m.at(c, j) * &f;
                    *m.at_mut(i, j) -= s;
                }
            }
        }
        Ok(det)
    }

    pub fn inverse(&self) -> Result<Mat> {
        if !self.is_square() {
            return Err(BaseError::Dim("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(n))?;
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().take(n).enumerate().any(|(i, &c)| c != i) {
            return Err(BaseError::Singular);
        }
        Ok(Mat::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    /// Solve A·x = b for square invertible A.
    pub fn solve(&self, b: &[Rat]) -> Result<Vec<Rat>> {
        if !self.is_square() || self.rows != b.len() {
            return Err(BaseError::Dim("solve".into()));
        }
        let bm = Mat::from_cols(vec![b.to_vec()])?;
        let aug = self.hstack(&bm)?;
        let (r, pivots) = aug.rref();
        if pivots.len() < self.rows || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(BaseError::Singular);
        }
        Ok((0..self.rows).map(|i| r.at(i, self.cols).clone()).collect())
    }

    /// Characteristic polynomial det(λI − A), little-endian, monic,
    /// length n+1 (Faddeev–LeVerrier; exact over ℚ).
    pub fn char_poly(&self) -> Result<Vec<Rat>> {
        if !self.is_square() {
            return Err(BaseError::Dim("char_poly of non-square matrix".into()));
        }
        let n = self.rows;
        let mut coeffs = vec![Rat::zero(); n + 1];
        coeffs[n] = Rat::one();
        if n == 0 {
            return Ok(coeffs);
        }
        let mut m = self.clone();
        coeffs[n - 1] = -m.trace()?;
        for k in 2..=n {
            // M_k = A·(M_{k−1} + c_{n−k+1}·I)
            let shifted = m.add(&Mat::scalar(n, &coeffs[n - k + 1]))?;
            m = self.mul(&shifted)?;
            coeffs[n - k] = -(m.trace()? / rat_int(k as i64));
        }
        Ok(coeffs)
    }

    pub fn is_p_integral(&self, p: u64) -> bool {
        self.data.iter().all(|x| is_p_integral(x, p))
    }

    /// Whether every entry is an integer (denominator 1).
    pub fn is_z_integral(&self) -> bool {
        self.data.iter().all(|x| x.denom().is_one())
    }

    /// Max-norm numerator/denominator size guard helper (for diagnostics).
    pub fn entry_abs_max(&self) -> Rat {
        self.data
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(Rat::zero)
    }
}

/// Result of Smith reduction over the local ring ℤ_(p).
///
/// `diag` lists d_1,…,d_n with E·A·C = diag(d_i) for ℤ_(p)-unimodular E, C;
/// `col_transform` is C. The valuations of the d_i sum to v_p(det A).
#[derive(Debug, Clone)]
pub struct SnfAtP {
    pub diag: Vec<Rat>,
    pub col_transform: Mat,
}

/// Smith reduction of a square, invertible, p-integral matrix over ℤ_(p).
///
/// Only the column transform is accumulated (that is what lattice-quotient
/// enumeration needs: A^{-1}L/L has representatives C·diag(d_i^{-1})·s over
/// s ∈ ∏ [0, p^{v(d_i)}) ).
pub fn snf_at_p(a: &Mat, p: u64) -> Result<SnfAtP> {
    if !a.is_square() {
        return Err(BaseError::Dim("snf_at_p of non-square matrix".into()));
    }
    if !a.is_p_integral(p) {
        return Err(BaseError::NotIntegral {
            p,
            what: "snf_at_p input".into(),
        });
    }
    let n = a.rows();
    let mut w = a.clone();
    let mut c = Mat::identity(n);
    for k in 0..n {
        // Pivot: minimal valuation in the trailing submatrix.
        let mut best: Option<(usize, usize, i64)> = None;
        for i in k..n {
            for j in k..n {
                if w.at(i, j).is_zero() {
                    continue;
                }
                let v = vp(w.at(i, j), p).expect("nonzero");
                if best.is_none_or(|(_, _, bv)| v < bv) {
                    best = Some((i, j, v));
                }
            }
        }
        let Some((pi, pj, _)) = best else {
            return Err(BaseError::Singular);
        };
        w.swap_rows(k, pi);
        // Swap columns k and pj in both w and c.
        if pj != k {
            for i in 0..n {
                let tmp = w.at(i, k).clone();
                *w.at_mut(i, k) = w.at(i, pj).clone();
                *w.at_mut(i, pj) = tmp;
                let tmp = c.at(i, k).clone();
                *c.at_mut(i, k) = c.at(i, pj).clone();
                *c.at_mut(i, pj) = tmp;
            }
        }
        let pivot = w.at(k, k).clone();
        // Clear the column below (row operations; not tracked).
        for i in (k + 1)..n {
            if w.at(i, k).is_zero() {
                continue;
            }
            let f = w.at(i, k) / &pivot;
            debug_assert!(is_p_integral(&f, p), "pivot had minimal valuation");
            for j in k..n {
                let s = w.at(k, j) * &f;
                *w.at_mut(i, j) -= s;
            }
        }
        // Clear the row to the right (column operations; tracked in c).
        for j in (k + 1)..n {
            if w.at(k, j).is_zero() {
                continue;
            }
            let f = w.at(k, j) / &pivot;
            debug_assert!(is_p_integral(&f, p), "pivot had minimal valuation");
            for i in 0..n {
                let s = w.at(i, k) * &f;
                *w.at_mut(i, j) -= s;
                let s = c.at(i, k) * &f;
                *c.at_mut(i, j) -= s;
            }
        }
    }
    let diag = (0..n).map(|i| w.at(i, i).clone()).collect();
    Ok(SnfAtP {
        diag,
        col_transform: c,
    })
}

/// The standard symplectic Gram matrix J = [[0, I], [−I, 0]] of size 2n,
/// for the pairing ⟨v|w⟩ = vᵀJw.
pub fn standard_j(n: usize) -> Mat {
    Mat::from_fn(2 * n, 2 * n, |i, j| {
        if j == i + n {
            Rat::one()
        } else if i == j + n {
            -Rat::one()
        } else {
            Rat::zero()
        }
    })
}

/// Darboux basis over ℤ_(p) for a unimodular alternating Gram matrix:
/// returns S with SᵀGS = J and S, S^{-1} both p-integral.
pub fn darboux_at_p(gram: &Mat, p: u64) -> Result<Mat> {
    if !gram.is_square() || !gram.rows().is_multiple_of(2) {
        return Err(BaseError::Dim("darboux_at_p needs an even square matrix".into()));
    }
    if !gram.is_antisymmetric() {
        return Err(BaseError::invalid("darboux_at_p: Gram is not alternating"));
    }
    if !gram.is_p_integral(p) {
        return Err(BaseError::NotIntegral {
            p,
            what: "darboux Gram".into(),
        });
    }
    let dv = vp(&gram.det()?, p).map_err(|_| BaseError::Singular)?;
    if dv != 0 {
        return Err(BaseError::invalid(
            "darboux_at_p: Gram is not unimodular at p",
        ));
    }
    let dim = gram.rows();
    let n = dim / 2;
    let pair = |u: &[Rat], v: &[Rat]| -> Rat {
        let gv = gram.mul_vec(v).expect("dims");
        u.iter()
            .zip(&gv)
            .map(|(a, b)| a * b)
            .fold(Rat::zero(), |x, y| x + y)
    };
    let mut remaining: Vec<Vec<Rat>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|k| if k == i { Rat::one() } else { Rat::zero() })
                .collect()
        })
        .collect();
    let mut es: Vec<Vec<Rat>> = vec![];
    let mut fs: Vec<Vec<Rat>> = vec![];
    while !remaining.is_empty() {
        // Find a pair with unit pairing.
        let mut found = None;
        'outer: for i in 0..remaining.len() {
            for j in (i + 1)..remaining.len() {
                let t = pair(&remaining[i], &remaining[j]);
                if !t.is_zero() && vp(&t, p).expect("nonzero") == 0 {
                    found = Some((i, j));
                    break 'outer;
                }
            }
        }
        let Some((i, j)) = found else {
            return Err(BaseError::invalid(
                "darboux_at_p: no unit pairing among remaining vectors",
            ));
        };
        let e = remaining[i].clone();
        let t = pair(&remaining[i], &remaining[j]);
        let f: Vec<Rat> = remaining[j].iter().map(|x| x / &t).collect();
        remaining.remove(j);
        remaining.remove(i);
        for v in remaining.iter_mut() {
            // v ← v + ⟨f|v⟩e − ⟨e|v⟩f, killing both pairings.
            let a = pair(&f, v);
            let b = pair(&e, v);
            for k in 0..dim {
                let adj = &a * &e[k] - &b * &f[k];
                v[k] += adj;
            }
        }
        es.push(e);
        fs.push(f);
    }
    debug_assert_eq!(es.len(), n);
    let s = Mat::from_cols(es.into_iter().chain(fs).collect())?;
    // Verify exactly.
    let check = s.transpose().mul(&gram.mul(&s)?)?;
    if check != standard_j(n) {
        return Err(BaseError::invalid("darboux_at_p: internal check failed"));
    }
    if !s.is_p_integral(p) || (vp(&s.det()?, p) != Ok(0)) {
        return Err(BaseError::invalid("darboux_at_p: transform not unimodular"));
    }
    Ok(s)
}

/// Intersection of two column-span subspaces; returns a basis (columns).
pub fn subspace_intersection(a: &Mat, b: &Mat) -> Result<Mat> {
    if a.rows() != b.rows() {
        return Err(BaseError::Dim("subspace_intersection".into()));
    }
    // Solve [A | −B]·(α,β)ᵀ = 0; intersection vectors are A·α.
    let stacked = a.hstack(&b.neg())?;
    let ker = stacked.kernel();
    let mut vecs: Vec<Vec<Rat>> = vec![];
    for k in ker {
        let alpha = &k[..a.cols()];
        let v = a.mul_vec(alpha)?;
        vecs.push(v);
    }
    if vecs.is_empty() {
        return Ok(Mat::zeros(a.rows(), 0));
    }
    // Reduce to an independent basis.
    let m = Mat::from_cols(vecs)?;
    Ok(column_space_basis(&m))
}

/// A basis of the column space (as a matrix of columns).
///
/// The nonzero rows of rref(mᵀ) span the row space of mᵀ, i.e. the column
/// space of m.
pub fn column_space_basis(m: &Mat) -> Mat {
    let (r, pivots) = m.transpose().rref();
    let cols: Vec<Vec<Rat>> = (0..pivots.len()).map(|i| r.row(i)).collect();
    if cols.is_empty() {
        return Mat::zeros(m.rows(), 0);
    }
    Mat::from_cols(cols).expect("consistent dims")
}
