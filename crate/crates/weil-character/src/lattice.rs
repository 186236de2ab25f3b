//! Lattice-quotient enumeration and block splittings of the standard
//! self-dual lattice L = ℤ^{2n}.
//!
//! The basis convention throughout is the standard symplectic one:
//! coordinates 0..n are the e-part, coordinates n..2n the f-part, and the
//! Gram matrix is J = [[0, I], [−I, 0]]. A partition n = n₁ + … + n_r
//! splits W into the orthogonal symplectic subspaces
//! W_k = span(e_i, f_i : i in the k-th index range), each of which meets
//! L in its own standard lattice, so L = ⊕ L_k.

use crate::error::{Result, WeilError};
use base_field::linalg::{snf_at_p, Mat};
use base_field::rat::{vp, Rat};
use num::Zero;
use symplectic_maslov::{SpElement, SympSpace};

/// Representatives of the finite quotient A⁻¹L/L for a square, invertible,
/// p-integral matrix A, where L = ℤ^{m} localized at p.
///
/// Via a Smith reduction E·A·C = diag(d_i) over ℤ_(p), the classes are
/// exactly C·(s_i/d_i) for s_i ∈ [0, p^{v_p(d_i)}); the count is
/// p^{v_p(det A)}. Every representative w returned satisfies A·w ∈ L, and
/// distinct representatives differ by a non-p-integral vector.
pub fn quotient_representatives(a: &Mat, p: u64) -> Result<Vec<Vec<Rat>>> {
    if !a.is_square() {
        return Err(WeilError::invalid("quotient of a non-square matrix"));
    }
    if a.rows() > 0 && a.det()?.is_zero() {
        return Err(WeilError::invalid(
            "quotient A⁻¹L/L needs an invertible matrix",
        ));
    }
    let snf = snf_at_p(a, p)?;
    let m = a.rows();
    let orders: Vec<u64> = snf
        .diag
        .iter()
        .map(|d| {
            let v = vp(d, p).expect("Smith diagonal entries are nonzero");
            debug_assert!(v >= 0, "Smith diagonal of a p-integral matrix");
            p.pow(v as u32)
        })
        .collect();
    let total: u64 = orders.iter().product();
    let mut reps = Vec::with_capacity(total as usize);
    let mut counters = vec![0u64; m];
    loop {
        let scaled: Vec<Rat> = (0..m)
            .map(|i| Rat::new(counters[i].into(), 1.into()) / &snf.diag[i])
            .collect();
        reps.push(snf.col_transform.mul_vec(&scaled)?);
        // Lexicographic increment over ∏ [0, orders_i).
        let mut pos = m;
        while pos > 0 {
            pos -= 1;
            counters[pos] += 1;
            if counters[pos] < orders[pos] {
                break;
            }
            counters[pos] = 0;
            if pos == 0 {
                debug_assert_eq!(reps.len() as u64, total);
                return Ok(reps);
            }
        }
        if m == 0 {
            return Ok(reps);
        }
    }
}

/// Which block of the partition a global coordinate belongs to, under the
/// (e-part, f-part) layout described in the module docs.
fn part_of(g: usize, n: usize, offsets: &[usize], sizes: &[usize]) -> usize {
    let i = if g < n { g } else { g - n };
    offsets
        .iter()
        .zip(sizes)
        .position(|(o, s)| (*o..o + s).contains(&i))
        .expect("offsets cover 0..n")
}

fn offsets_of(sizes: &[usize]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for s in sizes {
        offsets.push(acc);
        acc += s;
    }
    offsets
}

/// Global coordinate of local coordinate l of the block at `offset` of
/// size `size`, inside the ambient 2n-dimensional space.
fn global_index(l: usize, offset: usize, size: usize, n: usize) -> usize {
    if l < size {
        offset + l
    } else {
        n + offset + (l - size)
    }
}

/// Split a block-diagonal element along the partition `sizes` of n.
///
/// Errors if the sizes are zero or do not sum to n, or if the matrix has a
/// nonzero entry coupling two different blocks (the element then does not
/// preserve the splitting L = ⊕ L_k).
pub fn split_blocks(x: &SpElement, sizes: &[usize]) -> Result<Vec<SpElement>> {
    let n = x.space().half_dim();
    if sizes.iter().any(|&s| s == 0) {
        return Err(WeilError::invalid("empty block in a splitting"));
    }
    if sizes.iter().sum::<usize>() != n {
        return Err(WeilError::invalid(format!(
            "block sizes sum to {}, expected {n}",
            sizes.iter().sum::<usize>()
        )));
    }
    let offsets = offsets_of(sizes);
    for r in 0..2 * n {
        for c in 0..2 * n {
            if part_of(r, n, &offsets, sizes) != part_of(c, n, &offsets, sizes)
                && !x.mat().at(r, c).is_zero()
            {
                return Err(WeilError::invalid(format!(
                    "entry ({r}, {c}) couples two blocks of the splitting",
                )));
            }
        }
    }
    let mut blocks = Vec::with_capacity(sizes.len());
    for (&offset, &size) in offsets.iter().zip(sizes) {
        let mat = Mat::from_fn(2 * size, 2 * size, |r, c| {
            x.mat()
                .at(
                    global_index(r, offset, size, n),
                    global_index(c, offset, size, n),
                )
                .clone()
        });
        blocks.push(SpElement::new(SympSpace::standard(size), mat)?);
    }
    Ok(blocks)
}

/// Assemble a block-diagonal element of Sp(2n) from elements of the
/// Sp(2n_k), n = Σ n_k, inverse to [`split_blocks`].
pub fn embed_blocks(blocks: &[SpElement]) -> Result<SpElement> {
    if blocks.is_empty() {
        return Err(WeilError::invalid("embedding an empty list of blocks"));
    }
    let sizes: Vec<usize> = blocks.iter().map(|b| b.space().half_dim()).collect();
    if sizes.iter().any(|&s| s == 0) {
        return Err(WeilError::invalid("empty block in a splitting"));
    }
    let n: usize = sizes.iter().sum();
    let offsets = offsets_of(&sizes);
    let mut mat = Mat::zeros(2 * n, 2 * n);
    for ((block, &offset), &size) in blocks.iter().zip(&offsets).zip(&sizes) {
        for r in 0..2 * size {
            for c in 0..2 * size {
                *mat.at_mut(
                    global_index(r, offset, size, n),
                    global_index(c, offset, size, n),
                ) = block.mat().at(r, c).clone();
            }
        }
    }
    Ok(SpElement::new(SympSpace::standard(n), mat)?)
}
