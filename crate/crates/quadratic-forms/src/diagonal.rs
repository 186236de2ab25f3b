//! Symmetric Gaussian reduction (congruence diagonalization) in
//! characteristic zero, with explicit handling of a zero diagonal and of
//! degenerate input (the radical is split off, not an error, at this
//! level).

use base_field::linalg::Mat;
use base_field::rat::Rat;
use base_field::Result;
use num::Zero;

/// Congruence-diagonalize a symmetric matrix: returns (radical dimension,
/// nonzero diagonal entries of a form isometric to the input modulo its
/// radical). The input must be symmetric.
pub fn congruence_diagonal(g: &Mat) -> Result<(usize, Vec<Rat>)> {
    if !g.is_symmetric() {
        return Err(base_field::BaseError::invalid(
            "congruence diagonalization needs a symmetric matrix",
        ));
    }
    let n = g.rows();
    let mut w = g.clone();
    let mut entries = Vec::new();
    let mut radical = 0usize;

    // Symmetric row+column operations on the trailing block [k.., k..].
    let mut k = 0usize;
    while k < n {
        // Ensure a nonzero pivot at (k, k).
        if w.at(k, k).is_zero() {
            if let Some(i) = (k + 1..n).find(|&i| !w.at(i, i).is_zero()) {
                sym_swap(&mut w, k, i);
            } else if let Some((i, j)) = find_offdiag(&w, k) {
                // All trailing diagonal entries vanish; w[i][j] ≠ 0 with
                // i < j. Adding row/col j onto i puts 2·w[i][j] ≠ 0 on the
                // diagonal (characteristic zero).
                sym_add(&mut w, i, j);
                if i != k {
                    sym_swap(&mut w, k, i);
                }
            } else {
                // Entire trailing block is zero: the radical.
                radical += n - k;
                break;
            }
        }
        let pivot = w.at(k, k).clone();
        for i in (k + 1)..n {
            if w.at(i, k).is_zero() {
                continue;
            }
            let f = w.at(i, k) / &pivot;
            // row_i -= f·row_k, then col_i -= f·col_k keeps symmetry.
            for j in k..n {
                let s = w.at(k, j) * &f;
                *w.at_mut(i, j) -= s;
            }
            for j in k..n {
                let s = w.at(j, k) * &f;
                *w.at_mut(j, i) -= s;
            }
        }
        entries.push(pivot);
        k += 1;
    }
    Ok((radical, entries))
}

fn sym_swap(w: &mut Mat, a: usize, b: usize) {
    if a == b {
        return;
    }
    let n = w.rows();
    for j in 0..n {
        let t = w.at(a, j).clone();
        *w.at_mut(a, j) = w.at(b, j).clone();
        *w.at_mut(b, j) = t;
    }
    for i in 0..n {
        let t = w.at(i, a).clone();
        *w.at_mut(i, a) = w.at(i, b).clone();
        *w.at_mut(i, b) = t;
    }
}

fn sym_add(w: &mut Mat, a: usize, b: usize) {
    let n = w.rows();
    for j in 0..n {
        let t = w.at(b, j).clone();
        *w.at_mut(a, j) += t;
    }
    for i in 0..n {
        let t = w.at(i, b).clone();
        *w.at_mut(i, a) += t;
    }
}

fn find_offdiag(w: &Mat, k: usize) -> Option<(usize, usize)> {
    let n = w.rows();
    for i in k..n {
        for j in (i + 1)..n {
            if !w.at(i, j).is_zero() {
                return Some((i, j));
            }
        }
    }
    None
}
