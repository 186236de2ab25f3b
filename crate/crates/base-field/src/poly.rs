//! Dense polynomial arithmetic over ℚ (little-endian coefficient vectors).

use crate::error::{BaseError, Result};
use crate::linalg::Mat;
use crate::rat::{mod_p, Rat};
use num::{One, Zero};

pub fn trim(mut a: Vec<Rat>) -> Vec<Rat> {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

pub fn deg(a: &[Rat]) -> Option<usize> {
    a.iter().rposition(|c| !c.is_zero())
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        if let Some(x) = a.get(i) {
            *slot += x;
        }
        if let Some(y) = b.get(i) {
            *slot += y;
        }
    }
    trim(out)
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, slot) in out.iter_mut().enumerate() {
        if let Some(x) = a.get(i) {
            *slot += x;
        }
        if let Some(y) = b.get(i) {
            *slot -= y;
        }
    }
    trim(out)
}

pub fn scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    trim(a.iter().map(|x| x * c).collect())
}

pub fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if deg(a).is_none() || deg(b).is_none() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

/// (quotient, remainder) with deg r < deg b; b nonzero.
pub fn divrem(a: &[Rat], b: &[Rat]) -> Result<(Vec<Rat>, Vec<Rat>)> {
    let b = trim(b.to_vec());
    let db = deg(&b).ok_or(BaseError::NotInvertible)?;
    let lead = b[db].clone();
    let mut r = trim(a.to_vec());
    let mut q = vec![Rat::zero(); r.len().saturating_sub(db)];
    while let Some(dr) = deg(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] / &lead;
        let shift = dr - db;
        q[shift] = c.clone();
        for (j, bc) in b.iter().enumerate() {
            let s = bc * &c;
            r[shift + j] -= s;
        }
        r = trim(r);
    }
    Ok((trim(q), r))
}

/// Monic gcd.
pub fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while deg(&y).is_some() {
        let (_, r) = divrem(&x, &y).expect("y nonzero");
        x = y;
        y = r;
    }
    if let Some(d) = deg(&x) {
        let inv = Rat::one() / x[d].clone();
        x = scale(&x, &inv);
    }
    x
}

pub fn deriv(a: &[Rat]) -> Vec<Rat> {
    if a.len() <= 1 {
        return vec![];
    }
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c * Rat::from_integer(k.into()))
            .collect(),
    )
}

pub fn eval(a: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in a.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Squarefree over ℚ: gcd(a, a′) constant.
pub fn is_squarefree(a: &[Rat]) -> bool {
    let d = deriv(a);
    if deg(&d).is_none() {
        return deg(a).is_none_or(|k| k == 0);
    }
    deg(&gcd(a, &d)) == Some(0)
}

/// a(b(T)) by Horner over polynomials.
pub fn compose(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut acc: Vec<Rat> = vec![];
    for c in a.iter().rev() {
        acc = mul(&acc, b);
        acc = add(&acc, std::slice::from_ref(c));
    }
    trim(acc)
}

pub fn pow(a: &[Rat], k: usize) -> Vec<Rat> {
    let mut acc = vec![Rat::one()];
    for _ in 0..k {
        acc = mul(&acc, a);
    }
    acc
}

/// Resultant Res(f, g) via the Sylvester matrix (exact).
pub fn resultant(f: &[Rat], g: &[Rat]) -> Result<Rat> {
    let f = trim(f.to_vec());
    let g = trim(g.to_vec());
    let m = deg(&f).ok_or_else(|| BaseError::invalid("resultant of zero polynomial"))?;
    let n = deg(&g).ok_or_else(|| BaseError::invalid("resultant of zero polynomial"))?;
    if m == 0 {
        return Ok(num::pow::pow(f[0].clone(), n));
    }
    if n == 0 {
        return Ok(num::pow::pow(g[0].clone(), m));
    }
    let size = m + n;
    let mut s = Mat::zeros(size, size);
    // n rows of f's coefficients (descending), then m rows of g's.
    for row in 0..n {
        for k in 0..=m {
            *s.at_mut(row, row + k) = f[m - k].clone();
        }
    }
    for row in 0..m {
        for k in 0..=n {
            *s.at_mut(n + row, row + k) = g[n - k].clone();
        }
    }
    s.det()
}

/// Reduce a p-integral rational polynomial mod p.
pub fn reduce_mod_p(a: &[Rat], p: u64) -> Result<Vec<u64>> {
    a.iter().map(|c| mod_p(c, p)).collect()
}

/// Reversed polynomial T^deg·a(1/T) (coefficients reversed, trimmed).
pub fn reverse(a: &[Rat]) -> Vec<Rat> {
    let a = trim(a.to_vec());
    let mut r = a;
    r.reverse();
    trim(r)
}
