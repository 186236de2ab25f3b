//! The finite fields 𝔽_q = 𝔽_p[θ]/(f) with exact small-integer arithmetic,
//! plus dense polynomial arithmetic over 𝔽_p.

use crate::error::{BaseError, Result};
use crate::place::is_prime_u64;
use crate::sign::Sign;

// ---------------------------------------------------------------------------
// Dense polynomials over F_p: little-endian Vec<u64> with entries in [0, p).
// ---------------------------------------------------------------------------

fn fpm(a: u64, p: u64) -> u64 {
    a % p
}

fn fp_add(a: u64, b: u64, p: u64) -> u64 {
    (a + b) % p
}

fn fp_sub(a: u64, b: u64, p: u64) -> u64 {
    (a + p - b % p) % p
}

fn fp_mul(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// a^k mod p.
pub fn fp_pow(a: u64, mut k: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut acc = 1u64;
    while k > 0 {
        if k & 1 == 1 {
            acc = fp_mul(acc, base, p);
        }
        base = fp_mul(base, base, p);
        k >>= 1;
    }
    acc
}

/// Drop trailing zero coefficients.
pub fn fp_poly_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub fn fp_poly_deg(a: &[u64]) -> Option<usize> {
    let t = a.iter().rposition(|&c| c != 0)?;
    Some(t)
}

pub fn fp_poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + fp_mul(x, y, p)) % p;
        }
    }
    fp_poly_trim(out)
}

/// Remainder of a modulo b (b nonzero).
pub fn fp_poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = fp_poly_trim(b.to_vec());
    let db = fp_poly_deg(&b).expect("fp_poly_rem by zero");
    let lead_inv = crate::rat::inv_mod(b[db], p);
    let mut r = fp_poly_trim(a.to_vec());
    while let Some(dr) = fp_poly_deg(&r) {
        if dr < db {
            break;
        }
        let c = fp_mul(r[dr], lead_inv, p);
        let shift = dr - db;
        for (j, &bc) in b.iter().enumerate() {
            r[shift + j] = fp_sub(r[shift + j], fp_mul(c, bc, p), p);
        }
        r = fp_poly_trim(r);
    }
    r
}

/// Monic gcd over 𝔽_p.
pub fn fp_poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = fp_poly_trim(a.to_vec());
    let mut y = fp_poly_trim(b.to_vec());
    while !y.is_empty() {
        let r = fp_poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(d) = fp_poly_deg(&x) {
        let inv = crate::rat::inv_mod(x[d], p);
        for c in x.iter_mut() {
            *c = fp_mul(*c, inv, p);
        }
    }
    x
}

pub fn fp_poly_deriv(a: &[u64], p: u64) -> Vec<u64> {
    if a.len() <= 1 {
        return vec![];
    }
    let mut out = Vec::with_capacity(a.len() - 1);
    for (k, &c) in a.iter().enumerate().skip(1) {
        out.push(fp_mul(c, (k as u64) % p, p));
    }
    fp_poly_trim(out)
}

/// Squarefree over 𝔽_p: gcd(a, a') is a nonzero constant.
pub fn fp_poly_is_squarefree(a: &[u64], p: u64) -> bool {
    let d = fp_poly_deriv(a, p);
    if fp_poly_trim(d.clone()).is_empty() {
        // Derivative vanished: either constant a (vacuously squarefree) or a
        // p-th power pattern (not squarefree for deg ≥ 1).
        return fp_poly_deg(a).is_none_or(|deg| deg == 0);
    }
    let g = fp_poly_gcd(a, &d, p);
    fp_poly_deg(&g) == Some(0)
}

pub fn fp_poly_eval(a: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in a.iter().rev() {
        acc = (fp_mul(acc, x, p) + c) % p;
    }
    acc
}

/// x^(p^k) mod (f, p), computed by k successive p-th powerings.
fn fp_frobenius_power(f: &[u64], p: u64, k: usize) -> Vec<u64> {
    let mut cur = vec![0, 1]; // x
    for _ in 0..k {
        // cur^p mod f by square-and-multiply on the exponent p.
        let mut acc = vec![1];
        let mut base = cur.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp_poly_rem(&fp_poly_mul(&acc, &base, p), f, p);
            }
            base = fp_poly_rem(&fp_poly_mul(&base, &base, p), f, p);
            e >>= 1;
        }
        cur = acc;
    }
    cur
}

/// Rabin irreducibility test for a monic polynomial over 𝔽_p.
pub fn fp_poly_is_irreducible(f: &[u64], p: u64) -> bool {
    let Some(n) = fp_poly_deg(f) else {
        return false;
    };
    if n == 0 {
        return false;
    }
    if n == 1 {
        return true;
    }
    // x^(p^n) ≡ x (mod f) ...
    let xpn = fp_frobenius_power(f, p, n);
    let x = vec![0u64, 1];
    let diff = fp_poly_sub(&xpn, &x, p);
    if !fp_poly_trim(diff).is_empty() {
        return false;
    }
    // ... and gcd(x^(p^(n/l)) − x, f) = 1 for every prime l | n.
    let mut m = n;
    let mut primes = vec![];
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            primes.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for l in primes {
        let xq = fp_frobenius_power(f, p, n / l);
        let diff = fp_poly_sub(&xq, &x, p);
        let g = fp_poly_gcd(&diff, f, p);
        if fp_poly_deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

fn fp_poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            fp_sub(x, y, p)
        })
        .collect();
    fp_poly_trim(out)
}

// ---------------------------------------------------------------------------
// The field F_q.
// ---------------------------------------------------------------------------

/// The finite field 𝔽_q = 𝔽_p[θ]/(f), p an odd prime, f monic irreducible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fq {
    p: u64,
    /// Monic irreducible modulus, little-endian, coefficients in [0, p).
    modulus: Vec<u64>,
}

/// An element of 𝔽_q: θ-coordinates, little-endian, length = deg f.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FqElem(pub Vec<u64>);

impl Fq {
    pub fn new(p: u64, modulus: Vec<u64>) -> Result<Fq> {
        if p == 2 {
            return Err(BaseError::EvenResidue(2));
        }
        if !is_prime_u64(p) {
            return Err(BaseError::NotPrime(p));
        }
        let modulus: Vec<u64> = modulus.iter().map(|&c| fpm(c, p)).collect();
        let deg = fp_poly_deg(&modulus)
            .ok_or_else(|| BaseError::invalid("residue-field modulus is zero"))?;
        if deg == 0 {
            return Err(BaseError::invalid("residue-field modulus is constant"));
        }
        if modulus[deg] != 1 {
            return Err(BaseError::invalid("residue-field modulus is not monic"));
        }
        if modulus.len() != deg + 1 {
            return Err(BaseError::invalid("residue-field modulus has trailing zeros"));
        }
        if !fp_poly_is_irreducible(&modulus, p) {
            return Err(BaseError::NotIrreducible {
                p,
                what: format!("{modulus:?}"),
            });
        }
        Ok(Fq { p, modulus })
    }

    /// 𝔽_p itself (modulus T, i.e. θ = 0).
    pub fn prime_field(p: u64) -> Result<Fq> {
        Fq::new(p, vec![0, 1])
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// q = p^f. Panics on overflow; the workspace keeps q small.
    pub fn q(&self) -> u64 {
        let mut q: u64 = 1;
        for _ in 0..self.degree() {
            q = q.checked_mul(self.p).expect("q fits in u64");
        }
        q
    }

    pub fn zero(&self) -> FqElem {
        FqElem(vec![0; self.degree()])
    }

    pub fn one(&self) -> FqElem {
        self.from_u64(1)
    }

    pub fn from_u64(&self, c: u64) -> FqElem {
        let mut v = vec![0; self.degree()];
        v[0] = fpm(c, self.p);
        FqElem(v)
    }

    /// Build an element from θ-coordinates (length ≤ deg f; reduced mod p).
    pub fn elem(&self, coeffs: &[u64]) -> Result<FqElem> {
        if coeffs.len() > self.degree() {
            return Err(BaseError::Dim(format!(
                "residue element has {} coordinates, field degree is {}",
                coeffs.len(),
                self.degree()
            )));
        }
        let mut v: Vec<u64> = coeffs.iter().map(|&c| fpm(c, self.p)).collect();
        v.resize(self.degree(), 0);
        Ok(FqElem(v))
    }

    pub fn is_zero(&self, x: &FqElem) -> bool {
        x.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| fp_add(x, y, self.p))
                .collect(),
        )
    }

    pub fn sub(&self, a: &FqElem, b: &FqElem) -> FqElem {
        FqElem(
            a.0.iter()
                .zip(&b.0)
                .map(|(&x, &y)| fp_sub(x, y, self.p))
                .collect(),
        )
    }

    pub fn neg(&self, a: &FqElem) -> FqElem {
        FqElem(a.0.iter().map(|&x| fp_sub(0, x, self.p)).collect())
    }

    pub fn mul(&self, a: &FqElem, b: &FqElem) -> FqElem {
        let prod = fp_poly_mul(&a.0, &b.0, self.p);
        let mut red = fp_poly_rem(&prod, &self.modulus, self.p);
        red.resize(self.degree(), 0);
        FqElem(red)
    }

    pub fn pow(&self, a: &FqElem, mut k: u64) -> FqElem {
        let mut acc = self.one();
        let mut base = a.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            k >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: &FqElem) -> Result<FqElem> {
        if self.is_zero(a) {
            return Err(BaseError::NotInvertible);
        }
        Ok(self.pow(a, self.q() - 2))
    }

    /// Euler-criterion square test for a nonzero element.
    pub fn is_square(&self, a: &FqElem) -> Result<bool> {
        if self.is_zero(a) {
            return Err(BaseError::NotInvertible);
        }
        let e = self.pow(a, (self.q() - 1) / 2);
        Ok(e == self.one())
    }

    /// Quadratic character χ of 𝔽_q^× .
    pub fn chi(&self, a: &FqElem) -> Result<Sign> {
        Ok(if self.is_square(a)? {
            Sign::Plus
        } else {
            Sign::Minus
        })
    }

    pub fn minus_one(&self) -> FqElem {
        self.from_u64(self.p - 1)
    }
}
