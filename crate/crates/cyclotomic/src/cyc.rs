//! Exact elements of the cyclotomic field ℚ(ζ_N), stored in a canonical
//! integral basis so that equality of values is equality of representations.
//!
//! Basis: write N = ∏ ℓ^{a_ℓ}. An exponent k (mod N) is *legal* when, for
//! every prime-power leg ℓ^a of N, the CRT component k mod ℓ^a lies in
//! [0, φ(ℓ^a)). The ζ_N^k with legal k form the tensor-product integral
//! basis of ℚ(ζ_N) (product over legs of the power bases of ℚ(ζ_{ℓ^a})).
//! Illegal components are removed with the prime-power cyclotomic relation
//!
//!   ζ^{φ(ℓ^a)+s} = −∑_{j=0}^{ℓ−2} ζ^{s+j·ℓ^{a−1}}   (0 ≤ s < ℓ^{a−1}),
//!
//! whose right-hand side is legal in that leg, so one pass per leg
//! terminates.

use crate::error::{CycError, Result};
use base_field::rat::{inv_mod, Rat};
use num::{One, Zero};
use std::collections::BTreeMap;

/// Largest supported cyclotomic level. Big enough for the character sums
/// this workspace builds (level 8·p⁴ with p ≤ 13), small enough to keep
/// canonical forms cheap.
pub const MAX_LEVEL: u64 = 250_000;

#[derive(Debug, Clone, Copy)]
struct Leg {
    /// ℓ^a
    la: u64,
    /// ℓ
    l: u64,
    /// φ(ℓ^a) = ℓ^{a−1}(ℓ−1)
    phi: u64,
    /// ℓ^{a−1}
    step: u64,
    /// CRT unit: ≡ 1 mod ℓ^a, ≡ 0 mod every other leg.
    crt_unit: u64,
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = vec![];
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut a = 0;
            while n.is_multiple_of(d) {
                n /= d;
                a += 1;
            }
            out.push((d, a));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn legs_of(n: u64) -> Vec<Leg> {
    factorize(n)
        .into_iter()
        .map(|(l, a)| {
            let la = l.pow(a);
            let m = n / la;
            let u = if m.is_multiple_of(la) { 0 } else { inv_mod(m % la, la) };
            let crt_unit = ((m as u128 * u as u128) % n as u128) as u64;
            Leg {
                la,
                l,
                phi: la / l * (l - 1),
                step: la / l,
                crt_unit,
            }
        })
        .collect()
}

/// An exact element of ℚ(ζ_N) in canonical form. The map sends legal
/// exponents k to nonzero rational coefficients of ζ_N^k.
#[derive(Debug, Clone)]
pub struct CycNum {
    level: u64,
    coeffs: BTreeMap<u64, Rat>,
}

fn check_level(level: u64) -> Result<()> {
    if level == 0 {
        return Err(CycError::ZeroLevel);
    }
    if level > MAX_LEVEL {
        return Err(CycError::LevelCap(level, MAX_LEVEL));
    }
    Ok(())
}

fn canonicalize(level: u64, mut map: BTreeMap<u64, Rat>) -> BTreeMap<u64, Rat> {
    for leg in legs_of(level) {
        let mut out: BTreeMap<u64, Rat> = BTreeMap::new();
        for (k, c) in map {
            if c.is_zero() {
                continue;
            }
            let comp = k % leg.la;
            if comp < leg.phi {
                *out.entry(k).or_insert_with(Rat::zero) += c;
            } else {
                let s = comp - leg.phi;
                for j in 0..(leg.l - 1) {
                    let target = s + j * leg.step;
                    // Shift the CRT component from `comp` to `target`
                    // without touching the other legs.
                    let delta = (target + leg.la - comp) % leg.la;
                    let k2 =
                        ((k as u128 + delta as u128 * leg.crt_unit as u128) % level as u128) as u64;
                    *out.entry(k2).or_insert_with(Rat::zero) -= &c;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        map = out;
    }
    map.retain(|_, c| !c.is_zero());
    map
}

impl CycNum {
    pub fn zero(level: u64) -> Result<CycNum> {
        check_level(level)?;
        Ok(CycNum {
            level,
            coeffs: BTreeMap::new(),
        })
    }

    pub fn one(level: u64) -> Result<CycNum> {
        CycNum::from_rat(level, &Rat::one())
    }

    pub fn from_rat(level: u64, c: &Rat) -> Result<CycNum> {
        check_level(level)?;
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(0, c.clone());
        }
        Ok(CycNum { level, coeffs })
    }

    /// ζ_level^k (k taken mod level), canonicalized.
    pub fn root_of_unity(level: u64, k: u64) -> Result<CycNum> {
        CycNum::from_terms(level, [(k, Rat::one())])
    }

    /// Build Σ c_k·ζ_level^k from raw (exponent, coefficient) terms,
    /// accumulating repeats before a single canonicalization pass.
    pub fn from_terms(level: u64, terms: impl IntoIterator<Item = (u64, Rat)>) -> Result<CycNum> {
        check_level(level)?;
        let mut raw: BTreeMap<u64, Rat> = BTreeMap::new();
        for (k, c) in terms {
            if c.is_zero() {
                continue;
            }
            *raw.entry(k % level).or_insert_with(Rat::zero) += c;
        }
        Ok(CycNum {
            level,
            coeffs: canonicalize(level, raw),
        })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn coeffs(&self) -> &BTreeMap<u64, Rat> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The value as a rational, if it lies in ℚ.
    pub fn as_rational(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => self.coeffs.get(&0).cloned(),
            _ => None,
        }
    }

    /// Re-express at a multiple of the current level.
    pub fn raise(&self, level: u64) -> Result<CycNum> {
        check_level(level)?;
        if !level.is_multiple_of(self.level) {
            return Err(CycError::BadLevel {
                level,
                needed: self.level,
            });
        }
        let f = level / self.level;
        CycNum::from_terms(level, self.coeffs.iter().map(|(k, c)| (k * f, c.clone())))
    }

    fn common_level(&self, other: &CycNum) -> Result<u64> {
        let l = num_integer::lcm(self.level, other.level);
        check_level(l)?;
        Ok(l)
    }

    pub fn add(&self, other: &CycNum) -> Result<CycNum> {
        let l = self.common_level(other)?;
        let (a, b) = (self.raise(l)?, other.raise(l)?);
        CycNum::from_terms(
            l,
            a.coeffs
                .into_iter()
                .chain(b.coeffs),
        )
    }

    pub fn sub(&self, other: &CycNum) -> Result<CycNum> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycNum {
        CycNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, -c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> CycNum {
        if c.is_zero() {
            return CycNum {
                level: self.level,
                coeffs: BTreeMap::new(),
            };
        }
        CycNum {
            level: self.level,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    pub fn mul(&self, other: &CycNum) -> Result<CycNum> {
        let l = self.common_level(other)?;
        let (a, b) = (self.raise(l)?, other.raise(l)?);
        let mut raw: BTreeMap<u64, Rat> = BTreeMap::new();
        for (k1, c1) in &a.coeffs {
            for (k2, c2) in &b.coeffs {
                let k = ((*k1 as u128 + *k2 as u128) % l as u128) as u64;
                *raw.entry(k).or_insert_with(Rat::zero) += c1 * c2;
            }
        }
        Ok(CycNum {
            level: l,
            coeffs: canonicalize(l, raw),
        })
    }

    pub fn pow(&self, k: u32) -> Result<CycNum> {
        let mut acc = CycNum::one(self.level)?;
        let mut base = self.clone();
        let mut m = k;
        while m > 0 {
            if m & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            m >>= 1;
            if m > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Complex conjugation ζ ↦ ζ^{−1}.
    pub fn conj(&self) -> CycNum {
        let l = self.level;
        CycNum::from_terms(
            l,
            self.coeffs
                .iter()
                .map(|(k, c)| ((l - k) % l, c.clone())),
        )
        .expect("level already validated")
    }

    /// Galois action ζ ↦ ζ^t for t coprime to the level.
    pub fn galois(&self, t: u64) -> Result<CycNum> {
        let l = self.level;
        if num_integer::gcd(t % l, l) != 1 {
            return Err(CycError::invalid(format!(
                "galois exponent {t} is not coprime to the level {l}"
            )));
        }
        CycNum::from_terms(
            l,
            self.coeffs
                .iter()
                .map(|(k, c)| (((*k as u128 * t as u128) % l as u128) as u64, c.clone())),
        )
    }

    /// z·z̄ = |z|².
    pub fn abs_square(&self) -> CycNum {
        self.mul(&self.conj()).expect("same level")
    }
}

impl PartialEq for CycNum {
    /// Exact equality of values. Panics if the common level would exceed
    /// [`MAX_LEVEL`] (comparing values that far apart is a logic error in
    /// this workspace).
    fn eq(&self, other: &CycNum) -> bool {
        if self.level == other.level {
            return self.coeffs == other.coeffs;
        }
        let l = num_integer::lcm(self.level, other.level);
        check_level(l).expect("comparison within the supported level bound");
        self.raise(l).unwrap().coeffs == other.raise(l).unwrap().coeffs
    }
}

impl Eq for CycNum {}

impl std::fmt::Display for CycNum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.coeffs {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *k == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "z{}^{k}", self.level)?;
            } else {
                write!(f, "({c})·z{}^{k}", self.level)?;
            }
        }
        Ok(())
    }
}
