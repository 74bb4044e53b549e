//! Arithmetic in `ℤ[t] / (1 + t + … + t^(d-1))`.
//!
//! Residues are kept in the canonical form of degree below `d - 1`. The
//! relation `(t - 1)(1 + t + … + t^(d-1)) = t^d - 1` makes `t` a unit of
//! order dividing `d`, with `t⁻¹ = t^(d-1)`. For `d = 2` the ring is `ℤ`
//! with `t ≡ -1`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycElem {
    d: usize,
    coeffs: Vec<BigInt>, // length d - 1, index = degree
}

impl CycElem {
    /// Reduce an arbitrary integer polynomial (index = degree) into the ring.
    pub fn new(d: usize, mut coeffs: Vec<BigInt>) -> Result<Self> {
        if d < 2 {
            return Err(Error::Precondition(format!(
                "cyclotomic quotient needs degree d >= 2, got {d}"
            )));
        }
        let width = d - 1;
        // t^e = -(t^(e-width) + … + t^(e-1)) for e >= width
        let mut e = coeffs.len();
        while e > width {
            e -= 1;
            let c = std::mem::take(&mut coeffs[e]);
            if c.is_zero() {
                continue;
            }
            for i in 0..width {
                coeffs[e - width + i] -= &c;
            }
        }
        coeffs.resize(width, BigInt::zero());
        Ok(CycElem { d, coeffs })
    }

    pub fn zero(d: usize) -> Self {
        CycElem {
            d,
            coeffs: vec![BigInt::zero(); d - 1],
        }
    }

    pub fn one(d: usize) -> Self {
        Self::from_int(d, 1)
    }

    pub fn from_int(d: usize, value: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); d - 1];
        coeffs[0] = BigInt::from(value);
        CycElem { d, coeffs }
    }

    pub fn from_bigint(d: usize, value: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); d - 1];
        coeffs[0] = value;
        CycElem { d, coeffs }
    }

    /// `t^e` for any integer exponent; `t` has order dividing `d`.
    pub fn t_power(d: usize, e: i64) -> Self {
        let e = e.rem_euclid(d as i64) as usize;
        let mut coeffs = vec![BigInt::zero(); e + 1];
        coeffs[e] = BigInt::one();
        Self::new(d, coeffs).expect("d validated by caller")
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &CycElem) -> CycElem {
        debug_assert_eq!(self.d, other.d);
        CycElem {
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &CycElem) -> CycElem {
        debug_assert_eq!(self.d, other.d);
        CycElem {
            d: self.d,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> CycElem {
        CycElem {
            d: self.d,
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn mul(&self, other: &CycElem) -> CycElem {
        debug_assert_eq!(self.d, other.d);
        let width = self.d - 1;
        let mut prod = vec![BigInt::zero(); 2 * width.max(1)];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycElem::new(self.d, prod).expect("degree already valid")
    }

    /// Exact division of every coefficient by a nonzero integer; errors if
    /// any coefficient is not divisible.
    pub fn exact_div_int(&self, k: i64) -> Result<CycElem> {
        let kk = BigInt::from(k);
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| {
                let (q, r) = (c / &kk, c % &kk);
                if r.is_zero() {
                    Ok(q)
                } else {
                    Err(Error::Internal(format!(
                        "inexact division of {c} by {k} in cyclotomic ring"
                    )))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CycElem { d: self.d, coeffs })
    }

    /// The ring map `t ↦ -1`, defined exactly when `d` is even (then
    /// `1 - 1 + 1 - … = 0`).
    pub fn eval_at_neg_one(&self) -> Result<BigInt> {
        if self.d % 2 != 0 {
            return Err(Error::Precondition(format!(
                "t ↦ -1 is only a ring map for even d, got {}",
                self.d
            )));
        }
        let mut acc = BigInt::zero();
        for (e, c) in self.coeffs.iter().enumerate() {
            if e % 2 == 0 {
                acc += c;
            } else {
                acc -= c;
            }
        }
        Ok(acc)
    }

    /// Is this element `±t^e` for some exponent? A sufficient unit test
    /// for everything this crate produces (Burau determinants are signed
    /// powers of `t`).
    pub fn is_monomial_unit(&self) -> bool {
        for e in 0..self.d {
            let m = CycElem::t_power(self.d, e as i64);
            if *self == m || *self == m.neg() {
                return true;
            }
        }
        false
    }
}

impl fmt::Display for CycElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let mag = c.abs();
            match e {
                0 => write!(f, "{mag}")?,
                1 if mag.is_one() => write!(f, "t")?,
                1 => write!(f, "{mag}t")?,
                _ if mag.is_one() => write!(f, "t^{e}")?,
                _ => write!(f, "{mag}t^{e}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
