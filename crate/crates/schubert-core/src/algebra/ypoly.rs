use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A univariate Laurent polynomial with integer coefficients, stored as a
/// dense coefficient sequence starting at `offset`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YPoly {
    offset: i32,
    coeffs: Vec<BigInt>,
}

impl YPoly {
    pub fn zero() -> Self {
        YPoly {
            offset: 0,
            coeffs: vec![],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        Self::with_offset(0, coeffs)
    }

    pub fn from_i64(c: &[i64]) -> Self {
        Self::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn with_offset(offset: i32, mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        coeffs.drain(..lead);
        YPoly {
            offset: offset + lead as i32,
            coeffs,
        }
    }

    /// `x^k`.
    pub fn monomial(k: i32) -> Self {
        Self::with_offset(k, vec![BigInt::one()])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> i32 {
        self.offset
    }

    pub fn degree(&self) -> Option<i32> {
        (!self.is_zero()).then(|| self.offset + self.coeffs.len() as i32 - 1)
    }

    pub fn coeff(&self, k: i32) -> BigInt {
        let i = k - self.offset;
        if i < 0 || i as usize >= self.coeffs.len() {
            BigInt::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    /// Coefficients from degree 0 up to the degree; requires no negative powers.
    pub fn dense(&self) -> Vec<BigInt> {
        assert!(self.offset >= 0, "negative powers present");
        let mut v = vec![BigInt::zero(); self.offset as usize];
        v.extend(self.coeffs.iter().cloned());
        v
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &x + c;
        }
        if self.offset >= 0 {
            acc * num_traits::pow(x, self.offset as usize)
        } else {
            assert!(!x.is_zero());
            acc / num_traits::pow(x, (-self.offset) as usize)
        }
    }

    pub fn add(&self, o: &YPoly) -> YPoly {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let low = self.offset.min(o.offset);
        let high = self.degree().unwrap().max(o.degree().unwrap());
        let c = (low..=high).map(|k| self.coeff(k) + o.coeff(k)).collect();
        YPoly::with_offset(low, c)
    }

    pub fn neg(&self) -> YPoly {
        YPoly {
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, o: &YPoly) -> YPoly {
        if self.is_zero() || o.is_zero() {
            return YPoly::zero();
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        YPoly::with_offset(self.offset + o.offset, c)
    }

    pub fn pow(&self, n: u32) -> YPoly {
        (0..n).fold(YPoly::from_i64(&[1]), |acc, _| acc.mul(self))
    }

    /// Exact quotient, if the division leaves no remainder.
    pub fn div_exact(&self, d: &YPoly) -> Option<YPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(YPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        let dl = d.coeffs.last().unwrap();
        let n = rem.len();
        let m = d.coeffs.len();
        if n < m {
            return None;
        }
        let mut q = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let lead = rem[k + m - 1].clone();
            if lead.is_zero() {
                continue;
            }
            if !(&lead % dl).is_zero() {
                return None;
            }
            let t = lead / dl;
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &t * dc;
            }
            q[k] = t;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| YPoly::with_offset(self.offset - d.offset, q))
    }

    /// Single peak: weakly increasing then weakly decreasing.
    pub fn is_unimodal(&self) -> bool {
        let c = &self.coeffs;
        let mut i = 0;
        while i + 1 < c.len() && c[i] <= c[i + 1] {
            i += 1;
        }
        while i + 1 < c.len() && c[i] >= c[i + 1] {
            i += 1;
        }
        i + 1 >= c.len()
    }

    /// `a_i^2 >= a_{i-1} a_{i+1}` for every interior index of the dense sequence.
    pub fn is_log_concave(&self) -> bool {
        let c = &self.coeffs;
        (1..c.len().saturating_sub(1)).all(|i| &c[i] * &c[i] >= &c[i - 1] * &c[i + 1])
    }

    /// A zero coefficient strictly between two nonzero ones.
    pub fn has_internal_zeros(&self) -> bool {
        self.coeffs.iter().any(Zero::is_zero)
    }

    pub fn all_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn all_positive(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_positive())
    }

    /// Formats in the variable `var`, highest degree first.
    pub fn format(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let k = self.offset + i as i32;
            let neg = c.is_negative();
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let v = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if v.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&v);
            } else {
                s.push_str(&format!("{a}{v}"));
            }
        }
        s
    }
}

impl fmt::Debug for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format("y"))
    }
}

impl fmt::Display for YPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format("y"))
    }
}
