use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::{q, Mono, QPoly, LANE_Y};

/// A power series in the lattice variables and `hbar`, with coefficients in
/// `Q[y]`, truncated above a cohomological degree.
///
/// `cap == None` means the value is an exact polynomial. Arithmetic propagates
/// the smaller cap; dividing by a linear form lowers it by one.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedSeries {
    poly: QPoly,
    cap: Option<i32>,
}

impl GradedSeries {
    pub fn new(poly: QPoly, cap: Option<i32>) -> Self {
        let poly = match cap {
            Some(c) => poly.truncate(c),
            None => poly,
        };
        GradedSeries { poly, cap }
    }

    pub fn exact(poly: QPoly) -> Self {
        Self::new(poly, None)
    }

    pub fn zero(cap: Option<i32>) -> Self {
        Self::new(QPoly::zero(), cap)
    }

    pub fn one(cap: Option<i32>) -> Self {
        Self::new(QPoly::one(), cap)
    }

    pub fn poly(&self) -> &QPoly {
        &self.poly
    }

    pub fn cap(&self) -> Option<i32> {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn with_cap(&self, cap: Option<i32>) -> Self {
        Self::new(self.poly.clone(), min_cap(self.cap, cap))
    }

    pub fn component(&self, d: i32) -> QPoly {
        self.poly.homogeneous_part(d)
    }

    /// Homogeneous components keyed by degree.
    pub fn components(&self) -> BTreeMap<i32, QPoly> {
        let mut out: BTreeMap<i32, Vec<_>> = BTreeMap::new();
        for (m, c) in self.poly.terms() {
            out.entry(m.degree()).or_default().push((*m, c.clone()));
        }
        out.into_iter()
            .map(|(d, t)| (d, QPoly::from_terms(t)))
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.poly + &o.poly, min_cap(self.cap, o.cap))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.poly - &o.poly, min_cap(self.cap, o.cap))
    }

    pub fn neg(&self) -> Self {
        GradedSeries {
            poly: -&self.poly,
            cap: self.cap,
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        GradedSeries {
            poly: self.poly.scale(c),
            cap: self.cap,
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let cap = min_cap(self.cap, o.cap);
        GradedSeries {
            poly: mul_truncated(&self.poly, &o.poly, cap),
            cap,
        }
    }

    /// Multiplies by an exact polynomial.
    pub fn mul_poly(&self, p: &QPoly) -> Self {
        GradedSeries {
            poly: mul_truncated(&self.poly, p, self.cap),
            cap: self.cap,
        }
    }

    /// Exact division by a homogeneous linear form.
    pub fn div_linear(&self, l: &QPoly) -> Option<Self> {
        let poly = self.poly.div_exact(l)?;
        let cap = self.cap.map(|c| c - 1);
        Some(Self::new(poly, cap))
    }

    /// Exact division by a homogeneous form of degree `d`.
    pub fn div_homogeneous(&self, f: &QPoly, d: i32) -> Option<Self> {
        let poly = self.poly.div_exact(f)?;
        Some(Self::new(poly, self.cap.map(|c| c - d)))
    }

    /// Inverse of a series with a nonzero rational constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.poly.coeff(&Mono::ONE);
        if c0.is_zero()
            || self
                .poly
                .terms()
                .iter()
                .any(|(m, _)| m.degree() == 0 && *m != Mono::ONE)
        {
            return None;
        }
        let cap = self.cap.or_else(|| self.poly.max_degree())?;
        let inv0 = BigRational::one() / c0;
        // 1/(c0 + s) = inv0 * sum (-s inv0)^k
        let s = (&self.poly - &QPoly::constant(self.poly.coeff(&Mono::ONE))).scale(&-inv0.clone());
        let mut acc = QPoly::one();
        let mut power = QPoly::one();
        for _ in 0..cap {
            power = mul_truncated(&power, &s, Some(cap));
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Some(Self::new(acc.scale(&inv0), Some(cap)))
    }

    /// Substitutes a rational number for `y`.
    pub fn specialize_y(&self, v: &BigRational) -> Self {
        GradedSeries {
            poly: self.poly.specialize_lane(LANE_Y, v),
            cap: self.cap,
        }
    }

    /// Agreement of all components up to the smaller cap.
    pub fn agrees(&self, o: &Self) -> bool {
        let cap = min_cap(self.cap, o.cap);
        match cap {
            Some(c) => self.poly.truncate(c) == o.poly.truncate(c),
            None => self.poly == o.poly,
        }
    }

    pub fn is_zero_mod_cap(&self) -> bool {
        self.poly.is_zero()
    }
}

impl fmt::Debug for GradedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cap {
            Some(c) => write!(f, "{:?} + O({})", self.poly, c + 1),
            None => write!(f, "{:?}", self.poly),
        }
    }
}

pub fn min_cap(a: Option<i32>, b: Option<i32>) -> Option<i32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

/// Product discarding terms of degree above `cap`.
pub fn mul_truncated(a: &QPoly, b: &QPoly, cap: Option<i32>) -> QPoly {
    let Some(cap) = cap else { return a * b };
    if a.is_zero() || b.is_zero() {
        return QPoly::zero();
    }
    let mut t = Vec::new();
    for (ma, ca) in a.terms() {
        let da = ma.degree();
        for (mb, cb) in b.terms() {
            if da + mb.degree() <= cap {
                t.push((*ma + *mb, ca * cb));
            }
        }
    }
    QPoly::from_terms(t)
}

/// A univariate power series `sum_k a_k x^k` with coefficients in `Q[y]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniSeries {
    pub coeffs: Vec<QPoly>,
}

impl UniSeries {
    pub fn from_rationals(c: Vec<BigRational>) -> Self {
        UniSeries {
            coeffs: c.into_iter().map(QPoly::constant).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.len().min(o.len());
        let mut c = vec![QPoly::zero(); n];
        for i in 0..n {
            for j in 0..n - i {
                c[i + j] = &c[i + j] + &(&self.coeffs[i] * &o.coeffs[j]);
            }
        }
        UniSeries { coeffs: c }
    }

    /// `exp(k x)` to the given number of terms.
    pub fn exp(k: &QPoly, n: usize) -> Self {
        let mut c = Vec::with_capacity(n);
        let mut term = QPoly::one();
        let mut fact = BigInt::one();
        for i in 0..n {
            if i > 0 {
                term = &term * k;
                fact *= BigInt::from(i as i64);
            }
            c.push(term.scale(&BigRational::new(BigInt::one(), fact.clone())));
        }
        UniSeries { coeffs: c }
    }

    /// `x / (1 - e^{-x})` (the Todd series) to `n` terms.
    pub fn todd(n: usize) -> Self {
        // (1 - e^{-x})/x = sum_k (-1)^k x^k/(k+1)!
        let mut d = Vec::with_capacity(n);
        let mut fact = BigInt::one();
        for k in 0..n {
            fact *= BigInt::from(k as i64 + 1);
            let sign = if k % 2 == 0 { 1 } else { -1 };
            d.push(BigRational::new(BigInt::from(sign), fact.clone()));
        }
        Self::from_rationals(invert_univariate(&d))
    }

    /// Evaluates at a homogeneous series `x` of positive degree.
    pub fn compose(&self, x: &QPoly, cap: Option<i32>) -> QPoly {
        let mut acc = QPoly::zero();
        let mut power = QPoly::one();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = mul_truncated(&power, x, cap);
                if power.is_zero() {
                    break;
                }
            }
            acc = &acc + &mul_truncated(&power, a, cap);
        }
        acc
    }
}

/// Inverse of a univariate rational series with nonzero constant term.
pub fn invert_univariate(d: &[BigRational]) -> Vec<BigRational> {
    let n = d.len();
    let mut inv = vec![BigRational::zero(); n];
    inv[0] = BigRational::one() / &d[0];
    for k in 1..n {
        let mut s = BigRational::zero();
        for j in 1..=k {
            s += &d[j] * &inv[k - j];
        }
        inv[k] = -s / &d[0];
    }
    inv
}

pub fn qi(n: i64) -> BigRational {
    q(n)
}
