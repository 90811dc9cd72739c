use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::lie::{Weight, MAX_RANK};

/// Number of exponent lanes in a monomial.
pub const LANES: usize = MAX_RANK + 2;
/// Lane holding the power of the formal variable `hbar`.
pub const LANE_H: usize = MAX_RANK;
/// Lane holding the power of the formal variable `y`.
pub const LANE_Y: usize = MAX_RANK + 1;

/// Exponent vector of a Laurent monomial.
///
/// Lanes `0..MAX_RANK` hold lattice coordinates, followed by `hbar` and `y`.
/// The derived order is lexicographic and compatible with multiplication.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono(pub [i16; LANES]);

impl Mono {
    pub const ONE: Mono = Mono([0; LANES]);

    pub fn lane(lane: usize, k: i16) -> Mono {
        let mut m = Mono::ONE;
        m.0[lane] = k;
        m
    }

    pub fn from_weight(w: &Weight) -> Mono {
        let mut m = Mono::ONE;
        for (a, &b) in m.0.iter_mut().zip(w.0.iter()) {
            *a = i16::try_from(b).expect("exponent fits in 16 bits");
        }
        m
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::ZERO;
        for (a, &b) in w.0.iter_mut().zip(self.0.iter()) {
            *a = i32::from(b);
        }
        w
    }

    pub fn y(&self) -> i16 {
        self.0[LANE_Y]
    }

    pub fn h(&self) -> i16 {
        self.0[LANE_H]
    }

    pub fn with_lane(mut self, lane: usize, k: i16) -> Mono {
        self.0[lane] = k;
        self
    }

    /// Total degree over the lattice lanes and `hbar` (`y` excluded).
    pub fn degree(&self) -> i32 {
        self.0[..=LANE_H].iter().map(|&x| i32::from(x)).sum()
    }

    pub fn is_lattice_trivial(&self) -> bool {
        self.0[..MAX_RANK].iter().all(|&x| x == 0)
    }
}

impl Add for Mono {
    type Output = Mono;
    fn add(self, o: Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0) {
            *a += b;
        }
        Mono(m)
    }
}

impl Sub for Mono {
    type Output = Mono;
    fn sub(self, o: Mono) -> Mono {
        let mut m = self.0;
        for (a, b) in m.iter_mut().zip(o.0) {
            *a -= b;
        }
        Mono(m)
    }
}

impl Neg for Mono {
    type Output = Mono;
    fn neg(self) -> Mono {
        Mono::ONE - self
    }
}

/// Coefficient rings usable in [`Poly`].
pub trait Coeff:
    Clone + fmt::Debug + fmt::Display + PartialEq + Eq + Zero + One + Signed + Send + Sync + 'static
{
    /// Exact quotient, when it exists.
    fn try_div(&self, other: &Self) -> Option<Self>;
}

impl Coeff for BigInt {
    fn try_div(&self, other: &Self) -> Option<Self> {
        if other.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(other);
        r.is_zero().then_some(q)
    }
}

impl Coeff for BigRational {
    fn try_div(&self, other: &Self) -> Option<Self> {
        (!other.is_zero()).then(|| self / other)
    }
}

/// Sparse Laurent polynomial; terms sorted by monomial, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<C> {
    terms: Vec<(Mono, C)>,
}

impl<C: Coeff> Default for Poly<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coeff> Poly<C> {
    pub fn zero() -> Self {
        Poly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(Mono::ONE, c)
    }

    pub fn term(m: Mono, c: C) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            Poly {
                terms: vec![(m, c)],
            }
        }
    }

    pub fn mono(m: Mono) -> Self {
        Self::term(m, C::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(mut t: Vec<(Mono, C)>) -> Self {
        t.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(Mono, C)> = Vec::with_capacity(t.len());
        for (m, c) in t {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = lc.clone() + c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Mono, C)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Mono, C)> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Mono, C)> {
        self.terms.last()
    }

    pub fn lowest(&self) -> Option<&(Mono, C)> {
        self.terms.first()
    }

    pub fn coeff(&self, m: &Mono) -> C {
        match self.terms.binary_search_by(|t| t.0.cmp(m)) {
            Ok(k) => self.terms[k].1.clone(),
            Err(_) => C::zero(),
        }
    }

    /// The constant coefficient as a scalar, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.as_slice() {
            [] => Some(C::zero()),
            [(m, c)] if *m == Mono::ONE => Some(c.clone()),
            _ => None,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (*m, a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Multiplication by a monomial.
    pub fn shift(&self, m: Mono) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(a, c)| (*a + m, c.clone()))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: Mono, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(a, b)| (*a + m, b.clone() * c.clone()))
                .collect(),
        }
    }

    /// Applies a map to every exponent; the map need not be monotone.
    pub fn map_monos(&self, f: impl Fn(Mono) -> Mono) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (f(*m), c.clone())).collect())
    }

    pub fn map_coeffs<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))).collect())
    }

    pub fn retain(&self, f: impl Fn(&Mono) -> bool) -> Self {
        Poly {
            terms: self.terms.iter().filter(|(m, _)| f(m)).cloned().collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Minimum and maximum of each lane over the support.
    fn lane_box(&self) -> ([i32; LANES], [i32; LANES]) {
        let mut lo = [i32::MAX; LANES];
        let mut hi = [i32::MIN; LANES];
        for (m, _) in &self.terms {
            for l in 0..LANES {
                lo[l] = lo[l].min(i32::from(m.0[l]));
                hi[l] = hi[l].max(i32::from(m.0[l]));
            }
        }
        (lo, hi)
    }

    /// Exact quotient `self / q`, or `None` if `q` does not divide `self`.
    ///
    /// Iterated leading-term elimination; candidate quotient monomials are
    /// confined to the box forced by the Newton polytopes, so the loop terminates.
    pub fn div_exact(&self, q: &Self) -> Option<Self> {
        if q.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if q.terms.len() == 1 {
            let (qm, qc) = &q.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (m, c) in &self.terms {
                out.push((*m - *qm, c.try_div(qc)?));
            }
            return Some(Poly { terms: out });
        }
        let (plo, phi) = self.lane_box();
        let (qlo, qhi) = q.lane_box();
        let (qlm, qlc) = q.leading().expect("nonzero").clone();
        let mut rem: BTreeMap<Mono, C> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Mono, C)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            let tm = m - qlm;
            for l in 0..LANES {
                let e = i32::from(tm.0[l]);
                if e < plo[l] - qlo[l] || e > phi[l] - qhi[l] {
                    return None;
                }
            }
            let tc = c.try_div(&qlc)?;
            for (qm, qc) in &q.terms[..q.terms.len() - 1] {
                let key = *qm + tm;
                let v = tc.clone() * qc.clone();
                match rem.entry(key) {
                    std::collections::btree_map::Entry::Occupied(mut e) => {
                        let nv = e.get().clone() - v;
                        if nv.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = nv;
                        }
                    }
                    std::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-v);
                    }
                }
            }
            quot.push((tm, tc));
        }
        quot.reverse();
        Some(Poly { terms: quot })
    }

    /// Exact quotient by `1 - x^mu`.
    pub fn div_one_minus(&self, mu: Mono) -> Option<Self> {
        if mu == Mono::ONE {
            return self.is_zero().then(Self::zero);
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // q = p / (1 - x) with x = x^mu; eliminate from the end of the order where
        // x lies, q_m = p_m + q_{m - mu} (mu > 0) or q_m = p_m + q_{m + |mu|}.
        let positive = mu > Mono::ONE;
        let mut rem: BTreeMap<Mono, C> = self.terms.iter().cloned().collect();
        let lo = self.terms[0].0;
        let hi = self.terms[self.terms.len() - 1].0;
        let mut quot: Vec<(Mono, C)> = Vec::new();
        loop {
            let next = if positive {
                rem.pop_first()
            } else {
                rem.pop_last()
            };
            let Some((m, c)) = next else { break };
            let target = m + mu;
            if (positive && target > hi) || (!positive && target < lo) {
                return None;
            }
            match rem.entry(target) {
                std::collections::btree_map::Entry::Occupied(mut e) => {
                    let nv = e.get().clone() + c.clone();
                    if nv.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = nv;
                    }
                }
                std::collections::btree_map::Entry::Vacant(e) => {
                    e.insert(c.clone());
                }
            }
            quot.push((m, c));
        }
        if !positive {
            quot.reverse();
        }
        Some(Poly { terms: quot })
    }

    /// Substitutes a scalar for the variable in `lane`. Negative powers require an
    /// invertible scalar.
    pub fn specialize_lane(&self, lane: usize, v: &C) -> Self {
        let inv = if v.is_zero() {
            None
        } else {
            C::one().try_div(v)
        };
        let terms = self
            .terms
            .iter()
            .filter_map(|(m, c)| {
                let k = m.0[lane];
                let f = if k >= 0 {
                    num_traits::pow(v.clone(), k as usize)
                } else {
                    let inv = inv
                        .clone()
                        .expect("negative power of a non-invertible scalar");
                    num_traits::pow(inv, (-k) as usize)
                };
                let c = c.clone() * f;
                (!c.is_zero()).then(|| (m.with_lane(lane, 0), c))
            })
            .collect();
        Self::from_terms(terms)
    }

    /// Coefficient of `var^k` for the variable in `lane`.
    pub fn lane_coeff(&self, lane: usize, k: i16) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[lane] == k)
                .map(|(m, c)| (m.with_lane(lane, 0), c.clone()))
                .collect(),
        }
    }

    /// Range of exponents of the variable in `lane`.
    pub fn lane_range(&self, lane: usize) -> Option<(i16, i16)> {
        let mut it = self.terms.iter().map(|(m, _)| m.0[lane]);
        let first = it.next()?;
        Some(it.fold((first, first), |(a, b), x| (a.min(x), b.max(x))))
    }

    /// Keeps terms whose degree (`Mono::degree`) is below or equal to `cap`.
    pub fn truncate(&self, cap: i32) -> Self {
        self.retain(|m| m.degree() <= cap)
    }

    pub fn homogeneous_part(&self, d: i32) -> Self {
        self.retain(|m| m.degree() == d)
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.iter().map(|(m, _)| m.degree()).min()
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                std::cmp::Ordering::Greater
            } else if j == b.len() {
                std::cmp::Ordering::Less
            } else {
                a[i].0.cmp(&b[j].0)
            };
            match ord {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    let c = if negate {
                        -b[j].1.clone()
                    } else {
                        b[j].1.clone()
                    };
                    out.push((b[j].0, c));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate {
                        a[i].1.clone() - b[j].1.clone()
                    } else {
                        a[i].1.clone() + b[j].1.clone()
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Poly { terms: out }
    }

    /// Formats with a caller supplied monomial printer.
    pub fn format_with(&self, mono: impl Fn(&Mono) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut s = String::new();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let ms = mono(m);
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if ms.is_empty() {
                s.push_str(&abs.to_string());
            } else if abs.is_one() {
                s.push_str(&ms);
            } else {
                s.push_str(&format!("{abs}*{ms}"));
            }
        }
        s
    }
}

impl<C: Coeff> fmt::Debug for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_with(|m| generic_mono(m)))
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn generic_mono(m: &Mono) -> String {
    let mut parts = Vec::new();
    for l in 0..MAX_RANK {
        if m.0[l] != 0 {
            parts.push(format!("x{}^{}", l + 1, m.0[l]));
        }
    }
    if m.h() != 0 {
        parts.push(format!("h^{}", m.h()));
    }
    if m.y() != 0 {
        parts.push(format!("y^{}", m.y()));
    }
    parts.join("*")
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, o: &Poly<C>) -> Poly<C> {
        self.merge(o, false)
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, o: &Poly<C>) -> Poly<C> {
        self.merge(o, true)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, o: &Poly<C>) -> Poly<C> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        if o.terms.len() == 1 {
            return self.mul_term(o.terms[0].0, &o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(self.terms[0].0, &self.terms[0].1);
        }
        let mut t = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                t.push((*a + *b, ca.clone() * cb.clone()));
            }
        }
        Poly::from_terms(t)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff> $tr for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, o: Poly<C>) -> Poly<C> {
                (&self).$f(&o)
            }
        }
        impl<C: Coeff> $tr<&Poly<C>> for Poly<C> {
            type Output = Poly<C>;
            fn $f(self, o: &Poly<C>) -> Poly<C> {
                (&self).$f(o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coeff> Neg for Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        -&self
    }
}

impl<C: Coeff> std::iter::Sum for Poly<C> {
    fn sum<I: Iterator<Item = Poly<C>>>(iter: I) -> Self {
        // gather all terms and combine once
        let mut t = Vec::new();
        for p in iter {
            t.extend(p.terms);
        }
        Poly::from_terms(t)
    }
}

/// Laurent polynomials with integer coefficients.
pub type ZPoly = Poly<BigInt>;
/// Polynomials with rational coefficients.
pub type QPoly = Poly<BigRational>;

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn to_qpoly(p: &ZPoly) -> QPoly {
    p.map_coeffs(|c| BigRational::from_integer(c.clone()))
}

/// Converts when all coefficients are integers.
pub fn to_zpoly(p: &QPoly) -> Option<ZPoly> {
    let mut t = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        if !c.is_integer() {
            return None;
        }
        t.push((*m, c.to_integer()));
    }
    Some(Poly::from_terms(t))
}
