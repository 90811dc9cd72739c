use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use super::laurent::Laurent;
use super::poly::{Mono, LANE_Y};

/// Irreducible binomial denominator factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// `1 - e^mu`, normalised so that `mu` is positive in the monomial order.
    OneMinus(Mono),
    /// `1 + y e^mu`.
    OnePlusY(Mono),
}

impl Factor {
    pub fn poly(&self) -> Laurent {
        match *self {
            Factor::OneMinus(m) => {
                Laurent::from_terms(vec![(Mono::ONE, BigInt::one()), (m, -BigInt::one())])
            }
            Factor::OnePlusY(m) => Laurent::from_terms(vec![
                (Mono::ONE, BigInt::one()),
                (m.with_lane(LANE_Y, 1), BigInt::one()),
            ]),
        }
    }
}

/// A Laurent polynomial divided by a product of binomials `1 - e^mu` and
/// `1 + y e^mu`.
#[derive(Clone)]
pub struct FactoredFraction {
    num: Laurent,
    den: Vec<Factor>,
}

impl FactoredFraction {
    pub fn from_poly(p: Laurent) -> Self {
        FactoredFraction {
            num: p,
            den: vec![],
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(Laurent::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(Laurent::one())
    }

    /// `num / (1 - e^mu)`.
    pub fn over_one_minus(num: Laurent, mu: Mono) -> Self {
        Self::from_poly(num).div_one_minus(mu)
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &[Factor] {
        &self.den
    }

    pub fn denominator_poly(&self) -> Laurent {
        self.den
            .iter()
            .fold(Laurent::one(), |acc, f| &acc * &f.poly())
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Divides by `1 - e^mu`.
    pub fn div_one_minus(mut self, mu: Mono) -> Self {
        assert!(mu != Mono::ONE, "1 - e^0 is zero");
        if mu < Mono::ONE {
            // 1/(1 - x) = -x^-1 / (1 - x^-1)
            self.num = -self.num.shift(-mu);
            self.den.push(Factor::OneMinus(-mu));
        } else {
            self.den.push(Factor::OneMinus(mu));
        }
        self.den.sort();
        self
    }

    /// Divides by `1 + y e^mu`.
    pub fn div_one_plus_y(mut self, mu: Mono) -> Self {
        self.den.push(Factor::OnePlusY(mu));
        self.den.sort();
        self
    }

    pub fn mul_poly(&self, p: &Laurent) -> Self {
        FactoredFraction {
            num: &self.num * p,
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut den = self.den.clone();
        den.extend_from_slice(&o.den);
        den.sort();
        FactoredFraction {
            num: &self.num * &o.num,
            den,
        }
    }

    pub fn neg(&self) -> Self {
        FactoredFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if o.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return o.clone();
        }
        // least common multiple of the factor multisets
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.den, &o.den);
        let mut common = Vec::new();
        let mut extra_a = Vec::new();
        let mut extra_b = Vec::new();
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i] < b[j]) {
                common.push(a[i]);
                extra_b.push(a[i]);
                i += 1;
            } else if i == a.len() || b[j] < a[i] {
                common.push(b[j]);
                extra_a.push(b[j]);
                j += 1;
            } else {
                common.push(a[i]);
                i += 1;
                j += 1;
            }
        }
        let fa = extra_a
            .iter()
            .fold(self.num.clone(), |acc, f| &acc * &f.poly());
        let fb = extra_b
            .iter()
            .fold(o.num.clone(), |acc, f| &acc * &f.poly());
        FactoredFraction {
            num: &fa + &fb,
            den: common,
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Cancels every denominator factor that divides the numerator exactly.
    pub fn reduce(&self) -> Self {
        let mut num = self.num.clone();
        let mut den = Vec::new();
        for f in &self.den {
            let q = match f {
                Factor::OneMinus(m) => num.div_one_minus(*m),
                Factor::OnePlusY(_) => num.div_exact(&f.poly()),
            };
            match q {
                Some(q) => num = q,
                None => den.push(*f),
            }
        }
        if num.is_zero() {
            den.clear();
        }
        FactoredFraction { num, den }
    }

    /// The polynomial value, if the fraction reduces to one.
    pub fn to_poly(&self) -> Option<Laurent> {
        let r = self.reduce();
        r.den.is_empty().then_some(r.num)
    }

    /// Equality by cross multiplication.
    pub fn equals(&self, o: &Self) -> bool {
        let l = o
            .den
            .iter()
            .fold(self.num.clone(), |acc, f| &acc * &f.poly());
        let r = self
            .den
            .iter()
            .fold(o.num.clone(), |acc, f| &acc * &f.poly());
        l == r
    }

    pub fn equals_poly(&self, p: &Laurent) -> bool {
        self.equals(&FactoredFraction::from_poly(p.clone()))
    }

    pub fn sum<'a>(items: impl IntoIterator<Item = &'a FactoredFraction>) -> FactoredFraction {
        items.into_iter().fold(Self::zero(), |acc, x| acc.add(x))
    }

    pub fn is_polynomial(&self) -> bool {
        self.to_poly().is_some()
    }
}

impl PartialEq for FactoredFraction {
    fn eq(&self, o: &Self) -> bool {
        self.equals(o)
    }
}

impl fmt::Debug for FactoredFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            write!(f, "{:?}", self.num)
        } else {
            write!(f, "({:?}) / ({:?})", self.num, self.denominator_poly())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::laurent::{e, int, one_minus_e};
    use crate::lie::{LieType, RootSystem};

    #[test]
    fn reduction_preserves_value() {
        let rs = RootSystem::new(LieType::A, 2).unwrap();
        let a = rs.simple_root(0);
        let b = rs.simple_root(1);
        let num = &one_minus_e(&(a + a)) * &e(&b);
        let f = FactoredFraction::over_one_minus(num.clone(), Mono::from_weight(&a))
            .div_one_minus(Mono::from_weight(&-b));
        let r = f.reduce();
        assert!(r.equals(&f));
        assert_eq!(r.denominator().len(), 1);
    }

    #[test]
    fn sums_with_opposite_denominators() {
        // 1/(1-x) + 1/(1-x^-1) = 1
        let rs = RootSystem::new(LieType::A, 1).unwrap();
        let m = Mono::from_weight(&rs.simple_root(0));
        let s = FactoredFraction::over_one_minus(int(1), m)
            .add(&FactoredFraction::over_one_minus(int(1), -m));
        assert_eq!(s.to_poly().unwrap(), int(1));
    }
}
