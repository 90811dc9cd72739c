//! The Kostant-Kumar Hecke algebra with the Demazure-Lusztig generators
//! `T_i = (1 + y e^{alpha_i}) D_i - 1`, used as an independent source of the
//! Schubert expansion coefficients of motivic Chern classes.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::algebra::laurent::{int, Laurent};
use crate::algebra::{Mono, LANE_Y};
use crate::error::Result;
use crate::lie::{RootSystem, WeylElement, WeylGroup};

/// `sum_w D_w p_w`, with the coefficients to the right of the `D_w`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct HeckeElement {
    terms: BTreeMap<WeylElement, Laurent>,
}

impl HeckeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `D_w p`.
    pub fn term(w: WeylElement, p: Laurent) -> Self {
        let mut h = Self::zero();
        h.add_term(w, p);
        h
    }

    pub fn scalar(p: Laurent) -> Self {
        Self::term(WeylElement::ID, p)
    }

    pub fn terms(&self) -> impl Iterator<Item = (WeylElement, &Laurent)> {
        self.terms.iter().map(|(w, p)| (*w, p))
    }

    /// Coefficient of `D_w`.
    pub fn coeff(&self, w: WeylElement) -> Laurent {
        self.terms.get(&w).cloned().unwrap_or_else(Laurent::zero)
    }

    fn add_term(&mut self, w: WeylElement, p: Laurent) {
        if p.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_insert_with(Laurent::zero);
        *e = &*e + &p;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (w, p) in &o.terms {
            r.add_term(*w, p.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        HeckeElement {
            terms: self.terms.iter().map(|(w, p)| (*w, -p)).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Right multiplication by a scalar.
    pub fn mul_scalar(&self, q: &Laurent) -> Self {
        let mut r = Self::zero();
        for (w, p) in &self.terms {
            r.add_term(*w, p * q);
        }
        r
    }
}

/// Arithmetic in the Hecke algebra of a fixed root system.
pub struct Hecke {
    g: Arc<WeylGroup>,
}

impl Hecke {
    pub fn new(g: Arc<WeylGroup>) -> Self {
        Hecke { g }
    }

    pub fn of_type(label: &str) -> Result<Self> {
        let rs = RootSystem::from_cartan(label.parse()?);
        Ok(Self::new(Arc::new(WeylGroup::new(rs)?)))
    }

    pub fn group(&self) -> &WeylGroup {
        &self.g
    }

    fn reflect_mono(&self, i: usize, m: Mono) -> Mono {
        let w = self.g.root_system().reflect(i, &m.weight());
        Mono::from_weight(&w).with_lane(LANE_Y, m.y())
    }

    /// `s_i(p)`.
    pub fn reflect(&self, i: usize, p: &Laurent) -> Laurent {
        p.map_monos(|m| self.reflect_mono(i, m))
    }

    /// `(p - s_i p) / (1 - e^{alpha_i})`, expanded as a finite geometric sum.
    pub fn divided_difference(&self, i: usize, p: &Laurent) -> Laurent {
        let alpha = Mono::from_weight(&self.g.root_system().simple_root(i));
        let mut out = Vec::new();
        for (m, c) in p.terms() {
            let n = m.weight().pair_coroot(i);
            if n > 0 {
                // -e^{lambda - n alpha}(1 + e^alpha + ... + e^{(n-1) alpha})
                let base = *m - pow(alpha, n);
                for k in 0..n {
                    out.push((base + pow(alpha, k), -c.clone()));
                }
            } else if n < 0 {
                for k in 0..-n {
                    out.push((*m + pow(alpha, k), c.clone()));
                }
            }
        }
        Laurent::from_terms(out)
    }

    /// Right multiplication by `D_i`, using `p D_i = D_i s_i(p) + (p - s_i p)/(1 - e^{alpha_i})`
    /// and `D_w D_i = D_{w s_i}` or `D_w`.
    pub fn mul_d(&self, x: &HeckeElement, i: usize) -> HeckeElement {
        let mut r = HeckeElement::zero();
        for (w, p) in x.terms() {
            let ws = self.g.right_mul_simple(w, i);
            let wd = if ws > w { ws } else { w };
            r.add_term(wd, self.reflect(i, p));
            r.add_term(w, self.divided_difference(i, p));
        }
        r
    }

    /// `D_w` as an element.
    pub fn d(&self, w: WeylElement) -> HeckeElement {
        HeckeElement::term(w, int(1))
    }

    pub fn mul(&self, x: &HeckeElement, o: &HeckeElement) -> HeckeElement {
        let mut r = HeckeElement::zero();
        for (v, q) in o.terms() {
            let mut t = x.clone();
            for &i in self.g.word(v) {
                t = self.mul_d(&t, i as usize);
            }
            r = r.add(&t.mul_scalar(q));
        }
        r
    }

    /// `T_i = (1 + y e^{alpha_i}) D_i - 1`.
    pub fn t_generator(&self, i: usize) -> HeckeElement {
        self.times_t(&HeckeElement::scalar(int(1)), i)
    }

    /// `x T_i`.
    pub fn times_t(&self, x: &HeckeElement, i: usize) -> HeckeElement {
        let alpha = self.g.root_system().simple_root(i);
        let f = crate::algebra::laurent::one_plus_ye(&alpha);
        self.mul_d(&x.mul_scalar(&f), i).sub(x)
    }

    /// `T_{i_1} ... T_{i_k}` for a word.
    pub fn t_of_word(&self, word: &[u8]) -> HeckeElement {
        word.iter().fold(HeckeElement::scalar(int(1)), |acc, &i| {
            self.times_t(&acc, i as usize)
        })
    }

    /// `T_w` along the canonical reduced word.
    pub fn t_word(&self, w: WeylElement) -> HeckeElement {
        self.t_of_word(self.g.word(w))
    }

    /// `a_{u,w}`: the coefficient of `D_{u^{-1}}` in `T_{w^{-1}}`, indexed by `u`.
    pub fn mc_coefficients(&self, w: WeylElement) -> Vec<Laurent> {
        let t = self.t_word(self.g.inverse(w));
        self.g
            .elements()
            .map(|u| t.coeff(self.g.inverse(u)))
            .collect()
    }

    /// Order of `s_i s_j`.
    pub fn braid_order(&self, i: usize, j: usize) -> usize {
        let m = &self.g.root_system().cartan().matrix;
        match m[i][j] * m[j][i] {
            0 => 2,
            1 => 3,
            2 => 4,
            3 => 6,
            _ => unreachable!("not a finite type"),
        }
    }
}

fn pow(m: Mono, k: i32) -> Mono {
    let mut r = Mono::ONE;
    for (a, &b) in r.0.iter_mut().zip(m.0.iter()) {
        *a = b * k as i16;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::expr::parse_laurent;
    use crate::algebra::laurent::{one_plus_ye, y};

    #[test]
    fn nil_hecke_relations() {
        let h = Hecke::of_type("A1").unwrap();
        let s = h.group().simple(0);
        assert_eq!(h.mul(&h.d(s), &h.d(s)), h.d(s));
        let rs = h.group().root_system();
        let a = rs.simple_root(0);
        let lhs = h.mul(
            &HeckeElement::scalar(crate::algebra::laurent::e(&a)),
            &h.d(s),
        );
        let rhs = HeckeElement::term(s, crate::algebra::laurent::e(&-a));
        assert_eq!(
            lhs.sub(&rhs),
            HeckeElement::scalar(parse_laurent(rs, "-1 - e(-1)").unwrap())
        );
    }

    #[test]
    fn quadratic_and_braid_relations() {
        for t in ["A2", "B2", "G2"] {
            let h = Hecke::of_type(t).unwrap();
            for i in 0..2 {
                let ti = h.t_generator(i);
                let one = HeckeElement::scalar(int(1));
                let q = h.mul(&ti.add(&one), &ti.add(&HeckeElement::scalar(y())));
                assert!(q.is_zero(), "{t}");
            }
            let m = h.braid_order(0, 1);
            let a: Vec<u8> = (0..m).map(|k| (k % 2) as u8).collect();
            let b: Vec<u8> = (0..m).map(|k| ((k + 1) % 2) as u8).collect();
            assert_eq!(h.t_of_word(&a), h.t_of_word(&b), "{t}");
        }
    }

    #[test]
    fn low_length_coefficients() {
        let h = Hecke::of_type("A2").unwrap();
        let g = h.group();
        let rs = g.root_system();
        let s1 = g.simple(0);
        let c = h.mc_coefficients(s1);
        assert_eq!(c[s1.index()], parse_laurent(rs, "1 + e(-1,0) y").unwrap());
        assert_eq!(c[0], parse_laurent(rs, "-(1 + y + e(-1,0) y)").unwrap());
        for w in g.elements() {
            let mut d = int(1);
            for b in rs.positive_roots() {
                let wb = g.act(w, b);
                if !rs.is_positive_root(&wb) {
                    d = &d * &one_plus_ye(&wb);
                }
            }
            assert_eq!(h.mc_coefficients(w)[w.index()], d);
        }
    }

    #[test]
    fn displayed_product_in_a2() {
        let h = Hecke::of_type("A2").unwrap();
        let g = h.group();
        let rs = g.root_system();
        let t = h.t_of_word(&[1, 0]);
        let p = |s: &str| parse_laurent(rs, s).unwrap();
        assert_eq!(
            t.coeff(g.parse("s2s1").unwrap()),
            p("(1+y e(-1,0))(1+y e(-1,-1))")
        );
        assert_eq!(
            t.coeff(g.parse("s1").unwrap()),
            p("-(1+y e(-1,0))(1+y+y e(-1,-1))")
        );
        assert_eq!(
            t.coeff(g.parse("s2").unwrap()),
            p("-((1+y e(0,-1))(1+y+y e(-1,0)) + y(1+y e(-1,0))e(-1,-1))")
        );
        assert_eq!(
            t.coeff(WeylElement::ID),
            p("(1+y+y e(-1,0))(1+y+y e(0,-1)) + y(1+y e(-1,0))e(-1,-1)")
        );
    }
}
