//! Equivariant Hirzebruch classes of Schubert cells: the Todd transformation
//! of motivic Chern classes, the Hirzebruch operators, and their normalized
//! versions through the Adams operation `psi_*^{1+y}`.
//!
//! A class is a [`CohClass`] whose values carry `y` and are truncated above a
//! cohomological degree (the cap). Homology classes are identified with
//! cohomology classes by Poincaré duality, so degree `d` has homological
//! degree `dim - d`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::series::UniSeries;
use crate::algebra::{GradedSeries, Mono, QPoly, YPoly, LANE_Y};
use crate::cohclass::{chern_character, linear_form, pushforward, CohClass, CohOps, CohSpace};
use crate::error::{Error, Result};
use crate::kclass::{KClass, KTheory};
use crate::lie::{Parabolic, WeylElement};
use crate::mc::Motivic;

/// Which Todd-type series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ToddMode {
    /// `x / (1 - e^{-x})`.
    Td,
    /// `(1 + y e^{-x}) x / (1 - e^{-x})`.
    TdYUnnormalized,
    /// `Td~_y((1+y) x) / (1+y)`.
    TdY,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Normalization {
    Unnormalized,
    Normalized,
}

fn y_poly() -> QPoly {
    QPoly::mono(Mono::lane(LANE_Y, 1))
}

fn one_plus_y() -> QPoly {
    &QPoly::one() + &y_poly()
}

fn rat(n: i64, d: &BigInt) -> BigRational {
    BigRational::new(BigInt::from(n), d.clone())
}

/// The series of the given mode to `n` terms, with coefficients in `Q[y]`.
pub fn todd_series(mode: ToddMode, n: usize) -> UniSeries {
    let td = UniSeries::todd(n);
    match mode {
        ToddMode::Td => td,
        ToddMode::TdYUnnormalized => {
            let mut e = UniSeries::exp(&-QPoly::one(), n);
            for c in &mut e.coeffs {
                *c = &*c * &y_poly();
            }
            e.coeffs[0] = &e.coeffs[0] + &QPoly::one();
            td.mul(&e)
        }
        ToddMode::TdY => {
            let t = one_plus_y();
            let scaled = UniSeries {
                coeffs: td
                    .coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * &t.pow(k as u32))
                    .collect(),
            };
            // 1 + y (e^{-(1+y)x} - 1)/(1+y)
            let mut fact = BigInt::one();
            let mut b = vec![QPoly::one()];
            for k in 1..n {
                fact *= BigInt::from(k as i64);
                let s = if k % 2 == 0 { 1 } else { -1 };
                b.push((&y_poly() * &t.pow(k as u32 - 1)).scale(&rat(s, &fact)));
            }
            scaled.mul(&UniSeries { coeffs: b })
        }
    }
}

/// `prod_t f(t)` over the given weights, truncated above `cap`.
pub fn todd_class(weights: &[QPoly], mode: ToddMode, cap: i32) -> GradedSeries {
    let s = todd_series(mode, cap.max(0) as usize + 1);
    let mut acc = GradedSeries::one(Some(cap));
    for w in weights {
        acc = acc.mul(&GradedSeries::new(s.compose(w, Some(cap)), Some(cap)));
    }
    acc
}

/// Multiplication by `(1+y)^k`, with exact division when `k < 0`.
fn times_one_plus_y_pow(p: &QPoly, k: i32) -> Result<QPoly> {
    let t = one_plus_y().pow(k.unsigned_abs());
    if k >= 0 {
        Ok(p * &t)
    } else {
        p.div_exact(&t).ok_or(Error::NotDivisible)
    }
}

/// Hirzebruch classes on `G/B` computed modulo degrees above a cap.
pub struct Hirzebruch {
    mc: Motivic,
    space: CohSpace,
    cap: i32,
    relative: Mutex<HashMap<(usize, ToddMode, i32), Arc<CohClass>>>,
}

impl Hirzebruch {
    pub fn new(k: Arc<KTheory>, cap: i32) -> Self {
        let space = CohSpace::full(k.group_arc());
        Hirzebruch {
            mc: Motivic::new(k),
            space,
            cap,
            relative: Mutex::new(HashMap::new()),
        }
    }

    /// Cap defaults to twice the dimension.
    pub fn of_type(label: &str, cap: Option<i32>) -> Result<Self> {
        let k = Arc::new(KTheory::of_type(label)?);
        let cap = cap.unwrap_or(2 * k.dim() as i32);
        Ok(Self::new(k, cap))
    }

    pub fn cap(&self) -> i32 {
        self.cap
    }

    pub fn space(&self) -> &CohSpace {
        &self.space
    }

    pub fn motivic(&self) -> &Motivic {
        &self.mc
    }

    fn dim(&self) -> i32 {
        self.space.dim() as i32
    }

    /// Precision for classes: each divided difference costs one degree.
    fn work(&self) -> i32 {
        self.cap + self.dim()
    }

    /// Precision for classes that are integrated afterwards.
    fn deep(&self) -> i32 {
        self.cap + 2 * self.dim()
    }

    fn ops(&self) -> CohOps<'_> {
        CohOps::new(&self.space)
    }

    fn tangent_weights(&self, k: usize) -> Vec<QPoly> {
        let g = self.space.group();
        let rs = g.root_system();
        let w = self.space.point(k);
        rs.positive_roots()
            .iter()
            .map(|b| linear_form(rs, &g.act(w, b)))
            .collect()
    }

    /// `Td(TX)` or its `y`-variants, pointwise.
    pub fn tangent_todd(&self, mode: ToddMode, cap: i32) -> CohClass {
        CohClass::from_values(
            (0..self.space.n_points())
                .map(|k| todd_class(&self.tangent_weights(k), mode, cap))
                .collect(),
        )
    }

    /// `f(c_1(T_{p_i}))`, restricting to `f(w alpha_i)` at `w`.
    fn relative_todd(&self, i: usize, mode: ToddMode, cap: i32) -> Arc<CohClass> {
        let key = (i, mode, cap);
        if let Some(c) = self.relative.lock().expect("cache lock").get(&key) {
            return c.clone();
        }
        let g = self.space.group();
        let rs = g.root_system();
        let a = rs.simple_root(i);
        let s = todd_series(mode, cap.max(0) as usize + 1);
        let c = Arc::new(CohClass::from_values(
            g.elements()
                .map(|w| {
                    GradedSeries::new(
                        s.compose(&linear_form(rs, &g.act(w, &a)), Some(cap)),
                        Some(cap),
                    )
                })
                .collect(),
        ));
        self.relative
            .lock()
            .expect("cache lock")
            .insert(key, c.clone());
        c
    }

    /// Chern character of a K-theory class.
    pub fn chern_character(&self, a: &KClass, cap: i32) -> CohClass {
        let rs = self.space.group().root_system();
        CohClass::from_values(
            a.restrictions()
                .iter()
                .map(|p| chern_character(rs, p, cap))
                .collect(),
        )
    }

    /// `td_*(a) = ch(a) Td(TX)`.
    pub fn td_star(&self, a: &KClass, cap: i32) -> CohClass {
        self.chern_character(a, cap)
            .mul(&self.tangent_todd(ToddMode::Td, cap))
    }

    /// Adams operation `psi_*^{1+y}`: scales cohomological degree `d` by `(1+y)^{d - dim}`.
    pub fn adams_homological(&self, a: &CohClass) -> Result<CohClass> {
        self.adams(a, -self.dim())
    }

    /// Adams operation `psi^*_{1+y}`: scales degree `d` by `(1+y)^d`.
    pub fn adams_cohomological(&self, a: &CohClass) -> Result<CohClass> {
        self.adams(a, 0)
    }

    fn adams(&self, a: &CohClass, shift: i32) -> Result<CohClass> {
        let vals = a
            .values()
            .iter()
            .map(|s| {
                let mut acc = QPoly::zero();
                for (d, c) in s.components() {
                    acc = &acc + &times_one_plus_y_pow(&c, d + shift)?;
                }
                Ok(GradedSeries::new(acc, s.cap()))
            })
            .collect::<Result<_>>()?;
        Ok(CohClass::from_values(vals))
    }

    fn mode(n: Normalization) -> ToddMode {
        match n {
            Normalization::Unnormalized => ToddMode::TdYUnnormalized,
            Normalization::Normalized => ToddMode::TdY,
        }
    }

    /// `Td(T_{p_i}) partial_i - id` in the chosen normalization.
    pub fn operator(&self, i: usize, a: &CohClass, n: Normalization) -> CohClass {
        let cap = a.cap().unwrap_or(self.work());
        self.relative_todd(i, Self::mode(n), cap)
            .mul(&self.ops().bgg(i, a))
            .sub(a)
    }

    /// `partial_i (Td(T_{p_i}) a) - id`.
    pub fn dual_operator(&self, i: usize, a: &CohClass, n: Normalization) -> CohClass {
        let cap = a.cap().unwrap_or(self.work());
        let t = self.relative_todd(i, Self::mode(n), cap);
        self.ops().bgg(i, &t.mul(a)).sub(a)
    }

    /// `L_i^H = T_i^{H,vee} + (1+y)`.
    pub fn l_operator(&self, i: usize, a: &CohClass, n: Normalization) -> CohClass {
        self.dual_operator(i, a, n).add(&a.scale(&one_plus_y()))
    }

    fn apply_word(
        &self,
        word: &[u8],
        a: &CohClass,
        f: impl Fn(&Self, usize, &CohClass) -> CohClass,
    ) -> CohClass {
        word.iter()
            .rev()
            .fold(a.clone(), |acc, &i| f(self, i as usize, &acc))
    }

    /// The operator word applied to `[e_id]`.
    pub fn class_by_operators(&self, w: WeylElement, n: Normalization) -> CohClass {
        let g = self.space.group();
        let start = self
            .space
            .point_class(WeylElement::ID)
            .with_cap(Some(self.work()));
        let c = self.apply_word(g.word(g.inverse(w)), &start, |h, i, a| h.operator(i, a, n));
        c.with_cap(Some(self.cap))
    }

    /// `td_*(MC_y(X(w)°))`, normalized by `psi_*^{1+y}` if requested.
    pub fn class_from_mc(&self, w: WeylElement, n: Normalization) -> Result<CohClass> {
        let t = self.td_star(self.mc.mc(w), self.work());
        let t = match n {
            Normalization::Unnormalized => t,
            Normalization::Normalized => self.adams_homological(&t)?,
        };
        Ok(t.with_cap(Some(self.cap)))
    }

    /// Hirzebruch class of `X(w)°`, computed both ways.
    pub fn hirzebruch_class(&self, w: WeylElement, n: Normalization) -> Result<CohClass> {
        let a = self.class_from_mc(w, n)?;
        let b = self.class_by_operators(w, n);
        if !a.agrees(&b) {
            return Err(Error::Check(format!(
                "Hirzebruch routes disagree at {}",
                self.space.group().name(w)
            )));
        }
        Ok(b)
    }

    /// `y = 0` of the unnormalized class is `td_*(I_w)`.
    pub fn check_y_zero(&self, w: WeylElement) -> Result<()> {
        let a = self
            .class_by_operators(w, Normalization::Unnormalized)
            .specialize_y(&BigRational::zero());
        let b = self.td_star(self.mc.ktheory().ideal_sheaf(w), self.cap);
        check(a.agrees(&b), || {
            format!("y = 0 specialization at {}", self.space.group().name(w))
        })
    }

    /// `y = -1` of the normalized class is the CSM class.
    pub fn check_y_minus_one(&self, w: WeylElement, csm: &CohClass) -> Result<()> {
        let a = self
            .class_by_operators(w, Normalization::Normalized)
            .specialize_y(&-BigRational::one());
        check(a.agrees(csm), || {
            format!("y = -1 specialization at {}", self.space.group().name(w))
        })
    }

    /// `<td_*(I_u), ch(O^v)> = delta_{u,v}`.
    pub fn check_todd_duals(&self) -> Result<()> {
        let g = self.space.group();
        let k = self.mc.ktheory();
        let cap = self.deep();
        let ch: Vec<CohClass> = g
            .elements()
            .map(|v| self.chern_character(&k.opposite_structure_sheaf(v), cap))
            .collect();
        for u in g.elements() {
            let t = self.td_star(k.ideal_sheaf(u), cap);
            for v in g.elements() {
                let p = self.space.pair(&t, &ch[v.index()])?;
                check(p.agrees(&delta(u == v, self.cap)), || {
                    format!("Todd duality at ({}, {})", g.name(u), g.name(v))
                })?;
            }
        }
        Ok(())
    }

    /// `<Td_{y,*}(X(u)°), L^H_{v^{-1} w_0}[e_{w_0}]> = delta_{u,v} Td_y(T_{w_0} X)`.
    pub fn check_duality(&self, u: WeylElement, v: WeylElement, n: Normalization) -> Result<()> {
        let g = self.space.group();
        let w0 = g.longest();
        let start = self.space.point_class(w0).with_cap(Some(self.deep()));
        let word = g.word(g.mul(g.inverse(v), w0)).to_vec();
        let dual = self.apply_word(&word, &start, |h, i, a| h.l_operator(i, a, n));
        let x = self.class_by_operators_capped(u, n, self.deep());
        let p = self.space.pair(&x, &dual)?;
        let want = if u == v {
            todd_class(&self.tangent_weights(w0.index()), Self::mode(n), self.cap)
        } else {
            GradedSeries::zero(Some(self.cap))
        };
        let deep_enough = p.cap().map_or(true, |c| c >= self.cap);
        check(deep_enough && p.agrees(&want), || {
            format!("Hirzebruch duality at ({}, {})", g.name(u), g.name(v))
        })
    }

    fn class_by_operators_capped(&self, w: WeylElement, n: Normalization, cap: i32) -> CohClass {
        let g = self.space.group();
        let start = self.space.point_class(WeylElement::ID).with_cap(Some(cap));
        self.apply_word(g.word(g.inverse(w)), &start, |h, i, a| h.operator(i, a, n))
    }

    /// Normalized Segre identity
    /// `Td_{y,*}(X(w)°) / Td_y(TX) = T^{vee,H}_{w^{-1}}([e_id] / Td_y(T_id X))`.
    pub fn segre(&self, w: WeylElement) -> Result<CohClass> {
        let n = Normalization::Normalized;
        let inv = self
            .tangent_todd(ToddMode::TdY, self.work())
            .map(|s| s.inverse().expect("constant term one"));
        let start = self
            .space
            .point_class(WeylElement::ID)
            .with_cap(Some(self.work()))
            .mul(&inv);
        let g = self.space.group();
        let rhs = self.apply_word(g.word(g.inverse(w)), &start, |h, i, a| {
            h.dual_operator(i, a, n)
        });
        let lhs = self.class_by_operators_capped(w, n, self.work()).mul(&inv);
        check(lhs.agrees(&rhs), || {
            format!("Hirzebruch Segre identity at {}", g.name(w))
        })?;
        Ok(rhs.with_cap(Some(self.cap)))
    }

    /// Push-forward to `G/P`.
    pub fn pushforward(&self, a: &CohClass, target: &CohSpace) -> Result<CohClass> {
        pushforward(&self.space, target, a)
    }

    /// `pi_* Td_{y,*}(X(w)°) = (-y)^{l(w) - l(wW_P)} Td_{y,*}(X(wW_P)°)`.
    pub fn check_pushforward(&self, p: &Parabolic, w: WeylElement) -> Result<()> {
        let g = self.space.group_arc();
        let target = CohSpace::new(g.clone(), p.clone());
        let n = Normalization::Normalized;
        let m = p.min_rep(w);
        let a = self.pushforward(&self.class_by_operators_capped(w, n, self.work()), &target)?;
        let b = self.pushforward(&self.class_by_operators_capped(m, n, self.work()), &target)?;
        let k = (g.length(w) - g.length(m)) as u32;
        let f = (-y_poly()).pow(k);
        check(a.agrees(&b.scale(&f)), || {
            format!("Hirzebruch push-forward at {}", g.name(w))
        })
    }

    /// `int_X Td_{y,*}(X)` carries no equivariant parameters and equals `chi_y(X)`.
    pub fn check_rigidity(&self) -> Result<YPoly> {
        let g = self.space.group();
        let n = Normalization::Normalized;
        let mut total = CohClass::zero(self.space.n_points()).with_cap(Some(self.deep()));
        for w in g.elements() {
            total = total.add(&self.class_by_operators_capped(w, n, self.deep()));
        }
        let s = self.space.integrate(&total)?;
        if s.poly().terms().iter().any(|(m, _)| m.degree() != 0) {
            return Err(Error::Check("Hirzebruch genus depends on the torus".into()));
        }
        let mut c = Vec::new();
        for (m, x) in s.poly().terms() {
            let k = m.y() as usize;
            if c.len() <= k {
                c.resize(k + 1, BigInt::zero());
            }
            if !x.is_integer() {
                return Err(Error::NonIntegral(x.to_string()));
            }
            c[k] = x.to_integer();
        }
        Ok(YPoly::from_coeffs(c))
    }

    /// Every reported class unchanged when the cap grows by two.
    pub fn check_cap_stability(&self, w: WeylElement) -> Result<()> {
        let wider = Hirzebruch::new(self.mc.ktheory_arc(), self.cap + 2);
        for n in [Normalization::Unnormalized, Normalization::Normalized] {
            let a = self.hirzebruch_class(w, n)?;
            let b = wider.hirzebruch_class(w, n)?;
            check(a == b.with_cap(Some(self.cap)), || {
                format!("cap stability at {}", self.space.group().name(w))
            })?;
        }
        Ok(())
    }
}

fn delta(b: bool, cap: i32) -> GradedSeries {
    GradedSeries::new(if b { QPoly::one() } else { QPoly::zero() }, Some(cap))
}

fn check(ok: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Check(msg()))
    }
}
