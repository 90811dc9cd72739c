//! Torus-equivariant cohomology of `G/B` and `G/P` in the fixed-point (GKM)
//! model, with Chern-Schwartz-MacPherson and Segre-MacPherson classes of
//! Schubert cells.
//!
//! Polynomials use the variables `a1..ar` for the simple roots and `h` for
//! the homogenizing parameter. The tangent weights at `e_w` are `w alpha` for
//! `alpha > 0`, so the point class restricts to `prod_{alpha>0} w alpha` at `e_w`.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::laurent::{self, Laurent};
use crate::algebra::poly::q;
use crate::algebra::{GradedSeries, Mono, QPoly, YPoly, LANE_H, LANE_Y};
use crate::error::{Error, Result};
use crate::lie::{Parabolic, RootSystem, Weight, WeylElement, WeylGroup, MAX_RANK};

/// The linear form of a weight in the simple-root variables.
pub fn linear_form(rs: &RootSystem, lambda: &Weight) -> QPoly {
    let c = rs.root_coords(lambda);
    QPoly::from_terms(
        c.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| {
                (
                    Mono::lane(k, 1),
                    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom())),
                )
            })
            .collect(),
    )
}

pub fn hbar() -> QPoly {
    QPoly::mono(Mono::lane(LANE_H, 1))
}

/// A class given by its restrictions to the fixed points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    vals: Vec<GradedSeries>,
}

impl CohClass {
    pub fn from_values(vals: Vec<GradedSeries>) -> Self {
        CohClass { vals }
    }

    pub fn exact(vals: Vec<QPoly>) -> Self {
        CohClass {
            vals: vals.into_iter().map(GradedSeries::exact).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Self::exact(vec![QPoly::zero(); n])
    }

    pub fn values(&self) -> &[GradedSeries] {
        &self.vals
    }

    pub fn at(&self, k: usize) -> &GradedSeries {
        &self.vals[k]
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(GradedSeries::is_zero)
    }

    pub fn cap(&self) -> Option<i32> {
        self.vals
            .iter()
            .fold(None, |c, v| crate::algebra::series::min_cap(c, v.cap()))
    }

    pub fn with_cap(&self, cap: Option<i32>) -> Self {
        self.map(|v| v.with_cap(cap))
    }

    pub fn map(&self, f: impl Fn(&GradedSeries) -> GradedSeries) -> Self {
        CohClass {
            vals: self.vals.iter().map(f).collect(),
        }
    }

    fn zip(&self, o: &Self, f: impl Fn(&GradedSeries, &GradedSeries) -> GradedSeries) -> Self {
        assert_eq!(self.len(), o.len(), "classes on different spaces");
        CohClass {
            vals: self
                .vals
                .iter()
                .zip(&o.vals)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.zip(o, GradedSeries::add)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.zip(o, GradedSeries::sub)
    }

    pub fn neg(&self) -> Self {
        self.map(GradedSeries::neg)
    }

    /// Pointwise product.
    pub fn mul(&self, o: &Self) -> Self {
        self.zip(o, GradedSeries::mul)
    }

    pub fn scale(&self, p: &QPoly) -> Self {
        self.map(|v| v.mul_poly(p))
    }

    pub fn scale_rational(&self, c: &BigRational) -> Self {
        self.map(|v| v.scale(c))
    }

    /// Substitutes a value for `h`.
    pub fn specialize_hbar(&self, v: &BigRational) -> Self {
        self.map(|s| GradedSeries::new(s.poly().specialize_lane(LANE_H, v), s.cap()))
    }

    pub fn specialize_y(&self, v: &BigRational) -> Self {
        self.map(|s| s.specialize_y(v))
    }

    /// Agreement up to the smaller cap at every point.
    pub fn agrees(&self, o: &Self) -> bool {
        self.len() == o.len() && self.vals.iter().zip(&o.vals).all(|(a, b)| a.agrees(b))
    }
}

struct Point {
    w: WeylElement,
    /// `(linear form of v alpha, v alpha > 0)` for the tangent roots.
    tangent: Vec<(QPoly, bool)>,
    /// `prod_{alpha in R_P^+} v alpha`.
    levi_product: QPoly,
}

/// The fixed-point data of `G/P` (with `P = B` for the full flag manifold).
pub struct CohSpace {
    g: Arc<WeylGroup>,
    p: Parabolic,
    points: Vec<Point>,
    /// `w_0 alpha_k = -alpha_{sigma(k)}`.
    sigma: Vec<usize>,
    /// `prod_{alpha>0} alpha`.
    root_product: Vec<QPoly>,
    schubert: Vec<OnceLock<CohClass>>,
}

fn product(f: impl IntoIterator<Item = QPoly>) -> QPoly {
    f.into_iter().fold(QPoly::one(), |a, b| &a * &b)
}

fn sign(k: usize) -> BigRational {
    if k % 2 == 0 {
        BigRational::one()
    } else {
        -BigRational::one()
    }
}

impl CohSpace {
    pub fn new(g: Arc<WeylGroup>, p: Parabolic) -> Self {
        let rs = g.root_system();
        let nonlevi = p.nonlevi_roots(&g);
        let points = p
            .reps()
            .iter()
            .map(|&v| Point {
                w: v,
                tangent: nonlevi
                    .iter()
                    .map(|&k| {
                        let b = g.act(v, &rs.positive_roots()[k]);
                        (linear_form(rs, &b), rs.is_positive_root(&b))
                    })
                    .collect(),
                levi_product: product(
                    p.levi_roots()
                        .iter()
                        .map(|&k| linear_form(rs, &g.act(v, &rs.positive_roots()[k]))),
                ),
            })
            .collect();
        let w0 = g.longest();
        let sigma = (0..g.rank())
            .map(|k| {
                let img = -g.act(w0, &rs.simple_root(k));
                (0..g.rank())
                    .find(|&j| rs.simple_root(j) == img)
                    .expect("w0 permutes -simple roots")
            })
            .collect();
        let root_product = rs
            .positive_roots()
            .iter()
            .map(|b| linear_form(rs, b))
            .collect();
        let n = p.len();
        CohSpace {
            g,
            p,
            points,
            sigma,
            root_product,
            schubert: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn full(g: Arc<WeylGroup>) -> Self {
        let p = Parabolic::borel(&g);
        Self::new(g, p)
    }

    pub fn group(&self) -> &WeylGroup {
        &self.g
    }

    pub fn group_arc(&self) -> Arc<WeylGroup> {
        self.g.clone()
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.p
    }

    pub fn n_points(&self) -> usize {
        self.points.len()
    }

    pub fn dim(&self) -> usize {
        self.p.dimension(&self.g)
    }

    pub fn point(&self, k: usize) -> WeylElement {
        self.points[k].w
    }

    pub fn index_of(&self, w: WeylElement) -> usize {
        self.p.coset_index(w)
    }

    /// Euler class of the tangent space at a point.
    pub fn tangent_euler(&self, k: usize) -> QPoly {
        product(self.points[k].tangent.iter().map(|t| t.0.clone()))
    }

    /// `c(TX)` with every tangent weight `t` contributing `1 + t`.
    pub fn total_chern(&self) -> CohClass {
        self.chern_with(&QPoly::one(), 1)
    }

    /// `c(T^*X)`.
    pub fn total_chern_cotangent(&self) -> CohClass {
        self.chern_with(&QPoly::one(), -1)
    }

    /// Homogenized `c^h(TX) = prod(h + t)`.
    pub fn total_chern_homogenized(&self) -> CohClass {
        self.chern_with(&hbar(), 1)
    }

    fn chern_with(&self, c: &QPoly, s: i64) -> CohClass {
        CohClass::exact(
            self.points
                .iter()
                .map(|pt| product(pt.tangent.iter().map(|t| c + &t.0.scale(&q(s)))))
                .collect(),
        )
    }

    /// `c_1(L_lambda)`, restricting to `-v lambda` at `v`.
    pub fn c1_line_bundle(&self, lambda: &Weight) -> CohClass {
        let rs = self.g.root_system();
        CohClass::exact(
            self.points
                .iter()
                .map(|pt| -linear_form(rs, &self.g.act(pt.w, lambda)))
                .collect(),
        )
    }

    /// The class of the fixed point `e_v`.
    pub fn point_class(&self, v: WeylElement) -> CohClass {
        let k = self.index_of(v);
        let mut vals = vec![QPoly::zero(); self.n_points()];
        vals[k] = self.tangent_euler(k);
        CohClass::exact(vals)
    }

    /// `w_0` acting on a polynomial in `a1..ar`.
    pub fn w0_act(&self, p: &QPoly) -> QPoly {
        let terms = p
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut n = *m;
                let mut deg = 0i32;
                for k in 0..MAX_RANK {
                    n.0[k] = 0;
                }
                for k in 0..self.g.rank() {
                    n.0[self.sigma[k]] = m.0[k];
                    deg += i32::from(m.0[k]);
                }
                (n, if deg % 2 == 0 { c.clone() } else { -c.clone() })
            })
            .collect();
        QPoly::from_terms(terms)
    }

    /// `(tau a)|_v = w_0 (a|_{w_0 v})`: the translate by `w_0`.
    pub fn w0_twist(&self, a: &CohClass) -> CohClass {
        let w0 = self.g.longest();
        CohClass::from_values(
            self.points
                .iter()
                .map(|pt| {
                    let s = a.at(self.index_of(self.g.mul(w0, pt.w)));
                    GradedSeries::new(self.w0_act(s.poly()), s.cap())
                })
                .collect(),
        )
    }

    /// Localization integral; the cap drops by the dimension.
    pub fn integrate(&self, a: &CohClass) -> Result<GradedSeries> {
        // 1/e(v) = (-1)^{l(v)} prod_{R_P^+} v alpha / prod_{alpha>0} alpha
        let g = &self.g;
        let mut num = GradedSeries::zero(None);
        let levi = self.p.levi_roots().len() as i32;
        for (k, pt) in self.points.iter().enumerate() {
            let v = a.at(k);
            if v.is_zero() {
                continue;
            }
            let cap = v.cap().map(|c| c + levi);
            let t = GradedSeries::new(
                &v.poly().scale(&sign(g.length(pt.w))) * &pt.levi_product,
                cap,
            );
            num = num.add(&t);
        }
        for r in &self.root_product {
            num = num
                .div_linear(r)
                .ok_or_else(|| Error::NonIntegral("localization sum".into()))?;
        }
        Ok(num)
    }

    /// Nonequivariant integral: the degree-zero part of the equivariant one.
    pub fn integrate_number(&self, a: &CohClass) -> Result<BigRational> {
        let s = self.integrate(a)?;
        if s.cap().is_some_and(|c| c < 0) {
            return Err(Error::Check("cap too small for the integral".into()));
        }
        Ok(s.poly().coeff(&Mono::ONE))
    }

    pub fn pair(&self, a: &CohClass, b: &CohClass) -> Result<GradedSeries> {
        self.integrate(&a.mul(b))
    }

    /// Schubert class `[X(vW_P)]`. On `G/B` these come from the BGG recursion,
    /// on `G/P` by push-forward.
    pub fn schubert(&self, v: WeylElement) -> &CohClass {
        let k = self.index_of(v);
        self.schubert[k].get_or_init(|| {
            let full = CohSpace::full(self.g.clone());
            let ops = CohOps { space: &full };
            let c = ops.schubert_bgg(self.point(k));
            if self.p.is_borel() {
                c
            } else {
                pushforward_from_full(&full, self, &c).expect("push-forward of a Schubert class")
            }
        })
    }

    /// Opposite Schubert class `[Y(vW_P)]`.
    pub fn opposite_schubert(&self, v: WeylElement) -> CohClass {
        let x = self.p.min_rep(self.g.mul(self.g.longest(), v));
        self.w0_twist(self.schubert(x))
    }

    /// Expansion in Schubert classes (or opposite Schubert classes) by
    /// triangular elimination.
    pub fn expand(&self, a: &CohClass, opposite: bool) -> Result<Vec<GradedSeries>> {
        let n = self.n_points();
        let mut res = a.vals.clone();
        let mut coeffs = vec![GradedSeries::zero(None); n];
        let order: Vec<usize> = if opposite {
            (0..n).collect()
        } else {
            (0..n).rev().collect()
        };
        for k in order {
            if res[k].is_zero() {
                continue;
            }
            let mut c = res[k].clone();
            for (t, pos) in &self.points[k].tangent {
                if *pos != opposite {
                    c = c
                        .div_linear(t)
                        .ok_or_else(|| Error::NonIntegral(self.g.name(self.point(k))))?;
                }
            }
            let b = if opposite {
                self.opposite_schubert(self.point(k))
            } else {
                self.schubert(self.point(k)).clone()
            };
            for (j, r) in res.iter_mut().enumerate() {
                let bj = b.at(j);
                if !bj.is_zero() {
                    *r = r.sub(&c.mul(bj));
                }
            }
            coeffs[k] = c;
        }
        if res.iter().any(|r| !r.is_zero()) {
            return Err(Error::Structural("residual did not vanish".into()));
        }
        Ok(coeffs)
    }

    /// Nonequivariant expansion coefficients: constant terms after setting `h = 1`.
    pub fn expand_numbers(&self, a: &CohClass, opposite: bool) -> Result<Vec<BigRational>> {
        let a = a.specialize_hbar(&BigRational::one());
        Ok(self
            .expand(&a, opposite)?
            .into_iter()
            .map(|c| c.poly().coeff(&Mono::ONE))
            .collect())
    }

    /// The GKM condition along every edge `v -- v s_alpha` with both ends in
    /// `W^P`.
    pub fn gkm_condition(&self, a: &CohClass) -> bool {
        let g = &self.g;
        let rs = g.root_system();
        for (k, pt) in self.points.iter().enumerate() {
            for r in 0..rs.positive_roots().len() {
                let t = g.reflection(r);
                let y = self.p.min_rep(g.mul(pt.w, t));
                let j = self.index_of(y);
                if j <= k {
                    continue;
                }
                let wa = linear_form(rs, &g.act(pt.w, &rs.positive_roots()[r]));
                let d = a.at(k).sub(a.at(j));
                if d.div_linear(&wa).is_none() {
                    return false;
                }
            }
        }
        true
    }
}

/// Push-forward from `G/B` to `G/P`.
pub fn pushforward_from_full(full: &CohSpace, target: &CohSpace, a: &CohClass) -> Result<CohClass> {
    pushforward(full, target, a)
}

/// Push-forward along `G/P -> G/Q` for `P` contained in `Q`.
pub fn pushforward(source: &CohSpace, target: &CohSpace, a: &CohClass) -> Result<CohClass> {
    if !source.p.is_subset_of(&target.p) {
        return Err(Error::InvalidParabolic(
            "target parabolic does not contain the source".into(),
        ));
    }
    // 1/prod_{R_Q^+ \ R_P^+} v alpha = (-1)^{l(z)} prod_{R_P^+} v alpha / prod_{R_Q^+} u alpha, v = u z
    let g = &source.g;
    let mut out = Vec::with_capacity(target.n_points());
    let p_levi = source.p.levi_roots().len() as i32;
    for pu in &target.points {
        let mut num = GradedSeries::zero(None);
        for (kv, pv) in source.points.iter().enumerate() {
            if target.p.min_rep(pv.w) != pu.w {
                continue;
            }
            let x = a.at(kv);
            if x.is_zero() {
                continue;
            }
            let z = g.mul(g.inverse(pu.w), pv.w);
            let cap = x.cap().map(|c| c + p_levi);
            num = num.add(&GradedSeries::new(
                &x.poly().scale(&sign(g.length(z))) * &pv.levi_product,
                cap,
            ));
        }
        let rs = g.root_system();
        for &r in target.p.levi_roots() {
            let l = linear_form(rs, &g.act(pu.w, &rs.positive_roots()[r]));
            num = num
                .div_linear(&l)
                .ok_or_else(|| Error::NonIntegral(format!("push-forward at {}", g.name(pu.w))))?;
        }
        out.push(num);
    }
    Ok(CohClass::from_values(out))
}

/// Operators on the cohomology of the full flag manifold.
pub struct CohOps<'a> {
    space: &'a CohSpace,
}

impl<'a> CohOps<'a> {
    pub fn new(space: &'a CohSpace) -> Self {
        assert!(space.p.is_borel(), "operators act on G/B");
        CohOps { space }
    }

    fn simple_image(&self, w: WeylElement, i: usize) -> QPoly {
        let g = &self.space.g;
        linear_form(g.root_system(), &g.act(w, &g.root_system().simple_root(i)))
    }

    /// BGG operator `(a(w) - a(w s_i)) / w alpha_i`.
    pub fn bgg(&self, i: usize, a: &CohClass) -> CohClass {
        let g = &self.space.g;
        let mut out = vec![GradedSeries::zero(None); g.order()];
        for w in g.elements() {
            let ws = g.right_mul_simple(w, i);
            if ws < w {
                continue;
            }
            let d = a.at(w.index()).sub(a.at(ws.index()));
            let v = d
                .div_linear(&self.simple_image(w, i))
                .expect("divided difference of a class outside H_T(G/B)");
            out[ws.index()] = v.clone();
            out[w.index()] = v;
        }
        CohClass::from_values(out)
    }

    /// `(s_i a)(w) = a(w s_i)`.
    pub fn reflect(&self, i: usize, a: &CohClass) -> CohClass {
        let g = &self.space.g;
        CohClass::from_values(
            g.elements()
                .map(|w| a.at(g.right_mul_simple(w, i).index()).clone())
                .collect(),
        )
    }

    fn hbar_times(&self, a: &CohClass) -> CohClass {
        let h = hbar();
        a.map(|s| GradedSeries::new(s.poly() * &h, s.cap().map(|c| c + 1)))
    }

    /// `T_i = h partial_i - s_i`.
    pub fn dl(&self, i: usize, a: &CohClass) -> CohClass {
        self.hbar_times(&self.bgg(i, a)).sub(&self.reflect(i, a))
    }

    /// `T_i^vee = h partial_i + s_i`.
    pub fn dl_dual(&self, i: usize, a: &CohClass) -> CohClass {
        self.hbar_times(&self.bgg(i, a)).add(&self.reflect(i, a))
    }

    /// Applies `op_{i_1} ... op_{i_k}` (last letter first).
    pub fn apply_word(
        &self,
        word: &[u8],
        a: &CohClass,
        op: impl Fn(&Self, usize, &CohClass) -> CohClass,
    ) -> CohClass {
        word.iter()
            .rev()
            .fold(a.clone(), |acc, &i| op(self, i as usize, &acc))
    }

    /// `[X(w)]` from `[X(id)] = [e_id]` and `partial_i [X(w)] = [X(w s_i)]`.
    pub fn schubert_bgg(&self, w: WeylElement) -> CohClass {
        let g = &self.space.g;
        let word = g.word(w).to_vec();
        word.iter()
            .fold(self.space.point_class(WeylElement::ID), |acc, &i| {
                self.bgg(i as usize, &acc)
            })
    }
}

/// CSM and SM classes of Schubert cells in `G/B`.
pub struct Csm {
    space: CohSpace,
    csm: Vec<OnceLock<CohClass>>,
}

impl Csm {
    pub fn new(g: Arc<WeylGroup>) -> Self {
        let n = g.order();
        Csm {
            space: CohSpace::full(g),
            csm: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn of_type(label: &str) -> Result<Self> {
        let rs = RootSystem::from_cartan(label.parse()?);
        Ok(Self::new(Arc::new(WeylGroup::new(rs)?)))
    }

    pub fn space(&self) -> &CohSpace {
        &self.space
    }

    pub fn ops(&self) -> CohOps<'_> {
        CohOps::new(&self.space)
    }

    fn group(&self) -> &WeylGroup {
        &self.space.g
    }

    /// Homogenized `c_SM^h(X(w)°) = T_{w^{-1}}[e_id]`.
    pub fn csm(&self, w: WeylElement) -> &CohClass {
        self.csm[w.index()].get_or_init(|| {
            if w == WeylElement::ID {
                return self.space.point_class(w);
            }
            let g = self.group();
            let i = *g.word(w).last().unwrap() as usize;
            self.ops().dl(i, self.csm(g.right_mul_simple(w, i)))
        })
    }

    /// `c_SM^h(Y(w)°)`.
    pub fn csm_opposite(&self, w: WeylElement) -> CohClass {
        let g = self.group();
        self.space.w0_twist(self.csm(g.mul(g.longest(), w)))
    }

    /// Dual CSM class `T^vee_{v^{-1} w_0}[e_{w_0}]` of `Y(v)°`.
    pub fn dual_csm(&self, v: WeylElement) -> CohClass {
        let g = self.group();
        let w0 = g.longest();
        let u = g.mul(g.inverse(v), w0);
        self.ops()
            .apply_word(g.word(u), &self.space.point_class(w0), CohOps::dl_dual)
    }

    /// Non-homogenized `c_SM^T`, i.e. `h = 1`.
    pub fn csm_plain(&self, w: WeylElement, opposite: bool) -> CohClass {
        let c = if opposite {
            self.csm_opposite(w)
        } else {
            self.csm(w).clone()
        };
        c.specialize_hbar(&BigRational::one())
    }

    /// `s_SM = c_SM / c(TX)` truncated above degree `cap`.
    pub fn sm(&self, w: WeylElement, opposite: bool, cap: i32) -> CohClass {
        let c = self.csm_plain(w, opposite);
        let inv = self.total_chern_inverse(cap);
        c.with_cap(Some(cap)).mul(&inv)
    }

    fn total_chern_inverse(&self, cap: i32) -> CohClass {
        self.space
            .total_chern()
            .with_cap(Some(cap))
            .map(|s| s.inverse().expect("unit constant term"))
    }

    /// Expansion of the homogenized CSM class in Schubert classes:
    /// `c'_{u,w}(h, t)`.
    pub fn expansion(&self, w: WeylElement) -> Result<Vec<QPoly>> {
        Ok(self
            .space
            .expand(self.csm(w), false)?
            .into_iter()
            .map(|s| s.poly().clone())
            .collect())
    }

    /// `c'_{u,w}` from the motivic class: the degree `l(u)` part of the Chern
    /// character of `c_{u,w}(y, e^t)` with `y = -e^{-h}`.
    pub fn expansion_from_mc(&self, mc_coeffs: &[Laurent]) -> Vec<QPoly> {
        let g = self.group();
        let rs = g.root_system();
        g.elements()
            .map(|u| chern_character_part(rs, &mc_coeffs[u.index()], g.length(u) as u32))
            .collect()
    }

    /// Nonequivariant coefficients `(c_{u,w}(y) / (1+y)^{l(u)})` at `y = -1`.
    pub fn numbers_from_mc(&self, mc_coeffs: &[Laurent]) -> Result<Vec<BigInt>> {
        let g = self.group();
        g.elements()
            .map(|u| {
                let p = laurent::nonequivariant(&mc_coeffs[u.index()]);
                if p.is_zero() {
                    return Ok(BigInt::zero());
                }
                let d = YPoly::from_i64(&[1, 1]).pow(g.length(u) as u32);
                p.div_exact(&d).map(|q| q.eval(-1)).ok_or_else(|| {
                    Error::NonIntegral(format!("(1+y)-divisibility at {}", g.name(u)))
                })
            })
            .collect()
    }

    /// `<s_SM(Y(v)°), c_SM(X(w)°)> = delta_{v,w}`, equivariantly up to the
    /// dimension cap.
    pub fn check_poincare(&self) -> Result<()> {
        let g = self.group();
        let dim = self.space.dim() as i32;
        for v in g.elements() {
            let s = self.sm(v, true, dim);
            for w in g.elements() {
                let p = self
                    .space
                    .pair(&s, &self.csm_plain(w, false).with_cap(Some(dim)))?;
                let want = GradedSeries::new(
                    QPoly::from_terms(if v == w {
                        vec![(Mono::ONE, BigRational::one())]
                    } else {
                        vec![]
                    }),
                    Some(0),
                );
                if !p.agrees(&want) {
                    return Err(Error::Check(format!(
                        "SM/CSM duality at ({}, {})",
                        g.name(v),
                        g.name(w)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `e_{u,v}^w` in `s_SM(Y(u)°) s_SM(Y(v)°) = sum_w e_{u,v}^w s_SM(Y(w)°)`.
    pub fn sm_structure_constants(&self, u: WeylElement, v: WeylElement) -> Result<Vec<BigInt>> {
        let dim = self.space.dim() as i32;
        let prod = self.sm(u, true, dim).mul(&self.sm(v, true, dim));
        self.group()
            .elements()
            .map(|w| {
                let x = self
                    .space
                    .integrate_number(&prod.mul(&self.csm_plain(w, false).with_cap(Some(dim))))?;
                integral(x)
            })
            .collect()
    }

    /// `c_SM(Y(u)° cap X(v)°) = c(TX) s_SM(Y(u)°) s_SM(X(v)°)`, with
    /// nonequivariant coefficients in the opposite Schubert basis.
    pub fn richardson(&self, u: WeylElement, v: WeylElement) -> Result<Vec<BigInt>> {
        let dim = self.space.dim() as i32;
        let c = self
            .space
            .total_chern()
            .with_cap(Some(dim))
            .mul(&self.sm(u, true, dim))
            .mul(&self.sm(v, false, dim));
        // coefficient of [Y(w)] is the pairing with [X(w)]
        self.group()
            .elements()
            .map(|w| {
                integral(
                    self.space
                        .integrate_number(&c.mul(self.space.schubert(w)))?,
                )
            })
            .collect()
    }
}

fn integral(x: BigRational) -> Result<BigInt> {
    if x.is_integer() {
        Ok(x.to_integer())
    } else {
        Err(Error::NonIntegral(x.to_string()))
    }
}

/// Degree-`d` part of `ch(p)` with `e^lambda -> exp(-lambda)` and `y -> -exp(-h)`.
pub fn chern_character_part(rs: &RootSystem, p: &Laurent, d: u32) -> QPoly {
    let mut fact = BigInt::one();
    for k in 2..=d {
        fact *= k;
    }
    let inv = BigRational::new(BigInt::one(), fact);
    let mut acc = QPoly::zero();
    for (m, c) in p.terms() {
        let k = m.y();
        let l = &(-linear_form(rs, &m.weight())) - &hbar().scale(&q(i64::from(k)));
        let s = if k % 2 == 0 { q(1) } else { q(-1) };
        let c = BigRational::from_integer(c.clone()) * s * &inv;
        acc = &acc + &l.pow(d).scale(&c);
    }
    acc
}

/// Chern character of a Laurent polynomial truncated above degree `cap`,
/// keeping `y` as a variable.
pub fn chern_character(rs: &RootSystem, p: &Laurent, cap: i32) -> GradedSeries {
    let mut by_weight: std::collections::BTreeMap<[i32; MAX_RANK], Vec<(Mono, BigRational)>> =
        Default::default();
    for (m, c) in p.terms() {
        by_weight.entry(m.weight().0).or_default().push((
            Mono::lane(LANE_Y, m.y()),
            BigRational::from_integer(c.clone()),
        ));
    }
    let exp = crate::algebra::series::UniSeries::exp(&QPoly::one(), cap.max(0) as usize + 1);
    let mut terms = Vec::new();
    for (w, ys) in by_weight {
        let l = -linear_form(rs, &Weight(w));
        let e = exp.compose(&l, Some(cap));
        terms.extend((&e * &QPoly::from_terms(ys)).into_terms());
    }
    GradedSeries::new(QPoly::from_terms(terms), Some(cap))
}

/// `H(kappa) = sum_w c_w x^{l(w)}` for coefficients indexed like the points
/// of the space.
pub fn h_polynomial(space: &CohSpace, coeffs: &[BigRational]) -> Result<YPoly> {
    let g = space.group();
    let mut c = vec![BigInt::zero(); space.dim() + 1];
    for (k, x) in coeffs.iter().enumerate() {
        c[g.length(space.point(k))] += integral(x.clone())?;
    }
    Ok(YPoly::from_coeffs(c))
}

/// Nonequivariant `c_SM(X(wW_P)°)` on `G/P` as Schubert coefficients, through
/// the push-forward of `c_SM(X(w)°)`.
pub fn csm_partial(csm: &Csm, target: &CohSpace, w: WeylElement) -> Result<CohClass> {
    pushforward(
        csm.space(),
        target,
        &csm.csm_plain(target.parabolic().min_rep(w), false),
    )
}

/// `c_SM` of the Schubert variety `X(wW_P)`: the sum over the cells it contains.
pub fn csm_schubert_variety(
    csm: &Csm,
    target: &CohSpace,
    w: WeylElement,
) -> Result<Vec<BigRational>> {
    let g = target.group();
    let mut acc = CohClass::zero(target.n_points());
    for k in 0..target.n_points() {
        let v = target.point(k);
        if g.bruhat_leq(v, w) {
            acc = acc.add(&csm_partial(csm, target, v)?);
        }
    }
    target.expand_numbers(&acc, false)
}

/// `c(T(G/P))` as Schubert coefficients.
pub fn total_chern_numbers(target: &CohSpace) -> Result<Vec<BigRational>> {
    target.expand_numbers(&target.total_chern(), false)
}

/// SM structure constants on `G/P`, for minimal representatives `u`, `v`.
pub fn sm_structure_constants_partial(
    csm: &Csm,
    target: &CohSpace,
    u: WeylElement,
    v: WeylElement,
) -> Result<Vec<BigInt>> {
    let dim = target.dim() as i32;
    let inv = target
        .total_chern()
        .with_cap(Some(dim))
        .map(|s| s.inverse().expect("unit constant term"));
    let g = target.group();
    let opp = |x: WeylElement| -> Result<CohClass> {
        let y = target.parabolic().min_rep(g.mul(g.longest(), x));
        let c = csm_partial(csm, target, y)?;
        Ok(target.w0_twist(&c))
    };
    let su = opp(u)?.with_cap(Some(dim)).mul(&inv);
    let sv = opp(v)?.with_cap(Some(dim)).mul(&inv);
    let prod = su.mul(&sv);
    (0..target.n_points())
        .map(|k| {
            let c = csm_partial(csm, target, target.point(k))?.with_cap(Some(dim));
            integral(target.integrate_number(&prod.mul(&c))?)
        })
        .collect()
}
