//! Localized torus-equivariant K-theory of `G/B` in the fixed-point model.
//!
//! A class is stored by its restrictions `a|_w` to the torus fixed points.
//! The fixed-point class `iota_w` restricts to `prod_{alpha>0}(1 - e^{w alpha})`
//! at `w`, so the coefficient of `iota_w` in `a` is `a|_w` divided by that
//! product. Restrictions of honest classes are Laurent polynomials and every
//! operator below divides exactly.

use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::laurent::{self, e, int, one_minus_e, one_plus_ye, y, Laurent};
use crate::algebra::{FactoredFraction, Mono};
use crate::error::{Error, Result};
use crate::lie::{Parabolic, RootSystem, Weight, WeylElement, WeylGroup};

/// A class given by its fixed-point restrictions, indexed like the points of
/// the ambient space (all of `W` for `G/B`, `W^P` for `G/P`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    vals: Vec<Laurent>,
}

impl KClass {
    pub fn from_restrictions(vals: Vec<Laurent>) -> Self {
        KClass { vals }
    }

    pub fn zero(n: usize) -> Self {
        KClass {
            vals: vec![Laurent::zero(); n],
        }
    }

    pub fn restrictions(&self) -> &[Laurent] {
        &self.vals
    }

    pub fn at(&self, w: WeylElement) -> &Laurent {
        &self.vals[w.index()]
    }

    pub fn len(&self) -> usize {
        self.vals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vals.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.vals.iter().all(Laurent::is_zero)
    }

    pub fn add(&self, o: &KClass) -> KClass {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &KClass) -> KClass {
        self.zip(o, |a, b| a - b)
    }

    pub fn neg(&self) -> KClass {
        self.map(|p| -p)
    }

    /// Multiplication by a scalar in the coefficient ring.
    pub fn scale(&self, c: &Laurent) -> KClass {
        self.map(|p| p * c)
    }

    /// Pointwise (tensor) product.
    pub fn mul(&self, o: &KClass) -> KClass {
        self.zip(o, |a, b| a * b)
    }

    pub fn map(&self, f: impl Fn(&Laurent) -> Laurent) -> KClass {
        KClass {
            vals: self.vals.iter().map(f).collect(),
        }
    }

    fn zip(&self, o: &KClass, f: impl Fn(&Laurent, &Laurent) -> Laurent) -> KClass {
        assert_eq!(self.len(), o.len(), "classes on different spaces");
        KClass {
            vals: self
                .vals
                .iter()
                .zip(&o.vals)
                .map(|(a, b)| f(a, b))
                .collect(),
        }
    }

    /// Substitutes an integer for `y` in every restriction.
    pub fn y_specialize(&self, v: i64) -> KClass {
        self.map(|p| laurent::y_specialize(p, v))
    }

    /// Coefficient of `y^k` in every restriction.
    pub fn y_coeff(&self, k: i16) -> KClass {
        self.map(|p| laurent::y_coeff(p, k))
    }

    /// Largest power of `y` occurring.
    pub fn y_degree(&self) -> Option<i16> {
        self.vals
            .iter()
            .filter_map(|p| laurent::y_degree(p).map(|r| r.1))
            .max()
    }
}

/// Bases of `K_T(G/B)` used for expansions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Structure sheaves of Schubert varieties `O_w`.
    Structure,
    /// Structure sheaves of opposite Schubert varieties `O^w`.
    OppositeStructure,
    /// Ideal sheaves of the boundary `I_w`.
    Ideal,
    /// Opposite ideal sheaves `I^w`.
    OppositeIdeal,
    /// Fixed-point classes `iota_w`.
    FixedPoint,
}

impl Basis {
    pub fn label(&self) -> &'static str {
        match self {
            Basis::Structure => "O",
            Basis::OppositeStructure => "O^op",
            Basis::Ideal => "I",
            Basis::OppositeIdeal => "I^op",
            Basis::FixedPoint => "iota",
        }
    }

    pub fn parse(s: &str) -> Result<Basis> {
        Ok(match s {
            "O" | "o" | "structure" => Basis::Structure,
            "O^op" | "Oop" | "opposite" => Basis::OppositeStructure,
            "I" | "i" | "ideal" => Basis::Ideal,
            "I^op" | "Iop" => Basis::OppositeIdeal,
            "iota" | "fixed" => Basis::FixedPoint,
            _ => return Err(Error::Parse(format!("unknown basis `{s}`"))),
        })
    }

    fn is_opposite(&self) -> bool {
        matches!(self, Basis::OppositeStructure | Basis::OppositeIdeal)
    }
}

struct PointData {
    /// `w alpha_i` for each simple root.
    simple_images: Vec<Mono>,
    /// `w alpha` for each positive root, in the root system's order.
    root_images: Vec<Weight>,
    /// `w alpha` for positive `alpha` with `w alpha < 0`.
    inversions: Vec<Mono>,
    /// `rho - w rho`.
    rho_shift: Weight,
}

/// Equivariant K-theory of the full flag manifold of a root system.
pub struct KTheory {
    g: Arc<WeylGroup>,
    points: Vec<PointData>,
    structure: Vec<OnceLock<KClass>>,
    ideal: Vec<OnceLock<KClass>>,
}

impl std::fmt::Debug for KTheory {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "KTheory({:?})", self.g)
    }
}

impl KTheory {
    pub fn new(g: Arc<WeylGroup>) -> Self {
        let rs = g.root_system();
        let rho = rs.rho();
        let points = g
            .elements()
            .map(|w| {
                let root_images: Vec<Weight> =
                    rs.positive_roots().iter().map(|a| g.act(w, a)).collect();
                PointData {
                    simple_images: (0..g.rank())
                        .map(|i| Mono::from_weight(&g.act(w, &rs.simple_root(i))))
                        .collect(),
                    inversions: root_images
                        .iter()
                        .filter(|b| !rs.is_positive_root(b))
                        .map(Mono::from_weight)
                        .collect(),
                    root_images,
                    rho_shift: rho - g.act(w, &rho),
                }
            })
            .collect();
        let n = g.order();
        KTheory {
            points,
            structure: (0..n).map(|_| OnceLock::new()).collect(),
            ideal: (0..n).map(|_| OnceLock::new()).collect(),
            g,
        }
    }

    /// Convenience constructor from a type label such as `A2`.
    pub fn of_type(label: &str) -> Result<Self> {
        let rs = RootSystem::from_cartan(label.parse()?);
        Ok(Self::new(Arc::new(WeylGroup::new(rs)?)))
    }

    pub fn group(&self) -> &WeylGroup {
        &self.g
    }

    pub fn group_arc(&self) -> Arc<WeylGroup> {
        self.g.clone()
    }

    pub fn root_system(&self) -> &RootSystem {
        self.g.root_system()
    }

    pub fn dim(&self) -> usize {
        self.root_system().positive_roots().len()
    }

    pub fn n_points(&self) -> usize {
        self.g.order()
    }

    /// Positive roots sent to negative roots by `w`, as their images.
    pub fn inversion_images(&self, w: WeylElement) -> &[Mono] {
        &self.points[w.index()].inversions
    }

    /// `w alpha` for positive `alpha` with `w alpha > 0`: the conormal
    /// weights of `X(w)` at `e_w`.
    pub fn normal_images(&self, w: WeylElement) -> Vec<Mono> {
        let rs = self.root_system();
        self.points[w.index()]
            .root_images
            .iter()
            .filter(|b| rs.is_positive_root(b))
            .map(Mono::from_weight)
            .collect()
    }

    /// `w alpha_i`.
    pub fn simple_image(&self, w: WeylElement, i: usize) -> Mono {
        self.points[w.index()].simple_images[i]
    }

    /// `lambda_{-1}` of the cotangent space at `e_w`: `prod_{alpha>0}(1 - e^{w alpha})`.
    pub fn cotangent_euler(&self, w: WeylElement) -> Laurent {
        self.points[w.index()]
            .root_images
            .iter()
            .fold(int(1), |acc, b| &acc * &one_minus_e(b))
    }

    /// `lambda_y(T^*X)` restricted at `e_w`: `prod_{alpha>0}(1 + y e^{w alpha})`.
    pub fn lambda_y_cotangent_at(&self, w: WeylElement) -> Laurent {
        self.points[w.index()]
            .root_images
            .iter()
            .fold(int(1), |acc, b| &acc * &one_plus_ye(b))
    }

    /// `lambda_y(T^*X)` as a class.
    pub fn lambda_y_cotangent(&self) -> KClass {
        KClass::from_restrictions(
            self.g
                .elements()
                .map(|w| self.lambda_y_cotangent_at(w))
                .collect(),
        )
    }

    /// The constant class with value `c`.
    pub fn constant(&self, c: &Laurent) -> KClass {
        KClass::from_restrictions(vec![c.clone(); self.n_points()])
    }

    /// Fixed-point class `iota_w`.
    pub fn fixed_point_class(&self, w: WeylElement) -> KClass {
        let mut k = KClass::zero(self.n_points());
        k.vals[w.index()] = self.cotangent_euler(w);
        k
    }

    /// Line bundle `L_lambda`, restricting to `e^{w lambda}` at `w`.
    pub fn line_bundle(&self, lambda: &Weight) -> KClass {
        KClass::from_restrictions(
            self.g
                .elements()
                .map(|w| e(&self.g.act(w, lambda)))
                .collect(),
        )
    }

    /// Multiplication by `L_lambda`.
    pub fn line_bundle_mul(&self, lambda: &Weight, a: &KClass) -> KClass {
        KClass::from_restrictions(
            self.g
                .elements()
                .map(|w| a.at(w).shift(Mono::from_weight(&self.g.act(w, lambda))))
                .collect(),
        )
    }

    /// Demazure operator `partial_i`.
    pub fn demazure(&self, i: usize, a: &KClass) -> KClass {
        let mut out = vec![Laurent::zero(); self.n_points()];
        for w in self.g.elements() {
            let ws = self.g.right_mul_simple(w, i);
            if ws < w {
                continue;
            }
            let beta = self.simple_image(w, i);
            let num = a.at(w) - &a.at(ws).shift(beta);
            let v = num
                .div_one_minus(beta)
                .expect("Demazure operator applied to a class outside K_T(G/B)");
            out[ws.index()] = v.clone();
            out[w.index()] = v;
        }
        KClass::from_restrictions(out)
    }

    /// `(1 + y L_{alpha_i}) a`, the factor `lambda_y(T^*_{p_i})`.
    fn lambda_y_relative(&self, i: usize, a: &KClass) -> KClass {
        KClass::from_restrictions(
            self.g
                .elements()
                .map(|w| {
                    let beta = self.simple_image(w, i);
                    a.at(w) + &(a.at(w).shift(beta.with_lane(crate::algebra::LANE_Y, 1)))
                })
                .collect(),
        )
    }

    /// Demazure-Lusztig operator `T_i = lambda_y(T^*_{p_i}) partial_i - id`.
    pub fn dl_operator(&self, i: usize, a: &KClass) -> KClass {
        self.lambda_y_relative(i, &self.demazure(i, a)).sub(a)
    }

    /// Dual operator `T_i^vee = partial_i lambda_y(T^*_{p_i}) - id`.
    pub fn dl_dual(&self, i: usize, a: &KClass) -> KClass {
        self.demazure(i, &self.lambda_y_relative(i, a)).sub(a)
    }

    /// `L_i = T_i^vee + (1 + y) id`.
    pub fn l_operator(&self, i: usize, a: &KClass) -> KClass {
        self.dl_dual(i, a).add(&a.scale(&(&int(1) + &y())))
    }

    /// `(T_i^vee)^{-1} = -y^{-1} L_i`.
    pub fn dl_dual_inverse(&self, i: usize, a: &KClass) -> KClass {
        self.l_operator(i, a).scale(&-laurent::y_pow(-1))
    }

    /// `T_i^{-1} = -y^{-1} T_i - (1 + y^{-1}) id`.
    pub fn dl_inverse(&self, i: usize, a: &KClass) -> KClass {
        let yi = laurent::y_pow(-1);
        self.dl_operator(i, a)
            .scale(&-yi.clone())
            .sub(&a.scale(&(&int(1) + &yi)))
    }

    /// Applies `op_{i_1} op_{i_2} ... op_{i_k}` for the word `i_1 ... i_k`, so the
    /// last letter acts first.
    pub fn apply_word(
        &self,
        word: &[u8],
        a: &KClass,
        op: impl Fn(&Self, usize, &KClass) -> KClass,
    ) -> KClass {
        word.iter()
            .rev()
            .fold(a.clone(), |acc, &i| op(self, i as usize, &acc))
    }

    /// The `w_0`-twist `(tau a)|_u = w_0 (a|_{w_0 u})`, exchanging Schubert and
    /// opposite Schubert classes.
    pub fn w0_twist(&self, a: &KClass) -> KClass {
        let w0 = self.g.longest();
        KClass::from_restrictions(
            self.g
                .elements()
                .map(|u| laurent::weyl_act(&self.g, w0, a.at(self.g.mul(w0, u))))
                .collect(),
        )
    }

    /// The duality involution on restrictions.
    pub fn star(&self, a: &KClass) -> KClass {
        a.map(laurent::star)
    }

    /// `Psi(a) = C_rho (x) L_rho (x) star(a)`.
    pub fn psi(&self, a: &KClass) -> KClass {
        let rho = self.root_system().rho();
        KClass::from_restrictions(
            self.g
                .elements()
                .map(|w| {
                    laurent::star(a.at(w)).shift(Mono::from_weight(&(rho + self.g.act(w, &rho))))
                })
                .collect(),
        )
    }

    /// Structure sheaf `O_w` of the Schubert variety `X(w)`.
    pub fn structure_sheaf(&self, w: WeylElement) -> &KClass {
        self.structure[w.index()].get_or_init(|| {
            if w == WeylElement::ID {
                return self.fixed_point_class(w);
            }
            let i = *self.g.word(w).last().unwrap() as usize;
            let prev = self.g.right_mul_simple(w, i);
            self.demazure(i, self.structure_sheaf(prev))
        })
    }

    /// Ideal sheaf `I_w = O_{X(w)}(-boundary)`, via `(partial_i - id) I_w = I_{w s_i}`.
    pub fn ideal_sheaf(&self, w: WeylElement) -> &KClass {
        self.ideal[w.index()].get_or_init(|| {
            if w == WeylElement::ID {
                return self.fixed_point_class(w);
            }
            let i = *self.g.word(w).last().unwrap() as usize;
            let prev = self.ideal_sheaf(self.g.right_mul_simple(w, i));
            self.demazure(i, prev).sub(prev)
        })
    }

    /// Opposite structure sheaf `O^w`.
    pub fn opposite_structure_sheaf(&self, w: WeylElement) -> KClass {
        self.w0_twist(self.structure_sheaf(self.g.mul(self.g.longest(), w)))
    }

    /// Opposite ideal sheaf `I^w`.
    pub fn opposite_ideal_sheaf(&self, w: WeylElement) -> KClass {
        self.w0_twist(self.ideal_sheaf(self.g.mul(self.g.longest(), w)))
    }

    pub fn basis_class(&self, basis: Basis, w: WeylElement) -> KClass {
        match basis {
            Basis::Structure => self.structure_sheaf(w).clone(),
            Basis::Ideal => self.ideal_sheaf(w).clone(),
            Basis::OppositeStructure => self.opposite_structure_sheaf(w),
            Basis::OppositeIdeal => self.opposite_ideal_sheaf(w),
            Basis::FixedPoint => self.fixed_point_class(w),
        }
    }

    /// Euler characteristic `chi(X; a)` by localization.
    pub fn integrate(&self, a: &KClass) -> FactoredFraction {
        // 1/prod_{alpha>0}(1 - e^{w alpha}) = (-1)^{l(w)} e^{rho - w rho} / prod_{alpha>0}(1 - e^alpha)
        let mut terms = Vec::new();
        for w in self.g.elements() {
            let v = a.at(w);
            if v.is_zero() {
                continue;
            }
            let shifted = v.shift(Mono::from_weight(&self.points[w.index()].rho_shift));
            let sign = if self.g.length(w) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            terms.extend(shifted.scale(&sign).into_terms());
        }
        let mut num = Laurent::from_terms(terms);
        let mut frac = None;
        for beta in self.root_system().positive_roots() {
            let m = Mono::from_weight(beta);
            match &mut frac {
                None => match num.div_one_minus(m) {
                    Some(q) => num = q,
                    None => frac = Some(FactoredFraction::over_one_minus(num.clone(), m)),
                },
                Some(f) => *f = f.clone().div_one_minus(m),
            }
        }
        match frac {
            None => FactoredFraction::from_poly(num),
            Some(f) => f.reduce(),
        }
    }

    /// `<a, b> = chi(X; a (x) b)`.
    pub fn pair(&self, a: &KClass, b: &KClass) -> FactoredFraction {
        self.integrate(&a.mul(b))
    }

    /// Pairing that must be a Laurent polynomial.
    pub fn pair_poly(&self, a: &KClass, b: &KClass) -> Result<Laurent> {
        self.pair(a, b)
            .to_poly()
            .ok_or_else(|| Error::NonIntegral("pairing".into()))
    }

    /// Coefficients in the fixed-point basis.
    pub fn fixed_point_coeffs(&self, a: &KClass) -> Vec<FactoredFraction> {
        self.g
            .elements()
            .map(|w| {
                let mut f = FactoredFraction::from_poly(a.at(w).clone());
                for b in &self.points[w.index()].root_images {
                    f = f.div_one_minus(Mono::from_weight(b));
                }
                f.reduce()
            })
            .collect()
    }

    /// Class with the given fixed-point coefficients.
    pub fn from_fixed_point_coeffs(&self, c: &[FactoredFraction]) -> Result<KClass> {
        let vals = self
            .g
            .elements()
            .map(|w| {
                c[w.index()]
                    .mul_poly(&self.cotangent_euler(w))
                    .to_poly()
                    .ok_or_else(|| Error::NonIntegral(self.g.name(w)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(KClass::from_restrictions(vals))
    }

    /// Expansion in a Schubert-type basis by triangular elimination.
    ///
    /// The coefficient at `u` is read off the residual restriction at `u`
    /// (Bruhat-maximal first for `O`/`I`, minimal first for the opposite bases).
    pub fn expand(&self, a: &KClass, basis: Basis) -> Result<Vec<Laurent>> {
        if basis == Basis::FixedPoint {
            return self
                .fixed_point_coeffs(a)
                .into_iter()
                .enumerate()
                .map(|(k, f)| {
                    f.to_poly()
                        .ok_or_else(|| Error::NonIntegral(self.g.name(WeylElement(k as u32))))
                })
                .collect();
        }
        let n = self.n_points();
        let mut res = a.vals.clone();
        let mut coeffs = vec![Laurent::zero(); n];
        let order: Vec<WeylElement> = if basis.is_opposite() {
            self.g.elements().collect()
        } else {
            self.g.elements().rev().collect()
        };
        for u in order {
            let r = &res[u.index()];
            if r.is_zero() {
                continue;
            }
            // pivot: restriction of the basis class at its own fixed point
            let pivot_roots: Vec<Mono> = if basis.is_opposite() {
                self.inversion_images(u).to_vec()
            } else {
                self.normal_images(u)
            };
            let mut c = r.clone();
            for m in &pivot_roots {
                c = c
                    .div_one_minus(*m)
                    .ok_or_else(|| Error::NonIntegral(self.g.name(u)))?;
            }
            let b = self.basis_class(basis, u);
            for x in self.g.elements() {
                let bx = b.at(x);
                if !bx.is_zero() {
                    res[x.index()] = &res[x.index()] - &(&c * bx);
                }
            }
            coeffs[u.index()] = c;
        }
        if res.iter().any(|r| !r.is_zero()) {
            return Err(Error::Structural("residual did not vanish".into()));
        }
        Ok(coeffs)
    }

    /// Inverse of [`KTheory::expand`].
    pub fn from_expansion(&self, coeffs: &[Laurent], basis: Basis) -> KClass {
        let mut acc = KClass::zero(self.n_points());
        for u in self.g.elements() {
            let c = &coeffs[u.index()];
            if !c.is_zero() {
                acc = acc.add(&self.basis_class(basis, u).scale(c));
            }
        }
        acc
    }

    /// The Schubert expansion coefficient of `O_u` can also be recovered from
    /// the duality `<O_u, I^v> = delta_{u,v}`.
    pub fn structure_coeff_by_pairing(&self, a: &KClass, u: WeylElement) -> Result<Laurent> {
        self.pair_poly(a, &self.opposite_ideal_sheaf(u))
    }
}

/// Restriction of `K_T(G/B)` classes to `G/P` and push-forward along `G/B -> G/P`.
pub struct PartialFlag<'a> {
    k: &'a KTheory,
    p: Parabolic,
    structure: Vec<OnceLock<KClass>>,
}

impl<'a> PartialFlag<'a> {
    pub fn new(k: &'a KTheory, p: Parabolic) -> Self {
        let n = p.len();
        PartialFlag {
            k,
            p,
            structure: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn parabolic(&self) -> &Parabolic {
        &self.p
    }

    pub fn ktheory(&self) -> &KTheory {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.p.dimension(self.k.group())
    }

    /// Push-forward of a class on `G/B`.
    pub fn pushforward(&self, a: &KClass) -> Result<KClass> {
        let g = self.k.group();
        let rs = g.root_system();
        let levi: Vec<Weight> = self
            .p
            .levi_roots()
            .iter()
            .map(|&k| rs.positive_roots()[k])
            .collect();
        let mut out = Vec::with_capacity(self.p.len());
        for &v in self.p.reps() {
            let mut acc = FactoredFraction::zero();
            for &z in self.p.levi_elements() {
                let x = g.mul(v, z);
                let mut f = FactoredFraction::from_poly(a.at(x).clone());
                for b in &levi {
                    f = f.div_one_minus(Mono::from_weight(&g.act(x, b)));
                }
                acc = acc.add(&f);
            }
            out.push(acc.to_poly().ok_or_else(|| Error::NonIntegral(g.name(v)))?);
        }
        Ok(KClass::from_restrictions(out))
    }

    /// Push-forward from `G/P` to `G/Q` for `P` contained in `Q`.
    pub fn pushforward_to(&self, a: &KClass, q: &PartialFlag<'_>) -> Result<KClass> {
        if !self.p.is_subset_of(&q.p) {
            return Err(Error::InvalidParabolic(
                "target parabolic does not contain the source".into(),
            ));
        }
        let g = self.k.group();
        let rs = g.root_system();
        let rel: Vec<Weight> =
            q.p.levi_roots()
                .iter()
                .filter(|k| !self.p.levi_roots().contains(k))
                .map(|&k| rs.positive_roots()[k])
                .collect();
        let mut out = Vec::with_capacity(q.p.len());
        for &u in q.p.reps() {
            let mut acc = FactoredFraction::zero();
            for (k, &v) in self.p.reps().iter().enumerate() {
                if q.p.min_rep(v) != u {
                    continue;
                }
                let mut f = FactoredFraction::from_poly(a.restrictions()[k].clone());
                for b in &rel {
                    f = f.div_one_minus(Mono::from_weight(&g.act(v, b)));
                }
                acc = acc.add(&f);
            }
            out.push(acc.to_poly().ok_or_else(|| Error::NonIntegral(g.name(u)))?);
        }
        Ok(KClass::from_restrictions(out))
    }

    /// Fixed-point class of the point `vW_P`.
    pub fn fixed_point_class(&self, v: WeylElement) -> KClass {
        let g = self.k.group();
        let rs = g.root_system();
        let v = self.p.min_rep(v);
        let mut val = int(1);
        for k in self.p.nonlevi_roots(g) {
            val = &val * &one_minus_e(&g.act(v, &rs.positive_roots()[k]));
        }
        let mut c = KClass::zero(self.p.len());
        c.vals[self.p.coset_index(v)] = val;
        c
    }

    /// `O_{wW_P} = pi_* O_w` for a minimal representative `w`.
    pub fn structure_sheaf(&self, w: WeylElement) -> Result<&KClass> {
        let k = self.p.coset_index(w);
        if let Some(c) = self.structure[k].get() {
            return Ok(c);
        }
        let c = self.pushforward(self.k.structure_sheaf(self.p.reps()[k]))?;
        Ok(self.structure[k].get_or_init(|| c))
    }

    /// Expansion in the classes `O_{uW_P}`, `u` in `W^P`.
    pub fn expand_structure(&self, a: &KClass) -> Result<Vec<Laurent>> {
        let g = self.k.group();
        let mut res = a.vals.clone();
        let mut coeffs = vec![Laurent::zero(); self.p.len()];
        for (k, &u) in self.p.reps().iter().enumerate().rev() {
            if res[k].is_zero() {
                continue;
            }
            let b = self.structure_sheaf(u)?;
            let c = res[k]
                .div_exact(&b.vals[k])
                .ok_or_else(|| Error::NonIntegral(g.name(u)))?;
            for x in 0..self.p.len() {
                if !b.vals[x].is_zero() {
                    res[x] = &res[x] - &(&c * &b.vals[x]);
                }
            }
            coeffs[k] = c;
        }
        if res.iter().any(|r| !r.is_zero()) {
            return Err(Error::Structural("residual did not vanish".into()));
        }
        Ok(coeffs)
    }

    /// Euler characteristic on `G/P`.
    pub fn integrate(&self, a: &KClass) -> FactoredFraction {
        let g = self.k.group();
        let rs = g.root_system();
        let nonlevi = self.p.nonlevi_roots(g);
        let mut acc = FactoredFraction::zero();
        for (k, &v) in self.p.reps().iter().enumerate() {
            let mut f = FactoredFraction::from_poly(a.vals[k].clone());
            for &r in &nonlevi {
                f = f.div_one_minus(Mono::from_weight(&g.act(v, &rs.positive_roots()[r])));
            }
            acc = acc.add(&f);
        }
        acc.reduce()
    }
}

/// Nonequivariant specialisation of a coefficient vector.
pub fn nonequivariant_coeffs(c: &[Laurent]) -> Vec<crate::algebra::YPoly> {
    c.iter().map(laurent::nonequivariant).collect()
}

/// Whether an integer coefficient vector is the zero vector.
pub fn all_zero(c: &[Laurent]) -> bool {
    c.iter().all(|p| p.terms().iter().all(|(_, x)| x.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kt(s: &str) -> KTheory {
        KTheory::of_type(s).unwrap()
    }

    #[test]
    fn structure_sheaves_integrate_to_one() {
        for s in ["A1", "A2", "B2", "G2"] {
            let k = kt(s);
            for w in k.group().elements() {
                assert_eq!(
                    k.integrate(k.structure_sheaf(w)).to_poly().unwrap(),
                    int(1),
                    "{s}"
                );
                assert_eq!(
                    k.integrate(&k.fixed_point_class(w)).to_poly().unwrap(),
                    int(1)
                );
            }
            let w0 = k.group().longest();
            assert!(k
                .structure_sheaf(w0)
                .restrictions()
                .iter()
                .all(|p| *p == int(1)));
        }
    }

    #[test]
    fn fixed_point_pairing() {
        let k = kt("A2");
        for u in k.group().elements() {
            for v in k.group().elements() {
                let p = k
                    .pair(&k.fixed_point_class(u), &k.fixed_point_class(v))
                    .to_poly()
                    .unwrap();
                if u == v {
                    assert_eq!(p, k.cotangent_euler(u));
                } else {
                    assert!(p.is_zero());
                }
            }
        }
    }

    #[test]
    fn demazure_recursion_and_idempotence() {
        let k = kt("A2");
        let g = k.group();
        for w in g.elements() {
            for i in 0..2 {
                let d = k.demazure(i, k.structure_sheaf(w));
                let ws = g.right_mul_simple(w, i);
                let expect = if ws > w {
                    k.structure_sheaf(ws)
                } else {
                    k.structure_sheaf(w)
                };
                assert_eq!(&d, expect);
                assert_eq!(k.demazure(i, &d), d);
            }
        }
    }

    #[test]
    fn dual_bases_and_alternating_sums() {
        let k = kt("A2");
        let g = k.group();
        for u in g.elements() {
            for v in g.elements() {
                let p = k
                    .pair_poly(k.structure_sheaf(u), &k.opposite_ideal_sheaf(v))
                    .unwrap();
                assert_eq!(p, if u == v { int(1) } else { int(0) });
            }
            let mut alt = KClass::zero(k.n_points());
            for v in g.lower_interval(u) {
                let sign = if (g.length(u) - g.length(v)) % 2 == 0 {
                    int(1)
                } else {
                    int(-1)
                };
                alt = alt.add(&k.structure_sheaf(v).scale(&sign));
            }
            assert_eq!(&alt, k.ideal_sheaf(u));
            let mut sum = KClass::zero(k.n_points());
            for v in g.lower_interval(u) {
                sum = sum.add(k.ideal_sheaf(v));
            }
            assert_eq!(&sum, k.structure_sheaf(u));
        }
        assert_eq!(
            k.pair_poly(
                k.structure_sheaf(WeylElement::ID),
                &k.opposite_ideal_sheaf(WeylElement::ID)
            )
            .unwrap(),
            int(1)
        );
    }

    #[test]
    fn expansion_round_trip() {
        let k = kt("B2");
        let g = k.group();
        let a = k
            .structure_sheaf(g.parse("s1s2").unwrap())
            .add(&k.ideal_sheaf(g.parse("s2").unwrap()).scale(&y()));
        for basis in [
            Basis::Structure,
            Basis::Ideal,
            Basis::OppositeStructure,
            Basis::OppositeIdeal,
        ] {
            let c = k
                .expand(&a, basis)
                .unwrap_or_else(|e| panic!("{basis:?} {e}"));
            assert_eq!(k.from_expansion(&c, basis), a, "{basis:?}");
        }
        let c = k
            .expand(k.structure_sheaf(g.longest()), Basis::Structure)
            .unwrap();
        assert_eq!(c[g.longest().index()], int(1));
        assert!(c[..g.order() - 1].iter().all(Laurent::is_zero));
    }

    #[test]
    fn line_bundle_action() {
        let k = kt("A1");
        let g = k.group();
        let a = k.root_system().simple_root(0);
        let s = g.simple(0);
        let c = k.line_bundle_mul(&a, &k.fixed_point_class(s));
        assert_eq!(c.at(s), &(&e(&-a) * &k.cotangent_euler(s)));
        let id = k.line_bundle_mul(&Weight::ZERO, &k.fixed_point_class(s));
        assert_eq!(id, k.fixed_point_class(s));
    }

    #[test]
    fn fixed_point_coefficients_round_trip() {
        let k = kt("A2");
        let a = k.structure_sheaf(k.group().parse("s2s1").unwrap());
        let c = k.fixed_point_coeffs(a);
        assert_eq!(&k.from_fixed_point_coeffs(&c).unwrap(), a);
        let iota = k.fixed_point_coeffs(&k.fixed_point_class(WeylElement::ID));
        assert!(iota[0].equals_poly(&int(1)));
    }
}
