use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use schubert_core::algebra::laurent::{self, int, y, Laurent};
use schubert_core::algebra::{Mono, QPoly, LANE_H, LANE_Y};
use schubert_core::cohclass::{CohClass, CohOps, CohSpace};
use schubert_core::hirzebruch::{Hirzebruch, Normalization};
use schubert_core::kclass::{Basis, KClass, KTheory};
use schubert_core::lie::Weight;
use schubert_core::mc::Motivic;

fn a2() -> &'static Motivic {
    static M: OnceLock<Motivic> = OnceLock::new();
    M.get_or_init(|| Motivic::of_type("A2").unwrap())
}

fn b2() -> &'static Motivic {
    static M: OnceLock<Motivic> = OnceLock::new();
    M.get_or_init(|| Motivic::of_type("B2").unwrap())
}

fn coh_a2() -> &'static CohSpace {
    static S: OnceLock<CohSpace> = OnceLock::new();
    S.get_or_init(|| CohSpace::full(a2().ktheory().group_arc()))
}

fn hirz_a2() -> &'static Hirzebruch {
    static H: OnceLock<Hirzebruch> = OnceLock::new();
    H.get_or_init(|| Hirzebruch::new(a2().ktheory_arc(), 4))
}

fn laurent_poly(max_terms: usize) -> impl Strategy<Value = Laurent> {
    prop::collection::vec((-2i32..=2, -2i32..=2, 0i16..=2, -3i64..=3), 0..=max_terms).prop_map(
        |t| {
            Laurent::from_terms(
                t.into_iter()
                    .map(|(a, b, k, c)| {
                        (
                            Mono::from_weight(&Weight::from_slice(&[a, b])).with_lane(LANE_Y, k),
                            BigInt::from(c),
                        )
                    })
                    .collect(),
            )
        },
    )
}

fn qpoly(max_terms: usize) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(
        (0i16..=2, 0i16..=2, 0i16..=1, 0i16..=1, -3i64..=3),
        0..=max_terms,
    )
    .prop_map(|t| {
        QPoly::from_terms(
            t.into_iter()
                .map(|(a, b, h, k, c)| {
                    let m = Mono::lane(0, a)
                        + Mono::lane(1, b)
                        + Mono::lane(LANE_H, h)
                        + Mono::lane(LANE_Y, k);
                    (m, BigRational::from_integer(BigInt::from(c)))
                })
                .collect(),
        )
    })
}

/// A class of `K_T(G/B)` for a rank-two group, as a random combination of structure sheaves.
fn kclass(k: &'static KTheory) -> impl Strategy<Value = KClass> {
    prop::collection::vec(laurent_poly(2), k.n_points())
        .prop_map(move |c| k.from_expansion(&c, Basis::Structure))
}

fn cohclass(s: &'static CohSpace) -> impl Strategy<Value = CohClass> {
    prop::collection::vec(qpoly(2), s.n_points()).prop_map(move |c| {
        let mut acc = CohClass::zero(s.n_points());
        for (k, p) in c.iter().enumerate() {
            if !p.is_zero() {
                acc = acc.add(&s.schubert(s.point(k)).scale(p));
            }
        }
        acc
    })
}

fn braid_words(i: u8, j: u8, m: usize) -> (Vec<u8>, Vec<u8>) {
    let a = (0..m).map(|k| if k % 2 == 0 { i } else { j }).collect();
    let b = (0..m).map(|k| if k % 2 == 0 { j } else { i }).collect();
    (a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_ring_laws(p in laurent_poly(4), q in laurent_poly(4), r in laurent_poly(4)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p - &q) + &q, p.clone());
        prop_assert!((&p * &int(0)).is_zero());
    }

    #[test]
    fn star_is_a_ring_involution(p in laurent_poly(4), q in laurent_poly(4)) {
        prop_assert_eq!(laurent::star(&laurent::star(&p)), p.clone());
        prop_assert_eq!(laurent::star(&(&p * &q)), &laurent::star(&p) * &laurent::star(&q));
        prop_assert_eq!(laurent::star(&(&p + &q)), &laurent::star(&p) + &laurent::star(&q));
    }

    #[test]
    fn qpoly_ring_laws(p in qpoly(4), q in qpoly(4), r in qpoly(4)) {
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn exact_division_inverts_multiplication(p in laurent_poly(3), q in laurent_poly(3)) {
        prop_assume!(!q.is_zero());
        prop_assert_eq!((&p * &q).div_exact(&q), Some(p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn k_operators_satisfy_the_hecke_relations(a in kclass(a2().ktheory()), b in kclass(b2().ktheory())) {
        for (mc, m, x) in [(a2(), 3, &a), (b2(), 4, &b)] {
            let k = mc.ktheory();
            for i in 0..2 {
                // (T_i + 1)(T_i + y) = 0
                let t = |z: &KClass| k.dl_operator(i, z);
                let inner = t(x).add(&x.scale(&y()));
                prop_assert!(t(&inner).add(&inner).is_zero());
                let d = |z: &KClass| k.dl_dual(i, z);
                let inner = d(x).add(&x.scale(&y()));
                prop_assert!(d(&inner).add(&inner).is_zero());
                prop_assert_eq!(&k.dl_inverse(i, &t(x)), x);
                prop_assert_eq!(&k.dl_dual_inverse(i, &d(x)), x);
            }
            let (u, v) = braid_words(0, 1, m);
            prop_assert_eq!(k.apply_word(&u, x, KTheory::dl_operator), k.apply_word(&v, x, KTheory::dl_operator));
            prop_assert_eq!(k.apply_word(&u, x, KTheory::dl_dual), k.apply_word(&v, x, KTheory::dl_dual));
        }
    }

    #[test]
    fn k_operators_are_adjoint(a in kclass(a2().ktheory()), b in kclass(a2().ktheory()), i in 0usize..2) {
        let k = a2().ktheory();
        prop_assert_eq!(k.pair_poly(&k.dl_operator(i, &a), &b).unwrap(), k.pair_poly(&a, &k.dl_dual(i, &b)).unwrap());
        prop_assert_eq!(k.pair_poly(&k.demazure(i, &a), &b).unwrap(), k.pair_poly(&a, &k.demazure(i, &b)).unwrap());
    }

    #[test]
    fn expansion_round_trips(a in kclass(a2().ktheory())) {
        let k = a2().ktheory();
        for basis in [Basis::Structure, Basis::Ideal] {
            let c = k.expand(&a, basis).unwrap();
            prop_assert_eq!(&k.from_expansion(&c, basis), &a);
        }
    }

    #[test]
    fn star_commutes_with_duality(a in kclass(a2().ktheory())) {
        let k = a2().ktheory();
        prop_assert_eq!(&k.star(&k.star(&a)), &a);
        prop_assert_eq!(k.psi(&k.psi(&a)), a);
    }

    #[test]
    fn coh_operators_satisfy_the_relations(a in cohclass(coh_a2()), i in 0usize..2) {
        let s = coh_a2();
        let ops = CohOps::new(s);
        prop_assert_eq!(ops.dl(i, &ops.dl(i, &a)), a.clone());
        prop_assert_eq!(ops.dl_dual(i, &ops.dl_dual(i, &a)), a.clone());
        prop_assert!(ops.bgg(i, &ops.bgg(i, &a)).is_zero());
        let (u, v) = braid_words(0, 1, 3);
        prop_assert_eq!(ops.apply_word(&u, &a, CohOps::dl), ops.apply_word(&v, &a, CohOps::dl));
        prop_assert_eq!(ops.apply_word(&u, &a, CohOps::bgg), ops.apply_word(&v, &a, CohOps::bgg));
        prop_assert!(s.gkm_condition(&ops.dl(i, &a)));
    }

    #[test]
    fn coh_operators_are_adjoint(a in cohclass(coh_a2()), b in cohclass(coh_a2()), i in 0usize..2) {
        let s = coh_a2();
        let ops = CohOps::new(s);
        prop_assert_eq!(s.pair(&ops.bgg(i, &a), &b).unwrap(), s.pair(&a, &ops.bgg(i, &b)).unwrap());
        prop_assert_eq!(s.pair(&ops.dl(i, &a), &b).unwrap(), s.pair(&a, &ops.dl_dual(i, &b)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn psi_intertwines_t_and_l(a in kclass(a2().ktheory()), b in kclass(b2().ktheory()), i in 0usize..2) {
        prop_assert!(a2().check_intertwining(i, &a).is_ok());
        prop_assert!(b2().check_intertwining(i, &b).is_ok());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn hirzebruch_operators_modulo_the_cap(a in kclass(a2().ktheory()), i in 0usize..2) {
        let h = hirz_a2();
        let k = a2().ktheory();
        let cap = h.cap() + 4;
        let x = h.td_star(&a, cap);
        // td_* intertwines the K-theoretic and the unnormalized operators
        let lhs = h.td_star(&k.dl_operator(i, &a), cap);
        let rhs = h.operator(i, &x, Normalization::Unnormalized);
        prop_assert!(lhs.agrees(&rhs));
        for n in [Normalization::Unnormalized, Normalization::Normalized] {
            let t = |z: &CohClass| h.operator(i, z, n);
            let yq = QPoly::mono(Mono::lane(LANE_Y, 1));
            let inner = t(&x).add(&x.scale(&yq));
            prop_assert!(t(&inner).add(&inner).agrees(&CohClass::zero(x.len()).with_cap(inner.cap())));
            let (u, v) = braid_words(0, 1, 3);
            let wu = u.iter().rev().fold(x.clone(), |acc, &j| h.operator(j as usize, &acc, n));
            let wv = v.iter().rev().fold(x.clone(), |acc, &j| h.operator(j as usize, &acc, n));
            prop_assert!(wu.agrees(&wv));
        }
        // Adams intertwining between the two normalizations
        let lhs = h.adams_cohomological(&h.operator(i, &x, Normalization::Unnormalized)).unwrap();
        let rhs = h.operator(i, &h.adams_cohomological(&x).unwrap(), Normalization::Normalized);
        prop_assert!(lhs.agrees(&rhs));
    }
}

#[test]
fn strategies_build_valid_classes() {
    let k = a2().ktheory();
    let s = coh_a2();
    let x = k.structure_sheaf(k.group().longest()).clone();
    assert_eq!(x, k.constant(&int(1)));
    assert!(s.gkm_condition(s.schubert(s.point(1))));
}
