//! Laurent polynomials in `e^lambda` and `y`, the coefficient ring of
//! equivariant K-theory with the formal variable adjoined.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::poly::{Mono, ZPoly, LANE_Y};
use super::ypoly::YPoly;
use crate::error::{Error, Result};
use crate::lie::{RootSystem, Weight, WeylElement, WeylGroup};

pub type Laurent = ZPoly;

pub fn int(n: i64) -> Laurent {
    Laurent::constant(BigInt::from(n))
}

pub fn y() -> Laurent {
    Laurent::mono(Mono::lane(LANE_Y, 1))
}

pub fn y_pow(k: i16) -> Laurent {
    Laurent::mono(Mono::lane(LANE_Y, k))
}

/// The character `e^lambda`.
pub fn e(lambda: &Weight) -> Laurent {
    Laurent::mono(Mono::from_weight(lambda))
}

/// `1 - e^lambda`.
pub fn one_minus_e(lambda: &Weight) -> Laurent {
    &int(1) - &e(lambda)
}

/// `1 + y e^lambda`.
pub fn one_plus_ye(lambda: &Weight) -> Laurent {
    Laurent::from_terms(vec![
        (Mono::ONE, BigInt::one()),
        (
            Mono::from_weight(lambda).with_lane(LANE_Y, 1),
            BigInt::one(),
        ),
    ])
}

/// The duality involution `e^lambda -> e^-lambda`, fixing `y`.
pub fn star(p: &Laurent) -> Laurent {
    p.map_monos(|m| {
        let y = m.y();
        let h = m.h();
        (-m).with_lane(LANE_Y, y).with_lane(super::poly::LANE_H, h)
    })
}

/// Weyl group action on the exponents.
pub fn weyl_act(g: &WeylGroup, w: WeylElement, p: &Laurent) -> Laurent {
    if w == WeylElement::ID {
        return p.clone();
    }
    p.map_monos(|m| {
        let y = m.y();
        Mono::from_weight(&g.act(w, &m.weight())).with_lane(LANE_Y, y)
    })
}

/// Substitutes an integer for `y`.
pub fn y_specialize(p: &Laurent, v: i64) -> Laurent {
    p.specialize_lane(LANE_Y, &BigInt::from(v))
}

/// The substitution `e^lambda -> 1`, collected as a polynomial in `y`.
pub fn nonequivariant(p: &Laurent) -> YPoly {
    let mut low = 0i32;
    for (m, _) in p.terms() {
        low = low.min(i32::from(m.y()));
    }
    let mut coeffs: Vec<BigInt> = Vec::new();
    for (m, c) in p.terms() {
        let k = (i32::from(m.y()) - low) as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] += c;
    }
    YPoly::with_offset(low, coeffs)
}

/// Drops all lattice exponents, keeping a Laurent polynomial in `y` only.
pub fn forget_lattice(p: &Laurent) -> Laurent {
    p.map_monos(|m| Mono::lane(LANE_Y, m.y()))
}

/// `y`-degree range of a polynomial.
pub fn y_degree(p: &Laurent) -> Option<(i16, i16)> {
    p.lane_range(LANE_Y)
}

/// Coefficient of `y^k`.
pub fn y_coeff(p: &Laurent, k: i16) -> Laurent {
    p.lane_coeff(LANE_Y, k)
}

/// Whether every lattice exponent lies in the cone spanned by the negative
/// simple roots.
pub fn in_negative_cone(rs: &RootSystem, p: &Laurent) -> bool {
    p.terms()
        .iter()
        .all(|(m, _)| match rs.root_coords_integral(&m.weight()) {
            Some(c) => c.iter().all(|&x| x <= 0),
            None => false,
        })
}

/// Whether all coefficients are nonnegative.
pub fn has_nonnegative_coeffs(p: &Laurent) -> bool {
    p.terms().iter().all(|(_, c)| !c.is_negative())
}

/// Human readable form using root coordinates, e.g. `1 + y*e^(-a1-a2)`.
pub fn display(rs: &RootSystem, p: &Laurent) -> String {
    p.format_with(|m| mono_name(rs, m))
}

fn mono_name(rs: &RootSystem, m: &Mono) -> String {
    let mut parts = Vec::new();
    let w = m.weight();
    if !w.is_zero() {
        let inner = match rs.root_coords_integral(&w) {
            Some(c) => linear_name(&c, "a"),
            None => format!(
                "w({})",
                w.coords(rs.rank())
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
        };
        parts.push(format!("e^({inner})"));
    }
    match m.y() {
        0 => {}
        1 => parts.push("y".into()),
        k => parts.push(format!("y^{k}")),
    }
    parts.join("*")
}

pub(crate) fn linear_name(c: &[i32], var: &str) -> String {
    let mut s = String::new();
    for (i, &k) in c.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let sign = if k < 0 {
            "-"
        } else if s.is_empty() {
            ""
        } else {
            "+"
        };
        s.push_str(sign);
        if k.abs() != 1 {
            s.push_str(&k.abs().to_string());
        }
        s.push_str(&format!("{var}{}", i + 1));
    }
    s
}

/// One term of the JSON form of a Laurent polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<i32>,
    pub y: i32,
    pub coeff: String,
}

pub fn to_json(rank: usize, p: &Laurent) -> Vec<TermJson> {
    p.terms()
        .iter()
        .map(|(m, c)| TermJson {
            exp: m.weight().coords(rank).to_vec(),
            y: i32::from(m.y()),
            coeff: c.to_string(),
        })
        .collect()
}

pub fn from_json(terms: &[TermJson]) -> Result<Laurent> {
    let mut t = Vec::with_capacity(terms.len());
    for term in terms {
        let c: BigInt = term
            .coeff
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient `{}`", term.coeff)))?;
        if term.exp.len() > crate::lie::MAX_RANK {
            return Err(Error::Parse("exponent vector too long".into()));
        }
        let y =
            i16::try_from(term.y).map_err(|_| Error::Parse("y exponent out of range".into()))?;
        t.push((
            Mono::from_weight(&Weight::from_slice(&term.exp)).with_lane(LANE_Y, y),
            c,
        ));
    }
    Ok(Laurent::from_terms(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::LieType;

    #[test]
    fn star_is_involutive_and_multiplicative() {
        let rs = RootSystem::new(LieType::A, 2).unwrap();
        let a = &one_plus_ye(&-rs.simple_root(0)) * &int(3);
        let b = &one_minus_e(&rs.simple_root(1)) + &y();
        assert_eq!(star(&star(&a)), a);
        assert_eq!(star(&(&a * &b)), &star(&a) * &star(&b));
    }

    #[test]
    fn nonequivariant_substitution() {
        let rs = RootSystem::new(LieType::A, 2).unwrap();
        let a1 = rs.simple_root(0);
        let a2 = rs.simple_root(1);
        let p = one_plus_ye(&-a1);
        assert_eq!(nonequivariant(&p), YPoly::from_i64(&[1, 1]));
        let p = &one_plus_ye(&-a1) * &one_plus_ye(&-(a1 + a2));
        assert_eq!(nonequivariant(&p), YPoly::from_i64(&[1, 2, 1]));
    }

    #[test]
    fn specialization_example() {
        let rs = RootSystem::new(LieType::A, 1).unwrap();
        let a = rs.simple_root(0);
        // 1 + (1 + e^-a) y at y = -1 is -e^-a
        let p = &int(1) + &(&(&int(1) + &e(&-a)) * &y());
        assert_eq!(y_specialize(&p, -1), -e(&-a));
    }

    #[test]
    fn json_round_trip() {
        let rs = RootSystem::new(LieType::G, 2).unwrap();
        let p = &one_plus_ye(&-rs.simple_root(0)) * &one_minus_e(&rs.simple_root(1));
        let j = to_json(2, &p);
        assert_eq!(from_json(&j).unwrap(), p);
        let text = serde_json::to_string(&j).unwrap();
        assert!(text.starts_with("[{\"exp\":["));
    }
}
