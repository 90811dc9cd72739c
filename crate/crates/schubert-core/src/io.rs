//! JSON forms of computed classes. Maps are keyed by reduced words and every
//! list is in canonical order, so equal inputs give byte-identical output.

use std::collections::BTreeMap;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::algebra::laurent::{self, Laurent, TermJson};
use crate::algebra::{GradedSeries, Mono, QPoly, LANE_H, LANE_Y};
use crate::error::{Error, Result};
use crate::lie::{WeylElement, WeylGroup};

/// A K-theory class or expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDump {
    pub root_system: String,
    pub basis: String,
    pub coeffs: BTreeMap<String, Vec<TermJson>>,
}

impl ClassDump {
    /// Entries indexed by group element; zero entries are dropped.
    pub fn new(g: &WeylGroup, basis: &str, values: &[Laurent]) -> Self {
        let rank = g.rank();
        ClassDump {
            root_system: g.root_system().label(),
            basis: basis.to_string(),
            coeffs: g
                .elements()
                .filter(|w| !values[w.index()].is_zero())
                .map(|w| (g.name(w), laurent::to_json(rank, &values[w.index()])))
                .collect(),
        }
    }

    /// Values indexed by group element.
    pub fn values(&self, g: &WeylGroup) -> Result<Vec<Laurent>> {
        let mut v = vec![Laurent::zero(); g.order()];
        for (k, terms) in &self.coeffs {
            v[g.parse(k)?.index()] = laurent::from_json(terms)?;
        }
        Ok(v)
    }
}

/// One term of a polynomial in `a1..ar`, `h` and `y`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohTermJson {
    pub exp: Vec<i32>,
    pub h: i32,
    pub y: i32,
    pub coeff: String,
}

pub fn coh_to_json(rank: usize, p: &QPoly) -> Vec<CohTermJson> {
    p.terms()
        .iter()
        .map(|(m, c)| CohTermJson {
            exp: m.0[..rank].iter().map(|&x| i32::from(x)).collect(),
            h: i32::from(m.h()),
            y: i32::from(m.y()),
            coeff: c.to_string(),
        })
        .collect()
}

pub fn coh_from_json(terms: &[CohTermJson]) -> Result<QPoly> {
    let mut t = Vec::with_capacity(terms.len());
    for term in terms {
        let c: BigRational = term
            .coeff
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient `{}`", term.coeff)))?;
        if term.exp.len() > crate::lie::MAX_RANK {
            return Err(Error::Parse("exponent vector too long".into()));
        }
        let lane =
            |x: i32| i16::try_from(x).map_err(|_| Error::Parse("exponent out of range".into()));
        let mut m = Mono::ONE;
        for (k, &e) in term.exp.iter().enumerate() {
            m.0[k] = lane(e)?;
        }
        m.0[LANE_H] = lane(term.h)?;
        m.0[LANE_Y] = lane(term.y)?;
        t.push((m, c));
    }
    Ok(QPoly::from_terms(t))
}

/// Formats a cohomology polynomial with the variables `a1..ar`, `h`, `y`.
pub fn coh_display(p: &QPoly) -> String {
    p.format_with(|m| {
        let mut parts = Vec::new();
        for (k, &e) in m.0[..crate::lie::MAX_RANK].iter().enumerate() {
            match e {
                0 => {}
                1 => parts.push(format!("a{}", k + 1)),
                _ => parts.push(format!("a{}^{e}", k + 1)),
            }
        }
        for (name, e) in [("h", m.h()), ("y", m.y())] {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    })
}

/// A cohomology class, its Schubert expansion, or a list of integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohDump {
    pub root_system: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub parabolic: String,
    pub variables: Vec<String>,
    pub basis: String,
    pub coeffs: BTreeMap<String, Vec<CohTermJson>>,
}

pub fn variables(rank: usize) -> Vec<String> {
    let mut v = vec!["h".to_string()];
    v.extend((1..=rank).map(|k| format!("a{k}")));
    v.push("y".into());
    v
}

impl CohDump {
    pub fn new(
        g: &WeylGroup,
        parabolic: &str,
        basis: &str,
        entries: &[(WeylElement, QPoly)],
    ) -> Self {
        CohDump {
            root_system: g.root_system().label(),
            parabolic: parabolic.to_string(),
            variables: variables(g.rank()),
            basis: basis.to_string(),
            coeffs: entries
                .iter()
                .filter(|(_, p)| !p.is_zero())
                .map(|(w, p)| (g.name(*w), coh_to_json(g.rank(), p)))
                .collect(),
        }
    }
}

/// A truncated class with its homogeneous components listed per point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedDump {
    pub root_system: String,
    pub cell: String,
    pub normalization: String,
    pub cap: i32,
    pub variables: Vec<String>,
    /// Point, then cohomological degree, then terms.
    pub components: BTreeMap<String, BTreeMap<i32, Vec<CohTermJson>>>,
}

impl GradedDump {
    pub fn new(
        g: &WeylGroup,
        cell: WeylElement,
        normalization: &str,
        cap: i32,
        values: &[GradedSeries],
    ) -> Self {
        GradedDump {
            root_system: g.root_system().label(),
            cell: g.name(cell),
            normalization: normalization.to_string(),
            cap,
            variables: variables(g.rank()),
            components: g
                .elements()
                .map(|w| {
                    let c = values[w.index()]
                        .components()
                        .into_iter()
                        .map(|(d, p)| (d, coh_to_json(g.rank(), &p)))
                        .collect();
                    (g.name(w), c)
                })
                .collect(),
        }
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Parse(e.to_string()))?;
    s.push('\n');
    Ok(s)
}
