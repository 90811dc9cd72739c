//! Batch checks of positivity, alternation and log-concavity statements about
//! motivic Chern and CSM classes, producing reports with counterexamples.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::laurent::{self, Laurent};
use crate::cohclass::{
    csm_partial, csm_schubert_variety, h_polynomial, sm_structure_constants_partial, CohSpace, Csm,
};
use crate::error::{Error, Result};
use crate::kclass::KTheory;
use crate::lie::{LieType, Parabolic, WeylElement, WeylGroup};
use crate::mc::Motivic;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conjecture {
    /// Sign-normalized MC coefficients lie in `Z>=0[y][e^{-alpha_i}]`.
    McPositivity,
    /// Sign-normalized nonequivariant MC coefficients are log-concave in `y`.
    McLogConcavity,
    /// Equivariant CSM coefficients are nonnegative polynomials in the negated simple roots.
    CsmEquivariantPositivity,
    /// Nonequivariant CSM coefficients are strictly positive below the cell.
    CsmStrongPositivity,
    /// `H`-polynomials of Schubert varieties are unimodal with no internal zeros.
    HUnimodality,
    /// `H`-polynomials of Schubert varieties are log-concave.
    HLogConcavity,
    /// `(-1)^{l(u)+l(v)+l(w)} e_{u,v}^w >= 0`.
    EulerAlternation,
    /// CSM classes of Richardson cells are Schubert positive.
    RichardsonPositivity,
}

impl Conjecture {
    pub const ALL: [Conjecture; 8] = [
        Conjecture::McPositivity,
        Conjecture::McLogConcavity,
        Conjecture::CsmEquivariantPositivity,
        Conjecture::CsmStrongPositivity,
        Conjecture::HUnimodality,
        Conjecture::HLogConcavity,
        Conjecture::EulerAlternation,
        Conjecture::RichardsonPositivity,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Conjecture::McPositivity => "mc-positivity",
            Conjecture::McLogConcavity => "log-concavity",
            Conjecture::CsmEquivariantPositivity => "csm-positivity",
            Conjecture::CsmStrongPositivity => "csm-strong-positivity",
            Conjecture::HUnimodality => "h-unimodality",
            Conjecture::HLogConcavity => "h-log-concavity",
            Conjecture::EulerAlternation => "euler",
            Conjecture::RichardsonPositivity => "richardson",
        }
    }
}

impl fmt::Display for Conjecture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Conjecture {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Conjecture::ALL
            .into_iter()
            .find(|c| c.id() == s.trim())
            .ok_or_else(|| Error::Parse(format!("unknown conjecture `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Refuted,
    /// Checked only below a length bound.
    Partial,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// The cells involved, as reduced words.
    pub cells: Vec<String>,
    pub coefficient: String,
    /// Zero where a strictly positive value was required, as opposed to negative.
    #[serde(default)]
    pub zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub conjecture: Conjecture,
    pub root_system: String,
    /// Levi generators of the parabolic, empty for `G/B`.
    pub parabolic: String,
    pub cells_checked: usize,
    pub status: Status,
    pub counterexamples: Vec<Counterexample>,
    /// Extra consistency layers run alongside the check.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub audit: Vec<String>,
    #[serde(default)]
    pub elapsed_ms: u64,
}

impl ConjectureReport {
    /// The report without timing, for reproducibility comparisons.
    pub fn canonical(&self) -> Self {
        ConjectureReport {
            elapsed_ms: 0,
            ..self.clone()
        }
    }

    pub fn refuted(&self) -> bool {
        self.status == Status::Refuted
    }
}

/// Enumeration bounds.
#[derive(Clone, Debug, Default)]
pub struct Scope {
    pub parabolic: Option<Vec<usize>>,
    /// Only cells of length at most this; `None` for the default bound.
    pub maxlen: Option<usize>,
}

/// Runs the checks for one root system with shared caches.
pub struct Harness {
    label: String,
    g: Arc<WeylGroup>,
    mc: Motivic,
    csm: Csm,
}

fn sign(k: usize) -> i64 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

impl Harness {
    pub fn new(label: &str) -> Result<Self> {
        let k = Arc::new(KTheory::of_type(label)?);
        let g = k.group_arc();
        Ok(Harness {
            label: g.root_system().label(),
            mc: Motivic::new(k),
            csm: Csm::new(g.clone()),
            g,
        })
    }

    pub fn motivic(&self) -> &Motivic {
        &self.mc
    }

    pub fn csm(&self) -> &Csm {
        &self.csm
    }

    fn bound(&self, scope: &Scope) -> usize {
        scope
            .maxlen
            .unwrap_or(if self.g.rank() <= 3 { usize::MAX } else { 6 })
    }

    fn cells(&self, scope: &Scope) -> (Vec<WeylElement>, bool) {
        let b = self.bound(scope);
        let all: Vec<WeylElement> = self.g.elements().collect();
        let cut: Vec<WeylElement> = all
            .iter()
            .copied()
            .filter(|&w| self.g.length(w) <= b)
            .collect();
        let partial = cut.len() < all.len();
        (cut, partial)
    }

    fn parabolic(&self, scope: &Scope) -> Result<Parabolic> {
        match &scope.parabolic {
            Some(l) => Parabolic::new(&self.g, l),
            None => Ok(Parabolic::borel(&self.g)),
        }
    }

    fn report(
        &self,
        c: Conjecture,
        p: &Parabolic,
        checked: usize,
        partial: bool,
        counterexamples: Vec<Counterexample>,
        start: Instant,
    ) -> ConjectureReport {
        let status = if !counterexamples.is_empty() {
            Status::Refuted
        } else if partial {
            Status::Partial
        } else {
            Status::Verified
        };
        ConjectureReport {
            conjecture: c,
            root_system: self.label.clone(),
            parabolic: p.label(),
            cells_checked: checked,
            status,
            counterexamples,
            audit: Vec::new(),
            elapsed_ms: start.elapsed().as_millis() as u64,
        }
    }

    pub fn run(&self, c: Conjecture, scope: &Scope) -> Result<ConjectureReport> {
        match c {
            Conjecture::McPositivity => self.check_mc_positivity(scope),
            Conjecture::McLogConcavity => self.check_mc_log_concavity(scope),
            Conjecture::CsmEquivariantPositivity => self.check_csm_positivity(scope, true),
            Conjecture::CsmStrongPositivity => self.check_csm_positivity(scope, false),
            Conjecture::HUnimodality => self.check_h_polynomials(scope, false),
            Conjecture::HLogConcavity => self.check_h_polynomials(scope, true),
            Conjecture::EulerAlternation => self.check_euler_alternation(scope),
            Conjecture::RichardsonPositivity => self.check_richardson_positivity(scope),
        }
    }

    fn mc_pairs<T: Send>(
        &self,
        cells: &[WeylElement],
        f: impl Fn(WeylElement, WeylElement, &Laurent) -> Option<T> + Sync,
    ) -> Result<Vec<T>> {
        let per: Vec<Result<Vec<T>>> = cells
            .par_iter()
            .map(|&w| {
                let c = self.mc.coefficients(w)?;
                Ok(self
                    .g
                    .lower_interval(w)
                    .into_iter()
                    .filter_map(|u| f(u, w, &c[u.index()]))
                    .collect())
            })
            .collect();
        let mut out = Vec::new();
        for r in per {
            out.extend(r?);
        }
        Ok(out)
    }

    pub fn check_mc_positivity(&self, scope: &Scope) -> Result<ConjectureReport> {
        let start = Instant::now();
        let (cells, partial) = self.cells(scope);
        let rs = self.g.root_system();
        let bad = self.mc_pairs(&cells, |u, w, c| {
            let s = c * &laurent::int(sign(self.g.length(w) - self.g.length(u)));
            let ok = laurent::has_nonnegative_coeffs(&s) && laurent::in_negative_cone(rs, &s);
            (!ok).then(|| Counterexample {
                cells: vec![self.g.name(u), self.g.name(w)],
                coefficient: laurent::display(rs, c),
                zero: false,
            })
        })?;
        Ok(self.report(
            Conjecture::McPositivity,
            &Parabolic::borel(&self.g),
            cells.len(),
            partial,
            bad,
            start,
        ))
    }

    pub fn check_mc_log_concavity(&self, scope: &Scope) -> Result<ConjectureReport> {
        let start = Instant::now();
        let (cells, partial) = self.cells(scope);
        let bad = self.mc_pairs(&cells, |u, w, c| {
            let p = laurent::nonequivariant(c);
            let p = if sign(self.g.length(w) - self.g.length(u)) < 0 {
                p.neg()
            } else {
                p
            };
            (!p.is_log_concave()).then(|| Counterexample {
                cells: vec![self.g.name(u), self.g.name(w)],
                coefficient: p.to_string(),
                zero: false,
            })
        })?;
        Ok(self.report(
            Conjecture::McLogConcavity,
            &Parabolic::borel(&self.g),
            cells.len(),
            partial,
            bad,
            start,
        ))
    }

    fn target(&self, p: &Parabolic) -> CohSpace {
        CohSpace::new(self.g.clone(), p.clone())
    }

    fn reps_within(&self, sp: &CohSpace, scope: &Scope) -> (Vec<usize>, bool) {
        let b = self.bound(scope);
        let all = sp.n_points();
        let v: Vec<usize> = (0..all)
            .filter(|&k| self.g.length(sp.point(k)) <= b)
            .collect();
        let partial = v.len() < all;
        (v, partial)
    }

    pub fn check_csm_positivity(
        &self,
        scope: &Scope,
        equivariant: bool,
    ) -> Result<ConjectureReport> {
        let start = Instant::now();
        let p = self.parabolic(scope)?;
        let sp = self.target(&p);
        let (ks, partial) = self.reps_within(&sp, scope);
        let per: Vec<Result<Vec<Counterexample>>> = ks
            .par_iter()
            .map(|&k| {
                let w = sp.point(k);
                let c = csm_partial(&self.csm, &sp, w)?;
                let mut bad = Vec::new();
                if equivariant {
                    let e = sp.expand(&c, false)?;
                    for (j, x) in e.iter().enumerate() {
                        let negative = x.poly().terms().iter().any(|(m, q)| {
                            if m.degree() % 2 == 0 {
                                q.is_negative()
                            } else {
                                q.is_positive()
                            }
                        });
                        if negative {
                            bad.push(Counterexample {
                                cells: vec![self.g.name(sp.point(j)), self.g.name(w)],
                                coefficient: format!("{:?}", x.poly()),
                                zero: false,
                            });
                        }
                    }
                } else {
                    let e = sp.expand_numbers(&c, false)?;
                    for (j, x) in e.iter().enumerate() {
                        let v = sp.point(j);
                        if self.g.bruhat_leq(v, w) && !x.is_positive() {
                            bad.push(Counterexample {
                                cells: vec![self.g.name(v), self.g.name(w)],
                                coefficient: x.to_string(),
                                zero: x.is_zero(),
                            });
                        }
                    }
                }
                Ok(bad)
            })
            .collect();
        let bad = flatten(per)?;
        let c = if equivariant {
            Conjecture::CsmEquivariantPositivity
        } else {
            Conjecture::CsmStrongPositivity
        };
        let mut r = self.report(c, &p, ks.len(), partial, bad, start);
        if equivariant {
            r.audit.push(
                "coefficients expanded in monomials of the negated simple roots -a1..-ar".into(),
            );
        }
        Ok(r)
    }

    pub fn check_h_polynomials(
        &self,
        scope: &Scope,
        log_concave: bool,
    ) -> Result<ConjectureReport> {
        let start = Instant::now();
        let p = self.parabolic(scope)?;
        let sp = self.target(&p);
        let (ks, partial) = self.reps_within(&sp, scope);
        let per: Vec<Result<Vec<Counterexample>>> = ks
            .par_iter()
            .map(|&k| {
                let w = sp.point(k);
                let h = h_polynomial(&sp, &csm_schubert_variety(&self.csm, &sp, w)?)?;
                let ok = if log_concave {
                    h.is_log_concave()
                } else {
                    h.is_unimodal() && !h.has_internal_zeros()
                };
                Ok(if ok {
                    vec![]
                } else {
                    vec![Counterexample {
                        cells: vec![self.g.name(w)],
                        coefficient: h.format("x"),
                        zero: false,
                    }]
                })
            })
            .collect();
        let bad = flatten(per)?;
        let c = if log_concave {
            Conjecture::HLogConcavity
        } else {
            Conjecture::HUnimodality
        };
        let mut r = self.report(c, &p, ks.len(), partial, bad, start);
        if log_concave && self.g.root_system().lie_type() != LieType::A {
            r.audit
                .push("log-concavity is only expected in type A".into());
        }
        Ok(r)
    }

    pub fn check_euler_alternation(&self, scope: &Scope) -> Result<ConjectureReport> {
        let start = Instant::now();
        let p = self.parabolic(scope)?;
        let sp = self.target(&p);
        let (ks, partial) = self.reps_within(&sp, scope);
        let g = &self.g;
        let pairs: Vec<(usize, usize)> = ks
            .iter()
            .flat_map(|&a| ks.iter().map(move |&b| (a, b)))
            .collect();
        let per: Vec<Result<(Vec<Counterexample>, bool)>> = pairs
            .par_iter()
            .map(|&(a, b)| {
                let (u, v) = (sp.point(a), sp.point(b));
                let e = if p.is_borel() {
                    self.csm.sm_structure_constants(u, v)?
                } else {
                    sm_structure_constants_partial(&self.csm, &sp, u, v)?
                };
                let mut bad = Vec::new();
                for (k, x) in e.iter().enumerate() {
                    let w = sp.point(k);
                    let s = sign(g.length(u) + g.length(v) + g.length(w));
                    if (x * BigInt::from(s)).is_negative() {
                        bad.push(Counterexample {
                            cells: vec![g.name(u), g.name(v), g.name(w)],
                            coefficient: x.to_string(),
                            zero: false,
                        });
                    }
                }
                let total: BigInt = e.iter().sum();
                let dual = p.min_rep(g.mul(g.longest(), u)) == v;
                let sum_ok = total == BigInt::from(i64::from(dual));
                Ok((bad, sum_ok))
            })
            .collect();
        let mut bad = Vec::new();
        let mut sums_ok = true;
        for r in per {
            let (b, s) = r?;
            bad.extend(b);
            sums_ok &= s;
        }
        if !sums_ok {
            return Err(Error::Check("structure constant sum rule failed".into()));
        }
        let mut r = self.report(
            Conjecture::EulerAlternation,
            &p,
            pairs.len(),
            partial,
            bad,
            start,
        );
        r.audit
            .push(format!("sum rule verified for {} pairs", pairs.len()));
        Ok(r)
    }

    pub fn check_richardson_positivity(&self, scope: &Scope) -> Result<ConjectureReport> {
        let start = Instant::now();
        let (cells, partial) = self.cells(scope);
        let g = &self.g;
        let pairs: Vec<(WeylElement, WeylElement)> = cells
            .iter()
            .flat_map(|&v| g.lower_interval(v).into_iter().map(move |u| (u, v)))
            .filter(|(u, _)| cells.contains(u))
            .collect();
        let per: Vec<Result<Vec<Counterexample>>> = pairs
            .par_iter()
            .map(|&(u, v)| {
                let f = self.csm.richardson(u, v)?;
                Ok(g.elements()
                    .filter(|w| f[w.index()].is_negative())
                    .map(|w| Counterexample {
                        cells: vec![g.name(u), g.name(v), g.name(w)],
                        coefficient: f[w.index()].to_string(),
                        zero: false,
                    })
                    .collect())
            })
            .collect();
        let bad = flatten(per)?;
        Ok(self.report(
            Conjecture::RichardsonPositivity,
            &Parabolic::borel(g),
            pairs.len(),
            partial,
            bad,
            start,
        ))
    }
}

fn flatten<T>(v: Vec<Result<Vec<T>>>) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for r in v {
        out.extend(r?);
    }
    Ok(out)
}
