use std::collections::BTreeMap;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use schubert_core::algebra::laurent::{self, Laurent, TermJson};
use schubert_core::algebra::{QPoly, YPoly};
use schubert_core::cohclass::{
    csm_partial, csm_schubert_variety, h_polynomial, sm_structure_constants_partial,
    total_chern_numbers, CohClass, CohSpace, Csm,
};
use schubert_core::conjectures::{Conjecture, ConjectureReport, Harness, Scope};
use schubert_core::hecke::Hecke;
use schubert_core::hirzebruch::{Hirzebruch, Normalization};
use schubert_core::io::{
    coh_display, coh_to_json, to_json_string, variables, CohTermJson, GradedDump,
};
use schubert_core::kclass::{Basis, KTheory, PartialFlag};
use schubert_core::lie::{Parabolic, WeylElement, WeylGroup};
use schubert_core::mc::{chi_y, to_q, Cell, Motivic, Space};

use crate::args::*;
use crate::cache::Cache;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Success,
    Refuted,
    Failed,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Success => 0,
            Status::Refuted => 1,
            Status::Failed => 2,
        }
    }
}

#[derive(Debug)]
pub struct Outcome {
    pub json: String,
    pub status: Status,
}

fn emit<T: Serialize>(value: &T, status: Status) -> Result<Outcome> {
    Ok(Outcome {
        json: to_json_string(value)?,
        status,
    })
}

pub fn run(cli: &Cli) -> Result<Outcome> {
    run_with_cache(cli, &Cache::from_env())
}

pub fn run_with_cache(cli: &Cli, cache: &Cache) -> Result<Outcome> {
    match &cli.command {
        Command::Mc { action } => match action {
            McAction::Compute(a) => mc_compute(a, cache),
            McAction::Verify(a) => mc_verify(a),
        },
        Command::Csm(a) => csm(a),
        Command::Hirzebruch {
            action: HirzebruchAction::Compute(a),
        } => hirzebruch(a),
        Command::Hecke {
            action: HeckeAction::Expand(a),
        } => hecke(a),
        Command::Chi(a) => chi(a),
        Command::Conjectures { action } => match action {
            ConjecturesAction::Run(a) => conjectures(a),
            ConjecturesAction::List => emit(&Conjecture::ALL.map(|c| c.id()), Status::Success),
        },
        Command::Verify(a) => verify(a),
    }
}

fn parse_cell(g: &WeylGroup, s: &str) -> Result<WeylElement> {
    g.parse(s)
        .with_context(|| format!("cell `{s}` in type {}", g.root_system().label()))
}

fn parse_parabolic(g: &WeylGroup, s: Option<&str>) -> Result<Parabolic> {
    match s {
        Some(s) => Parabolic::parse(g, s).with_context(|| format!("parabolic `{s}`")),
        None => Ok(Parabolic::borel(g)),
    }
}

/// Maximal parabolics, one per omitted simple root.
fn maximal_parabolics(g: &WeylGroup) -> Vec<Parabolic> {
    (0..g.rank())
        .map(|j| {
            let levi: Vec<usize> = (0..g.rank()).filter(|&i| i != j).collect();
            Parabolic::new(g, &levi).expect("proper subset of the simple roots")
        })
        .collect()
}

/// An expansion with Laurent polynomial coefficients.
#[derive(Serialize)]
pub struct LaurentTable {
    pub root_system: String,
    pub cell: String,
    pub class: String,
    pub basis: String,
    pub equivariant: bool,
    pub coeffs: BTreeMap<String, Vec<TermJson>>,
    pub display: BTreeMap<String, String>,
}

impl LaurentTable {
    fn new(
        g: &WeylGroup,
        cell: WeylElement,
        class: String,
        basis: &str,
        equivariant: bool,
        c: &[Laurent],
    ) -> Self {
        let rs = g.root_system();
        let live: Vec<WeylElement> = g.elements().filter(|w| !c[w.index()].is_zero()).collect();
        LaurentTable {
            root_system: rs.label(),
            cell: g.name(cell),
            class,
            basis: basis.to_string(),
            equivariant,
            coeffs: live
                .iter()
                .map(|&w| (g.name(w), laurent::to_json(g.rank(), &c[w.index()])))
                .collect(),
            display: live
                .iter()
                .map(|&w| (g.name(w), laurent::display(rs, &c[w.index()])))
                .collect(),
        }
    }
}

fn mc_compute(a: &McComputeArgs, cache: &Cache) -> Result<Outcome> {
    let mc = Motivic::of_type(&a.ty.root_system)?;
    let k = mc.ktheory();
    let g = k.group();
    let w = parse_cell(g, &a.cell)?;
    let rec = cache.record(
        &mc,
        Cell {
            w,
            opposite: a.opposite,
            dual: a.dual,
        },
    )?;
    let basis = match (a.basis, a.opposite) {
        (BasisArg::Structure, false) => Basis::Structure,
        (BasisArg::Structure, true) => Basis::OppositeStructure,
        (BasisArg::Ideal, false) => Basis::Ideal,
        (BasisArg::Ideal, true) => Basis::OppositeIdeal,
        (BasisArg::FixedPoint, _) => Basis::FixedPoint,
    };
    let mut c = k.expand(&rec.class, basis)?;
    if a.nonequivariant {
        c = c.iter().map(laurent::forget_lattice).collect();
    }
    emit(
        &LaurentTable::new(g, w, rec.label, basis.label(), !a.nonequivariant, &c),
        Status::Success,
    )
}

#[derive(Serialize)]
pub struct CheckReport {
    pub check: String,
    pub root_system: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub parabolic: String,
    pub items_checked: usize,
    pub passed: bool,
    pub failures: Vec<String>,
}

struct Tally {
    items: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            items: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, r: schubert_core::Result<()>) {
        self.items += 1;
        if let Err(e) = r {
            self.failures.push(e.to_string());
        }
    }

    fn report(self, check: &str, label: &str, parabolic: String) -> CheckReport {
        CheckReport {
            check: check.to_string(),
            root_system: label.to_string(),
            parabolic,
            items_checked: self.items,
            passed: self.failures.is_empty(),
            failures: self.failures,
        }
    }
}

fn mc_checks(mc: &Motivic, check: McCheck, parabolic: Option<&str>) -> Result<Vec<CheckReport>> {
    let k = mc.ktheory();
    let g = k.group();
    let label = g.root_system().label();
    if check != McCheck::Parabolic {
        mc.precompute()?;
    }
    let mut t = Tally::new();
    match check {
        McCheck::Duality => {
            for u in g.elements() {
                for v in g.elements() {
                    t.record(mc.check_duality(u, v));
                }
            }
        }
        McCheck::Specialize => {
            for w in g.elements() {
                t.record(mc.check_specializations(w));
                t.record(mc.check_dual_specializations(w));
            }
        }
        McCheck::Star => {
            for w in g.elements() {
                t.record(mc.check_star(w));
                t.record(mc.check_segre(w));
            }
        }
        McCheck::SumRule => {
            for w in g.elements() {
                t.record(mc.check_sum_rule(w));
                t.record(mc.check_divisibility(w));
                t.record(mc.check_normal_form(w));
            }
        }
        McCheck::Hecke => {
            let h = Hecke::new(k.group_arc());
            for w in g.elements() {
                let ours = mc.coefficients(w)?;
                let theirs = h.mc_coefficients(w);
                t.record(if ours == theirs.as_slice() {
                    Ok(())
                } else {
                    Err(schubert_core::Error::Check(format!(
                        "Hecke coefficients differ for {}",
                        g.name(w)
                    )))
                });
            }
        }
        McCheck::Words => {
            for w in g.elements() {
                t.record(mc.check_word_independence(w));
            }
        }
        McCheck::Parabolic => {
            let ps = match parabolic {
                Some(s) => vec![parse_parabolic(g, Some(s))?],
                None => maximal_parabolics(g),
            };
            let mut out = Vec::new();
            for p in ps {
                let flag = PartialFlag::new(k, p.clone());
                let mut t = Tally::new();
                t.record(mc.check_pushforward_gate(&flag));
                for w in g.elements() {
                    t.record(mc.check_pushforward(&flag, w));
                }
                for &w in p.reps() {
                    t.record(mc.check_parabolic_specializations(&flag, w));
                    t.record(mc.check_parabolic_sum_rule(&flag, w));
                }
                out.push(t.report(check.id(), &label, p.label()));
            }
            return Ok(out);
        }
    }
    Ok(vec![t.report(check.id(), &label, String::new())])
}

fn status_of(reports: &[CheckReport]) -> Status {
    if reports.iter().all(|r| r.passed) {
        Status::Success
    } else {
        Status::Failed
    }
}

fn mc_verify(a: &McVerifyArgs) -> Result<Outcome> {
    let mc = Motivic::of_type(&a.ty.root_system)?;
    let reports = mc_checks(&mc, a.check, a.parabolic.as_deref())?;
    let s = status_of(&reports);
    emit(&reports, s)
}

/// A cohomology expansion or a list of numbers indexed by cells.
#[derive(Serialize)]
pub struct CohTable {
    pub root_system: String,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub parabolic: String,
    pub cell: String,
    pub class: String,
    pub basis: String,
    pub equivariant: bool,
    pub variables: Vec<String>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub coeffs: BTreeMap<String, Vec<CohTermJson>>,
    pub display: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h_polynomial: Option<HSummary>,
}

#[derive(Serialize)]
pub struct HSummary {
    pub coeffs: Vec<String>,
    pub display: String,
    pub unimodal: bool,
    pub log_concave: bool,
}

impl HSummary {
    fn new(p: &YPoly) -> Self {
        HSummary {
            coeffs: p.dense().iter().map(|c| c.to_string()).collect(),
            display: p.format("x"),
            unimodal: p.is_unimodal(),
            log_concave: p.is_log_concave(),
        }
    }
}

fn csm(a: &CsmArgs) -> Result<Outcome> {
    let csm = Csm::of_type(&a.ty.root_system)?;
    let g: Arc<WeylGroup> = csm.space().group_arc();
    let rs = g.root_system();
    let p = parse_parabolic(&g, a.parabolic.as_deref())?;
    let w = match &a.cell {
        Some(s) => parse_cell(&g, s)?,
        None => g.longest(),
    };
    let opposite = a.opposite || a.dual;
    let base = if opposite { "Y" } else { "X" };
    let cell_name = if a.tangent { String::new() } else { g.name(w) };
    let basis = if opposite { "[Y(u)]" } else { "[X(u)]" };
    let mut table = CohTable {
        root_system: rs.label(),
        parabolic: p.label(),
        cell: cell_name.clone(),
        class: String::new(),
        basis: basis.into(),
        equivariant: !a.nonequivariant,
        variables: variables(g.rank()),
        coeffs: BTreeMap::new(),
        display: BTreeMap::new(),
        h_polynomial: None,
    };

    if let Some(v) = &a.times {
        let v = parse_cell(&g, v)?;
        let c = if p.is_borel() {
            csm.sm_structure_constants(w, v)?
        } else {
            let target = CohSpace::new(g.clone(), p.clone());
            sm_structure_constants_partial(&csm, &target, p.min_rep(w), p.min_rep(v))?
        };
        table.class = format!("s_SM(Y({})°) s_SM(Y({})°)", g.name(w), g.name(v));
        table.basis = "s_SM(Y(u)°)".into();
        table.equivariant = false;
        let points: Vec<WeylElement> = if p.is_borel() {
            g.elements().collect()
        } else {
            p.reps().to_vec()
        };
        for (k, x) in c.iter().enumerate() {
            if !x.is_zero() {
                table.display.insert(g.name(points[k]), x.to_string());
            }
        }
        return emit(&table, Status::Success);
    }

    let numbers_route = !p.is_borel() || a.variety || a.tangent;
    if numbers_route {
        let target = CohSpace::new(g.clone(), p.clone());
        let nums: Vec<BigRational> = if a.tangent {
            table.class = "c(T)".into();
            total_chern_numbers(&target)?
        } else if a.variety {
            table.class = format!("c_SM({base}({}))", g.name(p.min_rep(w)));
            if opposite || a.segre {
                bail!("--variety supports only CSM classes of Schubert varieties X(w)");
            }
            csm_schubert_variety(&csm, &target, w)?
        } else {
            if opposite || a.segre {
                bail!("partial flag manifolds support only CSM classes of cells X(w)");
            }
            table.class = format!("c_SM(X({})°)", g.name(p.min_rep(w)));
            target.expand_numbers(&csm_partial(&csm, &target, w)?, false)?
        };
        table.equivariant = false;
        for (k, x) in nums.iter().enumerate() {
            if !x.is_zero() {
                table.display.insert(g.name(target.point(k)), x.to_string());
            }
        }
        table.h_polynomial = Some(HSummary::new(&h_polynomial(&target, &nums)?));
        return emit(&table, Status::Success);
    }

    let space = csm.space();
    let class: CohClass = if a.dual {
        table.class = format!("c_SM^vee(Y({})°)", g.name(w));
        csm.dual_csm(w)
    } else if a.segre {
        table.class = format!("s_SM({base}({})°)", g.name(w));
        csm.sm(w, opposite, a.cap.unwrap_or(space.dim() as i32))
    } else {
        table.class = format!("c_SM({base}({})°)", g.name(w));
        if opposite {
            csm.csm_opposite(w)
        } else {
            csm.csm(w).clone()
        }
    };
    if a.nonequivariant {
        let nums = space.expand_numbers(&class, opposite)?;
        for (k, x) in nums.iter().enumerate() {
            if !x.is_zero() {
                table.display.insert(g.name(space.point(k)), x.to_string());
            }
        }
    } else {
        let series = space.expand(&class, opposite)?;
        for (k, s) in series.iter().enumerate() {
            let poly: &QPoly = s.poly();
            if !poly.is_zero() {
                let name = g.name(space.point(k));
                table
                    .coeffs
                    .insert(name.clone(), coh_to_json(g.rank(), poly));
                table.display.insert(name, coh_display(poly));
            }
        }
    }
    emit(&table, Status::Success)
}

fn hirzebruch(a: &HirzebruchArgs) -> Result<Outcome> {
    let h = Hirzebruch::of_type(&a.ty.root_system, a.cap)?;
    let g = h.space().group();
    let w = parse_cell(g, &a.cell)?;
    let n = if a.normalized {
        Normalization::Normalized
    } else {
        Normalization::Unnormalized
    };
    let class = h.hirzebruch_class(w, n)?;
    let label = if a.normalized {
        "normalized"
    } else {
        "unnormalized"
    };
    emit(
        &GradedDump::new(g, w, label, h.cap(), class.values()),
        Status::Success,
    )
}

fn hecke(a: &HeckeArgs) -> Result<Outcome> {
    let h = Hecke::of_type(&a.ty.root_system)?;
    let g = h.group();
    let w = parse_cell(g, &a.element)?;
    let t = h.t_word(w);
    let c: Vec<Laurent> = g.elements().map(|v| t.coeff(v)).collect();
    emit(
        &LaurentTable::new(g, w, format!("T_{}", g.name(w)), "D", true, &c),
        Status::Success,
    )
}

#[derive(Serialize)]
pub struct ChiReport {
    pub root_system: String,
    pub space: String,
    pub chi_y: Vec<String>,
    pub chi_minus_q: Vec<String>,
    pub display: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub geometric_agrees: Option<bool>,
}

fn chi(a: &ChiArgs) -> Result<Outcome> {
    let k = Arc::new(KTheory::of_type(&a.ty.root_system)?);
    let g = k.group();
    let (space, name, cells) = match (&a.parabolic, &a.cell) {
        (Some(s), _) => {
            let p = parse_parabolic(g, Some(s))?;
            let name = format!("G/P({})", p.label());
            let cells = p.reps().to_vec();
            (Space::Partial(p), name, cells)
        }
        (None, Some(c)) => {
            let w = parse_cell(g, c)?;
            (
                Space::Schubert(w),
                format!("X({})", g.name(w)),
                g.lower_interval(w),
            )
        }
        (None, None) => (Space::Full, "G/B".to_string(), g.elements().collect()),
    };
    let chi = chi_y(&k, &space);
    let geometric_agrees = if a.geometric {
        let mc = Motivic::new(k.clone());
        Some(mc.chi_y_geometric(&cells)? == chi)
    } else {
        None
    };
    let q = to_q(&chi);
    let report = ChiReport {
        root_system: g.root_system().label(),
        space: name,
        chi_y: chi.dense().iter().map(|c| c.to_string()).collect(),
        chi_minus_q: q.dense().iter().map(|c| c.to_string()).collect(),
        display: q.format("q"),
        geometric_agrees,
    };
    let status = if geometric_agrees == Some(false) {
        Status::Failed
    } else {
        Status::Success
    };
    emit(&report, status)
}

pub fn parse_which(s: &str) -> Result<Vec<Conjecture>> {
    if s.trim() == "all" {
        return Ok(Conjecture::ALL.to_vec());
    }
    s.split(',')
        .filter(|p| !p.trim().is_empty())
        .map(|p| p.parse::<Conjecture>().map_err(anyhow::Error::from))
        .collect()
}

fn conjectures(a: &ConjecturesArgs) -> Result<Outcome> {
    let which = parse_which(&a.which)?;
    let harness = Harness::new(&a.ty.root_system)?;
    let g = harness.motivic().ktheory().group();
    let scope = Scope {
        parabolic: match &a.parabolic {
            Some(s) => Some(parse_parabolic(g, Some(s))?.levi().to_vec()),
            None => None,
        },
        maxlen: a.maxlen,
    };
    let mut reports: Vec<ConjectureReport> = Vec::new();
    for c in which {
        reports.push(harness.run(c, &scope)?.canonical());
    }
    let status = if reports.iter().any(ConjectureReport::refuted) {
        Status::Refuted
    } else {
        Status::Success
    };
    emit(&reports, status)
}

fn verify(a: &VerifyArgs) -> Result<Outcome> {
    let mc = Motivic::of_type(&a.ty.root_system)?;
    let g = mc.ktheory().group();
    let label = g.root_system().label();
    let mut reports = Vec::new();
    for check in [
        McCheck::Words,
        McCheck::SumRule,
        McCheck::Duality,
        McCheck::Specialize,
        McCheck::Star,
        McCheck::Hecke,
        McCheck::Parabolic,
    ] {
        reports.extend(mc_checks(&mc, check, None)?);
    }

    let csm = Csm::new(mc.ktheory().group_arc());
    let mut t = Tally::new();
    for w in g.elements() {
        let direct = csm.expansion(w)?;
        let via = csm.expansion_from_mc(mc.coefficients(w)?);
        t.record(if direct == via {
            Ok(())
        } else {
            Err(schubert_core::Error::Check(format!(
                "CSM routes differ for {}",
                g.name(w)
            )))
        });
    }
    t.record(csm.check_poincare());
    reports.push(t.report("csm", &label, String::new()));

    if a.hirzebruch {
        let h = Hirzebruch::new(mc.ktheory_arc(), 2 * mc.ktheory().dim() as i32);
        let mut t = Tally::new();
        for w in g.elements() {
            for n in [Normalization::Unnormalized, Normalization::Normalized] {
                t.record(h.hirzebruch_class(w, n).map(|_| ()));
            }
            t.record(h.check_y_zero(w));
            t.record(h.check_y_minus_one(w, &csm.csm_plain(w, false)));
        }
        t.record(h.check_todd_duals());
        reports.push(t.report("hirzebruch", &label, String::new()));
    }
    let s = status_of(&reports);
    emit(&reports, s)
}
