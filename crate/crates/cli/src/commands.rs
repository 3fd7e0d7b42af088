use serde::Serialize;
use vwc_core::criteria::{cm_criterion_vwc, cm_weighted_vwc, cross_validate, unmixed_criterion_vwc, CampaignConfig};
use vwc_core::datasets::Dataset;
use vwc_core::graph::{is_very_well_covered, star_labeling, VwcLabeling, WeightedGraph, WeightedVwcGraph};
use vwc_core::homology::{
    depth_via_hochster, is_cm_complex, is_cm_reisner, projective_dimension, reduced_homology, serre_complex,
    serre_sk, serre_sk_polarized, stanley_reisner, FieldSpec,
};
use vwc_core::ideal::{height, is_unmixed, krull_dim, minimal_primes, polarize};
use vwc_core::io::{ideal_file, Input};
use vwc_core::{CriterionReport, Error, Limits, Result};

use crate::report::{Mismatch, MismatchSide, Outcome, Witness};

/// Which of the two decision paths to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Criterion,
    Oracle,
    Both,
}

impl Mode {
    fn criterion(self) -> bool {
        self != Mode::Oracle
    }

    fn oracle(self) -> bool {
        self != Mode::Criterion
    }
}

pub struct Ctx {
    pub field: FieldSpec,
    pub limits: Limits,
}

fn with_labeling(graph: &WeightedGraph, labeling: &Option<VwcLabeling>) -> Result<WeightedVwcGraph> {
    let l = match labeling {
        Some(l) => l.clone(),
        None => star_labeling(graph.graph())?,
    };
    WeightedVwcGraph::new(graph.clone(), l)
}

fn is_unit_weighted(graph: &WeightedGraph) -> bool {
    graph.weighted_edges().all(|(_, _, w)| w == 1)
}

fn var_name(v: usize) -> String {
    format!("x{}", v + 1)
}

fn evidence(report: &CriterionReport, certificate: String) -> Vec<String> {
    if report.verdict() {
        vec![certificate]
    } else {
        report.violations().iter().map(|v| format!("{}: {}", v.clause, v.detail)).collect()
    }
}

fn labeling_text(l: &VwcLabeling) -> String {
    format!("X = {:?}, Y = {:?}", l.x, l.y)
}

fn compare(o: &mut Outcome, left: (&str, &CriterionReport, String), right: (&str, &CriterionReport, String)) {
    if left.1.verdict() != right.1.verdict() {
        o.mismatch = Some(Mismatch {
            left: MismatchSide { check: left.0.into(), verdict: left.1.verdict(), evidence: evidence(left.1, left.2) },
            right: MismatchSide {
                check: right.0.into(),
                verdict: right.1.verdict(),
                evidence: evidence(right.1, right.2),
            },
        });
    }
}

fn graph_mode(requested: Option<Mode>, input: &Input) -> Result<Mode> {
    match (requested, input) {
        (Some(m), Input::Graph { .. }) => Ok(m),
        (None, Input::Graph { graph, .. }) => {
            Ok(if is_very_well_covered(graph.graph())? { Mode::Both } else { Mode::Oracle })
        }
        (Some(Mode::Oracle) | None, _) => Ok(Mode::Oracle),
        (Some(_), other) => Err(Error::InvalidInput(format!(
            "the combinatorial criterion needs a graph input, got {}",
            other.kind()
        ))),
    }
}

pub fn check_unmixed(ctx: &Ctx, input: &Input, mode: Option<Mode>) -> Result<Outcome> {
    let mode = graph_mode(mode, input)?;
    let mut o = Outcome::default();
    let mut criterion = None;
    if mode.criterion() {
        let Input::Graph { graph, labeling, .. } = input else { unreachable!() };
        let gw = with_labeling(graph, labeling)?;
        let report = o.timed("criterion", || unmixed_criterion_vwc(&gw))?;
        o.verdict("criterion", &report);
        o.set("labeling", gw.labeling());
        criterion = Some((report, format!("every inequality holds under {}", labeling_text(gw.labeling()))));
    }
    if mode.oracle() {
        let ideal = input.ideal()?;
        let report = o.timed("bruteforce", || is_unmixed(&ideal, &ctx.limits))?;
        o.verdict("bruteforce", &report);
        let h = height(&ideal)?;
        o.row("height", h);
        o.set("height", h);
        o.set("polarized_variables", polarize(&ideal).nvars());
        if let Some((c, cert)) = &criterion {
            compare(
                &mut o,
                ("criterion", c, cert.clone()),
                ("bruteforce", &report, format!("every minimal prime of the polarization has height {h}")),
            );
        }
    }
    Ok(o)
}

pub fn check_cm(ctx: &Ctx, input: &Input, mode: Option<Mode>) -> Result<Outcome> {
    let explicit = mode.is_some();
    let mode = graph_mode(mode, input)?;
    let mut o = Outcome::default();
    let mut criterion = None;
    if mode.criterion() {
        let Input::Graph { graph, labeling, .. } = input else { unreachable!() };
        let run = || -> Result<(CriterionReport, String)> {
            if is_unit_weighted(graph) {
                let r = cm_criterion_vwc(graph.graph())?;
                Ok((r, "a (**) order exists and the structural conditions hold".into()))
            } else {
                let gw = with_labeling(graph, labeling)?;
                let r = cm_weighted_vwc(&gw)?;
                Ok((r, format!("base graph is Cohen-Macaulay and every inequality holds under {}", labeling_text(gw.labeling()))))
            }
        };
        match o.timed("criterion", run) {
            Ok((report, cert)) => {
                o.verdict("criterion", &report);
                criterion = Some((report, cert));
            }
            Err(Error::Precondition(why)) if !explicit => o.notes.push(format!("criterion not applicable: {why}")),
            Err(e) => return Err(e),
        }
    }
    if mode.oracle() {
        let report = match input {
            Input::Complex(c) => o.timed("homology", || is_cm_complex(c, ctx.field, &ctx.limits))?,
            _ => {
                let ideal = input.ideal()?;
                o.timed("homology", || is_cm_reisner(&ideal, ctx.field, &ctx.limits))?
            }
        };
        o.verdict("homology", &report);
        if let Some((c, cert)) = &criterion {
            compare(
                &mut o,
                ("criterion", c, cert.clone()),
                ("homology", &report, "every link has vanishing reduced homology below its dimension".into()),
            );
        }
    }
    Ok(o)
}

pub fn check_serre(ctx: &Ctx, input: &Input, s: u32) -> Result<Outcome> {
    let mut o = Outcome::default();
    let key = format!("serre_s{s}");
    let (report, polarized) = match input {
        Input::Complex(c) => (o.timed(&key, || serre_complex(c, s, ctx.field, &ctx.limits))?, false),
        _ => {
            let ideal = input.ideal()?;
            if ideal.is_squarefree() {
                (o.timed(&key, || serre_sk(&ideal, s, ctx.field, &ctx.limits))?, false)
            } else {
                let pol = polarize(&ideal);
                let r = o.timed(&key, || serre_sk_polarized(&ideal, s, ctx.field, &ctx.limits))?;
                o.notes.push(format!(
                    "S_{s} status of the polarized ideal ({} variables); the ideal itself is not squarefree",
                    pol.nvars()
                ));
                (r, true)
            }
        }
    };
    o.verdict(&key, &report);
    o.row("polarized", polarized);
    o.set("s", s);
    o.set("polarized", polarized);
    Ok(o)
}

pub fn depth(ctx: &Ctx, input: &Input) -> Result<Outcome> {
    let mut o = Outcome::default();
    let ideal = input.ideal()?;
    let pd = o.timed("depth", || projective_dimension(&ideal, ctx.field, &ctx.limits))?;
    let depth = ideal.nvars() - pd;
    let dim = krull_dim(&ideal)?;
    for (k, v) in [("depth", depth), ("projective_dimension", pd), ("dim", dim)] {
        o.row(k, v);
        o.set(k, v);
    }
    Ok(o)
}

pub fn dim(input: &Input) -> Result<Outcome> {
    let mut o = Outcome::default();
    let ideal = input.ideal()?;
    let d = o.timed("dim", || krull_dim(&ideal))?;
    let h = height(&ideal)?;
    for (k, v) in [("dim", d), ("height", h), ("nvars", ideal.nvars())] {
        o.row(k, v);
        o.set(k, v);
    }
    Ok(o)
}

pub fn min_primes(input: &Input) -> Result<Outcome> {
    let mut o = Outcome::default();
    let ideal = input.ideal()?;
    let primes = o.timed("min_primes", || minimal_primes(&ideal))?;
    let named: Vec<Vec<String>> =
        primes.primes.iter().map(|p| p.iter().map(|&v| var_name(v)).collect()).collect();
    o.text = Some(named.iter().map(|p| p.join(" ")).collect());
    for (j, p) in named.iter().enumerate() {
        o.row(&format!("P{}", j + 1), p.join(" "));
    }
    o.set("primes", &named);
    o.set("heights", primes.heights());
    Ok(o)
}

pub fn polarize_cmd(input: &Input) -> Result<Outcome> {
    let mut o = Outcome::default();
    let ideal = input.ideal()?;
    let pol = o.timed("polarize", || polarize(&ideal));
    let names: Vec<String> = (0..pol.nvars()).map(|v| pol.name(v)).collect();
    let gens: Vec<String> = pol.ideal.gens().iter().map(|g| g.display_with(|v| pol.name(v))).collect();
    o.text = Some(vec![format!("({})", gens.join(", "))]);
    o.row("nvars", pol.nvars());
    o.row("ideal", format!("({})", gens.join(", ")));
    o.set("nvars", pol.nvars());
    o.set("variables", names);
    o.set("ideal", ideal_file(&pol.ideal));
    o.set("generators", gens);
    Ok(o)
}

#[derive(Serialize)]
struct Rank {
    degree: i32,
    rank: usize,
}

pub fn homology(ctx: &Ctx, input: &Input) -> Result<Outcome> {
    let mut o = Outcome::default();
    let complex = match input {
        Input::Complex(c) => c.clone(),
        _ => {
            let ideal = input.ideal()?;
            if ideal.is_squarefree() {
                stanley_reisner(&ideal)?
            } else {
                let pol = polarize(&ideal);
                o.notes.push(format!("complex of the polarization ({} variables)", pol.nvars()));
                stanley_reisner(&pol.ideal)?
            }
        }
    };
    let profile = o.timed("homology", || reduced_homology(&complex, ctx.field, &ctx.limits))?;
    let top = complex.dim().unwrap_or(-1);
    let ranks: Vec<Rank> = (-1..=top).map(|i| Rank { degree: i, rank: profile.rank(i) }).collect();
    o.row("dim", top);
    for r in &ranks {
        o.row(&format!("H~_{}", r.degree), r.rank);
    }
    o.set("dim", top);
    o.set("ranks", &ranks);
    o.set("f_vector", complex.f_vector());
    o.set("euler_characteristic", complex.reduced_euler_characteristic());
    o.set("facets", complex.facets());
    Ok(o)
}

pub fn fuzz(ctx: &Ctx, config: CampaignConfig) -> Result<Outcome> {
    let mut o = Outcome::default();
    let summary = o.timed("fuzz", || cross_validate(&config, &ctx.limits))?;
    o.verdicts.insert("no_mismatches".into(), summary.clean());
    o.row("no_mismatches", summary.clean());
    o.row("instances", summary.instances);
    o.row("skipped", summary.skipped);
    o.row("unmixed_mismatches", summary.unmixed_mismatches);
    o.row("cm_base", summary.cm_base);
    o.row("cm_mismatches", summary.cm_mismatches);
    o.row("o_i_checks", summary.o_i_checks);
    o.row("o_i_violations", summary.o_i_violations);
    o.row("four_cycle_checks", summary.four_cycle_checks);
    o.row("four_cycle_violations", summary.four_cycle_violations);
    if let Some(seed) = summary.first_failing_seed {
        o.row("first_failing_seed", seed);
    }
    o.notes.extend(summary.failures.iter().cloned());
    o.set("config", config);
    o.set("summary", &summary);
    Ok(o)
}

#[derive(Serialize)]
struct Check {
    quantity: &'static str,
    expected: Option<String>,
    got: String,
    status: &'static str,
}

#[derive(Serialize)]
struct DatasetReport {
    name: &'static str,
    input_sha256: String,
    checks: Vec<Check>,
}

fn checks_for(ctx: &Ctx, d: Dataset, o: &mut Outcome) -> Result<Vec<Check>> {
    let exp = d.expected();
    let ideal = d.ideal();
    let char0 = ctx.field.is_rational();
    let mut checks = Vec::new();
    let mut push = |quantity, expected: Option<String>, got: String, compared: bool| {
        let status = match (&expected, compared) {
            (None, _) => "reported",
            (Some(_), false) => "not compared",
            (Some(e), true) if *e == got => "match",
            _ => "MISMATCH",
        };
        checks.push(Check { quantity, expected, got, status });
    };
    push("generators as displayed", Some("true".into()), (ideal == d.displayed_ideal()).to_string(), true);

    let key = |what: &str| format!("{}.{what}", d.name());
    let unmixed = o.timed(&key("unmixed"), || is_unmixed(&ideal, &ctx.limits))?;
    push("unmixed", Some(exp.unmixed.to_string()), unmixed.verdict().to_string(), true);
    push("height", Some(exp.height.to_string()), height(&ideal)?.to_string(), true);
    push("dim", Some(exp.dim.to_string()), krull_dim(&ideal)?.to_string(), true);

    let cm = o.timed(&key("reisner"), || is_cm_reisner(&ideal, ctx.field, &ctx.limits))?;
    push("Cohen-Macaulay (Reisner)", Some(exp.cohen_macaulay_char0.to_string()), cm.verdict().to_string(), char0);
    o.witnesses.extend(cm.violations().iter().map(|v| Witness {
        source: key("reisner"),
        violation: v.clone(),
    }));
    let depth = o.timed(&key("depth"), || depth_via_hochster(&ideal, ctx.field, &ctx.limits))?;
    push("depth (Hochster)", exp.depth_char0.map(|x| x.to_string()), depth.to_string(), char0);

    let s2 = o.timed(&key("serre_s2"), || serre_sk_polarized(&ideal, 2, ctx.field, &ctx.limits))?;
    let got = s2.verdict().to_string();
    let status = match exp.serre_s2 {
        Some(e) if e.to_string() == got => "exploratory: agrees",
        Some(_) => "exploratory: differs",
        None => "reported",
    };
    checks.push(Check {
        quantity: "S_2 (polarized-complex status)",
        expected: exp.serre_s2.map(|e| e.to_string()),
        got,
        status,
    });
    Ok(checks)
}

pub fn paper_examples(ctx: &Ctx, names: &[String]) -> Result<Outcome> {
    let sets: Vec<Dataset> = if names.is_empty() {
        Dataset::ALL.to_vec()
    } else {
        names.iter().map(|n| n.parse()).collect::<Result<_>>()?
    };
    let mut o = Outcome::default();
    let mut reports = Vec::new();
    for d in sets {
        let checks = checks_for(ctx, d, &mut o)?;
        let ok = checks.iter().all(|c| c.status != "MISMATCH");
        o.verdicts.insert(d.name().to_string(), ok);
        for c in &checks {
            let expected = c.expected.as_deref().unwrap_or("-");
            o.row(&format!("{} {}", d.name(), c.quantity), format!("{} (expected {expected}; {})", c.got, c.status));
        }
        let text = serde_json::to_string(&d.input().to_json()).expect("plain data serializes");
        reports.push(DatasetReport { name: d.name(), input_sha256: crate::sha256_hex(text.as_bytes()), checks });
    }
    if !ctx.field.is_rational() {
        o.notes.push(format!(
            "reference values are for characteristic 0; Cohen-Macaulay and depth rows over characteristic {} are not compared",
            ctx.field.characteristic()
        ));
    }
    o.set("datasets", reports);
    Ok(o)
}
