//! Versioned JSON reports and their plain-text table renderings.

use std::fmt::Write as _;

use kfin_core::bounds::BoundsReport;
use kfin_core::formulas::FormulaResult;
use kfin_core::growth::{GpolVerdict, GrowthProfile};
use kfin_core::scalar::ratio_string;
use kfin_core::torsion::PolyFullVerdict;
use kfin_core::trace::TraceMatrixReport;
use kfin_core::{DegreeFit, Element};
use serde::Serialize;

use crate::error::CliResult;
use crate::verify::VerifyReport;

pub const SCHEMA: &str = "kfin-report/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Serialize)]
struct Envelope<'a, T> {
    schema: &'static str,
    command: &'a str,
    result: &'a T,
}

/// Pretty JSON with a trailing newline.
pub fn render_json<T: Serialize>(command: &str, result: &T) -> CliResult<String> {
    let mut s = serde_json::to_string_pretty(&Envelope {
        schema: SCHEMA,
        command,
        result,
    })?;
    s.push('\n');
    Ok(s)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FfinClassReport {
    pub representative: Element,
    pub order: u64,
    pub members: Vec<Element>,
    pub growth: GpolVerdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FfinReport {
    pub group: String,
    pub f_value: usize,
    pub f_pol_value: usize,
    pub exact: bool,
    pub radius: u32,
    pub poly_full: PolyFullVerdict,
    pub classes: Vec<FfinClassReport>,
    pub formula: Option<FormulaResult>,
    pub warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GrowthReport {
    pub profile: GrowthProfile,
    pub fit: Option<DegreeFit>,
    pub fit_error: Option<String>,
    pub verdict: GpolVerdict,
}

fn verdict_text(v: &GpolVerdict) -> String {
    match v {
        GpolVerdict::CertifiedPolynomial { reason } => format!("certified ({reason})"),
        GpolVerdict::EmpiricalDegree { degree, radius, .. } => {
            format!("empirical degree {degree} at R={radius}")
        }
        GpolVerdict::Inconclusive { radius, .. } => format!("inconclusive at R={radius}"),
    }
}

fn poly_full_text(v: &PolyFullVerdict) -> String {
    match v {
        PolyFullVerdict::CertifiedTrue { reason } => format!("certified ({reason})"),
        PolyFullVerdict::EmpiricallyConsistent { radius } => format!("consistent at R={radius}"),
        PolyFullVerdict::EmpiricallyRefuted { radius } => format!("refuted at R={radius}"),
    }
}

pub fn table_ffin(r: &FfinReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group\t{}", r.group);
    let _ = writeln!(out, "F\t{}", r.f_value);
    let _ = writeln!(out, "F_pol\t{}", r.f_pol_value);
    let _ = writeln!(out, "polynomially_full\t{}", poly_full_text(&r.poly_full));
    let _ = writeln!(out, "order\trepresentative\tclasses\tgrowth");
    for c in &r.classes {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{}",
            c.order,
            c.representative,
            c.members.len(),
            verdict_text(&c.growth)
        );
    }
    for w in &r.warnings {
        let _ = writeln!(out, "warning\t{w}");
    }
    out
}

pub fn table_growth(r: &GrowthReport) -> String {
    let mut out = r.profile.to_tsv();
    if let Some(fit) = &r.fit {
        let _ = writeln!(
            out,
            "# degree {} slope {:.4} residual {:.4} constant {:.4}",
            fit.degree, fit.slope, fit.residual, fit.constant
        );
    }
    let _ = writeln!(out, "# {}", verdict_text(&r.verdict));
    out
}

pub fn table_trace(r: &TraceMatrixReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group\t{}", r.group);
    let header: Vec<String> = r.reps.iter().map(|s| format!("{} (d={})", s.element, s.order)).collect();
    let _ = writeln!(out, "reps\t{}", header.join("\t"));
    for (rep, row) in r.reps.iter().zip(&r.matrix) {
        let cells: Vec<String> = row.iter().map(ratio_string).collect();
        let _ = writeln!(out, "{}\t{}", rep.element, cells.join("\t"));
    }
    let _ = writeln!(out, "upper_triangular\t{}", r.upper_triangular);
    let _ = writeln!(out, "diagonal_bounded\t{}", r.diagonal_bounded);
    let _ = writeln!(out, "rank\t{}", r.rank);
    out
}

fn opt(v: Option<usize>) -> String {
    v.map_or_else(|| "absent".into(), |x| x.to_string())
}

pub fn table_bounds(r: &BoundsReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "group\t{}", r.group);
    let _ = writeln!(out, "F\t{}", r.f_value);
    let _ = writeln!(out, "F_pol\t{}", r.f_pol_value);
    let _ = writeln!(out, "polynomially_full\t{}", poly_full_text(&r.poly_full));
    if let Some(d) = r.manifold_dim {
        let _ = writeln!(out, "dim\t{d}");
    }
    let _ = writeln!(out, "s_bound\t{}", opt(r.s_bound));
    let _ = writeln!(out, "p_bound\t{}", opt(r.p_bound));
    for n in &r.applicability {
        let _ = writeln!(out, "note\t{}\t{}", n.bound, n.note);
    }
    let _ = writeln!(out, "confidence\t{}", r.confidence);
    out
}

pub fn table_verify(r: &VerifyReport) -> String {
    let mut out = String::new();
    for e in &r.entries {
        let _ = writeln!(
            out,
            "{}\t{}\tformula={}\tbrute_force={}",
            if e.passed { "PASS" } else { "FAIL" },
            e.group,
            e.formula_value.map_or_else(|| "-".into(), |v| v.to_string()),
            e.brute_force_value.map_or_else(|| "-".into(), |v| v.to_string()),
        );
    }
    let _ = writeln!(out, "passed\t{}/{}", r.passed, r.entries.len());
    out
}
