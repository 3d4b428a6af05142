//! Subcommand drivers. Each returns the rendered report.

use std::path::Path;

use kfin_core::bounds::{manifold_bounds, ManifoldFlags};
use kfin_core::formulas::formula_for;
use kfin_core::group::parse_group_spec_in;
use kfin_core::growth::{classify_gpol, conjugacy_growth, fit_polynomial_degree};
use kfin_core::torsion::{compute_ffin_pol, is_polynomially_full};
use kfin_core::trace::trace_matrix;
use kfin_core::{Group, GroupOptions};

use crate::cache::{cache_key, Cache};
use crate::error::CliResult;
use crate::reports::{
    render_json, table_bounds, table_ffin, table_growth, table_trace, table_verify, FfinClassReport,
    FfinReport, Format, GrowthReport,
};
use crate::verify::{default_corpus, load_corpus, run_verify, VerifyOptions};

#[derive(Debug, Clone)]
pub struct Context {
    pub options: GroupOptions,
    pub radius: u32,
    pub format: Format,
    pub cache: Option<Cache>,
    pub seed: u64,
    pub workers: usize,
}

impl Default for Context {
    fn default() -> Self {
        Context {
            options: GroupOptions::default(),
            radius: 8,
            format: Format::Json,
            cache: None,
            seed: 0,
            workers: 1,
        }
    }
}

impl Context {
    fn group(&self, spec: &str) -> CliResult<Group> {
        let parsed = parse_group_spec_in(spec, None)?;
        Ok(Group::with_options(parsed, self.options)?)
    }

    fn base_params(&self) -> Vec<(&'static str, String)> {
        vec![
            ("radius", self.radius.to_string()),
            ("order_cap", self.options.order_cap.to_string()),
            ("enumeration_cap", self.options.enumeration_cap.to_string()),
            ("ball_cap", self.options.ball_cap.to_string()),
        ]
    }

    /// JSON output goes through the cache when one is configured.
    fn emit(
        &self,
        identity: &str,
        operation: &str,
        params: Vec<(&'static str, String)>,
        json: impl FnOnce() -> CliResult<String>,
        table: impl FnOnce() -> CliResult<String>,
    ) -> CliResult<String> {
        match (self.format, &self.cache) {
            (Format::Table, _) => table(),
            (Format::Json, None) => json(),
            (Format::Json, Some(cache)) => {
                let key = cache_key(identity, operation, &params);
                cache.get_or_compute(&key, json)
            }
        }
    }
}

fn ffin_report(ctx: &Context, group: &Group) -> CliResult<FfinReport> {
    let pol = compute_ffin_pol(group, ctx.radius)?;
    let poly_full = is_polynomially_full(group, ctx.radius)?;
    let formula = formula_for(group.spec()).transpose()?;
    Ok(FfinReport {
        group: pol.partition.group.clone(),
        f_value: pol.partition.f_value,
        f_pol_value: pol.f_pol_value,
        exact: pol.partition.exact,
        radius: ctx.radius,
        poly_full,
        classes: pol
            .partition
            .classes
            .iter()
            .zip(&pol.verdicts)
            .map(|(c, v)| FfinClassReport {
                representative: c.representative.clone(),
                order: c.order,
                members: c.members.clone(),
                growth: v.clone(),
            })
            .collect(),
        formula,
        warnings: pol.partition.warnings.clone(),
    })
}

pub fn run_ffin(ctx: &Context, spec: &str) -> CliResult<String> {
    let group = ctx.group(spec)?;
    let id = format!("{:?}", group.spec());
    ctx.emit(
        &id,
        "ffin",
        ctx.base_params(),
        || render_json("ffin", &ffin_report(ctx, &group)?),
        || Ok(table_ffin(&ffin_report(ctx, &group)?)),
    )
}

fn growth_report(ctx: &Context, group: &Group, element: &str) -> CliResult<GrowthReport> {
    let h = group.parse_element(element)?;
    let profile = conjugacy_growth(group, &h, ctx.radius)?;
    let (fit, fit_error) = match fit_polynomial_degree(&profile) {
        Ok(f) => (Some(f), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(GrowthReport {
        verdict: classify_gpol(group, &h, ctx.radius)?,
        profile,
        fit,
        fit_error,
    })
}

pub fn run_growth(ctx: &Context, spec: &str, element: &str) -> CliResult<String> {
    let group = ctx.group(spec)?;
    let id = format!("{:?}", group.spec());
    let mut params = ctx.base_params();
    params.push(("element", group.parse_element(element)?.to_string()));
    ctx.emit(
        &id,
        "growth",
        params,
        || render_json("growth", &growth_report(ctx, &group, element)?),
        || Ok(table_growth(&growth_report(ctx, &group, element)?)),
    )
}

pub fn run_trace_matrix(ctx: &Context, spec: &str) -> CliResult<String> {
    let group = ctx.group(spec)?;
    let id = format!("{:?}", group.spec());
    let report = || -> CliResult<_> {
        let reps = kfin_core::torsion::compute_ffin(&group)?.representatives();
        Ok(trace_matrix(&group, &reps)?)
    };
    ctx.emit(
        &id,
        "trace-matrix",
        ctx.base_params(),
        || render_json("trace-matrix", &report()?),
        || Ok(table_trace(&report()?)),
    )
}

pub fn run_bounds(ctx: &Context, spec: &str, dim: u32, flags: ManifoldFlags) -> CliResult<String> {
    let group = ctx.group(spec)?;
    let id = format!("{:?}", group.spec());
    let mut params = ctx.base_params();
    params.push(("dim", dim.to_string()));
    params.push(("oriented", flags.oriented.to_string()));
    params.push(("spin_psc", flags.spin_psc.to_string()));
    let report = || manifold_bounds(&group, dim, flags, ctx.radius);
    ctx.emit(
        &id,
        "bounds",
        params,
        || render_json("bounds", &report()?),
        || Ok(table_bounds(&report()?)),
    )
}

/// Returns the rendered report and whether every entry passed.
pub fn run_verify_command(ctx: &Context, corpus_file: Option<&Path>) -> CliResult<(String, bool)> {
    let corpus = match corpus_file {
        Some(p) => load_corpus(p)?,
        None => default_corpus(),
    };
    let base_dir = corpus_file.and_then(Path::parent);
    let options = VerifyOptions {
        group_options: ctx.options,
        radius: ctx.radius,
        workers: ctx.workers,
        seed: ctx.seed,
        ..VerifyOptions::default()
    };
    let report = run_verify(&corpus, base_dir, &options)?;
    let text = match ctx.format {
        Format::Json => render_json("verify", &report)?,
        Format::Table => table_verify(&report),
    };
    Ok((text, report.all_passed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn json(text: &str) -> serde_json::Value {
        serde_json::from_str(text).unwrap()
    }

    #[test]
    fn ffin_and_trace() {
        let ctx = Context::default();
        let v = json(&run_ffin(&ctx, "Z/6").unwrap());
        assert_eq!(v["schema"], "kfin-report/1");
        assert_eq!(v["result"]["f_value"], 4);
        let v = json(&run_trace_matrix(&ctx, "Z/4").unwrap());
        assert_eq!(v["result"]["upper_triangular"], true);
        assert_eq!(v["result"]["rank"], 3);
    }

    #[test]
    fn cache_is_transparent() {
        let dir = tempfile::tempdir().unwrap();
        let fresh = run_ffin(&Context::default(), "D4").unwrap();
        let ctx = Context {
            cache: Some(Cache::new(dir.path()).unwrap()),
            ..Context::default()
        };
        let first = run_ffin(&ctx, "D4").unwrap();
        let second = run_ffin(&ctx, "D4").unwrap();
        assert_eq!(fresh, first);
        assert_eq!(first, second);
        assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
    }

    #[test]
    fn growth_table() {
        let ctx = Context {
            format: Format::Table,
            radius: 6,
            ..Context::default()
        };
        let t = run_growth(&ctx, "Z^2", "1,0").unwrap();
        assert!(t.starts_with("l\tn\tcumulative\n0\t0\t0\n1\t1\t1\n"));
    }
}
