//! The verification corpus: closed forms against enumeration, trace-matrix
//! shape and rank, and sampled projection and trace identities.

use std::path::Path;

use kfin_core::algebra::GroupAlgebraElement;
use kfin_core::group::parse_group_spec_in;
use kfin_core::torsion::compute_ffin;
use kfin_core::trace::{is_projection, projection_pg, trace_matrix, trace_tau};
use kfin_core::validate::cross_validate;
use kfin_core::{Element, Group, GroupOptions, Rational};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult};

pub const DEFAULT_CORPUS: &[&str] = &[
    "Z/1", "Z/2", "Z/3", "Z/4", "Z/5", "Z/6", "Z/8", "Z/12", "Z/30", "Z/60",
    "Z/2 x Z/2", "Z/2 x Z/4", "Z/3 x Z/3", "Z/4 x Z/6", "Z/2 x Z/2 x Z/2",
    "Z/2 x Z/3", "Z/6 x Z^2", "Z", "Z^2",
    "D2", "D3", "D4", "D5", "D6", "D10", "D12",
    "Dinf",
    "S1", "S2", "S3", "S4", "S5", "S6",
];

/// Largest finite group whose trace matrix is checked.
pub const TRACE_CHECK_LIMIT: usize = 500;
/// Ball radius sampled in infinite groups.
const SAMPLE_RADIUS: u32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub group_options: GroupOptions,
    pub radius: u32,
    pub workers: usize,
    pub seed: u64,
    pub samples: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            group_options: GroupOptions::default(),
            radius: 12,
            workers: 1,
            seed: 0,
            samples: 10,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceCheck {
    pub size: usize,
    pub upper_triangular: bool,
    pub diagonal_bounded: bool,
    pub rank: usize,
    pub f_value: usize,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Default)]
pub struct IdentityCheck {
    pub projections_sampled: usize,
    pub projections_passed: usize,
    pub trace_pairs_sampled: usize,
    pub trace_pairs_passed: usize,
}

impl IdentityCheck {
    fn passed(&self) -> bool {
        self.projections_passed == self.projections_sampled
            && self.trace_pairs_passed == self.trace_pairs_sampled
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyEntry {
    pub group: String,
    pub formula_name: Option<&'static str>,
    pub formula_value: Option<u64>,
    pub brute_force_value: Option<usize>,
    pub brute_force_method: Option<&'static str>,
    pub agree: bool,
    pub trace: Option<TraceCheck>,
    pub identities: IdentityCheck,
    pub notes: Vec<String>,
    pub error: Option<String>,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub radius: u32,
    pub entries: Vec<VerifyEntry>,
    pub passed: usize,
    pub all_passed: bool,
}

/// One spec per line; blank lines and `#` comments are skipped.
pub fn load_corpus(path: &Path) -> CliResult<Vec<String>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Ok(text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(str::to_string)
        .collect())
}

fn random_sparse(rng: &mut ChaCha8Rng, pool: &[Element]) -> GroupAlgebraElement<Rational> {
    let n = rng.gen_range(1..=3);
    GroupAlgebraElement::from_terms((0..n).map(|_| {
        let g = pool.choose(rng).expect("nonempty pool").clone();
        let c = Rational::new(
            BigInt::from(rng.gen_range(-5i64..=5)),
            BigInt::from(rng.gen_range(1i64..=4)),
        );
        (g, c)
    }))
}

fn check_identities(
    group: &Group,
    class_reps: &[Element],
    samples: usize,
    rng: &mut ChaCha8Rng,
) -> kfin_core::Result<IdentityCheck> {
    let pool: Vec<Element> = if group.is_finite() {
        group.enumerate_all()?
    } else {
        group
            .enumerate_ball(SAMPLE_RADIUS)?
            .iter()
            .map(|(g, _)| g.clone())
            .collect()
    };
    let torsion: Vec<&Element> = pool.iter().filter(|g| group.order(g).finite().is_some()).collect();
    let mut check = IdentityCheck::default();
    for _ in 0..samples {
        let g = *torsion.choose(rng).expect("identity is torsion");
        check.projections_sampled += 1;
        if is_projection(group, &projection_pg(group, g)?) {
            check.projections_passed += 1;
        }
        let a = random_sparse(rng, &pool);
        let b = random_sparse(rng, &pool);
        let ab = a.mul(group, &b);
        let ba = b.mul(group, &a);
        for h in class_reps {
            check.trace_pairs_sampled += 1;
            if trace_tau(group, h, &ab)? == trace_tau(group, h, &ba)? {
                check.trace_pairs_passed += 1;
            }
        }
    }
    Ok(check)
}

fn verify_one(spec: &str, base_dir: Option<&Path>, options: &VerifyOptions, index: usize) -> VerifyEntry {
    let mut entry = VerifyEntry {
        group: spec.to_string(),
        formula_name: None,
        formula_value: None,
        brute_force_value: None,
        brute_force_method: None,
        agree: false,
        trace: None,
        identities: IdentityCheck::default(),
        notes: Vec::new(),
        error: None,
        passed: false,
    };
    let run = |entry: &mut VerifyEntry| -> kfin_core::Result<()> {
        let parsed = parse_group_spec_in(spec, base_dir)?;
        entry.group = parsed.to_string();
        let group = Group::with_options(parsed, options.group_options)?;
        let cv = cross_validate(&group, options.radius)?;
        entry.formula_name = cv.formula.as_ref().map(|f| f.formula_name);
        entry.formula_value = cv.formula.as_ref().map(|f| f.value);
        entry.brute_force_value = cv.brute_force_value;
        entry.brute_force_method = cv.brute_force_method;
        entry.agree = cv.agree;
        entry.notes = cv.notes;
        let partition = compute_ffin(&group)?;
        let reps = partition.representatives();
        let small = match group.order_of_group() {
            Ok(Some(n)) => n <= TRACE_CHECK_LIMIT,
            Ok(None) => true,
            Err(_) => false,
        };
        if small {
            let m = trace_matrix(&group, &reps)?;
            entry.trace = Some(TraceCheck {
                size: m.reps.len(),
                upper_triangular: m.upper_triangular,
                diagonal_bounded: m.diagonal_bounded,
                rank: m.rank,
                f_value: partition.f_value,
                passed: m.upper_triangular && m.diagonal_bounded && m.rank == partition.f_value,
            });
        }
        let mut rng = ChaCha8Rng::seed_from_u64(options.seed.wrapping_add(index as u64));
        entry.identities = check_identities(&group, &reps, options.samples, &mut rng)?;
        Ok(())
    };
    match run(&mut entry) {
        Ok(()) => {
            entry.passed = entry.agree
                && entry.trace.as_ref().is_none_or(|t| t.passed)
                && entry.identities.passed();
        }
        Err(e) => entry.error = Some(e.to_string()),
    }
    entry
}

/// Runs every corpus entry; output order is corpus order for any worker
/// count. Table paths resolve against `base_dir`.
pub fn run_verify(
    corpus: &[String],
    base_dir: Option<&Path>,
    options: &VerifyOptions,
) -> CliResult<VerifyReport> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.workers.max(1))
        .build()
        .map_err(|e| CliError::Pool(e.to_string()))?;
    let entries: Vec<VerifyEntry> = pool.install(|| {
        corpus
            .par_iter()
            .enumerate()
            .map(|(i, spec)| verify_one(spec, base_dir, options, i))
            .collect()
    });
    let passed = entries.iter().filter(|e| e.passed).count();
    Ok(VerifyReport {
        seed: options.seed,
        radius: options.radius,
        all_passed: passed == entries.len(),
        passed,
        entries,
    })
}

pub fn default_corpus() -> Vec<String> {
    DEFAULT_CORPUS.iter().map(|s| s.to_string()).collect()
}
