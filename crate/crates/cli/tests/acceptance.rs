//! One PASS/FAIL line per acceptance criterion; exits non-zero on any failure.

mod oracle;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use kfin_cli::commands::Context;
use kfin_cli::reports::render_json;
use kfin_cli::verify::{default_corpus, run_verify, VerifyOptions};
use kfin_core::algebra::GroupAlgebraElement;
use kfin_core::bounds::{manifold_bounds, ManifoldFlags};
use kfin_core::formulas::{
    divisor_count, ffin_abelian, ffin_cyclic, ffin_dihedral, ffin_symmetric, partition_count,
};
use kfin_core::group::parse_group_spec_in;
use kfin_core::growth::{
    classify_gpol, conjugacy_growth, fit_polynomial_degree, majorant_partial_sums, GpolVerdict,
    MajorantParams,
};
use kfin_core::torsion::{compute_ffin, compute_ffin_in_ball};
use kfin_core::trace::{projection_pg, trace_matrix, trace_tau};
use kfin_core::{Element, Group, OrderResult, Rational};
use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, Option<u64>, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn group(spec: &str) -> Group {
    let parsed = parse_group_spec_in(spec, Some(&data_dir())).unwrap();
    Group::new(parsed).unwrap()
}

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn brute_force(g: &Group) -> Result<usize, String> {
    ensure(g.uses_brute_force_classes(), || format!("{} not enumerated", g.spec()))?;
    compute_ffin(g).map(|p| p.f_value).map_err(|e| e.to_string())
}

fn cyclic_law() -> Check {
    for n in 1..=60u64 {
        let bf = brute_force(&group(&format!("Z/{n}")))?;
        let formula = ffin_cyclic(n).unwrap().value as usize;
        let naive = oracle::divisor_count(n);
        ensure(bf == formula && bf == naive, || {
            format!("Z/{n}: brute force {bf}, formula {formula}, oracle {naive}")
        })?;
    }
    Ok("n = 1..60".into())
}

fn abelian_formula() -> Check {
    let mut shapes: Vec<Vec<u64>> = Vec::new();
    for a in 1..=10 {
        for b in 1..=10 {
            shapes.push(vec![a, b]);
        }
    }
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                shapes.push(vec![a, b, c]);
            }
        }
    }
    for ns in &shapes {
        let spec = ns.iter().map(|n| format!("Z/{n}")).collect::<Vec<_>>().join(" x ");
        let bf = brute_force(&group(&spec))?;
        let formula = ffin_abelian(ns, 0).unwrap().value as usize;
        let naive = oracle::ffin_abelian(ns);
        ensure(bf == formula && bf == naive, || {
            format!("{spec}: brute force {bf}, formula {formula}, oracle {naive}")
        })?;
    }
    Ok(format!("{} groups", shapes.len()))
}

fn dihedral_formula() -> Check {
    for n in 2..=40u64 {
        let bf = brute_force(&group(&format!("D{n}")))?;
        let formula = ffin_dihedral(n).unwrap().value as usize;
        let expected = divisor_count(n).unwrap() as usize + if n % 2 == 0 { 2 } else { 1 };
        let naive = if n == 2 {
            oracle::ffin_abelian(&[2, 2])
        } else {
            oracle::ffin_of(&oracle::dihedral(n as u16))
        };
        ensure(bf == formula && bf == expected && bf == naive, || {
            format!("D{n}: brute force {bf}, formula {formula}, expected {expected}, oracle {naive}")
        })?;
    }
    Ok("n = 2..40".into())
}

fn symmetric_formula() -> Check {
    let expected = [1usize, 2, 3, 5, 7, 11];
    for n in 1..=6usize {
        let bf = brute_force(&group(&format!("S{n}")))?;
        let formula = ffin_symmetric(n).unwrap().value as usize;
        let p = partition_count(n).to_string();
        let naive_p = oracle::partitions(n as u64, n as u64);
        let naive = oracle::ffin_of(&oracle::symmetric(n as u16));
        let want = expected[n - 1];
        ensure(
            bf == want && formula == want && naive == want && p == want.to_string() && naive_p == want as u64,
            || format!("S{n}: brute force {bf}, formula {formula}, p(n) {p}, oracle {naive}/{naive_p}"),
        )?;
    }
    Ok("p(n) = 1, 2, 3, 5, 7, 11".into())
}

fn infinite_dihedral() -> Check {
    let g = group("Dinf");
    let part = compute_ffin_in_ball(&g, 12).map_err(|e| e.to_string())?;
    let want: Vec<Element> = ["e", "x", "xy"]
        .iter()
        .map(|s| if *s == "e" { g.identity() } else { g.parse_element(s).unwrap() })
        .collect();
    let mut reps = part.representatives();
    reps.sort();
    let mut sorted_want = want.clone();
    sorted_want.sort();
    ensure(part.f_value == 3 && reps == sorted_want, || {
        format!("F = {}, reps {:?}", part.f_value, reps.iter().map(|r| r.to_string()).collect::<Vec<_>>())
    })?;

    let x = &want[1];
    let profile = conjugacy_growth(&g, x, 12).map_err(|e| e.to_string())?;
    // Reflections t -> -t + c with c even form the class of x.
    let lengths = oracle::bfs_lengths((1, 0), &[(1, 1), (1, -1), (-1, 0)], oracle::affine_mul, 12);
    let mut spheres = vec![0u64; 13];
    for (&(s, c), &l) in &lengths {
        if s == -1 && c % 2 == 0 {
            spheres[l as usize] += 1;
        }
    }
    ensure(profile.sphere_counts == spheres, || {
        format!("profile {:?}, oracle {:?}", profile.sphere_counts, spheres)
    })?;
    let fit = fit_polynomial_degree(&profile).map_err(|e| e.to_string())?;
    ensure(fit.degree <= 1, || format!("degree {}", fit.degree))?;
    Ok(format!("reps e, x, xy; C(x) degree {} (slope {:.3})", fit.degree, fit.slope))
}

fn finite_corpus() -> Vec<Group> {
    let mut specs = default_corpus();
    specs.push("table:q8.json".into());
    specs
        .iter()
        .map(|s| group(s))
        .filter(|g| matches!(g.order_of_group(), Ok(Some(n)) if n <= 500))
        .collect()
}

fn trace_matrix_shadow() -> Check {
    let groups = finite_corpus();
    ensure(groups.iter().any(|g| g.spec().to_string().starts_with("table")), || "no table group".into())?;
    for g in &groups {
        let part = compute_ffin(g).map_err(|e| e.to_string())?;
        let report = trace_matrix(g, &part.representatives()).map_err(|e| e.to_string())?;
        let m = &report.matrix;
        let n = m.len();
        let zero = Rational::from_integer(BigInt::from(0));
        for i in 0..n {
            for j in 0..i {
                ensure(m[i][j] == zero, || format!("{}: M[{i}][{j}] = {}", g.spec(), m[i][j]))?;
            }
            let floor = Rational::new(BigInt::from(1), BigInt::from(report.reps[i].order));
            ensure(m[i][i] >= floor, || format!("{}: diagonal {i} = {}", g.spec(), m[i][i]))?;
        }
        ensure(report.upper_triangular && report.diagonal_bounded, || format!("{}: report flags", g.spec()))?;
        ensure(report.rank == part.f_value && n == part.f_value, || {
            format!("{}: rank {} vs F {}", g.spec(), report.rank, part.f_value)
        })?;
    }
    Ok(format!("{} groups, including one table", groups.len()))
}

fn sample_pool(g: &Group) -> Vec<Element> {
    if g.is_finite() {
        g.enumerate_all().unwrap()
    } else {
        g.enumerate_ball(4).unwrap().iter().map(|(e, _)| e.clone()).collect()
    }
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-5i64..=5);
    }
    Rational::new(BigInt::from(p), BigInt::from(rng.gen_range(1i64..=4)))
}

fn random_sparse(rng: &mut ChaCha8Rng, pool: &[Element]) -> GroupAlgebraElement<Rational> {
    let k = rng.gen_range(1..=4);
    GroupAlgebraElement::from_terms(
        (0..k).map(|_| (pool.choose(rng).unwrap().clone(), random_rational(rng))).collect::<Vec<_>>(),
    )
}

fn projection_identities() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut groups = finite_corpus();
    groups.push(group("Dinf"));
    groups.push(group("Z/6 x Z^2"));
    groups.push(group("D4 x Z"));

    for _ in 0..100 {
        let g = groups.choose(&mut rng).unwrap();
        let torsion: Vec<Element> = sample_pool(g)
            .into_iter()
            .filter(|e| matches!(g.order(e), OrderResult::Finite(_)))
            .collect();
        let e = torsion.choose(&mut rng).unwrap();
        let p = projection_pg(g, e).map_err(|err| err.to_string())?;
        ensure(p.mul(g, &p) == p, || format!("{}: p_{e}^2 != p_{e}", g.spec()))?;
        ensure(p.star(g) == p, || format!("{}: p_{e}* != p_{e}", g.spec()))?;
    }

    let test_groups = ["Z/6", "Z/2 x Z/4", "D4", "D5", "S3", "S4", "table:q8.json", "Dinf", "Z^2", "Heis"];
    for spec in test_groups {
        let g = group(spec);
        let pool = sample_pool(&g);
        for _ in 0..200 {
            let a = random_sparse(&mut rng, &pool);
            let b = random_sparse(&mut rng, &pool);
            let h = pool.choose(&mut rng).unwrap();
            let ab = trace_tau(&g, h, &a.mul(&g, &b)).map_err(|e| e.to_string())?;
            let ba = trace_tau(&g, h, &b.mul(&g, &a)).map_err(|e| e.to_string())?;
            ensure(ab == ba, || format!("{spec}: tau_{h}(ab) = {ab}, tau_{h}(ba) = {ba}"))?;
        }
    }
    Ok(format!("100 projections, 200 pairs in each of {} groups", test_groups.len()))
}

fn growth_ground_truths() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for m in 1..=3 {
        let g = group(&format!("Z^{m}"));
        let pool = sample_pool(&g);
        for _ in 0..5 {
            let h = pool.choose(&mut rng).unwrap();
            let p = conjugacy_growth(&g, h, 8).map_err(|e| e.to_string())?;
            let fit = fit_polynomial_degree(&p).map_err(|e| e.to_string())?;
            ensure(p.class_size == Some(1) && p.cumulative.last() == Some(&1) && fit.degree == 0, || {
                format!("Z^{m}, {h}: class size {:?}, degree {}", p.class_size, fit.degree)
            })?;
        }
    }

    let heis = group("Heis");
    let a = heis.parse_element("1,0,0").unwrap();
    let profile = conjugacy_growth(&heis, &a, 8).map_err(|e| e.to_string())?;
    let lengths = oracle::bfs_lengths(
        [0i64; 3],
        &[[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0]],
        oracle::heis_mul,
        8,
    );
    let mut spheres = vec![0u64; 9];
    for (v, &l) in &lengths {
        if v[0] == 1 && v[1] == 0 {
            spheres[l as usize] += 1;
        }
    }
    ensure(profile.sphere_counts == spheres, || {
        format!("Heis profile {:?}, oracle {:?}", profile.sphere_counts, spheres)
    })?;
    let verdict = classify_gpol(&heis, &a, 8).map_err(|e| e.to_string())?;
    ensure(matches!(verdict, GpolVerdict::EmpiricalDegree { degree: 1, .. }), || {
        format!("Heis a: {verdict:?}")
    })?;

    let groups = finite_corpus();
    let mut profiles = 0;
    for g in &groups {
        let size = g.order_of_group().unwrap().unwrap();
        let radius = size.clamp(4, 64) as u32;
        for class in g.finite_classes().unwrap().reps() {
            let p = conjugacy_growth(g, class, radius).map_err(|e| e.to_string())?;
            let fit = fit_polynomial_degree(&p).map_err(|e| e.to_string())?;
            let total = *p.cumulative.last().unwrap();
            let settled = p.cumulative[p.cumulative.len() / 2] == total;
            ensure(p.complete && Some(total) == p.class_size && settled && fit.degree == 0, || {
                format!("{} class of {class}: {:?}, degree {}", g.spec(), p.cumulative, fit.degree)
            })?;
            profiles += 1;
        }
    }
    Ok(format!("Heis a degree 1; {profiles} finite profiles stabilize"))
}

fn majorant_convergence() -> Check {
    let mut worst: f64 = 0.0;
    for d in 0..=4u32 {
        let b = d.div_ceil(2) + 2;
        let params = MajorantParams { c_h: 1.0, d_h: d, b_h: b };
        let sums = majorant_partial_sums(params, 1000).map_err(|e| e.to_string())?;
        let direct = oracle::majorant_direct(1.0, d, b, 1000);
        ensure((sums.at(1000) - direct).abs() < 1e-9 * direct, || {
            format!("d = {d}: sum {} vs direct {direct}", sums.at(1000))
        })?;
        let tail = sums.at(1000) - sums.at(500);
        ensure((0.0..0.005).contains(&tail), || format!("d = {d}, b = {b}: tail {tail}"))?;
        worst = worst.max(tail);
    }
    Ok(format!("largest tail {worst:.2e} < 0.005"))
}

fn bounds_reporter() -> Check {
    let g = group("Z/6");
    let cases = [(7, Some(3), Some(4)), (5, None, Some(3)), (6, None, None)];
    for (dim, s, p) in cases {
        let r = manifold_bounds(&g, dim, ManifoldFlags::default(), 8).map_err(|e| e.to_string())?;
        ensure(r.s_bound == s && r.p_bound == p, || {
            format!("dim {dim}: s {:?}, p {:?}", r.s_bound, r.p_bound)
        })?;
        let out = Command::new(env!("CARGO_BIN_EXE_kfin"))
            .args(["--json", "bounds", "Z/6", "--dim", &dim.to_string()])
            .output()
            .map_err(|e| e.to_string())?;
        let json: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
        let field = |k: &str| json["result"][k].as_u64().map(|v| v as usize);
        ensure(field("s_bound") == s && field("p_bound") == p, || format!("kfin bounds --dim {dim}: {json}"))?;
    }
    Ok("dim 7: 3/4; dim 5: -/3; dim 6: -/-".into())
}

fn determinism() -> Check {
    let corpus = default_corpus();
    let render = |workers| {
        let options = VerifyOptions { workers, ..VerifyOptions::default() };
        let report = run_verify(&corpus, None, &options).unwrap();
        render_json("verify", &report).unwrap()
    };
    let first = render(1);
    ensure(first == render(1), || "two sequential runs differ".into())?;
    ensure(first == render(4), || "workers 1 and 4 differ".into())?;

    let ctx = Context { workers: 4, radius: 12, ..Context::default() };
    let (via_command, _) = kfin_cli::commands::run_verify_command(&ctx, None).map_err(|e| e.to_string())?;
    ensure(via_command == first, || "command driver differs from library".into())?;
    let binary = |workers: &str| {
        Command::new(env!("CARGO_BIN_EXE_kfin"))
            .args(["--json", "--radius", "12", "verify", "--workers", workers])
            .output()
            .map(|o| o.stdout)
            .map_err(|e| e.to_string())
    };
    let one = binary("1")?;
    ensure(one == binary("4")?, || "binary output differs between worker counts".into())?;
    ensure(one == first.as_bytes(), || "binary output differs from library".into())?;
    Ok(format!("{} bytes, {} groups", first.len(), corpus.len()))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("cyclic law", Some(5), cyclic_law),
        ("abelian formula", Some(20), abelian_formula),
        ("dihedral formula", Some(10), dihedral_formula),
        ("symmetric formula", Some(30), symmetric_formula),
        ("infinite dihedral", None, infinite_dihedral),
        ("trace matrix", None, trace_matrix_shadow),
        ("projection and trace identities", None, projection_identities),
        ("growth ground truths", None, growth_ground_truths),
        ("majorant convergence", None, majorant_convergence),
        ("bounds reporter", None, bounds_reporter),
        ("determinism", None, determinism),
    ];
    let mut failures = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(*s) => {
                Err(format!("took {:.2}s, limit {s}s", elapsed.as_secs_f64()))
            }
            (o, _) => o,
        };
        let (status, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failures += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status} {name}: {detail} [{:.2}s]", i + 1, elapsed.as_secs_f64());
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all 11 criteria passed");
}
