//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::time::Instant;

use clap::Parser;
use fatpoints::combinatorics::{critical_counts, virtual_dim_bi};
use fatpoints::formulas::{hf_m_ge_b, hf_triple, hf_uniform};
use fatpoints::horace::{
    castelnuovo_check, diff_slice, horace_verify, specialize_triple_step1, specialize_triple_step2,
    triple_chain, LineConfiguration,
};
use fatpoints::oracle::{check_reduction, hf_biproj, hf_plane, hf_uniform_oracle};
use fatpoints::{BiDegree, OracleConfig, PlaneScheme, SliceProfile, UniformFatPoints};
use fatpoints_cli::{run, Cli, OutputRecord};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

#[path = "../../core/tests/support/program.rs"]
mod program;

type Check = Result<String, String>;

fn pts(s: u64, m: u64) -> UniformFatPoints {
    UniformFatPoints::new(s, m).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn oracle() -> OracleConfig {
    OracleConfig::default()
}

/// Compares `(label, formula, oracle)` triples computed in parallel.
fn agree(cases: Vec<(String, u64, Result<u64, String>)>) -> Check {
    let n = cases.len();
    let bad: Vec<String> = cases
        .into_iter()
        .filter_map(|(label, f, o)| match o {
            Ok(o) if o == f => None,
            Ok(o) => Some(format!("{label}: formula {f}, oracle {o}")),
            Err(e) => Some(format!("{label}: {e}")),
        })
        .collect();
    match bad.first() {
        None => Ok(format!("{n} instances agree")),
        Some(first) => Err(format!("{} of {n} disagree, first {first}", bad.len())),
    }
}

fn example_table() -> Check {
    let argv = [
        "fatpoints",
        "table",
        "--m",
        "5",
        "--s",
        "5",
        "--amax",
        "25",
        "--bmax",
        "18",
        "--oracle-unknown",
        "--format",
        "json",
    ];
    let cli = Cli::try_parse_from(argv).map_err(|e| e.to_string())?;
    let out = run(&cli).map_err(|e| e.to_string())?;
    let recs: Vec<OutputRecord> = serde_json::from_str(&out.output).map_err(|e| e.to_string())?;

    let golden = include_str!("golden/m5_s5_published.txt");
    let published: Vec<Vec<u64>> = golden
        .lines()
        .filter(|l| !l.starts_with('#'))
        .map(|l| {
            l.split_whitespace()
                .map(|c| c.trim_end_matches('*').parse().unwrap())
                .collect()
        })
        .collect();
    ensure(recs.len() == 26 * 19, || format!("{} cells", recs.len()))?;
    for r in &recs {
        let want = published[r.b as usize][r.a as usize];
        ensure(r.value == Some(want), || {
            format!("({}, {}) = {:?}, published {want}", r.a, r.b, r.value)
        })?;
    }
    let at = |a: u64, b: u64| recs.iter().find(|r| (r.a, r.b) == (a, b)).unwrap().value;
    for (a, b, v) in [
        (13, 4, 69),
        (14, 4, 72),
        (15, 4, 74),
        (16, 4, 75),
        (10, 5, 65),
        (8, 7, 71),
        (23, 1, 45),
        (25, 18, 75),
    ] {
        ensure(at(a, b) == Some(v), || format!("anchor ({a}, {b})"))?;
    }
    Ok("494 cells equal the published table".into())
}

fn triple_vs_oracle() -> Check {
    let grid: Vec<(u64, u64, u64)> = (1..=12)
        .flat_map(|a| (1..=12).flat_map(move |b| (1..=12).map(move |s| (a, b, s))))
        .collect();
    let cfg = oracle();
    agree(
        grid.par_iter()
            .map(|&(a, b, s)| {
                let deg = BiDegree::new(a, b);
                let f = hf_triple(deg, s).value;
                let o = hf_uniform_oracle(deg, pts(s, 3), &cfg).map_err(|e| e.to_string());
                (format!("({a},{b}) s={s}"), f, o)
            })
            .collect(),
    )
}

fn m_ge_b_vs_oracle() -> Check {
    let mut grid = Vec::new();
    for m in 2..=6u64 {
        for b in 0..=m {
            for a in b..=20 {
                for s in 0..=10 {
                    grid.push((a, b, m, s));
                }
            }
        }
    }
    let cfg = oracle();
    agree(
        grid.par_iter()
            .map(|&(a, b, m, s)| {
                let deg = BiDegree::new(a, b);
                let f = hf_m_ge_b(deg, pts(s, m)).unwrap().value;
                let o = hf_uniform_oracle(deg, pts(s, m), &cfg).map_err(|e| e.to_string());
                (format!("({a},{b}) m={m} s={s}"), f, o)
            })
            .collect(),
    )
}

fn reductions() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let cases: Vec<(u64, u64, u64, u64)> = (0..200)
        .map(|_| {
            (
                rng.gen_range(0..=8),
                rng.gen_range(0..=8),
                rng.gen_range(1..=4),
                rng.gen_range(0..=6),
            )
        })
        .collect();
    let cfg = oracle();
    let failed: Vec<String> = cases
        .par_iter()
        .filter_map(
            |&(a, b, m, s)| match check_reduction(BiDegree::new(a, b), pts(s, m), &cfg) {
                Ok(true) => None,
                Ok(false) => Some(format!("({a},{b}) m={m} s={s}")),
                Err(e) => Some(e.to_string()),
            },
        )
        .collect();
    match failed.first() {
        None => Ok("200 random instances: P1xP1 and plane dimensions equal".into()),
        Some(f) => Err(format!("{} failures, first {f}", failed.len())),
    }
}

fn defective_family() -> Check {
    let mut seen = Vec::new();
    for m in 3..=5u64 {
        let deg = BiDegree::new((2 * m - 1) * (m - 2), m + 1);
        let p = pts(4 * m - 7, m);
        let ideal =
            deg.piece_dim() - hf_uniform_oracle(deg, p, &oracle()).map_err(|e| e.to_string())?;
        let want = ((m as i64 - 3) * (m as i64 - 4) / 2 + 1) as u64;
        ensure(ideal == want, || {
            format!("m={m}: ideal dim {ideal}, expected {want}")
        })?;
        ensure(virtual_dim_bi(deg, p) == want as i64 - 1, || {
            format!("m={m}: defect is not 1")
        })?;
        let formula = hf_uniform(deg, p).unwrap();
        ensure(formula.value().map(|v| v.defect) == Some(1), || {
            format!("m={m}: formula defect")
        })?;
        seen.push(format!("m={m}: dim {ideal}"));
    }
    Ok(seen.join(", "))
}

fn random_line_configuration(rng: &mut ChaCha8Rng) -> (LineConfiguration, u64) {
    let general = (0..rng.gen_range(0..4))
        .map(|_| rng.gen_range(1..=3))
        .collect();
    let (sliced, selectors): (Vec<_>, Vec<_>) = (0..rng.gen_range(0..5))
        .map(|_| {
            let m = rng.gen_range(1..=4u64);
            (SliceProfile::fat_point(m), rng.gen_range(0..m as usize))
        })
        .unzip();
    let scheme =
        PlaneScheme::new(rng.gen_range(0..=5), rng.gen_range(0..=5), general).with_sliced(sliced);
    (
        LineConfiguration::new(scheme, selectors).unwrap(),
        rng.gen_range(1..=10),
    )
}

fn horace_calculus() -> Check {
    let goldens = [(0, vec![2, 1], 3), (1, vec![3, 1], 2), (2, vec![3, 2], 1)];
    for (t, res, tr) in goldens {
        let got = diff_slice(3, t).map_err(|e| e.to_string())?;
        ensure(got == (SliceProfile::new(res.clone()), tr), || {
            format!("diff_slice(3, {t}) = {got:?}")
        })?;
    }

    let cfg = oracle();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let configs: Vec<_> = (0..100)
        .map(|_| random_line_configuration(&mut rng))
        .collect();
    let broken: Vec<String> = configs
        .par_iter()
        .filter_map(|(c, d)| match castelnuovo_check(c, *d, &cfg) {
            Ok(r) if r.holds => None,
            Ok(r) => Some(format!("{c} d={d}: {r:?}")),
            Err(e) => Some(e.to_string()),
        })
        .collect();
    ensure(broken.is_empty(), || {
        format!("Castelnuovo fails: {}", broken[0])
    })?;

    let four = LineConfiguration::new(
        PlaneScheme::new(6, 4, vec![]).with_sliced(vec![SliceProfile::fat_point(3); 4]),
        vec![0, 0, 0, 1],
    )
    .unwrap();
    let r = horace_verify(&four, 10, &cfg).map_err(|e| e.to_string())?;
    ensure(r.witnessed(), || {
        format!("Horace lemma at (6,4), s=4: {r:?}")
    })?;

    let mut instances = Vec::new();
    for sum in 10..=14u64 {
        for b in 4..=sum / 2 {
            let a = sum - b;
            let (_, s2) = critical_counts(BiDegree::new(a, b), 3).unwrap();
            for s in 1..=s2 + 1 {
                let Ok(st1) = specialize_triple_step1(a, b, s) else {
                    continue;
                };
                let Ok(st2) = specialize_triple_step2(&st1) else {
                    continue;
                };
                instances.push(((a, b, s), st2));
            }
        }
    }
    let failed: Vec<String> = instances
        .par_iter()
        .filter_map(|((a, b, s), st)| match triple_chain(st, &cfg) {
            Ok(c) if c.holds() => None,
            Ok(c) => Some(format!("({a},{b}) s={s}: {c:?}")),
            Err(e) => Some(e.to_string()),
        })
        .collect();
    ensure(failed.is_empty(), || {
        format!("chain fails at {}", failed[0])
    })?;
    Ok(format!(
        "3 slice goldens, 100 Castelnuovo checks, {} step chains",
        instances.len()
    ))
}

fn property_suites() -> Check {
    let known = |a: u64, b: u64, s: u64, m: u64| {
        hf_uniform(BiDegree::new(a, b), pts(s, m))
            .unwrap()
            .value()
            .map(|v| v.value)
    };
    let mut cells = 0usize;
    for m in 1..=8u64 {
        for s in 0..=20u64 {
            for a in 0..=40u64 {
                for b in 0..=40u64 {
                    let here = known(a, b, s, m);
                    ensure(here == known(b, a, s, m), || {
                        format!("symmetry at ({a},{b}) m={m} s={s}")
                    })?;
                    let Some(v) = here else { continue };
                    cells += 1;
                    ensure(
                        v <= BiDegree::new(a, b).piece_dim() && v <= pts(s, m).degree(),
                        || format!("bounds at ({a},{b}) m={m} s={s}"),
                    )?;
                    for next in [known(a + 1, b, s, m), known(a, b + 1, s, m)] {
                        ensure(next.map_or(true, |n| v <= n), || {
                            format!("monotonicity at ({a},{b}) m={m} s={s}")
                        })?;
                    }
                    if let Some(want) =
                        program::multi_fat_points(m as i64, s as i64, a as i64, b as i64)
                    {
                        if !program::excluded(m, s, a, b) {
                            ensure(v as i64 == want, || {
                                format!("program parity at ({a},{b}) m={m} s={s}")
                            })?;
                        }
                    }
                }
            }
        }
    }

    let cfg = oracle();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let samples: Vec<(u64, u64, u64, u64)> = (0..60)
        .map(|_| {
            (
                rng.gen_range(0..=8),
                rng.gen_range(0..=8),
                rng.gen_range(1..=4),
                rng.gen_range(0..=6),
            )
        })
        .collect();
    let seeds_disagree = samples.par_iter().find_any(|&&(a, b, m, s)| {
        let v: Vec<u64> = [11, 12, 13]
            .iter()
            .map(|&seed| {
                hf_uniform_oracle(BiDegree::new(a, b), pts(s, m), &cfg.with_seed(seed)).unwrap()
            })
            .collect();
        v[0] != v[1] || v[1] != v[2]
    });
    ensure(seeds_disagree.is_none(), || {
        format!("seeds disagree at {seeds_disagree:?}")
    })?;

    let special_gains = samples.par_iter().find_any(|&&(a, b, m, s)| {
        // same points, all moved onto r: the ideal can only grow
        let d = a + b;
        let general = PlaneScheme::new(a, b, vec![m; s as usize]);
        let special = PlaneScheme::new(a, b, vec![])
            .with_sliced(vec![SliceProfile::fat_point(m); s as usize]);
        hf_plane(d, &special, &cfg).unwrap() < hf_plane(d, &general, &cfg).unwrap()
    });
    ensure(special_gains.is_none(), || {
        format!("semicontinuity fails at {special_gains:?}")
    })?;

    let sub_gains = samples.par_iter().find_any(|&&(a, b, m, s)| {
        let deg = BiDegree::new(a, b);
        let full = vec![m; s as usize];
        let mut sub = full.clone();
        if let Some(x) = sub.first_mut() {
            *x -= 1;
        }
        hf_biproj(deg, &sub, &cfg).unwrap() > hf_biproj(deg, &full, &cfg).unwrap()
    });
    ensure(sub_gains.is_none(), || {
        format!("subscheme monotonicity fails at {sub_gains:?}")
    })?;

    Ok(format!(
        "{cells} formula cells (symmetry, bounds, monotonicity, program parity), 60 oracle samples (seeds, semicontinuity, subschemes)"
    ))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("example table m=5 s=5 reproduced", example_table),
        ("triple-point theorem vs oracle", triple_vs_oracle),
        ("m >= b theorem vs oracle", m_ge_b_vs_oracle),
        ("reduction to the plane", reductions),
        ("infinite defective family", defective_family),
        ("Horace calculus", horace_calculus),
        ("property suites", property_suites),
    ];
    let mut failures = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  {}  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {}  {name}: {detail} ({secs:.1}s)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failures,
        criteria.len()
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
