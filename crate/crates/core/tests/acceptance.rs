//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any
//! failure.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use itertools::Itertools;
use num_traits::{One, Zero};

use cliffklein::catalog::{catalog_up_to_rank, parse_algebra, split_form, SemisimpleRealAlgebra};
use cliffklein::checker::{check_pair, survey_candidates, survey_split, Ambient, Outcome};
use cliffklein::poincare::{candidate_polynomials, formula_one, DegreeData, IntPolynomial};
use cliffklein::rootsys::{build_root_system, degrees, Family, SimpleType};
use cliffklein::subalg::load_candidates;
use common::*;

type Check = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn st(f: Family, r: usize) -> SimpleType {
    SimpleType::new(f, r).unwrap()
}

fn exceptional_split() -> Vec<(&'static str, SimpleType)> {
    vec![
        ("g2(2)", st(Family::G, 2)),
        ("f4(4)", st(Family::F, 4)),
        ("e6(6)", st(Family::E, 6)),
        ("e7(7)", st(Family::E, 7)),
        ("e8(8)", st(Family::E, 8)),
    ]
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let cl = load_candidates(&candidate_file()).map_err(|e| e.to_string())?;
    let survey = survey_candidates(&cl.ambient, &cl).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(survey.rows.len() == 28, || {
        format!("{} rows", survey.rows.len())
    })?;
    let bad: Vec<String> = survey
        .rows
        .iter()
        .filter(|r| r.verdict.outcome != Outcome::NoCK_Tholozan)
        .map(|r| format!("{} -> {:?}", r.h, r.verdict.outcome))
        .collect();
    ensure(bad.is_empty(), || bad.join("; "))?;
    let expected = table_block("table1.tsv", "e6(6)");
    let got: BTreeSet<String> = survey.rows.iter().map(|r| r.h.to_string()).collect();
    let diff = row_diff(&expected, &got);
    ensure(diff.is_empty(), || diff.clone())?;
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("28/28 NoCK_Tholozan in {elapsed:.2?}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut counts = Vec::new();
    for (g, t) in exceptional_split() {
        let survey = survey_split(t).map_err(|e| e.to_string())?;
        let got: BTreeSet<String> = survey.detected().iter().map(|r| r.h.to_string()).collect();
        let expected = table_block("table2.tsv", g);
        let diff = row_diff(&expected, &got);
        ensure(diff.is_empty(), || format!("{g}:\n{diff}"))?;
        counts.push(format!("{g}: {}", got.len()));
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("{} in {elapsed:.2?}", counts.join(", ")))
}

/// Standard tables of fundamental degrees.
fn reference_degrees(t: SimpleType) -> Vec<u32> {
    let n = t.rank() as u32;
    let mut v: Vec<u32> = match t.family() {
        Family::A => (2..=n + 1).collect(),
        Family::B | Family::C => (1..=n).map(|i| 2 * i).collect(),
        Family::D => (1..n).map(|i| 2 * i).chain([n]).collect(),
        Family::E => match n {
            6 => vec![2, 5, 6, 8, 9, 12],
            7 => vec![2, 6, 8, 10, 12, 14, 18],
            _ => vec![2, 8, 12, 14, 18, 20, 24, 30],
        },
        Family::F => vec![2, 6, 8, 12],
        Family::G => vec![2, 6],
    };
    v.sort_unstable();
    v
}

fn criterion_3() -> Check {
    let mut types: Vec<SimpleType> = Vec::new();
    for n in 1..=8 {
        types.push(st(Family::A, n));
    }
    for n in 2..=8 {
        types.extend([st(Family::B, n), st(Family::C, n)]);
    }
    for n in 3..=8 {
        types.push(st(Family::D, n));
    }
    types.extend([
        st(Family::E, 6),
        st(Family::E, 7),
        st(Family::E, 8),
        st(Family::F, 4),
        st(Family::G, 2),
    ]);
    for &t in &types {
        let mut got = degrees(t);
        got.sort_unstable();
        let want = reference_degrees(t);
        ensure(got == want, || format!("{t}: {got:?} vs {want:?}"))?;
        let rs = build_root_system(t);
        let dim = 2 * rs.positive_roots.len() + t.rank();
        let sum: u32 = got.iter().map(|p| 2 * p - 1).sum();
        ensure(sum as usize == dim, || {
            format!("{t}: sum(2p-1) = {sum}, dim = {dim}")
        })?;
    }
    Ok(format!("{} types", types.len()))
}

fn compact_dim(k: &SemisimpleRealAlgebra) -> usize {
    k.factors().iter().map(|f| f.dim()).sum()
}

fn criterion_4() -> Check {
    let want = [
        ("g2(2)", 8),
        ("f4(4)", 28),
        ("e6(6)", 42),
        ("e7(7)", 70),
        ("e8(8)", 128),
    ];
    for ((g, t), (_, d_want)) in exceptional_split().into_iter().zip(want) {
        let a = split_form(t);
        let inv = a.invariants();
        let rs = build_root_system(t);
        let dim_g = 2 * rs.positive_roots.len() + t.rank();
        let d = dim_g - compact_dim(&inv.max_compact);
        ensure(d == d_want && inv.d == d_want, || {
            format!("{g}: d = {d}, catalog {}", inv.d)
        })?;
        let ambient = Ambient::new(a).map_err(|e| e.to_string())?;
        for p in &ambient.polynomials {
            ensure(p.degree() == Some(d), || {
                format!("{g}: degree {:?} for {p}", p.degree())
            })?;
        }
    }
    Ok("42, 70, 128, 28, 8".into())
}

fn criterion_5() -> Check {
    let mut ambients = vec![
        load_candidates(&candidate_file())
            .map_err(|e| e.to_string())?
            .ambient,
    ];
    ambients.extend(exceptional_split().into_iter().map(|(_, t)| split_form(t)));
    let mut n = 0;
    for a in ambients {
        let ambient = Ambient::new(a).map_err(|e| e.to_string())?;
        for p in &ambient.polynomials {
            ensure(p.is_palindromic(), || {
                format!("{a}: {p} is not palindromic")
            })?;
            ensure(p.coefficient(0).is_one(), || {
                format!("{a}: {p} has constant term != 1")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} polynomials"))
}

fn criterion_6() -> Check {
    let sl2 = parse_algebra("sl(2,R)").unwrap();
    for (g, t) in exceptional_split() {
        let v = check_pair(&split_form(t), &sl2).map_err(|e| e.to_string())?;
        ensure(v.outcome.is_nock(), || format!("{g}: {:?}", v.outcome))?;
        ensure(v.evidence.sl2_fast_path_agrees == Some(true), || {
            format!("{g}: fast path")
        })?;
        let ambient = Ambient::new(split_form(t)).map_err(|e| e.to_string())?;
        for p in &ambient.polynomials {
            ensure(p.coefficient(2).is_zero(), || {
                format!("{g}: t^2 coefficient of {p}")
            })?;
        }
    }
    Ok("all five NoCK, degree-2 coefficients zero".into())
}

fn raw_sweep(dd: &DegreeData) -> BTreeSet<IntPolynomial> {
    let l = dd.big_degrees.len();
    (0..l)
        .permutations(l)
        .filter_map(|perm| {
            let assignment: Vec<u32> = perm.iter().map(|&i| dd.big_degrees[i]).collect();
            formula_one(&assignment, &dd.compact_degrees).unwrap()
        })
        .collect()
}

fn criterion_7() -> Check {
    let mut pairs = 0;
    for a in catalog_up_to_rank(4) {
        if a.is_compact() {
            continue;
        }
        let inv = a.invariants();
        let Ok(dd) = DegreeData::new(inv.dual_degrees.clone(), inv.max_compact.degrees()) else {
            continue;
        };
        if dd.big_degrees.len() > 4 {
            continue;
        }
        let reduced = candidate_polynomials(&dd).map_err(|e| e.to_string())?;
        let raw = raw_sweep(&dd);
        ensure(reduced == raw, || {
            format!("{a}: {} vs {} polynomials", reduced.len(), raw.len())
        })?;
        pairs += 1;
    }
    ensure(pairs > 0, || "no pairs".into())?;
    Ok(format!("{pairs} (G, K) pairs"))
}

fn criterion_8() -> Check {
    let a = split_form(st(Family::G, 2));
    let inv = a.invariants();
    let dd =
        DegreeData::new(inv.dual_degrees, inv.max_compact.degrees()).map_err(|e| e.to_string())?;
    let got = candidate_polynomials(&dd).map_err(|e| e.to_string())?;
    let want: BTreeSet<IntPolynomial> =
        [IntPolynomial::from_i64(&[1, 0, 0, 0, 1, 0, 0, 0, 1])].into();
    ensure(got == want, || format!("{got:?}"))?;
    Ok("{1 + t^4 + t^8}".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("table 1 reproduction", criterion_1),
        ("table 2 reproduction", criterion_2),
        ("degree tables", criterion_3),
        ("degree constancy", criterion_4),
        ("palindromic, constant term 1", criterion_5),
        ("sl(2,R) coherence", criterion_6),
        ("permutation reduction", criterion_7),
        ("g2 closed form", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {why}", i + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
