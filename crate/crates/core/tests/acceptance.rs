//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Runs as a plain binary (`harness = false`) so the report lines are always
//! visible under `cargo test`.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use ultratree_core::labeling::enumerate_labelings_budgeted;
use ultratree_core::metric::restrict_indices;
use ultratree_core::verify::{predicted_cases, verify_main_theorem, verify_structure_lemmas, verify_theorem_nondegeneracy};
use ultratree_core::{
    build_ultrametric, check_isometric, generate_space, io, realize_as_star, us_witness, FiniteUltrametricSpace, Tree,
    VerifyConfig,
};

type Outcome = Result<String, String>;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Labels (2,2,3,2,2) on a 5-vertex path: d(v1,v2) = d(v4,v5) = 2, every
/// pair separated by v3 at 3, and no witness point.
fn five_vertex_path() -> Outcome {
    let t0 = Instant::now();
    let text = std::fs::read_to_string(fixture("p5-labeled.json")).map_err(|e| e.to_string())?;
    let lt = io::parse_labeled_tree(&text).map_err(|e| e.to_string())?;
    let space = build_ultrametric(&lt).map_err(|e| e.to_string())?;
    let idx = |name: &str| space.index_of(name).unwrap();
    let d = |a: &str, b: &str| space.dist(idx(a), idx(b));
    ensure(d("v1", "v2") == r(2) && d("v4", "v5") == r(2), || "leaf pairs not at 2".into())?;
    for i in 1..=5 {
        for j in i + 1..=5 {
            if i <= 3 && j >= 3 {
                let (a, b) = (format!("v{i}"), format!("v{j}"));
                ensure(d(&a, &b) == r(3), || format!("d({a},{b}) = {}", d(&a, &b)))?;
            }
        }
    }
    ensure(us_witness(&space).is_none(), || "unexpected witness".into())?;
    let stored = io::parse_space(&std::fs::read_to_string(fixture("p5-space.json")).unwrap()).unwrap();
    ensure(stored == space, || "p5-space.json differs from the generated matrix".into())?;
    within(t0.elapsed(), Duration::from_secs(1))?;
    Ok("exact distances; no witness".into())
}

fn nondegeneracy_grid() -> Outcome {
    let t0 = Instant::now();
    let config = VerifyConfig::new(5, &[0, 1, 2]).with_jobs(jobs());
    let report = verify_theorem_nondegeneracy(&config).map_err(|e| e.to_string())?;
    let expected: u64 = (1..=5u32).map(|n| cayley(n as usize) * 3u64.pow(n)).sum();
    ensure(expected == 31_764, || format!("formula gives {expected}"))?;
    ensure(report.cases_checked == expected, || format!("{} cases, expected {expected}", report.cases_checked))?;
    ensure(report.failures.is_empty() && report.passed(), || format!("{} certificates", report.failures.len()))?;
    within(t0.elapsed(), Duration::from_secs(30))?;
    Ok(format!("{} cases, 0 certificates", report.cases_checked))
}

fn main_theorem() -> Outcome {
    let t0 = Instant::now();
    let config = VerifyConfig::new(6, &[0, 1, 2]).with_jobs(jobs());
    let report = verify_main_theorem(&config).map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.summary())?;
    ensure(report.cases_checked as u128 == predicted_cases(6, Some(3)), || "case count".into())?;

    let trees: u64 = (1..=6).map(cayley).sum();
    let long: u64 = all_trees(6).filter(|t| brute_longest_path(t) >= 4).count() as u64;
    let short_nondeg: u64 = all_trees(6)
        .filter(|t| brute_longest_path(t) <= 3)
        .map(|t| enumerate_labelings_budgeted(&t, &values(&[0, 1, 2]), true, u64::MAX).unwrap().count() as u64)
        .sum();
    let count = |name: &str| report.check(name).map(|c| c.cases).unwrap_or(u64::MAX);
    ensure(count("(ii) longest path <= 3 iff (iii) <= 2 high-degree vertices") == trees, || "exact sub-check count".into())?;
    ensure(count("(iii) => (i): labelings of short trees are star-generated") == short_nondeg, || "sampled count".into())?;
    ensure(count("not (ii) => not (i): counterexample labeling is not star-generated") == long, || "certified count".into())?;
    within(t0.elapsed(), Duration::from_secs(300))?;
    Ok(format!(
        "{} trees exact, {short_nondeg} labelings sampled, {long} counterexamples certified",
        trees
    ))
}

fn structure_lemmas() -> Outcome {
    let t0 = Instant::now();
    let report = verify_structure_lemmas(&VerifyConfig::new(7, &[]).with_jobs(jobs())).map_err(|e| e.to_string())?;
    ensure(report.passed(), || report.summary())?;
    let trees: u64 = (1..=7).map(cayley).sum();
    ensure(report.cases_checked == trees, || format!("{} trees, expected {trees}", report.cases_checked))?;
    within(t0.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{trees} trees"))
}

fn is_star_graph(tree: &Tree) -> bool {
    let n = tree.order();
    n == 1
        || tree.vertices().any(|c| {
            tree.edges().len() == n - 1 && tree.edges().iter().all(|&(a, b)| a == c || b == c)
        })
}

fn realization_round_trip() -> Outcome {
    let vals = values(&[0, 1, 2]);
    let mut checked = 0u64;
    for tree in all_trees(6) {
        for l in enumerate_labelings_budgeted(&tree, &vals, true, u64::MAX).unwrap() {
            let space = generate_space(&tree, &l).unwrap();
            if us_witness(&space).is_none() {
                continue;
            }
            let lt = realize_as_star(&space).map_err(|e| e.to_string())?;
            let back = build_ultrametric(&lt).map_err(|e| e.to_string())?;
            ensure(back.points() == space.points() && back.matrix() == space.matrix(), || {
                format!("round trip differs for {tree:?} {l:?}")
            })?;
            ensure(is_star_graph(lt.tree()), || format!("not a star: {:?}", lt.tree()))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} US spaces"))
}

fn isometry_oracle() -> Outcome {
    let t0 = Instant::now();
    let corpus = space_corpus(5, &[0, 1, 2]);
    let mut pairs = 0u64;
    let mut isometric = 0u64;
    for a in &corpus {
        for b in &corpus {
            let fast = check_isometric(a, b);
            let slow = brute_isometric(a, b);
            ensure(fast == slow, || format!("disagreement: {a:?} vs {b:?}"))?;
            pairs += 1;
            isometric += u64::from(fast);
        }
    }
    within(t0.elapsed(), Duration::from_secs(120))?;
    Ok(format!("{} spaces, {pairs} ordered pairs, {isometric} isometric, 0 disagreements", corpus.len()))
}

fn subspace_closure() -> Outcome {
    let us: Vec<FiniteUltrametricSpace> = space_corpus(6, &[0, 1, 2])
        .into_iter()
        .filter(|s| us_witness(s).is_some())
        .collect();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed_2025);
    for sample in 0..1000 {
        let space = &us[rng.gen_range(0..us.len())];
        let n = space.order();
        let mask: u32 = rng.gen_range(1..(1u32 << n));
        let idx: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        let sub = restrict_indices(space, &idx);
        ensure(us_witness(&sub).is_some(), || format!("sample {sample}: {space:?} on {idx:?}"))?;
    }
    Ok(format!("1000 samples from {} US spaces", us.len()))
}

fn longest_path_oracle() -> Outcome {
    let mut trees = 0;
    for tree in all_trees(7) {
        ensure(tree.longest_path_length() == brute_longest_path(&tree), || format!("{tree:?}"))?;
        trees += 1;
    }
    Ok(format!("{trees} trees"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 five-vertex path example", five_vertex_path),
        ("2 non-degeneracy iff ultrametric (n<=5, {0,1,2})", nondegeneracy_grid),
        ("3 main equivalence (n<=6, {0,1,2})", main_theorem),
        ("4 structure lemmas (n<=7)", structure_lemmas),
        ("5 star realization round trip", realization_round_trip),
        ("6 isometry vs bijection search (n<=5)", isometry_oracle),
        ("7 US subspace closure (1000 samples)", subspace_closure),
        ("8 longest path vs brute force (n<=7)", longest_path_oracle),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let t0 = Instant::now();
        let outcome = run();
        let ms = t0.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS  {name}: {detail} ({ms} ms)"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why} ({ms} ms)");
            }
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
