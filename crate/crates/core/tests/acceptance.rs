//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits non-zero if any fails.

use std::collections::BTreeSet;
use std::time::Instant;

use fibocube::harness::{Harness, TheoremReport};
use fibocube::oracle::{index_bruteforce, AvoidanceGraph};
use fibocube::structural::classify;
use fibocube::word::{Pattern, Word};
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

fn report(r: TheoremReport) -> Check {
    if r.passed {
        Ok(format!("{} ({}, {} cases)", r.theorem, r.range, r.checked))
    } else {
        Err(r.to_string())
    }
}

fn all(reports: Vec<TheoremReport>) -> Check {
    let mut parts = Vec::new();
    for r in reports {
        parts.push(report(r)?);
    }
    Ok(parts.join("; "))
}

fn oracle_equivalence(h: &Harness) -> Check {
    let exhaustive = h.cross_validate(6).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0007);
    let sampled: Vec<Pattern> = {
        let mut idx = sample(&mut rng, 128, 40).into_vec();
        idx.sort_unstable();
        idx.into_iter()
            .map(|i| Pattern::new(Word::from_bits(i as u64, 7).expect("length 7")))
            .collect()
    };
    let spot = h
        .cross_validate_patterns(&sampled, "40 random patterns of length 7".into())
        .map_err(|e| e.to_string())?;
    if exhaustive.checked != 126 {
        return Err(format!(
            "expected 126 patterns, checked {}",
            exhaustive.checked
        ));
    }
    if spot.checked != 40 {
        return Err(format!(
            "expected 40 sampled patterns, checked {}",
            spot.checked
        ));
    }
    all(vec![exhaustive, spot])
}

fn fixed_points() -> Check {
    let f: Pattern = "101".parse().unwrap();
    let c = classify(&f);
    if c.index() != Some(4) {
        return Err(format!("classify(101) = {:?}", c.goodness));
    }
    let pairs: BTreeSet<(String, String)> = c
        .witnesses
        .iter()
        .map(|w| (w.alpha.to_string(), w.beta.to_string()))
        .collect();
    if pairs != BTreeSet::from([("1111".into(), "1001".into())]) {
        return Err(format!("witness pairs {pairs:?}"));
    }
    let brute = index_bruteforce(&f).map_err(|e| e.to_string())?;
    if brute.index() != Some(4) {
        return Err(format!("index_bruteforce(101) = {brute:?}"));
    }
    let g = AvoidanceGraph::build(&f, 4).map_err(|e| e.to_string())?;
    let (a, b): (Word, Word) = ("1111".parse().unwrap(), "1001".parse().unwrap());
    let dist = g.graph_distance(&a, &b).map_err(|e| e.to_string())?;
    let ham = a.hamming(&b).map_err(|e| e.to_string())?;
    if (dist, ham) != (Some(4), 2) {
        return Err(format!("distance {dist:?}, hamming {ham}"));
    }
    let fib: Pattern = "11".parse().unwrap();
    let counts: Vec<usize> = (1..=6)
        .map(|d| AvoidanceGraph::build(&fib, d).unwrap().vertex_count())
        .collect();
    if counts != [2, 3, 5, 8, 13, 21] {
        return Err(format!("|V(Q_d(11))| = {counts:?}"));
    }
    Ok("101 -> B=4 with (1111,1001); distance 4 vs hamming 2; Fibonacci counts".into())
}

fn census_json(h: &Harness, workers: usize) -> Result<Vec<String>, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| {
        (1..=10)
            .map(|n| {
                h.census(n)
                    .map(|row| serde_json::to_string(&row).expect("serializable"))
                    .map_err(|e| e.to_string())
            })
            .collect()
    })
}

fn census_determinism(h: &Harness) -> Check {
    let first = census_json(h, 1)?;
    let again = census_json(h, 1)?;
    let wide = census_json(h, 4)?;
    if first != again || first != wide {
        return Err("census output differs between runs or worker counts".into());
    }
    for n in 1..=10 {
        let good: BTreeSet<Pattern> = Pattern::all(n).filter(|f| classify(f).is_good()).collect();
        let reversed: BTreeSet<Pattern> = good.iter().map(|f| f.reverse()).collect();
        let complemented: BTreeSet<Pattern> = good.iter().map(|f| f.complement()).collect();
        if reversed != good || complemented != good {
            return Err(format!("good set of length {n} not closed under symmetry"));
        }
        let backwards = Pattern::all(n)
            .rev()
            .filter(|f| classify(f).is_good())
            .count();
        if backwards != good.len() {
            return Err(format!("length {n}: count depends on enumeration order"));
        }
    }
    Ok("census 1..=10 identical across runs and 1/4 workers; symmetric".into())
}

fn main() {
    let h = Harness::default();
    let criteria: Vec<Criterion> = vec![
        (
            "oracle and structural classifier agree",
            Box::new(|| oracle_equivalence(&h)),
        ),
        (
            "minimal critical p is 2 or 3",
            Box::new(|| {
                h.check_p_values(6)
                    .map_err(|e| e.to_string())
                    .and_then(report)
            }),
        ),
        (
            "index stays below 2|f|",
            Box::new(|| {
                h.check_index_bound(10)
                    .map_err(|e| e.to_string())
                    .and_then(report)
            }),
        ),
        (
            "doubling a good pattern keeps it good",
            Box::new(|| {
                h.check_doubling(6)
                    .map_err(|e| e.to_string())
                    .and_then(report)
            }),
        ),
        (
            "non-isometry iff a critical pair exists",
            Box::new(|| {
                h.check_critical_equivalence_dims(5, |n| 2 * n - 1)
                    .map_err(|e| e.to_string())
                    .and_then(report)
            }),
        ),
        (
            "non-isometry persists above the index",
            Box::new(|| {
                h.check_monotonicity(6, 3)
                    .map_err(|e| e.to_string())
                    .and_then(report)
            }),
        ),
        (
            "overlap graphs are single cycles",
            Box::new(|| {
                h.check_overlap_cycles(20, 40)
                    .map_err(|e| e.to_string())
                    .and_then(report)
            }),
        ),
        ("worked fixed points", Box::new(fixed_points)),
        (
            "census determinism and symmetry",
            Box::new(|| census_determinism(&h)),
        ),
    ];

    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} [{secs:.1}s] {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} [{secs:.1}s] {detail}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
