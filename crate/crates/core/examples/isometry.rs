//! Brute-force isometry checks on explicit avoidance graphs.

use fibocube::oracle::{index_bruteforce, AvoidanceGraph};
use fibocube::word::{Pattern, Word};

fn main() -> Result<(), fibocube::Error> {
    let fib: Pattern = "11".parse()?;
    let counts: Vec<usize> = (1..=10)
        .map(|d| AvoidanceGraph::build(&fib, d).map(|g| g.vertex_count()))
        .collect::<Result<_, _>>()?;
    println!("|V(Q_d(11))| for d=1..10: {counts:?}");

    let f: Pattern = "101".parse()?;
    for d in 3..=5 {
        let g = AvoidanceGraph::build(&f, d)?;
        let v = g.is_isometric();
        print!(
            "Q_{d}(101): {} vertices, isometric={}",
            g.vertex_count(),
            v.isometric
        );
        if let Some(bad) = v.violating_pair {
            print!(
                ", first violation {} / {}: graph distance {:?}, hamming {}",
                bad.alpha, bad.beta, bad.graph_distance, bad.hamming
            );
        }
        println!();
    }

    let g = AvoidanceGraph::build(&f, 4)?;
    let a: Word = "1111".parse()?;
    let b: Word = "1001".parse()?;
    println!("distance(1111, 1001) = {:?}", g.graph_distance(&a, &b)?);
    for pair in g.find_critical_pairs(true) {
        println!(
            "critical: {} / {} p={} blocked={:?}",
            pair.alpha, pair.beta, pair.p, pair.blocked_side
        );
    }

    for s in ["11", "101", "1001", "0011", "11011"] {
        let f: Pattern = s.parse()?;
        println!("{s}: {:?}", index_bruteforce(&f)?);
    }
    Ok(())
}
