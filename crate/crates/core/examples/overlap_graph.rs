//! Overlap graphs, residue sequences and the equality closure.
//!
//!     cargo run --example overlap_graph -- 4 6

use fibocube::periodicity::{
    build_overlap_graph, closure_implies, period_closure_check, residue_sequence, EquationSystem,
};

fn main() -> Result<(), fibocube::Error> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (r, s) = match args[..] {
        [r, s, ..] => (r, s),
        _ => (2, 3),
    };
    let g = build_overlap_graph(r, s)?;
    println!(
        "G({r},{s}): g={} k1={} k2={} vertices={} edges={} two-regular={} single cycle={}",
        g.g,
        g.k1,
        g.k2,
        g.vertex_count(),
        g.edges.len(),
        g.is_two_regular(),
        g.is_single_cycle()
    );
    println!("walk over v2 indices: {:?}", g.y_walk());
    println!("residues: {:?}", residue_sequence(g.k1, g.k2)?);
    print!("{}", g.to_dot());

    let sys = EquationSystem::new(r, s, 0)?;
    let all = sys.shift_equations();
    for missing in &all {
        let rest: Vec<_> = all.iter().copied().filter(|e| e != missing).collect();
        println!(
            "drop {missing:?}: still forced = {}",
            closure_implies(r, s, &rest, sys.relative(*missing)?)?
        );
    }

    let f = "011011".parse()?;
    println!(
        "011011 with r=3, s=3: {:?}",
        period_closure_check(&f, 3, 3)?
    );
    Ok(())
}
