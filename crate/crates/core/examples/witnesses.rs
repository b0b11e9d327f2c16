//! Build a witness, check it from scratch, tamper with it and lift it.

use fibocube::structural::{classify, lift_witness, verify_witness};

fn main() -> Result<(), fibocube::Error> {
    let f = "101".parse()?;
    let c = classify(&f);
    let w = &c.witnesses[0];
    println!("{}", serde_json::to_string_pretty(w).expect("serializable"));
    println!("verify: {:?}", verify_witness(w)?);

    let mut tampered = w.clone();
    tampered.beta = "1011".parse()?;
    println!("tampered beta=1011: {:?}", verify_witness(&tampered)?);

    for d in w.dimension..=w.dimension + 3 {
        let lifted = lift_witness(w, d)?;
        println!(
            "d={d}: alpha={} beta={} flips={:?} -> {:?}",
            lifted.alpha,
            lifted.beta,
            lifted.flips,
            verify_witness(&lifted)?
        );
    }

    // a pattern whose only minimal witnesses use three flips
    let g = "0011".parse()?;
    for w in &classify(&g).witnesses {
        println!(
            "0011: d={} p={} alpha={} beta={} offsets={:?}",
            w.dimension, w.p, w.alpha, w.beta, w.offsets
        );
    }
    Ok(())
}
