//! Classify patterns given on the command line (or a few defaults).
//!
//!     cargo run --example classify -- 101 11 0011

use fibocube::structural::classify;
use fibocube::word::Pattern;

fn main() -> Result<(), fibocube::Error> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if args.is_empty() {
        vec![
            "1".into(),
            "11".into(),
            "101".into(),
            "0011".into(),
            "110110".into(),
        ]
    } else {
        args
    };
    for s in &inputs {
        let f: Pattern = s.parse()?;
        let c = classify(&f);
        match c.index() {
            None => println!("{f:>12}  good"),
            Some(b) => println!(
                "{f:>12}  bad  B={b:<3} p={} witnesses={}",
                c.minimal_p().unwrap_or(0),
                c.witnesses.len()
            ),
        }
    }
    Ok(())
}
