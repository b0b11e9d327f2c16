//! Run every verification sweep and print one line per property.
//!
//!     cargo run --release --example verify -- 5

use fibocube::harness::{Harness, Suite};

fn main() -> Result<(), fibocube::Error> {
    let max_len: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let reports = Harness::default().run_suite(Suite::All, max_len, 3)?;
    for r in &reports {
        println!("{r}");
    }
    if reports.iter().any(|r| !r.passed) {
        std::process::exit(1);
    }
    Ok(())
}
