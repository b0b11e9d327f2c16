//! Good-pattern counts by length.
//!
//!     cargo run --release --example census -- 12

use fibocube::harness::{CensusRow, Harness};

fn main() -> Result<(), fibocube::Error> {
    let max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(10);
    let h = Harness::default();
    println!("{}", CensusRow::CSV_HEADER);
    for n in 1..=max {
        println!("{}", h.census(n)?.to_csv());
    }
    let pure = h.find_pure_three_critical(max.min(10))?;
    let list: Vec<String> = pure.iter().map(|f| f.to_string()).collect();
    println!("patterns needing three flips: {}", list.join(" "));
    Ok(())
}
