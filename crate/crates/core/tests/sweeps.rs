use fibocube::harness::{Harness, Suite};
use fibocube::structural::classify;
use fibocube::word::Pattern;

#[test]
fn every_suite_passes_at_length_six() {
    let reports = Harness::default().run_suite(Suite::All, 6, 2).unwrap();
    assert_eq!(reports.len(), 7);
    for r in &reports {
        assert!(r.passed, "{r}");
        assert!(r.checked > 0, "{r}");
    }
}

#[test]
fn three_flip_only_patterns_up_to_ten() {
    let found: Vec<String> = Harness::default()
        .find_pure_three_critical(10)
        .unwrap()
        .iter()
        .map(|f| f.to_string())
        .collect();
    assert_eq!(
        found,
        [
            "0011",
            "1100",
            "00001010",
            "01010000",
            "10101111",
            "11110101",
            "0100101101",
            "1011010010"
        ]
    );
    for s in &found {
        let f: Pattern = s.parse().unwrap();
        let c = classify(&f);
        assert_eq!(c.index(), Some(f.len() + 3 * c.witnesses[0].shift));
    }
}

#[test]
fn census_counts_up_to_ten() {
    let good: Vec<usize> = (1..=10)
        .map(|n| Harness::default().census(n).unwrap().good_count)
        .collect();
    assert_eq!(good, [2, 4, 6, 8, 10, 18, 30, 46, 82, 138]);
}
