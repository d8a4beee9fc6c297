//! Acceptance suite: one line per criterion, then the individual claims.

use lens_invariants::verify::all_criteria;

#[test]
fn acceptance() {
    let criteria = all_criteria();
    for criterion in &criteria {
        println!("{criterion}");
    }
    let failed: Vec<u32> = criteria
        .iter()
        .filter(|c| !c.passed())
        .map(|c| c.number)
        .collect();
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed.len(),
        criteria.len()
    );
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
