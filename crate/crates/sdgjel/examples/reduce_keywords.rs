//! Three-step keyword-list reduction with a survival check for the
//! selected three keywords of each goal.
//!
//! Run with: `cargo run --example reduce_keywords`

use sdgjel::matcher::reduce_keywords;
use sdgjel::prelude::*;
use sdgjel::report::reduce_goal_report;

fn main() -> Result<()> {
    let catalog = Catalog::parse(sdgjel::data::EMBEDDED_CATALOG)?;
    let stoplist = Stoplist::parse(sdgjel::data::EMBEDDED_STOPLIST)?;

    // Walk one goal in detail. Step 1 drops general stoplist words, step 2
    // drops bigrams whose both components survive as separate entries,
    // step 3 merges stem-equal entries keeping the shortest surface.
    let goal = catalog.goal(2).unwrap();
    let report = reduce_keywords(&goal.lafleur_keywords, &stoplist);
    let (text, ok) = reduce_goal_report(goal.id, &report, &goal.selected_three);
    print!("{text}");
    assert!(ok, "selected keywords must survive reduction");

    // Reduction is idempotent: reducing the survivors changes nothing.
    let again = reduce_keywords(&report.survivors, &stoplist);
    println!(
        "\nidempotent: {}",
        again.survivors == report.survivors
            && again.removed_general.is_empty()
            && again.removed_bigram.is_empty()
            && again.removed_plural.is_empty()
    );

    // Summary over all 17 goals.
    println!("\nsurvivor counts:");
    for g in catalog.goals() {
        let r = reduce_keywords(&g.lafleur_keywords, &stoplist);
        println!("  goal {:>2}: {} -> {}", g.id, r.original.len(), r.survivors.len());
    }
    Ok(())
}
