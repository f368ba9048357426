//! Direct keyword search: for each goal keyword, list every level-3 JEL
//! code whose label or guideline mentions it.
//!
//! Run with: `cargo run --example direct_search`

use sdgjel::matcher::direct_match;
use sdgjel::prelude::*;

fn main() -> Result<()> {
    let taxonomy = Taxonomy::parse(sdgjel::data::EMBEDDED_SNAPSHOT)?;
    let catalog = Catalog::parse(sdgjel::data::EMBEDDED_CATALOG)?;
    let stoplist = Stoplist::parse(sdgjel::data::EMBEDDED_STOPLIST)?;
    let index = TaxonomyIndex::build(&taxonomy, &stoplist);

    // Direct matching uses each goal's short "direct" keyword list and
    // reports plain membership: no ranks, no weights.
    for goal_id in [1u8, 13, 14] {
        let goal = catalog.goal(goal_id).expect("embedded catalog has goals 1-17");
        println!("goal {}: {}", goal.id, goal.title);
        for m in direct_match(goal, &index) {
            let codes: Vec<&str> = m.codes.iter().map(|c| c.as_str()).collect();
            if codes.is_empty() {
                println!("  {:<16} (no matching code)", m.keyword);
            } else {
                println!("  {:<16} {} codes: {}", m.keyword, codes.len(), codes.join(", "));
            }
        }
        println!();
    }
    Ok(())
}
