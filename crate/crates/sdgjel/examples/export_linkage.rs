//! Build a goal-to-code linkage table and round-trip it through its JSON
//! exchange format.
//!
//! Run with: `cargo run --example export_linkage`

use sdgjel::matcher::{LinkageTable, Method};
use sdgjel::prelude::*;

fn main() -> Result<()> {
    let taxonomy = Taxonomy::parse(sdgjel::data::EMBEDDED_SNAPSHOT)?;
    let catalog = Catalog::parse(sdgjel::data::EMBEDDED_CATALOG)?;
    let stoplist = Stoplist::parse(sdgjel::data::EMBEDDED_STOPLIST)?;
    let index = TaxonomyIndex::build(&taxonomy, &stoplist);

    // `top: None` keeps every code with a nonzero score; passing `Some(k)`
    // would truncate per goal with whole-group boundary ties.
    let table = LinkageTable::build(
        &catalog,
        &index,
        Method::SelectedThree,
        WeightingScheme::Uniform,
        None,
    )?;

    let json = table.to_json();
    println!("serialized linkage: {} bytes", json.len());

    // The format is self-describing and order-stable: goals appear as
    // "1".."17" in ascending numeric order, scores as exact num/den pairs.
    let reparsed = LinkageTable::parse(&json)?;
    assert_eq!(reparsed.to_json(), json);
    println!("round-trip: byte-identical");

    for goal in [1u8, 13] {
        let entries = reparsed.entries.get(&goal).unwrap();
        println!(
            "goal {goal}: {} scored codes, max score {}",
            entries.len(),
            reparsed.max_score(goal)
        );
        for r in entries.iter().take(3) {
            println!("  {} = {}", r.code, r.score);
        }
    }
    Ok(())
}
