//! Parse the embedded JEL snapshot and validate it against the pinned
//! per-class count baseline.
//!
//! Run with: `cargo run --example validate_snapshot`

use sdgjel::prelude::*;
use sdgjel::report;

fn main() -> Result<()> {
    let taxonomy = Taxonomy::parse(sdgjel::data::EMBEDDED_SNAPSHOT)?;

    // The structural invariants (code syntax, parent links, level/length
    // agreement, duplicates) were already enforced by `parse`. What remains
    // is the count check against the pinned baseline.
    print!("{}", report::validate_report(&taxonomy));

    let diffs = taxonomy.count_diffs();
    if diffs.is_empty() {
        println!("\nall {} classes match the pinned baseline", taxonomy.class_counts().len());
    } else {
        for d in &diffs {
            eprintln!("{d}");
        }
    }

    let (l2, l3) = report::expected_totals();
    println!("expected totals: {l2} level-2 sections, {l3} level-3 codes");
    println!("records in snapshot: {}", taxonomy.len());
    Ok(())
}
