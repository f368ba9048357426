//! Tag bibliographic records with SDG scores by passing their JEL codes
//! through a linkage table.
//!
//! Run with: `cargo run --example tag_records`

use sdgjel::matcher::{LinkageTable, Method};
use sdgjel::prelude::*;
use sdgjel::report::tag_jsonl;

// A small JSONL corpus: one record per line. Line 3 is malformed on
// purpose; ingestion is lenient and reports it instead of failing.
const CORPUS: &str = r#"{"id":"rec-1","year":2015,"title":"Poverty traps and growth","abstract":"Measurement of extreme poverty.","jel_codes":["I32","O11"]}
{"id":"rec-2","year":2018,"title":"Carbon pricing","abstract":"Climate policy and emission trading.","jel_codes":["Q54","Q58","H23"]}
not json at all
{"id":"rec-3","year":2020,"title":"Fisheries management","abstract":"Quota systems in ocean fisheries.","jel_codes":["Q22"]}
"#;

fn main() -> Result<()> {
    let taxonomy = Taxonomy::parse(sdgjel::data::EMBEDDED_SNAPSHOT)?;
    let catalog = Catalog::parse(sdgjel::data::EMBEDDED_CATALOG)?;
    let stoplist = Stoplist::parse(sdgjel::data::EMBEDDED_STOPLIST)?;
    let index = TaxonomyIndex::build(&taxonomy, &stoplist);

    let table = LinkageTable::build(
        &catalog,
        &index,
        Method::LaFleur,
        WeightingScheme::TopFiveThenHarmonic,
        None,
    )?;

    let (records, diagnostics) = parse_corpus(CORPUS, Some(&taxonomy));
    for d in &diagnostics {
        eprintln!(
            "[WARN] corpus:{}: {}{}",
            d.line,
            d.message,
            if d.skipped { " (record skipped)" } else { "" }
        );
    }

    // Each record gets, per goal, the sum of its codes' linkage scores,
    // normalized by the goal's maximum single-code score and clamped to 1.
    let results: Vec<_> = records.iter().map(|r| tag_record(r, &table)).collect();
    print!("{}", tag_jsonl(&results));
    Ok(())
}
