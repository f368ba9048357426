//! Count how often phrase groups appear in titles and abstracts, year by
//! year.
//!
//! Run with: `cargo run --example trend_series`

use sdgjel::prelude::*;
use sdgjel::report::trend_tsv;

// Titles/abstracts mentioning the same concept under different names.
// Matching is case-insensitive, whitespace-collapsing substring search —
// no stemming — and each record counts at most once per group.
const CORPUS: &str = r#"{"id":"a","year":2000,"title":"The Millennium Development Goals","abstract":"","jel_codes":[]}
{"id":"b","year":2015,"title":"From MDGs onward","abstract":"The transition to the sustainable development goals.","jel_codes":[]}
{"id":"c","year":2016,"title":"Sustainable Development Goal indicators","abstract":"SDG measurement.","jel_codes":[]}
{"id":"d","year":2016,"title":"Unrelated macro paper","abstract":"Inflation dynamics.","jel_codes":[]}
{"id":"e","year":2030,"title":"Out of range","abstract":"sustainable development goals","jel_codes":[]}
"#;

fn main() -> Result<()> {
    let (records, diagnostics) = parse_corpus(CORPUS, None);
    assert!(diagnostics.is_empty());

    let groups = vec![
        TrendGroup::parse("sdg=sustainable development goal;sustainable development goals")?,
        TrendGroup::parse("mdg=millennium development goal;millennium development goals")?,
    ];

    // Years outside [from, to] are ignored; years with no records at all
    // still appear as zero-filled rows.
    let series = trend_count(&records, &groups, 1999, 2017)?;
    print!("{}", trend_tsv(&series));
    Ok(())
}
