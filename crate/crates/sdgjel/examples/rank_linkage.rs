//! Weighted overlap ranking: score every level-3 code against a goal's
//! keyword list and keep the top three, ties included.
//!
//! Run with: `cargo run --example rank_linkage`

use sdgjel::prelude::*;

fn show(label: &str, taxonomy: &Taxonomy, ranked: &[sdgjel::matcher::RankedCode]) {
    println!("{label}");
    for (pos, r) in ranked.iter().enumerate() {
        let name = taxonomy.get(&r.code).map(|rec| rec.label.as_str()).unwrap_or("");
        println!(
            "  {:>2}{} {}  score {:>8}  [{}]  {}",
            pos + 1,
            if r.tie { "*" } else { " " },
            r.code,
            r.score.to_string(),
            r.matched.join(";"),
            name
        );
    }
    println!();
}

fn main() -> Result<()> {
    let taxonomy = Taxonomy::parse(sdgjel::data::EMBEDDED_SNAPSHOT)?;
    let catalog = Catalog::parse(sdgjel::data::EMBEDDED_CATALOG)?;
    let stoplist = Stoplist::parse(sdgjel::data::EMBEDDED_STOPLIST)?;
    let index = TaxonomyIndex::build(&taxonomy, &stoplist);

    // Goal 13 (climate action) under all three weightings. Scores are exact
    // rationals; harmonic and top-five weightings reward early-ranked
    // keywords instead of raw match counts.
    let goal = catalog.goal(13).unwrap();
    for scheme in [
        WeightingScheme::Uniform,
        WeightingScheme::Harmonic,
        WeightingScheme::TopFiveThenHarmonic,
    ] {
        let ranked = rank_codes(&goal.lafleur_keywords, &index, scheme, 3)?;
        show(&format!("goal 13, weighting {}", scheme.name()), &taxonomy, &ranked);
    }

    // Whole-group boundary ties: goal 10 under top-five weighting ends in a
    // group of codes sharing the boundary score, so more than three rows
    // come back and each boundary member carries a `*`.
    let goal10 = catalog.goal(10).unwrap();
    let ranked = rank_codes(
        &goal10.lafleur_keywords,
        &index,
        WeightingScheme::TopFiveThenHarmonic,
        3,
    )?;
    show("goal 10, weighting top5 (boundary tie group)", &taxonomy, &ranked);
    Ok(())
}
