//! Deterministic plain-text renderers for every CLI output format.
//!
//! Every function returns the full output as a `String`; callers decide
//! where it goes. Two runs over the same inputs produce byte-identical
//! output.

use crate::catalog::{Catalog, Keyword};
use crate::corpus::{TagResult, TrendSeries};
use crate::matcher::{DirectMatch, LinkageTable, RankedCode, ReduceReport};
use crate::taxonomy::{JelCode, Taxonomy, EXPECTED_CLASS_COUNTS};

/// The `validate` table: one row per class plus a TOTAL row.
pub fn validate_report(taxonomy: &Taxonomy) -> String {
    let mut out = String::from("class\tlabel\tlevel2_count\tlevel3_count\n");
    let counts = taxonomy.class_counts();
    let mut total2 = 0;
    let mut total3 = 0;
    for (class, c) in &counts {
        let label = taxonomy
            .get(&JelCode::parse(&class.to_string(), 0).expect("class letter is a valid code"))
            .map(|r| r.label.as_str())
            .unwrap_or("");
        out.push_str(&format!("{class}\t{label}\t{}\t{}\n", c.level2, c.level3));
        total2 += c.level2;
        total3 += c.level3;
    }
    out.push_str(&format!("TOTAL\t\t{total2}\t{total3}\n"));
    out
}

/// Expected totals implied by [`EXPECTED_CLASS_COUNTS`].
pub fn expected_totals() -> (usize, usize) {
    EXPECTED_CLASS_COUNTS
        .iter()
        .fold((0, 0), |(a, b), (_, l2, l3)| (a + l2, b + l3))
}

const MATCH_HEADER: &str = "sdg_id\tkeyword_or_rank\tjel_code\tlabel\tcount_or_score\tmatched_keywords\n";

/// The `match --method direct` table: one row per (goal, keyword) with the
/// lexicographically first matching code, the match count, and the full
/// code list in the last column.
pub fn direct_match_tsv(per_goal: &[(u8, Vec<DirectMatch>)], taxonomy: &Taxonomy) -> String {
    let mut out = String::from(MATCH_HEADER);
    for (goal, matches) in per_goal {
        for m in matches {
            let (first, label) = match m.codes.first() {
                Some(code) => {
                    let label = taxonomy
                        .get(code)
                        .map(|r| r.label.as_str())
                        .unwrap_or("");
                    (code.as_str().to_string(), label.to_string())
                }
                None => ("-".to_string(), "-".to_string()),
            };
            let all: Vec<&str> = m.codes.iter().map(JelCode::as_str).collect();
            out.push_str(&format!(
                "{goal}\t{}\t{first}\t{label}\t{}\t{}\n",
                m.keyword,
                m.codes.len(),
                all.join(";")
            ));
        }
    }
    out
}

/// The `match --method lafleur|selected3` table: one row per ranked code;
/// the rank carries a `*` suffix for boundary-tie groups.
pub fn ranked_match_tsv(per_goal: &[(u8, Vec<RankedCode>)], taxonomy: &Taxonomy) -> String {
    let mut out = String::from(MATCH_HEADER);
    for (goal, ranked) in per_goal {
        for (pos, r) in ranked.iter().enumerate() {
            let rank = format!("{}{}", pos + 1, if r.tie { "*" } else { "" });
            let label = taxonomy
                .get(&r.code)
                .map(|rec| rec.label.as_str())
                .unwrap_or("");
            out.push_str(&format!(
                "{goal}\t{rank}\t{}\t{label}\t{}\t{}\n",
                r.code,
                r.score,
                r.matched.join(";")
            ));
        }
    }
    out
}

fn keyword_list(words: &[Keyword]) -> String {
    words
        .iter()
        .map(Keyword::surface)
        .collect::<Vec<_>>()
        .join(", ")
}

/// Render one goal's reduction trace; `ok` reports whether every selected
/// keyword survived (stem-level comparison).
pub fn reduce_goal_report(goal: u8, report: &ReduceReport, selected: &[Keyword]) -> (String, bool) {
    let mut out = String::new();
    out.push_str(&format!(
        "goal {goal} original ({}): {}\n",
        report.original.len(),
        keyword_list(&report.original)
    ));
    out.push_str(&format!(
        "goal {goal} step1 general removed ({}): {}\n",
        report.removed_general.len(),
        keyword_list(&report.removed_general)
    ));
    out.push_str(&format!(
        "goal {goal} step2 bigram removed ({}): {}\n",
        report.removed_bigram.len(),
        keyword_list(&report.removed_bigram)
    ));
    out.push_str(&format!(
        "goal {goal} step3 plural removed ({}): {}\n",
        report.removed_plural.len(),
        keyword_list(&report.removed_plural)
    ));
    out.push_str(&format!(
        "goal {goal} survivors ({}): {}\n",
        report.survivors.len(),
        keyword_list(&report.survivors)
    ));
    out.push_str(&format!("goal {goal} selected: {}\n", keyword_list(selected)));
    let survivor_stems: Vec<String> = report.survivors.iter().map(Keyword::entry_stem).collect();
    let missing: Vec<&Keyword> = selected
        .iter()
        .filter(|kw| !survivor_stems.contains(&kw.entry_stem()))
        .collect();
    if missing.is_empty() {
        out.push_str(&format!("goal {goal} survival: ok\n"));
        (out, true)
    } else {
        let names: Vec<&str> = missing.iter().map(|k| k.surface()).collect();
        out.push_str(&format!(
            "goal {goal} survival: VIOLATION ({})\n",
            names.join(", ")
        ));
        (out, false)
    }
}

/// Render the full `reduce` report over a catalog; `ok` is the conjunction
/// of all per-goal survival checks.
pub fn reduce_catalog_report(
    catalog: &Catalog,
    reduce: impl Fn(&[Keyword]) -> ReduceReport,
) -> (String, bool) {
    let mut out = String::new();
    let mut all_ok = true;
    for goal in catalog.goals() {
        let report = reduce(&goal.lafleur_keywords);
        let (text, ok) = reduce_goal_report(goal.id, &report, &goal.selected_three);
        out.push_str(&text);
        all_ok &= ok;
    }
    (out, all_ok)
}

/// One JSON line per tagged record: normalized scores rounded to six
/// decimal places, goals in ascending order, `argmax` null when nothing
/// scored.
pub fn tag_jsonl(results: &[TagResult]) -> String {
    let mut out = String::new();
    for r in results {
        let mut scores = serde_json::Map::new();
        for (goal, score) in &r.scores {
            let rounded = (score.to_f64() * 1e6).round() / 1e6;
            let number = serde_json::Number::from_f64(rounded)
                .expect("normalized scores are finite");
            scores.insert(goal.to_string(), serde_json::Value::Number(number));
        }
        let line = serde_json::json!({
            "id": r.id,
            "scores": scores,
            "argmax": r.argmax,
        });
        out.push_str(&serde_json::to_string(&line).expect("tag line serialization cannot fail"));
        out.push('\n');
    }
    out
}

/// The `trend` table: a year column then one column per group.
pub fn trend_tsv(series: &TrendSeries) -> String {
    let mut out = String::from("year");
    for g in &series.groups {
        out.push('\t');
        out.push_str(g);
    }
    out.push('\n');
    for (offset, year) in (series.from..=series.to).enumerate() {
        out.push_str(&year.to_string());
        for counts in &series.counts {
            out.push('\t');
            out.push_str(&counts[offset].to_string());
        }
        out.push('\n');
    }
    out
}

/// Re-export: the linkage JSON shape lives on [`LinkageTable`].
pub fn linkage_json(table: &LinkageTable) -> String {
    table.to_json()
}
