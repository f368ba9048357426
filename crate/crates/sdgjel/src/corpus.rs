//! Bibliographic corpus ingestion, SDG tagging, and phrase trends.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matcher::LinkageTable;
use crate::score::Score;
use crate::taxonomy::{JelCode, Taxonomy};

/// One bibliographic record from a JSONL corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiblioRecord {
    pub id: String,
    pub year: i32,
    pub title: String,
    #[serde(rename = "abstract")]
    pub abstract_text: String,
    pub jel_codes: Vec<String>,
}

/// Smallest / largest publication year accepted.
pub const YEAR_MIN: i32 = 1900;
pub const YEAR_MAX: i32 = 2100;

/// A per-line ingestion message. `skipped` records whether the line's
/// record was dropped (malformed) or kept (advisory warning).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
    pub skipped: bool,
}

impl Diagnostic {
    fn skip(line: usize, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            line,
            message: message.into(),
            skipped: true,
        }
    }

    fn warn(line: usize, message: impl Into<String>) -> Diagnostic {
        Diagnostic {
            line,
            message: message.into(),
            skipped: false,
        }
    }
}

/// Parse a JSONL corpus leniently.
///
/// Blank lines are ignored. A malformed line (bad JSON, missing fields,
/// year outside [1900, 2100], syntactically invalid JEL code, duplicate id)
/// yields a [`Diagnostic`] and is skipped — ingestion never aborts. A
/// syntactically valid code that is missing from `taxonomy` (when one is
/// given) yields a warning diagnostic but the record is kept.
pub fn parse_corpus(
    text: &str,
    taxonomy: Option<&Taxonomy>,
) -> (Vec<BiblioRecord>, Vec<Diagnostic>) {
    let mut records = Vec::new();
    let mut diagnostics = Vec::new();
    let mut seen_ids = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let record: BiblioRecord = match serde_json::from_str(raw) {
            Ok(r) => r,
            Err(e) => {
                diagnostics.push(Diagnostic::skip(line, format!("malformed record: {e}")));
                continue;
            }
        };
        if record.id.trim().is_empty() {
            diagnostics.push(Diagnostic::skip(line, "empty id"));
            continue;
        }
        if !(YEAR_MIN..=YEAR_MAX).contains(&record.year) {
            diagnostics.push(Diagnostic::skip(
                line,
                format!(
                    "year {} outside [{YEAR_MIN}, {YEAR_MAX}]",
                    record.year
                ),
            ));
            continue;
        }
        let mut bad_code = None;
        for code in &record.jel_codes {
            if JelCode::parse(code, line).is_err() {
                bad_code = Some(code.clone());
                break;
            }
        }
        if let Some(code) = bad_code {
            diagnostics.push(Diagnostic::skip(line, format!("bad JEL code {code:?}")));
            continue;
        }
        if !seen_ids.insert(record.id.clone()) {
            diagnostics.push(Diagnostic::skip(
                line,
                format!("duplicate id {:?}", record.id),
            ));
            continue;
        }
        if let Some(tax) = taxonomy {
            for code in &record.jel_codes {
                let parsed = JelCode::parse(code, line).expect("checked above");
                if !tax.contains(&parsed) {
                    diagnostics.push(Diagnostic::warn(
                        line,
                        format!("unknown JEL code {code} (kept)"),
                    ));
                }
            }
        }
        records.push(record);
    }
    (records, diagnostics)
}

/// SDG scores for one record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TagResult {
    pub id: String,
    /// Goal id -> normalized score (raw / max linkage score, clamped to 1).
    /// Zero scores are omitted.
    pub scores: BTreeMap<u8, Score>,
    /// Goal with the highest raw score (smallest id wins ties); `None`
    /// when no goal scores at all.
    pub argmax: Option<u8>,
}

/// Tag one record against a linkage table.
///
/// The record's codes are deduplicated; each goal's raw score is the sum of
/// the linkage scores of those codes; the reported score is raw divided by
/// the goal's maximum single-code linkage score, clamped to 1.
pub fn tag_record(record: &BiblioRecord, linkage: &LinkageTable) -> TagResult {
    let mut codes: Vec<JelCode> = record
        .jel_codes
        .iter()
        .filter_map(|c| JelCode::parse(c, 0).ok())
        .collect();
    codes.sort();
    codes.dedup();

    let mut scores = BTreeMap::new();
    let mut best: Option<(Score, u8)> = None;
    for &goal in linkage.entries.keys() {
        let raw: Score = codes
            .iter()
            .filter_map(|c| linkage.score_of(goal, c))
            .sum();
        if raw.is_zero() {
            continue;
        }
        match best {
            Some((best_raw, _)) if raw <= best_raw => {}
            _ => best = Some((raw, goal)),
        }
        let max = linkage.max_score(goal);
        let normalized = if max.is_zero() {
            Score::ZERO
        } else {
            let ratio = Score::new(
                raw.numer() * max.denom(),
                raw.denom() * max.numer(),
            );
            ratio.min(Score::from_int(1))
        };
        scores.insert(goal, normalized);
    }
    TagResult {
        id: record.id.clone(),
        scores,
        argmax: best.map(|(_, goal)| goal),
    }
}

/// Case- and whitespace-insensitive substring containment (no stemming):
/// both sides are lowercased and whitespace runs collapse to single spaces.
pub fn phrase_match(text: &str, phrase: &str) -> bool {
    let fold = |s: &str| {
        s.split_whitespace()
            .map(|w| w.to_lowercase())
            .collect::<Vec<_>>()
            .join(" ")
    };
    let phrase = fold(phrase);
    if phrase.is_empty() {
        return false;
    }
    fold(text).contains(&phrase)
}

/// A named group of phrases counted together in a trend.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrendGroup {
    pub name: String,
    pub phrases: Vec<String>,
}

impl TrendGroup {
    /// Parse the CLI syntax `NAME=PHRASE[;PHRASE...]`.
    pub fn parse(spec: &str) -> Result<TrendGroup> {
        let (name, rest) = spec
            .split_once('=')
            .ok_or_else(|| Error::BadGroup(format!("{spec:?} (expected NAME=PHRASE[;PHRASE...])")))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(Error::BadGroup(format!("{spec:?} (empty name)")));
        }
        let phrases: Vec<String> = rest
            .split(';')
            .map(|p| p.trim().to_string())
            .filter(|p| !p.is_empty())
            .collect();
        if phrases.is_empty() {
            return Err(Error::BadGroup(format!("{spec:?} (no phrases)")));
        }
        Ok(TrendGroup {
            name: name.to_string(),
            phrases,
        })
    }
}

/// Yearly counts per group over an inclusive year range.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrendSeries {
    pub from: i32,
    pub to: i32,
    pub groups: Vec<String>,
    /// `counts[g][y]` = matches of group `g` in year `from + y`.
    pub counts: Vec<Vec<u64>>,
}

/// Count, per year and group, the records whose title or abstract contains
/// any of the group's phrases. A record counts at most once per group.
/// Years outside `[from, to]` are ignored; every year in range appears in
/// the output even when all counts are zero. Duplicate group names are an
/// error.
pub fn trend_count(
    records: &[BiblioRecord],
    groups: &[TrendGroup],
    from: i32,
    to: i32,
) -> Result<TrendSeries> {
    if from > to {
        return Err(Error::BadGroup(format!("year range {from}..{to} is empty")));
    }
    let mut seen = BTreeSet::new();
    for g in groups {
        if !seen.insert(&g.name) {
            return Err(Error::BadGroup(format!("duplicate group name {:?}", g.name)));
        }
    }
    let years = (to - from + 1) as usize;
    let mut counts = vec![vec![0u64; years]; groups.len()];
    for record in records {
        if !(from..=to).contains(&record.year) {
            continue;
        }
        let text = format!("{} {}", record.title, record.abstract_text);
        let slot = (record.year - from) as usize;
        for (gi, group) in groups.iter().enumerate() {
            if group.phrases.iter().any(|p| phrase_match(&text, p)) {
                counts[gi][slot] += 1;
            }
        }
    }
    Ok(TrendSeries {
        from,
        to,
        groups: groups.iter().map(|g| g.name.clone()).collect(),
        counts,
    })
}
