//! The keyword-overlap matching engine.
//!
//! A level-3 JEL record is matched against a goal's keyword list by stem
//! comparison over the record's label and guideline. Unigram keywords match
//! if any text token shares their stem; bigram keywords (`climate_change`)
//! match if the two component stems occur at adjacent positions (either
//! order). Function-word removal keeps original token positions, so removed
//! words leave gaps that break adjacency, and the label/guideline seam can
//! never be bridged.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::catalog::{Catalog, Keyword, SdgGoal};
use crate::error::{Error, Result};
use crate::score::{Score, WeightingScheme};
use crate::taxonomy::{JelCode, JelRecord, Taxonomy};
use crate::text::{normalize_indexed, stem, tokenize_indexed, Stoplist};

/// Where a keyword matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Locus {
    Label,
    Guideline,
}

/// Positioned stems of one record's label and guideline, with a seam that
/// keeps bigrams from spanning the two texts.
#[derive(Debug, Clone)]
pub struct TextIndex {
    /// (position, stem), ascending by position.
    entries: Vec<(usize, String)>,
    /// First guideline position; label positions are all smaller.
    seam: usize,
}

impl TextIndex {
    pub fn build(label: &str, guideline: &str, stoplist: &Stoplist) -> TextIndex {
        let seam = tokenize_indexed(label).len() + 2;
        let mut entries: Vec<(usize, String)> = normalize_indexed(label, stoplist)
            .into_iter()
            .map(|(pos, tok)| (pos, stem(&tok)))
            .collect();
        entries.extend(
            normalize_indexed(guideline, stoplist)
                .into_iter()
                .map(|(pos, tok)| (pos + seam, stem(&tok))),
        );
        TextIndex { entries, seam }
    }

    pub fn for_record(record: &JelRecord, stoplist: &Stoplist) -> TextIndex {
        TextIndex::build(&record.label, &record.guideline, stoplist)
    }

    fn positions_of(&self, stem: &str) -> impl Iterator<Item = usize> + '_ {
        let stem = stem.to_string();
        self.entries
            .iter()
            .filter(move |(_, s)| *s == stem)
            .map(|(p, _)| *p)
    }

    fn locus_of(&self, position: usize) -> Locus {
        if position < self.seam {
            Locus::Label
        } else {
            Locus::Guideline
        }
    }
}

/// Test one keyword against one record index. `Some(locus)` on a match.
pub fn keyword_matches(keyword: &Keyword, index: &TextIndex) -> Option<Locus> {
    let mut comps = keyword.components();
    let first = comps.next().expect("keyword has at least one component");
    match comps.next() {
        None => {
            let s = stem(first);
            index
                .positions_of(&s)
                .next()
                .map(|pos| index.locus_of(pos))
        }
        Some(second) => {
            let sa = stem(first);
            let sb = stem(second);
            let pos_b: Vec<usize> = index.positions_of(&sb).collect();
            for pa in index.positions_of(&sa) {
                for &pb in &pos_b {
                    if pa.abs_diff(pb) == 1 {
                        return Some(index.locus_of(pa.min(pb)));
                    }
                }
            }
            None
        }
    }
}

/// Weighted overlap of a ranked keyword list with one record.
/// Returns the exact score and the matched keyword surfaces in rank order.
pub fn overlap_score(
    keywords: &[Keyword],
    index: &TextIndex,
    scheme: WeightingScheme,
) -> Result<(Score, Vec<String>)> {
    let mut score = Score::ZERO;
    let mut matched = Vec::new();
    for (i, kw) in keywords.iter().enumerate() {
        if keyword_matches(kw, index).is_some() {
            score = score + scheme.weight(i + 1)?;
            matched.push(kw.surface().to_string());
        }
    }
    Ok((score, matched))
}

/// Prebuilt indexes for every level-3 record of a taxonomy.
pub struct TaxonomyIndex<'t> {
    records: Vec<(&'t JelRecord, TextIndex)>,
}

impl<'t> TaxonomyIndex<'t> {
    pub fn build(taxonomy: &'t Taxonomy, stoplist: &Stoplist) -> TaxonomyIndex<'t> {
        TaxonomyIndex {
            records: taxonomy
                .level3()
                .map(|r| (r, TextIndex::for_record(r, stoplist)))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'t JelRecord, &TextIndex)> {
        self.records.iter().map(|(r, i)| (*r, i))
    }

    /// All level-3 codes matching one keyword, ascending.
    pub fn matching_codes(&self, keyword: &Keyword) -> Vec<JelCode> {
        self.iter()
            .filter(|(_, idx)| keyword_matches(keyword, idx).is_some())
            .map(|(r, _)| r.code.clone())
            .collect()
    }
}

/// One code in a ranked result.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankedCode {
    pub code: JelCode,
    pub score: Score,
    /// Matched keyword surfaces in keyword-rank order.
    pub matched: Vec<String>,
    /// True when this code belongs to a score group that straddles the
    /// top-k boundary.
    pub tie: bool,
}

/// Score every level-3 code and keep the top `k`.
///
/// Zero scores are dropped; codes sort by score descending, then code
/// ascending. If the score group at the k-boundary straddles it, the whole
/// group is returned and every member is flagged `tie`; a group that ends
/// exactly at `k` is not flagged.
pub fn rank_codes(
    keywords: &[Keyword],
    index: &TaxonomyIndex,
    scheme: WeightingScheme,
    k: usize,
) -> Result<Vec<RankedCode>> {
    let mut scored: Vec<RankedCode> = Vec::new();
    for (record, text_index) in index.iter() {
        let (score, matched) = overlap_score(keywords, text_index, scheme)?;
        if !score.is_zero() {
            scored.push(RankedCode {
                code: record.code.clone(),
                score,
                matched,
                tie: false,
            });
        }
    }
    scored.sort_by(|a, b| b.score.cmp(&a.score).then_with(|| a.code.cmp(&b.code)));
    if scored.len() <= k {
        return Ok(scored);
    }
    let boundary = scored[k - 1].score;
    if scored[k].score != boundary {
        scored.truncate(k);
        return Ok(scored);
    }
    let end = scored.partition_point(|r| r.score >= boundary);
    scored.truncate(end);
    for r in &mut scored {
        if r.score == boundary {
            r.tie = true;
        }
    }
    Ok(scored)
}

/// Which keyword list drives a match run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Direct keywords; per-keyword membership, uniform counting.
    Direct,
    /// The full ranked LaFleur lists.
    LaFleur,
    /// The three selected keywords per goal.
    SelectedThree,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Direct => "direct",
            Method::LaFleur => "lafleur",
            Method::SelectedThree => "selected3",
        }
    }

    pub fn from_name(name: &str) -> Option<Method> {
        match name {
            "direct" => Some(Method::Direct),
            "lafleur" => Some(Method::LaFleur),
            "selected3" => Some(Method::SelectedThree),
            _ => None,
        }
    }

    /// The keyword list this method reads from a goal.
    pub fn keywords<'g>(&self, goal: &'g SdgGoal) -> &'g [Keyword] {
        match self {
            Method::Direct => &goal.direct_keywords,
            Method::LaFleur => &goal.lafleur_keywords,
            Method::SelectedThree => &goal.selected_three,
        }
    }
}

/// Per-keyword membership for one goal under the direct method.
#[derive(Debug, Clone)]
pub struct DirectMatch {
    pub keyword: Keyword,
    /// Matching level-3 codes, ascending.
    pub codes: Vec<JelCode>,
}

/// Match every direct keyword of `goal` against the taxonomy.
pub fn direct_match(goal: &SdgGoal, index: &TaxonomyIndex) -> Vec<DirectMatch> {
    goal.direct_keywords
        .iter()
        .map(|kw| DirectMatch {
            keyword: kw.clone(),
            codes: index.matching_codes(kw),
        })
        .collect()
}

/// The outcome of the three-step keyword reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReduceReport {
    pub original: Vec<Keyword>,
    /// Step 1: general stoplist words (exact surface match).
    pub removed_general: Vec<Keyword>,
    /// Step 2: bigrams whose both components survive step 1 as entries.
    pub removed_bigram: Vec<Keyword>,
    /// Step 3: stem-equal duplicates (the shorter surface wins; earlier
    /// rank wins a length tie).
    pub removed_plural: Vec<Keyword>,
    /// Survivors in original order, re-ranked 1..=len.
    pub survivors: Vec<Keyword>,
}

/// Reduce a ranked keyword list in three sequential steps: drop general
/// stoplist words, drop bigrams whose both components remain as entries,
/// then dedupe stem-equal entries keeping the shortest surface.
pub fn reduce_keywords(keywords: &[Keyword], stoplist: &Stoplist) -> ReduceReport {
    let original = keywords.to_vec();

    let mut removed_general = Vec::new();
    let mut step1 = Vec::new();
    for kw in keywords {
        if stoplist.is_general(kw.surface()) {
            removed_general.push(kw.clone());
        } else {
            step1.push(kw.clone());
        }
    }

    let surfaces: Vec<String> =
        step1.iter().map(|k| k.surface().to_string()).collect();
    let mut removed_bigram = Vec::new();
    let mut step2 = Vec::new();
    for kw in step1 {
        let is_redundant = kw.is_bigram()
            && kw.components().all(|c| surfaces.iter().any(|s| s == c));
        if is_redundant {
            removed_bigram.push(kw);
        } else {
            step2.push(kw);
        }
    }

    let mut kept: BTreeMap<String, usize> = BTreeMap::new(); // entry stem -> survivor slot
    let mut survivors: Vec<Keyword> = Vec::new();
    let mut removed_plural = Vec::new();
    for kw in step2 {
        let es = kw.entry_stem();
        match kept.get(&es) {
            None => {
                kept.insert(es, survivors.len());
                survivors.push(kw);
            }
            Some(&slot) => {
                if kw.surface().len() < survivors[slot].surface().len() {
                    removed_plural.push(std::mem::replace(&mut survivors[slot], kw));
                } else {
                    removed_plural.push(kw);
                }
            }
        }
    }

    ReduceReport {
        original,
        removed_general,
        removed_bigram,
        removed_plural,
        survivors,
    }
}

/// A goal-by-goal table of scored JEL codes, the exchange format between
/// `export-linkage` and `tag`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkageTable {
    pub method: Method,
    pub weighting: WeightingScheme,
    /// Goal id -> scored codes (descending score, ascending code).
    pub entries: BTreeMap<u8, Vec<RankedCode>>,
}

impl LinkageTable {
    /// Score every goal against the taxonomy. With `top = None` every
    /// nonzero-scoring code is kept; with `Some(k)` the top-k boundary-tie
    /// rule of [`rank_codes`] applies.
    ///
    /// Under [`Method::Direct`] a code's score is the number of the goal's
    /// direct keywords that match it (the weighting scheme is ignored).
    pub fn build(
        catalog: &Catalog,
        index: &TaxonomyIndex,
        method: Method,
        weighting: WeightingScheme,
        top: Option<usize>,
    ) -> Result<LinkageTable> {
        let k = top.unwrap_or(usize::MAX);
        let scheme = match method {
            Method::Direct => WeightingScheme::Uniform,
            _ => weighting,
        };
        let mut entries = BTreeMap::new();
        for goal in catalog.goals() {
            let ranked = rank_codes(method.keywords(goal), index, scheme, k)?;
            entries.insert(goal.id, ranked);
        }
        Ok(LinkageTable {
            method,
            weighting: scheme,
            entries,
        })
    }

    /// Serialize as JSON with goal keys in ascending numeric order.
    pub fn to_json(&self) -> String {
        let mut entries = Map::new();
        for (goal, ranked) in &self.entries {
            let rows: Vec<Value> = ranked
                .iter()
                .map(|r| {
                    json!({
                        "jel": r.code.as_str(),
                        "score_num": r.score.numer(),
                        "score_den": r.score.denom(),
                        "matched": r.matched,
                        "tie": r.tie,
                    })
                })
                .collect();
            entries.insert(goal.to_string(), Value::Array(rows));
        }
        let doc = json!({
            "method": self.method.name(),
            "weighting": self.weighting.name(),
            "entries": entries,
        });
        serde_json::to_string_pretty(&doc).expect("linkage serialization cannot fail")
    }

    /// Parse a linkage JSON document (as produced by [`Self::to_json`]).
    pub fn parse(text: &str) -> Result<LinkageTable> {
        let doc: Value = serde_json::from_str(crate::taxonomy::strip_comment_header(text))?;
        let bad = |msg: &str| Error::BadLinkage(msg.to_string());
        let method = doc
            .get("method")
            .and_then(Value::as_str)
            .and_then(Method::from_name)
            .ok_or_else(|| bad("missing or unknown method"))?;
        let weighting = doc
            .get("weighting")
            .and_then(Value::as_str)
            .and_then(WeightingScheme::from_name)
            .ok_or_else(|| bad("missing or unknown weighting"))?;
        let raw_entries = doc
            .get("entries")
            .and_then(Value::as_object)
            .ok_or_else(|| bad("missing entries object"))?;
        let mut entries = BTreeMap::new();
        for (key, rows) in raw_entries {
            let goal: u8 = key
                .parse()
                .ok()
                .filter(|g| (1..=17).contains(g))
                .ok_or_else(|| bad(&format!("bad goal key {key:?}")))?;
            let rows = rows
                .as_array()
                .ok_or_else(|| bad(&format!("goal {goal}: entries must be an array")))?;
            let mut ranked = Vec::with_capacity(rows.len());
            for row in rows {
                let code_str = row
                    .get("jel")
                    .and_then(Value::as_str)
                    .ok_or_else(|| bad(&format!("goal {goal}: row without jel code")))?;
                let code = JelCode::parse(code_str, 0)
                    .map_err(|_| bad(&format!("goal {goal}: bad jel code {code_str:?}")))?;
                let num = row
                    .get("score_num")
                    .and_then(Value::as_i64)
                    .ok_or_else(|| bad(&format!("goal {goal}: {code} without score_num")))?;
                let den = row
                    .get("score_den")
                    .and_then(Value::as_i64)
                    .filter(|d| *d > 0)
                    .ok_or_else(|| bad(&format!("goal {goal}: {code} without valid score_den")))?;
                let matched = row
                    .get("matched")
                    .and_then(Value::as_array)
                    .map(|a| {
                        a.iter()
                            .filter_map(Value::as_str)
                            .map(str::to_string)
                            .collect()
                    })
                    .unwrap_or_default();
                let tie = row.get("tie").and_then(Value::as_bool).unwrap_or(false);
                ranked.push(RankedCode {
                    code,
                    score: Score::new(num, den),
                    matched,
                    tie,
                });
            }
            if entries.insert(goal, ranked).is_some() {
                return Err(bad(&format!("duplicate goal key {goal}")));
            }
        }
        Ok(LinkageTable {
            method,
            weighting,
            entries,
        })
    }

    /// Highest entry score per goal (used to normalize tag scores).
    pub fn max_score(&self, goal: u8) -> Score {
        self.entries
            .get(&goal)
            .and_then(|rows| rows.iter().map(|r| r.score).max())
            .unwrap_or(Score::ZERO)
    }

    /// Score of one code for one goal, if present.
    pub fn score_of(&self, goal: u8, code: &JelCode) -> Option<Score> {
        self.entries
            .get(&goal)?
            .iter()
            .find(|r| &r.code == code)
            .map(|r| r.score)
    }
}
