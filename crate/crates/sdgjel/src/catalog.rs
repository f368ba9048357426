//! The SDG catalog: 17 goals with ranked keyword lists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::taxonomy::strip_comment_header;
use crate::text::{stem, Stoplist};

/// A validated keyword surface: `[a-z0-9]+` optionally joined by a single
/// underscore into a bigram (`food_production`).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Keyword(String);

impl Keyword {
    pub fn parse(surface: &str) -> Result<Keyword> {
        let parts: Vec<&str> = surface.split('_').collect();
        let ok = matches!(parts.len(), 1 | 2)
            && parts.iter().all(|p| {
                !p.is_empty()
                    && p.chars()
                        .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
            });
        if ok {
            Ok(Keyword(surface.to_string()))
        } else {
            Err(Error::BadCatalog(format!("bad keyword {surface:?}")))
        }
    }

    pub fn surface(&self) -> &str {
        &self.0
    }

    /// True for two-component keywords (`climate_change`).
    pub fn is_bigram(&self) -> bool {
        self.0.contains('_')
    }

    /// The one or two word components.
    pub fn components(&self) -> impl Iterator<Item = &str> {
        self.0.split('_')
    }

    /// Component stems joined by `_`; keywords are considered equal when
    /// their entry stems are equal (`emission` vs `emissions`).
    pub fn entry_stem(&self) -> String {
        self.components()
            .map(stem)
            .collect::<Vec<_>>()
            .join("_")
    }
}

impl std::fmt::Display for Keyword {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// One Sustainable Development Goal with its keyword lists. List order is
/// rank order: the first keyword has rank 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdgGoal {
    pub id: u8,
    pub title: String,
    pub direct_keywords: Vec<Keyword>,
    pub lafleur_keywords: Vec<Keyword>,
    pub selected_three: Vec<Keyword>,
}

#[derive(Debug, Serialize, Deserialize)]
struct RawGoal {
    id: u8,
    title: String,
    direct_keywords: Vec<String>,
    lafleur_keywords: Vec<String>,
    selected_three: Vec<String>,
}

/// The parsed catalog: goals 1..=17 in ascending id order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Catalog {
    goals: Vec<SdgGoal>,
}

impl Catalog {
    /// Parse and validate: ids are exactly 1..=17, keyword syntax holds,
    /// the LaFleur list has at most 20 entries and no duplicates, and
    /// `selected_three` has exactly 3 entries each matching a LaFleur
    /// keyword at the stem level.
    pub fn parse(text: &str) -> Result<Catalog> {
        let raw: Vec<RawGoal> = serde_json::from_str(strip_comment_header(text))?;
        if raw.len() != 17 {
            return Err(Error::BadCatalog(format!(
                "expected 17 goals, found {}",
                raw.len()
            )));
        }
        let mut goals = Vec::with_capacity(17);
        for (idx, g) in raw.into_iter().enumerate() {
            let expect_id = idx as u8 + 1;
            if g.id != expect_id {
                return Err(Error::BadCatalog(format!(
                    "goal at position {} has id {} (expected {expect_id})",
                    idx + 1,
                    g.id
                )));
            }
            if g.title.trim().is_empty() {
                return Err(Error::BadCatalog(format!("goal {} has an empty title", g.id)));
            }
            let parse_list = |words: &[String]| -> Result<Vec<Keyword>> {
                words.iter().map(|w| Keyword::parse(w)).collect()
            };
            let direct = parse_list(&g.direct_keywords)?;
            let lafleur = parse_list(&g.lafleur_keywords)?;
            let selected = parse_list(&g.selected_three)?;
            if lafleur.len() > 20 {
                return Err(Error::BadCatalog(format!(
                    "goal {}: {} LaFleur keywords (max 20)",
                    g.id,
                    lafleur.len()
                )));
            }
            for (i, kw) in lafleur.iter().enumerate() {
                if lafleur[..i].contains(kw) {
                    return Err(Error::BadCatalog(format!(
                        "goal {}: duplicate keyword {kw}",
                        g.id
                    )));
                }
            }
            if selected.len() != 3 {
                return Err(Error::BadCatalog(format!(
                    "goal {}: selected_three has {} entries",
                    g.id,
                    selected.len()
                )));
            }
            let lafleur_stems: Vec<String> = lafleur.iter().map(Keyword::entry_stem).collect();
            for kw in &selected {
                if !lafleur_stems.contains(&kw.entry_stem()) {
                    return Err(Error::BadCatalog(format!(
                        "goal {}: selected keyword {kw} has no stem-equal LaFleur entry",
                        g.id
                    )));
                }
            }
            goals.push(SdgGoal {
                id: g.id,
                title: g.title,
                direct_keywords: direct,
                lafleur_keywords: lafleur,
                selected_three: selected,
            });
        }
        Ok(Catalog { goals })
    }

    /// Serialize back to the catalog JSON shape. `parse(serialize(c)) == c`.
    pub fn serialize(&self) -> String {
        let raw: Vec<RawGoal> = self
            .goals
            .iter()
            .map(|g| RawGoal {
                id: g.id,
                title: g.title.clone(),
                direct_keywords: g.direct_keywords.iter().map(|k| k.0.clone()).collect(),
                lafleur_keywords: g.lafleur_keywords.iter().map(|k| k.0.clone()).collect(),
                selected_three: g.selected_three.iter().map(|k| k.0.clone()).collect(),
            })
            .collect();
        serde_json::to_string_pretty(&raw).expect("catalog serialization cannot fail")
    }

    pub fn goals(&self) -> &[SdgGoal] {
        &self.goals
    }

    pub fn goal(&self, id: u8) -> Option<&SdgGoal> {
        self.goals.get(id.checked_sub(1)? as usize)
    }

    /// No selected keyword surface may appear in the stoplist (either
    /// section); returns one message per violation.
    pub fn stoplist_conflicts(&self, stoplist: &Stoplist) -> Vec<String> {
        let mut out = Vec::new();
        for g in &self.goals {
            for kw in &g.selected_three {
                if stoplist.contains(kw.surface()) {
                    out.push(format!(
                        "goal {}: selected keyword {kw} appears in the stoplist",
                        g.id
                    ));
                }
            }
        }
        out
    }
}
