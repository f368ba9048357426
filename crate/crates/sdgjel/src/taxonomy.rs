//! The three-level JEL classification snapshot.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A validated JEL code: one uppercase letter followed by 0-2 digits.
/// The length determines the level (1, 2, or 3).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct JelCode(String);

impl JelCode {
    /// Validate `token` as a JEL code; `line` feeds the error context.
    pub fn parse(token: &str, line: usize) -> Result<JelCode> {
        let bytes = token.as_bytes();
        let ok = matches!(bytes.len(), 1..=3)
            && bytes[0].is_ascii_uppercase()
            && bytes[1..].iter().all(u8::is_ascii_digit);
        if ok {
            Ok(JelCode(token.to_string()))
        } else {
            Err(Error::BadCode {
                line,
                token: token.to_string(),
            })
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// 1 for `Q`, 2 for `Q5`, 3 for `Q56`.
    pub fn level(&self) -> u8 {
        self.0.len() as u8
    }

    /// The class letter (`'Q'` for `Q56`).
    pub fn class(&self) -> char {
        self.0.as_bytes()[0] as char
    }

    /// The code one level up (`Q56` -> `Q5`, `Q5` -> `Q`, `Q` -> None).
    pub fn parent(&self) -> Option<JelCode> {
        if self.0.len() > 1 {
            Some(JelCode(self.0[..self.0.len() - 1].to_string()))
        } else {
            None
        }
    }
}

impl fmt::Display for JelCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// One snapshot record.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JelRecord {
    pub code: JelCode,
    pub label: String,
    pub guideline: String,
}

impl JelRecord {
    pub fn level(&self) -> u8 {
        self.code.level()
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct RawRecord {
    code: String,
    level: u8,
    parent: Option<String>,
    label: String,
    guideline: String,
}

/// Per-class tallies. By convention the `X0` "General" grouping sections are
/// stored in the snapshot but excluded from the level-2 tally; their
/// children count as ordinary level-3 codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassCounts {
    pub level2: usize,
    pub level3: usize,
}

/// Baseline per-class (level-2, level-3) counts the snapshot must match:
/// 122 level-2 sections and 856 level-3 subject codes over 20 classes.
pub const EXPECTED_CLASS_COUNTS: [(char, usize, usize); 20] = [
    ('A', 3, 16),
    ('B', 5, 32),
    ('C', 9, 70),
    ('D', 9, 65),
    ('E', 7, 47),
    ('F', 6, 53),
    ('G', 5, 33),
    ('H', 8, 56),
    ('I', 3, 23),
    ('J', 8, 62),
    ('K', 4, 30),
    ('L', 9, 72),
    ('M', 5, 29),
    ('N', 9, 74),
    ('O', 5, 41),
    ('P', 5, 43),
    ('Q', 5, 49),
    ('R', 5, 31),
    ('Y', 9, 11),
    ('Z', 3, 19),
];

/// A parsed, structurally validated snapshot.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Taxonomy {
    records: BTreeMap<JelCode, JelRecord>,
}

/// Drop leading lines that start with `#` (data files may carry a curation
/// header before the JSON payload).
pub fn strip_comment_header(text: &str) -> &str {
    let mut rest = text;
    loop {
        let trimmed = rest.trim_start_matches(['\r', '\n', ' ', '\t']);
        if let Some(stripped) = trimmed.strip_prefix('#') {
            match stripped.find('\n') {
                Some(eol) => rest = &stripped[eol + 1..],
                None => return "",
            }
        } else {
            return trimmed;
        }
    }
}

impl Taxonomy {
    /// Parse a snapshot JSON array (optionally preceded by `#` comment
    /// lines) and validate every structural invariant: code syntax, level
    /// consistency, parent prefix links, label presence, uniqueness.
    pub fn parse(text: &str) -> Result<Taxonomy> {
        let raw: Vec<RawRecord> = serde_json::from_str(strip_comment_header(text))?;
        let mut records = BTreeMap::new();
        for (idx, r) in raw.iter().enumerate() {
            let line = idx + 1;
            let code = JelCode::parse(&r.code, line)?;
            if r.level != code.level() {
                return Err(Error::BadCode {
                    line,
                    token: format!("{} (level {} stated, {} implied)", r.code, r.level, code.level()),
                });
            }
            let expected_parent = code.parent();
            let stated_parent = match &r.parent {
                Some(p) => Some(JelCode::parse(p, line)?),
                None => None,
            };
            if stated_parent != expected_parent {
                return Err(Error::OrphanCode(r.code.clone()));
            }
            if r.label.trim().is_empty() {
                return Err(Error::BadCode {
                    line,
                    token: format!("{} (empty label)", r.code),
                });
            }
            let record = JelRecord {
                code: code.clone(),
                label: r.label.clone(),
                guideline: r.guideline.clone(),
            };
            if records.insert(code, record).is_some() {
                return Err(Error::DuplicateCode(r.code.clone()));
            }
        }
        // parents must exist
        for code in records.keys().cloned().collect::<Vec<_>>() {
            if let Some(parent) = code.parent() {
                if !records.contains_key(&parent) {
                    return Err(Error::OrphanCode(code.as_str().to_string()));
                }
            }
        }
        Ok(Taxonomy { records })
    }

    /// Serialize back to the snapshot JSON shape (ascending code order).
    /// `parse(serialize(t)) == t`.
    pub fn serialize(&self) -> String {
        let raw: Vec<RawRecord> = self
            .iter()
            .map(|r| RawRecord {
                code: r.code.as_str().to_string(),
                level: r.level(),
                parent: r.code.parent().map(|p| p.as_str().to_string()),
                label: r.label.clone(),
                guideline: r.guideline.clone(),
            })
            .collect();
        serde_json::to_string_pretty(&raw).expect("snapshot serialization cannot fail")
    }

    pub fn get(&self, code: &JelCode) -> Option<&JelRecord> {
        self.records.get(code)
    }

    pub fn contains(&self, code: &JelCode) -> bool {
        self.records.contains_key(code)
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// All records in ascending lexicographic code order.
    pub fn iter(&self) -> impl Iterator<Item = &JelRecord> {
        self.records.values()
    }

    /// Level-3 records in ascending code order (the only level searched by
    /// keyword matching).
    pub fn level3(&self) -> impl Iterator<Item = &JelRecord> {
        self.iter().filter(|r| r.level() == 3)
    }

    /// Per-class counts under the X0 convention, in class-letter order.
    pub fn class_counts(&self) -> Vec<(char, ClassCounts)> {
        let mut counts: BTreeMap<char, ClassCounts> = BTreeMap::new();
        for r in self.iter() {
            let entry = counts.entry(r.code.class()).or_insert(ClassCounts {
                level2: 0,
                level3: 0,
            });
            match r.level() {
                2 => {
                    if !r.code.as_str().ends_with('0') {
                        entry.level2 += 1;
                    }
                }
                3 => entry.level3 += 1,
                _ => {}
            }
        }
        counts.into_iter().collect()
    }

    /// Compare [`Self::class_counts`] against [`EXPECTED_CLASS_COUNTS`].
    /// Returns one line per difference; empty means the snapshot matches.
    pub fn count_diffs(&self) -> Vec<String> {
        let got: BTreeMap<char, ClassCounts> = self.class_counts().into_iter().collect();
        let mut diffs = Vec::new();
        for (class, l2, l3) in EXPECTED_CLASS_COUNTS {
            match got.get(&class) {
                None => diffs.push(format!("class {class}: missing (expected {l2}/{l3})")),
                Some(c) if c.level2 != l2 || c.level3 != l3 => diffs.push(format!(
                    "class {class}: level2 {} expected {l2}, level3 {} expected {l3}",
                    c.level2, c.level3
                )),
                _ => {}
            }
        }
        for class in got.keys() {
            if !EXPECTED_CLASS_COUNTS.iter().any(|(c, _, _)| c == class) {
                diffs.push(format!("class {class}: unexpected"));
            }
        }
        diffs
    }
}
