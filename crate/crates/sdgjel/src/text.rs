//! Tokenization, stemming, and the stoplist.
//!
//! The tokenizer lowercases its input and extracts maximal `[a-z0-9]+` runs;
//! every other character separates tokens. Normalization then removes
//! function words while keeping the surviving tokens' original positions, so
//! adjacency tests can still see the gaps the removed words left behind.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Lowercase `text` and return every `[a-z0-9]+` run with its ordinal
/// position (0-based, counted over all runs before any word removal).
pub fn tokenize_indexed(text: &str) -> Vec<(usize, String)> {
    let mut out = Vec::new();
    let mut current = String::new();
    for ch in text.chars() {
        let ch = if ch.is_ascii_uppercase() {
            ch.to_ascii_lowercase()
        } else {
            ch
        };
        if ch.is_ascii_lowercase() || ch.is_ascii_digit() {
            current.push(ch);
        } else if !current.is_empty() {
            out.push(std::mem::take(&mut current));
        }
    }
    if !current.is_empty() {
        out.push(current);
    }
    out.into_iter().enumerate().collect()
}

/// Tokens with function words removed; original positions are preserved so
/// that removed words leave positional gaps.
pub fn normalize_indexed(text: &str, stoplist: &Stoplist) -> Vec<(usize, String)> {
    tokenize_indexed(text)
        .into_iter()
        .filter(|(_, tok)| !stoplist.is_function(tok))
        .collect()
}

/// Normalized token surfaces, without positions.
pub fn normalize(text: &str, stoplist: &Stoplist) -> Vec<String> {
    normalize_indexed(text, stoplist)
        .into_iter()
        .map(|(_, tok)| tok)
        .collect()
}

/// Light suffix stripper used for keyword/text comparison.
///
/// The rules run in order; at most one plural/derivational suffix rule fires,
/// then one trailing `e` is always dropped. A handful of irregular plurals
/// are mapped first.
// The branch bodies repeat on purpose: each arm is one row of the ordered
// rule table, and merging rows would change which rule is considered first.
#[allow(clippy::if_same_then_else)]
pub fn stem(token: &str) -> String {
    let mut t = match token {
        "women" => "woman".to_string(),
        "men" => "man".to_string(),
        "children" => "child".to_string(),
        "cities" => "city".to_string(),
        _ => token.to_string(),
    };
    if let Some(base) = t.strip_suffix("izations") {
        t = format!("{base}ize");
    } else if let Some(base) = t.strip_suffix("ization") {
        t = format!("{base}ize");
    } else if let Some(base) = t.strip_suffix("ities") {
        t = format!("{base}ity");
    } else if let Some(base) = t.strip_suffix("ies") {
        t = format!("{base}y");
    } else if t.ends_with("ural") {
        t.truncate(t.len() - 2);
    } else if t.ends_with("al") && t.len() - 2 >= 5 {
        t.truncate(t.len() - 2);
    } else if t.ends_with("es") {
        t.truncate(t.len() - 2);
    } else if t.ends_with('s') && !t.ends_with("ss") {
        t.truncate(t.len() - 1);
    }
    if t.ends_with('e') {
        t.truncate(t.len() - 1);
    }
    t
}

/// Word lists that shape matching and reduction.
///
/// *Function words* are removed during normalization (leaving positional
/// gaps). *General words* are too generic to be useful keywords; they are
/// dropped in step 1 of keyword reduction but do **not** affect matching.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Stoplist {
    general: BTreeSet<String>,
    function: BTreeSet<String>,
}

impl Stoplist {
    /// Parse the stoplist file format: one word per line, `#` starts a
    /// comment, and the directives `# section: general` /
    /// `# section: function` switch the section words are added to
    /// (general until the first directive).
    pub fn parse(text: &str) -> Result<Stoplist> {
        let mut list = Stoplist::default();
        let mut in_function = false;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                match comment.trim() {
                    "section: general" => in_function = false,
                    "section: function" => in_function = true,
                    _ => {}
                }
                continue;
            }
            if !line
                .chars()
                .all(|c| c.is_ascii_lowercase() || c.is_ascii_digit())
            {
                return Err(Error::BadStoplist {
                    line: idx + 1,
                    message: format!("expected a single lowercase word, got {line:?}"),
                });
            }
            if in_function {
                list.function.insert(line.to_string());
            } else {
                list.general.insert(line.to_string());
            }
        }
        Ok(list)
    }

    pub fn is_function(&self, word: &str) -> bool {
        self.function.contains(word)
    }

    pub fn is_general(&self, word: &str) -> bool {
        self.general.contains(word)
    }

    /// True if `word` appears in either section.
    pub fn contains(&self, word: &str) -> bool {
        self.is_function(word) || self.is_general(word)
    }

    pub fn general_words(&self) -> impl Iterator<Item = &str> {
        self.general.iter().map(String::as_str)
    }

    pub fn function_words(&self) -> impl Iterator<Item = &str> {
        self.function.iter().map(String::as_str)
    }
}
