//! # sdgjel
//!
//! A keyword-overlap crosswalk between the 17 UN Sustainable Development
//! Goals (SDGs) and the JEL classification used to index economics
//! literature.
//!
//! The crate bundles a three-level JEL snapshot, an SDG catalog with three
//! keyword lists per goal, and a stoplist. On top of those it implements:
//!
//! * **taxonomy parsing and validation** — structural invariants plus a
//!   pinned per-class count baseline ([`taxonomy::EXPECTED_CLASS_COUNTS`]);
//! * **keyword matching** — stem-level unigram and adjacency-constrained
//!   bigram matching over code labels and guidelines
//!   ([`matcher::keyword_matches`]);
//! * **weighted overlap ranking** — exact rational scores under uniform,
//!   harmonic, or top-five weighting, with whole-group boundary ties
//!   ([`matcher::rank_codes`]);
//! * **keyword reduction** — the three-step list cleanup with survival
//!   checking ([`matcher::reduce_keywords`]);
//! * **corpus tools** — lenient JSONL ingestion, SDG tagging through a
//!   linkage table, and phrase-trend counting ([`corpus`]).
//!
//! ## Runnable examples
//!
//! Each major capability has a self-contained example under `examples/`:
//!
//! | Example | Run | Shows |
//! |---|---|---|
//! | `validate_snapshot` | `cargo run --example validate_snapshot` | parse + count validation |
//! | `direct_search` | `cargo run --example direct_search` | per-keyword code membership |
//! | `rank_linkage` | `cargo run --example rank_linkage` | weighted overlap ranking |
//! | `reduce_keywords` | `cargo run --example reduce_keywords` | three-step list reduction |
//! | `export_linkage` | `cargo run --example export_linkage` | linkage JSON exchange format |
//! | `tag_records` | `cargo run --example tag_records` | tagging biblio records |
//! | `trend_series` | `cargo run --example trend_series` | phrase trend counting |
//!
//! The same functionality is exposed by the `sdgjel` binary
//! (`cargo run --bin sdgjel -- --help`) with subcommands `validate`,
//! `match`, `reduce`, `export-linkage`, `tag`, and `trend`.
//!
//! ## Quick start
//!
//! ```
//! use sdgjel::prelude::*;
//!
//! let taxonomy = Taxonomy::parse(sdgjel::data::EMBEDDED_SNAPSHOT)?;
//! let catalog = Catalog::parse(sdgjel::data::EMBEDDED_CATALOG)?;
//! let stoplist = Stoplist::parse(sdgjel::data::EMBEDDED_STOPLIST)?;
//!
//! let index = TaxonomyIndex::build(&taxonomy, &stoplist);
//! let goal13 = catalog.goal(13).unwrap();
//! let top = rank_codes(
//!     &goal13.lafleur_keywords,
//!     &index,
//!     WeightingScheme::TopFiveThenHarmonic,
//!     3,
//! )?;
//! assert_eq!(top[0].code.as_str(), "Q54"); // climate
//! # Ok::<(), sdgjel::Error>(())
//! ```

pub mod catalog;
pub mod corpus;
pub mod data;
pub mod error;
pub mod matcher;
pub mod report;
pub mod score;
pub mod taxonomy;
pub mod text;

pub use error::{Error, Result};

/// The common imports for working with the crate.
pub mod prelude {
    pub use crate::catalog::{Catalog, Keyword, SdgGoal};
    pub use crate::corpus::{
        parse_corpus, phrase_match, tag_record, trend_count, BiblioRecord, TrendGroup,
    };
    pub use crate::error::{Error, Result};
    pub use crate::matcher::{
        direct_match, keyword_matches, rank_codes, reduce_keywords, LinkageTable, Locus,
        Method, RankedCode, TaxonomyIndex, TextIndex,
    };
    pub use crate::score::{Score, WeightingScheme};
    pub use crate::taxonomy::{JelCode, JelRecord, Taxonomy};
    pub use crate::text::{normalize, stem, Stoplist};
}
