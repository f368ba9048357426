//! `sdgjel` — taxonomy-crosswalk CLI.
//!
//! Thin wrapper over the library: parses arguments, resolves data files,
//! calls the engine, prints reports to stdout and diagnostics to stderr.
//!
//! Exit codes: 0 success; 1 a check failed (validation diff, reduction
//! survival violation); 2 usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sdgjel::catalog::Catalog;
use sdgjel::corpus::{self, TrendGroup};
use sdgjel::data::DataFile;
use sdgjel::matcher::{self, LinkageTable, Method, TaxonomyIndex};
use sdgjel::report;
use sdgjel::score::WeightingScheme;
use sdgjel::taxonomy::Taxonomy;
use sdgjel::text::Stoplist;

#[derive(Parser)]
#[command(
    name = "sdgjel",
    version,
    about = "Keyword-overlap crosswalk between the UN SDGs and the JEL classification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Lafleur,
    Selected3,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Direct => Method::Direct,
            MethodArg::Lafleur => Method::LaFleur,
            MethodArg::Selected3 => Method::SelectedThree,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum WeightingArg {
    Uniform,
    Harmonic,
    Top5,
}

impl From<WeightingArg> for WeightingScheme {
    fn from(w: WeightingArg) -> WeightingScheme {
        match w {
            WeightingArg::Uniform => WeightingScheme::Uniform,
            WeightingArg::Harmonic => WeightingScheme::Harmonic,
            WeightingArg::Top5 => WeightingScheme::TopFiveThenHarmonic,
        }
    }
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the JEL snapshot against the pinned per-class count baseline.
    Validate {
        /// Snapshot JSON path (default: $SDGJEL_DATA_DIR, then embedded).
        #[arg(long)]
        taxonomy: Option<PathBuf>,
    },
    /// Match SDG keyword lists against level-3 JEL codes.
    Match {
        /// Keyword list to use.
        #[arg(long, value_enum)]
        method: MethodArg,
        /// Rank weighting for scored methods (default: uniform).
        #[arg(long, value_enum)]
        weighting: Option<WeightingArg>,
        /// Codes to keep per goal for scored methods (boundary ties are
        /// returned whole); ignored by --method direct.
        #[arg(long, default_value_t = 3)]
        top: usize,
        /// Output format.
        #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
        format: FormatArg,
        #[arg(long)]
        taxonomy: Option<PathBuf>,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        stoplist: Option<PathBuf>,
    },
    /// Run the three-step keyword reduction and check that every selected
    /// keyword survives.
    Reduce {
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        stoplist: Option<PathBuf>,
    },
    /// Export the full goal-by-goal linkage table as JSON.
    ExportLinkage {
        #[arg(long, value_enum)]
        method: MethodArg,
        #[arg(long, value_enum)]
        weighting: Option<WeightingArg>,
        /// Keep only the top K codes per goal (default: every nonzero code).
        #[arg(long)]
        top: Option<usize>,
        #[arg(long)]
        taxonomy: Option<PathBuf>,
        #[arg(long)]
        catalog: Option<PathBuf>,
        #[arg(long)]
        stoplist: Option<PathBuf>,
    },
    /// Tag bibliographic records with SDG scores through a linkage table.
    Tag {
        /// JSONL corpus path.
        #[arg(long)]
        records: PathBuf,
        /// Linkage JSON path (as produced by export-linkage).
        #[arg(long)]
        linkage: PathBuf,
        /// Snapshot used to warn about unknown JEL codes.
        #[arg(long)]
        taxonomy: Option<PathBuf>,
    },
    /// Count yearly phrase-group matches over a corpus.
    Trend {
        /// JSONL corpus path.
        #[arg(long)]
        records: PathBuf,
        /// Phrase group NAME=PHRASE[;PHRASE...] (repeatable).
        #[arg(long = "group", value_name = "SPEC")]
        groups: Vec<String>,
        /// First year of the reported range (inclusive).
        #[arg(long)]
        from: i32,
        /// Last year of the reported range (inclusive).
        #[arg(long)]
        to: i32,
    },
}

fn load_taxonomy(path: Option<&PathBuf>) -> sdgjel::Result<Taxonomy> {
    Taxonomy::parse(&DataFile::Snapshot.load(path)?)
}

fn load_catalog(path: Option<&PathBuf>) -> sdgjel::Result<Catalog> {
    Catalog::parse(&DataFile::Catalog.load(path)?)
}

fn load_stoplist(path: Option<&PathBuf>) -> sdgjel::Result<Stoplist> {
    Stoplist::parse(&DataFile::Stoplist.load(path)?)
}

/// Resolve the effective weighting and print the direct-method notice.
fn effective_weighting(method: Method, weighting: Option<WeightingArg>) -> WeightingScheme {
    if method == Method::Direct && weighting.is_some() {
        eprintln!("note: --weighting is ignored by the direct method");
    }
    weighting.map(WeightingScheme::from).unwrap_or(WeightingScheme::Uniform)
}

fn run(cli: Cli) -> sdgjel::Result<u8> {
    match cli.command {
        Command::Validate { taxonomy } => {
            let tax = load_taxonomy(taxonomy.as_ref())?;
            print!("{}", report::validate_report(&tax));
            let diffs = tax.count_diffs();
            if diffs.is_empty() {
                Ok(0)
            } else {
                for d in &diffs {
                    eprintln!("{d}");
                }
                Ok(1)
            }
        }
        Command::Match {
            method,
            weighting,
            top,
            format,
            taxonomy,
            catalog,
            stoplist,
        } => {
            if top == 0 {
                eprintln!("error: --top must be at least 1");
                return Ok(2);
            }
            let tax = load_taxonomy(taxonomy.as_ref())?;
            let cat = load_catalog(catalog.as_ref())?;
            let sl = load_stoplist(stoplist.as_ref())?;
            let method = Method::from(method);
            let scheme = effective_weighting(method, weighting);
            let index = TaxonomyIndex::build(&tax, &sl);
            match (method, format) {
                (Method::Direct, FormatArg::Tsv) => {
                    let per_goal: Vec<_> = cat
                        .goals()
                        .iter()
                        .map(|g| (g.id, matcher::direct_match(g, &index)))
                        .collect();
                    print!("{}", report::direct_match_tsv(&per_goal, &tax));
                }
                (Method::Direct, FormatArg::Json) => {
                    let table =
                        LinkageTable::build(&cat, &index, method, scheme, None)?;
                    println!("{}", table.to_json());
                }
                (_, FormatArg::Tsv) => {
                    let mut per_goal = Vec::new();
                    for g in cat.goals() {
                        let ranked =
                            matcher::rank_codes(method.keywords(g), &index, scheme, top)?;
                        per_goal.push((g.id, ranked));
                    }
                    print!("{}", report::ranked_match_tsv(&per_goal, &tax));
                }
                (_, FormatArg::Json) => {
                    let table =
                        LinkageTable::build(&cat, &index, method, scheme, Some(top))?;
                    println!("{}", table.to_json());
                }
            }
            Ok(0)
        }
        Command::Reduce { catalog, stoplist } => {
            let cat = load_catalog(catalog.as_ref())?;
            let sl = load_stoplist(stoplist.as_ref())?;
            let (text, ok) =
                report::reduce_catalog_report(&cat, |kws| matcher::reduce_keywords(kws, &sl));
            print!("{text}");
            Ok(if ok { 0 } else { 1 })
        }
        Command::ExportLinkage {
            method,
            weighting,
            top,
            taxonomy,
            catalog,
            stoplist,
        } => {
            if top == Some(0) {
                eprintln!("error: --top must be at least 1");
                return Ok(2);
            }
            let tax = load_taxonomy(taxonomy.as_ref())?;
            let cat = load_catalog(catalog.as_ref())?;
            let sl = load_stoplist(stoplist.as_ref())?;
            let method = Method::from(method);
            let scheme = effective_weighting(method, weighting);
            let index = TaxonomyIndex::build(&tax, &sl);
            let table = LinkageTable::build(&cat, &index, method, scheme, top)?;
            println!("{}", table.to_json());
            Ok(0)
        }
        Command::Tag {
            records,
            linkage,
            taxonomy,
        } => {
            let tax = load_taxonomy(taxonomy.as_ref())?;
            let table = LinkageTable::parse(&std::fs::read_to_string(&linkage)?)?;
            let text = std::fs::read_to_string(&records)?;
            let (parsed, diagnostics) = corpus::parse_corpus(&text, Some(&tax));
            for d in &diagnostics {
                eprintln!("[WARN] {}:{}: {}", records.display(), d.line, d.message);
            }
            let results: Vec<_> = parsed.iter().map(|r| corpus::tag_record(r, &table)).collect();
            print!("{}", report::tag_jsonl(&results));
            Ok(0)
        }
        Command::Trend {
            records,
            groups,
            from,
            to,
        } => {
            let specs = groups
                .iter()
                .map(|spec| TrendGroup::parse(spec))
                .collect::<sdgjel::Result<Vec<_>>>()?;
            if specs.is_empty() {
                eprintln!("error: at least one --group is required");
                return Ok(2);
            }
            let text = std::fs::read_to_string(&records)?;
            let (parsed, diagnostics) = corpus::parse_corpus(&text, None);
            for d in &diagnostics {
                eprintln!("[WARN] {}:{}: {}", records.display(), d.line, d.message);
            }
            let series = corpus::trend_count(&parsed, &specs, from, to)?;
            print!("{}", report::trend_tsv(&series));
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
