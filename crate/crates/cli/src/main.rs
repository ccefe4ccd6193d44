use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use minhit::{
    enumerate_ehs_with, enumerate_hs, inflate_rows, min_not_mc, minhit_with, random_hypergraph, reduce_hypergraph,
    sample_mhs, stars_hypergraph, BadnessMode, Error, ExactConfig, Grade, Graph, HsConfig, Hypergraph, MinNotMc,
    MinhitConfig, MinhitResult, RowClass, SetFamily, Signature, WildcardRow,
};

const CACHE_KEY: &str = "hypergraph-sha256:";

#[derive(Parser, Debug)]
#[command(name = "minhit", version, about = "Hitting sets of hypergraphs in compressed wildcard form")]
struct Cli {
    /// worker threads; 1 runs sequentially
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum GradeArg {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BadnessArg {
    Auto,
    First,
    Second,
    Third,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CountOf {
    Ehs,
    Hs,
    Mhs,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a random hypergraph with h edges of size k on [w]
    Gen {
        #[arg(long)]
        w: usize,
        #[arg(long)]
        h: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Exact hitting sets as g-rows
    Ehs {
        input: PathBuf,
        #[arg(long)]
        no_feasibility: bool,
        /// enumerate on the reduced hypergraph and inflate
        #[arg(long)]
        reduce: bool,
    },
    /// All hitting sets as semifinal e-rows
    Hs {
        input: PathBuf,
        #[command(flatten)]
        hs: HsArgs,
    },
    /// Minimal hitting sets
    Mhs(MhsArgs),
    /// The inclusion-minimal non-MC sets
    Minnotmc {
        input: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Second-grade classification of the semifinal rows
    Classify(MhsArgs),
    /// Uniformly sampled minimal hitting sets
    Sample {
        input: PathBuf,
        #[arg(short, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Perfect matchings of a graph given as `n m` followed by m edges
    Matchings { input: PathBuf },
    /// Counts only
    Count {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = CountOf::Mhs)]
        of: CountOf,
    },
}

#[derive(Args, Debug)]
struct HsArgs {
    /// drop rows of degree above this
    #[arg(long)]
    cutoff: Option<usize>,
    #[arg(long)]
    no_feasibility: bool,
    /// seeded stack shuffling
    #[arg(long)]
    shuffle_seed: Option<u64>,
}

#[derive(Args, Debug)]
struct MhsArgs {
    input: PathBuf,
    #[command(flatten)]
    hs: HsArgs,
    #[arg(long, value_enum)]
    grade: Option<GradeArg>,
    #[arg(long, default_value_t = 20)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = BadnessArg::Auto)]
    badness: BadnessArg,
    /// do without the minimal non-MC sets
    #[arg(long)]
    no_mnmc: bool,
    #[arg(long)]
    reduce: bool,
    /// cache file for the minimal non-MC sets
    #[arg(long)]
    mnmc_cache: Option<PathBuf>,
    /// classify only the first rows and extrapolate
    #[arg(long)]
    classify_limit: Option<usize>,
}

impl HsArgs {
    fn config(&self) -> HsConfig {
        HsConfig {
            cutoff: self.cutoff,
            skip_feasibility: self.no_feasibility,
            shuffle_seed: self.shuffle_seed,
        }
    }
}

impl MhsArgs {
    fn config(&self, grade: Option<Grade>) -> MinhitConfig {
        MinhitConfig {
            samples: self.samples,
            seed: self.seed,
            grade: grade.or(self.grade.map(|g| match g {
                GradeArg::First => Grade::First,
                GradeArg::Second => Grade::Second,
            })),
            hs: self.hs.config(),
            badness_mode: match self.badness {
                BadnessArg::Auto => BadnessMode::Auto,
                BadnessArg::First => BadnessMode::First,
                BadnessArg::Second => BadnessMode::Second,
                BadnessArg::Third => BadnessMode::Third,
            },
            use_mnmc: !self.no_mnmc,
            reduce: self.reduce,
            classify_limit: self.classify_limit,
            ..MinhitConfig::default()
        }
    }
}

/// Failures mapped to exit codes.
enum Failure {
    Usage(String),
    Input(String),
    Unresolved(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Unresolved(_) => Failure::Unresolved(e.to_string()),
            Error::InvalidSignature(_) | Error::TooLarge { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n as usize).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Input(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Unresolved(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<(Hypergraph, String), Failure> {
    let text = read(path)?;
    let h = Hypergraph::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let uncovered = h.uncovered();
    if !uncovered.is_empty() {
        eprintln!("warning: vertices {uncovered:?} lie in no hyperedge");
    }
    Ok((h, text))
}

fn digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

/// Loads the cached family when its header matches the hypergraph text,
/// otherwise computes it and refreshes the cache.
fn cached_mnmc(h: &Hypergraph, text: &str, cache: &Path) -> Result<MinNotMc, Failure> {
    let key = digest(text);
    if let Ok(old) = fs::read_to_string(cache) {
        let matches = old
            .lines()
            .filter_map(|l| l.strip_prefix('#'))
            .any(|l| l.trim().strip_prefix(CACHE_KEY).map(str::trim) == Some(key.as_str()));
        if matches {
            if let Ok(fam) = SetFamily::parse(&old) {
                if fam.width() == h.width() {
                    return Ok(MinNotMc::from_family(fam));
                }
            }
        }
    }
    let m = min_not_mc(h)?;
    write(cache, &m.family().to_text_with_header(&[format!("{CACHE_KEY} {key}")]))?;
    Ok(m)
}

fn rows_text(rows: &[WildcardRow]) -> String {
    rows.iter().map(|r| format!("{r}\n")).collect()
}

fn rows_json(rows: &[WildcardRow]) -> Value {
    Value::Array(rows.iter().map(|r| json!({ "row": r.to_string(), "cardinality": r.cardinality().to_string() })).collect())
}

fn emit(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Text => text,
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&value).unwrap()),
    }
}

fn run(cli: &Cli) -> Result<String, Failure> {
    let fmt = cli.format;
    match &cli.command {
        Command::Gen { w, h, k, seed, output } => {
            let sig = Signature {
                w: *w,
                h: *h,
                k: *k,
                seed: *seed,
            };
            let g = random_hypergraph(sig)?;
            let text = format!("# signature {w} {h} {k} seed {seed}\n{}", g.to_text());
            match output {
                Some(p) => {
                    write(p, &text)?;
                    Ok(String::new())
                }
                None => Ok(emit(fmt, text, json!({ "signature": sig, "edges": g.as_family() }))),
            }
        }
        Command::Ehs {
            input,
            no_feasibility,
            reduce,
        } => {
            let (h, _) = load(input)?;
            let cfg = ExactConfig {
                feasibility: !no_feasibility,
                ..ExactConfig::default()
            };
            let (rows, total) = if *reduce {
                let (r, map) = reduce_hypergraph(&h)?;
                let rows = inflate_rows(&enumerate_ehs_with(&r, cfg)?.rows, &map)?;
                let total = minhit::row::total_cardinality(&rows);
                (rows, total)
            } else {
                let run = enumerate_ehs_with(&h, cfg)?;
                (run.rows, run.total)
            };
            let text = format!("{}count {total}\n", rows_text(&rows));
            Ok(emit(fmt, text, json!({ "rows": rows_json(&rows), "count": total.to_string() })))
        }
        Command::Hs { input, hs } => {
            let (h, _) = load(input)?;
            let s = enumerate_hs(&h, hs.config())?;
            let total = s.total();
            let text = format!("{}count {total}\n", rows_text(&s.rows));
            let value = json!({
                "rows": Value::Array(s.rows.iter().map(|r| json!({
                    "row": r.to_string(),
                    "cardinality": r.cardinality().to_string(),
                    "degree": r.degree(),
                    "promise": r.promise_size().to_string(),
                })).collect()),
                "count": total.to_string(),
            });
            Ok(emit(fmt, text, value))
        }
        Command::Mhs(args) => {
            let res = run_minhit(args, None)?;
            Ok(emit(fmt, minhit_text(&res), json!(res)))
        }
        Command::Classify(args) => {
            let res = run_minhit(args, Some(Grade::Second))?;
            Ok(emit(fmt, minhit_text(&res), json!(res)))
        }
        Command::Minnotmc { input, output } => {
            let (h, text) = load(input)?;
            let m = min_not_mc(&h)?;
            let body = m.family().to_text_with_header(&[format!("{CACHE_KEY} {}", digest(&text))]);
            match output {
                Some(p) => {
                    write(p, &body)?;
                    Ok(String::new())
                }
                None => Ok(emit(fmt, body, json!(m.family()))),
            }
        }
        Command::Sample { input, n, seed } => {
            let (h, _) = load(input)?;
            let s = enumerate_hs(&h, HsConfig::default())?;
            let picks = sample_mhs(&h, &s, *n, *seed);
            let lists: Vec<Vec<usize>> = picks.iter().map(|z| z.to_one_based()).collect();
            let text: String = lists
                .iter()
                .map(|l| l.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ") + "\n")
                .collect();
            Ok(emit(fmt, text, json!({ "samples": lists })))
        }
        Command::Matchings { input } => {
            let g = Graph::parse(&read(input)?)?;
            let h = stars_hypergraph(&g)?;
            let run = enumerate_ehs_with(&h, ExactConfig::default())?;
            let text = format!("{}count {}\n", rows_text(&run.rows), run.total);
            Ok(emit(fmt, text, json!({ "rows": rows_json(&run.rows), "count": run.total.to_string() })))
        }
        Command::Count { input, of } => {
            let (h, _) = load(input)?;
            let count = match of {
                CountOf::Ehs => enumerate_ehs_with(&h, ExactConfig::default())?.total.to_string(),
                CountOf::Hs => enumerate_hs(&h, HsConfig::default())?.total().to_string(),
                CountOf::Mhs => {
                    let res = minhit_with(&h, &MinhitConfig::default(), None)?;
                    match res.exact {
                        Some(x) => x.to_string(),
                        None => format!("~{:.0}", res.estimate.total),
                    }
                }
            };
            Ok(emit(fmt, format!("{count}\n"), json!({ "count": count })))
        }
    }
}

fn run_minhit(args: &MhsArgs, grade: Option<Grade>) -> Result<MinhitResult, Failure> {
    let (h, text) = load(&args.input)?;
    let cfg = args.config(grade);
    let mnmc = match &args.mnmc_cache {
        Some(p) if cfg.use_mnmc => Some(cached_mnmc(&h, &text, p)?),
        _ => None,
    };
    Ok(minhit_with(&h, &cfg, mnmc)?)
}

fn class_name(c: RowClass) -> &'static str {
    match c {
        RowClass::VeryGood => "very-good",
        RowClass::MerelyGood => "merely-good",
        RowClass::Bad => "bad",
        RowClass::Unresolved => "unresolved",
    }
}

/// Deterministic report: no timings.
fn minhit_text(res: &MinhitResult) -> String {
    let mut out = String::new();
    match res.grade {
        Grade::First => {
            out.push_str(&rows_text(&res.final_rows));
            let _ = writeln!(out, "count {}", res.exact.as_ref().unwrap());
        }
        Grade::Second => {
            for v in &res.verdicts {
                let alpha = v.alpha.map_or("-".to_string(), |a| format!("{a}/{}", v.samples));
                let _ = writeln!(
                    out,
                    "row {} {} alpha {} promise {} degree {}",
                    v.row_index + 1,
                    class_name(v.class),
                    alpha,
                    v.promise_size,
                    v.degree
                );
            }
            let e = &res.estimate;
            let _ = writeln!(out, "estimate {:.1} se {:.1}", e.total, e.std_error);
        }
    }
    let s = &res.stats;
    let mu = s.mu.map_or("-".to_string(), |m| m.to_string());
    let _ = writeln!(out, "# R {} mu {mu} minimum {}", s.semifinal_rows, s.minimum_hs);
    let _ = writeln!(out, "# avg promise {:.2} avg degree {:.2}", s.avg_promise, s.avg_degree);
    if let Some(m) = s.min_not_mc {
        let _ = writeln!(out, "# minnotmc {m}");
    }
    let _ = writeln!(
        out,
        "# very-good {:.1}% merely-good {:.1}% bad {:.1}% unresolved {:.1}%",
        s.very_good_pct, s.merely_good_pct, s.bad_pct, s.unresolved_pct
    );
    let _ = writeln!(out, "# likely-bad {} superkilled {}", s.likely_bad, s.superkilled_of_likely_bad);
    out
}
