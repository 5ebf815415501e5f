use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use arrowsimp::verify::{self, Population, SweepConfig};
use arrowsimp::*;
use arrowsimp_cli::{
    analyze, failure_summary, render_analysis, render_suite, write_csv, write_fixtures, Mode,
    ReportFile, ResultEntry,
};
use clap::{Args, Parser, Subcommand, ValueEnum};

/// Arrow-simplicity of tournaments: generate, analyze, verify, convert.
///
/// Exit status: 0 on success, 1 when a verification check fails, 2 on
/// usage, parse or parameter errors.
#[derive(Parser)]
#[command(name = "arrowsimp", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a tournament in .trn form.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// Compute s(T) (or upper bounds) for a .trn file.
    Analyze {
        file: PathBuf,
        /// Exact search (default).
        #[arg(long, conflicts_with = "bounds_only")]
        exact: bool,
        /// Skip the exact search; report min(δ, Δ) with a witness.
        #[arg(long)]
        bounds_only: bool,
        /// Largest n accepted by exact search.
        #[arg(long, default_value_t = modsimp::DEFAULT_EXACT_CAP)]
        cap: usize,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify(VerifyArgs),
    /// Translate between doubly regular tournaments and skew-Hadamard matrices.
    Convert {
        direction: Direction,
        input: PathBuf,
        output: PathBuf,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// Quadratic-residue tournament on a prime q ≡ 3 (mod 4).
    Paley {
        q: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Seeded random tournament.
    Random {
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Paley tournament with vertices deleted and the rest relabelled 0..
    PaleyMinus {
        q: u64,
        /// Comma-separated vertices to delete, e.g. 0,3.
        #[arg(long, value_delimiter = ',', required = true)]
        delete: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    DrToHadamard,
    HadamardToDr,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Counting identities over a population.
    Identities,
    /// Upper bounds and witness validity over a population.
    Bounds,
    /// Identities, bounds and the definition oracle (n <= 5).
    Theorem1,
    /// Paley-q minus every two and every three vertices.
    Theorem9,
    /// s = 2k iff extendable, for (4k+2)-tournaments.
    Characterize,
    /// Delete-and-extend round trips on Paley-q.
    Lakhlifi,
    /// Double regularity, arc profile and Hadamard bridge of Paley-q.
    Paley,
}

#[derive(Args)]
struct VerifyArgs {
    suite: Suite,
    /// Every labelled tournament on N vertices (N <= 6).
    #[arg(long, value_name = "N", conflicts_with = "samples")]
    exhaustive: Option<usize>,
    /// N seeded random tournaments.
    #[arg(long, value_name = "N")]
    samples: Option<usize>,
    #[arg(long, default_value_t = 3)]
    n_min: usize,
    #[arg(long, default_value_t = 12)]
    n_max: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Paley order for theorem9, lakhlifi, paley and characterize.
    #[arg(long)]
    q: Option<u64>,
    /// A .trn file to check (characterize).
    #[arg(long)]
    input: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
    /// Write the first failing instance of each check here as .trn.
    #[arg(long, value_name = "DIR")]
    fixtures: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    match cli.command {
        Command::Gen { kind } => gen(kind).map(|()| true),
        Command::Analyze { file, exact: _, bounds_only, cap, workers, json } => {
            let t = read_trn(&file)?;
            let mode = if bounds_only { Mode::BoundsOnly } else { Mode::Exact };
            let opts = SearchOptions { workers: workers.max(1), cap, ..Default::default() };
            let a = analyze(&t, mode, &opts)?;
            if json {
                let mut report = ReportFile::new("analyze", None, file.display().to_string());
                report.results.push(ResultEntry::Analysis(a));
                print!("{}", report.to_json());
            } else {
                print!("{}", render_analysis(&a));
            }
            Ok(true)
        }
        Command::Verify(args) => verify_cmd(args),
        Command::Convert { direction, input, output } => convert(direction, &input, &output).map(|()| true),
    }
}

fn read_trn(path: &Path) -> anyhow::Result<Tournament> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_trn(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_out(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn gen(kind: GenKind) -> anyhow::Result<()> {
    let (t, out) = match kind {
        GenKind::Paley { q, out } => (paley_tournament(q)?, out),
        GenKind::Random { n, seed, out } => (random_tournament(n, seed)?, out),
        GenKind::PaleyMinus { q, delete, out } => {
            let t = paley_tournament(q)?;
            let mut d = VertexSet::EMPTY;
            for v in delete {
                if v >= t.n() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: t.n() }.into());
                }
                d.insert(v);
            }
            (t.delete_vertices(d)?, out)
        }
    };
    let text = to_trn(&t);
    let class = match t.regularity_class() {
        Ok(Regularity::Regular) => "regular",
        Ok(Regularity::NearRegular { .. }) => "near-regular",
        _ => "neither",
    };
    match out {
        Some(path) => {
            write_out(&path, &text)?;
            println!("{}: n = {}, {class}", path.display(), t.n());
        }
        None => {
            print!("{text}");
            eprintln!("n = {}, {class}", t.n());
        }
    }
    Ok(())
}

fn population(args: &VerifyArgs) -> (Population, String) {
    match args.exhaustive {
        Some(n) => (Population::Exhaustive { n }, format!("exhaustive:n={n}")),
        None => {
            let count = args.samples.unwrap_or(200);
            let (n_min, n_max, seed) = (args.n_min, args.n_max, args.seed);
            (
                Population::Sample { n_min, n_max, count, seed },
                format!("random:n={n_min}..={n_max}:count={count}"),
            )
        }
    }
}

fn require_q(args: &VerifyArgs, default: u64) -> u64 {
    args.q.unwrap_or(default)
}

fn verify_cmd(args: VerifyArgs) -> anyhow::Result<bool> {
    let opts = SearchOptions { workers: args.workers.max(1), ..Default::default() };
    let mut seed = None;
    let (command, input, reports) = match args.suite {
        Suite::Identities | Suite::Bounds | Suite::Theorem1 => {
            let (pop, input) = population(&args);
            if matches!(pop, Population::Sample { .. }) {
                seed = Some(args.seed);
            }
            let mut config = SweepConfig::new(pop);
            config.identities = args.suite != Suite::Bounds;
            config.bounds = args.suite != Suite::Identities;
            config.oracle = args.suite == Suite::Theorem1;
            let mut r = verify::sweep(&config, &opts)?;
            r.suite = suite_name(args.suite).into();
            (suite_name(args.suite), input, vec![r])
        }
        Suite::Theorem9 => {
            let q = require_q(&args, 11);
            ("theorem9", format!("paley:q={q}"), vec![verify::theorem9_suite(q, &opts)?])
        }
        Suite::Lakhlifi => {
            let q = require_q(&args, 7);
            ("lakhlifi", format!("paley:q={q}"), vec![verify::lakhlifi_suite(q)?])
        }
        Suite::Paley => {
            let q = require_q(&args, 7);
            ("paley", format!("paley:q={q}"), vec![verify::paley_suite(q)?])
        }
        Suite::Characterize => characterize(&args, &opts, &mut seed)?,
    };

    let passed = reports.iter().all(SuiteReport::passed);
    if args.json {
        let mut file = ReportFile::new(format!("verify {command}"), seed, input);
        file.results = reports.iter().cloned().map(ResultEntry::Suite).collect();
        print!("{}", file.to_json());
    } else if args.csv {
        write_csv(&reports, std::io::stdout().lock())?;
    } else {
        for r in &reports {
            print!("{}", render_suite(r));
        }
    }
    if let Some(dir) = &args.fixtures {
        for path in write_fixtures(dir, &reports)? {
            eprintln!("fixture: {}", path.display());
        }
    }
    for r in &reports {
        if let Some(text) = failure_summary(r) {
            eprint!("{text}");
        }
    }
    Ok(passed)
}

fn suite_name(s: Suite) -> &'static str {
    match s {
        Suite::Identities => "identities",
        Suite::Bounds => "bounds",
        Suite::Theorem1 => "theorem1",
        Suite::Theorem9 => "theorem9",
        Suite::Characterize => "characterize",
        Suite::Lakhlifi => "lakhlifi",
        Suite::Paley => "paley",
    }
}

/// With `--input`, checks that file. Otherwise checks every one-vertex
/// deletion of Paley-q (default 7) and, with `--samples`, that many random
/// tournaments of order `--n-min`.
fn characterize(
    args: &VerifyArgs,
    opts: &SearchOptions,
    seed: &mut Option<u64>,
) -> anyhow::Result<(&'static str, String, Vec<SuiteReport>)> {
    let mut total = SuiteReport::new("characterize", &verify::CHARACTERIZE_CHECKS);
    let input;
    if let Some(path) = &args.input {
        let t = read_trn(path)?;
        input = path.display().to_string();
        total.merge(verify::characterize_4k2(&t, &input, opts)?);
    } else {
        let q = require_q(args, 7);
        let t = paley_tournament(q)?;
        for v in 0..t.n() {
            let sub = t.delete_vertices(VertexSet::singleton(v))?;
            total.merge(verify::characterize_4k2(&sub, &format!("paley:q={q}:minus={{{v}}}"), opts)?);
        }
        let mut what = format!("paley:q={q}:one-vertex-deletions");
        if let Some(count) = args.samples {
            let n = args.n_min;
            if n % 4 != 2 {
                anyhow::bail!("--n-min must be 4k+2 for characterize, got {n}");
            }
            *seed = Some(args.seed);
            for i in 0..count as u64 {
                let s = args.seed.wrapping_add(i);
                let t = random_tournament(n, s)?;
                total.merge(verify::characterize_4k2(&t, &format!("random:n={n}:seed={s}"), opts)?);
            }
            what.push_str(&format!("+random:n={n}:count={count}"));
        }
        input = what;
    }
    Ok(("characterize", input, vec![total]))
}

fn convert(direction: Direction, input: &Path, output: &Path) -> anyhow::Result<()> {
    match direction {
        Direction::DrToHadamard => {
            let t = read_trn(input)?;
            let h = dr_to_skew_hadamard(&t)?;
            write_out(output, &to_matrix_text(&h))?;
            println!("{}: skew-Hadamard of order {}", output.display(), h.order());
        }
        Direction::HadamardToDr => {
            let text = fs::read_to_string(input).with_context(|| format!("reading {}", input.display()))?;
            let entries = parse_matrix_text(&text).with_context(|| format!("parsing {}", input.display()))?;
            let t = skew_hadamard_to_dr(&SkewHadamard::new(entries)?)?;
            write_out(output, &to_trn(&t))?;
            println!("{}: doubly regular, n = {}", output.display(), t.n());
        }
    }
    Ok(())
}

