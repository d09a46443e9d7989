//! The `sdforge` command line.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use sdforge_core::analysis::{self, ExtractOptions};
use sdforge_core::groupring::{self, registry};
use sdforge_core::search::{self, Algorithm, Budget, GaConfig, RunConfig, RunLog, VoaConfig};
use sdforge_core::{BitMatrix, CandidateVector};

use crate::catalog::{is_new, HitRecord, HitWriter, KnownParameterSet};
use crate::tables::{self, describe, Labels};
use crate::Error;

/// Exit status for a completed run whose verification failed.
pub const EXIT_VERIFY_FAILED: u8 = 1;

const CANDIDATE_HELP: &str = "Candidates are 36 bits a1..a36, written either as 36 '0'/'1' characters \
(separators ';' ',' and spaces ignored) or as 9 hex digits with a1 in the most significant bit.";

#[derive(Debug, Parser)]
#[command(name = "sdforge", version, about = "Construct, verify and search binary self-dual [72,36,12] codes")]
#[command(after_help = CANDIDATE_HELP)]
pub struct Cli {
    /// Worker threads for enumeration and search; results never depend on it.
    #[arg(long, global = true, env = "SDFORGE_THREADS")]
    pub threads: Option<usize>,
    /// Leave out wall-clock fields so repeated runs are byte-identical.
    #[arg(long, global = true)]
    pub no_timestamp: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rebuild every tabulated code and check d, Type and enumerator parameters.
    VerifyTables(VerifyArgs),
    /// Report self-duality, d, Type, low weight counts and parameters of one code.
    #[command(after_help = CANDIDATE_HELP)]
    Analyze(AnalyzeArgs),
    /// Run one seeded metaheuristic search.
    #[command(after_help = CANDIDATE_HELP)]
    Search(SearchArgs),
    /// Count distinct hits of several engines over several constructions.
    Compare(CompareArgs),
    /// List the 28 registered constructions.
    ListConstructions,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum LabelChoice {
    /// The `construction` column.
    Corrected,
    /// The labels as originally printed.
    Printed,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Tables CSV; defaults to the bundled copy.
    #[arg(long)]
    pub tables: Option<PathBuf>,
    /// Which construction column to rebuild with.
    #[arg(long, value_enum, default_value = "corrected")]
    pub labels: LabelChoice,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Text matrix `[I | A]`: one row per line of '0'/'1'.
    #[arg(long, conflicts_with_all = ["construction", "candidate"])]
    pub matrix: Option<PathBuf>,
    /// Construction id such as G2.1.
    #[arg(long, requires = "candidate")]
    pub construction: Option<String>,
    #[arg(long, requires = "construction")]
    pub candidate: Option<String>,
    /// Count codewords up to this weight.
    #[arg(long, default_value_t = 0)]
    pub w_max: u32,
    /// Skip A16 (then W72_1 is assumed whenever both Type I families fit).
    #[arg(long)]
    pub no_a16: bool,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub construction: String,
    #[arg(long, value_enum, default_value = "voa")]
    pub algo: AlgoChoice,
    #[arg(long, default_value_t = 500)]
    pub pop: usize,
    #[arg(long, default_value_t = 100)]
    pub iters: u32,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Append hits to this JSON-Lines file.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Extra known-parameter CSV files (kind,family,gamma,beta,alpha).
    #[arg(long)]
    pub known: Vec<PathBuf>,
    /// VOA: number of strong viruses.
    #[arg(long, help_heading = "VOA")]
    pub strong: Option<usize>,
    #[arg(long, help_heading = "VOA")]
    pub strong_offspring: Option<usize>,
    #[arg(long, help_heading = "VOA")]
    pub common_offspring: Option<usize>,
    /// VOA: per-bit flip probability of strong offspring.
    #[arg(long, help_heading = "VOA")]
    pub p_strong: Option<f64>,
    /// VOA: initial per-bit flip probability of common offspring.
    #[arg(long, help_heading = "VOA")]
    pub p_common: Option<f64>,
    /// VOA: iterations without improvement before the antivirus step.
    #[arg(long, help_heading = "VOA")]
    pub stagnation: Option<u32>,
    #[arg(long, help_heading = "GA")]
    pub tournament: Option<usize>,
    #[arg(long, help_heading = "GA")]
    pub crossover: Option<f64>,
    /// GA: per-bit mutation probability.
    #[arg(long, help_heading = "GA")]
    pub mutation: Option<f64>,
    #[arg(long, help_heading = "GA")]
    pub elite: Option<usize>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum AlgoChoice {
    Voa,
    Ga,
}

impl From<AlgoChoice> for Algorithm {
    fn from(a: AlgoChoice) -> Self {
        match a {
            AlgoChoice::Voa => Algorithm::Voa,
            AlgoChoice::Ga => Algorithm::Ga,
        }
    }
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[arg(long, value_delimiter = ',', default_value = "G6.1,G7.2,G8.1")]
    pub constructions: Vec<String>,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "voa,ga")]
    pub algos: Vec<AlgoChoice>,
    #[arg(long, default_value_t = 1)]
    pub runs: u32,
    #[arg(long, default_value_t = 0)]
    pub seed0: u64,
    #[arg(long, default_value_t = 500)]
    pub pop: usize,
    #[arg(long, default_value_t = 100)]
    pub iters: u32,
    /// Write the CSV here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Some(n) = cli.threads {
        // Only the first configuration in a process takes effect.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    match dispatch(&cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Error> {
    match &cli.command {
        Command::VerifyTables(a) => verify_tables(a, cli.no_timestamp, out, err),
        Command::Analyze(a) => {
            let report = analyze(a)?;
            writeln!(out, "{}", serde_json::to_string_pretty(&report).expect("serialisable")).map_err(stdout_err)?;
            Ok(0)
        }
        Command::Search(a) => search(a, cli.no_timestamp, out),
        Command::Compare(a) => compare(a, out),
        Command::ListConstructions => {
            for k in registry() {
                writeln!(out, "{}\t{}\t{}", k.id, k.case.name(), k.pattern.name).map_err(stdout_err)?;
            }
            Ok(0)
        }
    }
}

fn stdout_err(e: std::io::Error) -> Error {
    Error::io(std::path::Path::new("<stdout>"), e)
}

fn verify_tables(a: &VerifyArgs, no_timestamp: bool, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8, Error> {
    let rows = match &a.tables {
        Some(path) => tables::load_paper_tables(path)?,
        None => tables::shipped_tables(),
    };
    let labels = match a.labels {
        LabelChoice::Corrected => Labels::Corrected,
        LabelChoice::Printed => Labels::Printed,
    };
    if rows.is_empty() {
        writeln!(err, "warning: the tables file has no rows").map_err(stdout_err)?;
    }
    let start = Instant::now();
    let mut passed = 0;
    for row in &rows {
        let v = tables::verify_row(row, labels);
        let r = &v.report;
        if v.passed() {
            passed += 1;
            let params = r.params().map(|p| describe(&p)).unwrap_or_default();
            writeln!(
                out,
                "{:<4} {:<5} PASS  {params}  d=12 A12={} A14={} A16={}",
                v.id,
                v.construction,
                r.count(12),
                r.count(14),
                r.count(16)
            )
            .map_err(stdout_err)?;
        } else {
            writeln!(out, "{:<4} {:<5} FAIL  {}", v.id, v.construction, v.failures.join("; ")).map_err(stdout_err)?;
        }
    }
    writeln!(out, "{passed}/{} PASS", rows.len()).map_err(stdout_err)?;
    if !no_timestamp {
        writeln!(err, "elapsed: {:.1} s", start.elapsed().as_secs_f64()).map_err(stdout_err)?;
    }
    Ok(if passed == rows.len() { 0 } else { EXIT_VERIFY_FAILED })
}

fn analyze(a: &AnalyzeArgs) -> Result<analysis::CodeReport, Error> {
    let opts = ExtractOptions { with_a16: !a.no_a16 };
    let (g, construction, candidate) = match (&a.matrix, &a.construction, &a.candidate) {
        (Some(path), _, _) => {
            let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
            let g = BitMatrix::parse(&text).map_err(|e| Error::Parse {
                path: Some(path.clone()),
                line: 0,
                message: e.to_string(),
            })?;
            (g, None, None)
        }
        (None, Some(id), Some(c)) => {
            let k = groupring::lookup(id)?;
            let c: CandidateVector = c.parse()?;
            (k.generator(c), Some(k.id.to_string()), Some(c))
        }
        _ => return Err(Error::Usage("analyze needs --matrix or --construction with --candidate".into())),
    };
    let mut report = analysis::analyze(&g, a.w_max, opts)?;
    report.construction = construction;
    report.candidate = candidate;
    Ok(report)
}

#[derive(Serialize)]
struct SearchSummary<'a> {
    construction: &'a str,
    algorithm: Algorithm,
    seed: u64,
    rng: &'a str,
    config: &'a RunConfig,
    best_per_iteration: &'a [u32],
    evaluations: u64,
    hits: Vec<HitSummary>,
    distinct_params: usize,
    new_params: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    wall_time_ms: Option<u64>,
}

#[derive(Serialize)]
struct HitSummary {
    iteration: u32,
    candidate: CandidateVector,
    params: Option<String>,
    new: bool,
}

fn search(a: &SearchArgs, no_timestamp: bool, out: &mut dyn Write) -> Result<u8, Error> {
    let k = groupring::lookup(&a.construction)?;
    let mut known = KnownParameterSet::shipped();
    for path in &a.known {
        known.extend(&KnownParameterSet::load(path)?);
    }
    let mut writer = a.out.as_deref().map(HitWriter::open).transpose()?;
    let algo = Algorithm::from(a.algo);
    let start = Instant::now();
    let mut log = run_search(k, algo, a)?;
    if !no_timestamp {
        log.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    let stamp = (!no_timestamp).then(|| chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
    if let Some(writer) = writer.as_mut() {
        for hit in &log.hits {
            writer.append(&HitRecord::from_hit(k.id, hit, a.seed, algo, stamp.clone()))?;
        }
    }
    let distinct = log.distinct_params();
    let summary = SearchSummary {
        construction: k.id,
        algorithm: algo,
        seed: a.seed,
        rng: &log.rng,
        config: &log.config,
        best_per_iteration: &log.best_per_iteration,
        evaluations: log.evaluations,
        hits: log
            .hits
            .iter()
            .map(|h| HitSummary {
                iteration: h.iteration,
                candidate: h.candidate,
                params: h.params().map(|p| describe(&p)),
                new: h.params().is_some_and(|p| is_new(&p, &known)),
            })
            .collect(),
        distinct_params: distinct.len(),
        new_params: distinct.iter().filter(|p| is_new(p, &known)).count(),
        wall_time_ms: log.wall_time_ms,
    };
    writeln!(out, "{}", serde_json::to_string_pretty(&summary).expect("serialisable")).map_err(stdout_err)?;
    Ok(0)
}

fn run_search(k: &groupring::Construction, algo: Algorithm, a: &SearchArgs) -> Result<RunLog, Error> {
    let log = match algo {
        Algorithm::Voa => {
            let d = VoaConfig::default();
            let cfg = VoaConfig {
                population_size: a.pop,
                iterations: a.iters,
                strong_count: a.strong.unwrap_or(d.strong_count),
                strong_offspring: a.strong_offspring.unwrap_or(d.strong_offspring),
                common_offspring: a.common_offspring.unwrap_or(d.common_offspring),
                strong_flip_prob: a.p_strong.unwrap_or(d.strong_flip_prob),
                common_flip_prob: a.p_common.unwrap_or(d.common_flip_prob),
                stagnation_window: a.stagnation.unwrap_or(d.stagnation_window),
                seed: a.seed,
            };
            search::voa_run(k, &cfg)?
        }
        Algorithm::Ga => {
            let d = GaConfig::default();
            let cfg = GaConfig {
                population_size: a.pop,
                iterations: a.iters,
                tournament_size: a.tournament.unwrap_or(d.tournament_size),
                crossover_prob: a.crossover.unwrap_or(d.crossover_prob),
                mutation_flip_prob: a.mutation.unwrap_or(d.mutation_flip_prob),
                elite_count: a.elite.unwrap_or(d.elite_count),
                seed: a.seed,
            };
            search::ga_run(k, &cfg)?
        }
    };
    Ok(log)
}

fn compare(a: &CompareArgs, out: &mut dyn Write) -> Result<u8, Error> {
    let ks = a.constructions.iter().map(|id| groupring::lookup(id)).collect::<Result<Vec<_>, _>>()?;
    let algos: Vec<Algorithm> = a.algos.iter().map(|&x| x.into()).collect();
    let budget = Budget { population_size: a.pop, iterations: a.iters };
    let rows = search::compare(&ks, &algos, a.runs, a.seed0, budget)?;
    let mut buf = Vec::new();
    {
        let mut w = csv::Writer::from_writer(&mut buf);
        for row in &rows {
            w.serialize(row).expect("in-memory csv");
        }
        w.flush().map_err(stdout_err)?;
    }
    match &a.out {
        Some(path) => std::fs::write(path, &buf).map_err(|e| Error::io(path, e))?,
        None => out.write_all(&buf).map_err(stdout_err)?,
    }
    Ok(0)
}
