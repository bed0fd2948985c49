//! The `beflow` command line.
//!
//! Exit status: `0` feasible or found, `1` infeasible or not found, `2` on any error.

pub mod cache;
pub mod config;
pub mod input;
pub mod records;
pub mod svg;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use crate::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::to_graph6;
use crate::rational::fmt_rational;
use crate::region::bed_of_graph;
use crate::weak5::Weak5Options;
use cache::{cache_key, CacheEntry, ResultCache};
use config::{ConfigFile, FlagValues, GraphSource, OutputFormat, RunConfig};
use input::{load, Input};
use records::{FlowOutcome, Record};

#[derive(Debug, Parser)]
#[command(name = "beflow", version, about = "Bounded-excess flows in cubic multigraphs")]
pub struct Cli {
    /// key=value file supplying defaults for any flag.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// JSON-lines result cache.
    #[arg(long, global = true)]
    pub cache: Option<PathBuf>,
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// release or debug.
    #[arg(long, global = true)]
    pub depth: Option<String>,
    /// Skip malformed corpus entries with a warning.
    #[arg(long, global = true)]
    pub lenient: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Default, Args)]
pub struct Source {
    /// Graph file: `cub` records, or graph6 lines for `.g6`.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// One inline graph6 string.
    #[arg(long)]
    pub graph6: Option<String>,
    /// Generated corpus, e.g. `n<=10`.
    #[arg(long)]
    pub gen: Option<String>,
    /// Keep only simple graphs.
    #[arg(long)]
    pub simple: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether each graph admits an (r, alpha)-flow.
    Check {
        #[command(flatten)]
        source: Source,
        #[arg(long = "r")]
        r: Option<String>,
        #[arg(long)]
        alpha: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the flow domain of each graph.
    Bed {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Named region to draw: M4, L5, A4, urd(7/2,1/2). Repeatable.
        #[arg(long)]
        overlay: Vec<String>,
        /// Right edge of the window (overrides BEFLOW_RMAX).
        #[arg(long)]
        rmax: Option<String>,
    },
    /// Search for a k-weak bisection.
    Bisect {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        k: Option<i64>,
        #[arg(long)]
        orientable: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Construct a certified orientable 5-weak bisection.
    Weak5 {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Test a conjecture (bl3 or simple414) over a corpus.
    Hunt {
        #[command(flatten)]
        source: Source,
        #[arg(long)]
        conjecture: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a file of emitted records.
    Verify {
        certificate: PathBuf,
        /// Require every record to be about this graph.
        #[command(flatten)]
        source: Source,
    },
    /// Write a generated corpus.
    Gen {
        /// Order range, e.g. `n<=10` or `8`.
        spec: Option<String>,
        #[command(flatten)]
        source: Source,
        /// cub or graph6.
        #[arg(long)]
        format: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Cli {
    fn flags(self) -> (&'static str, FlagValues, Option<PathBuf>) {
        let mut f = FlagValues {
            cache: self.cache,
            threads: self.threads,
            depth: self.depth,
            lenient: self.lenient,
            ..Default::default()
        };
        let mut extra = None;
        let source = |f: &mut FlagValues, s: Source| {
            f.graph = s.graph;
            f.graph6 = s.graph6;
            f.gen = s.gen;
            f.simple = s.simple;
        };
        let name = match self.command {
            Command::Check { source: s, r, alpha, out } => {
                source(&mut f, s);
                (f.r, f.alpha, f.out) = (r, alpha, out);
                "check"
            }
            Command::Bed { source: s, out, svg, overlay, rmax } => {
                source(&mut f, s);
                (f.out, f.svg, f.overlay, f.rmax) = (out, svg, overlay, rmax);
                "bed"
            }
            Command::Bisect { source: s, k, orientable, out } => {
                source(&mut f, s);
                (f.k, f.orientable, f.out) = (k, orientable, out);
                "bisect"
            }
            Command::Weak5 { source: s, out } => {
                source(&mut f, s);
                f.out = out;
                "weak5"
            }
            Command::Hunt { source: s, conjecture, out } => {
                source(&mut f, s);
                (f.conjecture, f.out) = (conjecture, out);
                "hunt"
            }
            Command::Verify { certificate, source: s } => {
                source(&mut f, s);
                extra = Some(certificate);
                "verify"
            }
            Command::Gen { spec, source: s, format, out } => {
                source(&mut f, s);
                f.gen = spec.or(f.gen);
                (f.format, f.out) = (format, out);
                "gen"
            }
        };
        (name, f, extra)
    }
}

/// Runs with the process arguments and environment.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &|k| std::env::var(k).ok(), &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(
    args: I,
    env: &dyn Fn(&str) -> Option<String>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { write!(err, "{text}") } else { write!(out, "{text}") };
            return code;
        }
    };
    let config_path = cli.config.clone();
    let (name, flags, certificate) = cli.flags();
    let result = (|| {
        let file = match &config_path {
            Some(p) => ConfigFile::load(p)?,
            None => ConfigFile::default(),
        };
        let cfg = RunConfig::resolve(name, flags, &file, env)?;
        let Some(t) = cfg.threads else {
            return dispatch(&cfg, certificate.as_deref(), out, err);
        };
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::MalformedInput(format!("thread pool: {e}")))?;
        let (mut o, mut e) = (Vec::new(), Vec::new());
        let code = pool.install(|| dispatch(&cfg, certificate.as_deref(), &mut o, &mut e));
        let _ = out.write_all(&o);
        let _ = err.write_all(&e);
        code
    })();
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn dispatch(
    cfg: &RunConfig,
    certificate: Option<&std::path::Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let need = |what: &str| Error::MalformedInput(format!("{} needs {what}", cfg.command));
    match cfg.command {
        "check" => {
            let point = cfg.point.clone().ok_or_else(|| need("--r and --alpha"))?;
            let params = format!("r={},alpha={}", fmt_rational(&point.r), fmt_rational(&point.alpha));
            batch(cfg, &params, out, err, |g| records::flow_record(g, &point))
        }
        "bed" => {
            let params = format!("rmax={}", fmt_rational(&cfg.window.r.1));
            let window = cfg.window.clone();
            let code = batch(cfg, &params, out, err, |g| records::region_record(g, &window))?;
            if let Some(path) = &cfg.svg {
                let inputs = load_inputs(cfg, err)?;
                let [one] = inputs.as_slice() else {
                    return Err(Error::MalformedInput("--svg needs exactly one graph".into()));
                };
                let region = bed_of_graph(&one.graph)?.with_window(cfg.window.clone());
                write_file(path, &svg::render(&region, &cfg.overlays))?;
            }
            Ok(code)
        }
        "bisect" => {
            let k = cfg.k.ok_or_else(|| need("--k"))?;
            let params = format!("k={k},orientable={}", cfg.orientable);
            batch(cfg, &params, out, err, |g| records::bisection_record(g, k, cfg.orientable))
        }
        "weak5" => {
            let opts = Weak5Options { depth: cfg.depth, ..Default::default() };
            let params = format!("depth={:?}", cfg.depth).to_lowercase();
            batch(cfg, &params, out, err, |g| records::weak5_record(g, &opts))
        }
        "hunt" => {
            let conjecture = cfg.conjecture.ok_or_else(|| need("--conjecture"))?;
            let params = format!("conjecture={}", conjecture.tag());
            batch(cfg, &params, out, err, |g| records::hunt_record(g, conjecture))
        }
        "verify" => verify(cfg, certificate.expect("verify has a certificate path"), out, err),
        "gen" => generate(cfg, out),
        other => Err(Error::MalformedInput(format!("unknown command {other}"))),
    }
}

fn load_inputs(cfg: &RunConfig, err: &mut dyn Write) -> Result<Vec<Input>> {
    let source = cfg.source.as_ref().ok_or_else(|| {
        Error::MalformedInput(format!("{} needs --graph, --graph6 or --gen", cfg.command))
    })?;
    let loaded = load(source, cfg.simple_only, cfg.lenient)?;
    for w in &loaded.warnings {
        let _ = writeln!(err, "warning: {w}");
    }
    Ok(loaded.inputs)
}

fn write_file(path: &std::path::Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| Error::MalformedInput(format!("cannot write {}: {e}", path.display())))
}

/// Computes one record per graph in parallel, consulting and filling the cache, and
/// prints the records in input order.
fn batch<F>(cfg: &RunConfig, params: &str, out: &mut dyn Write, err: &mut dyn Write, compute: F) -> Result<i32>
where
    F: Fn(&crate::graph::CubicMultigraph) -> Result<Record> + Sync,
{
    let inputs = load_inputs(cfg, err)?;
    let mut cache = match &cfg.cache {
        Some(p) => Some(ResultCache::open(p)?),
        None => None,
    };
    let shared = cache.as_ref();
    let results: Vec<Result<(Record, Option<CacheEntry>)>> = inputs
        .par_iter()
        .map(|input| {
            let g = &input.graph;
            let Some(c) = shared else { return Ok((compute(g)?, None)) };
            let key = cache_key(&canonical_form(g).to_string(), cfg.command, params);
            match c.get(&key) {
                Some(hit) => {
                    let same = hit.record.graph_json() == &records::GraphJson::of(g);
                    if same && !hit.sampled() {
                        return Ok((hit.record.clone(), None));
                    }
                    let fresh = compute(g)?;
                    if fresh.verdict() != hit.verdict {
                        return Err(Error::InternalVerificationFailed(format!(
                            "{}: cached verdict {} but fresh verdict {}",
                            input.label,
                            hit.verdict,
                            fresh.verdict()
                        )));
                    }
                    Ok((if same { hit.record.clone() } else { fresh }, None))
                }
                None => {
                    let fresh = compute(g)?;
                    Ok((fresh.clone(), Some(CacheEntry::new(key, fresh))))
                }
            }
        })
        .collect();

    let mut code = 0;
    let mut lines = String::new();
    let mut new_entries = Vec::new();
    let mut failure = None;
    for (input, res) in inputs.iter().zip(results) {
        let (rec, entry) = match res {
            Ok(x) => x,
            Err(e) => {
                failure = Some(Error::MalformedInput(format!("{}: {e}", input.label)));
                break;
            }
        };
        let line = serde_json::to_string(&rec).expect("records serialize");
        let _ = writeln!(out, "{line}");
        lines.push_str(&line);
        lines.push('\n');
        report(&input.label, &rec, err);
        code = code.max(rec.status());
        new_entries.extend(entry);
    }
    if let Some(c) = cache.as_mut() {
        c.insert_all(new_entries)?;
    }
    if let Some(e) = failure {
        return Err(e);
    }
    if let Some(path) = &cfg.out {
        write_file(path, &lines)?;
    }
    Ok(code)
}

/// Human-readable notes on stderr for outcomes that need attention.
fn report(label: &str, rec: &Record, err: &mut dyn Write) {
    match rec {
        Record::Flow { point, outcome: FlowOutcome::Infeasible { violations }, .. } => {
            let _ = match violations.first() {
                Some(v) => writeln!(
                    err,
                    "{label}: no flow at {point}; worst set {:?} under bisection {:?} needs alpha >= {}",
                    v.set,
                    v.bisection.colors(),
                    v.bound
                ),
                None => writeln!(err, "{label}: no flow at {point}"),
            };
        }
        Record::Hunt { record, .. } if record.verdict == crate::bisection::HuntVerdict::Finding => {
            let _ = writeln!(
                err,
                "FINDING {} {label} form={} reason={}",
                record.conjecture.tag(),
                record.form,
                record.reason.as_deref().unwrap_or("")
            );
        }
        _ => {}
    }
}

fn parse_records(text: &str) -> Result<Vec<Record>> {
    if let Ok(one) = serde_json::from_str::<Record>(text) {
        return Ok(vec![one]);
    }
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::MalformedInput(format!("record on line {}: {e}", i + 1)))
        })
        .collect()
}

fn verify(cfg: &RunConfig, path: &std::path::Path, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::MalformedInput(format!("cannot read {}: {e}", path.display())))?;
    let recs = parse_records(&text)?;
    let expected = match &cfg.source {
        Some(_) => {
            let inputs = load_inputs(cfg, err)?;
            let [one] = inputs.as_slice() else {
                return Err(Error::MalformedInput("verify --graph needs exactly one graph".into()));
            };
            Some(records::GraphJson::of(&one.graph))
        }
        None => None,
    };
    let checked: Vec<Result<()>> = recs
        .par_iter()
        .map(|rec| match &expected {
            Some(g) if g != rec.graph_json() => {
                Err(Error::MismatchedGraph("record is about another graph".into()))
            }
            _ => records::verify_record(rec),
        })
        .collect();
    let mut code = 0;
    for (i, (rec, res)) in recs.iter().zip(checked).enumerate() {
        let kind = serde_json::to_value(rec).ok().and_then(|v| v["kind"].as_str().map(str::to_string));
        let kind = kind.unwrap_or_default();
        match res {
            Ok(()) => {
                let _ = writeln!(out, "record {}: {kind} {}: valid", i + 1, rec.verdict());
            }
            Err(e) => {
                let _ = writeln!(out, "record {}: {kind} {}: INVALID: {e}", i + 1, rec.verdict());
                code = 1;
            }
        }
    }
    Ok(code)
}

fn generate(cfg: &RunConfig, out: &mut dyn Write) -> Result<i32> {
    let Some(GraphSource::Gen(spec)) = &cfg.source else {
        return Err(Error::MalformedInput("gen needs an order range such as n<=10".into()));
    };
    let graphs = load(&GraphSource::Gen(*spec), cfg.simple_only, false)?.inputs;
    let mut text = String::new();
    for input in &graphs {
        match cfg.format {
            OutputFormat::Cub => text.push_str(&input.graph.to_edge_list()),
            OutputFormat::Graph6 => {
                let line = to_graph6(&input.graph).ok_or_else(|| {
                    Error::MalformedInput("graph6 cannot hold parallel edges; add --simple".into())
                })?;
                text.push_str(&line);
                text.push('\n');
            }
        }
    }
    match &cfg.out {
        Some(p) => write_file(p, &text)?,
        None => {
            let _ = out.write_all(text.as_bytes());
        }
    }
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["beflow"];
        full.extend_from_slice(args);
        let code = run_with(full, &|_| None, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes_follow_the_outcome() {
        assert_eq!(run(&["check", "--graph6", "C~", "--r", "4", "--alpha", "0"]).0, 0);
        let (code, _, err) = run(&["check", "--graph6", "C~", "--r", "3", "--alpha", "0"]);
        assert_eq!(code, 1);
        assert!(err.contains("worst set"));
        assert_eq!(run(&["check", "--graph6", "C~", "--r", "3.5", "--alpha", "0"]).0, 2);
        assert_eq!(run(&["check", "--graph6", "C~"]).0, 2);
        assert_eq!(run(&["frobnicate"]).0, 2);
        assert_eq!(run(&["--help"]).0, 0);
    }

    #[test]
    fn gen_writes_graph6_for_simple_graphs() {
        let (code, out, _) = run(&["gen", "n<=6", "--simple", "--format", "graph6"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 3);
        assert_eq!(run(&["gen", "n<=4", "--format", "graph6"]).0, 2);
        let (_, out, _) = run(&["gen", "--gen", "n=4"]);
        assert_eq!(out.lines().filter(|l| l.split_whitespace().count() == 2).count(), 2 * 7);
    }
}
