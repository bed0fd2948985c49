//! Run configuration: flags, an optional `key=value` file, and `BEFLOW_RMAX`.

use std::collections::BTreeMap;
use std::path::PathBuf;

use crate::bisection::Conjecture;
use crate::error::{Error, Result};
use crate::flow::FlowPoint;
use crate::rational::parse_rational;
use crate::region::{NamedRegion, Window};
use crate::weak5::VerifyDepth;

/// Keys accepted in a config file; each mirrors the flag of the same name.
pub const CONFIG_KEYS: &[&str] = &[
    "graph", "graph6", "gen", "simple", "r", "alpha", "rmax", "out", "svg", "overlay", "depth", "threads",
    "cache", "lenient", "k", "orientable", "conjecture", "format",
];

/// Parsed `key=value` lines. Blank lines and `#` comments are ignored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ConfigFile {
    pub values: BTreeMap<String, String>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::MalformedInput(format!("config line {}: expected key=value", i + 1)))?;
            let k = k.trim().to_string();
            if !CONFIG_KEYS.contains(&k.as_str()) {
                return Err(Error::MalformedInput(format!("config line {}: unknown key {k:?}", i + 1)));
            }
            values.insert(k, v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &std::path::Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::MalformedInput(format!("cannot read config {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    fn flag(&self, key: &str) -> Result<bool> {
        match self.get(key) {
            None => Ok(false),
            Some("true" | "1" | "yes") => Ok(true),
            Some("false" | "0" | "no") => Ok(false),
            Some(other) => Err(Error::MalformedInput(format!("{key} = {other:?} is not a boolean"))),
        }
    }
}

/// Inclusive range of even orders, written `n<=10`, `n<10`, `n=8`, `6..10` or `8`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenSpec {
    pub lo: usize,
    pub hi: usize,
}

impl std::str::FromStr for GenSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::MalformedInput(format!("bad generator spec {s:?}"));
        let num = |x: &str| x.parse::<usize>().map_err(|_| bad());
        let (lo, hi) = if let Some(x) = t.strip_prefix("n<=") {
            (2, num(x)?)
        } else if let Some(x) = t.strip_prefix("n<") {
            (2, num(x)?.checked_sub(1).ok_or_else(bad)?)
        } else if let Some(x) = t.strip_prefix("n=") {
            (num(x)?, num(x)?)
        } else if let Some((a, b)) = t.split_once("..") {
            (num(a)?, num(b.trim_start_matches('='))?)
        } else {
            (num(&t)?, num(&t)?)
        };
        if lo > hi || hi < 2 {
            return Err(bad());
        }
        Ok(Self { lo, hi })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSource {
    File(PathBuf),
    Graph6(String),
    Gen(GenSpec),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Cub,
    Graph6,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "cub" => Ok(Self::Cub),
            "graph6" | "g6" => Ok(Self::Graph6),
            other => Err(Error::MalformedInput(format!("unknown format {other:?}"))),
        }
    }
}

pub fn parse_depth(s: &str) -> Result<VerifyDepth> {
    match s {
        "release" => Ok(VerifyDepth::Release),
        "debug" => Ok(VerifyDepth::Debug),
        other => Err(Error::MalformedInput(format!("depth must be release or debug, got {other:?}"))),
    }
}

/// Overlay tags: `M4`, `L5`, `A4`, or `urd(7/2,1/2)`.
pub fn parse_overlay(tag: &str) -> Result<NamedRegion> {
    let t = tag.trim();
    if let Some(inner) = t.strip_prefix("urd(").and_then(|x| x.strip_suffix(')')) {
        let (r, a) = inner
            .split_once(',')
            .ok_or_else(|| Error::MalformedInput(format!("bad overlay {tag:?}")))?;
        return Ok(NamedRegion::Urd(FlowPoint::parse(r.trim(), a.trim())?));
    }
    let (head, k) = t.split_at(t.chars().next().map_or(0, char::len_utf8));
    let k: i64 = k.parse().map_err(|_| Error::MalformedInput(format!("bad overlay {tag:?}")))?;
    NamedRegion::named(head, k)
}

fn source_from(graph: Option<PathBuf>, graph6: Option<String>, gen: Option<String>) -> Result<Option<GraphSource>> {
    Ok(match (graph, graph6, gen) {
        (Some(p), None, None) => Some(GraphSource::File(p)),
        (None, Some(g), None) => Some(GraphSource::Graph6(g)),
        (None, None, Some(spec)) => Some(GraphSource::Gen(spec.parse()?)),
        (None, None, None) => None,
        _ => return Err(Error::MalformedInput("give only one of --graph, --graph6, --gen".into())),
    })
}

/// Fully resolved settings for one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: &'static str,
    pub source: Option<GraphSource>,
    pub simple_only: bool,
    pub point: Option<FlowPoint>,
    pub window: Window,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub overlays: Vec<NamedRegion>,
    pub depth: VerifyDepth,
    pub threads: Option<usize>,
    pub cache: Option<PathBuf>,
    pub lenient: bool,
    pub k: Option<i64>,
    pub orientable: bool,
    pub conjecture: Option<Conjecture>,
    pub format: OutputFormat,
}

/// Values given on the command line; `None` falls through to the environment and then
/// the config file.
#[derive(Clone, Debug, Default)]
pub struct FlagValues {
    pub graph: Option<PathBuf>,
    pub graph6: Option<String>,
    pub gen: Option<String>,
    pub simple: bool,
    pub r: Option<String>,
    pub alpha: Option<String>,
    pub rmax: Option<String>,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
    pub overlay: Vec<String>,
    pub depth: Option<String>,
    pub threads: Option<usize>,
    pub cache: Option<PathBuf>,
    pub lenient: bool,
    pub k: Option<i64>,
    pub orientable: bool,
    pub conjecture: Option<String>,
    pub format: Option<String>,
}

impl RunConfig {
    /// Flag beats `BEFLOW_RMAX`, which beats the file.
    pub fn resolve(
        command: &'static str,
        flags: FlagValues,
        file: &ConfigFile,
        env: &dyn Fn(&str) -> Option<String>,
    ) -> Result<Self> {
        let pick = |flag: Option<String>, key: &str| flag.or_else(|| file.get(key).map(str::to_string));
        let path = |flag: Option<PathBuf>, key: &str| flag.or_else(|| file.get(key).map(PathBuf::from));

        let source = source_from(flags.graph, flags.graph6, flags.gen)?.map_or_else(
            || {
                source_from(
                    file.get("graph").map(PathBuf::from),
                    file.get("graph6").map(str::to_string),
                    file.get("gen").map(str::to_string),
                )
            },
            |s| Ok(Some(s)),
        )?;
        let point = match (pick(flags.r, "r"), pick(flags.alpha, "alpha")) {
            (Some(r), Some(a)) => Some(FlowPoint::parse(&r, &a)?),
            (None, None) => None,
            _ => return Err(Error::MalformedInput("--r and --alpha must be given together".into())),
        };
        let rmax = flags
            .rmax
            .or_else(|| env("BEFLOW_RMAX").filter(|v| !v.trim().is_empty()))
            .or_else(|| file.get("rmax").map(str::to_string));
        let window = match rmax {
            Some(v) => Window::with_rmax(parse_rational(v.trim())?)?,
            None => Window::default(),
        };
        let mut overlay_tags = flags.overlay;
        if overlay_tags.is_empty() {
            if let Some(v) = file.get("overlay") {
                overlay_tags = v.split(';').map(str::to_string).collect();
            }
        }
        let overlays = overlay_tags.iter().filter(|t| !t.trim().is_empty()).map(|t| parse_overlay(t)).collect::<Result<_>>()?;
        let depth = match pick(flags.depth, "depth") {
            Some(d) => parse_depth(&d)?,
            None => VerifyDepth::Release,
        };
        let threads = match flags.threads {
            Some(t) => Some(t),
            None => file
                .get("threads")
                .map(|t| t.parse().map_err(|_| Error::MalformedInput(format!("threads = {t:?}"))))
                .transpose()?,
        };
        let k = match flags.k {
            Some(k) => Some(k),
            None => file.get("k").map(|t| t.parse().map_err(|_| Error::MalformedInput(format!("k = {t:?}")))).transpose()?,
        };
        let conjecture = pick(flags.conjecture, "conjecture").map(|c| c.parse()).transpose()?;
        let format = pick(flags.format, "format").map(|f| f.parse()).transpose()?.unwrap_or_default();
        Ok(Self {
            command,
            source,
            simple_only: flags.simple || file.flag("simple")?,
            point,
            window,
            out: path(flags.out, "out"),
            svg: path(flags.svg, "svg"),
            overlays,
            depth,
            threads,
            cache: path(flags.cache, "cache"),
            lenient: flags.lenient || file.flag("lenient")?,
            k,
            orientable: flags.orientable || file.flag("orientable")?,
            conjecture,
            format,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn no_env(_: &str) -> Option<String> {
        None
    }

    #[test]
    fn gen_specs() {
        assert_eq!("n<=10".parse::<GenSpec>().unwrap(), GenSpec { lo: 2, hi: 10 });
        assert_eq!("n<10".parse::<GenSpec>().unwrap(), GenSpec { lo: 2, hi: 9 });
        assert_eq!("n=8".parse::<GenSpec>().unwrap(), GenSpec { lo: 8, hi: 8 });
        assert_eq!("4..8".parse::<GenSpec>().unwrap(), GenSpec { lo: 4, hi: 8 });
        assert!("n<=x".parse::<GenSpec>().is_err());
        assert!("8..4".parse::<GenSpec>().is_err());
    }

    #[test]
    fn config_file_fills_missing_flags() {
        let file = ConfigFile::parse("# sample\nr = 7/2\nalpha=1/2\ndepth=debug\nthreads=2\nrmax=6\n").unwrap();
        let cfg = RunConfig::resolve("check", FlagValues::default(), &file, &no_env).unwrap();
        assert_eq!(cfg.point, Some(FlowPoint::frac(7, 2, 1, 2)));
        assert_eq!(cfg.depth, VerifyDepth::Debug);
        assert_eq!(cfg.threads, Some(2));
        assert_eq!(cfg.window.r.1, int(6));
    }

    #[test]
    fn flag_then_env_then_file_for_rmax() {
        let file = ConfigFile::parse("rmax=6").unwrap();
        let env = |k: &str| (k == "BEFLOW_RMAX").then(|| "10".to_string());
        let cfg = RunConfig::resolve("bed", FlagValues::default(), &file, &env).unwrap();
        assert_eq!(cfg.window.r.1, int(10));
        let flags = FlagValues { rmax: Some("12".into()), ..Default::default() };
        let cfg = RunConfig::resolve("bed", flags, &file, &env).unwrap();
        assert_eq!(cfg.window.r.1, int(12));
        let bad = |_: &str| Some("1/2".to_string());
        assert!(RunConfig::resolve("bed", FlagValues::default(), &file, &bad).is_err());
    }

    #[test]
    fn rejects_bad_files_and_points() {
        assert!(ConfigFile::parse("colour=red").is_err());
        assert!(ConfigFile::parse("just words").is_err());
        let flags = FlagValues { r: Some("3.5".into()), alpha: Some("1/2".into()), ..Default::default() };
        assert!(RunConfig::resolve("check", flags, &ConfigFile::default(), &no_env).is_err());
        let flags = FlagValues { r: Some("3".into()), ..Default::default() };
        assert!(RunConfig::resolve("check", flags, &ConfigFile::default(), &no_env).is_err());
    }

    #[test]
    fn overlay_tags() {
        assert_eq!(parse_overlay("M4").unwrap(), NamedRegion::M(4));
        assert_eq!(parse_overlay("urd(7/2, 1/2)").unwrap(), NamedRegion::Urd(FlowPoint::frac(7, 2, 1, 2)));
        assert!(parse_overlay("Q4").is_err());
        assert!(parse_overlay("M2").is_err());
    }
}
