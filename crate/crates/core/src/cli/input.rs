//! Graph loading for the commands: `cub` and graph6 files, inline graph6, generated corpora.

use std::path::Path;

use super::config::GraphSource;
use crate::error::{Error, Result};
use crate::generate::generate_range;
use crate::graph::{import_graph6, parse_edge_list, CubicMultigraph};

/// One input graph and where it came from.
#[derive(Clone, Debug)]
pub struct Input {
    pub label: String,
    pub graph: CubicMultigraph,
}

/// Loaded graphs plus warnings for records skipped in lenient mode.
#[derive(Debug, Default)]
pub struct Loaded {
    pub inputs: Vec<Input>,
    pub warnings: Vec<String>,
}

impl Loaded {
    fn push(&mut self, label: String, parsed: Result<CubicMultigraph>, lenient: bool) -> Result<()> {
        match parsed {
            Ok(graph) => self.inputs.push(Input { label, graph }),
            Err(e) if lenient => self.warnings.push(format!("{label}: skipped: {e}")),
            Err(e) => return Err(Error::MalformedInput(format!("{label}: {e}"))),
        }
        Ok(())
    }
}

fn is_graph6_path(path: &Path) -> bool {
    matches!(path.extension().and_then(|e| e.to_str()), Some("g6" | "graph6"))
}

/// Splits `cub` text into records so that a bad record can be skipped on its own.
fn cub_records(text: &str, name: &str, lenient: bool, out: &mut Loaded) -> Result<()> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    let mut i = 0;
    while i < lines.len() {
        let (lineno, header) = lines[i];
        let label = format!("{name}:{lineno}");
        let m = header
            .split_whitespace()
            .nth(1)
            .and_then(|m| m.parse::<usize>().ok())
            .filter(|_| header.split_whitespace().count() == 2);
        let Some(m) = m else {
            out.push(label, Err(Error::MalformedInput(format!("bad header {header:?}"))), lenient)?;
            i += 1;
            continue;
        };
        let end = (i + 1 + m).min(lines.len());
        let chunk: String = lines[i..end].iter().map(|(_, l)| format!("{l}\n")).collect();
        out.push(label, parse_edge_list(&chunk), lenient)?;
        i = end;
    }
    Ok(())
}

pub fn load(source: &GraphSource, simple_only: bool, lenient: bool) -> Result<Loaded> {
    let mut out = Loaded::default();
    match source {
        GraphSource::File(path) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::MalformedInput(format!("cannot read {}: {e}", path.display())))?;
            let name = path.display().to_string();
            if is_graph6_path(path) {
                for (i, line) in text.lines().enumerate() {
                    if !line.trim().is_empty() {
                        out.push(format!("{name}:{}", i + 1), import_graph6(line), lenient)?;
                    }
                }
            } else {
                cub_records(&text, &name, lenient, &mut out)?;
            }
        }
        GraphSource::Graph6(line) => out.push("graph6".into(), import_graph6(line), lenient)?,
        GraphSource::Gen(spec) => {
            for (i, graph) in generate_range(spec.lo, spec.hi, !simple_only)?.into_iter().enumerate() {
                out.inputs.push(Input { label: format!("gen:{}:{i}", graph.n()), graph });
            }
        }
    }
    if simple_only {
        out.inputs.retain(|x| x.graph.is_simple());
    }
    Ok(out)
}
