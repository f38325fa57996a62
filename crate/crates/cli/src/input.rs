//! Reading graphs from files or stdin.

use std::fs;
use std::io::Read;
use std::path::Path;

use clap::ValueEnum;
use powdom::{parse_edge_list, parse_graph6, Graph, GraphJson, Indexing};

use crate::error::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph6,
    Edgelist,
    Json,
}

impl InputFormat {
    /// Guess from the file extension, then from the content.
    pub fn detect(path: &Path, text: &str) -> InputFormat {
        match path.extension().and_then(|e| e.to_str()) {
            Some("g6" | "graph6") => return InputFormat::Graph6,
            Some("json") => return InputFormat::Json,
            Some("edges" | "edgelist" | "el" | "txt") => return InputFormat::Edgelist,
            _ => {}
        }
        let first = text
            .lines()
            .map(str::trim)
            .find(|l| !l.is_empty() && !l.starts_with('#'));
        match first {
            Some(l) if l.starts_with('{') || l.starts_with('[') => InputFormat::Json,
            Some(l) if l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) => {
                InputFormat::Edgelist
            }
            _ => InputFormat::Graph6,
        }
    }
}

/// A graph together with the identifier used in reports.
pub struct Named {
    pub id: String,
    pub graph: Graph,
}

pub fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Usage(format!("reading stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
    }
}

/// Parses every graph in `text`. A graph6 file holds one graph per line,
/// an edge list file holds one graph, and a JSON file holds one graph object
/// or an array of them.
pub fn parse_all(
    text: &str,
    format: InputFormat,
    indexing: Indexing,
) -> Result<Vec<Named>, CliError> {
    match format {
        InputFormat::Graph6 => graph6_lines(text)
            .map(|(line, s)| {
                parse_graph6(s)
                    .map(|graph| Named {
                        id: s.to_string(),
                        graph,
                    })
                    .map_err(|e| CliError::from_core(e).context(&format!("line {line}")))
            })
            .collect(),
        InputFormat::Edgelist => {
            let graph = parse_edge_list(text, indexing).map_err(CliError::from_core)?;
            Ok(vec![Named {
                id: "0".into(),
                graph,
            }])
        }
        InputFormat::Json => {
            let value: serde_json::Value =
                serde_json::from_str(text).map_err(|e| CliError::Parse(format!("json: {e}")))?;
            let items = match value {
                serde_json::Value::Array(items) => items,
                other => vec![other],
            };
            items
                .into_iter()
                .enumerate()
                .map(|(i, item)| {
                    let json: GraphJson = serde_json::from_value(item)
                        .map_err(|e| CliError::Parse(format!("json graph {i}: {e}")))?;
                    let graph = Graph::from_json(&json).map_err(CliError::from_core)?;
                    Ok(Named {
                        id: i.to_string(),
                        graph,
                    })
                })
                .collect()
        }
    }
}

/// Nonblank lines with their 1-based line numbers, header line skipped.
pub fn graph6_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| (i, l.strip_prefix(">>graph6<<").unwrap_or(l)))
}

/// Comma- or space-separated vertex list.
pub fn parse_vertex_list(s: &str, indexing: Indexing) -> Result<Vec<usize>, CliError> {
    s.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| {
            let v: usize = t
                .parse()
                .map_err(|_| CliError::Usage(format!("bad vertex {t:?}")))?;
            match indexing {
                Indexing::ZeroBased => Ok(v),
                Indexing::OneBased if v >= 1 => Ok(v - 1),
                Indexing::OneBased => Err(CliError::Usage("vertex 0 with --one-based".into())),
            }
        })
        .collect()
}
