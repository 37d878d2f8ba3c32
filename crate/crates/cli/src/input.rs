//! Reading graphs from the command line: graph6 strings, graph6 files,
//! adjacency-matrix text, construction expressions, and generator matrices.

use std::fs;
use std::path::Path;

use clap::ValueEnum;
use elc_core::codes::graph_from_code;
use elc_core::{graph6, BitMatrix, ConstructionSpec, Error, Graph, LinearCode, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Auto,
    Graph6,
    Spec,
    Adjacency,
    /// Generator matrix rows of 0/1, one row per line.
    Matrix,
}

/// A graph together with the name it was given on input.
pub struct Named {
    pub name: String,
    pub graph: Graph,
    /// Information side when the graph came from a generator matrix.
    pub info: Option<u64>,
}

/// Characters that never occur in graph6 but do occur in expressions.
fn looks_like_spec(s: &str) -> bool {
    s.chars().any(|c| c.is_ascii_digit() || c == '(')
}

fn looks_like_matrix(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .all(|l| l.chars().all(|c| c == '0' || c == '1' || c.is_whitespace()))
}

fn square_rows(text: &str) -> bool {
    let rows: Vec<usize> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.chars().filter(|c| !c.is_whitespace()).count())
        .collect();
    rows.iter().all(|&r| r == rows.len())
}

fn from_spec(s: &str, strict: bool) -> Result<Named> {
    let spec: ConstructionSpec = s.parse()?;
    let built = spec.build_with(strict)?;
    for w in &built.warnings {
        eprintln!("warning: {w}");
    }
    Ok(Named { name: spec.to_string(), graph: built.graph, info: None })
}

fn from_matrix(text: &str, name: &str) -> Result<Named> {
    let code = LinearCode::new(BitMatrix::from_text(text)?)?;
    let (graph, p) = graph_from_code(&code)?;
    Ok(Named { name: name.to_string(), graph, info: Some(p.left) })
}

fn from_graph6_lines(text: &str) -> Result<Vec<Named>> {
    let graphs = graph6::decode_lines(text)?;
    Ok(graphs.into_iter().map(|g| Named { name: graph6::encode(&g), graph: g, info: None }).collect())
}

/// Reads one or more graphs from `arg`, which is a file path or a literal.
pub fn read_graphs(arg: &str, format: InputFormat, strict: bool) -> Result<Vec<Named>> {
    let path = Path::new(arg);
    let file_text = if path.is_file() { Some(fs::read_to_string(path)?) } else { None };
    let name = path.file_name().map_or(arg.to_string(), |f| f.to_string_lossy().into_owned());
    match (format, file_text) {
        (InputFormat::Matrix, Some(text)) => Ok(vec![from_matrix(&text, &name)?]),
        (InputFormat::Matrix, None) => Ok(vec![from_matrix(&arg.replace(';', "\n"), arg)?]),
        (InputFormat::Adjacency, Some(text)) => Ok(vec![Named { name, graph: Graph::from_adjacency_text(&text)?, info: None }]),
        (InputFormat::Adjacency, None) => {
            Ok(vec![Named { name: arg.to_string(), graph: Graph::from_adjacency_text(&arg.replace(';', "\n"))?, info: None }])
        }
        (InputFormat::Spec, Some(text)) => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| from_spec(l, strict))
            .collect(),
        (InputFormat::Spec, None) => Ok(vec![from_spec(arg, strict)?]),
        (InputFormat::Graph6, Some(text)) => from_graph6_lines(&text),
        (InputFormat::Graph6, None) => from_graph6_lines(arg),
        (InputFormat::Auto, Some(text)) => {
            if looks_like_matrix(&text) {
                if square_rows(&text) {
                    Ok(vec![Named { name, graph: Graph::from_adjacency_text(&text)?, info: None }])
                } else {
                    Ok(vec![from_matrix(&text, &name)?])
                }
            } else {
                from_graph6_lines(&text)
            }
        }
        (InputFormat::Auto, None) => {
            if looks_like_spec(arg) {
                Ok(vec![from_spec(arg, strict)?])
            } else if arg.is_empty() {
                Err(Error::Parse("empty graph input".into()))
            } else {
                from_graph6_lines(arg)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detection() {
        assert_eq!(read_graphs("Ch", InputFormat::Auto, false).unwrap()[0].graph.edge_count(), 3);
        assert_eq!(read_graphs("S-2(s3)", InputFormat::Auto, false).unwrap()[0].graph.order(), 6);
        assert_eq!(read_graphs("s5", InputFormat::Auto, false).unwrap()[0].graph.order(), 5);
        assert!(read_graphs("", InputFormat::Auto, false).is_err());
        let g = read_graphs("011;101;110", InputFormat::Adjacency, false).unwrap();
        assert_eq!(g[0].graph.edge_count(), 3);
        let m = read_graphs("1011;0110", InputFormat::Matrix, false).unwrap();
        assert_eq!(m[0].graph.order(), 4);
        assert_eq!(m[0].info, Some(0b11));
    }
}
