//! Line-based text formats, JSON mirrors, and DOT export.
//!
//! Graph file:          `graph <n>` then `e <u> <v>` lines with u < v.
//! Tournament file:     `tournament <k>`, `parts <s1> ... <sk>`, then
//!                      `a <u> <v>` lines meaning the arc u -> v.
//! Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{BuildError, Graph, MultipartiteTournament};
use crate::realize::{Answer, Verdict};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Build {
        line: usize,
        #[source]
        source: BuildError,
    },
    #[error("missing `{0}` header")]
    MissingHeader(&'static str),
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Validation(#[from] BuildError),
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, token: &str, what: &str) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| syntax(line, format!("expected {what}, got `{token}`")))
}

pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader("graph"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("graph") {
        return Err(syntax(header_line, "expected `graph <n>` header"));
    }
    let n_token = tokens
        .next()
        .ok_or_else(|| syntax(header_line, "expected vertex count after `graph`"))?;
    let n = parse_usize(header_line, n_token, "vertex count")?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("e") => {
                let u = parse_usize(lineno, tokens.next().unwrap_or(""), "vertex")?;
                let v = parse_usize(lineno, tokens.next().unwrap_or(""), "vertex")?;
                if tokens.next().is_some() {
                    return Err(syntax(lineno, "trailing tokens after edge"));
                }
                edges.push((u, v));
            }
            other => {
                return Err(syntax(
                    lineno,
                    format!("expected `e <u> <v>`, got `{}`", other.unwrap_or("")),
                ))
            }
        }
    }
    Graph::new(n, &edges).map_err(|source| ParseError::Build { line: 0, source })
}

pub fn parse_tournament(text: &str) -> Result<MultipartiteTournament, ParseError> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or(ParseError::MissingHeader("tournament"))?;
    let mut tokens = header.split_whitespace();
    if tokens.next() != Some("tournament") {
        return Err(syntax(header_line, "expected `tournament <k>` header"));
    }
    let k_token = tokens
        .next()
        .ok_or_else(|| syntax(header_line, "expected part count after `tournament`"))?;
    let k = parse_usize(header_line, k_token, "part count")?;
    let (parts_line, parts) = lines
        .next()
        .ok_or(ParseError::MissingHeader("parts"))?;
    let mut tokens = parts.split_whitespace();
    if tokens.next() != Some("parts") {
        return Err(syntax(parts_line, "expected `parts <s1> ... <sk>` line"));
    }
    let part_sizes: Vec<usize> = tokens
        .map(|t| parse_usize(parts_line, t, "part size"))
        .collect::<Result<_, _>>()?;
    if part_sizes.len() != k {
        return Err(syntax(
            parts_line,
            format!("header says {k} parts but {} sizes listed", part_sizes.len()),
        ));
    }
    let mut arcs = Vec::new();
    for (lineno, line) in lines {
        let mut tokens = line.split_whitespace();
        match tokens.next() {
            Some("a") => {
                let u = parse_usize(lineno, tokens.next().unwrap_or(""), "vertex")?;
                let v = parse_usize(lineno, tokens.next().unwrap_or(""), "vertex")?;
                if tokens.next().is_some() {
                    return Err(syntax(lineno, "trailing tokens after arc"));
                }
                arcs.push((u, v));
            }
            other => {
                return Err(syntax(
                    lineno,
                    format!("expected `a <u> <v>`, got `{}`", other.unwrap_or("")),
                ))
            }
        }
    }
    MultipartiteTournament::new(&part_sizes, &arcs)
        .map_err(|source| ParseError::Build { line: 0, source })
}

pub fn graph_to_text(g: &Graph) -> String {
    let mut out = format!("graph {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

pub fn tournament_to_text(t: &MultipartiteTournament) -> String {
    let mut out = format!("tournament {}\n", t.k());
    let sizes: Vec<String> = t.part_sizes().iter().map(|s| s.to_string()).collect();
    writeln!(out, "parts {}", sizes.join(" ")).unwrap();
    for (u, v) in t.arcs() {
        writeln!(out, "a {u} {v}").unwrap();
    }
    out
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.n() {
        writeln!(out, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct TournamentJson {
    parts: Vec<usize>,
    arcs: Vec<(usize, usize)>,
}

pub fn graph_to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson {
        n: g.n(),
        edges: g.edges(),
    })
    .expect("plain data serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph, ParseError> {
    let raw: GraphJson = serde_json::from_str(text)?;
    Ok(Graph::new(raw.n, &raw.edges)?)
}

pub fn tournament_to_json(t: &MultipartiteTournament) -> String {
    serde_json::to_string(&TournamentJson {
        parts: t.part_sizes().to_vec(),
        arcs: t.arcs(),
    })
    .expect("plain data serializes")
}

pub fn tournament_from_json(text: &str) -> Result<MultipartiteTournament, ParseError> {
    let raw: TournamentJson = serde_json::from_str(text)?;
    Ok(MultipartiteTournament::new(&raw.parts, &raw.arcs)?)
}

pub fn verdict_to_json(v: &Verdict) -> String {
    let mut map = serde_json::Map::new();
    let answer = match v.answer {
        Answer::Yes => "yes",
        Answer::No => "no",
        Answer::Unknown => "unknown",
    };
    map.insert("answer".into(), answer.into());
    if let Some(c) = v.citation {
        map.insert("citation".into(), c.to_string().into());
    }
    if let Some(w) = &v.witness {
        let raw = TournamentJson {
            parts: w.part_sizes().to_vec(),
            arcs: w.arcs(),
        };
        map.insert(
            "witness".into(),
            serde_json::to_value(raw).expect("plain data serializes"),
        );
    }
    if let Some(r) = &v.reason {
        map.insert("reason".into(), r.clone().into());
    }
    serde_json::Value::Object(map).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_text_round_trip() {
        let g = Graph::new(4, &[(1, 2), (2, 3)]).unwrap();
        let text = graph_to_text(&g);
        assert_eq!(text, "graph 4\ne 1 2\ne 2 3\n");
        assert_eq!(parse_graph(&text).unwrap(), g);
    }

    #[test]
    fn graph_text_comments_and_errors() {
        let g = parse_graph("# a path\ngraph 3\ne 0 1\n\ne 1 2\n").unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);

        assert!(matches!(
            parse_graph("graph 3\nx 0 1\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(parse_graph("graph 3\ne 0 5\n").is_err());
        assert!(matches!(parse_graph(""), Err(ParseError::MissingHeader(_))));
    }

    #[test]
    fn tournament_text_round_trip() {
        let t =
            MultipartiteTournament::new(&[2, 1, 1], &[(0, 2), (2, 1), (1, 3), (3, 0), (2, 3)])
                .unwrap();
        let text = tournament_to_text(&t);
        assert_eq!(parse_tournament(&text).unwrap(), t);
    }

    #[test]
    fn tournament_text_rejects_invalid() {
        assert!(matches!(
            parse_tournament("tournament 2\nparts 1 1 1\n"),
            Err(ParseError::Syntax { line: 2, .. })
        ));
        assert!(parse_tournament("tournament 2\nparts 1 1\n").is_err()); // missing pair
    }

    #[test]
    fn json_round_trips() {
        let g = Graph::new(4, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(graph_from_json(&graph_to_json(&g)).unwrap(), g);

        let t = MultipartiteTournament::new(&[1, 1, 1], &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(tournament_from_json(&tournament_to_json(&t)).unwrap(), t);
    }

    #[test]
    fn dot_output() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(graph_to_dot(&g), "graph {\n  0;\n  1;\n  2;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn verdict_json_shapes() {
        let v = crate::realize::decide(&Graph::complete(4), 3).unwrap();
        let json = verdict_to_json(&v);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(value["answer"], "no");
        assert_eq!(value["citation"], "Thm4.1(complete)");
        assert!(value.get("witness").is_none());
    }
}
