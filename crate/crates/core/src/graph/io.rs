//! Text formats for bipartite graphs.
//!
//! Edge list:
//!
//! ```text
//! # theta-forge graph q=3 t=2 n=3 S=9 P=81 L=243 E=729
//! # field p=3 e=1 modulus=0,1
//! 0 81
//! 0 108
//! …
//! ```
//!
//! Point vertices take indices `[0, P)` and line vertices `[P, P+L)`; edges
//! are `p l` pairs in ascending order. Unknown header values are written as
//! `-`. The `field` line is present only when the field is known.
//!
//! The adjacency format shares the header (with `adjacency` in place of
//! `graph`) and lists `v: w_1 w_2 …` for every vertex in index order.

use std::fmt::Write as _;

use super::BipartiteGraph;
use crate::error::{Error, Result};
use crate::gf::FieldParams;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Adjacency,
}

impl std::str::FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "adjacency" => Ok(GraphFormat::Adjacency),
            other => Err(Error::UnsupportedFormat(other.to_string())),
        }
    }
}

/// Descriptive header fields. Counts are taken from the graph itself.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphMeta {
    pub q: Option<u32>,
    pub t: Option<usize>,
    pub n: Option<usize>,
    pub set_size: Option<usize>,
    pub field: Option<FieldParams>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub meta: GraphMeta,
    pub graph: BipartiteGraph,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn header(kind: &str, meta: &GraphMeta, g: &BipartiteGraph) -> String {
    let mut out = format!(
        "# theta-forge {kind} q={} t={} n={} S={} P={} L={} E={}\n",
        opt(&meta.q),
        opt(&meta.t),
        opt(&meta.n),
        opt(&meta.set_size),
        g.left_count(),
        g.right_count(),
        g.edge_count()
    );
    if let Some(fp) = &meta.field {
        let m: Vec<String> = fp.modulus.iter().map(u32::to_string).collect();
        writeln!(out, "# field p={} e={} modulus={}", fp.p, fp.e, m.join(",")).unwrap();
    }
    out
}

pub fn write_graph(file: &GraphFile, format: GraphFormat) -> String {
    let g = &file.graph;
    let p = g.left_count();
    match format {
        GraphFormat::EdgeList => {
            let mut out = header("graph", &file.meta, g);
            out.reserve(g.edge_count() * 12);
            for (u, v) in g.edges() {
                writeln!(out, "{} {}", u, p + v as usize).unwrap();
            }
            out
        }
        GraphFormat::Adjacency => {
            let mut out = header("adjacency", &file.meta, g);
            for i in 0..g.vertex_count() {
                write!(out, "{i}:").unwrap();
                for w in g.neighbors_unified(i) {
                    write!(out, " {w}").unwrap();
                }
                out.push('\n');
            }
            out
        }
    }
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_opt<T: std::str::FromStr>(line: usize, key: &str, v: Option<&str>) -> Result<Option<T>> {
    match v {
        None | Some("-") => Ok(None),
        Some(s) => s
            .parse()
            .map(Some)
            .map_err(|_| perr(line, format!("bad value for {key}: `{s}`"))),
    }
}

pub fn read_graph(text: &str) -> Result<GraphFile> {
    let mut format = None;
    let mut meta = GraphMeta::default();
    let (mut p_count, mut l_count, mut e_count) = (None, None, None);
    let mut body: Vec<(usize, &str)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let Some(comment) = line.strip_prefix('#') else {
            body.push((ln, line));
            continue;
        };
        let mut tokens = comment.split_whitespace();
        match (tokens.next(), tokens.next()) {
            (Some("theta-forge"), Some(kind @ ("graph" | "adjacency"))) => {
                format = Some(if kind == "graph" {
                    GraphFormat::EdgeList
                } else {
                    GraphFormat::Adjacency
                });
                for tok in tokens {
                    let (k, v) = tok
                        .split_once('=')
                        .ok_or_else(|| perr(ln, format!("bad field `{tok}`")))?;
                    match k {
                        "q" => meta.q = parse_opt(ln, k, Some(v))?,
                        "t" => meta.t = parse_opt(ln, k, Some(v))?,
                        "n" => meta.n = parse_opt(ln, k, Some(v))?,
                        "S" => meta.set_size = parse_opt(ln, k, Some(v))?,
                        "P" => p_count = parse_opt::<usize>(ln, k, Some(v))?,
                        "L" => l_count = parse_opt::<usize>(ln, k, Some(v))?,
                        "E" => e_count = parse_opt::<usize>(ln, k, Some(v))?,
                        _ => {}
                    }
                }
            }
            (Some("field"), Some(first)) => {
                let mut fp = FieldParams {
                    p: 0,
                    e: 0,
                    q: 0,
                    modulus: Vec::new(),
                };
                for tok in std::iter::once(first).chain(tokens) {
                    let (k, v) = tok
                        .split_once('=')
                        .ok_or_else(|| perr(ln, format!("bad field `{tok}`")))?;
                    let bad = || perr(ln, format!("bad value `{v}`"));
                    match k {
                        "p" => fp.p = v.parse().map_err(|_| bad())?,
                        "e" => fp.e = v.parse().map_err(|_| bad())?,
                        "modulus" => {
                            fp.modulus = v
                                .split(',')
                                .map(|d| d.parse().map_err(|_| bad()))
                                .collect::<Result<_>>()?
                        }
                        _ => {}
                    }
                }
                fp.q =
                    fp.p.checked_pow(fp.e)
                        .ok_or_else(|| perr(ln, "field too large"))?;
                meta.field = Some(fp);
            }
            _ => {}
        }
    }
    let format = format.ok_or_else(|| perr(1, "missing `# theta-forge graph` header"))?;
    let p = p_count.ok_or_else(|| perr(1, "header lacks P"))?;
    let l = l_count.ok_or_else(|| perr(1, "header lacks L"))?;
    let total = p + l;
    let side = |ln: usize, x: usize| -> Result<usize> {
        if x >= total {
            Err(perr(ln, format!("vertex {x} out of range")))
        } else {
            Ok(x)
        }
    };
    let num = |ln: usize, s: &str| -> Result<usize> {
        s.parse().map_err(|_| perr(ln, format!("bad vertex `{s}`")))
    };
    let mut edges = Vec::new();
    let mut mirrored = Vec::new();
    match format {
        GraphFormat::EdgeList => {
            for (ln, line) in body {
                let mut it = line.split_whitespace();
                let (Some(a), Some(b), None) = (it.next(), it.next(), it.next()) else {
                    return Err(perr(ln, "expected `p l`"));
                };
                let (a, b) = (side(ln, num(ln, a)?)?, side(ln, num(ln, b)?)?);
                if a >= p || b < p {
                    return Err(perr(ln, "edge must join a point vertex to a line vertex"));
                }
                edges.push((a as u32, (b - p) as u32));
            }
        }
        GraphFormat::Adjacency => {
            for (ln, line) in body {
                let (v, rest) = line
                    .split_once(':')
                    .ok_or_else(|| perr(ln, "expected `v: neighbours`"))?;
                let v = side(ln, num(ln, v.trim())?)?;
                for w in rest.split_whitespace() {
                    let w = side(ln, num(ln, w)?)?;
                    if (v < p) == (w < p) {
                        return Err(perr(ln, "adjacency within one class"));
                    }
                    if v < p {
                        edges.push((v as u32, (w - p) as u32));
                    } else {
                        mirrored.push((w as u32, (v - p) as u32));
                    }
                }
            }
        }
    }
    let graph = BipartiteGraph::from_edges(p, l, edges)?;
    if let Some(e) = e_count {
        if e != graph.edge_count() {
            return Err(Error::MalformedGraph(format!(
                "header says E={e}, found {}",
                graph.edge_count()
            )));
        }
    }
    if format == GraphFormat::Adjacency {
        mirrored.sort_unstable();
        if !mirrored.iter().copied().eq(graph.edges()) {
            return Err(Error::MalformedGraph(
                "adjacency lists are not symmetric".into(),
            ));
        }
    }
    Ok(GraphFile { meta, graph })
}
