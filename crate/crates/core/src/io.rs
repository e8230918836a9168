//! Text formats.
//!
//! `.graph`: a `p <n> <m>` header, then `e <u> <v>` lines (0-based, edge ids
//! in file order) and optional `c <v> <0|1>` lines, 1 meaning black. Either
//! every vertex gets a color line or none does. `#` starts a comment.
//!
//! `.hex`: one `<q> <r>` cell per line in any order; `#` comments.
//!
//! Serialization is canonical: `.graph` writes the header, edges in id order,
//! then colors (computed ones included) in vertex order; `.hex` writes cells
//! sorted by `(r, q)`.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::Path;

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::graph::{Color, Graph};
use crate::hexsys::{Cell, HexSystem};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Graph,
    Hex,
}

impl Format {
    pub fn from_path(path: &Path) -> Option<Format> {
        match path.extension()?.to_str()? {
            "graph" => Some(Format::Graph),
            "hex" => Some(Format::Hex),
            _ => None,
        }
    }

    pub fn extension(self) -> &'static str {
        match self {
            Format::Graph => "graph",
            Format::Hex => "hex",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Graph(Graph),
    Hex(HexSystem),
}

impl Instance {
    pub fn graph(&self) -> &Graph {
        match self {
            Instance::Graph(g) => g,
            Instance::Hex(h) => h.graph(),
        }
    }

    pub fn hex(&self) -> Option<&HexSystem> {
        match self {
            Instance::Hex(h) => Some(h),
            Instance::Graph(_) => None,
        }
    }

    pub fn format(&self) -> Format {
        match self {
            Instance::Graph(_) => Format::Graph,
            Instance::Hex(_) => Format::Hex,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Instance::Graph(g) => write_graph(g),
            Instance::Hex(h) => write_hex(h.cells()),
        }
    }

    /// Hex SHA-256 of the canonical serialization.
    pub fn digest(&self) -> String {
        let bytes = Sha256::digest(self.to_text().as_bytes());
        bytes.iter().fold(String::with_capacity(64), |mut s, b| {
            let _ = write!(s, "{b:02x}");
            s
        })
    }
}

/// Non-empty, comment-stripped lines with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let toks: Vec<&str> = body.split_whitespace().collect();
        (!toks.is_empty()).then_some((i + 1, toks))
    })
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn num<T: std::str::FromStr>(line: usize, tok: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad number `{tok}`")))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut colors: Vec<Option<Color>> = Vec::new();
    let mut colored = 0;
    for (ln, toks) in content_lines(text) {
        match (toks[0], header) {
            ("p", None) if toks.len() == 3 => {
                let n = num(ln, toks[1])?;
                header = Some((n, num(ln, toks[2])?));
                colors = vec![None; n];
            }
            ("p", Some(_)) => return Err(parse_err(ln, "second `p` line")),
            ("p", None) => return Err(parse_err(ln, "expected `p <n> <m>`")),
            (_, None) => return Err(parse_err(ln, "missing `p` header")),
            ("e", Some((n, _))) if toks.len() == 3 => {
                let u: usize = num(ln, toks[1])?;
                let v: usize = num(ln, toks[2])?;
                if u >= n || v >= n {
                    return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
                }
                edges.push((u, v));
            }
            ("c", Some((n, _))) if toks.len() == 3 => {
                let v: usize = num(ln, toks[1])?;
                if v >= n {
                    return Err(parse_err(ln, format!("vertex out of range 0..{n}")));
                }
                let c = match toks[2] {
                    "0" => Color::White,
                    "1" => Color::Black,
                    t => return Err(parse_err(ln, format!("color must be 0 or 1, got `{t}`"))),
                };
                if colors[v].replace(c).is_some() {
                    return Err(parse_err(ln, format!("vertex {v} colored twice")));
                }
                colored += 1;
            }
            (t, _) => return Err(parse_err(ln, format!("unexpected line `{t} ...`"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err(0, "missing `p` header"));
    };
    if edges.len() != m {
        return Err(parse_err(0, format!("header says {m} edges, found {}", edges.len())));
    }
    let color = match colored {
        0 => None,
        k if k == n => Some(colors.into_iter().map(|c| c.unwrap()).collect()),
        k => return Err(parse_err(0, format!("{k} of {n} vertices colored"))),
    };
    Graph::new(n, edges, color)
}

pub fn write_graph(g: &Graph) -> String {
    let mut s = format!("p {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(s, "e {u} {v}");
    }
    if let Some(colors) = g.colors() {
        for (v, c) in colors.iter().enumerate() {
            let _ = writeln!(s, "c {v} {}", c.bit());
        }
    }
    s
}

pub fn parse_hex_cells(text: &str) -> Result<Vec<Cell>> {
    let mut seen = BTreeSet::new();
    let mut cells = Vec::new();
    for (ln, toks) in content_lines(text) {
        if toks.len() != 2 {
            return Err(parse_err(ln, "expected `<q> <r>`"));
        }
        let c: Cell = (num(ln, toks[0])?, num(ln, toks[1])?);
        if !seen.insert(c) {
            return Err(Error::DuplicateCell(c.0, c.1));
        }
        cells.push(c);
    }
    Ok(cells)
}

pub fn parse_hex(text: &str) -> Result<HexSystem> {
    HexSystem::new(&parse_hex_cells(text)?)
}

pub fn write_hex(cells: &[Cell]) -> String {
    let mut sorted = cells.to_vec();
    sorted.sort_by_key(|&(q, r)| (r, q));
    sorted.iter().fold(String::new(), |mut s, (q, r)| {
        let _ = writeln!(s, "{q} {r}");
        s
    })
}

pub fn parse_instance(text: &str, format: Format) -> Result<Instance> {
    Ok(match format {
        Format::Graph => Instance::Graph(parse_graph(text)?),
        Format::Hex => Instance::Hex(parse_hex(text)?),
    })
}

/// Reads a file, choosing the format by extension and falling back to
/// `.graph` when the first content line is a `p` header.
pub fn read_instance(path: &Path) -> Result<Instance> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| parse_err(0, format!("{}: {e}", path.display())))?;
    let format = Format::from_path(path).unwrap_or_else(|| {
        match content_lines(&text).next() {
            Some((_, toks)) if toks[0] == "p" => Format::Graph,
            _ => Format::Hex,
        }
    });
    parse_instance(&text, format)
}
