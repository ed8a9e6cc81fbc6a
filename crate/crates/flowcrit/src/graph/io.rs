//! Interchange formats: graph6 and sparse6 (bit-exact), DIMACS edge lists,
//! and a small JSON edge-list form for reports.
//!
//! graph6 carries simple graphs only; sparse6 carries multigraphs and is
//! what the catalogs persist. Decoders validate padding and reject loops,
//! since nothing in this crate accepts a loop.

use super::{GraphError, Multigraph, VertexId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphIoError {
    #[error("empty input")]
    Empty,
    #[error("sparse6 input must start with ':'")]
    MissingSparse6Header,
    #[error("byte {0:#x} outside the printable graph6 range 63..=126")]
    BadChar(u8),
    #[error("graph on {0} vertices is too large for this encoder")]
    TooLarge(usize),
    #[error("input ends before the declared bit count")]
    Truncated,
    #[error("padding bits are not zero")]
    NonZeroPadding,
    #[error("sparse6 stream decodes a loop at vertex {0}")]
    LoopDecoded(usize),
    #[error("graph6 cannot carry parallel edges; use sparse6")]
    NotSimple,
    #[error("DIMACS: {0}")]
    Dimacs(String),
    #[error("JSON: {0}")]
    Json(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn strip_header<'a>(s: &'a str, header: &str) -> &'a str {
    s.strip_prefix(header).unwrap_or(s)
}

/// Reads the graph order prefix; returns (n, bytes consumed).
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), GraphIoError> {
    match bytes {
        [] => Err(GraphIoError::Empty),
        [126, 126, ..] => Err(GraphIoError::TooLarge(usize::MAX)),
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(GraphIoError::Truncated);
            }
            let mut n = 0usize;
            for &b in &rest[..3] {
                if !(63..=126).contains(&b) {
                    return Err(GraphIoError::BadChar(b));
                }
                n = (n << 6) | (b as usize - 63);
            }
            Ok((n, 4))
        }
        [b, ..] => {
            if !(63..=125).contains(b) {
                return Err(GraphIoError::BadChar(*b));
            }
            Ok((*b as usize - 63, 1))
        }
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) -> Result<(), GraphIoError> {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        return Err(GraphIoError::TooLarge(n));
    }
    Ok(())
}

struct BitReader<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> BitReader<'a> {
    fn new(bytes: &'a [u8]) -> Result<Self, GraphIoError> {
        for &b in bytes {
            if !(63..=126).contains(&b) {
                return Err(GraphIoError::BadChar(b));
            }
        }
        Ok(BitReader { bytes, pos: 0 })
    }

    fn remaining(&self) -> usize {
        self.bytes.len() * 6 - self.pos
    }

    fn take(&mut self, count: usize) -> Option<usize> {
        if count > self.remaining() {
            return None;
        }
        let mut x = 0usize;
        for _ in 0..count {
            let byte = self.bytes[self.pos / 6] - 63;
            let bit = (byte >> (5 - self.pos % 6)) & 1;
            x = (x << 1) | bit as usize;
            self.pos += 1;
        }
        Some(x)
    }
}

struct BitWriter {
    bits: Vec<bool>,
}

impl BitWriter {
    fn new() -> Self {
        BitWriter { bits: Vec::new() }
    }

    fn push(&mut self, value: usize, count: usize) {
        for i in (0..count).rev() {
            self.bits.push((value >> i) & 1 == 1);
        }
    }

    fn finish(self, pad_with: bool, out: &mut Vec<u8>) {
        let mut bits = self.bits;
        while bits.len() % 6 != 0 {
            bits.push(pad_with);
        }
        for chunk in bits.chunks(6) {
            let mut b = 0u8;
            for &bit in chunk {
                b = (b << 1) | bit as u8;
            }
            out.push(b + 63);
        }
    }
}

/// Decodes one graph6 line into a simple graph. Edge ids follow the bit
/// order of the format: (0,1), (0,2), (1,2), (0,3), ...
pub fn decode_graph6(s: &str) -> Result<Multigraph, GraphIoError> {
    let s = strip_header(s.trim(), ">>graph6<<");
    let bytes = s.as_bytes();
    let (n, used) = decode_order(bytes)?;
    let mut reader = BitReader::new(&bytes[used..])?;
    let bit_count = n * n.saturating_sub(1) / 2;
    if reader.remaining() < bit_count {
        return Err(GraphIoError::Truncated);
    }
    if reader.remaining() >= bit_count + 6 {
        return Err(GraphIoError::Truncated); // a whole extra byte: wrong length
    }
    let mut pairs = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if reader.take(1) == Some(1) {
                pairs.push((i, j));
            }
        }
    }
    while reader.remaining() > 0 {
        if reader.take(1) == Some(1) {
            return Err(GraphIoError::NonZeroPadding);
        }
    }
    Ok(Multigraph::from_edge_list(n, &pairs)?)
}

/// Encodes a simple graph as one graph6 line.
pub fn encode_graph6(g: &Multigraph) -> Result<String, GraphIoError> {
    if !g.is_simple() {
        return Err(GraphIoError::NotSimple);
    }
    let n = g.n();
    let mut out = Vec::new();
    encode_order(n, &mut out)?;
    let mut writer = BitWriter::new();
    for j in 1..n {
        for i in 0..j {
            writer.push(usize::from(g.multiplicity(i, j) > 0), 1);
        }
    }
    writer.finish(false, &mut out);
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

fn sparse6_field_width(n: usize) -> usize {
    // bits needed to write n-1
    match n {
        0 | 1 => 1,
        _ => usize::BITS as usize - (n - 1).leading_zeros() as usize,
    }
}

/// Decodes one sparse6 line into a multigraph; parallel edges are kept,
/// loops are an error. Edge ids follow decode order.
pub fn decode_sparse6(s: &str) -> Result<Multigraph, GraphIoError> {
    let s = strip_header(s.trim(), ">>sparse6<<");
    let s = s.strip_prefix(':').ok_or(GraphIoError::MissingSparse6Header)?;
    let bytes = s.as_bytes();
    let (n, used) = decode_order(bytes)?;
    let mut reader = BitReader::new(&bytes[used..])?;
    let k = sparse6_field_width(n);
    let mut pairs = Vec::new();
    let mut v = 0usize;
    loop {
        let Some(b) = reader.take(1) else { break };
        let Some(x) = reader.take(k) else { break };
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(GraphIoError::LoopDecoded(v));
        } else {
            pairs.push((x, v));
        }
    }
    Ok(Multigraph::from_edge_list(n, &pairs)?)
}

/// Encodes a multigraph as one sparse6 line (canonical nauty bit layout,
/// including the power-of-two padding rule).
pub fn encode_sparse6(g: &Multigraph) -> Result<String, GraphIoError> {
    let n = g.n();
    let mut out = vec![b':'];
    encode_order(n, &mut out)?;
    let k = sparse6_field_width(n);
    let mut edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.v, e.u)).collect();
    edges.sort_unstable(); // by higher endpoint, then lower
    let mut writer = BitWriter::new();
    let mut v = 0usize;
    for (hi, lo) in edges {
        if hi == v {
            writer.push(0, 1);
            writer.push(lo, k);
        } else if hi == v + 1 {
            v += 1;
            writer.push(1, 1);
            writer.push(lo, k);
        } else {
            v = hi;
            writer.push(1, 1);
            writer.push(hi, k);
            writer.push(0, 1);
            writer.push(lo, k);
        }
    }
    // all-ones padding can decode as one extra "b=1, x=n-1" entry; when n is a
    // power of two that entry could read as a loop at n-1, so lead with a 0
    if k < 6 && n == (1 << k) && (writer.bits.len() % 6 != 0) && (6 - writer.bits.len() % 6) >= k && v < n - 1
    {
        writer.push(0, 1);
    }
    writer.finish(true, &mut out);
    Ok(String::from_utf8(out).expect("sparse6 bytes are printable ascii"))
}

/// Parses DIMACS edge format: `p edge N M` then `e u v` with 1-based vertices.
pub fn parse_dimacs(text: &str) -> Result<Multigraph, GraphIoError> {
    let mut n: Option<usize> = None;
    let mut declared_m = 0usize;
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["p", "edge", ns, ms] | ["p", "col", ns, ms] => {
                if n.is_some() {
                    return Err(GraphIoError::Dimacs("second p line".into()));
                }
                n = Some(ns.parse().map_err(|_| {
                    GraphIoError::Dimacs(format!("line {}: bad vertex count", lineno + 1))
                })?);
                declared_m = ms.parse().map_err(|_| {
                    GraphIoError::Dimacs(format!("line {}: bad edge count", lineno + 1))
                })?;
            }
            ["e", us, vs] => {
                let parse = |s: &str| -> Result<usize, GraphIoError> {
                    let x: usize = s.parse().map_err(|_| {
                        GraphIoError::Dimacs(format!("line {}: bad endpoint", lineno + 1))
                    })?;
                    if x == 0 {
                        return Err(GraphIoError::Dimacs(format!(
                            "line {}: DIMACS vertices are 1-based",
                            lineno + 1
                        )));
                    }
                    Ok(x - 1)
                };
                pairs.push((parse(us)?, parse(vs)?));
            }
            _ => {
                return Err(GraphIoError::Dimacs(format!(
                    "line {}: unrecognized line {:?}",
                    lineno + 1,
                    line
                )))
            }
        }
    }
    let n = n.ok_or_else(|| GraphIoError::Dimacs("missing p line".into()))?;
    if pairs.len() != declared_m {
        return Err(GraphIoError::Dimacs(format!(
            "p line declares {} edges, found {}",
            declared_m,
            pairs.len()
        )));
    }
    Ok(Multigraph::from_edge_list(n, &pairs)?)
}

pub fn encode_dimacs(g: &Multigraph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for e in g.edges() {
        out.push_str(&format!("e {} {}\n", e.u + 1, e.v + 1));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl Multigraph {
    /// JSON edge-list form `{"n": ..., "edges": [[u, v], ...]}`.
    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            n: self.n(),
            edges: self.edges().iter().map(|e| (e.u, e.v)).collect(),
        };
        serde_json::to_string(&doc).expect("graph json serializes")
    }

    pub fn from_json(text: &str) -> Result<Multigraph, GraphIoError> {
        let doc: GraphJson =
            serde_json::from_str(text).map_err(|e| GraphIoError::Json(e.to_string()))?;
        Ok(Multigraph::from_edge_list(doc.n, &doc.edges)?)
    }
}

/// Accepts a graph in any supported one-line spelling: sparse6 (`:` prefix),
/// JSON (`{` prefix), otherwise graph6. Format headers are honoured.
pub fn parse_graph_auto(line: &str) -> Result<Multigraph, GraphIoError> {
    let line = line.trim();
    if line.is_empty() {
        return Err(GraphIoError::Empty);
    }
    if line.starts_with(">>sparse6<<") || line.starts_with(':') {
        decode_sparse6(line)
    } else if line.starts_with('{') {
        Multigraph::from_json(line)
    } else {
        decode_graph6(line)
    }
}
