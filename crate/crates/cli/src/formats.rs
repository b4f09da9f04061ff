//! Graph ingestion and canonical emission: graph6 (standard 6-bit
//! encoding), a plain edge-list format, and JSON.

use thiserror::Error;
use tk5_core::graph::{build_graph, Graph, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("graph6: {0} at byte {1}")]
    Graph6(String, usize),
    #[error("edgelist: {0} at line {1}")]
    EdgeList(String, usize),
    #[error("json: {0}")]
    Json(String),
    #[error("graph construction failed: {0}")]
    Build(String),
    #[error("unknown format `{0}`")]
    UnknownFormat(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    EdgeList,
    Json,
}

impl std::str::FromStr for GraphFormat {
    type Err = FormatError;
    fn from_str(s: &str) -> Result<Self, FormatError> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "edgelist" | "el" => Ok(GraphFormat::EdgeList),
            "json" => Ok(GraphFormat::Json),
            other => Err(FormatError::UnknownFormat(other.into())),
        }
    }
}

/// Guesses the format: JSON objects start with '{', edge lists start
/// with a bare integer line, anything else is treated as graph6.
pub fn sniff_format(bytes: &[u8]) -> GraphFormat {
    let text = String::from_utf8_lossy(bytes);
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        return GraphFormat::Json;
    }
    if let Some(first) = trimmed.lines().next() {
        if first.trim().parse::<usize>().is_ok()
            && (trimmed.lines().count() > 1 || first.trim().len() < trimmed.trim().len())
        {
            return GraphFormat::EdgeList;
        }
        if first.trim().parse::<usize>().is_ok() && trimmed.lines().count() == 1 {
            // Single bare integer: an edgeless edge-list graph.
            return GraphFormat::EdgeList;
        }
    }
    GraphFormat::Graph6
}

pub fn parse_graph(bytes: &[u8], format: GraphFormat) -> Result<Graph, FormatError> {
    match format {
        GraphFormat::Graph6 => parse_graph6(bytes),
        GraphFormat::EdgeList => parse_edgelist(bytes),
        GraphFormat::Json => parse_json(bytes),
    }
}

pub fn emit_graph(g: &Graph, format: GraphFormat) -> Vec<u8> {
    match format {
        GraphFormat::Graph6 => emit_graph6(g),
        GraphFormat::EdgeList => emit_edgelist(g),
        GraphFormat::Json => emit_json(g),
    }
}

// ---------------------------------------------------------------------
// graph6

fn parse_graph6(bytes: &[u8]) -> Result<Graph, FormatError> {
    let mut data: &[u8] = bytes;
    // Optional header and trailing newline.
    const HEADER: &[u8] = b">>graph6<<";
    if data.starts_with(HEADER) {
        data = &data[HEADER.len()..];
    }
    while data.last() == Some(&b'\n') || data.last() == Some(&b'\r') {
        data = &data[..data.len() - 1];
    }
    if data.is_empty() {
        return Err(FormatError::Graph6("empty input".into(), 0));
    }
    let (n, mut offset) = if data[0] == 126 {
        if data.len() >= 2 && data[1] == 126 {
            if data.len() < 8 {
                return Err(FormatError::Graph6("truncated 36-bit size".into(), 0));
            }
            let mut n: usize = 0;
            for (i, &b) in data[2..8].iter().enumerate() {
                let v = decode6(b, 2 + i)?;
                n = (n << 6) | v as usize;
            }
            (n, 8)
        } else {
            if data.len() < 4 {
                return Err(FormatError::Graph6("truncated 18-bit size".into(), 0));
            }
            let mut n: usize = 0;
            for (i, &b) in data[1..4].iter().enumerate() {
                let v = decode6(b, 1 + i)?;
                n = (n << 6) | v as usize;
            }
            (n, 4)
        }
    } else {
        (decode6(data[0], 0)? as usize, 1)
    };
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if data.len() - offset != bytes_needed {
        return Err(FormatError::Graph6(
            format!(
                "expected {} payload bytes for n = {}, found {}",
                bytes_needed,
                n,
                data.len() - offset
            ),
            offset,
        ));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[offset + bit_index / 6];
            let v = decode6(byte, offset + bit_index / 6)?;
            let bit = (v >> (5 - (bit_index % 6))) & 1;
            if bit == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
        }
    }
    let _ = &mut offset;
    build_graph(n, &edges).map_err(|e| FormatError::Build(e.to_string()))
}

fn decode6(b: u8, at: usize) -> Result<u8, FormatError> {
    if !(63..=126).contains(&b) {
        return Err(FormatError::Graph6(format!("invalid byte {b:#x}"), at));
    }
    Ok(b - 63)
}

fn emit_graph6(g: &Graph) -> Vec<u8> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        out.push(126);
        out.push(126);
        for shift in [30usize, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc: u8 = 0;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            used += 1;
            if used == 6 {
                out.push(acc + 63);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        acc <<= 6 - used;
        out.push(acc + 63);
    }
    out
}

// ---------------------------------------------------------------------
// edge list

fn parse_edgelist(bytes: &[u8]) -> Result<Graph, FormatError> {
    let text = std::str::from_utf8(bytes)
        .map_err(|_| FormatError::EdgeList("not valid UTF-8".into(), 0))?;
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (lno, header) = lines
        .next()
        .ok_or_else(|| FormatError::EdgeList("missing vertex-count header".into(), 0))?;
    let n: usize = header
        .trim()
        .parse()
        .map_err(|_| FormatError::EdgeList("bad vertex count".into(), lno + 1))?;
    let mut edges = Vec::new();
    for (lno, line) in lines {
        let mut it = line.split_whitespace();
        let u: VertexId = it
            .next()
            .ok_or_else(|| FormatError::EdgeList("missing endpoint".into(), lno + 1))?
            .parse()
            .map_err(|_| FormatError::EdgeList("bad endpoint".into(), lno + 1))?;
        let v: VertexId = it
            .next()
            .ok_or_else(|| FormatError::EdgeList("missing endpoint".into(), lno + 1))?
            .parse()
            .map_err(|_| FormatError::EdgeList("bad endpoint".into(), lno + 1))?;
        if it.next().is_some() {
            return Err(FormatError::EdgeList("trailing tokens".into(), lno + 1));
        }
        edges.push((u, v));
    }
    build_graph(n, &edges).map_err(|e| FormatError::Build(e.to_string()))
}

fn emit_edgelist(g: &Graph) -> Vec<u8> {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out.into_bytes()
}

// ---------------------------------------------------------------------
// JSON

#[derive(serde::Serialize, serde::Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

fn parse_json(bytes: &[u8]) -> Result<Graph, FormatError> {
    let jg: JsonGraph =
        serde_json::from_slice(bytes).map_err(|e| FormatError::Json(e.to_string()))?;
    build_graph(jg.n, &jg.edges).map_err(|e| FormatError::Build(e.to_string()))
}

fn emit_json(g: &Graph) -> Vec<u8> {
    let jg = JsonGraph {
        n: g.n(),
        edges: g.edges(),
    };
    let mut out = serde_json::to_vec(&jg).expect("graph serializes");
    out.push(b'\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph6_k5_is_the_known_string() {
        // n=5 header 'D', ten 1-bits packed as "~{".
        let k5 = Graph::complete(5);
        assert_eq!(emit_graph6(&k5), b"D~{".to_vec());
        let parsed = parse_graph6(b"D~{").unwrap();
        assert_eq!(parsed.edge_count(), 10);
        assert_eq!(parsed, k5);
    }

    #[test]
    fn graph6_header_and_newline_tolerated() {
        let g = parse_graph6(b">>graph6<<D~{\n").unwrap();
        assert_eq!(g, Graph::complete(5));
    }

    #[test]
    fn graph6_rejects_garbage() {
        assert!(parse_graph6(b"").is_err());
        assert!(parse_graph6(b"D~").is_err());
        assert!(parse_graph6(&[68, 30, 30]).is_err());
    }

    #[test]
    fn edgelist_round_trip() {
        let g = parse_edgelist(b"3\n0 1\n1 2\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(emit_edgelist(&g), b"3\n0 1\n1 2\n".to_vec());
    }

    #[test]
    fn edgelist_reports_line_numbers() {
        match parse_edgelist(b"3\n0 x\n") {
            Err(FormatError::EdgeList(_, 2)) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let g = parse_json(br#"{"n":2,"edges":[[0,1]]}"#).unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
        let emitted = emit_json(&g);
        let re = parse_json(&emitted).unwrap();
        assert_eq!(re, g);
    }

    #[test]
    fn sniffing() {
        assert_eq!(sniff_format(br#"{"n":2,"edges":[]}"#), GraphFormat::Json);
        assert_eq!(sniff_format(b"3\n0 1\n"), GraphFormat::EdgeList);
        assert_eq!(sniff_format(b"D~{"), GraphFormat::Graph6);
    }

    #[test]
    fn graph6_large_n_uses_extended_size() {
        let g = build_graph(70, &[(0, 69)]).unwrap();
        let bytes = emit_graph6(&g);
        assert_eq!(bytes[0], 126);
        let parsed = parse_graph6(&bytes).unwrap();
        assert_eq!(parsed, g);
    }
}
