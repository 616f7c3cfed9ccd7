//! Graph file formats: graph6 (bit-exact per the published byte format),
//! plain edge-list text, and one-way DOT export.

use domforce_core::{Graph, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("invalid graph6 header byte {byte:#04x}")]
    InvalidHeader { byte: u8 },
    #[error("graph6 order {order} exceeds the supported maximum {max}")]
    UnsupportedOrder { order: usize, max: usize },
    #[error("invalid graph6 data byte {byte:#04x} at position {pos}")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("truncated graph6 stream: expected {expected} data bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing data after {expected} graph6 data bytes")]
    TrailingData { expected: usize },
    #[error("edge-list line {line}: expected two vertex indices, got {content:?}")]
    BadEdgeLine { line: usize, content: String },
    #[error("graph construction failed: {0}")]
    Graph(#[from] domforce_core::Error),
}

const G6_BIAS: u8 = 63;

/// Encodes a graph in graph6. Orders up to 62 use the one-byte header; larger
/// orders use the `~` + 18-bit header form.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_VERTICES);
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + G6_BIAS) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + G6_BIAS) as char);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push((acc + G6_BIAS) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        acc <<= 6 - nbits;
        out.push((acc + G6_BIAS) as char);
    }
    out
}

/// Decodes a graph6 string (surrounding whitespace ignored).
pub fn from_graph6(text: &str) -> Result<Graph, FormatError> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    let (n, pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // the 36-bit form encodes orders beyond anything we support
            return Err(FormatError::UnsupportedOrder {
                order: usize::MAX,
                max: MAX_VERTICES,
            });
        }
        if bytes.len() < 4 {
            return Err(FormatError::Truncated {
                expected: 4,
                got: bytes.len(),
            });
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(G6_BIAS..=126).contains(&b) {
                return Err(FormatError::InvalidByte { pos: 1 + i, byte: b });
            }
            n = (n << 6) | (b - G6_BIAS) as usize;
        }
        (n, 4)
    } else {
        if !(G6_BIAS..=125).contains(&bytes[0]) {
            return Err(FormatError::InvalidHeader { byte: bytes[0] });
        }
        ((bytes[0] - G6_BIAS) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(FormatError::UnsupportedOrder {
            order: n,
            max: MAX_VERTICES,
        });
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    let data = &bytes[pos..];
    if data.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            got: data.len(),
        });
    }
    if data.len() > expected {
        return Err(FormatError::TrailingData { expected });
    }
    for (i, &b) in data.iter().enumerate() {
        if !(G6_BIAS..=126).contains(&b) {
            return Err(FormatError::InvalidByte { pos: pos + i, byte: b });
        }
    }

    let mut edges = Vec::new();
    let mut bit_idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[bit_idx / 6] - G6_BIAS;
            if (byte >> (5 - bit_idx % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit_idx += 1;
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

/// Parses an edge list: one `u v` pair per line, 0-based indices. Blank lines
/// and `#` comments are ignored; the order is one more than the largest index.
pub fn from_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut edges = Vec::new();
    let mut max_vertex = None::<usize>;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace();
        let parse = |tok: Option<&str>| -> Option<usize> { tok?.parse().ok() };
        match (parse(it.next()), parse(it.next()), it.next()) {
            (Some(u), Some(v), None) => {
                max_vertex = Some(max_vertex.unwrap_or(0).max(u).max(v));
                edges.push((u, v));
            }
            _ => {
                return Err(FormatError::BadEdgeLine {
                    line: lineno + 1,
                    content: line.to_string(),
                })
            }
        }
    }
    match max_vertex {
        None => Err(FormatError::Empty),
        Some(m) => Ok(Graph::from_edges(m + 1, edges)?),
    }
}

/// Emits the edge-list form: one `u v` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// One-way DOT export. Isolated vertices appear as bare node statements.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        if g.degree(v) == 0 {
            out.push_str(&format!("  {v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {u} -- {v};\n"));
    }
    out.push_str("}\n");
    out
}

/// Reads a graph from text that is either a graph6 line or an edge list.
/// Any line with two whitespace-separated integer tokens selects the
/// edge-list reader.
pub fn parse_graph_text(text: &str) -> Result<Graph, FormatError> {
    let looks_like_edges = text.lines().any(|l| {
        let l = l.trim();
        if l.is_empty() || l.starts_with('#') {
            return false;
        }
        let toks: Vec<&str> = l.split_whitespace().collect();
        toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
    });
    if looks_like_edges {
        from_edge_list(text)
    } else {
        from_graph6(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use domforce_core::FamilySpec;
    use proptest::prelude::*;

    #[test]
    fn fixed_vectors() {
        // "A_" is K_2
        let k2 = from_graph6("A_").unwrap();
        assert_eq!(k2.order(), 2);
        assert!(k2.has_edge(0, 1));
        assert_eq!(to_graph6(&k2), "A_");

        // "Bg" is P_3 with edges 0-1, 1-2
        let p3 = from_graph6("Bg").unwrap();
        assert_eq!(p3.order(), 3);
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(to_graph6(&p3), "Bg");
    }

    #[test]
    fn long_header_roundtrip() {
        let g = FamilySpec::Grid { p: 10, q: 10 }.build().unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_are_rejected() {
        assert_eq!(from_graph6(""), Err(FormatError::Empty));
        assert_eq!(from_graph6("\x1f"), Err(FormatError::InvalidHeader { byte: 0x1f }));
        // C (n = 4) needs one data byte
        assert_eq!(from_graph6("C"), Err(FormatError::Truncated { expected: 1, got: 0 }));
        assert_eq!(from_graph6("A__"), Err(FormatError::TrailingData { expected: 1 }));
        assert!(matches!(
            from_graph6("B("),
            Err(FormatError::InvalidByte { .. })
        ));
        // the giant 36-bit header form is out of range by definition
        assert!(matches!(
            from_graph6("~~AAAAAA"),
            Err(FormatError::UnsupportedOrder { .. })
        ));
    }

    #[test]
    fn edge_list_io() {
        let g = from_edge_list("0 1\n1 2\n\n# comment\n2 3\n").unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(to_edge_list(&g), "0 1\n1 2\n2 3\n");

        assert!(matches!(
            from_edge_list("0 1\n1 1\n"),
            Err(FormatError::Graph(domforce_core::Error::SelfLoop { vertex: 1 }))
        ));
        assert!(matches!(
            from_edge_list("0 1\n0 1\n"),
            Err(FormatError::Graph(domforce_core::Error::DuplicateEdge { .. }))
        ));
        assert!(matches!(
            from_edge_list("0 1 2\n"),
            Err(FormatError::BadEdgeLine { line: 1, .. })
        ));
        assert_eq!(from_edge_list("# nothing\n"), Err(FormatError::Empty));
    }

    #[test]
    fn dot_export() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(to_dot(&g), "graph G {\n  2;\n  0 -- 1;\n}\n");
    }

    #[test]
    fn sniffing_picks_the_right_reader() {
        assert_eq!(parse_graph_text("Bg").unwrap().order(), 3);
        assert_eq!(parse_graph_text("0 1\n1 2").unwrap().order(), 3);
    }

    prop_compose! {
        fn arb_graph()(n in 0usize..30)
            (n in Just(n), bits in proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2))
            -> Graph
        {
            let mut edges = Vec::new();
            let mut idx = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[idx] {
                        edges.push((i, j));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        }
    }

    proptest! {
        #[test]
        fn graph6_roundtrip_is_identity(g in arb_graph()) {
            let encoded = to_graph6(&g);
            let decoded = from_graph6(&encoded).unwrap();
            prop_assert_eq!(&decoded, &g);
            // and the re-encoding is byte-identical
            prop_assert_eq!(to_graph6(&decoded), encoded);
        }
    }
}
