//! graph6 and plain edge-list text formats.
//!
//! graph6 follows the standard layout: a size prefix (one byte `n + 63` for
//! `n <= 62`, otherwise `~` plus three or `~~` plus six 6-bit groups), then
//! the upper triangle of the adjacency matrix in column order
//! `(0,1), (0,2), (1,2), (0,3), ...`, packed six bits per byte offset by 63.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with 0-based vertices. Blank lines and `#` comments are ignored.

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_GRAPH6_N: usize = 68_719_476_735;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(n * n / 12 + 8);
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        assert!(n <= MAX_GRAPH6_N, "graph too large for graph6");
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Parses one graph6 string. An optional `>>graph6<<` header is accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let bad = |msg: &str| Error::Parse {
        line: 1,
        msg: format!("graph6: {msg}"),
    };
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    if let Some(b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(&format!("byte {b} outside 63..=126")));
    }
    let group = |b: &[u8]| {
        b.iter()
            .fold(0usize, |acc, &x| acc << 6 | (x - 63) as usize)
    };
    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated size prefix"));
        }
        (group(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(bad("truncated size prefix"));
        }
        (group(&bytes[2..8]), &bytes[8..])
    };
    if n == 0 {
        return Err(bad("graphs need at least one vertex"));
    }
    let bits = n * (n - 1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(bad(&format!(
            "expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.insert_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        msg: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l)?;
        if u >= n || v >= n || u == v {
            return Err(Error::Parse {
                line,
                msg: format!("invalid edge ({u},{v}) for n={n}"),
            });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: hline,
            msg: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

fn parse_pair(line: usize, l: &str) -> Result<(usize, usize)> {
    let fields: Vec<&str> = l.split_whitespace().collect();
    let parse = |s: &str| {
        s.parse::<usize>().map_err(|_| Error::Parse {
            line,
            msg: format!("expected a non-negative integer, found `{s}`"),
        })
    };
    match fields.as_slice() {
        [a, b] => Ok((parse(a)?, parse(b)?)),
        _ => Err(Error::Parse {
            line,
            msg: format!("expected two integers, found `{l}`"),
        }),
    }
}

/// Reads one or more graphs: an edge list if the first meaningful line is
/// two integers, otherwise one graph6 string per line.
pub fn parse_graphs(text: &str) -> Result<Vec<Graph>> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        None => Err(Error::Parse {
            line: 1,
            msg: "no graph found".into(),
        }),
        Some(l) if l.split_whitespace().count() == 2 => Ok(vec![parse_edge_list(text)?]),
        Some(_) => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
            .map(|(i, l)| {
                parse_graph6(l).map_err(|e| match e {
                    Error::Parse { msg, .. } => Error::Parse { line: i + 1, msg },
                    other => other,
                })
            })
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_graph6_strings() {
        // Reference strings from the graph6 format description.
        let p5 = Graph::from_edge_list(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&p5), "DQc");
        assert_eq!(to_graph6(&Graph::empty(1)), "@");
        let k2 = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert_eq!(to_graph6(&k2), "A_");
        let k4 =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(to_graph6(&k4), "C~");
    }

    #[test]
    fn parse_matches_encode() {
        let g = parse_graph6("DQc").unwrap();
        assert_eq!(g.edges(), vec![(0, 2), (0, 4), (1, 3), (3, 4)]);
        assert!(parse_graph6(">>graph6<<A_").unwrap().has_edge(0, 1));
    }

    #[test]
    fn large_size_prefix() {
        let n = 100;
        let edges: Vec<_> = (0..n - 1).map(|v| (v, v + 1)).collect();
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let s = to_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_graph6() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("?").is_err());
        assert!(parse_graph6("D").is_err());
        assert!(parse_graph6("DQcc").is_err());
        assert!(parse_graph6("D\tc").is_err());
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let text = "# diamond\n4 5\n0 1\n0 2\n1 2\n1 3\n2 3\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(parse_edge_list(&to_edge_list(&g)).unwrap(), g);
        assert!(matches!(
            parse_edge_list("3 1\n0 0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(parse_edge_list("3 x\n").is_err());
    }

    #[test]
    fn format_detection() {
        assert_eq!(parse_graphs("2 1\n0 1\n").unwrap().len(), 1);
        assert_eq!(parse_graphs("DQc\nA_\n").unwrap().len(), 2);
        assert!(matches!(
            parse_graphs("DQc\nzz\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
