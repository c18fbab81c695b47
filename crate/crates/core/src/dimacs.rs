//! DIMACS edge format, 1-indexed: `p edge <n> <m>` header, `e <u> <v>`
//! lines, `c` comments. The serializer emits edges with u < v in ascending
//! order so output is canonical byte-for-byte.

use std::io::{BufRead, Write};

use crate::error::Error;
use crate::graph::Graph;

pub fn parse<R: BufRead>(reader: R) -> Result<Graph, Error> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let err = |msg: String| Error::Dimacs { line: lineno, msg };
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(err("duplicate problem line".into()));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(err(format!("expected 'p edge <n> <m>', got '{trimmed}'")));
                }
                let n = fields[2].parse().map_err(|_| err("bad vertex count".into()))?;
                let m = fields[3].parse().map_err(|_| err("bad edge count".into()))?;
                header = Some((n, m));
            }
            "e" => {
                let (n, _) = header.ok_or_else(|| err("edge before problem line".into()))?;
                if fields.len() != 3 {
                    return Err(err(format!("expected 'e <u> <v>', got '{trimmed}'")));
                }
                let u: usize = fields[1].parse().map_err(|_| err("bad endpoint".into()))?;
                let v: usize = fields[2].parse().map_err(|_| err("bad endpoint".into()))?;
                if u < 1 || v < 1 || u > n || v > n {
                    return Err(err(format!("endpoint out of range 1..={n}")));
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                let e = (u.min(v) - 1, u.max(v) - 1);
                if edges.contains(&e) {
                    return Err(err(format!("duplicate edge ({u}, {v})")));
                }
                edges.push(e);
            }
            other => return Err(err(format!("unrecognized line type '{other}'"))),
        }
    }
    let (n, m) = header.ok_or(Error::Dimacs { line: 0, msg: "missing problem line".into() })?;
    if edges.len() != m {
        return Err(Error::Dimacs {
            line: 0,
            msg: format!("header declares {m} edges but {} were given", edges.len()),
        });
    }
    Graph::from_edges(n, &edges)
}

pub fn parse_str(s: &str) -> Result<Graph, Error> {
    parse(s.as_bytes())
}

pub fn write<W: Write>(g: &Graph, mut w: W) -> Result<(), Error> {
    writeln!(w, "p edge {} {}", g.n(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(w, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

pub fn to_string(g: &Graph) -> String {
    let mut buf = Vec::new();
    write(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("output is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_serialize_c5() {
        let text = "c five-cycle\np edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
        let g = parse_str(text).unwrap();
        assert_eq!(g, Graph::cycle(5));
        assert_eq!(to_string(&g), "p edge 5 5\ne 1 2\ne 1 5\ne 2 3\ne 3 4\ne 4 5\n");
    }

    #[test]
    fn canonical_round_trip() {
        let g = Graph::cycle(7).complement();
        assert_eq!(parse_str(&to_string(&g)).unwrap(), g);
    }

    #[test]
    fn rejections() {
        assert!(parse_str("p edge 3 1\ne 1 1\n").is_err());
        assert!(parse_str("p edge 3 2\ne 1 2\ne 2 1\n").is_err());
        assert!(parse_str("p edge 3 1\ne 1 4\n").is_err());
        assert!(parse_str("p edge 3 2\ne 1 2\n").is_err());
        assert!(parse_str("e 1 2\n").is_err());
        assert!(parse_str("").is_err());
    }

    #[test]
    fn empty_graph_round_trip() {
        let g = Graph::empty(4);
        assert_eq!(to_string(&g), "p edge 4 0\n");
        assert_eq!(parse_str("p edge 4 0\n").unwrap(), g);
    }
}
