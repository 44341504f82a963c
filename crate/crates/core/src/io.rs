//! Text formats: plane files, polarity files, adjacency lists, DIMACS.
//!
//! Plane file:
//!
//! ```text
//! plane order=<q> points=<n> lines=<n>
//! L <line-index>: <point indices...>
//! ```
//!
//! Polarity file:
//!
//! ```text
//! polarity order=<q>
//! P <point-index> -> L <line-index>
//! ```
//!
//! Indices are 0-based and `#` starts a comment in every format.

use std::fmt::Write as _;

use serde_json::json;

use crate::error::{Error, Result};
use crate::graph::{PolarityGraph, SimpleGraph};
use crate::plane::IncidencePlane;
use crate::polarity::{Polarity, PolarityKind};

// Whitespace-separated tokens with 1-based columns, comments stripped.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let body = line.split('#').next().unwrap_or("");
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in body.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s + 1, &body[s..i]));
                start = None;
            }
            (false, None) => start = Some(i),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &body[s..]));
    }
    out
}

fn number<T: std::str::FromStr>(line: usize, col: usize, tok: &str, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, col, format!("expected {what}, found `{tok}`")))
}

// Parses `key=value` header fields after the leading keyword.
fn header_fields(line: usize, toks: &[(usize, &str)], keys: &[&str]) -> Result<Vec<usize>> {
    let mut values = vec![None; keys.len()];
    for &(col, tok) in &toks[1..] {
        let (k, v) = tok
            .split_once('=')
            .ok_or_else(|| Error::parse(line, col, format!("expected key=value, found `{tok}`")))?;
        let slot = keys
            .iter()
            .position(|&key| key == k)
            .ok_or_else(|| Error::parse(line, col, format!("unknown header field `{k}`")))?;
        values[slot] = Some(number(line, col + k.len() + 1, v, "an integer")?);
    }
    keys.iter()
        .zip(values)
        .map(|(k, v)| v.ok_or_else(|| Error::parse(line, 1, format!("header is missing `{k}`"))))
        .collect()
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<(usize, &str)>)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l)))
        .filter(|(_, t)| !t.is_empty())
}

pub fn write_plane(plane: &IncidencePlane) -> String {
    let mut s = format!(
        "plane order={} points={} lines={}\n",
        plane.order(),
        plane.num_points(),
        plane.num_lines()
    );
    for (l, pts) in plane.lines().iter().enumerate() {
        let _ = write!(s, "L {l}:");
        for p in pts {
            let _ = write!(s, " {p}");
        }
        s.push('\n');
    }
    s
}

/// Parses a plane file and validates the axioms.
pub fn read_plane(text: &str) -> Result<IncidencePlane> {
    let mut rows = content_lines(text);
    let (hl, head) = rows
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty plane file"))?;
    if head[0].1 != "plane" {
        return Err(Error::parse(hl, head[0].0, "expected `plane` header"));
    }
    let f = header_fields(hl, &head, &["order", "points", "lines"])?;
    let (order, n_points, n_lines) = (f[0] as u32, f[1], f[2]);

    let mut lines: Vec<Option<Vec<u32>>> = vec![None; n_lines];
    for (ln, toks) in rows {
        if toks[0].1 != "L" {
            return Err(Error::parse(
                ln,
                toks[0].0,
                format!("expected `L`, found `{}`", toks[0].1),
            ));
        }
        let (col, idx_tok) = *toks
            .get(1)
            .ok_or_else(|| Error::parse(ln, toks[0].0 + 1, "missing line index"))?;
        let idx_str = idx_tok
            .strip_suffix(':')
            .ok_or_else(|| Error::parse(ln, col, "line index must end with `:`"))?;
        let idx: usize = number(ln, col, idx_str, "a line index")?;
        if idx >= n_lines {
            return Err(Error::parse(
                ln,
                col,
                format!("line index {idx} exceeds lines={n_lines}"),
            ));
        }
        if lines[idx].is_some() {
            return Err(Error::parse(ln, col, format!("line {idx} listed twice")));
        }
        let mut pts = Vec::with_capacity(toks.len() - 2);
        for &(c, t) in &toks[2..] {
            let p: u32 = number(ln, c, t, "a point index")?;
            if p as usize >= n_points {
                return Err(Error::parse(
                    ln,
                    c,
                    format!("point index {p} exceeds points={n_points}"),
                ));
            }
            pts.push(p);
        }
        lines[idx] = Some(pts);
    }
    let lines = lines
        .into_iter()
        .enumerate()
        .map(|(i, l)| l.ok_or_else(|| Error::parse(hl, 1, format!("line {i} is never listed"))))
        .collect::<Result<Vec<_>>>()?;
    IncidencePlane::from_lines(order, n_points, lines)
}

pub fn write_polarity(polarity: &Polarity, order: u32) -> String {
    let mut s = format!("polarity order={order}\n");
    for (p, l) in polarity.point_to_line().iter().enumerate() {
        let _ = writeln!(s, "P {p} -> L {l}");
    }
    s
}

/// Parses a polarity file for `plane` and validates it.
pub fn read_polarity(text: &str, plane: &IncidencePlane) -> Result<Polarity> {
    let mut rows = content_lines(text);
    let (hl, head) = rows
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty polarity file"))?;
    if head[0].1 != "polarity" {
        return Err(Error::parse(hl, head[0].0, "expected `polarity` header"));
    }
    let order = header_fields(hl, &head, &["order"])?[0] as u32;
    if order != plane.order() {
        return Err(Error::parse(
            hl,
            1,
            format!(
                "polarity has order {order}, plane has order {}",
                plane.order()
            ),
        ));
    }
    let n = plane.num_points();
    let mut map: Vec<Option<u32>> = vec![None; n];
    for (ln, toks) in rows {
        let shape: Vec<&str> = toks.iter().map(|t| t.1).collect();
        if toks.len() != 5 || shape[0] != "P" || shape[2] != "->" || shape[3] != "L" {
            return Err(Error::parse(
                ln,
                toks[0].0,
                "expected `P <point> -> L <line>`",
            ));
        }
        let p: usize = number(ln, toks[1].0, shape[1], "a point index")?;
        let l: u32 = number(ln, toks[4].0, shape[4], "a line index")?;
        if p >= n {
            return Err(Error::parse(
                ln,
                toks[1].0,
                format!("point index {p} out of range"),
            ));
        }
        if map[p].replace(l).is_some() {
            return Err(Error::parse(
                ln,
                toks[1].0,
                format!("point {p} mapped twice"),
            ));
        }
    }
    let map = map
        .into_iter()
        .enumerate()
        .map(|(p, l)| l.ok_or_else(|| Error::parse(hl, 1, format!("point {p} has no image"))))
        .collect::<Result<Vec<_>>>()?;
    let theta = Polarity::from_point_map(map, PolarityKind::Custom)?;
    let report = theta.validate(plane);
    if report.passed() {
        Ok(theta)
    } else {
        Err(Error::InvalidPolarity(report))
    }
}

/// One `v: n1 n2 ...` line per vertex.
pub fn write_adjacency(g: &SimpleGraph) -> String {
    let mut s = String::new();
    for v in 0..g.num_vertices() as u32 {
        let _ = write!(s, "{v}:");
        for u in g.neighbors(v) {
            let _ = write!(s, " {u}");
        }
        s.push('\n');
    }
    s
}

pub fn read_adjacency(text: &str) -> Result<SimpleGraph> {
    let mut adj: Vec<Vec<u32>> = Vec::new();
    for (ln, toks) in content_lines(text) {
        let (col, head) = toks[0];
        let v: usize = number(
            ln,
            col,
            head.strip_suffix(':').unwrap_or("?"),
            "`<vertex>:`",
        )?;
        if v != adj.len() {
            return Err(Error::parse(
                ln,
                col,
                format!("expected vertex {}, found {v}", adj.len()),
            ));
        }
        let nbrs = toks[1..]
            .iter()
            .map(|&(c, t)| number::<u32>(ln, c, t, "a vertex id"))
            .collect::<Result<Vec<_>>>()?;
        adj.push(nbrs);
    }
    let n = adj.len();
    let edges: Vec<(u32, u32)> = adj
        .iter()
        .enumerate()
        .flat_map(|(u, list)| list.iter().map(move |&v| (u as u32, v)))
        .collect();
    if let Some(&(u, v)) = edges.iter().find(|&&(_, v)| v as usize >= n) {
        return Err(Error::VertexOutOfRange {
            vertex: v.max(u),
            n,
        });
    }
    let g = SimpleGraph::from_adjacency(adj);
    if !g.is_symmetric() {
        return Err(Error::parse(1, 1, "adjacency lists are not symmetric"));
    }
    Ok(g)
}

/// DIMACS undirected edge format with 1-based vertex ids.
pub fn write_dimacs(g: &SimpleGraph, comment: &str) -> String {
    let mut s = String::new();
    for line in comment.lines() {
        let _ = writeln!(s, "c {line}");
    }
    let _ = writeln!(s, "p edge {} {}", g.num_vertices(), g.num_edges());
    for (u, v) in g.edges() {
        let _ = writeln!(s, "e {} {}", u + 1, v + 1);
    }
    s
}

pub fn read_dimacs(text: &str) -> Result<SimpleGraph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let ln = i + 1;
        let toks = tokens(line);
        let Some(&(col, kind)) = toks.first() else {
            continue;
        };
        match kind {
            "c" => {}
            "p" => {
                if toks.len() != 4 || toks[1].1 != "edge" {
                    return Err(Error::parse(ln, col, "expected `p edge <n> <m>`"));
                }
                n = Some(number::<usize>(ln, toks[2].0, toks[2].1, "a vertex count")?);
            }
            "e" => {
                let nv = n.ok_or_else(|| Error::parse(ln, col, "edge before `p` line"))?;
                if toks.len() != 3 {
                    return Err(Error::parse(ln, col, "expected `e <u> <v>`"));
                }
                let mut ends = [0u32; 2];
                for (k, &(c, t)) in toks[1..].iter().enumerate() {
                    let x: usize = number(ln, c, t, "a vertex id")?;
                    if x == 0 || x > nv {
                        return Err(Error::parse(ln, c, format!("vertex {x} outside 1..={nv}")));
                    }
                    ends[k] = (x - 1) as u32;
                }
                edges.push((ends[0], ends[1]));
            }
            other => return Err(Error::parse(ln, col, format!("unknown record `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| Error::parse(1, 1, "missing `p edge` line"))?;
    Ok(SimpleGraph::from_edges(n, edges))
}

pub fn graph_json(g: &PolarityGraph) -> serde_json::Value {
    json!({
        "graph": g.descriptor(),
        "n": g.num_vertices(),
        "edges": g.graph().num_edges(),
        "absolute": g.absolute_points(),
        "adjacency": g.graph().adjacency(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;

    fn fano() -> IncidencePlane {
        IncidencePlane::pg2(&Field::new(2, 1).unwrap()).unwrap()
    }

    #[test]
    fn plane_round_trip() {
        let plane = fano();
        let text = write_plane(&plane);
        assert!(text.starts_with("plane order=2 points=7 lines=7\n"));
        let back = read_plane(&text).unwrap();
        assert_eq!(back.lines(), plane.lines());
        assert_eq!(write_plane(&back), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let body = write_plane(&fano()).replace("\nL 3:", "\n\n# comment line\nL 3:");
        let text = format!("# Fano plane\n{}", body.replace('\n', "  # trailing\n"));
        assert_eq!(read_plane(&text).unwrap().lines(), fano().lines());
    }

    #[test]
    fn syntax_error_has_position() {
        let text = "plane order=2 points=7 lines=7\nL 0: 0 1 x\n";
        match read_plane(text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 10)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(
            read_plane("plane order=2 points=7\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn short_line_fails_validation() {
        let plane = IncidencePlane::pg2(&Field::new(3, 1).unwrap()).unwrap();
        let text = write_plane(&plane);
        let mut rows: Vec<String> = text.lines().map(String::from).collect();
        // drop the last point of line 0
        let cut = rows[1].rfind(' ').unwrap();
        rows[1].truncate(cut);
        match read_plane(&rows.join("\n")) {
            Err(Error::InvalidPlane(report)) => {
                assert!(!report.check("uniform line size").unwrap().passed())
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn polarity_round_trip() {
        let plane = IncidencePlane::pg2(&Field::new(3, 2).unwrap()).unwrap();
        let theta = Polarity::unitary(&plane).unwrap();
        let text = write_polarity(&theta, 9);
        let back = read_polarity(&text, &plane).unwrap();
        assert_eq!(back.point_to_line(), theta.point_to_line());
        assert_eq!(back.kind(), PolarityKind::Custom);
    }

    #[test]
    fn polarity_must_be_total_and_valid() {
        let plane = fano();
        assert!(matches!(
            read_polarity("polarity order=2\nP 0 -> L 0\n", &plane),
            Err(Error::Parse { .. })
        ));
        let mut text = String::from("polarity order=2\n");
        for p in 0..7 {
            text.push_str(&format!("P {p} -> L {}\n", (p + 1) % 7));
        }
        assert!(matches!(
            read_polarity(&text, &plane),
            Err(Error::InvalidPolarity(_))
        ));
        assert!(matches!(
            read_polarity("polarity order=3\n", &plane),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn graph_formats_round_trip() {
        let g = PolarityGraph::er(4).unwrap();
        let adj = read_adjacency(&write_adjacency(g.graph())).unwrap();
        assert_eq!(&adj, g.graph());
        let dimacs = write_dimacs(g.graph(), "ER_4\northogonal");
        assert!(dimacs.contains("p edge 21 50\n"));
        assert_eq!(&read_dimacs(&dimacs).unwrap(), g.graph());
    }

    #[test]
    fn asymmetric_adjacency_rejected() {
        assert!(read_adjacency("0: 1\n1:\n").is_err());
        assert!(read_adjacency("0: 5\n").is_err());
    }
}
