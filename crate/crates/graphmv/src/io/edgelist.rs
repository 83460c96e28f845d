//! Plain text edge lists: one `src dst [weight]` per line, 0-based.

use super::EdgeList;
use crate::error::{Error, Result};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<EdgeList> {
    let path = path.as_ref();
    let reader = BufReader::new(File::open(path)?);
    let mut edges = Vec::new();
    let mut max_vertex = 0usize;
    let mut pattern = true;
    for (lineno, line) in reader.lines().enumerate() {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() < 2 {
            return Err(Error::Parse {
                path: path.display().to_string(),
                line: lineno + 1,
                msg: "expected 'src dst [weight]'".into(),
            });
        }
        let parse_idx = |t: &str| {
            t.parse::<usize>().map_err(|_| Error::Parse {
                path: path.display().to_string(),
                line: lineno + 1,
                msg: format!("bad vertex id '{t}'"),
            })
        };
        let s = parse_idx(toks[0])?;
        let d = parse_idx(toks[1])?;
        let w = match toks.get(2) {
            Some(t) => {
                pattern = false;
                t.parse::<f64>().map_err(|_| Error::Parse {
                    path: path.display().to_string(),
                    line: lineno + 1,
                    msg: format!("bad weight '{t}'"),
                })?
            }
            None => 1.0,
        };
        max_vertex = max_vertex.max(s).max(d);
        edges.push((s, d, w));
    }
    let n = if edges.is_empty() { 0 } else { max_vertex + 1 };
    Ok(EdgeList {
        num_rows: n,
        num_cols: n,
        edges,
        pattern,
    })
}

pub fn write_edge_list(path: impl AsRef<Path>, e: &EdgeList) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for &(s, d, v) in &e.edges {
        if e.pattern {
            writeln!(w, "{s} {d}")?;
        } else {
            writeln!(w, "{s} {d} {v}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn loads_weighted_lines() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(b"# comment\n0 1 2.5\n1 2 3\n").unwrap();
        let e = load_edge_list(f.path()).unwrap();
        assert_eq!(e.edges, vec![(0, 1, 2.5), (1, 2, 3.0)]);
        assert_eq!(e.num_rows, 3);
        assert!(!e.pattern);
    }

    #[test]
    fn round_trip() {
        let e = EdgeList {
            num_rows: 3,
            num_cols: 3,
            edges: vec![(0, 1, 1.0), (2, 0, 1.0)],
            pattern: true,
        };
        let f = tempfile::NamedTempFile::new().unwrap();
        write_edge_list(f.path(), &e).unwrap();
        let back = load_edge_list(f.path()).unwrap();
        assert_eq!(back.edges, e.edges);
    }

    #[test]
    fn bad_line_reports_position() {
        let mut f = tempfile::NamedTempFile::new().unwrap();
        f.write_all(b"0 1\nnope\n").unwrap();
        match load_edge_list(f.path()) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
