//! Matrix Market coordinate format, banner-driven and 1-based on disk.

use super::EdgeList;
use crate::error::{Error, Result};
use std::fs::File;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::Path;

fn parse_err(path: &Path, line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        path: path.display().to_string(),
        line,
        msg: msg.into(),
    }
}

/// Read a coordinate-format file. A symmetric banner expands (i, j) into
/// both orientations for i ≠ j; pattern entries get weight 1.
pub fn load_matrix_market(path: impl AsRef<Path>) -> Result<EdgeList> {
    let path = path.as_ref();
    let reader = BufReader::new(File::open(path)?);
    let mut lines = reader.lines().enumerate();

    let (_, banner) = lines
        .next()
        .ok_or_else(|| parse_err(path, 1, "empty file"))?;
    let banner = banner?;
    let fields: Vec<String> = banner.split_whitespace().map(str::to_lowercase).collect();
    if fields.len() < 4 || fields[0] != "%%matrixmarket" || fields[1] != "matrix" {
        return Err(parse_err(path, 1, "not a MatrixMarket matrix banner"));
    }
    if fields[2] != "coordinate" {
        return Err(Error::UnsupportedFormat(format!(
            "{} (only coordinate is supported)",
            fields[2]
        )));
    }
    let field_kind = fields[3].as_str();
    let pattern = match field_kind {
        "pattern" => true,
        "real" | "integer" => false,
        other => return Err(Error::UnsupportedFormat(other.to_string())),
    };
    let symmetric = match fields.get(4).map(String::as_str) {
        None | Some("general") => false,
        Some("symmetric") => true,
        Some(other) => return Err(Error::UnsupportedFormat(other.to_string())),
    };

    let mut dims: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let line = line?;
        let line = line.trim();
        if line.is_empty() || line.starts_with('%') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if dims.is_none() {
            if toks.len() != 3 {
                return Err(parse_err(path, lineno + 1, "expected 'rows cols nnz'"));
            }
            let parse = |t: &str| {
                t.parse::<usize>()
                    .map_err(|_| parse_err(path, lineno + 1, format!("bad size value '{t}'")))
            };
            dims = Some((parse(toks[0])?, parse(toks[1])?, parse(toks[2])?));
            edges.reserve(dims.unwrap().2);
            continue;
        }
        let (num_rows, num_cols, _) = dims.unwrap();
        let want = if pattern { 2 } else { 3 };
        if toks.len() < want {
            return Err(parse_err(path, lineno + 1, "too few fields on entry line"));
        }
        let idx = |t: &str| {
            t.parse::<usize>()
                .map_err(|_| parse_err(path, lineno + 1, format!("bad index '{t}'")))
        };
        let i = idx(toks[0])?;
        let j = idx(toks[1])?;
        if i == 0 || j == 0 {
            return Err(parse_err(path, lineno + 1, "indices are 1-based"));
        }
        if i > num_rows || j > num_cols {
            return Err(parse_err(path, lineno + 1, format!("index ({i}, {j}) out of range")));
        }
        let w = if pattern {
            1.0
        } else {
            toks[2]
                .parse::<f64>()
                .map_err(|_| parse_err(path, lineno + 1, format!("bad value '{}'", toks[2])))?
        };
        edges.push((i - 1, j - 1, w));
        if symmetric && i != j {
            edges.push((j - 1, i - 1, w));
        }
    }
    let (num_rows, num_cols, _) = dims.ok_or_else(|| parse_err(path, 0, "missing size line"))?;
    Ok(EdgeList {
        num_rows,
        num_cols,
        edges,
        pattern,
    })
}

/// Write in general coordinate format, 1-based, pattern or real per the
/// edge list's flag.
pub fn write_matrix_market(path: impl AsRef<Path>, e: &EdgeList) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    let field = if e.pattern { "pattern" } else { "real" };
    writeln!(w, "%%MatrixMarket matrix coordinate {field} general")?;
    writeln!(w, "{} {} {}", e.num_rows, e.num_cols, e.edges.len())?;
    for &(i, j, v) in &e.edges {
        if e.pattern {
            writeln!(w, "{} {}", i + 1, j + 1)?;
        } else {
            writeln!(w, "{} {} {}", i + 1, j + 1, v)?;
        }
    }
    Ok(())
}
