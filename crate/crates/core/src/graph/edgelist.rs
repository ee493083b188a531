//! Plain-text edge lists.
//!
//! One edge per line as two whitespace-separated vertex ids. Lines starting
//! with `#` are comments, except `# n=<count>` which fixes the vertex count.
//! Without it the count is `max id + 1`.

use std::fs;
use std::io::Write;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared_n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(count) = comment.trim().strip_prefix("n=") {
                let n = count.trim().parse::<usize>().map_err(|e| Error::Parse {
                    line: line_no,
                    message: format!("bad vertex count {count:?}: {e}"),
                })?;
                declared_n = Some(n);
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let mut id = || -> Result<usize> {
            let tok = fields.next().ok_or_else(|| Error::Parse {
                line: line_no,
                message: "expected two vertex ids".into(),
            })?;
            tok.parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                message: format!("bad vertex id {tok:?}: {e}"),
            })
        };
        let a = id()?;
        let b = id()?;
        if let Some(extra) = fields.next() {
            return Err(Error::Parse {
                line: line_no,
                message: format!("unexpected trailing field {extra:?}"),
            });
        }
        edges.push((a, b));
    }

    let n = match declared_n {
        Some(n) => n,
        None => edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0),
    };
    Graph::new(n, edges)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&fs::read_to_string(path)?)
}

/// Writes one `a b` line per edge in ascending order. The `# n=` header is
/// only emitted when the vertex count cannot be inferred from the edges.
pub fn write_edge_list<W: Write>(g: &Graph, mut out: W) -> Result<()> {
    let inferred = g.edges().iter().map(|&(_, b)| b + 1).max().unwrap_or(0);
    if inferred != g.order() {
        writeln!(out, "# n={}", g.order())?;
    }
    for &(a, b) in g.edges() {
        writeln!(out, "{a} {b}")?;
    }
    out.flush()?;
    Ok(())
}
