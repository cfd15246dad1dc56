//! Plain-text point set files: one point per line as "x y", '#' comment
//! lines, and an optional trailing metadata block introduced by a line
//! consisting of "---".

use std::collections::BTreeMap;

use crate::geometry::{GridPoint, PointSet};
use crate::{Error, Int, Result};

/// A parsed point set file: the points plus any key=value metadata found
/// after the "---" separator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSetFile {
    pub set: PointSet,
    pub metadata: BTreeMap<String, String>,
}

/// Parses the "x y" file format. Malformed lines and duplicate points are
/// reported with their 1-based line number.
pub fn parse_pointset_file(text: &str) -> Result<PointSetFile> {
    let mut points: Vec<GridPoint> = Vec::new();
    let mut metadata = BTreeMap::new();
    let mut in_metadata = false;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if line == "---" {
            if in_metadata {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "second metadata separator".into(),
                });
            }
            in_metadata = true;
            continue;
        }
        if in_metadata {
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: lineno,
                msg: format!("metadata line {line:?} is not key=value"),
            })?;
            metadata.insert(k.trim().to_string(), v.trim().to_string());
            continue;
        }
        let mut fields = line.split_whitespace();
        let (x, y) = match (fields.next(), fields.next(), fields.next()) {
            (Some(x), Some(y), None) => (x, y),
            _ => {
                return Err(Error::Parse {
                    line: lineno,
                    msg: format!("expected \"x y\", got {line:?}"),
                })
            }
        };
        let parse_int = |s: &str| -> Result<Int> {
            s.parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("malformed integer {s:?}"),
            })
        };
        let p = GridPoint::new(parse_int(x)?, parse_int(y)?);
        if points.contains(&p) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("duplicate point {} {}", p.x, p.y),
            });
        }
        points.push(p);
    }
    let set = PointSet::new(points)?;
    Ok(PointSetFile { set, metadata })
}

/// Parses a file ignoring any metadata block.
pub fn parse_pointset(text: &str) -> Result<PointSet> {
    Ok(parse_pointset_file(text)?.set)
}

/// Serializes in the file format; points in canonical storage order. The
/// metadata block is emitted only when non-empty.
pub fn serialize_pointset_file(file: &PointSetFile) -> String {
    let mut out = String::new();
    for p in file.set.iter() {
        out.push_str(&format!("{} {}\n", p.x, p.y));
    }
    if !file.metadata.is_empty() {
        out.push_str("---\n");
        for (k, v) in &file.metadata {
            out.push_str(&format!("{k}={v}\n"));
        }
    }
    out
}

pub fn serialize_pointset(set: &PointSet) -> String {
    serialize_pointset_file(&PointSetFile { set: set.clone(), metadata: BTreeMap::new() })
}
