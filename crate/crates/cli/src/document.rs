//! Polygon input documents.
//!
//! Two formats are accepted. JSON, `{"name": "hexagon", "vertices": [[1, 0], [0, 1], ...]}`,
//! where coordinates are integers of any size; and plain text with one
//! `x y` pair per line, where blank lines and lines starting with `#` are
//! skipped. Vertices may be given in any order and non-extreme points are
//! discarded by the hull.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::Number;
use toric_fano::lattice::{hull, LatticeError, LatticePoint, LatticePolygon};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonDocument {
    pub name: Option<String>,
    pub vertices: Vec<LatticePoint>,
}

#[derive(Deserialize)]
struct RawDocument {
    name: Option<String>,
    vertices: Vec<(Number, Number)>,
}

fn integer(n: &Number) -> Result<BigInt, CliError> {
    BigInt::from_str(&n.to_string()).map_err(|_| CliError::Parse(format!("coordinate {n} is not an integer")))
}

impl PolygonDocument {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        if text.trim_start().starts_with('{') {
            Self::parse_json(text)
        } else {
            Self::parse_plain(text)
        }
    }

    fn parse_json(text: &str) -> Result<Self, CliError> {
        let raw: RawDocument = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
        let vertices = raw
            .vertices
            .iter()
            .map(|(x, y)| Ok(LatticePoint { x: integer(x)?, y: integer(y)? }))
            .collect::<Result<_, CliError>>()?;
        Ok(PolygonDocument { name: raw.name, vertices })
    }

    fn parse_plain(text: &str) -> Result<Self, CliError> {
        let mut vertices = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            let [x, y] = fields[..] else {
                return Err(CliError::Parse(format!("line {}: expected two integers, found {line:?}", no + 1)));
            };
            let coord = |s: &str| {
                BigInt::from_str(s).map_err(|_| CliError::Parse(format!("line {}: {s:?} is not an integer", no + 1)))
            };
            vertices.push(LatticePoint { x: coord(x)?, y: coord(y)? });
        }
        Ok(PolygonDocument { name: None, vertices })
    }

    /// Convex hull of the listed points; fewer than two dimensions is
    /// [`CliError::Degenerate`].
    pub fn polygon(&self) -> Result<LatticePolygon, CliError> {
        if self.vertices.is_empty() {
            return Err(CliError::Degenerate("the document lists no vertices".to_string()));
        }
        hull(&self.vertices).map_err(|e| match e {
            LatticeError::DegenerateInput => {
                CliError::Degenerate(format!("{} point(s) do not span a polygon", self.vertices.len()))
            }
            other => CliError::Degenerate(other.to_string()),
        })
    }

    /// `{"name": ..., "vertices": ...}` with the name omitted when absent.
    pub fn to_json(&self) -> String {
        let mut map = serde_json::Map::new();
        if let Some(name) = &self.name {
            map.insert("name".to_string(), name.clone().into());
        }
        map.insert("vertices".to_string(), crate::report::points_json(&self.vertices));
        let mut out = serde_json::to_string_pretty(&serde_json::Value::Object(map)).expect("serializable");
        out.push('\n');
        out
    }
}
