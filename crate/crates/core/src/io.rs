//! Point-set files: `{"points": [["x", "y"], ...]}` with each coordinate a
//! rational literal `-?[0-9]+(/[1-9][0-9]*)?`.

use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arrangement::PointSet;
use crate::geometry::Point;
use crate::rational::{format_rational, parse_rational};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("malformed point file: {0}")]
    Json(#[from] serde_json::Error),

    #[error("points[{index}].{axis}: {source}")]
    Coordinate {
        index: usize,
        axis: &'static str,
        source: crate::Error,
    },

    #[error(transparent)]
    PointSet(#[from] crate::Error),
}

#[derive(Serialize, Deserialize)]
struct PointFile {
    points: Vec<(String, String)>,
}

pub fn parse_point_set(json: &str) -> Result<PointSet, FormatError> {
    let file: PointFile = serde_json::from_str(json)?;
    let points = file
        .points
        .iter()
        .enumerate()
        .map(|(index, (x, y))| {
            let coord = |s: &str, axis| {
                parse_rational(s).map_err(|source| FormatError::Coordinate {
                    index,
                    axis,
                    source,
                })
            };
            Ok(Point::new(coord(x, "x")?, coord(y, "y")?))
        })
        .collect::<Result<Vec<_>, FormatError>>()?;
    Ok(PointSet::new(points)?)
}

pub fn read_point_set(path: impl AsRef<Path>) -> Result<PointSet, FormatError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_point_set(&text)
}

/// Serializes with fully reduced rationals.
pub fn to_json(ps: &PointSet) -> String {
    let file = PointFile {
        points: ps
            .points()
            .iter()
            .map(|p| (format_rational(&p.x), format_rational(&p.y)))
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("string pairs always serialize")
}

pub fn write_point_set(path: impl AsRef<Path>, ps: &PointSet) -> Result<(), FormatError> {
    let path = path.as_ref();
    let mut text = to_json(ps);
    text.push('\n');
    fs::write(path, text).map_err(|source| FormatError::Io {
        path: path.display().to_string(),
        source,
    })
}
