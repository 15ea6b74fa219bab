//! Trajectory CSV ingestion and result serialization.
//!
//! Trajectories travel as CSV with a `t,x` (1D) or `t,x,y` (2D) header and
//! one vertex per row. Results are emitted as single-object JSON documents
//! tagged by `kind`; coordinates are serialized in the shortest decimal
//! form that round-trips within 1e-9.

use crate::geom::Point2;
use crate::scalar::{format_scalar, Scalar};
use crate::staymap1d::Interval1D;
use crate::staymap2d::{RegionSet, StayMap2d};
use crate::trajectory::{Trajectory, Trajectory1, Trajectory2, TrajectoryVertex};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Positional parse failure; lines are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq)]
pub enum ParsedTrajectory<S> {
    One(Trajectory1<S>),
    Two(Trajectory2<S>),
}

impl<S: Scalar> ParsedTrajectory<S> {
    pub fn dimension(&self) -> usize {
        match self {
            ParsedTrajectory::One(_) => 1,
            ParsedTrajectory::Two(_) => 2,
        }
    }
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

pub fn parse_trajectory_csv<S: Scalar>(text: &str) -> Result<ParsedTrajectory<S>, ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty input"))?;
    let header = header.trim();
    let dim = match header {
        "t,x" => 1,
        "t,x,y" => 2,
        other => {
            return Err(err(
                1,
                format!("expected header 't,x' or 't,x,y', found {:?}", other),
            ))
        }
    };
    let mut rows: Vec<(S, Vec<S>)> = Vec::new();
    for (idx, raw) in lines {
        let line_no = idx + 1;
        let raw = raw.trim();
        if raw.is_empty() {
            continue;
        }
        let fields: Vec<&str> = raw.split(',').collect();
        if fields.len() != dim + 1 {
            return Err(err(
                line_no,
                format!("expected {} fields, found {}", dim + 1, fields.len()),
            ));
        }
        let mut values = Vec::with_capacity(dim + 1);
        for (col, field) in fields.iter().enumerate() {
            let v = S::from_decimal(field.trim()).ok_or_else(|| {
                err(
                    line_no,
                    format!("column {}: invalid number {:?}", col + 1, field.trim()),
                )
            })?;
            values.push(v);
        }
        let t = values.remove(0);
        if let Some((prev, _)) = rows.last() {
            if t <= *prev {
                return Err(err(line_no, "timestamps must be strictly increasing"));
            }
        }
        rows.push((t, values));
    }
    if rows.is_empty() {
        return Err(err(1, "no data rows"));
    }
    if dim == 1 {
        let vertices = rows
            .into_iter()
            .map(|(t, mut v)| TrajectoryVertex {
                t,
                pos: v.remove(0),
            })
            .collect();
        Ok(ParsedTrajectory::One(
            Trajectory::new(vertices).expect("rows validated"),
        ))
    } else {
        let vertices = rows
            .into_iter()
            .map(|(t, mut v)| {
                let x = v.remove(0);
                let y = v.remove(0);
                TrajectoryVertex {
                    t,
                    pos: Point2::new(x, y),
                }
            })
            .collect();
        Ok(ParsedTrajectory::Two(
            Trajectory::new(vertices).expect("rows validated"),
        ))
    }
}

pub fn trajectory1_to_csv<S: Scalar>(traj: &Trajectory1<S>) -> String {
    let mut out = String::from("t,x\n");
    for v in traj.vertices() {
        out.push_str(&format!(
            "{},{}\n",
            format_scalar(&v.t),
            format_scalar(&v.pos)
        ));
    }
    out
}

pub fn trajectory2_to_csv<S: Scalar>(traj: &Trajectory2<S>) -> String {
    let mut out = String::from("t,x,y\n");
    for v in traj.vertices() {
        out.push_str(&format!(
            "{},{},{}\n",
            format_scalar(&v.t),
            format_scalar(&v.pos.x),
            format_scalar(&v.pos.y)
        ));
    }
    out
}

/// The serialized stay-map document.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RegionFile {
    Empty,
    Bounded {
        left: f64,
        right: f64,
    },
    WholeLine,
    /// Polygons as ring lists: outer ring first, then holes; rings are
    /// `[x, y]` pairs.
    Polygons {
        polygons: Vec<Vec<Vec<[f64; 2]>>>,
    },
    WholePlane,
}

impl RegionFile {
    pub fn from_interval<S: Scalar>(interval: &Interval1D<S>) -> Self {
        match interval {
            Interval1D::Empty => RegionFile::Empty,
            Interval1D::WholeLine => RegionFile::WholeLine,
            Interval1D::Bounded { left, right } => RegionFile::Bounded {
                left: left.to_f64_lossy(),
                right: right.to_f64_lossy(),
            },
        }
    }

    pub fn from_region_set<S: Scalar>(set: &RegionSet<S>) -> Self {
        let polygons = set
            .polygons
            .iter()
            .map(|poly| {
                std::iter::once(&poly.outer)
                    .chain(poly.holes.iter())
                    .map(|ring| {
                        ring.iter()
                            .map(|p| [p.x.to_f64_lossy(), p.y.to_f64_lossy()])
                            .collect()
                    })
                    .collect()
            })
            .collect();
        RegionFile::Polygons { polygons }
    }

    pub fn from_staymap2d<S: Scalar>(map: &StayMap2d<S>) -> Self {
        match map {
            StayMap2d::WholePlane => RegionFile::WholePlane,
            StayMap2d::Region(region) => Self::from_region_set(&region.to_polygons()),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("region file serializes")
    }
}
