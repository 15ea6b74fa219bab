//! Brute-force ground truth: the exact maximum continuous absence of the
//! entity from a candidate region, plus grid scans built on it.
//!
//! Deliberately O(n) per probe. This module is the independent
//! implementation that the sweep and snapshot algorithms are validated
//! against, so it must stay free of any code shared with them beyond the
//! basic edge-clipping primitives.

use crate::geom::{interval_entry_exit, square_entry_exit, Point2};
use crate::scalar::Scalar;
use crate::trajectory::{StayParams, Trajectory1, Trajectory2};

/// Longest continuous absence and when it happened.
#[derive(Clone, Debug, PartialEq)]
pub struct GapReport<S> {
    pub max_gap: S,
    /// Start and end of the longest absence; a zero-length interval at the
    /// trajectory start when the entity never leaves the region.
    pub witness: (S, S),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    /// max gap <= g
    Exact,
    /// g < max gap <= (1+eps) g
    ApproxOnly,
    /// max gap > (1+eps) g
    Outside,
}

/// Merges per-edge presence intervals (already time-ordered) in place.
fn merge_presence<S: Scalar>(intervals: Vec<(S, S)>) -> Vec<(S, S)> {
    let mut merged: Vec<(S, S)> = Vec::with_capacity(intervals.len());
    for (a, b) in intervals {
        match merged.last_mut() {
            Some(last) if a <= last.1 => {
                if b > last.1 {
                    last.1 = b;
                }
            }
            _ => merged.push((a, b)),
        }
    }
    merged
}

/// Time intervals during which the 1D entity is inside `[left, left+side]`.
pub fn presence_intervals_1d<S: Scalar>(
    traj: &Trajectory1<S>,
    left: &S,
    side: &S,
) -> Vec<(S, S)> {
    if traj.len() == 1 {
        let v = &traj.vertices()[0];
        let inside = v.pos >= *left && v.pos <= left.clone() + side.clone();
        return if inside {
            vec![(v.t.clone(), v.t.clone())]
        } else {
            Vec::new()
        };
    }
    let hits = traj
        .edges()
        .filter_map(|(u, v)| interval_entry_exit(u, v, left, side))
        .collect();
    merge_presence(hits)
}

/// Time intervals during which the 2D entity is inside the closed square.
pub fn presence_intervals_2d<S: Scalar>(
    traj: &Trajectory2<S>,
    lower_left: &Point2<S>,
    side: &S,
) -> Vec<(S, S)> {
    if traj.len() == 1 {
        let v = &traj.vertices()[0];
        let hi = Point2::new(
            lower_left.x.clone() + side.clone(),
            lower_left.y.clone() + side.clone(),
        );
        let inside = v.pos.x >= lower_left.x
            && v.pos.x <= hi.x
            && v.pos.y >= lower_left.y
            && v.pos.y <= hi.y;
        return if inside {
            vec![(v.t.clone(), v.t.clone())]
        } else {
            Vec::new()
        };
    }
    let hits = traj
        .edges()
        .filter_map(|(u, v)| square_entry_exit(u, v, lower_left, side))
        .collect();
    merge_presence(hits)
}

/// Complement of the presence intervals within `[start, end]`, including
/// the lead-in before the first entry and the tail after the last exit.
pub fn absence_intervals<S: Scalar>(start: &S, end: &S, presence: &[(S, S)]) -> Vec<(S, S)> {
    let mut absences = Vec::new();
    if presence.is_empty() {
        absences.push((start.clone(), end.clone()));
        return absences;
    }
    if presence[0].0 > *start {
        absences.push((start.clone(), presence[0].0.clone()));
    }
    for w in presence.windows(2) {
        if w[1].0 > w[0].1 {
            absences.push((w[0].1.clone(), w[1].0.clone()));
        }
    }
    let last_end = &presence[presence.len() - 1].1;
    if *last_end < *end {
        absences.push((last_end.clone(), end.clone()));
    }
    absences
}

fn report_from_presence<S: Scalar>(start: &S, end: &S, presence: &[(S, S)]) -> GapReport<S> {
    let absences = absence_intervals(start, end, presence);
    let mut max_gap = S::zero();
    let mut witness = (start.clone(), start.clone());
    for (a, b) in absences {
        let len = b.clone() - a.clone();
        if len > max_gap {
            max_gap = len;
            witness = (a, b);
        }
    }
    GapReport { max_gap, witness }
}

/// Exact maximum continuous absence from the 1D interval `[left, left+side]`.
pub fn max_gap_1d<S: Scalar>(traj: &Trajectory1<S>, left: &S, side: &S) -> GapReport<S> {
    let presence = presence_intervals_1d(traj, left, side);
    report_from_presence(traj.start_time(), traj.end_time(), &presence)
}

/// Exact maximum continuous absence from the closed square at `lower_left`.
pub fn max_gap_2d<S: Scalar>(
    traj: &Trajectory2<S>,
    lower_left: &Point2<S>,
    side: &S,
) -> GapReport<S> {
    let presence = presence_intervals_2d(traj, lower_left, side);
    report_from_presence(traj.start_time(), traj.end_time(), &presence)
}

/// Classifies a max gap against `g` and `(1+eps) g`. Without an epsilon the
/// approximate band is empty and every gap beyond `g` is `Outside`.
pub fn classify_gap<S: Scalar>(max_gap: &S, params: &StayParams<S>) -> Classification {
    if *max_gap <= params.gap {
        return Classification::Exact;
    }
    if let Some(eps) = &params.epsilon {
        let loose = params.gap.clone() + eps.clone() * params.gap.clone();
        if *max_gap <= loose {
            return Classification::ApproxOnly;
        }
    }
    Classification::Outside
}

pub fn classify_1d<S: Scalar>(
    traj: &Trajectory1<S>,
    left: &S,
    params: &StayParams<S>,
) -> Classification {
    classify_gap(&max_gap_1d(traj, left, &params.side).max_gap, params)
}

pub fn classify_2d<S: Scalar>(
    traj: &Trajectory2<S>,
    lower_left: &Point2<S>,
    params: &StayParams<S>,
) -> Classification {
    classify_gap(&max_gap_2d(traj, lower_left, &params.side).max_gap, params)
}

/// Classification of every lattice point of a bounding box.
#[derive(Clone, Debug)]
pub struct GridScan<S> {
    pub x_min: S,
    pub y_min: S,
    pub step: S,
    pub nx: usize,
    pub ny: usize,
    /// Row-major, `cells[j * nx + i]` for lattice point `(i, j)`.
    pub cells: Vec<Classification>,
}

impl<S: Scalar> GridScan<S> {
    pub fn point(&self, i: usize, j: usize) -> Point2<S> {
        Point2::new(
            self.x_min.clone() + self.step.clone() * S::from_int(i as i64),
            self.y_min.clone() + self.step.clone() * S::from_int(j as i64),
        )
    }

    pub fn classification(&self, i: usize, j: usize) -> Classification {
        self.cells[j * self.nx + i]
    }

    pub fn iter_points(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let nx = self.nx;
        (0..self.ny).flat_map(move |j| (0..nx).map(move |i| (i, j)))
    }

    /// Number of 4-connected clusters of `Exact` lattice points.
    pub fn exact_cluster_count(&self) -> usize {
        let mut seen = vec![false; self.cells.len()];
        let mut clusters = 0;
        for start in 0..self.cells.len() {
            if seen[start] || self.cells[start] != Classification::Exact {
                continue;
            }
            clusters += 1;
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(idx) = stack.pop() {
                let (i, j) = (idx % self.nx, idx / self.nx);
                let mut push = |ni: usize, nj: usize| {
                    let nidx = nj * self.nx + ni;
                    if !seen[nidx] && self.cells[nidx] == Classification::Exact {
                        seen[nidx] = true;
                        stack.push(nidx);
                    }
                };
                if i > 0 {
                    push(i - 1, j);
                }
                if i + 1 < self.nx {
                    push(i + 1, j);
                }
                if j > 0 {
                    push(i, j - 1);
                }
                if j + 1 < self.ny {
                    push(i, j + 1);
                }
            }
        }
        clusters
    }
}

/// Evaluates the oracle at every lattice point of `bbox` with the given
/// spacing. The upper bounds are inclusive when they land on the lattice.
pub fn grid_scan<S: Scalar>(
    traj: &Trajectory2<S>,
    bbox: (&Point2<S>, &Point2<S>),
    step: &S,
    params: &StayParams<S>,
) -> GridScan<S> {
    assert!(*step > S::zero(), "grid step must be positive");
    let (lo, hi) = bbox;
    let count = |min: &S, max: &S| -> usize {
        let mut k = 0usize;
        let mut v = min.clone();
        while v <= *max {
            k += 1;
            v = v + step.clone();
        }
        k.max(1)
    };
    let nx = count(&lo.x, &hi.x);
    let ny = count(&lo.y, &hi.y);
    let mut cells = Vec::with_capacity(nx * ny);
    for j in 0..ny {
        let y = lo.y.clone() + step.clone() * S::from_int(j as i64);
        for i in 0..nx {
            let x = lo.x.clone() + step.clone() * S::from_int(i as i64);
            cells.push(classify_2d(traj, &Point2::new(x, y.clone()), params));
        }
    }
    GridScan {
        x_min: lo.x.clone(),
        y_min: lo.y.clone(),
        step: step.clone(),
        nx,
        ny,
        cells,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint, Rat};
    use crate::trajectory::{Trajectory, TrajectoryVertex};

    fn traj1(pts: &[(i64, i64)]) -> Trajectory1<Rat> {
        Trajectory::new(
            pts.iter()
                .map(|&(t, x)| TrajectoryVertex {
                    t: rint(t),
                    pos: rint(x),
                })
                .collect(),
        )
        .unwrap()
    }

    fn traj2(pts: &[(i64, i64, i64)]) -> Trajectory2<Rat> {
        Trajectory::new(
            pts.iter()
                .map(|&(t, x, y)| TrajectoryVertex {
                    t: rint(t),
                    pos: Point2::new(rint(x), rint(y)),
                })
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn stationary_inside_has_zero_gap() {
        let t = traj2(&[(0, 0, 0), (10, 0, 0)]);
        let rep = max_gap_2d(&t, &Point2::from_f64(-0.5, -0.5), &rint(1));
        assert_eq!(rep.max_gap, rint(0));
    }

    #[test]
    fn never_visited_gap_is_duration() {
        let t = traj2(&[(0, 0, 0), (10, 0, 0)]);
        let rep = max_gap_2d(&t, &Point2::new(rint(5), rint(5)), &rint(1));
        assert_eq!(rep.max_gap, rint(10));
        assert_eq!(rep.witness, (rint(0), rint(10)));
    }

    #[test]
    fn tent_interval_witness() {
        // 1D tent (0,0),(4,4),(8,0); interval [1.5, 2.5].
        let t = traj1(&[(0, 0), (4, 4), (8, 0)]);
        let rep = max_gap_1d(&t, &rat(3, 2), &rint(1));
        assert_eq!(rep.max_gap, rint(3));
        assert_eq!(rep.witness, (rat(5, 2), rat(11, 2)));
    }

    #[test]
    fn classification_boundaries_are_closed() {
        let params = StayParams::with_epsilon(rint(1), rint(2), rat(1, 2)).unwrap();
        assert_eq!(classify_gap(&rint(2), &params), Classification::Exact);
        assert_eq!(classify_gap(&rint(3), &params), Classification::ApproxOnly);
        assert_eq!(
            classify_gap(&rat(301, 100), &params),
            Classification::Outside
        );
    }

    #[test]
    fn grid_scan_stationary() {
        // Exact exactly on lattice points of [-1, 0]^2.
        let t = traj2(&[(0, 0, 0), (10, 0, 0)]);
        let params = StayParams::new(rint(1), rint(5)).unwrap();
        let scan = grid_scan(
            &t,
            (&Point2::new(rint(-2), rint(-2)), &Point2::new(rint(1), rint(1))),
            &rat(1, 2),
            &params,
        );
        assert_eq!((scan.nx, scan.ny), (7, 7));
        for (i, j) in scan.iter_points() {
            let p = scan.point(i, j);
            let expect_inside = p.x >= rint(-1) && p.x <= rint(0) && p.y >= rint(-1) && p.y <= rint(0);
            assert_eq!(
                scan.classification(i, j) == Classification::Exact,
                expect_inside,
                "at {:?}",
                p
            );
        }
        assert_eq!(scan.exact_cluster_count(), 1);
    }

    #[test]
    fn short_trajectories_are_exact_everywhere() {
        let t = traj2(&[(0, 0, 0), (2, 9, 9)]);
        let params = StayParams::new(rint(1), rint(5)).unwrap();
        let scan = grid_scan(
            &t,
            (&Point2::new(rint(-3), rint(-3)), &Point2::new(rint(3), rint(3))),
            &rint(1),
            &params,
        );
        assert!(scan
            .cells
            .iter()
            .all(|c| *c == Classification::Exact));
    }

    #[test]
    fn presence_and_absence_tile_duration() {
        let t = traj1(&[(0, 0), (4, 4), (8, 0), (12, 3)]);
        for (left, side) in [(rint(0), rint(1)), (rat(3, 2), rint(1)), (rint(-9), rint(1))] {
            let presence = presence_intervals_1d(&t, &left, &side);
            let absences = absence_intervals(t.start_time(), t.end_time(), &presence);
            let total: Rat = presence
                .iter()
                .chain(absences.iter())
                .map(|(a, b)| b.clone() - a.clone())
                .sum();
            assert_eq!(total, t.duration(), "left={:?}", left);
        }
    }
}
