//! (1+eps)-approximate stay map of a two-dimensional trajectory.
//!
//! The stay map is contained in every snapshot `P(t, t+g)` — the region of
//! lower-left corners whose square meets the sub-trajectory between `t`
//! and `t+g` — so intersecting snapshots taken every `lambda = eps*g` time
//! units yields a region that contains every exact stay-point corner and
//! admits nothing whose absence exceeds `(1+eps) g`.

mod region;
mod rings;

pub use region::{intersect_pair, overlay, union_of_convex, union_pair, Region};
pub use rings::{validate_region_set, PolygonWithHoles, RegionSet};

use crate::geom::{ConvexPolygon, Point2};
use crate::scalar::Scalar;
use crate::trajectory::{StayParams, Trajectory2, TrajectoryError, TrajectoryVertex};

/// Lower-left corners whose square touches the edge `u -> v`: the
/// Minkowski sum of the segment with `[-s, 0]^2`. At most six vertices;
/// four when the edge is axis-parallel or stationary.
pub fn edge_visit_region<S: Scalar>(
    u: &TrajectoryVertex<S, Point2<S>>,
    v: &TrajectoryVertex<S, Point2<S>>,
    side: &S,
) -> ConvexPolygon<S> {
    let mut corners = Vec::with_capacity(8);
    for p in [&u.pos, &v.pos] {
        for (dx, dy) in [
            (S::zero(), S::zero()),
            (side.clone().neg(), S::zero()),
            (S::zero(), side.clone().neg()),
            (side.clone().neg(), side.clone().neg()),
        ] {
            corners.push(Point2::new(p.x.clone() + dx, p.y.clone() + dy));
        }
    }
    ConvexPolygon::hull_of(corners)
}

/// One window of the trajectory and the region its squares can occupy.
#[derive(Clone, Debug)]
pub struct Snapshot<S: Scalar> {
    pub t_start: S,
    pub region: Region<S>,
}

/// `P(t, min(t+g, end))`: the union of edge visit regions over the window.
pub fn snapshot<S: Scalar>(
    traj: &Trajectory2<S>,
    t: &S,
    params: &StayParams<S>,
) -> Result<Snapshot<S>, TrajectoryError> {
    let mut end = t.clone() + params.gap.clone();
    if end > *traj.end_time() {
        end = traj.end_time().clone();
    }
    let sub = traj.subtrajectory(t, &end)?;
    let polys: Vec<ConvexPolygon<S>> = if sub.len() == 1 {
        let v = &sub.vertices()[0];
        vec![edge_visit_region(v, v, &params.side)]
    } else {
        sub.edges()
            .map(|(u, v)| edge_visit_region(u, v, &params.side))
            .collect()
    };
    Ok(Snapshot {
        t_start: t.clone(),
        region: union_of_convex(&polys),
    })
}

/// Snapshot start offsets from the trajectory start: multiples of
/// `lambda = eps*g` up to `D - g`, with the final window clamped to start
/// exactly at `D - g` so no window extends past the trajectory end.
pub fn snapshot_times<S: Scalar>(
    duration: &S,
    params: &StayParams<S>,
) -> Result<Vec<S>, TrajectoryError> {
    if *duration <= params.gap {
        return Err(TrajectoryError::InvalidParams(
            "duration must exceed the gap for a snapshot schedule",
        ));
    }
    let epsilon = params.epsilon.as_ref().ok_or(TrajectoryError::InvalidParams(
        "epsilon required for snapshot schedule",
    ))?;
    let lambda = epsilon.clone() * params.gap.clone();
    let limit = duration.clone() - params.gap.clone();
    let mut times = Vec::new();
    let mut i = 0i64;
    loop {
        let t = lambda.clone() * S::from_int(i);
        if t >= limit {
            break;
        }
        times.push(t);
        i += 1;
    }
    times.push(limit);
    Ok(times)
}

/// Intersection of several regions, reduced pairwise in a balanced tree.
pub fn intersect_regions<S: Scalar>(regions: &[Region<S>]) -> Region<S> {
    match regions.len() {
        0 => Region::empty(),
        1 => regions[0].clone(),
        _ => {
            let mid = regions.len() / 2;
            intersect_pair(
                &intersect_regions(&regions[..mid]),
                &intersect_regions(&regions[mid..]),
            )
        }
    }
}

/// The approximate stay map. `WholePlane` when the duration never exceeds
/// the gap (every square trivially qualifies).
#[derive(Clone, Debug)]
pub enum StayMap2d<S: Scalar> {
    WholePlane,
    Region(Region<S>),
}

impl<S: Scalar> StayMap2d<S> {
    pub fn as_region(&self) -> Option<&Region<S>> {
        match self {
            StayMap2d::WholePlane => None,
            StayMap2d::Region(r) => Some(r),
        }
    }
}

/// Algorithm: intersect the snapshots at every schedule offset.
///
/// Soundness: every exact stay-point corner lies in all snapshots, hence
/// in the output. Approximation: a corner kept by the output is absent for
/// at most `g + eps*g` continuously, because a longer absence would
/// contain a whole scheduled window.
pub fn approx_staymap<S: Scalar>(traj: &Trajectory2<S>, params: &StayParams<S>) -> StayMap2d<S> {
    let duration = traj.duration();
    if duration <= params.gap {
        return StayMap2d::WholePlane;
    }
    let offsets = snapshot_times(&duration, params).expect("duration exceeds gap");
    let regions: Vec<Region<S>> = offsets
        .iter()
        .map(|dt| {
            let t = traj.start_time().clone() + dt.clone();
            snapshot(traj, &t, params)
                .expect("schedule stays within the trajectory span")
                .region
        })
        .collect();
    StayMap2d::Region(intersect_regions(&regions))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;
    use crate::scalar::{rat, rint, Rat};
    use crate::trajectory::Trajectory;

    fn pt(x: i64, y: i64) -> Point2<Rat> {
        Point2::new(rint(x), rint(y))
    }

    fn traj2(pts: &[(i64, i64, i64)]) -> Trajectory2<Rat> {
        Trajectory::new(
            pts.iter()
                .map(|&(t, x, y)| TrajectoryVertex {
                    t: rint(t),
                    pos: pt(x, y),
                })
                .collect(),
        )
        .unwrap()
    }

    fn vx(t: i64, x: i64, y: i64) -> TrajectoryVertex<Rat, Point2<Rat>> {
        TrajectoryVertex {
            t: rint(t),
            pos: pt(x, y),
        }
    }

    #[test]
    fn visit_region_horizontal_edge() {
        let poly = edge_visit_region(&vx(0, 0, 0), &vx(1, 2, 0), &rint(1));
        assert_eq!(
            poly.vertices(),
            &[pt(-1, -1), pt(2, -1), pt(2, 0), pt(-1, 0)]
        );
    }

    #[test]
    fn visit_region_point() {
        let poly = edge_visit_region(&vx(0, 0, 0), &vx(1, 0, 0), &rint(1));
        assert_eq!(
            poly.vertices(),
            &[pt(-1, -1), pt(0, -1), pt(0, 0), pt(-1, 0)]
        );
    }

    #[test]
    fn visit_region_diagonal_hexagon() {
        let poly = edge_visit_region(&vx(0, 0, 0), &vx(1, 1, 1), &rint(1));
        assert_eq!(
            poly.vertices(),
            &[pt(-1, -1), pt(0, -1), pt(1, 0), pt(1, 1), pt(0, 1), pt(-1, 0)]
        );
    }

    #[test]
    fn snapshot_of_stationary_entity() {
        let t = traj2(&[(0, 0, 0), (10, 0, 0)]);
        let params = StayParams::with_epsilon(rint(1), rint(2), rat(1, 2)).unwrap();
        let snap = snapshot(&t, &rint(3), &params).unwrap();
        assert_eq!(snap.region.area(), rint(1));
        assert!(snap.region.contains_point(&Point2::new(rat(-1, 2), rat(-1, 2))));
        assert!(snap.region.contains_point(&pt(0, 0)));
        assert!(!snap.region.contains_point(&Point2::new(rat(1, 4), rint(0))));
    }

    #[test]
    fn snapshot_single_edge_rectangle() {
        let t = traj2(&[(0, 0, 0), (2, 2, 0)]);
        let params = StayParams::with_epsilon(rint(1), rint(2), rint(1)).unwrap();
        let snap = snapshot(&t, &rint(0), &params).unwrap();
        assert_eq!(snap.region.area(), rint(3));
        let set = snap.region.to_polygons();
        assert_eq!(set.polygons[0].outer, vec![pt(-1, -1), pt(2, -1), pt(2, 0), pt(-1, 0)]);
    }

    #[test]
    fn snapshot_l_shape_union_with_sampling() {
        // L-shaped window: two edges; cross-check membership against the
        // per-edge square intersection tests.
        let t = traj2(&[(0, 0, 0), (1, 2, 0), (2, 2, 2)]);
        let params = StayParams::with_epsilon(rint(1), rint(2), rint(1)).unwrap();
        let snap = snapshot(&t, &rint(0), &params).unwrap();
        let (lo, hi) = snap.region.bounding_box().unwrap();
        assert_eq!((lo, hi), (pt(-1, -1), pt(2, 2)));

        let polys = [
            edge_visit_region(&vx(0, 0, 0), &vx(1, 2, 0), &rint(1)),
            edge_visit_region(&vx(1, 2, 0), &vx(2, 2, 2), &rint(1)),
        ];
        for ix in -12..=16 {
            for iy in -12..=12 {
                let p = Point2::new(rat(ix, 4), rat(iy, 4));
                let expected = polys.iter().any(|poly| poly.contains(&p));
                assert_eq!(snap.region.contains_point(&p), expected, "at {:?}", p);
            }
        }
    }

    #[test]
    fn schedule_d10_g2_eps_half() {
        let params = StayParams::with_epsilon(rint(1), rint(2), rat(1, 2)).unwrap();
        let times = snapshot_times(&rint(10), &params).unwrap();
        let expect: Vec<Rat> = (0..=8).map(rint).collect();
        assert_eq!(times, expect);
    }

    #[test]
    fn schedule_clamps_final_window() {
        let params = StayParams::with_epsilon(rint(1), rint(2), rint(4)).unwrap();
        assert_eq!(snapshot_times(&rint(10), &params).unwrap(), vec![rint(0), rint(8)]);
        // D = g + lambda exactly.
        let params = StayParams::with_epsilon(rint(1), rint(2), rint(1)).unwrap();
        assert_eq!(snapshot_times(&rint(4), &params).unwrap(), vec![rint(0), rint(2)]);
    }

    #[test]
    fn schedule_rejects_short_duration() {
        let params = StayParams::with_epsilon(rint(1), rint(2), rint(1)).unwrap();
        assert!(snapshot_times(&rint(2), &params).is_err());
    }

    #[test]
    fn intersect_identity_and_disjoint() {
        let a = Region::from_convex(&edge_visit_region(&vx(0, 0, 0), &vx(1, 0, 0), &rint(1)));
        let only = intersect_regions(std::slice::from_ref(&a));
        assert_eq!(only.area(), a.area());
        let b = Region::from_convex(&edge_visit_region(&vx(0, 9, 9), &vx(1, 9, 9), &rint(1)));
        assert!(intersect_regions(&[a, b]).is_empty());
    }

    #[test]
    fn stationary_staymap_is_single_square() {
        let t = traj2(&[(0, 0, 0), (10, 0, 0)]);
        let params = StayParams::with_epsilon(rint(1), rint(2), rat(1, 2)).unwrap();
        let map = approx_staymap(&t, &params);
        let region = map.as_region().unwrap();
        assert_eq!(region.area(), rint(1));
        let set = region.to_polygons();
        assert_eq!(set.polygon_count(), 1);
        assert_eq!(set.polygons[0].outer, vec![pt(-1, -1), pt(0, -1), pt(0, 0), pt(-1, 0)]);
    }

    #[test]
    fn short_duration_whole_plane() {
        let t = traj2(&[(0, 0, 0), (2, 5, 5)]);
        let params = StayParams::with_epsilon(rint(1), rint(2), rint(1)).unwrap();
        assert!(matches!(approx_staymap(&t, &params), StayMap2d::WholePlane));
    }

    #[test]
    fn loop_slower_than_gap_keeps_center() {
        // Perimeter of a 2x2 square, one lap per 4 time units, g = 6 > lap
        // time; a square of side 2 at (0,0) covers the whole loop.
        let t = traj2(&[
            (0, 0, 0),
            (1, 2, 0),
            (2, 2, 2),
            (3, 0, 2),
            (4, 0, 0),
            (5, 2, 0),
            (6, 2, 2),
            (7, 0, 2),
            (8, 0, 0),
            (9, 2, 0),
            (10, 2, 2),
            (11, 0, 2),
            (12, 0, 0),
        ]);
        let params = StayParams::with_epsilon(rint(2), rint(6), rat(1, 2)).unwrap();
        let corner = pt(0, 0);
        assert_eq!(oracle::max_gap_2d(&t, &corner, &rint(2)).max_gap, rint(0));
        let map = approx_staymap(&t, &params);
        let region = map.as_region().unwrap();
        assert!(region.contains_point(&corner));
        assert!(!region.is_empty());
    }

    #[test]
    fn long_departure_is_excluded() {
        // The entity sits at the origin, leaves for longer than (1+eps) g,
        // then returns: the origin square's corner must be excluded.
        let t = traj2(&[
            (0, 0, 0),
            (4, 0, 0),
            (5, 10, 0),
            (14, 10, 0),
            (15, 0, 0),
            (19, 0, 0),
        ]);
        let params = StayParams::with_epsilon(rint(1), rint(4), rat(1, 2)).unwrap();
        // Absence from the origin square lasts ~10 > (1+0.5)*4 = 6.
        let map = approx_staymap(&t, &params);
        let region = map.as_region().unwrap();
        assert!(!region.contains_point(&Point2::new(rat(-1, 2), rat(-1, 2))));
    }

    #[test]
    fn snapshot_contains_every_exact_corner() {
        // Snapshot-superset property on a small irregular trajectory.
        let t = traj2(&[(0, 0, 0), (3, 4, 1), (5, 2, 3), (9, 0, 1), (11, 1, 0)]);
        let params = StayParams::with_epsilon(rint(2), rint(5), rat(1, 2)).unwrap();
        let offsets = snapshot_times(&t.duration(), &params).unwrap();
        let snaps: Vec<Snapshot<Rat>> = offsets
            .iter()
            .map(|dt| snapshot(&t, &(t.start_time().clone() + dt.clone()), &params).unwrap())
            .collect();
        for ix in -8..=10 {
            for iy in -8..=8 {
                let p = Point2::new(rat(ix, 2), rat(iy, 2));
                if oracle::max_gap_2d(&t, &p, &params.side).max_gap <= params.gap {
                    for snap in &snaps {
                        assert!(
                            snap.region.contains_point(&p),
                            "corner {:?} missing from snapshot at {:?}",
                            p,
                            snap.t_start
                        );
                    }
                }
            }
        }
    }
}
