//! Exact stay map of a one-dimensional trajectory in O(n log n).
//!
//! The stay map — the set of left endpoints `p` such that the entity never
//! leaves `[p, p+s]` for more than time `g` continuously — is a single
//! closed interval (possibly empty, possibly the whole line). Its
//! endpoints lie at an event point or at distance `s` from one, so a
//! binary search over the candidate positions with the O(n) directional
//! membership test locates them with O(log n) probes.

mod events;
mod membership;

pub use events::{candidate_positions, event_points, EventKind, EventPoint};
pub use membership::{membership_1d, MembershipVerdict};

use crate::scalar::Scalar;
use crate::trajectory::{StayParams, Trajectory1};

/// The 1D stay map.
#[derive(Clone, Debug, PartialEq)]
pub enum Interval1D<S> {
    Empty,
    Bounded { left: S, right: S },
    WholeLine,
}

impl<S: Scalar> Interval1D<S> {
    pub fn contains(&self, p: &S) -> bool {
        match self {
            Interval1D::Empty => false,
            Interval1D::WholeLine => true,
            Interval1D::Bounded { left, right } => p >= left && p <= right,
        }
    }
}

/// Computes the exact stay map.
///
/// With total duration at most `g` every interval qualifies, so the result
/// is the whole line. Otherwise a first binary search over the candidates
/// finds some member (or proves emptiness), and two more locate the
/// extreme members, which are the exact endpoints.
pub fn staymap_1d<S: Scalar>(traj: &Trajectory1<S>, params: &StayParams<S>) -> Interval1D<S> {
    if traj.duration() <= params.gap {
        return Interval1D::WholeLine;
    }
    let events = event_points(traj, &params.gap);
    let candidates = candidate_positions(&events, &params.side);
    debug_assert!(!candidates.is_empty());

    let verdict = |i: usize| membership_1d(traj, &candidates[i], params);

    let mut lo = 0isize;
    let mut hi = candidates.len() as isize - 1;
    let mut anchor = None;
    while lo <= hi {
        let mid = ((lo + hi) / 2) as usize;
        match verdict(mid) {
            MembershipVerdict::Inside => {
                anchor = Some(mid);
                break;
            }
            MembershipVerdict::MapIsLeft => hi = mid as isize - 1,
            MembershipVerdict::MapIsRight => lo = mid as isize + 1,
            MembershipVerdict::MapIsEmpty => return Interval1D::Empty,
        }
    }
    let anchor = match anchor {
        Some(a) => a,
        None => return Interval1D::Empty,
    };

    // Leftmost member in [0, anchor]: probes left of the map answer
    // MapIsRight, members answer Inside.
    let (mut lo, mut hi) = (0usize, anchor);
    while lo < hi {
        let mid = (lo + hi) / 2;
        if verdict(mid) == MembershipVerdict::Inside {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let leftmost = lo;

    let (mut lo, mut hi) = (anchor, candidates.len() - 1);
    while lo < hi {
        let mid = (lo + hi + 1) / 2;
        if verdict(mid) == MembershipVerdict::Inside {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    let rightmost = lo;

    Interval1D::Bounded {
        left: candidates[leftmost].clone(),
        right: candidates[rightmost].clone(),
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

    fn params(s: Rat, g: Rat) -> StayParams<Rat> {
        StayParams::new(s, g).unwrap()
    }

    #[test]
    fn stationary_map() {
        let t = traj1(&[(0, 0), (10, 0)]);
        let map = staymap_1d(&t, &params(rint(1), rint(5)));
        assert_eq!(
            map,
            Interval1D::Bounded {
                left: rint(-1),
                right: rint(0)
            }
        );
    }

    #[test]
    fn tent_map_g_35() {
        let t = traj1(&[(0, 0), (4, 4), (8, 0)]);
        let map = staymap_1d(&t, &params(rint(1), rat(7, 2)));
        assert_eq!(
            map,
            Interval1D::Bounded {
                left: rat(5, 4),
                right: rat(7, 2)
            }
        );
    }

    #[test]
    fn tent_map_g_3() {
        let t = traj1(&[(0, 0), (4, 4), (8, 0)]);
        let map = staymap_1d(&t, &params(rint(1), rint(3)));
        assert_eq!(
            map,
            Interval1D::Bounded {
                left: rat(3, 2),
                right: rint(3)
            }
        );
    }

    #[test]
    fn escape_map_is_empty() {
        let t = traj1(&[(0, 0), (10, 10)]);
        let map = staymap_1d(&t, &params(rint(1), rint(1)));
        assert_eq!(map, Interval1D::Empty);
    }

    #[test]
    fn short_duration_whole_line() {
        let t = traj1(&[(0, 0), (4, 9)]);
        assert_eq!(
            staymap_1d(&t, &params(rint(1), rint(4))),
            Interval1D::WholeLine
        );
        assert_eq!(
            staymap_1d(&t, &params(rint(1), rint(5))),
            Interval1D::WholeLine
        );
    }

    #[test]
    fn single_vertex_whole_line() {
        let t = traj1(&[(2, 3)]);
        assert_eq!(
            staymap_1d(&t, &params(rint(1), rint(1))),
            Interval1D::WholeLine
        );
    }

    #[test]
    fn single_point_map() {
        // Tent with g = 2: the above-excursion forces p >= 2 while the
        // lead-in forces p <= 2, so the map is the single point {2}.
        let t = traj1(&[(0, 0), (4, 4), (8, 0)]);
        let map = staymap_1d(&t, &params(rint(1), rint(2)));
        assert_eq!(
            map,
            Interval1D::Bounded {
                left: rint(2),
                right: rint(2)
            }
        );
    }
}
