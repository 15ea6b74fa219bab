//! O(n) membership/direction test for a candidate left endpoint `p`:
//! walks the trajectory once, accumulating the maximal excursions outside
//! the closed interval `[p, p+s]`, including the lead-in before the first
//! entry and the tail after the last exit.

use crate::scalar::Scalar;
use crate::trajectory::{StayParams, Trajectory1};

/// Side of `p` on which the stay map lies when `p` itself is excluded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MembershipVerdict {
    Inside,
    /// The entire stay map is strictly left of `p`.
    MapIsLeft,
    /// The entire stay map is strictly right of `p`.
    MapIsRight,
    /// Excursions longer than `g` exist on both sides: the map is empty.
    MapIsEmpty,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Side {
    Below,
    Above,
}

/// Decides whether `p` is in the stay map, and if not, on which side of `p`
/// the map lies. One pass over the edges.
///
/// An excursion strictly below `p` lasting more than `g` rules out every
/// candidate at or right of `p`; one strictly above `p+s` rules out every
/// candidate at or left of `p`.
pub fn membership_1d<S: Scalar>(
    traj: &Trajectory1<S>,
    p: &S,
    params: &StayParams<S>,
) -> MembershipVerdict {
    let lo = p.clone();
    let hi = p.clone() + params.side.clone();
    let g = &params.gap;

    let mut left_violation = false;
    let mut right_violation = false;
    // Currently open excursion: (start time, side).
    let mut open: Option<(S, Side)> = None;

    let close = |open: &mut Option<(S, Side)>,
                     end: &S,
                     left_violation: &mut bool,
                     right_violation: &mut bool| {
        if let Some((start, side)) = open.take() {
            if end.clone() - start > *g {
                match side {
                    Side::Below => *left_violation = true,
                    Side::Above => *right_violation = true,
                }
            }
        }
    };

    if traj.len() == 1 {
        // D = 0: a single observation can never be absent longer than g > 0.
        return MembershipVerdict::Inside;
    }

    for (u, v) in traj.edges() {
        // Times within this edge at which the position is inside [lo, hi].
        let span = inside_span(&u.t, &v.t, &u.pos, &v.pos, &lo, &hi);
        match span {
            None => {
                let side = if u.pos < lo { Side::Below } else { Side::Above };
                match &open {
                    Some((_, s)) => debug_assert_eq!(*s, side, "excursion switched sides"),
                    None => open = Some((u.t.clone(), side)),
                }
            }
            Some((enter, exit)) => {
                if enter > u.t && open.is_none() {
                    let side = if u.pos < lo { Side::Below } else { Side::Above };
                    open = Some((u.t.clone(), side));
                }
                close(&mut open, &enter, &mut left_violation, &mut right_violation);
                if exit < v.t {
                    let side = if v.pos < lo { Side::Below } else { Side::Above };
                    open = Some((exit, side));
                }
            }
        }
        if left_violation && right_violation {
            return MembershipVerdict::MapIsEmpty;
        }
    }
    let end = traj.end_time().clone();
    close(&mut open, &end, &mut left_violation, &mut right_violation);

    match (left_violation, right_violation) {
        (false, false) => MembershipVerdict::Inside,
        (true, false) => MembershipVerdict::MapIsLeft,
        (false, true) => MembershipVerdict::MapIsRight,
        (true, true) => MembershipVerdict::MapIsEmpty,
    }
}

/// Closed time sub-interval of `[t0, t1]` during which the linear position
/// (x0 at t0, x1 at t1) lies within `[lo, hi]`; `None` when it never does.
fn inside_span<S: Scalar>(t0: &S, t1: &S, x0: &S, x1: &S, lo: &S, hi: &S) -> Option<(S, S)> {
    let dx = x1.clone() - x0.clone();
    if dx.is_zero() {
        if x0 < lo || x0 > hi {
            return None;
        }
        return Some((t0.clone(), t1.clone()));
    }
    let dt = t1.clone() - t0.clone();
    let t_at = |level: &S| t0.clone() + (level.clone() - x0.clone()) * dt.clone() / dx.clone();
    let (mut a, mut b) = (t_at(lo), t_at(hi));
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    let enter = if a > *t0 { a } else { t0.clone() };
    let exit = if b < *t1 { b } else { t1.clone() };
    if enter > exit {
        return None;
    }
    Some((enter, exit))
}
