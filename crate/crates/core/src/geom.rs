//! Planar primitives: points, orientation, convex polygons, and the
//! entry/exit clipping of a constant-speed edge against a closed square
//! or interval.

use crate::scalar::Scalar;
use crate::trajectory::TrajectoryVertex;
use std::cmp::Ordering;

#[derive(Clone, Debug, PartialEq)]
pub struct Point2<S> {
    pub x: S,
    pub y: S,
}

impl<S: Scalar> Point2<S> {
    pub fn new(x: S, y: S) -> Self {
        Point2 { x, y }
    }

    pub fn from_f64(x: f64, y: f64) -> Self {
        Point2::new(
            S::from_f64(x).expect("finite coordinate"),
            S::from_f64(y).expect("finite coordinate"),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        Point2::new(
            self.x.clone() - other.x.clone(),
            self.y.clone() - other.y.clone(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        Point2::new(
            self.x.clone() + other.x.clone(),
            self.y.clone() + other.y.clone(),
        )
    }

    pub fn cmp_xy(&self, other: &Self) -> Ordering {
        self.x
            .cmp_total(&other.x)
            .then_with(|| self.y.cmp_total(&other.y))
    }
}

/// Cross product (b − a) × (c − a). Positive for a counterclockwise turn.
pub fn cross<S: Scalar>(a: &Point2<S>, b: &Point2<S>, c: &Point2<S>) -> S {
    let abx = b.x.clone() - a.x.clone();
    let aby = b.y.clone() - a.y.clone();
    let acx = c.x.clone() - a.x.clone();
    let acy = c.y.clone() - a.y.clone();
    abx * acy - aby * acx
}

pub fn orient<S: Scalar>(a: &Point2<S>, b: &Point2<S>, c: &Point2<S>) -> Ordering {
    cross(a, b, c).cmp_total(&S::zero())
}

/// A convex polygon with counterclockwise vertices, no three collinear.
/// Degenerate inputs (all points collinear or equal) are representable as
/// polygons with fewer than 3 vertices; callers that require positive area
/// must check `vertex_count`.
#[derive(Clone, Debug, PartialEq)]
pub struct ConvexPolygon<S> {
    vertices: Vec<Point2<S>>,
}

impl<S: Scalar> ConvexPolygon<S> {
    /// Convex hull (monotone chain) of arbitrary points; starts at the
    /// lexicographically smallest vertex.
    pub fn hull_of(mut points: Vec<Point2<S>>) -> Self {
        points.sort_by(|a, b| a.cmp_xy(b));
        points.dedup();
        if points.len() <= 2 {
            return ConvexPolygon { vertices: points };
        }
        let mut lower: Vec<Point2<S>> = Vec::new();
        for p in &points {
            while lower.len() >= 2
                && orient(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Ordering::Greater
            {
                lower.pop();
            }
            lower.push(p.clone());
        }
        let mut upper: Vec<Point2<S>> = Vec::new();
        for p in points.iter().rev() {
            while upper.len() >= 2
                && orient(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Ordering::Greater
            {
                upper.pop();
            }
            upper.push(p.clone());
        }
        lower.pop();
        upper.pop();
        lower.extend(upper);
        ConvexPolygon { vertices: lower }
    }

    pub fn vertices(&self) -> &[Point2<S>] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Twice the signed area; positive for counterclockwise rings.
    pub fn area2(&self) -> S {
        ring_area2(&self.vertices)
    }

    pub fn contains(&self, p: &Point2<S>) -> bool {
        if self.vertices.len() < 3 {
            // Segment or point: containment on the carrier.
            return match self.vertices.len() {
                0 => false,
                1 => self.vertices[0] == *p,
                _ => {
                    let (a, b) = (&self.vertices[0], &self.vertices[1]);
                    orient(a, b, p) == Ordering::Equal
                        && p.x >= a.x.clone().min_of(b.x.clone())
                        && p.x <= a.x.clone().max_of(b.x.clone())
                        && p.y >= a.y.clone().min_of(b.y.clone())
                        && p.y <= a.y.clone().max_of(b.y.clone())
                }
            };
        }
        let n = self.vertices.len();
        for i in 0..n {
            if orient(&self.vertices[i], &self.vertices[(i + 1) % n], p) == Ordering::Less {
                return false;
            }
        }
        true
    }
}

/// Twice the signed area of an arbitrary closed ring.
pub fn ring_area2<S: Scalar>(ring: &[Point2<S>]) -> S {
    let n = ring.len();
    let mut acc = S::zero();
    if n < 3 {
        return acc;
    }
    for i in 0..n {
        let a = &ring[i];
        let b = &ring[(i + 1) % n];
        acc = acc + (a.x.clone() * b.y.clone() - b.x.clone() * a.y.clone());
    }
    acc
}

/// Maximal closed time interval during which the moving point of edge
/// `u -> v` lies inside the closed square with the given lower-left corner
/// and side. At most one interval per edge since the square is convex.
pub fn square_entry_exit<S: Scalar>(
    u: &TrajectoryVertex<S, Point2<S>>,
    v: &TrajectoryVertex<S, Point2<S>>,
    lower_left: &Point2<S>,
    side: &S,
) -> Option<(S, S)> {
    let mut lo = u.t.clone();
    let mut hi = v.t.clone();
    clip_axis(
        &u.t, &v.t, &u.pos.x, &v.pos.x, &lower_left.x, side, &mut lo, &mut hi,
    )?;
    clip_axis(
        &u.t, &v.t, &u.pos.y, &v.pos.y, &lower_left.y, side, &mut lo, &mut hi,
    )?;
    Some((lo, hi))
}

/// 1D counterpart: the moving point of edge `u -> v` inside `[left, left+side]`.
pub fn interval_entry_exit<S: Scalar>(
    u: &TrajectoryVertex<S, S>,
    v: &TrajectoryVertex<S, S>,
    left: &S,
    side: &S,
) -> Option<(S, S)> {
    let mut lo = u.t.clone();
    let mut hi = v.t.clone();
    clip_axis(&u.t, &v.t, &u.pos, &v.pos, left, side, &mut lo, &mut hi)?;
    Some((lo, hi))
}

/// Narrows `[lo, hi]` to the times when the linear coordinate
/// `c(t)` (interpolating c0 at t0, c1 at t1) satisfies `min <= c <= min+side`.
/// Returns None when the intersection is empty.
#[allow(clippy::too_many_arguments)]
fn clip_axis<S: Scalar>(
    t0: &S,
    t1: &S,
    c0: &S,
    c1: &S,
    min: &S,
    side: &S,
    lo: &mut S,
    hi: &mut S,
) -> Option<()> {
    let max = min.clone() + side.clone();
    let dc = c1.clone() - c0.clone();
    if dc.is_zero() {
        if c0 < min || *c0 > max {
            return None;
        }
        return Some(()); // inside this axis for the whole edge
    }
    let dt = t1.clone() - t0.clone();
    // Times when c(t) == min and c(t) == max.
    let t_at = |level: &S| -> S {
        t0.clone() + (level.clone() - c0.clone()) * dt.clone() / dc.clone()
    };
    let (mut a, mut b) = (t_at(min), t_at(&max));
    if a > b {
        std::mem::swap(&mut a, &mut b);
    }
    if a > *lo {
        *lo = a;
    }
    if b < *hi {
        *hi = b;
    }
    if *lo > *hi {
        return None;
    }
    Some(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint, Rat};

    fn pt(x: i64, y: i64) -> Point2<Rat> {
        Point2::new(rint(x), rint(y))
    }

    fn vx(t: i64, x: i64, y: i64) -> TrajectoryVertex<Rat, Point2<Rat>> {
        TrajectoryVertex {
            t: rint(t),
            pos: pt(x, y),
        }
    }

    #[test]
    fn hull_of_square_plus_interior() {
        let hull = ConvexPolygon::hull_of(vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)]);
        assert_eq!(hull.vertex_count(), 4);
        assert_eq!(hull.area2(), rint(8));
        assert!(hull.contains(&pt(1, 1)));
        assert!(hull.contains(&pt(2, 2))); // boundary is inside
        assert!(!hull.contains(&pt(3, 1)));
    }

    #[test]
    fn hull_degenerate_collinear() {
        let hull = ConvexPolygon::hull_of(vec![pt(0, 0), pt(1, 1), pt(2, 2)]);
        assert_eq!(hull.vertex_count(), 2);
        assert!(hull.contains(&pt(1, 1)));
        assert!(!hull.contains(&pt(1, 0)));
    }

    #[test]
    fn square_crossing_symmetric() {
        // Edge (0,(-2,0)) -> (4,(2,0)), square lower-left (-1,-1), side 2.
        let hit = square_entry_exit(
            &vx(0, -2, 0),
            &vx(4, 2, 0),
            &pt(-1, -1),
            &rint(2),
        );
        assert_eq!(hit, Some((rint(1), rint(3))));
    }

    #[test]
    fn square_miss() {
        let hit = square_entry_exit(&vx(0, 5, 5), &vx(4, 9, 5), &pt(-1, -1), &rint(2));
        assert_eq!(hit, None);
    }

    #[test]
    fn square_enters_and_ends_inside() {
        // Edge (0,(0,0)) -> (4,(4,0)), square lower-left (3,0), side 1.
        let hit = square_entry_exit(&vx(0, 0, 0), &vx(4, 4, 0), &pt(3, 0), &rint(1));
        assert_eq!(hit, Some((rint(3), rint(4))));
    }

    #[test]
    fn square_touch_at_corner_is_single_instant() {
        // Diagonal edge grazing the square corner (0,0) exactly.
        let hit = square_entry_exit(&vx(0, -1, 1), &vx(2, 1, -1), &pt(-2, -2), &rint(2));
        assert_eq!(hit, Some((rint(1), rint(1))));
    }

    #[test]
    fn interval_clip_basic() {
        let u = TrajectoryVertex {
            t: rint(0),
            pos: rint(0),
        };
        let v = TrajectoryVertex {
            t: rint(8),
            pos: rint(4),
        };
        let hit = interval_entry_exit(&u, &v, &rat(3, 2), &rint(1));
        assert_eq!(hit, Some((rint(3), rint(5))));
    }
}
