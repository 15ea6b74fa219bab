//! Trajectories: time-ordered polylines with linear interpolation between
//! vertices, plus the stay-query parameters.

use crate::geom::Point2;
use crate::scalar::Scalar;
use std::fmt;

/// Coordinate of a trajectory vertex: a bare scalar in 1D, a [`Point2`] in 2D.
pub trait Coord<S: Scalar>: Clone + fmt::Debug + PartialEq + 'static {
    const DIM: usize;

    /// `a + (b - a) * alpha` componentwise.
    fn lerp(a: &Self, b: &Self, alpha: &S) -> Self;

    fn components(&self) -> Vec<S>;
}

impl<S: Scalar> Coord<S> for S {
    const DIM: usize = 1;

    fn lerp(a: &Self, b: &Self, alpha: &S) -> Self {
        a.clone() + (b.clone() - a.clone()) * alpha.clone()
    }

    fn components(&self) -> Vec<S> {
        vec![self.clone()]
    }
}

impl<S: Scalar> Coord<S> for Point2<S> {
    const DIM: usize = 2;

    fn lerp(a: &Self, b: &Self, alpha: &S) -> Self {
        Point2::new(
            <S as Coord<S>>::lerp(&a.x, &b.x, alpha),
            <S as Coord<S>>::lerp(&a.y, &b.y, alpha),
        )
    }

    fn components(&self) -> Vec<S> {
        vec![self.x.clone(), self.y.clone()]
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct TrajectoryVertex<S, C> {
    pub t: S,
    pub pos: C,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Trajectory<S, C> {
    vertices: Vec<TrajectoryVertex<S, C>>,
}

pub type Trajectory1<S> = Trajectory<S, S>;
pub type Trajectory2<S> = Trajectory<S, Point2<S>>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrajectoryError {
    Empty,
    NonIncreasingTime { index: usize },
    TimeOutOfRange,
    InvertedInterval,
    InvalidParams(&'static str),
}

impl fmt::Display for TrajectoryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrajectoryError::Empty => write!(f, "trajectory needs at least one vertex"),
            TrajectoryError::NonIncreasingTime { index } => write!(
                f,
                "timestamps must be strictly increasing (violated at vertex {})",
                index
            ),
            TrajectoryError::TimeOutOfRange => {
                write!(f, "query time outside the trajectory's time span")
            }
            TrajectoryError::InvertedInterval => {
                write!(f, "interval end precedes its start")
            }
            TrajectoryError::InvalidParams(what) => write!(f, "invalid parameters: {}", what),
        }
    }
}

impl std::error::Error for TrajectoryError {}

impl<S: Scalar, C: Coord<S>> Trajectory<S, C> {
    pub fn new(vertices: Vec<TrajectoryVertex<S, C>>) -> Result<Self, TrajectoryError> {
        if vertices.is_empty() {
            return Err(TrajectoryError::Empty);
        }
        for i in 1..vertices.len() {
            if vertices[i].t <= vertices[i - 1].t {
                return Err(TrajectoryError::NonIncreasingTime { index: i });
            }
        }
        Ok(Trajectory { vertices })
    }

    pub fn vertices(&self) -> &[TrajectoryVertex<S, C>] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false // constructor guarantees at least one vertex
    }

    pub fn start_time(&self) -> &S {
        &self.vertices[0].t
    }

    pub fn end_time(&self) -> &S {
        &self.vertices[self.vertices.len() - 1].t
    }

    /// Total duration D.
    pub fn duration(&self) -> S {
        self.end_time().clone() - self.start_time().clone()
    }

    pub fn edges(&self) -> impl Iterator<Item = (&TrajectoryVertex<S, C>, &TrajectoryVertex<S, C>)> {
        self.vertices.windows(2).map(|w| (&w[0], &w[1]))
    }

    /// Position at time `t` by linear interpolation; exact at vertices.
    pub fn position_at(&self, t: &S) -> Result<C, TrajectoryError> {
        if t < self.start_time() || t > self.end_time() {
            return Err(TrajectoryError::TimeOutOfRange);
        }
        // Index of the last vertex with time <= t.
        let idx = match self
            .vertices
            .binary_search_by(|v| v.t.cmp_total(t))
        {
            Ok(i) => return Ok(self.vertices[i].pos.clone()),
            Err(i) => i - 1,
        };
        let a = &self.vertices[idx];
        let b = &self.vertices[idx + 1];
        let alpha = (t.clone() - a.t.clone()) / (b.t.clone() - a.t.clone());
        Ok(C::lerp(&a.pos, &b.pos, &alpha))
    }

    /// The sub-trajectory over `[a, b]`: interior vertices plus interpolated
    /// endpoint vertices at `a` and `b`.
    pub fn subtrajectory(&self, a: &S, b: &S) -> Result<Self, TrajectoryError> {
        if a > b {
            return Err(TrajectoryError::InvertedInterval);
        }
        if a < self.start_time() || b > self.end_time() {
            return Err(TrajectoryError::TimeOutOfRange);
        }
        if a == b {
            return Ok(Trajectory {
                vertices: vec![TrajectoryVertex {
                    t: a.clone(),
                    pos: self.position_at(a)?,
                }],
            });
        }
        let mut vertices = Vec::new();
        vertices.push(TrajectoryVertex {
            t: a.clone(),
            pos: self.position_at(a)?,
        });
        for v in &self.vertices {
            if v.t > *a && v.t < *b {
                vertices.push(v.clone());
            }
        }
        vertices.push(TrajectoryVertex {
            t: b.clone(),
            pos: self.position_at(b)?,
        });
        Ok(Trajectory { vertices })
    }
}

impl<S: Scalar> Trajectory1<S> {
    pub fn min_position(&self) -> S {
        self.vertices
            .iter()
            .map(|v| v.pos.clone())
            .reduce(|a, b| a.min_of(b))
            .expect("nonempty")
    }

    pub fn max_position(&self) -> S {
        self.vertices
            .iter()
            .map(|v| v.pos.clone())
            .reduce(|a, b| a.max_of(b))
            .expect("nonempty")
    }
}

/// Square side `s`, gap bound `g`, and the 2D approximation factor.
#[derive(Clone, Debug, PartialEq)]
pub struct StayParams<S> {
    pub side: S,
    pub gap: S,
    pub epsilon: Option<S>,
}

impl<S: Scalar> StayParams<S> {
    pub fn new(side: S, gap: S) -> Result<Self, TrajectoryError> {
        if side <= S::zero() {
            return Err(TrajectoryError::InvalidParams("side must be positive"));
        }
        if gap <= S::zero() {
            return Err(TrajectoryError::InvalidParams("gap must be positive"));
        }
        Ok(StayParams {
            side,
            gap,
            epsilon: None,
        })
    }

    pub fn with_epsilon(side: S, gap: S, epsilon: S) -> Result<Self, TrajectoryError> {
        let mut params = Self::new(side, gap)?;
        if epsilon <= S::zero() {
            return Err(TrajectoryError::InvalidParams("epsilon must be positive"));
        }
        params.epsilon = Some(epsilon);
        Ok(params)
    }

    pub fn epsilon(&self) -> &S {
        self.epsilon
            .as_ref()
            .expect("epsilon required for 2D queries")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rint, Rat};

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
    fn position_midpoint_of_edge() {
        let t = traj1(&[(0, 0), (8, 4)]);
        assert_eq!(t.position_at(&rint(4)).unwrap(), rint(2));
    }

    #[test]
    fn position_stationary() {
        let t = traj2(&[(0, 0, 0), (10, 0, 0)]);
        assert_eq!(
            t.position_at(&rint(3)).unwrap(),
            Point2::new(rint(0), rint(0))
        );
    }

    #[test]
    fn position_on_second_edge() {
        let t = traj2(&[(0, 0, 0), (2, 4, 0), (4, 4, 4)]);
        assert_eq!(
            t.position_at(&rint(3)).unwrap(),
            Point2::new(rint(4), rint(2))
        );
    }

    #[test]
    fn position_out_of_range() {
        let t = traj1(&[(0, 0), (8, 4)]);
        assert_eq!(
            t.position_at(&rint(9)),
            Err(TrajectoryError::TimeOutOfRange)
        );
    }

    #[test]
    fn subtrajectory_linear_clip() {
        let t = traj1(&[(0, 0), (8, 4)]);
        let sub = t.subtrajectory(&rint(2), &rint(6)).unwrap();
        assert_eq!(sub.len(), 2);
        assert_eq!(sub.vertices()[0].pos, rint(1));
        assert_eq!(sub.vertices()[1].pos, rint(3));
    }

    #[test]
    fn subtrajectory_identity() {
        let t = traj1(&[(0, 0), (3, 5), (8, 4)]);
        let sub = t.subtrajectory(&rint(0), &rint(8)).unwrap();
        assert_eq!(sub, t);
    }

    #[test]
    fn subtrajectory_spanning_interior_vertex() {
        let t = traj2(&[(0, 0, 0), (4, 4, 0), (8, 4, 4)]);
        let sub = t.subtrajectory(&rint(2), &rint(6)).unwrap();
        let pts: Vec<_> = sub.vertices().to_vec();
        assert_eq!(pts.len(), 3);
        assert_eq!(pts[0].pos, Point2::new(rint(2), rint(0)));
        assert_eq!(pts[1].pos, Point2::new(rint(4), rint(0)));
        assert_eq!(pts[2].pos, Point2::new(rint(4), rint(2)));
    }

    #[test]
    fn subtrajectory_rejects_inverted() {
        let t = traj1(&[(0, 0), (8, 4)]);
        assert_eq!(
            t.subtrajectory(&rint(6), &rint(2)),
            Err(TrajectoryError::InvertedInterval)
        );
    }

    #[test]
    fn strictly_increasing_time_enforced() {
        let err = Trajectory::<Rat, Rat>::new(vec![
            TrajectoryVertex {
                t: rint(0),
                pos: rint(0),
            },
            TrajectoryVertex {
                t: rint(0),
                pos: rint(1),
            },
        ]);
        assert_eq!(err, Err(TrajectoryError::NonIncreasingTime { index: 1 }));
    }

    #[test]
    fn params_validation() {
        assert!(StayParams::new(rint(1), rint(2)).is_ok());
        assert!(StayParams::new(rint(0), rint(2)).is_err());
        assert!(StayParams::with_epsilon(rint(1), rint(2), rint(0)).is_err());
    }
}
