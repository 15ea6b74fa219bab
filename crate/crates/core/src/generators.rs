//! Synthetic trajectories: the adversarial strip-grid construction whose
//! stay map has a quadratic number of faces, and seeded random walks for
//! property tests.

use crate::geom::Point2;
use crate::scalar::Scalar;
use crate::trajectory::{Trajectory, Trajectory1, Trajectory2, TrajectoryVertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Parameters of the strip-grid construction.
#[derive(Clone, Debug)]
pub struct GridConstructionParams<S> {
    /// Strip count per axis; the stay map gets m^2 clusters.
    pub m: u32,
    pub side: S,
    pub gap: S,
    /// How much faster the "quick" relocation moves are than the dwell
    /// cadence; at the default 100 each move takes 1% of g/m.
    pub speed_factor: S,
}

impl<S: Scalar> GridConstructionParams<S> {
    pub fn new(m: u32, side: S, gap: S) -> Self {
        GridConstructionParams {
            m,
            side,
            gap,
            speed_factor: S::from_int(100),
        }
    }
}

/// Builds the two-phase strip-cutting trajectory.
///
/// Phase one sprints to `(2s, 0)` by time `g/2`, loops back to the origin
/// off the swept band (arriving at `g - g/(2m)`), then alternates dwells
/// of `g/m` with quick `s/m` hops rightward, ending with a dwell of `g` at
/// `(s, 0)`. Phase two replays the same schedule with the axes swapped,
/// cutting the orthogonal strips; the stay map decomposes into an m-by-m
/// cluster grid.
pub fn grid_construction<S: Scalar>(params: &GridConstructionParams<S>) -> Trajectory2<S> {
    let m = params.m.max(1) as i64;
    let s = &params.side;
    let g = &params.gap;
    let two = S::from_int(2);
    if m == 1 {
        // Degenerate single-strip case: the schedule's return deadline
        // g - g/(2m) collides with the sprint, so collapse to the sprint,
        // a clear loop home, and a long dwell; the stay map is the single
        // square of corners covering the origin.
        let third = g.clone().half() / S::from_int(3);
        let verts = [
            (S::zero(), S::zero(), S::zero()),
            (g.clone().half(), two.clone() * s.clone(), S::zero()),
            (
                g.clone().half() + third.clone(),
                two.clone() * s.clone(),
                (two.clone() * s.clone()).neg(),
            ),
            (
                g.clone() - third,
                S::zero(),
                (two.clone() * s.clone()).neg(),
            ),
            (g.clone(), S::zero(), S::zero()),
            (g.clone() + two.clone() * g.clone(), S::zero(), S::zero()),
        ];
        return Trajectory::new(
            verts
                .into_iter()
                .map(|(t, x, y)| TrajectoryVertex {
                    t,
                    pos: Point2::new(x, y),
                })
                .collect(),
        )
        .expect("single-strip schedule increases");
    }
    let u = g.clone() / S::from_int(m); // dwell duration g/m
    let hop = s.clone() / S::from_int(m); // hop length s/m
    let move_dt = u.clone() / params.speed_factor.clone();

    // Waypoints of one phase, relative to its anchor, as (dt-from-phase
    // -start, x, y). The southern loop keeps the return clear of the band
    // swept by the first edge.
    let mut rel: Vec<(S, S, S)> = Vec::new();
    let t_back = g.clone() - u.clone().half(); // g - g/(2m)
    rel.push((S::zero(), S::zero(), S::zero()));
    rel.push((g.clone().half(), two.clone() * s.clone(), S::zero()));
    let detour = two.clone() * s.clone();
    let r1 = g.clone().half() + (t_back.clone() - g.clone().half()) / S::from_int(3);
    let r2 = g.clone().half()
        + (t_back.clone() - g.clone().half()) * two.clone() / S::from_int(3);
    rel.push((r1, two.clone() * s.clone(), detour.clone().neg()));
    rel.push((r2, S::zero(), detour.neg()));
    rel.push((t_back.clone(), S::zero(), S::zero()));
    // Dwell-hop cadence.
    let mut t = t_back;
    let mut x = S::zero();
    for _ in 0..m {
        t = t + u.clone();
        rel.push((t.clone(), x.clone(), S::zero()));
        t = t + move_dt.clone();
        x = x + hop.clone();
        rel.push((t.clone(), x.clone(), S::zero()));
    }
    // Settling dwell of exactly g at (s, 0).
    t = t + g.clone();
    rel.push((t.clone(), x.clone(), S::zero()));

    let phase_duration = t;
    let mut vertices: Vec<TrajectoryVertex<S, Point2<S>>> = Vec::new();
    for (dt, px, py) in &rel {
        vertices.push(TrajectoryVertex {
            t: dt.clone(),
            pos: Point2::new(px.clone(), py.clone()),
        });
    }
    // Phase two: same schedule, coordinates swapped, anchored at the
    // phase-one endpoint (s, 0).
    for (dt, px, py) in rel.iter().skip(1) {
        vertices.push(TrajectoryVertex {
            t: phase_duration.clone() + dt.clone(),
            pos: Point2::new(s.clone() + py.clone(), px.clone()),
        });
    }
    Trajectory::new(vertices).expect("strictly increasing construction schedule")
}

fn scaled_unit<S: Scalar>(rng: &mut ChaCha8Rng, scale: &S, signed: bool) -> S {
    let range = if signed {
        rng.gen_range(-1000i64..=1000)
    } else {
        rng.gen_range(1i64..=1000)
    };
    scale.clone() * S::from_int(range) / S::from_int(1000)
}

/// Seeded 1D random walk: timestamps advance by (0, dt_scale] per step,
/// positions move by at most step_scale. Identical seeds give identical
/// trajectories.
pub fn random_walk_1d<S: Scalar>(
    n: usize,
    seed: u64,
    step_scale: &S,
    dt_scale: &S,
) -> Trajectory1<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = S::zero();
    let mut x = S::zero();
    let mut vertices = Vec::with_capacity(n.max(1));
    vertices.push(TrajectoryVertex {
        t: t.clone(),
        pos: x.clone(),
    });
    for _ in 1..n.max(1) {
        t = t + scaled_unit(&mut rng, dt_scale, false);
        x = x + scaled_unit(&mut rng, step_scale, true);
        vertices.push(TrajectoryVertex {
            t: t.clone(),
            pos: x.clone(),
        });
    }
    Trajectory::new(vertices).expect("strictly increasing random-walk timestamps")
}

/// Seeded 2D random walk; same conventions as the 1D walk.
pub fn random_walk_2d<S: Scalar>(
    n: usize,
    seed: u64,
    step_scale: &S,
    dt_scale: &S,
) -> Trajectory2<S> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = S::zero();
    let mut x = S::zero();
    let mut y = S::zero();
    let mut vertices = Vec::with_capacity(n.max(1));
    vertices.push(TrajectoryVertex {
        t: t.clone(),
        pos: Point2::new(x.clone(), y.clone()),
    });
    for _ in 1..n.max(1) {
        t = t + scaled_unit(&mut rng, dt_scale, false);
        x = x + scaled_unit(&mut rng, step_scale, true);
        y = y + scaled_unit(&mut rng, step_scale, true);
        vertices.push(TrajectoryVertex {
            t: t.clone(),
            pos: Point2::new(x.clone(), y.clone()),
        });
    }
    Trajectory::new(vertices).expect("strictly increasing random-walk timestamps")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint, Rat};
    use num_traits::Signed;

    #[test]
    fn walk_is_deterministic() {
        let one = rint(1);
        let a: Trajectory2<Rat> = random_walk_2d(50, 42, &one, &one);
        let b: Trajectory2<Rat> = random_walk_2d(50, 42, &one, &one);
        assert_eq!(a, b);
        let c: Trajectory2<Rat> = random_walk_2d(50, 43, &one, &one);
        assert_ne!(a, c);
    }

    #[test]
    fn walk_single_vertex() {
        let one = rint(1);
        let t: Trajectory1<Rat> = random_walk_1d(1, 7, &one, &one);
        assert_eq!(t.len(), 1);
        assert_eq!(t.duration(), rint(0));
    }

    #[test]
    fn walk_steps_bounded() {
        let t: Trajectory1<Rat> = random_walk_1d(100, 3, &rat(1, 2), &rint(2));
        for (u, v) in t.edges() {
            let dt = v.t.clone() - u.t.clone();
            assert!(dt > rint(0) && dt <= rint(2));
            let dx = (v.pos.clone() - u.pos.clone()).abs();
            assert!(dx <= rat(1, 2));
        }
    }

    #[test]
    fn grid_waypoints_at_stated_times() {
        let params = GridConstructionParams::new(2, rint(1), rint(4));
        let t = grid_construction(&params);
        let vs = t.vertices();
        assert_eq!(vs[0].t, rint(0));
        assert_eq!(vs[0].pos, Point2::new(rint(0), rint(0)));
        // Second vertex (2s, 0) at g/2.
        assert_eq!(vs[1].t, rint(2));
        assert_eq!(vs[1].pos, Point2::new(rint(2), rint(0)));
        // Return completes at g - g/(2m) = 3.
        assert_eq!(vs[4].t, rint(3));
        assert_eq!(vs[4].pos, Point2::new(rint(0), rint(0)));
        // Vertex count stays linear in m.
        let big = grid_construction(&GridConstructionParams::new(8, rint(1), rint(4)));
        assert!(big.len() <= 2 * (6 + 2 * 8 + 1));
    }

    #[test]
    fn grid_timestamps_strictly_increase() {
        for m in [1u32, 2, 3, 4, 5] {
            let params = GridConstructionParams::new(m, rint(1), rint(4));
            let t = grid_construction(&params);
            for (u, v) in t.edges() {
                assert!(u.t < v.t);
            }
        }
    }
}
