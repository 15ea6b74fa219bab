//! Event points of a 1D trajectory.
//!
//! In the time-location plane (time on the x-axis, position on the y-axis)
//! the trajectory is a time-monotone polyline. A horizontal sweep line
//! rises through the positions; the edges crossing it chop it into gaps
//! whose widths are linear functions of the sweep position. An event point
//! is a position holding a trajectory vertex, or one where the width of
//! some gap between time-contiguous visits is exactly `g` — including the
//! gap from the trajectory start to the first visit and from the last
//! visit to the trajectory end, which pin stay-map endpoints just as
//! interior gaps do.

use crate::scalar::{OrdScalar, Scalar};
use crate::trajectory::Trajectory1;
use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, BinaryHeap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EventKind {
    Vertex,
    GapEqualsG,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EventPoint<S> {
    pub position: S,
    pub kind: EventKind,
}

/// Status keys: edges crossing the sweep line, ordered by crossing time.
/// Crossing times within a level are ordered by edge index because edge i
/// spans `[t_i, t_{i+1}]`, so the index order is the time order. The walls
/// stand for the fixed trajectory start and end times.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Key {
    LeftWall,
    Edge(usize),
    RightWall,
}

struct Sweep<'a, S: Scalar> {
    xs: Vec<&'a S>,
    ts: Vec<&'a S>,
    gap: &'a S,
    status: BTreeSet<usize>,
    heap: BinaryHeap<Reverse<(OrdScalar<S>, Key, Key)>>,
    gap_events: Vec<S>,
}

impl<'a, S: Scalar> Sweep<'a, S> {
    /// Crossing time of a status key as a linear function `alpha + beta * y`.
    fn tau(&self, key: Key) -> (S, S) {
        match key {
            Key::LeftWall => (self.ts[0].clone(), S::zero()),
            Key::RightWall => (self.ts[self.ts.len() - 1].clone(), S::zero()),
            Key::Edge(i) => {
                let dt = self.ts[i + 1].clone() - self.ts[i].clone();
                let dx = self.xs[i + 1].clone() - self.xs[i].clone();
                debug_assert!(!dx.is_zero(), "flat edges never enter the status");
                let beta = dt / dx;
                let alpha = self.ts[i].clone() - self.xs[i].clone() * beta.clone();
                (alpha, beta)
            }
        }
    }

    /// Schedules the sweep position at which the gap between the crossings
    /// of `left` and `right` is exactly `g`, if that happens at or above
    /// the current level.
    fn schedule(&mut self, left: Key, right: Key, y_cur: &S) {
        if left == Key::LeftWall && right == Key::RightWall {
            // The never-visited band has constant width D; it is not a gap
            // between visits.
            return;
        }
        let (al, bl) = self.tau(left);
        let (ar, br) = self.tau(right);
        let c = ar - al;
        let d = br - bl;
        if d.is_zero() {
            if c == *self.gap {
                self.gap_events.push(y_cur.clone());
            }
            return;
        }
        let y_star = (self.gap.clone() - c) / d;
        if y_star >= *y_cur {
            self.heap.push(Reverse((OrdScalar(y_star), left, right)));
        }
    }

    fn pred(&self, key: Key) -> Option<Key> {
        match key {
            Key::LeftWall => None,
            Key::Edge(i) => Some(
                self.status
                    .range(..i)
                    .next_back()
                    .map(|&e| Key::Edge(e))
                    .unwrap_or(Key::LeftWall),
            ),
            Key::RightWall => Some(
                self.status
                    .iter()
                    .next_back()
                    .map(|&e| Key::Edge(e))
                    .unwrap_or(Key::LeftWall),
            ),
        }
    }

    fn succ(&self, key: Key) -> Option<Key> {
        match key {
            Key::RightWall => None,
            Key::Edge(i) => Some(
                self.status
                    .range(i + 1..)
                    .next()
                    .map(|&e| Key::Edge(e))
                    .unwrap_or(Key::RightWall),
            ),
            Key::LeftWall => Some(
                self.status
                    .iter()
                    .next()
                    .map(|&e| Key::Edge(e))
                    .unwrap_or(Key::RightWall),
            ),
        }
    }

    fn in_status(&self, key: Key) -> bool {
        match key {
            Key::LeftWall | Key::RightWall => true,
            Key::Edge(i) => self.status.contains(&i),
        }
    }

    fn adjacent(&self, left: Key, right: Key) -> bool {
        if !self.in_status(left) || !self.in_status(right) {
            return false;
        }
        self.succ(left) == Some(right)
    }

    /// Emits every pending gap event strictly below or at `level`. Stale
    /// heap entries whose pair is no longer adjacent are dropped.
    fn drain_heap_through(&mut self, level: Option<&S>) {
        while let Some(Reverse((y, left, right))) = self.heap.peek() {
            if let Some(level) = level {
                if y.0 > *level {
                    break;
                }
            }
            let (y, left, right) = (y.0.clone(), *left, *right);
            self.heap.pop();
            if self.adjacent(left, right) {
                self.gap_events.push(y);
            }
        }
    }
}

/// All event points of the trajectory, sorted by position and deduplicated
/// (a vertex event wins over a coinciding gap event). Output size is O(n);
/// runtime O(n log n).
pub fn event_points<S: Scalar>(traj: &Trajectory1<S>, gap: &S) -> Vec<EventPoint<S>> {
    let vertices = traj.vertices();
    let n = vertices.len();

    // Group vertex indices by position level.
    let mut levels: BTreeMap<OrdScalar<S>, Vec<usize>> = BTreeMap::new();
    for (j, v) in vertices.iter().enumerate() {
        levels
            .entry(OrdScalar(v.pos.clone()))
            .or_default()
            .push(j);
    }

    let mut sweep = Sweep {
        xs: vertices.iter().map(|v| &v.pos).collect(),
        ts: vertices.iter().map(|v| &v.t).collect(),
        gap,
        status: BTreeSet::new(),
        heap: BinaryHeap::new(),
        gap_events: Vec::new(),
    };

    for (level, verts) in &levels {
        let y = &level.0;
        sweep.drain_heap_through(Some(y));

        // An edge is added at its lower endpoint's level and removed at its
        // upper endpoint's level; flat edges never cross any level.
        let mut removals: BTreeSet<usize> = BTreeSet::new();
        let mut additions: BTreeSet<usize> = BTreeSet::new();
        for &j in verts {
            if j > 0 {
                let e = j - 1;
                match sweep.xs[e].cmp_total(sweep.xs[j]) {
                    std::cmp::Ordering::Less => {
                        removals.insert(e);
                    }
                    std::cmp::Ordering::Greater => {
                        additions.insert(e);
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
            if j + 1 < n {
                let e = j;
                match sweep.xs[j].cmp_total(sweep.xs[j + 1]) {
                    std::cmp::Ordering::Less => {
                        additions.insert(e);
                    }
                    std::cmp::Ordering::Greater => {
                        removals.insert(e);
                    }
                    std::cmp::Ordering::Equal => {}
                }
            }
        }

        let mut dirty: BTreeSet<Key> = BTreeSet::new();
        for &e in &removals {
            if let Some(p) = sweep.pred(Key::Edge(e)) {
                dirty.insert(p);
            }
            if let Some(s) = sweep.succ(Key::Edge(e)) {
                dirty.insert(s);
            }
            sweep.status.remove(&e);
        }
        for &e in &additions {
            sweep.status.insert(e);
            dirty.insert(Key::Edge(e));
        }

        let mut pairs: BTreeSet<(Key, Key)> = BTreeSet::new();
        for &k in &dirty {
            if !sweep.in_status(k) {
                continue;
            }
            if let Some(p) = sweep.pred(k) {
                if sweep.in_status(p) {
                    pairs.insert((p, k));
                }
            }
            if let Some(s) = sweep.succ(k) {
                if sweep.in_status(s) {
                    pairs.insert((k, s));
                }
            }
        }
        for (l, r) in pairs {
            sweep.schedule(l, r, y);
        }
    }
    // Status is empty above the top vertex; anything left in the heap is stale.

    let mut out: Vec<(OrdScalar<S>, EventKind)> = Vec::new();
    for (level, _) in &levels {
        out.push((level.clone(), EventKind::Vertex));
    }
    for y in sweep.gap_events.drain(..) {
        out.push((OrdScalar(y), EventKind::GapEqualsG));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0).then(a.1.cmp(&b.1)));
    out.dedup_by(|next, kept| next.0 == kept.0);
    out.into_iter()
        .map(|(p, kind)| EventPoint {
            position: p.0,
            kind,
        })
        .collect()
}

/// The sorted, deduplicated closure of the event positions under offsets
/// `-s`, `0`, `+s`; the stay-map endpoints always lie in this set.
pub fn candidate_positions<S: Scalar>(events: &[EventPoint<S>], side: &S) -> Vec<S> {
    let mut out: Vec<OrdScalar<S>> = Vec::with_capacity(events.len() * 3);
    for e in events {
        out.push(OrdScalar(e.position.clone() - side.clone()));
        out.push(OrdScalar(e.position.clone()));
        out.push(OrdScalar(e.position.clone() + side.clone()));
    }
    out.sort();
    out.dedup();
    out.into_iter().map(|w| w.0).collect()
}
