//! Exact planar regions as slab decompositions.
//!
//! A [`Region`] is a closed polygonal point set stored as vertical slabs;
//! within a slab the region is a stack of disjoint trapezoids whose top
//! and bottom boundaries are linear in x. Boolean operations never invent
//! new boundary lines — every vertex of every intermediate result lies on
//! an intersection of input lines — so rational coordinates stay small
//! through arbitrarily long chains of set operations.

use crate::geom::{ConvexPolygon, Point2};
use crate::scalar::{OrdScalar, Scalar};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug)]
pub struct Region<S: Scalar> {
    pub(crate) slabs: Vec<Slab<S>>,
}

#[derive(Clone, Debug)]
pub(crate) struct Slab<S> {
    pub(crate) x0: S,
    pub(crate) x1: S,
    /// Bottom-to-top, pairwise disjoint; consecutive trapezoids may touch
    /// at a single pinch point but never along a whole boundary.
    pub(crate) traps: Vec<Trap<S>>,
}

/// `{(x, y) : x0 <= x <= x1, lo(x) <= y <= hi(x)}` with linear lo, hi
/// stored by their values at the slab ends.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Trap<S> {
    pub(crate) lo0: S,
    pub(crate) lo1: S,
    pub(crate) hi0: S,
    pub(crate) hi1: S,
}

impl<S: Scalar> Trap<S> {
    pub(crate) fn lo_at(&self, x0: &S, x1: &S, x: &S) -> S {
        eval_linear(x0, x1, &self.lo0, &self.lo1, x)
    }

    pub(crate) fn hi_at(&self, x0: &S, x1: &S, x: &S) -> S {
        eval_linear(x0, x1, &self.hi0, &self.hi1, x)
    }

    fn is_degenerate(&self) -> bool {
        self.lo0 == self.hi0 && self.lo1 == self.hi1
    }
}

pub(crate) fn eval_linear<S: Scalar>(x0: &S, x1: &S, y0: &S, y1: &S, x: &S) -> S {
    y0.clone()
        + (y1.clone() - y0.clone()) * (x.clone() - x0.clone()) / (x1.clone() - x0.clone())
}

/// A boundary segment over an x-interval, for crossing detection.
struct BoundarySeg<S> {
    x0: S,
    x1: S,
    y0: S,
    y1: S,
}

impl<S: Scalar> Region<S> {
    pub fn empty() -> Self {
        Region { slabs: Vec::new() }
    }

    pub fn is_empty(&self) -> bool {
        self.slabs.is_empty()
    }

    /// Region of a convex polygon; polygons with fewer than 3 vertices
    /// have no interior and produce the empty region.
    pub fn from_convex(poly: &ConvexPolygon<S>) -> Self {
        let verts = poly.vertices();
        if verts.len() < 3 {
            return Region::empty();
        }
        let mut xs: Vec<OrdScalar<S>> = verts.iter().map(|p| OrdScalar(p.x.clone())).collect();
        xs.sort();
        xs.dedup();
        let n = verts.len();
        let mut slabs = Vec::new();
        for w in xs.windows(2) {
            let (a, b) = (&w[0].0, &w[1].0);
            let mut lo: Option<(S, S)> = None;
            let mut hi: Option<(S, S)> = None;
            for i in 0..n {
                let (p, q) = (&verts[i], &verts[(i + 1) % n]);
                if p.x == q.x {
                    continue;
                }
                // CCW ring: lower-chain edges run left to right.
                let (lft, rgt, lower) = if p.x < q.x { (p, q, true) } else { (q, p, false) };
                if lft.x <= *a && *b <= rgt.x {
                    let ya = eval_linear(&lft.x, &rgt.x, &lft.y, &rgt.y, a);
                    let yb = eval_linear(&lft.x, &rgt.x, &lft.y, &rgt.y, b);
                    if lower {
                        lo = Some((ya, yb));
                    } else {
                        hi = Some((ya, yb));
                    }
                }
            }
            let (lo, hi) = (lo.expect("convex slab lower edge"), hi.expect("convex slab upper edge"));
            slabs.push(Slab {
                x0: a.clone(),
                x1: b.clone(),
                traps: vec![Trap {
                    lo0: lo.0,
                    lo1: lo.1,
                    hi0: hi.0,
                    hi1: hi.1,
                }],
            });
        }
        let mut region = Region { slabs };
        region.merge_adjacent_slabs();
        region
    }

    /// Region enclosed by a set of rings under the even-odd rule. Rings
    /// must not cross themselves or each other (shared vertices and shared
    /// full edges are fine).
    pub fn from_rings(rings: &[Vec<Point2<S>>]) -> Self {
        let mut xs: Vec<OrdScalar<S>> = rings
            .iter()
            .flatten()
            .map(|p| OrdScalar(p.x.clone()))
            .collect();
        xs.sort();
        xs.dedup();
        if xs.len() < 2 {
            return Region::empty();
        }
        let mut slabs = Vec::new();
        for w in xs.windows(2) {
            let (a, b) = (&w[0].0, &w[1].0);
            // Bounds: every ring edge spanning this slab.
            let mut bounds: Vec<(S, S)> = Vec::new();
            for ring in rings {
                let n = ring.len();
                for i in 0..n {
                    let (p, q) = (&ring[i], &ring[(i + 1) % n]);
                    if p.x == q.x {
                        continue;
                    }
                    let (lft, rgt) = if p.x < q.x { (p, q) } else { (q, p) };
                    if lft.x <= *a && *b <= rgt.x {
                        bounds.push((
                            eval_linear(&lft.x, &rgt.x, &lft.y, &rgt.y, a),
                            eval_linear(&lft.x, &rgt.x, &lft.y, &rgt.y, b),
                        ));
                    }
                }
            }
            bounds.sort_by(|u, v| {
                (u.0.clone() + u.1.clone()).cmp_total(&(v.0.clone() + v.1.clone()))
            });
            let mut traps = Vec::new();
            let mut open: Option<(S, S)> = None;
            let mut parity = false;
            for (y0, y1) in bounds {
                parity = !parity;
                if parity {
                    open = Some((y0, y1));
                } else {
                    let (lo0, lo1) = open.take().expect("parity open");
                    let trap = Trap {
                        lo0,
                        lo1,
                        hi0: y0,
                        hi1: y1,
                    };
                    if !trap.is_degenerate() {
                        traps.push(trap);
                    }
                }
            }
            debug_assert!(!parity, "unbalanced ring bounds in slab");
            merge_stacked_traps(&mut traps);
            if !traps.is_empty() {
                slabs.push(Slab {
                    x0: a.clone(),
                    x1: b.clone(),
                    traps,
                });
            }
        }
        let mut region = Region { slabs };
        region.merge_adjacent_slabs();
        region
    }

    fn boundary_segments(&self) -> Vec<BoundarySeg<S>> {
        let mut segs = Vec::new();
        for slab in &self.slabs {
            for trap in &slab.traps {
                segs.push(BoundarySeg {
                    x0: slab.x0.clone(),
                    x1: slab.x1.clone(),
                    y0: trap.lo0.clone(),
                    y1: trap.lo1.clone(),
                });
                segs.push(BoundarySeg {
                    x0: slab.x0.clone(),
                    x1: slab.x1.clone(),
                    y0: trap.hi0.clone(),
                    y1: trap.hi1.clone(),
                });
            }
        }
        segs
    }

    /// Canonicalization: fuse neighbouring slabs whose boundary lines all
    /// continue straight across the shared wall.
    fn merge_adjacent_slabs(&mut self) {
        let mut merged: Vec<Slab<S>> = Vec::with_capacity(self.slabs.len());
        for slab in self.slabs.drain(..) {
            let consume = match merged.last() {
                Some(prev) => slabs_fuse(prev, &slab),
                None => false,
            };
            if consume {
                let prev = merged.last_mut().unwrap();
                for (t_prev, t_next) in prev.traps.iter_mut().zip(slab.traps.iter()) {
                    t_prev.lo1 = t_next.lo1.clone();
                    t_prev.hi1 = t_next.hi1.clone();
                }
                prev.x1 = slab.x1;
            } else {
                merged.push(slab);
            }
        }
        self.slabs = merged;
    }

    /// Exact area.
    pub fn area(&self) -> S {
        let mut acc = S::zero();
        for slab in &self.slabs {
            let w = slab.x1.clone() - slab.x0.clone();
            for t in &slab.traps {
                let heights = (t.hi0.clone() - t.lo0.clone()) + (t.hi1.clone() - t.lo1.clone());
                acc = acc + w.clone() * heights.half();
            }
        }
        acc
    }

    /// Closed-set membership.
    pub fn contains_point(&self, p: &Point2<S>) -> bool {
        let idx = self.slabs.partition_point(|s| s.x0 <= p.x);
        for i in idx.saturating_sub(2)..idx {
            let slab = &self.slabs[i];
            if p.x < slab.x0 || p.x > slab.x1 {
                continue;
            }
            for t in &slab.traps {
                if t.lo_at(&slab.x0, &slab.x1, &p.x) <= p.y
                    && p.y <= t.hi_at(&slab.x0, &slab.x1, &p.x)
                {
                    return true;
                }
            }
        }
        false
    }

    /// Exact squared distance to the region (zero when inside).
    pub fn dist2_to_point(&self, p: &Point2<S>) -> S {
        if self.contains_point(p) {
            return S::zero();
        }
        let mut best: Option<S> = None;
        for slab in &self.slabs {
            for t in &slab.traps {
                let corners = [
                    Point2::new(slab.x0.clone(), t.lo0.clone()),
                    Point2::new(slab.x1.clone(), t.lo1.clone()),
                    Point2::new(slab.x1.clone(), t.hi1.clone()),
                    Point2::new(slab.x0.clone(), t.hi0.clone()),
                ];
                for k in 0..4 {
                    let d = segment_dist2(&corners[k], &corners[(k + 1) % 4], p);
                    best = Some(match best.take() {
                        Some(b) => b.min_of(d),
                        None => d,
                    });
                }
            }
        }
        best.unwrap_or_else(S::zero)
    }

    pub fn bounding_box(&self) -> Option<(Point2<S>, Point2<S>)> {
        if self.is_empty() {
            return None;
        }
        let x_min = self.slabs[0].x0.clone();
        let x_max = self.slabs[self.slabs.len() - 1].x1.clone();
        let mut y_min: Option<S> = None;
        let mut y_max: Option<S> = None;
        for slab in &self.slabs {
            for t in &slab.traps {
                let lo = t.lo0.clone().min_of(t.lo1.clone());
                let hi = t.hi0.clone().max_of(t.hi1.clone());
                y_min = Some(match y_min.take() {
                    Some(v) => v.min_of(lo),
                    None => lo,
                });
                y_max = Some(match y_max.take() {
                    Some(v) => v.max_of(hi),
                    None => hi,
                });
            }
        }
        Some((
            Point2::new(x_min, y_min.unwrap()),
            Point2::new(x_max, y_max.unwrap()),
        ))
    }

    /// Component label per trap, `labels[slab][trap]`, along with the
    /// number of connected components (closures touching at a point count
    /// as connected).
    pub(crate) fn trap_components(&self) -> (Vec<Vec<usize>>, usize) {
        let mut ids = Vec::new();
        let mut offsets = Vec::with_capacity(self.slabs.len());
        let mut total = 0usize;
        for slab in &self.slabs {
            offsets.push(total);
            total += slab.traps.len();
        }
        let mut uf = UnionFind::new(total);
        for (si, slab) in self.slabs.iter().enumerate() {
            for k in 1..slab.traps.len() {
                let (a, b) = (&slab.traps[k - 1], &slab.traps[k]);
                if a.hi0 == b.lo0 || a.hi1 == b.lo1 {
                    uf.union(offsets[si] + k - 1, offsets[si] + k);
                }
            }
            if si + 1 < self.slabs.len() {
                let next = &self.slabs[si + 1];
                if slab.x1 == next.x0 {
                    for (ka, a) in slab.traps.iter().enumerate() {
                        for (kb, b) in next.traps.iter().enumerate() {
                            let lo = a.lo1.clone().max_of(b.lo0.clone());
                            let hi = a.hi1.clone().min_of(b.hi0.clone());
                            if lo <= hi {
                                uf.union(offsets[si] + ka, offsets[si + 1] + kb);
                            }
                        }
                    }
                }
            }
        }
        let mut remap = std::collections::BTreeMap::new();
        let mut next_label = 0usize;
        for (si, slab) in self.slabs.iter().enumerate() {
            let mut row = Vec::with_capacity(slab.traps.len());
            for k in 0..slab.traps.len() {
                let root = uf.find(offsets[si] + k);
                let label = *remap.entry(root).or_insert_with(|| {
                    let l = next_label;
                    next_label += 1;
                    l
                });
                row.push(label);
            }
            ids.push(row);
        }
        (ids, next_label)
    }

    pub fn component_count(&self) -> usize {
        self.trap_components().1
    }

    /// Deterministic points strictly interior to the region, cycling
    /// through the trapezoids. Returns fewer than `count` only for the
    /// empty region.
    pub fn sample_interior_points(&self, count: usize, seed: u64) -> Vec<Point2<S>> {
        let traps: Vec<(&Slab<S>, &Trap<S>)> = self
            .slabs
            .iter()
            .flat_map(|s| s.traps.iter().map(move |t| (s, t)))
            .collect();
        if traps.is_empty() {
            return Vec::new();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let denom = S::from_int(1 << 20);
        let fraction = |rng: &mut ChaCha8Rng| -> S {
            let num = (rng.next_u32() % ((1 << 20) - 1)) + 1;
            S::from_int(num as i64) / denom.clone()
        };
        let mut out = Vec::with_capacity(count);
        let mut k = 0usize;
        while out.len() < count {
            let (slab, trap) = traps[k % traps.len()];
            k += 1;
            let mut fx = fraction(&mut rng);
            let mut found = None;
            for _ in 0..40 {
                let x = slab.x0.clone() + (slab.x1.clone() - slab.x0.clone()) * fx.clone();
                let lo = trap.lo_at(&slab.x0, &slab.x1, &x);
                let hi = trap.hi_at(&slab.x0, &slab.x1, &x);
                if lo < hi {
                    let fy = fraction(&mut rng);
                    let y = lo.clone() + (hi - lo) * fy;
                    found = Some(Point2::new(x, y));
                    break;
                }
                // Pinched at this x: walk inward.
                fx = (fx + S::from_int(1).half()).half();
            }
            out.push(found.expect("non-degenerate trapezoid has interior"));
        }
        out
    }
}

fn slabs_fuse<S: Scalar>(a: &Slab<S>, b: &Slab<S>) -> bool {
    if a.x1 != b.x0 || a.traps.len() != b.traps.len() {
        return false;
    }
    let wa = a.x1.clone() - a.x0.clone();
    let wb = b.x1.clone() - b.x0.clone();
    for (t, u) in a.traps.iter().zip(b.traps.iter()) {
        if t.lo1 != u.lo0 || t.hi1 != u.hi0 {
            return false;
        }
        // Slopes must match for the shared wall to vanish.
        let lo_straight = (t.lo1.clone() - t.lo0.clone()) * wb.clone()
            == (u.lo1.clone() - u.lo0.clone()) * wa.clone();
        let hi_straight = (t.hi1.clone() - t.hi0.clone()) * wb.clone()
            == (u.hi1.clone() - u.hi0.clone()) * wa.clone();
        if !lo_straight || !hi_straight {
            return false;
        }
    }
    true
}

fn merge_stacked_traps<S: Scalar>(traps: &mut Vec<Trap<S>>) {
    let mut out: Vec<Trap<S>> = Vec::with_capacity(traps.len());
    for t in traps.drain(..) {
        match out.last_mut() {
            Some(prev) if prev.hi0 == t.lo0 && prev.hi1 == t.lo1 => {
                prev.hi0 = t.hi0;
                prev.hi1 = t.hi1;
            }
            _ => out.push(t),
        }
    }
    *traps = out;
}

fn segment_dist2<S: Scalar>(a: &Point2<S>, b: &Point2<S>, p: &Point2<S>) -> S {
    let vx = b.x.clone() - a.x.clone();
    let vy = b.y.clone() - a.y.clone();
    let wx = p.x.clone() - a.x.clone();
    let wy = p.y.clone() - a.y.clone();
    let c1 = wx.clone() * vx.clone() + wy.clone() * vy.clone();
    let c2 = vx.clone() * vx.clone() + vy.clone() * vy.clone();
    let d2 = |dx: S, dy: S| dx.clone() * dx + dy.clone() * dy;
    if c1 <= S::zero() || c2.is_zero() {
        return d2(wx, wy);
    }
    if c1 >= c2 {
        return d2(p.x.clone() - b.x.clone(), p.y.clone() - b.y.clone());
    }
    d2(wx, wy) - c1.clone() * c1 / c2
}

/// N-ary boolean overlay. `keep` receives, for each operand, whether the
/// current cell is inside it, and decides membership in the output.
pub fn overlay<S: Scalar>(operands: &[&Region<S>], keep: &dyn Fn(&[bool]) -> bool) -> Region<S> {
    // 1. Breakpoints: slab walls plus boundary crossings between operands.
    let mut cuts: Vec<OrdScalar<S>> = Vec::new();
    for r in operands {
        for slab in &r.slabs {
            cuts.push(OrdScalar(slab.x0.clone()));
            cuts.push(OrdScalar(slab.x1.clone()));
        }
    }
    let segs: Vec<Vec<BoundarySeg<S>>> = operands.iter().map(|r| r.boundary_segments()).collect();
    for i in 0..operands.len() {
        for j in i + 1..operands.len() {
            for a in &segs[i] {
                for b in &segs[j] {
                    let lo = a.x0.clone().max_of(b.x0.clone());
                    let hi = a.x1.clone().min_of(b.x1.clone());
                    if lo >= hi {
                        continue;
                    }
                    // Solve for y_a(x) == y_b(x): slopes are scaled by the
                    // segment widths, so cross-multiply to stay division-free
                    // until the final quotient.
                    let wa = a.x1.clone() - a.x0.clone();
                    let wb = b.x1.clone() - b.x0.clone();
                    let sa = (a.y1.clone() - a.y0.clone()) / wa.clone();
                    let sb = (b.y1.clone() - b.y0.clone()) / wb.clone();
                    let d = sa.clone() - sb.clone();
                    if d.is_zero() {
                        continue;
                    }
                    let ca = a.y0.clone() - sa * a.x0.clone();
                    let cb = b.y0.clone() - sb * b.x0.clone();
                    let x = (cb - ca) / d;
                    if x > lo && x < hi {
                        cuts.push(OrdScalar(x));
                    }
                }
            }
        }
    }
    cuts.sort();
    cuts.dedup();

    // 2. Per elementary slab, collect operand bounds and sweep in y.
    let mut cursors = vec![0usize; operands.len()];
    let mut slabs: Vec<Slab<S>> = Vec::new();
    let mut depth = vec![0i32; operands.len()];
    let mut mask = vec![false; operands.len()];
    for w in cuts.windows(2) {
        let (a, b) = (&w[0].0, &w[1].0);

        // (sort key, open?, operand, y at a, y at b)
        let mut bounds: Vec<(S, bool, usize, S, S)> = Vec::new();
        for (op, region) in operands.iter().enumerate() {
            while cursors[op] < region.slabs.len() && region.slabs[cursors[op]].x1 <= *a {
                cursors[op] += 1;
            }
            let Some(slab) = region.slabs.get(cursors[op]) else {
                continue;
            };
            if !(slab.x0 <= *a && *b <= slab.x1) {
                continue;
            }
            for t in &slab.traps {
                let lo_a = t.lo_at(&slab.x0, &slab.x1, a);
                let lo_b = t.lo_at(&slab.x0, &slab.x1, b);
                let hi_a = t.hi_at(&slab.x0, &slab.x1, a);
                let hi_b = t.hi_at(&slab.x0, &slab.x1, b);
                bounds.push((lo_a.clone() + lo_b.clone(), true, op, lo_a, lo_b));
                bounds.push((hi_a.clone() + hi_b.clone(), false, op, hi_a, hi_b));
            }
        }
        if bounds.is_empty() {
            continue;
        }
        // Opens sort before closes at the same height so that touching
        // closed sets merge seamlessly.
        bounds.sort_by(|u, v| {
            u.0.cmp_total(&v.0)
                .then_with(|| (!u.1).cmp(&(!v.1)))
        });

        for d in depth.iter_mut() {
            *d = 0;
        }
        for m in mask.iter_mut() {
            *m = false;
        }
        let mut inside = false;
        let mut open_bound: Option<(S, S)> = None;
        let mut traps: Vec<Trap<S>> = Vec::new();
        for (_, is_open, op, y_a, y_b) in bounds {
            depth[op] += if is_open { 1 } else { -1 };
            mask[op] = depth[op] > 0;
            let now = keep(&mask);
            if now && !inside {
                open_bound = Some((y_a, y_b));
            } else if !now && inside {
                let (lo0, lo1) = open_bound.take().expect("open bound");
                let trap = Trap {
                    lo0,
                    lo1,
                    hi0: y_a,
                    hi1: y_b,
                };
                if !trap.is_degenerate() {
                    traps.push(trap);
                }
            }
            inside = now;
        }
        debug_assert!(!inside, "region left open at slab top");
        merge_stacked_traps(&mut traps);
        if !traps.is_empty() {
            slabs.push(Slab {
                x0: a.clone(),
                x1: b.clone(),
                traps,
            });
        }
    }
    let mut region = Region { slabs };
    region.merge_adjacent_slabs();
    region
}

pub fn union_pair<S: Scalar>(a: &Region<S>, b: &Region<S>) -> Region<S> {
    overlay(&[a, b], &|m| m.iter().any(|&x| x))
}

pub fn intersect_pair<S: Scalar>(a: &Region<S>, b: &Region<S>) -> Region<S> {
    overlay(&[a, b], &|m| m.iter().all(|&x| x))
}

pub fn union_of_convex<S: Scalar>(polys: &[ConvexPolygon<S>]) -> Region<S> {
    let regions: Vec<Region<S>> = polys.iter().map(Region::from_convex).collect();
    let refs: Vec<&Region<S>> = regions.iter().collect();
    if refs.is_empty() {
        return Region::empty();
    }
    overlay(&refs, &|m| m.iter().any(|&x| x))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra] = rb;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rint, Rat};

    fn pt(x: i64, y: i64) -> Point2<Rat> {
        Point2::new(rint(x), rint(y))
    }

    fn square(x: i64, y: i64, side: i64) -> ConvexPolygon<Rat> {
        ConvexPolygon::hull_of(vec![
            pt(x, y),
            pt(x + side, y),
            pt(x + side, y + side),
            pt(x, y + side),
        ])
    }

    #[test]
    fn convex_region_area_and_containment() {
        let hexagon = ConvexPolygon::hull_of(vec![
            pt(-1, -1),
            pt(0, -1),
            pt(1, 0),
            pt(1, 1),
            pt(0, 1),
            pt(-1, 0),
        ]);
        let region = Region::from_convex(&hexagon);
        assert_eq!(region.area(), rint(3));
        assert!(region.contains_point(&pt(0, 0)));
        assert!(region.contains_point(&pt(1, 1)));
        assert!(!region.contains_point(&Point2::new(rat(3, 4), Rat::from_decimal("-0.9").unwrap())));
    }

    #[test]
    fn union_of_overlapping_squares() {
        let region = union_of_convex(&[square(0, 0, 2), square(1, 1, 2)]);
        assert_eq!(region.area(), rint(7));
        assert_eq!(region.component_count(), 1);
        assert!(region.contains_point(&pt(2, 2)));
        assert!(!region.contains_point(&pt(0, 3)));
    }

    #[test]
    fn union_of_disjoint_squares() {
        let region = union_of_convex(&[square(0, 0, 1), square(3, 3, 1)]);
        assert_eq!(region.area(), rint(2));
        assert_eq!(region.component_count(), 2);
    }

    #[test]
    fn union_of_edge_sharing_squares_merges() {
        let region = union_of_convex(&[square(0, 0, 1), square(1, 0, 1)]);
        assert_eq!(region.area(), rint(2));
        assert_eq!(region.component_count(), 1);
        // The shared wall vanishes entirely.
        assert_eq!(region.slabs.len(), 1);
        assert!(region.contains_point(&pt(1, 0)));
    }

    #[test]
    fn corner_touching_squares_are_one_component() {
        let region = union_of_convex(&[square(0, 0, 1), square(1, 1, 1)]);
        assert_eq!(region.area(), rint(2));
        assert_eq!(region.component_count(), 1);
    }

    #[test]
    fn intersection_strip() {
        let a = Region::from_convex(&square(0, 0, 1));
        let b = Region::from_convex(&ConvexPolygon::hull_of(vec![
            Point2::new(rat(1, 2), rint(0)),
            Point2::new(rat(3, 2), rint(0)),
            Point2::new(rat(3, 2), rint(1)),
            Point2::new(rat(1, 2), rint(1)),
        ]));
        let inter = intersect_pair(&a, &b);
        assert_eq!(inter.area(), rat(1, 2));
    }

    #[test]
    fn intersection_of_disjoint_is_empty() {
        let a = Region::from_convex(&square(0, 0, 1));
        let b = Region::from_convex(&square(5, 5, 1));
        assert!(intersect_pair(&a, &b).is_empty());
    }

    #[test]
    fn tangent_squares_intersect_to_nothing() {
        // Sharing only an edge: the intersection is lower-dimensional and
        // is dropped.
        let a = Region::from_convex(&square(0, 0, 1));
        let b = Region::from_convex(&square(1, 0, 1));
        assert!(intersect_pair(&a, &b).is_empty());
    }

    #[test]
    fn overlay_with_diagonal_crossings() {
        let diamond = ConvexPolygon::hull_of(vec![pt(1, 0), pt(2, 1), pt(1, 2), pt(0, 1)]);
        let sq = square(0, 0, 2);
        let inter = intersect_pair(&Region::from_convex(&diamond), &Region::from_convex(&sq));
        assert_eq!(inter.area(), rint(2));
        let uni = union_pair(&Region::from_convex(&diamond), &Region::from_convex(&sq));
        assert_eq!(uni.area(), rint(4));
    }

    #[test]
    fn distance_to_region() {
        let region = Region::from_convex(&square(0, 0, 2));
        assert_eq!(region.dist2_to_point(&pt(1, 1)), rint(0));
        assert_eq!(region.dist2_to_point(&pt(3, 1)), rint(1));
        assert_eq!(region.dist2_to_point(&pt(4, 4)), rint(8));
    }

    #[test]
    fn sampled_points_are_inside() {
        let region = union_of_convex(&[square(0, 0, 2), square(4, 0, 1)]);
        let pts = region.sample_interior_points(64, 11);
        assert_eq!(pts.len(), 64);
        for p in &pts {
            assert!(region.contains_point(p), "{:?}", p);
        }
    }

    #[test]
    fn union_hole_formation() {
        // Four rectangles forming a ring around a 1x1 hole.
        let rects = [
            ConvexPolygon::hull_of(vec![pt(0, 0), pt(3, 0), pt(3, 1), pt(0, 1)]),
            ConvexPolygon::hull_of(vec![pt(0, 2), pt(3, 2), pt(3, 3), pt(0, 3)]),
            ConvexPolygon::hull_of(vec![pt(0, 0), pt(1, 0), pt(1, 3), pt(0, 3)]),
            ConvexPolygon::hull_of(vec![pt(2, 0), pt(3, 0), pt(3, 3), pt(2, 3)]),
        ];
        let region = union_of_convex(&rects);
        assert_eq!(region.area(), rint(8));
        assert_eq!(region.component_count(), 1);
        assert!(!region.contains_point(&Point2::new(rat(3, 2), rat(3, 2))));
        assert!(region.contains_point(&Point2::new(rat(3, 2), rat(1, 2))));
    }
}
