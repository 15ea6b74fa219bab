//! Extraction of simple polygons with holes from a slab region, and the
//! validity checks the output rings must satisfy: simple rings,
//! counterclockwise outers, clockwise holes, pairwise interior-disjoint
//! polygons.

use super::region::{intersect_pair, overlay, Region};
use crate::geom::{cross, orient, ring_area2, Point2};
use crate::scalar::{OrdScalar, Scalar};
use std::cmp::Ordering;
use std::collections::BTreeMap;

/// A simple polygon: one counterclockwise outer ring, clockwise holes.
#[derive(Clone, Debug, PartialEq)]
pub struct PolygonWithHoles<S> {
    pub outer: Vec<Point2<S>>,
    pub holes: Vec<Vec<Point2<S>>>,
}

/// A set of interior-disjoint polygons representing a closed point set.
#[derive(Clone, Debug, PartialEq)]
pub struct RegionSet<S> {
    pub polygons: Vec<PolygonWithHoles<S>>,
}

impl<S: Scalar> RegionSet<S> {
    pub fn empty() -> Self {
        RegionSet {
            polygons: Vec::new(),
        }
    }

    pub fn polygon_count(&self) -> usize {
        self.polygons.len()
    }

    pub fn rings(&self) -> impl Iterator<Item = &Vec<Point2<S>>> {
        self.polygons
            .iter()
            .flat_map(|p| std::iter::once(&p.outer).chain(p.holes.iter()))
    }
}

struct DirEdge<S> {
    a: Point2<S>,
    b: Point2<S>,
    comp: usize,
}

type VertexKey<S> = (OrdScalar<S>, OrdScalar<S>);

fn key_of<S: Scalar>(p: &Point2<S>) -> VertexKey<S> {
    (OrdScalar(p.x.clone()), OrdScalar(p.y.clone()))
}

impl<S: Scalar> Region<S> {
    /// Directed boundary edges with the interior on their left, tagged by
    /// connected component.
    fn directed_boundary_edges(&self) -> Vec<DirEdge<S>> {
        let (labels, _) = self.trap_components();
        let mut edges = Vec::new();
        for (si, slab) in self.slabs.iter().enumerate() {
            for (k, t) in slab.traps.iter().enumerate() {
                let comp = labels[si][k];
                // Bottom runs rightward (interior above), top leftward.
                push_edge(
                    &mut edges,
                    Point2::new(slab.x0.clone(), t.lo0.clone()),
                    Point2::new(slab.x1.clone(), t.lo1.clone()),
                    comp,
                );
                push_edge(
                    &mut edges,
                    Point2::new(slab.x1.clone(), t.hi1.clone()),
                    Point2::new(slab.x0.clone(), t.hi0.clone()),
                    comp,
                );
            }
        }

        // Vertical walls: at every slab boundary, the parts covered on one
        // side only. Covered east of the wall runs downward, west upward.
        let mut walls: BTreeMap<OrdScalar<S>, (Vec<(S, S, usize)>, Vec<(S, S, usize)>)> =
            BTreeMap::new();
        for (si, slab) in self.slabs.iter().enumerate() {
            let left_entry = walls.entry(OrdScalar(slab.x1.clone())).or_default();
            for (k, t) in slab.traps.iter().enumerate() {
                left_entry
                    .0
                    .push((t.lo1.clone(), t.hi1.clone(), labels[si][k]));
            }
            let right_entry = walls.entry(OrdScalar(slab.x0.clone())).or_default();
            for (k, t) in slab.traps.iter().enumerate() {
                right_entry
                    .1
                    .push((t.lo0.clone(), t.hi0.clone(), labels[si][k]));
            }
        }
        for (x, (left, right)) in walls {
            for (lo, hi, comp) in subtract_intervals(&right, &left) {
                // East-only coverage: walk downward so the interior is left.
                push_edge(
                    &mut edges,
                    Point2::new(x.0.clone(), hi),
                    Point2::new(x.0.clone(), lo),
                    comp,
                );
            }
            for (lo, hi, comp) in subtract_intervals(&left, &right) {
                push_edge(
                    &mut edges,
                    Point2::new(x.0.clone(), lo),
                    Point2::new(x.0.clone(), hi),
                    comp,
                );
            }
        }
        edges
    }

    /// Converts the region into simple polygons with holes. Boundary walks
    /// keep the interior on the left, so outer rings come out
    /// counterclockwise and holes clockwise; collinear slab-wall vertices
    /// are fused away.
    pub fn to_polygons(&self) -> RegionSet<S> {
        let edges = self.directed_boundary_edges();
        let mut out_map: BTreeMap<VertexKey<S>, Vec<usize>> = BTreeMap::new();
        for (i, e) in edges.iter().enumerate() {
            out_map.entry(key_of(&e.a)).or_default().push(i);
        }
        let mut used = vec![false; edges.len()];
        // (ring, component, area2)
        let mut rings: Vec<(Vec<Point2<S>>, usize, S)> = Vec::new();
        for start in 0..edges.len() {
            if used[start] {
                continue;
            }
            let mut ring = vec![edges[start].a.clone()];
            let mut cur = start;
            loop {
                used[cur] = true;
                ring.push(edges[cur].b.clone());
                let next = pick_next(&edges, &out_map, cur);
                if next == start {
                    break;
                }
                debug_assert!(!used[next], "edge revisited during ring walk");
                cur = next;
            }
            ring.pop(); // closing vertex duplicates the start
            simplify_ring(&mut ring);
            if ring.len() < 3 {
                continue;
            }
            let area2 = ring_area2(&ring);
            if area2.is_zero() {
                continue;
            }
            rotate_to_min(&mut ring);
            rings.push((ring, edges[start].comp, area2));
        }

        // Assemble per component: positive rings are outers.
        let mut comps: BTreeMap<usize, (Vec<(Vec<Point2<S>>, S)>, Vec<Vec<Point2<S>>>)> =
            BTreeMap::new();
        for (ring, comp, area2) in rings {
            let entry = comps.entry(comp).or_default();
            if area2 > S::zero() {
                entry.0.push((ring, area2));
            } else {
                entry.1.push(ring);
            }
        }
        let mut polygons = Vec::new();
        for (_, (outers, holes)) in comps {
            if outers.len() == 1 {
                let (outer, _) = outers.into_iter().next().unwrap();
                polygons.push(PolygonWithHoles { outer, holes });
                continue;
            }
            // A pinched component has several tangent outers; place each
            // hole inside the outer that contains its interior.
            let mut polys: Vec<PolygonWithHoles<S>> = outers
                .iter()
                .map(|(outer, _)| PolygonWithHoles {
                    outer: outer.clone(),
                    holes: Vec::new(),
                })
                .collect();
            for hole in holes {
                let probe = interior_point_of_ring(&hole);
                let idx = outers
                    .iter()
                    .enumerate()
                    .filter(|(_, (outer, _))| point_in_ring(&probe, outer))
                    .min_by(|(_, (_, a1)), (_, (_, a2))| a1.cmp_total(a2))
                    .map(|(i, _)| i)
                    .expect("hole must lie inside one outer of its component");
                polys[idx].holes.push(hole);
            }
            polygons.extend(polys);
        }
        polygons.sort_by(|p, q| {
            key_of(&p.outer[0])
                .cmp(&key_of(&q.outer[0]))
                .then_with(|| p.outer.len().cmp(&q.outer.len()))
        });
        RegionSet { polygons }
    }
}

fn push_edge<S: Scalar>(edges: &mut Vec<DirEdge<S>>, a: Point2<S>, b: Point2<S>, comp: usize) {
    if a != b {
        edges.push(DirEdge { a, b, comp });
    }
}

/// Among the outgoing edges at the endpoint of `cur`, the boundary
/// continuation is the one reached first when rotating clockwise from the
/// reversed incoming direction; this keeps the interior on the left and
/// splits pinch vertices into tangent rings.
fn pick_next<S: Scalar>(
    edges: &[DirEdge<S>],
    out_map: &BTreeMap<VertexKey<S>, Vec<usize>>,
    cur: usize,
) -> usize {
    let v = &edges[cur].b;
    let rev = edges[cur].a.sub(v); // reversed incoming direction
    let candidates = out_map
        .get(&key_of(v))
        .expect("boundary vertex has outgoing edge");
    let mut best: Option<usize> = None;
    for &cand in candidates {
        let better = match best {
            None => true,
            Some(b) => {
                let db = edges[b].b.sub(&edges[b].a);
                let dc = edges[cand].b.sub(&edges[cand].a);
                cw_compare(&rev, &dc, &db) == Ordering::Less
            }
        };
        if better {
            best = Some(cand);
        }
    }
    best.expect("ring walk continuation")
}

/// Orders direction `u` against `v` by clockwise angle from `rev`,
/// exactly: class 0 is the clockwise half-plane, 1 straight ahead, 2 the
/// counterclockwise half-plane, 3 backtracking along `rev`.
fn cw_compare<S: Scalar>(rev: &Point2<S>, u: &Point2<S>, v: &Point2<S>) -> Ordering {
    let class = |e: &Point2<S>| -> u8 {
        let cr = rev.x.clone() * e.y.clone() - rev.y.clone() * e.x.clone();
        let dot = rev.x.clone() * e.x.clone() + rev.y.clone() * e.y.clone();
        match cr.cmp_total(&S::zero()) {
            Ordering::Less => 0,
            Ordering::Greater => 2,
            Ordering::Equal => {
                if dot < S::zero() {
                    1
                } else {
                    3
                }
            }
        }
    };
    let (cu, cv) = (class(u), class(v));
    if cu != cv {
        return cu.cmp(&cv);
    }
    if cu == 0 || cu == 2 {
        let cr = u.x.clone() * v.y.clone() - u.y.clone() * v.x.clone();
        return match cr.cmp_total(&S::zero()) {
            Ordering::Less => Ordering::Less,
            Ordering::Greater => Ordering::Greater,
            Ordering::Equal => Ordering::Equal,
        };
    }
    Ordering::Equal
}

/// Pieces of the `a` intervals not covered by the `b` intervals; carries
/// the component tag of the `a` interval.
fn subtract_intervals<S: Scalar>(
    a: &[(S, S, usize)],
    b: &[(S, S, usize)],
) -> Vec<(S, S, usize)> {
    let mut out = Vec::new();
    for (alo, ahi, comp) in a {
        let mut cur = alo.clone();
        for (blo, bhi, _) in b {
            if *bhi <= cur || *blo >= *ahi {
                continue;
            }
            if *blo > cur {
                out.push((cur.clone(), blo.clone(), *comp));
            }
            if *bhi > cur {
                cur = bhi.clone();
            }
            if cur >= *ahi {
                break;
            }
        }
        if cur < *ahi {
            out.push((cur, ahi.clone(), *comp));
        }
    }
    out
}

/// Removes repeated and collinear-straight vertices from a closed ring until
/// stable.
fn simplify_ring<S: Scalar>(ring: &mut Vec<Point2<S>>) {
    loop {
        let n = ring.len();
        if n < 3 {
            return;
        }
        let mut removed = false;
        let mut i = 0;
        while i < ring.len() && ring.len() >= 3 {
            let n = ring.len();
            let prev = ring[(i + n - 1) % n].clone();
            let v = ring[i].clone();
            let next = ring[(i + 1) % n].clone();
            if v == prev || v == next || cross(&prev, &v, &next).is_zero() {
                ring.remove(i);
                removed = true;
            } else {
                i += 1;
            }
        }
        if !removed {
            return;
        }
    }
}

fn rotate_to_min<S: Scalar>(ring: &mut Vec<Point2<S>>) {
    let min_idx = ring
        .iter()
        .enumerate()
        .min_by(|(_, p), (_, q)| p.cmp_xy(q))
        .map(|(i, _)| i)
        .unwrap_or(0);
    ring.rotate_left(min_idx);
}

/// A point strictly inside a simple ring, found on a vertical chord
/// between distinct vertex x-coordinates.
fn interior_point_of_ring<S: Scalar>(ring: &[Point2<S>]) -> Point2<S> {
    let mut xs: Vec<OrdScalar<S>> = ring.iter().map(|p| OrdScalar(p.x.clone())).collect();
    xs.sort();
    xs.dedup();
    assert!(xs.len() >= 2, "ring with area has two distinct x's");
    let x_star = (xs[0].0.clone() + xs[1].0.clone()).half();
    let mut crossings: Vec<OrdScalar<S>> = Vec::new();
    let n = ring.len();
    for i in 0..n {
        let (p, q) = (&ring[i], &ring[(i + 1) % n]);
        let (lft, rgt) = if p.x < q.x { (p, q) } else { (q, p) };
        if lft.x < x_star && x_star < rgt.x {
            let y = lft.y.clone()
                + (rgt.y.clone() - lft.y.clone()) * (x_star.clone() - lft.x.clone())
                    / (rgt.x.clone() - lft.x.clone());
            crossings.push(OrdScalar(y));
        }
    }
    crossings.sort();
    assert!(crossings.len() >= 2, "vertical chord must cross the ring");
    let y_star = (crossings[0].0.clone() + crossings[1].0.clone()).half();
    Point2::new(x_star, y_star)
}

/// Even-odd membership for a point that does not lie on the ring. Vertical
/// ray upward with the half-open x-rule, so ray-through-vertex cases are
/// counted once.
fn point_in_ring<S: Scalar>(p: &Point2<S>, ring: &[Point2<S>]) -> bool {
    let n = ring.len();
    let mut inside = false;
    for i in 0..n {
        let (a, b) = (&ring[i], &ring[(i + 1) % n]);
        let spans = (a.x <= p.x && p.x < b.x) || (b.x <= p.x && p.x < a.x);
        if !spans {
            continue;
        }
        let y = a.y.clone()
            + (b.y.clone() - a.y.clone()) * (p.x.clone() - a.x.clone())
                / (b.x.clone() - a.x.clone());
        if y > p.y {
            inside = !inside;
        }
    }
    inside
}

/// Structural validation of a polygon set: ring sizes and orientations,
/// simplicity, holes inside their outer, pairwise interior-disjointness,
/// and (optionally) exact point-set equality with a reference region.
pub fn validate_region_set<S: Scalar>(
    set: &RegionSet<S>,
    reference: Option<&Region<S>>,
) -> Result<(), String> {
    for (pi, poly) in set.polygons.iter().enumerate() {
        if poly.outer.len() < 3 {
            return Err(format!("polygon {}: outer ring has <3 vertices", pi));
        }
        if ring_area2(&poly.outer) <= S::zero() {
            return Err(format!("polygon {}: outer ring not counterclockwise", pi));
        }
        check_simple(&poly.outer).map_err(|e| format!("polygon {} outer: {}", pi, e))?;
        let outer_region = Region::from_rings(std::slice::from_ref(&poly.outer));
        for (hi, hole) in poly.holes.iter().enumerate() {
            if hole.len() < 3 {
                return Err(format!("polygon {} hole {}: <3 vertices", pi, hi));
            }
            if ring_area2(hole) >= S::zero() {
                return Err(format!("polygon {} hole {}: not clockwise", pi, hi));
            }
            check_simple(hole).map_err(|e| format!("polygon {} hole {}: {}", pi, hi, e))?;
            for v in hole {
                if !outer_region.contains_point(v) {
                    return Err(format!(
                        "polygon {} hole {}: vertex outside outer ring",
                        pi, hi
                    ));
                }
            }
        }
    }
    // Interior-disjointness via exact intersection areas.
    let regions: Vec<Region<S>> = set
        .polygons
        .iter()
        .map(|p| {
            let mut rings: Vec<Vec<Point2<S>>> = vec![p.outer.clone()];
            rings.extend(p.holes.iter().cloned());
            Region::from_rings(&rings)
        })
        .collect();
    for i in 0..regions.len() {
        for j in i + 1..regions.len() {
            let overlap = intersect_pair(&regions[i], &regions[j]);
            if !overlap.area().is_zero() {
                return Err(format!("polygons {} and {} overlap", i, j));
            }
        }
    }
    if let Some(reference) = reference {
        let rebuilt = regions
            .iter()
            .fold(Region::empty(), |acc, r| super::region::union_pair(&acc, r));
        let sym = overlay(&[reference, &rebuilt], &|m| m[0] != m[1]);
        if !sym.area().is_zero() {
            return Err("polygon set does not match the reference region".into());
        }
    }
    Ok(())
}

fn check_simple<S: Scalar>(ring: &[Point2<S>]) -> Result<(), String> {
    let n = ring.len();
    for i in 0..n {
        for j in i + 1..n {
            if ring[i] == ring[j] {
                return Err(format!("repeated vertex at {} and {}", i, j));
            }
        }
    }
    for i in 0..n {
        let (a, b) = (&ring[i], &ring[(i + 1) % n]);
        for j in i + 1..n {
            if j == i || (j + 1) % n == i || (i + 1) % n == j {
                continue; // adjacent edges share exactly one endpoint
            }
            let (c, d) = (&ring[j], &ring[(j + 1) % n]);
            if segments_touch(a, b, c, d) {
                return Err(format!("edges {} and {} intersect", i, j));
            }
        }
    }
    Ok(())
}

/// Whether two closed segments share any point.
fn segments_touch<S: Scalar>(
    a: &Point2<S>,
    b: &Point2<S>,
    c: &Point2<S>,
    d: &Point2<S>,
) -> bool {
    let d1 = orient(c, d, a);
    let d2 = orient(c, d, b);
    let d3 = orient(a, b, c);
    let d4 = orient(a, b, d);
    if d1 != d2 && d3 != d4 && d1 != Ordering::Equal && d2 != Ordering::Equal {
        return true;
    }
    let on = |p: &Point2<S>, q: &Point2<S>, r: &Point2<S>| -> bool {
        orient(p, q, r) == Ordering::Equal
            && r.x >= p.x.clone().min_of(q.x.clone())
            && r.x <= p.x.clone().max_of(q.x.clone())
            && r.y >= p.y.clone().min_of(q.y.clone())
            && r.y <= p.y.clone().max_of(q.y.clone())
    };
    on(c, d, a) || on(c, d, b) || on(a, b, c) || on(a, b, d)
}

#[cfg(test)]
mod tests {
    use super::super::region::{union_of_convex, union_pair};
    use super::*;
    use num_traits::Zero;
    use crate::geom::ConvexPolygon;
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
    fn single_square_ring() {
        let region = Region::from_convex(&square(0, 0, 2));
        let set = region.to_polygons();
        assert_eq!(set.polygon_count(), 1);
        assert_eq!(set.polygons[0].outer, vec![pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)]);
        assert!(set.polygons[0].holes.is_empty());
        validate_region_set(&set, Some(&region)).unwrap();
    }

    #[test]
    fn l_shaped_union_ring() {
        let region = union_of_convex(&[square(0, 0, 2), square(2, 0, 1)]);
        let set = region.to_polygons();
        assert_eq!(set.polygon_count(), 1);
        let outer = &set.polygons[0].outer;
        assert_eq!(
            outer,
            &vec![pt(0, 0), pt(3, 0), pt(3, 1), pt(2, 1), pt(2, 2), pt(0, 2)]
        );
        validate_region_set(&set, Some(&region)).unwrap();
    }

    #[test]
    fn disjoint_squares_two_polygons() {
        let region = union_of_convex(&[square(0, 0, 1), square(3, 0, 1)]);
        let set = region.to_polygons();
        assert_eq!(set.polygon_count(), 2);
        validate_region_set(&set, Some(&region)).unwrap();
    }

    #[test]
    fn ring_with_hole() {
        let rects = [
            ConvexPolygon::hull_of(vec![pt(0, 0), pt(3, 0), pt(3, 1), pt(0, 1)]),
            ConvexPolygon::hull_of(vec![pt(0, 2), pt(3, 2), pt(3, 3), pt(0, 3)]),
            ConvexPolygon::hull_of(vec![pt(0, 0), pt(1, 0), pt(1, 3), pt(0, 3)]),
            ConvexPolygon::hull_of(vec![pt(2, 0), pt(3, 0), pt(3, 3), pt(2, 3)]),
        ];
        let region = union_of_convex(&rects);
        let set = region.to_polygons();
        assert_eq!(set.polygon_count(), 1);
        assert_eq!(set.polygons[0].holes.len(), 1);
        let hole = &set.polygons[0].holes[0];
        assert_eq!(ring_area2(hole), rint(-2)); // 1x1 hole, clockwise
        validate_region_set(&set, Some(&region)).unwrap();
    }

    #[test]
    fn pinch_point_splits_rings() {
        let region = union_of_convex(&[square(0, 0, 1), square(1, 1, 1)]);
        let set = region.to_polygons();
        assert_eq!(set.polygon_count(), 2);
        validate_region_set(&set, Some(&region)).unwrap();
    }

    #[test]
    fn diagonal_hexagon_roundtrip() {
        let hexagon = ConvexPolygon::hull_of(vec![
            pt(-1, -1),
            pt(0, -1),
            pt(1, 0),
            pt(1, 1),
            pt(0, 1),
            pt(-1, 0),
        ]);
        let region = Region::from_convex(&hexagon);
        let set = region.to_polygons();
        assert_eq!(set.polygon_count(), 1);
        assert_eq!(set.polygons[0].outer.len(), 6);
        validate_region_set(&set, Some(&region)).unwrap();
    }

    #[test]
    fn from_rings_reconstructs_region() {
        let region = union_of_convex(&[square(0, 0, 2), square(1, 1, 2), square(4, 0, 1)]);
        let set = region.to_polygons();
        let mut rings: Vec<Vec<Point2<Rat>>> = Vec::new();
        for p in &set.polygons {
            rings.push(p.outer.clone());
            rings.extend(p.holes.iter().cloned());
        }
        let rebuilt = Region::from_rings(&rings);
        let sym = overlay(&[&region, &rebuilt], &|m| m[0] != m[1]);
        assert!(sym.area().is_zero());
        assert_eq!(rebuilt.area(), region.area());
    }

    #[test]
    fn interior_point_inside() {
        let ring = vec![pt(0, 0), pt(4, 0), pt(4, 3), pt(0, 3)];
        let p = interior_point_of_ring(&ring);
        assert!(point_in_ring(&p, &ring));
        let tri = vec![pt(0, 0), pt(2, 0), pt(0, 2)];
        let p = interior_point_of_ring(&tri);
        assert!(point_in_ring(&p, &tri));
        assert!(!point_in_ring(&pt(5, 5), &tri));
    }

    #[test]
    fn union_pair_matches_polygons() {
        let a = union_of_convex(&[square(0, 0, 3)]);
        let b = union_of_convex(&[square(1, 1, 1)]);
        // b is strictly inside a; the union is just a.
        let u = union_pair(&a, &b);
        assert_eq!(u.area(), rint(9));
        let set = u.to_polygons();
        assert_eq!(set.polygon_count(), 1);
        assert!(set.polygons[0].holes.is_empty());
        assert_eq!(ring_area2(&set.polygons[0].outer), rat(18, 1));
    }
}
