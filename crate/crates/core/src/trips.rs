//! Trips by the rules of the road, separation labels and boundary words.
//!
//! At a vertex with edge-ends in counterclockwise order, the `i`-th right turn from the
//! entry end is its `i`-th counterclockwise successor and the `i`-th left is its `i`-th
//! predecessor. `trip_a` takes the `a`-th right at black vertices and the `a`-th left
//! at white ones, so it leaves by the `a`-th successor at black and the `(4-a)`-th at
//! white.

use std::collections::HashMap;

use crate::error::TripError;
use crate::geometry::{inside_even_odd, Point};
use crate::web::{Color, EdgeKind, EndRef, HourglassWeb, VertexKind};
use crate::word::LatticeWord;

/// One pass along an edge strand.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: usize,
    pub strand: u8,
    pub from: usize,
    pub to: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripPath {
    pub index: usize,
    pub start: usize,
    pub end: usize,
    pub steps: Vec<Step>,
}

impl TripPath {
    /// Exact polyline through the traversed strands.
    pub fn polyline(&self, web: &HourglassWeb) -> Vec<Point> {
        let mut pts = vec![web.vertices[self.start].pos];
        for s in &self.steps {
            pts.extend(strand_points(web, *s));
        }
        pts
    }
}

/// Points after `from` along a strand. Hourglass strands swap sides at the midpoint,
/// offset by an eighth of the edge vector.
fn strand_points(web: &HourglassWeb, s: Step) -> Vec<Point> {
    let e = &web.edges[s.edge];
    let to = web.vertices[s.to].pos;
    if e.kind == EdgeKind::Simple {
        return vec![to];
    }
    let a = web.vertices[e.ends[0]].pos;
    let b = web.vertices[e.ends[1]].pos;
    let d = b - a;
    let delta = d.perp() / 8;
    let sign = if s.strand == 0 { -1 } else { 1 };
    let near_a = a + d / 4 + delta * sign;
    let near_b = a + (d * 3) / 4 - delta * sign;
    if s.from == e.ends[0] {
        vec![near_a, near_b, to]
    } else {
        vec![near_b, near_a, to]
    }
}

fn check_index(a: usize) -> Result<(), TripError> {
    if (1..=3).contains(&a) {
        Ok(())
    } else {
        Err(TripError::BadIndex(a))
    }
}

fn turn(web: &HourglassWeb, v: usize, a: usize) -> usize {
    match web.vertices[v].color {
        Color::Black => a,
        Color::White => 4 - a,
    }
}

fn traverse(web: &HourglassWeb, from: usize, end: EndRef) -> Step {
    let to = web.edges[end.edge].other(from);
    Step { edge: end.edge, strand: end.strand, from, to }
}

/// Next step after arriving by `prev`, or `None` at a boundary vertex.
fn forward(web: &HourglassWeb, prev: Step, a: usize) -> Option<Step> {
    let v = prev.to;
    if web.vertices[v].kind == VertexKind::Boundary {
        return None;
    }
    let rot = &web.rotation[v];
    let k = web.rot_index(v, EndRef { edge: prev.edge, strand: prev.strand }).expect("end at vertex");
    let out = rot[(k + turn(web, v, a)) % rot.len()];
    Some(traverse(web, v, out))
}

/// Step that leads into `next`, or `None` if `next` starts at a boundary vertex.
fn backward(web: &HourglassWeb, next: Step, a: usize) -> Option<Step> {
    let v = next.from;
    if web.vertices[v].kind == VertexKind::Boundary {
        return None;
    }
    let rot = &web.rotation[v];
    let k = web.rot_index(v, EndRef { edge: next.edge, strand: next.strand }).expect("end at vertex");
    let t = turn(web, v, a);
    let inc = rot[(k + rot.len() * 4 - t) % rot.len()];
    let s = traverse(web, v, inc);
    Some(Step { edge: s.edge, strand: s.strand, from: s.to, to: v })
}

fn step_limit(web: &HourglassWeb) -> usize {
    4 * web.rotation.iter().map(Vec::len).sum::<usize>() + 4
}

/// The trip of index `a` from boundary vertex `start`.
pub fn trip_path(web: &HourglassWeb, start: usize, a: usize) -> Result<TripPath, TripError> {
    check_index(a)?;
    if web.vertices.get(start).map(|v| v.kind) != Some(VertexKind::Boundary) {
        return Err(TripError::NotBoundary(start));
    }
    let limit = step_limit(web);
    let mut step = traverse(web, start, web.rotation[start][0]);
    let mut steps = vec![step];
    while let Some(next) = forward(web, step, a) {
        steps.push(next);
        step = next;
        if steps.len() > limit {
            return Err(TripError::Runaway(limit));
        }
    }
    Ok(TripPath { index: a, start, end: step.to, steps })
}

/// The whole trip through one directed step.
fn trip_through(web: &HourglassWeb, s: Step, a: usize) -> Result<TripPath, TripError> {
    let limit = step_limit(web);
    let mut before = Vec::new();
    let mut cur = s;
    while let Some(p) = backward(web, cur, a) {
        before.push(p);
        cur = p;
        if before.len() > limit {
            return Err(TripError::Runaway(limit));
        }
    }
    let start = cur.from;
    before.reverse();
    before.push(s);
    let mut cur = s;
    while let Some(n) = forward(web, cur, a) {
        before.push(n);
        cur = n;
        if before.len() > 2 * limit {
            return Err(TripError::Runaway(limit));
        }
    }
    Ok(TripPath { index: a, start, end: cur.to, steps: before })
}

/// `perm[i] = j` when `trip_a` from `b_{i+1}` ends at `b_{j+1}`; 0-indexed.
pub fn trip_permutation(web: &HourglassWeb, a: usize) -> Result<Vec<usize>, TripError> {
    let pos: HashMap<usize, usize> = web.boundary.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    web.boundary.iter().map(|&b| Ok(pos[&trip_path(web, b, a)?.end])).collect()
}

/// A separation labeling of a web.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    /// Label of each simple edge, `None` on hourglasses.
    pub simple: Vec<Option<u8>>,
    /// Label pair of each hourglass, `None` on simple edges.
    pub hourglass: Vec<Option<[u8; 2]>>,
}

impl Labeling {
    /// Colour set of an edge, as a sorted list.
    pub fn colors(&self, edge: usize) -> Vec<u8> {
        match (self.simple[edge], self.hourglass[edge]) {
            (Some(x), _) => vec![x],
            (_, Some(p)) => p.to_vec(),
            _ => vec![],
        }
    }
}

/// Separation label of one simple edge.
pub fn separation_label_simple(web: &HourglassWeb, edge: usize) -> Result<u8, TripError> {
    let mut ctx = SepContext::new(web);
    ctx.label(edge)
}

/// Label set of one hourglass edge, checked at both endpoints.
pub fn separation_label_hourglass(web: &HourglassWeb, edge: usize) -> Result<[u8; 2], TripError> {
    let lab = separation_labels(web)?;
    lab.hourglass[edge].ok_or(TripError::NotHourglass(edge))
}

/// Labels of all edges.
pub fn separation_labels(web: &HourglassWeb) -> Result<Labeling, TripError> {
    let mut ctx = SepContext::new(web);
    let m = web.edges.len();
    let mut simple = vec![None; m];
    for e in &web.edges {
        if e.kind == EdgeKind::Simple {
            simple[e.id] = Some(ctx.label(e.id)?);
        }
    }
    let mut hourglass = vec![None; m];
    for e in &web.edges {
        if e.kind != EdgeKind::Hourglass {
            continue;
        }
        let mut sets = Vec::new();
        for &v in &e.ends {
            let mut rest: Vec<u8> = (1..=4).collect();
            for r in &web.rotation[v] {
                if r.edge == e.id {
                    continue;
                }
                let l = simple[r.edge].ok_or_else(|| {
                    TripError::Web(crate::error::WebError::Invariant(format!(
                        "vertex {v} carries two hourglasses"
                    )))
                })?;
                rest.retain(|&x| x != l);
            }
            sets.push(rest);
        }
        if sets[0] != sets[1] || sets[0].len() != 2 {
            return Err(TripError::Improper { edge: e.id, left: sets[0].clone(), right: sets[1].clone() });
        }
        hourglass[e.id] = Some([sets[0][0], sets[0][1]]);
    }
    Ok(Labeling { simple, hourglass })
}

/// Whether labels at every internal vertex partition `{1,2,3,4}`.
pub fn is_proper(web: &HourglassWeb, lab: &Labeling) -> bool {
    web.vertices.iter().filter(|v| v.kind == VertexKind::Internal).all(|v| {
        let mut seen = [false; 5];
        let mut count = 0;
        let mut edges: Vec<usize> = web.rotation[v.id].iter().map(|r| r.edge).collect();
        edges.dedup();
        if edges.len() > 1 && edges[0] == edges[edges.len() - 1] {
            edges.pop();
        }
        for e in edges {
            for c in lab.colors(e) {
                if seen[c as usize] {
                    return false;
                }
                seen[c as usize] = true;
                count += 1;
            }
        }
        count == 4
    })
}

/// Boundary word: labels at `b_1..b_n`, negated at white vertices, with split pairs.
pub fn boundary_word(web: &HourglassWeb) -> Result<LatticeWord, TripError> {
    let mut ctx = SepContext::new(web);
    let mut letters = Vec::with_capacity(web.n());
    for &b in &web.boundary {
        let edge = web.rotation[b][0].edge;
        let l = ctx.label(edge)? as i32;
        letters.push(if web.vertices[b].color == Color::White { -l } else { l });
    }
    LatticeWord::new(4, letters, web.split_pairs.clone())
        .map_err(|e| TripError::Web(crate::error::WebError::Invariant(e.to_string())))
}

/// Closed trip curve plus a lazily filled inside flag per face.
type Curve = (Vec<Point>, Vec<Option<bool>>);

/// Shared state for label computations: faces and cached closed trip curves.
struct SepContext<'w> {
    web: &'w HourglassWeb,
    face_points: Vec<crate::geometry::RatPoint>,
    base: usize,
    /// Face on the left of each dart `(from, to, edge)`.
    dart_face: HashMap<(usize, usize), usize>,
    bpos: HashMap<usize, usize>,
    curves: HashMap<(usize, usize), Curve>,
}

impl<'w> SepContext<'w> {
    fn new(web: &'w HourglassWeb) -> Self {
        let faces = web.faces();
        let base = web.base_face(&faces);
        let mut dart_face = HashMap::new();
        for f in &faces {
            for &(x, _, e) in &f.darts {
                if let Some(e) = e {
                    dart_face.insert((x, e), f.id);
                }
            }
        }
        let bpos = web.boundary.iter().enumerate().map(|(i, &b)| (b, i)).collect();
        SepContext {
            web,
            face_points: faces.iter().map(|f| f.point).collect(),
            base,
            dart_face,
            bpos,
            curves: HashMap::new(),
        }
    }

    fn label(&mut self, edge: usize) -> Result<u8, TripError> {
        let web = self.web;
        let e = web.edges.get(edge).ok_or(TripError::NotSimple(edge))?;
        if e.kind != EdgeKind::Simple {
            return Err(TripError::NotSimple(edge));
        }
        let [bv, wv] = e.ends;
        // Face on the right of black -> white is on the left of white -> black.
        let face = self.dart_face[&(wv, edge)];
        let step = Step { edge, strand: 0, from: bv, to: wv };
        let mut count = 0;
        for a in 1..=3 {
            let path = trip_through(web, step, a)?;
            if self.separates(&path, face) {
                count += 1;
            }
        }
        Ok(count + 1)
    }

    fn separates(&mut self, path: &TripPath, face: usize) -> bool {
        let key = (path.index, path.start);
        if !self.curves.contains_key(&key) {
            let mut poly = path.polyline(self.web);
            let n = self.web.boundary.len();
            let (ie, is) = (self.bpos[&path.end], self.bpos[&path.start]);
            // Close along the boundary, clockwise from the end back to the start.
            let mut i = (ie + 1) % n;
            while i != is {
                poly.push(self.web.vertices[self.web.boundary[i]].pos);
                i = (i + 1) % n;
            }
            let cache = vec![None; self.face_points.len()];
            self.curves.insert(key, (poly, cache));
        }
        let base = self.base;
        let points = &self.face_points;
        let (poly, cache) = self.curves.get_mut(&key).expect("cached curve");
        let mut side = |f: usize| *cache[f].get_or_insert_with(|| inside_even_odd(poly, points[f]));
        side(face) != side(base)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_partitions::{Box3, PlanePartition};

    fn single() -> HourglassWeb {
        HourglassWeb::from_plane_partition(&PlanePartition::full(Box3::cube(1))).unwrap()
    }

    #[test]
    fn single_box_word() {
        let w = single();
        assert_eq!(boundary_word(&w).unwrap().to_string(), "1 -4 2 -2 4 -1");
    }

    #[test]
    fn single_box_trips() {
        let w = single();
        let b = &w.boundary;
        assert_eq!(trip_path(&w, b[0], 2).unwrap().end, b[3]);
        assert_eq!(trip_path(&w, b[0], 1).unwrap().end, b[2]);
        assert_eq!(trip_path(&w, b[2], 3).unwrap().end, b[0]);
    }

    #[test]
    fn trip_laws_single_box() {
        for p in [PlanePartition::full(Box3::cube(1)), PlanePartition::empty(Box3::cube(1))] {
            let w = HourglassWeb::from_plane_partition(&p).unwrap();
            let t1 = trip_permutation(&w, 1).unwrap();
            let t2 = trip_permutation(&w, 2).unwrap();
            let t3 = trip_permutation(&w, 3).unwrap();
            for i in 0..w.n() {
                assert_eq!(t3[t1[i]], i);
                assert_eq!(t2[t2[i]], i);
            }
        }
    }

    #[test]
    fn bad_inputs() {
        let w = single();
        assert_eq!(trip_path(&w, w.boundary[0], 4), Err(TripError::BadIndex(4)));
        assert!(matches!(trip_path(&w, 0, 1), Err(TripError::NotBoundary(0))));
        let hg = w.edges.iter().find(|e| e.kind == EdgeKind::Hourglass).unwrap().id;
        assert_eq!(separation_label_simple(&w, hg), Err(TripError::NotSimple(hg)));
    }
}
