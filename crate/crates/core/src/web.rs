//! Hourglass plabic graphs of plane partitions.
//!
//! The hexagon with sides `a, c, b, a, c, b` (clockwise from the top corner) is cut
//! into unit triangles. Triangles are the internal vertices, triangle adjacencies are
//! the edges, and the lozenges of a tiling mark the hourglass edges. Left-pointing
//! triangles are black, right-pointing ones white.
//!
//! Lattice point `(al, be)` stands for `al*u + be*w`, where `w` points up and `u`
//! points down-right. A cube corner `(x, y, z)` projects to `(x - y, z - y)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::WebError;
use crate::geometry::{ccw_cmp, cross, cw_from_up_cmp, Point, RatPoint};
use crate::plane_partitions::{Box3, PlanePartition, SymmetryClass};

/// Lattice unit in the scaled frame. Chosen so every point used below is integral.
const M: i64 = 384;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Black,
    White,
}

impl Color {
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VertexKind {
    Internal,
    Boundary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EdgeKind {
    Simple,
    Hourglass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: usize,
    pub color: Color,
    pub pos: Point,
    pub kind: VertexKind,
}

/// An edge with `ends = [black, white]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub id: usize,
    pub ends: [usize; 2],
    pub kind: EdgeKind,
    /// Edge of the unrestricted web this edge comes from, and the strand for halves of
    /// a split hourglass.
    pub origin: Option<(usize, Option<u8>)>,
}

impl Edge {
    pub fn other(&self, v: usize) -> usize {
        if self.ends[0] == v {
            self.ends[1]
        } else {
            self.ends[0]
        }
    }
}

/// One edge-end at a vertex. Hourglasses have strands 0 and 1, simple edges strand 0.
///
/// Strand `s` of an hourglass is the `s`-th of its two ends in counterclockwise order
/// at both endpoints, so the two strands cross once.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndRef {
    pub edge: usize,
    pub strand: u8,
}

#[derive(Clone, Debug)]
pub struct Face {
    pub id: usize,
    /// Darts `(from, to, edge)` with the face on their left; `edge` is `None` on the
    /// disk boundary.
    pub darts: Vec<(usize, usize, Option<usize>)>,
    pub point: RatPoint,
    pub is_base: bool,
    /// Lattice point at the center of the honeycomb hexagon, if the face is one.
    pub center: Option<(i64, i64)>,
}

#[derive(Clone, Debug)]
pub struct HourglassWeb {
    pub bx: Box3,
    pub class: Option<SymmetryClass>,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    /// Counterclockwise edge-ends at each vertex.
    pub rotation: Vec<Vec<EndRef>>,
    /// Boundary vertices `b_1..b_n`, clockwise, with the base face between `b_n` and `b_1`.
    pub boundary: Vec<usize>,
    /// 0-indexed boundary positions `i` such that `b_i, b_{i+1}` come from one cut hourglass.
    pub split_pairs: Vec<usize>,
    /// Matched honeycomb edges, sorted.
    pub matched: Vec<usize>,
    /// Lattice triangle of each internal vertex.
    tri_of: Vec<Option<Tri>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct Tri {
    al: i64,
    be: i64,
    black: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Dir {
    /// Across the `-v` edge, pairing into a west face.
    Diag,
    /// Across the `u` edge, pairing into an east face.
    Low,
    /// Across the vertical edge, pairing into a north face.
    Vert,
}

impl Tri {
    fn corners(self) -> [(i64, i64); 3] {
        let (a, b) = (self.al, self.be);
        if self.black {
            [(a, b), (a + 1, b), (a + 1, b + 1)]
        } else {
            [(a, b), (a + 1, b + 1), (a, b + 1)]
        }
    }

    fn centroid(self) -> Point {
        self.corners().iter().fold(Point::ORIGIN, |acc, &(a, b)| acc + lattice(a, b)) / 3
    }

    /// The white neighbour of a black triangle in direction `d`.
    fn white_neighbor(self, d: Dir) -> Tri {
        debug_assert!(self.black);
        let (a, b) = (self.al, self.be);
        match d {
            Dir::Diag => Tri { al: a, be: b, black: false },
            Dir::Low => Tri { al: a, be: b - 1, black: false },
            Dir::Vert => Tri { al: a + 1, be: b, black: false },
        }
    }

    fn neighbors(self) -> [Tri; 3] {
        let (a, b) = (self.al, self.be);
        if self.black {
            [Dir::Diag, Dir::Low, Dir::Vert].map(|d| self.white_neighbor(d))
        } else {
            [
                Tri { al: a, be: b, black: true },
                Tri { al: a, be: b + 1, black: true },
                Tri { al: a - 1, be: b, black: true },
            ]
        }
    }
}

/// Scaled position of the lattice point `(al, be)`.
fn lattice(al: i64, be: i64) -> Point {
    Point::new(M * al, (M / 2) * (2 * be - al))
}

/// Honeycomb of a box: triangles and the internal dual edges between them.
#[derive(Clone, Debug)]
struct Honeycomb {
    bx: Box3,
    tris: Vec<Tri>,
    index: HashMap<Tri, usize>,
    /// `(black tri index, white tri index, dir)`, sorted; position = dual edge id.
    duals: Vec<(usize, usize, Dir)>,
    dual_index: HashMap<(usize, Dir), usize>,
}

impl Honeycomb {
    fn new(bx: Box3) -> Result<Self, WebError> {
        let zeros = [bx.a, bx.b, bx.c].iter().filter(|&&s| s == 0).count();
        if zeros > 1 {
            return Err(WebError::Degenerate(bx));
        }
        let (a, b, c) = (bx.a as i64, bx.b as i64, bx.c as i64);
        let inside = |(al, be): (i64, i64)| {
            (-b..=a).contains(&al) && (-b..=c).contains(&be) && (-a..=c).contains(&(be - al))
        };
        let mut tris = Vec::new();
        for al in -b..=a {
            for be in -b..=c {
                for black in [true, false] {
                    let t = Tri { al, be, black };
                    if t.corners().iter().all(|&p| inside(p)) {
                        tris.push(t);
                    }
                }
            }
        }
        tris.sort();
        let index: HashMap<Tri, usize> = tris.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        let mut duals = Vec::new();
        for (i, &t) in tris.iter().enumerate() {
            if !t.black {
                continue;
            }
            for d in [Dir::Diag, Dir::Low, Dir::Vert] {
                if let Some(&j) = index.get(&t.white_neighbor(d)) {
                    duals.push((i, j, d));
                }
            }
        }
        let dual_index = duals.iter().enumerate().map(|(k, &(i, _, d))| ((i, d), k)).collect();
        Ok(Honeycomb { bx, tris, index, duals, dual_index })
    }

    fn dual_of(&self, black: Tri, d: Dir) -> Option<usize> {
        let i = *self.index.get(&black)?;
        self.dual_index.get(&(i, d)).copied()
    }

    /// Dual edges of the lozenges of `p`.
    fn matching_of(&self, p: &PlanePartition) -> Vec<usize> {
        let Box3 { a, b, c } = self.bx;
        let h = |i: usize, j: usize| p.height(i, j) as i64;
        let mut out = Vec::with_capacity(a * b + b * c + c * a);
        // North faces at height p_ij above cell (i, j).
        for i in 1..=a {
            for j in 1..=b {
                let (al, be) = (i as i64 - j as i64, h(i - 1, j - 1) - j as i64);
                out.push(self.dual_of(Tri { al: al - 1, be, black: true }, Dir::Vert));
            }
        }
        // East faces: layer k of column j reaches x = #{i : p_ij >= k}.
        for j in 1..=b {
            for k in 1..=c {
                let x = (0..a).filter(|&i| p.height(i, j - 1) >= k).count() as i64;
                let (al, be) = (x - j as i64, k as i64 - j as i64);
                out.push(self.dual_of(Tri { al, be, black: true }, Dir::Low));
            }
        }
        // West faces: layer k of row i reaches y = #{j : p_ij >= k}.
        for i in 1..=a {
            for k in 1..=c {
                let y = (0..b).filter(|&j| p.height(i - 1, j) >= k).count() as i64;
                let (al, be) = (i as i64 - 1 - y, k as i64 - 1 - y);
                out.push(self.dual_of(Tri { al, be, black: true }, Dir::Diag));
            }
        }
        let mut out: Vec<usize> = out.into_iter().map(|d| d.expect("lozenge inside hexagon")).collect();
        out.sort_unstable();
        out
    }

    /// Inverse of [`Honeycomb::matching_of`], reading the north faces.
    ///
    /// Columns `(i, j)` and `(i+1, j+1)` share a diagonal of lozenge slots; along a
    /// diagonal the top faces appear in strictly decreasing slot order.
    fn partition_of(&self, matched: &[usize]) -> Result<PlanePartition, WebError> {
        let Box3 { a, b, c } = self.bx;
        let set: BTreeSet<usize> = matched.iter().copied().collect();
        let mut heights = vec![vec![0usize; b]; a];
        for alpha in -(b as i64) + 1..=a as i64 - 1 {
            let cols: Vec<(usize, usize)> = (1..=a)
                .filter_map(|i| {
                    let j = i as i64 - alpha;
                    (j >= 1 && j <= b as i64).then_some((i, j as usize))
                })
                .collect();
            let mut slots: Vec<i64> = (-(b as i64)..=c as i64)
                .filter(|&be| {
                    self.dual_of(Tri { al: alpha - 1, be, black: true }, Dir::Vert)
                        .is_some_and(|d| set.contains(&d))
                })
                .collect();
            slots.sort_unstable_by(|x, y| y.cmp(x));
            if slots.len() != cols.len() {
                return Err(WebError::BadMatching);
            }
            for (&(i, j), &be) in cols.iter().zip(&slots) {
                let h = be + j as i64;
                if h < 0 || h > c as i64 {
                    return Err(WebError::BadMatching);
                }
                heights[i - 1][j - 1] = h as usize;
            }
        }
        let p = PlanePartition::validate(heights, self.bx).map_err(|_| WebError::BadMatching)?;
        if self.matching_of(&p) != set.into_iter().collect::<Vec<_>>() {
            return Err(WebError::BadMatching);
        }
        Ok(p)
    }

    fn center(&self) -> Point {
        let Box3 { a, b, c } = self.bx;
        let (a, b, c) = (a as i64, b as i64, c as i64);
        // (a u + b v + c w) / 2 with v = -u - w.
        Point::new(M * (a - b), (M / 2) * (2 * (c - b) - (a - b))) / 2
    }
}

impl HourglassWeb {
    /// The full web of a plane partition.
    pub fn from_plane_partition(p: &PlanePartition) -> Result<Self, WebError> {
        let hc = Honeycomb::new(p.box3())?;
        let matched = hc.matching_of(p);
        Ok(build_full(&hc, matched))
    }

    /// Rebuilds a full web from its dimer state.
    pub fn from_matching(bx: Box3, matched: &[usize]) -> Result<Self, WebError> {
        let hc = Honeycomb::new(bx)?;
        let p = hc.partition_of(matched)?;
        Ok(build_full(&hc, hc.matching_of(&p)))
    }

    /// The plane partition encoded by the dimer state.
    pub fn plane_partition(&self) -> Result<PlanePartition, WebError> {
        Honeycomb::new(self.bx)?.partition_of(&self.matched)
    }

    pub fn n(&self) -> usize {
        self.boundary.len()
    }

    pub fn internal_count(&self) -> usize {
        self.vertices.iter().filter(|v| v.kind == VertexKind::Internal).count()
    }

    pub fn hourglass_count(&self) -> usize {
        self.edges.iter().filter(|e| e.kind == EdgeKind::Hourglass).count()
    }

    pub fn simple_count(&self) -> usize {
        self.edges.len() - self.hourglass_count()
    }

    /// Position of `end` within the rotation at `v`.
    pub fn rot_index(&self, v: usize, end: EndRef) -> Option<usize> {
        self.rotation[v].iter().position(|&e| e == end)
    }

    /// Index `i` such that `boundary[i] == v`.
    pub fn boundary_index(&self, v: usize) -> Option<usize> {
        self.boundary.iter().position(|&b| b == v)
    }

    pub fn is_split(&self, i: usize) -> bool {
        self.split_pairs.contains(&i) || (i > 0 && self.split_pairs.contains(&(i - 1)))
    }

    /// The internal-vertex triangle lattice point `(al, be, black)`, if any.
    pub fn triangle_of(&self, v: usize) -> Option<(i64, i64, bool)> {
        self.tri_of[v].map(|t| (t.al, t.be, t.black))
    }

    /// Checks bicoloring, degrees, hourglass count per vertex and rotation consistency.
    pub fn check(&self) -> Result<(), WebError> {
        let bad = |m: String| Err(WebError::Invariant(m));
        for e in &self.edges {
            let [bv, wv] = e.ends;
            if self.vertices[bv].color != Color::Black || self.vertices[wv].color != Color::White {
                return bad(format!("edge {} not black-white", e.id));
            }
        }
        for v in &self.vertices {
            let rot = &self.rotation[v.id];
            let hg = rot.iter().filter(|r| self.edges[r.edge].kind == EdgeKind::Hourglass).count();
            match v.kind {
                VertexKind::Boundary => {
                    if rot.len() != 1 || hg != 0 {
                        return bad(format!("boundary vertex {} has degree {}", v.id, rot.len()));
                    }
                }
                VertexKind::Internal => {
                    if rot.len() != 4 {
                        return bad(format!("vertex {} has degree {}", v.id, rot.len()));
                    }
                    if hg > 2 {
                        return bad(format!("vertex {} has {} hourglass ends", v.id, hg));
                    }
                    if self.class.is_none() && hg != 2 {
                        return bad(format!("vertex {} lacks an hourglass", v.id));
                    }
                }
            }
            for (k, r) in rot.iter().enumerate() {
                let e = &self.edges[r.edge];
                if !e.ends.contains(&v.id) {
                    return bad(format!("vertex {} lists foreign edge {}", v.id, e.id));
                }
                if e.kind == EdgeKind::Hourglass {
                    let partner = EndRef { edge: r.edge, strand: 1 - r.strand };
                    let next = rot[(k + 1) % rot.len()];
                    let prev = rot[(k + rot.len() - 1) % rot.len()];
                    let adjacent = if r.strand == 0 { next == partner } else { prev == partner };
                    if !adjacent {
                        return bad(format!("hourglass {} ends not adjacent at {}", e.id, v.id));
                    }
                }
            }
        }
        for (i, &b) in self.boundary.iter().enumerate() {
            if self.vertices[b].kind != VertexKind::Boundary {
                return bad(format!("b_{} is internal", i + 1));
            }
        }
        let nb = self.vertices.iter().filter(|v| v.kind == VertexKind::Boundary).count();
        if nb != self.boundary.len() {
            return bad("boundary list incomplete".into());
        }
        Ok(())
    }

    /// Faces of the disk, treating each hourglass as one edge.
    pub fn faces(&self) -> Vec<Face> {
        compute_faces(self)
    }

    /// Internal hexagonal faces whose six edges alternate hourglass and simple.
    pub fn benzene_faces(&self) -> Vec<Face> {
        self.faces()
            .into_iter()
            .filter(|f| {
                f.darts.len() == 6
                    && f.darts.iter().all(|d| d.2.is_some())
                    && {
                        let kinds: Vec<EdgeKind> =
                            f.darts.iter().map(|d| self.edges[d.2.unwrap()].kind).collect();
                        (0..6).all(|k| kinds[k] != kinds[(k + 1) % 6])
                    }
            })
            .collect()
    }

    /// Benzene move on the hexagonal face around the lattice point `center`.
    pub fn apply_benzene(&self, center: (i64, i64)) -> Result<Self, WebError> {
        if self.class.is_some() {
            return Err(WebError::Invariant("benzene moves act on full webs".into()));
        }
        let hc = Honeycomb::new(self.bx)?;
        let ring = hexagon_ring(&hc, center).ok_or(WebError::NotBenzene(0))?;
        let set: BTreeSet<usize> = self.matched.iter().copied().collect();
        let on: Vec<bool> = ring.iter().map(|d| set.contains(d)).collect();
        let alternating = (0..6).all(|k| on[k] != on[(k + 1) % 6]);
        if !alternating {
            return Err(WebError::NotBenzene(0));
        }
        let mut next = set;
        for d in ring {
            if !next.remove(&d) {
                next.insert(d);
            }
        }
        Ok(build_full(&hc, next.into_iter().collect()))
    }

    /// Lattice centers of the benzene faces.
    pub fn benzene_centers(&self) -> Vec<(i64, i64)> {
        let Ok(hc) = Honeycomb::new(self.bx) else { return vec![] };
        let set: BTreeSet<usize> = self.matched.iter().copied().collect();
        lattice_points(self.bx)
            .into_iter()
            .filter(|&pt| {
                hexagon_ring(&hc, pt).is_some_and(|ring| {
                    let on: Vec<bool> = ring.iter().map(|d| set.contains(d)).collect();
                    (0..6).all(|k| on[k] != on[(k + 1) % 6])
                })
            })
            .collect()
    }

    /// All webs reachable by benzene moves, sorted by dimer state.
    pub fn benzene_class(&self) -> Result<Vec<HourglassWeb>, WebError> {
        let mut seen: BTreeMap<Vec<usize>, HourglassWeb> = BTreeMap::new();
        let mut queue = VecDeque::new();
        seen.insert(self.matched.clone(), self.clone());
        queue.push_back(self.clone());
        while let Some(w) = queue.pop_front() {
            for c in w.benzene_centers() {
                let nw = w.apply_benzene(c)?;
                if !seen.contains_key(&nw.matched) {
                    seen.insert(nw.matched.clone(), nw.clone());
                    queue.push_back(nw);
                }
            }
        }
        Ok(seen.into_values().collect())
    }

    /// Restriction of the full web of `p` to the fundamental domain of `class`.
    pub fn restrict(p: &PlanePartition, class: SymmetryClass) -> Result<Self, WebError> {
        if !p.has_symmetry(class)? {
            return Err(WebError::NotInClass(class));
        }
        let full = HourglassWeb::from_plane_partition(p)?;
        full.restrict_to(class)
    }

    /// Cuts this full web along the rays of `class`. The symmetry itself is not checked.
    pub fn restrict_to(&self, class: SymmetryClass) -> Result<Self, WebError> {
        if self.class.is_some() {
            return Err(WebError::Invariant("web already restricted".into()));
        }
        class.check_box(self.bx)?;
        let domain = Domain::of(class, self.bx)?;
        cut(self, class, &domain)
    }

    /// The boundary face `F_0` is the face on the left of the dart `b_1 -> b_n`.
    pub fn base_face(&self, faces: &[Face]) -> usize {
        faces.iter().position(|f| f.is_base).expect("base face exists")
    }
}

/// The six honeycomb edges around an interior lattice point, in cyclic order.
fn hexagon_ring(hc: &Honeycomb, (al, be): (i64, i64)) -> Option<Vec<usize>> {
    // Triangles around (al, be), counterclockwise from the east.
    let b0 = Tri { al, be, black: true };
    let w0 = Tri { al, be, black: false };
    let b1 = Tri { al: al - 1, be, black: true };
    let w1 = Tri { al: al - 1, be: be - 1, black: false };
    let b2 = Tri { al: al - 1, be: be - 1, black: true };
    let w2 = Tri { al, be: be - 1, black: false };
    let pairs = [(b0, Dir::Diag), (b1, Dir::Vert), (b1, Dir::Low), (b2, Dir::Diag), (b2, Dir::Vert), (b0, Dir::Low)];
    debug_assert_eq!(b0.white_neighbor(Dir::Diag), w0);
    debug_assert_eq!(b1.white_neighbor(Dir::Vert), w0);
    debug_assert_eq!(b1.white_neighbor(Dir::Low), w1);
    debug_assert_eq!(b2.white_neighbor(Dir::Diag), w1);
    debug_assert_eq!(b2.white_neighbor(Dir::Vert), w2);
    debug_assert_eq!(b0.white_neighbor(Dir::Low), w2);
    pairs.iter().map(|&(t, d)| hc.dual_of(t, d)).collect()
}

fn lattice_points(bx: Box3) -> Vec<(i64, i64)> {
    let (a, b, c) = (bx.a as i64, bx.b as i64, bx.c as i64);
    let mut out = Vec::new();
    for al in -b..=a {
        for be in -b..=c {
            if (-a..=c).contains(&(be - al)) {
                out.push((al, be));
            }
        }
    }
    out
}

/// Lattice point at the center of the benzene face for cube `(i, j, k)`.
pub fn cube_center(i: usize, j: usize, k: usize) -> (i64, i64) {
    (i as i64 - j as i64, k as i64 - j as i64)
}

fn build_full(hc: &Honeycomb, matched: Vec<usize>) -> HourglassWeb {
    let set: BTreeSet<usize> = matched.iter().copied().collect();
    let mut vertices = Vec::new();
    let mut tri_of = Vec::new();
    for (i, &t) in hc.tris.iter().enumerate() {
        let color = if t.black { Color::Black } else { Color::White };
        vertices.push(Vertex { id: i, color, pos: t.centroid(), kind: VertexKind::Internal });
        tri_of.push(Some(t));
    }
    let mut edges = Vec::new();
    for (k, &(bi, wi, _)) in hc.duals.iter().enumerate() {
        let kind = if set.contains(&k) { EdgeKind::Hourglass } else { EdgeKind::Simple };
        edges.push(Edge { id: k, ends: [bi, wi], kind, origin: None });
    }
    // Pendant boundary vertices sit at the centroid of the outside neighbour triangle.
    for (i, &t) in hc.tris.iter().enumerate() {
        for nb in t.neighbors() {
            if hc.index.contains_key(&nb) {
                continue;
            }
            let id = vertices.len();
            let color = if nb.black { Color::Black } else { Color::White };
            vertices.push(Vertex { id, color, pos: nb.centroid(), kind: VertexKind::Boundary });
            tri_of.push(None);
            let ends = if t.black { [i, id] } else { [id, i] };
            edges.push(Edge { id: edges.len(), ends, kind: EdgeKind::Simple, origin: None });
        }
    }
    let center = hc.center();
    let mut web = HourglassWeb {
        bx: hc.bx,
        class: None,
        vertices,
        edges,
        rotation: vec![],
        boundary: vec![],
        split_pairs: vec![],
        matched,
        tri_of,
    };
    web.rotation = rotations(&web.vertices, &web.edges);
    web.boundary = order_boundary(&web.vertices, center);
    web
}

/// Counterclockwise edge-ends at each vertex, hourglass strands in order 0, 1.
fn rotations(vertices: &[Vertex], edges: &[Edge]) -> Vec<Vec<EndRef>> {
    let mut rot: Vec<Vec<(Point, EndRef)>> = vec![Vec::new(); vertices.len()];
    for e in edges {
        for (k, &v) in e.ends.iter().enumerate() {
            let u = e.ends[1 - k];
            let d = vertices[u].pos - vertices[v].pos;
            let strands = if e.kind == EdgeKind::Hourglass { 2 } else { 1 };
            for s in 0..strands {
                rot[v].push((d, EndRef { edge: e.id, strand: s }));
            }
        }
    }
    rot.into_iter()
        .map(|mut list| {
            list.sort_by(|x, y| ccw_cmp(x.0, y.0).then(x.1.strand.cmp(&y.1.strand)));
            list.into_iter().map(|(_, r)| r).collect()
        })
        .collect()
}

/// Boundary vertices in clockwise order around `center`, starting just clockwise of
/// the upward ray. Vertices on the upward ray come last, nearest first; ties on any
/// other ray are read from the far end inwards.
fn order_boundary(vertices: &[Vertex], center: Point) -> Vec<usize> {
    let mut ids: Vec<usize> = vertices.iter().filter(|v| v.kind == VertexKind::Boundary).map(|v| v.id).collect();
    ids.sort_by(|&p, &q| boundary_cmp(vertices[p].pos - center, vertices[q].pos - center));
    ids
}

fn boundary_cmp(dp: Point, dq: Point) -> Ordering {
    let up = |d: Point| d.x == 0 && d.y > 0;
    match (up(dp), up(dq)) {
        (true, true) => dp.y.cmp(&dq.y),
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (false, false) => cw_from_up_cmp(dp, dq).then_with(|| dq.norm2().cmp(&dp.norm2())),
    }
}

/// The kept wedge of a fundamental domain.
struct Domain {
    apex: Point,
    /// Second ray direction; `None` for the half-plane east of the vertical axis.
    ray: Option<Point>,
}

impl Domain {
    fn of(class: SymmetryClass, bx: Box3) -> Result<Self, WebError> {
        let apex = Honeycomb::new(bx)?.center();
        let ray = match class {
            SymmetryClass::Spp => None,
            SymmetryClass::Cspp => Some(lattice(1, 0)),
            SymmetryClass::Tspp => Some(lattice(1, 1)),
            SymmetryClass::Tsscpp => Some(lattice(1, 2)),
            other => return Err(WebError::NoDomain(other)),
        };
        Ok(Domain { apex, ray })
    }

    fn keeps(&self, p: Point) -> bool {
        let d = p - self.apex;
        let east = d.x > 0;
        match self.ray {
            None => east,
            Some(r) => east && cross(r, d) > 0,
        }
    }

    /// Whether `p` lies on a cutting ray (or the vertical axis for half-planes).
    fn on_cut(&self, p: Point) -> Option<Point> {
        let d = p - self.apex;
        if d.x == 0 {
            return Some(lattice(0, 1));
        }
        match self.ray {
            Some(r) if cross(r, d) == 0 && d.x > 0 => Some(r),
            _ => None,
        }
    }
}

fn cut(full: &HourglassWeb, class: SymmetryClass, domain: &Domain) -> Result<HourglassWeb, WebError> {
    let internal_kept: Vec<bool> = full
        .vertices
        .iter()
        .map(|v| v.kind == VertexKind::Internal && domain.keeps(v.pos))
        .collect();
    // Pendants follow their internal neighbour.
    let mut kept = internal_kept.clone();
    for e in &full.edges {
        for k in 0..2 {
            let (v, u) = (e.ends[k], e.ends[1 - k]);
            if full.vertices[v].kind == VertexKind::Boundary && internal_kept[u] {
                kept[v] = true;
            }
        }
    }
    let mut map = vec![usize::MAX; full.vertices.len()];
    let mut vertices = Vec::new();
    let mut tri_of = Vec::new();
    for v in &full.vertices {
        if kept[v.id] {
            map[v.id] = vertices.len();
            vertices.push(Vertex { id: vertices.len(), ..v.clone() });
            tri_of.push(full.tri_of[v.id]);
        }
    }
    let mut edges: Vec<Edge> = Vec::new();
    let mut pair_vertices: Vec<(usize, usize)> = Vec::new();
    for e in &full.edges {
        let [bv, wv] = e.ends;
        match (kept[bv], kept[wv]) {
            (true, true) => edges.push(Edge {
                id: edges.len(),
                ends: [map[bv], map[wv]],
                kind: e.kind,
                origin: Some((e.id, None)),
            }),
            (false, false) => {}
            (kb, _) => {
                let (keep, drop) = if kb { (bv, wv) } else { (wv, bv) };
                let kpos = full.vertices[keep].pos;
                let dpos = full.vertices[drop].pos;
                let (at, dir) = match domain.on_cut(dpos) {
                    Some(r) => (dpos, r),
                    None => {
                        let mid = (kpos + dpos) / 2;
                        let r = domain.on_cut(mid).ok_or_else(|| {
                            WebError::Invariant(format!("edge {} leaves the domain off the cut", e.id))
                        })?;
                        (mid, r)
                    }
                };
                let color = full.vertices[drop].color;
                let mut add_boundary = |pos: Point, strand: Option<u8>, edges: &mut Vec<Edge>| {
                    let id = vertices.len();
                    vertices.push(Vertex { id, color, pos, kind: VertexKind::Boundary });
                    tri_of.push(None);
                    let ends = if kb { [map[keep], id] } else { [id, map[keep]] };
                    edges.push(Edge { id: edges.len(), ends, kind: EdgeKind::Simple, origin: Some((e.id, strand)) });
                    id
                };
                match e.kind {
                    EdgeKind::Simple => {
                        add_boundary(at, None, &mut edges);
                    }
                    EdgeKind::Hourglass => {
                        let eps = dir / 16;
                        let (p0, p1) = if cross(at + eps - kpos, at - eps - kpos) > 0 {
                            (at + eps, at - eps)
                        } else {
                            (at - eps, at + eps)
                        };
                        let q0 = add_boundary(p0, Some(0), &mut edges);
                        let q1 = add_boundary(p1, Some(1), &mut edges);
                        pair_vertices.push((q0, q1));
                    }
                }
            }
        }
    }
    let mut web = HourglassWeb {
        bx: full.bx,
        class: Some(class),
        vertices,
        edges,
        rotation: vec![],
        boundary: vec![],
        split_pairs: vec![],
        matched: full.matched.clone(),
        tri_of,
    };
    web.rotation = rotations(&web.vertices, &web.edges);
    web.boundary = order_boundary(&web.vertices, domain.apex);
    let pos_of: HashMap<usize, usize> = web.boundary.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    for (q0, q1) in pair_vertices {
        let (i0, i1) = (pos_of[&q0], pos_of[&q1]);
        if i0.abs_diff(i1) != 1 {
            return Err(WebError::Invariant(format!("split pair {q0},{q1} not adjacent")));
        }
        web.split_pairs.push(i0.min(i1));
    }
    web.split_pairs.sort_unstable();
    web.check()?;
    Ok(web)
}

/// Boundary-augmented rotation: hourglasses collapsed, and each boundary vertex joined
/// to its neighbours on the boundary cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Slot {
    Edge(usize),
    Next,
    Prev,
}

fn compute_faces(web: &HourglassWeb) -> Vec<Face> {
    let n = web.boundary.len();
    let bpos: HashMap<usize, usize> = web.boundary.iter().enumerate().map(|(i, &b)| (b, i)).collect();
    let slots: Vec<Vec<Slot>> = web
        .vertices
        .iter()
        .map(|v| {
            let mut s: Vec<Slot> = Vec::new();
            for r in &web.rotation[v.id] {
                if s.last() != Some(&Slot::Edge(r.edge)) && s.first() != Some(&Slot::Edge(r.edge)) {
                    s.push(Slot::Edge(r.edge));
                }
            }
            if v.kind == VertexKind::Boundary && n >= 2 {
                // Counterclockwise at b_i: b_{i+1}, b_{i-1}, then the interior edge.
                s = vec![Slot::Next, Slot::Prev, s[0]];
            }
            s
        })
        .collect();
    let target = |v: usize, s: Slot| -> usize {
        match s {
            Slot::Edge(e) => web.edges[e].other(v),
            Slot::Next => web.boundary[(bpos[&v] + 1) % n],
            Slot::Prev => web.boundary[(bpos[&v] + n - 1) % n],
        }
    };
    let back = |s: Slot| -> Slot {
        match s {
            Slot::Edge(e) => Slot::Edge(e),
            Slot::Next => Slot::Prev,
            Slot::Prev => Slot::Next,
        }
    };
    let mut visited: Vec<Vec<bool>> = slots.iter().map(|s| vec![false; s.len()]).collect();
    let mut faces = Vec::new();
    for v0 in 0..web.vertices.len() {
        for k0 in 0..slots[v0].len() {
            if visited[v0][k0] {
                continue;
            }
            let mut darts = Vec::new();
            let (mut v, mut k) = (v0, k0);
            loop {
                visited[v][k] = true;
                let s = slots[v][k];
                let u = target(v, s);
                darts.push((v, u, if let Slot::Edge(e) = s { Some(e) } else { None }));
                let bs = back(s);
                let j = slots[u].iter().position(|&x| x == bs).expect("reverse slot");
                let deg = slots[u].len();
                v = u;
                k = (j + deg - 1) % deg;
                if v == v0 && k == k0 {
                    break;
                }
            }
            faces.push(darts);
        }
    }
    // Drop the outer face: the one running b_i -> b_{i+1}.
    let outer = if n >= 2 {
        let (b1, b2) = (web.boundary[0], web.boundary[1 % n]);
        faces.iter().position(|f| f.iter().any(|&(x, y, e)| x == b1 && y == b2 && e.is_none()))
    } else {
        None
    };
    let base_dart = if n >= 2 { Some((web.boundary[0], web.boundary[n - 1])) } else { None };
    let mut out = Vec::new();
    for (idx, darts) in faces.into_iter().enumerate() {
        if Some(idx) == outer {
            continue;
        }
        let pts: Vec<Point> = darts.iter().map(|&(x, _, _)| web.vertices[x].pos).collect();
        let is_base = base_dart.is_some_and(|(x, y)| darts.iter().any(|&(p, q, e)| p == x && q == y && e.is_none()));
        let center = hexagon_center(web, &darts);
        out.push(Face { id: out.len(), point: RatPoint::centroid(&pts), darts, is_base, center });
    }
    out
}

/// The lattice point shared by all triangles of an internal hexagonal face.
fn hexagon_center(web: &HourglassWeb, darts: &[(usize, usize, Option<usize>)]) -> Option<(i64, i64)> {
    if darts.len() != 6 || darts.iter().any(|d| d.2.is_none()) {
        return None;
    }
    let mut common: Option<BTreeSet<(i64, i64)>> = None;
    for &(v, _, _) in darts {
        let t = web.tri_of[v]?;
        let cs: BTreeSet<(i64, i64)> = t.corners().into_iter().collect();
        common = Some(match common {
            None => cs,
            Some(c) => c.intersection(&cs).copied().collect(),
        });
    }
    let c = common?;
    (c.len() == 1).then(|| *c.iter().next().unwrap())
}

/// JSON form of a web: the dimer state plus rendering data.
#[derive(Serialize, Deserialize)]
pub struct WebJson {
    #[serde(rename = "box")]
    pub bx: [usize; 3],
    pub class: Option<SymmetryClass>,
    pub matched: Vec<usize>,
    pub boundary: Vec<usize>,
    #[serde(default)]
    pub split_pairs: Vec<usize>,
    #[serde(default)]
    pub vertices: Vec<VertexJson>,
    #[serde(default)]
    pub edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
pub struct VertexJson {
    pub id: usize,
    pub color: Color,
    pub kind: VertexKind,
    /// Position in the scaled lattice frame.
    pub pos: [i64; 2],
}

#[derive(Serialize, Deserialize)]
pub struct EdgeJson {
    pub id: usize,
    pub ends: [usize; 2],
    pub kind: EdgeKind,
}

impl HourglassWeb {
    pub fn to_json(&self) -> String {
        let j = WebJson {
            bx: [self.bx.a, self.bx.b, self.bx.c],
            class: self.class,
            matched: self.matched.clone(),
            boundary: self.boundary.clone(),
            split_pairs: self.split_pairs.clone(),
            vertices: self
                .vertices
                .iter()
                .map(|v| VertexJson { id: v.id, color: v.color, kind: v.kind, pos: [v.pos.x, v.pos.y] })
                .collect(),
            edges: self.edges.iter().map(|e| EdgeJson { id: e.id, ends: e.ends, kind: e.kind }).collect(),
        };
        serde_json::to_string(&j).expect("web serializes")
    }

    /// Parses a web document. Only `box`, `class` and `matched` are authoritative; the
    /// web is rebuilt from them and the stored boundary must agree.
    pub fn from_json(s: &str) -> Result<Self, WebError> {
        let j: WebJson = serde_json::from_str(s).map_err(|e| WebError::Json(e.to_string()))?;
        let [a, b, c] = j.bx;
        if a.max(b).max(c) > 64 {
            return Err(WebError::Json("box too large".into()));
        }
        let bx = Box3::new(a, b, c);
        let full = HourglassWeb::from_matching(bx, &j.matched)?;
        let web = match j.class {
            None | Some(SymmetryClass::Plain) => full,
            Some(class) => {
                let p = full.plane_partition()?;
                HourglassWeb::restrict(&p, class)?
            }
        };
        if !j.boundary.is_empty() && j.boundary != web.boundary {
            return Err(WebError::Json("boundary does not match the rebuilt web".into()));
        }
        Ok(web)
    }
}
