//! Proper edge colorings and the expansion of a web invariant at `q = 1`.

use serde::{Deserialize, Serialize};

use crate::web::{Color, EdgeKind, HourglassWeb};

/// Number of position pairs `i < j` with `w[i] <= w[j]`.
pub fn coinv<T: Ord>(w: &[T]) -> usize {
    let mut n = 0;
    for i in 0..w.len() {
        for j in i + 1..w.len() {
            if w[i] <= w[j] {
                n += 1;
            }
        }
    }
    n
}

/// Color set of each edge as a bitmask over `{1,2,3,4}` (bit `k-1` for color `k`).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProperColoring {
    pub masks: Vec<u8>,
}

impl ProperColoring {
    pub fn colors(&self, edge: usize) -> Vec<u8> {
        mask_colors(self.masks[edge])
    }

    /// Checks sizes against edge weights and disjointness at every vertex.
    pub fn is_proper(&self, web: &HourglassWeb) -> bool {
        if self.masks.len() != web.edges.len() {
            return false;
        }
        let sizes_ok = web.edges.iter().all(|e| self.masks[e.id].count_ones() as usize == weight(e.kind) as usize);
        sizes_ok
            && web.vertices.iter().all(|v| {
                let mut used = 0u8;
                for e in incident(web, v.id) {
                    if used & self.masks[e] != 0 {
                        return false;
                    }
                    used |= self.masks[e];
                }
                true
            })
    }
}

pub fn mask_colors(m: u8) -> Vec<u8> {
    (1..=4).filter(|k| m & (1 << (k - 1)) != 0).collect()
}

fn weight(kind: EdgeKind) -> u32 {
    match kind {
        EdgeKind::Simple => 1,
        EdgeKind::Hourglass => 2,
    }
}

const SINGLES: [u8; 4] = [0b0001, 0b0010, 0b0100, 0b1000];
const PAIRS: [u8; 6] = [0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100];

fn choices(kind: EdgeKind) -> &'static [u8] {
    match kind {
        EdgeKind::Simple => &SINGLES,
        EdgeKind::Hourglass => &PAIRS,
    }
}

/// Distinct edges at a vertex; an hourglass appears once.
fn incident(web: &HourglassWeb, v: usize) -> Vec<usize> {
    let mut es: Vec<usize> = web.rotation[v].iter().map(|r| r.edge).collect();
    es.sort_unstable();
    es.dedup();
    es
}

/// Edges ordered so that each one shares a vertex with an earlier one where possible.
fn search_order(web: &HourglassWeb) -> Vec<usize> {
    let mut seen = vec![false; web.edges.len()];
    let mut order = Vec::with_capacity(web.edges.len());
    let mut queue = std::collections::VecDeque::new();
    for start in web.boundary.iter().copied().chain(0..web.vertices.len()) {
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for e in incident(web, v) {
                if !seen[e] {
                    seen[e] = true;
                    order.push(e);
                    queue.push_back(web.edges[e].other(v));
                }
            }
        }
    }
    order
}

struct Search<'w> {
    web: &'w HourglassWeb,
    order: Vec<usize>,
    used: Vec<u8>,
    masks: Vec<u8>,
}

impl<'w> Search<'w> {
    fn new(web: &'w HourglassWeb) -> Self {
        Search { web, order: search_order(web), used: vec![0; web.vertices.len()], masks: vec![0; web.edges.len()] }
    }

    fn run(&mut self, k: usize, visit: &mut dyn FnMut(&[u8])) {
        if k == self.order.len() {
            visit(&self.masks);
            return;
        }
        let e = &self.web.edges[self.order[k]];
        let [b, w] = e.ends;
        for &m in choices(e.kind) {
            if (self.used[b] | self.used[w]) & m != 0 {
                continue;
            }
            self.used[b] |= m;
            self.used[w] |= m;
            self.masks[e.id] = m;
            self.run(k + 1, visit);
            self.used[b] &= !m;
            self.used[w] &= !m;
        }
        self.masks[e.id] = 0;
    }
}

/// All proper colorings, in a fixed order.
pub fn enumerate_colorings(web: &HourglassWeb) -> Vec<ProperColoring> {
    let mut out = Vec::new();
    Search::new(web).run(0, &mut |m| out.push(ProperColoring { masks: m.to_vec() }));
    out.sort();
    out
}

pub fn count_colorings(web: &HourglassWeb) -> u64 {
    let mut n = 0u64;
    Search::new(web).run(0, &mut |_| n += 1);
    n
}

/// Variable family of a boundary factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    X,
    Y,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    /// 1-indexed boundary position.
    pub pos: usize,
    pub family: Family,
    pub colors: Vec<u8>,
}

/// One term of the invariant at `q = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InvariantMonomial {
    pub sign: i8,
    pub factors: Vec<Factor>,
}

impl InvariantMonomial {
    /// Boundary colors in boundary order, one per position.
    pub fn boundary_colors(&self) -> Vec<u8> {
        self.factors.iter().map(|f| f.colors[0]).collect()
    }
}

/// The monomial of one coloring: black boundary vertices give `x`, white give `y`.
pub fn monomial(web: &HourglassWeb, kappa: &ProperColoring) -> InvariantMonomial {
    let factors: Vec<Factor> = web
        .boundary
        .iter()
        .enumerate()
        .map(|(i, &b)| {
            let e = web.rotation[b][0].edge;
            Factor {
                pos: i + 1,
                family: match web.vertices[b].color {
                    Color::Black => Family::X,
                    Color::White => Family::Y,
                },
                colors: kappa.colors(e),
            }
        })
        .collect();
    let seq: Vec<u8> = factors.iter().map(|f| f.colors[0]).collect();
    let sign = if coinv(&seq) % 2 == 0 { 1 } else { -1 };
    InvariantMonomial { sign, factors }
}

pub fn invariant_at_q1(web: &HourglassWeb) -> Vec<InvariantMonomial> {
    enumerate_colorings(web).iter().map(|k| monomial(web, k)).collect()
}
