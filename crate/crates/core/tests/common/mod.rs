//! Brute-force oracles shared by the integration tests and the acceptance harness.
//! Nothing here calls the search code under test.

#![allow(dead_code)]

use hourglass_core::web::{Color, EdgeKind, HourglassWeb};
use hourglass_core::{Box3, LatticeWord};
use rand::Rng;

pub const SIDES: [&str; 6] = ["NE", "E", "SE", "SW", "W", "NW"];

/// Hexagon side of 0-indexed boundary position `i` on a full web.
pub fn side_of(bx: Box3, i: usize) -> &'static str {
    let lens = [bx.a, bx.c, bx.b, bx.a, bx.c, bx.b];
    let mut k = i;
    for (s, &len) in lens.iter().enumerate() {
        if k < len {
            return SIDES[s];
        }
        k -= len;
    }
    panic!("position {i} beyond the boundary of {bx}")
}

/// Product formula for plane partitions in a box, as exact integers.
pub fn macmahon_oracle(a: usize, b: usize, c: usize) -> u128 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 1..=a {
        for j in 1..=b {
            for k in 1..=c {
                num *= (i + j + k - 1) as u128;
                den *= (i + j + k - 2) as u128;
                let g = gcd(num, den);
                num /= g;
                den /= g;
            }
        }
    }
    assert_eq!(den, 1);
    num
}

fn gcd(a: u128, b: u128) -> u128 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn weight(k: EdgeKind) -> u32 {
    match k {
        EdgeKind::Simple => 1,
        EdgeKind::Hourglass => 2,
    }
}

fn distinct_edges(web: &HourglassWeb, v: usize) -> Vec<usize> {
    let mut es: Vec<usize> = web.edges.iter().filter(|e| e.ends.contains(&v)).map(|e| e.id).collect();
    es.dedup();
    es
}

/// Every assignment of disjoint color sets of the right sizes to the edges in `es`.
fn vertex_assignments(web: &HourglassWeb, es: &[usize]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(web: &HourglassWeb, es: &[usize], used: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == es.len() {
            out.push(cur.clone());
            return;
        }
        let need = weight(web.edges[es[cur.len()]].kind);
        for m in 1u8..16 {
            if m.count_ones() == need && m & used == 0 {
                cur.push(m);
                go(web, es, used | m, cur, out);
                cur.pop();
            }
        }
    }
    go(web, es, 0, &mut cur, &mut out);
    out
}

/// Counts proper colorings by choosing a local assignment at every black vertex and
/// checking the white vertices as they fill up.
pub fn colorings_by_black_vertices(web: &HourglassWeb) -> u64 {
    let blacks: Vec<usize> = web.vertices.iter().filter(|v| v.color == Color::Black).map(|v| v.id).collect();
    let local: Vec<(Vec<usize>, Vec<Vec<u8>>)> = blacks
        .iter()
        .map(|&b| {
            let es = distinct_edges(web, b);
            let opts = vertex_assignments(web, &es);
            (es, opts)
        })
        .collect();
    let mut white_used = vec![0u8; web.vertices.len()];
    fn go(web: &HourglassWeb, local: &[(Vec<usize>, Vec<Vec<u8>>)], k: usize, white_used: &mut [u8]) -> u64 {
        if k == local.len() {
            return 1;
        }
        let (es, opts) = &local[k];
        let mut n = 0;
        'opt: for opt in opts {
            for (i, &e) in es.iter().enumerate() {
                let w = web.edges[e].ends[1];
                if white_used[w] & opt[i] != 0 {
                    // Undo the edges placed so far.
                    for (j, &f) in es[..i].iter().enumerate() {
                        white_used[web.edges[f].ends[1]] &= !opt[j];
                    }
                    continue 'opt;
                }
                white_used[w] |= opt[i];
            }
            n += go(web, local, k + 1, white_used);
            for (i, &e) in es.iter().enumerate() {
                white_used[web.edges[e].ends[1]] &= !opt[i];
            }
        }
        n
    }
    go(web, &local, 0, &mut white_used)
}

/// Tries every color set on every edge; only feasible for tiny webs.
pub fn colorings_exhaustive(web: &HourglassWeb) -> u64 {
    let options: Vec<Vec<u8>> = web
        .edges
        .iter()
        .map(|e| (1u8..16).filter(|m| m.count_ones() == weight(e.kind)).collect())
        .collect();
    let mut idx = vec![0usize; options.len()];
    let mut n = 0;
    let mut used = vec![0u8; web.vertices.len()];
    loop {
        used.fill(0);
        let ok = web.edges.iter().all(|e| {
            let m = options[e.id][idx[e.id]];
            let clash = e.ends.iter().any(|&v| used[v] & m != 0);
            for &v in &e.ends {
                used[v] |= m;
            }
            !clash
        });
        if ok {
            n += 1;
        }
        let mut k = 0;
        loop {
            if k == idx.len() {
                return n;
            }
            idx[k] += 1;
            if idx[k] < options[k].len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

/// A uniformly stepped random Yamanouchi word of single letters.
pub fn random_yamanouchi(rng: &mut impl Rng, rank: usize, len: usize) -> LatticeWord {
    let mut shape = vec![0i64; rank];
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let moves: Vec<i32> = (1..=rank as i32)
            .flat_map(|k| [k, -k])
            .filter(|&l| {
                let r = l.unsigned_abs() as usize - 1;
                let mut s = shape.clone();
                s[r] += l.signum() as i64;
                s.windows(2).all(|w| w[0] >= w[1])
            })
            .collect();
        let l = moves[rng.gen_range(0..moves.len())];
        shape[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        letters.push(l);
    }
    LatticeWord::new(rank, letters, Vec::new()).expect("letters in range")
}
