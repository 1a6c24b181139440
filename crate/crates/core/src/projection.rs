//! Projection of class words to lower rank and the rank-2 growth to marked matchings.

use serde::{Deserialize, Serialize};

use crate::error::ProjectionError;
use crate::plane_partitions::{PlanePartition, SymmetryClass};
use crate::symmetry_words::{split_blocks, BlockKind, ClassWordSpec};
use crate::trips::boundary_word;
use crate::web::{Color, HourglassWeb};
use crate::word::{LatticeWord, Token};

/// A projected word with the word it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedWord {
    pub spec: ClassWordSpec,
    pub source: LatticeWord,
    pub word: LatticeWord,
    /// Positions of `source` that survive, in order.
    pub kept: Vec<usize>,
}

fn shift_of(spec: ClassWordSpec) -> Result<(i32, usize), ProjectionError> {
    match spec {
        ClassWordSpec::Spp { .. } | ClassWordSpec::Tsscpp { .. } => Ok((2, 2)),
        ClassWordSpec::Tspp { .. } => Ok((1, 3)),
        ClassWordSpec::Cspp { .. } => Err(ProjectionError::Cyclic),
    }
}

/// Drops the fixed letters of a class word and shifts the rest down.
///
/// The kept letters are the variable blocks plus the barred `4`s among the fixed ones.
pub fn project_word(spec: ClassWordSpec, word: &LatticeWord) -> Result<ReducedWord, ProjectionError> {
    let (shift, rank) = shift_of(spec)?;
    let blocks = split_blocks(spec, word).ok_or(ProjectionError::NotInClass)?;
    let mut tokens = Vec::new();
    let mut kept = Vec::new();
    let mut pos = 0;
    for (kind, block) in &blocks.blocks {
        for &t in block {
            let keep = *kind == BlockKind::Variable || t == Token::Single(-4);
            if keep {
                kept.extend(pos..pos + t.len());
                tokens.push(match t {
                    Token::Single(x) => Token::Single(lower(x, shift)),
                    Token::Pair(x, y) => Token::Pair(lower(x, shift), lower(y, shift)),
                });
            }
            pos += t.len();
        }
    }
    let reduced = LatticeWord::from_tokens(rank, &tokens)?;
    Ok(ReducedWord { spec, source: word.clone(), word: reduced, kept })
}

fn lower(x: i32, shift: i32) -> i32 {
    x.signum() * (x.abs() - shift)
}

/// Decoration of a matching arc.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mark {
    Plain,
    /// White vertex at the midpoint.
    White,
    /// Black vertex at the midpoint.
    Black,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchPoint {
    pub color: Color,
    pub label: u8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatchEdge {
    /// 0-indexed endpoints, `ends[0] < ends[1]`.
    pub ends: [usize; 2],
    pub mark: Mark,
}

/// Marked non-crossing perfect matching on points along a line.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Matching {
    pub points: Vec<MatchPoint>,
    pub edges: Vec<MatchEdge>,
}

/// The mark an arc must carry given its endpoints.
pub fn required_mark(p: MatchPoint, q: MatchPoint) -> Option<Mark> {
    match (p.label, q.label, p.color, q.color) {
        (1, 2, Color::Black, Color::Black) => Some(Mark::White),
        (2, 1, Color::White, Color::White) => Some(Mark::Black),
        (1, 1, _, _) | (2, 2, _, _) => Some(Mark::Plain),
        _ => None,
    }
}

impl Matching {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matching serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, ProjectionError> {
        let m: Matching = serde_json::from_str(s).map_err(|e| ProjectionError::Json(e.to_string()))?;
        if !matching_validate(&m) {
            return Err(ProjectionError::Json("matching violates its invariants".into()));
        }
        Ok(m)
    }

    /// Edges as 1-indexed pairs, sorted.
    pub fn pairs(&self) -> Vec<(usize, usize, Mark)> {
        let mut v: Vec<_> = self.edges.iter().map(|e| (e.ends[0] + 1, e.ends[1] + 1, e.mark)).collect();
        v.sort();
        v
    }
}

/// Perfect, non-crossing, and every mark follows from its endpoints.
pub fn matching_validate(m: &Matching) -> bool {
    let n = m.points.len();
    let mut partner = vec![usize::MAX; n];
    for e in &m.edges {
        let [i, j] = e.ends;
        if i >= j || j >= n || partner[i] != usize::MAX || partner[j] != usize::MAX {
            return false;
        }
        partner[i] = j;
        partner[j] = i;
        if m.points[i].label == 0 || m.points[i].label > 2 || m.points[j].label == 0 || m.points[j].label > 2 {
            return false;
        }
        if required_mark(m.points[i], m.points[j]) != Some(e.mark) {
            return false;
        }
    }
    if partner.contains(&usize::MAX) {
        return false;
    }
    // Non-crossing iff a stack scan closes every arc against the latest open one.
    let mut stack = Vec::new();
    for (i, &p) in partner.iter().enumerate() {
        if p > i {
            stack.push(i);
        } else if stack.pop() != Some(p) {
            return false;
        }
    }
    true
}

/// Grows the marked matching of a rank-2 Yamanouchi word.
///
/// Unbarred `1` and barred `2` open an arc; unbarred `2` and barred `1` close the most
/// recent open one.
pub fn sl2_growth(word: &LatticeWord) -> Result<Matching, ProjectionError> {
    if word.rank() != 2 {
        return Err(ProjectionError::Word(crate::error::WordError::Rank(word.rank())));
    }
    let points: Vec<MatchPoint> = word
        .letters()
        .iter()
        .map(|&x| MatchPoint {
            color: if x > 0 { Color::Black } else { Color::White },
            label: x.unsigned_abs() as u8,
        })
        .collect();
    let mut stack = Vec::new();
    let mut edges = Vec::new();
    for (i, &x) in word.letters().iter().enumerate() {
        if x == 1 || x == -2 {
            stack.push(i);
        } else {
            let j = stack.pop().ok_or(ProjectionError::Unmatched(i))?;
            let mark = required_mark(points[j], points[i]).ok_or(ProjectionError::Unmatched(i))?;
            edges.push(MatchEdge { ends: [j, i], mark });
        }
    }
    if let Some(&j) = stack.first() {
        return Err(ProjectionError::Unmatched(j));
    }
    edges.sort();
    Ok(Matching { points, edges })
}

/// Output of the end-to-end projection of one plane partition.
#[derive(Clone, Debug)]
pub struct Projected {
    pub source: LatticeWord,
    pub reduced: ReducedWord,
    pub matching: Option<Matching>,
}

/// Restricts `p`, reads its word, projects it and grows the matching at rank 2.
pub fn project_plane_partition(p: &PlanePartition, class: SymmetryClass) -> Result<Projected, ProjectionError> {
    match class {
        SymmetryClass::Cspp => return Err(ProjectionError::Cyclic),
        SymmetryClass::Spp | SymmetryClass::Tspp | SymmetryClass::Tsscpp => {}
        other => return Err(ProjectionError::Unsupported(other)),
    }
    let spec = ClassWordSpec::for_box(class, p.box3()).map_err(crate::error::WebError::from)?;
    let web = HourglassWeb::restrict(p, class)?;
    let source = boundary_word(&web)?;
    let reduced = project_word(spec, &source)?;
    let matching = if reduced.word.rank() == 2 { Some(sl2_growth(&reduced.word)?) } else { None };
    Ok(Projected { source, reduced, matching })
}
