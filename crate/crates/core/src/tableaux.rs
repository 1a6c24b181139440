//! Oscillating tableaux of Yamanouchi words.
//!
//! A row is a strip of cells on both sides of a vertical line. Column `1` is the first
//! cell right of the line and column `-1` the first cell left of it. Each cell records
//! the signed step numbers placed in it; a cell with one entry is open and a cell with a
//! positive and a negative entry is closed.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::WordError;
use crate::word::LatticeWord;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub col: i64,
    pub entries: Vec<i32>,
}

impl Cell {
    fn is_open_positive(&self) -> bool {
        self.entries.len() == 1 && self.entries[0] > 0
    }

    fn is_open_negative(&self) -> bool {
        self.entries.len() == 1 && self.entries[0] < 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OscillatingTableau {
    rank: usize,
    shapes: Vec<Vec<i64>>,
    /// Cells of each row, sorted by column.
    rows: Vec<Vec<Cell>>,
}

impl OscillatingTableau {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `λ^0 .. λ^n`.
    pub fn shapes(&self) -> &[Vec<i64>] {
        &self.shapes
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.shapes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Entries of each row, left to right, barred entries negative.
    pub fn filling(&self) -> Vec<Vec<i32>> {
        self.rows
            .iter()
            .map(|r| r.iter().flat_map(|c| c.entries.iter().copied()).collect())
            .collect()
    }

    pub fn final_shape(&self) -> &[i64] {
        self.shapes.last().expect("at least one shape")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&TableauJson { r: self.rank, shapes: self.shapes.clone(), filling: self.filling() })
            .expect("tableau serializes")
    }

    /// Parses and checks that the filling is the one the shape sequence produces.
    pub fn from_json(s: &str) -> Result<Self, WordError> {
        let j: TableauJson = serde_json::from_str(s).map_err(|e| WordError::Json(e.to_string()))?;
        if j.shapes.len() > crate::word::MAX_WORD_TOKENS * 2 + 1 {
            return Err(WordError::Tableau("too many shapes".into()));
        }
        let t = OscillatingTableau::from_shapes(j.r, j.shapes)?;
        if t.filling() != j.filling {
            return Err(WordError::Tableau("filling does not match the shape sequence".into()));
        }
        Ok(t)
    }

    /// Rebuilds the tableau from its shape sequence.
    pub fn from_shapes(rank: usize, shapes: Vec<Vec<i64>>) -> Result<Self, WordError> {
        let w = word_of_shapes(rank, &shapes)?;
        word_to_tableau(&w)
    }
}

impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let shapes: Vec<String> = self
            .shapes
            .iter()
            .map(|s| s.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        writeln!(f, "{}", shapes.join(" -> "))?;
        for (k, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row
                .iter()
                .map(|c| {
                    let es: Vec<String> = c.entries.iter().map(i32::to_string).collect();
                    format!("{}:[{}]", c.col, es.join(" "))
                })
                .collect();
            writeln!(f, "row {}: {}", k + 1, cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    r: usize,
    shapes: Vec<Vec<i64>>,
    filling: Vec<Vec<i32>>,
}

/// Builds the oscillating tableau of a Yamanouchi word.
pub fn word_to_tableau(word: &LatticeWord) -> Result<OscillatingTableau, WordError> {
    if let Some(pos) = word.first_violation() {
        return Err(WordError::NotYamanouchi(pos));
    }
    let r = word.rank();
    let mut shape = vec![0i64; r];
    let mut shapes = vec![shape.clone()];
    let mut rows: Vec<Vec<Cell>> = vec![Vec::new(); r];
    for (k, &x) in word.letters().iter().enumerate() {
        let step = k as i32 + 1;
        let row = &mut rows[x.unsigned_abs() as usize - 1];
        if x < 0 {
            if let Some(c) = row.iter_mut().rev().find(|c| c.is_open_positive()) {
                c.entries.push(-step);
            } else {
                let col = row.first().map_or(0, |c| c.col.min(0)) - 1;
                row.insert(0, Cell { col, entries: vec![-step] });
            }
        } else if let Some(c) = row.iter_mut().find(|c| c.is_open_negative()) {
            c.entries.push(step);
        } else {
            let col = row.last().map_or(0, |c| c.col.max(0)) + 1;
            row.push(Cell { col, entries: vec![step] });
        }
        shape[x.unsigned_abs() as usize - 1] += if x > 0 { 1 } else { -1 };
        shapes.push(shape.clone());
    }
    Ok(OscillatingTableau { rank: r, shapes, rows })
}

/// Reads the word back off the shape sequence.
pub fn tableau_to_word(t: &OscillatingTableau) -> Result<LatticeWord, WordError> {
    word_of_shapes(t.rank, &t.shapes)
}

fn word_of_shapes(rank: usize, shapes: &[Vec<i64>]) -> Result<LatticeWord, WordError> {
    let bad = |m: String| WordError::Tableau(m);
    let first = shapes.first().ok_or_else(|| bad("no shapes".into()))?;
    if first.len() != rank || first.iter().any(|&x| x != 0) {
        return Err(bad("first shape must be the zero shape".into()));
    }
    let mut letters = Vec::with_capacity(shapes.len() - 1);
    for (k, w) in shapes.windows(2).enumerate() {
        if w[1].len() != rank {
            return Err(bad(format!("shape {} has {} rows", k + 1, w[1].len())));
        }
        let diffs: Vec<(usize, i64)> =
            (0..rank).map(|j| (j, w[1][j] - w[0][j])).filter(|&(_, d)| d != 0).collect();
        match diffs[..] {
            [(j, d)] if d.abs() == 1 => letters.push(d as i32 * (j as i32 + 1)),
            _ => return Err(bad(format!("shapes {k} and {} differ by more than one box", k + 1))),
        }
    }
    let word = LatticeWord::new(rank, letters, vec![])?;
    if let Some(pos) = word.first_violation() {
        return Err(WordError::NotYamanouchi(pos));
    }
    Ok(word)
}
