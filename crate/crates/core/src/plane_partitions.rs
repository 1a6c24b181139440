//! Plane partitions inside an `a x b x c` box.
//!
//! Heights are stored 0-indexed. Error values and the JSON form use 1-indexed
//! cells so that `(i, j)` reads as `p_{ij}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::PpError;

/// Side lengths of the ambient box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Box3 {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

impl Box3 {
    pub const fn new(a: usize, b: usize, c: usize) -> Self {
        Box3 { a, b, c }
    }

    pub const fn cube(n: usize) -> Self {
        Box3 { a: n, b: n, c: n }
    }

    pub fn is_cube(&self) -> bool {
        self.a == self.b && self.b == self.c
    }
}

impl fmt::Display for Box3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.c)
    }
}

impl FromStr for Box3 {
    type Err = PpError;

    /// Parses `A,B,C`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(PpError::BadBox(s.to_string()));
        }
        let mut v = [0usize; 3];
        for (slot, part) in v.iter_mut().zip(&parts) {
            *slot = part.parse().map_err(|_| PpError::BadBox(s.to_string()))?;
        }
        Ok(Box3::new(v[0], v[1], v[2]))
    }
}

/// Symmetry classes with their defining operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymmetryClass {
    Plain,
    Spp,
    Cspp,
    Tspp,
    Scpp,
    Tsscpp,
}

impl SymmetryClass {
    pub const ALL: [SymmetryClass; 6] = [
        SymmetryClass::Plain,
        SymmetryClass::Spp,
        SymmetryClass::Cspp,
        SymmetryClass::Tspp,
        SymmetryClass::Scpp,
        SymmetryClass::Tsscpp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SymmetryClass::Plain => "plain",
            SymmetryClass::Spp => "spp",
            SymmetryClass::Cspp => "cspp",
            SymmetryClass::Tspp => "tspp",
            SymmetryClass::Scpp => "scpp",
            SymmetryClass::Tsscpp => "tsscpp",
        }
    }

    /// Checks the box-shape requirement of the class.
    pub fn check_box(self, bx: Box3) -> Result<(), PpError> {
        let ok = match self {
            SymmetryClass::Plain | SymmetryClass::Scpp => true,
            SymmetryClass::Spp => bx.a == bx.b,
            SymmetryClass::Cspp | SymmetryClass::Tspp => bx.is_cube(),
            SymmetryClass::Tsscpp => bx.is_cube() && bx.a % 2 == 0,
        };
        if ok {
            Ok(())
        } else {
            Err(PpError::ClassShape { class: self, bx })
        }
    }
}

impl fmt::Display for SymmetryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymmetryClass {
    type Err = PpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SymmetryClass::ALL
            .into_iter()
            .find(|c| c.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| PpError::UnknownClass(s.to_string()))
    }
}

/// Operations whose fixed points define the symmetry classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymmetryOp {
    Transpose,
    Complement,
    CyclicRotate,
}

/// A plane partition: weakly decreasing heights in `0..=c` on an `a x b` grid.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    bx: Box3,
    heights: Vec<Vec<usize>>,
}

impl PlanePartition {
    /// Validates a height matrix against the box.
    pub fn validate(heights: Vec<Vec<usize>>, bx: Box3) -> Result<Self, PpError> {
        if heights.len() != bx.a {
            return Err(PpError::Dimension { row: None, expected: bx.a, found: heights.len() });
        }
        for (i, row) in heights.iter().enumerate() {
            if row.len() != bx.b {
                return Err(PpError::Dimension { row: Some(i + 1), expected: bx.b, found: row.len() });
            }
            for (j, &h) in row.iter().enumerate() {
                if h > bx.c {
                    return Err(PpError::OutOfRange { i: i + 1, j: j + 1, value: h, c: bx.c });
                }
                if j > 0 && row[j - 1] < h {
                    return Err(PpError::RowIncrease { i: i + 1, j: j + 1 });
                }
                if i > 0 && heights[i - 1][j] < h {
                    return Err(PpError::ColumnIncrease { i: i + 1, j: j + 1 });
                }
            }
        }
        Ok(PlanePartition { bx, heights })
    }

    pub fn empty(bx: Box3) -> Self {
        PlanePartition { bx, heights: vec![vec![0; bx.b]; bx.a] }
    }

    pub fn full(bx: Box3) -> Self {
        PlanePartition { bx, heights: vec![vec![bx.c; bx.b]; bx.a] }
    }

    pub fn box3(&self) -> Box3 {
        self.bx
    }

    pub fn heights(&self) -> &[Vec<usize>] {
        &self.heights
    }

    /// Height at 0-indexed `(i, j)`.
    pub fn height(&self, i: usize, j: usize) -> usize {
        self.heights[i][j]
    }

    pub fn volume(&self) -> usize {
        self.heights.iter().flatten().sum()
    }

    /// Whether the 1-indexed cube `(i, j, k)` belongs to the partition.
    pub fn contains_cube(&self, i: usize, j: usize, k: usize) -> bool {
        i >= 1 && j >= 1 && k >= 1 && i <= self.bx.a && j <= self.bx.b && self.heights[i - 1][j - 1] >= k
    }

    /// All cubes, 1-indexed, in row-major then height order.
    pub fn cubes(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.volume());
        for (i, row) in self.heights.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                out.extend((1..=h).map(|k| (i + 1, j + 1, k)));
            }
        }
        out
    }

    pub fn has_symmetry(&self, class: SymmetryClass) -> Result<bool, PpError> {
        class.check_box(self.bx)?;
        Ok(match class {
            SymmetryClass::Plain => true,
            SymmetryClass::Spp => self.is_transpose_fixed(),
            SymmetryClass::Cspp => self.is_rotation_fixed(),
            SymmetryClass::Tspp => self.is_transpose_fixed() && self.is_rotation_fixed(),
            SymmetryClass::Scpp => self.is_complement_fixed(),
            SymmetryClass::Tsscpp => {
                self.is_transpose_fixed() && self.is_rotation_fixed() && self.is_complement_fixed()
            }
        })
    }

    fn is_transpose_fixed(&self) -> bool {
        let n = self.bx.a;
        (0..n).all(|i| (0..i).all(|j| self.heights[i][j] == self.heights[j][i]))
    }

    fn is_rotation_fixed(&self) -> bool {
        self.cubes().into_iter().all(|(i, j, k)| self.contains_cube(j, k, i))
    }

    fn is_complement_fixed(&self) -> bool {
        let Box3 { a, b, c } = self.bx;
        (0..a).all(|i| (0..b).all(|j| self.heights[i][j] + self.heights[a - 1 - i][b - 1 - j] == c))
    }

    /// Cyclic symmetry via "row i is conjugate to column i". Cross-check only.
    pub fn rows_conjugate_to_columns(&self) -> bool {
        let n = self.bx.a;
        if !self.bx.is_cube() {
            return false;
        }
        (0..n).all(|i| {
            (1..=n).all(|k| {
                let conj = self.heights[i].iter().filter(|&&h| h >= k).count();
                conj == self.heights[k - 1][i]
            })
        })
    }

    pub fn apply(&self, op: SymmetryOp) -> Result<Self, PpError> {
        let Box3 { a, b, c } = self.bx;
        let heights = match op {
            SymmetryOp::Transpose => {
                if a != b {
                    return Err(PpError::ClassShape { class: SymmetryClass::Spp, bx: self.bx });
                }
                (0..a).map(|i| (0..b).map(|j| self.heights[j][i]).collect()).collect()
            }
            SymmetryOp::Complement => (0..a)
                .map(|i| (0..b).map(|j| c - self.heights[a - 1 - i][b - 1 - j]).collect())
                .collect(),
            SymmetryOp::CyclicRotate => {
                if !self.bx.is_cube() {
                    return Err(PpError::ClassShape { class: SymmetryClass::Cspp, bx: self.bx });
                }
                // (i,j,k) -> (j,k,i), so p'[x][y] = #{z : p[z][x] >= y}.
                (0..a)
                    .map(|x| {
                        (0..b)
                            .map(|y| (0..c).filter(|&z| self.heights[z][x] > y).count())
                            .collect()
                    })
                    .collect()
            }
        };
        PlanePartition::validate(heights, self.bx)
    }

    /// Adds or removes the 1-indexed cube `(i, j, k)`.
    pub fn toggle_cube(&self, i: usize, j: usize, k: usize) -> Result<Self, PpError> {
        let Box3 { a, b, c } = self.bx;
        let bad = PpError::Toggle { i, j, k };
        if i == 0 || j == 0 || k == 0 || i > a || j > b || k > c {
            return Err(bad);
        }
        let h = self.heights[i - 1][j - 1];
        let new_h = if h == k - 1 {
            k
        } else if h == k {
            k - 1
        } else {
            return Err(bad);
        };
        let mut heights = self.heights.clone();
        heights[i - 1][j - 1] = new_h;
        PlanePartition::validate(heights, self.bx).map_err(|_| bad)
    }

    /// Cubes whose toggle keeps a valid plane partition, in 1-indexed form.
    pub fn toggleable_cubes(&self) -> Vec<(usize, usize, usize)> {
        let Box3 { a, b, c } = self.bx;
        let mut out = Vec::new();
        for i in 1..=a {
            for j in 1..=b {
                let h = self.heights[i - 1][j - 1];
                for k in [h, h + 1] {
                    if k >= 1 && k <= c && self.toggle_cube(i, j, k).is_ok() {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&PpJson { bx: [self.bx.a, self.bx.b, self.bx.c], heights: self.heights.clone() })
            .expect("plane partition serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, PpError> {
        let raw: PpJson = serde_json::from_str(s).map_err(|e| PpError::Json(e.to_string()))?;
        let [a, b, c] = raw.bx;
        PlanePartition::validate(raw.heights, Box3::new(a, b, c))
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .heights
            .iter()
            .map(|r| format!("[{}]", r.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "[{}]", rows.join(","))
    }
}

#[derive(Serialize, Deserialize)]
struct PpJson {
    #[serde(rename = "box")]
    bx: [usize; 3],
    heights: Vec<Vec<usize>>,
}

/// Number of plane partitions in the box, `prod (i+j+c-1)/(i+j-1)`.
pub fn macmahon_count(bx: Box3) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 1..=bx.a {
        for j in 1..=bx.b {
            num *= BigUint::from(i + j + bx.c - 1);
            den *= BigUint::from(i + j - 1);
        }
    }
    num / den
}

/// Visits every plane partition of the box in descending lexicographic order of the
/// row-major height vector.
pub fn for_each_in_box(bx: Box3, mut visit: impl FnMut(&PlanePartition)) {
    let mut p = PlanePartition::empty(bx);
    fill(&mut p, 0, &Links::None, &mut visit);
}

pub fn enumerate_box(bx: Box3) -> Vec<PlanePartition> {
    let mut out = Vec::new();
    for_each_in_box(bx, |p| out.push(p.clone()));
    out
}

/// Elements of a symmetry class, in the same order as [`enumerate_box`].
///
/// Transpose and complement constraints are propagated cell by cell during the
/// search; the cyclic condition is checked on completed matrices.
pub fn enumerate_class(class: SymmetryClass, bx: Box3) -> Result<Vec<PlanePartition>, PpError> {
    class.check_box(bx)?;
    let links = match class {
        SymmetryClass::Plain | SymmetryClass::Cspp => Links::None,
        SymmetryClass::Spp | SymmetryClass::Tspp => Links::Transpose,
        SymmetryClass::Scpp => Links::Complement,
        SymmetryClass::Tsscpp => Links::Both,
    };
    let mut out = Vec::new();
    let mut p = PlanePartition::empty(bx);
    fill(&mut p, 0, &links, &mut |q: &PlanePartition| {
        if q.has_symmetry(class).unwrap_or(false) {
            out.push(q.clone());
        }
    });
    Ok(out)
}

enum Links {
    None,
    Transpose,
    Complement,
    Both,
}

impl Links {
    /// Cells forced by setting 0-indexed `(i, j)` to `v`, with their forced values.
    fn partners(&self, bx: Box3, i: usize, j: usize, v: usize) -> Vec<(usize, usize, usize)> {
        let t = |(x, y, w): (usize, usize, usize)| (y, x, w);
        let cmp = |(x, y, w): (usize, usize, usize)| (bx.a - 1 - x, bx.b - 1 - y, bx.c - w);
        let me = (i, j, v);
        match self {
            Links::None => vec![],
            Links::Transpose => vec![t(me)],
            Links::Complement => vec![cmp(me)],
            Links::Both => vec![t(me), cmp(me), t(cmp(me))],
        }
    }
}

fn fill(p: &mut PlanePartition, pos: usize, links: &Links, visit: &mut dyn FnMut(&PlanePartition)) {
    let mut forced = vec![vec![false; p.bx.b]; p.bx.a];
    fill_linked(p, &mut forced, pos, links, visit);
}

fn fill_linked(
    p: &mut PlanePartition,
    forced: &mut Vec<Vec<bool>>,
    pos: usize,
    links: &Links,
    visit: &mut dyn FnMut(&PlanePartition),
) {
    let Box3 { a, b, c } = p.bx;
    if pos == a * b {
        visit(p);
        return;
    }
    let (i, j) = (pos / b, pos % b);
    let mut hi = c;
    if i > 0 {
        hi = hi.min(p.heights[i - 1][j]);
    }
    if j > 0 {
        hi = hi.min(p.heights[i][j - 1]);
    }
    if forced[i][j] {
        if p.heights[i][j] <= hi {
            fill_linked(p, forced, pos + 1, links, visit);
        }
        return;
    }
    for v in (0..=hi).rev() {
        // Partners of a free cell always lie later in row-major order, since an
        // earlier partner would have forced this cell.
        let mut placed = Vec::new();
        let mut ok = true;
        for (x, y, w) in links.partners(p.bx, i, j, v) {
            if (x, y) == (i, j) {
                ok &= w == v;
            } else if forced[x][y] {
                ok &= p.heights[x][y] == w;
            } else {
                forced[x][y] = true;
                p.heights[x][y] = w;
                placed.push((x, y));
            }
        }
        if ok {
            p.heights[i][j] = v;
            fill_linked(p, forced, pos + 1, links, visit);
        }
        for (x, y) in placed {
            forced[x][y] = false;
            p.heights[x][y] = 0;
        }
    }
    p.heights[i][j] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(rows: &[&[usize]], bx: Box3) -> PlanePartition {
        PlanePartition::validate(rows.iter().map(|r| r.to_vec()).collect(), bx).unwrap()
    }

    #[test]
    fn validate_examples() {
        let spp = pp(&[&[4, 4, 3, 3], &[4, 4, 3, 2], &[3, 3, 3, 0], &[3, 2, 0, 0]], Box3::cube(4));
        assert!(spp.has_symmetry(SymmetryClass::Spp).unwrap());
        assert!(PlanePartition::validate(vec![vec![0]], Box3::cube(1)).is_ok());
        let err = PlanePartition::validate(vec![vec![0, 1]], Box3::new(1, 2, 1)).unwrap_err();
        assert_eq!(err, PpError::RowIncrease { i: 1, j: 2 });
        let err = PlanePartition::validate(vec![vec![0], vec![1]], Box3::new(2, 1, 1)).unwrap_err();
        assert_eq!(err, PpError::ColumnIncrease { i: 2, j: 1 });
        let err = PlanePartition::validate(vec![vec![2]], Box3::new(1, 1, 1)).unwrap_err();
        assert_eq!(err, PpError::OutOfRange { i: 1, j: 1, value: 2, c: 1 });
        assert!(matches!(
            PlanePartition::validate(vec![vec![0]], Box3::new(2, 1, 1)),
            Err(PpError::Dimension { .. })
        ));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_box(Box3::cube(1)).len(), 2);
        assert_eq!(enumerate_box(Box3::cube(2)).len(), 20);
        assert_eq!(enumerate_box(Box3::new(0, 3, 2)).len(), 1);
        assert_eq!(macmahon_count(Box3::cube(1)), BigUint::from(2u32));
        assert_eq!(macmahon_count(Box3::cube(2)), BigUint::from(20u32));
        assert_eq!(macmahon_count(Box3::new(3, 2, 0)), BigUint::from(1u32));
    }

    #[test]
    fn enumeration_order_is_descending() {
        let all = enumerate_box(Box3::cube(2));
        assert_eq!(all[0], PlanePartition::full(Box3::cube(2)));
        assert_eq!(*all.last().unwrap(), PlanePartition::empty(Box3::cube(2)));
        for w in all.windows(2) {
            assert!(w[0].heights > w[1].heights);
        }
    }

    #[test]
    fn class_examples() {
        let t = enumerate_class(SymmetryClass::Tsscpp, Box3::cube(2)).unwrap();
        assert_eq!(t, vec![pp(&[&[2, 1], &[1, 0]], Box3::cube(2))]);
        assert_eq!(enumerate_class(SymmetryClass::Tsscpp, Box3::cube(6)).unwrap().len(), 7);
        assert_eq!(enumerate_class(SymmetryClass::Tspp, Box3::cube(1)).unwrap().len(), 2);
        assert!(enumerate_class(SymmetryClass::Tsscpp, Box3::cube(3)).is_err());
        assert!(enumerate_class(SymmetryClass::Spp, Box3::new(2, 3, 1)).is_err());
    }

    #[test]
    fn example_matrices() {
        let b = Box3::cube(4);
        let cspp = pp(&[&[4, 4, 3, 3], &[4, 3, 3, 1], &[4, 3, 2, 0], &[2, 1, 1, 0]], b);
        assert!(cspp.has_symmetry(SymmetryClass::Cspp).unwrap());
        assert!(cspp.rows_conjugate_to_columns());
        assert_eq!(cspp.apply(SymmetryOp::CyclicRotate).unwrap(), cspp);
        let tspp = pp(&[&[4, 4, 4, 3], &[4, 3, 2, 1], &[4, 2, 1, 1], &[3, 1, 1, 0]], b);
        assert!(tspp.has_symmetry(SymmetryClass::Tspp).unwrap());
        let tsscpp = pp(&[&[4, 4, 3, 2], &[4, 3, 2, 1], &[3, 2, 1, 0], &[2, 1, 0, 0]], b);
        assert!(tsscpp.has_symmetry(SymmetryClass::Tsscpp).unwrap());
        let spp = pp(&[&[4, 4, 3, 3], &[4, 4, 3, 2], &[3, 3, 3, 0], &[3, 2, 0, 0]], b);
        assert_eq!(spp.apply(SymmetryOp::Transpose).unwrap(), spp);
    }

    #[test]
    fn zero_matrix_symmetries() {
        let z = PlanePartition::empty(Box3::cube(2));
        for class in [SymmetryClass::Spp, SymmetryClass::Cspp, SymmetryClass::Tspp] {
            assert!(z.has_symmetry(class).unwrap());
        }
        assert!(!z.has_symmetry(SymmetryClass::Scpp).unwrap());
        assert_eq!(z.apply(SymmetryOp::Complement).unwrap(), PlanePartition::full(Box3::cube(2)));
    }

    #[test]
    fn toggle_examples() {
        let e = PlanePartition::empty(Box3::cube(1));
        let one = e.toggle_cube(1, 1, 1).unwrap();
        assert_eq!(one.heights(), &[vec![1]]);
        assert_eq!(one.toggle_cube(1, 1, 1).unwrap(), e);
        assert!(PlanePartition::empty(Box3::cube(2)).toggle_cube(2, 2, 1).is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = pp(&[&[2, 1], &[1, 0]], Box3::cube(2));
        let s = p.to_json();
        assert_eq!(s, r#"{"box":[2,2,2],"heights":[[2,1],[1,0]]}"#);
        assert_eq!(PlanePartition::from_json(&s).unwrap(), p);
        assert!(PlanePartition::from_json("{").is_err());
    }
}
