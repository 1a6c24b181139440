//! Boundary words of the symmetric classes: generation, membership and counts.
//!
//! Every class word is a concatenation of blocks. Fixed blocks are determined by the
//! parameters; variable blocks are arrangements of two token kinds subject to a
//! class-specific rule.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{PpError, TripError};
use crate::plane_partitions::{enumerate_class, Box3, SymmetryClass};
use crate::trips::boundary_word;
use crate::web::HourglassWeb;
use crate::word::{LatticeWord, Token};

const T1: Token = Token::Single(1);
const T2: Token = Token::Single(2);
const T4: Token = Token::Single(4);
const NEG1: Token = Token::Single(-1);
const NEG4: Token = Token::Single(-4);
const P23: Token = Token::Pair(2, 3);
const P34: Token = Token::Pair(3, 4);
const NEG31: Token = Token::Pair(-3, -1);

/// A symmetry class together with its word parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassWordSpec {
    Spp { a: usize, c: usize },
    Cspp { a: usize },
    Tspp { a: usize },
    Tsscpp { d: usize },
}

impl ClassWordSpec {
    pub fn new(class: SymmetryClass, a: Option<usize>, c: Option<usize>, d: Option<usize>) -> Result<Self, PpError> {
        let need = |v: Option<usize>, name: &str| {
            v.ok_or_else(|| PpError::Params(format!("{} needs {name}", class.name())))
        };
        match class {
            SymmetryClass::Spp => Ok(ClassWordSpec::Spp { a: need(a, "a")?, c: need(c, "c")? }),
            SymmetryClass::Cspp => Ok(ClassWordSpec::Cspp { a: need(a, "a")? }),
            SymmetryClass::Tspp => Ok(ClassWordSpec::Tspp { a: need(a, "a")? }),
            SymmetryClass::Tsscpp => {
                let d = need(d, "d")?;
                if d == 0 {
                    return Err(PpError::Params("tsscpp needs d >= 1".into()));
                }
                Ok(ClassWordSpec::Tsscpp { d })
            }
            _ => Err(PpError::Params(format!("no class words for {}", class.name()))),
        }
    }

    /// Parameters read off a box of the class.
    pub fn for_box(class: SymmetryClass, bx: Box3) -> Result<Self, PpError> {
        class.check_box(bx)?;
        match class {
            SymmetryClass::Tsscpp if bx.a == 0 => Err(PpError::ClassShape { class, bx }),
            SymmetryClass::Tsscpp => ClassWordSpec::new(class, None, None, Some(bx.a / 2)),
            _ => ClassWordSpec::new(class, Some(bx.a), Some(bx.c), None),
        }
    }

    pub fn class(self) -> SymmetryClass {
        match self {
            ClassWordSpec::Spp { .. } => SymmetryClass::Spp,
            ClassWordSpec::Cspp { .. } => SymmetryClass::Cspp,
            ClassWordSpec::Tspp { .. } => SymmetryClass::Tspp,
            ClassWordSpec::Tsscpp { .. } => SymmetryClass::Tsscpp,
        }
    }

    pub fn box3(self) -> Box3 {
        match self {
            ClassWordSpec::Spp { a, c } => Box3::new(a, a, c),
            ClassWordSpec::Cspp { a } | ClassWordSpec::Tspp { a } => Box3::cube(a),
            ClassWordSpec::Tsscpp { d } => Box3::cube(2 * d),
        }
    }
}

impl fmt::Display for ClassWordSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassWordSpec::Spp { a, c } => write!(f, "spp a={a} c={c}"),
            ClassWordSpec::Cspp { a } => write!(f, "cspp a={a}"),
            ClassWordSpec::Tspp { a } => write!(f, "tspp a={a}"),
            ClassWordSpec::Tsscpp { d } => write!(f, "tsscpp d={d}"),
        }
    }
}

/// Role of a block in a class word.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    Fixed,
    Variable,
}

/// A class word cut into its blocks, in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blocks {
    pub spec: ClassWordSpec,
    pub blocks: Vec<(BlockKind, Vec<Token>)>,
}

fn rep(t: Token, k: usize) -> Vec<Token> {
    vec![t; k]
}

fn alternation(d: usize) -> Vec<Token> {
    let mut v = vec![T2];
    for _ in 1..d {
        v.push(NEG4);
        v.push(T2);
    }
    v
}

fn count(ts: &[Token], t: Token) -> usize {
    ts.iter().filter(|&&x| x == t).count()
}

/// Prefix condition on the last two blocks of a totally symmetric word: for every `k`,
/// the `(2,3)`s among the last `k` tokens of the first block are at most the `4`s among
/// the first `k` tokens of the second.
fn tspp_ok(first: &[Token], second: &[Token]) -> bool {
    let a = first.len();
    let mut pairs = 0;
    let mut fours = 0;
    for k in 0..a {
        pairs += usize::from(first[a - 1 - k] == P23);
        fours += usize::from(second[k] == T4);
        if pairs > fours {
            return false;
        }
    }
    true
}

/// `4 · block · (3,4)` read as a ballot sequence.
fn tsscpp_ok(block: &[Token]) -> bool {
    let mut h: i64 = 1;
    for &t in block {
        h += if t == T4 { 1 } else { -1 };
        if h < 0 {
            return false;
        }
    }
    h == 1
}

/// Position `i` of `(-3,-1)` in the third block forces `(3,4)` at position `a - 1 - i`
/// of the fourth.
fn cspp_fourth(third: &[Token]) -> Vec<Token> {
    let a = third.len();
    (0..a).map(|k| if third[a - 1 - k] == NEG31 { P34 } else { T4 }).collect()
}

/// Splits a word into the blocks of `spec`, or `None` if it is not a class word.
pub fn split_blocks(spec: ClassWordSpec, word: &LatticeWord) -> Option<Blocks> {
    let toks = word.tokens();
    let mut rest: &[Token] = &toks;
    let mut blocks = Vec::new();
    let mut take = |n: usize, kind: BlockKind, rest: &mut &[Token]| -> Option<Vec<Token>> {
        if rest.len() < n {
            return None;
        }
        let (head, tail) = rest.split_at(n);
        *rest = tail;
        blocks.push((kind, head.to_vec()));
        Some(head.to_vec())
    };
    use BlockKind::{Fixed, Variable};
    let ok = match spec {
        ClassWordSpec::Spp { a, c } => {
            take(a, Fixed, &mut rest)? == rep(T1, a)
                && take(c, Fixed, &mut rest)? == rep(NEG4, c)
                && take(a, Fixed, &mut rest)? == rep(T2, a)
                && {
                    let v = take(a + c, Variable, &mut rest)?;
                    count(&v, T4) == c && count(&v, P34) == a
                }
        }
        ClassWordSpec::Cspp { a } => {
            take(a, Fixed, &mut rest)? == rep(T1, a)
                && take(a, Fixed, &mut rest)? == rep(NEG4, a)
                && {
                    let third = take(a, Variable, &mut rest)?;
                    let fourth = take(a, Variable, &mut rest)?;
                    third.iter().all(|&t| t == NEG31 || t == NEG1) && fourth == cspp_fourth(&third)
                }
        }
        ClassWordSpec::Tspp { a } => {
            take(a, Fixed, &mut rest)? == rep(T1, a) && {
                let first = take(a, Variable, &mut rest)?;
                let second = take(a, Variable, &mut rest)?;
                first.iter().all(|&t| t == P23 || t == T2)
                    && second.iter().all(|&t| t == T4 || t == P34)
                    && count(&first, P23) == count(&second, T4)
                    && tspp_ok(&first, &second)
            }
        }
        ClassWordSpec::Tsscpp { d } => {
            take(d, Fixed, &mut rest)? == rep(T1, d)
                && take(2 * d - 1, Fixed, &mut rest)? == alternation(d)
                && {
                    let v = take(2 * (d - 1), Variable, &mut rest)?;
                    v.iter().all(|&t| t == T4 || t == P34) && tsscpp_ok(&v)
                }
                && take(1, Fixed, &mut rest)? == vec![P34]
        }
    };
    (ok && rest.is_empty()).then_some(Blocks { spec, blocks })
}

/// Membership test for the class words of `spec`.
pub fn validate_word(spec: ClassWordSpec, word: &LatticeWord) -> bool {
    split_blocks(spec, word).is_some()
}

/// All arrangements of `x` copies of `p` and `y` copies of `q`.
fn arrangements(p: Token, x: usize, q: Token, y: usize) -> Vec<Vec<Token>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(x + y);
    fn go(p: Token, x: usize, q: Token, y: usize, cur: &mut Vec<Token>, out: &mut Vec<Vec<Token>>) {
        if x == 0 && y == 0 {
            out.push(cur.clone());
            return;
        }
        if x > 0 {
            cur.push(p);
            go(p, x - 1, q, y, cur, out);
            cur.pop();
        }
        if y > 0 {
            cur.push(q);
            go(p, x, q, y - 1, cur, out);
            cur.pop();
        }
    }
    go(p, x, q, y, &mut cur, &mut out);
    out
}

fn assemble(parts: &[&[Token]]) -> LatticeWord {
    let toks: Vec<Token> = parts.concat();
    LatticeWord::from_tokens(4, &toks).expect("class tokens are valid rank-4 letters")
}

/// Every class word of `spec`, sorted.
pub fn generate_words(spec: ClassWordSpec) -> Vec<LatticeWord> {
    let mut out = BTreeSet::new();
    match spec {
        ClassWordSpec::Spp { a, c } => {
            let head = [rep(T1, a), rep(NEG4, c), rep(T2, a)].concat();
            for v in arrangements(T4, c, P34, a) {
                out.insert(assemble(&[&head, &v]));
            }
        }
        ClassWordSpec::Cspp { a } => {
            let head = [rep(T1, a), rep(NEG4, a)].concat();
            for m in 0..=a {
                for third in arrangements(NEG31, m, NEG1, a - m) {
                    out.insert(assemble(&[&head, &third, &cspp_fourth(&third)]));
                }
            }
        }
        ClassWordSpec::Tspp { a } => {
            let head = rep(T1, a);
            for m in 0..=a {
                let seconds = arrangements(T4, a - m, P34, m);
                for first in arrangements(P23, a - m, T2, m) {
                    for second in seconds.iter().filter(|s| tspp_ok(&first, s)) {
                        out.insert(assemble(&[&head, &first, second]));
                    }
                }
            }
        }
        ClassWordSpec::Tsscpp { d } => {
            let head = [rep(T1, d), alternation(d)].concat();
            for v in arrangements(T4, d - 1, P34, d - 1).into_iter().filter(|v| tsscpp_ok(v)) {
                out.insert(assemble(&[&head, &v, &[P34]]));
            }
        }
    }
    out.into_iter().collect()
}

fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut r = BigUint::one();
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Closed-form number of distinct class words.
pub fn count_words_formula(spec: ClassWordSpec) -> BigUint {
    match spec {
        ClassWordSpec::Spp { a, c } => binom((a + c) as u64, a as u64),
        ClassWordSpec::Cspp { a } => BigUint::one() << a,
        ClassWordSpec::Tspp { a } => {
            let a = a as u64;
            if a == 0 {
                // Every term but the leading 1 is an empty binomial.
                return BigUint::one();
            }
            let mut s = BigUint::one() + binom(2 * a - 1, a - 1);
            for l in 1..a {
                let t = a - l;
                s += binom(2 * t - 1, t - 1);
            }
            s
        }
        ClassWordSpec::Tsscpp { d } => binom(2 * d as u64, d as u64) / (d as u64 + 1),
    }
}

/// Boundary words of every class member, in enumeration order.
#[derive(Clone, Debug)]
pub struct Census {
    pub spec: ClassWordSpec,
    pub words: Vec<LatticeWord>,
    pub distinct: BTreeSet<LatticeWord>,
}

impl Census {
    pub fn total(&self) -> usize {
        self.words.len()
    }

    pub fn distinct_count(&self) -> usize {
        self.distinct.len()
    }
}

pub fn census(class: SymmetryClass, bx: Box3) -> Result<Census, TripError> {
    let spec = ClassWordSpec::for_box(class, bx).map_err(crate::error::WebError::from)?;
    let mut words = Vec::new();
    for p in enumerate_class(class, bx).map_err(crate::error::WebError::from)? {
        let web = HourglassWeb::restrict(&p, class)?;
        words.push(boundary_word(&web)?);
    }
    let distinct = words.iter().cloned().collect();
    Ok(Census { spec, words, distinct })
}
