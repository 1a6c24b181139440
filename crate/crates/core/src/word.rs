//! Signed lattice words with split-pair tokens.
//!
//! Token grammar, whitespace separated: `3`, `-4`, `(3,4)`, `(-3,-1)`.

use std::fmt;

use crate::error::WordError;

/// Longest input accepted by the token parser.
pub const MAX_WORD_TOKENS: usize = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticeWord {
    rank: usize,
    letters: Vec<i32>,
    /// Sorted positions `i` such that letters `i, i+1` form one pair token.
    pairs: Vec<usize>,
}

/// One token of a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Token {
    Single(i32),
    Pair(i32, i32),
}

impl Token {
    pub fn len(self) -> usize {
        match self {
            Token::Single(_) => 1,
            Token::Pair(..) => 2,
        }
    }

    pub fn is_empty(self) -> bool {
        false
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Single(x) => write!(f, "{x}"),
            Token::Pair(x, y) => write!(f, "({x},{y})"),
        }
    }
}

impl LatticeWord {
    pub fn new(rank: usize, letters: Vec<i32>, mut pairs: Vec<usize>) -> Result<Self, WordError> {
        if !(1..=9).contains(&rank) {
            return Err(WordError::Rank(rank));
        }
        for &x in &letters {
            if x == 0 || x.unsigned_abs() as usize > rank {
                return Err(WordError::Letter { letter: x, rank });
            }
        }
        pairs.sort_unstable();
        pairs.dedup();
        for w in pairs.windows(2) {
            if w[1] == w[0] + 1 {
                return Err(WordError::Token("overlapping pair marks".into()));
            }
        }
        if pairs.last().is_some_and(|&p| p + 1 >= letters.len()) {
            return Err(WordError::Token("pair mark out of range".into()));
        }
        Ok(LatticeWord { rank, letters, pairs })
    }

    pub fn from_tokens(rank: usize, tokens: &[Token]) -> Result<Self, WordError> {
        let mut letters = Vec::new();
        let mut pairs = Vec::new();
        for t in tokens {
            match *t {
                Token::Single(x) => letters.push(x),
                Token::Pair(x, y) => {
                    pairs.push(letters.len());
                    letters.push(x);
                    letters.push(y);
                }
            }
        }
        LatticeWord::new(rank, letters, pairs)
    }

    pub fn empty(rank: usize) -> Self {
        LatticeWord { rank, letters: vec![], pairs: vec![] }
    }

    /// Parses whitespace-separated tokens.
    pub fn parse(s: &str, rank: usize) -> Result<Self, WordError> {
        LatticeWord::from_tokens(rank, &parse_tokens(s)?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn pairs(&self) -> &[usize] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn tokens(&self) -> Vec<Token> {
        let mut out = Vec::new();
        let mut i = 0;
        let mut pairs = self.pairs.iter().peekable();
        while i < self.letters.len() {
            if pairs.peek() == Some(&&i) {
                pairs.next();
                out.push(Token::Pair(self.letters[i], self.letters[i + 1]));
                i += 2;
            } else {
                out.push(Token::Single(self.letters[i]));
                i += 1;
            }
        }
        out
    }

    /// Signs of the letters.
    pub fn type_vector(&self) -> Vec<i8> {
        self.letters.iter().map(|&x| if x > 0 { 1 } else { -1 }).collect()
    }

    /// Every prefix keeps `#i - #(-i) >= #(i+1) - #(-(i+1))` for all rows.
    pub fn is_yamanouchi(&self) -> bool {
        self.first_violation().is_none()
    }

    /// Position of the first letter after which the prefix condition fails.
    pub fn first_violation(&self) -> Option<usize> {
        let mut shape = vec![0i64; self.rank];
        for (pos, &x) in self.letters.iter().enumerate() {
            let row = x.unsigned_abs() as usize - 1;
            shape[row] += if x > 0 { 1 } else { -1 };
            if shape.windows(2).any(|w| w[0] < w[1]) {
                return Some(pos);
            }
        }
        None
    }

    /// Same word with a different rank.
    pub fn with_rank(&self, rank: usize) -> Result<Self, WordError> {
        LatticeWord::new(rank, self.letters.clone(), self.pairs.clone())
    }

    /// Concatenation, keeping pair marks.
    pub fn concat(&self, other: &LatticeWord) -> LatticeWord {
        let mut letters = self.letters.clone();
        let off = letters.len();
        letters.extend_from_slice(&other.letters);
        let mut pairs = self.pairs.clone();
        pairs.extend(other.pairs.iter().map(|p| p + off));
        LatticeWord { rank: self.rank.max(other.rank), letters, pairs }
    }
}

impl fmt::Display for LatticeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let toks: Vec<String> = self.tokens().iter().map(Token::to_string).collect();
        f.write_str(&toks.join(" "))
    }
}

/// Splits a token string. Whitespace inside parentheses is allowed.
pub fn parse_tokens(s: &str) -> Result<Vec<Token>, WordError> {
    let mut out = Vec::new();
    let chars: Vec<char> = s.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        if out.len() >= MAX_WORD_TOKENS {
            return Err(WordError::Token("word too long".into()));
        }
        if ch == '(' {
            let close = chars[i..].iter().position(|&c| c == ')').map(|k| i + k);
            let Some(close) = close else {
                return Err(WordError::Token(chars[i..].iter().collect()));
            };
            let inner: String = chars[i + 1..close].iter().collect();
            let parts: Vec<&str> = inner.split(',').map(str::trim).collect();
            let bad = || WordError::Token(format!("({inner})"));
            if parts.len() != 2 {
                return Err(bad());
            }
            let x = parse_letter(parts[0]).ok_or_else(bad)?;
            let y = parse_letter(parts[1]).ok_or_else(bad)?;
            out.push(Token::Pair(x, y));
            i = close + 1;
        } else {
            let start = i;
            while i < chars.len() && !chars[i].is_whitespace() && chars[i] != '(' {
                i += 1;
            }
            let tok: String = chars[start..i].iter().collect();
            let x = parse_letter(&tok).ok_or(WordError::Token(tok))?;
            out.push(Token::Single(x));
        }
    }
    Ok(out)
}

fn parse_letter(s: &str) -> Option<i32> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || digits.len() > 3 || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let x: i32 = s.parse().ok()?;
    (x != 0).then_some(x)
}
