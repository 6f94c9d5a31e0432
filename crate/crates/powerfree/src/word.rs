//! Ternary symbols, finite words, letter permutations, and the map
//! `phi(a) = sigma(a) · a · rho(a)`.
//!
//! Iterating `phi` from the seed word `2` produces the words `phi^n(2)` of
//! length `3^n`. Each word reappears as the middle third of the next, so the
//! family nests around a common center and defines a bi-infinite word. All
//! indexing here is 0-based; [`CenteredIndex`] puts index 0 on the shared
//! center symbol.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Default bound on the generation level `n` (3^12 = 531441 symbols).
pub const DEFAULT_LEVEL_CAP: u32 = 12;

/// A letter of the three-letter alphabet {1, 2, 3}.
#[repr(u8)]
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Symbol {
    One = 1,
    Two = 2,
    Three = 3,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::One, Symbol::Two, Symbol::Three];

    pub fn from_u8(v: u8) -> Result<Symbol> {
        match v {
            1 => Ok(Symbol::One),
            2 => Ok(Symbol::Two),
            3 => Ok(Symbol::Three),
            _ => Err(Error::InvalidSymbol(char::from(v.saturating_add(b'0')))),
        }
    }

    pub fn from_char(c: char) -> Result<Symbol> {
        match c {
            '1' => Ok(Symbol::One),
            '2' => Ok(Symbol::Two),
            '3' => Ok(Symbol::Three),
            _ => Err(Error::InvalidSymbol(c)),
        }
    }

    pub fn value(self) -> u8 {
        self as u8
    }

    pub fn to_char(self) -> char {
        char::from(b'0' + self as u8)
    }

    /// 0-based position of the letter, for table lookups.
    fn index(self) -> usize {
        self as usize - 1
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// A finite word over {1, 2, 3}. Words are immutable values; every operation
/// returns a fresh word.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TernaryWord {
    symbols: Vec<Symbol>,
}

impl TernaryWord {
    pub fn new(symbols: Vec<Symbol>) -> TernaryWord {
        TernaryWord { symbols }
    }

    pub fn empty() -> TernaryWord {
        TernaryWord::default()
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn symbol(&self, i: usize) -> Symbol {
        self.symbols[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.symbols.iter().copied()
    }

    /// The factor occupying `[start, start + len)`.
    pub fn factor(&self, start: usize, len: usize) -> TernaryWord {
        TernaryWord::new(self.symbols[start..start + len].to_vec())
    }

    /// Compact rendering, e.g. `"213123132"`.
    pub fn compact(&self) -> String {
        self.symbols.iter().map(|s| s.to_char()).collect()
    }

    /// Rendering with one space between consecutive length-3 blocks,
    /// e.g. `"213 123 132"`.
    pub fn spaced(&self) -> String {
        let mut out = String::with_capacity(self.len() + self.len() / 3);
        for (i, s) in self.symbols.iter().enumerate() {
            if i > 0 && i % 3 == 0 {
                out.push(' ');
            }
            out.push(s.to_char());
        }
        out
    }
}

impl fmt::Display for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.compact())
    }
}

impl fmt::Debug for TernaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.compact())
    }
}

impl FromStr for TernaryWord {
    type Err = Error;

    /// Accepts exactly the characters '1', '2', '3'; anything else is an
    /// error, with no silent mapping.
    fn from_str(s: &str) -> Result<TernaryWord> {
        s.chars().map(Symbol::from_char).collect::<Result<Vec<_>>>().map(TernaryWord::new)
    }
}

impl From<Vec<Symbol>> for TernaryWord {
    fn from(symbols: Vec<Symbol>) -> TernaryWord {
        TernaryWord::new(symbols)
    }
}

impl FromIterator<Symbol> for TernaryWord {
    fn from_iter<T: IntoIterator<Item = Symbol>>(iter: T) -> TernaryWord {
        TernaryWord::new(iter.into_iter().collect())
    }
}

/// A bijection of {1, 2, 3}, stored as the images of 1, 2, 3 in order.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation3 {
    images: [Symbol; 3],
}

/// Identity permutation.
pub const IDENTITY: Permutation3 = Permutation3 {
    images: [Symbol::One, Symbol::Two, Symbol::Three],
};

/// The letter swap 1 <-> 2 (the map sigma).
pub const SIGMA: Permutation3 = Permutation3 {
    images: [Symbol::Two, Symbol::One, Symbol::Three],
};

/// The letter swap 2 <-> 3 (the map rho).
pub const RHO: Permutation3 = Permutation3 {
    images: [Symbol::One, Symbol::Three, Symbol::Two],
};

impl Permutation3 {
    /// Builds a permutation from the images of 1, 2, 3; the images must be
    /// pairwise distinct.
    pub fn new(images: [Symbol; 3]) -> Result<Permutation3> {
        if images[0] == images[1] || images[0] == images[2] || images[1] == images[2] {
            return Err(Error::NotABijection);
        }
        Ok(Permutation3 { images })
    }

    pub fn identity() -> Permutation3 {
        IDENTITY
    }

    pub fn apply(&self, s: Symbol) -> Symbol {
        self.images[s.index()]
    }

    /// Applies the permutation letterwise to a word.
    pub fn apply_word(&self, w: &TernaryWord) -> TernaryWord {
        w.iter().map(|s| self.apply(s)).collect()
    }

    /// Function composition: `p.compose(q)` maps `x` to `p(q(x))`.
    pub fn compose(&self, q: &Permutation3) -> Permutation3 {
        Permutation3 {
            images: [
                self.apply(q.apply(Symbol::One)),
                self.apply(q.apply(Symbol::Two)),
                self.apply(q.apply(Symbol::Three)),
            ],
        }
    }

    pub fn inverse(&self) -> Permutation3 {
        let mut images = [Symbol::One; 3];
        for s in Symbol::ALL {
            images[self.apply(s).index()] = s;
        }
        Permutation3 { images }
    }

    pub fn is_identity(&self) -> bool {
        *self == IDENTITY
    }

    /// All six permutations of {1, 2, 3}, in lexicographic image order.
    pub fn all() -> Vec<Permutation3> {
        let mut out = Vec::with_capacity(6);
        for a in Symbol::ALL {
            for b in Symbol::ALL {
                for c in Symbol::ALL {
                    if let Ok(p) = Permutation3::new([a, b, c]) {
                        out.push(p);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Permutation3 {
    /// Shows the images of 1, 2, 3 in order, e.g. the 1 <-> 2 swap is "213".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.images[0], self.images[1], self.images[2])
    }
}

impl fmt::Debug for Permutation3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation3({self})")
    }
}

/// 3^n as a word length, guarded against overflow.
pub(crate) fn pow3(n: u32) -> Result<usize> {
    let mut v: usize = 1;
    for _ in 0..n {
        v = v.checked_mul(3).ok_or(Error::LevelTooLarge { level: n, cap: n })?;
    }
    Ok(v)
}

/// Half-width of the level-`n` word: (3^n - 1) / 2. Centered indices for
/// level `n` range over `[-half_width(n), half_width(n)]`.
pub fn half_width(n: u32) -> i64 {
    let mut v: i64 = 1;
    for _ in 0..n {
        v *= 3;
    }
    (v - 1) / 2
}

/// `phi(a) = sigma(a) · a · rho(a)`; the result is three times as long as `a`.
pub fn phi(w: &TernaryWord) -> TernaryWord {
    let mut symbols = Vec::with_capacity(3 * w.len());
    symbols.extend(w.iter().map(|s| SIGMA.apply(s)));
    symbols.extend(w.iter());
    symbols.extend(w.iter().map(|s| RHO.apply(s)));
    TernaryWord::new(symbols)
}

/// `phi^n(2)`, of length 3^n, with the default level cap.
pub fn generate(n: u32) -> Result<TernaryWord> {
    generate_with_cap(n, DEFAULT_LEVEL_CAP)
}

/// `phi^n(2)` with an explicit level cap. Level 0 is the seed word "2".
pub fn generate_with_cap(n: u32, cap: u32) -> Result<TernaryWord> {
    if n > cap {
        return Err(Error::LevelTooLarge { level: n, cap });
    }
    pow3(n)?;
    let mut w = TernaryWord::new(vec![Symbol::Two]);
    for _ in 0..n {
        w = phi(&w);
    }
    Ok(w)
}

/// An integer index into the level-`n` word, with 0 at the center symbol.
///
/// The center symbol is the seed "2" at every level, because each word is the
/// middle third of the next; that makes this convention level-independent.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CenteredIndex {
    level: u32,
    index: i64,
}

impl CenteredIndex {
    /// Requires `|index| <= (3^level - 1) / 2`.
    pub fn new(level: u32, index: i64) -> Result<CenteredIndex> {
        let half = half_width(level);
        if index.abs() > half {
            return Err(Error::IndexOutOfRange { index, level });
        }
        Ok(CenteredIndex { level, index })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn index(&self) -> i64 {
        self.index
    }

    /// The 0-based array offset into the level word: `index + (3^level - 1)/2`.
    pub fn offset(&self) -> usize {
        (self.index + half_width(self.level)) as usize
    }
}

/// The symbol of `phi^n(2)` at a centered index, by direct generation.
pub fn symbol_at(idx: CenteredIndex) -> Result<Symbol> {
    let w = generate(idx.level())?;
    Ok(w.symbol(idx.offset()))
}

/// Extracts the middle symbol of each aligned length-3 block. The length must
/// be divisible by 3; applied to `phi^n(2)` this recovers `phi^(n-1)(2)`.
pub fn extract_middles(w: &TernaryWord) -> Result<TernaryWord> {
    if w.len() % 3 != 0 {
        return Err(Error::LengthNotDivisibleBy3(w.len()));
    }
    Ok(w.symbols().chunks_exact(3).map(|c| c[1]).collect())
}

/// Splits a word of length divisible by 3 into its aligned length-3 blocks.
pub fn triples(w: &TernaryWord) -> Result<Vec<[Symbol; 3]>> {
    if w.len() % 3 != 0 {
        return Err(Error::LengthNotDivisibleBy3(w.len()));
    }
    Ok(w.symbols()
        .chunks_exact(3)
        .map(|c| [c[0], c[1], c[2]])
        .collect())
}

/// True if the block contains each of 1, 2, 3 exactly once.
pub fn is_permutation_triple(block: &[Symbol; 3]) -> bool {
    block[0] != block[1] && block[0] != block[2] && block[1] != block[2]
}
