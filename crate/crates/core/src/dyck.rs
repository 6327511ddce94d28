//! Binary words: major index, descent count, the rotation `gamma`, the
//! modified rotation `delta` on flat non-Dyck words, `d`-rigid and
//! `d`-straightened Dyck words, and exhaustive generating functions.
//!
//! Positions are 1-based in [`Word::major_index`] and [`Word::descent_count`];
//! everything else indexes the letter slice directly.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::poly::{rat, Polynomial};
use crate::qcomb::binomial;

/// A finite word over `{0, 1}`; `true` is the letter 1. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<bool>,
}

/// Which words an enumeration ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordKind {
    All,
    Flat,
    Dyck,
}

impl Word {
    pub fn new(letters: Vec<bool>) -> Self {
        Self { letters }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn letters(&self) -> &[bool] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn ones(&self) -> usize {
        self.letters.iter().filter(|&&b| b).count()
    }

    pub fn zeros(&self) -> usize {
        self.len() - self.ones()
    }

    /// At least as many zeros as ones.
    pub fn is_flat(&self) -> bool {
        self.zeros() >= self.ones()
    }

    /// Every prefix is flat.
    pub fn is_dyck(&self) -> bool {
        let mut balance = 0i64;
        for &b in &self.letters {
            balance += if b { 1 } else { -1 };
            if balance > 0 {
                return false;
            }
        }
        true
    }

    pub fn is_flat_non_dyck(&self) -> bool {
        self.is_flat() && !self.is_dyck()
    }

    /// Sum of the 1-based positions `i` with `w_i = 1` and `w_{i+1} = 0`.
    pub fn major_index(&self) -> u64 {
        self.letters
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] && !w[1])
            .map(|(i, _)| i as u64 + 1)
            .sum()
    }

    /// Number of `10` factors, plus one when the word ends in 1 and starts in 0.
    pub fn descent_count(&self) -> u64 {
        let inner = self.letters.windows(2).filter(|w| w[0] && !w[1]).count() as u64;
        let wrap = match (self.letters.first(), self.letters.last()) {
            (Some(false), Some(true)) => 1,
            _ => 0,
        };
        inner + wrap
    }

    /// Moves the final letter to the front.
    pub fn gamma(&self) -> Result<Word> {
        let (&last, rest) = self.letters.split_last().ok_or(Error::EmptyWord)?;
        let mut letters = Vec::with_capacity(self.len());
        letters.push(last);
        letters.extend_from_slice(rest);
        Ok(Word { letters })
    }

    /// Moves the first letter to the end.
    pub fn gamma_inv(&self) -> Result<Word> {
        let (&first, rest) = self.letters.split_first().ok_or(Error::EmptyWord)?;
        let mut letters = rest.to_vec();
        letters.push(first);
        Ok(Word { letters })
    }

    fn check_flat_non_dyck(&self) -> Result<()> {
        if self.is_flat_non_dyck() {
            Ok(())
        } else {
            Err(Error::NotFlatNonDyck(self.to_string()))
        }
    }

    /// `gamma(w)` when that is non-Dyck; otherwise `gamma(w)` with its first
    /// letter swapped with the letter closing its shortest balanced prefix.
    pub fn delta(&self) -> Result<Word> {
        self.check_flat_non_dyck()?;
        let mut shifted = self.gamma()?;
        if !shifted.is_dyck() {
            return Ok(shifted);
        }
        let k = shortest_balanced_prefix(&shifted.letters)
            .expect("a Dyck rotation of a flat non-Dyck word has a balanced prefix");
        debug_assert!(!shifted.letters[0] && shifted.letters[k - 1]);
        shifted.letters.swap(0, k - 1);
        debug_assert!(shifted.is_flat_non_dyck());
        Ok(shifted)
    }

    /// Inverse of [`Word::delta`], built directly rather than by search.
    pub fn delta_inv(&self) -> Result<Word> {
        self.check_flat_non_dyck()?;
        let starts_with_one = self.letters[0];
        let mut balance = 0i64;
        let mut max_excess = 0i64;
        for &b in &self.letters {
            balance += if b { 1 } else { -1 };
            max_excess = max_excess.max(balance);
        }
        if !starts_with_one || max_excess >= 2 {
            return self.gamma_inv();
        }
        // Every prefix has at most one more 1 than 0. Take the largest k <= n
        // whose first k - 1 letters contain more ones than zeros; w_k is 0.
        let n = self.len();
        let mut balance = 0i64;
        let mut k = 0;
        for pos in 1..=n {
            if balance > 0 {
                k = pos;
            }
            balance += if self.letters[pos - 1] { 1 } else { -1 };
        }
        debug_assert!(k >= 2 && !self.letters[k - 1]);
        let mut u = self.clone();
        u.letters.swap(0, k - 1);
        debug_assert!(u.is_dyck());
        u.gamma_inv()
    }

    /// `w, delta(w), ..., delta^{m-1}(w)` where `m` is the orbit length.
    /// The orbit closes after at most `|w|` steps.
    pub fn delta_orbit(&self) -> Result<Vec<Word>> {
        self.check_flat_non_dyck()?;
        let mut orbit = vec![self.clone()];
        let mut current = self.delta()?;
        while current != *self {
            orbit.push(current.clone());
            assert!(
                orbit.len() <= self.len(),
                "delta orbit of {self} does not close within |w| steps"
            );
            current = current.delta()?;
        }
        Ok(orbit)
    }

    fn classify_blocks(&self, d: u64) -> Result<Option<Vec<Block>>> {
        if d < 2 {
            return Err(Error::Domain(format!("block size must exceed 1, got {d}")));
        }
        let d = d as usize;
        if !self.len().is_multiple_of(d) {
            return Err(Error::LengthNotDivisible { len: self.len(), d: d as u64 });
        }
        if !self.is_dyck() {
            return Ok(None);
        }
        let mut blocks = Vec::with_capacity(self.len() / d);
        let mut balance = 0i64;
        for chunk in self.letters.chunks(d) {
            let before = balance;
            let ones = chunk.iter().filter(|&&b| b).count();
            balance += 2 * ones as i64 - d as i64;
            let block = if ones == 0 {
                Block::Zeros
            } else if ones == d {
                Block::Ones
            } else {
                // for d = 2 a mixed block is both kinds; the two balance
                // conditions then coincide
                let type2 = ones == 1 && before == 0;
                let type3 = ones == d - 1 && balance == 0;
                match (type2, type3) {
                    (true, true) => Block::Both(chunk.to_vec()),
                    (true, false) => Block::Type2(chunk.to_vec()),
                    (false, true) => Block::Type3(chunk.to_vec()),
                    (false, false) => return Ok(None),
                }
            };
            blocks.push(block);
        }
        Ok(Some(blocks))
    }

    /// A Dyck word whose `d`-blocks are all ones, all zeros, a single 1 right
    /// after a balanced prefix (type 2), or a single 0 ending a balanced
    /// prefix (type 3). Non-Dyck words are not rigid.
    pub fn is_d_rigid(&self, d: u64) -> Result<bool> {
        Ok(self.classify_blocks(d)?.is_some())
    }

    /// `d`-rigid, with every type-2 block ending in 1 and every type-3 block
    /// starting with 0.
    pub fn is_d_straightened(&self, d: u64) -> Result<bool> {
        let Some(blocks) = self.classify_blocks(d)? else {
            return Ok(false);
        };
        Ok(blocks.iter().all(|b| match b {
            Block::Zeros | Block::Ones => true,
            Block::Type2(c) => *c.last().unwrap(),
            Block::Type3(c) => !c[0],
            Block::Both(c) => *c.last().unwrap() && !c[0],
        }))
    }
}

enum Block {
    Zeros,
    Ones,
    Type2(Vec<bool>),
    Type3(Vec<bool>),
    Both(Vec<bool>),
}

/// Smallest `k >= 1` whose length-`k` prefix has equally many zeros and ones.
fn shortest_balanced_prefix(letters: &[bool]) -> Option<usize> {
    let mut balance = 0i64;
    for (i, &b) in letters.iter().enumerate() {
        balance += if b { 1 } else { -1 };
        if balance == 0 {
            return Some(i + 1);
        }
    }
    None
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.letters {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!("invalid letter {other:?} in word"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Word::new)
    }
}

/// Every word of the given kind with exactly `ones` ones and `zeros` zeros,
/// in lexicographic order (0 before 1).
pub fn words(kind: WordKind, ones: usize, zeros: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if kind == WordKind::Flat && zeros < ones {
        return out;
    }
    let mut buf = Vec::with_capacity(ones + zeros);
    visit(kind == WordKind::Dyck, ones, zeros, 0, &mut buf, &mut |w| {
        out.push(Word::new(w.to_vec()))
    });
    out
}

fn visit(
    dyck: bool,
    ones: usize,
    zeros: usize,
    balance: i64,
    buf: &mut Vec<bool>,
    emit: &mut dyn FnMut(&[bool]),
) {
    if ones == 0 && zeros == 0 {
        emit(buf);
        return;
    }
    if zeros > 0 {
        buf.push(false);
        visit(dyck, ones, zeros - 1, balance - 1, buf, emit);
        buf.pop();
    }
    if ones > 0 && (!dyck || balance < 0) {
        buf.push(true);
        visit(dyck, ones - 1, zeros, balance + 1, buf, emit);
        buf.pop();
    }
}

fn major_polynomial<'a, I: IntoIterator<Item = &'a Word>>(words: I) -> Polynomial {
    let mut counts: Vec<i64> = Vec::new();
    for w in words {
        let m = w.major_index() as usize;
        if counts.len() <= m {
            counts.resize(m + 1, 0);
        }
        counts[m] += 1;
    }
    Polynomial::from_ints(&counts)
}

/// `sum q^{maj(w)}` over all words of the kind with the given letter counts.
pub fn enumerate_major(kind: WordKind, ones: usize, zeros: usize) -> Polynomial {
    major_polynomial(&words(kind, ones, zeros))
}

/// `sum q^{maj(w)}` over `n`-rigid Dyck words with the given letter counts.
pub fn enumerate_rigid_major(n: u64, ones: usize, zeros: usize) -> Result<Polynomial> {
    if n < 2 {
        return Err(Error::Domain(format!("rigidity needs n > 1, got {n}")));
    }
    if !(ones + zeros).is_multiple_of(n as usize) {
        return Err(Error::LengthNotDivisible { len: ones + zeros, d: n });
    }
    let rigid: Vec<Word> = words(WordKind::Dyck, ones, zeros)
        .into_iter()
        .filter(|w| w.is_d_rigid(n).expect("length checked"))
        .collect();
    Ok(major_polynomial(&rigid))
}

/// Letter counts `(zeros, ones)` of the words counted by `T_d(j, k)`.
pub fn straightened_shape(d: u64, j: u64, k: u64) -> (u64, u64) {
    if j >= k {
        (d * j, d * k)
    } else {
        (d * k - 1, d * j + 1)
    }
}

/// `d`-straightened Dyck words with the given letter counts, by exhaustion.
pub fn straightened_words(d: u64, ones: usize, zeros: usize) -> Result<Vec<Word>> {
    if d < 2 {
        return Err(Error::Domain(format!("straightening needs d > 1, got {d}")));
    }
    if !(ones + zeros).is_multiple_of(d as usize) {
        return Err(Error::LengthNotDivisible { len: ones + zeros, d });
    }
    Ok(words(WordKind::Dyck, ones, zeros)
        .into_iter()
        .filter(|w| w.is_d_straightened(d).expect("length checked"))
        .collect())
}

/// `T_d(j, k)` by exhaustive generation.
pub fn count_straightened_exhaustive(d: u64, j: u64, k: u64) -> Result<u64> {
    let (zeros, ones) = straightened_shape(d, j, k);
    Ok(straightened_words(d, ones as usize, zeros as usize)?.len() as u64)
}

/// `T_d(j, k) = binom(j + k, k)`.
pub fn count_straightened(d: u64, j: u64, k: u64) -> Result<BigInt> {
    if d < 2 {
        return Err(Error::Domain(format!("straightening needs d > 1, got {d}")));
    }
    let value = binomial(j + k, k);
    debug_assert!(
        d * (j + k) > 12 || BigInt::from(count_straightened_exhaustive(d, j, k)?) == value,
        "T_{d}({j}, {k}) disagrees with exhaustive count"
    );
    Ok(value)
}

/// All flat non-Dyck words of length `n`.
pub fn flat_non_dyck_words(n: usize) -> Vec<Word> {
    (0..=n / 2)
        .flat_map(|ones| words(WordKind::Flat, ones, n - ones))
        .filter(|w| !w.is_dyck())
        .collect()
}

/// Number of `delta`-orbits on flat non-Dyck words of length `n`.
pub fn delta_class_count(n: usize) -> usize {
    let mut seen: HashSet<Word> = HashSet::new();
    let mut classes = 0;
    for w in flat_non_dyck_words(n) {
        if seen.contains(&w) {
            continue;
        }
        classes += 1;
        seen.extend(w.delta_orbit().expect("word is flat non-Dyck"));
    }
    classes
}

/// Generating function of major index over the `gamma`-orbit of `w`
/// (each distinct rotation once).
pub fn gamma_orbit_major(w: &Word) -> Result<Polynomial> {
    let mut seen = HashSet::new();
    let mut current = w.clone();
    let mut poly = Polynomial::zero();
    while seen.insert(current.clone()) {
        poly += &Polynomial::monomial(rat(1), current.major_index() as usize);
        current = current.gamma()?;
    }
    Ok(poly)
}
