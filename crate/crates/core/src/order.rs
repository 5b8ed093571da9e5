//! Codewords, block codes and the orders built on them.
//!
//! Codewords are ordered by domination: `v ≤ w` when every bit of `w` is at
//! most the corresponding bit of `v`. The all-ones word is therefore the
//! least element and plays the role of θ.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::{move_to_front, OpTable, TableKind, THETA};
use crate::error::{Error, Result};

/// A fixed-length binary word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Codeword {
    bits: Vec<bool>,
}

impl Codeword {
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::usage("codewords must have positive length"));
        }
        Ok(Codeword { bits })
    }

    pub fn ones(len: usize) -> Self {
        Codeword {
            bits: vec![true; len.max(1)],
        }
    }

    pub fn zeros(len: usize) -> Self {
        Codeword {
            bits: vec![false; len.max(1)],
        }
    }

    /// Word of length `len` with a single 1 at `pos`.
    pub fn unit(len: usize, pos: usize) -> Self {
        let mut w = Self::zeros(len);
        w.bits[pos] = true;
        w
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bit(&self, i: usize) -> bool {
        self.bits[i]
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_all_ones(&self) -> bool {
        self.bits.iter().all(|&b| b)
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|&b| !b)
    }

    pub fn concat(&self, other: &Codeword) -> Codeword {
        let mut bits = self.bits.clone();
        bits.extend_from_slice(&other.bits);
        Codeword { bits }
    }

    /// Bits `range` as a new word.
    pub fn slice(&self, range: std::ops::Range<usize>) -> Codeword {
        Codeword {
            bits: self.bits[range].to_vec(),
        }
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::usage(format!("invalid bit {other:?} in {s:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Codeword::new(bits)
    }
}

impl Serialize for Codeword {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Plain left-to-right bitstring order with `1 > 0`.
impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bits.cmp(&other.bits)
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An ordered list of distinct codewords of one length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BlockCode {
    words: Vec<Codeword>,
    word_length: usize,
}

impl BlockCode {
    pub fn new(words: Vec<Codeword>) -> Result<Self> {
        let word_length = words.first().map_or(0, Codeword::len);
        for (i, w) in words.iter().enumerate() {
            if w.len() != word_length {
                return Err(Error::usage(format!(
                    "word {i} has length {}, expected {word_length}",
                    w.len()
                )));
            }
            if words[..i].contains(w) {
                return Err(Error::usage(format!("duplicate codeword {w}")));
            }
        }
        Ok(BlockCode { words, word_length })
    }

    /// Parses whitespace-separated bit strings.
    pub fn parse_words(text: &str) -> Result<Self> {
        let words = text
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|s| !s.is_empty())
            .map(str::parse)
            .collect::<Result<Vec<_>>>()?;
        Self::new(words)
    }

    pub fn words(&self) -> &[Codeword] {
        &self.words
    }

    pub fn word_length(&self) -> usize {
        self.word_length
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }
}

/// Outcome of comparing two codewords under domination.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Comparison {
    LessEq,
    GreaterEq,
    Equal,
    Incomparable,
}

/// `v ≤ w` when every bit of `w` is at most the matching bit of `v`.
pub fn compare_codewords(v: &Codeword, w: &Codeword) -> Result<Comparison> {
    if v.len() != w.len() {
        return Err(Error::usage(format!(
            "cannot compare words of lengths {} and {}",
            v.len(),
            w.len()
        )));
    }
    let le = dominates(v, w);
    let ge = dominates(w, v);
    Ok(match (le, ge) {
        (true, true) => Comparison::Equal,
        (true, false) => Comparison::LessEq,
        (false, true) => Comparison::GreaterEq,
        (false, false) => Comparison::Incomparable,
    })
}

/// `v ≤ w` under domination (the support of `w` is inside that of `v`).
fn dominates(v: &Codeword, w: &Codeword) -> bool {
    v.bits.iter().zip(&w.bits).all(|(&a, &b)| !b || a)
}

/// Code sorted in descending lexicographic order, with the permutation
/// `permutation[k]` = original index of the word now at position `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SortedCode {
    pub code: BlockCode,
    pub permutation: Vec<usize>,
}

pub fn lex_sort_desc(c: &BlockCode) -> SortedCode {
    let mut permutation: Vec<usize> = (0..c.len()).collect();
    permutation.sort_by(|&a, &b| c.words[b].cmp(&c.words[a]));
    let words = permutation.iter().map(|&i| c.words[i].clone()).collect();
    SortedCode {
        code: BlockCode {
            words,
            word_length: c.word_length,
        },
        permutation,
    }
}

/// A finite partial order stored as a dense relation matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
    least: Option<usize>,
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Validates reflexivity, antisymmetry and transitivity of the row-major
    /// relation `leq` and locates the least element.
    pub fn new(n: usize, leq: Vec<bool>, labels: Option<Vec<String>>) -> Result<Self> {
        if leq.len() != n * n {
            return Err(Error::usage("relation matrix has the wrong size"));
        }
        if let Some(l) = &labels {
            if l.len() != n {
                return Err(Error::usage("label count does not match element count"));
            }
        }
        let at = |i: usize, j: usize| leq[i * n + j];
        for i in 0..n {
            if !at(i, i) {
                return Err(Error::usage(format!("not reflexive at {i}")));
            }
            for j in 0..n {
                if i != j && at(i, j) && at(j, i) {
                    return Err(Error::usage(format!("not antisymmetric at ({i}, {j})")));
                }
                if at(i, j) {
                    if let Some(k) = (0..n).find(|&k| at(j, k) && !at(i, k)) {
                        return Err(Error::usage(format!("not transitive at ({i}, {j}, {k})")));
                    }
                }
            }
        }
        let least = (0..n).find(|&i| (0..n).all(|j| at(i, j)));
        Ok(Poset {
            n,
            leq,
            least,
            labels,
        })
    }

    pub fn from_relation(
        n: usize,
        leq: impl Fn(usize, usize) -> bool,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let rel = (0..n * n).map(|k| leq(k / n, k % n)).collect();
        Self::new(n, rel, labels)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.n + j]
    }

    pub fn lt(&self, i: usize, j: usize) -> bool {
        i != j && self.leq(i, j)
    }

    pub fn relation(&self) -> &[bool] {
        &self.leq
    }

    pub fn least(&self) -> Option<usize> {
        self.least
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, i: usize) -> String {
        match &self.labels {
            Some(l) => l[i].clone(),
            None => i.to_string(),
        }
    }
}

/// The domination poset of a code. With `adjoin_theta`, the all-ones word
/// is prepended at index 0 when the code lacks it. Labels are the words.
pub fn code_poset(c: &BlockCode, adjoin_theta: bool) -> Result<Poset> {
    let words = code_carrier(c, adjoin_theta)?;
    poset_of_words(&words)
}

/// Elements of [`code_poset`] in index order.
pub(crate) fn code_carrier(c: &BlockCode, adjoin_theta: bool) -> Result<Vec<Codeword>> {
    if c.is_empty() && !adjoin_theta {
        return Err(Error::usage("an empty code has no least element"));
    }
    let has_theta = c.words.iter().any(Codeword::is_all_ones);
    let mut words = Vec::with_capacity(c.len() + 1);
    if !has_theta {
        if !adjoin_theta {
            return Err(Error::usage(
                "no least element: the code lacks the all-ones word",
            ));
        }
        words.push(Codeword::ones(c.word_length.max(1)));
    }
    words.extend(c.words.iter().cloned());
    Ok(words)
}

pub(crate) fn poset_of_words(words: &[Codeword]) -> Result<Poset> {
    let labels = words.iter().map(Codeword::to_string).collect();
    Poset::from_relation(
        words.len(),
        |i, j| dominates(&words[i], &words[j]),
        Some(labels),
    )
}

/// The BCK-algebra on a poset with least element θ:
/// `x∗y = θ` when `x ≤ y`, and `x∗y = x` otherwise.
///
/// The least element is moved to index 0; labels travel with elements.
pub fn poset_to_bck(p: &Poset) -> Result<OpTable> {
    let least = p
        .least()
        .ok_or_else(|| Error::usage("the poset has no least element"))?;
    let n = p.n();
    let cells = (0..n * n)
        .map(|k| {
            let (x, y) = (k / n, k % n);
            if p.leq(x, y) {
                least
            } else {
                x
            }
        })
        .collect();
    let raw = OpTable::from_cells(TableKind::Star, n, cells, None)?;
    let table = raw.relabel(&move_to_front(n, least));
    let labels = p.labels().map(|l| {
        let perm = move_to_front(n, least);
        let mut out = vec![String::new(); n];
        for (old, name) in l.iter().enumerate() {
            out[perm[old]] = name.clone();
        }
        out
    });
    debug_assert_eq!(table.op(THETA, THETA), THETA);
    table.with_labels(labels)
}

/// Covering pairs `(lower, upper)`, sorted by lower then upper index.
pub fn hasse_covers(p: &Poset) -> Vec<(usize, usize)> {
    let n = p.n();
    let mut covers = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if p.lt(x, y) && !(0..n).any(|z| p.lt(x, z) && p.lt(z, y)) {
                covers.push((x, y));
            }
        }
    }
    covers
}
