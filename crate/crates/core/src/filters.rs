//! Filters (deductive systems) of Hilbert algebras.
//!
//! A filter `L` contains θ and is closed under detachment: whenever
//! `x ∈ L` and `x·y ∈ L` for some `y` in the carrier, `y ∈ L`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::algebra::{
    dualize, positive_implicative_witness, verify_axioms, AxiomSystem, OpTable, TableKind, THETA,
};
use crate::error::{Error, Result};

/// Largest carrier the bitset representation supports.
pub const MAX_ELEMENTS: usize = 128;

/// A set of element indices.
///
/// Ordered by cardinality, then by the integer value of the bitset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u128);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub fn from_bits(bits: u128) -> Self {
        ElementSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, ..., n-1}`
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS);
        if n == MAX_ELEMENTS {
            ElementSet(u128::MAX)
        } else {
            ElementSet((1u128 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Self {
        ElementSet(1u128 << x)
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        self.0 |= 1u128 << x;
    }

    pub fn with(self, x: usize) -> Self {
        ElementSet(self.0 | 1u128 << x)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..MAX_ELEMENTS).filter(move |&i| bits >> i & 1 == 1)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for ElementSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for x in iter {
            s.insert(x);
        }
        s
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.len(), self.0).cmp(&(other.len(), other.0))
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Serialize for ElementSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, x) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// A filter of a Hilbert algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Filter {
    pub members: ElementSet,
}

/// Verdict of [`is_filter`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FilterCheck {
    pub is_filter: bool,
    /// First `(x, y)` with `x ∈ s`, `x·y ∈ s` and `y ∉ s`, scanning `x` then
    /// `y` in index order. Absent when θ is missing.
    pub witness: Option<(usize, usize)>,
}

fn require_dot(h: &OpTable) -> Result<()> {
    if h.kind() != TableKind::Dot {
        return Err(Error::usage(
            "filters are computed on a dot (Hilbert) table",
        ));
    }
    if h.n() > MAX_ELEMENTS {
        return Err(Error::usage(format!(
            "filter computations support at most {MAX_ELEMENTS} elements"
        )));
    }
    Ok(())
}

fn detachment_failure(h: &OpTable, s: ElementSet) -> Option<(usize, usize)> {
    s.iter().find_map(|x| {
        (0..h.n())
            .find(|&y| s.contains(h.op(x, y)) && !s.contains(y))
            .map(|y| (x, y))
    })
}

pub fn is_filter(h: &OpTable, s: ElementSet) -> Result<FilterCheck> {
    require_dot(h)?;
    if !s.is_subset(ElementSet::full(h.n())) {
        return Err(Error::usage("set mentions elements outside the carrier"));
    }
    if !s.contains(THETA) {
        return Ok(FilterCheck {
            is_filter: false,
            witness: None,
        });
    }
    let witness = detachment_failure(h, s);
    Ok(FilterCheck {
        is_filter: witness.is_none(),
        witness,
    })
}

fn close(h: &OpTable, mut s: ElementSet) -> ElementSet {
    s.insert(THETA);
    loop {
        let mut grown = s;
        for x in s.iter() {
            for y in 0..h.n() {
                if s.contains(h.op(x, y)) {
                    grown.insert(y);
                }
            }
        }
        if grown == s {
            return s;
        }
        s = grown;
    }
}

/// Least filter containing `seed`.
pub fn generated_filter(h: &OpTable, seed: ElementSet) -> Result<Filter> {
    require_dot(h)?;
    if !seed.is_subset(ElementSet::full(h.n())) {
        return Err(Error::usage("seed mentions elements outside the carrier"));
    }
    Ok(Filter {
        members: close(h, seed),
    })
}

/// Every filter, ordered by cardinality and then by bitset value.
///
/// Breadth-first closure expansion from `{θ}`: each known filter `L` and
/// element `e ∉ L` contributes the filter generated by `L ∪ {e}`. The cost
/// is `O(#filters · n)` closures.
pub fn all_filters(h: &OpTable) -> Result<Vec<Filter>> {
    require_dot(h)?;
    let n = h.n();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    let bottom = close(h, ElementSet::EMPTY);
    seen.insert(bottom);
    queue.push_back(bottom);
    while let Some(l) = queue.pop_front() {
        for e in (0..n).filter(|&e| !l.contains(e)) {
            let next = close(h, l.with(e));
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().map(|members| Filter { members }).collect())
}

/// Proper filters that are maximal under inclusion among proper filters.
/// Empty for the one-element algebra.
pub fn maximal_filters(h: &OpTable) -> Result<Vec<Filter>> {
    let all = all_filters(h)?;
    Ok(maximal_among(&all, ElementSet::full(h.n())))
}

fn maximal_among(all: &[Filter], carrier: ElementSet) -> Vec<Filter> {
    let proper: Vec<ElementSet> = all
        .iter()
        .map(|f| f.members)
        .filter(|&m| m != carrier)
        .collect();
    proper
        .iter()
        .filter(|&&f| !proper.iter().any(|&g| g != f && f.is_subset(g)))
        .map(|&members| Filter { members })
        .collect()
}

/// Semisimple/local classification.
///
/// For the one-element algebra (`degenerate`), there is no proper filter,
/// the radical is `{θ}` and both verdicts are reported false.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub n: usize,
    pub all_filter_count: usize,
    pub maximal_filters: Vec<Filter>,
    pub radical: ElementSet,
    pub is_semisimple: bool,
    pub is_local: bool,
    pub degenerate: bool,
}

/// The Hilbert algebra to work with: a dot table is checked against the
/// Hilbert axioms; a star table must be a positive implicative
/// BCK-algebra and is dualized.
pub fn hilbert_view(h: &OpTable) -> Result<OpTable> {
    let dot = match h.kind() {
        TableKind::Dot => h.clone(),
        TableKind::Star => {
            let bck = verify_axioms(h, AxiomSystem::Bck)?;
            if !bck.passed {
                return Err(Error::usage(format!(
                    "not a BCK-algebra (fails {})",
                    bck.violations[0].axiom
                )));
            }
            if positive_implicative_witness(h).is_some() {
                return Err(Error::usage(
                    "BCK-algebra is not positive implicative, its dual is not a Hilbert algebra",
                ));
            }
            dualize(h)
        }
    };
    let hilbert = verify_axioms(&dot, AxiomSystem::Hilbert)?;
    if !hilbert.passed {
        return Err(Error::usage(format!(
            "not a Hilbert algebra (fails {})",
            hilbert.violations[0].axiom
        )));
    }
    Ok(dot)
}

/// Classifies a Hilbert algebra. With `auto_dualize`, a positive
/// implicative BCK star table is dualized first.
pub fn classify(h: &OpTable, auto_dualize: bool) -> Result<ClassificationReport> {
    if h.kind() == TableKind::Star && !auto_dualize {
        return Err(Error::usage(
            "classification needs a dot table (or auto-dualization of a star table)",
        ));
    }
    let dot = hilbert_view(h)?;
    let n = dot.n();
    let all = all_filters(&dot)?;
    let maximal = maximal_among(&all, ElementSet::full(n));
    let degenerate = n == 1;
    let radical = maximal
        .iter()
        .fold(ElementSet::full(n), |acc, f| acc.intersection(f.members));
    Ok(ClassificationReport {
        n,
        all_filter_count: all.len(),
        is_semisimple: !degenerate && radical == ElementSet::singleton(THETA),
        is_local: !degenerate && maximal.len() == 1,
        maximal_filters: maximal,
        radical,
        degenerate,
    })
}
