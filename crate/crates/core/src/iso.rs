//! Isomorphism testing and canonical forms for small operation tables.
//!
//! Both rest on colour refinement: elements start out coloured by simple
//! invariants (being θ, how many `y` give `x∘y = θ`, ...) and colours are
//! refined by the multiset of `(colour(y), colour(x∘y), colour(y∘x))`
//! until stable. Refinement is equivariant, so isomorphic tables produce
//! identical colour traces and every isomorphism preserves colours.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::algebra::{OpTable, THETA};

/// Result of an isomorphism test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// `mapping[x]` is the image in the second table of element `x` of the
    /// first.
    pub mapping: Option<Vec<usize>>,
}

impl IsoResult {
    fn no() -> Self {
        IsoResult {
            isomorphic: false,
            mapping: None,
        }
    }
}

type Key = Vec<usize>;

/// Stable colouring plus the sorted key lists seen at each round.
struct Refined {
    colors: Vec<usize>,
    trace: Vec<Vec<Key>>,
}

fn initial_keys(t: &OpTable) -> Vec<Key> {
    let n = t.n();
    (0..n)
        .map(|x| {
            let row_theta = (0..n).filter(|&y| t.op(x, y) == THETA).count();
            let col_theta = (0..n).filter(|&y| t.op(y, x) == THETA).count();
            let row_self = (0..n).filter(|&y| t.op(x, y) == x).count();
            let col_self = (0..n).filter(|&y| t.op(y, x) == x).count();
            let hits = t.cells().iter().filter(|&&v| v == x).count();
            vec![
                usize::from(x != THETA),
                usize::from(t.op(x, x) != THETA),
                row_theta,
                col_theta,
                row_self,
                col_self,
                hits,
            ]
        })
        .collect()
}

/// Replaces keys by their rank among the distinct keys.
fn rank(keys: &[Key]) -> (Vec<usize>, Vec<Key>) {
    let mut distinct: Vec<Key> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    let colors = keys
        .iter()
        .map(|k| distinct.binary_search(k).expect("key present"))
        .collect();
    let mut sorted = keys.to_vec();
    sorted.sort();
    (colors, sorted)
}

fn refine_from(t: &OpTable, mut colors: Vec<usize>, mut trace: Vec<Vec<Key>>) -> Refined {
    let n = t.n();
    let mut classes = count_classes(&colors);
    loop {
        let keys: Vec<Key> = (0..n)
            .map(|x| {
                let mut nbr: Vec<[usize; 3]> = (0..n)
                    .map(|y| [colors[y], colors[t.op(x, y)], colors[t.op(y, x)]])
                    .collect();
                nbr.sort_unstable();
                let mut key = Vec::with_capacity(1 + 3 * n);
                key.push(colors[x]);
                key.extend(nbr.into_iter().flatten());
                key
            })
            .collect();
        let (next, sorted) = rank(&keys);
        trace.push(sorted);
        let next_classes = count_classes(&next);
        colors = next;
        if next_classes == classes {
            return Refined { colors, trace };
        }
        classes = next_classes;
    }
}

fn count_classes(colors: &[usize]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m + 1)
}

fn refine(t: &OpTable) -> Refined {
    let (colors, sorted) = rank(&initial_keys(t));
    refine_from(t, colors, vec![sorted])
}

/// Decides whether two tables of the same orientation are isomorphic under
/// a θ-fixing bijection, returning the first witness under a deterministic
/// candidate order (colour class, then index).
pub fn are_isomorphic(a: &OpTable, b: &OpTable) -> IsoResult {
    if a.n() != b.n() || a.kind() != b.kind() {
        return IsoResult::no();
    }
    let ra = refine(a);
    let rb = refine(b);
    if ra.trace != rb.trace {
        return IsoResult::no();
    }
    let n = a.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (ra.colors[x], x));
    let mut candidates: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for y in 0..n {
        candidates.entry(rb.colors[y]).or_default().push(y);
    }
    let mut search = Matcher {
        a,
        b,
        order,
        candidates,
        colors_a: ra.colors,
        map: vec![None; n],
        inv: vec![None; n],
    };
    if search.extend(0) {
        let mapping: Vec<usize> = search.map.into_iter().map(Option::unwrap).collect();
        debug_assert!(is_isomorphism(a, b, &mapping));
        IsoResult {
            isomorphic: true,
            mapping: Some(mapping),
        }
    } else {
        IsoResult::no()
    }
}

struct Matcher<'a> {
    a: &'a OpTable,
    b: &'a OpTable,
    order: Vec<usize>,
    candidates: BTreeMap<usize, Vec<usize>>,
    colors_a: Vec<usize>,
    map: Vec<Option<usize>>,
    inv: Vec<Option<usize>>,
}

impl Matcher<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let x = self.order[depth];
        let pool = self.candidates[&self.colors_a[x]].clone();
        for y in pool {
            if self.inv[y].is_some() {
                continue;
            }
            self.map[x] = Some(y);
            self.inv[y] = Some(x);
            if self.consistent(x) && self.extend(depth + 1) {
                return true;
            }
            self.map[x] = None;
            self.inv[y] = None;
        }
        false
    }

    /// Checks every product involving the newly mapped `x` and previously
    /// mapped elements.
    fn consistent(&self, x: usize) -> bool {
        let n = self.a.n();
        for z in 0..n {
            let Some(mz) = self.map[z] else { continue };
            let mx = self.map[x].unwrap();
            for (p, q, mp, mq) in [(x, z, mx, mz), (z, x, mz, mx)] {
                let lhs = self.a.op(p, q);
                let rhs = self.b.op(mp, mq);
                match (self.map[lhs], self.inv[rhs]) {
                    (Some(img), _) if img != rhs => return false,
                    (None, Some(_)) => return false,
                    _ => {}
                }
            }
        }
        true
    }
}

/// Whether `mapping` is a θ-fixing bijection with
/// `mapping(x∘y) = mapping(x)∘mapping(y)` for all pairs.
pub fn is_isomorphism(a: &OpTable, b: &OpTable, mapping: &[usize]) -> bool {
    let n = a.n();
    if b.n() != n || mapping.len() != n || mapping.first() != Some(&THETA) {
        return false;
    }
    let mut seen = vec![false; n];
    for &m in mapping {
        if m >= n || seen[m] {
            return false;
        }
        seen[m] = true;
    }
    (0..n).all(|x| (0..n).all(|y| mapping[a.op(x, y)] == b.op(mapping[x], mapping[y])))
}

/// A canonical relabelling of a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CanonicalForm {
    /// Row-major cells of the relabelled table.
    pub cells: Vec<usize>,
    /// `labeling[x]`: new index of old element `x`.
    pub labeling: Vec<usize>,
}

/// Canonical form under θ-fixing relabelling: the lexicographically least
/// row-major serialization over the leaves of an
/// individualization-refinement search. Two tables of the same kind are
/// isomorphic exactly when their canonical cells coincide.
pub fn canonical_form(t: &OpTable) -> CanonicalForm {
    let refined = refine(t);
    let mut best: Option<CanonicalForm> = None;
    canon_search(t, refined.colors, &mut best);
    best.expect("at least one leaf")
}

fn canon_search(t: &OpTable, colors: Vec<usize>, best: &mut Option<CanonicalForm>) {
    let n = t.n();
    let classes = count_classes(&colors);
    if classes == n {
        let cells = serialize(t, &colors);
        if best.as_ref().is_none_or(|b| cells < b.cells) {
            *best = Some(CanonicalForm {
                cells,
                labeling: colors,
            });
        }
        return;
    }
    // first non-singleton cell
    let mut sizes = vec![0usize; classes];
    for &c in &colors {
        sizes[c] += 1;
    }
    let target = (0..classes).find(|&c| sizes[c] > 1).expect("non-discrete");
    for v in (0..n).filter(|&x| colors[x] == target) {
        let keys: Vec<Key> = (0..n)
            .map(|x| vec![colors[x], usize::from(colors[x] == target && x != v)])
            .collect();
        let (split, _) = rank(&keys);
        let refined = refine_from(t, split, Vec::new());
        canon_search(t, refined.colors, best);
    }
}

fn serialize(t: &OpTable, labeling: &[usize]) -> Vec<usize> {
    let n = t.n();
    let mut cells = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            cells[labeling[x] * n + labeling[y]] = labeling[t.op(x, y)];
        }
    }
    cells
}
