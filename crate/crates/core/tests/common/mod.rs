//! Brute-force oracles shared by the integration tests. None of them calls
//! into the library's filter, order or isomorphism code.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::path::PathBuf;

use bck_codes::format::{parse_algebra_file, parse_code_file};
use bck_codes::{BlockCode, OpTable};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
}

pub fn fixture_text(name: &str) -> String {
    std::fs::read_to_string(fixture_path(name)).unwrap()
}

pub fn fixture_code(name: &str) -> BlockCode {
    parse_code_file(&fixture_text(name)).unwrap()
}

pub fn fixture_table(name: &str) -> OpTable {
    parse_algebra_file(&fixture_text(name)).unwrap()
}

/// `x · y` read off a table of either kind.
pub fn dot(t: &OpTable, x: usize, y: usize) -> usize {
    match t.kind() {
        bck_codes::TableKind::Dot => t.op(x, y),
        bck_codes::TableKind::Star => t.op(y, x),
    }
}

/// Every θ-containing subset closed under detachment, as sorted vectors,
/// by scanning all subsets.
pub fn brute_filters(t: &OpTable) -> Vec<Vec<usize>> {
    let n = t.n();
    assert!(n <= 20, "oracle scans 2^n subsets");
    let mut out = Vec::new();
    for mask in 0u32..(1 << n) {
        if mask & 1 == 0 {
            continue;
        }
        let has = |e: usize| mask >> e & 1 == 1;
        let closed = (0..n).all(|x| !has(x) || (0..n).all(|y| !has(dot(t, x, y)) || has(y)));
        if closed {
            out.push((0..n).filter(|&e| has(e)).collect());
        }
    }
    out
}

/// Proper filters not strictly inside another proper filter.
pub fn brute_maximal(t: &OpTable) -> BTreeSet<Vec<usize>> {
    let n = t.n();
    let proper: Vec<Vec<usize>> = brute_filters(t)
        .into_iter()
        .filter(|f| f.len() < n)
        .collect();
    proper
        .iter()
        .filter(|f| {
            !proper
                .iter()
                .any(|g| g.len() > f.len() && f.iter().all(|e| g.contains(e)))
        })
        .cloned()
        .collect()
}

pub fn brute_radical(t: &OpTable) -> Vec<usize> {
    let maxima = brute_maximal(t);
    (0..t.n())
        .filter(|e| maxima.iter().all(|f| f.contains(e)))
        .collect()
}

/// Whether `set` is closed under detachment; on failure the first
/// `(x, y)` with `x`, `x · y` in the set and `y` outside.
pub fn brute_detachment(t: &OpTable, set: &[usize]) -> Option<(usize, usize)> {
    for &x in set {
        for y in 0..t.n() {
            if set.contains(&dot(t, x, y)) && !set.contains(&y) {
                return Some((x, y));
            }
        }
    }
    None
}

/// `v ≤ w` in the domination order: every 1 of `w` is a 1 of `v`.
pub fn dominated(v: &[bool], w: &[bool]) -> bool {
    v.iter().zip(w).all(|(&a, &b)| !b || a)
}

pub fn words_of(c: &BlockCode) -> Vec<Vec<bool>> {
    c.words().iter().map(|w| w.bits().to_vec()).collect()
}

/// Row-major `≤` relation of the domination order on `words`.
pub fn domination_relation(words: &[Vec<bool>]) -> Vec<bool> {
    let n = words.len();
    let mut rel = vec![false; n * n];
    for i in 0..n {
        for j in 0..n {
            rel[i * n + j] = dominated(&words[i], &words[j]);
        }
    }
    rel
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

/// Lexicographically least image of a relation over all permutations.
pub fn canonical_relation(rel: &[bool], n: usize, perms: &[Vec<usize>]) -> Vec<bool> {
    perms
        .iter()
        .map(|p| {
            let mut image = vec![false; n * n];
            for i in 0..n {
                for j in 0..n {
                    image[p[i] * n + p[j]] = rel[i * n + j];
                }
            }
            image
        })
        .min()
        .unwrap()
}

/// The census matrix for `mask`, built from scratch: all-ones first row,
/// upper unitriangular, free bits rows 2..n−1 row-major, LSB first.
pub fn oracle_census_matrix(n: usize, mask: u64) -> Vec<Vec<bool>> {
    let mut rows = vec![vec![false; n]; n];
    rows[0] = vec![true; n];
    let mut bit = 0;
    for (i, row) in rows.iter_mut().enumerate().skip(1) {
        row[i] = true;
        if i < n - 1 {
            for cell in row.iter_mut().skip(i + 1) {
                *cell = mask >> bit & 1 == 1;
                bit += 1;
            }
        }
    }
    rows
}

/// Number of isomorphism classes among the domination posets of all
/// census matrices, by all-permutation canonical forms.
pub fn oracle_census_classes(n: usize) -> usize {
    let free = (n - 1) * (n - 2) / 2;
    let perms = permutations(n);
    let mut classes = BTreeSet::new();
    for mask in 0..(1u64 << free) {
        let rel = domination_relation(&oracle_census_matrix(n, mask));
        classes.insert(canonical_relation(&rel, n, &perms));
    }
    classes.len()
}

/// Number of partial orders on `k` points up to isomorphism, enumerating
/// every reflexive relation.
pub fn oracle_unlabeled_posets(k: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..k)
        .flat_map(|i| (0..k).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let perms = permutations(k);
    let mut classes = BTreeSet::new();
    for mask in 0u64..(1 << pairs.len()) {
        let mut rel = vec![false; k * k];
        for i in 0..k {
            rel[i * k + i] = true;
        }
        for (b, &(i, j)) in pairs.iter().enumerate() {
            rel[i * k + j] = mask >> b & 1 == 1;
        }
        let antisymmetric = pairs
            .iter()
            .all(|&(i, j)| !(rel[i * k + j] && rel[j * k + i]));
        let transitive = (0..k).all(|i| {
            (0..k).all(|j| (0..k).all(|l| !(rel[i * k + j] && rel[j * k + l]) || rel[i * k + l]))
        });
        if antisymmetric && transitive {
            classes.insert(canonical_relation(&rel, k, &perms));
        }
    }
    classes.len()
}

/// A random duplicate-free code with 1..=max_n words of length 1..=max_m.
pub fn random_code(rng: &mut impl Rng, max_n: usize, max_m: usize) -> BlockCode {
    let m = rng.gen_range(1..=max_m);
    let cap = (1usize << m).min(max_n);
    let n = rng.gen_range(1..=cap);
    let mut words = BTreeSet::new();
    while words.len() < n {
        let w: String = (0..m)
            .map(|_| if rng.gen_bool(0.5) { '1' } else { '0' })
            .collect();
        words.insert(w);
    }
    let mut words: Vec<String> = words.into_iter().collect();
    words.shuffle(rng);
    BlockCode::parse_words(&words.join(" ")).unwrap()
}

/// Elements of `t` by label.
pub fn elems(t: &OpTable, names: &[&str]) -> Vec<usize> {
    names.iter().map(|n| t.find_element(n).unwrap()).collect()
}
