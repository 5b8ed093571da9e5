//! Codes read back out of algebras, the semisimple and local code
//! families, and the isomorphism census over unitriangular matrices.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{verify_axioms, AxiomSystem, OpTable, TableKind, THETA};
use crate::embedding::{direct_algebra, embed_code};
use crate::error::{Error, Result};
use crate::iso::{are_isomorphic, canonical_form};
use crate::order::{lex_sort_desc, BlockCode, Codeword};

/// Which elements give codewords and which give bit positions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutSpec {
    pub row_elements: Vec<usize>,
    pub col_elements: Vec<usize>,
}

/// Words produced by a cut, before and after deduplication.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CutCode {
    pub raw_words: Vec<Codeword>,
    pub code: BlockCode,
    /// `(later, earlier)` row positions that produced the same word.
    pub collisions: Vec<(usize, usize)>,
}

/// One codeword per row element `r`; the bit for column element `x` is 1
/// iff `r ∗ x = θ`.
pub fn cut_code(alg: &OpTable, spec: &CutSpec) -> Result<CutCode> {
    if alg.kind() != TableKind::Star {
        return Err(Error::usage("cuts are taken from a star (BCK) table"));
    }
    if spec.row_elements.is_empty() || spec.col_elements.is_empty() {
        return Err(Error::usage("cut rows and columns must be nonempty"));
    }
    if let Some(&bad) = spec
        .row_elements
        .iter()
        .chain(&spec.col_elements)
        .find(|&&x| x >= alg.n())
    {
        return Err(Error::usage(format!("element {bad} is out of range")));
    }
    let report = verify_axioms(alg, AxiomSystem::Bck)?;
    if !report.passed {
        return Err(Error::usage("cuts need a BCK-algebra"));
    }
    let raw_words: Vec<Codeword> = spec
        .row_elements
        .iter()
        .map(|&r| {
            let bits = spec
                .col_elements
                .iter()
                .map(|&x| alg.op(r, x) == THETA)
                .collect();
            Codeword::new(bits).expect("nonempty")
        })
        .collect();
    let mut unique = Vec::new();
    let mut collisions = Vec::new();
    for (i, w) in raw_words.iter().enumerate() {
        match raw_words[..i].iter().position(|u| u == w) {
            Some(j) => collisions.push((i, j)),
            None => unique.push(w.clone()),
        }
    }
    Ok(CutCode {
        code: BlockCode::new(unique)?,
        raw_words,
        collisions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripReport {
    pub expected: Vec<Codeword>,
    pub recovered: Vec<Codeword>,
    pub success: bool,
    /// Position of the first word that differs.
    pub first_mismatch: Option<usize>,
}

/// Embeds `c` and cuts code rows against tail elements; succeeds iff the
/// lex-sorted code comes back word for word.
pub fn roundtrip_check(c: &BlockCode) -> Result<RoundtripReport> {
    let e = embed_code(c)?;
    let cut = cut_code(
        &e.algebra,
        &CutSpec {
            row_elements: e.code_row_elements.clone(),
            col_elements: e.tail_elements.clone(),
        },
    )?;
    let expected = lex_sort_desc(c).code.words().to_vec();
    let recovered = cut.raw_words;
    let first_mismatch =
        (0..expected.len().max(recovered.len())).find(|&i| expected.get(i) != recovered.get(i));
    Ok(RoundtripReport {
        success: first_mismatch.is_none(),
        expected,
        recovered,
        first_mismatch,
    })
}

/// All-ones followed by the unit words `e2, …, en`.
pub fn semisimple_family(n: usize) -> Result<BlockCode> {
    if n < 2 {
        return Err(Error::usage("the semisimple family needs n ≥ 2"));
    }
    let words = std::iter::once(Codeword::ones(n))
        .chain((1..n).map(|i| Codeword::unit(n, i)))
        .collect();
    BlockCode::new(words)
}

/// Number of free cells `(i, j)`, `2 ≤ i < j ≤ n−1` (1-based), of the
/// local family.
pub fn local_free_bits(n: usize) -> usize {
    if n < 3 {
        0
    } else {
        (n - 2) * (n - 3) / 2
    }
}

/// Upper unitriangular `n × n` matrix with all-ones first row and last
/// column; the remaining above-diagonal cells are taken row by row from
/// `bits`.
pub fn local_family(n: usize, bits: &[bool]) -> Result<BlockCode> {
    if n < 2 {
        return Err(Error::usage("the local family needs n ≥ 2"));
    }
    let free = local_free_bits(n);
    if bits.len() != free {
        return Err(Error::usage(format!(
            "the local family with n = {n} needs {free} free bits, got {}",
            bits.len()
        )));
    }
    let mut next = bits.iter().copied();
    let words: Vec<Codeword> = (0..n)
        .map(|i| {
            let row = (0..n)
                .map(|j| {
                    if i == 0 || j == i || j == n - 1 {
                        j >= i
                    } else if j > i {
                        next.next().expect("bit count checked")
                    } else {
                        false
                    }
                })
                .collect();
            Codeword::new(row).expect("n ≥ 2")
        })
        .collect();
    if words.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::usage(
            "assignment breaks the descending lexicographic order",
        ));
    }
    BlockCode::new(words)
}

/// Number of free above-diagonal cells in rows `2 … n−1` of the census
/// matrices: `(n−1)(n−2)/2`.
pub fn census_free_bits(n: usize) -> usize {
    if n < 2 {
        0
    } else {
        (n - 1) * (n - 2) / 2
    }
}

/// Upper unitriangular matrix with all-ones first row whose free cells are
/// the bits of `mask`, least significant first, row by row.
pub fn census_matrix(n: usize, mask: u64) -> BlockCode {
    let mut k = 0;
    let words = (0..n)
        .map(|i| {
            let row = (0..n)
                .map(|j| {
                    if i == 0 || j == i {
                        j >= i
                    } else if j > i && i < n - 1 {
                        let bit = mask >> k & 1 == 1;
                        k += 1;
                        bit
                    } else {
                        false
                    }
                })
                .collect();
            Codeword::new(row).expect("n ≥ 1")
        })
        .collect();
    BlockCode::new(words).expect("unitriangular rows are distinct")
}

pub const MAX_EXHAUSTIVE_N: usize = 7;
pub const MAX_SAMPLED_N: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "mode")]
pub enum CensusMode {
    Exhaustive,
    Sample { count: usize, seed: u64 },
}

/// One isomorphism class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusClass {
    /// First matrix (in enumeration/sample order) of the class.
    pub mask: u64,
    pub matrix: Vec<Codeword>,
    pub size: usize,
    pub canonical_cells: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub n: usize,
    pub mode: CensusMode,
    pub free_bits: usize,
    pub total_matrices: u64,
    pub evaluated: usize,
    pub class_count: usize,
    pub class_representatives: Vec<CensusClass>,
    /// `2^((n−1)(n−2)/2)`
    pub bound: u64,
    pub bound_met: bool,
}

/// Classifies the algebras of every (or a sample of) census matrix up to
/// isomorphism, on `jobs` worker threads (`None`: rayon's default).
///
/// The report does not depend on the number of workers.
pub fn census(n: usize, mode: CensusMode, jobs: Option<usize>) -> Result<CensusReport> {
    if n < 2 {
        return Err(Error::usage("the census needs n ≥ 2"));
    }
    let free_bits = census_free_bits(n);
    let masks: Vec<u64> = match mode {
        CensusMode::Exhaustive => {
            if n > MAX_EXHAUSTIVE_N {
                return Err(Error::usage(format!(
                    "exhaustive census is limited to n ≤ {MAX_EXHAUSTIVE_N}; use --sample"
                )));
            }
            (0..1u64 << free_bits).collect()
        }
        CensusMode::Sample { count, seed } => {
            if n > MAX_SAMPLED_N {
                return Err(Error::usage(format!(
                    "sampled census is limited to n ≤ {MAX_SAMPLED_N}"
                )));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let span = 1u64 << free_bits;
            (0..count).map(|_| rng.gen_range(0..span)).collect()
        }
    };
    let job = |&mask: &u64| -> Result<(Vec<usize>, OpTable)> {
        let alg = direct_algebra(&census_matrix(n, mask))?.algebra;
        let canon = canonical_form(&alg);
        if alg.relabel(&canon.labeling).cells() != canon.cells.as_slice() {
            return Err(Error::integrity(
                "canonical labelling does not reproduce its cells",
            ));
        }
        Ok((canon.cells, alg))
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.unwrap_or(0))
        .build()
        .map_err(|e| Error::usage(format!("cannot start workers: {e}")))?;
    let forms: Vec<(Vec<usize>, OpTable)> =
        pool.install(|| masks.par_iter().map(job).collect::<Result<_>>())?;

    let mut classes: BTreeMap<&[usize], (usize, CensusClass)> = BTreeMap::new();
    for (idx, (&mask, (cells, _))) in masks.iter().zip(&forms).enumerate() {
        classes
            .entry(cells.as_slice())
            .and_modify(|(_, c)| c.size += 1)
            .or_insert_with(|| {
                (
                    idx,
                    CensusClass {
                        mask,
                        matrix: census_matrix(n, mask).words().to_vec(),
                        size: 1,
                        canonical_cells: cells.clone(),
                    },
                )
            });
    }
    // every member must be isomorphic to the first member of its class
    let verified = pool.install(|| {
        forms.par_iter().all(|(cells, alg)| {
            let (rep, _) = classes[cells.as_slice()];
            are_isomorphic(&forms[rep].1, alg).isomorphic
        })
    });
    if !verified {
        return Err(Error::integrity(
            "a census class contains non-isomorphic algebras",
        ));
    }
    let mut class_representatives: Vec<CensusClass> =
        classes.into_values().map(|(_, c)| c).collect();
    class_representatives.sort_by_key(|c| (c.mask, c.canonical_cells.clone()));
    let bound = 1u64 << free_bits;
    let class_count = class_representatives.len();
    Ok(CensusReport {
        n,
        mode,
        free_bits,
        total_matrices: bound,
        evaluated: masks.len(),
        class_count,
        class_representatives,
        bound,
        bound_met: class_count as u64 >= bound,
    })
}
