//! Embedding a block code into a BCK-algebra.
//!
//! [`embed_code`] extends the code matrix to an upper triangular square
//! matrix with unit diagonal and turns its rows into a domination poset;
//! [`direct_algebra`] uses the codewords themselves as the carrier.

use serde::Serialize;

use crate::algebra::{dualize, OpTable};
use crate::error::{Error, Result};
use crate::filters::{is_filter, ElementSet};
use crate::order::{
    code_carrier, lex_sort_desc, poset_of_words, poset_to_bck, BlockCode, Codeword,
};

/// Square 0/1 matrix produced by [`extend_matrix`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtendedMatrix {
    pub rows: Vec<Codeword>,
    /// Whether an all-ones row (and a leading `1 0 … 0` column) was added.
    pub prepended_theta: bool,
    /// `(n, m)`: number of source words and their length.
    pub source_dims: (usize, usize),
}

impl ExtendedMatrix {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_upper_unitriangular(&self) -> bool {
        let p = self.dim();
        self.rows
            .iter()
            .enumerate()
            .all(|(i, row)| row.len() == p && row.bit(i) && (0..i).all(|j| !row.bit(j)))
    }

    /// Offset of the first tail column.
    fn tail_offset(&self) -> usize {
        usize::from(self.prepended_theta) + self.source_dims.0
    }
}

/// Where an element of an embedding comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Origin {
    /// Added θ (prepended row or adjoined all-ones word).
    Theta,
    /// Row for word `i` of [`Embedding::code`].
    CodeRow(usize),
    /// Identity row for tail column `j`.
    TailRow(usize),
}

/// A code together with the BCK-algebra built on it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Embedding {
    /// The code as given.
    pub source: BlockCode,
    /// The code in construction order (lex-sorted descending for the
    /// embedding, as given for the direct pathway).
    pub code: BlockCode,
    /// `permutation[i]`: index in `source` of `code` word `i`.
    pub permutation: Vec<usize>,
    /// Absent for the direct pathway.
    pub matrix: Option<ExtendedMatrix>,
    /// Word attached to each element, in element order.
    pub carrier: Vec<Codeword>,
    pub algebra: OpTable,
    pub origins: Vec<Origin>,
    pub code_row_elements: Vec<usize>,
    pub tail_elements: Vec<usize>,
}

/// Extends the matrix of the lex-sorted code: identity columns on the left,
/// identity rows for the tail columns at the bottom, then an all-ones row
/// and `1 0 … 0` column in front unless the first row is already all ones.
pub fn extend_matrix(c: &BlockCode) -> Result<ExtendedMatrix> {
    if c.is_empty() {
        return Err(Error::usage("cannot extend the matrix of an empty code"));
    }
    let sorted = lex_sort_desc(c).code;
    let (n, m) = (sorted.len(), sorted.word_length());
    let p = n + m;
    let mut rows: Vec<Codeword> = sorted
        .words()
        .iter()
        .enumerate()
        .map(|(i, w)| Codeword::unit(n, i).concat(w))
        .collect();
    rows.extend((0..m).map(|j| Codeword::unit(p, n + j)));
    let prepended_theta = !rows[0].is_all_ones();
    if prepended_theta {
        let zero = Codeword::zeros(1);
        rows = std::iter::once(Codeword::ones(p + 1))
            .chain(rows.iter().map(|r| zero.concat(r)))
            .collect();
    }
    let matrix = ExtendedMatrix {
        rows,
        prepended_theta,
        source_dims: (n, m),
    };
    debug_assert!(matrix.is_upper_unitriangular());
    Ok(matrix)
}

/// Element names: θ, then `w2, w3, …` in element order.
fn w_labels(count: usize) -> Vec<String> {
    std::iter::once("θ".to_string())
        .chain((2..=count).map(|k| format!("w{k}")))
        .collect()
}

/// Element names: θ, then `a, b, c, …` (or `x2, x3, …` beyond 26).
fn letter_labels(count: usize) -> Vec<String> {
    let rest = count.saturating_sub(1);
    std::iter::once("θ".to_string())
        .chain((0..rest).map(|k| {
            if rest <= 26 {
                char::from(b'a' + k as u8).to_string()
            } else {
                format!("x{}", k + 2)
            }
        }))
        .collect()
}

/// Embeds a code into the BCK-algebra on the rows of its extended matrix.
pub fn embed_code(c: &BlockCode) -> Result<Embedding> {
    let matrix = extend_matrix(c)?;
    let sorted = lex_sort_desc(c);
    let (n, m) = matrix.source_dims;
    let offset = usize::from(matrix.prepended_theta);
    let poset = poset_of_words(&matrix.rows)?;
    debug_assert_eq!(poset.least(), Some(0));
    let algebra = poset_to_bck(&poset)?.with_labels(Some(w_labels(matrix.dim())))?;
    let mut origins = Vec::with_capacity(matrix.dim());
    if matrix.prepended_theta {
        origins.push(Origin::Theta);
    }
    origins.extend((0..n).map(Origin::CodeRow));
    origins.extend((0..m).map(Origin::TailRow));
    Ok(Embedding {
        source: c.clone(),
        code: sorted.code,
        permutation: sorted.permutation,
        carrier: matrix.rows.clone(),
        algebra,
        origins,
        code_row_elements: (offset..offset + n).collect(),
        tail_elements: (offset + n..offset + n + m).collect(),
        matrix: Some(matrix),
    })
}

/// The BCK-algebra whose carrier is the code itself, with the all-ones
/// word adjoined as θ when missing. θ is moved to element 0; the other
/// words keep the code order.
pub fn direct_algebra(c: &BlockCode) -> Result<Embedding> {
    if c.is_empty() {
        return Err(Error::usage(
            "the direct algebra of an empty code is undefined",
        ));
    }
    let words = code_carrier(c, true)?;
    let adjoined = words.len() > c.len();
    let theta_pos = words
        .iter()
        .position(Codeword::is_all_ones)
        .expect("carrier has θ");
    // element order: θ first, rest in code order
    let order: Vec<usize> = std::iter::once(theta_pos)
        .chain((0..words.len()).filter(|&i| i != theta_pos))
        .collect();
    let carrier: Vec<Codeword> = order.iter().map(|&i| words[i].clone()).collect();
    let poset = poset_of_words(&carrier)?;
    let algebra = poset_to_bck(&poset)?.with_labels(Some(letter_labels(carrier.len())))?;
    let shift = usize::from(adjoined);
    let origins: Vec<Origin> = order
        .iter()
        .map(|&i| {
            if adjoined && i == 0 {
                Origin::Theta
            } else {
                Origin::CodeRow(i - shift)
            }
        })
        .collect();
    let mut code_row_elements = vec![0; c.len()];
    for (element, origin) in origins.iter().enumerate() {
        if let Origin::CodeRow(i) = origin {
            code_row_elements[*i] = element;
        }
    }
    Ok(Embedding {
        source: c.clone(),
        code: c.clone(),
        permutation: (0..c.len()).collect(),
        matrix: None,
        carrier,
        algebra,
        origins,
        code_row_elements,
        tail_elements: Vec::new(),
    })
}

/// Outcome of checking whether θ together with the tail elements is a
/// filter of the dual Hilbert algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TailSetCheck {
    pub set: ElementSet,
    pub is_filter: bool,
    pub witness: Option<(usize, usize)>,
}

pub fn tail_set_check(e: &Embedding) -> Result<TailSetCheck> {
    if e.tail_elements.is_empty() {
        return Err(Error::usage(
            "the tail-set check needs an embedding with tail elements",
        ));
    }
    let set: ElementSet = std::iter::once(0)
        .chain(e.tail_elements.iter().copied())
        .collect();
    let check = is_filter(&dualize(&e.algebra), set)?;
    Ok(TailSetCheck {
        set,
        is_filter: check.is_filter,
        witness: check.witness,
    })
}

impl Embedding {
    /// Matrix row of a code-row element restricted to the tail columns.
    pub fn tail_bits(&self, element: usize) -> Option<Codeword> {
        let matrix = self.matrix.as_ref()?;
        let start = matrix.tail_offset();
        let row = &matrix.rows[element];
        (matrix.source_dims.1 > 0).then(|| row.slice(start..row.len()))
    }
}
