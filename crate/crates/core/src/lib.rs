//! BCK-algebras and Hilbert algebras built from binary block codes.
//!
//! A block code is turned into a finite poset by the domination order on
//! codewords (the all-ones word is least), and the poset into a positive
//! implicative BCK-algebra by `x∗y = θ` when `x ≤ y`, `x∗y = x` otherwise.
//! Transposing the table gives the dual Hilbert algebra, whose filters
//! decide whether the algebra is semisimple or local.
//!
//! ```
//! use bck_codes::{classify, direct_algebra, BlockCode};
//!
//! let code = BlockCode::parse_words("11111 01011 00111 00011 00001").unwrap();
//! let report = classify(&direct_algebra(&code).unwrap().algebra, true).unwrap();
//! assert!(report.is_local && !report.is_semisimple);
//! ```

pub mod algebra;
pub mod cli;
pub mod codegen;
pub mod embedding;
pub mod error;
pub mod filters;
pub mod format;
pub mod iso;
pub mod order;

pub use algebra::{
    bck_order, bck_properties, dualize, verify_axioms, Axiom, AxiomReport, AxiomSystem, OpTable,
    PropertyFlags, TableKind, Violation, THETA,
};
pub use codegen::{
    census, census_matrix, cut_code, local_family, local_free_bits, roundtrip_check,
    semisimple_family, CensusClass, CensusMode, CensusReport, CutCode, CutSpec, RoundtripReport,
};
pub use embedding::{
    direct_algebra, embed_code, extend_matrix, tail_set_check, Embedding, ExtendedMatrix, Origin,
    TailSetCheck,
};
pub use error::{Error, Result};
pub use filters::{
    all_filters, classify, generated_filter, hilbert_view, is_filter, maximal_filters,
    ClassificationReport, ElementSet, Filter, FilterCheck,
};
pub use iso::{are_isomorphic, canonical_form, is_isomorphism, CanonicalForm, IsoResult};
pub use order::{
    code_poset, compare_codewords, hasse_covers, lex_sort_desc, poset_to_bck, BlockCode, Codeword,
    Comparison, Poset,
};
