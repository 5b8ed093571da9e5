mod common;

use bck_codes::format::{parse_algebra_file, parse_code_file, write_algebra_file, write_code_file};
use bck_codes::{
    are_isomorphic, bck_properties, classify, direct_algebra, dualize, embed_code, extend_matrix,
    hilbert_view, is_filter, verify_axioms, AxiomSystem, BlockCode, ElementSet, Origin,
};
use common::*;

const CODES: [&str; 3] = ["example41.code", "example42.code", "example43.code"];
const TABLES: [&str; 6] = [
    "example41_star.alg",
    "example41_dot.alg",
    "example42_star.alg",
    "example42_dot.alg",
    "example43_star.alg",
    "example43_dot.alg",
];

#[test]
fn fixtures_round_trip() {
    for name in CODES {
        let text = fixture_text(name);
        assert_eq!(
            write_code_file(&parse_code_file(&text).unwrap()),
            text,
            "{name}"
        );
    }
    for name in TABLES {
        let text = fixture_text(name);
        assert_eq!(
            write_algebra_file(&parse_algebra_file(&text).unwrap()),
            text,
            "{name}"
        );
    }
}

#[test]
fn star_fixtures_are_bck_and_dot_fixtures_hilbert() {
    for name in TABLES {
        let t = fixture_table(name);
        let system = if name.contains("star") {
            AxiomSystem::Bck
        } else {
            AxiomSystem::Hilbert
        };
        assert!(verify_axioms(&t, system).unwrap().passed, "{name}");
    }
}

#[test]
fn example_41_embedding_shape() {
    let e = embed_code(&fixture_code("example41.code")).unwrap();
    let m = extend_matrix(&e.code).unwrap();
    assert!(m.prepended_theta);
    assert!(m.is_upper_unitriangular());
    let rows: Vec<String> = m.rows.iter().map(ToString::to_string).collect();
    assert_eq!(
        rows,
        [
            "111111111",
            "010000011",
            "001000010",
            "000100001",
            "000010000",
            "000001000",
            "000000100",
            "000000010",
            "000000001"
        ]
    );
    assert_eq!(e.origins[0], Origin::Theta);
    assert_eq!(
        e.tail_elements,
        elems(&e.algebra, &["w6", "w7", "w8", "w9"])
    );
    assert_eq!(
        e.code_row_elements,
        elems(&e.algebra, &["w2", "w3", "w4", "w5"])
    );
}

#[test]
fn example_41_filters_match_oracle() {
    let alg = embed_code(&fixture_code("example41.code")).unwrap().algebra;
    let report = classify(&alg, true).unwrap();
    let h = dualize(&alg);
    assert_eq!(report.all_filter_count, brute_filters(&h).len());
    assert_eq!(report.all_filter_count, 104);
    let maxima: Vec<Vec<usize>> = report
        .maximal_filters
        .iter()
        .map(|f| f.members.to_vec())
        .collect();
    assert_eq!(maxima.len(), 5);
    for f in &maxima {
        assert!(brute_maximal(&h).contains(f));
    }
    assert_eq!(report.radical.to_vec(), brute_radical(&h));
    assert_eq!(
        report.radical.to_vec(),
        elems(&alg, &["θ", "w2", "w3", "w4"])
    );
}

#[test]
fn example_42_proper_filters() {
    let alg = direct_algebra(&fixture_code("example42.code"))
        .unwrap()
        .algebra;
    let h = dualize(&alg);
    let proper: Vec<Vec<usize>> = brute_filters(&h)
        .into_iter()
        .filter(|f| f.len() < 5)
        .collect();
    let expected: Vec<Vec<usize>> = [
        &["θ"][..],
        &["θ", "a"],
        &["θ", "b"],
        &["θ", "a", "b"],
        &["θ", "a", "b", "c"],
    ]
    .iter()
    .map(|s| elems(&alg, s))
    .collect();
    let mut sorted = proper.clone();
    sorted.sort();
    let mut want = expected.clone();
    want.sort();
    assert_eq!(sorted, want);
    let c_only: ElementSet = elems(&alg, &["θ", "c"]).into_iter().collect();
    let check = is_filter(&h, c_only).unwrap();
    assert!(!check.is_filter);
    assert_eq!(check.witness, Some((3, 1)));
}

#[test]
fn dot_fixture_classifies_like_star() {
    for (star, dot) in [
        ("example41_star.alg", "example41_dot.alg"),
        ("example42_star.alg", "example42_dot.alg"),
        ("example43_star.alg", "example43_dot.alg"),
    ] {
        let a = classify(&fixture_table(star), true).unwrap();
        let b = classify(&fixture_table(dot), false).unwrap();
        assert_eq!(a, b);
        assert_eq!(
            hilbert_view(&fixture_table(star)).unwrap(),
            fixture_table(dot)
        );
    }
}

#[test]
fn star_table_needs_auto_dualize() {
    assert!(classify(&fixture_table("example42_star.alg"), false).is_err());
}

#[test]
fn example_properties() {
    for name in [
        "example41_star.alg",
        "example42_star.alg",
        "example43_star.alg",
    ] {
        let flags = bck_properties(&fixture_table(name)).unwrap();
        assert!(flags.positive_implicative, "{name}");
    }
    // A chain θ < a < b is commutative only when of length ≤ 2.
    let chain = direct_algebra(&BlockCode::parse_words("111 011 001").unwrap()).unwrap();
    let flags = bck_properties(&chain.algebra).unwrap();
    assert!(!flags.commutative);
    assert!(!flags.implicative);
}

#[test]
fn embed_and_direct_differ_but_self_isomorphic() {
    let c = fixture_code("example43.code");
    let a = direct_algebra(&c).unwrap().algebra;
    let b = embed_code(&c).unwrap().algebra;
    assert_eq!(a.n(), 4);
    assert_eq!(b.n(), 1 + 4 + 4);
    assert!(are_isomorphic(&a, &fixture_table("example43_star.alg")).isomorphic);
    assert!(!are_isomorphic(&a, &b).isomorphic);
}
