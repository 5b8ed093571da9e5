mod common;

use std::collections::BTreeSet;

use bck_codes::algebra::positive_implicative_witness;
use bck_codes::iso::is_isomorphism;
use bck_codes::{
    all_filters, are_isomorphic, bck_order, bck_properties, canonical_form, classify, code_poset,
    direct_algebra, dualize, embed_code, generated_filter, hasse_covers, is_filter, poset_to_bck,
    roundtrip_check, tail_set_check, verify_axioms, AxiomSystem, BlockCode, ElementSet, OpTable,
    TableKind, THETA,
};
use common::*;
use proptest::prelude::*;

/// Codes with 1..=max_n distinct words of length 1..=max_m, in random order.
fn codes(max_n: usize, max_m: usize) -> impl Strategy<Value = BlockCode> {
    (1..=max_m)
        .prop_flat_map(move |m| {
            let cap = (1usize << m).min(max_n);
            (Just(m), prop::collection::btree_set(0u32..1 << m, 1..=cap))
        })
        .prop_flat_map(|(m, set)| {
            (
                Just(m),
                Just(set.into_iter().collect::<Vec<_>>()).prop_shuffle(),
            )
        })
        .prop_map(|(m, masks)| {
            let words: Vec<String> = masks
                .iter()
                .map(|w| {
                    (0..m)
                        .map(|b| if w >> b & 1 == 1 { '1' } else { '0' })
                        .collect()
                })
                .collect();
            BlockCode::parse_words(&words.join(" ")).unwrap()
        })
}

/// A θ-fixing permutation of `0..n`.
fn theta_fixing(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|rest| std::iter::once(THETA).chain(rest).collect())
}

fn algebra_and_perm() -> impl Strategy<Value = (OpTable, Vec<usize>)> {
    (codes(7, 6), any::<bool>())
        .prop_map(|(c, embed)| {
            if embed {
                embed_code(&c).unwrap().algebra
            } else {
                direct_algebra(&c).unwrap().algebra
            }
        })
        .prop_flat_map(|a| {
            let n = a.n();
            (Just(a), theta_fixing(n))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn constructions_are_pi_bck_with_hilbert_duals(c in codes(8, 8)) {
        for a in [embed_code(&c).unwrap().algebra, direct_algebra(&c).unwrap().algebra] {
            prop_assert!(verify_axioms(&a, AxiomSystem::Bck).unwrap().passed);
            prop_assert!(bck_properties(&a).unwrap().positive_implicative);
            let d = dualize(&a);
            prop_assert_eq!(d.kind(), TableKind::Dot);
            prop_assert!(verify_axioms(&d, AxiomSystem::Hilbert).unwrap().passed);
            prop_assert_eq!(dualize(&d), a);
        }
    }

    #[test]
    fn roundtrip_recovers_sorted_code(c in codes(8, 8)) {
        let r = roundtrip_check(&c).unwrap();
        let mut expected = words_of(&c);
        expected.sort_by(|a, b| b.cmp(a));
        let got: Vec<Vec<bool>> = r.recovered.iter().map(|w| w.bits().to_vec()).collect();
        prop_assert_eq!(got, expected);
        prop_assert!(r.success);
    }

    #[test]
    fn embedding_matrix_is_unitriangular(c in codes(8, 8)) {
        let e = embed_code(&c).unwrap();
        let m = e.matrix.as_ref().unwrap();
        prop_assert!(m.is_upper_unitriangular());
        prop_assert!(m.rows[0].is_all_ones());
        prop_assert_eq!(e.algebra.n(), m.dim());
    }

    #[test]
    fn order_table_matches_domination(c in codes(8, 6)) {
        let p = code_poset(&c, true).unwrap();
        let mut words = words_of(&c);
        if !words.iter().any(|w| w.iter().all(|&b| b)) {
            words.insert(0, vec![true; c.word_length()]);
        }
        prop_assert_eq!(p.n(), words.len());
        prop_assert_eq!(p.relation(), &domination_relation(&words)[..]);
        let t = poset_to_bck(&p).unwrap();
        let word = |x: usize| -> Vec<bool> { t.label(x).chars().map(|ch| ch == '1').collect() };
        prop_assert!(word(THETA).iter().all(|&b| b));
        for x in 0..t.n() {
            for y in 0..t.n() {
                let want = if dominated(&word(x), &word(y)) { THETA } else { x };
                prop_assert_eq!(t.op(x, y), want);
            }
        }
        let back = bck_order(&t).unwrap();
        let relabeled: Vec<Vec<bool>> = (0..t.n()).map(word).collect();
        prop_assert_eq!(back.relation(), &domination_relation(&relabeled)[..]);
    }

    #[test]
    fn hasse_closure_reconstructs_order(c in codes(8, 6)) {
        let p = code_poset(&c, true).unwrap();
        let n = p.n();
        let mut closure = vec![false; n * n];
        for i in 0..n {
            closure[i * n + i] = true;
        }
        for (lo, hi) in hasse_covers(&p) {
            prop_assert!(p.lt(lo, hi));
            prop_assert!(!(0..n).any(|z| p.lt(lo, z) && p.lt(z, hi)));
            closure[lo * n + hi] = true;
        }
        for k in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if closure[i * n + k] && closure[k * n + j] {
                        closure[i * n + j] = true;
                    }
                }
            }
        }
        prop_assert_eq!(&closure[..], p.relation());
    }

    #[test]
    fn properties_match_brute_force(c in codes(6, 5)) {
        let t = direct_algebra(&c).unwrap().algebra;
        let n = t.n();
        let f = bck_properties(&t).unwrap();
        let comm = (0..n).all(|x| (0..n).all(|y| t.op(x, t.op(x, y)) == t.op(y, t.op(y, x))));
        let imp = (0..n).all(|x| (0..n).all(|y| t.op(x, t.op(y, x)) == x));
        prop_assert_eq!(f.commutative, comm);
        prop_assert_eq!(f.implicative, imp);
        prop_assert_eq!(f.commutative_witness.is_none(), comm);
        prop_assert!(positive_implicative_witness(&t).is_none());
    }

    #[test]
    fn filters_match_oracle_and_meet_closed(c in codes(7, 5), seed_bits in any::<u16>()) {
        let h = dualize(&direct_algebra(&c).unwrap().algebra);
        let n = h.n();
        let oracle: BTreeSet<Vec<usize>> = brute_filters(&h).into_iter().collect();
        let lib: Vec<ElementSet> = all_filters(&h).unwrap().into_iter().map(|f| f.members).collect();
        let lib_set: BTreeSet<Vec<usize>> = lib.iter().map(|s| s.to_vec()).collect();
        prop_assert_eq!(&lib_set, &oracle);
        prop_assert_eq!(lib.len(), oracle.len());
        for a in &lib {
            for b in &lib {
                prop_assert!(is_filter(&h, a.intersection(*b)).unwrap().is_filter);
            }
        }
        let seed: ElementSet = (0..n).filter(|&i| seed_bits >> i & 1 == 1).collect();
        let generated = generated_filter(&h, seed).unwrap().members;
        let smallest = oracle
            .iter()
            .filter(|f| seed.iter().all(|e| f.contains(&e)))
            .min_by_key(|f| f.len())
            .unwrap();
        prop_assert_eq!(generated.to_vec(), smallest.clone());
        for f in oracle.iter().filter(|f| seed.iter().all(|e| f.contains(&e))) {
            prop_assert!(generated.iter().all(|e| f.contains(&e)));
        }
    }

    #[test]
    fn relabeling_preserves_structure((a, perm) in algebra_and_perm()) {
        let b = a.relabel(&perm);
        let r = are_isomorphic(&a, &b);
        prop_assert!(r.isomorphic);
        prop_assert!(is_isomorphism(&a, &b, r.mapping.as_ref().unwrap()));
        prop_assert!(is_isomorphism(&a, &b, &perm));
        prop_assert_eq!(canonical_form(&a).cells, canonical_form(&b).cells);
        if a.n() <= 12 {
            let ca = classify(&a, true).unwrap();
            let cb = classify(&b, true).unwrap();
            prop_assert_eq!(ca.all_filter_count, cb.all_filter_count);
            prop_assert_eq!(ca.maximal_filters.len(), cb.maximal_filters.len());
            prop_assert_eq!(ca.radical.len(), cb.radical.len());
        }
    }

    #[test]
    fn non_isomorphic_tables_get_distinct_forms(a in codes(5, 4), b in codes(5, 4)) {
        let x = direct_algebra(&a).unwrap().algebra;
        let y = direct_algebra(&b).unwrap().algebra;
        let same_form = canonical_form(&x).cells == canonical_form(&y).cells;
        let n = x.n();
        let brute = n == y.n() && {
            let rest = permutations(n - 1);
            rest.iter().any(|p| {
                let perm: Vec<usize> = std::iter::once(0).chain(p.iter().map(|v| v + 1)).collect();
                is_isomorphism(&x, &y, &perm)
            })
        };
        prop_assert_eq!(same_form, brute);
        prop_assert_eq!(are_isomorphic(&x, &y).isomorphic, brute);
    }

    #[test]
    fn tail_set_verdict_refined(c in codes(6, 5)) {
        let e = embed_code(&c).unwrap();
        let check = tail_set_check(&e).unwrap();
        let oracle = brute_detachment(&dualize(&e.algebra), &check.set.to_vec());
        prop_assert_eq!(check.witness, oracle);
        let predicted = e
            .code_row_elements
            .iter()
            .zip(e.code.words())
            .all(|(&el, w)| el == THETA || w.is_zero());
        prop_assert_eq!(check.is_filter, predicted);
    }
}

/// Every star table on at most three elements with θ = 0: BCK plus
/// positive implicative holds exactly when the transpose is Hilbert.
#[test]
fn small_tables_pi_bck_iff_dual_hilbert() {
    let mut agreeing = 0;
    for n in 1..=3usize {
        let cells = n * n;
        for code in 0..n.pow(cells as u32) {
            let mut v = code;
            let rows: Vec<Vec<usize>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let d = v % n;
                            v /= n;
                            d
                        })
                        .collect()
                })
                .collect();
            let star = OpTable::new(TableKind::Star, rows, None).unwrap();
            let pi_bck = verify_axioms(&star, AxiomSystem::Bck).unwrap().passed
                && positive_implicative_witness(&star).is_none();
            let hilbert = verify_axioms(&dualize(&star), AxiomSystem::Hilbert)
                .unwrap()
                .passed;
            assert_eq!(pi_bck, hilbert, "{:?}", star.cells());
            agreeing += usize::from(hilbert);
        }
    }
    // One table each for n = 1, 2; for n = 3 the two labeled chains and
    // the antichain.
    assert_eq!(agreeing, 1 + 1 + 3);
}

#[test]
fn codeword_order_exhaustive() {
    use bck_codes::{compare_codewords, Codeword, Comparison};
    for len in 1..=6usize {
        let words: Vec<Codeword> = (0..1u32 << len)
            .map(|m| Codeword::new((0..len).map(|b| m >> b & 1 == 1).collect()).unwrap())
            .collect();
        for a in &words {
            for b in &words {
                let want = match (dominated(a.bits(), b.bits()), dominated(b.bits(), a.bits())) {
                    (true, true) => Comparison::Equal,
                    (true, false) => Comparison::LessEq,
                    (false, true) => Comparison::GreaterEq,
                    (false, false) => Comparison::Incomparable,
                };
                assert_eq!(compare_codewords(a, b).unwrap(), want);
            }
        }
    }
}
