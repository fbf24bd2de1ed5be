use merge_algebra::linear::LinComb;
use merge_algebra::lr::coproduct_basis;
use merge_algebra::mg::checks::{self, lexicon_trees, Lexicon};
use merge_algebra::mg::{
    coproduct_i_basis, coset_reduce, dom_im_n, external_merge, head_features, im_candidates, in_dom_em, in_dom_im,
    in_domain, internal_merge, intmergeprod, iterated_internal_merge, product_i_basis, sequential_internal_merge,
    MatchingMode, MgTree, SmcMode,
};
use merge_algebra::parse::parse_mg;
use proptest::prelude::*;

const AB: [&str; 2] = ["A", "B"];

fn m(s: &str) -> MgTree {
    parse_mg(s).unwrap()
}

#[test]
fn em_domain_examples() {
    let v = m(r#"v:"sel(D) V""#);
    for mode in [MatchingMode::First, MatchingMode::Full] {
        assert!(in_dom_em(&v, &m(r#"d:"D""#), mode));
        assert!(!in_dom_em(&m(r#"v:"V""#), &m(r#"d:"D""#), mode));
    }
    assert!(in_dom_em(&v, &m(r#"d:"D N""#), MatchingMode::First));
    assert!(!in_dom_em(&v, &m(r#"d:"D N""#), MatchingMode::Full));
}

#[test]
fn em_results() {
    let r = external_merge(&m(r#"v:"sel(D) V""#), &m(r#"d:"D""#), MatchingMode::First).unwrap();
    assert_eq!(r.to_string(), r#"[< v:"V" d:""]"#);
    let r = external_merge(&m(r#"[< x:"sel(D) V" y:""]"#), &m(r#"n:"D N""#), MatchingMode::First).unwrap();
    assert_eq!(r, m(r#"[> n:"N" [< x:"V" y:""]]"#));
    assert_eq!(head_features(&r).to_string(), "V");
    let e = external_merge(&m(r#"v:"V""#), &m(r#"d:"D""#), MatchingMode::First).unwrap_err();
    assert!(e.to_string().contains("sel"), "{e}");
}

#[test]
fn im_example() {
    let t = m(r#"[< c:"lsr(W) C" [> d:"lse(W) D" v:""]]"#);
    let got = internal_merge(&t, SmcMode::Unique).unwrap();
    assert_eq!(got, LinComb::basis(m(r#"[> d:"D" [< c:"C" v:""]]"#)));
    assert!(internal_merge(&m(r#"[< c:"C" d:"lse(W)"]"#), SmcMode::Unique).is_err());
    assert!(in_dom_im(&m(r#"[< c:"C" d:"lse(W)"]"#), SmcMode::Unique).unwrap().is_empty());
}

#[test]
fn im_ambiguity_by_mode() {
    let t = m(r#"[< c:"lsr(W) C" [> d:"lse(W) D" e:"lse(W) E"]]"#);
    assert_eq!(im_candidates(&t).len(), 2);
    assert!(in_dom_im(&t, SmcMode::Unique).is_err());
    assert!(!in_domain(&t, SmcMode::Unique));
    let all = internal_merge(&t, SmcMode::SumAll).unwrap();
    assert_eq!(all.len(), 2);
    for (x, _) in &all {
        assert_eq!(x.leaves(), t.leaves());
    }
}

// licensees d and k with disjoint maximal projections [< d x] and [< k y]
const DISJOINT: &str = r#"[< c:"lsr(W) lsr(K) C" [> [< d:"lse(W) D" x:""] [< z:"Z" [< k:"lse(K) K" y:""]]]]"#;
// k heads [> [< d x] [< k y]], which swallows d's projection
const OVERLAP: &str = r#"[< c:"lsr(W) lsr(K) C" [> [< d:"lse(W) D" x:""] [< k:"lse(K) K" y:""]]]"#;

#[test]
fn iterated_domain_certificates() {
    let t = m(DISJOINT);
    let cert = dom_im_n(&t, 2).expect("certificate");
    assert_eq!(cert.bases, ["W", "K"]);
    assert!(dom_im_n(&m(OVERLAP), 2).is_none());
    assert!(dom_im_n(&m(OVERLAP), 1).is_some());
    // n = 1 is the plain domain
    assert_eq!(dom_im_n(&t, 1).is_some(), !im_candidates(&t).is_empty());
}

#[test]
fn iterated_matches_sequential() {
    let t = m(DISJOINT);
    let cert = dom_im_n(&t, 2).unwrap();
    let it = iterated_internal_merge(&t, 2, SmcMode::Unique).unwrap();
    assert_eq!(it, LinComb::basis(sequential_internal_merge(&t, &cert).unwrap()));
    for (x, _) in &it {
        assert_eq!(x.leaves(), 6);
        assert_eq!(head_features(x).to_string(), "C");
    }
    let one = m(r#"[< c:"lsr(W) C" [> d:"lse(W) D" v:""]]"#);
    assert_eq!(
        iterated_internal_merge(&one, 1, SmcMode::Unique).unwrap(),
        internal_merge(&one, SmcMode::Unique).unwrap()
    );
}

#[test]
fn coproduct_i_drops_splits() {
    let t = m(r#"[< c:"lsr(W) C" [< x:"X" [< d:"lse(W)" e:""]]]"#);
    let di = coproduct_i_basis(&t, SmcMode::Unique);
    assert!(di.len() < coproduct_basis(&t).len());
    let out = m(r#"[< c:"C" [< x:"X" d:"D"]]"#);
    assert_eq!(coproduct_i_basis(&out, SmcMode::Unique), coproduct_basis(&out));
}

#[test]
fn unit_slot_product() {
    let t = m(r#"[< c:"lsr(W) C" [> d:"lse(W) D" v:""]]"#);
    let dot = m(r#"f:"""#);
    assert_eq!(product_i_basis(&t, &dot, SmcMode::Unique), LinComb::basis(t.clone()));
    let r = intmergeprod(&t, &dot, SmcMode::Unique);
    assert!(r.holds());
    // • ⋆_I T' always has decompositions
    let t2 = m(r#"[< a:"A" b:"B"]"#);
    assert!(!product_i_basis(&dot, &t2, SmcMode::Unique).is_zero());
}

#[test]
fn structure_laws_small() {
    for smc in [SmcMode::Unique, SmcMode::SumAll] {
        assert!(checks::coideal_check(&AB, 5, smc).ok());
        assert!(checks::product_head_check(&AB, 5, smc).ok());
        assert!(checks::coproduct_fallback_check(&AB, 5, smc).ok());
    }
    assert!(checks::right_ideal_check(&AB, 5, SmcMode::SumAll).ok());
    let left = checks::left_ideal_check(&AB, 6, SmcMode::SumAll);
    assert!(!left.witnesses.is_empty());
    assert!(checks::nested_domains_check(&AB, 5, 2).ok());
    assert!(checks::im_sequential_check(&AB, 5).ok());
}

#[test]
fn partial_identities_small() {
    let r = merge_algebra::lr::Presentation::Recursive;
    for mode in [MatchingMode::First, MatchingMode::Full] {
        let c = checks::cocycle_check(&AB, 3, r, Some(mode));
        assert!(c.ok() && c.skipped > 0 && c.passed > 0, "{c:?}");
    }
    let v = checks::veeid_check(&AB, 3, r, None);
    assert!(v.ok() && v.skipped == 0);
}

fn lex_tree() -> impl Strategy<Value = MgTree> {
    (1usize..=4, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = lexicon_trees(n, &Lexicon::internal(&AB));
        all[i.index(all.len())].clone()
    })
}

proptest! {
    #[test]
    fn coset_reduce_idempotent(a in lex_tree(), b in lex_tree()) {
        let s: LinComb<MgTree> = [a, b].into_iter().collect();
        for smc in [SmcMode::Unique, SmcMode::SumAll] {
            let once = coset_reduce(&s, 1, smc);
            prop_assert_eq!(coset_reduce(&once, 1, smc), once.clone());
            for (t, _) in &once {
                prop_assert!(!in_domain(t, smc));
            }
        }
    }

    #[test]
    fn im_conserves_leaves(t in lex_tree()) {
        if let Ok(s) = internal_merge(&t, SmcMode::SumAll) {
            for (x, _) in &s {
                prop_assert_eq!(x.leaves(), t.leaves());
                prop_assert_eq!(head_features(x), &head_features(&t).hat());
            }
        }
    }

    #[test]
    fn coproduct_i_is_a_sub_sum(t in lex_tree()) {
        let full = coproduct_basis(&t);
        for (k, c) in &coproduct_i_basis(&t, SmcMode::Unique) {
            prop_assert_eq!(c.clone(), full.coeff(k));
        }
    }
}
