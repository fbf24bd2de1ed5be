use std::collections::BTreeSet;

use merge_algebra::parse::{parse_abstract, parse_mg, parse_planar, parse_workspace};
use merge_algebra::trees::{
    abstract_trees, admissible_cuts, canonicalize, embedding_count, forget_planar, planar_embeddings, planar_trees,
    quotient, AbstractTree, RawTree, VertexAddr,
};
use proptest::prelude::*;

// labelled unordered binary trees, counted without enumerating
fn count_abstract(n: usize, m: u64) -> u64 {
    let mut t = vec![0u64; n + 1];
    t[1] = m;
    for k in 2..=n {
        for i in 1..k {
            let j = k - i;
            if i < j {
                t[k] += t[i] * t[j];
            } else if i == j {
                t[k] += t[i] * (t[i] + 1) / 2;
            }
        }
    }
    t[n]
}

fn catalan(k: u64) -> u64 {
    (0..k).fold(1u64, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

#[test]
fn abstract_counts_match_recursion() {
    for n in 1..=7 {
        assert_eq!(abstract_trees(n, &["x"]).len() as u64, count_abstract(n, 1), "n={n}");
        assert_eq!(abstract_trees(n, &["a", "b"]).len() as u64, count_abstract(n, 2), "n={n}");
    }
}

#[test]
fn planar_counts_are_catalan() {
    for n in 1..=8 {
        let ts = planar_trees(n, &[None::<String>], &["x".to_string()]);
        assert_eq!(ts.len() as u64, catalan(n as u64 - 1));
    }
}

#[test]
fn round_trip_corpus() {
    for s in ["a", "{a b}", "{a {b c}}", "{{a b} {c d}}", "{x {x {x x}}}"] {
        assert_eq!(parse_abstract(s).unwrap().to_string(), s);
    }
    for s in ["x", "[x x]", "[x [x x]]", "[d [e x y] z]"] {
        assert_eq!(parse_planar(s).unwrap().to_string(), s);
    }
    for s in [r#"v:"sel(D) V""#, r#"[< a:"sel(D) V" b:""]"#, r#"[> n:"N" [< x:"V" y:""]]"#] {
        assert_eq!(parse_mg(s).unwrap().to_string(), s);
    }
    assert_eq!(parse_workspace("{a b} | c").unwrap().to_string(), "c | {a b}");
    assert!(parse_workspace("1").unwrap().is_empty());
}

#[test]
fn syntax_errors_carry_positions() {
    let e = parse_abstract("{a {b c}").unwrap_err().to_string();
    assert!(e.contains("byte"), "{e}");
    assert!(parse_abstract("{a b c}").is_err());
    assert!(parse_mg("[< a b]").is_err());
    assert!(parse_planar("[a]").is_err());
}

#[test]
fn canonical_form_ignores_child_order() {
    assert_eq!(parse_abstract("{{c d} {b a}}").unwrap(), parse_abstract("{{a b} {d c}}").unwrap());
    assert_ne!(parse_abstract("{a {b c}}").unwrap(), parse_abstract("{b {a c}}").unwrap());
}

fn is_antichain(s: &[VertexAddr]) -> bool {
    s.iter().all(|a| s.iter().all(|b| a == b || !a.is_prefix_of(b)))
}

// every subset of non-root vertices that is an antichain, plus the root cut
fn brute_cuts(t: &AbstractTree) -> BTreeSet<BTreeSet<VertexAddr>> {
    let vs: Vec<VertexAddr> = t.vertices().into_iter().filter(|v| !v.is_root()).collect();
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << vs.len()) {
        let s: Vec<VertexAddr> = (0..vs.len()).filter(|i| mask >> i & 1 == 1).map(|i| vs[i].clone()).collect();
        if is_antichain(&s) {
            out.insert(s.into_iter().collect());
        }
    }
    out.insert([VertexAddr::root()].into_iter().collect());
    out
}

#[test]
fn cuts_match_antichain_oracle() {
    for n in 1..=5 {
        for t in abstract_trees(n, &["a", "b"]) {
            let got: BTreeSet<BTreeSet<VertexAddr>> = admissible_cuts(&t).into_iter().map(|c| c.addrs).collect();
            assert_eq!(got, brute_cuts(&t), "{t}");
        }
    }
    let ab = parse_abstract("{a b}").unwrap();
    assert_eq!(admissible_cuts(&ab).len(), 5);
}

#[test]
fn quotients_keep_the_rest() {
    for n in 1..=5 {
        for t in abstract_trees(n, &["a", "b"]) {
            for c in admissible_cuts(&t) {
                let pieces: usize = c.pieces(&t).unwrap().iter().map(|p| p.leaves()).sum();
                let rest = quotient(&t, &c).unwrap().map_or(0, |q| q.leaves());
                assert_eq!(pieces + rest, t.leaves(), "{t} / {c:?}");
            }
        }
    }
}

// 2^(internal vertices whose children differ), computed from the text form
fn embeddings_oracle(t: &AbstractTree) -> u64 {
    match t.children() {
        None => 1,
        Some((a, b)) => {
            let here = if a == b { 1 } else { 2 };
            here * embeddings_oracle(a) * embeddings_oracle(b)
        }
    }
}

#[test]
fn embeddings_match_planar_projection() {
    let planar = planar_trees(5, &[None::<String>], &["a".to_string(), "b".to_string()]);
    for t in abstract_trees(5, &["a", "b"]) {
        let by_projection = planar.iter().filter(|p| forget_planar(*p) == t).count() as u64;
        assert_eq!(embedding_count(&t), by_projection, "{t}");
        assert_eq!(embedding_count(&t), embeddings_oracle(&t));
        assert_eq!(planar_embeddings(&t).len() as u64, by_projection);
    }
    let comb = parse_abstract("{x {x {x x}}}").unwrap();
    assert_eq!(embedding_count(&comb), 4);
}

fn raw_tree() -> impl Strategy<Value = RawTree> {
    let leaf = prop::sample::select(vec!["a", "b", "c"]).prop_map(|s| RawTree::Leaf(s.to_string()));
    leaf.prop_recursive(5, 32, 2, |inner| (inner.clone(), inner).prop_map(|(x, y)| RawTree::Node(vec![x, y])))
}

fn mirror(t: &RawTree) -> RawTree {
    match t {
        RawTree::Leaf(s) => RawTree::Leaf(s.clone()),
        RawTree::Node(cs) => RawTree::Node(cs.iter().rev().map(mirror).collect()),
    }
}

proptest! {
    #[test]
    fn canonicalize_is_order_blind(t in raw_tree()) {
        let a = canonicalize(&t).unwrap();
        let b = canonicalize(&mirror(&t)).unwrap();
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(parse_abstract(&a.to_string()).unwrap(), a.clone());
        prop_assert_eq!(a.vertex_count(), 2 * a.leaves() - 1);
    }

    #[test]
    fn subtrees_resolve(t in raw_tree()) {
        let a = canonicalize(&t).unwrap();
        for v in a.vertices() {
            let s = a.subtree_at(&v).unwrap();
            prop_assert!(s.leaves() <= a.leaves());
        }
        prop_assert_eq!(a.leaf_addrs().len(), a.leaves());
    }
}
