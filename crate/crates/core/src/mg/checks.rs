//! Exhaustive checkers for the minimalist-grammar structure.
//!
//! Trees are enumerated over a reduced lexicon: the head leaf carries
//! `lsr(X)` and every other leaf carries `lse(X)` or the first category of
//! the alphabet. That is enough to reach every domain configuration while
//! keeping the 6-leaf sweep small.

use std::collections::BTreeMap;

use super::features::{Feature, FeatureString};
use super::merge::{
    external_merge, im_candidates, im_n_certificates, in_dom_em, internal_merge, internal_merge_at,
    iterated_internal_merge, iterated_internal_merge_at, sequential_internal_merge, MatchingMode, SmcMode,
};
use super::structure::{
    coproduct_i_basis, coset_reduce, decompositions_i, in_domain, in_domain_n, intmergeprod, product_i_basis,
    MgSum,
};
use super::tree::{head_features, head_index, head_leaf, Arrow, MgLeaf, MgTree};
use crate::linear::LinComb;
use crate::lr::{coproduct_basis, product_graphical_basis, Presentation};
use crate::report::CheckReport;
use crate::trees::{planar_trees, Planar};

const ARROWS: [Arrow; 2] = [Arrow::Left, Arrow::Right];

/// Feature strings allowed on the head leaf and on the other leaves.
#[derive(Clone, Debug)]
pub struct Lexicon {
    pub head: Vec<FeatureString>,
    pub other: Vec<FeatureString>,
}

fn fs(fs: Vec<Feature>) -> FeatureString {
    FeatureString(fs)
}

impl Lexicon {
    /// Heads `lsr(X)`; others `lse(X)` or the neutral category `alphabet[0]`.
    pub fn internal(alphabet: &[&str]) -> Self {
        let mut other: Vec<FeatureString> = alphabet.iter().map(|x| fs(vec![Feature::lse(*x)])).collect();
        other.push(fs(vec![Feature::base(alphabet[0])]));
        Lexicon {
            head: alphabet.iter().map(|x| fs(vec![Feature::lsr(*x)])).collect(),
            other,
        }
    }

    /// As `internal`, with heads carrying one or two licensors.
    pub fn iterated(alphabet: &[&str]) -> Self {
        let mut lex = Self::internal(alphabet);
        for x in alphabet {
            for y in alphabet {
                lex.head.push(fs(vec![Feature::lsr(*x), Feature::lsr(*y)]));
            }
        }
        lex
    }

    /// Categories `X`, `X Y` and selectors `sel(X) Y` with `X ≠ Y`, on every
    /// leaf. `X Y` is what full-string matching of `sel(X) Y` needs.
    pub fn external(alphabet: &[&str]) -> Self {
        let mut all: Vec<FeatureString> = alphabet.iter().map(|x| fs(vec![Feature::base(*x)])).collect();
        for x in alphabet {
            for y in alphabet {
                if x != y {
                    all.push(fs(vec![Feature::sel(*x), Feature::base(*y)]));
                    all.push(fs(vec![Feature::base(*x), Feature::base(*y)]));
                }
            }
        }
        Lexicon {
            head: all.clone(),
            other: all,
        }
    }
}

fn leaf_name(i: usize) -> String {
    let c = (b'a' + (i % 26) as u8) as char;
    if i < 26 {
        c.to_string()
    } else {
        format!("{c}{}", i / 26)
    }
}

fn fill(shape: &Planar<Arrow, ()>, labels: &[MgLeaf]) -> MgTree {
    fn go(t: &Planar<Arrow, ()>, it: &mut std::slice::Iter<'_, MgLeaf>) -> MgTree {
        match t {
            Planar::Leaf(()) => Planar::Leaf(it.next().unwrap().clone()),
            Planar::Node(a, b, v) => {
                let a = go(a, it);
                let b = go(b, it);
                Planar::node(a, b, *v)
            }
        }
    }
    go(shape, &mut labels.iter())
}

/// All MG trees with `n` leaves over `lex`, leaves named a, b, c, … left to right.
pub fn lexicon_trees(n: usize, lex: &Lexicon) -> Vec<MgTree> {
    let mut out = Vec::new();
    for shape in planar_trees(n, &ARROWS, &[()]) {
        let h = head_index(&shape);
        let opts: Vec<&[FeatureString]> = (0..n)
            .map(|i| if i == h { lex.head.as_slice() } else { lex.other.as_slice() })
            .collect();
        let mut choice = vec![0usize; n];
        loop {
            let labels: Vec<MgLeaf> = (0..n)
                .map(|i| MgLeaf::new(leaf_name(i), opts[i][choice[i]].clone()))
                .collect();
            out.push(fill(&shape, &labels));
            let mut i = 0;
            while i < n {
                choice[i] += 1;
                if choice[i] < opts[i].len() {
                    break;
                }
                choice[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
    }
    out
}

pub fn lexicon_trees_upto(max: usize, lex: &Lexicon) -> Vec<MgTree> {
    (1..=max).flat_map(|n| lexicon_trees(n, lex)).collect()
}

/// Right factors whose leaf labels are irrelevant: every leaf becomes a piece.
pub fn filler_trees(n: usize) -> Vec<MgTree> {
    planar_trees(n, &ARROWS, &[MgLeaf::new("f", FeatureString::default())])
}

/// How a tree sits relative to Dom(I) under an SMC mode.
enum Membership {
    Inside,
    Outside,
    Ambiguous,
}

fn membership(t: &MgTree, smc: SmcMode) -> Membership {
    match (smc, im_candidates(t).len()) {
        (_, 0) => Membership::Outside,
        (SmcMode::Unique, 2..) => Membership::Ambiguous,
        _ => Membership::Inside,
    }
}

/// Pairs (T ∈ Dom(I), T') with leaves(T) + leaves(T') ≤ `max_total`,
/// T' a filler tree. Ambiguous T are reported through `skip`.
fn domain_pairs(
    alphabet: &[&str],
    max_total: usize,
    smc: SmcMode,
    r: &mut CheckReport,
    mut f: impl FnMut(&MgTree, &MgTree, &mut CheckReport),
) {
    let lex = Lexicon::internal(alphabet);
    for n in 2..max_total {
        let fillers: Vec<MgTree> = (1..=max_total - n).flat_map(filler_trees).collect();
        for t in lexicon_trees(n, &lex) {
            match membership(&t, smc) {
                Membership::Outside => {}
                Membership::Ambiguous => {
                    for _ in &fillers {
                        r.skip();
                    }
                }
                Membership::Inside => {
                    for t2 in &fillers {
                        f(&t, t2, r);
                    }
                }
            }
        }
    }
}

/// Δ_I(Dom(I)) ⊆ Dom(I) ⊗ H + H ⊗ Dom(I).
pub fn coideal_check(alphabet: &[&str], max_leaves: usize, smc: SmcMode) -> CheckReport {
    let mut r = CheckReport::new("coideal");
    let lex = Lexicon::internal(alphabet);
    for n in 2..=max_leaves {
        for t in lexicon_trees(n, &lex) {
            match membership(&t, smc) {
                Membership::Outside => continue,
                Membership::Ambiguous => {
                    r.skip();
                    continue;
                }
                Membership::Inside => {}
            }
            let d = coproduct_i_basis(&t, smc);
            let bad = d
                .keys()
                .find(|(a, b)| !in_domain(a, smc) && !in_domain(b, smc))
                .cloned();
            r.check(bad.is_none(), || {
                let (a, b) = bad.unwrap();
                format!("T={t}: {a} ⊗ {b} has neither side in Dom(I)")
            });
        }
    }
    r.note(format!("Dom(I) trees with <= {max_leaves} leaves, smc {smc:?}"));
    r
}

/// Dom(I) ⋆_I H ⊆ span(Dom(I)).
pub fn right_ideal_check(alphabet: &[&str], max_total: usize, smc: SmcMode) -> CheckReport {
    let mut r = CheckReport::new("right-ideal");
    domain_pairs(alphabet, max_total, smc, &mut r, |t, t2, r| {
        let p = product_i_basis(t, t2, smc);
        let bad = p.keys().find(|x| !in_domain(x, smc)).cloned();
        r.check(bad.is_none(), || format!("T={t} T'={t2}: term {} outside Dom(I)", bad.unwrap()));
    });
    r.note(format!("leaves(T) + leaves(T') <= {max_total}, smc {smc:?}"));
    r
}

/// Searches for T' ⋆_I T ∉ span(Dom(I)) with T ∈ Dom(I); stops at the first
/// witness. A witness is the expected outcome.
pub fn left_ideal_check(alphabet: &[&str], max_total: usize, smc: SmcMode) -> CheckReport {
    let mut r = CheckReport::new("left-ideal");
    let lex = Lexicon::internal(alphabet);
    'search: for total in 3..=max_total {
        for n in 2..total {
            let lefts = lexicon_trees(total - n, &lex);
            for t in lexicon_trees(n, &lex) {
                if !matches!(membership(&t, smc), Membership::Inside) {
                    continue;
                }
                for t1 in &lefts {
                    let p = product_i_basis(t1, &t, smc);
                    let bad = p.keys().find(|x| !in_domain(x, smc)).cloned();
                    r.check(bad.is_none(), || {
                        format!("T'={t1} T={t}: term {} of T' ⋆_I T is outside Dom(I)", bad.clone().unwrap())
                    });
                    if bad.is_some() {
                        break 'search;
                    }
                }
            }
        }
    }
    r
}

/// I(T ⋆_I T') against the per-decomposition right-hand side.
pub fn intmergeprod_check(alphabet: &[&str], max_total: usize, smc: SmcMode) -> CheckReport {
    let mut r = CheckReport::new("intmergeprod");
    domain_pairs(alphabet, max_total, smc, &mut r, |t, t2, r| {
        let res = intmergeprod(t, t2, smc);
        r.check(res.holds(), || {
            format!(
                "T={t} T'={t2}: lhs={} rhs={} errors={:?}",
                res.lhs, res.rhs, res.errors
            )
        });
    });
    r.note(format!("leaves(T) + leaves(T') <= {max_total}, smc {smc:?}"));
    r
}

/// h(T ⋆_I T') = h(T) on every term.
pub fn product_head_check(alphabet: &[&str], max_total: usize, smc: SmcMode) -> CheckReport {
    let mut r = CheckReport::new("product-head");
    domain_pairs(alphabet, max_total, smc, &mut r, |t, t2, r| {
        let ht = head_index(t);
        let bad = decompositions_i(t, t2, smc).into_iter().find_map(|d| {
            let x = d.graft(t2);
            (head_index(&x) != d.image_of(ht)).then_some(x)
        });
        r.check(bad.is_none(), || format!("T={t} T'={t2}: head of {} moved", bad.unwrap()));
    });
    r
}

/// Outside Dom(I), Δ_I is the Loday–Ronco coproduct.
pub fn coproduct_fallback_check(alphabet: &[&str], max_leaves: usize, smc: SmcMode) -> CheckReport {
    let mut r = CheckReport::new("coproduct-fallback");
    for t in lexicon_trees_upto(max_leaves, &Lexicon::internal(alphabet)) {
        if matches!(membership(&t, smc), Membership::Outside) {
            let (a, b) = (coproduct_i_basis(&t, smc), coproduct_basis(&t));
            r.check(a == b, || format!("T={t}: Δ_I={} Δ={}", a.tensor_string(), b.tensor_string()));
        }
    }
    r
}

/// Outside Dom(I), ⋆_I against the graphical product.
pub fn product_fallback_check(alphabet: &[&str], max_total: usize, smc: SmcMode) -> CheckReport {
    let mut r = CheckReport::new("product-fallback");
    let lex = Lexicon::internal(alphabet);
    for n in 1..max_total {
        for t in lexicon_trees(n, &lex) {
            if !matches!(membership(&t, smc), Membership::Outside) {
                continue;
            }
            for t2 in (1..=max_total - n).flat_map(filler_trees) {
                let (a, b) = (product_i_basis(&t, &t2, smc), product_graphical_basis(&t, &t2));
                r.check(a == b, || format!("T={t} T'={t2}: ⋆_I={a} ⋆={b}"));
            }
        }
    }
    r
}

/// reduce(a ⋆_I b) = reduce(reduce(a) ⋆_I b), and reduce is idempotent.
pub fn coset_check(alphabet: &[&str], max_total: usize, n: usize, smc: SmcMode) -> CheckReport {
    let mut r = CheckReport::new("coset");
    let lex = Lexicon::internal(alphabet);
    for k in 1..max_total {
        for t in lexicon_trees(k, &lex) {
            let a = LinComb::basis(t.clone());
            let ra = coset_reduce(&a, n, smc);
            r.check(coset_reduce(&ra, n, smc) == ra, || format!("reduce not idempotent on {t}"));
            for t2 in (1..=max_total - k).flat_map(filler_trees) {
                let b = LinComb::basis(t2.clone());
                let pi = |x: &MgSum| super::structure::product_i(x, &b, smc);
                let l = coset_reduce(&pi(&a), n, smc);
                let rr = coset_reduce(&pi(&ra), n, smc);
                r.check(l == rr, || format!("a={t} b={t2}: {l} vs {rr}"));
            }
        }
    }
    r
}

/// Dom(I^{n+1}) ⊆ Dom(I^n): every certificate for n+1 restricts to one for n.
pub fn nested_domains_check(alphabet: &[&str], max_leaves: usize, max_n: usize) -> CheckReport {
    let mut r = CheckReport::new("nested-domains");
    for t in lexicon_trees_upto(max_leaves, &Lexicon::iterated(alphabet)) {
        for n in 1..max_n {
            let lower = im_n_certificates(&t, n);
            for c in im_n_certificates(&t, n + 1) {
                let ok = lower
                    .iter()
                    .any(|l| l.leaves[..] == c.leaves[..n] && l.projections[..] == c.projections[..n]);
                r.check(ok, || format!("T={t}: certificate {:?} for n={} has no prefix", c.leaves, n + 1));
            }
            r.check(
                !in_domain_n(&t, n + 1, SmcMode::SumAll) || in_domain_n(&t, n, SmcMode::SumAll),
                || format!("T={t} in Dom(I^{}) but not Dom(I^{n})", n + 1),
            );
        }
    }
    r
}

/// I^n against n sequential single merges, and I^1 against I.
pub fn im_sequential_check(alphabet: &[&str], max_leaves: usize) -> CheckReport {
    let mut r = CheckReport::new("im-n-sequential");
    for t in lexicon_trees_upto(max_leaves, &Lexicon::iterated(alphabet)) {
        if let Ok(one) = internal_merge(&t, SmcMode::SumAll) {
            let it = iterated_internal_merge(&t, 1, SmcMode::SumAll);
            r.check(it.as_ref() == Ok(&one), || format!("T={t}: I^1={it:?} I={one}"));
        }
        for c in im_n_certificates(&t, 2) {
            let a = iterated_internal_merge_at(&t, &c);
            let b = sequential_internal_merge(&t, &c);
            let ok = matches!((&a, &b), (Ok(x), Ok(y)) if x == y && x.leaves() == t.leaves());
            r.check(ok, || format!("T={t} leaves {:?}: I^2={a:?} sequential={b:?}", c.leaves));
        }
    }
    r
}

/// Leaf conservation and head bookkeeping for single Internal Merge.
pub fn im_conservation_check(alphabet: &[&str], max_leaves: usize) -> CheckReport {
    let mut r = CheckReport::new("im-conservation");
    for t in lexicon_trees_upto(max_leaves, &Lexicon::internal(alphabet)) {
        for m in im_candidates(&t) {
            let x = internal_merge_at(&t, &m).unwrap();
            let ok = x.leaves() == t.leaves() && *head_features(&x) == head_features(&t).hat();
            r.check(ok, || format!("I({t}) = {x}"));
        }
    }
    r
}

/// E consumes one feature on each head and keeps the head of T1.
pub fn em_head_check(alphabet: &[&str], max_leaves: usize, mode: MatchingMode) -> CheckReport {
    let mut r = CheckReport::new("em-head");
    // the domain only sees head features, so pairs are decided per group
    let mut groups: BTreeMap<FeatureString, Vec<MgTree>> = BTreeMap::new();
    for t in lexicon_trees_upto(max_leaves, &Lexicon::external(alphabet)) {
        groups.entry(head_features(&t).clone()).or_default().push(t);
    }
    let sizes = |g: &[MgTree]| {
        let mut h = vec![0usize; max_leaves + 1];
        for t in g {
            h[t.leaves()] += 1;
        }
        h
    };
    for g1 in groups.values() {
        for g2 in groups.values() {
            if !in_dom_em(&g1[0], &g2[0], mode) {
                let (h1, h2) = (sizes(g1), sizes(g2));
                let mut n = 0;
                for (i, a) in h1.iter().enumerate() {
                    for (j, b) in h2.iter().enumerate() {
                        if i + j <= max_leaves + 1 {
                            n += a * b;
                        }
                    }
                }
                r.skip_many(n);
                continue;
            }
            for t1 in g1 {
                for t2 in g2 {
                    if t1.leaves() + t2.leaves() > max_leaves + 1 {
                        continue;
                    }
                    let x = external_merge(t1, t2, mode).unwrap();
                    let h = head_leaf(&x);
                    let ok = h.name == head_leaf(t1).name
                        && h.features == head_features(t1).hat()
                        && x.leaves() == t1.leaves() + t2.leaves();
                    r.check(ok, || format!("E({t1}, {t2}) = {x}"));
                }
            }
        }
    }
    r
}

fn unit() -> MgTree {
    Planar::Leaf(MgLeaf::default())
}

/// Whether `x ∧_α y` is an External Merge shape. The unit leaf is exempt.
pub fn graft_in_domain(alpha: Arrow, x: &MgTree, y: &MgTree, mode: MatchingMode) -> bool {
    if *x == unit() || *y == unit() {
        return true;
    }
    match alpha {
        Arrow::Left => x.is_leaf() && in_dom_em(x, y, mode),
        Arrow::Right => !y.is_leaf() && in_dom_em(y, x, mode),
    }
}

/// `None` means no domain restriction.
pub type GraftDomain = Option<MatchingMode>;

fn allowed(dom: GraftDomain, alpha: Arrow, x: &MgTree, y: &MgTree) -> bool {
    dom.is_none_or(|m| graft_in_domain(alpha, x, y, m))
}

/// Δ(a ∧_α b) = (a ∧_α b) ⊗ 1 + (⋆ ⊗ ∧_α)∘τ(Δa ⊗ Δb) for leaves(a ∧ b) ≤ `max_leaves`.
pub fn cocycle_check(alphabet: &[&str], max_leaves: usize, p: Presentation, dom: GraftDomain) -> CheckReport {
    let mut r = CheckReport::new(if dom.is_some() { "cocycle" } else { "cocycle-unrestricted" });
    let trees = lexicon_trees_upto(max_leaves.saturating_sub(1), &Lexicon::external(alphabet));
    for a in &trees {
        for b in &trees {
            if a.leaves() + b.leaves() > max_leaves {
                continue;
            }
            let (da, db) = (p.coproduct_basis(a), p.coproduct_basis(b));
            for alpha in ARROWS {
                let inside = allowed(dom, alpha, a, b)
                    && da
                        .keys()
                        .all(|(_, a2)| db.keys().all(|(_, b2)| allowed(dom, alpha, a2, b2)));
                if !inside {
                    r.skip();
                    continue;
                }
                let g = Planar::node(a.clone(), b.clone(), alpha);
                let lhs = p.coproduct_basis(&g);
                let mut rhs = LinComb::basis((g.clone(), unit()));
                for ((a1, a2), ca) in &da {
                    for ((b1, b2), cb) in &db {
                        let right = Planar::node(a2.clone(), b2.clone(), alpha);
                        for (x, cx) in &p.product_basis(a1, b1) {
                            rhs.add_term((x.clone(), right.clone()), cx * ca * cb);
                        }
                    }
                }
                r.check(lhs == rhs, || format!("a={a} b={b} α={}: Δ={} rhs={}", alpha.symbol(), lhs.tensor_string(), rhs.tensor_string()));
            }
        }
    }
    r.note(format!("{} presentation, leaves(a ∧ b) <= {max_leaves}", p.name()));
    r
}

/// a ⋆ b = a₁ ∧_α (a₂ ⋆ b) + (a ⋆ b₁) ∧_α b₂ for a = a₁ ∧_α a₂, b = b₁ ∧_α b₂,
/// with leaves(a ⋆ b) ≤ `max_leaves`.
pub fn veeid_check(alphabet: &[&str], max_leaves: usize, p: Presentation, dom: GraftDomain) -> CheckReport {
    let mut r = CheckReport::new(if dom.is_some() { "veeid" } else { "veeid-unrestricted" });
    // a and b are root graftings inside the domain; the unit may sit on
    // either side, and without it nothing survives the restriction
    let mut parts = lexicon_trees_upto(max_leaves.saturating_sub(2), &Lexicon::external(alphabet));
    parts.push(unit());
    let mut trees = Vec::new();
    for x in &parts {
        for y in &parts {
            if x.leaves() + y.leaves() > max_leaves - 1 || (*x == unit() && *y == unit()) {
                continue;
            }
            for alpha in ARROWS {
                if allowed(dom, alpha, x, y) {
                    trees.push(Planar::node(x.clone(), y.clone(), alpha));
                }
            }
        }
    }
    for a in &trees {
        for b in &trees {
            if a.leaves() + b.leaves() > max_leaves + 1 || a.vlabel() != b.vlabel() {
                continue;
            }
            let alpha = *a.vlabel().unwrap();
            let (a1, a2) = a.children().unwrap();
            let (b1, b2) = b.children().unwrap();
            let left = p.product_basis(a2, b);
            let right = p.product_basis(a, b1);
            let inside = left.keys().all(|x| allowed(dom, alpha, a1, x))
                && right.keys().all(|y| allowed(dom, alpha, y, b2));
            if !inside {
                r.skip();
                continue;
            }
            let lhs = p.product_basis(a, b);
            let mut rhs = LinComb::zero();
            for (x, c) in &left {
                rhs.add_term(Planar::node(a1.clone(), x.clone(), alpha), c.clone());
            }
            for (y, c) in &right {
                rhs.add_term(Planar::node(y.clone(), b2.clone(), alpha), c.clone());
            }
            r.check(lhs == rhs, || format!("a={a} b={b}: a⋆b={lhs} rhs={rhs}"));
        }
    }
    r.note(format!("{} presentation, leaves(a ⋆ b) <= {max_leaves}", p.name()));
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicon_sizes() {
        let lex = Lexicon::internal(&["A", "B"]);
        // 2 shapes x 4 arrow labelings at 3 leaves, 2 head choices, 3 per other leaf
        assert_eq!(lexicon_trees(3, &lex).len(), 2 * 4 * 2 * 9);
        assert_eq!(filler_trees(3).len(), 8);
    }

    #[test]
    fn small_structure_laws() {
        let ab = ["A", "B"];
        assert!(coideal_check(&ab, 4, SmcMode::Unique).ok());
        assert!(!left_ideal_check(&ab, 4, SmcMode::Unique).ok());
        assert!(coproduct_fallback_check(&ab, 4, SmcMode::Unique).ok());
    }
}
