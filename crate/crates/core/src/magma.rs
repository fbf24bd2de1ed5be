//! Free commutative non-associative magma, its planar counterpart, the
//! quadratic Dyson–Schwinger solver, and magma-morphism obstructions.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::externalization::{canonical_label_heads, planarize};
use crate::linear::{int, Coeff, LinComb};
use crate::report::CheckReport;
use crate::trees::{
    abstract_trees, abstract_trees_upto, embedding_count, forget_planar, planar_trees, AbstractTree, Planar,
    PlanarTree,
};

/// Symmetric Merge: set formation `{a, b}`.
pub fn merge_m(a: &AbstractTree, b: &AbstractTree) -> AbstractTree {
    AbstractTree::node(a.clone(), b.clone())
}

/// Merge with the unit admitted: `M(a, 1) = a`.
pub fn merge_m_unit(a: Option<&AbstractTree>, b: Option<&AbstractTree>) -> Option<AbstractTree> {
    match (a, b) {
        (Some(a), Some(b)) => Some(merge_m(a, b)),
        (Some(x), None) | (None, Some(x)) => Some(x.clone()),
        (None, None) => None,
    }
}

/// Non-commutative Merge: `a` to the left of `b`.
pub fn merge_nc(a: &PlanarTree, b: &PlanarTree) -> PlanarTree {
    Planar::node(a.clone(), b.clone(), None)
}

/// Result of the n-ary B+ operator: one root over the given components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BPlus {
    children: Vec<AbstractTree>,
}

impl BPlus {
    pub fn arity(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self) -> &[AbstractTree] {
        &self.children
    }

    /// The binary case is an ordinary tree.
    pub fn as_binary(&self) -> Option<AbstractTree> {
        match self.children.as_slice() {
            [a, b] => Some(merge_m(a, b)),
            _ => None,
        }
    }
}

impl fmt::Display for BPlus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.children.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

pub fn b_plus(forest: &[AbstractTree]) -> Result<BPlus> {
    if forest.is_empty() {
        return Err(Error::EmptyForest);
    }
    let mut children = forest.to_vec();
    children.sort();
    Ok(BPlus { children })
}

/// X_1..X_n of the fixed point X = x + M(X, X), graded by leaf count.
pub fn ds_solve(n: usize) -> Vec<LinComb<AbstractTree>> {
    let mut xs: Vec<LinComb<AbstractTree>> = Vec::with_capacity(n);
    for k in 1..=n {
        if k == 1 {
            xs.push(LinComb::basis(AbstractTree::leaf("x")));
            continue;
        }
        let mut xk = LinComb::zero();
        for j in 1..k {
            let term = xs[j - 1].bilinear(&xs[k - j - 1], |a, b| LinComb::basis(merge_m(a, b)));
            xk = xk + term;
        }
        xs.push(xk);
    }
    xs
}

pub fn catalan(k: u32) -> u128 {
    // C_k = binom(2k, k) / (k + 1), computed incrementally to stay exact.
    let mut c: u128 = 1;
    for i in 0..k as u128 {
        c = c * 2 * (2 * i + 1) / (i + 2);
    }
    c
}

/// dim V_k = m^k · (2k)! / (k! (k+1)!).
pub fn dim_vk(k: u32, m: u32) -> u128 {
    (m as u128).pow(k) * catalan(k)
}

/// `([[t t] t], [t [t t]])`: the two bracketings of three copies of `t`,
/// which never coincide, so no nontrivial sub-magma of the planar magma is
/// commutative.
pub fn commutative_submagma_witness(t: &PlanarTree) -> (PlanarTree, PlanarTree) {
    let tt = merge_nc(t, t);
    let left = merge_nc(&tt, t);
    let right = merge_nc(t, &tt);
    assert_ne!(left, right, "bracketings of t^3 must differ");
    (left, right)
}

/// A section of the forgetful map from planar to abstract trees.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Section {
    /// Children in canonical order.
    CanonicalLeft,
    /// Head function chosen by smallest head label, then planarized.
    HeadDriven,
}

impl Section {
    pub fn name(self) -> &'static str {
        match self {
            Section::CanonicalLeft => "canonical-left",
            Section::HeadDriven => "head-driven",
        }
    }

    pub fn parse(s: &str) -> Result<Section> {
        match s {
            "canonical-left" => Ok(Section::CanonicalLeft),
            "head-driven" => Ok(Section::HeadDriven),
            _ => Err(Error::Config(format!("unknown section `{s}`"))),
        }
    }

    /// `None` where the section is undefined.
    pub fn apply(self, t: &AbstractTree) -> Option<PlanarTree> {
        match self {
            Section::CanonicalLeft => Some(canonical_left(t)),
            Section::HeadDriven => {
                let h = canonical_label_heads(t)?;
                let p = planarize(t, &h).ok()?;
                Some(p.map(&|_| None, &|l: &String| l.clone()))
            }
        }
    }
}

pub fn canonical_left(t: &AbstractTree) -> PlanarTree {
    match t.children() {
        None => Planar::Leaf(t.label().unwrap().to_string()),
        Some((a, b)) => Planar::node(canonical_left(a), canonical_left(b), None),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SectionCounterexample {
    pub t1: String,
    pub t2: String,
    /// M^nc(Σ(T1), Σ(T2))
    pub merged_sections: String,
    /// Σ(M(T1, T2))
    pub section_of_merge: String,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SectionSearch {
    pub section: String,
    pub max_leaves: usize,
    pub alphabet: Vec<String>,
    pub pairs_checked: usize,
    pub violations: usize,
    pub counterexample: Option<SectionCounterexample>,
    /// Trees on which the section is undefined.
    pub domain_failures: Vec<String>,
    /// Trees where forget ∘ section is not the identity.
    pub invalid: Vec<String>,
}

/// Search pairs (T1, T2) with leaves(T1) + leaves(T2) ≤ `max_leaves` for a
/// violation of M^nc(Σ T1, Σ T2) = Σ(M(T1, T2)). Vertex decorations are
/// ignored in the comparison.
pub fn section_homomorphism_counterexample(section: Section, max_leaves: usize, alphabet: &[&str]) -> SectionSearch {
    let trees = abstract_trees_upto(max_leaves.saturating_sub(1).max(1), alphabet);
    let mut out = SectionSearch {
        section: section.name().to_string(),
        max_leaves,
        alphabet: alphabet.iter().map(|s| s.to_string()).collect(),
        pairs_checked: 0,
        violations: 0,
        counterexample: None,
        domain_failures: Vec::new(),
        invalid: Vec::new(),
    };
    for t in abstract_trees_upto(max_leaves, alphabet) {
        match section.apply(&t) {
            None => out.domain_failures.push(t.to_string()),
            Some(p) if forget_planar(&p) != t => out.invalid.push(t.to_string()),
            Some(_) => {}
        }
    }
    for size in 2..=max_leaves {
        for t1 in &trees {
            for t2 in &trees {
                if t1.leaves() + t2.leaves() != size {
                    continue;
                }
                let (Some(s1), Some(s2), Some(sm)) =
                    (section.apply(t1), section.apply(t2), section.apply(&merge_m(t1, t2)))
                else {
                    continue;
                };
                out.pairs_checked += 1;
                let lhs = merge_nc(&s1, &s2).bare();
                if lhs != sm.bare() {
                    out.violations += 1;
                    if out.counterexample.is_none() {
                        out.counterexample = Some(SectionCounterexample {
                            t1: t1.to_string(),
                            t2: t2.to_string(),
                            merged_sections: merge_nc(&s1, &s2).to_string(),
                            section_of_merge: sm.to_string(),
                        });
                    }
                }
            }
        }
    }
    out
}

/// Planar trees with k internal vertices and m vertex labels, counted by
/// enumeration, against m^k C_k for k ≤ `max_k`, m ∈ {1, 2}.
pub fn enum_dims_check(max_k: u32) -> CheckReport {
    let mut r = CheckReport::new("enum-dims");
    let labels = ["d0".to_string(), "d1".to_string()];
    for m in 1..=2u32 {
        for k in 0..=max_k {
            let n = planar_trees(k as usize + 1, &labels[..m as usize], &[()]).len() as u128;
            let want = dim_vk(k, m);
            r.check(n == want, || format!("k={k} |D_V|={m}: enumerated {n}, formula {want}"));
        }
    }
    r
}

/// Coefficients of X_n are planar-embedding counts; they sum to C_{n-1} and
/// every n-leaf shape occurs.
pub fn ds_embedding_check(max_n: usize) -> CheckReport {
    let mut r = CheckReport::new("ds-embeddings");
    for (i, xn) in ds_solve(max_n).iter().enumerate() {
        let n = i + 1;
        for (t, c) in xn {
            let e = embedding_count(t);
            r.check(*c == Coeff::from_integer(e.into()), || format!("X_{n}: {c} {t}, embeddings {e}"));
        }
        let total = xn.total();
        let shapes = abstract_trees(n, &["x"]).len();
        r.check(
            total == Coeff::from_integer(catalan(n as u32 - 1).into()) && xn.len() == shapes,
            || format!("X_{n}: coefficient sum {total}, {} shapes of {shapes}", xn.len()),
        );
    }
    r
}

/// X_1..X_4 as displayed in the literature, including the comb coefficient 2
/// in X_4.
pub const DS_DISPLAY: [&str; 4] = ["x", "{x x}", "2 {x {x x}}", "2 {x {x {x x}}} + {{x x} {x x}}"];

fn parse_display(s: &str) -> LinComb<AbstractTree> {
    s.split(" + ")
        .map(|term| {
            let (c, t) = match term.split_once(' ') {
                Some((c, t)) if c.chars().all(|ch| ch.is_ascii_digit()) => (c.parse::<i64>().unwrap(), t),
                _ => (1, term),
            };
            (crate::parse::parse_abstract(t).expect("display parses"), int(c))
        })
        .collect()
}

pub fn ds_display_check() -> CheckReport {
    let mut r = CheckReport::new("ds-display");
    for (i, xn) in ds_solve(DS_DISPLAY.len()).iter().enumerate() {
        let shown = parse_display(DS_DISPLAY[i]);
        r.check(*xn == shown, || format!("X_{}: displayed {shown}, computed {xn}", i + 1));
    }
    r
}

/// forget(M^nc(a, b)) = M(forget a, forget b) for leaves(a) + leaves(b) ≤ `max_leaves`.
pub fn morphism_check(max_leaves: usize, alphabet: &[&str]) -> CheckReport {
    let mut r = CheckReport::new("magma-morphism");
    let labels: Vec<String> = alphabet.iter().map(|s| s.to_string()).collect();
    let trees: Vec<PlanarTree> = (1..max_leaves)
        .flat_map(|n| planar_trees(n, &[None], &labels))
        .collect();
    for a in &trees {
        for b in &trees {
            if a.leaves() + b.leaves() > max_leaves {
                continue;
            }
            let l = forget_planar(&merge_nc(a, b));
            let rr = merge_m(&forget_planar(a), &forget_planar(b));
            r.check(l == rr, || format!("a={a} b={b}"));
        }
    }
    r
}

/// The section is valid and is not a magma morphism: a counterexample or an
/// undefined point turns up among pairs with ≤ `max_leaves` leaves.
pub fn section_obstruction_check(section: Section, max_leaves: usize, alphabet: &[&str]) -> CheckReport {
    let mut r = CheckReport::new(format!("section-{}", section.name()));
    let s = section_homomorphism_counterexample(section, max_leaves, alphabet);
    r.check(s.invalid.is_empty(), || format!("forget ∘ section ≠ id on {:?}", s.invalid));
    let found = s.counterexample.is_some() || !s.domain_failures.is_empty();
    r.check(found, || format!("no obstruction among {} pairs", s.pairs_checked));
    if let Some(c) = &s.counterexample {
        r.note(format!(
            "counterexample T1={} T2={}: merged sections {} vs section of merge {}",
            c.t1, c.t2, c.merged_sections, c.section_of_merge
        ));
    }
    if let Some(t) = s.domain_failures.first() {
        r.note(format!("undefined on {} trees, first {t}", s.domain_failures.len()));
    }
    r
}
