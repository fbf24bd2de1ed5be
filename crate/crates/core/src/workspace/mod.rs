//! Workspaces (forests of syntactic objects), the accessible-term coproduct,
//! the Merge action in operational and algebraic form, ε-degrees and
//! Minimal Search.

use std::fmt;

use serde::Serialize;

use crate::linear::LinComb;
use crate::magma::merge_m;
use crate::report::CheckReport;
use crate::trees::{abstract_trees_upto, admissible_cuts, quotient, AbstractTree, CutForest, VertexAddr};

/// A multiset of abstract trees; components are kept sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Workspace {
    components: Vec<AbstractTree>,
}

impl Workspace {
    pub fn new(mut components: Vec<AbstractTree>) -> Self {
        components.sort();
        Workspace { components }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn components(&self) -> &[AbstractTree] {
        &self.components
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn leaves(&self) -> usize {
        self.components.iter().map(|t| t.leaves()).sum()
    }

    /// Disjoint union ⊔.
    pub fn union(&self, other: &Workspace) -> Workspace {
        let mut c = self.components.clone();
        c.extend(other.components.iter().cloned());
        Workspace::new(c)
    }
}

impl FromIterator<AbstractTree> for Workspace {
    fn from_iter<I: IntoIterator<Item = AbstractTree>>(iter: I) -> Self {
        Workspace::new(iter.into_iter().collect())
    }
}

impl fmt::Display for Workspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "1");
        }
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// A vertex of a workspace component, i.e. an accessible term.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AccessibleTerm {
    pub component: usize,
    pub addr: VertexAddr,
    pub depth: usize,
}

/// Every vertex of every component, roots included, in component then preorder order.
pub fn accessible_terms(f: &Workspace) -> Vec<AccessibleTerm> {
    f.components
        .iter()
        .enumerate()
        .flat_map(|(i, t)| {
            t.vertices().into_iter().map(move |a| AccessibleTerm {
                component: i,
                depth: a.depth(),
                addr: a,
            })
        })
        .collect()
}

pub type WsTensor = LinComb<(Workspace, Workspace)>;

/// Coproduct of one tree: Σ over admissible cuts of (extracted forest) ⊗ (quotient).
pub fn tree_coproduct(t: &AbstractTree) -> WsTensor {
    admissible_cuts(t)
        .into_iter()
        .map(|c| {
            let pieces: Workspace = c.pieces(t).unwrap().into_iter().cloned().collect();
            let q: Workspace = quotient(t, &c).unwrap().into_iter().collect();
            (pieces, q)
        })
        .collect()
}

/// Coproduct of a workspace, extended multiplicatively over components.
pub fn ws_coproduct(f: &Workspace) -> WsTensor {
    let mut acc: WsTensor = LinComb::basis((Workspace::empty(), Workspace::empty()));
    for t in &f.components {
        acc = tensor_union(&acc, &tree_coproduct(t));
    }
    acc
}

/// Componentwise ⊔ on tensors.
pub fn tensor_union(x: &WsTensor, y: &WsTensor) -> WsTensor {
    x.bilinear(y, |(a, b), (c, d)| LinComb::basis((a.union(c), b.union(d))))
}

/// Single-subtree part Δ_(2): Σ over accessible terms T_v ⊗ F/T_v.
pub fn ws_coproduct_single(f: &Workspace) -> WsTensor {
    accessible_terms(f)
        .into_iter()
        .map(|a| {
            let t = &f.components[a.component];
            let cut: CutForest = [a.addr.clone()].into_iter().collect();
            let piece = t.subtree_at(&a.addr).unwrap().clone();
            let rest = f
                .components
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != a.component)
                .map(|(_, c)| c.clone())
                .chain(quotient(t, &cut).unwrap());
            (Workspace::new(vec![piece]), rest.collect())
        })
        .collect()
}

/// Extraction degree bookkeeping for Δ: ε^{d} on the extracted side and
/// η^{d} = ε^{-d} on the quotient, d the summed depth of the cut.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct GradedCut {
    pub component: usize,
    pub cut: String,
    pub extracted: String,
    pub quotient: String,
    pub extracted_degree: i64,
    pub quotient_degree: i64,
}

pub fn graded_coproduct(f: &Workspace) -> Vec<GradedCut> {
    let mut out = Vec::new();
    for (i, t) in f.components.iter().enumerate() {
        for c in admissible_cuts(t) {
            let d: i64 = c.addrs.iter().map(|a| a.depth() as i64).sum();
            let pieces: Workspace = c.pieces(t).unwrap().into_iter().cloned().collect();
            let q: Workspace = quotient(t, &c).unwrap().into_iter().collect();
            out.push(GradedCut {
                component: i,
                cut: c.to_string(),
                extracted: pieces.to_string(),
                quotient: q.to_string(),
                extracted_degree: d,
                quotient_degree: -d,
            });
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MergeType {
    External,
    Internal,
    Sideward,
    Countercyclic,
}

/// One term of the Merge action with per-component ε-degrees.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MergeTerm {
    /// Components with their degrees, sorted.
    pub components: Vec<(String, i64)>,
    pub mtype: MergeType,
    #[serde(skip)]
    pub result: Workspace,
}

impl MergeTerm {
    fn new(parts: Vec<(AbstractTree, i64)>, mtype: MergeType) -> Self {
        let result: Workspace = parts.iter().map(|(t, _)| t.clone()).collect();
        let mut components: Vec<(String, i64)> = parts.into_iter().map(|(t, d)| (t.to_string(), d)).collect();
        components.sort();
        MergeTerm {
            components,
            mtype,
            result,
        }
    }

    pub fn degrees(&self) -> Vec<i64> {
        self.components.iter().map(|(_, d)| *d).collect()
    }

    pub fn all_degrees_zero(&self) -> bool {
        self.components.iter().all(|(_, d)| *d == 0)
    }
}

/// Outcome of Merge on a workspace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MergeOutcome {
    pub terms: Vec<MergeTerm>,
    /// Occurrence pairs of the form (proper subtree, proper subtree below it),
    /// which are not treated as a Merge case.
    pub unsupported_nesting: usize,
    /// No supported occurrence pair: the workspace is returned unchanged.
    pub identity: bool,
    #[serde(skip)]
    pub input: Workspace,
}

impl MergeOutcome {
    pub fn sum(&self) -> LinComb<Workspace> {
        if self.identity {
            return LinComb::basis(self.input.clone());
        }
        self.terms.iter().map(|t| t.result.clone()).collect()
    }
}

fn rest_of(f: &Workspace, skip: &[usize]) -> Vec<(AbstractTree, i64)> {
    f.components
        .iter()
        .enumerate()
        .filter(|(i, _)| !skip.contains(i))
        .map(|(_, t)| (t.clone(), 0))
        .collect()
}

/// Merge of accessible terms matching `s` and `s2` in `f`, summed over all
/// ordered pairs of distinct matching occurrences.
pub fn merge_graded(s: &AbstractTree, s2: &AbstractTree, f: &Workspace) -> MergeOutcome {
    let acc = accessible_terms(f);
    let sub = |a: &AccessibleTerm| f.components[a.component].subtree_at(&a.addr).unwrap();
    let mut terms = Vec::new();
    let mut nesting = 0;
    for p in acc.iter().filter(|a| sub(a) == s) {
        for q in acc.iter().filter(|a| sub(a) == s2) {
            if p == q {
                continue;
            }
            let (tp, tq) = (sub(p).clone(), sub(q).clone());
            let (dp, dq) = (p.depth as i64, q.depth as i64);
            if p.component != q.component {
                // (i) distinct components
                let mut parts = rest_of(f, &[p.component, q.component]);
                parts.push((merge_m(&tp, &tq), (dp + dq).abs()));
                for (a, d) in [(p, dp), (q, dq)] {
                    let cut: CutForest = [a.addr.clone()].into_iter().collect();
                    if let Some(r) = quotient(&f.components[a.component], &cut).unwrap() {
                        parts.push((r, -d));
                    }
                }
                let mtype = if dp == 0 && dq == 0 {
                    MergeType::External
                } else {
                    MergeType::Sideward
                };
                terms.push(MergeTerm::new(parts, mtype));
                continue;
            }
            let t = &f.components[p.component];
            if p.addr.is_root() || q.addr.is_root() {
                // (ii) the whole component and a term below it
                let inner = if p.addr.is_root() { q } else { p };
                let cut: CutForest = [inner.addr.clone()].into_iter().collect();
                let rest = quotient(t, &cut).unwrap().expect("proper subtree");
                let mut parts = rest_of(f, &[p.component]);
                parts.push((merge_m(sub(inner), &rest), 0));
                terms.push(MergeTerm::new(parts, MergeType::Internal));
            } else if p.addr.is_prefix_of(&q.addr) || q.addr.is_prefix_of(&p.addr) {
                nesting += 1;
            } else {
                // (iii) two disjoint proper subtrees of one component
                let cut: CutForest = [p.addr.clone(), q.addr.clone()].into_iter().collect();
                let mut parts = rest_of(f, &[p.component]);
                parts.push((merge_m(&tp, &tq), dp + dq));
                if let Some(r) = quotient(t, &cut).unwrap() {
                    parts.push((r, -(dp + dq)));
                }
                terms.push(MergeTerm::new(parts, MergeType::Countercyclic));
            }
        }
    }
    terms.sort();
    MergeOutcome {
        identity: terms.is_empty(),
        terms,
        unsupported_nesting: nesting,
        input: f.clone(),
    }
}

/// Operational Merge action as a formal sum of workspaces.
pub fn merge_action(s: &AbstractTree, s2: &AbstractTree, f: &Workspace) -> LinComb<Workspace> {
    merge_graded(s, s2, f).sum()
}

/// Merge through the coproduct: list extraction/quotient pairs with Δ,
/// keep those whose extracted part supplies exactly `s` and `s2`, graft the
/// pair with B and reassemble with ⊔. When the extracted part is a single
/// proper subtree matching one argument and its whole source component
/// matches the other, the quotient of that component is the second Merge
/// argument.
pub fn merge_action_algebraic(s: &AbstractTree, s2: &AbstractTree, f: &Workspace) -> LinComb<Workspace> {
    // Δ(F) with provenance: one cut per component.
    let per_comp: Vec<Vec<CutForest>> = f.components.iter().map(admissible_cuts).collect();
    let mut out = LinComb::zero();
    let mut choice = vec![0usize; f.components.len()];
    loop {
        let cuts: Vec<&CutForest> = choice.iter().enumerate().map(|(i, &k)| &per_comp[i][k]).collect();
        out = out + delta_select(s, s2, f, &cuts);
        // next tuple
        let mut i = 0;
        loop {
            if i == choice.len() {
                return if out.is_zero() {
                    LinComb::basis(f.clone())
                } else {
                    out
                };
            }
            choice[i] += 1;
            if choice[i] < per_comp[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

// δ_{S,S'} followed by B and ⊔ on one term of Δ(F).
fn delta_select(s: &AbstractTree, s2: &AbstractTree, f: &Workspace, cuts: &[&CutForest]) -> LinComb<Workspace> {
    let mut pieces: Vec<(usize, &AbstractTree, bool)> = Vec::new();
    for (i, c) in cuts.iter().enumerate() {
        for p in c.pieces(&f.components[i]).unwrap() {
            pieces.push((i, p, c.contains_root()));
        }
    }
    let quotients: Vec<Option<AbstractTree>> = cuts
        .iter()
        .enumerate()
        .map(|(i, c)| quotient(&f.components[i], c).unwrap())
        .collect();
    let mut out = LinComb::zero();
    match pieces.as_slice() {
        [(_, x, _), (_, y, _)] => {
            let rest: Vec<AbstractTree> = quotients.iter().flatten().cloned().collect();
            for (a, b) in [(x, y), (y, x)] {
                if *a == s && *b == s2 {
                    let mut comps = rest.clone();
                    comps.push(merge_m(a, b));
                    out.add_basis(Workspace::new(comps));
                }
            }
        }
        [(i, x, false)] => {
            let src = &f.components[*i];
            let q = quotients[*i].clone().expect("proper cut leaves a quotient");
            let matches = (*x == s && src == s2) as i64 + (*x == s2 && src == s) as i64;
            if matches > 0 {
                let mut comps: Vec<AbstractTree> = quotients
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| j != i)
                    .filter_map(|(_, t)| t.clone())
                    .collect();
                comps.push(merge_m(x, &q));
                out.add_term(Workspace::new(comps), crate::linear::int(matches));
            }
        }
        _ => {}
    }
    out
}

/// Keep the terms with every component degree zero (the ε → 0 limit).
pub fn minimal_search_filter(terms: &[MergeTerm]) -> Vec<MergeTerm> {
    terms.iter().filter(|t| t.all_degrees_zero()).cloned().collect()
}

/// All workspaces with 1..=`max_components` components of ≤ `max_leaves`
/// leaves over `alphabet`.
pub fn workspaces_upto(max_components: usize, max_leaves: usize, alphabet: &[&str]) -> Vec<Workspace> {
    let trees = abstract_trees_upto(max_leaves, alphabet);
    let mut out = Vec::new();
    fn go(trees: &[AbstractTree], start: usize, left: usize, cur: &mut Vec<AbstractTree>, out: &mut Vec<Workspace>) {
        if !cur.is_empty() {
            out.push(Workspace::new(cur.clone()));
        }
        if left == 0 {
            return;
        }
        for i in start..trees.len() {
            cur.push(trees[i].clone());
            go(trees, i, left - 1, cur, out);
            cur.pop();
        }
    }
    go(&trees, 0, max_components, &mut Vec::new(), &mut out);
    out.sort();
    out
}

fn accessible_shapes(f: &Workspace) -> Vec<AbstractTree> {
    let mut v: Vec<AbstractTree> = accessible_terms(f)
        .iter()
        .map(|a| f.components[a.component].subtree_at(&a.addr).unwrap().clone())
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Operational and algebraic Merge agree for every S, S′ among the accessible terms.
pub fn equivalence_check(max_components: usize, max_leaves: usize, alphabet: &[&str]) -> CheckReport {
    let mut r = CheckReport::new("ws-equivalence");
    for f in workspaces_upto(max_components, max_leaves, alphabet) {
        let shapes = accessible_shapes(&f);
        for s in &shapes {
            for s2 in &shapes {
                let a = merge_action(s, s2, &f);
                let b = merge_action_algebraic(s, s2, &f);
                r.check(a == b, || format!("F={f} S={s} S'={s2}: operational={a} algebraic={b}"));
            }
        }
    }
    r.note(format!(
        "workspaces of <= {max_components} components with <= {max_leaves} leaves over {}",
        alphabet.join(",")
    ));
    r
}

/// Minimal Search keeps exactly the External and Internal terms, and every
/// Sideward or Countercyclic term has a nonzero component degree.
pub fn minimal_search_check(max_components: usize, max_leaves: usize, alphabet: &[&str]) -> CheckReport {
    let mut r = CheckReport::new("minimal-search");
    for f in workspaces_upto(max_components, max_leaves, alphabet) {
        let shapes = accessible_shapes(&f);
        for s in &shapes {
            for s2 in &shapes {
                let out = merge_graded(s, s2, &f);
                let kept = minimal_search_filter(&out.terms);
                let expect: Vec<MergeTerm> = out
                    .terms
                    .iter()
                    .filter(|t| matches!(t.mtype, MergeType::External | MergeType::Internal))
                    .cloned()
                    .collect();
                let others_nonzero = out
                    .terms
                    .iter()
                    .filter(|t| matches!(t.mtype, MergeType::Sideward | MergeType::Countercyclic))
                    .all(|t| !t.all_degrees_zero());
                r.check(kept == expect && others_nonzero, || {
                    format!("F={f} S={s} S'={s2}: kept {kept:?}")
                });
            }
        }
    }
    r
}

/// Leaf conservation of every Merge term.
pub fn conservation_check(max_components: usize, max_leaves: usize, alphabet: &[&str]) -> CheckReport {
    let mut r = CheckReport::new("ws-conservation");
    for f in workspaces_upto(max_components, max_leaves, alphabet) {
        let shapes = accessible_shapes(&f);
        for s in &shapes {
            for s2 in &shapes {
                let out = merge_graded(s, s2, &f);
                let bad = out
                    .terms
                    .iter()
                    .map(|t| &t.result)
                    .find(|w| w.leaves() != f.leaves());
                r.check(bad.is_none(), || format!("F={f} S={s} S'={s2}: {}", bad.unwrap()));
            }
        }
    }
    r
}

type Triple = (Workspace, Workspace, Workspace);

/// (Δ ⊗ id)Δ = (id ⊗ Δ)Δ on single trees.
pub fn coassociativity_check(max_leaves: usize, alphabet: &[&str]) -> CheckReport {
    let mut r = CheckReport::new("ws-coassoc");
    for t in abstract_trees_upto(max_leaves, alphabet) {
        let d = tree_coproduct(&t);
        let left: LinComb<Triple> = d.flat_map(|(a, b)| {
            ws_coproduct(a).flat_map(|(x, y)| LinComb::basis((x.clone(), y.clone(), b.clone())))
        });
        let right: LinComb<Triple> = d.flat_map(|(a, b)| {
            ws_coproduct(b).flat_map(|(x, y)| LinComb::basis((a.clone(), x.clone(), y.clone())))
        });
        r.check(left == right, || format!("T={t}"));
    }
    r
}

/// Δ(F ⊔ F′) = Δ(F) Δ(F′), ⊔ commutative with unit 1, and leaf grading
/// respected by Δ.
pub fn bialgebra_check(max_components: usize, max_leaves: usize, alphabet: &[&str]) -> CheckReport {
    let mut r = CheckReport::new("ws-multiplicative");
    let ws = workspaces_upto(max_components, max_leaves, alphabet);
    for f in &ws {
        for g in &ws {
            let l = ws_coproduct(&f.union(g));
            let rr = tensor_union(&ws_coproduct(f), &ws_coproduct(g));
            let comm = f.union(g) == g.union(f);
            r.check(l == rr && comm, || format!("F={f} F'={g}"));
        }
        let unit = f.union(&Workspace::empty()) == *f;
        let graded = ws_coproduct(f)
            .keys()
            .all(|(a, b)| a.leaves() + b.leaves() <= f.leaves() && a.leaves() <= f.leaves());
        r.check(unit && graded, || format!("F={f}: unit or grading"));
    }
    r
}
