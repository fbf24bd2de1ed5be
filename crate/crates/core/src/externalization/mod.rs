//! Head functions, c-command, the LCA leaf order and planarization of
//! abstract trees.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::CheckReport;
use crate::trees::{abstract_trees, canonicalize, forget_planar, AbstractTree, RawTree, Planar, PlanarTree, Side, VertexAddr};

pub type Pair = (VertexAddr, VertexAddr);

/// Vertex relations of an abstract tree, as sets of ordered pairs.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Relations {
    /// Strict: `(v, w)` when `w` lies strictly below `v`.
    pub dominates: BTreeSet<Pair>,
    pub sisters: BTreeSet<Pair>,
    pub c_commands: BTreeSet<Pair>,
    pub asym_c_commands: BTreeSet<Pair>,
}

fn dominates(v: &VertexAddr, w: &VertexAddr) -> bool {
    v != w && v.is_prefix_of(w)
}

/// `v` c-commands `w`: distinct, neither dominates the other, and the parent
/// of `v` dominates `w`.
pub fn c_commands(v: &VertexAddr, w: &VertexAddr) -> bool {
    match v.parent() {
        None => false,
        Some(p) => v != w && !dominates(v, w) && !dominates(w, v) && dominates(&p, w),
    }
}

pub fn relations(t: &AbstractTree) -> Relations {
    let vs = t.vertices();
    let mut r = Relations::default();
    for v in &vs {
        for w in &vs {
            if dominates(v, w) {
                r.dominates.insert((v.clone(), w.clone()));
            }
            if v != w && v.parent().is_some() && v.parent() == w.parent() {
                r.sisters.insert((v.clone(), w.clone()));
            }
            if c_commands(v, w) {
                r.c_commands.insert((v.clone(), w.clone()));
                if v.parent() != w.parent() {
                    r.asym_c_commands.insert((v.clone(), w.clone()));
                }
            }
        }
    }
    r
}

/// Assignment of a head leaf to every internal vertex, stored as the address
/// of the chosen leaf.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HeadFunction {
    pub heads: BTreeMap<VertexAddr, VertexAddr>,
}

impl HeadFunction {
    /// Build from a child choice at every internal vertex.
    pub fn from_choices(t: &AbstractTree, choices: &BTreeMap<VertexAddr, Side>) -> Result<Self> {
        let mut heads = BTreeMap::new();
        for v in t.internal_addrs() {
            let mut cur = v.clone();
            loop {
                let sub = t.subtree_at(&cur)?;
                if sub.is_leaf() {
                    break;
                }
                let side = choices
                    .get(&cur)
                    .ok_or_else(|| Error::HeadFunction(format!("no choice at {cur}")))?;
                cur = cur.child(*side);
            }
            heads.insert(v, cur);
        }
        Ok(HeadFunction { heads })
    }

    /// Head of the subtree at `v`; a leaf heads itself.
    pub fn head_of(&self, v: &VertexAddr) -> VertexAddr {
        self.heads.get(v).cloned().unwrap_or_else(|| v.clone())
    }

    /// Child of internal vertex `v` containing its head.
    pub fn head_side(&self, v: &VertexAddr) -> Option<Side> {
        let h = self.heads.get(v)?;
        h.0.get(v.depth()).copied()
    }

    /// Checks the domain, range and compatibility conditions on `t`.
    pub fn validate(&self, t: &AbstractTree) -> Result<()> {
        let internal: BTreeSet<_> = t.internal_addrs().into_iter().collect();
        let keys: BTreeSet<_> = self.heads.keys().cloned().collect();
        if internal != keys {
            return Err(Error::HeadFunction(
                "must assign exactly the internal vertices".into(),
            ));
        }
        for (v, h) in &self.heads {
            if !v.is_prefix_of(h) || !t.subtree_at(h).map(|s| s.is_leaf()).unwrap_or(false) {
                return Err(Error::HeadFunction(format!("{h} is not a leaf below {v}")));
            }
            let c = v.child(h.0[v.depth()]);
            if self.head_of(&c) != *h {
                return Err(Error::HeadFunction(format!(
                    "head of {v} is {h} but head of {c} is {}",
                    self.head_of(&c)
                )));
            }
        }
        Ok(())
    }

    /// `v` is a maximal projection: the root, or its head differs from its parent's.
    pub fn is_maximal_projection(&self, v: &VertexAddr) -> bool {
        match v.parent() {
            None => true,
            Some(p) => self.head_of(&p) != self.head_of(v),
        }
    }
}

impl fmt::Display for HeadFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (v, h)) in self.heads.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}={h}")?;
        }
        Ok(())
    }
}

/// Parses `VERTEX=LEAF,...` with addresses over `0`/`1` and `.` for the root.
impl FromStr for HeadFunction {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut heads = BTreeMap::new();
        for item in s.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (v, h) = item
                .split_once('=')
                .ok_or_else(|| Error::HeadFunction(format!("expected VERTEX=LEAF, got `{item}`")))?;
            heads.insert(v.trim().parse()?, h.trim().parse()?);
        }
        Ok(HeadFunction { heads })
    }
}

/// All 2^|V°(t)| head functions, in a fixed order.
pub fn head_functions(t: &AbstractTree) -> Vec<HeadFunction> {
    let internal = t.internal_addrs();
    let n = internal.len();
    (0..1u64 << n)
        .map(|mask| {
            let choices: BTreeMap<_, _> = internal
                .iter()
                .enumerate()
                .map(|(i, v)| {
                    let side = if mask >> i & 1 == 0 { Side::First } else { Side::Second };
                    (v.clone(), side)
                })
                .collect();
            HeadFunction::from_choices(t, &choices).expect("choices cover all internal vertices")
        })
        .collect()
}

/// Head child to the left at every vertex, every vertex marked `<`.
pub fn planarize(t: &AbstractTree, h: &HeadFunction) -> Result<PlanarTree> {
    h.validate(t)?;
    fn go(t: &AbstractTree, here: &VertexAddr, h: &HeadFunction) -> PlanarTree {
        match t.children() {
            None => Planar::Leaf(t.label().unwrap().to_string()),
            Some((a, b)) => {
                let pa = go(a, &here.child(Side::First), h);
                let pb = go(b, &here.child(Side::Second), h);
                let lt = Some("<".to_string());
                match h.head_side(here) {
                    Some(Side::Second) => Planar::node(pb, pa, lt),
                    _ => Planar::node(pa, pb, lt),
                }
            }
        }
    }
    Ok(go(t, &VertexAddr::root(), h))
}

/// Head function picking, at every vertex, the child whose head has the
/// smaller label. Undefined when two sister heads carry the same label.
pub fn canonical_label_heads(t: &AbstractTree) -> Option<HeadFunction> {
    fn go(
        t: &AbstractTree,
        here: &VertexAddr,
        out: &mut BTreeMap<VertexAddr, VertexAddr>,
    ) -> Option<(VertexAddr, String)> {
        match t.children() {
            None => Some((here.clone(), t.label().unwrap().to_string())),
            Some((a, b)) => {
                let ha = go(a, &here.child(Side::First), out)?;
                let hb = go(b, &here.child(Side::Second), out)?;
                let win = match ha.1.cmp(&hb.1) {
                    std::cmp::Ordering::Less => ha,
                    std::cmp::Ordering::Greater => hb,
                    std::cmp::Ordering::Equal => return None,
                };
                out.insert(here.clone(), win.0.clone());
                Some(win)
            }
        }
    }
    let mut heads = BTreeMap::new();
    go(t, &VertexAddr::root(), &mut heads)?;
    Some(HeadFunction { heads })
}

/// Leaf precedence relation, transitively closed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafOrder {
    /// Leaf addresses in canonical left-to-right order; pairs refer to indices here.
    pub leaves: Vec<String>,
    pub labels: Vec<String>,
    /// `(i, j)` when leaf `i` precedes leaf `j` (diagonal included only for cycles).
    pub precedes: BTreeSet<(usize, usize)>,
}

impl LeafOrder {
    pub fn is_total(&self) -> bool {
        let n = self.leaves.len();
        (0..n).all(|i| (i + 1..n).all(|j| self.precedes.contains(&(i, j)) || self.precedes.contains(&(j, i))))
    }

    /// Pairs `i < j` ordered both ways.
    pub fn antisymmetry_violations(&self) -> Vec<(usize, usize)> {
        self.precedes
            .iter()
            .filter(|(i, j)| i < j && self.precedes.contains(&(*j, *i)))
            .cloned()
            .collect()
    }

    pub fn is_strict_partial_order(&self) -> bool {
        self.antisymmetry_violations().is_empty() && self.precedes.iter().all(|(i, j)| i != j)
    }
}

/// LCA-style order: ℓ ≺ ℓ′ when ℓ asymmetrically c-commands ℓ′, or, given a
/// head function, when some maximal projection dominating ℓ (possibly ℓ
/// itself) c-commands ℓ′. The relation is closed transitively.
pub fn lca_order(t: &AbstractTree, h: Option<&HeadFunction>) -> LeafOrder {
    let leaves = t.leaf_addrs();
    let idx: BTreeMap<&VertexAddr, usize> = leaves.iter().enumerate().map(|(i, a)| (a, i)).collect();
    let mut rel = BTreeSet::new();
    for (i, a) in leaves.iter().enumerate() {
        for (j, b) in leaves.iter().enumerate() {
            if c_commands(a, b) && a.parent() != b.parent() {
                rel.insert((i, j));
            }
        }
    }
    if let Some(h) = h {
        for v in t.vertices() {
            if !h.is_maximal_projection(&v) {
                continue;
            }
            for l in leaves.iter().filter(|l| v.is_prefix_of(l)) {
                for m in leaves.iter().filter(|m| c_commands(&v, m)) {
                    rel.insert((idx[l], idx[m]));
                }
            }
        }
    }
    // Warshall closure.
    let n = leaves.len();
    let mut m = vec![vec![false; n]; n];
    for &(i, j) in &rel {
        m[i][j] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if m[i][k] {
                for j in 0..n {
                    if m[k][j] {
                        m[i][j] = true;
                    }
                }
            }
        }
    }
    let precedes = (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| m[i][j])
        .collect();
    LeafOrder {
        labels: leaves
            .iter()
            .map(|a| t.subtree_at(a).unwrap().label().unwrap().to_string())
            .collect(),
        leaves: leaves.iter().map(|a| a.to_string()).collect(),
        precedes,
    }
}

/// Every shape with ≤ `max_leaves` leaves, leaves named a, b, c, … in order.
pub fn shapes_upto(max_leaves: usize) -> Vec<AbstractTree> {
    fn rename(t: &RawTree, next: &mut u8) -> RawTree {
        match t {
            RawTree::Leaf(_) => {
                *next += 1;
                RawTree::Leaf(((b'a' + *next - 1) as char).to_string())
            }
            RawTree::Node(kids) => RawTree::Node(kids.iter().map(|k| rename(k, next)).collect()),
        }
    }
    (1..=max_leaves)
        .flat_map(|n| abstract_trees(n, &["x"]))
        .map(|t| canonicalize(&rename(&t.to_raw(), &mut 0)).expect("binary"))
        .collect()
}

/// Totality of the LCA order over every shape ≤ `max_leaves` and every head
/// function. Returns the head-function report and the head-free report.
pub fn lca_totality_check(max_leaves: usize) -> (CheckReport, CheckReport) {
    let mut with_heads = CheckReport::new("lca-totality");
    let mut head_free = CheckReport::new("lca-totality-head-free");
    let mut antisym = 0;
    for t in shapes_upto(max_leaves) {
        let o = lca_order(&t, None);
        head_free.check(o.is_total(), || format!("{t}: not total without heads"));
        for h in head_functions(&t) {
            let o = lca_order(&t, Some(&h));
            if !o.antisymmetry_violations().is_empty() {
                antisym += 1;
            }
            with_heads.check(o.is_total(), || format!("{t} heads {h}: not total"));
        }
    }
    with_heads.note(format!(
        "{antisym} (tree, head function) instances have antisymmetry violations"
    ));
    (with_heads, head_free)
}

/// Every (tree, head function) order is antisymmetric.
pub fn lca_antisymmetry_check(max_leaves: usize) -> CheckReport {
    let mut r = CheckReport::new("lca-antisymmetry");
    for t in shapes_upto(max_leaves) {
        for h in head_functions(&t) {
            let o = lca_order(&t, Some(&h));
            let v = o.antisymmetry_violations();
            r.check(v.is_empty(), || {
                let (i, j) = v[0];
                format!("{t} heads {h}: {} and {} precede each other", o.labels[i], o.labels[j])
            });
        }
    }
    r
}

/// |head functions| = 2^(internal vertices).
pub fn head_function_count_check(max_leaves: usize) -> CheckReport {
    let mut r = CheckReport::new("head-function-count");
    for t in shapes_upto(max_leaves) {
        let n = head_functions(&t).len();
        let want = 1usize << t.internal_vertices();
        r.check(n == want, || format!("{t}: {n} head functions, expected {want}"));
    }
    r
}

/// The label rule is undefined somewhere at every merged size 2..=`max_leaves`,
/// for each prefix of the alphabet.
pub fn head_label_obstruction_check(alphabet: &[&str], max_leaves: usize) -> CheckReport {
    let mut r = CheckReport::new("head-label-obstruction");
    for k in 1..=alphabet.len() {
        for (size, w) in head_label_obstruction(&alphabet[..k], max_leaves) {
            r.check(w.is_some(), || format!("alphabet {:?}, size {size}: no witness", &alphabet[..k]));
        }
    }
    r
}

/// Without the maximal-projection clause the order is a strict partial order.
pub fn lca_partial_order_check(max_leaves: usize) -> CheckReport {
    let mut r = CheckReport::new("lca-partial-order");
    for t in shapes_upto(max_leaves) {
        let o = lca_order(&t, None);
        r.check(o.is_strict_partial_order(), || format!("{t}: {:?}", o.precedes));
    }
    r
}

/// Head choice on M(T, T′) from labels of the two heads: the smaller label
/// heads; `None` when the labels coincide.
pub fn canonical_merge_head(label1: &str, label2: &str) -> Option<Side> {
    match label1.cmp(label2) {
        std::cmp::Ordering::Less => Some(Side::First),
        std::cmp::Ordering::Greater => Some(Side::Second),
        std::cmp::Ordering::Equal => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HeadLabelWitness {
    pub merged_leaves: usize,
    pub t1: String,
    pub head1: String,
    pub t2: String,
    pub head2: String,
    pub label: String,
}

/// For each merged size 2..=`max_leaves`, the first pair of headed trees
/// whose heads share a label, so the label rule cannot choose a head for
/// their Merge. `None` entries mean no such pair exists at that size.
pub fn head_label_obstruction(alphabet: &[&str], max_leaves: usize) -> Vec<(usize, Option<HeadLabelWitness>)> {
    let trees: Vec<AbstractTree> = (1..max_leaves.max(2))
        .flat_map(|n| abstract_trees(n, alphabet))
        .collect();
    let mut out = Vec::new();
    for size in 2..=max_leaves {
        let mut found = None;
        'search: for t1 in &trees {
            for t2 in &trees {
                if t1.leaves() + t2.leaves() != size {
                    continue;
                }
                for a in t1.leaf_addrs() {
                    let la = t1.subtree_at(&a).unwrap().label().unwrap();
                    for b in t2.leaf_addrs() {
                        let lb = t2.subtree_at(&b).unwrap().label().unwrap();
                        if canonical_merge_head(la, lb).is_none() {
                            found = Some(HeadLabelWitness {
                                merged_leaves: size,
                                t1: t1.to_string(),
                                head1: a.to_string(),
                                t2: t2.to_string(),
                                head2: b.to_string(),
                                label: la.to_string(),
                            });
                            break 'search;
                        }
                    }
                }
            }
        }
        out.push((size, found));
    }
    out
}

/// forget ∘ planarize = id over every shape and head function.
pub fn planarize_section_check(max_leaves: usize) -> CheckReport {
    let mut r = CheckReport::new("planarize-section");
    for t in shapes_upto(max_leaves) {
        for h in head_functions(&t) {
            let ok = planarize(&t, &h).map(|p| forget_planar(&p) == t).unwrap_or(false);
            r.check(ok, || format!("{t} heads {h}"));
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_abstract;

    fn t(s: &str) -> AbstractTree {
        parse_abstract(s).unwrap()
    }

    fn a(s: &str) -> VertexAddr {
        s.parse().unwrap()
    }

    #[test]
    fn sisters_are_not_asymmetric() {
        let r = relations(&t("{a b}"));
        assert!(r.c_commands.contains(&(a("0"), a("1"))));
        assert!(r.c_commands.contains(&(a("1"), a("0"))));
        assert!(r.asym_c_commands.is_empty());
    }

    #[test]
    fn node_c_commands_across() {
        let r = relations(&t("{{a b} {c d}}"));
        assert!(r.asym_c_commands.contains(&(a("0"), a("10"))));
        assert!(r.asym_c_commands.contains(&(a("0"), a("11"))));
        assert!(r.dominates.iter().filter(|(v, _)| v.is_root()).count() == 6);
    }

    #[test]
    fn head_function_counts() {
        assert_eq!(head_functions(&t("{a b}")).len(), 2);
        assert_eq!(head_functions(&t("{c {a b}}")).len(), 4);
        for h in head_functions(&t("{{a b} {c d}}")) {
            h.validate(&t("{{a b} {c d}}")).unwrap();
        }
    }

    #[test]
    fn planarize_head_left() {
        let tree = t("{a b}");
        let h: HeadFunction = ".=1".parse().unwrap();
        assert_eq!(planarize(&tree, &h).unwrap().to_string(), "[< b a]");
        let bad: HeadFunction = ".=0,0=1".parse().unwrap();
        assert!(planarize(&tree, &bad).is_err());
    }

    #[test]
    fn lca_examples() {
        let o = lca_order(&t("{a {b c}}"), None);
        assert!(o.precedes.contains(&(0, 1)) && o.precedes.contains(&(0, 2)));
        assert!(!o.is_total());
        assert!(!lca_order(&t("{{a b} {c d}}"), None).is_total());
    }

    #[test]
    fn canonical_heads_need_distinct_labels() {
        assert!(canonical_label_heads(&t("{a a}")).is_none());
        let h = canonical_label_heads(&t("{b {a c}}")).unwrap();
        assert_eq!(h.head_of(&VertexAddr::root()), a("10"));
    }
}
