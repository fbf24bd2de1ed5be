use serde::{Deserialize, Serialize};

use super::features::{FeatureKind, FeatureString};
use super::tree::{consume_head, head, head_features, leaf_projections, maximal_projection, with_features, Arrow, MgTree};
use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::trees::{Planar, VertexAddr};

/// How External Merge matches the selector against the selectee.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatchingMode {
    /// `sel(X) …` against a head starting with `X`.
    #[default]
    First,
    /// `sel(X0) X1 … Xr` against a head that is exactly `X0 X1 … Xr`.
    Full,
}

/// How many licensee candidates Internal Merge tolerates.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SmcMode {
    /// Exactly one candidate; more is an ambiguity error.
    #[default]
    Unique,
    /// Formal sum over all candidates.
    SumAll,
}

impl MatchingMode {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "first" => Ok(MatchingMode::First),
            "full" => Ok(MatchingMode::Full),
            _ => Err(Error::Config(format!("matching mode must be first or full, got `{s}`"))),
        }
    }
}

impl SmcMode {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "unique" => Ok(SmcMode::Unique),
            "sum-all" => Ok(SmcMode::SumAll),
            _ => Err(Error::Config(format!("smc mode must be unique or sum-all, got `{s}`"))),
        }
    }
}

fn em_mismatch(t1: &MgTree, t2: &MgTree, mode: MatchingMode) -> Option<String> {
    let a = head_features(t1);
    let b = head_features(t2);
    let Some(x) = a.starts_with(FeatureKind::Selector) else {
        return Some(format!("selector head `{a}` does not start with sel(X)"));
    };
    match mode {
        MatchingMode::First => match b.starts_with(FeatureKind::Base) {
            Some(y) if y == x => None,
            _ => Some(format!("`{a}` selects {x} but the other head is `{b}`")),
        },
        MatchingMode::Full => {
            let mut want = vec![crate::mg::Feature::base(x)];
            want.extend(a.0.iter().skip(1).cloned());
            // t2's string must be a prefix of X followed by the rest of t1's
            if !b.0.is_empty() && want.starts_with(&b.0) {
                None
            } else {
                Some(format!("full matching needs a prefix of `{}` against `{a}`, found `{b}`", FeatureString(want)))
            }
        }
    }
}

/// Domain of External Merge.
pub fn in_dom_em(t1: &MgTree, t2: &MgTree, mode: MatchingMode) -> bool {
    em_mismatch(t1, t2, mode).is_none()
}

/// `E(T1, T2)`: a lone lexical item takes its complement on the right
/// (`T1̂ ∧_< T2̂`), a larger tree takes it on the left (`T2̂ ∧_> T1̂`).
pub fn external_merge(t1: &MgTree, t2: &MgTree, mode: MatchingMode) -> Result<MgTree> {
    if let Some(why) = em_mismatch(t1, t2, mode) {
        return Err(Error::Domain(why));
    }
    let a = consume_head(t1);
    let b = consume_head(t2);
    Ok(if t1.is_leaf() {
        Planar::node(a, b, Arrow::Left)
    } else {
        Planar::node(b, a, Arrow::Right)
    })
}

/// A licensee leaf matched against the head's licensor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ImMatch {
    /// Root of the maximal projection T1^M that moves.
    pub projection: VertexAddr,
    /// The licensee leaf heading it.
    pub leaf: VertexAddr,
    pub base: String,
}

/// All Internal Merge candidates: leaves whose first feature is `lse(X)`
/// where the head starts with `lsr(X)`, with their maximal projections.
pub fn im_candidates(t: &MgTree) -> Vec<ImMatch> {
    let Some(x) = head_features(t).starts_with(FeatureKind::Licensor) else {
        return Vec::new();
    };
    leaf_projections(t)
        .into_iter()
        .filter(|(leaf, p)| {
            !p.is_root() && {
                let l = t.subtree_at(leaf).unwrap().leaf_label().unwrap();
                l.features.starts_with(FeatureKind::Licensee) == Some(x)
            }
        })
        .map(|(leaf, projection)| ImMatch {
            projection,
            leaf,
            base: x.to_string(),
        })
        .collect()
}

/// Domain of Internal Merge under the given SMC mode. Empty means outside
/// the domain; `unique` mode with several candidates is an error.
pub fn in_dom_im(t: &MgTree, smc: SmcMode) -> Result<Vec<ImMatch>> {
    let c = im_candidates(t);
    if smc == SmcMode::Unique && c.len() > 1 {
        return Err(Error::Ambiguous(c.len()));
    }
    Ok(c)
}

/// `I(T)` for one chosen candidate: `T1^M[β̂] ∧_> ρ(T)[α̂]`.
pub fn internal_merge_at(t: &MgTree, m: &ImMatch) -> Result<MgTree> {
    let leaf = t.subtree_at(&m.leaf)?.leaf_label().unwrap().clone();
    let marked = with_features(t, &m.leaf, leaf.features.hat())?;
    let h = head(t);
    let marked = with_features(&marked, &h, head_features(t).hat())?;
    let pi = marked.subtree_at(&m.projection)?.clone();
    let rho = marked
        .remove_subtrees(std::slice::from_ref(&m.projection))?
        .ok_or_else(|| Error::Domain("the moving phrase is the whole tree".into()))?;
    Ok(Planar::node(pi, rho, Arrow::Right))
}

/// Internal Merge summed over the candidates allowed by `smc`.
pub fn internal_merge(t: &MgTree, smc: SmcMode) -> Result<LinComb<MgTree>> {
    let c = in_dom_im(t, smc)?;
    if c.is_empty() {
        return Err(Error::Domain(format!(
            "head `{}` has no licensor matched by a licensee",
            head_features(t)
        )));
    }
    c.iter().map(|m| internal_merge_at(t, m)).collect::<Result<_>>()
}

/// Certificate for the N-fold Internal Merge domain.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ImNCertificate {
    /// Licensee leaves, the i-th matching the i-th licensor of the head.
    pub leaves: Vec<VertexAddr>,
    pub projections: Vec<VertexAddr>,
    pub bases: Vec<String>,
}

/// Every certificate for Dom(I^n): the head starts with `lsr(X0) … lsr(X_{n-1})`
/// and distinct leaves start with `lse(X0)`, …, `lse(X_{n-1})` with pairwise
/// disjoint maximal projections.
pub fn im_n_certificates(t: &MgTree, n: usize) -> Vec<ImNCertificate> {
    let hf = head_features(t);
    if n == 0 || hf.len() < n {
        return Vec::new();
    }
    let mut bases = Vec::with_capacity(n);
    for f in &hf.0[..n] {
        if f.kind != FeatureKind::Licensor {
            return Vec::new();
        }
        bases.push(f.base.clone());
    }
    let leaves: Vec<(VertexAddr, VertexAddr)> = leaf_projections(t)
        .into_iter()
        .filter(|(_, p)| !p.is_root())
        .collect();
    let mut out = Vec::new();
    let mut cur: Vec<(VertexAddr, VertexAddr)> = Vec::new();
    fn go(
        t: &MgTree,
        bases: &[String],
        leaves: &[(VertexAddr, VertexAddr)],
        cur: &mut Vec<(VertexAddr, VertexAddr)>,
        out: &mut Vec<ImNCertificate>,
    ) {
        let i = cur.len();
        if i == bases.len() {
            out.push(ImNCertificate {
                leaves: cur.iter().map(|(l, _)| l.clone()).collect(),
                projections: cur.iter().map(|(_, p)| p.clone()).collect(),
                bases: bases.to_vec(),
            });
            return;
        }
        for (a, p) in leaves {
            if cur.iter().any(|(l, _)| l == a) {
                continue;
            }
            let leaf = t.subtree_at(a).unwrap().leaf_label().unwrap();
            if leaf.features.starts_with(FeatureKind::Licensee) != Some(bases[i].as_str()) {
                continue;
            }
            if cur
                .iter()
                .any(|(_, q)| q.is_prefix_of(p) || p.is_prefix_of(q))
            {
                continue;
            }
            cur.push((a.clone(), p.clone()));
            go(t, bases, leaves, cur, out);
            cur.pop();
        }
    }
    go(t, &bases, &leaves, &mut cur, &mut out);
    out
}

pub fn dom_im_n(t: &MgTree, n: usize) -> Option<ImNCertificate> {
    im_n_certificates(t, n).into_iter().next()
}

/// `I^N` for one certificate: the moved phrases stacked with ∧_> in order,
/// the last one outermost, over the remainder whose head lost N features.
pub fn iterated_internal_merge_at(t: &MgTree, c: &ImNCertificate) -> Result<MgTree> {
    let n = c.leaves.len();
    let mut marked = t.clone();
    for l in &c.leaves {
        let f = marked.subtree_at(l)?.leaf_label().unwrap().features.hat();
        marked = with_features(&marked, l, f)?;
    }
    let h = head(t);
    marked = with_features(&marked, &h, head_features(t).drop_first(n))?;
    let mut acc = marked
        .remove_subtrees(&c.projections)?
        .ok_or_else(|| Error::Domain("moving phrases cover the whole tree".into()))?;
    for p in &c.projections {
        acc = Planar::node(marked.subtree_at(p)?.clone(), acc, Arrow::Right);
    }
    Ok(acc)
}

pub fn iterated_internal_merge(t: &MgTree, n: usize, smc: SmcMode) -> Result<LinComb<MgTree>> {
    let certs = im_n_certificates(t, n);
    if certs.is_empty() {
        return Err(Error::Domain(format!("no certificate for {n}-fold internal merge")));
    }
    if smc == SmcMode::Unique && certs.len() > 1 {
        return Err(Error::Ambiguous(certs.len()));
    }
    certs.iter().map(|c| iterated_internal_merge_at(t, c)).collect::<Result<_>>()
}

/// Sequential composition of single Internal Merges following the leaves of
/// a certificate, used to cross-check `iterated_internal_merge_at`.
pub fn sequential_internal_merge(t: &MgTree, c: &ImNCertificate) -> Result<MgTree> {
    // Tag leaves with their original position so they can be found again
    // after each step.
    let names: Vec<String> = t.leaf_labels().iter().map(|l| l.name.clone()).collect();
    let tag = |i: usize| format!("#{i}");
    let mut cur = t.clone();
    for (i, a) in t.leaf_addrs().iter().enumerate() {
        let leaf = cur.subtree_at(a)?.leaf_label().unwrap().clone();
        cur = cur.replace_at(a, Planar::Leaf(super::MgLeaf::new(tag(i), leaf.features)))?;
    }
    for l in &c.leaves {
        let want = tag(t.leaf_index(l)?);
        let addr = cur
            .leaf_addrs()
            .into_iter()
            .find(|a| cur.subtree_at(a).unwrap().leaf_label().unwrap().name == want)
            .expect("tagged leaf survives");
        let x = head_features(&cur)
            .starts_with(FeatureKind::Licensor)
            .ok_or_else(|| Error::Domain("head lost its licensor".into()))?
            .to_string();
        let m = ImMatch {
            projection: maximal_projection(&cur, &addr)?,
            leaf: addr,
            base: x,
        };
        cur = internal_merge_at(&cur, &m)?;
    }
    let untag = |l: &super::MgLeaf| {
        let i: usize = l.name[1..].parse().unwrap();
        super::MgLeaf::new(names[i].clone(), l.features.clone())
    };
    Ok(cur.map(&|a: &Arrow| *a, &untag))
}
