use std::collections::BTreeSet;
use std::fmt;

use super::abstract_tree::AbstractTree;
use super::addr::{Side, VertexAddr};
use crate::error::{Error, Result};

/// A set of subtree roots meeting every root-to-leaf path at most once.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CutForest {
    pub addrs: BTreeSet<VertexAddr>,
}

impl CutForest {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn root() -> Self {
        [VertexAddr::root()].into_iter().collect()
    }

    pub fn len(&self) -> usize {
        self.addrs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.addrs.is_empty()
    }

    pub fn contains_root(&self) -> bool {
        self.addrs.contains(&VertexAddr::root())
    }

    /// Checks that every address resolves in `t` and no address lies below another.
    pub fn validate(&self, t: &AbstractTree) -> Result<()> {
        for a in &self.addrs {
            t.subtree_at(a)?;
        }
        let v: Vec<_> = self.addrs.iter().collect();
        for (i, a) in v.iter().enumerate() {
            for b in &v[i + 1..] {
                if a.is_prefix_of(b) || b.is_prefix_of(a) {
                    return Err(Error::InadmissibleCut(format!("{a} and {b} are nested")));
                }
            }
        }
        Ok(())
    }

    /// The extracted subtrees, in address order.
    pub fn pieces<'a>(&self, t: &'a AbstractTree) -> Result<Vec<&'a AbstractTree>> {
        self.addrs.iter().map(|a| t.subtree_at(a)).collect()
    }
}

impl FromIterator<VertexAddr> for CutForest {
    fn from_iter<I: IntoIterator<Item = VertexAddr>>(iter: I) -> Self {
        CutForest {
            addrs: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for CutForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.addrs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// All admissible cuts of `t`: the empty cut, the root cut, and every
/// nonempty antichain of non-root vertices.
pub fn admissible_cuts(t: &AbstractTree) -> Vec<CutForest> {
    // Antichains of the subtree at `here`, where taking `here` itself is allowed.
    fn with_self(t: &AbstractTree, here: &VertexAddr) -> Vec<Vec<VertexAddr>> {
        let mut out = below(t, here);
        out.push(vec![here.clone()]);
        out
    }
    // Antichains strictly below `here`, including the empty one.
    fn below(t: &AbstractTree, here: &VertexAddr) -> Vec<Vec<VertexAddr>> {
        match t.children() {
            None => vec![vec![]],
            Some((a, b)) => {
                let left = with_self(a, &here.child(Side::First));
                let right = with_self(b, &here.child(Side::Second));
                let mut out = Vec::with_capacity(left.len() * right.len());
                for x in &left {
                    for y in &right {
                        let mut c = x.clone();
                        c.extend(y.iter().cloned());
                        out.push(c);
                    }
                }
                out
            }
        }
    }
    let mut out: Vec<CutForest> = below(t, &VertexAddr::root())
        .into_iter()
        .map(|v| v.into_iter().collect())
        .collect();
    out.push(CutForest::root());
    out.sort();
    out
}

/// `T / F`: remove the cut subtrees and let each sibling take its parent's
/// place. `None` is the unit 1, returned when nothing of `t` survives.
pub fn quotient(t: &AbstractTree, cut: &CutForest) -> Result<Option<AbstractTree>> {
    cut.validate(t)?;
    fn go(t: &AbstractTree, here: &VertexAddr, cut: &CutForest) -> Option<AbstractTree> {
        if cut.addrs.contains(here) {
            return None;
        }
        if !cut.addrs.iter().any(|a| here.is_prefix_of(a)) {
            return Some(t.clone());
        }
        let (a, b) = t.children()?;
        let a = go(a, &here.child(Side::First), cut);
        let b = go(b, &here.child(Side::Second), cut);
        match (a, b) {
            (None, None) => None,
            (Some(x), None) | (None, Some(x)) => Some(x),
            (Some(x), Some(y)) => Some(AbstractTree::node(x, y)),
        }
    }
    Ok(go(t, &VertexAddr::root(), cut))
}

/// Single-edge cut at non-root `v`: returns `(T_v, T / T_v)`.
pub fn elementary_cut(t: &AbstractTree, v: &VertexAddr) -> Result<(AbstractTree, AbstractTree)> {
    if v.is_root() {
        return Err(Error::RootCut);
    }
    let pi = t.subtree_at(v)?.clone();
    let rho = quotient(t, &[v.clone()].into_iter().collect())?
        .expect("a proper subtree leaves its sibling behind");
    Ok((pi, rho))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_abstract;

    fn t(s: &str) -> AbstractTree {
        parse_abstract(s).unwrap()
    }

    #[test]
    fn two_leaf_cuts() {
        let cuts = admissible_cuts(&t("{a b}"));
        let shown: Vec<String> = cuts.iter().map(|c| c.to_string()).collect();
        assert_eq!(shown, ["{}", "{.}", "{0}", "{0,1}", "{1}"]);
    }

    #[test]
    fn quotient_examples() {
        let abc = t("{a {b c}}");
        let one: CutForest = ["1".parse().unwrap()].into_iter().collect();
        assert_eq!(quotient(&abc, &one).unwrap(), Some(t("a")));
        assert_eq!(quotient(&abc, &CutForest::root()).unwrap(), None);
        assert_eq!(quotient(&abc, &CutForest::empty()).unwrap(), Some(abc.clone()));
        let both: CutForest = ["0".parse().unwrap(), "1".parse().unwrap()]
            .into_iter()
            .collect();
        assert_eq!(quotient(&abc, &both).unwrap(), None);
    }

    #[test]
    fn nested_cut_rejected() {
        let abc = t("{a {b c}}");
        let bad: CutForest = ["1".parse().unwrap(), "10".parse().unwrap()]
            .into_iter()
            .collect();
        assert!(matches!(quotient(&abc, &bad), Err(Error::InadmissibleCut(_))));
    }

    #[test]
    fn elementary() {
        let (pi, rho) = elementary_cut(&t("{a {b c}}"), &"1".parse().unwrap()).unwrap();
        assert_eq!((pi.text(), rho.text()), ("{b c}", "a"));
        let (pi, rho) = elementary_cut(&t("{a b}"), &"0".parse().unwrap()).unwrap();
        assert_eq!((pi.text(), rho.text()), ("a", "b"));
        assert_eq!(
            elementary_cut(&t("{a b}"), &VertexAddr::root()),
            Err(Error::RootCut)
        );
    }
}
