use std::fmt;
use std::hash::Hash;
use std::sync::Arc;

use super::abstract_tree::AbstractTree;
use super::addr::{Side, VertexAddr};
use crate::error::{Error, Result};

/// Ordered binary rooted tree with vertex labels `V` and leaf labels `L`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Planar<V, L> {
    Leaf(L),
    Node(Arc<Planar<V, L>>, Arc<Planar<V, L>>, V),
}

/// Planar tree with an optional vertex decoration from D_V and symbol leaves.
pub type PlanarTree = Planar<Option<String>, String>;

/// Text rendering for vertex decorations: written after `[` when present.
pub trait VertexLabel: Clone + Ord + Hash + fmt::Debug {
    fn prefix(&self) -> Option<String>;
}

/// Text rendering for leaves.
pub trait LeafLabel: Clone + Ord + Hash + fmt::Debug {
    fn render(&self) -> String;
}

impl VertexLabel for () {
    fn prefix(&self) -> Option<String> {
        None
    }
}

impl VertexLabel for Option<String> {
    fn prefix(&self) -> Option<String> {
        self.clone()
    }
}

impl LeafLabel for () {
    fn render(&self) -> String {
        "•".to_string()
    }
}

impl LeafLabel for String {
    fn render(&self) -> String {
        self.clone()
    }
}

impl<V: Clone, L: Clone> Planar<V, L> {
    pub fn leaf(l: L) -> Self {
        Planar::Leaf(l)
    }

    pub fn node(left: Self, right: Self, v: V) -> Self {
        Planar::Node(Arc::new(left), Arc::new(right), v)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Planar::Leaf(_))
    }

    pub fn children(&self) -> Option<(&Self, &Self)> {
        match self {
            Planar::Leaf(_) => None,
            Planar::Node(a, b, _) => Some((a, b)),
        }
    }

    pub fn child(&self, side: Side) -> Option<&Self> {
        self.children().map(|(a, b)| match side {
            Side::First => a,
            Side::Second => b,
        })
    }

    pub fn vlabel(&self) -> Option<&V> {
        match self {
            Planar::Leaf(_) => None,
            Planar::Node(_, _, v) => Some(v),
        }
    }

    pub fn leaf_label(&self) -> Option<&L> {
        match self {
            Planar::Leaf(l) => Some(l),
            Planar::Node(..) => None,
        }
    }

    pub fn leaves(&self) -> usize {
        match self {
            Planar::Leaf(_) => 1,
            Planar::Node(a, b, _) => a.leaves() + b.leaves(),
        }
    }

    pub fn internal_vertices(&self) -> usize {
        self.leaves() - 1
    }

    pub fn subtree_at(&self, addr: &VertexAddr) -> Result<&Self> {
        let mut t = self;
        for &s in &addr.0 {
            t = t
                .child(s)
                .ok_or_else(|| Error::BadAddress(addr.to_string()))?;
        }
        Ok(t)
    }

    /// All vertex addresses in preorder.
    pub fn vertices(&self) -> Vec<VertexAddr> {
        let mut out = Vec::new();
        fn go<V: Clone, L: Clone>(t: &Planar<V, L>, here: VertexAddr, out: &mut Vec<VertexAddr>) {
            if let Some((a, b)) = t.children() {
                out.push(here.clone());
                go(a, here.child(Side::First), out);
                go(b, here.child(Side::Second), out);
            } else {
                out.push(here);
            }
        }
        go(self, VertexAddr::root(), &mut out);
        out
    }

    /// Leaf addresses from left to right.
    pub fn leaf_addrs(&self) -> Vec<VertexAddr> {
        self.vertices()
            .into_iter()
            .filter(|a| self.subtree_at(a).unwrap().is_leaf())
            .collect()
    }

    /// Leaf labels from left to right.
    pub fn leaf_labels(&self) -> Vec<&L> {
        let mut out = Vec::new();
        fn go<'a, V: Clone, L: Clone>(t: &'a Planar<V, L>, out: &mut Vec<&'a L>) {
            match t {
                Planar::Leaf(l) => out.push(l),
                Planar::Node(a, b, _) => {
                    go(a, out);
                    go(b, out);
                }
            }
        }
        go(self, &mut out);
        out
    }

    /// Position of the leaf at `addr` in the left-to-right leaf order.
    pub fn leaf_index(&self, addr: &VertexAddr) -> Result<usize> {
        let mut t = self;
        let mut idx = 0;
        for &s in &addr.0 {
            let (a, b) = t
                .children()
                .ok_or_else(|| Error::BadAddress(addr.to_string()))?;
            match s {
                Side::First => t = a,
                Side::Second => {
                    idx += a.leaves();
                    t = b;
                }
            }
        }
        if t.is_leaf() {
            Ok(idx)
        } else {
            Err(Error::BadAddress(format!("{addr} is not a leaf")))
        }
    }

    pub fn leaf_addr(&self, mut i: usize) -> Result<VertexAddr> {
        let mut t = self;
        let mut path = Vec::new();
        while let Some((a, b)) = t.children() {
            let n = a.leaves();
            if i < n {
                path.push(Side::First);
                t = a;
            } else {
                i -= n;
                path.push(Side::Second);
                t = b;
            }
        }
        if i == 0 {
            Ok(VertexAddr(path))
        } else {
            Err(Error::BadAddress(format!("leaf #{i} out of range")))
        }
    }

    /// Copy of `self` with the subtree at `addr` replaced.
    pub fn replace_at(&self, addr: &VertexAddr, new: Self) -> Result<Self> {
        fn go<V: Clone, L: Clone>(
            t: &Planar<V, L>,
            path: &[Side],
            new: Planar<V, L>,
            addr: &VertexAddr,
        ) -> Result<Planar<V, L>> {
            let Some((&s, rest)) = path.split_first() else {
                return Ok(new);
            };
            match t {
                Planar::Leaf(_) => Err(Error::BadAddress(addr.to_string())),
                Planar::Node(a, b, v) => Ok(match s {
                    Side::First => Planar::Node(Arc::new(go(a, rest, new, addr)?), b.clone(), v.clone()),
                    Side::Second => Planar::Node(a.clone(), Arc::new(go(b, rest, new, addr)?), v.clone()),
                }),
            }
        }
        go(self, &addr.0, new, addr)
    }

    /// Remove the listed subtrees, each sibling taking its parent's place.
    /// Returns `None` when nothing survives. Addresses must be pairwise disjoint.
    pub fn remove_subtrees(&self, addrs: &[VertexAddr]) -> Result<Option<Self>> {
        for a in addrs {
            self.subtree_at(a)?;
        }
        for (i, a) in addrs.iter().enumerate() {
            for b in &addrs[i + 1..] {
                if a.is_prefix_of(b) || b.is_prefix_of(a) {
                    return Err(Error::InadmissibleCut(format!("{a} and {b} are nested")));
                }
            }
        }
        fn go<V: Clone, L: Clone>(
            t: &Planar<V, L>,
            here: &VertexAddr,
            addrs: &[VertexAddr],
        ) -> Option<Planar<V, L>> {
            if addrs.contains(here) {
                return None;
            }
            if !addrs.iter().any(|a| here.is_prefix_of(a)) {
                return Some(t.clone());
            }
            let (a, b) = t.children()?;
            let v = t.vlabel()?.clone();
            match (
                go(a, &here.child(Side::First), addrs),
                go(b, &here.child(Side::Second), addrs),
            ) {
                (None, None) => None,
                (Some(x), None) | (None, Some(x)) => Some(x),
                (Some(x), Some(y)) => Some(Planar::node(x, y, v)),
            }
        }
        Ok(go(self, &VertexAddr::root(), addrs))
    }

    pub fn map<V2: Clone, L2: Clone>(
        &self,
        fv: &impl Fn(&V) -> V2,
        fl: &impl Fn(&L) -> L2,
    ) -> Planar<V2, L2> {
        match self {
            Planar::Leaf(l) => Planar::Leaf(fl(l)),
            Planar::Node(a, b, v) => Planar::node(a.map(fv, fl), b.map(fv, fl), fv(v)),
        }
    }

    /// Same shape and vertex labels, leaf labels erased.
    pub fn skeleton(&self) -> Planar<V, ()> {
        self.map(&|v: &V| v.clone(), &|_: &L| ())
    }

    /// Same shape and leaf labels, vertex labels erased.
    pub fn bare(&self) -> Planar<(), L> {
        self.map(&|_: &V| (), &|l: &L| l.clone())
    }
}

impl<V: VertexLabel, L: LeafLabel> fmt::Display for Planar<V, L> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Planar::Leaf(l) => f.write_str(&l.render()),
            Planar::Node(a, b, v) => {
                write!(f, "[")?;
                if let Some(p) = v.prefix() {
                    write!(f, "{p} ")?;
                }
                write!(f, "{a} {b}]")
            }
        }
    }
}

/// The unordered tree underneath a planar one. Leaves become their rendered text.
pub fn forget_planar<V: VertexLabel, L: LeafLabel>(t: &Planar<V, L>) -> AbstractTree {
    match t {
        Planar::Leaf(l) => AbstractTree::leaf(l.render()),
        Planar::Node(a, b, _) => AbstractTree::node(forget_planar(a), forget_planar(b)),
    }
}

/// Every planar tree whose unordered image is `t`, vertex labels left empty.
pub fn planar_embeddings(t: &AbstractTree) -> Vec<PlanarTree> {
    match t.children() {
        None => vec![Planar::Leaf(t.label().unwrap().to_string())],
        Some((a, b)) => {
            let ea = planar_embeddings(a);
            let eb = planar_embeddings(b);
            let mut out = Vec::new();
            for x in &ea {
                for y in &eb {
                    out.push(Planar::node(x.clone(), y.clone(), None));
                }
            }
            if a != b {
                for y in &eb {
                    for x in &ea {
                        out.push(Planar::node(y.clone(), x.clone(), None));
                    }
                }
            }
            out
        }
    }
}

/// Number of planar embeddings without building them.
pub fn embedding_count(t: &AbstractTree) -> u64 {
    match t.children() {
        None => 1,
        Some((a, b)) => {
            let n = embedding_count(a) * embedding_count(b);
            if a == b {
                n
            } else {
                2 * n
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::{parse_abstract, parse_planar};

    #[test]
    fn embeddings_small() {
        assert_eq!(planar_embeddings(&parse_abstract("{x x}").unwrap()).len(), 1);
        let e = planar_embeddings(&parse_abstract("{x {x x}}").unwrap());
        let shown: Vec<String> = e.iter().map(|p| p.to_string()).collect();
        assert_eq!(shown, ["[x [x x]]", "[[x x] x]"]);
    }

    #[test]
    fn remove_and_replace() {
        let t = parse_planar("[a [b c]]").unwrap();
        let r = t.remove_subtrees(&["10".parse().unwrap()]).unwrap().unwrap();
        assert_eq!(r.to_string(), "[a c]");
        let r = t
            .replace_at(&"0".parse().unwrap(), Planar::leaf("z".to_string()))
            .unwrap();
        assert_eq!(r.to_string(), "[z [b c]]");
        assert!(t.remove_subtrees(&[VertexAddr::root()]).unwrap().is_none());
    }

    #[test]
    fn leaf_indexing() {
        let t = parse_planar("[[a b] [c d]]").unwrap();
        for i in 0..4 {
            let a = t.leaf_addr(i).unwrap();
            assert_eq!(t.leaf_index(&a).unwrap(), i);
        }
        assert!(t.leaf_addr(4).is_err());
    }

    #[test]
    fn forget_is_symmetric() {
        let a = parse_planar("[a b]").unwrap();
        let b = parse_planar("[b a]").unwrap();
        assert_eq!(forget_planar(&a), forget_planar(&b));
    }
}
