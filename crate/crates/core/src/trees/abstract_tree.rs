use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use super::addr::{Side, VertexAddr};
use crate::error::{Error, Result};

/// Unordered binary rooted tree with labelled leaves, kept in canonical form.
///
/// The two children of every node are stored so that the canonical text of
/// the first is not greater than that of the second. Equality, ordering and
/// hashing all go through the canonical text, so two values are equal exactly
/// when the trees are isomorphic as unordered labelled trees.
#[derive(Clone)]
pub struct AbstractTree(Arc<Inner>);

struct Inner {
    shape: Shape,
    text: String,
    leaves: usize,
}

enum Shape {
    Leaf(String),
    Node(AbstractTree, AbstractTree),
}

/// A tree as written, before canonicalization. Nodes may have any arity here;
/// `canonicalize` rejects everything that is not binary.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RawTree {
    Leaf(String),
    Node(Vec<RawTree>),
}

impl AbstractTree {
    pub fn leaf(symbol: impl Into<String>) -> Self {
        let s: String = symbol.into();
        AbstractTree(Arc::new(Inner {
            text: s.clone(),
            shape: Shape::Leaf(s),
            leaves: 1,
        }))
    }

    /// Set formation `{a, b}`; argument order is irrelevant.
    pub fn node(a: AbstractTree, b: AbstractTree) -> Self {
        let (a, b) = if a.text() <= b.text() { (a, b) } else { (b, a) };
        let text = format!("{{{} {}}}", a.text(), b.text());
        let leaves = a.leaves() + b.leaves();
        AbstractTree(Arc::new(Inner {
            shape: Shape::Node(a, b),
            text,
            leaves,
        }))
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self.0.shape, Shape::Leaf(_))
    }

    pub fn label(&self) -> Option<&str> {
        match &self.0.shape {
            Shape::Leaf(s) => Some(s),
            Shape::Node(..) => None,
        }
    }

    pub fn children(&self) -> Option<(&AbstractTree, &AbstractTree)> {
        match &self.0.shape {
            Shape::Leaf(_) => None,
            Shape::Node(a, b) => Some((a, b)),
        }
    }

    pub fn child(&self, side: Side) -> Option<&AbstractTree> {
        self.children().map(|(a, b)| match side {
            Side::First => a,
            Side::Second => b,
        })
    }

    /// Canonical serialization, e.g. `{a {b c}}`.
    pub fn text(&self) -> &str {
        &self.0.text
    }

    pub fn leaves(&self) -> usize {
        self.0.leaves
    }

    pub fn internal_vertices(&self) -> usize {
        self.0.leaves - 1
    }

    pub fn vertex_count(&self) -> usize {
        2 * self.0.leaves - 1
    }

    pub fn subtree_at(&self, addr: &VertexAddr) -> Result<&AbstractTree> {
        let mut t = self;
        for &s in &addr.0 {
            t = t
                .child(s)
                .ok_or_else(|| Error::BadAddress(addr.to_string()))?;
        }
        Ok(t)
    }

    /// All vertex addresses in preorder, root first.
    pub fn vertices(&self) -> Vec<VertexAddr> {
        let mut out = Vec::with_capacity(self.vertex_count());
        fn go(t: &AbstractTree, here: VertexAddr, out: &mut Vec<VertexAddr>) {
            out.push(here.clone());
            if let Some((a, b)) = t.children() {
                go(a, here.child(Side::First), out);
                go(b, here.child(Side::Second), out);
            }
        }
        go(self, VertexAddr::root(), &mut out);
        out
    }

    pub fn internal_addrs(&self) -> Vec<VertexAddr> {
        self.vertices()
            .into_iter()
            .filter(|v| !self.subtree_at(v).unwrap().is_leaf())
            .collect()
    }

    pub fn leaf_addrs(&self) -> Vec<VertexAddr> {
        self.vertices()
            .into_iter()
            .filter(|v| self.subtree_at(v).unwrap().is_leaf())
            .collect()
    }

    /// Leaf symbols in canonical left-to-right order.
    pub fn leaf_labels(&self) -> Vec<&str> {
        let mut out = Vec::with_capacity(self.leaves());
        fn go<'a>(t: &'a AbstractTree, out: &mut Vec<&'a str>) {
            match &t.0.shape {
                Shape::Leaf(s) => out.push(s),
                Shape::Node(a, b) => {
                    go(a, out);
                    go(b, out);
                }
            }
        }
        go(self, &mut out);
        out
    }

    pub fn to_raw(&self) -> RawTree {
        match &self.0.shape {
            Shape::Leaf(s) => RawTree::Leaf(s.clone()),
            Shape::Node(a, b) => RawTree::Node(vec![a.to_raw(), b.to_raw()]),
        }
    }
}

/// Canonical representative of a raw unordered tree.
pub fn canonicalize(raw: &RawTree) -> Result<AbstractTree> {
    match raw {
        RawTree::Leaf(s) => Ok(AbstractTree::leaf(s.clone())),
        RawTree::Node(kids) if kids.len() == 2 => Ok(AbstractTree::node(
            canonicalize(&kids[0])?,
            canonicalize(&kids[1])?,
        )),
        RawTree::Node(kids) => Err(Error::NonBinary(kids.len())),
    }
}

impl PartialEq for AbstractTree {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.text == other.0.text
    }
}

impl Eq for AbstractTree {}

impl PartialOrd for AbstractTree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for AbstractTree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.text.cmp(&other.0.text)
    }
}

impl Hash for AbstractTree {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.text.hash(state)
    }
}

impl fmt::Display for AbstractTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.text)
    }
}

impl fmt::Debug for AbstractTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> AbstractTree {
        AbstractTree::leaf(s)
    }

    #[test]
    fn node_is_symmetric() {
        assert_eq!(AbstractTree::node(l("b"), l("a")).text(), "{a b}");
        let xx = AbstractTree::node(l("x"), l("x"));
        assert_eq!(
            AbstractTree::node(xx.clone(), l("x")),
            AbstractTree::node(l("x"), xx)
        );
    }

    #[test]
    fn leaves_sort_before_nodes() {
        let t = AbstractTree::node(AbstractTree::node(l("b"), l("c")), l("z"));
        assert_eq!(t.text(), "{z {b c}}");
    }

    #[test]
    fn canonicalize_rejects_non_binary() {
        let raw = RawTree::Node(vec![
            RawTree::Leaf("a".into()),
            RawTree::Leaf("b".into()),
            RawTree::Leaf("c".into()),
        ]);
        assert_eq!(canonicalize(&raw), Err(Error::NonBinary(3)));
    }

    #[test]
    fn subtree_lookup() {
        let bc = AbstractTree::node(l("b"), l("c"));
        let t = AbstractTree::node(l("a"), bc.clone());
        assert_eq!(t.subtree_at(&"1".parse().unwrap()).unwrap(), &bc);
        assert_eq!(t.subtree_at(&VertexAddr::root()).unwrap(), &t);
        assert!(t.subtree_at(&"00".parse().unwrap()).is_err());
        assert_eq!(t.vertices().len(), 5);
        assert_eq!(t.leaf_labels(), vec!["a", "b", "c"]);
    }
}
