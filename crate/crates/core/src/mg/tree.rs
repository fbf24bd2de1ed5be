use crate::error::{Error, Result};
use crate::trees::{LeafLabel, Planar, Side, VertexAddr, VertexLabel};

use super::features::FeatureString;

/// Projection arrow on an internal vertex: `<` means the head is in the left
/// child, `>` in the right child.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Arrow {
    Left,
    Right,
}

impl Arrow {
    pub fn head_side(self) -> Side {
        match self {
            Arrow::Left => Side::First,
            Arrow::Right => Side::Second,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Arrow::Left => "<",
            Arrow::Right => ">",
        }
    }
}

impl VertexLabel for Arrow {
    fn prefix(&self) -> Option<String> {
        Some(self.symbol().to_string())
    }
}

/// A lexical item: a name plus its feature string.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MgLeaf {
    pub name: String,
    pub features: FeatureString,
}

impl MgLeaf {
    pub fn new(name: impl Into<String>, features: FeatureString) -> Self {
        MgLeaf {
            name: name.into(),
            features,
        }
    }
}

impl LeafLabel for MgLeaf {
    fn render(&self) -> String {
        format!("{}:\"{}\"", self.name, self.features)
    }
}

pub type MgTree = Planar<Arrow, MgLeaf>;

pub fn mg_leaf(name: &str, features: &str) -> Result<MgTree> {
    Ok(Planar::Leaf(MgLeaf::new(name, features.parse()?)))
}

/// Address of the head leaf, found by following the arrows from the root.
pub fn head<L: Clone>(t: &Planar<Arrow, L>) -> VertexAddr {
    let mut path = Vec::new();
    let mut cur = t;
    while let Planar::Node(a, b, arrow) = cur {
        let s = arrow.head_side();
        path.push(s);
        cur = if s == Side::First { a } else { b };
    }
    VertexAddr(path)
}

/// Position of the head among the leaves, counted from the left.
pub fn head_index<L: Clone>(t: &Planar<Arrow, L>) -> usize {
    t.leaf_index(&head(t)).expect("head is a leaf")
}

pub fn head_leaf(t: &MgTree) -> &MgLeaf {
    t.subtree_at(&head(t))
        .ok()
        .and_then(|s| s.leaf_label())
        .expect("head resolves to a leaf")
}

pub fn head_features(t: &MgTree) -> &FeatureString {
    &head_leaf(t).features
}

/// Largest complete subtree whose head is the leaf at `leaf`.
pub fn maximal_projection<L: Clone>(t: &Planar<Arrow, L>, leaf: &VertexAddr) -> Result<VertexAddr> {
    if !t.subtree_at(leaf)?.is_leaf() {
        return Err(Error::BadAddress(format!("{leaf} is not a leaf")));
    }
    for d in 0..=leaf.depth() {
        let v = VertexAddr(leaf.0[..d].to_vec());
        let sub = t.subtree_at(&v)?;
        if v.join(&head(sub)) == *leaf {
            return Ok(v);
        }
    }
    unreachable!("the leaf is its own head")
}

/// Every leaf paired with the root of its maximal projection, left to right,
/// in one pass.
pub fn leaf_projections<L: Clone>(t: &Planar<Arrow, L>) -> Vec<(VertexAddr, VertexAddr)> {
    fn go<L: Clone>(
        t: &Planar<Arrow, L>,
        path: &mut Vec<Side>,
        proj: usize,
        out: &mut Vec<(VertexAddr, VertexAddr)>,
    ) {
        match t {
            Planar::Leaf(_) => out.push((VertexAddr(path.clone()), VertexAddr(path[..proj].to_vec()))),
            Planar::Node(a, b, arrow) => {
                for (side, child) in [(Side::First, a), (Side::Second, b)] {
                    let here = path.len();
                    path.push(side);
                    let p = if side == arrow.head_side() { proj } else { here + 1 };
                    go(child, path, p, out);
                    path.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    go(t, &mut Vec::new(), 0, &mut out);
    out
}

/// Copy of `t` with the features of the leaf at `addr` replaced.
pub fn with_features(t: &MgTree, addr: &VertexAddr, features: FeatureString) -> Result<MgTree> {
    let leaf = t
        .subtree_at(addr)?
        .leaf_label()
        .ok_or_else(|| Error::BadAddress(format!("{addr} is not a leaf")))?;
    t.replace_at(
        addr,
        Planar::Leaf(MgLeaf {
            name: leaf.name.clone(),
            features,
        }),
    )
}

/// `T[α̂]`: the head loses its first feature.
pub fn consume_head(t: &MgTree) -> MgTree {
    let h = head(t);
    let f = head_features(t).hat();
    with_features(t, &h, f).expect("head address is valid")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_mg;

    #[test]
    fn heads_follow_arrows() {
        let t = parse_mg(r#"[< a:"" b:""]"#).unwrap();
        assert_eq!(head_leaf(&t).name, "a");
        let t = parse_mg(r#"[> [< a:"" b:""] [< c:"" d:""]]"#).unwrap();
        assert_eq!(head_leaf(&t).name, "c");
        assert_eq!(head_index(&t), 2);
        let t = parse_mg(r#"a:"X""#).unwrap();
        assert_eq!(head(&t), VertexAddr::root());
    }

    #[test]
    fn maximal_projections() {
        let t = parse_mg(r#"[> [< a:"" b:""] [< c:"" d:""]]"#).unwrap();
        let a = t.leaf_addr(0).unwrap();
        assert_eq!(maximal_projection(&t, &a).unwrap().to_string(), "0");
        let c = t.leaf_addr(2).unwrap();
        assert!(maximal_projection(&t, &c).unwrap().is_root());
        for (leaf, p) in leaf_projections(&t) {
            assert_eq!(maximal_projection(&t, &leaf).unwrap(), p);
        }
        let t = parse_mg(r#"[< a:"" b:""]"#).unwrap();
        let b = t.leaf_addr(1).unwrap();
        assert_eq!(maximal_projection(&t, &b).unwrap(), b);
    }

    #[test]
    fn consume() {
        let t = parse_mg(r#"[< a:"sel(D) V" b:"D"]"#).unwrap();
        assert_eq!(consume_head(&t).to_string(), r#"[< a:"V" b:"D"]"#);
    }
}
