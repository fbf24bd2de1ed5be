//! Abstract and planar binary rooted trees: canonical forms, addresses,
//! admissible cuts, quotients and enumeration.

mod abstract_tree;
mod addr;
mod cuts;
mod enumerate;
mod planar;

pub use abstract_tree::{canonicalize, AbstractTree, RawTree};
pub use addr::{Side, VertexAddr};
pub use cuts::{admissible_cuts, elementary_cut, quotient, CutForest};
pub use enumerate::{abstract_trees, abstract_trees_upto, planar_shapes, planar_trees};
pub use planar::{
    embedding_count, forget_planar, planar_embeddings, LeafLabel, Planar, PlanarTree, VertexLabel,
};

/// A forest of abstract trees kept as a sorted multiset.
pub type Forest = Vec<AbstractTree>;

/// Generic `subtree_at` over both tree kinds.
pub trait Addressable: Sized {
    fn subtree(&self, addr: &VertexAddr) -> crate::Result<&Self>;
}

impl Addressable for AbstractTree {
    fn subtree(&self, addr: &VertexAddr) -> crate::Result<&Self> {
        self.subtree_at(addr)
    }
}

impl<V: Clone, L: Clone> Addressable for Planar<V, L> {
    fn subtree(&self, addr: &VertexAddr) -> crate::Result<&Self> {
        self.subtree_at(addr)
    }
}

pub fn subtree_at<'a, T: Addressable>(t: &'a T, addr: &VertexAddr) -> crate::Result<&'a T> {
    t.subtree(addr)
}
