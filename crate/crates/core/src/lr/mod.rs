//! The Loday–Ronco Hopf algebra of planar binary trees.
//!
//! Two presentations are implemented. `Graphical` takes the product as a sum
//! over leaf-path decompositions of the left factor grafted onto the leaves of
//! the right factor, and the coproduct as the sum of leaf-path splittings.
//! `Recursive` takes the product from
//! `T ⋆ T' = T_l ∧ (T_r ⋆ T') + (T ⋆ T'_l) ∧ T'_r` and the coproduct from
//! `Δ(a ∧ b) = (a ∧ b) ⊗ • + Σ (a' ⋆ b') ⊗ (a'' ∧ b'')`.
//! Each pair is a bialgebra on its own; the two products are different.

mod antipode;
mod graft;
pub mod laws;

use std::collections::HashMap;

pub use antipode::{antipode, antipode_basis};
pub use graft::{graft, multisplit, nondecreasing, operad_gamma, over, split_at_leaf, under};

use crate::linear::{Coeff, LinComb};
use crate::trees::{LeafLabel, Planar, VertexLabel};

pub type Sum<V, L> = LinComb<Planar<V, L>>;
pub type Tensor<V, L> = LinComb<(Planar<V, L>, Planar<V, L>)>;

/// Planar tree with D_V decorations and anonymous leaves: the LR basis.
pub type LrTree = Planar<Option<String>, ()>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Presentation {
    Graphical,
    Recursive,
}

impl Presentation {
    pub fn name(self) -> &'static str {
        match self {
            Presentation::Graphical => "graphical",
            Presentation::Recursive => "recursive",
        }
    }

    pub fn product_basis<V: VertexLabel, L: LeafLabel>(self, s: &Planar<V, L>, t: &Planar<V, L>) -> Sum<V, L> {
        match self {
            Presentation::Graphical => product_graphical_basis(s, t),
            Presentation::Recursive => product_recursive_basis(s, t),
        }
    }

    pub fn product<V: VertexLabel, L: LeafLabel>(self, a: &Sum<V, L>, b: &Sum<V, L>) -> Sum<V, L> {
        a.bilinear(b, |s, t| self.product_basis(s, t))
    }

    pub fn coproduct_basis<V: VertexLabel, L: LeafLabel + Default>(self, t: &Planar<V, L>) -> Tensor<V, L> {
        match self {
            Presentation::Graphical => coproduct_basis(t),
            Presentation::Recursive => coproduct_recursive_basis(t),
        }
    }

    pub fn coproduct<V: VertexLabel, L: LeafLabel + Default>(self, a: &Sum<V, L>) -> Tensor<V, L> {
        a.flat_map(|t| self.coproduct_basis(t))
    }
}

/// Graphical product: Σ γ(T_0,…,T_n; T') over all decompositions of `s`
/// into `leaves(t)` pieces by leaf-to-root path cuts.
pub fn product_graphical_basis<V: VertexLabel, L: LeafLabel>(s: &Planar<V, L>, t: &Planar<V, L>) -> Sum<V, L> {
    let mut out = LinComb::zero();
    for idx in nondecreasing(t.leaves() - 1, s.leaves()) {
        let parts = multisplit(s, &idx);
        out.add_basis(operad_gamma(&parts, t).expect("piece count matches leaves"));
    }
    out
}

pub fn product_graphical<V: VertexLabel, L: LeafLabel>(a: &Sum<V, L>, b: &Sum<V, L>) -> Sum<V, L> {
    Presentation::Graphical.product(a, b)
}

/// Recursive product; any single leaf acts as the unit.
pub fn product_recursive_basis<V: VertexLabel, L: LeafLabel>(s: &Planar<V, L>, t: &Planar<V, L>) -> Sum<V, L> {
    let mut memo = HashMap::new();
    rec_product(s, t, &mut memo)
}

type ProductMemo<V, L> = HashMap<(Planar<V, L>, Planar<V, L>), Sum<V, L>>;

fn rec_product<V: VertexLabel, L: LeafLabel>(
    s: &Planar<V, L>,
    t: &Planar<V, L>,
    memo: &mut ProductMemo<V, L>,
) -> Sum<V, L> {
    match (s, t) {
        (Planar::Leaf(_), _) => return LinComb::basis(t.clone()),
        (_, Planar::Leaf(_)) => return LinComb::basis(s.clone()),
        _ => {}
    }
    let key = (s.clone(), t.clone());
    if let Some(r) = memo.get(&key) {
        return r.clone();
    }
    let (Planar::Node(sl, sr, sv), Planar::Node(tl, tr, tv)) = (s, t) else {
        unreachable!()
    };
    let mut out = LinComb::zero();
    for (x, c) in &rec_product(sr, t, memo) {
        out.add_term(Planar::node((**sl).clone(), x.clone(), sv.clone()), c.clone());
    }
    for (x, c) in &rec_product(s, tl, memo) {
        out.add_term(Planar::node(x.clone(), (**tr).clone(), tv.clone()), c.clone());
    }
    memo.insert(key, out.clone());
    out
}

pub fn product_recursive<V: VertexLabel, L: LeafLabel>(a: &Sum<V, L>, b: &Sum<V, L>) -> Sum<V, L> {
    Presentation::Recursive.product(a, b)
}

/// Graphical coproduct: Σ over leaves ℓ of (left of the path to ℓ) ⊗ (right of it).
pub fn coproduct_basis<V: VertexLabel, L: LeafLabel>(t: &Planar<V, L>) -> Tensor<V, L> {
    (0..t.leaves()).map(|i| split_at_leaf(t, i)).collect()
}

pub fn coproduct<V: VertexLabel, L: LeafLabel>(a: &Sum<V, L>) -> Tensor<V, L> {
    a.flat_map(coproduct_basis)
}

/// Recursive coproduct. The unit leaf in `T ⊗ •` carries `L::default()`.
pub fn coproduct_recursive_basis<V: VertexLabel, L: LeafLabel + Default>(t: &Planar<V, L>) -> Tensor<V, L> {
    match t {
        Planar::Leaf(_) => LinComb::basis((t.clone(), t.clone())),
        Planar::Node(a, b, d) => {
            let mut out = LinComb::basis((t.clone(), Planar::Leaf(L::default())));
            let da = coproduct_recursive_basis(a);
            let db = coproduct_recursive_basis(b);
            let mut memo = HashMap::new();
            for ((a1, a2), ca) in &da {
                for ((b1, b2), cb) in &db {
                    let right = Planar::node(a2.clone(), b2.clone(), d.clone());
                    let coeff: Coeff = ca * cb;
                    for (x, cx) in &rec_product(a1, b1, &mut memo) {
                        out.add_term((x.clone(), right.clone()), cx * &coeff);
                    }
                }
            }
            out
        }
    }
}

/// Componentwise product on tensors: (a ⊗ b)(c ⊗ d) = (a ⋆ c) ⊗ (b ⋆ d).
pub fn tensor_product<V: VertexLabel, L: LeafLabel>(
    p: Presentation,
    x: &Tensor<V, L>,
    y: &Tensor<V, L>,
) -> Tensor<V, L> {
    x.bilinear(y, |(a, b), (c, d)| {
        let left = p.product_basis(a, c);
        let right = p.product_basis(b, d);
        left.bilinear(&right, |u, v| LinComb::basis((u.clone(), v.clone())))
    })
}

/// Counit: coefficient of the unit leaf.
pub fn counit<V: VertexLabel, L: LeafLabel>(a: &Sum<V, L>) -> Coeff {
    a.iter()
        .filter(|(t, _)| t.is_leaf())
        .fold(Coeff::from_integer(0.into()), |acc, (_, c)| acc + c)
}

/// Erase leaf labels from a parsed planar tree.
pub fn to_lr(t: &crate::trees::PlanarTree) -> LrTree {
    t.skeleton()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::int;
    use crate::parse::parse_planar;

    fn lr(s: &str) -> LrTree {
        to_lr(&parse_planar(s).unwrap())
    }

    #[test]
    fn y_times_y() {
        let y = lr("[x x]");
        let expect: Sum<_, _> = [lr("[x [x x]]"), lr("[[x x] x]")].into_iter().collect();
        assert_eq!(product_recursive_basis(&y, &y), expect);
        assert_eq!(product_graphical_basis(&y, &y), expect);
    }

    #[test]
    fn units() {
        let dot = lr("x");
        let t = lr("[[x x] [x x]]");
        for p in [Presentation::Graphical, Presentation::Recursive] {
            assert_eq!(p.product_basis(&dot, &t), LinComb::basis(t.clone()));
            assert_eq!(p.product_basis(&t, &dot), LinComb::basis(t.clone()));
        }
    }

    #[test]
    fn coproduct_of_y_is_primitive() {
        let y = lr("[x x]");
        let dot = lr("x");
        let expect: Tensor<_, _> = [(y.clone(), dot.clone()), (dot.clone(), y.clone())]
            .into_iter()
            .collect();
        assert_eq!(coproduct_basis(&y), expect);
        assert_eq!(coproduct_recursive_basis(&y), expect);
        assert_eq!(coproduct_basis(&dot), LinComb::basis((dot.clone(), dot)));
    }

    #[test]
    fn products_differ_in_degree_three() {
        let y = lr("[x x]");
        let r = lr("[x [x x]]");
        let rec = product_recursive_basis(&y, &r);
        let gr = product_graphical_basis(&y, &r);
        assert_eq!(rec.total(), int(2));
        assert_eq!(gr.total(), int(3));
        assert_ne!(rec, gr);
    }
}
