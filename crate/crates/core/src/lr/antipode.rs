use std::collections::HashMap;

use super::{Presentation, Sum};
use crate::linear::{int, LinComb};
use crate::trees::{LeafLabel, Planar, VertexLabel};

/// Antipode on a basis tree: S(•) = •, and for positive degree
/// S(X) = −X − Σ S(X′) ⋆ X″ over the reduced coproduct.
pub fn antipode_basis<V: VertexLabel, L: LeafLabel + Default>(p: Presentation, t: &Planar<V, L>) -> Sum<V, L> {
    let mut memo = HashMap::new();
    go(p, t, &mut memo)
}

fn go<V: VertexLabel, L: LeafLabel + Default>(
    p: Presentation,
    t: &Planar<V, L>,
    memo: &mut HashMap<Planar<V, L>, Sum<V, L>>,
) -> Sum<V, L> {
    if t.is_leaf() {
        return LinComb::basis(t.clone());
    }
    if let Some(r) = memo.get(t) {
        return r.clone();
    }
    let mut out = LinComb::term(t.clone(), int(-1));
    for ((x1, x2), c) in &p.coproduct_basis(t) {
        if x1.is_leaf() || x2.is_leaf() {
            continue;
        }
        let s1 = go(p, x1, memo);
        let prod = p.product(&s1, &LinComb::basis(x2.clone()));
        out.add_scaled(&prod, &-c);
    }
    memo.insert(t.clone(), out.clone());
    out
}

pub fn antipode<V: VertexLabel, L: LeafLabel + Default>(p: Presentation, a: &Sum<V, L>) -> Sum<V, L> {
    a.flat_map(|t| antipode_basis(p, t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::{to_lr, LrTree};
    use crate::parse::parse_planar;

    fn lr(s: &str) -> LrTree {
        to_lr(&parse_planar(s).unwrap())
    }

    #[test]
    fn small_values() {
        let dot = lr("x");
        let y = lr("[x x]");
        for p in [Presentation::Graphical, Presentation::Recursive] {
            assert_eq!(antipode_basis(p, &dot), LinComb::basis(dot.clone()));
            assert_eq!(antipode_basis(p, &y), LinComb::term(y.clone(), int(-1)));
        }
    }
}
