use crate::error::{Error, Result};
use crate::trees::{LeafLabel, Planar, VertexLabel};

/// `T1 ∧_d T2`: new root labelled `d` over `t1` (left) and `t2` (right).
pub fn graft<V: VertexLabel, L: LeafLabel>(t1: &Planar<V, L>, t2: &Planar<V, L>, d: V) -> Planar<V, L> {
    Planar::node(t1.clone(), t2.clone(), d)
}

/// `S \ T`: the root of `t` replaces the rightmost leaf of `s`.
pub fn under<V: VertexLabel, L: LeafLabel>(s: &Planar<V, L>, t: &Planar<V, L>) -> Planar<V, L> {
    match s {
        Planar::Leaf(_) => t.clone(),
        Planar::Node(a, b, v) => Planar::node((**a).clone(), under(b, t), v.clone()),
    }
}

/// `T / S`: the root of `t` replaces the leftmost leaf of `s`.
pub fn over<V: VertexLabel, L: LeafLabel>(t: &Planar<V, L>, s: &Planar<V, L>) -> Planar<V, L> {
    match s {
        Planar::Leaf(_) => t.clone(),
        Planar::Node(a, b, v) => Planar::node(over(t, a), (**b).clone(), v.clone()),
    }
}

/// Operadic composition γ(T_0,…,T_n; T): part `i` replaces leaf `i` of `t`.
pub fn operad_gamma<V: VertexLabel, L: LeafLabel>(
    parts: &[Planar<V, L>],
    t: &Planar<V, L>,
) -> Result<Planar<V, L>> {
    let n = t.leaves();
    if parts.len() != n {
        return Err(Error::Arity {
            expected: n,
            got: parts.len(),
        });
    }
    fn go<V: VertexLabel, L: LeafLabel>(
        t: &Planar<V, L>,
        parts: &mut std::slice::Iter<'_, Planar<V, L>>,
    ) -> Planar<V, L> {
        match t {
            Planar::Leaf(_) => parts.next().expect("arity checked").clone(),
            Planar::Node(a, b, v) => {
                let a = go(a, parts);
                let b = go(b, parts);
                Planar::node(a, b, v.clone())
            }
        }
    }
    Ok(go(t, &mut parts.iter()))
}

/// Cut `t` along the path from leaf `i` to the root. The left piece keeps
/// leaves `0..=i`, the right piece leaves `i..`; leaf `i` ends up in both.
/// Path vertices go to the side they hang from.
pub fn split_at_leaf<V: VertexLabel, L: LeafLabel>(
    t: &Planar<V, L>,
    i: usize,
) -> (Planar<V, L>, Planar<V, L>) {
    match t {
        Planar::Leaf(_) => (t.clone(), t.clone()),
        Planar::Node(a, b, v) => {
            let na = a.leaves();
            if i < na {
                let (x, y) = split_at_leaf(a, i);
                (x, Planar::node(y, (**b).clone(), v.clone()))
            } else {
                let (x, y) = split_at_leaf(b, i - na);
                (Planar::node((**a).clone(), x, v.clone()), y)
            }
        }
    }
}

/// Cut along the paths to the leaves in `idx` (nondecreasing), giving
/// `idx.len() + 1` pieces; piece `k` spans leaves `idx[k-1]..=idx[k]`.
pub fn multisplit<V: VertexLabel, L: LeafLabel>(t: &Planar<V, L>, idx: &[usize]) -> Vec<Planar<V, L>> {
    let mut out = Vec::with_capacity(idx.len() + 1);
    let mut rest = t.clone();
    let mut offset = 0;
    for &i in idx {
        let (a, b) = split_at_leaf(&rest, i - offset);
        out.push(a);
        rest = b;
        offset = i;
    }
    out.push(rest);
    out
}

/// All nondecreasing sequences of length `len` over `0..m`.
pub fn nondecreasing(len: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn go(len: usize, m: usize, lo: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in lo..m {
            cur.push(x);
            go(len, m, x, cur, out);
            cur.pop();
        }
    }
    go(len, m, 0, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_planar;
    use crate::trees::PlanarTree;

    fn p(s: &str) -> PlanarTree {
        parse_planar(s).unwrap()
    }

    #[test]
    fn graft_is_over_then_under() {
        let t1 = p("[a b]");
        let t2 = p("c");
        let y = p("[x x]");
        let g = graft(&t1, &t2, None);
        assert_eq!(g, under(&over(&t1, &y), &t2));
        assert_eq!(g.to_string(), "[[a b] c]");
    }

    #[test]
    fn under_examples() {
        let y = p("[x x]");
        assert_eq!(under(&p("x"), &y), y);
        assert_eq!(under(&y, &y).to_string(), "[x [x x]]");
        assert_eq!(over(&y, &y).to_string(), "[[x x] x]");
    }

    #[test]
    fn gamma_examples() {
        let y = p("[x x]");
        assert_eq!(operad_gamma(&[p("x"), y.clone()], &y).unwrap().to_string(), "[x [x x]]");
        assert_eq!(operad_gamma(std::slice::from_ref(&y), &p("x")).unwrap(), y);
        assert!(matches!(
            operad_gamma(std::slice::from_ref(&y), &y),
            Err(Error::Arity { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn splits() {
        let t = p("[[a b] c]");
        let (l, r) = split_at_leaf(&t, 1);
        assert_eq!((l.to_string(), r.to_string()), ("[a b]".into(), "[b c]".into()));
        let parts = multisplit(&t, &[0, 2]);
        let shown: Vec<String> = parts.iter().map(|x| x.to_string()).collect();
        assert_eq!(shown, ["a", "[[a b] c]", "c"]);
        assert_eq!(nondecreasing(2, 3).len(), 6);
        assert_eq!(nondecreasing(0, 3), vec![Vec::<usize>::new()]);
    }
}
