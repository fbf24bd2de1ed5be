use std::collections::BTreeSet;

use super::abstract_tree::AbstractTree;
use super::planar::Planar;

/// All abstract trees with exactly `n` leaves over `alphabet`, sorted.
pub fn abstract_trees(n: usize, alphabet: &[&str]) -> Vec<AbstractTree> {
    abstract_trees_by_size(n, alphabet).pop().unwrap_or_default()
}

/// All abstract trees with 1..=max leaves over `alphabet`, by size then text.
pub fn abstract_trees_upto(max: usize, alphabet: &[&str]) -> Vec<AbstractTree> {
    abstract_trees_by_size(max, alphabet)
        .into_iter()
        .skip(1)
        .flatten()
        .collect()
}

// Index k holds the trees with k leaves; index 0 is empty.
fn abstract_trees_by_size(max: usize, alphabet: &[&str]) -> Vec<Vec<AbstractTree>> {
    let mut by: Vec<Vec<AbstractTree>> = vec![Vec::new()];
    for n in 1..=max {
        if n == 1 {
            let mut v: Vec<_> = alphabet.iter().map(|s| AbstractTree::leaf(*s)).collect();
            v.sort();
            v.dedup();
            by.push(v);
            continue;
        }
        let mut set = BTreeSet::new();
        for i in 1..=n / 2 {
            for a in &by[i] {
                for b in &by[n - i] {
                    set.insert(AbstractTree::node(a.clone(), b.clone()));
                }
            }
        }
        by.push(set.into_iter().collect());
    }
    by
}

/// All planar trees with `leaves` leaves, every vertex label from `vlabels`
/// and every leaf label from `leaf_labels`.
pub fn planar_trees<V: Clone, L: Clone>(
    leaves: usize,
    vlabels: &[V],
    leaf_labels: &[L],
) -> Vec<Planar<V, L>> {
    let mut by: Vec<Vec<Planar<V, L>>> = vec![Vec::new()];
    for n in 1..=leaves {
        if n == 1 {
            by.push(leaf_labels.iter().cloned().map(Planar::Leaf).collect());
            continue;
        }
        let mut out = Vec::new();
        for i in 1..n {
            for a in &by[i] {
                for b in &by[n - i] {
                    for v in vlabels {
                        out.push(Planar::node(a.clone(), b.clone(), v.clone()));
                    }
                }
            }
        }
        by.push(out);
    }
    by.pop().unwrap_or_default()
}

/// Unlabelled planar shapes with `leaves` leaves.
pub fn planar_shapes(leaves: usize) -> Vec<Planar<(), ()>> {
    planar_trees(leaves, &[()], &[()])
}
