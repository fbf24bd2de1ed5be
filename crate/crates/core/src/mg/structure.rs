//! Δ_I, ⋆_I and the quotient by Dom(I).

use super::merge::{im_candidates, im_n_certificates, internal_merge, internal_merge_at, ImMatch, SmcMode};
use super::tree::{head_index, Arrow, MgTree};
use crate::linear::LinComb;
use crate::lr::{multisplit, nondecreasing, operad_gamma, split_at_leaf};
use crate::trees::Planar;

pub type MgSum = LinComb<MgTree>;
pub type MgTensor = LinComb<(MgTree, MgTree)>;

/// Membership in Dom(I^n). In `unique` mode a tree with several
/// certificates is outside the domain.
pub fn in_domain_n(t: &MgTree, n: usize, smc: SmcMode) -> bool {
    let count = if n == 1 {
        im_candidates(t).len()
    } else {
        im_n_certificates(t, n).len()
    };
    match smc {
        SmcMode::Unique => count == 1,
        SmcMode::SumAll => count > 0,
    }
}

pub fn in_domain(t: &MgTree, smc: SmcMode) -> bool {
    in_domain_n(t, 1, smc)
}

/// The cuts C used by Δ_I and ⋆_I: one per certificate, or `None` alone
/// when T is outside the domain (π_C(T) = T).
pub fn domain_cuts(t: &MgTree, smc: SmcMode) -> Vec<Option<ImMatch>> {
    let c = im_candidates(t);
    match (smc, c.len()) {
        (_, 0) | (SmcMode::Unique, 2..) => vec![None],
        _ => c.into_iter().map(Some).collect(),
    }
}

/// Leaf index of h(π_C(T)).
fn cut_head(t: &MgTree, m: &Option<ImMatch>) -> Option<usize> {
    m.as_ref().map(|m| t.leaf_index(&m.leaf).expect("certificate leaf"))
}

/// Δ_I on a basis tree: leaf-path splittings keeping h(T) and h(π_C(T)) on
/// one side. The cut leaf belongs to both sides.
pub fn coproduct_i_basis(t: &MgTree, smc: SmcMode) -> MgTensor {
    let ht = head_index(t);
    let mut out = LinComb::zero();
    for m in domain_cuts(t, smc) {
        let hp = cut_head(t, &m);
        for i in 0..t.leaves() {
            let keep = match hp {
                None => true,
                Some(hp) => (ht <= i && hp <= i) || (ht >= i && hp >= i),
            };
            if keep {
                out.add_basis(split_at_leaf(t, i));
            }
        }
    }
    out
}

pub fn coproduct_i(a: &MgSum, smc: SmcMode) -> MgTensor {
    a.flat_map(|t| coproduct_i_basis(t, smc))
}

/// A decomposition (T_0, …, T_n) of T kept by ⋆_I.
#[derive(Clone, Debug)]
pub struct Decomposition {
    pub parts: Vec<MgTree>,
    /// Index of the piece grafted onto h(T').
    pub slot: usize,
    /// First leaf of T in that piece.
    pub lo: usize,
    pub cut: Option<ImMatch>,
}

impl Decomposition {
    pub fn graft(&self, onto: &MgTree) -> MgTree {
        operad_gamma(&self.parts, onto).expect("one piece per leaf")
    }

    /// Global leaf index, after grafting, of leaf `i` of T inside the slot piece.
    pub fn image_of(&self, i: usize) -> usize {
        let before: usize = self.parts[..self.slot].iter().map(|p| p.leaves()).sum();
        before + i - self.lo
    }
}

/// P_I(T, T'): decompositions whose piece at h(T') holds h(T), and h(π_C(T))
/// when T ∈ Dom(I).
pub fn decompositions_i(t: &MgTree, t2: &MgTree, smc: SmcMode) -> Vec<Decomposition> {
    let n = t2.leaves();
    let k = head_index(t2);
    let ht = head_index(t);
    let last = t.leaves() - 1;
    let mut out = Vec::new();
    for m in domain_cuts(t, smc) {
        let hp = cut_head(t, &m);
        for idx in nondecreasing(n - 1, t.leaves()) {
            let lo = if k == 0 { 0 } else { idx[k - 1] };
            let hi = if k == n - 1 { last } else { idx[k] };
            let inside = |x: usize| lo <= x && x <= hi;
            if inside(ht) && hp.is_none_or(inside) {
                out.push(Decomposition {
                    parts: multisplit(t, &idx),
                    slot: k,
                    lo,
                    cut: m.clone(),
                });
            }
        }
    }
    out
}

pub fn product_i_basis(t: &MgTree, t2: &MgTree, smc: SmcMode) -> MgSum {
    decompositions_i(t, t2, smc).iter().map(|d| d.graft(t2)).collect()
}

pub fn product_i(a: &MgSum, b: &MgSum, smc: SmcMode) -> MgSum {
    a.bilinear(b, |s, t| product_i_basis(s, t, smc))
}

/// Both sides of I(T ⋆_I T') = Σ π_C(T_{h(T')}) ∧_> γ(…, ρ_C(T_{h(T')}), …; T').
#[derive(Clone, Debug)]
pub struct IntMergeProduct {
    pub lhs: MgSum,
    pub rhs: MgSum,
    /// Terms where one side could not be evaluated.
    pub errors: Vec<String>,
}

impl IntMergeProduct {
    pub fn holds(&self) -> bool {
        self.errors.is_empty() && self.lhs == self.rhs
    }
}

pub fn intmergeprod(t: &MgTree, t2: &MgTree, smc: SmcMode) -> IntMergeProduct {
    let mut errors = Vec::new();
    let mut lhs = LinComb::zero();
    for (x, c) in &product_i_basis(t, t2, smc) {
        match internal_merge(x, smc) {
            Ok(s) => lhs.add_scaled(&s, c),
            Err(e) => errors.push(format!("I({x}): {e}")),
        }
    }
    let mut rhs = LinComb::zero();
    for d in decompositions_i(t, t2, smc) {
        let Some(m) = &d.cut else {
            errors.push(format!("{t} is outside Dom(I)"));
            continue;
        };
        let piece = &d.parts[d.slot];
        let local = t.leaf_index(&m.leaf).unwrap() - d.lo;
        let found = im_candidates(piece)
            .into_iter()
            .find(|c| piece.leaf_index(&c.leaf).unwrap() == local);
        let Some(pm) = found else {
            errors.push(format!("piece {piece} lost the licensee"));
            continue;
        };
        let moved = internal_merge_at(piece, &pm).expect("candidate of the piece");
        let Planar::Node(pi, rho, _) = moved else { unreachable!() };
        let mut parts = d.parts.clone();
        parts[d.slot] = (*rho).clone();
        let body = operad_gamma(&parts, t2).expect("one piece per leaf");
        rhs.add_basis(Planar::node((*pi).clone(), body, Arrow::Right));
    }
    IntMergeProduct { lhs, rhs, errors }
}

/// Canonical representative in Dom(I^n)\H: drop basis terms in Dom(I^n).
pub fn coset_reduce(a: &MgSum, n: usize, smc: SmcMode) -> MgSum {
    a.filter(|t| !in_domain_n(t, n, smc))
}
