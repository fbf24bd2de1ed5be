//! Exhaustive checks of the Hopf algebra axioms over small basis trees.

use super::{antipode_basis, coproduct_basis, coproduct_recursive_basis, tensor_product, Presentation, Sum, Tensor};
use crate::linear::{Coeff, LinComb};
use crate::report::CheckReport;
use crate::trees::{planar_shapes, Planar};

type Sk = Planar<(), ()>;

/// Graphical laws carry the bare name, recursive ones a `-recursive` suffix.
pub fn law_name(base: &str, p: Presentation) -> String {
    match p {
        Presentation::Graphical => base.to_string(),
        Presentation::Recursive => format!("{base}-recursive"),
    }
}

/// Basis trees grouped by internal-vertex count, degrees `0..=max_deg`.
pub fn basis_by_degree(max_deg: usize) -> Vec<Vec<Sk>> {
    (0..=max_deg).map(|k| planar_shapes(k + 1)).collect()
}

fn mul(p: Presentation, a: &Sum<(), ()>, b: &Sum<(), ()>) -> Sum<(), ()> {
    p.product(a, b)
}

/// (a ⋆ b) ⋆ c = a ⋆ (b ⋆ c) for all basis triples of total degree ≤ `max_deg`.
pub fn associativity(p: Presentation, max_deg: usize) -> CheckReport {
    let mut r = CheckReport::new(law_name("lr-assoc", p));
    let by = basis_by_degree(max_deg);
    for i in 0..=max_deg {
        for j in 0..=max_deg - i {
            for k in 0..=max_deg - i - j {
                for a in &by[i] {
                    for b in &by[j] {
                        for c in &by[k] {
                            let (a, b, c) = (LinComb::basis(a.clone()), LinComb::basis(b.clone()), LinComb::basis(c.clone()));
                            let l = mul(p, &mul(p, &a, &b), &c);
                            let rr = mul(p, &a, &mul(p, &b, &c));
                            r.check(l == rr, || format!("a={a} b={b} c={c}: (ab)c={l} a(bc)={rr}"));
                        }
                    }
                }
            }
        }
    }
    r.note(format!("basis triples of total degree <= {max_deg}"));
    r
}

fn delta_left(p: Presentation, x: &Tensor<(), ()>) -> LinComb<(Sk, Sk, Sk)> {
    x.flat_map(|(a, b)| {
        p.coproduct_basis(a)
            .flat_map(|(u, v)| LinComb::basis((u.clone(), v.clone(), b.clone())))
    })
}

fn delta_right(p: Presentation, x: &Tensor<(), ()>) -> LinComb<(Sk, Sk, Sk)> {
    x.flat_map(|(a, b)| {
        p.coproduct_basis(b)
            .flat_map(|(u, v)| LinComb::basis((a.clone(), u.clone(), v.clone())))
    })
}

/// (Δ ⊗ id)Δ = (id ⊗ Δ)Δ on every basis tree of degree ≤ `max_deg`.
pub fn coassociativity(p: Presentation, max_deg: usize) -> CheckReport {
    let mut r = CheckReport::new(law_name("lr-coassoc", p));
    for t in basis_by_degree(max_deg).iter().flatten() {
        let d = p.coproduct_basis(t);
        let l = delta_left(p, &d);
        let rr = delta_right(p, &d);
        r.check(l == rr, || format!("T={t}"));
    }
    r.note(format!("basis trees of degree <= {max_deg}"));
    r
}

/// (ε ⊗ id)Δ = id = (id ⊗ ε)Δ.
pub fn counit(p: Presentation, max_deg: usize) -> CheckReport {
    let mut r = CheckReport::new(law_name("lr-counit", p));
    for t in basis_by_degree(max_deg).iter().flatten() {
        let d = p.coproduct_basis(t);
        let left: Sum<(), ()> = d.iter().filter(|((a, _), _)| a.is_leaf()).map(|((_, b), c)| (b.clone(), c.clone())).collect();
        let right: Sum<(), ()> = d.iter().filter(|((_, b), _)| b.is_leaf()).map(|((a, _), c)| (a.clone(), c.clone())).collect();
        let id = LinComb::basis(t.clone());
        r.check(left == id && right == id, || format!("T={t}: Δ(T)={}", d.tensor_string()));
    }
    r
}

/// Δ(a ⋆ b) = Δ(a) ⋆ Δ(b) for basis pairs of total degree ≤ `max_deg`.
pub fn bialgebra(p: Presentation, max_deg: usize) -> CheckReport {
    let mut r = CheckReport::new(law_name("lr-bialgebra", p));
    let by = basis_by_degree(max_deg);
    for i in 0..=max_deg {
        for j in 0..=max_deg - i {
            for a in &by[i] {
                for b in &by[j] {
                    let l = p.coproduct(&p.product_basis(a, b));
                    let rr = tensor_product(p, &p.coproduct_basis(a), &p.coproduct_basis(b));
                    r.check(l == rr, || format!("a={a} b={b}: Δ(ab)={} Δ(a)Δ(b)={}", l.tensor_string(), rr.tensor_string()));
                }
            }
        }
    }
    r.note(format!("basis pairs of total degree <= {max_deg}"));
    r
}

/// m(S ⊗ id)Δ = uε and m(id ⊗ S)Δ = uε, each counted as its own instance.
pub fn antipode_identities(p: Presentation, max_deg: usize) -> CheckReport {
    let mut r = CheckReport::new(law_name("lr-antipode", p));
    let dot: Sk = Planar::Leaf(());
    for t in basis_by_degree(max_deg).iter().flatten() {
        let eps = if t.is_leaf() {
            LinComb::basis(dot.clone())
        } else {
            LinComb::zero()
        };
        let d = p.coproduct_basis(t);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((a, b), c) in &d {
            let sa = antipode_basis(p, a);
            left.add_scaled(&p.product(&sa, &LinComb::basis(b.clone())), c);
            let sb = antipode_basis(p, b);
            right.add_scaled(&p.product(&LinComb::basis(a.clone()), &sb), c);
        }
        r.check(left == eps, || format!("m(S⊗id)Δ({t}) = {left}"));
        r.check(right == eps, || format!("m(id⊗S)Δ({t}) = {right}"));
    }
    r
}

/// Degree is additive under ⋆ and Δ.
pub fn grading(p: Presentation, max_deg: usize) -> CheckReport {
    let mut r = CheckReport::new(law_name("lr-grading", p));
    let by = basis_by_degree(max_deg);
    for i in 0..=max_deg {
        for j in 0..=max_deg - i {
            for a in &by[i] {
                for b in &by[j] {
                    let prod = p.product_basis(a, b);
                    let ok = prod.keys().all(|x| x.internal_vertices() == i + j);
                    r.check(ok, || format!("a={a} b={b}: {prod}"));
                }
            }
        }
        for t in &by[i] {
            let d = p.coproduct_basis(t);
            let ok = d.keys().all(|(x, y)| x.internal_vertices() + y.internal_vertices() == i);
            r.check(ok, || format!("Δ({t}) = {}", d.tensor_string()));
        }
    }
    r
}

/// Recursive and graphical ⋆ on basis pairs of total degree ≤ `max_deg`.
pub fn products_agree(max_deg: usize) -> CheckReport {
    let mut r = CheckReport::new("lr-rec-vs-graph");
    let by = basis_by_degree(max_deg);
    for i in 0..=max_deg {
        for j in 0..=max_deg - i {
            for a in &by[i] {
                for b in &by[j] {
                    let g = Presentation::Graphical.product_basis(a, b);
                    let rec = Presentation::Recursive.product_basis(a, b);
                    r.check(g == rec, || format!("a={a} b={b}: recursive={rec} graphical={g}"));
                }
            }
        }
    }
    r.note(format!("basis pairs of total degree <= {max_deg}"));
    r
}

/// Term-by-term comparison of the recursive coproduct with the leaf-path one.
pub fn coproducts_agree(max_deg: usize) -> CheckReport {
    let mut r = CheckReport::new("lr-coproduct-recursive");
    for t in basis_by_degree(max_deg).iter().flatten() {
        let g = coproduct_basis(t);
        let rec = coproduct_recursive_basis(t);
        r.check(g == rec, || {
            let diff = rec.clone() - g.clone();
            format!("T={t}: recursive - graphical = {}", diff.tensor_string())
        });
    }
    r
}

/// Grafting V_k ⊗ V_ℓ lands in degree k + ℓ + 1.
pub fn graft_degree(max_deg: usize) -> CheckReport {
    graft_index(max_deg, "lr-graft-degree", 1)
}

/// Grafting measured against the index V_{k+ℓ-1} found in the literature.
pub fn graft_index_stated(max_deg: usize) -> CheckReport {
    graft_index(max_deg, "lr-graft-index", -1)
}

fn graft_index(max_deg: usize, law: &str, shift: i64) -> CheckReport {
    let mut r = CheckReport::new(law);
    let by = basis_by_degree(max_deg);
    for k in 0..=max_deg {
        for l in 0..=max_deg - k {
            for a in &by[k] {
                for b in &by[l] {
                    let d = super::graft(a, b, ()).internal_vertices() as i64;
                    let want = (k + l) as i64 + shift;
                    r.check(d == want, || format!("{a} ∧ {b}: degree {d}, expected {want}"));
                }
            }
        }
    }
    r
}

/// Sum of coefficients of a tensor, used by tests as a cheap fingerprint.
pub fn tensor_weight(x: &Tensor<(), ()>) -> Coeff {
    x.total()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn laws_hold_in_low_degree() {
        for p in [Presentation::Graphical, Presentation::Recursive] {
            assert!(associativity(p, 3).ok());
            assert!(coassociativity(p, 3).ok());
            assert!(bialgebra(p, 2).ok());
            assert!(antipode_identities(p, 2).ok());
            assert!(counit(p, 3).ok());
        }
    }
}
