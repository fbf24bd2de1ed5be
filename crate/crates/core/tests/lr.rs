use merge_algebra::linear::{int, LinComb};
use merge_algebra::lr::{antipode_basis, counit, graft, over, split_at_leaf, under, Presentation, Sum};
use merge_algebra::trees::{planar_shapes, Planar};
use merge_algebra::Coeff;
use proptest::prelude::*;

type Sk = Planar<(), ()>;

const BOTH: [Presentation; 2] = [Presentation::Graphical, Presentation::Recursive];

fn leaf() -> Sk {
    Planar::Leaf(())
}

fn y() -> Sk {
    Planar::node(leaf(), leaf(), ())
}

fn binom(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |a, i| a * (n - i) / (i + 1))
}

fn shape() -> impl Strategy<Value = Sk> {
    (1usize..=4, any::<prop::sample::Index>()).prop_map(|(n, i)| {
        let all = planar_shapes(n);
        all[i.index(all.len())].clone()
    })
}

fn basis(t: &Sk) -> Sum<(), ()> {
    LinComb::basis(t.clone())
}

#[test]
fn y_squared() {
    let want: Sum<(), ()> = [Planar::node(leaf(), y(), ()), Planar::node(y(), leaf(), ())].into_iter().collect();
    for p in BOTH {
        assert_eq!(p.product_basis(&y(), &y()), want, "{}", p.name());
    }
}

#[test]
fn leaf_is_the_unit() {
    for n in 1..=4 {
        for t in planar_shapes(n) {
            for p in BOTH {
                assert_eq!(p.product_basis(&leaf(), &t), basis(&t));
                assert_eq!(p.product_basis(&t, &leaf()), basis(&t));
            }
        }
    }
}

#[test]
fn product_weight_is_binomial() {
    for n in 1..=4 {
        for m in 1..=4 {
            for s in planar_shapes(n) {
                for t in planar_shapes(m) {
                    let (p, q) = (s.internal_vertices() as u64, t.internal_vertices() as u64);
                    let got = Presentation::Graphical.product_basis(&s, &t).total();
                    assert_eq!(got, int(binom(p + q, p) as i64), "{s} * {t}");
                }
            }
        }
    }
}

#[test]
fn coproduct_hand_example() {
    // [[• •] •]: split at each of the three leaves
    let t = Planar::node(y(), leaf(), ());
    let d = Presentation::Graphical.coproduct_basis(&t);
    let want: LinComb<(Sk, Sk)> = [(leaf(), t.clone()), (y(), y()), (t.clone(), leaf())].into_iter().collect();
    assert_eq!(d, want);
    for i in 0..3 {
        assert!(d.coeff(&split_at_leaf(&t, i)) == int(1));
    }
}

#[test]
fn coproduct_has_one_term_per_leaf() {
    for n in 1..=6 {
        for t in planar_shapes(n) {
            let d = Presentation::Graphical.coproduct_basis(&t);
            assert_eq!(d.total(), int(n as i64));
            for ((a, b), _) in &d {
                assert_eq!(a.leaves() + b.leaves(), n + 1);
            }
        }
    }
}

#[test]
fn grafting_shapes() {
    let g = graft(&y(), &leaf(), ());
    assert_eq!(g, Planar::node(y(), leaf(), ()));
    assert_eq!(under(&y(), &y()).leaves(), 3);
    assert_eq!(over(&y(), &y()).leaves(), 3);
    assert_eq!(g.internal_vertices(), y().internal_vertices() + leaf().internal_vertices() + 1);
}

#[test]
fn antipode_small() {
    for p in BOTH {
        assert_eq!(antipode_basis(p, &leaf()), basis(&leaf()));
        assert_eq!(antipode_basis(p, &y()), basis(&y()).scale(&int(-1)));
    }
}

#[test]
fn presentations_have_different_products() {
    let mut differ = 0;
    for n in 2..=4 {
        for m in 2..=4 {
            for s in planar_shapes(n) {
                for t in planar_shapes(m) {
                    let g = Presentation::Graphical.product_basis(&s, &t);
                    let r = Presentation::Recursive.product_basis(&s, &t);
                    if g != r {
                        differ += 1;
                    }
                }
            }
        }
    }
    assert!(differ > 0);
}

fn convolution_zero(p: Presentation, t: &Sk, left: bool) -> bool {
    let mut out: Sum<(), ()> = LinComb::zero();
    for ((a, b), c) in &p.coproduct_basis(t) {
        let prod = if left {
            p.product(&antipode_basis(p, a), &basis(b))
        } else {
            p.product(&basis(a), &antipode_basis(p, b))
        };
        out.add_scaled(&prod, c);
    }
    out.is_zero()
}

proptest! {
    #[test]
    fn associative(a in shape(), b in shape(), c in shape()) {
        for p in BOTH {
            let l = p.product(&p.product(&basis(&a), &basis(&b)), &basis(&c));
            let r = p.product(&basis(&a), &p.product(&basis(&b), &basis(&c)));
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn coassociative(t in shape()) {
        for p in BOTH {
            let d = p.coproduct_basis(&t);
            let mut l: LinComb<(Sk, Sk, Sk)> = LinComb::zero();
            let mut r: LinComb<(Sk, Sk, Sk)> = LinComb::zero();
            for ((a, b), c) in &d {
                for ((x, y2), c2) in &p.coproduct_basis(a) {
                    l.add_term((x.clone(), y2.clone(), b.clone()), c * c2);
                }
                for ((x, y2), c2) in &p.coproduct_basis(b) {
                    r.add_term((a.clone(), x.clone(), y2.clone()), c * c2);
                }
            }
            prop_assert_eq!(l, r);
        }
    }

    #[test]
    fn counit_law(t in shape()) {
        for p in BOTH {
            let d = p.coproduct_basis(&t);
            let mut left: Sum<(), ()> = LinComb::zero();
            for ((a, b), c) in &d {
                let e: Coeff = counit(&basis(a));
                left.add_term(b.clone(), c * e);
            }
            prop_assert_eq!(left, basis(&t));
        }
    }

    #[test]
    fn antipode_convolution(t in shape()) {
        prop_assume!(!t.is_leaf());
        for p in BOTH {
            prop_assert!(convolution_zero(p, &t, true));
            prop_assert!(convolution_zero(p, &t, false));
        }
    }
}
