//! Law-level property tests over the naturals: the exact set algebra
//! against window oracles, the syntactic-congruence formula, lasso
//! pullback laws, and the submonoid structure of finite-index stable
//! preorders.

use congruence_core::{
    finite_index_stable_preorders, is_saturated_up, lasso_proj, suc_generators,
    syntactic_cong_up, ArithCong, UpSet,
};
use proptest::prelude::*;

fn arb_upset() -> impl Strategy<Value = UpSet> {
    (0u64..=6, 1u64..=6, any::<u64>(), any::<u64>()).prop_map(|(a, k, fbits, dbits)| {
        UpSet::new(
            a,
            k,
            (0..a).filter(|&x| (fbits >> x) & 1 == 1),
            (0..k).filter(|&r| (dbits >> r) & 1 == 1),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn set_algebra_matches_window_oracle(a in arb_upset(), b in arb_upset()) {
        let horizon = 3 * (a.threshold() + b.threshold() + a.period() * b.period()) + 16;
        let union = a.union(&b);
        let meet = a.intersect(&b);
        let co = a.complement();
        for x in 0..horizon {
            prop_assert_eq!(union.contains(x), a.contains(x) || b.contains(x));
            prop_assert_eq!(meet.contains(x), a.contains(x) && b.contains(x));
            prop_assert_eq!(co.contains(x), !a.contains(x));
        }
    }

    #[test]
    fn preimages_match_window_oracle(set in arb_upset(), t in 0u64..12, n in 1u64..5, m in 0u64..8) {
        let dec = set.suc_preimage(t);
        let aff = set.affine_preimage(n, m);
        for x in 0..60 {
            prop_assert_eq!(dec.contains(x), set.contains(x + t));
            prop_assert_eq!(aff.contains(x), set.contains(n * x + m));
        }
    }

    #[test]
    fn canonical_forms_are_equal_iff_sets_are(a in arb_upset(), b in arb_upset()) {
        let horizon =
            a.threshold().max(b.threshold()) + num_integer::lcm(a.period(), b.period()) + 2;
        let same_window = (0..horizon).all(|x| a.contains(x) == b.contains(x));
        prop_assert_eq!(a == b, same_window);
    }

    #[test]
    fn syntactic_congruence_saturates_and_is_coarsest(set in arb_upset()) {
        let syn = syntactic_cong_up(&set);
        prop_assert!(is_saturated_up(&set, &syn));
        // the recognizability triangle: the index is threshold + period of
        // the canonical form
        prop_assert_eq!(syn.index(), Some(set.threshold() + set.period()));
        // any saturating congruence within small bounds refines it
        let ArithCong::Pair { threshold: sa, modulus: sk } = syn else { panic!() };
        for a in 0..=7u64 {
            for k in 1..=7u64 {
                if is_saturated_up(&set, &ArithCong::pair(a, k)) {
                    prop_assert!(sa <= a && k % sk == 0);
                }
            }
        }
    }

    #[test]
    fn decrement_generators_are_exactly_the_shifts(set in arb_upset()) {
        let gens = suc_generators(&set);
        // tagged shift t produces the t-step preimage, all distinct
        for (i, (g, _)) in gens.iter().enumerate() {
            prop_assert_eq!(g, &set.suc_preimage(i as u64));
        }
        let next = set.suc_preimage(gens.len() as u64);
        prop_assert!(gens.iter().any(|(g, _)| g == &next));
    }
}

#[test]
fn pullbacks_are_stable_for_addition_and_multiplication_on_windows() {
    // successor stability of a pullback propagates to addition and
    // multiplication: checked on a window for every enumerated pullback
    let family = finite_index_stable_preorders(3, 3).unwrap();
    let window = 8u64;
    for p in &family {
        for x1 in 0..window {
            for y1 in 0..window {
                if !p.relates(x1, y1) {
                    continue;
                }
                for x2 in 0..window {
                    for y2 in 0..window {
                        if p.relates(x2, y2) {
                            assert!(p.relates(x1 + x2, y1 + y2), "{p} on +");
                            assert!(p.relates(x1 * x2, y1 * y2), "{p} on ×");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn pullback_sections_form_nested_submonoids() {
    // for each pullback and window points a <= b: 0 sits in the section
    // {x | a ⪯ a+x}, the section is closed under addition within the
    // window, and sections grow with the base point
    let family = finite_index_stable_preorders(3, 3).unwrap();
    let window = 12u64;
    for p in &family {
        for a in 0..4u64 {
            let up: Vec<u64> = (0..window).filter(|&x| p.relates(a, a + x)).collect();
            let down: Vec<u64> = (0..window).filter(|&x| p.relates(a + x, a)).collect();
            assert!(up.contains(&0) && down.contains(&0));
            for &x in &up {
                for &y in &up {
                    if x + y < window {
                        assert!(up.contains(&(x + y)), "{p}: up-section not closed at {x}+{y}");
                    }
                }
            }
            for &x in &down {
                for &y in &down {
                    if x + y < window {
                        assert!(down.contains(&(x + y)));
                    }
                }
            }
            // monotone in the base point
            for b in a..4u64 {
                for &x in &up {
                    assert!(p.relates(b, b + x));
                }
                for &x in &down {
                    assert!(p.relates(b + x, b));
                }
            }
        }
    }
}

#[test]
fn lasso_projection_respects_all_three_operations_exhaustively() {
    for a in 0..=5u64 {
        for k in 1..=5u64 {
            let alg = congruence_core::lasso_quotient(a, k);
            let suc = alg.operation("suc").unwrap();
            let add = alg.operation("add").unwrap();
            let mul = alg.operation("mul").unwrap();
            let top = a + 3 * k;
            for x in 0..=top {
                let px = lasso_proj(a, k, x);
                assert_eq!(lasso_proj(a, k, x + 1), alg.eval(suc, &[px]));
                for y in 0..=top {
                    let py = lasso_proj(a, k, y);
                    assert_eq!(lasso_proj(a, k, x + y), alg.eval(add, &[px, py]));
                    assert_eq!(lasso_proj(a, k, x * y), alg.eval(mul, &[px, py]));
                    let kernel = ArithCong::pair(a, k);
                    assert_eq!(px == py, kernel.relates(x, y));
                }
            }
        }
    }
}
