//! Law-level property tests for the finite-algebra machinery: the two
//! syntactic-relation routes agree, generated relations really are stable,
//! enumeration is meet-closed, quotient projections are homomorphisms, and
//! the reduction-to-arity-1 law holds on random instances.

use congruence_core::algebra::{
    enumerate_congruences, enumerate_stable_preorders, quotient, syntactic_congruence,
    syntactic_congruence_brute, syntactic_preorder, syntactic_preorder_brute,
    verify_freezification_lemma, Congruence, FiniteAlgebra, Operation, PreorderRel, SubsetMask,
};
use congruence_core::f_inverse_by_representation;
use proptest::prelude::*;

#[derive(Clone, Debug)]
struct Instance {
    alg: FiniteAlgebra,
    subset_bits: u64,
    unary: Vec<usize>,
    relation_bits: u64,
    arity2_table: Vec<usize>,
}

fn arb_instance() -> impl Strategy<Value = Instance> {
    (1usize..=4)
        .prop_flat_map(|n| {
            let table1 = proptest::collection::vec(0..n, n);
            let table2 = proptest::collection::vec(0..n, n * n);
            let op_arities = proptest::collection::vec(0usize..=2, 1..=2);
            (
                Just(n),
                op_arities,
                proptest::collection::vec(0..n, 16),
                any::<u64>(),
                table1,
                any::<u64>(),
                table2,
            )
        })
        .prop_map(|(n, arities, pool, subset_bits, unary, relation_bits, arity2_table)| {
            let mut ops = Vec::new();
            let mut cursor = 0;
            for (i, &arity) in arities.iter().enumerate() {
                let len = n.pow(arity as u32);
                let table: Vec<usize> =
                    (0..len).map(|j| pool[(cursor + j) % pool.len()]).collect();
                cursor += len;
                ops.push(Operation::new(format!("f{i}"), arity, table));
            }
            let alg = FiniteAlgebra::new(n, ops).unwrap();
            Instance { alg, subset_bits, unary, relation_bits, arity2_table }
        })
}

fn subset_of(inst: &Instance) -> SubsetMask {
    let n = inst.alg.carrier_size();
    let elements: Vec<usize> = (0..n).filter(|&x| (inst.subset_bits >> x) & 1 == 1).collect();
    SubsetMask::from_elements(n, &elements).unwrap()
}

fn preorder_of(inst: &Instance) -> PreorderRel {
    let n = inst.alg.carrier_size();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if (inst.relation_bits >> (x * n + y)) & 1 == 1 {
                pairs.push((x, y));
            }
        }
    }
    PreorderRel::from_pairs(n, &pairs).reflexive_transitive_closure()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn syntactic_relations_match_their_definitional_oracles(inst in arb_instance()) {
        let subset = subset_of(&inst);
        prop_assert_eq!(
            syntactic_congruence(&inst.alg, &subset),
            syntactic_congruence_brute(&inst.alg, &subset)
        );
        prop_assert_eq!(
            syntactic_preorder(&inst.alg, &subset),
            syntactic_preorder_brute(&inst.alg, &subset)
        );
    }

    #[test]
    fn syntactic_relations_are_stable_and_saturating(inst in arb_instance()) {
        let subset = subset_of(&inst);
        let cong = syntactic_congruence(&inst.alg, &subset);
        let preord = syntactic_preorder(&inst.alg, &subset);
        prop_assert!(cong.is_congruence_of(&inst.alg));
        prop_assert!(preord.is_stable_for(&inst.alg));
        prop_assert!(cong.saturates(&subset));
        // the subset is an initial segment of its syntactic preorder
        let n = inst.alg.carrier_size();
        for x in 0..n {
            for y in 0..n {
                if subset.contains(y) && preord.relates(x, y) {
                    prop_assert!(subset.contains(x));
                }
            }
        }
        prop_assert_eq!(preord.associated_congruence(), cong);
    }

    #[test]
    fn saturating_congruences_refine_the_syntactic_one(inst in arb_instance()) {
        let subset = subset_of(&inst);
        let syntactic = syntactic_congruence(&inst.alg, &subset);
        for c in enumerate_congruences(&inst.alg).unwrap() {
            if c.saturates(&subset) {
                prop_assert!(c.refines(&syntactic));
            }
        }
        // dually for stable preorders and initial segments
        let syn_pre = syntactic_preorder(&inst.alg, &subset);
        let n = inst.alg.carrier_size();
        for rel in enumerate_stable_preorders(&inst.alg).unwrap() {
            let initial = (0..n).all(|x| {
                (0..n).all(|y| !(subset.contains(y) && rel.relates(x, y)) || subset.contains(x))
            });
            if initial {
                for x in 0..n {
                    for y in 0..n {
                        if rel.relates(x, y) {
                            prop_assert!(syn_pre.relates(x, y));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn congruence_enumeration_is_meet_closed_with_bounds(inst in arb_instance()) {
        let all = enumerate_congruences(&inst.alg).unwrap();
        let n = inst.alg.carrier_size();
        prop_assert!(all.contains(&Congruence::identity(n)));
        prop_assert!(all.contains(&Congruence::total(n)));
        for a in &all {
            for b in &all {
                prop_assert!(all.contains(&a.meet(b)));
            }
        }
    }

    #[test]
    fn reduction_to_arity_one_law(inst in arb_instance()) {
        let rel = preorder_of(&inst);
        let n = inst.alg.carrier_size();
        prop_assert!(
            verify_freezification_lemma(&inst.alg, &rel, 1, &inst.unary[..n]).unwrap()
        );
        prop_assert!(
            verify_freezification_lemma(&inst.alg, &rel, 2, &inst.arity2_table[..n * n]).unwrap()
        );
    }

    #[test]
    fn quotient_projects_homomorphically(inst in arb_instance()) {
        for c in enumerate_congruences(&inst.alg).unwrap() {
            let (q, proj) = quotient(&inst.alg, &c).unwrap();
            for (op, qop) in inst.alg.operations().iter().zip(q.operations()) {
                let n = inst.alg.carrier_size();
                let mut tuple = vec![0usize; op.arity];
                loop {
                    let image = proj[inst.alg.eval(op, &tuple)];
                    let mapped: Vec<usize> = tuple.iter().map(|&x| proj[x]).collect();
                    prop_assert_eq!(image, q.eval(qop, &mapped));
                    let mut pos = op.arity;
                    let done = loop {
                        if pos == 0 {
                            break true;
                        }
                        pos -= 1;
                        tuple[pos] += 1;
                        if tuple[pos] < n {
                            break false;
                        }
                        tuple[pos] = 0;
                    };
                    if done {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn representation_formula_agrees_for_preserving_functions(inst in arb_instance()) {
        let subset = subset_of(&inst);
        let n = inst.alg.carrier_size();
        let f = &inst.unary[..n];
        if let Ok(report) = f_inverse_by_representation(&inst.alg, &subset, f).unwrap() {
            if let Some((_, flag)) = report.boolean_formula {
                prop_assert!(flag);
            }
            if let Some((_, flag)) = report.lattice_formula {
                prop_assert!(flag);
            }
        }
    }
}
