//! The four-pair equivalence diagram on finite algebras.
//!
//! On a finite algebra every stable preorder has finite index and every
//! subset is recognizable, so the eight diagram conditions collapse to
//! four: preorder preservation, the bounded-lattice condition on every
//! subset, congruence preservation, and the bounded-boolean condition on
//! every subset. Each pair must be a bi-implication and preorder
//! preservation must imply congruence preservation; the converse of that
//! arrow genuinely fails on some instances, which the suite records as
//! content rather than error.

use crate::fixtures;
use crate::report::{InstanceVerdict, SuiteReport};
use crate::rng::Mcg64;
use congruence_core::algebra::{
    compatible_with_table, enumerate_congruences_with, enumerate_stable_preorders_with,
    EnumLimits,
};
use congruence_core::{close, preimage_generators, ClosureKind, FiniteAlgebra, SubsetMask};
use std::time::Instant;

/// The four collapsed conditions evaluated on one `(algebra, function)`
/// instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Table1Outcome {
    pub preorder_preserving: bool,
    pub lattice_condition: bool,
    pub congruence_preserving: bool,
    pub boolean_condition: bool,
}

pub fn evaluate_table1(alg: &FiniteAlgebra, f: &[usize]) -> Table1Outcome {
    let n = alg.carrier_size();
    let limits = EnumLimits { max_congruence_carrier: n, max_preorder_carrier: n };
    let preorders = enumerate_stable_preorders_with(alg, &limits).expect("bounded by caller");
    let congruences = enumerate_congruences_with(alg, &limits).expect("bounded by caller");
    let preorder_preserving = preorders
        .iter()
        .all(|rel| compatible_with_table(n, 1, f, |x, y| rel.relates(x, y)));
    let congruence_preserving = congruences
        .iter()
        .all(|c| compatible_with_table(n, 1, f, |x, y| c.same_block(x, y)));
    let mut lattice_condition = true;
    let mut boolean_condition = true;
    for bits in 0..(1u64 << n) {
        let subset = SubsetMask::from_elements(
            n,
            &(0..n).filter(|&x| (bits >> x) & 1 == 1).collect::<Vec<_>>(),
        )
        .unwrap();
        let target = subset.preimage(f);
        let generators = preimage_generators(alg, &subset);
        if lattice_condition {
            let family = close(generators.clone(), ClosureKind::BoundedLattice);
            lattice_condition &= family.contains_set(&target);
        }
        if boolean_condition {
            let family = close(generators, ClosureKind::Boolean);
            boolean_condition &= family.contains_set(&target);
        }
        if !lattice_condition && !boolean_condition {
            break;
        }
    }
    Table1Outcome { preorder_preserving, lattice_condition, congruence_preserving, boolean_condition }
}

/// Checks the diagram on one instance.
pub fn table1_instance(alg: &FiniteAlgebra, f: &[usize], key: String) -> InstanceVerdict {
    let o = evaluate_table1(alg, f);
    if o.preorder_preserving != o.lattice_condition {
        return InstanceVerdict::fail(
            key,
            format!(
                "preorder preservation ({}) disagrees with the lattice condition ({}) on f={f:?}",
                o.preorder_preserving, o.lattice_condition
            ),
        );
    }
    if o.congruence_preserving != o.boolean_condition {
        return InstanceVerdict::fail(
            key,
            format!(
                "congruence preservation ({}) disagrees with the boolean condition ({}) on f={f:?}",
                o.congruence_preserving, o.boolean_condition
            ),
        );
    }
    if o.preorder_preserving && !o.congruence_preserving {
        return InstanceVerdict::fail(
            key,
            format!("downward arrow violated on f={f:?}"),
        );
    }
    if o.congruence_preserving && !o.preorder_preserving {
        return InstanceVerdict::converse_gap(
            key,
            "congruence preserving but not preorder preserving".to_string(),
        );
    }
    InstanceVerdict::pass(key)
}

fn render_algebra(alg: &FiniteAlgebra) -> String {
    let ops = alg
        .operations()
        .iter()
        .map(|op| {
            format!(
                "{}/{}:{}",
                op.name,
                op.arity,
                op.table.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
            )
        })
        .collect::<Vec<_>>()
        .join(" ");
    format!("carrier {} {}", alg.carrier_size(), ops)
}

/// The full suite: every one-binary-operation algebra on two elements with
/// every unary function, then seeded random algebras up to the bound.
pub fn run(seed: u64, bound: usize, random_count: usize) -> SuiteReport {
    let start = Instant::now();
    let mut verdicts = Vec::new();
    for bits in 0..16u64 {
        let table: Vec<usize> = (0..4).map(|i| ((bits >> i) & 1) as usize).collect();
        let alg = FiniteAlgebra::new(
            2,
            vec![congruence_core::Operation::new("f0", 2, table.clone())],
        )
        .unwrap();
        for fbits in 0..4u64 {
            let f = vec![(fbits & 1) as usize, ((fbits >> 1) & 1) as usize];
            let key = format!("exhaustive-2/op{bits:02}/f{fbits}");
            verdicts.push(table1_instance(&alg, &f, key));
        }
    }
    let mut rng = Mcg64::new(seed);
    for i in 0..random_count {
        let alg = fixtures::random_algebra(&mut rng, bound);
        let f = fixtures::random_unary(&mut rng, alg.carrier_size());
        let key = format!("random/{i:03}/{}", render_algebra(&alg));
        verdicts.push(table1_instance(&alg, &f, key));
    }
    SuiteReport::new("table1", Some(seed), Some(bound as u64), verdicts, start.elapsed())
}

#[cfg(test)]
mod tests {
    use super::*;
    use congruence_core::freez_star;

    #[test]
    fn compositions_of_operations_satisfy_all_conditions() {
        let alg = fixtures::cyclic_group(4);
        for g in freez_star(&alg) {
            let o = evaluate_table1(&alg, &g.image);
            assert!(o.preorder_preserving && o.lattice_condition);
            assert!(o.congruence_preserving && o.boolean_condition);
        }
    }

    #[test]
    fn order_reversal_on_a_bare_carrier_is_a_converse_gap() {
        // with no operations every preorder is stable; the swap preserves
        // both congruences but reverses the one-directional orders
        let alg = FiniteAlgebra::new(2, vec![]).unwrap();
        let verdict = table1_instance(&alg, &[1, 0], "swap".into());
        assert_eq!(verdict.status, crate::report::Status::ConverseGap);
    }

    #[test]
    fn small_seeded_suite_passes() {
        let report = run(7, 3, 25);
        assert!(report.passed, "{report}");
    }
}
