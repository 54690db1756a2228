//! Syntactic congruence and syntactic preorder of a subset.
//!
//! Two elements are syntactically congruent when no map in the
//! composition closure of the freezifications separates them relative to
//! the subset; the preorder replaces the equivalence by an implication.
//! The congruence is computed by partition refinement against the
//! generating freezifications (refining to a fixpoint reaches the whole
//! composition closure), the preorder by a greatest-fixpoint iteration;
//! both have definitional brute-force counterparts that materialize the
//! closure, used as oracles in the tests.

use super::freeze::{freez_star, freezifications};
use super::relations::{Congruence, PreorderRel};
use super::{FiniteAlgebra, SubsetMask};

/// Coarsest congruence saturating `subset`, by partition refinement
/// starting from `{L, A \ L}`.
pub fn syntactic_congruence(alg: &FiniteAlgebra, subset: &SubsetMask) -> Congruence {
    let n = alg.carrier_size();
    let gens = freezifications(alg);
    let mut labels: Vec<usize> = (0..n).map(|x| usize::from(subset.contains(x))).collect();
    loop {
        let mut signature_of = std::collections::HashMap::new();
        let mut next_labels = Vec::with_capacity(n);
        for x in 0..n {
            let sig: Vec<usize> = std::iter::once(labels[x])
                .chain(gens.iter().map(|g| labels[g.apply(x)]))
                .collect();
            let fresh = signature_of.len();
            next_labels.push(*signature_of.entry(sig).or_insert(fresh));
        }
        if next_labels == labels {
            return Congruence::from_labels(&labels);
        }
        labels = next_labels;
    }
}

/// Definitional oracle for [`syntactic_congruence`]: quantifies over the
/// materialized composition closure.
pub fn syntactic_congruence_brute(alg: &FiniteAlgebra, subset: &SubsetMask) -> Congruence {
    let n = alg.carrier_size();
    let star = freez_star(alg);
    let mut key = std::collections::HashMap::new();
    let mut labels = Vec::with_capacity(n);
    for x in 0..n {
        let profile: Vec<bool> = star.iter().map(|g| subset.contains(g.apply(x))).collect();
        let fresh = key.len();
        labels.push(*key.entry(profile).or_insert(fresh));
    }
    Congruence::from_labels(&labels)
}

/// Coarsest stable preorder with `subset` as an initial segment:
/// `x <= y` iff every closure map sending `y` into the subset also sends
/// `x` into it. Greatest fixpoint over the generating freezifications.
pub fn syntactic_preorder(alg: &FiniteAlgebra, subset: &SubsetMask) -> PreorderRel {
    let n = alg.carrier_size();
    let gens = freezifications(alg);
    let mut rel = PreorderRel::identity(n);
    for x in 0..n {
        for y in 0..n {
            if !subset.contains(y) || subset.contains(x) {
                rel.insert(x, y);
            }
        }
    }
    // every iterate is an intersection of per-word implication relations,
    // hence itself reflexive and transitive
    loop {
        let mut next = PreorderRel::identity(n);
        for x in 0..n {
            for y in 0..n {
                if rel.relates(x, y)
                    && gens.iter().all(|g| rel.relates(g.apply(x), g.apply(y)))
                {
                    next.insert(x, y);
                }
            }
        }
        if next == rel {
            debug_assert!(rel.is_reflexive() && rel.is_transitive());
            return rel;
        }
        rel = next;
    }
}

/// Definitional oracle for [`syntactic_preorder`].
pub fn syntactic_preorder_brute(alg: &FiniteAlgebra, subset: &SubsetMask) -> PreorderRel {
    let n = alg.carrier_size();
    let star = freez_star(alg);
    let mut rel = PreorderRel::from_pairs(n, &[]);
    for x in 0..n {
        for y in 0..n {
            if star.iter().all(|g| !subset.contains(g.apply(y)) || subset.contains(g.apply(x))) {
                rel.insert(x, y);
            }
        }
    }
    rel
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Operation;

    fn suc_mod(n: usize) -> FiniteAlgebra {
        let table: Vec<usize> = (0..n).map(|x| (x + 1) % n).collect();
        FiniteAlgebra::new(n, vec![Operation::new("suc", 1, table)]).unwrap()
    }

    fn no_ops(n: usize) -> FiniteAlgebra {
        FiniteAlgebra::new(n, vec![]).unwrap()
    }

    #[test]
    fn empty_subset_gives_total_congruence() {
        let alg = suc_mod(4);
        let c = syntactic_congruence(&alg, &SubsetMask::empty(4));
        assert_eq!(c, Congruence::total(4));
    }

    #[test]
    fn mod6_rotation_with_two_marks() {
        let alg = suc_mod(6);
        let subset = SubsetMask::from_elements(6, &[0, 3]).unwrap();
        let c = syntactic_congruence(&alg, &subset);
        assert_eq!(c, Congruence::from_labels(&[0, 1, 2, 0, 1, 2]));
        assert_eq!(c, syntactic_congruence_brute(&alg, &subset));
    }

    #[test]
    fn subset_is_saturated_by_its_syntactic_congruence() {
        let alg = suc_mod(6);
        for bits in 0u64..64 {
            let mut subset = SubsetMask::empty(6);
            for x in 0..6 {
                if (bits >> x) & 1 == 1 {
                    subset.insert(x);
                }
            }
            let c = syntactic_congruence(&alg, &subset);
            assert!(c.saturates(&subset));
        }
    }

    #[test]
    fn full_subset_gives_total_preorder() {
        let alg = suc_mod(3);
        let p = syntactic_preorder(&alg, &SubsetMask::full(3));
        assert_eq!(p, PreorderRel::total(3));
    }

    #[test]
    fn bare_two_points_order_by_membership() {
        // only the identity map exists, so 0 <= 1 and not 1 <= 0 for L = {0}
        let alg = no_ops(2);
        let p = syntactic_preorder(&alg, &SubsetMask::from_elements(2, &[0]).unwrap());
        assert!(p.relates(0, 1));
        assert!(!p.relates(1, 0));
        assert!(p.relates(0, 0) && p.relates(1, 1));
    }

    #[test]
    fn refinement_matches_brute_on_all_mod5_subsets() {
        let alg = suc_mod(5);
        for bits in 0u64..32 {
            let mut subset = SubsetMask::empty(5);
            for x in 0..5 {
                if (bits >> x) & 1 == 1 {
                    subset.insert(x);
                }
            }
            assert_eq!(
                syntactic_congruence(&alg, &subset),
                syntactic_congruence_brute(&alg, &subset)
            );
            assert_eq!(
                syntactic_preorder(&alg, &subset),
                syntactic_preorder_brute(&alg, &subset)
            );
        }
    }

    #[test]
    fn associated_congruence_of_preorder_is_syntactic_congruence() {
        let alg = suc_mod(6);
        let subset = SubsetMask::from_elements(6, &[0, 1, 3]).unwrap();
        let p = syntactic_preorder(&alg, &subset);
        assert_eq!(p.associated_congruence(), syntactic_congruence(&alg, &subset));
    }
}
