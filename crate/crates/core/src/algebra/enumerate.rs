//! Generation and enumeration of congruences and stable preorders.
//!
//! Congruences are generated as fixpoints of a union-find seeded with
//! pairs and closed under the 1-freezification images; the full set is the
//! join closure of the principal congruences. Stable preorders are
//! generated by closing pair sets under reflexivity, transitivity and
//! freezification images; the full set is the closure of the identity
//! under adjoining one generating pair at a time. Both enumerations are
//! exact — the carrier bounds are cost guards, not sampling cutoffs — and
//! both have an independent brute-force counterpart used as an oracle.

use super::freeze::freezifications;
use super::relations::{Congruence, PreorderRel};
use super::{AlgebraError, FiniteAlgebra, Operation};
use std::cmp::Reverse;
use std::collections::HashSet;

/// Carrier bounds for the exhaustive enumerations. Beyond them the
/// operations fail loudly rather than silently sample.
#[derive(Clone, Copy, Debug)]
pub struct EnumLimits {
    pub max_congruence_carrier: usize,
    pub max_preorder_carrier: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits { max_congruence_carrier: 6, max_preorder_carrier: 4 }
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) -> bool {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx == ry {
            return false;
        }
        self.parent[rx.max(ry)] = rx.min(ry);
        true
    }

    fn labels(&mut self) -> Congruence {
        let labels: Vec<usize> = (0..self.parent.len()).map(|x| self.find(x)).collect();
        Congruence::from_labels(&labels)
    }
}

/// Smallest congruence of the algebra containing the given pairs: a
/// union-find fixpoint, merging freezification images of merged elements
/// until stable.
pub fn principal_congruence(alg: &FiniteAlgebra, pairs: &[(usize, usize)]) -> Congruence {
    let gens = freezifications(alg);
    let mut uf = UnionFind::new(alg.carrier_size());
    let mut worklist: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((x, y)) = worklist.pop() {
        if uf.union(x, y) {
            for g in &gens {
                worklist.push((g.apply(x), g.apply(y)));
            }
        }
    }
    uf.labels()
}

/// Join in the congruence lattice: the congruence generated by the union.
pub fn congruence_join(alg: &FiniteAlgebra, a: &Congruence, b: &Congruence) -> Congruence {
    let n = alg.carrier_size();
    let mut pairs = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            if a.same_block(x, y) || b.same_block(x, y) {
                pairs.push((x, y));
            }
        }
    }
    principal_congruence(alg, &pairs)
}

/// All congruences of the algebra, sorted by index descending (identity
/// first, total last) with a lexicographic tiebreak for determinism.
///
/// Computed as the closure of the identity under joining principal
/// congruences; cross-checked against [`enumerate_congruences_brute`] in
/// the test suites.
pub fn enumerate_congruences(alg: &FiniteAlgebra) -> Result<Vec<Congruence>, AlgebraError> {
    enumerate_congruences_with(alg, &EnumLimits::default())
}

pub fn enumerate_congruences_with(
    alg: &FiniteAlgebra,
    limits: &EnumLimits,
) -> Result<Vec<Congruence>, AlgebraError> {
    let n = alg.carrier_size();
    if n > limits.max_congruence_carrier {
        return Err(AlgebraError::CarrierTooLarge {
            carrier: n,
            bound: limits.max_congruence_carrier,
        });
    }
    let mut principals = Vec::new();
    for x in 0..n {
        for y in (x + 1)..n {
            principals.push(principal_congruence(alg, &[(x, y)]));
        }
    }
    let mut found: HashSet<Congruence> = HashSet::new();
    let mut queue = vec![Congruence::identity(n)];
    found.insert(queue[0].clone());
    let mut at = 0;
    while at < queue.len() {
        let current = queue[at].clone();
        at += 1;
        for p in &principals {
            if p.refines(&current) {
                continue;
            }
            let joined = congruence_join(alg, &current, p);
            if found.insert(joined.clone()) {
                queue.push(joined);
            }
        }
    }
    let mut all: Vec<Congruence> = found.into_iter().collect();
    all.sort_by_key(|c| (Reverse(c.index()), c.labels().to_vec()));
    Ok(all)
}

/// Independent oracle: filter every partition of the carrier for
/// compatibility with every operation. Exponential (Bell numbers); meant
/// for small carriers.
pub fn enumerate_congruences_brute(alg: &FiniteAlgebra) -> Vec<Congruence> {
    let n = alg.carrier_size();
    let mut all = Vec::new();
    // restricted-growth strings enumerate set partitions
    let mut rgs = vec![0usize; n];
    loop {
        let c = Congruence::from_labels(&rgs);
        if c.is_congruence_of(alg) {
            all.push(c);
        }
        // advance to the next restricted-growth string
        let mut pos = n;
        loop {
            if pos <= 1 {
                all.sort_by_key(|c| (Reverse(c.index()), c.labels().to_vec()));
                all.dedup();
                return all;
            }
            pos -= 1;
            let cap = rgs[..pos].iter().copied().max().unwrap_or(0) + 1;
            if rgs[pos] < cap {
                rgs[pos] += 1;
                for slot in rgs.iter_mut().skip(pos + 1) {
                    *slot = 0;
                }
                break;
            }
            rgs[pos] = 0;
        }
    }
}

/// Smallest stable preorder containing the given pairs: closure under
/// reflexivity, transitivity and freezification images.
pub fn stable_preorder_closure(alg: &FiniteAlgebra, pairs: &[(usize, usize)]) -> PreorderRel {
    let n = alg.carrier_size();
    let gens = freezifications(alg);
    let mut rel = PreorderRel::identity(n);
    let mut worklist: Vec<(usize, usize)> = pairs.to_vec();
    while let Some((x, y)) = worklist.pop() {
        if rel.relates(x, y) {
            continue;
        }
        rel.insert(x, y);
        for g in &gens {
            worklist.push((g.apply(x), g.apply(y)));
        }
        // incremental transitive closure through the new pair
        for u in 0..n {
            if rel.relates(u, x) && !rel.relates(u, y) {
                worklist.push((u, y));
            }
        }
        for v in 0..n {
            if rel.relates(y, v) && !rel.relates(x, v) {
                worklist.push((x, v));
            }
        }
    }
    debug_assert!(rel.is_reflexive() && rel.is_transitive());
    rel
}

/// All stable preorders of the algebra: closure of the identity under
/// adjoining one pair at a time and re-closing. Exact at any carrier size;
/// the bound is a cost guard. Sorted for determinism.
pub fn enumerate_stable_preorders(alg: &FiniteAlgebra) -> Result<Vec<PreorderRel>, AlgebraError> {
    enumerate_stable_preorders_with(alg, &EnumLimits::default())
}

pub fn enumerate_stable_preorders_with(
    alg: &FiniteAlgebra,
    limits: &EnumLimits,
) -> Result<Vec<PreorderRel>, AlgebraError> {
    let n = alg.carrier_size();
    if n > limits.max_preorder_carrier {
        return Err(AlgebraError::CarrierTooLarge {
            carrier: n,
            bound: limits.max_preorder_carrier,
        });
    }
    let mut found: HashSet<PreorderRel> = HashSet::new();
    let mut queue = vec![stable_preorder_closure(alg, &[])];
    found.insert(queue[0].clone());
    let mut at = 0;
    while at < queue.len() {
        let current = queue[at].clone();
        at += 1;
        for x in 0..n {
            for y in 0..n {
                if current.relates(x, y) {
                    continue;
                }
                let mut pairs = current.pairs();
                pairs.push((x, y));
                let bigger = stable_preorder_closure(alg, &pairs);
                if found.insert(bigger.clone()) {
                    queue.push(bigger);
                }
            }
        }
    }
    let mut all: Vec<PreorderRel> = found.into_iter().collect();
    all.sort();
    Ok(all)
}

/// Independent oracle for tiny carriers: filter all reflexive relations.
pub fn enumerate_stable_preorders_brute(alg: &FiniteAlgebra) -> Vec<PreorderRel> {
    let n = alg.carrier_size();
    assert!(n <= 3, "brute-force preorder filter is for n <= 3");
    let off_diag: Vec<(usize, usize)> =
        (0..n).flat_map(|x| (0..n).map(move |y| (x, y))).filter(|&(x, y)| x != y).collect();
    let mut all = Vec::new();
    for choice in 0u64..(1 << off_diag.len()) {
        let pairs: Vec<(usize, usize)> = off_diag
            .iter()
            .enumerate()
            .filter(|(i, _)| (choice >> i) & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        let rel = PreorderRel::from_pairs(n, &pairs);
        if rel.is_transitive() && rel.is_stable_for(alg) {
            all.push(rel);
        }
    }
    all.sort();
    all.dedup();
    all
}

/// Quotient algebra by a congruence together with the projection labeling.
/// The projection is a surjective homomorphism; an incompatible relation is
/// rejected.
pub fn quotient(
    alg: &FiniteAlgebra,
    c: &Congruence,
) -> Result<(FiniteAlgebra, Vec<usize>), AlgebraError> {
    let n = alg.carrier_size();
    let index = c.index();
    let blocks = c.blocks();
    let reps: Vec<usize> = blocks.iter().map(|b| b[0]).collect();
    let mut ops = Vec::with_capacity(alg.operations().len());
    for op in alg.operations() {
        if !super::relations::compatible_with_table(n, op.arity, &op.table, |x, y| {
            c.same_block(x, y)
        }) {
            return Err(AlgebraError::NotACongruence { op: op.name.clone() });
        }
        let mut table = Vec::with_capacity(index.pow(op.arity as u32));
        super::for_each_tuple(index, op.arity, |labels| {
            let args: Vec<usize> = labels.iter().map(|&b| reps[b]).collect();
            table.push(c.block_of(alg.eval(op, &args)));
        });
        ops.push(Operation::new(op.name.clone(), op.arity, table));
    }
    let proj = c.labels().to_vec();
    Ok((FiniteAlgebra::new(index, ops)?, proj))
}
