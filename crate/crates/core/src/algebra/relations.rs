//! Congruences (as block labelings) and preorders (as bit matrices),
//! with the exhaustive compatibility check they share.

use super::{for_each_tuple, AlgebraError, FiniteAlgebra, Operation};

/// An equivalence relation on `{0..n-1}` stored as a block labeling.
///
/// Labels are normalized by first occurrence, so two values are equal as
/// `Congruence` exactly when they are the same partition.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Congruence {
    block_of: Vec<usize>,
}

impl Congruence {
    /// Builds from an arbitrary labeling, renumbering labels by first occurrence.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut rename: Vec<Option<usize>> = vec![None; labels.len() + 1];
        let mut next = 0;
        let mut block_of = Vec::with_capacity(labels.len());
        for &l in labels {
            let slot = rename.get_mut(l).expect("label out of range");
            let id = match slot {
                Some(id) => *id,
                None => {
                    *slot = Some(next);
                    next += 1;
                    next - 1
                }
            };
            block_of.push(id);
        }
        Congruence { block_of }
    }

    pub fn identity(n: usize) -> Self {
        Congruence { block_of: (0..n).collect() }
    }

    pub fn total(n: usize) -> Self {
        Congruence { block_of: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.block_of.len()
    }

    /// Number of blocks.
    pub fn index(&self) -> usize {
        self.block_of.iter().copied().max().map_or(0, |m| m + 1)
    }

    pub fn block_of(&self, x: usize) -> usize {
        self.block_of[x]
    }

    pub fn labels(&self) -> &[usize] {
        &self.block_of
    }

    pub fn same_block(&self, x: usize, y: usize) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.index()];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// True when every block of `self` is contained in a block of `coarser`.
    pub fn refines(&self, coarser: &Congruence) -> bool {
        debug_assert_eq!(self.len(), coarser.len());
        let mut image: Vec<Option<usize>> = vec![None; self.index()];
        for x in 0..self.len() {
            match image[self.block_of[x]] {
                None => image[self.block_of[x]] = Some(coarser.block_of[x]),
                Some(b) if b == coarser.block_of[x] => {}
                Some(_) => return false,
            }
        }
        true
    }

    /// Partition meet: blocks are intersections of blocks.
    pub fn meet(&self, other: &Congruence) -> Congruence {
        debug_assert_eq!(self.len(), other.len());
        let mut key = std::collections::HashMap::new();
        let mut labels = Vec::with_capacity(self.len());
        for x in 0..self.len() {
            let pair = (self.block_of[x], other.block_of[x]);
            let next = key.len();
            labels.push(*key.entry(pair).or_insert(next));
        }
        Congruence::from_labels(&labels)
    }

    /// True when the blocks are a union of classes of `mask`... see saturation:
    /// the subset is a union of blocks of `self`.
    pub fn saturates(&self, subset: &super::SubsetMask) -> bool {
        for x in 0..self.len() {
            for y in (x + 1)..self.len() {
                if self.same_block(x, y) && subset.contains(x) != subset.contains(y) {
                    return false;
                }
            }
        }
        true
    }

    /// Checks compatibility with every operation of the algebra.
    pub fn is_congruence_of(&self, alg: &FiniteAlgebra) -> bool {
        alg.operations().iter().all(|op| {
            compatible_with_table(alg.carrier_size(), op.arity, &op.table, |x, y| {
                self.same_block(x, y)
            })
        })
    }
}

/// A binary relation on `{0..n-1}` as one bit row per element (n <= 64).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PreorderRel {
    rows: Vec<u64>,
}

impl PreorderRel {
    pub fn identity(n: usize) -> Self {
        assert!(n <= 64);
        PreorderRel { rows: (0..n).map(|x| 1u64 << x).collect() }
    }

    pub fn total(n: usize) -> Self {
        assert!(n <= 64);
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        PreorderRel { rows: vec![full; n] }
    }

    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Self {
        let mut rel = PreorderRel::identity(n);
        for &(x, y) in pairs {
            rel.rows[x] |= 1 << y;
        }
        rel
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn relates(&self, x: usize, y: usize) -> bool {
        (self.rows[x] >> y) & 1 == 1
    }

    pub fn insert(&mut self, x: usize, y: usize) {
        self.rows[x] |= 1 << y;
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if self.relates(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn is_reflexive(&self) -> bool {
        (0..self.len()).all(|x| self.relates(x, x))
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.len();
        for x in 0..n {
            let mut reach = self.rows[x];
            for y in 0..n {
                if (reach >> y) & 1 == 1 {
                    reach |= self.rows[y];
                }
            }
            if reach != self.rows[x] {
                return false;
            }
        }
        true
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| self.relates(x, y) == self.relates(y, x)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.len();
        (0..n).all(|x| (0..n).all(|y| x == y || !(self.relates(x, y) && self.relates(y, x))))
    }

    /// Reflexive-transitive closure (Warshall on bit rows).
    pub fn reflexive_transitive_closure(&self) -> PreorderRel {
        let n = self.len();
        let mut rows = self.rows.clone();
        for (x, row) in rows.iter_mut().enumerate() {
            *row |= 1 << x;
        }
        for mid in 0..n {
            for x in 0..n {
                if (rows[x] >> mid) & 1 == 1 {
                    rows[x] |= rows[mid];
                }
            }
        }
        PreorderRel { rows }
    }

    /// The equivalence `x ~ y  iff  x <= y and y <= x`; a congruence
    /// whenever the preorder is stable.
    pub fn associated_congruence(&self) -> Congruence {
        let n = self.len();
        let mut labels = vec![usize::MAX; n];
        let mut next = 0;
        for x in 0..n {
            if labels[x] != usize::MAX {
                continue;
            }
            labels[x] = next;
            for y in (x + 1)..n {
                if self.relates(x, y) && self.relates(y, x) {
                    labels[y] = next;
                }
            }
            next += 1;
        }
        Congruence::from_labels(&labels)
    }

    /// Embeds a congruence as the symmetric preorder with the same classes.
    pub fn from_congruence(c: &Congruence) -> PreorderRel {
        let n = c.len();
        let mut rel = PreorderRel::identity(n);
        for x in 0..n {
            for y in 0..n {
                if c.same_block(x, y) {
                    rel.insert(x, y);
                }
            }
        }
        rel
    }

    /// Checks compatibility with every operation of the algebra.
    pub fn is_stable_for(&self, alg: &FiniteAlgebra) -> bool {
        alg.operations().iter().all(|op| {
            compatible_with_table(alg.carrier_size(), op.arity, &op.table, |x, y| {
                self.relates(x, y)
            })
        })
    }
}

/// The displayed compatibility condition, checked exhaustively: for every
/// pair of argument tuples related coordinatewise, the images are related.
/// `n^(2*arity)` tuples are inspected.
pub fn compatible_with_table(
    n: usize,
    arity: usize,
    table: &[usize],
    relates: impl Fn(usize, usize) -> bool,
) -> bool {
    let eval = |args: &[usize]| -> usize {
        let mut idx = 0;
        for &a in args {
            idx = idx * n + a;
        }
        table[idx]
    };
    let mut ok = true;
    for_each_tuple(n, arity, |xs| {
        if !ok {
            return;
        }
        for_each_tuple(n, arity, |ys| {
            if !ok {
                return;
            }
            if xs.iter().zip(ys.iter()).all(|(&x, &y)| relates(x, y)) && !relates(eval(xs), eval(ys))
            {
                ok = false;
            }
        });
    });
    ok
}

/// Fallible wrapper validating the table length against the carrier.
pub fn check_table_fits(n: usize, arity: usize, table: &[usize]) -> Result<(), AlgebraError> {
    let expected = n.pow(arity as u32);
    if table.len() != expected {
        return Err(AlgebraError::ArityMismatch { expected, got: table.len() });
    }
    if let Some(&bad) = table.iter().find(|&&v| v >= n) {
        return Err(AlgebraError::ElementRange { value: bad, carrier: n });
    }
    Ok(())
}

/// Convenience: compatibility of a relation with a standalone operation table.
pub fn is_compatible_op(
    n: usize,
    op: &Operation,
    relates: impl Fn(usize, usize) -> bool,
) -> Result<bool, AlgebraError> {
    check_table_fits(n, op.arity, &op.table)?;
    Ok(compatible_with_table(n, op.arity, &op.table, relates))
}
