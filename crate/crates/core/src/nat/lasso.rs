//! Lasso quotients of the naturals and the finite-index stable preorders
//! obtained by pulling back stable preorders of a lasso.

use crate::algebra::{
    enumerate_stable_preorders_with, AlgebraError, EnumLimits, FiniteAlgebra, Operation,
    PreorderRel,
};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use std::fmt;

/// Errors from the windowed constructions on the naturals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NatError {
    /// The relation handed to a construction is not a preorder on its window.
    NotAPreorder,
    /// The relation is not compatible with the successor on its window.
    NotSucStable,
    /// A cut point lies outside the window.
    CutOutOfRange { cut: usize, window: usize },
}

impl fmt::Display for NatError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NatError::NotAPreorder => write!(f, "relation is not reflexive and transitive"),
            NatError::NotSucStable => write!(f, "relation is not successor-stable on the window"),
            NatError::CutOutOfRange { cut, window } => {
                write!(f, "cut {cut} outside window of length {window}")
            }
        }
    }
}

impl std::error::Error for NatError {}

/// Projection of a natural onto the lasso of tail `a` and cycle `k`.
pub fn lasso_proj(threshold: u64, modulus: u64, x: u64) -> usize {
    if x < threshold + modulus {
        x as usize
    } else {
        (threshold + (x - threshold) % modulus) as usize
    }
}

/// Projection for values beyond machine range.
pub fn lasso_proj_big(threshold: u64, modulus: u64, x: &BigUint) -> usize {
    match x.to_u64() {
        Some(small) => lasso_proj(threshold, modulus, small),
        None => {
            let r = (x - BigUint::from(threshold)) % BigUint::from(modulus);
            (threshold + r.to_u64().expect("modulus fits u64")) as usize
        }
    }
}

/// The quotient of `⟨N; suc, +, ×⟩` by the threshold/modulus congruence,
/// realized on `{0, ..., a+k-1}`: past the cap, results re-enter the cycle
/// at `a` plus the excess mod `k`. The projection is a homomorphism with
/// the congruence as kernel.
pub fn lasso_quotient(threshold: u64, modulus: u64) -> FiniteAlgebra {
    assert!(modulus >= 1);
    let size = (threshold + modulus) as usize;
    let fold = |v: u64| -> usize {
        if v < threshold + modulus {
            v as usize
        } else {
            (threshold + (v - threshold) % modulus) as usize
        }
    };
    let suc: Vec<usize> = (0..size as u64).map(|x| fold(x + 1)).collect();
    let mut add = Vec::with_capacity(size * size);
    let mut mul = Vec::with_capacity(size * size);
    for x in 0..size as u64 {
        for y in 0..size as u64 {
            add.push(fold(x + y));
            mul.push(fold(x * y));
        }
    }
    FiniteAlgebra::new(
        size,
        vec![
            Operation::new("suc", 1, suc),
            Operation::new("add", 2, add),
            Operation::new("mul", 2, mul),
        ],
    )
    .expect("lasso tables are total by construction")
}

/// The successor-only reduct of [`lasso_quotient`], the algebra whose
/// stable preorders pull back to the finite-index stable preorders of the
/// naturals.
pub fn lasso_successor_algebra(threshold: u64, modulus: u64) -> FiniteAlgebra {
    let full = lasso_quotient(threshold, modulus);
    let suc = full.operation("suc").unwrap().clone();
    FiniteAlgebra::new(full.carrier_size(), vec![suc]).unwrap()
}

/// A finite-index stable preorder of the naturals: the pullback of a
/// stable preorder on a lasso quotient through the projection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatStablePreorder {
    threshold: u64,
    modulus: u64,
    quotient_rel: PreorderRel,
}

impl NatStablePreorder {
    pub fn new(threshold: u64, modulus: u64, quotient_rel: PreorderRel) -> Self {
        assert_eq!(quotient_rel.len() as u64, threshold + modulus);
        NatStablePreorder { threshold, modulus, quotient_rel }
    }

    pub fn base(&self) -> super::cong::ArithCong {
        super::cong::ArithCong::pair(self.threshold, self.modulus)
    }

    pub fn quotient_rel(&self) -> &PreorderRel {
        &self.quotient_rel
    }

    pub fn relates(&self, x: u64, y: u64) -> bool {
        self.quotient_rel.relates(
            lasso_proj(self.threshold, self.modulus, x),
            lasso_proj(self.threshold, self.modulus, y),
        )
    }

    pub fn relates_big(&self, x: &BigUint, y: &BigUint) -> bool {
        self.quotient_rel.relates(
            lasso_proj_big(self.threshold, self.modulus, x),
            lasso_proj_big(self.threshold, self.modulus, y),
        )
    }

    /// Index of the pullback: classes of the associated congruence.
    pub fn index(&self) -> u64 {
        self.quotient_rel.associated_congruence().index() as u64
    }

    fn dedup_key(&self, window: u64) -> Vec<u8> {
        let mut key = vec![0u8; ((window * window) as usize).div_ceil(8)];
        for x in 0..window {
            for y in 0..window {
                if self.relates(x, y) {
                    let bit = (x * window + y) as usize;
                    key[bit / 8] |= 1 << (bit % 8);
                }
            }
        }
        key
    }
}

impl fmt::Display for NatStablePreorder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "pullback through {} of {} pairs", self.base(), self.quotient_rel.pairs().len())
    }
}

/// Every finite-index stable preorder of the naturals realizable over
/// lassos with `threshold <= a_max` and `modulus <= k_max`: stable
/// preorders of each successor-only lasso, pulled back and deduplicated as
/// relations (distinct parameters can pull back to the same relation).
/// Deterministic order: by (threshold, modulus), then relation order.
pub fn finite_index_stable_preorders(
    a_max: u64,
    k_max: u64,
) -> Result<Vec<NatStablePreorder>, AlgebraError> {
    let mut out: Vec<NatStablePreorder> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    // window long enough that agreement on it implies equality on all of
    // N for any two pullbacks in range: past max threshold, differences
    // are (lcm of moduli)-biperiodic
    let mut lcm_all = 1u64;
    for k in 1..=k_max {
        lcm_all = num_integer::lcm(lcm_all, k);
    }
    let window = a_max + 2 * lcm_all + 2;
    for threshold in 0..=a_max {
        for modulus in 1..=k_max {
            let alg = lasso_successor_algebra(threshold, modulus);
            let limits = EnumLimits {
                max_preorder_carrier: (threshold + modulus) as usize,
                ..EnumLimits::default()
            };
            for rel in enumerate_stable_preorders_with(&alg, &limits)? {
                let candidate = NatStablePreorder::new(threshold, modulus, rel);
                if seen.insert(candidate.dedup_key(window)) {
                    out.push(candidate);
                }
            }
        }
    }
    Ok(out)
}

/// A windowed stable preorder truncated at a cut: the original pairs plus
/// everything below anything at or beyond the cut. Finite index, at most
/// `cut + 1` classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedPreorder {
    rel: PreorderRel,
    cut: usize,
}

impl TruncatedPreorder {
    pub fn relates(&self, x: usize, y: usize) -> bool {
        self.rel.relates(x, y)
    }

    pub fn window(&self) -> usize {
        self.rel.len()
    }

    pub fn cut(&self) -> usize {
        self.cut
    }

    pub fn index(&self) -> usize {
        self.rel.associated_congruence().index()
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        self.rel.associated_congruence().blocks()
    }

    pub fn as_rel(&self) -> &PreorderRel {
        &self.rel
    }
}

/// Augments a successor-stable preorder on a window with `{(z, t) | t >=
/// cut}` and validates the result: reflexive, transitive, still
/// successor-stable, index at most `cut + 1`.
pub fn truncate_preorder(rel: &PreorderRel, cut: usize) -> Result<TruncatedPreorder, NatError> {
    let window = rel.len();
    if cut >= window {
        return Err(NatError::CutOutOfRange { cut, window });
    }
    if !rel.is_reflexive() || !rel.is_transitive() {
        return Err(NatError::NotAPreorder);
    }
    if !suc_stable_on_window(rel) {
        return Err(NatError::NotSucStable);
    }
    let mut out = rel.clone();
    for x in 0..window {
        for y in cut..window {
            out.insert(x, y);
        }
    }
    debug_assert!(out.is_reflexive() && out.is_transitive());
    debug_assert!(suc_stable_on_window(&out));
    let truncated = TruncatedPreorder { rel: out, cut };
    debug_assert!(truncated.index() <= cut + 1);
    Ok(truncated)
}

fn suc_stable_on_window(rel: &PreorderRel) -> bool {
    let n = rel.len();
    (0..n.saturating_sub(1))
        .all(|x| (0..n - 1).all(|y| !rel.relates(x, y) || rel.relates(x + 1, y + 1)))
}
