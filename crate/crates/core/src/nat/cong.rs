//! Congruences of the naturals: the identity and the threshold/modulus
//! family, plus the syntactic congruence of an ultimately periodic set.

use super::upset::UpSet;
use num_bigint::BigUint;
use std::fmt;

/// A congruence of the successor/addition/multiplication algebras on the
/// naturals: either the identity or `pair(a, k)`, relating `x, y` when
/// `x = y` or both lie at or above `a` and agree mod `k`. The pair form
/// has index `a + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ArithCong {
    Identity,
    Pair { threshold: u64, modulus: u64 },
}

impl ArithCong {
    pub fn pair(threshold: u64, modulus: u64) -> Self {
        assert!(modulus >= 1);
        ArithCong::Pair { threshold, modulus }
    }

    pub fn relates(&self, x: u64, y: u64) -> bool {
        match *self {
            ArithCong::Identity => x == y,
            ArithCong::Pair { threshold, modulus } => {
                x == y || (x >= threshold && y >= threshold && x % modulus == y % modulus)
            }
        }
    }

    pub fn relates_big(&self, x: &BigUint, y: &BigUint) -> bool {
        match *self {
            ArithCong::Identity => x == y,
            ArithCong::Pair { threshold, modulus } => {
                let t = BigUint::from(threshold);
                let m = BigUint::from(modulus);
                x == y || (*x >= t && *y >= t && x % &m == y % &m)
            }
        }
    }

    /// Number of classes; `None` for the identity on an infinite carrier.
    pub fn index(&self) -> Option<u64> {
        match *self {
            ArithCong::Identity => None,
            ArithCong::Pair { threshold, modulus } => Some(threshold + modulus),
        }
    }
}

impl fmt::Display for ArithCong {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ArithCong::Identity => write!(f, "identity"),
            ArithCong::Pair { threshold, modulus } => write!(f, "≡_{{{threshold},{modulus}}}"),
        }
    }
}

/// The coarsest congruence of `⟨N, suc⟩` saturating the set: Moore
/// refinement on a lasso representation of the set (unary automaton
/// minimization). The input lasso is deliberately padded — one extra
/// period absorbed into the tail, doubled cycle — so the refinement does
/// real work and serves as a route independent of the canonicalization
/// inside [`UpSet`].
pub fn syntactic_cong_up(set: &UpSet) -> ArithCong {
    let pad_tail = set.threshold() + set.period();
    let pad_cycle = 2 * set.period();
    let states = pad_tail + pad_cycle;
    let suc = |s: u64| if s + 1 < states { s + 1 } else { pad_tail };
    let accept = |s: u64| set.contains(s);

    // Moore refinement: split by acceptance, then by successor block
    let mut block_of: Vec<usize> = (0..states).map(|s| usize::from(accept(s))).collect();
    loop {
        let mut key = std::collections::HashMap::new();
        let mut next = Vec::with_capacity(states as usize);
        for s in 0..states {
            let sig = (block_of[s as usize], block_of[suc(s) as usize]);
            let fresh = key.len();
            next.push(*key.entry(sig).or_insert(fresh));
        }
        if next == block_of {
            break;
        }
        block_of = next;
    }

    // walk from state 0 until a block repeats: tail length, then cycle length
    let mut seen_at: Vec<Option<u64>> = vec![None; states as usize];
    let mut s = 0u64;
    let mut step = 0u64;
    loop {
        let b = block_of[s as usize];
        if let Some(first) = seen_at[b] {
            let threshold = first;
            let modulus = step - first;
            return ArithCong::pair(threshold, modulus);
        }
        seen_at[b] = Some(step);
        s = suc(s);
        step += 1;
    }
}

/// Is the set a union of classes of the congruence?
pub fn is_saturated_up(set: &UpSet, cong: &ArithCong) -> bool {
    match *cong {
        ArithCong::Identity => true,
        ArithCong::Pair { threshold, modulus } => {
            // saturation means the membership word is `modulus`-periodic
            // from `threshold` on, i.e. the canonical period divides the
            // modulus and the canonical threshold is at most the threshold
            modulus % set.period() == 0 && set.threshold() <= threshold
        }
    }
}
