//! Windowed verdicts on functions of the naturals: the divisibility,
//! growth and monotonicity clauses, congruence- and stable-preorder
//! preservation against the finite-index families, and the decrement
//! lattice condition.
//!
//! Quantifiers over all naturals are checked on `[0, N)` and every verdict
//! is labeled with its window: a refutation is conclusive, agreement is
//! evidence. The preservation checks exercise genuine stable preorders
//! only (lasso pullbacks and truncations of the usual order), so a
//! reported violation always exhibits a real witness.

use super::natfun::NatFun;
use crate::nat::{
    finite_index_stable_preorders, latt_window_members, LattVariant, NatStablePreorder, UpSet,
};
use num_bigint::BigUint;
use num_traits::One;
use std::fmt;

/// The window is too short for the requested bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowTooSmall {
    pub window: u64,
    pub needed: u64,
}

impl fmt::Display for WindowTooSmall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "window {} too small, need at least {}", self.window, self.needed)
    }
}

impl std::error::Error for WindowTooSmall {}

/// Divisibility clause: gaps divide value differences. Returns the
/// lexicographically least violating pair, if any.
pub fn check_clause_a(f: &NatFun) -> Option<(u64, u64)> {
    let n = f.window();
    for x in 0..n {
        for y in (x + 1)..n {
            let gap = BigUint::from(y - x);
            let (lo, hi) = if f.value(x) <= f.value(y) {
                (f.value(x), f.value(y))
            } else {
                (f.value(y), f.value(x))
            };
            if (hi - lo) % gap != BigUint::from(0u8) {
                return Some((x, y));
            }
        }
    }
    None
}

/// Growth clause: values dominate the argument. In flat mode a constant
/// window also passes.
pub fn check_clause_b(f: &NatFun, flat: bool) -> bool {
    let above = (0..f.window()).all(|x| *f.value(x) >= BigUint::from(x));
    if flat {
        let constant = f.values().windows(2).all(|w| w[0] == w[1]);
        constant || above
    } else {
        above
    }
}

/// Monotonicity clause.
pub fn check_clause_c(f: &NatFun) -> bool {
    f.values().windows(2).all(|w| w[0] <= w[1])
}

/// Witness of a congruence-preservation failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpCounterexample {
    pub threshold: u64,
    pub modulus: u64,
    pub x: u64,
    pub y: u64,
}

impl fmt::Display for CpCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "≡_{{{},{}}} relates {} and {} but not their images",
            self.threshold, self.modulus, self.x, self.y
        )
    }
}

/// Compatibility with every threshold/modulus congruence within the
/// bounds, on the window. Agrees with the divisibility clause plus flat
/// growth on functions where the full-quantifier equivalence applies; the
/// suites assert that agreement on the whole corpus.
pub fn check_cp_nat(
    f: &NatFun,
    a_max: u64,
    k_max: u64,
) -> Result<Option<CpCounterexample>, WindowTooSmall> {
    let n = f.window();
    if a_max + k_max >= n {
        return Err(WindowTooSmall { window: n, needed: a_max + k_max + 1 });
    }
    // saturated u64 views keep the pair loop allocation-free: thresholds
    // are tiny, so clamping huge values to u64::MAX is exact for the
    // comparisons below
    use num_traits::ToPrimitive;
    let sat: Vec<u64> = f.values().iter().map(|v| v.to_u64().unwrap_or(u64::MAX)).collect();
    for modulus in 1..=k_max {
        let m = BigUint::from(modulus);
        let res: Vec<u64> =
            f.values().iter().map(|v| (v % &m).to_u64().expect("residue fits")).collect();
        for threshold in 0..=a_max {
            for x in 0..n {
                for y in (x + 1)..n {
                    // arguments related: x == y impossible here, so both
                    // at or above the threshold and congruent mod the modulus
                    if x >= threshold && (y - x) % modulus == 0 {
                        let (ix, iy) = (x as usize, y as usize);
                        let images_related = f.value(x) == f.value(y)
                            || (sat[ix] >= threshold && sat[iy] >= threshold && res[ix] == res[iy]);
                        if !images_related {
                            return Ok(Some(CpCounterexample { threshold, modulus, x, y }));
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Reusable family of finite-index stable preorders for the preservation
/// check: the lasso pullbacks within the bounds. Building the family once
/// and sharing it across a corpus avoids re-enumerating per function.
pub struct NatPreorderFamily {
    pub a_max: u64,
    pub k_max: u64,
    pub pullbacks: Vec<NatStablePreorder>,
}

impl NatPreorderFamily {
    pub fn new(a_max: u64, k_max: u64) -> Self {
        let pullbacks =
            finite_index_stable_preorders(a_max, k_max).expect("per-lasso bound is set internally");
        NatPreorderFamily { a_max, k_max, pullbacks }
    }
}

/// Witness of a stable-preorder-preservation failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SppCounterexample {
    Pullback { threshold: u64, modulus: u64, x: u64, y: u64 },
    Truncation { cut: BigUint, x: u64, y: u64 },
}

impl fmt::Display for SppCounterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SppCounterexample::Pullback { threshold, modulus, x, y } => write!(
                f,
                "a stable preorder pulled back through ≡_{{{threshold},{modulus}}} relates {x},{y} but not their images"
            ),
            SppCounterexample::Truncation { cut, x, y } => write!(
                f,
                "the usual order truncated at {cut} relates {x},{y} but not their images"
            ),
        }
    }
}

/// Compatibility with every finite-index stable preorder in the family,
/// plus the truncations of the usual order at every window point and just
/// above the largest window value. The truncations are the constructions
/// that separate congruence preservation from stable-preorder
/// preservation when values outgrow any fixed index bound: a pullback
/// family alone cannot see the non-monotonicity of a function whose
/// values all land deep in the cycle.
pub fn check_spp_nat_with(
    f: &NatFun,
    family: &NatPreorderFamily,
) -> Result<Option<SppCounterexample>, WindowTooSmall> {
    let n = f.window();
    if family.a_max + family.k_max >= n {
        return Err(WindowTooSmall { window: n, needed: family.a_max + family.k_max + 1 });
    }
    // project the window arguments and values once per base, then test
    // each pullback by table lookup
    let mut projections: std::collections::HashMap<(u64, u64), (Vec<usize>, Vec<usize>)> =
        std::collections::HashMap::new();
    for p in &family.pullbacks {
        let crate::nat::ArithCong::Pair { threshold, modulus } = p.base() else {
            unreachable!("pullbacks have pair bases")
        };
        let (args, vals) = projections.entry((threshold, modulus)).or_insert_with(|| {
            (
                (0..n).map(|x| crate::nat::lasso_proj(threshold, modulus, x)).collect(),
                (0..n).map(|x| crate::nat::lasso_proj_big(threshold, modulus, f.value(x))).collect(),
            )
        });
        let rel = p.quotient_rel();
        for x in 0..n as usize {
            for y in 0..n as usize {
                if rel.relates(args[x], args[y]) && !rel.relates(vals[x], vals[y]) {
                    return Ok(Some(SppCounterexample::Pullback {
                        threshold,
                        modulus,
                        x: x as u64,
                        y: y as u64,
                    }));
                }
            }
        }
    }
    let mut cuts: Vec<BigUint> = (0..=n).map(BigUint::from).collect();
    let above_all = f.values().iter().max().cloned().unwrap_or_default() + BigUint::one();
    cuts.push(above_all);
    for cut in cuts {
        use num_traits::ToPrimitive;
        let cut_on_window = cut.to_u64().unwrap_or(u64::MAX);
        let img_ge_cut: Vec<bool> = f.values().iter().map(|v| *v >= cut).collect();
        for x in 0..n {
            for y in 0..n {
                let dom = x <= y || y >= cut_on_window;
                let img = img_ge_cut[y as usize] || f.value(x) <= f.value(y);
                if dom && !img {
                    return Ok(Some(SppCounterexample::Truncation { cut, x, y }));
                }
            }
        }
    }
    Ok(None)
}

/// One-shot variant of [`check_spp_nat_with`].
pub fn check_spp_nat(
    f: &NatFun,
    a_max: u64,
    k_max: u64,
) -> Result<Option<SppCounterexample>, WindowTooSmall> {
    check_spp_nat_with(f, &NatPreorderFamily::new(a_max, k_max))
}

/// Verdict of the windowed decrement-lattice condition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LatticeVerdict {
    /// Some member of the lattice agrees with the preimage on the window.
    WindowConsistent,
    /// No member matches: conclusive, the preimage is outside the lattice.
    WindowRefuted,
}

/// Does the preimage of the set under the function agree with some member
/// of the decrement lattice on the window? Every member's restriction is
/// inspected, including for sets whose lattice is too large to enumerate.
pub fn theorem_a_lattice_check(f: &NatFun, set: &UpSet, variant: LattVariant) -> LatticeVerdict {
    let n = f.window() as usize;
    let mut target = crate::algebra::SubsetMask::empty(n);
    for x in 0..f.window() {
        if set.contains_big(f.value(x)) {
            target.insert(x as usize);
        }
    }
    if latt_window_members(set, n, variant).contains(&target) {
        LatticeVerdict::WindowConsistent
    } else {
        LatticeVerdict::WindowRefuted
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::natfun::{floor_e_factorial_window, zigzag_g};

    #[test]
    fn clause_a_examples() {
        assert_eq!(check_clause_a(&NatFun::identity(16)), None);
        // the falling product passes divisibility yet dips below the line
        let falling = NatFun::falling_product(16, 2);
        assert_eq!(check_clause_a(&falling), None);
        assert!(!check_clause_b(&falling, false));
        assert!(!check_clause_b(&falling, true));
        // x^2 + (x mod 3) breaks divisibility, least witness reported
        let wobble = NatFun::from_fn("wobble", 16, |x| BigUint::from(x * x + x % 3));
        let (x, y) = check_clause_a(&wobble).expect("violation");
        let gap = y - x;
        let fx = wobble.value(x).clone();
        let fy = wobble.value(y).clone();
        let diff = if fy >= fx { fy - fx } else { fx - fy };
        assert!(diff % BigUint::from(gap) != BigUint::from(0u8));
    }

    #[test]
    fn clause_b_examples() {
        let c = NatFun::constant(12, 3);
        assert!(check_clause_b(&c, true));
        assert!(!check_clause_b(&c, false));
        assert!(check_clause_b(&floor_e_factorial_window(12), false));
        assert!(check_clause_b(&floor_e_factorial_window(12), true));
        let clipped = NatFun::from_fn("x-1", 12, |x| BigUint::from(x.saturating_sub(1)));
        assert!(!check_clause_b(&clipped, false));
    }

    #[test]
    fn clause_c_examples() {
        assert!(check_clause_c(&NatFun::identity(12)));
        assert!(check_clause_c(&NatFun::constant(12, 5)));
        assert!(!check_clause_c(&zigzag_g(16)));
    }

    #[test]
    fn cp_examples() {
        assert_eq!(check_cp_nat(&NatFun::identity(32), 6, 6).unwrap(), None);
        assert_eq!(check_cp_nat(&NatFun::homothety(32, 2), 6, 6).unwrap(), None);
        // x + (x mod 2) fails at ≡_{0,3}: both paths agree on the verdict
        let f = NatFun::from_fn("x+(x mod 2)", 32, |x| BigUint::from(x + x % 2));
        let witness = check_cp_nat(&f, 6, 6).unwrap().expect("violated");
        assert!(check_clause_a(&f).is_some());
        let cong = crate::nat::ArithCong::pair(witness.threshold, witness.modulus);
        assert!(cong.relates(witness.x, witness.y));
        assert!(!cong.relates_big(f.value(witness.x), f.value(witness.y)));
    }

    #[test]
    fn cp_window_guard() {
        assert!(check_cp_nat(&NatFun::identity(10), 6, 6).is_err());
    }

    #[test]
    fn spp_examples() {
        let family = NatPreorderFamily::new(3, 3);
        assert_eq!(check_spp_nat_with(&NatFun::identity(24), &family).unwrap(), None);
        // the zigzag approximant preserves congruences but not preorders
        let g = zigzag_g(24);
        assert_eq!(check_cp_nat(&g, 3, 3).unwrap(), None);
        let witness = check_spp_nat_with(&g, &family).unwrap().expect("non-monotone");
        assert!(matches!(witness, SppCounterexample::Truncation { .. }));
        // the floor function satisfies everything
        assert_eq!(check_spp_nat_with(&floor_e_factorial_window(24), &family).unwrap(), None);
    }

    #[test]
    fn lattice_check_examples() {
        // the identity finds the generator itself
        let id = NatFun::identity(24);
        for set in [UpSet::progression(5, 3), UpSet::finite_set([2, 4])] {
            assert_eq!(
                theorem_a_lattice_check(&id, &set, LattVariant::Plain),
                LatticeVerdict::WindowConsistent
            );
        }
        // a constant inside the set needs the adjoined bound
        let c = NatFun::constant(24, 5);
        let set = UpSet::progression(5, 3);
        assert_eq!(
            theorem_a_lattice_check(&c, &set, LattVariant::Bounded),
            LatticeVerdict::WindowConsistent
        );
    }

    #[test]
    fn zigzag_refutes_a_final_segment_instance() {
        // cutting a final segment exactly at an even-step value catches the
        // dip: the preimage contains the even point, skips the odd one, and
        // resumes, so it is no suffix of the window and no member matches
        let g = zigzag_g(24);
        let refuted = (0..4u64).any(|p| {
            let cut64 = u64::try_from(g.value(2 * p)).expect("window values fit");
            let set = UpSet::final_segment(cut64);
            theorem_a_lattice_check(&g, &set, LattVariant::Bounded) == LatticeVerdict::WindowRefuted
        });
        assert!(refuted);
    }
}
