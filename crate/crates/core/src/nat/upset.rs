//! Ultimately periodic subsets of the naturals in canonical form.
//!
//! A set is stored as a threshold `a`, a period `k >= 1`, a finite part
//! `F ⊆ [0,a)` and residues `D ⊆ [0,k)`; membership is `x ∈ F` below the
//! threshold and `(x - a) mod k ∈ D` from it on. The constructor
//! canonicalizes: first the period is minimized (divisor scan over the
//! residue word), then the threshold (absorbing the longest suffix into
//! the periodic part, rotating the residues one step per absorbed
//! position). Two values are equal as `UpSet` exactly when they are the
//! same subset, which is what the closure engine's deduplication relies
//! on. A full residue set collapses to period 1 during the divisor scan.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;
use std::collections::BTreeSet;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UpSet {
    threshold: u64,
    period: u64,
    finite: BTreeSet<u64>,
    residues: BTreeSet<u64>,
}

impl UpSet {
    /// Builds and canonicalizes. Entries of `finite` outside `[0,
    /// threshold)` and residues outside `[0, period)` are rejected.
    pub fn new(
        threshold: u64,
        period: u64,
        finite: impl IntoIterator<Item = u64>,
        residues: impl IntoIterator<Item = u64>,
    ) -> Self {
        assert!(period >= 1, "period must be positive");
        let finite: BTreeSet<u64> = finite.into_iter().collect();
        let residues: BTreeSet<u64> = residues.into_iter().collect();
        assert!(finite.iter().all(|&x| x < threshold), "finite part exceeds threshold");
        assert!(residues.iter().all(|&r| r < period), "residue exceeds period");
        let mut set = UpSet { threshold, period, finite, residues };
        set.minimize_period();
        set.minimize_threshold();
        set
    }

    fn minimize_period(&mut self) {
        let k = self.period;
        for d in 1..=k {
            if !k.is_multiple_of(d) {
                continue;
            }
            let invariant = (0..k).all(|r| {
                self.residues.contains(&r) == self.residues.contains(&((r + d) % k))
            });
            if invariant {
                self.residues.retain(|&r| r < d);
                self.period = d;
                return;
            }
        }
    }

    fn minimize_threshold(&mut self) {
        while self.threshold > 0 {
            let last = self.threshold - 1;
            let in_finite = self.finite.contains(&last);
            let via_period = self.residues.contains(&(self.period - 1));
            if in_finite != via_period {
                return;
            }
            self.finite.remove(&last);
            self.threshold = last;
            // rotate residues one step so the periodic part now starts at `last`
            let rotated: BTreeSet<u64> =
                self.residues.iter().map(|&r| (r + 1) % self.period).collect();
            self.residues = rotated;
        }
    }

    pub fn empty() -> Self {
        UpSet::new(0, 1, [], [])
    }

    pub fn naturals() -> Self {
        UpSet::new(0, 1, [], [0])
    }

    /// A finite set.
    pub fn finite_set(elements: impl IntoIterator<Item = u64>) -> Self {
        let elements: BTreeSet<u64> = elements.into_iter().collect();
        let threshold = elements.iter().next_back().map_or(0, |&m| m + 1);
        UpSet::new(threshold, 1, elements, [])
    }

    /// The arithmetic progression `start + step·N` (step >= 1).
    pub fn progression(start: u64, step: u64) -> Self {
        assert!(step >= 1);
        UpSet::new(start, step, [], [0])
    }

    /// The final segment `start + N`.
    pub fn final_segment(start: u64) -> Self {
        UpSet::progression(start, 1)
    }

    pub fn threshold(&self) -> u64 {
        self.threshold
    }

    pub fn period(&self) -> u64 {
        self.period
    }

    pub fn finite_part(&self) -> &BTreeSet<u64> {
        &self.finite
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    pub fn is_empty_set(&self) -> bool {
        self.finite.is_empty() && self.residues.is_empty()
    }

    pub fn is_naturals(&self) -> bool {
        self.threshold == 0 && self.period == 1 && self.residues.contains(&0)
    }

    /// A set is finite exactly when its canonical residue set is empty.
    pub fn is_finite(&self) -> bool {
        self.residues.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        if x < self.threshold {
            self.finite.contains(&x)
        } else {
            self.residues.contains(&((x - self.threshold) % self.period))
        }
    }

    pub fn contains_big(&self, x: &BigUint) -> bool {
        match x.to_u64() {
            Some(small) => self.contains(small),
            None => {
                // beyond u64 the threshold is certainly passed
                let rem = (x - BigUint::from(self.threshold)) % BigUint::from(self.period);
                self.residues.contains(&rem.to_u64().expect("period fits u64"))
            }
        }
    }

    /// Membership word on `[0, len)`, the oracle used to cross-check the
    /// exact set algebra.
    pub fn window(&self, len: u64) -> Vec<bool> {
        (0..len).map(|x| self.contains(x)).collect()
    }

    fn combine(&self, other: &Self, op: impl Fn(bool, bool) -> bool) -> Self {
        let threshold = self.threshold.max(other.threshold);
        let period = self.period.lcm(&other.period);
        let finite = (0..threshold).filter(|&x| op(self.contains(x), other.contains(x)));
        let residues =
            (0..period).filter(|&r| op(self.contains(threshold + r), other.contains(threshold + r)));
        UpSet::new(threshold, period, finite, residues)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.combine(other, |a, b| a && b)
    }

    pub fn complement(&self) -> Self {
        let finite = (0..self.threshold).filter(|&x| !self.contains(x));
        let residues = (0..self.period).filter(|r| !self.residues.contains(r));
        UpSet::new(self.threshold, self.period, finite, residues)
    }

    /// `{x | x + t ∈ self}`, exact.
    pub fn suc_preimage(&self, t: u64) -> Self {
        let threshold = self.threshold.saturating_sub(t);
        let period = self.period;
        let finite: Vec<u64> = (0..threshold).filter(|&x| self.contains(x + t)).collect();
        // for x >= threshold we have x + t >= self.threshold
        let offset = (threshold + t - self.threshold) % period;
        let residues: Vec<u64> =
            (0..period).filter(|&r| self.residues.contains(&((r + offset) % period))).collect();
        UpSet::new(threshold, period, finite, residues)
    }

    /// `{y | n·y + m ∈ self}`, exact; `n = 0` degenerates to a bound.
    pub fn affine_preimage(&self, n: u64, m: u64) -> Self {
        if n == 0 {
            return if self.contains(m) { UpSet::naturals() } else { UpSet::empty() };
        }
        let threshold = if m >= self.threshold {
            0
        } else {
            (self.threshold - m).div_ceil(n)
        };
        let period = self.period / n.gcd(&self.period);
        let at = |y: u64| -> bool {
            let v = (n as u128) * (y as u128) + (m as u128);
            // y >= threshold puts v past self.threshold; reduce mod the period
            if v < self.threshold as u128 {
                return false;
            }
            let r = ((v - self.threshold as u128) % self.period as u128) as u64;
            self.residues.contains(&r)
        };
        let finite: Vec<u64> = (0..threshold).filter(|&y| self.contains_u128_mul(n, y, m)).collect();
        let residues: Vec<u64> = (0..period).filter(|&r| at(threshold + r)).collect();
        UpSet::new(threshold, period, finite, residues)
    }

    fn contains_u128_mul(&self, n: u64, y: u64, m: u64) -> bool {
        let v = (n as u128) * (y as u128) + (m as u128);
        if v < self.threshold as u128 {
            self.finite.contains(&(v as u64))
        } else {
            let r = ((v - self.threshold as u128) % self.period as u128) as u64;
            self.residues.contains(&r)
        }
    }
}

impl fmt::Display for UpSet {
    /// Canonical quadruple form; parses back bit-exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |set: &BTreeSet<u64>| {
            set.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        };
        write!(
            f,
            "up(a={},k={},F={{{}}},D={{{}}})",
            self.threshold,
            self.period,
            list(&self.finite),
            list(&self.residues)
        )
    }
}

impl crate::closure::FamilyElement for UpSet {
    fn union(&self, other: &Self) -> Self {
        UpSet::union(self, other)
    }
    fn intersect(&self, other: &Self) -> Self {
        UpSet::intersect(self, other)
    }
    fn complement(&self) -> Self {
        UpSet::complement(self)
    }
    fn empty_like(&self) -> Self {
        UpSet::empty()
    }
    fn universe_like(&self) -> Self {
        UpSet::naturals()
    }
    fn render(&self) -> String {
        self.to_string()
    }
}
