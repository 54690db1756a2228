//! Lattices of subsets of the naturals generated from an ultimately
//! periodic set and closed under decrement.
//!
//! Iterating the one-step preimage of the successor on an ultimately
//! periodic set cycles after finitely many steps, so the generator family
//! is finite and the closure engine applies as over a finite carrier. For
//! windowed questions about sets with astronomically large thresholds the
//! full family is unrepresentable, but its restriction to a window is not:
//! unions and intersections distribute over restriction, so the window
//! restrictions of all members are exactly the closure of the window
//! restrictions of the generators.

use super::upset::UpSet;
use crate::algebra::SubsetMask;
use crate::closure::{close, ClosureKind, SetFamily};
use std::collections::BTreeSet;

/// Which decrement lattice to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LattVariant {
    /// Smallest decrement-closed lattice containing the set.
    Plain,
    /// The plain lattice with the empty set and the naturals adjoined.
    Bounded,
    /// Bounded and closed under complement.
    Boolean,
}

impl LattVariant {
    fn kind(self) -> ClosureKind {
        match self {
            LattVariant::Plain => ClosureKind::Lattice,
            LattVariant::Bounded => ClosureKind::BoundedLattice,
            LattVariant::Boolean => ClosureKind::Boolean,
        }
    }
}

/// The distinct iterated decrement preimages of the set, each tagged with
/// its shift. Finitely many: thresholds shrink to zero and then the
/// residues only rotate.
pub fn suc_generators(set: &UpSet) -> Vec<(UpSet, String)> {
    let mut out: Vec<(UpSet, String)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut current = set.clone();
    let mut t = 0u64;
    loop {
        if !seen.insert(current.clone()) {
            return out;
        }
        let tag = if t == 0 { "L".to_string() } else { format!("suc^-{t}(L)") };
        out.push((current.clone(), tag));
        current = current.suc_preimage(1);
        t += 1;
    }
}

/// A set with threshold at most `tail` and period dividing `cycle`,
/// packed into the bits of its membership word on `[0, tail + cycle)`.
/// Union and intersection are bitwise; the representation is unique for
/// fixed widths, which makes closure over these words both exact and
/// cheap.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PeriodicWord {
    tail: u64,
    cycle: u64,
    bits: u64,
}

impl PeriodicWord {
    fn width(&self) -> u64 {
        self.tail + self.cycle
    }

    fn full(tail: u64, cycle: u64) -> u64 {
        let w = tail + cycle;
        if w == 64 {
            u64::MAX
        } else {
            (1u64 << w) - 1
        }
    }

    fn pack(set: &UpSet, tail: u64, cycle: u64) -> Self {
        let mut bits = 0u64;
        for x in 0..tail + cycle {
            if set.contains(x) {
                bits |= 1 << x;
            }
        }
        PeriodicWord { tail, cycle, bits }
    }

    fn unpack(&self) -> UpSet {
        UpSet::new(
            self.tail,
            self.cycle,
            (0..self.tail).filter(|&x| (self.bits >> x) & 1 == 1),
            (0..self.cycle).filter(|&r| (self.bits >> (self.tail + r)) & 1 == 1),
        )
    }
}

impl crate::closure::FamilyElement for PeriodicWord {
    fn union(&self, other: &Self) -> Self {
        PeriodicWord { bits: self.bits | other.bits, ..*self }
    }
    fn intersect(&self, other: &Self) -> Self {
        PeriodicWord { bits: self.bits & other.bits, ..*self }
    }
    fn complement(&self) -> Self {
        PeriodicWord { bits: !self.bits & Self::full(self.tail, self.cycle), ..*self }
    }
    fn empty_like(&self) -> Self {
        PeriodicWord { bits: 0, ..*self }
    }
    fn universe_like(&self) -> Self {
        PeriodicWord { bits: Self::full(self.tail, self.cycle), ..*self }
    }
    fn render(&self) -> String {
        self.unpack().to_string()
    }
}

/// The decrement lattice of the set as an explicit family of ultimately
/// periodic sets.
pub fn latt_suc(set: &UpSet, variant: LattVariant) -> SetFamily<UpSet> {
    let generators = suc_generators(set);
    // every shift has threshold at most the set's and period dividing it,
    // and both survive union/intersection/complement, so when the shared
    // window is narrow the whole closure runs on packed words
    let tail = generators.iter().map(|(g, _)| g.threshold()).max().unwrap_or(0);
    let cycle = generators
        .iter()
        .map(|(g, _)| g.period())
        .fold(1u64, num_integer::lcm);
    if tail + cycle <= 64 {
        let packed = generators
            .into_iter()
            .map(|(g, tag)| (PeriodicWord::pack(&g, tail, cycle), tag))
            .collect();
        close(packed, variant.kind()).map_members(|w| w.unpack())
    } else {
        close(generators, variant.kind())
    }
}

/// Window restrictions of every member of the decrement lattice, as masks
/// over `[0, window)`, even when the family itself is too large to
/// enumerate (huge thresholds). The candidate shifts are the ones that can
/// produce distinct restrictions: small shifts, shifts landing the window
/// on the finite part, and shifts within one period of the threshold.
pub fn latt_window_members(set: &UpSet, window: usize, variant: LattVariant) -> Vec<SubsetMask> {
    assert!(window <= 64, "window restrictions use 64-bit masks");
    let w = window as u64;
    let mut shifts: BTreeSet<u64> = (0..=w + 1).collect();
    for &f in set.finite_part() {
        for back in 0..w {
            shifts.insert(f.saturating_sub(back));
        }
    }
    let a = set.threshold();
    for near in a.saturating_sub(w)..=a.saturating_add(set.period()) {
        shifts.insert(near);
    }
    let mut gens: Vec<(SubsetMask, String)> = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for t in shifts {
        let mut mask = SubsetMask::empty(window);
        for x in 0..w {
            if set.contains(x + t) {
                mask.insert(x as usize);
            }
        }
        if seen.insert(mask) {
            gens.push((mask, format!("suc^-{t}(L)∩W")));
        }
    }
    let family = close(gens, variant.kind());
    family.members().to_vec()
}
