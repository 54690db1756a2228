//! Families of sets closed under union and intersection (optionally the
//! bounds and complement), generated from the preimages of a set under the
//! freezification maps.
//!
//! Members are deduplicated by canonical form — bitmasks over a finite
//! carrier, canonical quadruples for ultimately periodic subsets of the
//! naturals — which is what makes the fixpoint terminate: every member is
//! a union of atoms of the finite partition generated by the generators.
//! Each member carries a derivation over the generators, stored as a DAG
//! with shared subterms and rendered depth-limited.

use crate::algebra::{
    freez_star, freezifications, syntactic_congruence, syntactic_preorder, AlgebraError,
    FiniteAlgebra, SubsetMask,
};
use serde::Serialize;
use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

/// What the family is closed under.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosureKind {
    /// Union and intersection only.
    Lattice,
    /// Union, intersection, and the adjoined empty set and universe.
    BoundedLattice,
    /// Bounded and additionally closed under complement.
    Boolean,
}

/// How a member arose. Indices refer to earlier members of the family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Derivation {
    Generator(usize),
    EmptyBound,
    UniverseBound,
    Union(usize, usize),
    Intersect(usize, usize),
    Complement(usize),
}

/// Set representation usable as a closure-family member.
pub trait FamilyElement: Clone + Eq + Ord + Hash {
    fn union(&self, other: &Self) -> Self;
    fn intersect(&self, other: &Self) -> Self;
    fn complement(&self) -> Self;
    fn empty_like(&self) -> Self;
    fn universe_like(&self) -> Self;
    fn render(&self) -> String;
}

impl FamilyElement for SubsetMask {
    fn union(&self, other: &Self) -> Self {
        SubsetMask::union(self, other)
    }
    fn intersect(&self, other: &Self) -> Self {
        SubsetMask::intersect(self, other)
    }
    fn complement(&self) -> Self {
        SubsetMask::complement(self)
    }
    fn empty_like(&self) -> Self {
        SubsetMask::empty(self.len())
    }
    fn universe_like(&self) -> Self {
        SubsetMask::full(self.len())
    }
    fn render(&self) -> String {
        format!("{self} (0x{bits:x})", bits = self.bits())
    }
}

/// A finite family of sets closed under the operations of its kind,
/// remembering how every member was derived from the generators.
#[derive(Clone, Debug)]
pub struct SetFamily<S> {
    kind: ClosureKind,
    members: Vec<S>,
    derivations: Vec<Derivation>,
    generator_tags: Vec<String>,
}

impl<S: FamilyElement> SetFamily<S> {
    pub fn kind(&self) -> ClosureKind {
        self.kind
    }

    pub fn members(&self) -> &[S] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn generator_tags(&self) -> &[String] {
        &self.generator_tags
    }

    pub fn contains_set(&self, s: &S) -> bool {
        self.members.contains(s)
    }

    /// Membership with a derivation witness over the generators, rendered
    /// with at most `depth` operator layers before eliding.
    pub fn contains_with_witness(&self, s: &S, depth: usize) -> Option<String> {
        let at = self.members.iter().position(|m| m == s)?;
        Some(self.witness(at, depth))
    }

    /// Renders the derivation of member `at`.
    pub fn witness(&self, at: usize, depth: usize) -> String {
        match &self.derivations[at] {
            Derivation::Generator(g) => self.generator_tags[*g].clone(),
            Derivation::EmptyBound => "∅".to_string(),
            Derivation::UniverseBound => "U".to_string(),
            _ if depth == 0 => "…".to_string(),
            Derivation::Union(a, b) => {
                format!("({} ∪ {})", self.witness(*a, depth - 1), self.witness(*b, depth - 1))
            }
            Derivation::Intersect(a, b) => {
                format!("({} ∩ {})", self.witness(*a, depth - 1), self.witness(*b, depth - 1))
            }
            Derivation::Complement(a) => format!("∁{}", self.witness(*a, depth - 1)),
        }
    }

    /// Converts the member representation, keeping derivations and tags.
    pub fn map_members<T: FamilyElement>(self, f: impl Fn(S) -> T) -> SetFamily<T> {
        SetFamily {
            kind: self.kind,
            members: self.members.into_iter().map(f).collect(),
            derivations: self.derivations,
            generator_tags: self.generator_tags,
        }
    }

    /// The family as JSON: universe descriptor, closure kind, members with
    /// witnesses, generator provenance.
    pub fn export(&self, universe: &str) -> serde_json::Value {
        serde_json::json!({
            "universe": universe,
            "closure": self.kind,
            "generators": self.generator_tags,
            "members": self
                .members
                .iter()
                .enumerate()
                .map(|(i, m)| {
                    serde_json::json!({
                        "set": m.render(),
                        "witness": self.witness(i, 6),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Least family containing the generators and closed under the kind's
/// operations. Worklist order: generators first (bounds next when
/// adjoined), then pairwise intersections, then unions, then complements,
/// round-robin until fixpoint; this fixes the member order for goldens.
pub fn close<S: FamilyElement>(generators: Vec<(S, String)>, kind: ClosureKind) -> SetFamily<S> {
    let mut members: Vec<S> = Vec::new();
    let mut derivations: Vec<Derivation> = Vec::new();
    let mut index: HashMap<S, usize> = HashMap::new();
    let mut tags = Vec::new();
    let push = |members: &mut Vec<S>,
                    derivations: &mut Vec<Derivation>,
                    index: &mut HashMap<S, usize>,
                    set: S,
                    how: Derivation| {
        if let std::collections::hash_map::Entry::Vacant(e) = index.entry(set.clone()) {
            e.insert(members.len());
            members.push(set);
            derivations.push(how);
        }
    };
    for (g, tag) in generators {
        let gi = tags.len();
        tags.push(tag);
        push(&mut members, &mut derivations, &mut index, g, Derivation::Generator(gi));
    }
    if !members.is_empty() && kind != ClosureKind::Lattice {
        let empty = members[0].empty_like();
        let universe = members[0].universe_like();
        push(&mut members, &mut derivations, &mut index, empty, Derivation::EmptyBound);
        push(&mut members, &mut derivations, &mut index, universe, Derivation::UniverseBound);
    }
    // frontier rounds: only pairs touching a member added since the last
    // round are combined, so each unordered pair is visited once
    let mut fresh_from = 0;
    loop {
        let frozen = members.len();
        for a in 0..frozen {
            for b in (a + 1).max(fresh_from)..frozen {
                let meet = members[a].intersect(&members[b]);
                push(&mut members, &mut derivations, &mut index, meet, Derivation::Intersect(a, b));
            }
        }
        for a in 0..frozen {
            for b in (a + 1).max(fresh_from)..frozen {
                let join = members[a].union(&members[b]);
                push(&mut members, &mut derivations, &mut index, join, Derivation::Union(a, b));
            }
        }
        if kind == ClosureKind::Boolean {
            for a in fresh_from..frozen {
                let co = members[a].complement();
                push(&mut members, &mut derivations, &mut index, co, Derivation::Complement(a));
            }
        }
        if members.len() == frozen {
            return SetFamily { kind, members, derivations, generator_tags: tags };
        }
        fresh_from = frozen;
    }
}

/// Closure of `{subset}` under preimage by every map in the composition
/// closure of the algebra's freezifications. Iterating the generating
/// freezifications reaches every composition, so the closure is materialized
/// without enumerating the star. Each produced set is tagged with the map
/// that yielded it.
pub fn preimage_generators(
    alg: &FiniteAlgebra,
    subset: &SubsetMask,
) -> Vec<(SubsetMask, String)> {
    let gens = freezifications(alg);
    let mut out: Vec<(SubsetMask, String)> = vec![(*subset, "L".to_string())];
    let mut seen: HashMap<SubsetMask, ()> = HashMap::new();
    seen.insert(*subset, ());
    let mut at = 0;
    while at < out.len() {
        let (current, tag) = out[at].clone();
        at += 1;
        for g in &gens {
            let pre = current.preimage(&g.image);
            if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(pre) {
                e.insert(());
                let gtag = g.provenance.first().cloned().unwrap_or_default();
                out.push((pre, format!("{gtag}⁻¹({tag})")));
            }
        }
    }
    out
}

/// Outcome of evaluating the representation formulas for `f⁻¹(L)`.
#[derive(Clone, Debug)]
pub struct InverseImageReport {
    /// `f` is compatible with the syntactic congruence of the subset.
    pub congruence_preserved: bool,
    /// `f` is compatible with the syntactic preorder of the subset.
    pub preorder_preserved: bool,
    /// Boolean-combination evaluation (needs the congruence), with its
    /// agreement flag against the pointwise preimage.
    pub boolean_formula: Option<(SubsetMask, bool)>,
    /// Positive-combination evaluation (needs the preorder), with flag.
    pub lattice_formula: Option<(SubsetMask, bool)>,
    /// The pointwise preimage, for reference.
    pub direct: SubsetMask,
}

/// Which representation preconditions failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreservesNeither;

impl fmt::Display for PreservesNeither {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "function preserves neither the syntactic congruence nor the syntactic preorder of the subset")
    }
}

impl std::error::Error for PreservesNeither {}

/// Evaluates the union-of-intersections representations of `f⁻¹(L)` over
/// the maps of the composition closure and compares them with the
/// pointwise preimage. The preconditions are checked, not assumed: the
/// boolean formula needs `f` to preserve the syntactic congruence, the
/// lattice formula the syntactic preorder.
pub fn f_inverse_by_representation(
    alg: &FiniteAlgebra,
    subset: &SubsetMask,
    f: &[usize],
) -> Result<Result<InverseImageReport, PreservesNeither>, AlgebraError> {
    let n = alg.carrier_size();
    crate::algebra::check_table_fits(n, 1, f)?;
    let direct = subset.preimage(f);
    let cong = syntactic_congruence(alg, subset);
    let preord = syntactic_preorder(alg, subset);
    let congruence_preserved =
        crate::algebra::compatible_with_table(n, 1, f, |x, y| cong.same_block(x, y));
    let preorder_preserved =
        crate::algebra::compatible_with_table(n, 1, f, |x, y| preord.relates(x, y));
    if !congruence_preserved && !preorder_preserved {
        return Ok(Err(PreservesNeither));
    }
    let star = freez_star(alg);
    let preimages: Vec<SubsetMask> = star.iter().map(|g| subset.preimage(&g.image)).collect();
    let anchors = direct.elements();
    let boolean_formula = congruence_preserved.then(|| {
        let mut acc = SubsetMask::empty(n);
        for &a in &anchors {
            // empty intersections fall back to the full carrier
            let mut cell = SubsetMask::full(n);
            for (g, pre) in preimages.iter().enumerate() {
                if subset.contains(star[g].apply(a)) {
                    cell = cell.intersect(pre);
                } else {
                    cell = cell.intersect(&pre.complement());
                }
            }
            acc = acc.union(&cell);
        }
        (acc, acc == direct)
    });
    let lattice_formula = preorder_preserved.then(|| {
        let mut acc = SubsetMask::empty(n);
        for &a in &anchors {
            let mut cell = SubsetMask::full(n);
            for (g, pre) in preimages.iter().enumerate() {
                if subset.contains(star[g].apply(a)) {
                    cell = cell.intersect(pre);
                }
            }
            acc = acc.union(&cell);
        }
        (acc, acc == direct)
    });
    Ok(Ok(InverseImageReport {
        congruence_preserved,
        preorder_preserved,
        boolean_formula,
        lattice_formula,
        direct,
    }))
}
