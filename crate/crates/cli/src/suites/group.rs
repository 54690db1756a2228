//! Collapse suites for special structure: group operations force every
//! finite-index stable preorder to be a congruence and every stable order
//! to be the identity; unit rings force every stable preorder to be a
//! congruence.

use crate::report::{InstanceVerdict, SuiteReport};
use congruence_core::algebra::{enumerate_stable_preorders_with, EnumLimits};
use congruence_core::{FiniteAlgebra, Operation, PreorderRel};
use std::fmt;
use std::time::Instant;

/// The structural precondition failed; a rejection, not a suite failure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureError {
    NoGroupOperation,
    NotAUnitRing(String),
}

impl fmt::Display for StructureError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StructureError::NoGroupOperation => {
                write!(f, "no binary operation satisfies the group axioms")
            }
            StructureError::NotAUnitRing(why) => write!(f, "not a unit ring: {why}"),
        }
    }
}

impl std::error::Error for StructureError {}

/// Finds a binary operation that is associative with a two-sided identity
/// and inverses.
pub fn detect_group_operation(alg: &FiniteAlgebra) -> Option<&Operation> {
    let n = alg.carrier_size();
    alg.operations().iter().find(|op| {
        if op.arity != 2 {
            return false;
        }
        let at = |x: usize, y: usize| op.table[x * n + y];
        let associative = (0..n).all(|x| {
            (0..n).all(|y| (0..n).all(|z| at(at(x, y), z) == at(x, at(y, z))))
        });
        if !associative {
            return false;
        }
        let identity = (0..n).find(|&e| (0..n).all(|x| at(e, x) == x && at(x, e) == x));
        match identity {
            None => false,
            Some(e) => (0..n).all(|x| (0..n).any(|y| at(x, y) == e && at(y, x) == e)),
        }
    })
}

fn preorders_within(alg: &FiniteAlgebra) -> Vec<PreorderRel> {
    let n = alg.carrier_size();
    let limits = EnumLimits { max_preorder_carrier: n.max(6), ..EnumLimits::default() };
    enumerate_stable_preorders_with(alg, &limits).expect("limit raised to the carrier")
}

/// Every stable preorder of a group expansion must be symmetric (a
/// congruence), and every antisymmetric one the identity relation.
pub fn verify_group_collapse(alg: &FiniteAlgebra) -> Result<SuiteReport, StructureError> {
    let start = Instant::now();
    let op = detect_group_operation(alg).ok_or(StructureError::NoGroupOperation)?;
    let label = format!("group[{}]/n={}", op.name, alg.carrier_size());
    let mut verdicts = Vec::new();
    let preorders = preorders_within(alg);
    for (i, rel) in preorders.iter().enumerate() {
        let key = format!("{label}/preorder{i:03}");
        if !rel.is_symmetric() {
            verdicts.push(InstanceVerdict::fail(
                key,
                format!("stable preorder is not a congruence: pairs {:?}", rel.pairs()),
            ));
        } else if rel.is_antisymmetric() && *rel != PreorderRel::identity(alg.carrier_size()) {
            verdicts.push(InstanceVerdict::fail(key, "a stable order other than the identity"));
        } else {
            verdicts.push(InstanceVerdict::pass(key));
        }
    }
    Ok(SuiteReport::new(label, None, None, verdicts, start.elapsed()))
}

/// Checks the unit-ring axioms on the named addition/multiplication pair.
pub fn detect_unit_ring(alg: &FiniteAlgebra) -> Result<(), StructureError> {
    let n = alg.carrier_size();
    let add = alg
        .operation("add")
        .filter(|op| op.arity == 2)
        .ok_or_else(|| StructureError::NotAUnitRing("missing binary `add`".into()))?;
    let mul = alg
        .operation("mul")
        .filter(|op| op.arity == 2)
        .ok_or_else(|| StructureError::NotAUnitRing("missing binary `mul`".into()))?;
    let a = |x: usize, y: usize| add.table[x * n + y];
    let m = |x: usize, y: usize| mul.table[x * n + y];
    let assoc = |f: &dyn Fn(usize, usize) -> usize| {
        (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| f(f(x, y), z) == f(x, f(y, z)))))
    };
    if !assoc(&a) {
        return Err(StructureError::NotAUnitRing("addition is not associative".into()));
    }
    if !(0..n).all(|x| (0..n).all(|y| a(x, y) == a(y, x))) {
        return Err(StructureError::NotAUnitRing("addition is not commutative".into()));
    }
    let zero = (0..n)
        .find(|&e| (0..n).all(|x| a(e, x) == x))
        .ok_or_else(|| StructureError::NotAUnitRing("no additive zero".into()))?;
    if !(0..n).all(|x| (0..n).any(|y| a(x, y) == zero)) {
        return Err(StructureError::NotAUnitRing("no additive inverses".into()));
    }
    if !assoc(&m) {
        return Err(StructureError::NotAUnitRing("multiplication is not associative".into()));
    }
    if !(0..n).any(|e| (0..n).all(|x| m(e, x) == x && m(x, e) == x)) {
        return Err(StructureError::NotAUnitRing("no multiplicative unit".into()));
    }
    let distributes = (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                m(x, a(y, z)) == a(m(x, y), m(x, z)) && m(a(y, z), x) == a(m(y, x), m(z, x))
            })
        })
    });
    if !distributes {
        return Err(StructureError::NotAUnitRing("multiplication does not distribute".into()));
    }
    Ok(())
}

/// Every stable preorder of a unit-ring expansion must be symmetric.
pub fn verify_ring_collapse(alg: &FiniteAlgebra) -> Result<SuiteReport, StructureError> {
    let start = Instant::now();
    detect_unit_ring(alg)?;
    let label = format!("ring/n={}", alg.carrier_size());
    let mut verdicts = Vec::new();
    for (i, rel) in preorders_within(alg).iter().enumerate() {
        let key = format!("{label}/preorder{i:03}");
        if rel.is_symmetric() {
            verdicts.push(InstanceVerdict::pass(key));
        } else {
            verdicts.push(InstanceVerdict::fail(
                key,
                format!("stable preorder is not a congruence: pairs {:?}", rel.pairs()),
            ));
        }
    }
    Ok(SuiteReport::new(label, None, None, verdicts, start.elapsed()))
}
