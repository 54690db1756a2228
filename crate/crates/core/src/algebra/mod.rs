//! Finite algebras and their relational machinery.
//!
//! A [`FiniteAlgebra`] is a carrier `{0..n-1}` together with named
//! operations given as total tables in row-major order (last argument
//! varies fastest). On top of that this module provides:
//!
//! * 1-freezifications and their composition closure ([`freezifications`],
//!   [`freez_star`]),
//! * congruences and stable preorders with exhaustive compatibility
//!   checks, principal/join generation and full enumeration,
//! * syntactic congruence and syntactic preorder of a subset, computed by
//!   partition refinement / greatest-fixpoint iteration and cross-checked
//!   against the definition,
//! * quotient algebras and the preservation predicates.

mod enumerate;
mod freeze;
mod preserve;
mod relations;
mod syntactic;

pub use enumerate::{
    congruence_join, enumerate_congruences, enumerate_congruences_brute,
    enumerate_congruences_with, enumerate_stable_preorders, enumerate_stable_preorders_brute,
    enumerate_stable_preorders_with, principal_congruence, quotient, stable_preorder_closure,
    EnumLimits,
};
pub use freeze::{compose, freez_star, freezifications, verify_freezification_lemma, UnaryMap};
pub use preserve::{
    is_congruence_preserving, is_congruence_preserving_with, is_stable_preorder_preserving,
    is_stable_preorder_preserving_with,
};
pub use relations::{check_table_fits, compatible_with_table, is_compatible_op, Congruence, PreorderRel};
pub use syntactic::{
    syntactic_congruence, syntactic_congruence_brute, syntactic_preorder,
    syntactic_preorder_brute,
};

use std::fmt;

/// Errors from constructing or combining finite-algebra values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlgebraError {
    /// Carrier size must be at least 1.
    EmptyCarrier,
    /// An operation table has the wrong length for its arity.
    TableSize {
        op: String,
        expected: usize,
        got: usize,
    },
    /// A table entry is outside the carrier.
    EntryRange { op: String, index: usize, value: usize },
    /// Two operations share a name.
    DuplicateName(String),
    /// A function table passed to a check does not fit the carrier.
    ArityMismatch { expected: usize, got: usize },
    /// An element index is outside the carrier.
    ElementRange { value: usize, carrier: usize },
    /// Enumeration was requested beyond the configured carrier bound.
    CarrierTooLarge { carrier: usize, bound: usize },
    /// A relation passed as a congruence is not compatible with some operation.
    NotACongruence { op: String },
    /// The carrier exceeds the 64-element cap of the bitmask representation.
    CarrierTooWide(usize),
}

impl fmt::Display for AlgebraError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraError::EmptyCarrier => write!(f, "carrier must be nonempty"),
            AlgebraError::TableSize { op, expected, got } => {
                write!(f, "operation {op}: table has {got} entries, expected {expected}")
            }
            AlgebraError::EntryRange { op, index, value } => {
                write!(f, "operation {op}: entry {index} is {value}, outside the carrier")
            }
            AlgebraError::DuplicateName(name) => write!(f, "duplicate operation name {name}"),
            AlgebraError::ArityMismatch { expected, got } => {
                write!(f, "table length {got} does not match carrier^arity = {expected}")
            }
            AlgebraError::ElementRange { value, carrier } => {
                write!(f, "element {value} outside carrier of size {carrier}")
            }
            AlgebraError::CarrierTooLarge { carrier, bound } => {
                write!(f, "carrier size {carrier} exceeds enumeration bound {bound}")
            }
            AlgebraError::NotACongruence { op } => {
                write!(f, "relation is not compatible with operation {op}")
            }
            AlgebraError::CarrierTooWide(n) => {
                write!(f, "carrier size {n} exceeds the 64-element subset-mask cap")
            }
        }
    }
}

impl std::error::Error for AlgebraError {}

/// A named finitary operation given as a total table.
///
/// The table is row-major with the last argument varying fastest: for
/// arity `r` and arguments `(a_1, ..., a_r)` the value sits at index
/// `((a_1 * n + a_2) * n + ...) * n + a_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Operation {
    pub name: String,
    pub arity: usize,
    pub table: Vec<usize>,
}

impl Operation {
    pub fn new(name: impl Into<String>, arity: usize, table: Vec<usize>) -> Self {
        Operation { name: name.into(), arity, table }
    }
}

/// A finite algebra: carrier `{0..n-1}` plus operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    carrier: usize,
    ops: Vec<Operation>,
}

impl FiniteAlgebra {
    /// Validates table sizes, entry ranges and name uniqueness.
    pub fn new(carrier: usize, ops: Vec<Operation>) -> Result<Self, AlgebraError> {
        if carrier == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let mut seen = std::collections::HashSet::new();
        for op in &ops {
            if !seen.insert(op.name.clone()) {
                return Err(AlgebraError::DuplicateName(op.name.clone()));
            }
            let expected = carrier.checked_pow(op.arity as u32).unwrap_or(usize::MAX);
            if op.table.len() != expected {
                return Err(AlgebraError::TableSize {
                    op: op.name.clone(),
                    expected,
                    got: op.table.len(),
                });
            }
            for (index, &value) in op.table.iter().enumerate() {
                if value >= carrier {
                    return Err(AlgebraError::EntryRange { op: op.name.clone(), index, value });
                }
            }
        }
        Ok(FiniteAlgebra { carrier, ops })
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier
    }

    pub fn operations(&self) -> &[Operation] {
        &self.ops
    }

    pub fn operation(&self, name: &str) -> Option<&Operation> {
        self.ops.iter().find(|op| op.name == name)
    }

    /// Evaluates an operation on an argument tuple.
    pub fn eval(&self, op: &Operation, args: &[usize]) -> usize {
        debug_assert_eq!(args.len(), op.arity);
        let mut idx = 0;
        for &a in args {
            idx = idx * self.carrier + a;
        }
        op.table[idx]
    }
}

/// Membership mask over the carrier of a finite algebra (at most 64 elements).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask {
    len: usize,
    bits: u64,
}

impl SubsetMask {
    pub fn empty(len: usize) -> Self {
        assert!(len <= 64, "subset masks cap at 64 elements");
        SubsetMask { len, bits: 0 }
    }

    pub fn full(len: usize) -> Self {
        assert!(len <= 64, "subset masks cap at 64 elements");
        let bits = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        SubsetMask { len, bits }
    }

    pub fn from_elements(len: usize, elements: &[usize]) -> Result<Self, AlgebraError> {
        let mut mask = SubsetMask::empty(len);
        for &e in elements {
            if e >= len {
                return Err(AlgebraError::ElementRange { value: e, carrier: len });
            }
            mask.bits |= 1 << e;
        }
        Ok(mask)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == SubsetMask::full(self.len).bits
    }

    pub fn contains(&self, x: usize) -> bool {
        x < self.len && (self.bits >> x) & 1 == 1
    }

    pub fn insert(&mut self, x: usize) {
        debug_assert!(x < self.len);
        self.bits |= 1 << x;
    }

    pub fn union(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        SubsetMask { len: self.len, bits: self.bits | other.bits }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        debug_assert_eq!(self.len, other.len);
        SubsetMask { len: self.len, bits: self.bits & other.bits }
    }

    pub fn complement(&self) -> Self {
        SubsetMask { len: self.len, bits: SubsetMask::full(self.len).bits & !self.bits }
    }

    pub fn elements(&self) -> Vec<usize> {
        (0..self.len).filter(|&x| self.contains(x)).collect()
    }

    /// Preimage under a unary map on the same carrier.
    pub fn preimage(&self, image: &[usize]) -> Self {
        let mut out = SubsetMask::empty(self.len);
        for (x, &fx) in image.iter().enumerate() {
            if self.contains(fx) {
                out.bits |= 1 << x;
            }
        }
        out
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for x in self.elements() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// Iterates all argument tuples of the given arity over `{0..n-1}` in
/// row-major order (last coordinate fastest).
pub(crate) fn for_each_tuple(n: usize, arity: usize, mut visit: impl FnMut(&[usize])) {
    let mut tuple = vec![0usize; arity];
    loop {
        visit(&tuple);
        let mut pos = arity;
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            tuple[pos] += 1;
            if tuple[pos] < n {
                break;
            }
            tuple[pos] = 0;
        }
    }
}
