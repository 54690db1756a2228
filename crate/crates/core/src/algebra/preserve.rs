//! Preservation predicates: does a function respect every congruence /
//! every stable preorder of the algebra?

use super::enumerate::{
    enumerate_congruences_with, enumerate_stable_preorders_with, EnumLimits,
};
use super::relations::{check_table_fits, compatible_with_table, Congruence, PreorderRel};
use super::{AlgebraError, FiniteAlgebra};

/// True when the function table is compatible with every congruence of the
/// algebra. The enumeration is exhaustive within the configured bound.
pub fn is_congruence_preserving(
    alg: &FiniteAlgebra,
    arity: usize,
    table: &[usize],
) -> Result<bool, AlgebraError> {
    is_congruence_preserving_with(alg, arity, table, &EnumLimits::default()).map(|w| w.is_none())
}

/// As [`is_congruence_preserving`], returning the first violated
/// congruence instead of a bare boolean.
pub fn is_congruence_preserving_with(
    alg: &FiniteAlgebra,
    arity: usize,
    table: &[usize],
    limits: &EnumLimits,
) -> Result<Option<Congruence>, AlgebraError> {
    let n = alg.carrier_size();
    check_table_fits(n, arity, table)?;
    for c in enumerate_congruences_with(alg, limits)? {
        if !compatible_with_table(n, arity, table, |x, y| c.same_block(x, y)) {
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// True when the function table is compatible with every stable preorder.
/// Implies congruence preservation (congruences are the symmetric stable
/// preorders).
pub fn is_stable_preorder_preserving(
    alg: &FiniteAlgebra,
    arity: usize,
    table: &[usize],
) -> Result<bool, AlgebraError> {
    is_stable_preorder_preserving_with(alg, arity, table, &EnumLimits::default())
        .map(|w| w.is_none())
}

/// As [`is_stable_preorder_preserving`], returning the first violated
/// preorder.
pub fn is_stable_preorder_preserving_with(
    alg: &FiniteAlgebra,
    arity: usize,
    table: &[usize],
    limits: &EnumLimits,
) -> Result<Option<PreorderRel>, AlgebraError> {
    let n = alg.carrier_size();
    check_table_fits(n, arity, table)?;
    for rel in enumerate_stable_preorders_with(alg, limits)? {
        if !compatible_with_table(n, arity, table, |x, y| rel.relates(x, y)) {
            return Ok(Some(rel));
        }
    }
    Ok(None)
}
