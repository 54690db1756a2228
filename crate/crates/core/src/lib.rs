//! Computational kernel for congruence and stable-preorder preservation.
//!
//! The crate has four areas:
//!
//! * [`algebra`] — finite algebras given by operation tables, their
//!   1-freezifications, congruences and stable preorders, syntactic
//!   relations of a subset, quotients and preservation checks.
//! * [`closure`] — families of sets closed under union/intersection
//!   (optionally bounds and complement), generated from the preimages of a
//!   set under the freezification maps, with derivation witnesses.
//! * [`nat`] — the concrete algebras on the naturals (successor, addition,
//!   multiplication): ultimately periodic sets in canonical form, the
//!   `a`-threshold `k`-period congruences, lasso quotients, decrement
//!   lattices and finite-index stable preorders obtained by pullback.
//! * [`arith`] — exact big-integer arithmetic on windowed functions on the
//!   naturals: divisibility/growth/monotonicity clauses, congruence- and
//!   preorder-preservation checks, Newton coefficients and the lcm-rounded
//!   approximant, plus the named example functions.
//!
//! Everything is a pure function of its inputs; all values are immutable
//! after construction and safe to share across threads.

pub mod algebra;
pub mod arith;
pub mod closure;
pub mod format;
pub mod nat;

pub use algebra::{
    enumerate_congruences, enumerate_stable_preorders, freez_star, freezifications,
    is_congruence_preserving, is_stable_preorder_preserving, principal_congruence, quotient,
    syntactic_congruence, syntactic_preorder, verify_freezification_lemma, AlgebraError,
    Congruence, EnumLimits, FiniteAlgebra, Operation, PreorderRel, SubsetMask, UnaryMap,
};
pub use arith::{
    check_clause_a, check_clause_b, check_clause_c, check_cp_nat, check_spp_nat,
    check_spp_nat_with, floor_e_factorial, idr_approximant, lcm_upto, newton_coefficients,
    theorem_a_lattice_check, zigzag_f, zigzag_g, IdrApproximant, LatticeVerdict,
    NatPreorderFamily, NatFun, NewtonRep,
};
pub use closure::{
    close, f_inverse_by_representation, preimage_generators, ClosureKind, Derivation,
    FamilyElement, SetFamily,
};
pub use nat::{
    affine_preimage, finite_index_stable_preorders, is_saturated_up, lasso_proj, lasso_quotient,
    lasso_successor_algebra, latt_suc, latt_window_members, suc_generators, suc_preimage,
    syntactic_cong_up, truncate_preorder, ArithCong, LattVariant, NatError, NatStablePreorder,
    TruncatedPreorder, UpSet,
};
