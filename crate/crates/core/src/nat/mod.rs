//! The concrete algebras on the naturals: ultimately periodic sets,
//! threshold/modulus congruences, lasso quotients, decrement lattices and
//! the finite-index stable preorders obtained by pullback.

mod cong;
mod lasso;
mod latt;
mod upset;

pub use cong::{is_saturated_up, syntactic_cong_up, ArithCong};
pub use lasso::{
    finite_index_stable_preorders, lasso_proj, lasso_proj_big, lasso_quotient,
    lasso_successor_algebra, truncate_preorder, NatError, NatStablePreorder, TruncatedPreorder,
};
pub use latt::{latt_suc, latt_window_members, suc_generators, LattVariant};
pub use upset::UpSet;

/// `{x | x + t ∈ set}`, exact on the whole of the naturals.
pub fn suc_preimage(set: &UpSet, t: u64) -> UpSet {
    set.suc_preimage(t)
}

/// `{y | n·y + m ∈ set}`, exact; covers the preimages under every
/// composition of translations and homotheties.
pub fn affine_preimage(set: &UpSet, n: u64, m: u64) -> UpSet {
    set.affine_preimage(n, m)
}
