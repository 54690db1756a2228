//! Exact arithmetic on windowed functions of the naturals.

mod checks;
mod natfun;
mod newton;

pub use checks::{
    check_clause_a, check_clause_b, check_clause_c, check_cp_nat, check_spp_nat,
    check_spp_nat_with, theorem_a_lattice_check, CpCounterexample, LatticeVerdict,
    NatPreorderFamily, SppCounterexample, WindowTooSmall,
};
pub use natfun::{
    floor_e_factorial, floor_e_factorial_window, zigzag_f, zigzag_f_window, zigzag_g, NatFun,
};
pub use newton::{binomial, idr_approximant, lcm_upto, newton_coefficients, IdrApproximant, NewtonRep};
