//! Named algebras and the function corpus the suites run on.

use crate::rng::Mcg64;
use congruence_core::arith::{floor_e_factorial_window, zigzag_g};
use congruence_core::{FiniteAlgebra, NatFun, Operation};
use num_bigint::BigUint;

/// The cyclic group of order `n` as a single binary operation.
pub fn cyclic_group(n: usize) -> FiniteAlgebra {
    let table: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    FiniteAlgebra::new(n, vec![Operation::new("add", 2, table)]).unwrap()
}

/// The ring of integers mod `n`: addition and multiplication.
pub fn modular_ring(n: usize) -> FiniteAlgebra {
    let add: Vec<usize> = (0..n * n).map(|i| (i / n + i % n) % n).collect();
    let mul: Vec<usize> = (0..n * n).map(|i| (i / n * (i % n)) % n).collect();
    FiniteAlgebra::new(
        n,
        vec![Operation::new("add", 2, add), Operation::new("mul", 2, mul)],
    )
    .unwrap()
}

/// The symmetric group on three points, elements being the permutations of
/// `{0,1,2}` in lexicographic order, composition `(p∘q)(x) = p(q(x))`.
pub fn symmetric_group_3() -> FiniteAlgebra {
    let perms: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index_of = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
    let mut table = Vec::with_capacity(36);
    for p in &perms {
        for q in &perms {
            let composed = [p[q[0]], p[q[1]], p[q[2]]];
            table.push(index_of(composed));
        }
    }
    FiniteAlgebra::new(6, vec![Operation::new("compose", 2, table)]).unwrap()
}

/// Boolean conjunction: a monoid that is not a group.
pub fn and_monoid() -> FiniteAlgebra {
    FiniteAlgebra::new(2, vec![Operation::new("and", 2, vec![0, 0, 0, 1])]).unwrap()
}

/// A random algebra drawn per the suite conventions: carrier 2..=bound,
/// one or two operations of arity at most 2, uniform tables.
pub fn random_algebra(rng: &mut Mcg64, max_carrier: usize) -> FiniteAlgebra {
    let n = 2 + rng.below(max_carrier as u64 - 1) as usize;
    let op_count = 1 + rng.below(2) as usize;
    let ops = (0..op_count)
        .map(|i| {
            let arity = rng.below(3) as usize;
            let table = (0..n.pow(arity as u32)).map(|_| rng.below(n as u64) as usize).collect();
            Operation::new(format!("f{i}"), arity, table)
        })
        .collect();
    FiniteAlgebra::new(n, ops).unwrap()
}

/// A random unary table over the carrier.
pub fn random_unary(rng: &mut Mcg64, n: usize) -> Vec<usize> {
    (0..n).map(|_| rng.below(n as u64) as usize).collect()
}

/// The function corpus: the named examples plus seeded random windows.
/// Spans every cell of the divisibility/growth/monotonicity truth table.
pub fn corpus(window: u64, random_count: usize, seed: u64) -> Vec<NatFun> {
    let mut fns = vec![
        NatFun::identity(window),
        NatFun::constant(window, 0),
        NatFun::constant(window, 1),
        NatFun::constant(window, 5),
        NatFun::constant(window, 16),
        NatFun::translation(window, 1),
        NatFun::translation(window, 3),
        NatFun::translation(window, 7),
        NatFun::homothety(window, 2),
        NatFun::homothety(window, 3),
        NatFun::homothety(window, 5),
        NatFun::poly(window, &[0, 0, 1]),    // x^2
        NatFun::poly(window, &[1, 0, 0, 1]), // x^3 + 1
        NatFun::poly(window, &[2, 1]),       // x + 2
        NatFun::falling_product(window, 1),
        NatFun::falling_product(window, 2),
        NatFun::from_fn("C(x,3)", window, |x| congruence_core::arith::binomial(x, 3)),
        zigzag_g(window),
        floor_e_factorial_window(window),
    ];
    let mut rng = Mcg64::new(seed);
    for i in 0..random_count {
        let values = (0..window).map(|_| BigUint::from(rng.below(64))).collect();
        fns.push(NatFun::new(format!("random:{i}"), values));
    }
    fns
}
