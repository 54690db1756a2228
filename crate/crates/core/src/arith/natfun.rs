//! Windowed functions on the naturals with exact big-integer values, and
//! the named example functions.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A function known exactly on a window `[0, N)`. No floating point
/// anywhere: values are arbitrary-precision naturals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatFun {
    label: String,
    values: Vec<BigUint>,
}

impl NatFun {
    pub fn new(label: impl Into<String>, values: Vec<BigUint>) -> Self {
        NatFun { label: label.into(), values }
    }

    pub fn from_fn(label: impl Into<String>, window: u64, f: impl Fn(u64) -> BigUint) -> Self {
        NatFun { label: label.into(), values: (0..window).map(f).collect() }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn window(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn value(&self, x: u64) -> &BigUint {
        &self.values[x as usize]
    }

    pub fn identity(window: u64) -> Self {
        NatFun::from_fn("id", window, BigUint::from)
    }

    pub fn constant(window: u64, c: u64) -> Self {
        NatFun::from_fn(format!("const:{c}"), window, move |_| BigUint::from(c))
    }

    pub fn translation(window: u64, c: u64) -> Self {
        NatFun::from_fn(format!("x+{c}"), window, move |x| BigUint::from(x + c))
    }

    pub fn homothety(window: u64, c: u64) -> Self {
        NatFun::from_fn(format!("{c}x"), window, move |x| BigUint::from(c * x))
    }

    /// Polynomial with natural coefficients, constant term first.
    pub fn poly(window: u64, coefficients: &[u64]) -> Self {
        let label = format!(
            "poly:{}",
            coefficients.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
        );
        NatFun::from_fn(label, window, move |x| {
            let mut acc = BigUint::zero();
            let mut pow = BigUint::one();
            for &c in coefficients {
                acc += BigUint::from(c) * &pow;
                pow *= BigUint::from(x);
            }
            acc
        })
    }

    /// The falling product `x(x-1)...(x-deg)`: satisfies the divisibility
    /// clause yet dips below the diagonal at small arguments.
    pub fn falling_product(window: u64, deg: u64) -> Self {
        NatFun::from_fn(format!("x(x-1)..(x-{deg})"), window, move |x| {
            let mut acc = BigInt::one();
            for d in 0..=deg {
                acc *= BigInt::from(x as i64 - d as i64);
            }
            if acc.is_negative() {
                BigUint::zero()
            } else {
                acc.to_biguint().unwrap()
            }
        })
    }
}

impl fmt::Display for NatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on [0,{})", self.label, self.window())
    }
}

/// One value of the alternating-sum function whose rounded approximant is
/// the standard non-monotone congruence-preserving example: the even-index
/// terms `2^(y+3)·lcm(y+2)` push up, the odd-index terms `2^(z+1)·lcm(z)`
/// pull down, and the even terms dominate so the value stays a natural.
pub fn zigzag_f(x: u64) -> BigUint {
    let mut acc = BigInt::zero();
    for y in (0..=x).step_by(2) {
        acc += BigInt::from(super::newton::lcm_upto(y + 2)) << (y + 3);
    }
    for z in (1..=x).step_by(2) {
        acc -= BigInt::from(super::newton::lcm_upto(z)) << (z + 1);
    }
    acc.to_biguint().expect("the even-index terms dominate")
}

/// Window of [`zigzag_f`].
pub fn zigzag_f_window(window: u64) -> NatFun {
    NatFun::from_fn("zigzag_f", window, zigzag_f)
}

/// The rounded approximant of [`zigzag_f`]: natural-valued, above the
/// diagonal, congruence preserving, and non-monotone at every step.
pub fn zigzag_g(window: u64) -> NatFun {
    let g = super::newton::idr_approximant(&zigzag_f_window(window))
        .to_nat_fun()
        .expect("the approximant of the zigzag source is natural-valued");
    NatFun::new("zigzag_g", g.values().to_vec())
}

/// `1` at zero and the integer part of `e·x!` from one on, via the exact
/// closed form `Σ_{j<=x} x!/j!`.
///
/// The tail `Σ_{j>x} x!/j!` equals `1/(x+1) + 1/(x+1)(x+2) + ...`, which
/// is positive and, for `x >= 1`, at most `Σ_{i>=1} (x+1)^-i = 1/x <= 1`
/// with strict inequality term by term, so it lies strictly in `(0, 1)`
/// and the closed form is exactly the floor.
pub fn floor_e_factorial(x: u64) -> BigUint {
    if x == 0 {
        return BigUint::one();
    }
    let mut sum = BigUint::zero();
    let mut term = BigUint::one(); // x!/j! for j = x
    let mut j = x;
    loop {
        sum += &term;
        if j == 0 {
            return sum;
        }
        term *= BigUint::from(j); // x!/(j-1)! = (x!/j!)·j
        j -= 1;
    }
}

/// Window of [`floor_e_factorial`].
pub fn floor_e_factorial_window(window: u64) -> NatFun {
    NatFun::from_fn("floor_e_fact", window, floor_e_factorial)
}
