//! Newton (forward-difference) representations and the lcm-rounded
//! approximant.

use super::natfun::NatFun;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Least common multiple of `1, ..., x`; the empty product for `x = 0`,
/// which keeps the degree-0 rounding step exact.
pub fn lcm_upto(x: u64) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=x.max(1) {
        acc = acc.lcm(&BigUint::from(i));
    }
    acc
}

/// Binomial coefficient with big-integer value.
pub fn binomial(x: u64, k: u64) -> BigUint {
    if k > x {
        return BigUint::zero();
    }
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(x - i) / BigUint::from(i + 1);
    }
    acc
}

/// Coefficients of the expansion of a windowed function over the binomial
/// basis: the iterated forward differences at zero. Evaluation reproduces
/// the window exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonRep {
    coefficients: Vec<BigInt>,
}

impl NewtonRep {
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn eval(&self, x: u64) -> BigInt {
        self.coefficients
            .iter()
            .enumerate()
            .map(|(k, a)| a * BigInt::from(binomial(x, k as u64)))
            .sum()
    }
}

/// Forward-difference table of the window, read off the leading column.
pub fn newton_coefficients(f: &NatFun) -> NewtonRep {
    let mut row: Vec<BigInt> = f.values().iter().map(|v| BigInt::from(v.clone())).collect();
    let mut coefficients = Vec::with_capacity(row.len());
    while !row.is_empty() {
        coefficients.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    NewtonRep { coefficients }
}

/// The rounded approximant: each Newton coefficient is replaced by its
/// largest multiple of `lcm(k)` not exceeding it. Signed values: the
/// approximant maps into the integers even when the source is
/// natural-valued.
#[derive(Clone, Debug)]
pub struct IdrApproximant {
    label: String,
    rounded: Vec<BigInt>,
    values: Vec<BigInt>,
}

impl IdrApproximant {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn rounded_coefficients(&self) -> &[BigInt] {
        &self.rounded
    }

    pub fn values(&self) -> &[BigInt] {
        &self.values
    }

    pub fn window(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn value(&self, x: u64) -> &BigInt {
        &self.values[x as usize]
    }

    /// Contract (i): differences of arguments divide differences of values,
    /// over every window pair.
    pub fn divisibility_contract(&self) -> bool {
        let n = self.values.len();
        for x in 0..n {
            for y in (x + 1)..n {
                let gap = BigInt::from((y - x) as u64);
                if !(&self.values[y] - &self.values[x]).is_multiple_of(&gap) {
                    return false;
                }
            }
        }
        true
    }

    /// Contract (ii): the approximant sits within `2^x · lcm(x)` below the
    /// source, never above it.
    pub fn band_contract(&self, f: &NatFun) -> bool {
        let n = self.values.len().min(f.values().len());
        for x in 0..n as u64 {
            let fx = BigInt::from(f.value(x).clone());
            let slack = BigInt::from(lcm_upto(x)) << x;
            let gx = &self.values[x as usize];
            if *gx > fx || *gx < fx - slack {
                return false;
            }
        }
        true
    }

    /// Converts to a natural-valued window; fails if any value is negative.
    pub fn to_nat_fun(&self) -> Option<NatFun> {
        let mut values = Vec::with_capacity(self.values.len());
        for v in &self.values {
            if v.is_negative() {
                return None;
            }
            values.push(v.to_biguint().unwrap());
        }
        Some(NatFun::new(format!("{}~idr", self.label), values))
    }
}

/// Rounds each Newton coefficient down to a multiple of `lcm(k)`
/// (euclidean division keeps the remainder in `[0, lcm(k))` for negative
/// coefficients too) and re-evaluates on the window.
pub fn idr_approximant(f: &NatFun) -> IdrApproximant {
    let newton = newton_coefficients(f);
    let rounded: Vec<BigInt> = newton
        .coefficients()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let unit = BigInt::from(lcm_upto(k as u64));
            let (q, _b) = a.div_mod_floor(&unit);
            q * unit
        })
        .collect();
    let rep = NewtonRep { coefficients: rounded.clone() };
    let values = (0..f.window()).map(|x| rep.eval(x)).collect();
    IdrApproximant { label: f.label().to_string(), rounded, values }
}
