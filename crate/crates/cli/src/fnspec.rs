//! Function specifications accepted on the command line: built-in names,
//! polynomial shorthands, or a file of decimal values.

use congruence_core::arith::{floor_e_factorial_window, zigzag_g};
use congruence_core::NatFun;
use num_bigint::BigUint;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FnSpecError(pub String);

impl fmt::Display for FnSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for FnSpecError {}

/// Resolves `id`, `const:<c>`, `zigzag_g`, `floor_e_fact`,
/// `poly:<c0,c1,...>` (constant term first) or `@file` with one decimal
/// value per line.
pub fn resolve(spec: &str, window: u64) -> Result<NatFun, FnSpecError> {
    if let Some(path) = spec.strip_prefix('@') {
        return from_file(Path::new(path));
    }
    match spec {
        "id" => return Ok(NatFun::identity(window)),
        "zigzag_g" => return Ok(zigzag_g(window)),
        "floor_e_fact" => return Ok(floor_e_factorial_window(window)),
        _ => {}
    }
    if let Some(c) = spec.strip_prefix("const:") {
        let c: u64 = c.parse().map_err(|e| FnSpecError(format!("bad constant: {e}")))?;
        return Ok(NatFun::constant(window, c));
    }
    if let Some(coeffs) = spec.strip_prefix("poly:") {
        let coeffs: Vec<u64> = coeffs
            .split(',')
            .map(|t| t.trim().parse().map_err(|e| FnSpecError(format!("bad coefficient: {e}"))))
            .collect::<Result<_, _>>()?;
        return Ok(NatFun::poly(window, &coeffs));
    }
    Err(FnSpecError(format!(
        "unknown function `{spec}` (try id, const:<c>, zigzag_g, floor_e_fact, poly:<coeffs>, @file)"
    )))
}

fn from_file(path: &Path) -> Result<NatFun, FnSpecError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| FnSpecError(format!("cannot read {}: {e}", path.display())))?;
    let mut values = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let v = BigUint::from_str(trimmed)
            .map_err(|e| FnSpecError(format!("{}:{}: bad value: {e}", path.display(), i + 1)))?;
        values.push(v);
    }
    if values.is_empty() {
        return Err(FnSpecError(format!("{}: no values", path.display())));
    }
    Ok(NatFun::new(format!("@{}", path.display()), values))
}
