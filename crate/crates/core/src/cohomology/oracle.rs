//! Closed-form dimension formulas, written n = 4m + r.

use super::CohomologyError;

/// dim Hom_{A^e}(R^n, A).
pub fn hom_dim_oracle(n: u32, t: u32) -> u64 {
    let (m, r) = ((n / 4) as u64, n % 4);
    let t = t as u64;
    match r {
        0 => 4 * (2 * t + 1) * (4 * m + 1),
        1 => 16 * (t + 1) * (2 * m + 1),
        2 => 4 * (2 * t + 1) * (4 * m + 3),
        _ => 32 * t * (m + 1),
    }
}

/// dim (Ker ∂^index)^* for index ≥ -1, where Ker ∂^{-1} = A.
///
/// Equals dim Ker δ^{index+1} of the cochain complex.
pub fn ker_dim_oracle(index: i64, t: u32, char_divides: bool) -> Result<u64, CohomologyError> {
    if index < -1 {
        return Err(CohomologyError::IndexBelowRange(index));
    }
    let t = t as u64;
    if index == -1 {
        return Ok(2 * t + 1);
    }
    let (m, r) = ((index / 4) as u64, index % 4);
    Ok(match r {
        0 if m == 0 => {
            if char_divides {
                8 * t + 6
            } else {
                8 * t + 5
            }
        }
        0 => {
            if char_divides {
                2 * (8 * m + 3) + 8 * t * (2 * m + 1)
            } else {
                4 * (4 * m + 1) + 8 * t * (2 * m + 1)
            }
        }
        1 => 4 * (4 * m + 3) + 2 * t * (8 * m + 5),
        2 => 16 * t * (m + 1),
        _ => 2 * t * (8 * m + 9),
    })
}

/// dim HH^n(A) under the standing hypothesis that q0 q1 q2 q3 is not a root
/// of unity.
pub fn hh_oracle(n: u32, t: u32, char_divides: bool) -> u64 {
    let (m, r) = (n / 4, n % 4);
    let t = t as u64;
    let bump = |yes: u64, no: u64| if char_divides { yes } else { no };
    match (m, r) {
        (0, 0) => 2 * t + 1,
        (0, 1) => bump(2 * t + 3, 2 * t + 2),
        (0, 2) => bump(2 * t + 2, 2 * t + 1),
        (_, 3) | (_, 0) => 2 * t,
        _ => bump(2 * t + 2, 2 * t),
    }
}
