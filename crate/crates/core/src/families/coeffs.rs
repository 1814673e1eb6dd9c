//! Exponents and coefficient formulas shared by the generators and the
//! subspace constructions.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// The arbitrary sign in front of `a_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn apply(self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        match self {
            Sign::Plus => x,
            Sign::Minus => ctx.neg(x),
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => domain(format!("sign must be + or -, got {s:?}")),
        }
    }
}

pub(crate) fn pow3(k: usize) -> u128 {
    3u128
        .checked_pow(k as u32)
        .expect("3^k does not fit in 128 bits")
}

/// `(2(3^k+1), (3^k+1)^2)`.
pub fn binomial_exponents(k: usize) -> (u128, u128) {
    let q = pow3(k);
    (
        2 * (q + 1),
        (q + 1).checked_mul(q + 1).expect("exponent overflow"),
    )
}

/// `(2·3^k+4, 3^k+5, 2)`.
pub fn trinomial_exponents(k: usize) -> (u128, u128, u128) {
    let q = pow3(k);
    (2 * q + 4, q + 5, 2)
}

/// `3^{3k} + 3^{2k} - 3^k + 1`.
pub fn baseline_exponent(k: usize) -> u128 {
    pow3(3 * k) + pow3(2 * k) - pow3(k) + 1
}

pub(crate) fn require_degree(ctx: &FieldCtx, expected: usize, what: &str) -> Result<()> {
    if ctx.n() != expected {
        return domain(format!(
            "{what} needs a field of degree {expected}, got {}",
            ctx.n()
        ));
    }
    Ok(())
}

/// `a_2 = ± I^k a_1^{(3^k+1)/2} ((-1)^k a_1^E + a_1^{-E})` with
/// `E = (3^k-1)(3^{2k}+1)/4`, for a nonsquare `a_1` in GF(3^{4k}).
pub fn coeff_a2(ctx: &FieldCtx, k: usize, a1: FieldElem, sign: Sign) -> Result<FieldElem> {
    require_degree(ctx, 4 * k, "the binomial coefficient a_2")?;
    if ctx.is_square(a1)? {
        return domain(format!("a_1 = {} is a square", ctx.fmt_log(a1)));
    }
    let q = pow3(k);
    let e = (q - 1) * (pow3(2 * k) + 1) / 4;
    let i_k = ctx.pow(ctx.fourth_root_of_unity()?, (k % 4) as u128);
    let pos = ctx.pow(a1, e);
    let pos = if k % 2 == 1 { ctx.neg(pos) } else { pos };
    let bracket = ctx.add(pos, ctx.inv(ctx.pow(a1, e))?);
    let a2 = ctx.mul(ctx.mul(i_k, ctx.pow(a1, q.div_ceil(2))), bracket);
    if a2.is_zero() {
        return Err(Error::Inconsistency(format!(
            "a_2 vanishes for a_1 = {}",
            ctx.fmt_log(a1)
        )));
    }
    Ok(sign.apply(ctx, a2))
}

/// `(a_1, a_2, a_3)` of the trinomial over GF(3^{2k}).
///
/// Odd `k`: `a_1 = a_3 = 1`, `a_2 = ±I`. Even `k`: `a_1 = α^{3^k+2}`,
/// `a_3 = α`, `a_2 = ±I a_1^{-(3^k-3)/2}`, which must coincide with
/// `∓I a_3^{(3^k+5)/2}`.
pub fn trinomial_coeffs(ctx: &FieldCtx, k: usize, sign: Sign) -> Result<[FieldElem; 3]> {
    if k <= 1 || k.is_multiple_of(4) {
        return domain(format!(
            "the trinomial needs k > 1 not divisible by four, got k = {k}"
        ));
    }
    require_degree(ctx, 2 * k, "the trinomial")?;
    let i = ctx.fourth_root_of_unity()?;
    if k % 2 == 1 {
        return Ok([FieldElem::ONE, sign.apply(ctx, i), FieldElem::ONE]);
    }
    let q = pow3(k) as i128;
    let alpha = ctx.generator();
    let a1 = ctx.pow(alpha, (q + 2) as u128);
    let a3 = alpha;
    let a2 = sign.apply(ctx, ctx.mul(i, ctx.pow_i(a1, -(q - 3) / 2)?));
    let other = sign
        .flip()
        .apply(ctx, ctx.mul(i, ctx.pow(a3, ((q + 5) / 2) as u128)));
    if a2 != other {
        return Err(Error::Inconsistency(
            "the two expressions for a_2 disagree".into(),
        ));
    }
    Ok([a1, a2, a3])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exponents() {
        assert_eq!(binomial_exponents(1), (8, 16));
        assert_eq!(trinomial_exponents(3), (58, 32, 2));
        assert_eq!(baseline_exponent(1), 34);
    }

    #[test]
    fn a2_is_a_nonsquare_for_every_nonsquare() {
        let ctx = FieldCtx::new(4, None).unwrap();
        let mut seen = 0;
        for a1 in ctx.elements().skip(1) {
            if ctx.is_square(a1).unwrap() {
                assert!(coeff_a2(&ctx, 1, a1, Sign::Plus).is_err());
                continue;
            }
            seen += 1;
            for s in [Sign::Plus, Sign::Minus] {
                let a2 = coeff_a2(&ctx, 1, a1, s).unwrap();
                assert!(!ctx.is_square(a2).unwrap());
            }
        }
        assert_eq!(seen, 40);
    }

    #[test]
    fn a2_power_identity() {
        // a_2^{3^{2k}-1} = (-1)^k a_1^{(3^k+1)(3^{2k}-1)/2}
        for k in [1usize, 2] {
            let ctx = FieldCtx::new(4 * k, None).unwrap();
            let q = pow3(k);
            let q2 = pow3(2 * k);
            for a1 in ctx.elements().skip(1).step_by(7) {
                if ctx.is_square(a1).unwrap() {
                    continue;
                }
                let a2 = coeff_a2(&ctx, k, a1, Sign::Minus).unwrap();
                let lhs = ctx.pow(a2, q2 - 1);
                let rhs = ctx.pow(a1, (q + 1) * (q2 - 1) / 2);
                let rhs = if k % 2 == 1 { ctx.neg(rhs) } else { rhs };
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn trinomial_preconditions() {
        let ctx8 = FieldCtx::new(8, None).unwrap();
        assert!(trinomial_coeffs(&ctx8, 4, Sign::Plus).is_err());
        let ctx2 = FieldCtx::new(2, None).unwrap();
        assert!(trinomial_coeffs(&ctx2, 1, Sign::Plus).is_err());
        let ctx4 = FieldCtx::new(4, None).unwrap();
        for s in [Sign::Plus, Sign::Minus] {
            assert!(trinomial_coeffs(&ctx4, 2, s).is_ok());
        }
        assert!(trinomial_coeffs(&ctx4, 3, Sign::Plus).is_err());
    }
}
