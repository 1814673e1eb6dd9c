//! Generators for the binomial, trinomial, exceptional and baseline bent
//! families.

mod coeffs;
mod multivariate;
mod quartic;

pub use coeffs::{
    baseline_exponent, binomial_exponents, coeff_a2, trinomial_coeffs, trinomial_exponents, Sign,
};
pub use multivariate::{
    exceptionality_check, expand_family, expand_formal, multivariate_expand, ExpandableFamily,
    MultivariatePoly,
};
pub use quartic::{dual_t3_closed_form, quartic_root, QuarticBasis, QuarticMinPoly};

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use log::warn;

use crate::error::{domain, Error, Result};
use crate::function::{TernaryFn, TraceTerm};
use crate::gf::{FieldCtx, FieldElem};

use coeffs::require_degree;

/// The binomial subclasses with coefficients in GF(81).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Exceptional {
    /// `a_1 = a`, `a_2 = a^5`, `k ≡ 1 (mod 4)`.
    T7Case1,
    /// `a_1 = a^5`, `a_2 = a`, `k ≡ 3 (mod 4)`.
    T7Case3,
    /// `a_1 = a^5`, `a_2 = a^{-5}`, `k ≡ 1 (mod 4)`.
    T8,
}

impl Exceptional {
    pub const ALL: [Exceptional; 3] = [Exceptional::T7Case1, Exceptional::T7Case3, Exceptional::T8];

    pub fn name(self) -> &'static str {
        match self {
            Exceptional::T7Case1 => "t7-case1",
            Exceptional::T7Case3 => "t7-case3",
            Exceptional::T8 => "t8",
        }
    }

    /// Required residue of `k` mod 4.
    pub fn k_residue(self) -> usize {
        match self {
            Exceptional::T7Case3 => 3,
            _ => 1,
        }
    }

    /// Exponents of `a` in `(a_1, a_2)`.
    pub fn a_powers(self) -> (i128, i128) {
        match self {
            Exceptional::T7Case1 => (1, 5),
            Exceptional::T7Case3 => (5, 1),
            Exceptional::T8 => (5, -5),
        }
    }
}

impl FromStr for Exceptional {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Exceptional::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Domain(format!("unknown exceptional case {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    BinomialGeneral { a1: FieldElem, sign: Sign },
    BinomialK3Mod4,
    Trinomial { sign: Sign },
    Exceptional(Exceptional),
    Baseline,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::BinomialGeneral { .. } => "binomial",
            Family::BinomialK3Mod4 => "binomial-k3mod4",
            Family::Trinomial { .. } => "trinomial",
            Family::Exceptional(e) => e.name(),
            Family::Baseline => "baseline",
        }
    }
}

/// A family with its parameter `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    pub family: Family,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(family: Family, k: usize) -> Self {
        Self { family, k }
    }

    /// The extension degree `n` the family lives in.
    pub fn field_degree(&self) -> usize {
        match self.family {
            Family::Trinomial { .. } => 2 * self.k,
            _ => 4 * self.k,
        }
    }

    pub fn build(&self, ctx: &Arc<FieldCtx>) -> Result<TernaryFn> {
        let k = self.k;
        match self.family {
            Family::BinomialGeneral { a1, sign } => make_binomial_general(ctx, k, a1, sign),
            Family::BinomialK3Mod4 => make_binomial_t3(ctx, k),
            Family::Trinomial { sign } => make_trinomial(ctx, k, sign),
            Family::Exceptional(e) => make_exceptional(ctx, k, e),
            Family::Baseline => make_baseline(ctx, k),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} k={}", self.family.name(), self.k)?;
        match self.family {
            Family::BinomialGeneral { sign, .. } | Family::Trinomial { sign } => {
                write!(f, " sign={sign}")
            }
            _ => Ok(()),
        }
    }
}

fn binomial(ctx: &Arc<FieldCtx>, k: usize, a1: FieldElem, a2: FieldElem) -> TernaryFn {
    let (d1, d2) = binomial_exponents(k);
    TernaryFn::from_trace_form(
        ctx.clone(),
        vec![TraceTerm::new(a1, d1), TraceTerm::new(a2, d2)],
    )
}

/// `Tr_n(a_1 x^{2(3^k+1)} + a_2 x^{(3^k+1)^2})` with `a_2` from [`coeff_a2`].
pub fn make_binomial_general(
    ctx: &Arc<FieldCtx>,
    k: usize,
    a1: FieldElem,
    sign: Sign,
) -> Result<TernaryFn> {
    let a2 = coeff_a2(ctx, k, a1, sign)?;
    Ok(binomial(ctx, k, a1, a2))
}

/// `Tr_n(a x^{2(3^k+1)} + a^{-1} x^{(3^k+1)^2})` with `a^4 + a - 1 = 0`.
///
/// The bentness proof needs only odd `k`; `k ≢ 3 (mod 4)` is accepted with a
/// warning.
pub fn make_binomial_t3(ctx: &Arc<FieldCtx>, k: usize) -> Result<TernaryFn> {
    require_degree(ctx, 4 * k, "the k ≡ 3 (mod 4) binomial")?;
    if k.is_multiple_of(2) {
        return domain(format!("k must be odd, got {k}"));
    }
    if k % 4 != 3 {
        warn!("k = {k} is odd but not 3 mod 4; building the binomial anyway");
    }
    let a = quartic_root(ctx, QuarticMinPoly::Primitive)?;
    Ok(binomial(ctx, k, a, ctx.inv(a)?))
}

/// The exceptional binomials, `a` a root of `x^4 - x^2 - 1`.
pub fn make_exceptional(ctx: &Arc<FieldCtx>, k: usize, which: Exceptional) -> Result<TernaryFn> {
    require_degree(ctx, 4 * k, which.name())?;
    if k % 4 != which.k_residue() {
        return domain(format!(
            "{} needs k ≡ {} (mod 4), got k = {k}",
            which.name(),
            which.k_residue()
        ));
    }
    let a = quartic_root(ctx, QuarticMinPoly::Order16)?;
    let (e1, e2) = which.a_powers();
    Ok(binomial(ctx, k, ctx.pow_i(a, e1)?, ctx.pow_i(a, e2)?))
}

/// `Tr_n(a_1 x^{2·3^k+4} + a_2 x^{3^k+5} + a_3 x^2)`.
pub fn make_trinomial(ctx: &Arc<FieldCtx>, k: usize, sign: Sign) -> Result<TernaryFn> {
    let [a1, a2, a3] = trinomial_coeffs(ctx, k, sign)?;
    let (d1, d2, d3) = trinomial_exponents(k);
    Ok(TernaryFn::from_trace_form(
        ctx.clone(),
        vec![
            TraceTerm::new(a1, d1),
            TraceTerm::new(a2, d2),
            TraceTerm::new(a3, d3),
        ],
    ))
}

/// The previously known weakly regular binomial
/// `Tr_n(x^{3^{3k}+3^{2k}-3^k+1} + x^2)`.
pub fn make_baseline(ctx: &Arc<FieldCtx>, k: usize) -> Result<TernaryFn> {
    require_degree(ctx, 4 * k, "the baseline binomial")?;
    Ok(TernaryFn::from_trace_form(
        ctx.clone(),
        vec![
            TraceTerm::new(FieldElem::ONE, baseline_exponent(k)),
            TraceTerm::new(FieldElem::ONE, 2),
        ],
    ))
}
