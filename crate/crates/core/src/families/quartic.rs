//! GF(3^{4k}) as a degree-4 extension of GF(3^k) generated by a root of a
//! quartic over F_3.

use crate::cyclotomic::EisensteinInt;
use crate::error::{domain, Error, Result};
use crate::gf::linalg::Mat3;
use crate::gf::{FieldCtx, FieldElem};

use super::coeffs::pow3;

/// The two quartics used by the families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuarticMinPoly {
    /// `x^4 + x - 1`, whose roots are primitive in GF(81).
    Primitive,
    /// `x^4 - x^2 - 1`, whose roots have order 16.
    Order16,
}

impl QuarticMinPoly {
    /// Coefficients, constant term first.
    pub fn coeffs(self) -> [u8; 5] {
        match self {
            QuarticMinPoly::Primitive => [2, 1, 0, 0, 1],
            QuarticMinPoly::Order16 => [2, 0, 2, 0, 1],
        }
    }

    /// GF(81) built on this quartic; its root is the element with index 3.
    pub fn field(self) -> FieldCtx {
        FieldCtx::new(4, Some(&self.coeffs())).expect("both quartics are irreducible")
    }
}

fn eval_quartic(ctx: &FieldCtx, p: QuarticMinPoly, x: FieldElem) -> FieldElem {
    p.coeffs().iter().rev().fold(FieldElem::ZERO, |acc, &c| {
        ctx.add(ctx.mul(acc, x), ctx.prime(c))
    })
}

/// The root of `p` with the smallest index in the embedded GF(81). Any root
/// works: the conjugates give the same functions for the exponents used here.
pub fn quartic_root(ctx: &FieldCtx, p: QuarticMinPoly) -> Result<FieldElem> {
    ctx.subfield_elements(4)?
        .into_iter()
        .filter(|&x| eval_quartic(ctx, p, x).is_zero())
        .min_by_key(|x| x.index())
        .ok_or_else(|| Error::Inconsistency("quartic has no root in GF(81)".into()))
}

/// Coordinates `x = x_0 + x_1 a + x_2 a^2 + x_3 a^3` with `x_i` in GF(3^k).
#[derive(Clone, Debug)]
pub struct QuarticBasis {
    k: usize,
    min_poly: QuarticMinPoly,
    powers: [FieldElem; 4],
    sub_basis: Vec<FieldElem>,
    inv: Mat3,
}

impl QuarticBasis {
    pub fn new(ctx: &FieldCtx, k: usize, min_poly: QuarticMinPoly) -> Result<Self> {
        if ctx.n() != 4 * k {
            return domain(format!("need n = 4k, got n = {} and k = {k}", ctx.n()));
        }
        let a = quartic_root(ctx, min_poly)?;
        let a2 = ctx.mul(a, a);
        let powers = [FieldElem::ONE, a, a2, ctx.mul(a2, a)];
        let sub_basis = ctx.subfield_basis(k)?;
        let cols: Vec<FieldElem> = powers
            .iter()
            .flat_map(|&p| sub_basis.iter().map(move |&g| (p, g)))
            .map(|(p, g)| ctx.mul(p, g))
            .collect();
        let inv = ctx.coordinate_matrix(&cols).inverse().ok_or_else(|| {
            Error::Domain(format!(
                "1, a, a^2, a^3 is not a basis over GF(3^{k}); k must be odd"
            ))
        })?;
        Ok(Self {
            k,
            min_poly,
            powers,
            sub_basis,
            inv,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn min_poly(&self) -> QuarticMinPoly {
        self.min_poly
    }

    pub fn root(&self) -> FieldElem {
        self.powers[1]
    }

    pub fn decompose(&self, ctx: &FieldCtx, x: FieldElem) -> [FieldElem; 4] {
        let s = self.inv.mul_vec(&ctx.coords(x));
        let k = self.k;
        std::array::from_fn(|i| ctx.combine(&self.sub_basis, &s[i * k..(i + 1) * k]))
    }

    pub fn compose(&self, ctx: &FieldCtx, xs: [FieldElem; 4]) -> FieldElem {
        xs.iter()
            .zip(&self.powers)
            .fold(FieldElem::ZERO, |acc, (&x, &p)| ctx.add(acc, ctx.mul(x, p)))
    }

    /// Closed-form `Σ_x ω^{f(x) + Tr_n(bx)}` for the `x^4 + x - 1` binomial:
    /// `3^{2k} ω^{Tr_k((b_0-b_3)^{3^{k-1}}(-b_0+b_1+b_3))}` when
    /// `b_0 + b_2 = 0`, and otherwise
    /// `3^{2k} ω^{Tr_k(x_3^2 x_1^2 + x_1 x_3^3 - x_3^4 + x_1 b_3 + x_3 b_1)}`
    /// with `t = (b_3-b_0)^2/(b_0+b_2)^2`,
    /// `x_1 = -((b_0+b_2)/(t+1))^{3^{k-1}}`,
    /// `x_3 = x_1(-1 + (b_3-b_0)/(b_0+b_2))`.
    pub fn t3_walsh_plus(&self, ctx: &FieldCtx, b: FieldElem) -> Result<EisensteinInt> {
        if self.min_poly != QuarticMinPoly::Primitive {
            return domain("the closed form belongs to the x^4 + x - 1 basis");
        }
        let k = self.k;
        let [b0, b1, b2, b3] = self.decompose(ctx, b);
        let root = |y: FieldElem| ctx.frobenius(y, k - 1);
        let s = ctx.add(b0, b2);
        let arg = if s.is_zero() {
            let inner = ctx.add(ctx.sub(b1, b0), b3);
            ctx.mul(root(ctx.sub(b0, b3)), inner)
        } else {
            let r = ctx.div(ctx.sub(b3, b0), s)?;
            let t = ctx.mul(r, r);
            let x1 = ctx.neg(root(ctx.div(s, ctx.add(t, FieldElem::ONE))?));
            let x3 = ctx.mul(x1, ctx.sub(r, FieldElem::ONE));
            let x1sq = ctx.mul(x1, x1);
            let x3sq = ctx.mul(x3, x3);
            let terms = [
                ctx.mul(x3sq, x1sq),
                ctx.mul(x1, ctx.mul(x3sq, x3)),
                ctx.neg(ctx.mul(x3sq, x3sq)),
                ctx.mul(x1, b3),
                ctx.mul(x3, b1),
            ];
            terms
                .iter()
                .fold(FieldElem::ZERO, |acc, &y| ctx.add(acc, y))
        };
        let e = ctx.trace_sub(arg, k)?;
        Ok(EisensteinInt::omega_pow(e).scale(pow3(2 * k) as i64))
    }
}

/// `S_f(b)` for the `k ≡ 3 (mod 4)` binomial, in the `f(x) - Tr(bx)`
/// convention used by the spectrum module.
pub fn dual_t3_closed_form(ctx: &FieldCtx, k: usize, b: FieldElem) -> Result<EisensteinInt> {
    let basis = QuarticBasis::new(ctx, k, QuarticMinPoly::Primitive)?;
    basis.t3_walsh_plus(ctx, ctx.neg(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_have_the_expected_orders() {
        let ctx = FieldCtx::new(8, None).unwrap();
        let a = quartic_root(&ctx, QuarticMinPoly::Primitive).unwrap();
        assert_eq!(ctx.pow(a, 80), FieldElem::ONE);
        assert!([16u128, 40]
            .iter()
            .all(|&d| ctx.pow(a, d) != FieldElem::ONE));
        let b = quartic_root(&ctx, QuarticMinPoly::Order16).unwrap();
        assert_eq!(ctx.pow(b, 16), FieldElem::ONE);
        assert_ne!(ctx.pow(b, 8), FieldElem::ONE);
    }

    #[test]
    fn decomposition_roundtrip_k3() {
        let ctx = FieldCtx::new(12, None).unwrap();
        let basis = QuarticBasis::new(&ctx, 3, QuarticMinPoly::Primitive).unwrap();
        for x in ctx.elements().step_by(997) {
            let xs = basis.decompose(&ctx, x);
            assert!(xs.iter().all(|&c| ctx.in_subfield(c, 3).unwrap()));
            assert_eq!(basis.compose(&ctx, xs), x);
        }
    }

    #[test]
    fn even_k_has_no_quartic_basis() {
        let ctx = FieldCtx::new(8, None).unwrap();
        assert!(QuarticBasis::new(&ctx, 2, QuarticMinPoly::Primitive).is_err());
    }
}
