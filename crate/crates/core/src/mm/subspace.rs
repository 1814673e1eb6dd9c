//! F_3-subspaces of GF(3^n) and direct-sum decompositions.

use crate::error::{domain, Error, Result};
use crate::gf::linalg::Mat3;
use crate::gf::{FieldCtx, FieldElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubspaceKind {
    /// `rep · GF(3^m)`.
    MultiplicativeCoset {
        rep: FieldElem,
        subfield_m: usize,
    },
    ExplicitBasis,
}

/// A subspace given by an F_3-basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    kind: SubspaceKind,
    basis: Vec<FieldElem>,
}

impl Subspace {
    /// `rep · GF(3^m)` (together with zero), basis `rep · γ^i`.
    pub fn coset(ctx: &FieldCtx, rep: FieldElem, m: usize) -> Result<Self> {
        if rep.is_zero() {
            return domain("coset representative must be nonzero");
        }
        let basis = ctx
            .subfield_basis(m)?
            .into_iter()
            .map(|b| ctx.mul(rep, b))
            .collect();
        Ok(Self {
            kind: SubspaceKind::MultiplicativeCoset { rep, subfield_m: m },
            basis,
        })
    }

    /// The embedded subfield GF(3^m).
    pub fn subfield(ctx: &FieldCtx, m: usize) -> Result<Self> {
        Self::coset(ctx, FieldElem::ONE, m)
    }

    pub fn from_basis(ctx: &FieldCtx, basis: Vec<FieldElem>) -> Result<Self> {
        if ctx.coordinate_matrix(&basis).rank() != basis.len() {
            return domain("basis vectors are linearly dependent");
        }
        Ok(Self {
            kind: SubspaceKind::ExplicitBasis,
            basis,
        })
    }

    pub fn kind(&self) -> SubspaceKind {
        self.kind
    }

    pub fn basis(&self) -> &[FieldElem] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All `3^dim` elements; the element with coefficient digits `d` sits at
    /// index `d`.
    pub fn elements(&self, ctx: &FieldCtx) -> Vec<FieldElem> {
        ctx.span(&self.basis)
    }

    pub fn contains(&self, ctx: &FieldCtx, x: FieldElem) -> bool {
        let mut v = self.basis.clone();
        v.push(x);
        ctx.coordinate_matrix(&v).rank() == self.dim()
    }

    /// `V^⊥ = {x : Tr(xv) = 0 for all v in V}`.
    pub fn orthogonal(&self, ctx: &FieldCtx) -> Subspace {
        let n = ctx.n();
        let rows: Vec<Vec<u8>> = self
            .basis
            .iter()
            .map(|&b| {
                (0..n)
                    .map(|j| ctx.trace_abs(ctx.mul(b, FieldElem::from_index(ctx.pow3(j)))))
                    .collect()
            })
            .collect();
        let basis = if rows.is_empty() {
            (0..n).map(|j| FieldElem::from_index(ctx.pow3(j))).collect()
        } else {
            Mat3::from_rows(&rows)
                .nullspace()
                .into_iter()
                .map(|v| ctx.from_coords(&v).expect("nullspace vector has n trits"))
                .collect()
        };
        Subspace {
            kind: SubspaceKind::ExplicitBasis,
            basis,
        }
    }

    /// `V ∩ U = {0}`.
    pub fn meets_trivially(&self, ctx: &FieldCtx, other: &Subspace) -> bool {
        let mut all = self.basis.clone();
        all.extend_from_slice(&other.basis);
        ctx.coordinate_matrix(&all).rank() == self.dim() + other.dim()
    }

    /// `V ⊆ V^⊥`.
    pub fn is_self_orthogonal(&self, ctx: &FieldCtx) -> bool {
        self.basis.iter().all(|&a| {
            self.basis
                .iter()
                .all(|&b| ctx.trace_abs(ctx.mul(a, b)) == 0)
        })
    }

    /// Some complement: the basis is extended greedily by standard vectors.
    pub fn complement(&self, ctx: &FieldCtx) -> Subspace {
        let mut all = self.basis.clone();
        let mut extra = Vec::new();
        for j in 0..ctx.n() {
            let e = FieldElem::from_index(ctx.pow3(j));
            all.push(e);
            if ctx.coordinate_matrix(&all).rank() == all.len() {
                extra.push(e);
            } else {
                all.pop();
            }
        }
        Subspace {
            kind: SubspaceKind::ExplicitBasis,
            basis: extra,
        }
    }

    /// Gram matrix `Tr(β_i γ_j)` against another basis.
    pub fn trace_pairing(&self, ctx: &FieldCtx, other: &Subspace) -> Mat3 {
        let mut m = Mat3::zeros(self.dim(), other.dim());
        for (i, &a) in self.basis.iter().enumerate() {
            for (j, &b) in other.basis.iter().enumerate() {
                m.set(i, j, ctx.trace_abs(ctx.mul(a, b)));
            }
        }
        m
    }
}

/// Splits `x = v + w` over `V ⊕ W`.
#[derive(Clone, Debug)]
pub struct Decomposer {
    dim_v: usize,
    basis: Vec<FieldElem>,
    inv: Mat3,
}

impl Decomposer {
    pub fn new(ctx: &FieldCtx, v: &Subspace, w: &Subspace) -> Result<Self> {
        if v.dim() + w.dim() != ctx.n() {
            return domain(format!(
                "dimensions {} + {} do not add up to {}",
                v.dim(),
                w.dim(),
                ctx.n()
            ));
        }
        let mut basis = v.basis().to_vec();
        basis.extend_from_slice(w.basis());
        let inv = ctx
            .coordinate_matrix(&basis)
            .inverse()
            .ok_or_else(|| Error::Domain("subspaces are not supplementary".into()))?;
        Ok(Self {
            dim_v: v.dim(),
            basis,
            inv,
        })
    }

    /// Coefficients of `x` over `basis(V) ∪ basis(W)`.
    pub fn coefficients(&self, ctx: &FieldCtx, x: FieldElem) -> Vec<u8> {
        self.inv.mul_vec(&ctx.coords(x))
    }

    pub fn split(&self, ctx: &FieldCtx, x: FieldElem) -> (FieldElem, FieldElem) {
        let s = self.coefficients(ctx, x);
        let (sv, sw) = s.split_at(self.dim_v);
        (
            ctx.combine(&self.basis[..self.dim_v], sv),
            ctx.combine(&self.basis[self.dim_v..], sw),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coset_has_expected_size_and_closure() {
        let ctx = FieldCtx::new(4, None).unwrap();
        let v = Subspace::coset(&ctx, ctx.generator(), 2).unwrap();
        let elems = v.elements(&ctx);
        assert_eq!(elems.len(), 9);
        for &a in &elems {
            for &b in &elems {
                assert!(v.contains(&ctx, ctx.add(a, b)));
            }
            // multiplicative coset: a / rep lies in GF(9)
            let q = ctx.div(a, ctx.generator()).unwrap();
            assert!(ctx.in_subfield(q, 2).unwrap());
        }
    }

    #[test]
    fn orthogonal_complement() {
        let ctx = FieldCtx::new(5, None).unwrap();
        let v =
            Subspace::from_basis(&ctx, vec![ctx.generator(), ctx.pow(ctx.generator(), 7)]).unwrap();
        let perp = v.orthogonal(&ctx);
        assert_eq!(perp.dim(), 3);
        for &a in &v.elements(&ctx) {
            for &b in &perp.elements(&ctx) {
                assert_eq!(ctx.trace_abs(ctx.mul(a, b)), 0);
            }
        }
    }

    #[test]
    fn decomposition_roundtrip() {
        let ctx = FieldCtx::new(4, None).unwrap();
        let v = Subspace::coset(&ctx, ctx.generator(), 2).unwrap();
        let w = v.complement(&ctx);
        assert!(v.meets_trivially(&ctx, &w));
        let d = Decomposer::new(&ctx, &v, &w).unwrap();
        for x in ctx.elements() {
            let (a, b) = d.split(&ctx, x);
            assert!(v.contains(&ctx, a));
            assert!(w.contains(&ctx, b));
            assert_eq!(ctx.add(a, b), x);
        }
        assert!(Decomposer::new(&ctx, &v, &v).is_err());
    }

    #[test]
    fn dependent_basis_rejected() {
        let ctx = FieldCtx::new(3, None).unwrap();
        let g = ctx.generator();
        assert!(Subspace::from_basis(&ctx, vec![g, ctx.neg(g)]).is_err());
    }
}
