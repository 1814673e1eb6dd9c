//! Functions GF(3^n) -> F_3 as full value tables.

use std::sync::Arc;

use rayon::prelude::*;

use crate::error::{domain, Error, Result};
use crate::gf::{FieldCtx, FieldElem};

/// One term `coeff · x^exponent` of a trace form `Tr_n(sum coeff_i x^d_i)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TraceTerm {
    pub coeff: FieldElem,
    pub exponent: u128,
}

impl TraceTerm {
    pub fn new(coeff: FieldElem, exponent: u128) -> Self {
        Self { coeff, exponent }
    }
}

/// A function GF(3^n) -> F_3 stored as its value table, indexed by the
/// canonical element index, with an optional univariate trace form.
#[derive(Clone, Debug)]
pub struct TernaryFn {
    ctx: Arc<FieldCtx>,
    table: Vec<u8>,
    symbolic: Option<Vec<TraceTerm>>,
}

impl PartialEq for TernaryFn {
    fn eq(&self, other: &Self) -> bool {
        *self.ctx == *other.ctx && self.table == other.table
    }
}

impl TernaryFn {
    pub fn from_table(ctx: Arc<FieldCtx>, table: Vec<u8>) -> Result<Self> {
        if table.len() != ctx.size() {
            return domain(format!(
                "table has {} entries, field has {}",
                table.len(),
                ctx.size()
            ));
        }
        if let Some(pos) = table.iter().position(|&v| v > 2) {
            return domain(format!("table entry {pos} is not in {{0,1,2}}"));
        }
        Ok(Self {
            ctx,
            table,
            symbolic: None,
        })
    }

    /// Tabulate `Tr_n(sum c_i x^{d_i})`.
    pub fn from_trace_form(ctx: Arc<FieldCtx>, terms: Vec<TraceTerm>) -> Self {
        let table = eval_trace_form(&ctx, &terms);
        Self {
            ctx,
            table,
            symbolic: Some(terms),
        }
    }

    /// Attach a trace form to an existing table, checking they agree.
    pub fn with_symbolic(
        ctx: Arc<FieldCtx>,
        table: Vec<u8>,
        terms: Vec<TraceTerm>,
    ) -> Result<Self> {
        let f = Self::from_table(ctx, table)?;
        let expected = eval_trace_form(&f.ctx, &terms);
        if let Some(x) = (0..expected.len()).find(|&i| expected[i] != f.table[i]) {
            return Err(Error::Domain(format!(
                "trace form disagrees with the table at index {x}"
            )));
        }
        Ok(Self {
            symbolic: Some(terms),
            ..f
        })
    }

    pub fn zero(ctx: Arc<FieldCtx>) -> Self {
        let size = ctx.size();
        Self {
            ctx,
            table: vec![0; size],
            symbolic: Some(Vec::new()),
        }
    }

    /// `x -> Tr_n(c x)`.
    pub fn linear(ctx: Arc<FieldCtx>, c: FieldElem) -> Self {
        Self::from_trace_form(ctx, vec![TraceTerm::new(c, 1)])
    }

    /// Build from a closure over field elements.
    pub fn from_fn(ctx: Arc<FieldCtx>, f: impl Fn(FieldElem) -> u8) -> Self {
        let table = ctx.elements().map(|x| f(x) % 3).collect();
        Self {
            ctx,
            table,
            symbolic: None,
        }
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn ctx_arc(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn table(&self) -> &[u8] {
        &self.table
    }

    pub fn into_table(self) -> Vec<u8> {
        self.table
    }

    #[inline]
    pub fn value(&self, x: FieldElem) -> u8 {
        self.table[x.index() as usize]
    }

    pub fn symbolic(&self) -> Option<&[TraceTerm]> {
        self.symbolic.as_deref()
    }

    /// Pointwise sum (the symbolic form is kept when both have one).
    pub fn add(&self, other: &TernaryFn) -> TernaryFn {
        assert_eq!(*self.ctx, *other.ctx, "functions over different fields");
        let table = self
            .table
            .iter()
            .zip(&other.table)
            .map(|(&a, &b)| (a + b) % 3)
            .collect();
        let symbolic = match (&self.symbolic, &other.symbolic) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        TernaryFn {
            ctx: self.ctx.clone(),
            table,
            symbolic,
        }
    }

    /// `x -> c · f(x)` for a prime-field scalar.
    pub fn scale(&self, c: u8) -> TernaryFn {
        let table = self.table.iter().map(|&a| (a * (c % 3)) % 3).collect();
        let symbolic = self.symbolic.as_ref().map(|terms| {
            terms
                .iter()
                .map(|t| TraceTerm::new(self.ctx.scale(t.coeff, c), t.exponent))
                .collect()
        });
        TernaryFn {
            ctx: self.ctx.clone(),
            table,
            symbolic,
        }
    }

    /// `x -> f(λx + μ)`.
    pub fn compose_affine(&self, lambda: FieldElem, mu: FieldElem) -> TernaryFn {
        let ctx = &self.ctx;
        let table = ctx
            .elements()
            .map(|x| self.value(ctx.add(ctx.mul(lambda, x), mu)))
            .collect();
        TernaryFn {
            ctx: self.ctx.clone(),
            table,
            symbolic: None,
        }
    }

    /// Value histogram `[#0, #1, #2]`.
    pub fn histogram(&self) -> [usize; 3] {
        let mut h = [0usize; 3];
        for &v in &self.table {
            h[v as usize] += 1;
        }
        h
    }
}

/// Evaluate a trace form at one point.
pub fn eval_trace_form_at(ctx: &FieldCtx, terms: &[TraceTerm], x: FieldElem) -> u8 {
    terms.iter().fold(0u8, |acc, t| {
        let y = ctx.mul(t.coeff, ctx.pow(x, t.exponent));
        (acc + ctx.trace_abs(y)) % 3
    })
}

/// Tabulate a trace form by walking the multiplicative group in log order.
pub fn eval_trace_form(ctx: &FieldCtx, terms: &[TraceTerm]) -> Vec<u8> {
    let order = ctx.order();
    let trace = ctx.trace_table();
    let live: Vec<(u64, u64)> = terms
        .iter()
        .filter_map(|t| {
            let lc = ctx.log_of(t.coeff)?;
            Some((lc, ctx.reduce_exponent(t.exponent)))
        })
        .collect();

    const CHUNK: usize = 1 << 14;
    let mut by_log = vec![0u8; order as usize];
    by_log
        .par_chunks_mut(CHUNK)
        .enumerate()
        .for_each(|(ci, chunk)| {
            let j0 = (ci * CHUNK) as u128;
            let mut e: Vec<u64> = live
                .iter()
                .map(|&(lc, d)| ((lc as u128 + j0 * d as u128) % order as u128) as u64)
                .collect();
            for slot in chunk.iter_mut() {
                let mut v = 0u8;
                for (ei, &(_, d)) in e.iter_mut().zip(&live) {
                    v += trace[ctx.exp_of(*ei).index() as usize];
                    *ei += d;
                    if *ei >= order {
                        *ei -= order;
                    }
                }
                *slot = v % 3;
            }
        });

    let mut table = vec![0u8; ctx.size()];
    for (j, &v) in by_log.iter().enumerate() {
        table[ctx.exp_of(j as u64).index() as usize] = v;
    }
    table[0] = eval_trace_form_at(ctx, terms, FieldElem::ZERO);
    table
}
