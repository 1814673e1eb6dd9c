#![allow(dead_code)]

use std::sync::Arc;

use bent3::mm::{d2, Subspace};
use bent3::{FieldCtx, TernaryFn};
use rand::Rng;

pub fn field(n: usize) -> Arc<FieldCtx> {
    Arc::new(FieldCtx::new(n, None).unwrap())
}

pub fn random_fn(ctx: &Arc<FieldCtx>, rng: &mut impl Rng) -> TernaryFn {
    let table = (0..ctx.size()).map(|_| rng.gen_range(0..3u8)).collect();
    TernaryFn::from_table(ctx.clone(), table).unwrap()
}

/// Every `D_{c,d} f` for `c, d` in `V`, checked over the whole field.
pub fn d2_triple_loop(f: &TernaryFn, v: &Subspace) -> bool {
    let elems = v.elements(f.ctx());
    elems.iter().all(|&c| {
        elems
            .iter()
            .all(|&d| d2(f, c, d).table().iter().all(|&x| x == 0))
    })
}

/// A random subspace of the given dimension.
pub fn random_subspace(ctx: &FieldCtx, dim: usize, rng: &mut impl Rng) -> Subspace {
    loop {
        let basis = (0..dim)
            .map(|_| bent3::FieldElem::from_index(rng.gen_range(1..ctx.size() as u32)))
            .collect();
        if let Ok(s) = Subspace::from_basis(ctx, basis) {
            return s;
        }
    }
}
