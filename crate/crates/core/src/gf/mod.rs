//! Arithmetic in GF(3^n) through discrete-log tables.
//!
//! Elements are stored as their canonical index: the polynomial-basis
//! coordinates `t_0 + t_1 x + ... + t_{n-1} x^{n-1}` read as a little-endian
//! base-3 integer. Multiplicative operations reduce to index arithmetic
//! modulo `3^n - 1` through the `exp`/`log` tables; additive ones work digit
//! by digit.

pub mod linalg;
pub(crate) mod poly;

use std::fmt;

use crate::error::{domain, Error, Result};
use linalg::Mat3;

/// Table cap used when none is given explicitly.
pub const DEFAULT_MAX_DEGREE: usize = 14;

/// Indices must fit in a `u32`: 3^20 < 2^32 < 3^21.
pub const HARD_MAX_DEGREE: usize = 20;

/// An element of GF(3^n), identified by its canonical coordinate index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    #[inline]
    pub const fn from_index(index: u32) -> Self {
        FieldElem(index)
    }

    #[inline]
    pub const fn index(self) -> u32 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// A realized field GF(3^n) together with its subfield tower.
#[derive(Clone)]
pub struct FieldCtx {
    n: usize,
    size: u32,
    order: u64,
    modulus: Vec<u8>,
    pow3: Vec<u32>,
    generator: FieldElem,
    order_primes: Vec<u64>,
    exp: Vec<u32>,
    log: Vec<u32>,
    trace: Vec<u8>,
}

impl fmt::Debug for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldCtx")
            .field("n", &self.n)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish_non_exhaustive()
    }
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.modulus == other.modulus && self.generator == other.generator
    }
}

impl Eq for FieldCtx {}

fn prime_factors(mut m: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            out.push(p);
            while m.is_multiple_of(p) {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        out.push(m);
    }
    out
}

fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

/// Solve `a * y = b (mod m)`, returning the least nonnegative solution.
pub(crate) fn solve_linear_congruence(a: u128, b: u128, m: u128) -> Option<u128> {
    let (a, b, m) = (a % m, b % m, m as i128);
    let (g, x, _) = ext_gcd(a as i128, m);
    let g = g.abs();
    if (b as i128) % g != 0 {
        return None;
    }
    let m_red = m / g;
    let y = (x.rem_euclid(m_red) * ((b as i128 / g) % m_red)).rem_euclid(m_red);
    Some(y as u128)
}

/// Lexicographically smallest monic irreducible of degree `n`: the
/// coefficients of `1, x, ..., x^{n-1}` are read as a little-endian base-3
/// counter and the first irreducible one wins.
pub fn default_modulus(n: usize) -> Vec<u8> {
    assert!(n >= 1);
    let mut coeffs = vec![0u8; n + 1];
    coeffs[n] = 1;
    loop {
        if poly::smallest_factor_degree(&coeffs).is_none() {
            return coeffs;
        }
        // increment the low n digits
        let mut i = 0;
        loop {
            assert!(i < n, "no irreducible polynomial of degree {n}");
            coeffs[i] += 1;
            if coeffs[i] == 3 {
                coeffs[i] = 0;
                i += 1;
            } else {
                break;
            }
        }
    }
}

/// Multiply a coordinate vector by `x` modulo a monic modulus, in place.
fn times_x(c: &mut [u8], modulus: &[u8]) {
    let n = c.len();
    let top = c[n - 1];
    for i in (1..n).rev() {
        c[i] = c[i - 1];
    }
    c[0] = 0;
    if top != 0 {
        for i in 0..n {
            c[i] = poly::sub3(c[i], poly::mul3(top, modulus[i]));
        }
    }
}

fn poly_pow_mod(base: &[u8], mut e: u64, m: &[u8]) -> Vec<u8> {
    let mut result = vec![1u8];
    let mut b = poly::rem(base, m);
    while e > 0 {
        if e & 1 == 1 {
            result = poly::mul_mod(&result, &b, m);
        }
        b = poly::mul_mod(&b, &b, m);
        e >>= 1;
    }
    result
}

impl FieldCtx {
    /// Build GF(3^n) with the default table cap.
    pub fn new(n: usize, modulus: Option<&[u8]>) -> Result<Self> {
        Self::with_max_degree(n, modulus, DEFAULT_MAX_DEGREE)
    }

    /// Build GF(3^n) allowing degrees up to `max_degree` (itself capped at
    /// [`HARD_MAX_DEGREE`]).
    pub fn with_max_degree(n: usize, modulus: Option<&[u8]>, max_degree: usize) -> Result<Self> {
        if n == 0 {
            return domain("extension degree must be positive");
        }
        let max = max_degree.min(HARD_MAX_DEGREE);
        if n > max {
            return Err(Error::TooLarge { n, max });
        }
        let modulus = match modulus {
            Some(m) => {
                if m.len() != n + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients for degree {n}, got {}",
                        n + 1,
                        m.len()
                    )));
                }
                if let Some(&bad) = m.iter().find(|&&c| c > 2) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficient {bad} is not a trit"
                    )));
                }
                if m[n] != 1 {
                    return Err(Error::InvalidModulus("modulus must be monic".into()));
                }
                if let Some(d) = poly::smallest_factor_degree(m) {
                    return Err(Error::ReducibleModulus { factor_degree: d });
                }
                m.to_vec()
            }
            None => default_modulus(n),
        };

        let mut pow3 = Vec::with_capacity(n + 1);
        let mut p = 1u32;
        for _ in 0..=n {
            pow3.push(p);
            p = p.wrapping_mul(3);
        }
        let size = pow3[n];
        let order = size as u64 - 1;
        let order_primes = prime_factors(order);

        let is_primitive = |c: &[u8]| {
            let one = vec![1u8];
            let full = poly_pow_mod(c, order, &modulus);
            full == one
                && order_primes
                    .iter()
                    .all(|&q| poly_pow_mod(c, order / q, &modulus) != one)
        };
        let coords_of = |idx: u32| -> Vec<u8> {
            let mut v = Vec::with_capacity(n);
            let mut x = idx;
            for _ in 0..n {
                v.push((x % 3) as u8);
                x /= 3;
            }
            v
        };
        let gen_idx = (2..size)
            .find(|&i| {
                let mut c = coords_of(i);
                poly::trim(&mut c);
                is_primitive(&c)
            })
            .ok_or_else(|| Error::Inconsistency("no primitive element found".into()))?;
        let gen_coords = coords_of(gen_idx);

        let mut exp = vec![0u32; order as usize];
        let mut log = vec![u32::MAX; size as usize];
        let mut cur = vec![0u8; n];
        cur[0] = 1;
        let gen_top = gen_coords.iter().rposition(|&c| c != 0).unwrap_or(0);
        let mut shifted = vec![0u8; n];
        let mut acc = vec![0u8; n];
        for (j, slot) in exp.iter_mut().enumerate() {
            let idx = cur.iter().rev().fold(0u32, |a, &d| a * 3 + d as u32);
            if log[idx as usize] != u32::MAX {
                return Err(Error::Inconsistency(format!(
                    "generator cycle repeats at step {j}"
                )));
            }
            *slot = idx;
            log[idx as usize] = j as u32;
            // cur <- cur * g
            shifted.copy_from_slice(&cur);
            acc.iter_mut().for_each(|a| *a = 0);
            for (i, &gc) in gen_coords.iter().enumerate().take(gen_top + 1) {
                if i > 0 {
                    times_x(&mut shifted, &modulus);
                }
                if gc != 0 {
                    for (a, &s) in acc.iter_mut().zip(&shifted) {
                        *a = poly::add3(*a, poly::mul3(gc, s));
                    }
                }
            }
            cur.copy_from_slice(&acc);
        }

        let mut ctx = FieldCtx {
            n,
            size,
            order,
            modulus,
            pow3,
            generator: FieldElem(gen_idx),
            order_primes,
            exp,
            log,
            trace: Vec::new(),
        };

        // absolute trace is linear: tabulate it from the basis images
        let basis_traces: Vec<u8> = (0..n)
            .map(|i| {
                let t = ctx.trace_rel_unchecked(FieldElem(ctx.pow3[i]), 1);
                if t.0 > 2 {
                    Err(Error::Inconsistency(format!(
                        "trace of x^{i} left the prime field"
                    )))
                } else {
                    Ok(t.0 as u8)
                }
            })
            .collect::<Result<_>>()?;
        let mut trace = vec![0u8; size as usize];
        for (i, &ti) in basis_traces.iter().enumerate() {
            let block = ctx.pow3[i] as usize;
            for t in 1..3u8 {
                let add = poly::mul3(t, ti);
                for r in 0..block {
                    trace[t as usize * block + r] = poly::add3(trace[r], add);
                }
            }
        }
        ctx.trace = trace;
        Ok(ctx)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of field elements, `3^n`.
    #[inline]
    pub fn size(&self) -> usize {
        self.size as usize
    }

    /// Order of the multiplicative group, `3^n - 1`.
    #[inline]
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    pub fn generator(&self) -> FieldElem {
        self.generator
    }

    /// Prime divisors of `3^n - 1`.
    pub fn order_primes(&self) -> &[u64] {
        &self.order_primes
    }

    /// Divisors of `n`, i.e. degrees of the subfields of this field.
    pub fn subfield_degrees(&self) -> Vec<usize> {
        (1..=self.n).filter(|d| self.n.is_multiple_of(*d)).collect()
    }

    #[inline]
    pub fn pow3(&self, i: usize) -> u32 {
        self.pow3[i]
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + Clone {
        (0..self.size).map(FieldElem)
    }

    /// The prime-field element `c mod 3`.
    #[inline]
    pub fn prime(&self, c: u8) -> FieldElem {
        FieldElem((c % 3) as u32)
    }

    pub fn coords(&self, x: FieldElem) -> Vec<u8> {
        let mut v = Vec::with_capacity(self.n);
        let mut i = x.0;
        for _ in 0..self.n {
            v.push((i % 3) as u8);
            i /= 3;
        }
        v
    }

    pub fn from_coords(&self, coords: &[u8]) -> Result<FieldElem> {
        if coords.len() != self.n {
            return domain(format!(
                "expected {} coordinates, got {}",
                self.n,
                coords.len()
            ));
        }
        if coords.iter().any(|&c| c > 2) {
            return domain("coordinates must be trits");
        }
        Ok(FieldElem(
            coords.iter().rev().fold(0u32, |a, &d| a * 3 + d as u32),
        ))
    }

    pub fn element(&self, index: u32) -> Result<FieldElem> {
        if index < self.size {
            Ok(FieldElem(index))
        } else {
            domain(format!(
                "index {index} outside a field of size {}",
                self.size
            ))
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        let (mut x, mut y) = (a.0, b.0);
        let mut r = 0u32;
        let mut p = 1u32;
        while x | y != 0 {
            let mut s = x % 3 + y % 3;
            if s >= 3 {
                s -= 3;
            }
            r += s * p;
            x /= 3;
            y /= 3;
            p *= 3;
        }
        FieldElem(r)
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        let mut x = a.0;
        let mut r = 0u32;
        let mut p = 1u32;
        while x != 0 {
            let d = x % 3;
            if d != 0 {
                r += (3 - d) * p;
            }
            x /= 3;
            p *= 3;
        }
        FieldElem(r)
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    /// Multiply by a prime-field scalar.
    #[inline]
    pub fn scale(&self, a: FieldElem, c: u8) -> FieldElem {
        match c % 3 {
            0 => FieldElem::ZERO,
            1 => a,
            _ => self.neg(a),
        }
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        let s = self.log[a.0 as usize] as u64 + self.log[b.0 as usize] as u64;
        let s = if s >= self.order { s - self.order } else { s };
        FieldElem(self.exp[s as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return domain("inverse of zero");
        }
        let l = self.log[a.0 as usize] as u64;
        Ok(self.exp_of((self.order - l) % self.order))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `g^i` for the context generator `g`.
    #[inline]
    pub fn exp_of(&self, i: u64) -> FieldElem {
        FieldElem(self.exp[(i % self.order) as usize])
    }

    /// Discrete log base the generator; `None` for zero.
    #[inline]
    pub fn log_of(&self, a: FieldElem) -> Option<u64> {
        if a.is_zero() {
            None
        } else {
            Some(self.log[a.0 as usize] as u64)
        }
    }

    /// Exponent reduced into `[0, 3^n - 1)`.
    #[inline]
    pub fn reduce_exponent(&self, e: u128) -> u64 {
        (e % self.order as u128) as u64
    }

    pub fn pow(&self, a: FieldElem, e: u128) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        match self.log_of(a) {
            None => FieldElem::ZERO,
            Some(l) => {
                let r = (l as u128 * (e % self.order as u128)) % self.order as u128;
                FieldElem(self.exp[r as usize])
            }
        }
    }

    /// Signed power; negative exponents invert first.
    pub fn pow_i(&self, a: FieldElem, e: i128) -> Result<FieldElem> {
        if e >= 0 {
            Ok(self.pow(a, e as u128))
        } else {
            Ok(self.pow(self.inv(a)?, e.unsigned_abs()))
        }
    }

    /// `x^(3^j)`.
    #[inline]
    pub fn frobenius(&self, a: FieldElem, j: usize) -> FieldElem {
        match self.log_of(a) {
            None => FieldElem::ZERO,
            Some(l) => {
                let e = self.pow3[j % self.n] as u128;
                FieldElem(self.exp[((l as u128 * e) % self.order as u128) as usize])
            }
        }
    }

    /// Absolute trace `Tr_n(x)` as a value in {0, 1, 2}.
    #[inline]
    pub fn trace_abs(&self, a: FieldElem) -> u8 {
        self.trace[a.0 as usize]
    }

    /// The full absolute-trace table, indexed canonically.
    pub fn trace_table(&self) -> &[u8] {
        &self.trace
    }

    fn trace_rel_unchecked(&self, a: FieldElem, k: usize) -> FieldElem {
        (0..self.n / k).fold(FieldElem::ZERO, |acc, i| {
            self.add(acc, self.frobenius(a, i * k))
        })
    }

    /// Relative trace `Tr^n_k(x)`, landing in the embedded GF(3^k).
    pub fn trace_rel(&self, a: FieldElem, k: usize) -> Result<FieldElem> {
        if k == 0 || !self.n.is_multiple_of(k) {
            return domain(format!("subfield degree {k} does not divide {}", self.n));
        }
        Ok(self.trace_rel_unchecked(a, k))
    }

    /// Absolute trace of an element of the embedded GF(3^k), i.e.
    /// `sum_{i<k} y^(3^i)`.
    pub fn trace_sub(&self, y: FieldElem, k: usize) -> Result<u8> {
        if !self.in_subfield(y, k)? {
            return domain(format!("element is not in the subfield of degree {k}"));
        }
        let t = (0..k).fold(FieldElem::ZERO, |acc, i| {
            self.add(acc, self.frobenius(y, i))
        });
        if t.0 > 2 {
            return Err(Error::Inconsistency("subfield trace left GF(3)".into()));
        }
        Ok(t.0 as u8)
    }

    pub fn is_square(&self, a: FieldElem) -> Result<bool> {
        match self.log_of(a) {
            None => domain("zero is neither a square nor a nonsquare"),
            Some(l) => Ok(l % 2 == 0),
        }
    }

    /// `I = g^((3^n - 1)/4)`, a primitive 4th root of unity.
    pub fn fourth_root_of_unity(&self) -> Result<FieldElem> {
        if !self.order.is_multiple_of(4) {
            return domain(format!("4 does not divide 3^{} - 1", self.n));
        }
        Ok(self.exp_of(self.order / 4))
    }

    pub fn in_subfield(&self, a: FieldElem, m: usize) -> Result<bool> {
        if m == 0 || !self.n.is_multiple_of(m) {
            return domain(format!("subfield degree {m} does not divide {}", self.n));
        }
        Ok(match self.log_of(a) {
            None => true,
            Some(l) => l % (self.order / (self.pow3[m] as u64 - 1)) == 0,
        })
    }

    /// Elements of the embedded GF(3^m), zero first, then by increasing log.
    pub fn subfield_elements(&self, m: usize) -> Result<Vec<FieldElem>> {
        if m == 0 || !self.n.is_multiple_of(m) {
            return domain(format!("subfield degree {m} does not divide {}", self.n));
        }
        let sub_order = self.pow3[m] as u64 - 1;
        let step = self.order / sub_order;
        let mut v = Vec::with_capacity(sub_order as usize + 1);
        v.push(FieldElem::ZERO);
        v.extend((0..sub_order).map(|j| self.exp_of(j * step)));
        Ok(v)
    }

    /// An F_3-basis `1, γ, ..., γ^{m-1}` of the embedded GF(3^m), where γ
    /// generates its multiplicative group.
    pub fn subfield_basis(&self, m: usize) -> Result<Vec<FieldElem>> {
        if m == 0 || !self.n.is_multiple_of(m) {
            return domain(format!("subfield degree {m} does not divide {}", self.n));
        }
        let gamma = self.exp_of(self.order / (self.pow3[m] as u64 - 1));
        let mut out = Vec::with_capacity(m);
        let mut cur = FieldElem::ONE;
        for _ in 0..m {
            out.push(cur);
            cur = self.mul(cur, gamma);
        }
        Ok(out)
    }

    /// Solve `c^(3^m - 1) = t`. The full solution set is `c * GF(3^m)^*`.
    pub fn solve_coset(&self, m: usize, t: FieldElem) -> Result<Option<FieldElem>> {
        if m == 0 || !self.n.is_multiple_of(m) {
            return domain(format!("subfield degree {m} does not divide {}", self.n));
        }
        let Some(lt) = self.log_of(t) else {
            return domain("cannot solve for a zero right-hand side");
        };
        let a = self.pow3[m] as u128 - 1;
        Ok(solve_linear_congruence(a, lt as u128, self.order as u128)
            .map(|y| self.exp_of(y as u64)))
    }

    /// Coordinates of `elems` as the columns of an `n x len` matrix.
    pub fn coordinate_matrix(&self, elems: &[FieldElem]) -> Mat3 {
        let mut m = Mat3::zeros(self.n, elems.len());
        for (j, &e) in elems.iter().enumerate() {
            for (i, c) in self.coords(e).into_iter().enumerate() {
                m.set(i, j, c);
            }
        }
        m
    }

    /// F_3-linear combination `sum coeffs[i] * elems[i]`.
    pub fn combine(&self, elems: &[FieldElem], coeffs: &[u8]) -> FieldElem {
        elems
            .iter()
            .zip(coeffs)
            .fold(FieldElem::ZERO, |acc, (&e, &c)| {
                self.add(acc, self.scale(e, c))
            })
    }

    /// All `3^len` F_3-combinations of `basis`, the combination with
    /// coefficient digits `d` (little-endian base 3) stored at index `d`.
    pub fn span(&self, basis: &[FieldElem]) -> Vec<FieldElem> {
        let mut out = vec![FieldElem::ZERO];
        out.reserve(3usize.pow(basis.len() as u32));
        for &b in basis {
            let len = out.len();
            let b2 = self.neg(b);
            for shift in [b, b2] {
                for r in 0..len {
                    let v = self.add(out[r], shift);
                    out.push(v);
                }
            }
        }
        out
    }

    /// Precomputed translation `x -> x + c` for bulk use.
    pub fn translation(&self, c: FieldElem) -> Translation {
        let h = self.n / 2;
        let split = self.pow3[h];
        let coords = self.coords(c);
        let digit_add = |v: u32, offs: &[u8]| -> u32 {
            let mut x = v;
            let mut r = 0u32;
            let mut p = 1u32;
            for &o in offs {
                let mut s = x % 3 + o as u32;
                if s >= 3 {
                    s -= 3;
                }
                r += s * p;
                x /= 3;
                p *= 3;
            }
            r
        };
        let lo = (0..split).map(|l| digit_add(l, &coords[..h])).collect();
        let hi = (0..self.pow3[self.n - h])
            .map(|t| digit_add(t, &coords[h..]) * split)
            .collect();
        Translation { split, lo, hi }
    }

    /// `g^k` log form, `0` for zero.
    pub fn fmt_log(&self, a: FieldElem) -> String {
        match self.log_of(a) {
            None => "0".to_string(),
            Some(l) => format!("g^{l}"),
        }
    }

    /// Trit string `t_0 t_1 ... t_{n-1}`.
    pub fn fmt_trits(&self, a: FieldElem) -> String {
        self.coords(a)
            .iter()
            .map(|&c| char::from(b'0' + c))
            .collect()
    }

    /// Parse `g^<k>` (k may be negative), `t:<trits>` or `0`.
    pub fn parse_elem(&self, s: &str) -> Result<FieldElem> {
        let s = s.trim();
        if s == "0" {
            return Ok(FieldElem::ZERO);
        }
        if let Some(k) = s.strip_prefix("g^") {
            let k: i128 = k
                .parse()
                .map_err(|_| Error::Domain(format!("bad exponent in element literal {s:?}")))?;
            return self.pow_i(self.generator, k);
        }
        if let Some(t) = s.strip_prefix("t:") {
            let digits: Vec<u8> = t
                .chars()
                .map(|c| match c {
                    '0'..='2' => Ok(c as u8 - b'0'),
                    _ => Err(Error::Domain(format!("bad trit {c:?} in {s:?}"))),
                })
                .collect::<Result<_>>()?;
            return self.from_coords(&digits);
        }
        domain(format!(
            "element literal {s:?} is neither g^k nor t:<trits>"
        ))
    }
}

/// Parse a comma-separated modulus, constant term first (`"2,1,0,0,1"`).
pub fn parse_modulus(s: &str) -> Result<Vec<u8>> {
    s.split(',')
        .map(|t| match t.trim() {
            "0" => Ok(0),
            "1" => Ok(1),
            "2" => Ok(2),
            other => Err(Error::InvalidModulus(format!("bad trit {other:?}"))),
        })
        .collect()
}

pub fn fmt_modulus(m: &[u8]) -> String {
    m.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
}

/// Translation `x -> x + c` split into low and high digit halves.
#[derive(Debug, Clone)]
pub struct Translation {
    split: u32,
    lo: Vec<u32>,
    hi: Vec<u32>,
}

impl Translation {
    #[inline]
    pub fn apply(&self, x: FieldElem) -> FieldElem {
        FieldElem(self.hi[(x.0 / self.split) as usize] + self.lo[(x.0 % self.split) as usize])
    }

    /// Calls `f(x, x + c)` on canonical indices for every `x` in order.
    #[inline]
    pub fn for_each(&self, mut f: impl FnMut(usize, usize)) {
        let mut x = 0usize;
        for &h in &self.hi {
            for &l in &self.lo {
                f(x, (h + l) as usize);
                x += 1;
            }
        }
    }
}
