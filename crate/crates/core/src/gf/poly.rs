//! Dense polynomials over GF(3), constant term first.
//!
//! Only what field construction needs: reduction, multiplication modulo a
//! monic polynomial, gcd, and a distinct-degree irreducibility test.

#[inline]
pub(crate) fn add3(a: u8, b: u8) -> u8 {
    let s = a + b;
    if s >= 3 {
        s - 3
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub3(a: u8, b: u8) -> u8 {
    add3(a, 3 - b)
}

#[inline]
pub(crate) fn mul3(a: u8, b: u8) -> u8 {
    (a * b) % 3
}

/// Multiplicative inverse in GF(3); `a` must be nonzero.
#[inline]
pub(crate) fn inv3(a: u8) -> u8 {
    debug_assert!(a != 0);
    a
}

pub(crate) fn trim(p: &mut Vec<u8>) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[u8]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

/// Remainder of `a` modulo `m` (m nonzero).
pub(crate) fn rem(a: &[u8], m: &[u8]) -> Vec<u8> {
    let dm = degree(m).expect("division by zero polynomial");
    let lead_inv = inv3(m[dm]);
    let mut r = a.to_vec();
    trim(&mut r);
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let q = mul3(r[dr], lead_inv);
        let shift = dr - dm;
        for (i, &mc) in m[..=dm].iter().enumerate() {
            r[i + shift] = sub3(r[i + shift], mul3(q, mc));
        }
        trim(&mut r);
    }
    r
}

pub(crate) fn mul(a: &[u8], b: &[u8]) -> Vec<u8> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u8; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add3(out[i + j], mul3(x, y));
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn mul_mod(a: &[u8], b: &[u8], m: &[u8]) -> Vec<u8> {
    rem(&mul(a, b), m)
}

pub(crate) fn sub(a: &[u8], b: &[u8]) -> Vec<u8> {
    let len = a.len().max(b.len());
    let mut out: Vec<u8> = (0..len)
        .map(|i| sub3(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn gcd(a: &[u8], b: &[u8]) -> Vec<u8> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let r = rem(&x, &y);
        x = y;
        y = r;
    }
    x
}

/// Distinct-degree test. Returns `None` for an irreducible monic `m`, or the
/// smallest degree of an irreducible factor otherwise.
pub(crate) fn smallest_factor_degree(m: &[u8]) -> Option<usize> {
    let n = degree(m).expect("zero modulus");
    let x = vec![0u8, 1];
    let mut h = rem(&x, m);
    for d in 1..=n / 2 {
        // h <- h^3 mod m, so h = x^(3^d)
        let h2 = mul_mod(&h, &h, m);
        h = mul_mod(&h2, &h, m);
        let g = gcd(&sub(&h, &x), m);
        if degree(&g).unwrap_or(0) > 0 {
            return Some(d);
        }
    }
    None
}

/// Evaluate a GF(3)-coefficient polynomial at an integer point reduced mod 3.
#[cfg(test)]
pub(crate) fn eval_prime(p: &[u8], x: u8) -> u8 {
    p.iter().rev().fold(0u8, |acc, &c| add3(mul3(acc, x), c))
}
