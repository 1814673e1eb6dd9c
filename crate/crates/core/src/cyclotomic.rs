//! Exact arithmetic in the Eisenstein integers Z[ω], ω = e^{2πi/3}.
//!
//! Walsh coefficients of ternary functions live here, so bentness becomes the
//! integer predicate `norm(S) = 3^n`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// `u + v·ω` with `ω² = -1 - ω`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct EisensteinInt {
    pub u: i64,
    pub v: i64,
}

impl EisensteinInt {
    pub const ZERO: Self = Self { u: 0, v: 0 };
    pub const ONE: Self = Self { u: 1, v: 0 };
    pub const OMEGA: Self = Self { u: 0, v: 1 };

    #[inline]
    pub const fn new(u: i64, v: i64) -> Self {
        Self { u, v }
    }

    /// `|u + vω|² = u² - uv + v²`.
    #[inline]
    pub fn norm(self) -> i64 {
        self.u * self.u - self.u * self.v + self.v * self.v
    }

    /// Multiply by ω: `(u, v) -> (-v, u - v)`.
    #[inline]
    pub fn mul_omega(self) -> Self {
        Self::new(-self.v, self.u - self.v)
    }

    /// Multiply by ω²: `(u, v) -> (v - u, -u)`.
    #[inline]
    pub fn mul_omega2(self) -> Self {
        Self::new(self.v - self.u, -self.u)
    }

    /// ω^j for j taken mod 3.
    #[inline]
    pub fn omega_pow(j: u8) -> Self {
        match j % 3 {
            0 => Self::ONE,
            1 => Self::OMEGA,
            _ => Self::new(-1, -1),
        }
    }

    /// Scale by an ordinary integer.
    #[inline]
    pub fn scale(self, m: i64) -> Self {
        Self::new(self.u * m, self.v * m)
    }

    /// Sum of `c_j` copies of ω^j.
    #[inline]
    pub fn from_counts(c0: i64, c1: i64, c2: i64) -> Self {
        Self::new(c0 - c2, c1 - c2)
    }

    /// Decompose `self = sign · m · ω^j` with `sign ∈ {+1, -1}`.
    pub fn as_root_multiple(self, m: i64) -> Option<RootMultiple> {
        assert!(m > 0, "magnitude must be positive");
        if self.norm() != m * m {
            return None;
        }
        for sign in [1i8, -1] {
            for j in 0..3u8 {
                if Self::omega_pow(j).scale(m * sign as i64) == self {
                    return Some(RootMultiple { sign, j });
                }
            }
        }
        None
    }
}

/// Result of [`EisensteinInt::as_root_multiple`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootMultiple {
    pub sign: i8,
    pub j: u8,
}

impl Add for EisensteinInt {
    type Output = Self;
    #[inline]
    fn add(self, o: Self) -> Self {
        Self::new(self.u + o.u, self.v + o.v)
    }
}

impl AddAssign for EisensteinInt {
    #[inline]
    fn add_assign(&mut self, o: Self) {
        self.u += o.u;
        self.v += o.v;
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    #[inline]
    fn sub(self, o: Self) -> Self {
        Self::new(self.u - o.u, self.v - o.v)
    }
}

impl SubAssign for EisensteinInt {
    #[inline]
    fn sub_assign(&mut self, o: Self) {
        self.u -= o.u;
        self.v -= o.v;
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.u, -self.v)
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    #[inline]
    fn mul(self, o: Self) -> Self {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = -1 - ω
        let bd = self.v * o.v;
        Self::new(self.u * o.u - bd, self.u * o.v + self.v * o.u - bd)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn ring_examples() {
        let w = EisensteinInt::OMEGA;
        assert_eq!(w * w, EisensteinInt::new(-1, -1));
        let x = EisensteinInt::new(5, -7);
        assert_eq!(EisensteinInt::ONE * x, x);
        assert_eq!(
            EisensteinInt::new(1, 2) + EisensteinInt::new(2, 1),
            EisensteinInt::new(3, 3)
        );
        assert_eq!(w * w * w, EisensteinInt::ONE);
        assert_eq!(x.mul_omega(), w * x);
        assert_eq!(x.mul_omega2(), w * w * x);
    }

    #[test]
    fn norms() {
        assert_eq!(EisensteinInt::new(3, 0).norm(), 9);
        assert_eq!(EisensteinInt::new(1, 2).norm(), 3);
        assert_eq!(EisensteinInt::ZERO.norm(), 0);
    }

    #[test]
    fn counts() {
        assert_eq!(EisensteinInt::from_counts(7, 7, 7), EisensteinInt::ZERO);
        assert_eq!(
            EisensteinInt::from_counts(81, 0, 0),
            EisensteinInt::new(81, 0)
        );
        let c = EisensteinInt::from_counts(4, 2, 3);
        assert_eq!(c, EisensteinInt::new(1, -1));
        assert_eq!(c.norm(), 3);
    }

    #[test]
    fn root_multiples() {
        let r = |u, v| EisensteinInt::new(u, v).as_root_multiple(9);
        assert_eq!(r(9, 0), Some(RootMultiple { sign: 1, j: 0 }));
        assert_eq!(r(-9, 0), Some(RootMultiple { sign: -1, j: 0 }));
        assert_eq!(r(0, 9), Some(RootMultiple { sign: 1, j: 1 }));
        assert_eq!(r(-9, -9), Some(RootMultiple { sign: 1, j: 2 }));
        assert_eq!(r(9, 9), Some(RootMultiple { sign: -1, j: 2 }));
        assert_eq!(r(3, 0), None);
    }

    #[test]
    fn exactly_six_root_multiples_of_given_norm() {
        let m = 9i64;
        let mut hits = 0;
        for u in -2 * m..=2 * m {
            for v in -2 * m..=2 * m {
                if EisensteinInt::new(u, v).as_root_multiple(m).is_some() {
                    hits += 1;
                }
            }
        }
        assert_eq!(hits, 6);
    }

    proptest! {
        #[test]
        fn norm_is_multiplicative(a in -10_000i64..10_000, b in -10_000i64..10_000,
                                  c in -10_000i64..10_000, d in -10_000i64..10_000) {
            let x = EisensteinInt::new(a, b);
            let y = EisensteinInt::new(c, d);
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn counts_shift_invariant(a in 0i64..1000, b in 0i64..1000, c in 0i64..1000, k in 0i64..1000) {
            prop_assert_eq!(
                EisensteinInt::from_counts(a, b, c),
                EisensteinInt::from_counts(a + k, b + k, c + k)
            );
        }

        #[test]
        fn norm_zero_only_at_origin(a in -1000i64..1000, b in -1000i64..1000) {
            let x = EisensteinInt::new(a, b);
            prop_assert!(x.norm() >= 0);
            prop_assert_eq!(x.norm() == 0, a == 0 && b == 0);
        }
    }
}
