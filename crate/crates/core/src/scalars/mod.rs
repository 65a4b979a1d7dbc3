//! Exact scalars: rationals, polynomials and rational functions in `y`, and
//! cyclotomic extensions of the latter.

mod cyclotomic;
mod rational;
mod ypoly;
mod yrational;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CyclotomicScalar};
pub use rational::{
    binomial, factorial, format_rational, int, parse_rational, rat, rat_from_int, rat_pow, Int,
    Rational,
};
pub use ypoly::YPolynomial;
pub use yrational::YRational;

/// Derives owned and mixed-reference arithmetic, plus the compound assignment
/// operators, from the `&T op &T` implementations.
macro_rules! forward_ops {
    ($t:ty) => {
        impl std::ops::Add<$t> for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl std::ops::Add<&$t> for $t {
            type Output = $t;
            fn add(self, rhs: &$t) -> $t {
                &self + rhs
            }
        }
        impl std::ops::Sub<$t> for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl std::ops::Sub<&$t> for $t {
            type Output = $t;
            fn sub(self, rhs: &$t) -> $t {
                &self - rhs
            }
        }
        impl std::ops::Mul<$t> for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl std::ops::Mul<&$t> for $t {
            type Output = $t;
            fn mul(self, rhs: &$t) -> $t {
                &self * rhs
            }
        }
        impl std::ops::Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
        impl std::ops::AddAssign<&$t> for $t {
            fn add_assign(&mut self, rhs: &$t) {
                *self = &*self + rhs;
            }
        }
        impl std::ops::AddAssign<$t> for $t {
            fn add_assign(&mut self, rhs: $t) {
                *self = &*self + &rhs;
            }
        }
        impl std::ops::SubAssign<&$t> for $t {
            fn sub_assign(&mut self, rhs: &$t) {
                *self = &*self - rhs;
            }
        }
        impl std::ops::MulAssign<&$t> for $t {
            fn mul_assign(&mut self, rhs: &$t) {
                *self = &*self * rhs;
            }
        }
    };
}
pub(crate) use forward_ops;
