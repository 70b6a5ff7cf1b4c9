//! Exact arithmetic: rationals, sparse polynomials, Gröbner bases, rational
//! functions and matrix rank. Nothing in here rounds.

mod gcd;
mod groebner;
mod matrix;
mod monomial;
mod poly;
mod ratfunc;
mod rational;

use num_bigint::BigUint;
use num_traits::One;

pub use gcd::{exact_quotient, gcd};
pub use groebner::{
    buchberger, divide, is_groebner_basis, normal_form, s_polynomial, standard_monomials,
};
pub use matrix::ExactMatrix;
pub use monomial::{Degree, Monomial, MonomialOrder};
pub use poly::{var_names, Coefficient, Polynomial, QPoly};
pub use ratfunc::RationalFunction;
pub use rational::Rational;

/// Binomial coefficient with `C(n, k) = 0` whenever `n < k`, negative `n` included.
pub fn binomial(n: i64, k: u64) -> BigUint {
    if n < 0 || (n as u64) < k {
        return BigUint::from(0u32);
    }
    let n = n as u64;
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// [`binomial`] for callers that know the value fits.
pub fn binomial_i64(n: i64, k: u64) -> i64 {
    i64::try_from(binomial(n, k)).expect("binomial coefficient overflows i64")
}
