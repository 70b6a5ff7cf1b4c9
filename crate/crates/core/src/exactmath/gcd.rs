//! Multivariate gcd over the rationals by recursive primitive remainder sequences.
//!
//! Polynomials are viewed as univariate in the first variable they involve,
//! with coefficients in the remaining variables. Intended for the small
//! parameter rings behind rational-function coefficients.

use super::groebner::divide;
use super::monomial::{Monomial, MonomialOrder};
use super::poly::QPoly;
use super::Rational;

fn degree_in(f: &QPoly, k: usize) -> Option<u32> {
    f.terms().map(|(m, _)| m.exponents()[k]).max()
}

/// Coefficient of `x_k^e`, as a polynomial not involving `x_k`.
fn coeff_in(f: &QPoly, k: usize, e: u32) -> QPoly {
    QPoly::from_terms(
        f.vars().clone(),
        (),
        f.terms()
            .filter(|(m, _)| m.exponents()[k] == e)
            .map(|(m, c)| {
                let mut exps = m.exponents().to_vec();
                exps[k] = 0;
                (Monomial::new(exps), c.clone())
            }),
    )
}

fn coefficients_in(f: &QPoly, k: usize) -> Vec<QPoly> {
    let mut exps: Vec<u32> = f.terms().map(|(m, _)| m.exponents()[k]).collect();
    exps.sort_unstable();
    exps.dedup();
    exps.into_iter().map(|e| coeff_in(f, k, e)).collect()
}

/// Exact quotient `f / g`; panics if `g` does not divide `f`.
pub fn exact_quotient(f: &QPoly, g: &QPoly) -> QPoly {
    let (q, r) = divide(f, std::slice::from_ref(g), MonomialOrder::Lex).expect("same ring");
    assert!(r.is_zero(), "exact_quotient: {g} does not divide {f}");
    q.into_iter().next().expect("one quotient")
}

fn normalize(f: QPoly) -> QPoly {
    f.monic(MonomialOrder::Lex)
}

/// Greatest common divisor, made monic under lex. `gcd(0, 0) = 0`.
pub fn gcd(f: &QPoly, g: &QPoly) -> QPoly {
    f.same_ring(g).expect("gcd operands share a ring");
    normalize(gcd_from(f, g, 0))
}

fn gcd_from(f: &QPoly, g: &QPoly, k: usize) -> QPoly {
    if f.is_zero() {
        return normalize(g.clone());
    }
    if g.is_zero() {
        return normalize(f.clone());
    }
    let n = f.nvars();
    if k >= n {
        return QPoly::one(f.vars().clone(), ());
    }
    let (df, dg) = (degree_in(f, k).unwrap_or(0), degree_in(g, k).unwrap_or(0));
    if df == 0 && dg == 0 {
        return gcd_from(f, g, k + 1);
    }
    let cf = content_in(f, k);
    let cg = content_in(g, k);
    let c = gcd_from(&cf, &cg, k + 1);
    let (mut a, mut b) = (exact_quotient(f, &cf), exact_quotient(g, &cg));
    if df < dg {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        let r = pseudo_remainder(&a, &b, k);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            primitive_part_in(&r, k)
        };
    }
    let h = primitive_part_in(&a, k);
    normalize(&c * &h)
}

fn content_in(f: &QPoly, k: usize) -> QPoly {
    let mut acc = QPoly::zero(f.vars().clone(), ());
    for c in coefficients_in(f, k) {
        acc = gcd_from(&acc, &c, k + 1);
        if acc.num_terms() == 1 && acc.total_degree() == super::Degree::Finite(0) {
            break;
        }
    }
    acc
}

fn primitive_part_in(f: &QPoly, k: usize) -> QPoly {
    normalize(exact_quotient(f, &content_in(f, k)))
}

/// A nonzero multiple of the remainder of `a` by `b` as polynomials in `x_k`.
fn pseudo_remainder(a: &QPoly, b: &QPoly, k: usize) -> QPoly {
    let db = degree_in(b, k).expect("nonzero divisor");
    let lb = coeff_in(b, k, db);
    let n = a.nvars();
    let mut r = a.clone();
    while let Some(dr) = degree_in(&r, k) {
        if dr < db || r.is_zero() {
            break;
        }
        let lr = coeff_in(&r, k, dr);
        let shift = QPoly::from_terms(
            a.vars().clone(),
            (),
            [(Monomial::var_power(n, k, dr - db), Rational::one())],
        );
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
    }
    r
}
