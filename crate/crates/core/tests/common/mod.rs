//! Seeded generators shared by the integration suites.

#![allow(dead_code)]

use omalous::exactmath::{var_names, ExactMatrix, Monomial, MonomialOrder, QPoly, Rational};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::new(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3)).unwrap()
}

pub fn ring(nvars: usize) -> std::sync::Arc<[String]> {
    let names = ["x", "y", "z", "w"];
    var_names(&names[..nvars])
}

/// Up to `max_terms` terms of total degree at most `max_deg`.
pub fn random_poly(rng: &mut ChaCha8Rng, nvars: usize, max_terms: usize, max_deg: u32) -> QPoly {
    let n = rng.gen_range(0..=max_terms);
    let terms: Vec<(Monomial, Rational)> = (0..n)
        .map(|_| {
            let mut left = max_deg;
            let exps = (0..nvars)
                .map(|_| {
                    let e = rng.gen_range(0..=left);
                    left -= e;
                    e
                })
                .collect();
            (Monomial::new(exps), small_rational(rng))
        })
        .collect();
    QPoly::from_terms(ring(nvars), (), terms)
}

pub fn random_nonzero_poly(
    rng: &mut ChaCha8Rng,
    nvars: usize,
    max_terms: usize,
    max_deg: u32,
) -> QPoly {
    loop {
        let p = random_poly(rng, nvars, max_terms.max(1), max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_order(rng: &mut ChaCha8Rng, nvars: usize) -> MonomialOrder {
    match rng.gen_range(0..3) {
        0 => MonomialOrder::Lex,
        1 => MonomialOrder::DegRevLex,
        _ => MonomialOrder::Block {
            front: rng.gen_range(1..=nvars),
        },
    }
}

/// Random `rows x cols` matrix, often rank-deficient: a product of factors
/// through a random inner dimension.
pub fn random_matrix(rng: &mut ChaCha8Rng, max_dim: usize) -> ExactMatrix<Rational> {
    let rows = rng.gen_range(1..=max_dim);
    let cols = rng.gen_range(1..=max_dim);
    let inner = rng.gen_range(1..=max_dim);
    let entry = |rng: &mut ChaCha8Rng| Rational::from_integer(rng.gen_range(-3i64..=3));
    let left: Vec<Vec<Rational>> = (0..rows)
        .map(|_| (0..inner).map(|_| entry(rng)).collect())
        .collect();
    let right: Vec<Vec<Rational>> = (0..inner)
        .map(|_| (0..cols).map(|_| entry(rng)).collect())
        .collect();
    let prod = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Rational::zero(), |acc, k| acc + &left[i][k] * &right[k][j])
                })
                .collect()
        })
        .collect();
    ExactMatrix::from_rational_rows(prod).unwrap()
}

/// No monomial of `r` is divisible by a leading monomial of `divisors`.
pub fn is_reduced(r: &QPoly, divisors: &[QPoly], order: MonomialOrder) -> bool {
    let leads: Vec<&Monomial> = divisors
        .iter()
        .filter_map(|g| g.leading_monomial(order))
        .collect();
    r.terms().all(|(m, _)| !leads.iter().any(|l| l.divides(m)))
}

/// Degree-`m` monomial exponent vectors in 4 variables, enumerated directly.
pub fn exponents_of_degree(m: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for a in 0..=m {
        for b in 0..=m - a {
            for c in 0..=m - a - b {
                out.push([a, b, c, m - a - b - c]);
            }
        }
    }
    out
}

fn eval_monomial(e: &[u32; 4], p: &[Rational; 4]) -> Rational {
    (0..4).fold(Rational::one(), |acc, i| acc * p[i].pow(e[i]))
}

/// Basis of the forms (as coefficient vectors on `exponents_of_degree(m)`)
/// vanishing at every point, by reduced row echelon form of the
/// point-by-monomial matrix.
pub fn vanishing_forms(points: &[[Rational; 4]], m: u32) -> Vec<Vec<Rational>> {
    let monos = exponents_of_degree(m);
    let n = monos.len();
    let mut rows: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| monos.iter().map(|e| eval_monomial(e, p)).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(k) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else {
            continue;
        };
        rows.swap(r, k);
        let inv = rows[r][c].recip().unwrap();
        rows[r] = rows[r].iter().map(|x| x * &inv).collect();
        for k in 0..rows.len() {
            if k != r && !rows[k][c].is_zero() {
                let f = rows[k][c].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[k].iter_mut().zip(&pivot_row) {
                    *x = &*x - &(&f * y);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![Rational::zero(); n];
            v[free] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][free].clone();
            }
            v
        })
        .collect()
}

/// Cayley–Bacharach by brute force: every form vanishing on `Z \ {z}`
/// vanishes at `z`.
pub fn cb_oracle(points: &[[Rational; 4]], m: i64) -> bool {
    if m < 0 {
        return true;
    }
    let m = m as u32;
    let monos = exponents_of_degree(m);
    (0..points.len()).all(|i| {
        let rest: Vec<[Rational; 4]> = points
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, p)| p.clone())
            .collect();
        vanishing_forms(&rest, m).iter().all(|form| {
            form.iter()
                .zip(&monos)
                .fold(Rational::zero(), |acc, (c, e)| {
                    acc + c * &eval_monomial(e, &points[i])
                })
                .is_zero()
        })
    })
}

/// `x0^4 + x1^4 - x2^4 - x3^4`.
pub fn fermat_quartic() -> omalous::surface::HypersurfaceSpec {
    let f = QPoly::from_terms(
        ring_names(&["x0", "x1", "x2", "x3"]),
        (),
        [(0, 1), (1, 1), (2, -1), (3, -1)]
            .map(|(i, s)| (Monomial::var_power(4, i, 4), Rational::from_integer(s))),
    );
    omalous::surface::HypersurfaceSpec::new(4, Some(f)).unwrap()
}

fn ring_names(names: &[&str]) -> std::sync::Arc<[String]> {
    var_names(names)
}

/// Rational points on the Fermat quartic: points on its rational lines plus
/// Euler's 59^4 + 158^4 = 133^4 + 134^4.
pub fn fermat_pool() -> Vec<[i64; 4]> {
    vec![
        [1, 2, 1, 2],
        [1, 3, 1, 3],
        [2, 3, 2, 3],
        [1, 2, 2, 1],
        [1, 1, 1, 1],
        [1, 0, 0, 1],
        [1, 2, -1, 2],
        [59, 158, 133, 134],
    ]
}

/// The seven rational lines used to build a CB cycle, as maps `(s, t) -> point`.
pub fn fermat_lines() -> Vec<fn(i64, i64) -> [i64; 4]> {
    vec![
        |s, t| [s, t, s, t],
        |s, t| [s, t, s, -t],
        |s, t| [s, t, -s, t],
        |s, t| [s, t, -s, -t],
        |s, t| [s, t, t, s],
        |s, t| [s, t, -t, s],
        |s, t| [s, t, t, -s],
    ]
}

/// 28 points, four on each of seven lines, none at an intersection of lines.
pub fn fermat_cycle_28() -> Vec<[i64; 4]> {
    let params = [(1, 2), (1, 3), (2, 3), (1, 4)];
    fermat_lines()
        .iter()
        .flat_map(|line| params.iter().map(move |&(s, t)| line(s, t)))
        .collect()
}
