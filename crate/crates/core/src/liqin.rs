//! The Li–Qin existence bound and what follows from it.
//!
//! For a surface `X` polarized by a very ample `L`, rank `r` and first Chern
//! class `c1`, stable bundles exist for every `c2 >= alpha` with
//!
//! ```text
//! alpha = (r-1) [1 + max(p_g, h0(rL - c1 + K)) + 4 (r-1)^2 L^2]
//!       + (r-1) c1.L - r(r-1)/2 L^2
//! ```
//!
//! Omalous bundles need `c1 = c1(T_X) = -K` and `c2 = c2(T_X)`. Stability is
//! preserved by dualizing, so `c1 = +K` is evaluated as well; a surface is
//! *good* for `r` when `c2(X) >= alpha` for either sign.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{var_names, Monomial, QPoly, Rational};
use crate::surface::{hypersurface_invariants, DivisorClass, SurfaceData};

/// Which multiple of the canonical class plays the role of `c1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "plus_K")]
    PlusK,
    #[serde(rename = "minus_K")]
    MinusK,
}

impl Sign {
    pub fn c1_dot_l(self, s: &SurfaceData) -> i64 {
        match self {
            Sign::PlusK => s.k_dot_l,
            Sign::MinusK => -s.k_dot_l,
        }
    }

    /// `rL - c1 + K`, i.e. `rL` for `c1 = K` and `rL + 2K` for `c1 = -K`.
    pub fn h0_class(self, r: i64) -> DivisorClass {
        match self {
            Sign::PlusK => DivisorClass {
                l_mult: r,
                k_mult: 0,
            },
            Sign::MinusK => DivisorClass {
                l_mult: r,
                k_mult: 2,
            },
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::PlusK => "plus_K",
            Sign::MinusK => "minus_K",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum C1Description {
    #[serde(rename = "plus_K")]
    PlusK,
    #[serde(rename = "minus_K")]
    MinusK,
    #[serde(rename = "custom")]
    Custom,
}

/// Numerical data of a candidate rank-`r` bundle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleNumerics {
    pub rank: i64,
    #[serde(rename = "c1_dot_L")]
    pub c1_dot_l: i64,
    pub c1_squared: i64,
    pub c2: i64,
    pub c1_description: C1Description,
}

impl BundleNumerics {
    /// Chern numbers of the tangent bundle of `s`.
    pub fn tangent(s: &SurfaceData) -> Self {
        BundleNumerics {
            rank: 2,
            c1_dot_l: -s.k_dot_l,
            c1_squared: s.k_squared,
            c2: s.c2_top,
            c1_description: C1Description::MinusK,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OmalityReport {
    pub c1_dot_l_matches: bool,
    pub c1_squared_matches: bool,
    pub c2_matches: bool,
    /// `c1 = +K` was accepted because dual candidates were allowed.
    pub via_dual: bool,
    pub omalous: bool,
}

/// Numeric omality: `c1.L = -K.L`, `c1^2 = K^2`, `c2 = c2(X)`. With
/// `allow_dual`, `c1.L = +K.L` is accepted too (the dual of an omalous bundle).
pub fn check_omality(e: &BundleNumerics, s: &SurfaceData, allow_dual: bool) -> OmalityReport {
    let strict = e.c1_dot_l == -s.k_dot_l;
    let dual = allow_dual && e.c1_dot_l == s.k_dot_l;
    let c1_dot_l_matches = strict || dual;
    let c1_squared_matches = e.c1_squared == s.k_squared;
    let c2_matches = e.c2 == s.c2_top;
    OmalityReport {
        c1_dot_l_matches,
        c1_squared_matches,
        c2_matches,
        via_dual: dual && !strict,
        omalous: c1_dot_l_matches && c1_squared_matches && c2_matches,
    }
}

/// `c1.L / r`.
pub fn slope(c1_dot_l: i64, r: i64) -> Result<Rational> {
    if r < 1 {
        return Err(Error::InvalidRank { rank: r, min: 1 });
    }
    Rational::new(c1_dot_l, r)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlphaBreakdown {
    pub pg_term: i64,
    pub h0_term: i64,
    pub max_used: i64,
    /// `4 (r-1)^2 L^2`
    pub excess_term: i64,
    /// `(r-1) c1.L`
    #[serde(rename = "c1L_term")]
    pub c1l_term: i64,
    /// `-r(r-1)/2 L^2`
    #[serde(rename = "L2_term")]
    pub l2_term: i64,
}

impl AlphaBreakdown {
    pub fn alpha(&self, r: i64) -> i64 {
        (r - 1) * (1 + self.max_used + self.excess_term) + self.c1l_term + self.l2_term
    }
}

/// The bound for one sign, compared against the surface's own `c2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodnessReport {
    pub rank: i64,
    pub sign: Sign,
    pub alpha: i64,
    pub c2_target: i64,
    pub margin: i64,
    pub breakdown: AlphaBreakdown,
    pub verdict: bool,
}

fn check_rank(r: i64) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidRank { rank: r, min: 2 });
    }
    Ok(())
}

pub fn alpha(s: &SurfaceData, r: i64, sign: Sign) -> Result<GoodnessReport> {
    check_rank(r)?;
    let h0_term = s.h0(sign.h0_class(r))?;
    let pg_term = s.p_g;
    let max_used = pg_term.max(h0_term);
    let excess_term = 4 * (r - 1) * (r - 1) * s.l_squared;
    let c1l_term = (r - 1) * sign.c1_dot_l(s);
    let binom = r * (r - 1);
    assert_eq!(binom % 2, 0, "r(r-1)/2 is integral");
    let l2_term = -(binom / 2) * s.l_squared;
    let breakdown = AlphaBreakdown {
        pg_term,
        h0_term,
        max_used,
        excess_term,
        c1l_term,
        l2_term,
    };
    let alpha = breakdown.alpha(r);
    let margin = s.c2_top - alpha;
    Ok(GoodnessReport {
        rank: r,
        sign,
        alpha,
        c2_target: s.c2_top,
        margin,
        breakdown,
        verdict: margin >= 0,
    })
}

/// Goodness of type `(r, L)`, evaluated for both signs of `c1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodnessVerdict {
    pub rank: i64,
    pub c2_target: i64,
    pub verdict: bool,
    /// Sign with the larger margin (plus on ties).
    pub best_sign: Sign,
    pub alpha_plus: i64,
    pub margin_plus: i64,
    pub alpha_minus: i64,
    pub margin_minus: i64,
    pub plus: GoodnessReport,
    pub minus: GoodnessReport,
}

pub fn is_good(s: &SurfaceData, r: i64) -> Result<GoodnessVerdict> {
    let plus = alpha(s, r, Sign::PlusK)?;
    let minus = alpha(s, r, Sign::MinusK)?;
    let best_sign = if minus.margin > plus.margin {
        Sign::MinusK
    } else {
        Sign::PlusK
    };
    Ok(GoodnessVerdict {
        rank: r,
        c2_target: s.c2_top,
        verdict: plus.verdict || minus.verdict,
        best_sign,
        alpha_plus: plus.alpha,
        margin_plus: plus.margin,
        alpha_minus: minus.alpha,
        margin_minus: minus.margin,
        plus,
        minus,
    })
}

/// `c2(X_d) - alpha(X_d, r, sign)`, evaluated exactly.
pub fn hypersurface_margin(d: i64, r: i64, sign: Sign) -> Result<i64> {
    Ok(alpha(&hypersurface_invariants(d)?, r, sign)?.margin)
}

/// `C(d + shift, k)` as a polynomial in `d`.
fn binomial_in_d(vars: &std::sync::Arc<[String]>, shift: i64, k: u32) -> QPoly {
    let d = QPoly::rational_var(vars.clone(), 0);
    let mut acc = QPoly::one(vars.clone(), ());
    let mut fact = Rational::one();
    for i in 0..k {
        let c = QPoly::rational_constant(Rational::from_integer(shift - i as i64), vars.clone());
        acc = &acc * &(&d + &c);
        fact = fact * Rational::from_integer(i as i64 + 1);
    }
    acc.scale(&fact.recip().expect("nonzero"))
}

/// The margin `c2(X_d) - alpha(X_d, r, +K)` as a polynomial in `d`, valid
/// once `p_g` dominates `h0(rH)` and `h0(rH)` has stabilized
/// (see [`stable_regime_start`]).
pub fn margin_polynomial(r: i64) -> QPoly {
    let vars = var_names(&["d"]);
    let d = QPoly::rational_var(vars.clone(), 0);
    let k = |n: i64| QPoly::rational_constant(Rational::from_integer(n), vars.clone());
    let c2 = &(&d.pow(3) - &(&k(4) * &d.pow(2))) + &(&k(6) * &d);
    // p_g = h0(K) = C(d - 1, 3)
    let p_g = binomial_in_d(&vars, -1, 3);
    let excess = &k(4 * (r - 1) * (r - 1)) * &d;
    let bracket = &(&k(1) + &p_g) + &excess;
    let k_dot_l = &d * &(&d - &k(4));
    let l2 = QPoly::rational_constant(
        Rational::new(-(r * (r - 1)), 2).expect("nonzero"),
        vars.clone(),
    )
    .mul(&d)
    .expect("same ring");
    let alpha = &(&(&k(r - 1) * &bracket) + &(&k(r - 1) * &k_dot_l)) + &l2;
    &c2 - &alpha
}

/// Coefficients of a univariate polynomial, constant term first.
fn univariate_coefficients(p: &QPoly, degree: u32) -> Vec<Rational> {
    (0..=degree)
        .map(|e| p.coefficient(&Monomial::new(vec![e])))
        .collect()
}

/// First degree from which `max(p_g, h0(rH)) = p_g` and `h0(rH) = C(r+3, 3)`
/// hold for every larger degree too.
pub fn stable_regime_start(r: i64) -> i64 {
    let h0 = crate::exactmath::binomial_i64(r + 3, 3);
    let mut d = r + 1;
    while crate::exactmath::binomial_i64(d - 1, 3) < h0 {
        d += 1;
    }
    d
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct D0Certificate {
    /// Coefficient of `d^3` in the margin polynomial.
    pub leading_coefficient: Rational,
    /// Every real root of the margin polynomial is below this.
    pub cauchy_bound: i64,
    pub scanned_range: [i64; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct D0Report {
    pub rank: i64,
    pub d_min: i64,
    pub d0: Option<i64>,
    /// Scanned degrees with negative margin.
    pub failures: Vec<i64>,
    /// Margin polynomial coefficients, constant term first.
    pub margin_coefficients: Vec<Rational>,
    pub stable_from: i64,
    pub certificate: D0Certificate,
}

pub const DEFAULT_D_MIN: i64 = 5;
pub const DEFAULT_SCAN_CAP: i64 = 100_000;

/// Least `d0 >= d_min` such that every smooth surface of degree `d >= d0` in
/// `P^3` is good of type `(r, H)` with `c1 = +K`.
///
/// Degrees up to `max(d_min, cauchy bound, stable regime start)` are checked by
/// exact evaluation; beyond that the margin agrees with a cubic polynomial
/// whose positive leading coefficient and root bound certify the tail.
pub fn find_d0(r: i64, d_min: i64, scan_cap: i64) -> Result<D0Report> {
    check_rank(r)?;
    if d_min < 1 {
        return Err(Error::InvalidDegree(d_min));
    }
    let poly = margin_polynomial(r);
    let coeffs = univariate_coefficients(&poly, 3);
    let leading = coeffs[3].clone();
    if !leading.is_positive() {
        return Err(Error::NoGoodD0 {
            rank: r,
            leading: Box::new(leading),
            subleading: Box::new(coeffs[2].clone()),
        });
    }
    let max_ratio = coeffs[..3]
        .iter()
        .map(|c| (c / &leading).abs())
        .max()
        .expect("three coefficients");
    let cauchy = (Rational::one() + max_ratio).floor() + 1;
    let cauchy_bound = i64::try_from(cauchy).map_err(|_| Error::ScanCapExceeded {
        bound: i64::MAX,
        cap: scan_cap,
    })?;
    let stable_from = stable_regime_start(r);
    let upper = cauchy_bound.max(stable_from).max(d_min);
    if upper > scan_cap {
        return Err(Error::ScanCapExceeded {
            bound: upper,
            cap: scan_cap,
        });
    }

    let mut failures = Vec::new();
    for d in d_min..=upper {
        let margin = hypersurface_margin(d, r, Sign::PlusK)?;
        if d >= stable_from {
            let symbolic = poly
                .evaluate(&[Rational::from_integer(d)])
                .expect("univariate");
            assert_eq!(
                symbolic, margin,
                "margin polynomial disagrees with exact value at d = {d}"
            );
        }
        if margin < 0 {
            failures.push(d);
        }
    }
    let d0 = failures.last().map_or(d_min, |&d| d + 1);
    debug_assert!(
        d0 <= upper,
        "the top of the scan lies beyond the root bound"
    );
    Ok(D0Report {
        rank: r,
        d_min,
        d0: Some(d0),
        failures,
        margin_coefficients: coeffs,
        stable_from,
        certificate: D0Certificate {
            leading_coefficient: leading,
            cauchy_bound,
            scanned_range: [d_min, upper],
        },
    })
}

/// Total length `n` of the 0-cycles in
/// `0 -> O(c1 + (1-r)L) -> E -> (+)_{i<r} O(L) (x) I_{Z_i} -> 0`
/// forced by `c2(E) = c2(X)`: `n = c2 - (r-1) c1.L + r(r-1)/2 L^2`.
pub fn required_cycle_length(s: &SurfaceData, r: i64, sign: Sign) -> Result<i64> {
    check_rank(r)?;
    let n = s.c2_top - (r - 1) * sign.c1_dot_l(s) + r * (r - 1) / 2 * s.l_squared;
    if n < 0 {
        return Err(Error::NegativeCycleLength(n));
    }
    Ok(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleLengthReport {
    pub rank: i64,
    pub sign: Sign,
    pub cycle_length: i64,
    /// Points per cycle when the length is spread evenly over the `r - 1` cycles, if it divides.
    pub per_cycle: Option<i64>,
    pub c2_target: i64,
}

pub fn cycle_length_report(s: &SurfaceData, r: i64, sign: Sign) -> Result<CycleLengthReport> {
    let n = required_cycle_length(s, r, sign)?;
    Ok(CycleLengthReport {
        rank: r,
        sign,
        cycle_length: n,
        per_cycle: (n % (r - 1) == 0).then_some(n / (r - 1)),
        c2_target: s.c2_top,
    })
}

/// `c2` of the extension above when the cycles have total length `n`.
pub fn extension_c2(c1_dot_l: i64, l_squared: i64, r: i64, n: i64) -> i64 {
    (r - 1) * c1_dot_l - r * (r - 1) / 2 * l_squared + n
}
