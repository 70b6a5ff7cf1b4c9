//! Numeric invariants of polarized surfaces.
//!
//! The built-in family is the smooth hypersurface `X_d` of degree `d` in `P^3`
//! with hyperplane polarization `L = H`. Adjunction gives `K = (d - 4)H`, and
//! the restriction sequence from `P^3` gives every `h^0(O_X(mH))`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{binomial_i64, Degree, QPoly};

/// The divisor class `l_mult * L + k_mult * K`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DivisorClass {
    pub l_mult: i64,
    pub k_mult: i64,
}

/// How `h^0` of a line bundle `O_X(aL + bK)` is obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum H0Evaluator {
    /// Closed formula on a smooth degree-`degree` surface in `P^3`.
    Hypersurface {
        degree: i64,
    },
    /// User-supplied values, one per divisor class.
    Table {
        entries: Vec<H0Entry>,
    },
    None,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct H0Entry {
    pub l_mult: i64,
    pub k_mult: i64,
    pub h0: i64,
}

impl H0Evaluator {
    pub fn h0(&self, class: DivisorClass) -> Result<i64> {
        let missing = || Error::MissingH0Evaluator {
            l_mult: class.l_mult,
            k_mult: class.k_mult,
        };
        match self {
            H0Evaluator::Hypersurface { degree } => {
                let m = class.l_mult + class.k_mult * (degree - 4);
                Ok(h0_line_bundle(*degree, m))
            }
            H0Evaluator::Table { entries } => entries
                .iter()
                .find(|e| e.l_mult == class.l_mult && e.k_mult == class.k_mult)
                .map(|e| e.h0)
                .ok_or_else(missing),
            H0Evaluator::None => Err(missing()),
        }
    }

    pub fn table(values: BTreeMap<DivisorClass, i64>) -> Self {
        H0Evaluator::Table {
            entries: values
                .into_iter()
                .map(|(c, h0)| H0Entry {
                    l_mult: c.l_mult,
                    k_mult: c.k_mult,
                    h0,
                })
                .collect(),
        }
    }
}

/// Intersection numbers and Hodge data of a polarized surface `(X, L)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceData {
    #[serde(rename = "L_squared")]
    pub l_squared: i64,
    #[serde(rename = "K_dot_L")]
    pub k_dot_l: i64,
    /// `K^2 = c1(X)^2`.
    #[serde(rename = "K_squared")]
    pub k_squared: i64,
    /// Topological Euler number `c2(T_X)`.
    pub c2_top: i64,
    pub p_g: i64,
    pub irregularity: i64,
    pub h0_evaluator: H0Evaluator,
}

impl SurfaceData {
    /// Validated constructor for surfaces entered by hand.
    pub fn new(
        l_squared: i64,
        k_dot_l: i64,
        k_squared: i64,
        c2_top: i64,
        p_g: i64,
        irregularity: i64,
        h0_evaluator: H0Evaluator,
    ) -> Result<Self> {
        if l_squared <= 0 {
            return Err(Error::InvalidInput(format!(
                "L^2 must be positive, got {l_squared}"
            )));
        }
        if p_g < 0 || irregularity < 0 {
            return Err(Error::InvalidInput(
                "p_g and irregularity must be non-negative".into(),
            ));
        }
        let s = SurfaceData {
            l_squared,
            k_dot_l,
            k_squared,
            c2_top,
            p_g,
            irregularity,
            h0_evaluator,
        };
        let report = check_noether(&s);
        if !report.holds {
            return Err(Error::NoetherViolation {
                lhs: report.lhs,
                rhs: report.rhs,
            });
        }
        Ok(s)
    }

    /// `chi(O_X) = 1 - q + p_g`.
    pub fn chi(&self) -> i64 {
        1 - self.irregularity + self.p_g
    }

    pub fn h0(&self, class: DivisorClass) -> Result<i64> {
        self.h0_evaluator.h0(class)
    }
}

/// `h^0(X_d, O(mH)) = C(m+3, 3) - C(m-d+3, 3)` for `m >= 0`, else 0.
pub fn h0_line_bundle(d: i64, m: i64) -> i64 {
    if m < 0 {
        return 0;
    }
    binomial_i64(m + 3, 3) - binomial_i64(m - d + 3, 3)
}

/// Invariants of a smooth degree-`d` surface in `P^3`, polarized by `H`.
pub fn hypersurface_invariants(d: i64) -> Result<SurfaceData> {
    if d < 1 {
        return Err(Error::InvalidDegree(d));
    }
    let c2 = d * d * d - 4 * d * d + 6 * d;
    let k2 = d * (d - 4) * (d - 4);
    let sum = k2 + c2;
    debug_assert_eq!(sum % 12, 0, "Noether divisibility at d = {d}");
    let chi = sum / 12;
    Ok(SurfaceData {
        l_squared: d,
        k_dot_l: d * (d - 4),
        k_squared: k2,
        c2_top: c2,
        // regular by Lefschetz, so p_g = chi - 1
        p_g: chi - 1,
        irregularity: 0,
        h0_evaluator: H0Evaluator::Hypersurface { degree: d },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoetherReport {
    /// `12 (1 + p_g - q)`
    pub lhs: i64,
    /// `K^2 + c2`
    pub rhs: i64,
    pub holds: bool,
}

pub fn check_noether(s: &SurfaceData) -> NoetherReport {
    let lhs = 12 * s.chi();
    let rhs = s.k_squared + s.c2_top;
    NoetherReport {
        lhs,
        rhs,
        holds: lhs == rhs,
    }
}

/// Bogomolov–Miyaoka–Yau: `c1^2 <= 3 c2`.
pub fn check_bmy(s: &SurfaceData) -> bool {
    s.k_squared <= 3 * s.c2_top
}

/// A surface of degree `d` in `P^3`, optionally with its equation in
/// `x0..x3`. Smoothness of the equation is not checked.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HypersurfaceSpec {
    pub degree: i64,
    #[serde(rename = "F", default, skip_serializing_if = "Option::is_none")]
    pub equation: Option<QPoly>,
}

impl HypersurfaceSpec {
    pub fn new(degree: i64, equation: Option<QPoly>) -> Result<Self> {
        let spec = HypersurfaceSpec { degree, equation };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.degree < 1 {
            return Err(Error::InvalidDegree(self.degree));
        }
        if let Some(f) = &self.equation {
            if f.nvars() != 4 {
                return Err(Error::InvalidInput(format!(
                    "defining polynomial must have 4 variables, has {}",
                    f.nvars()
                )));
            }
            if f.total_degree() == Degree::NegInfinity {
                return Err(Error::InvalidInput("defining polynomial is zero".into()));
            }
            if f.homogeneous_degree() != Some(self.degree as u32) {
                return Err(Error::InvalidInput(format!(
                    "defining polynomial is not homogeneous of degree {}",
                    self.degree
                )));
            }
        }
        Ok(())
    }

    pub fn equation(&self) -> Result<&QPoly> {
        self.equation
            .as_ref()
            .ok_or(Error::MissingDefiningPolynomial)
    }

    pub fn invariants(&self) -> Result<SurfaceData> {
        hypersurface_invariants(self.degree)
    }
}
