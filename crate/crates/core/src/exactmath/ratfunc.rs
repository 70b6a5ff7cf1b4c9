use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use super::gcd::{exact_quotient, gcd};
use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Coefficient, QPoly};
use super::Rational;
use crate::error::{Error, Result};

/// Element of the fraction field `Q(params)`.
///
/// Stored in lowest terms: numerator and denominator are coprime and the
/// denominator's lex-leading coefficient is 1. Zero is `0/1`. With this
/// normalization structural equality is field equality.
#[derive(Clone, PartialEq)]
pub struct RationalFunction {
    num: QPoly,
    den: QPoly,
}

fn poly_terms_json(p: &QPoly) -> Value {
    Value::Array(
        p.terms()
            .rev()
            .map(|(m, c)| json!({"coeff": c.to_string(), "exps": m.exponents()}))
            .collect(),
    )
}

fn poly_from_terms_json(v: &Value, params: &Arc<[String]>) -> Result<QPoly> {
    let terms = v
        .as_array()
        .ok_or_else(|| Error::Parse("rational function part must be a term array".into()))?;
    let mut out = Vec::with_capacity(terms.len());
    for t in terms {
        let coeff = Rational::from_json(&t["coeff"], &())?;
        let exps: Vec<u32> =
            serde_json::from_value(t["exps"].clone()).map_err(|e| Error::Parse(e.to_string()))?;
        if exps.len() != params.len() {
            return Err(Error::Parse(format!(
                "exponents {exps:?} do not match parameters"
            )));
        }
        out.push((Monomial::new(exps), coeff));
    }
    Ok(QPoly::from_terms(params.clone(), (), out))
}

impl RationalFunction {
    pub fn new(num: QPoly, den: QPoly) -> Result<Self> {
        num.same_ring(&den)?;
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: QPoly, den: QPoly) -> Self {
        if num.is_zero() {
            let one = QPoly::one(den.vars().clone(), ());
            return RationalFunction { num, den: one };
        }
        let (num, den) = if den.num_terms() == 1 && den.total_degree() == super::Degree::Finite(0) {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            (exact_quotient(&num, &g), exact_quotient(&den, &g))
        };
        let lc = den
            .leading_term(MonomialOrder::Lex)
            .expect("nonzero")
            .1
            .clone();
        let inv = lc.recip().expect("nonzero");
        RationalFunction {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn from_poly(num: QPoly) -> Self {
        let den = QPoly::one(num.vars().clone(), ());
        RationalFunction { num, den }
    }

    pub fn constant(c: Rational, params: Arc<[String]>) -> Self {
        Self::from_poly(QPoly::rational_constant(c, params))
    }

    /// The `i`-th parameter as a field element.
    pub fn param(params: Arc<[String]>, i: usize) -> Self {
        Self::from_poly(QPoly::rational_var(params, i))
    }

    pub fn numer(&self) -> &QPoly {
        &self.num
    }

    pub fn denom(&self) -> &QPoly {
        &self.den
    }

    pub fn params(&self) -> &Arc<[String]> {
        self.num.vars()
    }

    /// The value as a rational constant, if it has no parameter dependence.
    pub fn as_constant(&self) -> Option<Rational> {
        let is_const = |p: &QPoly| p.terms().all(|(m, _)| m.is_one());
        if is_const(&self.num) && is_const(&self.den) {
            let one = Monomial::one(self.num.nvars());
            Some(self.num.coefficient(&one) / self.den.coefficient(&one))
        } else {
            None
        }
    }

    /// Substitutes a rational value for parameter `i` (the parameter stays in the context).
    pub fn substitute(&self, i: usize, value: &Rational) -> Result<Self> {
        let sub = |p: &QPoly| {
            QPoly::from_terms(
                p.vars().clone(),
                (),
                p.terms().map(|(m, c)| {
                    let mut exps = m.exponents().to_vec();
                    let e = std::mem::replace(&mut exps[i], 0);
                    (Monomial::new(exps), c * &value.pow(e))
                }),
            )
        };
        Self::new(sub(&self.num), sub(&self.den))
    }

    /// Weighted degree `deg num - deg den` when both are weighted-homogeneous.
    pub fn weighted_degree(&self, weights: &[u32]) -> Option<i64> {
        let hom = |p: &QPoly| {
            let mut degs = p.terms().map(|(m, _)| m.weighted_degree(weights));
            let first = degs.next()?;
            degs.all(|d| d == first).then_some(first as i64)
        };
        Some(hom(&self.num)? - hom(&self.den)?)
    }
}

impl Coefficient for RationalFunction {
    type Ctx = Arc<[String]>;

    fn zero(ctx: &Self::Ctx) -> Self {
        Self::from_poly(QPoly::zero(ctx.clone(), ()))
    }
    fn one(ctx: &Self::Ctx) -> Self {
        Self::from_poly(QPoly::one(ctx.clone(), ()))
    }
    fn from_rational(r: &Rational, ctx: &Self::Ctx) -> Self {
        Self::constant(r.clone(), ctx.clone())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn is_one(&self) -> bool {
        self.num == self.den
    }
    fn plus(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(&self.num + &other.num, self.den.clone());
        }
        Self::normalized(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.params());
        }
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }
    fn negated(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalized(self.den.clone(), self.num.clone()))
    }
    fn ctx_params(ctx: &Self::Ctx) -> Option<Vec<String>> {
        Some(ctx.to_vec())
    }
    fn ctx_from_params(params: Option<Vec<String>>) -> Result<Self::Ctx> {
        params
            .map(Into::into)
            .ok_or_else(|| Error::Parse("polynomial over Q(params) needs a \"params\" list".into()))
    }
    fn to_json(&self) -> Value {
        json!({"num": poly_terms_json(&self.num), "den": poly_terms_json(&self.den)})
    }
    fn from_json(value: &Value, ctx: &Self::Ctx) -> Result<Self> {
        match value {
            Value::Object(obj) => {
                let num = poly_from_terms_json(
                    obj.get("num")
                        .ok_or_else(|| Error::Parse("missing \"num\"".into()))?,
                    ctx,
                )?;
                let den = match obj.get("den") {
                    Some(d) => poly_from_terms_json(d, ctx)?,
                    None => QPoly::one(ctx.clone(), ()),
                };
                Self::new(num, den)
            }
            // a bare rational is accepted as a constant
            other => Ok(Self::constant(
                Rational::from_json(other, &())?,
                ctx.clone(),
            )),
        }
    }
    fn prefers_minus(&self) -> bool {
        self.num
            .leading_term(MonomialOrder::Lex)
            .is_some_and(|(_, c)| c.is_negative())
    }
    fn to_text(&self) -> String {
        if let Some(c) = self.as_constant() {
            return c.to_text();
        }
        let part = |p: &QPoly| {
            let single_monomial = p.num_terms() == 1 && p.terms().all(|(_, c)| c.is_one());
            if single_monomial {
                p.to_text()
            } else if let Some(c) = Self::from_poly(p.clone()).as_constant() {
                c.to_text()
            } else {
                format!("({p})")
            }
        };
        let den_is_one = self.den.is_one_poly();
        if den_is_one {
            part(&self.num)
        } else {
            format!("{}/{}", part(&self.num), part(&self.den))
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({})", self.to_text())
    }
}
