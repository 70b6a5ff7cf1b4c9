use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use super::monomial::{Degree, Monomial, MonomialOrder};
use super::rational::Rational;
use crate::error::{Error, Result};

/// A field usable as the coefficient domain of [`Polynomial`].
///
/// Some fields need context to produce their constants (a rational function
/// needs its parameter names), so construction goes through `Ctx`.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    type Ctx: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_rational(r: &Rational, ctx: &Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// `None` exactly when `self` is zero.
    fn inverse(&self) -> Option<Self>;

    fn ctx_params(ctx: &Self::Ctx) -> Option<Vec<String>>;
    fn ctx_from_params(params: Option<Vec<String>>) -> Result<Self::Ctx>;
    fn to_json(&self) -> Value;
    fn from_json(value: &Value, ctx: &Self::Ctx) -> Result<Self>;
    /// Human-readable form, parenthesized when it is not a single atom.
    fn to_text(&self) -> String;
    /// Whether the value prints better as `- (-self)`.
    fn prefers_minus(&self) -> bool {
        false
    }
}

impl Coefficient for Rational {
    type Ctx = ();

    fn zero(_: &()) -> Self {
        Rational::zero()
    }
    fn one(_: &()) -> Self {
        Rational::one()
    }
    fn from_rational(r: &Rational, _: &()) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn is_one(&self) -> bool {
        Rational::is_one(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
    fn ctx_params(_: &()) -> Option<Vec<String>> {
        None
    }
    fn ctx_from_params(params: Option<Vec<String>>) -> Result<()> {
        match params {
            None => Ok(()),
            Some(p) if p.is_empty() => Ok(()),
            Some(_) => Err(Error::Parse(
                "rational polynomial cannot carry parameters".into(),
            )),
        }
    }
    fn to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn from_json(value: &Value, _: &()) -> Result<Self> {
        match value {
            Value::String(s) => s.parse(),
            Value::Number(n) => n
                .as_i64()
                .map(Rational::from_integer)
                .ok_or_else(|| Error::Parse(format!("coefficient {n} is not an integer"))),
            other => Err(Error::Parse(format!("bad coefficient {other}"))),
        }
    }
    fn to_text(&self) -> String {
        if self.is_integer() && !self.is_negative() {
            self.to_string()
        } else {
            format!("({self})")
        }
    }
    fn prefers_minus(&self) -> bool {
        self.is_negative()
    }
}

/// Sparse multivariate polynomial over a coefficient field `C`.
///
/// The variable names form the ring context; arithmetic between polynomials
/// with different contexts is rejected. Zero coefficients are never stored.
#[derive(Clone, PartialEq)]
pub struct Polynomial<C: Coefficient> {
    vars: Arc<[String]>,
    ctx: C::Ctx,
    terms: BTreeMap<Monomial, C>,
}

pub type QPoly = Polynomial<Rational>;

pub fn var_names(names: &[&str]) -> Arc<[String]> {
    names.iter().map(|s| s.to_string()).collect()
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(vars: Arc<[String]>, ctx: C::Ctx) -> Self {
        Polynomial {
            vars,
            ctx,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C, vars: Arc<[String]>, ctx: C::Ctx) -> Self {
        let n = vars.len();
        Self::from_terms(vars, ctx, [(Monomial::one(n), c)])
    }

    pub fn one(vars: Arc<[String]>, ctx: C::Ctx) -> Self {
        let c = C::one(&ctx);
        Self::constant(c, vars, ctx)
    }

    /// The `i`-th variable.
    pub fn var(vars: Arc<[String]>, ctx: C::Ctx, i: usize) -> Self {
        let n = vars.len();
        let c = C::one(&ctx);
        Self::from_terms(vars, ctx, [(Monomial::var_power(n, i, 1), c)])
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeats.
    pub fn from_terms(
        vars: Arc<[String]>,
        ctx: C::Ctx,
        terms: impl IntoIterator<Item = (Monomial, C)>,
    ) -> Self {
        let mut p = Self::zero(vars, ctx);
        for (m, c) in terms {
            assert_eq!(
                m.nvars(),
                p.vars.len(),
                "monomial arity does not match ring"
            );
            p.add_term(m, &c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                let sum = existing.plus(c);
                if sum.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *existing = sum;
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn ctx(&self) -> &C::Ctx {
        &self.ctx
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one_poly(&self) -> bool {
        self.terms.len() == 1 && self.terms.iter().all(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> C {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| C::zero(&self.ctx))
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .map(Monomial::total_degree)
            .max()
            .map_or(Degree::NegInfinity, Degree::Finite)
    }

    /// Common total degree of all terms, or `None` if mixed (or zero).
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(Monomial::total_degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &C)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    pub fn leading_monomial(&self, order: MonomialOrder) -> Option<&Monomial> {
        self.leading_term(order).map(|(m, _)| m)
    }

    pub fn same_ring(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::RingMismatch(format!(
                "variables {:?} vs {:?}",
                self.vars, other.vars
            )));
        }
        if self.ctx != other.ctx {
            return Err(Error::RingMismatch(format!(
                "coefficient contexts {:?} vs {:?}",
                self.ctx, other.ctx
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &c.negated());
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        let mut out = Self::zero(self.vars.clone(), self.ctx.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &ca.times(cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_coefficients(|c| c.negated())
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone(), self.ctx.clone());
        }
        self.map_coefficients(|x| x.times(c))
    }

    /// `c * m * self`.
    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars.clone(), self.ctx.clone());
        }
        Polynomial {
            vars: self.vars.clone(),
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.mul(m), v.times(c)))
                .collect(),
        }
    }

    /// `self -= c * m * g`, in place.
    pub(crate) fn sub_term_multiple(&mut self, c: &C, m: &Monomial, g: &Self) {
        for (k, v) in &g.terms {
            self.add_term(k.mul(m), &v.times(c).negated());
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars.clone(), self.ctx.clone());
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self, order: MonomialOrder) -> Self {
        match self.leading_term(order) {
            Some((_, lc)) => {
                let inv = lc.inverse().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    pub fn map_coefficients(&self, f: impl Fn(&C) -> C) -> Self {
        let mut out = Self::zero(self.vars.clone(), self.ctx.clone());
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    /// Same terms, new variable names (the count must match).
    pub fn with_vars(&self, vars: Arc<[String]>) -> Result<Self> {
        if vars.len() != self.vars.len() {
            return Err(Error::RingMismatch(format!(
                "cannot rename {} variables to {}",
                self.vars.len(),
                vars.len()
            )));
        }
        Ok(Polynomial {
            vars,
            ctx: self.ctx.clone(),
            terms: self.terms.clone(),
        })
    }

    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let minus = c.prefers_minus();
            let c = if minus { c.negated() } else { c.clone() };
            out.push_str(match (i, minus) {
                (0, false) => "",
                (0, true) => "-",
                (_, false) => " + ",
                (_, true) => " - ",
            });
            if m.is_one() {
                out.push_str(&c.to_text());
            } else if c.is_one() {
                out.push_str(&m.format(&self.vars));
            } else {
                out.push_str(&format!("{}*{}", c.to_text(), m.format(&self.vars)));
            }
        }
        out
    }
}

impl Polynomial<Rational> {
    /// Evaluates at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::RingMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.nvars()
            )));
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    t = t * x.pow(e);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    pub fn rational_var(vars: Arc<[String]>, i: usize) -> Self {
        Self::var(vars, (), i)
    }

    pub fn rational_constant(c: Rational, vars: Arc<[String]>) -> Self {
        Self::constant(c, vars, ())
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}]({})", self.vars.join(","), self.to_text())
    }
}

// Operator sugar; these panic on a ring mismatch. Use the `Result` methods
// when the operands come from user input.
impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        Polynomial::add(self, rhs).expect("ring mismatch")
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        Polynomial::sub(self, rhs).expect("ring mismatch")
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        Polynomial::mul(self, rhs).expect("ring mismatch")
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial::neg(self)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    coeff: Value,
    exps: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    vars: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    params: Option<Vec<String>>,
    terms: Vec<TermJson>,
}

impl<C: Coefficient> Polynomial<C> {
    fn to_json_repr(&self) -> PolyJson {
        PolyJson {
            vars: self.vars.to_vec(),
            params: C::ctx_params(&self.ctx),
            terms: self
                .terms
                .iter()
                .rev()
                .map(|(m, c)| TermJson {
                    coeff: c.to_json(),
                    exps: m.exponents().to_vec(),
                })
                .collect(),
        }
    }

    fn from_json_repr(repr: PolyJson) -> Result<Self> {
        let ctx = C::ctx_from_params(repr.params)?;
        let vars: Arc<[String]> = repr.vars.into();
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            if t.exps.len() != vars.len() {
                return Err(Error::Parse(format!(
                    "exponent vector {:?} does not match {} variables",
                    t.exps,
                    vars.len()
                )));
            }
            terms.push((Monomial::new(t.exps), C::from_json(&t.coeff, &ctx)?));
        }
        Ok(Self::from_terms(vars, ctx, terms))
    }

    pub fn to_json_value(&self) -> Value {
        serde_json::to_value(self.to_json_repr()).expect("polynomial JSON")
    }

    pub fn from_json_value(value: &Value) -> Result<Self> {
        let repr: PolyJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_repr(repr)
    }
}

impl<C: Coefficient> Serialize for Polynomial<C> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_repr().serialize(serializer)
    }
}

impl<'de, C: Coefficient> Deserialize<'de> for Polynomial<C> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolyJson::deserialize(deserializer)?;
        Self::from_json_repr(repr).map_err(serde::de::Error::custom)
    }
}
