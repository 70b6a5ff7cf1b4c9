//! Quotient rings presented by generators and quantum relations.
//!
//! Parameters (`q`, or `p, q`) live in the coefficient field `Q(params)`, so a
//! ring is a quotient of `Q(params)[vars]` and its staircase is a basis over
//! that field. Everything is computed once at construction.
//!
//! Two monomial bases are kept. `staircase` is the set of Gröbner standard
//! monomials and depends on the monomial order. `basis` is the basis in which
//! coordinates and correlators are reported; it equals the staircase unless a
//! preferred basis was requested and verified. The quadric family asks for
//! `{1, a, b, ab}`, which under any admissible order is the staircase only in
//! special cases (the leading terms of a generic pencil of conics are `a^2`
//! and `ab`).

use std::sync::Arc;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{
    buchberger, normal_form, standard_monomials, var_names, Coefficient, ExactMatrix, Monomial,
    MonomialOrder, Polynomial, QPoly, Rational, RationalFunction,
};

/// Polynomial in the ring variables over `Q(params)`.
pub type RingPoly = Polynomial<RationalFunction>;

/// The four 2×2 matrices of the deformed quadric.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MatricesJson", into = "MatricesJson")]
pub struct DeformationMatrices {
    pub a: ExactMatrix<Rational>,
    pub b: ExactMatrix<Rational>,
    pub c: ExactMatrix<Rational>,
    pub d: ExactMatrix<Rational>,
}

#[derive(Serialize, Deserialize)]
struct MatricesJson {
    #[serde(rename = "A")]
    a: ExactMatrix<Rational>,
    #[serde(rename = "B")]
    b: ExactMatrix<Rational>,
    #[serde(rename = "C")]
    c: ExactMatrix<Rational>,
    #[serde(rename = "D")]
    d: ExactMatrix<Rational>,
}

impl TryFrom<MatricesJson> for DeformationMatrices {
    type Error = Error;
    fn try_from(m: MatricesJson) -> Result<Self> {
        DeformationMatrices::new(m.a, m.b, m.c, m.d)
    }
}

impl From<DeformationMatrices> for MatricesJson {
    fn from(m: DeformationMatrices) -> Self {
        MatricesJson {
            a: m.a,
            b: m.b,
            c: m.c,
            d: m.d,
        }
    }
}

impl DeformationMatrices {
    pub fn new(
        a: ExactMatrix<Rational>,
        b: ExactMatrix<Rational>,
        c: ExactMatrix<Rational>,
        d: ExactMatrix<Rational>,
    ) -> Result<Self> {
        for (name, m) in [("A", &a), ("B", &b), ("C", &c), ("D", &d)] {
            if (m.rows(), m.cols()) != (2, 2) {
                return Err(Error::InvalidInput(format!(
                    "matrix {name} is {}x{}, expected 2x2",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(DeformationMatrices { a, b, c, d })
    }

    pub fn from_integers(
        a: [[i64; 2]; 2],
        b: [[i64; 2]; 2],
        c: [[i64; 2]; 2],
        d: [[i64; 2]; 2],
    ) -> Self {
        let m = |x: [[i64; 2]; 2]| {
            ExactMatrix::from_rational_rows(
                x.iter()
                    .map(|r| r.iter().map(|&v| Rational::from_integer(v)).collect())
                    .collect(),
            )
            .expect("2x2")
        };
        DeformationMatrices {
            a: m(a),
            b: m(b),
            c: m(c),
            d: m(d),
        }
    }

    /// `A = D = I`, `B = C = 0`.
    pub fn classical() -> Self {
        let (i, z) = ([[1, 0], [0, 1]], [[0, 0], [0, 0]]);
        Self::from_integers(i, z, z, i)
    }
}

fn det2(m: &ExactMatrix<Rational>) -> Rational {
    m.get(0, 0) * m.get(1, 1) - m.get(0, 1) * m.get(1, 0)
}

fn mat_sum(x: &ExactMatrix<Rational>, y: &ExactMatrix<Rational>) -> ExactMatrix<Rational> {
    let rows = (0..2)
        .map(|i| (0..2).map(|j| x.get(i, j) + y.get(i, j)).collect())
        .collect();
    ExactMatrix::from_rational_rows(rows).expect("2x2")
}

/// `(det X, det(X+Y) - det X - det Y, det Y)`: the coefficients of
/// `a^2, ab, b^2` in `det(aX + bY)`.
pub fn polarized_determinant(
    x: &ExactMatrix<Rational>,
    y: &ExactMatrix<Rational>,
) -> [Rational; 3] {
    let (dx, dy) = (det2(x), det2(y));
    let mixed = det2(&mat_sum(x, y)) - &dx - &dy;
    [dx, mixed, dy]
}

/// Reduction result. `coordinates` is the same class written in the ring's
/// reporting basis, as `sum c_i * basis_i`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NormalFormResult {
    pub input: RingPoly,
    pub reduced: RingPoly,
    pub coordinates: RingPoly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RingPresentation {
    vars: Arc<[String]>,
    params: Arc<[String]>,
    var_degrees: Vec<u32>,
    param_degrees: Vec<u32>,
    order: MonomialOrder,
    relations: Vec<RingPoly>,
    groebner_basis: Vec<RingPoly>,
    staircase: Option<Vec<Monomial>>,
    basis: Option<Vec<Monomial>>,
    /// Column `j` holds the staircase coordinates of `basis[j]`.
    change_of_basis: Option<ExactMatrix<RationalFunction>>,
}

#[derive(Serialize, Deserialize)]
struct RingDump {
    vars: Vec<String>,
    params: Vec<String>,
    var_degrees: Vec<u32>,
    param_degrees: Vec<u32>,
    order: MonomialOrder,
    relations: Vec<RingPoly>,
    groebner_basis: Vec<RingPoly>,
    staircase: Option<Vec<Monomial>>,
    basis: Option<Vec<Monomial>>,
}

impl Serialize for RingPresentation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RingDump {
            vars: self.vars.to_vec(),
            params: self.params.to_vec(),
            var_degrees: self.var_degrees.clone(),
            param_degrees: self.param_degrees.clone(),
            order: self.order,
            relations: self.relations.clone(),
            groebner_basis: self.groebner_basis.clone(),
            staircase: self.staircase.clone(),
            basis: self.basis.clone(),
        }
        .serialize(s)
    }
}

/// Rebuilds from the relations and checks the cached data against the dump.
impl<'de> Deserialize<'de> for RingPresentation {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let dump = RingDump::deserialize(d)?;
        let ring = RingPresentation::with_order(
            var_names_owned(dump.vars),
            var_names_owned(dump.params),
            dump.var_degrees,
            dump.param_degrees,
            dump.relations,
            dump.basis.clone(),
            dump.order,
        )
        .map_err(D::Error::custom)?;
        if ring.groebner_basis != dump.groebner_basis || ring.staircase != dump.staircase {
            return Err(D::Error::custom(
                "cached Gröbner data does not match the relations",
            ));
        }
        Ok(ring)
    }
}

fn var_names_owned(names: Vec<String>) -> Arc<[String]> {
    names.into()
}

fn rf_const(c: Rational, params: &Arc<[String]>) -> RationalFunction {
    RationalFunction::constant(c, params.clone())
}

impl RingPresentation {
    /// Ring with the default order (degree reverse lex, variables in the given
    /// order). `preferred_basis`, when given, must be a basis of the quotient.
    pub fn new(
        vars: Arc<[String]>,
        params: Arc<[String]>,
        var_degrees: Vec<u32>,
        param_degrees: Vec<u32>,
        relations: Vec<RingPoly>,
        preferred_basis: Option<Vec<Monomial>>,
    ) -> Result<Self> {
        Self::with_order(
            vars,
            params,
            var_degrees,
            param_degrees,
            relations,
            preferred_basis,
            MonomialOrder::DegRevLex,
        )
    }

    pub fn with_order(
        vars: Arc<[String]>,
        params: Arc<[String]>,
        var_degrees: Vec<u32>,
        param_degrees: Vec<u32>,
        relations: Vec<RingPoly>,
        preferred_basis: Option<Vec<Monomial>>,
        order: MonomialOrder,
    ) -> Result<Self> {
        if var_degrees.len() != vars.len() || param_degrees.len() != params.len() {
            return Err(Error::InvalidInput(
                "one degree per variable and parameter".into(),
            ));
        }
        for r in &relations {
            if r.vars() != &vars || r.ctx() != &params {
                return Err(Error::RingMismatch(format!(
                    "relation {r} is not over this ring"
                )));
            }
        }
        let mut ring = RingPresentation {
            vars,
            params,
            var_degrees,
            param_degrees,
            order,
            relations,
            groebner_basis: Vec::new(),
            staircase: None,
            basis: None,
            change_of_basis: None,
        };
        for r in &ring.relations {
            if ring.weighted_degree(r).is_none() {
                return Err(Error::InvalidInput(format!(
                    "relation {r} is not homogeneous under the declared grading"
                )));
            }
        }
        ring.groebner_basis = buchberger(&ring.relations, order)?;
        ring.staircase = standard_monomials(&ring.groebner_basis, ring.vars.len(), order);
        let preferred_basis = preferred_basis.filter(|b| Some(b) != ring.staircase.as_ref());
        match preferred_basis {
            None => ring.basis = ring.staircase.clone(),
            Some(basis) => {
                let stair = ring.staircase.as_ref().ok_or_else(|| {
                    Error::InvalidInput("a preferred basis needs a finite staircase".into())
                })?;
                if basis.len() != stair.len() || basis.iter().any(|m| m.nvars() != ring.vars.len())
                {
                    return Err(Error::InvalidInput(format!(
                        "preferred basis has {} monomials, the quotient has dimension {}",
                        basis.len(),
                        stair.len()
                    )));
                }
                let mut columns = Vec::with_capacity(basis.len());
                for m in &basis {
                    let mono = RingPoly::from_terms(
                        ring.vars.clone(),
                        ring.params.clone(),
                        [(m.clone(), RationalFunction::one(&ring.params))],
                    );
                    columns.push(ring.staircase_coordinates(&ring.normal_form(&mono)?));
                }
                let rows = (0..stair.len())
                    .map(|i| columns.iter().map(|c| c[i].clone()).collect())
                    .collect();
                let matrix = ExactMatrix::from_rows(rows, basis.len(), ring.params.clone())?;
                if matrix.rank() != basis.len() {
                    return Err(Error::InvalidInput(
                        "preferred monomials are linearly dependent in the quotient".into(),
                    ));
                }
                ring.basis = Some(basis);
                ring.change_of_basis = Some(matrix);
            }
        }
        Ok(ring)
    }

    pub fn vars(&self) -> &Arc<[String]> {
        &self.vars
    }

    pub fn params(&self) -> &Arc<[String]> {
        &self.params
    }

    pub fn var_degrees(&self) -> &[u32] {
        &self.var_degrees
    }

    pub fn param_degrees(&self) -> &[u32] {
        &self.param_degrees
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn relations(&self) -> &[RingPoly] {
        &self.relations
    }

    pub fn groebner_basis(&self) -> &[RingPoly] {
        &self.groebner_basis
    }

    /// Gröbner standard monomials, ascending; `None` when infinite.
    pub fn staircase(&self) -> Option<&[Monomial]> {
        self.staircase.as_deref()
    }

    /// Reporting basis; `None` when the quotient is infinite-dimensional.
    pub fn basis(&self) -> Option<&[Monomial]> {
        self.basis.as_deref()
    }

    /// Weighted degree of a ring element, `None` unless homogeneous. Zero has no degree.
    pub fn weighted_degree(&self, f: &RingPoly) -> Option<i64> {
        let mut degs = f.terms().map(|(m, c)| {
            Some(
                m.weighted_degree(&self.var_degrees) as i64
                    + c.weighted_degree(&self.param_degrees)?,
            )
        });
        let first = degs.next()??;
        for d in degs {
            if d? != first {
                return None;
            }
        }
        Some(first)
    }

    fn check_element(&self, f: &RingPoly) -> Result<()> {
        if f.vars() != &self.vars || f.ctx() != &self.params {
            return Err(Error::RingMismatch(format!(
                "{f} is not an element of this ring"
            )));
        }
        Ok(())
    }

    pub fn normal_form(&self, f: &RingPoly) -> Result<RingPoly> {
        self.check_element(f)?;
        normal_form(f, &self.groebner_basis, self.order)
    }

    fn staircase_coordinates(&self, reduced: &RingPoly) -> Vec<RationalFunction> {
        self.staircase
            .as_ref()
            .expect("finite staircase")
            .iter()
            .map(|m| reduced.coefficient(m))
            .collect()
    }

    fn combine_basis(&self, basis: &[Monomial], coords: &[RationalFunction]) -> RingPoly {
        RingPoly::from_terms(
            self.vars.clone(),
            self.params.clone(),
            basis.iter().cloned().zip(coords.iter().cloned()),
        )
    }

    pub fn reduce(&self, f: &RingPoly) -> Result<NormalFormResult> {
        let reduced = self.normal_form(f)?;
        let coordinates = match (&self.basis, &self.change_of_basis) {
            (Some(basis), Some(matrix)) => {
                let coords = matrix.solve(&self.staircase_coordinates(&reduced))?;
                self.combine_basis(basis, &coords)
            }
            _ => reduced.clone(),
        };
        Ok(NormalFormResult {
            input: f.clone(),
            reduced,
            coordinates,
        })
    }

    /// The unique basis monomial of highest weighted degree.
    pub fn top_monomial(&self) -> Result<&Monomial> {
        let basis = self.basis.as_ref().ok_or(Error::NoUniqueTopMonomial)?;
        let deg = |m: &Monomial| m.weighted_degree(&self.var_degrees);
        let top = basis
            .iter()
            .map(deg)
            .max()
            .ok_or(Error::NoUniqueTopMonomial)?;
        let mut tops = basis.iter().filter(|m| deg(m) == top);
        match (tops.next(), tops.next()) {
            (Some(m), None) => Ok(m),
            _ => Err(Error::NoUniqueTopMonomial),
        }
    }

    /// Coefficient of the top basis monomial in the reduction of `f`; so the
    /// top monomial itself has correlator 1.
    pub fn correlator(&self, f: &RingPoly) -> Result<RationalFunction> {
        let top = self.top_monomial()?.clone();
        Ok(self.reduce(f)?.coordinates.coefficient(&top))
    }

    /// Rewrites a rational polynomial whose variables are ring variables or
    /// parameters, in any order, as a ring element.
    pub fn lift(&self, f: &QPoly) -> Result<RingPoly> {
        lift_into(&self.vars, &self.params, f)
    }

    /// Same ring with a rational value substituted for parameter `i` in every
    /// relation (the parameter stays in the coefficient context). The
    /// preferred basis is kept when one was set.
    pub fn specialize(&self, i: usize, value: &Rational) -> Result<Self> {
        if i >= self.params.len() {
            return Err(Error::InvalidInput(format!("no parameter with index {i}")));
        }
        let relations = self
            .relations
            .iter()
            .map(|r| {
                let terms = r
                    .terms()
                    .map(|(m, c)| Ok((m.clone(), c.substitute(i, value)?)))
                    .collect::<Result<Vec<_>>>()?;
                Ok(RingPoly::from_terms(
                    self.vars.clone(),
                    self.params.clone(),
                    terms,
                ))
            })
            .collect::<Result<_>>()?;
        let preferred = if self.change_of_basis.is_some() {
            self.basis.clone()
        } else {
            None
        };
        Self::with_order(
            self.vars.clone(),
            self.params.clone(),
            self.var_degrees.clone(),
            self.param_degrees.clone(),
            relations,
            preferred,
            self.order,
        )
    }
}

/// Rewrites a rational polynomial in (some of) `vars` and `params`, in any
/// order, as an element of `Q(params)[vars]`.
pub fn lift_into(vars: &Arc<[String]>, params: &Arc<[String]>, f: &QPoly) -> Result<RingPoly> {
    enum Slot {
        Var(usize),
        Param(usize),
    }
    let slots: Vec<Slot> = f
        .vars()
        .iter()
        .map(|name| {
            if let Some(i) = vars.iter().position(|v| v == name) {
                Ok(Slot::Var(i))
            } else if let Some(i) = params.iter().position(|v| v == name) {
                Ok(Slot::Param(i))
            } else {
                Err(Error::RingMismatch(format!("unknown variable {name}")))
            }
        })
        .collect::<Result<_>>()?;
    let terms = f.terms().map(|(m, c)| {
        let mut ve = vec![0u32; vars.len()];
        let mut pe = vec![0u32; params.len()];
        for (slot, &e) in slots.iter().zip(m.exponents()) {
            match *slot {
                Slot::Var(i) => ve[i] += e,
                Slot::Param(i) => pe[i] += e,
            }
        }
        let coeff = QPoly::from_terms(params.clone(), (), [(Monomial::new(pe), c.clone())]);
        (Monomial::new(ve), RationalFunction::from_poly(coeff))
    });
    Ok(RingPoly::from_terms(vars.clone(), params.clone(), terms))
}

/// `x^{n+1} - q` over `Q(q)`, `deg x = 1`, `deg q = n + 1`.
pub fn qh_projective_space(n: u32) -> Result<RingPresentation> {
    if n < 1 {
        return Err(Error::InvalidInput("projective space needs n >= 1".into()));
    }
    let (vars, params) = (var_names(&["x"]), var_names(&["q"]));
    let q = RationalFunction::param(params.clone(), 0);
    let minus_one = rf_const(Rational::from_integer(-1), &params);
    let rel = RingPoly::from_terms(
        vars.clone(),
        params.clone(),
        [
            (Monomial::new(vec![n + 1]), RationalFunction::one(&params)),
            (Monomial::one(1), q.times(&minus_one)),
        ],
    );
    RingPresentation::new(vars, params, vec![1], vec![n + 1], vec![rel], None)
}

/// `x^{n+1} - p`, `y^{m+1} - q` over `Q(p, q)`.
pub fn qh_product_projective(n: u32, m: u32) -> Result<RingPresentation> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidInput(
            "product of projective spaces needs n, m >= 1".into(),
        ));
    }
    let (vars, params) = (var_names(&["x", "y"]), var_names(&["p", "q"]));
    let minus_one = rf_const(Rational::from_integer(-1), &params);
    let rel = |i: usize, e: u32| {
        let lead = Monomial::var_power(2, i, e);
        RingPoly::from_terms(
            vars.clone(),
            params.clone(),
            [
                (lead, RationalFunction::one(&params)),
                (
                    Monomial::one(2),
                    RationalFunction::param(params.clone(), i).times(&minus_one),
                ),
            ],
        )
    };
    let relations = vec![rel(0, n + 1), rel(1, m + 1)];
    RingPresentation::new(
        vars,
        params,
        vec![1, 1],
        vec![n + 1, m + 1],
        relations,
        None,
    )
}

/// `det(Aa + Bb) - p`, `det(Ca + Db) - q` over `Q(p, q)`, reported in the basis
/// `{1, a, b, ab}`.
pub fn quadric_family_relations(mats: &DeformationMatrices) -> Result<RingPresentation> {
    let (vars, params) = (var_names(&["a", "b"]), var_names(&["p", "q"]));
    let relation = |x, y, param: usize| {
        let [c_aa, c_ab, c_bb] = polarized_determinant(x, y);
        let minus = RationalFunction::param(params.clone(), param).negated();
        RingPoly::from_terms(
            vars.clone(),
            params.clone(),
            [
                (Monomial::new(vec![2, 0]), rf_const(c_aa, &params)),
                (Monomial::new(vec![1, 1]), rf_const(c_ab, &params)),
                (Monomial::new(vec![0, 2]), rf_const(c_bb, &params)),
                (Monomial::one(2), minus),
            ],
        )
    };
    let relations = vec![relation(&mats.a, &mats.b, 0), relation(&mats.c, &mats.d, 1)];
    let basis = vec![
        Monomial::new(vec![0, 0]),
        Monomial::new(vec![1, 0]),
        Monomial::new(vec![0, 1]),
        Monomial::new(vec![1, 1]),
    ];
    let degenerate = |why: String| Error::DegenerateDeformation(why);
    // probe the staircase first so every failure mode gets the same error kind
    let probe = RingPresentation::new(
        vars.clone(),
        params.clone(),
        vec![1, 1],
        vec![2, 2],
        relations.clone(),
        None,
    )?;
    match probe.staircase() {
        Some(s) if s.len() == 4 => {}
        Some(s) => {
            return Err(degenerate(format!(
                "quotient has dimension {}, expected 4",
                s.len()
            )))
        }
        None => return Err(degenerate("quotient is infinite-dimensional".into())),
    }
    RingPresentation::new(vars, params, vec![1, 1], vec![2, 2], relations, Some(basis)).map_err(
        |e| {
            degenerate(format!(
                "{{1, a, b, ab}} is not a basis of the quotient: {e}"
            ))
        },
    )
}

/// Whether the quadric ring for `mats` has the same reduced Gröbner basis as
/// `QH*(P^1 x P^1)` with `x, y` renamed to `a, b`. Degenerate input is `false`.
pub fn check_classical_specialization(mats: &DeformationMatrices) -> bool {
    let Ok(ring) = quadric_family_relations(mats) else {
        return false;
    };
    let classical = qh_product_projective(1, 1).expect("valid preset");
    let renamed: Result<Vec<RingPoly>> = classical
        .groebner_basis()
        .iter()
        .map(|g| g.with_vars(ring.vars().clone()))
        .collect();
    renamed.is_ok_and(|gb| gb == ring.groebner_basis())
}

/// `correlator(f)` together with the monomial it was read from.
#[derive(Clone, Debug, PartialEq)]
pub struct CorrelatorReport {
    pub top_monomial: Monomial,
    pub value: RationalFunction,
}

#[derive(Serialize, Deserialize)]
struct CorrelatorJson {
    params: Vec<String>,
    top_monomial: Monomial,
    value: serde_json::Value,
    text: String,
}

impl Serialize for CorrelatorReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CorrelatorJson {
            params: self.value.params().to_vec(),
            top_monomial: self.top_monomial.clone(),
            value: self.value.to_json(),
            text: self.value.to_text(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CorrelatorReport {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = CorrelatorJson::deserialize(d)?;
        let value = RationalFunction::from_json(&j.value, &var_names_owned(j.params))
            .map_err(D::Error::custom)?;
        Ok(CorrelatorReport {
            top_monomial: j.top_monomial,
            value,
        })
    }
}

impl RingPresentation {
    pub fn correlator_report(&self, f: &RingPoly) -> Result<CorrelatorReport> {
        Ok(CorrelatorReport {
            top_monomial: self.top_monomial()?.clone(),
            value: self.correlator(f)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassicalCheck {
    pub classical: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elem(ring: &RingPresentation, terms: &[(&[u32], Rational)]) -> RingPoly {
        RingPoly::from_terms(
            ring.vars().clone(),
            ring.params().clone(),
            terms.iter().map(|(e, c)| {
                (
                    Monomial::new(e.to_vec()),
                    rf_const(c.clone(), ring.params()),
                )
            }),
        )
    }

    fn mono(ring: &RingPresentation, e: &[u32]) -> RingPoly {
        elem(ring, &[(e, Rational::one())])
    }

    fn param_times(ring: &RingPresentation, params: &[u32], e: &[u32]) -> RingPoly {
        let c = QPoly::from_terms(
            ring.params().clone(),
            (),
            [(Monomial::new(params.to_vec()), Rational::one())],
        );
        RingPoly::from_terms(
            ring.vars().clone(),
            ring.params().clone(),
            [(Monomial::new(e.to_vec()), RationalFunction::from_poly(c))],
        )
    }

    fn exps(ms: &[Monomial]) -> Vec<Vec<u32>> {
        let mut v: Vec<Vec<u32>> = ms.iter().map(|m| m.exponents().to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn projective_space_presets() {
        let p1 = qh_projective_space(1).unwrap();
        assert_eq!(p1.relations()[0].to_text(), "x^2 - q");
        assert_eq!(p1.staircase().unwrap().len(), 2);
        let p2 = qh_projective_space(2).unwrap();
        assert_eq!(
            p2.normal_form(&mono(&p2, &[3])).unwrap(),
            param_times(&p2, &[1], &[0])
        );
        assert_eq!(
            p2.normal_form(&mono(&p2, &[5])).unwrap(),
            param_times(&p2, &[1], &[2])
        );
        assert!(qh_projective_space(0).is_err());
    }

    #[test]
    fn product_presets() {
        let r = qh_product_projective(1, 1).unwrap();
        assert_eq!(
            exps(r.staircase().unwrap()),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        assert_eq!(
            r.normal_form(&mono(&r, &[2, 2])).unwrap(),
            param_times(&r, &[1, 1], &[0, 0])
        );
        assert_eq!(
            qh_product_projective(2, 1)
                .unwrap()
                .staircase()
                .unwrap()
                .len(),
            6
        );
    }

    #[test]
    fn classical_quadric() {
        let ring = quadric_family_relations(&DeformationMatrices::classical()).unwrap();
        let texts: Vec<String> = ring.relations().iter().map(|r| r.to_text()).collect();
        assert_eq!(texts, ["a^2 - p", "b^2 - q"]);
        let gb: Vec<String> = ring.groebner_basis().iter().map(|r| r.to_text()).collect();
        assert_eq!(gb.len(), 2);
        assert!(gb.contains(&"a^2 - p".to_string()) && gb.contains(&"b^2 - q".to_string()));
        let r = ring.reduce(&mono(&ring, &[2, 2])).unwrap();
        assert_eq!(r.reduced, param_times(&ring, &[1, 1], &[0, 0]));
        let r = ring.reduce(&mono(&ring, &[3, 1])).unwrap();
        assert_eq!(r.reduced, param_times(&ring, &[1, 0], &[1, 1]));
        assert_eq!(r.coordinates, r.reduced);
        let zero = RingPoly::zero(ring.vars().clone(), ring.params().clone());
        assert!(ring.reduce(&zero).unwrap().reduced.is_zero());
        assert!(check_classical_specialization(
            &DeformationMatrices::classical()
        ));
    }

    #[test]
    fn correlators() {
        let ring = quadric_family_relations(&DeformationMatrices::classical()).unwrap();
        assert!(ring.correlator(&mono(&ring, &[1, 1])).unwrap().is_one());
        assert_eq!(
            ring.correlator(&mono(&ring, &[3, 1])).unwrap(),
            RationalFunction::param(ring.params().clone(), 0)
        );
        assert!(ring.correlator(&mono(&ring, &[0, 0])).unwrap().is_zero());
        let p3 = qh_projective_space(3).unwrap();
        assert_eq!(p3.top_monomial().unwrap().exponents(), &[3]);
        assert_eq!(
            qh_product_projective(2, 3)
                .unwrap()
                .top_monomial()
                .unwrap()
                .exponents(),
            &[2, 3]
        );
    }

    #[test]
    fn polarization_examples() {
        let (i, z) = ([[1, 0], [0, 1]], [[0, 0], [0, 0]]);
        let ring =
            quadric_family_relations(&DeformationMatrices::from_integers(i, i, z, i)).unwrap();
        let texts: Vec<String> = ring.relations().iter().map(|r| r.to_text()).collect();
        assert_eq!(texts, ["a^2 + 2*a*b + b^2 - p", "b^2 - q"]);
        let scaled = DeformationMatrices::from_integers([[2, 0], [0, 2]], z, z, i);
        assert!(!check_classical_specialization(&scaled));
        let swapped = DeformationMatrices::from_integers(z, i, i, z);
        assert!(!check_classical_specialization(&swapped));
    }

    #[test]
    fn degenerate_family() {
        let z = [[0, 0], [0, 0]];
        let i = [[1, 0], [0, 1]];
        let zero = DeformationMatrices::from_integers(z, z, i, i);
        assert!(matches!(
            quadric_family_relations(&zero),
            Err(Error::DegenerateDeformation(_))
        ));
        // both conics are multiples of a^2: ideal (a^2 - p, a^2 - q) is the unit ideal
        let same = DeformationMatrices::from_integers(i, z, i, z);
        assert!(matches!(
            quadric_family_relations(&same),
            Err(Error::DegenerateDeformation(_))
        ));
    }

    #[test]
    fn generic_quadric_uses_preferred_basis() {
        let m = DeformationMatrices::from_integers(
            [[1, 2], [3, 4]],
            [[0, 1], [1, 5]],
            [[2, 1], [1, 3]],
            [[1, 1], [4, 2]],
        );
        let ring = quadric_family_relations(&m).unwrap();
        assert_eq!(ring.staircase().unwrap().len(), 4);
        assert_eq!(
            exps(ring.basis().unwrap()),
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );
        let f = mono(&ring, &[3, 2]);
        let r = ring.reduce(&f).unwrap();
        // coordinates and reduced form are the same class
        assert!(ring
            .normal_form(&(&r.coordinates - &r.reduced))
            .unwrap()
            .is_zero());
        assert!(ring.correlator(&mono(&ring, &[1, 1])).unwrap().is_one());
    }

    #[test]
    fn lift_accepts_params_in_any_order() {
        let ring = qh_product_projective(1, 1).unwrap();
        let f: QPoly =
            serde_json::from_str(r#"{"vars":["q","x"],"terms":[{"coeff":"2","exps":[1,3]}]}"#)
                .unwrap();
        let lifted = ring.lift(&f).unwrap();
        assert_eq!(lifted.to_text(), "(2*q)*x^3");
        let bad: QPoly =
            serde_json::from_str(r#"{"vars":["z"],"terms":[{"coeff":"1","exps":[1]}]}"#).unwrap();
        assert!(matches!(ring.lift(&bad), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn ring_dump_round_trip() {
        let m = DeformationMatrices::from_integers(
            [[1, 2], [3, 4]],
            [[0, 1], [1, 5]],
            [[2, 1], [1, 3]],
            [[1, 1], [4, 2]],
        );
        for ring in [
            quadric_family_relations(&m).unwrap(),
            qh_product_projective(2, 1).unwrap(),
        ] {
            let json = serde_json::to_string(&ring).unwrap();
            let back: RingPresentation = serde_json::from_str(&json).unwrap();
            assert_eq!(back, ring);
        }
        let json = serde_json::to_string(&m).unwrap();
        assert!(json.starts_with(r#"{"A":[["1","2"],["3","4"]]"#));
        assert_eq!(
            serde_json::from_str::<DeformationMatrices>(&json).unwrap(),
            m
        );
    }
}
