//! Cayley–Bacharach checks for reduced 0-cycles on a surface `X` in `P^3`.
//!
//! `Z` satisfies CB with respect to `|O_X(m)|` when every section vanishing on
//! `Z \ {z}` also vanishes at `z`, for each `z` in `Z`. In terms of the
//! evaluation matrix `E(Z)` (degree-`m` monomials by points) this is
//! `rank E(Z \ {z}) = rank E(Z)` for every `z`.
//!
//! Sections are represented by all degree-`m` forms on `P^3`. This is exact:
//! `H^0(O_P3(m)) -> H^0(O_X(m))` is surjective for a hypersurface, and the
//! kernel consists of multiples of the equation, which vanish at every point
//! of `X` and so never change a rank over points of `X`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactmath::{ExactMatrix, Monomial, Rational};
use crate::liqin::{
    check_omality, extension_c2, required_cycle_length, BundleNumerics, C1Description,
    OmalityReport, Sign,
};
use crate::surface::{HypersurfaceSpec, SurfaceData};

/// Point of `P^3`, stored with its first nonzero coordinate equal to 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjectivePoint {
    coords: [Rational; 4],
}

impl ProjectivePoint {
    pub fn new(coords: [Rational; 4]) -> Result<Self> {
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .cloned()
            .ok_or_else(|| {
                Error::InvalidInput("projective point with all coordinates zero".into())
            })?;
        let inv = lead.recip()?;
        Ok(ProjectivePoint {
            coords: coords.map(|c| c * &inv),
        })
    }

    pub fn from_integers(coords: [i64; 4]) -> Result<Self> {
        Self::new(coords.map(Rational::from_integer))
    }

    pub fn coords(&self) -> &[Rational; 4] {
        &self.coords
    }
}

impl fmt::Display for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(":"))
    }
}

impl fmt::Debug for ProjectivePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for ProjectivePoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjectivePoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let coords = <[Rational; 4]>::deserialize(d)?;
        ProjectivePoint::new(coords).map_err(serde::de::Error::custom)
    }
}

/// Reduced 0-cycle: distinct points.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PointCycle {
    points: Vec<ProjectivePoint>,
}

impl PointCycle {
    pub fn new(points: Vec<ProjectivePoint>) -> Result<Self> {
        let mut seen = std::collections::BTreeSet::new();
        for p in &points {
            if !seen.insert(p) {
                return Err(Error::DuplicatePoints(p.to_string()));
            }
        }
        Ok(PointCycle { points })
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn without(&self, i: usize) -> PointCycle {
        let mut points = self.points.clone();
        points.remove(i);
        PointCycle { points }
    }
}

impl Serialize for PointCycle {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.points.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PointCycle {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let points = Vec::<ProjectivePoint>::deserialize(d)?;
        PointCycle::new(points).map_err(serde::de::Error::custom)
    }
}

/// `{"points": [...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointsFile {
    pub points: PointCycle,
}

/// `{"cycles": [[...], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CyclesFile {
    pub cycles: Vec<PointCycle>,
}

/// The linear system `|O_X(m H)|` on a hypersurface with known equation.
#[derive(Clone, Debug, PartialEq)]
pub struct CbSystem {
    pub hypersurface: HypersurfaceSpec,
    pub degree: i64,
}

impl CbSystem {
    pub fn new(hypersurface: HypersurfaceSpec, degree: i64) -> Result<Self> {
        hypersurface.validate()?;
        hypersurface.equation()?;
        Ok(CbSystem {
            hypersurface,
            degree,
        })
    }

    /// The system `|rL - c1 + K|` used by the rank-`r` extension:
    /// `m = r` for `c1 = +K` and `m = r + 2(d - 4)` for `c1 = -K`.
    pub fn for_extension(hypersurface: HypersurfaceSpec, r: i64, sign: Sign) -> Result<Self> {
        let d = hypersurface.degree;
        let m = match sign {
            Sign::PlusK => r,
            Sign::MinusK => r + 2 * (d - 4),
        };
        Self::new(hypersurface, m)
    }
}

pub fn on_surface(p: &ProjectivePoint, h: &HypersurfaceSpec) -> Result<bool> {
    Ok(h.equation()?.evaluate(p.coords())?.is_zero())
}

/// All monomials of degree `m` in 4 variables, in lex-descending order.
pub fn monomials_of_degree(m: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in (0..=m).rev() {
        for b in (0..=m - a).rev() {
            for c in (0..=m - a - b).rev() {
                out.push(Monomial::new(vec![a, b, c, m - a - b - c]));
            }
        }
    }
    out
}

fn monomial_at(m: &Monomial, p: &ProjectivePoint) -> Rational {
    m.exponents()
        .iter()
        .zip(p.coords())
        .fold(
            Rational::one(),
            |acc, (&e, x)| if e == 0 { acc } else { acc * x.pow(e) },
        )
}

/// Rows: the `C(m+3, 3)` degree-`m` monomials; columns: the points of `z`.
pub fn evaluation_matrix(z: &PointCycle, m: i64) -> Result<ExactMatrix<Rational>> {
    if m < 0 {
        return Err(Error::InvalidInput(format!(
            "system degree must be non-negative, got {m}"
        )));
    }
    let rows = monomials_of_degree(m as u32)
        .iter()
        .map(|mono| z.points().iter().map(|p| monomial_at(mono, p)).collect())
        .collect();
    ExactMatrix::from_rows(rows, z.len(), ())
}

fn system_rank(z: &PointCycle, m: i64) -> usize {
    if m < 0 {
        // O_X(m) has no sections
        return 0;
    }
    evaluation_matrix(z, m).expect("non-negative degree").rank()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointRank {
    pub point: ProjectivePoint,
    pub rank_without: usize,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CbReport {
    pub system_degree: i64,
    pub rank: usize,
    pub points: Vec<PointRank>,
    pub verdict: bool,
}

/// Cayley–Bacharach check of `z` against `sys`, with the rank pair per point.
pub fn cb_check(z: &PointCycle, sys: &CbSystem) -> Result<CbReport> {
    for p in z.points() {
        if !on_surface(p, &sys.hypersurface)? {
            return Err(Error::PointOffSurface(p.to_string()));
        }
    }
    let rank = system_rank(z, sys.degree);
    let points: Vec<PointRank> = (0..z.len())
        .map(|i| {
            let rank_without = system_rank(&z.without(i), sys.degree);
            PointRank {
                point: z.points()[i].clone(),
                rank_without,
                satisfied: rank_without == rank,
            }
        })
        .collect();
    let verdict = points.iter().all(|p| p.satisfied);
    Ok(CbReport {
        system_degree: sys.degree,
        rank,
        points,
        verdict,
    })
}

/// Everything that can be checked about the extension
/// `0 -> O(c1 + (1-r)L) -> E -> (+) O(L) (x) I_{Z_i} -> 0` without constructing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionCertificate {
    pub rank: i64,
    pub sign: Sign,
    pub system_degree: i64,
    pub cycles: Vec<CbReport>,
    pub cycle_lengths: Vec<usize>,
    pub total_length: i64,
    pub required_length: i64,
    pub length_matches: bool,
    pub cb_verdict: bool,
    /// Chern data of `E` given the supplied cycles.
    pub target: BundleNumerics,
    pub omality: OmalityReport,
    pub complete: bool,
}

pub fn extension_certificate(
    s: &SurfaceData,
    h: &HypersurfaceSpec,
    cycles: &[PointCycle],
    r: i64,
    sign: Sign,
) -> Result<ExtensionCertificate> {
    if r < 2 {
        return Err(Error::InvalidRank { rank: r, min: 2 });
    }
    let expected = (r - 1) as usize;
    if cycles.len() != expected {
        return Err(Error::WrongCycleCount {
            expected,
            got: cycles.len(),
        });
    }
    let sys = CbSystem::for_extension(h.clone(), r, sign)?;
    let reports: Vec<CbReport> = cycles
        .iter()
        .map(|z| cb_check(z, &sys))
        .collect::<Result<_>>()?;
    let cycle_lengths: Vec<usize> = cycles.iter().map(PointCycle::len).collect();
    let total_length = cycle_lengths.iter().sum::<usize>() as i64;
    let required_length = match required_cycle_length(s, r, sign) {
        Ok(n) => n,
        Err(Error::NegativeCycleLength(n)) => n,
        Err(e) => return Err(e),
    };
    let c1_dot_l = sign.c1_dot_l(s);
    let target = BundleNumerics {
        rank: r,
        c1_dot_l,
        c1_squared: s.k_squared,
        c2: extension_c2(c1_dot_l, s.l_squared, r, total_length),
        c1_description: match sign {
            Sign::PlusK => C1Description::PlusK,
            Sign::MinusK => C1Description::MinusK,
        },
    };
    let omality = check_omality(&target, s, sign == Sign::PlusK);
    let cb_verdict = reports.iter().all(|r| r.verdict);
    let length_matches = total_length == required_length;
    Ok(ExtensionCertificate {
        rank: r,
        sign,
        system_degree: sys.degree,
        cycles: reports,
        cycle_lengths,
        total_length,
        required_length,
        length_matches,
        cb_verdict,
        target,
        omality,
        complete: cb_verdict && length_matches,
    })
}

/// Heuristic sampler: integer points with coordinates in `[-height, height]`,
/// kept when they lie on the surface. Deterministic for a given seed. Makes no
/// attempt at the special position that stability arguments need.
pub fn sample_points(
    h: &HypersurfaceSpec,
    count: usize,
    height: i64,
    seed: u64,
    max_attempts: usize,
) -> Result<PointCycle> {
    let f = h.equation()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = std::collections::BTreeSet::new();
    let mut points = Vec::new();
    for _ in 0..max_attempts {
        if points.len() == count {
            break;
        }
        let coords = [(); 4].map(|_| Rational::from_integer(rng.gen_range(-height..=height)));
        let Ok(p) = ProjectivePoint::new(coords) else {
            continue;
        };
        if f.evaluate(p.coords())?.is_zero() && found.insert(p.clone()) {
            points.push(p);
        }
    }
    PointCycle::new(points)
}

/// Points `s*a + t*b` on the line through `a` and `b`, for random coprime
/// small `(s : t)`. Errors unless the whole line lies on the surface, which is
/// tested at `degree + 1` distinct points.
pub fn sample_points_on_line(
    h: &HypersurfaceSpec,
    a: &ProjectivePoint,
    b: &ProjectivePoint,
    count: usize,
    seed: u64,
) -> Result<PointCycle> {
    if a == b {
        return Err(Error::InvalidInput("line needs two distinct points".into()));
    }
    let at = |s: i64, t: i64| -> Result<ProjectivePoint> {
        let (s, t) = (Rational::from_integer(s), Rational::from_integer(t));
        let mut c = [(); 4].map(|_| Rational::zero());
        for (i, ci) in c.iter_mut().enumerate() {
            *ci = &s * &a.coords()[i] + &t * &b.coords()[i];
        }
        ProjectivePoint::new(c)
    };
    for t in 0..=h.degree {
        let p = at(1, t)?;
        if !on_surface(&p, h)? {
            return Err(Error::PointOffSurface(p.to_string()));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut found = std::collections::BTreeSet::new();
    let mut points = Vec::new();
    let bound = 4 * count as i64 + 4;
    while points.len() < count {
        let s = rng.gen_range(-bound..=bound);
        let t = rng.gen_range(-bound..=bound);
        if num_integer::gcd(s, t) != 1 {
            continue;
        }
        let p = at(s, t)?;
        if found.insert(p.clone()) {
            points.push(p);
        }
    }
    PointCycle::new(points)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{var_names, QPoly};
    use crate::surface::hypersurface_invariants;

    fn fermat_quartic() -> HypersurfaceSpec {
        let vars = var_names(&["x0", "x1", "x2", "x3"]);
        let sign = [1, 1, -1, -1];
        let f = QPoly::from_terms(
            vars,
            (),
            (0..4).map(|i| {
                (
                    Monomial::var_power(4, i, 4),
                    Rational::from_integer(sign[i]),
                )
            }),
        );
        HypersurfaceSpec::new(4, Some(f)).unwrap()
    }

    fn pt(c: [i64; 4]) -> ProjectivePoint {
        ProjectivePoint::from_integers(c).unwrap()
    }

    #[test]
    fn canonical_representative() {
        let p = pt([0, 2, 4, -6]);
        assert_eq!(p.to_string(), "(0:1:2:-3)");
        assert_eq!(p, pt([0, -1, -2, 3]));
        assert!(ProjectivePoint::from_integers([0, 0, 0, 0]).is_err());
    }

    #[test]
    fn membership() {
        let h = fermat_quartic();
        assert!(on_surface(&pt([1, 1, 1, 1]), &h).unwrap());
        assert!(!on_surface(&pt([1, 0, 0, 0]), &h).unwrap());
        assert!(on_surface(&pt([2, 3, 2, 3]), &h).unwrap());
        let bare = HypersurfaceSpec::new(4, None).unwrap();
        assert_eq!(
            on_surface(&pt([1, 1, 1, 1]), &bare),
            Err(Error::MissingDefiningPolynomial)
        );
    }

    #[test]
    fn evaluation_matrices() {
        let single = PointCycle::new(vec![pt([1, 0, 0, 0])]).unwrap();
        let e = evaluation_matrix(&single, 1).unwrap();
        assert_eq!((e.rows(), e.cols()), (4, 1));
        assert_eq!(e.rank(), 1);
        let empty = evaluation_matrix(&PointCycle::default(), 2).unwrap();
        assert_eq!((empty.rows(), empty.cols(), empty.rank()), (10, 0, 0));
        let three =
            PointCycle::new(vec![pt([1, 0, 0, 0]), pt([0, 1, 0, 0]), pt([1, 1, 1, 1])]).unwrap();
        assert_eq!(evaluation_matrix(&three, 1).unwrap().rank(), 3);
        assert_eq!(monomials_of_degree(2).len(), 10);
    }

    #[test]
    fn cb_examples() {
        let h = fermat_quartic();
        let sys = CbSystem::new(h.clone(), 1).unwrap();
        assert!(cb_check(&PointCycle::default(), &sys).unwrap().verdict);
        let single = PointCycle::new(vec![pt([1, 1, 1, 1])]).unwrap();
        let report = cb_check(&single, &sys).unwrap();
        assert!(!report.verdict);
        assert_eq!((report.rank, report.points[0].rank_without), (1, 0));
        let collinear =
            PointCycle::new(vec![pt([1, 0, 1, 0]), pt([0, 1, 0, 1]), pt([1, 1, 1, 1])]).unwrap();
        assert!(cb_check(&collinear, &sys).unwrap().verdict);
    }

    #[test]
    fn cb_errors() {
        let h = fermat_quartic();
        let sys = CbSystem::new(h, 1).unwrap();
        let off = PointCycle::new(vec![pt([1, 0, 0, 0])]).unwrap();
        assert!(matches!(
            cb_check(&off, &sys),
            Err(Error::PointOffSurface(_))
        ));
        assert!(matches!(
            PointCycle::new(vec![pt([1, 1, 1, 1]), pt([2, 2, 2, 2])]),
            Err(Error::DuplicatePoints(_))
        ));
        let json = r#"[["1","1","1","1"],["-1","-1","-1","-1"]]"#;
        assert!(serde_json::from_str::<PointCycle>(json).is_err());
    }

    #[test]
    fn certificate_counts_cycles() {
        let h = fermat_quartic();
        let s = hypersurface_invariants(4).unwrap();
        let z = PointCycle::new(vec![pt([1, 1, 1, 1])]).unwrap();
        assert_eq!(
            extension_certificate(&s, &h, &[z], 3, Sign::PlusK).unwrap_err(),
            Error::WrongCycleCount {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn line_sampler() {
        let h = fermat_quartic();
        let z = sample_points_on_line(&h, &pt([1, 0, 1, 0]), &pt([0, 1, 0, 1]), 6, 7).unwrap();
        assert_eq!(z.len(), 6);
        assert!(z.points().iter().all(|p| on_surface(p, &h).unwrap()));
        assert!(sample_points_on_line(&h, &pt([1, 0, 1, 0]), &pt([0, 1, 0, -1]), 3, 7).is_ok());
        assert!(sample_points_on_line(&h, &pt([1, 0, 1, 0]), &pt([0, 1, 1, 0]), 3, 7).is_err());
    }

    #[test]
    fn box_sampler_is_deterministic() {
        let h = fermat_quartic();
        let a = sample_points(&h, 5, 2, 11, 20_000).unwrap();
        let b = sample_points(&h, 5, 2, 11, 20_000).unwrap();
        assert_eq!(a, b);
        assert!(a.points().iter().all(|p| on_surface(p, &h).unwrap()));
    }
}
