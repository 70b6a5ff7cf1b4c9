//! Quotient-ring suites: presets, the deformed quadric family, grading and
//! specialization.

mod common;

use std::sync::Arc;

use common::small_rational;
use omalous::exactmath::{var_names, ExactMatrix, Monomial, QPoly, Rational};
use omalous::qsc::{
    lift_into, polarized_determinant, qh_product_projective, qh_projective_space,
    quadric_family_relations, DeformationMatrices, RingPoly, RingPresentation,
};
use omalous::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn qpoly(vars: &Arc<[String]>, terms: &[(Vec<u32>, Rational)]) -> QPoly {
    QPoly::from_terms(
        vars.clone(),
        (),
        terms
            .iter()
            .map(|(e, c)| (Monomial::new(e.clone()), c.clone())),
    )
}

fn random_matrices(rng: &mut ChaCha8Rng) -> DeformationMatrices {
    let mut m = || {
        ExactMatrix::from_rational_rows(
            (0..2)
                .map(|_| (0..2).map(|_| small_rational(rng)).collect())
                .collect(),
        )
        .unwrap()
    };
    DeformationMatrices::new(m(), m(), m(), m()).unwrap()
}

/// `det(aX + bY)` expanded symbolically, entries being polynomials in the
/// other variables of `ring`.
fn symbolic_det(vars: &Arc<[String]>, x: &[[QPoly; 2]; 2], y: &[[QPoly; 2]; 2]) -> QPoly {
    let a = QPoly::rational_var(vars.clone(), 0);
    let b = QPoly::rational_var(vars.clone(), 1);
    let e = |i: usize, j: usize| &(&a * &x[i][j]) + &(&b * &y[i][j]);
    &(&e(0, 0) * &e(1, 1)) - &(&e(0, 1) * &e(1, 0))
}

fn const_entries(vars: &Arc<[String]>, m: &ExactMatrix<Rational>) -> [[QPoly; 2]; 2] {
    let c = |i, j| QPoly::rational_constant(m.get(i, j).clone(), vars.clone());
    [[c(0, 0), c(0, 1)], [c(1, 0), c(1, 1)]]
}

#[test]
fn polarization_agrees_with_symbolic_expansion() {
    let vars = var_names(&["a", "b"]);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..200 {
        let m = random_matrices(&mut rng);
        let det = symbolic_det(
            &vars,
            &const_entries(&vars, &m.a),
            &const_entries(&vars, &m.b),
        );
        let [aa, ab, bb] = polarized_determinant(&m.a, &m.b);
        let expected = qpoly(
            &vars,
            &[(vec![2, 0], aa), (vec![1, 1], ab), (vec![0, 2], bb)],
        );
        assert_eq!(det, expected);
    }
}

#[test]
fn random_quadrics_have_four_dimensional_quotients() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut generic = 0;
    for _ in 0..100 {
        let m = random_matrices(&mut rng);
        match quadric_family_relations(&m) {
            Ok(ring) => {
                generic += 1;
                assert_eq!(ring.staircase().unwrap().len(), 4);
                let mut basis: Vec<Vec<u32>> = ring
                    .basis()
                    .unwrap()
                    .iter()
                    .map(|m| m.exponents().to_vec())
                    .collect();
                basis.sort();
                assert_eq!(basis, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
                for r in ring.relations() {
                    assert!(ring.normal_form(r).unwrap().is_zero());
                }
            }
            Err(Error::DegenerateDeformation(_)) => {}
            Err(e) => panic!("unexpected error {e}"),
        }
    }
    assert!(generic >= 90, "only {generic} generic cases");
}

#[test]
fn degenerate_matrices_are_rejected() {
    let z = [[0, 0], [0, 0]];
    let m = DeformationMatrices::from_integers(z, z, [[1, 0], [0, 1]], [[2, 1], [1, 3]]);
    assert!(matches!(
        quadric_family_relations(&m),
        Err(Error::DegenerateDeformation(_))
    ));
}

#[test]
fn reduction_preserves_degree() {
    let names = var_names(&["a", "b", "p", "q"]);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..20 {
        let ring = loop {
            if let Ok(r) = quadric_family_relations(&random_matrices(&mut rng)) {
                break r;
            }
        };
        for degree in 0..=6u32 {
            let terms: Vec<(Vec<u32>, Rational)> = (0..4)
                .map(|_| {
                    let k = rng.gen_range(0..=degree / 2);
                    let l = rng.gen_range(0..=(degree / 2 - k));
                    let i = rng.gen_range(0..=degree - 2 * (k + l));
                    (
                        vec![i, degree - 2 * (k + l) - i, k, l],
                        small_rational(&mut rng),
                    )
                })
                .collect();
            let f = ring.lift(&qpoly(&names, &terms)).unwrap();
            let r = ring.reduce(&f).unwrap();
            for g in [&r.reduced, &r.coordinates] {
                if !g.is_zero() {
                    assert_eq!(ring.weighted_degree(g), Some(degree as i64), "{f} -> {g}");
                }
            }
        }
    }
}

#[test]
fn projective_space_laws() {
    for n in 1..=6u32 {
        let ring = qh_projective_space(n).unwrap();
        assert_eq!(ring.staircase().unwrap().len(), n as usize + 1);
        let names = var_names(&["x", "q"]);
        for k in 0..=n {
            let f = ring
                .lift(&qpoly(&names, &[(vec![n + 1 + k, 0], Rational::one())]))
                .unwrap();
            let expected = ring
                .lift(&qpoly(&names, &[(vec![k, 1], Rational::one())]))
                .unwrap();
            assert_eq!(ring.normal_form(&f).unwrap(), expected);
        }
    }
    for n in 1..=4 {
        for m in 1..=4 {
            let ring = qh_product_projective(n, m).unwrap();
            assert_eq!(
                ring.staircase().unwrap().len(),
                ((n + 1) * (m + 1)) as usize
            );
        }
    }
}

/// Matrices depending on `t`, classical at `t = 0`:
/// `A = [[1, t], [0, 1]]`, `B = [[t, 0], [0, 0]]`, `C = [[0, t], [t, 0]]`, `D = [[1, 0], [t, 1]]`.
fn t_family_relations(
    vars: &Arc<[String]>,
    params: &Arc<[String]>,
    t: Option<&Rational>,
) -> Vec<RingPoly> {
    let all = var_names(&["a", "b", "p", "q", "t"]);
    let konst = |c: i64| QPoly::rational_constant(Rational::from_integer(c), all.clone());
    let tt = match t {
        Some(v) => QPoly::rational_constant(v.clone(), all.clone()),
        None => QPoly::rational_var(all.clone(), 4),
    };
    let a = [[konst(1), tt.clone()], [konst(0), konst(1)]];
    let b = [[tt.clone(), konst(0)], [konst(0), konst(0)]];
    let c = [[konst(0), tt.clone()], [tt.clone(), konst(0)]];
    let d = [[konst(1), konst(0)], [tt.clone(), konst(1)]];
    let p = QPoly::rational_var(all.clone(), 2);
    let q = QPoly::rational_var(all.clone(), 3);
    [
        &symbolic_det(&all, &a, &b) - &p,
        &symbolic_det(&all, &c, &d) - &q,
    ]
    .iter()
    .map(|f| lift_into(vars, params, f).unwrap())
    .collect()
}

fn t_ring(t: Option<&Rational>) -> RingPresentation {
    let (vars, params) = (var_names(&["a", "b"]), var_names(&["p", "q", "t"]));
    let relations = t_family_relations(&vars, &params, t);
    RingPresentation::new(vars, params, vec![1, 1], vec![2, 2, 0], relations, None).unwrap()
}

#[test]
fn specialization_commutes_with_normal_forms() {
    let symbolic = t_ring(None);
    let names = var_names(&["a", "b", "p", "q"]);
    let probes: Vec<QPoly> = vec![
        qpoly(&names, &[(vec![2, 2, 0, 0], Rational::one())]),
        qpoly(
            &names,
            &[
                (vec![3, 1, 0, 0], Rational::one()),
                (vec![0, 2, 1, 0], Rational::from_integer(2)),
            ],
        ),
        qpoly(&names, &[(vec![4, 3, 0, 0], Rational::one())]),
        qpoly(&names, &[(vec![1, 0, 0, 0], Rational::one())]),
    ];
    for t0 in [
        Rational::zero(),
        Rational::new(1, 3).unwrap(),
        Rational::from_integer(2),
    ] {
        let specialized = symbolic.specialize(2, &t0).unwrap();
        let direct = t_ring(Some(&t0));
        assert_eq!(
            specialized.groebner_basis(),
            direct.groebner_basis(),
            "t = {t0}"
        );
        for f in &probes {
            let f = direct.lift(f).unwrap();
            assert_eq!(
                specialized.normal_form(&f).unwrap(),
                direct.normal_form(&f).unwrap()
            );
        }
    }
    // at t = 0 the family is the classical quadric
    let at_zero = symbolic.specialize(2, &Rational::zero()).unwrap();
    let classical = quadric_family_relations(&DeformationMatrices::classical()).unwrap();
    let texts = |r: &RingPresentation| {
        r.groebner_basis()
            .iter()
            .map(|g| g.to_text())
            .collect::<Vec<_>>()
    };
    assert_eq!(texts(&at_zero), texts(&classical));
}
