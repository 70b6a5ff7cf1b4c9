use super::monomial::{Monomial, MonomialOrder};
use super::poly::{Coefficient, Polynomial};
use crate::error::{Error, Result};

/// Multivariate division of `f` by `divisors`.
///
/// Returns quotients `q_i` and remainder `r` with `f = sum q_i g_i + r`, where
/// no monomial of `r` is divisible by any leading monomial of the divisors.
/// Zero divisors are rejected.
pub fn divide<C: Coefficient>(
    f: &Polynomial<C>,
    divisors: &[Polynomial<C>],
    order: MonomialOrder,
) -> Result<(Vec<Polynomial<C>>, Polynomial<C>)> {
    let mut leads = Vec::with_capacity(divisors.len());
    for g in divisors {
        f.same_ring(g)?;
        let (m, c) = g
            .leading_term(order)
            .ok_or_else(|| Error::InvalidInput("division by the zero polynomial".into()))?;
        leads.push((m.clone(), c.inverse().expect("nonzero leading coefficient")));
    }
    let zero = Polynomial::zero(f.vars().clone(), f.ctx().clone());
    let mut quotients = vec![zero.clone(); divisors.len()];
    let mut remainder = zero;
    let mut p = f.clone();
    while let Some((lm, lc)) = p.leading_term(order) {
        let (lm, lc) = (lm.clone(), lc.clone());
        let hit = leads
            .iter()
            .enumerate()
            .find_map(|(i, (m, inv))| m.quotient_of(&lm).map(|q| (i, q, lc.times(inv))));
        match hit {
            Some((i, mono, coeff)) => {
                p.sub_term_multiple(&coeff, &mono, &divisors[i]);
                let term =
                    Polynomial::from_terms(f.vars().clone(), f.ctx().clone(), [(mono, coeff)]);
                quotients[i] = &quotients[i] + &term;
            }
            None => {
                let term =
                    Polynomial::from_terms(f.vars().clone(), f.ctx().clone(), [(lm.clone(), lc)]);
                p = &p - &term;
                remainder = &remainder + &term;
            }
        }
    }
    Ok((quotients, remainder))
}

/// Remainder of `f` modulo `basis`. When `basis` is a Gröbner basis for
/// `order` this is the unique normal form of `f` modulo the ideal.
pub fn normal_form<C: Coefficient>(
    f: &Polynomial<C>,
    basis: &[Polynomial<C>],
    order: MonomialOrder,
) -> Result<Polynomial<C>> {
    let nonzero: Vec<_> = basis.iter().filter(|g| !g.is_zero()).cloned().collect();
    Ok(divide(f, &nonzero, order)?.1)
}

pub fn s_polynomial<C: Coefficient>(
    f: &Polynomial<C>,
    g: &Polynomial<C>,
    order: MonomialOrder,
) -> Polynomial<C> {
    let (mf, cf) = f.leading_term(order).expect("nonzero");
    let (mg, cg) = g.leading_term(order).expect("nonzero");
    let lcm = mf.lcm(mg);
    let uf = mf.quotient_of(&lcm).expect("lcm is a multiple");
    let ug = mg.quotient_of(&lcm).expect("lcm is a multiple");
    let a = f.mul_term(&cf.inverse().expect("nonzero"), &uf);
    let b = g.mul_term(&cg.inverse().expect("nonzero"), &ug);
    &a - &b
}

/// Reduced Gröbner basis of the ideal generated by `generators`.
///
/// Plain Buchberger with the coprime-leading-monomial criterion, followed by
/// minimalization and interreduction. Output is monic and sorted by leading
/// monomial, ascending, so equal ideals give equal vectors.
pub fn buchberger<C: Coefficient>(
    generators: &[Polynomial<C>],
    order: MonomialOrder,
) -> Result<Vec<Polynomial<C>>> {
    if let Some(first) = generators.first() {
        for g in &generators[1..] {
            first.same_ring(g)?;
        }
    }
    let mut basis: Vec<Polynomial<C>> = generators
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| g.monic(order))
        .collect();
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push((i, j));
        }
    }
    while let Some((i, j)) = pairs.pop() {
        let mi = basis[i].leading_monomial(order).expect("nonzero");
        let mj = basis[j].leading_monomial(order).expect("nonzero");
        if mi.is_coprime(mj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let r = normal_form(&s, &basis, order)?;
        if !r.is_zero() {
            let k = basis.len();
            basis.push(r.monic(order));
            pairs.extend((0..k).map(|i| (i, k)));
        }
    }
    Ok(reduce_basis(basis, order))
}

/// Turns a Gröbner basis into the reduced one.
fn reduce_basis<C: Coefficient>(
    mut basis: Vec<Polynomial<C>>,
    order: MonomialOrder,
) -> Vec<Polynomial<C>> {
    basis.retain(|g| !g.is_zero());
    // drop elements whose leading monomial is divisible by another's
    let mut minimal: Vec<Polynomial<C>> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial(order).expect("nonzero");
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let hm = h.leading_monomial(order).expect("nonzero");
            j != i && hm.divides(lm) && (hm != lm || j < i)
        });
        if !redundant {
            minimal.push(g.monic(order));
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<_> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let r = normal_form(&minimal[i], &others, order).expect("same ring");
        reduced.push(r.monic(order));
    }
    reduced.sort_by(|a, b| {
        order.cmp(
            a.leading_monomial(order).expect("nonzero"),
            b.leading_monomial(order).expect("nonzero"),
        )
    });
    reduced
}

/// Buchberger's criterion: every S-polynomial reduces to zero.
pub fn is_groebner_basis<C: Coefficient>(basis: &[Polynomial<C>], order: MonomialOrder) -> bool {
    for j in 0..basis.len() {
        for i in 0..j {
            let s = s_polynomial(&basis[i], &basis[j], order);
            match normal_form(&s, basis, order) {
                Ok(r) if r.is_zero() => {}
                _ => return false,
            }
        }
    }
    true
}

/// Monomials not divisible by any leading monomial of `basis`, when there are
/// finitely many; `None` otherwise. Sorted ascending by `order`.
pub fn standard_monomials<C: Coefficient>(
    basis: &[Polynomial<C>],
    nvars: usize,
    order: MonomialOrder,
) -> Option<Vec<Monomial>> {
    let leads: Vec<&Monomial> = basis
        .iter()
        .filter_map(|g| g.leading_monomial(order))
        .collect();
    if leads.iter().any(|m| m.is_one()) {
        return Some(Vec::new());
    }
    // each variable needs a pure-power leading monomial
    let mut bounds = vec![None; nvars];
    for m in &leads {
        if let Some((i, e)) = m.as_pure_power() {
            bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
        }
    }
    let bounds: Vec<u32> = bounds.into_iter().collect::<Option<_>>()?;
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let m = Monomial::new(exps.clone());
        if !leads.iter().any(|l| l.divides(&m)) {
            out.push(m);
        }
        // odometer over the box [0, bound)
        let mut k = 0;
        loop {
            if k == nvars {
                out.sort_by(|a, b| order.cmp(a, b));
                return Some(out);
            }
            exps[k] += 1;
            if exps[k] < bounds[k] {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}
