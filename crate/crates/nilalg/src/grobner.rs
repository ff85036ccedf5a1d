//! Buchberger engine over Q for unit-ideal (infeasibility) certificates.
//!
//! Graded reverse lexicographic order, normal pair selection, first and
//! second Buchberger criteria for pair pruning, and a step budget so callers
//! can bound the work. Coefficients must be plain rationals; callers with
//! Gaussian-rational constants adjoin the variable `w` together with the
//! relation w² + 1 before building the ideal.

use crate::scalar::Scalar;
use crate::symbolic::{Monomial, Polynomial, Var};
use thiserror::Error;

#[derive(Debug, Error, Clone)]
pub enum GrobnerError {
    #[error("ideal generators must have rational coefficients")]
    NonRationalCoefficients,
    #[error("budget of {budget} reductions exceeded ({performed} done)")]
    BudgetExceeded {
        budget: usize,
        performed: usize,
        partial: Vec<Polynomial>,
    },
}

/// A polynomial ideal over Q in the fixed variable universe.
#[derive(Debug, Clone)]
pub struct Ideal {
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(generators: Vec<Polynomial>) -> Result<Ideal, GrobnerError> {
        let generators: Vec<Polynomial> =
            generators.into_iter().filter(|g| !g.is_zero()).collect();
        if generators.iter().any(|g| !g.has_rational_coeffs()) {
            return Err(GrobnerError::NonRationalCoefficients);
        }
        Ok(Ideal { generators })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitIdeal {
    Yes,
    No(Vec<Polynomial>),
}

/// Normal form of `p` modulo `basis` (full reduction of every term).
pub fn reduce(p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let mut rem = Polynomial::zero();
    let mut work = p.clone();
    'outer: while !work.is_zero() {
        let (wm, wc) = {
            let (m, c) = work.leading().unwrap();
            (*m, c.clone())
        };
        for g in basis {
            if g.is_zero() {
                continue;
            }
            let (gm, gc) = {
                let (m, c) = g.leading().unwrap();
                (*m, c.clone())
            };
            if let Some(q) = wm.div(&gm) {
                let coef = wc.div(&gc).expect("leading coefficient nonzero");
                work = work.sub(&g.mul_term(&q, &coef));
                continue 'outer;
            }
        }
        // leading term irreducible: move it to the remainder
        rem = rem.add(&Polynomial::from_term(wm, wc.clone()));
        work = work.sub(&Polynomial::from_term(wm, wc));
    }
    rem
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let (fm, fc) = f.leading().map(|(m, c)| (*m, c.clone())).unwrap();
    let (gm, gc) = g.leading().map(|(m, c)| (*m, c.clone())).unwrap();
    let l = fm.lcm(&gm);
    let mf = l.div(&fm).unwrap();
    let mg = l.div(&gm).unwrap();
    let finv = fc.inv().unwrap();
    let ginv = gc.inv().unwrap();
    f.mul_term(&mf, &finv).sub(&g.mul_term(&mg, &ginv))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

/// Buchberger's algorithm. Returns the reduced Gröbner basis.
///
/// `budget` bounds the number of S-polynomial reductions; on exhaustion the
/// partial (unreduced) basis travels with the error.
pub fn groebner_basis(ideal: &Ideal, budget: usize) -> Result<Vec<Polynomial>, GrobnerError> {
    let basis = buchberger(ideal.generators(), budget, false)?;
    Ok(reduce_basis(basis))
}

/// Decide whether 1 ∈ I, aborting early once a constant appears.
pub fn is_unit_ideal(ideal: &Ideal, budget: usize) -> Result<UnitIdeal, GrobnerError> {
    match buchberger(ideal.generators(), budget, true) {
        Ok(basis) => {
            if basis_contains_unit(&basis) {
                Ok(UnitIdeal::Yes)
            } else {
                Ok(UnitIdeal::No(reduce_basis(basis)))
            }
        }
        Err(e) => Err(e),
    }
}

fn basis_contains_unit(basis: &[Polynomial]) -> bool {
    basis.iter().any(|g| !g.is_zero() && g.is_constant())
}

fn buchberger(
    generators: &[Polynomial],
    budget: usize,
    stop_on_unit: bool,
) -> Result<Vec<Polynomial>, GrobnerError> {
    // Interreduce the input first; this keeps the pair queue small.
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in generators {
        let r = reduce(g, &basis);
        if !r.is_zero() {
            basis.push(r.monic());
        }
    }
    if basis_contains_unit(&basis) && stop_on_unit {
        return Ok(basis);
    }

    let mut pairs: Vec<Pair> = Vec::new();
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            push_pair(&mut pairs, &basis, i, j);
        }
    }

    let mut performed = 0usize;
    while let Some(pos) = select_pair(&pairs) {
        let pair = pairs.swap_remove(pos);
        if skip_by_criteria(&pair, &basis, &pairs) {
            continue;
        }
        performed += 1;
        if performed > budget {
            return Err(GrobnerError::BudgetExceeded {
                budget,
                performed,
                partial: basis,
            });
        }
        let s = s_polynomial(&basis[pair.i], &basis[pair.j]);
        let r = reduce(&s, &basis);
        if r.is_zero() {
            continue;
        }
        let r = r.monic();
        if stop_on_unit && r.is_constant() {
            basis.push(r);
            return Ok(basis);
        }
        let new_idx = basis.len();
        basis.push(r);
        for i in 0..new_idx {
            push_pair(&mut pairs, &basis, i, new_idx);
        }
    }
    Ok(basis)
}

fn push_pair(pairs: &mut Vec<Pair>, basis: &[Polynomial], i: usize, j: usize) {
    let mi = *basis[i].leading().unwrap().0;
    let mj = *basis[j].leading().unwrap().0;
    // First Buchberger criterion: coprime leading monomials reduce to zero.
    if mi.gcd(&mj).is_one() {
        return;
    }
    let lcm = mi.lcm(&mj);
    let sugar = lcm.degree();
    pairs.push(Pair { i, j, lcm, sugar });
}

/// Normal strategy: smallest lcm degree first, ties by smaller lcm.
fn select_pair(pairs: &[Pair]) -> Option<usize> {
    pairs
        .iter()
        .enumerate()
        .min_by(|(_, a), (_, b)| a.sugar.cmp(&b.sugar).then(a.lcm.cmp(&b.lcm)))
        .map(|(k, _)| k)
}

/// Second (chain) criterion: drop (i,j) if some k divides lcm(i,j) and the
/// pairs (i,k), (k,j) are no longer pending.
fn skip_by_criteria(pair: &Pair, basis: &[Polynomial], pending: &[Pair]) -> bool {
    for (k, g) in basis.iter().enumerate() {
        if k == pair.i || k == pair.j {
            continue;
        }
        let mk = *g.leading().unwrap().0;
        if mk.divides(&pair.lcm)
            && !pending_contains(pending, pair.i, k)
            && !pending_contains(pending, k, pair.j)
        {
            return true;
        }
    }
    false
}

fn pending_contains(pending: &[Pair], a: usize, b: usize) -> bool {
    let (a, b) = if a < b { (a, b) } else { (b, a) };
    pending.iter().any(|p| {
        let (i, j) = if p.i < p.j { (p.i, p.j) } else { (p.j, p.i) };
        i == a && j == b
    })
}

/// Minimal + tail-reduced basis, deterministic order (by leading monomial).
fn reduce_basis(mut basis: Vec<Polynomial>) -> Vec<Polynomial> {
    basis.retain(|g| !g.is_zero());
    // Minimalize: drop any g whose leading monomial is divisible by another's.
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let mi = *basis[i].leading().unwrap().0;
        for j in 0..basis.len() {
            if i == j || !keep[j] {
                continue;
            }
            let mj = *basis[j].leading().unwrap().0;
            if mj.divides(&mi) && (mi != mj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<Polynomial> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(g, k)| if k { Some(g) } else { None })
        .collect();
    // Tail-reduce each against the others.
    let mut reduced = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter_map(|(j, g)| if j != i { Some(g.clone()) } else { None })
            .collect();
        let r = reduce(&minimal[i], &others);
        if !r.is_zero() {
            reduced.push(r.monic());
        }
    }
    reduced.sort_by(|a, b| a.leading().unwrap().0.cmp(b.leading().unwrap().0));
    reduced
}

/// All S-polynomials of the basis reduce to zero (soundness spot-check).
pub fn all_s_polys_reduce(basis: &[Polynomial]) -> bool {
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_polynomial(&basis[i], &basis[j]);
            if !reduce(&s, basis).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Convenience: a single monomial with coefficient 1.
pub fn monomial_poly(pairs: &[(Var, u16)]) -> Polynomial {
    let mut m = Monomial::one();
    for (v, e) in pairs {
        m = m.mul(&Monomial::var_pow(*v, *e));
    }
    Polynomial::from_term(m, Scalar::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Var;

    fn x() -> Polynomial {
        Polynomial::var(Var::X1)
    }
    fn y() -> Polynomial {
        Polynomial::var(Var::X2)
    }

    #[test]
    fn single_generator_is_its_own_basis() {
        let ideal = Ideal::new(vec![x()]).unwrap();
        let b = groebner_basis(&ideal, 1000).unwrap();
        assert_eq!(b, vec![x()]);
    }

    #[test]
    fn unit_ideal_from_x2_and_xy_plus_1() {
        // {x², xy+1} → 1: x·(xy+1) − y·x² = x, then 1 = (xy+1) − y·x.
        let ideal = Ideal::new(vec![x().pow(2), x().mul(&y()).add(&Polynomial::one())]).unwrap();
        let b = groebner_basis(&ideal, 1000).unwrap();
        assert_eq!(b, vec![Polynomial::one()]);
        assert_eq!(is_unit_ideal(&ideal, 1000).unwrap(), UnitIdeal::Yes);
    }

    #[test]
    fn unit_ideal_quadratic_minus_linear() {
        // {x²+1, x−1} → (x²+1) − (x+1)(x−1) = 2, a unit.
        let ideal = Ideal::new(vec![
            x().pow(2).add(&Polynomial::one()),
            x().sub(&Polynomial::one()),
        ])
        .unwrap();
        assert_eq!(is_unit_ideal(&ideal, 1000).unwrap(), UnitIdeal::Yes);
    }

    #[test]
    fn feasible_system_is_not_unit() {
        // {x−1, y} has the solution x=1, y=0.
        let ideal = Ideal::new(vec![x().sub(&Polynomial::one()), y()]).unwrap();
        match is_unit_ideal(&ideal, 1000).unwrap() {
            UnitIdeal::No(basis) => {
                assert_eq!(basis.len(), 2);
                assert!(all_s_polys_reduce(&basis));
            }
            UnitIdeal::Yes => panic!("feasible system reported unit"),
        }
    }

    #[test]
    fn inconsistent_linear_pair() {
        let ideal = Ideal::new(vec![x(), x().sub(&Polynomial::one())]).unwrap();
        assert_eq!(is_unit_ideal(&ideal, 1000).unwrap(), UnitIdeal::Yes);
    }

    #[test]
    fn reduced_basis_is_fixed_point() {
        let ideal = Ideal::new(vec![
            x().pow(2).add(&y().pow(2)).sub(&Polynomial::one()),
            x().sub(&y()),
        ])
        .unwrap();
        let b = groebner_basis(&ideal, 1000).unwrap();
        let again = groebner_basis(&Ideal::new(b.clone()).unwrap(), 1000).unwrap();
        assert_eq!(b, again);
        assert!(all_s_polys_reduce(&b));
        // every original generator reduces to zero
        for g in ideal.generators() {
            assert!(reduce(g, &b).is_zero());
        }
    }

    #[test]
    fn budget_exceeded_carries_partial_state() {
        let gens = vec![
            x().pow(3).sub(&y().pow(2)),
            x().pow(2).mul(&y()).sub(&Polynomial::one()),
            y().pow(3).add(&x()),
        ];
        let ideal = Ideal::new(gens).unwrap();
        match groebner_basis(&ideal, 1) {
            Err(GrobnerError::BudgetExceeded { partial, .. }) => {
                assert!(!partial.is_empty());
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn rejects_gaussian_coefficients() {
        let g = x().scale(&crate::scalar::Scalar::i());
        assert!(Ideal::new(vec![g]).is_err());
    }
}
