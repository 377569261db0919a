//! Heights of representations and the grading of the tag ring by leading
//! power products of the generators.

use std::cmp::Ordering;

use super::{Monomial, Polynomial, Term};
use crate::error::Error;
use crate::ring::Coefficient;

/// Height of `Σ c_i * p_i`: the largest leading power product among the
/// nonzero summands, with the indices attaining it.
pub fn representation_height<C: Coefficient>(
    parts: &[(C, Polynomial<C>)],
) -> Result<(Monomial, Vec<usize>), Error> {
    let mut best: Option<(Monomial, Vec<usize>)> = None;
    for (i, (c, p)) in parts.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let Some(lp) = p.lp() else { continue };
        let order = p.ring().order();
        match &mut best {
            None => best = Some((lp.clone(), vec![i])),
            Some((m, idx)) => match order.cmp(lp, m) {
                Ordering::Greater => best = Some((lp.clone(), vec![i])),
                Ordering::Equal => idx.push(i),
                Ordering::Less => {}
            },
        }
    }
    best.ok_or(Error::UndefinedHeight)
}

/// Degree of the tag monomial `Y^a`: `Σ a_i * lp(f_i)`.
pub fn tag_monomial_degree(a: &Monomial, leading: &[Monomial]) -> Monomial {
    let n = leading.first().map_or(0, Monomial::arity);
    let mut e = vec![0u32; n];
    for (&k, lp) in a.exponents().iter().zip(leading) {
        if k > 0 {
            for (slot, x) in e.iter_mut().zip(lp.exponents()) {
                *slot += k * x;
            }
        }
    }
    Monomial::new(e)
}

fn leading_monomials<C: Coefficient>(
    p: &Polynomial<C>,
    gens: &[Polynomial<C>],
) -> Result<Vec<Monomial>, Error> {
    if p.ring().nvars() != gens.len() {
        return Err(Error::ArityMismatch {
            expected: gens.len(),
            found: p.ring().nvars(),
        });
    }
    gens.iter()
        .map(|f| f.lp().cloned().ok_or(Error::ZeroGenerator))
        .collect()
}

/// Degree of a tag polynomial under the grading induced by `gens`; `None`
/// for the zero polynomial.
pub fn tx_degree<C: Coefficient>(
    p: &Polynomial<C>,
    gens: &[Polynomial<C>],
) -> Result<Option<Monomial>, Error> {
    let leading = leading_monomials(p, gens)?;
    let Some(order) = gens.first().map(|f| f.ring().order()) else {
        return Ok(p.lp().map(|_| Monomial::one(0)));
    };
    Ok(p.terms()
        .iter()
        .map(|t| tag_monomial_degree(&t.mono, &leading))
        .max_by(|a, b| order.cmp(a, b)))
}

/// Splits a tag polynomial into its homogeneous components, largest degree
/// first. The components sum to the input.
pub fn tx_homogeneous_components<C: Coefficient>(
    p: &Polynomial<C>,
    gens: &[Polynomial<C>],
) -> Result<Vec<(Monomial, Polynomial<C>)>, Error> {
    let leading = leading_monomials(p, gens)?;
    let mut groups: Vec<(Monomial, Vec<Term<C>>)> = Vec::new();
    for t in p.terms() {
        let d = tag_monomial_degree(&t.mono, &leading);
        match groups.iter_mut().find(|(g, _)| *g == d) {
            Some((_, terms)) => terms.push(t.clone()),
            None => groups.push((d, vec![t.clone()])),
        }
    }
    if let Some(order) = gens.first().map(|f| f.ring().order()) {
        groups.sort_by(|a, b| order.cmp(&b.0, &a.0));
    }
    Ok(groups
        .into_iter()
        .map(|(d, terms)| (d, Polynomial::from_sorted(p.ring(), terms)))
        .collect())
}
