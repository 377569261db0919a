//! Module elements of `R[Y]^k` as sorted term lists.
//!
//! Terms are ordered position over term: a smaller component index is
//! larger, ties broken by the ring's term order. An ideal is the case
//! `k = 1`.

use std::cmp::Ordering;
use std::sync::Arc;

use crate::poly::{Monomial, Polynomial, Ring, Term, TermOrder};
use crate::ring::Coefficient;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MTerm<C> {
    pub coeff: C,
    pub comp: usize,
    pub mono: Monomial,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct MPoly<C> {
    pub terms: Vec<MTerm<C>>,
}

#[inline]
pub(crate) fn cmp_pos(
    order: &TermOrder,
    ac: usize,
    am: &Monomial,
    bc: usize,
    bm: &Monomial,
) -> Ordering {
    bc.cmp(&ac).then_with(|| order.cmp(am, bm))
}

impl<C: Coefficient> MPoly<C> {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&MTerm<C>> {
        self.terms.first()
    }

    pub fn from_vector(coords: &[Polynomial<C>]) -> Self {
        let mut terms = Vec::new();
        for (comp, p) in coords.iter().enumerate() {
            terms.extend(p.terms().iter().map(|t| MTerm {
                coeff: t.coeff.clone(),
                comp,
                mono: t.mono.clone(),
            }));
        }
        MPoly { terms }
    }

    pub fn from_scalar(p: &Polynomial<C>, comp: usize) -> Self {
        MPoly {
            terms: p
                .terms()
                .iter()
                .map(|t| MTerm {
                    coeff: t.coeff.clone(),
                    comp,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn to_vector(&self, ring: &Arc<Ring>, ncomp: usize) -> Vec<Polynomial<C>> {
        let mut parts: Vec<Vec<Term<C>>> = vec![Vec::new(); ncomp];
        for t in &self.terms {
            parts[t.comp].push(Term {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
            });
        }
        parts
            .into_iter()
            .map(|terms| Polynomial::from_sorted(ring, terms))
            .collect()
    }

    pub fn scale(&self, c: &C) -> Self {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    coeff: t.coeff.clone() * c.clone(),
                    comp: t.comp,
                    mono: t.mono.clone(),
                })
                .filter(|t| !t.coeff.is_zero())
                .collect(),
        }
    }

    /// `self[start..] + c * m * other`.
    pub fn add_term_multiple(
        &self,
        start: usize,
        other: &Self,
        c: &C,
        m: &Monomial,
        order: &TermOrder,
    ) -> Self {
        let a = &self.terms[start..];
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let scaled = |t: &MTerm<C>| MTerm {
            coeff: t.coeff.clone() * c.clone(),
            comp: t.comp,
            mono: t.mono.mul(m),
        };
        while i < a.len() && j < b.len() {
            let bm = b[j].mono.mul(m);
            match cmp_pos(order, a[i].comp, &a[i].mono, b[j].comp, &bm) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let t = scaled(&b[j]);
                    if !t.coeff.is_zero() {
                        out.push(t);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = a[i].coeff.clone() + b[j].coeff.clone() * c.clone();
                    if !coeff.is_zero() {
                        out.push(MTerm {
                            coeff,
                            comp: a[i].comp,
                            mono: bm,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(scaled).filter(|t| !t.coeff.is_zero()));
        MPoly { terms: out }
    }

    /// `ca * ma * a + cb * mb * b`.
    pub fn combine(
        a: &Self,
        ca: &C,
        ma: &Monomial,
        b: &Self,
        cb: &C,
        mb: &Monomial,
        order: &TermOrder,
    ) -> Self {
        let first = MPoly {
            terms: a
                .terms
                .iter()
                .map(|t| MTerm {
                    coeff: t.coeff.clone() * ca.clone(),
                    comp: t.comp,
                    mono: t.mono.mul(ma),
                })
                .filter(|t| !t.coeff.is_zero())
                .collect(),
        };
        first.add_term_multiple(0, b, cb, mb, order)
    }
}
