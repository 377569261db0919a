//! Buchberger completion for submodules of `R[Y]^k`, `R = Z` or `Q`.
//!
//! Over `Z` every pair contributes an S-polynomial (coefficient lcm) and,
//! when neither leading coefficient divides the other, a G-polynomial (the
//! Bézout combination reaching their gcd). Reduction is by divisibility of
//! whole leading terms, coefficient included, so a completed basis is a
//! strong Gröbner basis. Every basis element carries its cofactors over
//! the inputs.

use std::collections::HashSet;
use std::sync::Arc;

use super::vector::{cmp_pos, MPoly, MTerm};
use crate::poly::{Monomial, Polynomial, Ring, Term};
use crate::ring::Coefficient;

pub(crate) struct Completed<C: Coefficient> {
    pub elems: Vec<MPoly<C>>,
    /// `elems[i] = Σ_k cofactors[i][k] * inputs[k]`.
    pub cofactors: Vec<Vec<Polynomial<C>>>,
}

pub(crate) struct Reduction<C: Coefficient> {
    pub remainder: MPoly<C>,
    /// `input - remainder = Σ_j quotients[j] * basis[j]`.
    pub quotients: Vec<Polynomial<C>>,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    comp: usize,
    seq: usize,
}

/// Divides the term `(c, m)` by `lead`; `None` if it does not divide.
fn term_quotient<C: Coefficient>(
    c: &C,
    m: &Monomial,
    comp: usize,
    lead: &MTerm<C>,
) -> Option<(C, Monomial)> {
    if lead.comp != comp || !lead.coeff.divides(c) {
        return None;
    }
    let q = m.checked_div(&lead.mono)?;
    Some((c.div_exact(&lead.coeff), q))
}

/// Full reduction of `p` by `basis`, always dividing by the first basis
/// element whose leading term divides the current term.
pub(crate) fn reduce<C: Coefficient>(
    ring: &Arc<Ring>,
    basis: &[MPoly<C>],
    p: &MPoly<C>,
) -> Reduction<C> {
    let order = ring.order();
    let mut quotients: Vec<Vec<Term<C>>> = vec![Vec::new(); basis.len()];
    let mut remainder = Vec::new();
    let mut work = p.clone();
    let mut start = 0;
    while start < work.terms.len() {
        let t = &work.terms[start];
        let hit = basis.iter().enumerate().find_map(|(j, g)| {
            g.lead()
                .and_then(|lead| term_quotient(&t.coeff, &t.mono, t.comp, lead))
                .map(|q| (j, q))
        });
        match hit {
            Some((j, (qc, qm))) => {
                work = work.add_term_multiple(start, &basis[j], &-qc.clone(), &qm, order);
                start = 0;
                quotients[j].push(Term {
                    coeff: qc,
                    mono: qm,
                });
            }
            None => {
                remainder.push(t.clone());
                start += 1;
            }
        }
    }
    Reduction {
        remainder: MPoly { terms: remainder },
        quotients: quotients
            .into_iter()
            .map(|terms| Polynomial::from_terms(ring, terms.into_iter().map(|t| (t.coeff, t.mono))))
            .collect(),
    }
}

fn unit_row<C: Coefficient>(ring: &Arc<Ring>, n: usize, k: usize) -> Vec<Polynomial<C>> {
    let mut row = vec![Polynomial::zero(ring); n];
    row[k] = Polynomial::one(ring);
    row
}

fn row_combine<C: Coefficient>(
    a: &[Polynomial<C>],
    ca: &C,
    ma: &Monomial,
    b: &[Polynomial<C>],
    cb: &C,
    mb: &Monomial,
) -> Vec<Polynomial<C>> {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.mul_term(ca, ma) + y.mul_term(cb, mb))
        .collect()
}

struct State<'a, C: Coefficient> {
    ring: &'a Arc<Ring>,
    elems: Vec<MPoly<C>>,
    cofactors: Vec<Vec<Polynomial<C>>>,
    pairs: Vec<Pair>,
    pending: HashSet<(usize, usize)>,
    seq: usize,
}

impl<C: Coefficient> State<'_, C> {
    fn insert(&mut self, poly: MPoly<C>, cof: Vec<Polynomial<C>>) {
        let lead = poly.lead().expect("nonzero element");
        let u = lead.coeff.normalizing_unit();
        let (poly, cof) = if u.is_one() {
            (poly, cof)
        } else {
            (poly.scale(&u), cof.iter().map(|c| c.scale(&u)).collect())
        };
        let new = self.elems.len();
        let (comp, mono) = {
            let l = poly.lead().unwrap();
            (l.comp, l.mono.clone())
        };
        for (i, e) in self.elems.iter().enumerate() {
            let l = e.lead().unwrap();
            if l.comp == comp {
                self.pending.insert((i, new));
                self.pairs.push(Pair {
                    i,
                    j: new,
                    lcm: l.mono.lcm(&mono),
                    comp,
                    seq: self.seq,
                });
                self.seq += 1;
            }
        }
        self.elems.push(poly);
        self.cofactors.push(cof);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.ring.order();
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                cmp_pos(order, a.comp, &a.lcm, b.comp, &b.lcm).then_with(|| a.seq.cmp(&b.seq))
            })
            .map(|(k, _)| k)?;
        let pair = self.pairs.swap_remove(best);
        self.pending.remove(&(pair.i, pair.j));
        Some(pair)
    }

    /// Some other element `k` has `lt(k)` dividing `c * lcm` and neither
    /// `(i, k)` nor `(j, k)` is still waiting.
    fn chain_criterion(&self, pair: &Pair, c: &C) -> bool {
        self.elems.iter().enumerate().any(|(k, e)| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let l = e.lead().unwrap();
            l.comp == pair.comp
                && l.mono.divides(&pair.lcm)
                && l.coeff.divides(c)
                && !self.pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !self.pending.contains(&(pair.j.min(k), pair.j.max(k)))
        })
    }

    /// Some element's leading term divides `c * lcm`.
    fn lead_divisible(&self, comp: usize, mono: &Monomial, c: &C) -> bool {
        self.elems.iter().any(|e| {
            let l = e.lead().unwrap();
            l.comp == comp && l.mono.divides(mono) && l.coeff.divides(c)
        })
    }

    /// Reduces `poly` and inserts the remainder if it is nonzero.
    fn reduce_and_insert(&mut self, poly: MPoly<C>, cof: Vec<Polynomial<C>>) {
        if poly.is_zero() {
            return;
        }
        let red = reduce(self.ring, &self.elems, &poly);
        if red.remainder.is_zero() {
            return;
        }
        let mut cof = cof;
        for (j, q) in red.quotients.iter().enumerate() {
            if q.is_zero() {
                continue;
            }
            for (slot, c) in cof.iter_mut().zip(&self.cofactors[j]) {
                if !c.is_zero() {
                    *slot = &*slot - &(q * c);
                }
            }
        }
        self.insert(red.remainder, cof);
    }

    fn process(&mut self, pair: Pair) {
        let (a, b) = (&self.elems[pair.i], &self.elems[pair.j]);
        let (la, lb) = (a.lead().unwrap(), b.lead().unwrap());
        let ma = pair.lcm.checked_div(&la.mono).unwrap();
        let mb = pair.lcm.checked_div(&lb.mono).unwrap();
        let order = self.ring.order();
        let (ca, cb) = (la.coeff.clone(), lb.coeff.clone());
        let (g, s, t) = C::xgcd(&ca, &cb);
        let l = C::lcm(&ca, &cb);
        // lt(b) a - lt(a) b = tail(a) b - tail(b) a needs scalar elements.
        let scalar = |p: &MPoly<C>| p.terms.iter().all(|t| t.comp == pair.comp);
        let coprime = g.is_unit() && la.mono.is_coprime(&lb.mono) && scalar(a) && scalar(b);
        let s_part = if coprime || self.chain_criterion(&pair, &l) {
            None
        } else {
            let sa = l.div_exact(&ca);
            let sb = -l.div_exact(&cb);
            let s_poly = MPoly::combine(a, &sa, &ma, b, &sb, &mb, order);
            let s_cof = row_combine(
                &self.cofactors[pair.i],
                &sa,
                &ma,
                &self.cofactors[pair.j],
                &sb,
                &mb,
            );
            Some((s_poly, s_cof))
        };
        let g_part = if !C::DOMAIN.is_field()
            && !ca.divides(&cb)
            && !cb.divides(&ca)
            && !self.lead_divisible(pair.comp, &pair.lcm, &g)
        {
            let g_poly = MPoly::combine(a, &s, &ma, b, &t, &mb, order);
            let g_cof = row_combine(
                &self.cofactors[pair.i],
                &s,
                &ma,
                &self.cofactors[pair.j],
                &t,
                &mb,
            );
            Some((g_poly, g_cof))
        } else {
            None
        };
        if let Some((g_poly, g_cof)) = g_part {
            self.reduce_and_insert(g_poly, g_cof);
        }
        if let Some((s_poly, s_cof)) = s_part {
            self.reduce_and_insert(s_poly, s_cof);
        }
    }
}

/// Completes `inputs` to a (strong) Gröbner basis and drops elements whose
/// leading term is divisible by another's. Cofactors are kept over the
/// first `track` inputs only; the rest count as zero.
pub(crate) fn complete<C: Coefficient>(
    ring: &Arc<Ring>,
    inputs: &[MPoly<C>],
    track: usize,
) -> Completed<C> {
    let n = track.min(inputs.len());
    let mut st = State {
        ring,
        elems: Vec::new(),
        cofactors: Vec::new(),
        pairs: Vec::new(),
        pending: HashSet::new(),
        seq: 0,
    };
    for (k, p) in inputs.iter().enumerate() {
        if !p.is_zero() {
            let row = if k < n {
                unit_row(ring, n, k)
            } else {
                vec![Polynomial::zero(ring); n]
            };
            st.insert(p.clone(), row);
        }
    }
    while let Some(pair) = st.next_pair() {
        st.process(pair);
    }
    minimalize(st.elems, st.cofactors)
}

fn minimalize<C: Coefficient>(
    elems: Vec<MPoly<C>>,
    cofactors: Vec<Vec<Polynomial<C>>>,
) -> Completed<C> {
    let leads: Vec<&MTerm<C>> = elems.iter().map(|e| e.lead().unwrap()).collect();
    let keep: Vec<bool> = (0..elems.len())
        .map(|i| {
            !(0..elems.len()).any(|j| {
                if i == j {
                    return false;
                }
                let (li, lj) = (leads[i], leads[j]);
                let divides =
                    lj.comp == li.comp && lj.mono.divides(&li.mono) && lj.coeff.divides(&li.coeff);
                let equal = divides && lj.mono == li.mono && li.coeff.divides(&lj.coeff);
                divides && (!equal || j < i)
            })
        })
        .collect();
    let mut out = Completed {
        elems: Vec::new(),
        cofactors: Vec::new(),
    };
    for ((e, c), k) in elems.into_iter().zip(cofactors).zip(keep) {
        if k {
            out.elems.push(e);
            out.cofactors.push(c);
        }
    }
    out
}
