//! si-reduction, SG-bases of ideals of a subalgebra, their construction
//! and verification, and ideal membership.

mod element;
mod ltsyz;

use std::sync::Arc;

pub use element::AlgebraElement;
pub use ltsyz::{leading_tag_representation, lt_syzygy_generators, LtSyzygyModule, LtSyzygyVector};

use crate::diophantine::quotient_memberships;
use crate::error::Error;
use crate::poly::{Monomial, Polynomial, Ring};
use crate::ring::{ideal_membership_witness, Coefficient};
use crate::sagbi::{lc_power, subalgebra_member, PowerCache, Status, SubalgebraPresentation};

/// Generators `G` of an ideal of `A`, over a verified SAGBI basis of `A`.
#[derive(Clone, Debug)]
pub struct IdealPresentation<C: Coefficient> {
    ambient: SubalgebraPresentation<C>,
    gens: Vec<AlgebraElement<C>>,
    sg_verified: bool,
}

impl<C: Coefficient> IdealPresentation<C> {
    /// Checks membership of every generator in `A`; zero generators are
    /// dropped.
    pub fn new(ambient: &SubalgebraPresentation<C>, gens: &[Polynomial<C>]) -> Result<Self, Error> {
        if !ambient.is_verified() {
            return Err(Error::NotVerified);
        }
        let mut out = Vec::new();
        for g in gens {
            if g.is_zero() {
                continue;
            }
            out.push(AlgebraElement::from_value(ambient, g)?);
        }
        Ok(IdealPresentation {
            ambient: ambient.clone(),
            gens: out,
            sg_verified: false,
        })
    }

    pub fn from_elements(
        ambient: &SubalgebraPresentation<C>,
        gens: Vec<AlgebraElement<C>>,
    ) -> Result<Self, Error> {
        if !ambient.is_verified() {
            return Err(Error::NotVerified);
        }
        Ok(IdealPresentation {
            ambient: ambient.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            sg_verified: false,
        })
    }

    pub fn ambient(&self) -> &SubalgebraPresentation<C> {
        &self.ambient
    }

    pub fn generators(&self) -> &[AlgebraElement<C>] {
        &self.gens
    }

    pub fn values(&self) -> Vec<Polynomial<C>> {
        self.gens.iter().map(|g| g.value().clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_verified(&self) -> bool {
        self.sg_verified
    }

    /// Runs the verification criterion and records the outcome.
    pub fn verify(&mut self) -> Result<SgVerdict<C>, Error> {
        let verdict = sg_verify(self)?;
        self.sg_verified = verdict.is_verified();
        Ok(verdict)
    }

    fn ring(&self) -> &Arc<Ring> {
        self.ambient.ring()
    }
}

/// One elimination: `coeff * F^eta * g_index`, with leading power
/// product `monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SIStep<C> {
    pub coeff: C,
    pub eta: Vec<u32>,
    pub index: usize,
    pub monomial: Monomial,
}

/// `input - final = Σ coeff * F^eta * g_index` over the steps.
#[derive(Clone, Debug)]
pub struct SIReduction<C: Coefficient> {
    pub input: Polynomial<C>,
    pub steps: Vec<SIStep<C>>,
    pub final_reductum: Polynomial<C>,
}

impl<C: Coefficient> SIReduction<C> {
    /// Steps collected per generator, as `(a_i, i)` with `a_i ∈ A`.
    pub fn parts(&self, ideal: &IdealPresentation<C>) -> Vec<(AlgebraElement<C>, usize)> {
        let tags = ideal.ambient.tag_ring();
        let mut out: Vec<(usize, Vec<(C, Monomial)>)> = Vec::new();
        for s in &self.steps {
            let t = (s.coeff.clone(), Monomial::new(s.eta.clone()));
            match out.iter_mut().find(|(i, _)| *i == s.index) {
                Some((_, ts)) => ts.push(t),
                None => out.push((s.index, vec![t])),
            }
        }
        out.sort_by_key(|(i, _)| *i);
        out.into_iter()
            .map(|(i, ts)| {
                let tag = Polynomial::from_terms(&tags, ts);
                (AlgebraElement::from_tag(&ideal.ambient, tag), i)
            })
            .filter(|(a, _)| !a.is_zero())
            .collect()
    }

    pub fn replays(&self, ideal: &IdealPresentation<C>) -> bool {
        let mut cache = PowerCache::new(&ideal.ambient);
        let mut sum = self.final_reductum.clone();
        for s in &self.steps {
            let p = &cache.get(&s.eta) * ideal.gens[s.index].value();
            if p.lp() != Some(&s.monomial) {
                return false;
            }
            sum = sum.add_scaled(&p, &s.coeff);
        }
        sum == self.input
    }
}

/// Reduces `h` by `G` to a final si-reductum.
///
/// Terms are visited from the top. For a term `c X^α` every pair
/// `(g, η)` with `X^α = lp(g) lp(F^η)` is collected, and the term is
/// eliminated when `c` lies in the ideal of `R` generated by the
/// `lc(g) lc(F^η)`.
pub fn si_reduce<C: Coefficient>(
    h: &Polynomial<C>,
    ideal: &IdealPresentation<C>,
) -> Result<SIReduction<C>, Error> {
    let f = &ideal.ambient;
    if !f.is_verified() {
        return Err(Error::NotVerified);
    }
    let ring = ideal.ring();
    let order = ring.order();
    let leading = f.leading_monomials();
    let f_lcs: Vec<C> = f.generators().iter().map(Polynomial::lc).collect();
    let g_leads: Vec<(Monomial, C)> = ideal
        .gens
        .iter()
        .map(|g| (g.value().lp().unwrap().clone(), g.value().lc()))
        .collect();
    let mut cache = PowerCache::new(f);
    let mut work = h.reorder(ring);
    let mut steps = Vec::new();
    let mut bound: Option<Monomial> = None;
    loop {
        let next = work
            .terms()
            .iter()
            .find(|t| bound.as_ref().is_none_or(|b| order.cmp(&t.mono, b).is_lt()))
            .cloned();
        let Some(t) = next else { break };
        bound = Some(t.mono.clone());
        let mut candidates: Vec<(usize, Vec<u32>)> = Vec::new();
        for (i, (lp_g, _)) in g_leads.iter().enumerate() {
            for eta in quotient_memberships(&t.mono, lp_g, &leading)? {
                candidates.push((i, eta));
            }
        }
        if candidates.is_empty() {
            continue;
        }
        candidates.sort_by_key(|(i, eta)| (eta.iter().sum::<u32>(), *i));
        let products: Vec<C> = candidates
            .iter()
            .map(|(i, eta)| lc_power(&f_lcs, eta) * g_leads[*i].1.clone())
            .collect();
        let Some(witness) = ideal_membership_witness(&t.coeff, &products) else {
            continue;
        };
        for (r, (i, eta)) in witness.into_iter().zip(candidates) {
            if r.is_zero() {
                continue;
            }
            let p = &cache.get(&eta) * ideal.gens[i].value();
            work = work.add_scaled(&p, &-r.clone());
            steps.push(SIStep {
                coeff: r,
                eta,
                index: i,
                monomial: t.mono.clone(),
            });
        }
    }
    Ok(SIReduction {
        input: h.reorder(ring),
        steps,
        final_reductum: work,
    })
}

/// `element = Σ a_i * g_i` with `max lp(a_i g_i) = lp(element)`.
#[derive(Clone, Debug)]
pub struct SGRepresentation<C: Coefficient> {
    pub element: Polynomial<C>,
    pub parts: Vec<(AlgebraElement<C>, usize)>,
}

impl<C: Coefficient> SGRepresentation<C> {
    pub fn replays(&self, ideal: &IdealPresentation<C>) -> bool {
        let sum = self
            .parts
            .iter()
            .fold(Polynomial::zero(ideal.ring()), |acc, (a, i)| {
                acc + a.value() * ideal.gens[*i].value()
            });
        sum == self.element
    }

    /// `max_i lp(a_i g_i) = lp(element)`; vacuous for the zero element
    /// with no parts.
    pub fn satisfies_height_law(&self, ideal: &IdealPresentation<C>) -> bool {
        let order = ideal.ring().order();
        let height = self
            .parts
            .iter()
            .filter_map(|(a, i)| (a.value() * ideal.gens[*i].value()).lp().cloned())
            .max_by(|a, b| order.cmp(a, b));
        height.as_ref() == self.element.lp()
    }

    /// Coefficients as a dense row over the generators.
    pub fn row(&self, ideal: &IdealPresentation<C>) -> Vec<AlgebraElement<C>> {
        let mut row = vec![AlgebraElement::zero(&ideal.ambient); ideal.len()];
        for (a, i) in &self.parts {
            row[*i] = row[*i].add(a);
        }
        row
    }
}

/// An SG-representation of `a` when it lies in the ideal.
pub fn ideal_member<C: Coefficient>(
    a: &Polynomial<C>,
    ideal: &IdealPresentation<C>,
) -> Result<Option<SGRepresentation<C>>, Error> {
    if !ideal.sg_verified {
        return Err(Error::IdealNotVerified);
    }
    if subalgebra_member(a, &ideal.ambient)?.is_none() {
        return Err(Error::NotInSubalgebra(a.to_string()));
    }
    let red = si_reduce(a, ideal)?;
    if !red.final_reductum.is_zero() {
        return Ok(None);
    }
    Ok(Some(SGRepresentation {
        element: red.input.clone(),
        parts: red.parts(ideal),
    }))
}

#[derive(Clone, Debug)]
pub enum SgVerdict<C: Coefficient> {
    Verified,
    /// An lt-syzygy whose evaluation does not si-reduce to zero.
    Failing {
        vector: LtSyzygyVector<C>,
        reductum: Polynomial<C>,
    },
}

impl<C: Coefficient> SgVerdict<C> {
    pub fn is_verified(&self) -> bool {
        matches!(self, SgVerdict::Verified)
    }
}

/// `Σ q_i * g_i`.
pub fn evaluate_vector<C: Coefficient>(
    coords: &[AlgebraElement<C>],
    ideal: &IdealPresentation<C>,
) -> AlgebraElement<C> {
    coords
        .iter()
        .zip(&ideal.gens)
        .fold(AlgebraElement::zero(&ideal.ambient), |acc, (q, g)| {
            acc.add(&q.mul(g))
        })
}

/// Checks that every lt-generating vector evaluates to something that
/// si-reduces to zero.
pub fn sg_verify<C: Coefficient>(ideal: &IdealPresentation<C>) -> Result<SgVerdict<C>, Error> {
    for q in lt_syzygy_generators(ideal)? {
        let value = evaluate_vector(&q.coords, ideal);
        let red = si_reduce(value.value(), ideal)?;
        if !red.final_reductum.is_zero() {
            return Ok(SgVerdict::Failing {
                vector: q,
                reductum: red.final_reductum,
            });
        }
    }
    Ok(SgVerdict::Verified)
}

/// What one pass of the construction saw.
#[derive(Clone, Debug)]
pub struct SgPass<C: Coefficient> {
    pub lt_syzygies: Vec<LtSyzygyVector<C>>,
    pub evaluations: Vec<Polynomial<C>>,
    pub reducta: Vec<Polynomial<C>>,
    pub adjoined: Vec<Polynomial<C>>,
}

#[derive(Clone, Debug)]
pub struct SGResult<C: Coefficient> {
    pub status: Status,
    pub basis: IdealPresentation<C>,
    pub passes: usize,
    /// `basis[k] = Σ_j u_trace[k][j] * inputs[j]`.
    pub u_trace: Vec<Vec<AlgebraElement<C>>>,
    pub inputs: Vec<Polynomial<C>>,
    pub trail: Vec<SgPass<C>>,
}

impl<C: Coefficient> SGResult<C> {
    pub fn u_trace_replays(&self) -> bool {
        self.basis.gens.iter().zip(&self.u_trace).all(|(g, row)| {
            let sum = row
                .iter()
                .zip(&self.inputs)
                .fold(Polynomial::zero(self.basis.ring()), |acc, (u, h)| {
                    acc + u.value() * h
                });
            &sum == g.value()
        })
    }
}

/// Adjoins nonzero final si-reducta of evaluated lt-syzygies until a pass
/// adds nothing or `max_passes` passes have run.
pub fn sg_construct<C: Coefficient>(
    g0: &[Polynomial<C>],
    ambient: &SubalgebraPresentation<C>,
    max_passes: usize,
) -> Result<SGResult<C>, Error> {
    let mut elems = Vec::new();
    let mut u_trace = Vec::new();
    for (k, g) in g0.iter().enumerate() {
        let a = AlgebraElement::from_value(ambient, g)?;
        if a.is_zero() {
            continue;
        }
        let mut row = vec![AlgebraElement::zero(ambient); g0.len()];
        row[k] = AlgebraElement::one(ambient);
        elems.push(a);
        u_trace.push(row);
    }
    let mut basis = IdealPresentation::from_elements(ambient, elems)?;
    let mut trail = Vec::new();
    for pass in 1..=max_passes.max(1) {
        let q = lt_syzygy_generators(&basis)?;
        let mut record = SgPass {
            lt_syzygies: Vec::new(),
            evaluations: Vec::new(),
            reducta: Vec::new(),
            adjoined: Vec::new(),
        };
        let mut new_elems = Vec::new();
        for v in q {
            let value = evaluate_vector(&v.coords, &basis);
            let red = si_reduce(value.value(), &basis)?;
            record.evaluations.push(value.value().clone());
            record.reducta.push(red.final_reductum.clone());
            if !red.final_reductum.is_zero() {
                let u = red.final_reductum.lc().normalizing_unit();
                // final = Σ_i (q_i - a_i) g_i
                let mut coeffs = v.coords.clone();
                let mut elem = value.clone();
                for (a, i) in red.parts(&basis) {
                    elem = elem.sub(&a.mul(&basis.gens[i]));
                    coeffs[i] = coeffs[i].sub(&a);
                }
                let elem = elem.scale(&u);
                debug_assert_eq!(elem.value(), &red.final_reductum.scale(&u));
                if !new_elems
                    .iter()
                    .any(|(e, _): &(AlgebraElement<C>, _)| e.value() == elem.value())
                {
                    let mut row = vec![AlgebraElement::zero(ambient); g0.len()];
                    for (c, urow) in coeffs.iter().zip(&u_trace) {
                        if c.is_zero() {
                            continue;
                        }
                        for (slot, x) in row.iter_mut().zip(urow) {
                            *slot = slot.add(&c.mul(x));
                        }
                    }
                    let row = row.iter().map(|x| x.scale(&u)).collect();
                    new_elems.push((elem, row));
                }
            }
            record.lt_syzygies.push(v);
        }
        let done = new_elems.is_empty();
        for (e, row) in new_elems {
            record.adjoined.push(e.value().clone());
            basis.gens.push(e);
            u_trace.push(row);
        }
        trail.push(record);
        if done {
            basis.sg_verified = true;
            return Ok(SGResult {
                status: Status::Completed,
                basis,
                passes: pass,
                u_trace,
                inputs: g0.to_vec(),
                trail,
            });
        }
    }
    Ok(SGResult {
        status: Status::IterationCapReached,
        passes: trail.len(),
        basis,
        u_trace,
        inputs: g0.to_vec(),
        trail,
    })
}

#[cfg(test)]
mod tests;
