//! s-reduction, SAGBI basis construction and verification, subalgebra
//! membership.

use std::collections::HashMap;
use std::sync::Arc;

use crate::diophantine::nonneg_solutions;
use crate::error::Error;
use crate::grobner::evaluation_kernel;
use crate::poly::{tx_homogeneous_components, Monomial, Polynomial, Ring};
use crate::ring::{ideal_membership_witness, Coefficient};

/// Generators `F` of a subalgebra `A = R[F]`.
///
/// Constants and zero are removed at construction and kept in
/// `constant_subring_note`; `R ⊆ A` holds regardless, through the empty
/// power product.
#[derive(Clone, Debug)]
pub struct SubalgebraPresentation<C: Coefficient> {
    ring: Arc<Ring>,
    gens: Vec<Polynomial<C>>,
    sagbi_verified: bool,
    constant_subring_note: Vec<Polynomial<C>>,
}

impl<C: Coefficient> SubalgebraPresentation<C> {
    pub fn new(ring: &Arc<Ring>, gens: &[Polynomial<C>]) -> Result<Self, Error> {
        let mut out = SubalgebraPresentation {
            ring: ring.clone(),
            gens: Vec::new(),
            sagbi_verified: false,
            constant_subring_note: Vec::new(),
        };
        for g in gens {
            if **g.ring() != **ring {
                return Err(Error::RingMismatch);
            }
            out.push(g.reorder(ring));
        }
        Ok(out)
    }

    /// Adds `g` unless it is constant or already present. Returns whether
    /// it was added.
    fn push(&mut self, g: Polynomial<C>) -> bool {
        if g.is_constant() || g.is_zero() {
            if !g.is_zero() && !self.constant_subring_note.contains(&g) {
                self.constant_subring_note.push(g);
            }
            return false;
        }
        if self.gens.contains(&g) {
            return false;
        }
        self.gens.push(g);
        self.sagbi_verified = false;
        true
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_verified(&self) -> bool {
        self.sagbi_verified
    }

    pub fn constant_subring_note(&self) -> &[Polynomial<C>] {
        &self.constant_subring_note
    }

    /// Tag ring `R[y_1, …, y_|F|]`.
    pub fn tag_ring(&self) -> Arc<Ring> {
        Ring::tags(self.gens.len())
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.gens.iter().map(|f| f.lp().unwrap().clone()).collect()
    }

    pub fn leading_terms(&self) -> Vec<Polynomial<C>> {
        self.gens.iter().map(Polynomial::lt).collect()
    }

    /// Runs the verification criterion and records the outcome.
    pub fn verify(&mut self) -> Result<SagbiVerdict<C>, Error> {
        let verdict = sagbi_verify(self)?;
        self.sagbi_verified = verdict.is_verified();
        Ok(verdict)
    }

    /// `F^e`.
    pub fn power_product(&self, e: &[u32]) -> Polynomial<C> {
        PowerCache::new(self).get(e)
    }

    /// `P(F)` for a tag polynomial `P`.
    pub fn evaluate(&self, p: &Polynomial<C>) -> Polynomial<C> {
        p.evaluate(&self.gens, &self.ring)
    }
}

/// Memoized powers of the generators.
pub(crate) struct PowerCache<'a, C: Coefficient> {
    gens: &'a [Polynomial<C>],
    ring: &'a Arc<Ring>,
    powers: HashMap<(usize, u32), Polynomial<C>>,
}

impl<'a, C: Coefficient> PowerCache<'a, C> {
    pub(crate) fn new(f: &'a SubalgebraPresentation<C>) -> Self {
        PowerCache {
            gens: &f.gens,
            ring: &f.ring,
            powers: HashMap::new(),
        }
    }

    fn power(&mut self, i: usize, k: u32) -> Polynomial<C> {
        if let Some(p) = self.powers.get(&(i, k)) {
            return p.clone();
        }
        let p = if k == 1 {
            self.gens[i].clone()
        } else {
            &self.power(i, k - 1) * &self.gens[i]
        };
        self.powers.insert((i, k), p.clone());
        p
    }

    pub(crate) fn get(&mut self, e: &[u32]) -> Polynomial<C> {
        let mut acc = Polynomial::one(self.ring);
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                acc = &acc * &self.power(i, k);
            }
        }
        acc
    }
}

/// One elimination: `coeff * F^exponents`, whose leading power product is
/// `monomial`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SStep<C> {
    pub coeff: C,
    pub exponents: Vec<u32>,
    pub monomial: Monomial,
}

/// `input - final = Σ coeff * F^exponents` over the steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SReductionCertificate<C: Coefficient> {
    pub input: Polynomial<C>,
    pub steps: Vec<SStep<C>>,
    pub final_reductum: Polynomial<C>,
}

impl<C: Coefficient> SReductionCertificate<C> {
    /// The subtracted part as a tag polynomial `Σ coeff * Y^exponents`.
    pub fn tag_polynomial(&self, tags: &Arc<Ring>) -> Polynomial<C> {
        Polynomial::from_terms(
            tags,
            self.steps
                .iter()
                .map(|s| (s.coeff.clone(), Monomial::new(s.exponents.clone()))),
        )
    }

    /// Checks the identity by expansion.
    pub fn replays(&self, f: &SubalgebraPresentation<C>) -> bool {
        let mut cache = PowerCache::new(f);
        let mut sum = self.final_reductum.clone();
        for s in &self.steps {
            let p = cache.get(&s.exponents);
            if p.lp() != Some(&s.monomial) {
                return false;
            }
            sum = sum.add_scaled(&p, &s.coeff);
        }
        sum == self.input
    }

    /// Largest eliminated power product; `None` without steps.
    pub fn height(&self, f: &SubalgebraPresentation<C>) -> Option<Monomial> {
        let order = f.ring.order();
        self.steps
            .iter()
            .map(|s| s.monomial.clone())
            .max_by(|a, b| order.cmp(a, b))
    }
}

/// Reduces `g` by `F` to a final s-reductum.
///
/// Terms are visited from the top. A term `c X^β` is eliminated when `X^β`
/// is a product of leading power products `lp(F^ε)` and `c` lies in the
/// ideal of `R` generated by the `lc(F^ε)` over all such `ε`; the empty
/// product handles constants.
pub fn s_reduce<C: Coefficient>(
    g: &Polynomial<C>,
    f: &SubalgebraPresentation<C>,
) -> SReductionCertificate<C> {
    let order = f.ring.order();
    let leading = f.leading_monomials();
    let lcs: Vec<C> = f.gens.iter().map(Polynomial::lc).collect();
    let mut cache = PowerCache::new(f);
    let mut work = g.reorder(&f.ring);
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
        let mut sols = nonneg_solutions(&leading, &t.mono).expect("generators are nonconstant");
        // Fewest factors first, so a generator reduces itself in one step.
        sols.sort_by_key(|e| e.iter().sum::<u32>());
        if sols.is_empty() {
            continue;
        }
        let products: Vec<C> = sols.iter().map(|e| lc_power(&lcs, e)).collect();
        let Some(witness) = ideal_membership_witness(&t.coeff, &products) else {
            continue;
        };
        for (r, e) in witness.into_iter().zip(sols) {
            if r.is_zero() {
                continue;
            }
            let p = cache.get(&e);
            work = work.add_scaled(&p, &-r.clone());
            steps.push(SStep {
                coeff: r,
                exponents: e,
                monomial: t.mono.clone(),
            });
        }
    }
    SReductionCertificate {
        input: g.reorder(&f.ring),
        steps,
        final_reductum: work,
    }
}

pub(crate) fn lc_power<C: Coefficient>(lcs: &[C], e: &[u32]) -> C {
    let mut acc = C::one();
    for (c, &k) in lcs.iter().zip(e) {
        for _ in 0..k {
            acc = acc * c.clone();
        }
    }
    acc
}

/// Outcome of the SAGBI criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SagbiVerdict<C: Coefficient> {
    Verified,
    /// A homogeneous kernel generator whose evaluation does not s-reduce
    /// to zero.
    Failing {
        generator: Polynomial<C>,
        reductum: Polynomial<C>,
    },
}

impl<C: Coefficient> SagbiVerdict<C> {
    pub fn is_verified(&self) -> bool {
        matches!(self, SagbiVerdict::Verified)
    }
}

/// Homogeneous generators of the kernel of `y_i ↦ lt(f_i)`.
pub fn homogeneous_kernel_generators<C: Coefficient>(
    f: &SubalgebraPresentation<C>,
) -> Result<Vec<Polynomial<C>>, Error> {
    if f.is_empty() {
        return Ok(Vec::new());
    }
    let kernel = evaluation_kernel(&f.leading_terms(), &f.ring)?;
    let mut out = Vec::new();
    for p in kernel.generators() {
        for (_, c) in tx_homogeneous_components(p, &f.gens)? {
            out.push(c);
        }
    }
    Ok(out)
}

/// Checks whether every homogeneous kernel generator `P` of `Lt F` has
/// `P(F)` s-reducing to zero.
pub fn sagbi_verify<C: Coefficient>(
    f: &SubalgebraPresentation<C>,
) -> Result<SagbiVerdict<C>, Error> {
    for p in homogeneous_kernel_generators(f)? {
        let cert = s_reduce(&f.evaluate(&p), f);
        if !cert.final_reductum.is_zero() {
            return Ok(SagbiVerdict::Failing {
                generator: p,
                reductum: cert.final_reductum,
            });
        }
    }
    Ok(SagbiVerdict::Verified)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Completed,
    IterationCapReached,
}

/// What one pass of the construction saw.
#[derive(Clone, Debug)]
pub struct SagbiPass<C: Coefficient> {
    /// Tag polynomials over the generators present at the start of the pass.
    pub kernel_generators: Vec<Polynomial<C>>,
    pub evaluations: Vec<Polynomial<C>>,
    pub reducta: Vec<Polynomial<C>>,
    pub adjoined: Vec<Polynomial<C>>,
}

#[derive(Clone, Debug)]
pub struct SagbiResult<C: Coefficient> {
    pub status: Status,
    pub basis: SubalgebraPresentation<C>,
    pub passes: usize,
    pub trail: Vec<SagbiPass<C>>,
}

pub const DEFAULT_MAX_PASSES: usize = 16;

/// Adjoins final s-reducta of evaluated kernel generators until a pass
/// adds nothing or `max_passes` passes have run.
pub fn sagbi_construct<C: Coefficient>(
    ring: &Arc<Ring>,
    f0: &[Polynomial<C>],
    max_passes: usize,
) -> Result<SagbiResult<C>, Error> {
    let mut h = SubalgebraPresentation::new(ring, f0)?;
    let mut trail = Vec::new();
    for pass in 1..=max_passes.max(1) {
        let kernel_generators = homogeneous_kernel_generators(&h)?;
        let mut record = SagbiPass {
            evaluations: Vec::new(),
            reducta: Vec::new(),
            adjoined: Vec::new(),
            kernel_generators,
        };
        let mut red = Vec::new();
        for p in &record.kernel_generators {
            let value = h.evaluate(p);
            let reductum = s_reduce(&value, &h).final_reductum;
            record.evaluations.push(value);
            if !reductum.is_zero() {
                let u = reductum.lc().normalizing_unit();
                red.push(reductum.scale(&u));
            }
            record.reducta.push(reductum);
        }
        for r in red {
            if h.push(r.clone()) {
                record.adjoined.push(r);
            }
        }
        let done = record.adjoined.is_empty();
        trail.push(record);
        if done {
            h.sagbi_verified = true;
            return Ok(SagbiResult {
                status: Status::Completed,
                basis: h,
                passes: pass,
                trail,
            });
        }
    }
    Ok(SagbiResult {
        status: Status::IterationCapReached,
        passes: trail.len(),
        basis: h,
        trail,
    })
}

/// A SAGBI representation of `p` when it lies in the subalgebra.
pub fn subalgebra_member<C: Coefficient>(
    p: &Polynomial<C>,
    f: &SubalgebraPresentation<C>,
) -> Result<Option<SReductionCertificate<C>>, Error> {
    if !f.sagbi_verified {
        return Err(Error::NotVerified);
    }
    let cert = s_reduce(p, f);
    Ok(cert.final_reductum.is_zero().then_some(cert))
}
