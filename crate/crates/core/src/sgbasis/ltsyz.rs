//! lt-generating sets for the homogeneous lt-syzygies of an ideal
//! presentation.

use std::sync::Arc;

use super::{AlgebraElement, IdealPresentation};
use crate::diophantine::nonneg_solutions;
use crate::error::Error;
use crate::grobner::{evaluation_kernel, monomial_algebra_syzygies, ModuleBasis, ModuleVector};
use crate::poly::{tx_homogeneous_components, Monomial, Polynomial, Ring};
use crate::ring::{ideal_membership_witness, Coefficient};
use crate::sagbi::{lc_power, SubalgebraPresentation};

/// A vector over `A` whose leading terms form a homogeneous syzygy of
/// `Lt G` of degree `degree`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LtSyzygyVector<C: Coefficient> {
    pub coords: Vec<AlgebraElement<C>>,
    pub degree: Monomial,
}

impl<C: Coefficient> LtSyzygyVector<C> {
    pub fn lt_vector(&self) -> Vec<Polynomial<C>> {
        self.coords.iter().map(|a| a.value().lt()).collect()
    }

    /// `Σ lt(q_i) lt(g_i) = 0`, every nonzero product has leading power
    /// product `degree`, and every coordinate replays over the basis.
    pub fn is_valid(&self, ideal: &IdealPresentation<C>) -> bool {
        let ring = ideal.ring();
        let mut sum = Polynomial::zero(ring);
        for (q, g) in self.coords.iter().zip(ideal.generators()) {
            if q.is_zero() {
                continue;
            }
            if !q.replays(ideal.ambient()) {
                return false;
            }
            let prod = &q.value().lt() * &g.value().lt();
            if prod.lp() != Some(&self.degree) {
                return false;
            }
            sum = sum + prod;
        }
        self.coords.len() == ideal.len() && sum.is_zero()
    }
}

/// A homogeneous tag polynomial `P` with `P(Lt F) = p`, for `p` in
/// `R[Lt F]`, found term by term.
pub fn leading_tag_representation<C: Coefficient>(
    p: &Polynomial<C>,
    f: &SubalgebraPresentation<C>,
) -> Result<Polynomial<C>, Error> {
    let tags = f.tag_ring();
    let leading = f.leading_monomials();
    let lcs: Vec<C> = f.generators().iter().map(Polynomial::lc).collect();
    let mut out = Vec::new();
    for t in p.terms() {
        let mut sols = nonneg_solutions(&leading, &t.mono)?;
        sols.sort_by_key(|e| e.iter().sum::<u32>());
        let products: Vec<C> = sols.iter().map(|e| lc_power(&lcs, e)).collect();
        let witness = ideal_membership_witness(&t.coeff, &products)
            .ok_or_else(|| Error::NotInSubalgebra(p.to_string()))?;
        for (w, e) in witness.into_iter().zip(sols) {
            if !w.is_zero() {
                out.push((w, Monomial::new(e)));
            }
        }
    }
    Ok(Polynomial::from_terms(&tags, out))
}

/// An lt-generating set for the homogeneous lt-syzygies of `G`.
///
/// Writes each `lt(g_i)` over `Lt F`, takes syzygies over the monomial
/// algebra `R[Lt F]`, splits them into homogeneous pieces and lifts each
/// coordinate `P` to `P(F)`, or to 0 when `P(Lt F) = 0`.
pub fn lt_syzygy_generators<C: Coefficient>(
    ideal: &IdealPresentation<C>,
) -> Result<Vec<LtSyzygyVector<C>>, Error> {
    let f = ideal.ambient();
    if !f.is_verified() {
        return Err(Error::NotVerified);
    }
    if ideal.is_empty() {
        return Ok(Vec::new());
    }
    let xring = f.ring();
    let order = xring.order();
    let leading_terms = f.leading_terms();
    let g_lp: Vec<Monomial> = ideal
        .generators()
        .iter()
        .map(|g| g.value().lp().unwrap().clone())
        .collect();
    let s: Vec<Polynomial<C>> = ideal
        .generators()
        .iter()
        .map(|g| leading_tag_representation(&g.value().lt(), f))
        .collect::<Result<_, _>>()?;
    let raw = monomial_algebra_syzygies(f.generators(), &s)?;
    let mut out: Vec<LtSyzygyVector<C>> = Vec::new();
    for v in raw {
        let mut pieces: Vec<(Monomial, usize, Polynomial<C>)> = Vec::new();
        for (i, c) in v.coords.iter().enumerate() {
            for (d, comp) in tx_homogeneous_components(c, f.generators())? {
                pieces.push((d.mul(&g_lp[i]), i, comp));
            }
        }
        let mut degrees: Vec<Monomial> = Vec::new();
        for (t, _, _) in &pieces {
            if !degrees.contains(t) {
                degrees.push(t.clone());
            }
        }
        degrees.sort_by(|a, b| order.cmp(b, a));
        for t in degrees {
            let mut coords = vec![AlgebraElement::zero(f); ideal.len()];
            let mut nonzero = false;
            for (_, i, comp) in pieces.iter().filter(|(d, _, _)| *d == t) {
                let term = comp.evaluate(&leading_terms, xring);
                if term.is_zero() {
                    continue;
                }
                // Any tag form of the term will do; this one is small.
                coords[*i] = AlgebraElement::from_tag(f, leading_tag_representation(&term, f)?);
                nonzero = true;
            }
            if !nonzero {
                continue;
            }
            let candidate = LtSyzygyVector { coords, degree: t };
            if !out.contains(&candidate) {
                out.push(candidate);
            }
        }
    }
    prune(&mut out, f, ideal.len())?;
    Ok(out)
}

/// Drops, latest first, vectors already in the module of the others.
fn prune<C: Coefficient>(
    vectors: &mut Vec<LtSyzygyVector<C>>,
    f: &SubalgebraPresentation<C>,
    width: usize,
) -> Result<(), Error> {
    if vectors.len() < 2 {
        return Ok(());
    }
    let tags = f.tag_ring();
    let kernel = evaluation_kernel(&f.leading_terms(), f.ring())?;
    let as_tags = |v: &LtSyzygyVector<C>| {
        ModuleVector::new(v.coords.iter().map(|a| a.tag().clone()).collect())
    };
    let mut i = vectors.len();
    while i > 0 && vectors.len() > 1 {
        i -= 1;
        let others: Vec<ModuleVector<C>> = vectors
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| as_tags(v))
            .collect();
        if ModuleBasis::new(&tags, width, &others, kernel.generators())?
            .contains(&as_tags(&vectors[i]))
        {
            vectors.remove(i);
        }
    }
    Ok(())
}

/// Submodule of `R[Lt F]^M` generated by vectors of elements of
/// `R[Lt F]`, presented as a submodule of `(R[Y]/I(Lt F))^M`.
#[derive(Clone, Debug)]
pub struct LtSyzygyModule<C: Coefficient> {
    ambient: SubalgebraPresentation<C>,
    tags: Arc<Ring>,
    basis: ModuleBasis<C>,
    width: usize,
}

impl<C: Coefficient> LtSyzygyModule<C> {
    pub fn new(
        ambient: &SubalgebraPresentation<C>,
        width: usize,
        gens: &[Vec<Polynomial<C>>],
    ) -> Result<Self, Error> {
        let tags = ambient.tag_ring();
        let lifted = gens
            .iter()
            .map(|v| lift(ambient, v))
            .collect::<Result<Vec<_>, _>>()?;
        let kernel = evaluation_kernel(&ambient.leading_terms(), ambient.ring())?;
        let basis = ModuleBasis::new(&tags, width, &lifted, kernel.generators())?;
        Ok(LtSyzygyModule {
            ambient: ambient.clone(),
            tags,
            basis,
            width,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn tag_ring(&self) -> &Arc<Ring> {
        &self.tags
    }

    pub fn contains(&self, v: &[Polynomial<C>]) -> Result<bool, Error> {
        Ok(self.basis.contains(&lift(&self.ambient, v)?))
    }
}

fn lift<C: Coefficient>(
    f: &SubalgebraPresentation<C>,
    v: &[Polynomial<C>],
) -> Result<ModuleVector<C>, Error> {
    Ok(ModuleVector::new(
        v.iter()
            .map(|p| leading_tag_representation(p, f))
            .collect::<Result<_, _>>()?,
    ))
}
