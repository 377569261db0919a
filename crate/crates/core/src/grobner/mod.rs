//! Gröbner machinery over `Z[Y]` and `Q[Y]`.
//!
//! Ideal and module Gröbner bases with cofactor tracking, normal forms,
//! kernels of evaluation maps by tag variables, ideal intersection, module
//! syzygies, membership in submodules of quotient modules, and syzygies of
//! homogeneous elements of a monomial algebra.

mod engine;
mod vector;

use std::sync::Arc;

use crate::error::Error;
use crate::poly::{
    tx_homogeneous_components, Monomial, OrderBlock, OrderKind, Polynomial, Ring, TermOrder,
};
use crate::ring::Coefficient;
use vector::MPoly;

/// A vector of polynomials of fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleVector<C: Coefficient> {
    pub coords: Vec<Polynomial<C>>,
}

impl<C: Coefficient> ModuleVector<C> {
    pub fn new(coords: Vec<Polynomial<C>>) -> Self {
        ModuleVector { coords }
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Polynomial::is_zero)
    }

    /// `Σ coords_i * rows_i`.
    pub fn dot(&self, rows: &[Polynomial<C>]) -> Polynomial<C> {
        assert_eq!(self.coords.len(), rows.len());
        let ring = rows
            .first()
            .map(|r| r.ring().clone())
            .expect("nonempty vector");
        self.coords
            .iter()
            .zip(rows)
            .fold(Polynomial::zero(&ring), |acc, (a, b)| acc + a * b)
    }
}

/// Normal form of a polynomial with the quotients that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm<C: Coefficient> {
    pub remainder: Polynomial<C>,
    /// `p - remainder = Σ quotients_i * generators_i` (basis elements).
    pub quotients: Vec<Polynomial<C>>,
}

/// Gröbner basis of an ideal of a polynomial ring, strong over `Z`.
///
/// Each generator is also expressed over the inputs it was computed from.
#[derive(Clone, Debug)]
pub struct IdealBasis<C: Coefficient> {
    ring: Arc<Ring>,
    inputs: Vec<Polynomial<C>>,
    generators: Vec<Polynomial<C>>,
    cofactors: Vec<Vec<Polynomial<C>>>,
    elems: Vec<MPoly<C>>,
}

impl<C: Coefficient> IdealBasis<C> {
    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn inputs(&self) -> &[Polynomial<C>] {
        &self.inputs
    }

    pub fn generators(&self) -> &[Polynomial<C>] {
        &self.generators
    }

    /// `generators[i] = Σ_k cofactors()[i][k] * inputs[k]`.
    pub fn cofactors(&self) -> &[Vec<Polynomial<C>>] {
        &self.cofactors
    }

    pub fn normal_form(&self, p: &Polynomial<C>) -> NormalForm<C> {
        let red = engine::reduce(&self.ring, &self.elems, &MPoly::from_scalar(p, 0));
        NormalForm {
            remainder: red.remainder.to_vector(&self.ring, 1).pop().unwrap(),
            quotients: red.quotients,
        }
    }

    pub fn contains(&self, p: &Polynomial<C>) -> bool {
        self.normal_form(p).remainder.is_zero()
    }

    /// Cofactors `c` with `p = Σ c_k * inputs[k]`, if `p` is in the ideal.
    pub fn express(&self, p: &Polynomial<C>) -> Option<Vec<Polynomial<C>>> {
        let nf = self.normal_form(p);
        if !nf.remainder.is_zero() {
            return None;
        }
        Some(combine_rows(
            &self.ring,
            &nf.quotients,
            &self.cofactors,
            self.inputs.len(),
        ))
    }

    /// S-polynomials of all basis pairs and, over `Z`, their G-polynomials.
    pub fn pair_polynomials(&self) -> Vec<Polynomial<C>> {
        let mut out = Vec::new();
        for (j, b) in self.generators.iter().enumerate() {
            for a in &self.generators[..j] {
                let (la, lb) = (a.leading_term().unwrap(), b.leading_term().unwrap());
                let l = la.mono.lcm(&lb.mono);
                let ma = l.checked_div(&la.mono).unwrap();
                let mb = l.checked_div(&lb.mono).unwrap();
                let c = C::lcm(&la.coeff, &lb.coeff);
                out.push(
                    a.mul_term(&c.div_exact(&la.coeff), &ma)
                        - b.mul_term(&c.div_exact(&lb.coeff), &mb),
                );
                if !C::DOMAIN.is_field() {
                    let (_, s, t) = C::xgcd(&la.coeff, &lb.coeff);
                    out.push(a.mul_term(&s, &ma) + b.mul_term(&t, &mb));
                }
            }
        }
        out
    }

    /// Mutual containment of generated ideals.
    pub fn same_ideal(&self, other: &IdealBasis<C>) -> bool {
        other.generators.iter().all(|g| self.contains(g))
            && self.generators.iter().all(|g| other.contains(g))
    }
}

fn combine_rows<C: Coefficient>(
    ring: &Arc<Ring>,
    weights: &[Polynomial<C>],
    rows: &[Vec<Polynomial<C>>],
    width: usize,
) -> Vec<Polynomial<C>> {
    let mut out = vec![Polynomial::zero(ring); width];
    for (w, row) in weights.iter().zip(rows) {
        if w.is_zero() {
            continue;
        }
        for (slot, c) in out.iter_mut().zip(row) {
            if !c.is_zero() {
                *slot = &*slot + &(w * c);
            }
        }
    }
    out
}

fn check_ring<C: Coefficient>(ring: &Arc<Ring>, polys: &[Polynomial<C>]) -> Result<(), Error> {
    if polys
        .iter()
        .all(|p| Arc::ptr_eq(p.ring(), ring) || **p.ring() == **ring)
    {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// Gröbner basis of the ideal generated by `gens` in `ring`.
pub fn groebner_basis<C: Coefficient>(
    ring: &Arc<Ring>,
    gens: &[Polynomial<C>],
) -> Result<IdealBasis<C>, Error> {
    check_ring(ring, gens)?;
    let inputs: Vec<MPoly<C>> = gens.iter().map(|g| MPoly::from_scalar(g, 0)).collect();
    let done = engine::complete(ring, &inputs, gens.len());
    Ok(IdealBasis {
        ring: ring.clone(),
        inputs: gens.to_vec(),
        generators: done
            .elems
            .iter()
            .map(|e| e.to_vector(ring, 1).pop().unwrap())
            .collect(),
        cofactors: done.cofactors,
        elems: done.elems,
    })
}

/// Gröbner basis generators without cofactors, for elimination steps.
fn untracked_basis<C: Coefficient>(ring: &Arc<Ring>, gens: &[Polynomial<C>]) -> Vec<Polynomial<C>> {
    let inputs: Vec<MPoly<C>> = gens.iter().map(|g| MPoly::from_scalar(g, 0)).collect();
    engine::complete(ring, &inputs, 0)
        .elems
        .iter()
        .map(|e| e.to_vector(ring, 1).pop().unwrap())
        .collect()
}

/// Remainder and quotients of `p` by a Gröbner basis.
pub fn normal_form<C: Coefficient>(p: &Polynomial<C>, basis: &IdealBasis<C>) -> NormalForm<C> {
    basis.normal_form(p)
}

/// Generators of the kernel of `R[y_1..y_m] → R[X]`, `y_i ↦ targets[i]`.
///
/// Eliminates `X` from `{y_i - targets_i}` under the block order with the
/// `X` block (its own order) ahead of a degrevlex `Y` block.
pub fn evaluation_kernel<C: Coefficient>(
    targets: &[Polynomial<C>],
    xring: &Arc<Ring>,
) -> Result<IdealBasis<C>, Error> {
    check_ring(xring, targets)?;
    let n = xring.nvars();
    let m = targets.len();
    let tags = Ring::tags(m);
    let mut names: Vec<String> = xring.names().to_vec();
    names.extend(tags.names().iter().map(|s| format!("_{s}")));
    let mut blocks = xring.order().shifted_blocks(0);
    blocks.push(OrderBlock {
        kind: OrderKind::DegRevLex,
        vars: (n..n + m).collect(),
    });
    let combined = Ring::new(names, TermOrder::from_blocks(n + m, blocks)?)?;
    let xmap: Vec<usize> = (0..n).collect();
    let gens: Vec<Polynomial<C>> = targets
        .iter()
        .enumerate()
        .map(|(i, t)| &Polynomial::var(&combined, n + i) - &t.remap(&combined, &xmap))
        .collect();
    let gb = untracked_basis(&combined, &gens);
    let ymap: Vec<usize> = (0..n + m).map(|k| k.saturating_sub(n)).collect();
    let kernel: Vec<Polynomial<C>> = gb
        .iter()
        .filter(|g| {
            g.terms()
                .iter()
                .all(|t| t.mono.exponents()[..n].iter().all(|&e| e == 0))
        })
        .map(|g| g.remap(&tags, &ymap))
        .collect();
    groebner_basis(&tags, &kernel)
}

/// Generators of `I ∩ J` by eliminating `t` from `t*I + (1 - t)*J`.
pub fn ideal_intersection<C: Coefficient>(
    ring: &Arc<Ring>,
    i_gens: &[Polynomial<C>],
    j_gens: &[Polynomial<C>],
) -> Result<IdealBasis<C>, Error> {
    check_ring(ring, i_gens)?;
    check_ring(ring, j_gens)?;
    let n = ring.nvars();
    let mut names = vec!["_t".to_string()];
    names.extend(ring.names().iter().cloned());
    let mut blocks = vec![OrderBlock {
        kind: OrderKind::Lex,
        vars: vec![0],
    }];
    blocks.extend(ring.order().shifted_blocks(1));
    let ext = Ring::new(names, TermOrder::from_blocks(n + 1, blocks)?)?;
    let up: Vec<usize> = (1..=n).collect();
    let t = Polynomial::var(&ext, 0);
    let one_minus_t = &Polynomial::one(&ext) - &t;
    let mut gens: Vec<Polynomial<C>> = i_gens.iter().map(|f| &t * &f.remap(&ext, &up)).collect();
    gens.extend(j_gens.iter().map(|g| &one_minus_t * &g.remap(&ext, &up)));
    let gb = untracked_basis(&ext, &gens);
    let down: Vec<usize> = (0..=n).map(|k| k.saturating_sub(1)).collect();
    let inter: Vec<Polynomial<C>> = gb
        .iter()
        .filter(|g| g.terms().iter().all(|t| t.mono.exponents()[0] == 0))
        .map(|g| g.remap(ring, &down))
        .collect();
    groebner_basis(ring, &inter)
}

/// Generators of `{v : Σ v_i * rows_i = 0}`.
///
/// Computed by eliminating the first component from the module generated
/// by `rows_i * e_0 + e_i` under a position-over-term order.
pub fn module_syzygies<C: Coefficient>(
    ring: &Arc<Ring>,
    rows: &[Polynomial<C>],
) -> Result<Vec<ModuleVector<C>>, Error> {
    check_ring(ring, rows)?;
    Ok(relations_modulo(ring, rows, &[]))
}

/// Generators of `{v : Σ v_i * rows_i ∈ ⟨quotient⟩}`; with an empty
/// quotient these are the syzygies.
fn relations_modulo<C: Coefficient>(
    ring: &Arc<Ring>,
    rows: &[Polynomial<C>],
    quotient: &[Polynomial<C>],
) -> Vec<ModuleVector<C>> {
    let m = rows.len();
    let mut inputs: Vec<MPoly<C>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut coords = vec![Polynomial::zero(ring); m + 1];
            coords[0] = r.clone();
            coords[i + 1] = Polynomial::one(ring);
            MPoly::from_vector(&coords)
        })
        .collect();
    inputs.extend(quotient.iter().map(|k| MPoly::from_scalar(k, 0)));
    let done = engine::complete(ring, &inputs, 0);
    let kept: Vec<&MPoly<C>> = done
        .elems
        .iter()
        .filter(|e| e.lead().is_some_and(|l| l.comp > 0))
        .collect();
    // Drop elements whose leading term another one divides; what is left is
    // still a basis of the same submodule.
    let redundant = |i: usize| {
        let a = kept[i].lead().unwrap();
        kept.iter().enumerate().any(|(j, other)| {
            let b = other.lead().unwrap();
            j != i
                && b.comp == a.comp
                && b.coeff.divides(&a.coeff)
                && b.mono.divides(&a.mono)
                && (b != a || j < i)
        })
    };
    let minimal: Vec<MPoly<C>> = (0..kept.len())
        .filter(|&i| !redundant(i))
        .map(|i| kept[i].clone())
        .collect();
    // Tail reduction by the other elements; leading terms stay put.
    let mut reduced = minimal.clone();
    for i in 0..reduced.len() {
        let others: Vec<MPoly<C>> = reduced
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, e)| e.clone())
            .collect();
        reduced[i] = engine::reduce(ring, &others, &reduced[i]).remainder;
    }
    reduced
        .iter()
        .map(|e| {
            let mut coords = e.to_vector(ring, m + 1);
            coords.remove(0);
            ModuleVector::new(coords)
        })
        .collect()
}

/// A submodule of `(R[Y]/K)^k` given by generators, with a Gröbner basis of
/// its preimage `⟨gens⟩ + K^k` for membership queries.
#[derive(Clone, Debug)]
pub struct ModuleBasis<C: Coefficient> {
    ring: Arc<Ring>,
    width: usize,
    ngens: usize,
    elems: Vec<MPoly<C>>,
    cofactors: Vec<Vec<Polynomial<C>>>,
}

impl<C: Coefficient> ModuleBasis<C> {
    /// `quotient` generates `K`; pass an empty slice for a free module.
    pub fn new(
        ring: &Arc<Ring>,
        width: usize,
        gens: &[ModuleVector<C>],
        quotient: &[Polynomial<C>],
    ) -> Result<Self, Error> {
        if let Some(v) = gens.iter().find(|v| v.len() != width) {
            return Err(Error::ArityMismatch {
                expected: width,
                found: v.len(),
            });
        }
        for v in gens {
            check_ring(ring, &v.coords)?;
        }
        check_ring(ring, quotient)?;
        let mut inputs: Vec<MPoly<C>> =
            gens.iter().map(|v| MPoly::from_vector(&v.coords)).collect();
        for k in quotient {
            for comp in 0..width {
                inputs.push(MPoly::from_scalar(k, comp));
            }
        }
        let done = engine::complete(ring, &inputs, gens.len());
        Ok(ModuleBasis {
            ring: ring.clone(),
            width,
            ngens: gens.len(),
            elems: done.elems,
            cofactors: done.cofactors,
        })
    }

    /// Basis elements of the preimage submodule.
    pub fn basis(&self) -> Vec<ModuleVector<C>> {
        self.elems
            .iter()
            .map(|e| ModuleVector::new(e.to_vector(&self.ring, self.width)))
            .collect()
    }

    /// Coefficients `c` over the generators with `target - Σ c_j gens_j`
    /// in `K^k`, if the target lies in the submodule.
    pub fn express(&self, target: &ModuleVector<C>) -> Option<Vec<Polynomial<C>>> {
        assert_eq!(target.len(), self.width);
        let red = engine::reduce(&self.ring, &self.elems, &MPoly::from_vector(&target.coords));
        if !red.remainder.is_zero() {
            return None;
        }
        let total = self.cofactors.first().map_or(self.ngens, Vec::len);
        let mut row = combine_rows(&self.ring, &red.quotients, &self.cofactors, total);
        row.truncate(self.ngens);
        Some(row)
    }

    pub fn contains(&self, target: &ModuleVector<C>) -> bool {
        let red = engine::reduce(&self.ring, &self.elems, &MPoly::from_vector(&target.coords));
        red.remainder.is_zero()
    }
}

/// Generators `P_j ∈ R[Y]^M` whose images under `y_i ↦ lt(f_i)` generate
/// the syzygies of `s_i(Lt F)` over the monomial algebra `R[Lt F]`.
///
/// These are generators of `{a : Σ a_i s_i ∈ ker}`, read off a module
/// basis of `s_i e_0 + e_i` and `k e_0` (`k` in the kernel) with the
/// `e_0` component eliminated.
pub fn monomial_algebra_syzygies<C: Coefficient>(
    f: &[Polynomial<C>],
    s_elems: &[Polynomial<C>],
) -> Result<Vec<ModuleVector<C>>, Error> {
    let tags = Ring::tags(f.len());
    for (i, s) in s_elems.iter().enumerate() {
        if s.ring().nvars() != f.len() {
            return Err(Error::ArityMismatch {
                expected: f.len(),
                found: s.ring().nvars(),
            });
        }
        if tx_homogeneous_components(s, f)?.len() > 1 {
            return Err(Error::NotHomogeneous(i));
        }
    }
    let s_elems: Vec<Polynomial<C>> = s_elems.iter().map(|s| s.reorder(&tags)).collect();
    let Some(xring) = f.first().map(|p| p.ring().clone()) else {
        return Ok(Vec::new());
    };
    let leading: Vec<Polynomial<C>> = f.iter().map(Polynomial::lt).collect();
    let kernel = evaluation_kernel(&leading, &xring)?;
    if let [s] = s_elems.as_slice() {
        // R[Lt F] is a domain, so a * s lies in the kernel exactly when a
        // does, unless s itself is zero there.
        if !s.evaluate(&leading, &xring).is_zero() {
            let mut out = module_syzygies(&tags, &s_elems)?;
            out.extend(
                kernel
                    .generators()
                    .iter()
                    .map(|k| ModuleVector::new(vec![k.clone()])),
            );
            return Ok(out);
        }
    }
    // Syzygies that hold already in R[Y] come first.
    let (mut out, lifted): (Vec<_>, Vec<_>) =
        relations_modulo(&tags, &s_elems, kernel.generators())
            .into_iter()
            .partition(|v| v.dot(&s_elems).is_zero());
    out.extend(lifted);
    Ok(out)
}


/// Exponent-vector helper: the tag monomial `y^e` in `ring`.
pub fn tag_monomial<C: Coefficient>(ring: &Arc<Ring>, c: C, e: &[u32]) -> Polynomial<C> {
    Polynomial::term(ring, c, Monomial::new(e.to_vec()))
}
