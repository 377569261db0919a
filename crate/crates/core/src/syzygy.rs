//! Syzygies over `A` of an SG-basis and of arbitrary finite subsets of `A`.

use crate::error::Error;
use crate::grobner::{evaluation_kernel, ModuleBasis, ModuleVector};
use crate::poly::Polynomial;
use crate::ring::Coefficient;
use crate::sagbi::{Status, SubalgebraPresentation};
use crate::sgbasis::{
    evaluate_vector, ideal_member, lt_syzygy_generators, sg_construct, si_reduce, AlgebraElement,
    IdealPresentation, LtSyzygyVector, SGResult,
};

/// A vector over `A` annihilating some target list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyVector<C: Coefficient> {
    pub coords: Vec<AlgebraElement<C>>,
}

impl<C: Coefficient> SyzygyVector<C> {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(AlgebraElement::is_zero)
    }

    pub fn apply(&self, targets: &[Polynomial<C>]) -> Polynomial<C> {
        assert_eq!(self.coords.len(), targets.len());
        let ring = targets
            .first()
            .map(|t| t.ring().clone())
            .expect("nonempty target list");
        self.coords
            .iter()
            .zip(targets)
            .fold(Polynomial::zero(&ring), |acc, (a, t)| acc + a.value() * t)
    }

    pub fn annihilates(&self, targets: &[Polynomial<C>]) -> bool {
        self.apply(targets).is_zero()
    }
}

/// A syzygy `Q - p` of a basis together with its parts.
#[derive(Clone, Debug)]
pub struct BasisSyzygy<C: Coefficient> {
    pub lt_syzygy: LtSyzygyVector<C>,
    /// Coefficients of an SG-representation of `Σ q_i g_i`.
    pub representation: Vec<AlgebraElement<C>>,
    pub vector: SyzygyVector<C>,
}

/// Generators `Q_j - p_j` of the syzygies over `A` of a verified SG-basis.
pub fn sg_syzygy_generators<C: Coefficient>(
    ideal: &IdealPresentation<C>,
) -> Result<Vec<BasisSyzygy<C>>, Error> {
    if !ideal.is_verified() {
        return Err(Error::IdealNotVerified);
    }
    let f = ideal.ambient();
    let mut out = Vec::new();
    for q in lt_syzygy_generators(ideal)? {
        let value = evaluate_vector(&q.coords, ideal);
        let red = si_reduce(value.value(), ideal)?;
        if !red.final_reductum.is_zero() {
            return Err(Error::IdealNotVerified);
        }
        let mut rep = vec![AlgebraElement::zero(f); ideal.len()];
        for (a, i) in red.parts(ideal) {
            rep[i] = rep[i].add(&a);
        }
        let coords = q.coords.iter().zip(&rep).map(|(a, b)| a.sub(b)).collect();
        out.push(BasisSyzygy {
            lt_syzygy: q,
            representation: rep,
            vector: SyzygyVector { coords },
        });
    }
    Ok(out)
}

/// `H = W G` and `G = U H`.
#[derive(Clone, Debug)]
pub struct BasisMatrices<C: Coefficient> {
    pub w: Vec<Vec<AlgebraElement<C>>>,
    pub u: Vec<Vec<AlgebraElement<C>>>,
}

impl<C: Coefficient> BasisMatrices<C> {
    pub fn replays(&self, h: &[Polynomial<C>], g: &[Polynomial<C>]) -> bool {
        let apply = |m: &[Vec<AlgebraElement<C>>], v: &[Polynomial<C>], out: &[Polynomial<C>]| {
            m.len() == out.len()
                && m.iter().zip(out).all(|(row, o)| {
                    let sum = row
                        .iter()
                        .zip(v)
                        .fold(Polynomial::zero(o.ring()), |acc, (a, x)| {
                            acc + a.value() * x
                        });
                    &sum == o
                })
        };
        apply(&self.w, g, h) && apply(&self.u, h, g)
    }

    /// `W U`.
    pub fn wu(&self, f: &SubalgebraPresentation<C>) -> Vec<Vec<AlgebraElement<C>>> {
        let n = self.u.first().map_or(self.w.len(), Vec::len);
        self.w
            .iter()
            .map(|wrow| {
                (0..n)
                    .map(|k| {
                        wrow.iter()
                            .zip(&self.u)
                            .fold(AlgebraElement::zero(f), |acc, (a, urow)| {
                                acc.add(&a.mul(&urow[k]))
                            })
                    })
                    .collect()
            })
            .collect()
    }
}

/// `U` from the construction trail; `W` from SG-representations of the
/// inputs over the constructed basis.
pub fn change_of_basis<C: Coefficient>(
    h0: &[Polynomial<C>],
    sg: &SGResult<C>,
) -> Result<BasisMatrices<C>, Error> {
    if sg.status != Status::Completed {
        return Err(Error::IdealNotVerified);
    }
    let f = sg.basis.ambient();
    let mut w = Vec::new();
    for h in h0 {
        let mut row = vec![AlgebraElement::zero(f); sg.basis.len()];
        if !h.is_zero() {
            let rep = ideal_member(h, &sg.basis)?.ok_or_else(|| {
                Error::Internal(format!("{h} is not reduced to zero by its own SG-basis"))
            })?;
            for (a, i) in rep.parts {
                row[i] = row[i].add(&a);
            }
        }
        w.push(row);
    }
    Ok(BasisMatrices {
        w,
        u: sg.u_trace.clone(),
    })
}

/// Everything produced on the way to generators of the syzygies of `H`.
#[derive(Clone, Debug)]
pub struct SubsetSyzygies<C: Coefficient> {
    pub sg: SGResult<C>,
    pub basis_syzygies: Vec<BasisSyzygy<C>>,
    pub matrices: BasisMatrices<C>,
    /// `P_j U` followed by the nonzero rows of `I - W U`.
    pub vectors: Vec<SyzygyVector<C>>,
}

/// Generators over `A` of the syzygies of `h0`.
pub fn subset_syzygy_generators<C: Coefficient>(
    h0: &[Polynomial<C>],
    ambient: &SubalgebraPresentation<C>,
    max_passes: usize,
) -> Result<SubsetSyzygies<C>, Error> {
    let sg = sg_construct(h0, ambient, max_passes)?;
    if sg.status != Status::Completed {
        return Err(Error::IterationCap(max_passes));
    }
    let basis_syzygies = sg_syzygy_generators(&sg.basis)?;
    let matrices = change_of_basis(h0, &sg)?;
    let n = h0.len();
    let mut vectors = Vec::new();
    for b in &basis_syzygies {
        let coords: Vec<_> = (0..n)
            .map(|k| {
                b.vector
                    .coords
                    .iter()
                    .zip(&matrices.u)
                    .fold(AlgebraElement::zero(ambient), |acc, (p, urow)| {
                        acc.add(&p.mul(&urow[k]))
                    })
            })
            .collect();
        let v = SyzygyVector { coords };
        if !v.is_zero() {
            vectors.push(v);
        }
    }
    for (r, row) in matrices.wu(ambient).into_iter().enumerate() {
        let coords: Vec<_> = row
            .iter()
            .enumerate()
            .map(|(k, x)| {
                let delta = if k == r {
                    AlgebraElement::one(ambient)
                } else {
                    AlgebraElement::zero(ambient)
                };
                delta.sub(x)
            })
            .collect();
        let v = SyzygyVector { coords };
        if !v.is_zero() {
            vectors.push(v);
        }
    }
    if let Some(bad) = vectors.iter().find(|v| !v.annihilates(h0)) {
        return Err(Error::Internal(format!(
            "emitted vector {bad:?} does not annihilate the input"
        )));
    }
    Ok(SubsetSyzygies {
        sg,
        basis_syzygies,
        matrices,
        vectors,
    })
}

/// Submodule of `A^k` generated by vectors over `A`, presented as a
/// submodule of `(R[Y]/I(F))^k` with `I(F)` the relations of `F`.
#[derive(Clone, Debug)]
pub struct SyzygyModule<C: Coefficient> {
    ambient: SubalgebraPresentation<C>,
    basis: ModuleBasis<C>,
    width: usize,
}

impl<C: Coefficient> SyzygyModule<C> {
    pub fn new(
        ambient: &SubalgebraPresentation<C>,
        width: usize,
        gens: &[SyzygyVector<C>],
    ) -> Result<Self, Error> {
        let lifted: Vec<ModuleVector<C>> = gens.iter().map(|v| lift(&v.coords)).collect();
        let relations = evaluation_kernel(ambient.generators(), ambient.ring())?;
        let basis = ModuleBasis::new(&ambient.tag_ring(), width, &lifted, relations.generators())?;
        Ok(SyzygyModule {
            ambient: ambient.clone(),
            basis,
            width,
        })
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Multipliers `c_j ∈ A` with `v = Σ c_j * gens_j`, if `v` lies in
    /// the module.
    pub fn express(&self, v: &[AlgebraElement<C>]) -> Option<Vec<AlgebraElement<C>>> {
        let c = self.basis.express(&lift(v))?;
        Some(
            c.into_iter()
                .map(|t| AlgebraElement::from_tag(&self.ambient, t))
                .collect(),
        )
    }
}

fn lift<C: Coefficient>(v: &[AlgebraElement<C>]) -> ModuleVector<C> {
    ModuleVector::new(v.iter().map(|a| a.tag().clone()).collect())
}
