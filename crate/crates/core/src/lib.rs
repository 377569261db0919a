//! SAGBI bases, SAGBI-Gröbner bases and subalgebra syzygies for finitely
//! generated subalgebras of `Z[X]` and `Q[X]`.

pub mod diophantine;
pub mod error;
pub mod grobner;
pub mod poly;
pub mod ring;
pub mod sagbi;
pub mod sgbasis;
pub mod syzygy;

pub use diophantine::{nonneg_solutions, quotient_memberships, DiophantineSystem};
pub use error::Error;
pub use grobner::{groebner_basis, normal_form, IdealBasis, ModuleBasis, ModuleVector};
pub use poly::{Monomial, OrderKind, Polynomial, Ring, TermOrder};
pub use ring::{Coefficient, CoefficientDomain, Integer, Rational};
pub use sagbi::{
    s_reduce, sagbi_construct, sagbi_verify, subalgebra_member, SReductionCertificate, SagbiResult,
    SagbiVerdict, Status, SubalgebraPresentation,
};
pub use sgbasis::{
    ideal_member, lt_syzygy_generators, sg_construct, sg_verify, si_reduce, AlgebraElement,
    IdealPresentation, LtSyzygyVector, SGRepresentation, SGResult, SgVerdict,
};
pub use syzygy::{
    change_of_basis, sg_syzygy_generators, subset_syzygy_generators, BasisMatrices, SyzygyModule,
    SyzygyVector,
};
