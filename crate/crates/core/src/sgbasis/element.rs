use std::fmt;

use crate::error::Error;
use crate::poly::Polynomial;
use crate::ring::Coefficient;
use crate::sagbi::{subalgebra_member, SubalgebraPresentation};

/// An element of `A = R[F]` together with a tag polynomial `P` such that
/// `P(F)` is the element.
#[derive(Clone)]
pub struct AlgebraElement<C: Coefficient> {
    value: Polynomial<C>,
    tag: Polynomial<C>,
}

impl<C: Coefficient> AlgebraElement<C> {
    pub fn zero(f: &SubalgebraPresentation<C>) -> Self {
        AlgebraElement {
            value: Polynomial::zero(f.ring()),
            tag: Polynomial::zero(&f.tag_ring()),
        }
    }

    pub fn one(f: &SubalgebraPresentation<C>) -> Self {
        AlgebraElement {
            value: Polynomial::one(f.ring()),
            tag: Polynomial::one(&f.tag_ring()),
        }
    }

    /// `P(F)`.
    pub fn from_tag(f: &SubalgebraPresentation<C>, tag: Polynomial<C>) -> Self {
        Self::make(f.evaluate(&tag), tag)
    }

    /// Finds a representation through s-reduction by the verified basis.
    pub fn from_value(f: &SubalgebraPresentation<C>, value: &Polynomial<C>) -> Result<Self, Error> {
        match subalgebra_member(value, f)? {
            Some(cert) => Ok(Self::make(
                cert.input.clone(),
                cert.tag_polynomial(&f.tag_ring()),
            )),
            None => Err(Error::NotInSubalgebra(value.to_string())),
        }
    }

    fn make(value: Polynomial<C>, tag: Polynomial<C>) -> Self {
        if value.is_zero() {
            let tag = Polynomial::zero(tag.ring());
            return AlgebraElement { value, tag };
        }
        AlgebraElement { value, tag }
    }

    pub fn value(&self) -> &Polynomial<C> {
        &self.value
    }

    /// Tag polynomial over the basis; not unique.
    pub fn tag(&self) -> &Polynomial<C> {
        &self.tag
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn replays(&self, f: &SubalgebraPresentation<C>) -> bool {
        f.evaluate(&self.tag) == self.value
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::make(&self.value + &other.value, &self.tag + &other.tag)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::make(&self.value - &other.value, &self.tag - &other.tag)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::make(&self.value * &other.value, &self.tag * &other.tag)
    }

    pub fn neg(&self) -> Self {
        Self::make(-&self.value, -&self.tag)
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::make(self.value.scale(c), self.tag.scale(c))
    }

    /// The tag polynomial written over `names` (`f1`, `f2`, … by default).
    pub fn display_over(&self, names: &[String]) -> String {
        if self.value.is_zero() {
            return "0".to_string();
        }
        self.tag.display_with(names)
    }
}

/// Equality of values; tag polynomials are not canonical.
impl<C: Coefficient> PartialEq for AlgebraElement<C> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl<C: Coefficient> Eq for AlgebraElement<C> {}

impl<C: Coefficient> fmt::Debug for AlgebraElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} = {:?}", self.tag, self.value)
    }
}
