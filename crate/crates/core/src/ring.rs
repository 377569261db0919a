//! Exact coefficient arithmetic.
//!
//! Two coefficient domains are supported: the integers (`BigInt`) and the
//! rationals (`BigRational`, always reduced with a positive denominator).
//! Both expose the two capabilities every algorithm in this crate relies on:
//! deciding ideal membership with a witness, and computing the syzygies of a
//! finite list of constants.

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary precision integer.
pub type Integer = BigInt;
/// Reduced rational number with positive denominator.
pub type Rational = BigRational;

/// Which coefficient domain a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientDomain {
    IntegerRing,
    RationalField,
}

impl CoefficientDomain {
    pub fn is_field(self) -> bool {
        matches!(self, CoefficientDomain::RationalField)
    }

    pub fn name(self) -> &'static str {
        match self {
            CoefficientDomain::IntegerRing => "int",
            CoefficientDomain::RationalField => "rat",
        }
    }
}

/// A coefficient ring usable by the polynomial and Gröbner machinery.
///
/// Implementations must be exact. `xgcd` and `divides` carry the Euclidean
/// structure over `Z`; over a field they degenerate to the obvious choices.
pub trait Coefficient:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    const DOMAIN: CoefficientDomain;

    /// `true` when `self` divides `other` in this ring.
    fn divides(&self, other: &Self) -> bool;

    /// Exact quotient `self / divisor`. Callers guarantee divisibility.
    fn div_exact(&self, divisor: &Self) -> Self;

    /// Returns `(g, s, t)` with `g = s*a + t*b` a canonical gcd of `a` and `b`.
    fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self);

    /// Canonical least common multiple.
    fn lcm(a: &Self, b: &Self) -> Self;

    /// A unit `u` such that `u * self` is the canonical associate
    /// (positive over `Z`, one over `Q`). Returns one for zero.
    fn normalizing_unit(&self) -> Self;

    fn is_unit(&self) -> bool;

    fn from_i64(v: i64) -> Self;

    /// Parses the canonical textual form produced by `Display`.
    fn parse_literal(text: &str) -> Option<Self>;
}

impl Coefficient for Integer {
    const DOMAIN: CoefficientDomain = CoefficientDomain::IntegerRing;

    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            other.is_zero()
        } else {
            (other % self).is_zero()
        }
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        debug_assert!(Coefficient::divides(divisor, self));
        self / divisor
    }

    fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        let e = a.extended_gcd(b);
        let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
        if g.is_negative() {
            g = -g;
            s = -s;
            t = -t;
        }
        (g, s, t)
    }

    fn lcm(a: &Self, b: &Self) -> Self {
        a.lcm(b)
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_negative() {
            -Integer::one()
        } else {
            Integer::one()
        }
    }

    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }

    fn from_i64(v: i64) -> Self {
        Integer::from(v)
    }

    fn parse_literal(text: &str) -> Option<Self> {
        text.parse().ok()
    }
}

impl Coefficient for Rational {
    const DOMAIN: CoefficientDomain = CoefficientDomain::RationalField;

    fn divides(&self, other: &Self) -> bool {
        !self.is_zero() || other.is_zero()
    }

    fn div_exact(&self, divisor: &Self) -> Self {
        self / divisor
    }

    fn xgcd(a: &Self, b: &Self) -> (Self, Self, Self) {
        if !a.is_zero() {
            (Rational::one(), a.recip(), Rational::zero())
        } else if !b.is_zero() {
            (Rational::one(), Rational::zero(), b.recip())
        } else {
            (Rational::zero(), Rational::zero(), Rational::zero())
        }
    }

    fn lcm(a: &Self, b: &Self) -> Self {
        if a.is_zero() || b.is_zero() {
            Rational::zero()
        } else {
            Rational::one()
        }
    }

    fn normalizing_unit(&self) -> Self {
        if self.is_zero() {
            Rational::one()
        } else {
            self.recip()
        }
    }

    fn is_unit(&self) -> bool {
        !self.is_zero()
    }

    fn from_i64(v: i64) -> Self {
        Rational::from_integer(Integer::from(v))
    }

    fn parse_literal(text: &str) -> Option<Self> {
        match text.split_once('/') {
            Some((n, d)) => {
                let n: Integer = n.parse().ok()?;
                let d: Integer = d.parse().ok()?;
                if d.is_zero() {
                    None
                } else {
                    Some(Rational::new(n, d))
                }
            }
            None => Some(Rational::from_integer(text.parse().ok()?)),
        }
    }
}

/// Finds `r` with `c = Σ r_i * gens_i`, or `None` when `c` is outside the
/// ideal generated by `gens`.
///
/// Over `Z` a single generator dividing `c` is preferred; otherwise the
/// witness comes from a left fold of extended Euclid. Witnesses are not
/// unique and callers must only rely on the identity.
pub fn ideal_membership_witness<C: Coefficient>(c: &C, gens: &[C]) -> Option<Vec<C>> {
    let mut witness = vec![C::zero(); gens.len()];
    if c.is_zero() {
        return Some(witness);
    }
    if let Some(i) = gens.iter().position(|g| !g.is_zero() && g.divides(c)) {
        witness[i] = c.div_exact(&gens[i]);
        return Some(witness);
    }
    // Fold: g = Σ witness_i * gens_i throughout.
    let mut g = C::zero();
    for (i, gen) in gens.iter().enumerate() {
        if gen.is_zero() {
            continue;
        }
        let (d, s, t) = C::xgcd(&g, gen);
        for w in witness.iter_mut().take(i) {
            *w = w.clone() * s.clone();
        }
        witness[i] = t;
        g = d;
    }
    if g.is_zero() || !g.divides(c) {
        return None;
    }
    let q = c.div_exact(&g);
    for w in witness.iter_mut() {
        *w = w.clone() * q.clone();
    }
    Some(witness)
}

/// Generators of `{r ∈ R^N : Σ r_i * gens_i = 0}`.
///
/// Over `Z` the row `gens` is driven to `(g, 0, …, 0)` by unimodular column
/// operations; the columns of the transform that land on zero generate the
/// kernel. Over `Q` the first nonzero entry is used as a pivot.
#[allow(clippy::needless_range_loop)]
pub fn constant_syzygy_generators<C: Coefficient>(gens: &[C]) -> Vec<Vec<C>> {
    let n = gens.len();
    let unit = |i: usize| {
        let mut v = vec![C::zero(); n];
        v[i] = C::one();
        v
    };
    let Some(pivot) = gens.iter().position(|g| !g.is_zero()) else {
        return (0..n).map(unit).collect();
    };
    let mut out = Vec::new();
    if C::DOMAIN.is_field() {
        for j in 0..n {
            if j == pivot {
                continue;
            }
            let mut v = unit(j);
            v[pivot] = -gens[j].div_exact(&gens[pivot]);
            out.push(v);
        }
    } else {
        // Column p of `cols` always maps to the running gcd.
        let mut pivot_col = unit(pivot);
        let mut acc = gens[pivot].clone();
        for j in 0..n {
            if j == pivot {
                continue;
            }
            if gens[j].is_zero() {
                out.push(unit(j));
                continue;
            }
            let (g, s, t) = C::xgcd(&acc, &gens[j]);
            let a = gens[j].div_exact(&g);
            let b = acc.div_exact(&g);
            let col_j = unit(j);
            let kernel: Vec<C> = pivot_col
                .iter()
                .zip(&col_j)
                .map(|(p, q)| a.clone() * p.clone() - b.clone() * q.clone())
                .collect();
            pivot_col = pivot_col
                .iter()
                .zip(&col_j)
                .map(|(p, q)| s.clone() * p.clone() + t.clone() * q.clone())
                .collect();
            acc = g;
            out.push(kernel);
        }
    }
    for v in out.iter_mut() {
        if let Some(first) = v.iter().find(|x| !x.is_zero()) {
            let u = first.normalizing_unit();
            if !C::DOMAIN.is_field() && !u.is_one() {
                for x in v.iter_mut() {
                    *x = x.clone() * u.clone();
                }
            }
        }
    }
    out
}
