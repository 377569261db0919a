use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{Monomial, OrderKind, TermOrder};
use crate::error::Error;
use crate::ring::Coefficient;

/// Variables and term order of a polynomial ring. Names are metadata only.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    names: Vec<String>,
    order: TermOrder,
}

impl Ring {
    pub fn new(names: Vec<String>, order: TermOrder) -> Result<Arc<Ring>, Error> {
        if names.len() != order.nvars() {
            return Err(Error::ArityMismatch {
                expected: order.nvars(),
                found: names.len(),
            });
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateVariable(n.clone()));
            }
        }
        Ok(Arc::new(Ring { names, order }))
    }

    /// Ring with a single-block order and variables in precedence order.
    pub fn with_kind<S: AsRef<str>>(names: &[S], kind: OrderKind) -> Result<Arc<Ring>, Error> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let order = TermOrder::new(kind, names.len());
        Ring::new(names, order)
    }

    /// Tag ring `R[y_1, …, y_m]` under degrevlex by index.
    pub fn tags(m: usize) -> Arc<Ring> {
        Self::tags_named("y", m)
    }

    pub fn tags_named(prefix: &str, m: usize) -> Arc<Ring> {
        let names = (1..=m).map(|i| format!("{prefix}{i}")).collect();
        Arc::new(Ring {
            names,
            order: TermOrder::new(OrderKind::DegRevLex, m),
        })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<C> {
    pub coeff: C,
    pub mono: Monomial,
}

/// Leading power product, coefficient and term. `lp` is `None` for zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData<C: Coefficient> {
    pub lp: Option<Monomial>,
    pub lc: C,
    pub lt: Polynomial<C>,
}

/// Sparse polynomial; terms strictly descending in the ring's order, no
/// zero coefficients. The zero polynomial has no terms.
#[derive(Clone)]
pub struct Polynomial<C> {
    ring: Arc<Ring>,
    terms: Vec<Term<C>>,
}

impl<C: Coefficient> PartialEq for Polynomial<C> {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring)
            && self.terms == other.terms
    }
}

impl<C: Coefficient> Eq for Polynomial<C> {}

impl<C: Coefficient> std::hash::Hash for Polynomial<C> {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero(ring: &Arc<Ring>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Arc<Ring>) -> Self {
        Self::constant(ring, C::one())
    }

    pub fn constant(ring: &Arc<Ring>, c: C) -> Self {
        Self::term(ring, c, ring.one_monomial())
    }

    pub fn var(ring: &Arc<Ring>, index: usize) -> Self {
        Self::term(ring, C::one(), Monomial::var(ring.nvars(), index, 1))
    }

    pub fn term(ring: &Arc<Ring>, c: C, mono: Monomial) -> Self {
        debug_assert_eq!(mono.arity(), ring.nvars());
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term { coeff: c, mono }]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms(ring: &Arc<Ring>, terms: impl IntoIterator<Item = (C, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (c, m) in terms {
            debug_assert_eq!(m.arity(), ring.nvars());
            if c.is_zero() {
                continue;
            }
            match acc.get_mut(&m) {
                Some(v) => *v = v.clone() + c,
                None => {
                    acc.insert(m, c);
                }
            }
        }
        let mut terms: Vec<Term<C>> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(mono, coeff)| Term { coeff, mono })
            .collect();
        let order = ring.order();
        terms.sort_by(|a, b| order.cmp(&b.mono, &a.mono));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Wraps terms already in canonical order. Checked in debug builds.
    pub(crate) fn from_sorted(ring: &Arc<Ring>, terms: Vec<Term<C>>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().cmp(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[Term<C>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<C>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|t| t.mono.is_one())
    }

    pub fn leading_term(&self) -> Option<&Term<C>> {
        self.terms.first()
    }

    pub fn lp(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn lc(&self) -> C {
        self.terms
            .first()
            .map(|t| t.coeff.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn lt(&self) -> Polynomial<C> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.first().cloned().into_iter().collect(),
        }
    }

    pub fn leading_data(&self) -> LeadingData<C> {
        LeadingData {
            lp: self.lp().cloned(),
            lc: self.lc(),
            lt: self.lt(),
        }
    }

    pub fn coefficient_of(&self, m: &Monomial) -> C {
        self.terms
            .iter()
            .find(|t| &t.mono == m)
            .map(|t| t.coeff.clone())
            .unwrap_or_else(C::zero)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    fn same_ring(&self, other: &Self) {
        debug_assert!(
            Arc::ptr_eq(&self.ring, &other.ring) || self.ring == other.ring,
            "polynomials from different rings"
        );
    }

    /// `self + factor * other`, merging in one pass.
    pub fn add_scaled(&self, other: &Self, factor: &C) -> Self {
        self.same_ring(other);
        if factor.is_zero() {
            return self.clone();
        }
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match order.cmp(&a[i].mono, &b[j].mono) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(Term {
                        coeff: b[j].coeff.clone() * factor.clone(),
                        mono: b[j].mono.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].coeff.clone() + b[j].coeff.clone() * factor.clone();
                    if !c.is_zero() {
                        out.push(Term {
                            coeff: c,
                            mono: a[i].mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|t| Term {
            coeff: t.coeff.clone() * factor.clone(),
            mono: t.mono.clone(),
        }));
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone() * c.clone(),
                    mono: t.mono.clone(),
                })
                .filter(|t| !t.coeff.is_zero())
                .collect(),
        }
    }

    /// Multiplication by the term `c * m`; order is preserved.
    pub fn mul_term(&self, c: &C, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: t.coeff.clone() * c.clone(),
                    mono: t.mono.mul(m),
                })
                .filter(|t| !t.coeff.is_zero())
                .collect(),
        }
    }

    pub fn mul_poly(&self, other: &Self) -> Self {
        self.same_ring(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let t = &other.terms[0];
            return self.mul_term(&t.coeff, &t.mono);
        }
        if self.terms.len() == 1 {
            let t = &self.terms[0];
            return other.mul_term(&t.coeff, &t.mono);
        }
        let products = self.terms.iter().flat_map(|a| {
            other
                .terms
                .iter()
                .map(move |b| (a.coeff.clone() * b.coeff.clone(), a.mono.mul(&b.mono)))
        });
        Self::from_terms(&self.ring, products)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut result = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_poly(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_poly(&base);
            }
        }
        result
    }

    /// Substitutes `values[i]` for variable `i`. All values share one target
    /// ring, which may differ from this polynomial's ring.
    pub fn evaluate(&self, values: &[Polynomial<C>], target: &Arc<Ring>) -> Polynomial<C> {
        assert_eq!(values.len(), self.ring.nvars(), "evaluation arity");
        let mut cache: Vec<Vec<Polynomial<C>>> = vec![Vec::new(); values.len()];
        let mut power = |i: usize, e: u32| -> Polynomial<C> {
            let powers = &mut cache[i];
            if powers.is_empty() {
                powers.push(Polynomial::one(target));
            }
            while powers.len() <= e as usize {
                let next = powers.last().unwrap().mul_poly(&values[i]);
                powers.push(next);
            }
            powers[e as usize].clone()
        };
        let mut acc = Polynomial::zero(target);
        for t in &self.terms {
            let mut prod = Polynomial::constant(target, t.coeff.clone());
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                if e > 0 {
                    prod = prod.mul_poly(&power(i, e));
                }
            }
            acc = acc + prod;
        }
        acc
    }

    /// Moves the polynomial into `target`, sending variable `i` to
    /// `var_map[i]`. Terms are re-sorted for the target order.
    pub fn remap(&self, target: &Arc<Ring>, var_map: &[usize]) -> Polynomial<C> {
        assert_eq!(var_map.len(), self.ring.nvars());
        let n = target.nvars();
        Polynomial::from_terms(
            target,
            self.terms.iter().map(|t| {
                let mut e = vec![0; n];
                for (i, &x) in t.mono.exponents().iter().enumerate() {
                    e[var_map[i]] += x;
                }
                (t.coeff.clone(), Monomial::new(e))
            }),
        )
    }

    /// Re-sorts into a ring with the same variables and a different order.
    pub fn reorder(&self, target: &Arc<Ring>) -> Polynomial<C> {
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        self.remap(target, &map)
    }

    /// Multiplies by the canonical unit of the leading coefficient.
    pub fn normalize_sign(&self) -> Polynomial<C> {
        let u = self.lc().normalizing_unit();
        if u.is_one() {
            self.clone()
        } else {
            self.scale(&u)
        }
    }

    /// Canonical text using the ring's variable names.
    pub fn display_with(&self, names: &[String]) -> String {
        let mut out = String::new();
        if self.terms.is_empty() {
            return "0".to_string();
        }
        for (k, t) in self.terms.iter().enumerate() {
            let c = t.coeff.to_string();
            let (neg, mag) = match c.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, c),
            };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mut factors: Vec<String> = Vec::new();
            if mag != "1" || t.mono.is_one() {
                factors.push(mag);
            }
            for (i, &e) in t.mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    e => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            out.push_str(&factors.join("*"));
        }
        out
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(self.ring.names()))
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Self {
        self.add_scaled(&rhs, &C::one())
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.add_scaled(rhs, &C::one())
    }
}

impl<C: Coefficient> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Self {
        self.add_scaled(&rhs, &-C::one())
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.add_scaled(rhs, &-C::one())
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Self {
        self.mul_poly(&rhs)
    }
}

impl<C: Coefficient> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.mul_poly(rhs)
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Self {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}
