//! Nonnegative integer solutions of `Σ ε_i * column_i = target`.
//!
//! These are the exponent systems behind both reductions: "is `X^β` a
//! product of leading power products of `F`?" and "does `X^α` lie in the
//! monoid ideal generated by `lp(g)`?". Every column has positive total
//! degree, so the solution set is finite and a bounded depth-first search
//! enumerates it completely.

use crate::error::Error;
use crate::poly::Monomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiophantineSystem {
    pub columns: Vec<Monomial>,
    pub target: Monomial,
}

impl DiophantineSystem {
    pub fn new(columns: Vec<Monomial>, target: Monomial) -> Result<Self, Error> {
        if columns.iter().any(Monomial::is_one) {
            return Err(Error::ZeroDegreeColumn);
        }
        if let Some(c) = columns.iter().find(|c| c.arity() != target.arity()) {
            return Err(Error::ArityMismatch {
                expected: target.arity(),
                found: c.arity(),
            });
        }
        Ok(DiophantineSystem { columns, target })
    }

    /// All solutions, in increasing lexicographic order of `ε`.
    #[allow(clippy::needless_range_loop)]
    pub fn solutions(&self) -> Vec<Vec<u32>> {
        let m = self.columns.len();
        let n = self.target.arity();
        // suffix_support[i][k]: some column j >= i has a positive entry k.
        let mut suffix_support = vec![vec![false; n]; m + 1];
        for i in (0..m).rev() {
            for k in 0..n {
                suffix_support[i][k] =
                    suffix_support[i + 1][k] || self.columns[i].exponents()[k] > 0;
            }
        }
        let mut out = Vec::new();
        let mut eps = vec![0u32; m];
        let remaining: Vec<u32> = self.target.exponents().to_vec();
        self.search(0, &mut eps, remaining, &suffix_support, &mut out);
        out
    }

    fn search(
        &self,
        i: usize,
        eps: &mut Vec<u32>,
        remaining: Vec<u32>,
        support: &[Vec<bool>],
        out: &mut Vec<Vec<u32>>,
    ) {
        if remaining
            .iter()
            .zip(&support[i])
            .any(|(&r, &s)| r > 0 && !s)
        {
            return;
        }
        if i == self.columns.len() {
            // support[m] is all false, so remaining is zero here.
            out.push(eps.clone());
            return;
        }
        let col = self.columns[i].exponents();
        let bound = col
            .iter()
            .zip(&remaining)
            .filter(|(&c, _)| c > 0)
            .map(|(&c, &r)| r / c)
            .min()
            .unwrap_or(0);
        for k in 0..=bound {
            let rest: Vec<u32> = remaining
                .iter()
                .zip(col)
                .map(|(&r, &c)| r - k * c)
                .collect();
            eps[i] = k;
            self.search(i + 1, eps, rest, support, out);
        }
        eps[i] = 0;
    }
}

/// Every `ε ≥ 0` with `Σ ε_i * columns_i = target`.
pub fn nonneg_solutions(columns: &[Monomial], target: &Monomial) -> Result<Vec<Vec<u32>>, Error> {
    Ok(DiophantineSystem::new(columns.to_vec(), target.clone())?.solutions())
}

/// Every `η` with `X^alpha = X^lp_g * lp(F^η)`; empty when `lp_g` does not
/// divide `alpha`.
pub fn quotient_memberships(
    alpha: &Monomial,
    lp_g: &Monomial,
    leading: &[Monomial],
) -> Result<Vec<Vec<u32>>, Error> {
    match alpha.checked_div(lp_g) {
        Some(rest) => nonneg_solutions(leading, &rest),
        None => {
            DiophantineSystem::new(leading.to_vec(), alpha.clone())?;
            Ok(Vec::new())
        }
    }
}
