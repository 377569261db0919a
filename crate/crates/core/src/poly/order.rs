//! Term orders on exponent vectors.
//!
//! A [`TermOrder`] is a sequence of blocks. Each block orders its own
//! variables by one of the classical kinds, and blocks are compared left to
//! right. A single block is an ordinary term order; several blocks give the
//! elimination orders used for tag variables.

use std::cmp::Ordering;
use std::fmt;

use super::Monomial;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    Lex,
    DegLex,
    DegRevLex,
}

impl OrderKind {
    pub fn name(self) -> &'static str {
        match self {
            OrderKind::Lex => "lex",
            OrderKind::DegLex => "deglex",
            OrderKind::DegRevLex => "degrevlex",
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for OrderKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(OrderKind::Lex),
            "deglex" => Ok(OrderKind::DegLex),
            "degrevlex" => Ok(OrderKind::DegRevLex),
            other => Err(Error::UnknownOrder(other.to_string())),
        }
    }
}

/// One block of a term order: `vars` lists variable indices from the most
/// significant to the least significant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OrderBlock {
    pub kind: OrderKind,
    pub vars: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    nvars: usize,
    blocks: Vec<OrderBlock>,
}

impl TermOrder {
    /// Single block on `nvars` variables with precedence `x_0 > x_1 > …`.
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        TermOrder {
            nvars,
            blocks: vec![OrderBlock {
                kind,
                vars: (0..nvars).collect(),
            }],
        }
    }

    /// Single block with an explicit variable precedence (a permutation).
    pub fn with_precedence(kind: OrderKind, precedence: Vec<usize>) -> Result<Self, Error> {
        let nvars = precedence.len();
        Self::from_blocks(
            nvars,
            vec![OrderBlock {
                kind,
                vars: precedence,
            }],
        )
    }

    /// Block order; the blocks must partition `0..nvars`.
    pub fn from_blocks(nvars: usize, blocks: Vec<OrderBlock>) -> Result<Self, Error> {
        let mut seen = vec![false; nvars];
        for v in blocks.iter().flat_map(|b| &b.vars) {
            if *v >= nvars || seen[*v] {
                return Err(Error::InvalidOrder(format!(
                    "variable index {v} repeated or out of range"
                )));
            }
            seen[*v] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidOrder(
                "blocks do not cover every variable".into(),
            ));
        }
        let blocks = blocks.into_iter().filter(|b| !b.vars.is_empty()).collect();
        Ok(TermOrder { nvars, blocks })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn blocks(&self) -> &[OrderBlock] {
        &self.blocks
    }

    /// The kind of a single-block order.
    pub fn kind(&self) -> Option<OrderKind> {
        match self.blocks.as_slice() {
            [b] => Some(b.kind),
            [] => Some(OrderKind::DegRevLex),
            _ => None,
        }
    }

    /// Same blocks with every variable index moved up by `offset`, inside a
    /// ring of `total` variables. Used to embed an order into a larger ring.
    pub fn shifted_blocks(&self, offset: usize) -> Vec<OrderBlock> {
        self.blocks
            .iter()
            .map(|b| OrderBlock {
                kind: b.kind,
                vars: b.vars.iter().map(|v| v + offset).collect(),
            })
            .collect()
    }

    /// Checked comparison.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, Error> {
        if a.arity() != self.nvars || b.arity() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                found: if a.arity() != self.nvars {
                    a.arity()
                } else {
                    b.arity()
                },
            });
        }
        Ok(self.cmp(a, b))
    }

    /// Comparison without arity checks; callers keep arities consistent.
    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        for block in &self.blocks {
            let ord = match block.kind {
                OrderKind::Lex => lex(&block.vars, a, b),
                OrderKind::DegLex => degree(&block.vars, a)
                    .cmp(&degree(&block.vars, b))
                    .then_with(|| lex(&block.vars, a, b)),
                OrderKind::DegRevLex => degree(&block.vars, a)
                    .cmp(&degree(&block.vars, b))
                    .then_with(|| revlex(&block.vars, a, b)),
            };
            if ord != Ordering::Equal {
                return ord;
            }
        }
        Ordering::Equal
    }
}

fn degree(vars: &[usize], e: &[u32]) -> u64 {
    vars.iter().map(|&v| u64::from(e[v])).sum()
}

fn lex(vars: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &v in vars {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    Ordering::Equal
}

fn revlex(vars: &[usize], a: &[u32], b: &[u32]) -> Ordering {
    for &v in vars.iter().rev() {
        match a[v].cmp(&b[v]) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}
