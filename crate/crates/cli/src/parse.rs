//! Problem files and polynomial expressions.
//!
//! ```text
//! ring = int
//! vars = x, y
//! order = deglex
//! max_passes = 16
//! [F]
//! 4*x^2*y^2 + 2*x*y^3 + 3*x*y
//! ```

use std::sync::Arc;

use sagbi_core::{Coefficient, OrderKind, Polynomial, Ring};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Int,
    Rat,
}

impl RingKind {
    pub fn name(self) -> &'static str {
        match self {
            RingKind::Int => "int",
            RingKind::Rat => "rat",
        }
    }
}

/// One polynomial line and where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SourceLine {
    pub line: usize,
    /// Column of the first character of `text`.
    pub column: usize,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemFile {
    pub ring: RingKind,
    pub vars: Vec<String>,
    pub order: OrderKind,
    pub max_passes: Option<usize>,
    pub f: Vec<SourceLine>,
    pub g: Option<Vec<SourceLine>>,
    pub h: Option<Vec<SourceLine>>,
}

impl ProblemFile {
    pub fn polynomial_ring(&self) -> Arc<Ring> {
        Ring::with_kind(&self.vars, self.order).expect("variables validated at parse time")
    }

    /// Parses a section into polynomials over `C`.
    pub fn section<C: Coefficient>(
        &self,
        lines: &[SourceLine],
    ) -> Result<Vec<Polynomial<C>>, ParseError> {
        let ring = self.polynomial_ring();
        lines
            .iter()
            .map(|l| {
                parse_polynomial(&l.text, &ring)
                    .map_err(|(col, msg)| ParseError::new(l.line, l.column + col - 1, msg))
            })
            .collect()
    }
}

fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(a, _)| a)
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    chars
        .next()
        .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn leading_ws(s: &str) -> usize {
    s.chars().take_while(|c| c.is_whitespace()).count()
}

#[derive(PartialEq, Eq)]
enum Section {
    Header,
    F,
    G,
    H,
}

/// Parses a problem file, checking every polynomial against the declared
/// variables and ring.
pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let mut ring = None;
    let mut vars: Option<Vec<String>> = None;
    let mut order = None;
    let mut max_passes = None;
    let mut f: Option<(usize, Vec<SourceLine>)> = None;
    let mut g: Option<(usize, Vec<SourceLine>)> = None;
    let mut h: Option<(usize, Vec<SourceLine>)> = None;
    let mut section = Section::Header;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        let indent = leading_ws(body);
        let trimmed = body.trim();
        if trimmed.starts_with('[') {
            let (name, slot) = match trimmed {
                "[F]" => (Section::F, &mut f),
                "[G]" => (Section::G, &mut g),
                "[H]" => (Section::H, &mut h),
                _ => {
                    return Err(ParseError::new(
                        lineno,
                        indent + 1,
                        format!("unknown section `{trimmed}`"),
                    ))
                }
            };
            if slot.is_some() {
                return Err(ParseError::new(
                    lineno,
                    indent + 1,
                    format!("duplicate section `{trimmed}`"),
                ));
            }
            *slot = Some((lineno, Vec::new()));
            section = name;
            continue;
        }
        match section {
            Section::Header => {
                let Some((key, value)) = trimmed.split_once('=') else {
                    return Err(ParseError::new(
                        lineno,
                        indent + 1,
                        "expected `key = value` or a section header",
                    ));
                };
                let key = key.trim();
                let value_col =
                    body.find('=').unwrap() + 2 + leading_ws(&body[body.find('=').unwrap() + 1..]);
                let value = value.trim();
                match key {
                    "ring" => {
                        ring = Some(match value {
                            "int" => RingKind::Int,
                            "rat" => RingKind::Rat,
                            _ => {
                                return Err(ParseError::new(
                                    lineno,
                                    value_col,
                                    format!("unknown ring `{value}`, expected int or rat"),
                                ))
                            }
                        })
                    }
                    "vars" => {
                        let mut names = Vec::new();
                        let mut col = value_col;
                        for part in value.split(',') {
                            let name = part.trim();
                            let here = col + leading_ws(part);
                            if !is_identifier(name) {
                                return Err(ParseError::new(
                                    lineno,
                                    here,
                                    format!("invalid variable name `{name}`"),
                                ));
                            }
                            if names.iter().any(|n| n == name) {
                                return Err(ParseError::new(
                                    lineno,
                                    here,
                                    format!("duplicate variable `{name}`"),
                                ));
                            }
                            names.push(name.to_string());
                            col += part.chars().count() + 1;
                        }
                        vars = Some(names);
                    }
                    "order" => {
                        order = Some(
                            value
                                .parse::<OrderKind>()
                                .map_err(|e| ParseError::new(lineno, value_col, e.to_string()))?,
                        )
                    }
                    "max_passes" => {
                        let n: usize = value.parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
                            ParseError::new(
                                lineno,
                                value_col,
                                "max_passes must be a positive integer",
                            )
                        })?;
                        max_passes = Some(n);
                    }
                    _ => {
                        return Err(ParseError::new(
                            lineno,
                            indent + 1,
                            format!("unknown key `{key}`"),
                        ))
                    }
                }
            }
            Section::F | Section::G | Section::H => {
                let slot = match section {
                    Section::F => &mut f,
                    Section::G => &mut g,
                    _ => &mut h,
                };
                slot.as_mut().unwrap().1.push(SourceLine {
                    line: lineno,
                    column: indent + 1,
                    text: trimmed.to_string(),
                });
            }
        }
    }

    let missing =
        |what: &str| ParseError::new(last_line + 1, 1, format!("missing `{what}` declaration"));
    let ring = ring.ok_or_else(|| missing("ring"))?;
    let vars = vars.ok_or_else(|| missing("vars"))?;
    let order = order.ok_or_else(|| missing("order"))?;
    let Some((f_line, f)) = f else {
        let at = g.as_ref().or(h.as_ref()).map_or(last_line + 1, |(l, _)| *l);
        return Err(ParseError::new(at, 1, "missing [F] section"));
    };
    if f.is_empty() {
        return Err(ParseError::new(f_line, 1, "empty generator section"));
    }
    for (name, sec) in [("[G]", &g), ("[H]", &h)] {
        if let Some((l, lines)) = sec {
            if lines.is_empty() {
                return Err(ParseError::new(*l, 1, format!("empty {name} section")));
            }
        }
    }
    let problem = ProblemFile {
        ring,
        vars,
        order,
        max_passes,
        f,
        g: g.map(|(_, v)| v),
        h: h.map(|(_, v)| v),
    };
    for sec in [Some(&problem.f), problem.g.as_ref(), problem.h.as_ref()]
        .into_iter()
        .flatten()
    {
        match problem.ring {
            RingKind::Int => problem.section::<sagbi_core::Integer>(sec).map(drop)?,
            RingKind::Rat => problem.section::<sagbi_core::Rational>(sec).map(drop)?,
        }
    }
    Ok(problem)
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Num(s) | Tok::Ident(s) => format!("`{s}`"),
            Tok::Plus => "`+`".into(),
            Tok::Minus => "`-`".into(),
            Tok::Star => "`*`".into(),
            Tok::Caret => "`^`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
        }
    }
}

/// Tokens with 1-based columns.
fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, (usize, String)> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = i + 1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i + 1 < chars.len() && chars[i] == '/' && chars[i + 1].is_ascii_digit() {
                i += 1;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
            }
            out.push((col, Tok::Num(chars[start..i].iter().collect())));
            continue;
        }
        if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push((col, Tok::Ident(chars[start..i].iter().collect())));
            continue;
        }
        let t = match c {
            '+' => Tok::Plus,
            '-' => Tok::Minus,
            '*' => Tok::Star,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            _ => return Err((col, format!("unexpected character `{c}`"))),
        };
        out.push((col, t));
        i += 1;
    }
    Ok(out)
}

struct Parser<'a, C: Coefficient> {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end: usize,
    ring: &'a Arc<Ring>,
    _c: std::marker::PhantomData<C>,
}

type PResult<T> = Result<T, (usize, String)>;

impl<C: Coefficient> Parser<'_, C> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |(c, _)| *c)
    }

    fn expr(&mut self) -> PResult<Polynomial<C>> {
        let mut acc = match self.peek() {
            Some(Tok::Minus) => {
                self.pos += 1;
                -self.term()?
            }
            Some(Tok::Plus) => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = acc + self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = acc - self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> PResult<Polynomial<C>> {
        let mut acc = self.power()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.pos += 1;
                    acc = acc * self.power()?;
                }
                Some(Tok::Num(_) | Tok::Ident(_) | Tok::LParen) => {
                    return Err((
                        self.col(),
                        "implicit multiplication is not allowed; write `*`".into(),
                    ))
                }
                _ => return Ok(acc),
            }
        }
    }

    fn power(&mut self) -> PResult<Polynomial<C>> {
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.pos += 1;
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                let e: u32 = n
                    .parse()
                    .map_err(|_| (col, format!("invalid exponent `{n}`")))?;
                self.pos += 1;
                Ok(base.pow(e))
            }
            Some(t) => Err((col, format!("expected an exponent, found {}", t.describe()))),
            None => Err((col, "expected an exponent".into())),
        }
    }

    fn atom(&mut self) -> PResult<Polynomial<C>> {
        let col = self.col();
        let Some(tok) = self.peek().cloned() else {
            return Err((col, "unexpected end of expression".into()));
        };
        self.pos += 1;
        match tok {
            Tok::Num(n) => {
                let c = C::parse_literal(&n).ok_or_else(|| {
                    let msg = if n.contains('/') && !C::DOMAIN.is_field() {
                        format!("rational literal `{n}` in an integer ring")
                    } else {
                        format!("invalid number `{n}`")
                    };
                    (col, msg)
                })?;
                Ok(Polynomial::constant(self.ring, c))
            }
            Tok::Ident(name) => match self.ring.names().iter().position(|v| *v == name) {
                Some(i) => Ok(Polynomial::var(self.ring, i)),
                None => Err((col, format!("unknown variable `{name}`"))),
            },
            Tok::LParen => {
                let inner = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err((self.col(), "expected `)`".into())),
                }
            }
            Tok::Minus => Ok(-self.power()?),
            t => Err((col, format!("unexpected {}", t.describe()))),
        }
    }
}

/// Parses one expression; errors carry a 1-based column within `text`.
pub fn parse_polynomial<C: Coefficient>(
    text: &str,
    ring: &Arc<Ring>,
) -> Result<Polynomial<C>, (usize, String)> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        end: text.chars().count() + 1,
        toks,
        pos: 0,
        ring,
        _c: std::marker::PhantomData,
    };
    let out = p.expr()?;
    if let Some(t) = p.peek() {
        return Err((p.col(), format!("unexpected {}", t.describe())));
    }
    Ok(out)
}
