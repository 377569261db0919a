use sagbi_core::sagbi::DEFAULT_MAX_PASSES;
use sagbi_core::{
    ideal_member, s_reduce, sagbi_construct, sagbi_verify, sg_construct, sg_verify,
    subalgebra_member, subset_syzygy_generators, AlgebraElement, Coefficient, Error, Polynomial,
    SGResult, Status, SubalgebraPresentation,
};

use crate::parse::{parse_polynomial, ProblemFile};
use crate::report::{Entry, Report, Section, Space};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CommandKind {
    Sagbi,
    Sg,
    Syz,
    Reduce,
    Member,
}

impl CommandKind {
    pub fn name(self) -> &'static str {
        match self {
            CommandKind::Sagbi => "sagbi",
            CommandKind::Sg => "sg",
            CommandKind::Syz => "syz",
            CommandKind::Reduce => "reduce",
            CommandKind::Member => "member",
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    pub trail: bool,
    pub certificates: bool,
    pub max_passes: Option<usize>,
    pub poly: Option<String>,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

/// A command that stopped without a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotInSubalgebra(_) | Error::ZeroGenerator | Error::RingMismatch => EXIT_INPUT,
            Error::IterationCap(_) => EXIT_CAP,
            _ => EXIT_FAILURE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

struct Ctx<'a> {
    problem: &'a ProblemFile,
    opts: &'a Options,
    max_passes: usize,
    names: Vec<String>,
}

impl Ctx<'_> {
    fn report(&self, kind: CommandKind, status: &str) -> Report {
        Report {
            command: kind.name().to_string(),
            ring: self.problem.ring.name().to_string(),
            vars: self.problem.vars.clone(),
            order: self.problem.order.name().to_string(),
            status: status.to_string(),
            passes: None,
            legend: Vec::new(),
            sections: Vec::new(),
            checks: Vec::new(),
        }
    }

    fn names_for(&mut self, m: usize) -> &[String] {
        while self.names.len() < m {
            let k = self.names.len() + 1;
            self.names.push(format!("f{k}"));
        }
        &self.names[..m]
    }

    fn over<C: Coefficient>(&mut self, a: &AlgebraElement<C>, m: usize) -> String {
        let names = self.names_for(m).to_vec();
        a.display_over(&names)
    }

    fn over_row<C: Coefficient>(&mut self, row: &[AlgebraElement<C>], m: usize) -> Vec<String> {
        row.iter().map(|a| self.over(a, m)).collect()
    }

    fn tag<C: Coefficient>(&mut self, p: &Polynomial<C>, m: usize) -> String {
        let names = self.names_for(m).to_vec();
        p.display_with(&names)
    }

    fn poly_flag<C: Coefficient>(&self) -> Result<Polynomial<C>, Failure> {
        let text = self
            .opts
            .poly
            .as_deref()
            .ok_or_else(|| Failure::input("this command needs --poly EXPR"))?;
        parse_polynomial(text, &self.problem.polynomial_ring())
            .map_err(|(col, msg)| Failure::input(format!("--poly, column {col}: {msg}")))
    }

    fn ambient<C: Coefficient>(&self) -> Result<SubalgebraPresentation<C>, Failure> {
        let f = self
            .problem
            .section::<C>(&self.problem.f)
            .map_err(|e| Failure::input(e.to_string()))?;
        let res = sagbi_construct(&self.problem.polynomial_ring(), &f, self.max_passes)?;
        if res.status != Status::Completed {
            return Err(Failure {
                code: EXIT_CAP,
                message: format!(
                    "SAGBI construction of the ambient algebra did not complete within {} passes",
                    self.max_passes
                ),
            });
        }
        Ok(res.basis)
    }

    fn legend<C: Coefficient>(&mut self, f: &SubalgebraPresentation<C>) -> Vec<Entry> {
        let names = self.names_for(f.len()).to_vec();
        f.generators()
            .iter()
            .zip(names)
            .map(|(g, n)| Entry::poly(n, Space::X, g.to_string()))
            .collect()
    }

    fn ideal_section(&self, which: &str) -> Result<&[crate::parse::SourceLine], Failure> {
        let (first, second) = if which == "G" {
            (&self.problem.g, &self.problem.h)
        } else {
            (&self.problem.h, &self.problem.g)
        };
        first
            .as_deref()
            .or(second.as_deref())
            .ok_or_else(|| Failure::input("this command needs a [G] or [H] section"))
    }

    fn sg_trail<C: Coefficient>(&mut self, sg: &SGResult<C>, m: usize, report: &mut Report) {
        let mut width = sg.inputs.len();
        for (k, pass) in sg.trail.iter().enumerate() {
            let mut s = Section::new(format!("pass {}", k + 1));
            width = pass.lt_syzygies.first().map_or(width, |q| q.coords.len());
            for (j, q) in pass.lt_syzygies.iter().enumerate() {
                let coords = self.over_row(&q.coords, m);
                s.entries
                    .push(Entry::vector(format!("q{}", j + 1), Space::F, coords));
                s.entries.push(Entry::poly(
                    format!("q{}.g", j + 1),
                    Space::X,
                    pass.evaluations[j].to_string(),
                ));
                s.entries.push(Entry::poly(
                    format!("reductum {}", j + 1),
                    Space::X,
                    pass.reducta[j].to_string(),
                ));
            }
            for (j, a) in pass.adjoined.iter().enumerate() {
                s.entries.push(Entry::poly(
                    format!("adjoined g{}", width + j + 1),
                    Space::X,
                    a.to_string(),
                ));
            }
            report.sections.push(s);
        }
    }
}

pub fn execute<C: Coefficient>(
    kind: CommandKind,
    problem: &ProblemFile,
    opts: &Options,
) -> Result<(Report, i32), Failure> {
    let mut ctx = Ctx {
        problem,
        opts,
        max_passes: opts
            .max_passes
            .or(problem.max_passes)
            .unwrap_or(DEFAULT_MAX_PASSES),
        names: Vec::new(),
    };
    match kind {
        CommandKind::Sagbi => sagbi::<C>(&mut ctx),
        CommandKind::Sg => sg::<C>(&mut ctx),
        CommandKind::Syz => syz::<C>(&mut ctx),
        CommandKind::Reduce => reduce::<C>(&mut ctx),
        CommandKind::Member => member::<C>(&mut ctx),
    }
}

fn status_text(s: Status) -> &'static str {
    match s {
        Status::Completed => "completed",
        Status::IterationCapReached => "iteration cap reached",
    }
}

fn exit_for(s: Status) -> i32 {
    match s {
        Status::Completed => EXIT_OK,
        Status::IterationCapReached => EXIT_CAP,
    }
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "NO"
    }
}

fn sagbi<C: Coefficient>(ctx: &mut Ctx) -> Result<(Report, i32), Failure> {
    let ring = ctx.problem.polynomial_ring();
    let f0 = ctx
        .problem
        .section::<C>(&ctx.problem.f)
        .map_err(|e| Failure::input(e.to_string()))?;
    let res = sagbi_construct(&ring, &f0, ctx.max_passes)?;
    let mut report = ctx.report(CommandKind::Sagbi, status_text(res.status));
    report.passes = Some(res.passes);
    let mut basis = Section::new("basis");
    basis.entries = ctx.legend(&res.basis);
    report.sections.push(basis);
    if !res.basis.constant_subring_note().is_empty() {
        let mut s = Section::new("constants");
        for (k, c) in res.basis.constant_subring_note().iter().enumerate() {
            s.entries.push(
                Entry::poly(format!("c{}", k + 1), Space::X, c.to_string())
                    .with_note("constant generator; the coefficient ring is always contained"),
            );
        }
        report.sections.push(s);
    }
    if ctx.opts.trail {
        let mut m = res.basis.len() - res.trail.iter().map(|p| p.adjoined.len()).sum::<usize>();
        for (k, pass) in res.trail.iter().enumerate() {
            let mut s = Section::new(format!("pass {}", k + 1));
            for (j, p) in pass.kernel_generators.iter().enumerate() {
                let tag = ctx.tag(p, m);
                s.entries
                    .push(Entry::poly(format!("P{}", j + 1), Space::F, tag));
                s.entries.push(Entry::poly(
                    format!("P{}(F)", j + 1),
                    Space::X,
                    pass.evaluations[j].to_string(),
                ));
                s.entries.push(Entry::poly(
                    format!("reductum {}", j + 1),
                    Space::X,
                    pass.reducta[j].to_string(),
                ));
            }
            for (j, a) in pass.adjoined.iter().enumerate() {
                s.entries.push(Entry::poly(
                    format!("adjoined f{}", m + j + 1),
                    Space::X,
                    a.to_string(),
                ));
            }
            m += pass.adjoined.len();
            report.sections.push(s);
        }
    }
    if ctx.opts.certificates && res.status == Status::Completed {
        let mut s = Section::new("input representations");
        for (k, p) in f0.iter().enumerate() {
            let cert = s_reduce(p, &res.basis);
            let tag = cert.tag_polynomial(&res.basis.tag_ring());
            let shown = ctx.tag(&tag, res.basis.len());
            let note = format!(
                "reductum {}, replays {}",
                cert.final_reductum,
                yes(cert.replays(&res.basis))
            );
            s.entries
                .push(Entry::poly(format!("input {}", k + 1), Space::F, shown).with_note(note));
        }
        report.sections.push(s);
    }
    if res.status == Status::Completed {
        let verdict = sagbi_verify(&res.basis)?;
        report.checks.push(format!(
            "SAGBI criterion on the basis: {}",
            if verdict.is_verified() {
                "verified"
            } else {
                "FAILED"
            }
        ));
    }
    Ok((report, exit_for(res.status)))
}

fn sg<C: Coefficient>(ctx: &mut Ctx) -> Result<(Report, i32), Failure> {
    let ambient = ctx.ambient::<C>()?;
    let lines = ctx.ideal_section("G")?;
    let g0 = ctx
        .problem
        .section::<C>(lines)
        .map_err(|e| Failure::input(e.to_string()))?;
    let res = sg_construct(&g0, &ambient, ctx.max_passes)?;
    let m = ambient.len();
    let mut report = ctx.report(CommandKind::Sg, status_text(res.status));
    report.passes = Some(res.passes);
    report.legend = ctx.legend(&ambient);
    let mut basis = Section::new("ideal basis");
    for (k, g) in res.basis.generators().iter().enumerate() {
        basis.entries.push(Entry::poly(
            format!("g{}", k + 1),
            Space::X,
            g.value().to_string(),
        ));
    }
    report.sections.push(basis);
    if ctx.opts.trail {
        ctx.sg_trail(&res, m, &mut report);
    }
    if ctx.opts.certificates {
        let mut s = Section::new("basis in terms of the input (U)");
        for (k, row) in res.u_trace.iter().enumerate() {
            let coords = ctx.over_row(row, m);
            s.entries
                .push(Entry::vector(format!("g{}", k + 1), Space::F, coords));
        }
        report.sections.push(s);
        report
            .checks
            .push(format!("basis = U * input: {}", yes(res.u_trace_replays())));
    }
    if res.status == Status::Completed {
        let verdict = sg_verify(&res.basis)?;
        report.checks.push(format!(
            "SG criterion on the basis: {}",
            if verdict.is_verified() {
                "verified"
            } else {
                "FAILED"
            }
        ));
    }
    Ok((report, exit_for(res.status)))
}

fn syz<C: Coefficient>(ctx: &mut Ctx) -> Result<(Report, i32), Failure> {
    let ambient = ctx.ambient::<C>()?;
    let lines = ctx.ideal_section("H")?;
    let h0 = ctx
        .problem
        .section::<C>(lines)
        .map_err(|e| Failure::input(e.to_string()))?;
    let out = match subset_syzygy_generators(&h0, &ambient, ctx.max_passes) {
        Err(Error::IterationCap(n)) => {
            return Err(Failure {
                code: EXIT_CAP,
                message: format!("SG-basis construction did not complete within {n} passes"),
            })
        }
        other => other?,
    };
    let m = ambient.len();
    let mut report = ctx.report(CommandKind::Syz, "completed");
    report.passes = Some(out.sg.passes);
    report.legend = ctx.legend(&ambient);
    let mut input = Section::new("input");
    for (k, h) in h0.iter().enumerate() {
        input
            .entries
            .push(Entry::poly(format!("h{}", k + 1), Space::X, h.to_string()));
    }
    report.sections.push(input);
    let mut basis = Section::new("ideal basis");
    for (k, g) in out.sg.basis.generators().iter().enumerate() {
        basis.entries.push(Entry::poly(
            format!("g{}", k + 1),
            Space::X,
            g.value().to_string(),
        ));
    }
    report.sections.push(basis);
    if ctx.opts.trail {
        ctx.sg_trail(&out.sg, m, &mut report);
    }
    if ctx.opts.certificates {
        let mut w = Section::new("input in terms of the basis (W)");
        for (k, row) in out.matrices.w.iter().enumerate() {
            let coords = ctx.over_row(row, m);
            w.entries
                .push(Entry::vector(format!("h{}", k + 1), Space::F, coords));
        }
        report.sections.push(w);
        let mut u = Section::new("basis in terms of the input (U)");
        for (k, row) in out.matrices.u.iter().enumerate() {
            let coords = ctx.over_row(row, m);
            u.entries
                .push(Entry::vector(format!("g{}", k + 1), Space::F, coords));
        }
        report.sections.push(u);
        let mut b = Section::new("basis syzygies");
        for (k, s) in out.basis_syzygies.iter().enumerate() {
            let coords = ctx.over_row(&s.vector.coords, m);
            b.entries
                .push(Entry::vector(format!("b{}", k + 1), Space::F, coords));
        }
        report.sections.push(b);
    }
    let mut s = Section::new("syzygies");
    for (k, v) in out.vectors.iter().enumerate() {
        let coords = ctx.over_row(&v.coords, m);
        s.entries
            .push(Entry::vector(format!("s{}", k + 1), Space::F, coords));
    }
    report.sections.push(s);
    let values = out.sg.basis.values();
    report.checks.push(format!(
        "input = W * basis and basis = U * input: {}",
        yes(out.matrices.replays(&h0, &values))
    ));
    let all = out.vectors.iter().all(|v| v.annihilates(&h0));
    report.checks.push(format!(
        "all {} syzygies annihilate the input: {}",
        out.vectors.len(),
        yes(all)
    ));
    Ok((report, EXIT_OK))
}

fn reduce<C: Coefficient>(ctx: &mut Ctx) -> Result<(Report, i32), Failure> {
    let p = ctx.poly_flag::<C>()?;
    let f0 = ctx
        .problem
        .section::<C>(&ctx.problem.f)
        .map_err(|e| Failure::input(e.to_string()))?;
    let f = SubalgebraPresentation::new(&ctx.problem.polynomial_ring(), &f0)?;
    let cert = s_reduce(&p, &f);
    let status = if cert.final_reductum.is_zero() {
        "reduces to zero"
    } else {
        "nonzero final reductum"
    };
    let mut report = ctx.report(CommandKind::Reduce, status);
    report.legend = ctx.legend(&f);
    let mut s = Section::new("s-reduction");
    s.entries
        .push(Entry::poly("input", Space::X, cert.input.to_string()));
    s.entries.push(Entry::poly(
        "final reductum",
        Space::X,
        cert.final_reductum.to_string(),
    ));
    report.sections.push(s);
    if ctx.opts.certificates {
        let tags = f.tag_ring();
        let m = f.len();
        let mut steps = Section::new("steps");
        for (k, st) in cert.steps.iter().enumerate() {
            let term = Polynomial::term(
                &tags,
                st.coeff.clone(),
                sagbi_core::Monomial::new(st.exponents.clone()),
            );
            let shown = ctx.tag(&term, m);
            let lp = Polynomial::term(&f.ring().clone(), C::one(), st.monomial.clone());
            steps.entries.push(
                Entry::poly(format!("step {}", k + 1), Space::F, shown)
                    .with_note(format!("eliminates {lp}")),
            );
        }
        report.sections.push(steps);
        report.checks.push(format!(
            "input = steps + final reductum: {}",
            yes(cert.replays(&f))
        ));
    }
    Ok((report, EXIT_OK))
}

fn member<C: Coefficient>(ctx: &mut Ctx) -> Result<(Report, i32), Failure> {
    let p = ctx.poly_flag::<C>()?;
    if p.is_zero() {
        return Ok((
            ctx.report(CommandKind::Member, "member (trivially)"),
            EXIT_OK,
        ));
    }
    let ambient = ctx.ambient::<C>()?;
    let m = ambient.len();
    let mut report = ctx.report(CommandKind::Member, "");
    report.legend = ctx.legend(&ambient);
    let Some(cert) = subalgebra_member(&p, &ambient)? else {
        report.status = "not a member of the subalgebra".into();
        return Ok((report, EXIT_OK));
    };
    let mut status = vec!["member of the subalgebra".to_string()];
    if ctx.opts.certificates {
        let mut s = Section::new("subalgebra representation");
        let tag = cert.tag_polynomial(&ambient.tag_ring());
        let shown = ctx.tag(&tag, m);
        s.entries.push(Entry::poly("input", Space::F, shown));
        report.sections.push(s);
        report.checks.push(format!(
            "subalgebra representation replays: {}",
            yes(cert.replays(&ambient))
        ));
    }
    if ctx.problem.g.is_some() || ctx.problem.h.is_some() {
        let lines = ctx.ideal_section("G")?;
        let g0 = ctx
            .problem
            .section::<C>(lines)
            .map_err(|e| Failure::input(e.to_string()))?;
        let sg = sg_construct(&g0, &ambient, ctx.max_passes)?;
        if sg.status != Status::Completed {
            return Err(Failure {
                code: EXIT_CAP,
                message: format!(
                    "SG-basis construction did not complete within {} passes",
                    ctx.max_passes
                ),
            });
        }
        match ideal_member(&p, &sg.basis)? {
            None => status.push("not a member of the ideal".into()),
            Some(rep) => {
                status.push("member of the ideal".into());
                if ctx.opts.certificates {
                    let mut b = Section::new("ideal basis");
                    for (k, g) in sg.basis.generators().iter().enumerate() {
                        b.entries.push(Entry::poly(
                            format!("g{}", k + 1),
                            Space::X,
                            g.value().to_string(),
                        ));
                    }
                    report.sections.push(b);
                    let mut s = Section::new("ideal representation");
                    let row = rep.row(&sg.basis);
                    let coords = ctx.over_row(&row, m);
                    s.entries
                        .push(Entry::vector("coefficients", Space::F, coords));
                    report.sections.push(s);
                    report.checks.push(format!(
                        "ideal representation replays with height {}: {}",
                        rep.element.lp().map_or("-".into(), |lp| Polynomial::term(
                            &ctx.problem.polynomial_ring(),
                            C::one(),
                            lp.clone()
                        )
                        .to_string()),
                        yes(rep.replays(&sg.basis) && rep.satisfies_height_law(&sg.basis))
                    ));
                }
            }
        }
    }
    report.status = status.join("; ");
    Ok((report, EXIT_OK))
}
