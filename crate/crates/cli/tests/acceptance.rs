//! One line per acceptance criterion. Exits nonzero when a criterion
//! fails, unless it is listed in `UNATTAINABLE` and still fails the same
//! way.

use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sagbi_cli::{parse_polynomial, run};
use sagbi_core::grobner::evaluation_kernel;
use sagbi_core::poly::tx_degree;
use sagbi_core::ring::ideal_membership_witness;
use sagbi_core::sgbasis::{evaluate_vector, LtSyzygyModule};
use sagbi_core::{
    groebner_basis, ideal_member, lt_syzygy_generators, nonneg_solutions, s_reduce,
    sagbi_construct, sagbi_verify, sg_construct, sg_syzygy_generators, sg_verify,
    subset_syzygy_generators, AlgebraElement, Coefficient, Error, IdealPresentation, Integer,
    Monomial, OrderKind, Polynomial, Ring, Status, SubalgebraPresentation, SyzygyModule,
    SyzygyVector,
};

type P = Polynomial<Integer>;
type Outcome = Result<String, String>;

/// Criteria that cannot hold as written; see the README.
const UNATTAINABLE: &[&str] = &["5"];

fn ring(names: &[&str], kind: OrderKind) -> Arc<Ring> {
    Ring::with_kind(names, kind).unwrap()
}

fn xy() -> Arc<Ring> {
    ring(&["x", "y"], OrderKind::DegLex)
}

fn px(r: &Arc<Ring>, s: &str) -> P {
    parse_polynomial(s, r).unwrap_or_else(|e| panic!("{s}: {e:?}"))
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let t = start.elapsed();
    ensure(t < limit, format!("took {t:.2?}, limit {limit:?}"))
}

fn sagbi_basis(r: &Arc<Ring>, gens: &[&str]) -> SubalgebraPresentation<Integer> {
    let f: Vec<P> = gens.iter().map(|s| px(r, s)).collect();
    let res = sagbi_construct(r, &f, 8).unwrap();
    assert_eq!(res.status, Status::Completed);
    res.basis
}

fn ambient() -> SubalgebraPresentation<Integer> {
    sagbi_basis(&xy(), &["2*x^2 + x*y", "2*y^2", "3*x*y"])
}

/// An algebra element from a tag polynomial written over `f1, f2, ...`.
fn tagged(f: &SubalgebraPresentation<Integer>, s: &str) -> AlgebraElement<Integer> {
    let names: Vec<String> = (1..=f.len()).map(|k| format!("f{k}")).collect();
    let named = Ring::with_kind(&names, OrderKind::DegRevLex).unwrap();
    let p: P = parse_polynomial(s, &named).unwrap();
    let tag = Polynomial::from_terms(
        &f.tag_ring(),
        p.terms().iter().map(|t| (t.coeff.clone(), t.mono.clone())),
    );
    AlgebraElement::from_tag(f, tag)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let r = xy();
    let f0: Vec<P> = ["4*x^2*y^2 + 2*x*y^3 + 3*x*y", "2*x^2 + x*y", "2*y^2"]
        .iter()
        .map(|s| px(&r, s))
        .collect();
    let res = sagbi_construct(&r, &f0, 16).map_err(|e| e.to_string())?;
    ensure(res.status == Status::Completed, "did not complete")?;
    ensure(res.passes == 2, format!("{} passes", res.passes))?;
    let three_xy = px(&r, "3*x*y");
    ensure(
        res.trail[0].adjoined.len() == 1 && res.trail[0].adjoined[0].normalize_sign() == three_xy,
        format!("pass 1 adjoined {:?}", res.trail[0].adjoined),
    )?;
    ensure(
        sagbi_verify(&res.basis)
            .map_err(|e| e.to_string())?
            .is_verified(),
        "sagbi_verify failed",
    )?;
    let mut expected = f0.clone();
    expected.push(three_xy);
    let reference = SubalgebraPresentation::new(&r, &expected).unwrap();
    for g in &expected {
        ensure(
            s_reduce(g, &res.basis).final_reductum.is_zero(),
            format!("{g} does not reduce via the output"),
        )?;
    }
    for g in res.basis.generators() {
        ensure(
            s_reduce(g, &reference).final_reductum.is_zero(),
            format!("{g} does not reduce via the expected basis"),
        )?;
    }
    let cli = run(["subalg", "sagbi", "examples/two_pass.sub"]);
    ensure(
        cli.code == 0 && cli.stdout.contains("f4 = 3*x*y"),
        "CLI report lacks 3*x*y",
    )?;
    within(start, Duration::from_secs(5))?;
    Ok(format!(
        "2 passes, adjoined 3*x*y, verified ({:.2?})",
        start.elapsed()
    ))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let r = xy();
    let check = |targets: &[&str], expected: &[&str]| -> Result<(), String> {
        let t: Vec<P> = targets.iter().map(|s| px(&r, s)).collect();
        let kernel = evaluation_kernel(&t, &r).map_err(|e| e.to_string())?;
        let tags = Ring::tags(t.len());
        let want: Vec<P> = expected.iter().map(|s| px(&tags, s)).collect();
        let want = groebner_basis(&tags, &want).map_err(|e| e.to_string())?;
        ensure(
            kernel.same_ideal(&want),
            format!("kernel of {targets:?} differs"),
        )
    };
    check(&["4*x^2*y^2", "2*x^2", "2*y^2"], &["y1 - y2*y3"])?;
    check(
        &["4*x^2*y^2", "2*x^2", "2*y^2", "3*x*y"],
        &["y1 - y2*y3", "9*y1 - 4*y4^2", "9*y2*y3 - 4*y4^2"],
    )?;
    within(start, Duration::from_secs(5))?;
    Ok(format!(
        "both kernels equal by mutual normal form ({:.2?})",
        start.elapsed()
    ))
}

fn criterion_3() -> Outcome {
    let r = ring(&["x"], OrderKind::DegLex);
    let f = [px(&r, "x^2"), px(&r, "x^2 + 1")];
    let tags = Ring::tags(2);
    let p = px(&tags, "y2 - y1");
    let d = tx_degree(&p, &f).map_err(|e| e.to_string())?;
    ensure(
        d == Some(Monomial::new(vec![2])),
        format!("tx_degree = {d:?}"),
    )?;
    let diff = &f[1] - &f[0];
    ensure(
        diff.lp() == Some(&Monomial::new(vec![0])),
        format!("lp(f2 - f1) = {:?}", diff.lp()),
    )?;
    Ok("tx_degree(y2 - y1) = x^2, lp(f2 - f1) = 1".into())
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let f = ambient();
    let r = f.ring().clone();
    let g: Vec<P> = ["4*x^2*y^2 + 2*x*y^3", "18*x^2*y^4"]
        .iter()
        .map(|s| px(&r, s))
        .collect();
    let g3 = px(&r, "36*x*y^5");
    let res = sg_construct(&g, &f, 16).map_err(|e| e.to_string())?;
    ensure(
        res.status == Status::Completed && res.passes == 2,
        format!("{:?} after {} passes", res.status, res.passes),
    )?;
    let adjoined: Vec<P> = res
        .trail
        .iter()
        .flat_map(|p| p.adjoined.iter().map(P::normalize_sign))
        .collect();
    ensure(
        adjoined == vec![g3.clone()],
        format!("adjoined {adjoined:?}"),
    )?;
    ensure(
        sg_verify(&res.basis)
            .map_err(|e| e.to_string())?
            .is_verified(),
        "sg_verify failed",
    )?;

    let ideal = IdealPresentation::new(&f, &g).map_err(|e| e.to_string())?;
    let expected_q = [["f3^2", "-f1"], ["9*f2", "-4"]];
    let mut evals: Vec<P> = expected_q
        .iter()
        .map(|q| {
            let coords: Vec<_> = q.iter().map(|s| tagged(&f, s)).collect();
            evaluate_vector(&coords, &ideal).value().clone()
        })
        .collect();
    evals.sort_by_key(|p| p.len());
    ensure(
        evals == vec![P::zero(&r), g3],
        format!("fixture evaluations {evals:?}"),
    )?;

    let engine: Vec<Vec<P>> = lt_syzygy_generators(&ideal)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|v| v.lt_vector())
        .collect();
    let reference: Vec<Vec<P>> = expected_q
        .iter()
        .map(|q| q.iter().map(|s| tagged(&f, s).value().lt()).collect())
        .collect();
    let me = LtSyzygyModule::new(&f, 2, &engine).map_err(|e| e.to_string())?;
    let mp = LtSyzygyModule::new(&f, 2, &reference).map_err(|e| e.to_string())?;
    for v in &reference {
        ensure(
            me.contains(v).map_err(|e| e.to_string())?,
            "reference vector outside the engine module",
        )?;
    }
    for v in &engine {
        ensure(
            mp.contains(v).map_err(|e| e.to_string())?,
            "engine vector outside the reference module",
        )?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!(
        "2 passes, adjoined 36*x*y^5, fixture gives {{0, 36*x*y^5}}, modules equal ({:.2?})",
        start.elapsed()
    ))
}

const EXPECTED_SYZYGIES: [[&str; 3]; 4] = [
    ["f3^2 - f1*f2", "-f1", "0"],
    ["3*f2*f3", "0", "-f1"],
    ["3*f2^2", "3*f2", "-f3"],
    ["-5*f2", "4", "1"],
];

/// Sub-items (a)-(d) on one `H`; returns the failing items.
fn syzygy_items(h_text: [&str; 3]) -> Vec<String> {
    let f = ambient();
    let r = f.ring().clone();
    let h: Vec<P> = h_text.iter().map(|s| px(&r, s)).collect();
    let mut failed = Vec::new();
    let reference: Vec<Vec<AlgebraElement<Integer>>> = EXPECTED_SYZYGIES
        .iter()
        .map(|v| v.iter().map(|s| tagged(&f, s)).collect())
        .collect();
    let bad: Vec<usize> = reference
        .iter()
        .enumerate()
        .filter(|(_, v)| !SyzygyVector { coords: v.to_vec() }.annihilates(&h))
        .map(|(k, _)| k + 1)
        .collect();
    if !bad.is_empty() {
        failed.push(format!("(b) reference vectors {bad:?} do not annihilate H"));
    }
    match subset_syzygy_generators(&h, &f, 8) {
        Err(e) => {
            failed.push(format!("(a) no generators: {e}"));
            failed.push("(c) no W, U".into());
            failed.push("(d) no module to test against".into());
        }
        Ok(out) => {
            if !out.vectors.iter().all(|v| v.annihilates(&h)) {
                failed.push("(a) an emitted vector does not annihilate H".into());
            }
            if !out.matrices.replays(&h, &out.sg.basis.values()) {
                failed.push("(c) W, U do not replay".into());
            }
            match SyzygyModule::new(&f, 3, &out.vectors) {
                Err(e) => failed.push(format!("(d) {e}")),
                Ok(module) => {
                    let outside: Vec<usize> = reference
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| module.express(v).is_none())
                        .map(|(k, _)| k + 1)
                        .collect();
                    if !outside.is_empty() {
                        failed.push(format!(
                            "(d) reference vectors {outside:?} are not in the emitted module"
                        ));
                    }
                }
            }
        }
    }
    failed
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let given = syzygy_items(["4*x^2*y^2 + 2*x*y^3", "10*x^2*y^4 + 4*x*y^5", "36*x*y^5"]);
    let amended = syzygy_items(["4*x^2*y^2 + 2*x*y^3", "10*x^2*y^4 - 4*x*y^5", "36*x*y^5"]);
    let elapsed = start.elapsed();
    let companion = if amended.is_empty() {
        "with h2 = g2 - f2*g1 = 10*x^2*y^4 - 4*x*y^5 all of (a)-(d) pass".to_string()
    } else {
        format!("amended H also fails: {}", amended.join("; "))
    };
    if elapsed > Duration::from_secs(15) {
        return Err(format!("took {elapsed:.2?}; {companion}"));
    }
    if given.is_empty() {
        Ok(format!(
            "given H: (a)-(d) pass; {companion} ({elapsed:.2?})"
        ))
    } else {
        Err(format!(
            "given H (h2 = 10*x^2*y^4 + 4*x*y^5 is not in A): {}; {companion} ({elapsed:.2?})",
            given.join("; ")
        ))
    }
}

fn random_poly(
    rng: &mut ChaCha8Rng,
    r: &Arc<Ring>,
    max_deg: u32,
    max_terms: usize,
    nonconstant: bool,
) -> P {
    loop {
        let n = r.nvars();
        let terms: Vec<(Integer, Monomial)> = (0..rng.gen_range(1..=max_terms))
            .map(|_| {
                let mut e = vec![0u32; n];
                let d = rng.gen_range(0..=max_deg);
                for _ in 0..d {
                    e[rng.gen_range(0..n)] += 1;
                }
                let mut c = rng.gen_range(1..=5i64);
                if rng.gen_bool(0.4) {
                    c = -c;
                }
                (Integer::from(c), Monomial::new(e))
            })
            .collect();
        let p = Polynomial::from_terms(r, terms);
        if !p.is_zero() && (!nonconstant || !p.is_constant()) {
            return p;
        }
    }
}

const SG_SECOND_PASS_WIDTH: usize = 4;

fn random_ring(rng: &mut ChaCha8Rng) -> Arc<Ring> {
    let kind = [OrderKind::Lex, OrderKind::DegLex, OrderKind::DegRevLex][rng.gen_range(0..3)];
    if rng.gen_bool(0.3) {
        ring(&["x"], kind)
    } else {
        ring(&["x", "y"], kind)
    }
}

#[derive(Default)]
struct ReplayStats {
    s_certs: usize,
    sagbi_done: usize,
    sg_done: usize,
    sg_bounded: usize,
    lt_vectors: usize,
    representations: usize,
    syzygies: usize,
    matrices: usize,
}

fn replay_case(rng: &mut ChaCha8Rng, stats: &mut ReplayStats) -> Result<(), String> {
    let r = random_ring(rng);
    let f0: Vec<P> = (0..rng.gen_range(1..=3))
        .map(|_| random_poly(rng, &r, 3, 3, true))
        .collect();
    let res = sagbi_construct(&r, &f0, 2).map_err(|e| e.to_string())?;
    let probes: Vec<P> = f0
        .iter()
        .cloned()
        .chain((0..2).map(|_| random_poly(rng, &r, 3, 3, false)))
        .collect();
    for q in &probes {
        let cert = s_reduce(q, &res.basis);
        ensure(
            cert.replays(&res.basis),
            format!("s-reduction of {q} by {f0:?} does not replay"),
        )?;
        stats.s_certs += 1;
    }
    if res.status != Status::Completed {
        return Ok(());
    }
    stats.sagbi_done += 1;
    let f = res.basis;
    let m = f.len();
    let tags = f.tag_ring();
    let random_element = |rng: &mut ChaCha8Rng| loop {
        let tag = random_poly(rng, &tags, 2, 2, false);
        let a = AlgebraElement::from_tag(&f, tag);
        if !a.is_zero() {
            return a;
        }
    };
    let g: Vec<AlgebraElement<Integer>> = (0..rng.gen_range(1..=2))
        .map(|_| random_element(rng))
        .collect();
    let gv: Vec<P> = g.iter().map(|a| a.value().clone()).collect();
    // A second pass over a wide first-pass basis can grow it tenfold; only
    // narrow ones get it.
    let mut sg = sg_construct(&gv, &f, 1).map_err(|e| e.to_string())?;
    if sg.status != Status::Completed {
        if sg.basis.values().len() > SG_SECOND_PASS_WIDTH {
            stats.sg_bounded += 1;
        } else {
            sg = sg_construct(&gv, &f, 2).map_err(|e| e.to_string())?;
        }
    }
    ensure(sg.u_trace_replays(), "cofactor trail U does not replay")?;
    stats.matrices += 1;
    for pass in &sg.trail {
        let width = pass.lt_syzygies.first().map_or(0, |v| v.coords.len());
        let prefix =
            IdealPresentation::from_elements(&f, sg.basis.generators()[..width].to_vec()).unwrap();
        for v in &pass.lt_syzygies {
            ensure(v.is_valid(&prefix), "lt-syzygy vector does not replay")?;
            stats.lt_vectors += 1;
        }
    }
    if sg.status != Status::Completed {
        return Ok(());
    }
    stats.sg_done += 1;
    let basis_values = sg.basis.values();
    for b in sg_syzygy_generators(&sg.basis).map_err(|e| e.to_string())? {
        ensure(
            b.vector.annihilates(&basis_values),
            "basis syzygy does not annihilate G",
        )?;
        ensure(
            b.vector.coords.iter().all(|a| a.replays(&f)),
            "syzygy coordinate does not replay over F",
        )?;
        stats.syzygies += 1;
    }
    let member = g.iter().fold(AlgebraElement::zero(&f), |acc, gi| {
        acc.add(&random_element(rng).mul(gi))
    });
    if let Some(rep) = ideal_member(member.value(), &sg.basis).map_err(|e| e.to_string())? {
        ensure(rep.replays(&sg.basis), "SG-representation does not replay")?;
        ensure(
            rep.satisfies_height_law(&sg.basis),
            "SG-representation violates the height law",
        )?;
        ensure(
            rep.parts.iter().all(|(a, _)| a.replays(&f)),
            "representation coefficient does not replay",
        )?;
        stats.representations += 1;
    } else {
        return Err(format!(
            "{} is in the ideal but was not recognised",
            member.value()
        ));
    }
    let out = match subset_syzygy_generators(&gv, &f, 2) {
        Ok(o) => o,
        Err(Error::IterationCap(_)) => return Ok(()),
        Err(e) => return Err(e.to_string()),
    };
    ensure(
        out.matrices.replays(&gv, &out.sg.basis.values()),
        "W, U do not replay",
    )?;
    for v in &out.vectors {
        ensure(v.annihilates(&gv), "subset syzygy does not annihilate H")?;
        stats.syzygies += 1;
    }
    stats.matrices += 1;
    let _ = m;
    Ok(())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5a6b1);
    let mut stats = ReplayStats::default();
    for case in 0..200 {
        let t = Instant::now();
        replay_case(&mut rng, &mut stats).map_err(|e| format!("case {case}: {e}"))?;
        if std::env::var_os("ACCEPTANCE_TRACE").is_some() {
            eprintln!("case {case}: {:.2?}", t.elapsed());
        }
    }
    Ok(format!(
        "200 cases: {} s-certificates, {} SAGBI and {} SG completions ({} SG runs held to one pass), {} lt-vectors, {} representations, {} syzygies, {} matrix replays ({:.2?})",
        stats.s_certs,
        stats.sagbi_done,
        stats.sg_done,
        stats.sg_bounded,
        stats.lt_vectors,
        stats.representations,
        stats.syzygies,
        stats.matrices,
        start.elapsed()
    ))
}

fn grid_solutions(cols: &[Monomial], target: &Monomial) -> Vec<Vec<u32>> {
    let k = cols.len();
    let bound = target.degree() as u32;
    let mut out = Vec::new();
    let mut e = vec![0u32; k];
    loop {
        let mut acc = vec![0u32; target.arity()];
        for (c, &n) in cols.iter().zip(&e) {
            for (a, x) in acc.iter_mut().zip(c.exponents()) {
                *a += n * x;
            }
        }
        if acc == target.exponents() {
            out.push(e.clone());
        }
        let mut i = 0;
        loop {
            if i == k {
                out.sort();
                return out;
            }
            if e[i] < bound {
                e[i] += 1;
                break;
            }
            e[i] = 0;
            i += 1;
        }
    }
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0xd10);
    let mut systems = 0;
    let mut solutions = 0;
    for _ in 0..400 {
        let nvars = rng.gen_range(1..=3);
        let k = rng.gen_range(1..=4);
        let cols: Vec<Monomial> = (0..k)
            .map(|_| loop {
                let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=3)).collect();
                if e.iter().any(|&x| x > 0) {
                    break Monomial::new(e);
                }
            })
            .collect();
        let target = loop {
            let e: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=4)).collect();
            if e.iter().sum::<u32>() <= 8 {
                break Monomial::new(e);
            }
        };
        let mut got = nonneg_solutions(&cols, &target).map_err(|e| e.to_string())?;
        got.sort();
        let want = grid_solutions(&cols, &target);
        ensure(
            got == want,
            format!("{cols:?} -> {target:?}: {got:?} vs {want:?}"),
        )?;
        systems += 1;
        solutions += want.len();
    }
    let mut present = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=4);
        let gens: Vec<Integer> = (0..n)
            .map(|_| {
                if rng.gen_bool(0.15) {
                    Integer::from(0)
                } else {
                    Integer::from(rng.gen_range(-30i64..=30))
                }
            })
            .collect();
        let c = Integer::from(rng.gen_range(-60i64..=60));
        let g = gens
            .iter()
            .fold(Integer::from(0), |acc, x| num_gcd(&acc, x));
        let divisible = if g == Integer::from(0) {
            c == Integer::from(0)
        } else {
            &c % &g == Integer::from(0)
        };
        let w = ideal_membership_witness(&c, &gens);
        ensure(
            w.is_some() == divisible,
            format!("{c} in ({gens:?}): witness {w:?}, gcd {g}"),
        )?;
        if let Some(w) = w {
            let sum = w
                .iter()
                .zip(&gens)
                .fold(Integer::from(0), |acc, (a, b)| acc + a * b);
            ensure(
                sum == c,
                format!("witness {w:?} for {c} in ({gens:?}) does not replay"),
            )?;
            present += 1;
        }
    }
    Ok(format!(
        "{systems} systems ({solutions} solutions) match the grid; 500 witness instances ({present} members) match gcd divisibility ({:.2?})",
        start.elapsed()
    ))
}

fn num_gcd(a: &Integer, b: &Integer) -> Integer {
    let (g, _, _) = Integer::xgcd(a, b);
    g
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6b);
    let mut pairs = 0;
    for case in 0..100 {
        let r = random_ring(&mut rng);
        let gens: Vec<P> = (0..rng.gen_range(1..=3))
            .map(|_| random_poly(&mut rng, &r, 3, 3, false))
            .collect();
        let basis = groebner_basis(&r, &gens).map_err(|e| e.to_string())?;
        for g in &gens {
            ensure(
                basis.normal_form(g).remainder.is_zero(),
                format!("case {case}: input {g} does not reduce"),
            )?;
        }
        for s in basis.pair_polynomials() {
            ensure(
                basis.normal_form(&s).remainder.is_zero(),
                format!("case {case}: pair polynomial {s} does not reduce"),
            )?;
            pairs += 1;
        }
        for _ in 0..3 {
            let p = random_poly(&mut rng, &r, 4, 4, false);
            let once = basis.normal_form(&p).remainder;
            ensure(
                basis.normal_form(&once).remainder == once,
                format!("case {case}: normal form of {p} not idempotent"),
            )?;
        }
    }
    Ok(format!(
        "100 ideals, {pairs} S/G-polynomials reduce to 0, normal form idempotent ({:.2?})",
        start.elapsed()
    ))
}

fn criterion_9() -> Outcome {
    let runs: &[&[&str]] = &[
        &[
            "sagbi",
            "examples/two_pass.sub",
            "--trail",
            "--certificates",
        ],
        &["sagbi", "examples/rational.sub", "--json"],
        &["sg", "examples/ideal.sub", "--trail", "--certificates"],
        &["sg", "examples/ideal.sub", "--json"],
        &["syz", "examples/syzygies.sub", "--certificates"],
        &["syz", "examples/syz_outside.sub"],
        &["member", "examples/ideal.sub", "--poly", "0"],
        &[
            "reduce",
            "examples/two_pass.sub",
            "--poly",
            "x^2*y^2",
            "--certificates",
        ],
    ];
    for args in runs {
        let argv = || std::iter::once("subalg").chain(args.iter().copied());
        let a = run(argv());
        let b = run(argv());
        ensure(a == b, format!("{args:?} differs between runs"))?;
    }
    Ok(format!(
        "{} golden invocations byte-identical across two runs",
        runs.len()
    ))
}

type Criterion = (&'static str, &'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 9] = [
        ("1", "two-pass SAGBI completion", criterion_1),
        ("2", "kernel golden test", criterion_2),
        ("3", "grading versus leading power products", criterion_3),
        ("4", "SG-basis completion", criterion_4),
        ("5", "syzygies of the given H", criterion_5),
        ("6", "certificate replay, 200 random cases", criterion_6),
        ("7", "diophantine and witness oracles", criterion_7),
        ("8", "Groebner-over-Z self-consistency", criterion_8),
        ("9", "CLI determinism", criterion_9),
    ];
    let start = Instant::now();
    let mut unexpected = Vec::new();
    for (id, name, check) in criteria {
        let outcome = check();
        let known = UNATTAINABLE.contains(&id);
        match (&outcome, known) {
            (Ok(detail), false) => println!("criterion {id} PASS  {name}: {detail}"),
            (Err(why), true) => {
                println!("criterion {id} FAIL  {name} (expected, unattainable as stated): {why}")
            }
            (Err(why), false) => {
                println!("criterion {id} FAIL  {name}: {why}");
                unexpected.push(id);
            }
            (Ok(detail), true) => {
                println!("criterion {id} PASS  {name} (listed as unattainable): {detail}");
                unexpected.push(id);
            }
        }
    }
    println!("acceptance suite finished in {:.2?}", start.elapsed());
    if !unexpected.is_empty() {
        println!("unexpected outcomes: {unexpected:?}");
        std::process::exit(1);
    }
}
