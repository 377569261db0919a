use std::path::Path;
use std::sync::Arc;

use sagbi_cli::{parse_polynomial, parse_problem, run, Outcome, Report, Space};
use sagbi_core::{Integer, OrderKind, Polynomial, Rational, Ring};

fn subalg(args: &[&str]) -> Outcome {
    run(std::iter::once("subalg").chain(args.iter().copied()))
}

/// (golden name, arguments, expected exit code)
const GOLDEN: &[(&str, &[&str], i32)] = &[
    (
        "sagbi_two_pass",
        &[
            "sagbi",
            "examples/two_pass.sub",
            "--trail",
            "--certificates",
        ],
        0,
    ),
    (
        "sagbi_two_pass_capped",
        &["sagbi", "examples/two_pass.sub", "--max-passes", "1"],
        3,
    ),
    (
        "sagbi_rational",
        &["sagbi", "examples/rational.sub", "--trail"],
        0,
    ),
    (
        "sg_ideal",
        &["sg", "examples/ideal.sub", "--trail", "--certificates"],
        0,
    ),
    (
        "syzygies",
        &["syz", "examples/syzygies.sub", "--certificates"],
        0,
    ),
    ("syz_outside", &["syz", "examples/syz_outside.sub"], 2),
    (
        "member_ideal",
        &[
            "member",
            "examples/ideal.sub",
            "--poly",
            "2*y^2*(4*x^2*y^2 + 2*x*y^3)",
            "--certificates",
        ],
        0,
    ),
    (
        "member_outside",
        &["member", "examples/ideal.sub", "--poly", "x"],
        0,
    ),
    (
        "member_zero",
        &["member", "examples/ideal.sub", "--poly", "0"],
        0,
    ),
    (
        "reduce_bad_poly",
        &[
            "reduce",
            "examples/two_pass.sub",
            "--poly",
            "-3*x*y + f",
            "--certificates",
        ],
        2,
    ),
    (
        "reduce_product",
        &[
            "reduce",
            "examples/two_pass.sub",
            "--poly",
            "(2*x^2 + x*y)*2*y^2 - 1",
            "--certificates",
        ],
        0,
    ),
];

fn golden_text(out: &Outcome) -> String {
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.code, out.stdout, out.stderr
    )
}

#[test]
fn golden_outputs() {
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    for (name, args, code) in GOLDEN {
        let out = subalg(args);
        assert_eq!(out.code, *code, "{name}: {}", out.stderr);
        let path = Path::new("tests/golden").join(format!("{name}.txt"));
        let text = golden_text(&out);
        if update {
            std::fs::write(&path, &text).unwrap();
        } else {
            let want = std::fs::read_to_string(&path)
                .unwrap_or_else(|e| panic!("{}: {e}", path.display()));
            assert_eq!(text, want, "{name} differs from {}", path.display());
        }
    }
}

#[test]
fn byte_determinism() {
    for (name, args, _) in GOLDEN {
        let a = subalg(args);
        let b = subalg(args);
        assert_eq!(a, b, "{name}");
        let mut json_args = args.to_vec();
        json_args.push("--json");
        assert_eq!(subalg(&json_args), subalg(&json_args), "{name} --json");
    }
}

fn recanonicalize<C: sagbi_core::Coefficient>(report: &mut Report, xring: &Arc<Ring>) {
    let fnames: Vec<String> = (1..=report.legend.len().max(8))
        .map(|k| format!("f{k}"))
        .collect();
    let fring = Ring::with_kind(&fnames, OrderKind::DegRevLex).unwrap();
    let entries = report.legend.iter_mut().chain(
        report
            .sections
            .iter_mut()
            .flat_map(|s| s.entries.iter_mut()),
    );
    for e in entries {
        let ring = match e.space {
            Space::X => xring,
            Space::F => &fring,
        };
        for v in &mut e.values {
            let p: Polynomial<C> =
                parse_polynomial(v, ring).unwrap_or_else(|err| panic!("{v}: {err:?}"));
            *v = p.to_string();
        }
    }
}

#[test]
fn json_round_trips_to_text() {
    for (name, args, code) in GOLDEN {
        if *code == 2 {
            continue;
        }
        let text = subalg(args);
        let mut json_args = args.to_vec();
        json_args.push("--json");
        let json = subalg(&json_args);
        assert_eq!(json.code, text.code);
        let mut report: Report = serde_json::from_str(&json.stdout).unwrap();
        let problem = parse_problem(&std::fs::read_to_string(args[1]).unwrap()).unwrap();
        let xring = problem.polynomial_ring();
        match problem.ring {
            sagbi_cli::RingKind::Int => recanonicalize::<Integer>(&mut report, &xring),
            sagbi_cli::RingKind::Rat => recanonicalize::<Rational>(&mut report, &xring),
        }
        assert_eq!(report.to_text(), text.stdout, "{name}");
    }
}

#[test]
fn example_pass_counts() {
    let out = subalg(&["sagbi", "examples/two_pass.sub"]);
    assert!(out.stdout.contains("status: completed (2 passes)"));
    assert!(out.stdout.contains("f4 = 3*x*y"));
    let out = subalg(&["sg", "examples/ideal.sub"]);
    assert!(out.stdout.contains("g3 = 36*x*y^5"));
    let out = subalg(&["syz", "examples/syzygies.sub"]);
    assert!(out.stdout.contains("syzygies annihilate the input: yes"));
    assert!(out
        .stdout
        .contains("input = W * basis and basis = U * input: yes"));
    let out = subalg(&["member", "examples/two_pass.sub", "--poly", "0"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("status: member (trivially)"));
}

fn write_temp(name: &str, body: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("subalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

#[test]
fn parse_and_validation_errors_exit_2() {
    let cases = [
        (
            "empty.sub",
            "ring = int\nvars = x, y\norder = deglex\n[F]\n# nothing\n",
            ":4:1: empty generator section",
        ),
        (
            "implicit.sub",
            "ring = int\nvars = x, y\norder = deglex\n[F]\n2x + y\n",
            ":5:2: implicit multiplication",
        ),
        (
            "badvar.sub",
            "ring = int\nvars = x, y\norder = deglex\n[F]\nx*z\n",
            ":5:3: unknown variable `z`",
        ),
        (
            "noF.sub",
            "ring = int\nvars = x\norder = lex\n[H]\nx\n",
            "missing [F] section",
        ),
        (
            "ratlit.sub",
            "ring = int\nvars = x\norder = lex\n[F]\n1/2*x\n",
            ":5:1: rational literal",
        ),
    ];
    for (file, body, want) in cases {
        let path = write_temp(file, body);
        let out = subalg(&["sagbi", path.to_str().unwrap()]);
        assert_eq!(out.code, 2, "{file}");
        assert!(out.stderr.contains(want), "{file}: {}", out.stderr);
        assert!(out.stdout.is_empty());
    }
    let out = subalg(&["sg", "examples/two_pass.sub"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("needs a [G] or [H] section"));
    assert_eq!(subalg(&["member", "examples/two_pass.sub"]).code, 2);
    assert_eq!(
        subalg(&["sagbi", "examples/two_pass.sub", "--max-passes", "0"]).code,
        2
    );
    assert_eq!(subalg(&["sagbi", "examples/does-not-exist.sub"]).code, 2);
    assert_eq!(subalg(&["frobnicate"]).code, 2);
    assert_eq!(subalg(&["--help"]).code, 0);
}

#[test]
fn max_passes_in_file_and_flag() {
    let body = "ring = int\nvars = x, y\norder = deglex\nmax_passes = 1\n[F]\n4*x^2*y^2 + 2*x*y^3 + 3*x*y\n2*x^2 + x*y\n2*y^2\n";
    let path = write_temp("capped.sub", body);
    let p = path.to_str().unwrap();
    assert_eq!(subalg(&["sagbi", p]).code, 3);
    assert_eq!(subalg(&["sagbi", p, "--max-passes", "2"]).code, 0);
    assert_eq!(
        subalg(&["sg", "examples/ideal.sub", "--max-passes", "1"]).code,
        3
    );
}
