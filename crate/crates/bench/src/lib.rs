//! Fixed workloads shared by the benchmarks.

use std::sync::Arc;

use sagbi_core::{Integer, Monomial, OrderKind, Polynomial, Ring};

pub type P = Polynomial<Integer>;

/// A generating set for a subalgebra and, optionally, ideal generators.
pub struct Workload {
    pub name: &'static str,
    pub ring: Arc<Ring>,
    pub f: Vec<P>,
    pub g: Vec<P>,
}

/// `Σ c * x^e` in `ring`.
pub fn poly(ring: &Arc<Ring>, terms: &[(i64, &[u32])]) -> P {
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|(c, e)| (Integer::from(*c), Monomial::new(e.to_vec()))),
    )
}

fn xy() -> Arc<Ring> {
    Ring::with_kind(&["x", "y"], OrderKind::DegLex).expect("valid ring")
}

fn three_generators(r: &Arc<Ring>) -> Vec<P> {
    vec![
        poly(r, &[(2, &[2, 0]), (1, &[1, 1])]),
        poly(r, &[(2, &[0, 2])]),
        poly(r, &[(3, &[1, 1])]),
    ]
}

pub fn two_pass_sagbi() -> Workload {
    let r = xy();
    let f = vec![
        poly(&r, &[(4, &[2, 2]), (2, &[1, 3]), (3, &[1, 1])]),
        poly(&r, &[(2, &[2, 0]), (1, &[1, 1])]),
        poly(&r, &[(2, &[0, 2])]),
    ];
    Workload {
        name: "two_pass_sagbi",
        ring: r,
        f,
        g: Vec::new(),
    }
}

pub fn sg_two_generators() -> Workload {
    let r = xy();
    let f = three_generators(&r);
    let g = vec![
        poly(&r, &[(4, &[2, 2]), (2, &[1, 3])]),
        poly(&r, &[(18, &[2, 4])]),
    ];
    Workload {
        name: "sg_two_generators",
        ring: r,
        f,
        g,
    }
}

pub fn syzygies_three_generators() -> Workload {
    let r = xy();
    let f = three_generators(&r);
    let g = vec![
        poly(&r, &[(4, &[2, 2]), (2, &[1, 3])]),
        poly(&r, &[(10, &[2, 4]), (-4, &[1, 5])]),
        poly(&r, &[(36, &[1, 5])]),
    ];
    Workload {
        name: "syzygies_three_generators",
        ring: r,
        f,
        g,
    }
}

/// Univariate, lex; the SG-basis widens quickly with each pass.
pub fn univariate_wide() -> Workload {
    let r = Ring::with_kind(&["x"], OrderKind::Lex).expect("valid ring");
    let f = vec![
        poly(&r, &[(5, &[3])]),
        poly(&r, &[(-4, &[2]), (8, &[1])]),
        poly(&r, &[(2, &[3]), (4, &[1]), (5, &[0])]),
    ];
    let g = vec![
        poly(
            &r,
            &[
                (-24, &[5]),
                (48, &[4]),
                (-48, &[3]),
                (36, &[2]),
                (120, &[1]),
            ],
        ),
        poly(&r, &[(16, &[2]), (-32, &[1]), (-2, &[0])]),
    ];
    Workload {
        name: "univariate_wide",
        ring: r,
        f,
        g,
    }
}
