use super::*;
use crate::poly::OrderKind;
use crate::ring::Integer;
use crate::sagbi::{sagbi_construct, Status};

fn ring() -> Arc<Ring> {
    Ring::with_kind(&["x", "y"], OrderKind::DegLex).unwrap()
}

fn p(r: &Arc<Ring>, terms: &[(i64, [u32; 2])]) -> Polynomial<Integer> {
    Polynomial::from_terms(
        r,
        terms
            .iter()
            .map(|(c, e)| (Integer::from(*c), Monomial::new(e.to_vec()))),
    )
}

struct Fixture {
    r: Arc<Ring>,
    f: SubalgebraPresentation<Integer>,
    g1: Polynomial<Integer>,
    g2: Polynomial<Integer>,
    g3: Polynomial<Integer>,
}

fn fixture() -> Fixture {
    let r = ring();
    let gens = [
        p(&r, &[(2, [2, 0]), (1, [1, 1])]),
        p(&r, &[(2, [0, 2])]),
        p(&r, &[(3, [1, 1])]),
    ];
    let res = sagbi_construct(&r, &gens, 4).unwrap();
    assert_eq!(res.status, Status::Completed);
    assert_eq!(res.basis.generators(), &gens);
    Fixture {
        g1: p(&r, &[(4, [2, 2]), (2, [1, 3])]),
        g2: p(&r, &[(18, [2, 4])]),
        g3: p(&r, &[(36, [1, 5])]),
        f: res.basis,
        r,
    }
}

/// `c * f1^a f2^b f3^c` as an algebra element.
fn mono(f: &SubalgebraPresentation<Integer>, c: i64, e: [u32; 3]) -> AlgebraElement<Integer> {
    let tag = Polynomial::term(&f.tag_ring(), Integer::from(c), Monomial::new(e.to_vec()));
    AlgebraElement::from_tag(f, tag)
}

#[test]
fn g3_is_irreducible_by_g1_g2() {
    let fx = fixture();
    let ideal = IdealPresentation::new(&fx.f, &[fx.g1.clone(), fx.g2.clone()]).unwrap();
    let red = si_reduce(&fx.g3, &ideal).unwrap();
    assert_eq!(red.final_reductum, fx.g3);
    assert!(red.steps.is_empty());
    assert!(si_reduce(&Polynomial::zero(&fx.r), &ideal)
        .unwrap()
        .final_reductum
        .is_zero());
}

#[test]
fn known_q_vectors_evaluate_to_zero_and_g3() {
    let fx = fixture();
    let ideal = IdealPresentation::new(&fx.f, &[fx.g1.clone(), fx.g2.clone()]).unwrap();
    let q1 = [mono(&fx.f, 1, [0, 0, 2]), mono(&fx.f, -1, [1, 0, 0])];
    let q2 = [mono(&fx.f, 9, [0, 1, 0]), mono(&fx.f, -4, [0, 0, 0])];
    assert!(evaluate_vector(&q1, &ideal).is_zero());
    assert_eq!(evaluate_vector(&q2, &ideal).value(), &fx.g3);
}

#[test]
fn example_construction() {
    let fx = fixture();
    let res = sg_construct(&[fx.g1.clone(), fx.g2.clone()], &fx.f, 16).unwrap();
    assert_eq!(res.status, Status::Completed);
    assert_eq!(res.passes, 2);
    assert_eq!(res.trail[0].adjoined, vec![fx.g3.clone()]);
    assert!(res.trail[1].adjoined.is_empty());
    assert!(res.u_trace_replays());
    assert_eq!(
        res.basis.values(),
        vec![fx.g1.clone(), fx.g2.clone(), fx.g3.clone()]
    );
    assert!(sg_verify(&res.basis).unwrap().is_verified());
    for v in &res.trail[1].lt_syzygies {
        assert!(v.is_valid(&res.basis));
    }
}

#[test]
fn two_generators_fail_verification() {
    let fx = fixture();
    let ideal = IdealPresentation::new(&fx.f, &[fx.g1.clone(), fx.g2.clone()]).unwrap();
    match sg_verify(&ideal).unwrap() {
        SgVerdict::Failing { reductum, .. } => assert_eq!(reductum.normalize_sign(), fx.g3),
        SgVerdict::Verified => panic!("expected a failing lt-syzygy"),
    }
}

fn same_lt_module(
    f: &SubalgebraPresentation<Integer>,
    width: usize,
    a: &[Vec<Polynomial<Integer>>],
    b: &[Vec<Polynomial<Integer>>],
) -> bool {
    let ma = LtSyzygyModule::new(f, width, a).unwrap();
    let mb = LtSyzygyModule::new(f, width, b).unwrap();
    a.iter().all(|v| mb.contains(v).unwrap()) && b.iter().all(|v| ma.contains(v).unwrap())
}

fn lt_rows(vs: &[Vec<AlgebraElement<Integer>>]) -> Vec<Vec<Polynomial<Integer>>> {
    vs.iter()
        .map(|v| v.iter().map(|a| a.value().lt()).collect())
        .collect()
}

#[test]
fn pass_one_lt_generators_match_known_set() {
    let fx = fixture();
    let ideal = IdealPresentation::new(&fx.f, &[fx.g1.clone(), fx.g2.clone()]).unwrap();
    let q = lt_syzygy_generators(&ideal).unwrap();
    for v in &q {
        assert!(v.is_valid(&ideal));
    }
    let engine: Vec<_> = q.iter().map(LtSyzygyVector::lt_vector).collect();
    let known = lt_rows(&[
        vec![mono(&fx.f, 1, [0, 0, 2]), mono(&fx.f, -1, [1, 0, 0])],
        vec![mono(&fx.f, 9, [0, 1, 0]), mono(&fx.f, -4, [0, 0, 0])],
    ]);
    assert!(same_lt_module(&fx.f, 2, &engine, &known));
}

#[test]
fn pass_two_lt_generators_match_known_set() {
    let fx = fixture();
    let ideal =
        IdealPresentation::new(&fx.f, &[fx.g1.clone(), fx.g2.clone(), fx.g3.clone()]).unwrap();
    let q = lt_syzygy_generators(&ideal).unwrap();
    let engine: Vec<_> = q.iter().map(LtSyzygyVector::lt_vector).collect();
    let z = AlgebraElement::zero(&fx.f);
    let known = lt_rows(&[
        vec![
            mono(&fx.f, 1, [0, 0, 2]),
            mono(&fx.f, -1, [1, 0, 0]),
            z.clone(),
        ],
        vec![
            mono(&fx.f, 3, [0, 1, 1]),
            z.clone(),
            mono(&fx.f, -1, [1, 0, 0]),
        ],
        vec![
            z.clone(),
            mono(&fx.f, 3, [0, 1, 0]),
            mono(&fx.f, -1, [0, 0, 1]),
        ],
        vec![mono(&fx.f, -9, [0, 1, 0]), mono(&fx.f, 4, [0, 0, 0]), z],
    ]);
    assert!(same_lt_module(&fx.f, 3, &engine, &known));
}

#[test]
fn membership() {
    let fx = fixture();
    let res = sg_construct(&[fx.g1.clone(), fx.g2.clone()], &fx.f, 16).unwrap();
    let ideal = &res.basis;
    let f2 = fx.f.generators()[1].clone();
    let member = &f2 * &fx.g1;
    let rep = ideal_member(&member, ideal).unwrap().unwrap();
    assert!(rep.replays(ideal));
    assert!(rep.satisfies_height_law(ideal));
    assert!(ideal_member(&f2, ideal).unwrap().is_none());
    let zero = ideal_member(&Polynomial::zero(&fx.r), ideal)
        .unwrap()
        .unwrap();
    assert!(zero.parts.is_empty());
    assert!(matches!(
        ideal_member(&p(&fx.r, &[(1, [1, 0])]), ideal),
        Err(Error::NotInSubalgebra(_))
    ));
    let unverified = IdealPresentation::new(&fx.f, std::slice::from_ref(&fx.g1)).unwrap();
    assert!(matches!(
        ideal_member(&fx.g1, &unverified),
        Err(Error::IdealNotVerified)
    ));
}

#[test]
fn single_and_duplicate_generators() {
    let fx = fixture();
    let single = IdealPresentation::new(&fx.f, std::slice::from_ref(&fx.g1)).unwrap();
    assert!(lt_syzygy_generators(&single).unwrap().is_empty());
    assert!(sg_verify(&single).unwrap().is_verified());
    let res = sg_construct(std::slice::from_ref(&fx.g1), &fx.f, 4).unwrap();
    assert_eq!((res.status, res.passes), (Status::Completed, 1));

    let dup = sg_construct(&[fx.g1.clone(), fx.g1.clone()], &fx.f, 4).unwrap();
    assert_eq!(dup.status, Status::Completed);
    assert_eq!(dup.basis.len(), 2);
}

#[test]
fn non_member_generator_is_rejected() {
    let fx = fixture();
    let x = p(&fx.r, &[(1, [1, 0])]);
    assert!(matches!(
        sg_construct(&[x], &fx.f, 4),
        Err(Error::NotInSubalgebra(_))
    ));
}
