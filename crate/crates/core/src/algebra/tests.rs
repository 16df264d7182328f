use super::*;
use crate::catalog::{chain, example, square_zero};
use crate::linalg::{frac, rat};
use proptest::prelude::*;

fn alg(name: &str) -> LocalAlgebra {
    LocalAlgebra::from_presentation(&example(name).unwrap()).unwrap()
}

fn e(n: usize, i: usize) -> Vec<Rational> {
    unit(n, i)
}

#[test]
fn accepts_square_zero_constants() {
    let n = 4;
    let mut table = vec![vec![vec![rat(0); n]; n]; n];
    for j in 0..n {
        table[0][j] = e(n, j);
        table[j][0] = e(n, j);
    }
    let labels = ["1", "a", "b", "c"].map(String::from).to_vec();
    let a = LocalAlgebra::from_structure_constants(table, labels).unwrap();
    assert_eq!(a.nilpotency_index(), 1);
    assert_eq!(a.socle().dim(), 3);
}

#[test]
fn rejects_idempotent_in_maximal_ideal() {
    let n = 2;
    let table = vec![vec![e(n, 0), e(n, 1)], vec![e(n, 1), e(n, 1)]];
    let err = LocalAlgebra::from_structure_constants(table, vec!["1".into(), "b".into()]).unwrap_err();
    assert_eq!(err, AlgebraError::NotLocal("b is not nilpotent".into()));
}

#[test]
fn rejects_non_associative_constants() {
    // a^2 = b, b·a = 0 but a·b = a·a^2 would have to be a^3 = b·a
    let n = 3;
    let mut table = vec![vec![vec![rat(0); n]; n]; n];
    for j in 0..n {
        table[0][j] = e(n, j);
        table[j][0] = e(n, j);
    }
    table[1][1] = e(n, 2);
    table[1][2] = e(n, 1);
    table[2][1] = e(n, 1);
    let labels = ["1", "a", "b"].map(String::from).to_vec();
    assert!(matches!(
        LocalAlgebra::from_structure_constants(table, labels),
        Err(AlgebraError::NotAssociative { .. })
    ));
}

#[test]
fn rejects_missing_unit_and_asymmetry() {
    let n = 2;
    let zero = vec![vec![vec![rat(0); n]; n]; n];
    assert_eq!(
        LocalAlgebra::from_structure_constants(zero, vec!["a".into(), "b".into()]),
        Err(AlgebraError::NoUnit)
    );
    let n = 3;
    let mut table = vec![vec![vec![rat(0); n]; n]; n];
    for j in 0..n {
        table[0][j] = e(n, j);
        table[j][0] = e(n, j);
    }
    table[1][2] = e(n, 2);
    let labels = ["1", "a", "b"].map(String::from).to_vec();
    assert!(matches!(
        LocalAlgebra::from_structure_constants(table, labels),
        Err(AlgebraError::NotCommutative { .. })
    ));
}

#[test]
fn presentations_give_expected_dimensions() {
    let a = LocalAlgebra::from_presentation(&chain(4)).unwrap();
    assert_eq!(a.labels(), ["1", "t", "t^2", "t^3"]);
    assert_eq!(alg("example4").dim(), 5);
    let ex3 = alg("example3");
    assert_eq!(ex3.dim(), 6);
    assert!(ex3.is_graded());
    assert!(!alg("example4").is_graded());
}

#[test]
fn filtrations() {
    let a = LocalAlgebra::from_presentation(&chain(4)).unwrap();
    assert_eq!(a.nilpotency_index(), 3);
    assert_eq!(&a.filtration().dims()[1..], [3, 2, 1]);

    let ex5 = alg("example5");
    assert_eq!(ex5.nilpotency_index(), 2);
    assert_eq!(ex5.filtration().power(2).dim(), 1);
    assert!(ex5.filtration().power(2).contains(&e(5, 4)));

    assert_eq!(alg("example1").nilpotency_index(), 1);
}

#[test]
fn hilbert_samuel_sequences() {
    assert_eq!(LocalAlgebra::from_presentation(&chain(4)).unwrap().hilbert_samuel(), [1, 1, 1, 1]);
    assert_eq!(alg("example4").hilbert_samuel(), [1, 2, 1, 1]);
    assert_eq!(alg("example5").hilbert_samuel(), [1, 3, 1]);
}

#[test]
fn socles() {
    for n in 2..7 {
        let a = LocalAlgebra::from_presentation(&chain(n)).unwrap();
        let s = a.socle();
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&e(n as usize, n as usize - 1)));
        assert!(a.is_gorenstein());
    }
    let ex5 = alg("example5");
    assert_eq!(ex5.socle().dim(), 1);
    assert_eq!(ex5.labels()[4], "x3^2");
    assert!(ex5.socle().contains(&e(5, 4)));

    let ex1 = alg("example1");
    assert_eq!(ex1.socle().dim(), 3);
    assert!(!ex1.is_gorenstein());
    assert!(alg("example3").is_gorenstein());
}

#[test]
fn cotangent_spaces() {
    let c = alg("example4").cotangent();
    assert_eq!(c.q, 2);
    assert_eq!(&c.frame[..2], [e(5, 1), e(5, 2)]);
    assert_eq!(LocalAlgebra::from_presentation(&chain(5)).unwrap().cotangent().q, 1);
    let c = alg("example5").cotangent();
    assert_eq!(c.q, 3);
    assert_eq!(c.levels, [1, 1, 1, 2]);
    // π kills m^2
    assert!(c.projection.mul_vec(&e(5, 4)).iter().all(Zero::is_zero));
}

#[test]
fn adapted_frame_is_stable() {
    for name in ["example3", "example4", "example5"] {
        let (adapted, _) = alg(name).adapted();
        let (again, cot) = adapted.adapted();
        assert_eq!(again.structure_tensor(), adapted.structure_tensor());
        for (i, v) in cot.frame.iter().enumerate() {
            assert_eq!(v, &e(adapted.dim(), i + 1));
        }
    }
}

#[test]
fn index_polynomials() {
    for n in 2..8 {
        let p = LocalAlgebra::from_presentation(&chain(n)).unwrap().index_polynomial().unwrap();
        assert_eq!(p.render(), format!("x1^{}", n - 1).replace("^1", ""));
    }
    assert_eq!(alg("example3").index_polynomial().unwrap().render(), "x1^3 + x2^3");
    assert_eq!(alg("example4").index_polynomial().unwrap().render(), "x1^3");
    let p5 = alg("example5").index_polynomial().unwrap();
    assert_eq!(p5.render(), "x1^2 + x2^2 + x3^2");
    assert_eq!(p5.degree, 2);
    assert_eq!(p5.socle_label, "x3^2");
    assert!(matches!(alg("example1").index_polynomial(), Err(AlgebraError::NotGorenstein(3))));
    assert!(matches!(
        LocalAlgebra::from_presentation(&square_zero(1)).unwrap().index_polynomial(),
        Ok(p) if p.render() == "x1"
    ));
}

#[test]
fn index_polynomial_scale_is_recorded() {
    // t^2 = 2 s^2 with s^2 spanning the socle: (a t + b s)^2 = (2a^2 + b^2) s^2
    let p = Presentation::parse("vars t s\nrel t*s\nrel t^2 - 2*s^2").unwrap();
    let ip = LocalAlgebra::from_presentation(&p).unwrap().index_polynomial().unwrap();
    assert_eq!(ip.render(), "x1^2 + 1/2*x2^2");
    assert_eq!(ip.scale, rat(2));
}

#[test]
fn render_elements() {
    let a = alg("example4");
    let mut v = vec![rat(0); 5];
    v[1] = rat(1);
    v[3] = frac(-1, 2);
    assert_eq!(a.render_element(&v), "-1/2*t^2 + t");
    assert_eq!(a.render_element(&vec![rat(0); 5]), "0");
}

fn random_element(n: usize, coeffs: &[i64], skip: usize) -> Vec<Rational> {
    let mut v = vec![rat(0); n];
    for (i, c) in coeffs.iter().enumerate().take(n) {
        if i >= skip {
            v[i] = rat(*c);
        }
    }
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn generic_power_is_well_defined(which in 0usize..4, m in prop::collection::vec(-3i64..=3, 6), u in prop::collection::vec(-3i64..=3, 6)) {
        let a = vec![alg("example3"), alg("example4"), alg("example5"), LocalAlgebra::from_presentation(&chain(5)).unwrap()]
            .swap_remove(which);
        let (ad, cot) = a.adapted();
        let n = ad.dim();
        let r = ad.nilpotency_index();
        let mv = random_element(n, &m, 1);
        let uv = random_element(n, &u, 1 + cot.q);
        let mut sum = mv.clone();
        for (s, x) in sum.iter_mut().zip(&uv) {
            *s += x;
        }
        let pw = |v: &Vec<Rational>| (1..r).fold(v.clone(), |acc, _| ad.mul(&acc, v));
        prop_assert_eq!(pw(&sum), pw(&mv));

        let ip = a.index_polynomial().unwrap();
        let vcoords: Vec<Rational> = mv[1..=cot.q].to_vec();
        let predicted = ip.poly.eval(&vcoords) * &ip.scale;
        prop_assert_eq!(&pw(&mv)[n - 1], &predicted);
    }

    #[test]
    fn index_polynomial_is_homogeneous(which in 0usize..3, lambda in -4i64..=4) {
        let a = vec![alg("example3"), alg("example4"), alg("example5")].swap_remove(which);
        let ip = a.index_polynomial().unwrap();
        let q = ip.poly.nvars();
        let scaled: Vec<MultiPoly> = (0..q).map(|i| MultiPoly::var(q, i).scale(&rat(lambda))).collect();
        let lhs = ip.poly.substitute(&scaled);
        let mut factor = rat(1);
        for _ in 0..ip.degree {
            factor *= rat(lambda);
        }
        prop_assert_eq!(lhs, ip.poly.scale(&factor));
        prop_assert!(ip.poly.is_homogeneous());
    }
}

#[test]
fn socle_contains_top_power_and_matches_it_when_gorenstein() {
    for name in ["example1", "example2", "example3", "example4", "example5"] {
        let a = alg(name);
        let top = a.filtration().power(a.nilpotency_index());
        let soc = a.socle();
        assert!(soc.contains_subspace(top));
        if a.is_gorenstein() {
            assert_eq!(&soc, top);
        }
        assert_eq!(a.hilbert_samuel().iter().sum::<usize>(), a.dim());
        assert_eq!(a.hilbert_samuel()[0], 1);
    }
}
