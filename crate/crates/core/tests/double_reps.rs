use hopf_baxter::algebra::{tensor_of, Element};
use hopf_baxter::double::{
    build_double, canonical_element, canonical_r, check_constant_ybe_algebraic, check_parametric_ybe_algebraic,
    CrossRelation, Representation,
};
use hopf_baxter::matrix::{Matrix, ParamMatrix};
use hopf_baxter::scalar::{Monomial, ParamScalar, Scalar};
use hopf_baxter::taft::{
    baxterized_canonical, build_taft, indecomposable_generators, rep_indecomposable, rep_irreducible, taft_r_matrix,
    Normalization, Taft,
};
use hopf_baxter::ybe::{check_constant_ybe, check_parametric_ybe};

fn irreducibles(t: &Taft) -> Vec<Representation> {
    let mut out = Vec::new();
    for n in 1..=t.order() {
        for l in 1..=t.order() {
            out.push(rep_irreducible(t, n, l).unwrap());
        }
    }
    out
}

fn assert_rep(t: &Taft, cross: &CrossRelation, rep: &Representation) {
    rep.check_h(t.hopf()).unwrap_or_else(|e| panic!("{}: {}", rep.name(), e));
    rep.check_dual(t.dual()).unwrap_or_else(|e| panic!("{}: {}", rep.name(), e));
    rep.check_cross(cross, t.hopf(), t.dual()).unwrap_or_else(|e| panic!("{}: {}", rep.name(), e));
}

#[test]
fn irreducibles_are_double_modules() {
    for (n, k) in [(2, 1), (3, 1), (3, 2), (4, 1), (4, 3)] {
        let t = build_taft(n, k).unwrap();
        let cross = CrossRelation::new(t.hopf()).unwrap();
        for rep in irreducibles(&t) {
            assert_rep(&t, &cross, &rep);
        }
    }
}

#[test]
fn exhaustive_double_module_check() {
    for (n, k) in [(2, 1), (3, 1)] {
        let t = build_taft(n, k).unwrap();
        let d = build_double(t.hopf()).unwrap();
        for rep in irreducibles(&t) {
            rep.check_double(&d).unwrap_or_else(|e| panic!("{}: {}", rep.name(), e));
        }
    }
}

#[test]
fn indecomposable_closed_form_matches_generators() {
    for (n, k) in [(3, 1), (3, 2), (4, 1), (5, 2)] {
        let t = build_taft(n, k).unwrap();
        let cross = CrossRelation::new(t.hopf()).unwrap();
        for alpha in [Scalar::one(), Scalar::int(3), &Scalar::one() + t.q()] {
            for l in 1..=n {
                let rep = rep_indecomposable(&t, &alpha, l).unwrap();
                let (a, x) = indecomposable_generators(&t, &alpha, l);
                for i in 0..n {
                    for j in 0..n {
                        let word = a.pow(i).mul(&x.pow(j));
                        assert_eq!(rep.h_image(t.index(i, j)), &word, "N={} l={} a^{} x^{}", n, l, i, j);
                    }
                }
                assert_rep(&t, &cross, &rep);
            }
        }
    }
}

/// `Σ_{i,j} μ^j π(a^i x^j) ⊗ π((a^i x^j)^*)` assembled directly.
fn direct_r(t: &Taft, rep: &Representation) -> ParamMatrix {
    let mut out = ParamMatrix::zeros(rep.dim() * rep.dim());
    for i in 0..t.order() {
        for j in 0..t.order() {
            let b = t.index(i, j);
            let k: Matrix = rep.h_image(b).kron(rep.dual_image(b));
            let term = ParamMatrix::from_dense(&k).scale(&ParamScalar::mu_pow(j as i32));
            out = out.add(&term);
        }
    }
    out
}

#[test]
fn pipeline_matches_direct_formula() {
    for (n, k) in [(3, 1), (4, 1), (4, 3), (5, 2)] {
        let t = build_taft(n, k).unwrap();
        for l in 1..=n {
            let rep = rep_irreducible(&t, 3.min(n), l).unwrap();
            let raw = taft_r_matrix(&t, &rep, true, Normalization::Raw).unwrap();
            assert_eq!(raw, direct_r(&t, &rep));
            let report = check_parametric_ybe(&raw).unwrap();
            assert!(report.passed, "N={} l={}: {}", n, l, report);
        }
        let alpha = Scalar::int(2);
        let rep = rep_indecomposable(&t, &alpha, 1).unwrap();
        let r = taft_r_matrix(&t, &rep, true, Normalization::Raw).unwrap();
        assert_eq!(r, direct_r(&t, &rep));
        assert!(check_parametric_ybe(&r).unwrap().passed);
        assert!(check_constant_ybe(&r.at_one()).unwrap().passed);
    }
}

#[test]
fn r_matrix_is_consistent_on_the_double() {
    for (n, k) in [(2, 1), (3, 2)] {
        let t = build_taft(n, k).unwrap();
        let d = build_double(t.hopf()).unwrap();
        let bax = baxterized_canonical(&t).unwrap();
        let embedded = d.embed_tensor(&bax);
        for rep in irreducibles(&t) {
            assert_eq!(rep.r_matrix_double(&embedded), rep.r_matrix(&bax), "{}", rep.name());
        }
    }
}

#[test]
fn double_structure() {
    let t = build_taft(2, 1).unwrap();
    let d = build_double(t.hopf()).unwrap();
    assert_eq!(d.dim(), 16);
    let a = d.iota_h(&Element::basis(t.index(1, 0)));
    let x = d.iota_h(&Element::basis(t.index(0, 1)));
    let ax = d.algebra().multiply(&a, &x).unwrap();
    assert_eq!(ax, d.iota_h(&Element::basis(t.index(1, 1))));
    for f in 0..4 {
        for g in 0..4 {
            let prod =
                d.algebra().multiply(&d.iota_dual(&Element::basis(f)), &d.iota_dual(&Element::basis(g))).unwrap();
            assert_eq!(prod, d.iota_dual(t.dual().algebra().product(f, g)));
        }
    }
    assert_eq!(canonical_element(t.hopf()).len(), 4);
    let r = canonical_r(&d);
    assert_eq!(r.len(), 4 * t.order() as usize);
    assert!(d.coalgebra_counterexample().is_none());
    assert!(d.quasitriangular_counterexample(&r).is_none());
}

#[test]
fn algebraic_ybe_and_controls() {
    let t = build_taft(2, 1).unwrap();
    let d = build_double(t.hopf()).unwrap();
    let r = canonical_r(&d);
    let report = check_constant_ybe_algebraic(&d, &r);
    assert!(report.passed && report.residual.is_zero(), "{}", report);

    let unit = tensor_of(&[d.algebra().unit(), d.algebra().unit()]);
    assert!(check_constant_ybe_algebraic(&d, &unit).passed);

    let mut bad = canonical_element(t.hopf());
    bad.add_term(vec![t.index(0, 1), t.index(0, 1)], &Scalar::one());
    let report = check_constant_ybe_algebraic(&d, &d.embed_tensor(&bad));
    assert!(!report.passed && !report.residual.is_zero());

    let bax = d.embed_tensor(&baxterized_canonical(&t).unwrap());
    let report = check_parametric_ybe_algebraic(&d, &bax);
    assert!(report.passed, "{}", report);
    let mut skewed = bax.clone();
    skewed.add_term(
        vec![d.index(t.index(0, 1), 0), d.index(0, t.index(0, 1))],
        &ParamScalar::term(Scalar::one(), Monomial::mu(2)),
    );
    assert!(!check_parametric_ybe_algebraic(&d, &skewed).passed);
}

fn assert_associative(d: &hopf_baxter::double::DoubleAlgebra, i: usize, j: usize, k: usize) {
    let alg = d.algebra();
    let (x, y, z) = (Element::basis(i), Element::basis(j), Element::basis(k));
    let left = alg.multiply(&alg.multiply(&x, &y).unwrap(), &z).unwrap();
    let right = alg.multiply(&x, &alg.multiply(&y, &z).unwrap()).unwrap();
    assert_eq!(left, right, "({}, {}, {})", alg.label(i), alg.label(j), alg.label(k));
}

#[test]
fn double_is_associative() {
    for (n, k) in [(2, 1), (3, 1), (3, 2)] {
        let t = build_taft(n, k).unwrap();
        let d = build_double(t.hopf()).unwrap();
        let dim = d.dim();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    assert_associative(&d, i, j, k);
                }
            }
        }
    }
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

    #[test]
    fn larger_doubles_are_associative(i in 0usize..256, j in 0usize..256, k in 0usize..256) {
        use std::sync::OnceLock;
        static DOUBLE: OnceLock<hopf_baxter::double::DoubleAlgebra> = OnceLock::new();
        let d = DOUBLE.get_or_init(|| build_double(build_taft(4, 3).unwrap().hopf()).unwrap());
        assert_associative(d, i, j, k);
    }
}
