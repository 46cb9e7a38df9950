use hopf_baxter::baxterize::{baxterize_matrix, matrix_unit_grading};
use hopf_baxter::hopf::Grading;
use hopf_baxter::io::{from_json, to_json};
use hopf_baxter::matrix::ParamMatrix;
use hopf_baxter::scalar::{Monomial, ParamScalar, Scalar};
use hopf_baxter::taft::{build_taft, rep_irreducible, taft_r_matrix, Normalization};
use hopf_baxter::uqsl2::{spin_half, spin_one, uqsl2_r_matrix};
use hopf_baxter::ybe::{braid_check, check_constant_ybe, check_parametric_ybe, ybe_sides};
use proptest::prelude::*;

/// Every monomial `μ^a ν^b` in entry `((r1,r2,r3), (c1,c2,c3))` of either side
/// must have `a = left(r1, c1)` and `b = right(r3, c3)`.
fn assert_homogeneous(r: &ParamMatrix, left: &Grading, right: &Grading) {
    let d = r.local_dim().unwrap();
    let (lhs, rhs) = ybe_sides(r, true).unwrap();
    for side in [&lhs, &rhs] {
        for (row, col, x) in side.entries() {
            let (r1, r3) = (row / (d * d), row % d);
            let (c1, c3) = (col / (d * d), col % d);
            for (m, _) in x.terms() {
                assert_eq!(m.mu, left.int_degree(r1 * d + c1));
                assert_eq!(m.nu, right.int_degree(r3 * d + c3));
            }
        }
    }
}

#[test]
fn spectral_exponents_follow_leg_degrees() {
    for rep in [spin_half(), spin_one()] {
        assert_homogeneous(&uqsl2_r_matrix(&rep, true), &rep.e_leg_grading(), &rep.f_leg_grading());
    }
    let left = matrix_unit_grading(3, |r, c| c as i32 - r as i32);
    let right = matrix_unit_grading(3, |r, c| r as i32 - c as i32);
    for (n, k) in [(4, 1), (5, 3)] {
        let t = build_taft(n, k).unwrap();
        for l in 1..=n {
            let rep = rep_irreducible(&t, 3, l).unwrap();
            assert_homogeneous(&taft_r_matrix(&t, &rep, true, Normalization::UnitCorner).unwrap(), &left, &right);
        }
    }
}

/// Reverses the three tensor slots of `V^{⊗3}`.
fn reverse_slots(m: &ParamMatrix, d: usize) -> ParamMatrix {
    let rev = |i: usize| (i % d) * d * d + ((i / d) % d) * d + i / (d * d);
    let mut out = ParamMatrix::zeros(m.dim());
    for (r, c, x) in m.entries() {
        out.set(rev(r), rev(c), x.clone());
    }
    out
}

fn small_scalar() -> impl Strategy<Value = Scalar> {
    (-2i64..=2, -2i64..=2).prop_map(|(c, k)| Scalar::int(c) * Scalar::s_pow(k))
}

fn constant_matrix(d: usize) -> impl Strategy<Value = ParamMatrix> {
    prop::collection::vec(small_scalar(), d * d * d * d).prop_map(move |xs| {
        let mut m = ParamMatrix::zeros(d * d);
        for (i, x) in xs.into_iter().enumerate() {
            m.set(i / (d * d), i % (d * d), ParamScalar::constant(x));
        }
        m
    })
}

fn perturbed_spin_half() -> impl Strategy<Value = ParamMatrix> {
    (0usize..16, small_scalar()).prop_map(|(i, x)| {
        let mut m = uqsl2_r_matrix(&spin_half(), false);
        m.add_at(i / 4, i % 4, &ParamScalar::constant(x));
        m
    })
}

fn diagonal(len: usize) -> impl Strategy<Value = Vec<Scalar>> {
    prop::collection::vec((1i64..=4, -2i64..=2).prop_map(|(c, k)| Scalar::int(c) * Scalar::s_pow(k)), len)
}

fn conjugate(r: &ParamMatrix, c: &Scalar, d: &[Scalar]) -> ParamMatrix {
    let mut out = ParamMatrix::zeros(r.dim());
    for (row, col, x) in r.entries() {
        let f = c * &(&d[row] * &d[col].inv().unwrap());
        out.set(row, col, x.scale(&f));
    }
    out
}

fn arb_param_matrix() -> impl Strategy<Value = ParamMatrix> {
    prop::collection::vec((0usize..16, -3i32..=3, -3i32..=3, small_scalar()), 0..12).prop_map(|ts| {
        let mut m = ParamMatrix::zeros(4);
        for (i, mu, nu, c) in ts {
            m.add_at(i / 4, i % 4, &ParamScalar::term(c, Monomial::new(mu, nu)));
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn reversed_flip_negates_residual(r in prop_oneof![constant_matrix(2), perturbed_spin_half()]) {
        let flipped = ParamMatrix::flip(2).mul(&r).mul(&ParamMatrix::flip(2));
        let a = check_constant_ybe(&r).unwrap().residual;
        let b = check_constant_ybe(&flipped).unwrap().residual;
        prop_assert_eq!(reverse_slots(&a, 2).scale(&ParamScalar::constant(Scalar::int(-1))), b);
    }

    #[test]
    fn constant_and_parametric_checks_agree(r in prop_oneof![constant_matrix(2), perturbed_spin_half()]) {
        prop_assert_eq!(check_constant_ybe(&r).unwrap().passed, check_parametric_ybe(&r).unwrap().passed);
        let (lhs, rhs) = ybe_sides(&r, false).unwrap();
        prop_assert_eq!(check_constant_ybe(&r).unwrap().residual, lhs.sub(&rhs));
    }

    #[test]
    fn constant_solutions_and_braid_form_agree(r in perturbed_spin_half()) {
        prop_assert_eq!(check_constant_ybe(&r).unwrap().passed, braid_check(&r).unwrap().passed);
    }

    #[test]
    fn diagonal_conjugation_is_recovered(c in small_scalar().prop_filter("nonzero", |c| !c.is_zero()), d in diagonal(3)) {
        let r = uqsl2_r_matrix(&spin_one(), true);
        let dd: Vec<Scalar> = d.iter().flat_map(|a| d.iter().map(move |b| a * b)).collect();
        let conj = conjugate(&r, &c, &dd);
        prop_assert!(check_parametric_ybe(&conj).unwrap().passed);
        let (c2, d2) = conj.diagonal_equivalence(&r).expect("equivalence exists");
        prop_assert_eq!(conjugate(&r, &c2, &d2), conj);
    }

    #[test]
    fn json_round_trip_is_byte_identical(m in arb_param_matrix()) {
        let text = to_json(&m);
        let back = from_json(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(to_json(&back), text);
    }

    #[test]
    fn weight_shift_does_not_change_baxterization(shift in -3i32..=3) {
        let rep = spin_one();
        let w: Vec<i32> = rep.weights().iter().map(|x| x / 2 + shift).collect();
        let left = matrix_unit_grading(3, |r, c| w[r] - w[c]);
        let right = matrix_unit_grading(3, |r, c| w[c] - w[r]);
        let r = uqsl2_r_matrix(&rep, true);
        prop_assert_eq!(baxterize_matrix(&r.at_one(), &left, &right).unwrap(), r);
    }

    #[test]
    fn taft_matrices_solve_the_parametric_equation(
        (n, k) in prop_oneof![Just((3u32, 1u32)), Just((3, 2)), Just((4, 3)), Just((5, 2)), Just((5, 4))],
        dim in 2u32..=3,
        l in 1u32..=5,
    ) {
        let t = build_taft(n, k).unwrap();
        let rep = rep_irreducible(&t, dim, 1 + (l - 1) % n).unwrap();
        let r = taft_r_matrix(&t, &rep, true, Normalization::Raw).unwrap();
        prop_assert!(check_parametric_ybe(&r).unwrap().passed);
        prop_assert!(check_constant_ybe(&r.at_one()).unwrap().passed);
        prop_assert!(braid_check(&r.at_one()).unwrap().passed);
    }
}
