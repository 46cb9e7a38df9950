//! The acceptance suite: every reconstruction, identity and negative control,
//! each reported as one pass/fail line.

use std::fmt;
use std::time::{Duration, Instant};

use crate::algebra::{tensor_of, Element};
use crate::baxterize::{baxterize_matrix, decompose_graded, matrix_unit_grading};
use crate::cli::{verify_document, VerifyMode};
use crate::double::{build_double, canonical_element, canonical_r, check_constant_ybe_algebraic};
use crate::fixtures;
use crate::hopf::{check_coproduct_grading, check_grading, check_hopf_axioms, dual, dual_grading, Axiom, Grading};
use crate::io::to_json;
use crate::matrix::ParamMatrix;
use crate::scalar::{ParamScalar, Scalar};
use crate::taft::{build_taft, rep_irreducible, taft_r_matrix, Normalization, Taft};
use crate::uqsl2::{grading_reports, spin_half, spin_one, uqsl2_r_matrix, WeightedRep};
use crate::ybe::{braid_check, check_constant_ybe, check_parametric_ybe};

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Option<Duration>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {} ({:.2?}{}): {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.elapsed,
            self.budget.map(|b| format!(" / budget {:?}", b)).unwrap_or_default(),
            self.detail
        )
    }
}

type Outcome = Result<String, String>;

struct Criterion {
    id: u32,
    name: &'static str,
    budget: Option<u64>,
    run: fn() -> Outcome,
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 1, name: "spin-1/2 reconstruction", budget: Some(1), run: spin_half_reconstruction },
    Criterion { id: 2, name: "spin-1 reconstruction", budget: Some(5), run: spin_one_reconstruction },
    Criterion { id: 3, name: "Taft 9x9 reconstruction", budget: Some(10), run: taft_reconstruction },
    Criterion { id: 4, name: "parametric YBE identities", budget: Some(120), run: parametric_identities },
    Criterion { id: 5, name: "constant YBE at mu=1 and baxterize consistency", budget: None, run: constant_identities },
    Criterion { id: 6, name: "Hopf axiom suite", budget: Some(30), run: hopf_axiom_suite },
    Criterion { id: 7, name: "grading suite", budget: None, run: grading_suite },
    Criterion { id: 8, name: "dual grading homogeneity", budget: None, run: dual_grading_instance },
    Criterion { id: 9, name: "algebraic double YBE", budget: Some(60), run: double_ybe },
    Criterion { id: 10, name: "Z^n consistency", budget: None, run: zn_consistency },
    Criterion { id: 11, name: "l = N-1 specialization", budget: None, run: l_specialization },
    Criterion { id: 12, name: "negative controls", budget: None, run: negative_controls },
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

fn execute(criterion: &Criterion) -> CriterionResult {
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(criterion.run).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_else(|| "panic".to_string());
        Err(format!("panicked: {}", msg))
    });
    let elapsed = start.elapsed();
    let budget = criterion.budget.map(Duration::from_secs);
    let (passed, detail) = match outcome {
        Ok(d) => match budget {
            Some(b) if elapsed > b => (false, format!("{} (over time budget)", d)),
            _ => (true, d),
        },
        Err(e) => (false, e),
    };
    CriterionResult { id: criterion.id, name: criterion.name, passed, detail, elapsed, budget }
}

/// Runs one criterion by number.
pub fn run_one(id: u32) -> Option<CriterionResult> {
    CRITERIA.iter().find(|s| s.id == id).map(execute)
}

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(execute).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn first_difference(a: &ParamMatrix, b: &ParamMatrix) -> String {
    let diff = a.sub(b);
    let first = diff.entries().next().map(|(r, c, _)| (r, c));
    match first {
        Some((r, c)) => format!("entry ({}, {}): got {}, expected {}", r + 1, c + 1, a.get(r, c), b.get(r, c)),
        None => "equal".to_string(),
    }
}

fn compare_fixture(name: &str, got: &ParamMatrix, fixture: &fixtures::Fixture) -> Outcome {
    let expected = fixture.matrix().map_err(|e| format!("fixture parse error: {}", e))?;
    ensure(got == &expected, || format!("{} differs, {}", name, first_difference(got, &expected)))?;
    Ok(format!("{}x{} matrix equal to the reference entry-for-entry", got.dim(), got.dim()))
}

fn spin_half_reconstruction() -> Outcome {
    compare_fixture("spin-1/2", &uqsl2_r_matrix(&spin_half(), true), &fixtures::spin_half())
}

fn spin_one_reconstruction() -> Outcome {
    compare_fixture("spin-1", &uqsl2_r_matrix(&spin_one(), true), &fixtures::spin_one())
}

/// Taft instances used throughout: `N = 4`, `q = ζ_4`, `n = 3`, each `l`.
const TAFT_N: u32 = 4;

fn taft_instances() -> Result<(Taft, Vec<(u32, ParamMatrix)>), String> {
    let t = build_taft(TAFT_N, 1).map_err(|e| e.to_string())?;
    let mut out = Vec::new();
    for l in 1..=TAFT_N {
        let rep = rep_irreducible(&t, 3, l).map_err(|e| e.to_string())?;
        out.push((l, taft_r_matrix(&t, &rep, true, Normalization::UnitCorner).map_err(|e| e.to_string())?));
    }
    Ok((t, out))
}

fn taft_reconstruction() -> Outcome {
    let (t, mats) = taft_instances()?;
    for (l, m) in &mats {
        compare_fixture(&format!("Taft l={}", l), m, &fixtures::taft_nine(TAFT_N, 1, *l))?;
        let rep = rep_irreducible(&t, 3, *l).map_err(|e| e.to_string())?;
        let raw = taft_r_matrix(&t, &rep, true, Normalization::Raw).map_err(|e| e.to_string())?;
        let scale = ParamScalar::constant(t.q_pow(-((l * (l + 2)) as i64)));
        ensure(raw == m.scale(&scale), || format!("raw matrix at l={} is not q^(-l(l+2)) times the reference", l))?;
    }
    Ok(format!(
        "N={}, l=1..{}: all {} matrices equal the reference after dividing by the (1,1) entry q^(-l(l+2))",
        TAFT_N,
        TAFT_N,
        mats.len()
    ))
}

fn all_parametric() -> Result<Vec<(String, ParamMatrix)>, String> {
    let mut out = vec![
        ("spin-1/2".to_string(), uqsl2_r_matrix(&spin_half(), true)),
        ("spin-1".to_string(), uqsl2_r_matrix(&spin_one(), true)),
    ];
    let (_, mats) = taft_instances()?;
    out.extend(mats.into_iter().map(|(l, m)| (format!("Taft l={}", l), m)));
    Ok(out)
}

fn parametric_identities() -> Outcome {
    let mats = all_parametric()?;
    for (name, m) in &mats {
        let report = check_parametric_ybe(m).map_err(|e| format!("{}: {}", name, e))?;
        ensure(report.passed, || format!("{}: {}", name, report))?;
    }
    Ok(format!("{} matrices: residual identically zero in mu, nu", mats.len()))
}

fn constant_identities() -> Outcome {
    let mats = all_parametric()?;
    for (name, m) in &mats {
        let at_one = m.at_one();
        let report = check_constant_ybe(&at_one).map_err(|e| format!("{}: {}", name, e))?;
        ensure(report.passed, || format!("{}: {}", name, report))?;
        let braid = braid_check(&at_one).map_err(|e| format!("{}: {}", name, e))?;
        ensure(braid.passed, || format!("{}: {}", name, braid))?;
    }
    for (rep, m) in [(spin_half(), &mats[0].1), (spin_one(), &mats[1].1)] {
        ensure(m.at_one() == uqsl2_r_matrix(&rep, false), || format!("{}: R(1) != unbaxterized R", rep.name()))?;
    }
    let (t, taft) = taft_instances()?;
    for (l, m) in &taft {
        let rep = rep_irreducible(&t, 3, *l).map_err(|e| e.to_string())?;
        let plain = rep.r_matrix(&canonical_element(t.hopf()).promote());
        let corner = plain.get(0, 0).inv().ok_or("corner entry not invertible")?;
        ensure(m.at_one() == plain.scale(&corner), || format!("Taft l={}: R(1) != image of canonical R", l))?;
    }
    Ok(format!("{} matrices pass constant YBE and braid relation at mu=1 and match the canonical R image", mats.len()))
}

fn primitive_powers(order: u32) -> impl Iterator<Item = u32> {
    use num_integer::Integer;
    (1..order).filter(move |k| k.gcd(&order) == 1)
}

fn hopf_axiom_suite() -> Outcome {
    let mut count = 0;
    for order in 2..=6 {
        for k in primitive_powers(order) {
            let t = build_taft(order, k).map_err(|e| e.to_string())?;
            let report = check_hopf_axioms(t.hopf());
            ensure(report.all_passed(), || report.to_string())?;
            count += 1;
        }
    }
    let sweedler = build_taft(2, 1).map_err(|e| e.to_string())?;
    let x = sweedler.index(0, 1);
    let bad = sweedler.hopf().with_coproduct(x, tensor_of(&[&Element::basis(x), &Element::basis(0)]));
    let report = check_hopf_axioms(&bad);
    let result = report.result(Axiom::Bialgebra);
    ensure(!result.passed, || "corrupted coproduct passed the bialgebra check".to_string())?;
    let cx = result.counterexample.clone().unwrap_or_default();
    ensure(!cx.is_empty(), || "corrupted coproduct failed without a counterexample".to_string())?;
    Ok(format!(
        "{} Taft algebras (N=2..6, all primitive q) pass all five families; corrupted Delta(x)=x(x)e fails bialgebra at ({})",
        count,
        cx.join(", ")
    ))
}

fn grading_suite() -> Outcome {
    for order in 2..=6 {
        for k in primitive_powers(order) {
            let t = build_taft(order, k).map_err(|e| e.to_string())?;
            for report in
                [check_grading(t.hopf().algebra(), t.grading()), check_coproduct_grading(t.hopf(), t.grading())]
            {
                ensure(report.passed && report.nontrivial, || format!("T({},{}): {}", order, k, report))?;
            }
            let n = order as usize;
            let wrong = Grading::integer((0..n * n).map(|b| (b / n) as i32).collect());
            let report = check_coproduct_grading(t.hopf(), &wrong);
            ensure(!report.passed, || format!("T({},{}): grading d = i passed the coproduct check", order, k))?;
        }
    }
    for rep in [spin_half(), spin_one()] {
        for report in grading_reports(&rep) {
            ensure(report.passed && report.nontrivial, || format!("{}: {}", rep.name(), report))?;
        }
        rep_level_baxterization(&rep)?;
    }
    let (_, taft) = taft_instances()?;
    for (l, m) in &taft {
        let left = matrix_unit_grading(3, |r, c| c as i32 - r as i32);
        let right = matrix_unit_grading(3, |r, c| r as i32 - c as i32);
        let again = baxterize_matrix(&m.at_one(), &left, &right).map_err(|e| e.to_string())?;
        ensure(&again == m, || format!("Taft l={}: rep-level baxterization differs", l))?;
    }
    Ok("Taft gradings (N=2..6) and U_q[sl(2)] term gradings pass; d(a^i x^j)=i fails the coproduct check".to_string())
}

fn rep_level_baxterization(rep: &WeightedRep) -> Result<(), String> {
    let r = uqsl2_r_matrix(rep, true);
    let again = baxterize_matrix(&r.at_one(), &rep.e_leg_grading(), &rep.f_leg_grading()).map_err(|e| e.to_string())?;
    ensure(again == r, || format!("{}: rep-level baxterization differs", rep.name()))
}

fn dual_grading_instance() -> Outcome {
    let mut count = 0;
    for order in 2..=5 {
        for k in primitive_powers(order) {
            let t = build_taft(order, k).map_err(|e| e.to_string())?;
            let d = dual_grading(t.hopf(), t.grading()).map_err(|e| e.to_string())?;
            let hs = dual(t.hopf());
            let report = check_grading(hs.algebra(), &d);
            ensure(report.passed && report.nontrivial, || format!("T({},{})*: {}", order, k, report))?;
            count += 1;
        }
    }
    Ok(format!("{} duals T(N,q)*, N <= 5: m: B^p (x) B^q -> B^(p+q) on every basis pair", count))
}

fn double_ybe() -> Outcome {
    let mut lines = Vec::new();
    for (order, k) in [(2, 1), (3, 1), (3, 2)] {
        let t = build_taft(order, k).map_err(|e| e.to_string())?;
        let d = build_double(t.hopf()).map_err(|e| e.to_string())?;
        let report = check_constant_ybe_algebraic(&d, &canonical_r(&d));
        ensure(report.passed, || format!("D(T({},{})): {}", order, k, report))?;
        lines.push(format!("D(T({},q^{})) dim {}", order, k, d.dim()));
    }
    Ok(format!("canonical R satisfies the YBE exactly in {}", lines.join(", ")))
}

fn zn_consistency() -> Outcome {
    for order in 2..=5 {
        let t = build_taft(order, 1).map_err(|e| e.to_string())?;
        let n = order as usize;
        let dual_deg = dual_grading(t.hopf(), t.grading()).map_err(|e| e.to_string())?;
        let lift = |g: &Grading| Grading::lattice(2, (0..n * n).map(|b| vec![g.int_degree(b), 0]).collect());
        let r = canonical_element(t.hopf());
        let plain = decompose_graded(&r, (t.hopf().algebra(), t.grading()), (t.dual().algebra(), &dual_deg))
            .and_then(|g| g.baxterize())
            .map_err(|e| e.to_string())?;
        let (la, lb) = (lift(t.grading()), lift(&dual_deg));
        let lifted = decompose_graded(&r, (t.hopf().algebra(), &la), (t.dual().algebra(), &lb))
            .and_then(|g| g.baxterize_zn(|p| p[0] + p[1]))
            .map_err(|e| e.to_string())?;
        ensure(plain == lifted, || format!("N={}: Z^2 baxterization differs", order))?;
    }
    Ok("lifted Z^2 Taft grading with tau = coordinate sum reproduces baxterize term-for-term, N=2..5".to_string())
}

/// Relates the Taft matrix at `l = N-1` to the spin-1 matrix evaluated at
/// `s` with `s^4 = q`, searching over the four choices of `s`.
pub fn l_specialization_instance(order: u32) -> Result<(i64, Scalar, Vec<Scalar>), String> {
    let t = build_taft(order, 1).map_err(|e| e.to_string())?;
    let rep = rep_irreducible(&t, 3, order - 1).map_err(|e| e.to_string())?;
    let big = 4 * order;
    let taft = taft_r_matrix(&t, &rep, true, Normalization::UnitCorner)
        .map_err(|e| e.to_string())?
        .map_entries(|x| x.map_coeffs(|c| c.embed_cyclotomic(big)));
    let spin = uqsl2_r_matrix(&spin_one(), true);
    for shift in 0..4 {
        let exp = 1 + shift * order as i64;
        let s = Scalar::zeta_pow(big, exp);
        let failed = std::cell::Cell::new(false);
        let evaluated = spin.map_entries(|x| {
            x.map_coeffs(|c| {
                c.eval_s(&s).unwrap_or_else(|_| {
                    failed.set(true);
                    Scalar::zero()
                })
            })
        });
        if failed.get() {
            continue;
        }
        if let Some((c, d)) = taft.diagonal_equivalence(&evaluated) {
            return Ok((exp, c, d));
        }
    }
    Err(format!("N={}: no scalar and diagonal basis change relates the two matrices", order))
}

fn l_specialization() -> Outcome {
    let mut found = Vec::new();
    for order in 3..=5 {
        let (exp, c, d) = l_specialization_instance(order)?;
        let trivial = d.iter().all(Scalar::is_one);
        let big = 4 * order as i64;
        let scalar = (-big / 2..big / 2)
            .find(|k| Scalar::zeta_pow(big as u32, exp * k) == c)
            .map(|k| format!("s^{}", k))
            .unwrap_or_else(|| c.to_string());
        found.push(format!(
            "N={}: s=zeta_{}^{}, Taft = {} * spin-1, {} basis change",
            order,
            big,
            exp,
            scalar,
            if trivial { "identity" } else { "diagonal" }
        ));
    }
    Ok(found.join("; "))
}

fn perturbed(m: &ParamMatrix, r: usize, c: usize, f: impl Fn(&ParamScalar) -> ParamScalar) -> ParamMatrix {
    let mut out = m.clone();
    out.set(r, c, f(&m.get(r, c)));
    out
}

fn negative_controls() -> Outcome {
    let two = Scalar::int(2);
    let half = uqsl2_r_matrix(&spin_half(), false);
    let bad_half = perturbed(&half, 1, 2, |x| x.scale(&two));
    for report in [check_constant_ybe(&bad_half), braid_check(&bad_half)] {
        let report = report.map_err(|e| e.to_string())?;
        ensure(!report.passed && !report.residual.is_zero(), || "perturbed spin-1/2 passed".to_string())?;
    }
    let one = uqsl2_r_matrix(&spin_one(), true);
    let bad_one = perturbed(&one, 2, 6, |x| x.scale(&two));
    let report = check_parametric_ybe(&bad_one).map_err(|e| e.to_string())?;
    ensure(!report.passed, || "perturbed spin-1 passed the parametric check".to_string())?;

    let (_, taft) = taft_instances()?;
    let bad_taft = perturbed(&taft[0].1, 2, 6, |x| x.scale(&two));
    let report = check_parametric_ybe(&bad_taft).map_err(|e| e.to_string())?;
    ensure(!report.passed, || "perturbed Taft matrix passed the parametric check".to_string())?;

    let t = build_taft(2, 1).map_err(|e| e.to_string())?;
    let d = build_double(t.hopf()).map_err(|e| e.to_string())?;
    let mut r = canonical_element(t.hopf());
    r.add_term(vec![1, 1], &Scalar::one());
    let report = check_constant_ybe_algebraic(&d, &d.embed_tensor(&r));
    ensure(!report.passed, || "perturbed canonical R passed the algebraic check".to_string())?;

    let mut codes = Vec::new();
    for (m, mode) in [(&bad_half, VerifyMode::Constant), (&bad_one, VerifyMode::Auto), (&bad_taft, VerifyMode::Auto)] {
        let (_, code) = verify_document(&to_json(m), mode).map_err(|e| e.to_string())?;
        ensure(code == 1, || format!("verify returned exit code {} on a corrupted matrix", code))?;
        codes.push(code);
    }
    Ok(format!(
        "perturbed spin-1/2, spin-1, Taft and double R all leave nonzero residuals; verify exits with {:?}",
        codes
    ))
}
