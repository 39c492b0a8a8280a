//! Acceptance criteria 1–13, one PASS/FAIL line each.
//!
//! Four criteria fail on genuine counterexamples (6, 7, 11, 12). For those the
//! exact witnesses are pinned, so this target succeeds only when every outcome
//! and every pinned witness is as recorded.

use std::process::ExitCode;

use cuspalg::classify::{classify_checks, classify_n3, Coupling, DEFAULT_INSTANCES};
use cuspalg::cusp::{
    braiding_check, build_sigma, h_sigma, h_sigma_checks, kernel_checks, module_algebra_check, t_matrix,
};
use cuspalg::dual::{a_sigma_checks, dual_basis_table, embedding_checks, gram_rank, pairing_checks, PairingOracle, PairingTable};
use cuspalg::exactalg::{LaurentPoly, Scalar};
use cuspalg::hopfcore::check_quasitriangular;
use cuspalg::ncmatrix::{is_quantum_automorphism, strong_orbit, triangular_inverse};
use cuspalg::report::{Check, Report, Status};
use cuspalg::star::verify_star;

struct Outcome {
    passed: bool,
    detail: Vec<String>,
    /// For criteria expected to fail: whether the failure is exactly the
    /// recorded one.
    pinned: Result<(), String>,
}

impl Outcome {
    fn of(passed: bool, detail: Vec<String>) -> Self {
        Outcome { passed, detail, pinned: Ok(()) }
    }

    fn with_failures(mut self, checks: &[&Check]) -> Self {
        self.detail.extend(failing(checks));
        self
    }

    fn pin(mut self, pinned: Result<(), String>) -> Self {
        self.pinned = pinned;
        self
    }
}

fn failing(checks: &[&Check]) -> Vec<String> {
    checks
        .iter()
        .filter(|c| c.status == Status::Fail)
        .map(|c| format!("{} ({}): {}", c.name, c.anchor, c.witness.as_deref().unwrap_or("")))
        .collect()
}

fn select<'a>(rep: &'a Report, prefix: &str) -> Vec<&'a Check> {
    rep.checks.iter().filter(|c| c.anchor.starts_with(prefix)).collect()
}

fn all_pass(checks: &[&Check]) -> bool {
    !checks.is_empty() && checks.iter().all(|c| c.status != Status::Fail)
}

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn quantum_automorphism() -> Outcome {
    let sigma = build_sigma(20).expect("N = 20");
    let qa = is_quantum_automorphism(sigma.matrix(), 20, 3);
    Outcome::of(qa.passed, vec![format!("{} monomial pairs at N = 20", qa.pairs_checked)].into_iter().chain(qa.witnesses).collect())
}

fn strong_invertibility() -> Outcome {
    let sigma = build_sigma(20).expect("N = 20");
    let orbit = match strong_orbit(sigma.matrix(), 3, None) {
        Ok(o) => o,
        Err(e) => return Outcome::of(false, vec![e.to_string()]),
    };
    let inv = triangular_inverse(sigma.matrix()).expect("upper triangular");
    let round_trip = sigma.matrix().mul(&inv).is_identity() && inv.mul(sigma.matrix()).is_identity();
    let contragredient = orbit.window[&1] == inv.transpose();
    Outcome::of(
        round_trip && contragredient && orbit.window.len() == 7,
        vec![format!("window d ∈ [−3, 3]; triangular inverse round trip {round_trip}; σ₁ = (σ₀⁻¹)ᵀ {contragredient}")],
    )
}

fn confluence_and_bases(h_rep: &Report, a_rep: &Report) -> Outcome {
    let checks: Vec<&Check> = ["h_sigma.confluence", "h_sigma.basis", "a_sigma.confluence", "a_sigma.basis_count"]
        .iter()
        .flat_map(|p| select(h_rep, p).into_iter().chain(select(a_rep, p)))
        .collect();
    let detail = checks.iter().map(|c| format!("{}: {}", c.name, c.witness.as_deref().unwrap_or("ok"))).collect();
    Outcome::of(all_pass(&checks), detail)
}

fn hopf_axioms(h_rep: &Report, a_rep: &Report) -> Outcome {
    let checks: Vec<&Check> = select(h_rep, "hopf.").into_iter().chain(select(a_rep, "hopf.")).collect();
    Outcome::of(all_pass(&checks), vec![format!("{} axiom checks on Y ≤ 6 and φ ≤ 6 words", checks.len())])
        .with_failures(&checks)
}

fn module_algebra() -> Outcome {
    let rep = module_algebra_check(20);
    let checks: Vec<&Check> = rep.checks.iter().collect();
    Outcome::of(rep.passed(), vec![format!("{} checks at degree ≤ 20", checks.len())]).with_failures(&checks)
}

fn pairing_lemma(oracle: &PairingOracle) -> Outcome {
    let rep = pairing_checks(oracle, 6, 6);
    let checks: Vec<&Check> = rep.checks.iter().collect();
    let table = PairingTable::build(oracle, 6, 6);
    let bad: Vec<_> = table.discrepancies().collect();
    let detail: Vec<String> = bad
        .iter()
        .map(|e| format!("⟨{:?}, {:?}⟩: oracle {} closed {}", e.h_exponents, e.a_exponents, e.oracle, e.closed))
        .collect();
    // Recorded: exactly ⟨Yˡ Kᵏ, γ φ^{2l−3} ψᶜ⟩, l = 2, 3, 4, oracle (−1)^{kc} 6^{l−1} l!, formula 0.
    let expected = |e: &&cuspalg::dual::PairingEntry| {
        let [i, j, k, l] = e.h_exponents;
        let [a, b, c] = e.a_exponents;
        let fact: i64 = (1..=l as i64).product();
        let value = Scalar::sign((k * c) as i64) * Scalar::from_int(6i64.pow(l - 1) * fact);
        i == 0 && j == 0 && (2..=4).contains(&l) && a == 1 && b == 2 * l - 3 && e.oracle == value && e.closed == Scalar::from_int(0)
    };
    let named = rep.checks.iter().filter(|c| c.anchor == "pairing.values").all(|c| c.status == Status::Pass);
    let others_ok = rep.checks.iter().filter(|c| c.anchor != "pairing.closed_formula").all(|c| c.status != Status::Fail);
    let pinned = ensure(bad.len() == 12 && bad.iter().all(expected), format!("discrepancies changed: {detail:?}"))
        .and(ensure(named && others_ok, "named values or structural pairing checks changed"));
    Outcome::of(rep.passed(), detail).with_failures(&checks).pin(pinned)
}

fn dual_basis(oracle: &PairingOracle) -> Outcome {
    let t = dual_basis_table(oracle, 6);
    let mut detail: Vec<String> =
        t.off_diagonal.iter().map(|(e, m, v)| format!("⟨E{e:?}, {m:?}⟩ = {v}")).collect();
    detail.push(format!("diagonal −1 at {:?}", t.negative_diagonal));
    let sixth = Scalar::ratio(1, 6);
    let mut want = Vec::new();
    for w in 0..2 {
        want.push(([0, 4, w], [1, 1, w], sixth.clone()));
        want.push(([0, 6, w], [1, 3, w], sixth.clone()));
    }
    let mut got = t.off_diagonal.clone();
    got.sort_by_key(|(e, m, _)| (*e, *m));
    want.sort_by_key(|(e, m, _)| (*e, *m));
    let negative_ok = t.negative_diagonal.iter().all(|[u, v, w]| v % 2 == 1 && u == w)
        && t.negative_diagonal.len() == 6;
    let pinned = ensure(got == want, "off-diagonal cells changed")
        .and(ensure(t.non_unimodular.is_empty(), "diagonal not unimodular"))
        .and(ensure(negative_ok, "diagonal sign pattern changed"));
    Outcome::of(t.off_diagonal.is_empty() && t.non_unimodular.is_empty(), detail).pin(pinned)
}

fn kernel() -> Outcome {
    let rep = kernel_checks(20, 5);
    let checks: Vec<&Check> = rep.checks.iter().collect();
    let detail = checks.iter().filter_map(|c| c.witness.clone()).collect();
    Outcome::of(rep.passed(), detail).with_failures(&checks)
}

fn embedding() -> Outcome {
    let mut rep = Report::new("embedding");
    for l in [0, 1, 2] {
        rep.extend(embedding_checks(&Scalar::from_int(l), 16));
    }
    let checks: Vec<&Check> = rep.checks.iter().collect();
    Outcome::of(rep.passed(), vec![format!("{} checks for λ ∈ {{0, 1, 2}}", checks.len())]).with_failures(&checks)
}

fn classification() -> Outcome {
    let rep = classify_checks(0, DEFAULT_INSTANCES);
    let checks: Vec<&Check> = rep.checks.iter().collect();
    let t = t_matrix();
    let (one, m1) = (Scalar::from_int(1), Scalar::from_int(-1));
    let d = classify_n3(&one, &m1, &m1, t.get(0, 1), t.get(1, 2), t.get(0, 2)).expect("nonzero parameters");
    let witnesses_ok = d.accepted
        && matches!(&d.coupling, Coupling::Regular { a, b }
            if *a == LaurentPoly::constant(Scalar::ratio(-1, 3)) && *b == LaurentPoly::monomial(Scalar::ratio(1, 2), 3));
    let mut detail: Vec<String> =
        checks.iter().filter(|c| c.anchor.ends_with("equivalence")).filter_map(|c| c.witness.clone()).collect();
    detail.push(format!("explicit 3×3 instance: {:?}", d.coupling));
    Outcome::of(rep.passed() && witnesses_ok, detail).with_failures(&checks)
}

fn star() -> Outcome {
    let rep = verify_star(20, 4, &[Scalar::from_int(0), Scalar::from_int(1), Scalar::i()]);
    let fails: Vec<&Check> = rep.failures().collect();
    let lambda_i = format!("λ = {}:", Scalar::i());
    let is_lambda_i = |c: &Check| c.anchor == "star.real_point" && c.name.starts_with(&lambda_i);
    let lambda_i_fails = fails.iter().any(|c| is_lambda_i(c));
    let closed_clause: Vec<&&Check> =
        fails.iter().filter(|c| c.anchor == "star.generators.closed" || c.name.starts_with("closed: ")).collect();
    let unexpected: Vec<&&Check> = fails.iter().filter(|c| !is_lambda_i(c) && !closed_clause.contains(c)).collect();
    let passed = lambda_i_fails && closed_clause.is_empty() && unexpected.is_empty();

    let detail: Vec<String> = fails
        .iter()
        .map(|c| format!("{} ({}): {}", c.name, c.anchor, c.witness.as_deref().unwrap_or("")))
        .collect();
    let y_table = fails
        .iter()
        .find(|c| c.anchor == "star.generators.closed")
        .and_then(|c| c.witness.clone())
        .unwrap_or_default();
    let closed_anchors: Vec<&str> = closed_clause.iter().map(|c| c.anchor.as_str()).collect();
    let pinned = ensure(unexpected.is_empty(), "unexpected star failure")
        .and(ensure(lambda_i_fails, "λ = i no longer fails"))
        .and(ensure(
            closed_anchors
                == [
                    "star.generators.closed",
                    "star.relations",
                    "star.involutive",
                    "star.coproduct",
                    "star.cartan.involutive",
                    "star.cartan.multiplicative",
                    "star.cartan.coalgebra",
                ],
            format!("closed-form failures changed: {closed_anchors:?}"),
        ))
        .and(ensure(
            y_table.starts_with("closed | pushforward: t^3: 6i*t^2 | 0; t^5: 6i*t^4 + -2*t^3 | -2*t^3"),
            format!("Y* evaluation tables changed: {y_table}"),
        ));
    Outcome::of(passed, detail).pin(pinned)
}

fn r_matrix() -> Outcome {
    let h = h_sigma();
    let mut rep = check_quasitriangular(&h, &Scalar::from_int(0));
    let quasi_ok = rep.passed();
    rep.extend(braiding_check(10, &Scalar::from_int(0)));
    let checks: Vec<&Check> = rep.checks.iter().collect();
    let fails: Vec<&Check> = rep.failures().collect();
    let pinned = ensure(quasi_ok, "R₀ quasitriangularity changed").and(ensure(
        fails.len() == 1
            && fails[0].name == "braiding commutes with Y"
            && fails[0].witness.as_deref().is_some_and(|w| w.starts_with("on t^3⊗t^3:")),
        format!("braiding failures changed: {:?}", failing(&checks)),
    ));
    let diff = rep.checks.iter().find(|c| c.anchor == "rmatrix.fails_on_Y").and_then(|c| c.witness.clone());
    let mut detail = vec![format!("R₀Δ(Y)R₀⁻¹ − Δcop(Y): {}", diff.unwrap_or_default())];
    detail.extend(failing(&checks));
    Outcome::of(rep.passed(), detail).pin(pinned)
}

fn nondegeneracy(oracle: &PairingOracle) -> Outcome {
    let (rank, size) = gram_rank(oracle, 6);
    Outcome::of(rank == size && size == 56, vec![format!("Gram rank {rank} of {size}")])
}

fn main() -> ExitCode {
    let oracle = PairingOracle::new();
    let h_rep = h_sigma_checks(6);
    let a_rep = a_sigma_checks(6);
    let criteria: Vec<(u32, &str, bool, Outcome)> = vec![
        (1, "quantum automorphism at N = 20", true, quantum_automorphism()),
        (2, "strong invertibility, D = 3", true, strong_invertibility()),
        (3, "confluence and basis counts", true, confluence_and_bases(&h_rep, &a_rep)),
        (4, "Hopf axioms", true, hopf_axioms(&h_rep, &a_rep)),
        (5, "module algebra", true, module_algebra()),
        (6, "closed pairing formula", false, pairing_lemma(&oracle)),
        (7, "dual basis", false, dual_basis(&oracle)),
        (8, "kernel of the action", true, kernel()),
        (9, "embedding of the cusp", true, embedding()),
        (10, "classification equivalence", true, classification()),
        (11, "star structures", false, star()),
        (12, "R-matrix and braiding", false, r_matrix()),
        (13, "nondegeneracy at truncation", true, nondegeneracy(&oracle)),
    ];
    let mut unexpected = 0;
    for (n, title, expect_pass, out) in &criteria {
        println!("criterion {n:>2} {}: {title}", if out.passed { "PASS" } else { "FAIL" });
        for d in &out.detail {
            println!("      {d}");
        }
        if out.passed != *expect_pass {
            unexpected += 1;
            println!("      unexpected outcome");
        }
        if let Err(e) = &out.pinned {
            unexpected += 1;
            println!("      pinned witness mismatch: {e}");
        }
    }
    let passed = criteria.iter().filter(|c| c.3.passed).count();
    println!("{passed} of {} criteria pass; {unexpected} unexpected", criteria.len());
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
