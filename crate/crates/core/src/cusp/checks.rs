//! Exact verification suites for `σ`, its operators, `U_σ` and `H_σ`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{
    basis_words, build_sigma, closed_form_image, closed_form_operator, h_sigma, laurent_d, laurent_parity,
    laurent_y0, laurent_y1, CuspSigma, OperatorName, Representation, TruncatedOperator,
};
use crate::exactalg::{cusp_exponents, cusp_membership, LaurentPoly, Scalar};
use crate::hopfcore::{check_quasitriangular, hit_action, r_matrix, Character, HopfPresentation, Side, TensorPoly};
use crate::linalg;
use crate::ncmatrix::{is_quantum_automorphism, strong_orbit, triangular_inverse};
use crate::report::{Check, Report};
use crate::rewrite::{NCPoly, Word};

fn op(name: OperatorName, n: i64) -> TruncatedOperator {
    closed_form_operator(name, n)
}

fn half() -> Scalar {
    Scalar::ratio(1, 2)
}

/// Flattened operator matrix, for rank computations on families of operators.
fn flatten(o: &TruncatedOperator) -> Vec<Scalar> {
    o.matrix().into_iter().flatten().collect()
}

fn family_rank(ops: &[TruncatedOperator]) -> usize {
    linalg::dense_rank(&ops.iter().map(flatten).collect::<Vec<_>>())
}

fn first_mismatch(a: &TruncatedOperator, b: &TruncatedOperator) -> Option<String> {
    cusp_exponents(a.degree_bound())
        .find(|e| a.image(*e) != b.image(*e))
        .map(|e| format!("t^{e}: {} vs {}", a.image(e), b.image(e)))
}

fn equal_ops(name: &str, anchor: &str, a: &TruncatedOperator, b: &TruncatedOperator) -> Check {
    let w = first_mismatch(a, b);
    Check::new(name, anchor, w.is_none(), w)
}

/// Quantum automorphism property and strong orbit of `σ`.
pub fn sigma_checks(sigma: &CuspSigma, orbit_radius: i64) -> Report {
    let n = sigma.degree_bound();
    let mut rep = Report::new("cusp sigma").bound("max_degree", n).bound("orbit_radius", orbit_radius);
    let qa = is_quantum_automorphism(sigma.matrix(), n, orbit_radius);
    rep.push(Check::new(
        "σ is a quantum automorphism",
        "sigma.quantum_automorphism",
        qa.passed,
        Some(if qa.passed { format!("{} monomial pairs", qa.pairs_checked) } else { qa.witnesses.join("; ") }),
    ));
    let orbit = strong_orbit(sigma.matrix(), orbit_radius, None);
    let orbit_ok = orbit.is_ok();
    rep.push(Check::new(
        "strong orbit σ_{d+1} = (σ_d⁻¹)ᵀ",
        "sigma.strong_orbit",
        orbit_ok,
        orbit.as_ref().err().map(|e| e.to_string()),
    ));
    let round_trip = triangular_inverse(sigma.matrix())
        .map(|inv| inv.mul(sigma.matrix()).is_identity() && sigma.matrix().mul(&inv).is_identity())
        .unwrap_or(false);
    rep.push(Check::new("triangular inverse round trip", "sigma.triangular_inverse", round_trip, None));
    let diag_ok = (1..=3).all(|i| sigma.entry(i, i).inverse().is_some());
    rep.push(Check::new(
        "σ is upper triangular with invertible diagonal",
        "sigma.triangular",
        sigma.matrix().is_upper_triangular() && diag_ok,
        None,
    ));
    let lf: Vec<String> = (1..=3)
        .flat_map(|i| (1..=3).map(move |j| (i, j)))
        .filter(|(i, j)| !sigma.entry(*i, *j).preserves_filtration())
        .map(|(i, j)| format!("σ_{i}{j}"))
        .collect();
    rep.push(Check::new(
        "every σ_ij preserves the degree filtration",
        "sigma.locally_finite",
        lf.is_empty(),
        (!lf.is_empty()).then(|| lf.join(", ")),
    ));
    rep
}

/// Closed forms against `σ`, twisted Leibniz rules, and the Laurent-carrier
/// description of `Y` and `D`.
pub fn verify_operator_identities(n: i64) -> Report {
    let mut rep = Report::new("cusp operators").bound("max_degree", n);
    let sigma = match build_sigma(n) {
        Ok(s) => s,
        Err(e) => {
            rep.push(Check::fail("build σ", "sigma.build", e.to_string()));
            return rep;
        }
    };
    for (name, i, j) in [(OperatorName::K, 2, 2), (OperatorName::E, 1, 2), (OperatorName::F, 2, 3), (OperatorName::Z, 1, 3)] {
        rep.push(equal_ops(
            &format!("closed form {name} = σ_{i}{j}"),
            "operators.closed_forms",
            &op(name, n),
            sigma.entry(i, j),
        ));
    }

    let (e, f, k, z) = (op(OperatorName::E, n), op(OperatorName::F, n), op(OperatorName::K, n), op(OperatorName::Z, n));
    let mut leibniz_bad = Vec::new();
    for p in cusp_exponents(n) {
        for q in cusp_exponents(n - p) {
            let (a, b) = (LaurentPoly::t_pow(p), LaurentPoly::t_pow(q));
            let ab = &a * &b;
            let e_rhs = &(&a * &e.apply(&b)) + &(&e.apply(&a) * &k.apply(&b));
            if e.apply(&ab) != e_rhs {
                leibniz_bad.push(format!("E on (t^{p}, t^{q})"));
            }
            let z_rhs = &(&(&a * &z.apply(&b)) + &(&e.apply(&a) * &f.apply(&b))) + &(&z.apply(&a) * &b);
            if z.apply(&ab) != z_rhs {
                leibniz_bad.push(format!("Z on (t^{p}, t^{q})"));
            }
        }
    }
    rep.push(Check::new(
        "twisted Leibniz rules for E and Z",
        "operators.leibniz",
        leibniz_bad.is_empty(),
        leibniz_bad.first().cloned(),
    ));

    let mut carrier_bad = Vec::new();
    for e in cusp_exponents(n) {
        let tn = LaurentPoly::t_pow(e);
        if &laurent_y0(&tn) + &laurent_y1(&tn) != closed_form_image(OperatorName::Y, e) {
            carrier_bad.push(format!("Y on t^{e}"));
        }
        if laurent_d(&tn) != closed_form_image(OperatorName::D, e) {
            carrier_bad.push(format!("D on t^{e}"));
        }
        if laurent_parity(&tn) != closed_form_image(OperatorName::K, e) {
            carrier_bad.push(format!("K on t^{e}"));
        }
    }
    rep.push(Check::new(
        "Y = t⁻¹d/dt + (3/2)t⁻²(K−1) and D = −½t⁻¹(K−1) on the Laurent carrier",
        "operators.laurent_carrier",
        carrier_bad.is_empty(),
        carrier_bad.first().cloned(),
    ));

    let t3 = LaurentPoly::t_pow(3);
    let (y0, y1) = (laurent_y0(&t3), laurent_y1(&t3));
    let parts_leave = !cusp_membership(&y0) && !cusp_membership(&y1);
    let sum_stays = cusp_exponents(n).all(|e| {
        let tn = LaurentPoly::t_pow(e);
        cusp_membership(&(&laurent_y0(&tn) + &laurent_y1(&tn)))
    });
    rep.push(Check::new(
        "the two summands of Y leave the cusp, their sum does not",
        "operators.laurent_summands",
        parts_leave && sum_stays,
        Some(format!("on t^3: {y0} and {y1}")),
    ));
    rep
}

/// `U_σ`: extra relations, basis independence and grading.
pub fn u_sigma_checks(n: i64, max_exp: u32) -> Report {
    let mut rep = Report::new("U_sigma").bound("max_degree", n).bound("max_exponent", max_exp);
    let (c, d, k, y) = (op(OperatorName::C, n), op(OperatorName::D, n), op(OperatorName::K, n), op(OperatorName::Y, n));
    rep.push(Check::new("CD = 0", "u_sigma.relations", c.compose(&d).is_zero(), None));
    rep.push(equal_ops("KC = C", "u_sigma.relations", &k.compose(&c), &c));
    rep.push(equal_ops("KD = D", "u_sigma.relations", &k.compose(&d), &d));

    let id = TruncatedOperator::identity(n);
    let mut family = Vec::new();
    let mut graded = Vec::new();
    let mut ypow = id.clone();
    for m in 0..=max_exp {
        for (lead, deg) in [(&id, 0), (&c, 3), (&d, 1), (&k, 0)] {
            family.push(lead.compose(&ypow));
            graded.push((family.last().unwrap().clone(), deg + 2 * m as i64));
        }
        ypow = ypow.compose(&y);
    }
    let rank = family_rank(&family);
    rep.push(Check::new(
        "{Yᵃ, CYᵇ, DYᶜ, KYᵈ} are linearly independent",
        "u_sigma.basis",
        rank == family.len(),
        Some(format!("rank {rank} of {}", family.len())),
    ));
    let bad_grade = graded.iter().find_map(|(o, deg)| {
        cusp_exponents(n)
            .find(|e| o.image(*e).terms().any(|(f, _)| f != e - deg))
            .map(|e| format!("degree {deg} operator sends t^{e} to {}", o.image(e)))
    });
    rep.push(Check::new("(U_σ)_i B_j ⊆ B_{j−i}", "u_sigma.grading", bad_grade.is_none(), bad_grade));
    rep
}

/// Kernel of `H_σ → End(B)`.
pub fn kernel_checks(n: i64, max_exp: u32) -> Report {
    let mut rep = Report::new("kernel").bound("max_degree", n).bound("max_exponent", max_exp);
    let h = h_sigma();
    let rho = Representation::new(&h, n);
    let (c, d, k, y) = (h.gen("C"), h.gen("D"), h.gen("K"), h.gen("Y"));
    let kernel = [
        ("CK + C", &h.mul(&c, &k) + &c),
        ("DK + D", &h.mul(&d, &k) + &d),
        ("CD", h.mul(&c, &d)),
        ("CDK", h.mul(&h.mul(&c, &d), &k)),
    ];
    for (name, elem) in &kernel {
        let bad = (0..=max_exp).find(|m| !rho.apply(&h.mul(elem, &h.pow(&y, *m))).is_zero());
        rep.push(Check::new(
            format!("({name})·Yᵐ acts as zero"),
            "kernel.annihilates",
            bad.is_none() && !elem.is_zero(),
            bad.map(|m| format!("m = {m}")),
        ));
    }
    let mut family = Vec::new();
    for m in 0..=max_exp {
        for lead in [NCPoly::one(), c.clone(), d.clone(), k.clone()] {
            family.push(rho.apply(&h.mul(&lead, &h.pow(&y, m))));
        }
    }
    let rank = family_rank(&family);
    rep.push(Check::new(
        "images of {1, C, D, K}·Yᵐ are independent",
        "kernel.complement",
        rank == family.len(),
        Some(format!("rank {rank} of {}", family.len())),
    ));
    rep
}

/// The element of `H_σ` acting as `E`: `−½(K − 1) − iD`.
pub fn e_in_h_sigma(h: &HopfPresentation) -> NCPoly {
    let k = h.gen("K");
    (&(&k - &NCPoly::one()).scale(&-half()) - &h.gen("D").scale(&Scalar::i())).clone()
}

/// `E_±`, `Z_±`, `Y`, `D`, `C` decompositions, as operators and in `H_σ`.
pub fn decomposition_checks(n: i64) -> Report {
    let mut rep = Report::new("decomposition").bound("max_degree", n);
    let (e, f, k, z, y, d, c) = (
        op(OperatorName::E, n),
        op(OperatorName::F, n),
        op(OperatorName::K, n),
        op(OperatorName::Z, n),
        op(OperatorName::Y, n),
        op(OperatorName::D, n),
        op(OperatorName::C, n),
    );
    let id = TruncatedOperator::identity(n);
    let conj = |x: &TruncatedOperator| k.compose(x).compose(&k);
    let e_plus = e.add(&conj(&e)).scale(&half());
    let e_minus = e.sub(&conj(&e)).scale(&half());
    let z_plus = z.add(&conj(&z)).scale(&half());
    let z_minus = z.sub(&conj(&z)).scale(&half());
    let k_minus_1 = k.sub(&id);
    rep.push(equal_ops("E₊ = −½(K − 1)", "decomposition.e_plus", &e_plus, &k_minus_1.scale(&-half())));
    rep.push(Check::new("E₋² = 0", "decomposition.e_minus_square", e_minus.compose(&e_minus).is_zero(), None));
    rep.push(Check::new("Z₋ = 0", "decomposition.z_minus", z_minus.is_zero(), None));
    rep.push(equal_ops("Z₋ = −E₊E₋", "decomposition.z_minus", &z_minus, &e_plus.compose(&e_minus).scale(&-Scalar::one())));
    rep.push(equal_ops(
        "Y = 6Z₊ − (3/2)(K − 1)",
        "decomposition.y",
        &y,
        &z_plus.scale(&Scalar::from_int(6)).sub(&k_minus_1.scale(&Scalar::ratio(3, 2))),
    ));
    rep.push(equal_ops("D = iE₋", "decomposition.d", &d, &e_minus.scale(&Scalar::i())));
    rep.push(equal_ops("C = YD − DY", "decomposition.c", &c, &y.compose(&d).sub(&d.compose(&y))));
    rep.push(equal_ops("F = −KE", "decomposition.f", &f, &k.compose(&e).scale(&-Scalar::one())));
    let t5 = LaurentPoly::t_pow(5.min(n));
    rep.push(Check::new("E₊(t⁵) = t⁵", "decomposition.e_plus", e_plus.apply(&t5) == t5, None));

    let h = h_sigma();
    let rho = Representation::new(&h, n);
    let kh = h.gen("K");
    let eh = e_in_h_sigma(&h);
    let conj_h = |x: &NCPoly| h.mul(&h.mul(&kh, x), &kh);
    let ep_h = (&eh + &conj_h(&eh)).scale(&half());
    let em_h = (&eh - &conj_h(&eh)).scale(&half());
    rep.push(equal_ops("−½(K − 1) − iD acts as E", "decomposition.e_in_h", &rho.apply(&eh), &e));
    rep.push(Check::new(
        "E₊ = −½(K − 1) in H_σ",
        "decomposition.e_plus",
        ep_h == (&kh - &NCPoly::one()).scale(&-half()),
        None,
    ));
    rep.push(Check::new("E₋ = −iD in H_σ", "decomposition.d", em_h == h.gen("D").scale(&-Scalar::i()), None));
    rep.push(Check::new("E₋² = 0 in H_σ", "decomposition.e_minus_square", h.mul(&em_h, &em_h).is_zero(), None));
    let zp_h = (&h.gen("Y") + &(&kh - &NCPoly::one()).scale(&Scalar::ratio(3, 2))).scale(&Scalar::ratio(1, 6));
    rep.push(equal_ops("(Y + (3/2)(K − 1))/6 acts as Z₊", "decomposition.z_plus", &rho.apply(&zp_h), &z_plus));
    rep.push(Check::new("K Z₊ K = Z₊ in H_σ", "decomposition.z_plus", conj_h(&zp_h) == zp_h, None));
    let e_plus_e_minus = h.mul(&ep_h, &em_h);
    rep.push(Check::new(
        "E₊E₋ is a nonzero element of H_σ acting as zero",
        "decomposition.z_minus",
        !e_plus_e_minus.is_zero() && rho.apply(&e_plus_e_minus).is_zero(),
        Some(h.show(&e_plus_e_minus)),
    ));
    rep
}

/// `X(ab) = Σ X₍₁₎(a) X₍₂₎(b)` for the generators of `H_σ`.
pub fn module_algebra_check(n: i64) -> Report {
    let mut rep = Report::new("module algebra").bound("max_degree", n);
    let h = h_sigma();
    let rho = Representation::new(&h, n);
    for g in ["K", "D", "Y", "C"] {
        let x = h.gen(g);
        let delta = h.coproduct(&x);
        let whole = rho.apply(&x);
        let legs: Vec<(TruncatedOperator, TruncatedOperator, Scalar)> =
            delta.terms().map(|(l, c)| (rho.word(&l[0]), rho.word(&l[1]), c.clone())).collect();
        let mut bad = None;
        'pairs: for p in cusp_exponents(n) {
            for q in cusp_exponents(n - p) {
                let (a, b) = (LaurentPoly::t_pow(p), LaurentPoly::t_pow(q));
                let mut rhs = LaurentPoly::zero();
                for (l, r, c) in &legs {
                    rhs = &rhs + &(&l.apply(&a) * &r.apply(&b)).scale(c);
                }
                if whole.apply(&(&a * &b)) != rhs {
                    bad = Some(format!("(t^{p}, t^{q})"));
                    break 'pairs;
                }
            }
        }
        rep.push(Check::new(format!("{g}(ab) = {g}₍₁₎(a)·{g}₍₂₎(b)"), "module_algebra.law", bad.is_none(), bad));
    }
    rep
}

type Tensor2 = BTreeMap<(i64, i64), Scalar>;

fn add_into(t: &mut Tensor2, key: (i64, i64), c: Scalar) {
    let e = t.entry(key).or_insert_with(Scalar::zero);
    *e += &c;
    if e.is_zero() {
        t.remove(&key);
    }
}

/// Action of `x ∈ H ⊗ H` (given as a rank-two tensor) on `B ⊗ B`.
fn act2(rho: &Representation, x: &TensorPoly, v: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for (legs, c) in x.terms() {
        let (l, r) = (rho.word(&legs[0]), rho.word(&legs[1]));
        for ((i, j), v) in v {
            for (a, ca) in l.image(*i).terms() {
                for (b, cb) in r.image(*j).terms() {
                    add_into(&mut out, (a, b), c * v * ca * cb);
                }
            }
        }
    }
    out
}

fn graded_flip(v: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::new();
    for ((i, j), c) in v {
        let s = if (i * j) % 2 == 0 { c.clone() } else { -c.clone() };
        add_into(&mut out, (*j, *i), s);
    }
    out
}

/// Braiding `v ⊗ w ↦ τ(R_c(v ⊗ w))` on `B ⊗ B`.
fn r_braid(rho: &Representation, r: &TensorPoly, v: &Tensor2) -> Tensor2 {
    act2(rho, r, v).into_iter().map(|((i, j), c)| ((j, i), c)).collect()
}

/// Whether the braiding of `R_c` commutes with the generators on `B ⊗ B`
/// truncated at total degree `degree`; for `c = 0` it is also compared with
/// `tⁱ ⊗ tʲ ↦ (−1)^{ij} tʲ ⊗ tⁱ`.
pub fn braiding_check(degree: i64, c: &Scalar) -> Report {
    let mut rep = Report::new(format!("braiding c = {c}")).bound("degree", degree);
    let h = h_sigma();
    let rho = Representation::new(&h, degree);
    let r = r_matrix(&h, c);
    let pairs: Vec<(i64, i64)> = cusp_exponents(degree)
        .flat_map(|i| cusp_exponents(degree - i).map(move |j| (i, j)))
        .collect();
    let unit = |i: i64, j: i64| Tensor2::from([((i, j), Scalar::one())]);
    if c.is_zero() {
        let same = pairs.iter().all(|&(i, j)| r_braid(&rho, &r, &unit(i, j)) == graded_flip(&unit(i, j)));
        rep.push(Check::new("τ∘R₀ is tⁱ⊗tʲ ↦ (−1)^{ij} tʲ⊗tⁱ", "braiding.graded_flip", same, None));
    }
    for g in ["K", "D", "Y", "C"] {
        let dx = h.coproduct(&h.gen(g));
        let bad = pairs.iter().find_map(|&(i, j)| {
            let v = unit(i, j);
            let lhs = r_braid(&rho, &r, &act2(&rho, &dx, &v));
            let rhs = act2(&rho, &dx, &r_braid(&rho, &r, &v));
            (lhs != rhs).then(|| {
                let show = |t: &Tensor2| {
                    t.iter().map(|((a, b), s)| format!("{s}·t^{a}⊗t^{b}")).collect::<Vec<_>>().join(" + ")
                };
                format!("on t^{i}⊗t^{j}: braid({g}·v) = {}, {g}·braid(v) = {}", show(&lhs), show(&rhs))
            })
        });
        rep.push(Check::new(format!("braiding commutes with {g}"), "braiding.module_map", bad.is_none(), bad));
    }
    rep
}

/// Closed forms and the automorphism property of the hit actions.
pub fn hit_action_checks(h: &HopfPresentation, max_y: u32) -> Report {
    let mut rep = Report::new("hit actions").bound("max_y_exponent", max_y);
    let chars = [
        Character::new(Scalar::one(), Scalar::one()),
        Character::new(-Scalar::one(), Scalar::zero()),
        Character::new(-Scalar::one(), Scalar::from_int(-2)),
        Character::new(Scalar::one(), Scalar::i()),
    ];
    let words = basis_words(h, max_y);
    let y = h.gen("Y");
    for chi in &chars {
        let mut bad = None;
        for w in &words {
            let count = |n: &str| w.iter().filter(|s| h.alphabet().name(**s) == n).count() as u32;
            let (a, b, c, d) = (count("C"), count("D"), count("K"), count("Y"));
            let head = NCPoly::word(w[..(a + b + c) as usize].to_vec());
            let shifted = h.mul(&head, &h.pow(&(&y + &NCPoly::constant(chi.lambda.clone())), d));
            let p = NCPoly::word(w.clone());
            let left = shifted.scale(&chi.s.pow(a + b + c));
            let right = shifted.scale(&chi.s.pow(c));
            if hit_action(chi, Side::Left, h, &p) != left || hit_action(chi, Side::Right, h, &p) != right {
                bad = Some(h.show(&p));
                break;
            }
        }
        rep.push(Check::new(
            format!("closed forms of L and R for s = {}, λ = {}", chi.s, chi.lambda),
            "hit.closed_forms",
            bad.is_none(),
            bad,
        ));
    }
    let chi = &chars[0];
    let psi = &chars[2];
    let small: Vec<&Word> = words.iter().filter(|w| w.len() <= 3).collect();
    let mut bad = None;
    'outer: for u in &small {
        for v in &small {
            let (p, q) = (NCPoly::word((*u).clone()), NCPoly::word((*v).clone()));
            let pq = h.mul(&p, &q);
            for side in [Side::Left, Side::Right] {
                let act = |x: &NCPoly| hit_action(chi, side, h, x);
                if act(&pq) != h.mul(&act(&p), &act(&q)) {
                    bad = Some(format!("{side:?} on ({}, {})", h.show(&p), h.show(&q)));
                    break 'outer;
                }
            }
            let lr = hit_action(chi, Side::Left, h, &hit_action(psi, Side::Right, h, &p));
            let rl = hit_action(psi, Side::Right, h, &hit_action(chi, Side::Left, h, &p));
            if lr != rl {
                bad = Some(format!("L and R do not commute on {}", h.show(&p)));
                break 'outer;
            }
        }
    }
    rep.push(Check::new("hit actions are commuting algebra maps", "hit.automorphism", bad.is_none(), bad));

    // X − R_{1,1}(X) drops the top Y-exponent by exactly one.
    let y_degree = |p: &NCPoly| {
        p.terms().map(|(w, _)| w.iter().filter(|s| h.alphabet().name(**s) == "Y").count()).max()
    };
    let mut bad = None;
    for w in words.iter().filter(|w| w.last().is_some_and(|s| h.alphabet().name(*s) == "Y")) {
        let x = NCPoly::word(w.clone());
        let diff = &x - &hit_action(chi, Side::Right, h, &x);
        let top = y_degree(&x).unwrap_or(0);
        if diff.is_zero() || y_degree(&diff) != Some(top - 1) {
            bad = Some(h.show(&x));
            break;
        }
    }
    rep.push(Check::new("X − R₁,₁(X) lowers the Y-degree by one", "hit.degree_reduction", bad.is_none(), bad));
    rep
}

/// Confluence of the `H_σ` rewriting system and its basis counts.
pub fn h_sigma_rewriting_checks(max_y: u32) -> Report {
    let h = h_sigma();
    let mut rep = Report::new("H_sigma rewriting").bound("max_y_exponent", max_y);
    let conf = h.system().check_confluence(2 * max_y as u64 + 6);
    rep.push(Check::new(
        "rewriting system is confluent",
        "h_sigma.confluence",
        conf.is_confluent(),
        Some(format!("{} overlaps, {} inclusions", conf.overlaps_checked, conf.inclusions_checked)),
    ));
    let words = basis_words(&h, max_y);
    let irreducible = words.iter().all(|w| h.system().is_irreducible(w));
    rep.push(Check::new(
        "CᵃDᵇKᶜYᵈ are irreducible, 8(d+1) of them",
        "h_sigma.basis",
        irreducible && words.len() == 8 * (max_y as usize + 1),
        Some(format!("{} words", words.len())),
    ));
    let per_degree: Vec<usize> = (0..=max_y)
        .map(|d| {
            h.system()
                .enumerate_basis_capped(d as u64 + 3, d as usize + 3)
                .iter()
                .filter(|w| w.iter().filter(|s| h.alphabet().name(**s) == "Y").count() <= d as usize)
                .count()
        })
        .collect();
    let counts_ok = per_degree.iter().enumerate().all(|(d, c)| *c == 8 * (d + 1));
    rep.push(Check::new(
        "irreducible words with Y-exponent ≤ d number 8(d+1)",
        "h_sigma.basis_count",
        counts_ok,
        Some(format!("{per_degree:?}")),
    ));
    rep
}

/// Hopf axioms, relations, bijective antipode, hit actions and the R-matrices
/// of `H_σ`.
pub fn h_sigma_hopf_checks(max_y: u32) -> Report {
    let h = h_sigma();
    let words = basis_words(&h, max_y);
    let mut rep = Report::new("H_sigma Hopf structure").bound("max_y_exponent", max_y);
    rep.extend(h.check_hopf_axioms(&words));
    rep.extend(h.check_relations());
    let bij = h.antipode_bijective_on(&words);
    rep.push(Check::new("S is bijective on the basis span", "h_sigma.antipode_bijective", bij.is_ok(), bij.err()));
    let d = h.gen("D");
    rep.push(Check::new("S²(D) = −D", "h_sigma.antipode_square", h.antipode(&h.antipode(&d)) == -&d, None));
    rep.extend(hit_action_checks(&h, max_y.min(4)));
    rep.extend(check_quasitriangular(&h, &Scalar::zero()));
    rep
}

/// Structure of `H_σ`: rewriting and Hopf checks together.
pub fn h_sigma_checks(max_y: u32) -> Report {
    let mut rep = h_sigma_rewriting_checks(max_y);
    rep.suite = "H_sigma".into();
    rep.extend(h_sigma_hopf_checks(max_y));
    rep
}

/// Closed-form operators computed at `n` restrict to those computed at `m`.
pub fn truncation_independence(n: i64, m: i64) -> Report {
    let mut rep = Report::new("truncation independence").bound("max_degree", n).bound("smaller_degree", m);
    let bad: Vec<String> = OperatorName::ALL
        .into_iter()
        .filter(|o| op(*o, n).restrict(m) != op(*o, m))
        .map(|o| o.to_string())
        .collect();
    rep.push(Check::new(
        "closed forms are independent of the truncation",
        "operators.truncation",
        bad.is_empty(),
        (!bad.is_empty()).then(|| bad.join(", ")),
    ));
    rep
}

/// Operators on the cusp at truncation `n`: closed forms, `U_σ`, kernel,
/// decomposition and the module-algebra law. `σ` itself, `H_σ` and the
/// braiding have their own suites.
pub fn verify_cusp(n: i64, max_y: u32) -> Report {
    let mut rep = Report::new("cusp").bound("max_degree", n).bound("hopf_degree", max_y);
    if let Err(e) = build_sigma(n) {
        rep.push(Check::fail("build σ", "sigma.build", e.to_string()));
        return rep;
    }
    rep.extend(verify_operator_identities(n));
    let u_exp = ((n - 4) / 2).clamp(0, max_y as i64) as u32;
    rep.extend(u_sigma_checks(n, u_exp));
    rep.extend(kernel_checks(n, u_exp.min(5)));
    rep.extend(decomposition_checks(n));
    rep.extend(module_algebra_check(n));
    rep.extend(truncation_independence(n, n / 2));
    rep
}
