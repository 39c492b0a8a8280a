//! Verification suites for `A_σ` and its pairing with `H_σ`.

use num_traits::Zero;

use super::basis::dual_basis_check;
use super::embed::{algebra_check, coideal_check, injectivity_check};
use super::pairing::{a_exponents, closed_coproduct_power, h_exponents, Letter, PairingOracle, PairingTable};
use super::presentations::{a_sigma, a_sigma_abc, a_sigma_delta, translation_checks};
use crate::cusp::basis_word;
use crate::exactalg::Scalar;
use crate::hopfcore::HopfPresentation;
use crate::linalg;
use crate::report::{Check, Report};
use crate::rewrite::{NCPoly, Word};

/// `γᵃφᵇψᶜ` with `a, c ∈ {0, 1}` and `b ≤ max_b`, as words of `a_pres`.
pub fn a_basis_words(a_pres: &HopfPresentation, max_b: u32) -> Vec<Word> {
    a_exponents(max_b)
        .into_iter()
        .map(|[a, b, c]| {
            let al = a_pres.alphabet();
            let mut w = vec![al.sym("gamma").unwrap(); a as usize];
            w.extend(std::iter::repeat_n(al.sym("phi").unwrap(), b as usize));
            w.extend(std::iter::repeat_n(al.sym("psi").unwrap(), c as usize));
            w
        })
        .collect()
}

fn count_symbol(a_pres: &HopfPresentation, w: &[u8], name: &str) -> usize {
    w.iter().filter(|s| a_pres.alphabet().name(**s) == name).count()
}

/// Confluence, basis counts and Hopf axioms for the presentations of `A_σ`.
pub fn a_sigma_checks(max_b: u32) -> Report {
    let mut rep = Report::new("A_sigma").bound("max_phi_exponent", max_b);
    for h in [a_sigma(), a_sigma_delta(), a_sigma_abc()] {
        let conf = h.system().check_confluence(2 * max_b as u64 + 8);
        rep.push(Check::new(
            format!("{} is confluent", h.name()),
            "a_sigma.confluence",
            conf.is_confluent(),
            Some(format!("{} overlaps, {} inclusions", conf.overlaps_checked, conf.inclusions_checked)),
        ));
    }
    let a = a_sigma();
    let words = a_basis_words(&a, max_b);
    let counts: Vec<usize> = (0..=max_b)
        .map(|b| {
            a.system()
                .enumerate_basis_capped(b as u64 + 3, b as usize + 2)
                .iter()
                .filter(|w| count_symbol(&a, w, "phi") <= b as usize)
                .count()
        })
        .collect();
    let counts_ok = counts.iter().enumerate().all(|(b, c)| *c == 4 * (b + 1));
    rep.push(Check::new(
        "irreducible words with φ-exponent ≤ b number 4(b+1)",
        "a_sigma.basis_count",
        counts_ok && words.iter().all(|w| a.system().is_irreducible(w)),
        Some(format!("{counts:?}")),
    ));
    rep.extend(a.check_hopf_axioms(&words));
    rep.extend(a.check_relations());
    // S preserves the grading but not the φ-exponent, so test it on a graded piece.
    let graded: Vec<Word> = words.iter().filter(|w| a.system().graded_degree(w) <= max_b as u64).cloned().collect();
    let bij = a.antipode_bijective_on(&graded);
    rep.push(Check::new("S is bijective on the basis span", "a_sigma.antipode_bijective", bij.is_ok(), bij.err()));
    rep.extend(translation_checks());
    rep
}

/// Closed pairing formula against the oracle, the named values, and the
/// closed coproduct of monomials.
pub fn pairing_checks(oracle: &PairingOracle, max_l: u32, max_b: u32) -> Report {
    let mut rep = Report::new("pairing").bound("max_l", max_l).bound("max_b", max_b);
    let table = PairingTable::build(oracle, max_l, max_b);
    let bad: Vec<_> = table.discrepancies().collect();
    rep.push(Check::new(
        "closed pairing equals the oracle on the whole table",
        "pairing.closed_formula",
        bad.is_empty(),
        Some(match bad.first() {
            None => format!("{} cells, 0 discrepancies", table.entries.len()),
            Some(e) => format!(
                "{} discrepancies; first at {:?},{:?}: oracle {} closed {}",
                bad.len(),
                e.h_exponents,
                e.a_exponents,
                e.oracle,
                e.closed
            ),
        }),
    ));
    let h = oracle.h_sigma();
    let named = [
        ("⟨D, φ⟩ = 1", oracle.pair(&h.gen("D"), &[Letter::Phi]), 1),
        ("⟨K, ψ⟩ = −1", oracle.pair(&h.gen("K"), &[Letter::Psi]), -1),
        ("⟨C, γ⟩ = 2", oracle.pair(&h.gen("C"), &[Letter::Gamma]), 2),
        ("⟨Y, φ²⟩ = 6", oracle.pair(&h.gen("Y"), &[Letter::Phi, Letter::Phi]), 6),
    ];
    for (name, got, want) in named {
        rep.push(Check::new(name, "pairing.values", got == Scalar::from_int(want), Some(got.to_string())));
    }
    let three_delta = oracle.pair(&h.gen("Y"), &[Letter::Delta]) * Scalar::from_int(3);
    rep.push(Check::pass("value of ⟨Y, 3δ⟩", "pairing.delta").with_note(three_delta.to_string()));

    // Relations of A_σ pair to zero with every H_σ basis word.
    let a = a_sigma();
    let hwords: Vec<Word> = h_exponents(max_l.min(3)).into_iter().map(|[i, j, k, l]| basis_word(h, i, j, k, l)).collect();
    let mut bad_rel = None;
    'rules: for r in a.system().rules() {
        let diff = &NCPoly::word(r.lhs.clone()) - &r.rhs;
        for w in &hwords {
            let v = oracle.pair_poly(&NCPoly::word(w.clone()), &a, &diff);
            if !v.is_zero() {
                bad_rel = Some(format!("{} on {}", a.alphabet().show_word(&r.lhs), h.alphabet().show_word(w)));
                break 'rules;
            }
        }
    }
    rep.push(Check::new("pairing vanishes on relations of A_σ", "pairing.well_defined", bad_rel.is_none(), bad_rel));

    let mut bad_cop = None;
    for [x, y, z] in a_exponents(max_b) {
        let m = a.mul(&a.mul(&a.pow(&a.gen("gamma"), x), &a.pow(&a.gen("phi"), y)), &a.pow(&a.gen("psi"), z));
        if closed_coproduct_power(&a, x, y, z) != a.coproduct(&m) {
            bad_cop = Some(format!("({x},{y},{z})"));
            break;
        }
    }
    rep.push(Check::new(
        "closed coproduct of γᵃφᵇψᶜ matches the multiplicative one",
        "pairing.closed_coproduct",
        bad_cop.is_none(),
        bad_cop,
    ));
    rep
}

/// `⟨XY, w⟩ = ⟨X, w₍₁₎⟩⟨Y, w₍₂₎⟩`, `⟨X, vw⟩ = ⟨X₍₁₎, v⟩⟨X₍₂₎, w⟩` and
/// `⟨S(X), w⟩ = ⟨X, S(w)⟩` for the given basis words.
pub fn pairing_compatibility(oracle: &PairingOracle, xs: &[Word], ys: &[Word], ws: &[Word]) -> Result<(), String> {
    let h = oracle.h_sigma();
    let a = a_sigma();
    let pw = |x: &NCPoly, w: &NCPoly| oracle.pair_poly(x, &a, w);
    for x in xs {
        let xp = NCPoly::word(x.clone());
        for w in ws {
            let wp = NCPoly::word(w.clone());
            let dw = a.coproduct(&wp);
            for y in ys {
                let yp = NCPoly::word(y.clone());
                let lhs = pw(&h.mul(&xp, &yp), &wp);
                let rhs: Scalar = dw
                    .terms()
                    .map(|(l, c)| c * &pw(&xp, &NCPoly::word(l[0].clone())) * pw(&yp, &NCPoly::word(l[1].clone())))
                    .sum();
                if lhs != rhs {
                    return Err(format!("product rule on {} {} against {}", h.show(&xp), h.show(&yp), a.show(&wp)));
                }
            }
            for v in ws {
                let vp = NCPoly::word(v.clone());
                let lhs = pw(&xp, &a.mul(&vp, &wp));
                let rhs: Scalar = h
                    .coproduct(&xp)
                    .terms()
                    .map(|(l, c)| c * &pw(&NCPoly::word(l[0].clone()), &vp) * pw(&NCPoly::word(l[1].clone()), &wp))
                    .sum();
                if lhs != rhs {
                    return Err(format!("coproduct rule on {} against {} {}", h.show(&xp), a.show(&vp), a.show(&wp)));
                }
            }
            if pw(&h.antipode(&xp), &wp) != pw(&xp, &a.antipode(&wp)) {
                return Err(format!("antipode rule on {} against {}", h.show(&xp), a.show(&wp)));
            }
        }
    }
    Ok(())
}

/// Gram matrix between `CⁱDʲKᵏYˡ` (`l ≤ max_l`) and `γᵃφᵇψᶜ` (`b ≤ 2 max_l + 1`).
pub fn gram_rank(oracle: &PairingOracle, max_l: u32) -> (usize, usize) {
    let rows: Vec<Vec<Scalar>> = h_exponents(max_l)
        .into_iter()
        .map(|hx| a_exponents(2 * max_l + 1).into_iter().map(|ax| oracle.pair_monomials(hx, ax)).collect())
        .collect();
    (linalg::dense_rank(&rows), rows.len())
}

/// Grading, center, degree-zero part (in `a, b, c`) and nondegeneracy.
pub fn structural_checks(oracle: &PairingOracle, max_l: u32) -> Report {
    let mut rep = Report::new("A_sigma structure").bound("max_l", max_l);
    let abc = a_sigma_abc();
    let sys = abc.system();
    let bad_rule = sys.rules().iter().find(|r| r.rhs.terms().any(|(w, _)| sys.graded_degree(w) != sys.graded_degree(&r.lhs)));
    rep.push(Check::new(
        "relations are homogeneous for deg a = 1, deg b = 3, deg c = 0",
        "structure.graded_relations",
        bad_rule.is_none(),
        bad_rule.map(|r| abc.alphabet().show_word(&r.lhs)),
    ));
    let bad_cop = (0..3u8).find(|s| {
        let d = sys.graded_degree(&[*s]);
        abc.coproduct(&NCPoly::sym(*s)).terms().any(|(l, _)| sys.graded_degree(&l[0]) + sys.graded_degree(&l[1]) != d)
    });
    rep.push(Check::new(
        "coproducts are homogeneous",
        "structure.graded_coproduct",
        bad_cop.is_none(),
        bad_cop.map(|s| abc.alphabet().name(s).to_string()),
    ));
    let a2 = abc.pow(&abc.gen("a"), 2);
    let words = sys.enumerate_basis_capped(8, 8);
    let noncentral = words.iter().find(|w| {
        let p = NCPoly::word((*w).clone());
        abc.mul(&a2, &p) != abc.mul(&p, &a2)
    });
    rep.push(Check::new(
        "a² is central",
        "structure.center",
        noncentral.is_none(),
        noncentral.map(|w| abc.alphabet().show_word(w)),
    ));
    let deg0: Vec<String> = words.iter().filter(|w| sys.graded_degree(w) == 0).map(|w| abc.alphabet().show_word(w)).collect();
    rep.push(Check::new(
        "degree-zero part is span{1, c}",
        "structure.degree_zero",
        deg0.len() == 2 && deg0.contains(&"c".to_string()),
        Some(deg0.join(", ")),
    ));
    let (rank, size) = gram_rank(oracle, max_l);
    rep.push(Check::new(
        "pairing Gram matrix has full rank",
        "structure.nondegenerate",
        rank == size,
        Some(format!("rank {rank} of {size}")),
    ));
    rep
}

/// Embedding checks for one value of `λ`.
pub fn embedding_checks(lambda: &Scalar, max_d: i64) -> Report {
    let mut rep = algebra_check(lambda);
    rep.extend(coideal_check(lambda, max_d.min(10)));
    rep.extend(injectivity_check(lambda, max_d));
    rep
}

/// The whole dual picture at pairing bounds `max_l`, `max_b`.
pub fn verify_dual(max_l: u32, max_b: u32, lambdas: &[Scalar], embed_degree: i64) -> Report {
    let oracle = PairingOracle::new();
    let mut rep = Report::new("dual").bound("max_l", max_l).bound("max_b", max_b).bound("embed_degree", embed_degree);
    rep.extend(a_sigma_checks(max_b));
    rep.extend(pairing_checks(&oracle, max_l, max_b));
    let (db, _) = dual_basis_check(&oracle, max_b);
    rep.extend(db);
    for l in lambdas {
        rep.extend(embedding_checks(l, embed_degree));
    }
    rep.extend(structural_checks(&oracle, max_l));
    let h = oracle.h_sigma();
    let xs: Vec<Word> = h_exponents(1).into_iter().map(|[i, j, k, l]| basis_word(h, i, j, k, l)).collect();
    let a = a_sigma();
    let ws: Vec<Word> = a_basis_words(&a, 3);
    let compat = pairing_compatibility(&oracle, &xs, &xs, &ws);
    rep.push(Check::new("pairing respects products, coproducts and antipodes", "pairing.compatible", compat.is_ok(), compat.err()));
    rep
}
