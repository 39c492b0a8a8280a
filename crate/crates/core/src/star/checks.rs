//! Verification of the involutions against the cusp operators, the strong
//! orbit and the pairing.

use super::hopf::{cartan_involution, check_hopf_star_axioms, closed_form_star, dictionary_star, GeneratorInvolution};
use super::matrix::{dagger, evaluate, vartheta, vartheta_transpose_mismatch, InvolutivePermutation};
use crate::cusp::{basis_words, build_sigma, closed_form_operator, h_sigma, OperatorName, Representation, TruncatedOperator};
use crate::dual::{a_sigma, embedding_images, h_exponents, PairingOracle};
use crate::exactalg::{LaurentPoly, Scalar};
use crate::hopfcore::HopfPresentation;
use crate::ncmatrix::{invert, strong_orbit};
use crate::report::{Check, Report};
use crate::rewrite::NCPoly;

fn exponents(n: i64) -> impl Iterator<Item = i64> {
    std::iter::once(0).chain(2..=n)
}

/// `ϑ(σ)ᵀ = σ` for `s = (1↔3)` but not for the identity, and
/// `σ(b*) = σ(b)†` on `b = t^e, i·t^e`.
pub fn sigma_self_conjugate(n: i64) -> Report {
    let mut rep = Report::new("star.sigma").bound("N", n);
    let sigma = build_sigma(n).expect("N large enough");
    let rev = InvolutivePermutation::reversal(3);
    let miss = vartheta_transpose_mismatch(sigma.matrix(), &rev);
    rep.push(Check::new(
        "ϑ(σ)ᵀ = σ for ī = 4 − i",
        "star.vartheta.reversal",
        miss.is_none(),
        miss.map(|(i, j)| format!("entry ({i}, {j})")),
    ));
    let id_miss = vartheta_transpose_mismatch(sigma.matrix(), &InvolutivePermutation::identity(3));
    rep.push(Check::new(
        "ϑ(σ)ᵀ ≠ σ for the identity permutation",
        "star.vartheta.identity",
        id_miss.is_some(),
        id_miss.map(|(i, j)| format!("first differing entry ({i}, {j})")),
    ));
    let bad = exponents(n)
        .flat_map(|e| [LaurentPoly::t_pow(e), LaurentPoly::monomial(Scalar::i(), e)])
        .find(|b| evaluate(sigma.matrix(), &b.conj()) != dagger(&evaluate(sigma.matrix(), b), &rev));
    rep.push(Check::new(
        "σ(b*) = σ(b)† on monomials",
        "star.vartheta.equivalence",
        bad.is_none(),
        bad.map(|b| format!("b = {b}")),
    ));
    rep
}

/// `ϑ(σ_d) = σ_{−d}ᵀ` on the orbit window and `ϑ(σ̂_d) = ϑ(σ_d)^`.
pub fn orbit_involution_check(n: i64, radius: i64) -> Report {
    let mut rep = Report::new("star.orbit").bound("N", n).bound("radius", radius);
    let sigma = build_sigma(n).expect("N large enough");
    let s = InvolutivePermutation::reversal(3);
    let orbit = match strong_orbit(sigma.matrix(), radius, None) {
        Ok(o) => o,
        Err(e) => {
            rep.push(Check::fail("strong orbit", "star.orbit.window", e.to_string()));
            return rep;
        }
    };
    for d in -radius..=radius {
        let ok = vartheta(&orbit.window[&d], &s) == orbit.window[&-d].transpose();
        rep.push(Check::new(format!("ϑ(σ_{d}) = σ_{}ᵀ", -d), "star.orbit.drill", ok, None));
    }
    let hat_fail = (-radius..radius).find(|&d| {
        let lhs = vartheta(&orbit.window[&(d + 1)], &s);
        match invert(&vartheta(&orbit.window[&d], &s), None) {
            Ok(inv) => inv.transpose() != lhs,
            Err(_) => true,
        }
    });
    rep.push(Check::new(
        "ϑ commutes with the contragredient",
        "star.orbit.contragredient",
        hat_fail.is_none(),
        hat_fail.map(|d| format!("d = {d}")),
    ));
    rep
}

/// Rows `t^e ↦ f(t^e) | g(t^e)` for the exponents where `f` and `g` differ.
fn evaluation_tables(f: &TruncatedOperator, g: &TruncatedOperator, n: i64) -> String {
    exponents(n)
        .filter(|&e| f.image(e) != g.image(e))
        .map(|e| format!("t^{e}: {} | {}", f.image(e), g.image(e)))
        .collect::<Vec<_>>()
        .join("; ")
}

/// Operators `K*, D*, Y*, C*` obtained by pushing `*` through
/// `s_{0,ij} ↦ s_{1,īj̄}`, with `σ₁ = (σ₀⁻¹)ᵀ` computed exactly.
pub fn pushforward_star_operators(n: i64) -> Result<[(OperatorName, TruncatedOperator); 4], String> {
    let sigma = build_sigma(n).map_err(|e| e.to_string())?;
    let orbit = strong_orbit(sigma.matrix(), 1, None).map_err(|e| e.to_string())?;
    let s1 = &orbit.window[&1];
    let bar = InvolutivePermutation::reversal(3);
    // s_{0,ij}* = s_{1,īj̄}; K = s₂₂, E = s₁₂, Z = s₁₃ (0-based below).
    let star_of = |i: usize, j: usize| s1.get(bar.bar(i), bar.bar(j)).clone();
    let (k, e, z) = (star_of(1, 1), star_of(0, 1), star_of(0, 2));
    let one = TruncatedOperator::identity(n);
    let half_i = Scalar::complex(Scalar::from_int(0), Scalar::ratio(1, 2));
    // (iE/2 − iKEK/2)* = −i/2 (E* − K*E*K*)
    let d = e.sub(&k.compose(&e).compose(&k)).scale(&-half_i);
    // (3Z + 3KZK − 3/2 K + 3/2)* = 3Z* + 3K*Z*K* − 3/2 K* + 3/2
    let y = z
        .add(&k.compose(&z).compose(&k))
        .scale(&Scalar::from_int(3))
        .sub(&k.sub(&one).scale(&Scalar::ratio(3, 2)));
    // (YD − DY)* = D*Y* − Y*D*
    let c = d.compose(&y).sub(&y.compose(&d));
    Ok([(OperatorName::K, k), (OperatorName::D, d), (OperatorName::Y, y), (OperatorName::C, c)])
}

fn represent_involution(h: &HopfPresentation, inv: &GeneratorInvolution, rho: &Representation, g: OperatorName) -> TruncatedOperator {
    rho.apply(&inv.apply(h, &h.gen(g.as_str())))
}

/// Pushforward of `*` compared with the closed forms and with `S ∘ θ_H`.
pub fn hopf_star_on_generators(n: i64) -> Report {
    let mut rep = Report::new("star.generators").bound("N", n);
    let ops = match pushforward_star_operators(n) {
        Ok(o) => o,
        Err(e) => {
            rep.push(Check::fail("pushforward", "star.generators.pushforward", e));
            return rep;
        }
    };
    let h = h_sigma();
    let rho = Representation::new(&h, n);
    let closed = closed_form_star(&h);
    let dict = dictionary_star(&h);
    for (g, pushed) in &ops {
        let c = represent_involution(&h, &closed, &rho, *g);
        let ok = &c == pushed;
        rep.push(Check::new(
            format!("{g}* closed form ({}) agrees with the pushforward", h.show(closed.image(sym(&h, *g)))),
            "star.generators.closed",
            ok,
            (!ok).then(|| format!("closed | pushforward: {}", evaluation_tables(&c, pushed, n))),
        ));
    }
    for (g, pushed) in &ops {
        let d = represent_involution(&h, &dict, &rho, *g);
        let ok = &d == pushed;
        rep.push(Check::new(
            format!("{g}* = S(θ_H({g})) = {} agrees with the pushforward", h.show(dict.image(sym(&h, *g)))),
            "star.generators.dictionary",
            ok,
            (!ok).then(|| format!("S∘θ_H | pushforward: {}", evaluation_tables(&d, pushed, n))),
        ));
    }
    rep
}

fn sym(h: &HopfPresentation, g: OperatorName) -> u8 {
    h.alphabet().sym(g.as_str()).expect("generator")
}

/// `(X b)* = θ_H(X)(b*)` for `X ∈ {K, D, Y, C}` and monomials `b`, `i·b`;
/// also `θ_End(E) = F` on the closed forms.
pub fn module_star_check(n: i64) -> Report {
    let mut rep = Report::new("star.module").bound("N", n);
    let h = h_sigma();
    let rho = Representation::new(&h, n);
    let theta = cartan_involution(&h);
    for g in [OperatorName::K, OperatorName::D, OperatorName::Y, OperatorName::C] {
        let x = rho.apply(&h.gen(g.as_str()));
        let tx = rho.apply(&theta.apply(&h, &h.gen(g.as_str())));
        let bad = exponents(n)
            .flat_map(|e| [LaurentPoly::t_pow(e), LaurentPoly::monomial(Scalar::i(), e)])
            .find(|b| x.apply(b).conj() != tx.apply(&b.conj()));
        rep.push(Check::new(
            format!("({g} b)* = θ_H({g})(b*), θ_H({g}) = {}", h.show(theta.image(sym(&h, g)))),
            "star.module",
            bad.is_none(),
            bad.map(|b| format!("b = {b}: {} vs {}", x.apply(&b).conj(), tx.apply(&b.conj()))),
        ));
    }
    let (e, f) = (closed_form_operator(OperatorName::E, n), closed_form_operator(OperatorName::F, n));
    rep.push(Check::new("θ_End(E) = F", "star.module.e_to_f", e.conj() == f, None));
    rep
}

/// `⟨X, ι(b)⟩ = conj⟨θ_H(X), ι(b)⟩` for `b = t², t³` and basis words `X`
/// with `Y`-exponent `≤ max_l`.
pub fn real_point_check(lambda: &Scalar, max_l: u32) -> Report {
    let mut rep = Report::new("star.real_point").bound("max_l", max_l);
    let oracle = PairingOracle::new();
    let h = oracle.h_sigma().clone();
    let a = a_sigma();
    let theta = cartan_involution(&h);
    let (t2, t3) = embedding_images(&a, lambda);
    for (label, img) in [("t²", &t2), ("t³", &t3)] {
        let bad = h_exponents(max_l).into_iter().find_map(|[i, j, k, l]| {
            let x = NCPoly::word(crate::cusp::basis_word(&h, i, j, k, l));
            let lhs = oracle.pair_poly(&x, &a, img);
            let rhs = oracle.pair_poly(&theta.apply(&h, &x), &a, img).conj();
            (lhs != rhs).then(|| format!("X = {}: ⟨X, ι({label})⟩ = {lhs}, conj⟨θ_H X, ι({label})⟩ = {rhs}", h.show(&x)))
        });
        rep.push(Check::new(format!("λ = {lambda}: ι({label}) is *-invariant"), "star.real_point", bad.is_none(), bad));
    }
    rep
}

/// Every star check. `max_y` bounds the words for the Hopf axioms.
pub fn verify_star(n: i64, max_y: u32, lambdas: &[Scalar]) -> Report {
    let mut rep = Report::new("star").bound("N", n).bound("max_y", max_y);
    rep.extend(sigma_self_conjugate(n));
    rep.extend(orbit_involution_check(n, 2));
    rep.extend(hopf_star_on_generators(n));
    let h = h_sigma();
    let words = basis_words(&h, max_y);
    rep.extend(check_hopf_star_axioms(&h, &closed_form_star(&h), "closed", &words));
    rep.extend(check_hopf_star_axioms(&h, &dictionary_star(&h), "dictionary", &words));
    rep.extend(module_star_check(n.min(16)));
    for l in lambdas {
        rep.extend(real_point_check(l, max_y));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_and_orbit() {
        assert!(sigma_self_conjugate(12).passed());
        assert!(orbit_involution_check(10, 2).passed());
    }

    #[test]
    fn pushforward_gives_minus_y() {
        let n = 10;
        let ops = pushforward_star_operators(n).unwrap();
        let k = closed_form_operator(OperatorName::K, n);
        let d = closed_form_operator(OperatorName::D, n);
        let y = closed_form_operator(OperatorName::Y, n);
        assert_eq!(ops[0].1, k);
        assert_eq!(ops[1].1, d.scale(&-Scalar::from_int(1)));
        assert_eq!(ops[2].1, y.scale(&-Scalar::from_int(1)));
        let rep = hopf_star_on_generators(n);
        let failed: Vec<String> = rep.failures().map(|c| c.name.clone()).collect();
        assert_eq!(failed.len(), 1, "{failed:?}");
        assert!(failed[0].starts_with('Y'));
    }

    #[test]
    fn module_star() {
        assert!(module_star_check(10).passed());
    }

    #[test]
    fn real_points() {
        assert!(real_point_check(&Scalar::from_int(0), 2).passed());
        assert!(real_point_check(&Scalar::from_int(1), 2).passed());
        assert!(!real_point_check(&Scalar::i(), 2).passed());
    }
}
