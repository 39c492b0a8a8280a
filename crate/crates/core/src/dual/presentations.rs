//! Presentations of `A_σ`: in `γ, φ, ψ`, with the redundant `δ = ⅓φ²`, and
//! in the graded generators `a, b, c`.

use crate::exactalg::Scalar;
use crate::hopfcore::HopfPresentation;
use crate::report::{Check, Report};
use crate::rewrite::NCPoly;

/// `γ, φ, ψ` with `ψ² = 1`, `ψ` anticommuting with `γ, φ`,
/// `3(γφ + φγ) = φ⁴` and `27γ² = φ⁶`.
pub const A_SIGMA_TEXT: &str = "
symbols: gamma phi psi
weights: 4 1 0
grading: 3 1 0
psi psi -> 1
psi gamma -> -gamma psi
psi phi -> -phi psi
phi gamma -> -gamma phi + 1/3 phi phi phi phi
gamma gamma -> 1/27 phi phi phi phi phi phi
Delta gamma = 1 (x) gamma + 1/3 phi phi (x) phi + gamma (x) psi
Delta phi = 1 (x) phi + phi (x) psi
Delta psi = psi (x) psi
eps gamma = 0
eps phi = 0
eps psi = 1
S gamma = 1/3 phi phi phi psi - gamma psi
S phi = -phi psi
S psi = psi
";

/// [`A_SIGMA_TEXT`] with `δ` kept as a generator that reduces to `⅓φ²`.
pub const A_SIGMA_DELTA_TEXT: &str = "
symbols: delta gamma phi psi
weights: 3 4 1 0
grading: 2 3 1 0
delta -> 1/3 phi phi
psi psi -> 1
psi gamma -> -gamma psi
psi phi -> -phi psi
phi gamma -> -gamma phi + 1/3 phi phi phi phi
gamma gamma -> 1/27 phi phi phi phi phi phi
Delta delta = 1 (x) delta + delta (x) 1
Delta gamma = 1 (x) gamma + delta (x) phi + gamma (x) psi
Delta phi = 1 (x) phi + phi (x) psi
Delta psi = psi (x) psi
eps delta = 0
eps gamma = 0
eps phi = 0
eps psi = 1
S delta = -delta
S gamma = delta phi psi - gamma psi
S phi = -phi psi
S psi = psi
";

/// Graded generators `a = φ/6`, `b = γ/36 − φ³/216`, `c = ψ` of degrees 1, 3, 0.
pub const A_SIGMA_ABC_TEXT: &str = "
symbols: a b c
weights: 1 4 0
grading: 1 3 0
c c -> 1
c a -> -a c
c b -> -b c
b a -> -a b
b b -> 1/3 a a a a a a
Delta a = 1 (x) a + a (x) c
Delta b = 1 (x) b + a a (x) a - a (x) a a c + b (x) c
Delta c = c (x) c
eps a = 0
eps b = 0
eps c = 1
S a = -a c
S b = -b c
S c = c
";

pub fn a_sigma() -> HopfPresentation {
    HopfPresentation::from_text("A_sigma", A_SIGMA_TEXT).expect("built-in presentation parses")
}

pub fn a_sigma_delta() -> HopfPresentation {
    HopfPresentation::from_text("A_sigma with delta", A_SIGMA_DELTA_TEXT).expect("built-in presentation parses")
}

pub fn a_sigma_abc() -> HopfPresentation {
    HopfPresentation::from_text("A_sigma in a, b, c", A_SIGMA_ABC_TEXT).expect("built-in presentation parses")
}

/// Images of `a, b, c` in the `γ, φ, ψ` presentation.
pub fn abc_to_gamma_phi_psi(target: &HopfPresentation) -> Vec<NCPoly> {
    let (g, f, p) = (target.gen("gamma"), target.gen("phi"), target.gen("psi"));
    vec![
        f.scale(&Scalar::ratio(1, 6)),
        &g.scale(&Scalar::ratio(1, 36)) - &target.pow(&f, 3).scale(&Scalar::ratio(1, 216)),
        p,
    ]
}

/// Images of `γ, φ, ψ` in the `a, b, c` presentation: `γ = 36b + 36a³`, `φ = 6a`.
pub fn gamma_phi_psi_to_abc(target: &HopfPresentation) -> Vec<NCPoly> {
    let (a, b, c) = (target.gen("a"), target.gen("b"), target.gen("c"));
    vec![
        &b.scale(&Scalar::from_int(36)) + &target.pow(&a, 3).scale(&Scalar::from_int(36)),
        a.scale(&Scalar::from_int(6)),
        c,
    ]
}

/// Checks that `from` maps every rule of `src` to zero in `dst` and
/// intertwines the coproducts, counits and antipodes on generators.
pub fn check_hopf_map(src: &HopfPresentation, dst: &HopfPresentation, from: &[NCPoly], anchor: &str) -> Report {
    let mut rep = Report::new(format!("{} -> {}", src.name(), dst.name()));
    let bad_rel: Vec<String> = src
        .system()
        .rules()
        .iter()
        .filter(|r| {
            let diff = &NCPoly::word(r.lhs.clone()) - &r.rhs;
            !dst.substitute(&diff, from).is_zero()
        })
        .map(|r| src.alphabet().show_word(&r.lhs))
        .collect();
    rep.push(Check::new(
        "relations map to zero",
        format!("{anchor}.relations"),
        bad_rel.is_empty(),
        (!bad_rel.is_empty()).then(|| bad_rel.join(", ")),
    ));
    let mut bad = Vec::new();
    for k in 0..src.alphabet().len() {
        let g = NCPoly::sym(k as u8);
        let img = &from[k];
        if dst.substitute_tensor(&src.coproduct(&g), from) != dst.coproduct(img) {
            bad.push(format!("Δ on {}", src.alphabet().name(k as u8)));
        }
        if src.counit(&g) != dst.counit(img) {
            bad.push(format!("ε on {}", src.alphabet().name(k as u8)));
        }
        if dst.substitute(&src.antipode(&g), from) != dst.antipode(img) {
            bad.push(format!("S on {}", src.alphabet().name(k as u8)));
        }
    }
    rep.push(Check::new(
        "structure maps are intertwined",
        format!("{anchor}.structure"),
        bad.is_empty(),
        (!bad.is_empty()).then(|| bad.join(", ")),
    ));
    rep
}

/// Both translations between the `γφψ` and `abc` presentations are Hopf maps
/// and inverse to each other on generators; the `δ` variant reduces to the
/// plain presentation.
pub fn translation_checks() -> Report {
    let (gfp, abc, del) = (a_sigma(), a_sigma_abc(), a_sigma_delta());
    let to_gfp = abc_to_gamma_phi_psi(&gfp);
    let to_abc = gamma_phi_psi_to_abc(&abc);
    let mut rep = Report::new("A_sigma presentations");
    rep.extend(check_hopf_map(&abc, &gfp, &to_gfp, "a_sigma.abc_to_gfp"));
    rep.extend(check_hopf_map(&gfp, &abc, &to_abc, "a_sigma.gfp_to_abc"));
    let round = (0..3).all(|k| {
        let g = NCPoly::sym(k);
        gfp.substitute(&abc.substitute(&g, &to_abc), &to_gfp) == g && abc.substitute(&gfp.substitute(&g, &to_gfp), &to_abc) == g
    });
    rep.push(Check::new("translations are mutually inverse", "a_sigma.translation_inverse", round, None));
    // δ ↦ ⅓φ², others to themselves.
    let drop_delta = vec![gfp.pow(&gfp.gen("phi"), 2).scale(&Scalar::ratio(1, 3)), gfp.gen("gamma"), gfp.gen("phi"), gfp.gen("psi")];
    rep.extend(check_hopf_map(&del, &gfp, &drop_delta, "a_sigma.delta"));
    rep
}
