//! Involutions on `H_σ`: the Cartan involution `θ_H` read off the matrix
//! coefficients `s_{d,ij} ↦ s_{−d,j̄ī}`, the Hopf `*` obtained from it, and
//! the closed-form `*` on generators.

use crate::exactalg::Scalar;
use crate::hopfcore::{HopfPresentation, TensorPoly};
use crate::report::{Check, Report};
use crate::rewrite::{parse_poly, Alphabet, NCPoly, Word};

/// Names of the degree-zero matrix coefficients: `K = s₂₂`, `E = s₁₂`,
/// `F = s₂₃`, `Z = s₁₃`.
const S_LETTERS: [&str; 4] = ["K", "E", "F", "Z"];

/// An involution on `H_σ` given by its values on generators and extended
/// conjugate-linearly, multiplicatively or anti-multiplicatively.
#[derive(Clone, Debug)]
pub struct GeneratorInvolution {
    images: Vec<NCPoly>,
    anti: bool,
}

impl GeneratorInvolution {
    pub fn new(images: Vec<NCPoly>, anti: bool) -> Self {
        GeneratorInvolution { images, anti }
    }

    pub fn image(&self, s: u8) -> &NCPoly {
        &self.images[s as usize]
    }

    pub fn apply(&self, h: &HopfPresentation, p: &NCPoly) -> NCPoly {
        let p = if self.anti { p.reversed() } else { p.clone() };
        h.substitute(&p.map_coeffs(Scalar::conj), &self.images)
    }

    pub fn apply_word(&self, h: &HopfPresentation, w: &Word) -> NCPoly {
        self.apply(h, &NCPoly::word(w.clone()))
    }

    /// `f ⊗ f` on a rank-two tensor.
    pub fn apply_tensor(&self, h: &HopfPresentation, t: &TensorPoly) -> TensorPoly {
        let mut out = TensorPoly::zero(2);
        for (legs, c) in t.terms() {
            let pair = TensorPoly::from_pair(&self.apply_word(h, &legs[0]), &self.apply_word(h, &legs[1]));
            out.add_scaled(&pair, &c.conj());
        }
        h.tensor_nf(&out)
    }
}

fn s_alphabet() -> Alphabet {
    Alphabet::new(&S_LETTERS)
}

/// `K, D, Y, C` as polynomials in the letters `K, E, F, Z`.
fn generators_in_s_letters(h: &HopfPresentation) -> Vec<NCPoly> {
    let a = s_alphabet();
    let parse = |s: &str| parse_poly(&a, s).expect("fixed expression");
    let d = parse("(1/2i) E - (1/2i) KEK");
    let y = parse("3 Z + 3 KZK - 3/2 K + 3/2");
    let c = &(&y * &d) - &(&d * &y);
    h.alphabet()
        .names()
        .iter()
        .map(|g| match g.as_str() {
            "K" => parse("K"),
            "D" => d.clone(),
            "Y" => y.clone(),
            "C" => c.clone(),
            other => panic!("unexpected generator {other}"),
        })
        .collect()
}

/// `K, E, F, Z` in `H_σ`.
fn s_letter_images(h: &HopfPresentation) -> Vec<NCPoly> {
    let p = |s: &str| h.parse(s).expect("fixed expression");
    let e = p("1/2 - 1/2 K - (i) D");
    let f = h.mul(&p("-K"), &e);
    let z_plus = p("1/6 Y + 1/4 K - 1/4");
    let z_minus = h.mul(&p("(1/2i) - (1/2i) K"), &p("D"));
    vec![p("K"), e, f, &z_plus + &z_minus]
}

/// `θ_H`: on degree-zero coefficients `s_{0,ij} ↦ s_{0,j̄ī}`, i.e. `K ↦ K`,
/// `E ↔ F`, `Z ↦ Z`; conjugate-linear and multiplicative.
pub fn cartan_involution(h: &HopfPresentation) -> GeneratorInvolution {
    let letters = s_letter_images(h);
    let theta_letters = [letters[0].clone(), letters[2].clone(), letters[1].clone(), letters[3].clone()];
    let images = generators_in_s_letters(h)
        .iter()
        .map(|g| h.substitute(&g.map_coeffs(Scalar::conj), &theta_letters))
        .collect();
    GeneratorInvolution::new(images, false)
}

/// `* = S ∘ θ_H`, conjugate-linear and anti-multiplicative.
pub fn dictionary_star(h: &HopfPresentation) -> GeneratorInvolution {
    let theta = cartan_involution(h);
    let images = (0..h.alphabet().len() as u8).map(|s| h.antipode(theta.image(s))).collect();
    GeneratorInvolution::new(images, true)
}

/// `K* = K`, `D* = −D`, `Y* = −Y + 6iD`, `C* = D*Y* − Y*D*`.
pub fn closed_form_star(h: &HopfPresentation) -> GeneratorInvolution {
    let p = |s: &str| h.parse(s).expect("fixed expression");
    let (d, y) = (p("-D"), p("-Y + (6i) D"));
    let c = &h.mul(&d, &y) - &h.mul(&y, &d);
    let images = h
        .alphabet()
        .names()
        .iter()
        .map(|g| match g.as_str() {
            "K" => p("K"),
            "D" => d.clone(),
            "Y" => y.clone(),
            "C" => c.clone(),
            other => panic!("unexpected generator {other}"),
        })
        .collect();
    GeneratorInvolution::new(images, true)
}

fn first_failure<T>(items: &[T], ok: impl FnMut(&T) -> Option<String>) -> Option<String> {
    items.iter().find_map(ok)
}

/// `** = id`, `Δ∘* = (*⊗*)∘Δ`, `ε∘* = conj∘ε`, and for `θ = *∘S`:
/// involutive, multiplicative, `Δ∘θ = (θ⊗θ)∘Δ^cop`.
pub fn check_hopf_star_axioms(h: &HopfPresentation, star: &GeneratorInvolution, label: &str, words: &[Word]) -> Report {
    let mut rep = Report::new(format!("hopf-star[{label}]")).bound("words", words.len());
    let show = |w: &Word| h.show(&NCPoly::word(w.clone()));
    let st = |p: &NCPoly| star.apply(h, p);
    let theta = |p: &NCPoly| st(&h.antipode(p));

    let push = |rep: &mut Report, name: &str, anchor: &str, fail: Option<String>| {
        rep.push(Check::new(format!("{label}: {name}"), anchor, fail.is_none(), fail));
    };

    let bad_rule = h.system().rules().iter().find_map(|r| {
        let (lhs, rhs) = (st(&NCPoly::word(r.lhs.clone())), st(&r.rhs));
        (lhs != rhs).then(|| {
            format!("{} → {}: {} vs {}", show(&r.lhs), h.show(&r.rhs), h.show(&lhs), h.show(&rhs))
        })
    });
    push(&mut rep, "* respects the defining relations", "star.relations", bad_rule);
    push(&mut rep, "** = id", "star.involutive", first_failure(words, |w| {
        let p = NCPoly::word(w.clone());
        let back = st(&st(&p));
        (back != p).then(|| format!("on {}: {}", show(w), h.show(&back)))
    }));
    push(&mut rep, "Δ∘* = (*⊗*)∘Δ", "star.coproduct", first_failure(words, |w| {
        let p = NCPoly::word(w.clone());
        let lhs = h.tensor_nf(&h.coproduct(&st(&p)));
        let rhs = star.apply_tensor(h, &h.coproduct(&p));
        (lhs != rhs).then(|| {
            format!("on {}: Δ(x*) − (*⊗*)Δ(x) = {}", show(w), lhs.sub(&rhs).show(h.alphabet()))
        })
    }));
    push(&mut rep, "ε∘* = conj∘ε", "star.counit", first_failure(words, |w| {
        let p = NCPoly::word(w.clone());
        let (a, b) = (h.counit(&st(&p)), h.counit(&p).conj());
        (a != b).then(|| format!("on {}: {a} vs {b}", show(w)))
    }));
    push(&mut rep, "θ = *∘S is involutive", "star.cartan.involutive", first_failure(words, |w| {
        let p = NCPoly::word(w.clone());
        (theta(&theta(&p)) != p).then(|| format!("on {}", show(w)))
    }));
    push(&mut rep, "θ = *∘S is multiplicative", "star.cartan.multiplicative", first_failure(words, |w| {
        let gens: Vec<NCPoly> = (0..h.alphabet().len() as u8).map(NCPoly::sym).collect();
        let p = NCPoly::word(w.clone());
        gens.iter().find_map(|g| {
            let lhs = theta(&h.mul(&p, g));
            let rhs = h.mul(&theta(&p), &theta(g));
            (lhs != rhs).then(|| format!("on {} · {}", show(w), h.show(g)))
        })
    }));
    push(&mut rep, "θ = *∘S is a coalgebra anti-morphism", "star.cartan.coalgebra", first_failure(words, |w| {
        let p = NCPoly::word(w.clone());
        let lhs = h.tensor_nf(&h.coproduct(&theta(&p)));
        let mut rhs = TensorPoly::zero(2);
        for (legs, c) in h.coproduct(&p).flip().terms() {
            let a = theta(&NCPoly::word(legs[0].clone()));
            let b = theta(&NCPoly::word(legs[1].clone()));
            rhs.add_scaled(&TensorPoly::from_pair(&a, &b), &c.conj());
        }
        (lhs != h.tensor_nf(&rhs)).then(|| format!("on {}", show(w)))
    }));
    rep
}

/// Values of an involution on the generators, for display.
pub fn describe(h: &HopfPresentation, inv: &GeneratorInvolution) -> Vec<(String, String)> {
    h.alphabet()
        .names()
        .iter()
        .enumerate()
        .map(|(k, g)| (g.clone(), h.show(inv.image(k as u8))))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cusp::{basis_words, h_sigma};

    #[test]
    fn cartan_involution_on_generators() {
        let h = h_sigma();
        let theta = cartan_involution(&h);
        let get = |g: &str| theta.apply(&h, &h.gen(g));
        assert_eq!(get("K"), h.gen("K"));
        assert_eq!(get("D"), h.parse("-DK").unwrap());
        assert_eq!(get("Y"), h.gen("Y"));
        assert_eq!(get("C"), h.parse("-CK").unwrap());
        assert_eq!(theta.apply(&h, &get("D")), h.gen("D"));
    }

    #[test]
    fn dictionary_star_values() {
        let h = h_sigma();
        let star = dictionary_star(&h);
        assert_eq!(star.apply(&h, &h.gen("K")), h.gen("K"));
        assert_eq!(star.apply(&h, &h.gen("D")), h.parse("-D").unwrap());
        assert_eq!(star.apply(&h, &h.gen("Y")), h.parse("-Y").unwrap());
        // θ = *∘S on D: (−DK)* = K*D* = −KD = DK·(−1)·(−1) = −DK.
        let theta = star.apply(&h, &h.antipode(&h.gen("D")));
        assert_eq!(theta, h.parse("-DK").unwrap());
    }

    #[test]
    fn axioms_for_both_stars() {
        let h = h_sigma();
        let words = basis_words(&h, 2);
        assert!(check_hopf_star_axioms(&h, &dictionary_star(&h), "dictionary", &words).passed());
        let closed = check_hopf_star_axioms(&h, &closed_form_star(&h), "closed", &words);
        let failed: Vec<&str> = closed.failures().map(|c| c.anchor.as_str()).collect();
        assert!(failed.contains(&"star.relations") && failed.contains(&"star.coproduct"), "{failed:?}");
        let rel = closed.failures().next().unwrap().witness.clone().unwrap();
        assert!(rel.starts_with("YC → CY"), "{rel}");
    }
}
