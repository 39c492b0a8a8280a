//! The coideal embedding `ι_λ: k[t², t³] → A_σ` at the point `(λ², λ³)`.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use super::presentations::{a_sigma, a_sigma_abc};
use crate::cusp::{closed_form_operator, OperatorName};
use crate::exactalg::{cusp_exponents, LaurentPoly, Scalar};
use crate::hopfcore::HopfPresentation;
use crate::linalg::{self, SparseRow};
use crate::report::{Check, Report};
use crate::rewrite::{NCPoly, Word};

/// Images of `t²` and `t³` in both presentations of `A_σ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EmbeddingData {
    pub lambda: Scalar,
    /// `λ² + ⅓φ²`
    pub t2_gamma_phi_psi: String,
    /// `γ + λ²φ + λ³ψ`
    pub t3_gamma_phi_psi: String,
    /// `λ² + 12a²`
    pub t2_abc: String,
    /// `6λ²a + 36a³ + 36b + λ³c`
    pub t3_abc: String,
    #[serde(skip)]
    pub t2: NCPoly,
    #[serde(skip)]
    pub t3: NCPoly,
}

/// `ι(t²) = λ² + ⅓φ²`, `ι(t³) = γ + λ²φ + λ³ψ` in `a_pres` (`γ, φ, ψ`).
pub fn embedding_images(a_pres: &HopfPresentation, lambda: &Scalar) -> (NCPoly, NCPoly) {
    let l2 = lambda * lambda;
    let l3 = &l2 * lambda;
    let phi = a_pres.gen("phi");
    let t2 = &NCPoly::constant(l2.clone()) + &a_pres.pow(&phi, 2).scale(&Scalar::ratio(1, 3));
    let t3 = &(&a_pres.gen("gamma") + &phi.scale(&l2)) + &a_pres.gen("psi").scale(&l3);
    (t2, t3)
}

fn abc_images(abc: &HopfPresentation, lambda: &Scalar) -> (NCPoly, NCPoly) {
    let l2 = lambda * lambda;
    let l3 = &l2 * lambda;
    let a = abc.gen("a");
    let t2 = &NCPoly::constant(l2.clone()) + &abc.pow(&a, 2).scale(&Scalar::from_int(12));
    let t3 = &(&(&a.scale(&(&l2 * &Scalar::from_int(6))) + &abc.pow(&a, 3).scale(&Scalar::from_int(36)))
        + &abc.gen("b").scale(&Scalar::from_int(36)))
        + &abc.gen("c").scale(&l3);
    (t2, t3)
}

pub fn embed_cusp(lambda: &Scalar) -> EmbeddingData {
    let gfp = a_sigma();
    let abc = a_sigma_abc();
    let (t2, t3) = embedding_images(&gfp, lambda);
    let (u2, u3) = abc_images(&abc, lambda);
    EmbeddingData {
        lambda: lambda.clone(),
        t2_gamma_phi_psi: gfp.show(&t2),
        t3_gamma_phi_psi: gfp.show(&t3),
        t2_abc: abc.show(&u2),
        t3_abc: abc.show(&u3),
        t2,
        t3,
    }
}

/// `ι(t^d) = ι(t²)^p ι(t³)^q` with `d = 2p + 3q`, `q ≤ 1`.
pub fn iota_monomial(a_pres: &HopfPresentation, t2: &NCPoly, t3: &NCPoly, d: i64) -> NCPoly {
    let (p, q) = if d % 2 == 0 { (d / 2, 0) } else { ((d - 3) / 2, 1) };
    a_pres.mul(&a_pres.pow(t2, p as u32), &a_pres.pow(t3, q as u32))
}

fn index_words<'a>(polys: impl IntoIterator<Item = &'a NCPoly>) -> BTreeMap<Word, usize> {
    let words: BTreeSet<Word> = polys.into_iter().flat_map(|p| p.terms().map(|(w, _)| w.clone())).collect();
    words.into_iter().enumerate().map(|(k, w)| (w, k)).collect()
}

/// Whether `target` is a linear combination of `span`.
fn in_span(span: &[NCPoly], target: &NCPoly) -> bool {
    let idx = index_words(span.iter().chain(std::iter::once(target)));
    let eqs: Vec<(SparseRow, Scalar)> = idx.keys().map(|w| {
            let row: SparseRow =
                span.iter().enumerate().filter_map(|(k, p)| Some((k, p.coeff(w))).filter(|(_, c)| !c.is_zero())).collect();
            (row, target.coeff(w))
        })
        .collect();
    linalg::solve(eqs, span.len()).is_some()
}

/// `ι(t²)³ = ι(t³)²`, the displayed `a, b, c` images, and both translations.
pub fn algebra_check(lambda: &Scalar) -> Report {
    let gfp = a_sigma();
    let abc = a_sigma_abc();
    let mut rep = Report::new(format!("embedding λ = {lambda}"));
    let (t2, t3) = embedding_images(&gfp, lambda);
    let rel = &gfp.pow(&t2, 3) - &gfp.pow(&t3, 2);
    rep.push(Check::new(
        "ι(t²)³ = ι(t³)²",
        "embedding.algebra_map",
        rel.is_zero(),
        (!rel.is_zero()).then(|| gfp.show(&rel)),
    ));
    let (u2, u3) = abc_images(&abc, lambda);
    let tr = super::presentations::gamma_phi_psi_to_abc(&abc);
    let ok = abc.substitute(&t2, &tr) == u2 && abc.substitute(&t3, &tr) == u3;
    rep.push(Check::new(
        "images are λ² + 12a² and 6λ²a + 36a³ + 36b + λ³c",
        "embedding.abc_images",
        ok,
        Some(format!("{} ; {}", abc.show(&u2), abc.show(&u3))),
    ));
    rep
}

/// `Δ(ι(t^d)) ∈ ι(F_d) ⊗ A_σ` for every cusp exponent `d ≤ max_d`.
pub fn coideal_check(lambda: &Scalar, max_d: i64) -> Report {
    let a = a_sigma();
    let (t2, t3) = embedding_images(&a, lambda);
    let mut rep = Report::new(format!("coideal λ = {lambda}")).bound("max_degree", max_d);
    let mut images: Vec<NCPoly> = Vec::new();
    let mut bad = None;
    for d in cusp_exponents(max_d) {
        let x = iota_monomial(&a, &t2, &t3, d);
        images.push(x.clone());
        let mut by_right: BTreeMap<Word, NCPoly> = BTreeMap::new();
        for (legs, c) in a.coproduct(&x).terms() {
            by_right.entry(legs[1].clone()).or_insert_with(NCPoly::zero).add_term(legs[0].clone(), c);
        }
        if let Some((w, _)) = by_right.iter().find(|(_, left)| !in_span(&images, left)) {
            bad = Some(format!("t^{d}: left factor of {} not in ι(F_{d})", a.alphabet().show_word(w)));
            break;
        }
    }
    rep.push(Check::new("Δ(ι(B)) ⊆ ι(B) ⊗ A_σ", "embedding.coideal", bad.is_none(), bad));
    rep
}

/// Injectivity of `ι` on `F_n`, both by iterating `X = Y + D` down to a
/// nonzero constant and by the rank of the images.
pub fn injectivity_check(lambda: &Scalar, n: i64) -> Report {
    let mut rep = Report::new(format!("injectivity λ = {lambda}")).bound("max_degree", n);
    let x = closed_form_operator(OperatorName::X, n);
    let mut bad = None;
    for d in cusp_exponents(n).filter(|d| *d > 0) {
        let mut p = LaurentPoly::t_pow(d);
        let mut steps = 0;
        while p.max_exp().is_some_and(|m| m > 0) && steps <= n {
            p = x.apply(&p);
            steps += 1;
        }
        if p.is_zero() || p.max_exp() != Some(0) {
            bad = Some(format!("t^{d} reaches {p}"));
            break;
        }
    }
    rep.push(Check::new("X iterates every t^d to a nonzero constant", "embedding.x_iteration", bad.is_none(), bad));

    let a = a_sigma();
    let (t2, t3) = embedding_images(&a, lambda);
    let imgs: Vec<NCPoly> = cusp_exponents(n).map(|d| iota_monomial(&a, &t2, &t3, d)).collect();
    let idx = index_words(&imgs);
    let rank = linalg::rank(imgs.iter().map(|p| p.terms().map(|(w, c)| (idx[w], c.clone())).collect::<SparseRow>()));
    rep.push(Check::new(
        "ι is injective on F_n",
        "embedding.rank",
        rank == imgs.len(),
        Some(format!("rank {rank} of {}", imgs.len())),
    ));
    rep
}

/// Whether `ι(1) = 1`.
pub fn unit_preserved(lambda: &Scalar) -> bool {
    let a = a_sigma();
    let (t2, t3) = embedding_images(&a, lambda);
    iota_monomial(&a, &t2, &t3, 0) == NCPoly::one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn images_at_small_points() {
        let d0 = embed_cusp(&Scalar::zero());
        let a = a_sigma();
        assert_eq!(d0.t2, a.pow(&a.gen("phi"), 2).scale(&Scalar::ratio(1, 3)));
        let d1 = embed_cusp(&Scalar::one());
        assert_eq!(d1.t3, &(&a.gen("gamma") + &a.gen("phi")) + &a.gen("psi"));
        assert!(unit_preserved(&Scalar::one()));
    }

    #[test]
    fn coproduct_of_t2_image() {
        let a = a_sigma();
        let lambda = Scalar::from_int(2);
        let (t2, _) = embedding_images(&a, &lambda);
        let shifted = &t2 - &NCPoly::constant(&lambda * &lambda);
        let want = crate::hopfcore::TensorPoly::from_pair(&NCPoly::one(), &t2)
            .add(&crate::hopfcore::TensorPoly::from_pair(&shifted, &NCPoly::one()));
        assert_eq!(a.coproduct(&t2), want);
    }

    #[test]
    fn small_checks_pass() {
        for l in [Scalar::zero(), Scalar::one(), Scalar::i()] {
            assert!(algebra_check(&l).passed());
            assert!(coideal_check(&l, 6).passed());
            assert!(injectivity_check(&l, 8).passed());
        }
    }
}
