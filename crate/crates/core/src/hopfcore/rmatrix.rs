//! The R-matrices `R_c` on the subalgebra generated by `K` and `D`.

use super::{HopfPresentation, TensorPoly};
use crate::exactalg::Scalar;
use crate::report::{Check, Report};
use crate::rewrite::NCPoly;

/// `R_c = ½(1⊗1 + 1⊗K + K⊗1 − K⊗K) + (c/2)(D⊗D − D⊗KD + KD⊗D + KD⊗KD)`,
/// legs reduced in `h` (which must have generators `K` and `D`).
pub fn r_matrix(h: &HopfPresentation, c: &Scalar) -> TensorPoly {
    let one = NCPoly::one();
    let k = h.gen("K");
    let d = h.gen("D");
    let kd = h.mul(&k, &d);
    let half = Scalar::ratio(1, 2);
    let ch = c * &half;
    let parts: [(&NCPoly, &NCPoly, Scalar); 8] = [
        (&one, &one, half.clone()),
        (&one, &k, half.clone()),
        (&k, &one, half.clone()),
        (&k, &k, -half.clone()),
        (&d, &d, ch.clone()),
        (&d, &kd, -ch.clone()),
        (&kd, &d, ch.clone()),
        (&kd, &kd, ch),
    ];
    let mut r = TensorPoly::zero(2);
    for (a, b, s) in parts {
        r.add_scaled(&TensorPoly::from_pair(a, b), &s);
    }
    h.tensor_nf(&r)
}

fn map_leg(h: &HopfPresentation, t: &TensorPoly, k: usize, f: impl Fn(&NCPoly) -> NCPoly) -> TensorPoly {
    let mut out = TensorPoly::zero(t.rank());
    for (legs, c) in t.terms() {
        let img = f(&NCPoly::word(legs[k].clone()));
        for (w, v) in img.terms() {
            let mut nl = legs.clone();
            nl[k] = w.clone();
            out.add_term(nl, &(c * v));
        }
    }
    h.tensor_nf(&out)
}

/// Conjugation `R X R⁻¹` of a rank-two tensor.
fn conjugate(h: &HopfPresentation, r: &TensorPoly, r_inv: &TensorPoly, x: &TensorPoly) -> TensorPoly {
    h.tensor_mul(&h.tensor_mul(r, x), r_inv)
}

/// Checks invertibility of `R_c` (inverse `(S ⊗ id)(R_c)`), `R Δ(x) R⁻¹ = Δ^cop(x)`
/// on `1, K, D, DK`, both hexagon identities, and that `Y` violates the
/// conjugation identity.
pub fn check_quasitriangular(h: &HopfPresentation, c: &Scalar) -> Report {
    let mut rep = Report::new(format!("R-matrix c = {c}"));
    let r = r_matrix(h, c);
    let r_inv = map_leg(h, &r, 0, |p| h.antipode(p));
    let id2 = TensorPoly::one(2);
    let inv_ok = h.tensor_mul(&r, &r_inv) == id2 && h.tensor_mul(&r_inv, &r) == id2;
    rep.push(Check::new(
        "R is invertible with inverse (S⊗id)R",
        "rmatrix.invertible",
        inv_ok,
        (!inv_ok).then(|| format!("R = {}", r.show(h.alphabet()))),
    ));

    let k = h.gen("K");
    let d = h.gen("D");
    let elems = [NCPoly::one(), k.clone(), d.clone(), h.mul(&d, &k)];
    let mut bad = Vec::new();
    for x in &elems {
        let lhs = conjugate(h, &r, &r_inv, &h.coproduct(x));
        if lhs != h.coproduct(x).flip() {
            bad.push(h.show(x));
        }
    }
    rep.push(Check::new(
        "R Δ(x) R⁻¹ = Δcop(x) on the K, D subalgebra",
        "rmatrix.conjugation",
        bad.is_empty(),
        (!bad.is_empty()).then(|| format!("fails for {}", bad.join(", "))),
    ));

    let r12 = r.insert_unit(2);
    let r13 = r.insert_unit(1);
    let r23 = r.insert_unit(0);
    let first = h.coproduct_leg(&r, 0) == h.tensor_mul(&r13, &r23);
    let second = h.coproduct_leg(&r, 1) == h.tensor_mul(&r13, &r12);
    rep.push(Check::new("(Δ⊗id)R = R13 R23", "rmatrix.hexagon_left", first, None));
    rep.push(Check::new("(id⊗Δ)R = R13 R12", "rmatrix.hexagon_right", second, None));

    let y = h.gen("Y");
    let conj_y = conjugate(h, &r, &r_inv, &h.coproduct(&y));
    let differs = conj_y != h.coproduct(&y).flip();
    rep.push(Check::new(
        "R Δ(Y) R⁻¹ differs from Δcop(Y)",
        "rmatrix.fails_on_Y",
        differs,
        Some(format!("difference = {}", conj_y.sub(&h.coproduct(&y).flip()).show(h.alphabet()))),
    ));
    rep
}
