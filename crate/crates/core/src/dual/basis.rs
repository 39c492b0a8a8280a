//! The elements `E_{uvw}` of `H_σ` dual to the monomials `γᵘφᵛψʷ`.

use num_traits::{One, Zero};
use serde::Serialize;

use super::pairing::{monomial_letters, PairingOracle};
use crate::exactalg::Scalar;
use crate::hopfcore::HopfPresentation;
use crate::report::{Check, Report};
use crate::rewrite::NCPoly;

/// `E_{uvw} = (−1)^{2⌊v/2⌋(u+v) − v − uw − uv} / (6^{⌊v/2⌋} ⌊v/2⌋! 2^{u+1})
/// · Cᵘ D^{v mod 2} Y^{⌊v/2⌋} (1 + (−1)^{u+v+w} K)`.
pub fn dual_basis(h: &HopfPresentation, u: u32, v: u32, w: u32) -> NCPoly {
    let (u_, v_, w_) = (u as i64, v as i64, w as i64);
    let q = v / 2;
    let sign = Scalar::sign(2 * q as i64 * (u_ + v_) - v_ - u_ * w_ - u_ * v_);
    let mut denom = Scalar::from_int(6).pow(q) * Scalar::from_int(2).pow(u + 1);
    for m in 1..=q as i64 {
        denom *= &Scalar::from_int(m);
    }
    let coeff = sign * denom.inv().expect("nonzero");
    let head = h.mul(&h.mul(&h.pow(&h.gen("C"), u), &h.pow(&h.gen("D"), v % 2)), &h.pow(&h.gen("Y"), q));
    let k_sign = Scalar::sign(u_ + v_ + w_);
    let tail = &NCPoly::one() + &h.gen("K").scale(&k_sign);
    h.mul(&head, &tail).scale(&coeff)
}

/// Index triples `(u, v, w)` with `u, w ∈ {0, 1}` and `v ≤ max_v`.
pub fn dual_indices(max_v: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for u in 0..2 {
        for v in 0..=max_v {
            for w in 0..2 {
                out.push([u, v, w]);
            }
        }
    }
    out
}

/// Result of pairing every `E_{uvw}` with every `γᵃφᵇψᶜ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DualBasisOutcome {
    pub max_v: u32,
    /// Indices whose diagonal value is `−1`.
    pub negative_diagonal: Vec<[u32; 3]>,
    /// Off-diagonal nonzero cells `((u,v,w), (a,b,c), value)`.
    pub off_diagonal: Vec<([u32; 3], [u32; 3], Scalar)>,
    /// Diagonal values that are not `±1`.
    pub non_unimodular: Vec<([u32; 3], Scalar)>,
}

pub fn dual_basis_table(oracle: &PairingOracle, max_v: u32) -> DualBasisOutcome {
    let h = oracle.h_sigma();
    let idx = dual_indices(max_v);
    let mut out = DualBasisOutcome { max_v, negative_diagonal: Vec::new(), off_diagonal: Vec::new(), non_unimodular: Vec::new() };
    for e in &idx {
        let elem = dual_basis(h, e[0], e[1], e[2]);
        for m in &idx {
            let val = oracle.pair(&elem, &monomial_letters(m[0], m[1], m[2]));
            if e == m {
                if val == -Scalar::one() {
                    out.negative_diagonal.push(*e);
                } else if val != Scalar::one() {
                    out.non_unimodular.push((*e, val));
                }
            } else if !val.is_zero() {
                out.off_diagonal.push((*e, *m, val));
            }
        }
    }
    out
}

/// Diagonality, unimodularity, and the sign pattern of the diagonal.
pub fn dual_basis_check(oracle: &PairingOracle, max_v: u32) -> (Report, DualBasisOutcome) {
    let t = dual_basis_table(oracle, max_v);
    let mut rep = Report::new("dual basis").bound("max_v", max_v);
    rep.push(Check::new(
        "⟨E_uvw, γᵃφᵇψᶜ⟩ vanishes off the diagonal",
        "dual_basis.off_diagonal",
        t.off_diagonal.is_empty(),
        t.off_diagonal.first().map(|(e, m, v)| format!("E{e:?} on {m:?} = {v}")),
    ));
    rep.push(Check::new(
        "diagonal values are ±1",
        "dual_basis.unimodular",
        t.non_unimodular.is_empty(),
        t.non_unimodular.first().map(|(e, v)| format!("E{e:?} = {v}")),
    ));
    let note = if t.negative_diagonal.is_empty() {
        "all diagonal values are +1".to_string()
    } else {
        format!("diagonal −1 at {:?}", t.negative_diagonal)
    };
    rep.push(Check::pass("diagonal sign pattern", "dual_basis.signs").with_note(note));
    (rep, t)
}

/// `E_{uvw}` rescaled by its diagonal value, so that pairing is exactly `δ`.
pub fn normalized_dual_basis(oracle: &PairingOracle, u: u32, v: u32, w: u32) -> NCPoly {
    let e = dual_basis(oracle.h_sigma(), u, v, w);
    let d = oracle.pair(&e, &monomial_letters(u, v, w));
    e.scale(&d.inv().expect("diagonal value is a unit"))
}
