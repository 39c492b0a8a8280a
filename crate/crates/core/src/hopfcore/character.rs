//! Characters `χ_{s,λ}` and the left/right hit actions they induce.

use num_traits::{One, Zero};

use super::HopfPresentation;
use crate::exactalg::Scalar;
use crate::rewrite::{NCPoly, Sym};

/// The algebra map `K ↦ s, D ↦ 0, Y ↦ λ` (and hence `C ↦ 0`).
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    pub s: Scalar,
    pub lambda: Scalar,
}

impl Character {
    /// Panics unless `s² = 1`.
    pub fn new(s: Scalar, lambda: Scalar) -> Self {
        assert!(&s * &s == Scalar::one(), "character sign must square to one");
        Character { s, lambda }
    }

    /// Value on a generator name of the `K, D, Y, C` presentation.
    pub fn on_generator(&self, name: &str) -> Option<Scalar> {
        match name {
            "K" => Some(self.s.clone()),
            "D" | "C" => Some(Scalar::zero()),
            "Y" => Some(self.lambda.clone()),
            _ => None,
        }
    }

    /// Panics if `h` has a generator outside `K, D, Y, C`.
    pub fn eval(&self, h: &HopfPresentation, p: &NCPoly) -> Scalar {
        let vals: Vec<Scalar> = (0..h.alphabet().len())
            .map(|k| {
                let name = h.alphabet().name(k as Sym);
                self.on_generator(name).unwrap_or_else(|| panic!("character undefined on {name}"))
            })
            .collect();
        p.terms()
            .map(|(w, c)| w.iter().fold(c.clone(), |acc, s| acc * &vals[*s as usize]))
            .sum()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `h ↦ h₍₁₎ χ(h₍₂₎)`
    Left,
    /// `h ↦ χ(h₍₁₎) h₍₂₎`
    Right,
}

pub fn hit_action(chi: &Character, side: Side, h: &HopfPresentation, p: &NCPoly) -> NCPoly {
    let d = h.coproduct(p);
    let (eval_leg, keep_leg) = match side {
        Side::Left => (1, 0),
        Side::Right => (0, 1),
    };
    let mut out = NCPoly::zero();
    for (legs, c) in d.terms() {
        let v = chi.eval(h, &NCPoly::word(legs[eval_leg].clone()));
        out.add_term(legs[keep_leg].clone(), &(c * v));
    }
    out
}
