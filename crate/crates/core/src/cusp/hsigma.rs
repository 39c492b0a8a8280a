//! The Hopf algebra `H_σ` generated by `K, D, Y` (with `C = YD − DY`) and
//! its action on the cusp.

use super::{closed_form_operator, OperatorName, TruncatedOperator};
use crate::hopfcore::HopfPresentation;
use crate::rewrite::{NCPoly, Sym, Word};

/// Presentation text of `H_σ`; `C` is an auxiliary generator for `YD − DY`.
pub const H_SIGMA_TEXT: &str = "
symbols: C D K Y
KK -> 1
DD -> 0
CC -> 0
DC -> -CD
KC -> -CK
KD -> -DK
YC -> CY
YK -> KY
YD -> DY + C
Delta C = 1 (x) C + C (x) K
Delta D = 1 (x) D + D (x) K
Delta K = K (x) K
Delta Y = 1 (x) Y - 6 D (x) DK + Y (x) 1
eps C = 0
eps D = 0
eps K = 1
eps Y = 0
S C = -CK
S D = -DK
S K = K
S Y = -Y
";

pub fn h_sigma() -> HopfPresentation {
    HopfPresentation::from_text("H_sigma", H_SIGMA_TEXT).expect("built-in presentation parses")
}

/// The normal-form basis word `C^a D^b K^c Y^d`.
pub fn basis_word(h: &HopfPresentation, a: u32, b: u32, c: u32, d: u32) -> Word {
    let a_ = h.alphabet();
    let sym = |n: &str| a_.sym(n).expect("generator of H_sigma");
    let mut w = Vec::new();
    for (name, e) in [("C", a), ("D", b), ("K", c), ("Y", d)] {
        w.extend(std::iter::repeat_n(sym(name), e as usize));
    }
    w
}

/// All words `C^a D^b K^c Y^d` with `a, b, c ≤ 1` and `d ≤ max_y`.
pub fn basis_words(h: &HopfPresentation, max_y: u32) -> Vec<Word> {
    let mut out = Vec::new();
    for a in 0..2 {
        for b in 0..2 {
            for c in 0..2 {
                for d in 0..=max_y {
                    out.push(basis_word(h, a, b, c, d));
                }
            }
        }
    }
    out
}

/// The action of `H_σ` on the degree-`≤ N` cusp: `K, D, Y, C` act by their
/// closed-form operators and words act by composition.
#[derive(Clone, Debug)]
pub struct Representation {
    n: i64,
    gens: Vec<TruncatedOperator>,
}

impl Representation {
    pub fn new(h: &HopfPresentation, n: i64) -> Self {
        let gens = h
            .alphabet()
            .names()
            .iter()
            .map(|g| {
                let name: OperatorName = g.parse().unwrap_or_else(|e| panic!("{e}"));
                closed_form_operator(name, n)
            })
            .collect();
        Representation { n, gens }
    }

    pub fn degree_bound(&self) -> i64 {
        self.n
    }

    pub fn generator(&self, s: Sym) -> &TruncatedOperator {
        &self.gens[s as usize]
    }

    pub fn word(&self, w: &[Sym]) -> TruncatedOperator {
        w.iter().fold(TruncatedOperator::identity(self.n), |acc, s| acc.compose(&self.gens[*s as usize]))
    }

    pub fn apply(&self, p: &NCPoly) -> TruncatedOperator {
        p.terms().fold(TruncatedOperator::zero(self.n), |acc, (w, c)| acc.add(&self.word(w).scale(c)))
    }
}

/// Image of `p ∈ H_σ` in `End(B_{≤N})`.
pub fn represent(p: &NCPoly, n: i64) -> TruncatedOperator {
    Representation::new(&h_sigma(), n).apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{LaurentPoly, Scalar};
    use crate::hopfcore::TensorPoly;

    #[test]
    fn presentation_is_confluent_with_expected_basis() {
        let h = h_sigma();
        assert!(h.system().check_confluence(8).is_confluent());
        let mut got = h.system().enumerate_basis(4);
        let mut want: Vec<Word> = basis_words(&h, 4).into_iter().filter(|w| w.len() <= 4).collect();
        got.sort();
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn coproduct_of_commutator() {
        let h = h_sigma();
        let (c, k) = (h.gen("C"), h.gen("K"));
        let want = TensorPoly::from_pair(&NCPoly::one(), &c).add(&TensorPoly::from_pair(&c, &k));
        assert_eq!(h.coproduct(&c), want);
        let comm = &h.mul(&h.gen("Y"), &h.gen("D")) - &h.mul(&h.gen("D"), &h.gen("Y"));
        assert_eq!(h.coproduct(&comm), want);
    }

    #[test]
    fn commutator_relations() {
        let h = h_sigma();
        let (y, c) = (h.gen("Y"), h.gen("C"));
        assert!((&h.mul(&y, &c) - &h.mul(&c, &y)).is_zero());
        assert!(h.mul(&c, &c).is_zero());
        let d = h.gen("D");
        assert_eq!(h.antipode(&h.antipode(&d)), -&d);
        assert_eq!(h.antipode(&h.mul(&d, &h.gen("K"))), d);
    }

    #[test]
    fn representation_examples() {
        let h = h_sigma();
        let n = 10;
        let cd = h.mul(&h.gen("C"), &h.gen("D"));
        assert!(!cd.is_zero());
        assert!(represent(&cd, n).is_zero());
        let kk = NCPoly::word(vec![2, 2]);
        assert_eq!(represent(&kk, n), TruncatedOperator::identity(n));
        let y = represent(&h.gen("Y"), n);
        assert_eq!(y.apply(&LaurentPoly::t_pow(2)), LaurentPoly::constant(Scalar::from_int(2)));
    }
}
