//! The pairing between `H_σ` and `A_σ`, computed from matrix coefficients of
//! the action on `F₃ = span{1, t², t³}` and from its closed formula.

use std::cell::RefCell;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cusp::{basis_word, h_sigma, Representation};
use crate::exactalg::Scalar;
use crate::hopfcore::{HopfPresentation, TensorPoly};
use crate::rewrite::{NCPoly, Word};

/// Exponents of `e₁ = 1, e₂ = t², e₃ = t³`.
const FRAME: [i64; 3] = [0, 2, 3];

/// Generators of `A_σ` (and `δ`) as matrix coefficients `a_{ji}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    Delta,
    Gamma,
    Phi,
    Psi,
}

impl Letter {
    /// The `(j, i)` of the matrix coefficient `a_{ji}`.
    pub fn coefficient_index(self) -> (usize, usize) {
        match self {
            Letter::Gamma => (1, 3),
            Letter::Phi => (2, 3),
            Letter::Psi => (3, 3),
            Letter::Delta => (1, 2),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Letter::Delta => "delta",
            Letter::Gamma => "gamma",
            Letter::Phi => "phi",
            Letter::Psi => "psi",
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Letter {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        [Letter::Delta, Letter::Gamma, Letter::Phi, Letter::Psi]
            .into_iter()
            .find(|l| l.name() == s)
            .ok_or_else(|| format!("unknown letter {s:?}"))
    }
}

/// `γᵃ φᵇ ψᶜ` as letters.
pub fn monomial_letters(a: u32, b: u32, c: u32) -> Vec<Letter> {
    let mut w = vec![Letter::Gamma; a as usize];
    w.extend(std::iter::repeat_n(Letter::Phi, b as usize));
    w.extend(std::iter::repeat_n(Letter::Psi, c as usize));
    w
}

/// Memoized evaluation of `⟨X, ℓ₁⋯ℓ_m⟩ = Σ ⟨X₍₁₎, ℓ₁⟩ ⟨X₍₂₎, ℓ₂⋯ℓ_m⟩`.
pub struct PairingOracle {
    h: HopfPresentation,
    rho: Representation,
    memo: RefCell<HashMap<(Word, Vec<Letter>), Scalar>>,
}

impl Default for PairingOracle {
    fn default() -> Self {
        Self::new()
    }
}

impl PairingOracle {
    pub fn new() -> Self {
        let h = h_sigma();
        let rho = Representation::new(&h, 3);
        PairingOracle { h, rho, memo: RefCell::new(HashMap::new()) }
    }

    pub fn h_sigma(&self) -> &HopfPresentation {
        &self.h
    }

    fn coefficient_word(&self, w: &[u8], j: usize, i: usize) -> Scalar {
        self.rho.word(w).image(FRAME[i - 1]).coeff(FRAME[j - 1])
    }

    /// `a_{ji}(X)`: coefficient of `e_j` in `X(e_i)`.
    pub fn matrix_coefficient(&self, x: &NCPoly, j: usize, i: usize) -> Scalar {
        x.terms().map(|(w, c)| c * &self.coefficient_word(w, j, i)).sum()
    }

    pub fn pair_word(&self, x: &[u8], letters: &[Letter]) -> Scalar {
        match letters {
            [] => self.h.counit(&NCPoly::word(x.to_vec())),
            [l] => {
                let (j, i) = l.coefficient_index();
                self.coefficient_word(x, j, i)
            }
            [first, rest @ ..] => {
                let key = (x.to_vec(), letters.to_vec());
                if let Some(v) = self.memo.borrow().get(&key) {
                    return v.clone();
                }
                let mut acc = Scalar::zero();
                for (legs, c) in self.h.coproduct_word(x).terms() {
                    let head = self.pair_word(&legs[0], std::slice::from_ref(first));
                    if head.is_zero() {
                        continue;
                    }
                    acc += &(c * &head * self.pair_word(&legs[1], rest));
                }
                self.memo.borrow_mut().insert(key, acc.clone());
                acc
            }
        }
    }

    /// Bilinear extension to polynomials in `H_σ` and words in letters.
    pub fn pair(&self, x: &NCPoly, letters: &[Letter]) -> Scalar {
        x.terms().map(|(w, c)| c * &self.pair_word(w, letters)).sum()
    }

    /// Pairing with a polynomial of an `A_σ` presentation whose symbols are
    /// named after letters.
    pub fn pair_poly(&self, x: &NCPoly, a_pres: &HopfPresentation, p: &NCPoly) -> Scalar {
        let letters: Vec<Letter> = (0..a_pres.alphabet().len())
            .map(|k| a_pres.alphabet().name(k as u8).parse().unwrap_or_else(|e| panic!("{e}")))
            .collect();
        p.terms()
            .map(|(w, c)| {
                let ls: Vec<Letter> = w.iter().map(|s| letters[*s as usize]).collect();
                c * &self.pair(x, &ls)
            })
            .sum()
    }

    /// `⟨CⁱDʲKᵏYˡ, γᵃφᵇψᶜ⟩`.
    pub fn pair_monomials(&self, hx: [u32; 4], ax: [u32; 3]) -> Scalar {
        let w = basis_word(&self.h, hx[0], hx[1], hx[2], hx[3]);
        self.pair_word(&w, &monomial_letters(ax[0], ax[1], ax[2]))
    }
}

/// `a_{ji}(X)` on a fresh oracle.
pub fn matrix_coefficient(x: &NCPoly, j: usize, i: usize) -> Scalar {
    PairingOracle::new().matrix_coefficient(x, j, i)
}

/// `⟨X, w⟩` on a fresh oracle.
pub fn oracle_pairing(x: &NCPoly, letters: &[Letter]) -> Scalar {
    PairingOracle::new().pair(x, letters)
}

fn factorial(n: u32) -> Scalar {
    (1..=n as i64).fold(Scalar::one(), |acc, k| acc * Scalar::from_int(k))
}

/// `δ_{j+2l,b} δ_{ia} (−1)^{j(a+c)+ic+ab+k(a+b+c)} 2ᵃ 6ˡ l!` for
/// `⟨CⁱDʲKᵏYˡ, γᵃφᵇψᶜ⟩`.
pub fn closed_pairing(hx: [u32; 4], ax: [u32; 3]) -> Scalar {
    let [i, j, k, l] = hx;
    let [a, b, c] = ax;
    if j + 2 * l != b || i != a {
        return Scalar::zero();
    }
    let sign = Scalar::sign((j * (a + c) + i * c + a * b + k * (a + b + c)) as i64);
    sign * Scalar::from_int(2).pow(a) * Scalar::from_int(6).pow(l) * factorial(l)
}

fn binomial(n: u32, k: u32) -> Scalar {
    if k > n {
        return Scalar::zero();
    }
    (0..k as i64).fold(Scalar::one(), |acc, m| acc * Scalar::ratio(n as i64 - m, m + 1))
}

/// `Δ(γᵃφᵇψᶜ) = (Δγ)ᵃ Σ_l [l even or b odd] C(⌊b/2⌋, ⌊l/2⌋) φˡψᶜ ⊗ φ^{b−l}ψ^{(bl mod 2)+c}`
/// in the `γ, φ, ψ` presentation.
pub fn closed_coproduct_power(a_pres: &HopfPresentation, a: u32, b: u32, c: u32) -> TensorPoly {
    let (phi, psi) = (a_pres.gen("phi"), a_pres.gen("psi"));
    let mut tail = TensorPoly::zero(2);
    for l in 0..=b {
        if ((b + 1) * l) % 2 == 1 {
            continue;
        }
        let left = a_pres.mul(&a_pres.pow(&phi, l), &a_pres.pow(&psi, c));
        let right = a_pres.mul(&a_pres.pow(&phi, b - l), &a_pres.pow(&psi, (b * l) % 2 + c));
        tail.add_scaled(&TensorPoly::from_pair(&left, &right), &binomial(b / 2, l / 2));
    }
    let dg = a_pres.coproduct(&a_pres.gen("gamma"));
    let mut head = TensorPoly::one(2);
    for _ in 0..a {
        head = a_pres.tensor_mul(&head, &dg);
    }
    a_pres.tensor_mul(&head, &tail)
}

/// One cell of a pairing table.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairingEntry {
    pub h_exponents: [u32; 4],
    pub a_exponents: [u32; 3],
    pub oracle: Scalar,
    pub closed: Scalar,
}

/// `⟨CⁱDʲKᵏYˡ, γᵃφᵇψᶜ⟩` for `i, j, k, a, c ∈ {0, 1}`, `l ≤ max_l`, `b ≤ max_b`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairingTable {
    pub max_l: u32,
    pub max_b: u32,
    pub entries: Vec<PairingEntry>,
}

impl PairingTable {
    pub fn build(oracle: &PairingOracle, max_l: u32, max_b: u32) -> Self {
        let mut entries = Vec::new();
        for hx in h_exponents(max_l) {
            for ax in a_exponents(max_b) {
                entries.push(PairingEntry {
                    h_exponents: hx,
                    a_exponents: ax,
                    oracle: oracle.pair_monomials(hx, ax),
                    closed: closed_pairing(hx, ax),
                });
            }
        }
        PairingTable { max_l, max_b, entries }
    }

    pub fn discrepancies(&self) -> impl Iterator<Item = &PairingEntry> {
        self.entries.iter().filter(|e| e.oracle != e.closed)
    }
}

/// `[i, j, k, l]` with `i, j, k ∈ {0, 1}` and `l ≤ max_l`.
pub fn h_exponents(max_l: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..=max_l {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}

/// `[a, b, c]` with `a, c ∈ {0, 1}` and `b ≤ max_b`.
pub fn a_exponents(max_b: u32) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..2 {
        for b in 0..=max_b {
            for c in 0..2 {
                out.push([a, b, c]);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::a_sigma;

    #[test]
    fn matrix_coefficient_examples() {
        let o = PairingOracle::new();
        let h = o.h_sigma();
        assert_eq!(o.matrix_coefficient(&h.gen("Y"), 1, 2), Scalar::from_int(2));
        assert_eq!(o.matrix_coefficient(&h.gen("C"), 1, 3), Scalar::from_int(2));
        assert_eq!(o.matrix_coefficient(&h.gen("K"), 3, 3), Scalar::from_int(-1));
    }

    #[test]
    fn oracle_examples() {
        let o = PairingOracle::new();
        let h = o.h_sigma();
        assert_eq!(o.pair(&h.gen("D"), &[Letter::Phi]), Scalar::one());
        assert_eq!(o.pair(&NCPoly::one(), &[]), Scalar::one());
        assert_eq!(o.pair(&h.gen("Y"), &[Letter::Phi, Letter::Phi]), Scalar::from_int(6));
        assert_eq!(o.pair(&h.gen("Y"), &[Letter::Delta]) * Scalar::from_int(3), Scalar::from_int(6));
    }

    #[test]
    fn closed_examples() {
        assert_eq!(closed_pairing([0, 1, 0, 0], [0, 1, 0]), Scalar::one());
        assert_eq!(closed_pairing([0, 0, 1, 0], [0, 0, 1]), Scalar::from_int(-1));
        assert_eq!(closed_pairing([1, 1, 0, 0], [1, 1, 0]), Scalar::from_int(2));
        assert_eq!(PairingOracle::new().pair_monomials([1, 1, 0, 0], [1, 1, 0]), Scalar::from_int(2));
    }

    #[test]
    fn closed_coproduct_small_cases() {
        let a = a_sigma();
        let f = a.gen("phi");
        for (x, y, z) in [(0, 2, 0), (0, 0, 1), (0, 1, 0), (1, 3, 1), (2, 4, 0)] {
            let m = a.mul(&a.mul(&a.pow(&a.gen("gamma"), x), &a.pow(&f, y)), &a.pow(&a.gen("psi"), z));
            assert_eq!(closed_coproduct_power(&a, x, y, z), a.coproduct(&m), "({x},{y},{z})");
        }
    }
}
