//! Closed-form decisions for upper-triangular `T` with diagonal `αt, αβt`
//! (size 2) and `αt, αβt, αβγt` (size 3).

use num_traits::Zero;
use serde::Serialize;

use super::triangular::quantum_number;
use super::ClassifyError;
use crate::exactalg::{cusp_membership, LaurentPoly, Scalar};
use crate::ncmatrix::RingMatrix;

/// Which of the three branches of the size-2 decision applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum N2Case {
    /// `[[2]]_β = 0`, i.e. `β = −1`.
    MinusOne,
    /// `[[3]]_β = 0`, a primitive cube root of unity. Never occurs over `ℚ(i)`.
    CubeRoot,
    /// Both quantum numbers nonzero.
    Generic,
}

impl N2Case {
    pub fn of(beta: &Scalar) -> Self {
        if quantum_number(2, beta).is_zero() {
            N2Case::MinusOne
        } else if quantum_number(3, beta).is_zero() {
            N2Case::CubeRoot
        } else {
            N2Case::Generic
        }
    }

    /// Exponents an off-diagonal entry may carry in this case.
    pub fn allows(self, e: i64) -> bool {
        match self {
            N2Case::MinusOne => e == -2 || e >= 0,
            N2Case::CubeRoot => e == -1 || e >= 1,
            N2Case::Generic => e >= 1,
        }
    }

    pub fn number(self) -> u8 {
        match self {
            N2Case::MinusOne => 1,
            N2Case::CubeRoot => 2,
            N2Case::Generic => 3,
        }
    }
}

/// First exponent of `z` that the case forbids.
fn forbidden_exponent(case: N2Case, z: &LaurentPoly) -> Option<i64> {
    z.terms().map(|(e, _)| e).find(|e| !case.allows(*e))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct N2Decision {
    pub accepted: bool,
    pub case: N2Case,
    pub witness: Option<String>,
}

/// `T = [[αt, z], [0, αβt]]`.
pub fn n2_matrix(alpha: &Scalar, beta: &Scalar, z: &LaurentPoly) -> RingMatrix<LaurentPoly> {
    let a = LaurentPoly::monomial(alpha.clone(), 1);
    RingMatrix::from_rows(vec![vec![a.clone(), z.clone()], vec![LaurentPoly::zero(), a.scale(beta)]])
}

pub fn classify_n2(alpha: &Scalar, beta: &Scalar, z: &LaurentPoly) -> Result<N2Decision, ClassifyError> {
    if alpha.is_zero() {
        return Err(ClassifyError::ZeroParameter("alpha"));
    }
    let case = N2Case::of(beta);
    let bad = forbidden_exponent(case, z);
    Ok(N2Decision {
        accepted: bad.is_none(),
        case,
        witness: bad.map(|e| format!("z has a term of degree {e}")),
    })
}

/// How the `(1, 3)` entry is constrained.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Coupling {
    /// `1 + γ + βγ ≠ 0`: `z = (1+β+βγ)t⁻¹a − t⁻²b` and
    /// `xy = α(−[[3]]_{βγ}a + [[2]]_{βγ}t⁻¹b)` with `a, b ∈ k[t², t³]`.
    Regular { a: LaurentPoly, b: LaurentPoly },
    /// `1 + γ + βγ = 0`: `c = xy − αγtz` and `[[3]]_γ tc` must lie in the cusp.
    Singular { c: LaurentPoly },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct N3Decision {
    pub accepted: bool,
    pub x_case: N2Case,
    pub y_case: N2Case,
    pub coupling: Coupling,
    /// Human-readable reasons for rejection, in condition order.
    pub failures: Vec<String>,
}

/// `T = [[αt, x, z], [0, αβt, y], [0, 0, αβγt]]`.
pub fn n3_matrix(
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    x: &LaurentPoly,
    y: &LaurentPoly,
    z: &LaurentPoly,
) -> RingMatrix<LaurentPoly> {
    let a = LaurentPoly::monomial(alpha.clone(), 1);
    let ab = a.scale(beta);
    let zero = LaurentPoly::zero();
    RingMatrix::from_rows(vec![
        vec![a, x.clone(), z.clone()],
        vec![zero.clone(), ab.clone(), y.clone()],
        vec![zero.clone(), zero, ab.scale(gamma)],
    ])
}

fn t_times(p: &LaurentPoly, k: i64) -> LaurentPoly {
    p.shift(k).expect("desk-scale exponents")
}

/// The regular-case witnesses, from inverting the `2 × 2` system that
/// expresses `(T²)₁₃, (T³)₁₃` through `tz` and `xy`.
fn regular_witnesses(
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    xy: &LaurentPoly,
    z: &LaurentPoly,
) -> (LaurentPoly, LaurentPoly) {
    let bg = beta * gamma;
    let (q2, q3) = (quantum_number(2, &bg), quantum_number(3, &bg));
    let d = &(&Scalar::from_int(1) + gamma) + &bg;
    let one_b_bg = &(&Scalar::from_int(1) + beta) + &bg;
    // Rescaled so that z and xy take the displayed form.
    let a_scale = (&(alpha * beta) * &d).inv().expect("regular case");
    let b_scale = (&(&(alpha * alpha) * beta) * &d).inv().expect("regular case");
    let a = &t_times(z, 1).scale(&(alpha * &q2)) + xy;
    let b = &t_times(z, 2).scale(&(&(alpha * alpha) * &q3)) + &t_times(xy, 1).scale(&(alpha * &one_b_bg));
    let (a, b) = (a.scale(&a_scale), b.scale(&b_scale));
    debug_assert_eq!(&t_times(&a, -1).scale(&one_b_bg) - &t_times(&b, -2), *z);
    debug_assert_eq!((&t_times(&b, -1).scale(&q2) - &a.scale(&q3)).scale(alpha), *xy);
    (a, b)
}

pub fn classify_n3(
    alpha: &Scalar,
    beta: &Scalar,
    gamma: &Scalar,
    x: &LaurentPoly,
    y: &LaurentPoly,
    z: &LaurentPoly,
) -> Result<N3Decision, ClassifyError> {
    for (name, v) in [("alpha", alpha), ("beta", beta), ("gamma", gamma)] {
        if v.is_zero() {
            return Err(ClassifyError::ZeroParameter(name));
        }
    }
    let mut failures = Vec::new();
    let x_case = N2Case::of(beta);
    if let Some(e) = forbidden_exponent(x_case, x) {
        failures.push(format!("condition 1: x has a term of degree {e}"));
    }
    let y_case = N2Case::of(gamma);
    if let Some(e) = forbidden_exponent(y_case, y) {
        failures.push(format!("condition 2: y has a term of degree {e}"));
    }
    let xy = x * y;
    let d = &(&Scalar::from_int(1) + gamma) + &(beta * gamma);
    let coupling = if d.is_zero() {
        let c = &xy - &t_times(z, 1).scale(&(alpha * gamma));
        if !cusp_membership(&c) {
            failures.push(format!("condition 3: c = {c} is not in k[t², t³]"));
        } else if !cusp_membership(&t_times(&c, 1).scale(&quantum_number(3, gamma))) {
            failures.push(format!("condition 3: [[3]]_γ t c is not in k[t², t³] for c = {c}"));
        }
        Coupling::Singular { c }
    } else {
        let (a, b) = regular_witnesses(alpha, beta, gamma, &xy, z);
        for (name, w) in [("a", &a), ("b", &b)] {
            if !cusp_membership(w) {
                failures.push(format!("condition 3: {name} = {w} is not in k[t², t³]"));
            }
        }
        Coupling::Regular { a, b }
    };
    Ok(N3Decision { accepted: failures.is_empty(), x_case, y_case, coupling, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::{restricts_to_cusp, TriangularT};
    use crate::cusp::t_matrix;
    use num_traits::One;

    fn lp(terms: &[(i64, Scalar)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().cloned())
    }

    fn agrees_n2(alpha: &Scalar, beta: &Scalar, z: &LaurentPoly) -> N2Decision {
        let d = classify_n2(alpha, beta, z).unwrap();
        let t = TriangularT::from_laurent(&n2_matrix(alpha, beta, z)).unwrap();
        assert_eq!(d.accepted, restricts_to_cusp(&t), "β = {beta}, z = {z}");
        d
    }

    #[test]
    fn n2_examples() {
        let one = Scalar::one();
        let m1 = -Scalar::one();
        let d = agrees_n2(&one, &m1, &lp(&[(1, one.clone()), (0, -Scalar::i())]));
        assert!(d.accepted);
        assert_eq!(d.case, N2Case::MinusOne);
        let d = agrees_n2(&one, &one, &LaurentPoly::one());
        assert!(!d.accepted);
        assert_eq!(d.case, N2Case::Generic);
        assert!(agrees_n2(&one, &m1, &LaurentPoly::zero()).accepted);
        assert!(classify_n2(&Scalar::zero(), &one, &LaurentPoly::zero()).is_err());
    }

    #[test]
    fn n2_minus_one_allows_degree_minus_two() {
        let m1 = -Scalar::one();
        assert!(agrees_n2(&Scalar::from_int(2), &m1, &LaurentPoly::t_pow(-2)).accepted);
        assert!(!agrees_n2(&Scalar::from_int(2), &m1, &LaurentPoly::t_pow(-1)).accepted);
        assert!(!agrees_n2(&Scalar::from_int(2), &m1, &LaurentPoly::t_pow(-3)).accepted);
    }

    #[test]
    fn cube_root_case_is_unreachable_over_gaussian_rationals() {
        // [[3]]_β = 0 needs β² + β + 1 = 0, whose roots involve √−3.
        for b in [Scalar::i(), -Scalar::i(), Scalar::ratio(-1, 2), Scalar::complex(Scalar::ratio(-1, 2), Scalar::ratio(1, 2))] {
            assert_ne!(N2Case::of(&b), N2Case::CubeRoot);
        }
        assert!(N2Case::CubeRoot.allows(-1) && !N2Case::CubeRoot.allows(0));
    }

    #[test]
    fn explicit_example_witnesses() {
        let t = t_matrix();
        let (m1, one) = (-Scalar::one(), Scalar::one());
        let d = classify_n3(&one, &m1, &m1, t.get(0, 1), t.get(1, 2), t.get(0, 2)).unwrap();
        assert!(d.accepted, "{:?}", d.failures);
        assert_eq!(d.x_case, N2Case::MinusOne);
        let Coupling::Regular { a, b } = d.coupling else { panic!("regular case expected") };
        assert_eq!(a, LaurentPoly::constant(Scalar::ratio(-1, 3)));
        assert_eq!(b, LaurentPoly::monomial(Scalar::ratio(1, 2), 3));
    }

    #[test]
    fn n3_small_cases() {
        let one = Scalar::one();
        let zero = LaurentPoly::zero();
        assert!(classify_n3(&one, &one, &one, &zero, &zero, &zero).unwrap().accepted);
        let d = classify_n3(&one, &one, &one, &LaurentPoly::one(), &zero, &zero).unwrap();
        assert!(!d.accepted);
        assert!(d.failures[0].starts_with("condition 1"));
        let t = TriangularT::from_laurent(&n3_matrix(&one, &one, &one, &LaurentPoly::one(), &zero, &zero)).unwrap();
        assert!(!restricts_to_cusp(&t));
    }

    #[test]
    fn singular_case_matches_brute_force() {
        // γ = 1 forces β = −2.
        let (one, b) = (Scalar::one(), Scalar::from_int(-2));
        let x = LaurentPoly::t_pow(1);
        let y = LaurentPoly::t_pow(2);
        for z in [LaurentPoly::t_pow(2), LaurentPoly::t_pow(-1), LaurentPoly::t_pow(1), LaurentPoly::zero()] {
            let d = classify_n3(&one, &b, &one, &x, &y, &z).unwrap();
            assert!(matches!(d.coupling, Coupling::Singular { .. }));
            let t = TriangularT::from_laurent(&n3_matrix(&one, &b, &one, &x, &y, &z)).unwrap();
            assert_eq!(d.accepted, restricts_to_cusp(&t), "z = {z}");
        }
    }
}
