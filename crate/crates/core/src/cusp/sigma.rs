//! The quantum automorphism `σ` of the cusp and the closed-form operators
//! read off from it.

use std::fmt;
use std::str::FromStr;

use super::TruncatedOperator;
use crate::exactalg::{cusp_exponents, LaurentPoly, Scalar};
use crate::ncmatrix::RingMatrix;

/// Smallest truncation accepted by [`build_sigma`].
pub const MIN_TRUNCATION: i64 = 6;

fn s(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn q(a: i64, b: i64) -> Scalar {
    Scalar::ratio(a, b)
}

fn mono(c: Scalar, e: i64) -> LaurentPoly {
    LaurentPoly::monomial(c, e)
}

/// The upper-triangular matrix `T` with `σ(t^n) = T^n`:
///
/// ```text
/// [ t   t − i   −⅓t⁻¹ − ½t ]
/// [ 0   −t      t + i      ]
/// [ 0   0       t          ]
/// ```
pub fn t_matrix() -> RingMatrix<LaurentPoly> {
    let i = Scalar::i();
    let t = LaurentPoly::t_pow(1);
    let z = LaurentPoly::zero();
    RingMatrix::from_rows(vec![
        vec![t.clone(), &t - &LaurentPoly::constant(i.clone()), &mono(q(-1, 3), -1) + &mono(q(-1, 2), 1)],
        vec![z.clone(), -&t, &t + &LaurentPoly::constant(i)],
        vec![z.clone(), z, t],
    ])
}

/// `σ(x) = T²`.
pub fn sigma_x() -> RingMatrix<LaurentPoly> {
    let t = t_matrix();
    t.mul(&t)
}

/// `σ(y) = T³`.
pub fn sigma_y() -> RingMatrix<LaurentPoly> {
    sigma_x().mul(&t_matrix())
}

fn matrix_pow(m: &RingMatrix<LaurentPoly>, e: i64) -> RingMatrix<LaurentPoly> {
    (0..e).fold(RingMatrix::identity_like(m.size(), &LaurentPoly::one()), |acc, _| acc.mul(m))
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("truncation degree {0} is below the minimum {MIN_TRUNCATION}")]
pub struct TruncationTooSmall(pub i64);

/// `σ` on the degree-`≤ N` part of the cusp.
#[derive(Clone, Debug, PartialEq)]
pub struct CuspSigma {
    n: i64,
    matrix: RingMatrix<TruncatedOperator>,
}

impl CuspSigma {
    pub fn degree_bound(&self) -> i64 {
        self.n
    }

    pub fn matrix(&self) -> &RingMatrix<TruncatedOperator> {
        &self.matrix
    }

    /// Entry `σ_ij` with 1-based indices.
    pub fn entry(&self, i: usize, j: usize) -> &TruncatedOperator {
        self.matrix.get(i - 1, j - 1)
    }
}

/// Operators `σ_ij(t^e) = (T^e)_ij` on the degree-`≤ n` part of the cusp, for
/// any square `T` over `k[t, t⁻¹]`. Fails if some image leaves the truncated
/// cusp space.
pub fn induced_operators(t: &RingMatrix<LaurentPoly>, n: i64) -> Result<RingMatrix<TruncatedOperator>, String> {
    let x = t.mul(t);
    let y = x.mul(t);
    let powers: Vec<(i64, RingMatrix<LaurentPoly>)> = cusp_exponents(n)
        .map(|e| {
            let (p, q) = if e % 2 == 0 { (e / 2, 0) } else { ((e - 3) / 2, 1) };
            (e, matrix_pow(&x, p).mul(&matrix_pow(&y, q)))
        })
        .collect();
    let image = |i: usize, j: usize, e: i64| -> LaurentPoly {
        powers.iter().find(|(f, _)| *f == e).map(|(_, m)| m.get(i, j).clone()).unwrap_or_else(LaurentPoly::zero)
    };
    let size = t.size();
    let rows = (0..size)
        .map(|i| (0..size).map(|j| TruncatedOperator::from_fn(n, |e| image(i, j, e))).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(RingMatrix::from_rows(rows))
}

/// Builds `σ_ij(x^p y^q) = (σ(x)^p σ(y)^q)_ij` for every cusp monomial of
/// degree `≤ N`.
pub fn build_sigma(n: i64) -> Result<CuspSigma, TruncationTooSmall> {
    if n < MIN_TRUNCATION {
        return Err(TruncationTooSmall(n));
    }
    let matrix = induced_operators(&t_matrix(), n).expect("entries of σ preserve the cusp");
    Ok(CuspSigma { n, matrix })
}

/// Operators with a closed formula on monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OperatorName {
    K,
    E,
    F,
    Z,
    D,
    Y,
    C,
    X,
}

impl OperatorName {
    pub const ALL: [OperatorName; 8] = [
        OperatorName::K,
        OperatorName::E,
        OperatorName::F,
        OperatorName::Z,
        OperatorName::D,
        OperatorName::Y,
        OperatorName::C,
        OperatorName::X,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            OperatorName::K => "K",
            OperatorName::E => "E",
            OperatorName::F => "F",
            OperatorName::Z => "Z",
            OperatorName::D => "D",
            OperatorName::Y => "Y",
            OperatorName::C => "C",
            OperatorName::X => "X",
        }
    }
}

impl fmt::Display for OperatorName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for OperatorName {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        OperatorName::ALL
            .into_iter()
            .find(|o| o.as_str() == s)
            .ok_or_else(|| format!("unknown operator {s:?}"))
    }
}

/// Image of `t^n` under a closed-form operator.
pub fn closed_form_image(name: OperatorName, n: i64) -> LaurentPoly {
    let odd = n % 2 != 0;
    let i = Scalar::i();
    match name {
        OperatorName::K => mono(if odd { s(-1) } else { s(1) }, n),
        OperatorName::E if odd => &mono(s(1), n) + &mono(-i, n - 1),
        OperatorName::F if odd => &mono(s(1), n) + &mono(i, n - 1),
        OperatorName::E | OperatorName::F => LaurentPoly::zero(),
        OperatorName::Z if odd => &mono(q(n - 3, 6), n - 2) + &mono(q(-1, 2), n),
        OperatorName::Z => mono(q(n, 6), n - 2),
        OperatorName::Y if odd => mono(s(n - 3), n - 2),
        OperatorName::Y => mono(s(n), n - 2),
        OperatorName::D if odd => mono(s(1), n - 1),
        OperatorName::C if odd => mono(s(2), n - 3),
        OperatorName::D | OperatorName::C => LaurentPoly::zero(),
        OperatorName::X => &closed_form_image(OperatorName::Y, n) + &closed_form_image(OperatorName::D, n),
    }
}

pub fn closed_form_operator(name: OperatorName, n: i64) -> TruncatedOperator {
    TruncatedOperator::from_fn(n, |e| closed_form_image(name, e)).expect("closed forms preserve the cusp")
}

/// `K` on the Laurent carrier `k[t, t⁻¹]`.
pub fn laurent_parity(p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_terms(p.terms().map(|(e, c)| (e, if e % 2 == 0 { c.clone() } else { -c.clone() })))
}

/// `t⁻¹ d/dt` on the Laurent carrier.
pub fn laurent_y0(p: &LaurentPoly) -> LaurentPoly {
    p.derivative().shift(-1).expect("no overflow at small degree")
}

/// `(3/2) t⁻² (K − 1)` on the Laurent carrier.
pub fn laurent_y1(p: &LaurentPoly) -> LaurentPoly {
    (&laurent_parity(p) - p).scale(&q(3, 2)).shift(-2).expect("no overflow at small degree")
}

/// `−½ t⁻¹ (K − 1)` on the Laurent carrier.
pub fn laurent_d(p: &LaurentPoly) -> LaurentPoly {
    (&laurent_parity(p) - p).scale(&q(-1, 2)).shift(-1).expect("no overflow at small degree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_x_and_y_entries() {
        let x = sigma_x();
        assert_eq!(x.get(0, 2), &LaurentPoly::constant(q(1, 3)));
        assert!(x.get(0, 1).is_zero());
        let y = sigma_y();
        // y − ix
        assert_eq!(y.get(0, 1), &(&mono(s(1), 3) + &mono(-Scalar::i(), 2)));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_image(OperatorName::K, 3), mono(s(-1), 3));
        assert_eq!(closed_form_image(OperatorName::Z, 2), LaurentPoly::constant(q(1, 3)));
        assert_eq!(closed_form_image(OperatorName::Y, 5), mono(s(2), 3));
        assert_eq!(closed_form_image(OperatorName::C, 3), LaurentPoly::constant(s(2)));
        assert_eq!(closed_form_image(OperatorName::X, 3), mono(s(1), 2));
    }

    #[test]
    fn sigma_entries_match_closed_forms() {
        let sig = build_sigma(12).unwrap();
        let pairs = [(OperatorName::K, 2, 2), (OperatorName::E, 1, 2), (OperatorName::F, 2, 3), (OperatorName::Z, 1, 3)];
        for (name, i, j) in pairs {
            assert_eq!(sig.entry(i, j), &closed_form_operator(name, 12), "{name}");
        }
        assert_eq!(sig.entry(1, 1), &TruncatedOperator::identity(12));
        assert_eq!(sig.entry(3, 3), &TruncatedOperator::identity(12));
    }

    #[test]
    fn too_small_truncation() {
        assert_eq!(build_sigma(5), Err(TruncationTooSmall(5)));
    }

    #[test]
    fn laurent_carrier_parts() {
        let t3 = LaurentPoly::t_pow(3);
        assert_eq!(laurent_y0(&t3), mono(s(3), 1));
        assert_eq!(laurent_d(&t3), LaurentPoly::t_pow(2));
        assert_eq!(&laurent_y0(&t3) + &laurent_y1(&t3), LaurentPoly::zero());
    }
}
