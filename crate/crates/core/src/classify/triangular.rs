//! Upper-triangular `T = σ(t)` over `k(t)`: Möbius diagonals, evaluation of
//! rational functions at `T`, and restriction to the cusp.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::Serialize;

use super::ClassifyError;
use crate::exactalg::{cusp_membership, LaurentPoly, RationalFunction, Scalar};
use crate::ncmatrix::{triangular_inverse, RingMatrix};
use crate::report::{Check, Report};

/// `[[l]]_β = 1 + β + ⋯ + β^{l−1}`.
pub fn quantum_number(l: u32, beta: &Scalar) -> Scalar {
    let mut acc = Scalar::zero();
    let mut p = Scalar::from_int(1);
    for _ in 0..l {
        acc += &p;
        p = &p * beta;
    }
    acc
}

/// `(αt + β)/(γt + δ)` with `αδ − βγ ≠ 0`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MoebiusParams {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Scalar,
    pub delta: Scalar,
}

impl MoebiusParams {
    pub fn new(alpha: Scalar, beta: Scalar, gamma: Scalar, delta: Scalar) -> Result<Self, ClassifyError> {
        let m = MoebiusParams { alpha, beta, gamma, delta };
        if m.determinant().is_zero() {
            return Err(ClassifyError::SingularMoebius);
        }
        Ok(m)
    }

    /// `αt`.
    pub fn linear(alpha: Scalar) -> Result<Self, ClassifyError> {
        Self::new(alpha, Scalar::zero(), Scalar::zero(), Scalar::from_int(1))
    }

    pub fn determinant(&self) -> Scalar {
        &(&self.alpha * &self.delta) - &(&self.beta * &self.gamma)
    }

    /// Reads off the parameters of a rational function of degree `≤ 1` over
    /// degree `≤ 1`; `None` if `f` is not of that shape or is constant.
    pub fn from_ratfunc(f: &RationalFunction) -> Option<Self> {
        let (num, den) = (f.num(), f.den());
        let shape_ok = |p: &LaurentPoly| p.min_exp().is_none_or(|e| e >= 0) && p.max_exp().is_none_or(|e| e <= 1);
        if !shape_ok(num) || !shape_ok(den) {
            return None;
        }
        Self::new(num.coeff(1), num.coeff(0), den.coeff(1), den.coeff(0)).ok()
    }

    pub fn to_ratfunc(&self) -> RationalFunction {
        let num = LaurentPoly::from_terms([(1, self.alpha.clone()), (0, self.beta.clone())]);
        let den = LaurentPoly::from_terms([(1, self.gamma.clone()), (0, self.delta.clone())]);
        RationalFunction::new(num, den).expect("nonzero denominator")
    }
}

/// An upper-triangular matrix over `k(t)`, the candidate `T = σ(t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TriangularT {
    matrix: RingMatrix<RationalFunction>,
}

impl TriangularT {
    pub fn new(matrix: RingMatrix<RationalFunction>) -> Result<Self, ClassifyError> {
        let n = matrix.size();
        for i in 0..n {
            for j in 0..i {
                if !matrix.get(i, j).is_zero() {
                    return Err(ClassifyError::NotTriangular(i + 1, j + 1));
                }
            }
        }
        Ok(TriangularT { matrix })
    }

    pub fn from_laurent(m: &RingMatrix<LaurentPoly>) -> Result<Self, ClassifyError> {
        Self::new(m.map(|p| RationalFunction::from_laurent(p.clone())))
    }

    /// Möbius diagonal and strictly upper entries keyed by 0-based `(i, j)`.
    pub fn from_parts(
        diagonal: &[MoebiusParams],
        upper: &BTreeMap<(usize, usize), RationalFunction>,
    ) -> Result<Self, ClassifyError> {
        let n = diagonal.len();
        let mut rows = vec![vec![RationalFunction::zero(); n]; n];
        for (i, d) in diagonal.iter().enumerate() {
            rows[i][i] = d.to_ratfunc();
        }
        for (&(i, j), f) in upper {
            if i >= j || j >= n {
                return Err(ClassifyError::NotTriangular(i + 1, j + 1));
            }
            rows[i][j] = f.clone();
        }
        Ok(TriangularT { matrix: RingMatrix::from_rows(rows) })
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }

    pub fn matrix(&self) -> &RingMatrix<RationalFunction> {
        &self.matrix
    }

    /// The diagonal as Möbius parameters, `None` where an entry is not one.
    pub fn diagonal(&self) -> Vec<Option<MoebiusParams>> {
        (0..self.size()).map(|i| MoebiusParams::from_ratfunc(self.matrix.get(i, i))).collect()
    }

    /// All entries as Laurent polynomials, if they are.
    pub fn to_laurent(&self) -> Option<RingMatrix<LaurentPoly>> {
        let rows: Option<Vec<Vec<LaurentPoly>>> =
            self.matrix.entries().iter().map(|r| r.iter().map(|f| f.to_laurent()).collect()).collect();
        rows.map(RingMatrix::from_rows)
    }
}

/// Every diagonal entry must be a Möbius transformation.
pub fn moebius_validate(t: &TriangularT) -> Report {
    let mut rep = Report::new("moebius").bound("n", t.size());
    let bad = t.diagonal().iter().position(Option::is_none);
    rep.push(Check::new(
        "diagonal entries are Möbius transformations",
        "classify.moebius",
        bad.is_none(),
        bad.map(|i| format!("T_{0}{0} = {1}", i + 1, t.matrix.get(i, i))),
    ));
    rep
}

fn poly_at(p: &LaurentPoly, t: &RingMatrix<RationalFunction>) -> RingMatrix<RationalFunction> {
    let n = t.size();
    let one = RingMatrix::identity_like(n, &RationalFunction::one());
    let mut acc = one.map(|_| RationalFunction::zero());
    let mut power = one;
    let mut at = 0;
    for (e, c) in p.terms() {
        debug_assert!(e >= 0);
        while at < e {
            power = power.mul(t);
            at += 1;
        }
        acc = acc.add(&power.map(|f| f.scale(c)));
    }
    acc
}

/// `f(T) = p(T) q(T)⁻¹` for `f = p/q`. `q(T)` is triangular with diagonal
/// `q(T_ii)`, which must be nonzero.
pub fn extend_to_ratfunc(t: &TriangularT, f: &RationalFunction) -> Result<RingMatrix<RationalFunction>, ClassifyError> {
    let p = poly_at(f.num(), &t.matrix);
    let q = poly_at(f.den(), &t.matrix);
    if let Some(i) = (0..t.size()).find(|&i| q.get(i, i).is_zero()) {
        return Err(ClassifyError::SingularDenominator(i + 1));
    }
    let q_inv = triangular_inverse(&q).expect("triangular with nonzero diagonal");
    Ok(p.mul(&q_inv))
}

/// The first entry of `T²` or `T³` outside `k[t², t³]`, if any.
pub fn cusp_obstruction(t: &TriangularT) -> Option<String> {
    // Laurent entries stay in the cheaper carrier.
    if let Some(m) = t.to_laurent() {
        let sq = m.mul(&m);
        let cube = sq.mul(&m);
        for (name, pow) in [("T²", &sq), ("T³", &cube)] {
            for (i, row) in pow.entries().iter().enumerate() {
                if let Some((j, p)) = row.iter().enumerate().find(|(_, p)| !cusp_membership(p)) {
                    return Some(format!("{name}_{}{} = {p}", i + 1, j + 1));
                }
            }
        }
        return None;
    }
    let sq = t.matrix.mul(&t.matrix);
    let cube = sq.mul(&t.matrix);
    for (name, pow) in [("T²", &sq), ("T³", &cube)] {
        for (i, row) in pow.entries().iter().enumerate() {
            if let Some((j, f)) =
                row.iter().enumerate().find(|(_, f)| !f.to_laurent().is_some_and(|p| cusp_membership(&p)))
            {
                return Some(format!("{name}_{}{} = {f}", i + 1, j + 1));
            }
        }
    }
    None
}

/// Whether `T²` and `T³` have all entries in `k[t², t³]`.
pub fn restricts_to_cusp(t: &TriangularT) -> bool {
    cusp_obstruction(t).is_none()
}

/// For `T` restricting to the cusp: Laurent entries with no term of degree
/// below `−3n + 4`, and diagonal entries of the form `αᵢt`.
pub fn degree_bound_validate(t: &TriangularT) -> Report {
    let n = t.size() as i64;
    let bound = -3 * n + 4;
    let mut rep = Report::new("degree bound").bound("n", n).bound("min_exponent", bound);
    let obstruction = cusp_obstruction(t);
    rep.push(Check::new("T restricts to the cusp", "classify.restricts", obstruction.is_none(), obstruction));
    let laurent = t.to_laurent();
    rep.push(Check::new(
        "entries are Laurent polynomials",
        "classify.laurent_entries",
        laurent.is_some(),
        None,
    ));
    let Some(m) = laurent else { return rep };
    let low = m.entries().iter().enumerate().flat_map(|(i, r)| r.iter().enumerate().map(move |(j, p)| (i, j, p))).find(
        |(_, _, p)| p.min_exp().is_some_and(|e| e < bound),
    );
    rep.push(Check::new(
        format!("no term of degree below {bound}"),
        "classify.degree_bound",
        low.is_none(),
        low.map(|(i, j, p)| format!("T_{}{} = {p}", i + 1, j + 1)),
    ));
    let bad_diag = (0..m.size()).find(|&i| {
        let p = m.get(i, i);
        p.len() != 1 || p.min_exp() != Some(1)
    });
    rep.push(Check::new(
        "diagonal entries are αᵢt",
        "classify.diagonal_form",
        bad_diag.is_none(),
        bad_diag.map(|i| format!("T_{0}{0} = {1}", i + 1, m.get(i, i))),
    ));
    rep
}
