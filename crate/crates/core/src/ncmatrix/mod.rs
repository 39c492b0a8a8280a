//! Matrices over possibly noncommutative rings: transposes, the contragredient
//! map `σ ↦ (σ⁻¹)ᵀ`, triangular inversion, strong orbits and the
//! quantum-automorphism test on the cusp.

mod json;
mod ring;

use std::collections::BTreeMap;

pub use json::{Carrier, DecodedMatrix, MatrixJson, MatrixJsonError};
pub use ring::{Opposite, Ring};

use crate::cusp::TruncatedOperator;
use crate::exactalg::{cusp_exponents, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MatrixError {
    #[error("matrix is not upper triangular (entry ({0}, {1}) is nonzero)")]
    NotTriangular(usize, usize),
    #[error("diagonal entry ({0}, {0}) is not invertible")]
    SingularDiagonal(usize),
    #[error("no inverse found{}", match .0 { Some(b) => format!(" of degree <= {b}"), None => String::new() })]
    NotInvertible(Option<usize>),
    #[error("strong orbit breaks at index {0}: {1}")]
    OrbitBreak(i64, String),
    #[error("empty matrix")]
    Empty,
}

#[derive(Clone, PartialEq, Debug)]
pub struct RingMatrix<R> {
    entries: Vec<Vec<R>>,
}

impl<R: Ring> RingMatrix<R> {
    /// Panics unless `rows` is square and nonempty.
    pub fn from_rows(rows: Vec<Vec<R>>) -> Self {
        let n = rows.len();
        assert!(n > 0 && rows.iter().all(|r| r.len() == n), "matrix must be square");
        RingMatrix { entries: rows }
    }

    pub fn identity_like(n: usize, proto: &R) -> Self {
        let rows = (0..n)
            .map(|i| (0..n).map(|j| if i == j { proto.one_like() } else { proto.zero_like() }).collect())
            .collect();
        RingMatrix { entries: rows }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        &self.entries[i][j]
    }

    pub fn entries(&self) -> &[Vec<R>] {
        &self.entries
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> RingMatrix<S> {
        RingMatrix { entries: self.entries.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        RingMatrix {
            entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect()).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.size();
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let mut acc = self.entries[i][0].mul(&o.entries[0][j]);
                        for l in 1..n {
                            acc = acc.add(&self.entries[i][l].mul(&o.entries[l][j]));
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        RingMatrix { entries: rows }
    }

    pub fn add(&self, o: &Self) -> Self {
        let rows = self
            .entries
            .iter()
            .zip(&o.entries)
            .map(|(a, b)| a.iter().zip(b).map(|(x, y)| x.add(y)).collect())
            .collect();
        RingMatrix { entries: rows }
    }

    pub fn is_identity(&self) -> bool {
        let one = self.entries[0][0].one_like();
        self.entries.iter().enumerate().all(|(i, r)| {
            r.iter().enumerate().all(|(j, x)| if i == j { *x == one } else { x.is_zero() })
        })
    }

    /// First nonzero entry strictly below the diagonal.
    fn below_diagonal(&self) -> Option<(usize, usize)> {
        let n = self.size();
        (0..n).flat_map(|i| (0..i).map(move |j| (i, j))).find(|&(i, j)| !self.entries[i][j].is_zero())
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.below_diagonal().is_none()
    }

    pub fn is_lower_triangular(&self) -> bool {
        self.transpose().is_upper_triangular()
    }

    fn to_opposite(&self) -> RingMatrix<Opposite<R>> {
        self.map(|x| Opposite(x.clone()))
    }
}

impl<R: Ring> RingMatrix<Opposite<R>> {
    fn to_base(&self) -> RingMatrix<R> {
        self.map(|x| x.0.clone())
    }
}

/// Inverse of an upper-triangular matrix by back substitution:
/// `τ_ll = σ_ll⁻¹` and `τ_ln = −σ_ll⁻¹ Σ_{l<m≤n} σ_lm τ_mn`. The result lies in
/// the subring generated by the entries and the inverted diagonal.
pub fn triangular_inverse<R: Ring>(sigma: &RingMatrix<R>) -> Result<RingMatrix<R>, MatrixError> {
    if let Some((i, j)) = sigma.below_diagonal() {
        return Err(MatrixError::NotTriangular(i, j));
    }
    let n = sigma.size();
    let proto = sigma.get(0, 0);
    let mut diag_inv = Vec::with_capacity(n);
    for l in 0..n {
        diag_inv.push(sigma.get(l, l).inverse().ok_or(MatrixError::SingularDiagonal(l))?);
    }
    let mut tau = RingMatrix::identity_like(n, proto);
    for l in (0..n).rev() {
        tau.entries[l][l] = diag_inv[l].clone();
        for col in l + 1..n {
            let mut acc = proto.zero_like();
            for m in l + 1..=col {
                acc = acc.add(&sigma.get(l, m).mul(&tau.entries[m][col]));
            }
            tau.entries[l][col] = diag_inv[l].mul(&acc).neg();
        }
    }
    Ok(tau)
}

/// Two-sided inverse: triangular shapes are inverted exactly (lower ones via
/// the opposite ring, since `(σ τ)ᵀ = τᵀ ·op σᵀ`); anything else falls back to
/// the carrier's bounded search when `search_bound` is given.
pub fn invert<R: Ring>(m: &RingMatrix<R>, search_bound: Option<usize>) -> Result<RingMatrix<R>, MatrixError> {
    if m.is_upper_triangular() {
        return triangular_inverse(m);
    }
    if m.is_lower_triangular() {
        let up = m.transpose().to_opposite();
        return Ok(triangular_inverse(&up)?.to_base().transpose());
    }
    match search_bound {
        Some(b) => R::bounded_inverse(m, b).ok_or(MatrixError::NotInvertible(Some(b))),
        None => Err(MatrixError::NotInvertible(None)),
    }
}

/// Inverse computed in `Mₙ(P^op)` for a matrix stored with entries in `P`.
pub fn invert_opposite<R: Ring>(m: &RingMatrix<R>, search_bound: Option<usize>) -> Result<RingMatrix<R>, MatrixError> {
    Ok(invert(&m.to_opposite(), search_bound)?.to_base())
}

/// `σ̂ = (σ⁻¹)ᵀ`, an element of `GLₙ(P^op)` (stored entrywise in `P`).
pub fn contragredient<R: Ring>(sigma: &RingMatrix<R>, search_bound: Option<usize>) -> Result<RingMatrix<R>, MatrixError> {
    Ok(invert(sigma, search_bound)?.transpose())
}

/// A window `σ_d`, `d ∈ [−D, D]`, of a strong orbit; every `σ_d` lies in
/// `GLₙ(P)`.
#[derive(Clone, Debug)]
pub struct StrongOrbit<R> {
    pub center: RingMatrix<R>,
    pub window: BTreeMap<i64, RingMatrix<R>>,
}

impl<R: Ring> StrongOrbit<R> {
    pub fn get(&self, d: i64) -> Option<&RingMatrix<R>> {
        self.window.get(&d)
    }

    pub fn radius(&self) -> i64 {
        self.window.keys().next_back().copied().unwrap_or(0)
    }
}

/// Builds `σ_{d+1} = (σ_d⁻¹)ᵀ` forwards and `σ_{d−1} = (σ_dᵀ)⁻¹` backwards,
/// then re-verifies both identities on the whole window.
pub fn strong_orbit<R: Ring>(
    sigma: &RingMatrix<R>,
    radius: i64,
    search_bound: Option<usize>,
) -> Result<StrongOrbit<R>, MatrixError> {
    let brk = |d: i64, e: MatrixError| MatrixError::OrbitBreak(d, e.to_string());
    let mut window = BTreeMap::new();
    window.insert(0, sigma.clone());
    for d in 0..radius {
        let inv = invert(&window[&d], search_bound).map_err(|e| brk(d, e))?;
        window.insert(d + 1, inv.transpose());
    }
    for d in (-radius + 1..=0).rev() {
        let prev = invert(&window[&d].transpose(), search_bound).map_err(|e| brk(d - 1, e))?;
        window.insert(d - 1, prev);
    }
    // The window endpoints must themselves be invertible in their rings.
    for d in [-radius, radius] {
        invert(&window[&d], search_bound).map_err(|e| brk(d, e))?;
    }
    for d in -radius..radius {
        let (cur, next) = (&window[&d], &window[&(d + 1)]);
        if !cur.mul(&next.transpose()).is_identity() || !next.transpose().mul(cur).is_identity() {
            return Err(brk(d, MatrixError::NotInvertible(None)));
        }
    }
    Ok(StrongOrbit { center: sigma.clone(), window })
}

/// Outcome of [`is_quantum_automorphism`].
#[derive(Clone, Debug, PartialEq)]
pub struct QuantumAutomorphismReport {
    pub passed: bool,
    pub pairs_checked: usize,
    pub witnesses: Vec<String>,
}

/// Tests `σ_ij(1) = δ_ij`, `σ_ij(ab) = Σ_l σ_il(a) σ_lj(b)` for monomials
/// `a = t^p`, `b = t^q` with `p, q ≥ 2` and `p + q ≤ N` (pairs involving `1`
/// follow from the unit condition), and the strong orbit of radius
/// `orbit_radius`.
pub fn is_quantum_automorphism(
    sigma: &RingMatrix<TruncatedOperator>,
    degree: i64,
    orbit_radius: i64,
) -> QuantumAutomorphismReport {
    let n = sigma.size();
    let mut witnesses = Vec::new();
    let mut pairs = 0;
    'outer: for p in cusp_exponents(degree).filter(|e| *e >= 2) {
        for q in cusp_exponents(degree - p).filter(|e| *e >= 2) {
            pairs += 1;
            let (a, b) = (LaurentPoly::t_pow(p), LaurentPoly::t_pow(q));
            for i in 0..n {
                for j in 0..n {
                    let lhs = sigma.get(i, j).apply(&(&a * &b));
                    let mut rhs = LaurentPoly::zero();
                    for l in 0..n {
                        rhs = &rhs + &(&sigma.get(i, l).apply(&a) * &sigma.get(l, j).apply(&b));
                    }
                    if lhs != rhs {
                        witnesses.push(format!("multiplicativity fails at (i,j)=({},{}) for (t^{p}, t^{q})", i + 1, j + 1));
                        break 'outer;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            let img = sigma.get(i, j).apply(&LaurentPoly::one());
            let want = if i == j { LaurentPoly::one() } else { LaurentPoly::zero() };
            if img != want {
                witnesses.push(format!("unit condition fails at (i,j)=({},{}): image of 1 is {img}", i + 1, j + 1));
            }
        }
    }
    if let Err(e) = strong_orbit(sigma, orbit_radius, None) {
        witnesses.push(e.to_string());
    }
    QuantumAutomorphismReport { passed: witnesses.is_empty(), pairs_checked: pairs, witnesses }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{RationalFunction, Scalar};
    use crate::rewrite::NCPoly;

    fn rf(p: LaurentPoly) -> RationalFunction {
        RationalFunction::from_laurent(p)
    }

    #[test]
    fn identity_inverts_to_identity() {
        let id = RingMatrix::identity_like(3, &RationalFunction::one());
        assert_eq!(triangular_inverse(&id).unwrap(), id);
        assert_eq!(contragredient(&id, None).unwrap(), id);
    }

    #[test]
    fn two_by_two_recursion() {
        // [[a, b], [0, d]]⁻¹ = [[a⁻¹, −a⁻¹ b d⁻¹], [0, d⁻¹]] over the free algebra
        // with a = 2, d = 3 scalars and b a generator.
        let a = NCPoly::constant(Scalar::from_int(2));
        let d = NCPoly::constant(Scalar::from_int(3));
        let b = NCPoly::sym(0);
        let m = RingMatrix::from_rows(vec![vec![a, b.clone()], vec![NCPoly::zero(), d]]);
        let inv = triangular_inverse(&m).unwrap();
        assert_eq!(inv.get(0, 1), &b.scale(&Scalar::ratio(-1, 6)));
        assert!(m.mul(&inv).is_identity() && inv.mul(&m).is_identity());
    }

    #[test]
    fn diagonal_contragredient() {
        let alpha = Scalar::from_int(2);
        let beta = Scalar::from_int(-1);
        let t = LaurentPoly::t_pow(1);
        let m = RingMatrix::from_rows(vec![
            vec![rf(t.scale(&alpha)), RationalFunction::zero()],
            vec![RationalFunction::zero(), rf(t.scale(&(&alpha * &beta)))],
        ]);
        let hat = contragredient(&m, None).unwrap();
        assert_eq!(hat.get(0, 0), &rf(LaurentPoly::t_pow(-1).scale(&Scalar::ratio(1, 2))));
        assert_eq!(hat.get(1, 1), &rf(LaurentPoly::t_pow(-1).scale(&Scalar::ratio(-1, 2))));
    }

    #[test]
    fn free_algebra_unipotent_contragredient() {
        let x = NCPoly::sym(0);
        let m = RingMatrix::from_rows(vec![vec![NCPoly::one(), x.clone()], vec![NCPoly::zero(), NCPoly::one()]]);
        let hat = contragredient(&m, None).unwrap();
        assert_eq!(hat, RingMatrix::from_rows(vec![vec![NCPoly::one(), NCPoly::zero()], vec![-&x, NCPoly::one()]]));
    }

    #[test]
    fn rejects_non_triangular() {
        let x = NCPoly::sym(0);
        let m = RingMatrix::from_rows(vec![vec![NCPoly::one(), NCPoly::zero()], vec![x, NCPoly::one()]]);
        assert_eq!(triangular_inverse(&m), Err(MatrixError::NotTriangular(1, 0)));
    }

    #[test]
    fn singular_diagonal_named() {
        let m = RingMatrix::from_rows(vec![
            vec![LaurentPoly::one(), LaurentPoly::zero()],
            vec![LaurentPoly::zero(), &LaurentPoly::one() + &LaurentPoly::t_pow(1)],
        ]);
        assert_eq!(triangular_inverse(&m), Err(MatrixError::SingularDiagonal(1)));
    }

    #[test]
    fn identity_orbit_is_constant() {
        let id = RingMatrix::identity_like(2, &LaurentPoly::one());
        let orbit = strong_orbit(&id, 3, None).unwrap();
        assert!(orbit.window.values().all(|m| *m == id));
        assert_eq!(orbit.window.len(), 7);
    }

    #[test]
    fn transposed_product_has_no_small_inverse() {
        // (στ)ᵀ for σ = [[1, x], [0, 1]], τ = [[1, 0], [y, 1]].
        let (x, y) = (NCPoly::sym(0), NCPoly::sym(1));
        let m = RingMatrix::from_rows(vec![vec![&NCPoly::one() + &(&x * &y), y.clone()], vec![x, NCPoly::one()]]);
        match strong_orbit(&m, 1, Some(4)) {
            Err(MatrixError::OrbitBreak(0, _)) => {}
            other => panic!("unexpected {other:?}"),
        }
    }
}
