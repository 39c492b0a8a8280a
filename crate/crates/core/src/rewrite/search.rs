//! Graded linear search for two-sided inverses in a free algebra.
//!
//! A negative answer only means that no inverse with all words of length at
//! most the bound exists; it is not a proof of non-invertibility.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{NCPoly, Sym, Word};
use crate::exactalg::Scalar;
use crate::linalg::{self, SparseRow};

fn words_up_to(nsyms: usize, bound: usize) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    let mut layer = vec![Vec::new()];
    for _ in 0..bound {
        let mut next = Vec::new();
        for w in &layer {
            for s in 0..nsyms {
                let mut nw: Word = w.clone();
                nw.push(s as Sym);
                next.push(nw);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Searches for `N` with `M N = N M = 1` where every entry of `N` uses words of
/// length at most `bound` over `nsyms` free generators. `m` is square.
#[allow(clippy::needless_range_loop)]
pub fn bounded_matrix_inverse(m: &[Vec<NCPoly>], nsyms: usize, bound: usize) -> Option<Vec<Vec<NCPoly>>> {
    let n = m.len();
    let basis = words_up_to(nsyms, bound);
    let nb = basis.len();
    let var = |k: usize, j: usize, w: usize| (k * n + j) * nb + w;
    let nvars = n * n * nb;

    // Equation key: (side, row, col, word of the product entry).
    let mut eqs: HashMap<(u8, usize, usize, Word), SparseRow> = HashMap::new();
    for i in 0..n {
        for k in 0..n {
            for (u, a) in m[i][k].terms() {
                for j in 0..n {
                    for (wi, w) in basis.iter().enumerate() {
                        // (M N)_{ij} gets M_ik N_kj; (N M)_{ji}... handled below.
                        let mut prod = u.clone();
                        prod.extend_from_slice(w);
                        let row = eqs.entry((0, i, j, prod)).or_default();
                        let e = row.entry(var(k, j, wi)).or_insert_with(Scalar::zero);
                        *e += a;
                        // (N M)_{jk} gets N_ji M_ik.
                        let mut prod = w.clone();
                        prod.extend_from_slice(u);
                        let row = eqs.entry((1, j, k, prod)).or_default();
                        let e = row.entry(var(j, i, wi)).or_insert_with(Scalar::zero);
                        *e += a;
                    }
                }
            }
        }
    }
    let mut system: Vec<(SparseRow, Scalar)> = Vec::new();
    for side in 0..2u8 {
        for i in 0..n {
            // The identity entries must appear even if no product reaches them.
            eqs.entry((side, i, i, Vec::new())).or_default();
        }
    }
    let mut keys: Vec<_> = eqs.keys().cloned().collect();
    keys.sort();
    for key in keys {
        let mut row = eqs.remove(&key).expect("present");
        row.retain(|_, v| !v.is_zero());
        let rhs = if key.1 == key.2 && key.3.is_empty() { Scalar::one() } else { Scalar::zero() };
        system.push((row, rhs));
    }
    let x = linalg::solve(system, nvars)?;
    let mut out = vec![vec![NCPoly::zero(); n]; n];
    for k in 0..n {
        for j in 0..n {
            for (wi, w) in basis.iter().enumerate() {
                out[k][j].add_term(w.clone(), &x[var(k, j, wi)]);
            }
        }
    }
    Some(out)
}

/// Scalar case of [`bounded_matrix_inverse`].
pub fn bounded_inverse_search(p: &NCPoly, nsyms: usize, bound: usize) -> Option<NCPoly> {
    bounded_matrix_inverse(&[vec![p.clone()]], nsyms, bound).map(|mut m| m.remove(0).remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_is_its_own_inverse() {
        assert_eq!(bounded_inverse_search(&NCPoly::one(), 1, 3), Some(NCPoly::one()));
    }

    #[test]
    fn one_plus_x_has_no_polynomial_inverse() {
        let p = &NCPoly::one() + &NCPoly::sym(0);
        assert_eq!(bounded_inverse_search(&p, 1, 3), None);
    }

    #[test]
    fn unipotent_matrix() {
        let x = NCPoly::sym(0);
        let m = vec![vec![NCPoly::one(), x.clone()], vec![NCPoly::zero(), NCPoly::one()]];
        let inv = bounded_matrix_inverse(&m, 2, 2).unwrap();
        assert_eq!(inv[0][1], -&x);
        assert_eq!(inv[0][0], NCPoly::one());
        assert!(inv[1][0].is_zero());
    }
}
