//! Exact Gaussian elimination over `ℚ(i)` on sparse rows.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactalg::Scalar;

pub type SparseRow = BTreeMap<usize, Scalar>;

/// Row-reduces `rows` in place and returns the pivot rows, each keyed by its
/// pivot column with the pivot normalized to one.
fn echelon(rows: impl IntoIterator<Item = SparseRow>) -> BTreeMap<usize, SparseRow> {
    let mut pivots: BTreeMap<usize, SparseRow> = BTreeMap::new();
    for mut row in rows {
        while let Some((&col, _)) = row.iter().next() {
            match pivots.get(&col) {
                Some(p) => {
                    let f = row[&col].clone();
                    for (c, v) in p {
                        let e = row.entry(*c).or_insert_with(Scalar::zero);
                        *e -= &(&f * v);
                        if e.is_zero() {
                            row.remove(c);
                        }
                    }
                }
                None => {
                    let inv = row[&col].inv().expect("nonzero pivot");
                    for v in row.values_mut() {
                        *v = &*v * &inv;
                    }
                    pivots.insert(col, row);
                    break;
                }
            }
        }
    }
    pivots
}

pub fn rank(rows: impl IntoIterator<Item = SparseRow>) -> usize {
    echelon(rows).len()
}

/// Rank of a dense matrix given as rows.
pub fn dense_rank(rows: &[Vec<Scalar>]) -> usize {
    rank(rows.iter().map(|r| {
        r.iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| (i, v.clone()))
            .collect()
    }))
}

/// Solves `A x = b` for sparse equations `(row, rhs)` in `nvars` unknowns.
/// Free variables are set to zero. Returns `None` when inconsistent.
pub fn solve(equations: Vec<(SparseRow, Scalar)>, nvars: usize) -> Option<Vec<Scalar>> {
    let rhs_col = nvars;
    let rows = equations.into_iter().map(|(mut r, b)| {
        if !b.is_zero() {
            r.insert(rhs_col, b);
        }
        r
    });
    let pivots = echelon(rows);
    if pivots.contains_key(&rhs_col) {
        return None;
    }
    // Back substitution from the last pivot column.
    let mut x = vec![Scalar::zero(); nvars];
    for (col, row) in pivots.iter().rev() {
        let mut v = row.get(&rhs_col).cloned().unwrap_or_else(Scalar::zero);
        for (c, a) in row.range(col + 1..rhs_col) {
            v -= &(a * &x[*c]);
        }
        x[*col] = v;
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn row(v: &[(usize, i64)]) -> SparseRow {
        v.iter().map(|(i, x)| (*i, s(*x))).collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        let rows = vec![vec![s(1), s(2)], vec![s(2), s(4)], vec![s(0), s(1)]];
        assert_eq!(dense_rank(&rows), 2);
    }

    #[test]
    fn solves_two_by_two() {
        // x + y = 3, x - y = 1
        let x = solve(vec![(row(&[(0, 1), (1, 1)]), s(3)), (row(&[(0, 1), (1, -1)]), s(1))], 2).unwrap();
        assert_eq!(x, vec![s(2), s(1)]);
    }

    #[test]
    fn detects_inconsistency() {
        assert!(solve(vec![(row(&[(0, 1)]), s(1)), (row(&[(0, 2)]), s(3))], 1).is_none());
    }
}
