//! `classify` input: a matrix in the `ncmatrix` JSON format plus an optional
//! `"params"` block `{"alpha": …, "beta": …, "gamma": …}`. Scalars are strings
//! such as `"1/2"` or `"1+2i"`, or `{"re": …, "im": …}` objects. Missing
//! parameters are read off the diagonal.

use cuspalg::classify::{n2_matrix, n3_matrix};
use cuspalg::exactalg::{LaurentPoly, Scalar};
use cuspalg::ncmatrix::{DecodedMatrix, MatrixJson, RingMatrix};
use serde_json::Value;

use crate::error::CliError;

pub struct ClassifyInput {
    pub alpha: Scalar,
    pub beta: Scalar,
    pub gamma: Option<Scalar>,
    /// `z` for size 2; `x, y, z` for size 3.
    pub upper: Vec<LaurentPoly>,
    pub matrix: RingMatrix<LaurentPoly>,
}

fn bad(msg: impl Into<String>) -> CliError {
    CliError::Input(msg.into())
}

fn scalar(v: &Value) -> Result<Scalar, CliError> {
    match v {
        Value::String(s) => s.parse().map_err(|e| bad(format!("scalar {s:?}: {e}"))),
        Value::Number(n) => n.to_string().parse().map_err(|e| bad(format!("scalar {n}: {e}"))),
        other => serde_json::from_value(other.clone()).map_err(|e| bad(format!("scalar {other}: {e}"))),
    }
}

fn laurent_matrix(m: &MatrixJson) -> Result<RingMatrix<LaurentPoly>, CliError> {
    match m.decode().map_err(|e| bad(e.to_string()))? {
        DecodedMatrix::Laurent(l) => Ok(l),
        DecodedMatrix::Ratfunc(r) => {
            let rows: Option<Vec<Vec<LaurentPoly>>> =
                r.entries().iter().map(|row| row.iter().map(|f| f.to_laurent()).collect()).collect();
            rows.map(RingMatrix::from_rows).ok_or_else(|| bad("entries must be Laurent polynomials"))
        }
        DecodedMatrix::Freealg(..) => Err(bad("classification needs a Laurent or rational-function matrix")),
    }
}

/// `c` with `p = c·t`.
fn linear_coeff(p: &LaurentPoly, what: &str) -> Result<Scalar, CliError> {
    let c = p.coeff(1);
    if p.len() != 1 || c == Scalar::from_int(0) {
        return Err(bad(format!("{what} = {p} is not of the form c·t")));
    }
    Ok(c)
}

pub fn parse(text: &str, n: usize) -> Result<ClassifyInput, CliError> {
    let raw: Value = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
    let params = raw.get("params").cloned().unwrap_or(Value::Null);
    let m: MatrixJson = serde_json::from_value(raw).map_err(|e| bad(e.to_string()))?;
    if m.n != n {
        return Err(bad(format!("--n {n} but the matrix has n = {}", m.n)));
    }
    let matrix = laurent_matrix(&m)?;
    let param = |key: &str| params.get(key).map(scalar).transpose();
    let diag: Vec<Scalar> =
        (0..n).map(|i| linear_coeff(matrix.get(i, i), &format!("T{0}{0}", i + 1))).collect::<Result<_, _>>()?;
    let ratio = |k: usize| &diag[k] / &diag[k - 1];
    let alpha = param("alpha")?.unwrap_or_else(|| diag[0].clone());
    let beta = param("beta")?.unwrap_or_else(|| ratio(1));
    let (gamma, upper, expected) = if n == 2 {
        let z = matrix.get(0, 1).clone();
        let expected = n2_matrix(&alpha, &beta, &z);
        (None, vec![z], expected)
    } else {
        let gamma = param("gamma")?.unwrap_or_else(|| ratio(2));
        let (x, y, z) = (matrix.get(0, 1).clone(), matrix.get(1, 2).clone(), matrix.get(0, 2).clone());
        let expected = n3_matrix(&alpha, &beta, &gamma, &x, &y, &z);
        (Some(gamma), vec![x, y, z], expected)
    };
    if expected != matrix {
        return Err(bad("matrix is not upper triangular with the diagonal given by params"));
    }
    Ok(ClassifyInput { alpha, beta, gamma, upper, matrix })
}
