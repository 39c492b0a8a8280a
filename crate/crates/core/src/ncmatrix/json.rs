//! JSON encoding of matrices:
//! `{"n": 2, "carrier": "laurent", "entries": [[…], […]]}`.
//!
//! Laurent entries are objects from exponent strings to scalars, rational
//! functions are `{"num": …, "den": …}`, and free-algebra entries are strings
//! in the presentation syntax over the symbols listed in `"alphabet"`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::RingMatrix;
use crate::exactalg::{LaurentPoly, RationalFunction};
use crate::rewrite::{parse_poly, Alphabet, NCPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Carrier {
    Ratfunc,
    Laurent,
    Freealg,
}

/// The wire form, before entries are decoded.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub carrier: Carrier,
    pub entries: Vec<Vec<Value>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphabet: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum DecodedMatrix {
    Ratfunc(RingMatrix<RationalFunction>),
    Laurent(RingMatrix<LaurentPoly>),
    Freealg(Alphabet, RingMatrix<NCPoly>),
}

#[derive(Debug, thiserror::Error)]
pub enum MatrixJsonError {
    #[error("malformed matrix JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("matrix shape does not match n = {0}")]
    Shape(usize),
    #[error("entry ({0}, {1}): {2}")]
    Entry(usize, usize, String),
    #[error("free-algebra matrices need an \"alphabet\"")]
    MissingAlphabet,
}

fn decode_entries<R>(
    m: &MatrixJson,
    f: impl Fn(&Value) -> Result<R, String>,
) -> Result<Vec<Vec<R>>, MatrixJsonError> {
    if m.n == 0 || m.entries.len() != m.n || m.entries.iter().any(|r| r.len() != m.n) {
        return Err(MatrixJsonError::Shape(m.n));
    }
    m.entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter().enumerate().map(|(j, v)| f(v).map_err(|e| MatrixJsonError::Entry(i + 1, j + 1, e))).collect()
        })
        .collect()
}

impl MatrixJson {
    pub fn parse(text: &str) -> Result<Self, MatrixJsonError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn decode(&self) -> Result<DecodedMatrix, MatrixJsonError> {
        let serde_entry = |v: &Value| serde_json::from_value(v.clone()).map_err(|e| e.to_string());
        match self.carrier {
            Carrier::Laurent => Ok(DecodedMatrix::Laurent(RingMatrix::from_rows(decode_entries(self, serde_entry)?))),
            Carrier::Ratfunc => {
                // Plain Laurent objects are accepted as rational functions too.
                let entry = |v: &Value| {
                    serde_json::from_value::<RationalFunction>(v.clone())
                        .or_else(|_| serde_json::from_value::<LaurentPoly>(v.clone()).map(RationalFunction::from_laurent))
                        .map_err(|e| e.to_string())
                };
                Ok(DecodedMatrix::Ratfunc(RingMatrix::from_rows(decode_entries(self, entry)?)))
            }
            Carrier::Freealg => {
                let names = self.alphabet.as_ref().ok_or(MatrixJsonError::MissingAlphabet)?;
                let alphabet = Alphabet::new(names);
                let entry = |v: &Value| {
                    let s = v.as_str().ok_or_else(|| "expected a string".to_string())?;
                    parse_poly(&alphabet, s).map_err(|e| e.to_string())
                };
                let rows = decode_entries(self, entry)?;
                Ok(DecodedMatrix::Freealg(alphabet, RingMatrix::from_rows(rows)))
            }
        }
    }

    /// Decodes Laurent or rational-function matrices as rational functions.
    pub fn to_ratfunc(&self) -> Result<RingMatrix<RationalFunction>, MatrixJsonError> {
        match self.decode()? {
            DecodedMatrix::Ratfunc(m) => Ok(m),
            DecodedMatrix::Laurent(m) => Ok(m.map(|p| RationalFunction::from_laurent(p.clone()))),
            DecodedMatrix::Freealg(..) => Err(MatrixJsonError::Entry(1, 1, "expected a commutative carrier".into())),
        }
    }

    pub fn from_laurent(m: &RingMatrix<LaurentPoly>) -> Self {
        MatrixJson {
            n: m.size(),
            carrier: Carrier::Laurent,
            entries: m.entries().iter().map(|r| r.iter().map(|p| serde_json::to_value(p).expect("serializable")).collect()).collect(),
            alphabet: None,
        }
    }

    pub fn from_ratfunc(m: &RingMatrix<RationalFunction>) -> Self {
        MatrixJson {
            n: m.size(),
            carrier: Carrier::Ratfunc,
            entries: m.entries().iter().map(|r| r.iter().map(|p| serde_json::to_value(p).expect("serializable")).collect()).collect(),
            alphabet: None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cusp::t_matrix;

    #[test]
    fn laurent_round_trip() {
        let t = t_matrix();
        let text = serde_json::to_string(&MatrixJson::from_laurent(&t)).unwrap();
        match MatrixJson::parse(&text).unwrap().decode().unwrap() {
            DecodedMatrix::Laurent(m) => assert_eq!(m, t),
            other => panic!("wrong carrier {other:?}"),
        }
    }

    #[test]
    fn free_algebra_entries() {
        let text = r#"{"n":2,"carrier":"freealg","alphabet":["x","y"],"entries":[["x","y"],["0","x y - y x"]]}"#;
        let DecodedMatrix::Freealg(al, m) = MatrixJson::parse(text).unwrap().decode().unwrap() else { panic!() };
        assert_eq!(m.get(1, 1).len(), 2);
        assert_eq!(al.len(), 2);
    }

    #[test]
    fn shape_errors() {
        let text = r#"{"n":2,"carrier":"laurent","entries":[[{}]]}"#;
        assert!(matches!(MatrixJson::parse(text).unwrap().decode(), Err(MatrixJsonError::Shape(2))));
        assert!(MatrixJson::parse("{").is_err());
    }
}
