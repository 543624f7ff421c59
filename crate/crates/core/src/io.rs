//! The JSON matrix file: `{"rows": n, "cols": m, "entries": [[expr, ..], ..]}`.

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::formula::{evaluate, EvalAssignment, RatFormula};
use crate::matrix::NcMatrix;
use crate::scalar::{Codec, QRing};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixFile {
    pub fn from_json(s: &str) -> Result<Self> {
        let f: MatrixFile = serde_json::from_str(s).map_err(|e| Error::invalid(format!("bad matrix file: {e}")))?;
        if f.entries.len() != f.rows || f.entries.iter().any(|r| r.len() != f.cols) {
            return Err(Error::Shape(format!("declared {}x{}, entries do not match", f.rows, f.cols)));
        }
        Ok(f)
    }

    /// Entries parsed as formulas.
    pub fn formulas(&self) -> Result<NcMatrix<RatFormula>> {
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| RatFormula::parse(e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        NcMatrix::from_nested(rows)
    }

    /// Entries as exact rationals when every entry is a constant expression.
    pub fn rationals(&self) -> Result<Option<NcMatrix<BigRational>>> {
        let f = self.formulas()?;
        if f.entries().iter().any(|e| !e.vars().is_empty()) {
            return Ok(None);
        }
        let none = EvalAssignment::new();
        f.try_map(|e| evaluate(e, &none, &QRing)).map(Some)
    }

    /// Serialize with the ring's canonical scalar form; non-string encodings
    /// are embedded as compact JSON text.
    pub fn from_matrix<R: Codec>(ring: &R, m: &NcMatrix<R::Elem>) -> Self {
        let entries = (0..m.nrows())
            .map(|r| {
                (0..m.ncols())
                    .map(|c| match ring.encode(m.at(r, c)) {
                        serde_json::Value::String(s) => s,
                        v => v.to_string(),
                    })
                    .collect()
            })
            .collect();
        MatrixFile { rows: m.nrows(), cols: m.ncols(), entries }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix file serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_constants() {
        let f = MatrixFile::from_json(r#"{"rows":2,"cols":2,"entries":[["1","2/3"],["-1","4"]]}"#).unwrap();
        let m = f.rationals().unwrap().unwrap();
        assert_eq!(MatrixFile::from_matrix(&QRing, &m), f);
    }

    #[test]
    fn symbolic_entries_are_not_rational() {
        let f = MatrixFile::from_json(r#"{"rows":1,"cols":2,"entries":[["x","1"]]}"#).unwrap();
        assert!(f.rationals().unwrap().is_none());
        assert_eq!(f.formulas().unwrap().ncols(), 2);
    }

    #[test]
    fn shape_is_checked() {
        assert!(MatrixFile::from_json(r#"{"rows":2,"cols":1,"entries":[["1"]]}"#).is_err());
    }
}
