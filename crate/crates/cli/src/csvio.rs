//! CSV tables: a header row, then one row per sample, `\n` line ends.
//!
//! Floats are written as the shortest decimal that parses back to the same
//! `f64`, so reading a file recovers every value bit for bit.

use std::path::Path;

use wigwell_core::WignerField;

use crate::{fmt_f64, CliError, Result};

fn csv_error(path: &Path, err: csv::Error) -> CliError {
    match err.into_kind() {
        csv::ErrorKind::Io(source) => CliError::io(path, source),
        other => CliError::Format {
            path: path.to_path_buf(),
            message: format!("{other:?}"),
        },
    }
}

fn writer(path: &Path) -> Result<csv::Writer<std::fs::File>> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_path(path)
        .map_err(|e| csv_error(path, e))
}

/// Table with one column per header; all columns must have equal length.
pub fn write_columns(path: &Path, headers: &[&str], columns: &[&[f64]]) -> Result<()> {
    assert_eq!(headers.len(), columns.len(), "one header per column");
    let rows = columns.first().map_or(0, |c| c.len());
    assert!(columns.iter().all(|c| c.len() == rows), "ragged columns");
    let mut w = writer(path)?;
    w.write_record(headers).map_err(|e| csv_error(path, e))?;
    for i in 0..rows {
        w.write_record(columns.iter().map(|c| fmt_f64(c[i])))
            .map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

/// Rows of mixed text cells under a header.
pub fn write_records(path: &Path, headers: &[&str], rows: &[Vec<String>]) -> Result<()> {
    let mut w = writer(path)?;
    w.write_record(headers).map_err(|e| csv_error(path, e))?;
    for row in rows {
        w.write_record(row).map_err(|e| csv_error(path, e))?;
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

/// Long format `x,p,W`, row-major over `x` then `p`.
pub fn write_wigner(path: &Path, field: &WignerField) -> Result<()> {
    let grid = field.grid();
    let mut w = writer(path)?;
    w.write_record(["x", "p", "W"])
        .map_err(|e| csv_error(path, e))?;
    for (i, x) in grid.x.values().enumerate() {
        let xs = fmt_f64(x);
        for (k, p) in grid.p.values().enumerate() {
            w.write_record([xs.as_str(), &fmt_f64(p), &fmt_f64(field.value(i, k))])
                .map_err(|e| csv_error(path, e))?;
        }
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

/// Numeric table: headers and rows of `f64`.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let j = self.headers.iter().position(|h| h == name)?;
        Some(self.rows.iter().map(|r| r[j]).collect())
    }
}

pub fn read_table(path: &Path) -> Result<Table> {
    let mut r = csv::Reader::from_path(path).map_err(|e| csv_error(path, e))?;
    let headers = r
        .headers()
        .map_err(|e| csv_error(path, e))?
        .iter()
        .map(str::to_string)
        .collect();
    let mut rows = Vec::new();
    for record in r.records() {
        let record = record.map_err(|e| csv_error(path, e))?;
        let row = record
            .iter()
            .map(|cell| {
                cell.parse::<f64>().map_err(|_| CliError::Format {
                    path: path.to_path_buf(),
                    message: format!("not a number: `{cell}`"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Ok(Table { headers, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use wigwell_core::{Method, PhaseSpaceGrid};

    #[test]
    fn matrix_round_trip_is_bit_exact() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("m.csv");
        let grid = PhaseSpaceGrid::new(-0.1, 0.3, 2, -1.0 / 3.0, 2.0, 2).unwrap();
        let values = vec![1.0 / 3.0, -2.5e-300, std::f64::consts::PI, 0.1 + 0.2];
        let field = WignerField::new(grid, values.clone(), 0.0, Method::FourierPath, "").unwrap();
        write_wigner(&path, &field).unwrap();
        let table = read_table(&path).unwrap();
        assert_eq!(table.headers, ["x", "p", "W"]);
        let w = table.column("W").unwrap();
        assert!(w
            .iter()
            .zip(&values)
            .all(|(a, b)| a.to_bits() == b.to_bits()));
        let p = table.column("p").unwrap();
        assert_eq!(p[1].to_bits(), grid.p.value(1).to_bits());
        let text = std::fs::read_to_string(&path).unwrap();
        assert!(text.starts_with("x,p,W\n") && !text.contains('\r'));
    }

    #[test]
    fn columns_with_headers() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("marginal.csv");
        write_columns(&path, &["p", "Ptilde"], &[&[0.0, 0.5], &[1e-17, 2.0]]).unwrap();
        assert_eq!(
            std::fs::read_to_string(&path).unwrap(),
            "p,Ptilde\n0.0,1e-17\n0.5,2.0\n"
        );
    }

    #[test]
    fn unwritable_path_is_io_error() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("missing").join("x.csv");
        assert!(matches!(
            write_columns(&path, &["a"], &[&[1.0]]),
            Err(CliError::Io { .. })
        ));
    }
}
