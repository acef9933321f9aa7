use std::fs;
use std::io::Write;
use std::path::Path;

use serde::Serialize;
use tempfile::NamedTempFile;

use super::SweepTable;
use crate::error::Error;
use crate::fmt::sig;
use crate::verify::LemmaReport;
use crate::Result;

pub const CSV_HEADER: &str = "ell1,ell2,variant,N,theta,H,observed,predicted,ratio,in_range,wall_ms";

/// CSV text: header, then one line per row, reals at 12 significant digits.
pub fn table_to_csv(table: &SweepTable) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in &table.rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{},{}\n",
            r.ell1,
            r.ell2,
            r.variant,
            r.n,
            sig(r.theta, 12),
            r.h,
            sig(r.observed, 12),
            sig(r.predicted, 12),
            sig(r.ratio, 12),
            r.in_range,
            r.wall_ms
        ));
    }
    out
}

/// Writes through a temporary file in the destination directory, then renames.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = NamedTempFile::new_in(dir).map_err(|e| Error::io(path, e))?;
    tmp.write_all(bytes).map_err(|e| Error::io(path, e))?;
    tmp.persist(path).map_err(|e| Error::io(path, e.error))?;
    Ok(())
}

fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value).map_err(|e| Error::Serialization(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

pub fn write_table_csv(table: &SweepTable, path: &Path) -> Result<()> {
    write_atomic(path, table_to_csv(table).as_bytes())
}

pub fn write_table_json(table: &SweepTable, path: &Path) -> Result<()> {
    write_atomic(path, to_json(table)?.as_bytes())
}

pub fn write_reports_json(reports: &[LemmaReport], path: &Path) -> Result<()> {
    write_atomic(path, to_json(reports)?.as_bytes())
}

pub fn read_table_json(path: &Path) -> Result<SweepTable> {
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| Error::Serialization(format!("{}: {e}", path.display())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{SweepMeta, SweepRow, SweepSpec};
    use crate::model::{Theorem, Variant};

    fn table(rows: Vec<SweepRow>) -> SweepTable {
        SweepTable {
            meta: SweepMeta {
                spec: SweepSpec::new(Variant::RppFull, vec![(2, 2)], vec![100], vec![0.5]),
                theorem: Theorem::T2,
                version: "0".into(),
                note: String::new(),
            },
            rows,
        }
    }

    #[test]
    fn empty_table_is_header_only() {
        assert_eq!(table_to_csv(&table(vec![])), format!("{CSV_HEADER}\n"));
    }

    #[test]
    fn json_round_trip() {
        let row = SweepRow {
            ell1: 2,
            ell2: 3,
            variant: Variant::RpFull,
            n: 1000,
            theta: 0.7,
            h: 125,
            observed: 123.456_789_012_345_67,
            predicted: 1.0 / 3.0,
            ratio: 370.370_367_037_037,
            in_range: false,
            wall_ms: 4,
        };
        let t = table(vec![row]);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("t.json");
        write_table_json(&t, &path).unwrap();
        assert_eq!(read_table_json(&path).unwrap(), t);
        let csv = table_to_csv(&t);
        assert!(csv.ends_with("2,3,rp-full,1000,0.7,125,123.456789012,0.333333333333,370.370367037,false,4\n"));
    }

    #[test]
    fn io_errors_carry_the_path() {
        let t = table(vec![]);
        let err = write_table_csv(&t, Path::new("/nonexistent-dir/x.csv")).unwrap_err();
        assert!(err.to_string().contains("/nonexistent-dir/x.csv"));
    }
}
