//! Per-partition tables of `f^μ` and `f^{μ/(m)}`.

use std::io::Write;

use num_traits::Zero;

use crate::closed_forms::kostka_hook;
use crate::oracles::hook_count;
use crate::partition::{generate_partitions, Partition};
use crate::{ExactInteger, Result};

pub struct TableRow {
    pub mu: Partition,
    pub f: ExactInteger,
    /// `f^{μ/(m)}` per requested `m`, 0 when `(m)` does not fit in `μ`.
    pub skew: Vec<ExactInteger>,
}

/// One row per `μ ⊢ n` in reverse-lexicographic order.
pub fn skew_table(n: usize, ms: &[usize]) -> Result<Vec<TableRow>> {
    generate_partitions(n)
        .into_iter()
        .map(|mu| {
            let skew = ms
                .iter()
                .map(|&m| {
                    if m == 0 || m > n {
                        Ok(ExactInteger::zero())
                    } else {
                        kostka_hook(&mu, m)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(TableRow {
                f: hook_count(&mu),
                mu,
                skew,
            })
        })
        .collect()
}

fn header(ms: &[usize]) -> Vec<String> {
    let mut h = vec!["mu".to_string(), "f".to_string()];
    h.extend(ms.iter().map(|m| format!("f_skew_{m}")));
    h
}

fn cells(row: &TableRow) -> Vec<String> {
    let mut c = vec![row.mu.to_string(), row.f.to_string()];
    c.extend(row.skew.iter().map(|v| v.to_string()));
    c
}

pub fn write_csv<W: Write>(out: W, ms: &[usize], rows: &[TableRow]) -> csv::Result<()> {
    let mut writer = csv::Writer::from_writer(out);
    writer.write_record(header(ms))?;
    for row in rows {
        writer.write_record(cells(row))?;
    }
    writer.flush()?;
    Ok(())
}

/// One JSON object per line, keys in column order.
pub fn write_json_lines<W: Write>(mut out: W, ms: &[usize], rows: &[TableRow]) -> std::io::Result<()> {
    let keys = header(ms);
    for row in rows {
        let fields: Vec<String> = keys
            .iter()
            .zip(cells(row))
            .map(|(k, v)| {
                format!(
                    "{}:{}",
                    serde_json::to_string(k).expect("string"),
                    serde_json::to_string(&v).expect("string")
                )
            })
            .collect();
        writeln!(out, "{{{}}}", fields.join(","))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_shape() {
        let rows = skew_table(4, &[2]).unwrap();
        let mut buf = Vec::new();
        write_csv(&mut buf, &[2], &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "mu,f,f_skew_2");
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[1], "4,1,1");
        assert_eq!(lines[2], "\"3,1\",3,2");
        assert_eq!(lines[5], "\"1,1,1,1\",1,0");
    }

    #[test]
    fn single_cell_marks_zero() {
        let rows = skew_table(1, &[2]).unwrap();
        assert_eq!(rows.len(), 1);
        assert!(rows[0].skew[0].is_zero());
    }

    #[test]
    fn json_lines() {
        let rows = skew_table(3, &[2, 3]).unwrap();
        let mut buf = Vec::new();
        write_json_lines(&mut buf, &[2, 3], &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let first = text.lines().next().unwrap();
        assert_eq!(first, r#"{"mu":"3","f":"1","f_skew_2":"1","f_skew_3":"1"}"#);
        assert_eq!(text.lines().count(), 3);
    }
}
