//! Row extraction and rendering: CSV with fixed columns, aligned text, and
//! the `{query, rows, verdicts}` JSON document.

use num_traits::ToPrimitive;
use serde::Serialize;

use compgf::checks::{CheckItem, CheckReport};
use compgf::polyseries::TruncatedSeries;

#[derive(Clone, Debug, Serialize)]
#[serde(untagged)]
pub enum Row {
    Value {
        n: usize,
        value: String,
    },
    Joint {
        n: usize,
        m: u32,
        rises: u32,
        levels: u32,
        drops: u32,
        count: u64,
    },
}

/// One `(n, value)` row per degree of a marker-free series.
pub fn value_rows(series: &TruncatedSeries) -> Vec<Row> {
    series
        .coeffs()
        .iter()
        .enumerate()
        .map(|(n, poly)| Row::Value {
            n,
            value: poly.coeff(&[0; 4]).to_string(),
        })
        .collect()
}

/// One row per joint key, in lexicographic (n, m, rises, levels, drops)
/// order.
pub fn joint_rows(series: &TruncatedSeries) -> Vec<Row> {
    let mut rows = Vec::new();
    for (n, poly) in series.coeffs().iter().enumerate() {
        for (expos, coeff) in poly.iter() {
            rows.push(Row::Joint {
                n,
                m: expos[0],
                rises: expos[1],
                levels: expos[2],
                drops: expos[3],
                count: coeff.to_u64().expect("joint counts fit in u64"),
            });
        }
    }
    rows
}

#[derive(Clone, Debug, Serialize)]
pub struct TermRow {
    pub n: usize,
    pub y: u32,
    pub r: u32,
    pub l: u32,
    pub d: u32,
    pub coeff: String,
}

/// One row per series term, for the gf JSON form.
pub fn term_rows(series: &TruncatedSeries) -> Vec<TermRow> {
    let mut rows = Vec::new();
    for (n, poly) in series.coeffs().iter().enumerate() {
        for (expos, coeff) in poly.iter() {
            rows.push(TermRow {
                n,
                y: expos[0],
                r: expos[1],
                l: expos[2],
                d: expos[3],
                coeff: coeff.to_string(),
            });
        }
    }
    rows
}

pub fn rows_to_csv(rows: &[Row], joint: bool) -> String {
    let mut out = String::new();
    out.push_str(if joint {
        "n,m,rises,levels,drops,count\n"
    } else {
        "n,value\n"
    });
    for row in rows {
        match row {
            Row::Value { n, value } => out.push_str(&format!("{n},{value}\n")),
            Row::Joint {
                n,
                m,
                rises,
                levels,
                drops,
                count,
            } => out.push_str(&format!("{n},{m},{rises},{levels},{drops},{count}\n")),
        }
    }
    out
}

pub fn rows_to_text(rows: &[Row], joint: bool) -> String {
    let mut out = String::new();
    if joint {
        out.push_str(&format!(
            "{:>4} {:>4} {:>6} {:>6} {:>6} {:>12}\n",
            "n", "m", "rises", "levels", "drops", "count"
        ));
        for row in rows {
            if let Row::Joint {
                n,
                m,
                rises,
                levels,
                drops,
                count,
            } = row
            {
                out.push_str(&format!(
                    "{n:>4} {m:>4} {rises:>6} {levels:>6} {drops:>6} {count:>12}\n"
                ));
            }
        }
    } else {
        out.push_str(&format!("{:>4} {:>16}\n", "n", "value"));
        for row in rows {
            if let Row::Value { n, value } = row {
                out.push_str(&format!("{n:>4} {value:>16}\n"));
            }
        }
    }
    out
}

pub fn report_to_text(report: &CheckReport, n_max: usize) -> String {
    let mut out = format!("suite {} (n-max {n_max})\n", report.suite);
    for item in &report.items {
        let status = if item.passed { "ok  " } else { "FAIL" };
        out.push_str(&format!("{status} {} -- {}\n", item.name, item.detail));
    }
    let failures = report.items.iter().filter(|i| !i.passed).count();
    out.push_str(&format!(
        "{} items, {} failures: {}\n",
        report.items.len(),
        failures,
        if failures == 0 { "PASS" } else { "FAIL" }
    ));
    out
}

/// The `{query, rows, verdicts}` JSON document every command emits in JSON
/// form.
pub struct JsonDocument {
    query: serde_json::Value,
    rows: Vec<serde_json::Value>,
    verdicts: Vec<CheckItem>,
}

impl JsonDocument {
    pub fn new(
        query: serde_json::Value,
        rows: Vec<serde_json::Value>,
        verdicts: Vec<CheckItem>,
    ) -> Self {
        JsonDocument {
            query,
            rows,
            verdicts,
        }
    }

    pub fn render(&self) -> String {
        let doc = serde_json::json!({
            "query": self.query,
            "rows": self.rows,
            "verdicts": self.verdicts,
        });
        let mut body = serde_json::to_string_pretty(&doc).expect("document serializes");
        body.push('\n');
        body
    }
}
