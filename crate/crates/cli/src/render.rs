use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use invfac::verify::{Relation, VerifyReport};
use invfac::EvalResult64;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalOutput {
    pub name: String,
    pub params: BTreeMap<String, String>,
    pub value: f64,
    pub terms_used: usize,
    pub error_estimate: f64,
    pub converged: bool,
}

impl EvalOutput {
    pub fn new(name: &str, params: BTreeMap<String, String>, r: &EvalResult64) -> Self {
        EvalOutput {
            name: name.to_string(),
            params,
            value: r.value,
            terms_used: r.terms_used,
            error_estimate: r.error_estimate,
            converged: r.converged,
        }
    }

    fn params_inline(&self, sep: &str) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Text => format!(
                "name: {}\nparams: {}\nvalue: {}\nterms_used: {}\nerror_estimate: {:e}\nconverged: {}\n",
                self.name,
                self.params_inline(" "),
                self.value,
                self.terms_used,
                self.error_estimate,
                self.converged
            ),
            Format::Csv => format!(
                "name,params,value,terms_used,error_estimate,converged\n{},{},{},{},{:e},{}\n",
                self.name,
                self.params_inline(";"),
                self.value,
                self.terms_used,
                self.error_estimate,
                self.converged
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationOut {
    Within,
    AtMost,
    AtLeast,
    Exact,
}

impl From<Relation> for RelationOut {
    fn from(r: Relation) -> Self {
        match r {
            Relation::Within => RelationOut::Within,
            Relation::AtMost => RelationOut::AtMost,
            Relation::AtLeast => RelationOut::AtLeast,
            Relation::Exact => RelationOut::Exact,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryOutput {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_diff: f64,
    pub tolerance: f64,
    pub relation: RelationOut,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportOutput {
    pub entries: Vec<EntryOutput>,
    pub overall_pass: bool,
}

impl From<&VerifyReport> for ReportOutput {
    fn from(r: &VerifyReport) -> Self {
        ReportOutput {
            entries: r
                .entries
                .iter()
                .map(|e| EntryOutput {
                    name: e.name.clone(),
                    lhs: e.lhs,
                    rhs: e.rhs,
                    abs_diff: e.abs_diff,
                    tolerance: e.tolerance,
                    relation: e.relation.into(),
                    pass: e.pass,
                })
                .collect(),
            overall_pass: r.overall_pass,
        }
    }
}

impl ReportOutput {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Text => {
                let mut s = String::new();
                for e in &self.entries {
                    let _ = writeln!(
                        s,
                        "{} {} lhs={} rhs={} diff={:e} tol={:e}",
                        if e.pass { "PASS" } else { "FAIL" },
                        e.name,
                        e.lhs,
                        e.rhs,
                        e.abs_diff,
                        e.tolerance
                    );
                }
                let passed = self.entries.iter().filter(|e| e.pass).count();
                let _ = writeln!(
                    s,
                    "overall: {} ({passed}/{} passed)",
                    if self.overall_pass { "PASS" } else { "FAIL" },
                    self.entries.len()
                );
                s
            }
            Format::Csv => {
                let mut s = String::from("name,lhs,rhs,abs_diff,tolerance,relation,pass\n");
                for e in &self.entries {
                    let rel = serde_json::to_value(&e.relation).expect("plain enum");
                    let _ = writeln!(
                        s,
                        "{},{},{},{:e},{:e},{},{}",
                        e.name,
                        e.lhs,
                        e.rhs,
                        e.abs_diff,
                        e.tolerance,
                        rel.as_str().unwrap_or_default(),
                        e.pass
                    );
                }
                s
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableOutput {
    pub kind: String,
    pub rows: Vec<Vec<String>>,
}

impl TableOutput {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => json(self),
            Format::Text => {
                let mut s = String::new();
                for (n, row) in self.rows.iter().enumerate() {
                    let _ = writeln!(s, "{n}: {}", row.join(", "));
                }
                s
            }
            Format::Csv => {
                let mut s = String::from("n,k,value\n");
                for (n, row) in self.rows.iter().enumerate() {
                    for (k, v) in row.iter().enumerate() {
                        let _ = writeln!(s, "{n},{k},{v}");
                    }
                }
                s
            }
        }
    }
}

pub fn sequence(values: &[String], format: Format) -> String {
    match format {
        Format::Json => json(&values),
        Format::Text => values.iter().map(|v| format!("{v}\n")).collect(),
        Format::Csv => {
            let mut s = String::from("n,value\n");
            for (n, v) in values.iter().enumerate() {
                let _ = writeln!(s, "{n},{v}");
            }
            s
        }
    }
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
