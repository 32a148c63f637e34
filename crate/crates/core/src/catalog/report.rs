use std::fmt::Write as _;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

use super::Verdict;

/// A float that serializes non-finite values as `null`. Two NaNs compare
/// equal so that reports survive a JSON round trip.
#[derive(Debug, Clone, Copy)]
pub struct Real(pub f64);

impl Real {
    pub(crate) fn clean(self) -> Real {
        if self.0.is_finite() {
            self
        } else {
            Real(f64::NAN)
        }
    }

    pub fn value(&self) -> Option<f64> {
        self.0.is_finite().then_some(self.0)
    }
}

impl PartialEq for Real {
    fn eq(&self, other: &Real) -> bool {
        (self.0.is_nan() && other.0.is_nan()) || self.0 == other.0
    }
}

impl Serialize for Real {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.value() {
            Some(v) => s.serialize_f64(v),
            None => s.serialize_none(),
        }
    }
}

impl<'de> Deserialize<'de> for Real {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Real, D::Error> {
        Ok(Real(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN)))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleRecord {
    pub params: Map<String, Value>,
    pub lhs: [Real; 2],
    pub rhs: [Real; 2],
    pub abs_resid: Real,
    pub rel_resid: Real,
    pub verdict: Verdict,
}

impl SampleRecord {
    pub fn param(&self, name: &str) -> Option<f64> {
        self.params.get(name).and_then(Value::as_f64)
    }

    pub fn form(&self) -> Option<&str> {
        self.params.get("form").and_then(Value::as_str)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ErratumOutcome {
    pub printed_passes: bool,
    pub derived_passes: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub equation: String,
    pub samples: Vec<SampleRecord>,
    pub erratum: Option<ErratumOutcome>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerances {
    pub rel: f64,
    pub abs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub version: String,
    pub seed: u64,
    pub tolerances: Tolerances,
    pub identities: Vec<IdentityReport>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Md,
}

impl ReportFormat {
    pub fn from_name(name: &str) -> Option<ReportFormat> {
        match name {
            "json" => Some(ReportFormat::Json),
            "csv" => Some(ReportFormat::Csv),
            "md" => Some(ReportFormat::Md),
            _ => None,
        }
    }
}

fn params_text(p: &Map<String, Value>) -> String {
    p.iter()
        .map(|(k, v)| match v {
            Value::String(s) => format!("{k}={s}"),
            other => format!("{k}={other}"),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

fn num(r: Real) -> String {
    r.value().map(|v| format!("{v:e}")).unwrap_or_default()
}

impl CheckReport {
    pub fn emit(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            ReportFormat::Csv => self.to_csv(),
            ReportFormat::Md => self.to_markdown(),
        }
    }

    pub fn parse_json(text: &str) -> serde_json::Result<CheckReport> {
        serde_json::from_str(text)
    }

    fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "id", "equation", "params", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "abs_resid",
            "rel_resid", "verdict",
        ])
        .expect("in-memory write");
        for ident in &self.identities {
            for s in &ident.samples {
                w.write_record([
                    ident.id.as_str(),
                    ident.equation.as_str(),
                    &params_text(&s.params),
                    &num(s.lhs[0]),
                    &num(s.lhs[1]),
                    &num(s.rhs[0]),
                    &num(s.rhs[1]),
                    &num(s.abs_resid),
                    &num(s.rel_resid),
                    s.verdict.as_str(),
                ])
                .expect("in-memory write");
            }
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }

    fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "# Identity check (seed {}, rel {:e}, abs {:e})\n",
            self.seed, self.tolerances.rel, self.tolerances.abs
        );
        let _ = writeln!(out, "| id | equation | samples | max rel resid | erratum | verdict |");
        let _ = writeln!(out, "|---|---|---|---|---|---|");
        for ident in &self.identities {
            let worst = ident
                .samples
                .iter()
                .filter_map(|s| s.rel_resid.value())
                .fold(None, |m: Option<f64>, v| Some(m.map_or(v, |m| m.max(v))));
            let erratum = match ident.erratum {
                Some(e) => format!(
                    "printed {}, derived {}",
                    if e.printed_passes { "pass" } else { "fail" },
                    if e.derived_passes { "pass" } else { "fail" }
                ),
                None => String::new(),
            };
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} | {} |",
                ident.id,
                ident.equation,
                ident.samples.len(),
                worst.map(|v| format!("{v:.2e}")).unwrap_or_else(|| "-".into()),
                erratum,
                ident.verdict.as_str()
            );
        }
        out
    }
}
