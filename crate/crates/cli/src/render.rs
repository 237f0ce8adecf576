use serde_json::{json, Map, Value};
use tmoments::moments::decimal_string;
use tmoments::Rational;

use crate::args::Format;

/// A finished command result, rendered only once it is complete.
#[derive(Debug, Default)]
pub struct Report {
    pub fields: Map<String, Value>,
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
    pub seed: Option<u64>,
    /// Some identity check failed; the process exits with 2.
    pub identity_failure: bool,
}

impl Report {
    pub fn new(columns: &[&'static str]) -> Self {
        Report {
            columns: columns.to_vec(),
            ..Default::default()
        }
    }

    pub fn set(&mut self, key: &str, value: Value) {
        self.fields.insert(key.to_string(), value);
    }
}

pub fn decimal(x: &Rational, digits: usize) -> String {
    decimal_string(x, digits)
}

/// `{"value": "p/q", "value_decimal": "..."}` fragment.
pub fn exact_json(x: &Rational, digits: usize) -> Value {
    json!({ "value": x.to_string(), "value_decimal": decimal(x, digits) })
}

pub fn render(report: &Report, command: &str, argv: &[String], format: Format) -> String {
    let repro = json!({
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "seed": report.seed,
        "argv": argv,
        "sampler_version": tmoments::oracles::SAMPLER_VERSION,
    });
    match format {
        Format::Json => {
            let mut obj = report.fields.clone();
            obj.insert("reproducibility".into(), repro);
            let mut s =
                serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Csv => {
            let mut out = format!(
                "# {}\n",
                serde_json::to_string(&repro).expect("JSON values serialize")
            );
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&report.columns).expect("in-memory CSV");
            for r in &report.rows {
                w.write_record(r).expect("in-memory CSV");
            }
            out.push_str(
                &String::from_utf8(w.into_inner().expect("in-memory CSV")).expect("UTF-8 CSV"),
            );
            out
        }
    }
}
