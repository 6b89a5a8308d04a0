//! Report rendering and exit codes.

use crate::Format;
use dessins::Error;
use serde_json::{json, Map, Value};
use std::io::Write;
use std::path::Path;

pub const EXIT_OK: u8 = 0;
pub const EXIT_PARSE: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_CAP: u8 = 4;
pub const EXIT_VERIFICATION: u8 = 5;

/// What a command produced: the JSON payload, the rows it contributes in
/// CSV mode (the payload itself when absent), and whether every check it
/// performed held.
pub struct Outcome {
    pub result: Value,
    pub rows: Option<Vec<Value>>,
    pub verified: bool,
}

impl Outcome {
    pub fn new(result: Value) -> Self {
        Outcome { result, rows: None, verified: true }
    }

    pub fn rows(mut self, rows: Vec<Value>) -> Self {
        self.rows = Some(rows);
        self
    }

    pub fn verified(mut self, ok: bool) -> Self {
        self.verified &= ok;
        self
    }
}

pub struct ErrorInfo {
    pub kind: &'static str,
    pub message: String,
    pub offset: Option<usize>,
    pub exit_code: u8,
}

impl ErrorInfo {
    pub fn usage(message: String) -> Self {
        ErrorInfo { kind: "usage", message, offset: None, exit_code: EXIT_PARSE }
    }
}

impl From<&Error> for ErrorInfo {
    fn from(e: &Error) -> Self {
        let (kind, exit_code) = match e {
            Error::Parse { .. } => ("parse", EXIT_PARSE),
            Error::Precondition(_) => ("precondition", EXIT_PRECONDITION),
            Error::CapExceeded { .. } => ("cap_exceeded", EXIT_CAP),
            Error::NotGenerating { .. } => ("not_generating", EXIT_PRECONDITION),
            Error::NotNormal { .. } => ("not_normal", EXIT_PRECONDITION),
            Error::NotAHomomorphism => ("not_a_homomorphism", EXIT_PRECONDITION),
            Error::NotBijective => ("not_bijective", EXIT_PRECONDITION),
            Error::OutOfScope(_) => ("out_of_scope", EXIT_PRECONDITION),
            Error::SearchExhausted(_) => ("search_exhausted", EXIT_VERIFICATION),
        };
        let (message, offset) = match e {
            Error::Parse { offset, message } => (message.clone(), Some(*offset)),
            other => (other.to_string(), None),
        };
        ErrorInfo { kind, message, offset, exit_code }
    }
}

pub fn error_report(command: &str, info: ErrorInfo) -> String {
    let mut error = Map::new();
    error.insert("kind".into(), json!(info.kind));
    error.insert("message".into(), json!(info.message));
    if let Some(o) = info.offset {
        error.insert("offset".into(), json!(o));
    }
    let report = json!({ "command": command, "status": info.exit_code, "error": error });
    pretty(&report)
}

pub fn success_report(command: &str, out: Outcome, format: Format) -> (String, u8) {
    let status = if out.verified { EXIT_OK } else { EXIT_VERIFICATION };
    let text = match format {
        Format::Json => pretty(&json!({ "command": command, "status": status, "result": out.result })),
        Format::Csv => {
            let rows = out.rows.unwrap_or_else(|| match out.result {
                Value::Array(v) => v,
                v => vec![v],
            });
            to_csv(&rows)
        }
    };
    (text, status)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn cell(v: &Value) -> String {
    match v {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Bool(_) | Value::Number(_) => v.to_string(),
        Value::Array(_) | Value::Object(_) => serde_json::to_string(v).expect("JSON values always serialize"),
    }
}

/// One record per row; columns are the keys of the first row in order.
/// Non-object rows become a single `value` column.
fn to_csv(rows: &[Value]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    let header: Vec<String> = match rows.first() {
        Some(Value::Object(m)) => m.keys().cloned().collect(),
        Some(_) => vec!["value".into()],
        None => Vec::new(),
    };
    if !header.is_empty() {
        w.write_record(&header).expect("writing to memory");
    }
    for row in rows {
        let record: Vec<String> = match row {
            Value::Object(m) => header.iter().map(|k| m.get(k).map(cell).unwrap_or_default()).collect(),
            v => vec![cell(v)],
        };
        w.write_record(&record).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("CSV of UTF-8 cells")
}

pub fn emit(text: &str, out: Option<&Path>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()
        }
    }
}
