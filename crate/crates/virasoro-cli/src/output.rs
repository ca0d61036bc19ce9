use std::fs;

use clap::ValueEnum;
use serde_json::Value;

use crate::commands::{CliError, Report};
use crate::{Cli, Command};

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl Format {
    fn ext(self) -> &'static str {
        match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "txt",
        }
    }
}

/// Leaf values of a JSON document as (dotted path, scalar) pairs, in document order.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let join = |k: &str| if prefix.is_empty() { k.to_string() } else { format!("{prefix}.{k}") };
    match v {
        Value::Object(m) => m.iter().for_each(|(k, x)| flatten(&join(k), x, out)),
        Value::Array(a) => a.iter().enumerate().for_each(|(i, x)| flatten(&join(&i.to_string()), x, out)),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

pub fn render(format: Format, report: &Report) -> Result<String, CliError> {
    match format {
        Format::Json => Ok(serde_json::to_string_pretty(&report.value).expect("serializable") + "\n"),
        Format::Text => {
            if let Some(t) = &report.text {
                return Ok(format!("{t}\n"));
            }
            let mut rows = Vec::new();
            flatten("", &report.value, &mut rows);
            Ok(rows.iter().map(|(k, v)| format!("{k}: {v}\n")).collect())
        }
        Format::Csv => {
            let mut rows = Vec::new();
            flatten("", &report.value, &mut rows);
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| CliError::Io { path: "<csv buffer>".into(), source: e.into() };
            w.write_record(["key", "value"]).map_err(io)?;
            for (k, v) in &rows {
                w.write_record([k, v]).map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| CliError::Io { path: "<csv buffer>".into(), source: e.into_error() })?;
            Ok(String::from_utf8(bytes).expect("utf-8 input"))
        }
    }
}

pub fn emit(cli: &Cli, report: &Report) -> Result<(), CliError> {
    let format = match cli.command {
        Command::FockCheck { json: true, .. } => Format::Json,
        _ => cli.format,
    };
    let body = render(format, report)?;
    print!("{body}");
    if let Some(dir) = &cli.out {
        fs::create_dir_all(dir).map_err(|e| CliError::Io { path: dir.display().to_string(), source: e })?;
        let path = dir.join(format!("{}.{}", report.command, format.ext()));
        fs::write(&path, &body).map_err(|e| CliError::Io { path: path.display().to_string(), source: e })?;
    }
    Ok(())
}
