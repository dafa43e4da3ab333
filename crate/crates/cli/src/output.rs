use std::path::{Path, PathBuf};

use epi_core::registry::{list_identities, Identity};
use epi_core::verifier::{reports_csv, reports_markdown, VerificationReport};

use crate::{Failure, Format};

fn params_text(r: &VerificationReport) -> String {
    if r.params.is_empty() {
        return "-".into();
    }
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

fn param_names(i: &Identity) -> String {
    if i.params.is_empty() {
        return "-".into();
    }
    i.params
        .iter()
        .map(|p| format!("{}={}", p.name, p.default))
        .collect::<Vec<_>>()
        .join(",")
}

pub(crate) fn catalog(format: Format) -> String {
    let ids = list_identities();
    match format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&ids).expect("catalog serializes")),
        Format::Text => {
            let mut out = String::new();
            for i in &ids {
                out.push_str(&format!(
                    "{:<16} {:<17} {:<12} {}\n",
                    i.id,
                    i.status.to_string(),
                    param_names(i),
                    i.paper_anchor
                ));
            }
            out
        }
        Format::Markdown => {
            let mut out = String::from("| id | name | status | params | anchor |\n|---|---|---|---|---|\n");
            for i in &ids {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    i.id,
                    i.name,
                    i.status,
                    param_names(i),
                    i.paper_anchor.replace('|', "\\|")
                ));
            }
            out
        }
        Format::Csv => {
            let mut out = String::from("id,name,status,params,anchor\n");
            for i in &ids {
                let quote = |s: &str| format!("\"{}\"", s.replace('"', "\"\""));
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    i.id,
                    quote(&i.name),
                    i.status,
                    quote(&param_names(i)),
                    quote(&i.paper_anchor)
                ));
            }
            out
        }
    }
}

pub(crate) fn report(r: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => format!("{}\n", r.to_json()),
        Format::Markdown => r.to_markdown(),
        Format::Csv => r.to_csv(),
        Format::Text => {
            let mut lines = vec![
                ("id", r.id.clone()),
                ("params", params_text(r)),
                ("status", r.status.to_string()),
                ("digits", r.digits.to_string()),
                ("terms", r.terms.to_string()),
                ("value", r.value.clone()),
                ("target", r.target.clone()),
                ("abs_error", r.abs_error.clone()),
                ("digits_matched", r.digits_matched.to_string()),
                ("tail_bound", r.tail_bound.clone().unwrap_or_else(|| "-".into())),
                ("verdict", r.verdict.to_string()),
                ("anchor", r.paper_anchor.clone()),
            ];
            if let Some(note) = &r.note {
                lines.push(("note", note.clone()));
            }
            lines.iter().map(|(k, v)| format!("{k:<15} {v}\n")).collect()
        }
    }
}

pub(crate) fn summary(reports: &[VerificationReport], format: Format) -> String {
    match format {
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(reports).expect("reports serialize")
        ),
        Format::Markdown => reports_markdown(reports),
        Format::Csv => reports_csv(reports),
        Format::Text => {
            let mut out = String::new();
            for r in reports {
                out.push_str(&format!(
                    "{:<24} {:<17} terms={:<5} digits_matched={:<4} {}{}\n",
                    r.label(),
                    r.status.to_string(),
                    r.terms,
                    r.digits_matched,
                    r.verdict,
                    if r.is_expected() { "" } else { "  (unexpected)" }
                ));
            }
            let expected = reports.iter().filter(|r| r.is_expected()).count();
            out.push_str(&format!("{expected}/{} as expected\n", reports.len()));
            out
        }
    }
}

/// Path of the persisted report; text output is stored as JSON.
pub(crate) fn report_path(dir: &Path, r: &VerificationReport, format: Format) -> PathBuf {
    let ext = match format {
        Format::Json | Format::Text => "json",
        Format::Markdown => "md",
        Format::Csv => "csv",
    };
    dir.join(format!("{}.{ext}", r.label()))
}

pub(crate) fn persist(dir: &Path, r: &VerificationReport, format: Format) -> Result<(), Failure> {
    std::fs::create_dir_all(dir)?;
    let body = match format {
        Format::Text => report(r, Format::Json),
        other => report(r, other),
    };
    std::fs::write(report_path(dir, r, format), body)?;
    Ok(())
}
