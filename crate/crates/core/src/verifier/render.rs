use super::VerificationReport;

pub const CSV_HEADER: &str =
    "id,params,status,digits,terms,value,target,abs_error,digits_matched,tail_bound,verdict,paper_anchor,note";

fn params_text(r: &VerificationReport) -> String {
    r.params
        .iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn md_cell(s: &str) -> String {
    s.replace('|', "\\|")
}

fn row(r: &VerificationReport) -> Vec<String> {
    vec![
        r.id.clone(),
        params_text(r),
        r.status.to_string(),
        r.digits.to_string(),
        r.terms.to_string(),
        r.value.clone(),
        r.target.clone(),
        r.abs_error.clone(),
        r.digits_matched.to_string(),
        r.tail_bound.clone().unwrap_or_default(),
        r.verdict.to_string(),
        r.paper_anchor.clone(),
        r.note.clone().unwrap_or_default(),
    ]
}

/// One header line plus one line per report.
pub fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        out.push_str(&row(r).iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(","));
        out.push('\n');
    }
    out
}

/// GitHub-flavored table with the same columns as the CSV form.
pub fn reports_markdown(reports: &[VerificationReport]) -> String {
    let header: Vec<&str> = CSV_HEADER.split(',').collect();
    let mut out = format!("| {} |\n", header.join(" | "));
    out.push_str(&format!("|{}\n", "---|".repeat(header.len())));
    for r in reports {
        let cells: Vec<String> = row(r).iter().map(|c| md_cell(c)).collect();
        out.push_str(&format!("| {} |\n", cells.join(" | ")));
    }
    out
}
