use std::io::Write;
use std::path::Path;

use epi_core::registry::{self, Params};
use epi_core::verifier::{self, VerificationReport};

use crate::output::{self, persist};
use crate::{Command, Config, Failure, Format};

pub(crate) fn run(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::List { format } => {
            write!(out, "{}", output::catalog(format))?;
            Ok(())
        }
        Command::Verify { id: None, config, .. } => verify_all(&config, out),
        Command::Verify {
            id: Some(id),
            x,
            n,
            m,
            config,
            ..
        } => verify_one(&id, overrides(x, n, m), &config, out),
        Command::Scan {
            family,
            x,
            n,
            m,
            config,
        } => scan(&family, [("x", x), ("n", n), ("m", m)], &config, out),
        Command::Dump {
            table,
            rows,
            negative,
            k,
            x,
            from,
            to,
            seq_kind,
            format,
        } => {
            let table = crate::dump::dump(table, rows, negative, k, x, from, to, seq_kind)?;
            write!(out, "{}", table.render(format))?;
            Ok(())
        }
        Command::Terms { id, x, n, m, count } => {
            let inst = registry::instance(&id, &overrides(x, n, m))?;
            let (k0, _) = inst.index_range(inst.min_depth());
            for k in k0..k0 + count {
                writeln!(out, "{k:>4}  {}", inst.term_structure(k)?)?;
            }
            Ok(())
        }
        Command::Converge {
            id,
            x,
            n,
            m,
            digits,
            depths,
        } => {
            let table = verifier::convergence_table(&id, &overrides(x, n, m), digits, &depths)?;
            writeln!(out, "{} {:?} at {} digits", table.id, table.params, table.digits)?;
            writeln!(out, "{:>6}  {:>6}  abs_error", "terms", "digits")?;
            for row in &table.rows {
                writeln!(out, "{:>6}  {:>6}  {}", row.terms, row.digits_matched, row.abs_error)?;
            }
            Ok(())
        }
    }
}

fn overrides(x: Option<i64>, n: Option<i64>, m: Option<i64>) -> Params {
    [("x", x), ("n", n), ("m", m)]
        .into_iter()
        .filter_map(|(k, v)| v.map(|v| (k.to_string(), v)))
        .collect()
}

fn outcome(reports: &[VerificationReport]) -> Result<(), Failure> {
    if reports.iter().all(VerificationReport::is_expected) {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn verify_one(id: &str, params: Params, config: &Config, out: &mut dyn Write) -> Result<(), Failure> {
    let inst = registry::instance(id, &params)?;
    let depth = config.terms.unwrap_or_else(|| inst.default_depth());
    let report = verifier::verify_instance(&inst, config.digits, depth, config.threshold)?;
    write!(out, "{}", output::report(&report, config.format))?;
    if let Some(dir) = config.output_dir() {
        persist(&dir, &report, config.format)?;
    }
    outcome(std::slice::from_ref(&report))
}

fn verify_all(config: &Config, out: &mut dyn Write) -> Result<(), Failure> {
    let reports = verifier::verify_all(config.digits, config.terms, config.threshold)?;
    let summary = output::summary(&reports, config.format);
    write!(out, "{summary}")?;
    if let Some(dir) = config.output_dir() {
        for r in &reports {
            persist(&dir, r, config.format)?;
        }
        write_summary(&dir, &reports)?;
    }
    outcome(&reports)
}

fn write_summary(dir: &Path, reports: &[VerificationReport]) -> Result<(), Failure> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("summary.md"), verifier::reports_markdown(reports))?;
    Ok(())
}

/// Parse `a..b` (inclusive).
fn parse_range(name: &str, text: &str) -> Result<(i64, i64), Failure> {
    let bad = || Failure::Usage(format!("--{name} expects an inclusive range a..b, got `{text}`"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    Ok((
        a.trim().parse().map_err(|_| bad())?,
        b.trim().parse().map_err(|_| bad())?,
    ))
}

fn scan(family: &str, flags: [(&str, Option<String>); 3], config: &Config, out: &mut dyn Write) -> Result<(), Failure> {
    let mut range = None;
    let mut fixed = Params::new();
    for (name, value) in flags {
        let Some(value) = value else { continue };
        if value.contains("..") {
            if range.is_some() {
                return Err(Failure::Usage("scan takes exactly one range parameter".into()));
            }
            range = Some((name, parse_range(name, &value)?));
        } else {
            let v = value
                .parse()
                .map_err(|_| Failure::Usage(format!("--{name} expects an integer or a range, got `{value}`")))?;
            fixed.insert(name.to_string(), v);
        }
    }
    let (param, (lo, hi)) = range.ok_or_else(|| Failure::Usage("scan needs a range such as --m 0..8".into()))?;
    let summary = verifier::scan(
        family,
        Some(param),
        lo..=hi,
        &fixed,
        config.digits,
        config.terms,
        config.threshold,
    )?;
    match config.format {
        Format::Json => writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&summary).expect("summary serializes")
        )?,
        Format::Text => {
            write!(out, "{}", output::summary(&summary.reports, Format::Text))?;
            writeln!(
                out,
                "{} over {}={}..{}: {}/{} pass, {} fail, {} inconclusive",
                summary.family,
                param,
                lo,
                hi,
                summary.passed,
                summary.reports.len(),
                summary.failed,
                summary.inconclusive
            )?;
        }
        other => write!(out, "{}", output::summary(&summary.reports, other))?,
    }
    if let Some(dir) = config.output_dir() {
        for r in &summary.reports {
            persist(&dir, r, config.format)?;
        }
    }
    outcome(&summary.reports)
}
