use epi_core::exact::{binomial, fib_poly, gen_lucas_term, lucas_poly, lucas_triangle_row, pascal_row, SeqKind};
use num_bigint::BigInt;
use serde_json::json;

use crate::{DumpFormat, DumpKind, Failure};

pub(crate) struct Table {
    rows: Vec<(String, Vec<String>)>,
}

impl Table {
    pub(crate) fn render(&self, format: DumpFormat) -> String {
        match format {
            DumpFormat::Text => {
                let width = self.rows.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
                self.rows
                    .iter()
                    .map(|(label, values)| format!("{label:>width$} {}\n", values.join(" ")))
                    .collect()
            }
            DumpFormat::Json => {
                let rows: Vec<_> = self
                    .rows
                    .iter()
                    .map(|(label, values)| json!({ "label": label, "values": values }))
                    .collect();
                format!("{}\n", serde_json::to_string_pretty(&rows).expect("table serializes"))
            }
        }
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// `C(-n, k) = (-1)^k C(n + k - 1, k)`.
fn negative_row(n: u32, width: u32) -> Result<Vec<BigInt>, Failure> {
    (0..=i64::from(width))
        .map(|k| {
            let c = binomial(i64::from(n) + k - 1, k)?;
            Ok(if k % 2 == 0 { c } else { -c })
        })
        .collect()
}

#[allow(clippy::too_many_arguments)]
pub(crate) fn dump(
    kind: DumpKind,
    rows: u32,
    negative: bool,
    k: u32,
    x: i64,
    from: i64,
    to: i64,
    seq_kind: SeqKind,
) -> Result<Table, Failure> {
    let mut out = Vec::new();
    match kind {
        DumpKind::Pascal => {
            if negative {
                for n in (1..=rows).rev() {
                    out.push((format!("-{n}"), strings(&negative_row(n, rows)?)));
                }
            }
            for n in 0..=rows {
                out.push((n.to_string(), strings(&pascal_row(n))));
            }
        }
        DumpKind::LucasTriangle => {
            for n in 1..=rows.max(1) {
                out.push((n.to_string(), strings(&lucas_triangle_row(n)?)));
            }
        }
        DumpKind::FibPoly | DumpKind::LucasPoly => {
            let (name, first) = if kind == DumpKind::FibPoly { ("F", 1) } else { ("L", 0) };
            for i in first..=k {
                let p = if kind == DumpKind::FibPoly {
                    fib_poly(i)
                } else {
                    lucas_poly(i)
                };
                out.push((format!("{name}_{i}(x) ="), vec![p.to_text("x")]));
            }
        }
        DumpKind::Sequence => {
            if from > to {
                return Err(Failure::Usage(format!("empty index range {from}..{to}")));
            }
            let xb = BigInt::from(x);
            for i in from..=to {
                out.push((i.to_string(), vec![gen_lucas_term(&xb, i, seq_kind).to_string()]));
            }
        }
    }
    Ok(Table { rows: out })
}
