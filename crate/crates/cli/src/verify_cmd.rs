//! `mubell verify`: runs the named invariant suites and prints one line per
//! check. Exit code 0 only when every check is exact.

use std::fmt::Write;

use serde_json::json;

use mubell_core::galois::Field;
use mubell_core::verify::{
    run_default, run_for_field, Check, VerifyLevel, FIELD_LEVEL_MAX_ORDER,
};

use crate::config::{CliError, OutputFormat, VerifyLevelArg};
use crate::render;

pub fn run(
    p: Option<u64>,
    n: Option<usize>,
    level: VerifyLevelArg,
    format: OutputFormat,
) -> Result<String, CliError> {
    let level_core = match level {
        VerifyLevelArg::Fast => VerifyLevel::Fast,
        VerifyLevelArg::Exhaustive => VerifyLevel::Exhaustive,
    };
    let checks = match (p, n) {
        (None, None) => run_default(level_core),
        (Some(p), n) => {
            let n = n.unwrap_or(1);
            let field = Field::with_max_order(p, n, FIELD_LEVEL_MAX_ORDER).map_err(|e| {
                CliError::Config(format!(
                    "verification rejected: {} (field-level bound {})",
                    e, FIELD_LEVEL_MAX_ORDER
                ))
            })?;
            run_for_field(&field, level_core)
        }
        (None, Some(_)) => {
            return Err(CliError::Config(String::from("-n requires -p")));
        }
    };

    let failed: Vec<&Check> = checks.iter().filter(|c| !c.passed).collect();
    let rendered = match format {
        OutputFormat::Json => {
            let rows: Vec<_> = checks
                .iter()
                .map(|c| {
                    json!({
                        "name": c.name,
                        "scope": c.scope,
                        "passed": c.passed,
                        "detail": c.detail,
                    })
                })
                .collect();
            render::json_document(&json!({
                "level": match level { VerifyLevelArg::Fast => "fast", VerifyLevelArg::Exhaustive => "exhaustive" },
                "checks": rows,
                "total": checks.len(),
                "failed": failed.len(),
            }))
        }
        OutputFormat::Csv => {
            let mut out = String::from("name,scope,passed,detail\n");
            for c in &checks {
                out.push_str(&render::csv_row(&[
                    c.name.clone(),
                    c.scope.clone(),
                    c.passed.to_string(),
                    c.detail.clone(),
                ]));
                out.push('\n');
            }
            out
        }
        OutputFormat::Text => {
            let mut out = String::new();
            for c in &checks {
                if c.passed {
                    writeln!(out, "ok   {} {}", c.name, c.scope).ok();
                } else {
                    writeln!(out, "FAIL {} {} ({})", c.name, c.scope, c.detail).ok();
                }
            }
            writeln!(out, "{} checks, {} failed", checks.len(), failed.len()).ok();
            out
        }
    };

    if failed.is_empty() {
        Ok(rendered)
    } else {
        // still emit the report so the failures are visible, then signal
        print!("{}", rendered);
        Err(CliError::Check(format!("{} invariant check(s) failed", failed.len())))
    }
}
