//! `mubell mub`: the d^n + 1 bases with the pairwise verification block.

use std::fmt::Write;

use serde_json::json;

use mubell_core::galois::Field;
use mubell_core::mub::{fourier_matrix, mub_table, verify_pairwise, BasisLabel};
use mubell_core::pauli::PauliMonomial;

use crate::config::{CliError, OutputFormat, RunConfig};
use crate::render;

const CONVENTIONS: [&str; 4] = [
    "basis 0 is the computational (Z eigen) basis; bases 1..d^n-1 are V_nu-rotated; the final basis is the Fourier (X eigen) basis",
    "states are ordered by lambda in field enumeration order: 0, then ascending powers of the primitive element",
    "entries are cyclotomic integers cyc(M)[...] over conductor M = 4 for p = 2 and M = p otherwise; a vector's value is entries/(sqrt p)^scale",
    "rotation coefficients solve c_{0nu} = 1, c_{l+l',nu} conj(c_{l,nu}) = c_{l',nu} chi(-nu l' l); for odd p the closed form chi(-2^{-1} l^2 nu) is used",
];

fn label_text(label: &BasisLabel) -> String {
    match label {
        BasisLabel::Rotated(nu) if nu.is_zero() => String::from("computational"),
        BasisLabel::Rotated(nu) => format!("rotated nu={}", nu),
        BasisLabel::Fourier => String::from("fourier"),
    }
}

/// The commuting operator class the basis diagonalizes, in monomial text form.
fn class_operators(field: &Field, label: &BasisLabel) -> Vec<String> {
    field
        .elements()
        .iter()
        .skip(1)
        .map(|mu| match label {
            BasisLabel::Rotated(nu) => PauliMonomial::lambda_class(field, mu, nu).text(),
            BasisLabel::Fourier => PauliMonomial::lambda_tilde(field, mu).text(),
        })
        .collect()
}

pub fn run(cfg: &RunConfig, verify: bool) -> Result<String, CliError> {
    let field = &cfg.field;
    let table = mub_table(field, false)
        .map_err(|e| CliError::Check(format!("mub construction: {}", e)))?;
    let verification = if verify {
        let (pairs, all_exact) = verify_pairwise(field, &table);
        if !all_exact {
            return Err(CliError::Check(format!(
                "pairwise unbiasedness failed after {} pairs",
                pairs
            )));
        }
        Some(pairs)
    } else {
        None
    };

    match cfg.format {
        OutputFormat::Json => {
            let bases: Vec<_> = (0..table.len())
                .map(|i| {
                    json!({
                        "label": label_text(table.label(i)),
                        "class": class_operators(field, table.label(i)),
                        "states": table.basis(i).iter().map(render::vector_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let doc = json!({
                "p": field.characteristic(),
                "n": field.degree(),
                "order": field.order(),
                "modulus": field.modulus(),
                "conventions": CONVENTIONS,
                "fourier": render::matrix_json(&fourier_matrix(field)),
                "bases": bases,
                "verification": verification.map(|pairs| json!({
                    "pairs_checked": pairs,
                    "all_exact": true,
                })),
            });
            Ok(render::json_document(&doc))
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            out.push_str("basis,label,vector,component,scale,value\n");
            for i in 0..table.len() {
                let label = label_text(table.label(i));
                for (v, state) in table.basis(i).iter().enumerate() {
                    for (c, entry) in state.entries().iter().enumerate() {
                        let row = render::csv_row(&[
                            i.to_string(),
                            label.clone(),
                            v.to_string(),
                            c.to_string(),
                            state.scale().to_string(),
                            entry.to_string(),
                        ]);
                        out.push_str(&row);
                        out.push('\n');
                    }
                }
            }
            Ok(out)
        }
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "{}", field).ok();
            writeln!(out, "mutually unbiased bases: {}", table.len()).ok();
            for i in 0..table.len() {
                writeln!(out, "basis {} ({}):", i, label_text(table.label(i))).ok();
                writeln!(out, "  diagonalizes: {}", class_operators(field, table.label(i)).join(", "))
                    .ok();
                for (v, state) in table.basis(i).iter().enumerate() {
                    let entries: Vec<String> =
                        state.entries().iter().map(|e| e.to_string()).collect();
                    writeln!(out, "  |{}⟩ scale {}: [{}]", v, state.scale(), entries.join(", "))
                        .ok();
                }
            }
            match verification {
                Some(pairs) => {
                    writeln!(out, "verification: {} pairs checked, all exact", pairs).ok();
                }
                None => {
                    writeln!(out, "verification: skipped").ok();
                }
            }
            Ok(out)
        }
    }
}
