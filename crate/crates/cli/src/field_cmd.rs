//! `mubell field`: canonical field description, bases, trace and character
//! tables.

use std::fmt::Write;

use serde_json::json;

use mubell_core::galois::{BasisKind, Field, FieldBasis};

use crate::config::{BasisChoice, CliError, OutputFormat, RunConfig};
use crate::render;

/// Largest order for which the full per-element tables are emitted.
const TABLE_BOUND: usize = 81;

fn chosen_basis(field: &Field, choice: BasisChoice) -> FieldBasis {
    match choice {
        BasisChoice::Polynomial => field.polynomial_basis(),
        BasisChoice::Selfdual | BasisChoice::AlmostSelfdual => field.find_selfdual(),
    }
}

pub fn run(cfg: &RunConfig) -> Result<String, CliError> {
    let field = &cfg.field;
    let q = field.order();
    let polynomial = field.polynomial_basis();
    let normal = field.normal_basis();
    let dual = field.dual_basis(&polynomial);
    let selfdual = field.find_selfdual();
    let coordinate_basis = chosen_basis(field, cfg.basis);

    match cfg.format {
        OutputFormat::Json => {
            let mut elements = Vec::new();
            if q <= TABLE_BOUND {
                for (i, e) in field.elements().iter().enumerate() {
                    elements.push(json!({
                        "index": i,
                        "coeffs": render::element_json(e),
                        "power": if e.is_zero() { json!(null) } else { json!(i - 1) },
                        "trace": field.trace(e),
                        "character": field.additive_character(e).to_string(),
                        "coordinates": field.expand(e, &coordinate_basis),
                    }));
                }
            }
            let doc = json!({
                "canonical": field.to_string(),
                "p": field.characteristic(),
                "n": field.degree(),
                "order": q,
                "modulus": field.modulus(),
                "primitive": render::element_json(&field.primitive()),
                "bases": {
                    "polynomial": render::basis_json(field, &polynomial),
                    "normal": render::basis_json(field, &normal),
                    "polynomial_dual": render::basis_json(field, &dual),
                    "selfdual": render::basis_json(field, &selfdual),
                },
                "coordinate_basis_kind": format!("{:?}", coordinate_basis.kind()),
                "elements": elements,
            });
            Ok(render::json_document(&doc))
        }
        OutputFormat::Csv => {
            let mut out = String::new();
            out.push_str("index,coeffs,power,trace,character,coordinates\n");
            if q <= TABLE_BOUND {
                for (i, e) in field.elements().iter().enumerate() {
                    let power = if e.is_zero() { String::new() } else { format!("{}", i - 1) };
                    let coords: Vec<String> = field
                        .expand(e, &coordinate_basis)
                        .iter()
                        .map(|c| c.to_string())
                        .collect();
                    let row = render::csv_row(&[
                        i.to_string(),
                        e.to_string(),
                        power,
                        field.trace(e).to_string(),
                        field.additive_character(e).to_string(),
                        format!("[{}]", coords.join(",")),
                    ]);
                    out.push_str(&row);
                    out.push('\n');
                }
            }
            Ok(out)
        }
        OutputFormat::Text => {
            let mut out = String::new();
            writeln!(out, "{}", field).ok();
            writeln!(out, "order: {}", q).ok();
            writeln!(out, "polynomial basis: {}", basis_line(field, &polynomial)).ok();
            writeln!(out, "normal basis:     {}", basis_line(field, &normal)).ok();
            writeln!(out, "dual(polynomial): {}", basis_line(field, &dual)).ok();
            writeln!(out, "selfdual search:  {}", basis_line(field, &selfdual)).ok();
            if q <= TABLE_BOUND {
                writeln!(out, "elements (index, coeffs, power, trace, character):").ok();
                for (i, e) in field.elements().iter().enumerate() {
                    let power = if e.is_zero() {
                        String::from("-")
                    } else {
                        format!("s^{}", i - 1)
                    };
                    writeln!(
                        out,
                        "  {:>3}  {:<12} {:<6} tr={}  chi={}",
                        i,
                        e.to_string(),
                        power,
                        field.trace(e),
                        field.additive_character(e)
                    )
                    .ok();
                }
            } else {
                writeln!(out, "(per-element tables omitted above order {})", TABLE_BOUND).ok();
            }
            Ok(out)
        }
    }
}

fn basis_line(field: &Field, basis: &FieldBasis) -> String {
    let elements: Vec<String> = basis.elements().iter().map(|e| e.to_string()).collect();
    let kind = match basis.kind() {
        BasisKind::AlmostSelfdual { exception } => {
            let theta = &basis.elements()[exception - 1];
            let t = field.trace(&field.mul(theta, theta));
            format!("almost-selfdual (exception at index {}, tr = {})", exception, t)
        }
        other => format!("{:?}", other).to_lowercase(),
    };
    format!("{{{}}} [{}]", elements.join(", "), kind)
}
