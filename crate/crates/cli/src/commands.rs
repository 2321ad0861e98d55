use std::fs;
use std::io::{self, Read, Write};

use maxmatch_core::oracle::enumerate_maximal_forest;
use maxmatch_core::tree::write_edge_list;
use maxmatch_core::{compute_signs, parse_edge_list, psi_forest, FamilySpec, Forest, Sign};
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::{Format, GlobalArgs, Source};

/// Sends `text` to `--out` or stdout.
pub fn emit(g: &GlobalArgs, text: &str) -> Result<(), CliError> {
    match &g.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn load(source: &Source) -> Result<Forest, CliError> {
    if let Some(spec) = &source.family {
        let spec: FamilySpec = spec.parse()?;
        return Ok(spec.build()?.tree.into());
    }
    let path = source.input.as_ref().expect("clap requires a source");
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
        buf
    } else {
        fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?
    };
    parse_edge_list(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

#[derive(Serialize)]
struct SignRow<'a> {
    vertex: usize,
    #[serde(flatten)]
    sign: &'a Sign,
}

pub fn count(g: &GlobalArgs, source: &Source, signs: bool) -> Result<bool, CliError> {
    let forest = load(source)?;
    let total = psi_forest(&forest);

    let mut table: Vec<(usize, Sign)> = Vec::new();
    if signs {
        for component in forest.components() {
            let t = compute_signs(&component.tree.root_at(0));
            table.extend(component.vertices.iter().copied().zip(t.signs));
        }
        table.sort_by_key(|(v, _)| *v);
    }

    let text = match g.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut out = format!("{total}\n");
            if signs {
                out.push_str("vertex alpha beta gamma\n");
                for (v, s) in &table {
                    out.push_str(&format!("{v} {} {} {}\n", s.alpha, s.beta, s.gamma));
                }
            }
            out
        }
        Format::Json => {
            let mut value = json!({
                "order": forest.order(),
                "components": forest.components().len(),
                "psi": total.to_string(),
            });
            if signs {
                let rows: Vec<SignRow> = table
                    .iter()
                    .map(|(vertex, sign)| SignRow {
                        vertex: *vertex,
                        sign,
                    })
                    .collect();
                value["signs"] = serde_json::to_value(rows).expect("signs serialize");
            }
            to_json(&value)
        }
    };
    emit(g, &text)?;
    Ok(true)
}

pub fn enumerate(g: &GlobalArgs, source: &Source) -> Result<bool, CliError> {
    let forest = load(source)?;
    let matchings: Vec<_> = enumerate_maximal_forest(&forest, g.cap_oracle.get())?.collect();
    let text = match g.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut out = String::new();
            for m in &matchings {
                out.push_str(&format!("{m}\n"));
            }
            out.push_str(&format!("count: {}\n", matchings.len()));
            out
        }
        Format::Json => to_json(&json!({
            "count": matchings.len().to_string(),
            "matchings": matchings.iter().map(|m| m.edges()).collect::<Vec<_>>(),
        })),
    };
    emit(g, &text)?;
    Ok(true)
}

pub fn gen(g: &GlobalArgs, spec: &str) -> Result<bool, CliError> {
    let inst = spec.parse::<FamilySpec>()?.build()?;
    let order = inst.tree.order();
    let expected = inst.expected_psi.as_ref().map(ToString::to_string);

    let mut file = format!("# {}\n# order: {order}\n", inst.spec());
    if let Some(e) = &expected {
        file.push_str(&format!("# expected psi: {e}\n"));
    }
    file.push_str(&write_edge_list(&inst.tree));

    let Some(path) = &g.out else {
        // the summary lives in the comment header when the edge list goes to stdout
        io::stdout().lock().write_all(file.as_bytes())?;
        return Ok(true);
    };
    fs::write(path, file)?;
    let summary = match g.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = format!("order: {order}\n");
            if let Some(e) = &expected {
                s.push_str(&format!("expected psi: {e}\n"));
            }
            s
        }
        Format::Json => to_json(&json!({
            "family": inst.spec(),
            "order": order,
            "expected_psi": expected,
            "out": path,
        })),
    };
    io::stdout().lock().write_all(summary.as_bytes())?;
    Ok(true)
}
