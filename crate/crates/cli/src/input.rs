//! Parsing of carrier expressions, element-label sets and multiplier
//! lists from the command line, plus the Cayley-table file format.
//!
//! Carrier grammar:
//!   cyclic(M) | capped-add(C) | chain-min(K) | powerset-union(K)
//!   | product(EXPR, EXPR) | int-additive | int-no-one-monoid
//!   | @FILE.json
//!
//! A file carrier is `{"elements": [...], "table": [[...]]}` where
//! `table[i][j]` is the label of `elements[i] + elements[j]`.

use std::fs;
use std::path::Path;

use konvex_core::{Elem, Error, Multipliers, Semigroup, Subset};
use serde::Deserialize;

fn bad(msg: impl Into<String>) -> Error {
    Error::BadParams(msg.into())
}

#[derive(Deserialize)]
pub struct CayleyFile {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
}

pub fn load_cayley_file(path: &Path) -> Result<Semigroup, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| bad(format!("cannot read {}: {e}", path.display())))?;
    let file: CayleyFile = serde_json::from_str(&text)
        .map_err(|e| bad(format!("{} is not a carrier file: {e}", path.display())))?;
    Semigroup::build_cayley(&file.elements, &file.table)
}

/// Splits `text` at top-level commas, respecting parentheses.
fn split_args(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0;
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(text[start..].trim());
    parts
}

pub fn parse_carrier(expr: &str) -> Result<Semigroup, Error> {
    let expr = expr.trim();
    if let Some(path) = expr.strip_prefix('@') {
        return load_cayley_file(Path::new(path));
    }
    match expr {
        "int-additive" | "int" => return Ok(Semigroup::int_additive()),
        "int-no-one-monoid" | "int-no-one" => return Ok(Semigroup::int_no_one()),
        _ => {}
    }
    let open = expr
        .find('(')
        .ok_or_else(|| bad(format!("unknown carrier `{expr}`")))?;
    if !expr.ends_with(')') {
        return Err(bad(format!("unbalanced parentheses in `{expr}`")));
    }
    let head = &expr[..open];
    let args = &expr[open + 1..expr.len() - 1];
    let size = |label: &str| -> Result<usize, Error> {
        args.trim()
            .parse()
            .map_err(|_| bad(format!("{label} takes one integer, got `{args}`")))
    };
    match head {
        "cyclic" => Semigroup::cyclic(size("cyclic")?),
        "capped-add" => Semigroup::capped_add(size("capped-add")?),
        "chain-min" => Semigroup::chain_min(size("chain-min")?),
        "powerset-union" => Semigroup::powerset_union(size("powerset-union")?),
        "product" => {
            let parts = split_args(args);
            if parts.len() != 2 {
                return Err(bad(format!("product takes two carriers, got `{args}`")));
            }
            let left = parse_carrier(parts[0])?;
            let right = parse_carrier(parts[1])?;
            Semigroup::product(&left, &right)
        }
        other => Err(bad(format!("unknown carrier `{other}`"))),
    }
}

/// Comma-separated element labels; an empty string is the empty set.
pub fn parse_set(s: &Semigroup, text: &str) -> Result<Subset, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(s.empty_subset());
    }
    let elems: Vec<Elem> = text
        .split(',')
        .map(|tok| s.parse_label(tok.trim()))
        .collect::<Result<_, _>>()?;
    s.subset_from_elems(&elems)
}

/// `ALL` (any case) or a comma-separated generator list.
pub fn parse_multipliers(text: &str) -> Result<Multipliers, Error> {
    if text.trim().eq_ignore_ascii_case("all") {
        return Ok(Multipliers::All);
    }
    let gens: Vec<u64> = text
        .split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| bad(format!("bad multiplier `{tok}`")))
        })
        .collect::<Result<_, _>>()?;
    Multipliers::generated(&gens)
}
