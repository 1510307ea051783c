//! Slice-stack text format.
//!
//! ```text
//! CA-SLICES 1 <width> <height> <layer_count> <termination> <rule_code|->
//! <layer 0: height rows of '#'/'.'>
//!
//! <layer 1>
//! ...
//! ```
//!
//! Ground layer first, one blank line between layers, one trailing newline.
//! Termination is `EMPTY`, `HEIGHT_LIMIT`, or `CYCLE:<period>`.

use crate::error::{Error, Result};
use crate::growth::{Termination, Tower};
use crate::lattice::Layer;

const MAGIC: &str = "CA-SLICES";
const VERSION: &str = "1";

pub fn export_slices(tower: &Tower) -> String {
    let rule = tower
        .rule_code()
        .map_or_else(|| "-".to_string(), |c| c.to_string());
    let mut out = format!(
        "{MAGIC} {VERSION} {} {} {} {} {rule}\n",
        tower.width(),
        tower.depth(),
        tower.height(),
        tower.termination()
    );
    for (k, layer) in tower.layers().iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        out.push_str(&layer.to_ascii());
        out.push('\n');
    }
    out
}

fn header_field<T: std::str::FromStr>(tok: &str, what: &str) -> Result<T> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::parse(1, format!("invalid {what} {tok:?}")));
    }
    tok.parse()
        .map_err(|_| Error::parse(1, format!("invalid {what} {tok:?}")))
}

pub fn parse_slices(input: &str) -> Result<Tower> {
    let body = input
        .strip_suffix('\n')
        .ok_or_else(|| Error::parse(input.lines().count().max(1), "missing trailing newline"))?;
    let lines: Vec<&str> = body.split('\n').collect();

    let tokens: Vec<&str> = lines[0].split(' ').collect();
    if tokens.first() != Some(&MAGIC) {
        return Err(Error::parse(1, format!("expected {MAGIC} header")));
    }
    if tokens.len() != 7 {
        return Err(Error::parse(
            1,
            format!("header has {} fields, expected 7", tokens.len()),
        ));
    }
    if tokens[1] != VERSION {
        return Err(Error::parse(1, format!("unsupported version {:?}", tokens[1])));
    }
    let width: usize = header_field(tokens[2], "width")?;
    let height: usize = header_field(tokens[3], "height")?;
    let count: usize = header_field(tokens[4], "layer count")?;
    if width == 0 || height == 0 || count == 0 {
        return Err(Error::parse(1, "width, height and layer count must be positive"));
    }
    let termination: Termination = tokens[5].parse().map_err(|e: String| Error::parse(1, e))?;
    let rule_code = match tokens[6] {
        "-" => None,
        tok => Some(header_field::<u32>(tok, "rule code")?),
    };

    let mut layers = Vec::with_capacity(count);
    let mut idx = 1;
    for k in 0..count {
        if k > 0 {
            match lines.get(idx) {
                Some(&"") => idx += 1,
                Some(_) => {
                    return Err(Error::parse(
                        idx + 1,
                        format!("expected blank line before layer {k}; layer {} has extra rows", k - 1),
                    ))
                }
                None => {
                    return Err(Error::parse(
                        idx + 1,
                        format!("header declares {count} layers, body has {k}"),
                    ))
                }
            }
        }
        let mut cells = Vec::with_capacity(width * height);
        for r in 0..height {
            let lineno = idx + 1;
            let line = lines.get(idx).ok_or_else(|| {
                Error::parse(
                    lineno,
                    format!("layer {k} truncated at row {r} of {height}"),
                )
            })?;
            if line.is_empty() {
                return Err(Error::parse(
                    lineno,
                    format!("layer {k} has {r} rows, expected {height}"),
                ));
            }
            let mut len = 0;
            for (j, ch) in line.chars().enumerate() {
                match ch {
                    '#' => cells.push(true),
                    '.' => cells.push(false),
                    other => {
                        return Err(Error::parse_at(
                            lineno,
                            j + 1,
                            format!("unexpected character {other:?}"),
                        ))
                    }
                }
                len += 1;
            }
            if len != width {
                return Err(Error::parse(
                    lineno,
                    format!("layer {k} row {r} has {len} cells, expected {width}"),
                ));
            }
            idx += 1;
        }
        let layer = Layer::from_cells(width, height, cells)?;
        if k > 0 && layer.is_empty() {
            return Err(Error::parse(idx, format!("layer {k} is empty")));
        }
        layers.push(layer);
    }
    if idx != lines.len() {
        return Err(Error::parse(
            idx + 1,
            format!("trailing content after the {count} declared layers"),
        ));
    }

    Tower::new(layers, rule_code, termination).map_err(|e| Error::parse(1, e.to_string()))
}
