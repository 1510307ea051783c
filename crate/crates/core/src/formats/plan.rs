use super::PlanDocument;
use crate::error::{Error, Result};
use crate::lattice::Layer;

/// Parses rows of `#` (occupied) and `.` (empty). A single trailing newline
/// is allowed.
pub fn parse_plan_text(input: &str) -> Result<PlanDocument> {
    let layer = parse_grid(input, 1)?;
    PlanDocument::new(layer, "text")
}

/// Parses a `#`/`.` grid, reporting line numbers offset by `first_line - 1`.
/// Empty layers are allowed here.
pub(crate) fn parse_grid(input: &str, first_line: usize) -> Result<Layer> {
    if input.is_empty() {
        return Err(Error::parse(first_line, "empty input"));
    }
    let body = input.strip_suffix('\n').unwrap_or(input);
    let mut width = None;
    let mut cells = Vec::new();
    let mut rows = 0;
    for (i, line) in body.split('\n').enumerate() {
        let lineno = first_line + i;
        let mut len = 0;
        for (j, ch) in line.chars().enumerate() {
            match ch {
                '#' => cells.push(true),
                '.' => cells.push(false),
                other => {
                    return Err(Error::parse_at(
                        lineno,
                        j + 1,
                        format!("unexpected character {other:?} (expected '#' or '.')"),
                    ))
                }
            }
            len += 1;
        }
        match width {
            None if len == 0 => return Err(Error::parse(lineno, "empty row")),
            None => width = Some(len),
            Some(w) if w != len => {
                return Err(Error::parse(
                    lineno,
                    format!("row {} has {len} cells, expected {w}", i + 1),
                ))
            }
            Some(_) => {}
        }
        rows += 1;
    }
    Layer::from_cells(width.expect("at least one row"), rows, cells)
}

/// Inverse of [`parse_plan_text`], with a trailing newline.
pub fn render_plan_text(layer: &Layer) -> String {
    let mut s = layer.to_ascii();
    s.push('\n');
    s
}
