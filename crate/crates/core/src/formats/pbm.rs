//! Plain (ASCII, `P1`) portable bitmaps. Pixel 1 is black, read as occupied.

use super::PlanDocument;
use crate::error::{Error, Result};
use crate::lattice::Layer;

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek()?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
        }
        Some(b)
    }

    /// Skips whitespace and `#` comments running to end of line.
    fn skip_filler(&mut self, comments: bool) {
        while let Some(b) = self.peek() {
            if b.is_ascii_whitespace() {
                self.bump();
            } else if comments && b == b'#' {
                while let Some(c) = self.bump() {
                    if c == b'\n' {
                        break;
                    }
                }
            } else {
                break;
            }
        }
    }

    fn header_number(&mut self, what: &str) -> Result<usize> {
        self.skip_filler(true);
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.bump();
        }
        if start == self.pos {
            return Err(match self.peek() {
                None => Error::parse(self.line, format!("missing {what}")),
                Some(b) => Error::parse(
                    self.line,
                    format!("expected {what}, found {:?}", b as char),
                ),
            });
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value: usize = digits
            .parse()
            .map_err(|_| Error::parse(self.line, format!("{what} {digits} too large")))?;
        if value == 0 {
            return Err(Error::parse(self.line, format!("{what} must be positive")));
        }
        Ok(value)
    }
}

/// Parses a plain PBM. Pixels may be packed (`0101`) or space-separated.
pub fn parse_pbm(input: &[u8]) -> Result<PlanDocument> {
    if !input.starts_with(b"P1") {
        let found = String::from_utf8_lossy(&input[..input.len().min(2)]).into_owned();
        return Err(Error::parse(
            1,
            format!("wrong magic {found:?}, expected \"P1\" (plain PBM)"),
        ));
    }
    let mut cur = Cursor {
        bytes: input,
        pos: 2,
        line: 1,
    };
    if cur.peek().is_some_and(|b| !b.is_ascii_whitespace()) {
        return Err(Error::parse(1, "magic must be followed by whitespace"));
    }
    let width = cur.header_number("width")?;
    let height = cur.header_number("height")?;
    let count = width
        .checked_mul(height)
        .ok_or_else(|| Error::parse(cur.line, "image dimensions overflow"))?;
    match cur.peek() {
        Some(b) if b.is_ascii_whitespace() => {}
        None => {}
        Some(b) => {
            return Err(Error::parse(
                cur.line,
                format!("unexpected {:?} after height", b as char),
            ))
        }
    }

    let mut cells = Vec::with_capacity(count);
    while cells.len() < count {
        cur.skip_filler(false);
        match cur.bump() {
            Some(b'0') => cells.push(false),
            Some(b'1') => cells.push(true),
            Some(b) => {
                return Err(Error::parse(
                    cur.line,
                    format!("pixel {} is {:?}, expected 0 or 1", cells.len() + 1, b as char),
                ))
            }
            None => {
                return Err(Error::parse(
                    cur.line,
                    format!("truncated pixel data: {} of {count} pixels", cells.len()),
                ))
            }
        }
    }
    cur.skip_filler(false);
    if let Some(b) = cur.peek() {
        return Err(Error::parse(
            cur.line,
            format!("trailing data after {count} pixels: {:?}", b as char),
        ));
    }

    let layer = Layer::from_cells(width, height, cells)?;
    PlanDocument::new(layer, "pbm")
}

/// Writes a plain PBM, at most 35 pixels per line.
pub fn write_pbm(layer: &Layer) -> String {
    let mut out = format!("P1\n{} {}\n", layer.width(), layer.height());
    for row in layer.cells().chunks(layer.width()) {
        for chunk in row.chunks(35) {
            let pixels: Vec<&str> = chunk.iter().map(|&c| if c { "1" } else { "0" }).collect();
            out.push_str(&pixels.join(" "));
            out.push('\n');
        }
    }
    out
}
