//! Line-oriented text formats for finite spaces and enumerated posets.
//!
//! Both formats are plain text, one directive per line, with `#` starting a
//! comment and blank lines ignored. A `points: n` line must come first.
//!
//! Spaces (`parse_space`):
//!
//! ```text
//! points: 3
//! open: 0          # singleton {0}
//! open: 0,1
//! piece: 0,2       # optional; pieces feed the colimit tools
//! ```
//!
//! The empty set and the full set are added automatically; the family is then
//! validated as a topology. An `open:` directive with nothing after the colon
//! denotes the empty set.
//!
//! Posets (`parse_poset`):
//!
//! ```text
//! points: 3
//! le: 0 1          # generating relation 0 ≤ 1; closure is computed
//! le: 1 2
//! enum: 0 1 2      # enumeration of the designated cofinal subset
//! ```

use std::collections::BTreeSet;

use super::poset::EnumeratedPoset;
use super::space::FiniteSpace;
use super::{FiniteTopError, MAX_POINTS};

fn parse_err(line: usize, message: impl Into<String>) -> FiniteTopError {
    FiniteTopError::Parse {
        line,
        message: message.into(),
    }
}

/// Strips comments and splits a directive into `(key, value)` at the first
/// colon. Returns `None` for blank/comment-only lines.
fn directive(raw: &str, line: usize) -> Result<Option<(&str, &str)>, FiniteTopError> {
    let content = raw.split('#').next().unwrap_or("").trim();
    if content.is_empty() {
        return Ok(None);
    }
    match content.split_once(':') {
        Some((key, value)) => Ok(Some((key.trim(), value.trim()))),
        None => Err(parse_err(
            line,
            format!("expected `name: value`, got `{content}`"),
        )),
    }
}

fn parse_point_count(value: &str, line: usize) -> Result<usize, FiniteTopError> {
    let n: usize = value
        .parse()
        .map_err(|_| parse_err(line, format!("invalid point count `{value}`")))?;
    if n > MAX_POINTS {
        return Err(FiniteTopError::TooManyPoints { n, max: MAX_POINTS });
    }
    Ok(n)
}

fn parse_point(item: &str, n: usize, line: usize) -> Result<usize, FiniteTopError> {
    let p: usize = item
        .parse()
        .map_err(|_| parse_err(line, format!("invalid point `{item}`")))?;
    if p >= n {
        return Err(parse_err(
            line,
            format!("point {p} out of range for {n} points"),
        ));
    }
    Ok(p)
}

/// Parses a comma-separated point list into a bitmask; an empty value is the
/// empty set.
fn parse_mask(value: &str, n: usize, line: usize) -> Result<u32, FiniteTopError> {
    if value.is_empty() {
        return Ok(0);
    }
    let mut mask = 0u32;
    for item in value.split(',') {
        mask |= 1 << parse_point(item.trim(), n, line)?;
    }
    Ok(mask)
}

/// Parses a space description plus its (possibly empty) list of cover pieces.
pub fn parse_space(text: &str) -> Result<(FiniteSpace, Vec<u32>), FiniteTopError> {
    let mut n: Option<usize> = None;
    let mut opens: BTreeSet<u32> = BTreeSet::new();
    let mut pieces: Vec<u32> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let Some((key, value)) = directive(raw, line)? else {
            continue;
        };
        match key {
            "points" => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate `points:` line"));
                }
                n = Some(parse_point_count(value, line)?);
            }
            "open" => {
                let n = n.ok_or_else(|| parse_err(line, "`points:` must come first"))?;
                opens.insert(parse_mask(value, n, line)?);
            }
            "piece" => {
                let n = n.ok_or_else(|| parse_err(line, "`points:` must come first"))?;
                pieces.push(parse_mask(value, n, line)?);
            }
            other => {
                return Err(parse_err(line, format!("unknown directive `{other}`")));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "file has no `points:` line"))?;
    opens.insert(0);
    opens.insert(if n == 0 { 0 } else { (1u32 << n) - 1 });
    let space = FiniteSpace::new(n, opens)?;
    Ok((space, pieces))
}

/// Parses a poset description: generating `le:` relations (closed off
/// reflexively and transitively) and the `enum:` line listing the designated
/// cofinal subset in order.
pub fn parse_poset(text: &str) -> Result<EnumeratedPoset, FiniteTopError> {
    let mut n: Option<usize> = None;
    let mut relations: Vec<(usize, usize)> = Vec::new();
    let mut enumeration: Option<(Vec<usize>, usize)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let Some((key, value)) = directive(raw, line)? else {
            continue;
        };
        match key {
            "points" => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate `points:` line"));
                }
                n = Some(parse_point_count(value, line)?);
            }
            "le" => {
                let n = n.ok_or_else(|| parse_err(line, "`points:` must come first"))?;
                let items: Vec<&str> = value.split_whitespace().collect();
                if items.len() != 2 {
                    return Err(parse_err(line, "`le:` takes exactly two elements"));
                }
                relations.push((
                    parse_point(items[0], n, line)?,
                    parse_point(items[1], n, line)?,
                ));
            }
            "enum" => {
                let n = n.ok_or_else(|| parse_err(line, "`points:` must come first"))?;
                if enumeration.is_some() {
                    return Err(parse_err(line, "duplicate `enum:` line"));
                }
                let elements = value
                    .split_whitespace()
                    .map(|item| parse_point(item, n, line))
                    .collect::<Result<Vec<usize>, FiniteTopError>>()?;
                enumeration = Some((elements, line));
            }
            other => {
                return Err(parse_err(line, format!("unknown directive `{other}`")));
            }
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "file has no `points:` line"))?;
    let (elements, _) = enumeration.ok_or_else(|| parse_err(0, "file has no `enum:` line"))?;
    EnumeratedPoset::new(n, &relations, elements)
}
