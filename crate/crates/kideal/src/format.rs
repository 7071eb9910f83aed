//! Plain-text interchange format for semiring tables.
//!
//! ```text
//! # comments and blank lines are ignored
//! semiring Z4
//! order 4
//! elements 0 1 2 3
//! zero 0
//! one 1
//! add
//! 0 1 2 3
//! 1 2 3 0
//! 2 3 0 1
//! 3 0 1 2
//! mul
//! 0 0 0 0
//! 0 1 2 3
//! 0 2 0 2
//! 0 3 2 1
//! end
//! ```
//!
//! Table entries are element names, not indices.  Parsing validates the
//! axioms and normalizes the carrier (zero to index 0, one to index 1);
//! [`ParseOutcome::relabeled`] records whether that moved anything.
//! Serializing a normalized semiring and parsing it back is the identity,
//! byte for byte.

use crate::error::{Error, ParseError, Result};
use crate::semiring::FiniteSemiring;

/// Result of parsing one semiring file.
#[derive(Debug, Clone)]
pub struct ParseOutcome {
    pub ring: FiniteSemiring,
    /// True when normalization permuted the carrier, i.e. the file listed
    /// `zero`/`one` away from the first two positions.
    pub relabeled: bool,
}

/// The fields of a semiring file after the syntax pass only: tables are
/// index arrays in file order, nothing has been normalized, and no axiom
/// has been checked.  This is what `validate` works on, so that a file
/// describing a non-semiring still gets a per-axiom report instead of a
/// construction failure.
#[derive(Debug, Clone)]
pub struct RawSemiringFile {
    pub name: String,
    pub element_names: Vec<String>,
    pub add: Vec<usize>,
    pub mul: Vec<usize>,
    pub zero: usize,
    pub one: usize,
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse(ParseError {
        line,
        msg: msg.into(),
    })
}

struct Lines<'a> {
    iter: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            iter: text.lines().enumerate(),
        }
    }

    /// Next significant line as `(1-based number, trimmed content)`.
    fn next(&mut self) -> Option<(usize, &'a str)> {
        for (idx, raw) in self.iter.by_ref() {
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            return Some((idx + 1, trimmed));
        }
        None
    }
}

fn expect_keyword<'a>(lines: &mut Lines<'a>, keyword: &str) -> Result<(usize, &'a str)> {
    match lines.next() {
        Some((n, content)) => {
            if let Some(rest) = content.strip_prefix(keyword) {
                if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                    return Ok((n, rest.trim()));
                }
            }
            Err(err(n, format!("expected `{keyword}`, found `{content}`")))
        }
        None => Err(err(0, format!("unexpected end of input, expected `{keyword}`"))),
    }
}

/// Parses the text format.  Errors carry the 1-based line number of the
/// offending line (line 0 for premature end of input).
pub fn parse(text: &str) -> Result<ParseOutcome> {
    let raw = parse_raw(text)?;
    let (ring, relabeled) = FiniteSemiring::from_raw(
        &raw.name,
        raw.element_names,
        raw.add,
        raw.mul,
        raw.zero,
        raw.one,
    )?;
    Ok(ParseOutcome { ring, relabeled })
}

/// The syntax pass of [`parse`]: reads the file shape and resolves element
/// names to indices, but does not validate axioms or normalize.
pub fn parse_raw(text: &str) -> Result<RawSemiringFile> {
    let mut lines = Lines::new(text);

    let (n_name, name) = expect_keyword(&mut lines, "semiring")?;
    if name.is_empty() {
        return Err(err(n_name, "`semiring` requires a name"));
    }
    let name = name.to_string();

    let (n_order, order_str) = expect_keyword(&mut lines, "order")?;
    let order: usize = order_str
        .parse()
        .map_err(|_| err(n_order, format!("`order` requires a positive integer, found `{order_str}`")))?;
    if order == 0 {
        return Err(err(n_order, "`order` must be at least 1"));
    }

    let (n_elems, elems_str) = expect_keyword(&mut lines, "elements")?;
    let names: Vec<String> = elems_str.split_whitespace().map(str::to_string).collect();
    if names.len() != order {
        return Err(err(
            n_elems,
            format!("expected {order} element names, found {}", names.len()),
        ));
    }
    for (i, nm) in names.iter().enumerate() {
        if names[..i].contains(nm) {
            return Err(err(n_elems, format!("duplicate element name `{nm}`")));
        }
    }
    let index_of = |line: usize, token: &str| -> Result<usize> {
        names
            .iter()
            .position(|n| n == token)
            .ok_or_else(|| err(line, format!("unknown element name `{token}`")))
    };

    let (n_zero, zero_str) = expect_keyword(&mut lines, "zero")?;
    let zero = index_of(n_zero, zero_str)?;
    let (n_one, one_str) = expect_keyword(&mut lines, "one")?;
    let one = index_of(n_one, one_str)?;

    let mut read_table = |keyword: &str| -> Result<Vec<usize>> {
        let (n_kw, rest) = expect_keyword(&mut lines, keyword)?;
        if !rest.is_empty() {
            return Err(err(n_kw, format!("`{keyword}` takes no arguments")));
        }
        let mut table = Vec::with_capacity(order * order);
        for row in 0..order {
            let (n_row, content) = lines
                .next()
                .ok_or_else(|| err(0, format!("unexpected end of input in `{keyword}` row {row}")))?;
            let entries: Vec<&str> = content.split_whitespace().collect();
            if entries.len() != order {
                return Err(err(
                    n_row,
                    format!(
                        "`{keyword}` row {row} has {} entries, expected {order}",
                        entries.len()
                    ),
                ));
            }
            for token in entries {
                table.push(index_of(n_row, token)?);
            }
        }
        Ok(table)
    };

    let add = read_table("add")?;
    let mul = read_table("mul")?;

    expect_keyword(&mut lines, "end")?;
    if let Some((n, content)) = lines.next() {
        return Err(err(n, format!("unexpected content after `end`: `{content}`")));
    }

    Ok(RawSemiringFile {
        name,
        element_names: names,
        add,
        mul,
        zero,
        one,
    })
}

/// Serializes a semiring in the text format, in normalized carrier order.
pub fn to_text(ring: &FiniteSemiring) -> String {
    let n = ring.order();
    let mut out = String::new();
    out.push_str(&format!("semiring {}\n", ring.name()));
    out.push_str(&format!("order {n}\n"));
    out.push_str(&format!("elements {}\n", ring.element_names().join(" ")));
    out.push_str(&format!("zero {}\n", ring.element_name(ring.zero())));
    out.push_str(&format!("one {}\n", ring.element_name(ring.one())));
    for (label, op) in [("add", true), ("mul", false)] {
        out.push_str(label);
        out.push('\n');
        for x in 0..n {
            for y in 0..n {
                if y > 0 {
                    out.push(' ');
                }
                let v = if op { ring.add(x, y) } else { ring.mul(x, y) };
                out.push_str(ring.element_name(v));
            }
            out.push('\n');
        }
    }
    out.push_str("end\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z4_TEXT: &str = "\
semiring Z4
order 4
elements 0 1 2 3
zero 0
one 1
add
0 1 2 3
1 2 3 0
2 3 0 1
3 0 1 2
mul
0 0 0 0
0 1 2 3
0 2 0 2
0 3 2 1
end
";

    #[test]
    fn parses_ring_mod_four() {
        let outcome = parse(Z4_TEXT).unwrap();
        assert!(!outcome.relabeled);
        assert_eq!(outcome.ring, FiniteSemiring::ring_mod(4).unwrap());
    }

    #[test]
    fn round_trip_is_byte_exact() {
        let outcome = parse(Z4_TEXT).unwrap();
        assert_eq!(to_text(&outcome.ring), Z4_TEXT);
    }

    #[test]
    fn comments_and_blank_lines_are_ignored() {
        let text = format!("# header\n\n{}# trailing comment\n", Z4_TEXT);
        assert!(parse(&text).is_ok());
    }

    #[test]
    fn relabeling_is_recorded() {
        let text = "\
semiring B
order 2
elements t f
zero f
one t
add
t t
t f
mul
t f
f f
end
";
        let outcome = parse(text).unwrap();
        assert!(outcome.relabeled);
        assert_eq!(outcome.ring.element_names(), &["f", "t"]);
        assert_eq!(
            outcome.ring.add_table(),
            FiniteSemiring::boolean().add_table()
        );
    }

    #[test]
    fn error_carries_line_number() {
        let text = "semiring X\norder 2\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1 oops\nmul\n0 0\n0 1\nend\n";
        match parse(text).unwrap_err() {
            crate::error::Error::Parse(e) => {
                assert_eq!(e.line, 8);
                assert!(e.msg.contains("oops"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn short_row_is_rejected() {
        let text = "semiring X\norder 2\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1\nmul\n0 0\n0 1\nend\n";
        match parse(text).unwrap_err() {
            crate::error::Error::Parse(e) => assert_eq!(e.line, 8),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn axiom_failure_is_not_a_parse_error() {
        // 1+1=0 but 1·1=0 as well: mul identity fails.
        let text = "semiring X\norder 2\nelements 0 1\nzero 0\none 1\nadd\n0 1\n1 0\nmul\n0 0\n0 0\nend\n";
        assert!(matches!(parse(text).unwrap_err(), crate::error::Error::Axioms(_)));
    }

    #[test]
    fn missing_end_is_reported() {
        let text = "semiring X\norder 1\nelements 0\nzero 0\none 0\nadd\n0\nmul\n0\n";
        match parse(text).unwrap_err() {
            crate::error::Error::Parse(e) => assert_eq!(e.line, 0),
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
