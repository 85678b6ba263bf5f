//! Burmeister CXT context files.
//!
//! Layout: a `B` line, a blank line, the object count, the attribute
//! count, a blank line, one object name per line, one attribute name per
//! line, then one incidence row per object made of exactly
//! attribute-count characters, `X` for incident and `.` for not.
//! [`write_cxt`] emits this canonically with `\n` endings; [`parse_cxt`]
//! additionally tolerates `\r\n` input and trailing blank lines.

use crate::context::FormalContext;
use crate::error::{Error, Result};

/// Serializes a context in canonical Burmeister form.
pub fn write_cxt(ctx: &FormalContext) -> String {
    let mut out = String::new();
    out.push_str("B\n\n");
    out.push_str(&ctx.object_count().to_string());
    out.push('\n');
    out.push_str(&ctx.attribute_count().to_string());
    out.push_str("\n\n");
    for name in ctx.object_names() {
        out.push_str(name);
        out.push('\n');
    }
    for name in ctx.attribute_names() {
        out.push_str(name);
        out.push('\n');
    }
    for g in 0..ctx.object_count() {
        for m in 0..ctx.attribute_count() {
            out.push(if ctx.incident(g, m) { 'X' } else { '.' });
        }
        out.push('\n');
    }
    out
}

struct Lines<'a> {
    lines: Vec<&'a str>,
    next: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Lines<'a> {
        Lines {
            lines: text
                .lines()
                .map(|l| l.strip_suffix('\r').unwrap_or(l))
                .collect(),
            next: 0,
        }
    }

    /// 1-based number of the line about to be read.
    fn number(&self) -> usize {
        self.next + 1
    }

    fn take(&mut self, what: &str) -> Result<&'a str> {
        let line = self
            .lines
            .get(self.next)
            .ok_or_else(|| Error::MalformedHeader(format!("file ends before {}", what)))?;
        self.next += 1;
        Ok(line)
    }

    fn take_blank(&mut self) -> Result<()> {
        let line = self.take("a separator line")?;
        if !line.is_empty() {
            return Err(Error::MalformedHeader(format!(
                "expected a blank separator line, found {:?}",
                line
            )));
        }
        Ok(())
    }

    fn take_count(&mut self, what: &str) -> Result<usize> {
        let line = self.take(what)?;
        line.parse().map_err(|_| {
            Error::MalformedHeader(format!(
                "{} must be a non-negative integer, found {:?}",
                what, line
            ))
        })
    }

    fn rest_is_blank(&self) -> bool {
        self.lines[self.next..].iter().all(|l| l.is_empty())
    }
}

/// Parses a Burmeister CXT document.
pub fn parse_cxt(text: &str) -> Result<FormalContext> {
    let mut lines = Lines::new(text);

    let magic = lines.take("the format tag")?;
    if magic != "B" {
        return Err(Error::MalformedHeader(format!(
            "first line must be \"B\", found {:?}",
            magic
        )));
    }
    lines.take_blank()?;
    let object_count = lines.take_count("the object count")?;
    let attribute_count = lines.take_count("the attribute count")?;
    lines.take_blank()?;

    let mut objects = Vec::with_capacity(object_count);
    for _ in 0..object_count {
        objects.push(lines.take("an object name")?);
    }
    let mut attributes = Vec::with_capacity(attribute_count);
    for _ in 0..attribute_count {
        attributes.push(lines.take("an attribute name")?);
    }

    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for g in 0..object_count {
        let line_number = lines.number();
        let row = match lines.take("an incidence row") {
            Ok(row) => row,
            Err(_) => {
                return Err(Error::DimensionMismatch(format!(
                    "{} incidence rows for {} objects",
                    g, object_count
                )))
            }
        };
        let mut width = 0;
        for (m, ch) in row.chars().enumerate() {
            match ch {
                'X' => pairs.push((g, m)),
                '.' => {}
                _ => {
                    return Err(Error::IllegalIncidenceChar {
                        line: line_number,
                        ch,
                    })
                }
            }
            width += 1;
        }
        if width != attribute_count {
            return Err(Error::DimensionMismatch(format!(
                "incidence row on line {} has {} marks for {} attributes",
                line_number, width, attribute_count
            )));
        }
    }

    if !lines.rest_is_blank() {
        return Err(Error::DimensionMismatch(format!(
            "unexpected content after the incidence rows, line {}",
            lines.number()
        )));
    }

    let named_pairs: Vec<(&str, &str)> = pairs
        .iter()
        .map(|&(g, m)| (objects[g], attributes[m]))
        .collect();
    FormalContext::build(objects, attributes, named_pairs)
}
