//! Plain-text scaling scheme files.
//!
//! A scheme file is a sequence of column blocks. Each block opens with
//! `column <name> bins|categories|thresholds` and is followed by one
//! line per output attribute, matching the block kind:
//!
//! ```text
//! # age bands, whole years
//! column age bins
//! bin a -inf 17
//! bin b 17 39
//! bin c 39 inf
//! column sex categories
//! category male m
//! category female f
//! ```
//!
//! `bin` takes the attribute name and the exclusive lower and inclusive
//! upper bounds (`-inf`/`inf` allowed); `category` maps a cell value to
//! an attribute; `threshold` takes the attribute name and its cutoff.
//! Blank lines and lines starting with `#` are skipped. Names must not
//! contain whitespace. Semantic rules (bin ordering, unique attributes)
//! are enforced when the parsed scheme is validated.

use crate::error::{Error, Result};
use crate::scaling::{Bin, CategoryMap, ColumnRule, RuleKind, ScalingScheme, Threshold};

fn malformed(line: usize, detail: impl Into<String>) -> Error {
    Error::MalformedScheme {
        line,
        detail: detail.into(),
    }
}

fn parse_bound(token: &str, line: usize) -> Result<f64> {
    let value: f64 = token
        .parse()
        .map_err(|_| malformed(line, format!("{:?} is not a number", token)))?;
    if value.is_nan() {
        return Err(malformed(line, "NaN is not a valid bound"));
    }
    Ok(value)
}

/// Parses a scheme file and validates the resulting scheme.
pub fn parse_scheme(text: &str) -> Result<ScalingScheme> {
    let mut rules: Vec<ColumnRule> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens[0] {
            "column" => {
                let [_, name, kind] = tokens[..] else {
                    return Err(malformed(
                        line,
                        "expected: column <name> bins|categories|thresholds",
                    ));
                };
                let kind = match kind {
                    "bins" => RuleKind::IntervalBins(Vec::new()),
                    "categories" => RuleKind::Categorical(Vec::new()),
                    "thresholds" => RuleKind::OrdinalThresholds(Vec::new()),
                    other => return Err(malformed(line, format!("unknown rule kind {:?}", other))),
                };
                rules.push(ColumnRule::new(name, kind));
            }
            "bin" => {
                let [_, attribute, lower, upper] = tokens[..] else {
                    return Err(malformed(line, "expected: bin <attribute> <lower> <upper>"));
                };
                let bin = Bin::new(
                    attribute,
                    parse_bound(lower, line)?,
                    parse_bound(upper, line)?,
                );
                match rules.last_mut().map(|r| &mut r.kind) {
                    Some(RuleKind::IntervalBins(bins)) => bins.push(bin),
                    _ => return Err(malformed(line, "bin outside a `column ... bins` block")),
                }
            }
            "category" => {
                let [_, value, attribute] = tokens[..] else {
                    return Err(malformed(line, "expected: category <value> <attribute>"));
                };
                match rules.last_mut().map(|r| &mut r.kind) {
                    Some(RuleKind::Categorical(maps)) => {
                        maps.push(CategoryMap::new(value, attribute))
                    }
                    _ => {
                        return Err(malformed(
                            line,
                            "category outside a `column ... categories` block",
                        ))
                    }
                }
            }
            "threshold" => {
                let [_, attribute, value] = tokens[..] else {
                    return Err(malformed(line, "expected: threshold <attribute> <value>"));
                };
                let threshold = Threshold::new(attribute, parse_bound(value, line)?);
                match rules.last_mut().map(|r| &mut r.kind) {
                    Some(RuleKind::OrdinalThresholds(thresholds)) => thresholds.push(threshold),
                    _ => {
                        return Err(malformed(
                            line,
                            "threshold outside a `column ... thresholds` block",
                        ))
                    }
                }
            }
            other => return Err(malformed(line, format!("unknown directive {:?}", other))),
        }
    }

    ScalingScheme::new(rules)
}
