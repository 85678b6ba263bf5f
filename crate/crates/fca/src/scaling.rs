//! Conceptual scaling: turning many-valued tables into formal contexts.
//!
//! A [`ManyValuedTable`] holds raw tabular data with numeric and
//! categorical columns; a categorical cell may carry several values at
//! once (a person charged with two crime types gets both codes in one
//! cell). A [`ScalingScheme`] assigns each column a rule translating its
//! values into binary attributes, and [`scale`] applies the scheme row by
//! row. Two builtin schemes cover the bundled crime and geographic data.

use std::collections::{HashMap, HashSet};

use crate::context::FormalContext;
use crate::error::{Error, Result};

/// Declared kind of a table column.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColumnKind {
    Numeric,
    Categorical,
}

/// One cell of a many-valued table.
///
/// `Categories` holds every value present in the cell; it must not be
/// empty (an empty cell is a missing value, which tables reject).
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Number(f64),
    Categories(Vec<String>),
}

impl Cell {
    /// Convenience constructor for a single-valued categorical cell.
    pub fn category(value: impl Into<String>) -> Cell {
        Cell::Categories(vec![value.into()])
    }
}

/// A raw data table: named rows, typed columns, one cell per pair.
#[derive(Debug, Clone, PartialEq)]
pub struct ManyValuedTable {
    row_names: Vec<String>,
    columns: Vec<(String, ColumnKind)>,
    cells: Vec<Vec<Cell>>,
}

impl ManyValuedTable {
    /// Validates shape and content: unique non-empty names, a full
    /// `rows x columns` grid, finite numbers, kind-consistent cells.
    pub fn new(
        row_names: impl IntoIterator<Item = impl Into<String>>,
        columns: Vec<(String, ColumnKind)>,
        cells: Vec<Vec<Cell>>,
    ) -> Result<ManyValuedTable> {
        let row_names: Vec<String> = row_names.into_iter().map(Into::into).collect();
        check_unique(&row_names)?;
        check_unique_names(columns.iter().map(|(name, _)| name.as_str()))?;

        if cells.len() != row_names.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} rows of cells for {} row names",
                cells.len(),
                row_names.len()
            )));
        }
        for (row, row_cells) in row_names.iter().zip(&cells) {
            if row_cells.len() != columns.len() {
                return Err(Error::DimensionMismatch(format!(
                    "row {} has {} cells for {} columns",
                    row,
                    row_cells.len(),
                    columns.len()
                )));
            }
            for ((column, kind), cell) in columns.iter().zip(row_cells) {
                match (kind, cell) {
                    (ColumnKind::Numeric, Cell::Number(v)) => {
                        if !v.is_finite() {
                            return Err(Error::NonNumericCell {
                                column: column.clone(),
                                value: v.to_string(),
                            });
                        }
                    }
                    (ColumnKind::Categorical, Cell::Categories(values)) => {
                        if values.is_empty() {
                            return Err(Error::MissingCell {
                                row: row.clone(),
                                column: column.clone(),
                            });
                        }
                    }
                    _ => {
                        return Err(Error::CellKindMismatch {
                            row: row.clone(),
                            column: column.clone(),
                        });
                    }
                }
            }
        }

        Ok(ManyValuedTable {
            row_names,
            columns,
            cells,
        })
    }

    pub fn row_names(&self) -> &[String] {
        &self.row_names
    }

    pub fn columns(&self) -> &[(String, ColumnKind)] {
        &self.columns
    }

    pub fn cell(&self, row: usize, column: usize) -> &Cell {
        &self.cells[row][column]
    }
}

fn check_unique(names: &[String]) -> Result<()> {
    check_unique_names(names.iter().map(String::as_str))
}

fn check_unique_names<'a>(names: impl Iterator<Item = &'a str>) -> Result<()> {
    let mut seen = HashSet::new();
    for name in names {
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        if !seen.insert(name.to_owned()) {
            return Err(Error::DuplicateName(name.to_owned()));
        }
    }
    Ok(())
}

/// An interval bin `(lower, upper]`: lower-exclusive, upper-inclusive.
/// Infinite bounds are allowed.
#[derive(Debug, Clone, PartialEq)]
pub struct Bin {
    pub attribute: String,
    pub lower: f64,
    pub upper: f64,
}

impl Bin {
    pub fn new(attribute: impl Into<String>, lower: f64, upper: f64) -> Bin {
        Bin {
            attribute: attribute.into(),
            lower,
            upper,
        }
    }

    fn contains(&self, v: f64) -> bool {
        self.lower < v && v <= self.upper
    }
}

/// Maps one category value to one output attribute.
#[derive(Debug, Clone, PartialEq)]
pub struct CategoryMap {
    pub value: String,
    pub attribute: String,
}

impl CategoryMap {
    pub fn new(value: impl Into<String>, attribute: impl Into<String>) -> CategoryMap {
        CategoryMap {
            value: value.into(),
            attribute: attribute.into(),
        }
    }
}

/// One output attribute with its threshold; a value marks every
/// attribute whose threshold is at least the value.
#[derive(Debug, Clone, PartialEq)]
pub struct Threshold {
    pub attribute: String,
    pub threshold: f64,
}

impl Threshold {
    pub fn new(attribute: impl Into<String>, threshold: f64) -> Threshold {
        Threshold {
            attribute: attribute.into(),
            threshold,
        }
    }
}

/// How one column's values translate into attributes.
#[derive(Debug, Clone, PartialEq)]
pub enum RuleKind {
    /// One output attribute per known category value.
    Categorical(Vec<CategoryMap>),
    /// Ordered, non-overlapping `(lower, upper]` bins; each value lands
    /// in exactly one.
    IntervalBins(Vec<Bin>),
    /// Strictly increasing thresholds; a value marks every attribute
    /// with threshold >= value, so marks are upward-closed.
    OrdinalThresholds(Vec<Threshold>),
}

/// A rule bound to the input column it scales.
#[derive(Debug, Clone, PartialEq)]
pub struct ColumnRule {
    pub column: String,
    pub kind: RuleKind,
}

impl ColumnRule {
    pub fn new(column: impl Into<String>, kind: RuleKind) -> ColumnRule {
        ColumnRule {
            column: column.into(),
            kind,
        }
    }

    fn output_attributes(&self) -> Vec<&str> {
        match &self.kind {
            RuleKind::Categorical(maps) => maps.iter().map(|m| m.attribute.as_str()).collect(),
            RuleKind::IntervalBins(bins) => bins.iter().map(|b| b.attribute.as_str()).collect(),
            RuleKind::OrdinalThresholds(ts) => ts.iter().map(|t| t.attribute.as_str()).collect(),
        }
    }
}

/// A validated set of column rules with globally unique output attributes.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalingScheme {
    rules: Vec<ColumnRule>,
}

impl ScalingScheme {
    pub fn new(rules: Vec<ColumnRule>) -> Result<ScalingScheme> {
        let mut columns = HashSet::new();
        let mut attributes = HashSet::new();
        for rule in &rules {
            if rule.column.is_empty() {
                return Err(Error::InvalidScheme("empty column name".into()));
            }
            if !columns.insert(rule.column.clone()) {
                return Err(Error::InvalidScheme(format!(
                    "two rules for column {}",
                    rule.column
                )));
            }
            let outputs = rule.output_attributes();
            if outputs.is_empty() {
                return Err(Error::InvalidScheme(format!(
                    "rule for column {} produces no attributes",
                    rule.column
                )));
            }
            for attr in outputs {
                if attr.is_empty() {
                    return Err(Error::InvalidScheme(format!(
                        "empty attribute name in rule for column {}",
                        rule.column
                    )));
                }
                if !attributes.insert(attr.to_owned()) {
                    return Err(Error::InvalidScheme(format!(
                        "attribute {} appears twice in the scheme",
                        attr
                    )));
                }
            }
            match &rule.kind {
                RuleKind::Categorical(maps) => {
                    let mut values = HashSet::new();
                    for map in maps {
                        if map.value.is_empty() {
                            return Err(Error::InvalidScheme(format!(
                                "empty category value in rule for column {}",
                                rule.column
                            )));
                        }
                        if !values.insert(map.value.clone()) {
                            return Err(Error::InvalidScheme(format!(
                                "category {} mapped twice in column {}",
                                map.value, rule.column
                            )));
                        }
                    }
                }
                RuleKind::IntervalBins(bins) => {
                    for bin in bins {
                        if bin.lower.is_nan() || bin.upper.is_nan() || bin.lower >= bin.upper {
                            return Err(Error::InvalidScheme(format!(
                                "bin {} in column {} has an empty or invalid range",
                                bin.attribute, rule.column
                            )));
                        }
                    }
                    for pair in bins.windows(2) {
                        if pair[1].lower < pair[0].upper {
                            return Err(Error::InvalidScheme(format!(
                                "bins {} and {} in column {} overlap or are out of order",
                                pair[0].attribute, pair[1].attribute, rule.column
                            )));
                        }
                    }
                }
                RuleKind::OrdinalThresholds(thresholds) => {
                    for t in thresholds {
                        if !t.threshold.is_finite() {
                            return Err(Error::InvalidScheme(format!(
                                "threshold {} in column {} is not finite",
                                t.attribute, rule.column
                            )));
                        }
                    }
                    for pair in thresholds.windows(2) {
                        if pair[1].threshold <= pair[0].threshold {
                            return Err(Error::InvalidScheme(format!(
                                "thresholds in column {} must strictly increase",
                                rule.column
                            )));
                        }
                    }
                }
            }
        }
        Ok(ScalingScheme { rules })
    }

    pub fn rules(&self) -> &[ColumnRule] {
        &self.rules
    }

    /// Every output attribute of the scheme, in declaration order.
    pub fn attributes(&self) -> Vec<&str> {
        self.rules
            .iter()
            .flat_map(|rule| rule.output_attributes())
            .collect()
    }
}

/// Applies `scheme` to `table`, producing a formal context whose objects
/// are the table rows and whose attributes are all of the scheme's
/// outputs in scheme order. Rules for columns absent from the table are
/// allowed and yield empty attribute columns.
pub fn scale(table: &ManyValuedTable, scheme: &ScalingScheme) -> Result<FormalContext> {
    let rule_by_column: HashMap<&str, &ColumnRule> = scheme
        .rules
        .iter()
        .map(|rule| (rule.column.as_str(), rule))
        .collect();

    let mut pairs: Vec<(String, String)> = Vec::new();
    for (r, row) in table.row_names().iter().enumerate() {
        for (c, (column, kind)) in table.columns().iter().enumerate() {
            let rule = rule_by_column
                .get(column.as_str())
                .ok_or_else(|| Error::UncoveredColumn(column.clone()))?;
            let marks = apply_rule(rule, *kind, column, table.cell(r, c))?;
            for attr in marks {
                pairs.push((row.clone(), attr.to_owned()));
            }
        }
    }

    FormalContext::build(
        table.row_names().iter().map(String::as_str),
        scheme.attributes(),
        pairs.iter().map(|(g, m)| (g.as_str(), m.as_str())),
    )
}

fn apply_rule<'a>(
    rule: &'a ColumnRule,
    kind: ColumnKind,
    column: &str,
    cell: &Cell,
) -> Result<Vec<&'a str>> {
    match (&rule.kind, cell) {
        (RuleKind::IntervalBins(bins), Cell::Number(v)) => {
            debug_assert_eq!(kind, ColumnKind::Numeric);
            let bin =
                bins.iter()
                    .find(|bin| bin.contains(*v))
                    .ok_or_else(|| Error::ValueOutOfRange {
                        column: column.to_owned(),
                        value: *v,
                    })?;
            Ok(vec![bin.attribute.as_str()])
        }
        (RuleKind::OrdinalThresholds(thresholds), Cell::Number(v)) => {
            debug_assert_eq!(kind, ColumnKind::Numeric);
            let marks: Vec<&str> = thresholds
                .iter()
                .filter(|t| t.threshold >= *v)
                .map(|t| t.attribute.as_str())
                .collect();
            if marks.is_empty() {
                return Err(Error::ValueOutOfRange {
                    column: column.to_owned(),
                    value: *v,
                });
            }
            Ok(marks)
        }
        (RuleKind::Categorical(maps), Cell::Categories(values)) => {
            debug_assert_eq!(kind, ColumnKind::Categorical);
            let mut marks = Vec::with_capacity(values.len());
            for value in values {
                let map = maps.iter().find(|m| &m.value == value).ok_or_else(|| {
                    Error::UnknownCategory {
                        column: column.to_owned(),
                        value: value.clone(),
                    }
                })?;
                marks.push(map.attribute.as_str());
            }
            Ok(marks)
        }
        _ => Err(Error::InvalidScheme(format!(
            "rule kind for column {} does not match the column's cells",
            column
        ))),
    }
}

/// The scheme behind the bundled crime context: age bins, sex and crime
/// categories, and location categories.
///
/// Ages are whole years, so the conventional bands under 18, 18 to 39,
/// and 40 up are expressed as the bins `(-inf, 17]`, `(17, 39]`,
/// `(39, inf)`.
pub fn builtin_crime_scheme() -> ScalingScheme {
    ScalingScheme::new(vec![
        ColumnRule::new(
            "age",
            RuleKind::IntervalBins(vec![
                Bin::new("a", f64::NEG_INFINITY, 17.0),
                Bin::new("b", 17.0, 39.0),
                Bin::new("c", 39.0, f64::INFINITY),
            ]),
        ),
        ColumnRule::new(
            "sex",
            RuleKind::Categorical(vec![
                CategoryMap::new("male", "m"),
                CategoryMap::new("female", "f"),
            ]),
        ),
        ColumnRule::new(
            "crimes",
            RuleKind::Categorical(vec![
                CategoryMap::new("drugs", "c1"),
                CategoryMap::new("rape", "c2"),
                CategoryMap::new("burglary", "c3"),
                CategoryMap::new("robbery", "c4"),
            ]),
        ),
        ColumnRule::new(
            "location",
            RuleKind::Categorical(vec![
                CategoryMap::new("g1", "g1"),
                CategoryMap::new("g2", "g2"),
                CategoryMap::new("g3", "g3"),
                CategoryMap::new("g4", "g4"),
                CategoryMap::new("g5", "g5"),
            ]),
        ),
    ])
    .expect("builtin scheme is valid")
}

/// The scheme behind the bundled geographic context: quarter bins for the
/// income index and fifth bins for the education and population indexes,
/// all on `(0, 1]`.
pub fn builtin_geo_scheme() -> ScalingScheme {
    // bounds are computed by division so they equal the parsed decimals
    // 0.2, 0.4, 0.6, 0.8 bit-for-bit
    fn bins(names: [&str; 4]) -> Vec<Bin> {
        names
            .iter()
            .enumerate()
            .map(|(i, name)| Bin::new(*name, i as f64 / 4.0, (i as f64 + 1.0) / 4.0))
            .collect()
    }
    fn fifths(names: [&str; 5]) -> Vec<Bin> {
        names
            .iter()
            .enumerate()
            .map(|(i, name)| Bin::new(*name, i as f64 / 5.0, (i as f64 + 1.0) / 5.0))
            .collect()
    }
    ScalingScheme::new(vec![
        ColumnRule::new("income", RuleKind::IntervalBins(bins(["a", "b", "c", "d"]))),
        ColumnRule::new(
            "education",
            RuleKind::IntervalBins(fifths(["e", "f", "g", "h", "i"])),
        ),
        ColumnRule::new(
            "population",
            RuleKind::IntervalBins(fifths(["j", "k", "l", "m", "n"])),
        ),
    ])
    .expect("builtin scheme is valid")
}
