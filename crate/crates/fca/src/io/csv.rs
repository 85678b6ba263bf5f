//! CSV input and output.
//!
//! The table format is deliberately small: comma-separated fields with no
//! quoting or escaping, so names must avoid commas. The header's first
//! field titles the row-name column; every other field reads
//! `name:kind` with kind `numeric` or `categorical`. Categorical cells
//! may hold several values separated by `;`.
//!
//! Report serializers ([`crosstab_csv`], [`hotspots_csv`],
//! [`plotdata_csv`]) emit `\n`-terminated lines and are deterministic.

use crate::analytics::{CrossTab, HotspotReport};
use crate::error::{Error, Result};
use crate::scaling::{Cell, ColumnKind, ManyValuedTable};

/// Parses a many-valued table from the crate's CSV dialect.
pub fn parse_csv_table(text: &str) -> Result<ManyValuedTable> {
    let mut lines = text
        .lines()
        .map(|l| l.strip_suffix('\r').unwrap_or(l))
        .enumerate();

    let (_, header) = lines.next().ok_or(Error::EmptyHeader)?;
    if header.is_empty() {
        return Err(Error::EmptyHeader);
    }
    let header_fields: Vec<&str> = header.split(',').collect();
    let mut columns: Vec<(String, ColumnKind)> = Vec::new();
    for field in &header_fields[1..] {
        let (name, kind) = field.split_once(':').ok_or_else(|| {
            Error::MalformedHeader(format!(
                "column declaration {:?} is missing its :kind suffix",
                field
            ))
        })?;
        let kind = match kind {
            "numeric" => ColumnKind::Numeric,
            "categorical" => ColumnKind::Categorical,
            other => {
                return Err(Error::MalformedHeader(format!(
                    "unknown column kind {:?} for column {:?}",
                    other, name
                )))
            }
        };
        columns.push((name.to_owned(), kind));
    }

    let mut row_names: Vec<String> = Vec::new();
    let mut cells: Vec<Vec<Cell>> = Vec::new();
    for (index, line) in lines {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != header_fields.len() {
            return Err(Error::RaggedRow { line: index + 1 });
        }
        row_names.push(fields[0].to_owned());
        let mut row = Vec::with_capacity(columns.len());
        for ((name, kind), value) in columns.iter().zip(&fields[1..]) {
            let cell = match kind {
                ColumnKind::Numeric => {
                    let number: f64 = value.parse().map_err(|_| Error::NonNumericCell {
                        column: name.clone(),
                        value: (*value).to_owned(),
                    })?;
                    if !number.is_finite() {
                        return Err(Error::NonNumericCell {
                            column: name.clone(),
                            value: (*value).to_owned(),
                        });
                    }
                    Cell::Number(number)
                }
                ColumnKind::Categorical => Cell::Categories(
                    value
                        .split(';')
                        .filter(|v| !v.is_empty())
                        .map(str::to_owned)
                        .collect(),
                ),
            };
            row.push(cell);
        }
        cells.push(row);
    }

    ManyValuedTable::new(row_names, columns, cells)
}

/// Serializes a cross-tab in the report layout: a header with a trailing
/// `Total` column, one row per location, and a closing `Total` row.
pub fn crosstab_csv(xt: &CrossTab) -> String {
    let mut out = String::new();
    out.push(',');
    for label in xt.col_labels() {
        out.push_str(label);
        out.push(',');
    }
    out.push_str("Total\n");
    for (r, label) in xt.row_labels().iter().enumerate() {
        out.push_str(label);
        for c in 0..xt.col_labels().len() {
            out.push(',');
            out.push_str(&xt.count(r, c).to_string());
        }
        out.push(',');
        out.push_str(&xt.row_totals()[r].to_string());
        out.push('\n');
    }
    out.push_str("Total");
    for total in xt.col_totals() {
        out.push(',');
        out.push_str(&total.to_string());
    }
    out.push(',');
    out.push_str(&xt.grand_total().to_string());
    out.push('\n');
    out
}

/// Per-location crime counts in cross-tab row order, for bar charts.
pub fn plotdata_csv(xt: &CrossTab) -> String {
    let mut out = String::from("location,count\n");
    for (label, total) in xt.row_labels().iter().zip(xt.row_totals()) {
        out.push_str(label);
        out.push(',');
        out.push_str(&total.to_string());
        out.push('\n');
    }
    out
}

/// Hotspot ranking, highest score first.
pub fn hotspots_csv(report: &HotspotReport) -> String {
    let mut out = String::from("location,score\n");
    for (label, score) in report.ranking() {
        out.push_str(label);
        out.push(',');
        out.push_str(&score.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analytics::{cross_tab, hotspots};
    use crate::scaling::{builtin_crime_scheme, scale};
    use crate::testdata;

    const CRIME_CSV: &str = "\
person,age:numeric,sex:categorical,crimes:categorical,location:categorical
P1,16,male,drugs;burglary,g1
P2,17,female,drugs;robbery,g3
P3,25,female,drugs;burglary,g5
P4,16,male,drugs;rape,g3
P5,45,male,drugs;rape,g1
P6,30,male,rape;robbery,g1
P7,17,female,burglary,g1
P8,35,female,robbery,g2
P9,16,male,drugs;robbery,g4
";

    #[test]
    fn crime_csv_scales_to_the_crime_context() {
        let table = parse_csv_table(CRIME_CSV).unwrap();
        assert_eq!(table.row_names().len(), 9);
        let ctx = scale(&table, &builtin_crime_scheme()).unwrap();
        assert_eq!(ctx, testdata::crime_context());
    }

    #[test]
    fn header_only_gives_zero_rows() {
        let table = parse_csv_table("id,x:numeric\n").unwrap();
        assert_eq!(table.row_names().len(), 0);
        assert_eq!(table.columns().len(), 1);
    }

    #[test]
    fn multi_valued_cells_split_on_semicolons() {
        let table = parse_csv_table("id,tags:categorical\nr,a;b;c\n").unwrap();
        assert_eq!(
            table.cell(0, 0),
            &Cell::Categories(vec!["a".into(), "b".into(), "c".into()])
        );
    }

    #[test]
    fn header_errors() {
        assert!(matches!(parse_csv_table(""), Err(Error::EmptyHeader)));
        assert!(matches!(
            parse_csv_table("\nr,1\n"),
            Err(Error::EmptyHeader)
        ));
        assert!(matches!(
            parse_csv_table("id,x\nr,1\n"),
            Err(Error::MalformedHeader(_))
        ));
        assert!(matches!(
            parse_csv_table("id,x:integer\nr,1\n"),
            Err(Error::MalformedHeader(_))
        ));
    }

    #[test]
    fn row_errors() {
        match parse_csv_table("id,x:numeric\nr,1,2\n") {
            Err(Error::RaggedRow { line }) => assert_eq!(line, 2),
            other => panic!("expected RaggedRow, got {:?}", other),
        }
        assert!(matches!(
            parse_csv_table("id,x:numeric\nr\n"),
            Err(Error::RaggedRow { .. })
        ));
        assert!(matches!(
            parse_csv_table("id,x:numeric\nr,abc\n"),
            Err(Error::NonNumericCell { column, value }) if column == "x" && value == "abc"
        ));
        assert!(matches!(
            parse_csv_table("id,x:numeric\nr,inf\n"),
            Err(Error::NonNumericCell { .. })
        ));
        // an empty categorical cell is a missing value
        assert!(matches!(
            parse_csv_table("id,t:categorical\nr,\n"),
            Err(Error::MissingCell { .. })
        ));
        // duplicate row names surface from table validation
        assert!(matches!(
            parse_csv_table("id,x:numeric\nr,1\nr,2\n"),
            Err(Error::DuplicateName(_))
        ));
    }

    #[test]
    fn crosstab_csv_layout() {
        let ctx = testdata::crime_context();
        let locations: Vec<String> = ["g1", "g2", "g3", "g4", "g5"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let crimes: Vec<String> = ["c1", "c2", "c3", "c4"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        let xt = cross_tab(&ctx, &locations, &crimes).unwrap();
        let expected = "\
,c1,c2,c3,c4,Total
g1,2,2,2,1,7
g2,0,0,0,1,1
g3,2,1,0,1,4
g4,1,0,0,1,2
g5,1,0,1,0,2
Total,6,3,3,4,16
";
        assert_eq!(crosstab_csv(&xt), expected);

        let expected_plot = "\
location,count
g1,7
g2,1
g3,4
g4,2
g5,2
";
        assert_eq!(plotdata_csv(&xt), expected_plot);

        let expected_hotspots = "\
location,score
g1,7
g3,4
g4,2
g5,2
g2,1
";
        assert_eq!(hotspots_csv(&hotspots(&xt)), expected_hotspots);
    }
}
