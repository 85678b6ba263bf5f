//! In-crate copies of the bundled sample datasets, for unit tests.
//!
//! The same data ships as fixture files under `fixtures/`; integration
//! tests load those and assert they agree with these constructors.

use crate::context::FormalContext;

pub(crate) const CRIME_ATTRIBUTES: [&str; 14] = [
    "a", "b", "c", "m", "f", "c1", "c2", "c3", "c4", "g1", "g2", "g3", "g4", "g5",
];

pub(crate) const CRIME_OBJECTS: [&str; 9] = ["P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"];

pub(crate) fn crime_rows() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("P1", vec!["a", "m", "c1", "c3", "g1"]),
        ("P2", vec!["a", "f", "c1", "c4", "g3"]),
        ("P3", vec!["b", "f", "c1", "c3", "g5"]),
        ("P4", vec!["a", "m", "c1", "c2", "g3"]),
        ("P5", vec!["c", "m", "c1", "c2", "g1"]),
        ("P6", vec!["b", "m", "c2", "c4", "g1"]),
        ("P7", vec!["a", "f", "c3", "g1"]),
        ("P8", vec!["b", "f", "c4", "g2"]),
        ("P9", vec!["a", "m", "c1", "c4", "g4"]),
    ]
}

/// The persons-by-crime-data sample context: nine persons described by age
/// band, sex, crime types, and geographic location.
pub(crate) fn crime_context() -> FormalContext {
    let pairs: Vec<(&str, &str)> = crime_rows()
        .into_iter()
        .flat_map(|(g, ms)| ms.into_iter().map(move |m| (g, m)))
        .collect();
    FormalContext::build(CRIME_OBJECTS, CRIME_ATTRIBUTES, pairs).unwrap()
}

pub(crate) const GEO_ATTRIBUTES: [&str; 14] = [
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n",
];

pub(crate) const GEO_OBJECTS: [&str; 5] = ["g1", "g2", "g3", "g4", "g5"];

pub(crate) fn geo_rows() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("g1", vec!["a", "e", "j"]),
        ("g2", vec!["b", "f", "k"]),
        ("g3", vec!["a", "e", "m"]),
        ("g4", vec!["a", "e", "n"]),
        ("g5", vec!["c", "f", "j"]),
    ]
}

/// The locations-by-economic-factors sample context: five locations binned
/// by income, education, and population index.
pub(crate) fn geo_context() -> FormalContext {
    let objects: Vec<&str> = geo_rows().iter().map(|(g, _)| *g).collect();
    let pairs: Vec<(&str, &str)> = geo_rows()
        .into_iter()
        .flat_map(|(g, ms)| ms.into_iter().map(move |m| (g, m)))
        .collect();
    FormalContext::build(objects, GEO_ATTRIBUTES, pairs).unwrap()
}
