//! Shared fixtures and independent oracles for the integration suites.
//!
//! The oracles work on raw boolean incidence matrices with `Vec<usize>`
//! index sets, never on the library's bit-set types, so they stay
//! independent of the code paths they check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use fca::context::FormalContext;
use fca::lattice::ConceptLattice;

// --- sample datasets -------------------------------------------------------

pub const CRIME_OBJECTS: [&str; 9] = ["P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9"];

pub const CRIME_ATTRIBUTES: [&str; 14] = [
    "a", "b", "c", "m", "f", "c1", "c2", "c3", "c4", "g1", "g2", "g3", "g4", "g5",
];

pub fn crime_rows() -> Vec<(&'static str, Vec<&'static str>)> {
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

pub fn crime_context() -> FormalContext {
    let pairs: Vec<(&str, &str)> = crime_rows()
        .into_iter()
        .flat_map(|(g, ms)| ms.into_iter().map(move |m| (g, m)))
        .collect();
    FormalContext::build(CRIME_OBJECTS, CRIME_ATTRIBUTES, pairs).unwrap()
}

/// Incidence of the crime sample as a boolean matrix, for the oracles.
pub fn crime_matrix() -> Vec<Vec<bool>> {
    rows_to_matrix(&CRIME_ATTRIBUTES, &crime_rows())
}

pub const GEO_OBJECTS: [&str; 5] = ["g1", "g2", "g3", "g4", "g5"];

pub const GEO_ATTRIBUTES: [&str; 14] = [
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n",
];

pub fn geo_rows() -> Vec<(&'static str, Vec<&'static str>)> {
    vec![
        ("g1", vec!["a", "e", "j"]),
        ("g2", vec!["b", "f", "k"]),
        ("g3", vec!["a", "e", "m"]),
        ("g4", vec!["a", "e", "n"]),
        ("g5", vec!["c", "f", "j"]),
    ]
}

pub fn geo_context() -> FormalContext {
    let pairs: Vec<(&str, &str)> = geo_rows()
        .into_iter()
        .flat_map(|(g, ms)| ms.into_iter().map(move |m| (g, m)))
        .collect();
    FormalContext::build(GEO_OBJECTS, GEO_ATTRIBUTES, pairs).unwrap()
}

pub fn geo_matrix() -> Vec<Vec<bool>> {
    rows_to_matrix(&GEO_ATTRIBUTES, &geo_rows())
}

fn rows_to_matrix(attributes: &[&str], rows: &[(&str, Vec<&str>)]) -> Vec<Vec<bool>> {
    rows.iter()
        .map(|(_, marks)| attributes.iter().map(|attr| marks.contains(attr)).collect())
        .collect()
}

// --- brute-force concept oracle --------------------------------------------

/// A concept as plain sorted index sets: `(extent, intent)`.
pub type IndexConcept = (Vec<usize>, Vec<usize>);

fn common_attributes(matrix: &[Vec<bool>], attr_count: usize, objects: &[usize]) -> Vec<usize> {
    (0..attr_count)
        .filter(|&m| objects.iter().all(|&g| matrix[g][m]))
        .collect()
}

fn common_objects(matrix: &[Vec<bool>], attrs: &[usize]) -> Vec<usize> {
    (0..matrix.len())
        .filter(|&g| attrs.iter().all(|&m| matrix[g][m]))
        .collect()
}

/// Every formal concept of the matrix, found by closing all `2^|M|`
/// attribute subsets and deduplicating the fixpoints.
pub fn oracle_concepts_attr_side(
    matrix: &[Vec<bool>],
    attr_count: usize,
) -> BTreeSet<IndexConcept> {
    assert!(
        attr_count <= 20,
        "oracle is exponential in the attribute count"
    );
    let mut concepts = BTreeSet::new();
    for mask in 0u32..(1u32 << attr_count) {
        let attrs: Vec<usize> = (0..attr_count).filter(|m| mask & (1 << m) != 0).collect();
        let extent = common_objects(matrix, &attrs);
        let intent = common_attributes(matrix, attr_count, &extent);
        concepts.insert((extent, intent));
    }
    concepts
}

/// Every formal concept of the matrix, found by closing all `2^|G|`
/// object subsets.
pub fn oracle_concepts_obj_side(matrix: &[Vec<bool>], attr_count: usize) -> BTreeSet<IndexConcept> {
    let obj_count = matrix.len();
    assert!(obj_count <= 20, "oracle is exponential in the object count");
    let mut concepts = BTreeSet::new();
    for mask in 0u32..(1u32 << obj_count) {
        let objects: Vec<usize> = (0..obj_count).filter(|g| mask & (1 << g) != 0).collect();
        let intent = common_attributes(matrix, attr_count, &objects);
        let extent = common_objects(matrix, &intent);
        concepts.insert((extent, intent));
    }
    concepts
}

/// Powerset closure over whichever side is smaller.
pub fn oracle_concepts(matrix: &[Vec<bool>], attr_count: usize) -> BTreeSet<IndexConcept> {
    if matrix.len() <= attr_count {
        oracle_concepts_obj_side(matrix, attr_count)
    } else {
        oracle_concepts_attr_side(matrix, attr_count)
    }
}

/// The enumerated lattice as plain index sets, for comparison with the
/// oracles.
pub fn lattice_as_index_concepts(lattice: &ConceptLattice) -> BTreeSet<IndexConcept> {
    lattice
        .concepts()
        .iter()
        .map(|c| (c.extent().iter().collect(), c.intent().iter().collect()))
        .collect()
}

// --- quadratic cover oracle -------------------------------------------------

/// Cover pairs `(lower, upper)` computed the slow way: build the full
/// extent-inclusion order, then keep the pairs with nothing in between.
pub fn oracle_covers(concepts: &[IndexConcept]) -> BTreeSet<(usize, usize)> {
    let extents: Vec<BTreeSet<usize>> = concepts
        .iter()
        .map(|(extent, _)| extent.iter().copied().collect())
        .collect();
    let n = extents.len();
    let strictly_below = |i: usize, j: usize| i != j && extents[i].is_subset(&extents[j]);
    let mut covers = BTreeSet::new();
    for i in 0..n {
        for j in 0..n {
            if strictly_below(i, j) && !(0..n).any(|k| strictly_below(i, k) && strictly_below(k, j))
            {
                covers.insert((i, j));
            }
        }
    }
    covers
}

// --- direct object-scan implication oracle -----------------------------------

/// `premise -> conclusion` holds iff every matrix row containing the whole
/// premise also contains the whole conclusion.
pub fn oracle_implication_holds(
    matrix: &[Vec<bool>],
    premise: &[usize],
    conclusion: &[usize],
) -> bool {
    matrix
        .iter()
        .filter(|row| premise.iter().all(|&m| row[m]))
        .all(|row| conclusion.iter().all(|&m| row[m]))
}
