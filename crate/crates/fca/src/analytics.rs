//! Crime-by-location analyses over a scaled context.
//!
//! [`cross_tab`] counts objects per (location, crime) attribute pair and
//! checks that the chosen location attributes partition the objects,
//! since the totals are only meaningful when every object has exactly
//! one location. [`hotspots`] ranks locations by their cross-tab row
//! totals. [`concept_cooccurrence_score`] measures how often an
//! attribute shares a concept intent with any of a set of companions.

use std::collections::HashSet;

use crate::context::FormalContext;
use crate::error::{Error, Result};
use crate::lattice::ConceptLattice;

/// A location-by-crime contingency table with totals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossTab {
    row_labels: Vec<String>,
    col_labels: Vec<String>,
    counts: Vec<Vec<usize>>,
    row_totals: Vec<usize>,
    col_totals: Vec<usize>,
    grand_total: usize,
}

impl CrossTab {
    pub fn row_labels(&self) -> &[String] {
        &self.row_labels
    }

    pub fn col_labels(&self) -> &[String] {
        &self.col_labels
    }

    pub fn counts(&self) -> &[Vec<usize>] {
        &self.counts
    }

    pub fn count(&self, row: usize, col: usize) -> usize {
        self.counts[row][col]
    }

    pub fn row_totals(&self) -> &[usize] {
        &self.row_totals
    }

    pub fn col_totals(&self) -> &[usize] {
        &self.col_totals
    }

    pub fn grand_total(&self) -> usize {
        self.grand_total
    }
}

/// Locations ranked by score, descending, ties broken by name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HotspotReport {
    ranking: Vec<(String, usize)>,
}

impl HotspotReport {
    pub fn ranking(&self) -> &[(String, usize)] {
        &self.ranking
    }
}

fn resolve_attributes(ctx: &FormalContext, names: &[String]) -> Result<Vec<usize>> {
    let mut seen = HashSet::new();
    let mut indices = Vec::with_capacity(names.len());
    for name in names {
        let idx = ctx
            .attribute_index(name)
            .map_err(|_| Error::UnknownAttribute(name.clone()))?;
        if !seen.insert(idx) {
            return Err(Error::DuplicateName(name.clone()));
        }
        indices.push(idx);
    }
    Ok(indices)
}

/// Counts objects per (location, crime) attribute pair.
///
/// The location attributes must partition the objects: an object with
/// zero or several location marks makes the row totals meaningless, so
/// it is reported as `NonPartition`. Locations and crimes must name
/// distinct attributes.
pub fn cross_tab(ctx: &FormalContext, locations: &[String], crimes: &[String]) -> Result<CrossTab> {
    let location_idx = resolve_attributes(ctx, locations)?;
    let crime_idx = resolve_attributes(ctx, crimes)?;
    let location_set: HashSet<usize> = location_idx.iter().copied().collect();
    for (name, idx) in crimes.iter().zip(&crime_idx) {
        if location_set.contains(idx) {
            return Err(Error::DuplicateName(name.clone()));
        }
    }

    for g in 0..ctx.object_count() {
        let row = ctx.object_row(g);
        let marks = location_idx.iter().filter(|&&m| row.contains(m)).count();
        if marks != 1 {
            return Err(Error::NonPartition {
                object: ctx.object_name(g).to_owned(),
                marks,
            });
        }
    }

    let mut counts = vec![vec![0usize; crime_idx.len()]; location_idx.len()];
    for (r, &g_attr) in location_idx.iter().enumerate() {
        let g_col = ctx.attribute_column(g_attr);
        for (c, &c_attr) in crime_idx.iter().enumerate() {
            counts[r][c] = g_col.intersection(ctx.attribute_column(c_attr)).count();
        }
    }

    let row_totals: Vec<usize> = counts.iter().map(|row| row.iter().sum()).collect();
    let col_totals: Vec<usize> = (0..crime_idx.len())
        .map(|c| counts.iter().map(|row| row[c]).sum())
        .collect();
    let grand_total = row_totals.iter().sum();

    Ok(CrossTab {
        row_labels: locations.to_vec(),
        col_labels: crimes.to_vec(),
        counts,
        row_totals,
        col_totals,
        grand_total,
    })
}

/// Ranks the cross-tab's locations by row total, descending; ties are
/// broken by attribute name so the ranking is deterministic.
pub fn hotspots(xt: &CrossTab) -> HotspotReport {
    let mut ranking: Vec<(String, usize)> = xt
        .row_labels
        .iter()
        .cloned()
        .zip(xt.row_totals.iter().copied())
        .collect();
    ranking.sort_by(|(name_a, score_a), (name_b, score_b)| {
        score_b.cmp(score_a).then_with(|| name_a.cmp(name_b))
    });
    HotspotReport { ranking }
}

/// Number of concepts whose intent contains `focus` together with at
/// least one companion attribute.
pub fn concept_cooccurrence_score(
    lattice: &ConceptLattice,
    focus: &str,
    companions: &[String],
) -> Result<usize> {
    let ctx = lattice.context();
    let focus_idx = ctx
        .attribute_index(focus)
        .map_err(|_| Error::UnknownAttribute(focus.to_owned()))?;
    let mut companion_set = ctx.empty_attribute_set();
    for name in companions {
        let idx = ctx
            .attribute_index(name)
            .map_err(|_| Error::UnknownAttribute(name.clone()))?;
        companion_set.insert(idx);
    }

    Ok(lattice
        .concepts()
        .iter()
        .filter(|c| {
            c.intent().contains(focus_idx) && !c.intent().intersection(&companion_set).is_empty()
        })
        .count())
}
