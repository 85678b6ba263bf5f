//! Concept enumeration and the concept lattice.
//!
//! [`enumerate_concepts`] lists every formal concept of a context by
//! walking closed attribute sets in canonical (lectic) order, with the
//! attribute declaration order as the lexical base. The walk visits each
//! closure exactly once and needs no duplicate tracking, and its output
//! order doubles as the lattice's canonical concept numbering: index 0 is
//! the top concept, the last index is the bottom.
//!
//! Covers are computed per concept by closing every single-attribute
//! extension of its intent and keeping the inclusion-minimal results;
//! those are exactly the intents of its lower neighbours.

use std::collections::HashMap;

use crate::bits::BitVec;
use crate::context::{AttributeSet, FormalContext, ObjectSet};
use crate::error::{Error, Result};

/// Default cap on enumerated concepts, guarding against combinatorial
/// blowup on adversarial inputs.
pub const DEFAULT_CONCEPT_LIMIT: usize = 1_000_000;

/// A pair of an object set and an attribute set that derive to each other.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalConcept {
    extent: ObjectSet,
    intent: AttributeSet,
}

impl FormalConcept {
    /// Validates the defining condition: the extent derives to the intent
    /// and the intent derives back to the extent.
    pub fn try_new(ctx: &FormalContext, extent: ObjectSet, intent: AttributeSet) -> Result<Self> {
        if ctx.derive_objects(&extent)? != intent || ctx.derive_attributes(&intent)? != extent {
            return Err(Error::InvalidConcept);
        }
        Ok(FormalConcept { extent, intent })
    }

    pub(crate) fn from_parts(extent: ObjectSet, intent: AttributeSet) -> Self {
        FormalConcept { extent, intent }
    }

    pub fn extent(&self) -> &ObjectSet {
        &self.extent
    }

    pub fn intent(&self) -> &AttributeSet {
        &self.intent
    }
}

/// The object concept of `name`: the smallest concept whose extent
/// contains the object.
pub fn object_concept(ctx: &FormalContext, name: &str) -> Result<FormalConcept> {
    let mut set = ctx.empty_object_set();
    set.insert(ctx.object_index(name)?);
    let intent = ctx.derive_objects(&set)?;
    let extent = ctx.derive_attributes(&intent)?;
    Ok(FormalConcept { extent, intent })
}

/// The attribute concept of `name`: the greatest concept whose intent
/// contains the attribute.
pub fn attribute_concept(ctx: &FormalContext, name: &str) -> Result<FormalConcept> {
    let mut set = ctx.empty_attribute_set();
    set.insert(ctx.attribute_index(name)?);
    let extent = ctx.derive_attributes(&set)?;
    let intent = ctx.derive_objects(&extent)?;
    Ok(FormalConcept { extent, intent })
}

/// `true` iff `c1` is below or equal to `c2`: its extent is contained in
/// `c2`'s extent (equivalently, its intent contains `c2`'s intent).
pub fn is_subconcept(c1: &FormalConcept, c2: &FormalConcept) -> Result<bool> {
    if c1.extent.context_id() != c2.extent.context_id() {
        return Err(Error::ContextMismatch);
    }
    Ok(c1.extent.is_subset(&c2.extent))
}

fn check_family(ctx: &FormalContext, concepts: &[FormalConcept]) -> Result<()> {
    if concepts.is_empty() {
        return Err(Error::EmptyInput);
    }
    for c in concepts {
        if c.extent.context_id() != ctx.id() {
            return Err(Error::ContextMismatch);
        }
    }
    Ok(())
}

/// Greatest common subconcept: intersect the extents, derive the intent.
pub fn meet(ctx: &FormalContext, concepts: &[FormalConcept]) -> Result<FormalConcept> {
    check_family(ctx, concepts)?;
    let mut extent = ctx.full_object_set();
    for c in concepts {
        extent = extent.intersection(&c.extent);
    }
    let intent = ctx.derive_objects(&extent)?;
    Ok(FormalConcept { extent, intent })
}

/// Least common superconcept: intersect the intents, derive the extent.
pub fn join(ctx: &FormalContext, concepts: &[FormalConcept]) -> Result<FormalConcept> {
    check_family(ctx, concepts)?;
    let mut intent = ctx.full_attribute_set();
    for c in concepts {
        intent = intent.intersection(&c.intent);
    }
    let extent = ctx.derive_attributes(&intent)?;
    Ok(FormalConcept { extent, intent })
}

/// All concepts of a context in canonical order, plus the cover relation.
#[derive(Debug, Clone)]
pub struct ConceptLattice {
    context: FormalContext,
    concepts: Vec<FormalConcept>,
    covers: Vec<(usize, usize)>,
}

impl ConceptLattice {
    pub fn context(&self) -> &FormalContext {
        &self.context
    }

    pub fn len(&self) -> usize {
        self.concepts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // every context has at least one concept
    }

    pub fn concepts(&self) -> &[FormalConcept] {
        &self.concepts
    }

    pub fn concept(&self, index: usize) -> &FormalConcept {
        &self.concepts[index]
    }

    /// Cover pairs `(i, j)`: concept `i` is a lower cover of concept `j`.
    /// Sorted by upper index, then lower.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// The greatest concept, `(G, G')`. Always at canonical index 0.
    pub fn top(&self) -> &FormalConcept {
        &self.concepts[0]
    }

    /// The least concept, `(M', M)`. Always at the last canonical index.
    pub fn bottom(&self) -> &FormalConcept {
        &self.concepts[self.concepts.len() - 1]
    }

    /// Canonical index of the concept with the given intent, if any.
    pub fn index_of_intent(&self, intent: &AttributeSet) -> Option<usize> {
        self.concepts.iter().position(|c| c.intent == *intent)
    }

    /// Index of the greatest concept whose intent contains the attribute.
    pub fn attribute_concept_index(&self, name: &str) -> Result<usize> {
        let concept = attribute_concept(&self.context, name)?;
        Ok(self
            .index_of_intent(concept.intent())
            .expect("attribute concept must be enumerated"))
    }

    /// Index of the least concept whose extent contains the object.
    pub fn object_concept_index(&self, name: &str) -> Result<usize> {
        let concept = object_concept(&self.context, name)?;
        Ok(self
            .index_of_intent(concept.intent())
            .expect("object concept must be enumerated"))
    }
}

/// Enumerates all formal concepts of `ctx` with the default concept limit.
pub fn enumerate_concepts(ctx: &FormalContext) -> Result<ConceptLattice> {
    enumerate_concepts_with_limit(ctx, DEFAULT_CONCEPT_LIMIT)
}

/// Enumerates all formal concepts, failing with `CapacityExceeded` as soon
/// as their number would pass `limit`.
pub fn enumerate_concepts_with_limit(ctx: &FormalContext, limit: usize) -> Result<ConceptLattice> {
    let mut pairs: Vec<(BitVec, BitVec)> = Vec::new();
    let first = ctx.close_attribute_bits(&BitVec::empty(ctx.attribute_count()));
    pairs.push(first);
    if pairs.len() > limit {
        return Err(Error::CapacityExceeded { limit });
    }
    while let Some(next) = next_closure(ctx, &pairs.last().unwrap().1) {
        pairs.push(next);
        if pairs.len() > limit {
            return Err(Error::CapacityExceeded { limit });
        }
    }

    let covers = compute_covers(ctx, &pairs);
    let concepts = pairs
        .into_iter()
        .map(|(extent, intent)| {
            FormalConcept::from_parts(
                ctx.object_set_from_bits(extent),
                ctx.attribute_set_from_bits(intent),
            )
        })
        .collect();

    Ok(ConceptLattice {
        context: ctx.clone(),
        concepts,
        covers,
    })
}

/// The closure following `intent` in lectic order, with its extent, or
/// `None` when `intent` is the full attribute set.
fn next_closure(ctx: &FormalContext, intent: &BitVec) -> Option<(BitVec, BitVec)> {
    let mut work = intent.clone();
    for i in (0..ctx.attribute_count()).rev() {
        if work.contains(i) {
            work.remove(i);
        } else {
            let mut candidate = work.clone();
            candidate.insert(i);
            let (extent, closed) = ctx.close_attribute_bits(&candidate);
            // canonical step: the closure may not add attributes before i
            if closed.difference(&work).first_set() == Some(i) {
                return Some((extent, closed));
            }
        }
    }
    None
}

fn compute_covers(ctx: &FormalContext, pairs: &[(BitVec, BitVec)]) -> Vec<(usize, usize)> {
    let index_of: HashMap<&BitVec, usize> = pairs
        .iter()
        .enumerate()
        .map(|(i, (_, intent))| (intent, i))
        .collect();

    let mut covers = Vec::new();
    for (upper, (_, intent)) in pairs.iter().enumerate() {
        let mut candidates: Vec<BitVec> = Vec::new();
        for m in 0..ctx.attribute_count() {
            if intent.contains(m) {
                continue;
            }
            let mut extended = intent.clone();
            extended.insert(m);
            let (_, closed) = ctx.close_attribute_bits(&extended);
            candidates.push(closed);
        }
        candidates.sort();
        candidates.dedup();
        for cand in &candidates {
            let minimal = !candidates
                .iter()
                .any(|other| other != cand && other.is_subset(cand));
            if minimal {
                covers.push((index_of[cand], upper));
            }
        }
    }
    covers.sort_by_key(|&(lower, upper)| (upper, lower));
    covers
}
