//! Attribute implications.
//!
//! An implication `X -> Y` holds when every object carrying all of `X`
//! also carries all of `Y`. A set of attributes is independent when none
//! of its members is implied by the others; the empty-premise case is
//! included, so an attribute held by every object makes any set
//! containing it dependent.
//!
//! Only the `holds` predicate is provided; computing a minimal
//! implication base (stem base) is a possible extension and deliberately
//! out of scope here.

use crate::context::{AttributeSet, FormalContext};
use crate::error::{Error, Result};

/// An attribute implication `premise -> conclusion` over one context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Implication {
    premise: AttributeSet,
    conclusion: AttributeSet,
}

impl Implication {
    pub fn new(premise: AttributeSet, conclusion: AttributeSet) -> Result<Implication> {
        if premise.context_id() != conclusion.context_id() {
            return Err(Error::ContextMismatch);
        }
        Ok(Implication {
            premise,
            conclusion,
        })
    }

    pub fn premise(&self) -> &AttributeSet {
        &self.premise
    }

    pub fn conclusion(&self) -> &AttributeSet {
        &self.conclusion
    }
}

/// `true` iff every object having all premise attributes also has all
/// conclusion attributes, i.e. `premise' ⊆ conclusion'`.
pub fn holds(ctx: &FormalContext, imp: &Implication) -> Result<bool> {
    let premise_extent = ctx.derive_attributes(&imp.premise)?;
    let conclusion_extent = ctx.derive_attributes(&imp.conclusion)?;
    Ok(premise_extent.is_subset(&conclusion_extent))
}

/// `true` iff no attribute in `set` is implied by the remaining ones.
/// Singletons are tested against the empty premise.
pub fn independent(ctx: &FormalContext, set: &AttributeSet) -> Result<bool> {
    if set.context_id() != ctx.id() {
        return Err(Error::ContextMismatch);
    }
    for x in set.iter() {
        let mut rest = set.clone();
        rest.remove(x);
        let mut single = ctx.empty_attribute_set();
        single.insert(x);
        if holds(ctx, &Implication::new(rest, single)?)? {
            return Ok(false);
        }
    }
    Ok(true)
}
