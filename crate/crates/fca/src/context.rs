//! Formal contexts and the two derivation operators.
//!
//! A [`FormalContext`] is an immutable binary incidence relation between
//! named objects and named attributes. [`ObjectSet`] and [`AttributeSet`]
//! are positional subsets of one context's objects or attributes; the two
//! derivation operators map between them:
//!
//! * [`FormalContext::derive_objects`]: the attributes shared by every
//!   object in a set,
//! * [`FormalContext::derive_attributes`]: the objects carrying every
//!   attribute in a set.
//!
//! Composing the two gives the closures [`FormalContext::close_attributes`]
//! and [`FormalContext::close_objects`].

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::bits::BitVec;
use crate::error::{Error, Result};

/// Identity of a context, carried by every set built against it.
///
/// Clones of a context share its id and count as the same context; parsing
/// or building a context anew always yields a fresh id.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContextId(u64);

fn next_context_id() -> ContextId {
    static COUNTER: AtomicU64 = AtomicU64::new(0);
    ContextId(COUNTER.fetch_add(1, Ordering::Relaxed))
}

/// An immutable formal context: objects, attributes, and their incidence.
///
/// The incidence is stored twice, as rows over attributes and as columns
/// over objects, so both derivation directions are folds of bit
/// intersections. Contexts with zero objects or zero attributes are valid.
#[derive(Debug, Clone)]
pub struct FormalContext {
    id: ContextId,
    objects: Vec<String>,
    attributes: Vec<String>,
    object_index: HashMap<String, usize>,
    attribute_index: HashMap<String, usize>,
    rows: Vec<BitVec>,
    cols: Vec<BitVec>,
}

/// Equality is structural: same names in the same order, same incidence.
/// Context identity is deliberately ignored.
impl PartialEq for FormalContext {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.attributes == other.attributes
            && self.rows == other.rows
    }
}

impl Eq for FormalContext {}

fn index_names(names: &[String], what: &str) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(names.len());
    for (i, name) in names.iter().enumerate() {
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        if index.insert(name.clone(), i).is_some() {
            return Err(Error::DuplicateName(format!("{what} {name}")));
        }
    }
    Ok(index)
}

impl FormalContext {
    /// Builds a context from declared names and a list of incident
    /// `(object, attribute)` pairs. Duplicate pairs are idempotent.
    pub fn build<S1, S2, P1, P2>(
        objects: impl IntoIterator<Item = S1>,
        attributes: impl IntoIterator<Item = S2>,
        incidence: impl IntoIterator<Item = (P1, P2)>,
    ) -> Result<FormalContext>
    where
        S1: Into<String>,
        S2: Into<String>,
        P1: AsRef<str>,
        P2: AsRef<str>,
    {
        let objects: Vec<String> = objects.into_iter().map(Into::into).collect();
        let attributes: Vec<String> = attributes.into_iter().map(Into::into).collect();
        let object_index = index_names(&objects, "object")?;
        let attribute_index = index_names(&attributes, "attribute")?;

        let mut rows = vec![BitVec::empty(attributes.len()); objects.len()];
        let mut cols = vec![BitVec::empty(objects.len()); attributes.len()];
        for (g, m) in incidence {
            let g = g.as_ref();
            let m = m.as_ref();
            let gi = *object_index
                .get(g)
                .ok_or_else(|| Error::UnknownName(g.to_string()))?;
            let mi = *attribute_index
                .get(m)
                .ok_or_else(|| Error::UnknownName(m.to_string()))?;
            rows[gi].insert(mi);
            cols[mi].insert(gi);
        }

        Ok(FormalContext {
            id: next_context_id(),
            objects,
            attributes,
            object_index,
            attribute_index,
            rows,
            cols,
        })
    }

    pub fn id(&self) -> ContextId {
        self.id
    }

    pub fn object_count(&self) -> usize {
        self.objects.len()
    }

    pub fn attribute_count(&self) -> usize {
        self.attributes.len()
    }

    pub fn object_names(&self) -> &[String] {
        &self.objects
    }

    pub fn attribute_names(&self) -> &[String] {
        &self.attributes
    }

    pub fn object_name(&self, index: usize) -> &str {
        &self.objects[index]
    }

    pub fn attribute_name(&self, index: usize) -> &str {
        &self.attributes[index]
    }

    /// Index of a declared object name; lookup is exact and case-sensitive.
    pub fn object_index(&self, name: &str) -> Result<usize> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    pub fn attribute_index(&self, name: &str) -> Result<usize> {
        self.attribute_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// Whether object `g` has attribute `m`, by index.
    pub fn incident(&self, g: usize, m: usize) -> bool {
        self.rows[g].contains(m)
    }

    pub fn empty_object_set(&self) -> ObjectSet {
        ObjectSet {
            ctx: self.id,
            bits: BitVec::empty(self.objects.len()),
        }
    }

    pub fn full_object_set(&self) -> ObjectSet {
        ObjectSet {
            ctx: self.id,
            bits: BitVec::full(self.objects.len()),
        }
    }

    pub fn empty_attribute_set(&self) -> AttributeSet {
        AttributeSet {
            ctx: self.id,
            bits: BitVec::empty(self.attributes.len()),
        }
    }

    pub fn full_attribute_set(&self) -> AttributeSet {
        AttributeSet {
            ctx: self.id,
            bits: BitVec::full(self.attributes.len()),
        }
    }

    /// Object set from names; fails with `UnknownName` on undeclared names.
    pub fn object_set<S: AsRef<str>>(
        &self,
        names: impl IntoIterator<Item = S>,
    ) -> Result<ObjectSet> {
        let mut set = self.empty_object_set();
        for name in names {
            set.bits.insert(self.object_index(name.as_ref())?);
        }
        Ok(set)
    }

    /// Attribute set from names; fails with `UnknownName` on undeclared names.
    pub fn attribute_set<S: AsRef<str>>(
        &self,
        names: impl IntoIterator<Item = S>,
    ) -> Result<AttributeSet> {
        let mut set = self.empty_attribute_set();
        for name in names {
            set.bits.insert(self.attribute_index(name.as_ref())?);
        }
        Ok(set)
    }

    /// Names of an object set's members in declaration order.
    pub fn object_set_names(&self, set: &ObjectSet) -> Result<Vec<&str>> {
        self.check_owned(set.ctx)?;
        Ok(set.bits.iter().map(|i| self.objects[i].as_str()).collect())
    }

    /// Names of an attribute set's members in declaration order.
    pub fn attribute_set_names(&self, set: &AttributeSet) -> Result<Vec<&str>> {
        self.check_owned(set.ctx)?;
        Ok(set
            .bits
            .iter()
            .map(|i| self.attributes[i].as_str())
            .collect())
    }

    fn check_owned(&self, ctx: ContextId) -> Result<()> {
        if ctx == self.id {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// Attributes common to every object in `set`. The empty set derives to
    /// all attributes.
    pub fn derive_objects(&self, set: &ObjectSet) -> Result<AttributeSet> {
        self.check_owned(set.ctx)?;
        Ok(AttributeSet {
            ctx: self.id,
            bits: self.derive_object_bits(&set.bits),
        })
    }

    /// Objects carrying every attribute in `set`. The empty set derives to
    /// all objects.
    pub fn derive_attributes(&self, set: &AttributeSet) -> Result<ObjectSet> {
        self.check_owned(set.ctx)?;
        Ok(ObjectSet {
            ctx: self.id,
            bits: self.derive_attribute_bits(&set.bits),
        })
    }

    /// The closure of an attribute set: derive twice. The result contains
    /// the input and is a fixpoint of this operation.
    pub fn close_attributes(&self, set: &AttributeSet) -> Result<AttributeSet> {
        self.check_owned(set.ctx)?;
        let (_, closed) = self.close_attribute_bits(&set.bits);
        Ok(AttributeSet {
            ctx: self.id,
            bits: closed,
        })
    }

    /// The closure of an object set: derive twice.
    pub fn close_objects(&self, set: &ObjectSet) -> Result<ObjectSet> {
        self.check_owned(set.ctx)?;
        let attrs = self.derive_object_bits(&set.bits);
        Ok(ObjectSet {
            ctx: self.id,
            bits: self.derive_attribute_bits(&attrs),
        })
    }

    pub(crate) fn derive_object_bits(&self, objects: &BitVec) -> BitVec {
        let mut attrs = BitVec::full(self.attributes.len());
        for g in objects.iter() {
            attrs.intersect_with(&self.rows[g]);
        }
        attrs
    }

    pub(crate) fn derive_attribute_bits(&self, attrs: &BitVec) -> BitVec {
        let mut objects = BitVec::full(self.objects.len());
        for m in attrs.iter() {
            objects.intersect_with(&self.cols[m]);
        }
        objects
    }

    /// Closure of an attribute bit set, returning `(extent, closed intent)`.
    pub(crate) fn close_attribute_bits(&self, attrs: &BitVec) -> (BitVec, BitVec) {
        let extent = self.derive_attribute_bits(attrs);
        let intent = self.derive_object_bits(&extent);
        (extent, intent)
    }

    pub(crate) fn attribute_column(&self, m: usize) -> &BitVec {
        &self.cols[m]
    }

    pub(crate) fn object_row(&self, g: usize) -> &BitVec {
        &self.rows[g]
    }

    pub(crate) fn object_set_from_bits(&self, bits: BitVec) -> ObjectSet {
        debug_assert_eq!(bits.len(), self.objects.len());
        ObjectSet { ctx: self.id, bits }
    }

    pub(crate) fn attribute_set_from_bits(&self, bits: BitVec) -> AttributeSet {
        debug_assert_eq!(bits.len(), self.attributes.len());
        AttributeSet { ctx: self.id, bits }
    }
}

macro_rules! define_set {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name {
            pub(crate) ctx: ContextId,
            pub(crate) bits: BitVec,
        }

        impl $name {
            /// Id of the owning context.
            pub fn context_id(&self) -> ContextId {
                self.ctx
            }

            pub fn contains(&self, index: usize) -> bool {
                self.bits.contains(index)
            }

            /// Adds a member by index. Panics if the index is out of range
            /// for the owning context.
            pub fn insert(&mut self, index: usize) {
                self.bits.insert(index);
            }

            pub fn remove(&mut self, index: usize) {
                self.bits.remove(index);
            }

            pub fn len(&self) -> usize {
                self.bits.count()
            }

            pub fn is_empty(&self) -> bool {
                self.bits.is_empty()
            }

            /// Member indices in ascending declaration order.
            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.bits.iter()
            }

            /// Panics when the operands belong to different contexts; use the
            /// context-level operations for a recoverable error.
            pub fn is_subset(&self, other: &Self) -> bool {
                assert_eq!(self.ctx, other.ctx, "sets belong to different contexts");
                self.bits.is_subset(&other.bits)
            }

            pub fn union(&self, other: &Self) -> Self {
                assert_eq!(self.ctx, other.ctx, "sets belong to different contexts");
                $name { ctx: self.ctx, bits: self.bits.union(&other.bits) }
            }

            pub fn intersection(&self, other: &Self) -> Self {
                assert_eq!(self.ctx, other.ctx, "sets belong to different contexts");
                $name { ctx: self.ctx, bits: self.bits.intersection(&other.bits) }
            }

            pub fn difference(&self, other: &Self) -> Self {
                assert_eq!(self.ctx, other.ctx, "sets belong to different contexts");
                $name { ctx: self.ctx, bits: self.bits.difference(&other.bits) }
            }
        }
    };
}

define_set! {
    /// A subset of one context's objects, as a bit vector over declaration
    /// order.
    ObjectSet
}

define_set! {
    /// A subset of one context's attributes, as a bit vector over
    /// declaration order.
    AttributeSet
}
