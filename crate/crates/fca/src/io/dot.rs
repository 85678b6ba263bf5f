//! DOT line diagrams of concept lattices.
//!
//! Nodes are numbered by canonical concept index; each edge goes from an
//! upper concept to one of its lower covers, so rendering with `dot`
//! puts the greatest concept at the top. Labels hold two brace groups,
//! attributes then objects: the full labeling prints each concept's
//! whole intent and extent, the reduced labeling prints every attribute
//! only at its greatest concept and every object only at its least, the
//! way published lattice diagrams are usually drawn.

use crate::lattice::ConceptLattice;

/// Node labeling style; `Reduced` is the CLI default.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Labeling {
    Full,
    Reduced,
}

fn escape(name: &str) -> String {
    name.replace('\\', "\\\\").replace('"', "\\\"")
}

fn brace_group(names: &[&str]) -> String {
    let mut out = String::from("{");
    for (i, name) in names.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&escape(name));
    }
    out.push('}');
    out
}

/// Renders the lattice as a deterministic DOT document.
pub fn export_dot(lattice: &ConceptLattice, labeling: Labeling) -> String {
    let ctx = lattice.context();
    let count = lattice.len();

    // lookups against the lattice's own context cannot fail
    let mut attr_labels: Vec<Vec<&str>> = vec![Vec::new(); count];
    let mut object_labels: Vec<Vec<&str>> = vec![Vec::new(); count];
    match labeling {
        Labeling::Full => {
            for (i, concept) in lattice.concepts().iter().enumerate() {
                attr_labels[i] = ctx
                    .attribute_set_names(concept.intent())
                    .expect("intent belongs to the lattice context");
                object_labels[i] = ctx
                    .object_set_names(concept.extent())
                    .expect("extent belongs to the lattice context");
            }
        }
        Labeling::Reduced => {
            for m in ctx.attribute_names() {
                let i = lattice
                    .attribute_concept_index(m)
                    .expect("attribute name comes from the context");
                attr_labels[i].push(m);
            }
            for g in ctx.object_names() {
                let i = lattice
                    .object_concept_index(g)
                    .expect("object name comes from the context");
                object_labels[i].push(g);
            }
        }
    }

    let mut out = String::from("digraph concept_lattice {\n");
    for i in 0..count {
        out.push_str(&format!(
            "  {} [label=\"{} {}\"];\n",
            i,
            brace_group(&attr_labels[i]),
            brace_group(&object_labels[i])
        ));
    }
    for &(lower, upper) in lattice.covers() {
        out.push_str(&format!("  {} -> {};\n", upper, lower));
    }
    out.push_str("}\n");
    out
}
