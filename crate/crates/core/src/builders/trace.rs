use serde::{Deserialize, Serialize};

use super::fixtures::FixtureTable;

/// Derivation record of a constructed system.
///
/// Replaying the trace from the fixture tables rebuilds the system exactly,
/// re-checking every builder precondition on the way.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum BuildTrace {
    Fixture {
        table: FixtureTable,
        index: usize,
    },
    Base2s {
        s: u32,
    },
    DisjointUnion {
        left: Box<BuildTrace>,
        right: Box<BuildTrace>,
    },
    Extend {
        /// The chosen member `A`, 1-based elements.
        member: Vec<u32>,
        /// The new element `w`.
        new_element: u32,
        input: Box<BuildTrace>,
    },
    Complement {
        input: Box<BuildTrace>,
    },
}

impl BuildTrace {
    /// Number of rule applications.
    pub fn steps(&self) -> usize {
        1 + self.inputs().iter().map(|t| t.steps()).sum::<usize>()
    }

    pub fn inputs(&self) -> Vec<&BuildTrace> {
        match self {
            Self::Fixture { .. } | Self::Base2s { .. } => vec![],
            Self::DisjointUnion { left, right } => vec![left, right],
            Self::Extend { input, .. } | Self::Complement { input } => vec![input],
        }
    }

    /// Indented one-rule-per-line rendering.
    pub fn render(&self) -> String {
        let mut out = String::new();
        self.render_into(0, &mut out);
        out
    }

    fn render_into(&self, depth: usize, out: &mut String) {
        let pad = "  ".repeat(depth);
        let line = match self {
            Self::Fixture { table, index } => format!("fixture {table} #{index}"),
            Self::Base2s { s } => format!("base-2s s={s}"),
            Self::DisjointUnion { .. } => "disjoint-union".to_string(),
            Self::Extend {
                member,
                new_element,
                ..
            } => {
                let m: Vec<String> = member.iter().map(u32::to_string).collect();
                format!("extend member={{{}}} w={new_element}", m.join(","))
            }
            Self::Complement { .. } => "complement".to_string(),
        };
        out.push_str(&pad);
        out.push_str(&line);
        out.push('\n');
        for child in self.inputs() {
            child.render_into(depth + 1, out);
        }
    }
}
