//! Literal small-case tables, keyed by ground size, 1-based labels.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::system::SetSystem;

/// One of the small-case tables, keyed by ground size 1..=6.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FixtureTable {
    #[serde(rename = "s1")]
    S1,
    #[serde(rename = "s2")]
    S2,
    #[serde(rename = "s3")]
    S3,
    #[serde(rename = "s4")]
    S4,
    #[serde(rename = "s5")]
    S5,
    #[serde(rename = "s6")]
    S6,
}

impl FixtureTable {
    pub const ALL: [FixtureTable; 6] = [Self::S1, Self::S2, Self::S3, Self::S4, Self::S5, Self::S6];

    /// Ground size of every system in the table.
    pub fn ground_size(self) -> u32 {
        self as u32 + 1
    }

    pub fn for_ground(s: u32) -> Option<Self> {
        Self::ALL.get(s.checked_sub(1)? as usize).copied()
    }

    /// Number of systems in the table.
    #[allow(clippy::len_without_is_empty)] // tables are never empty
    pub fn len(self) -> usize {
        table(self).len()
    }

    pub fn id(self) -> &'static str {
        match self {
            Self::S1 => "s1",
            Self::S2 => "s2",
            Self::S3 => "s3",
            Self::S4 => "s4",
            Self::S5 => "s5",
            Self::S6 => "s6",
        }
    }
}

impl fmt::Display for FixtureTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for FixtureTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|o| o.id() == s)
            .ok_or_else(|| Error::UnknownFixture {
                table: s.to_string(),
                index: 0,
            })
    }
}

type Table = &'static [&'static [&'static [u32]]];

const PENTAGON: [&[u32]; 10] = [
    &[1, 2],
    &[2, 3],
    &[3, 4],
    &[4, 5],
    &[1, 5],
    &[1, 2, 4],
    &[2, 3, 5],
    &[1, 3, 4],
    &[2, 4, 5],
    &[1, 3, 5],
];

const TABLE_S1: Table = &[&[&[], &[1]]];

const TABLE_S2: Table = &[
    &[&[], &[1], &[1, 2]],
    &[&[], &[1], &[2]],
    &[&[1], &[2], &[1, 2]],
];

const TABLE_S3: Table = &[
    &[&[], &[1], &[1, 2], &[1, 2, 3]],
    &[&[], &[1], &[1, 2], &[1, 3]],
    &[&[], &[1], &[2], &[1, 3]],
    &[&[], &[1], &[2], &[3]],
    &[&[1], &[2], &[1, 2], &[1, 2, 3]],
    &[&[1], &[1, 3], &[2, 3], &[1, 2, 3]],
    &[&[1, 2], &[1, 3], &[2, 3], &[1, 2, 3]],
    &[&[1], &[2], &[1, 2], &[1, 3]],
];

// Entry 2 has {1,2} rather than ∅: with ∅ instead, element 3 would have no
// pair and the system would be Bondy.
const TABLE_S4: Table = &[
    &[&[], &[1], &[2], &[3], &[4]],
    &[&[1], &[2], &[1, 2], &[1, 2, 3], &[1, 2, 3, 4]],
    &[&[1], &[2], &[3], &[4], &[1, 2], &[3, 4]],
    &[&[], &[1], &[1, 2], &[1, 2, 3], &[1, 2, 3, 4]],
];

const TABLE_S5: Table = &[
    &[&[], &[1], &[2], &[3], &[4], &[5]],
    &[&[], &[1], &[1, 2], &[1, 2, 3], &[1, 2, 3, 4], &[1, 2, 3, 4, 5]],
    &[&[1], &[2], &[4], &[5], &[1, 2], &[1, 3], &[4, 5]],
    &[&[1], &[2], &[3], &[4], &[1, 2], &[3, 4], &[1, 2, 3, 4], &[1, 2, 3, 4, 5]],
    &PENTAGON,
];

const TABLE_S6: Table = &[
    &[&[], &[1], &[2], &[3], &[4], &[5], &[6]],
    &[&[1], &[2], &[1, 2], &[1, 3], &[4], &[5], &[4, 5], &[4, 5, 6]],
    &[&[1], &[2], &[1, 2], &[3], &[4], &[3, 4], &[1, 2, 3, 4], &[1, 2, 3, 4, 5], &[4, 6]],
    &[
        &[1], &[2], &[1, 2], &[3], &[4], &[3, 4], &[5], &[5, 6], &[1, 2, 3, 4], &[1, 2, 3, 4, 5],
    ],
    &[
        &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5], &[1, 2, 4], &[2, 3, 5], &[1, 3, 4],
        &[2, 4, 5], &[1, 3, 5], &[1, 3, 5, 6],
    ],
    &[
        &[], &[6], &[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5], &[1, 2, 4], &[2, 3, 5], &[1, 3, 4],
        &[2, 4, 5], &[1, 3, 5],
    ],
];

fn table(obs: FixtureTable) -> Table {
    match obs {
        FixtureTable::S1 => TABLE_S1,
        FixtureTable::S2 => TABLE_S2,
        FixtureTable::S3 => TABLE_S3,
        FixtureTable::S4 => TABLE_S4,
        FixtureTable::S5 => TABLE_S5,
        FixtureTable::S6 => TABLE_S6,
    }
}

/// The `index`-th (1-based) system of a table.
pub fn fixture_system(obs: FixtureTable, index: usize) -> Result<SetSystem> {
    let sets = index
        .checked_sub(1)
        .and_then(|i| table(obs).get(i))
        .ok_or_else(|| Error::UnknownFixture {
            table: obs.to_string(),
            index,
        })?;
    SetSystem::from_sets(obs.ground_size(), sets)
}

/// The ten 2- and 3-subsets of `{1..5}` from the pentagon construction.
pub(crate) fn pentagon() -> &'static [&'static [u32]] {
    &PENTAGON
}
