use std::fmt;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::system::SetSystem;

/// Largest ground size accepted by the permutation scan (`8! = 40320` images).
pub const MAX_CANONICAL_GROUND: u32 = 8;

/// A system in minimal-image form: the lexicographically least sorted member
/// sequence over all relabellings of the ground set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(SetSystem);

impl CanonicalForm {
    pub fn system(&self) -> &SetSystem {
        &self.0
    }

    pub fn into_system(self) -> SetSystem {
        self.0
    }

    /// Wraps a system already known to be canonical.
    pub(crate) fn from_canonical_unchecked(sys: SetSystem) -> Self {
        CanonicalForm(sys)
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_ground(s: u32) -> Result<()> {
    if s > MAX_CANONICAL_GROUND {
        return Err(Error::OutOfRange {
            what: "ground size for canonical form",
            value: s.into(),
            range: "1..=8",
        });
    }
    Ok(())
}

/// Minimal image of `sys` under all `s!` relabellings.
pub fn canonical_form(sys: &SetSystem) -> Result<CanonicalForm> {
    let s = sys.ground().size();
    check_ground(s)?;
    let best = (0..s as usize)
        .permutations(s as usize)
        .map(|perm| sys.relabel(&perm))
        .min()
        .expect("at least the identity permutation");
    Ok(CanonicalForm(best))
}

/// Whether two systems differ only by a relabelling of the ground set.
pub fn is_isomorphic(a: &SetSystem, b: &SetSystem) -> Result<bool> {
    if a.ground() != b.ground() || a.len() != b.len() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Canonicaliser for systems packed as a selector word over `P(S)`, `s <= 6`.
///
/// Bit `k` of a selector stands for the subset with mask `k`. For two sorted
/// member sequences of equal length, the lexicographically smaller one is the
/// one containing the lowest subset in which they differ, so the minimal image
/// is the image whose bit-reversed selector is largest.
pub(crate) struct PackedCanonicalizer {
    /// `images[p][k]`: image of subset `k` under permutation `p`.
    images: Vec<Vec<u8>>,
}

impl PackedCanonicalizer {
    pub fn new(s: u32) -> Self {
        assert!(s <= 6, "packed selectors hold at most 64 subsets");
        let n = 1usize << s;
        let images = (0..s as usize)
            .permutations(s as usize)
            .map(|perm| {
                (0..n)
                    .map(|k| {
                        (0..s as usize)
                            .filter(|&i| k >> i & 1 == 1)
                            .fold(0u8, |acc, i| acc | 1 << perm[i])
                    })
                    .collect()
            })
            .collect();
        Self { images }
    }

    pub fn canonical(&self, selector: u64) -> u64 {
        self.images
            .iter()
            .map(|table| {
                let mut rest = selector;
                let mut out = 0u64;
                while rest != 0 {
                    let k = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    out |= 1u64 << table[k];
                }
                out
            })
            .max_by_key(|img| img.reverse_bits())
            .expect("at least the identity permutation")
    }
}
