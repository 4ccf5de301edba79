//! Value types: ground sets, subsets as bit masks, set systems and element sets.
//!
//! Elements are labelled `1..=s`; element `i` lives in bit `i - 1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported ground size. Every subset fits one `u64`.
pub const MAX_GROUND: u32 = 63;

/// A finite ground set `{1, ..., s}` with `1 <= s <= 63`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroundSet {
    size: u32,
}

impl GroundSet {
    pub fn new(size: u32) -> Result<Self> {
        if size == 0 || size > MAX_GROUND {
            return Err(Error::InvalidGround(size));
        }
        Ok(Self { size })
    }

    #[inline]
    pub fn size(self) -> u32 {
        self.size
    }

    /// The subset `S` itself.
    #[inline]
    pub fn full(self) -> SubsetMask {
        SubsetMask((1u64 << self.size) - 1)
    }

    /// Number of subsets, `2^s`.
    #[inline]
    pub fn power_set_len(self) -> u64 {
        1u64 << self.size
    }

    pub fn elements(self) -> impl Iterator<Item = u32> {
        1..=self.size
    }

    #[inline]
    pub fn contains_element(self, element: u32) -> bool {
        (1..=self.size).contains(&element)
    }

    #[inline]
    pub fn admits(self, mask: SubsetMask) -> bool {
        mask.0 & !self.full().0 == 0
    }

    pub fn check_element(self, element: u32) -> Result<()> {
        if self.contains_element(element) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                element,
                ground: self.size,
            })
        }
    }

    pub fn check_mask(self, mask: SubsetMask) -> Result<()> {
        if self.admits(mask) {
            Ok(())
        } else {
            Err(Error::MaskOutOfRange {
                mask,
                ground: self.size,
            })
        }
    }
}

/// One subset of the ground set as a characteristic bit vector.
///
/// Ordering is by numeric value of the bits.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetMask(u64);

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        SubsetMask(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{element}`; `element` is 1-based and must be at most 64.
    #[inline]
    pub fn singleton(element: u32) -> Self {
        debug_assert!((1..=64).contains(&element));
        SubsetMask(1u64 << (element - 1))
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(elements: I) -> Self {
        elements
            .into_iter()
            .fold(Self::EMPTY, |acc, e| acc.with(e))
    }

    #[inline]
    pub fn contains(self, element: u32) -> bool {
        (1..=64).contains(&element) && self.0 >> (element - 1) & 1 == 1
    }

    #[inline]
    pub fn with(self, element: u32) -> Self {
        self.union(Self::singleton(element))
    }

    #[inline]
    pub fn without(self, element: u32) -> Self {
        SubsetMask(self.0 & !Self::singleton(element).0)
    }

    #[inline]
    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        SubsetMask(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        SubsetMask(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        SubsetMask(self.0 & !other.0)
    }

    #[inline]
    pub fn symmetric_difference(self, other: Self) -> Self {
        SubsetMask(self.0 ^ other.0)
    }

    /// `|A ÷ B|`.
    #[inline]
    pub fn distance(self, other: Self) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    #[inline]
    pub fn is_subset_of(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Elements in ascending order, 1-based.
    pub fn elements(self) -> impl Iterator<Item = u32> {
        let mut rest = self.0;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let bit = rest.trailing_zeros();
                rest &= rest - 1;
                Some(bit + 1)
            }
        })
    }

    /// Image under a relabelling; `perm[i]` is the new 0-based position of bit `i`.
    pub fn relabel(self, perm: &[usize]) -> Self {
        let mut out = 0u64;
        for e in self.elements() {
            out |= 1u64 << perm[(e - 1) as usize];
        }
        SubsetMask(out)
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        f.write_str("{")?;
        for (i, e) in self.elements().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

/// A duplicate-free collection of subsets over a declared ground set.
///
/// Members are kept sorted ascending by mask value, so structural equality is
/// system equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetSystem {
    ground: GroundSet,
    members: Vec<SubsetMask>,
}

impl SetSystem {
    /// Builds a system, rejecting out-of-range masks and duplicates.
    pub fn new<I>(ground: GroundSet, members: I) -> Result<Self>
    where
        I: IntoIterator<Item = SubsetMask>,
    {
        let mut members: Vec<SubsetMask> = members.into_iter().collect();
        for &m in &members {
            ground.check_mask(m)?;
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateMember(w[0]));
        }
        Ok(Self { ground, members })
    }

    /// Convenience constructor from 1-based element lists.
    pub fn from_sets(size: u32, sets: &[&[u32]]) -> Result<Self> {
        let ground = GroundSet::new(size)?;
        let mut masks = Vec::with_capacity(sets.len());
        for set in sets {
            for &e in *set {
                ground.check_element(e)?;
            }
            masks.push(SubsetMask::from_elements(set.iter().copied()));
        }
        Self::new(ground, masks)
    }

    /// Caller guarantees `members` is sorted, duplicate-free and within `ground`.
    pub(crate) fn from_sorted_unchecked(ground: GroundSet, members: Vec<SubsetMask>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(members.iter().all(|&m| ground.admits(m)));
        Self { ground, members }
    }

    pub fn empty(ground: GroundSet) -> Self {
        Self {
            ground,
            members: Vec::new(),
        }
    }

    /// The whole power set `P(S)`.
    pub fn power_set(ground: GroundSet) -> Self {
        let members = (0..ground.power_set_len()).map(SubsetMask).collect();
        Self { ground, members }
    }

    /// Subsystem of `P(S)` selected by the bits of `selector`; bit `k` picks mask `k`.
    /// Only meaningful for `s <= 6`.
    pub fn from_selector(ground: GroundSet, selector: u64) -> Self {
        debug_assert!(ground.size() <= 6);
        let members = (0..ground.power_set_len())
            .filter(|k| selector >> k & 1 == 1)
            .map(SubsetMask)
            .collect();
        Self { ground, members }
    }

    #[inline]
    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn members(&self) -> &[SubsetMask] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = SubsetMask> + '_ {
        self.members.iter().copied()
    }

    #[inline]
    pub fn contains(&self, mask: SubsetMask) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn contains_empty(&self) -> bool {
        self.members.first() == Some(&SubsetMask::EMPTY)
    }

    pub fn contains_full(&self) -> bool {
        self.members.last() == Some(&self.ground.full())
    }

    /// `self ∪ {mask}`; a no-op if already present.
    pub fn with_member(&self, mask: SubsetMask) -> Result<Self> {
        self.ground.check_mask(mask)?;
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&mask) {
            members.insert(pos, mask);
        }
        Ok(Self {
            ground: self.ground,
            members,
        })
    }

    /// `self \ {mask}`; a no-op if absent.
    pub fn without_member(&self, mask: SubsetMask) -> Self {
        let members = self.iter().filter(|&m| m != mask).collect();
        Self {
            ground: self.ground,
            members,
        }
    }

    pub fn is_subsystem_of(&self, other: &SetSystem) -> bool {
        self.ground == other.ground && self.iter().all(|m| other.contains(m))
    }

    /// `∩𝒜`; the full set for the empty system.
    pub fn intersection_of_members(&self) -> SubsetMask {
        self.iter()
            .fold(self.ground.full(), |acc, m| acc.intersection(m))
    }

    /// `∪𝒜`; the empty set for the empty system.
    pub fn union_of_members(&self) -> SubsetMask {
        self.iter().fold(SubsetMask::EMPTY, |acc, m| acc.union(m))
    }

    /// Same system over a larger ground set, labels unchanged.
    pub fn lift(&self, ground: GroundSet) -> Result<Self> {
        if ground.size() < self.ground.size() {
            return Err(Error::GroundMismatch(self.ground.size(), ground.size()));
        }
        Ok(Self {
            ground,
            members: self.members.clone(),
        })
    }

    /// Image under a relabelling of the ground set; `perm[i]` is the new
    /// 0-based position of 0-based element `i`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        debug_assert_eq!(perm.len(), self.ground.size() as usize);
        let mut members: Vec<SubsetMask> = self.iter().map(|m| m.relabel(perm)).collect();
        members.sort_unstable();
        Self {
            ground: self.ground,
            members,
        }
    }
}

impl fmt::Display for SetSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // by size, then lexicographically, like written documents
        let mut shown: Vec<(u32, Vec<u32>, SubsetMask)> =
            self.iter().map(|m| (m.len(), m.elements().collect(), m)).collect();
        shown.sort_unstable();
        f.write_str("{")?;
        for (i, (_, _, m)) in shown.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str("}")
    }
}

/// A set of ground-set elements, e.g. `λ(𝒜)` or a list of Bondy witnesses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ElementSet {
    ground: GroundSet,
    mask: SubsetMask,
}

impl ElementSet {
    pub fn new(ground: GroundSet, mask: SubsetMask) -> Result<Self> {
        ground.check_mask(mask)?;
        Ok(Self { ground, mask })
    }

    pub fn from_elements<I: IntoIterator<Item = u32>>(ground: GroundSet, elements: I) -> Result<Self> {
        let mut mask = SubsetMask::EMPTY;
        for e in elements {
            ground.check_element(e)?;
            mask = mask.with(e);
        }
        Ok(Self { ground, mask })
    }

    pub fn empty(ground: GroundSet) -> Self {
        Self {
            ground,
            mask: SubsetMask::EMPTY,
        }
    }

    pub fn full(ground: GroundSet) -> Self {
        Self {
            ground,
            mask: ground.full(),
        }
    }

    pub(crate) fn from_mask_unchecked(ground: GroundSet, mask: SubsetMask) -> Self {
        debug_assert!(ground.admits(mask));
        Self { ground, mask }
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn mask(&self) -> SubsetMask {
        self.mask
    }

    pub fn contains(&self, element: u32) -> bool {
        self.mask.contains(element)
    }

    pub fn len(&self) -> usize {
        self.mask.len() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.mask == self.ground.full()
    }

    /// `{1..s} \ self`.
    pub fn complement(&self) -> Self {
        Self {
            ground: self.ground,
            mask: self.ground.full().difference(self.mask),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> {
        self.mask.elements()
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().collect()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}
