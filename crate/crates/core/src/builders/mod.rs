//! Constructive realizations of inclusion-minimal and slender non-Bondy systems.
//!
//! Every builder returns a [`Built`]: the system together with the
//! [`BuildTrace`] that produced it, so the result can be replayed and
//! re-checked independently.

mod fixtures;
mod trace;

use std::collections::HashMap;

pub use fixtures::{fixture_system, FixtureTable};
pub use trace::BuildTrace;

use crate::error::{Error, Result};
use crate::operators::{complement_system, is_inclusion_minimal_non_bondy};
use crate::system::{GroundSet, SetSystem, SubsetMask};

/// A system paired with its derivation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Built {
    pub system: SetSystem,
    pub trace: BuildTrace,
}

impl Built {
    pub fn disjoint_union(&self, other: &Built) -> Result<Built> {
        Ok(Built {
            system: disjoint_union(&self.system, &other.system)?,
            trace: BuildTrace::DisjointUnion {
                left: Box::new(self.trace.clone()),
                right: Box::new(other.trace.clone()),
            },
        })
    }

    pub fn extend(&self, member: SubsetMask) -> Result<Built> {
        let system = extend(&self.system, member)?;
        Ok(Built {
            trace: BuildTrace::Extend {
                member: member.elements().collect(),
                new_element: system.ground().size(),
                input: Box::new(self.trace.clone()),
            },
            system,
        })
    }

    pub fn complement(&self) -> Built {
        Built {
            system: complement_system(&self.system),
            trace: BuildTrace::Complement {
                input: Box::new(self.trace.clone()),
            },
        }
    }
}

/// A literal system from the small-case tables.
pub fn fixture(table: FixtureTable, index: usize) -> Result<Built> {
    Ok(Built {
        system: fixture_system(table, index)?,
        trace: BuildTrace::Fixture { table, index },
    })
}

/// Disjoint union, with `b`'s elements shifted up by `a`'s ground size.
///
/// Both inputs must be inclusion-minimal non-Bondy and avoid `∅`; the result
/// then is inclusion-minimal non-Bondy on `s₁ + s₂` elements.
pub fn disjoint_union(a: &SetSystem, b: &SetSystem) -> Result<SetSystem> {
    for x in [a, b] {
        if x.contains_empty() {
            return Err(Error::ContainsEmptySet);
        }
        if !is_inclusion_minimal_non_bondy(x) {
            return Err(Error::NotInclusionMinimal);
        }
    }
    let shift = a.ground().size();
    let ground = GroundSet::new(shift + b.ground().size())?;
    let shifted = b.iter().map(|m| SubsetMask::from_bits(m.bits() << shift));
    SetSystem::new(ground, a.iter().chain(shifted))
}

/// `𝒜 ∪ {A ∪ {w}}` on `S ∪ {w}` with `w = s + 1`.
pub fn extend(sys: &SetSystem, member: SubsetMask) -> Result<SetSystem> {
    if !sys.contains(member) {
        return Err(Error::MemberNotInSystem(member));
    }
    if !is_inclusion_minimal_non_bondy(sys) {
        return Err(Error::NotInclusionMinimal);
    }
    let w = sys.ground().size() + 1;
    let ground = GroundSet::new(w)?;
    sys.lift(ground)?.with_member(member.with(w))
}

/// The explicit slender system of size `2s` for `5 <= s <= 9`.
///
/// `s = 5` is the pentagon system; each later size adds two sets:
/// `{S₅, S₆}`, then `{{6}, {6,7}}`, `{{1,7}, {1,7,8}}`, `{S₈, S₉}`.
pub fn base_2s_system(s: u32) -> Result<SetSystem> {
    if !(5..=9).contains(&s) {
        return Err(Error::OutOfRange {
            what: "s",
            value: s.into(),
            range: "5..=9",
        });
    }
    let prefix = |n: u32| -> Vec<u32> { (1..=n).collect() };
    let mut sets: Vec<Vec<u32>> = fixtures::pentagon().iter().map(|x| x.to_vec()).collect();
    let steps: [[Vec<u32>; 2]; 4] = [
        [prefix(5), prefix(6)],
        [vec![6], vec![6, 7]],
        [vec![1, 7], vec![1, 7, 8]],
        [prefix(8), prefix(9)],
    ];
    for step in steps.into_iter().take((s - 5) as usize) {
        sets.extend(step);
    }
    let refs: Vec<&[u32]> = sets.iter().map(Vec::as_slice).collect();
    SetSystem::from_sets(s, &refs)
}

pub fn base_2s(s: u32) -> Result<Built> {
    Ok(Built {
        system: base_2s_system(s)?,
        trace: BuildTrace::Base2s { s },
    })
}

/// Which extreme subset a `2s`-system must avoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    NoEmpty,
    NoFull,
}

/// Ground sizes of the `base_2s` blocks a `2s`-system on `s` elements is glued from.
pub fn decompose_2s(s: u32) -> Result<Vec<u32>> {
    if s < 5 {
        return Err(Error::OutOfRange {
            what: "s",
            value: s.into(),
            range: ">= 5",
        });
    }
    if s <= 9 {
        return Ok(vec![s]);
    }
    let (fives, rem) = (s / 5, s % 5);
    Ok(if rem == 0 {
        vec![5; fives as usize]
    } else {
        let mut parts = vec![5; fives as usize - 1];
        parts.push(5 + rem);
        parts
    })
}

/// Slender non-Bondy system of size `2s` avoiding `∅` (or `S`).
///
/// Blocks from [`decompose_2s`] are joined left to right by disjoint union;
/// the `NoFull` variant is the complement of the `NoEmpty` one.
pub fn build_slender_2s(s: u32, variant: Variant) -> Result<Built> {
    let parts = decompose_2s(s)?;
    let mut acc = base_2s(parts[0])?;
    for &p in &parts[1..] {
        acc = acc.disjoint_union(&base_2s(p)?)?;
    }
    Ok(match variant {
        Variant::NoEmpty => acc,
        Variant::NoFull => acc.complement(),
    })
}

/// A request for a slender system of size `t` on `s` elements,
/// `s >= 6` and `s + 1 <= t <= 2s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpectrumTarget {
    s: u32,
    t: usize,
}

impl SpectrumTarget {
    pub fn new(s: u32, t: usize) -> Result<Self> {
        let hint = if s < 6 {
            " (s < 6)"
        } else if t > 2 * s as usize {
            " (t exceeds 2s)"
        } else if t <= s as usize {
            " (t below s+1)"
        } else {
            ""
        };
        if !hint.is_empty() || s > crate::system::MAX_GROUND {
            return Err(Error::TargetOutOfBounds { s, t, hint });
        }
        Ok(Self { s, t })
    }

    pub fn s(self) -> u32 {
        self.s
    }

    pub fn t(self) -> usize {
        self.t
    }
}

/// Memoized realization of every admissible `(s, t)`.
///
/// `s = 6` reads the table; `t = 2s` uses [`build_slender_2s`] with
/// `NoFull`; anything else extends the `(s-1, t-1)` system by its smallest
/// member. The full set never appears, so the extension keeps it absent.
#[derive(Debug, Default)]
pub struct SlenderBuilder {
    cache: HashMap<SpectrumTarget, Built>,
}

impl SlenderBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn build(&mut self, target: SpectrumTarget) -> Result<Built> {
        if let Some(hit) = self.cache.get(&target) {
            return Ok(hit.clone());
        }
        let (s, t) = (target.s, target.t);
        let built = if s == 6 {
            fixture(FixtureTable::S6, t - 6)?
        } else if t == 2 * s as usize {
            build_slender_2s(s, Variant::NoFull)?
        } else {
            let prev = self.build(SpectrumTarget::new(s - 1, t - 1)?)?;
            let smallest = prev.system.members()[0];
            prev.extend(smallest)?
        };
        self.cache.insert(target, built.clone());
        Ok(built)
    }
}

pub fn build_slender(target: SpectrumTarget) -> Result<Built> {
    SlenderBuilder::new().build(target)
}

/// Rebuilds a system from its trace.
pub fn replay(trace: &BuildTrace) -> Result<SetSystem> {
    match trace {
        BuildTrace::Fixture { table, index } => fixture_system(*table, *index),
        BuildTrace::Base2s { s } => base_2s_system(*s),
        BuildTrace::DisjointUnion { left, right } => disjoint_union(&replay(left)?, &replay(right)?),
        BuildTrace::Extend {
            member,
            new_element,
            input,
        } => {
            let inner = replay(input)?;
            if *new_element != inner.ground().size() + 1 {
                return Err(Error::BadTrace(format!(
                    "new element {new_element} is not s+1 = {}",
                    inner.ground().size() + 1
                )));
            }
            for &e in member {
                inner.ground().check_element(e)?;
            }
            extend(&inner, SubsetMask::from_elements(member.iter().copied()))
        }
        BuildTrace::Complement { input } => Ok(complement_system(&replay(input)?)),
    }
}

/// `𝒲 ∪ {A ∪ {w} : A ∈ P(S \ {w}) \ 𝒲}`: a Bondy system of size `2^(s-1)`.
///
/// Every member of `seed` must avoid `pivot`. Limited to `s <= 24`.
pub fn build_maximal_bondy(pivot: u32, seed: &SetSystem) -> Result<SetSystem> {
    let ground = seed.ground();
    ground.check_element(pivot)?;
    if ground.size() > 24 {
        return Err(Error::OutOfRange {
            what: "s",
            value: ground.size().into(),
            range: "1..=24",
        });
    }
    if let Some(bad) = seed.iter().find(|m| m.contains(pivot)) {
        return Err(Error::SeedContainsPivot { mask: bad, pivot });
    }
    let members = (0..ground.power_set_len())
        .map(SubsetMask::from_bits)
        .filter(|a| !a.contains(pivot))
        .map(|a| if seed.contains(a) { a } else { a.with(pivot) });
    SetSystem::new(ground, members)
}
