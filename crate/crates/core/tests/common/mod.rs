//! Test-only oracles: naive re-implementations straight from the definitions,
//! brute-force classification, and seeded random systems.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use bondy::enumerate::{canonical_form, CanonicalForm};
use bondy::{GroundSet, SetSystem, SubsetMask};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Uniform number of members in `0..=max_len`, then a uniform sample of
/// that many distinct subsets.
pub fn random_system(rng: &mut StdRng, s: u32, max_len: usize) -> SetSystem {
    let g = GroundSet::new(s).unwrap();
    let n = g.power_set_len() as usize;
    let k = rng.gen_range(0..=max_len.min(n));
    let members = rand::seq::index::sample(rng, n, k)
        .into_iter()
        .map(|i| SubsetMask::from_bits(i as u64));
    SetSystem::new(g, members).unwrap()
}

/// Pairs `(A, A ∪ {a})`, by double loop over members.
pub fn naive_pair_count(sys: &SetSystem, a: u32) -> usize {
    let mut n = 0;
    for x in sys.iter() {
        for y in sys.iter() {
            if !x.contains(a) && y == x.with(a) {
                n += 1;
            }
        }
    }
    n
}

pub fn naive_lambda(sys: &SetSystem) -> Vec<u32> {
    sys.ground().elements().filter(|&a| naive_pair_count(sys, a) >= 1).collect()
}

pub fn naive_lambda1(sys: &SetSystem) -> Vec<u32> {
    sys.ground().elements().filter(|&a| naive_pair_count(sys, a) == 1).collect()
}

pub fn naive_kappa(sys: &SetSystem) -> Vec<SubsetMask> {
    sys.iter()
        .filter(|&x| sys.iter().any(|y| x.symmetric_difference(y).len() == 1))
        .collect()
}

/// The Bondy definition read literally: some `a` such that `A, A ∪ {a} ∈ 𝒜`
/// implies `a ∈ A`.
pub fn naive_is_bondy(sys: &SetSystem) -> bool {
    sys.ground().elements().any(|a| {
        sys.iter()
            .all(|x| !sys.contains(x.with(a)) || x.contains(a))
    })
}

/// Non-Bondy and every proper subsystem (not only single removals) Bondy.
pub fn naive_is_inclusion_minimal(sys: &SetSystem) -> bool {
    if naive_is_bondy(sys) {
        return false;
    }
    let n = sys.len();
    assert!(n <= 20);
    let members = sys.members();
    (0..(1u32 << n) - 1).all(|pick| {
        let sub = SetSystem::new(
            sys.ground(),
            (0..n).filter(|i| pick >> i & 1 == 1).map(|i| members[i]),
        )
        .unwrap();
        naive_is_bondy(&sub)
    })
}

pub fn naive_is_slender(sys: &SetSystem) -> bool {
    naive_kappa(sys).len() == sys.len() && naive_lambda1(sys).len() == sys.ground().size() as usize
}

/// Every subsystem of `P(S)`, `s <= 4`.
pub fn all_systems(s: u32) -> impl Iterator<Item = SetSystem> {
    assert!(s <= 4);
    let g = GroundSet::new(s).unwrap();
    (0..1u64 << (1u64 << s)).map(move |sel| SetSystem::from_selector(g, sel))
}

/// Brute-force classes of inclusion-minimal (and slender) non-Bondy systems
/// by size, scanning all of `P(P(S))`.
pub struct BruteClasses {
    pub minimal: BTreeMap<usize, BTreeSet<CanonicalForm>>,
    pub slender: BTreeMap<usize, BTreeSet<CanonicalForm>>,
}

pub fn brute_force_classes(s: u32) -> BruteClasses {
    let mut minimal: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
    let mut slender: BTreeMap<usize, BTreeSet<CanonicalForm>> = BTreeMap::new();
    for sys in all_systems(s) {
        if sys.len() <= s as usize || naive_is_bondy(&sys) {
            continue;
        }
        // single-removal test is enough here; the full-subsystem oracle is
        // cross-checked against it separately
        let minimal_here = sys
            .iter()
            .all(|m| naive_is_bondy(&sys.without_member(m)));
        if !minimal_here {
            continue;
        }
        let c = canonical_form(&sys).unwrap();
        if naive_is_slender(&sys) {
            slender.entry(sys.len()).or_default().insert(c.clone());
        }
        minimal.entry(sys.len()).or_default().insert(c);
    }
    BruteClasses { minimal, slender }
}
