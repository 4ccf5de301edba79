//! The λ, λ₁ and ϰ operators and the Bondy-family predicates built on them.
//!
//! A *pair in direction a* is two members `A`, `A ∪ {a}` with `a ∉ A`, i.e. an
//! edge of the hypercube `P(S)` spanned by the system. Almost everything here
//! reduces to counting those pairs per direction.

use crate::error::{Error, Result};
use crate::system::{ElementSet, GroundSet, SetSystem, SubsetMask};

/// Outcome of the Bondy test.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BondyVerdict {
    pub is_bondy: bool,
    /// Every element `a` such that `A, A ∪ {a} ∈ 𝒜` forces `a ∈ A`.
    pub witnesses: ElementSet,
}

/// Number of pairs `(A, A ∪ {a})` in the system, indexed by `a - 1`.
pub fn pair_counts(sys: &SetSystem) -> Vec<u32> {
    let ground = sys.ground();
    let mut counts = vec![0u32; ground.size() as usize];
    for lower in sys.iter() {
        for a in ground.full().difference(lower).elements() {
            if sys.contains(lower.with(a)) {
                counts[(a - 1) as usize] += 1;
            }
        }
    }
    counts
}

fn elements_where(ground: GroundSet, counts: &[u32], keep: impl Fn(u32) -> bool) -> ElementSet {
    let mask = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| keep(c))
        .fold(SubsetMask::EMPTY, |m, (i, _)| m.with(i as u32 + 1));
    ElementSet::from_mask_unchecked(ground, mask)
}

/// `λ(𝒜)`: elements with at least one pair.
pub fn lambda(sys: &SetSystem) -> ElementSet {
    elements_where(sys.ground(), &pair_counts(sys), |c| c >= 1)
}

/// `λ₁(𝒜)`: elements with exactly one pair.
pub fn lambda1(sys: &SetSystem) -> ElementSet {
    elements_where(sys.ground(), &pair_counts(sys), |c| c == 1)
}

/// Whether `mask` has a neighbour at symmetric-difference distance 1 in `sys`.
fn has_neighbour(sys: &SetSystem, mask: SubsetMask) -> bool {
    sys.ground()
        .elements()
        .any(|e| sys.contains(mask.symmetric_difference(SubsetMask::singleton(e))))
}

/// `ϰ(𝒜)`: the members at distance exactly 1 from some other member.
pub fn kappa(sys: &SetSystem) -> SetSystem {
    let members = sys.iter().filter(|&m| has_neighbour(sys, m)).collect();
    SetSystem::from_sorted_unchecked(sys.ground(), members)
}

/// Bondy test via `λ(𝒜) = S ⇔ non-Bondy`. Witnesses are `S \ λ(𝒜)`.
pub fn is_bondy(sys: &SetSystem) -> BondyVerdict {
    let witnesses = lambda(sys).complement();
    BondyVerdict {
        is_bondy: !witnesses.is_empty(),
        witnesses,
    }
}

#[inline]
pub fn is_non_bondy(sys: &SetSystem) -> bool {
    lambda(sys).is_full()
}

/// `{S \ A : A ∈ 𝒜}`.
pub fn complement_system(sys: &SetSystem) -> SetSystem {
    let full = sys.ground().full();
    let mut members: Vec<SubsetMask> = sys.iter().map(|m| full.difference(m)).collect();
    members.sort_unstable();
    SetSystem::from_sorted_unchecked(sys.ground(), members)
}

/// Non-Bondy, and removing any single member makes it Bondy.
///
/// Non-Bondy is upward closed, so this is the same as every proper subsystem
/// being Bondy. A member is removable iff none of its pairs is the only pair
/// in that direction, which lets us decide everything from one count table.
pub fn is_inclusion_minimal_non_bondy(sys: &SetSystem) -> bool {
    let counts = pair_counts(sys);
    if counts.contains(&0) {
        return false;
    }
    sys.iter().all(|m| !is_removable(sys, &counts, m, |x| sys.contains(x)))
}

/// Whether dropping `m` keeps every direction covered.
fn is_removable(
    sys: &SetSystem,
    counts: &[u32],
    m: SubsetMask,
    present: impl Fn(SubsetMask) -> bool,
) -> bool {
    sys.ground().elements().all(|a| {
        let partner = m.symmetric_difference(SubsetMask::singleton(a));
        !present(partner) || counts[(a - 1) as usize] > 1
    })
}

/// `ϰ(𝒜) = 𝒜` and `λ₁(𝒜) = S`.
pub fn is_slender(sys: &SetSystem) -> bool {
    lambda1(sys).is_full() && kappa(sys).len() == sys.len()
}

/// Greedy reduction to an inclusion-minimal non-Bondy subsystem.
///
/// Members are scanned in descending mask order and the first one whose
/// removal keeps the system non-Bondy is dropped, then the scan restarts.
/// Removal only lowers pair counts, so a member found non-removable stays
/// non-removable; the restart therefore resumes where the previous scan stopped
/// and a single descending pass gives the same result.
pub fn minimize(sys: &SetSystem) -> Result<SetSystem> {
    let mut counts = pair_counts(sys);
    if counts.contains(&0) {
        return Err(Error::BondyInput);
    }
    let members = sys.members();
    let mut alive = vec![true; members.len()];
    let index = |m: SubsetMask| members.binary_search(&m).ok();

    for i in (0..members.len()).rev() {
        let m = members[i];
        let present = |x: SubsetMask| index(x).is_some_and(|j| alive[j]);
        if !is_removable(sys, &counts, m, present) {
            continue;
        }
        for a in sys.ground().elements() {
            let partner = m.symmetric_difference(SubsetMask::singleton(a));
            if index(partner).is_some_and(|j| alive[j]) {
                counts[(a - 1) as usize] -= 1;
            }
        }
        alive[i] = false;
    }

    let kept = members
        .iter()
        .zip(&alive)
        .filter(|(_, &keep)| keep)
        .map(|(&m, _)| m)
        .collect();
    Ok(SetSystem::from_sorted_unchecked(sys.ground(), kept))
}

/// The pair `(A_a, A_a ∪ {a})` with the smallest `A_a`, for each direction.
///
/// Errors on Bondy input since some direction then has no pair.
pub fn witness_pairs(sys: &SetSystem) -> Result<Vec<(SubsetMask, SubsetMask)>> {
    sys.ground()
        .elements()
        .map(|a| {
            sys.iter()
                .filter(|m| !m.contains(a))
                .map(|m| (m, m.with(a)))
                .find(|&(_, upper)| sys.contains(upper))
                .ok_or(Error::BondyInput)
        })
        .collect()
}

/// Union of one witness pair per element: a non-Bondy subsystem with at most
/// `2s` members.
pub fn extract_witness_pairs(sys: &SetSystem) -> Result<SetSystem> {
    let mut members: Vec<SubsetMask> = witness_pairs(sys)?
        .into_iter()
        .flat_map(|(lo, hi)| [lo, hi])
        .collect();
    members.sort_unstable();
    members.dedup();
    Ok(SetSystem::from_sorted_unchecked(sys.ground(), members))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: u32, sets: &[&[u32]]) -> SetSystem {
        SetSystem::from_sets(s, sets).unwrap()
    }

    fn singletons_with_empty(s: u32) -> SetSystem {
        let g = GroundSet::new(s).unwrap();
        let members = std::iter::once(SubsetMask::EMPTY).chain(g.elements().map(SubsetMask::singleton));
        SetSystem::new(g, members).unwrap()
    }

    fn ten_set_example() -> SetSystem {
        sys(
            7,
            &[
                &[1], &[2], &[3], &[4], &[1, 2], &[3, 4], &[1, 2, 5], &[3, 4, 5], &[1, 2, 5, 6],
                &[3, 4, 5, 7],
            ],
        )
    }

    #[test]
    fn lambda_of_singletons_is_full() {
        for s in 1..=9 {
            assert!(lambda(&singletons_with_empty(s)).is_full());
        }
    }

    #[test]
    fn empty_system_edge_cases() {
        let g = GroundSet::new(3).unwrap();
        let e = SetSystem::empty(g);
        assert!(lambda(&e).is_empty());
        assert!(lambda1(&e).is_empty());
        assert!(kappa(&e).is_empty());
        let v = is_bondy(&e);
        assert!(v.is_bondy);
        assert_eq!(v.witnesses.to_vec(), vec![1, 2, 3]);
        assert!(complement_system(&e).is_empty());
        assert!(!is_inclusion_minimal_non_bondy(&e));
        assert_eq!(minimize(&e), Err(Error::BondyInput));
        assert_eq!(extract_witness_pairs(&e), Err(Error::BondyInput));
    }

    #[test]
    fn lambda1_of_square_is_empty() {
        let sq = sys(2, &[&[], &[1], &[2], &[1, 2]]);
        assert!(lambda(&sq).is_full());
        assert!(lambda1(&sq).is_empty());
    }

    #[test]
    fn kappa_examples() {
        assert!(kappa(&sys(2, &[&[], &[1, 2]])).is_empty());
        assert_eq!(kappa(&sys(3, &[&[], &[1], &[1, 2, 3]])), sys(3, &[&[], &[1]]));
        let e = ten_set_example();
        assert_eq!(kappa(&e), e);
    }

    #[test]
    fn ten_set_example_values() {
        let e = ten_set_example();
        assert!(lambda(&e).is_full());
        assert_eq!(lambda1(&e).to_vec(), vec![1, 2, 3, 4, 6, 7]);
        assert!(!is_bondy(&e).is_bondy);
        assert!(is_inclusion_minimal_non_bondy(&e));
        assert!(!is_slender(&e));
        let bigger = e.with_member(SubsetMask::from_elements([6, 7])).unwrap();
        assert!(!is_inclusion_minimal_non_bondy(&bigger));
    }

    #[test]
    fn singletons_are_minimal_non_bondy() {
        for s in 1..=8 {
            let x = singletons_with_empty(s);
            assert_eq!(x.len(), s as usize + 1);
            assert!(!is_bondy(&x).is_bondy);
            assert!(is_inclusion_minimal_non_bondy(&x));
            assert!(is_slender(&x));
        }
    }

    #[test]
    fn complement_examples() {
        let a1 = sys(1, &[&[], &[1]]);
        assert_eq!(complement_system(&a1), a1);
        let a2 = sys(2, &[&[], &[1], &[2]]);
        assert_eq!(complement_system(&a2), sys(2, &[&[1], &[2], &[1, 2]]));
    }

    #[test]
    fn minimize_examples() {
        let e = ten_set_example();
        assert_eq!(minimize(&e).unwrap(), e);

        let g = GroundSet::new(2).unwrap();
        let m = minimize(&SetSystem::power_set(g)).unwrap();
        assert_eq!(m.len(), 3);
        assert!(is_inclusion_minimal_non_bondy(&m));
        // descending scan drops {1,2} first, then finds ∅,{1},{2} irreducible
        assert_eq!(m, sys(2, &[&[], &[1], &[2]]));

        for s in 3..=7 {
            let x = singletons_with_empty(s)
                .with_member(SubsetMask::from_elements([1, 2]))
                .unwrap();
            let m = minimize(&x).unwrap();
            assert_eq!(m.len(), s as usize + 1);
            assert!(is_inclusion_minimal_non_bondy(&m));
        }
    }

    #[test]
    fn witness_pair_examples() {
        let x = singletons_with_empty(5);
        assert_eq!(extract_witness_pairs(&x).unwrap(), x);

        let g = GroundSet::new(3).unwrap();
        let w = extract_witness_pairs(&SetSystem::power_set(g)).unwrap();
        assert!(w.len() <= 6);
        assert!(!is_bondy(&w).is_bondy);
        // smallest lower set is ∅ in every direction
        assert_eq!(w, singletons_with_empty(3));

        let e = ten_set_example();
        assert_eq!(extract_witness_pairs(&e).unwrap(), e);
    }

    /// Literal restart-scan version of `minimize`, for cross-checking.
    fn minimize_restarting(sys: &SetSystem) -> SetSystem {
        let mut cur = sys.clone();
        'outer: loop {
            for &m in cur.members().iter().rev() {
                let smaller = cur.without_member(m);
                if is_non_bondy(&smaller) {
                    cur = smaller;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    #[test]
    fn single_pass_minimize_matches_restart_scan() {
        let g = GroundSet::new(4).unwrap();
        // a deterministic spread of selectors over P({1..4})
        let mut x: u64 = 0x9e37_79b9_7f4a_7c15;
        for _ in 0..2000 {
            x ^= x << 13;
            x ^= x >> 7;
            x ^= x << 17;
            let sel = x & 0xffff;
            let sys = SetSystem::from_selector(g, sel);
            if is_non_bondy(&sys) {
                assert_eq!(minimize(&sys).unwrap(), minimize_restarting(&sys), "{sys}");
            }
        }
    }
}
