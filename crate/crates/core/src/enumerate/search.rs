//! Exhaustive search for inclusion-minimal non-Bondy systems on `s <= 5`.
//!
//! An inclusion-minimal non-Bondy system is exactly the union of one pair
//! `(A_a, A_a ∪ {a})` per direction `a`: the union of any such choice taken
//! from the system is a non-Bondy subsystem, so minimality forces equality.
//! The search therefore walks directions `1..=s` and picks one hypercube edge
//! in each, instead of choosing members one at a time.
//!
//! Systems are packed as selector words: bit `k` stands for the subset with
//! mask `k`.

use std::collections::HashSet;

use rayon::prelude::*;

/// Largest ground size the packed search handles.
pub const MAX_SEARCH_GROUND: u32 = 5;

/// Independently switchable prune rules. Every combination yields the same
/// set of isomorphism classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pruning {
    /// Drop partial unions that already exceed the requested size.
    pub size_bound: bool,
    /// A direction already covered by the partial union gets no new edge.
    /// Any minimal system is still reached: choose its edges greedily, reusing
    /// an edge already present whenever there is one. This subsumes the rule
    /// that a partial union that is already non-Bondy admits no new members.
    pub covered_reuse: bool,
    /// Direction 1 only tries `A_1 = {2..k+1}`, one representative per orbit
    /// of relabellings fixing element 1.
    pub first_edge_symmetry: bool,
}

impl Pruning {
    pub const ALL: Pruning = Pruning {
        size_bound: true,
        covered_reuse: true,
        first_edge_symmetry: true,
    };
    pub const NONE: Pruning = Pruning {
        size_bound: false,
        covered_reuse: false,
        first_edge_symmetry: false,
    };
}

impl Default for Pruning {
    fn default() -> Self {
        Self::ALL
    }
}

/// Bit operations on selectors over `P({1..s})`.
#[derive(Clone, Debug)]
pub(crate) struct Packed {
    s: u32,
    /// `lower[a]`: subsets not containing element `a + 1`.
    lower: Vec<u64>,
}

impl Packed {
    pub fn new(s: u32) -> Self {
        assert!((1..=6).contains(&s));
        let n = 1u64 << s;
        let lower = (0..s)
            .map(|a| (0..n).filter(|k| k >> a & 1 == 0).fold(0u64, |acc, k| acc | 1 << k))
            .collect();
        Self { s, lower }
    }

    /// Lower ends of all pairs in direction `a`.
    #[inline]
    pub fn pairs(&self, sel: u64, a: u32) -> u64 {
        sel & (sel >> (1u32 << a)) & self.lower[a as usize]
    }

    #[inline]
    pub fn covers(&self, sel: u64, a: u32) -> bool {
        self.pairs(sel, a) != 0
    }

    #[cfg(test)]
    pub fn is_non_bondy(&self, sel: u64) -> bool {
        (0..self.s).all(|a| self.covers(sel, a))
    }

    /// Non-Bondy and no single member removable: each member must be an end
    /// of the only pair in some direction.
    pub fn is_inclusion_minimal(&self, sel: u64) -> bool {
        let mut pinned = 0u64;
        for a in 0..self.s {
            let p = self.pairs(sel, a);
            match p.count_ones() {
                0 => return false,
                1 => pinned |= p | p << (1u32 << a),
                _ => {}
            }
        }
        pinned == sel
    }

    /// `ϰ(𝒜) = 𝒜` and `λ₁(𝒜) = S`.
    pub fn is_slender(&self, sel: u64) -> bool {
        let mut near = 0u64;
        for a in 0..self.s {
            if self.pairs(sel, a).count_ones() != 1 {
                return false;
            }
            let shift = 1u32 << a;
            near |= (sel >> shift) & self.lower[a as usize];
            near |= (sel & self.lower[a as usize]) << shift;
        }
        sel & !near == 0
    }

    /// Edge `{A, A ∪ {a}}` as a selector.
    #[inline]
    fn edge(lower_end: u64, a: u32) -> u64 {
        (1u64 << lower_end) | (1u64 << (lower_end | 1 << a))
    }

    fn lower_ends(&self, a: u32) -> impl Iterator<Item = u64> + '_ {
        let mut rest = self.lower[a as usize];
        std::iter::from_fn(move || {
            (rest != 0).then(|| {
                let k = rest.trailing_zeros() as u64;
                rest &= rest - 1;
                k
            })
        })
    }
}

struct Walker<'a> {
    packed: &'a Packed,
    pruning: Pruning,
    max_size: u32,
    found: HashSet<u64>,
}

impl Walker<'_> {
    fn descend(&mut self, partial: u64, a: u32) {
        if a == self.packed.s {
            if self.packed.is_inclusion_minimal(partial) {
                self.found.insert(partial);
            }
            return;
        }
        if self.pruning.covered_reuse && self.packed.covers(partial, a) {
            self.descend(partial, a + 1);
            return;
        }
        let packed = self.packed;
        for lo in packed.lower_ends(a) {
            let next = partial | Packed::edge(lo, a);
            if self.pruning.size_bound && next.count_ones() > self.max_size {
                continue;
            }
            self.descend(next, a + 1);
        }
    }
}

/// Top-level branches: the edge chosen in direction 1.
fn first_edges(packed: &Packed, pruning: Pruning) -> Vec<u64> {
    if pruning.first_edge_symmetry {
        // A_1 = {2..k+1}; element 1 is bit 0, so these are bits 1..=k.
        (0..packed.s).map(|k| ((1u64 << k) - 1) << 1).collect()
    } else {
        packed.lower_ends(0).collect()
    }
}

/// All inclusion-minimal non-Bondy systems with at most `max_size` members
/// reached by the search, as raw selectors (not deduplicated up to
/// isomorphism). With symmetry breaking on, only a subset of each class is
/// reached, but every class is.
pub(crate) fn minimal_selectors(
    s: u32,
    max_size: u32,
    pruning: Pruning,
    pool: Option<&rayon::ThreadPool>,
) -> HashSet<u64> {
    let packed = Packed::new(s);
    let branches = first_edges(&packed, pruning);
    let run = || {
        branches
            .par_iter()
            .map(|&lo| {
                let mut w = Walker {
                    packed: &packed,
                    pruning,
                    max_size,
                    found: HashSet::new(),
                };
                w.descend(Packed::edge(lo, 0), 1);
                w.found
            })
            .reduce(HashSet::new, |mut a, b| {
                a.extend(b);
                a
            })
    };
    let mut found = match pool {
        Some(p) => p.install(run),
        None => run(),
    };
    found.retain(|sel| sel.count_ones() <= max_size);
    found
}
