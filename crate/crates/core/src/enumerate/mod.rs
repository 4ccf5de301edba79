//! Small-case classification up to relabelling, and the size spectra of
//! inclusion-minimal and slender non-Bondy systems.

mod canonical;
mod search;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

pub use canonical::{canonical_form, is_isomorphic, CanonicalForm, MAX_CANONICAL_GROUND};
pub use search::{Pruning, MAX_SEARCH_GROUND};

use canonical::PackedCanonicalizer;
use search::{minimal_selectors, Packed};

use crate::builders::{SlenderBuilder, SpectrumTarget};
use crate::error::{Error, Result};
use crate::operators::{is_inclusion_minimal_non_bondy, is_slender};
use crate::system::{GroundSet, SetSystem};

/// Which family a spectrum or enumeration is about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    InclusionMinimal,
    Slender,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::InclusionMinimal => "minimal",
            Kind::Slender => "slender",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "minimal" | "inclusion-minimal" => Ok(Kind::InclusionMinimal),
            "slender" => Ok(Kind::Slender),
            other => Err(format!("unknown kind `{other}` (expected minimal|slender)")),
        }
    }
}

/// Search configuration. `workers: None` uses the ambient rayon pool.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchOptions {
    pub pruning: Pruning,
    pub workers: Option<usize>,
}

impl SearchOptions {
    fn pool(&self) -> Option<rayon::ThreadPool> {
        self.workers.map(|n| {
            rayon::ThreadPoolBuilder::new()
                .num_threads(n.max(1))
                .build()
                .expect("thread pool")
        })
    }
}

/// One isomorphism class found by the exhaustive search.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassEntry {
    pub form: CanonicalForm,
    pub slender: bool,
}

/// All isomorphism classes of inclusion-minimal non-Bondy systems on `s`
/// elements with at most `max_size` members, grouped by size, each group in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub s: u32,
    pub by_size: BTreeMap<usize, Vec<ClassEntry>>,
}

impl Classification {
    pub fn classes(&self, t: usize, kind: Kind) -> Vec<CanonicalForm> {
        self.by_size
            .get(&t)
            .into_iter()
            .flatten()
            .filter(|e| kind == Kind::InclusionMinimal || e.slender)
            .map(|e| e.form.clone())
            .collect()
    }
}

fn check_search_ground(s: u32) -> Result<GroundSet> {
    if !(1..=MAX_SEARCH_GROUND).contains(&s) {
        return Err(Error::OutOfRange {
            what: "s",
            value: s.into(),
            range: "1..=5 for exhaustive search",
        });
    }
    GroundSet::new(s)
}

/// Exhaustive classification at `s <= 5`.
pub fn classify(s: u32, max_size: Option<usize>, options: SearchOptions) -> Result<Classification> {
    let ground = check_search_ground(s)?;
    let max_size = max_size.map_or(2 * s, |m| m.min(64) as u32);
    let pool = options.pool();
    let raw = minimal_selectors(s, max_size, options.pruning, pool.as_ref());

    let canon = PackedCanonicalizer::new(s);
    let packed = Packed::new(s);
    let forms: BTreeSet<u64> = raw.into_iter().map(|sel| canon.canonical(sel)).collect();

    let mut by_size: BTreeMap<usize, Vec<ClassEntry>> = BTreeMap::new();
    for sel in forms {
        let sys = SetSystem::from_selector(ground, sel);
        by_size.entry(sys.len()).or_default().push(ClassEntry {
            slender: packed.is_slender(sel),
            form: CanonicalForm::from_canonical_unchecked(sys),
        });
    }
    for group in by_size.values_mut() {
        group.sort();
    }
    Ok(Classification { s, by_size })
}

/// All isomorphism classes of size-`t` systems on `s <= 5` elements of the
/// given kind, in canonical order. Sizes outside `[s+1, 2s]` give an empty
/// list.
pub fn enumerate_minimal(s: u32, t: usize, kind: Kind) -> Result<Vec<CanonicalForm>> {
    enumerate_minimal_with(s, t, kind, SearchOptions::default())
}

pub fn enumerate_minimal_with(
    s: u32,
    t: usize,
    kind: Kind,
    options: SearchOptions,
) -> Result<Vec<CanonicalForm>> {
    let ground = check_search_ground(s)?;
    if t as u64 > ground.power_set_len() {
        return Err(Error::OutOfRange {
            what: "t",
            value: t as u64,
            range: "0..=2^s",
        });
    }
    if t <= s as usize || t > 2 * s as usize {
        return Ok(Vec::new());
    }
    Ok(classify(s, Some(t), options)?.classes(t, kind))
}

/// How a spectrum report was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Every system on `s` elements was accounted for.
    Exhaustive,
    /// One builder-produced, checker-verified representative per size;
    /// says nothing about classes or sizes outside `[s+1, 2s]`.
    ConstructiveCertificate,
}

impl Provenance {
    pub fn describe(self) -> &'static str {
        match self {
            Provenance::Exhaustive => "exhaustive enumeration",
            Provenance::ConstructiveCertificate => "constructive certificate, not exhaustive enumeration",
        }
    }
}

/// Attainable sizes for one ground size and kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumReport {
    pub s: u32,
    pub kind: Kind,
    pub provenance: Provenance,
    pub sizes: BTreeSet<usize>,
    /// One system per size: the least canonical form when exhaustive,
    /// the builder output for certificates.
    pub representatives: BTreeMap<usize, SetSystem>,
    /// Number of isomorphism classes per size; empty for certificates.
    pub class_counts: BTreeMap<usize, usize>,
}

impl SpectrumReport {
    fn from_classification(c: &Classification, kind: Kind) -> Self {
        let mut sizes = BTreeSet::new();
        let mut representatives = BTreeMap::new();
        let mut class_counts = BTreeMap::new();
        for &t in c.by_size.keys() {
            let classes = c.classes(t, kind);
            if let Some(first) = classes.first() {
                sizes.insert(t);
                representatives.insert(t, first.system().clone());
                class_counts.insert(t, classes.len());
            }
        }
        SpectrumReport {
            s: c.s,
            kind,
            provenance: Provenance::Exhaustive,
            sizes,
            representatives,
            class_counts,
        }
    }
}

/// Exhaustive spectrum at `s <= 5`.
pub fn spectrum(s: u32, kind: Kind) -> Result<SpectrumReport> {
    spectrum_with(s, kind, SearchOptions::default())
}

pub fn spectrum_with(s: u32, kind: Kind, options: SearchOptions) -> Result<SpectrumReport> {
    Ok(SpectrumReport::from_classification(&classify(s, None, options)?, kind))
}

/// Both spectra from a single search.
pub fn spectra(s: u32, options: SearchOptions) -> Result<(SpectrumReport, SpectrumReport)> {
    let c = classify(s, None, options)?;
    Ok((
        SpectrumReport::from_classification(&c, Kind::InclusionMinimal),
        SpectrumReport::from_classification(&c, Kind::Slender),
    ))
}

/// Constructive spectrum for `6 <= s <= 12`: a verified slender system
/// avoiding the full set for every `t` in `[s+1, 2s]`.
pub fn certify_spectrum(s: u32) -> Result<SpectrumReport> {
    if !(6..=12).contains(&s) {
        return Err(Error::OutOfRange {
            what: "s",
            value: s.into(),
            range: "6..=12 for certificates",
        });
    }
    let mut builder = SlenderBuilder::new();
    let mut representatives = BTreeMap::new();
    for t in s as usize + 1..=2 * s as usize {
        let built = builder.build(SpectrumTarget::new(s, t)?)?;
        let sys = built.system;
        let ok = sys.len() == t
            && sys.ground().size() == s
            && !sys.contains_full()
            && is_slender(&sys)
            && is_inclusion_minimal_non_bondy(&sys);
        if !ok {
            return Err(Error::BadTrace(format!("builder output for s={s}, t={t} fails verification")));
        }
        representatives.insert(t, sys);
    }
    Ok(SpectrumReport {
        s,
        kind: Kind::Slender,
        provenance: Provenance::ConstructiveCertificate,
        sizes: representatives.keys().copied().collect(),
        representatives,
        class_counts: BTreeMap::new(),
    })
}
