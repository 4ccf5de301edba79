//! Command implementations behind the `bondy` binary.
//!
//! Every command returns its full output as a `String`; the binary only
//! handles argument parsing, file IO and exit codes.

mod document;

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

pub use document::{DocumentError, Format, SystemDocument};

use crate::builders::{build_slender_2s, Built, SlenderBuilder, SpectrumTarget, Variant};
use crate::enumerate::{self, Kind, Provenance, SearchOptions, SpectrumReport};
use crate::operators::{
    complement_system, is_bondy, is_inclusion_minimal_non_bondy, is_slender, kappa, lambda, lambda1, minimize,
};
use crate::system::SetSystem;

/// Version of every machine-readable report.
pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable holding the enumeration worker count.
pub const WORKERS_ENV: &str = "BONDY_WORKERS";

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Core(#[from] crate::Error),
    #[error("built system failed self-check: {0}")]
    SelfCheck(String),
    #[error("{0}")]
    Usage(String),
}

/// Everything `check` reports about a system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub schema_version: u32,
    pub ground: u32,
    pub size: usize,
    pub lambda: Vec<u32>,
    pub lambda1: Vec<u32>,
    pub kappa_size: usize,
    pub bondy: bool,
    pub witnesses: Vec<u32>,
    pub inclusion_minimal: bool,
    pub slender: bool,
    pub contains_empty: bool,
    pub contains_full: bool,
}

impl CheckReport {
    pub fn of(sys: &SetSystem) -> Self {
        let verdict = is_bondy(sys);
        CheckReport {
            schema_version: SCHEMA_VERSION,
            ground: sys.ground().size(),
            size: sys.len(),
            lambda: lambda(sys).to_vec(),
            lambda1: lambda1(sys).to_vec(),
            kappa_size: kappa(sys).len(),
            bondy: verdict.is_bondy,
            witnesses: verdict.witnesses.to_vec(),
            inclusion_minimal: is_inclusion_minimal_non_bondy(sys),
            slender: is_slender(sys),
            contains_empty: sys.contains_empty(),
            contains_full: sys.contains_full(),
        }
    }

    pub fn render_human(&self) -> String {
        let set = |v: &[u32]| {
            let items: Vec<String> = v.iter().map(u32::to_string).collect();
            format!("{{{}}}", items.join(","))
        };
        let yes = |b: bool| if b { "yes" } else { "no" };
        let rows: [(&str, String); 11] = [
            ("ground size", self.ground.to_string()),
            ("members", self.size.to_string()),
            ("λ", set(&self.lambda)),
            ("λ₁", set(&self.lambda1)),
            ("|ϰ|", self.kappa_size.to_string()),
            ("verdict", if self.bondy { "Bondy" } else { "non-Bondy" }.to_string()),
            ("witnesses", set(&self.witnesses)),
            ("inclusion-minimal", yes(self.inclusion_minimal).to_string()),
            ("slender", yes(self.slender).to_string()),
            ("contains ∅", yes(self.contains_empty).to_string()),
            ("contains S", yes(self.contains_full).to_string()),
        ];
        let mut out = String::new();
        for (k, v) in rows {
            let _ = writeln!(out, "{k:<18} {v}");
        }
        out
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

pub fn cmd_check(doc: &SystemDocument, json: bool) -> Result<String, CliError> {
    let report = CheckReport::of(&doc.to_system()?);
    Ok(if json { to_json(&report) } else { report.render_human() })
}

/// Builds a slender system of size `t` on `s` elements and checks it.
///
/// Without a variant, `(s, t)` must satisfy `s >= 6`, `s+1 <= t <= 2s`.
/// With one, `s >= 5` and `t = 2s`.
pub fn cmd_build(s: u32, t: usize, variant: Option<Variant>) -> Result<Built, CliError> {
    let built = match variant {
        None => SlenderBuilder::new().build(SpectrumTarget::new(s, t)?)?,
        Some(v) => {
            if s < 5 || t != 2 * s as usize {
                return Err(CliError::Usage(format!(
                    "--variant needs s >= 5 and t = 2s (got s={s}, t={t})"
                )));
            }
            build_slender_2s(s, v)?
        }
    };
    self_check(&built, s, t, variant)?;
    Ok(built)
}

fn self_check(built: &Built, s: u32, t: usize, variant: Option<Variant>) -> Result<(), CliError> {
    let doc = SystemDocument::from_system(&built.system);
    let report = CheckReport::of(&doc.to_system()?);
    let mut problems = Vec::new();
    if report.ground != s {
        problems.push(format!("ground {} != {s}", report.ground));
    }
    if report.size != t {
        problems.push(format!("size {} != {t}", report.size));
    }
    if !report.slender || !report.inclusion_minimal {
        problems.push("not slender".into());
    }
    let forbid_empty = variant == Some(Variant::NoEmpty);
    if forbid_empty && report.contains_empty {
        problems.push("contains ∅".into());
    }
    if !forbid_empty && report.contains_full {
        problems.push("contains S".into());
    }
    if crate::builders::replay(&built.trace)? != built.system {
        problems.push("trace does not replay".into());
    }
    if problems.is_empty() {
        Ok(())
    } else {
        Err(CliError::SelfCheck(problems.join("; ")))
    }
}

#[derive(Serialize)]
struct BuildEnvelope<'a> {
    schema_version: u32,
    system: SystemDocument,
    trace: &'a crate::builders::BuildTrace,
}

/// Output of `build`: the document, or the `{schema_version, system, trace}`
/// envelope when `with_trace` is set.
pub fn render_build(built: &Built, with_trace: bool, format: Format) -> String {
    let doc = SystemDocument::from_system(&built.system);
    if with_trace {
        to_json(&BuildEnvelope {
            schema_version: SCHEMA_VERSION,
            system: doc,
            trace: &built.trace,
        })
    } else {
        doc.render(format)
    }
}

pub fn cmd_complement(doc: &SystemDocument) -> Result<SystemDocument, CliError> {
    Ok(SystemDocument::from_system(&complement_system(&doc.to_system()?)))
}

pub fn cmd_minimize(doc: &SystemDocument) -> Result<SystemDocument, CliError> {
    Ok(SystemDocument::from_system(&minimize(&doc.to_system()?)?))
}

#[derive(Serialize)]
struct EnumerateReport {
    schema_version: u32,
    s: u32,
    t: usize,
    kind: &'static str,
    class_count: usize,
    classes: Vec<SystemDocument>,
}

pub fn cmd_enumerate(s: u32, t: usize, kind: Kind, options: SearchOptions, json: bool) -> Result<String, CliError> {
    let classes = enumerate::enumerate_minimal_with(s, t, kind, options)?;
    if json {
        return Ok(to_json(&EnumerateReport {
            schema_version: SCHEMA_VERSION,
            s,
            t,
            kind: kind.name(),
            class_count: classes.len(),
            classes: classes
                .iter()
                .map(|c| SystemDocument::from_system(c.system()))
                .collect(),
        }));
    }
    let mut out = format!("s = {s}, t = {t}, kind = {kind}: {} classes\n", classes.len());
    for (i, c) in classes.iter().enumerate() {
        let _ = writeln!(out, "{:>4}  {c}", i + 1);
    }
    Ok(out)
}

#[derive(Serialize)]
struct SpectrumEntry {
    t: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    classes: Option<usize>,
    representative: SystemDocument,
}

#[derive(Serialize)]
struct SpectrumDocument {
    schema_version: u32,
    s: u32,
    kind: &'static str,
    provenance: &'static str,
    sizes: Vec<usize>,
    entries: Vec<SpectrumEntry>,
}

pub fn render_spectrum(report: &SpectrumReport, json: bool) -> String {
    if json {
        return to_json(&SpectrumDocument {
            schema_version: SCHEMA_VERSION,
            s: report.s,
            kind: report.kind.name(),
            provenance: match report.provenance {
                Provenance::Exhaustive => "exhaustive",
                Provenance::ConstructiveCertificate => "constructive-certificate",
            },
            sizes: report.sizes.iter().copied().collect(),
            entries: report
                .representatives
                .iter()
                .map(|(&t, sys)| SpectrumEntry {
                    t,
                    classes: report.class_counts.get(&t).copied(),
                    representative: SystemDocument::from_system(sys),
                })
                .collect(),
        });
    }
    let sizes: Vec<String> = report.sizes.iter().map(usize::to_string).collect();
    let mut out = format!(
        "s = {}, kind = {} ({})\nsizes: {{{}}}\n",
        report.s,
        report.kind,
        report.provenance.describe(),
        sizes.join(", ")
    );
    let _ = writeln!(out, "{:>4}  {:>7}  representative", "t", "classes");
    for (t, sys) in &report.representatives {
        let count = report
            .class_counts
            .get(t)
            .map_or_else(|| "-".to_string(), usize::to_string);
        let _ = writeln!(out, "{t:>4}  {count:>7}  {sys}");
    }
    out
}

pub fn cmd_spectrum(s: u32, kind: Kind, certify: bool, options: SearchOptions, json: bool) -> Result<String, CliError> {
    let report = if certify {
        enumerate::certify_spectrum(s)?
    } else {
        enumerate::spectrum_with(s, kind, options)?
    };
    Ok(render_spectrum(&report, json))
}

/// Worker count from [`WORKERS_ENV`]; `None` when unset.
pub fn workers_from_env() -> Result<Option<usize>, CliError> {
    match std::env::var(WORKERS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n > 0)
            .map(Some)
            .ok_or_else(|| CliError::Usage(format!("{WORKERS_ENV} must be a positive integer, got `{v}`"))),
    }
}
