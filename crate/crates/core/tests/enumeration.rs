mod common;

use std::collections::BTreeSet;

use bondy::builders::{fixture_system, FixtureTable};
use bondy::enumerate::{
    canonical_form, classify, enumerate_minimal, spectra, CanonicalForm, Kind, Pruning, SearchOptions,
};
use bondy::complement_system;

fn every_pruning() -> Vec<Pruning> {
    (0..8u8)
        .map(|b| Pruning {
            size_bound: b & 1 != 0,
            covered_reuse: b & 2 != 0,
            first_edge_symmetry: b & 4 != 0,
        })
        .collect()
}

fn classes_with(s: u32, t: usize, kind: Kind, pruning: Pruning) -> BTreeSet<CanonicalForm> {
    let opts = SearchOptions { pruning, workers: Some(2) };
    classify(s, Some(t), opts).unwrap().classes(t, kind).into_iter().collect()
}

#[test]
fn search_matches_brute_force_for_every_prune_combination() {
    for s in 1..=4u32 {
        let brute = common::brute_force_classes(s);
        for t in s as usize + 1..=2 * s as usize {
            let want_min = brute.minimal.get(&t).cloned().unwrap_or_default();
            let want_sl = brute.slender.get(&t).cloned().unwrap_or_default();
            for p in every_pruning() {
                assert_eq!(classes_with(s, t, Kind::InclusionMinimal, p), want_min, "s={s} t={t} {p:?}");
                assert_eq!(classes_with(s, t, Kind::Slender, p), want_sl, "s={s} t={t} {p:?}");
            }
        }
        // nothing outside the window
        let outside: usize = brute
            .minimal
            .keys()
            .filter(|&&t| t <= s as usize || t > 2 * s as usize)
            .count();
        assert_eq!(outside, 0);
    }
}

#[test]
fn pruned_matches_unpruned_at_s5() {
    let pruned = classify(5, None, SearchOptions::default()).unwrap();
    let unpruned = classify(
        5,
        None,
        SearchOptions {
            pruning: Pruning::NONE,
            workers: None,
        },
    )
    .unwrap();
    assert_eq!(pruned, unpruned);
}

#[test]
fn s5_class_counts() {
    // frozen from an independent unpruned edge-product scan
    let (min, sl) = spectra(5, SearchOptions::default()).unwrap();
    let counts = |r: &bondy::enumerate::SpectrumReport| r.class_counts.clone().into_iter().collect::<Vec<_>>();
    assert_eq!(counts(&min), vec![(6, 91), (7, 264), (8, 165), (10, 4)]);
    assert_eq!(counts(&sl), vec![(6, 91), (7, 244), (8, 155), (10, 4)]);
}

#[test]
fn s4_class_counts() {
    let (min, sl) = spectra(4, SearchOptions::default()).unwrap();
    assert_eq!(min.class_counts.into_iter().collect::<Vec<_>>(), vec![(5, 27), (6, 14)]);
    assert_eq!(sl.class_counts.into_iter().collect::<Vec<_>>(), vec![(5, 27), (6, 14)]);
}

#[test]
fn slender_classes_are_minimal_classes() {
    for s in 1..=5u32 {
        let c = classify(s, None, SearchOptions::default()).unwrap();
        for t in c.by_size.keys().copied() {
            let min: BTreeSet<_> = c.classes(t, Kind::InclusionMinimal).into_iter().collect();
            let sl: BTreeSet<_> = c.classes(t, Kind::Slender).into_iter().collect();
            assert!(sl.is_subset(&min), "s={s} t={t}");
        }
    }
}

#[test]
fn classes_closed_under_complement() {
    for s in 1..=5u32 {
        let c = classify(s, None, SearchOptions::default()).unwrap();
        for t in c.by_size.keys().copied() {
            for kind in [Kind::InclusionMinimal, Kind::Slender] {
                let forms: BTreeSet<_> = c.classes(t, kind).into_iter().collect();
                for f in &forms {
                    let dual = canonical_form(&complement_system(f.system())).unwrap();
                    assert!(forms.contains(&dual), "s={s} t={t} {kind}: {f}");
                }
            }
        }
    }
}

#[test]
fn small_tables_are_complete() {
    for (obs, s) in [(FixtureTable::S1, 1u32), (FixtureTable::S2, 2), (FixtureTable::S3, 3)] {
        let t = s as usize + 1;
        let listed: BTreeSet<_> = (1..=obs.len())
            .map(|i| canonical_form(&fixture_system(obs, i).unwrap()).unwrap())
            .collect();
        assert_eq!(listed.len(), obs.len(), "{obs} lists an isomorphic pair");
        let found: BTreeSet<_> = enumerate_minimal(s, t, Kind::InclusionMinimal).unwrap().into_iter().collect();
        assert_eq!(found, listed, "{obs}");
    }
}

#[test]
fn every_fixture_up_to_s5_is_found() {
    for obs in [FixtureTable::S4, FixtureTable::S5] {
        let s = obs.ground_size();
        for i in 1..=obs.len() {
            let f = fixture_system(obs, i).unwrap();
            let found = enumerate_minimal(s, f.len(), Kind::Slender).unwrap();
            assert!(found.contains(&canonical_form(&f).unwrap()), "{obs} #{i}");
        }
    }
}

#[test]
fn output_order_is_deterministic() {
    let a = enumerate_minimal(4, 5, Kind::InclusionMinimal).unwrap();
    let b = enumerate_minimal(4, 5, Kind::InclusionMinimal).unwrap();
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| w[0] < w[1]));
}
