use proptest::prelude::*;
use spin8::characters::CharTag;
use spin8::ctan::eisenstein_pole_order;
use spin8::rational::{q, Q};
use spin8::residue::{
    admissible_local_types, appears, appears_closed_form, enumerate_admissible, local_quotients, parse_profiles,
    split_label, synthetic_profiles, DottedPlaceSet, GlobalConfig, LocalAlgebra, LocalChar, PlaceProfile,
};
use spin8::rootdata::EType;

fn config(etype: EType, tag: CharTag, s0: Q) -> GlobalConfig {
    GlobalConfig { etype, tag, s0 }
}

fn parity_configs() -> Vec<GlobalConfig> {
    vec![
        config(EType::Cubic, CharTag::Trivial, q(1, 2)),
        config(EType::Cubic, CharTag::QuadF, q(1, 2)),
        config(EType::FxK, CharTag::QuadKNormNontrivial, q(1, 2)),
        config(EType::Split, CharTag::QuadF, q(1, 2)),
    ]
}

#[test]
fn oracle_matches_closed_form_on_three_places_of_each_type() {
    for g in parity_configs() {
        let profiles = synthetic_profiles(&admissible_local_types(&g), 3);
        let cases = enumerate_admissible(&profiles, 4, &g).unwrap();
        assert!(!cases.is_empty());
        for c in &cases {
            assert_eq!(c.appears, c.closed_form, "{} {} {}", g.etype, g.tag, c.dotted);
        }
    }
}

#[test]
fn split_parity_rule_is_the_not_exactly_two_odd_rule() {
    let g = config(EType::Split, CharTag::QuadF, q(1, 2));
    let kinds = [(LocalAlgebra::Split, LocalChar::QuadNormnontrivial)];
    let profiles = synthetic_profiles(&kinds, 6);
    let labels = [split_label(-1, 1), split_label(1, -1), split_label(-1, -1)];
    for c in enumerate_admissible(&profiles, 6, &g).unwrap() {
        let odd = labels.iter().filter(|l| c.dotted.count(l) % 2 == 1).count();
        assert_eq!(c.appears, odd != 2, "{}", c.dotted);
    }
}

#[test]
fn off_centre_poles_see_only_the_spherical_constituent() {
    let mut seen = 0;
    for e in EType::ALL {
        for &t in CharTag::admissible(e) {
            for s0 in [q(3, 2), q(5, 2)] {
                if eisenstein_pole_order(e, t, s0).unwrap() == 0 {
                    continue;
                }
                let g = config(e, t, s0);
                let profiles = synthetic_profiles(&admissible_local_types(&g), 2);
                for c in enumerate_admissible(&profiles, 2, &g).unwrap() {
                    assert_eq!(c.appears, c.dotted.size() == 0, "{e} {t} {s0} {}", c.dotted);
                    assert_eq!(c.appears, c.closed_form);
                }
                seen += 1;
            }
        }
    }
    assert!(seen > 0);
}

#[test]
fn profile_files_reject_unknown_fields_and_bad_places() {
    let ok = r#"[{"id":"p","local_algebra":"split","local_char":"quad-normnontrivial"}]"#;
    assert_eq!(parse_profiles(ok).unwrap().len(), 1);
    assert!(parse_profiles(r#"[{"id":"p","local_algebra":"split","local_char":"trivial","x":1}]"#).is_err());
    assert!(parse_profiles(r#"[{"id":"p","local_algebra":"banana","local_char":"trivial"}]"#).is_err());
    let g = config(EType::Split, CharTag::QuadF, q(1, 2));
    let inert = vec![PlaceProfile {
        id: "p".into(),
        local_algebra: LocalAlgebra::InertField,
        local_char: LocalChar::Trivial,
    }];
    assert!(enumerate_admissible(&inert, 1, &g).is_err());
}

#[test]
fn unknown_labels_and_places_are_errors() {
    let g = config(EType::Cubic, CharTag::Trivial, q(1, 2));
    let profiles = synthetic_profiles(&admissible_local_types(&g), 1);
    let mut d = DottedPlaceSet::default();
    d.assignments.insert("nowhere".into(), "π-2".into());
    assert!(appears(&d, &profiles, &g).is_err());
    let mut d = DottedPlaceSet::default();
    d.assignments.insert(profiles[0].id.clone(), "not-a-label".into());
    assert!(appears(&d, &profiles, &g).is_err());
}

#[test]
fn every_local_type_has_exactly_one_spherical_quotient() {
    for g in parity_configs() {
        for (alg, chr) in admissible_local_types(&g) {
            let tags = local_quotients(alg, chr, g.s0).unwrap();
            assert_eq!(tags.iter().filter(|t| t.spherical).count(), 1, "{alg:?} {chr:?}");
        }
    }
}

fn dotted_strategy() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (0usize..4, prop::collection::vec((0usize..8, 0usize..4), 0..5))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn adding_an_undotted_place_never_changes_the_verdict((ci, picks) in dotted_strategy(), extra in 0usize..8) {
        let g = parity_configs()[ci];
        let kinds = admissible_local_types(&g);
        let profiles = synthetic_profiles(&kinds, 2);
        let mut dotted = DottedPlaceSet::default();
        for (pi, li) in picks {
            let p = &profiles[pi % profiles.len()];
            let labels: Vec<String> = local_quotients(p.local_algebra, p.local_char, g.s0)
                .unwrap()
                .into_iter()
                .filter(|t| !t.spherical)
                .map(|t| t.label)
                .collect();
            if !labels.is_empty() {
                dotted.assignments.insert(p.id.clone(), labels[li % labels.len()].clone());
            }
        }
        let before = appears(&dotted, &profiles, &g).unwrap();
        let (alg, chr) = kinds[extra % kinds.len()];
        let mut more = profiles.clone();
        more.push(PlaceProfile { id: "extra".into(), local_algebra: alg, local_char: chr });
        let after = appears(&dotted, &more, &g).unwrap();
        prop_assert_eq!(before.appears, after.appears);
        prop_assert_eq!(before.class_sums, after.class_sums);
        prop_assert_eq!(appears_closed_form(&dotted, &more, &g).unwrap(), after.appears);
    }
}
