use spin8::characters::CharTag;
use spin8::ctan::{
    cancellation_rules, classes, eisenstein_pole_order, pole_report, sigma, sigma_table, words, CtParams,
};
use spin8::rational::{q, Q};
use spin8::rootdata::{EType, RelativeDatum};
use std::collections::HashSet;

fn configurations() -> Vec<(EType, CharTag, Q)> {
    let mut out = Vec::new();
    for e in EType::ALL {
        for &t in CharTag::admissible(e) {
            for s0 in [q(1, 2), q(3, 2), q(5, 2)] {
                out.push((e, t, s0));
            }
        }
    }
    out
}

#[test]
fn sigma_sets_are_nested() {
    for (e, t, s0) in configurations() {
        let p = CtParams::heisenberg(e, t, s0);
        let max = sigma_table(&p).unwrap().rows.iter().map(|r| r.order).max().unwrap();
        for m in 0..=max {
            let big: HashSet<String> = sigma(&p, m).unwrap().iter().map(|w| w.name()).collect();
            let small: HashSet<String> = sigma(&p, m + 1).unwrap().iter().map(|w| w.name()).collect();
            assert!(small.is_subset(&big), "{e} {t} {s0} m={m}");
        }
        assert!(sigma(&p, max + 1).unwrap().is_empty());
    }
}

#[test]
fn classes_partition_sigma() {
    for (e, t, s0) in configurations() {
        let p = CtParams::heisenberg(e, t, s0);
        for m in [0, 1, 2] {
            let cls = classes(&p, m).unwrap();
            let mut seen = HashSet::new();
            for c in &cls {
                assert!(!c.members.is_empty());
                for w in &c.members {
                    assert!(seen.insert(w.name()), "{e} {t} {s0}: {w} in two classes");
                }
            }
            let expected: HashSet<String> = sigma(&p, m).unwrap().iter().map(|w| w.name()).collect();
            assert_eq!(seen, expected, "{e} {t} {s0} m={m}");
        }
    }
}

#[test]
fn recorded_factorizations_multiply_out() {
    for (e, t, s0) in configurations() {
        let d = RelativeDatum::get(e);
        for c in classes(&CtParams::heisenberg(e, t, s0), 1).unwrap() {
            assert_eq!(c.factorization.len() + 1, c.members.len());
            for f in &c.factorization {
                assert!(d.words_equal(&d.mul(&f.base, &f.u), &f.target), "{e} {t} {s0}");
                let additive = d.length(&f.target) == d.length(&f.base) + d.length(&f.u);
                assert_eq!(f.length_additive, additive);
            }
        }
    }
}

#[test]
fn class_members_extend_the_shortest_member() {
    let cases: [(EType, &str, &str, &str); 6] = [
        (EType::Cubic, "w2121", "w212", "w1"),
        (EType::Cubic, "w21212", "w21", "w212"),
        (EType::FxK, "w21323", "w2132", "w3"),
        (EType::FxK, "w2132132", "w2321", "w232"),
        (EType::Split, "w2132", "w213", "w2"),
        (EType::Split, "w213242132", "w2134", "w21342"),
    ];
    for (e, target, base, expected_u) in cases {
        let d = RelativeDatum::get(e);
        let ws = words(d, &[target, base]).unwrap();
        let u = d.reduce(&d.mul(&d.inverse(&ws[1]), &ws[0]));
        assert_eq!(d.length(&ws[0]), d.length(&ws[1]) + d.length(&u), "{e} {target} = {base}·{u}");
        assert!(d.words_equal(&u, &d.parse(expected_u).unwrap()), "{e}: {target} = {base}·{u}");
    }
}

#[test]
fn rules_refer_to_existing_classes() {
    for r in cancellation_rules() {
        let report = pole_report(r.etype, r.tag, r.s0).unwrap();
        let mut expected = r.class.clone();
        expected.sort();
        let found = report.classes.iter().any(|c| {
            let mut n = c.class.names();
            n.sort();
            n == expected
        });
        assert!(found, "{} {} {}: {:?}", r.etype, r.tag, r.s0, r.class);
        assert!(
            report.classes.iter().any(|c| c.rule.as_ref() == Some(&r)),
            "rule not applied for {:?}",
            r.class
        );
    }
}

#[test]
fn net_order_never_exceeds_the_raw_maximum() {
    for (e, t, s0) in configurations() {
        let report = pole_report(e, t, s0).unwrap();
        for c in &report.classes {
            assert!(c.net_order <= c.max_order);
        }
        assert_eq!(eisenstein_pole_order(e, t, s0).unwrap(), report.net_order);
    }
}

#[test]
fn other_maximal_parabolics_are_supported() {
    let p = CtParams { etype: EType::FxK, levi: vec![2, 3], tag: CharTag::Trivial, s0: q(1, 1) };
    assert!(!p.is_heisenberg());
    let table = sigma_table(&p).unwrap();
    let d = RelativeDatum::get(EType::FxK);
    let levi = d.subgroup(&[2, 3]).unwrap();
    assert_eq!(table.rows.len() * levi.len(), d.group_order());
}
