use spin8::characters::{chi_s, CharTag};
use spin8::jacquet::{multiplicity, orbit, stabilizer_size, MultiplicityQuery, WeylScope};
use spin8::rational::q;
use spin8::rootdata::{EType, RelativeDatum};

#[test]
fn self_multiplicity_is_the_stabilizer_size() {
    for e in EType::ALL {
        for &t in CharTag::admissible(e) {
            let chi = chi_s(e, t).unwrap();
            for s0 in [q(0, 1), q(1, 2), q(1, 1), q(3, 2), q(5, 2)] {
                let base = chi.at(s0);
                let m = multiplicity(&MultiplicityQuery {
                    inducing: chi.clone(),
                    target: base,
                    s0,
                    scope: WeylScope::Full,
                })
                .unwrap();
                assert_eq!(m, stabilizer_size(&chi, s0), "{e} {t} {s0}");
            }
        }
    }
}

#[test]
fn orbit_multiplicities_sum_to_the_scope_size() {
    for e in EType::ALL {
        let d = RelativeDatum::get(e);
        let levi = e.heisenberg_levi();
        let reps = d.coset_reps(&levi).unwrap().len();
        for &t in CharTag::admissible(e) {
            let chi = chi_s(e, t).unwrap();
            for s0 in [q(1, 2), q(3, 2)] {
                let full = orbit(&chi, s0, &WeylScope::Full).unwrap();
                let sum: usize = full.iter().map(|o| o.multiplicity).sum();
                assert_eq!(sum, d.group_order(), "{e} {t} {s0}");
                let stab = stabilizer_size(&chi, s0);
                assert!(full.iter().all(|o| o.multiplicity == stab), "{e} {t} {s0}");
                assert_eq!(full.len() * stab, d.group_order());
                let cos = orbit(&chi, s0, &WeylScope::CosetReps(levi.clone())).unwrap();
                assert_eq!(cos.iter().map(|o| o.multiplicity).sum::<usize>(), reps, "{e} {t} {s0}");
            }
        }
    }
}

#[test]
fn quadratic_norm_trivial_orbit_at_one_half() {
    let chi = chi_s(EType::FxK, CharTag::QuadKNormTrivial).unwrap();
    assert_eq!(stabilizer_size(&chi, q(1, 2)), 2);
    let o = orbit(&chi, q(1, 2), &WeylScope::Full).unwrap();
    assert_eq!(o.len(), 24);
}

#[test]
fn every_orbit_member_has_its_own_multiplicity() {
    let e = EType::Cubic;
    let chi = chi_s(e, CharTag::Trivial).unwrap();
    let s0 = q(1, 2);
    let d = RelativeDatum::get(e);
    for entry in orbit(&chi, s0, &WeylScope::Full).unwrap() {
        let target = spin8::characters::twist(&entry.representative, &chi.at(s0));
        let m = multiplicity(&MultiplicityQuery { inducing: chi.clone(), target, s0, scope: WeylScope::Full }).unwrap();
        assert_eq!(m, entry.multiplicity, "{}", entry.representative);
        assert!(d.elements().contains(&entry.representative));
    }
}

#[test]
fn mismatched_algebras_are_rejected() {
    let a = chi_s(EType::Cubic, CharTag::Trivial).unwrap();
    let b = chi_s(EType::Split, CharTag::Trivial).unwrap();
    let r = multiplicity(&MultiplicityQuery { inducing: a, target: b, s0: q(1, 2), scope: WeylScope::Full });
    assert!(r.is_err());
}
