use proptest::prelude::*;
use spin8::characters::{chi_s, twist, CharTag};
use spin8::gk::{j_factor, j_product};
use spin8::lfun::{order_and_leading, LAtom};
use spin8::rational::{q, qi};
use spin8::rootdata::{EType, RelativeDatum, WeylElement};

fn multiplicative(e: EType, t: CharTag, w: &WeylElement, u: &WeylElement) -> Result<(), String> {
    let d = RelativeDatum::get(e);
    let wu = d.mul(w, u);
    if d.length(&wu) != d.length(w) + d.length(u) {
        return Ok(());
    }
    let chi = chi_s(e, t).unwrap();
    let lhs = j_product(&wu, &chi);
    let rhs = j_product(w, &chi).mul(&j_product(u, &twist(w, &chi)));
    if !lhs.equivalent(&rhs) {
        return Err(format!("{e} {t}: J({w}·{u}) = {lhs} but product is {rhs}"));
    }
    for s0 in [q(1, 2), q(3, 2), q(5, 2)] {
        let (a, b) = (order_and_leading(&lhs, s0), order_and_leading(&rhs, s0));
        if let (Ok(a), Ok(b)) = (a, b) {
            if a != b {
                return Err(format!("{e} {t} at {s0}: {w}·{u} Laurent data differ"));
            }
        }
    }
    Ok(())
}

#[test]
fn cocycle_holds_exhaustively_in_cubic() {
    let d = RelativeDatum::get(EType::Cubic);
    for &t in CharTag::admissible(EType::Cubic) {
        for w in d.elements() {
            for u in d.elements() {
                multiplicative(EType::Cubic, t, w, u).unwrap();
            }
        }
    }
}

#[test]
fn simple_reflections_give_a_single_ratio() {
    for e in EType::ALL {
        let d = RelativeDatum::get(e);
        for &t in CharTag::admissible(e) {
            let chi = chi_s(e, t).unwrap();
            for l in 1..=e.rank() as u8 {
                let w = d.element(&[l]).unwrap();
                let p = j_product(&w, &chi);
                assert_eq!(p.atom_count(), 2, "{e} {t} w{l}");
                let num: Vec<&LAtom> = p.atoms.iter().filter(|(_, &x)| x == 1).map(|(a, _)| a).collect();
                let den: Vec<&LAtom> = p.atoms.iter().filter(|(_, &x)| x == -1).map(|(a, _)| a).collect();
                assert_eq!((num.len(), den.len()), (1, 1), "{e} {t} w{l}");
                let (a, b) = (num[0], den[0]);
                assert_eq!(a.field, b.field);
                assert_eq!(a.chr, b.chr);
                assert_eq!(b.arg, a.arg + qi(1), "{e} {t} w{l}");
            }
        }
    }
}

#[test]
fn identity_has_trivial_factor() {
    for e in EType::ALL {
        let d = RelativeDatum::get(e);
        let chi = chi_s(e, CharTag::Trivial).unwrap();
        let r = j_factor(&d.element(&[]).unwrap(), &chi, q(1, 2)).unwrap();
        assert_eq!(r.order, 0);
        assert!(r.leading.is_one());
        assert!(r.pairings.is_empty());
    }
}

#[test]
fn pole_order_matches_negative_order() {
    for e in EType::ALL {
        let d = RelativeDatum::get(e);
        for &t in CharTag::admissible(e) {
            let chi = chi_s(e, t).unwrap();
            for w in d.coset_reps(&e.heisenberg_levi()).unwrap() {
                let r = j_factor(&w, &chi, q(1, 2)).unwrap();
                assert_eq!(r.pole_order, (-r.order).max(0));
                assert_eq!(r.pairings.len(), d.length(&w));
            }
        }
    }
}

fn words(rank: u8) -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    let w = prop::collection::vec(1..=rank, 0..12);
    (w.clone(), w)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn cocycle_holds_on_random_fxk_pairs((a, b) in words(3), t in prop::sample::select(CharTag::admissible(EType::FxK).to_vec())) {
        let d = RelativeDatum::get(EType::FxK);
        let (w, u) = (d.element(&a).unwrap(), d.element(&b).unwrap());
        prop_assert!(multiplicative(EType::FxK, t, &w, &u).is_ok(), "{:?}", multiplicative(EType::FxK, t, &w, &u));
    }

    #[test]
    fn cocycle_holds_on_random_split_pairs((a, b) in words(4), t in prop::sample::select(CharTag::admissible(EType::Split).to_vec())) {
        let d = RelativeDatum::get(EType::Split);
        let (w, u) = (d.element(&a).unwrap(), d.element(&b).unwrap());
        prop_assert!(multiplicative(EType::Split, t, &w, &u).is_ok(), "{:?}", multiplicative(EType::Split, t, &w, &u));
    }
}
