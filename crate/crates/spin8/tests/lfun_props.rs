use proptest::prelude::*;
use spin8::affine::Affine;
use spin8::characters::{chi_s, CharTag};
use spin8::gk::j_product;
use spin8::lfun::{fe_canonicalize, order_and_leading, Generator, LAtom, LProduct, SymbolicConstant};
use spin8::rational::{q, qi, Q};
use spin8::rootdata::{EType, FieldLabel, RelativeDatum};

fn single_factors(p: &LProduct) -> Vec<LProduct> {
    let mut out = Vec::new();
    for (a, e) in &p.atoms {
        let mut f = LProduct::one();
        f.push_atom(*a, *e);
        out.push(f);
    }
    for (x, e) in &p.poly {
        let mut f = LProduct::one();
        f.push_poly(*x, *e);
        out.push(f);
    }
    out
}

#[test]
fn order_is_additive_and_leading_multiplicative_over_factors() {
    let mut checked = 0;
    for e in EType::ALL {
        let d = RelativeDatum::get(e);
        for &t in CharTag::admissible(e) {
            let chi = chi_s(e, t).unwrap();
            let reps = d.coset_reps(&e.heisenberg_levi()).unwrap();
            for s0 in [q(1, 2), q(3, 2), q(5, 2)] {
                for w in &reps {
                    let p = j_product(w, &chi);
                    let whole = order_and_leading(&p, s0).unwrap();
                    let mut order = 0;
                    let mut leading = SymbolicConstant::scalar(p.scalar);
                    for f in single_factors(&p) {
                        let data = order_and_leading(&f, s0).unwrap();
                        order += data.order;
                        leading = leading.mul(&data.leading);
                    }
                    assert_eq!(whole.order, order, "{e} {t} {s0} {w}");
                    assert_eq!(whole.leading, fe_canonicalize(&leading), "{e} {t} {s0} {w}");
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 100);
}

#[test]
fn functional_equation_reflects_zeta_values() {
    let field = FieldLabel::F;
    let a = SymbolicConstant::zeta(field, qi(-1));
    let b = SymbolicConstant::zeta(field, qi(2));
    assert_eq!(fe_canonicalize(&a), fe_canonicalize(&b));
    let mut reflected = LProduct::one();
    reflected.push_atom(LAtom::zeta(field, Affine::in_s(qi(-1), qi(1))), 1);
    let mut direct = LProduct::one();
    direct.push_atom(LAtom::zeta(field, Affine::in_s(qi(1), qi(0))), 1);
    assert!(reflected.equivalent(&direct));
}

#[test]
fn generator_order_is_canonical() {
    let g = Generator::Zeta { field: FieldLabel::K, arg: qi(-2) };
    assert_eq!(g.canonical(), Generator::Zeta { field: FieldLabel::K, arg: qi(3) });
    assert_eq!(g.canonical().canonical(), g.canonical());
}

fn rational() -> impl Strategy<Value = Q> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn field() -> impl Strategy<Value = FieldLabel> {
    prop::sample::select(vec![FieldLabel::F, FieldLabel::K, FieldLabel::E])
}

/// A constant whose generators are stored as drawn, without reflection.
fn constant() -> impl Strategy<Value = SymbolicConstant> {
    let gens = prop::collection::btree_map(
        (field(), rational()).prop_map(|(field, arg)| Generator::Zeta { field, arg }),
        prop_oneof![-2i64..=-1, 1i64..=2],
        0..4,
    );
    (gens, 1i64..=9, 1i64..=9).prop_map(|(gens, n, d)| SymbolicConstant { scalar: q(n, d), gens })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn canonicalization_is_idempotent(c in constant()) {
        let once = fe_canonicalize(&c);
        prop_assert_eq!(fe_canonicalize(&once), once);
    }

    #[test]
    fn canonicalization_commutes_with_products(a in constant(), b in constant()) {
        let lhs = fe_canonicalize(&a.mul(&b));
        let rhs = fe_canonicalize(&fe_canonicalize(&a).mul(&fe_canonicalize(&b)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn zeta_pole_exactly_at_zero_and_one(a in (1i64..=3), b in rational(), s0 in rational(), f in field()) {
        let arg = Affine::in_s(qi(a), b);
        let mut p = LProduct::one();
        p.push_atom(LAtom::zeta(f, arg), 1);
        let data = order_and_leading(&p, s0).unwrap();
        let value = qi(a) * s0 + b;
        let expected = if value == qi(0) || value == qi(1) { -1 } else { 0 };
        prop_assert_eq!(data.order, expected);
    }

    #[test]
    fn inverse_product_has_opposite_order(a in (1i64..=3), b in rational(), s0 in rational(), f in field()) {
        let arg = Affine::in_s(qi(a), b);
        let mut p = LProduct::one();
        p.push_atom(LAtom::zeta(f, arg), 1);
        let mut inv = LProduct::one();
        inv.push_atom(LAtom::zeta(f, arg), -1);
        let x = order_and_leading(&p, s0).unwrap();
        let y = order_and_leading(&inv, s0).unwrap();
        prop_assert_eq!(x.order, -y.order);
        prop_assert!(x.leading.mul(&y.leading).is_one());
    }
}
