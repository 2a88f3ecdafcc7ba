use spin8::characters::AffineWeight;
use spin8::lfun::{order_and_leading_at, SymbolicConstant};
use spin8::rational::qi;
use spin8::rootdata::{EType, RelativeDatum};
use spin8::siegelweil::{
    invariance_witness, leading_constant, lhs_path, normalization_product, rhs_path, siegel_weil_ratio,
    zeta_identities, LHS_SERIES_ORDER, RHS_SERIES_ORDER,
};

#[test]
fn normalized_constants_on_both_sides() {
    let expected = [
        (EType::Split, "-2^9·3·ζ_F(2)^4·ζ_F(3)·R_F^7", "-2^8·3·ζ_F(2)^4·R_F^8"),
        (EType::FxK, "2^7·3·ζ_F(2)^2·ζ_F(3)·ζ_K(2)·R_F^3·R_K^2", "2^6·3·ζ_F(2)^2·ζ_K(2)·R_F^4·R_K^2"),
    ];
    for (e, lhs, rhs) in expected {
        let l = leading_constant(&lhs_path(e).unwrap(), LHS_SERIES_ORDER).unwrap();
        let r = leading_constant(&rhs_path(e).unwrap(), RHS_SERIES_ORDER).unwrap();
        assert_eq!(l.to_string(), lhs, "{e}");
        assert_eq!(r.to_string(), rhs, "{e}");
    }
}

#[test]
fn ratio_is_the_same_for_both_algebras() {
    let split = siegel_weil_ratio(EType::Split).unwrap();
    let fxk = siegel_weil_ratio(EType::FxK).unwrap();
    assert_eq!(split, fxk);
    assert_eq!(split.to_string(), "R_F/(2·ζ_F(3))");
    let lhs = leading_constant(&lhs_path(EType::FxK).unwrap(), LHS_SERIES_ORDER).unwrap();
    let rhs = leading_constant(&rhs_path(EType::FxK).unwrap(), RHS_SERIES_ORDER).unwrap();
    assert_eq!(rhs.div(&lhs), split);
}

#[test]
fn cubic_paths_are_unsupported() {
    assert!(lhs_path(EType::Cubic).is_err());
    assert!(rhs_path(EType::Cubic).is_err());
    assert!(siegel_weil_ratio(EType::Cubic).is_err());
}

#[test]
fn prefactor_has_one_zeta_and_two_linear_factors_per_root() {
    for e in [EType::Split, EType::FxK] {
        let path = lhs_path(e).unwrap();
        let p = normalization_product(&path);
        let roots = RelativeDatum::get(e).relative_positive.len() as i64;
        assert_eq!(p.atom_count(), roots, "{e}");
        assert_eq!(p.poly_count(), 2 * roots, "{e}");
    }
}

#[test]
fn targets_are_the_stated_weights() {
    assert_eq!(lhs_path(EType::Split).unwrap().at_target(), AffineWeight::constant([-1, 2, -1, -1]));
    assert_eq!(rhs_path(EType::Split).unwrap().at_target(), AffineWeight::constant([-1, -1, 1, 1]));
}

#[test]
fn raw_prefactor_has_the_wrong_order_without_the_boundary_rule() {
    let path = lhs_path(EType::Split).unwrap();
    let raw = order_and_leading_at(&normalization_product(&path), &path.target);
    assert!(raw.is_err(), "constant pairings of -1 put ζ at its pole");
}

#[test]
fn zeta_identities_hold_in_corrected_form() {
    let ids = zeta_identities();
    assert_eq!(ids.len(), 10);
    for (i, z) in ids.iter().enumerate() {
        assert!(z.checked_holds, "identity {}: {} gives {}", i + 1, z.checked, z.engine_value);
    }
    let failing: Vec<usize> = ids.iter().enumerate().filter(|(_, z)| !z.printed_holds).map(|(i, _)| i + 1).collect();
    assert_eq!(failing, vec![9, 10]);
}

#[test]
fn invariance_witness_links_the_two_weights() {
    let l = AffineWeight::constant([-1, 2, -1, -1]);
    let r = AffineWeight::constant([-1, -1, 1, 1]);
    let d = RelativeDatum::get(EType::Split);
    let w = invariance_witness(EType::Split, &l, &r).expect("weights are conjugate");
    assert_eq!(AffineWeight(d.act(&w, &l.0)), r);
    assert_eq!(w.name(), "w12");
    let rho = AffineWeight::constant([1, 1, 1, 1]);
    assert!(invariance_witness(EType::Split, &l, &rho).is_none());
}

#[test]
fn constants_are_units_up_to_generators() {
    let c = siegel_weil_ratio(EType::FxK).unwrap();
    assert!(!c.is_rational());
    assert_eq!(c.mul(&c.pow(-1)), SymbolicConstant::one());
    assert_eq!(c.scalar, qi(1) / qi(2));
}
