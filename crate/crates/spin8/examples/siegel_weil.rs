//! Normalized Eisenstein series constants on the two sides of the Siegel–Weil
//! comparison, their ratio, and the zeta-limit identities.
//!
//! Run with `cargo run --example siegel_weil`.

use spin8::rootdata::EType;
use spin8::siegelweil::{
    leading_constant, lhs_path, rhs_path, siegel_weil_ratio, zeta_identities, LHS_SERIES_ORDER, RHS_SERIES_ORDER,
};

fn main() -> spin8::error::Result<()> {
    for e in [EType::Split, EType::FxK] {
        let l = lhs_path(e)?;
        let r = rhs_path(e)?;
        println!("{e}: {} → {}", l.name, leading_constant(&l, LHS_SERIES_ORDER)?);
        println!("{e}: {} → {}", r.name, leading_constant(&r, RHS_SERIES_ORDER)?);
        println!("{e}: ratio {}", siegel_weil_ratio(e)?);
    }
    for (i, z) in zeta_identities().iter().enumerate() {
        let flag = if z.printed_holds { "" } else { "  (stated form fails)" };
        println!("{:2}. {} : {}{flag}", i + 1, z.checked, if z.checked_holds { "holds" } else { "FAILS" });
    }
    Ok(())
}
