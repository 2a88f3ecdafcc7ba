//! Pole orders of the Heisenberg Eisenstein series for every admissible character at
//! `s = 1/2, 3/2, 5/2`, after the class cancellations.
//!
//! Run with `cargo run --example pole_orders`.

use spin8::characters::CharTag;
use spin8::ctan::pole_report;
use spin8::rational::q;
use spin8::rootdata::EType;

fn main() -> spin8::error::Result<()> {
    for e in EType::ALL {
        for &t in CharTag::admissible(e) {
            for s0 in [q(1, 2), q(3, 2), q(5, 2)] {
                let r = pole_report(e, t, s0)?;
                let cancelled = r.classes.iter().filter(|c| c.rule.is_some()).count();
                println!(
                    "{e:5} {t:22} s0={s0}: order {} ({} classes, {cancelled} with cancellation)",
                    r.net_order,
                    r.classes.len()
                );
            }
        }
    }
    Ok(())
}
