//! Gindikin–Karpelevich factors `J(w, χ_s)` as products of completed L-functions,
//! with their order and leading coefficient at a point.
//!
//! Run with `cargo run --example gindikin_karpelevich`.

use spin8::characters::{chi_s, CharTag};
use spin8::gk::{j_factor, j_factor_after};
use spin8::rational::q;
use spin8::rootdata::{EType, RelativeDatum};

fn main() -> spin8::error::Result<()> {
    let e = EType::Cubic;
    let d = RelativeDatum::get(e);
    let chi = chi_s(e, CharTag::Trivial)?;
    for s0 in [q(1, 2), q(3, 2), q(5, 2)] {
        println!("s0 = {s0}");
        for w in d.coset_reps(&e.heisenberg_levi())? {
            println!("  {}", j_factor(&w, &chi, s0)?.summary());
        }
    }
    let w = d.parse("w21")?;
    let u = d.parse("w2")?;
    println!("J(w2, w21⁻¹·χ) at 1/2: {}", j_factor_after(&u, &w, &chi, q(1, 2))?.summary());
    Ok(())
}
