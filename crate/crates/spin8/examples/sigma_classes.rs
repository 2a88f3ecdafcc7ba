//! The sets `Σ_m` of coset representatives with poles of order at least `m`, and their
//! partition into classes with equal twisted characters.
//!
//! Run with `cargo run --example sigma_classes`.

use spin8::characters::CharTag;
use spin8::ctan::{classes, sigma, CtParams};
use spin8::rational::q;
use spin8::rootdata::EType;

fn main() -> spin8::error::Result<()> {
    let p = CtParams::heisenberg(EType::FxK, CharTag::Trivial, q(1, 2));
    for m in [1, 2] {
        let names: Vec<String> = sigma(&p, m)?.iter().map(|w| w.name()).collect();
        println!("Σ_{m} = {names:?}");
    }
    for c in classes(&p, 1)? {
        println!("class {:?} with orders {:?}: {}", c.names(), c.orders, c.twisted_char.text);
        for f in &c.factorization {
            println!("    {} = {}·{} (length additive: {})", f.target, f.base, f.u, f.length_additive);
        }
    }
    Ok(())
}
