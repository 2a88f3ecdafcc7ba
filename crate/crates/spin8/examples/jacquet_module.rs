//! Weyl orbit of the inducing character and multiplicities of its twists in the
//! semisimplified Jacquet module.
//!
//! Run with `cargo run --example jacquet_module`.

use spin8::characters::{chi_s, twist, CharTag};
use spin8::jacquet::{multiplicity, orbit, stabilizer_size, MultiplicityQuery, WeylScope};
use spin8::rational::q;
use spin8::rootdata::{EType, RelativeDatum};

fn main() -> spin8::error::Result<()> {
    let e = EType::FxK;
    let chi = chi_s(e, CharTag::QuadKNormTrivial)?;
    let s0 = q(1, 2);
    let o = orbit(&chi, s0, &WeylScope::Full)?;
    println!("|Stab| = {}, {} distinct twists", stabilizer_size(&chi, s0), o.len());
    for entry in o.iter().take(6) {
        println!("  {} ×{}: {}", entry.representative, entry.multiplicity, entry.character.text);
    }
    let w = RelativeDatum::get(e).parse("w21")?;
    let target = twist(&w, &chi.at(s0));
    for scope in [WeylScope::Full, WeylScope::CosetReps(e.heisenberg_levi())] {
        let m = multiplicity(&MultiplicityQuery { inducing: chi.clone(), target: target.clone(), s0, scope: scope.clone() })?;
        println!("multiplicity of w21⁻¹·χ over {scope:?}: {m}");
    }
    Ok(())
}
