//! Twisting the inducing character `χ_s` by Weyl words and reading the result in
//! torus coordinates.
//!
//! Run with `cargo run --example twisted_characters`.

use spin8::characters::{chi_s, stabilizer, twist, CharTag};
use spin8::rational::q;
use spin8::rootdata::{EType, RelativeDatum};

fn main() -> spin8::error::Result<()> {
    let e = EType::FxK;
    let d = RelativeDatum::get(e);
    let chi = chi_s(e, CharTag::QuadKNormTrivial)?;
    let s0 = q(1, 2);
    for word in ["w2", "w21", "w23", "w213", "w2132"] {
        let w = d.parse(word)?;
        println!("{word}⁻¹·χ at s = 1/2: {}", twist(&w, &chi.at(s0)).render().text);
    }
    let letters: Vec<u8> = (1..=e.rank() as u8).collect();
    let stab = stabilizer(&chi, s0, &letters)?;
    let names: Vec<String> = stab.iter().map(|w| w.name()).collect();
    println!("stabilizer in W: {names:?}");
    Ok(())
}
