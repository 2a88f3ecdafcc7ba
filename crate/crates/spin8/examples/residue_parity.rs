//! Which residual constituents `π_Ṡ` occur in the leading term, for a place profile read
//! from JSON, compared against the closed-form parity rule.
//!
//! Run with `cargo run --example residue_parity [profiles.json]`; the default profile is
//! `examples/data/places.json`.

use spin8::characters::CharTag;
use spin8::rational::q;
use spin8::residue::{enumerate_admissible, parse_profiles, GlobalConfig};
use spin8::rootdata::EType;

fn main() -> spin8::error::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/places.json").to_string());
    let text = std::fs::read_to_string(&path).map_err(|e| spin8::error::Error::Input(format!("{path}: {e}")))?;
    let profiles = parse_profiles(&text)?;
    let g = GlobalConfig { etype: EType::Split, tag: CharTag::QuadF, s0: q(1, 2) };
    let cases = enumerate_admissible(&profiles, 3, &g)?;
    let agree = cases.iter().filter(|c| c.appears == c.closed_form).count();
    for c in &cases {
        println!("{:40} appears: {}", c.dotted.to_string(), c.appears);
    }
    println!("{agree} of {} cases agree with the closed form", cases.len());
    Ok(())
}
