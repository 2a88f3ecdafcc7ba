//! Relative Weyl groups of the three quasi-split forms: orders, inversion sets and
//! minimal coset representatives for the Heisenberg parabolic.
//!
//! Run with `cargo run --example weyl_group`.

use spin8::rootdata::{EType, RelativeDatum};

fn main() -> spin8::error::Result<()> {
    for e in EType::ALL {
        let d = RelativeDatum::get(e);
        let levi = e.heisenberg_levi();
        let reps = d.coset_reps(&levi)?;
        println!("{e}: |W| = {}, Heisenberg Levi letters {levi:?}, {} coset representatives", d.group_order(), reps.len());
        let longest = d.longest();
        println!("  longest element {longest} of length {}", d.length(&longest));
        for w in reps.iter().take(4) {
            let inv: Vec<String> = d.inversion_set(w).iter().map(|(r, f)| format!("{}[{f}]", r.label())).collect();
            println!("  N({w}) = {{{}}}", inv.join(", "));
        }
    }
    Ok(())
}
