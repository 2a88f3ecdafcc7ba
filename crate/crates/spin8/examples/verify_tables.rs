//! Runs every built-in regression suite and prints one line per check.
//!
//! Run with `cargo run --example verify_tables`. Set `SPIN8_GOLDEN_DIR` to compare
//! against a different copy of the reference files.

fn main() -> spin8::error::Result<()> {
    let report = spin8::verify::paper_tables()?;
    print!("{}", report.to_text());
    std::process::exit(if report.pass { 0 } else { 1 });
}
