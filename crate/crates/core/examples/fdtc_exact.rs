//! Exact FDTC with its pinning certificate, for torus braids and a few
//! negative words.

use braidtwist::families::{generate, FamilySpec};
use braidtwist::fdtc::{fdtc_exact, word_sign_bounds};
use braidtwist::BraidWord;

fn show(label: &str, w: &BraidWord) -> braidtwist::Result<()> {
    let r = fdtc_exact(w)?;
    println!(
        "{label:<14} FDTC = {:<5} floor(β^{}) = {:<3} in [{}, {}]  {:?}",
        r.value.to_string(),
        r.power_used,
        r.floor_of_power,
        r.lo,
        r.hi,
        word_sign_bounds(w),
    );
    Ok(())
}

fn main() -> braidtwist::Result<()> {
    for (p, q) in [(2, 3), (3, 2), (3, 4), (3, 5), (4, 3), (5, 2)] {
        show(
            &format!("T({p},{q})"),
            &generate(&FamilySpec::Torus { p, q })?,
        )?;
    }
    for text in ["-1 -2", "-1 -1 -2", "-1 -1 -1 -2", "1 -2"] {
        show(text, &BraidWord::parse(text, 3)?)?;
    }
    Ok(())
}
