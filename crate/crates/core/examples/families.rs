//! Generate each braid family, then add full twists to a negative word:
//! the genus of the positive form grows like n m^2 / 2.

use braidtwist::braid::{make_positive, positive_braid_genus};
use braidtwist::families::{generate, FamilySpec};
use braidtwist::BraidWord;

fn main() -> braidtwist::Result<()> {
    let specs = [
        FamilySpec::Ktd { m: 1, k: 1 },
        FamilySpec::Bttau { k: 1 },
        FamilySpec::Torus { p: 3, q: 4 },
        FamilySpec::FullTwists {
            n: 3,
            base: vec![-1, -2],
            t: 1,
        },
    ];
    for spec in &specs {
        let w = generate(spec)?;
        println!("{}", serde_json::to_string(spec).expect("serializable"));
        println!(
            "  {w}  ({} letters, {} components)",
            w.len(),
            w.closure_components()
        );
    }

    let base = BraidWord::parse("-1 -2", 3)?;
    println!("\nfull twists added to {base}:");
    for t in 2..=6 {
        let p = make_positive(&base, t)?;
        println!(
            "  t = {t}: {} positive letters, genus {}",
            p.len(),
            positive_braid_genus(&p)?
        );
    }
    Ok(())
}
