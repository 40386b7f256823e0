//! Dehornoy floors of the K(m,k) family: the floor is m whatever k is.

use braidtwist::families::{generate, FamilySpec};
use braidtwist::fdtc::{dehornoy_floor, FLOOR_CONVENTION};

fn main() -> braidtwist::Result<()> {
    println!("floor convention: {FLOOR_CONVENTION}");
    println!("{:>3} floors for k = 1..6", "m");
    for m in 0..=4 {
        let floors: Vec<String> = (1..=6)
            .map(|k| {
                let w = generate(&FamilySpec::Ktd { m, k })?;
                Ok(dehornoy_floor(&w)?.floor.to_string())
            })
            .collect::<braidtwist::Result<_>>()?;
        println!("{m:>3} {}", floors.join(" "));
    }
    Ok(())
}
