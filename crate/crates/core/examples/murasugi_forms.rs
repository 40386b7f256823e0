//! Murasugi normal forms of 3-braids: closed-form FDTC, quasi-alternating
//! classification, and the cross-check against the general engine.

use braidtwist::murasugi::{cross_check, fdtc_3braid, is_quasi_alternating, to_word};
use braidtwist::Murasugi3Form;

fn main() -> braidtwist::Result<()> {
    let forms = [
        Murasugi3Form::Class1 {
            d: 0,
            a: vec![1, 2],
        },
        Murasugi3Form::Class1 { d: 2, a: vec![3] },
        Murasugi3Form::Class2 { d: 1, m: -2 },
        Murasugi3Form::Class2 { d: -1, m: 4 },
        Murasugi3Form::Class3 { d: 1, m: -1 },
        Murasugi3Form::Class3 { d: 0, m: -3 },
    ];
    for f in &forms {
        println!(
            "{:<45} FDTC {:<5} QA {:<5} engine agrees {}",
            serde_json::to_string(f).expect("serializable"),
            fdtc_3braid(f)?.to_string(),
            is_quasi_alternating(f)?,
            cross_check(f)?,
        );
        println!("    word {}", to_word(f)?);
    }
    Ok(())
}
