//! τ and s bounds from a braid word, torus-knot values, and the genus
//! predicates the audit evaluates.

use braidtwist::families::{generate, FamilySpec};
use braidtwist::invariants::{
    audit_bounds, g4_torus_difference, tau_s_bounds, torus_tau, upsilon_at_one, UpsilonFamily,
};
use braidtwist::{AuditInputs, Predicate, Rational};

fn main() -> braidtwist::Result<()> {
    for k in 1..=3 {
        let w = generate(&FamilySpec::Bttau { k })?;
        let b = tau_s_bounds(&w)?;
        println!(
            "bttau k={k}: τ ∈ [{}, {}], s ∈ [{}, {}]",
            b.tau_lo, b.tau_hi, b.s_lo, b.s_hi
        );
    }
    println!(
        "τ(T(2,5)) = {}, τ(T(3,4)) = {}",
        torus_tau(2, 5)?,
        torus_tau(3, 4)?
    );
    println!(
        "Υ(1): T(2,7) → {}, T(3,4) → {}",
        upsilon_at_one(UpsilonFamily::T2 { k: 3 })?,
        upsilon_at_one(UpsilonFamily::T3 { m: 1 })?
    );
    for m in [2, 4, 6] {
        println!(
            "g4 torus difference (m={m}, k={}) = {}",
            5 * m / 2,
            g4_torus_difference(m, 5 * m / 2)?
        );
    }

    let w = generate(&FamilySpec::Ktd { m: 2, k: 5 })?;
    let inputs = AuditInputs {
        g4_upper: Some(Rational::integer(2)),
        ..AuditInputs::default()
    };
    let report = audit_bounds(&w, &inputs, &[Predicate::Question15])?;
    println!(
        "\n{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    Ok(())
}
