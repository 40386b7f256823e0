//! Compare braids in the Dehornoy order.
//!
//! cargo run --example compare_braids -- 3 "1 2" "2 1"

use braidtwist::{compare, handle_reduce, BraidWord};

fn main() -> braidtwist::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let (n, a, b) = match args.as_slice() {
        [n, a, b] => (n.parse().expect("strand count"), a.as_str(), b.as_str()),
        _ => (3, "1 2 1", "2 1 2"),
    };
    let a = BraidWord::parse(a, n)?;
    let b = BraidWord::parse(b, n)?;
    let quotient = b.inverse().concat(&a)?;
    println!("a        = {a}");
    println!("b        = {b}");
    println!("b^-1 a   = {quotient}");
    println!("reduced  = {}", handle_reduce(&quotient)?);
    println!("a ? b    = {}", compare(&a, &b)?);
    Ok(())
}
