//! Quasipositive syllable words: slice genus, the qp-length bound on the
//! FDTC, and the conditional bounds for mixed words.

use braidtwist::fdtc::fdtc_exact;
use braidtwist::qp::{check_qp_bt_bound, expand, qp_report};
use braidtwist::SyllableWord;

fn main() -> braidtwist::Result<()> {
    let inputs = [
        (3, "1 | 2 | +; | 1 | +"),
        (3, "| 1 | +; | 2 | +; -1 | 2 | +; | 1 | +"),
        (4, "2 3 | 1 | +; -3 | 2 | +; | 3 | +"),
        (3, "| 1 | +; 2 | 1 | -; | 2 | +"),
    ];
    for (n, text) in inputs {
        let s = SyllableWord::parse(text, n)?;
        let w = expand(&s);
        let report = qp_report(&s);
        println!("B{n}: {text}");
        println!("  word {w}, FDTC {}", fdtc_exact(&w)?.value);
        println!(
            "  {}",
            serde_json::to_string(&report).expect("serializable")
        );
        if s.is_quasipositive() {
            println!("  0 <= FDTC <= m - 1: {}", check_qp_bt_bound(&s)?);
        }
    }
    Ok(())
}
