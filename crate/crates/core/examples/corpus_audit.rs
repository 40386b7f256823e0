//! Audit a JSON-lines corpus. Reads the file given as the first argument,
//! or a small built-in corpus.

use std::fs::File;
use std::io::{self, BufReader};

use braidtwist::corpus::audit_stream;
use braidtwist::Limits;

const SAMPLE: &str = r#"{"n":3,"word":[2,1,2,1,2,1,2,1,-2,-2],"meta":{"g4_upper":"3/2"}}
{"n":3,"word":[1,2,1,2,1,2,1,2],"meta":{"g3":3,"expected_fdtc":"4/3"}}
{"n":3,"word":[1,2,1,2,1,2,-1,-2],"meta":{"finite_order":true}}
{"n":2,"word":[1,1],"meta":{"g3":0}}
not json
"#;

fn main() -> io::Result<()> {
    let limits = Limits::from_env();
    let stdout = io::stdout();
    let summary = match std::env::args().nth(1) {
        Some(path) => audit_stream(
            BufReader::new(File::open(path)?),
            stdout.lock(),
            None,
            &limits,
        )?,
        None => audit_stream(SAMPLE.as_bytes(), stdout.lock(), None, &limits)?,
    };
    eprintln!("{summary:?}");
    Ok(())
}
