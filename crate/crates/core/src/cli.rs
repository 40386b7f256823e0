//! Command-line front end. `run` returns the process exit status:
//! 0 on success, 1 on domain errors, 2 on usage errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::braid::BraidWord;
use crate::corpus::audit_stream;
use crate::dehornoy::{compare_with, order_sign_with, Limits};
use crate::error::{Error, Result};
use crate::families::{generate, FamilySpec};
use crate::fdtc::{dehornoy_floor_with, destab_bounds, fdtc_exact_with, word_sign_bounds};
use crate::invariants::{audit_bounds_with, tau_s_bounds, AuditInputs, Predicate};
use crate::murasugi::{
    cross_check_with, fdtc_3braid, is_quasi_alternating, to_word, Murasugi3Form,
};
use crate::qp::{qp_report, SyllableWord};
use crate::rational::Rational;

#[derive(Debug, Parser)]
#[command(
    name = "braidtwist",
    version,
    about = "Dehornoy order, floors and FDTC of braids"
)]
struct Cli {
    /// Number of strands.
    #[arg(long, global = true)]
    strands: Option<usize>,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Handle-reduction step cap (overrides BRAIDTWIST_STEP_CAP).
    #[arg(long, global = true, value_name = "STEPS")]
    cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a word and print it in canonical form.
    Parse {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Sign of a braid relative to the identity: LT, EQ or GT.
    Sign {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Compare two braids: LT, EQ or GT.
    Compare {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Dehornoy floor max{t : Δ^{2t} ⪯ β}.
    Floor {
        #[arg(allow_hyphen_values = true)]
        word: String,
    },
    /// Exact fractional Dehn twist coefficient with certificate.
    Fdtc {
        #[arg(allow_hyphen_values = true)]
        word: String,
        /// Only print the interval obtained from the floor of β^N.
        #[arg(long, value_name = "N")]
        power: Option<i64>,
    },
    /// τ/s bounds and genus audit predicates for a knot braid.
    Bounds {
        #[arg(allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        inputs: InputArgs,
        /// Comma-separated predicates (ito,question15,slice3,qp,expected).
        #[arg(long)]
        predicates: Option<String>,
    },
    /// Quasipositive bookkeeping for `w | i | ±; …` syllables.
    Qp { syllables: String },
    /// Murasugi normal form of a 3-braid.
    Murasugi {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        class: u8,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        /// Class 1 exponents, comma separated.
        #[arg(long, value_delimiter = ',')]
        a: Vec<i64>,
        #[arg(long, allow_hyphen_values = true)]
        m: Option<i64>,
    },
    /// Print a member of a braid family: ktd M K | bttau K | torus P Q | fulltwists T WORD.
    Family {
        name: String,
        #[arg(allow_hyphen_values = true)]
        params: Vec<String>,
    },
    /// Audit a JSON-lines corpus (file or stdin).
    Audit {
        path: Option<String>,
        #[arg(long)]
        predicates: Option<String>,
    },
}

#[derive(Debug, Clone, Args)]
struct InputArgs {
    #[arg(long, allow_hyphen_values = true)]
    g3: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    g4: Option<Rational>,
    #[arg(long = "g4-upper", allow_hyphen_values = true)]
    g4_upper: Option<Rational>,
    /// The knot has finite order in the concordance group.
    #[arg(long = "finite-order")]
    finite_order: bool,
    #[arg(long = "qp-length")]
    qp_length: Option<usize>,
}

impl InputArgs {
    fn into_inputs(self) -> AuditInputs {
        AuditInputs {
            g3: self.g3,
            g4: self.g4,
            g4_upper: self.g4_upper,
            finite_order: self.finite_order.then_some(true),
            qp_length: self.qp_length,
            expected_floor: None,
            expected_fdtc: None,
        }
    }
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return code;
        }
    };
    match execute(cli, out) {
        Ok(()) => 0,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "usage error: {msg}");
            2
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
    }
}

fn strands(cli: &Cli) -> std::result::Result<usize, Failure> {
    cli.strands
        .ok_or_else(|| Failure::Usage("--strands N is required".to_string()))
}

fn word_arg(text: &str, n: usize) -> Result<BraidWord> {
    BraidWord::parse(text, n)
}

fn emit(out: &mut dyn Write, value: &serde_json::Value) -> io::Result<()> {
    writeln!(out, "{value}")
}

fn execute(cli: Cli, out: &mut dyn Write) -> std::result::Result<(), Failure> {
    let mut limits = Limits::from_env();
    if let Some(cap) = cli.cap {
        limits.step_cap = cap;
    }
    let json = cli.json;
    match &cli.command {
        Command::Parse { word } => {
            let w = word_arg(word, strands(&cli)?)?;
            if json {
                emit(
                    out,
                    &json!({
                        "n": w.strands(),
                        "word": w.letters(),
                        "exponent_counts": w.exponent_counts(),
                        "components": w.closure_components(),
                    }),
                )?;
            } else {
                writeln!(out, "{w}")?;
            }
        }
        Command::Sign { word } => {
            let w = word_arg(word, strands(&cli)?)?;
            let s = order_sign_with(&w, &limits)?;
            if json {
                emit(out, &json!({ "sign": s.token() }))?;
            } else {
                writeln!(out, "{s}")?;
            }
        }
        Command::Compare { a, b } => {
            let n = strands(&cli)?;
            let s = compare_with(&word_arg(a, n)?, &word_arg(b, n)?, &limits)?;
            if json {
                emit(out, &json!({ "order": s.token() }))?;
            } else {
                writeln!(out, "{s}")?;
            }
        }
        Command::Floor { word } => {
            let res = dehornoy_floor_with(&word_arg(word, strands(&cli)?)?, &limits)?;
            if json {
                emit(out, &serde_json::to_value(&res).expect("serializable"))?;
            } else {
                writeln!(out, "{}", res.floor)?;
            }
        }
        Command::Fdtc { word, power } => {
            let w = word_arg(word, strands(&cli)?)?;
            if let Some(power) = power {
                let (lo, hi) = crate::fdtc::fdtc_interval(&w, *power)?;
                if json {
                    emit(out, &json!({ "N": power, "lo": lo, "hi": hi }))?;
                } else {
                    writeln!(out, "[{lo}, {hi}]")?;
                }
                return Ok(());
            }
            let res = fdtc_exact_with(&w, &limits)?;
            let certificate = json!({ "N": res.power_used, "floor": res.floor_of_power, "lo": res.lo, "hi": res.hi });
            if json {
                emit(
                    out,
                    &json!({
                        "value": res.value,
                        "certificate": certificate,
                        "sign_bounds": word_sign_bounds(&w),
                        "destab_bounds": destab_bounds(&w),
                    }),
                )?;
            } else {
                writeln!(out, "{}", res.value)?;
                writeln!(out, "{certificate}")?;
            }
        }
        Command::Bounds {
            word,
            inputs,
            predicates,
        } => {
            let w = word_arg(word, strands(&cli)?)?;
            let tau_s = tau_s_bounds(&w)?;
            let inputs = inputs.clone().into_inputs();
            let preds = match predicates {
                Some(p) => Predicate::parse_list(p).map_err(|e| Failure::Usage(e.to_string()))?,
                None => inputs.applicable(),
            };
            let audit = audit_bounds_with(&w, &inputs, &preds, &limits)?;
            if json {
                emit(out, &json!({ "tau_s": tau_s, "audit": audit }))?;
            } else {
                writeln!(out, "tau in [{}, {}]", tau_s.tau_lo, tau_s.tau_hi)?;
                writeln!(out, "s in [{}, {}]", tau_s.s_lo, tau_s.s_hi)?;
                writeln!(out, "floor {}", audit.floor)?;
                writeln!(out, "fdtc {}", audit.fdtc)?;
                for rec in &audit.records {
                    let verdict = serde_json::to_value(rec.verdict).expect("serializable");
                    writeln!(
                        out,
                        "{}: {} ({})",
                        rec.predicate,
                        verdict.as_str().unwrap_or("?"),
                        rec.check
                    )?;
                }
            }
        }
        Command::Qp { syllables } => {
            let s = SyllableWord::parse(syllables, strands(&cli)?)?;
            let report = qp_report(&s);
            if json {
                emit(out, &serde_json::to_value(&report).expect("serializable"))?;
            } else {
                let opt = |v: Option<String>| v.unwrap_or_else(|| "n/a".to_string());
                writeln!(out, "qp_length {}", report.qp_length)?;
                writeln!(out, "chi4 {}", opt(report.chi4.map(|v| v.to_string())))?;
                writeln!(out, "g4 {}", opt(report.g4.map(|v| v.to_string())))?;
                writeln!(
                    out,
                    "bt_upper {}",
                    opt(report.bt_upper.map(|v| v.to_string()))
                )?;
                writeln!(
                    out,
                    "cor_a_bounds [{}, {}] {}",
                    report.cor_a_bounds.0, report.cor_a_bounds.1, report.cor_a_status
                )?;
            }
        }
        Command::Murasugi { class, d, a, m } => {
            let need_m = || {
                m.ok_or_else(|| Failure::Usage("--m is required for classes 2 and 3".to_string()))
            };
            let form = match class {
                1 => Murasugi3Form::Class1 {
                    d: *d,
                    a: a.clone(),
                },
                2 => Murasugi3Form::Class2 {
                    d: *d,
                    m: need_m()?,
                },
                _ => Murasugi3Form::Class3 {
                    d: *d,
                    m: need_m()?,
                },
            };
            let word = to_word(&form)?;
            let closed = fdtc_3braid(&form)?;
            let qa = is_quasi_alternating(&form)?;
            let agrees = cross_check_with(&form, &limits)?;
            if json {
                emit(
                    out,
                    &json!({
                        "form": form,
                        "word": word.letters(),
                        "fdtc": closed,
                        "quasi_alternating": qa,
                        "cross_check": agrees,
                    }),
                )?;
            } else {
                writeln!(out, "word {word}")?;
                writeln!(out, "fdtc {closed}")?;
                writeln!(out, "quasi_alternating {qa}")?;
                writeln!(out, "cross_check {agrees}")?;
            }
        }
        Command::Family { name, params } => {
            let spec = family_spec(name, params, cli.strands)?;
            let w = generate(&spec)?;
            if json {
                emit(out, &json!({ "n": w.strands(), "word": w.letters() }))?;
            } else {
                writeln!(out, "{w}")?;
            }
        }
        Command::Audit { path, predicates } => {
            let preds = match predicates {
                Some(p) => {
                    Some(Predicate::parse_list(p).map_err(|e| Failure::Usage(e.to_string()))?)
                }
                None => None,
            };
            let summary = match path.as_deref() {
                None | Some("-") => {
                    audit_stream(io::stdin().lock(), &mut *out, preds.as_deref(), &limits)?
                }
                Some(p) => audit_stream(
                    BufReader::new(File::open(p)?),
                    &mut *out,
                    preds.as_deref(),
                    &limits,
                )?,
            };
            if summary.errors > 0 {
                return Err(Failure::Domain(format!(
                    "{} malformed or failing entries",
                    summary.errors
                )));
            }
        }
    }
    Ok(())
}

fn family_spec(
    name: &str,
    params: &[String],
    strands: Option<usize>,
) -> std::result::Result<FamilySpec, Failure> {
    let int = |i: usize| -> std::result::Result<i64, Failure> {
        let text = params
            .get(i)
            .ok_or_else(|| Failure::Usage(format!("family {name}: missing parameter {}", i + 1)))?;
        text.replace('\u{2212}', "-")
            .parse()
            .map_err(|_| Failure::Usage(format!("family {name}: `{text}` is not an integer")))
    };
    let arity = |k: usize| {
        if params.len() == k {
            Ok(())
        } else {
            Err(Failure::Usage(format!(
                "family {name} takes {k} parameters, got {}",
                params.len()
            )))
        }
    };
    match name {
        "ktd" => {
            arity(2)?;
            Ok(FamilySpec::Ktd {
                m: int(0)?,
                k: int(1)?,
            })
        }
        "bttau" => {
            arity(1)?;
            Ok(FamilySpec::Bttau { k: int(0)? })
        }
        "torus" => {
            arity(2)?;
            let p = int(0)?;
            if p < 0 {
                return Err(Failure::Domain(format!("torus needs p >= 2, got {p}")));
            }
            Ok(FamilySpec::Torus {
                p: p as usize,
                q: int(1)?,
            })
        }
        "fulltwists" => {
            arity(2)?;
            let n = strands
                .ok_or_else(|| Failure::Usage("fulltwists needs --strands N".to_string()))?;
            let base = BraidWord::parse(&params[1], n)?;
            Ok(FamilySpec::FullTwists {
                n,
                base: base.into_letters(),
                t: int(0)?,
            })
        }
        other => Err(Failure::Usage(format!(
            "unknown family `{other}` (ktd, bttau, torus, fulltwists)"
        ))),
    }
}
