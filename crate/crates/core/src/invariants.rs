//! Concordance bounds read off braid words, closed-form values for torus
//! knots, and audit predicates tying the Dehornoy floor and FDTC to genus.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::dehornoy::Limits;
use crate::error::{Error, Result};
use crate::fdtc::{dehornoy_floor_with, fdtc_exact_with};
use crate::rational::Rational;

/// Word-level bounds on τ and s of a knot closure.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBounds {
    pub tau_lo: Rational,
    pub tau_hi: Rational,
    pub s_lo: Rational,
    pub s_hi: Rational,
}

/// `(k − l − n + 1)/2 ≤ τ ≤ (k − l + n − 1)/2`, and twice that for `s`.
pub fn tau_s_bounds(w: &BraidWord) -> Result<InvariantBounds> {
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    let e = w.exponent_counts().sum;
    let n = w.strands() as i64;
    let s_lo = e - n + 1;
    let s_hi = e + n - 1;
    Ok(InvariantBounds {
        tau_lo: Rational::new(s_lo, 2)?,
        tau_hi: Rational::new(s_hi, 2)?,
        s_lo: Rational::integer(s_lo),
        s_hi: Rational::integer(s_hi),
    })
}

/// τ of the positive torus knot `T_{p,q}`: `(p − 1)(q − 1)/2`.
pub fn torus_tau(p: i64, q: i64) -> Result<Rational> {
    if p < 1 || q < 1 {
        return Err(Error::InvalidParameter(format!(
            "torus parameters must be >= 1, got ({p}, {q})"
        )));
    }
    if p.gcd(&q) != 1 {
        return Err(Error::InvalidParameter(format!(
            "({p}, {q}) are not coprime"
        )));
    }
    Rational::new((p - 1) * (q - 1), 2)
}

/// The two torus families for which Υ(1) is tabulated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum UpsilonFamily {
    /// `T_{2,2k+1}`
    T2 { k: i64 },
    /// `T_{3,3m+1}`
    T3 { m: i64 },
}

pub fn upsilon_at_one(family: UpsilonFamily) -> Result<i64> {
    match family {
        UpsilonFamily::T2 { k } if k >= 0 => Ok(-k),
        UpsilonFamily::T3 { m } if m >= 0 => Ok(-2 * m),
        other => Err(Error::InvalidParameter(format!(
            "Υ(1) is not tabulated for {other:?}"
        ))),
    }
}

/// `g₄(T_{3,3m+1} # −T_{2,2k+1}) = max{|Δτ|, |ΔΥ(1)|}`.
pub fn g4_torus_difference(m: i64, k: i64) -> Result<Rational> {
    if m < 0 || k < 0 {
        return Err(Error::InvalidParameter(format!(
            "m, k must be >= 0, got ({m}, {k})"
        )));
    }
    let tau_diff = (torus_tau(3, 3 * m + 1)? - torus_tau(2, 2 * k + 1)?).abs();
    let ups_diff = Rational::integer(
        (upsilon_at_one(UpsilonFamily::T3 { m })? - upsilon_at_one(UpsilonFamily::T2 { k })?).abs(),
    );
    Ok(tau_diff.max(ups_diff))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Predicate {
    /// Seifert-genus bounds on the floor and the FDTC.
    Ito,
    /// `|FDTC| ≤ 2g₄ + n − 2`, an open question rather than a theorem.
    Question15,
    /// `|FDTC| ≤ 1` for 3-braids of knots with finite concordance order.
    Slice3,
    /// `0 ≤ FDTC ≤ m − 1` for quasipositive braids of qp-length `m`.
    Qp,
    /// Caller-supplied expected floor / FDTC values.
    Expected,
}

impl Predicate {
    pub const ALL: [Predicate; 5] = [
        Predicate::Ito,
        Predicate::Question15,
        Predicate::Slice3,
        Predicate::Qp,
        Predicate::Expected,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Predicate::Ito => "ito",
            Predicate::Question15 => "question15",
            Predicate::Slice3 => "slice3",
            Predicate::Qp => "qp",
            Predicate::Expected => "expected",
        }
    }

    pub fn parse_list(text: &str) -> Result<Vec<Predicate>> {
        text.split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| {
                Predicate::ALL
                    .into_iter()
                    .find(|p| p.name() == s)
                    .ok_or_else(|| Error::InvalidParameter(format!("unknown predicate `{s}`")))
            })
            .collect()
    }
}

/// Ground-truth values the caller vouches for.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct AuditInputs {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g3: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g4: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g4_upper: Option<Rational>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub finite_order: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub qp_length: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_floor: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_fdtc: Option<Rational>,
}

impl AuditInputs {
    /// Predicates whose inputs are present.
    pub fn applicable(&self) -> Vec<Predicate> {
        let mut out = Vec::new();
        if self.g3.is_some() {
            out.push(Predicate::Ito);
        }
        if self.g4.is_some() || self.g4_upper.is_some() {
            out.push(Predicate::Question15);
        }
        if self.finite_order.is_some() {
            out.push(Predicate::Slice3);
        }
        if self.qp_length.is_some() {
            out.push(Predicate::Qp);
        }
        if self.expected_floor.is_some() || self.expected_fdtc.is_some() {
            out.push(Predicate::Expected);
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum Verdict {
    Pass,
    Fail,
    /// A violation of a conjectured bound.
    CounterexampleCandidate,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PredicateRecord {
    pub predicate: String,
    pub verdict: Verdict,
    /// Human-readable inequality with the numbers substituted.
    pub check: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditReport {
    pub n: usize,
    pub floor: i64,
    pub fdtc: Rational,
    pub records: Vec<PredicateRecord>,
}

fn record(predicate: &str, ok: bool, check: String) -> PredicateRecord {
    PredicateRecord {
        predicate: predicate.to_string(),
        verdict: if ok { Verdict::Pass } else { Verdict::Fail },
        check,
    }
}

/// Magnitude of the floor in the sign-symmetric convention: for braids
/// below the identity, the floor of the order-reversing flip.
fn symmetric_floor(w: &BraidWord, floor: i64, limits: &Limits) -> Result<i64> {
    if floor >= 0 {
        Ok(floor)
    } else {
        Ok(dehornoy_floor_with(&w.flip(), limits)?.floor)
    }
}

pub fn audit_bounds(
    w: &BraidWord,
    inputs: &AuditInputs,
    predicates: &[Predicate],
) -> Result<AuditReport> {
    audit_bounds_with(w, inputs, predicates, &Limits::from_env())
}

pub fn audit_bounds_with(
    w: &BraidWord,
    inputs: &AuditInputs,
    predicates: &[Predicate],
    limits: &Limits,
) -> Result<AuditReport> {
    let components = w.closure_components();
    if components != 1 {
        return Err(Error::NotAKnot(components));
    }
    // fail fast on missing inputs before doing any engine work
    for &p in predicates {
        let missing = match p {
            Predicate::Ito if inputs.g3.is_none() => Some("g3"),
            Predicate::Question15 if inputs.g4.is_none() && inputs.g4_upper.is_none() => Some("g4"),
            Predicate::Slice3 if inputs.finite_order.is_none() => Some("finite_order"),
            Predicate::Qp if inputs.qp_length.is_none() => Some("qp_length"),
            Predicate::Expected
                if inputs.expected_floor.is_none() && inputs.expected_fdtc.is_none() =>
            {
                Some("expected_floor")
            }
            _ => None,
        };
        if let Some(field) = missing {
            return Err(Error::MissingInput {
                predicate: p.name(),
                field,
            });
        }
    }

    let n = w.strands() as i64;
    let floor = dehornoy_floor_with(w, limits)?.floor;
    let fdtc = fdtc_exact_with(w, limits)?.value;
    let abs_bt = fdtc.abs();
    let mut records = Vec::new();

    for &p in predicates {
        match p {
            Predicate::Ito => {
                let g3 = inputs.g3.expect("checked above");
                let mag = symmetric_floor(w, floor, limits)?;
                let bound = Rational::new(4, 1)? * g3 - Rational::integer(2);
                let bound = bound * Rational::new(1, n + 2)? + Rational::new(3, 2)?;
                records.push(record(
                    "ito_floor",
                    Rational::integer(mag) < bound,
                    format!("|[β]_D| = {mag} < (4·{g3} − 2)/({n} + 2) + 3/2 = {bound}"),
                ));
                let rhs = g3 + Rational::integer(2);
                records.push(record(
                    "ito_fdtc",
                    abs_bt <= rhs,
                    format!("|FDTC| = {abs_bt} ≤ g3 + 2 = {rhs}"),
                ));
            }
            Predicate::Question15 => {
                let (g4, source) = match (inputs.g4, inputs.g4_upper) {
                    (Some(g4), _) => (g4, "g4"),
                    (None, Some(u)) => (u, "g4_upper"),
                    (None, None) => unreachable!("checked above"),
                };
                let rhs = Rational::integer(2) * g4 + Rational::integer(n - 2);
                let ok = abs_bt <= rhs;
                records.push(PredicateRecord {
                    predicate: "question15".to_string(),
                    verdict: if ok {
                        Verdict::Pass
                    } else {
                        Verdict::CounterexampleCandidate
                    },
                    check: format!("|FDTC| = {abs_bt} ≤ 2·{source} + n − 2 = {rhs}"),
                });
            }
            Predicate::Slice3 => {
                let flagged = inputs.finite_order == Some(true);
                if !flagged || n != 3 {
                    records.push(PredicateRecord {
                        predicate: "slice3".to_string(),
                        verdict: Verdict::NotApplicable,
                        check: format!("needs a 3-braid of a finite-order knot (n = {n}, finite_order = {flagged})"),
                    });
                } else {
                    records.push(record(
                        "slice3",
                        abs_bt <= Rational::ONE,
                        format!("|FDTC| = {abs_bt} ≤ 1"),
                    ));
                }
            }
            Predicate::Qp => {
                let m = inputs.qp_length.expect("checked above") as i64;
                if n < 3 {
                    records.push(PredicateRecord {
                        predicate: "qp".to_string(),
                        verdict: Verdict::NotApplicable,
                        check: "needs at least 3 strands".to_string(),
                    });
                } else {
                    let ok = Rational::ZERO <= fdtc && fdtc <= Rational::integer(m - 1);
                    records.push(record(
                        "qp",
                        ok,
                        format!("0 ≤ FDTC = {fdtc} ≤ m − 1 = {}", m - 1),
                    ));
                }
            }
            Predicate::Expected => {
                if let Some(f) = inputs.expected_floor {
                    records.push(record(
                        "expected_floor",
                        f == floor,
                        format!("[β]_D = {floor}, expected {f}"),
                    ));
                }
                if let Some(v) = inputs.expected_fdtc {
                    records.push(record(
                        "expected_fdtc",
                        v == fdtc,
                        format!("FDTC = {fdtc}, expected {v}"),
                    ));
                }
            }
        }
    }

    Ok(AuditReport {
        n: w.strands(),
        floor,
        fdtc,
        records,
    })
}
