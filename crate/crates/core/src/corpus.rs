//! JSON-lines corpora of braid words and the batch auditor.
//!
//! One entry per line: `{"n":3,"word":[2,1,2,1],"meta":{"g4_upper":"3/2"}}`.
//! Entries are audited in parallel batches; output order matches input.

use std::io::{BufRead, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Letter};
use crate::dehornoy::Limits;
use crate::error::Result;
use crate::invariants::{audit_bounds_with, AuditInputs, AuditReport, Predicate, Verdict};

const BATCH: usize = 256;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub n: usize,
    pub word: Vec<Letter>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<AuditInputs>,
}

impl CorpusEntry {
    pub fn braid(&self) -> Result<BraidWord> {
        BraidWord::new(self.n, self.word.clone())
    }
}

/// One output line of an audit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryOutcome {
    pub line: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<AuditReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuditSummary {
    pub entries: usize,
    pub errors: usize,
    pub pass: usize,
    pub fail: usize,
    pub counterexample_candidates: usize,
    pub not_applicable: usize,
}

impl AuditSummary {
    pub fn absorb(&mut self, outcome: &EntryOutcome) {
        self.entries += 1;
        match &outcome.report {
            None => self.errors += 1,
            Some(report) => {
                for rec in &report.records {
                    match rec.verdict {
                        Verdict::Pass => self.pass += 1,
                        Verdict::Fail => self.fail += 1,
                        Verdict::CounterexampleCandidate => self.counterexample_candidates += 1,
                        Verdict::NotApplicable => self.not_applicable += 1,
                    }
                }
            }
        }
    }
}

/// Audits one corpus line. `predicates = None` runs every predicate whose
/// inputs the entry supplies.
pub fn audit_line(
    line_no: usize,
    text: &str,
    predicates: Option<&[Predicate]>,
    limits: &Limits,
) -> EntryOutcome {
    let result = serde_json::from_str::<CorpusEntry>(text)
        .map_err(|e| format!("line {line_no}: malformed entry: {e}"))
        .and_then(|entry| {
            let braid = entry.braid().map_err(|e| format!("line {line_no}: {e}"))?;
            let meta = entry.meta.unwrap_or_default();
            let preds = predicates
                .map(<[Predicate]>::to_vec)
                .unwrap_or_else(|| meta.applicable());
            audit_bounds_with(&braid, &meta, &preds, limits)
                .map_err(|e| format!("line {line_no}: {e}"))
        });
    match result {
        Ok(report) => EntryOutcome {
            line: line_no,
            report: Some(report),
            error: None,
        },
        Err(error) => EntryOutcome {
            line: line_no,
            report: None,
            error: Some(error),
        },
    }
}

/// Streams a corpus, writing one JSON line per non-blank input line and a
/// final `{"summary": …}` line.
pub fn audit_stream<R: BufRead, W: Write>(
    reader: R,
    mut writer: W,
    predicates: Option<&[Predicate]>,
    limits: &Limits,
) -> std::io::Result<AuditSummary> {
    let mut summary = AuditSummary::default();
    let mut batch: Vec<(usize, String)> = Vec::with_capacity(BATCH);
    let mut lines = reader.lines().enumerate();
    loop {
        batch.clear();
        for (idx, line) in lines.by_ref() {
            let line = line?;
            if !line.trim().is_empty() {
                batch.push((idx + 1, line));
            }
            if batch.len() == BATCH {
                break;
            }
        }
        if batch.is_empty() {
            break;
        }
        let outcomes: Vec<EntryOutcome> = batch
            .par_iter()
            .map(|(no, text)| audit_line(*no, text, predicates, limits))
            .collect();
        for outcome in &outcomes {
            summary.absorb(outcome);
            serde_json::to_writer(&mut writer, outcome)?;
            writer.write_all(b"\n")?;
        }
    }
    serde_json::to_writer(&mut writer, &serde_json::json!({ "summary": &summary }))?;
    writer.write_all(b"\n")?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entry_round_trip() {
        let text = r#"{"n":3,"word":[2,1,2,1,2,1,2,1,-2,-2],"meta":{"g4_upper":"3/2"}}"#;
        let entry: CorpusEntry = serde_json::from_str(text).unwrap();
        assert_eq!(
            entry.meta.as_ref().unwrap().g4_upper.unwrap().to_string(),
            "3/2"
        );
        let back: CorpusEntry =
            serde_json::from_str(&serde_json::to_string(&entry).unwrap()).unwrap();
        assert_eq!(back, entry);
    }

    #[test]
    fn empty_corpus() {
        let mut out = Vec::new();
        let summary = audit_stream(&b""[..], &mut out, None, &Limits::default()).unwrap();
        assert_eq!(summary, AuditSummary::default());
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text.lines().count(), 1);
        assert!(text.starts_with("{\"summary\""));
    }

    #[test]
    fn malformed_lines_are_reported_and_skipped() {
        let corpus = "not json\n\n{\"n\":2,\"word\":[1,1,1],\"meta\":{\"expected_floor\":1}}\n{\"n\":2,\"word\":[5]}\n";
        let mut out = Vec::new();
        let summary = audit_stream(corpus.as_bytes(), &mut out, None, &Limits::default()).unwrap();
        assert_eq!(summary.entries, 3);
        assert_eq!(summary.errors, 2);
        assert_eq!(summary.pass, 1);
        let text = String::from_utf8(out).unwrap();
        let first: EntryOutcome = serde_json::from_str(text.lines().next().unwrap()).unwrap();
        assert_eq!(first.line, 1);
        assert!(first.error.unwrap().starts_with("line 1:"));
        let last_entry: EntryOutcome = serde_json::from_str(text.lines().nth(2).unwrap()).unwrap();
        assert_eq!(last_entry.line, 4);
    }
}
