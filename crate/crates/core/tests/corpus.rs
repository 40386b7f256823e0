mod common;

use braidtwist::braid::positive_braid_genus;
use braidtwist::corpus::audit_stream;
use braidtwist::families::{generate, FamilySpec};
use braidtwist::Limits;
use common::random_positive_word;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

fn run(lines: &[Value]) -> Vec<Value> {
    let input: String = lines.iter().map(|l| format!("{l}\n")).collect();
    let mut out = Vec::new();
    audit_stream(input.as_bytes(), &mut out, None, &Limits::default()).unwrap();
    String::from_utf8(out)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

fn verdicts(outcomes: &[Value]) -> Vec<String> {
    outcomes
        .iter()
        .filter_map(|o| o.get("report"))
        .flat_map(|r| r["records"].as_array().unwrap().clone())
        .map(|rec| rec["verdict"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn ktd_grid_passes_question_15() {
    let mut lines = Vec::new();
    for m in (2..=8).step_by(2) {
        for k in [1, 5 * m / 2] {
            let w = generate(&FamilySpec::Ktd { m, k }).unwrap();
            lines.push(
                json!({"n": 3, "word": w.letters(), "meta": {"g4_upper": format!("{}/2", m + 2)}}),
            );
        }
    }
    let out = run(&lines);
    let summary = &out.last().unwrap()["summary"];
    assert_eq!(summary["entries"], lines.len());
    assert_eq!(summary["errors"], 0);
    let v = verdicts(&out);
    assert_eq!(v.len(), lines.len());
    assert!(v.iter().all(|v| v == "PASS"), "{v:?}");
}

#[test]
fn random_positive_knots_pass_ito() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut lines = Vec::new();
    while lines.len() < 40 {
        let n = rng.gen_range(2..=5);
        let len = rng.gen_range(1..=16);
        let w = random_positive_word(&mut rng, n, len);
        if !w.is_knot() {
            continue;
        }
        let g3 = positive_braid_genus(&w).unwrap();
        lines.push(json!({"n": n, "word": w.letters(), "meta": {"g3": g3}}));
    }
    let out = run(&lines);
    assert_eq!(out.last().unwrap()["summary"]["errors"], 0);
    let v = verdicts(&out);
    assert_eq!(v.len(), 2 * lines.len());
    assert!(v.iter().all(|v| v == "PASS"), "{v:?}");
}

#[test]
fn output_preserves_input_order() {
    let lines: Vec<Value> = (1..=600)
        .map(|i| json!({"n": 2, "word": vec![1; 2 * (i % 7) + 1], "meta": {"expected_floor": i % 7}}))
        .collect();
    let out = run(&lines);
    assert_eq!(out.len(), 601);
    for (i, o) in out[..600].iter().enumerate() {
        assert_eq!(o["line"], i + 1);
        assert_eq!(o["report"]["records"][0]["verdict"], "PASS", "{o}");
    }
}
