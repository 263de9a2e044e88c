//! Replays the checked-in fuzz corpus, plus mutated variants of every seed,
//! through the same round-trip invariants the fuzz targets assert.

use std::path::{Path, PathBuf};

use operadlab::arith::{BigInt, PolyQ, Rational, Scalar};
use operadlab::linalg::DynMatrix;
use operadlab::operad::{parse_tree, Relation, RelationDoc, RenderOptions, Space};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRng, TestRunner};

const SPACES: [Space; 5] = [Space::O1, Space::O2, Space::So1Plain, Space::So1Polar, Space::So2];

fn scalar_round_trip<S: Scalar>(s: &str) {
    if let Ok(x) = S::parse(s) {
        assert_eq!(S::parse(&x.to_string()).unwrap(), x, "{s:?}");
    }
}

fn scalar_parse(data: &[u8]) {
    if let Ok(s) = std::str::from_utf8(data) {
        scalar_round_trip::<BigInt>(s);
        scalar_round_trip::<Rational>(s);
        scalar_round_trip::<PolyQ>(s);
    }
}

fn matrix_json(data: &[u8]) {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = DynMatrix::from_json(s) {
        assert_eq!(DynMatrix::from_json(&m.to_json()).unwrap(), m);
    }
}

fn relation_json(data: &[u8]) {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(doc) = RelationDoc::from_json(s) else { return };
    if let Ok(r) = doc.to_relation() {
        let back = RelationDoc::from_relation(&r, true).to_relation().unwrap();
        assert_eq!(back, r);
    }
}

fn relation_text(data: &[u8]) {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = parse_tree(s);
    for space in SPACES {
        if let Ok(r) = Relation::<PolyQ>::parse(space, s) {
            for unicode in [false, true] {
                let text = r.render(RenderOptions { unicode });
                assert_eq!(Relation::<PolyQ>::parse(space, &text).unwrap(), r, "{text}");
            }
        }
    }
}

type Target = fn(&[u8]);

const TARGETS: [(&str, Target); 4] = [
    ("scalar_parse", scalar_parse),
    ("matrix_json", matrix_json),
    ("relation_json", relation_json),
    ("relation_text", relation_text),
];

fn seeds(target: &str) -> Vec<Vec<u8>> {
    let dir: PathBuf = Path::new(env!("CARGO_MANIFEST_DIR")).join("fuzz/corpus").join(target);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    files.into_iter().map(|p| std::fs::read(p).unwrap()).collect()
}

#[test]
fn every_target_has_seeds_that_pass() {
    for (name, target) in TARGETS {
        let corpus = seeds(name);
        assert!(corpus.len() >= 4, "{name} has {} seeds", corpus.len());
        corpus.iter().for_each(|s| target(s));
    }
}

#[test]
fn seeds_exercise_the_accepting_path() {
    let relation_texts = seeds("relation_text");
    let parsed = relation_texts
        .iter()
        .filter(|s| {
            let s = std::str::from_utf8(s).unwrap();
            SPACES.iter().any(|&sp| Relation::<PolyQ>::parse(sp, s).is_ok())
        })
        .count();
    assert!(parsed >= 4);
    let matrices = seeds("matrix_json");
    assert!(matrices.iter().filter(|s| DynMatrix::from_json(std::str::from_utf8(s).unwrap()).is_ok()).count() >= 3);
}

/// Byte-level edits: overwrite, insert, delete, or splice a token from a
/// small grammar-aware dictionary.
fn mutate(seed: &[u8], edits: &[(u8, usize, u8)]) -> Vec<u8> {
    const TOKENS: [&str; 12] = ["q", "^", "*", "/", "(", ")", "[", "]", "<", ">", "\"", "-1"];
    let mut out = seed.to_vec();
    for &(kind, pos, byte) in edits {
        let at = if out.is_empty() { 0 } else { pos % (out.len() + 1) };
        match kind % 4 {
            0 if at < out.len() => out[at] = byte,
            1 => out.insert(at, byte),
            2 if at < out.len() => {
                out.remove(at);
            }
            _ => {
                let tok = TOKENS[byte as usize % TOKENS.len()].as_bytes();
                out.splice(at..at, tok.iter().copied());
            }
        }
    }
    out
}

#[test]
fn mutated_seeds_never_break_invariants() {
    for (name, target) in TARGETS {
        let corpus = seeds(name);
        let config = Config { cases: 2000, failure_persistence: None, ..Config::default() };
        let rng = TestRng::deterministic_rng(config.rng_algorithm);
        let mut runner = TestRunner::new_with_rng(config, rng);
        let strategy = (0..corpus.len(), proptest::collection::vec((any::<u8>(), any::<usize>(), any::<u8>()), 1..6));
        runner
            .run(&strategy, |(i, edits)| {
                target(&mutate(&corpus[i], &edits));
                Ok(())
            })
            .unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}
