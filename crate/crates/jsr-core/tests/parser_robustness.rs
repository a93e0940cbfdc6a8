//! Replays the checked-in fuzz corpus plus a battery of adversarial inputs
//! through the parser entry points. Mirrors the fuzz targets' invariants so
//! plain `cargo test` exercises them; `cargo +nightly fuzz run <target>`
//! explores further.

use std::fs;
use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use jsr_core::doc::{format_rational, format_word, parse_rational, parse_word, MatrixSetDocument};

fn corpus_dir(target: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fuzz/corpus")
        .join(target)
}

fn corpus_inputs(target: &str) -> Vec<Vec<u8>> {
    let dir = corpus_dir(target);
    let mut out = Vec::new();
    for entry in fs::read_dir(&dir).unwrap_or_else(|e| panic!("corpus {:?}: {}", dir, e)) {
        out.push(fs::read(entry.unwrap().path()).unwrap());
    }
    assert!(!out.is_empty(), "corpus for {} must not be empty", target);
    out
}

fn exercise_document(data: &[u8]) {
    if let Ok(doc) = MatrixSetDocument::parse_json(data) {
        let again = MatrixSetDocument::parse_json(doc.to_json().as_bytes())
            .expect("serialized documents reparse");
        assert_eq!(doc, again);
        let _ = doc.to_set();
    }
}

fn exercise_rational(data: &[u8]) {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(q) = parse_rational(s) {
            assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
        }
    }
}

fn exercise_word(data: &[u8]) {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(w) = parse_word(s) {
            assert_eq!(parse_word(&format_word(&w)).unwrap(), w);
        }
    }
}

#[test]
fn corpus_replays_cleanly() {
    for input in corpus_inputs("parse_document") {
        exercise_document(&input);
    }
    for input in corpus_inputs("parse_rational") {
        exercise_rational(&input);
    }
    for input in corpus_inputs("parse_word") {
        exercise_word(&input);
    }
}

#[test]
fn mutated_corpus_replays_cleanly() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0220522);
    for target in ["parse_document", "parse_rational", "parse_word"] {
        for input in corpus_inputs(target) {
            for _ in 0..300 {
                let mut mutated = input.clone();
                for _ in 0..rng.gen_range(1..=4) {
                    if mutated.is_empty() {
                        break;
                    }
                    let i = rng.gen_range(0..mutated.len());
                    match rng.gen_range(0..3) {
                        0 => mutated[i] = rng.gen(),
                        1 => {
                            mutated.remove(i);
                        }
                        _ => mutated.insert(i, rng.gen()),
                    }
                }
                match target {
                    "parse_document" => exercise_document(&mutated),
                    "parse_rational" => exercise_rational(&mutated),
                    _ => exercise_word(&mutated),
                }
            }
        }
    }
}

#[test]
fn adversarial_documents_do_not_panic() {
    let nasty: Vec<Vec<u8>> = vec![
        b"".to_vec(),
        b"{}".to_vec(),
        b"[]".to_vec(),
        b"null".to_vec(),
        b"\xff\xfe\x00".to_vec(),
        b"{\"dimension\": 0, \"matrices\": [[[\"1\"]]]}".to_vec(),
        b"{\"dimension\": 1e308, \"matrices\": []}".to_vec(),
        b"{\"dimension\": -1, \"matrices\": [[[\"1\"]]]}".to_vec(),
        b"{\"dimension\": 99999999999999999999, \"matrices\": []}".to_vec(),
        b"{\"dimension\": 1, \"matrices\": [[[1.5]]]}".to_vec(),
        b"{\"dimension\": 1, \"matrices\": [[[\"1e5\"]]]}".to_vec(),
        b"{\"dimension\": 1, \"matrices\": [[[\"1/0\"]]]}".to_vec(),
        b"{\"dimension\": 1, \"matrices\": [[[\"--1\"]]]}".to_vec(),
        b"{\"dimension\": 1, \"matrices\": [[[\"1\"]], [[\"1\"]]]}".to_vec(),
        {
            // deep nesting stays within serde_json's recursion guard
            let mut s = Vec::new();
            s.extend_from_slice(b"{\"dimension\": 1, \"matrices\": ");
            s.extend(std::iter::repeat_n(b'[', 500));
            s.extend(std::iter::repeat_n(b']', 500));
            s.push(b'}');
            s
        },
        {
            // an enormous literal is rejected, not parsed into memory
            let mut s = Vec::new();
            s.extend_from_slice(b"{\"dimension\": 1, \"matrices\": [[[\"");
            s.extend(std::iter::repeat_n(b'9', 50_000));
            s.extend_from_slice(b"\"]]]}");
            s
        },
    ];
    for input in &nasty {
        exercise_document(input);
    }
    for s in ["", "/", "1/", "/2", "-", "--3", "1//2", "\u{221a}2", "1 / 2", "∞"] {
        exercise_rational(s.as_bytes());
    }
    for s in ["", ",", ",,", "0,,1", "18446744073709551616", "-0", " 1 , 2 "] {
        exercise_word(s.as_bytes());
    }
}
