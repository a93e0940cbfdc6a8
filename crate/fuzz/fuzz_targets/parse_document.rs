#![no_main]

use jsr_core::doc::MatrixSetDocument;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    // parsing must be total: Ok or a positioned error, never a panic
    if let Ok(doc) = MatrixSetDocument::parse_json(data) {
        // accepted documents round-trip exactly and build a set or report
        // a structured error (duplicate members, mixed dimensions)
        let again = MatrixSetDocument::parse_json(doc.to_json().as_bytes())
            .expect("serialized documents reparse");
        assert_eq!(doc, again);
        let _ = doc.to_set();
    }
});
