#![no_main]

use jsr_core::doc::{format_word, parse_word};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(w) = parse_word(s) {
            let again = parse_word(&format_word(&w)).expect("canonical form reparses");
            assert_eq!(w, again);
        }
    }
});
