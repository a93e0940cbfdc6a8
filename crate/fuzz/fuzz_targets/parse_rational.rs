#![no_main]

use jsr_core::doc::{format_rational, parse_rational};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(q) = parse_rational(s) {
            // accepted literals round-trip through the canonical rendering
            let again = parse_rational(&format_rational(&q)).expect("canonical form reparses");
            assert_eq!(q, again);
        }
    }
});
