#![no_main]

use hourglass_core::projection::{matching_validate, Matching};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = Matching::from_json(s) {
        assert!(matching_validate(&m));
    }
});
