#![no_main]

use hourglass_core::tableaux::{tableau_to_word, OscillatingTableau};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = OscillatingTableau::from_json(s) {
        let _ = tableau_to_word(&t);
    }
});
