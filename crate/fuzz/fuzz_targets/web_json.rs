#![no_main]

use hourglass_core::trips::boundary_word;
use hourglass_core::HourglassWeb;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(web) = HourglassWeb::from_json(s) {
        let _ = boundary_word(&web);
    }
});
