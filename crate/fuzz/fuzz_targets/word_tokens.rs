#![no_main]

use hourglass_core::word::parse_tokens;
use hourglass_core::LatticeWord;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = parse_tokens(s);
    for rank in 1..=4 {
        if let Ok(w) = LatticeWord::parse(s, rank) {
            let again = LatticeWord::parse(&w.to_string(), rank).expect("display output parses");
            assert_eq!(again, w);
        }
    }
});
