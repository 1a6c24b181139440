#![no_main]

use hourglass_core::{HourglassWeb, PlanePartition};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = PlanePartition::from_json(s) {
        assert_eq!(PlanePartition::from_json(&p.to_json()).unwrap(), p);
        let bx = p.box3();
        // Keep the web build cheap.
        if bx.a + bx.b + bx.c <= 9 {
            let _ = HourglassWeb::from_plane_partition(&p);
        }
    }
});
