#![no_main]

use libfuzzer_sys::fuzz_target;
use symcube::ingest::{parse_chi_value, parse_rational};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = parse_rational(text) {
        assert_eq!(parse_rational(&q.to_string()), Ok(q));
    }
    let _ = parse_chi_value(text);
});
