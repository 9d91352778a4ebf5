#![no_main]

use libfuzzer_sys::fuzz_target;
use symcube::ingest::{parse_hecke_str, serialize_hecke};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(h) = parse_hecke_str(text) {
        parse_hecke_str(&serialize_hecke(&h)).expect("serialized hecke data reparses");
    }
});
