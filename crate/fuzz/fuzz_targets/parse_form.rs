#![no_main]

use libfuzzer_sys::fuzz_target;
use symcube::ingest::{parse_form_str, serialize_form};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(form) = parse_form_str(text, "fuzz") {
        parse_form_str(&serialize_form(&form), "fuzz").expect("serialized form reparses");
    }
});
