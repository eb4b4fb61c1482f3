#![no_main]

use freiman_core::record::{parse_chain_records, to_jsonl};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 16 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(records) = parse_chain_records(text) {
        // whatever validates must survive a round trip
        let again = parse_chain_records(&to_jsonl(&records)).expect("re-encoded records validate");
        assert_eq!(again, records);
    }
});
