#![no_main]

use freiman_core::record::parse_search_report;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if data.len() > 1 << 16 {
        return;
    }
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = parse_search_report(text) {
        let encoded = serde_json::to_string(&report).unwrap();
        assert_eq!(parse_search_report(&encoded).unwrap(), report);
    }
});
