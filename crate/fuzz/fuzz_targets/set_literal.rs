#![no_main]

use freiman_core::IntSet;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(a) = text.parse::<IntSet>() else {
        return;
    };
    // printing and reparsing is the identity
    assert_eq!(a.to_string().parse::<IntSet>().unwrap(), a);
    assert!(a.elements().windows(2).all(|w| w[0] < w[1]));
    if a.len() <= 64 && a.length() <= 1 << 16 {
        let n = a.normalize();
        assert_eq!(n.reconstruct(), a);
        assert_eq!(n.set.doubling(), a.doubling());
    }
});
