#![no_main]

use libfuzzer_sys::fuzz_target;
use mlaw::Permutation;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = Permutation::parse_cycles(text, 0) {
        let back = Permutation::parse_cycles(&p.to_string(), p.degree()).expect("printed cycles parse");
        assert_eq!(back, p);
        assert_eq!(p.then(&p.inverse()), Permutation::identity(p.degree()));
    }
});
