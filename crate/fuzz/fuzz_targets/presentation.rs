#![no_main]

use libfuzzer_sys::fuzz_target;
use mlaw::{eliminate_short_relators, parse_presentation, todd_coxeter, EnumerationLimits};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(p) = parse_presentation(text) else { return };
    // printing and re-parsing must give the same presentation
    let again = parse_presentation(&p.to_string()).expect("printed presentation parses");
    assert_eq!(again, p);
    let simplified = eliminate_short_relators(&p);
    let limits = EnumerationLimits::new(2_000, 2).unwrap();
    if let (Ok(a), Ok(b)) = (
        todd_coxeter(&p, &limits),
        todd_coxeter(&simplified.presentation, &limits),
    ) {
        assert_eq!(a.len(), b.len());
    }
});
