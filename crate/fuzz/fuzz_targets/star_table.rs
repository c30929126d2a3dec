#![no_main]

use libfuzzer_sys::fuzz_target;
use mlaw::{builtin_family, verify_axioms, Family};
use mlaw_cli::{parse_star_table, StarTableFile};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(s) = parse_star_table(text) else { return };
    let again = parse_star_table(&StarTableFile::from_structure(&s).to_json()).unwrap();
    assert_eq!(again, s);
    if s.order() == 6 {
        let g = builtin_family(Family::Symmetric, &[3]).unwrap();
        let _ = verify_axioms(&g, &s).unwrap();
    }
});
