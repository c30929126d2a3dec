#![no_main]

use libfuzzer_sys::fuzz_target;
use mlaw::{group_from_permutations, parse_generator_list};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(gens) = parse_generator_list(text) {
        if let Ok(g) = group_from_permutations(&gens, 120) {
            assert!(g.order() <= 120);
        }
    }
});
