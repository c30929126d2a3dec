#![no_main]

use libfuzzer_sys::fuzz_target;
use mlaw::EnumerationLimits;
use mlaw_cli::GroupSpec;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(spec) = text.parse::<GroupSpec>() else { return };
    assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
    if !matches!(spec, GroupSpec::Perm(_)) {
        let limits = EnumerationLimits::new(2_000, 2).unwrap();
        let _ = spec.build(48, &limits);
    }
});
