#![no_main]
use libfuzzer_sys::fuzz_target;
use operadlab::linalg::DynMatrix;

fuzz_target!(|data: &str| {
    if let Ok(m) = DynMatrix::from_json(data) {
        assert_eq!(DynMatrix::from_json(&m.to_json()).unwrap(), m);
    }
});
