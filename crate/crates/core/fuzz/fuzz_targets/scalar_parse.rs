#![no_main]
use libfuzzer_sys::fuzz_target;
use operadlab::arith::{BigInt, PolyQ, Rational, Scalar};

fn round_trip<S: Scalar>(s: &str) {
    if let Ok(x) = S::parse(s) {
        let again = S::parse(&x.to_string()).expect("rendered scalar must parse");
        assert_eq!(again, x);
    }
}

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        round_trip::<BigInt>(s);
        round_trip::<Rational>(s);
        round_trip::<PolyQ>(s);
    }
});
