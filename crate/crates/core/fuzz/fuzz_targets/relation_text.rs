#![no_main]
use libfuzzer_sys::fuzz_target;
use operadlab::arith::PolyQ;
use operadlab::operad::{parse_tree, Relation, RenderOptions, Space};

const SPACES: [Space; 5] = [Space::O1, Space::O2, Space::So1Plain, Space::So1Polar, Space::So2];

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let _ = parse_tree(s);
    for space in SPACES {
        if let Ok(r) = Relation::<PolyQ>::parse(space, s) {
            for unicode in [false, true] {
                let text = r.render(RenderOptions { unicode });
                assert_eq!(Relation::<PolyQ>::parse(space, &text).unwrap(), r, "{text}");
            }
        }
    }
});
