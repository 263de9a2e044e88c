#![no_main]
use libfuzzer_sys::fuzz_target;
use operadlab::operad::{RelationDoc, RenderOptions};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let Ok(doc) = RelationDoc::from_json(s) else { return };
    if let Ok(r) = doc.to_relation() {
        let _ = r.render(RenderOptions { unicode: true });
        let back = RelationDoc::from_relation(&r, true).to_relation().unwrap();
        assert_eq!(back, r);
    }
});
