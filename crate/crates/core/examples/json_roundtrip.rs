//! Serialize a series to the library's JSON interchange form and read it
//! back bit-exactly: same dimension, same truncation order, and the same
//! exact rational coefficients — re-serializing yields byte-identical
//! text, so files can be diffed.
//!
//! The same container carries classical operators (a single order-1
//! coefficient list), which is how `rmatq quantize --input` reads its
//! starting operator.
//!
//! Run with: cargo run --example json_roundtrip

use rmatq::json::{
    classical_from_json, classical_to_json, series_from_json, series_to_json,
};
use rmatq::{catalog, verify::classical_limit};

fn main() {
    let series = catalog::example2(4).expect("valid order");

    // Series → JSON text → series.
    let dto = series_to_json(&series);
    let text = serde_json::to_string_pretty(&dto).expect("serializable");
    println!("serialized example2 through h^4: {} bytes", text.len());

    let parsed: rmatq::json::SeriesJson = serde_json::from_str(&text).expect("well-formed");
    let back = series_from_json(&parsed).expect("valid payload");
    assert_eq!(back.dim(), series.dim());
    assert_eq!(back.order(), series.order());
    assert!(back.sub(&series).expect("dims match").is_zero());

    // Bit-exactness: a second serialization is byte-identical.
    let text2 = serde_json::to_string_pretty(&series_to_json(&back)).expect("serializable");
    assert_eq!(text, text2);
    println!("round trip is byte-identical");

    // Classical operators travel in the same container.
    let (_, limit) = classical_limit(&series);
    let ctext =
        serde_json::to_string_pretty(&classical_to_json(&limit)).expect("serializable");
    let cparsed: rmatq::json::SeriesJson = serde_json::from_str(&ctext).expect("well-formed");
    let climit = classical_from_json(&cparsed).expect("valid payload");
    assert_eq!(climit.op, limit.op);
    println!("classical operator round trip holds too");

    // A taste of the payload: the first few lines.
    for line in text.lines().take(12) {
        println!("  {line}");
    }
    println!("  …");
}
