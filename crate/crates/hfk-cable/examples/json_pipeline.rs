//! Serialize a complex and a computed cable table to JSON and read them
//! back. The writers emit stable, sorted output, so rewriting a parsed
//! document reproduces it byte for byte.

use hfk_cable::cable::cable2_hfk;
use hfk_cable::io::{parse_complex, parse_table, write_cable_table, write_complex};
use hfk_cable::torus::staircase_t2;

fn main() {
    let cx = staircase_t2(2).unwrap();
    let json = write_complex(&cx);
    println!("{}", json);

    let back = parse_complex(&json).unwrap();
    assert_eq!(back, cx);
    assert_eq!(write_complex(&back), json);

    let cable = cable2_hfk(&cx, 5, false).unwrap();
    let doc = write_cable_table(&cable, Some("(2,11) cable of T(2,5)"));
    let saved = parse_table(&doc).unwrap();
    assert_eq!(saved.table, cable.table);
    assert_eq!(saved.valid_range, Some(cable.valid_range));
    println!("cable table roundtrip ok: {} entries", saved.table.len());
}
