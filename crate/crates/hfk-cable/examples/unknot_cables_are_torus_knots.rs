//! Cables of the unknot are torus knots, so the cabling routines must
//! reproduce the built-in torus tables exactly. This checks the 2-stranded
//! construction against T(2,2n+1) for both signs of twisting, and the
//! 3-stranded construction against T(3,7).

use hfk_cable::cable::{cable2_hfk, cablep_hfk, cablep_neg_hfk};
use hfk_cable::render::render_grid;
use hfk_cable::torus::{hfk_torus_2, hfk_torus_3_7, unknot};

fn main() {
    let u = unknot();

    for n in [1i64, 3, 5] {
        let cable = cable2_hfk(&u, n, true).unwrap();
        assert_eq!(cable.table, hfk_torus_2(n));
        println!("(2,{}) cable of unknot == T(2,{})", 2 * n + 1, 2 * n + 1);
    }
    for n in [-2i64, -4] {
        let cable = cablep_neg_hfk(&u, 2, n, None, true).unwrap();
        assert_eq!(cable.table, hfk_torus_2(n));
        println!("(2,{}) cable of unknot == T(2,{})", 2 * n + 1, 2 * n + 1);
    }

    // The projection parameter c' = 0 says the unknot filtration is trivial.
    let cable = cablep_hfk(&u, 3, 2, 0, true).unwrap();
    let t37 = hfk_torus_3_7();
    for (a, m, group) in t37.entries() {
        if cable.valid_range.contains(a) {
            assert_eq!(cable.table.get(a, m), Some(group));
        }
    }
    println!();
    println!("(3,7) cable of unknot, valid range {:?}:", cable.valid_range);
    print!("{}", render_grid(&cable.table));
}
