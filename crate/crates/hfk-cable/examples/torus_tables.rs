//! Print the built-in knot Floer tables for the (2, 2n+1) torus knots and
//! for T(3,7), and check them against the staircase models.

use hfk_cable::render::render_grid;
use hfk_cable::torus::{hfk_torus_2, hfk_torus_3_7, staircase_t2};

fn main() {
    for n in [1i64, 2, -2] {
        let table = hfk_torus_2(n);
        println!("T(2,{}):", 2 * n + 1);
        print!("{}", render_grid(&table));

        // The staircase complex recovers the same table as its graded object.
        let stairs = staircase_t2(n).unwrap();
        assert_eq!(stairs.associated_graded().unwrap(), table);
        println!();
    }

    println!("T(3,7):");
    print!("{}", render_grid(&hfk_torus_3_7()));
}
