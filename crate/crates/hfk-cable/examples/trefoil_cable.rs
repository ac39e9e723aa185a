//! Compute the knot Floer table of the (2,7) cable of the trefoil, i.e. the
//! 2-stranded cable with twisting n = 3, and show the structure that the
//! construction guarantees: top rows matching the companion and a clean
//! Euler characteristic.

use hfk_cable::alexander::{cable_alexander, euler_poly};
use hfk_cable::cable::{cable2_hfk, top_groups};
use hfk_cable::render::render_grid;
use hfk_cable::torus::staircase_t2;

fn main() {
    let trefoil = staircase_t2(1).unwrap();
    let n = 3i64;
    let cable = cable2_hfk(&trefoil, n, false).unwrap();

    println!("(2,{}) cable of the trefoil:", 2 * n + 1);
    print!("{}", render_grid(&cable.table));
    println!();

    // The top two Alexander rows are forced by the companion's top row.
    let tops = top_groups(&trefoil, 2, n).unwrap();
    assert_eq!(cable.table.row(tops.alexander), tops.top);
    assert_eq!(cable.table.row(tops.next_alexander), tops.next);
    println!("top row    A = {}: {}", tops.alexander, tops.top);
    println!("next row   A = {}: {}", tops.next_alexander, tops.next);
    println!();

    // Euler characteristic agrees with the cabling formula for the
    // Alexander polynomial.
    let companion_poly = euler_poly(&trefoil.associated_graded().unwrap());
    let expected = cable_alexander(&companion_poly, 2, 2 * n + 1).unwrap();
    assert_eq!(euler_poly(&cable.table), expected);
    println!("Alexander polynomial: {}", expected);
}
