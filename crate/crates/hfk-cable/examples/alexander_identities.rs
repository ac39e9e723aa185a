//! Laurent polynomial identities: torus knot Alexander polynomials, the
//! cabling substitution formula, and the Euler characteristic of a knot
//! Floer table.

use hfk_cable::alexander::{cable_alexander, euler_poly, torus_alexander};
use hfk_cable::cable::cable2_hfk;
use hfk_cable::torus::{hfk_torus_2, hfk_torus_3_7, staircase_t2};

fn main() {
    for (p, q) in [(2i64, 3i64), (2, 5), (3, 7), (2, -7)] {
        let poly = torus_alexander(p, q).unwrap();
        assert!(poly.is_symmetric());
        assert_eq!(poly.eval_at_one(), 1.into());
        println!("Delta T({},{}) = {}", p, q, poly);
    }
    println!();

    // chi of the graded object recovers the Alexander polynomial.
    assert_eq!(
        euler_poly(&hfk_torus_2(2)),
        torus_alexander(2, 5).unwrap()
    );
    assert_eq!(euler_poly(&hfk_torus_3_7()), torus_alexander(3, 7).unwrap());
    println!("euler_poly(T(2,5) table)  == Delta T(2,5)");
    println!("euler_poly(T(3,7) table)  == Delta T(3,7)");
    println!();

    // Cabling substitutes t^p into the companion polynomial and multiplies
    // by the torus factor. The table built by the cabling routine has the
    // same Euler characteristic.
    let trefoil = staircase_t2(1).unwrap();
    let n = 4i64;
    let cable = cable2_hfk(&trefoil, n, false).unwrap();
    let companion = euler_poly(&trefoil.associated_graded().unwrap());
    let predicted = cable_alexander(&companion, 2, 2 * n + 1).unwrap();
    assert_eq!(euler_poly(&cable.table), predicted);
    println!("Delta of (2,{}) cable of trefoil = {}", 2 * n + 1, predicted);
}
