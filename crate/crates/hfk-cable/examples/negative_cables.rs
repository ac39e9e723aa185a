//! Negative twisting: the (2,-13) cable of the trefoil. With 2 strands the
//! partial table closes up under the symmetry reflection, so the result
//! covers every Alexander grading.

use hfk_cable::cable::{cable_hfk, CableParams};
use hfk_cable::render::render_cable_grid;
use hfk_cable::torus::staircase_t2;

fn main() {
    let trefoil = staircase_t2(1).unwrap();
    let params = CableParams::new(2, -7);
    let cable = cable_hfk(&trefoil, &params).unwrap();

    print!("{}", render_cable_grid(&cable));
    println!();

    // Symmetry of the finished table, entry by entry.
    cable.table.symmetry_check().unwrap();
    println!("symmetry check passed on {} entries", cable.table.len());
}
