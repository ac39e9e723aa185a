//! Recover absolute gradings from holomorphic disk counts. Each disk datum
//! relates the gradings of its two endpoints; a single anchored generator
//! then pins the whole assignment.

use hfk_cable::torus::{propagate_gradings, t2_spiral_disks, t37_disks};

fn main() {
    // Spiral diagram for T(2,7): gradings of all 7 generators follow from
    // the disks out of the anchor x0.
    let (ids, disks, anchor) = t2_spiral_disks(3);
    let gradings = propagate_gradings(&ids, &disks, &anchor).unwrap();
    println!("T(2,7) spiral ({} disks):", disks.len());
    for id in &ids {
        let g = &gradings[id];
        println!(
            "  {:3}  maslov {:2}  filt ({}, {})",
            id,
            g.maslov.unwrap(),
            g.filt_z,
            g.filt_zprime
        );
    }
    println!();

    // T(3,7) from the cabled diagram of the unknot. Some disks have no
    // Maslov index recorded, so part of the assignment stays unknown; the
    // filtration levels still propagate everywhere.
    let (ids, disks, anchor) = t37_disks();
    let gradings = propagate_gradings(&ids, &disks, &anchor).unwrap();
    println!("T(3,7) cabled diagram ({} disks):", disks.len());
    for id in &ids {
        let g = &gradings[id];
        let m = g
            .maslov
            .map(|m| m.to_string())
            .unwrap_or_else(|| "?".into());
        println!("  {:3}  maslov {:>2}  filt' {}", id, m, g.filt_zprime);
    }
}
