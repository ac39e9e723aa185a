//! Walk the filtration of a staircase complex level by level: sublevel
//! homology, quotient homology, and how generator counts split.

use hfk_cable::torus::staircase_t2;

fn main() {
    let m = 3i64;
    let cx = staircase_t2(m).unwrap();
    println!("{}: {} generators", cx.name(), cx.len());
    println!();

    for j in -m - 1..=m {
        let sub = cx.filtration_subcomplex(j);
        let quot = cx.quotient_complex(j);
        assert_eq!(sub.len() + quot.len(), cx.len());
        println!(
            "j = {:2}   sub {} gens, H = {:12}   quotient {} gens, H = {}",
            j,
            sub.len(),
            cx.filtration_homology(j).unwrap().to_string(),
            quot.len(),
            quot.total_homology().unwrap()
        );
    }
}
