//! Randomized invariants for the integer linear algebra core and the
//! complex/cable layers.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use hfk_cable::alexander::{cable_alexander, euler_poly, torus_alexander, LaurentPoly};
use hfk_cable::cable::{cable2_hfk, cablep_hfk, threshold_c, top_groups};
use hfk_cable::homalg::{chain_homology, smith_diagonal, smith_normal_form, IntMatrix};
use hfk_cable::io::{parse_complex, parse_table, write_complex, write_table};
use hfk_cable::torus::{hfk_torus_2, staircase_t2};

fn sparse_matrix() -> impl Strategy<Value = IntMatrix> {
    (0usize..=6, 0usize..=6).prop_flat_map(|(rows, cols)| {
        let cells = rows * cols;
        proptest::collection::vec(-9i64..=9, cells..=cells).prop_map(move |entries| {
            IntMatrix::from_triplets(
                rows,
                cols,
                entries.iter().enumerate().filter(|(_, &e)| e != 0).map(|(idx, &e)| {
                    (idx / cols.max(1), idx % cols.max(1), BigInt::from(e))
                }),
            )
        })
    })
}

proptest! {
    // U * M * V is the diagonal, the transforms are unimodular, and the
    // diagonal entries divide in order.
    #[test]
    fn snf_factorization(m in sparse_matrix()) {
        let snf = smith_normal_form(&m);
        prop_assert!(snf.d.is_diagonal());
        prop_assert_eq!(snf.u.mul(&m).mul(&snf.v), snf.d.clone());
        prop_assert_eq!(snf.u.determinant().abs(), BigInt::one());
        prop_assert_eq!(snf.v.determinant().abs(), BigInt::one());
        prop_assert_eq!(
            snf.v.mul(&snf.v_inv),
            IntMatrix::identity(snf.v.rows())
        );

        let diag = snf.d.diagonal();
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                prop_assert!(!w[0].is_zero());
                prop_assert!((&w[1] % &w[0]).is_zero(), "{} does not divide {}", w[0], w[1]);
            }
        }
        for e in &diag {
            prop_assert!(!e.is_negative());
        }
        prop_assert_eq!(diag, smith_diagonal(&m));
    }

    // Rank is invariant under transposition, and the cokernel read off the
    // diagonal agrees with the one computed through the homology routine.
    #[test]
    fn snf_rank_and_cokernel(m in sparse_matrix()) {
        let rank = smith_diagonal(&m).iter().filter(|e| !e.is_zero()).count();
        let rank_t = smith_diagonal(&m.transpose()).iter().filter(|e| !e.is_zero()).count();
        prop_assert_eq!(rank, rank_t);

        // 0 <- Z^rows <- Z^cols, boundary m: homology at the middle is coker(m).
        let out = IntMatrix::zero(0, m.rows());
        let h = chain_homology(&m, &out).unwrap();
        prop_assert_eq!(h.free_rank(), m.rows() - rank);
        let nontrivial: Vec<BigInt> = smith_diagonal(&m)
            .into_iter()
            .filter(|e| !e.is_zero() && !e.is_one())
            .collect();
        prop_assert_eq!(h.torsion(), &nontrivial[..]);
    }

    // Staircase complexes: axioms hold, the graded object is the closed-form
    // table, and total homology is a single Z at maslov zero.
    #[test]
    fn staircase_invariants(m in 1i64..=8) {
        for m in [m, -m] {
            let cx = staircase_t2(m).unwrap();
            prop_assert!(cx.validate().is_valid());
            prop_assert_eq!(cx.len() as i64, 2 * m.abs() + 1);
            let graded = cx.associated_graded().unwrap();
            let torus_param = if m > 0 { m } else { m - 1 };
            prop_assert_eq!(graded, hfk_torus_2(torus_param));
            let h = cx.total_homology().unwrap();
            prop_assert_eq!(h.len(), 1);
            prop_assert!(h.get(0).is_some());
        }
    }

    // A complex equals its double mirror, and mirroring negates the graded
    // table entry-wise.
    #[test]
    fn mirror_involution(m in 1i64..=6) {
        let cx = staircase_t2(m).unwrap();
        prop_assert_eq!(cx.mirror().mirror(), cx.clone());

        let graded = cx.associated_graded().unwrap();
        let mirrored = cx.mirror().associated_graded().unwrap();
        for (a, mas, group) in graded.entries() {
            prop_assert_eq!(mirrored.get(-a, -mas), Some(group));
        }
        prop_assert_eq!(graded.len(), mirrored.len());
    }

    // Filtration level j splits the generators between subcomplex and
    // quotient; every edge lands in exactly one side or crosses.
    #[test]
    fn filtration_partitions_generators(m in 1i64..=8, j in -9i64..=9) {
        for m in [m, -m] {
            let cx = staircase_t2(m).unwrap();
            let sub = cx.filtration_subcomplex(j);
            let quot = cx.quotient_complex(j);
            prop_assert_eq!(sub.len() + quot.len(), cx.len());
            for g in sub.generators() {
                prop_assert!(g.alexander <= j);
            }
            for g in quot.generators() {
                prop_assert!(g.alexander > j);
            }
            let crossing = cx
                .differential()
                .iter()
                .filter(|e| {
                    cx.generator(&e.from).unwrap().alexander > j
                        && cx.generator(&e.to).unwrap().alexander <= j
                })
                .count();
            prop_assert_eq!(
                sub.differential().len() + quot.differential().len() + crossing,
                cx.differential().len()
            );
        }
    }

    // Euler characteristic bookkeeping: the alternating generator count per
    // alexander level equals the signed rank of the graded table row, and
    // their polynomial total is the torus Alexander polynomial.
    #[test]
    fn euler_counts_match(m in 1i64..=8) {
        let cx = staircase_t2(m).unwrap();
        let graded = cx.associated_graded().unwrap();
        let poly = euler_poly(&graded);

        let mut counts = LaurentPoly::zero();
        for g in cx.generators() {
            let sign = if g.maslov.rem_euclid(2) == 0 { 1 } else { -1 };
            counts.add_term(g.alexander, BigInt::from(sign));
        }
        prop_assert_eq!(counts, poly.clone());
        prop_assert_eq!(poly, torus_alexander(2, 2 * m + 1).unwrap());
    }

    // Serialization is a byte-stable involution on complexes and tables.
    #[test]
    fn json_roundtrip_stability(m in 1i64..=6, n in 1i64..=15) {
        let cx = staircase_t2(m).unwrap();
        let json = write_complex(&cx);
        let back = parse_complex(&json).unwrap();
        prop_assert_eq!(&back, &cx);
        prop_assert_eq!(write_complex(&back), json);

        let table = cable2_hfk(&cx, n, true).unwrap().table;
        let doc = write_table(&table, Some("roundtrip"));
        let saved = parse_table(&doc).unwrap();
        prop_assert_eq!(&saved.table, &table);
        prop_assert_eq!(write_table(&saved.table, Some("roundtrip")), doc);
    }

    // Cable tables of 2-stranded cables with enough twisting: symmetric,
    // correct degree, correct Euler characteristic, extreme rows from the
    // companion.
    #[test]
    fn cable2_structure(m in -6i64..=6, extra in 0i64..=10) {
        prop_assume!(m != 0);
        let d = m.abs();
        let n = 2 * d + extra;
        let cx = staircase_t2(m).unwrap();
        let cable = cable2_hfk(&cx, n, false).unwrap();
        prop_assert!(cable.warnings.is_empty());
        cable.table.symmetry_check().unwrap();
        prop_assert_eq!(cable.table.degree().unwrap(), 2 * d + n);

        let delta = euler_poly(&cx.associated_graded().unwrap());
        prop_assert_eq!(
            euler_poly(&cable.table),
            cable_alexander(&delta, 2, 2 * n + 1).unwrap()
        );

        let tops = top_groups(&cx, 2, n).unwrap();
        prop_assert_eq!(cable.table.row(tops.alexander), tops.top);
        prop_assert_eq!(cable.table.row(tops.next_alexander), tops.next);
    }

    // Partial tables with higher stranding: every entry sits above the
    // threshold, and the top row still matches the companion.
    #[test]
    fn cablep_partial_tables(m in 1i64..=4, p in 3i64..=5, n in 3i64..=10, c_prime in 0i64..=2) {
        let cx = staircase_t2(m).unwrap();
        let c = threshold_c(m, p, n, c_prime);
        let cable = cablep_hfk(&cx, p, n, c_prime, true).unwrap();
        for (a, _, _) in cable.table.entries() {
            prop_assert!(a > c, "entry at alexander {} not above threshold {}", a, c);
        }
        let tops = top_groups(&cx, p, n).unwrap();
        prop_assert_eq!(cable.table.row(tops.alexander), tops.top);
        prop_assert_eq!(cable.table.row(tops.next_alexander), tops.next);
    }
}

// A deterministic spot check that the proptest plumbing exercises honest
// inputs: one known matrix with nontrivial torsion.
#[test]
fn snf_known_matrix() {
    let m = IntMatrix::from_triplets(
        2,
        2,
        [(0, 0, BigInt::from(2)), (1, 1, BigInt::from(4))],
    );
    let diag = smith_diagonal(&m);
    assert_eq!(diag, vec![BigInt::from(2), BigInt::from(4)]);
}
