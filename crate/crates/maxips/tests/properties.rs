//! Randomized property tests over the library invariants.

use num_traits::Zero;
use proptest::prelude::*;

use maxips::canon::{isomorphic, normal_form, CanonicalForm, OrthoMatrix};
use maxips::exactmath::{
    is_perfect_square, isqrt, perfect_square_root, squarefree_part, sum_of_two_squares, tau,
};
use maxips::extension::{anning_erdos_bound, extension_points, is_maximal};
use maxips::fileio::{parse_pointset, serialize_pointset};
use maxips::geometry::{dist2, scale, GridPoint, PointSet};
use maxips::heronian::{embeddings, heronian_triangles, HeronTriangle};
use maxips::Int;

fn int(v: i64) -> Int {
    Int::from(v)
}

fn arb_point() -> impl Strategy<Value = (i64, i64)> {
    (-1000i64..=1000, -1000i64..=1000)
}

fn arb_set() -> impl Strategy<Value = PointSet> {
    proptest::collection::btree_set(arb_point(), 1..8).prop_map(|pts| {
        PointSet::new(pts.into_iter().map(|(x, y)| GridPoint::new(x, y)).collect()).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn isqrt_is_floor_sqrt(n in 0u64..=u64::MAX / 4) {
        let r = isqrt(&Int::from(n)).unwrap();
        prop_assert!(&r * &r <= Int::from(n));
        let r1 = &r + 1u32;
        prop_assert!(&r1 * &r1 > Int::from(n));
    }

    #[test]
    fn perfect_square_root_agrees(n in 0i64..=1_000_000) {
        let got = perfect_square_root(&int(n));
        prop_assert_eq!(got.is_some(), is_perfect_square(&int(n)));
        if let Some(s) = got {
            prop_assert_eq!(&s * &s, int(n));
        }
    }

    #[test]
    fn squarefree_part_divides(n in 1i64..=100_000) {
        let k = squarefree_part(&int(n)).unwrap();
        // n / k is a perfect square.
        prop_assert!((&int(n) % &k).is_zero());
        prop_assert!(is_perfect_square(&(int(n) / &k)));
    }

    #[test]
    fn sum_of_two_squares_members(n in 0i64..=200_000) {
        let reps = sum_of_two_squares(&int(n)).unwrap();
        for (x, y) in &reps {
            prop_assert_eq!(x * x + y * y, int(n));
        }
        // Representation count of 4(d_1(n) - d_3(n)) is bounded by 4 tau(n).
        if n > 0 {
            prop_assert!(Int::from(reps.len()) <= int(4) * tau(&int(n)).unwrap());
        }
    }

    #[test]
    fn normal_form_is_isometry_invariant(s in arb_set(), m in 0usize..8, tx in -500i64..=500, ty in -500i64..=500) {
        let mat = &OrthoMatrix::ALL[m];
        let moved = PointSet::new(
            s.iter()
                .map(|p| {
                    let q = mat.apply(p);
                    GridPoint::new(q.x + int(tx), q.y + int(ty))
                })
                .collect(),
        )
        .unwrap();
        prop_assert_eq!(normal_form(&s).unwrap(), normal_form(&moved).unwrap());
        prop_assert!(isomorphic(&s, &moved).unwrap());
    }

    #[test]
    fn normal_form_is_idempotent(s in arb_set()) {
        let nf = normal_form(&s).unwrap();
        prop_assert_eq!(normal_form(&nf.to_point_set()).unwrap(), nf);
    }

    #[test]
    fn canonical_serialization_round_trips(s in arb_set()) {
        let nf = normal_form(&s).unwrap();
        prop_assert_eq!(CanonicalForm::parse(&nf.serialize()).unwrap(), nf);
    }

    #[test]
    fn pointset_file_round_trips(s in arb_set()) {
        prop_assert_eq!(parse_pointset(&serialize_pointset(&s)).unwrap(), s);
    }

    #[test]
    fn scaling_preserves_structure(s in arb_set(), lambda in 1i64..=5) {
        let scaled = scale(&s, &int(lambda)).unwrap();
        prop_assert_eq!(scaled.len(), s.len());
        let max_d2 = |s: &PointSet| {
            let pts = s.points();
            let mut best = int(0);
            for i in 0..pts.len() {
                for j in i + 1..pts.len() {
                    best = best.max(dist2(&pts[i], &pts[j]));
                }
            }
            best
        };
        prop_assert_eq!(max_d2(&scaled), max_d2(&s) * int(lambda) * int(lambda));
    }
}

proptest! {
    // Heavier geometric properties with fewer cases.
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn embeddings_realize_the_triangle(d in 3u64..=40) {
        for t in heronian_triangles(&Int::from(d)).unwrap() {
            for e in embeddings(&t, true).unwrap() {
                let mut sides = e.side_lengths();
                sides.sort();
                let mut expect = [t.c().clone(), t.b().clone(), t.a().clone()];
                expect.sort();
                prop_assert_eq!(sides, expect);
            }
        }
    }

    #[test]
    fn extension_points_extend_integrally(d in 3u64..=30) {
        for t in heronian_triangles(&Int::from(d)).unwrap() {
            for e in embeddings(&t, true).unwrap() {
                let ext = extension_points(&e).unwrap();
                prop_assert!(Int::from(ext.len()) <= anning_erdos_bound(&int(3)));
                for p in &ext {
                    for v in e.points() {
                        let d2 = dist2(p, v);
                        prop_assert!(perfect_square_root(&d2).is_some());
                    }
                }
            }
        }
    }
}

#[test]
fn maximal_outputs_admit_no_extension() {
    // Spot check: every maximal clique output from a small seed passes
    // is_maximal, independent of which seed triangle is used to re-test it.
    let t = HeronTriangle::new(25, 20, 15).unwrap();
    for e in embeddings(&t, true).unwrap() {
        let g = maxips::cliques::build_graph(&e).unwrap();
        for m in maxips::cliques::maximal_cliques(&g).unwrap() {
            assert!(is_maximal(&m.points).unwrap());
        }
    }
}
