mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;
use vkh::coloring::{boundary_states, coloring_of, signatures};
use vkh::diagram::{trace_faces, Diagram};
use vkh::khovanov::{
    build_cube_general, build_cube_source_sink, graded_euler_characteristic, khovanov, BuilderKind,
    EdgeMap,
};
use vkh::lee::{rasmussen, rasmussen_negative, rasmussen_positive};
use vkh::linalg::{rank, IntMatrix};
use vkh::oracle::bracket_oracle;
use vkh::transforms::{
    alternatize_diagram, apply_moves, dagger, genus_report, reverse, star, star_dagger,
    supporting_genus, MoveKind,
};

fn neg(p: (i64, i64)) -> (i64, i64) {
    (-p.1, -p.0)
}

fn colorable(seed: u64, n: usize, classical: bool) -> Diagram {
    let mut r = common::rng(seed);
    if classical {
        common::random_braid(&mut r, n)
    } else {
        common::random_colorable(&mut r, n)
    }
}

fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        })
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = BigRational::one() / m[r][c].clone();
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone() * inv.clone();
                for (v, p) in row.iter_mut().zip(&pivot).skip(c) {
                    *v -= p.clone() * f.clone();
                }
            }
        }
        r += 1;
    }
    r
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn euler_characteristic_is_the_state_sum(seed in any::<u64>(), n in 1usize..=5) {
        let d = common::random_word(&mut common::rng(seed), n);
        let kh = khovanov(&d, BuilderKind::General).unwrap();
        prop_assert_eq!(graded_euler_characteristic(&kh), bracket_oracle(&d).unwrap());
    }

    #[test]
    fn builders_agree_on_colorable(seed in any::<u64>(), n in 1usize..=6, classical in any::<bool>()) {
        let d = colorable(seed, n, classical);
        let ss = build_cube_source_sink(&d).unwrap();
        let gen = build_cube_general(&d).unwrap();
        prop_assert!(!ss.has_single_cycle());
        prop_assert!(gen.edges().all(|e| e.map != EdgeMap::SingleCycle));
        prop_assert_eq!(
            khovanov(&d, BuilderKind::SourceSink).unwrap(),
            khovanov(&d, BuilderKind::General).unwrap()
        );
    }

    #[test]
    fn mirror_relations(seed in any::<u64>(), n in 1usize..=6, classical in any::<bool>()) {
        let d = colorable(seed, n, classical);
        let p = signatures(&d).unwrap().sorted();
        prop_assert_eq!(signatures(&reverse(&d)).unwrap().sorted(), p);
        prop_assert_eq!(signatures(&star(&d)).unwrap().sorted(), neg(p));
        prop_assert_eq!(signatures(&dagger(&d)).unwrap().sorted(), neg(p));
        prop_assert_eq!(signatures(&star_dagger(&d)).unwrap().sorted(), p);
        let kh = khovanov(&d, BuilderKind::SourceSink).unwrap();
        prop_assert_eq!(khovanov(&star(&d), BuilderKind::SourceSink).unwrap(), kh.mirrored());
        prop_assert_eq!(khovanov(&dagger(&d), BuilderKind::SourceSink).unwrap(), kh.mirrored());
        prop_assert_eq!(khovanov(&reverse(&d), BuilderKind::SourceSink).unwrap(), kh);
    }

    #[test]
    fn moves_act_on_sign_and_incidence(seed in any::<u64>(), n in 1usize..=6, pick in any::<u64>()) {
        let d = colorable(seed, n, false);
        let (_, c) = coloring_of(&d).unwrap();
        let labels: Vec<u32> = d
            .crossings()
            .iter()
            .enumerate()
            .filter(|(i, _)| pick >> (i % 64) & 1 == 1)
            .map(|(_, x)| x.label)
            .collect();
        for (mv, flips_eps, flips_eta) in [
            (MoveKind::Sc, true, false),
            (MoveKind::Or, false, true),
            (MoveKind::Cc, true, true),
        ] {
            let e = apply_moves(&d, mv, &labels).unwrap();
            let (_, c2) = coloring_of(&e).unwrap();
            let mut swap = None;
            for (k, x) in d.crossings().iter().enumerate() {
                let moved = labels.contains(&x.label);
                let y = &e.crossings()[e.crossing_index(x.label).unwrap()];
                let want_eps = if moved && flips_eps { -x.sign } else { x.sign };
                prop_assert_eq!(y.sign, want_eps);
                let want_eta = if moved && flips_eta { -c.eta[k] } else { c.eta[k] };
                let k2 = e.crossing_index(x.label).unwrap();
                // the normalized coloring of the result may be the swapped one
                let s = *swap.get_or_insert(c2.eta[k2] * want_eta);
                prop_assert_eq!(c2.eta[k2], s * want_eta);
            }
        }
    }

    #[test]
    fn boundary_states_cover_the_surface(seed in any::<u64>(), n in 1usize..=7) {
        let d = colorable(seed, n, false);
        let (s, c) = coloring_of(&d).unwrap();
        let (a, b) = boundary_states(&d, &c).unwrap();
        prop_assert_eq!(a.circle_count() + b.circle_count(), d.n() + 2 - 2 * s.genus);
    }

    #[test]
    fn alternatization(seed in any::<u64>(), n in 1usize..=6, classical in any::<bool>()) {
        let d = colorable(seed, n, classical);
        let alt = alternatize_diagram(&d).unwrap();
        prop_assert!(alt.is_alternating());
        let (lo, hi) = signatures(&alt).unwrap().sorted();
        let g = supporting_genus(&alt).unwrap() as i64;
        prop_assert_eq!(hi - lo, 2 * g);
        prop_assert_eq!(
            khovanov(&alt, BuilderKind::SourceSink).unwrap().total_dim(),
            khovanov(&d, BuilderKind::SourceSink).unwrap().total_dim()
        );
        prop_assert!(genus_report(&d).unwrap().verdict);
        if classical {
            prop_assert_eq!(trace_faces(&d).unwrap().genus, 0);
        }
    }

    #[test]
    fn rasmussen_bounds(seed in any::<u64>(), n in 1usize..=6, classical in any::<bool>()) {
        let d = colorable(seed, n, classical);
        prop_assume!(d.components().len() == 1);
        let s = rasmussen(&d).unwrap().s;
        prop_assert_eq!(rasmussen(&star(&d)).unwrap().s, -s);
        if d.is_alternating() {
            let (lo, hi) = signatures(&d).unwrap().sorted();
            prop_assert!(-hi <= s && s <= -lo, "s = {s}, pair ({lo}, {hi})");
        }
        if d.n_minus() == 0 {
            prop_assert_eq!(rasmussen_positive(&d).unwrap(), s);
        }
        if d.n_plus() == 0 {
            prop_assert_eq!(rasmussen_negative(&d).unwrap(), s);
        }
    }

    #[test]
    fn rank_matches_rational_elimination(
        rows in prop::collection::vec(prop::collection::vec(-4i64..=4, 5), 0..6)
    ) {
        let dense: Vec<Vec<i64>> = rows;
        let m = IntMatrix::from_dense(&dense);
        prop_assert_eq!(rank(&m), rational_rank(&dense));
    }
}
