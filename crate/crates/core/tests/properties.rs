//! Randomised checks beyond the exhaustive ranges.

mod common;

use common::*;
use proptest::prelude::*;
use scottmap::flipclasses::{class_key, representative};
use scottmap::plabic::{g_inverse, g_map, parse_plabic, trip_perm};
use scottmap::scott::scott_perm;
use scottmap::strandmap::{build_strand_map, is_absolute, is_minimalist, parse_strand_map, shrink};
use scottmap::tiling::{tile_partitions, Tile};
use scottmap::{Permutation, Tiling};

/// Random tilings of 4..=20-gons: diagonals picked greedily from a random
/// sequence, skipping any that cross an earlier pick.
fn tilings() -> impl Strategy<Value = (u32, Vec<(u32, u32)>)> {
    (4u32..=20).prop_flat_map(|n| {
        let ds = all_diagonals(n);
        proptest::collection::vec(0..ds.len(), 0..(n as usize)).prop_map(move |picks| {
            let mut chosen: Vec<(u32, u32)> = Vec::new();
            for k in picks {
                let d = ds[k];
                if !chosen.contains(&d) && chosen.iter().all(|&c| !cross(c, d)) {
                    chosen.push(d);
                }
            }
            (n, chosen)
        })
    })
}

fn permutations() -> impl Strategy<Value = Permutation> {
    (1u32..=12)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<u32>>()).prop_shuffle())
        .prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn scott_agrees_with_oracle((n, d) in tilings()) {
        let t = Tiling::new(n, d.iter().copied()).unwrap();
        let sigma = scott_perm(&t);
        prop_assert_eq!(sigma.images().to_vec(), oracle_scott(n, &d));
        for i in 1..=n {
            prop_assert_ne!(sigma.apply(i), i);
            prop_assert_ne!(sigma.apply(i), i % n + 1);
        }
    }

    #[test]
    fn bijections_hold((n, d) in tilings()) {
        let t = Tiling::new(n, d.iter().copied()).unwrap();
        let m = build_strand_map(&t);
        prop_assert!(is_absolute(&m));
        prop_assert!(is_minimalist(&m));
        prop_assert_eq!(shrink(&m).unwrap(), t.clone());
        let g = g_map(&t);
        prop_assert_eq!(g_inverse(&g).unwrap(), t.clone());
        prop_assert_eq!(trip_perm(&g).unwrap(), scott_perm(&t));
    }

    #[test]
    fn json_round_trips((n, d) in tilings()) {
        let t = Tiling::new(n, d.iter().copied()).unwrap();
        let back: Tiling = serde_json::from_str(&serde_json::to_string(&t).unwrap()).unwrap();
        prop_assert_eq!(&back, &t);
        let m = build_strand_map(&t);
        prop_assert_eq!(parse_strand_map(&m.to_json()).unwrap(), m);
        let g = g_map(&t);
        prop_assert_eq!(parse_plabic(&g.to_json()).unwrap(), g);
        prop_assert_eq!(Tiling::parse(n, &t.diagonal_list()).unwrap(), t);
    }

    #[test]
    fn flips_invert((n, d) in tilings(), pick in any::<prop::sample::Index>()) {
        let t = Tiling::new(n, d.iter().copied()).unwrap();
        let flippable = t.flippable_diagonals();
        prop_assume!(!flippable.is_empty());
        let e = flippable[pick.index(flippable.len())];
        let f = t.flip(&e).unwrap();
        prop_assert_eq!(f.num_diagonals(), t.num_diagonals());
        prop_assert_eq!(class_key(&f), class_key(&t));
        prop_assert_eq!(scott_perm(&f), scott_perm(&t));
        let new = *f.diagonals().iter().find(|x| !t.contains(x)).unwrap();
        prop_assert_eq!(f.flip(&new).unwrap(), t);
    }

    #[test]
    fn representatives_share_key_and_permutation((n, d) in tilings()) {
        let t = Tiling::new(n, d.iter().copied()).unwrap();
        let r = representative(&t);
        prop_assert_eq!(class_key(&r), class_key(&t));
        prop_assert_eq!(scott_perm(&r), scott_perm(&t));
    }

    #[test]
    fn tile_intervals_partition((n, d) in tilings()) {
        let t = Tiling::new(n, d.iter().copied()).unwrap();
        for q in t.tiles() {
            let (ip, jp) = tile_partitions(&q, n);
            for parts in [ip, jp] {
                prop_assert_eq!(parts.len(), q.len());
                let mut all: Vec<u32> = parts.concat();
                all.sort_unstable();
                prop_assert_eq!(all, (1..=n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn random_tiles_partition(n in 3u32..30, mask in any::<u32>()) {
        let mut v: Vec<u32> = (1..=n).filter(|i| mask & (1 << (i % 32)) != 0).collect();
        if v.len() < 3 { v = vec![1, 2, n]; }
        let q = Tile::new(v).unwrap();
        let (ip, _) = tile_partitions(&q, n);
        let mut all = ip.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (1..=n).collect::<Vec<_>>());
    }

    #[test]
    fn permutation_laws(p in permutations()) {
        let n = p.n();
        let id = Permutation::identity(n);
        prop_assert_eq!(p.compose(&p.inverse()).unwrap(), id.clone());
        prop_assert_eq!(p.inverse().compose(&p).unwrap(), id);
        let from_cycles = Permutation::from_cycles(n, &p.cycles()).unwrap();
        prop_assert_eq!(from_cycles, p.clone());
        let total: usize = p.cycles().iter().map(|c| c.len()).sum();
        prop_assert_eq!(total + p.fixed_points().len(), n as usize);
    }
}
