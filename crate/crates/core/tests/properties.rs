use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use wvg_control::engines::{pivot_count_enum, pivot_count_mitm, pivot_count_weight_dp};
use wvg_control::formula::{count_sat, count_subset_sum, e_minority_sat, minority_with_threshold, random_formula, suffix_counts};
use wvg_control::gadgets::{build_decrease, build_maintain, build_nonincrease, ControlInstance};
use wvg_control::verify::heavy_split_counts;
use wvg_control::{EngineBudget, ExactIndex, Game};

fn small_game() -> impl Strategy<Value = Game> {
    (proptest::collection::vec(0u64..=50, 1..=12), 1u64..=300).prop_map(|(w, q)| Game::from_u64(&w, q).unwrap())
}

fn budget() -> EngineBudget {
    EngineBudget::default()
}

fn beta(g: &Game, p: usize) -> ExactIndex {
    ExactIndex::for_game(pivot_count_enum(g, p, &budget()).unwrap(), g.num_players())
}

fn gadget(kind: u8, seed: u64) -> ControlInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let f = random_formula(&mut rng, 2, 2, 2).unwrap();
    match kind % 3 {
        0 => build_decrease(&f, 1, false).unwrap(),
        1 => build_nonincrease(&f, 1, false).unwrap(),
        _ => build_maintain(&f, 1, 3, false).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn engines_agree_and_stay_in_range(g in small_game(), p in any::<prop::sample::Index>()) {
        let p = p.index(g.num_players());
        let e = pivot_count_enum(&g, p, &budget()).unwrap();
        prop_assert_eq!(&e, &pivot_count_mitm(&g, p, &budget()).unwrap());
        prop_assert_eq!(&e, &pivot_count_weight_dp(&g, p, &budget()).unwrap());
        prop_assert!(e <= BigUint::from(1u8) << (g.num_players() - 1));
    }

    #[test]
    fn equal_weights_have_equal_counts(g in small_game()) {
        for a in 0..g.num_players() {
            for b in a + 1..g.num_players() {
                if g.weight(a) == g.weight(b) {
                    prop_assert_eq!(beta(&g, a), beta(&g, b));
                }
            }
        }
    }

    #[test]
    fn deleting_a_dummy_keeps_every_index(w in proptest::collection::vec(0u64..=20, 1..=10), q in 1u64..100) {
        let mut with_dummy = w.clone();
        with_dummy.push(0);
        let g = Game::from_u64(&with_dummy, q).unwrap();
        let dummy = w.len();
        prop_assert_eq!(pivot_count_enum(&g, dummy, &budget()).unwrap(), BigUint::default());
        let (h, remap) = g.delete_players(&[dummy]).unwrap();
        for p in 0..w.len() {
            prop_assert_eq!(beta(&g, p), beta(&h, remap.get(p).unwrap()));
        }
    }

    #[test]
    fn deletion_commutes(g in small_game(), mask1 in any::<u16>(), mask2 in any::<u16>()) {
        let n = g.num_players();
        let m1: Vec<usize> = (0..n).filter(|i| mask1 >> i & 1 == 1).collect();
        let (g1, r1) = g.delete_players(&m1).unwrap();
        let m2: Vec<usize> = (0..n).filter(|i| mask2 >> i & 1 == 1 && mask1 >> i & 1 == 0).collect();
        let m2_new: Vec<usize> = m2.iter().map(|&i| r1.get(i).unwrap()).collect();
        let (g12, r2) = g1.delete_players(&m2_new).unwrap();
        let both: Vec<usize> = m1.iter().chain(&m2).copied().collect();
        let (g_once, r_once) = g.delete_players(&both).unwrap();
        prop_assert_eq!(&g12, &g_once);
        let composed = r1.then(&r2);
        for i in 0..n {
            prop_assert_eq!(composed.get(i), r_once.get(i));
        }
    }

    #[test]
    fn index_order_matches_rationals(a in 0u64..1 << 20, e1 in 0u64..20, b in 0u64..1 << 20, e2 in 0u64..20) {
        let x = ExactIndex::new(a.into(), e1);
        let y = ExactIndex::new(b.into(), e2);
        let lhs = (a as u128) << e2;
        let rhs = (b as u128) << e1;
        prop_assert_eq!(x.cmp(&y), lhs.cmp(&rhs));
        prop_assert_eq!(x == y, lhs == rhs);
    }

    #[test]
    fn prefix_counts_sum_to_model_count(seed in any::<u64>(), n in 1usize..7, k in 0usize..7) {
        let k = k.min(n);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let f = random_formula(&mut rng, n, n.max(2), 3).unwrap();
        let total: u64 = suffix_counts(&f, k).unwrap().iter().sum();
        prop_assert_eq!(total, count_sat(&f).unwrap());
        if k >= 1 && k < n {
            let relaxed = minority_with_threshold(&f, k, 1 << (n - k)).unwrap();
            prop_assert!(relaxed.is_some());
            if let Some(w) = e_minority_sat(&f, k).unwrap() {
                prop_assert!(2 * w.satisfying_suffixes <= 1 << (n - k));
            }
        }
    }

    #[test]
    fn subset_sum_ignores_order_and_oversized_items(
        sizes in proptest::collection::vec(0u64..40, 0..14),
        target in 0u64..200,
        rot in any::<prop::sample::Index>(),
    ) {
        let big: Vec<BigUint> = sizes.iter().map(|&s| s.into()).collect();
        let t = BigUint::from(target);
        let base = count_subset_sum(&big, &t).unwrap();
        let mut rotated = big.clone();
        if !rotated.is_empty() {
            let r = rot.index(rotated.len());
            rotated.rotate_left(r);
        }
        rotated.reverse();
        prop_assert_eq!(&base, &count_subset_sum(&rotated, &t).unwrap());
        let mut extended = big.clone();
        extended.push(BigUint::from(sizes.iter().sum::<u64>() + target + 1));
        prop_assert_eq!(&base, &count_subset_sum(&extended, &t).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn layered_survives_deletions(kind in any::<u8>(), seed in any::<u64>(), picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..4)) {
        let inst = gadget(kind, seed);
        let mut victims: Vec<usize> = picks.iter().map(|i| 1 + i.index(inst.num_players() - 1)).collect();
        victims.sort_unstable();
        victims.dedup();
        let (smaller, _) = inst.delete(&victims).unwrap();
        let system = smaller.band_system().unwrap();
        let layered = system.breakdown().unwrap();
        prop_assert_eq!(layered, heavy_split_counts(&smaller).unwrap());
    }

    #[test]
    fn gadgets_keep_heavy_players_exclusive(kind in any::<u8>(), seed in any::<u64>()) {
        let inst = gadget(kind, seed);
        let system = inst.band_system().unwrap();
        let q = inst.game.quota();
        for (i, &a) in system.heavy().iter().enumerate() {
            for &b in &system.heavy()[i + 1..] {
                prop_assert!(inst.game.weight(a) + inst.game.weight(b) > *q);
            }
        }
        prop_assert!(system.light_total() + 1u8 < *q);
    }
}
