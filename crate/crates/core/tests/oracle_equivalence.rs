mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sdforge_core::analysis::{count_low_weights, is_self_dual, is_self_dual_by_gram, min_distance, InformationSets};

use common::{brute_force_distribution, brute_force_min_distance, building_up, random_self_dual};

fn assert_matches_oracle(g: &sdforge_core::BitMatrix) {
    let k = g.nrows();
    let dist = brute_force_distribution(g);
    let d = brute_force_min_distance(&dist);
    assert_eq!(min_distance(g).unwrap(), d);
    for w_max in 0..=2 * k as u32 {
        let counts = count_low_weights(g, w_max).unwrap();
        for w in 1..=w_max {
            assert_eq!(counts.get(&w).copied().unwrap_or(0), dist[w as usize], "k={k} w_max={w_max} w={w}");
        }
    }
    let sets = InformationSets::new(g).unwrap();
    for cap in 1..=2 * k as u32 + 1 {
        assert_eq!(sets.capped_min_weight(cap), (d.min(cap), d >= cap), "k={k} cap={cap}");
    }
}

#[test]
fn building_up_gives_self_dual_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for k in 1..=12 {
        let g = building_up(&mut rng, k);
        assert!(is_self_dual_by_gram(&g), "k={k}");
        let s = random_self_dual(&mut rng, k);
        assert!(is_self_dual(&s).unwrap() && is_self_dual_by_gram(&s), "k={k}");
    }
}

#[test]
fn enumeration_matches_brute_force_on_random_self_dual_codes() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5d);
    let mut distances = std::collections::BTreeSet::new();
    let mut codes = 0;
    for k in [4, 6, 8, 10] {
        for _ in 0..30 {
            let g = random_self_dual(&mut rng, k);
            assert_matches_oracle(&g);
            distances.insert(brute_force_min_distance(&brute_force_distribution(&g)));
            codes += 1;
        }
    }
    assert!(codes >= 100);
    // The sample must exercise more than the trivial distance.
    assert!(distances.len() >= 2, "{distances:?}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn enumeration_matches_brute_force(seed in any::<u64>(), k in 1usize..=9) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        assert_matches_oracle(&random_self_dual(&mut rng, k));
    }
}
