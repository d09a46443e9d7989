use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sdforge_core::groupring::{assemble, build_blocks, registry, sigma3_cayley, BlockPattern};
use sdforge_core::{CandidateVector, GroupCase};

fn random_candidates(seed: u64, n: usize) -> Vec<CandidateVector> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| CandidateVector::from_masked(rng.next_u64())).collect()
}

/// Every explicit block arrangement is the group matrix of its group case.
#[test]
fn explicit_layouts_equal_cayley_assembly() {
    let cases = [
        GroupCase::D12Case1,
        GroupCase::D12Case2,
        GroupCase::C12Case1,
        GroupCase::C12Case2,
        GroupCase::C6xC2,
        GroupCase::C3xC4,
        GroupCase::Dic12,
    ];
    for (i, case) in cases.into_iter().enumerate() {
        let layout = case.layout().arrangement();
        let group = case.group();
        for c in random_candidates(i as u64, 100) {
            for pattern in BlockPattern::NAMED {
                let blocks = build_blocks(c, &pattern);
                assert_eq!(assemble(&layout, &blocks), sigma3_cayley(&group, &blocks), "{case} {}", pattern.name);
            }
        }
    }
}

/// Only the first dihedral case transposes blocks; with symmetric blocks its
/// matrix is the group matrix.
#[test]
fn registered_matrices_against_group_matrices() {
    let candidates = random_candidates(99, 100);
    for k in registry() {
        let group = k.case.group();
        let symmetric = k.pattern == BlockPattern::ALL_REVCIRC;
        let mut differs = 0;
        for &c in &candidates {
            let expected = sigma3_cayley(&group, &build_blocks(c, &k.pattern));
            if k.tau3(c) != expected {
                differs += 1;
            }
        }
        if k.case == GroupCase::D12Case1 && !symmetric {
            assert!(differs > 90, "{}: {differs}", k.id);
        } else {
            assert_eq!(differs, 0, "{}", k.id);
        }
    }
}
