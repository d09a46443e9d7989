mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sdforge_core::analysis::{is_self_dual, is_self_dual_by_gram, redundancy_part};
use sdforge_core::BitMatrix;

use common::{random_matrix, random_self_dual};

/// `A * A^T = I` agrees with `G * G^T = 0` and full rank on 1000 matrices:
/// orthogonal ones, single-bit perturbations of them, and uniform ones.
#[test]
fn orthogonality_matches_gram_criterion() {
    let mut rng = ChaCha8Rng::seed_from_u64(36);
    let (mut yes, mut no) = (0, 0);
    for i in 0..1000 {
        let a = match i % 3 {
            0 => redundancy_part(&random_self_dual(&mut rng, 36)).unwrap(),
            1 => {
                let mut a = redundancy_part(&random_self_dual(&mut rng, 36)).unwrap();
                let (r, c) = (rng.gen_range(0..36), rng.gen_range(0..36));
                a.set(r, c, !a.get(r, c));
                a
            }
            _ => random_matrix(&mut rng, 36, 36),
        };
        let g = BitMatrix::identity(36).hconcat(&a).unwrap();
        let by_a = is_self_dual(&g).unwrap();
        assert_eq!(by_a, is_self_dual_by_gram(&g), "matrix {i}");
        if by_a {
            yes += 1;
        } else {
            no += 1;
        }
    }
    assert!(yes >= 300 && no >= 300, "yes={yes} no={no}");
}
