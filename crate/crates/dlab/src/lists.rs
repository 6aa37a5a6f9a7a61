//! Random list assignments used to exercise the list solvers.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use dlab_core::{Color, Graph, ListAssignment};

/// Lists of exactly `size` colours per element, drawn from a mix of shapes
/// that stress the labeller: one shared block, shifted blocks, arithmetic
/// progressions with step `d`, and sparse random sets.
pub fn adversarial_lists(g: &Graph, d: u32, size: usize, seed: u64) -> ListAssignment {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size_c = size as Color;
    let universe = 3 * size_c + 2 * d;
    let shape = rng.gen_range(0..4);
    let shared: Vec<Color> = (0..size_c).collect();
    (0..g.element_count())
        .map(|_| {
            let mut list: Vec<Color> = match (shape, rng.gen_range(0..3)) {
                (0, _) => shared.clone(),
                (1, _) => {
                    let start = rng.gen_range(0..=2 * d);
                    (start..start + size_c).collect()
                }
                (2, 0) => {
                    let start = rng.gen_range(0..d.max(1));
                    (0..size_c).map(|i| start + i * d.max(1)).collect()
                }
                _ => {
                    let mut pool: Vec<Color> = (0..universe).collect();
                    pool.shuffle(&mut rng);
                    pool.truncate(size);
                    pool
                }
            };
            list.sort_unstable();
            list
        })
        .collect()
}
