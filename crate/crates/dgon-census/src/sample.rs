//! Seeded random diagrams for the sampled verification sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::index::Alphabet;

/// Uniform mask over the alphabet width.
pub fn random_mask<R: Rng>(rng: &mut R, alpha: &Alphabet) -> u64 {
    rng.gen::<u64>() & alpha.full_mask()
}

/// A maximal non-crossing diagram from a random greedy insertion order.
pub fn random_maximal<R: Rng>(rng: &mut R, alpha: &Alphabet) -> u64 {
    let mut order: Vec<usize> = (0..alpha.len()).collect();
    order.shuffle(rng);
    let mut x = 0u64;
    for i in order {
        if x & !alpha.compat_mask(i) == 0 {
            x |= 1 << i;
        }
    }
    debug_assert!(alpha.is_maximal_noncrossing(x));
    x
}

/// A random non-crossing diagram: a random submask of a random maximal
/// one.
pub fn random_noncrossing<R: Rng>(rng: &mut R, alpha: &Alphabet) -> u64 {
    random_maximal(rng, alpha) & rng.gen::<u64>()
}
