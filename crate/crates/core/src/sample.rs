//! Seeded random carriers and subsets for fuzzing the laws.
//!
//! Everything here is deterministic in the seed, so a failing instance
//! can be replayed from its seed alone.

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::carrier::{catalog, Semigroup, Subset};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A draw from `0..bound`.  The modulo bias is irrelevant at the bounds
/// used here (single digits against a 32-bit word).
pub fn draw(rng: &mut ChaCha8Rng, bound: u32) -> u32 {
    rng.next_u32() % bound.max(1)
}

/// A random subset: each element of a finite carrier is included with
/// probability 1/2; on the integer carriers a small window of values is
/// sampled sparsely.
pub fn random_subset(s: &Semigroup, rng: &mut ChaCha8Rng) -> Subset {
    match s.order() {
        Some(order) => {
            let idx: alloc::vec::Vec<u32> =
                (0..order as u32).filter(|_| rng.next_u32() & 1 == 1).collect();
            s.subset_from_indices(&idx).expect("indices in range")
        }
        None => {
            let candidates: alloc::vec::Vec<i64> =
                (-12..=14).filter(|&v| s.int_member(v)).collect();
            let picked: alloc::vec::Vec<i64> =
                candidates.into_iter().filter(|_| rng.next_u32() & 3 == 0).collect();
            s.subset_from_ints(&picked).expect("members checked")
        }
    }
}

/// A random finite carrier of order at most `max_order`: a catalog
/// builtin, a product of two builtins, or the carrier induced on the
/// closure of a random subset of a builtin.
pub fn sample_carrier(seed: u64, max_order: usize) -> Semigroup {
    let mut rng = rng_from_seed(seed);
    let base = catalog(max_order.max(2));
    let pick = |rng: &mut ChaCha8Rng, n: usize| rng.next_u64() as usize % n;
    match rng.next_u32() % 3 {
        0 => base[pick(&mut rng, base.len())].carrier.clone(),
        1 => {
            for _ in 0..16 {
                let a = &base[pick(&mut rng, base.len())].carrier;
                let b = &base[pick(&mut rng, base.len())].carrier;
                if a.order().unwrap() * b.order().unwrap() <= max_order {
                    return Semigroup::product(a, b).expect("orders checked");
                }
            }
            base[0].carrier.clone()
        }
        _ => {
            let parent = base[pick(&mut rng, base.len())].carrier.clone();
            let mut gens = random_subset(&parent, &mut rng);
            if gens.is_empty() {
                gens = parent.singleton(crate::carrier::Elem::Idx(0)).unwrap();
            }
            let closed = parent.subsemigroup_closure(&gens).expect("nonempty");
            if closed.len() < parent.order().unwrap() {
                parent.restriction(&closed).expect("closure is closed")
            } else {
                parent
            }
        }
    }
}
