//! Cycle detection and state-space exploration over multipliers.
//!
//! On a finite carrier the pair (multiplication-by-n map, [n]A) can take
//! only finitely many values, and its successor in n depends on nothing
//! else. Storing every state until the first repeat yields the eventual
//! period: a question asked "for all n" is settled by checking n up to
//! tail + cycle.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::carrier::Semigroup;
use crate::setalg::sumset_bits;

/// All distinct states of a successor sequence, in order of first
/// appearance. `states[i]` is the state at n = i + 1; the sequence
/// repeats from index `tail` onwards with period `cycle`.
#[derive(Debug, Clone)]
pub struct Orbit<S> {
    pub states: Vec<S>,
    pub tail: usize,
    pub cycle: usize,
}

impl<S> Orbit<S> {
    /// The state at any n >= 1, folding n into the eventual cycle.
    pub fn state_at(&self, n: u64) -> &S {
        let idx = n as usize - 1;
        if idx < self.states.len() {
            &self.states[idx]
        } else {
            let wrapped = (idx - self.tail) % self.cycle + self.tail;
            &self.states[wrapped]
        }
    }
}

/// Iterates `succ` from `first` until a state repeats, recording every
/// distinct state. Only usable when the sequence is eventually periodic,
/// which on a finite carrier it always is.
pub fn orbit<S: Ord + Clone>(first: S, mut succ: impl FnMut(&S) -> S) -> Orbit<S> {
    let mut states: Vec<S> = Vec::new();
    let mut index: BTreeMap<S, usize> = BTreeMap::new();
    let mut cur = first;
    loop {
        if let Some(&at) = index.get(&cur) {
            let tail = at;
            let cycle = states.len() - at;
            return Orbit { states, tail, cycle };
        }
        index.insert(cur.clone(), states.len());
        states.push(cur.clone());
        cur = succ(&cur);
    }
}

/// One point of the multiplier sequence on a finite carrier: the map
/// x -> n.x as a table, and the n-fold sumset of a fixed base set.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IterationState {
    pub pow: Vec<u32>,
    pub sum: Bits,
}

impl IterationState {
    /// State at n = 1: the identity map and the base set itself.
    pub fn initial(s: &Semigroup, base: &Bits) -> Self {
        let order = s.order().expect("finite carrier");
        IterationState { pow: (0..order as u32).collect(), sum: base.clone() }
    }

    /// n -> n + 1: compose one more addition of x into the map and one
    /// more summand of the base set into the sumset.
    pub fn advance(&self, s: &Semigroup, base: &Bits) -> Self {
        let pow = self
            .pow
            .iter()
            .enumerate()
            .map(|(x, &nx)| s.add_idx(nx, x as u32))
            .collect();
        let sum = sumset_bits(s, &self.sum, base).0;
        IterationState { pow, sum }
    }

    /// State at n = g directly, for seeding generated-multiplier walks.
    pub fn at(s: &Semigroup, g: u64, base: &Bits) -> Self {
        let order = s.order().expect("finite carrier");
        let pow = (0..order as u32)
            .map(|x| match s.times(g, crate::carrier::Elem::Idx(x)).expect("finite") {
                crate::carrier::Elem::Idx(i) => i,
                _ => unreachable!(),
            })
            .collect();
        let sum = crate::setalg::power_bits_bin(s, g, base);
        IterationState { pow, sum }
    }

    /// State at n * g from the state at n: compose the g-fold map after
    /// the n-fold map, and take the g-fold sumset of [n]A.
    pub fn times_gen(&self, s: &Semigroup, g_pow: &[u32], g: u64) -> Self {
        let pow = self.pow.iter().map(|&nx| g_pow[nx as usize]).collect();
        let sum = crate::setalg::power_bits_bin(s, g, &self.sum);
        IterationState { pow, sum }
    }

    /// n^-1([n]A) at this state: all x whose n-fold sum lands in [n]A.
    pub fn preimage_members(&self) -> Bits {
        let mut out = Bits::empty(self.pow.len());
        for (x, &nx) in self.pow.iter().enumerate() {
            if self.sum.contains(nx as usize) {
                out.insert(x);
            }
        }
        out
    }

    /// nA at this state, for the given base set A.
    pub fn scale_members(&self, base: &Bits) -> Bits {
        let mut out = Bits::empty(self.pow.len());
        for x in base.iter() {
            out.insert(self.pow[x] as usize);
        }
        out
    }
}

/// The orbit of (x -> n.x, [n]A) for n = 1, 2, 3, ...
pub fn multiplier_orbit(s: &Semigroup, base: &Bits) -> Orbit<IterationState> {
    orbit(IterationState::initial(s, base), |st| st.advance(s, base))
}

/// A state reached while walking a generated multiplier set, tagged
/// with a multiplier that produces it (None if the product overflowed;
/// the state itself is still sound).
#[derive(Debug, Clone)]
pub struct Reached<S> {
    pub state: S,
    pub n: Option<u64>,
}

/// Breadth-first closure of the generator states under the generator
/// transitions. Visits each distinct state once, in a deterministic
/// order; covers exactly the states of all finite products of
/// generators.
pub fn bfs_multiplicative<S: Ord + Clone>(
    gens: &[u64],
    mut init: impl FnMut(u64) -> S,
    mut step: impl FnMut(&S, u64) -> S,
) -> Vec<Reached<S>> {
    let mut seen: BTreeSet<S> = BTreeSet::new();
    let mut queue: VecDeque<(S, Option<u64>)> = VecDeque::new();
    let mut out: Vec<Reached<S>> = Vec::new();
    for &g in gens {
        let s0 = init(g);
        if seen.insert(s0.clone()) {
            queue.push_back((s0, Some(g)));
        }
    }
    while let Some((st, n)) = queue.pop_front() {
        out.push(Reached { state: st.clone(), n });
        for &g in gens {
            let nx = step(&st, g);
            if seen.insert(nx.clone()) {
                queue.push_back((nx, n.and_then(|v| v.checked_mul(g))));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::Semigroup;

    #[test]
    fn orbit_of_modular_doubling() {
        // n -> 2n mod 12 from 1: 1,2,4,8,4,8,... tail 2, cycle 2
        let o = orbit(1u32, |&x| (2 * x) % 12);
        assert_eq!(o.states, [1, 2, 4, 8]);
        assert_eq!((o.tail, o.cycle), (2, 2));
        assert_eq!(*o.state_at(3), 4);
        assert_eq!(*o.state_at(5), 4);
        assert_eq!(*o.state_at(1002), 8);
    }

    #[test]
    fn orbit_of_fixed_point() {
        let o = orbit(7u32, |&x| x);
        assert_eq!(o.states, [7]);
        assert_eq!((o.tail, o.cycle), (0, 1));
        assert_eq!(*o.state_at(41), 7);
    }

    #[test]
    fn multiplier_orbit_on_cyclic() {
        let c4 = Semigroup::cyclic(4).unwrap();
        let a = c4.subset_from_labels(&["1"]).unwrap();
        let o = multiplier_orbit(&c4, a.bits().unwrap());
        // n.x mod 4 cycles with period 4; [n]{1} = {n mod 4}
        assert_eq!((o.tail, o.cycle), (0, 4));
        for (i, st) in o.states.iter().enumerate() {
            let n = i + 1;
            for x in 0..4usize {
                assert_eq!(st.pow[x] as usize, n * x % 4);
            }
            assert_eq!(st.sum.iter().collect::<Vec<_>>(), [n % 4]);
        }
    }

    #[test]
    fn generator_seeding_matches_linear_walk() {
        let c6 = Semigroup::cyclic(6).unwrap();
        let a = c6.subset_from_labels(&["1", "3"]).unwrap();
        let bits = a.bits().unwrap();
        let o = multiplier_orbit(&c6, bits);
        for g in 1..=9u64 {
            let direct = IterationState::at(&c6, g, bits);
            assert_eq!(&direct, o.state_at(g));
        }
    }

    #[test]
    fn bfs_covers_generated_products() {
        // states are plain integers n mod 720 to keep it transparent
        let gens = [2u64, 3];
        let reached = bfs_multiplicative(&gens, |g| g, |&n, g| n * g % 720);
        let states: BTreeSet<u64> = reached.iter().map(|r| r.state).collect();
        assert!(states.contains(&2) && states.contains(&3));
        assert!(states.contains(&6) && states.contains(&36));
        for r in &reached {
            if let Some(n) = r.n {
                assert_eq!(n % 720, r.state % 720);
            }
        }
    }
}
