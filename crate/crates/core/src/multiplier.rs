//! Multiplier sets: which n the convexity notions quantify over.

use alloc::vec::Vec;

use crate::error::{Error, Result};

/// The set of multipliers a hull, quotient or disjointness question
/// ranges over. `All` means every n >= 1. `Generated(gens)` denotes the
/// multiplicative subsemigroup generated by `gens`, i.e. all finite
/// products of the generators; the generators themselves are always
/// included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multipliers {
    All,
    Generated(Vec<u64>),
}

impl Multipliers {
    /// Deduplicated, sorted generator list. Errors on an empty list or a
    /// zero generator.
    pub fn generated(gens: &[u64]) -> Result<Multipliers> {
        if gens.is_empty() {
            return Err(Error::EmptyMultipliers);
        }
        if gens.contains(&0) {
            return Err(Error::ZeroMultiplier);
        }
        let mut g: Vec<u64> = gens.to_vec();
        g.sort_unstable();
        g.dedup();
        Ok(Multipliers::Generated(g))
    }

    /// Members of the generated semigroup up to `bound`, ascending.
    /// For `All` this is simply 1..=bound.
    pub fn members_up_to(&self, bound: u64) -> Vec<u64> {
        match self {
            Multipliers::All => (1..=bound).collect(),
            Multipliers::Generated(gens) => {
                let mut seen: Vec<u64> = Vec::new();
                let mut frontier: Vec<u64> = gens.iter().copied().filter(|&g| g <= bound).collect();
                while let Some(n) = frontier.pop() {
                    if seen.contains(&n) {
                        continue;
                    }
                    seen.push(n);
                    for &g in gens.iter() {
                        if let Some(m) = n.checked_mul(g) {
                            if m <= bound && !seen.contains(&m) {
                                frontier.push(m);
                            }
                        }
                    }
                }
                seen.sort_unstable();
                seen
            }
        }
    }

    pub fn contains(&self, n: u64) -> bool {
        if n == 0 {
            return false;
        }
        match self {
            Multipliers::All => true,
            Multipliers::Generated(_) => self.members_up_to(n).contains(&n),
        }
    }
}
