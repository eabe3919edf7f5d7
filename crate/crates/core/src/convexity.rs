//! Convexity predicates and exact "for all n" decisions.
//!
//! A is n-convex when n^-1([n]A) <= A, and n-konvex when [n]A <= nA.
//! Fixed-n checks work on any carrier. The all-n decisions work on
//! finite carriers by walking the state orbit of (x -> n.x, [n]A):
//! the sequence is eventually periodic, so checking one tail plus one
//! full cycle settles every n at once.

use alloc::string::String;
use alloc::vec::Vec;

use rand_chacha::ChaCha8Rng;

use crate::carrier::{Elem, Semigroup, Subset};
use crate::error::{Error, Result};
use crate::iterate::{bfs_multiplicative, multiplier_orbit, IterationState};
use crate::multiplier::Multipliers;
use crate::sample::{random_subset, rng_from_seed};
use crate::setalg::{preimage, scale, sumset, sumset_power};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Fails,
}

/// Outcome of an all-n decision. When the property fails, `witness_n`
/// and `witness_element` name a concrete violation. `tail` and `cycle`
/// describe the detected periodicity (for generated multiplier sets,
/// `tail` counts explored states and `cycle` is 0).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decision {
    pub verdict: Verdict,
    pub witness_n: Option<u64>,
    pub witness_element: Option<Elem>,
    pub tail: usize,
    pub cycle: usize,
}

impl Decision {
    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// An element of n^-1([n]A) \ A, if any: a witness that A is not
/// n-convex.
pub fn n_convex_witness(s: &Semigroup, n: u64, a: &Subset) -> Result<Option<Elem>> {
    let power = sumset_power(s, n, a)?;
    let pre = preimage(s, n, &power)?;
    Ok(pre.difference(a)?.first())
}

/// An element of [n]A \ nA, if any: a witness that A is not n-konvex.
pub fn n_konvex_witness(s: &Semigroup, n: u64, a: &Subset) -> Result<Option<Elem>> {
    let power = sumset_power(s, n, a)?;
    let scaled = scale(s, n, a)?;
    Ok(power.difference(&scaled)?.first())
}

pub fn is_n_convex(s: &Semigroup, n: u64, a: &Subset) -> Result<bool> {
    Ok(n_convex_witness(s, n, a)?.is_none())
}

pub fn is_n_konvex(s: &Semigroup, n: u64, a: &Subset) -> Result<bool> {
    Ok(n_konvex_witness(s, n, a)?.is_none())
}

/// First n in 1..=n_max at which A fails to be n-convex, with a witness
/// element. A plain sweep with no cycle detection; works on the integer
/// carriers too.
pub fn sweep_convex(s: &Semigroup, a: &Subset, n_max: u64) -> Result<Option<(u64, Elem)>> {
    for n in 1..=n_max {
        if let Some(w) = n_convex_witness(s, n, a)? {
            return Ok(Some((n, w)));
        }
    }
    Ok(None)
}

pub fn sweep_konvex(s: &Semigroup, a: &Subset, n_max: u64) -> Result<Option<(u64, Elem)>> {
    for n in 1..=n_max {
        if let Some(w) = n_konvex_witness(s, n, a)? {
            return Ok(Some((n, w)));
        }
    }
    Ok(None)
}

fn require_finite<'a>(s: &Semigroup, a: &'a Subset) -> Result<&'a crate::bits::Bits> {
    s.check_owns(a)?;
    a.bits().ok_or(Error::SymbolicUnsupported)
}

fn decide_all<F>(s: &Semigroup, a: &Subset, mut fails_at: F) -> Result<Decision>
where
    F: FnMut(&IterationState) -> Option<Elem>,
{
    let bits = require_finite(s, a)?;
    let orbit = multiplier_orbit(s, bits);
    for (i, st) in orbit.states.iter().enumerate() {
        if let Some(w) = fails_at(st) {
            return Ok(Decision {
                verdict: Verdict::Fails,
                witness_n: Some(i as u64 + 1),
                witness_element: Some(w),
                tail: orbit.tail,
                cycle: orbit.cycle,
            });
        }
    }
    Ok(Decision {
        verdict: Verdict::Holds,
        witness_n: None,
        witness_element: None,
        tail: orbit.tail,
        cycle: orbit.cycle,
    })
}

fn decide_generated<F>(s: &Semigroup, gens: &[u64], a: &Subset, mut fails_at: F) -> Result<Decision>
where
    F: FnMut(&IterationState) -> Option<Elem>,
{
    let bits = require_finite(s, a)?;
    let order = s.order().expect("finite carrier");
    let gen_pows: Vec<Vec<u32>> = gens
        .iter()
        .map(|&g| {
            (0..order as u32)
                .map(|x| match s.times(g, Elem::Idx(x)).expect("finite") {
                    Elem::Idx(i) => i,
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect();
    let reached = bfs_multiplicative(
        gens,
        |g| IterationState::at(s, g, bits),
        |st, g| {
            let gi = gens.iter().position(|&h| h == g).expect("generator");
            st.times_gen(s, &gen_pows[gi], g)
        },
    );
    let explored = reached.len();
    for r in &reached {
        if let Some(w) = fails_at(&r.state) {
            return Ok(Decision {
                verdict: Verdict::Fails,
                witness_n: r.n,
                witness_element: Some(w),
                tail: explored,
                cycle: 0,
            });
        }
    }
    Ok(Decision {
        verdict: Verdict::Holds,
        witness_n: None,
        witness_element: None,
        tail: explored,
        cycle: 0,
    })
}

fn convex_fail(st: &IterationState, base: &crate::bits::Bits) -> Option<Elem> {
    let pre = st.preimage_members();
    pre.difference(base).first().map(|i| Elem::Idx(i as u32))
}

fn konvex_fail(st: &IterationState, base: &crate::bits::Bits) -> Option<Elem> {
    let scaled = st.scale_members(base);
    st.sum.difference(&scaled).first().map(|i| Elem::Idx(i as u32))
}

/// Is A n-convex for every n >= 1? Exact; finite carriers only.
pub fn decide_convex_all_n(s: &Semigroup, a: &Subset) -> Result<Decision> {
    let base = require_finite(s, a)?.clone();
    decide_all(s, a, |st| convex_fail(st, &base))
}

/// Is A n-konvex for every n >= 1? Exact; finite carriers only.
pub fn decide_konvex_all_n(s: &Semigroup, a: &Subset) -> Result<Decision> {
    let base = require_finite(s, a)?.clone();
    decide_all(s, a, |st| konvex_fail(st, &base))
}

/// Is A n-convex for every n in the multiplier set? For a generated
/// set this quantifies over all finite products of the generators.
pub fn decide_convex(s: &Semigroup, f: &Multipliers, a: &Subset) -> Result<Decision> {
    match f {
        Multipliers::All => decide_convex_all_n(s, a),
        Multipliers::Generated(gens) => {
            let base = require_finite(s, a)?.clone();
            decide_generated(s, gens, a, |st| convex_fail(st, &base))
        }
    }
}

pub fn decide_konvex(s: &Semigroup, f: &Multipliers, a: &Subset) -> Result<Decision> {
    match f {
        Multipliers::All => decide_konvex_all_n(s, a),
        Multipliers::Generated(gens) => {
            let base = require_finite(s, a)?.clone();
            decide_generated(s, gens, a, |st| konvex_fail(st, &base))
        }
    }
}

pub fn is_f_convex(s: &Semigroup, f: &Multipliers, a: &Subset) -> Result<bool> {
    decide_convex(s, f, a).map(|d| d.holds())
}

pub fn is_f_konvex(s: &Semigroup, f: &Multipliers, a: &Subset) -> Result<bool> {
    decide_konvex(s, f, a).map(|d| d.holds())
}

/// Which n in 1..=n_max make A n-convex / n-konvex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub n_max: u64,
    pub convex_ns: Vec<u64>,
    pub konvex_ns: Vec<u64>,
}

pub fn spectrum(s: &Semigroup, a: &Subset, n_max: u64) -> Result<Spectrum> {
    if n_max == 0 {
        return Err(Error::BadN);
    }
    let mut convex_ns = Vec::new();
    let mut konvex_ns = Vec::new();
    for n in 1..=n_max {
        if is_n_convex(s, n, a)? {
            convex_ns.push(n);
        }
        if is_n_konvex(s, n, a)? {
            konvex_ns.push(n);
        }
    }
    Ok(Spectrum { n_max, convex_ns, konvex_ns })
}

/// Structural laws of the spectra: the konvex multipliers are closed
/// under products, the convex multipliers under divisors. Violations
/// (there should never be any) are returned as pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub spectrum: Spectrum,
    /// (j, k) with j, k konvex but j*k (within range) not.
    pub konvex_product_violations: Vec<(u64, u64)>,
    /// (n, d) with n convex, d a divisor of n, d not convex.
    pub convex_divisor_violations: Vec<(u64, u64)>,
}

impl StructureReport {
    pub fn ok(&self) -> bool {
        self.konvex_product_violations.is_empty() && self.convex_divisor_violations.is_empty()
    }
}

pub fn check_structure(s: &Semigroup, a: &Subset, n_max: u64) -> Result<StructureReport> {
    let sp = spectrum(s, a, n_max)?;
    let mut konvex_product_violations = Vec::new();
    for (i, &j) in sp.konvex_ns.iter().enumerate() {
        for &k in &sp.konvex_ns[i..] {
            if let Some(jk) = j.checked_mul(k) {
                if jk <= n_max && !sp.konvex_ns.contains(&jk) {
                    konvex_product_violations.push((j, k));
                }
            }
        }
    }
    let mut convex_divisor_violations = Vec::new();
    for &n in &sp.convex_ns {
        for d in 1..=n {
            if n % d == 0 && !sp.convex_ns.contains(&d) {
                convex_divisor_violations.push((n, d));
            }
        }
    }
    Ok(StructureReport { spectrum: sp, konvex_product_violations, convex_divisor_violations })
}

/// Closure laws of the convex and konvex families, checked on seeded
/// random samples from one finite carrier: intersections of convex sets
/// are convex, preimages of convex sets are convex, sumsets, scalings
/// and powers of konvex sets are konvex, a convex-konvex intersection
/// is konvex, and the union of an inclusion chain of either kind keeps
/// the property.
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub instances_checked: usize,
    pub violations: Vec<String>,
}

impl ClosureReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn chain_union(s: &Semigroup, pool: &[Subset]) -> Result<Option<Subset>> {
    // greedily extract an inclusion chain, smallest first
    let mut sorted: Vec<&Subset> = pool.iter().collect();
    sorted.sort_by_key(|x| x.len());
    let mut chain: Vec<&Subset> = Vec::new();
    for cand in sorted {
        if chain.last().is_none_or(|top| top.is_subset_of(cand).unwrap_or(false)) {
            chain.push(cand);
        }
    }
    if chain.len() < 2 {
        return Ok(None);
    }
    let mut u = s.empty_subset();
    for c in chain {
        u = u.union(c)?;
    }
    Ok(Some(u))
}

pub fn check_closure(
    s: &Semigroup,
    f: &Multipliers,
    seed: u64,
    samples: usize,
) -> Result<ClosureReport> {
    if !s.is_finite() {
        return Err(Error::SymbolicUnsupported);
    }
    let mut rng: ChaCha8Rng = rng_from_seed(seed);
    let mut candidates: Vec<Subset> = Vec::new();
    candidates.push(s.empty_subset());
    candidates.push(s.full_subset()?);
    for x in s.elements().expect("finite") {
        candidates.push(s.singleton(x)?);
    }
    for _ in 0..samples {
        candidates.push(random_subset(s, &mut rng));
    }

    let mut convex_pool: Vec<Subset> = Vec::new();
    let mut konvex_pool: Vec<Subset> = Vec::new();
    for c in &candidates {
        if is_f_convex(s, f, c)? {
            convex_pool.push(c.clone());
        }
        if is_f_konvex(s, f, c)? {
            konvex_pool.push(c.clone());
        }
    }

    let mut checked = 0usize;
    let mut violations: Vec<String> = Vec::new();
    let describe = |x: &Subset| -> String {
        let mut out = String::from("{");
        for (i, l) in s.sorted_labels(x).into_iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            out.push_str(&l);
        }
        out.push('}');
        out
    };
    let cap = 40usize;

    for (i, a) in convex_pool.iter().take(cap).enumerate() {
        for b in convex_pool.iter().take(cap).skip(i) {
            checked += 1;
            let inter = a.intersection(b)?;
            if !is_f_convex(s, f, &inter)? {
                violations.push(alloc::format!(
                    "convex ∩ convex not convex: {} ∩ {}",
                    describe(a),
                    describe(b)
                ));
            }
        }
    }

    for (i, a) in konvex_pool.iter().take(cap).enumerate() {
        for b in konvex_pool.iter().take(cap).skip(i) {
            checked += 1;
            let sum = sumset(s, a, b)?;
            if !is_f_konvex(s, f, &sum)? {
                violations.push(alloc::format!(
                    "konvex + konvex not konvex: {} + {}",
                    describe(a),
                    describe(b)
                ));
            }
        }
    }

    for a in konvex_pool.iter().take(cap) {
        for k in 1..=3u64 {
            checked += 2;
            if !is_f_konvex(s, f, &scale(s, k, a)?)? {
                violations.push(alloc::format!("{k}.A not konvex for konvex A={}", describe(a)));
            }
            if !is_f_konvex(s, f, &sumset_power(s, k, a)?)? {
                violations.push(alloc::format!("[{k}]A not konvex for konvex A={}", describe(a)));
            }
        }
    }

    for a in convex_pool.iter().take(cap) {
        for k in 1..=3u64 {
            checked += 1;
            if !is_f_convex(s, f, &preimage(s, k, a)?)? {
                violations.push(alloc::format!("{k}^-1 A not convex for convex A={}", describe(a)));
            }
        }
    }

    for a in convex_pool.iter().take(cap) {
        for b in konvex_pool.iter().take(cap) {
            checked += 1;
            let inter = a.intersection(b)?;
            if !is_f_konvex(s, f, &inter)? {
                violations.push(alloc::format!(
                    "convex ∩ konvex not konvex: {} ∩ {}",
                    describe(a),
                    describe(b)
                ));
            }
        }
    }

    if let Some(u) = chain_union(s, &convex_pool)? {
        checked += 1;
        if !is_f_convex(s, f, &u)? {
            violations.push(alloc::format!("chain union of convex sets not convex: {}", describe(&u)));
        }
    }
    if let Some(u) = chain_union(s, &konvex_pool)? {
        checked += 1;
        if !is_f_konvex(s, f, &u)? {
            violations.push(alloc::format!("chain union of konvex sets not konvex: {}", describe(&u)));
        }
    }

    Ok(ClosureReport { instances_checked: checked, violations })
}
