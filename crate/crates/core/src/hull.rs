//! Convex hulls, the singleton-hull partition and the quotient carrier.
//!
//! For a multiplicative set of multipliers F, the F-convex hull of A is
//! the smallest F-convex superset of A. Two independent routes compute
//! it: a Kleene iteration of the expansion H -> union of n^-1([n]H)
//! over F, and the closed formula union of n^-1([n]A) over F, which is
//! exact when F is multiplicatively closed. For a raw finite generator
//! list (not closed under products) only a sandwich is guaranteed, and
//! both ends plus the exact fixed point are reported.

use alloc::format;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::carrier::{Elem, Semigroup, Subset};
use crate::convexity::decide_konvex_all_n;
use crate::error::{Error, Result};
use crate::iterate::{bfs_multiplicative, multiplier_orbit, orbit, IterationState};
use crate::multiplier::Multipliers;
use crate::setalg::{preimage, sumset_power};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HullMethod {
    FixedPoint,
    Formula,
}

/// A computed hull. `rounds` counts expansion passes of the fixed-point
/// route, including the final pass that adds nothing; the formula route
/// reports instead which multipliers contributed new elements.
#[derive(Debug, Clone)]
pub struct HullResult {
    pub set: Subset,
    pub method: HullMethod,
    pub rounds: usize,
    pub contributing: Vec<u64>,
}

fn gen_pow_tables(s: &Semigroup, gens: &[u64]) -> Vec<Vec<u32>> {
    let order = s.order().expect("finite carrier");
    gens.iter()
        .map(|&g| {
            (0..order as u32)
                .map(|x| match s.times(g, Elem::Idx(x)).expect("finite") {
                    Elem::Idx(i) => i,
                    _ => unreachable!(),
                })
                .collect()
        })
        .collect()
}

/// Union of n^-1([n]H) over the multiplier set, the one-shot expansion
/// both hull routes are built from. Returns the union and the
/// multipliers that enlarged it.
fn expansion(s: &Semigroup, f: &Multipliers, base: &Bits) -> (Bits, Vec<u64>) {
    let order = s.order().expect("finite carrier");
    let mut acc = Bits::empty(order);
    let mut contributing: Vec<u64> = Vec::new();
    match f {
        Multipliers::All => {
            let orb = multiplier_orbit(s, base);
            for (i, st) in orb.states.iter().enumerate() {
                let members = st.preimage_members();
                if !members.is_subset_of(&acc) {
                    contributing.push(i as u64 + 1);
                    acc.union_with(&members);
                }
            }
        }
        Multipliers::Generated(gens) => {
            let tables = gen_pow_tables(s, gens);
            let reached = bfs_multiplicative(
                gens,
                |g| IterationState::at(s, g, base),
                |st, g| {
                    let gi = gens.iter().position(|&h| h == g).expect("generator");
                    st.times_gen(s, &tables[gi], g)
                },
            );
            for r in &reached {
                let members = r.state.preimage_members();
                if !members.is_subset_of(&acc) {
                    if let Some(n) = r.n {
                        contributing.push(n);
                    }
                    acc.union_with(&members);
                }
            }
            contributing.sort_unstable();
        }
    }
    (acc, contributing)
}

fn require_finite<'a>(s: &Semigroup, a: &'a Subset) -> Result<&'a Bits> {
    s.check_owns(a)?;
    a.bits().ok_or(Error::SymbolicUnsupported)
}

/// Hull as the closed formula: union of n^-1([n]A) over the multiplier
/// set. Exact because the multiplier set is closed under products.
pub fn hull_formula(s: &Semigroup, f: &Multipliers, a: &Subset) -> Result<HullResult> {
    let base = require_finite(s, a)?;
    let (set, contributing) = expansion(s, f, base);
    Ok(HullResult {
        set: Subset::from_bits(s.id(), set),
        method: HullMethod::Formula,
        rounds: 0,
        contributing,
    })
}

/// Hull as the least fixed point of the expansion, iterated from A.
pub fn hull_fixedpoint(s: &Semigroup, f: &Multipliers, a: &Subset) -> Result<HullResult> {
    let base = require_finite(s, a)?;
    let mut cur = base.clone();
    let mut rounds = 0usize;
    loop {
        rounds += 1;
        let (next, _) = expansion(s, f, &cur);
        if next == cur {
            return Ok(HullResult {
                set: Subset::from_bits(s.id(), cur),
                method: HullMethod::FixedPoint,
                rounds,
                contributing: Vec::new(),
            });
        }
        cur = next;
    }
}

/// The hull with respect to a raw finite multiplier list, not closed
/// under products: least fixed point of the expansion over exactly
/// those multipliers.
pub fn hull_fixedpoint_raw(s: &Semigroup, ns: &[u64], a: &Subset) -> Result<Subset> {
    if ns.is_empty() {
        return Err(Error::EmptyMultipliers);
    }
    if ns.contains(&0) {
        return Err(Error::ZeroMultiplier);
    }
    s.check_owns(a)?;
    let mut cur = a.clone();
    loop {
        let mut next = cur.clone();
        for &n in ns {
            let power = sumset_power(s, n, &cur)?;
            next = next.union(&preimage(s, n, &power)?)?;
        }
        if next == cur {
            return Ok(cur);
        }
        cur = next;
    }
}

/// The three-set sandwich for a raw generator list F:
/// A <= union over F <= hull over F <= hull over the generated
/// semigroup <F>.
#[derive(Debug, Clone)]
pub struct Sandwich {
    pub lower_union: Subset,
    pub exact_hull: Subset,
    pub generated_hull: Subset,
}

impl Sandwich {
    pub fn inclusions_hold(&self, a: &Subset) -> Result<bool> {
        Ok(a.is_subset_of(&self.lower_union)?
            && self.lower_union.is_subset_of(&self.exact_hull)?
            && self.exact_hull.is_subset_of(&self.generated_hull)?)
    }
}

pub fn sandwich(s: &Semigroup, ns: &[u64], a: &Subset) -> Result<Sandwich> {
    if ns.is_empty() {
        return Err(Error::EmptyMultipliers);
    }
    if ns.contains(&0) {
        return Err(Error::ZeroMultiplier);
    }
    s.check_owns(a)?;
    let mut lower = a.clone();
    for &n in ns {
        let power = sumset_power(s, n, a)?;
        lower = lower.union(&preimage(s, n, &power)?)?;
    }
    let exact = hull_fixedpoint_raw(s, ns, a)?;
    let generated = hull_formula(s, &Multipliers::generated(ns)?, a)?.set;
    Ok(Sandwich { lower_union: lower, exact_hull: exact, generated_hull: generated })
}

/// Hull of a finite union, bracketed from below by hulls of cross
/// tuples and, when konvex covers of the parts are supplied, from
/// above by the covered tuple formula.
#[derive(Debug, Clone)]
pub struct UnionHullReport {
    pub hull: Subset,
    pub lower: Subset,
    pub upper: Option<Subset>,
    pub lower_ok: bool,
    pub upper_ok: Option<bool>,
    /// With verified covers and all multipliers, lower is exact.
    pub exact: Option<bool>,
}

fn cross_union_of_hulls(
    s: &Semigroup,
    f: &Multipliers,
    pools: &[Vec<Elem>],
) -> Result<Subset> {
    let mut acc = s.empty_subset();
    let mut tuple: Vec<Elem> = Vec::with_capacity(pools.len());
    fn rec(
        s: &Semigroup,
        f: &Multipliers,
        pools: &[Vec<Elem>],
        tuple: &mut Vec<Elem>,
        acc: &mut Subset,
    ) -> Result<()> {
        if tuple.len() == pools.len() {
            let set = s.subset_from_elems(tuple)?;
            let h = hull_formula(s, f, &set)?.set;
            *acc = acc.union(&h)?;
            return Ok(());
        }
        for &e in &pools[tuple.len()] {
            tuple.push(e);
            rec(s, f, pools, tuple, acc)?;
            tuple.pop();
        }
        Ok(())
    }
    rec(s, f, pools, &mut tuple, &mut acc)?;
    Ok(acc)
}

pub fn hull_of_union(
    s: &Semigroup,
    f: &Multipliers,
    sets: &[Subset],
    covers: Option<&[Subset]>,
) -> Result<UnionHullReport> {
    if sets.is_empty() {
        return Err(Error::BadParams("no sets given".into()));
    }
    for a in sets {
        s.check_owns(a)?;
    }
    if let Some(bs) = covers {
        if bs.len() != sets.len() {
            return Err(Error::BadParams(format!(
                "{} covers for {} sets",
                bs.len(),
                sets.len()
            )));
        }
        for (i, (a, b)) in sets.iter().zip(bs).enumerate() {
            s.check_owns(b)?;
            if !a.is_subset_of(b)? {
                return Err(Error::CoverMissesSet(i));
            }
            if !decide_konvex_all_n(s, b)?.holds() {
                return Err(Error::CoverNotKonvex(i));
            }
        }
    }

    // empty parts contribute nothing to the union and would starve the
    // tuple formulas, so they are dropped up front
    let keep: Vec<usize> = (0..sets.len()).filter(|&i| !sets[i].is_empty()).collect();

    let mut union_all = s.empty_subset();
    for a in sets {
        union_all = union_all.union(a)?;
    }
    let hull = hull_formula(s, f, &union_all)?.set;

    let f_hulls: Vec<Subset> = keep
        .iter()
        .map(|&i| hull_formula(s, f, &sets[i]).map(|h| h.set))
        .collect::<Result<_>>()?;
    let lower = cross_union_of_hulls(
        s,
        f,
        &f_hulls.iter().map(|h| h.elems()).collect::<Vec<_>>(),
    )?;
    let lower_ok = lower.is_subset_of(&hull)?;

    let (upper, upper_ok) = match covers {
        None => (None, None),
        Some(bs) => {
            let mut pools: Vec<Vec<Elem>> = Vec::with_capacity(keep.len());
            for &i in &keep {
                let nat_hull = hull_formula(s, &Multipliers::All, &sets[i])?.set;
                pools.push(nat_hull.intersection(&bs[i])?.elems());
            }
            let up = cross_union_of_hulls(s, f, &pools)?;
            let ok = hull.is_subset_of(&up)?;
            (Some(up), Some(ok))
        }
    };

    let exact = match (covers.is_some(), f) {
        (true, Multipliers::All) => Some(hull == lower),
        _ => None,
    };

    Ok(UnionHullReport { hull, lower, upper, lower_ok, upper_ok, exact })
}

fn require_idx(s: &Semigroup, x: Elem) -> Result<u32> {
    match x {
        Elem::Idx(i) if s.contains_elem(x) => Ok(i),
        Elem::Idx(i) => Err(Error::InvalidElement(format!("index {i}"))),
        Elem::Int(_) => Err(Error::SymbolicUnsupported),
    }
}

/// The hull of the singleton {x}: everyone n-indistinguishable from x
/// for some n in the multiplier set.
pub fn singleton_class(s: &Semigroup, f: &Multipliers, x: Elem) -> Result<Subset> {
    let xi = require_idx(s, x)?;
    let order = s.order().expect("finite carrier");
    let identity: Vec<u32> = (0..order as u32).collect();
    let mut acc = Bits::empty(order);
    let collect = |pow: &Vec<u32>, acc: &mut Bits| {
        let target = pow[xi as usize];
        for (u, &nu) in pow.iter().enumerate() {
            if nu == target {
                acc.insert(u);
            }
        }
    };
    match f {
        Multipliers::All => {
            let orb = orbit(identity, |pow: &Vec<u32>| {
                pow.iter().enumerate().map(|(u, &nu)| s.add_idx(nu, u as u32)).collect()
            });
            for pow in &orb.states {
                collect(pow, &mut acc);
            }
        }
        Multipliers::Generated(gens) => {
            let tables = gen_pow_tables(s, gens);
            let reached = bfs_multiplicative(
                gens,
                |g| {
                    let gi = gens.iter().position(|&h| h == g).expect("generator");
                    tables[gi].clone()
                },
                |pow: &Vec<u32>, g| {
                    let gi = gens.iter().position(|&h| h == g).expect("generator");
                    pow.iter().map(|&nu| tables[gi][nu as usize]).collect()
                },
            );
            for r in &reached {
                collect(&r.state, &mut acc);
            }
        }
    }
    Ok(Subset::from_bits(s.id(), acc))
}

/// Does nx = ny hold for some n in the multiplier set?
pub fn equiv(s: &Semigroup, f: &Multipliers, x: Elem, y: Elem) -> Result<bool> {
    let xi = require_idx(s, x)?;
    let yi = require_idx(s, y)?;
    match f {
        Multipliers::All => {
            let orb = orbit((xi, yi), |&(u, v)| (s.add_idx(u, xi), s.add_idx(v, yi)));
            Ok(orb.states.iter().any(|&(u, v)| u == v))
        }
        Multipliers::Generated(gens) => {
            let tables = gen_pow_tables(s, gens);
            let reached = bfs_multiplicative(
                gens,
                |g| {
                    let gi = gens.iter().position(|&h| h == g).expect("generator");
                    (tables[gi][xi as usize], tables[gi][yi as usize])
                },
                |&(u, v), g| {
                    let gi = gens.iter().position(|&h| h == g).expect("generator");
                    (tables[gi][u as usize], tables[gi][v as usize])
                },
            );
            Ok(reached.iter().any(|r| r.state.0 == r.state.1))
        }
    }
}

/// The quotient of the carrier by the singleton-hull partition.
#[derive(Debug, Clone)]
pub struct QuotientMap {
    /// The classes, as subsets of the original carrier, ordered by
    /// their smallest element.
    pub classes: Vec<Subset>,
    /// Element index -> class index.
    pub projection: Vec<u32>,
    /// Class index -> representative (smallest member).
    pub reps: Vec<u32>,
    /// The carrier structure on the classes.
    pub quotient: Semigroup,
}

/// Builds the quotient carrier for a multiplicative multiplier set,
/// verifying along the way everything the construction is entitled to:
/// singleton hulls partition the carrier, hull-membership agrees with
/// the nx = ny relation, and the class operation is independent of
/// representatives. Any failure is a [`Error::WellDefinednessViolation`].
pub fn quotient(s: &Semigroup, f: &Multipliers) -> Result<QuotientMap> {
    let order = s.order().ok_or(Error::SymbolicUnsupported)?;
    let class_of: Vec<Subset> = (0..order as u32)
        .map(|x| singleton_class(s, f, Elem::Idx(x)))
        .collect::<Result<_>>()?;

    for (x, cx) in class_of.iter().enumerate() {
        if !cx.contains(Elem::Idx(x as u32)) {
            return Err(Error::WellDefinednessViolation(format!(
                "class of {} does not contain it",
                s.label(Elem::Idx(x as u32))
            )));
        }
        for cy in class_of.iter().skip(x + 1) {
            if cx.intersects(cy)? && cx != cy {
                return Err(Error::WellDefinednessViolation(format!(
                    "overlapping distinct classes at {}",
                    s.label(Elem::Idx(x as u32))
                )));
            }
        }
    }

    for x in 0..order as u32 {
        for y in 0..order as u32 {
            let same = class_of[x as usize] == class_of[y as usize];
            let eq = equiv(s, f, Elem::Idx(x), Elem::Idx(y))?;
            if same != eq {
                return Err(Error::WellDefinednessViolation(format!(
                    "hull membership and the nx = ny relation disagree at ({}, {})",
                    s.label(Elem::Idx(x)),
                    s.label(Elem::Idx(y))
                )));
            }
        }
    }

    let mut classes: Vec<Subset> = Vec::new();
    let mut projection = alloc::vec![u32::MAX; order];
    let mut reps: Vec<u32> = Vec::new();
    for x in 0..order as u32 {
        if projection[x as usize] != u32::MAX {
            continue;
        }
        let idx = classes.len() as u32;
        let class = class_of[x as usize].clone();
        for e in class.elems() {
            if let Elem::Idx(u) = e {
                projection[u as usize] = idx;
            }
        }
        reps.push(x);
        classes.push(class);
    }

    for x in 0..order as u32 {
        for y in 0..order as u32 {
            let via_elems = projection[s.add_idx(x, y) as usize];
            let rx = reps[projection[x as usize] as usize];
            let ry = reps[projection[y as usize] as usize];
            let via_reps = projection[s.add_idx(rx, ry) as usize];
            if via_elems != via_reps {
                return Err(Error::WellDefinednessViolation(format!(
                    "class of {} + {} depends on representatives",
                    s.label(Elem::Idx(x)),
                    s.label(Elem::Idx(y))
                )));
            }
        }
    }

    let labels: Vec<alloc::string::String> =
        reps.iter().map(|&r| s.label(Elem::Idx(r))).collect();
    let rows: Vec<Vec<alloc::string::String>> = reps
        .iter()
        .map(|&rx| {
            reps.iter()
                .map(|&ry| labels[projection[s.add_idx(rx, ry) as usize] as usize].clone())
                .collect()
        })
        .collect();
    let quotient = Semigroup::build_cayley(&labels, &rows)
        .map_err(|e| Error::WellDefinednessViolation(format!("quotient table invalid: {e}")))?;

    Ok(QuotientMap { classes, projection, reps, quotient })
}

/// In the quotient, n.x = n.y forces x = y for every n in the
/// multiplier set. Checks all class pairs across one full period (plus
/// a direct sweep of small members) and reports offending pairs; a
/// nonempty result would falsify a guaranteed cancellation law.
pub fn check_cancellation(
    s: &Semigroup,
    f: &Multipliers,
    map: &QuotientMap,
) -> Result<Vec<(u32, u32)>> {
    let mut bad: Vec<(u32, u32)> = Vec::new();
    let proj = &map.projection;
    for (i, &x) in map.reps.iter().enumerate() {
        for (j, &y) in map.reps.iter().enumerate().skip(i + 1) {
            let collides = match f {
                Multipliers::All => {
                    let orb = orbit((x, y), |&(u, v)| (s.add_idx(u, x), s.add_idx(v, y)));
                    orb.states.iter().any(|&(u, v)| proj[u as usize] == proj[v as usize])
                }
                Multipliers::Generated(gens) => {
                    let tables = gen_pow_tables(s, gens);
                    let reached = bfs_multiplicative(
                        gens,
                        |g| {
                            let gi = gens.iter().position(|&h| h == g).expect("generator");
                            (tables[gi][x as usize], tables[gi][y as usize])
                        },
                        |&(u, v), g| {
                            let gi = gens.iter().position(|&h| h == g).expect("generator");
                            (tables[gi][u as usize], tables[gi][v as usize])
                        },
                    );
                    reached
                        .iter()
                        .any(|r| proj[r.state.0 as usize] == proj[r.state.1 as usize])
                }
            };
            let direct = f.members_up_to(24).into_iter().any(|n| {
                let nx = s.times(n, Elem::Idx(x)).expect("finite");
                let ny = s.times(n, Elem::Idx(y)).expect("finite");
                match (nx, ny) {
                    (Elem::Idx(u), Elem::Idx(v)) => proj[u as usize] == proj[v as usize],
                    _ => unreachable!(),
                }
            });
            if collides || direct {
                bad.push((i as u32, j as u32));
            }
        }
    }
    Ok(bad)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{catalog, Semigroup};
    use crate::convexity::is_f_convex;
    use crate::sample::{random_subset, rng_from_seed};

    #[test]
    fn hull_with_trivial_multiplier_is_identity() {
        let c6 = Semigroup::cyclic(6).unwrap();
        let f = Multipliers::generated(&[1]).unwrap();
        let a = c6.subset_from_labels(&["2", "5"]).unwrap();
        assert_eq!(hull_formula(&c6, &f, &a).unwrap().set, a);
        let fp = hull_fixedpoint(&c6, &f, &a).unwrap();
        assert_eq!(fp.set, a);
        assert_eq!(fp.rounds, 1);
    }

    #[test]
    fn singleton_hull_under_doubling_in_cyclic_four() {
        let c4 = Semigroup::cyclic(4).unwrap();
        let f = Multipliers::generated(&[2]).unwrap();
        let zero = c4.subset_from_labels(&["0"]).unwrap();
        // 2.x = 0 for x in {0,2}, 4.x = 0 for all x, so the hull is everything
        let h = hull_formula(&c4, &f, &zero).unwrap();
        assert_eq!(h.set, c4.full_subset().unwrap());
        assert_eq!(h.contributing, [2, 4]);
        assert_eq!(hull_fixedpoint(&c4, &f, &zero).unwrap().set, h.set);
    }

    #[test]
    fn hull_is_extensive_monotone_idempotent() {
        for entry in catalog(6) {
            let s = &entry.carrier;
            let mut rng = rng_from_seed(3);
            for f in [Multipliers::All, Multipliers::generated(&[2]).unwrap()] {
                for _ in 0..10 {
                    let a = random_subset(s, &mut rng);
                    let b = a.union(&random_subset(s, &mut rng)).unwrap();
                    let ha = hull_formula(s, &f, &a).unwrap().set;
                    let hb = hull_formula(s, &f, &b).unwrap().set;
                    assert!(a.is_subset_of(&ha).unwrap());
                    assert!(ha.is_subset_of(&hb).unwrap());
                    let hha = hull_formula(s, &f, &ha).unwrap().set;
                    assert_eq!(ha, hha, "{}", s.name());
                    assert!(is_f_convex(s, &f, &ha).unwrap());
                }
            }
        }
    }

    #[test]
    fn formula_equals_fixedpoint_and_stabilizes_fast() {
        for entry in catalog(6) {
            let s = &entry.carrier;
            let mut rng = rng_from_seed(17);
            for f in [
                Multipliers::All,
                Multipliers::generated(&[2]).unwrap(),
                Multipliers::generated(&[2, 3]).unwrap(),
            ] {
                for _ in 0..10 {
                    let a = random_subset(s, &mut rng);
                    let hf = hull_formula(s, &f, &a).unwrap();
                    let fp = hull_fixedpoint(s, &f, &a).unwrap();
                    assert_eq!(hf.set, fp.set, "{}", s.name());
                    assert!(fp.rounds <= 2, "{} took {} rounds", s.name(), fp.rounds);
                }
            }
        }
    }

    #[test]
    fn hull_of_convex_set_is_itself_in_one_round() {
        let c6 = Semigroup::cyclic(6).unwrap();
        let full = c6.full_subset().unwrap();
        let fp = hull_fixedpoint(&c6, &Multipliers::All, &full).unwrap();
        assert_eq!(fp.set, full);
        assert_eq!(fp.rounds, 1);
    }

    #[test]
    fn sandwich_on_raw_generators() {
        for entry in catalog(6) {
            let s = &entry.carrier;
            let mut rng = rng_from_seed(23);
            for ns in [[2u64, 3].as_slice(), &[2, 5], &[4, 6]] {
                for _ in 0..6 {
                    let a = random_subset(s, &mut rng);
                    let sw = sandwich(s, ns, &a).unwrap();
                    assert!(sw.inclusions_hold(&a).unwrap(), "{}", s.name());
                }
            }
        }
    }

    #[test]
    fn no_one_monoid_like_hull_on_symbolic_is_refused() {
        let z = Semigroup::int_additive();
        let a = z.subset_from_ints(&[0, 2]).unwrap();
        assert!(matches!(
            hull_formula(&z, &Multipliers::All, &a),
            Err(Error::SymbolicUnsupported)
        ));
    }

    #[test]
    fn union_hull_with_konvex_covers_in_semilattice() {
        // in a semilattice every subsemilattice is konvex, so singletons cover themselves
        let l4 = Semigroup::chain_min(4).unwrap();
        let a1 = l4.subset_from_labels(&["1"]).unwrap();
        let a2 = l4.subset_from_labels(&["4"]).unwrap();
        let rep = hull_of_union(
            &l4,
            &Multipliers::All,
            &[a1.clone(), a2.clone()],
            Some(&[a1.clone(), a2.clone()]),
        )
        .unwrap();
        assert!(rep.lower_ok);
        assert_eq!(rep.upper_ok, Some(true));
        assert_eq!(rep.exact, Some(true));
        assert_eq!(l4.sorted_labels(&rep.hull), ["1", "4"]);
    }

    #[test]
    fn union_hull_rejects_bad_covers() {
        let c6 = Semigroup::cyclic(6).unwrap();
        let zero = c6.subset_from_labels(&["0"]).unwrap();
        let one = c6.subset_from_labels(&["1"]).unwrap();
        let two = c6.subset_from_labels(&["2"]).unwrap();
        // {0,3} contains {0} but doubling sends it onto {0} alone while
        // [2]{0,3} is still {0,3}, so it is not a konvex cover
        let h = c6.subset_from_labels(&["0", "3"]).unwrap();
        let err = hull_of_union(&c6, &Multipliers::All, &[zero], Some(&[h]));
        assert_eq!(err.unwrap_err(), Error::CoverNotKonvex(0));
        let err = hull_of_union(&c6, &Multipliers::All, &[one], Some(&[two]));
        assert_eq!(err.unwrap_err(), Error::CoverMissesSet(0));
    }

    #[test]
    fn union_hull_drops_empty_parts() {
        let l4 = Semigroup::chain_min(4).unwrap();
        let a1 = l4.subset_from_labels(&["2"]).unwrap();
        let empty = l4.empty_subset();
        let rep = hull_of_union(
            &l4,
            &Multipliers::All,
            &[a1.clone(), empty.clone()],
            Some(&[a1.clone(), empty]),
        )
        .unwrap();
        assert_eq!(rep.hull, hull_formula(&l4, &Multipliers::All, &a1).unwrap().set);
        assert_eq!(rep.upper_ok, Some(true));
    }

    #[test]
    fn singleton_classes_partition_cyclic() {
        let c6 = Semigroup::cyclic(6).unwrap();
        // over all n, nx = ny happens iff n(x-y) = 0, and n = 6 kills everything
        for x in 0..6u32 {
            let cls = singleton_class(&c6, &Multipliers::All, Elem::Idx(x)).unwrap();
            assert_eq!(cls, c6.full_subset().unwrap());
        }
        // in a semilattice nx = x, so classes are singletons
        let l3 = Semigroup::chain_min(3).unwrap();
        for x in 0..3u32 {
            let cls = singleton_class(&l3, &Multipliers::All, Elem::Idx(x)).unwrap();
            assert_eq!(cls, l3.singleton(Elem::Idx(x)).unwrap());
        }
    }

    #[test]
    fn equiv_matches_class_membership() {
        for entry in catalog(5) {
            let s = &entry.carrier;
            for f in [Multipliers::All, Multipliers::generated(&[2, 3]).unwrap()] {
                let order = s.order().unwrap() as u32;
                for x in 0..order {
                    let cls = singleton_class(s, &f, Elem::Idx(x)).unwrap();
                    for y in 0..order {
                        assert_eq!(
                            equiv(s, &f, Elem::Idx(x), Elem::Idx(y)).unwrap(),
                            cls.contains(Elem::Idx(y)),
                            "{} x={x} y={y}",
                            s.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn quotient_of_capped_add_collapses_saturated_tail() {
        // n.x eventually pins every positive element to the cap, so all
        // positives are identified and 0 stays alone: quotient has 2 classes
        let m3 = Semigroup::capped_add(3).unwrap();
        let q = quotient(&m3, &Multipliers::All).unwrap();
        assert_eq!(q.classes.len(), 2);
        assert_eq!(q.quotient.order(), Some(2));
        assert_eq!(q.projection, [0, 1, 1, 1]);
        assert!(check_cancellation(&m3, &Multipliers::All, &q).unwrap().is_empty());
    }

    #[test]
    fn quotient_identity_when_multiplier_one() {
        let c5 = Semigroup::cyclic(5).unwrap();
        let f = Multipliers::generated(&[1]).unwrap();
        let q = quotient(&c5, &f).unwrap();
        assert_eq!(q.classes.len(), 5);
        assert!(check_cancellation(&c5, &f, &q).unwrap().is_empty());
    }

    #[test]
    fn quotient_respects_structure_across_catalog() {
        for entry in catalog(6) {
            let s = &entry.carrier;
            for f in [Multipliers::All, Multipliers::generated(&[2]).unwrap()] {
                let q = quotient(s, &f).unwrap();
                let covered: usize = q.classes.iter().map(|c| c.len()).sum();
                assert_eq!(covered, s.order().unwrap(), "{}", s.name());
                assert!(
                    check_cancellation(s, &f, &q).unwrap().is_empty(),
                    "cancellation broken in {}",
                    s.name()
                );
            }
        }
    }
}
