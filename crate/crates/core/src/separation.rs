//! F-disjointness and the separation of disjoint sets by a
//! complementary convex pair.
//!
//! A and B are F-disjoint when [n]A and [n]B never meet for n in F.
//! For all multipliers at once the orbit of the pair ([n]A, [n]B)
//! decides this exactly. The separation routine grows an all-n
//! disjoint pair one element at a time — the extension lemma promises
//! one of the two sides always works — until the pair is complementary,
//! at which point both sides are convex for free. Every run emits a
//! certificate that can be re-checked from scratch.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::carrier::{Elem, Semigroup, Subset};
use crate::convexity::{
    decide_convex_all_n, decide_konvex_all_n, is_f_convex, is_f_konvex, sweep_convex,
    sweep_konvex,
};
use crate::error::{Error, Result};
use crate::hull::hull_formula;
use crate::iterate::{bfs_multiplicative, orbit};
use crate::multiplier::Multipliers;
use crate::setalg::{power_bits_bin, sumset_bits, sumset_power};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DisjointVerdict {
    Disjoint,
    Collision { n: Option<u64>, element: Elem },
}

/// Outcome of an exhaustive disjointness scan, with the periodicity
/// that bounds it (for generated multiplier sets `tail` counts explored
/// states and `cycle` is 0).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DisjointnessEvidence {
    pub verdict: DisjointVerdict,
    pub tail: usize,
    pub cycle: usize,
}

impl DisjointnessEvidence {
    pub fn disjoint(&self) -> bool {
        self.verdict == DisjointVerdict::Disjoint
    }
}

fn require_finite_pair<'a>(
    s: &Semigroup,
    a: &'a Subset,
    b: &'a Subset,
) -> Result<(&'a Bits, &'a Bits)> {
    s.check_owns(a)?;
    s.check_owns(b)?;
    match (a.bits(), b.bits()) {
        (Some(x), Some(y)) => Ok((x, y)),
        _ => Err(Error::SymbolicUnsupported),
    }
}

fn collision_element(x: &Bits, y: &Bits) -> Elem {
    let mut meet = x.clone();
    meet.intersect_with(y);
    Elem::Idx(meet.first().expect("nonempty intersection") as u32)
}

/// Are [n]A and [n]B disjoint for every n in the multiplier set?
pub fn are_f_disjoint(
    s: &Semigroup,
    f: &Multipliers,
    a: &Subset,
    b: &Subset,
) -> Result<DisjointnessEvidence> {
    let (ab, bb) = require_finite_pair(s, a, b)?;
    match f {
        Multipliers::All => {
            let orb = orbit((ab.clone(), bb.clone()), |(pa, pb)| {
                (sumset_bits(s, pa, ab).0, sumset_bits(s, pb, bb).0)
            });
            for (i, (pa, pb)) in orb.states.iter().enumerate() {
                if pa.intersects(pb) {
                    return Ok(DisjointnessEvidence {
                        verdict: DisjointVerdict::Collision {
                            n: Some(i as u64 + 1),
                            element: collision_element(pa, pb),
                        },
                        tail: orb.tail,
                        cycle: orb.cycle,
                    });
                }
            }
            debug_assert!(!ab.intersects(bb), "all-n disjoint sets must be disjoint");
            Ok(DisjointnessEvidence {
                verdict: DisjointVerdict::Disjoint,
                tail: orb.tail,
                cycle: orb.cycle,
            })
        }
        Multipliers::Generated(gens) => {
            let reached = bfs_multiplicative(
                gens,
                |g| (power_bits_bin(s, g, ab), power_bits_bin(s, g, bb)),
                |(pa, pb), g| (power_bits_bin(s, g, pa), power_bits_bin(s, g, pb)),
            );
            for r in &reached {
                let (pa, pb) = &r.state;
                if pa.intersects(pb) {
                    return Ok(DisjointnessEvidence {
                        verdict: DisjointVerdict::Collision {
                            n: r.n,
                            element: collision_element(pa, pb),
                        },
                        tail: reached.len(),
                        cycle: 0,
                    });
                }
            }
            debug_assert!(!ab.intersects(bb), "all-n disjoint sets must be disjoint");
            Ok(DisjointnessEvidence {
                verdict: DisjointVerdict::Disjoint,
                tail: reached.len(),
                cycle: 0,
            })
        }
    }
}

/// Checks [n]A against [n]B for the listed multipliers only. Works on
/// the integer carriers. Returns the first collision found.
pub fn are_ns_disjoint(
    s: &Semigroup,
    ns: &[u64],
    a: &Subset,
    b: &Subset,
) -> Result<Option<(u64, Elem)>> {
    if ns.is_empty() {
        return Err(Error::EmptyMultipliers);
    }
    for &n in ns {
        let pa = sumset_power(s, n, a)?;
        let pb = sumset_power(s, n, b)?;
        let meet = pa.intersection(&pb)?;
        if let Some(w) = meet.first() {
            return Ok(Some((n, w)));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

#[derive(Debug, Clone)]
pub struct Extension {
    pub side: Side,
    pub a: Subset,
    pub b: Subset,
}

fn describe_collision(s: &Semigroup, e: &DisjointnessEvidence) -> String {
    match e.verdict {
        DisjointVerdict::Disjoint => "no collision".into(),
        DisjointVerdict::Collision { n: Some(n), element } => {
            format!("[{n}]A meets [{n}]B at {}", s.label(element))
        }
        DisjointVerdict::Collision { n: None, element } => {
            format!("sum sets meet at {}", s.label(element))
        }
    }
}

/// One step of the extension lemma: an all-n disjoint pair absorbs an
/// unassigned element on the A side if that stays disjoint, otherwise
/// on the B side. An element already assigned is a no-op for its side.
/// Failure of both sides would refute the lemma.
pub fn extend_step(s: &Semigroup, a: &Subset, b: &Subset, x: Elem) -> Result<Extension> {
    require_finite_pair(s, a, b)?;
    if !s.contains_elem(x) {
        return Err(Error::InvalidElement(s.label(x)));
    }
    if a.contains(x) {
        return Ok(Extension { side: Side::A, a: a.clone(), b: b.clone() });
    }
    if b.contains(x) {
        return Ok(Extension { side: Side::B, a: a.clone(), b: b.clone() });
    }
    let start = are_f_disjoint(s, &Multipliers::All, a, b)?;
    if !start.disjoint() {
        return Err(Error::NotDisjointInput(describe_collision(s, &start)));
    }
    let xs = s.singleton(x)?;
    let wide_a = a.union(&xs)?;
    if are_f_disjoint(s, &Multipliers::All, &wide_a, b)?.disjoint() {
        return Ok(Extension { side: Side::A, a: wide_a, b: b.clone() });
    }
    let wide_b = b.union(&xs)?;
    if are_f_disjoint(s, &Multipliers::All, a, &wide_b)?.disjoint() {
        return Ok(Extension { side: Side::B, a: a.clone(), b: wide_b });
    }
    Err(Error::LemmaViolation(format!(
        "{} extends neither side of an all-n disjoint pair",
        s.label(x)
    )))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LogEntry {
    pub element: Elem,
    pub side: Side,
}

/// The output of a separation run: a complementary all-n disjoint pair
/// swallowing the inputs, the insertion order that produced it, and the
/// properties the construction guarantees, re-derived from the result.
#[derive(Debug, Clone)]
pub struct SeparationCertificate {
    pub a: Subset,
    pub b: Subset,
    pub log: Vec<LogEntry>,
    pub evidence: DisjointnessEvidence,
    pub convex_a: bool,
    pub convex_b: bool,
    pub carrier_konvex: bool,
    pub konvex_a: Option<bool>,
    pub konvex_b: Option<bool>,
}

/// Separates an all-n disjoint pair by a complementary convex pair,
/// absorbing the carrier one element at a time in ascending order,
/// A side preferred. Deterministic.
pub fn stone_separate(s: &Semigroup, a0: &Subset, b0: &Subset) -> Result<SeparationCertificate> {
    require_finite_pair(s, a0, b0)?;
    let start = are_f_disjoint(s, &Multipliers::All, a0, b0)?;
    if !start.disjoint() {
        return Err(Error::NotDisjointInput(describe_collision(s, &start)));
    }
    let order = s.order().expect("finite carrier");
    let mut a = a0.clone();
    let mut b = b0.clone();
    let mut log = Vec::new();
    for i in 0..order as u32 {
        let x = Elem::Idx(i);
        if a.contains(x) || b.contains(x) {
            continue;
        }
        let ext = extend_step(s, &a, &b, x)?;
        log.push(LogEntry { element: x, side: ext.side });
        a = ext.a;
        b = ext.b;
    }
    let evidence = are_f_disjoint(s, &Multipliers::All, &a, &b)?;
    let convex_a = decide_convex_all_n(s, &a)?.holds();
    let convex_b = decide_convex_all_n(s, &b)?.holds();
    let carrier_konvex = decide_konvex_all_n(s, &s.full_subset()?)?.holds();
    let (konvex_a, konvex_b) = if carrier_konvex {
        (
            Some(decide_konvex_all_n(s, &a)?.holds()),
            Some(decide_konvex_all_n(s, &b)?.holds()),
        )
    } else {
        (None, None)
    };
    Ok(SeparationCertificate {
        a,
        b,
        log,
        evidence,
        convex_a,
        convex_b,
        carrier_konvex,
        konvex_a,
        konvex_b,
    })
}

/// A multiplier bound large enough that every property checked below
/// must show a failure within it if it fails at all: one full period
/// past the tail of each orbit involved — both sides, the whole
/// carrier, and the pair of sum sets. Re-derived here rather than
/// trusted from the certificate.
fn certificate_bound(s: &Semigroup, cert: &SeparationCertificate) -> Result<u64> {
    let (ab, bb) = require_finite_pair(s, &cert.a, &cert.b)?;
    let full = s.full_subset()?;
    let fb = full.bits().expect("finite carrier");
    let mut bound = cert.evidence.tail + 2 * cert.evidence.cycle;
    for bits in [ab, bb, fb] {
        let orb = crate::iterate::multiplier_orbit(s, bits);
        bound = bound.max(orb.tail + 2 * orb.cycle);
    }
    let pair = orbit((ab.clone(), bb.clone()), |(pa, pb)| {
        (sumset_bits(s, pa, ab).0, sumset_bits(s, pb, bb).0)
    });
    bound = bound.max(pair.tail + 2 * pair.cycle);
    Ok(bound.max(4) as u64)
}

/// Re-checks a certificate from scratch: complementarity, containment
/// of the inputs, a faithful replay of the insertion log, and then
/// disjointness and the convexity flags by direct per-multiplier
/// sweeps out to [`certificate_bound`]. Returns the list of
/// discrepancies; a sound certificate yields none.
pub fn verify_certificate(
    s: &Semigroup,
    cert: &SeparationCertificate,
    a0: &Subset,
    b0: &Subset,
) -> Result<Vec<String>> {
    let mut bad: Vec<String> = Vec::new();
    require_finite_pair(s, &cert.a, &cert.b)?;

    if cert.a.union(&cert.b)? != s.full_subset()? {
        bad.push("sides do not cover the carrier".into());
    }
    if cert.a.intersects(&cert.b)? {
        bad.push("sides overlap".into());
    }
    if !a0.is_subset_of(&cert.a)? {
        bad.push("A side lost an input element".into());
    }
    if !b0.is_subset_of(&cert.b)? {
        bad.push("B side lost an input element".into());
    }

    let mut ra = a0.clone();
    let mut rb = b0.clone();
    for entry in &cert.log {
        if ra.contains(entry.element) || rb.contains(entry.element) {
            bad.push(format!("log assigns {} twice", s.label(entry.element)));
            continue;
        }
        let xs = s.singleton(entry.element)?;
        match entry.side {
            Side::A => ra = ra.union(&xs)?,
            Side::B => rb = rb.union(&xs)?,
        }
    }
    if ra != cert.a || rb != cert.b {
        bad.push("replaying the log does not reproduce the sides".into());
    }

    if !cert.evidence.disjoint() {
        bad.push("certificate records a collision".into());
    }
    let bound = certificate_bound(s, cert)?;
    let ns: Vec<u64> = (1..=bound).collect();
    if let Some((n, w)) = are_ns_disjoint(s, &ns, &cert.a, &cert.b)? {
        bad.push(format!("[{n}]A meets [{n}]B at {}", s.label(w)));
    }

    let sweep_a = sweep_convex(s, &cert.a, bound)?;
    let sweep_b = sweep_convex(s, &cert.b, bound)?;
    if !cert.convex_a || sweep_a.is_some() {
        bad.push("A side is not convex".into());
    }
    if !cert.convex_b || sweep_b.is_some() {
        bad.push("B side is not convex".into());
    }

    let carrier_sweep = sweep_konvex(s, &s.full_subset()?, bound)?;
    if cert.carrier_konvex != carrier_sweep.is_none() {
        bad.push("carrier konvexity flag is wrong".into());
    }
    match (cert.carrier_konvex, cert.konvex_a, cert.konvex_b) {
        (true, Some(ka), Some(kb)) => {
            if !ka || sweep_konvex(s, &cert.a, bound)?.is_some() {
                bad.push("A side is not konvex despite a konvex carrier".into());
            }
            if !kb || sweep_konvex(s, &cert.b, bound)?.is_some() {
                bad.push("B side is not konvex despite a konvex carrier".into());
            }
        }
        (false, None, None) => {}
        _ => bad.push("konvexity flags are inconsistent".into()),
    }

    Ok(bad)
}

/// A konvex superset of A for the given multiplier set, if one exists.
/// Exhaustive over the extensions of A, smallest first.
pub fn konvex_superset(
    s: &Semigroup,
    f: &Multipliers,
    a: &Subset,
) -> Result<Option<Subset>> {
    s.check_owns(a)?;
    let base = a.bits().ok_or(Error::SymbolicUnsupported)?;
    let order = s.order().expect("finite carrier");
    let free: Vec<usize> = (0..order).filter(|&i| !base.contains(i)).collect();
    if free.len() > 16 {
        return Err(Error::BadParams("carrier too large for envelope search".into()));
    }
    let mut masks: Vec<u32> = (0..(1u32 << free.len())).collect();
    masks.sort_by_key(|m| m.count_ones());
    for mask in masks {
        let mut cand = base.clone();
        for (j, &i) in free.iter().enumerate() {
            if mask & (1 << j) != 0 {
                cand.insert(i);
            }
        }
        let cand = Subset::from_bits(s.id(), cand);
        if is_f_konvex(s, f, &cand)? {
            return Ok(Some(cand));
        }
    }
    Ok(None)
}

/// How disjointness propagates to hulls: F-disjoint sets have disjoint
/// hulls, and with a konvex cover around one of them, disjoint hulls
/// force F-disjointness back.
#[derive(Debug, Clone)]
pub struct HullDisjointness {
    pub f_disjoint: bool,
    pub hulls_disjoint: bool,
    pub forward_ok: bool,
    /// Checked only when a cover was supplied.
    pub converse_ok: Option<bool>,
}

/// `cover`, when given, must be an F-konvex superset of A or of B; it
/// licenses the converse direction.
pub fn check_hull_disjointness(
    s: &Semigroup,
    f: &Multipliers,
    a: &Subset,
    b: &Subset,
    cover: Option<&Subset>,
) -> Result<HullDisjointness> {
    if let Some(c) = cover {
        s.check_owns(c)?;
        if !a.is_subset_of(c)? && !b.is_subset_of(c)? {
            return Err(Error::CoverMissesSet(0));
        }
        if !is_f_konvex(s, f, c)? {
            return Err(Error::CoverNotKonvex(0));
        }
    }
    let f_disjoint = are_f_disjoint(s, f, a, b)?.disjoint();
    let ha = hull_formula(s, f, a)?.set;
    let hb = hull_formula(s, f, b)?.set;
    let hulls_disjoint = !ha.intersects(&hb)?;
    let forward_ok = !f_disjoint || hulls_disjoint;
    let converse_ok = cover.map(|_| !hulls_disjoint || f_disjoint);
    Ok(HullDisjointness { f_disjoint, hulls_disjoint, forward_ok, converse_ok })
}

/// The complement pair (A, S \ A): if it is F-disjoint then both sides
/// are F-convex, and both are F-konvex whenever the carrier is.
#[derive(Debug, Clone)]
pub struct ComplementReport {
    pub complement: Subset,
    pub f_disjoint: bool,
    pub convex_a: Option<bool>,
    pub convex_b: Option<bool>,
    pub carrier_konvex: bool,
    pub konvex_a: Option<bool>,
    pub konvex_b: Option<bool>,
}

impl ComplementReport {
    /// Everything the complement pair is entitled to actually holds.
    pub fn laws_hold(&self) -> bool {
        if !self.f_disjoint {
            return true;
        }
        let convex = self.convex_a == Some(true) && self.convex_b == Some(true);
        let konvex = !self.carrier_konvex
            || (self.konvex_a == Some(true) && self.konvex_b == Some(true));
        convex && konvex
    }
}

pub fn complementary_check(
    s: &Semigroup,
    f: &Multipliers,
    a: &Subset,
) -> Result<ComplementReport> {
    s.check_owns(a)?;
    let full = s.full_subset()?;
    let b = full.difference(a)?;
    let f_disjoint = are_f_disjoint(s, f, a, &b)?.disjoint();
    let carrier_konvex = is_f_konvex(s, f, &full)?;
    let (convex_a, convex_b, konvex_a, konvex_b) = if f_disjoint {
        let ka = if carrier_konvex { Some(is_f_konvex(s, f, a)?) } else { None };
        let kb = if carrier_konvex { Some(is_f_konvex(s, f, &b)?) } else { None };
        (Some(is_f_convex(s, f, a)?), Some(is_f_convex(s, f, &b)?), ka, kb)
    } else {
        (None, None, None, None)
    };
    Ok(ComplementReport {
        complement: b,
        f_disjoint,
        convex_a,
        convex_b,
        carrier_konvex,
        konvex_a,
        konvex_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::carrier::{catalog, Semigroup};
    use crate::sample::{random_subset, rng_from_seed};

    #[test]
    fn capped_add_zero_and_cap_stay_disjoint_forever() {
        let m3 = Semigroup::capped_add(3).unwrap();
        let a = m3.subset_from_labels(&["0"]).unwrap();
        let b = m3.subset_from_labels(&["3"]).unwrap();
        let ev = are_f_disjoint(&m3, &Multipliers::All, &a, &b).unwrap();
        assert!(ev.disjoint());
    }

    #[test]
    fn cyclic_five_singletons_collide_at_five() {
        let c5 = Semigroup::cyclic(5).unwrap();
        let a = c5.subset_from_labels(&["1"]).unwrap();
        let b = c5.subset_from_labels(&["2"]).unwrap();
        let ev = are_f_disjoint(&c5, &Multipliers::All, &a, &b).unwrap();
        assert_eq!(
            ev.verdict,
            DisjointVerdict::Collision { n: Some(5), element: Elem::Idx(0) }
        );
        // restricted to powers of two they never meet: 2^k and 2^(k+1)
        // walk different residues mod 5
        let f2 = Multipliers::generated(&[2]).unwrap();
        assert!(are_f_disjoint(&c5, &f2, &a, &b).unwrap().disjoint());
    }

    #[test]
    fn explicit_multiplier_scan_works_on_integers() {
        let z = Semigroup::int_additive();
        let a = z.subset_from_ints(&[0, 4]).unwrap();
        let b = z.subset_from_ints(&[1]).unwrap();
        assert_eq!(are_ns_disjoint(&z, &[1, 2, 3], &a, &b).unwrap(), None);
        let c = z.subset_from_ints(&[0, 2]).unwrap();
        assert_eq!(
            are_ns_disjoint(&z, &[1, 2], &c, &b).unwrap(),
            Some((2, Elem::Int(2)))
        );
        assert!(matches!(
            are_f_disjoint(&z, &Multipliers::All, &a, &b),
            Err(Error::SymbolicUnsupported)
        ));
    }

    #[test]
    fn extension_prefers_a_side_but_switches_when_forced() {
        let m3 = Semigroup::capped_add(3).unwrap();
        let a = m3.subset_from_labels(&["0"]).unwrap();
        let b = m3.subset_from_labels(&["3"]).unwrap();
        // 1 cannot join A: 1+1+1 saturates to 3 = [3]B
        let ext = extend_step(&m3, &a, &b, Elem::Idx(1)).unwrap();
        assert_eq!(ext.side, Side::B);
        assert_eq!(m3.sorted_labels(&ext.b), ["1", "3"]);
    }

    #[test]
    fn extension_noop_and_bad_inputs() {
        let m3 = Semigroup::capped_add(3).unwrap();
        let a = m3.subset_from_labels(&["0"]).unwrap();
        let b = m3.subset_from_labels(&["3"]).unwrap();
        let noop = extend_step(&m3, &a, &b, Elem::Idx(0)).unwrap();
        assert_eq!(noop.side, Side::A);
        assert_eq!(noop.a, a);
        assert_eq!(noop.b, b);
        let overlapping = m3.subset_from_labels(&["0", "1"]).unwrap();
        let colliding = m3.subset_from_labels(&["1", "3"]).unwrap();
        assert!(matches!(
            extend_step(&m3, &overlapping, &colliding, Elem::Idx(2)),
            Err(Error::NotDisjointInput(_))
        ));
    }

    #[test]
    fn separation_of_capped_add_pins_zero_alone() {
        let m3 = Semigroup::capped_add(3).unwrap();
        let a0 = m3.subset_from_labels(&["0"]).unwrap();
        let b0 = m3.subset_from_labels(&["3"]).unwrap();
        let cert = stone_separate(&m3, &a0, &b0).unwrap();
        assert_eq!(m3.sorted_labels(&cert.a), ["0"]);
        assert_eq!(m3.sorted_labels(&cert.b), ["1", "2", "3"]);
        assert!(cert.convex_a && cert.convex_b);
        // 1 = 1+0+0 lies in [3]S but 3S = {0,3}, so the carrier is not konvex
        assert!(!cert.carrier_konvex);
        assert_eq!(cert.konvex_a, None);
        assert!(verify_certificate(&m3, &cert, &a0, &b0).unwrap().is_empty());
    }

    #[test]
    fn separation_rejects_colliding_inputs() {
        let c5 = Semigroup::cyclic(5).unwrap();
        let a0 = c5.subset_from_labels(&["1"]).unwrap();
        let b0 = c5.subset_from_labels(&["2"]).unwrap();
        let err = stone_separate(&c5, &a0, &b0).unwrap_err();
        match err {
            Error::NotDisjointInput(msg) => assert!(msg.contains("[5]A"), "{msg}"),
            other => panic!("expected collision report, got {other:?}"),
        }
    }

    #[test]
    fn separation_is_deterministic_and_certificates_verify() {
        for entry in catalog(6) {
            let s = &entry.carrier;
            let mut rng = rng_from_seed(41);
            let mut separated = 0;
            for _ in 0..30 {
                let a0 = random_subset(s, &mut rng);
                let b0 = random_subset(s, &mut rng).difference(&a0).unwrap();
                if !are_f_disjoint(s, &Multipliers::All, &a0, &b0).unwrap().disjoint() {
                    continue;
                }
                let cert = stone_separate(s, &a0, &b0).unwrap();
                let again = stone_separate(s, &a0, &b0).unwrap();
                assert_eq!(cert.a, again.a);
                assert_eq!(cert.b, again.b);
                assert_eq!(cert.log, again.log);
                assert!(cert.convex_a && cert.convex_b, "{}", s.name());
                assert!(
                    verify_certificate(s, &cert, &a0, &b0).unwrap().is_empty(),
                    "{}",
                    s.name()
                );
                separated += 1;
            }
            assert!(separated > 0, "no disjoint pairs sampled in {}", s.name());
        }
    }

    #[test]
    fn tampered_certificates_are_caught() {
        let m3 = Semigroup::capped_add(3).unwrap();
        let a0 = m3.subset_from_labels(&["0"]).unwrap();
        let b0 = m3.subset_from_labels(&["3"]).unwrap();
        let cert = stone_separate(&m3, &a0, &b0).unwrap();

        let mut moved = cert.clone();
        moved.a = m3.subset_from_labels(&["0", "1"]).unwrap();
        moved.b = m3.subset_from_labels(&["2", "3"]).unwrap();
        assert!(!verify_certificate(&m3, &moved, &a0, &b0).unwrap().is_empty());

        let mut flagged = cert.clone();
        flagged.carrier_konvex = true;
        flagged.konvex_a = Some(true);
        flagged.konvex_b = Some(true);
        assert!(!verify_certificate(&m3, &flagged, &a0, &b0).unwrap().is_empty());

        let mut dropped = cert;
        dropped.log.clear();
        assert!(!verify_certificate(&m3, &dropped, &a0, &b0).unwrap().is_empty());
    }

    #[test]
    fn extension_lemma_holds_across_catalog() {
        for entry in catalog(6) {
            let s = &entry.carrier;
            let order = s.order().unwrap() as u32;
            let mut rng = rng_from_seed(59);
            for _ in 0..20 {
                let a = random_subset(s, &mut rng);
                let b = random_subset(s, &mut rng).difference(&a).unwrap();
                if !are_f_disjoint(s, &Multipliers::All, &a, &b).unwrap().disjoint() {
                    continue;
                }
                for i in 0..order {
                    let x = Elem::Idx(i);
                    if a.contains(x) || b.contains(x) {
                        continue;
                    }
                    extend_step(s, &a, &b, x).unwrap_or_else(|e| {
                        panic!("extension failed in {} at {}: {e}", s.name(), s.label(x))
                    });
                }
            }
        }
    }

    #[test]
    fn hull_disjointness_propagation_in_cyclic_six() {
        let c6 = Semigroup::cyclic(6).unwrap();
        let f = Multipliers::generated(&[2]).unwrap();
        let a = c6.subset_from_labels(&["1"]).unwrap();
        let b = c6.subset_from_labels(&["2"]).unwrap();
        // singletons are konvex here ([n]{x} = {nx} = n{x}), so A covers itself
        let rep = check_hull_disjointness(&c6, &f, &a, &b, Some(&a)).unwrap();
        assert!(rep.f_disjoint);
        assert!(rep.hulls_disjoint);
        assert!(rep.forward_ok);
        assert_eq!(rep.converse_ok, Some(true));

        let not_konvex = c6.subset_from_labels(&["0", "3"]).unwrap();
        assert!(matches!(
            check_hull_disjointness(&c6, &Multipliers::All, &not_konvex, &b, Some(&not_konvex)),
            Err(Error::CoverNotKonvex(0))
        ));
    }

    #[test]
    fn propagation_laws_hold_on_samples() {
        for entry in catalog(5) {
            let s = &entry.carrier;
            let mut rng = rng_from_seed(67);
            for f in [Multipliers::All, Multipliers::generated(&[2, 3]).unwrap()] {
                for _ in 0..12 {
                    let a = random_subset(s, &mut rng);
                    let b = random_subset(s, &mut rng);
                    let cover = konvex_superset(s, &f, &a).unwrap();
                    let rep = check_hull_disjointness(s, &f, &a, &b, cover.as_ref()).unwrap();
                    assert!(rep.forward_ok, "{}", s.name());
                    if let Some(ok) = rep.converse_ok {
                        assert!(ok, "{}", s.name());
                    }
                }
            }
        }
    }

    #[test]
    fn complement_pair_laws() {
        let m3 = Semigroup::capped_add(3).unwrap();
        let a = m3.subset_from_labels(&["0"]).unwrap();
        let rep = complementary_check(&m3, &Multipliers::All, &a).unwrap();
        assert!(rep.f_disjoint);
        assert_eq!(rep.convex_a, Some(true));
        assert_eq!(rep.convex_b, Some(true));
        assert!(!rep.carrier_konvex);
        assert!(rep.laws_hold());

        // a semilattice is konvex as a whole, so both sides must be too
        let l4 = Semigroup::chain_min(4).unwrap();
        let down = l4.subset_from_labels(&["1", "2"]).unwrap();
        let rep = complementary_check(&l4, &Multipliers::All, &down).unwrap();
        assert!(rep.carrier_konvex);
        if rep.f_disjoint {
            assert_eq!(rep.konvex_a, Some(true));
            assert_eq!(rep.konvex_b, Some(true));
        }
        assert!(rep.laws_hold());

        for entry in catalog(5) {
            let s = &entry.carrier;
            let mut rng = rng_from_seed(71);
            for _ in 0..15 {
                let a = random_subset(s, &mut rng);
                let rep = complementary_check(s, &Multipliers::All, &a).unwrap();
                assert!(rep.laws_hold(), "{}", s.name());
            }
        }
    }
}
