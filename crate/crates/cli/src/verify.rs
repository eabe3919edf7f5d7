//! The acceptance suite behind `konvex verify`: ten independent checks,
//! each reducing one guaranteed property to computation at desk scale.
//! Shared with the integration tests so the command line and CI run the
//! same code.

use std::time::{Duration, Instant};

use konvex_core::carrier::{catalog, Elem, Semigroup, Subset};
use konvex_core::convexity::{
    check_structure, decide_convex_all_n, decide_konvex_all_n, is_n_convex, is_n_konvex,
    n_convex_witness, n_konvex_witness, sweep_convex, sweep_konvex, Decision,
};
use konvex_core::error::{Error, Result};
use konvex_core::hull::{
    check_cancellation, hull_fixedpoint, hull_formula, hull_of_union, quotient, sandwich,
};
use konvex_core::multiplier::Multipliers;
use konvex_core::sample::{draw, random_subset, rng_from_seed, sample_carrier};
use konvex_core::separation::{
    are_f_disjoint, are_ns_disjoint, extend_step, konvex_superset, stone_separate,
    verify_certificate, DisjointVerdict,
};
use konvex_core::setalg::{check_laws, preimage, sumset, sumset_power, RelStatus};

pub const DEFAULT_SEED: u64 = 0xC0FFEE;

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub index: usize,
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

impl CheckOutcome {
    pub fn line(&self) -> String {
        format!(
            "check {:>2}  {:<24} {}  {}",
            self.index,
            self.name,
            if self.pass { "PASS" } else { "FAIL" },
            self.detail
        )
    }
}

fn outcome(index: usize, name: &'static str, r: Result<(bool, String)>) -> CheckOutcome {
    match r {
        Ok((pass, detail)) => CheckOutcome { index, name, pass, detail },
        Err(e) => CheckOutcome { index, name, pass: false, detail: format!("error: {e}") },
    }
}

/// All ten checks in order. `inject_fault` corrupts one frozen
/// expectation to prove that a mismatch actually fails the suite.
pub fn run_all(order_cap: usize, seed: u64, inject_fault: bool) -> Vec<CheckOutcome> {
    vec![
        check_interaction_laws(order_cap, seed),
        check_proper_inclusions(inject_fault),
        check_counterexamples(),
        check_spectrum_structure(order_cap, seed),
        check_hull_routes(order_cap, seed),
        check_union_hulls(order_cap, seed),
        check_partition_quotient(order_cap),
        check_extension_lemma(order_cap, seed),
        check_separation_end_to_end(order_cap, seed),
        check_decision_soundness(order_cap, seed),
    ]
}

pub fn all_pass(outcomes: &[CheckOutcome]) -> bool {
    outcomes.iter().all(|o| o.pass)
}

/// 1: the interaction laws of scaling, preimage and sumset powers hold
/// on every random instance across the catalog.
pub fn check_interaction_laws(order_cap: usize, seed: u64) -> CheckOutcome {
    outcome(1, "interaction laws", (|| {
        let t0 = Instant::now();
        let entries = catalog(order_cap.min(8));
        let mut violations = 0usize;
        let mut instances = 0usize;
        for (ci, entry) in entries.iter().enumerate() {
            let s = &entry.carrier;
            let mut rng = rng_from_seed(seed ^ (ci as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15));
            for _ in 0..200 {
                let a = random_subset(s, &mut rng);
                let b = random_subset(s, &mut rng);
                let k = 1 + draw(&mut rng, 4) as u64;
                let n = 1 + draw(&mut rng, 4) as u64;
                instances += 1;
                if !check_laws(s, k, n, &a, &b)?.all_hold() {
                    violations += 1;
                }
            }
        }
        let in_budget = t0.elapsed() <= Duration::from_secs(60);
        let enough = entries.len() >= 20 || order_cap < 8;
        let pass = enough && violations == 0 && in_budget;
        Ok((pass, format!(
            "{} carriers x 200 instances ({instances} law tables), {violations} violations{}",
            entries.len(),
            if in_budget { "" } else { ", over the 60s budget" }
        )))
    })())
}

/// The five relations that are inclusions but not equalities on the
/// odd-number fixture A = B = {1,3}, k = n = 2.
const ODD_PROPER: [&str; 5] = [
    "(k+n)A <= kA+nA",
    "(kn)(k^-1 A + n^-1 A) <= kA+nA",
    "n^-1 A + n^-1 B <= n^-1(A+B)",
    "[k](n^-1 A) <= n^-1([k]A)",
    "k(n^-1 A) <= n^-1(kA)",
];

/// 2: the odd-number fixture separates the inclusion-only laws from the
/// equalities: exactly the five expected relations come out strict.
pub fn check_proper_inclusions(inject_fault: bool) -> CheckOutcome {
    outcome(2, "proper inclusions", (|| {
        let z = Semigroup::int_additive();
        let a = z.subset_from_ints(&[1, 3])?;
        let report = check_laws(&z, 2, 2, &a, &a)?;
        let mut expected: Vec<(&str, RelStatus)> = report
            .relations
            .iter()
            .map(|rel| {
                let want = if ODD_PROPER.contains(&rel.name) {
                    RelStatus::ProperInclusion
                } else {
                    RelStatus::Equal
                };
                (rel.name, want)
            })
            .collect();
        if inject_fault {
            // deliberately demand equality where the fixture is strict,
            // to prove a wrong expectation cannot pass silently
            if let Some(e) = expected.iter_mut().find(|(name, _)| *name == ODD_PROPER[0]) {
                e.1 = RelStatus::Equal;
            }
        }
        let mut wrong: Vec<String> = Vec::new();
        for (rel, (name, want)) in report.relations.iter().zip(&expected) {
            debug_assert_eq!(rel.name, *name);
            if rel.status != *want {
                wrong.push(format!("{name}: {:?} expected {want:?}", rel.status));
            }
        }
        let strict = expected.iter().filter(|(_, w)| *w == RelStatus::ProperInclusion).count();
        let detail = if wrong.is_empty() {
            format!(
                "A=B={{1,3}}, k=n=2: {strict} strict inclusions, {} equalities, as frozen",
                expected.len() - strict
            )
        } else {
            let mut d = wrong.join("; ");
            if inject_fault {
                d.push_str(" (fault injected)");
            }
            d
        };
        Ok((wrong.is_empty(), detail))
    })())
}

fn konvex_subsets(s: &Semigroup, n: u64) -> Result<Vec<Subset>> {
    let order = s.order().expect("finite carrier");
    let mut out = Vec::new();
    for mask in 0u32..(1 << order) {
        let idx: Vec<u32> = (0..order as u32).filter(|i| mask >> i & 1 == 1).collect();
        let sub = s.subset_from_indices(&idx)?;
        if is_n_konvex(s, n, &sub)? {
            out.push(sub);
        }
    }
    Ok(out)
}

fn intersection_failure(s: &Semigroup, n: u64) -> Result<Option<(Subset, Subset)>> {
    let pool = konvex_subsets(s, n)?;
    for (i, a) in pool.iter().enumerate() {
        for b in &pool[i + 1..] {
            if !is_n_konvex(s, n, &a.intersection(b)?)? {
                return Ok(Some((a.clone(), b.clone())));
            }
        }
    }
    Ok(None)
}

/// First commutative carrier, in table-enumeration order, admitting
/// n-konvex sets with a non-konvex intersection.
fn intersection_failure_anywhere(
    max_order: usize,
) -> Result<Option<(Semigroup, u64, Subset, Subset)>> {
    for order in 2..=max_order {
        let cells: Vec<(usize, usize)> =
            (0..order).flat_map(|i| (i..order).map(move |j| (i, j))).collect();
        let labels: Vec<String> = (0..order).map(|i| i.to_string()).collect();
        let mut digits = vec![0u32; cells.len()];
        'tables: loop {
            let mut table = vec![0usize; order * order];
            for (d, &(i, j)) in digits.iter().zip(&cells) {
                table[i * order + j] = *d as usize;
                table[j * order + i] = *d as usize;
            }
            let at = |x: usize, y: usize| table[x * order + y];
            let mut assoc = true;
            'triples: for x in 0..order {
                for y in 0..order {
                    for z in 0..order {
                        if at(at(x, y), z) != at(x, at(y, z)) {
                            assoc = false;
                            break 'triples;
                        }
                    }
                }
            }
            if assoc {
                let rows: Vec<Vec<String>> = (0..order)
                    .map(|i| (0..order).map(|j| labels[at(i, j)].clone()).collect())
                    .collect();
                let s = Semigroup::build_cayley(&labels, &rows)?;
                for n in 2..=4 {
                    if let Some((a, b)) = intersection_failure(&s, n)? {
                        return Ok(Some((s, n, a, b)));
                    }
                }
            }
            // advance, last cell fastest, so sparse tables come first
            let mut pos = cells.len();
            loop {
                if pos == 0 {
                    break 'tables;
                }
                pos -= 1;
                digits[pos] += 1;
                if (digits[pos] as usize) < order {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
    Ok(None)
}

/// 3: the frozen counterexamples all reproduce: the convexity failures
/// on the integers, the sumset and power failures, the subgroup
/// preimage that is not konvex, and konvex sets with a non-konvex
/// intersection — the last provably absent from cyclic groups (searched
/// exhaustively) and first appearing in an order-4 commutative carrier.
pub fn check_counterexamples() -> CheckOutcome {
    outcome(3, "counterexamples", (|| {
        let mut bad: Vec<String> = Vec::new();
        let z = Semigroup::int_additive();

        let a01 = z.subset_from_ints(&[0, 1])?;
        if sweep_convex(&z, &a01, 12)?.is_some() {
            bad.push("{0,1} lost n-convexity".into());
        }
        let a02 = z.subset_from_ints(&[0, 2])?;
        if n_convex_witness(&z, 2, &a02)? != Some(Elem::Int(1)) {
            bad.push("{0,2} missing the 2-convexity witness 1".into());
        }

        for n in 2..=5u64 {
            let a = z.subset_from_ints(&[0, n as i64 - 1])?;
            let b = z.subset_from_ints(&[0, 2 * n as i64 - 1])?;
            let ab = sumset(&z, &a, &b)?;
            if !is_n_convex(&z, n, &a)? || !is_n_convex(&z, n, &b)? {
                bad.push(format!("a summand lost {n}-convexity"));
            }
            if is_n_convex(&z, n, &ab)? {
                bad.push(format!("the sumset is unexpectedly {n}-convex"));
            }
            // the parity witness n-1 + floor(n/2) sits in the preimage
            // of the n-th power but outside the sumset itself
            let w = Elem::Int(n as i64 - 1 + n as i64 / 2);
            let pre = preimage(&z, n, &sumset_power(&z, n, &ab)?)?;
            if !pre.contains(w) || ab.contains(w) {
                bad.push(format!("parity witness wrong for n={n}"));
            }
        }

        let m = Semigroup::int_no_one();
        let a = m.subset_from_ints(&[0, 2])?;
        if !is_n_convex(&m, 2, &a)? {
            bad.push("{0,2} not 2-convex before powering".into());
        }
        let p = sumset_power(&m, 2, &a)?;
        if n_convex_witness(&m, 2, &p)? != Some(Elem::Int(3)) {
            bad.push("[2]{0,2} missing the 2-convexity witness 3".into());
        }

        let c12 = Semigroup::cyclic(12)?;
        let h = preimage(&c12, 4, &c12.singleton(Elem::Idx(0))?)?;
        if h != c12.subset_from_labels(&["0", "3", "6", "9"])? {
            bad.push("4^-1{0} in the 12-cycle came out wrong".into());
        }
        if n_konvex_witness(&c12, 2, &h)? != Some(Elem::Idx(3)) {
            bad.push("subgroup preimage missing the 2-konvexity witness 3".into());
        }

        let mut cyclic_pairs = 0usize;
        for m_ord in 1..=12 {
            let s = Semigroup::cyclic(m_ord)?;
            for n in 2..=8 {
                if intersection_failure(&s, n)?.is_some() {
                    cyclic_pairs += 1;
                }
            }
        }
        if cyclic_pairs != 0 {
            bad.push(format!(
                "cyclic search found {cyclic_pairs} intersection failures; the coset argument is refuted"
            ));
        }
        let found = intersection_failure_anywhere(4)?;
        match &found {
            None => bad.push("no konvex-intersection failure up to order 4".into()),
            Some((s, n, wa, wb)) => {
                let inter = wa.intersection(wb)?;
                if !(is_n_konvex(s, *n, wa)?
                    && is_n_konvex(s, *n, wb)?
                    && !is_n_konvex(s, *n, &inter)?)
                {
                    bad.push("search returned a bogus intersection witness".into());
                }
            }
        }

        let detail = if bad.is_empty() {
            let (s, n, wa, wb) = found.as_ref().expect("witness verified");
            format!(
                "all fixtures reproduce; konvex-intersection failure absent from cyclic groups \
                 (m <= 12, n <= 8), first witness at order {}: n={n}, A={{{}}}, B={{{}}}",
                s.order().unwrap_or(0),
                s.sorted_labels(wa).join(","),
                s.sorted_labels(wb).join(","),
            )
        } else {
            bad.join("; ")
        };
        Ok((bad.is_empty(), detail))
    })())
}

/// 4: on every sampled set the konvex multipliers are closed under
/// products and the convex multipliers under divisors.
pub fn check_spectrum_structure(order_cap: usize, seed: u64) -> CheckOutcome {
    outcome(4, "spectrum structure", (|| {
        let entries = catalog(order_cap.min(8));
        let mut violations = 0usize;
        let mut checked = 0usize;
        for (ci, entry) in entries.iter().enumerate() {
            let s = &entry.carrier;
            let mut rng = rng_from_seed(seed ^ 0x5eed ^ ((ci as u64) << 32));
            for _ in 0..100 {
                let a = random_subset(s, &mut rng);
                checked += 1;
                if !check_structure(s, &a, 12)?.ok() {
                    violations += 1;
                }
            }
        }
        Ok((violations == 0, format!(
            "{checked} spectra to n_max=12 over {} carriers, {violations} closure violations",
            entries.len()
        )))
    })())
}

/// 5: the closed hull formula and the fixed-point iteration agree
/// everywhere, and the iteration stabilizes after one productive pass.
pub fn check_hull_routes(order_cap: usize, seed: u64) -> CheckOutcome {
    outcome(5, "hull routes", (|| {
        let t0 = Instant::now();
        let entries = catalog(order_cap.min(8));
        let mut rng = rng_from_seed(seed ^ 0x4a11);
        let mut mismatches = 0usize;
        let mut slow = 0usize;
        let total = 10_000usize;
        for i in 0..total {
            let s = &entries[i % entries.len()].carrier;
            let a = random_subset(s, &mut rng);
            let formula = hull_formula(s, &Multipliers::All, &a)?;
            let fixed = hull_fixedpoint(s, &Multipliers::All, &a)?;
            if formula.set != fixed.set {
                mismatches += 1;
            }
            if fixed.rounds > 2 {
                slow += 1;
            }
        }
        let in_budget = t0.elapsed() <= Duration::from_secs(120);
        let pass = mismatches == 0 && slow == 0 && in_budget;
        Ok((pass, format!(
            "{total} instances: {mismatches} route mismatches, {slow} fixpoints past one productive pass{}",
            if in_budget { "" } else { ", over the 120s budget" }
        )))
    })())
}

/// 6: for raw generator lists the three-set sandwich holds, and with
/// verified konvex covers the tuple bracket pins the hull exactly.
pub fn check_union_hulls(order_cap: usize, seed: u64) -> CheckOutcome {
    outcome(6, "union hulls", (|| {
        let entries = catalog(order_cap.min(8));
        let mut rng = rng_from_seed(seed ^ 0x5a2d);
        let mut sandwich_bad = 0usize;
        for i in 0..1000usize {
            let s = &entries[i % entries.len()].carrier;
            let a = random_subset(s, &mut rng);
            let mut ns: Vec<u64> = Vec::new();
            let count = 1 + draw(&mut rng, 3) as usize;
            while ns.len() < count {
                let g = 2 + draw(&mut rng, 5) as u64;
                if !ns.contains(&g) {
                    ns.push(g);
                }
            }
            if !sandwich(s, &ns, &a)?.inclusions_hold(&a)? {
                sandwich_bad += 1;
            }
        }

        let mut cover_bad = 0usize;
        let mut covered = 0usize;
        let mut attempts = 0usize;
        while covered < 500 && attempts < 20_000 {
            let s = &entries[attempts % entries.len()].carrier;
            attempts += 1;
            let parts = 2 + draw(&mut rng, 2) as usize;
            let sets: Vec<Subset> = (0..parts).map(|_| random_subset(s, &mut rng)).collect();
            let mut covers: Vec<Subset> = Vec::with_capacity(parts);
            for a in &sets {
                match konvex_superset(s, &Multipliers::All, a)? {
                    Some(c) => covers.push(c),
                    None => break,
                }
            }
            if covers.len() != parts {
                continue;
            }
            let rep = hull_of_union(s, &Multipliers::All, &sets, Some(&covers))?;
            covered += 1;
            if !rep.lower_ok || rep.upper_ok != Some(true) || rep.exact != Some(true) {
                cover_bad += 1;
            }
        }
        let pass = sandwich_bad == 0 && cover_bad == 0 && covered == 500;
        Ok((pass, format!(
            "1000 generator sandwiches ({sandwich_bad} broken); {covered} covered unions in {attempts} attempts ({cover_bad} off the exact bracket)"
        )))
    })())
}

/// 7: singleton hulls partition every catalog carrier, the quotient
/// construction is well defined, and cancellation holds in it.
pub fn check_partition_quotient(order_cap: usize) -> CheckOutcome {
    outcome(7, "partition and quotient", (|| {
        let entries = catalog(order_cap.min(8));
        let fams = [
            Multipliers::All,
            Multipliers::generated(&[2])?,
            Multipliers::generated(&[2, 3])?,
        ];
        let mut bad: Vec<String> = Vec::new();
        let mut built = 0usize;
        for entry in &entries {
            let s = &entry.carrier;
            let order = s.order().unwrap_or(0);
            for f in &fams {
                let q = match quotient(s, f) {
                    Ok(q) => q,
                    Err(e) => {
                        bad.push(format!("{}: {e}", entry.name));
                        continue;
                    }
                };
                built += 1;
                let covered: usize = q.classes.iter().map(|c| c.len()).sum();
                if covered != order {
                    bad.push(format!("{}: classes do not cover the carrier", entry.name));
                }
                if matches!(f, Multipliers::All) {
                    // the classes really are the singleton hulls,
                    // recomputed by the independent hull route
                    for (k, class) in q.classes.iter().enumerate() {
                        let rep = Elem::Idx(q.reps[k]);
                        let h = hull_formula(s, f, &s.singleton(rep)?)?.set;
                        if &h != class {
                            bad.push(format!("{}: class differs from singleton hull", entry.name));
                        }
                    }
                }
                let pairs = check_cancellation(s, f, &q)?;
                if !pairs.is_empty() {
                    bad.push(format!(
                        "{}: cancellation fails for {} class pairs",
                        entry.name,
                        pairs.len()
                    ));
                }
            }
        }
        let detail = if bad.is_empty() {
            format!(
                "{built} quotients over {} carriers x 3 multiplier sets, cancellation clean",
                entries.len()
            )
        } else {
            bad.join("; ")
        };
        Ok((bad.is_empty(), detail))
    })())
}

/// 8: every all-n disjoint pair absorbs every element on one side or
/// the other — exhaustively to order 4, sampled at orders 5 and 6.
pub fn check_extension_lemma(order_cap: usize, seed: u64) -> CheckOutcome {
    outcome(8, "extension lemma", (|| {
        let entries = catalog(order_cap.min(6));
        let mut lemma_failures = 0usize;
        let mut pairs = 0usize;
        let mut steps = 0usize;

        for entry in entries.iter().filter(|e| e.carrier.order().unwrap_or(7) <= 4) {
            let s = &entry.carrier;
            let order = s.order().expect("finite carrier");
            let mut assign = vec![0u8; order];
            loop {
                let a_idx: Vec<u32> =
                    (0..order as u32).filter(|&i| assign[i as usize] == 1).collect();
                let b_idx: Vec<u32> =
                    (0..order as u32).filter(|&i| assign[i as usize] == 2).collect();
                let a = s.subset_from_indices(&a_idx)?;
                let b = s.subset_from_indices(&b_idx)?;
                if are_f_disjoint(s, &Multipliers::All, &a, &b)?.disjoint() {
                    pairs += 1;
                    for x in 0..order as u32 {
                        steps += 1;
                        match extend_step(s, &a, &b, Elem::Idx(x)) {
                            Ok(_) => {}
                            Err(Error::LemmaViolation(_)) => lemma_failures += 1,
                            Err(e) => return Err(e),
                        }
                    }
                }
                let mut pos = order;
                let wrapped = loop {
                    if pos == 0 {
                        break true;
                    }
                    pos -= 1;
                    assign[pos] += 1;
                    if assign[pos] < 3 {
                        break false;
                    }
                    assign[pos] = 0;
                };
                if wrapped {
                    break;
                }
            }
        }

        let big: Vec<&Semigroup> = entries
            .iter()
            .filter(|e| e.carrier.order().unwrap_or(0) > 4)
            .map(|e| &e.carrier)
            .collect();
        if !big.is_empty() {
            let mut rng = rng_from_seed(seed ^ 0x1e11a);
            let mut sampled = 0usize;
            let mut tries = 0usize;
            while sampled < 10_000 && tries < 400_000 {
                let s = big[tries % big.len()];
                tries += 1;
                let a = random_subset(s, &mut rng);
                let b = random_subset(s, &mut rng).difference(&a)?;
                if !are_f_disjoint(s, &Multipliers::All, &a, &b)?.disjoint() {
                    continue;
                }
                sampled += 1;
                pairs += 1;
                for x in 0..s.order().expect("finite") as u32 {
                    steps += 1;
                    match extend_step(s, &a, &b, Elem::Idx(x)) {
                        Ok(_) => {}
                        Err(Error::LemmaViolation(_)) => lemma_failures += 1,
                        Err(e) => return Err(e),
                    }
                }
            }
        }

        Ok((lemma_failures == 0, format!(
            "{pairs} disjoint pairs, {steps} extension steps, {lemma_failures} stuck elements"
        )))
    })())
}

/// 9: separation end to end — every certificate from seeded runs
/// re-verifies from scratch, and reruns are bit-identical.
pub fn check_separation_end_to_end(order_cap: usize, seed: u64) -> CheckOutcome {
    outcome(9, "separation", (|| {
        let t0 = Instant::now();
        let max_order = order_cap.min(8);
        let mut rng = rng_from_seed(seed ^ 0x57015);
        let mut done = 0usize;
        let mut tries = 0u64;
        let mut verify_failures = 0usize;
        let mut replay_diffs = 0usize;
        while done < 200 && tries < 100_000 {
            let s = sample_carrier(seed.wrapping_add(tries), max_order);
            tries += 1;
            let a0 = random_subset(&s, &mut rng);
            let b0 = random_subset(&s, &mut rng).difference(&a0)?;
            if !are_f_disjoint(&s, &Multipliers::All, &a0, &b0)?.disjoint() {
                continue;
            }
            let cert = stone_separate(&s, &a0, &b0)?;
            if !verify_certificate(&s, &cert, &a0, &b0)?.is_empty() {
                verify_failures += 1;
            }
            let again = stone_separate(&s, &a0, &b0)?;
            if again.a != cert.a || again.b != cert.b || again.log != cert.log {
                replay_diffs += 1;
            }
            done += 1;
        }
        let in_budget = t0.elapsed() <= Duration::from_secs(120);
        let pass = done == 200
            && verify_failures == 0
            && replay_diffs == 0
            && in_budget;
        Ok((pass, format!(
            "{done} separations in {tries} draws: {verify_failures} certificate failures, {replay_diffs} replay diffs{}",
            if in_budget { "" } else { ", over the 120s budget" }
        )))
    })())
}

const SOUNDNESS_BOUND: u64 = 50;

fn decision_matches_sweep(d: &Decision, sweep: &Option<(u64, Elem)>) -> bool {
    match (d.holds(), d.witness_n, sweep) {
        (true, _, None) => true,
        (false, Some(n), Some((m, w))) => n == *m && d.witness_element == Some(*w),
        (false, Some(n), None) => n > SOUNDNESS_BOUND,
        _ => false,
    }
}

/// 10: the all-n decisions agree with plain bounded sweeps — same
/// verdicts, same first failing multiplier, same witness element.
pub fn check_decision_soundness(order_cap: usize, seed: u64) -> CheckOutcome {
    outcome(10, "decision soundness", (|| {
        let max_order = order_cap.min(7);
        let mut rng = rng_from_seed(seed ^ 0xd00d);
        let mut disagreements = 0usize;
        let total = 5000u64;
        let ns: Vec<u64> = (1..=SOUNDNESS_BOUND).collect();
        for i in 0..total {
            let s = sample_carrier(seed ^ (0xd15c0 + i), max_order);
            let a = random_subset(&s, &mut rng);
            let b = random_subset(&s, &mut rng);

            let dc = decide_convex_all_n(&s, &a)?;
            if !decision_matches_sweep(&dc, &sweep_convex(&s, &a, SOUNDNESS_BOUND)?) {
                disagreements += 1;
            }
            let dk = decide_konvex_all_n(&s, &a)?;
            if !decision_matches_sweep(&dk, &sweep_konvex(&s, &a, SOUNDNESS_BOUND)?) {
                disagreements += 1;
            }

            let dd = are_f_disjoint(&s, &Multipliers::All, &a, &b)?;
            let sd = are_ns_disjoint(&s, &ns, &a, &b)?;
            let ok = match (&dd.verdict, &sd) {
                (DisjointVerdict::Disjoint, None) => true,
                (DisjointVerdict::Collision { n: Some(n), element }, Some((m, w))) => {
                    n == m && element == w
                }
                (DisjointVerdict::Collision { n: Some(n), .. }, None) => *n > SOUNDNESS_BOUND,
                _ => false,
            };
            if !ok {
                disagreements += 1;
            }
        }
        Ok((disagreements == 0, format!(
            "{} verdicts against sweeps to n={SOUNDNESS_BOUND}, {disagreements} disagreements",
            3 * total
        )))
    })())
}
