//! Subset algebra: the three operations everything else is built from.
//!
//! For a subset A of a carrier and n >= 1:
//!   scale        nA   = { n.x : x in A }        (pointwise n-fold sum)
//!   preimage  n^-1 A  = { x : n.x in A }
//!   power       [n]A  = A + ... + A, n summands (n-fold sumset)
//!
//! Each operation has a `_report` variant that also says whether any
//! capped-carrier addition saturated along the way.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::carrier::{Semigroup, Subset};
use crate::error::{Error, Result};

/// Result of one subset operation plus saturation provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpReport {
    pub result: Subset,
    /// True when some addition hit a capped carrier's cap, i.e. the
    /// result differs from what the uncapped arithmetic would give.
    pub saturated: bool,
}

fn times_idx_sat(s: &Semigroup, n: u64, x: u32) -> (u32, bool) {
    let mut sat = false;
    let mut acc: Option<u32> = None;
    let mut base = x;
    let mut k = n;
    loop {
        if k & 1 == 1 {
            acc = Some(match acc {
                None => base,
                Some(a) => {
                    sat |= s.sat_idx(a, base);
                    s.add_idx(a, base)
                }
            });
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        sat |= s.sat_idx(base, base);
        base = s.add_idx(base, base);
    }
    (acc.expect("n >= 1"), sat)
}

pub(crate) fn scale_bits(s: &Semigroup, n: u64, a: &Bits) -> (Bits, bool) {
    let order = s.order().expect("finite carrier");
    let mut out = Bits::empty(order);
    let mut sat = false;
    for x in a.iter() {
        let (y, s1) = times_idx_sat(s, n, x as u32);
        sat |= s1;
        out.insert(y as usize);
    }
    (out, sat)
}

pub(crate) fn preimage_bits(s: &Semigroup, n: u64, a: &Bits) -> (Bits, bool) {
    let order = s.order().expect("finite carrier");
    let mut out = Bits::empty(order);
    let mut sat = false;
    for x in 0..order as u32 {
        let (y, s1) = times_idx_sat(s, n, x);
        sat |= s1;
        if a.contains(y as usize) {
            out.insert(x as usize);
        }
    }
    (out, sat)
}

pub(crate) fn sumset_bits(s: &Semigroup, a: &Bits, b: &Bits) -> (Bits, bool) {
    let order = s.order().expect("finite carrier");
    let mut out = Bits::empty(order);
    let mut sat = false;
    for x in a.iter() {
        for y in b.iter() {
            sat |= s.sat_idx(x as u32, y as u32);
            out.insert(s.add_idx(x as u32, y as u32) as usize);
        }
    }
    (out, sat)
}

pub(crate) fn power_bits(s: &Semigroup, n: u64, a: &Bits) -> (Bits, bool) {
    let mut acc = a.clone();
    let mut sat = false;
    for _ in 1..n {
        let (next, s1) = sumset_bits(s, &acc, a);
        sat |= s1;
        acc = next;
    }
    (acc, sat)
}

/// [n]A by repeated doubling; used internally where only the endpoint
/// matters and n may be large.
pub(crate) fn power_bits_bin(s: &Semigroup, n: u64, a: &Bits) -> Bits {
    let mut acc: Option<Bits> = None;
    let mut base = a.clone();
    let mut k = n;
    loop {
        if k & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(v) => sumset_bits(s, &v, &base).0,
            });
        }
        k >>= 1;
        if k == 0 {
            break;
        }
        base = sumset_bits(s, &base, &base).0;
    }
    acc.expect("n >= 1")
}

fn scale_ints(s: &Semigroup, n: u64, a: &BTreeSet<i64>) -> Result<BTreeSet<i64>> {
    let n = i64::try_from(n).map_err(|_| Error::Overflow)?;
    a.iter()
        .map(|&v| v.checked_mul(n).ok_or(Error::Overflow))
        .collect::<Result<BTreeSet<i64>>>()
        .inspect(|set| {
            debug_assert!(set.iter().all(|&v| s.int_member(v)));
        })
}

fn preimage_ints(s: &Semigroup, n: u64, a: &BTreeSet<i64>) -> Result<BTreeSet<i64>> {
    let n = i64::try_from(n).map_err(|_| Error::Overflow)?;
    let mut out = BTreeSet::new();
    for &v in a {
        if v % n == 0 {
            let q = v / n;
            if s.int_member(q) {
                out.insert(q);
            }
        }
    }
    Ok(out)
}

fn sumset_ints(a: &BTreeSet<i64>, b: &BTreeSet<i64>) -> Result<BTreeSet<i64>> {
    let mut out = BTreeSet::new();
    for &x in a {
        for &y in b {
            out.insert(x.checked_add(y).ok_or(Error::Overflow)?);
        }
    }
    Ok(out)
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        Err(Error::BadN)
    } else {
        Ok(())
    }
}

/// nA = { n.x : x in A }.
pub fn scale_report(s: &Semigroup, n: u64, a: &Subset) -> Result<OpReport> {
    check_n(n)?;
    s.check_owns(a)?;
    if let Some(bits) = a.bits() {
        let (r, sat) = scale_bits(s, n, bits);
        Ok(OpReport { result: Subset::from_bits(s.id(), r), saturated: sat })
    } else {
        let r = scale_ints(s, n, a.ints().expect("int subset"))?;
        Ok(OpReport { result: Subset::from_ints(s.id(), r), saturated: false })
    }
}

pub fn scale(s: &Semigroup, n: u64, a: &Subset) -> Result<Subset> {
    scale_report(s, n, a).map(|r| r.result)
}

/// n^-1 A = { x : n.x in A }. On the integer carriers only members of
/// the carrier count as preimages.
pub fn preimage_report(s: &Semigroup, n: u64, a: &Subset) -> Result<OpReport> {
    check_n(n)?;
    s.check_owns(a)?;
    if let Some(bits) = a.bits() {
        let (r, sat) = preimage_bits(s, n, bits);
        Ok(OpReport { result: Subset::from_bits(s.id(), r), saturated: sat })
    } else {
        let r = preimage_ints(s, n, a.ints().expect("int subset"))?;
        Ok(OpReport { result: Subset::from_ints(s.id(), r), saturated: false })
    }
}

pub fn preimage(s: &Semigroup, n: u64, a: &Subset) -> Result<Subset> {
    preimage_report(s, n, a).map(|r| r.result)
}

/// A + B = { x + y : x in A, y in B }.
pub fn sumset_report(s: &Semigroup, a: &Subset, b: &Subset) -> Result<OpReport> {
    s.check_owns(a)?;
    s.check_owns(b)?;
    if let (Some(ba), Some(bb)) = (a.bits(), b.bits()) {
        let (r, sat) = sumset_bits(s, ba, bb);
        Ok(OpReport { result: Subset::from_bits(s.id(), r), saturated: sat })
    } else {
        let r = sumset_ints(a.ints().expect("int subset"), b.ints().expect("int subset"))?;
        Ok(OpReport { result: Subset::from_ints(s.id(), r), saturated: false })
    }
}

pub fn sumset(s: &Semigroup, a: &Subset, b: &Subset) -> Result<Subset> {
    sumset_report(s, a, b).map(|r| r.result)
}

/// [n]A, the n-fold sumset, computed by linear iteration so that every
/// intermediate [k]A is an actual sumset of the carrier.
pub fn sumset_power_report(s: &Semigroup, n: u64, a: &Subset) -> Result<OpReport> {
    check_n(n)?;
    s.check_owns(a)?;
    if let Some(bits) = a.bits() {
        let (r, sat) = power_bits(s, n, bits);
        Ok(OpReport { result: Subset::from_bits(s.id(), r), saturated: sat })
    } else {
        let ints = a.ints().expect("int subset");
        let mut acc = ints.clone();
        for _ in 1..n {
            acc = sumset_ints(&acc, ints)?;
        }
        Ok(OpReport { result: Subset::from_ints(s.id(), acc), saturated: false })
    }
}

pub fn sumset_power(s: &Semigroup, n: u64, a: &Subset) -> Result<Subset> {
    sumset_power_report(s, n, a).map(|r| r.result)
}

/// How one relation of the basic-law check came out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelStatus {
    Equal,
    ProperInclusion,
    Violation,
}

/// What the law promises: exact equality, or inclusion of lhs in rhs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expect {
    Equality,
    Inclusion,
}

#[derive(Debug, Clone)]
pub struct RelCheck {
    pub name: &'static str,
    pub expect: Expect,
    pub status: RelStatus,
}

/// Outcome of [`check_laws`] on one (k, n, A, B) instance.
#[derive(Debug, Clone)]
pub struct LawReport {
    pub relations: Vec<RelCheck>,
}

impl LawReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(|r| r.status != RelStatus::Violation)
    }

    pub fn violations(&self) -> impl Iterator<Item = &RelCheck> {
        self.relations.iter().filter(|r| r.status == RelStatus::Violation)
    }

    pub fn by_name(&self, name: &str) -> Option<&RelCheck> {
        self.relations.iter().find(|r| r.name == name)
    }
}

fn classify(expect: Expect, lhs: &Subset, rhs: &Subset) -> Result<RelStatus> {
    Ok(match expect {
        Expect::Equality => {
            if lhs == rhs {
                RelStatus::Equal
            } else {
                RelStatus::Violation
            }
        }
        Expect::Inclusion => {
            if lhs == rhs {
                RelStatus::Equal
            } else if lhs.is_subset_of(rhs)? {
                RelStatus::ProperInclusion
            } else {
                RelStatus::Violation
            }
        }
    })
}

/// Evaluates the basic interaction laws between scaling, preimage,
/// sumset powers and the boolean operations on one instance:
/// twelve mixed-operation relations, monotonicity applied to
/// A∩B ⊆ A∪B, and the family laws for the pair {A, B}. Inclusions are
/// reported as Equal or ProperInclusion; anything else is a Violation
/// and means a broken carrier or a bug.
pub fn check_laws(s: &Semigroup, k: u64, n: u64, a: &Subset, b: &Subset) -> Result<LawReport> {
    check_n(k)?;
    check_n(n)?;
    s.check_owns(a)?;
    s.check_owns(b)?;
    let kn = k.checked_mul(n).ok_or(Error::Overflow)?;
    let ks = k.checked_add(n).ok_or(Error::Overflow)?;

    let sc = |m: u64, x: &Subset| scale(s, m, x);
    let pre = |m: u64, x: &Subset| preimage(s, m, x);
    let pw = |m: u64, x: &Subset| sumset_power(s, m, x);
    let add = |x: &Subset, y: &Subset| sumset(s, x, y);

    let inter = a.intersection(b)?;
    let uni = a.union(b)?;

    let mut relations = Vec::new();
    let mut push = |name: &'static str, expect: Expect, lhs: Subset, rhs: Subset| -> Result<()> {
        relations.push(RelCheck { name, expect, status: classify(expect, &lhs, &rhs)? });
        Ok(())
    };

    push("(k+n)A <= kA+nA", Expect::Inclusion, sc(ks, a)?, add(&sc(k, a)?, &sc(n, a)?)?)?;
    push("(kn)A = k(nA)", Expect::Equality, sc(kn, a)?, sc(k, &sc(n, a)?)?)?;
    push("n(A+B) = nA+nB", Expect::Equality, sc(n, &add(a, b)?)?, add(&sc(n, a)?, &sc(n, b)?)?)?;
    push("[k+n]A = [k]A+[n]A", Expect::Equality, pw(ks, a)?, add(&pw(k, a)?, &pw(n, a)?)?)?;
    push("[kn]A = [k]([n]A)", Expect::Equality, pw(kn, a)?, pw(k, &pw(n, a)?)?)?;
    push("[n](A+B) = [n]A+[n]B", Expect::Equality, pw(n, &add(a, b)?)?, add(&pw(n, a)?, &pw(n, b)?)?)?;
    push(
        "(kn)(k^-1 A + n^-1 A) <= kA+nA",
        Expect::Inclusion,
        sc(kn, &add(&pre(k, a)?, &pre(n, a)?)?)?,
        add(&sc(k, a)?, &sc(n, a)?)?,
    )?;
    push("(kn)^-1 A = k^-1(n^-1 A)", Expect::Equality, pre(kn, a)?, pre(k, &pre(n, a)?)?)?;
    push("n^-1 A + n^-1 B <= n^-1(A+B)", Expect::Inclusion, add(&pre(n, a)?, &pre(n, b)?)?, pre(n, &add(a, b)?)?)?;
    push("[k](n^-1 A) <= n^-1([k]A)", Expect::Inclusion, pw(k, &pre(n, a)?)?, pre(n, &pw(k, a)?)?)?;
    push("[k](nA) = n([k]A)", Expect::Equality, pw(k, &sc(n, a)?)?, sc(n, &pw(k, a)?)?)?;
    push("k(n^-1 A) <= n^-1(kA)", Expect::Inclusion, sc(k, &pre(n, a)?)?, pre(n, &sc(k, a)?)?)?;

    // monotonicity, instantiated at A∩B <= A∪B
    push("n(A∩B) <= n(A∪B)", Expect::Inclusion, sc(n, &inter)?, sc(n, &uni)?)?;
    push("k(A∩B) <= k(A∪B)", Expect::Inclusion, sc(k, &inter)?, sc(k, &uni)?)?;
    push("n^-1(A∩B) <= n^-1(A∪B)", Expect::Inclusion, pre(n, &inter)?, pre(n, &uni)?)?;
    push("k^-1(A∩B) <= k^-1(A∪B)", Expect::Inclusion, pre(k, &inter)?, pre(k, &uni)?)?;
    push("[n](A∩B) <= [n](A∪B)", Expect::Inclusion, pw(n, &inter)?, pw(n, &uni)?)?;
    push("[k](A∩B) <= [k](A∪B)", Expect::Inclusion, pw(k, &inter)?, pw(k, &uni)?)?;

    // family laws for the two-member family {A, B}
    push("n(A∩B) <= nA∩nB", Expect::Inclusion, sc(n, &inter)?, sc(n, a)?.intersection(&sc(n, b)?)?)?;
    push("nA∪nB <= n(A∪B)", Expect::Inclusion, sc(n, a)?.union(&sc(n, b)?)?, sc(n, &uni)?)?;
    push("n^-1(A∩B) <= n^-1 A∩n^-1 B", Expect::Inclusion, pre(n, &inter)?, pre(n, a)?.intersection(&pre(n, b)?)?)?;
    push("n^-1 A∪n^-1 B <= n^-1(A∪B)", Expect::Inclusion, pre(n, a)?.union(&pre(n, b)?)?, pre(n, &uni)?)?;
    push("[n](A∩B) <= [n]A∩[n]B", Expect::Inclusion, pw(n, &inter)?, pw(n, a)?.intersection(&pw(n, b)?)?)?;
    push("[n]A∪[n]B <= [n](A∪B)", Expect::Inclusion, pw(n, a)?.union(&pw(n, b)?)?, pw(n, &uni)?)?;

    Ok(LawReport { relations })
}
