//! Carriers: commutative semigroups the rest of the crate computes over.
//!
//! Three kinds are supported. Finite carriers hold an explicit Cayley
//! table and index their elements `0..order` in label order. Two infinite
//! carriers are built in symbolically: the integers under addition, and
//! the additive monoid of nonnegative integers without 1. Subsets of the
//! symbolic carriers are finite sets of machine integers with checked
//! arithmetic.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::Bits;
use crate::error::{Error, Result};

/// Largest custom Cayley table we are willing to validate (associativity
/// is cubic in the order).
pub const MAX_CAYLEY_ORDER: usize = 128;
/// Largest finite carrier constructible through the builtins.
pub const MAX_BUILTIN_ORDER: usize = 1024;

/// An element of a carrier: an index into a finite table, or an integer
/// of a symbolic carrier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Elem {
    Idx(u32),
    Int(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct FiniteTable {
    labels: Vec<String>,
    /// Row-major, `order * order` entries.
    table: Vec<u32>,
    /// Per-cell saturation flags for capped carriers.
    sat: Option<Vec<bool>>,
    order: usize,
}

impl FiniteTable {
    fn at(&self, x: u32, y: u32) -> u32 {
        self.table[x as usize * self.order + y as usize]
    }

    fn sat_at(&self, x: u32, y: u32) -> bool {
        match &self.sat {
            Some(s) => s[x as usize * self.order + y as usize],
            None => false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Kind {
    Finite(FiniteTable),
    IntAdditive,
    IntNoOne,
}

/// A commutative semigroup.
#[derive(Debug, Clone)]
pub struct Semigroup {
    kind: Kind,
    name: String,
    id: u64,
}

/// A subset of a carrier, stamped with the carrier's structural
/// fingerprint so that sets from different carriers cannot be mixed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Subset {
    carrier: u64,
    repr: Repr,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Repr {
    Bits(Bits),
    Ints(BTreeSet<i64>),
}

fn fnv1a(bytes: impl IntoIterator<Item = u8>) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

fn fingerprint(kind: &Kind) -> u64 {
    match kind {
        Kind::IntAdditive => fnv1a(*b"int-additive"),
        Kind::IntNoOne => fnv1a(*b"int-no-one-monoid"),
        Kind::Finite(ft) => {
            let mut bytes: Vec<u8> = vec![0xf1];
            bytes.extend((ft.order as u64).to_le_bytes());
            for l in &ft.labels {
                bytes.extend(l.as_bytes());
                bytes.push(0);
            }
            for &e in &ft.table {
                bytes.extend(e.to_le_bytes());
            }
            if let Some(sat) = &ft.sat {
                bytes.push(1);
                bytes.extend(sat.iter().map(|&b| b as u8));
            }
            fnv1a(bytes)
        }
    }
}

impl Semigroup {
    fn from_kind(kind: Kind, name: String) -> Self {
        let id = fingerprint(&kind);
        Semigroup { kind, name, id }
    }

    /// The integers under addition.
    pub fn int_additive() -> Self {
        Semigroup::from_kind(Kind::IntAdditive, "int-additive".to_string())
    }

    /// The monoid {0, 2, 3, 4, ...} under addition.
    pub fn int_no_one() -> Self {
        Semigroup::from_kind(Kind::IntNoOne, "int-no-one-monoid".to_string())
    }

    /// Z_m under addition mod m.
    pub fn cyclic(m: usize) -> Result<Self> {
        if !(1..=MAX_BUILTIN_ORDER).contains(&m) {
            return Err(Error::BadParams(format!("cyclic modulus {m} out of range")));
        }
        let labels = (0..m).map(|i| i.to_string()).collect();
        let mut table = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                table.push(((i + j) % m) as u32);
            }
        }
        Ok(Semigroup::from_kind(
            Kind::Finite(FiniteTable { labels, table, sat: None, order: m }),
            format!("cyclic({m})"),
        ))
    }

    /// {0, ..., c} with x + y capped at c. Cells where the true sum
    /// exceeds the cap are flagged saturated.
    pub fn capped_add(c: usize) -> Result<Self> {
        if c < 1 || c + 1 > MAX_BUILTIN_ORDER {
            return Err(Error::BadParams(format!("cap {c} out of range")));
        }
        let order = c + 1;
        let labels = (0..order).map(|i| i.to_string()).collect();
        let mut table = Vec::with_capacity(order * order);
        let mut sat = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push((i + j).min(c) as u32);
                sat.push(i + j > c);
            }
        }
        Ok(Semigroup::from_kind(
            Kind::Finite(FiniteTable { labels, table, sat: Some(sat), order }),
            format!("capped-add({c})"),
        ))
    }

    /// The chain {1, ..., k} under minimum.
    pub fn chain_min(k: usize) -> Result<Self> {
        if !(1..=MAX_BUILTIN_ORDER).contains(&k) {
            return Err(Error::BadParams(format!("chain length {k} out of range")));
        }
        let labels = (1..=k).map(|i| i.to_string()).collect();
        let mut table = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                table.push(i.min(j) as u32);
            }
        }
        Ok(Semigroup::from_kind(
            Kind::Finite(FiniteTable { labels, table, sat: None, order: k }),
            format!("chain-min({k})"),
        ))
    }

    /// Subsets of {1, ..., k} under union. Labels look like `{}`, `{1}`,
    /// `{13}`; k is capped at 9 so single digits suffice.
    pub fn powerset_union(k: usize) -> Result<Self> {
        if !(1..=9).contains(&k) {
            return Err(Error::BadParams(format!("powerset ground size {k} out of range")));
        }
        let order = 1usize << k;
        if order > MAX_BUILTIN_ORDER {
            return Err(Error::BadParams(format!("powerset ground size {k} too large")));
        }
        let labels = (0..order)
            .map(|mask| {
                let digits: String =
                    (0..k).filter(|b| mask >> b & 1 == 1).map(|b| char::from(b as u8 + b'1')).collect();
                format!("{{{digits}}}")
            })
            .collect();
        let mut table = Vec::with_capacity(order * order);
        for i in 0..order {
            for j in 0..order {
                table.push((i | j) as u32);
            }
        }
        Ok(Semigroup::from_kind(
            Kind::Finite(FiniteTable { labels, table, sat: None, order }),
            format!("powerset-union({k})"),
        ))
    }

    /// Direct product of two finite carriers, elements labelled `a|b`.
    pub fn product(a: &Semigroup, b: &Semigroup) -> Result<Self> {
        let (fa, fb) = match (&a.kind, &b.kind) {
            (Kind::Finite(fa), Kind::Finite(fb)) => (fa, fb),
            _ => return Err(Error::BadParams("product requires finite carriers".to_string())),
        };
        let order = fa.order * fb.order;
        if order > MAX_BUILTIN_ORDER {
            return Err(Error::BadParams(format!("product order {order} too large")));
        }
        let mut labels = Vec::with_capacity(order);
        for la in &fa.labels {
            for lb in &fb.labels {
                labels.push(format!("{la}|{lb}"));
            }
        }
        let any_sat = fa.sat.is_some() || fb.sat.is_some();
        let mut table = Vec::with_capacity(order * order);
        let mut sat = Vec::with_capacity(if any_sat { order * order } else { 0 });
        for xa in 0..fa.order as u32 {
            for xb in 0..fb.order as u32 {
                for ya in 0..fa.order as u32 {
                    for yb in 0..fb.order as u32 {
                        table.push(fa.at(xa, ya) * fb.order as u32 + fb.at(xb, yb));
                        if any_sat {
                            sat.push(fa.sat_at(xa, ya) || fb.sat_at(xb, yb));
                        }
                    }
                }
            }
        }
        Ok(Semigroup::from_kind(
            Kind::Finite(FiniteTable {
                labels,
                table,
                sat: if any_sat { Some(sat) } else { None },
                order,
            }),
            format!("product({},{})", a.name, b.name),
        ))
    }

    /// Builds a finite carrier from an explicit Cayley table whose cells
    /// name elements by label. Rejects non-square tables, unknown or
    /// duplicate labels, and any failure of commutativity or
    /// associativity, with a witness in the error.
    pub fn build_cayley(labels: &[String], rows: &[Vec<String>]) -> Result<Self> {
        let order = labels.len();
        if order == 0 {
            return Err(Error::BadShape("no elements".to_string()));
        }
        if order > MAX_CAYLEY_ORDER {
            return Err(Error::BadShape(format!("order {order} exceeds {MAX_CAYLEY_ORDER}")));
        }
        let mut seen = BTreeSet::new();
        for l in labels {
            if !seen.insert(l.clone()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if rows.len() != order {
            return Err(Error::BadShape(format!("expected {order} rows, got {}", rows.len())));
        }
        let index = |l: &String| -> Result<u32> {
            labels
                .iter()
                .position(|k| k == l)
                .map(|i| i as u32)
                .ok_or_else(|| Error::UnknownLabel(l.clone()))
        };
        let mut table = Vec::with_capacity(order * order);
        for row in rows {
            if row.len() != order {
                return Err(Error::BadShape(format!("expected {order} columns, got {}", row.len())));
            }
            for cell in row {
                table.push(index(cell)?);
            }
        }
        let ft = FiniteTable { labels: labels.to_vec(), table, sat: None, order };
        for x in 0..order as u32 {
            for y in x..order as u32 {
                if ft.at(x, y) != ft.at(y, x) {
                    return Err(Error::NotCommutative {
                        x: labels[x as usize].clone(),
                        y: labels[y as usize].clone(),
                    });
                }
            }
        }
        for x in 0..order as u32 {
            for y in 0..order as u32 {
                let xy = ft.at(x, y);
                for z in 0..order as u32 {
                    if ft.at(xy, z) != ft.at(x, ft.at(y, z)) {
                        return Err(Error::NotAssociative {
                            x: labels[x as usize].clone(),
                            y: labels[y as usize].clone(),
                            z: labels[z as usize].clone(),
                        });
                    }
                }
            }
        }
        Ok(Semigroup::from_kind(Kind::Finite(ft), "cayley".to_string()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Structural fingerprint; equal ids mean interchangeable subsets.
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.kind, Kind::Finite(_))
    }

    pub fn order(&self) -> Option<usize> {
        match &self.kind {
            Kind::Finite(ft) => Some(ft.order),
            _ => None,
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        match &self.kind {
            Kind::Finite(ft) => Some(&ft.labels),
            _ => None,
        }
    }

    fn finite(&self) -> Option<&FiniteTable> {
        match &self.kind {
            Kind::Finite(ft) => Some(ft),
            _ => None,
        }
    }

    pub(crate) fn int_member(&self, v: i64) -> bool {
        match self.kind {
            Kind::IntAdditive => true,
            Kind::IntNoOne => v == 0 || v >= 2,
            Kind::Finite(_) => false,
        }
    }

    pub fn contains_elem(&self, x: Elem) -> bool {
        match (x, &self.kind) {
            (Elem::Idx(i), Kind::Finite(ft)) => (i as usize) < ft.order,
            (Elem::Int(v), _) => self.int_member(v),
            _ => false,
        }
    }

    /// The semigroup operation.
    pub fn add(&self, x: Elem, y: Elem) -> Result<Elem> {
        match (&self.kind, x, y) {
            (Kind::Finite(ft), Elem::Idx(a), Elem::Idx(b)) => {
                if (a as usize) < ft.order && (b as usize) < ft.order {
                    Ok(Elem::Idx(ft.at(a, b)))
                } else {
                    Err(Error::InvalidElement(format!("index {}", a.max(b))))
                }
            }
            (_, Elem::Int(a), Elem::Int(b)) if !self.is_finite() => {
                let s = a.checked_add(b).ok_or(Error::Overflow)?;
                Ok(Elem::Int(s))
            }
            _ => Err(Error::CarrierMismatch),
        }
    }

    pub(crate) fn add_idx(&self, x: u32, y: u32) -> u32 {
        match &self.kind {
            Kind::Finite(ft) => ft.at(x, y),
            _ => unreachable!("index arithmetic on symbolic carrier"),
        }
    }

    pub(crate) fn sat_idx(&self, x: u32, y: u32) -> bool {
        match &self.kind {
            Kind::Finite(ft) => ft.sat_at(x, y),
            _ => false,
        }
    }

    /// n-fold sum n.x = x + ... + x, computed by doubling.
    pub fn times(&self, n: u64, x: Elem) -> Result<Elem> {
        if n == 0 {
            return Err(Error::BadN);
        }
        if let (Kind::Finite(_), Elem::Int(_)) = (&self.kind, x) {
            return Err(Error::CarrierMismatch);
        }
        if let Elem::Int(v) = x {
            // closed form on the integer carriers
            let n = i64::try_from(n).map_err(|_| Error::Overflow)?;
            return v.checked_mul(n).map(Elem::Int).ok_or(Error::Overflow);
        }
        let mut acc: Option<Elem> = None;
        let mut base = x;
        let mut k = n;
        loop {
            if k & 1 == 1 {
                acc = Some(match acc {
                    None => base,
                    Some(a) => self.add(a, base)?,
                });
            }
            k >>= 1;
            if k == 0 {
                break;
            }
            base = self.add(base, base)?;
        }
        Ok(acc.expect("n >= 1"))
    }

    pub fn label(&self, x: Elem) -> String {
        match (x, &self.kind) {
            (Elem::Idx(i), Kind::Finite(ft)) => ft.labels[i as usize].clone(),
            (Elem::Int(v), _) => v.to_string(),
            (Elem::Idx(i), _) => format!("#{i}"),
        }
    }

    pub fn parse_label(&self, label: &str) -> Result<Elem> {
        match &self.kind {
            Kind::Finite(ft) => ft
                .labels
                .iter()
                .position(|l| l == label)
                .map(|i| Elem::Idx(i as u32))
                .ok_or_else(|| Error::UnknownLabel(label.to_string())),
            _ => {
                let v: i64 = label.trim().parse().map_err(|_| Error::UnknownLabel(label.to_string()))?;
                if self.int_member(v) {
                    Ok(Elem::Int(v))
                } else {
                    Err(Error::InvalidElement(v.to_string()))
                }
            }
        }
    }

    pub fn elements(&self) -> Option<impl Iterator<Item = Elem> + '_> {
        self.order().map(|o| (0..o as u32).map(Elem::Idx))
    }

    pub fn empty_subset(&self) -> Subset {
        let repr = match &self.kind {
            Kind::Finite(ft) => Repr::Bits(Bits::empty(ft.order)),
            _ => Repr::Ints(BTreeSet::new()),
        };
        Subset { carrier: self.id, repr }
    }

    /// The whole carrier; finite carriers only.
    pub fn full_subset(&self) -> Result<Subset> {
        match &self.kind {
            Kind::Finite(ft) => Ok(Subset { carrier: self.id, repr: Repr::Bits(Bits::full(ft.order)) }),
            _ => Err(Error::SymbolicUnsupported),
        }
    }

    pub fn singleton(&self, x: Elem) -> Result<Subset> {
        let mut s = self.empty_subset();
        s.insert_checked(self, x)?;
        Ok(s)
    }

    pub fn subset_from_elems(&self, elems: &[Elem]) -> Result<Subset> {
        let mut s = self.empty_subset();
        for &e in elems {
            s.insert_checked(self, e)?;
        }
        Ok(s)
    }

    pub fn subset_from_labels(&self, labels: &[&str]) -> Result<Subset> {
        let elems: Vec<Elem> = labels.iter().map(|l| self.parse_label(l)).collect::<Result<_>>()?;
        self.subset_from_elems(&elems)
    }

    pub fn subset_from_indices(&self, idx: &[u32]) -> Result<Subset> {
        let elems: Vec<Elem> = idx.iter().map(|&i| Elem::Idx(i)).collect();
        self.subset_from_elems(&elems)
    }

    pub fn subset_from_ints(&self, ints: &[i64]) -> Result<Subset> {
        let elems: Vec<Elem> = ints.iter().map(|&v| Elem::Int(v)).collect();
        self.subset_from_elems(&elems)
    }

    pub fn owns(&self, s: &Subset) -> bool {
        s.carrier == self.id
    }

    pub(crate) fn check_owns(&self, s: &Subset) -> Result<()> {
        if self.owns(s) {
            Ok(())
        } else {
            Err(Error::CarrierMismatch)
        }
    }

    /// Least subset containing `gens` and closed under the operation.
    pub fn subsemigroup_closure(&self, gens: &Subset) -> Result<Subset> {
        self.check_owns(gens)?;
        if gens.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let Repr::Bits(start) = &gens.repr else {
            return Err(Error::SymbolicUnsupported);
        };
        let mut closed = start.clone();
        loop {
            let mut next = closed.clone();
            for x in closed.iter() {
                for y in closed.iter() {
                    next.insert(self.add_idx(x as u32, y as u32) as usize);
                }
            }
            if next == closed {
                return Ok(Subset { carrier: self.id, repr: Repr::Bits(closed) });
            }
            closed = next;
        }
    }

    /// The carrier induced on a subset that is closed under the
    /// operation. Labels and saturation flags are inherited.
    pub fn restriction(&self, closed: &Subset) -> Result<Semigroup> {
        self.check_owns(closed)?;
        let ft = self.finite().ok_or(Error::SymbolicUnsupported)?;
        let Repr::Bits(bits) = &closed.repr else {
            return Err(Error::CarrierMismatch);
        };
        if bits.is_empty() {
            return Err(Error::BadParams("restriction to the empty set".to_string()));
        }
        let members: Vec<u32> = bits.iter().map(|i| i as u32).collect();
        let mut back = vec![u32::MAX; ft.order];
        for (new, &old) in members.iter().enumerate() {
            back[old as usize] = new as u32;
        }
        let order = members.len();
        let mut table = Vec::with_capacity(order * order);
        let mut sat = Vec::with_capacity(order * order);
        let mut any_sat = false;
        for &x in &members {
            for &y in &members {
                let z = ft.at(x, y);
                if back[z as usize] == u32::MAX {
                    return Err(Error::NotClosed(format!(
                        "{} + {} = {}",
                        ft.labels[x as usize], ft.labels[y as usize], ft.labels[z as usize]
                    )));
                }
                table.push(back[z as usize]);
                let s = ft.sat_at(x, y);
                any_sat |= s;
                sat.push(s);
            }
        }
        let labels: Vec<String> = members.iter().map(|&i| ft.labels[i as usize].clone()).collect();
        Ok(Semigroup::from_kind(
            Kind::Finite(FiniteTable {
                labels,
                table,
                sat: if any_sat { Some(sat) } else { None },
                order,
            }),
            format!("restriction({})", self.name),
        ))
    }

    pub fn sorted_labels(&self, s: &Subset) -> Vec<String> {
        s.elems().iter().map(|&e| self.label(e)).collect()
    }
}

impl Subset {
    pub fn len(&self) -> usize {
        match &self.repr {
            Repr::Bits(b) => b.count(),
            Repr::Ints(s) => s.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        match &self.repr {
            Repr::Bits(b) => b.is_empty(),
            Repr::Ints(s) => s.is_empty(),
        }
    }

    pub fn contains(&self, x: Elem) -> bool {
        match (&self.repr, x) {
            (Repr::Bits(b), Elem::Idx(i)) => b.contains(i as usize),
            (Repr::Ints(s), Elem::Int(v)) => s.contains(&v),
            _ => false,
        }
    }

    /// Elements in ascending order (index order, or integer order).
    pub fn elems(&self) -> Vec<Elem> {
        match &self.repr {
            Repr::Bits(b) => b.iter().map(|i| Elem::Idx(i as u32)).collect(),
            Repr::Ints(s) => s.iter().map(|&v| Elem::Int(v)).collect(),
        }
    }

    pub fn first(&self) -> Option<Elem> {
        match &self.repr {
            Repr::Bits(b) => b.first().map(|i| Elem::Idx(i as u32)),
            Repr::Ints(s) => s.first().map(|&v| Elem::Int(v)),
        }
    }

    fn insert_checked(&mut self, sg: &Semigroup, x: Elem) -> Result<()> {
        match (&mut self.repr, x) {
            (Repr::Bits(b), Elem::Idx(i)) => {
                if (i as usize) < b.universe_len() {
                    b.insert(i as usize);
                    Ok(())
                } else {
                    Err(Error::InvalidElement(format!("index {i}")))
                }
            }
            (Repr::Ints(s), Elem::Int(v)) => {
                if sg.int_member(v) {
                    s.insert(v);
                    Ok(())
                } else {
                    Err(Error::InvalidElement(v.to_string()))
                }
            }
            _ => Err(Error::CarrierMismatch),
        }
    }

    fn zip<'a>(&'a self, other: &'a Subset) -> Result<(&'a Repr, &'a Repr)> {
        if self.carrier != other.carrier {
            return Err(Error::CarrierMismatch);
        }
        Ok((&self.repr, &other.repr))
    }

    pub fn union(&self, other: &Subset) -> Result<Subset> {
        let repr = match self.zip(other)? {
            (Repr::Bits(a), Repr::Bits(b)) => Repr::Bits(a.union(b)),
            (Repr::Ints(a), Repr::Ints(b)) => Repr::Ints(a.union(b).copied().collect()),
            _ => return Err(Error::CarrierMismatch),
        };
        Ok(Subset { carrier: self.carrier, repr })
    }

    pub fn intersection(&self, other: &Subset) -> Result<Subset> {
        let repr = match self.zip(other)? {
            (Repr::Bits(a), Repr::Bits(b)) => Repr::Bits(a.intersection(b)),
            (Repr::Ints(a), Repr::Ints(b)) => Repr::Ints(a.intersection(b).copied().collect()),
            _ => return Err(Error::CarrierMismatch),
        };
        Ok(Subset { carrier: self.carrier, repr })
    }

    pub fn difference(&self, other: &Subset) -> Result<Subset> {
        let repr = match self.zip(other)? {
            (Repr::Bits(a), Repr::Bits(b)) => Repr::Bits(a.difference(b)),
            (Repr::Ints(a), Repr::Ints(b)) => Repr::Ints(a.difference(b).copied().collect()),
            _ => return Err(Error::CarrierMismatch),
        };
        Ok(Subset { carrier: self.carrier, repr })
    }

    pub fn is_subset_of(&self, other: &Subset) -> Result<bool> {
        Ok(match self.zip(other)? {
            (Repr::Bits(a), Repr::Bits(b)) => a.is_subset_of(b),
            (Repr::Ints(a), Repr::Ints(b)) => a.is_subset(b),
            _ => return Err(Error::CarrierMismatch),
        })
    }

    pub fn intersects(&self, other: &Subset) -> Result<bool> {
        Ok(match self.zip(other)? {
            (Repr::Bits(a), Repr::Bits(b)) => a.intersects(b),
            (Repr::Ints(a), Repr::Ints(b)) => a.intersection(b).next().is_some(),
            _ => return Err(Error::CarrierMismatch),
        })
    }

    pub(crate) fn bits(&self) -> Option<&Bits> {
        match &self.repr {
            Repr::Bits(b) => Some(b),
            _ => None,
        }
    }

    pub(crate) fn ints(&self) -> Option<&BTreeSet<i64>> {
        match &self.repr {
            Repr::Ints(s) => Some(s),
            _ => None,
        }
    }

    pub(crate) fn from_bits(carrier: u64, bits: Bits) -> Subset {
        Subset { carrier, repr: Repr::Bits(bits) }
    }

    pub(crate) fn from_ints(carrier: u64, ints: BTreeSet<i64>) -> Subset {
        Subset { carrier, repr: Repr::Ints(ints) }
    }
}

/// A named carrier from the builtin catalog.
pub struct CatalogEntry {
    pub name: String,
    pub carrier: Semigroup,
}

/// Deterministic list of builtin carriers with order at most `max_order`,
/// covering groups, capped monoids, semilattices and products of these.
pub fn catalog(max_order: usize) -> Vec<CatalogEntry> {
    let mut out: Vec<Semigroup> = Vec::new();
    for m in 1..=8 {
        out.push(Semigroup::cyclic(m).unwrap());
    }
    for c in 1..=7 {
        out.push(Semigroup::capped_add(c).unwrap());
    }
    for k in 2..=8 {
        out.push(Semigroup::chain_min(k).unwrap());
    }
    for k in 1..=3 {
        out.push(Semigroup::powerset_union(k).unwrap());
    }
    let c2 = Semigroup::cyclic(2).unwrap();
    let c3 = Semigroup::cyclic(3).unwrap();
    let c4 = Semigroup::cyclic(4).unwrap();
    let m1 = Semigroup::capped_add(1).unwrap();
    let m2 = Semigroup::capped_add(2).unwrap();
    let l2 = Semigroup::chain_min(2).unwrap();
    let l3 = Semigroup::chain_min(3).unwrap();
    for (a, b) in [
        (&c2, &c2),
        (&c2, &c3),
        (&c2, &c4),
        (&c2, &m1),
        (&c3, &m1),
        (&m1, &m1),
        (&m1, &m2),
        (&c2, &l2),
        (&l2, &l2),
        (&c2, &l3),
        (&l2, &m1),
    ] {
        out.push(Semigroup::product(a, b).unwrap());
    }
    out.retain(|s| s.order().unwrap() <= max_order);
    out.into_iter()
        .map(|carrier| CatalogEntry { name: carrier.name().to_string(), carrier })
        .collect()
}
