//! Finite T0 spaces held as their specialization posets.
//!
//! A finite topology is the family of up-sets of its specialization order,
//! so the poset is the canonical representation. Closed sets are down-sets
//! and compact saturated sets are nonempty up-sets.

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::bits::{subsets_of, Bits, MAX_POINTS};
use crate::error::{cap, Error, Result};

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug)]
struct Inner {
    id: u64,
    labels: Vec<String>,
    index: HashMap<String, usize>,
    up: Vec<Bits>,
    down: Vec<Bits>,
}

/// A finite T0 space. Cloning shares the underlying data.
#[derive(Debug, Clone)]
pub struct FiniteSpace {
    inner: Arc<Inner>,
}

macro_rules! subset_type {
    ($(#[$m:meta])* $name:ident) => {
        $(#[$m])*
        #[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
        pub struct $name {
            space: u64,
            bits: Bits,
        }

        impl $name {
            pub fn bits(&self) -> Bits {
                self.bits
            }

            pub fn space_id(&self) -> u64 {
                self.space
            }

            pub fn len(&self) -> usize {
                self.bits.len()
            }

            pub fn is_empty(&self) -> bool {
                self.bits.is_empty()
            }

            pub fn contains(&self, i: usize) -> bool {
                self.bits.contains(i)
            }

            pub fn as_points(&self) -> PointSet {
                PointSet { space: self.space, bits: self.bits }
            }
        }
    };
}

subset_type!(
    /// An arbitrary subset of a space's carrier.
    PointSet
);
subset_type!(
    /// A down-set, i.e. a closed set.
    ClosedSet
);
subset_type!(
    /// A nonempty up-set, i.e. a nonempty compact saturated set.
    CompactSat
);

impl CompactSat {
    /// Smyth order: `self ⊑ other` iff `other ⊆ self`.
    pub fn smyth_leq(&self, other: &CompactSat) -> bool {
        other.bits.is_subset(&self.bits)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderOp {
    UpperBounds,
    LowerBounds,
    Cut,
    Maximals,
    Minimals,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    IrrClosed,
    CompactSaturated,
    Closed,
    Open,
    PointClosures,
}

/// Space description document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Description {
    pub points: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub covers: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub opens: Option<Vec<Vec<String>>>,
}

impl FiniteSpace {
    /// Builds a space from a relation that must already be a partial order.
    pub fn from_order<F>(labels: Vec<String>, leq: F) -> Result<FiniteSpace>
    where
        F: Fn(usize, usize) -> bool,
    {
        let n = labels.len();
        check_labels(&labels)?;
        let mut up = vec![Bits::EMPTY; n];
        let mut down = vec![Bits::EMPTY; n];
        for i in 0..n {
            for j in 0..n {
                if leq(i, j) {
                    up[i].insert(j);
                    down[j].insert(i);
                }
            }
        }
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(Error::Invariant(format!("relation is not reflexive at `{}`", labels[i])));
            }
            for j in up[i].iter() {
                if j != i && up[j].contains(i) {
                    return Err(Error::NotT0(labels[i].clone(), labels[j].clone()));
                }
                if !up[j].is_subset(&up[i]) {
                    return Err(Error::Invariant(format!("relation is not transitive through `{}`", labels[j])));
                }
            }
        }
        Ok(Self::assemble(labels, up, down))
    }

    /// Builds a space from cover pairs `(lower, upper)`, closing reflexively and transitively.
    pub fn from_covers(labels: Vec<String>, covers: &[(usize, usize)]) -> Result<FiniteSpace> {
        let n = labels.len();
        check_labels(&labels)?;
        let mut up: Vec<Bits> = (0..n).map(Bits::single).collect();
        for &(a, b) in covers {
            if a >= n || b >= n {
                return Err(Error::Parse(format!("cover ({a}, {b}) out of range")));
            }
            up[a].insert(b);
        }
        // Warshall closure on rows.
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    up[i] = up[i].union(up[k]);
                }
            }
        }
        Self::from_order(labels, |i, j| up[i].contains(j))
    }

    /// Builds a space from an explicit open family, checking it is a T0
    /// topology equal to the up-sets of its specialization order.
    pub fn from_opens(labels: Vec<String>, opens: &[Bits]) -> Result<FiniteSpace> {
        let n = labels.len();
        check_labels(&labels)?;
        let full = Bits::full(n);
        let fam: BTreeSet<Bits> = opens.iter().copied().collect();
        if let Some(o) = fam.iter().find(|o| !o.is_subset(&full)) {
            return Err(Error::Parse(format!("open {:?} out of range", o)));
        }
        let show = |b: &Bits| format!("{:?}", b.iter().map(|i| labels[i].as_str()).collect::<Vec<_>>());
        if !fam.contains(&Bits::EMPTY) {
            return Err(Error::NotATopology("missing the empty set".into()));
        }
        if !fam.contains(&full) {
            return Err(Error::NotATopology("missing the whole carrier".into()));
        }
        for a in &fam {
            for b in &fam {
                if !fam.contains(&a.union(*b)) {
                    return Err(Error::NotATopology(format!("union of {} and {} is missing", show(a), show(b))));
                }
                if !fam.contains(&a.inter(*b)) {
                    return Err(Error::NotATopology(format!("intersection of {} and {} is missing", show(a), show(b))));
                }
            }
        }
        // x ≤ y iff every open containing x contains y.
        let mut up = vec![full; n];
        for o in &fam {
            for x in o.iter() {
                up[x] = up[x].inter(*o);
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if up[i].contains(j) && up[j].contains(i) {
                    return Err(Error::NotT0(labels[i].clone(), labels[j].clone()));
                }
            }
        }
        let space = Self::from_order(labels.clone(), |i, j| up[i].contains(j))?;
        let upsets: BTreeSet<Bits> = space.down_sets(None)?.into_iter().map(|d| full.minus(d)).collect();
        if upsets != fam {
            let extra = upsets.symmetric_difference(&fam).next().copied().unwrap_or_default();
            return Err(Error::NotAlexandroffConsistent(format!("family and up-sets differ at {}", show(&extra))));
        }
        Ok(space)
    }

    pub fn from_description(d: &Description) -> Result<FiniteSpace> {
        let labels = d.points.clone();
        check_labels(&labels)?;
        let index: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
        let look = |l: &str| index.get(l).copied().ok_or_else(|| Error::UnknownLabel(l.to_string()));
        match (&d.covers, &d.opens) {
            (Some(_), Some(_)) => Err(Error::Parse("give either covers or opens, not both".into())),
            (None, None) => Err(Error::Parse("missing covers or opens".into())),
            (Some(cv), None) => {
                let mut pairs = Vec::with_capacity(cv.len());
                for (a, b) in cv {
                    pairs.push((look(a)?, look(b)?));
                }
                Self::from_covers(labels.clone(), &pairs)
            }
            (None, Some(os)) => {
                let mut fam = Vec::with_capacity(os.len());
                for o in os {
                    let mut b = Bits::EMPTY;
                    for l in o {
                        b.insert(look(l)?);
                    }
                    fam.push(b);
                }
                Self::from_opens(labels.clone(), &fam)
            }
        }
    }

    /// Parses a JSON space description.
    pub fn parse(text: &str) -> Result<FiniteSpace> {
        let d: Description = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_description(&d)
    }

    pub fn to_description(&self) -> Description {
        let covers = self
            .hasse_covers()
            .into_iter()
            .map(|(a, b)| (self.label(a).to_string(), self.label(b).to_string()))
            .collect();
        Description { points: self.inner.labels.clone(), covers: Some(covers), opens: None }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_description()).expect("descriptions serialize")
    }

    fn assemble(labels: Vec<String>, up: Vec<Bits>, down: Vec<Bits>) -> FiniteSpace {
        let index = labels.iter().enumerate().map(|(i, l)| (l.clone(), i)).collect();
        let id = NEXT_ID.fetch_add(1, Ordering::Relaxed);
        FiniteSpace { inner: Arc::new(Inner { id, labels, index, up, down }) }
    }

    // ---- small named spaces ----

    pub fn chain(labels: &[&str]) -> FiniteSpace {
        let labels = labels.iter().map(|s| s.to_string()).collect();
        Self::from_order(labels, |i, j| i <= j).expect("chains are posets")
    }

    pub fn antichain(labels: &[&str]) -> FiniteSpace {
        let labels = labels.iter().map(|s| s.to_string()).collect();
        Self::from_order(labels, |i, j| i == j).expect("antichains are posets")
    }

    pub fn sierpinski() -> FiniteSpace {
        Self::chain(&["a", "b"])
    }

    pub fn one_point() -> FiniteSpace {
        Self::chain(&["p"])
    }

    /// `bot < a, b < top`.
    pub fn diamond() -> FiniteSpace {
        let labels = ["bot", "a", "b", "top"].iter().map(|s| s.to_string()).collect();
        Self::from_covers(labels, &[(0, 1), (0, 2), (1, 3), (2, 3)]).expect("diamond is a poset")
    }

    // ---- accessors ----

    pub fn id(&self) -> u64 {
        self.inner.id
    }

    pub fn len(&self) -> usize {
        self.inner.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.inner.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.inner.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.inner.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.inner.index.get(label).copied().ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.inner.up[i].contains(j)
    }

    pub fn up_of_point(&self, i: usize) -> Bits {
        self.inner.up[i]
    }

    pub fn down_of_point(&self, i: usize) -> Bits {
        self.inner.down[i]
    }

    pub fn full(&self) -> Bits {
        Bits::full(self.len())
    }

    pub fn label_list(&self, b: Bits) -> Vec<String> {
        b.iter().map(|i| self.label(i).to_string()).collect()
    }

    /// Two spaces with the same labels and the same order.
    pub fn same_structure(&self, other: &FiniteSpace) -> bool {
        self.labels() == other.labels() && (0..self.len()).all(|i| self.up_of_point(i) == other.up_of_point(i))
    }

    /// Subspace on `keep`, with the inclusion as a list of original indices.
    pub fn induced(&self, keep: Bits) -> Result<(FiniteSpace, Vec<usize>)> {
        let idx = keep.to_vec();
        let labels = idx.iter().map(|&i| self.label(i).to_string()).collect();
        let sub = Self::from_order(labels, |a, b| self.leq(idx[a], idx[b]))?;
        Ok((sub, idx))
    }

    // ---- typed subsets ----

    pub fn set(&self, bits: Bits) -> Result<PointSet> {
        if !bits.is_subset(&self.full()) {
            return Err(Error::SpaceMismatch);
        }
        Ok(PointSet { space: self.id(), bits })
    }

    pub fn set_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<PointSet> {
        let mut b = Bits::EMPTY;
        for l in labels {
            b.insert(self.index_of(l.as_ref())?);
        }
        self.set(b)
    }

    pub fn closed(&self, bits: Bits) -> Result<ClosedSet> {
        self.set(bits)?;
        if !self.is_down(bits) {
            return Err(Error::NotClosed);
        }
        Ok(ClosedSet { space: self.id(), bits })
    }

    pub fn closed_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<ClosedSet> {
        self.closed(self.set_of_labels(labels)?.bits)
    }

    pub fn compact(&self, bits: Bits) -> Result<CompactSat> {
        self.set(bits)?;
        if bits.is_empty() || !self.is_up(bits) {
            return Err(Error::NotCompactSaturated);
        }
        Ok(CompactSat { space: self.id(), bits })
    }

    pub fn compact_of_labels<S: AsRef<str>>(&self, labels: &[S]) -> Result<CompactSat> {
        self.compact(self.set_of_labels(labels)?.bits)
    }

    /// `↑x` as a compact saturated set.
    pub fn up_point(&self, i: usize) -> CompactSat {
        CompactSat { space: self.id(), bits: self.up_of_point(i) }
    }

    /// `↓x` as a closed set.
    pub fn down_point(&self, i: usize) -> ClosedSet {
        ClosedSet { space: self.id(), bits: self.down_of_point(i) }
    }

    pub(crate) fn own(&self, space: u64) -> Result<()> {
        if space == self.id() {
            Ok(())
        } else {
            Err(Error::SpaceMismatch)
        }
    }

    // ---- bit-level calculus ----

    pub fn down(&self, a: Bits) -> Bits {
        a.iter().fold(Bits::EMPTY, |acc, i| acc.union(self.inner.down[i]))
    }

    pub fn up(&self, a: Bits) -> Bits {
        a.iter().fold(Bits::EMPTY, |acc, i| acc.union(self.inner.up[i]))
    }

    pub fn is_down(&self, a: Bits) -> bool {
        a.iter().all(|i| self.inner.down[i].is_subset(&a))
    }

    pub fn is_up(&self, a: Bits) -> bool {
        a.iter().all(|i| self.inner.up[i].is_subset(&a))
    }

    pub fn upper_bounds(&self, a: Bits) -> Bits {
        a.iter().fold(self.full(), |acc, i| acc.inter(self.inner.up[i]))
    }

    pub fn lower_bounds(&self, a: Bits) -> Bits {
        a.iter().fold(self.full(), |acc, i| acc.inter(self.inner.down[i]))
    }

    pub fn maximals(&self, a: Bits) -> Bits {
        Bits::from_iter(a.iter().filter(|&i| self.inner.up[i].inter(a) == Bits::single(i)))
    }

    pub fn minimals(&self, a: Bits) -> Bits {
        Bits::from_iter(a.iter().filter(|&i| self.inner.down[i].inter(a) == Bits::single(i)))
    }

    /// Greatest element of `a`, if any.
    pub fn greatest(&self, a: Bits) -> Option<usize> {
        a.iter().find(|&i| a.is_subset(&self.inner.down[i]))
    }

    /// Least element of `a`, if any.
    pub fn least(&self, a: Bits) -> Option<usize> {
        a.iter().find(|&i| a.is_subset(&self.inner.up[i]))
    }

    /// Supremum of `a`: the least upper bound, if any.
    pub fn sup(&self, a: Bits) -> Option<usize> {
        self.least(self.upper_bounds(a))
    }

    pub fn directed_bits(&self, a: Bits) -> bool {
        if a.is_empty() {
            return false;
        }
        let v = a.to_vec();
        for (k, &i) in v.iter().enumerate() {
            for &j in &v[k + 1..] {
                if !self.inner.up[i].inter(self.inner.up[j]).meets(&a) {
                    return false;
                }
            }
        }
        true
    }

    pub fn chain_bits(&self, a: Bits) -> bool {
        let v = a.to_vec();
        for (k, &i) in v.iter().enumerate() {
            for &j in &v[k + 1..] {
                if !self.leq(i, j) && !self.leq(j, i) {
                    return false;
                }
            }
        }
        true
    }

    /// Finite criterion: the closure of `a` has a greatest element.
    pub fn irreducible_bits(&self, a: Bits) -> bool {
        !a.is_empty() && a.iter().any(|i| a.is_subset(&self.inner.down[i]))
    }

    /// The point whose closure equals the closure of `a`, if there is one.
    pub fn generic_point(&self, a: Bits) -> Option<usize> {
        a.iter().find(|&i| a.is_subset(&self.inner.down[i]))
    }

    /// All down-sets, output-sensitive. `limit` bounds the count.
    pub fn down_sets(&self, limit: Option<usize>) -> Result<Vec<Bits>> {
        let order = self.linear_extension();
        let mut out = Vec::new();
        self.grow_down(&order, 0, Bits::EMPTY, &mut out, limit)?;
        out.sort_by(|a, b| a.size_lex_cmp(b));
        Ok(out)
    }

    fn grow_down(&self, order: &[usize], k: usize, cur: Bits, out: &mut Vec<Bits>, limit: Option<usize>) -> Result<()> {
        if k == order.len() {
            out.push(cur);
            if let Some(l) = limit {
                cap("family", out.len(), l)?;
            }
            return Ok(());
        }
        let x = order[k];
        self.grow_down(order, k + 1, cur, out, limit)?;
        let below = self.inner.down[x];
        let mut strict = below;
        strict.remove(x);
        if strict.is_subset(&cur) {
            let mut next = cur;
            next.insert(x);
            self.grow_down(order, k + 1, next, out, limit)?;
        }
        Ok(())
    }

    /// Points sorted so that every point follows everything below it.
    pub fn linear_extension(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.len()).collect();
        v.sort_by_key(|&i| (self.inner.down[i].len(), i));
        v
    }

    /// Nonempty up-sets, sorted by size then lexicographically.
    pub fn compact_sets(&self, limit: Option<usize>) -> Result<Vec<Bits>> {
        let full = self.full();
        let mut ks: Vec<Bits> = self
            .down_sets(limit.map(|l| l + 1))?
            .into_iter()
            .map(|d| full.minus(d))
            .filter(|u| !u.is_empty())
            .collect();
        ks.sort_by(|a, b| a.size_lex_cmp(b));
        if let Some(l) = limit {
            cap("K(X)", ks.len(), l)?;
        }
        Ok(ks)
    }

    pub fn hasse_covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            for j in self.inner.up[i].iter() {
                if i == j {
                    continue;
                }
                let between = self.inner.up[i].inter(self.inner.down[j]);
                if between.len() == 2 {
                    out.push((i, j));
                }
            }
        }
        out
    }

    // ---- public operations ----

    pub fn closure(&self, a: &PointSet) -> Result<ClosedSet> {
        self.own(a.space)?;
        Ok(ClosedSet { space: self.id(), bits: self.down(a.bits) })
    }

    pub fn saturation(&self, a: &PointSet) -> Result<PointSet> {
        self.own(a.space)?;
        Ok(PointSet { space: self.id(), bits: self.up(a.bits) })
    }

    pub fn order_calculus(&self, a: &PointSet, which: OrderOp) -> Result<PointSet> {
        self.own(a.space)?;
        let b = a.bits;
        let r = match which {
            OrderOp::UpperBounds => self.upper_bounds(b),
            OrderOp::LowerBounds => self.lower_bounds(b),
            OrderOp::Cut => self.lower_bounds(self.upper_bounds(b)),
            OrderOp::Maximals => self.maximals(b),
            OrderOp::Minimals => self.minimals(b),
        };
        Ok(PointSet { space: self.id(), bits: r })
    }

    pub fn is_directed(&self, a: &PointSet) -> Result<bool> {
        self.own(a.space)?;
        Ok(self.directed_bits(a.bits))
    }

    /// A chain inside a directed set with the same closure: its greatest element.
    pub fn chain_core(&self, d: &PointSet) -> Result<PointSet> {
        self.own(d.space)?;
        if d.bits.is_empty() {
            return Err(Error::EmptySet);
        }
        if !self.directed_bits(d.bits) {
            return Err(Error::NotDirected);
        }
        let top = self.greatest(d.bits).ok_or(Error::NotDirected)?;
        Ok(PointSet { space: self.id(), bits: Bits::single(top) })
    }

    pub fn is_irreducible(&self, a: &PointSet) -> Result<bool> {
        self.own(a.space)?;
        if a.bits.is_empty() {
            return Err(Error::EmptySet);
        }
        Ok(self.irreducible_bits(a.bits))
    }

    /// Irreducibility straight from the definition: no two closed sets
    /// cover `a` without one of them containing it.
    pub fn is_irreducible_by_definition(&self, a: &PointSet, family_cap: usize) -> Result<bool> {
        self.own(a.space)?;
        if a.bits.is_empty() {
            return Err(Error::EmptySet);
        }
        cap("carrier for closed-set enumeration", self.len(), family_cap)?;
        let closed = self.down_sets(None)?;
        let b = a.bits;
        for (k, f1) in closed.iter().enumerate() {
            if b.is_subset(f1) {
                continue;
            }
            for f2 in &closed[k..] {
                if !b.is_subset(f2) && b.is_subset(&f1.union(*f2)) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    pub fn enumerate_families(&self, which: FamilyKind, family_cap: usize) -> Result<Vec<PointSet>> {
        let wrap = |v: Vec<Bits>| v.into_iter().map(|bits| PointSet { space: self.id(), bits }).collect();
        let full = self.full();
        match which {
            FamilyKind::PointClosures => {
                let mut v: Vec<Bits> = (0..self.len()).map(|i| self.down_of_point(i)).collect();
                v.sort_by(|a, b| a.size_lex_cmp(b));
                Ok(wrap(v))
            }
            FamilyKind::IrrClosed => {
                let fast = self.enumerate_families(FamilyKind::PointClosures, family_cap)?;
                if self.len() <= family_cap {
                    let mut slow = Vec::new();
                    for d in self.down_sets(None)? {
                        if d.is_empty() {
                            continue;
                        }
                        let p = PointSet { space: self.id(), bits: d };
                        if self.is_irreducible_by_definition(&p, family_cap)? {
                            slow.push(p);
                        }
                    }
                    crate::error::ensure(slow == fast, || "irreducible closed sets differ from point closures".into())?;
                }
                Ok(fast)
            }
            FamilyKind::Closed => {
                cap("carrier for closed-set enumeration", self.len(), family_cap)?;
                Ok(wrap(self.down_sets(None)?))
            }
            FamilyKind::Open => {
                cap("carrier for open-set enumeration", self.len(), family_cap)?;
                let mut v: Vec<Bits> = self.down_sets(None)?.into_iter().map(|d| full.minus(d)).collect();
                v.sort_by(|a, b| a.size_lex_cmp(b));
                Ok(wrap(v))
            }
            FamilyKind::CompactSaturated => {
                cap("carrier for compact-set enumeration", self.len(), family_cap)?;
                Ok(wrap(self.compact_sets(None)?))
            }
        }
    }

    pub fn minimal_points(&self, k: &CompactSat) -> Result<PointSet> {
        self.own(k.space)?;
        let m = self.minimals(k.bits);
        crate::error::ensure(self.up(m) == k.bits, || "compact set is not the up-closure of its minimal points".into())?;
        Ok(PointSet { space: self.id(), bits: m })
    }

    /// `↓(K ∩ A)`, checked against `⋃_{k∈K} ↓(↑k ∩ A)`.
    pub fn down_meet_closed(&self, k: &CompactSat, a: &ClosedSet) -> Result<ClosedSet> {
        self.own(k.space)?;
        self.own(a.space)?;
        let direct = self.down(k.bits.inter(a.bits));
        let pieces = k
            .bits
            .iter()
            .fold(Bits::EMPTY, |acc, x| acc.union(self.down(self.up_of_point(x).inter(a.bits))));
        crate::error::ensure(direct == pieces && self.is_down(direct), || "down-closure of K ∩ A differs from the pointwise union".into())?;
        Ok(ClosedSet { space: self.id(), bits: direct })
    }

    /// DOT rendering of the Hasse diagram, with an optional legend mapping
    /// point labels to descriptions.
    pub fn to_dot(&self, name: &str, legend: &[(String, Vec<String>)]) -> String {
        let mut s = String::new();
        s.push_str(&format!("digraph \"{}\" {{\n  rankdir=BT;\n  node [shape=ellipse];\n", escape(name)));
        for l in self.labels() {
            s.push_str(&format!("  \"{}\";\n", escape(l)));
        }
        for (a, b) in self.hasse_covers() {
            s.push_str(&format!("  \"{}\" -> \"{}\";\n", escape(self.label(a)), escape(self.label(b))));
        }
        if !legend.is_empty() {
            let rows: Vec<String> = legend
                .iter()
                .map(|(k, v)| escape(&format!("{} = {{{}}}", k, v.join(", "))))
                .collect();
            s.push_str(&format!("  legend [shape=note, label=\"{}\\l\"];\n", rows.join("\\l")));
        }
        s.push_str("}\n");
        s
    }
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn check_labels(labels: &[String]) -> Result<()> {
    if labels.is_empty() {
        return Err(Error::EmptySpace);
    }
    cap("carrier", labels.len(), MAX_POINTS)?;
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// All subsets of the carrier of a small space, as bitsets.
pub fn all_subsets(x: &FiniteSpace) -> impl Iterator<Item = Bits> {
    subsets_of(x.full())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: &FiniteSpace, ls: &[&str]) -> Bits {
        x.set_of_labels(ls).unwrap().bits()
    }

    #[test]
    fn opens_roundtrip_to_order() {
        let x = FiniteSpace::parse(r#"{"points":["a","b"],"opens":[[],["b"],["a","b"]]}"#).unwrap();
        assert!(x.leq(0, 1));
        assert!(!x.leq(1, 0));
    }

    #[test]
    fn rejects_bad_families() {
        let e = FiniteSpace::parse(r#"{"points":["a","b"],"opens":[[],["a","b"]]}"#).unwrap_err();
        assert!(matches!(e, Error::NotT0(..)));
        let e = FiniteSpace::parse(r#"{"points":["a","b","c"],"opens":[[],["a"],["b"],["a","b","c"]]}"#).unwrap_err();
        assert!(matches!(e, Error::NotATopology(_)));
        let e = FiniteSpace::parse(r#"{"points":["a","a"],"covers":[]}"#).unwrap_err();
        assert!(matches!(e, Error::DuplicateLabel(_)));
        let e = FiniteSpace::parse(r#"{"points":[],"covers":[]}"#).unwrap_err();
        assert_eq!(e, Error::EmptySpace);
        let e = FiniteSpace::parse(r#"{"points":["a","b"],"covers":[["a","b"],["b","a"]]}"#).unwrap_err();
        assert!(matches!(e, Error::NotT0(..)));
    }

    #[test]
    fn down_sets_of_antichain() {
        let x = FiniteSpace::antichain(&["a", "b", "c"]);
        assert_eq!(x.down_sets(None).unwrap().len(), 8);
        assert!(x.down_sets(Some(5)).is_err());
    }

    #[test]
    fn cut_and_bounds() {
        let x = FiniteSpace::diamond();
        let a = b(&x, &["a", "b"]);
        assert_eq!(x.upper_bounds(a), b(&x, &["top"]));
        assert_eq!(x.lower_bounds(x.upper_bounds(a)), x.full());
        assert_eq!(x.sup(a), Some(3));
        assert_eq!(x.maximals(x.full()), b(&x, &["top"]));
    }

    #[test]
    fn directedness() {
        let x = FiniteSpace::diamond();
        assert!(x.directed_bits(b(&x, &["bot", "a", "top"])));
        assert!(!x.directed_bits(b(&x, &["a", "b"])));
        assert!(!x.directed_bits(Bits::EMPTY));
    }

    #[test]
    fn hasse_of_diamond() {
        assert_eq!(FiniteSpace::diamond().hasse_covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn mismatched_space_is_rejected() {
        let x = FiniteSpace::sierpinski();
        let y = FiniteSpace::sierpinski();
        let a = y.set_of_labels(&["a"]).unwrap();
        assert_eq!(x.closure(&a).unwrap_err(), Error::SpaceMismatch);
    }
}
