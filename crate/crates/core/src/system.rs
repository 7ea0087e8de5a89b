//! Subset systems, the minimal-closed-set machinery behind the topological
//! Rudin lemma, and instance checkers for properties M and Q.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bits::{subsets_of, Bits};
use crate::config::Caps;
use crate::enumerate::random_poset;
use crate::error::{cap, ensure, Error, Result};
use crate::map::SpaceMap;
use crate::space::{ClosedSet, CompactSat, FiniteSpace, PointSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Base {
    S,
    C,
    Cw,
    D,
    Dw,
    R,
    Rw,
}

pub const BASES: [Base; 7] = [Base::S, Base::C, Base::Cw, Base::D, Base::Dw, Base::R, Base::Rw];

/// How a derived system is obtained from its base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Derivation {
    /// `H^d`: sober-determined sets.
    Determined,
    /// `H^R`: H-Rudin sets.
    Rudin,
    /// `H^D`: well-filtered determined sets.
    WellFilteredDetermined,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SubsetSystemId {
    Base(Base),
    Derived(Base, Derivation),
}

impl Base {
    pub fn name(self) -> &'static str {
        match self {
            Base::S => "S",
            Base::C => "C",
            Base::Cw => "Cw",
            Base::D => "D",
            Base::Dw => "Dw",
            Base::R => "R",
            Base::Rw => "Rw",
        }
    }

    /// The system this one agrees with on finite carriers.
    pub fn finite_form(self) -> Base {
        match self {
            Base::Cw => Base::C,
            Base::Dw => Base::D,
            Base::Rw => Base::R,
            b => b,
        }
    }
}

impl fmt::Display for SubsetSystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubsetSystemId::Base(b) => write!(f, "{}", b.name()),
            SubsetSystemId::Derived(b, d) => {
                let k = match d {
                    Derivation::Determined => "d",
                    Derivation::Rudin => "R",
                    Derivation::WellFilteredDetermined => "D",
                };
                write!(f, "{}^{}", b.name(), k)
            }
        }
    }
}

impl Serialize for SubsetSystemId {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl FromStr for Base {
    type Err = Error;

    fn from_str(s: &str) -> Result<Base> {
        Ok(match s.trim() {
            "S" => Base::S,
            "C" => Base::C,
            "Cw" | "Cω" | "C^w" => Base::Cw,
            "D" => Base::D,
            "Dw" | "Dω" | "D^w" => Base::Dw,
            "R" => Base::R,
            "Rw" | "Rω" | "R^w" => Base::Rw,
            other => return Err(Error::Parse(format!("unknown subset system `{other}`"))),
        })
    }
}

impl FromStr for SubsetSystemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<SubsetSystemId> {
        let s = s.trim().replace("^w", "w");
        let parts: Vec<&str> = s.split('^').collect();
        match parts.as_slice() {
            [b] => Ok(SubsetSystemId::Base(b.parse()?)),
            [b, k] => {
                let d = match *k {
                    "d" => Derivation::Determined,
                    "R" => Derivation::Rudin,
                    "D" => Derivation::WellFilteredDetermined,
                    other => return Err(Error::Parse(format!("unknown derivation `{other}`"))),
                };
                Ok(SubsetSystemId::Derived(b.parse()?, d))
            }
            _ => Err(Error::UnsupportedDepth(s.to_string())),
        }
    }
}

impl SubsetSystemId {
    pub fn base(self) -> Base {
        match self {
            SubsetSystemId::Base(b) | SubsetSystemId::Derived(b, _) => b,
        }
    }

    pub fn all_base() -> Vec<SubsetSystemId> {
        BASES.iter().map(|&b| SubsetSystemId::Base(b)).collect()
    }
}

/// Membership of the whole index set `0..n` under `leq`.
pub(crate) fn member_by_order<F: Fn(usize, usize) -> bool>(h: SubsetSystemId, n: usize, leq: F) -> bool {
    if n == 0 {
        return false;
    }
    let has_top = || (0..n).any(|t| (0..n).all(|i| leq(i, t)));
    match h {
        SubsetSystemId::Base(b) => match b.finite_form() {
            Base::S => n == 1,
            Base::C => (0..n).all(|i| (i + 1..n).all(|j| leq(i, j) || leq(j, i))),
            Base::D => (0..n).all(|i| (i + 1..n).all(|j| (0..n).any(|k| leq(i, k) && leq(j, k)))),
            _ => has_top(),
        },
        SubsetSystemId::Derived(..) => has_top(),
    }
}

/// Membership of a nonempty subset of `x`.
pub fn member_bits(h: SubsetSystemId, x: &FiniteSpace, a: Bits) -> bool {
    let v = a.to_vec();
    let inside = member_by_order(h, v.len(), |i, j| x.leq(v[i], v[j]));
    if cfg!(debug_assertions) {
        if let SubsetSystemId::Derived(b, _) = h {
            let base = member_by_order(SubsetSystemId::Base(b), v.len(), |i, j| x.leq(v[i], v[j]));
            debug_assert!(!base || inside, "base membership must imply derived membership");
            debug_assert!(!inside || x.irreducible_bits(a), "derived sets are irreducible");
        }
    }
    inside
}

pub fn h_member(h: SubsetSystemId, x: &FiniteSpace, a: &PointSet) -> Result<bool> {
    x.own(a.space_id())?;
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    Ok(member_bits(h, x, a.bits()))
}

/// Membership of a family of compact saturated sets in `H(P_S(X))`, read
/// through the Smyth order on its members.
pub fn h_family_member(h: SubsetSystemId, x: &FiniteSpace, family: &[CompactSat]) -> Result<bool> {
    let f = family_bits(x, family)?;
    Ok(family_member_bits(h, &f))
}

pub(crate) fn family_member_bits(h: SubsetSystemId, family: &[Bits]) -> bool {
    let f: Vec<Bits> = family.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    member_by_order(h, f.len(), |i, j| f[j].is_subset(&f[i]))
}

pub(crate) fn family_bits(x: &FiniteSpace, family: &[CompactSat]) -> Result<Vec<Bits>> {
    if family.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for k in family {
        x.own(k.space_id())?;
    }
    Ok(family.iter().map(|k| k.bits()).collect())
}

pub(crate) fn meets_all_bits(family: &[Bits], c: Bits) -> bool {
    family.iter().all(|k| k.meets(&c))
}

pub fn meets_all(x: &FiniteSpace, family: &[CompactSat], c: &ClosedSet) -> Result<bool> {
    let f = family_bits(x, family)?;
    x.own(c.space_id())?;
    Ok(meets_all_bits(&f, c.bits()))
}

/// Minimal members of `M(family)`, by exhaustive scan of the down-sets.
pub(crate) fn m_family_bits(x: &FiniteSpace, family: &[Bits], caps: &Caps) -> Result<Vec<Bits>> {
    cap("carrier for minimal closed sets", x.len(), caps.rudin)?;
    let ms: Vec<Bits> = x.down_sets(None)?.into_iter().filter(|d| meets_all_bits(family, *d)).collect();
    let mut out: Vec<Bits> = ms
        .iter()
        .filter(|d| !ms.iter().any(|e| e != *d && e.is_subset(d)))
        .copied()
        .collect();
    out.sort_by(|a, b| a.size_lex_cmp(b));
    Ok(out)
}

pub fn m_family(x: &FiniteSpace, family: &[CompactSat], caps: &Caps) -> Result<Vec<ClosedSet>> {
    let f = family_bits(x, family)?;
    m_family_bits(x, &f, caps)?.into_iter().map(|b| x.closed(b)).collect()
}

pub(crate) fn rudin_descent(x: &FiniteSpace, family: &[Bits], c: Bits) -> Bits {
    let mut cur = c;
    'outer: loop {
        for m in x.maximals(cur).iter() {
            let mut cand = cur;
            cand.remove(m);
            if meets_all_bits(family, cand) {
                cur = cand;
                continue 'outer;
            }
        }
        return cur;
    }
}

/// A minimal closed subset of `c` meeting every member, by greedy removal
/// of maximal points in index order.
pub fn rudin_minimal(x: &FiniteSpace, family: &[CompactSat], c: &ClosedSet) -> Result<ClosedSet> {
    let f = family_bits(x, family)?;
    x.own(c.space_id())?;
    if !meets_all_bits(&f, c.bits()) {
        return Err(Error::NotInM);
    }
    let a = rudin_descent(x, &f, c.bits());
    debug_assert!(x.is_down(a));
    debug_assert!(!family_member_bits(SubsetSystemId::Base(Base::R), &f) || x.irreducible_bits(a));
    x.closed(a)
}

/// A family realizing a set as an H-Rudin set, with the minimal set itself.
#[derive(Debug, Clone)]
pub struct RudinWitness {
    pub family: Vec<CompactSat>,
    pub minimal_set: ClosedSet,
}

impl RudinWitness {
    /// Family admissible for `h`, and the set minimal in `M(family)`.
    pub fn recheck(&self, h: SubsetSystemId, x: &FiniteSpace, caps: &Caps) -> Result<bool> {
        let base = SubsetSystemId::Base(h.base());
        if !h_family_member(base, x, &self.family)? {
            return Ok(false);
        }
        let f = family_bits(x, &self.family)?;
        let a = self.minimal_set.bits();
        if x.len() <= caps.rudin {
            return Ok(m_family_bits(x, &f, caps)?.contains(&a));
        }
        let minimal = meets_all_bits(&f, a)
            && x.maximals(a).iter().all(|m| {
                let mut b = a;
                b.remove(m);
                !meets_all_bits(&f, b)
            });
        Ok(minimal)
    }
}

/// For a set whose closure is `↓g`, the family `{↑g}` makes `↓g` an H-Rudin set.
pub fn witness_for(h: SubsetSystemId, x: &FiniteSpace, a: &PointSet) -> Result<Option<RudinWitness>> {
    if !h_member(h, x, a)? {
        return Ok(None);
    }
    let g = match x.generic_point(a.bits()) {
        Some(g) => g,
        None => return Ok(None),
    };
    Ok(Some(RudinWitness { family: vec![x.up_point(g)], minimal_set: x.down_point(g) }))
}

/// `{↑(K ∩ A) : K ∈ family}` stays admissible.
pub fn property_m_instance(h: SubsetSystemId, x: &FiniteSpace, family: &[CompactSat], a: &ClosedSet) -> Result<bool> {
    let f = family_bits(x, family)?;
    x.own(a.space_id())?;
    if !family_member_bits(h, &f) {
        return Err(Error::PreconditionViolated("family is not admissible for the system".into()));
    }
    if !meets_all_bits(&f, a.bits()) {
        return Err(Error::PreconditionViolated("closed set misses a member of the family".into()));
    }
    Ok(property_m_bits(h, x, &f, a.bits()))
}

pub(crate) fn property_m_bits(h: SubsetSystemId, x: &FiniteSpace, f: &[Bits], a: Bits) -> bool {
    let moved: Vec<Bits> = f.iter().map(|k| x.up(k.inter(a))).collect();
    family_member_bits(h, &moved)
}

/// Some H-set `C ⊆ A` has closure in `M(family)`.
pub fn property_q_instance(
    h: SubsetSystemId,
    x: &FiniteSpace,
    family: &[CompactSat],
    a: &ClosedSet,
    caps: &Caps,
) -> Result<bool> {
    let f = family_bits(x, family)?;
    x.own(a.space_id())?;
    if !meets_all_bits(&f, a.bits()) {
        return Err(Error::PreconditionViolated("closed set misses a member of the family".into()));
    }
    property_q_bits(h, x, &f, a.bits(), caps)
}

pub(crate) fn property_q_bits(h: SubsetSystemId, x: &FiniteSpace, f: &[Bits], a: Bits, caps: &Caps) -> Result<bool> {
    cap("closed set for property Q", a.len(), caps.rudin)?;
    Ok(subsets_of(a).any(|c| !c.is_empty() && meets_all_bits(f, x.down(c)) && member_bits(h, x, c)))
}

// ---- randomized search ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PropertyKind {
    M,
    Q,
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub space: FiniteSpace,
    pub family: Vec<Bits>,
    pub closed: Bits,
}

impl Instance {
    pub fn describe(&self) -> serde_json::Value {
        let x = &self.space;
        serde_json::json!({
            "space": x.to_description(),
            "family": self.family.iter().map(|k| x.label_list(*k)).collect::<Vec<_>>(),
            "closed": x.label_list(self.closed),
        })
    }
}

#[derive(Debug, Clone)]
pub struct SearchReport {
    pub system: SubsetSystemId,
    pub property: PropertyKind,
    pub instances: usize,
    pub counterexample: Option<Instance>,
}

fn random_upset<R: Rng>(rng: &mut R, x: &FiniteSpace) -> Bits {
    let n = x.len();
    let mut gens = Bits::single(rng.gen_range(0..n));
    for i in 0..n {
        if rng.gen_bool(0.2) {
            gens.insert(i);
        }
    }
    x.up(gens)
}

/// A random family admissible for `h`, with a random member of `M(family)`.
pub fn random_instance<R: Rng>(rng: &mut R, h: SubsetSystemId, max_points: usize) -> Instance {
    let x = random_poset(rng, max_points);
    let size = match h.base().finite_form() {
        Base::S => 1,
        _ => rng.gen_range(1..=3),
    };
    // The first member sits inside every other one, so the family is a
    // filtered (for C, nested) family.
    let k0 = random_upset(rng, &x);
    let mut family = vec![k0];
    let mut last = k0;
    for _ in 1..size {
        let grown = match h.base().finite_form() {
            Base::C => last.union(random_upset(rng, &x)),
            _ => k0.union(random_upset(rng, &x)),
        };
        family.push(grown);
        last = grown;
    }
    family.reverse();
    let mut picks = Bits::EMPTY;
    for k in &family {
        let v = k.to_vec();
        picks.insert(v[rng.gen_range(0..v.len())]);
    }
    for i in 0..x.len() {
        if rng.gen_bool(0.15) {
            picks.insert(i);
        }
    }
    let closed = x.down(picks);
    Instance { space: x, family, closed }
}

fn violates(h: SubsetSystemId, kind: PropertyKind, inst: &Instance, caps: &Caps) -> Result<bool> {
    let x = &inst.space;
    if !family_member_bits(h, &inst.family) || !meets_all_bits(&inst.family, inst.closed) {
        return Ok(false);
    }
    Ok(match kind {
        PropertyKind::M => !property_m_bits(h, x, &inst.family, inst.closed),
        PropertyKind::Q => !property_q_bits(h, x, &inst.family, inst.closed, caps)?,
    })
}

/// Removes points and members while the instance stays a counterexample.
pub fn shrink(h: SubsetSystemId, kind: PropertyKind, inst: Instance, caps: &Caps) -> Result<Instance> {
    let mut cur = inst;
    loop {
        let mut improved = false;
        for p in 0..cur.space.len() {
            if cur.space.len() == 1 {
                break;
            }
            let mut keep = cur.space.full();
            keep.remove(p);
            let (sub, idx) = cur.space.induced(keep)?;
            let project = |b: Bits| Bits::from_iter((0..idx.len()).filter(|&i| b.contains(idx[i])));
            let family: Vec<Bits> = cur.family.iter().map(|k| project(*k)).collect();
            if family.iter().any(|k| k.is_empty()) {
                continue;
            }
            let cand = Instance { space: sub, family, closed: project(cur.closed) };
            if violates(h, kind, &cand, caps)? {
                cur = cand;
                improved = true;
                break;
            }
        }
        if !improved && cur.family.len() > 1 {
            for i in 0..cur.family.len() {
                let mut family = cur.family.clone();
                family.remove(i);
                let cand = Instance { space: cur.space.clone(), family, closed: cur.closed };
                if violates(h, kind, &cand, caps)? {
                    cur = cand;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            return Ok(cur);
        }
    }
}

/// Seeded search for a counterexample to property M or Q.
pub fn search_property(
    h: SubsetSystemId,
    kind: PropertyKind,
    seed: u64,
    count: usize,
    max_points: usize,
    caps: &Caps,
) -> Result<SearchReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..count {
        let inst = random_instance(&mut rng, h, max_points);
        debug_assert!(family_member_bits(h, &inst.family));
        if violates(h, kind, &inst, caps)? {
            let small = shrink(h, kind, inst, caps)?;
            return Ok(SearchReport { system: h, property: kind, instances: i + 1, counterexample: Some(small) });
        }
    }
    Ok(SearchReport { system: h, property: kind, instances: count, counterexample: None })
}

// ---- catalogs of H-sets ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    Exhaustive,
    /// Candidates generated from antichains of at most this size.
    Generators(usize),
}

impl fmt::Display for Scope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scope::Exhaustive => write!(f, "exhaustive"),
            Scope::Generators(k) => write!(f, "generated from antichains of size <= {k}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Catalog {
    pub sets: Vec<Bits>,
    pub scope: Scope,
}

/// Antichains of size `1..=k`, in index order.
pub fn antichains(x: &FiniteSpace, k: usize) -> Vec<Bits> {
    fn go(x: &FiniteSpace, start: usize, cur: Bits, k: usize, out: &mut Vec<Bits>) {
        for i in start..x.len() {
            if cur.iter().any(|j| x.leq(i, j) || x.leq(j, i)) {
                continue;
            }
            let mut next = cur;
            next.insert(i);
            out.push(next);
            if next.len() < k {
                go(x, i + 1, next, k, out);
            }
        }
    }
    let mut out = Vec::new();
    go(x, 0, Bits::EMPTY, k, &mut out);
    out
}

/// Candidate subsets for quantifying over H-sets: every nonempty subset for
/// small carriers, otherwise sets built from small antichains.
pub fn candidates(x: &FiniteSpace, caps: &Caps) -> (Vec<Bits>, Scope) {
    if x.len() <= caps.subset_scan {
        return (subsets_of(x.full()).filter(|b| !b.is_empty()).collect(), Scope::Exhaustive);
    }
    let k = if x.len() <= 64 { 3 } else { 2 };
    let mut set: BTreeSet<Bits> = BTreeSet::new();
    for s in antichains(x, k) {
        set.insert(s);
        set.insert(x.down(s));
    }
    for i in 0..x.len() {
        for j in x.up_of_point(i).iter() {
            if i != j {
                set.insert(Bits::from_iter([i, j]));
            }
        }
    }
    let mut v: Vec<Bits> = set.into_iter().collect();
    v.sort_by(|a, b| a.size_lex_cmp(b));
    (v, Scope::Generators(k))
}

pub fn h_sets(h: SubsetSystemId, x: &FiniteSpace, caps: &Caps) -> Catalog {
    let (cands, scope) = candidates(x, caps);
    let sets = cands.into_iter().filter(|a| member_bits(h, x, *a)).collect();
    Catalog { sets, scope }
}

/// Closures of H-sets, without repetition.
pub fn closed_h_sets(x: &FiniteSpace, cat: &Catalog) -> Vec<Bits> {
    let set: BTreeSet<Bits> = cat.sets.iter().map(|a| x.down(*a)).collect();
    let mut v: Vec<Bits> = set.into_iter().collect();
    v.sort_by(|a, b| a.size_lex_cmp(b));
    v
}

// ---- Scott H-topology ----

fn scott_h_open_bits(x: &FiniteSpace, cat: &Catalog, u: Bits) -> bool {
    x.is_up(u)
        && cat.sets.iter().all(|a| match x.sup(*a) {
            Some(s) if u.contains(s) => a.meets(&u),
            _ => true,
        })
}

/// `U = ↑U`, and every H-set whose sup lies in `U` meets `U`.
pub fn scott_h_open(h: SubsetSystemId, x: &FiniteSpace, u: &PointSet, caps: &Caps) -> Result<bool> {
    x.own(u.space_id())?;
    let cat = h_sets(h, x, caps);
    Ok(scott_h_open_bits(x, &cat, u.bits()))
}

/// Sup preservation on H-sets, cross-checked against preimages of Scott
/// H-open sets when the target is small enough to list its subsets.
pub fn scott_h_continuous(h: SubsetSystemId, f: &SpaceMap, caps: &Caps) -> Result<bool> {
    let x = f.source();
    let y = f.target();
    let cat_x = h_sets(h, x, caps);
    let by_sups = cat_x.sets.iter().all(|a| match x.sup(*a) {
        Some(s) => y.sup(f.image(*a)) == Some(f.apply(s)),
        None => true,
    });
    if y.len() <= caps.rudin {
        let cat_y = h_sets(h, y, caps);
        let by_opens = subsets_of(y.full())
            .filter(|u| scott_h_open_bits(y, &cat_y, *u))
            .all(|u| scott_h_open_bits(x, &cat_x, f.preimage(u)));
        ensure(by_opens == by_sups, || {
            format!("Scott {h}-continuity: sup preservation says {by_sups}, open preimages say {by_opens}")
        })?;
    }
    Ok(by_sups)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(s: &str) -> SubsetSystemId {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        for s in ["S", "C", "Cw", "D", "Dw", "R", "Rw", "D^R", "D^d", "D^D", "S^R"] {
            assert_eq!(sys(s).to_string(), s);
        }
        assert_eq!(sys("Cω"), SubsetSystemId::Base(Base::Cw));
        assert!(matches!("D^R^D".parse::<SubsetSystemId>(), Err(Error::UnsupportedDepth(_))));
        assert!("Q".parse::<SubsetSystemId>().is_err());
    }

    #[test]
    fn antichains_of_diamond() {
        let x = FiniteSpace::diamond();
        assert_eq!(antichains(&x, 3).len(), 5);
    }

    #[test]
    fn descent_on_chain() {
        let x = FiniteSpace::chain(&["a", "b", "c"]);
        let k = x.compact_of_labels(&["b", "c"]).unwrap();
        let c = x.closed(x.full()).unwrap();
        let a = rudin_minimal(&x, &[k], &c).unwrap();
        assert_eq!(x.label_list(a.bits()), vec!["a", "b"]);
    }
}
