//! Smyth and Hoare power spaces, their functor actions, the union map, and
//! open filters of the open-set lattice.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::bits::Bits;
use crate::config::Caps;
use crate::error::{cap, ensure, Error, Result};
use crate::map::SpaceMap;
use crate::space::{ClosedSet, CompactSat, FiniteSpace, PointSet};
use crate::system::{family_bits, family_member_bits, Base, SubsetSystemId};

const R: SubsetSystemId = SubsetSystemId::Base(Base::R);

/// `K(X)` ordered by reverse inclusion, with the upper Vietoris topology.
#[derive(Debug, Clone)]
pub struct SmythSpace {
    base: FiniteSpace,
    carrier: Vec<Bits>,
    index: HashMap<Bits, usize>,
    space: FiniteSpace,
}

impl SmythSpace {
    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn carrier(&self) -> &[Bits] {
        &self.carrier
    }

    pub fn as_space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn index_of(&self, k: Bits) -> Option<usize> {
        self.index.get(&k).copied()
    }

    pub fn member(&self, i: usize) -> CompactSat {
        self.base.compact(self.carrier[i]).expect("carrier members are compact saturated")
    }

    /// Carrier indices of a family, as a subset of the Smyth space.
    pub fn family_set(&self, family: &[Bits]) -> Result<Bits> {
        let mut s = Bits::EMPTY;
        for k in family {
            s.insert(self.index_of(*k).ok_or(Error::NotCompactSaturated)?);
        }
        Ok(s)
    }

    pub fn set_family(&self, s: Bits) -> Vec<Bits> {
        s.iter().map(|i| self.carrier[i]).collect()
    }

    /// `□U = {K : K ⊆ U}`.
    pub fn box_of(&self, u: Bits) -> Bits {
        Bits::from_iter((0..self.len()).filter(|&i| self.carrier[i].is_subset(&u)))
    }

    /// `◇A = {K : K ∩ A ≠ ∅}`.
    pub fn diamond_of(&self, a: Bits) -> Bits {
        Bits::from_iter((0..self.len()).filter(|&i| self.carrier[i].meets(&a)))
    }

    pub fn legend(&self) -> Vec<(String, Vec<String>)> {
        (0..self.len()).map(|i| (self.space.label(i).to_string(), self.base.label_list(self.carrier[i]))).collect()
    }
}

/// Builds `P_S(X)` and checks that the upper Vietoris topology is the
/// up-set topology of the Smyth order.
pub fn smyth(x: &FiniteSpace, caps: &Caps) -> Result<SmythSpace> {
    let carrier = x.compact_sets(Some(caps.smyth.min(crate::bits::MAX_POINTS)))?;
    let n = carrier.len();
    let labels = (0..n).map(|i| format!("K#{i}")).collect();
    let space = FiniteSpace::from_order(labels, |i, j| carrier[j].is_subset(&carrier[i]))?;
    let index = carrier.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let s = SmythSpace { base: x.clone(), carrier, index, space };
    for i in 0..n {
        // □K_i is the least basic open containing K_i; it must be exactly
        // the principal up-set of K_i, and every basic open must be an up-set.
        let b = s.box_of(s.carrier[i]);
        ensure(b == s.space.up_of_point(i), || format!("□K#{i} differs from the principal up-set"))?;
        ensure(s.space.is_up(b), || format!("□K#{i} is not an up-set"))?;
    }
    ensure(s.space.is_up(s.box_of(Bits::EMPTY)), || "□∅ is not an up-set".into())?;
    Ok(s)
}

/// `x ↦ ↑x`, checked to be an order and topological embedding.
pub fn xi_embed_into(s: &SmythSpace) -> Result<SpaceMap> {
    let x = s.base();
    let a: Vec<usize> = (0..x.len())
        .map(|i| s.index_of(x.up_of_point(i)).expect("principal up-sets are compact"))
        .collect();
    let f = SpaceMap::new(x, s.as_space(), a)?;
    ensure(f.is_injective() && f.is_order_embedding(), || "ξ is not an order embedding".into())?;
    // Preimage of □U is U for every open U, so ξ is a topological embedding.
    for u in s.carrier().iter().copied().chain([Bits::EMPTY]) {
        ensure(f.preimage(s.box_of(u)) == u, || "ξ⁻¹(□U) differs from U".into())?;
    }
    Ok(f)
}

pub fn xi_embed(x: &FiniteSpace, caps: &Caps) -> Result<(SmythSpace, SpaceMap)> {
    let s = smyth(x, caps)?;
    let f = xi_embed_into(&s)?;
    Ok((s, f))
}

/// `P_S(f)(K) = ↑f(K)`, checked for continuity and naturality with ξ.
pub fn smyth_map_between(sx: &SmythSpace, sy: &SmythSpace, f: &SpaceMap) -> Result<SpaceMap> {
    if f.source().id() != sx.base().id() || f.target().id() != sy.base().id() {
        return Err(Error::EndpointMismatch);
    }
    let y = f.target();
    let a: Vec<usize> = sx
        .carrier()
        .iter()
        .map(|k| sy.index_of(y.up(f.image(*k))).expect("↑f(K) is compact saturated"))
        .collect();
    let pf = SpaceMap::new(sx.as_space(), sy.as_space(), a)?;
    let xi_x = xi_embed_into(sx)?;
    let xi_y = xi_embed_into(sy)?;
    let left = xi_x.then(&pf)?;
    let right = f.then(&xi_y)?;
    ensure(left.assignment() == right.assignment(), || "P_S(f) ∘ ξ differs from ξ ∘ f".into())?;
    Ok(pf)
}

pub fn smyth_map(f: &SpaceMap, caps: &Caps) -> Result<SpaceMap> {
    let sx = smyth(f.source(), caps)?;
    let sy = smyth(f.target(), caps)?;
    smyth_map_between(&sx, &sy, f)
}

/// The union map `P_S(P_S(X)) → P_S(X)`.
#[derive(Debug, Clone)]
pub struct UnionMap {
    pub single: SmythSpace,
    pub double: SmythSpace,
    pub map: SpaceMap,
}

/// `𝒦 ↦ ⋃𝒦`, with continuity checked through `⋃⁻¹(□U) = □(□U)`.
pub fn smyth_union(x: &FiniteSpace, caps: &Caps) -> Result<UnionMap> {
    cap("base for the double Smyth space", x.len(), caps.double_smyth)?;
    let single = smyth(x, caps)?;
    let double = smyth(single.as_space(), caps)?;
    let mut a = Vec::with_capacity(double.len());
    for fam in double.carrier() {
        let u = fam.iter().fold(Bits::EMPTY, |acc, i| acc.union(single.carrier()[i]));
        let i = single.index_of(u).ok_or_else(|| Error::Invariant("union of a compact family is not compact".into()))?;
        a.push(i);
    }
    let map = SpaceMap::new(double.as_space(), single.as_space(), a)?;
    for u in single.carrier().iter().copied().chain([Bits::EMPTY]) {
        let bu = single.box_of(u);
        ensure(map.preimage(single.box_of(u)) == double.box_of(bu), || "⋃⁻¹(□U) differs from □(□U)".into())?;
    }
    Ok(UnionMap { single, double, map })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HoareFamily {
    AllClosed,
    IrrClosed,
    Custom(Vec<Bits>),
}

/// A family of nonempty closed sets ordered by inclusion, with the lower
/// Vietoris topology.
#[derive(Debug, Clone)]
pub struct HoareSpace {
    base: FiniteSpace,
    carrier: Vec<Bits>,
    index: HashMap<Bits, usize>,
    space: FiniteSpace,
}

impl HoareSpace {
    pub fn base(&self) -> &FiniteSpace {
        &self.base
    }

    pub fn carrier(&self) -> &[Bits] {
        &self.carrier
    }

    pub fn as_space(&self) -> &FiniteSpace {
        &self.space
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn index_of(&self, a: Bits) -> Option<usize> {
        self.index.get(&a).copied()
    }

    pub fn member(&self, i: usize) -> ClosedSet {
        self.base.closed(self.carrier[i]).expect("carrier members are closed")
    }

    /// `◇U = {A : A ∩ U ≠ ∅}`.
    pub fn diamond_of(&self, u: Bits) -> Bits {
        Bits::from_iter((0..self.len()).filter(|&i| self.carrier[i].meets(&u)))
    }

    pub fn legend(&self) -> Vec<(String, Vec<String>)> {
        (0..self.len()).map(|i| (self.space.label(i).to_string(), self.base.label_list(self.carrier[i]))).collect()
    }

    /// `η(x) = ↓x`, when every point closure is in the carrier; checked to be
    /// an order and topological embedding.
    pub fn eta(&self) -> Result<SpaceMap> {
        let x = &self.base;
        let mut a = Vec::with_capacity(x.len());
        for i in 0..x.len() {
            let j = self
                .index_of(x.down_of_point(i))
                .ok_or_else(|| Error::PreconditionViolated(format!("↓{} is not in the carrier", x.label(i))))?;
            a.push(j);
        }
        let f = SpaceMap::new(x, &self.space, a)?;
        ensure(f.is_injective() && f.is_order_embedding(), || "η is not an order embedding".into())?;
        for i in 0..x.len() {
            let u = x.up_of_point(i);
            ensure(f.preimage(self.diamond_of(u)) == u, || "η⁻¹(◇U) differs from U".into())?;
        }
        Ok(f)
    }
}

pub fn hoare(x: &FiniteSpace, family: &HoareFamily, caps: &Caps) -> Result<HoareSpace> {
    let mut carrier: Vec<Bits> = match family {
        HoareFamily::AllClosed => {
            cap("carrier for closed-set enumeration", x.len(), caps.families)?;
            x.down_sets(None)?.into_iter().filter(|d| !d.is_empty()).collect()
        }
        HoareFamily::IrrClosed => (0..x.len()).map(|i| x.down_of_point(i)).collect(),
        HoareFamily::Custom(v) => {
            for a in v {
                if a.is_empty() {
                    return Err(Error::EmptyMember);
                }
                x.closed(*a)?;
            }
            v.iter().copied().collect::<BTreeSet<_>>().into_iter().collect()
        }
    };
    carrier.sort_by(|a, b| a.size_lex_cmp(b));
    cap("Hoare carrier", carrier.len(), caps.smyth.min(crate::bits::MAX_POINTS))?;
    hoare_from_carrier(x, carrier)
}

pub(crate) fn hoare_from_carrier(x: &FiniteSpace, carrier: Vec<Bits>) -> Result<HoareSpace> {
    let n = carrier.len();
    if n == 0 {
        return Err(Error::EmptyFamily);
    }
    let labels = (0..n).map(|i| format!("A#{i}")).collect();
    let space = FiniteSpace::from_order(labels, |i, j| carrier[i].is_subset(&carrier[j]))?;
    let index = carrier.iter().enumerate().map(|(i, a)| (*a, i)).collect();
    let h = HoareSpace { base: x.clone(), carrier, index, space };
    for i in 0..x.len() {
        let d = h.diamond_of(x.up_of_point(i));
        ensure(h.space.is_up(d), || "◇U is not an up-set".into())?;
    }
    // Principal up-sets are finite intersections of subbasic opens.
    for i in 0..n {
        let gens = x.maximals(h.carrier[i]);
        let meet = gens.iter().fold(Bits::full(n), |acc, m| acc.inter(h.diamond_of(x.up_of_point(m))));
        ensure(meet == h.space.up_of_point(i), || format!("↑A#{i} is not a meet of ◇-opens"))?;
    }
    Ok(h)
}

/// `P_H(f)(A) = cl f(A)`, when the target carrier contains the closures.
pub fn hoare_map_between(hx: &HoareSpace, hy: &HoareSpace, f: &SpaceMap) -> Result<SpaceMap> {
    if f.source().id() != hx.base().id() || f.target().id() != hy.base().id() {
        return Err(Error::EndpointMismatch);
    }
    let y = f.target();
    let mut a = Vec::with_capacity(hx.len());
    for c in hx.carrier() {
        let img = y.down(f.image(*c));
        a.push(hy.index_of(img).ok_or_else(|| Error::PreconditionViolated("cl f(A) is outside the target carrier".into()))?);
    }
    let pf = SpaceMap::new(hx.as_space(), hy.as_space(), a)?;
    if let (Ok(ex), Ok(ey)) = (hx.eta(), hy.eta()) {
        let left = ex.then(&pf)?;
        let right = f.then(&ey)?;
        ensure(left.assignment() == right.assignment(), || "P_H(f) ∘ η differs from η ∘ f".into())?;
    }
    Ok(pf)
}

/// Irreducibility of `A` three ways: directly, of `ξ(A)` in the Smyth
/// space, and of `◇A` there.
pub fn irreducibility_transfer(s: &SmythSpace, a: Bits) -> Result<[bool; 3]> {
    let x = s.base();
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let direct = x.irreducible_bits(a);
    let xi_a = Bits::from_iter(a.iter().map(|i| s.index_of(x.up_of_point(i)).unwrap()));
    let via_xi = s.as_space().irreducible_bits(xi_a);
    let dia = s.diamond_of(a);
    ensure(dia == s.as_space().down(xi_a), || "◇A differs from the down-closure of ξ(A)".into())?;
    let via_dia = s.as_space().irreducible_bits(dia);
    Ok([direct, via_xi, via_dia])
}

// ---- open filters ----

/// A nonempty up-closed, meet-closed family of opens not containing `∅`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OpenFilter {
    pub members: Vec<Bits>,
}

impl OpenFilter {
    pub fn contains(&self, u: &Bits) -> bool {
        self.members.binary_search_by(|m| m.size_lex_cmp(u)).is_ok()
    }

    /// Filter laws over the listed opens of the space.
    pub fn is_filter(&self, opens: &[Bits]) -> bool {
        !self.members.is_empty()
            && !self.contains(&Bits::EMPTY)
            && self.members.iter().all(|u| opens.iter().filter(|v| u.is_subset(v)).all(|v| self.contains(v)))
            && self.members.iter().all(|u| self.members.iter().all(|v| self.contains(&u.inter(*v))))
    }

    pub fn describe(&self, x: &FiniteSpace) -> Vec<Vec<String>> {
        self.members.iter().map(|m| x.label_list(*m)).collect()
    }
}

fn make_filter(mut v: Vec<Bits>) -> OpenFilter {
    v.sort_by(|a, b| a.size_lex_cmp(b));
    v.dedup();
    OpenFilter { members: v }
}

pub(crate) fn opens_of(x: &FiniteSpace, caps: &Caps) -> Result<Vec<Bits>> {
    cap("carrier for open-set enumeration", x.len(), caps.families)?;
    let full = x.full();
    let mut v: Vec<Bits> = x.down_sets(None)?.into_iter().map(|d| full.minus(d)).collect();
    v.sort_by(|a, b| a.size_lex_cmp(b));
    Ok(v)
}

/// All proper open filters. Filters are grown from antichains of generators
/// in the open-set lattice, pruning any extension whose pairwise meets fall
/// outside the generated up-set.
pub fn open_filters(x: &FiniteSpace, caps: &Caps) -> Result<Vec<OpenFilter>> {
    cap("carrier for open filters", x.len(), caps.filters)?;
    let opens = opens_of(x, caps)?;
    let proper: Vec<Bits> = opens.iter().copied().filter(|u| !u.is_empty()).collect();
    let mut found: BTreeSet<OpenFilter> = BTreeSet::new();
    fn grow(proper: &[Bits], opens: &[Bits], start: usize, gens: &mut Vec<Bits>, found: &mut BTreeSet<OpenFilter>) {
        if !gens.is_empty() {
            let members: Vec<Bits> = opens.iter().copied().filter(|u| gens.iter().any(|g| g.is_subset(u))).collect();
            let f = make_filter(members);
            if f.is_filter(opens) {
                found.insert(f);
            }
        }
        for i in start..proper.len() {
            let w = proper[i];
            if gens.iter().any(|g| g.is_subset(&w) || w.is_subset(g)) {
                continue;
            }
            // Meets of generators must contain some generator.
            let ok = gens.iter().all(|g| {
                let m = g.inter(w);
                gens.iter().chain([&w]).any(|r| r.is_subset(&m))
            });
            if !ok {
                continue;
            }
            gens.push(w);
            grow(proper, opens, i + 1, gens, found);
            gens.pop();
        }
    }
    grow(&proper, &opens, 0, &mut Vec::new(), &mut found);
    Ok(found.into_iter().collect())
}

/// `Φ(K) = {U open : K ⊆ U}`.
pub fn phi(x: &FiniteSpace, k: &CompactSat, caps: &Caps) -> Result<OpenFilter> {
    x.own(k.space_id())?;
    let opens = opens_of(x, caps)?;
    Ok(make_filter(opens.into_iter().filter(|u| k.bits().is_subset(u)).collect()))
}

/// `F_𝒜 = ⋃_{K∈𝒜} Φ(K)`, which is a filter exactly when the family is
/// irreducible in the Smyth space.
pub fn filter_of_family(x: &FiniteSpace, family: &[CompactSat], caps: &Caps) -> Result<OpenFilter> {
    let f = family_bits(x, family)?;
    let opens = opens_of(x, caps)?;
    let members: Vec<Bits> = opens.iter().copied().filter(|u| f.iter().any(|k| k.is_subset(u))).collect();
    let filt = make_filter(members);
    let irreducible = family_member_bits(R, &f);
    for u in &filt.members {
        for v in &filt.members {
            if !filt.contains(&u.inter(*v)) {
                ensure(!irreducible, || "an irreducible family failed to induce a filter".into())?;
                return Err(Error::NotAFilter {
                    u: format!("{:?}", x.label_list(*u)),
                    v: format!("{:?}", x.label_list(*v)),
                });
            }
        }
    }
    ensure(irreducible, || "a reducible family induced a filter".into())?;
    Ok(filt)
}

#[derive(Debug, Clone, Serialize)]
pub struct HofmannMislove {
    pub compacts: usize,
    pub filters: usize,
    pub injective: bool,
    pub surjective: bool,
    pub intersections_recover: bool,
}

impl HofmannMislove {
    pub fn bijective(&self) -> bool {
        self.injective && self.surjective && self.intersections_recover
    }
}

/// Compares `Φ : K(X) → OFilt(O(X))` against an independent enumeration of
/// the open filters.
pub fn hofmann_mislove(x: &FiniteSpace, caps: &Caps) -> Result<HofmannMislove> {
    let filters = open_filters(x, caps)?;
    let ks = x.compact_sets(None)?;
    let images: Vec<OpenFilter> = ks.iter().map(|k| phi(x, &x.compact(*k).unwrap(), caps)).collect::<Result<_>>()?;
    let distinct: BTreeSet<&OpenFilter> = images.iter().collect();
    let injective = distinct.len() == images.len();
    let found: BTreeSet<&OpenFilter> = filters.iter().collect();
    let surjective = found == distinct;
    let intersections_recover = filters.iter().all(|f| {
        let meet = f.members.iter().fold(x.full(), |acc, u| acc.inter(*u));
        !meet.is_empty() && phi(x, &x.compact(meet).unwrap(), caps).map(|p| &p == f).unwrap_or(false)
    });
    Ok(HofmannMislove { compacts: ks.len(), filters: filters.len(), injective, surjective, intersections_recover })
}

// ---- family calculus ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyOp {
    Intersection,
    SupInK,
    ClosureIntersectionCheck,
    FourWayEquivalence,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilyResult {
    Set(PointSet),
    Compact(CompactSat),
    Check(bool),
    Conditions([bool; 4]),
}

/// Opens containing `set` in a space: all of them when the space has at
/// most `limit` opens, otherwise only the least one, `↑set`.
pub(crate) fn opens_containing(x: &FiniteSpace, set: Bits, limit: usize) -> Vec<Bits> {
    containing(x, open_list(x, limit).as_deref(), set)
}

/// All opens of a space, if there are at most `limit` of them.
pub(crate) fn open_list(x: &FiniteSpace, limit: usize) -> Option<Vec<Bits>> {
    let full = x.full();
    x.down_sets(Some(limit)).ok().map(|ds| ds.into_iter().map(|d| full.minus(d)).collect())
}

pub(crate) fn containing(x: &FiniteSpace, opens: Option<&[Bits]>, set: Bits) -> Vec<Bits> {
    match opens {
        Some(v) => v.iter().copied().filter(|u| set.is_subset(u)).collect(),
        None => vec![x.up(set)],
    }
}

/// The four equivalent conditions relating a family of compact saturated
/// sets to its intersection.
pub fn many_meets(s: &SmythSpace, family: &[Bits], open_limit: usize) -> Result<[bool; 4]> {
    let q_opens = open_list(s.as_space(), open_limit);
    let x_opens = open_list(s.base(), open_limit);
    many_meets_with(s, family, q_opens.as_deref(), x_opens.as_deref())
}

pub(crate) fn many_meets_with(
    s: &SmythSpace,
    family: &[Bits],
    q_opens: Option<&[Bits]>,
    x_opens: Option<&[Bits]>,
) -> Result<[bool; 4]> {
    let x = s.base();
    let q = s.as_space();
    let idx = s.family_set(family)?;
    let meet_up = idx.iter().fold(q.full(), |acc, i| acc.inter(q.up_of_point(i)));
    let meet = family.iter().fold(x.full(), |acc, k| acc.inter(*k));
    let c1 = containing(q, q_opens, meet_up)
        .iter()
        .all(|u| idx.iter().any(|i| q.up_of_point(i).is_subset(u)));
    let mut x_opens = containing(x, x_opens, meet);
    if !x_opens.contains(&Bits::EMPTY) {
        x_opens.push(Bits::EMPTY);
    }
    let c2 = x_opens
        .iter()
        .filter(|u| meet_up.is_subset(&s.box_of(**u)))
        .all(|u| idx.iter().any(|i| q.up_of_point(i).is_subset(&s.box_of(*u))));
    let c4 = x_opens.iter().filter(|u| meet.is_subset(u)).all(|u| family.iter().any(|k| k.is_subset(u)));
    let c3 = !meet.is_empty() && c4;
    Ok([c1, c2, c3, c4])
}

pub fn family_calculus(x: &FiniteSpace, family: &[CompactSat], which: FamilyOp, caps: &Caps) -> Result<FamilyResult> {
    let f = family_bits(x, family)?;
    let meet = f.iter().fold(x.full(), |acc, k| acc.inter(*k));
    match which {
        FamilyOp::Intersection => Ok(FamilyResult::Set(x.set(meet)?)),
        FamilyOp::SupInK => {
            if meet.is_empty() {
                return Err(Error::EmptyIntersection);
            }
            Ok(FamilyResult::Compact(x.compact(meet)?))
        }
        FamilyOp::ClosureIntersectionCheck => {
            let s = smyth(x, caps)?;
            let idx = s.family_set(&f)?;
            let cl = s.as_space().down(idx);
            let meet_cl = cl.iter().fold(x.full(), |acc, i| acc.inter(s.carrier()[i]));
            ensure(meet_cl == meet, || "intersection differs from the intersection of the closure".into())?;
            Ok(FamilyResult::Check(true))
        }
        FamilyOp::FourWayEquivalence => {
            let s = smyth(x, caps)?;
            let c = many_meets(&s, &f, 4096)?;
            ensure(c.iter().all(|v| *v == c[0]), || format!("the four intersection conditions disagree: {c:?}"))?;
            Ok(FamilyResult::Conditions(c))
        }
    }
}
