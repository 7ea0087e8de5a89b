//! Decision procedures for sobriety-type properties. Each property is
//! evaluated through several equivalent characterizations, and their
//! agreement is part of the verdict.

use std::cell::{OnceCell, RefCell};
use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bits::Bits;
use crate::config::Caps;
use crate::error::{ensure, Error, Result};
use crate::power::{containing, many_meets_with, open_filters, open_list, opens_containing, smyth, SmythSpace};
use crate::space::FiniteSpace;
use crate::system::{
    closed_h_sets, h_sets, m_family_bits, member_bits, property_m_bits, Base, Catalog, Derivation,
    Scope, SubsetSystemId,
};

/// Opens or closed sets of a space are listed in full up to this count.
const LIST_LIMIT: usize = 256;
const FACT_LIMIT: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Property {
    T0,
    DSpace,
    Sober,
    WellFiltered,
    OmegaWellFiltered,
    HSober,
    SuperHSober,
    HComplete,
    HBounded,
    Hip,
    SmythHComplete,
    HConsonant,
    LocallyHypercompact,
}

pub const PROPERTIES: [Property; 13] = [
    Property::T0,
    Property::DSpace,
    Property::Sober,
    Property::WellFiltered,
    Property::OmegaWellFiltered,
    Property::HSober,
    Property::SuperHSober,
    Property::HComplete,
    Property::HBounded,
    Property::Hip,
    Property::SmythHComplete,
    Property::HConsonant,
    Property::LocallyHypercompact,
];

impl Property {
    pub fn name(self) -> &'static str {
        match self {
            Property::T0 => "t0",
            Property::DSpace => "d_space",
            Property::Sober => "sober",
            Property::WellFiltered => "well_filtered",
            Property::OmegaWellFiltered => "omega_well_filtered",
            Property::HSober => "h_sober",
            Property::SuperHSober => "super_h_sober",
            Property::HComplete => "h_complete",
            Property::HBounded => "h_bounded",
            Property::Hip => "hip",
            Property::SmythHComplete => "smyth_h_complete",
            Property::HConsonant => "h_consonant",
            Property::LocallyHypercompact => "locally_hypercompact",
        }
    }

    pub fn needs_system(self) -> bool {
        matches!(
            self,
            Property::HSober
                | Property::SuperHSober
                | Property::HComplete
                | Property::HBounded
                | Property::Hip
                | Property::SmythHComplete
                | Property::HConsonant
        )
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Property> {
        let s = s.trim().replace('ω', "omega");
        PROPERTIES
            .iter()
            .copied()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownProperty(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum On {
    Base,
    Smyth,
}

/// A single re-checkable fact backing a verdict. Sets are label lists of
/// the space named by `on`; families are lists of base-space label lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum Fact {
    GenericPoint { on: On, set: Vec<String>, point: String },
    NoGenericPoint { on: On, set: Vec<String> },
    Sup { on: On, set: Vec<String>, sup: String },
    NoSup { on: On, set: Vec<String> },
    UpperBound { on: On, set: Vec<String>, bound: String },
    NoUpperBound { on: On, set: Vec<String> },
    MemberInside { family: Vec<Vec<String>>, open: Vec<String>, member: usize },
    NoMemberInside { family: Vec<Vec<String>>, open: Vec<String> },
    CommonPoint { family: Vec<Vec<String>>, point: String },
    EmptyMeet { family: Vec<Vec<String>> },
    Realized { filter: Vec<Vec<String>>, family: Vec<Vec<String>> },
    Unrealized { filter: Vec<Vec<String>> },
    DistinctClosures { a: String, b: String },
    OpenNeighborhood { point: String, generators: Vec<String> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvidenceKind {
    Certificate,
    Counterexample,
}

#[derive(Debug, Clone, Serialize)]
pub struct Evidence {
    pub kind: EvidenceKind,
    pub facts: Vec<Fact>,
    /// Number of facts established; only the first few are recorded.
    pub total: usize,
    pub scope: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct Characterization {
    pub name: String,
    pub value: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub property: String,
    pub holds: bool,
    pub evidence: Evidence,
    pub characterizations: Vec<Characterization>,
    pub characterizations_agreed: bool,
}

impl Verdict {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("verdicts serialize")
    }

    /// Re-evaluates every recorded fact against the space.
    pub fn recheck(&self, x: &FiniteSpace, caps: &Caps) -> Result<bool> {
        let smyth_space = OnceCell::new();
        let s = || -> Result<&SmythSpace> {
            if smyth_space.get().is_none() {
                let _ = smyth_space.set(smyth(x, caps)?);
            }
            Ok(smyth_space.get().unwrap())
        };
        for fact in &self.evidence.facts {
            if !recheck_fact(x, fact, &s)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn recheck_fact<'a, F>(x: &FiniteSpace, fact: &Fact, s: &F) -> Result<bool>
where
    F: Fn() -> Result<&'a SmythSpace>,
{
    let space_of = |on: &On| -> Result<FiniteSpace> {
        Ok(match on {
            On::Base => x.clone(),
            On::Smyth => s()?.as_space().clone(),
        })
    };
    let bits = |y: &FiniteSpace, ls: &[String]| -> Result<Bits> { Ok(y.set_of_labels(ls)?.bits()) };
    let fam = |f: &[Vec<String>]| -> Result<Vec<Bits>> { f.iter().map(|k| bits(x, k)).collect() };
    Ok(match fact {
        Fact::GenericPoint { on, set, point } => {
            let y = space_of(on)?;
            y.down(bits(&y, set)?) == y.down_of_point(y.index_of(point)?)
        }
        Fact::NoGenericPoint { on, set } => {
            let y = space_of(on)?;
            let a = y.down(bits(&y, set)?);
            (0..y.len()).all(|p| y.down_of_point(p) != a)
        }
        Fact::Sup { on, set, sup } => {
            let y = space_of(on)?;
            let a = bits(&y, set)?;
            let p = y.index_of(sup)?;
            y.upper_bounds(a).contains(p) && y.upper_bounds(a).is_subset(&y.up_of_point(p))
        }
        Fact::NoSup { on, set } => {
            let y = space_of(on)?;
            y.least(y.upper_bounds(bits(&y, set)?)).is_none()
        }
        Fact::UpperBound { on, set, bound } => {
            let y = space_of(on)?;
            y.upper_bounds(bits(&y, set)?).contains(y.index_of(bound)?)
        }
        Fact::NoUpperBound { on, set } => {
            let y = space_of(on)?;
            y.upper_bounds(bits(&y, set)?).is_empty()
        }
        Fact::MemberInside { family, open, member } => {
            let f = fam(family)?;
            let u = bits(x, open)?;
            x.is_up(u) && f.get(*member).map(|k| k.is_subset(&u)).unwrap_or(false)
        }
        Fact::NoMemberInside { family, open } => {
            let f = fam(family)?;
            let u = bits(x, open)?;
            let meet = f.iter().fold(x.full(), |acc, k| acc.inter(*k));
            x.is_up(u) && meet.is_subset(&u) && f.iter().all(|k| !k.is_subset(&u))
        }
        Fact::CommonPoint { family, point } => {
            let p = x.index_of(point)?;
            fam(family)?.iter().all(|k| k.contains(p))
        }
        Fact::EmptyMeet { family } => fam(family)?.iter().fold(x.full(), |acc, k| acc.inter(*k)).is_empty(),
        Fact::Realized { filter, family } => {
            let f = fam(family)?;
            let members: BTreeSet<Bits> = fam(filter)?.into_iter().collect();
            let all_opens = opens_containing(x, Bits::EMPTY, usize::MAX);
            let induced: BTreeSet<Bits> = all_opens.into_iter().filter(|u| f.iter().any(|k| k.is_subset(u))).collect();
            induced == members
        }
        Fact::Unrealized { .. } => true,
        Fact::DistinctClosures { a, b } => x.down_of_point(x.index_of(a)?) != x.down_of_point(x.index_of(b)?),
        Fact::OpenNeighborhood { point, generators } => {
            let g = bits(x, generators)?;
            let up = x.up(g);
            x.is_up(up) && up.contains(x.index_of(point)?)
        }
    })
}

// ---- shared machinery ----

struct Facts {
    kind_ok: Vec<Fact>,
    bad: Vec<Fact>,
    ok_total: usize,
    bad_total: usize,
}

impl Facts {
    fn new() -> Facts {
        Facts { kind_ok: Vec::new(), bad: Vec::new(), ok_total: 0, bad_total: 0 }
    }

    fn ok(&mut self, f: impl FnOnce() -> Fact) {
        self.ok_total += 1;
        if self.kind_ok.len() < FACT_LIMIT {
            self.kind_ok.push(f());
        }
    }

    fn bad(&mut self, f: impl FnOnce() -> Fact) {
        self.bad_total += 1;
        if self.bad.len() < FACT_LIMIT {
            self.bad.push(f());
        }
    }

    fn holds(&self) -> bool {
        self.bad_total == 0
    }

    fn into_evidence(self, scope: String) -> Evidence {
        if self.bad_total == 0 {
            Evidence { kind: EvidenceKind::Certificate, facts: self.kind_ok, total: self.ok_total, scope }
        } else {
            Evidence { kind: EvidenceKind::Counterexample, facts: self.bad, total: self.bad_total, scope }
        }
    }
}

fn labels(y: &FiniteSpace, b: Bits) -> Vec<String> {
    y.label_list(b)
}

fn family_labels(x: &FiniteSpace, f: &[Bits]) -> Vec<Vec<String>> {
    f.iter().map(|k| x.label_list(*k)).collect()
}

/// Closed sets of a space: all of them up to the listing limit, otherwise
/// principal down-sets, down-sets of antichain pairs, and complements of
/// principal up-sets.
fn closed_sample(y: &FiniteSpace, extra: &[Bits]) -> (Vec<Bits>, String) {
    if let Ok(v) = y.down_sets(Some(LIST_LIMIT)) {
        return (v, "all closed sets".into());
    }
    let full = y.full();
    let mut set: BTreeSet<Bits> = BTreeSet::new();
    set.insert(Bits::EMPTY);
    set.insert(full);
    for i in 0..y.len() {
        set.insert(y.down_of_point(i));
        set.insert(full.minus(y.up_of_point(i)));
    }
    for e in extra {
        set.insert(*e);
    }
    let mut v: Vec<Bits> = set.into_iter().collect();
    v.sort_by(|a, b| a.size_lex_cmp(b));
    (v, "principal closed sets, complements of principal opens, and diamonds of closed sets".into())
}

fn opens_scope(y: &FiniteSpace) -> &'static str {
    if y.down_sets(Some(LIST_LIMIT)).is_ok() {
        "all opens"
    } else {
        "least open (monotone in the open set)"
    }
}

/// Every closed H-set is a point closure, i.e. `H_c(Y) = S_c(Y)`.
fn generic_points(y: &FiniteSpace, cat: &Catalog, on: On) -> Facts {
    let mut facts = Facts::new();
    for c in closed_h_sets(y, cat) {
        match y.greatest(c) {
            Some(p) => facts.ok(|| Fact::GenericPoint { on, set: labels(y, c), point: y.label(p).to_string() }),
            None => facts.bad(|| Fact::NoGenericPoint { on, set: labels(y, c) }),
        }
    }
    facts
}

/// Conditions (2)-(5) of the point-intersection characterization.
fn charact_h_sets(y: &FiniteSpace, cat: &Catalog) -> [bool; 4] {
    let hc = closed_h_sets(y, cat);
    let c2 = cat.sets.iter().all(|a| y.down(*a).meets(&y.upper_bounds(*a)));
    let c3 = hc.iter().all(|a| a.meets(&y.upper_bounds(*a)));
    let opens = open_list(y, LIST_LIMIT);
    let opens_ok = |a: &Bits| {
        let ub = y.upper_bounds(*a);
        containing(y, opens.as_deref(), ub).iter().all(|u| a.meets(u))
    };
    let c4 = cat.sets.iter().all(opens_ok);
    let c5 = hc.iter().all(opens_ok);
    [c2, c3, c4, c5]
}

/// Conditions (2)-(5) of the equational characterization.
fn charact_bounded(y: &FiniteSpace, cat: &Catalog) -> [bool; 4] {
    let hc = closed_h_sets(y, cat);
    let (gamma, _) = closed_sample(y, &[]);
    let bounded = cat.sets.iter().all(|a| !y.upper_bounds(*a).is_empty());
    let eq = |a: &Bits, c: &Bits| {
        let lhs = y.up(c.inter(y.upper_bounds(*a)));
        let rhs = a.iter().fold(y.full(), |acc, p| acc.inter(y.up(c.inter(y.up_of_point(p)))));
        lhs == rhs
    };
    let all = |aa: &[Bits], cc: &[Bits]| aa.iter().all(|a| cc.iter().all(|c| eq(a, c)));
    [
        bounded && all(&cat.sets, &gamma),
        bounded && all(&hc, &gamma),
        bounded && all(&cat.sets, &hc),
        bounded && all(&hc, &hc),
    ]
}

fn irreducible_closed_definitional(closed: &[Bits]) -> Vec<Bits> {
    closed
        .iter()
        .filter(|a| !a.is_empty())
        .filter(|a| {
            let inside: Vec<&Bits> = closed.iter().filter(|f| f.is_subset(a) && f != a).collect();
            !inside.iter().enumerate().any(|(i, f1)| inside[i..].iter().any(|f2| f1.union(**f2) == **a))
        })
        .copied()
        .collect()
}

/// The checker for one space; the Smyth space is built at most once.
pub struct Checker<'a> {
    x: &'a FiniteSpace,
    caps: Caps,
    smyth: OnceCell<SmythSpace>,
    catalogs: RefCell<HashMap<(SubsetSystemId, On), Rc<Catalog>>>,
    /// Keyed by catalog contents: systems agreeing on the Smyth space share a report.
    supers: RefCell<HashMap<Vec<Bits>, CrossReport>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CrossReport {
    pub system: SubsetSystemId,
    pub conditions: Vec<Characterization>,
    pub agreed: bool,
    pub scope: String,
}

impl CrossReport {
    fn new(system: SubsetSystemId, conditions: Vec<(String, bool)>, scope: String) -> CrossReport {
        let agreed = conditions.windows(2).all(|w| w[0].1 == w[1].1);
        let conditions = conditions.into_iter().map(|(name, value)| Characterization { name, value }).collect();
        CrossReport { system, conditions, agreed, scope }
    }

    pub fn value(&self, name: &str) -> Option<bool> {
        self.conditions.iter().find(|c| c.name == name).map(|c| c.value)
    }
}

fn chars(v: Vec<(String, bool)>) -> (Vec<Characterization>, bool) {
    let agreed = v.windows(2).all(|w| w[0].1 == w[1].1);
    (v.into_iter().map(|(name, value)| Characterization { name, value }).collect(), agreed)
}

impl<'a> Checker<'a> {
    pub fn new(x: &'a FiniteSpace, caps: &Caps) -> Checker<'a> {
        Checker { x, caps: *caps, smyth: OnceCell::new(), catalogs: RefCell::default(), supers: RefCell::default() }
    }

    pub fn smyth(&self) -> Result<&SmythSpace> {
        if self.smyth.get().is_none() {
            let s = smyth(self.x, &self.caps)?;
            let _ = self.smyth.set(s);
        }
        Ok(self.smyth.get().unwrap())
    }

    fn catalog(&self, h: SubsetSystemId, on: On) -> Result<Rc<Catalog>> {
        if let Some(c) = self.catalogs.borrow().get(&(h, on)) {
            return Ok(c.clone());
        }
        let cat = Rc::new(match on {
            On::Base => h_sets(h, self.x, &self.caps),
            On::Smyth => h_sets(h, self.smyth()?.as_space(), &self.caps),
        });
        self.catalogs.borrow_mut().insert((h, on), cat.clone());
        Ok(cat)
    }

    fn families(&self, h: SubsetSystemId) -> Result<(Vec<Vec<Bits>>, Scope)> {
        let s = self.smyth()?;
        let cat = self.catalog(h, On::Smyth)?;
        Ok((cat.sets.iter().map(|f| s.set_family(*f)).collect(), cat.scope))
    }

    pub fn check(&self, prop: Property, h: Option<SubsetSystemId>) -> Result<Verdict> {
        self.check_with(prop, h, false)
    }

    /// With `fast`, only the primary characterization runs.
    pub fn check_with(&self, prop: Property, h: Option<SubsetSystemId>, fast: bool) -> Result<Verdict> {
        if prop.needs_system() && h.is_none() {
            return Err(Error::MissingSystem(prop.name().into()));
        }
        let name = match h {
            Some(h) if prop.needs_system() => format!("{}({})", prop.name(), h),
            _ => prop.name().to_string(),
        };
        let (facts, scope, mut cs) = match prop {
            Property::T0 => self.t0(),
            Property::DSpace => self.d_space(fast)?,
            Property::Sober => self.sober(fast)?,
            Property::WellFiltered => self.well_filtered(fast)?,
            Property::OmegaWellFiltered => self.omega_well_filtered(fast)?,
            Property::HSober => self.h_sober(h.unwrap(), fast)?,
            Property::SuperHSober => self.super_h_sober(h.unwrap(), fast)?,
            Property::HComplete => self.h_complete(h.unwrap(), true)?,
            Property::HBounded => self.h_complete(h.unwrap(), false)?,
            Property::Hip => self.hip(h.unwrap(), false)?,
            Property::SmythHComplete => self.hip(h.unwrap(), true)?,
            Property::HConsonant => return self.h_consonance(h.unwrap()),
            Property::LocallyHypercompact => self.locally_hypercompact(),
        };
        let holds = facts.holds();
        cs.insert(0, ("definition".to_string(), holds));
        let (characterizations, agreed) = chars(cs);
        ensure(agreed, || format!("characterizations of {name} disagree on {}", self.x.to_json()))?;
        Ok(Verdict {
            property: name,
            holds,
            evidence: facts.into_evidence(scope),
            characterizations,
            characterizations_agreed: agreed,
        })
    }

    fn t0(&self) -> (Facts, String, Vec<(String, bool)>) {
        let x = self.x;
        let mut facts = Facts::new();
        for i in 0..x.len() {
            for j in (i + 1)..x.len() {
                if x.down_of_point(i) != x.down_of_point(j) {
                    facts.ok(|| Fact::DistinctClosures { a: x.label(i).into(), b: x.label(j).into() });
                }
            }
        }
        let antisym = (0..x.len()).all(|i| (0..x.len()).all(|j| i == j || !(x.leq(i, j) && x.leq(j, i))));
        (facts, "all pairs of points".into(), vec![("antisymmetric specialization".into(), antisym)])
    }

    fn d_space(&self, fast: bool) -> Result<(Facts, String, Vec<(String, bool)>)> {
        let x = self.x;
        let cat = self.catalog(SubsetSystemId::Base(Base::D), On::Base)?;
        let mut facts = Facts::new();
        for d in &cat.sets {
            let c = x.down(*d);
            match (x.sup(*d), x.greatest(c)) {
                (Some(s), Some(g)) if s == g => {
                    facts.ok(|| Fact::GenericPoint { on: On::Base, set: labels(x, *d), point: x.label(g).into() })
                }
                (None, _) => facts.bad(|| Fact::NoSup { on: On::Base, set: labels(x, *d) }),
                _ => facts.bad(|| Fact::NoGenericPoint { on: On::Base, set: labels(x, *d) }),
            }
        }
        let mut cs = Vec::new();
        if !fast {
            for b in [Base::C, Base::Dw] {
                let cat = self.catalog(SubsetSystemId::Base(b), On::Base)?;
                cs.push((format!("{}-sober", b.name()), generic_points(x, &cat, On::Base).holds()));
            }
        }
        Ok((facts, format!("directed sets, {}", cat.scope), cs))
    }

    fn sober(&self, fast: bool) -> Result<(Facts, String, Vec<(String, bool)>)> {
        let x = self.x;
        let (closed, scope) = closed_sample(x, &[]);
        let irr = irreducible_closed_definitional(&closed);
        let mut facts = Facts::new();
        for a in &irr {
            match x.greatest(*a) {
                Some(g) => facts.ok(|| Fact::GenericPoint { on: On::Base, set: labels(x, *a), point: x.label(g).into() }),
                None => facts.bad(|| Fact::NoGenericPoint { on: On::Base, set: labels(x, *a) }),
            }
        }
        let mut cs = Vec::new();
        if !fast {
            let cat = self.catalog(SubsetSystemId::Base(Base::R), On::Base)?;
            cs.push(("R-sober".into(), generic_points(x, &cat, On::Base).holds()));
            if x.len() <= self.caps.filters {
                cs.push(("S-consonant".into(), self.h_consonance(SubsetSystemId::Base(Base::S))?.holds));
            }
        }
        Ok((facts, format!("irreducible closed sets by pairwise splits over {scope}"), cs))
    }

    /// Filtered subfamilies of `K(X)`: raw families of up to three members,
    /// and up-closures of single generators.
    fn filtered_families(&self, chains_only: bool) -> Result<Vec<Vec<Bits>>> {
        let s = self.smyth()?;
        let ks = s.carrier();
        let k = if ks.len() <= 64 { 3 } else { 2 };
        let mut out: BTreeSet<Vec<Bits>> = BTreeSet::new();
        let filtered = |f: &[Bits]| {
            f.iter().all(|a| f.iter().all(|b| f.iter().any(|c| c.is_subset(&a.inter(*b)))))
        };
        let chain = |f: &[Bits]| f.iter().all(|a| f.iter().all(|b| a.is_subset(b) || b.is_subset(a)));
        let n = ks.len();
        for i in 0..n {
            out.insert(vec![ks[i]]);
            for j in (i + 1)..n {
                let f = vec![ks[i], ks[j]];
                if filtered(&f) && (!chains_only || chain(&f)) {
                    out.insert(f.clone());
                }
                if k >= 3 {
                    for l in (j + 1)..n {
                        let g = vec![ks[i], ks[j], ks[l]];
                        if filtered(&g) && (!chains_only || chain(&g)) {
                            out.insert(g);
                        }
                    }
                }
            }
            if !chains_only {
                let up: Vec<Bits> = ks.iter().copied().filter(|kk| ks[i].is_subset(kk)).collect();
                out.insert(up);
            }
        }
        Ok(out.into_iter().collect())
    }

    fn filtration_facts(&self, families: &[Vec<Bits>]) -> Facts {
        let x = self.x;
        let mut facts = Facts::new();
        let opens = open_list(x, LIST_LIMIT);
        for f in families {
            let meet = f.iter().fold(x.full(), |acc, k| acc.inter(*k));
            for u in containing(x, opens.as_deref(), meet) {
                match f.iter().position(|k| k.is_subset(&u)) {
                    Some(m) => facts.ok(|| Fact::MemberInside { family: family_labels(x, f), open: labels(x, u), member: m }),
                    None => facts.bad(|| Fact::NoMemberInside { family: family_labels(x, f), open: labels(x, u) }),
                }
            }
        }
        facts
    }

    fn well_filtered(&self, fast: bool) -> Result<(Facts, String, Vec<(String, bool)>)> {
        let families = self.filtered_families(false)?;
        let facts = self.filtration_facts(&families);
        let mut cs = Vec::new();
        if !fast {
            let s = self.smyth()?;
            let q = Checker::new(s.as_space(), &self.caps);
            cs.push(("Smyth space is a d-space".into(), q.check(Property::DSpace, None)?.holds));
            let cat = self.catalog(SubsetSystemId::Base(Base::C), On::Smyth)?;
            cs.push(("Smyth space is C-sober".into(), generic_points(s.as_space(), &cat, On::Smyth).holds()));
        }
        let scope = format!("{} filtered families of compact saturated sets, {}", families.len(), opens_scope(self.x));
        Ok((facts, scope, cs))
    }

    fn omega_well_filtered(&self, fast: bool) -> Result<(Facts, String, Vec<(String, bool)>)> {
        let families = self.filtered_families(false)?;
        let facts = self.filtration_facts(&families);
        let mut cs = Vec::new();
        if !fast {
            let s = self.smyth()?;
            let cat = self.catalog(SubsetSystemId::Base(Base::Cw), On::Smyth)?;
            cs.push(("Smyth space is Cw-sober".into(), generic_points(s.as_space(), &cat, On::Smyth).holds()));
            let chains = self.filtered_families(true)?;
            cs.push(("descending chains".into(), self.filtration_facts(&chains).holds()));
        }
        let scope = format!("{} countable filtered families, {}", families.len(), opens_scope(self.x));
        Ok((facts, scope, cs))
    }

    pub fn crosscheck_h_sober(&self, h: SubsetSystemId) -> Result<CrossReport> {
        Ok(crosscheck_on(self.x, h, &*self.catalog(h, On::Base)?, On::Base))
    }

    fn h_sober(&self, h: SubsetSystemId, fast: bool) -> Result<(Facts, String, Vec<(String, bool)>)> {
        let x = self.x;
        let cat = self.catalog(h, On::Base)?;
        let facts = generic_points(x, &cat, On::Base);
        let mut cs = Vec::new();
        if !fast {
            let r = self.crosscheck_h_sober(h)?;
            cs.extend(r.conditions.into_iter().skip(1).map(|c| (c.name, c.value)));
        }
        Ok((facts, format!("closed {h}-sets, {}", cat.scope), cs))
    }

    pub fn crosscheck_super(&self, h: SubsetSystemId) -> Result<CrossReport> {
        let key = self.catalog(h, On::Smyth)?.sets.clone();
        if let Some(r) = self.supers.borrow().get(&key) {
            return Ok(CrossReport { system: h, ..r.clone() });
        }
        let r = self.crosscheck_super_uncached(h)?;
        self.supers.borrow_mut().insert(key, r.clone());
        Ok(r)
    }

    fn crosscheck_super_uncached(&self, h: SubsetSystemId) -> Result<CrossReport> {
        let x = self.x;
        let s = self.smyth()?;
        let q = s.as_space();
        let qcat = self.catalog(h, On::Smyth)?;
        let fams: Vec<Vec<Bits>> = qcat.sets.iter().map(|f| s.set_family(*f)).collect();
        let mut conds: Vec<(String, bool)> = Vec::new();

        // Filtration conditions.
        let sober_q = generic_points(q, &qcat, On::Smyth).holds();
        conds.push(("Smyth space is H-sober".into(), sober_q));
        let pc = charact_h_sets(q, &qcat);
        conds.push(("closure meets the upper bounds in the Smyth space".into(), pc[0]));
        let mut m = [true; 4];
        let q_opens = open_list(q, LIST_LIMIT);
        let x_opens = open_list(x, LIST_LIMIT);
        for f in &fams {
            let c = many_meets_with(s, f, q_opens.as_deref(), x_opens.as_deref())?;
            for i in 0..4 {
                m[i] &= c[i];
            }
        }
        conds.push(("Smyth opens".into(), m[0]));
        conds.push(("boxes of opens".into(), m[1]));
        conds.push(("intersection inside an open".into(), m[3]));
        conds.push(("intersection compact and inside an open".into(), m[2]));

        // Equational conditions, valid under property M.
        let hip = fams.iter().all(|f| !f.iter().fold(x.full(), |acc, k| acc.inter(*k)).is_empty());
        let (gamma_x, _) = closed_sample(x, &[]);
        let irr_x: Vec<Bits> = (0..x.len()).map(|i| x.down_of_point(i)).collect();
        let prop_m = fams.iter().all(|f| {
            let fb: Vec<Bits> = f.clone();
            irr_x.iter().filter(|c| f.iter().all(|k| k.meets(c))).all(|c| property_m_bits(h, x, &fb, *c))
        });
        if prop_m {
            let diamonds: Vec<Bits> = gamma_x.iter().map(|a| s.diamond_of(*a)).collect();
            let (gamma_q, _) = closed_sample(q, &diamonds);
            let irr_q: Vec<Bits> = (0..q.len()).map(|i| q.down_of_point(i)).collect();
            // Tables of ↑(C ∩ ↑p) per closed set, shared across families.
            let eq_q = |aa: &[Bits], cc: &[Bits]| {
                let ubs: Vec<Bits> = aa.iter().map(|a| q.upper_bounds(*a)).collect();
                cc.iter().all(|c| {
                    let table: Vec<Bits> = (0..q.len()).map(|p| q.up(c.inter(q.up_of_point(p)))).collect();
                    let mut lhs: HashMap<Bits, Bits> = HashMap::new();
                    aa.iter().zip(&ubs).all(|(a, ub)| {
                        let l = *lhs.entry(*ub).or_insert_with(|| q.up(c.inter(*ub)));
                        l == a.iter().fold(q.full(), |acc, p| acc.inter(table[p]))
                    })
                })
            };
            let ks = s.carrier();
            let meets: Vec<Bits> = qcat.sets.iter().map(|a| a.iter().fold(x.full(), |acc, i| acc.inter(ks[i]))).collect();
            let eq_x = |cc: &[Bits]| {
                cc.iter().all(|c| {
                    let table: Vec<Bits> = ks.iter().map(|k| x.up(c.inter(*k))).collect();
                    qcat.sets.iter().zip(&meets).all(|(a, meet)| {
                        x.up(c.inter(*meet)) == a.iter().fold(x.full(), |acc, i| acc.inter(table[i]))
                    })
                })
            };
            conds.push(("HIP and equation over closed sets of the Smyth space".into(), hip && eq_q(&qcat.sets, &gamma_q)));
            conds.push(("HIP and equation over irreducible closed sets of the Smyth space".into(), hip && eq_q(&qcat.sets, &irr_q)));
            conds.push(("HIP and equation over closed sets".into(), hip && eq_x(&gamma_x)));
            conds.push(("HIP and equation over irreducible closed sets".into(), hip && eq_x(&irr_x)));

            // Ψ conditions over well-filtered determined and Rudin closed sets.
            let hd = derived_closed_sets(x, h.base(), Derivation::WellFilteredDetermined, &gamma_x);
            let hr = rudin_closed_sets(x, &fams, &self.caps)?;
            let psi = |a: &Bits| {
                let members: Vec<Bits> = ks.iter().copied().filter(|k| k.meets(a)).collect();
                let minimal: Vec<Bits> =
                    members.iter().copied().filter(|m| !members.iter().any(|n| n != m && n.is_subset(m))).collect();
                let ideal = !members.is_empty()
                    && ks.iter().all(|k| !minimal.iter().any(|m| m.is_subset(k)) || k.meets(a))
                    && members.iter().all(|k1| members.iter().all(|k2| minimal.iter().any(|k3| k3.is_subset(&k1.inter(*k2)))));
                ideal && !x.maximals(*a).is_empty() && ks.iter().all(|k| x.is_down(x.down(a.inter(*k))))
            };
            conds.push(("Psi over well-filtered determined closed sets".into(), hd.iter().all(psi)));
            conds.push(("Psi over Rudin closed sets".into(), hr.iter().all(psi)));
        }
        let scope = format!("families: {}; Smyth opens: {}", qcat.scope, opens_scope(q));
        let mut report = CrossReport::new(h, conds, scope);
        report.conditions.push(Characterization { name: "property M on instances".into(), value: prop_m });
        Ok(report)
    }

    fn super_h_sober(&self, h: SubsetSystemId, fast: bool) -> Result<(Facts, String, Vec<(String, bool)>)> {
        let s = self.smyth()?;
        let cat = self.catalog(h, On::Smyth)?;
        let facts = generic_points(s.as_space(), &cat, On::Smyth);
        let mut cs = Vec::new();
        if !fast {
            let r = self.crosscheck_super(h)?;
            cs.extend(
                r.conditions
                    .into_iter()
                    .skip(1)
                    .filter(|c| c.name != "property M on instances")
                    .map(|c| (c.name, c.value)),
            );
            if h.base().finite_form() == Base::R {
                cs.extend(self.heckmann_keimel()?.into_iter().filter(|c| c.0 == "sober" || c.0 == "super sober"));
            }
        }
        let holds = facts.holds();
        if holds {
            let hs = generic_points(self.x, &*self.catalog(h, On::Base)?, On::Base).holds();
            ensure(hs, || format!("super {h}-sober but not {h}-sober"))?;
        }
        Ok((facts, format!("closed {h}-sets of the Smyth space, {}", cat.scope), cs))
    }

    /// Conditions (1) and (7) of the sober/super-sober equivalence; (2)-(6)
    /// are the filtration conditions of `crosscheck_super` for `R`.
    pub fn heckmann_keimel(&self) -> Result<Vec<(String, bool)>> {
        let s = self.smyth()?;
        let sober = Checker::new(self.x, &self.caps).sober(true)?.0.holds();
        let q = s.as_space();
        let (closed_q, _) = closed_sample(q, &[]);
        let irr = irreducible_closed_definitional(&closed_q);
        let super_sober = irr.iter().all(|a| q.greatest(*a).is_some());
        let r = self.crosscheck_super(SubsetSystemId::Base(Base::R))?;
        let mut v = vec![("sober".to_string(), sober)];
        v.extend(r.conditions.into_iter().skip(1).take(5).map(|c| (c.name, c.value)));
        v.push(("super sober".to_string(), super_sober));
        Ok(v)
    }

    fn h_complete(&self, h: SubsetSystemId, complete: bool) -> Result<(Facts, String, Vec<(String, bool)>)> {
        let x = self.x;
        let cat = self.catalog(h, On::Base)?;
        let mut facts = Facts::new();
        for a in &cat.sets {
            if complete {
                match x.sup(*a) {
                    Some(p) => facts.ok(|| Fact::Sup { on: On::Base, set: labels(x, *a), sup: x.label(p).into() }),
                    None => facts.bad(|| Fact::NoSup { on: On::Base, set: labels(x, *a) }),
                }
            } else {
                match x.upper_bounds(*a).first() {
                    Some(p) => facts.ok(|| Fact::UpperBound { on: On::Base, set: labels(x, *a), bound: x.label(p).into() }),
                    None => facts.bad(|| Fact::NoUpperBound { on: On::Base, set: labels(x, *a) }),
                }
            }
        }
        let hc = closed_h_sets(x, &cat);
        let via_closures = if complete {
            hc.iter().all(|c| x.sup(*c).is_some())
        } else {
            hc.iter().all(|c| !x.upper_bounds(*c).is_empty())
        };
        let cs = vec![("closed H-sets".to_string(), via_closures)];
        Ok((facts, format!("{h}-sets, {}", cat.scope), cs))
    }

    fn hip(&self, h: SubsetSystemId, complete: bool) -> Result<(Facts, String, Vec<(String, bool)>)> {
        let x = self.x;
        let s = self.smyth()?;
        let q = s.as_space();
        let cat = self.catalog(h, On::Smyth)?;
        let mut facts = Facts::new();
        for a in &cat.sets {
            let f = s.set_family(*a);
            let meet = f.iter().fold(x.full(), |acc, k| acc.inter(*k));
            match meet.first() {
                Some(p) => facts.ok(|| Fact::CommonPoint { family: family_labels(x, &f), point: x.label(p).into() }),
                None => facts.bad(|| Fact::EmptyMeet { family: family_labels(x, &f) }),
            }
        }
        let via_smyth = if complete {
            cat.sets.iter().all(|a| q.sup(*a).is_some())
        } else {
            cat.sets.iter().all(|a| !q.upper_bounds(*a).is_empty())
        };
        let name = if complete { "Smyth space is H-complete" } else { "Smyth space is H-bounded" };
        // Intersections of up-sets are up-sets, so a nonempty meet is compact.
        Ok((facts, format!("{h}-families of compact sets, {}", cat.scope), vec![(name.into(), via_smyth)]))
    }

    /// Every open filter is induced by some H-family in the Smyth space.
    pub fn h_consonance(&self, h: SubsetSystemId) -> Result<Verdict> {
        let x = self.x;
        let filters = open_filters(x, &self.caps)?;
        let (fams, scope) = self.families(h)?;
        let all_opens = opens_containing(x, Bits::EMPTY, usize::MAX);
        let mut facts = Facts::new();
        for filt in &filters {
            let target: BTreeSet<Bits> = filt.members.iter().copied().collect();
            let hit = fams.iter().find(|f| {
                let induced: BTreeSet<Bits> = all_opens.iter().copied().filter(|u| f.iter().any(|k| k.is_subset(u))).collect();
                induced == target
            });
            match hit {
                Some(f) => facts.ok(|| Fact::Realized { filter: filt.describe(x), family: family_labels(x, f) }),
                None => facts.bad(|| Fact::Unrealized { filter: filt.describe(x) }),
            }
        }
        let holds = facts.holds();
        if h == SubsetSystemId::Base(Base::S) {
            ensure(holds, || format!("a finite space failed S-consonance: {}", x.to_json()))?;
        }
        let (characterizations, agreed) = chars(vec![("definition".into(), holds)]);
        Ok(Verdict {
            property: format!("h_consonant({h})"),
            holds,
            evidence: facts.into_evidence(format!("{} open filters against {h}-families, {scope}", filters.len())),
            characterizations,
            characterizations_agreed: agreed,
        })
    }

    fn locally_hypercompact(&self) -> (Facts, String, Vec<(String, bool)>) {
        let x = self.x;
        let mut facts = Facts::new();
        // For each point, a finite F inside the least open neighbourhood
        // with the point in the interior of ↑F.
        for p in 0..x.len() {
            let u = x.up_of_point(p);
            let found = u.iter().map(Bits::single).chain(
                u.iter().flat_map(|a| u.iter().filter(move |&b| b > a).map(move |b| Bits::from_iter([a, b]))),
            )
            .find(|f| {
                let up = x.up(*f);
                up.is_subset(&u) && x.up_of_point(p).is_subset(&up)
            });
            match found {
                Some(f) => facts.ok(|| Fact::OpenNeighborhood { point: x.label(p).into(), generators: labels(x, f) }),
                None => facts.bad(|| Fact::OpenNeighborhood { point: x.label(p).into(), generators: vec![] }),
            }
        }
        let principal_open = (0..x.len()).all(|p| x.is_up(x.up_of_point(p)));
        (facts, "least open neighbourhoods, generators of size <= 2".into(), vec![("principal up-sets are open".into(), principal_open)])
    }

    /// `υ(P)` equals the Alexandroff topology on finite posets, and the space
    /// is H-sober exactly when it is H-complete.
    pub fn upper_topology_report(&self, h: SubsetSystemId) -> Result<Verdict> {
        let x = self.x;
        let cat = self.catalog(h, On::Base)?;
        let complete = cat.sets.iter().all(|a| x.sup(*a).is_some());
        let sober = generic_points(x, &cat, On::Base).holds();
        let mut cs = vec![("H-complete".to_string(), complete), ("H-sober".to_string(), sober)];
        if let Ok(ds) = x.down_sets(Some(LIST_LIMIT)) {
            // Closed sets of the upper topology: finite unions of principal down-sets.
            let mut gen: BTreeSet<Bits> = BTreeSet::new();
            gen.insert(Bits::EMPTY);
            for i in 0..x.len() {
                let cur: Vec<Bits> = gen.iter().copied().collect();
                for c in cur {
                    gen.insert(c.union(x.down_of_point(i)));
                }
            }
            let all: BTreeSet<Bits> = ds.into_iter().collect();
            cs.push(("upper topology is Alexandroff".into(), gen == all));
            ensure(gen == all, || "upper topology differs from the Alexandroff topology".into())?;
            cs.pop();
        }
        let mut facts = Facts::new();
        for a in &cat.sets {
            match x.sup(*a) {
                Some(p) => facts.ok(|| Fact::Sup { on: On::Base, set: labels(x, *a), sup: x.label(p).into() }),
                None => facts.bad(|| Fact::NoSup { on: On::Base, set: labels(x, *a) }),
            }
        }
        let (characterizations, agreed) = chars(cs);
        ensure(agreed, || "upper topology: H-sober and H-complete disagree".into())?;
        Ok(Verdict {
            property: format!("upper_topology({h})"),
            holds: complete,
            evidence: facts.into_evidence(format!("{h}-sets, {}", cat.scope)),
            characterizations,
            characterizations_agreed: agreed,
        })
    }
}

fn crosscheck_on(y: &FiniteSpace, h: SubsetSystemId, cat: &Catalog, on: On) -> CrossReport {
    let def = generic_points(y, cat, on).holds();
    let a = charact_h_sets(y, cat);
    let b = charact_bounded(y, cat);
    let conds = vec![
        ("H-sober".to_string(), def),
        ("closure meets upper bounds".to_string(), a[0]),
        ("closed H-set meets its upper bounds".to_string(), a[1]),
        ("open containing upper bounds meets the set".to_string(), a[2]),
        ("open containing upper bounds meets the closed H-set".to_string(), a[3]),
        ("bounded, equation over H-sets and closed sets".to_string(), b[0]),
        ("bounded, equation over closed H-sets and closed sets".to_string(), b[1]),
        ("bounded, equation over H-sets and closed H-sets".to_string(), b[2]),
        ("bounded, equation over closed H-sets".to_string(), b[3]),
    ];
    let scope = format!("{}; opens: {}", cat.scope, opens_scope(y));
    CrossReport::new(h, conds, scope)
}

/// Closed sets in a derived system, read by the finite collapse.
pub fn derived_closed_sets(x: &FiniteSpace, base: Base, d: Derivation, closed: &[Bits]) -> Vec<Bits> {
    closed
        .iter()
        .copied()
        .filter(|c| !c.is_empty() && member_bits(SubsetSystemId::Derived(base, d), x, *c))
        .collect()
}

/// H-Rudin closed sets: minimal members of `M(𝒦)` over the given families.
/// A closed set meets every member exactly when it meets every ⊆-minimal
/// member, so families sharing minimal members are evaluated once.
pub fn rudin_closed_sets(x: &FiniteSpace, families: &[Vec<Bits>], caps: &Caps) -> Result<Vec<Bits>> {
    let cores: BTreeSet<Vec<Bits>> = families
        .iter()
        .map(|f| {
            let mut m: Vec<Bits> = f.iter().copied().filter(|k| !f.iter().any(|j| j != k && j.is_subset(k))).collect();
            m.sort();
            m.dedup();
            m
        })
        .collect();
    let mut out: BTreeSet<Bits> = BTreeSet::new();
    for f in &cores {
        for m in m_family_bits(x, f, caps)? {
            out.insert(m);
        }
    }
    let mut v: Vec<Bits> = out.into_iter().collect();
    v.sort_by(|a, b| a.size_lex_cmp(b));
    Ok(v)
}

/// Checks a property with default options.
pub fn check(x: &FiniteSpace, prop: Property, h: Option<SubsetSystemId>, caps: &Caps) -> Result<Verdict> {
    Checker::new(x, caps).check(prop, h)
}

pub fn crosscheck_h_sober(x: &FiniteSpace, h: SubsetSystemId, caps: &Caps) -> Result<CrossReport> {
    Checker::new(x, caps).crosscheck_h_sober(h)
}

pub fn crosscheck_super(x: &FiniteSpace, h: SubsetSystemId, caps: &Caps) -> Result<CrossReport> {
    Checker::new(x, caps).crosscheck_super(h)
}

pub fn h_consonance(x: &FiniteSpace, h: SubsetSystemId, caps: &Caps) -> Result<Verdict> {
    Checker::new(x, caps).h_consonance(h)
}

pub fn upper_topology_report(x: &FiniteSpace, h: SubsetSystemId, caps: &Caps) -> Result<Verdict> {
    Checker::new(x, caps).upper_topology_report(h)
}
