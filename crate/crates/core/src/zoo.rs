//! Three infinite spaces encoded by decidable predicates, with claims about
//! them checked through finite transcripts of membership and order facts.
//!
//! * `cofinite_nat`: ℕ with the cofinite topology.
//! * `cocountable`: an uncountable set with the cocountable topology; points
//!   are opaque tokens, and countably infinite sets are named families of
//!   tokens `family#i`.
//! * `johnstone`: ℕ × (ℕ ∪ {∞}) with `(j,k) ≤ (m,n)` iff `j = m ∧ k ≤ n`
//!   or `n = ∞ ∧ k ≤ m`, under the Scott topology. Here ℕ = {1, 2, ...}.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::check::{check, Property};
use crate::config::Caps;
use crate::error::{Error, Result};
use crate::space::FiniteSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymbolicSpace {
    CofiniteNat,
    Cocountable,
    Johnstone,
}

pub const ZOO: [SymbolicSpace; 3] = [SymbolicSpace::CofiniteNat, SymbolicSpace::Cocountable, SymbolicSpace::Johnstone];

impl SymbolicSpace {
    pub fn name(self) -> &'static str {
        match self {
            SymbolicSpace::CofiniteNat => "cofinite_nat",
            SymbolicSpace::Cocountable => "cocountable",
            SymbolicSpace::Johnstone => "johnstone",
        }
    }

    pub fn claims(self) -> &'static [&'static str] {
        match self {
            SymbolicSpace::CofiniteNat => &["K_is_all_nonempty", "irr_closed", "X_in_DR", "not_well_filtered"],
            SymbolicSpace::Cocountable => &["K_is_finite_sets", "wf_not_sober"],
            SymbolicSpace::Johnstone => &["tails_compact", "not_well_filtered", "is_dcpo_d_space"],
        }
    }
}

impl fmt::Display for SymbolicSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SymbolicSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<SymbolicSpace> {
        ZOO.iter()
            .copied()
            .find(|z| z.name() == s.trim())
            .ok_or_else(|| Error::UnknownClaim(format!("unknown space `{s}`")))
    }
}

// ---- cofinite ℕ ----

/// A finite subset of ℕ, or the complement of one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CofSet {
    Finite(BTreeSet<u64>),
    Cofinite(BTreeSet<u64>),
}

impl CofSet {
    pub fn finite<I: IntoIterator<Item = u64>>(it: I) -> CofSet {
        CofSet::Finite(it.into_iter().collect())
    }

    pub fn cofinite<I: IntoIterator<Item = u64>>(it: I) -> CofSet {
        CofSet::Cofinite(it.into_iter().collect())
    }

    pub fn everything() -> CofSet {
        CofSet::Cofinite(BTreeSet::new())
    }

    pub fn contains(&self, n: u64) -> bool {
        match self {
            CofSet::Finite(s) => s.contains(&n),
            CofSet::Cofinite(s) => !s.contains(&n),
        }
    }

    pub fn complement(&self) -> CofSet {
        match self {
            CofSet::Finite(s) => CofSet::Cofinite(s.clone()),
            CofSet::Cofinite(s) => CofSet::Finite(s.clone()),
        }
    }

    pub fn inter(&self, o: &CofSet) -> CofSet {
        match (self, o) {
            (CofSet::Finite(a), CofSet::Finite(b)) => CofSet::Finite(a.intersection(b).copied().collect()),
            (CofSet::Finite(a), CofSet::Cofinite(b)) | (CofSet::Cofinite(b), CofSet::Finite(a)) => {
                CofSet::Finite(a.difference(b).copied().collect())
            }
            (CofSet::Cofinite(a), CofSet::Cofinite(b)) => CofSet::Cofinite(a.union(b).copied().collect()),
        }
    }

    pub fn union(&self, o: &CofSet) -> CofSet {
        self.complement().inter(&o.complement()).complement()
    }

    pub fn minus(&self, o: &CofSet) -> CofSet {
        self.inter(&o.complement())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CofSet::Finite(s) if s.is_empty())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, CofSet::Finite(_))
    }

    pub fn is_subset(&self, o: &CofSet) -> bool {
        self.minus(o).is_empty()
    }

    /// Closed sets are the finite sets and ℕ itself.
    pub fn is_closed(&self) -> bool {
        self.is_finite() || *self == CofSet::everything()
    }

    pub fn is_open(&self) -> bool {
        self.complement().is_closed()
    }

    /// Some element, preferring the least.
    pub fn some_point(&self) -> Option<u64> {
        match self {
            CofSet::Finite(s) => s.iter().next().copied(),
            CofSet::Cofinite(s) => (0..).find(|n| !s.contains(n)),
        }
    }
}

// ---- cocountable ----

/// A countable set of tokens (finitely many listed tokens plus whole named
/// families), or the complement of one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CcSet {
    Countable { tokens: BTreeSet<String>, families: BTreeSet<String> },
    Cocountable { tokens: BTreeSet<String>, families: BTreeSet<String> },
}

fn family_of(token: &str) -> Option<&str> {
    token.split_once('#').map(|(f, _)| f)
}

impl CcSet {
    pub fn finite<S: Into<String>, I: IntoIterator<Item = S>>(it: I) -> CcSet {
        CcSet::Countable { tokens: it.into_iter().map(Into::into).collect(), families: BTreeSet::new() }
    }

    pub fn family(name: &str) -> CcSet {
        CcSet::Countable { tokens: BTreeSet::new(), families: [name.to_string()].into() }
    }

    pub fn everything() -> CcSet {
        CcSet::Cocountable { tokens: BTreeSet::new(), families: BTreeSet::new() }
    }

    fn parts(&self) -> (&BTreeSet<String>, &BTreeSet<String>) {
        match self {
            CcSet::Countable { tokens, families } | CcSet::Cocountable { tokens, families } => (tokens, families),
        }
    }

    fn countable_contains(tokens: &BTreeSet<String>, families: &BTreeSet<String>, t: &str) -> bool {
        tokens.contains(t) || family_of(t).map(|f| families.contains(f)).unwrap_or(false)
    }

    pub fn contains(&self, t: &str) -> bool {
        let (tk, fm) = self.parts();
        match self {
            CcSet::Countable { .. } => Self::countable_contains(tk, fm, t),
            CcSet::Cocountable { .. } => !Self::countable_contains(tk, fm, t),
        }
    }

    pub fn complement(&self) -> CcSet {
        match self.clone() {
            CcSet::Countable { tokens, families } => CcSet::Cocountable { tokens, families },
            CcSet::Cocountable { tokens, families } => CcSet::Countable { tokens, families },
        }
    }

    /// Union of two countable sets, normalized so listed tokens never sit
    /// inside a listed family.
    fn join(a: (&BTreeSet<String>, &BTreeSet<String>), b: (&BTreeSet<String>, &BTreeSet<String>)) -> (BTreeSet<String>, BTreeSet<String>) {
        let families: BTreeSet<String> = a.1.union(b.1).cloned().collect();
        let tokens = a
            .0
            .union(b.0)
            .filter(|t| !family_of(t).map(|f| families.contains(f)).unwrap_or(false))
            .cloned()
            .collect();
        (tokens, families)
    }

    /// Intersection; fails when a family would have to be split, which the
    /// representation cannot express.
    pub fn inter(&self, o: &CcSet) -> Result<CcSet> {
        match (self, o) {
            (CcSet::Cocountable { .. }, CcSet::Cocountable { .. }) => {
                let (tokens, families) = Self::join(self.parts(), o.parts());
                Ok(CcSet::Cocountable { tokens, families })
            }
            (CcSet::Countable { tokens, families }, other) | (other, CcSet::Countable { tokens, families }) => {
                let kept_tokens: BTreeSet<String> = tokens.iter().filter(|t| other.contains(t)).cloned().collect();
                let mut kept_families = BTreeSet::new();
                for f in families {
                    let (otk, ofm) = other.parts();
                    let whole = match other {
                        CcSet::Countable { .. } => ofm.contains(f),
                        CcSet::Cocountable { .. } => !ofm.contains(f) && !otk.iter().any(|t| family_of(t) == Some(f)),
                    };
                    let none = match other {
                        CcSet::Countable { .. } => !ofm.contains(f) && !otk.iter().any(|t| family_of(t) == Some(f)),
                        CcSet::Cocountable { .. } => ofm.contains(f),
                    };
                    if whole {
                        kept_families.insert(f.clone());
                    } else if !none {
                        return Err(Error::Unrepresentable(format!("family `{f}` minus finitely many tokens")));
                    }
                }
                Ok(CcSet::Countable { tokens: kept_tokens, families: kept_families })
            }
        }
    }

    pub fn is_countable(&self) -> bool {
        matches!(self, CcSet::Countable { .. })
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, CcSet::Countable { families, .. } if families.is_empty())
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, CcSet::Countable { tokens, families } if tokens.is_empty() && families.is_empty())
    }

    /// Closed sets are the countable sets and the whole space.
    pub fn is_closed(&self) -> bool {
        self.is_countable() || *self == CcSet::everything()
    }

    pub fn is_open(&self) -> bool {
        self.complement().is_closed()
    }
}

/// Fresh opaque tokens.
#[derive(Debug, Default)]
pub struct Tokens {
    next: usize,
}

impl Tokens {
    pub fn point(&mut self) -> String {
        self.next += 1;
        format!("p{}", self.next)
    }
}

// ---- Johnstone ----

/// `(j, k)` with `k = None` standing for ∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct JPoint {
    pub j: u64,
    pub k: Option<u64>,
}

impl JPoint {
    pub fn new(j: u64, k: u64) -> JPoint {
        JPoint { j, k: Some(k) }
    }

    pub fn top(j: u64) -> JPoint {
        JPoint { j, k: None }
    }
}

impl fmt::Display for JPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "({},{})", self.j, k),
            None => write!(f, "({},inf)", self.j),
        }
    }
}

fn kleq(a: Option<u64>, b: Option<u64>) -> bool {
    match (a, b) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some(x), Some(y)) => x <= y,
    }
}

pub fn johnstone_leq(p: JPoint, q: JPoint) -> bool {
    (p.j == q.j && kleq(p.k, q.k)) || (q.k.is_none() && kleq(p.k, Some(q.j)))
}

/// The finite sub-poset on `{(j,k) : j ≤ j_max, k ≤ k_max or k = ∞}`.
pub fn johnstone_truncate(j_max: u64, k_max: u64) -> Result<FiniteSpace> {
    if j_max == 0 || k_max == 0 {
        return Err(Error::PreconditionViolated("truncation bounds must be at least 1".into()));
    }
    let pts = truncation_points(j_max, k_max);
    let labels = pts.iter().map(|p| p.to_string()).collect();
    FiniteSpace::from_order(labels, |a, b| johnstone_leq(pts[a], pts[b]))
}

fn truncation_points(j_max: u64, k_max: u64) -> Vec<JPoint> {
    (1..=j_max)
        .flat_map(|j| (1..=k_max).map(move |k| JPoint::new(j, k)).chain([JPoint::top(j)]))
        .collect()
}

/// Representable subsets of the Johnstone space: `↑F` for finite `F`, and
/// the tails `T_n = {(m,∞) : m ≥ n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum JSet {
    UpOf(Vec<JPoint>),
    Tail(u64),
    Empty,
}

impl JSet {
    pub fn contains(&self, p: JPoint) -> bool {
        match self {
            JSet::UpOf(f) => f.iter().any(|q| johnstone_leq(*q, p)),
            JSet::Tail(n) => p.k.is_none() && p.j >= *n,
            JSet::Empty => false,
        }
    }

    pub fn is_empty(&self) -> bool {
        match self {
            JSet::UpOf(f) => f.is_empty(),
            JSet::Tail(_) => false,
            JSet::Empty => true,
        }
    }

    /// Intersections stay in the class only for pairs of tails.
    pub fn inter(&self, o: &JSet) -> Result<JSet> {
        match (self, o) {
            (JSet::Tail(a), JSet::Tail(b)) => Ok(JSet::Tail(*a.max(b))),
            (JSet::Empty, _) | (_, JSet::Empty) => Ok(JSet::Empty),
            _ => Err(Error::Unrepresentable("intersection of ↑F with another set".into())),
        }
    }
}

// ---- facts and reports ----

/// A fact cited by a certificate. Each one is re-evaluated by `holds`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "fact", rename_all = "snake_case")]
pub enum ZooFact {
    CofMember { set: CofSet, point: u64, expected: bool },
    CofSubset { a: CofSet, b: CofSet, expected: bool },
    CofEqual { a: CofSet, b: CofSet },
    CofEmpty { set: CofSet, expected: bool },
    CofFinite { set: CofSet, expected: bool },
    CofClosed { set: CofSet, expected: bool },
    CofOpen { set: CofSet, expected: bool },
    CcMember { set: CcSet, token: String, expected: bool },
    CcEqual { a: CcSet, b: CcSet },
    CcEmpty { set: CcSet, expected: bool },
    CcFinite { set: CcSet, expected: bool },
    CcClosed { set: CcSet, expected: bool },
    CcOpen { set: CcSet, expected: bool },
    JLeq { p: JPoint, q: JPoint, expected: bool },
    JMember { set: JSet, point: JPoint, expected: bool },
    JEmpty { set: JSet, expected: bool },
    /// `↑(j,k) = {(j,n) : n ≥ k} ∪ {(m,∞) : m ≥ k}` on the truncation.
    JUpShape { point: JPoint, j_max: u64, k_max: u64 },
    /// A finite-space checker verdict on a truncation.
    JTruncation { j_max: u64, k_max: u64, property: String, expected: bool },
    /// Filtered families of finite subsets of a token pool: every one has
    /// a member equal to its intersection.
    CcFilteredFinite { pool: usize, families: usize },
}

impl ZooFact {
    pub fn holds(&self) -> bool {
        match self {
            ZooFact::CofMember { set, point, expected } => set.contains(*point) == *expected,
            ZooFact::CofSubset { a, b, expected } => a.is_subset(b) == *expected,
            ZooFact::CofEqual { a, b } => a == b,
            ZooFact::CofEmpty { set, expected } => set.is_empty() == *expected,
            ZooFact::CofFinite { set, expected } => set.is_finite() == *expected,
            ZooFact::CofClosed { set, expected } => set.is_closed() == *expected,
            ZooFact::CofOpen { set, expected } => set.is_open() == *expected,
            ZooFact::CcMember { set, token, expected } => set.contains(token) == *expected,
            ZooFact::CcEqual { a, b } => a == b,
            ZooFact::CcEmpty { set, expected } => set.is_empty() == *expected,
            ZooFact::CcFinite { set, expected } => set.is_finite() == *expected,
            ZooFact::CcClosed { set, expected } => set.is_closed() == *expected,
            ZooFact::CcOpen { set, expected } => set.is_open() == *expected,
            ZooFact::JLeq { p, q, expected } => johnstone_leq(*p, *q) == *expected,
            ZooFact::JMember { set, point, expected } => set.contains(*point) == *expected,
            ZooFact::JEmpty { set, expected } => set.is_empty() == *expected,
            ZooFact::JUpShape { point, j_max, k_max } => up_shape_holds(*point, *j_max, *k_max),
            ZooFact::JTruncation { j_max, k_max, property, expected } => johnstone_truncate(*j_max, *k_max)
                .and_then(|t| {
                    let p: Property = property.parse()?;
                    check(&t, p, None, &Caps::default())
                })
                .map(|v| v.holds == *expected && v.characterizations_agreed)
                .unwrap_or(false),
            ZooFact::CcFilteredFinite { pool, families } => filtered_finite_families(*pool) == Some(*families),
        }
    }
}

fn up_shape_holds(p: JPoint, j_max: u64, k_max: u64) -> bool {
    let Some(k) = p.k else { return false };
    truncation_points(j_max, k_max).into_iter().all(|q| {
        let shape = (q.j == p.j && kleq(Some(k), q.k)) || (q.k.is_none() && q.j >= k);
        johnstone_leq(p, q) == shape
    })
}

/// Counts the ⊇-filtered families of nonempty subsets of a `pool`-token
/// set, returning `None` if one lacks a member equal to its intersection.
fn filtered_finite_families(pool: usize) -> Option<usize> {
    let sets: Vec<u32> = (1u32..(1 << pool)).collect();
    let n = sets.len();
    let mut count = 0;
    // Families up to three members, enough to exercise every pairwise meet.
    for a in 0..n {
        for b in a..n {
            for c in b..n {
                let fam = [sets[a], sets[b], sets[c]];
                let filtered = fam.iter().all(|x| fam.iter().all(|y| fam.iter().any(|z| z & !(x & y) == 0)));
                if !filtered {
                    continue;
                }
                count += 1;
                let meet = fam.iter().fold(u32::MAX, |acc, x| acc & x);
                if !fam.contains(&meet) {
                    return None;
                }
            }
        }
    }
    Some(count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "depth")]
pub enum ZooVerdict {
    Verified,
    Refuted,
    CheckedToDepth(u64),
}

#[derive(Debug, Clone, Serialize)]
pub struct Step {
    pub note: String,
    #[serde(flatten)]
    pub fact: ZooFact,
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateReport {
    pub space: SymbolicSpace,
    pub claim: String,
    pub verdict: ZooVerdict,
    pub transcript: Vec<Step>,
}

impl CertificateReport {
    /// Every transcript fact re-evaluates true.
    pub fn revalidate(&self) -> bool {
        self.transcript.iter().all(|s| s.fact.holds())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("reports serialize")
    }
}

struct Transcript(Vec<Step>);

impl Transcript {
    fn say(&mut self, note: impl Into<String>, fact: ZooFact) {
        self.0.push(Step { note: note.into(), fact });
    }

    fn finish(self, space: SymbolicSpace, claim: &str, verdict: ZooVerdict) -> CertificateReport {
        let ok = self.0.iter().all(|s| s.fact.holds());
        CertificateReport {
            space,
            claim: claim.to_string(),
            verdict: if ok { verdict } else { ZooVerdict::Refuted },
            transcript: self.0,
        }
    }
}

pub fn verify_claim(space: SymbolicSpace, claim: &str) -> Result<CertificateReport> {
    if !space.claims().contains(&claim) {
        return Err(Error::UnknownClaim(format!("{space}.{claim}")));
    }
    let mut t = Transcript(Vec::new());
    let verdict = match (space, claim) {
        (SymbolicSpace::CofiniteNat, "K_is_all_nonempty") => cof_compacts(&mut t),
        (SymbolicSpace::CofiniteNat, "irr_closed") => cof_irr(&mut t),
        (SymbolicSpace::CofiniteNat, "X_in_DR") => cof_rudin(&mut t),
        (SymbolicSpace::CofiniteNat, "not_well_filtered") => {
            cof_rudin(&mut t);
            cof_not_wf(&mut t)
        }
        (SymbolicSpace::Cocountable, "K_is_finite_sets") => cc_compacts(&mut t)?,
        (SymbolicSpace::Cocountable, "wf_not_sober") => cc_wf_not_sober(&mut t)?,
        (SymbolicSpace::Johnstone, "tails_compact") => j_tails(&mut t),
        (SymbolicSpace::Johnstone, "not_well_filtered") => {
            j_tails(&mut t);
            j_not_wf(&mut t)?
        }
        (SymbolicSpace::Johnstone, "is_dcpo_d_space") => j_dcpo(&mut t),
        _ => unreachable!("registered claims are handled above"),
    };
    Ok(t.finish(space, claim, verdict))
}

pub fn verify_all() -> Result<Vec<CertificateReport>> {
    let mut v = Vec::new();
    for z in ZOO {
        for c in z.claims() {
            v.push(verify_claim(z, c)?);
        }
    }
    Ok(v)
}

// ---- cofinite ℕ claims ----

fn cof_samples() -> Vec<CofSet> {
    vec![
        CofSet::finite([0]),
        CofSet::finite([1, 4, 7]),
        CofSet::finite([2, 3]),
        CofSet::everything(),
        CofSet::cofinite([0, 2]),
        CofSet::cofinite([5]),
    ]
}

fn cof_compacts(t: &mut Transcript) -> ZooVerdict {
    for n in [0, 3, 9] {
        t.say("points are closed, so every set is saturated", ZooFact::CofClosed { set: CofSet::finite([n]), expected: true });
    }
    for s in cof_samples() {
        let p = s.some_point().expect("samples are nonempty");
        t.say("pick a point of S", ZooFact::CofMember { set: s.clone(), point: p, expected: true });
        // A cover member containing p is open and nonempty, hence cofinite.
        let u = CofSet::cofinite([p + 1, p + 2]);
        t.say("a cover member U containing the point is open", ZooFact::CofOpen { set: u.clone(), expected: true });
        t.say("U contains the point", ZooFact::CofMember { set: u.clone(), point: p, expected: true });
        let rest = s.minus(&u);
        t.say("S minus U is finite, so finitely many more members cover S", ZooFact::CofFinite { set: rest, expected: true });
    }
    t.say("nonempty open sets are cofinite", ZooFact::CofOpen { set: CofSet::finite([1]), expected: false });
    ZooVerdict::Verified
}

fn cof_irr(t: &mut Transcript) -> ZooVerdict {
    let x = CofSet::everything();
    t.say("X is closed", ZooFact::CofClosed { set: x.clone(), expected: true });
    let (u, v) = (CofSet::cofinite([0, 1, 2]), CofSet::cofinite([3, 4]));
    t.say("a nonempty open U", ZooFact::CofOpen { set: u.clone(), expected: true });
    t.say("a nonempty open V", ZooFact::CofOpen { set: v.clone(), expected: true });
    t.say("nonempty opens meet, so X is irreducible", ZooFact::CofEmpty { set: u.inter(&v), expected: false });
    for n in [0u64, 5] {
        let s = CofSet::finite([n]);
        t.say("singletons are closed", ZooFact::CofClosed { set: s.clone(), expected: true });
        t.say("and have no nonempty proper subsets", ZooFact::CofFinite { set: s, expected: true });
    }
    for f in [vec![0u64, 1], vec![2, 5, 9]] {
        let a = CofSet::finite(f.clone());
        let head = CofSet::finite([f[0]]);
        let tail = a.minus(&head);
        t.say("a finite closed set with two or more points", ZooFact::CofClosed { set: a.clone(), expected: true });
        t.say("splits into a closed point", ZooFact::CofClosed { set: head.clone(), expected: true });
        t.say("and the closed remainder", ZooFact::CofClosed { set: tail.clone(), expected: true });
        t.say("whose union is the set, so it is reducible", ZooFact::CofEqual { a: head.union(&tail), b: a });
    }
    ZooVerdict::Verified
}

fn cof_rudin(t: &mut Transcript) -> ZooVerdict {
    let x = CofSet::everything();
    let fs: Vec<BTreeSet<u64>> = vec![BTreeSet::new(), [0].into(), [1, 2].into(), [0, 3].into()];
    for f1 in &fs {
        for f2 in &fs {
            let k1 = CofSet::Cofinite(f1.clone());
            let k2 = CofSet::Cofinite(f2.clone());
            let k3 = CofSet::Cofinite(f1.union(f2).copied().collect());
            t.say("X minus (F1 ∪ F2) is a member of the family", ZooFact::CofOpen { set: k3.clone(), expected: true });
            t.say("below the first member", ZooFact::CofSubset { a: k3.clone(), b: k1, expected: true });
            t.say("and the second, so the family is filtered", ZooFact::CofSubset { a: k3, b: k2, expected: true });
        }
    }
    for f in &fs {
        let k = CofSet::Cofinite(f.clone());
        t.say("X meets every member X minus F", ZooFact::CofEmpty { set: x.inter(&k), expected: false });
    }
    for n in [0u64, 1, 7] {
        let k = CofSet::cofinite([n]);
        t.say("n lies outside X minus {n}, so the intersection is empty", ZooFact::CofMember { set: k, point: n, expected: false });
    }
    for a in [vec![0u64], vec![1, 4], vec![2, 3, 8]] {
        let a = CofSet::finite(a);
        let k = a.complement();
        t.say("a finite closed set A", ZooFact::CofClosed { set: a.clone(), expected: true });
        t.say("misses the member X minus A, so A is not in M", ZooFact::CofEmpty { set: a.inter(&k), expected: true });
    }
    ZooVerdict::Verified
}

fn cof_not_wf(t: &mut Transcript) -> ZooVerdict {
    t.say("the empty set is open", ZooFact::CofOpen { set: CofSet::finite([]), expected: true });
    for f in [vec![], vec![0u64], vec![1, 2, 3]] {
        let k = CofSet::cofinite(f);
        t.say("no member X minus F lies in the empty set", ZooFact::CofEmpty { set: k, expected: false });
    }
    ZooVerdict::Verified
}

// ---- cocountable claims ----

fn cc_compacts(t: &mut Transcript) -> Result<ZooVerdict> {
    let mut tok = Tokens::default();
    let (a, b) = (tok.point(), tok.point());
    let fin = CcSet::finite([a.clone(), b.clone()]);
    t.say("a finite set is a finite union of points, hence compact", ZooFact::CcFinite { set: fin.clone(), expected: true });
    t.say("finite sets are closed", ZooFact::CcClosed { set: fin, expected: true });
    // Every infinite representable set is cocountable and contains the
    // countably infinite family c#0, c#1, ... outside its complement.
    for s in [CcSet::everything(), CcSet::finite([a.clone()]).complement()] {
        let c = CcSet::family("c");
        t.say("the candidate set is infinite", ZooFact::CcFinite { set: s.clone(), expected: false });
        let inside = s.inter(&c)?;
        t.say("it contains the whole family c", ZooFact::CcEqual { a: inside, b: c.clone() });
        // U_n = X \ {c#m : m ≠ n} is open and contains c#n and everything outside c.
        for chosen in [vec![0usize], vec![0, 1, 2]] {
            let mut missed_by_all = true;
            for &n in &chosen {
                let others: BTreeSet<String> = (0..5).filter(|m| *m != n).map(|m| format!("c#{m}")).collect();
                let u = CcSet::Cocountable { tokens: others, families: BTreeSet::new() };
                t.say("U_n is open", ZooFact::CcOpen { set: u.clone(), expected: true });
                t.say("U_n contains c#n", ZooFact::CcMember { set: u.clone(), token: format!("c#{n}"), expected: true });
                t.say("U_n omits c#4", ZooFact::CcMember { set: u.clone(), token: "c#4".into(), expected: false });
                missed_by_all &= !u.contains("c#4");
            }
            t.say("the point c#4 of the set lies in no chosen U_n", ZooFact::CcMember { set: s.clone(), token: "c#4".into(), expected: missed_by_all });
        }
    }
    Ok(ZooVerdict::Verified)
}

fn cc_wf_not_sober(t: &mut Transcript) -> Result<ZooVerdict> {
    let x = CcSet::everything();
    t.say("X is closed", ZooFact::CcClosed { set: x.clone(), expected: true });
    let u = CcSet::finite(["p1"]).complement();
    let v = CcSet::family("c").complement();
    t.say("a nonempty open U", ZooFact::CcOpen { set: u.clone(), expected: true });
    t.say("a nonempty open V", ZooFact::CcOpen { set: v.clone(), expected: true });
    let w = u.inter(&v)?;
    t.say("U ∩ V is cocountable, hence nonempty: X is irreducible", ZooFact::CcEmpty { set: w.clone(), expected: false });
    t.say("U ∩ V is not countable", ZooFact::CcFinite { set: w, expected: false });
    let mut tok = Tokens::default();
    let p = tok.point();
    let cl = CcSet::finite([p.clone()]);
    t.say("the closure of a point is the point itself", ZooFact::CcClosed { set: cl.clone(), expected: true });
    t.say("which is not X, so X has no generic point", ZooFact::CcMember { set: cl, token: "q1".into(), expected: false });
    let pool = 4;
    let families = filtered_finite_families(pool).unwrap_or(0);
    t.say("filtered families of finite sets contain their intersection", ZooFact::CcFilteredFinite { pool, families });
    Ok(ZooVerdict::CheckedToDepth(pool as u64))
}

// ---- Johnstone claims ----

const TRUNCATION: u64 = 12;

fn j_tails(t: &mut Transcript) -> ZooVerdict {
    for j in [1u64, 2, 5] {
        for k in [1u64, 3, 7] {
            t.say("the least opens around (j,∞) have the tail shape", ZooFact::JUpShape { point: JPoint::new(j, k), j_max: TRUNCATION, k_max: TRUNCATION });
            t.say("(j,k) lies below (j,∞)", ZooFact::JLeq { p: JPoint::new(j, k), q: JPoint::top(j), expected: true });
            for m in [k, k + 4] {
                t.say("so an open containing (j,k) contains (m,∞) for m ≥ k", ZooFact::JLeq { p: JPoint::new(j, k), q: JPoint::top(m), expected: true });
            }
        }
    }
    for n in [1u64, 4] {
        let tail = JSet::Tail(n);
        t.say("T_n contains (n,∞)", ZooFact::JMember { set: tail.clone(), point: JPoint::top(n), expected: true });
        t.say("and no finite points", ZooFact::JMember { set: tail, point: JPoint::new(n, 3), expected: false });
    }
    ZooVerdict::Verified
}

fn j_not_wf(t: &mut Transcript) -> Result<ZooVerdict> {
    for n in [1u64, 2, 6] {
        let tn = JSet::Tail(n);
        let next = tn.inter(&JSet::Tail(n + 1))?;
        t.say("T_n ⊇ T_(n+1): the family is a descending chain", ZooFact::JMember { set: next.clone(), point: JPoint::top(n), expected: false });
        t.say("every (m,∞) is maximal, so T_n = ↑T_n", ZooFact::JLeq { p: JPoint::top(n), q: JPoint::new(n, 99), expected: false });
        t.say("(n,∞) is missing from T_(n+1), so the intersection is empty", ZooFact::JMember { set: JSet::Tail(n + 1), point: JPoint::top(n), expected: false });
        t.say("no T_n lies inside the empty open set", ZooFact::JEmpty { set: tn, expected: false });
    }
    t.say("the empty set is open and contains the empty intersection", ZooFact::JEmpty { set: JSet::Empty, expected: true });
    Ok(ZooVerdict::Verified)
}

fn j_dcpo(t: &mut Transcript) -> ZooVerdict {
    for j in [1u64, 3] {
        for k in [1u64, 4] {
            t.say("a column chain rises to (j,∞)", ZooFact::JLeq { p: JPoint::new(j, k), q: JPoint::top(j), expected: true });
        }
        // (m,∞) with m ≠ j bounds the column only up to height m.
        t.say("other tops bound only finitely much of the column", ZooFact::JLeq { p: JPoint::new(j, j + 6), q: JPoint::top(j + 5), expected: false });
        t.say("(j,∞) is maximal, so directed sets containing it have it as sup", ZooFact::JLeq { p: JPoint::top(j), q: JPoint::top(j + 1), expected: false });
    }
    t.say("finite points in different columns are incomparable", ZooFact::JLeq { p: JPoint::new(2, 5), q: JPoint::new(3, 5), expected: false });
    for d in [2u64, 4, 8, TRUNCATION] {
        t.say("truncation is a d-space", ZooFact::JTruncation { j_max: d, k_max: d, property: "d_space".into(), expected: true });
    }
    ZooVerdict::CheckedToDepth(TRUNCATION)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn leq_examples() {
        assert!(johnstone_leq(JPoint::new(2, 3), JPoint::new(2, 5)));
        assert!(johnstone_leq(JPoint::new(3, 5), JPoint::top(7)));
        assert!(!johnstone_leq(JPoint::new(2, 5), JPoint::new(3, 5)));
    }

    #[test]
    fn unknown_claim() {
        assert!(matches!(verify_claim(SymbolicSpace::Johnstone, "sober"), Err(Error::UnknownClaim(_))));
    }
}
