//! Products, continuous-map spaces, equalizers, retracts, homeomorphism
//! search, and the sobrification-type reflections.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::bits::Bits;
use crate::check::{Checker, Property};
use crate::config::Caps;
use crate::enumerate::posets_up_to;
use crate::error::{cap, ensure, Error, Result};
use crate::map::SpaceMap;
use crate::power::{hoare_from_carrier, hoare_map_between, smyth, smyth_map_between, HoareSpace};
use crate::space::{FamilyKind, FiniteSpace};
use crate::system::{h_sets, Base, SubsetSystemId};

// ---- products ----

#[derive(Debug, Clone)]
pub struct Product {
    pub space: FiniteSpace,
    pub factors: Vec<FiniteSpace>,
    pub projections: Vec<SpaceMap>,
    /// Coordinates of each product point.
    pub coords: Vec<Vec<usize>>,
}

impl Product {
    pub fn index_of(&self, coords: &[usize]) -> usize {
        let mut i = 0;
        for (f, c) in self.factors.iter().zip(coords) {
            i = i * f.len() + c;
        }
        i
    }

    /// `∏ A_i` as a subset of the product.
    pub fn rectangle(&self, parts: &[Bits]) -> Bits {
        Bits::from_iter((0..self.space.len()).filter(|&p| self.coords[p].iter().zip(parts).all(|(c, a)| a.contains(*c))))
    }
}

pub fn product(spaces: &[FiniteSpace], caps: &Caps) -> Result<Product> {
    if spaces.is_empty() {
        return Err(Error::EmptySpace);
    }
    let total = spaces.iter().try_fold(1usize, |acc, s| acc.checked_mul(s.len())).unwrap_or(usize::MAX);
    cap("product carrier", total, caps.product.min(crate::bits::MAX_POINTS))?;
    let mut coords: Vec<Vec<usize>> = vec![vec![]];
    for s in spaces {
        coords = coords.into_iter().flat_map(|c| (0..s.len()).map(move |i| [c.clone(), vec![i]].concat())).collect();
    }
    let labels = coords
        .iter()
        .map(|c| {
            let parts: Vec<&str> = c.iter().zip(spaces).map(|(i, s)| s.label(*i)).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    let space = FiniteSpace::from_order(labels, |p, q| {
        coords[p].iter().zip(&coords[q]).zip(spaces).all(|((a, b), s)| s.leq(*a, *b))
    })?;
    let projections = spaces
        .iter()
        .enumerate()
        .map(|(k, s)| SpaceMap::new(&space, s, coords.iter().map(|c| c[k]).collect()))
        .collect::<Result<Vec<_>>>()?;
    let prod = Product { space, factors: spaces.to_vec(), projections, coords };
    verify_product_lemmas(&prod)?;
    Ok(prod)
}

fn verify_product_lemmas(p: &Product) -> Result<()> {
    let x = &p.space;
    // Closure of an irreducible set is the product of the closures of its projections.
    let mut samples: Vec<Bits> = (0..x.len()).map(|i| x.down_of_point(i)).collect();
    for i in 0..x.len() {
        for j in x.up_of_point(i).iter() {
            samples.push(Bits::from_iter([i, j]));
        }
    }
    for a in samples {
        debug_assert!(x.irreducible_bits(a));
        let parts: Vec<Bits> = p.projections.iter().zip(&p.factors).map(|(pr, f)| f.down(pr.image(a))).collect();
        ensure(x.down(a) == p.rectangle(&parts), || "closure of an irreducible set is not a product".into())?;
    }
    // A rectangle is irreducible exactly when every side is.
    let small: Vec<Vec<Bits>> = p
        .factors
        .iter()
        .map(|f| {
            let mut v: Vec<Bits> = (0..f.len()).map(Bits::single).collect();
            for i in 0..f.len() {
                for j in (i + 1)..f.len() {
                    v.push(Bits::from_iter([i, j]));
                }
            }
            v.truncate(12);
            v
        })
        .collect();
    let mut pick = vec![0usize; small.len()];
    loop {
        let parts: Vec<Bits> = pick.iter().zip(&small).map(|(k, v)| v[*k]).collect();
        let rect = p.rectangle(&parts);
        let sides = parts.iter().zip(&p.factors).all(|(a, f)| f.irreducible_bits(*a));
        ensure(x.irreducible_bits(rect) == sides, || "rectangle irreducibility differs from its sides".into())?;
        let mut k = 0;
        while k < pick.len() {
            pick[k] += 1;
            if pick[k] < small[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
        if k == pick.len() {
            return Ok(());
        }
    }
}

// ---- maps ----

/// All continuous maps, ordered lexicographically by assignment.
pub fn continuous_maps(x: &FiniteSpace, y: &FiniteSpace, caps: &Caps) -> Result<Vec<SpaceMap>> {
    let bound = (y.len() as f64).powi(x.len() as i32);
    if bound > caps.maps as f64 {
        return Err(Error::CapExceeded { what: "maps to enumerate".into(), size: bound.min(usize::MAX as f64) as usize, cap: caps.maps });
    }
    let mut out = Vec::new();
    for a in monotone_assignments(x, y) {
        out.push(SpaceMap::new(x, y, a)?);
    }
    Ok(out)
}

fn monotone_assignments(x: &FiniteSpace, y: &FiniteSpace) -> Vec<Vec<usize>> {
    fn go(x: &FiniteSpace, y: &FiniteSpace, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == x.len() {
            out.push(cur.clone());
            return;
        }
        for v in 0..y.len() {
            let ok = (0..i).all(|j| (!x.leq(j, i) || y.leq(cur[j], v)) && (!x.leq(i, j) || y.leq(v, cur[j])));
            if ok {
                cur.push(v);
                go(x, y, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(x, y, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone)]
pub struct FunctionSpace {
    pub space: FiniteSpace,
    pub maps: Vec<SpaceMap>,
}

impl FunctionSpace {
    pub fn legend(&self) -> Vec<(String, Vec<String>)> {
        self.maps
            .iter()
            .enumerate()
            .map(|(i, f)| (self.space.label(i).to_string(), f.describe().into_iter().map(|(a, b)| format!("{a}->{b}")).collect()))
            .collect()
    }
}

/// Continuous maps with the topology of pointwise convergence.
pub fn function_space(x: &FiniteSpace, y: &FiniteSpace, caps: &Caps) -> Result<FunctionSpace> {
    let maps = continuous_maps(x, y, caps)?;
    cap("function space carrier", maps.len(), caps.product.min(crate::bits::MAX_POINTS))?;
    let labels = (0..maps.len()).map(|i| format!("f#{i}")).collect();
    let pointwise = |i: usize, j: usize| (0..x.len()).all(|p| y.leq(maps[i].apply(p), maps[j].apply(p)));
    let space = FiniteSpace::from_order(labels, pointwise)?;
    // Subbasic opens {f : f(p) ∈ U}; the specialization order is read off them.
    let y_opens: Vec<Bits> = y.down_sets(None)?.into_iter().map(|d| y.full().minus(d)).collect();
    let subbasic: Vec<Bits> = (0..x.len())
        .flat_map(|p| y_opens.iter().map(move |u| (p, *u)))
        .map(|(p, u)| Bits::from_iter((0..maps.len()).filter(|&i| u.contains(maps[i].apply(p)))))
        .collect();
    for i in 0..maps.len() {
        for j in 0..maps.len() {
            let spec = subbasic.iter().all(|s| !s.contains(i) || s.contains(j));
            ensure(spec == space.leq(i, j), || "pointwise order differs from the product specialization order".into())?;
        }
    }
    if space.len() <= 16 {
        for h in SubsetSystemId::all_base() {
            let sy = Checker::new(y, caps).check_with(Property::HSober, Some(h), true)?.holds;
            let sf = Checker::new(&space, caps).check_with(Property::HSober, Some(h), true)?.holds;
            ensure(!sy || sf, || format!("function space into a {h}-sober space is not {h}-sober"))?;
        }
    }
    Ok(FunctionSpace { space, maps })
}

#[derive(Debug, Clone)]
pub struct Equalizer {
    /// Points of the source where the maps agree.
    pub agreement: Bits,
    /// The subspace and its inclusion; absent when the maps never agree.
    pub subspace: Option<(FiniteSpace, SpaceMap)>,
}

impl Equalizer {
    pub fn is_empty(&self) -> bool {
        self.subspace.is_none()
    }
}

pub fn equalizer(f: &SpaceMap, g: &SpaceMap, caps: &Caps) -> Result<Equalizer> {
    if f.source().id() != g.source().id() || f.target().id() != g.target().id() {
        return Err(Error::EndpointMismatch);
    }
    let x = f.source();
    let agreement = Bits::from_iter((0..x.len()).filter(|&i| f.apply(i) == g.apply(i)));
    if agreement.is_empty() {
        return Ok(Equalizer { agreement, subspace: None });
    }
    let (sub, idx) = x.induced(agreement)?;
    let inc = SpaceMap::new(&sub, x, idx)?;
    if sub.len() <= 16 {
        for h in SubsetSystemId::all_base() {
            let sx = Checker::new(x, caps).check_with(Property::HSober, Some(h), true)?.holds;
            let sy = Checker::new(f.target(), caps).check_with(Property::HSober, Some(h), true)?.holds;
            let se = Checker::new(&sub, caps).check_with(Property::HSober, Some(h), true)?.holds;
            ensure(!(sx && sy) || se, || format!("equalizer of {h}-sober spaces is not {h}-sober"))?;
        }
    }
    Ok(Equalizer { agreement, subspace: Some((sub, inc)) })
}

/// `r: X → Y`, `s: Y → X`; true when `r ∘ s = id_Y`. Sobriety properties
/// are then checked to pass from `X` to `Y`, and `P_S(r)`, `P_S(s)` are
/// checked to form a retraction of Smyth spaces.
pub fn retract_verify(r: &SpaceMap, s: &SpaceMap, caps: &Caps) -> Result<bool> {
    if r.source().id() != s.target().id() || r.target().id() != s.source().id() {
        return Err(Error::EndpointMismatch);
    }
    let x = r.source();
    let y = r.target();
    let rs = s.then(r)?;
    if !rs.same_as(&SpaceMap::identity(y)) {
        return Ok(false);
    }
    let cx = Checker::new(x, caps);
    let cy = Checker::new(y, caps);
    for h in SubsetSystemId::all_base() {
        for p in [Property::HSober, Property::SuperHSober] {
            let vx = cx.check_with(p, Some(h), true)?.holds;
            let vy = cy.check_with(p, Some(h), true)?.holds;
            ensure(!vx || vy, || format!("{p}({h}) does not pass to a retract"))?;
        }
    }
    let sx = smyth(x, caps)?;
    let sy = smyth(y, caps)?;
    let ps = smyth_map_between(&sy, &sx, s)?;
    let pr = smyth_map_between(&sx, &sy, r)?;
    ensure(ps.then(&pr)?.same_as(&SpaceMap::identity(sy.as_space())), || "Smyth spaces do not form a retraction".into())?;
    Ok(true)
}

// ---- homeomorphism search ----

/// An order isomorphism, found by backtracking after an invariant filter.
pub fn homeomorphic(x: &FiniteSpace, y: &FiniteSpace) -> Option<SpaceMap> {
    if x.len() != y.len() {
        return None;
    }
    let sig = |s: &FiniteSpace, i: usize| (s.up_of_point(i).len(), s.down_of_point(i).len());
    let mut sx: Vec<_> = (0..x.len()).map(|i| sig(x, i)).collect();
    let mut sy: Vec<_> = (0..y.len()).map(|i| sig(y, i)).collect();
    sx.sort();
    sy.sort();
    if sx != sy {
        return None;
    }
    fn go(x: &FiniteSpace, y: &FiniteSpace, cur: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = cur.len();
        if i == x.len() {
            return true;
        }
        let si = (x.up_of_point(i).len(), x.down_of_point(i).len());
        for v in 0..y.len() {
            if used[v] || (y.up_of_point(v).len(), y.down_of_point(v).len()) != si {
                continue;
            }
            if (0..i).all(|j| x.leq(j, i) == y.leq(cur[j], v) && x.leq(i, j) == y.leq(v, cur[j])) {
                cur.push(v);
                used[v] = true;
                if go(x, y, cur, used) {
                    return true;
                }
                cur.pop();
                used[v] = false;
            }
        }
        false
    }
    let mut cur = Vec::new();
    let mut used = vec![false; y.len()];
    if go(x, y, &mut cur, &mut used) {
        SpaceMap::new(x, y, cur).ok()
    } else {
        None
    }
}

// ---- reflections ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReflectionKind {
    Sobrification,
    HSobrification,
    SuperHSobrification,
}

impl fmt::Display for ReflectionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReflectionKind::Sobrification => "sobrification",
            ReflectionKind::HSobrification => "h_sobrification",
            ReflectionKind::SuperHSobrification => "super_h_sobrification",
        })
    }
}

impl FromStr for ReflectionKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ReflectionKind> {
        match s.trim() {
            "sobrification" => Ok(ReflectionKind::Sobrification),
            "h_sobrification" => Ok(ReflectionKind::HSobrification),
            "super_h_sobrification" => Ok(ReflectionKind::SuperHSobrification),
            other => Err(Error::Parse(format!("unknown reflection kind `{other}`"))),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Reflection {
    pub kind: ReflectionKind,
    pub system: SubsetSystemId,
    pub hoare: HoareSpace,
    pub unit: SpaceMap,
}

impl Reflection {
    pub fn base(&self) -> &FiniteSpace {
        self.hoare.base()
    }

    pub fn reflected(&self) -> &FiniteSpace {
        self.hoare.as_space()
    }

    /// Carrier labels with the closed set each one stands for.
    pub fn carrier_labeling(&self) -> Vec<(String, Vec<String>)> {
        self.hoare.legend()
    }

    pub fn describe(&self) -> serde_json::Value {
        let unit: Vec<(String, String)> = self.unit.describe();
        serde_json::json!({
            "kind": self.kind,
            "system": self.system,
            "reflected": self.reflected().to_description(),
            "carrier": self.carrier_labeling(),
            "unit": unit,
        })
    }
}

/// Targets against which determined closed sets are tested.
fn targets(x: &FiniteSpace, caps: &Caps, property: Property) -> Result<Vec<FiniteSpace>> {
    let mut v = vec![x.clone()];
    for y in posets_up_to(caps.targets.min(6)) {
        // Finite T0 targets all qualify; the check keeps the quantifier honest.
        if Checker::new(&y, caps).check_with(property, None, true)?.holds {
            v.push(y);
        }
    }
    Ok(v)
}

/// Nonempty closed sets `A` such that for every continuous `f` into an
/// admissible target, `cl f(A)` is a point closure. Candidates already
/// known to be point closures pass every test, so the scan stops once
/// only those remain.
fn determined_closed_sets(x: &FiniteSpace, caps: &Caps, property: Property) -> Result<Vec<Bits>> {
    cap("carrier for closed-set enumeration", x.len(), caps.families)?;
    let mut cand: Vec<Bits> = x.down_sets(None)?.into_iter().filter(|d| !d.is_empty()).collect();
    for y in targets(x, caps, property)? {
        if cand.iter().all(|a| x.greatest(*a).is_some()) {
            break;
        }
        let maps: Vec<Vec<usize>> = if y.id() == x.id() {
            vec![(0..x.len()).collect()]
        } else {
            monotone_assignments(x, &y)
        };
        for f in maps {
            cand.retain(|a| {
                let img = Bits::from_iter(a.iter().map(|i| f[i]));
                y.greatest(y.down(img)).is_some()
            });
        }
    }
    cand.sort_by(|a, b| a.size_lex_cmp(b));
    Ok(cand)
}

/// Closed sets that are minimal in `M(𝒦)` for some H-family 𝒦 of the Smyth space.
pub fn rudin_closed_sets_of(x: &FiniteSpace, h: SubsetSystemId, caps: &Caps) -> Result<Vec<Bits>> {
    let s = smyth(x, caps)?;
    let cat = h_sets(h, s.as_space(), caps);
    let fams: Vec<Vec<Bits>> = cat.sets.iter().map(|f| s.set_family(*f)).collect();
    crate::check::rudin_closed_sets(x, &fams, caps)
}

/// `H^d_c(X)`, tested against every enumerated target and `X` itself.
pub fn determined_sets(x: &FiniteSpace, caps: &Caps) -> Result<Vec<Bits>> {
    determined_closed_sets(x, caps, Property::T0)
}

/// `H^D_c(X)`, tested against well-filtered targets.
pub fn well_filtered_determined_sets(x: &FiniteSpace, caps: &Caps) -> Result<Vec<Bits>> {
    determined_closed_sets(x, caps, Property::WellFiltered)
}

pub fn reflect(x: &FiniteSpace, h: SubsetSystemId, kind: ReflectionKind, caps: &Caps) -> Result<Reflection> {
    let carrier: Vec<Bits> = match kind {
        ReflectionKind::Sobrification => {
            x.enumerate_families(FamilyKind::IrrClosed, caps.families)?.into_iter().map(|p| p.bits()).collect()
        }
        ReflectionKind::HSobrification => determined_sets(x, caps)?,
        ReflectionKind::SuperHSobrification => {
            let d = well_filtered_determined_sets(x, caps)?;
            if x.len() <= 8 {
                let r = rudin_closed_sets_of(x, h, caps)?;
                ensure(r.iter().all(|a| d.contains(a)), || "a Rudin closed set is not well-filtered determined".into())?;
            }
            d
        }
    };
    let hoare = hoare_from_carrier(x, carrier)?;
    let unit = hoare.eta()?;
    ensure(homeomorphic(hoare.as_space(), x).is_some(), || format!("{kind} of a finite space is not homeomorphic to it"))?;
    Ok(Reflection { kind, system: h, hoare, unit })
}

#[derive(Debug, Clone, Serialize)]
pub struct UniversalReport {
    pub targets: usize,
    pub maps: usize,
    pub unique: bool,
    pub failures: Vec<String>,
}

/// For each continuous `f: X → Y` with `|Y| ≤ bound`, `f*(A) = y_A` with
/// `cl f(A) = ↓y_A` is the unique continuous factorization through the unit.
pub fn universal_property_verify(r: &Reflection, bound: usize, caps: &Caps) -> Result<UniversalReport> {
    let x = r.base();
    let xr = r.reflected();
    let carrier = r.hoare.carrier();
    let ys = posets_up_to(bound.min(6));
    let mut report = UniversalReport { targets: ys.len(), maps: 0, unique: true, failures: Vec::new() };
    for y in &ys {
        let fs = continuous_maps(x, y, caps)?;
        let gs = continuous_maps(xr, y, caps)?;
        let mut by_restriction: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (k, g) in gs.iter().enumerate() {
            let restricted: Vec<usize> = (0..x.len()).map(|i| g.apply(r.unit.apply(i))).collect();
            by_restriction.entry(restricted).or_default().push(k);
        }
        for f in &fs {
            report.maps += 1;
            let mut star = Vec::with_capacity(carrier.len());
            for a in carrier {
                match y.greatest(y.down(f.image(*a))) {
                    Some(p) => star.push(p),
                    None => {
                        report.failures.push(format!("cl f(A) has no generic point for f = {:?}", f.assignment()));
                        break;
                    }
                }
            }
            if star.len() != carrier.len() {
                report.unique = false;
                continue;
            }
            let fstar = match SpaceMap::new(xr, y, star) {
                Ok(m) => m,
                Err(e) => {
                    report.unique = false;
                    report.failures.push(format!("f* is not continuous: {e}"));
                    continue;
                }
            };
            if !r.unit.then(&fstar)?.same_as(f) {
                report.unique = false;
                report.failures.push(format!("f* ∘ η differs from f = {:?}", f.assignment()));
            }
            match by_restriction.get(f.assignment()) {
                Some(v) if v.len() == 1 && gs[v[0]].same_as(&fstar) => {}
                other => {
                    report.unique = false;
                    report.failures.push(format!(
                        "{} factorizations of f = {:?}",
                        other.map(|v| v.len()).unwrap_or(0),
                        f.assignment()
                    ));
                }
            }
        }
    }
    ensure(report.unique, || format!("universal property failed: {:?}", report.failures.first()))?;
    Ok(report)
}

/// `f^h(A) = cl f(A)`, with the square `f^h ∘ η_X = η_Y ∘ f` checked.
pub fn reflection_functor(f: &SpaceMap, h: SubsetSystemId, kind: ReflectionKind, caps: &Caps) -> Result<(Reflection, Reflection, SpaceMap)> {
    let rx = reflect(f.source(), h, kind, caps)?;
    let ry = reflect(f.target(), h, kind, caps)?;
    let fh = hoare_map_between(&rx.hoare, &ry.hoare, f)?;
    ensure(rx.unit.then(&fh)?.same_as(&f.then(&ry.unit)?), || "reflection square does not commute".into())?;
    Ok((rx, ry, fh))
}

#[derive(Debug, Clone, Serialize)]
pub struct ProductReport {
    pub left: usize,
    pub right: usize,
    pub reflected_points: usize,
    pub homeomorphism: Vec<(String, String)>,
    pub decomposed_sets: usize,
}

/// `(X × Y)^h ≅ X^h × Y^h`, with every determined closed subset of the
/// product equal to the product of its projections.
pub fn product_preservation(x: &FiniteSpace, y: &FiniteSpace, h: SubsetSystemId, kind: ReflectionKind, caps: &Caps) -> Result<ProductReport> {
    let p = product(&[x.clone(), y.clone()], caps)?;
    let rp = reflect(&p.space, h, kind, caps)?;
    let rx = reflect(x, h, kind, caps)?;
    let ry = reflect(y, h, kind, caps)?;
    let q = product(&[rx.reflected().clone(), ry.reflected().clone()], caps)?;
    let iso = homeomorphic(rp.reflected(), &q.space).ok_or_else(|| Error::NoHomeomorphism(format!("{kind} of {} x {}", x.to_json(), y.to_json())))?;
    let carrier = rp.hoare.carrier();
    for a in carrier {
        let parts: Vec<Bits> = p.projections.iter().map(|pr| pr.image(*a)).collect();
        ensure(p.rectangle(&parts) == *a, || "a determined closed set of the product is not a rectangle".into())?;
    }
    Ok(ProductReport {
        left: x.len(),
        right: y.len(),
        reflected_points: rp.reflected().len(),
        homeomorphism: iso.describe(),
        decomposed_sets: carrier.len(),
    })
}

/// Sets used to build reflections, by kind; exposed for reports.
pub fn reflection_carrier(x: &FiniteSpace, h: SubsetSystemId, kind: ReflectionKind, caps: &Caps) -> Result<Vec<Bits>> {
    Ok(reflect(x, h, kind, caps)?.hoare.carrier().to_vec())
}

/// Closed sets of each derived family for a small space, for inspection.
pub fn derived_families(x: &FiniteSpace, b: Base, caps: &Caps) -> Result<Vec<(String, Vec<Vec<String>>)>> {
    let show = |v: &[Bits]| v.iter().map(|a| x.label_list(*a)).collect::<Vec<_>>();
    let h = SubsetSystemId::Base(b);
    let irr: Vec<Bits> = (0..x.len()).map(|i| x.down_of_point(i)).collect::<BTreeSet<_>>().into_iter().collect();
    Ok(vec![
        (format!("{h}^d"), show(&determined_sets(x, caps)?)),
        (format!("{h}^R"), show(&rudin_closed_sets_of(x, h, caps)?)),
        (format!("{h}^D"), show(&well_filtered_determined_sets(x, caps)?)),
        ("Irr".into(), show(&irr)),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sierpinski_square() {
        let s = FiniteSpace::sierpinski();
        let p = product(&[s.clone(), s], &Caps::default()).unwrap();
        assert_eq!(p.space.len(), 4);
        assert!(homeomorphic(&p.space, &FiniteSpace::diamond()).is_some());
    }

    #[test]
    fn maps_of_sierpinski() {
        let s = FiniteSpace::sierpinski();
        assert_eq!(continuous_maps(&s, &s, &Caps::default()).unwrap().len(), 3);
    }
}
