//! Seeded randomized runs of the invariant suite. Reports contain no
//! timings, so equal seeds give byte-identical output.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::check::{Checker, Property};
use crate::config::Caps;
use crate::construct::{reflect, universal_property_verify, ReflectionKind};
use crate::enumerate::random_poset;
use crate::error::Result;
use crate::power::hofmann_mislove;
use crate::space::FiniteSpace;
use crate::system::{m_family, rudin_minimal, search_property, Base, PropertyKind, SubsetSystemId};

#[derive(Debug, Clone, Serialize)]
pub struct Violation {
    pub suite: String,
    pub detail: String,
    pub space: serde_json::Value,
}

#[derive(Debug, Clone, Serialize)]
pub struct SpaceSummary {
    pub index: usize,
    pub points: usize,
    pub space: String,
    pub suites: BTreeMap<String, usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub seed: u64,
    pub count: usize,
    pub max_points: usize,
    pub spaces: Vec<SpaceSummary>,
    pub totals: BTreeMap<String, usize>,
    pub property_searches: Vec<serde_json::Value>,
    pub violation: Option<Violation>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

struct Run<'a> {
    x: &'a FiniteSpace,
    suites: BTreeMap<String, usize>,
}

impl Run<'_> {
    fn pass(&mut self, suite: &str) {
        *self.suites.entry(suite.to_string()).or_default() += 1;
    }

    fn fail(&self, suite: &str, detail: String) -> Violation {
        Violation { suite: suite.into(), detail, space: serde_json::to_value(self.x.to_description()).unwrap_or_default() }
    }
}

const CHECKED: [Property; 4] = [Property::Sober, Property::DSpace, Property::WellFiltered, Property::OmegaWellFiltered];

fn run_space<R: Rng>(rng: &mut R, x: &FiniteSpace, caps: &Caps) -> Result<(BTreeMap<String, usize>, Option<Violation>)> {
    let mut run = Run { x, suites: BTreeMap::new() };
    let c = Checker::new(x, caps);
    for p in CHECKED {
        let v = c.check(p, None)?;
        if !(v.holds && v.characterizations_agreed && v.recheck(x, caps)?) {
            return Ok((run.suites.clone(), Some(run.fail("checkers", v.to_json().to_string()))));
        }
        run.pass("checkers");
    }
    for h in SubsetSystemId::all_base() {
        for p in [Property::HSober, Property::SuperHSober] {
            let v = c.check(p, Some(h))?;
            if !(v.holds && v.characterizations_agreed && v.recheck(x, caps)?) {
                return Ok((run.suites.clone(), Some(run.fail("checkers", v.to_json().to_string()))));
            }
            run.pass("checkers");
        }
        let a = c.crosscheck_h_sober(h)?;
        let b = c.crosscheck_super(h)?;
        if !(a.agreed && b.agreed) {
            return Ok((run.suites.clone(), Some(run.fail("crosscheck", format!("{h}")))));
        }
        run.pass("crosscheck");
    }
    let hk = c.heckmann_keimel()?;
    if !hk.iter().all(|(_, v)| *v) {
        return Ok((run.suites.clone(), Some(run.fail("sober_super_sober", format!("{hk:?}")))));
    }
    run.pass("sober_super_sober");
    if x.len() <= caps.filters {
        let hm = hofmann_mislove(x, caps)?;
        if !hm.bijective() {
            return Ok((run.suites.clone(), Some(run.fail("hofmann_mislove", format!("{hm:?}")))));
        }
        run.pass("hofmann_mislove");
    }
    // Rudin sets for a few random families of up to three compacts.
    let ks = x.compact_sets(None)?;
    for _ in 0..4 {
        let size = rng.gen_range(1..=3);
        let family: Vec<_> = (0..size).map(|_| x.compact(ks[rng.gen_range(0..ks.len())]).unwrap()).collect();
        let all = x.closed(x.full())?;
        let m = m_family(x, &family, caps)?;
        let r = rudin_minimal(x, &family, &all)?;
        if !m.contains(&r) {
            return Ok((run.suites.clone(), Some(run.fail("rudin", "minimal set outside m(K)".into()))));
        }
        run.pass("rudin");
    }
    if x.len() <= 5 {
        for b in [Base::D, Base::R] {
            let r = reflect(x, SubsetSystemId::Base(b), ReflectionKind::HSobrification, caps)?;
            let u = universal_property_verify(&r, 3, caps)?;
            if !u.unique {
                return Ok((run.suites.clone(), Some(run.fail("reflection", format!("{:?}", u.failures)))));
            }
            run.pass("reflection");
        }
    }
    Ok((run.suites, None))
}

pub fn sweep(seed: u64, count: usize, max_points: usize, caps: &Caps) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = SweepReport {
        seed,
        count,
        max_points,
        spaces: Vec::new(),
        totals: BTreeMap::new(),
        property_searches: Vec::new(),
        violation: None,
    };
    for index in 0..count {
        let x = random_poset(&mut rng, max_points);
        let (suites, violation) = run_space(&mut rng, &x, caps)?;
        for (k, v) in &suites {
            *report.totals.entry(k.clone()).or_default() += v;
        }
        report.spaces.push(SpaceSummary { index, points: x.len(), space: x.to_json(), suites });
        if violation.is_some() {
            report.violation = violation;
            return Ok(report);
        }
    }
    let searches = [
        (Base::S, PropertyKind::M),
        (Base::C, PropertyKind::M),
        (Base::D, PropertyKind::M),
        (Base::R, PropertyKind::M),
        (Base::R, PropertyKind::Q),
    ];
    for (i, (b, kind)) in searches.into_iter().enumerate() {
        let h = SubsetSystemId::Base(b);
        let sub_seed = seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64);
        let s = search_property(h, kind, sub_seed, count.max(1), max_points, caps)?;
        report.property_searches.push(serde_json::json!({
            "system": h,
            "property": kind,
            "instances": s.instances,
            "counterexample": s.counterexample.as_ref().map(|c| c.describe()),
        }));
        if let Some(c) = s.counterexample {
            report.violation = Some(Violation {
                suite: format!("property_{kind:?}"),
                detail: format!("{h}"),
                space: c.describe(),
            });
            return Ok(report);
        }
    }
    Ok(report)
}
