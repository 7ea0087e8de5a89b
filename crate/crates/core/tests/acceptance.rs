//! End-to-end acceptance suite. Runs without the libtest harness and prints
//! one line per criterion; the process fails if any criterion fails.

use std::collections::HashMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sobriety::check::{Checker, Property};
use sobriety::construct::{
    continuous_maps, homeomorphic, product_preservation, reflect, universal_property_verify, ReflectionKind,
};
use sobriety::enumerate::{posets_up_to, random_poset};
use sobriety::power::{
    hoare, hoare_map_between, hofmann_mislove, smyth, smyth_map_between, smyth_union, xi_embed_into, HoareFamily,
};
use sobriety::system::{rudin_minimal, search_property, Base, PropertyKind, SubsetSystemId};
use sobriety::{Bits, Caps, FiniteSpace, SpaceMap};

type Outcome = Result<String, String>;

const SEED: u64 = 20_240_611;

fn corpus() -> Vec<FiniteSpace> {
    let mut v = posets_up_to(5);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    v.extend((0..500).map(|_| random_poset(&mut rng, 8)));
    v
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn within(label: &str, t: Duration, limit: Duration) -> Result<(), String> {
    if t <= limit {
        Ok(())
    } else {
        Err(format!("{label} took {:.1}s, over {:.0}s", t.as_secs_f64(), limit.as_secs_f64()))
    }
}

fn finite_collapse(spaces: &[FiniteSpace], caps: &Caps) -> Outcome {
    let start = Instant::now();
    let mut verdicts = 0;
    for x in spaces {
        let c = Checker::new(x, caps);
        let mut run = |p: Property, h: Option<SubsetSystemId>| -> Result<(), String> {
            let v = c.check(p, h).map_err(err)?;
            verdicts += 1;
            if v.holds && v.characterizations_agreed {
                Ok(())
            } else {
                Err(format!("{p} {h:?} on {}: {}", x.to_json(), v.to_json()))
            }
        };
        for p in [Property::Sober, Property::DSpace, Property::WellFiltered, Property::OmegaWellFiltered] {
            run(p, None)?;
        }
        for h in SubsetSystemId::all_base() {
            run(Property::HSober, Some(h))?;
            run(Property::SuperHSober, Some(h))?;
        }
    }
    within("checkers", start.elapsed(), Duration::from_secs(60))?;
    Ok(format!("{} spaces, {verdicts} verdicts", spaces.len()))
}

fn characterizations(spaces: &[FiniteSpace], caps: &Caps) -> Outcome {
    let mut reports = 0;
    for x in spaces {
        let c = Checker::new(x, caps);
        for h in SubsetSystemId::all_base() {
            let a = c.crosscheck_h_sober(h).map_err(err)?;
            let b = c.crosscheck_super(h).map_err(err)?;
            if !(a.agreed && b.agreed) {
                return Err(format!("{h} on {}: {a:?} {b:?}", x.to_json()));
            }
            reports += 2;
        }
        let hk = c.heckmann_keimel().map_err(err)?;
        if hk.len() != 7 || !hk.iter().all(|(_, v)| *v) {
            return Err(format!("sober/super sober on {}: {hk:?}", x.to_json()));
        }
        reports += 1;
    }
    Ok(format!("{reports} reports"))
}

/// Minimal closed sets meeting every member, straight from the definition.
fn m_oracle(closed: &[Bits], family: &[Bits]) -> Vec<Bits> {
    let meets: Vec<Bits> = closed.iter().copied().filter(|c| family.iter().all(|k| k.meets(c))).collect();
    meets.iter().copied().filter(|c| !meets.iter().any(|d| d != c && d.is_subset(c))).collect()
}

fn rudin(caps: &Caps) -> Outcome {
    let mut families = 0usize;
    for x in posets_up_to(6) {
        let closed = x.down_sets(None).map_err(err)?;
        let ks = x.compact_sets(None).map_err(err)?;
        let n = ks.len();
        let all = x.closed(x.full()).map_err(err)?;
        let mut fams: Vec<Vec<usize>> = Vec::new();
        for i in 0..n {
            fams.push(vec![i]);
            for j in i + 1..n {
                fams.push(vec![i, j]);
                for k in j + 1..n {
                    fams.push(vec![i, j, k]);
                }
            }
        }
        for f in fams {
            let bits: Vec<Bits> = f.iter().map(|&i| ks[i]).collect();
            let family: Vec<_> = bits.iter().map(|b| x.compact(*b).unwrap()).collect();
            let m = m_oracle(&closed, &bits);
            let r = rudin_minimal(&x, &family, &all).map_err(err)?.bits();
            if !m.contains(&r) {
                return Err(format!("{:?} outside m(K) on {}", x.label_list(r), x.to_json()));
            }
            // Irreducible in the Smyth space: some member lies inside all others.
            let irreducible = bits.iter().any(|k| bits.iter().all(|o| k.is_subset(o)));
            if irreducible && !x.irreducible_bits(r) {
                return Err(format!("{:?} is reducible on {}", x.label_list(r), x.to_json()));
            }
            families += 1;
        }
    }
    let _ = caps;
    Ok(format!("{families} families"))
}

fn is_identity(f: &SpaceMap) -> bool {
    f.assignment().iter().enumerate().all(|(i, j)| i == *j)
}

fn compose(f: &[usize], g: &[usize]) -> Vec<usize> {
    f.iter().map(|&i| g[i]).collect()
}

fn functor_laws(caps: &Caps) -> Outcome {
    let spaces = posets_up_to(4);
    let ss: Vec<_> = spaces.iter().map(|x| smyth(x, caps)).collect::<Result<_, _>>().map_err(err)?;
    let hs: Vec<_> =
        spaces.iter().map(|x| hoare(x, &HoareFamily::AllClosed, caps)).collect::<Result<_, _>>().map_err(err)?;
    for (i, x) in spaces.iter().enumerate() {
        let xi = xi_embed_into(&ss[i]).map_err(err)?;
        let eta = hs[i].eta().map_err(err)?;
        if !(xi.is_injective() && xi.is_order_embedding() && eta.is_injective() && eta.is_order_embedding()) {
            return Err(format!("embedding fails on {}", x.to_json()));
        }
        let id = SpaceMap::identity(x);
        if !is_identity(&smyth_map_between(&ss[i], &ss[i], &id).map_err(err)?)
            || !is_identity(&hoare_map_between(&hs[i], &hs[i], &id).map_err(err)?)
        {
            return Err(format!("identity law fails on {}", x.to_json()));
        }
    }
    // Every map between every pair, with its images under both functors.
    let n = spaces.len();
    let mut maps: Vec<Vec<Vec<usize>>> = vec![vec![]; n * n];
    let mut ps: Vec<Vec<Vec<usize>>> = vec![vec![]; n * n];
    let mut ph: Vec<Vec<Vec<usize>>> = vec![vec![]; n * n];
    let mut index: Vec<HashMap<Vec<usize>, usize>> = vec![HashMap::new(); n * n];
    for a in 0..n {
        for b in 0..n {
            for f in continuous_maps(&spaces[a], &spaces[b], caps).map_err(err)? {
                let s = smyth_map_between(&ss[a], &ss[b], &f).map_err(err)?;
                let h = hoare_map_between(&hs[a], &hs[b], &f).map_err(err)?;
                index[a * n + b].insert(f.assignment().to_vec(), maps[a * n + b].len());
                maps[a * n + b].push(f.assignment().to_vec());
                ps[a * n + b].push(s.assignment().to_vec());
                ph[a * n + b].push(h.assignment().to_vec());
            }
        }
    }
    let mut pairs = 0usize;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let (ab, bc, ac) = (a * n + b, b * n + c, a * n + c);
                for (fi, f) in maps[ab].iter().enumerate() {
                    for (gi, g) in maps[bc].iter().enumerate() {
                        let k = index[ac][&compose(f, g)];
                        if compose(&ps[ab][fi], &ps[bc][gi]) != ps[ac][k] || compose(&ph[ab][fi], &ph[bc][gi]) != ph[ac][k] {
                            return Err(format!("composition law fails for {f:?} then {g:?}"));
                        }
                        pairs += 1;
                    }
                }
            }
        }
    }
    let mut unions = 0;
    for x in posets_up_to(3) {
        let u = smyth_union(&x, caps).map_err(err)?;
        let single = u.single.as_space();
        let double = u.double.as_space();
        for open in sobriety::space::all_subsets(single).filter(|s| single.is_up(*s)) {
            if !double.is_up(u.map.preimage(open)) {
                return Err(format!("union map is not continuous on {}", x.to_json()));
            }
        }
        unions += 1;
    }
    Ok(format!("{pairs} composable map pairs, {unions} union maps"))
}

fn hofmann_mislove_all(caps: &Caps) -> Outcome {
    let spaces = posets_up_to(5);
    for x in &spaces {
        let hm = hofmann_mislove(x, caps).map_err(err)?;
        if !hm.bijective() {
            return Err(format!("{hm:?} on {}", x.to_json()));
        }
    }
    Ok(format!("{} spaces", spaces.len()))
}

fn reflections(caps: &Caps) -> Outcome {
    let start = Instant::now();
    let systems = [SubsetSystemId::Base(Base::D), SubsetSystemId::Base(Base::R)];
    let kinds = [ReflectionKind::HSobrification, ReflectionKind::SuperHSobrification];
    let mut built = 0;
    let mut maps = 0;
    for x in posets_up_to(5) {
        for h in systems {
            for kind in kinds {
                let r = reflect(&x, h, kind, caps).map_err(err)?;
                if homeomorphic(r.reflected(), &x).is_none() || !(r.unit.is_injective() && r.unit.is_order_embedding()) {
                    return Err(format!("{kind} over {h} on {}", x.to_json()));
                }
                let u = universal_property_verify(&r, 4, caps).map_err(err)?;
                if !u.unique {
                    return Err(format!("universal property: {:?}", u.failures));
                }
                built += 1;
                maps += u.maps;
            }
        }
    }
    // Two factors, at least two points each, product carrier of at most 9 points.
    let small = posets_up_to(4);
    let mut products = 0;
    for x in small.iter().filter(|x| x.len() >= 2) {
        for y in small.iter().filter(|y| y.len() >= 2 && x.len() * y.len() <= 9) {
            for h in systems {
                for kind in kinds {
                    product_preservation(x, y, h, kind, caps).map_err(err)?;
                    products += 1;
                }
            }
        }
    }
    within("reflections", start.elapsed(), Duration::from_secs(300))?;
    Ok(format!("{built} reflections, {maps} factorizations, {products} products"))
}

fn properties(caps: &Caps) -> Outcome {
    let runs = [
        (Base::S, PropertyKind::M),
        (Base::C, PropertyKind::M),
        (Base::D, PropertyKind::M),
        (Base::R, PropertyKind::M),
        (Base::R, PropertyKind::Q),
    ];
    for (i, (b, kind)) in runs.into_iter().enumerate() {
        let h = SubsetSystemId::Base(b);
        let r = search_property(h, kind, SEED + i as u64, 1000, 8, caps).map_err(err)?;
        if let Some(c) = r.counterexample {
            return Err(format!("property {kind:?} for {h} fails; minimized: {}", c.describe()));
        }
    }
    Ok("5 x 1000 instances".into())
}

fn zoo_claims() -> Outcome {
    let start = Instant::now();
    let reports = sobriety::zoo::verify_all().map_err(err)?;
    for r in &reports {
        if r.verdict == sobriety::zoo::ZooVerdict::Refuted || !r.revalidate() {
            return Err(format!("{}.{} refuted", r.space, r.claim));
        }
    }
    within("zoo", start.elapsed(), Duration::from_secs(10))?;
    let depth = reports.iter().filter(|r| matches!(r.verdict, sobriety::zoo::ZooVerdict::CheckedToDepth(_))).count();
    Ok(format!("{} claims, {depth} checked to depth", reports.len()))
}

fn determinism(caps: &Caps) -> Outcome {
    let a = sobriety::sweep::sweep(7, 50, 6, caps).map_err(err)?;
    let b = sobriety::sweep::sweep(7, 50, 6, caps).map_err(err)?;
    if !a.passed() {
        return Err(format!("sweep found {:?}", a.violation));
    }
    if a.to_json_string() != b.to_json_string() {
        return Err("reports differ".into());
    }
    Ok(format!("{} bytes", a.to_json_string().len()))
}

fn main() -> ExitCode {
    let caps = Caps::default();
    let spaces = corpus();
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("finite collapse of every checker", Box::new(|| finite_collapse(&spaces, &caps))),
        ("characterization agreement", Box::new(|| characterizations(&spaces, &caps))),
        ("minimal closed sets meeting a family", Box::new(|| rudin(&caps))),
        ("functor and embedding laws", Box::new(|| functor_laws(&caps))),
        ("compacts versus open filters", Box::new(|| hofmann_mislove_all(&caps))),
        ("reflections", Box::new(|| reflections(&caps))),
        ("property M and Q sweeps", Box::new(|| properties(&caps))),
        ("symbolic zoo", Box::new(zoo_claims)),
        ("sweep determinism", Box::new(|| determinism(&caps))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = run();
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {}: PASS  {name} ({detail}; {secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} ({detail}; {secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
