//! Acceptance criteria 1-10. Prints one line per criterion and exits nonzero if any fails.

use std::sync::Arc;
use std::time::{Duration, Instant};

use enriched_center::basecat::{BlockMorphism, FusionData, MultObject};
use enriched_center::canonical::{verify_generalized_center, CentralFunctor};
use enriched_center::center::{
    canonical_half_braiding, center_category, center_hom, solve_half_braidings, transparent_subobject,
    unit_half_braiding, SolveOptions,
};
use enriched_center::enriched::{Algebra, EnrichedCategory, SelfEnriched, Semisimple, SingleObject};
use enriched_center::fixtures;
use enriched_center::format::parse_metric_group;
use enriched_center::report::{self, Theorem};
use enriched_center::scalar::CycScalar;

type Outcome = std::result::Result<String, String>;

const BUDGET_1: Duration = Duration::from_secs(5);
const BUDGET_2: Duration = Duration::from_secs(30);
const BUDGET_7: Duration = Duration::from_secs(60);
const BUDGET_8: Duration = Duration::from_secs(120);
/// Threads for the parallel half of the determinism check.
const MANY_THREADS: usize = 4;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn sharp(c: &FusionData) -> Arc<SelfEnriched> {
    Arc::new(SelfEnriched::new(Arc::new(c.clone())).unwrap())
}

fn within(t: Duration, budget: Duration) -> std::result::Result<(), String> {
    ensure(t < budget, || format!("took {t:.2?}, budget {budget:?}"))
}

/// Pentagon written out directly on F-symbols, `F[a,b,c,d,e,f]: (ab)_e c -> a(bc)_f` in total `d`.
fn pentagon_oracle(c: &FusionData) -> bool {
    let n = c.n();
    let ch = |a: usize, b: usize| c.channels(a, b).to_vec();
    for a in 0..n {
        for b in 0..n {
            for cc in 0..n {
                for d in 0..n {
                    for f in ch(a, b) {
                        for g in ch(f, cc) {
                            for e in ch(g, d) {
                                for l in ch(cc, d) {
                                    for k in ch(b, l) {
                                        if !c.fuses(a, k, e) {
                                            continue;
                                        }
                                        let mut lhs = CycScalar::zero();
                                        for h in ch(b, cc) {
                                            if c.fuses(a, h, g) && c.fuses(h, d, k) {
                                                lhs += &(&(&c.fsym(a, b, cc, g, f, h) * &c.fsym(a, h, d, e, g, k))
                                                    * &c.fsym(b, cc, d, k, h, l));
                                            }
                                        }
                                        let rhs = &c.fsym(f, cc, d, e, g, l) * &c.fsym(a, b, l, e, f, k);
                                        if lhs != rhs {
                                            return false;
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

/// Both hexagons written out on F- and R-symbols, `R[a,b,c]` being `c_{a,b}` on channel `c`.
fn hexagon_oracle(c: &FusionData) -> bool {
    let n = c.n();
    let r = |a, b, s| c.rsym(a, b, s);
    let rinv = |a, b, s| c.rsym(b, a, s).inv().unwrap();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                for e in c.channels(x, y).to_vec() {
                    for d in c.channels(e, z).to_vec() {
                        for g in c.channels(x, z).to_vec() {
                            if !c.fuses(y, g, d) {
                                continue;
                            }
                            for rr in [&r as &dyn Fn(usize, usize, usize) -> CycScalar, &rinv] {
                                let mut lhs = CycScalar::zero();
                                for f in c.channels(y, z).to_vec() {
                                    if c.fuses(x, f, d) && c.fuses(z, x, g) {
                                        lhs += &(&(&c.fsym(x, y, z, d, e, f) * &rr(x, f, d)) * &c.fsym(y, z, x, d, f, g));
                                    }
                                }
                                let rhs = &(&rr(x, y, e) * &c.fsym(y, x, z, d, e, g)) * &rr(x, z, g);
                                if lhs != rhs {
                                    return false;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    true
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut perturbed = 0;
    for c in fixtures::all() {
        let v = c.validate();
        ensure(v.is_valid(), || format!("{}: {:?}", c.name(), v.failures))?;
        ensure(pentagon_oracle(&c), || format!("{}: pentagon oracle disagrees", c.name()))?;
        ensure(hexagon_oracle(&c), || format!("{}: hexagon oracle disagrees", c.name()))?;
        for (entry, p) in fixtures::single_entry_perturbations(&c) {
            perturbed += 1;
            if let Ok(p) = p {
                ensure(!p.validate().is_valid(), || format!("{}: perturbing {entry} still validates", c.name()))?;
                if entry.starts_with('F') {
                    ensure(!pentagon_oracle(&p), || format!("{}: oracle accepts perturbed {entry}", c.name()))?;
                }
                if entry.starts_with('R') {
                    ensure(!hexagon_oracle(&p), || format!("{}: oracle accepts perturbed {entry}", c.name()))?;
                }
            }
        }
    }
    within(start.elapsed(), BUDGET_1)?;
    Ok(format!("{} fixtures valid, {perturbed} perturbations rejected", fixtures::all().len()))
}

fn canonical_objects(s: &SelfEnriched) -> Vec<enriched_center::center::HalfBraiding<MultObject>> {
    s.simple_objects().iter().map(|x| canonical_half_braiding(s, x)).collect()
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0;
    for c in fixtures::all() {
        let s = sharp(&c);
        let objs = canonical_objects(&s);
        for hx in &objs {
            for hy in &objs {
                let got = center_hom(&*s, hx, hy);
                let want = transparent_subobject(&c, &s.hom(&hx.object, &hy.object)).map_err(|e| e.to_string())?;
                ensure(got == want, || format!("{}: {:?} -> {:?}", c.name(), hx.object, hy.object))?;
                pairs += 1;
            }
        }
    }
    within(start.elapsed(), BUDGET_2)?;
    Ok(format!("{pairs} pairs equal"))
}

fn criterion_3() -> Outcome {
    for c in [fixtures::z5(), fixtures::toric_code(), fixtures::fibonacci()] {
        let s = sharp(&c);
        let opts = SolveOptions::for_category(&*s);
        let mut found = Vec::new();
        for x in s.simple_objects() {
            found.extend(solve_half_braidings(&*s, &x, opts).map_err(|e| e.to_string())?);
        }
        let carriers: Vec<Option<usize>> = found.iter().map(|h| h.object.as_simple()).collect();
        ensure(carriers == (0..c.n()).map(Some).collect::<Vec<_>>(), || {
            format!("{}: center simples have carriers {carriers:?}", c.name())
        })?;
        let z = center_category(s.clone(), found).map_err(|e| e.to_string())?;
        for x in 0..c.n() {
            for y in 0..c.n() {
                let h = z.sub(x, y).object();
                let want = if x == y { c.unit_object() } else { MultObject::zero(c.n()) };
                ensure(h == want, || format!("{}: Z({x}, {y}) = {h:?}", c.name()))?;
                let (xm, ym) = (c.simple_object(x), c.simple_object(y));
                let b: BlockMorphism = s.unname(&c.tensor(&xm, &ym), &c.tensor(&ym, &xm), &z.braiding_element(x, y));
                for &ch in c.channels(x, y) {
                    ensure(*b.entry(ch, 0, 0) == c.rsym(x, y, ch), || {
                        format!("{}: braiding block ({x}, {y}; {ch}) differs from R", c.name())
                    })?;
                }
            }
        }
    }
    Ok("z5, toric code, fibonacci".into())
}

fn criterion_4() -> Outcome {
    for c in [fixtures::z2_symmetric(), fixtures::z2z2_symmetric()] {
        let s = sharp(&c);
        let objs = canonical_objects(&s);
        for hx in &objs {
            for hy in &objs {
                ensure(center_hom(&*s, hx, hy).is_full(), || {
                    format!("{}: {:?} -> {:?} is not the full hom", c.name(), hx.object, hy.object)
                })?;
            }
        }
    }
    Ok("all center homs full".into())
}

fn criterion_5() -> Outcome {
    let m = parse_metric_group(include_str!("../fixtures/z4.toml")).map_err(|e| e.to_string())?;
    let g = m.bichar.group();
    let mut rad: Vec<i64> = m.qform.radical().iter().map(|e| e[0]).collect();
    rad.sort_unstable();
    ensure(rad == vec![0, 2], || format!("radical {rad:?}"))?;
    let c = fixtures::z4();
    let s = sharp(&c);
    let objs = canonical_objects(&s);
    for x in 0..4i64 {
        for y in 0..4i64 {
            let (i, j) = (g.index(&[x]), g.index(&[y]));
            let nonzero = !center_hom(&*s, &objs[i], &objs[j]).is_zero();
            ensure(nonzero == rad.contains(&(y - x).rem_euclid(4)), || format!("Z({x}, {y})"))?;
        }
    }
    Ok(format!("nonzero exactly on y - x in {rad:?}"))
}

fn criterion_6() -> Outcome {
    let mut n = 0;
    for c in fixtures::all() {
        let s = sharp(&c);
        let z = center_category(s.clone(), canonical_objects(&s)).map_err(|e| e.to_string())?;
        let r = z.verify_braided();
        ensure(r.is_ok(), || format!("{}: {:?}", c.name(), r.failures))?;
        n += r.checks;
    }
    for psi in [
        CentralFunctor::canonical(Arc::new(fixtures::z3())),
        CentralFunctor::mueger_inclusion(Arc::new(fixtures::z4())),
    ] {
        let g = verify_generalized_center(Arc::new(psi.map_err(|e| e.to_string())?)).map_err(|e| e.to_string())?;
        ensure(g.braided.is_ok(), || format!("{}: {:?}", g.target, g.braided.failures))?;
        n += g.braided.checks;
    }
    Ok(format!("{n} checks"))
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    for c in [fixtures::z5(), fixtures::fibonacci()] {
        let s = sharp(&c);
        let opts = SolveOptions::for_category(&*s);
        for x in s.simple_objects() {
            let sols = solve_half_braidings(&*s, &x, opts).map_err(|e| e.to_string())?;
            ensure(sols == vec![canonical_half_braiding(&s, &x)], || {
                format!("{}: {} solutions for {:?}", c.name(), sols.len(), x)
            })?;
        }
    }
    within(start.elapsed(), BUDGET_7)?;
    Ok("unique canonical solution per simple".into())
}

fn criterion_8() -> Outcome {
    let start = Instant::now();
    let cases = [
        CentralFunctor::canonical(Arc::new(fixtures::z3())),
        CentralFunctor::canonical(Arc::new(fixtures::z5())),
        CentralFunctor::mueger_inclusion(Arc::new(fixtures::z4())),
    ];
    let mut sizes = Vec::new();
    for psi in cases {
        let psi = Arc::new(psi.map_err(|e| e.to_string())?);
        let (nb, nc) = (psi.source().n(), psi.target().n());
        let g = verify_generalized_center(psi).map_err(|e| e.to_string())?;
        ensure(g.passes(), || format!("{} -> {}: {:?}", g.source, g.target, g))?;
        // Pointed with trivial associator: |Z(C)| = |C|^2, and the centralizer of a
        // subgroup of a nondegenerate metric group has order |Z(C)| / |subgroup|.
        ensure(g.ordinary_center_size == nc * nc, || format!("|Z(C)| = {}", g.ordinary_center_size))?;
        ensure(g.enriched_center.len() == nc * nc / nb, || {
            format!("{} enriched center objects", g.enriched_center.len())
        })?;
        sizes.push(g.enriched_center.len());
    }
    within(start.elapsed(), BUDGET_8)?;
    Ok(format!("enriched center sizes {sizes:?}"))
}

fn criterion_9() -> Outcome {
    let b = Arc::new(fixtures::z2_symmetric());
    let a = Algebra::group_algebra(&b, &[0, 1]).map_err(|e| e.to_string())?;
    let c = Arc::new(SingleObject::monoidal(b.clone(), a.clone()).map_err(|e| e.to_string())?);
    let star = unit_half_braiding(&*c, &c.simple_objects());
    let h = center_hom(&*c, &star, &star);
    ensure(h.is_full() && h.object() == a.object, || format!("center hom {:?}", h.object()))?;
    let sols = solve_half_braidings(&*c, &(), SolveOptions::for_category(&*c)).map_err(|e| e.to_string())?;
    ensure(sols.contains(&star), || "unit half-braiding not found by the solver".into())?;
    Ok(format!("hom A = {:?} recovered, {} half-braidings on *", a.object.mults(), sols.len()))
}

fn suite_json() -> String {
    let mut out = String::new();
    for c in [fixtures::z4(), fixtures::z5(), fixtures::fibonacci()] {
        let c = Arc::new(c);
        out += &report::validate(&c).to_json();
        out += &report::center(&c, true).unwrap().to_json();
        out += &report::verify(Theorem::CenterBraided, &c, None).unwrap().to_json();
    }
    for c in [fixtures::z3(), fixtures::z4()] {
        out += &report::ordinary_center(&c, None).unwrap().to_json();
    }
    out += &report::verify(Theorem::Mtc, &Arc::new(fixtures::z5()), None).unwrap().to_json();
    let psi = Arc::new(CentralFunctor::mueger_inclusion(Arc::new(fixtures::z4())).unwrap());
    out += &report::verify(Theorem::GeneralizedCenter, &psi.source().clone(), Some(psi)).unwrap().to_json();
    out
}

fn in_pool<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap().install(f)
}

fn criterion_10() -> Outcome {
    let one = in_pool(1, suite_json);
    let again = in_pool(1, suite_json);
    let many = in_pool(MANY_THREADS, suite_json);
    ensure(one == again, || "two single-threaded runs differ".into())?;
    ensure(one == many, || format!("1 and {MANY_THREADS} threads differ"))?;
    Ok(format!("{} bytes identical across 1 and {MANY_THREADS} threads", one.len()))
}

fn main() {
    let criteria: [(usize, &str, fn() -> Outcome); 10] = [
        (1, "validation suite", criterion_1),
        (2, "center homs equal transparent parts", criterion_2),
        (3, "nondegenerate base is its own center", criterion_3),
        (4, "symmetric base: center homs are full", criterion_4),
        (5, "degenerate z4 pattern matches the radical", criterion_5),
        (6, "enriched braided structure", criterion_6),
        (7, "half-braiding uniqueness", criterion_7),
        (8, "generalized center", criterion_8),
        (9, "single-object category", criterion_9),
        (10, "deterministic reports", criterion_10),
    ];
    let mut failed = 0;
    for (n, name, f) in criteria {
        let start = Instant::now();
        let out = f();
        let t = start.elapsed();
        match out {
            Ok(detail) => println!("criterion {n:>2} PASS  {name} ({detail}) [{t:.2?}]"),
            Err(why) => {
                failed += 1;
                println!("criterion {n:>2} FAIL  {name}: {why} [{t:.2?}]");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
