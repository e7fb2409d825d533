use std::sync::Arc;

use serde_json::json;

use super::{Check, RunReport};
use crate::basecat::{FusionData, MultObject};
use crate::canonical::{self, canonical_enrich as enrich, CentralFunctor, OrdinaryOptions};
use crate::center::{
    canonical_half_braiding, center_category, center_hom, solve_half_braidings, transparent_subobject,
    SolveOptions, SubObject,
};
use crate::enriched::{
    verify_category, verify_monoidal, EnrichedCategory, EnrichedTable, Product, SelfEnriched, Semisimple,
};
use crate::error::Result;
use crate::format::MetricBase;

/// Theorems the `verify` command knows about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    /// For nondegenerate `B`, the center of the self-enrichment is `B` itself.
    Mtc,
    /// Center homs of the self-enrichment are the transparent parts of `y x*`.
    SelfEnrich,
    /// The center of the self-enrichment is an enriched braided category.
    CenterBraided,
    /// The center of the canonical enrichment is a centralizer in the ordinary center.
    GeneralizedCenter,
}

fn labels(c: &FusionData, xs: &[usize]) -> Vec<String> {
    xs.iter().map(|&x| c.label(x).to_string()).collect()
}

fn lbl(c: &FusionData, m: &MultObject) -> String {
    crate::enriched::object_label(c, m)
}

fn pair(c: &FusionData, x: usize, y: usize) -> Vec<String> {
    vec![c.label(x).to_string(), c.label(y).to_string()]
}

/// Per-simple dimensions plus the basis matrices of a subobject.
fn sub_json(b: &FusionData, sub: &SubObject) -> serde_json::Value {
    let o = sub.object();
    let dims: serde_json::Map<String, serde_json::Value> =
        (0..b.n()).map(|s| (b.label(s).to_string(), json!(o.mult(s)))).collect();
    let basis: Vec<_> = (0..b.n()).map(|s| sub.basis(s)).collect();
    json!({ "dims": dims, "basis": basis })
}

fn sharp(b: &Arc<FusionData>) -> Result<Arc<SelfEnriched>> {
    Ok(Arc::new(SelfEnriched::new(b.clone())?))
}

/// Unit, duality, pentagon, hexagon and zigzag axioms.
pub fn validate(c: &FusionData) -> RunReport {
    let v = c.validate();
    let mut r = RunReport::new("validate");
    r.push(Check::new("axioms", vec![], "0 violations", format!("{} violations", v.failures.len())));
    for f in &v.failures {
        r.push(Check::new(&f.axiom, f.labels.clone(), "holds", &f.detail));
    }
    r.data = json!({ "category": c.name(), "simples": c.labels(), "instances": v.checks });
    r
}

/// The Mueger center, cross-checked against the centralizer of all simples.
pub fn mueger(c: &FusionData) -> Result<RunReport> {
    let m = c.mueger_center();
    let all: Vec<usize> = (0..c.n()).collect();
    let oracle = canonical::centralizer(c, &all)?;
    let mut r = RunReport::new("mueger");
    r.push(Check::new("centralizer of everything", vec![], labels(c, &oracle).join(","), labels(c, &m).join(",")));
    r.data = json!({ "mueger_center": labels(c, &m), "nondegenerate": c.is_nondegenerate() });
    Ok(r)
}

/// The radical of the quadratic form, cross-checked against the Mueger center.
pub fn radical(m: &MetricBase) -> RunReport {
    let g = m.bichar.group();
    let mut rad: Vec<usize> = m.qform.radical().iter().map(|e| g.index(e)).collect();
    rad.sort_unstable();
    let c = &m.data;
    let mut r = RunReport::new("radical");
    r.push(Check::new(
        "radical is the Mueger center",
        vec![],
        labels(c, &c.mueger_center()).join(","),
        labels(c, &rad).join(","),
    ));
    r.data = json!({ "radical": labels(c, &rad), "nondegenerate": rad.len() == 1 });
    r
}

/// Monoidal enriched-category axioms of the self-enrichment on the simples.
pub fn self_enrich(b: &Arc<FusionData>) -> Result<RunReport> {
    let s = sharp(b)?;
    let objs = s.simple_objects();
    let mut r = RunReport::new("self-enrich");
    r.push_report("monoidal axioms", vec![], &verify_monoidal(&s, &objs));
    let homs: Vec<Vec<String>> = objs
        .iter()
        .map(|x| objs.iter().map(|y| lbl(b, &s.hom(x, y))).collect())
        .collect();
    r.data = json!({ "objects": b.labels(), "homs": homs });
    Ok(r)
}

/// The self-enrichment on the simples as a JSON enriched-category table.
pub fn self_enrichment_table(b: &Arc<FusionData>) -> Result<String> {
    let s = sharp(b)?;
    let t = EnrichedTable::from_category(&*s, b.clone(), &s.simple_objects());
    Ok(serde_json::to_string_pretty(&t).expect("tables serialize") + "\n")
}

/// Category axioms of the product of the self-enrichment with itself.
pub fn product(b: &Arc<FusionData>) -> Result<RunReport> {
    let s = sharp(b)?;
    let p = Product::new(s.clone(), s.clone());
    let objs = s.simple_objects();
    let pairs: Vec<(MultObject, MultObject)> = objs
        .iter()
        .flat_map(|x| objs.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    let mut r = RunReport::new("product");
    r.push_report("category axioms", vec![], &verify_category(&p, &pairs));
    r.data = json!({ "objects": pairs.len() });
    Ok(r)
}

/// Center homs between the canonically half-braided simples of the self-enrichment.
pub fn center(b: &Arc<FusionData>, against_oracle: bool) -> Result<RunReport> {
    let s = sharp(b)?;
    let hbs: Vec<_> = (0..b.n()).map(|x| canonical_half_braiding(&s, &b.simple_object(x))).collect();
    let mut r = RunReport::new("center");
    let mut homs = Vec::new();
    for x in 0..b.n() {
        let mut row = Vec::new();
        for y in 0..b.n() {
            let h = center_hom(&*s, &hbs[x], &hbs[y]);
            row.push(json!({ "x": b.label(x), "y": b.label(y), "hom": sub_json(b, &h) }));
            if against_oracle {
                let oracle = transparent_subobject(b, &s.hom(&hbs[x].object, &hbs[y].object))?;
                r.push(Check {
                    name: "center hom equals transparent part".into(),
                    location: pair(b, x, y),
                    expected: lbl(b, &oracle.object()),
                    got: lbl(b, &h.object()),
                    ok: oracle == h,
                });
            }
        }
        homs.push(row);
    }
    r.data = json!({ "objects": b.labels(), "center_homs": homs });
    Ok(r)
}

/// Solves for every half-braiding of each simple of the self-enrichment.
pub fn half_braidings(b: &Arc<FusionData>, enumerate: bool) -> Result<RunReport> {
    let s = sharp(b)?;
    let opts = SolveOptions::for_category(&*s);
    let mut r = RunReport::new("half-braidings");
    let mut found = Vec::new();
    for x in 0..b.n() {
        let xm = b.simple_object(x);
        let sols = solve_half_braidings(&*s, &xm, opts)?;
        let canon = canonical_half_braiding(&s, &xm);
        r.push(Check::new("number of solutions", vec![b.label(x).into()], 1, sols.len()));
        r.push(Check::new("solution is the braiding", vec![b.label(x).into()], true, sols.first() == Some(&canon)));
        if enumerate {
            let comps: Vec<Vec<_>> = sols
                .iter()
                .map(|hb| {
                    hb.components
                        .iter()
                        .enumerate()
                        .map(|(z, v)| serde_json::to_value(s.unname(&b.tensor(&xm, &b.simple_object(z)), &b.tensor(&b.simple_object(z), &xm), v)).expect("morphisms serialize"))
                        .collect()
                })
                .collect();
            found.push(json!({ "object": b.label(x), "solutions": comps }));
        } else {
            found.push(json!({ "object": b.label(x), "solutions": sols.len() }));
        }
    }
    r.data = json!({ "order": opts.order, "half_braidings": found });
    Ok(r)
}

/// Internal homs and the monoidal axioms of the enrichment defined by `psi`.
pub fn canonical_enrich(psi: Arc<CentralFunctor>) -> Result<RunReport> {
    let (b, c) = (psi.source().clone(), psi.target().clone());
    let e = enrich(psi);
    let objs = e.simple_objects();
    let mut r = RunReport::new("canonical-enrich");
    let mut homs = Vec::new();
    for x in &objs {
        let mut row = Vec::new();
        for y in &objs {
            let loc = vec![lbl(&c, x), lbl(&c, y)];
            match e.internal_hom(x, y) {
                Ok(h) => {
                    r.push(Check::new("adjunction", loc, "holds", "holds"));
                    row.push(lbl(&b, &h.value));
                }
                Err(err) => {
                    r.push(Check::new("adjunction", loc, "holds", err));
                    row.push(String::new());
                }
            }
        }
        homs.push(row);
    }
    r.push_report("monoidal axioms", vec![], &verify_monoidal(&e, &objs));
    r.data = json!({ "source": b.name(), "target": c.name(), "objects": c.labels(), "homs": homs });
    Ok(r)
}

/// The brute-force center of `c` on simple carriers, optionally with a smaller search budget.
pub fn ordinary_center(c: &FusionData, node_budget: Option<u64>) -> Result<RunReport> {
    let mut opts = OrdinaryOptions::for_category(c);
    if let Some(n) = node_budget {
        opts.node_budget = n;
    }
    let z = canonical::ordinary_center(c, opts)?;
    let mut r = RunReport::new("ordinary-center");
    for (i, row) in z.hom_dims.iter().enumerate() {
        r.push(Check::new("endomorphisms", vec![format!("#{i}")], 1, row[i]));
    }
    let objects: Vec<_> = z
        .objects
        .iter()
        .map(|o| {
            let phases: Vec<Vec<String>> = o
                .components
                .iter()
                .map(|m| {
                    m.source()
                        .support()
                        .into_iter()
                        .map(|s| crate::format::scalar_value(m.entry(s, 0, 0)).to_string())
                        .collect()
                })
                .collect();
            json!({ "carrier": c.label(o.carrier), "components": phases })
        })
        .collect();
    r.data = json!({ "order": opts.order, "objects": objects, "hom_dims": z.hom_dims });
    Ok(r)
}

/// Simples of `c` centralizing the given ones.
pub fn centralizer(c: &FusionData, of: &[String]) -> Result<RunReport> {
    let s = of.iter().map(|l| c.index_of(l)).collect::<Result<Vec<_>>>()?;
    let z = canonical::centralizer(c, &s)?;
    let mut r = RunReport::new("centralizer");
    r.data = json!({ "of": of, "centralizer": labels(c, &z) });
    Ok(r)
}

/// Verifies a theorem on the given base, or on `psi` for the generalized center.
pub fn verify(theorem: Theorem, b: &Arc<FusionData>, psi: Option<Arc<CentralFunctor>>) -> Result<RunReport> {
    let mut r = RunReport::new("verify");
    match theorem {
        Theorem::Mtc => {
            r.push(Check::new("nondegenerate", vec![], true, b.is_nondegenerate()));
            let s = sharp(b)?;
            let opts = SolveOptions::for_category(&*s);
            let mut hbs = Vec::new();
            for x in 0..b.n() {
                let sols = solve_half_braidings(&*s, &b.simple_object(x), opts)?;
                r.push(Check::new("half-braidings", vec![b.label(x).into()], 1, sols.len()));
                hbs.extend(sols);
            }
            if hbs.len() == b.n() {
                let z = center_category(s.clone(), hbs)?;
                for x in 0..b.n() {
                    for y in 0..b.n() {
                        let want = if x == y { b.unit_object() } else { MultObject::zero(b.n()) };
                        r.push(Check::new("center hom", pair(b, x, y), lbl(b, &want), lbl(b, &z.sub(x, y).object())));
                    }
                }
                for x in 0..b.n() {
                    for y in 0..b.n() {
                        let (xm, ym) = (b.simple_object(x), b.simple_object(y));
                        let got = s.unname(&b.tensor(&xm, &ym), &b.tensor(&ym, &xm), &z.braiding_element(x, y));
                        r.push(Check {
                            name: "braiding equals R-symbols".into(),
                            location: pair(b, x, y),
                            expected: "c_{x,y}".into(),
                            got: if got == b.braid(&xm, &ym) { "c_{x,y}" } else { "other" }.into(),
                            ok: got == b.braid(&xm, &ym),
                        });
                    }
                }
            }
            r.data = json!({ "theorem": "mtc", "base": b.name() });
        }
        Theorem::SelfEnrich => {
            let c = center(b, true)?;
            r.checks = Vec::new();
            for ch in c.checks {
                r.push(ch);
            }
            r.data = json!({ "theorem": "self-enrich", "base": b.name(), "center_homs": c.data["center_homs"] });
        }
        Theorem::CenterBraided => {
            let s = sharp(b)?;
            let hbs = (0..b.n()).map(|x| canonical_half_braiding(&s, &b.simple_object(x))).collect();
            let z = center_category(s, hbs)?;
            r.push_report("enriched braided structure", vec![], &z.verify_braided());
            r.data = json!({ "theorem": "center-braided", "base": b.name() });
        }
        Theorem::GeneralizedCenter => {
            let psi = match psi {
                Some(p) => p,
                None => Arc::new(CentralFunctor::canonical(b.clone())?),
            };
            let g = canonical::verify_generalized_center(psi)?;
            r.push_report("enriched monoidal axioms", vec![], &g.enrichment);
            r.push_report("objects match the centralizer", vec![], &g.objects);
            r.push_report("representability", vec![], &g.representability);
            match &g.corollary {
                Some(c) => r.push_report("corollary", vec![], c),
                None => r.push(Check::new("corollary", vec![], "inapplicable", "inapplicable")),
            }
            r.push_report("enriched braided structure", vec![], &g.braided);
            r.data = json!({ "theorem": "generalized-center", "report": g });
        }
    }
    Ok(r)
}
