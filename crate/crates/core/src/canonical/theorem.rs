use std::collections::BTreeSet;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::enrich::{canonical_enrich, CanonicalEnriched};
use super::functor::CentralFunctor;
use super::ordinary::{ordinary_center, OrdinaryCenter, OrdinaryOptions};
use super::plain::{intertwiner_dim, tensor_components};
use crate::basecat::{BlockMorphism, MultObject};
use crate::center::{center_category, center_hom, default_order, solve_half_braidings, HalfBraiding, SolveOptions};
use crate::enriched::{verify_monoidal, EnrichedCategory, EnrichedMonoidal, Report, Semisimple};
use crate::error::Result;

#[derive(Clone, Debug, Serialize)]
pub struct GeneralizedCenterReport {
    pub source: String,
    pub target: String,
    /// Axioms of the enriched monoidal category built from the functor.
    pub enrichment: Report,
    /// Labels of the half-braided simples found in the enriched center.
    pub enriched_center: Vec<String>,
    pub ordinary_center_size: usize,
    /// Positions in the ordinary center of the images of the simples of the source.
    pub image: Vec<usize>,
    /// Positions in the ordinary center of the centralizer of the image.
    pub centralizer: Vec<usize>,
    /// For each enriched center object, its position in the ordinary center.
    pub matched: Vec<Option<usize>>,
    pub objects: Report,
    pub representability: Report,
    /// `None` when the source is degenerate and the corollary does not apply.
    pub corollary: Option<Report>,
    pub braided: Report,
}

impl GeneralizedCenterReport {
    pub fn passes(&self) -> bool {
        self.enrichment.is_ok()
            && self.objects.is_ok()
            && self.representability.is_ok()
            && self.corollary.as_ref().is_none_or(Report::is_ok)
            && self.braided.is_ok()
    }
}

/// Checks the description of the center of the canonical enrichment as the centralizer of
/// the image of `psi` in the ordinary center of the target, on simple carriers.
pub fn verify_generalized_center(psi: Arc<CentralFunctor>) -> Result<GeneralizedCenterReport> {
    let (b, c) = (psi.source().clone(), psi.target().clone());
    let can: Arc<CanonicalEnriched> = canonical_enrich(psi.clone());
    let simples = can.simple_objects();
    let enrichment = verify_monoidal(&can, &simples);

    let oopts = OrdinaryOptions::for_category(&c);
    let zc: OrdinaryCenter = ordinary_center(&c, oopts)?;
    let mut sopts = SolveOptions::for_category(&*can);
    sopts.order = num_integer::lcm(num_integer::lcm(default_order(&*can), c.conductor()), oopts.order);
    let mut found: Vec<HalfBraiding<MultObject>> = Vec::new();
    for x in &simples {
        found.extend(solve_half_braidings(&*can, x, sopts)?);
    }

    let mut objects = Report::default();
    let image: Vec<usize> = (0..b.n())
        .filter_map(|w| {
            let hit = zc.find(psi.on_object(w), psi.half_braiding(w));
            objects.check(hit.is_some(), || {
                format!("image of {} is not among the ordinary center objects", b.label(w))
            });
            hit
        })
        .collect();
    let centralizer = zc.centralizer(&c, &image);
    let under = |hb: &HalfBraiding<MultObject>| -> Vec<BlockMorphism> {
        simples
            .iter()
            .zip(&hb.components)
            .map(|(z, v)| can.unname(&can.tensor_obj(&hb.object, z), &can.tensor_obj(z, &hb.object), v))
            .collect()
    };
    let carrier = |hb: &HalfBraiding<MultObject>| hb.object.as_simple().expect("simple carrier");
    let plain: Vec<Vec<BlockMorphism>> = found.iter().map(under).collect();
    let matched: Vec<Option<usize>> = found
        .iter()
        .zip(&plain)
        .map(|(hb, comps)| zc.find(carrier(hb), comps))
        .collect();
    let labels: Vec<String> = found
        .iter()
        .enumerate()
        .map(|(i, hb)| format!("{}#{i}", can.obj_label(&hb.object)))
        .collect();
    for (i, m) in matched.iter().enumerate() {
        objects.check(m.is_some(), || format!("{} is not an ordinary center object", labels[i]));
    }
    let got: BTreeSet<usize> = matched.iter().flatten().copied().collect();
    objects.check(got.len() == matched.len(), || "two enriched center objects coincide".into());
    let want: BTreeSet<usize> = centralizer.iter().copied().collect();
    objects.check(got == want, || {
        format!("enriched center gives {:?}, centralizer is {:?}", got, want)
    });

    let n = found.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let homs: Vec<_> = pairs
        .par_iter()
        .map(|&(i, j)| center_hom(&*can, &found[i], &found[j]).object())
        .collect();
    let rows: Vec<Vec<Option<String>>> = pairs
        .par_iter()
        .zip(&homs)
        .map(|(&(i, j), h)| {
            let (xi, xj) = (&found[i].object, &found[j].object);
            (0..b.n())
                .map(|w| {
                    let pw = c.simple_object(psi.on_object(w));
                    let src = c.tensor(&pw, xi);
                    let comps = tensor_components(&c, &pw, psi.half_braiding(w), xi, &plain[i]);
                    let want = intertwiner_dim(&c, &src, &comps, xj, &plain[j]);
                    (h.mult(w) != want).then(|| {
                        format!(
                            "hom({}, {}) has {} copies of {}, Z(C)(psi({}) x, y) has dimension {}",
                            labels[i],
                            labels[j],
                            h.mult(w),
                            b.label(w),
                            b.label(w),
                            want
                        )
                    })
                })
                .collect()
        })
        .collect();
    let mut representability = Report::default();
    for row in rows {
        for f in row {
            representability.check(f.is_none(), || f.unwrap_or_default());
        }
    }

    let corollary = b.is_nondegenerate().then(|| {
        let mut rep = Report::default();
        for (&(i, j), h) in pairs.iter().zip(&homs) {
            let only_unit = h.support().iter().all(|&w| w == b.unit());
            rep.check(only_unit, || format!("hom({}, {}) is not a multiple of the unit", labels[i], labels[j]));
            if let (Some(mi), Some(mj)) = (matched[i], matched[j]) {
                let want = zc.hom_dims[mi][mj];
                rep.check(h.mult(b.unit()) == want, || {
                    format!(
                        "hom({}, {}) has {} copies of the unit, centralizer hom has dimension {want}",
                        labels[i],
                        labels[j],
                        h.mult(b.unit())
                    )
                });
            }
        }
        rep
    });

    let braided = match center_category(can.clone(), found) {
        Ok(z) => z.verify_braided(),
        Err(e) => Report {
            checks: 1,
            failures: vec![e.to_string()],
        },
    };

    Ok(GeneralizedCenterReport {
        source: b.name().to_string(),
        target: c.name().to_string(),
        enrichment,
        enriched_center: labels,
        ordinary_center_size: zc.objects.len(),
        image,
        centralizer,
        matched,
        objects,
        representability,
        corollary,
        braided,
    })
}
