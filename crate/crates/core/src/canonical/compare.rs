use std::sync::Arc;

use super::enrich::CanonicalEnriched;
use super::functor::CentralFunctor;
use crate::basecat::{BlockMorphism, FusionData, MultObject};
use crate::enriched::{EnrichedCategory, EnrichedMonoidal, Report, SelfEnriched};
use crate::error::Result;

/// `theta: y (x) x* -> [x, y]`, the mate of `y x* x -> y` through the evaluation of `x`.
pub fn theta(c: &CanonicalEnriched, x: &MultObject, y: &MultObject) -> BlockMorphism {
    let b = c.base();
    let xd = b.dual_object(x);
    let f = b
        .runit(y)
        .compose(&b.tensor_mor(&BlockMorphism::identity(y), &b.cap(x)))
        .compose(&b.assoc(y, &xd, x));
    c.transpose(&b.tensor(y, &xd), x, y, &f)
}

/// Compares the canonical construction for the canonical functor on `b` with the
/// self-enrichment: hom objects agree, and `theta` carries identities, composition and
/// tensorators of one onto the other.
pub fn compare_with_self_enrichment(b: Arc<FusionData>, objs: &[MultObject]) -> Result<Report> {
    let sharp = SelfEnriched::new(b.clone())?;
    let can = CanonicalEnriched::new(Arc::new(CentralFunctor::canonical(b.clone())?));
    let mut rep = Report::default();
    let th = |x: &MultObject, y: &MultObject| theta(&can, x, y);
    let lbl = |x: &MultObject| can.obj_label(x);
    for x in objs {
        for y in objs {
            rep.check(sharp.hom(x, y) == can.hom(x, y), || {
                format!("hom({}, {}) differs", lbl(x), lbl(y))
            });
            rep.check(th(x, y).blocks().iter().all(|m| m.inverse().is_ok()), || {
                format!("theta({}, {}) is not invertible", lbl(x), lbl(y))
            });
        }
        rep.check(th(x, x).compose(&sharp.ident(x)) == can.ident(x), || {
            format!("identity at {}", lbl(x))
        });
        for y in objs {
            for z in objs {
                let lhs = th(x, z).compose(&sharp.comp(x, y, z));
                let rhs = can.comp(x, y, z).compose(&b.tensor_mor(&th(y, z), &th(x, y)));
                rep.check(lhs == rhs, || format!("composition at ({}, {}, {})", lbl(x), lbl(y), lbl(z)));
            }
        }
    }
    for x in objs {
        for y in objs {
            for x2 in objs {
                for y2 in objs {
                    let (xy, xy2) = (b.tensor(x, y), b.tensor(x2, y2));
                    let lhs = th(&xy, &xy2).compose(&sharp.tensorator(x, y, x2, y2));
                    let rhs = can
                        .tensorator(x, y, x2, y2)
                        .compose(&b.tensor_mor(&th(x, x2), &th(y, y2)));
                    rep.check(lhs == rhs, || {
                        format!("tensorator at ({}, {}, {}, {})", lbl(x), lbl(y), lbl(x2), lbl(y2))
                    });
                }
            }
        }
    }
    Ok(rep)
}
