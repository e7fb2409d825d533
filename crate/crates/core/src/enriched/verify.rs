use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use super::{
    id_tensor, postcompose, precompose, tensor_id, under_compose, EnrichedCategory, EnrichedFunctor,
    EnrichedMonoidal, TensorFunctor,
};
use crate::basecat::BlockMorphism;

/// Counts of checked instances and a description of each failure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub checks: usize,
    pub failures: Vec<String>,
}

impl Report {
    pub fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(what());
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.failures.extend(other.failures);
    }

    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    fn from_results(results: Vec<Option<String>>) -> Report {
        Report {
            checks: results.len(),
            failures: results.into_iter().flatten().collect(),
        }
    }
}

fn tuples<O: Clone>(objs: &[O], k: usize) -> Vec<Vec<O>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|t| {
                objs.iter().map(move |o| {
                    let mut t = t.clone();
                    t.push(o.clone());
                    t
                })
            })
            .collect();
    }
    out
}

fn fail(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    if ok {
        None
    } else {
        Some(what())
    }
}

/// Unit and associativity laws on all tuples of the given objects.
pub fn verify_category<C: EnrichedCategory>(c: &C, objs: &[C::Obj]) -> Report {
    let b = c.base();
    let pairs: Vec<Option<String>> = tuples(objs, 2)
        .par_iter()
        .flat_map_iter(|t| {
            let (x, y) = (&t[0], &t[1]);
            let h = c.hom(x, y);
            let id = BlockMorphism::identity(&h);
            let left = c
                .comp(x, y, y)
                .compose(&b.tensor_mor(&c.ident(y), &id))
                .compose(&b.lunit_inv(&h));
            let right = c
                .comp(x, x, y)
                .compose(&b.tensor_mor(&id, &c.ident(x)))
                .compose(&b.runit_inv(&h));
            let lbl = || format!("{} -> {}", c.obj_label(x), c.obj_label(y));
            [
                fail(left.is_identity(), || format!("left unit at {}", lbl())),
                fail(right.is_identity(), || format!("right unit at {}", lbl())),
            ]
        })
        .collect();
    let quads: Vec<Option<String>> = tuples(objs, 4)
        .par_iter()
        .map(|t| {
            let (w, x, y, z) = (&t[0], &t[1], &t[2], &t[3]);
            let (hyz, hxy, hwx) = (c.hom(y, z), c.hom(x, y), c.hom(w, x));
            let lhs = c
                .comp(w, y, z)
                .compose(&b.tensor_mor(&BlockMorphism::identity(&hyz), &c.comp(w, x, y)))
                .compose(&b.assoc(&hyz, &hxy, &hwx));
            let rhs = c
                .comp(w, x, z)
                .compose(&b.tensor_mor(&c.comp(x, y, z), &BlockMorphism::identity(&hwx)));
            fail(lhs == rhs, || {
                format!(
                    "associativity at ({}, {}, {}, {})",
                    c.obj_label(w),
                    c.obj_label(x),
                    c.obj_label(y),
                    c.obj_label(z)
                )
            })
        })
        .collect();
    let mut rep = Report::from_results(pairs);
    rep.merge(Report::from_results(quads));
    rep
}

/// Identity and composition squares of an enriched functor.
pub fn verify_functor<F: EnrichedFunctor>(
    f: &F,
    objs: &[<F::Source as EnrichedCategory>::Obj],
) -> Report {
    let (src, tgt) = (f.source(), f.target());
    let b = src.base();
    let idents: Vec<Option<String>> = objs
        .par_iter()
        .map(|x| {
            let lhs = f.on_hom(x, x).compose(&src.ident(x));
            fail(lhs == tgt.ident(&f.on_object(x)), || {
                format!("functor identity at {}", src.obj_label(x))
            })
        })
        .collect();
    let comps: Vec<Option<String>> = tuples(objs, 3)
        .par_iter()
        .map(|t| {
            let (x, y, z) = (&t[0], &t[1], &t[2]);
            let lhs = f.on_hom(x, z).compose(&src.comp(x, y, z));
            let (fx, fy, fz) = (f.on_object(x), f.on_object(y), f.on_object(z));
            let rhs = tgt
                .comp(&fx, &fy, &fz)
                .compose(&b.tensor_mor(&f.on_hom(y, z), &f.on_hom(x, y)));
            fail(lhs == rhs, || {
                format!(
                    "functor composition at ({}, {}, {})",
                    src.obj_label(x),
                    src.obj_label(y),
                    src.obj_label(z)
                )
            })
        })
        .collect();
    let mut rep = Report::from_results(idents);
    rep.merge(Report::from_results(comps));
    rep
}

/// Naturality of components `xi_x: F x -> G x` given as underlying morphisms.
pub fn verify_natural<F, G>(
    f: &F,
    g: &G,
    xi: &(dyn Fn(&<F::Source as EnrichedCategory>::Obj) -> BlockMorphism + Sync),
    objs: &[<F::Source as EnrichedCategory>::Obj],
) -> Report
where
    F: EnrichedFunctor,
    G: EnrichedFunctor<Source = F::Source, Target = F::Target>,
{
    let (src, tgt) = (f.source(), f.target());
    let comps: Vec<BlockMorphism> = objs.par_iter().map(xi).collect();
    let results = tuples(&(0..objs.len()).collect::<Vec<_>>(), 2)
        .par_iter()
        .map(|t| {
            let (i, j) = (t[0], t[1]);
            let (x, y) = (&objs[i], &objs[j]);
            let (fx, fy, gx, gy) = (f.on_object(x), f.on_object(y), g.on_object(x), g.on_object(y));
            let lhs = postcompose(tgt, &comps[j], &fx, &fy, &gy).compose(&f.on_hom(x, y));
            let rhs = precompose(tgt, &comps[i], &fx, &gx, &gy).compose(&g.on_hom(x, y));
            fail(lhs == rhs, || {
                format!("naturality at {} -> {}", src.obj_label(x), src.obj_label(y))
            })
        })
        .collect();
    Report::from_results(results)
}

/// Category laws, functoriality of the tensor product, invertibility of the structure
/// isomorphisms, and the pentagon and triangle in the underlying category.
pub fn verify_monoidal<C: EnrichedMonoidal + 'static>(c: &Arc<C>, objs: &[C::Obj]) -> Report {
    let mut rep = verify_category(&**c, objs);
    let tf = TensorFunctor::new(c.clone());
    let pairs: Vec<(C::Obj, C::Obj)> = tuples(objs, 2)
        .into_iter()
        .map(|t| (t[0].clone(), t[1].clone()))
        .collect();
    rep.merge(verify_functor(&tf, &pairs));
    let c = &**c;
    let e = c.unit_object();
    let t = |x: &C::Obj, y: &C::Obj| c.tensor_obj(x, y);
    let invert: Vec<Option<String>> = tuples(objs, 3)
        .par_iter()
        .map(|v| {
            let (x, y, z) = (&v[0], &v[1], &v[2]);
            let (xy_z, x_yz) = (t(&t(x, y), z), t(x, &t(y, z)));
            let a = c.associator(x, y, z);
            let ai = c.associator_inv(x, y, z);
            let ok = under_compose(c, &xy_z, &x_yz, &xy_z, &ai, &a) == c.ident(&xy_z)
                && under_compose(c, &x_yz, &xy_z, &x_yz, &a, &ai) == c.ident(&x_yz);
            fail(ok, || {
                format!(
                    "associator invertibility at ({}, {}, {})",
                    c.obj_label(x),
                    c.obj_label(y),
                    c.obj_label(z)
                )
            })
        })
        .collect();
    rep.merge(Report::from_results(invert));
    let unitors: Vec<Option<String>> = objs
        .par_iter()
        .flat_map_iter(|x| {
            let (ex, xe) = (t(&e, x), t(x, &e));
            let l_ok = under_compose(c, &ex, x, &ex, &c.lunitor_inv(x), &c.lunitor(x)) == c.ident(&ex)
                && under_compose(c, x, &ex, x, &c.lunitor(x), &c.lunitor_inv(x)) == c.ident(x);
            let r_ok = under_compose(c, &xe, x, &xe, &c.runitor_inv(x), &c.runitor(x)) == c.ident(&xe)
                && under_compose(c, x, &xe, x, &c.runitor(x), &c.runitor_inv(x)) == c.ident(x);
            [
                fail(l_ok, || format!("left unitor invertibility at {}", c.obj_label(x))),
                fail(r_ok, || format!("right unitor invertibility at {}", c.obj_label(x))),
            ]
        })
        .collect();
    rep.merge(Report::from_results(unitors));
    let pentagons: Vec<Option<String>> = tuples(objs, 4)
        .par_iter()
        .map(|v| {
            let (w, x, y, z) = (&v[0], &v[1], &v[2], &v[3]);
            let (wx, xy, yz) = (t(w, x), t(x, y), t(y, z));
            let p0 = t(&t(&wx, y), z);
            let p1 = t(&t(w, &xy), z);
            let p2 = t(w, &t(&xy, z));
            let p3 = t(w, &t(x, &yz));
            let q1 = t(&wx, &yz);
            let a_wxy = tensor_id(c, &t(&wx, y), &t(w, &xy), z, &c.associator(w, x, y));
            let a_w_xy_z = c.associator(w, &xy, z);
            let id_a_xyz = id_tensor(c, w, &t(&xy, z), &t(x, &yz), &c.associator(x, y, z));
            let lhs = under_compose(
                c,
                &p0,
                &p2,
                &p3,
                &id_a_xyz,
                &under_compose(c, &p0, &p1, &p2, &a_w_xy_z, &a_wxy),
            );
            let rhs = under_compose(
                c,
                &p0,
                &q1,
                &p3,
                &c.associator(w, x, &yz),
                &c.associator(&wx, y, z),
            );
            fail(lhs == rhs, || {
                format!(
                    "pentagon at ({}, {}, {}, {})",
                    c.obj_label(w),
                    c.obj_label(x),
                    c.obj_label(y),
                    c.obj_label(z)
                )
            })
        })
        .collect();
    rep.merge(Report::from_results(pentagons));
    let triangles: Vec<Option<String>> = tuples(objs, 2)
        .par_iter()
        .map(|v| {
            let (x, y) = (&v[0], &v[1]);
            let xe_y = t(&t(x, &e), y);
            let x_ey = t(x, &t(&e, y));
            let xy = t(x, y);
            let lhs = under_compose(
                c,
                &xe_y,
                &x_ey,
                &xy,
                &id_tensor(c, x, &t(&e, y), y, &c.lunitor(y)),
                &c.associator(x, &e, y),
            );
            let rhs = tensor_id(c, &t(x, &e), x, y, &c.runitor(x));
            fail(lhs == rhs, || {
                format!("triangle at ({}, {})", c.obj_label(x), c.obj_label(y))
            })
        })
        .collect();
    rep.merge(Report::from_results(triangles));
    rep
}
