//! Drinfeld centers of enriched monoidal categories.

mod category;
mod solve;

use rayon::prelude::*;
use serde::Serialize;

pub use category::{center_category, CenterCategory, LeftAction, RightAction};
pub use solve::{default_order, solve_half_braidings, SolveOptions};

use crate::basecat::{BlockMorphism, FusionData, MultObject};
use crate::enriched::{
    id_tensor, left_whisker, postcompose, precompose, right_whisker, tensor_id, under_compose,
    underlying_inverse, EnrichedCategory, EnrichedMonoidal, Report, SelfEnriched, Semisimple,
};
use crate::error::Result;
use crate::linalg::{canonical_columns, Matrix};
use crate::scalar::CycScalar;

/// A half-braiding on `object`: one underlying component `object (x) z -> z (x) object`
/// per simple test object `z`, in [`Semisimple::simple_objects`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfBraiding<O> {
    pub object: O,
    pub components: Vec<BlockMorphism>,
}

/// The braiding `c_{x,-}` as a half-braiding of `x` in the self-enrichment.
pub fn canonical_half_braiding(c: &SelfEnriched, x: &MultObject) -> HalfBraiding<MultObject> {
    let b = c.base();
    HalfBraiding {
        object: x.clone(),
        components: c
            .simple_objects()
            .iter()
            .map(|z| c.name(&b.braid(x, z)))
            .collect(),
    }
}

/// `x (x) 1 -> 1 (x) x` built from the unitors.
pub fn unit_component<C: EnrichedMonoidal>(c: &C, x: &C::Obj) -> BlockMorphism {
    let e = c.unit_object();
    under_compose(
        c,
        &c.tensor_obj(x, &e),
        x,
        &c.tensor_obj(&e, x),
        &c.lunitor_inv(x),
        &c.runitor(x),
    )
}

/// The component `b_{x,z}` at an arbitrary object, assembled from the simple summands of `z`.
pub fn component_at<C: Semisimple>(c: &C, simples: &[C::Obj], hb: &HalfBraiding<C::Obj>, z: &C::Obj) -> BlockMorphism {
    if let Some(i) = simples.iter().position(|s| s == z) {
        return hb.components[i].clone();
    }
    let x = &hb.object;
    let (xz, zx) = (c.tensor_obj(x, z), c.tensor_obj(z, x));
    let mut total: Option<BlockMorphism> = None;
    for part in c.decompose(z) {
        let s = &part.simple;
        let i = simples
            .iter()
            .position(|t| t == s)
            .expect("summand is a simple test object");
        let (xs, sx) = (c.tensor_obj(x, s), c.tensor_obj(s, x));
        let proj = id_tensor(c, x, z, s, &part.projection);
        let incl = tensor_id(c, s, z, x, &part.inclusion);
        let term = under_compose(
            c,
            &xz,
            &sx,
            &zx,
            &incl,
            &under_compose(c, &xz, &xs, &sx, &hb.components[i], &proj),
        );
        total = Some(match total {
            None => term,
            Some(t) => t.add(&term),
        });
    }
    total.unwrap_or_else(|| BlockMorphism::zero(&c.base().unit_object(), &c.hom(&xz, &zx)))
}

/// `b_{x (x) y, -}` for the tensor product of two half-braided objects.
pub fn tensor_half_braiding<C: Semisimple>(
    c: &C,
    simples: &[C::Obj],
    hx: &HalfBraiding<C::Obj>,
    hy: &HalfBraiding<C::Obj>,
) -> HalfBraiding<C::Obj> {
    let (x, y) = (&hx.object, &hy.object);
    let t = |a: &C::Obj, b: &C::Obj| c.tensor_obj(a, b);
    let xy = t(x, y);
    let components = simples
        .iter()
        .enumerate()
        .map(|(i, z)| {
            let p0 = t(&xy, z);
            let p1 = t(x, &t(y, z));
            let p2 = t(x, &t(z, y));
            let p3 = t(&t(x, z), y);
            let p4 = t(&t(z, x), y);
            let p5 = t(z, &xy);
            let steps = [
                (p0.clone(), p1.clone(), c.associator(x, y, z)),
                (p1, p2.clone(), id_tensor(c, x, &t(y, z), &t(z, y), &hy.components[i])),
                (p2, p3.clone(), c.associator_inv(x, z, y)),
                (p3, p4.clone(), tensor_id(c, &t(x, z), &t(z, x), y, &hx.components[i])),
                (p4, p5, c.associator(z, x, y)),
            ];
            let mut acc = c.ident(&p0);
            for (src, tgt, f) in steps {
                acc = under_compose(c, &p0, &src, &tgt, &f, &acc);
            }
            acc
        })
        .collect();
    HalfBraiding {
        object: xy,
        components,
    }
}

/// The half-braiding of the unit object, given by the unitors.
pub fn unit_half_braiding<C: Semisimple>(c: &C, simples: &[C::Obj]) -> HalfBraiding<C::Obj> {
    let e = c.unit_object();
    let components = simples
        .iter()
        .map(|z| {
            under_compose(
                c,
                &c.tensor_obj(&e, z),
                z,
                &c.tensor_obj(z, &e),
                &c.runitor_inv(z),
                &c.lunitor(z),
            )
        })
        .collect();
    HalfBraiding {
        object: e,
        components,
    }
}

/// Checks the unit condition, invertibility, multiplicativity and enriched naturality of a
/// half-braiding on all simple test objects.
pub fn verify_half_braiding<C: Semisimple>(c: &C, hb: &HalfBraiding<C::Obj>) -> Report {
    let simples = c.simple_objects();
    let mut rep = Report::default();
    let x = &hb.object;
    let e = c.unit_object();
    if hb.components.len() != simples.len() {
        rep.check(false, || "one component per simple test object required".into());
        return rep;
    }
    if let Some(i) = simples.iter().position(|z| *z == e) {
        rep.check(hb.components[i] == unit_component(c, x), || {
            "unit condition: b_{x,1} differs from the unitor composite".into()
        });
    }
    for (i, z) in simples.iter().enumerate() {
        let ok = underlying_inverse(c, &c.tensor_obj(x, z), &c.tensor_obj(z, x), &hb.components[i]).is_some();
        rep.check(ok, || format!("component at {} is not invertible", c.obj_label(z)));
    }
    let pairs: Vec<(usize, usize)> = (0..simples.len())
        .flat_map(|i| (0..simples.len()).map(move |j| (i, j)))
        .collect();
    let results: Vec<[Option<String>; 2]> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (y, z) = (&simples[i], &simples[j]);
            let mult = multiplicativity_holds(c, &simples, hb, i, j);
            let nat = naturality_holds(c, hb, y, z, &hb.components[i], &hb.components[j]);
            let lbl = || format!("({}, {})", c.obj_label(y), c.obj_label(z));
            [
                (!mult).then(|| format!("multiplicativity at {}", lbl())),
                (!nat).then(|| format!("enriched naturality at {}", lbl())),
            ]
        })
        .collect();
    for r in results {
        for f in r {
            rep.checks += 1;
            rep.failures.extend(f);
        }
    }
    rep
}

/// `b_{x, y z}` against the composite through `b_{x,y}` and `b_{x,z}`.
pub(crate) fn multiplicativity_holds<C: Semisimple>(
    c: &C,
    simples: &[C::Obj],
    hb: &HalfBraiding<C::Obj>,
    i: usize,
    j: usize,
) -> bool {
    let (x, y, z) = (&hb.object, &simples[i], &simples[j]);
    let t = |a: &C::Obj, b: &C::Obj| c.tensor_obj(a, b);
    let yz = t(y, z);
    let p0 = t(x, &yz);
    let p1 = t(&t(x, y), z);
    let p2 = t(&t(y, x), z);
    let p3 = t(y, &t(x, z));
    let p4 = t(y, &t(z, x));
    let p5 = t(&yz, x);
    let steps = [
        (p0.clone(), p1.clone(), c.associator_inv(x, y, z)),
        (p1, p2.clone(), tensor_id(c, &t(x, y), &t(y, x), z, &hb.components[i])),
        (p2, p3.clone(), c.associator(y, x, z)),
        (p3, p4.clone(), id_tensor(c, y, &t(x, z), &t(z, x), &hb.components[j])),
        (p4, p5, c.associator_inv(y, z, x)),
    ];
    let mut acc = c.ident(&p0);
    for (src, tgt, f) in steps {
        acc = under_compose(c, &p0, &src, &tgt, &f, &acc);
    }
    acc == component_at(c, simples, hb, &yz)
}

/// Enriched naturality of `b_x` on `hom(y, z)`.
pub(crate) fn naturality_holds<C: Semisimple>(
    c: &C,
    hb: &HalfBraiding<C::Obj>,
    y: &C::Obj,
    z: &C::Obj,
    by: &BlockMorphism,
    bz: &BlockMorphism,
) -> bool {
    let (lhs, rhs) = naturality_sides(c, &hb.object, y, z, by, bz);
    lhs == rhs
}

/// Both composites `hom(y, z) -> hom(x y, z x)` of the naturality square.
pub(crate) fn naturality_sides<C: Semisimple>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
    z: &C::Obj,
    by: &BlockMorphism,
    bz: &BlockMorphism,
) -> (BlockMorphism, BlockMorphism) {
    let t = |a: &C::Obj, b: &C::Obj| c.tensor_obj(a, b);
    let (xy, yx, xz, zx) = (t(x, y), t(y, x), t(x, z), t(z, x));
    let lhs = precompose(c, by, &xy, &yx, &zx).compose(&right_whisker(c, x, y, z));
    let rhs = postcompose(c, bz, &xy, &xz, &zx).compose(&left_whisker(c, x, y, z));
    (lhs, rhs)
}

/// A subobject of a semisimple object: per simple, a canonical column basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubObject {
    ambient: MultObject,
    basis: Vec<Matrix>,
}

impl SubObject {
    pub fn new(ambient: MultObject, basis: Vec<Matrix>) -> Self {
        assert_eq!(basis.len(), ambient.n_simples(), "one basis per simple");
        let basis = basis
            .iter()
            .enumerate()
            .map(|(s, m)| {
                assert_eq!(m.rows(), ambient.mult(s), "basis rows must match the ambient");
                canonical_columns(m)
            })
            .collect();
        SubObject { ambient, basis }
    }

    pub fn full(ambient: &MultObject) -> Self {
        let basis = (0..ambient.n_simples())
            .map(|s| Matrix::identity(ambient.mult(s)))
            .collect();
        SubObject::new(ambient.clone(), basis)
    }

    pub fn ambient(&self) -> &MultObject {
        &self.ambient
    }

    pub fn basis(&self, s: usize) -> &Matrix {
        &self.basis[s]
    }

    pub fn object(&self) -> MultObject {
        MultObject::from_mults(self.basis.iter().map(|m| m.cols()).collect())
    }

    pub fn is_full(&self) -> bool {
        self.object() == self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.object().is_zero()
    }

    pub fn inclusion(&self) -> BlockMorphism {
        BlockMorphism::new(self.object(), self.ambient.clone(), self.basis.clone())
            .expect("basis shapes match")
    }

    /// A left inverse of [`SubObject::inclusion`] reading off the pivot coordinates.
    pub fn projection(&self) -> BlockMorphism {
        let blocks = self
            .basis
            .iter()
            .map(|m| {
                let mut p = Matrix::zeros(m.cols(), m.rows());
                for k in 0..m.cols() {
                    let pivot = (0..m.rows())
                        .find(|&r| !m.get(r, k).is_zero())
                        .expect("basis columns are nonzero");
                    p.set(k, pivot, CycScalar::one());
                }
                p
            })
            .collect();
        BlockMorphism::new(self.ambient.clone(), self.object(), blocks).expect("shapes match")
    }

    /// `g` with `inclusion . g = f`, if `f` factors through the subobject.
    pub fn factor(&self, f: &BlockMorphism) -> Option<BlockMorphism> {
        let g = self.projection().compose(f);
        (self.inclusion().compose(&g) == *f).then_some(g)
    }
}

/// The sum of the transparent simple summands of `m`.
pub fn transparent_subobject(b: &FusionData, m: &MultObject) -> Result<SubObject> {
    let mut basis = Vec::with_capacity(b.n());
    for s in 0..b.n() {
        let k = m.mult(s);
        basis.push(if k > 0 && b.is_transparent(s)? {
            Matrix::identity(k)
        } else {
            Matrix::zeros(k, 0)
        });
    }
    Ok(SubObject::new(m.clone(), basis))
}

/// The equalizer of the two composites `hom(x, y) -> hom(x z, z y)` over all simple `z`.
pub fn center_hom<C: Semisimple>(c: &C, hx: &HalfBraiding<C::Obj>, hy: &HalfBraiding<C::Obj>) -> SubObject {
    let simples = c.simple_objects();
    let (x, y) = (&hx.object, &hy.object);
    let h = c.hom(x, y);
    let t = |a: &C::Obj, b: &C::Obj| c.tensor_obj(a, b);
    let diffs: Vec<BlockMorphism> = simples
        .par_iter()
        .enumerate()
        .map(|(i, z)| {
            let (xz, zx, zy, yz) = (t(x, z), t(z, x), t(z, y), t(y, z));
            let d1 = precompose(c, &hx.components[i], &xz, &zx, &zy).compose(&left_whisker(c, z, x, y));
            let d2 = postcompose(c, &hy.components[i], &xz, &yz, &zy).compose(&right_whisker(c, z, x, y));
            d1.sub(&d2)
        })
        .collect();
    let basis = (0..h.n_simples())
        .map(|s| {
            let stacked = diffs
                .iter()
                .map(|d| d.block(s).clone())
                .reduce(|a, b| a.vstack(&b))
                .unwrap_or_else(|| Matrix::zeros(0, h.mult(s)));
            stacked.kernel()
        })
        .collect();
    SubObject::new(h, basis)
}
