use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use super::functor::CentralFunctor;
use super::plain::extend;
use crate::basecat::{BlockMorphism, FusionData, MultObject, TensorLayout};
use crate::enriched::{object_label, EnrichedCategory, EnrichedMonoidal, Semisimple, Summand};
use crate::error::{Error, Result};
use crate::scalar::CycScalar;

/// `[x, y]` with its counit `phi[x, y] (x) x -> y` and the units `w -> [x, phi(w) (x) x]`.
#[derive(Clone, Debug)]
pub struct InternalHom {
    pub x: MultObject,
    pub y: MultObject,
    /// An object of the source category.
    pub value: MultObject,
    /// One unit per simple `w` of the source.
    pub unit: Vec<BlockMorphism>,
    pub counit: BlockMorphism,
}

/// Basis of `[x, y]`: for each simple `w`, the matrix units `(s, r, b, j)` of
/// `Hom_C(phi(w) (x) x, y)`, sending the basis vector `(phi(w), b_j; s)` to copy `r` of `s`.
#[derive(Clone, Debug)]
struct HomData {
    value: MultObject,
    units: Vec<Vec<(usize, usize, usize, usize)>>,
}

type Key2 = (MultObject, MultObject);
type Key3 = (MultObject, MultObject, MultObject);
type Key4 = (MultObject, MultObject, MultObject, MultObject);

/// The category `C` enriched over `B` through the internal homs of a central functor.
pub struct CanonicalEnriched {
    psi: Arc<CentralFunctor>,
    homs: RwLock<HashMap<Key2, Arc<HomData>>>,
    comp_cache: RwLock<HashMap<Key3, BlockMorphism>>,
    tensorator_cache: RwLock<HashMap<Key4, BlockMorphism>>,
}

fn cached<K: std::hash::Hash + Eq, V: Clone>(cache: &RwLock<HashMap<K, V>>, key: K, build: impl FnOnce() -> V) -> V {
    if let Some(v) = cache.read().unwrap().get(&key) {
        return v.clone();
    }
    let v = build();
    cache.write().unwrap().insert(key, v.clone());
    v
}

impl CanonicalEnriched {
    pub fn new(psi: Arc<CentralFunctor>) -> Self {
        CanonicalEnriched {
            psi,
            homs: RwLock::default(),
            comp_cache: RwLock::default(),
            tensorator_cache: RwLock::default(),
        }
    }

    pub fn functor(&self) -> &Arc<CentralFunctor> {
        &self.psi
    }

    fn source(&self) -> &FusionData {
        self.psi.source()
    }

    fn target(&self) -> &FusionData {
        self.psi.target()
    }

    fn hom_data(&self, x: &MultObject, y: &MultObject) -> Arc<HomData> {
        cached(&self.homs, (x.clone(), y.clone()), || {
            let (b, c) = (self.source(), self.target());
            let mut units = Vec::with_capacity(b.n());
            for w in 0..b.n() {
                let small = TensorLayout::new(c, &c.simple_object(self.psi.on_object(w)), x);
                let mut list = Vec::new();
                for s in 0..c.n() {
                    for r in 0..y.mult(s) {
                        for &(_, _, bb, j) in &small.basis[s] {
                            list.push((s, r, bb, j));
                        }
                    }
                }
                units.push(list);
            }
            let value = MultObject::from_mults(units.iter().map(Vec::len).collect());
            Arc::new(HomData { value, units })
        })
    }

    /// The counit `phi[x, y] (x) x -> y`.
    pub fn counit(&self, x: &MultObject, y: &MultObject) -> BlockMorphism {
        let c = self.target();
        let h = self.hom_data(x, y);
        let big = TensorLayout::new(c, &self.psi.map_object(&h.value), x);
        let mut out = BlockMorphism::zero(&big.object(), y);
        for (w, list) in h.units.iter().enumerate() {
            let a = self.psi.on_object(w);
            for (k, &(s, r, bb, j)) in list.iter().enumerate() {
                out.set_entry(s, r, big.pos(a, k, bb, j, s), CycScalar::one());
            }
        }
        out
    }

    /// The mate `w -> [x, y]` of `f: phi(w) (x) x -> y`, for any object `w` of the source.
    pub fn transpose(&self, w: &MultObject, x: &MultObject, y: &MultObject, f: &BlockMorphism) -> BlockMorphism {
        let c = self.target();
        let h = self.hom_data(x, y);
        let big = TensorLayout::new(c, &self.psi.map_object(w), x);
        assert_eq!(f.source(), &big.object(), "transpose: source must be phi(w) (x) x");
        let mut g = BlockMorphism::zero(w, &h.value);
        for (v, list) in h.units.iter().enumerate() {
            let a = self.psi.on_object(v);
            for i in 0..w.mult(v) {
                for (k, &(s, r, bb, j)) in list.iter().enumerate() {
                    let e = f.entry(s, r, big.pos(a, i, bb, j, s));
                    if !e.is_zero() {
                        g.set_entry(v, k, i, e.clone());
                    }
                }
            }
        }
        g
    }

    /// The basis element `k` of `Hom_C(phi(w) (x) x, y)`, for a simple `w`.
    fn element(&self, x: &MultObject, y: &MultObject, w: usize, k: usize) -> BlockMorphism {
        let c = self.target();
        let a = self.psi.on_object(w);
        let small = TensorLayout::new(c, &c.simple_object(a), x);
        let (s, r, bb, j) = self.hom_data(x, y).units[w][k];
        let mut m = BlockMorphism::zero(&small.object(), y);
        m.set_entry(s, r, small.pos(a, 0, bb, j, s), CycScalar::one());
        m
    }

    /// A morphism `h1 (x) h2 -> h` of the source, given on each simple summand
    /// `u -> w1_k (x) w2_l` by a morphism `u -> h`.
    fn by_columns(
        &self,
        h1: &MultObject,
        h2: &MultObject,
        h: &MultObject,
        column: impl Fn(usize, usize, usize, usize, usize) -> BlockMorphism + Sync,
    ) -> BlockMorphism {
        let b = self.source();
        let layout = TensorLayout::new(b, h1, h2);
        let mut out = BlockMorphism::zero(&layout.object(), h);
        let cols: Vec<(usize, usize, BlockMorphism)> = layout
            .basis
            .iter()
            .enumerate()
            .flat_map(|(u, basis)| basis.iter().enumerate().map(move |(i, &t)| (u, i, t)))
            .collect::<Vec<_>>()
            .into_par_iter()
            .map(|(u, i, (w1, k, w2, l))| (u, i, column(w1, k, w2, l, u)))
            .collect();
        for (u, i, col) in cols {
            let blk = col.block(u);
            for r in 0..blk.rows() {
                let v = blk.get(r, 0);
                if !v.is_zero() {
                    out.set_entry(u, r, i, v.clone());
                }
            }
        }
        out
    }

    /// `1 -> [a, b]` for a morphism `f: a -> b` of the target.
    pub fn name(&self, f: &BlockMorphism) -> BlockMorphism {
        let (b, c) = (self.source(), self.target());
        let a = f.source();
        self.transpose(&b.unit_object(), a, f.target(), &f.compose(&c.lunit(a)))
    }

    /// The target morphism `a -> y` named by `v: 1 -> [a, y]`.
    pub fn unname(&self, a: &MultObject, y: &MultObject, v: &BlockMorphism) -> BlockMorphism {
        let c = self.target();
        self.counit(a, y)
            .compose(&c.tensor_mor(&self.psi.map_morphism(v), &BlockMorphism::identity(a)))
            .compose(&c.lunit_inv(a))
    }

    /// The internal hom with its adjunction data, after checking both triangle identities and
    /// the dimension law.
    pub fn internal_hom(&self, x: &MultObject, y: &MultObject) -> Result<InternalHom> {
        let (b, c) = (self.source(), self.target());
        let value = self.hom_data(x, y).value.clone();
        let counit = self.counit(x, y);
        let mut unit = Vec::with_capacity(b.n());
        for w in 0..b.n() {
            let pw = c.simple_object(self.psi.on_object(w));
            let wx = c.tensor(&pw, x);
            let dim: usize = (0..c.n()).map(|s| wx.mult(s) * y.mult(s)).sum();
            if value.mult(w) != dim {
                return Err(Error::Consistency(format!(
                    "[x, y] has {} copies of {} but Hom(phi(w) x, y) has dimension {dim}",
                    value.mult(w),
                    b.label(w)
                )));
            }
            let wm = b.simple_object(w);
            let eta = self.transpose(&wm, x, &wx, &BlockMorphism::identity(&wx));
            let back = self
                .counit(x, &wx)
                .compose(&c.tensor_mor(&self.psi.map_morphism(&eta), &BlockMorphism::identity(x)));
            if !back.is_identity() {
                return Err(Error::Consistency(format!(
                    "first triangle identity fails at {}",
                    b.label(w)
                )));
            }
            unit.push(eta);
        }
        if !self.transpose(&value, x, y, &counit).is_identity() {
            return Err(Error::Consistency("second triangle identity fails".into()));
        }
        Ok(InternalHom {
            x: x.clone(),
            y: y.clone(),
            value,
            unit,
            counit,
        })
    }
}

/// Internal homs of the target of `psi`.
pub fn internal_hom(psi: &Arc<CentralFunctor>, x: &MultObject, y: &MultObject) -> Result<InternalHom> {
    CanonicalEnriched::new(psi.clone()).internal_hom(x, y)
}

/// The monoidal category `C` enriched over `B` with `hom(x, y) = [x, y]`.
pub fn canonical_enrich(psi: Arc<CentralFunctor>) -> Arc<CanonicalEnriched> {
    Arc::new(CanonicalEnriched::new(psi))
}

impl EnrichedCategory for CanonicalEnriched {
    type Obj = MultObject;

    fn base(&self) -> &FusionData {
        self.source()
    }

    fn hom(&self, x: &MultObject, y: &MultObject) -> MultObject {
        self.hom_data(x, y).value.clone()
    }

    fn ident(&self, x: &MultObject) -> BlockMorphism {
        self.name(&BlockMorphism::identity(x))
    }

    fn comp(&self, x: &MultObject, y: &MultObject, z: &MultObject) -> BlockMorphism {
        cached(&self.comp_cache, (x.clone(), y.clone(), z.clone()), || {
            let c = self.target();
            self.by_columns(&self.hom(y, z), &self.hom(x, y), &self.hom(x, z), |w1, k, w2, l, u| {
                let (a1, a2) = (self.psi.on_object(w1), self.psi.on_object(w2));
                let (p1, p2) = (c.simple_object(a1), c.simple_object(a2));
                let inc = c.inclusion(&c.tensor(&p1, &p2), self.psi.on_object(u), 0);
                let f = self
                    .element(y, z, w1, k)
                    .compose(&c.tensor_mor(&BlockMorphism::identity(&p1), &self.element(x, y, w2, l)))
                    .compose(&c.assoc(&p1, &p2, x))
                    .compose(&c.tensor_mor(&inc, &BlockMorphism::identity(x)));
                self.transpose(&self.source().simple_object(u), x, z, &f)
            })
        })
    }

    fn obj_label(&self, x: &MultObject) -> String {
        object_label(self.target(), x)
    }
}

impl EnrichedMonoidal for CanonicalEnriched {
    fn unit_object(&self) -> MultObject {
        self.target().unit_object()
    }

    fn tensor_obj(&self, x: &MultObject, y: &MultObject) -> MultObject {
        self.target().tensor(x, y)
    }

    fn tensorator(&self, x: &MultObject, y: &MultObject, x2: &MultObject, y2: &MultObject) -> BlockMorphism {
        let key = (x.clone(), y.clone(), x2.clone(), y2.clone());
        cached(&self.tensorator_cache, key, || {
            let c = self.target();
            let (xy, xy2) = (c.tensor(x, y), c.tensor(x2, y2));
            let iy = BlockMorphism::identity(y);
            self.by_columns(&self.hom(x, x2), &self.hom(y, y2), &self.hom(&xy, &xy2), |w1, k, w2, l, u| {
                let (a1, a2) = (self.psi.on_object(w1), self.psi.on_object(w2));
                let (p1, p2) = (c.simple_object(a1), c.simple_object(a2));
                let ip = BlockMorphism::identity(&p1);
                let inc = c.inclusion(&c.tensor(&p1, &p2), self.psi.on_object(u), 0);
                let f = c
                    .tensor_mor(&self.element(x, x2, w1, k), &self.element(y, y2, w2, l))
                    .compose(&c.assoc_inv(&p1, x, &c.tensor(&p2, y)))
                    .compose(&c.tensor_mor(&ip, &c.assoc(x, &p2, y)))
                    .compose(&c.tensor_mor(&ip, &c.tensor_mor(&extend(c, &p2, self.psi.half_braiding(w2), x), &iy)))
                    .compose(&c.tensor_mor(&ip, &c.assoc_inv(&p2, x, y)))
                    .compose(&c.assoc(&p1, &p2, &xy))
                    .compose(&c.tensor_mor(&inc, &BlockMorphism::identity(&xy)));
                self.transpose(&self.source().simple_object(u), &xy, &xy2, &f)
            })
        })
    }

    fn associator(&self, x: &MultObject, y: &MultObject, z: &MultObject) -> BlockMorphism {
        self.name(&self.target().assoc(x, y, z))
    }

    fn associator_inv(&self, x: &MultObject, y: &MultObject, z: &MultObject) -> BlockMorphism {
        self.name(&self.target().assoc_inv(x, y, z))
    }

    fn lunitor(&self, x: &MultObject) -> BlockMorphism {
        self.name(&self.target().lunit(x))
    }

    fn lunitor_inv(&self, x: &MultObject) -> BlockMorphism {
        self.name(&self.target().lunit_inv(x))
    }

    fn runitor(&self, x: &MultObject) -> BlockMorphism {
        self.name(&self.target().runit(x))
    }

    fn runitor_inv(&self, x: &MultObject) -> BlockMorphism {
        self.name(&self.target().runit_inv(x))
    }
}

impl Semisimple for CanonicalEnriched {
    fn simple_objects(&self) -> Vec<MultObject> {
        let c = self.target();
        (0..c.n()).map(|a| c.simple_object(a)).collect()
    }

    fn decompose(&self, x: &MultObject) -> Vec<Summand<MultObject>> {
        let c = self.target();
        x.summands()
            .into_iter()
            .map(|(a, k)| Summand {
                simple: c.simple_object(a),
                inclusion: self.name(&c.inclusion(x, a, k)),
                projection: self.name(&c.projection(x, a, k)),
            })
            .collect()
    }
}
