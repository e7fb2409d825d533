use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use super::{EnrichedCategory, EnrichedMonoidal, Semisimple, Summand};
use crate::basecat::{BlockMorphism, FusionData, MultObject};
use crate::error::Result;

type Key3 = (MultObject, MultObject, MultObject);
type Key4 = (MultObject, MultObject, MultObject, MultObject);

/// A braided fusion category enriched over itself: `hom(x, y) = y (x) x*`.
pub struct SelfEnriched {
    base: Arc<FusionData>,
    comp_cache: RwLock<HashMap<Key3, BlockMorphism>>,
    tensorator_cache: RwLock<HashMap<Key4, BlockMorphism>>,
}

fn cached<K: std::hash::Hash + Eq + Clone>(
    cache: &RwLock<HashMap<K, BlockMorphism>>,
    key: K,
    build: impl FnOnce() -> BlockMorphism,
) -> BlockMorphism {
    if let Some(m) = cache.read().unwrap().get(&key) {
        return m.clone();
    }
    let m = build();
    cache.write().unwrap().insert(key, m.clone());
    m
}

impl SelfEnriched {
    pub fn new(base: Arc<FusionData>) -> Result<Self> {
        base.require_braided()?;
        Ok(SelfEnriched {
            base,
            comp_cache: RwLock::default(),
            tensorator_cache: RwLock::default(),
        })
    }

    pub fn base_arc(&self) -> &Arc<FusionData> {
        &self.base
    }

    /// The object given by a simple label.
    pub fn simple(&self, a: usize) -> MultObject {
        self.base.simple_object(a)
    }

    /// `(f (x) 1) . cup: 1 -> b (x) a*` for `f: a -> b`.
    pub fn name(&self, f: &BlockMorphism) -> BlockMorphism {
        let b = &*self.base;
        let a = f.source();
        let a_dual = b.dual_object(a);
        b.tensor_mor(f, &BlockMorphism::identity(&a_dual)).compose(&b.cup(a))
    }

    /// Inverse of [`SelfEnriched::name`] for an element `v: 1 -> c (x) a*`.
    pub fn unname(&self, a: &MultObject, c: &MultObject, v: &BlockMorphism) -> BlockMorphism {
        let b = &*self.base;
        let a_dual = b.dual_object(a);
        b.runit(c)
            .compose(&b.tensor_mor(&BlockMorphism::identity(c), &b.cap(a)))
            .compose(&b.assoc(c, &a_dual, a))
            .compose(&b.tensor_mor(v, &BlockMorphism::identity(a)))
            .compose(&b.lunit_inv(a))
    }
}

impl EnrichedCategory for SelfEnriched {
    type Obj = MultObject;

    fn base(&self) -> &FusionData {
        &self.base
    }

    fn hom(&self, x: &MultObject, y: &MultObject) -> MultObject {
        self.base.tensor(y, &self.base.dual_object(x))
    }

    fn ident(&self, x: &MultObject) -> BlockMorphism {
        self.base.cup(x)
    }

    fn comp(&self, x: &MultObject, y: &MultObject, z: &MultObject) -> BlockMorphism {
        cached(&self.comp_cache, (x.clone(), y.clone(), z.clone()), || {
            let b = &*self.base;
            let (xd, yd) = (b.dual_object(x), b.dual_object(y));
            let idz = BlockMorphism::identity(z);
            let yxd = b.tensor(y, &xd);
            b.tensor_mor(&idz, &b.lunit(&xd))
                .compose(&b.tensor_mor(
                    &idz,
                    &b.tensor_mor(&b.cap(y), &BlockMorphism::identity(&xd)),
                ))
                .compose(&b.tensor_mor(&idz, &b.assoc_inv(&yd, y, &xd)))
                .compose(&b.assoc(z, &yd, &yxd))
        })
    }

    fn obj_label(&self, x: &MultObject) -> String {
        super::object_label(&self.base, x)
    }
}

impl SelfEnriched {
    /// `(y* x*) (x y) -> 1`.
    fn pair_cap(&self, x: &MultObject, y: &MultObject) -> BlockMorphism {
        let b = &*self.base;
        let (xd, yd) = (b.dual_object(x), b.dual_object(y));
        let idyd = BlockMorphism::identity(&yd);
        b.cap(y)
            .compose(&b.tensor_mor(&idyd, &b.lunit(y)))
            .compose(&b.tensor_mor(
                &idyd,
                &b.tensor_mor(&b.cap(x), &BlockMorphism::identity(y)),
            ))
            .compose(&b.tensor_mor(&idyd, &b.assoc_inv(&xd, x, y)))
            .compose(&b.assoc(&yd, &xd, &b.tensor(x, y)))
    }

    /// `y* x* -> (x y)*`.
    fn dual_of_tensor(&self, x: &MultObject, y: &MultObject) -> BlockMorphism {
        let b = &*self.base;
        let xy = b.tensor(x, y);
        let w = b.dual_object(&xy);
        let ydxd = b.tensor(&b.dual_object(y), &b.dual_object(x));
        b.lunit(&w)
            .compose(&b.tensor_mor(&self.pair_cap(x, y), &BlockMorphism::identity(&w)))
            .compose(&b.assoc_inv(&ydxd, &xy, &w))
            .compose(&b.tensor_mor(&BlockMorphism::identity(&ydxd), &b.cup(&xy)))
            .compose(&b.runit_inv(&ydxd))
    }
}

impl EnrichedMonoidal for SelfEnriched {
    fn unit_object(&self) -> MultObject {
        self.base.unit_object()
    }

    fn tensor_obj(&self, x: &MultObject, y: &MultObject) -> MultObject {
        self.base.tensor(x, y)
    }

    fn tensorator(&self, x: &MultObject, y: &MultObject, x2: &MultObject, y2: &MultObject) -> BlockMorphism {
        let key = (x.clone(), y.clone(), x2.clone(), y2.clone());
        cached(&self.tensorator_cache, key, || {
            let b = &*self.base;
            let (xd, yd) = (b.dual_object(x), b.dual_object(y));
            let y2yd = b.tensor(y2, &yd);
            let idx2 = BlockMorphism::identity(x2);
            let x2y2 = b.tensor(x2, y2);
            let ydxd = b.tensor(&yd, &xd);
            b.tensor_mor(&BlockMorphism::identity(&x2y2), &self.dual_of_tensor(x, y))
                .compose(&b.assoc_inv(x2, y2, &ydxd))
                .compose(&b.tensor_mor(&idx2, &b.assoc(y2, &yd, &xd)))
                .compose(&b.tensor_mor(&idx2, &b.braid(&xd, &y2yd)))
                .compose(&b.assoc(x2, &xd, &y2yd))
        })
    }

    fn associator(&self, x: &MultObject, y: &MultObject, z: &MultObject) -> BlockMorphism {
        self.name(&self.base.assoc(x, y, z))
    }

    fn associator_inv(&self, x: &MultObject, y: &MultObject, z: &MultObject) -> BlockMorphism {
        self.name(&self.base.assoc_inv(x, y, z))
    }

    fn lunitor(&self, x: &MultObject) -> BlockMorphism {
        self.name(&self.base.lunit(x))
    }

    fn lunitor_inv(&self, x: &MultObject) -> BlockMorphism {
        self.name(&self.base.lunit_inv(x))
    }

    fn runitor(&self, x: &MultObject) -> BlockMorphism {
        self.name(&self.base.runit(x))
    }

    fn runitor_inv(&self, x: &MultObject) -> BlockMorphism {
        self.name(&self.base.runit_inv(x))
    }
}

impl Semisimple for SelfEnriched {
    fn simple_objects(&self) -> Vec<MultObject> {
        (0..self.base.n()).map(|a| self.simple(a)).collect()
    }

    fn decompose(&self, x: &MultObject) -> Vec<Summand<MultObject>> {
        x.summands()
            .into_iter()
            .map(|(a, k)| Summand {
                simple: self.simple(a),
                inclusion: self.name(&self.base.inclusion(x, a, k)),
                projection: self.name(&self.base.projection(x, a, k)),
            })
            .collect()
    }
}
