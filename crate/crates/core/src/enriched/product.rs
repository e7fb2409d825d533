use std::sync::Arc;

use super::{unit_split, EnrichedCategory};
use crate::basecat::{BlockMorphism, FusionData, MultObject};

/// `C x D` with `hom((x, y), (x', y')) = C(x, x') (x) D(y, y')`.
pub struct Product<C, D> {
    left: Arc<C>,
    right: Arc<D>,
}

impl<C: EnrichedCategory, D: EnrichedCategory> Product<C, D> {
    pub fn new(left: Arc<C>, right: Arc<D>) -> Self {
        assert!(
            left.base() == right.base(),
            "product factors must be enriched over the same base"
        );
        Product { left, right }
    }

    pub fn left(&self) -> &Arc<C> {
        &self.left
    }

    pub fn right(&self) -> &Arc<D> {
        &self.right
    }
}

/// `(a' b') (a b) -> (a' a) (b' b)` using the inverse braiding of `a` past `b'`.
pub fn middle_swap(
    base: &FusionData,
    a2: &MultObject,
    b2: &MultObject,
    a: &MultObject,
    b: &MultObject,
) -> BlockMorphism {
    let ida2 = BlockMorphism::identity(a2);
    let idb = BlockMorphism::identity(b);
    let ab = base.tensor(a, b);
    let b2b = base.tensor(b2, b);
    base.assoc_inv(a2, a, &b2b)
        .compose(&base.tensor_mor(&ida2, &base.assoc(a, b2, b)))
        .compose(&base.tensor_mor(&ida2, &base.tensor_mor(&base.braid_inv(a, b2), &idb)))
        .compose(&base.tensor_mor(&ida2, &base.assoc_inv(b2, a, b)))
        .compose(&base.assoc(a2, b2, &ab))
}

impl<C: EnrichedCategory, D: EnrichedCategory> EnrichedCategory for Product<C, D> {
    type Obj = (C::Obj, D::Obj);

    fn base(&self) -> &FusionData {
        self.left.base()
    }

    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> MultObject {
        self.base()
            .tensor(&self.left.hom(&x.0, &y.0), &self.right.hom(&x.1, &y.1))
    }

    fn ident(&self, x: &Self::Obj) -> BlockMorphism {
        let b = self.base();
        b.tensor_mor(&self.left.ident(&x.0), &self.right.ident(&x.1))
            .compose(&unit_split(b))
    }

    fn comp(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> BlockMorphism {
        let b = self.base();
        let a2 = self.left.hom(&y.0, &z.0);
        let b2 = self.right.hom(&y.1, &z.1);
        let a = self.left.hom(&x.0, &y.0);
        let bb = self.right.hom(&x.1, &y.1);
        b.tensor_mor(
            &self.left.comp(&x.0, &y.0, &z.0),
            &self.right.comp(&x.1, &y.1, &z.1),
        )
        .compose(&middle_swap(b, &a2, &b2, &a, &bb))
    }

    fn obj_label(&self, x: &Self::Obj) -> String {
        format!("({}, {})", self.left.obj_label(&x.0), self.right.obj_label(&x.1))
    }
}
