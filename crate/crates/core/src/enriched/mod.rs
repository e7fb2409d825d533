//! Categories enriched over a braided fusion category.
//!
//! An underlying morphism `x -> y` is stored as a base morphism `1 -> hom(x, y)`.

mod functor;
mod product;
mod selfenrich;
mod single;
mod table;
mod verify;

use std::fmt::Debug;
use std::hash::Hash;

pub use functor::{
    is_commutative, reverse, EnrichedFunctor, IdentityFunctor, Reversed, TensorFunctor,
};
pub use product::Product;
pub use selfenrich::SelfEnriched;
pub use single::{Algebra, SingleObject};
pub use table::EnrichedTable;
pub use verify::{
    verify_category, verify_functor, verify_monoidal, verify_natural, Report,
};

use crate::basecat::{BlockMorphism, FusionData, MultObject};
use crate::linalg::Matrix;
use crate::scalar::CycScalar;

pub trait ObjKey: Clone + Eq + Hash + Debug + Send + Sync {}
impl<T: Clone + Eq + Hash + Debug + Send + Sync> ObjKey for T {}

pub trait EnrichedCategory: Send + Sync {
    type Obj: ObjKey;

    fn base(&self) -> &FusionData;

    fn hom(&self, x: &Self::Obj, y: &Self::Obj) -> MultObject;

    /// `1 -> hom(x, x)`.
    fn ident(&self, x: &Self::Obj) -> BlockMorphism;

    /// `hom(y, z) (x) hom(x, y) -> hom(x, z)`.
    fn comp(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> BlockMorphism;

    fn obj_label(&self, x: &Self::Obj) -> String {
        format!("{x:?}")
    }
}

pub trait EnrichedMonoidal: EnrichedCategory {
    fn unit_object(&self) -> Self::Obj;

    fn tensor_obj(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;

    /// `hom(x, x') (x) hom(y, y') -> hom(x y, x' y')`.
    fn tensorator(&self, x: &Self::Obj, y: &Self::Obj, x2: &Self::Obj, y2: &Self::Obj)
        -> BlockMorphism;

    /// Underlying `(x y) z -> x (y z)`.
    fn associator(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> BlockMorphism;
    fn associator_inv(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> BlockMorphism;
    /// Underlying `1 x -> x`.
    fn lunitor(&self, x: &Self::Obj) -> BlockMorphism;
    fn lunitor_inv(&self, x: &Self::Obj) -> BlockMorphism;
    /// Underlying `x 1 -> x`.
    fn runitor(&self, x: &Self::Obj) -> BlockMorphism;
    fn runitor_inv(&self, x: &Self::Obj) -> BlockMorphism;
}

/// `"a+2*b"` style label of a semisimple object.
pub fn object_label(b: &FusionData, x: &MultObject) -> String {
    let parts: Vec<String> = x
        .support()
        .into_iter()
        .map(|a| match x.mult(a) {
            1 => b.label(a).to_string(),
            m => format!("{m}*{}", b.label(a)),
        })
        .collect();
    if parts.is_empty() {
        "zero".into()
    } else {
        parts.join("+")
    }
}

/// A simple summand of an object with underlying inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand<O> {
    pub simple: O,
    pub inclusion: BlockMorphism,
    pub projection: BlockMorphism,
}

/// Enriched monoidal categories whose objects split into finitely many simple test objects.
pub trait Semisimple: EnrichedMonoidal {
    fn simple_objects(&self) -> Vec<Self::Obj>;

    /// Simple summands whose inclusions and projections give a direct sum decomposition.
    fn decompose(&self, x: &Self::Obj) -> Vec<Summand<Self::Obj>>;
}

/// `1 -> 1 (x) 1`.
pub fn unit_split(b: &FusionData) -> BlockMorphism {
    b.lunit_inv(&b.unit_object())
}

/// Basis of the underlying hom space `C(x, y)`: unit vectors of the unit block.
pub fn underlying_basis<C: EnrichedCategory + ?Sized>(c: &C, x: &C::Obj, y: &C::Obj) -> Vec<BlockMorphism> {
    let b = c.base();
    let h = c.hom(x, y);
    let u = b.unit();
    (0..h.mult(u))
        .map(|k| {
            let mut m = BlockMorphism::zero(&b.unit_object(), &h);
            m.set_entry(u, k, 0, CycScalar::one());
            m
        })
        .collect()
}

pub fn underlying_dim<C: EnrichedCategory + ?Sized>(c: &C, x: &C::Obj, y: &C::Obj) -> usize {
    c.hom(x, y).mult(c.base().unit())
}

/// `g . f` in the underlying category.
pub fn under_compose<C: EnrichedCategory + ?Sized>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
    z: &C::Obj,
    g: &BlockMorphism,
    f: &BlockMorphism,
) -> BlockMorphism {
    let b = c.base();
    c.comp(x, y, z).compose(&b.tensor_mor(g, f)).compose(&unit_split(b))
}

/// `f (x) g` in the underlying category, for `f: x -> x2`, `g: y -> y2`.
pub fn under_tensor<C: EnrichedMonoidal + ?Sized>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
    x2: &C::Obj,
    y2: &C::Obj,
    f: &BlockMorphism,
    g: &BlockMorphism,
) -> BlockMorphism {
    let b = c.base();
    c.tensorator(x, y, x2, y2)
        .compose(&b.tensor_mor(f, g))
        .compose(&unit_split(b))
}

/// `- . f: hom(y, z) -> hom(x, z)` for an underlying `f: x -> y`.
pub fn precompose<C: EnrichedCategory + ?Sized>(
    c: &C,
    f: &BlockMorphism,
    x: &C::Obj,
    y: &C::Obj,
    z: &C::Obj,
) -> BlockMorphism {
    let b = c.base();
    let h = c.hom(y, z);
    c.comp(x, y, z)
        .compose(&b.tensor_mor(&BlockMorphism::identity(&h), f))
        .compose(&b.runit_inv(&h))
}

/// `g . -: hom(x, y) -> hom(x, z)` for an underlying `g: y -> z`.
pub fn postcompose<C: EnrichedCategory + ?Sized>(
    c: &C,
    g: &BlockMorphism,
    x: &C::Obj,
    y: &C::Obj,
    z: &C::Obj,
) -> BlockMorphism {
    let b = c.base();
    let h = c.hom(x, y);
    c.comp(x, y, z)
        .compose(&b.tensor_mor(g, &BlockMorphism::identity(&h)))
        .compose(&b.lunit_inv(&h))
}

/// `z (x) -: hom(x, y) -> hom(z x, z y)`.
pub fn left_whisker<C: EnrichedMonoidal + ?Sized>(
    c: &C,
    z: &C::Obj,
    x: &C::Obj,
    y: &C::Obj,
) -> BlockMorphism {
    let b = c.base();
    let h = c.hom(x, y);
    c.tensorator(z, x, z, y)
        .compose(&b.tensor_mor(&c.ident(z), &BlockMorphism::identity(&h)))
        .compose(&b.lunit_inv(&h))
}

/// `- (x) z: hom(x, y) -> hom(x z, y z)`.
pub fn right_whisker<C: EnrichedMonoidal + ?Sized>(
    c: &C,
    z: &C::Obj,
    x: &C::Obj,
    y: &C::Obj,
) -> BlockMorphism {
    let b = c.base();
    let h = c.hom(x, y);
    c.tensorator(x, z, y, z)
        .compose(&b.tensor_mor(&BlockMorphism::identity(&h), &c.ident(z)))
        .compose(&b.runit_inv(&h))
}

/// Underlying identity of `x` (x) identity of `y` tensored with an underlying morphism on the right.
pub fn id_tensor<C: EnrichedMonoidal + ?Sized>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
    y2: &C::Obj,
    g: &BlockMorphism,
) -> BlockMorphism {
    under_tensor(c, x, y, x, y2, &c.ident(x), g)
}

pub fn tensor_id<C: EnrichedMonoidal + ?Sized>(
    c: &C,
    x: &C::Obj,
    x2: &C::Obj,
    y: &C::Obj,
    f: &BlockMorphism,
) -> BlockMorphism {
    under_tensor(c, x, y, x2, y, f, &c.ident(y))
}

/// Inverse of an underlying morphism `f: x -> y`, if it exists.
pub fn underlying_inverse<C: EnrichedCategory + ?Sized>(
    c: &C,
    x: &C::Obj,
    y: &C::Obj,
    f: &BlockMorphism,
) -> Option<BlockMorphism> {
    let u = c.base().unit();
    let basis = underlying_basis(c, y, x);
    let target = c.ident(x).unit_column(u);
    if basis.is_empty() {
        return if target.iter().all(|v| v.is_zero()) && underlying_dim(c, y, y) == 0 {
            Some(BlockMorphism::zero(&c.base().unit_object(), &c.hom(y, x)))
        } else {
            None
        };
    }
    let cols: Vec<Vec<CycScalar>> = basis
        .iter()
        .map(|e| under_compose(c, x, y, x, e, f).unit_column(u))
        .collect();
    let m = Matrix::from_rows(
        (0..target.len())
            .map(|r| cols.iter().map(|col| col[r].clone()).collect())
            .collect(),
    );
    let sol = m.solve(&target)?;
    let mut g = BlockMorphism::zero(&c.base().unit_object(), &c.hom(y, x));
    for (k, v) in sol.into_iter().enumerate() {
        g.set_entry(u, k, 0, v);
    }
    // Two-sided check.
    if under_compose(c, y, x, y, f, &g) == c.ident(y) {
        Some(g)
    } else {
        None
    }
}
