use std::marker::PhantomData;
use std::sync::Arc;

use super::verify::{verify_functor, Report};
use super::{EnrichedCategory, EnrichedMonoidal, Product};
use crate::basecat::BlockMorphism;
use crate::error::{Error, Result};

pub trait EnrichedFunctor: Send + Sync {
    type Source: EnrichedCategory;
    type Target: EnrichedCategory;

    fn source(&self) -> &Self::Source;
    fn target(&self) -> &Self::Target;

    fn on_object(
        &self,
        x: &<Self::Source as EnrichedCategory>::Obj,
    ) -> <Self::Target as EnrichedCategory>::Obj;

    /// `hom(x, y) -> hom(F x, F y)`.
    fn on_hom(
        &self,
        x: &<Self::Source as EnrichedCategory>::Obj,
        y: &<Self::Source as EnrichedCategory>::Obj,
    ) -> BlockMorphism;
}

pub struct IdentityFunctor<C> {
    cat: Arc<C>,
}

impl<C> IdentityFunctor<C> {
    pub fn new(cat: Arc<C>) -> Self {
        IdentityFunctor { cat }
    }
}

impl<C: EnrichedCategory> EnrichedFunctor for IdentityFunctor<C> {
    type Source = C;
    type Target = C;

    fn source(&self) -> &C {
        &self.cat
    }

    fn target(&self) -> &C {
        &self.cat
    }

    fn on_object(&self, x: &C::Obj) -> C::Obj {
        x.clone()
    }

    fn on_hom(&self, x: &C::Obj, y: &C::Obj) -> BlockMorphism {
        BlockMorphism::identity(&self.cat.hom(x, y))
    }
}

/// The tensor product `C x C -> C` of an enriched monoidal category.
pub struct TensorFunctor<C> {
    product: Product<C, C>,
    cat: Arc<C>,
}

impl<C: EnrichedMonoidal> TensorFunctor<C> {
    pub fn new(cat: Arc<C>) -> Self {
        TensorFunctor {
            product: Product::new(cat.clone(), cat.clone()),
            cat,
        }
    }
}

impl<C: EnrichedMonoidal> EnrichedFunctor for TensorFunctor<C> {
    type Source = Product<C, C>;
    type Target = C;

    fn source(&self) -> &Product<C, C> {
        &self.product
    }

    fn target(&self) -> &C {
        &self.cat
    }

    fn on_object(&self, x: &(C::Obj, C::Obj)) -> C::Obj {
        self.cat.tensor_obj(&x.0, &x.1)
    }

    fn on_hom(&self, x: &(C::Obj, C::Obj), y: &(C::Obj, C::Obj)) -> BlockMorphism {
        self.cat.tensorator(&x.0, &x.1, &y.0, &y.1)
    }
}

/// `F^rev(y, x) = F(x, y)`, acting on homs by `F . c_{D(y, y'), C(x, x')}`.
pub struct Reversed<C, D, F> {
    inner: F,
    source: Product<D, C>,
    _marker: PhantomData<fn() -> C>,
}

impl<C, D, F> Reversed<C, D, F>
where
    C: EnrichedCategory,
    D: EnrichedCategory,
    F: EnrichedFunctor<Source = Product<C, D>>,
{
    /// Builds the reversal without checking functoriality.
    pub fn new_unchecked(inner: F) -> Self {
        let source = Product::new(inner.source().right().clone(), inner.source().left().clone());
        Reversed {
            inner,
            source,
            _marker: PhantomData,
        }
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }
}

impl<C, D, F> EnrichedFunctor for Reversed<C, D, F>
where
    C: EnrichedCategory,
    D: EnrichedCategory,
    F: EnrichedFunctor<Source = Product<C, D>>,
{
    type Source = Product<D, C>;
    type Target = F::Target;

    fn source(&self) -> &Product<D, C> {
        &self.source
    }

    fn target(&self) -> &F::Target {
        self.inner.target()
    }

    fn on_object(&self, x: &(D::Obj, C::Obj)) -> <F::Target as EnrichedCategory>::Obj {
        self.inner.on_object(&(x.1.clone(), x.0.clone()))
    }

    fn on_hom(&self, x: &(D::Obj, C::Obj), y: &(D::Obj, C::Obj)) -> BlockMorphism {
        let p = self.inner.source();
        let hc = p.left().hom(&x.1, &y.1);
        let hd = p.right().hom(&x.0, &y.0);
        self.inner
            .on_hom(&(x.1.clone(), x.0.clone()), &(y.1.clone(), y.0.clone()))
            .compose(&p.base().braid(&hd, &hc))
    }
}

/// Checks `F . c_{D,C} . c_{C,D} = F` on every hom between the given objects.
pub fn is_commutative<C, D, F>(f: &F, xs: &[C::Obj], ys: &[D::Obj]) -> Report
where
    C: EnrichedCategory,
    D: EnrichedCategory,
    F: EnrichedFunctor<Source = Product<C, D>>,
{
    let p = f.source();
    let b = p.base();
    let mut rep = Report::default();
    for x in xs {
        for x2 in xs {
            for y in ys {
                for y2 in ys {
                    let hc = p.left().hom(x, x2);
                    let hd = p.right().hom(y, y2);
                    let (s, t) = ((x.clone(), y.clone()), (x2.clone(), y2.clone()));
                    let g = f.on_hom(&s, &t);
                    let twice = g.compose(&b.braid(&hd, &hc)).compose(&b.braid(&hc, &hd));
                    rep.check(twice == g, || {
                        format!(
                            "commutativity at {} -> {}",
                            p.obj_label(&s),
                            p.obj_label(&t)
                        )
                    });
                }
            }
        }
    }
    rep
}

/// The reversed functor, after verifying it is an enriched functor on the given objects.
pub fn reverse<C, D, F>(f: F, xs: &[C::Obj], ys: &[D::Obj]) -> Result<Reversed<C, D, F>>
where
    C: EnrichedCategory,
    D: EnrichedCategory,
    F: EnrichedFunctor<Source = Product<C, D>>,
{
    let r = Reversed::new_unchecked(f);
    let objs: Vec<(D::Obj, C::Obj)> = ys
        .iter()
        .flat_map(|y| xs.iter().map(move |x| (y.clone(), x.clone())))
        .collect();
    let rep = verify_functor(&r, &objs);
    if let Some(first) = rep.failures.first() {
        return Err(Error::Axiom(format!("reversed functor: {first}")));
    }
    Ok(r)
}
