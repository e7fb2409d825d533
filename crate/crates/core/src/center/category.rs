use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use rayon::prelude::*;

use super::{
    center_hom, component_at, tensor_half_braiding, unit_half_braiding, verify_half_braiding,
    HalfBraiding, SubObject,
};
use crate::basecat::{BlockMorphism, FusionData, MultObject};
use crate::enriched::{
    id_tensor, is_commutative, reverse, tensor_id, under_compose, verify_natural, EnrichedCategory,
    EnrichedFunctor, EnrichedMonoidal, Product, Report, Semisimple,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Formula {
    Given(usize),
    Unit,
    Tensor(usize, usize),
}

struct Entry<O> {
    hb: HalfBraiding<O>,
    label: String,
}

/// The Drinfeld center of an enriched monoidal category on a chosen set of half-braided
/// objects, closed under tensor products on demand. Objects are handles into an arena.
pub struct CenterCategory<C: Semisimple> {
    cat: Arc<C>,
    simples: Vec<C::Obj>,
    given: usize,
    arena: RwLock<Vec<Entry<C::Obj>>>,
    formulas: RwLock<HashMap<Formula, usize>>,
    subs: RwLock<HashMap<(usize, usize), Arc<SubObject>>>,
}

/// Builds the center on the given half-braided objects, verifying every half-braiding and that
/// identities, composition and the tensorator restrict to the center homs.
pub fn center_category<C: Semisimple>(
    cat: Arc<C>,
    objects: Vec<HalfBraiding<C::Obj>>,
) -> Result<Arc<CenterCategory<C>>> {
    for (i, hb) in objects.iter().enumerate() {
        let rep = verify_half_braiding(&*cat, hb);
        if let Some(f) = rep.failures.first() {
            return Err(Error::Axiom(format!(
                "half-braiding #{i} on {}: {f}",
                cat.obj_label(&hb.object)
            )));
        }
    }
    let simples = cat.simple_objects();
    let given = objects.len();
    let mut formulas = HashMap::new();
    let arena = objects
        .into_iter()
        .enumerate()
        .map(|(i, hb)| {
            formulas.insert(Formula::Given(i), i);
            let label = format!("{}#{i}", cat.obj_label(&hb.object));
            Entry { hb, label }
        })
        .collect();
    let z = Arc::new(CenterCategory {
        cat,
        simples,
        given,
        arena: RwLock::new(arena),
        formulas: RwLock::new(formulas),
        subs: RwLock::default(),
    });
    z.check_restrictions()?;
    Ok(z)
}

impl<C: Semisimple> CenterCategory<C> {
    pub fn ambient(&self) -> &Arc<C> {
        &self.cat
    }

    /// Handles of the objects supplied at construction.
    pub fn given_objects(&self) -> Vec<usize> {
        (0..self.given).collect()
    }

    pub fn half_braiding(&self, i: usize) -> HalfBraiding<C::Obj> {
        self.arena.read().unwrap()[i].hb.clone()
    }

    pub fn carrier(&self, i: usize) -> C::Obj {
        self.arena.read().unwrap()[i].hb.object.clone()
    }

    fn intern(&self, f: Formula, build: impl FnOnce() -> (HalfBraiding<C::Obj>, String)) -> usize {
        if let Some(&i) = self.formulas.read().unwrap().get(&f) {
            return i;
        }
        let (hb, label) = build();
        let mut formulas = self.formulas.write().unwrap();
        if let Some(&i) = formulas.get(&f) {
            return i;
        }
        let mut arena = self.arena.write().unwrap();
        arena.push(Entry { hb, label });
        let i = arena.len() - 1;
        formulas.insert(f, i);
        i
    }

    /// The center hom as a subobject of the ambient hom.
    pub fn sub(&self, i: usize, j: usize) -> Arc<SubObject> {
        if let Some(s) = self.subs.read().unwrap().get(&(i, j)) {
            return s.clone();
        }
        let s = Arc::new(center_hom(&*self.cat, &self.half_braiding(i), &self.half_braiding(j)));
        self.subs.write().unwrap().insert((i, j), s.clone());
        s
    }

    fn restrict(&self, i: usize, j: usize, f: &BlockMorphism) -> BlockMorphism {
        self.sub(i, j).projection().compose(f)
    }

    fn restrict_checked(&self, i: usize, j: usize, f: &BlockMorphism, what: impl FnOnce() -> String) -> Result<()> {
        match self.sub(i, j).factor(f) {
            Some(_) => Ok(()),
            None => Err(Error::Consistency(format!("{} does not factor through the center hom", what()))),
        }
    }

    fn check_restrictions(&self) -> Result<()> {
        let c = &*self.cat;
        let n = self.given;
        let b = c.base();
        for i in 0..n {
            self.restrict_checked(i, i, &c.ident(&self.carrier(i)), || format!("identity of {}", self.obj_label(&i)))?;
        }
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .collect();
        triples.par_iter().try_for_each(|&(i, j, k)| {
            let (x, y, z) = (self.carrier(i), self.carrier(j), self.carrier(k));
            let f = c
                .comp(&x, &y, &z)
                .compose(&b.tensor_mor(&self.sub(j, k).inclusion(), &self.sub(i, j).inclusion()));
            self.restrict_checked(i, k, &f, || {
                format!("composition at ({}, {}, {})", self.obj_label(&i), self.obj_label(&j), self.obj_label(&k))
            })
        })?;
        let quads: Vec<(usize, usize, usize, usize)> = triples
            .iter()
            .flat_map(|&(i, j, k)| (0..n).map(move |l| (i, j, k, l)))
            .collect();
        quads.par_iter().try_for_each(|&(i, j, i2, j2)| {
            let ij = self.tensor_obj(&i, &j);
            let ij2 = self.tensor_obj(&i2, &j2);
            let f = c
                .tensorator(&self.carrier(i), &self.carrier(j), &self.carrier(i2), &self.carrier(j2))
                .compose(&b.tensor_mor(&self.sub(i, i2).inclusion(), &self.sub(j, j2).inclusion()));
            self.restrict_checked(ij, ij2, &f, || {
                format!(
                    "tensorator at ({}, {}, {}, {})",
                    self.obj_label(&i),
                    self.obj_label(&j),
                    self.obj_label(&i2),
                    self.obj_label(&j2)
                )
            })
        })
    }

    /// Underlying braiding `i (x) j -> j (x) i` given by the half-braiding of `i`.
    pub fn braiding(&self, i: usize, j: usize) -> BlockMorphism {
        let hb = self.half_braiding(i);
        let f = component_at(&*self.cat, &self.simples, &hb, &self.carrier(j));
        let (ij, ji) = (self.tensor_obj(&i, &j), self.tensor_obj(&j, &i));
        self.restrict(ij, ji, &f)
    }

    /// [`CenterCategory::braiding`] included back into the hom of the ambient category.
    pub fn braiding_element(&self, i: usize, j: usize) -> BlockMorphism {
        let (ij, ji) = (self.tensor_obj(&i, &j), self.tensor_obj(&j, &i));
        self.sub(ij, ji).inclusion().compose(&self.braiding(i, j))
    }

    /// Hexagon identities for the underlying braiding on all triples of given objects.
    pub fn verify_hexagons(&self) -> Report {
        let n = self.given;
        let triples: Vec<(usize, usize, usize)> = (0..n)
            .flat_map(|i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))))
            .collect();
        let results: Vec<[Option<String>; 2]> = triples
            .par_iter()
            .map(|&(i, j, k)| {
                let lbl = || format!("({}, {}, {})", self.obj_label(&i), self.obj_label(&j), self.obj_label(&k));
                [
                    (!self.hexagon1(i, j, k)).then(|| format!("hexagon 1 at {}", lbl())),
                    (!self.hexagon2(i, j, k)).then(|| format!("hexagon 2 at {}", lbl())),
                ]
            })
            .collect();
        let mut rep = Report::default();
        for r in results {
            for f in r {
                rep.checks += 1;
                rep.failures.extend(f);
            }
        }
        rep
    }

    fn chain(&self, start: usize, steps: &[(usize, usize, BlockMorphism)]) -> BlockMorphism {
        let mut acc = self.ident(&start);
        for (src, tgt, f) in steps {
            acc = under_compose(self, &start, src, tgt, f, &acc);
        }
        acc
    }

    fn hexagon1(&self, i: usize, j: usize, k: usize) -> bool {
        let t = |a: usize, b: usize| self.tensor_obj(&a, &b);
        let (ij, jk, ki, ik, ji) = (t(i, j), t(j, k), t(k, i), t(i, k), t(j, i));
        let start = t(ij, k);
        let lhs = self.chain(
            start,
            &[
                (start, t(i, jk), self.associator(&i, &j, &k)),
                (t(i, jk), t(jk, i), self.braiding(i, jk)),
                (t(jk, i), t(j, ki), self.associator(&j, &k, &i)),
            ],
        );
        let rhs = self.chain(
            start,
            &[
                (start, t(ji, k), tensor_id(self, &ij, &ji, &k, &self.braiding(i, j))),
                (t(ji, k), t(j, ik), self.associator(&j, &i, &k)),
                (t(j, ik), t(j, ki), id_tensor(self, &j, &ik, &ki, &self.braiding(i, k))),
            ],
        );
        lhs == rhs
    }

    fn hexagon2(&self, i: usize, j: usize, k: usize) -> bool {
        let t = |a: usize, b: usize| self.tensor_obj(&a, &b);
        let (ij, jk, ki, ik, kj) = (t(i, j), t(j, k), t(k, i), t(i, k), t(k, j));
        let start = t(i, jk);
        let lhs = self.chain(
            start,
            &[
                (start, t(ij, k), self.associator_inv(&i, &j, &k)),
                (t(ij, k), t(k, ij), self.braiding(ij, k)),
                (t(k, ij), t(ki, j), self.associator_inv(&k, &i, &j)),
            ],
        );
        let rhs = self.chain(
            start,
            &[
                (start, t(i, kj), id_tensor(self, &i, &jk, &kj, &self.braiding(j, k))),
                (t(i, kj), t(ik, j), self.associator_inv(&i, &k, &j)),
                (t(ik, j), t(ki, j), tensor_id(self, &ik, &ki, &j, &self.braiding(i, k))),
            ],
        );
        lhs == rhs
    }
}

impl<C: Semisimple + 'static> CenterCategory<C> {
    /// Commutativity of `L` and `R`, the natural isomorphism `L = R^rev` given by the
    /// half-braidings, and both hexagons, on all given objects and simple test objects.
    pub fn verify_braided(self: &Arc<Self>) -> Report {
        let zs = self.given_objects();
        let ys = self.simples.clone();
        let left = LeftAction::new(self.clone());
        let right = RightAction::new(self.clone());
        let mut rep = Report::default();
        let mut lc = is_commutative(&left, &zs, &ys);
        lc.failures.iter_mut().for_each(|f| *f = format!("L: {f}"));
        rep.merge(lc);
        let mut rc = is_commutative(&right, &ys, &zs);
        rc.failures.iter_mut().for_each(|f| *f = format!("R: {f}"));
        rep.merge(rc);
        match reverse(right, &ys, &zs) {
            Err(e) => rep.check(false, || format!("R^rev: {e}")),
            Ok(rrev) => {
                rep.check(true, String::new);
                let objs: Vec<(usize, C::Obj)> = zs
                    .iter()
                    .flat_map(|&i| ys.iter().map(move |y| (i, y.clone())))
                    .collect();
                let this = self.clone();
                let xi = move |o: &(usize, C::Obj)| {
                    component_at(&*this.cat, &this.simples, &this.half_braiding(o.0), &o.1)
                };
                let mut nat = verify_natural(&left, &rrev, &xi, &objs);
                nat.failures.iter_mut().for_each(|f| *f = format!("L = R^rev: {f}"));
                rep.merge(nat);
            }
        }
        rep.merge(self.verify_hexagons());
        rep
    }
}

impl<C: Semisimple> EnrichedCategory for CenterCategory<C> {
    type Obj = usize;

    fn base(&self) -> &FusionData {
        self.cat.base()
    }

    fn hom(&self, x: &usize, y: &usize) -> MultObject {
        self.sub(*x, *y).object()
    }

    fn ident(&self, x: &usize) -> BlockMorphism {
        self.restrict(*x, *x, &self.cat.ident(&self.carrier(*x)))
    }

    fn comp(&self, x: &usize, y: &usize, z: &usize) -> BlockMorphism {
        let (i, j, k) = (*x, *y, *z);
        let b = self.base();
        let f = self
            .cat
            .comp(&self.carrier(i), &self.carrier(j), &self.carrier(k))
            .compose(&b.tensor_mor(&self.sub(j, k).inclusion(), &self.sub(i, j).inclusion()));
        self.restrict(i, k, &f)
    }

    fn obj_label(&self, x: &usize) -> String {
        self.arena.read().unwrap()[*x].label.clone()
    }
}

impl<C: Semisimple> EnrichedMonoidal for CenterCategory<C> {
    fn unit_object(&self) -> usize {
        self.intern(Formula::Unit, || {
            (unit_half_braiding(&*self.cat, &self.simples), "1".into())
        })
    }

    fn tensor_obj(&self, x: &usize, y: &usize) -> usize {
        self.intern(Formula::Tensor(*x, *y), || {
            let (hx, hy) = (self.half_braiding(*x), self.half_braiding(*y));
            let label = format!("({} * {})", self.obj_label(x), self.obj_label(y));
            (tensor_half_braiding(&*self.cat, &self.simples, &hx, &hy), label)
        })
    }

    fn tensorator(&self, x: &usize, y: &usize, x2: &usize, y2: &usize) -> BlockMorphism {
        let b = self.base();
        let f = self
            .cat
            .tensorator(&self.carrier(*x), &self.carrier(*y), &self.carrier(*x2), &self.carrier(*y2))
            .compose(&b.tensor_mor(&self.sub(*x, *x2).inclusion(), &self.sub(*y, *y2).inclusion()));
        self.restrict(self.tensor_obj(x, y), self.tensor_obj(x2, y2), &f)
    }

    fn associator(&self, x: &usize, y: &usize, z: &usize) -> BlockMorphism {
        let f = self.cat.associator(&self.carrier(*x), &self.carrier(*y), &self.carrier(*z));
        let (xy, yz) = (self.tensor_obj(x, y), self.tensor_obj(y, z));
        self.restrict(self.tensor_obj(&xy, z), self.tensor_obj(x, &yz), &f)
    }

    fn associator_inv(&self, x: &usize, y: &usize, z: &usize) -> BlockMorphism {
        let f = self.cat.associator_inv(&self.carrier(*x), &self.carrier(*y), &self.carrier(*z));
        let (xy, yz) = (self.tensor_obj(x, y), self.tensor_obj(y, z));
        self.restrict(self.tensor_obj(x, &yz), self.tensor_obj(&xy, z), &f)
    }

    fn lunitor(&self, x: &usize) -> BlockMorphism {
        let e = self.unit_object();
        self.restrict(self.tensor_obj(&e, x), *x, &self.cat.lunitor(&self.carrier(*x)))
    }

    fn lunitor_inv(&self, x: &usize) -> BlockMorphism {
        let e = self.unit_object();
        self.restrict(*x, self.tensor_obj(&e, x), &self.cat.lunitor_inv(&self.carrier(*x)))
    }

    fn runitor(&self, x: &usize) -> BlockMorphism {
        let e = self.unit_object();
        self.restrict(self.tensor_obj(x, &e), *x, &self.cat.runitor(&self.carrier(*x)))
    }

    fn runitor_inv(&self, x: &usize) -> BlockMorphism {
        let e = self.unit_object();
        self.restrict(*x, self.tensor_obj(x, &e), &self.cat.runitor_inv(&self.carrier(*x)))
    }
}

/// `L: Z x C -> C`, the forgetful functor on the left factor followed by the tensor product.
pub struct LeftAction<C: Semisimple> {
    product: Product<CenterCategory<C>, C>,
}

impl<C: Semisimple> LeftAction<C> {
    pub fn new(z: Arc<CenterCategory<C>>) -> Self {
        let c = z.cat.clone();
        LeftAction {
            product: Product::new(z, c),
        }
    }
}

impl<C: Semisimple> EnrichedFunctor for LeftAction<C> {
    type Source = Product<CenterCategory<C>, C>;
    type Target = C;

    fn source(&self) -> &Self::Source {
        &self.product
    }

    fn target(&self) -> &C {
        self.product.right()
    }

    fn on_object(&self, x: &(usize, C::Obj)) -> C::Obj {
        let z = self.product.left();
        z.cat.tensor_obj(&z.carrier(x.0), &x.1)
    }

    fn on_hom(&self, x: &(usize, C::Obj), y: &(usize, C::Obj)) -> BlockMorphism {
        let z = self.product.left();
        let c = &*z.cat;
        let h = c.hom(&x.1, &y.1);
        c.tensorator(&z.carrier(x.0), &x.1, &z.carrier(y.0), &y.1)
            .compose(&c.base().tensor_mor(&z.sub(x.0, y.0).inclusion(), &BlockMorphism::identity(&h)))
    }
}

/// `R: C x Z -> C`, the tensor product with the forgetful functor on the right factor.
pub struct RightAction<C: Semisimple> {
    product: Product<C, CenterCategory<C>>,
}

impl<C: Semisimple> RightAction<C> {
    pub fn new(z: Arc<CenterCategory<C>>) -> Self {
        let c = z.cat.clone();
        RightAction {
            product: Product::new(c, z),
        }
    }
}

impl<C: Semisimple> EnrichedFunctor for RightAction<C> {
    type Source = Product<C, CenterCategory<C>>;
    type Target = C;

    fn source(&self) -> &Self::Source {
        &self.product
    }

    fn target(&self) -> &C {
        self.product.left()
    }

    fn on_object(&self, x: &(C::Obj, usize)) -> C::Obj {
        let z = self.product.right();
        z.cat.tensor_obj(&x.0, &z.carrier(x.1))
    }

    fn on_hom(&self, x: &(C::Obj, usize), y: &(C::Obj, usize)) -> BlockMorphism {
        let z = self.product.right();
        let c = &*z.cat;
        let h = c.hom(&x.0, &y.0);
        c.tensorator(&x.0, &z.carrier(x.1), &y.0, &z.carrier(y.1))
            .compose(&c.base().tensor_mor(&BlockMorphism::identity(&h), &z.sub(x.1, y.1).inclusion()))
    }
}
