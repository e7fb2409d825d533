use std::sync::Arc;

use super::{EnrichedCategory, EnrichedMonoidal, Semisimple, Summand};
use crate::basecat::{BlockMorphism, FusionData, MultObject, TensorLayout};
use crate::error::{Error, Result};
use crate::scalar::CycScalar;

/// An algebra `(A, m, u)` in the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algebra {
    pub object: MultObject,
    pub mult: BlockMorphism,
    pub unit: BlockMorphism,
}

impl Algebra {
    /// The twisted-free group algebra on a set of invertible simples closed under fusion.
    pub fn group_algebra(b: &FusionData, elements: &[usize]) -> Result<Self> {
        let mut mults = vec![0; b.n()];
        for &g in elements {
            b.check_label(g)?;
            if b.channels(g, b.dual(g)) != [b.unit()] {
                return Err(Error::InvalidArgument(format!("{} is not invertible", b.label(g))));
            }
            mults[g] = 1;
        }
        let a = MultObject::from_mults(mults);
        if a.mult(b.unit()) == 0 {
            return Err(Error::InvalidArgument("group algebra must contain the unit".into()));
        }
        let layout = TensorLayout::new(b, &a, &a);
        let aa = layout.object();
        let mut m = BlockMorphism::zero(&aa, &a);
        for (s, basis) in layout.basis.iter().enumerate() {
            if basis.is_empty() {
                continue;
            }
            if a.mult(s) == 0 {
                return Err(Error::InvalidArgument(format!(
                    "{} is not closed under fusion",
                    b.label(s)
                )));
            }
            for (col, _) in basis.iter().enumerate() {
                m.set_entry(s, 0, col, CycScalar::one());
            }
        }
        let mut unit = BlockMorphism::zero(&b.unit_object(), &a);
        unit.set_entry(b.unit(), 0, 0, CycScalar::one());
        Ok(Algebra {
            object: a,
            mult: m,
            unit,
        })
    }

    /// The unit object with its canonical algebra structure.
    pub fn trivial(b: &FusionData) -> Self {
        let e = b.unit_object();
        Algebra {
            object: e.clone(),
            mult: b.lunit(&e),
            unit: BlockMorphism::identity(&e),
        }
    }

    pub fn verify(&self, b: &FusionData) -> Result<()> {
        let a = &self.object;
        let ida = BlockMorphism::identity(a);
        let lhs = self
            .mult
            .compose(&b.tensor_mor(&ida, &self.mult))
            .compose(&b.assoc(a, a, a));
        let rhs = self.mult.compose(&b.tensor_mor(&self.mult, &ida));
        if lhs != rhs {
            return Err(Error::Axiom("algebra associativity: m(1 m) a != m(m 1)".into()));
        }
        if !self
            .mult
            .compose(&b.tensor_mor(&self.unit, &ida))
            .compose(&b.lunit_inv(a))
            .is_identity()
        {
            return Err(Error::Axiom("algebra left unit: m(u 1) != 1".into()));
        }
        if !self
            .mult
            .compose(&b.tensor_mor(&ida, &self.unit))
            .compose(&b.runit_inv(a))
            .is_identity()
        {
            return Err(Error::Axiom("algebra right unit: m(1 u) != 1".into()));
        }
        Ok(())
    }

    /// `m . c_{A,A} = m`.
    pub fn is_commutative(&self, b: &FusionData) -> bool {
        b.is_braided() && self.mult.compose(&b.braid(&self.object, &self.object)) == self.mult
    }
}

/// The enriched category with one object and endomorphism algebra `A`.
pub struct SingleObject {
    base: Arc<FusionData>,
    algebra: Algebra,
    commutative: bool,
}

impl SingleObject {
    /// Verifies associativity and unitality, and records commutativity.
    pub fn new(base: Arc<FusionData>, algebra: Algebra) -> Result<Self> {
        algebra.verify(&base)?;
        let commutative = algebra.is_commutative(&base);
        Ok(SingleObject {
            base,
            algebra,
            commutative,
        })
    }

    /// As [`SingleObject::new`], rejecting algebras that do not give a monoidal structure.
    pub fn monoidal(base: Arc<FusionData>, algebra: Algebra) -> Result<Self> {
        let c = Self::new(base, algebra)?;
        if !c.commutative {
            return Err(Error::Axiom(
                "one-object category is monoidal only for a commutative algebra: m . c != m".into(),
            ));
        }
        Ok(c)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }
}

impl EnrichedCategory for SingleObject {
    type Obj = ();

    fn base(&self) -> &FusionData {
        &self.base
    }

    fn hom(&self, _: &(), _: &()) -> MultObject {
        self.algebra.object.clone()
    }

    fn ident(&self, _: &()) -> BlockMorphism {
        self.algebra.unit.clone()
    }

    fn comp(&self, _: &(), _: &(), _: &()) -> BlockMorphism {
        self.algebra.mult.clone()
    }

    fn obj_label(&self, _: &()) -> String {
        "*".into()
    }
}

impl EnrichedMonoidal for SingleObject {
    fn unit_object(&self) {}

    fn tensor_obj(&self, _: &(), _: &()) {}

    fn tensorator(&self, _: &(), _: &(), _: &(), _: &()) -> BlockMorphism {
        self.algebra.mult.clone()
    }

    fn associator(&self, _: &(), _: &(), _: &()) -> BlockMorphism {
        self.algebra.unit.clone()
    }

    fn associator_inv(&self, _: &(), _: &(), _: &()) -> BlockMorphism {
        self.algebra.unit.clone()
    }

    fn lunitor(&self, _: &()) -> BlockMorphism {
        self.algebra.unit.clone()
    }

    fn lunitor_inv(&self, _: &()) -> BlockMorphism {
        self.algebra.unit.clone()
    }

    fn runitor(&self, _: &()) -> BlockMorphism {
        self.algebra.unit.clone()
    }

    fn runitor_inv(&self, _: &()) -> BlockMorphism {
        self.algebra.unit.clone()
    }
}

impl Semisimple for SingleObject {
    fn simple_objects(&self) -> Vec<()> {
        vec![()]
    }

    fn decompose(&self, _: &()) -> Vec<Summand<()>> {
        let u = self.algebra.unit.clone();
        vec![Summand {
            simple: (),
            inclusion: u.clone(),
            projection: u,
        }]
    }
}
