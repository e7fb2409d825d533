use std::collections::HashMap;
use std::sync::Arc;

use super::plain::{extend, half_braiding_defect, tensor_components};
use crate::basecat::{BlockMorphism, FusionData, FusionTables, MultObject, TensorLayout};
use crate::error::{Error, Result};
use crate::fixtures;
use crate::scalar::CycScalar;

/// The full subcategory of `c` on `simples`, relabelled `0..simples.len()` in the given order.
///
/// `simples` must contain the unit and be closed under fusion and duals.
pub fn full_subcategory(c: &FusionData, name: &str, simples: &[usize]) -> Result<FusionData> {
    let mut index = HashMap::new();
    for (i, &a) in simples.iter().enumerate() {
        c.check_label(a)?;
        if index.insert(a, i).is_some() {
            return Err(Error::InvalidArgument(format!("simple {} listed twice", c.label(a))));
        }
    }
    let at = |a: usize| -> Result<usize> {
        index.get(&a).copied().ok_or_else(|| {
            Error::InvalidArgument(format!("subcategory is not closed: missing {}", c.label(a)))
        })
    };
    let unit = at(c.unit())?;
    let dual = simples.iter().map(|&a| at(c.dual(a))).collect::<Result<Vec<_>>>()?;
    let mut fusion = Vec::new();
    for &a in simples {
        for &b in simples {
            for &s in c.channels(a, b) {
                fusion.push((at(a)?, at(b)?, at(s)?));
            }
        }
    }
    let mut fsym = HashMap::new();
    for &[a, b, cc, d, e, f] in c.stored_f_keys() {
        if let (Some(&a2), Some(&b2), Some(&c2)) = (index.get(&a), index.get(&b), index.get(&cc)) {
            fsym.insert(
                [a2, b2, c2, at(d)?, at(e)?, at(f)?],
                c.fsym(a, b, cc, d, e, f),
            );
        }
    }
    let rsym = if c.is_braided() {
        let mut r = HashMap::new();
        for &a in simples {
            for &b in simples {
                for &s in c.channels(a, b) {
                    r.insert([at(a)?, at(b)?, at(s)?], c.rsym(a, b, s));
                }
            }
        }
        Some(r)
    } else {
        None
    };
    FusionData::new(FusionTables {
        name: name.to_string(),
        labels: simples.iter().map(|&a| c.label(a).to_string()).collect(),
        unit,
        dual,
        fusion,
        fsym,
        rsym,
        cupcap: Some(
            simples
                .iter()
                .map(|&a| (c.cup_scalar(a).clone(), c.cap_scalar(a).clone()))
                .collect(),
        ),
    })
}

/// A strong monoidal functor `psi` from the reverse of a braided category `B` into the
/// center of `C`: a label map `phi` on simples together with half-braidings `b_{phi(w), -}`.
///
/// `phi` is strict: it sends simples to simples injectively, preserving fusion rules and
/// F-symbols, so `phi(p (x) q)` and `phi(p) (x) phi(q)` agree up to reordering of bases.
#[derive(Clone, Debug)]
pub struct CentralFunctor {
    source: Arc<FusionData>,
    target: Arc<FusionData>,
    on_objects: Vec<usize>,
    half_braidings: Vec<Vec<BlockMorphism>>,
}

impl CentralFunctor {
    /// Checks the functor, half-braiding, monoidality and braiding conditions.
    pub fn new(
        source: Arc<FusionData>,
        target: Arc<FusionData>,
        on_objects: Vec<usize>,
        half_braidings: Vec<Vec<BlockMorphism>>,
    ) -> Result<Self> {
        source.require_braided()?;
        let (b, c) = (&*source, &*target);
        if on_objects.len() != b.n() || half_braidings.len() != b.n() {
            return Err(Error::InvalidArgument(format!(
                "functor needs an image and a half-braiding for each of the {} simples of {}",
                b.n(),
                b.name()
            )));
        }
        for &a in &on_objects {
            c.check_label(a)?;
        }
        let mut seen = on_objects.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != on_objects.len() {
            return Err(Error::OutOfScope("the label map must be injective".into()));
        }
        let phi = |a: usize| on_objects[a];
        if phi(b.unit()) != c.unit() {
            return Err(Error::Axiom("the unit must map to the unit".into()));
        }
        for w in 0..b.n() {
            if phi(b.dual(w)) != c.dual(phi(w)) {
                return Err(Error::Axiom(format!("duals are not preserved at {}", b.label(w))));
            }
            for v in 0..b.n() {
                let image: Vec<usize> = b.channels(w, v).iter().map(|&s| phi(s)).collect();
                let mut got = c.channels(phi(w), phi(v)).to_vec();
                got.sort_unstable();
                let mut want = image.clone();
                want.sort_unstable();
                if got != want {
                    return Err(Error::Axiom(format!(
                        "fusion of {} and {} is not preserved",
                        b.label(w),
                        b.label(v)
                    )));
                }
            }
        }
        for a in 0..b.n() {
            for bb in 0..b.n() {
                for cc in 0..b.n() {
                    for &e in b.channels(a, bb) {
                        for &d in b.channels(e, cc) {
                            for &f in b.channels(bb, cc) {
                                if !b.fuses(a, f, d) {
                                    continue;
                                }
                                let want = b.fsym(a, bb, cc, d, e, f);
                                let got = c.fsym(phi(a), phi(bb), phi(cc), phi(d), phi(e), phi(f));
                                if want != got {
                                    return Err(Error::Axiom(format!(
                                        "F-symbol {} is not preserved",
                                        b.fmt_labels(&[a, bb, cc, d, e, f])
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        let functor = CentralFunctor {
            source,
            target,
            on_objects,
            half_braidings,
        };
        functor.check_half_braidings()?;
        Ok(functor)
    }

    fn check_half_braidings(&self) -> Result<()> {
        let (b, c) = (&*self.source, &*self.target);
        for w in 0..b.n() {
            let x = c.simple_object(self.on_object(w));
            if let Some(why) = half_braiding_defect(c, &x, &self.half_braidings[w]) {
                return Err(Error::Axiom(format!("half-braiding of {}: {why}", b.label(w))));
            }
        }
        for w in 0..b.n() {
            for v in 0..b.n() {
                let (pw, pv) = (c.simple_object(self.on_object(w)), c.simple_object(self.on_object(v)));
                let prod = c.tensor(&pw, &pv);
                let tensor = tensor_components(c, &pw, &self.half_braidings[w], &pv, &self.half_braidings[v]);
                for &u in b.channels(w, v) {
                    let inc = c.inclusion(&prod, self.on_object(u), 0);
                    for z in 0..c.n() {
                        let iz = BlockMorphism::identity(&c.simple_object(z));
                        let lhs = c.tensor_mor(&iz, &inc).compose(&self.half_braidings[u][z]);
                        let rhs = tensor[z].compose(&c.tensor_mor(&inc, &iz));
                        if lhs != rhs {
                            return Err(Error::Axiom(format!(
                                "half-braidings are not monoidal at {} -> {} (x) {}, test object {}",
                                b.label(u),
                                b.label(w),
                                b.label(v),
                                c.label(z)
                            )));
                        }
                    }
                }
                // The center braiding of psi(w), psi(v) is the reverse braiding of B.
                let want = self.map_morphism(&b.braid_inv(&b.simple_object(v), &b.simple_object(w)));
                if self.half_braidings[w][self.on_object(v)] != want {
                    return Err(Error::Axiom(format!(
                        "functor is not braided at ({}, {})",
                        b.label(w),
                        b.label(v)
                    )));
                }
            }
        }
        Ok(())
    }

    /// `x -> (x, c^{-1}_{-,x})` on a braided `B`, into the center of `B` itself.
    pub fn canonical(b: Arc<FusionData>) -> Result<Self> {
        let n = b.n();
        Self::inclusion(b, &(0..n).collect::<Vec<_>>(), None)
    }

    /// The inclusion of a full braided subcategory of `c`, with half-braidings
    /// `b_{x,z} = c^{-1}_{z,x}`.
    pub fn inclusion(c: Arc<FusionData>, simples: &[usize], name: Option<&str>) -> Result<Self> {
        c.require_braided()?;
        let mut sorted = simples.to_vec();
        sorted.sort_unstable();
        let source = if sorted.len() == c.n() {
            c.clone()
        } else {
            let name = name.map_or_else(|| format!("{}_sub", c.name()), str::to_string);
            Arc::new(full_subcategory(&c, &name, &sorted)?)
        };
        let half = sorted
            .iter()
            .map(|&x| {
                let xm = c.simple_object(x);
                (0..c.n())
                    .map(|z| c.braid_inv(&c.simple_object(z), &xm))
                    .collect()
            })
            .collect();
        Self::new(source, c, sorted, half)
    }

    /// The inclusion of the Mueger center of `c`.
    pub fn mueger_inclusion(c: Arc<FusionData>) -> Result<Self> {
        let m = c.mueger_center();
        let name = format!("{}_mueger", c.name());
        Self::inclusion(c, &m, Some(&name))
    }

    /// The unit functor from `Vec`, for which the construction recovers `C` as a linear category.
    pub fn from_trivial(c: Arc<FusionData>) -> Result<Self> {
        let half = vec![(0..c.n())
            .map(|z| {
                let zm = c.simple_object(z);
                c.runit_inv(&zm).compose(&c.lunit(&zm))
            })
            .collect()];
        let unit = c.unit();
        Self::new(Arc::new(fixtures::trivial()), c, vec![unit], half)
    }

    pub fn source(&self) -> &Arc<FusionData> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FusionData> {
        &self.target
    }

    pub fn on_object(&self, w: usize) -> usize {
        self.on_objects[w]
    }

    pub fn on_objects(&self) -> &[usize] {
        &self.on_objects
    }

    /// Components `b_{phi(w), z}` for every simple `z` of the target.
    pub fn half_braiding(&self, w: usize) -> &[BlockMorphism] {
        &self.half_braidings[w]
    }

    pub fn map_object(&self, m: &MultObject) -> MultObject {
        let mut out = vec![0; self.target.n()];
        for (w, &k) in m.mults().iter().enumerate() {
            out[self.on_objects[w]] = k;
        }
        MultObject::from_mults(out)
    }

    pub fn map_morphism(&self, f: &BlockMorphism) -> BlockMorphism {
        let mut out = BlockMorphism::zero(&self.map_object(f.source()), &self.map_object(f.target()));
        for w in 0..self.source.n() {
            let blk = f.block(w);
            for r in 0..blk.rows() {
                for col in 0..blk.cols() {
                    out.set_entry(self.on_objects[w], r, col, blk.get(r, col).clone());
                }
            }
        }
        out
    }

    /// The monoidal structure `phi(p (x) q) -> phi(p) (x) phi(q)`, a reordering of bases.
    pub fn structure(&self, p: &MultObject, q: &MultObject) -> BlockMorphism {
        let (b, c) = (&*self.source, &*self.target);
        let lb = TensorLayout::new(b, p, q);
        let (pp, pq) = (self.map_object(p), self.map_object(q));
        let lc = TensorLayout::new(c, &pp, &pq);
        let mut out = BlockMorphism::zero(&self.map_object(&lb.object()), &lc.object());
        for (u, basis) in lb.basis.iter().enumerate() {
            for (col, &(a, i, bb, j)) in basis.iter().enumerate() {
                let phi = |x: usize| self.on_objects[x];
                let row = lc.pos(phi(a), i, phi(bb), j, phi(u));
                out.set_entry(phi(u), row, col, CycScalar::one());
            }
        }
        out
    }

    /// `b_{phi(q), x}: phi(q) (x) x -> x (x) phi(q)` for an object `q` of the source and any
    /// object `x` of the target.
    pub fn half_braid(&self, q: &MultObject, x: &MultObject) -> BlockMorphism {
        let c = &*self.target;
        let pq = self.map_object(q);
        let ix = BlockMorphism::identity(x);
        let mut out = BlockMorphism::zero(&c.tensor(&pq, x), &c.tensor(x, &pq));
        for (w, j) in q.summands() {
            let a = self.on_objects[w];
            let am = c.simple_object(a);
            let term = c
                .tensor_mor(&ix, &c.inclusion(&pq, a, j))
                .compose(&extend(c, &am, &self.half_braidings[w], x))
                .compose(&c.tensor_mor(&c.projection(&pq, a, j), &ix));
            out = out.add(&term);
        }
        out
    }
}
