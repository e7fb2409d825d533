use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use super::plain::{extend, intertwiner_dim, multiplicativity_sides, unit_component};
use crate::basecat::{BlockMorphism, FusionData, MultObject};
use crate::error::{Error, Result};
use crate::scalar::CycScalar;

/// An object of the ordinary Drinfeld center with a simple carrier.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterObject {
    pub carrier: usize,
    /// `b_{carrier, z}` for every simple `z`.
    pub components: Vec<BlockMorphism>,
}

/// The center objects with simple carriers, found by exhaustive search, and their hom dimensions.
#[derive(Clone, Debug)]
pub struct OrdinaryCenter {
    pub objects: Vec<CenterObject>,
    /// `hom_dims[i][j] = dim Z(C)(objects[i], objects[j])`.
    pub hom_dims: Vec<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OrdinaryOptions {
    /// Every channel scalar is searched among the roots of unity of this order.
    pub order: u32,
    pub node_budget: u64,
}

impl OrdinaryOptions {
    /// `lcm(conductor, 2 * number of simples)` and a budget of two million nodes.
    pub fn for_category(c: &FusionData) -> Self {
        OrdinaryOptions {
            order: num_integer::lcm(c.conductor(), 2 * c.n() as u32),
            node_budget: 2_000_000,
        }
    }
}

struct Search<'a> {
    c: &'a FusionData,
    x: MultObject,
    /// Simples other than the unit, in assignment order.
    order: Vec<usize>,
    /// Pairs `(y, z)` whose multiplicativity becomes decidable after `order[level]` is assigned.
    checks_at: Vec<Vec<(usize, usize)>>,
    roots: Vec<CycScalar>,
}

impl Search<'_> {
    fn component(&self, z: usize, phases: &[CycScalar]) -> BlockMorphism {
        let zm = self.c.simple_object(z);
        let (src, tgt) = (self.c.tensor(&self.x, &zm), self.c.tensor(&zm, &self.x));
        let mut m = BlockMorphism::zero(&src, &tgt);
        for (s, v) in src.support().into_iter().zip(phases) {
            m.set_entry(s, 0, 0, v.clone());
        }
        m
    }

    fn candidates(&self, z: usize) -> Vec<BlockMorphism> {
        let k = self.c.tensor(&self.x, &self.c.simple_object(z)).support().len();
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out
                .into_iter()
                .flat_map(|p: Vec<CycScalar>| {
                    self.roots.iter().map(move |r| {
                        let mut p = p.clone();
                        p.push(r.clone());
                        p
                    })
                })
                .collect();
        }
        out.iter().map(|p| self.component(z, p)).collect()
    }

    fn dfs(
        &self,
        comps: &mut Vec<BlockMorphism>,
        level: usize,
        out: &mut Vec<Vec<BlockMorphism>>,
        nodes: &AtomicU64,
        budget: u64,
        overflow: &AtomicBool,
    ) {
        if overflow.load(Ordering::Relaxed) {
            return;
        }
        if nodes.fetch_add(1, Ordering::Relaxed) >= budget {
            overflow.store(true, Ordering::Relaxed);
            return;
        }
        if level > 0 {
            let ok = self.checks_at[level - 1].iter().all(|&(y, z)| {
                let (l, r) = multiplicativity_sides(self.c, &self.x, comps, y, z);
                l == r
            });
            if !ok {
                return;
            }
        }
        if level == self.order.len() {
            out.push(comps.clone());
            return;
        }
        let z = self.order[level];
        for cand in self.candidates(z) {
            comps[z] = cand;
            self.dfs(comps, level + 1, out, nodes, budget, overflow);
        }
        let zm = self.c.simple_object(z);
        comps[z] = BlockMorphism::zero(&self.c.tensor(&self.x, &zm), &self.c.tensor(&zm, &self.x));
    }
}

/// All half-braidings of the simple `x` whose channel scalars are roots of unity of the
/// given order.
pub fn simple_half_braidings(c: &FusionData, x: usize, opts: OrdinaryOptions) -> Result<Vec<Vec<BlockMorphism>>> {
    c.check_label(x)?;
    let xm = c.simple_object(x);
    for z in 0..c.n() {
        let zm = c.simple_object(z);
        if c.tensor(&xm, &zm) != c.tensor(&zm, &xm) {
            return Ok(Vec::new());
        }
    }
    let order: Vec<usize> = (0..c.n()).filter(|&z| z != c.unit()).collect();
    let mut level_of = vec![0usize; c.n()];
    for (l, &z) in order.iter().enumerate() {
        level_of[z] = l + 1;
    }
    let mut checks_at = vec![Vec::new(); order.len()];
    for y in 0..c.n() {
        for z in 0..c.n() {
            let need = c
                .channels(y, z)
                .iter()
                .chain([&y, &z])
                .map(|&s| level_of[s])
                .max()
                .unwrap_or(0);
            if need > 0 {
                checks_at[need - 1].push((y, z));
            }
        }
    }
    let roots = (0..opts.order as i64)
        .map(|k| CycScalar::root_of_unity(k, opts.order as i64))
        .collect::<Result<Vec<_>>>()?;
    let search = Search {
        c,
        x: xm.clone(),
        order,
        checks_at,
        roots,
    };
    let mut start: Vec<BlockMorphism> = (0..c.n())
        .map(|z| {
            let zm = c.simple_object(z);
            BlockMorphism::zero(&c.tensor(&xm, &zm), &c.tensor(&zm, &xm))
        })
        .collect();
    start[c.unit()] = unit_component(c, &xm);
    let nodes = AtomicU64::new(0);
    let overflow = AtomicBool::new(false);
    let out: Vec<Vec<BlockMorphism>> = if search.order.is_empty() {
        vec![start]
    } else {
        let z0 = search.order[0];
        search
            .candidates(z0)
            .into_par_iter()
            .map(|cand| {
                let mut comps = start.clone();
                comps[z0] = cand;
                let mut out = Vec::new();
                search.dfs(&mut comps, 1, &mut out, &nodes, opts.node_budget, &overflow);
                out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    if overflow.load(Ordering::Relaxed) {
        return Err(Error::Resource(format!(
            "center search for {} exceeded {} nodes (order {})",
            c.label(x),
            opts.node_budget,
            opts.order
        )));
    }
    Ok(out)
}

/// Brute-force Drinfeld center of `c` viewed as a monoidal category, restricted to
/// objects with simple carriers.
pub fn ordinary_center(c: &FusionData, opts: OrdinaryOptions) -> Result<OrdinaryCenter> {
    let mut objects = Vec::new();
    for x in 0..c.n() {
        for components in simple_half_braidings(c, x, opts)? {
            objects.push(CenterObject { carrier: x, components });
        }
    }
    let n = objects.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let dims: Vec<usize> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (a, b) = (&objects[i], &objects[j]);
            if a.carrier != b.carrier {
                return 0;
            }
            let m = c.simple_object(a.carrier);
            intertwiner_dim(c, &m, &a.components, &m, &b.components)
        })
        .collect();
    let hom_dims = dims.chunks(n.max(1)).map(<[usize]>::to_vec).take(n).collect();
    Ok(OrdinaryCenter { objects, hom_dims })
}

impl OrdinaryCenter {
    pub fn carrier(&self, c: &FusionData, i: usize) -> MultObject {
        c.simple_object(self.objects[i].carrier)
    }

    /// Position of the given center object, matched exactly.
    pub fn find(&self, carrier: usize, components: &[BlockMorphism]) -> Option<usize> {
        self.objects
            .iter()
            .position(|o| o.carrier == carrier && o.components == components)
    }

    /// Double braiding of objects `i` and `j` in the center.
    pub fn monodromy(&self, c: &FusionData, i: usize, j: usize) -> BlockMorphism {
        let (a, b) = (&self.objects[i], &self.objects[j]);
        let (am, bm) = (self.carrier(c, i), self.carrier(c, j));
        extend(c, &bm, &b.components, &am).compose(&extend(c, &am, &a.components, &bm))
    }

    /// Objects whose double braiding with every object of `s` is trivial.
    pub fn centralizer(&self, c: &FusionData, s: &[usize]) -> Vec<usize> {
        (0..self.objects.len())
            .into_par_iter()
            .filter(|&i| s.iter().all(|&j| self.monodromy(c, i, j).is_identity()))
            .collect()
    }
}

/// Simples of `e` with trivial double braiding with every simple in `s`.
pub fn centralizer(e: &FusionData, s: &[usize]) -> Result<Vec<usize>> {
    e.require_braided()?;
    for &a in s {
        e.check_label(a)?;
    }
    let mut out = Vec::new();
    for x in 0..e.n() {
        let mut ok = true;
        for &a in s {
            ok &= e.monodromy(x, a)?.is_identity();
        }
        if ok {
            out.push(x);
        }
    }
    Ok(out)
}
