use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use rayon::prelude::*;

use super::{multiplicativity_holds, naturality_sides, unit_component, HalfBraiding};
use crate::basecat::BlockMorphism;
use crate::enriched::{underlying_basis, underlying_inverse, Semisimple};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::CycScalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Free coordinates range over the roots of unity of this order.
    pub order: u32,
    /// Maximum number of partial assignments visited before giving up.
    pub node_budget: u64,
}

/// `lcm(conductor of the base, 2 * number of simple test objects)`.
pub fn default_order<C: Semisimple>(c: &C) -> u32 {
    let n = 2 * c.simple_objects().len() as u64;
    num_integer::lcm(c.base().conductor() as u64, n.max(1)) as u32
}

impl SolveOptions {
    pub fn for_category<C: Semisimple>(c: &C) -> Self {
        SolveOptions {
            order: default_order(c),
            node_budget: 2_000_000,
        }
    }
}

fn flatten(m: &BlockMorphism) -> Vec<CycScalar> {
    m.blocks()
        .iter()
        .flat_map(|b| (0..b.rows()).flat_map(move |r| b.row(r).to_vec()))
        .collect()
}

enum Check {
    Invertible(usize),
    Multiplicative(usize, usize),
}

struct Problem<'a, C: Semisimple> {
    c: &'a C,
    x: &'a C::Obj,
    simples: Vec<C::Obj>,
    ranges: Vec<std::ops::Range<usize>>,
    particular: Vec<CycScalar>,
    kernel: Matrix,
    /// Checks that become decidable once the first `level` free coordinates are assigned.
    checks_at: Vec<Vec<Check>>,
    roots: Vec<CycScalar>,
}

impl<C: Semisimple> Problem<'_, C> {
    fn assemble(&self, t: &[CycScalar]) -> Vec<BlockMorphism> {
        let b = self.c.base();
        let u = b.unit();
        self.simples
            .iter()
            .zip(&self.ranges)
            .map(|(z, range)| {
                let h = self.c.hom(&self.c.tensor_obj(self.x, z), &self.c.tensor_obj(z, self.x));
                let mut m = BlockMorphism::zero(&b.unit_object(), &h);
                for (k, row) in range.clone().enumerate() {
                    let mut v = self.particular[row].clone();
                    for (j, tj) in t.iter().enumerate() {
                        let kj = self.kernel.get(row, j);
                        if !kj.is_zero() {
                            v += &(kj * tj);
                        }
                    }
                    m.set_entry(u, k, 0, v);
                }
                m
            })
            .collect()
    }

    fn passes(&self, hb: &HalfBraiding<C::Obj>, level: usize) -> bool {
        self.checks_at[level].iter().all(|chk| match *chk {
            Check::Invertible(i) => {
                let z = &self.simples[i];
                underlying_inverse(
                    self.c,
                    &self.c.tensor_obj(self.x, z),
                    &self.c.tensor_obj(z, self.x),
                    &hb.components[i],
                )
                .is_some()
            }
            Check::Multiplicative(i, j) => multiplicativity_holds(self.c, &self.simples, hb, i, j),
        })
    }

    fn search(
        &self,
        t: &mut Vec<CycScalar>,
        out: &mut Vec<HalfBraiding<C::Obj>>,
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
        let level = t.len();
        // Unassigned coordinates are zero in `assemble`, which only affects components whose
        // checks are not yet scheduled.
        let hb = HalfBraiding {
            object: self.x.clone(),
            components: self.assemble(t),
        };
        if !self.passes(&hb, level) {
            return;
        }
        if level == self.kernel.cols() {
            out.push(hb);
            return;
        }
        for r in &self.roots {
            t.push(r.clone());
            self.search(t, out, nodes, budget, overflow);
            t.pop();
        }
    }
}

/// Every half-braiding of `x` whose free coordinates, after the linear unit and naturality
/// constraints, are roots of unity of order `opts.order`.
pub fn solve_half_braidings<C: Semisimple>(
    c: &C,
    x: &C::Obj,
    opts: SolveOptions,
) -> Result<Vec<HalfBraiding<C::Obj>>> {
    let simples = c.simple_objects();
    let e = c.unit_object();
    let unit_idx = simples
        .iter()
        .position(|z| *z == e)
        .ok_or_else(|| Error::InvalidArgument("the unit must be a simple test object".into()))?;
    let bases: Vec<Vec<BlockMorphism>> = simples
        .iter()
        .map(|z| underlying_basis(c, &c.tensor_obj(x, z), &c.tensor_obj(z, x)))
        .collect();
    let mut ranges = Vec::new();
    let mut n = 0;
    for basis in &bases {
        ranges.push(n..n + basis.len());
        n += basis.len();
    }

    let mut rows: Vec<Vec<CycScalar>> = Vec::new();
    let mut rhs: Vec<CycScalar> = Vec::new();
    let unit_vals = unit_component(c, x).unit_column(c.base().unit());
    for (k, v) in unit_vals.into_iter().enumerate() {
        let mut row = vec![CycScalar::zero(); n];
        row[ranges[unit_idx].start + k] = CycScalar::one();
        rows.push(row);
        rhs.push(v);
    }
    let pairs: Vec<(usize, usize)> = (0..simples.len())
        .flat_map(|i| (0..simples.len()).map(move |j| (i, j)))
        .collect();
    let blocks: Vec<Vec<Vec<CycScalar>>> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let (y, z) = (&simples[i], &simples[j]);
            let zero_y = BlockMorphism::zero(&c.base().unit_object(), &c.hom(&c.tensor_obj(x, y), &c.tensor_obj(y, x)));
            let zero_z = BlockMorphism::zero(&c.base().unit_object(), &c.hom(&c.tensor_obj(x, z), &c.tensor_obj(z, x)));
            let mut cols: Vec<(usize, Vec<CycScalar>)> = Vec::new();
            for (k, ek) in bases[i].iter().enumerate() {
                let (lhs, _) = naturality_sides(c, x, y, z, ek, &zero_z);
                cols.push((ranges[i].start + k, flatten(&lhs)));
            }
            for (l, el) in bases[j].iter().enumerate() {
                let (_, rhs) = naturality_sides(c, x, y, z, &zero_y, el);
                cols.push((ranges[j].start + l, flatten(&rhs).into_iter().map(|v| -v).collect()));
            }
            let len = cols.first().map_or(0, |c| c.1.len());
            (0..len)
                .map(|r| {
                    let mut row = vec![CycScalar::zero(); n];
                    for (col, vals) in &cols {
                        row[*col] += &vals[r];
                    }
                    row
                })
                .filter(|row| row.iter().any(|v| !v.is_zero()))
                .collect()
        })
        .collect();
    for b in blocks {
        for row in b {
            rows.push(row);
            rhs.push(CycScalar::zero());
        }
    }
    let a = Matrix::from_rows(rows);
    let Some(particular) = a.solve(&rhs) else {
        return Ok(Vec::new());
    };
    let kernel = a.kernel();

    let kref = &kernel;
    let depends: Vec<Option<usize>> = ranges
        .iter()
        .map(|range| {
            range
                .clone()
                .flat_map(|row| (0..kref.cols()).filter(move |&j| !kref.get(row, j).is_zero()))
                .max()
        })
        .collect();
    let ready = |deps: &[usize]| -> usize {
        deps.iter()
            .filter_map(|&i| depends[i])
            .map(|j| j + 1)
            .max()
            .unwrap_or(0)
    };
    let mut checks_at: Vec<Vec<Check>> = (0..=kernel.cols()).map(|_| Vec::new()).collect();
    for i in 0..simples.len() {
        checks_at[ready(&[i])].push(Check::Invertible(i));
    }
    for &(i, j) in &pairs {
        let yz = c.tensor_obj(&simples[i], &simples[j]);
        let mut deps = vec![i, j];
        for part in c.decompose(&yz) {
            deps.push(simples.iter().position(|s| *s == part.simple).expect("simple summand"));
        }
        checks_at[ready(&deps)].push(Check::Multiplicative(i, j));
    }
    let roots = (0..opts.order as i64)
        .map(|k| CycScalar::root_of_unity(k, opts.order as i64))
        .collect::<Result<Vec<_>>>()?;
    let problem = Problem {
        c,
        x,
        simples,
        ranges,
        particular,
        kernel,
        checks_at,
        roots,
    };

    let nodes = AtomicU64::new(0);
    let overflow = AtomicBool::new(false);
    let out: Vec<HalfBraiding<C::Obj>> = if problem.kernel.cols() == 0 {
        let mut out = Vec::new();
        problem.search(&mut Vec::new(), &mut out, &nodes, opts.node_budget, &overflow);
        out
    } else {
        let root_hb = HalfBraiding {
            object: x.clone(),
            components: problem.assemble(&[]),
        };
        if !problem.passes(&root_hb, 0) {
            return Ok(Vec::new());
        }
        problem
            .roots
            .par_iter()
            .map(|r| {
                let mut out = Vec::new();
                let mut t = vec![r.clone()];
                problem.search(&mut t, &mut out, &nodes, opts.node_budget, &overflow);
                out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    if overflow.load(Ordering::Relaxed) {
        return Err(Error::Resource(format!(
            "half-braiding search exceeded {} nodes ({} free coordinates, order {})",
            opts.node_budget,
            problem.kernel.cols(),
            opts.order
        )));
    }
    Ok(out)
}
