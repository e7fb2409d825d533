use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::fusion::FusionData;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::CycScalar;

/// A semisimple object, given by the multiplicity of each simple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultObject(Vec<usize>);

impl MultObject {
    pub fn zero(n: usize) -> Self {
        MultObject(vec![0; n])
    }

    pub fn simple(n: usize, a: usize) -> Self {
        let mut v = vec![0; n];
        v[a] = 1;
        MultObject(v)
    }

    pub fn from_mults(m: Vec<usize>) -> Self {
        MultObject(m)
    }

    pub fn mults(&self) -> &[usize] {
        &self.0
    }

    pub fn mult(&self, a: usize) -> usize {
        self.0[a]
    }

    pub fn n_simples(&self) -> usize {
        self.0.len()
    }

    /// Total number of simple summands.
    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    /// The simple label if this object is simple.
    pub fn as_simple(&self) -> Option<usize> {
        if self.total() == 1 {
            self.0.iter().position(|&m| m == 1)
        } else {
            None
        }
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&a| self.0[a] > 0).collect()
    }

    pub fn direct_sum(&self, other: &MultObject) -> MultObject {
        MultObject(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Simple summands `(a, copy)` in canonical order.
    pub fn summands(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (a, &m) in self.0.iter().enumerate() {
            for i in 0..m {
                out.push((a, i));
            }
        }
        out
    }
}

impl fmt::Debug for MultObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A morphism between semisimple objects: one matrix per simple, of shape
/// `target.mult(s) x source.mult(s)`.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockMorphism {
    source: MultObject,
    target: MultObject,
    blocks: Vec<Matrix>,
}

impl BlockMorphism {
    pub fn new(source: MultObject, target: MultObject, blocks: Vec<Matrix>) -> Result<Self> {
        let n = source.n_simples();
        if target.n_simples() != n || blocks.len() != n {
            return Err(Error::InvalidArgument("block count does not match the category".into()));
        }
        for (s, b) in blocks.iter().enumerate() {
            if b.rows() != target.mult(s) || b.cols() != source.mult(s) {
                return Err(Error::InvalidArgument(format!(
                    "block {s} has shape {}x{}, expected {}x{}",
                    b.rows(),
                    b.cols(),
                    target.mult(s),
                    source.mult(s)
                )));
            }
        }
        Ok(BlockMorphism {
            source,
            target,
            blocks,
        })
    }

    pub fn zero(source: &MultObject, target: &MultObject) -> Self {
        let blocks = (0..source.n_simples())
            .map(|s| Matrix::zeros(target.mult(s), source.mult(s)))
            .collect();
        BlockMorphism {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }

    pub fn identity(m: &MultObject) -> Self {
        let blocks = m.mults().iter().map(|&k| Matrix::identity(k)).collect();
        BlockMorphism {
            source: m.clone(),
            target: m.clone(),
            blocks,
        }
    }

    pub fn source(&self) -> &MultObject {
        &self.source
    }

    pub fn target(&self) -> &MultObject {
        &self.target
    }

    pub fn block(&self, s: usize) -> &Matrix {
        &self.blocks[s]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    pub fn entry(&self, s: usize, row: usize, col: usize) -> &CycScalar {
        self.blocks[s].get(row, col)
    }

    pub fn set_entry(&mut self, s: usize, row: usize, col: usize, v: CycScalar) {
        self.blocks[s].set(row, col, v);
    }

    pub fn add_entry(&mut self, s: usize, row: usize, col: usize, v: &CycScalar) {
        self.blocks[s].add_at(row, col, v);
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(|b| b.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target && self.blocks.iter().all(|b| b.is_identity())
    }

    /// `self . f`, panicking on mismatched objects.
    pub fn compose(&self, f: &BlockMorphism) -> BlockMorphism {
        assert_eq!(
            f.target, self.source,
            "composition of morphisms with mismatched objects"
        );
        BlockMorphism {
            source: f.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().zip(&f.blocks).map(|(g, f)| g.mul(f)).collect(),
        }
    }

    pub fn try_compose(&self, f: &BlockMorphism) -> Result<BlockMorphism> {
        if f.target != self.source {
            return Err(Error::InvalidArgument(format!(
                "cannot compose: target {:?} differs from source {:?}",
                f.target, self.source
            )));
        }
        Ok(self.compose(f))
    }

    /// `g . self`.
    pub fn then(&self, g: &BlockMorphism) -> BlockMorphism {
        g.compose(self)
    }

    pub fn add(&self, other: &BlockMorphism) -> BlockMorphism {
        assert!(self.source == other.source && self.target == other.target);
        BlockMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn sub(&self, other: &BlockMorphism) -> BlockMorphism {
        assert!(self.source == other.source && self.target == other.target);
        BlockMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().zip(&other.blocks).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    pub fn scale(&self, c: &CycScalar) -> BlockMorphism {
        BlockMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            blocks: self.blocks.iter().map(|b| b.scale(c)).collect(),
        }
    }

    /// Flattens a morphism out of the unit into a column vector over the unit block.
    pub fn unit_column(&self, unit: usize) -> Vec<CycScalar> {
        self.blocks[unit].col(0)
    }
}

impl fmt::Debug for BlockMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?} {:?}", self.source, self.target, self.blocks)
    }
}

/// Basis of `m (x) n`: per channel `s`, the list of `(a, i, b, j)`.
#[derive(Clone, Debug)]
pub struct TensorLayout {
    pub basis: Vec<Vec<(usize, usize, usize, usize)>>,
    index: HashMap<(usize, usize, usize, usize, usize), usize>,
}

impl TensorLayout {
    pub fn new(c: &FusionData, m: &MultObject, n: &MultObject) -> Self {
        let mut basis = vec![Vec::new(); c.n()];
        let mut index = HashMap::new();
        for a in 0..c.n() {
            for i in 0..m.mult(a) {
                for b in 0..c.n() {
                    for j in 0..n.mult(b) {
                        for &s in c.channels(a, b) {
                            index.insert((a, i, b, j, s), basis[s].len());
                            basis[s].push((a, i, b, j));
                        }
                    }
                }
            }
        }
        TensorLayout { basis, index }
    }

    pub fn object(&self) -> MultObject {
        MultObject::from_mults(self.basis.iter().map(|v| v.len()).collect())
    }

    pub fn pos(&self, a: usize, i: usize, b: usize, j: usize, s: usize) -> usize {
        self.index[&(a, i, b, j, s)]
    }
}

impl FusionData {
    pub fn unit_object(&self) -> MultObject {
        MultObject::simple(self.n(), self.unit())
    }

    pub fn simple_object(&self, a: usize) -> MultObject {
        MultObject::simple(self.n(), a)
    }

    pub fn tensor(&self, m: &MultObject, n: &MultObject) -> MultObject {
        let mut out = vec![0; self.n()];
        for a in m.support() {
            for b in n.support() {
                for &s in self.channels(a, b) {
                    out[s] += m.mult(a) * n.mult(b);
                }
            }
        }
        MultObject::from_mults(out)
    }

    pub fn tensor_mor(&self, f: &BlockMorphism, g: &BlockMorphism) -> BlockMorphism {
        let src = TensorLayout::new(self, f.source(), g.source());
        let tgt = TensorLayout::new(self, f.target(), g.target());
        let mut out = BlockMorphism::zero(&src.object(), &tgt.object());
        for s in 0..self.n() {
            for (p, &(a, i, b, j)) in src.basis[s].iter().enumerate() {
                for i2 in 0..f.target().mult(a) {
                    let x = f.entry(a, i2, i);
                    if x.is_zero() {
                        continue;
                    }
                    for j2 in 0..g.target().mult(b) {
                        let y = g.entry(b, j2, j);
                        if !y.is_zero() {
                            out.set_entry(s, tgt.pos(a, i2, b, j2, s), p, x * y);
                        }
                    }
                }
            }
        }
        out
    }

    /// `(m n) p -> m (n p)`.
    pub fn assoc(&self, m: &MultObject, n: &MultObject, p: &MultObject) -> BlockMorphism {
        let mn = TensorLayout::new(self, m, n);
        let src = TensorLayout::new(self, &mn.object(), p);
        let np = TensorLayout::new(self, n, p);
        let tgt = TensorLayout::new(self, m, &np.object());
        let mut out = BlockMorphism::zero(&src.object(), &tgt.object());
        for s in 0..self.n() {
            for (pos, &(e, k, c, l)) in src.basis[s].iter().enumerate() {
                let (a, i, b, j) = mn.basis[e][k];
                for &f in self.channels(b, c) {
                    if !self.fuses(a, f, s) {
                        continue;
                    }
                    let v = self.fsym(a, b, c, s, e, f);
                    if v.is_zero() {
                        continue;
                    }
                    let k2 = np.pos(b, j, c, l, f);
                    out.set_entry(s, tgt.pos(a, i, f, k2, s), pos, v);
                }
            }
        }
        out
    }

    /// `m (n p) -> (m n) p`.
    pub fn assoc_inv(&self, m: &MultObject, n: &MultObject, p: &MultObject) -> BlockMorphism {
        let mn = TensorLayout::new(self, m, n);
        let tgt = TensorLayout::new(self, &mn.object(), p);
        let np = TensorLayout::new(self, n, p);
        let src = TensorLayout::new(self, m, &np.object());
        let mut out = BlockMorphism::zero(&src.object(), &tgt.object());
        for s in 0..self.n() {
            for (pos, &(a, i, f, k2)) in src.basis[s].iter().enumerate() {
                let (b, j, c, l) = np.basis[f][k2];
                for &e in self.channels(a, b) {
                    if !self.fuses(e, c, s) {
                        continue;
                    }
                    let v = self.finv(a, b, c, s, f, e);
                    if v.is_zero() {
                        continue;
                    }
                    let k = mn.pos(a, i, b, j, e);
                    out.set_entry(s, tgt.pos(e, k, c, l, s), pos, v);
                }
            }
        }
        out
    }

    /// `c_{m,n}: m n -> n m`.
    pub fn braid(&self, m: &MultObject, n: &MultObject) -> BlockMorphism {
        let src = TensorLayout::new(self, m, n);
        let tgt = TensorLayout::new(self, n, m);
        let mut out = BlockMorphism::zero(&src.object(), &tgt.object());
        for s in 0..self.n() {
            for (pos, &(a, i, b, j)) in src.basis[s].iter().enumerate() {
                out.set_entry(s, tgt.pos(b, j, a, i, s), pos, self.rsym(a, b, s));
            }
        }
        out
    }

    /// `c_{m,n}^{-1}: n m -> m n`.
    pub fn braid_inv(&self, m: &MultObject, n: &MultObject) -> BlockMorphism {
        let src = TensorLayout::new(self, n, m);
        let tgt = TensorLayout::new(self, m, n);
        let mut out = BlockMorphism::zero(&src.object(), &tgt.object());
        for s in 0..self.n() {
            for (pos, &(b, j, a, i)) in src.basis[s].iter().enumerate() {
                let v = self.rsym(a, b, s).inv().expect("R-symbols are invertible");
                out.set_entry(s, tgt.pos(a, i, b, j, s), pos, v);
            }
        }
        out
    }

    /// `1 m -> m`.
    pub fn lunit(&self, m: &MultObject) -> BlockMorphism {
        let l = TensorLayout::new(self, &self.unit_object(), m);
        let mut out = BlockMorphism::zero(&l.object(), m);
        for (a, i) in m.summands() {
            out.set_entry(a, i, l.pos(self.unit(), 0, a, i, a), CycScalar::one());
        }
        out
    }

    pub fn lunit_inv(&self, m: &MultObject) -> BlockMorphism {
        let l = TensorLayout::new(self, &self.unit_object(), m);
        let mut out = BlockMorphism::zero(m, &l.object());
        for (a, i) in m.summands() {
            out.set_entry(a, l.pos(self.unit(), 0, a, i, a), i, CycScalar::one());
        }
        out
    }

    /// `m 1 -> m`.
    pub fn runit(&self, m: &MultObject) -> BlockMorphism {
        let l = TensorLayout::new(self, m, &self.unit_object());
        let mut out = BlockMorphism::zero(&l.object(), m);
        for (a, i) in m.summands() {
            out.set_entry(a, i, l.pos(a, i, self.unit(), 0, a), CycScalar::one());
        }
        out
    }

    pub fn runit_inv(&self, m: &MultObject) -> BlockMorphism {
        let l = TensorLayout::new(self, m, &self.unit_object());
        let mut out = BlockMorphism::zero(m, &l.object());
        for (a, i) in m.summands() {
            out.set_entry(a, l.pos(a, i, self.unit(), 0, a), i, CycScalar::one());
        }
        out
    }

    /// Left dual; copy `i` of `a*` is dual to copy `i` of `a`.
    pub fn dual_object(&self, m: &MultObject) -> MultObject {
        let mut out = vec![0; self.n()];
        for a in 0..self.n() {
            out[self.dual(a)] = m.mult(a);
        }
        MultObject::from_mults(out)
    }

    /// Coevaluation `1 -> m m*`.
    pub fn cup(&self, m: &MultObject) -> BlockMorphism {
        let md = self.dual_object(m);
        let l = TensorLayout::new(self, m, &md);
        let u = self.unit();
        let mut out = BlockMorphism::zero(&self.unit_object(), &l.object());
        for (a, i) in m.summands() {
            out.set_entry(u, l.pos(a, i, self.dual(a), i, u), 0, self.cup_scalar(a).clone());
        }
        out
    }

    /// Evaluation `m* m -> 1`.
    pub fn cap(&self, m: &MultObject) -> BlockMorphism {
        let md = self.dual_object(m);
        let l = TensorLayout::new(self, &md, m);
        let u = self.unit();
        let mut out = BlockMorphism::zero(&l.object(), &self.unit_object());
        for (a, i) in m.summands() {
            out.set_entry(u, 0, l.pos(self.dual(a), i, a, i, u), self.cap_scalar(a).clone());
        }
        out
    }

    /// Inclusion of copy `k` of the simple `s` into `m`.
    pub fn inclusion(&self, m: &MultObject, s: usize, k: usize) -> BlockMorphism {
        let mut out = BlockMorphism::zero(&self.simple_object(s), m);
        out.set_entry(s, k, 0, CycScalar::one());
        out
    }

    pub fn projection(&self, m: &MultObject, s: usize, k: usize) -> BlockMorphism {
        let mut out = BlockMorphism::zero(m, &self.simple_object(s));
        out.set_entry(s, 0, k, CycScalar::one());
        out
    }

    /// Double braiding `c_{y,x} c_{x,y}` on `x y`.
    pub fn monodromy_obj(&self, x: &MultObject, y: &MultObject) -> BlockMorphism {
        self.braid(y, x).compose(&self.braid(x, y))
    }

    /// Double braiding of two simples.
    pub fn monodromy(&self, x: usize, y: usize) -> Result<BlockMorphism> {
        self.check_label(x)?;
        self.check_label(y)?;
        self.require_braided()?;
        Ok(self.monodromy_obj(&self.simple_object(x), &self.simple_object(y)))
    }

    fn transparent_unchecked(&self, x: usize) -> bool {
        (0..self.n()).all(|y| {
            self.channels(x, y)
                .iter()
                .all(|&s| (&self.rsym(x, y, s) * &self.rsym(y, x, s)).is_one())
        })
    }

    /// Whether the simple `x` has trivial double braiding with every simple.
    pub fn is_transparent(&self, x: usize) -> Result<bool> {
        self.check_label(x)?;
        self.require_braided()?;
        Ok(self.transparent_unchecked(x))
    }

    /// Simples of the Mueger center.
    pub fn mueger_center(&self) -> Vec<usize> {
        if !self.is_braided() {
            return Vec::new();
        }
        (0..self.n()).filter(|&x| self.transparent_unchecked(x)).collect()
    }

    pub fn require_braided(&self) -> Result<()> {
        if self.is_braided() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("category {} has no braiding", self.name())))
        }
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.mueger_center() == [self.unit()]
    }
}
