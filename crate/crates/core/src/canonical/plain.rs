//! Half-braidings in a fusion category used as an ordinary (unenriched) monoidal category.

use crate::basecat::{BlockMorphism, FusionData, MultObject};
use crate::linalg::Matrix;
use crate::scalar::CycScalar;

/// `b_{x,m}: x (x) m -> m (x) x` from the components `b_{x,z}` on simples, by additivity.
pub fn extend(c: &FusionData, x: &MultObject, comps: &[BlockMorphism], m: &MultObject) -> BlockMorphism {
    let mut out = BlockMorphism::zero(&c.tensor(x, m), &c.tensor(m, x));
    let idx = BlockMorphism::identity(x);
    for (s, k) in m.summands() {
        let inc = c.inclusion(m, s, k);
        let proj = c.projection(m, s, k);
        let term = c
            .tensor_mor(&inc, &idx)
            .compose(&comps[s])
            .compose(&c.tensor_mor(&idx, &proj));
        out = out.add(&term);
    }
    out
}

/// Both sides of the multiplicativity square for the pair of simples `(y, z)`.
pub fn multiplicativity_sides(
    c: &FusionData,
    x: &MultObject,
    comps: &[BlockMorphism],
    y: usize,
    z: usize,
) -> (BlockMorphism, BlockMorphism) {
    let (ym, zm) = (c.simple_object(y), c.simple_object(z));
    let (iy, iz) = (BlockMorphism::identity(&ym), BlockMorphism::identity(&zm));
    let lhs = c
        .assoc_inv(&ym, &zm, x)
        .compose(&c.tensor_mor(&iy, &comps[z]))
        .compose(&c.assoc(&ym, x, &zm))
        .compose(&c.tensor_mor(&comps[y], &iz))
        .compose(&c.assoc_inv(x, &ym, &zm));
    let rhs = extend(c, x, comps, &c.tensor(&ym, &zm));
    (lhs, rhs)
}

/// `x (x) 1 -> 1 (x) x` through the unitors.
pub fn unit_component(c: &FusionData, x: &MultObject) -> BlockMorphism {
    c.lunit_inv(x).compose(&c.runit(x))
}

/// Describes the first violated half-braiding axiom, if any.
pub fn half_braiding_defect(c: &FusionData, x: &MultObject, comps: &[BlockMorphism]) -> Option<String> {
    if comps.len() != c.n() {
        return Some(format!("expected {} components, got {}", c.n(), comps.len()));
    }
    for z in 0..c.n() {
        let zm = c.simple_object(z);
        if comps[z].source() != &c.tensor(x, &zm) || comps[z].target() != &c.tensor(&zm, x) {
            return Some(format!("component at {} has the wrong shape", c.label(z)));
        }
        if comps[z].blocks().iter().any(|b| b.rows() != b.cols() || b.inverse().is_err()) {
            return Some(format!("component at {} is not invertible", c.label(z)));
        }
    }
    if comps[c.unit()] != unit_component(c, x) {
        return Some("unit component is not the unitor composite".into());
    }
    for y in 0..c.n() {
        for z in 0..c.n() {
            let (l, r) = multiplicativity_sides(c, x, comps, y, z);
            if l != r {
                return Some(format!("multiplicativity fails at ({}, {})", c.label(y), c.label(z)));
            }
        }
    }
    None
}

/// Components of the tensor product `(x, bx) (x) (y, by)`.
pub fn tensor_components(
    c: &FusionData,
    x: &MultObject,
    bx: &[BlockMorphism],
    y: &MultObject,
    by: &[BlockMorphism],
) -> Vec<BlockMorphism> {
    let (ix, iy) = (BlockMorphism::identity(x), BlockMorphism::identity(y));
    (0..c.n())
        .map(|z| {
            let zm = c.simple_object(z);
            c.assoc(&zm, x, y)
                .compose(&c.tensor_mor(&bx[z], &iy))
                .compose(&c.assoc_inv(x, &zm, y))
                .compose(&c.tensor_mor(&ix, &by[z]))
                .compose(&c.assoc(x, y, &zm))
        })
        .collect()
}

/// Basis of `Hom_C(a, b)` by matrix units.
pub fn hom_basis(a: &MultObject, b: &MultObject) -> Vec<BlockMorphism> {
    let mut out = Vec::new();
    for s in 0..a.n_simples() {
        for r in 0..b.mult(s) {
            for col in 0..a.mult(s) {
                let mut m = BlockMorphism::zero(a, b);
                m.set_entry(s, r, col, CycScalar::one());
                out.push(m);
            }
        }
    }
    out
}

fn flatten(m: &BlockMorphism) -> Vec<CycScalar> {
    m.blocks()
        .iter()
        .flat_map(|b| (0..b.rows()).flat_map(move |r| b.row(r).to_vec()))
        .collect()
}

/// Dimension of the morphisms `a -> b` commuting with the given half-braidings.
pub fn intertwiner_dim(
    c: &FusionData,
    a: &MultObject,
    ba: &[BlockMorphism],
    b: &MultObject,
    bb: &[BlockMorphism],
) -> usize {
    let basis = hom_basis(a, b);
    if basis.is_empty() {
        return 0;
    }
    // One column per basis morphism, stacking the defect over every simple z.
    let cols: Vec<Vec<CycScalar>> = basis
        .iter()
        .map(|f| {
            (0..c.n())
                .flat_map(|z| {
                    let iz = BlockMorphism::identity(&c.simple_object(z));
                    let d = bb[z]
                        .compose(&c.tensor_mor(f, &iz))
                        .sub(&c.tensor_mor(&iz, f).compose(&ba[z]));
                    flatten(&d)
                })
                .collect()
        })
        .collect();
    let m = Matrix::from_rows(cols).transpose();
    basis.len() - m.rank()
}
