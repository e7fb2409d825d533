use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::EnrichedCategory;
use crate::basecat::{BlockMorphism, FusionData, MultObject};
use crate::error::{Error, Result};

/// An enriched category on finitely many objects, stored as explicit hom and structure data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnrichedTable {
    pub base: String,
    pub objects: Vec<String>,
    /// `homs[x][y]`.
    pub homs: Vec<Vec<MultObject>>,
    pub ident: Vec<BlockMorphism>,
    /// `comp[(x * n + y) * n + z]`.
    pub comp: Vec<BlockMorphism>,
    #[serde(skip)]
    base_data: Option<Arc<FusionData>>,
}

impl EnrichedTable {
    /// Records the structure of `c` on the given objects.
    pub fn from_category<C: EnrichedCategory>(c: &C, base: Arc<FusionData>, objs: &[C::Obj]) -> Self {
        let homs = objs
            .iter()
            .map(|x| objs.iter().map(|y| c.hom(x, y)).collect())
            .collect();
        let mut comp = Vec::with_capacity(objs.len().pow(3));
        for x in objs {
            for y in objs {
                for z in objs {
                    comp.push(c.comp(x, y, z));
                }
            }
        }
        EnrichedTable {
            base: base.name().to_string(),
            objects: objs.iter().map(|x| c.obj_label(x)).collect(),
            homs,
            ident: objs.iter().map(|x| c.ident(x)).collect(),
            comp,
            base_data: Some(base),
        }
    }

    /// Attaches the base category after deserialization, checking every shape.
    pub fn attach(mut self, base: Arc<FusionData>) -> Result<Self> {
        if base.name() != self.base {
            return Err(Error::Schema(format!(
                "table is enriched over '{}', not '{}'",
                self.base,
                base.name()
            )));
        }
        let n = self.objects.len();
        let shape_err = |what: String| Error::Schema(format!("malformed enriched table: {what}"));
        if self.homs.len() != n || self.homs.iter().any(|r| r.len() != n) {
            return Err(shape_err("homs must be an n x n array".into()));
        }
        if self.ident.len() != n || self.comp.len() != n * n * n {
            return Err(shape_err("ident needs n entries and comp n^3".into()));
        }
        let check = |m: &BlockMorphism, src: &MultObject, tgt: &MultObject, what: String| -> Result<()> {
            BlockMorphism::new(src.clone(), tgt.clone(), m.blocks().to_vec())
                .ok()
                .filter(|k| k == m)
                .map(|_| ())
                .ok_or_else(|| shape_err(what))
        };
        let unit = base.unit_object();
        for x in 0..n {
            check(&self.ident[x], &unit, &self.homs[x][x], format!("ident[{x}]"))?;
            for y in 0..n {
                for z in 0..n {
                    let src = base.tensor(&self.homs[y][z], &self.homs[x][y]);
                    let m = &self.comp[(x * n + y) * n + z];
                    check(m, &src, &self.homs[x][z], format!("comp[{x}][{y}][{z}]"))?;
                }
            }
        }
        self.base_data = Some(base);
        Ok(self)
    }

    pub fn n_objects(&self) -> usize {
        self.objects.len()
    }

    fn data(&self) -> &FusionData {
        self.base_data
            .as_deref()
            .expect("enriched table used before attaching its base")
    }
}

impl EnrichedCategory for EnrichedTable {
    type Obj = usize;

    fn base(&self) -> &FusionData {
        self.data()
    }

    fn hom(&self, x: &usize, y: &usize) -> MultObject {
        self.homs[*x][*y].clone()
    }

    fn ident(&self, x: &usize) -> BlockMorphism {
        self.ident[*x].clone()
    }

    fn comp(&self, x: &usize, y: &usize, z: &usize) -> BlockMorphism {
        let n = self.objects.len();
        self.comp[(x * n + y) * n + z].clone()
    }

    fn obj_label(&self, x: &usize) -> String {
        self.objects[*x].clone()
    }
}
