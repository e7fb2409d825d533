//! Finite abelian groups with bicharacters and quadratic forms, and the pointed
//! braided fusion categories they generate.

use std::collections::{BTreeSet, HashMap};

use crate::basecat::{FusionData, FusionTables};
use crate::error::{Error, Result};
use crate::scalar::{CycScalar, Phase};

pub type Element = Vec<i64>;

/// `Z/n_1 x ... x Z/n_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAbGroup {
    orders: Vec<i64>,
}

impl FinAbGroup {
    pub fn new(orders: Vec<i64>) -> Result<Self> {
        if orders.iter().any(|&n| n <= 0) {
            return Err(Error::InvalidArgument("cyclic orders must be positive".into()));
        }
        Ok(FinAbGroup { orders })
    }

    pub fn orders(&self) -> &[i64] {
        &self.orders
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn size(&self) -> usize {
        self.orders.iter().product::<i64>() as usize
    }

    pub fn reduce(&self, a: &[i64]) -> Element {
        a.iter().zip(&self.orders).map(|(x, n)| x.rem_euclid(*n)).collect()
    }

    pub fn zero(&self) -> Element {
        vec![0; self.rank()]
    }

    pub fn generator(&self, i: usize) -> Element {
        let mut g = self.zero();
        g[i] = 1;
        self.reduce(&g)
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Element {
        self.reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: &[i64]) -> Element {
        self.reduce(&a.iter().map(|x| -x).collect::<Vec<_>>())
    }

    pub fn times(&self, n: i64, a: &[i64]) -> Element {
        self.reduce(&a.iter().map(|x| n * x).collect::<Vec<_>>())
    }

    /// Position of an element in [`FinAbGroup::elements`] (mixed radix, last coordinate fastest).
    pub fn index(&self, a: &[i64]) -> usize {
        let a = self.reduce(a);
        let mut idx = 0usize;
        for (x, n) in a.iter().zip(&self.orders) {
            idx = idx * (*n as usize) + *x as usize;
        }
        idx
    }

    pub fn element(&self, mut idx: usize) -> Element {
        let mut out = vec![0; self.rank()];
        for i in (0..self.rank()).rev() {
            let n = self.orders[i] as usize;
            out[i] = (idx % n) as i64;
            idx /= n;
        }
        out
    }

    pub fn elements(&self) -> Vec<Element> {
        (0..self.size()).map(|i| self.element(i)).collect()
    }

    pub fn label(&self, a: &[i64]) -> String {
        self.reduce(a)
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(":")
    }

    pub fn is_subgroup(&self, h: &[Element]) -> bool {
        let set: BTreeSet<Element> = h.iter().map(|a| self.reduce(a)).collect();
        set.contains(&self.zero())
            && set
                .iter()
                .all(|a| set.iter().all(|b| set.contains(&self.add(a, b))))
    }
}

/// A bicharacter `c: G x G -> Q/Z`, stored on generator pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bichar {
    group: FinAbGroup,
    gens: Vec<Vec<Phase>>,
}

impl Bichar {
    /// Builds the bicharacter extending `gens[i][j] = c(e_i, e_j)` biadditively.
    pub fn from_generators(group: FinAbGroup, gens: Vec<Vec<Phase>>) -> Result<Self> {
        let k = group.rank();
        if gens.len() != k || gens.iter().any(|r| r.len() != k) {
            return Err(Error::InvalidArgument("bicharacter needs a phase per generator pair".into()));
        }
        for i in 0..k {
            for j in 0..k {
                let v = gens[i][j];
                if !v.times(group.orders[i]).is_zero() || !v.times(group.orders[j]).is_zero() {
                    return Err(Error::InvalidArgument(format!(
                        "c(e{i}, e{j}) = {v} is not biadditive: its order must divide gcd({}, {})",
                        group.orders[i], group.orders[j]
                    )));
                }
            }
        }
        Ok(Bichar { group, gens })
    }

    /// Builds a bicharacter from a full table, rejecting non-biadditive input.
    pub fn from_table(group: FinAbGroup, table: &HashMap<(Element, Element), Phase>) -> Result<Self> {
        let k = group.rank();
        let get = |a: &Element, b: &Element| -> Result<Phase> {
            table
                .get(&(group.reduce(a), group.reduce(b)))
                .copied()
                .ok_or_else(|| Error::InvalidArgument(format!("missing c({}, {})", group.label(a), group.label(b))))
        };
        let mut gens = vec![vec![Phase::zero(); k]; k];
        for (i, row) in gens.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v = get(&group.generator(i), &group.generator(j))?;
            }
        }
        let c = Bichar::from_generators(group.clone(), gens)?;
        for a in group.elements() {
            for b in group.elements() {
                if get(&a, &b)? != c.eval(&a, &b) {
                    return Err(Error::InvalidArgument(format!(
                        "table is not biadditive at ({}, {})",
                        group.label(&a),
                        group.label(&b)
                    )));
                }
            }
        }
        Ok(c)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn generator_phases(&self) -> &[Vec<Phase>] {
        &self.gens
    }

    pub fn eval(&self, a: &[i64], b: &[i64]) -> Phase {
        let a = self.group.reduce(a);
        let b = self.group.reduce(b);
        let mut out = Phase::zero();
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out = out + self.gens[i][j].times(x * y);
            }
        }
        out
    }

    /// The induced quadratic form `q(a) = c(a, a)`.
    pub fn quadratic_form(&self) -> QuadForm {
        let q = self
            .group
            .elements()
            .iter()
            .map(|a| self.eval(a, a))
            .collect();
        QuadForm {
            group: self.group.clone(),
            q,
        }
    }
}

/// A quadratic form `q: G -> Q/Z`, stored per element in [`FinAbGroup::elements`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadForm {
    group: FinAbGroup,
    q: Vec<Phase>,
}

impl QuadForm {
    pub fn new(group: FinAbGroup, q: Vec<Phase>) -> Result<Self> {
        if q.len() != group.size() {
            return Err(Error::InvalidArgument("quadratic form needs one value per element".into()));
        }
        let form = QuadForm { group, q };
        let els = form.group.elements();
        for a in &els {
            let minus = form.group.neg(a);
            if form.eval(&minus) != form.eval(a) {
                return Err(Error::InvalidArgument(format!("q(-a) != q(a) at {}", form.group.label(a))));
            }
            for n in 0..form.group.size() as i64 {
                if form.eval(&form.group.times(n, a)) != form.eval(a).times(n * n) {
                    return Err(Error::InvalidArgument(format!(
                        "q({n}a) != {n}^2 q(a) at {}",
                        form.group.label(a)
                    )));
                }
            }
        }
        for a in &els {
            for b in &els {
                for c in &els {
                    let lhs = form.polar(&form.group.add(a, b), c);
                    if lhs != form.polar(a, c) + form.polar(b, c) {
                        return Err(Error::InvalidArgument(format!(
                            "polarization is not biadditive at ({}, {}, {})",
                            form.group.label(a),
                            form.group.label(b),
                            form.group.label(c)
                        )));
                    }
                }
            }
        }
        Ok(form)
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn eval(&self, a: &[i64]) -> Phase {
        self.q[self.group.index(a)]
    }

    /// `b(a, x) = q(a + x) - q(a) - q(x)`.
    pub fn polar(&self, a: &[i64], x: &[i64]) -> Phase {
        self.eval(&self.group.add(a, x)) - self.eval(a) - self.eval(x)
    }

    pub fn radical(&self) -> Vec<Element> {
        self.orthogonal_complement_unchecked(&self.group.elements())
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical() == vec![self.group.zero()]
    }

    pub fn orthogonal_complement(&self, h: &[Element]) -> Result<Vec<Element>> {
        if !self.group.is_subgroup(h) {
            return Err(Error::InvalidArgument("H is not a subgroup".into()));
        }
        Ok(self.orthogonal_complement_unchecked(h))
    }

    fn orthogonal_complement_unchecked(&self, h: &[Element]) -> Vec<Element> {
        self.group
            .elements()
            .into_iter()
            .filter(|a| h.iter().all(|x| self.polar(a, x).is_zero()))
            .collect()
    }
}

/// Pointed braided fusion category with trivial associator and `R(a,b) = exp(2 pi i c(a,b))`.
pub fn pointed_fusion_data(name: &str, c: &Bichar) -> Result<FusionData> {
    let g = c.group();
    let labels = g.elements().iter().map(|a| g.label(a)).collect();
    pointed_fusion_data_labeled(name, c, labels)
}

/// As [`pointed_fusion_data`] with custom labels in [`FinAbGroup::elements`] order.
pub fn pointed_fusion_data_labeled(name: &str, c: &Bichar, labels: Vec<String>) -> Result<FusionData> {
    let g = c.group();
    let els = g.elements();
    if labels.len() != els.len() {
        return Err(Error::InvalidArgument("one label per group element required".into()));
    }
    let idx = |a: &[i64]| g.index(a);
    let mut fusion = Vec::new();
    let mut rsym = HashMap::new();
    let mut fsym = HashMap::new();
    for a in &els {
        for b in &els {
            let ab = g.add(a, b);
            fusion.push((idx(a), idx(b), idx(&ab)));
            rsym.insert([idx(a), idx(b), idx(&ab)], c.eval(a, b).to_scalar());
            for x in &els {
                let (bx, abx) = (g.add(b, x), g.add(&ab, x));
                let key = [idx(a), idx(b), idx(x), idx(&abx), idx(&ab), idx(&bx)];
                if key[..3].iter().all(|&i| i != 0) {
                    fsym.insert(key, CycScalar::one());
                }
            }
        }
    }
    FusionData::new(FusionTables {
        name: name.to_string(),
        labels,
        unit: 0,
        dual: els.iter().map(|a| idx(&g.neg(a))).collect(),
        fusion,
        fsym,
        rsym: Some(rsym),
        cupcap: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ph(p: i64, q: i64) -> Phase {
        Phase::new(p, q).unwrap()
    }

    #[test]
    fn element_indexing_round_trips() {
        let g = FinAbGroup::new(vec![2, 3]).unwrap();
        for (i, a) in g.elements().iter().enumerate() {
            assert_eq!(g.index(a), i);
        }
        assert_eq!(g.add(&[1, 2], &[1, 2]), vec![0, 1]);
    }

    #[test]
    fn non_biadditive_generator_is_rejected() {
        let g = FinAbGroup::new(vec![2]).unwrap();
        let err = Bichar::from_generators(g, vec![vec![ph(1, 4)]]).unwrap_err();
        assert!(err.to_string().contains("c(e0, e0)"));
    }

    #[test]
    fn complement_rejects_non_subgroup() {
        let g = FinAbGroup::new(vec![4]).unwrap();
        let q = Bichar::from_generators(g, vec![vec![ph(1, 4)]]).unwrap().quadratic_form();
        assert!(q.orthogonal_complement(&[vec![0], vec![1]]).is_err());
    }
}
