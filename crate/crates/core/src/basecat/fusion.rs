use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::CycScalar;

/// Index-based presentation of a multiplicity-free fusion category, before validation.
///
/// F-symbol keys are `[a, b, c, d, e, f]` with the convention
/// `alpha(|(ab)_e c; d>) = sum_f F[a,b,c,d,e,f] |a (bc)_f; d>`; entries with a unit
/// among `a, b, c` may be omitted and are then taken to be 1. R-symbol keys are
/// `[a, b, c]`: the braiding `c_{a,b}` acts on the channel `a (x) b -> c` by `R[a,b,c]`.
#[derive(Clone, Debug, Default)]
pub struct FusionTables {
    pub name: String,
    pub labels: Vec<String>,
    pub unit: usize,
    pub dual: Vec<usize>,
    /// Triples `(a, b, c)` with `N_{ab}^c = 1`. Unit triples are added automatically.
    pub fusion: Vec<(usize, usize, usize)>,
    pub fsym: HashMap<[usize; 6], CycScalar>,
    /// `None` for a fusion category without braiding.
    pub rsym: Option<HashMap<[usize; 3], CycScalar>>,
    /// Per-simple `(u, v)` normalizations of the duality maps; derived when absent.
    pub cupcap: Option<Vec<(CycScalar, CycScalar)>>,
}

/// A skeletal multiplicity-free (braided) fusion category.
#[derive(Clone, Debug)]
pub struct FusionData {
    name: String,
    labels: Vec<String>,
    unit: usize,
    dual: Vec<usize>,
    fusion: Vec<bool>,
    channels: Vec<Vec<usize>>,
    fsym: HashMap<[u16; 6], CycScalar>,
    finv: HashMap<[u16; 6], CycScalar>,
    singular_blocks: Vec<[usize; 4]>,
    stored_f: Vec<[usize; 6]>,
    rsym: Option<HashMap<[u16; 3], CycScalar>>,
    cup: Vec<CycScalar>,
    cap: Vec<CycScalar>,
}

fn key6(k: [usize; 6]) -> [u16; 6] {
    k.map(|x| x as u16)
}

/// One failed axiom instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationFailure {
    pub axiom: String,
    pub labels: Vec<String>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub checks: usize,
    pub failures: Vec<ValidationFailure>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn has_failure(&self, axiom: &str) -> bool {
        self.failures.iter().any(|f| f.axiom == axiom)
    }
}

impl FusionData {
    pub fn new(t: FusionTables) -> Result<Self> {
        let n = t.labels.len();
        if n == 0 {
            return Err(Error::Schema("category has no simple objects".into()));
        }
        let distinct: BTreeSet<&String> = t.labels.iter().collect();
        if distinct.len() != n {
            return Err(Error::Schema("simple labels are not distinct".into()));
        }
        if t.unit >= n {
            return Err(Error::Schema("unit label is not a simple".into()));
        }
        if t.dual.len() != n || t.dual.iter().any(|&d| d >= n) {
            return Err(Error::Schema("dual map must cover every simple".into()));
        }
        let mut fusion = vec![false; n * n * n];
        for a in 0..n {
            fusion[(t.unit * n + a) * n + a] = true;
            fusion[(a * n + t.unit) * n + a] = true;
        }
        for &(a, b, c) in &t.fusion {
            if a >= n || b >= n || c >= n {
                return Err(Error::Schema(format!("fusion triple ({a},{b},{c}) out of range")));
            }
            fusion[(a * n + b) * n + c] = true;
        }
        let mut channels = vec![Vec::new(); n * n];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if fusion[(a * n + b) * n + c] {
                        channels[a * n + b].push(c);
                    }
                }
            }
        }
        let mut data = FusionData {
            name: t.name.clone(),
            labels: t.labels.clone(),
            unit: t.unit,
            dual: t.dual.clone(),
            fusion,
            channels,
            fsym: HashMap::new(),
            finv: HashMap::new(),
            singular_blocks: Vec::new(),
            stored_f: Vec::new(),
            rsym: None,
            cup: Vec::new(),
            cap: Vec::new(),
        };
        // F-symbols: every admissible tuple must be present unless it involves the unit.
        for key in data.admissible_f_tuples() {
            let [a, b, c, ..] = key;
            match t.fsym.get(&key) {
                Some(v) => {
                    data.fsym.insert(key6(key), v.clone());
                    data.stored_f.push(key);
                }
                None if a == t.unit || b == t.unit || c == t.unit => {
                    data.fsym.insert(key6(key), CycScalar::one());
                }
                None => {
                    return Err(Error::Schema(format!(
                        "missing F-symbol for admissible tuple {}",
                        data.fmt_labels(&key)
                    )))
                }
            }
        }
        for key in t.fsym.keys() {
            if !data.fsym.contains_key(&key6(*key)) {
                return Err(Error::Schema(format!(
                    "F-symbol given for non-admissible tuple {:?}",
                    key
                )));
            }
        }
        if let Some(r) = &t.rsym {
            let mut rs = HashMap::new();
            for a in 0..n {
                for b in 0..n {
                    for &c in data.channels(a, b) {
                        let v = r.get(&[a, b, c]).ok_or_else(|| {
                            Error::Schema(format!(
                                "missing R-symbol for admissible triple {}",
                                data.fmt_labels(&[a, b, c])
                            ))
                        })?;
                        rs.insert([a as u16, b as u16, c as u16], v.clone());
                    }
                }
            }
            for key in r.keys() {
                if !rs.contains_key(&key.map(|x| x as u16)) {
                    return Err(Error::Schema(format!(
                        "R-symbol given for non-admissible triple {:?}",
                        key
                    )));
                }
            }
            data.rsym = Some(rs);
        }
        data.compute_inverse_blocks();
        match t.cupcap {
            Some(cc) => {
                if cc.len() != n {
                    return Err(Error::Schema("cupcap must list every simple".into()));
                }
                data.cup = cc.iter().map(|(u, _)| u.clone()).collect();
                data.cap = cc.iter().map(|(_, v)| v.clone()).collect();
            }
            None => {
                data.cup = vec![CycScalar::one(); n];
                data.cap = (0..n)
                    .map(|x| {
                        let xd = data.dual[x];
                        let f = data.fsym(x, xd, x, x, data.unit, data.unit);
                        f.inv().unwrap_or_else(|_| CycScalar::zero())
                    })
                    .collect();
            }
        }
        Ok(data)
    }

    fn admissible_f_tuples(&self) -> Vec<[usize; 6]> {
        let n = self.n();
        let mut out = Vec::new();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for &e in self.channels(a, b) {
                        for &d in self.channels(e, c) {
                            for &f in self.channels(b, c) {
                                if self.fuses(a, f, d) {
                                    out.push([a, b, c, d, e, f]);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    }

    fn compute_inverse_blocks(&mut self) {
        let n = self.n();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        let es = self.left_channels(a, b, c, d);
                        let fs = self.right_channels(a, b, c, d);
                        if es.is_empty() && fs.is_empty() {
                            continue;
                        }
                        if es.len() != fs.len() {
                            self.singular_blocks.push([a, b, c, d]);
                            continue;
                        }
                        let m = Matrix::from_rows(
                            es.iter()
                                .map(|&e| fs.iter().map(|&f| self.fsym(a, b, c, d, e, f)).collect())
                                .collect(),
                        );
                        match m.inverse() {
                            Ok(inv) => {
                                for (i, &f) in fs.iter().enumerate() {
                                    for (j, &e) in es.iter().enumerate() {
                                        self.finv
                                            .insert(key6([a, b, c, d, f, e]), inv.get(i, j).clone());
                                    }
                                }
                            }
                            Err(_) => self.singular_blocks.push([a, b, c, d]),
                        }
                    }
                }
            }
        }
    }

    /// Intermediate channels `e` of `((a b)_e c)_d`.
    pub fn left_channels(&self, a: usize, b: usize, c: usize, d: usize) -> Vec<usize> {
        self.channels(a, b)
            .iter()
            .copied()
            .filter(|&e| self.fuses(e, c, d))
            .collect()
    }

    /// Intermediate channels `f` of `(a (b c)_f)_d`.
    pub fn right_channels(&self, a: usize, b: usize, c: usize, d: usize) -> Vec<usize> {
        self.channels(b, c)
            .iter()
            .copied()
            .filter(|&f| self.fuses(a, f, d))
            .collect()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown simple label {label:?}")))
    }

    pub fn check_label(&self, a: usize) -> Result<()> {
        if a < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidArgument(format!("simple index {a} out of range")))
        }
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, a: usize) -> usize {
        self.dual[a]
    }

    pub fn is_braided(&self) -> bool {
        self.rsym.is_some()
    }

    pub fn fuses(&self, a: usize, b: usize, c: usize) -> bool {
        let n = self.n();
        self.fusion[(a * n + b) * n + c]
    }

    /// Simples `c` with `N_{ab}^c = 1`, ascending.
    pub fn channels(&self, a: usize, b: usize) -> &[usize] {
        &self.channels[a * self.n() + b]
    }

    /// F-symbol; zero for non-admissible tuples.
    pub fn fsym(&self, a: usize, b: usize, c: usize, d: usize, e: usize, f: usize) -> CycScalar {
        self.fsym
            .get(&key6([a, b, c, d, e, f]))
            .cloned()
            .unwrap_or_else(CycScalar::zero)
    }

    /// Entry `[f, e]` of the inverse of the block `F^{abc}_d`.
    pub fn finv(&self, a: usize, b: usize, c: usize, d: usize, f: usize, e: usize) -> CycScalar {
        self.finv
            .get(&key6([a, b, c, d, f, e]))
            .cloned()
            .unwrap_or_else(CycScalar::zero)
    }

    pub fn rsym(&self, a: usize, b: usize, c: usize) -> CycScalar {
        self.rsym
            .as_ref()
            .expect("category carries no braiding")
            .get(&[a as u16, b as u16, c as u16])
            .cloned()
            .unwrap_or_else(CycScalar::zero)
    }

    pub fn cup_scalar(&self, a: usize) -> &CycScalar {
        &self.cup[a]
    }

    pub fn cap_scalar(&self, a: usize) -> &CycScalar {
        &self.cap[a]
    }

    /// Least common multiple of the conductors of all structure constants.
    pub fn conductor(&self) -> u32 {
        let mut n: u64 = 1;
        let mut acc = |s: &CycScalar| n = num_integer::lcm(n, s.conductor() as u64);
        self.fsym.values().for_each(&mut acc);
        if let Some(r) = &self.rsym {
            r.values().for_each(&mut acc);
        }
        self.cup.iter().chain(&self.cap).for_each(&mut acc);
        n as u32
    }

    pub fn fmt_labels(&self, idx: &[usize]) -> String {
        format!(
            "({})",
            idx.iter().map(|&i| self.labels[i].as_str()).collect::<Vec<_>>().join(",")
        )
    }

    /// Stored (non-implied) F-symbol keys in canonical order.
    pub fn stored_f_keys(&self) -> &[[usize; 6]] {
        &self.stored_f
    }

    /// R-symbol keys in canonical order.
    pub fn r_keys(&self) -> Vec<[usize; 3]> {
        let mut out = Vec::new();
        if self.rsym.is_some() {
            for a in 0..self.n() {
                for b in 0..self.n() {
                    for &c in self.channels(a, b) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }

    /// Exports the presentation back into tables (used for serialization and perturbation).
    pub fn to_tables(&self) -> FusionTables {
        let n = self.n();
        let mut fusion = Vec::new();
        for a in 0..n {
            for b in 0..n {
                if a == self.unit || b == self.unit {
                    continue;
                }
                for &c in self.channels(a, b) {
                    fusion.push((a, b, c));
                }
            }
        }
        FusionTables {
            name: self.name.clone(),
            labels: self.labels.clone(),
            unit: self.unit,
            dual: self.dual.clone(),
            fusion,
            fsym: self
                .stored_f
                .iter()
                .map(|k| (*k, self.fsym(k[0], k[1], k[2], k[3], k[4], k[5])))
                .collect(),
            rsym: self.rsym.as_ref().map(|_| {
                self.r_keys()
                    .into_iter()
                    .map(|k| (k, self.rsym(k[0], k[1], k[2])))
                    .collect()
            }),
            cupcap: Some(
                self.cup
                    .iter()
                    .cloned()
                    .zip(self.cap.iter().cloned())
                    .collect(),
            ),
        }
    }

    /// Checks unit, duality, pentagon, hexagon and zigzag axioms exhaustively.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        let n = self.n();
        let u = self.unit;
        let fail = |rep: &mut ValidationReport, axiom: &str, idx: &[usize], detail: String| {
            rep.failures.push(ValidationFailure {
                axiom: axiom.to_string(),
                labels: idx.iter().map(|&i| self.labels[i].clone()).collect(),
                detail,
            });
        };

        for a in 0..n {
            rep.checks += 1;
            if self.channels(u, a) != [a] || self.channels(a, u) != [a] {
                fail(&mut rep, "unit", &[a], "unit does not fuse trivially".into());
            }
            let d = self.dual[a];
            rep.checks += 1;
            if self.dual[d] != a || !self.fuses(a, d, u) || !self.fuses(d, a, u) {
                fail(&mut rep, "dual", &[a], format!("dual {} is not an inverse label", self.labels[d]));
            }
            for b in 0..n {
                if self.fuses(a, b, u) && b != d {
                    fail(&mut rep, "dual", &[a, b], "unit channel outside the dual".into());
                }
            }
        }
        if self.dual[u] != u {
            fail(&mut rep, "dual", &[u], "unit is not self-dual".into());
        }
        for &[a, b, c, d] in &self.singular_blocks {
            fail(&mut rep, "F-invertible", &[a, b, c, d], "F block is singular or not square".into());
        }
        // Normalization: F-symbols with a unit among a, b, c.
        for (k, v) in &self.fsym {
            let k = k.map(|x| x as usize);
            if (k[0] == u || k[1] == u || k[2] == u) && !v.is_one() {
                fail(&mut rep, "normalization", &k, format!("expected 1, got {v}"));
            }
        }

        // Pentagon.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for dd in 0..n {
                        for &f in self.channels(a, b) {
                            for &g in self.channels(f, c) {
                                for &e in self.channels(g, dd) {
                                    for &l in self.channels(c, dd) {
                                        for &k in self.channels(b, l) {
                                            if !self.fuses(a, k, e) || !self.fuses(f, l, e) {
                                                continue;
                                            }
                                            rep.checks += 1;
                                            let lhs = &self.fsym(f, c, dd, e, g, l)
                                                * &self.fsym(a, b, l, e, f, k);
                                            let mut rhs = CycScalar::zero();
                                            for &h in self.channels(b, c) {
                                                let t = &(&self.fsym(a, b, c, g, f, h)
                                                    * &self.fsym(a, h, dd, e, g, k))
                                                    * &self.fsym(b, c, dd, k, h, l);
                                                rhs += &t;
                                            }
                                            if lhs != rhs {
                                                fail(
                                                    &mut rep,
                                                    "pentagon",
                                                    &[a, b, c, dd, e, f, g, k, l],
                                                    format!("{lhs} != {rhs}"),
                                                );
                                            }
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }

        if self.is_braided() {
            for (key, r) in self.rsym.as_ref().unwrap() {
                if r.is_zero() {
                    fail(&mut rep, "R-invertible", &key.map(|x| x as usize), "zero R-symbol".into());
                }
            }
            for inverse in [false, true] {
                let axiom = if inverse { "hexagon2" } else { "hexagon1" };
                let rr = |x: usize, y: usize, z: usize| -> CycScalar {
                    if inverse {
                        self.rsym(y, x, z).inv().unwrap_or_else(|_| CycScalar::zero())
                    } else {
                        self.rsym(x, y, z)
                    }
                };
                for a in 0..n {
                    for b in 0..n {
                        for c in 0..n {
                            for d in 0..n {
                                let es = self.left_channels(a, b, c, d);
                                if es.is_empty() {
                                    continue;
                                }
                                let gs = self.right_channels(b, c, a, d);
                                for &e in &es {
                                    for &g in &gs {
                                        rep.checks += 1;
                                        let mut lhs = CycScalar::zero();
                                        for f in self.right_channels(a, b, c, d) {
                                            let t = &(&self.fsym(a, b, c, d, e, f) * &rr(a, f, d))
                                                * &self.fsym(b, c, a, d, f, g);
                                            lhs += &t;
                                        }
                                        let rhs = &(&rr(a, b, e) * &self.fsym(b, a, c, d, e, g))
                                            * &rr(a, c, g);
                                        if lhs != rhs {
                                            fail(
                                                &mut rep,
                                                axiom,
                                                &[a, b, c, d, e, g],
                                                format!("{lhs} != {rhs}"),
                                            );
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }

        // Zigzag identities for (u_x, v_x).
        for x in 0..n {
            let xd = self.dual[x];
            let uv = &self.cup[x] * &self.cap[x];
            rep.checks += 2;
            let z1 = &uv * &self.fsym(x, xd, x, x, u, u);
            if !z1.is_one() {
                fail(&mut rep, "zigzag1", &[x], format!("evaluates to {z1}"));
            }
            let z2 = &uv * &self.finv(xd, x, xd, xd, u, u);
            if !z2.is_one() {
                fail(&mut rep, "zigzag2", &[x], format!("evaluates to {z2}"));
            }
        }
        rep
    }
}

impl PartialEq for FusionData {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
            && self.unit == other.unit
            && self.dual == other.dual
            && self.fusion == other.fusion
            && self.fsym == other.fsym
            && self.rsym == other.rsym
            && self.cup == other.cup
            && self.cap == other.cap
    }
}
