//! Small braided fusion categories used throughout the tests and the CLI.

use std::collections::HashMap;

use num_rational::BigRational;

use crate::basecat::{FusionData, FusionTables};
use crate::error::Result;
use crate::metricgroup::{pointed_fusion_data, pointed_fusion_data_labeled, Bichar, FinAbGroup};
use crate::scalar::{CycScalar, Phase};

fn ph(p: i64, q: i64) -> Phase {
    Phase::new(p, q).expect("positive denominator")
}

fn cyclic_bichar(n: i64, p: i64) -> Bichar {
    let g = FinAbGroup::new(vec![n]).expect("positive order");
    Bichar::from_generators(g, vec![vec![ph(p, n)]]).expect("biadditive")
}

/// `Vec` with its unique simple.
pub fn trivial() -> FusionData {
    let c = Bichar::from_generators(FinAbGroup::new(vec![]).unwrap(), vec![]).unwrap();
    pointed_fusion_data_labeled("trivial", &c, vec!["1".into()]).unwrap()
}

/// `Z/n` with `c(a, b) = p a b / n`.
pub fn cyclic(name: &str, n: i64, p: i64) -> FusionData {
    pointed_fusion_data(name, &cyclic_bichar(n, p)).unwrap()
}

pub fn z2_symmetric() -> FusionData {
    cyclic("z2", 2, 0)
}

pub fn z2z2_symmetric() -> FusionData {
    let g = FinAbGroup::new(vec![2, 2]).unwrap();
    let c = Bichar::from_generators(g, vec![vec![ph(0, 1); 2]; 2]).unwrap();
    pointed_fusion_data("z2z2", &c).unwrap()
}

/// `Z/2 x Z/2` with labels `1, m, e, em` and `c(e, m) = 1/2`.
pub fn toric_code() -> FusionData {
    let labels = ["1", "m", "e", "em"].map(String::from).to_vec();
    pointed_fusion_data_labeled("toric_code", &toric_code_bichar(), labels).unwrap()
}

pub fn toric_code_bichar() -> Bichar {
    // Coordinates (e, m): generator 0 is e, generator 1 is m.
    let g = FinAbGroup::new(vec![2, 2]).unwrap();
    Bichar::from_generators(g, vec![vec![ph(0, 1), ph(1, 2)], vec![ph(0, 1), ph(0, 1)]]).unwrap()
}

/// `Z/4` with `R(a, b) = i^{ab}`; Mueger center `{0, 2}`.
pub fn z4() -> FusionData {
    cyclic("z4", 4, 1)
}

/// `Z/5` with `c(a, b) = 3ab/5`; nondegenerate.
pub fn z5() -> FusionData {
    cyclic("z5", 5, 3)
}

/// `Z/3` with `c(a, b) = ab/3`; nondegenerate.
pub fn z3() -> FusionData {
    cyclic("z3", 3, 1)
}

/// `phi^{-1} = zeta_5 + zeta_5^4`.
pub fn golden_inverse() -> CycScalar {
    let z = |k| CycScalar::root_of_unity(k, 5).unwrap();
    &z(1) + &z(4)
}

/// Fibonacci category in a gauge where every symbol lies in `Q(zeta_10)`.
pub fn fibonacci() -> FusionData {
    let (one, tau) = (0, 1);
    let p = golden_inverse();
    let mut fsym = HashMap::new();
    fsym.insert([tau, tau, tau, one, tau, tau], CycScalar::one());
    fsym.insert([tau, tau, tau, tau, one, one], p.clone());
    fsym.insert([tau, tau, tau, tau, one, tau], CycScalar::one());
    fsym.insert([tau, tau, tau, tau, tau, one], p.clone());
    fsym.insert([tau, tau, tau, tau, tau, tau], -&p);
    let mut rsym = HashMap::new();
    for a in [one, tau] {
        for b in [one, tau] {
            if a == one || b == one {
                rsym.insert([a, b, a.max(b)], CycScalar::one());
            }
        }
    }
    rsym.insert([tau, tau, one], CycScalar::root_of_unity(3, 5).unwrap());
    rsym.insert([tau, tau, tau], CycScalar::root_of_unity(3, 10).unwrap());
    FusionData::new(FusionTables {
        name: "fibonacci".into(),
        labels: vec!["1".into(), "tau".into()],
        unit: one,
        dual: vec![one, tau],
        fusion: vec![(tau, tau, one), (tau, tau, tau)],
        fsym,
        rsym: Some(rsym),
        cupcap: None,
    })
    .unwrap()
}

/// Semion category: `F^{sss}_s = -1`, `R^{ss}_1 = i`.
pub fn semion() -> FusionData {
    let (one, s) = (0, 1);
    let mut fsym = HashMap::new();
    fsym.insert([s, s, s, s, one, one], CycScalar::from_integer(-1));
    let mut rsym = HashMap::new();
    rsym.insert([one, one, one], CycScalar::one());
    rsym.insert([one, s, s], CycScalar::one());
    rsym.insert([s, one, s], CycScalar::one());
    rsym.insert([s, s, one], CycScalar::root_of_unity(1, 4).unwrap());
    FusionData::new(FusionTables {
        name: "semion".into(),
        labels: vec!["1".into(), "s".into()],
        unit: one,
        dual: vec![one, s],
        fusion: vec![(s, s, one)],
        fsym,
        rsym: Some(rsym),
        cupcap: None,
    })
    .unwrap()
}

/// Every valid base fixture, by name.
pub fn all() -> Vec<FusionData> {
    vec![
        trivial(),
        z2_symmetric(),
        z2z2_symmetric(),
        toric_code(),
        z3(),
        z4(),
        z5(),
        fibonacci(),
        semion(),
    ]
}

pub fn by_name(name: &str) -> Option<FusionData> {
    all().into_iter().find(|c| c.name() == name)
}

/// One copy of the presentation per stored structure constant, with that entry doubled.
pub fn single_entry_perturbations(c: &FusionData) -> Vec<(String, Result<FusionData>)> {
    let two = CycScalar::from_rational(&BigRational::from_integer(2.into()));
    let base = c.to_tables();
    let mut out = Vec::new();
    for key in c.stored_f_keys() {
        let mut t = base.clone();
        let v = &t.fsym[key] * &two;
        t.fsym.insert(*key, v);
        out.push((format!("F{}", c.fmt_labels(key)), FusionData::new(t)));
    }
    for key in c.r_keys() {
        let mut t = base.clone();
        let r = t.rsym.as_mut().unwrap();
        let v = &r[&key] * &two;
        r.insert(key, v);
        out.push((format!("R{}", c.fmt_labels(&key)), FusionData::new(t)));
    }
    for x in 0..c.n() {
        for which in 0..2 {
            let mut t = base.clone();
            let cc = t.cupcap.as_mut().unwrap();
            if which == 0 {
                cc[x].0 = &cc[x].0 * &two;
            } else {
                cc[x].1 = &cc[x].1 * &two;
            }
            let name = if which == 0 { "cup" } else { "cap" };
            out.push((format!("{name}({})", c.label(x)), FusionData::new(t)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixtures_validate() {
        for c in all() {
            let rep = c.validate();
            assert!(rep.is_valid(), "{}: {:?}", c.name(), rep.failures);
        }
    }

    #[test]
    fn perturbations_fail() {
        for c in all() {
            for (what, p) in single_entry_perturbations(&c) {
                let p = p.unwrap();
                assert!(!p.validate().is_valid(), "{} {what} still valid", c.name());
            }
        }
    }
}
