use std::sync::Arc;

use enriched_center::basecat::{BlockMorphism, FusionData, MultObject};
use enriched_center::center::{
    canonical_half_braiding, center_category, center_hom, solve_half_braidings,
    transparent_subobject, verify_half_braiding, HalfBraiding, SolveOptions,
};
use enriched_center::enriched::{EnrichedCategory, SelfEnriched, Semisimple};
use enriched_center::fixtures;
use enriched_center::linalg::Matrix;
use enriched_center::scalar::CycScalar;

fn sharp(c: FusionData) -> Arc<SelfEnriched> {
    Arc::new(SelfEnriched::new(Arc::new(c)).unwrap())
}

fn canonical_objects(s: &SelfEnriched) -> Vec<HalfBraiding<MultObject>> {
    s.simple_objects()
        .iter()
        .map(|x| canonical_half_braiding(s, x))
        .collect()
}

#[test]
fn center_homs_are_transparent_parts() {
    for c in fixtures::all() {
        let s = sharp(c.clone());
        let objs = canonical_objects(&s);
        for hx in &objs {
            for hy in &objs {
                let got = center_hom(&*s, hx, hy);
                let want = transparent_subobject(&c, &s.hom(&hx.object, &hy.object)).unwrap();
                assert_eq!(got, want, "{} {:?} {:?}", c.name(), hx.object, hy.object);
            }
        }
    }
}

/// Dimension of `{f: x -> y | (1 (x) f) c_{x,z} = c_{y,z} (f (x) 1)}` over all simple `z`.
fn intertwiner_dim(b: &FusionData, x: &MultObject, y: &MultObject) -> usize {
    let mut basis = Vec::new();
    for s in 0..b.n() {
        for r in 0..y.mult(s) {
            for col in 0..x.mult(s) {
                let mut f = BlockMorphism::zero(x, y);
                f.set_entry(s, r, col, CycScalar::one());
                basis.push(f);
            }
        }
    }
    if basis.is_empty() {
        return 0;
    }
    let mut rows: Vec<Vec<CycScalar>> = Vec::new();
    for z in 0..b.n() {
        let z = b.simple_object(z);
        let idz = BlockMorphism::identity(&z);
        let cols: Vec<Vec<CycScalar>> = basis
            .iter()
            .map(|f| {
                let d = b
                    .tensor_mor(&idz, f)
                    .compose(&b.braid(x, &z))
                    .sub(&b.braid(y, &z).compose(&b.tensor_mor(f, &idz)));
                d.blocks()
                    .iter()
                    .flat_map(|m| (0..m.rows()).flat_map(move |r| m.row(r).to_vec()))
                    .collect()
            })
            .collect();
        for r in 0..cols[0].len() {
            rows.push(cols.iter().map(|c| c[r].clone()).collect());
        }
    }
    basis.len() - Matrix::from_rows(rows).rank()
}

#[test]
fn unit_block_counts_intertwiners() {
    for c in fixtures::all() {
        let s = sharp(c.clone());
        let objs = canonical_objects(&s);
        for hx in &objs {
            for hy in &objs {
                let got = center_hom(&*s, hx, hy).object().mult(c.unit());
                assert_eq!(got, intertwiner_dim(&c, &hx.object, &hy.object), "{}", c.name());
            }
        }
    }
}

#[test]
fn degenerate_z4_pattern() {
    let c = fixtures::z4();
    let s = sharp(c.clone());
    let objs = canonical_objects(&s);
    for (x, hx) in objs.iter().enumerate() {
        for (y, hy) in objs.iter().enumerate() {
            let nonzero = !center_hom(&*s, hx, hy).is_zero();
            assert_eq!(nonzero, [0, 2].contains(&((y + 4 - x) % 4)));
        }
    }
}

#[test]
fn canonical_half_braidings_verify_and_perturbations_fail() {
    let s = sharp(fixtures::z4());
    for hb in canonical_objects(&s) {
        assert!(verify_half_braiding(&*s, &hb).is_ok());
    }
    let mut hb = canonical_half_braiding(&s, &s.simple(1));
    hb.components[2] = hb.components[2].scale(&CycScalar::from_integer(-1));
    let rep = verify_half_braiding(&*s, &hb);
    assert!(rep.failures.iter().any(|f| f.contains("multiplicativity")), "{:?}", rep.failures);
}

#[test]
fn half_braidings_of_self_enrichment_are_unique() {
    for c in [fixtures::z5(), fixtures::fibonacci(), fixtures::z2_symmetric(), fixtures::trivial()] {
        let s = sharp(c.clone());
        for x in s.simple_objects() {
            let sols = solve_half_braidings(&*s, &x, SolveOptions::for_category(&*s)).unwrap();
            assert_eq!(sols, vec![canonical_half_braiding(&s, &x)], "{} {:?}", c.name(), x);
        }
    }
}

#[test]
fn tiny_budget_is_a_resource_error() {
    let s = sharp(fixtures::z5());
    let opts = SolveOptions { order: 5, node_budget: 0 };
    let err = solve_half_braidings(&*s, &s.simple(1), opts).unwrap_err();
    assert!(matches!(err, enriched_center::Error::Resource(_)));
}

#[test]
fn center_of_nondegenerate_self_enrichment_is_braided() {
    for c in [fixtures::z5(), fixtures::fibonacci(), fixtures::toric_code()] {
        let s = sharp(c.clone());
        let z = center_category(s.clone(), canonical_objects(&s)).unwrap();
        let rep = z.verify_braided();
        assert!(rep.is_ok(), "{}: {:?}", c.name(), &rep.failures[..rep.failures.len().min(5)]);
        for i in z.given_objects() {
            for j in z.given_objects() {
                let h = z.hom(&i, &j);
                let expect = if i == j { c.unit_object() } else { MultObject::zero(c.n()) };
                assert_eq!(h, expect);
            }
        }
    }
}
