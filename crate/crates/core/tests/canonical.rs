use std::sync::Arc;

use enriched_center::basecat::MultObject;
use enriched_center::canonical::{
    canonical_enrich, compare_with_self_enrichment, internal_hom, CentralFunctor,
};
use enriched_center::enriched::{verify_monoidal, EnrichedCategory, Semisimple};
use enriched_center::fixtures;

fn simples(c: &enriched_center::basecat::FusionData) -> Vec<MultObject> {
    (0..c.n()).map(|a| c.simple_object(a)).collect()
}

#[test]
fn canonical_functor_reproduces_self_enrichment() {
    for c in fixtures::all() {
        let b = Arc::new(c);
        let rep = compare_with_self_enrichment(b.clone(), &simples(&b)).unwrap();
        assert!(rep.is_ok(), "{}: {:?}", b.name(), &rep.failures[..rep.failures.len().min(4)]);
    }
}

#[test]
fn canonical_enrichment_is_monoidal() {
    for name in ["fibonacci", "z4", "semion"] {
        let b = Arc::new(fixtures::by_name(name).unwrap());
        let c = canonical_enrich(Arc::new(CentralFunctor::canonical(b).unwrap()));
        let rep = verify_monoidal(&c, &c.simple_objects());
        assert!(rep.is_ok(), "{name}: {:?}", &rep.failures[..rep.failures.len().min(4)]);
    }
}

#[test]
fn fibonacci_internal_hom() {
    let b = Arc::new(fixtures::fibonacci());
    let psi = Arc::new(CentralFunctor::canonical(b.clone()).unwrap());
    let h = internal_hom(&psi, &b.simple_object(1), &b.simple_object(0)).unwrap();
    assert_eq!(h.value, b.simple_object(1));
    for x in 0..b.n() {
        let h = internal_hom(&psi, &b.simple_object(x), &b.simple_object(x)).unwrap();
        assert!(h.value.mult(b.unit()) >= 1);
    }
}

#[test]
fn ordinary_centers_of_pointed_categories() {
    use enriched_center::canonical::{ordinary_center, OrdinaryOptions};
    for (name, want) in [("trivial", 1), ("z2", 4), ("z3", 9), ("z4", 16), ("z5", 25)] {
        let c = fixtures::by_name(name).unwrap();
        let t = std::time::Instant::now();
        let z = ordinary_center(&c, OrdinaryOptions::for_category(&c)).unwrap();
        eprintln!("{name}: {} objects in {:?}", z.objects.len(), t.elapsed());
        assert_eq!(z.objects.len(), want, "{name}");
        for (i, row) in z.hom_dims.iter().enumerate() {
            for (j, &d) in row.iter().enumerate() {
                assert_eq!(d, usize::from(i == j), "{name} {i} {j}");
            }
        }
    }
}

#[test]
fn generalized_center_on_pointed_categories() {
    use enriched_center::canonical::verify_generalized_center;
    let cases = [
        ("z3", CentralFunctor::canonical(Arc::new(fixtures::z3())).unwrap(), 3),
        ("z5", CentralFunctor::canonical(Arc::new(fixtures::z5())).unwrap(), 5),
        ("z4", CentralFunctor::mueger_inclusion(Arc::new(fixtures::z4())).unwrap(), 8),
    ];
    for (name, psi, want) in cases {
        let t = std::time::Instant::now();
        let rep = verify_generalized_center(Arc::new(psi)).unwrap();
        eprintln!("{name}: {:?} {:?} {:?}", rep.enriched_center, rep.centralizer, t.elapsed());
        assert!(rep.passes(), "{name}: {rep:#?}");
        assert_eq!(rep.enriched_center.len(), want, "{name}");
    }
}

#[test]
fn centralizers_match_orthogonal_complements() {
    use enriched_center::canonical::centralizer;
    use enriched_center::metricgroup::{pointed_fusion_data, Bichar, FinAbGroup};
    use enriched_center::scalar::Phase;
    let z4 = Bichar::from_generators(FinAbGroup::new(vec![4]).unwrap(), vec![vec![Phase::new(1, 4).unwrap()]]).unwrap();
    for form in [fixtures::toric_code_bichar(), z4] {
        let e = pointed_fusion_data("e", &form).unwrap();
        let g = form.group().clone();
        let q = form.quadratic_form();
        for a in g.elements() {
            for b in g.elements() {
                let mut h = vec![g.zero()];
                for k in 0..4 {
                    for l in 0..4 {
                        let x = g.add(&g.times(k, &a), &g.times(l, &b));
                        if !h.contains(&x) {
                            h.push(x);
                        }
                    }
                }
                let s: Vec<usize> = h.iter().map(|x| g.index(x)).collect();
                let mut want: Vec<usize> = q.orthogonal_complement(&h).unwrap().iter().map(|x| g.index(x)).collect();
                want.sort_unstable();
                assert_eq!(centralizer(&e, &s).unwrap(), want, "{:?}", h);
            }
        }
    }
}

#[test]
fn centralizer_extremes() {
    use enriched_center::canonical::centralizer;
    for c in fixtures::all() {
        let all: Vec<usize> = (0..c.n()).collect();
        assert_eq!(centralizer(&c, &[c.unit()]).unwrap(), all);
        assert_eq!(centralizer(&c, &all).unwrap(), c.mueger_center());
    }
    let fib = fixtures::fibonacci();
    assert_eq!(centralizer(&fib, &[1]).unwrap(), vec![0]);
    assert!(centralizer(&fib, &[7]).is_err());
}

#[test]
fn trivial_source_recovers_linear_structure() {
    let c = Arc::new(fixtures::fibonacci());
    let psi = Arc::new(CentralFunctor::from_trivial(c.clone()).unwrap());
    let e = canonical_enrich(psi);
    let objs = vec![c.simple_object(0), c.simple_object(1), MultObject::from_mults(vec![1, 2])];
    for x in &objs {
        for y in &objs {
            let want: usize = (0..c.n()).map(|s| x.mult(s) * y.mult(s)).sum();
            assert_eq!(e.hom(x, y), MultObject::from_mults(vec![want]));
        }
    }
    assert!(enriched_center::enriched::verify_category(&*e, &objs).is_ok());
}

#[test]
fn malformed_central_functors_are_rejected() {
    let b = Arc::new(fixtures::z5());
    let psi = CentralFunctor::canonical(b.clone()).unwrap();
    // The braiding itself, rather than its reverse, is not a braided functor from the reverse.
    let wrong: Vec<Vec<_>> = (0..b.n())
        .map(|x| (0..b.n()).map(|z| b.braid(&b.simple_object(x), &b.simple_object(z))).collect())
        .collect();
    assert!(CentralFunctor::new(b.clone(), b.clone(), (0..5).collect(), wrong).is_err());
    let mut scaled: Vec<Vec<_>> = (0..b.n()).map(|w| psi.half_braiding(w).to_vec()).collect();
    scaled[1][2] = scaled[1][2].scale(&enriched_center::scalar::CycScalar::from_integer(-1));
    assert!(CentralFunctor::new(b.clone(), b.clone(), (0..5).collect(), scaled).is_err());
    assert!(CentralFunctor::new(b.clone(), b.clone(), vec![0, 1, 1, 3, 4], psi_half(&psi)).is_err());
    let fib = Arc::new(fixtures::fibonacci());
    assert!(CentralFunctor::inclusion(fib, &[1], None).is_err());
}

fn psi_half(psi: &CentralFunctor) -> Vec<Vec<enriched_center::basecat::BlockMorphism>> {
    (0..psi.source().n()).map(|w| psi.half_braiding(w).to_vec()).collect()
}

#[test]
fn generalized_center_on_fibonacci_simple_carriers() {
    use enriched_center::canonical::verify_generalized_center;
    let psi = CentralFunctor::canonical(Arc::new(fixtures::fibonacci())).unwrap();
    let rep = verify_generalized_center(Arc::new(psi)).unwrap();
    assert!(rep.passes(), "{rep:#?}");
    assert_eq!(rep.enriched_center.len(), 2);
    assert!(rep.corollary.is_some());
}

#[test]
fn symmetric_source_flags_the_corollary_inapplicable() {
    use enriched_center::canonical::verify_generalized_center;
    let psi = CentralFunctor::canonical(Arc::new(fixtures::z2_symmetric())).unwrap();
    let rep = verify_generalized_center(Arc::new(psi)).unwrap();
    assert!(rep.passes(), "{rep:#?}");
    assert!(rep.corollary.is_none());
    // The image is {(g, trivial character)}, which is its own centralizer among the four.
    assert_eq!(rep.ordinary_center_size, 4);
    assert_eq!(rep.enriched_center.len(), 2);
}
