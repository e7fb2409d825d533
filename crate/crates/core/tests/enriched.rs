use std::sync::Arc;

use enriched_center::basecat::{BlockMorphism, MultObject};
use enriched_center::enriched::{
    is_commutative, reverse, underlying_dim, verify_category, verify_functor, verify_monoidal, Algebra,
    EnrichedCategory, EnrichedFunctor, EnrichedTable, Product, SelfEnriched, Semisimple,
    SingleObject, TensorFunctor,
};
use enriched_center::fixtures;

fn sharp(name: &str) -> Arc<SelfEnriched> {
    let b = Arc::new(fixtures::by_name(name).unwrap());
    Arc::new(SelfEnriched::new(b).unwrap())
}

#[test]
fn self_enrichment_is_a_monoidal_enriched_category() {
    for c in fixtures::all() {
        let name = c.name().to_string();
        let s = sharp(&name);
        let objs = s.simple_objects();
        let rep = verify_monoidal(&s, &objs);
        assert!(rep.is_ok(), "{name}: {:?}", &rep.failures[..rep.failures.len().min(5)]);
        assert!(rep.checks > 0);
    }
}

#[test]
fn self_enrichment_on_a_composite_object() {
    let s = sharp("fibonacci");
    let b = s.base();
    let (tau, sum) = (b.simple_object(1), MultObject::from_mults(vec![1, 1]));
    let objs = vec![tau.clone(), sum.clone()];
    let rep = verify_category(&*s, &objs);
    assert!(rep.is_ok(), "{:?}", rep.failures);
    let tf = TensorFunctor::new(s.clone());
    let pairs = vec![(tau.clone(), sum.clone()), (sum, tau)];
    let rep = verify_functor(&tf, &pairs);
    assert!(rep.is_ok(), "{:?}", rep.failures);
}

#[test]
fn underlying_hom_counts_base_morphisms() {
    for c in fixtures::all() {
        let s = sharp(c.name());
        for x in 0..c.n() {
            for y in 0..c.n() {
                let d = underlying_dim(&*s, &c.simple_object(x), &c.simple_object(y));
                assert_eq!(d, usize::from(x == y), "{} {x} {y}", c.name());
            }
        }
    }
}

#[test]
fn name_and_unname_are_inverse() {
    let s = sharp("fibonacci");
    let b = s.base();
    let tau = b.simple_object(1);
    let tt = b.tensor(&tau, &tau);
    let f = b.braid(&tau, &tau);
    assert_eq!(s.unname(&tt, &tt, &s.name(&f)), f);
}

#[test]
fn tensor_commutes_for_symmetric_base_only() {
    let z2 = sharp("z2");
    let tf = TensorFunctor::new(z2.clone());
    let objs = z2.simple_objects();
    assert!(is_commutative(&tf, &objs, &objs).is_ok());

    let fib = sharp("fibonacci");
    let tf = TensorFunctor::new(fib.clone());
    let objs = fib.simple_objects();
    assert!(!is_commutative(&tf, &objs, &objs).is_ok());
    assert!(reverse(tf, &objs, &objs).is_err());
}

#[test]
fn reversing_twice_recovers_the_functor() {
    let z2 = sharp("z2z2");
    let objs = z2.simple_objects();
    let tf = TensorFunctor::new(z2.clone());
    let r = reverse(TensorFunctor::new(z2.clone()), &objs, &objs).unwrap();
    assert!(is_commutative(&r, &objs, &objs).is_ok());
    let rr = reverse(r, &objs, &objs).unwrap();
    for x in &objs {
        for y in &objs {
            for x2 in &objs {
                for y2 in &objs {
                    let (s, t) = ((x.clone(), y.clone()), (x2.clone(), y2.clone()));
                    assert_eq!(rr.on_hom(&s, &t), tf.on_hom(&s, &t));
                }
            }
        }
    }
}

#[test]
fn product_homs_fuse() {
    let s = sharp("z4");
    let p = Product::new(s.clone(), s.clone());
    let b = s.base();
    let objs: Vec<_> = s.simple_objects();
    for x in &objs {
        for y in &objs {
            for x2 in &objs {
                for y2 in &objs {
                    let (a, c) = (x.as_simple().unwrap() as i64, y.as_simple().unwrap() as i64);
                    let (a2, c2) = (x2.as_simple().unwrap() as i64, y2.as_simple().unwrap() as i64);
                    let want = b.simple_object(((a2 - a) + (c2 - c)).rem_euclid(4) as usize);
                    assert_eq!(p.hom(&(x.clone(), y.clone()), &(x2.clone(), y2.clone())), want);
                }
            }
        }
    }
    let pairs: Vec<_> = objs
        .iter()
        .flat_map(|x| objs.iter().map(move |y| (x.clone(), y.clone())))
        .collect();
    assert!(verify_category(&p, &pairs[..6]).is_ok());
}

#[test]
fn group_algebra_gives_one_object_category() {
    let b = Arc::new(fixtures::z2_symmetric());
    let a = Algebra::group_algebra(&b, &[0, 1]).unwrap();
    let c = Arc::new(SingleObject::monoidal(b.clone(), a).unwrap());
    assert!(c.is_commutative());
    assert!(verify_monoidal(&c, &[()]).is_ok());

    let toric = Arc::new(fixtures::toric_code());
    let e = toric.index_of("e").unwrap();
    let a = Algebra::group_algebra(&toric, &[0, e]).unwrap();
    assert!(SingleObject::monoidal(toric.clone(), a).is_ok());

    let t = Arc::new(fixtures::trivial());
    let c = Arc::new(SingleObject::monoidal(t.clone(), Algebra::trivial(&t)).unwrap());
    assert!(verify_monoidal(&c, &[()]).is_ok());
}

#[test]
fn noncommutative_or_broken_algebras_are_rejected() {
    let b = Arc::new(fixtures::z4());
    // Z/4 with i^{ab}: the subgroup {0, 2} has c(2, 2) = 1, the full group does not.
    let a = Algebra::group_algebra(&b, &[0, 1, 2, 3]).unwrap();
    assert!(SingleObject::new(b.clone(), a.clone()).is_ok());
    assert!(SingleObject::monoidal(b.clone(), a.clone()).is_err());

    let mut broken = a;
    broken.mult = broken.mult.scale(&enriched_center::scalar::CycScalar::from_integer(2));
    assert!(SingleObject::new(b, broken).is_err());
}

#[test]
fn table_round_trips_through_json() {
    let s = sharp("fibonacci");
    let base = s.base_arc().clone();
    let objs = s.simple_objects();
    let t = EnrichedTable::from_category(&*s, base.clone(), &objs);
    let json = serde_json::to_string(&t).unwrap();
    let back: EnrichedTable = serde_json::from_str(&json).unwrap();
    let back = back.attach(base).unwrap();
    assert_eq!(back, t);
    let idx: Vec<usize> = (0..objs.len()).collect();
    assert!(verify_category(&back, &idx).is_ok());
    let _: &BlockMorphism = &back.ident[0];
}
