use enriched_center::basecat::FusionData;
use enriched_center::canonical::centralizer;
use enriched_center::fixtures;
use enriched_center::metricgroup::{pointed_fusion_data, Bichar, FinAbGroup};
use enriched_center::scalar::{CycScalar, Phase};
use num_integer::gcd;
use proptest::prelude::*;

/// `sum_k c_k exp(2 pi i p_k / q_k)` with small integer coefficients.
fn scalar() -> impl Strategy<Value = CycScalar> {
    prop::collection::vec((-3i64..=3, 0i64..24, prop::sample::select(vec![1i64, 2, 3, 4, 5, 6, 8, 12])), 1..4)
        .prop_map(|terms| {
            let mut s = CycScalar::zero();
            for (c, p, q) in terms {
                s += &(&CycScalar::from_integer(c) * &CycScalar::root_of_unity(p, q).unwrap());
            }
            s
        })
}

/// A random bicharacter on `Z/n1 x Z/n2` and its pointed braided category.
fn pointed() -> impl Strategy<Value = (Bichar, FusionData)> {
    (prop::sample::select(vec![1i64, 2, 3, 4]), prop::sample::select(vec![1i64, 2, 3, 4, 6]))
        .prop_flat_map(|(n1, n2)| {
            let orders = vec![n1, n2];
            let ks = prop::collection::vec(0i64..12, 4);
            (Just(orders), ks)
        })
        .prop_map(|(orders, ks)| {
            let g = FinAbGroup::new(orders.clone()).unwrap();
            let gens = (0..2)
                .map(|i| {
                    (0..2)
                        .map(|j| {
                            let d = gcd(orders[i], orders[j]);
                            Phase::new(ks[2 * i + j] % d, d).unwrap()
                        })
                        .collect()
                })
                .collect();
            let c = Bichar::from_generators(g, gens).unwrap();
            let data = pointed_fusion_data("random", &c).unwrap();
            (c, data)
        })
}

fn subset(n: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(any::<bool>(), n).prop_map(|m| (0..m.len()).filter(|&i| m[i]).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn roots_of_unity_have_dividing_order(n in 1i64..40, p in 0i64..40) {
        let p = p % n;
        let z = CycScalar::root_of_unity(p, n).unwrap();
        prop_assert!(z.pow(n).unwrap().is_one());
        let (_, q) = z.as_root_of_unity().unwrap();
        prop_assert_eq!(n % q, 0);
        prop_assert!((&z.conj() * &z).is_one());
    }

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a.inv().unwrap() * &a).is_one());
        }
    }

    #[test]
    fn random_pointed_data_validates((_c, d) in pointed()) {
        let v = d.validate();
        prop_assert!(v.is_valid(), "{:?}", v.failures);
    }

    #[test]
    fn monodromy_is_the_polar_form((c, d) in pointed()) {
        let q = c.quadratic_form();
        let g = c.group();
        for a in g.elements() {
            for b in g.elements() {
                let (x, y) = (g.index(&a), g.index(&b));
                let m = d.monodromy(x, y).unwrap();
                let xy = d.tensor(&d.simple_object(x), &d.simple_object(y));
                let polar = (q.eval(&g.add(&a, &b)) - q.eval(&a)) - q.eval(&b);
                let want = enriched_center::basecat::BlockMorphism::identity(&xy).scale(&polar.to_scalar());
                prop_assert_eq!(&m, &want);
                prop_assert_eq!(m.is_identity(), d.monodromy(y, x).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn radical_is_the_transparent_subgroup((c, d) in pointed()) {
        let q = c.quadratic_form();
        let g = c.group();
        let rad = q.radical();
        prop_assert!(g.is_subgroup(&rad));
        for x in &rad {
            for y in &rad {
                prop_assert_eq!(q.eval(&g.add(x, y)), q.eval(x) + q.eval(y));
            }
        }
        let mut idx: Vec<usize> = rad.iter().map(|e| g.index(e)).collect();
        idx.sort_unstable();
        prop_assert_eq!(idx, d.mueger_center());
    }

    #[test]
    fn double_orthogonal_complement_contains_the_subgroup((c, _d) in pointed(), k in 0usize..24) {
        let q = c.quadratic_form();
        let g = q.group().clone();
        let gen = g.element(k % g.size());
        let h: Vec<_> = (0..g.size() as i64).map(|n| g.times(n, &gen)).collect::<std::collections::BTreeSet<_>>().into_iter().collect();
        let perp = q.orthogonal_complement(&h).unwrap();
        let back = q.orthogonal_complement(&perp).unwrap();
        for e in &h {
            prop_assert!(back.contains(e));
        }
        if q.is_nondegenerate() {
            prop_assert_eq!(back.len(), h.len());
        }
    }

    #[test]
    fn centralizer_is_antitone_and_closed((_c, d) in pointed(), s in subset(24), t in subset(24)) {
        let n = d.n();
        let s: Vec<usize> = s.into_iter().filter(|&i| i < n).collect();
        let st: Vec<usize> = s.iter().copied().chain(t.into_iter().filter(|&i| i < n)).collect();
        let cs = centralizer(&d, &s).unwrap();
        let cst = centralizer(&d, &st).unwrap();
        prop_assert!(cst.iter().all(|x| cs.contains(x)));
        let double = centralizer(&d, &cs).unwrap();
        prop_assert!(s.iter().all(|x| double.contains(x)));
        prop_assert_eq!(centralizer(&d, &double).unwrap(), cs);
    }
}

#[test]
fn monodromy_symmetry_on_fixtures() {
    for c in fixtures::all().into_iter().filter(|c| c.require_braided().is_ok()) {
        for x in 0..c.n() {
            for y in 0..c.n() {
                assert_eq!(
                    c.monodromy(x, y).unwrap().is_identity(),
                    c.monodromy(y, x).unwrap().is_identity(),
                    "{} ({x}, {y})",
                    c.name()
                );
            }
        }
    }
}
