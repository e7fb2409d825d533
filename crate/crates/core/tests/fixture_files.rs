use std::path::PathBuf;

use enriched_center::fixtures;
use enriched_center::format::{category_to_toml, load_base, parse_category};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

#[test]
fn shipped_files_match_builtin_fixtures() {
    let pairs = [
        ("trivial.toml", fixtures::trivial()),
        ("z2triv.toml", fixtures::z2_symmetric()),
        ("z2z2triv.toml", fixtures::z2z2_symmetric()),
        ("toric_code.toml", fixtures::toric_code()),
        ("z3.toml", fixtures::z3()),
        ("z4.toml", fixtures::z4()),
        ("z5.toml", fixtures::z5()),
        ("fib.toml", fixtures::fibonacci()),
        ("semion.toml", fixtures::semion()),
    ];
    for (file, expected) in pairs {
        let loaded = load_base(&fixture(file)).unwrap().into_data();
        assert_eq!(loaded, expected, "{file}");
        assert!(loaded.validate().is_valid(), "{file}");
    }
}

#[test]
fn emitted_files_revalidate() {
    for c in fixtures::all() {
        let text = category_to_toml(&c);
        let back = parse_category(&text).unwrap();
        assert!(back.validate().is_valid());
        assert_eq!(category_to_toml(&back), text);
    }
}

#[test]
fn toric_code_qform_matches_bicharacter() {
    let m = match load_base(&fixture("toric_code.toml")).unwrap() {
        enriched_center::format::BaseFile::Metric(m) => m,
        _ => panic!("expected a metric group file"),
    };
    assert_eq!(m.qform, m.bichar.quadratic_form());
    assert!(m.qform.is_nondegenerate());
}

#[test]
fn functor_files_parse() {
    use enriched_center::canonical::CentralFunctor;
    use enriched_center::format::parse_functor;
    use enriched_center::Error;
    use std::sync::Arc;

    let z3 = Arc::new(fixtures::z3());
    let text = std::fs::read_to_string(fixture("psi_z3_explicit.toml")).unwrap();
    let psi = parse_functor(&text, Some(z3.clone()), z3.clone()).unwrap();
    let canon = CentralFunctor::canonical(z3.clone()).unwrap();
    for w in 0..3 {
        assert_eq!(psi.half_braiding(w), canon.half_braiding(w));
    }
    assert_eq!(enriched_center::format::functor_to_toml(&psi), text);

    let broken = text.replace("\"1\" = [\"2/3\"]", "\"1\" = [\"1/3\"]");
    assert!(matches!(parse_functor(&broken, Some(z3.clone()), z3.clone()), Err(Error::Axiom(_))));
    assert!(matches!(parse_functor(&text, None, z3.clone()), Err(Error::Schema(_))));
    let unknown = "[functor]\nkind = \"lax\"\n";
    assert!(matches!(parse_functor(unknown, None, z3.clone()), Err(Error::Schema(_))));

    let z4 = Arc::new(fixtures::z4());
    let text = std::fs::read_to_string(fixture("psi_mueger.toml")).unwrap();
    let psi = parse_functor(&text, None, z4).unwrap();
    assert_eq!(psi.on_objects(), &[0, 2]);
}
