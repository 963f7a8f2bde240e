use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use proptest::prelude::*;

use pythparam::inverse::{euclid_params, invert_sigma, preimage, preimage_positive, preimage_positive_16, Form};
use pythparam::param::{build_symbolic_f, eval_f, eval_positive_16, eval_positive_at, sigma, t1, t2};
use pythparam::verify::{enumerate_positive_triples, enumerate_triples, is_primitive};
use pythparam::{AdmissibleABC, ParamPoint4, Polynomial};

/// Hand expansion of the closed-form triple, variables (x, y, z, w) = (x1..x4).
const F_EXPANDED: &str = "x1*x2^2 - x1*x3^2 + 4*x1*x2*x3*x4 + x1*x3^2*x4^2 - x1*x2^2*x4^2 \
    - 1/2*x1*x2^2*x4 + 1/2*x1*x3^2*x4 - 2*x1*x2*x3*x4^2 - 1/2*x1*x3^2*x4^3 + 1/2*x1*x2^2*x4^3";
const G_EXPANDED: &str = "2*x1*x2*x3 - 2*x1*x2^2*x4 + 2*x1*x3^2*x4 - 2*x1*x2*x3*x4^2 - x1*x2*x3*x4 \
    + x1*x2^2*x4^2 - x1*x3^2*x4^2 + x1*x2*x3*x4^3";
const H_EXPANDED: &str = "x1*x2^2 + x1*x3^2 + x1*x3^2*x4^2 + x1*x2^2*x4^2 - 1/2*x1*x2^2*x4 \
    - 1/2*x1*x3^2*x4 - 1/2*x1*x3^2*x4^3 - 1/2*x1*x2^2*x4^3";

#[test]
fn symbolic_triple_matches_hand_expansion() {
    let s = build_symbolic_f();
    assert_eq!(s.f, Polynomial::parse(F_EXPANDED, 4).unwrap());
    assert_eq!(s.g, Polynomial::parse(G_EXPANDED, 4).unwrap());
    assert_eq!(s.h, Polynomial::parse(H_EXPANDED, 4).unwrap());
}

#[test]
fn canonical_text_is_stable() {
    let s = build_symbolic_f();
    assert_eq!(
        s.g.to_string(),
        "x1 * x2 * x3 * x4^3 + x1 * x2^2 * x4^2 - 2 * x1 * x2 * x3 * x4^2 - x1 * x3^2 * x4^2 \
         - 2 * x1 * x2^2 * x4 - x1 * x2 * x3 * x4 + 2 * x1 * x3^2 * x4 + 2 * x1 * x2 * x3"
    );
    for p in s.components() {
        assert_eq!(&Polynomial::parse(&p.to_string(), 4).unwrap(), p);
    }
}

fn point(v: [i64; 4]) -> ParamPoint4 {
    ParamPoint4::new(v[0], v[1], v[2], v[3])
}

#[test]
fn numeric_and_symbolic_agree_on_box() {
    let s = build_symbolic_f();
    for x in -5..=5 {
        for y in -5..=5 {
            for z in -5..=5 {
                for w in -5..=5 {
                    let p = point([x, y, z, w]);
                    let sym = s.eval(&p.to_vec()).unwrap();
                    assert_eq!(sym.to_integral(), Some(eval_f(&p)), "at {p}");
                }
            }
        }
    }
}

#[test]
fn sigma_reaches_every_admissible_triple() {
    for a in -30i64..=30 {
        for b in -30i64..=30 {
            for c in -30i64..=30 {
                if let Ok(abc) = AdmissibleABC::new(a, b, c) {
                    assert_eq!(sigma(&invert_sigma(&abc)), abc);
                }
            }
        }
    }
}

#[test]
fn round_trip_over_box() {
    for t in enumerate_triples(200, 200).unwrap() {
        assert_eq!(eval_f(&preimage(&t)), t);
    }
}

#[test]
fn positive_round_trips() {
    for t in enumerate_positive_triples(200, 200).unwrap() {
        let p = preimage_positive(&t).unwrap();
        assert_eq!(eval_positive_at(&p), t);
        let p16 = preimage_positive_16(&t, 1_000).unwrap();
        assert_eq!(eval_positive_16(&p16), t);
    }
}

#[test]
fn euclid_params_rebuild_primitive_triples() {
    let mut seen = 0;
    for t in enumerate_triples(500, 500).unwrap() {
        if !t.z().is_positive() || !is_primitive(&t) {
            continue;
        }
        let ep = euclid_params(&t).unwrap();
        let rebuilt = match ep.form {
            Form::T1 => t1(&ep.p, &ep.q),
            Form::T2 => t2(&ep.p, &ep.q),
        };
        assert_eq!(rebuilt, t);
        assert_eq!(ep.form == Form::T1, t.x().is_odd());
        seen += 1;
    }
    assert!(seen > 0);
}

fn small_poly(arity: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(
        (proptest::collection::vec(0u32..=2, arity), -10i64..=10, 1i64..=10),
        0..5,
    )
    .prop_map(move |terms| {
        Polynomial::from_terms(
            arity,
            terms.into_iter().map(|(e, n, d)| (e, BigRational::new(n.into(), d.into()))),
        )
        .unwrap()
    })
}

fn poly_triple() -> impl Strategy<Value = (Polynomial, Polynomial, Polynomial, Vec<BigInt>)> {
    (1usize..=4).prop_flat_map(|n| {
        (
            small_poly(n),
            small_poly(n),
            small_poly(n),
            proptest::collection::vec((-6i64..=6).prop_map(BigInt::from), n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms((p, q, r, _) in poly_triple()) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p + &q) + &r, &p + &(&q + &r));
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn eval_is_a_ring_homomorphism((p, q, _, pt) in poly_triple()) {
        let (pv, qv) = (p.eval(&pt).unwrap(), q.eval(&pt).unwrap());
        prop_assert_eq!((&p * &q).eval(&pt).unwrap(), &pv * &qv);
        prop_assert_eq!((&p + &q).eval(&pt).unwrap(), pv + qv);
    }

    #[test]
    fn lcm_scaling_clears_denominators((p, _, _, _) in poly_triple()) {
        let d = BigRational::from(p.denominator_lcm());
        prop_assert_eq!(p.scale(&d).denominator_lcm(), BigInt::from(1));
    }

    #[test]
    fn eval_f_lands_on_the_cone(v in proptest::array::uniform4(-1_000_000i64..=1_000_000)) {
        let p = point(v);
        let t = eval_f(&p);
        prop_assert_eq!(t.x() * t.x() + t.y() * t.y(), t.z() * t.z());
        prop_assert_eq!(eval_f(&preimage(&t)), t);
    }

    #[test]
    fn eval_f_matches_symbolic_on_random_points(v in proptest::array::uniform4(-300i64..=300)) {
        let p = point(v);
        let sym = build_symbolic_f().eval(&p.to_vec()).unwrap();
        prop_assert_eq!(sym.to_integral(), Some(eval_f(&p)));
    }

    #[test]
    fn preimage_round_trips_scaled_triples(a in -10_000i64..10_000, b in -10_000i64..10_000, k in -50i64..50) {
        let t = t1(&a.into(), &b.into()).scaled(&k.into());
        prop_assert_eq!(eval_f(&preimage(&t)), t.clone());
        let t = t2(&a.into(), &b.into()).scaled(&k.into());
        prop_assert_eq!(eval_f(&preimage(&t)), t);
    }
}
