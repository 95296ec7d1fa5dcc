use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use quadpow::quadratic::{p_m, p_m_symbolic, x_power, x_power_by_stepping};
use quadpow::ring::{BivariatePoly, IntegerRing, ModRing, Monomial, RationalRing, Ring};
use quadpow::{Engine, Mat2, QuadParams};

fn small() -> impl Strategy<Value = i64> {
    -1000i64..=1000
}

fn poly() -> impl Strategy<Value = BivariatePoly> {
    prop::collection::vec((0u32..4, 0u32..4, -9i64..=9), 0..5).prop_map(|terms| {
        BivariatePoly::from_terms(
            terms
                .into_iter()
                .map(|(t, d, c)| (Monomial::new(t, d), BigInt::from(c))),
        )
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-50i64..=50, 1i64..=12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn axioms<R: Ring>(ring: &R, a: &R::Elem, b: &R::Elem, c: &R::Elem) -> Result<(), TestCaseError>
where
    R::Elem: std::fmt::Debug + PartialEq,
{
    prop_assert_eq!(ring.add(a, b), ring.add(b, a));
    prop_assert_eq!(ring.mul(a, b), ring.mul(b, a));
    prop_assert_eq!(ring.add(&ring.add(a, b), c), ring.add(a, &ring.add(b, c)));
    prop_assert_eq!(ring.mul(&ring.mul(a, b), c), ring.mul(a, &ring.mul(b, c)));
    prop_assert_eq!(
        ring.mul(a, &ring.add(b, c)),
        ring.add(&ring.mul(a, b), &ring.mul(a, c))
    );
    prop_assert!(ring.is_zero(&ring.add(a, &ring.neg(a))));
    prop_assert_eq!(ring.mul(a, &ring.one()), a.clone());
    prop_assert_eq!(ring.add(a, &ring.zero()), a.clone());
    prop_assert_eq!(ring.parse(&ring.render(a)).unwrap(), a.clone());
    Ok(())
}

proptest! {
    #[test]
    fn integer_axioms(a in small(), b in small(), c in small()) {
        let z = IntegerRing;
        axioms(&z, &a.into(), &b.into(), &c.into())?;
    }

    #[test]
    fn modular_axioms(n in 2u64..=u64::MAX, a in any::<i64>(), b in any::<i64>(), c in any::<i64>()) {
        let r = ModRing::new(n).unwrap();
        axioms(&r, &r.embed_i64(a), &r.embed_i64(b), &r.embed_i64(c))?;
    }

    #[test]
    fn rational_axioms(a in rational(), b in rational(), c in rational()) {
        axioms(&RationalRing, &a, &b, &c)?;
    }

    #[test]
    fn polynomial_axioms(a in poly(), b in poly(), c in poly()) {
        axioms(&quadpow::ring::PolyRing, &a, &b, &c)?;
    }

    #[test]
    fn evaluation_is_a_ring_map(a in poly(), b in poly(), t in -20i64..=20, d in -20i64..=20) {
        let z = IntegerRing;
        let (t, d) = (BigInt::from(t), BigInt::from(d));
        prop_assert_eq!(a.mul(&b).eval(&z, &t, &d), a.eval(&z, &t, &d) * b.eval(&z, &t, &d));
        prop_assert_eq!(a.add(&b).eval(&z, &t, &d), a.eval(&z, &t, &d) + b.eval(&z, &t, &d));
    }

    #[test]
    fn symbolic_specializes(t in -30i64..=30, d in -30i64..=30, m in 1u64..=40) {
        let z = IntegerRing;
        let params = QuadParams { t: BigInt::from(t), d: BigInt::from(d) };
        let direct = p_m(&z, &params, m, Engine::Iterative).unwrap();
        prop_assert_eq!(p_m_symbolic(m).eval(&z, &params.t, &params.d), direct);
    }

    #[test]
    fn engines_agree_mod_n(n in 2u64..=u64::MAX, t in any::<i64>(), d in any::<i64>(), m in 1u64..=3000) {
        let r = ModRing::new(n).unwrap();
        let params = QuadParams { t: r.embed_i64(t), d: r.embed_i64(d) };
        let reference = p_m(&r, &params, m, Engine::Iterative).unwrap();
        prop_assert_eq!(p_m(&r, &params, m, Engine::Doubling).unwrap(), reference);
        if m <= 300 {
            prop_assert_eq!(p_m(&r, &params, m, Engine::Binomial).unwrap(), reference);
        }
    }

    #[test]
    fn x_power_matches_stepping(t in -50i64..=50, d in -50i64..=50, m in 1u64..=300) {
        let z = IntegerRing;
        let params = QuadParams { t: BigInt::from(t), d: BigInt::from(d) };
        let stepped = x_power_by_stepping(&z, &params, m).unwrap();
        for engine in Engine::ALL {
            prop_assert_eq!(x_power(&z, &params, m, engine).unwrap(), stepped.clone());
        }
    }

    #[test]
    fn matrix_powers_agree(e in prop::array::uniform4(-20i64..=20), m in 0u64..=150) {
        let z = IntegerRing;
        let mat = Mat2::from_fn(|i, j| BigInt::from(e[2 * i + j]));
        prop_assert_eq!(mat.pow_ch(&z, m, Engine::Doubling).unwrap(), mat.pow_naive(&z, m));
    }

    #[test]
    fn matrix_text_round_trips(e in prop::array::uniform4(any::<i64>())) {
        let z = IntegerRing;
        let mat = Mat2::from_fn(|i, j| BigInt::from(e[2 * i + j]));
        prop_assert_eq!(Mat2::parse(&z, &mat.render(&z)).unwrap(), mat);
    }

    #[test]
    fn polynomial_text_round_trips(a in poly()) {
        let text = a.to_string();
        prop_assert_eq!(text.parse::<BivariatePoly>().unwrap(), a);
    }
}
