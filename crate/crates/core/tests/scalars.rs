use hochschild_core::scalars::{parse_scalar, Poly, RatFunc};
use hochschild_core::{Backend, FieldSpec, Scalar};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

const PRIMES: [u64; 4] = [2, 3, 5, 7];

fn rational() -> impl Strategy<Value = Scalar> {
    (-50i64..50, 1i64..20)
        .prop_map(|(n, d)| Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d))))
}

fn poly(p: u64) -> impl Strategy<Value = Poly> {
    prop::collection::vec(0..p, 0..4).prop_map(move |c| Poly::new(p, c))
}

fn ratfunc(p: u64) -> impl Strategy<Value = Scalar> {
    (poly(p), poly(p).prop_filter("nonzero", |d| !d.is_zero()))
        .prop_map(|(n, d)| Scalar::RatFunc(RatFunc::new(n, d)))
}

fn triple() -> impl Strategy<Value = (Scalar, Scalar, Scalar)> {
    prop::sample::select(PRIMES.to_vec()).prop_flat_map(|p| (ratfunc(p), ratfunc(p), ratfunc(p)))
}

fn nonzero(s: impl Strategy<Value = Scalar>) -> impl Strategy<Value = Scalar> {
    s.prop_filter("nonzero", |x| !x.is_zero())
}

fn rational_spec() -> impl Strategy<Value = FieldSpec> {
    prop::array::uniform4(nonzero(rational())).prop_filter_map("root of unity", |q| {
        FieldSpec::new(Backend::Rational, q).ok()
    })
}

fn ratfunc_spec() -> impl Strategy<Value = FieldSpec> {
    prop::sample::select(PRIMES.to_vec()).prop_flat_map(|p| {
        prop::array::uniform4(nonzero(ratfunc(p))).prop_filter_map("root of unity", move |q| {
            FieldSpec::new(Backend::RationalFunction { p }, q).ok()
        })
    })
}

fn field_axioms(a: &Scalar, b: &Scalar, c: &Scalar) {
    assert_eq!(&(a + b) + c, a + &(b + c));
    assert_eq!(&(a * b) * c, a * &(b * c));
    assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    assert_eq!(a + b, b + a);
    assert_eq!(a * b, b * a);
    assert!((a - &a.clone()).is_zero());
    if !a.is_zero() {
        assert!((a * &a.inv()).is_one());
        assert_eq!(&(b / a) * a, *b);
    }
}

fn s_identities(spec: &FieldSpec, r: u32, t: u32, u: i64) {
    let s = |a: u32, b: i64| spec.s_product(a, b);
    assert_eq!(&s(r, u) * &s(t, r as i64 + u), s(r + t, u));
    assert_eq!(s(2 * t, 2 * t as i64 + u), s(2 * t, u + 2));
    let prod = &(&s(t, u) * &s(t, u + 1)) * &(&s(t, u + 2) * &s(t, u + 3));
    assert_eq!(prod, s(4, 0).pow(t));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn ratfunc_field_axioms((a, b, c) in triple()) {
        field_axioms(&a, &b, &c);
    }

    #[test]
    fn canonical_form_is_idempotent((p, n, d, c) in prop::sample::select(PRIMES.to_vec())
        .prop_flat_map(|p| (Just(p), poly(p), poly(p).prop_filter("nonzero", |d| !d.is_zero()), 1..p)))
    {
        let f = RatFunc::new(n.clone(), d.clone());
        prop_assert_eq!(RatFunc::new(f.numer().clone(), f.denom().clone()), f.clone());
        prop_assert_eq!(RatFunc::new(n.scale(c), d.scale(c)), f.clone());
        prop_assert_eq!(f.denom().leading(), 1);
        prop_assert_eq!(f.modulus(), p);
        let s = Scalar::RatFunc(f);
        prop_assert_eq!(s.normalized().normalized(), s.normalized());
    }

    #[test]
    fn rendering_reparses(s in ratfunc(5)) {
        let back = parse_scalar(&s.to_string(), Backend::RationalFunction { p: 5 }).unwrap();
        prop_assert_eq!(back, s);
    }

    #[test]
    fn s_identities_rational(spec in rational_spec(), r in 0u32..9, t in 0u32..9, u in -8i64..16) {
        s_identities(&spec, r, t, u);
    }

    #[test]
    fn s_identities_ratfunc(spec in ratfunc_spec(), r in 0u32..9, t in 0u32..9, u in -8i64..16) {
        s_identities(&spec, r, t, u);
    }
}

#[test]
fn guards() {
    assert!(FieldSpec::rational([1, 1, 1, 1]).is_err());
    assert!(FieldSpec::rational([-1, 1, 1, 1]).is_err());
    assert!(FieldSpec::rational([0, 2, 1, 1]).is_err());
    assert!(FieldSpec::rational([2, 1, 1, 1]).is_ok());
    let rf = Backend::RationalFunction { p: 3 };
    assert!(FieldSpec::parse(rf, &["2", "1", "1", "1"]).is_err());
    assert!(FieldSpec::parse(rf, &["t", "1/t", "1", "1"]).is_err());
    assert!(FieldSpec::parse(rf, &["t", "1", "1", "1"]).is_ok());
    assert!(FieldSpec::parse(Backend::RationalFunction { p: 4 }, &["t", "1", "1", "1"]).is_err());
    assert!(FieldSpec::parse(Backend::Rational, &["t", "1", "1", "1"]).is_err());
}

#[test]
fn mixed_backends_rejected() {
    let a = Scalar::from_int(Backend::Rational, 1);
    let b = Scalar::from_int(Backend::RationalFunction { p: 3 }, 1);
    assert!(a.checked_add(&b).is_err());
    assert!(Scalar::from_int(Backend::Rational, 0)
        .checked_inv()
        .is_err());
}
