use csm_core::symra::{
    parse_json, rat, Ambient, Format, LinearForm, Monomial, Polynomial, RatFunc, Rational, Variable,
};
use csm_core::CsmError;
use proptest::prelude::*;

fn y(i: u32) -> RatFunc {
    RatFunc::var(Variable::y(i))
}

fn x(i: u32) -> RatFunc {
    RatFunc::var(Variable::x(i))
}

fn form(c: i64, a: Variable, b: Variable) -> LinearForm {
    LinearForm::diff(c, a, b)
}

fn inv(l: &LinearForm) -> RatFunc {
    RatFunc::inv_linear(l).unwrap()
}

#[test]
fn additive_identity_and_inverse() {
    let r = (&y(1) - &y(2)).div_linear(&form(1, Variable::y(1), Variable::y(2))).unwrap();
    assert_eq!(RatFunc::zero().add(&r), r);
    let alpha = LinearForm::new(0, [(Variable::y(1), -1), (Variable::y(2), 1)]);
    let s = inv(&alpha).add(&inv(&alpha).neg());
    assert!(s.is_zero());
    assert_eq!(s, RatFunc::zero());
}

#[test]
fn forced_cancellation() {
    let l = form(1, Variable::y(1), Variable::y(2));
    let a = (&y(1) - &y(2)).div_linear(&l).unwrap();
    let b = RatFunc::from_linear(&l);
    let p = a.mul(&b);
    assert!(p.is_polynomial());
    assert_eq!(p, &y(1) - &y(2));
    assert_eq!(p.serialize(Format::Plain), "y1 - y2");
}

#[test]
fn equality_examples() {
    let num = &(&y(1) * &y(1)) - &(&y(2) * &y(2));
    let q = num.div(&(&y(1) + &y(2))).unwrap();
    assert!(q.is_equal(&(&y(1) - &y(2))));
    let a = inv(&form(1, Variable::y(1), Variable::y(2)));
    let b = inv(&form(1, Variable::y(2), Variable::y(1)));
    assert!(!a.is_equal(&b));
}

#[test]
fn act_y_examples() {
    let amb = Ambient::new(0, 3);
    let r = &y(1) - &y(2);
    assert_eq!(amb.act_y(&r, 1).unwrap(), &y(2) - &y(1));
    let r = (&y(1) - &y(3)).div_linear(&form(1, Variable::y(1), Variable::y(3))).unwrap();
    let expect = (&y(3) - &y(1)).div_linear(&form(1, Variable::y(3), Variable::y(1))).unwrap();
    assert!(amb.act_y(&r, 0).unwrap().is_equal(&expect));
    assert!(matches!(amb.act_y(&r, 3), Err(CsmError::IndexOutOfRange { .. })));
}

#[test]
fn substitute_examples() {
    let amb = Ambient::new(1, 2);
    let l = form(1, Variable::x(1), Variable::y(2));
    let r = (&x(1) - &y(2)).div_linear(&l).unwrap();
    assert!(amb.substitute_x(&r, &[2]).unwrap().is_zero());

    let r = inv(&form(1, Variable::x(1), Variable::y(1)))
        .mul(&inv(&form(1, Variable::x(1), Variable::y(2))));
    let got = amb.substitute_x(&r, &[1]).unwrap();
    assert_eq!(got, inv(&form(1, Variable::y(1), Variable::y(2))));

    let amb = Ambient::new(2, 3);
    let got = amb.substitute_x(&(&x(1) + &x(2)), &[1, 3]).unwrap();
    assert_eq!(got, &y(1) + &y(3));

    let amb = Ambient::new(1, 2);
    let r = inv(&form(0, Variable::x(1), Variable::y(1)));
    assert!(matches!(amb.substitute_x(&r, &[1]), Err(CsmError::Pole(_))));
}

#[test]
fn division_errors() {
    assert_eq!(y(1).div(&RatFunc::zero()), Err(CsmError::DivisionByZero));
    let irreducible = &(&y(1) * &y(1)) + &y(2);
    assert!(matches!(y(1).div(&irreducible), Err(CsmError::UnsupportedDivisor(_))));
}

#[test]
fn serialize_examples() {
    assert_eq!(RatFunc::zero().serialize(Format::Latex), "0");
    assert_eq!(RatFunc::zero().serialize(Format::Plain), "0");
    let r = (&y(1) - &y(2)).div_linear(&form(1, Variable::y(1), Variable::y(2))).unwrap();
    assert_eq!(r.serialize(Format::Plain), "(y1 - y2)/(1 + y1 - y2)");
    assert_eq!(
        r.serialize(Format::Latex),
        "\\frac{y_{1} - y_{2}}{(1 + y_{1} - y_{2})}"
    );
    let back = parse_json(&r.serialize(Format::Json)).unwrap();
    assert_eq!(back, r);
}

#[test]
fn ambient_validation() {
    let amb = Ambient::new(1, 2);
    assert!(amb.x(2).is_err());
    assert!(amb.y(3).is_err());
    assert!(amb.check(&y(3)).is_err());
    assert!(amb.check(&(&x(1) - &y(2))).is_ok());
}

#[test]
fn lowest_degree_part_drops_unit_factors() {
    let r = (&y(1) - &y(2))
        .div_linear(&form(1, Variable::y(1), Variable::y(2)))
        .unwrap()
        .mul(&(&RatFunc::one() + &y(3)));
    assert_eq!(r.lowest_degree_part(), &y(1) - &y(2));
}

#[test]
fn linear_form_canonical_sign() {
    let l = LinearForm::new(-2, [(Variable::y(1), -4), (Variable::y(3), 6)]);
    let (s, c) = l.canonical();
    assert_eq!(s, -2);
    assert_eq!(c, LinearForm::new(1, [(Variable::y(1), 2), (Variable::y(3), -3)]));
    assert!(c.is_canonical());
}

#[test]
fn monomial_order_is_graded_lex() {
    let m = |pairs: &[(Variable, u32)]| Monomial::from_pairs(pairs.iter().copied());
    let y1 = Variable::y(1);
    let y2 = Variable::y(2);
    let x1 = Variable::x(1);
    assert!(m(&[(y1, 2)]) > m(&[(y1, 1), (y2, 1)]));
    assert!(m(&[(y1, 1), (y2, 1)]) > m(&[(y2, 2)]));
    assert!(m(&[(x1, 1)]) > m(&[(y1, 1)]));
    assert!(m(&[(y2, 2)]) > m(&[(y1, 1)]));
}

// Random rational functions over y1..y3 and x1 with small denominators.

fn var_strategy() -> impl Strategy<Value = Variable> {
    prop_oneof![
        Just(Variable::y(1)),
        Just(Variable::y(2)),
        Just(Variable::y(3)),
        Just(Variable::x(1)),
    ]
}

fn poly_strategy() -> impl Strategy<Value = Polynomial> {
    prop::collection::vec(
        (-3i64..=3, prop::collection::vec((var_strategy(), 1u32..=2), 0..=2)),
        0..=4,
    )
    .prop_map(|terms| {
        Polynomial::from_terms(
            terms
                .into_iter()
                .map(|(c, m)| (Monomial::from_pairs(m), rat(c))),
        )
    })
}

fn form_strategy() -> impl Strategy<Value = LinearForm> {
    (0i64..=1, var_strategy(), var_strategy())
        .prop_filter("distinct", |(_, a, b)| a != b)
        .prop_map(|(c, a, b)| LinearForm::diff(c, a, b))
}

fn ratfunc_strategy() -> impl Strategy<Value = RatFunc> {
    (
        poly_strategy(),
        prop::collection::vec((form_strategy(), 1u32..=2), 0..=2),
        1i64..=4,
        1i64..=3,
    )
        .prop_map(|(num, den, p, q)| {
            RatFunc::from_parts(Rational::new(p.into(), q.into()), num, den).unwrap()
        })
}

fn sample_point(seed: u64) -> impl Fn(Variable) -> Rational {
    move |v: Variable| {
        let h = seed
            .wrapping_mul(6364136223846793005)
            .wrapping_add(v.index() as u64 * 1442695040888963407 + v.family() as u64 * 97);
        let num = (h >> 33) % 201;
        let den = (h >> 13) % 7 + 1;
        Rational::new((num as i64 - 100).into(), (den as i64).into())
    }
}

fn points_agree(a: &RatFunc, b: &RatFunc) -> bool {
    let mut checked = 0;
    let mut seed = 1u64;
    while checked < 50 {
        seed += 1;
        let p = sample_point(seed);
        let (Some(va), Some(vb)) = (a.eval(&p), b.eval(&p)) else {
            continue;
        };
        if va != vb {
            return false;
        }
        checked += 1;
    }
    true
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in ratfunc_strategy(), b in ratfunc_strategy(), c in ratfunc_strategy()) {
        prop_assert!((&(&a + &b) + &c).is_equal(&(&a + &(&b + &c))));
        prop_assert!((&(&a * &b) * &c).is_equal(&(&a * &(&b * &c))));
        prop_assert!((&a * &(&b + &c)).is_equal(&(&(&a * &b) + &(&a * &c))));
        prop_assert!((&a - &a).is_zero());
        prop_assert!((&a + &b).is_equal(&(&b + &a)));
    }

    #[test]
    fn division_inverts_linear_products(a in ratfunc_strategy(), l in form_strategy(), m in form_strategy()) {
        let d = RatFunc::from_linear(&l).mul(&RatFunc::from_linear(&m)).div_linear(&l.add(&m).add(&LinearForm::new(1, []))).unwrap();
        let q = a.div(&d).unwrap();
        prop_assert!(q.mul(&d).is_equal(&a));
    }

    #[test]
    fn act_y_is_involutive_homomorphism(a in ratfunc_strategy(), b in ratfunc_strategy(), i in 0usize..3) {
        let amb = Ambient::new(1, 3);
        let s = |r: &RatFunc| amb.act_y(r, i).unwrap();
        prop_assert_eq!(s(&s(&a)), a.clone());
        prop_assert!(s(&(&a * &b)).is_equal(&(&s(&a) * &s(&b))));
        prop_assert!(s(&(&a + &b)).is_equal(&(&s(&a) + &s(&b))));
    }

    #[test]
    fn act_y_braid(a in ratfunc_strategy()) {
        let amb = Ambient::new(1, 3);
        let s = |r: &RatFunc, i| amb.act_y(r, i).unwrap();
        prop_assert_eq!(s(&s(&s(&a, 1), 2), 1), s(&s(&s(&a, 2), 1), 2));
    }

    #[test]
    fn substitution_commutes_with_arith(a in ratfunc_strategy(), b in ratfunc_strategy(), t in 1usize..=3) {
        let amb = Ambient::new(1, 3);
        let sub = |r: &RatFunc| amb.substitute_x(r, &[t]);
        if let (Ok(sa), Ok(sb)) = (sub(&a), sub(&b)) {
            prop_assert!(sub(&(&a + &b)).unwrap().is_equal(&(&sa + &sb)));
            prop_assert!(sub(&(&a * &b)).unwrap().is_equal(&(&sa * &sb)));
        }
    }

    #[test]
    fn canonicalize_idempotent(a in ratfunc_strategy()) {
        let c = a.canonicalize();
        prop_assert_eq!(c.canonicalize(), c.clone());
        prop_assert!(a.is_equal(&c));
    }

    #[test]
    fn equality_matches_point_evaluation(a in ratfunc_strategy(), b in ratfunc_strategy()) {
        prop_assert_eq!(a.is_equal(&b), points_agree(&a, &b));
        let twin = &(&a + &b) - &b;
        prop_assert!(a.is_equal(&twin));
        prop_assert!(points_agree(&a, &twin));
    }

    #[test]
    fn json_round_trip(a in ratfunc_strategy(), b in ratfunc_strategy()) {
        for r in [a.clone(), &a * &b, &a - &b] {
            let back = parse_json(&r.serialize(Format::Json)).unwrap();
            prop_assert_eq!(back, r);
        }
    }
}
