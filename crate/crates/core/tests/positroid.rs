use std::collections::BTreeSet;

use csm_core::chernaffine::AffineLocCache;
use csm_core::positroid::{
    enumerate_pd, enumerate_pd_baseline, f_tilde, specialize_check, symmetry_check, PipeDream, Tile,
};
use csm_core::symra::{LinearForm, Polynomial, RatFunc, Variable};
use csm_core::weylperm::{enumerate_bounded, AffinePerm};
use csm_core::{CsmError, Limits};

fn x(i: u32) -> Variable {
    Variable::x(i)
}

fn y(i: u32) -> Variable {
    Variable::y(i)
}

fn w(s: &str) -> AffinePerm {
    AffinePerm::parse(s).unwrap()
}

fn pd(s: &str) -> PipeDream {
    PipeDream::parse_ascii(s).unwrap()
}

fn lim() -> Limits {
    Limits::default()
}

fn prod(factors: &[(u32, u32)]) -> Polynomial {
    factors.iter().fold(Polynomial::one(), |p, &(i, j)| p.mul_linear(&LinearForm::diff(0, x(i), y(j))))
}

fn over_full(num: Polynomial, k: u32, n: u32) -> RatFunc {
    let den = (1..=k).flat_map(|i| (1..=n).map(move |j| (LinearForm::diff(1, x(i), y(j)), 1)));
    RatFunc::with_denominator(num, den).unwrap()
}

const SIX: [&str; 6] = [
    "BBBB\nXBXB",
    "BXBB\nBBXB",
    "BBBX\nXBBB",
    "BXBX\nBBBB",
    "BBXX\nXXBB",
    "XXBB\nBBXX",
];

#[test]
fn reading_examples() {
    assert_eq!(pd("BBBB\nXBXB").reading_permutation().unwrap(), w("2,5,4,7"));
    assert_eq!(pd("BB").reading_permutation().unwrap(), w("2,3"));
    let one_row = pd("BXBXXXBBX");
    assert_eq!(one_row.reading_permutation().unwrap(), w("3,2,7,4,5,6,8,10,9"));
    let three = pd("XXBXXBX\nBBXBXBX\nXBBXBBX");
    assert_eq!(three.reading_permutation().unwrap(), w("2,6,5,10,8,11,7"));
}

#[test]
fn six_tilings_read_the_same() {
    for s in SIX {
        assert_eq!(pd(s).reading_permutation().unwrap(), w("2,5,4,7"), "{s}");
    }
}

#[test]
fn closed_loops_rejected() {
    let e = pd("XXXX\nBXBX").reading_permutation();
    assert!(matches!(e, Err(CsmError::NoReadingPermutation(_))));
}

#[test]
fn formats_round_trip() {
    let p = pd("BBXX\nXXBB");
    assert_eq!(p.to_ascii(), "BBXX\nXXBB");
    assert_eq!(p.tile(1, 3), Tile::Cross);
    assert_eq!(p.tile(2, 3), Tile::Bump);
    let j = p.to_json();
    assert_eq!(j, serde_json::json!({"k": 2, "n": 4, "rows": ["BBXX", "XXBB"]}));
    assert_eq!(PipeDream::from_json(&j).unwrap(), p);
    let bad = serde_json::json!({"k": 3, "n": 4, "rows": ["BBXX", "XXBB"]});
    assert!(PipeDream::from_json(&bad).is_err());
    assert!(PipeDream::parse_ascii("BQ").is_err());
    assert!(PipeDream::parse_ascii("BB\nB").is_err());
}

#[test]
fn enumerate_six() {
    let got = enumerate_pd(&w("2,5,4,7"), 2, &lim()).unwrap();
    let want: BTreeSet<PipeDream> = SIX.iter().map(|s| pd(s)).collect();
    assert_eq!(got.into_iter().collect::<BTreeSet<_>>(), want);
}

#[test]
fn enumerate_unique_cases() {
    let f = w("3,2,7,4,5,6,8,10,9");
    let got = enumerate_pd(&f, 1, &lim()).unwrap();
    assert_eq!(got, vec![pd("BXBXXXBBX")]);
    assert_eq!(enumerate_pd(&w("2,3"), 1, &lim()).unwrap(), vec![pd("BB")]);
    assert_eq!(enumerate_pd_baseline(&w("2,3"), 1, &lim()).unwrap().len(), 1);
}

#[test]
fn enumerate_rejects() {
    assert!(matches!(enumerate_pd(&w("2,1"), 0, &lim()), Err(CsmError::InvalidWindow(_))));
    assert!(matches!(enumerate_pd(&w("2,5,4,7"), 1, &lim()), Err(CsmError::InvalidWindow(_))));
    let small = Limits {
        pipe_cells: 6,
        ..lim()
    };
    assert!(matches!(enumerate_pd(&w("2,5,4,7"), 2, &small), Err(CsmError::SizeGuard { .. })));
}

#[test]
fn baseline_agrees() {
    for (k, n) in [(1, 2), (1, 3), (2, 3), (2, 4), (1, 5), (2, 5), (3, 4)] {
        let mut total = 0;
        for f in enumerate_bounded(k, n).unwrap() {
            let a = enumerate_pd(&f, k, &lim()).unwrap();
            let b = enumerate_pd_baseline(&f, k, &lim()).unwrap();
            assert_eq!(a, b, "f={f}");
            for p in &a {
                assert!(p.reading_permutation().unwrap().is_bounded());
            }
            total += a.len();
        }
        assert!(total > 0);
    }
}

#[test]
fn example_two_four_formula() {
    let ft = f_tilde(&w("2,5,4,7"), 2, &lim()).unwrap();
    let num = [
        prod(&[(2, 1), (2, 3)]),
        prod(&[(1, 2), (2, 3)]),
        prod(&[(1, 4), (2, 1)]),
        prod(&[(1, 2), (1, 4)]),
        prod(&[(1, 3), (1, 4), (2, 1), (2, 2)]),
        prod(&[(1, 1), (1, 2), (2, 3), (2, 4)]),
    ]
    .iter()
    .fold(Polynomial::zero(), |a, b| &a + b);
    assert_eq!(ft.dreams().len(), 6);
    assert!(ft.value().is_equal(&over_full(num, 2, 4)));
    assert_eq!(ft.value().denominator().count(), 8);
    assert!(ft.factored_latex().starts_with("\\frac{"));
}

#[test]
fn example_one_nine_formula() {
    let f = w("3,2,7,4,5,6,8,10,9");
    let ft = f_tilde(&f, 1, &lim()).unwrap();
    let want = over_full(prod(&[(1, 2), (1, 4), (1, 5), (1, 6), (1, 9)]), 1, 9);
    assert!(ft.value().is_equal(&want));
    assert_eq!(ft.value(), &want);
}

#[test]
fn all_bump_formula() {
    let ft = f_tilde(&w("2,3"), 1, &lim()).unwrap();
    assert!(ft.value().is_equal(&over_full(Polynomial::one(), 1, 2)));
    assert_eq!(ft.factored_plain(), "[1] / [(1 + x1 - y1)(1 + x1 - y2)]");
}

#[test]
fn symmetric_in_x() {
    for (k, n) in [(1, 3), (2, 4), (2, 5)] {
        for f in enumerate_bounded(k, n).unwrap() {
            let ft = f_tilde(&f, k, &lim()).unwrap();
            assert!(symmetry_check(&ft).unwrap(), "f={f}");
        }
    }
}

#[test]
fn specialize_small() {
    for (k, n, count) in [(1, 2, 3), (1, 3, 7)] {
        let cache = AffineLocCache::new(n);
        let fs = enumerate_bounded(k, n).unwrap();
        assert_eq!(fs.len(), count);
        for f in fs {
            let r = specialize_check(&f, k, &cache, &lim()).unwrap();
            assert!(r.passed(), "f={f}: {:?}", r.mismatches);
        }
    }
}

#[test]
fn specialize_examples() {
    let cache = AffineLocCache::new(2);
    let r = specialize_check(&w("3,2"), 1, &cache, &lim()).unwrap();
    assert!(r.passed());
    assert_eq!(r.subsets, 2);
    let ft = f_tilde(&w("3,2"), 1, &lim()).unwrap();
    let amb = csm_core::symra::Ambient::new(1, 2);
    assert!(amb.substitute_x(ft.value(), &[2]).unwrap().is_zero());
    let at1 = amb.substitute_x(ft.value(), &[1]).unwrap();
    let want = RatFunc::from_linear(&LinearForm::diff(0, y(1), y(2)))
        .div_linear(&LinearForm::diff(1, y(1), y(2)))
        .unwrap();
    assert!(at1.is_equal(&want));

    let cache = AffineLocCache::new(4);
    let t = w("5,6,3,4");
    let r = specialize_check(&t, 2, &cache, &lim()).unwrap();
    assert!(r.passed());
    assert_eq!(r.subsets, 6);
}
