use num_traits::{One, Zero};
use proptest::prelude::*;
use tmoments::asympt::{delay_coeff, trans_coeff, trans_diff_coeff, trans_p0_novaes};
use tmoments::exactmath::{int, q};
use tmoments::moments::SymmetryClass;
use tmoments::series::genfun::{diff_to_moments, moments_to_diff};
use tmoments::{Rational, SeriesQ};

fn positive() -> impl Strategy<Value = Rational> {
    (1i64..40, 1i64..12).prop_map(|(n, d)| q(n, d))
}

fn above_one() -> impl Strategy<Value = Rational> {
    positive().prop_map(|x| x + int(1))
}

fn any_rational() -> impl Strategy<Value = Rational> {
    (-30i64..30, 1i64..9).prop_map(|(n, d)| q(n, d))
}

/// Andreev parameters admitted by the expansion, `δ > -2`.
fn delta() -> impl Strategy<Value = Rational> {
    (0i64..60, 1i64..9).prop_map(|(n, d)| q(n, d) - int(2) + q(1, 10))
}

fn series(len: usize) -> impl Strategy<Value = SeriesQ> {
    prop::collection::vec(any_rational(), len).prop_map(SeriesQ::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn leading_order_is_class_independent(u in positive(), w in above_one(), k in 1i64..=10) {
        let t0 = trans_coeff(2, &int(0), k, 0, &u).unwrap().value;
        prop_assert_eq!(&t0, &trans_p0_novaes(k, &u));
        for class in SymmetryClass::ALL {
            let t = trans_coeff(class.beta(), &class.delta_q(), k, 0, &u).unwrap();
            prop_assert_eq!(&t.value, &t0);
        }
        let d0 = delay_coeff(2, k, 0, &w).unwrap();
        for beta in [1, 4] {
            prop_assert_eq!(&delay_coeff(beta, k, 0, &w).unwrap(), &d0);
        }
    }

    #[test]
    fn first_correction_is_affine_in_delta(
        u in positive(),
        k in 1i64..=12,
        d1 in delta(),
        d2 in delta(),
    ) {
        let f = |d: &Rational| trans_diff_coeff(2, d, k, 1, &u).unwrap().value;
        let mid = (&d1 + &d2) / int(2);
        prop_assert_eq!(f(&mid) * int(2), f(&d1) + f(&d2));
    }

    #[test]
    fn second_correction_is_quadratic_in_delta(u in positive(), k in 1i64..=8, d in delta()) {
        let f = |d: Rational| trans_diff_coeff(2, &d, k, 2, &u).unwrap().value;
        let one = Rational::one();
        let third = f(&d + int(3) * &one) - int(3) * f(&d + int(2) * &one) + int(3) * f(&d + &one) - f(d.clone());
        prop_assert!(third.is_zero());
    }

    #[test]
    fn difference_and_moment_series_round_trip(s in series(10), t1 in any_rational()) {
        let mut diff = s;
        diff.set_coeff(0, Rational::zero());
        let moments = diff_to_moments(&diff, &t1).unwrap();
        prop_assert_eq!(moments.coeff(0), Rational::zero());
        prop_assert_eq!(moments.coeff(1), t1);
        let back = moments_to_diff(&moments).unwrap();
        prop_assert_eq!(back, diff.truncate(9));
    }

    #[test]
    fn series_field_laws(a in series(8), b in series(8), c0 in positive()) {
        let mut b = b;
        b.set_coeff(0, c0);
        let quotient = a.checked_div(&b).unwrap();
        prop_assert_eq!(&quotient * &b, a.clone());
        let square = &b * &b;
        let root = square.sqrt().unwrap();
        prop_assert_eq!(&root * &root, square);
    }

    #[test]
    fn exp_and_log_are_inverse(a in series(8)) {
        let mut a = a;
        a.set_coeff(0, Rational::zero());
        let e = a.exp().unwrap();
        prop_assert_eq!(e.coeff(0), Rational::one());
        prop_assert_eq!(e.log().unwrap(), a);
    }
}
