use kostant::g2::{partition_tarski, qpartition, qpartition_bruteforce};
use kostant::qkwmf::{compute_abcdef, multiplicity, qmultiplicity_closed, qmultiplicity_weyl_sum, Method};
use kostant::sp4::{multiplicity_c2_closed, multiplicity_c2_weyl_sum, partition_c2_closed, qpartition_c2};
use kostant::{FundCoord, QPoly, RootCoord, WideQPoly};
use proptest::prelude::*;

fn weight() -> impl Strategy<Value = FundCoord> {
    (0u32..12, 0u32..12).prop_map(|(m, n)| FundCoord::new(m, n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closed_matches_weyl_sum(lambda in weight(), mu in weight()) {
        let closed = qmultiplicity_closed::<i64>(lambda, mu)?;
        prop_assert_eq!(closed.mq, qmultiplicity_weyl_sum::<i64>(lambda, mu)?);
        prop_assert_eq!(closed.m_at_one, multiplicity(lambda, mu, Method::Tarski)?);
    }

    #[test]
    fn qmultiplicity_has_nonnegative_coefficients(lambda in weight(), mu in weight()) {
        prop_assert!(qmultiplicity_weyl_sum::<i64>(lambda, mu)?.is_nonnegative());
    }

    #[test]
    fn zero_case_means_zero(lambda in weight(), mu in weight()) {
        let case = compute_abcdef(lambda, mu);
        let mq = qmultiplicity_weyl_sum::<i64>(lambda, mu)?;
        prop_assert_eq!(case.label.as_str() == "ZERO", mq.is_zero());
    }

    #[test]
    fn g2_partition_routes_agree(m in 0i64..45, n in 0i64..45) {
        let v = RootCoord::new(m, n);
        let q: QPoly = qpartition(v)?;
        prop_assert_eq!(&q, &qpartition_bruteforce::<i64>(v)?);
        prop_assert_eq!(q.eval_at_one()?, partition_tarski(v)?);
    }

    #[test]
    fn c2_partition_routes_agree(m in 0i64..120, n in 0i64..120) {
        let v = RootCoord::new(m, n);
        prop_assert_eq!(qpartition_c2::<i64>(v)?.eval_at_one()?, partition_c2_closed(v)?);
    }

    #[test]
    fn c2_closed_matches_weyl_sum(lambda in weight(), mu in weight()) {
        let closed = multiplicity_c2_closed(lambda, mu)?;
        let weyl = multiplicity_c2_weyl_sum::<i64>(lambda, mu)?;
        prop_assert!(weyl.is_nonnegative());
        prop_assert_eq!(closed.value, weyl.eval_at_one()?);
    }
}

#[test]
fn wide_coefficients_agree_with_narrow() {
    let (lambda, mu) = (FundCoord::new(9, 7), FundCoord::new(2, 3));
    let narrow = qmultiplicity_closed::<i64>(lambda, mu).unwrap().mq;
    let wide: WideQPoly = qmultiplicity_weyl_sum::<i128>(lambda, mu).unwrap();
    assert_eq!(narrow.convert::<i128>().unwrap(), wide);
}

#[test]
fn narrow_coefficients_overflow_loudly() {
    let err = qpartition::<i8>(RootCoord::new(30, 20)).unwrap_err();
    assert!(err.is_overflow());
}
