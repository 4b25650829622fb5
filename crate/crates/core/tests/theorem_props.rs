use master_kernels::numerics::{sign_pow, I};
use master_kernels::theorems::{self, integrate_lhs, rhs};
use master_kernels::{ComplexValue, Error, IntegrandSpec, KernelSpec, QuadratureOptions, TheoremId, TheoremInstance, VariationMode};
use proptest::prelude::*;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn single(id: TheoremId, kernel: KernelSpec, f: IntegrandSpec, a: f64) -> TheoremInstance {
    TheoremInstance::new(id, kernel, f, VariationMode::Single, c(a, 0.0)).unwrap()
}

/// Integrands whose integral against every kernel exists for a > 0.
fn tame() -> impl Strategy<Value = IntegrandSpec> {
    prop_oneof![
        Just(IntegrandSpec::Constant),
        (0.1..1.5f64, -0.5..0.5f64).prop_map(|(b, t)| IntegrandSpec::ExpLinear { b: c(b, t) }),
        (0.0..2.0f64).prop_map(|s| IntegrandSpec::PowerZ { s: c(s, 0.0) }),
        (0.5..2.5f64, 0.5..3.0f64).prop_map(|(alpha, beta)| IntegrandSpec::GammaRatio { alpha, beta }),
        (0.2..1.5f64).prop_map(|b| IntegrandSpec::ShiftedPower { s: c(1.5, 0.0), b }),
    ]
}

/// F analytic with F(0) = 0, for kernels with a pole on the contour.
fn vanishing() -> impl Strategy<Value = IntegrandSpec> {
    (1u32..4, 0.1..1.0f64).prop_map(|(s, b)| IntegrandSpec::PowerExp { s: c(s as f64, 0.0), b: c(b, 0.0) })
}

fn off_integer(lo: f64, hi: f64) -> impl Strategy<Value = f64> {
    (lo..hi).prop_filter("near an integer", |v| (v - v.round()).abs() > 0.02)
}

fn pq() -> impl Strategy<Value = (f64, f64)> {
    (0.3..1.8f64, -1.0..1.0f64).prop_filter("edge pole", |(q, r)| {
        let m = (q * q + r * r) / q;
        (m - m.round()).abs() > 0.02
    })
}

fn instances() -> impl Strategy<Value = TheoremInstance> {
    let a = 0.3..2.0f64;
    prop_oneof![
        (tame(), a.clone()).prop_map(|(f, a)| single(TheoremId::Fcosh, KernelSpec::CoshPi, f, a)),
        (tame(), a.clone(), -0.4..0.4f64)
            .prop_filter_map("singular in the swept band", |(f, a, cc)| {
                TheoremInstance::corollary(f, VariationMode::Single, c(a, 0.0), cc).ok()
            }),
        (tame(), a.clone(), off_integer(0.05, 1.0)).prop_map(|(f, a, p)| single(TheoremId::Gen1, KernelSpec::SinhP { p }, f, a)),
        (tame(), a.clone(), off_integer(0.1, 3.5)).prop_map(|(f, a, p)| single(TheoremId::Gen1a, KernelSpec::SinhP { p }, f, a)),
        (vanishing(), a.clone(), 1u32..4).prop_map(|(f, a, p)| single(TheoremId::Gen1a, KernelSpec::SinhP { p: p as f64 }, f, a)),
        (tame(), a.clone(), pq()).prop_map(|(f, a, (q, r))| single(TheoremId::Gen2, KernelSpec::SinhPQ { q, r }, f, a)),
        (tame(), a.clone(), pq()).prop_map(|(f, a, (q, r))| single(TheoremId::Cubed, KernelSpec::SinhCubed { q, r }, f, a)),
        (vanishing(), a.clone(), 1u32..4).prop_map(|(f, a, k)| single(TheoremId::A1, KernelSpec::Sinh4k { k }, f, a)),
        (tame(), a.clone(), 1u32..4).prop_map(|(f, a, k)| single(TheoremId::A3, KernelSpec::CoshOdd { k }, f, a)),
        (tame(), a.clone(), 1u32..4, 0.0..1.2f64)
            .prop_map(|(f, a, k, b)| single(TheoremId::A4, KernelSpec::CoshPair { k, b }, f, a)),
        (0.3..2.0f64, a.clone(), 0.4..1.5f64).prop_map(|(b, a, r)| single(
            TheoremId::Q0,
            KernelSpec::SinhPQ { q: 0.0, r },
            IntegrandSpec::ExpLinear { b: c(b, 0.0) },
            a
        )),
        (0.2..1.2f64, a.clone(), off_integer(0.2, 2.5), 0usize..4).prop_map(|(b, a, p, m)| {
            let (f, mode) = [
                (IntegrandSpec::EvenFactor { b }, VariationMode::ProductParity),
                (IntegrandSpec::EvenFactor { b }, VariationMode::SumEven),
                (IntegrandSpec::OddFactor { b }, VariationMode::DiffOdd),
                (IntegrandSpec::OddFactor { b }, VariationMode::CrossParity),
            ][m];
            TheoremInstance::new(TheoremId::VarGeneral, KernelSpec::SinhP { p }, f, mode, c(a, 0.0)).unwrap()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(160))]

    #[test]
    fn rhs_matches_quadrature(inst in instances()) {
        prop_assume!(inst.lhs_exists());
        let o = QuadratureOptions::default();
        let tag = format!("{} {} {} a={}", inst.id, inst.kernel, inst.integrand, inst.a);
        let want = rhs(&inst, &o).map_err(|e| TestCaseError::fail(format!("{tag}: rhs {e}")))?;
        let got = integrate_lhs(&inst, &o).map_err(|e| TestCaseError::fail(format!("{tag}: lhs {e}")))?;
        prop_assert!(
            (got.value - want).norm() <= 1e-8 * (1.0 + want.norm()) + got.abs_error_estimate,
            "{tag}: {} vs {}", got.value, want
        );
    }

    #[test]
    fn reduction_chain(f in tame(), f0 in vanishing(), a in 0.2..3.0f64, k in 1u32..4) {
        let close = |u: ComplexValue, v: ComplexValue| (u - v).norm() <= 1e-13 * (1.0 + v.norm());
        let g1a = theorems::rhs_gen1a(&single(TheoremId::Gen1a, KernelSpec::SinhP { p: 0.5 }, f, a)).unwrap();
        let g1 = theorems::rhs_gen1(&single(TheoremId::Gen1, KernelSpec::SinhP { p: 0.5 }, f, a)).unwrap();
        prop_assert!(close(g1a, g1));
        let a3_1 = theorems::rhs_a3(&single(TheoremId::A3, KernelSpec::CoshOdd { k: 1 }, f, a)).unwrap();
        let fc = theorems::rhs_fcosh(&single(TheoremId::Fcosh, KernelSpec::CoshPi, f, a)).unwrap();
        prop_assert!(close(a3_1, fc));
        let a3 = theorems::rhs_a3(&single(TheoremId::A3, KernelSpec::CoshOdd { k }, f, a)).unwrap();
        let a4 = theorems::rhs_a4(&single(TheoremId::A4, KernelSpec::CoshPair { k, b: 0.0 }, f, a)).unwrap();
        prop_assert!(close(a4, a3));
        let kf = k as f64;
        let a1 = theorems::rhs_a1(&single(TheoremId::A1, KernelSpec::Sinh4k { k }, f0, a)).unwrap();
        let g1a_k = theorems::rhs_gen1a(&single(TheoremId::Gen1a, KernelSpec::SinhP { p: kf }, f0, a)).unwrap();
        prop_assert!(close(a1, g1a_k * sign_pow(k as i64)));
        let g1a_half = theorems::rhs_gen1a(&single(TheoremId::Gen1a, KernelSpec::SinhP { p: kf - 0.5 }, f, a)).unwrap();
        prop_assert!(close(a3, I * sign_pow(k as i64 + 1) * g1a_half));
    }

    #[test]
    fn empty_sums_leave_the_centre_term(f in tame(), a in 0.2..3.0f64, q in 0.3..0.9f64) {
        let centre = f.eval(c(a / 4.0, 0.0)).unwrap();
        let exact = |u: ComplexValue, v: ComplexValue| (u - v).norm() <= 1e-15 * (1.0 + v.norm());
        // M = ⌊q⌋ = 0 for real q < 1.
        let g2 = theorems::rhs_gen2(&single(TheoremId::Gen2, KernelSpec::SinhPQ { q, r: 0.0 }, f, a)).unwrap();
        prop_assert!(exact(g2, -I * 0.5 * centre / q));
        let a3 = theorems::rhs_a3(&single(TheoremId::A3, KernelSpec::CoshOdd { k: 1 }, f, a)).unwrap();
        prop_assert!(exact(a3, centre));
        let a4 = theorems::rhs_a4(&single(TheoremId::A4, KernelSpec::CoshPair { k: 1, b: 0.0 }, f, a)).unwrap();
        prop_assert!(exact(a4, centre));
    }
}

#[test]
fn premises_are_enforced() {
    let f = IntegrandSpec::Constant;
    let r = TheoremInstance::new(TheoremId::Gen1, KernelSpec::SinhP { p: 1.5 }, f, VariationMode::Single, c(1.0, 0.0));
    assert!(matches!(r, Err(Error::Premise(_))));
    let r = TheoremInstance::new(TheoremId::Fcosh, KernelSpec::SinhP { p: 0.5 }, f, VariationMode::Single, c(1.0, 0.0));
    assert!(matches!(r, Err(Error::Premise(_))));
    let r = TheoremInstance::new(TheoremId::VarGeneral, KernelSpec::SinhP { p: 0.5 }, f, VariationMode::Single, c(1.0, 0.0));
    assert!(r.is_err());
    let r = TheoremInstance::new(
        TheoremId::Gen1a,
        KernelSpec::SinhP { p: 0.5 },
        IntegrandSpec::ExpLinear { b: c(1.0, 0.0) },
        VariationMode::SumEven,
        c(1.0, 0.0),
    );
    assert!(matches!(r, Err(Error::Parity(_))));
    assert!(TheoremInstance::corollary(f, VariationMode::Single, c(1.0, 0.0), 0.5).is_err());
    // Moving the line to the centre would cross the branch point of (z - 0.2i)^(-3/2).
    let sp = IntegrandSpec::ShiftedPower { s: c(1.5, 0.0), b: 0.2 };
    let r = TheoremInstance::corollary(sp, VariationMode::Single, c(0.9244275883507501, 0.0), -0.18144839588080608);
    assert!(matches!(r, Err(Error::Premise(_))));
    let r = TheoremInstance::corollary(IntegrandSpec::PowerZ { s: c(1.5, 0.0) }, VariationMode::Single, c(1.0, 0.0), -0.1);
    assert!(matches!(r, Err(Error::Premise(_))));
    // F(0) ≠ 0 at an on-contour pole.
    let i = single(TheoremId::A1, KernelSpec::Sinh4k { k: 2 }, f, 1.0);
    assert!(matches!(theorems::rhs_a1(&i), Err(Error::Premise(_))));
    let i = single(TheoremId::Gen1a, KernelSpec::SinhP { p: 2.0 }, f, 1.0);
    assert_eq!(theorems::rhs_gen1a(&i), Err(Error::OnContour));
}

#[test]
fn corollary_holds_once_the_band_is_clear() {
    let o = QuadratureOptions::default();
    let sp = IntegrandSpec::ShiftedPower { s: c(1.5, 0.0), b: 0.2 };
    for cc in [0.0, 0.1, 0.3] {
        let i = TheoremInstance::corollary(sp, VariationMode::Single, c(0.9244275883507501, 0.0), cc).unwrap();
        let got = integrate_lhs(&i, &o).unwrap();
        let want = rhs(&i, &o).unwrap();
        assert!((got.value - want).norm() <= 1e-9 * (1.0 + want.norm()) + got.abs_error_estimate, "c={cc}: {} vs {want}", got.value);
    }
    // Entire F: every abscissa in (-1/2, 1/2) is admissible.
    let f = IntegrandSpec::ExpLinear { b: c(0.7, 0.0) };
    assert!(TheoremInstance::corollary(f, VariationMode::Single, c(1.0, 0.0), -0.45).is_ok());
}

#[test]
fn cubed_refuses_variations() {
    let i = TheoremInstance::new(
        TheoremId::Cubed,
        KernelSpec::SinhCubed { q: 0.5, r: 0.0 },
        IntegrandSpec::EvenFactor { b: 1.0 },
        VariationMode::SumEven,
        c(1.0, 0.0),
    )
    .unwrap();
    assert!(matches!(theorems::rhs_cubed(&i), Err(Error::Parity(_))));
}

#[test]
fn growth_past_the_kernel_is_flagged() {
    // e^{-bz} with b < 0 grows like e^{|b|a x²}, faster than any kernel decays.
    let i = single(TheoremId::Fcosh, KernelSpec::CoshPi, IntegrandSpec::ExpLinear { b: c(-1.0, 0.0) }, 1.0);
    assert!(!i.lhs_exists());
    assert!(rhs(&i, &QuadratureOptions::default()).is_ok());
}
