//! Reference checks against 50-digit evaluations (frozen below), the
//! derivative/Wronskian identities, and the domain-error contract.

use super::*;

// 50-digit reference values, rounded to f64-printable precision.
const REF_J0: &[(f64, f64)] = &[
    (1e-8, 0.99999999999999997500),
    (1e-6, 0.99999999999975000000),
    (1e-4, 0.99999999750000000156),
    (0.01, 0.99997500015624956597),
    (0.1, 0.99750156206604003228),
    (0.5, 0.93846980724081290423),
    (1.0, 0.76519768655796655145),
    (2.0, 0.22389077914123566805),
    (2.404825557695773, -1.2011950073676861231e-16),
    (3.7, -0.39923020337119110577),
    (4.5, -0.32054250898512142436),
    (5.0, -0.17759677131433830435),
    (6.0, 0.15064525725099693166),
    (8.0, 0.17165080713755390609),
    (10.0, -0.24593576445134833520),
    (11.9, 0.025049441699589563728),
    (12.1, 0.069666773606807388498),
    (12.25, 0.10093061051051510067),
    (12.4, 0.12956102651750223966),
    (15.0, -0.014224472826780773234),
    (20.0, 0.16702466434058315473),
    (30.0, -0.086367983581040211336),
    (41.3, -0.11748683076135638084),
    (50.0, 0.055812327669251815005),
    (80.0, -0.069742165512210022840),
    (120.0, 0.071823415829156127576),
];

const REF_J1: &[(f64, f64)] = &[
    (1e-8, 4.9999999999999999375e-9),
    (1e-6, 4.9999999999993750000e-7),
    (1e-4, 0.000049999999937500000026),
    (0.01, 0.0049999375002604161241),
    (0.1, 0.049937526036241997556),
    (0.5, 0.24226845767487388638),
    (1.0, 0.44005058574493351596),
    (2.0, 0.57672480775687338720),
    (2.404825557695773, 0.51914749728946673819),
    (3.7, 0.053833987745461864015),
    (4.5, -0.23106043192337063401),
    (5.0, -0.32757913759146522204),
    (6.0, -0.27668385812756560817),
    (8.0, 0.23463634685391462438),
    (10.0, 0.043472746168861436670),
    (11.9, -0.22898324966192407078),
    (12.1, -0.21574897337692477718),
    (12.25, -0.20035719875585499474),
    (12.4, -0.18071024688267329501),
    (15.0, 0.20510403861352276115),
    (20.0, 0.066833124175850045579),
    (30.0, -0.11875106261662293652),
    (41.3, 0.038708563378825924709),
    (50.0, -0.097511828125175137661),
    (80.0, -0.056057296675712577510),
    (120.0, -0.011805211433001891117),
];

const REF_Y0: &[(f64, f64)] = &[
    (1e-8, -11.800773877179530768),
    (1e-6, -8.8690314816594437029),
    (1e-4, -5.9372890697093370167),
    (0.01, -3.0054556370836459578),
    (0.1, -1.5342386513503668441),
    (0.5, -0.44451873350670655715),
    (1.0, 0.088256964215676957983),
    (2.0, 0.51037567264974511960),
    (2.404825557695773, 0.50992438344847905349),
    (3.7, 0.10607431532035418428),
    (4.5, -0.19470500862950453327),
    (5.0, -0.30851762524903378007),
    (6.0, -0.28819468398157915407),
    (8.0, 0.22352148938756622053),
    (10.0, 0.055671167283599391424),
    (11.9, -0.22983321394337507640),
    (12.1, -0.21843838055092545768),
    (12.25, -0.20430162610894733601),
    (12.4, -0.18577661526724336566),
    (15.0, 0.20546429603891826479),
    (20.0, 0.062640596809383831162),
    (30.0, -0.11729573168666402525),
    (41.3, 0.040127775983980352116),
    (50.0, -0.098064995470077079029),
    (80.0, -0.055620339089770000037),
    (120.0, -0.012104365410016202935),
];

const REF_Y1: &[(f64, f64)] = &[
    (1e-8, -63661977.236758194903),
    (1e-6, -636619.77237217501376),
    (1e-4, -6366.1980364557616263),
    (0.01, -63.678596282060656374),
    (0.1, -6.4589510947020269877),
    (0.5, -1.4714723926702430692),
    (1.0, -0.78121282130028871655),
    (2.0, -0.10703243154093754689),
    (2.404825557695773, 0.10274668243825964843),
    (3.7, 0.41667437268380749445),
    (4.5, 0.30099732306965462342),
    (5.0, 0.14786314339122684480),
    (6.0, -0.17501034430039825064),
    (8.0, -0.15806046173124749426),
    (10.0, 0.24901542420695388392),
    (11.9, -0.034711498334030529216),
    (12.1, -0.078736931451395820909),
    (12.25, -0.10933907409580198779),
    (12.4, -0.13714437659862743187),
    (15.0, 0.021073628036873511940),
    (20.0, -0.16551161436252129586),
    (30.0, 0.084425570661747234891),
    (41.3, 0.11798117017543610153),
    (50.0, -0.056795668562014767942),
    (80.0, 0.069395913784588047296),
    (120.0, -0.071874473209149533555),
];

const REF_I0: &[(f64, f64)] = &[
    (1e-8, 1.0000000000000000250),
    (1e-6, 1.0000000000002500000),
    (1e-4, 1.0000000025000000016),
    (0.01, 1.0000250001562504340),
    (0.1, 1.0025015629340956014),
    (0.5, 1.0634833707413235193),
    (1.0, 1.2660658777520083356),
    (2.0, 2.2795853023360672674),
    (2.404825557695773, 3.0603707749964744945),
    (3.7, 8.7386175241693955850),
    (4.5, 17.481171855609276043),
    (5.0, 27.239871823604446895),
    (6.0, 67.234406976477975326),
    (8.0, 427.56411572180478518),
    (10.0, 2815.7166284662544715),
    (11.9, 17219.240276268021383),
    (12.1, 20853.117403880704561),
    (12.25, 24075.740039016829186),
    (12.4, 27798.565849335435388),
    (15.0, 339649.37329791387952),
    (20.0, 43558282.559553533272),
    (30.0, 781672297823.97748972),
    (41.3, 53780882454206801.156),
    (50.0, 2.9325537838493363267e+20),
    (80.0, 2.4751784043341704887e+33),
    (120.0, 4.7545734710170908615e+50),
];

const REF_I1: &[(f64, f64)] = &[
    (1e-8, 5.0000000000000000625e-9),
    (1e-6, 5.0000000000006250000e-7),
    (1e-4, 0.000050000000062500000026),
    (0.01, 0.0050000625002604172092),
    (0.1, 0.050062526047092692114),
    (0.5, 0.25789430539089631636),
    (1.0, 0.56515910399248502721),
    (2.0, 1.5906368546373290634),
    (2.404825557695773, 2.3082387433767708856),
    (3.7, 7.4357457965353357305),
    (4.5, 15.389222753735923893),
    (5.0, 24.335642142450527199),
    (6.0, 61.341936777640237861),
    (8.0, 399.87313678256009822),
    (10.0, 2670.9883037012546543),
    (11.9, 16479.060192397497966),
    (12.1, 19971.911047960133751),
    (12.25, 23071.110431178816849),
    (12.4, 26652.955397394050438),
    (15.0, 328124.92197020639673),
    (20.0, 42454973.385127770181),
    (30.0, 768532038938.95699949),
    (41.3, 53125741662263402.198),
    (50.0, 2.9030785901035567968e+20),
    (80.0, 2.4596595795675408630e+33),
    (120.0, 4.7347211273881961246e+50),
];

const REF_K0: &[(f64, f64)] = &[
    (1e-8, 18.536612259610778409),
    (1e-6, 13.931442073626419413),
    (1e-4, 9.3262719134502749209),
    (0.01, 4.7212447301610949651),
    (0.1, 2.4270690247020166125),
    (0.5, 0.92441907122766586178),
    (1.0, 0.42102443824070833334),
    (2.0, 0.11389387274953343565),
    (2.404825557695773, 0.069814543558869258762),
    (3.7, 0.015630659921626661612),
    (4.5, 0.0063998572432339750456),
    (5.0, 0.0036910983340425942747),
    (6.0, 0.0012439943280131230852),
    (8.0, 0.00014647070522281538710),
    (10.0, 0.000017780062316167651811),
    (11.9, 2.4422886371722719055e-6),
    (12.1, 1.9833013543985353367e-6),
    (12.25, 1.6967587538963423543e-6),
    (12.4, 1.4517200003131224080e-6),
    (15.0, 9.8195364823964345410e-8),
    (20.0, 5.7412378153365242927e-10),
    (30.0, 2.1324774964630563712e-14),
    (41.3, 2.2512508302636773579e-19),
    (50.0, 3.4101677497894955139e-23),
    (80.0, 2.5251198425054718152e-36),
    (120.0, 8.7635680998255777221e-54),
];

const REF_K1: &[(f64, f64)] = &[
    (1e-8, 99999999.999999904817),
    (1e-6, 999999.99999278427896),
    (1e-4, 9999.9995086864049573),
    (0.01, 99.973894118296247643),
    (0.1, 9.8538447808706061348),
    (0.5, 1.6564411200033008937),
    (1.0, 0.60190723019723457474),
    (2.0, 0.13986588181652242728),
    (2.404825557695773, 0.083219309602173897096),
    (3.7, 0.017628035102223266688),
    (4.5, 0.0070780949089680896929),
    (5.0, 0.0040446134454521642084),
    (6.0, 0.0013439197177355090057),
    (8.0, 0.00015536921180500113392),
    (10.0, 0.000018648773453825584597),
    (11.9, 2.5429107953476979883e-6),
    (12.1, 2.0636871233371845491e-6),
    (12.25, 1.7647035732301261302e-6),
    (12.4, 1.5091617711449307618e-6),
    (15.0, 1.0141729369762091810e-7),
    (20.0, 5.8830579695570381777e-10),
    (30.0, 2.1677320018915494249e-14),
    (41.3, 2.2783445527156502606e-19),
    (50.0, 3.4441022267175556126e-23),
    (80.0, 2.5408531275211700109e-36),
    (120.0, 8.8000075200927613541e-54),
];

type SpecFn = fn(f64) -> Result<SpecFunResult, SpecFunError>;

fn check_table(name: &str, f: SpecFn, table: &[(f64, f64)], rel_tol: f64, abs_tol: f64) {
    for &(x, reference) in table {
        let r = f(x).unwrap_or_else(|e| panic!("{name}({x}) errored: {e}"));
        let err = (r.value - reference).abs();
        let allowed = rel_tol * reference.abs() + abs_tol;
        assert!(
            err <= allowed,
            "{name}({x}) = {} vs ref {reference}, err {err:e} > {allowed:e}",
            r.value
        );
        assert!(
            err <= r.est_error,
            "{name}({x}): actual error {err:e} exceeds est_error {:e}",
            r.est_error
        );
    }
}

#[test]
fn values_match_references() {
    // J/Y are amplitude-bounded: absolute floor; I/K span decades: relative
    check_table("j0", bessel_j0, REF_J0, 1e-11, 1e-11);
    check_table("j1", bessel_j1, REF_J1, 1e-11, 1e-11);
    check_table("y0", bessel_y0, REF_Y0, 1e-11, 1e-11);
    check_table("y1", bessel_y1, REF_Y1, 1e-11, 1e-11);
    check_table("i0", bessel_i0, REF_I0, 1e-11, 1e-13);
    check_table("i1", bessel_i1, REF_I1, 1e-11, 1e-13);
    check_table("k0", bessel_k0, REF_K0, 1e-11, 1e-13);
    check_table("k1", bessel_k1, REF_K1, 1e-11, 1e-13);
}

#[test]
fn scaled_variants_match_unscaled() {
    for &x in &[0.5, 2.0, 4.4, 4.6, 10.0, 14.9, 15.1, 24.9, 25.1, 40.0] {
        let i0 = bessel_i0(x).unwrap().value;
        let i0e = bessel_i0_scaled(x).unwrap().value;
        assert!((i0e - (-x).exp() * i0).abs() <= 1e-13 * i0e.abs());
        let i1 = bessel_i1(x).unwrap().value;
        let i1e = bessel_i1_scaled(x).unwrap().value;
        assert!((i1e - (-x).exp() * i1).abs() <= 1e-13 * i1e.abs());
        let k0 = bessel_k0(x).unwrap().value;
        let k0e = bessel_k0_scaled(x).unwrap().value;
        assert!((k0e - x.exp() * k0).abs() <= 1e-12 * k0e.abs());
        let k1 = bessel_k1(x).unwrap().value;
        let k1e = bessel_k1_scaled(x).unwrap().value;
        assert!((k1e - x.exp() * k1).abs() <= 1e-12 * k1e.abs());
    }
    // scaled K stays representable far beyond the plain functions
    let k0e = bessel_k0_scaled(5000.0).unwrap().value;
    assert!(k0e > 0.0 && k0e.is_finite());
}

#[test]
fn j0_at_origin_is_one() {
    assert_eq!(bessel_j0(0.0).unwrap().value, 1.0);
    assert_eq!(bessel_j1(0.0).unwrap().value, 0.0);
    assert_eq!(bessel_i0(0.0).unwrap().value, 1.0);
    assert_eq!(bessel_i1(0.0).unwrap().value, 0.0);
}

#[test]
fn j0_first_zero_residual() {
    // first zero of J0, frozen from the independent series oracle
    let x0 = 2.404825557695773;
    assert!(bessel_j0(x0).unwrap().value.abs() < 1e-10);
}

#[test]
fn k0_at_one_matches_quadrature_oracle() {
    // independent oracle: K0(1) = int_0^inf exp(-cosh t) dt by fixed-grid
    // Simpson on [0, 40] (integrand underflows far before the cutoff)
    let n = 40_000usize;
    let (a, b) = (0.0f64, 40.0f64);
    let h = (b - a) / n as f64;
    let f = |t: f64| (-t.cosh()).exp();
    let mut acc = f(a) + f(b);
    for i in 1..n {
        let w = if i % 2 == 1 { 4.0 } else { 2.0 };
        acc += w * f(a + i as f64 * h);
    }
    let oracle = acc * h / 3.0;
    let k0 = bessel_k0(1.0).unwrap().value;
    assert!(
        (k0 - oracle).abs() < 1e-10,
        "k0(1) = {k0} vs quadrature oracle {oracle}"
    );
}

#[test]
fn domain_errors() {
    assert!(matches!(
        bessel_j0(-0.5),
        Err(SpecFunError::Domain { .. })
    ));
    assert!(matches!(
        bessel_j1(f64::NAN),
        Err(SpecFunError::Domain { .. })
    ));
    assert!(matches!(
        bessel_i0(f64::INFINITY),
        Err(SpecFunError::Domain { .. })
    ));
    assert!(matches!(bessel_y0(0.0), Err(SpecFunError::Domain { .. })));
    assert!(matches!(bessel_y1(-1.0), Err(SpecFunError::Domain { .. })));
    assert!(matches!(bessel_k0(0.0), Err(SpecFunError::Domain { .. })));
    assert!(matches!(bessel_k1(5e-9), Err(SpecFunError::Domain { .. })));
    assert!(matches!(bessel_y0(5e-9), Err(SpecFunError::Domain { .. })));
    // finite just above the singular cutoff
    assert!(bessel_y0(1e-8).unwrap().value.is_finite());
    assert!(bessel_k0(1e-8).unwrap().value.is_finite());
}

#[test]
fn i_overflow_reported() {
    assert!(matches!(
        bessel_i0(800.0),
        Err(SpecFunError::Overflow { .. })
    ));
    assert!(matches!(
        bessel_i1(800.0),
        Err(SpecFunError::Overflow { .. })
    ));
    // still finite close to the boundary
    assert!(bessel_i0(700.0).unwrap().value.is_finite());
    assert!(bessel_i0_scaled(800.0).unwrap().value.is_finite());
}

#[test]
fn est_error_bound_invariant() {
    // est_error <= 1e-10 * max(1, |value|) across [1e-8, 50]
    let mut grid: Vec<f64> = (0..=80)
        .map(|i| 1e-8 * 10f64.powf(8.0 * i as f64 / 80.0))
        .collect();
    grid.extend((1..=490).map(|i| 1.0 + 0.1 * i as f64));
    for x in grid {
        for f in [
            bessel_j0 as SpecFn,
            bessel_j1,
            bessel_y0,
            bessel_y1,
            bessel_i0,
            bessel_i1,
            bessel_k0,
            bessel_k1,
        ] {
            let r = f(x).unwrap();
            assert!(r.est_error >= 0.0);
            assert!(
                r.est_error <= 1e-10 * r.value.abs().max(1.0),
                "est_error {:e} too large at x = {x} (value {:e})",
                r.est_error,
                r.value
            );
        }
    }
}

#[test]
fn wronskian_identities_sampled() {
    // J0(-Y1) - (-J1)Y0 = 2/(pi x) and I0(-K1) - I1 K0 = -1/x
    let n = 300;
    for i in 0..=n {
        let x = 0.1 + (50.0 - 0.1) * i as f64 / n as f64;
        let j0 = bessel_j0(x).unwrap().value;
        let j1 = bessel_j1(x).unwrap().value;
        let y0 = bessel_y0(x).unwrap().value;
        let y1 = bessel_y1(x).unwrap().value;
        let w = j0 * (-y1) - (-j1) * y0;
        let expected = 2.0 / (std::f64::consts::PI * x);
        assert!(
            ((w - expected) / expected).abs() < 1e-9,
            "ordinary Wronskian off at x = {x}: rel {}",
            ((w - expected) / expected).abs()
        );

        let i0 = bessel_i0(x).unwrap().value;
        let i1 = bessel_i1(x).unwrap().value;
        let k0 = bessel_k0(x).unwrap().value;
        let k1 = bessel_k1(x).unwrap().value;
        let wm = i0 * (-k1) - i1 * k0;
        let expected_m = -1.0 / x;
        assert!(
            ((wm - expected_m) / expected_m).abs() < 1e-9,
            "modified Wronskian off at x = {x}: rel {}",
            ((wm - expected_m) / expected_m).abs()
        );
    }
}

#[test]
fn ode_residuals_cross_checked_with_finite_differences() {
    // second derivative from the defining ODE, f'' = -f'/x -+ f (first
    // derivative via the order-1 identities), versus a Richardson-extrapolated
    // central difference. A plain 3-point stencil with a 1e-4 step sits below
    // its own f64 rounding floor (~2e-7 |f|) for any implementation, so the
    // cross-check uses the noise-robust 5-point form at h = 0.05, which
    // resolves the 1e-7 level with margin. The step shrinks near the origin
    // where the Y/K derivatives grow like 1/x^k.
    let xs = [
        0.5, 1.0, 2.0, 3.7, 4.5, 5.0, 6.0, 8.0, 10.0, 11.9, 12.1, 12.25, 12.4, 15.0, 20.0, 30.0,
        41.3, 50.0,
    ];
    let cases: [(&str, SpecFn, SpecFn, f64); 4] = [
        ("j0", bessel_j0, bessel_j1, 1.0),
        ("y0", bessel_y0, bessel_y1, 1.0),
        ("i0", bessel_i0, bessel_i1, -1.0),
        ("k0", bessel_k0, bessel_k1, -1.0),
    ];
    for (name, f, f_deriv_mag, ode_sign) in cases {
        for &x in &xs {
            let v = f(x).unwrap().value;
            // order-1 identity: J0' = -J1, Y0' = -Y1, I0' = I1, K0' = -K1
            let d1 = match name {
                "i0" => f_deriv_mag(x).unwrap().value,
                _ => -f_deriv_mag(x).unwrap().value,
            };
            let d2_ode = -d1 / x - ode_sign * v;
            let h = (x / 50.0).min(0.05);
            let stencil = |hh: f64| -> f64 {
                (f(x + hh).unwrap().value - 2.0 * v + f(x - hh).unwrap().value) / (hh * hh)
            };
            let d2_fd = (4.0 * stencil(0.5 * h) - stencil(h)) / 3.0;
            let scale = v.abs().max(d2_ode.abs()).max(1.0);
            assert!(
                (d2_ode - d2_fd).abs() <= 1e-7 * scale,
                "{name} ODE residual at x = {x}: ode {d2_ode:e} fd {d2_fd:e}"
            );
        }
    }
}

#[test]
fn k0_asymptotic_decay() {
    // K0(x) e^x sqrt(x) approaches sqrt(pi/2) like sqrt(pi/2)(1 - 1/(8x) + ...);
    // check agreement with the 4-term truncation to 1e-6 for x >= 30 and that
    // the deviation from the plain limit has the predicted 1/(8x) size
    let sqrt_pi_half = (std::f64::consts::PI / 2.0).sqrt();
    for &x in &[30.0, 40.0, 60.0, 100.0, 200.0, 400.0, 600.0] {
        let lhs = bessel_k0_scaled(x).unwrap().value * x.sqrt();
        let series = sqrt_pi_half
            * (1.0 - 1.0 / (8.0 * x) + 9.0 / (128.0 * x * x)
                - 225.0 / (3072.0 * x * x * x));
        assert!(
            (lhs - series).abs() < 1e-6,
            "K0 decay at x = {x}: {lhs} vs {series}"
        );
        let deviation = (lhs - sqrt_pi_half).abs();
        assert!(deviation <= sqrt_pi_half / (8.0 * x) * 1.05 + 1e-9);
    }
}
